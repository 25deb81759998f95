//! Flat binary container for fields (magic `AFH1`) and CSV slice export.
//!
//! Layout, all little-endian 64-bit words after the 4-byte magic:
//! `N`, `m`, then `N` point counts, `N` center coordinates, `N` side
//! lengths, then `m * prod(n)` data values, component-major and row-major
//! within each component.

use std::io::{Read, Write};

use crate::error::{AfhError, Result};
use crate::fields::field::PeriodicField;
use crate::fields::grid::Grid;

pub const MAGIC: &[u8; 4] = b"AFH1";

pub fn write_field<W: Write>(w: &mut W, field: &PeriodicField) -> Result<()> {
    let grid = field.grid();
    w.write_all(MAGIC)?;
    w.write_all(&(grid.dim() as u64).to_le_bytes())?;
    w.write_all(&(field.components() as u64).to_le_bytes())?;
    for &n in grid.points() {
        w.write_all(&(n as u64).to_le_bytes())?;
    }
    for &c in grid.center() {
        w.write_all(&c.to_le_bytes())?;
    }
    for &s in grid.side() {
        w.write_all(&s.to_le_bytes())?;
    }
    for &v in field.data() {
        w.write_all(&v.to_le_bytes())?;
    }
    Ok(())
}

fn read_u64<R: Read>(r: &mut R) -> Result<u64> {
    let mut buf = [0u8; 8];
    r.read_exact(&mut buf)?;
    Ok(u64::from_le_bytes(buf))
}

fn read_f64<R: Read>(r: &mut R) -> Result<f64> {
    let mut buf = [0u8; 8];
    r.read_exact(&mut buf)?;
    Ok(f64::from_le_bytes(buf))
}

pub fn read_field<R: Read>(r: &mut R) -> Result<PeriodicField> {
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Err(AfhError::Config("bad magic in field container".into()));
    }
    let dim = read_u64(r)? as usize;
    let m = read_u64(r)? as usize;
    let mut n = Vec::with_capacity(dim);
    for _ in 0..dim {
        n.push(read_u64(r)? as usize);
    }
    let mut center = Vec::with_capacity(dim);
    for _ in 0..dim {
        center.push(read_f64(r)?);
    }
    let mut side = Vec::with_capacity(dim);
    for _ in 0..dim {
        side.push(read_f64(r)?);
    }
    let grid = Grid::rect(n, center, side)?;
    let total = m * grid.len();
    let mut data = Vec::with_capacity(total);
    for _ in 0..total {
        data.push(read_f64(r)?);
    }
    PeriodicField::from_data(grid, m, data)
}

/// CSV export of a 2D field (or a 2D slice of the first two axes):
/// columns `x0,x1,component_0,...`.
pub fn write_csv_slice<W: Write>(w: &mut W, field: &PeriodicField) -> Result<()> {
    let grid = field.grid();
    if grid.dim() < 2 {
        return Err(AfhError::Unsupported("CSV export needs dim >= 2".into()));
    }
    let mut header = String::from("x0,x1");
    for c in 0..field.components() {
        header.push_str(&format!(",u{c}"));
    }
    writeln!(w, "{header}")?;
    let dim = grid.dim();
    let mut idx = vec![0usize; dim];
    let mut x = vec![0.0; dim];
    let mut val = vec![0.0; field.components()];
    for i0 in 0..grid.points()[0] {
        for i1 in 0..grid.points()[1] {
            idx.iter_mut().for_each(|v| *v = 0);
            idx[0] = i0;
            idx[1] = i1;
            let flat = grid.flat_index(&idx);
            grid.point(&idx, &mut x);
            field.value_at(flat, &mut val);
            let mut line = format!("{},{}", x[0], x[1]);
            for v in &val {
                line.push_str(&format!(",{v}"));
            }
            writeln!(w, "{line}")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn container_round_trip() {
        let g = Grid::rect(vec![4, 8], vec![0.5, -1.0], vec![1.0, 2.0]).unwrap();
        let u = PeriodicField::from_fn(g, 3, |x, v| {
            v[0] = x[0];
            v[1] = x[1] * x[1];
            v[2] = x[0] * x[1];
        });
        let mut buf = Vec::new();
        write_field(&mut buf, &u).unwrap();
        let back = read_field(&mut buf.as_slice()).unwrap();
        assert_eq!(back, u);
    }

    #[test]
    fn rejects_bad_magic() {
        let buf = b"NOPE____________";
        assert!(read_field(&mut buf.as_slice()).is_err());
    }
}
