//! Discrete periodic fields on uniform grids: storage, FFT, norms,
//! quadrature, cutoff masking, gluing, and the binary container format.

pub mod cutoff;
pub mod fft;
pub mod field;
pub mod grid;
pub mod io;

pub use cutoff::{
    mask_compact, recenter_compact, smoothstep_cm, support_window, support_window_axes,
    CutoffProfile,
};
pub use field::PeriodicField;
pub use grid::Grid;
