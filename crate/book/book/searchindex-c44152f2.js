window.search = Object.assign(window.search, JSON.parse('{"doc_urls":["introduction.html#introduction","operators.html#differential-constraints","operators.html#building-operators","operators.html#projectors","operators.html#whole-field-projection","cell-problems.html#cell-problems","cell-problems.html#solving","cell-problems.html#how-the-solver-works","cell-problems.html#integrands","homogenization.html#the-homogenized-integrand","homogenization.html#consistency-checks","homogenization.html#tables","quasiconvexity.html#quasiconvexity-and-envelopes","quasiconvexity.html#jensen-tests","quasiconvexity.html#envelopes","stochastic.html#random-media","stochastic.html#the-process","stochastic.html#covariance","stochastic.html#subadditivity","stochastic.html#ergodic-averaging","cli.html#the-command-line","cli.html#configuration","cli.html#tasks","cli.html#outputs","cli.html#exit-codes"],"index":{"documentStore":{"docInfo":{"0":{"body":240,"breadcrumbs":2,"title":1},"1":{"body":66,"breadcrumbs":4,"title":2},"10":{"body":179,"breadcrumbs":4,"title":2},"11":{"body":40,"breadcrumbs":3,"title":1},"12":{"body":37,"breadcrumbs":4,"title":2},"13":{"body":78,"breadcrumbs":4,"title":2},"14":{"body":155,"breadcrumbs":3,"title":1},"15":{"body":48,"breadcrumbs":4,"title":2},"16":{"body":93,"breadcrumbs":3,"title":1},"17":{"body":91,"breadcrumbs":3,"title":1},"18":{"body":121,"breadcrumbs":3,"title":1},"19":{"body":112,"breadcrumbs":4,"title":2},"2":{"body":105,"breadcrumbs":4,"title":2},"20":{"body":41,"breadcrumbs":4,"title":2},"21":{"body":75,"breadcrumbs":3,"title":1},"22":{"body":94,"breadcrumbs":3,"title":1},"23":{"body":67,"breadcrumbs":3,"title":1},"24":{"body":39,"breadcrumbs":4,"title":2},"3":{"body":69,"breadcrumbs":3,"title":1},"4":{"body":89,"breadcrumbs":5,"title":3},"5":{"body":103,"breadcrumbs":4,"title":2},"6":{"body":102,"breadcrumbs":3,"title":1},"7":{"body":176,"breadcrumbs":4,"title":2},"8":{"body":95,"breadcrumbs":3,"title":1},"9":{"body":204,"breadcrumbs":4,"title":2}},"docs":{"0":{"body":"afh computes homogenized integrands: the effective energy densities\\nthat emerge when an integral functional F(u) = ∫ f(x/ε, u(x)) dx with a rapidly oscillating density f is minimized over fields u\\nsubject to a linear differential constraint A u = 0. As ε → 0 the\\nfunctionals Γ-converge to a limit of the same form with a homogeneous\\ndensity f_hom, and afh estimates f_hom numerically. The constraint A is a first-order, constant-coefficient operator of constant rank: the classical example is A = div, for which the\\nadmissible fields are divergence-free and f_hom is the effective\\nconductivity/permeability density of a composite. Other built-ins are the\\ntwo- and three-dimensional curl (where A-free fields are gradients and\\none recovers classical elasticity-type relaxation), and arbitrary\\nuser-supplied operators are accepted after an automatic constant-rank\\nprobe. Everything reduces to cell problems: minimize the averaged energy\\nover mean-zero A-free fields on a cube, with one of three side\\nconditions — M — periodic fields on the unit cell, M_c — fields supported compactly inside the cube, M^η_c — compact support relaxed by a budgeted divergence excess η. Their values per unit volume converge, as the cube grows, to the same\\nlimit f_hom(ξ); the three variants bracket it from both sides and give\\nthe error control used throughout the library. A quick taste — effective transverse conductivity of a two-phase\\nlaminate, which is the harmonic mean h({1,4}) = 1.6 of the phases: #![allow(unused)] fn main() {\\nuse afh::cellsolver::{solve_periodic, SolveOptions};\\nuse afh::fields::Grid;\\nuse afh::integrand::IntegrandSpec;\\nuse afh::operator::OperatorSpec; let op = OperatorSpec::divergence(2, 2.0).unwrap();\\nlet f = IntegrandSpec::laminate(1.0, 4.0, 0, 1.0);\\nlet grid = Grid::unit_cube(2, 16).unwrap();\\nlet opts = SolveOptions { restarts: 1, ..SolveOptions::default() }; let sol = solve_periodic(&op, &f, &[0.0, 1.0], &grid, &opts).unwrap();\\nassert!((sol.normalized - 1.6).abs() < 1e-2); } The remaining chapters walk through the pieces: the operator machinery\\nand its Fourier-side projections, the three cell problems and the solver,\\nthe growing-cube limits and consistency checks behind f_hom, the\\nquasiconvexity tests and envelopes, the stochastic (random-media) theory,\\nand the afh command-line binary that drives all of it from JSON\\nconfiguration files. All code listings in this guide compile and run as part of the test\\nsuite, so they track the API exactly.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"A constraint operator acts on fields u : R^N → R^d as A u = Σ_j A^(j) ∂_j u, A^(j) ∈ R^{l×d}, one matrix per spatial direction. On the Fourier side this becomes\\nmultiplication by the symbol A(w) = Σ_j w_j A^(j), and the\\nconstraint A u = 0 says that each Fourier coefficient û(w) lies in ker A(w). The operator is admissible when it has constant rank: rank A(w)\\nis the same for every w ≠ 0. This is exactly the condition under which\\nthe family of kernel projectors P(w) = I − A(w)⁺ A(w) ( ⁺ the Moore–Penrose pseudoinverse) varies well enough with w for\\nthe homogenization theory — and the numerics — to work.","breadcrumbs":"Differential constraints » Differential constraints","id":"1","title":"Differential constraints"},"10":{"body":"Three independent identities guard the pipeline. Scaling. The change of variables x → x/ε maps the cell problem for f(x/ε) on Q_ρ(x) to the one for f on Q_{ρ/ε}(x/ε), exactly, when\\nboth land on the same sample points. scaling_identity_check verifies\\nthe identity to near machine precision for integer 1/ε and refuses\\nincommensurate scales: #![allow(unused)] fn main() {\\nuse afh::cellsolver::SolveOptions;\\nuse afh::homog::scaling_identity_check;\\nuse afh::integrand::IntegrandSpec;\\nuse afh::operator::OperatorSpec; let op = OperatorSpec::divergence(2, 2.0).unwrap();\\nlet f = IntegrandSpec::laminate(1.0, 4.0, 0, 1.0);\\nlet opts = SolveOptions { restarts: 1, ..SolveOptions::default() }; let rep = scaling_identity_check( &op, &f, &[0.0, 1.0], 1, 1.0, &[0.0, 0.0], &[0.5], 16, &opts,\\n).unwrap();\\nassert!(rep.pass); } Reconstruction. At a continuity point x of the medium, shrinking\\ncubes recover the integrand itself: M(f, ξ, Q_ρ(x))/ρ^N → f(x, ξ),\\nand likewise for M_c. small_cube_reconstruction runs both families\\ndown a ρ schedule and reports the final relative errors, warning when x sits near a coefficient discontinuity (where the limit need not be f(x, ξ)). Γ-inequality. Oscillating the medium at frequency k and solving\\nthe periodic problem gives values M(f(k·), ξ, Q)/|Q| that approach f_hom(ξ) from the corrector side. gamma_inequality_check confirms\\nthe final gap against a known limit — for a homogeneous medium every k gives the same number: #![allow(unused)] fn main() {\\nuse afh::cellsolver::SolveOptions;\\nuse afh::fields::Grid;\\nuse afh::homog::gamma_inequality_check;\\nuse afh::integrand::IntegrandSpec;\\nuse afh::operator::OperatorSpec; let op = OperatorSpec::divergence(2, 2.0).unwrap();\\nlet f = IntegrandSpec::quadratic(2.0);\\nlet grid = Grid::unit_cube(2, 16).unwrap();\\nlet opts = SolveOptions { restarts: 1, ..SolveOptions::default() }; let rep = gamma_inequality_check(&op, &f, &[1.0, 0.0], &grid, &[1, 2], 2.0, 1e-6, &opts).unwrap();\\nassert!(rep.pass);\\nassert!(rep.final_gap.abs() <= 1e-6); }","breadcrumbs":"The homogenized integrand » Consistency checks","id":"10","title":"Consistency checks"},"11":{"body":"When f_hom is needed as a function rather than at a point, tabulate_fhom samples it on a regular lattice of gradients and returns\\nan FhomTable with multilinear interpolation. Because each lattice\\nvalue is an independent minimization, the table checks its own sanity: f_hom inherits the p-Lipschitz modulus of f, so neighboring\\nentries may not differ by more than the corresponding bound\\n( lipschitz_pass). Out-of-range evaluation returns None rather than\\nextrapolating.","breadcrumbs":"The homogenized integrand » Tables","id":"11","title":"Tables"},"12":{"body":"For constrained functionals the right convexity notion is A-quasiconvexity: g is A-quasiconvex when g(ξ) ≤ ∫_Q g(ξ + u(x)) dx for every periodic, mean-zero, A-free test field u — Jensen’s\\ninequality along constrained oscillations. Homogenized integrands are\\nalways A-quasiconvex, and for a homogeneous medium homogenization\\ncomputes exactly the A-quasiconvex envelope of the density.","breadcrumbs":"Quasiconvexity and envelopes » Quasiconvexity and envelopes","id":"12","title":"Quasiconvexity and envelopes"},"13":{"body":"aqc_test samples random periodic A-free fields (spectrally\\nprojected, seeded, reproducible) and checks the inequality for each.\\nConvex integrands can never violate it: #![allow(unused)] fn main() {\\nuse afh::fields::Grid;\\nuse afh::homog::aqc_test;\\nuse afh::integrand::IntegrandSpec;\\nuse afh::operator::OperatorSpec; let op = OperatorSpec::divergence(2, 2.0).unwrap();\\nlet g = IntegrandSpec::quadratic(1.0);\\nlet grid = Grid::unit_cube(2, 8).unwrap(); let rep = aqc_test(&op, &g, &[0.7, -0.3], 200, &grid, 7).unwrap();\\nassert_eq!(rep.violations, 0);\\nassert!(rep.worst_gap >= -1e-9); } A non-quasiconvex density fails the test, and the report then carries a witness: the concrete oscillation whose average energy undercuts g(ξ). Witnesses make negative results checkable — you can re-evaluate\\nthe stored field against the density and see the gap directly.","breadcrumbs":"Quasiconvexity and envelopes » Jensen tests","id":"13","title":"Jensen tests"},"14":{"body":"aqc_envelope estimates the A-quasiconvex envelope Q_A g(ξ) by\\nminimizing the oscillation energy over the same class of test fields\\n(this is the homogeneous-medium cell problem in disguise). The classical\\ndemonstration is a double-well density g(z) = |z|²|z − ζ|² + δ|z|²:\\nat ξ = 0 pure phases are expensive, but a laminate oscillating\\nbetween the wells nearly vanishes, so the envelope drops far below g(0): #![allow(unused)] fn main() {\\nuse afh::cellsolver::SolveOptions;\\nuse afh::fields::Grid;\\nuse afh::homog::{aqc_envelope, convex_envelope};\\nuse afh::integrand::IntegrandSpec;\\nuse afh::operator::OperatorSpec; let op = OperatorSpec::divergence(2, 2.0).unwrap();\\nlet g = IntegrandSpec::double_well(vec![0.0, 1.0], 0.01);\\nlet grid = Grid::unit_cube(2, 16).unwrap();\\nlet opts = SolveOptions { restarts: 1, ..SolveOptions::default() }; let xi = [0.0, 0.0];\\nlet g0 = g.eval(&[0.0, 0.0], &xi).unwrap();\\nlet env = aqc_envelope(&op, &g, &xi, &grid, &opts).unwrap(); // strict relaxation at the unstable point\\nassert!(env < 0.9 * g0); // sandwich: convex envelope <= A-quasiconvex envelope <= g\\nlet cvx = convex_envelope(&g, &xi, 2, 3.0, 41).unwrap();\\nassert!(cvx <= env + 1e-6);\\nassert!(env <= g0 + 1e-9); } convex_envelope computes the ordinary convex envelope by a double\\nLegendre transform on a gradient lattice; it is the universal lower\\nbound in the sandwich above, and for a convex density it reproduces the\\ndensity itself (up to lattice resolution). The three-way comparison —\\nconvex envelope, A-quasiconvex envelope, original density — is the\\nstandard sanity frame for relaxation experiments: any violation of the\\nordering indicates a solver or discretization problem, not physics.","breadcrumbs":"Quasiconvexity and envelopes » Envelopes","id":"14","title":"Envelopes"},"15":{"body":"For random media the homogenized density is defined through a subadditive ergodic limit: the relaxed cell value on a growing box,\\nper unit volume, converges for almost every realization ω, and when\\nthe medium is ergodic the limit is deterministic. The stochastic\\nmodule implements the process Φ(ω, R) = relaxed cell minimum of f(ω, ·) on the box R for seeded random integrands and exposes the three structural\\nproperties the theory rests on: shift covariance, subadditivity, and\\naveraging across realizations.","breadcrumbs":"Random media » Random media","id":"15","title":"Random media"},"16":{"body":"Realizations are addressed by seed; the same seed always reproduces the\\nsame medium and the same value, bit for bit: #![allow(unused)] fn main() {\\nuse afh::cellsolver::SolveOptions;\\nuse afh::integrand::IntegrandSpec;\\nuse afh::operator::OperatorSpec;\\nuse afh::stochastic::sample_process; let op = OperatorSpec::divergence(2, 2.0).unwrap();\\nlet f = IntegrandSpec::random_checkerboard(0, 2, vec![1.0, 4.0], vec![0.5, 0.5]);\\nlet opts = SolveOptions { restarts: 0, ..SolveOptions::default() }; // integer-cornered box [0,2]^2, eta = 0.25, 8 grid points per unit length\\nlet a = sample_process(&op, &f, 3, &[0.0, 1.0], 0.25, &[0, 0], &[2, 2], 8, &opts).unwrap();\\nlet b = sample_process(&op, &f, 3, &[0.0, 1.0], 0.25, &[0, 0], &[2, 2], 8, &opts).unwrap();\\nassert_eq!(a.value, b.value); } Boxes live on the integer lattice and grids must land on power-of-two\\nFFT sizes; incommensurate requests are rejected rather than silently\\nresampled.","breadcrumbs":"Random media » The process","id":"16","title":"The process"},"17":{"body":"Shift covariance says that solving on a shifted box over realization ω\\nequals solving on the original box over the shifted realization: Φ(ω, R + z) = Φ(τ_z ω, R). Because the random checkerboard is sampled\\nfrom an explicit lattice field, the library can evaluate both sides exactly — same medium values, same grid alignment — so the identity\\nholds to floating-point accuracy, not just statistically: #![allow(unused)] fn main() {\\nuse afh::cellsolver::SolveOptions;\\nuse afh::integrand::IntegrandSpec;\\nuse afh::operator::OperatorSpec;\\nuse afh::stochastic::covariance_test; let op = OperatorSpec::divergence(2, 2.0).unwrap();\\nlet f = IntegrandSpec::random_checkerboard(0, 2, vec![1.0, 4.0], vec![0.5, 0.5]);\\nlet opts = SolveOptions { restarts: 0, ..SolveOptions::default() }; let rep = covariance_test( &op, &f, 17, &[0.0, 1.0], 0.25, &[0, 0], &[2, 2], &[vec![1, 0], vec![-3, 2]], 8, &opts,\\n).unwrap();\\nassert!(rep.pass);\\nassert!(rep.max_rel_diff <= 1e-10); }","breadcrumbs":"Random media » Covariance","id":"17","title":"Covariance"},"18":{"body":"Splitting a box into rectangles and gluing the sub-minimizers gives an\\nadmissible competitor for the whole box, so Φ(ω, R) ≤ Σ_i Φ(ω, R_i). subadditivity_test validates the partition (no holes, no overlaps,\\ninside the box), solves each part with windows fixed in absolute\\ncoordinates — so a sub-box sees exactly the same medium and cutoff\\ngeometry it will have inside the big box — glues the minimizers onto the\\nbig grid index-by-index, and descends from the glued field. Disjoint\\nsupports make the glued energy exactly the sum of the parts: #![allow(unused)] fn main() {\\nuse afh::cellsolver::SolveOptions;\\nuse afh::integrand::IntegrandSpec;\\nuse afh::operator::OperatorSpec;\\nuse afh::stochastic::subadditivity_test; let op = OperatorSpec::divergence(2, 2.0).unwrap();\\nlet f = IntegrandSpec::random_checkerboard(0, 2, vec![1.0, 4.0], vec![0.5, 0.5]);\\nlet opts = SolveOptions { restarts: 0, ..SolveOptions::default() }; let quarters = vec![ (vec![0, 0], vec![1, 1]), (vec![1, 0], vec![2, 1]), (vec![0, 1], vec![1, 2]), (vec![1, 1], vec![2, 2]),\\n];\\nlet rep = subadditivity_test( &op, &f, 5, &[0.0, 1.0], 0.25, &[0, 0], &[2, 2], &quarters, 8, &opts,\\n).unwrap();\\nassert!(rep.subadditive);\\nassert!(rep.additivity_rel_err <= 1e-12); }","breadcrumbs":"Random media » Subadditivity","id":"18","title":"Subadditivity"},"19":{"body":"ergodic_limit runs growing cubes over a panel of seeds, extrapolates\\neach realization’s series, and summarizes the across-seed statistics:\\nthe per-radius standard deviation (which should shrink as cubes grow,\\nsince each cube averages more of the medium), the mean, and an ergodic_flag that fires only when the seeds agree. The converse matters just as much. A frozen mixture draws one\\ncoefficient per realization and keeps it constant in space — a\\nstationary but non-ergodic medium. Each seed then homogenizes to its\\nown limit ( a |ξ|² exactly), the across-seed spread never decays, and\\nthe flag stays off: #![allow(unused)] fn main() {\\nuse afh::cellsolver::SolveOptions;\\nuse afh::integrand::IntegrandSpec;\\nuse afh::operator::OperatorSpec;\\nuse afh::stochastic::ergodic_limit; let op = OperatorSpec::divergence(2, 2.0).unwrap();\\nlet frozen = IntegrandSpec::frozen_mixture(0, 2, vec![1.0, 4.0], vec![0.5, 0.5]);\\nlet opts = SolveOptions { restarts: 0, ..SolveOptions::default() }; let seeds: Vec<u64> = (0..8).collect();\\nlet est = ergodic_limit( &op, &frozen, &[0.0, 1.0], 4, &[1.0, 2.0], &seeds, 8, &opts,\\n).unwrap();\\nassert!(!est.ergodic_flag);\\nfor &l in &est.per_omega_limits { assert!((l - 1.0).abs() < 5e-2 || (l - 4.0).abs() < 5e-2);\\n} }","breadcrumbs":"Random media » Ergodic averaging","id":"19","title":"Ergodic averaging"},"2":{"body":"OperatorSpec carries the matrices together with the growth exponent p of the energy. Three constructors cover the classical cases, and OperatorSpec::new accepts arbitrary matrix lists: #![allow(unused)] fn main() {\\nuse afh::operator::OperatorSpec;\\nuse nalgebra::DMatrix; // divergence on R^2: one constraint, fields are 2-vectors\\nlet div = OperatorSpec::divergence(2, 2.0).unwrap();\\nassert_eq!((div.dim(), div.target(), div.constraints()), (2, 2, 1)); // the 2-d curl: A-free fields are gradients\\nlet curl = OperatorSpec::curl2d(2.0).unwrap();\\nassert_eq!(curl.constraints(), 1); // a custom operator is just its matrix list; here div again, by hand\\nlet mats = vec![ DMatrix::from_row_slice(1, 2, &[1.0, 0.0]), DMatrix::from_row_slice(1, 2, &[0.0, 1.0]),\\n];\\nlet custom = OperatorSpec::new(mats, 2.0).unwrap();\\nassert_eq!(custom.target(), 2); } Custom operators should be vetted with check_constant_rank, which\\nprobes the symbol over a deterministic set of frequencies and reports the\\ncommon rank — or an error naming two frequencies where the ranks differ: #![allow(unused)] fn main() {\\nuse afh::operator::OperatorSpec; let op = OperatorSpec::divergence(3, 2.0).unwrap();\\nlet rank = op.check_constant_rank(128).unwrap();\\nassert_eq!(rank, 1); }","breadcrumbs":"Differential constraints » Building operators","id":"2","title":"Building operators"},"20":{"body":"The afh binary drives every computation in the library from a single\\nJSON configuration file: $ afh run --config experiment.json --out results/\\n$ afh selfcheck afh selfcheck runs a fast set of internal invariants (projector\\nidentities, FFT round-trips, covariance, the cell-problem sandwich) and\\nexits nonzero if any fail — a first thing to try on a new machine.","breadcrumbs":"The command line » The command line","id":"20","title":"The command line"},"21":{"body":"A configuration names an operator, an integrand, one task, and solver\\noptions: { \\"operator\\": {\\"name\\": \\"div\\", \\"dim\\": 2, \\"p\\": 2.0}, \\"integrand\\": {\\"kind\\": \\"laminate\\", \\"a_lo\\": 1.0, \\"a_hi\\": 4.0, \\"axis\\": 0, \\"period\\": 1.0}, \\"task\\": {\\"name\\": \\"cell\\", \\"xi\\": [0.0, 1.0], \\"grid_n\\": 64, \\"problem\\": \\"periodic\\"}, \\"solver\\": {\\"restarts\\": 1}\\n} Unknown keys anywhere in the file are hard errors, not warnings — a\\ntypo like \\"grid_m\\" fails immediately with the offending key named.\\nOperators are either built-ins ( div, curl2d, curl3d) or explicit\\nmatrix lists; integrand kinds mirror the library constructors\\n( ppower, quadratic, laminate, checkerboard, double_well, random_checkerboard, frozen_mixture, periodic_plus_compact).","breadcrumbs":"The command line » Configuration","id":"21","title":"Configuration"},"22":{"body":"task computes project kernel projectors over a frequency box, with identity errors cell one cell problem ( periodic, compact, or relaxed) homog growing-cube estimate of f_hom(ξ) with extrapolation recon small-cube reconstruction of f(x, ξ) gamma oscillation values `M(f_k, ξ, Q)/ qcx Jensen tests and the A-quasiconvex envelope stoch ergodic averaging over seeded realizations validate growth and Lipschitz spot checks of the integrand A stochastic run, for example: { \\"operator\\": {\\"name\\": \\"div\\", \\"dim\\": 2, \\"p\\": 2.0}, \\"integrand\\": {\\"kind\\": \\"random_checkerboard\\", \\"seed\\": 0, \\"dist\\": {\\"values\\": [1.0, 4.0], \\"probs\\": [0.5, 0.5]}}, \\"task\\": {\\"name\\": \\"stoch\\", \\"xi\\": [0.0, 1.0], \\"k\\": 4, \\"radii\\": [4.0, 6.0, 8.0], \\"seeds\\": [14, 15, 22, 45], \\"density\\": 16}, \\"solver\\": {\\"restarts\\": 0}\\n}","breadcrumbs":"The command line » Tasks","id":"22","title":"Tasks"},"23":{"body":"Every run writes into the --out directory (default: alongside the\\nconfig): summary.json — the task’s result record; manifest.json — tool version, the full configuration as parsed, and\\nthe resolved seed, enough to reproduce the run exactly; task-specific CSV tables (e.g. homog.csv with one row per center and\\nradius, stoch.csv with one row per seed and radius) and, on request,\\nminimizer fields in a small binary format readable by afh::fields::io. Reruns of the same configuration produce byte-identical summaries.\\nAll randomness flows from the configured seed (overridable with --seed), and reductions are ordered deterministically regardless of --threads / AFH_THREADS.","breadcrumbs":"The command line » Outputs","id":"23","title":"Outputs"},"24":{"body":"code meaning 0 success 2 configuration rejected (unknown keys, bad grids, missing integrand, dimension mismatches) 3 computation failed (constant-rank violation, divergence, infeasible budget, I/O) The split makes scripted sweeps easy to triage: 2 means fix the\\nconfig, 3 means look at the instance.","breadcrumbs":"The command line » Exit codes","id":"24","title":"Exit codes"},"3":{"body":"projector(w) returns the orthogonal projector onto ker A(w), computed\\nfrom an SVD of the symbol. Two identities characterize it and are checked\\nexactly in the test suite: idempotence P² = P and annihilation A(w) P(w) = 0. #![allow(unused)] fn main() {\\nuse afh::operator::OperatorSpec; let op = OperatorSpec::divergence(2, 2.0).unwrap();\\nlet w = [3, -1];\\nlet p = op.projector(&w).unwrap();\\nlet a = op.symbol(&w).unwrap(); assert!((&a * &p.matrix).norm() < 1e-12); // A(w) P(w) = 0\\nassert!((&p.matrix * &p.matrix - &p.matrix).norm() < 1e-12); // P² = P } The projector is undefined at w = 0; mean values of constrained fields\\nare handled separately (they are simply fixed to zero for the fluctuation\\npart of every cell problem).","breadcrumbs":"Differential constraints » Projectors","id":"3","title":"Projectors"},"4":{"body":"For grid fields the library assembles the projector frequency by\\nfrequency. project_field maps any periodic field to the nearest A-free, mean-zero field, and apply_a evaluates the constraint\\nresidual ‖A u‖ spectrally — the basic diagnostic used by the solver: #![allow(unused)] fn main() {\\nuse afh::fields::{Grid, PeriodicField};\\nuse afh::operator::OperatorSpec; let op = OperatorSpec::divergence(2, 2.0).unwrap();\\nlet grid = Grid::unit_cube(2, 16).unwrap(); // an arbitrary smooth field ...\\nlet u = PeriodicField::from_fn(grid, 2, |x, out| { out[0] = (2.0 * std::f64::consts::PI * x[0]).sin(); out[1] = (2.0 * std::f64::consts::PI * (x[0] + x[1])).cos();\\n}); // ... becomes divergence-free after projection\\nlet v = op.project_field(&u).unwrap();\\nlet (_, residual) = op.apply_a(&v).unwrap();\\nassert!(residual < 1e-10); } Internally the solver does not project at all: it parametrizes the\\nconstrained space through a potential u = B(θ φ) built from the same\\nSVD, so every iterate is A-free by construction. That machinery is the\\nsubject of the next chapter.","breadcrumbs":"Differential constraints » Whole-field projection","id":"4","title":"Whole-field projection"},"5":{"body":"Fix a direction ξ ∈ R^d and a cube Q. All three cell problems\\nminimize the same averaged energy Φ(u) = (1/|Q|) ∫_Q f(x, ξ + u(x)) dx over mean-zero A-free fluctuations u, and differ only in the side\\ncondition imposed near the boundary: M — periodic. u is Q-periodic. This is the classical\\ncorrector problem; it gives the lowest of the three values. M_c — compactly supported. u vanishes on a margin inside ∂Q, enforced by a smooth cutoff window. Compact support is what\\nsurvives in the growing-cube limit, and M_c gives the highest value. M^η_c — relaxed. u is truncated to compact support but the\\nconstraint residual this creates is only required to stay within a\\nbudget ‖V‖_p^p ≤ η |Q|. As η grows, M^η_c descends from M_c\\ntoward M. The sandwich M ≤ M^η_c ≤ M_c holds at every radius and is the main\\ninternal consistency check — all three converge to f_hom(ξ) per unit\\nvolume as the cube grows.","breadcrumbs":"Cell problems » Cell problems","id":"5","title":"Cell problems"},"6":{"body":"Each variant has one entry point. Options (iteration caps, multi-start\\ncount, tolerances) travel in a SolveOptions: #![allow(unused)] fn main() {\\nuse afh::cellsolver::{solve_compact, solve_periodic, solve_relaxed, SolveOptions};\\nuse afh::fields::Grid;\\nuse afh::integrand::IntegrandSpec;\\nuse afh::operator::OperatorSpec; let op = OperatorSpec::divergence(2, 2.0).unwrap();\\nlet f = IntegrandSpec::laminate(1.0, 4.0, 0, 1.0);\\nlet xi = [0.0, 1.0];\\nlet grid = Grid::unit_cube(2, 16).unwrap();\\nlet opts = SolveOptions { restarts: 1, ..SolveOptions::default() }; let per = solve_periodic(&op, &f, &xi, &grid, &opts).unwrap();\\nlet cpt = solve_compact(&op, &f, &xi, &grid, 0.125, &opts).unwrap();\\nlet rel = solve_relaxed(&op, &f, &xi, &grid, 0.1, 0.125, &opts).unwrap(); // the sandwich M <= M^eta_c <= M_c\\nassert!(per.value <= rel.value + 1e-9);\\nassert!(rel.value <= cpt.value + 1e-9); } The returned CellSolution carries the minimum value, the per-unit-\\nvolume normalized value, the minimizing field, the spectral constraint\\nresidual, and — for the relaxed problem — how much of the budget η was\\nused and whether it was binding.","breadcrumbs":"Cell problems » Solving","id":"6","title":"Solving"},"7":{"body":"The minimization is a projected-gradient-free descent in a potential\\nparametrization. From the symbol SVD the library builds, frequency by\\nfrequency, a potential operator B(w) = σ(w) P(w); any coefficient\\nfield φ then yields u = B(θ φ) which is exactly A-free and mean-zero by construction ( θ is the\\ncutoff window for the compact variants, identically one for M). The\\ndescent therefore never needs to re-project iterates: it runs Armijo\\nbacktracking line search on φ, with several deterministic\\npseudo-random restarts ( restarts in the options) to cope with\\nnon-convex densities. Runs are bit-reproducible: the restart seeds\\nderive from SolveOptions::seed only. Two details matter for the compact variants: the window θ has a dead band (hard zero) plus a smooth ramp of\\ncontrollable order, so the supported field is genuinely zero on the\\nmargin rather than merely small; a leak guard rejects line-search steps whose tail outside the\\nsupport window exceeds a fraction of the feasibility tolerance, which\\nkeeps “compactly supported” honest throughout the search, not just at\\nthe end. For the relaxed problem the candidate is truncated to exact compact\\nsupport and the truncation’s constraint residual V = A u is measured\\nin L^p; solutions report eta_usage so you can see whether the budget\\nconstrained the minimizer: #![allow(unused)] fn main() {\\nuse afh::cellsolver::{solve_relaxed, SolveOptions};\\nuse afh::fields::Grid;\\nuse afh::integrand::IntegrandSpec;\\nuse afh::operator::OperatorSpec; let op = OperatorSpec::divergence(2, 2.0).unwrap();\\nlet f = IntegrandSpec::laminate(1.0, 4.0, 0, 1.0);\\nlet grid = Grid::unit_cube(2, 16).unwrap();\\nlet opts = SolveOptions { restarts: 1, ..SolveOptions::default() }; let sol = solve_relaxed(&op, &f, &[0.0, 1.0], &grid, 0.5, 0.125, &opts).unwrap();\\nlet used = sol.eta_usage.unwrap();\\nassert!(used >= 0.0 && used <= 0.5 + 1e-12); }","breadcrumbs":"Cell problems » How the solver works","id":"7","title":"How the solver works"},"8":{"body":"IntegrandSpec describes the density f(x, z). Built-ins include the\\npower energy |z|^p, quadratic media a(x) |z|² with laminate,\\ncheckerboard, or seeded random coefficients, a double-well density for\\nrelaxation experiments, and a periodic density plus a compactly\\nsupported perturbation (used to verify that local defects do not move\\nthe homogenized limit). Every spec carries growth constants, and verify_growth / verify_plip spot-check the p-growth and p-Lipschitz inequalities on random samples: #![allow(unused)] fn main() {\\nuse afh::integrand::IntegrandSpec; let f = IntegrandSpec::double_well(vec![0.0, 1.0], 0.1);\\nassert!(f.verify_growth(200, 2, 2).unwrap().pass);\\nassert!(f.verify_plip(200, 2, 2).unwrap().pass); } Grids must have power-of-two points per axis (the FFT path insists on\\nit) and are described by Grid: a center, side lengths, and the point\\ncounts. Grid::unit_cube(dim, n) is the common case; growing cubes use Grid::cube(dim, n, center, side).","breadcrumbs":"Cell problems » Integrands","id":"8","title":"Integrands"},"9":{"body":"The homogenized density at a macroscopic gradient ξ is the\\ngrowing-cube limit of relaxed cell minima per unit volume, f_hom^k(ξ) = lim_{r→∞} M^{1/k}_c(f, ξ, Q_r(r x)) / r^N , and the limit is independent of the center x: growing cubes anchored\\nanywhere see, in the limit, the same statistics of the medium. fhom_at drives this directly — it runs the relaxed solver along a\\nradius schedule, for several centers, warm-starting each solve from the\\nmatching periodic corrector, and Richardson-extrapolates the series in 1/r: #![allow(unused)] fn main() {\\nuse afh::cellsolver::SolveOptions;\\nuse afh::homog::fhom_at;\\nuse afh::integrand::IntegrandSpec;\\nuse afh::operator::OperatorSpec; let op = OperatorSpec::divergence(2, 2.0).unwrap();\\nlet f = IntegrandSpec::laminate(1.0, 4.0, 0, 1.0);\\nlet opts = SolveOptions { restarts: 1, ..SolveOptions::default() }; let est = fhom_at( &op, &f, &[0.0, 1.0], 4, // relaxation index: eta = 1/k &[1.0, 2.0], // radius schedule &[vec![0.0, 0.0]], // cube centers 8, // grid density: points per unit length &opts,\\n).unwrap(); assert_eq!(est.failures, 0);\\n// finite radii are upper bounds drifting down toward f_hom = 1.6\\nassert!(est.limit < est.values[0][0].unwrap());\\nassert!(est.limit > 1.0); } The returned HomogEstimate keeps the whole matrix of per-center,\\nper-radius values, the extrapolated limit, and the spread across\\ncenters at the largest radius; center_independent flags whether that\\nspread is below one percent. For media whose period divides the radius\\nstep, centers that differ by full periods give identical discrete\\nproblems, so the spread collapses to zero — a useful exact test of the\\ncenter-independence claim. A practical note on finite radii: the compact-support window costs a\\nboundary layer of order 1/r, and its prefactor depends on how the\\nwindow cuts the microstructure. Choosing centers on the period lattice\\nof the medium (or simply radii that are multiples of the period) makes\\nthe series clean enough for the three-point Richardson fit; the spread field will tell you when it is not.","breadcrumbs":"The homogenized integrand » The homogenized integrand","id":"9","title":"The homogenized integrand"}},"length":25,"save":true},"fields":["title","body","breadcrumbs"],"index":{"body":{"root":{"0":{",":{"2":{"]":{"^":{"2":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},".":{".":{"8":{")":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"0":{"1":{"df":1,"docs":{"14":{"tf":1.0}}},"df":13,"docs":{"0":{"tf":1.0},"10":{"tf":2.0},"14":{"tf":1.7320508075688772},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}}},"1":{"2":{"5":{"df":2,"docs":{"6":{"tf":1.4142135623730951},"7":{"tf":1.0}}},"df":0,"docs":{}},"df":2,"docs":{"6":{"tf":1.0},"8":{"tf":1.0}}},"2":{"5":{"df":3,"docs":{"16":{"tf":1.7320508075688772},"17":{"tf":1.0},"18":{"tf":1.0}}},"df":0,"docs":{}},"3":{"df":1,"docs":{"13":{"tf":1.0}}},"5":{"df":7,"docs":{"10":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951}}},"7":{"df":1,"docs":{"13":{"tf":1.0}}},"9":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":16,"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":2.23606797749979},"17":{"tf":2.0},"18":{"tf":2.23606797749979},"19":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"24":{"tf":1.0},"3":{"tf":1.7320508075688772},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}}},"1":{".":{"0":{")":{".":{"a":{"b":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":14,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":2.0},"14":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"21":{"tf":1.7320508075688772},"22":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":2.0}}},"6":{")":{".":{"a":{"b":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":2,"docs":{"0":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}},"/":{"df":0,"docs":{},"k":{"df":1,"docs":{"9":{"tf":1.0}}},"r":{"df":1,"docs":{"9":{"tf":1.4142135623730951}}},"|":{"df":0,"docs":{},"q":{"df":1,"docs":{"5":{"tf":1.0}}}}},"0":{"df":2,"docs":{"17":{"tf":1.0},"4":{"tf":1.0}}},"2":{"df":3,"docs":{"18":{"tf":1.0},"3":{"tf":1.4142135623730951},"7":{"tf":1.0}}},"4":{"df":1,"docs":{"22":{"tf":1.0}}},"5":{"df":1,"docs":{"22":{"tf":1.0}}},"6":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":6,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":2,"docs":{"10":{"tf":1.0},"22":{"tf":1.0}}},"7":{"df":1,"docs":{"17":{"tf":1.0}}},"df":10,"docs":{"0":{"tf":1.0},"10":{"tf":2.23606797749979},"14":{"tf":1.0},"18":{"tf":2.0},"2":{"tf":1.7320508075688772},"21":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"e":{"df":10,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0}}}},"2":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"(":{")":{".":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"8":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},".":{"0":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":14,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.7320508075688772},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":6,"docs":{"10":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"4":{"tf":1.4142135623730951},"9":{"tf":1.0}}},"df":0,"docs":{}},"0":{"0":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{}},"2":{"df":1,"docs":{"22":{"tf":1.0}}},"df":13,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":2.23606797749979},"17":{"tf":2.0},"18":{"tf":2.23606797749979},"19":{"tf":1.7320508075688772},"2":{"tf":2.6457513110645907},"21":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.4142135623730951},"4":{"tf":1.0},"8":{"tf":1.4142135623730951}}},"3":{".":{"0":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":4,"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"24":{"tf":1.4142135623730951},"3":{"tf":1.0}}},"4":{".":{"0":{")":{".":{"a":{"b":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":11,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}},"1":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"5":{"df":1,"docs":{"22":{"tf":1.0}}},"df":3,"docs":{"19":{"tf":1.0},"22":{"tf":1.0},"9":{"tf":1.0}}},"5":{"df":1,"docs":{"18":{"tf":1.0}},"e":{"df":1,"docs":{"19":{"tf":1.4142135623730951}}}},"6":{".":{"0":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}},"4":{"df":1,"docs":{"21":{"tf":1.0}}},"df":2,"docs":{"10":{"tf":1.4142135623730951},"14":{"tf":1.0}}},"7":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"8":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},".":{"0":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}},"df":5,"docs":{"16":{"tf":1.7320508075688772},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"9":{"tf":1.0}}},"9":{"df":3,"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"6":{"tf":1.4142135623730951}}},"_":{"df":1,"docs":{"4":{"tf":1.0}},"i":{"df":1,"docs":{"18":{"tf":1.0}}},"j":{"df":1,"docs":{"1":{"tf":1.7320508075688772}}},"q":{"df":2,"docs":{"12":{"tf":1.0},"5":{"tf":1.0}}},"z":{"df":1,"docs":{"17":{"tf":1.0}}}},"a":{"(":{"df":0,"docs":{},"w":{"df":2,"docs":{"1":{"tf":2.23606797749979},"3":{"tf":1.7320508075688772}}},"x":{"df":1,"docs":{"8":{"tf":1.0}}}},"^":{"(":{"df":0,"docs":{},"j":{"df":1,"docs":{"1":{"tf":1.7320508075688772}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":1,"docs":{"21":{"tf":1.0}}}},"l":{"df":0,"docs":{},"o":{"df":1,"docs":{"21":{"tf":1.0}}}}},"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"df":1,"docs":{"14":{"tf":1.0}}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}}}}},"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"2":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"i":{"df":1,"docs":{"17":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}},"d":{"d":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":3,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"18":{"tf":1.0}}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"h":{":":{":":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{":":{":":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":7,"docs":{"10":{"tf":1.4142135623730951},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"9":{"tf":1.0}}}}}}}}}},"{":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"x":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"d":{"df":6,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}}}},"i":{"df":0,"docs":{},"o":{"df":1,"docs":{"23":{"tf":1.0}}}},"{":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{":":{":":{"a":{"df":0,"docs":{},"q":{"c":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"g":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"_":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"s":{"c":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"_":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"_":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"{":{"a":{"df":0,"docs":{},"q":{"c":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"14":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"d":{":":{":":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":12,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{":":{":":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":14,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{":":{":":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"17":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"i":{"c":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"s":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"u":{"b":{"a":{"d":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"a":{"d":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":2,"docs":{"0":{"tf":1.7320508075688772},"20":{"tf":2.0}}}},"g":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"2":{"tf":1.0}},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"10":{"tf":1.0},"13":{"tf":1.0}}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"19":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":1,"docs":{"17":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":15,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":2,"docs":{"12":{"tf":1.0},"9":{"tf":1.0}},"s":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}}}}},"w":{"a":{"df":0,"docs":{},"y":{"df":2,"docs":{"12":{"tf":1.0},"16":{"tf":1.0}}}},"df":0,"docs":{}}},"n":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"3":{"tf":1.0}}}}}}},"y":{"df":0,"docs":{},"w":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"21":{"tf":1.0},"9":{"tf":1.0}}}}}}}},"p":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{"_":{"a":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"o":{"a":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"q":{"c":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"14":{"tf":1.0}},"e":{"(":{"&":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"(":{"&":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"13":{"tf":1.0}}}}},"df":0,"docs":{}},"df":1,"docs":{"13":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"r":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":3,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"j":{"df":0,"docs":{},"o":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"t":{"!":{"(":{"!":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"i":{"c":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"(":{"&":{"a":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{},"p":{".":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":1,"docs":{"3":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{},"l":{"df":1,"docs":{"19":{"tf":1.0}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{".":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}},"c":{"df":0,"docs":{},"v":{"df":0,"docs":{},"x":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":1,"docs":{"14":{"tf":1.4142135623730951}}}},"s":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.4142135623730951}}}}}}}},"df":0,"docs":{}}}},"f":{".":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"(":{"2":{"0":{"0":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"(":{"2":{"0":{"0":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{".":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"6":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{".":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"6":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"p":{".":{"a":{"d":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"p":{".":{"a":{"b":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"m":{"a":{"df":0,"docs":{},"x":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"_":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":1,"docs":{"17":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"p":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":2,"docs":{"10":{"tf":1.4142135623730951},"17":{"tf":1.0}}}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"u":{"b":{"a":{"d":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"w":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"u":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"s":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"!":{"(":{"(":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{".":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"2":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"a":{".":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"16":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"l":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{".":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"k":{"df":1,"docs":{"2":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{".":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"13":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"g":{"df":6,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0},"5":{"tf":1.0}}}},"df":0,"docs":{}}}},"x":{"df":0,"docs":{},"i":{"df":2,"docs":{"21":{"tf":1.0},"8":{"tf":1.0}}}}},"b":{"(":{"df":0,"docs":{},"w":{"df":1,"docs":{"7":{"tf":1.0}}}},".":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"16":{"tf":1.0}}}}},"df":0,"docs":{}}},"a":{"c":{"df":0,"docs":{},"k":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"d":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}}},"df":3,"docs":{"16":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":2,"docs":{"1":{"tf":1.0},"4":{"tf":1.0}}}}},"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":2,"docs":{"14":{"tf":1.0},"9":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"14":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"g":{"df":1,"docs":{"18":{"tf":1.4142135623730951}}},"n":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":3,"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0}}}}},"d":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"t":{"df":2,"docs":{"16":{"tf":1.4142135623730951},"7":{"tf":1.0}}}},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":3,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"17":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"d":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"5":{"tf":1.0},"9":{"tf":1.0}}}}},"df":3,"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}}},"x":{"df":5,"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"18":{"tf":2.23606797749979},"22":{"tf":1.0}}}},"r":{"a":{"c":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"u":{"d":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":5,"docs":{"0":{"tf":1.0},"24":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}}}}}},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"c":{"a":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"p":{"df":1,"docs":{"6":{"tf":1.0}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":4,"docs":{"13":{"tf":1.0},"2":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"e":{"df":2,"docs":{"2":{"tf":1.0},"8":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":10,"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"3":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}}}}}}},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"df":3,"docs":{"23":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":2.8284271247461903}}}}}}},"h":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"10":{"tf":1.0}}}},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"4":{"tf":1.0}}}}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"3":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"k":{"df":1,"docs":{"2":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{}},"df":7,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"b":{"df":0,"docs":{},"o":{"a":{"df":0,"docs":{},"r":{"d":{"df":3,"docs":{"17":{"tf":1.0},"21":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"l":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"9":{"tf":1.0}}}},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"14":{"tf":1.0}},"i":{"c":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"d":{"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.0},"24":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":6,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0},"19":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}}}}},"l":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"s":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":0,"docs":{}}},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"2":{"tf":1.0},"8":{"tf":1.0}}}}},"p":{"a":{"c":{"df":0,"docs":{},"t":{"df":5,"docs":{"0":{"tf":1.0},"22":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.7320508075688772},"9":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":4,"docs":{"0":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"14":{"tf":1.0}}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"18":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"t":{"df":7,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0}}}}}},"n":{"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"5":{"tf":1.0}}}},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"/":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":3,"docs":{"20":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}},"u":{"df":0,"docs":{},"r":{"df":5,"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.7320508075688772},"24":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"5":{"tf":1.0}}}}},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":5,"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"19":{"tf":1.0},"24":{"tf":1.0},"8":{"tf":1.0}}}}},"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":4,"docs":{"12":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"t":{"df":7,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}}}},"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"4":{"tf":1.0},"7":{"tf":1.0}},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"2":{"tf":1.0},"21":{"tf":1.0}}}}}},"df":0,"docs":{}}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":1,"docs":{"10":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":2,"docs":{"0":{"tf":1.0},"7":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0},"5":{"tf":1.0}}},"s":{"df":1,"docs":{"19":{"tf":1.0}}}},"x":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"14":{"tf":1.4142135623730951}},"e":{"(":{"&":{"df":0,"docs":{},"g":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}},"df":4,"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":2.0},"7":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"r":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"18":{"tf":1.0}}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"e":{"df":1,"docs":{"7":{"tf":1.0}}}},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":3,"docs":{"10":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}}}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}}}}}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"6":{"tf":1.0},"8":{"tf":1.0}}}}},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"17":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":3,"docs":{"15":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"p":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"6":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":1,"docs":{"6":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"v":{"df":1,"docs":{"23":{"tf":1.0}}}},"u":{"b":{"df":0,"docs":{},"e":{"df":7,"docs":{"0":{"tf":2.0},"10":{"tf":1.0},"19":{"tf":1.7320508075688772},"22":{"tf":1.4142135623730951},"5":{"tf":1.7320508075688772},"8":{"tf":1.0},"9":{"tf":1.7320508075688772}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"l":{"2":{"d":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"3":{"d":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"df":2,"docs":{"0":{"tf":1.0},"2":{"tf":1.4142135623730951}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"2":{"tf":1.7320508075688772}}}}}},"t":{"df":1,"docs":{"9":{"tf":1.0}},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":3,"docs":{"18":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}}}}}}},"v":{"df":0,"docs":{},"x":{"df":1,"docs":{"14":{"tf":1.0}}}}},"d":{"df":1,"docs":{"2":{"tf":1.0}},"e":{"a":{"d":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"c":{"a":{"df":0,"docs":{},"y":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}}}},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}}}}}},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":9,"docs":{"0":{"tf":2.0},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":2.0},"15":{"tf":1.0},"22":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}}}}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":1,"docs":{"7":{"tf":1.0}}}}},"s":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"18":{"tf":1.0},"5":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}}}},"r":{"df":0,"docs":{},"i":{"b":{"df":1,"docs":{"8":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":4,"docs":{"15":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0}}}}}}}}}}},"v":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}}},"i":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":4,"docs":{"11":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}}}},"m":{"df":2,"docs":{"21":{"tf":1.0},"22":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":1,"docs":{"24":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"1":{"tf":1.0},"5":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":2,"docs":{"13":{"tf":1.0},"9":{"tf":1.0}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"s":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":1,"docs":{"10":{"tf":1.0}}}}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":2,"docs":{"14":{"tf":1.0},"9":{"tf":1.0}}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"j":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}}}},"t":{"df":1,"docs":{"22":{"tf":1.0}}}},"v":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":4,"docs":{"0":{"tf":1.0},"2":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"22":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"2":{"tf":1.0},"24":{"tf":1.0},"4":{"tf":1.0}}}}},"i":{"d":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}}}},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"e":{"(":{"1":{"df":1,"docs":{"2":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"l":{"df":2,"docs":{"14":{"tf":1.4142135623730951},"8":{"tf":1.0}},"e":{"_":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"n":{"df":2,"docs":{"10":{"tf":1.0},"9":{"tf":1.0}}}}},"r":{"a":{"df":0,"docs":{},"w":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}},"v":{"df":0,"docs":{},"e":{"df":3,"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"9":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"14":{"tf":1.0}}}}},"x":{"df":3,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"5":{"tf":1.0}}}},"df":0,"docs":{},"e":{".":{"df":0,"docs":{},"g":{"df":1,"docs":{"23":{"tf":1.0}}}},"a":{"c":{"df":0,"docs":{},"h":{"df":7,"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.7320508075688772},"6":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.7320508075688772}}}},"df":0,"docs":{}}}},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"n":{"d":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":7,"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}}}}}},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"c":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":3,"docs":{"1":{"tf":1.0},"23":{"tf":1.0},"9":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"11":{"tf":1.0},"6":{"tf":1.0}}}}},"v":{"df":1,"docs":{"14":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":4,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":2.6457513110645907},"22":{"tf":1.0}}}}}}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"17":{"tf":1.0}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"d":{"df":3,"docs":{"15":{"tf":1.4142135623730951},"19":{"tf":1.0},"22":{"tf":1.0}},"i":{"c":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.4142135623730951}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":5,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"a":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"[":{"0":{"]":{"[":{"0":{"]":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":2,"docs":{"19":{"tf":1.0},"9":{"tf":1.0}},"i":{"df":0,"docs":{},"m":{"df":3,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"22":{"tf":1.0}}}}}},"t":{"a":{"_":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":2,"docs":{"16":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":4,"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"7":{"tf":1.0},"9":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":10,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":2,"docs":{"0":{"tf":1.0},"22":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"7":{"tf":1.0}},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":1,"docs":{"14":{"tf":1.0}}}},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"14":{"tf":1.0},"8":{"tf":1.0}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"20":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}}}},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"17":{"tf":1.0},"21":{"tf":1.0}}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"2":{"tf":1.0}}},"s":{"df":1,"docs":{"15":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":4,"docs":{"11":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0},"9":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{}}}}},"f":{"(":{"df":0,"docs":{},"u":{"df":1,"docs":{"0":{"tf":1.0}}},"x":{"df":5,"docs":{"0":{"tf":1.0},"10":{"tf":1.7320508075688772},"22":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}}}},"_":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"^":{"df":0,"docs":{},"k":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":6,"docs":{"0":{"tf":2.23606797749979},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"22":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}}}}}},"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":4,"docs":{"13":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0}}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":2,"docs":{"1":{"tf":1.0},"10":{"tf":1.0}}}}}},"r":{"df":1,"docs":{"14":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}}},"df":11,"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":2.23606797749979},"11":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.7320508075688772},"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"6":{"tf":2.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"e":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"f":{"df":0,"docs":{},"t":{"df":3,"docs":{"16":{"tf":1.0},"20":{"tf":1.0},"8":{"tf":1.0}}}},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"df":0,"docs":{},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":14,"docs":{"0":{"tf":2.449489742783178},"1":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.4142135623730951},"23":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":2.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"e":{"df":3,"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}}}},"n":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"10":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.4142135623730951}}}}},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"19":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"20":{"tf":1.0}}}}},"t":{"df":1,"docs":{"9":{"tf":1.0}}},"x":{"df":4,"docs":{"18":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}}}},"l":{"a":{"df":0,"docs":{},"g":{"df":2,"docs":{"19":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{},"o":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"17":{"tf":1.0}}}},"df":0,"docs":{},"w":{"df":1,"docs":{"23":{"tf":1.0}}}},"u":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"3":{"tf":1.0},"5":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"n":{"df":15,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":1,"docs":{"0":{"tf":1.0}}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951}}}}}}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":7,"docs":{"0":{"tf":1.7320508075688772},"12":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":1.0},"7":{"tf":1.4142135623730951}}},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"c":{"df":5,"docs":{"10":{"tf":1.0},"2":{"tf":1.4142135623730951},"22":{"tf":1.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}}}},"o":{"df":0,"docs":{},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}}},"df":1,"docs":{"19":{"tf":1.7320508075688772}}}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":2,"docs":{"23":{"tf":1.0},"9":{"tf":1.0}}}},"n":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"g":{"(":{"0":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{},"z":{"df":1,"docs":{"14":{"tf":1.0}}}},".":{"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"(":{"&":{"[":{"0":{".":{"0":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"0":{"df":1,"docs":{"14":{"tf":1.7320508075688772}}},"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"_":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"(":{"&":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{}},"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}}},"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}}},"p":{"df":2,"docs":{"10":{"tf":1.0},"13":{"tf":1.0}}}},"df":3,"docs":{"12":{"tf":1.7320508075688772},"13":{"tf":1.7320508075688772},"14":{"tf":2.0}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"18":{"tf":1.0}}}}}}}}},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":5,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"18":{"tf":1.0},"5":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"18":{"tf":1.7320508075688772}},"e":{"df":1,"docs":{"18":{"tf":1.0}}}}},"r":{"a":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"d":{":":{":":{"c":{"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"e":{"(":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"8":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"_":{"c":{"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"e":{"(":{"2":{"df":7,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}},"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"8":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"m":{"df":1,"docs":{"21":{"tf":1.0}}},"n":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":13,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"24":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":2.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"w":{"df":7,"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0},"19":{"tf":1.4142135623730951},"22":{"tf":1.0},"5":{"tf":1.7320508075688772},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"t":{"df":0,"docs":{},"h":{"df":3,"docs":{"2":{"tf":1.0},"22":{"tf":1.0},"8":{"tf":1.4142135623730951}}}}}}},"u":{"a":{"df":0,"docs":{},"r":{"d":{"df":2,"docs":{"10":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}}},"h":{"(":{"df":0,"docs":{},"{":{"1":{",":{"4":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"2":{"tf":1.0}},"l":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}},"r":{"d":{"df":2,"docs":{"21":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"2":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"l":{"d":{"df":2,"docs":{"17":{"tf":1.0},"5":{"tf":1.0}}},"df":0,"docs":{},"e":{"df":1,"docs":{"18":{"tf":1.0}}}},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{".":{"c":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{"df":1,"docs":{"23":{"tf":1.0}}}}},"df":0,"docs":{}},"df":1,"docs":{"22":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"df":9,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.7320508075688772},"14":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"9":{"tf":1.0}}}}}}}}}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}},"i":{"/":{"df":0,"docs":{},"o":{"df":1,"docs":{"24":{"tf":1.0}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}}},"n":{"df":0,"docs":{},"t":{"df":8,"docs":{"10":{"tf":1.4142135623730951},"17":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"s":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"n":{"c":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"d":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":2,"docs":{"10":{"tf":1.0},"16":{"tf":1.0}}}}}}}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":3,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"9":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}},"x":{"df":2,"docs":{"18":{"tf":1.4142135623730951},"9":{"tf":1.0}}}},"i":{"c":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}}},"df":3,"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"8":{"tf":1.0}},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":4,"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"8":{"tf":1.0}}}}},"f":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"s":{"df":1,"docs":{"24":{"tf":1.0}}}},"df":0,"docs":{}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"i":{"d":{"df":3,"docs":{"0":{"tf":1.0},"18":{"tf":1.4142135623730951},"5":{"tf":1.0}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.0}}}}},"t":{"a":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":2,"docs":{"10":{"tf":1.0},"16":{"tf":1.4142135623730951}},"r":{"a":{"df":0,"docs":{},"n":{"d":{"df":8,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.7320508075688772},"22":{"tf":1.4142135623730951},"24":{"tf":1.0}},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{":":{":":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"(":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"c":{"!":{"[":{"0":{".":{"0":{"df":2,"docs":{"14":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"(":{"0":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}}}}}}},"l":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"1":{".":{"0":{"df":5,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"q":{"df":0,"docs":{},"u":{"a":{"d":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"(":{"1":{".":{"0":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{".":{"0":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"r":{"a":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"b":{"df":0,"docs":{},"o":{"a":{"df":0,"docs":{},"r":{"d":{"(":{"0":{"df":3,"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":1,"docs":{"0":{"tf":1.0}}}},"r":{"df":0,"docs":{},"n":{"df":3,"docs":{"20":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}}}}}},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"20":{"tf":1.0}}}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"df":2,"docs":{"10":{"tf":1.0},"14":{"tf":1.0}}}}}}}},"j":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"22":{"tf":1.0}},"’":{"df":1,"docs":{"12":{"tf":1.0}}}}}}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.0},"20":{"tf":1.0}}}}}},"k":{"df":2,"docs":{"10":{"tf":1.4142135623730951},"22":{"tf":1.0}},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":3,"docs":{"19":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}},"r":{"df":2,"docs":{"1":{"tf":1.0},"3":{"tf":1.0}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":2,"docs":{"1":{"tf":1.0},"22":{"tf":1.0}}}}}},"y":{"df":2,"docs":{"21":{"tf":1.4142135623730951},"24":{"tf":1.0}}}},"i":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"21":{"tf":1.4142135623730951},"22":{"tf":1.0}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"l":{"^":{"df":0,"docs":{},"p":{"df":1,"docs":{"7":{"tf":1.0}}}},"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":4,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.4142135623730951},"8":{"tf":1.0}}}}},"n":{"d":{"df":2,"docs":{"10":{"tf":1.0},"16":{"tf":1.0}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}}}}},"t":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"df":5,"docs":{"11":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}}}},"y":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"df":1,"docs":{"19":{"tf":1.4142135623730951}},"e":{"a":{"df":0,"docs":{},"k":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}}},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":3,"docs":{"16":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}}}}},"i":{"b":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":6,"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":1,"docs":{"1":{"tf":1.0}},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"m":{"_":{"df":0,"docs":{},"{":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":7,"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"19":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":2.0}}}}},"n":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":2,"docs":{"0":{"tf":1.0},"7":{"tf":1.4142135623730951}}}},"p":{"df":0,"docs":{},"s":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"z":{"_":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"11":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":3,"docs":{"11":{"tf":1.0},"22":{"tf":1.0},"8":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"2":{"tf":1.4142135623730951},"21":{"tf":1.0}}}},"v":{"df":0,"docs":{},"e":{"df":1,"docs":{"16":{"tf":1.0}}}}},"o":{"c":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"o":{"df":0,"docs":{},"k":{"df":1,"docs":{"24":{"tf":1.0}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}},"m":{"(":{"df":0,"docs":{},"f":{"(":{"df":0,"docs":{},"k":{"df":1,"docs":{"10":{"tf":1.0}}}},"_":{"df":0,"docs":{},"k":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":1,"docs":{"10":{"tf":1.0}}}},"^":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"a":{"_":{"c":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"{":{"1":{"/":{"df":0,"docs":{},"k":{"df":0,"docs":{},"}":{"_":{"c":{"(":{"df":0,"docs":{},"f":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"η":{"_":{"c":{"df":2,"docs":{"0":{"tf":1.0},"5":{"tf":1.7320508075688772}}},"df":0,"docs":{}},"df":0,"docs":{}}},"_":{"c":{"df":4,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"5":{"tf":2.0},"6":{"tf":1.0}}},"df":0,"docs":{}},"a":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"10":{"tf":1.0},"20":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"0":{"tf":1.0},"4":{"tf":1.0}}}}}}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":16,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}},"k":{"df":0,"docs":{},"e":{"df":4,"docs":{"13":{"tf":1.0},"18":{"tf":1.0},"24":{"tf":1.0},"9":{"tf":1.0}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}}},"p":{"df":2,"docs":{"10":{"tf":1.0},"4":{"tf":1.0}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"5":{"tf":1.0},"7":{"tf":1.0}}}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":1,"docs":{"2":{"tf":1.0}},"r":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{},"x":{"df":4,"docs":{"1":{"tf":1.0},"2":{"tf":1.4142135623730951},"21":{"tf":1.0},"9":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"19":{"tf":1.0},"7":{"tf":1.0}}}}}}},"df":4,"docs":{"0":{"tf":1.0},"5":{"tf":1.7320508075688772},"6":{"tf":1.0},"7":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"n":{"df":8,"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.0},"19":{"tf":1.0},"24":{"tf":1.7320508075688772},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}}},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"i":{"a":{"df":4,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":9,"docs":{"10":{"tf":1.7320508075688772},"12":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"7":{"tf":1.0}}}}},"i":{"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"a":{"df":1,"docs":{"9":{"tf":1.0}}},"df":8,"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.4142135623730951},"23":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951}},"u":{"df":0,"docs":{},"m":{"df":2,"docs":{"15":{"tf":1.0},"6":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"24":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"s":{"df":1,"docs":{"24":{"tf":1.0}}}},"x":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"19":{"tf":1.0}}}}}}},"o":{"d":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"15":{"tf":1.0}},"u":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"–":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":1,"docs":{"1":{"tf":1.0}}}}}}}}}}}},"r":{"df":0,"docs":{},"e":{"df":2,"docs":{"11":{"tf":1.0},"19":{"tf":1.0}}}},"v":{"df":0,"docs":{},"e":{"df":1,"docs":{"8":{"tf":1.0}}}}},"u":{"c":{"df":0,"docs":{},"h":{"df":2,"docs":{"19":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"6":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}}}}},"p":{"df":0,"docs":{},"l":{"df":2,"docs":{"1":{"tf":1.0},"9":{"tf":1.0}}}}}}}}},"n":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"b":{"df":0,"docs":{},"r":{"a":{":":{":":{"d":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":1,"docs":{"2":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"m":{"df":0,"docs":{},"e":{"df":3,"docs":{"2":{"tf":1.0},"21":{"tf":2.0},"22":{"tf":1.4142135623730951}}}}},"df":1,"docs":{"8":{"tf":1.4142135623730951}},"e":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"10":{"tf":1.4142135623730951},"5":{"tf":1.0}},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"d":{"df":3,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}},"g":{"df":1,"docs":{"13":{"tf":1.0}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}}},"df":0,"docs":{}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"13":{"tf":1.0},"19":{"tf":1.0},"7":{"tf":1.0}}}}},"w":{"df":1,"docs":{"20":{"tf":1.0}}},"x":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"13":{"tf":1.0},"19":{"tf":1.0},"7":{"tf":1.0}},"e":{"df":1,"docs":{"11":{"tf":1.0}}},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":1,"docs":{"20":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"9":{"tf":1.0}}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.0}}}}}}},"u":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"1":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}}}}},"n":{"df":11,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"10":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"t":{"df":0,"docs":{},"o":{"df":2,"docs":{"18":{"tf":1.0},"3":{"tf":1.0}}}}},"p":{".":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{"_":{"a":{"(":{"&":{"df":0,"docs":{},"v":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"k":{"(":{"1":{"2":{"8":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"(":{"&":{"df":0,"docs":{},"u":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"(":{"&":{"df":0,"docs":{},"w":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"(":{"&":{"df":0,"docs":{},"w":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":14,"docs":{"0":{"tf":1.0},"10":{"tf":1.7320508075688772},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{":":{":":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"l":{"2":{"d":{"(":{"2":{".":{"0":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"e":{"(":{"2":{"df":14,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}},"3":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}},"df":1,"docs":{"2":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}}}}}}},"df":6,"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"21":{"tf":1.7320508075688772},"22":{"tf":1.0},"7":{"tf":1.0}}}},"t":{"df":10,"docs":{"0":{"tf":1.0},"10":{"tf":1.7320508075688772},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"21":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}}},"s":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":6,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.4142135623730951},"6":{"tf":1.7320508075688772},"7":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"r":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":5,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}},"i":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"14":{"tf":1.0},"17":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"3":{"tf":1.0}}}}}}}}},"s":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":6,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"22":{"tf":1.0}}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"t":{"[":{"0":{"df":1,"docs":{"4":{"tf":1.0}}},"1":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}},"df":4,"docs":{"11":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0}},"s":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":7,"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"17":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.4142135623730951},"5":{"tf":1.0}},"l":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"p":{"(":{"df":0,"docs":{},"w":{"df":3,"docs":{"1":{"tf":1.0},"3":{"tf":1.4142135623730951},"7":{"tf":1.0}}}},".":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{")":{".":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"3":{"tf":1.4142135623730951}}}}}}},"df":0,"docs":{}},"df":1,"docs":{"3":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"19":{"tf":1.0}}}}},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":2,"docs":{"4":{"tf":1.0},"7":{"tf":1.0}}}}}}},"df":0,"docs":{},"s":{"df":1,"docs":{"23":{"tf":1.0}}},"t":{"df":3,"docs":{"0":{"tf":1.0},"18":{"tf":1.4142135623730951},"3":{"tf":1.0}},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"8":{"tf":1.0}}}}},"df":6,"docs":{"11":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":2.23606797749979},"8":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"df":10,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":2.0}},"i":{"df":0,"docs":{},"o":{"d":{"df":10,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":2.23606797749979}},"i":{"c":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"n":{"(":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"b":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}}}}}},"h":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0}}}}},"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}}}}},"i":{"df":0,"docs":{},"e":{"c":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}}}}}},"l":{"df":0,"docs":{},"u":{"df":2,"docs":{"7":{"tf":1.0},"8":{"tf":1.0}}}},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":8,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":2,"docs":{"4":{"tf":1.0},"7":{"tf":1.4142135623730951}}}}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"16":{"tf":1.0},"8":{"tf":1.4142135623730951}}}}}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}}}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{},"f":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"o":{"b":{"df":1,"docs":{"22":{"tf":1.0}},"e":{"df":2,"docs":{"0":{"tf":1.0},"2":{"tf":1.0}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":11,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"u":{"c":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}}}}},"df":5,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"22":{"tf":1.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951}},"o":{"df":0,"docs":{},"r":{"(":{"df":0,"docs":{},"w":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":5,"docs":{"1":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0}}}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"u":{"d":{"df":0,"docs":{},"o":{"df":1,"docs":{"7":{"tf":1.0}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":1,"docs":{"1":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"q":{")":{"/":{"df":0,"docs":{},"|":{"df":0,"docs":{},"q":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{}},"_":{"a":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{},"r":{"(":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}},"{":{"df":0,"docs":{},"ρ":{"/":{"df":0,"docs":{},"ε":{"df":0,"docs":{},"}":{"(":{"df":0,"docs":{},"x":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"ρ":{"(":{"df":0,"docs":{},"x":{")":{")":{"/":{"df":0,"docs":{},"ρ":{"^":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}},"c":{"df":0,"docs":{},"x":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":2,"docs":{"22":{"tf":1.0},"5":{"tf":2.0}},"u":{"a":{"d":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"21":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"18":{"tf":1.4142135623730951}}}}}},"s":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":5,"docs":{"0":{"tf":1.0},"12":{"tf":2.0},"13":{"tf":1.0},"14":{"tf":1.7320508075688772},"22":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}}},"r":{"^":{"2":{"df":1,"docs":{"2":{"tf":1.0}}},"d":{"df":2,"docs":{"1":{"tf":1.0},"5":{"tf":1.0}}},"df":0,"docs":{},"n":{"df":2,"docs":{"1":{"tf":1.0},"9":{"tf":1.0}}},"{":{"df":0,"docs":{},"l":{"df":0,"docs":{},"×":{"d":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}}}}},"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"18":{"tf":1.0}}}},"a":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"i":{"df":2,"docs":{"22":{"tf":1.0},"9":{"tf":1.7320508075688772}}},"u":{"df":4,"docs":{"19":{"tf":1.0},"23":{"tf":1.4142135623730951},"5":{"tf":1.0},"9":{"tf":2.23606797749979}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":1,"docs":{"7":{"tf":1.0}}}},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"b":{"df":0,"docs":{},"o":{"a":{"df":0,"docs":{},"r":{"d":{"df":2,"docs":{"21":{"tf":1.0},"22":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":7,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"g":{"df":1,"docs":{"11":{"tf":1.0}}},"k":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"2":{"tf":1.7320508075688772},"24":{"tf":1.0}}}},"p":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":3,"docs":{"15":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"18":{"tf":1.0}},"e":{"a":{"d":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"’":{"df":1,"docs":{"19":{"tf":1.0}}}}}}}},"df":5,"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"19":{"tf":1.0},"22":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"22":{"tf":1.0}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"10":{"tf":1.0},"22":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"r":{"d":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"v":{"df":2,"docs":{"0":{"tf":1.0},"10":{"tf":1.0}}}},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"df":0,"docs":{}}},"d":{"df":0,"docs":{},"u":{"c":{"df":1,"docs":{"0":{"tf":1.0}},"t":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}},"df":2,"docs":{"13":{"tf":1.0},"7":{"tf":1.0}},"f":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":1,"docs":{"10":{"tf":1.0}}}}},"g":{"a":{"df":0,"docs":{},"r":{"d":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}}}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"16":{"tf":1.0},"24":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{".":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"6":{"tf":1.0}}}}},"df":0,"docs":{}}},"a":{"df":0,"docs":{},"x":{"df":9,"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"22":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.7320508075688772}}}},"df":2,"docs":{"10":{"tf":1.0},"6":{"tf":1.0}}},"m":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{}},"p":{"df":4,"docs":{"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":4,"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":5,"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"16":{"tf":1.0},"23":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"r":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}},"s":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"u":{"df":4,"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}},"v":{"df":1,"docs":{"23":{"tf":1.0}}}}},"t":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":12,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":2.0},"9":{"tf":1.0}}}}},"df":1,"docs":{"15":{"tf":1.0}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":3,"docs":{"13":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":4,"docs":{"11":{"tf":1.4142135623730951},"3":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}}}}}}},"i":{"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"r":{"d":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"9":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}},"w":{"df":1,"docs":{"23":{"tf":1.4142135623730951}}}},"u":{"df":0,"docs":{},"n":{"df":8,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}},"s":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":11,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"14":{"tf":1.0},"16":{"tf":1.7320508075688772},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}}},"p":{"df":0,"docs":{},"l":{"df":5,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0},"8":{"tf":1.0}},"e":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"(":{"&":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"16":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"n":{"d":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"h":{"df":4,"docs":{"14":{"tf":1.4142135623730951},"20":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":2,"docs":{"11":{"tf":1.0},"14":{"tf":1.0}}}}}}},"c":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"10":{"tf":1.4142135623730951}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"_":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"_":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"10":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":2,"docs":{"10":{"tf":1.0},"9":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"7":{"tf":1.7320508075688772}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"d":{"df":8,"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"19":{"tf":2.6457513110645907},"22":{"tf":1.7320508075688772},"23":{"tf":2.0},"7":{"tf":1.0},"8":{"tf":1.0}}},"df":4,"docs":{"13":{"tf":1.0},"18":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}},"l":{"df":0,"docs":{},"f":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"20":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"p":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"19":{"tf":1.0},"9":{"tf":1.4142135623730951}}}},"t":{"df":2,"docs":{"2":{"tf":1.0},"20":{"tf":1.0}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"7":{"tf":1.0},"9":{"tf":1.0}}}}}},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":2,"docs":{"15":{"tf":1.0},"17":{"tf":1.7320508075688772}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"k":{"df":2,"docs":{"10":{"tf":1.0},"19":{"tf":1.0}}}}}}},"i":{"d":{"df":0,"docs":{},"e":{"df":6,"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"10":{"tf":1.0},"17":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":2,"docs":{"3":{"tf":1.0},"9":{"tf":1.0}}}}}},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":1,"docs":{"20":{"tf":1.0}}}}},"t":{"df":1,"docs":{"10":{"tf":1.0}}},"z":{"df":0,"docs":{},"e":{"df":1,"docs":{"16":{"tf":1.0}}}}},"m":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"_":{"c":{"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":3,"docs":{"22":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":3,"docs":{"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"l":{".":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"a":{"_":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":2,"docs":{"0":{"tf":1.0},"7":{"tf":1.0}},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}},"v":{"df":4,"docs":{"10":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"9":{"tf":1.0}},"e":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"a":{"c":{"df":0,"docs":{},"t":{"(":{"&":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"6":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"6":{"tf":1.0}},"i":{"c":{"(":{"&":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":2,"docs":{"0":{"tf":1.0},"6":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"x":{"df":1,"docs":{"6":{"tf":1.0}},"e":{"d":{"(":{"&":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":2,"docs":{"6":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":10,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"6":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{":":{":":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":10,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"r":{"df":6,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"4":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}}}},"p":{"a":{"c":{"df":0,"docs":{},"e":{"df":2,"docs":{"19":{"tf":1.0},"4":{"tf":1.0}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"1":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"c":{"df":1,"docs":{"8":{"tf":1.0}},"i":{"df":0,"docs":{},"f":{"df":1,"docs":{"23":{"tf":1.0}}}},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"l":{"df":3,"docs":{"13":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"18":{"tf":1.0},"24":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"t":{"df":2,"docs":{"22":{"tf":1.0},"8":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"a":{"d":{"df":2,"docs":{"19":{"tf":1.0},"9":{"tf":2.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"t":{"a":{"df":0,"docs":{},"n":{"d":{"a":{"df":0,"docs":{},"r":{"d":{"df":2,"docs":{"14":{"tf":1.0},"19":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"t":{"df":2,"docs":{"6":{"tf":1.0},"9":{"tf":1.0}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"19":{"tf":1.0}}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"t":{"df":3,"docs":{"17":{"tf":1.0},"19":{"tf":1.0},"9":{"tf":1.0}}}}}},"y":{"df":2,"docs":{"19":{"tf":1.0},"5":{"tf":1.0}}}},"d":{":":{":":{"df":0,"docs":{},"f":{"6":{"4":{":":{":":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"p":{"df":0,"docs":{},"i":{"df":1,"docs":{"4":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":2,"docs":{"7":{"tf":1.0},"9":{"tf":1.0}}}},"o":{"c":{"df":0,"docs":{},"h":{".":{"c":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{"df":1,"docs":{"23":{"tf":1.0}}}}},"df":0,"docs":{}},"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"22":{"tf":1.0}}}}},"df":1,"docs":{"22":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"13":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}},"u":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"u":{"b":{"a":{"d":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.4142135623730951}},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.4142135623730951}}}}}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"18":{"tf":1.4142135623730951}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"4":{"tf":1.0}}}},"df":0,"docs":{}}}},"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"3":{"tf":1.0}}}},"m":{"df":1,"docs":{"18":{"tf":1.0}},"m":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"19":{"tf":1.0}},"i":{"df":1,"docs":{"23":{"tf":1.0}}},"y":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.4142135623730951},"18":{"tf":1.0},"5":{"tf":1.7320508075688772},"7":{"tf":2.0},"8":{"tf":1.0},"9":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":1,"docs":{"5":{"tf":1.0}}}}}}},"v":{"d":{"df":3,"docs":{"3":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"y":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":4,"docs":{"1":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}}}},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":2,"docs":{"11":{"tf":1.0},"23":{"tf":1.0}}},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"7":{"tf":1.0}}}},"s":{"df":0,"docs":{},"k":{"df":3,"docs":{"21":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951},"23":{"tf":1.0}},"’":{"df":1,"docs":{"23":{"tf":1.0}}}},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"9":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":7,"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.0},"9":{"tf":1.0}}}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":3,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"15":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"20":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"a":{"d":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":7,"docs":{"0":{"tf":2.0},"10":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.7320508075688772},"9":{"tf":1.0}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":3,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"7":{"tf":1.0}}}}}}}}}}},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"6":{"tf":1.0},"7":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"23":{"tf":1.0}}}},"w":{"a":{"df":0,"docs":{},"r":{"d":{"df":2,"docs":{"5":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"r":{"a":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"24":{"tf":1.0}}}},"df":1,"docs":{"20":{"tf":1.0}},"p":{"df":1,"docs":{"20":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"c":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"5":{"tf":1.0},"7":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"’":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"w":{"df":0,"docs":{},"o":{"df":6,"docs":{"0":{"tf":1.4142135623730951},"16":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}},"y":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}},"o":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"u":{"(":{"df":0,"docs":{},"x":{"df":3,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"5":{"tf":1.0}}}},"df":6,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":2.0},"12":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":2.23606797749979},"7":{"tf":1.4142135623730951}},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"3":{"tf":1.0}}}}},"r":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}},"df":1,"docs":{"1":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.4142135623730951}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"k":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"n":{"df":2,"docs":{"21":{"tf":1.0},"24":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":5,"docs":{"10":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}}}},"p":{"df":1,"docs":{"14":{"tf":1.0}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"s":{"df":15,"docs":{"0":{"tf":2.23606797749979},"10":{"tf":3.0},"13":{"tf":2.0},"14":{"tf":2.23606797749979},"16":{"tf":2.0},"17":{"tf":2.0},"18":{"tf":2.0},"19":{"tf":2.0},"2":{"tf":1.7320508075688772},"3":{"tf":1.0},"4":{"tf":1.7320508075688772},"6":{"tf":2.23606797749979},"7":{"tf":2.449489742783178},"8":{"tf":1.7320508075688772},"9":{"tf":2.23606797749979}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":2,"docs":{"18":{"tf":1.0},"22":{"tf":1.0}}},"df":0,"docs":{}},"u":{"df":11,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"22":{"tf":1.4142135623730951},"3":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"9":{"tf":1.0}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":2,"docs":{"14":{"tf":1.0},"5":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"i":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951}}}}},"df":1,"docs":{"1":{"tf":1.0}}}}},"df":2,"docs":{"4":{"tf":1.0},"7":{"tf":1.0}},"e":{"c":{"!":{"[":{"0":{".":{"0":{"df":1,"docs":{"9":{"tf":1.0}}},"5":{"df":4,"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"18":{"tf":1.4142135623730951}}},"1":{".":{"0":{"df":4,"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}}},"df":0,"docs":{}},"df":2,"docs":{"17":{"tf":1.0},"18":{"tf":2.0}}},"2":{"df":1,"docs":{"18":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"<":{"df":0,"docs":{},"u":{"6":{"4":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":3,"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":2,"docs":{"10":{"tf":1.0},"8":{"tf":1.0}}},"y":{"_":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"8":{"tf":1.0}}}}}}}},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":1,"docs":{"8":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"t":{"df":1,"docs":{"2":{"tf":1.0}}}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"t":{"df":3,"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"24":{"tf":1.0}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":5,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}}}}}},"‖":{"_":{"df":0,"docs":{},"p":{"^":{"df":0,"docs":{},"p":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"w":{"_":{"df":0,"docs":{},"j":{"df":1,"docs":{"1":{"tf":1.0}}}},"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"k":{"df":1,"docs":{"0":{"tf":1.0}}}},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"9":{"tf":1.0}}},"n":{"df":2,"docs":{"10":{"tf":1.0},"21":{"tf":1.0}}}},"y":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":3,"docs":{"1":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951},"7":{"tf":1.0}},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":3,"docs":{"1":{"tf":1.0},"14":{"tf":1.4142135623730951},"8":{"tf":1.0}}}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":2,"docs":{"18":{"tf":1.0},"9":{"tf":1.0}}}},"s":{"df":0,"docs":{},"e":{"df":3,"docs":{"13":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":4,"docs":{"18":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}},"t":{"df":1,"docs":{"13":{"tf":1.4142135623730951}},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"5":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":1,"docs":{"1":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"x":{"[":{"0":{"]":{")":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"4":{"tf":1.0}}},"1":{"]":{")":{")":{".":{"c":{"df":0,"docs":{},"o":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":3,"docs":{"10":{"tf":2.0},"4":{"tf":1.0},"9":{"tf":1.4142135623730951}},"i":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":4,"docs":{"14":{"tf":1.7320508075688772},"21":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":2.0}}}},"y":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}}}},"z":{"df":3,"docs":{"14":{"tf":1.0},"17":{"tf":1.0},"8":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":7,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.7320508075688772},"9":{"tf":1.0}}}}},"|":{"^":{"df":0,"docs":{},"p":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{},"²":{"df":0,"docs":{},"|":{"df":0,"docs":{},"z":{"df":1,"docs":{"14":{"tf":1.0}}}}}}}}},"breadcrumbs":{"root":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}}}},"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}}}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":4,"docs":{"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"24":{"tf":1.0}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":5,"docs":{"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":4,"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}}}}}},"df":0,"docs":{}}}}},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"17":{"tf":1.0}}}}},"df":0,"docs":{}}}},"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":4,"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}}}}}}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":3,"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.4142135623730951}}}}}}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}}}},"x":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}}}},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":3,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"9":{"tf":1.4142135623730951}}}}}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"d":{"df":4,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"j":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"13":{"tf":1.0}}}}}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":5,"docs":{"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"a":{"df":5,"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"2":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":4,"docs":{"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"3":{"tf":1.0}}}}}},"df":0,"docs":{}}}}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":3,"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"r":{"a":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":5,"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":1,"docs":{"6":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"u":{"b":{"a":{"d":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"k":{"df":1,"docs":{"22":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"w":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}},"title":{"root":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}}}},"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}}}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"5":{"tf":1.0}}}}},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"24":{"tf":1.0}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}}}},"df":0,"docs":{}}}}},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"17":{"tf":1.0}}}}},"df":0,"docs":{}}}},"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"1":{"tf":1.0}}}}}}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":2,"docs":{"12":{"tf":1.0},"14":{"tf":1.0}}}}}}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}}}},"x":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}}}},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"9":{"tf":1.0}}}}}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"8":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"j":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"13":{"tf":1.0}}}}}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"a":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"2":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"3":{"tf":1.0}}}}}},"df":0,"docs":{}}}}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":1,"docs":{"12":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"r":{"a":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":1,"docs":{"6":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"u":{"b":{"a":{"d":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"k":{"df":1,"docs":{"22":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"w":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}}},"lang":"English","pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5"},"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}}}'));