//! Physical problems that reduce to generalized Lambert evaluations:
//! double-well eigenvalues, quadratic-exponential equations, delay
//! differential equation spectra, water-wave dispersion inversion, and the
//! inverse Langevin function.

mod dde;
mod dispersion;
mod double_well;
mod langevin;
mod quadratic_exp;

pub use dde::{dde2_real_roots, Dde2Params, DdeRealRoots};
pub use dispersion::{invert_dispersion, DispersionParams, DispersionSolution};
pub use double_well::{double_well_levels, DoubleWellLevels, DoubleWellParams};
pub use langevin::{inverse_langevin, inverse_langevin_via_genw, langevin};
pub use quadratic_exp::solve_quadratic_exp;
