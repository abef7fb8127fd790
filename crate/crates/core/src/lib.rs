//! Momentum spectra of a particle in an infinite square well.
//!
//! * [`well`]: eigenstates and energies of the well.
//! * [`continuous`]: full-line Fourier momentum amplitude and density.
//! * [`discrete`]: plane-wave spectrum on the interval under a self-adjoint
//!   boundary phase; the ground state is two spikes of weight 1/2.
//! * [`release`]: free expansion after the walls are removed, and the
//!   far-field map back onto momentum.
//! * [`landau`]: charged particle in a uniform field in the Landau and
//!   symmetric gauges, lattice coherent states, degeneracy and Hall current.
//! * [`report`], [`config`], [`cli`]: CSV tables, run reports and the
//!   `boxmode` command line.

pub mod cli;
pub mod config;
pub mod continuous;
pub mod discrete;
pub mod error;
pub mod landau;
pub mod quadrature;
pub mod release;
pub mod report;
pub mod well;

pub use error::{Error, Result};
pub use quadrature::Quadrature;
