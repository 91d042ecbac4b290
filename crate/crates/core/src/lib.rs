//! Mode entanglement in the spin-partitioned BCS ground state.
//!
//! The library evaluates the per-orbital entanglement spectrum of the BCS
//! ground state, maps it to effective thermal descriptions (mode-dependent
//! generalized-Gibbs temperature and its constant canonical approximation),
//! integrates the spin entanglement entropy and number-fluctuation variances
//! against arbitrary density-of-states models, and cross-checks everything
//! against a brute-force dense partial-trace oracle for small mode counts.
//!
//! All energies are dimensionless multiples of a user-chosen unit; the
//! physics depends only on the ratios `xi/delta`, `debye/delta`, `mu/delta`.

pub mod amplitudes;
pub mod dos;
pub mod gap;
pub mod grid;
pub mod io;
pub mod observables;
pub mod oracle;
pub mod params;
pub mod quadrature;
pub mod thermal;

mod error;

pub use error::Error;
pub use params::ModelParams;

pub type Result<T> = std::result::Result<T, Error>;
