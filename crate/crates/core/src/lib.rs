//! Two-dimensional simplicial complexes, their GF(2) cochains, coboundary and
//! cosystolic expansion constants, edge-graph spectra, and the high-order
//! random walk on edges.
//!
//! Everything here targets desk-scale instances: expansion constants and
//! Cheeger constants are computed exactly by exhaustive enumeration, and
//! spectra by a dense symmetric eigensolver.

pub mod cochain;
pub mod complex;
pub mod error;
pub mod expansion;
pub mod fraction;
pub mod gf2;
mod search;
pub mod spectral;
pub mod verdict;
pub mod walk;

pub use complex::{Complex2, DegreeProfile};
pub use error::{HdxError, Result};
pub use fraction::Fraction;
pub use verdict::Verdict;
