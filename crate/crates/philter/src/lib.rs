//! Energy-interval eigenvalue sampling on a dense state-vector simulator.
//!
//! The crate provides the building blocks and the end-to-end protocols for
//! sampling eigenvalues of a Hermitian matrix that fall inside a target
//! energy window:
//!
//! * [`sim`] — dense state-vector simulator (gates, controlled unitaries,
//!   Fourier transforms on qubit registers, measurement with collapse).
//! * [`spectral`] — Hamiltonian ingestion, energy/phase scaling, exact
//!   evolution unitaries, ansatz preparation, and the compressed two-level
//!   hydrogen model used throughout the test fixtures.
//! * [`qpe`] — phase estimation circuits, the closed-form output
//!   distribution, and iterative single-ancilla phase estimation.
//! * [`amplify`] — the interval oracle, zero reflection, Grover iterate,
//!   iteration-count formulas and the amplification success condition.
//! * [`estimate`] — amplitude estimation of the initial success
//!   probability with its analytic error bound.
//! * [`protocols`] — the PHILTER, iterative PHILTER and QPHILTER drivers
//!   plus runtime accounting.
//! * [`experiments`] — deterministic dataset generators for the bundled
//!   regression studies.

pub mod amplify;
pub mod bits;
pub mod error;
pub mod estimate;
pub mod experiments;
pub mod io;
pub mod protocols;
pub mod qpe;
pub mod rng;
pub mod sim;
pub mod spectral;

pub use error::{Error, Result};
pub use sim::{RegisterLayout, StateVector, Unitary};
pub use spectral::{AnsatzSpec, EigenDecomposition, SpectralModel};
