//! Broadcasting of entanglement, discord and coherence in qubit-qudit systems
//! through local symmetric `1 → 2` cloners.
//!
//! The crate is layered bottom-up: dense complex linear algebra on tensor
//! products ([`linalg`]), the Pauli/Gell-Mann operator expansion ([`bloch`]),
//! the cloner and broadcasting protocol ([`cloning`]), entanglement tests
//! ([`criteria`]), correlation measures ([`measures`]), input states
//! ([`families`]) and the sweep/threshold/survey drivers ([`scan`], [`io`]).

pub mod bloch;
pub mod cloning;
pub mod criteria;
pub mod error;
pub mod families;
pub mod io;
pub mod linalg;
pub mod measures;
pub mod scan;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, SubsystemShape, C64};
