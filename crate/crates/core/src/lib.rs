//! Exact computations with zonotopal algebras, Orlik–Terao algebras and
//! Schubert varieties of linear spaces.

pub mod apolarity;
pub mod equivariance;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod hilbert;
pub mod io;
pub mod matroid;
pub mod orlik_terao;
pub mod report;
pub mod schubert;
pub mod space;
pub mod zonotopal;

pub use apolarity::{GradedSubspace, MonoBasis, Poly};
pub use equivariance::{AutoElem, Which};
pub use error::{Error, Result};
pub use exact::{Mat, Rat};
pub use hilbert::HilbertFunction;
pub use matroid::{ElementSet, Matroid, TuttePolynomial};
pub use report::{Check, Report};
pub use schubert::BettiTable;
pub use space::{ElementaryVector, Graph, GraphMode, LinearSpace};
