//! Exact Lie-theoretic computations for the first Laplace eigenvalue of
//! invariant metrics on `Gr(2,7) = G2/U(2)` and `Gr(3,8) = Spin(7)/SO(4)`.

pub mod einstein;
pub mod error;
pub mod exact;
pub mod lie;
pub mod model;
pub mod reps;
pub mod selftest;
pub mod so7;
pub mod spectra;
pub mod uniqueness;

pub use einstein::{nu_stability_check, EinsteinMetricRecord, StabilityReport, Verdict};
pub use error::{Error, Result};
pub use exact::{ExactMatrix, GaussRat, Rat, RatPoly};
pub use model::{model, Model};
pub use reps::{AffineOperator, InvariantSpace, QuadraticForm, Representation};
pub use so7::{Case, ChevalleyBasis, IsotropyCase, SubalgebraBasis};
pub use spectra::{BranchingTable, EigContribution, MetricParams};
pub use uniqueness::{certify_uniqueness, UniquenessCertificate};
