//! Two self-contained checks: the degree-2 del Pezzo double cover with its
//! discriminant root count, and the orbit combinatorics behind the Picard rank
//! of the generic cubic surface fibre.

pub mod curves;
pub mod dp2;
pub mod form;
pub mod poly;
pub mod scalar;

pub use curves::{invariant_disjoint_subsets, picard_rank_two_witness, CurveSystem};
pub use dp2::{dp2_report, dp2_report_from_forms, dp2_report_with, singular_fiber_count, DrawMode, Dp2Report};
pub use form::{discriminant, root_count, BinaryForm, RootCount};
pub use scalar::{Fp, Scalar};
