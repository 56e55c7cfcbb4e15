//! Exact invariants of general cubic del Pezzo fibrations `X in |3M + nL|` on
//! rank-4 rational scrolls over the projective line, and the resulting
//! rationality verdict: `X` is rational exactly for `(d1, d2, d3, n) = (0, 0, 0, 1)`.
//!
//! * [`scroll`]: linear systems, multiplicities and Chow ring of scrolls.
//! * [`ruled`]: divisor classes on Hirzebruch surfaces.
//! * [`dp3`]: smoothness predicates, invariants, degeneration data, verdicts.
//! * [`special`]: the degree-2 double cover check and the Picard rank orbit check.
//! * [`record`]: flat records shared by the command-line and web front ends.

pub mod dp3;
pub mod error;
pub mod record;
pub mod ruled;
pub mod scroll;
pub mod special;

pub use dp3::{classify, ClassificationReport, ConePosition, DP3Family, DegenerationData, Route, Verdict};
pub use error::{Error, Result};
pub use ruled::{Hirzebruch, RuledClass};
pub use scroll::{DivisorClass, Monomial, Scroll, SubscrollIndex};
