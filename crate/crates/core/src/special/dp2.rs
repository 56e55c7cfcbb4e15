//! The double cover of `P(O(2) + O(2) + O)` branched in a general member of
//! `|4M - 2L|`, after blowing up `Y_3`, is a conic bundle over `F_0`. Its
//! degeneration divisor is `Xi ~ 6 sigma + mu f`, where `mu` counts the split
//! fibres over the section `S`, i.e. the roots of `b^2 - 4ac` for the conic
//! `a x3^2 + b x2 x3 + c x2^2` with `deg (a, b, c) = (2, 4, 6)`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::form::{discriminant, random_form_fp, BinaryForm, RootCount};
use super::scalar::Scalar;
use crate::error::{Error, Result};
use crate::ruled::{Hirzebruch, RuledClass};

/// `K^2` of a general fibre: a del Pezzo surface of degree 2.
pub const FIBRE_K_SQUARED: i64 = 2;

/// Number of singular fibres of a standard conic bundle over `P^1` on a
/// surface with the given `K^2`.
pub fn singular_fiber_count(k_squared: i64) -> Result<i64> {
    if k_squared > 8 {
        return Err(Error::KSquaredOutOfRange(k_squared));
    }
    Ok(8 - k_squared)
}

/// How the three coefficient forms are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum DrawMode {
    #[default]
    Generic,
    /// `a = 0`: the discriminant is the square `b^2`.
    Square,
    /// `a = b = 0`: the discriminant vanishes identically.
    Degenerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dp2Report {
    pub seed: u64,
    pub lambda: i64,
    pub discriminant_degree: usize,
    /// Split fibres over `S`, counted with multiplicity.
    pub mu: i64,
    pub mu_distinct: i64,
    pub xi_class: RuledClass,
    pub two_k_plus_xi: RuledClass,
    pub two_k_plus_xi_effective: bool,
    pub nonruled: bool,
    /// All split fibres are distinct.
    pub generic: bool,
}

/// Builds the report from explicit forms `a`, `b`, `c` of degrees `2, 4, 6`.
pub fn dp2_report_from_forms<S: Scalar>(
    seed: u64,
    a: &BinaryForm<S>,
    b: &BinaryForm<S>,
    c: &BinaryForm<S>,
) -> Result<Dp2Report> {
    let disc = discriminant(b, a, c)?;
    let RootCount { total, distinct } = match disc.root_count() {
        Err(Error::ZeroForm) => return Err(Error::DegenerateSeed(seed)),
        other => other?,
    };
    let lambda = singular_fiber_count(FIBRE_K_SQUARED)?;
    let mu = total as i64;
    let base = Hirzebruch::new(0)?;
    let xi_class = RuledClass::new(lambda, mu);
    let two_k_plus_xi = 2 * base.canonical() + xi_class;
    let effective = two_k_plus_xi.is_effective();
    Ok(Dp2Report {
        seed,
        lambda,
        discriminant_degree: disc.degree(),
        mu,
        mu_distinct: distinct as i64,
        xi_class,
        two_k_plus_xi,
        two_k_plus_xi_effective: effective,
        nonruled: effective,
        generic: distinct == total,
    })
}

/// Draws `a`, `b`, `c` over the prime field from a ChaCha stream seeded with
/// `seed`. Degenerate draws are reported as errors, never resampled.
pub fn dp2_report_with(seed: u64, mode: DrawMode) -> Result<Dp2Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = random_form_fp(&mut rng, 2);
    let mut b = random_form_fp(&mut rng, 4);
    let c = random_form_fp(&mut rng, 6);
    if mode != DrawMode::Generic {
        a = BinaryForm::zero(2);
    }
    if mode == DrawMode::Degenerate {
        b = BinaryForm::zero(4);
    }
    dp2_report_from_forms(seed, &a, &b, &c)
}

pub fn dp2_report(seed: u64) -> Result<Dp2Report> {
    dp2_report_with(seed, DrawMode::Generic)
}
