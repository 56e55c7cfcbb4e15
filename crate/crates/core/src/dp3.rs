//! Cubic del Pezzo fibrations `X in |3M + nL|` on the scroll
//! `P(O(d1) + O(d2) + O(d3) + O)`: smoothness, numerical invariants, the conic
//! bundle obtained by degenerating `X`, and the rationality verdict.

use std::fmt;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ruled::{Hirzebruch, RuledClass};
use crate::scroll::{canonical_class, intersection_number, DivisorClass, Scroll};

/// Largest accepted magnitude for any family parameter. Keeps every closed-form
/// invariant well inside `i64`.
pub const MAX_PARAM: i64 = 1 << 40;

/// A general member of `|3M + nL|` on the rank-4 scroll with degrees
/// `(d1, d2, d3, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DP3Family {
    pub d1: i64,
    pub d2: i64,
    pub d3: i64,
    pub n: i64,
}

impl DP3Family {
    pub fn new(d1: i64, d2: i64, d3: i64, n: i64) -> Result<Self> {
        if let Some(&bad) = [d1, d2, d3, n].iter().find(|v| v.abs() > MAX_PARAM) {
            return Err(Error::FamilyOutOfRange(bad));
        }
        if !(d1 >= d2 && d2 >= d3 && d3 >= 0) {
            return Err(Error::UnsortedFamily { d1, d2, d3 });
        }
        Ok(Self { d1, d2, d3, n })
    }

    pub fn scroll(&self) -> Scroll {
        Scroll::new(vec![self.d1, self.d2, self.d3, 0]).expect("family degrees are sorted")
    }

    pub fn divisor(&self) -> DivisorClass {
        DivisorClass::new(3, self.n)
    }

    fn degree_sum(&self) -> i64 {
        self.d1 + self.d2 + self.d3
    }
}

impl fmt::Display for DP3Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.d1, self.d2, self.d3, self.n)
    }
}

/// Position of `K_X^2` relative to the interior of the Mori cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConePosition {
    Inside,
    Outside,
    Undetermined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Rational,
    Nonrational,
    NotGeneralSmoothPic2,
}

/// Which argument settles the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Route {
    MainTheoremRational,
    ShokurovConicBundle,
    CubicThreefold,
    None,
}

macro_rules! token_display {
    ($($ty:ty),*) => {$(
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Debug::fmt(self, f)
            }
        }
    )*};
}
token_display!(ConePosition, Verdict, Route);

/// Invariants of the conic bundle `Y~ -> F_r` obtained from the degeneration
/// `Y = {x1 F + x2 G = 0}` of `X`, after blowing up `Y_3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegenerationData {
    /// `r = d1 - d2`, the base is `F_r`.
    pub r: i64,
    /// Degeneration divisor `5 s_inf + mu l`.
    pub delta: RuledClass,
    pub mu: i64,
    /// `K_S^2` of the surface over the section `s_0`.
    pub ks2: i64,
    pub two_k_plus_delta: RuledClass,
    pub shokurov: bool,
    /// Number of ordinary double points of `Y`.
    pub odp: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub family: DP3Family,
    pub smooth_pic2: bool,
    pub k3: i64,
    pub euler: i64,
    pub cone: ConePosition,
    pub degeneration: Option<DegenerationData>,
    pub verdict: Verdict,
    pub route: Route,
}

/// The necessary conditions for a smooth general member with Picard rank 2:
/// `d1 >= -n`, `3 d3 >= -n`, `d1 = -n` or `d2 >= -n`, and `3 d3 != -n` when
/// `d2 = d3` and `n < 0`.
pub fn necessary_smooth_pic2(f: &DP3Family) -> bool {
    let m = -f.n;
    f.d1 >= m
        && 3 * f.d3 >= m
        && (f.d1 == m || f.d2 >= m)
        && !(f.d2 == f.d3 && f.n < 0 && 3 * f.d3 == m)
}

/// The sufficient characterization, taken as the definition.
pub fn smooth_pic2(f: &DP3Family) -> bool {
    let m = -f.n;
    let cond1 = f.d1 != 0 || f.n > 0;
    let cond2 = (f.d1 == m && 3 * f.d3 >= m) || (f.d1 > m && f.d2 >= m && 3 * f.d3 >= m);
    let cond3 = !(f.d2 == f.d3 && f.n < 0) || 3 * f.d3 > m;
    cond1 && cond2 && cond3
}

/// `K_X^3 = 6(d1 + d2 + d3) + 8n - 18`.
pub fn k_cubed(f: &DP3Family) -> i64 {
    6 * f.degree_sum() + 8 * f.n - 18
}

/// `K_X^3 = (K_V + X)^3 X` computed in the Chow ring of the scroll.
pub fn k_cubed_adjunction(f: &DP3Family) -> i64 {
    let scroll = f.scroll();
    let x = f.divisor();
    let kx = canonical_class(&scroll) + x;
    intersection_number(&scroll, &[kx, kx, kx, x])
        .expect("rank-4 scroll takes four classes")
        .to_i64()
        .expect("bounded family parameters")
}

/// Topological Euler characteristic `18 - 24(d1 + d2 + d3) - 32n`.
pub fn euler_characteristic(f: &DP3Family) -> i64 {
    18 - 24 * f.degree_sum() - 32 * f.n
}

pub fn cone_position(f: &DP3Family) -> ConePosition {
    let holds = 5 * f.n >= 12 - 3 * f.degree_sum();
    match (holds, f.n < 0) {
        (false, _) => ConePosition::Inside,
        (true, true) => ConePosition::Outside,
        (true, false) => ConePosition::Undetermined,
    }
}

/// Node count of `Y`: `2d1 + 2d2 + 4d3 + 4n`.
pub fn odp_count(f: &DP3Family) -> i64 {
    2 * f.d1 + 2 * f.d2 + 4 * f.d3 + 4 * f.n
}

/// Node count as `C . Z` on `Y_3 = F_{d3}`, where
/// `C ~ 2 s_0 + (n + d1) l` and `Z ~ 2 s_0 + (n + d2) l`.
pub fn odp_intersection(f: &DP3Family) -> i64 {
    let y3 = Hirzebruch::new(f.d3).expect("d3 >= 0");
    let c = y3.from_tautological(2, f.n + f.d1);
    let z = y3.from_tautological(2, f.n + f.d2);
    y3.intersect(c, z)
}

/// `mu = s_0 . Delta = 5d1 + 4d2 - 2d3 + 3n`.
pub fn mu(f: &DP3Family) -> i64 {
    5 * f.d1 + 4 * f.d2 - 2 * f.d3 + 3 * f.n
}

/// The inequality `3d1 + 6d2 - 2d3 + 3n >= 4`.
pub fn shokurov_closed_form(f: &DP3Family) -> bool {
    3 * f.d1 + 6 * f.d2 - 2 * f.d3 + 3 * f.n >= 4
}

fn require_smooth(f: &DP3Family) -> Result<()> {
    if smooth_pic2(f) {
        Ok(())
    } else {
        Err(Error::NotSmoothPic2 { d1: f.d1, d2: f.d2, d3: f.d3, n: f.n })
    }
}

pub fn degeneration(f: &DP3Family) -> Result<DegenerationData> {
    require_smooth(f)?;
    let r = f.d1 - f.d2;
    let base = Hirzebruch::new(r).expect("d1 >= d2");
    let mu = mu(f);
    let delta = RuledClass::new(5, mu);
    let two_k_plus_delta = 2 * base.canonical() + delta;
    Ok(DegenerationData {
        r,
        delta,
        mu,
        ks2: 8 - mu,
        two_k_plus_delta,
        shokurov: two_k_plus_delta.is_effective(),
        odp: odp_count(f),
    })
}

/// `|2K + Delta| != 0` on `F_r`, which makes the degeneration nonruled.
pub fn shokurov_nonruled(f: &DP3Family) -> Result<bool> {
    degeneration(f).map(|d| d.shokurov)
}

/// The two available values of `K_S^2`: `8 - mu`, used throughout, and the
/// value from adjunction on `B = P(O(d1) + O(d3) + O)` with
/// `S ~ 2T + (d1 + n)F`. They agree only when `d2 = d3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ks2Diagnostic {
    pub from_mu: i64,
    pub adjunction_on_b: i64,
    pub agrees: bool,
}

pub fn ks2_diagnostic(f: &DP3Family) -> Ks2Diagnostic {
    let b = Scroll::new(vec![f.d1, f.d3, 0]).expect("d1 >= d3 >= 0");
    let s = DivisorClass::new(2, f.d1 + f.n);
    let ks = canonical_class(&b) + s;
    let adjunction_on_b = intersection_number(&b, &[ks, ks, s])
        .expect("rank-3 scroll takes three classes")
        .to_i64()
        .expect("bounded family parameters");
    let from_mu = 8 - mu(f);
    Ks2Diagnostic { from_mu, adjunction_on_b, agrees: from_mu == adjunction_on_b }
}

const RATIONAL_FAMILY: DP3Family = DP3Family { d1: 0, d2: 0, d3: 0, n: 1 };
const CUBIC_THREEFOLD_FAMILY: DP3Family = DP3Family { d1: 1, d2: 0, d3: 0, n: 0 };

pub fn classify(f: &DP3Family) -> ClassificationReport {
    let smooth = smooth_pic2(f);
    let degeneration = degeneration(f).ok();
    let (verdict, route) = match degeneration {
        None => (Verdict::NotGeneralSmoothPic2, Route::None),
        Some(_) if *f == RATIONAL_FAMILY => (Verdict::Rational, Route::MainTheoremRational),
        Some(_) if *f == CUBIC_THREEFOLD_FAMILY => (Verdict::Nonrational, Route::CubicThreefold),
        Some(d) => {
            assert!(
                d.shokurov,
                "family {f} is smooth with Picard rank 2 but |2K + Delta| is empty"
            );
            (Verdict::Nonrational, Route::ShokurovConicBundle)
        }
    };
    ClassificationReport {
        family: *f,
        smooth_pic2: smooth,
        k3: k_cubed(f),
        euler: euler_characteristic(f),
        cone: cone_position(f),
        degeneration,
        verdict,
        route,
    }
}

/// Lexicographic iterator over `(d1, d2, d3, n)` with
/// `max_d1 >= d1 >= d2 >= d3 >= 0` and `n_min <= n <= n_max`.
#[derive(Debug, Clone)]
pub struct Families {
    max_d1: i64,
    n_min: i64,
    n_max: i64,
    next: Option<DP3Family>,
}

impl Iterator for Families {
    type Item = DP3Family;

    fn next(&mut self) -> Option<DP3Family> {
        let current = self.next?;
        let mut f = current;
        self.next = if f.n < self.n_max {
            f.n += 1;
            Some(f)
        } else if f.d3 < f.d2 {
            Some(DP3Family { d3: f.d3 + 1, n: self.n_min, ..f })
        } else if f.d2 < f.d1 {
            Some(DP3Family { d2: f.d2 + 1, d3: 0, n: self.n_min, ..f })
        } else if f.d1 < self.max_d1 {
            Some(DP3Family { d1: f.d1 + 1, d2: 0, d3: 0, n: self.n_min })
        } else {
            None
        };
        Some(current)
    }
}

pub fn families(max_d1: i64, n_min: i64, n_max: i64) -> Result<Families> {
    let in_range = [max_d1, n_min, n_max].iter().all(|v| v.abs() <= MAX_PARAM);
    if max_d1 < 0 || n_min > n_max || !in_range {
        return Err(Error::InvalidRange { max_d1, n_min, n_max });
    }
    Ok(Families {
        max_d1,
        n_min,
        n_max,
        next: Some(DP3Family { d1: 0, d2: 0, d3: 0, n: n_min }),
    })
}

/// Number of families [`families`] yields: sorted triples times the `n` range.
pub fn family_count(max_d1: i64, n_min: i64, n_max: i64) -> u128 {
    let m = (max_d1 + 3) as u128;
    let triples = m * (m - 1) * (m - 2) / 6;
    triples * (n_max - n_min + 1) as u128
}

pub fn enumerate(
    max_d1: i64,
    n_min: i64,
    n_max: i64,
) -> Result<impl Iterator<Item = ClassificationReport>> {
    Ok(families(max_d1, n_min, n_max)?.map(|f| classify(&f)))
}

/// Rationality criterion for degree-4 del Pezzo fibrations with normal fibres.
pub fn dp4_rational(euler: i64) -> bool {
    matches!(euler, 0 | -4 | -8)
}
