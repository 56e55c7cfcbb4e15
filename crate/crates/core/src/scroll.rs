//! Linear systems and intersection numbers on rational scrolls
//! `Proj(O(d_1) + ... + O(d_k))` over the projective line.
//!
//! A scroll is kept in normal form `d_1 >= ... >= d_k = 0`. Its Picard group is
//! spanned by the tautological class `M` and the fibre class `L`, and the
//! complete linear system `|aM + bL|` is spanned by monomials
//! `c(t_1, t_2) x_1^{i_1} ... x_k^{i_k}` with `sum i_j = a`, where the binary
//! form `c` has degree `b + sum i_j d_j`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Degree vector of a scroll in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Scroll {
    degrees: Vec<i64>,
}

impl Scroll {
    /// Accepts only vectors that are already in normal form.
    pub fn new(degrees: Vec<i64>) -> Result<Self> {
        if degrees.len() < 2 {
            return Err(Error::ScrollRank(degrees.len()));
        }
        let sorted = degrees.windows(2).all(|w| w[0] >= w[1]);
        if !sorted || degrees[degrees.len() - 1] != 0 {
            return Err(Error::UnnormalizedScroll(degrees));
        }
        Ok(Self { degrees })
    }

    /// Sorts the degrees and twists so that the smallest one is 0. Twisting the
    /// bundle by a line bundle does not change the projectivization.
    pub fn normalize(mut degrees: Vec<i64>) -> Result<Self> {
        if degrees.len() < 2 {
            return Err(Error::ScrollRank(degrees.len()));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let min = degrees[degrees.len() - 1];
        for d in &mut degrees {
            *d -= min;
        }
        Self::new(degrees)
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// `d_j`, 1-based.
    pub fn degree(&self, j: usize) -> i64 {
        self.degrees[j - 1]
    }

    pub fn degree_sum(&self) -> i64 {
        self.degrees.iter().sum()
    }

    pub fn subscroll(&self, j: usize) -> Result<SubscrollIndex> {
        SubscrollIndex::new(j, self.rank())
    }
}

impl fmt::Display for Scroll {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P(")?;
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "O({d})")?;
        }
        write!(f, ")")
    }
}

/// The class `aM + bL`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    pub a: i64,
    pub b: i64,
}

impl DivisorClass {
    pub const M: Self = Self { a: 1, b: 0 };
    pub const L: Self = Self { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }
}

impl Add for DivisorClass {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for DivisorClass {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for DivisorClass {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul<DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self * rhs.a, self * rhs.b)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.b {
            0 => write!(f, "{}M", self.a),
            b if b < 0 => write!(f, "{}M - {}L", self.a, -b),
            b => write!(f, "{}M + {}L", self.a, b),
        }
    }
}

/// One spanning monomial of a linear system together with the degree of its
/// coefficient form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub exponents: Vec<u32>,
    pub coeff_degree: i64,
}

impl Monomial {
    pub fn is_admissible(&self) -> bool {
        self.coeff_degree >= 0
    }

    /// `i_1 + ... + i_{j-1}`: the vanishing order along `Y_j`.
    pub fn order_along(&self, j: SubscrollIndex) -> u32 {
        self.exponents[..j.get() - 1].iter().sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        write!(f, " [deg {}]", self.coeff_degree)
    }
}

/// Index `j` of the coordinate subscroll `Y_j = {x_1 = ... = x_{j-1} = 0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SubscrollIndex(usize);

impl SubscrollIndex {
    pub fn new(j: usize, rank: usize) -> Result<Self> {
        if (2..=rank).contains(&j) {
            Ok(Self(j))
        } else {
            Err(Error::SubscrollIndex { j, rank })
        }
    }

    pub fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for SubscrollIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y{}", self.0)
    }
}

fn compositions(total: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if parts == 1 {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in 0..=total {
        prefix.push(first);
        compositions(total - first, parts - 1, prefix, out);
        prefix.pop();
    }
}

/// Admissible monomials of `|aM + bL|`, in ascending lexicographic order of
/// exponent vectors. Empty when `a < 0`.
pub fn monomials(scroll: &Scroll, cls: DivisorClass) -> Vec<Monomial> {
    let Ok(a) = u32::try_from(cls.a) else {
        return Vec::new();
    };
    let mut all = Vec::new();
    compositions(a, scroll.rank(), &mut Vec::with_capacity(scroll.rank()), &mut all);
    all.into_iter()
        .map(|exponents| {
            let coeff_degree = cls.b
                + exponents
                    .iter()
                    .zip(scroll.degrees())
                    .map(|(&i, &d)| i64::from(i) * d)
                    .sum::<i64>();
            Monomial { exponents, coeff_degree }
        })
        .filter(Monomial::is_admissible)
        .collect()
}

/// Dimension of the space of sections of `aM + bL`.
pub fn h0(scroll: &Scroll, cls: DivisorClass) -> u64 {
    monomials(scroll, cls)
        .iter()
        .map(|m| m.coeff_degree as u64 + 1)
        .sum()
}

/// The system is nonempty iff `a >= 0` and the pure `x_1^a` term is admissible.
pub fn is_nonempty(scroll: &Scroll, cls: DivisorClass) -> bool {
    cls.a >= 0 && i128::from(cls.a) * i128::from(scroll.degree(1)) + i128::from(cls.b) >= 0
}

fn require_nonempty(scroll: &Scroll, cls: DivisorClass) -> Result<()> {
    if is_nonempty(scroll, cls) {
        Ok(())
    } else {
        Err(Error::EmptySystem { a: cls.a, b: cls.b })
    }
}

/// Reid's criterion: a general member of `|aM + bL|` has multiplicity at least
/// `q >= 1` along `Y_j` iff `a d_j + b + (d_1 - d_j)(q - 1) < 0`.
pub fn mult_at_least(scroll: &Scroll, cls: DivisorClass, j: SubscrollIndex, q: u64) -> bool {
    if q == 0 {
        return true;
    }
    let dj = i128::from(scroll.degree(j.get()));
    let gap = i128::from(scroll.degree(1)) - dj;
    i128::from(cls.a) * dj + i128::from(cls.b) + gap * (i128::from(q) - 1) < 0
}

/// Multiplicity of a general member along `Y_j`, from the closed form.
pub fn mult_subscroll(scroll: &Scroll, cls: DivisorClass, j: SubscrollIndex) -> Result<u64> {
    require_nonempty(scroll, cls)?;
    let dj = i128::from(scroll.degree(j.get()));
    let slack = i128::from(cls.a) * dj + i128::from(cls.b);
    if slack >= 0 {
        return Ok(0);
    }
    // slack < 0 together with a*d_1 + b >= 0 forces d_1 > d_j.
    let gap = i128::from(scroll.degree(1)) - dj;
    let q = (-slack + gap - 1) / gap;
    Ok(q as u64)
}

/// Multiplicity along `Y_j` by enumerating every admissible monomial.
pub fn mult_subscroll_oracle(scroll: &Scroll, cls: DivisorClass, j: SubscrollIndex) -> Result<u64> {
    monomials(scroll, cls)
        .iter()
        .map(|m| u64::from(m.order_along(j)))
        .min()
        .ok_or(Error::EmptySystem { a: cls.a, b: cls.b })
}

/// Largest coordinate subscroll contained in the base locus, if any.
pub fn base_locus(scroll: &Scroll, cls: DivisorClass) -> Result<Option<SubscrollIndex>> {
    require_nonempty(scroll, cls)?;
    Ok((2..=scroll.rank())
        .find(|&j| {
            i128::from(cls.a) * i128::from(scroll.degree(j)) + i128::from(cls.b) < 0
        })
        .map(SubscrollIndex))
}

/// Intersection number of `k` divisor classes on a rank-`k` scroll, using
/// `M^k = sum d_i`, `M^{k-1} L = 1` and `L^2 = 0`.
pub fn intersection_number(scroll: &Scroll, classes: &[DivisorClass]) -> Result<BigInt> {
    if classes.len() != scroll.rank() {
        return Err(Error::Arity { expected: scroll.rank(), got: classes.len() });
    }
    let top: BigInt = classes.iter().map(|c| BigInt::from(c.a)).product();
    let mut total = top * BigInt::from(scroll.degree_sum());
    for (i, ci) in classes.iter().enumerate() {
        if ci.b == 0 {
            continue;
        }
        let rest = classes
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .fold(BigInt::one(), |acc, (_, c)| acc * c.a);
        if !rest.is_zero() {
            total += rest * ci.b;
        }
    }
    Ok(total)
}

/// `K_V = -kM + (sum d_i - 2)L`.
pub fn canonical_class(scroll: &Scroll) -> DivisorClass {
    DivisorClass::new(-(scroll.rank() as i64), scroll.degree_sum() - 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scroll(d: &[i64]) -> Scroll {
        Scroll::new(d.to_vec()).unwrap()
    }

    fn cls(a: i64, b: i64) -> DivisorClass {
        DivisorClass::new(a, b)
    }

    #[test]
    fn normal_form() {
        assert!(Scroll::new(vec![0, 1, 0]).is_err());
        assert!(Scroll::new(vec![2, 1]).is_err());
        assert!(Scroll::new(vec![0]).is_err());
        assert_eq!(Scroll::normalize(vec![3, 5, 2, 4]).unwrap().degrees(), &[3, 2, 1, 0]);
        assert_eq!(Scroll::normalize(vec![-1, -1]).unwrap().degrees(), &[0, 0]);
    }

    #[test]
    fn monomial_examples() {
        let m = monomials(&scroll(&[0, 0, 0, 0]), cls(0, 0));
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].coeff_degree, 0);

        let m = monomials(&scroll(&[0, 0, 0, 0]), cls(3, 1));
        assert_eq!(m.len(), 20);
        assert!(m.iter().all(|m| m.coeff_degree == 1));
        assert!(m.windows(2).all(|w| w[0].exponents < w[1].exponents));

        let m = monomials(&scroll(&[2, 2, 0]), cls(1, -2));
        let exps: Vec<_> = m.iter().map(|m| m.exponents.clone()).collect();
        assert_eq!(exps, vec![vec![0, 1, 0], vec![1, 0, 0]]);
        assert!(m.iter().all(|m| m.coeff_degree == 0));

        assert!(monomials(&scroll(&[1, 0]), cls(-1, 5)).is_empty());
    }

    #[test]
    fn h0_examples() {
        assert_eq!(h0(&scroll(&[0, 0, 0, 0]), cls(0, 0)), 1);
        assert_eq!(h0(&scroll(&[0, 0, 0, 0]), cls(3, 1)), 40);
        assert_eq!(h0(&scroll(&[2, 2, 0]), cls(1, -2)), 2);
        assert_eq!(h0(&scroll(&[2, 2, 0]), cls(-1, 9)), 0);
        assert_eq!(h0(&scroll(&[0, 0]), cls(1, -1)), 0);
    }

    #[test]
    fn mult_examples() {
        let s = scroll(&[0, 0, 0, 0]);
        assert_eq!(mult_subscroll(&s, cls(3, 5), s.subscroll(4).unwrap()).unwrap(), 0);
        assert_eq!(mult_subscroll_oracle(&s, cls(3, 0), s.subscroll(2).unwrap()).unwrap(), 0);

        let s = scroll(&[2, 2, 0]);
        let y3 = s.subscroll(3).unwrap();
        assert_eq!(mult_subscroll(&s, cls(4, -2), y3).unwrap(), 1);
        assert_eq!(mult_subscroll_oracle(&s, cls(4, -2), y3).unwrap(), 1);
        assert!(mult_at_least(&s, cls(4, -2), y3, 1));
        assert!(!mult_at_least(&s, cls(4, -2), y3, 2));

        let s = scroll(&[1, 1, 1, 0]);
        assert_eq!(mult_subscroll(&s, cls(3, -1), s.subscroll(4).unwrap()).unwrap(), 1);

        let s = scroll(&[3, 1, 0, 0]);
        assert_eq!(mult_subscroll_oracle(&s, cls(2, -4), s.subscroll(2).unwrap()).unwrap(), 1);
        assert_eq!(mult_subscroll(&s, cls(2, -4), s.subscroll(2).unwrap()).unwrap(), 1);
    }

    #[test]
    fn empty_system_errors() {
        let s = scroll(&[1, 1, 0]);
        let y2 = s.subscroll(2).unwrap();
        assert_eq!(
            mult_subscroll(&s, cls(2, -3), y2),
            Err(Error::EmptySystem { a: 2, b: -3 })
        );
        assert!(mult_subscroll_oracle(&s, cls(2, -3), y2).is_err());
        assert!(base_locus(&s, cls(-1, 0)).is_err());
        assert!(s.subscroll(1).is_err());
        assert!(s.subscroll(4).is_err());
    }

    #[test]
    fn base_locus_examples() {
        assert_eq!(base_locus(&scroll(&[0, 0, 0, 0]), cls(3, 1)).unwrap(), None);
        let s = scroll(&[1, 1, 1, 0]);
        assert_eq!(base_locus(&s, cls(3, -1)).unwrap(), Some(s.subscroll(4).unwrap()));
        let s = scroll(&[2, 2, 0]);
        assert_eq!(base_locus(&s, cls(4, -2)).unwrap(), Some(s.subscroll(3).unwrap()));
    }

    #[test]
    fn intersection_examples() {
        let (m, l) = (DivisorClass::M, DivisorClass::L);
        let s = scroll(&[0, 0, 0, 0]);
        assert_eq!(intersection_number(&s, &[m, m, m, l]).unwrap(), BigInt::from(1));
        assert_eq!(
            intersection_number(&scroll(&[2, 1, 1, 0]), &[m, m, m, m]).unwrap(),
            BigInt::from(4)
        );
        // (K_V + X)^3 X for X = 3M + L on P^1 x P^3.
        let x = cls(3, 1);
        let kx = canonical_class(&s) + x;
        assert_eq!(kx, cls(-1, -1));
        assert_eq!(intersection_number(&s, &[x, kx, kx, kx]).unwrap(), BigInt::from(-10));
        // Same product with the fibre coefficient flipped, expanded by hand:
        // -3*0 + 1*(-1)^3 + 3*(1*3*(-1)^2) = 8.
        let other = cls(-1, 1);
        assert_eq!(
            intersection_number(&s, &[x, other, other, other]).unwrap(),
            BigInt::from(8)
        );
        assert_eq!(intersection_number(&s, &[m, l, l, m]).unwrap(), BigInt::zero());
        assert_eq!(
            intersection_number(&s, &[m, m, m]),
            Err(Error::Arity { expected: 4, got: 3 })
        );
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_class(&scroll(&[0, 0, 0, 0])), cls(-4, -2));
        assert_eq!(canonical_class(&scroll(&[2, 1, 1, 0])), cls(-4, 2));
        assert_eq!(canonical_class(&scroll(&[2, 2, 0])), cls(-3, 2));
    }

    #[test]
    fn display() {
        assert_eq!(scroll(&[2, 0]).to_string(), "P(O(2) + O(0))");
        assert_eq!(cls(3, -1).to_string(), "3M - 1L");
        let m = &monomials(&scroll(&[0, 0]), cls(2, 0))[1];
        assert_eq!(m.to_string(), "x1*x2 [deg 0]");
    }
}
