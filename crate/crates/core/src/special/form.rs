//! Homogeneous binary forms `f(t0, t1)` over an exact field.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::poly;
use super::scalar::{Fp, Scalar, PRIME};
use crate::error::{Error, Result};

/// A binary form of declared degree `d`; `coeffs[i]` multiplies
/// `t0^i t1^(d - i)`, so setting `t1 = 1` leaves the ascending polynomial
/// `coeffs` in `t0`. The missing point `[1 : 0]` is a root exactly when the top
/// coefficient vanishes.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryForm<S> {
    degree: usize,
    coeffs: Vec<S>,
}

/// Roots on the projective line: with multiplicity, and without.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCount {
    pub total: usize,
    pub distinct: usize,
}

impl<S: Scalar> BinaryForm<S> {
    pub fn new(degree: usize, coeffs: Vec<S>) -> Result<Self> {
        if coeffs.len() != degree + 1 {
            return Err(Error::FormLength { degree, len: coeffs.len() });
        }
        Ok(Self { degree, coeffs })
    }

    pub fn from_ints(degree: usize, coeffs: &[i64]) -> Result<Self> {
        Self::new(degree, coeffs.iter().map(|&c| S::from_i64(c)).collect())
    }

    pub fn zero(degree: usize) -> Self {
        Self { degree, coeffs: vec![S::zero(); degree + 1] }
    }

    pub fn constant(c: S) -> Self {
        Self { degree: 0, coeffs: vec![c] }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Degree of the dehomogenization at `t1 = 1`; `None` for the zero form.
    pub fn affine_degree(&self) -> Option<usize> {
        poly::degree(&self.coeffs)
    }

    /// Multiplicity of the root `[1 : 0]`: the number of trimmed top
    /// coefficients.
    pub fn order_at_infinity(&self) -> usize {
        self.affine_degree().map_or(self.degree, |a| self.degree - a)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut coeffs = vec![S::zero(); self.degree + other.degree + 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + x.clone() * y.clone();
            }
        }
        Self { degree: self.degree + other.degree, coeffs }
    }

    pub fn scale(&self, k: S) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c.clone() * k.clone()).collect();
        Self { degree: self.degree, coeffs }
    }

    /// Difference of two forms of the same degree.
    fn sub_same_degree(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree, other.degree);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| x.clone() - y.clone())
            .collect();
        Self { degree: self.degree, coeffs }
    }

    pub fn root_count(&self) -> Result<RootCount> {
        let Some(affine) = self.affine_degree() else {
            return Err(Error::ZeroForm);
        };
        let p = &self.coeffs[..=affine];
        let repeated = S::gcd_degree(p, &poly::derivative(p)).unwrap_or(0);
        let at_infinity = usize::from(affine < self.degree);
        Ok(RootCount { total: self.degree, distinct: affine - repeated + at_infinity })
    }
}

impl<S: Scalar> fmt::Display for BinaryForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            let j = self.degree - i;
            match i {
                0 => {}
                1 => write!(f, "*t0")?,
                _ => write!(f, "*t0^{i}")?,
            }
            match j {
                0 => {}
                1 => write!(f, "*t1")?,
                _ => write!(f, "*t1^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `b^2 - 4ac`: the locus where the conic `a x^2 + b xy + c y^2` splits.
/// Needs `deg a + deg c = 2 deg b` for the result to be a form.
pub fn discriminant<S: Scalar>(
    b: &BinaryForm<S>,
    a: &BinaryForm<S>,
    c: &BinaryForm<S>,
) -> Result<BinaryForm<S>> {
    if a.degree + c.degree != 2 * b.degree {
        return Err(Error::InhomogeneousDiscriminant { a: a.degree, b: b.degree, c: c.degree });
    }
    let four_ac = a.mul(c).scale(S::from_i64(4));
    Ok(b.mul(b).sub_same_degree(&four_ac))
}

pub fn root_count<S: Scalar>(f: &BinaryForm<S>) -> Result<RootCount> {
    f.root_count()
}

/// Uniform coefficients in the prime field.
pub fn random_form_fp<R: Rng + ?Sized>(rng: &mut R, degree: usize) -> BinaryForm<Fp> {
    let coeffs = (0..=degree).map(|_| Fp::new(rng.random_range(0..PRIME))).collect();
    BinaryForm { degree, coeffs }
}

/// Integer coefficients in `-bound..=bound`, as rationals.
pub fn random_form_rational<R: Rng + ?Sized>(
    rng: &mut R,
    degree: usize,
    bound: i64,
) -> BinaryForm<BigRational> {
    let coeffs = (0..=degree)
        .map(|_| BigRational::from_integer(BigInt::from(rng.random_range(-bound..=bound))))
        .collect();
    BinaryForm { degree, coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type Q = BigRational;

    #[test]
    fn generic_discriminant_has_degree_eight() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = random_form_rational(&mut rng, 2, 9);
        let b = random_form_rational(&mut rng, 4, 9);
        let c = random_form_rational(&mut rng, 6, 9);
        let d = discriminant(&b, &a, &c).unwrap();
        assert_eq!(d.degree(), 8);
        assert_eq!(root_count(&d).unwrap().total, 8);
    }

    #[test]
    fn constant_discriminant() {
        let one = BinaryForm::<Q>::constant(Q::from_i64(1));
        let d = discriminant(&BinaryForm::zero(0), &one, &one).unwrap();
        assert_eq!(d, BinaryForm::constant(Q::from_i64(-4)));
        assert_eq!(d.degree(), 0);
        assert_eq!(root_count(&d).unwrap(), RootCount { total: 0, distinct: 0 });
    }

    #[test]
    fn square_discriminant() {
        // b = (t0 - t1)(t0 + t1)(t0 - 2 t1)(t0 + 3 t1), a = 0.
        let b = BinaryForm::<Q>::from_ints(4, &[6, -1, -7, 1, 1]).unwrap();
        let d = discriminant(&b, &BinaryForm::zero(2), &BinaryForm::from_ints(6, &[1; 7]).unwrap())
            .unwrap();
        assert_eq!(d, b.mul(&b));
        assert_eq!(root_count(&b).unwrap(), RootCount { total: 4, distinct: 4 });
        assert_eq!(root_count(&d).unwrap(), RootCount { total: 8, distinct: 4 });
    }

    #[test]
    fn double_roots_at_zero_and_infinity() {
        // (t0 t1)^2
        let f = BinaryForm::<Q>::from_ints(4, &[0, 0, 1, 0, 0]).unwrap();
        assert_eq!(f.order_at_infinity(), 2);
        assert_eq!(root_count(&f).unwrap(), RootCount { total: 4, distinct: 2 });
        let g = BinaryForm::<Fp>::from_ints(4, &[0, 0, 1, 0, 0]).unwrap();
        assert_eq!(root_count(&g).unwrap(), RootCount { total: 4, distinct: 2 });
        // t1^3: a triple root at infinity only.
        let h = BinaryForm::<Q>::from_ints(3, &[1, 0, 0, 0]).unwrap();
        assert_eq!(root_count(&h).unwrap(), RootCount { total: 3, distinct: 1 });
    }

    #[test]
    fn errors() {
        assert_eq!(root_count(&BinaryForm::<Fp>::zero(3)), Err(Error::ZeroForm));
        assert!(BinaryForm::<Fp>::from_ints(2, &[1, 2]).is_err());
        let f = BinaryForm::<Fp>::zero(1);
        assert_eq!(
            discriminant(&f, &f, &BinaryForm::zero(2)),
            Err(Error::InhomogeneousDiscriminant { a: 1, b: 1, c: 2 })
        );
    }

    #[test]
    fn display() {
        let f = BinaryForm::<Q>::from_ints(2, &[1, 0, -3]).unwrap();
        assert_eq!(f.to_string(), "(1)*t1^2 + (-3)*t0^2");
    }

    fn linear_factors() -> impl Strategy<Value = Vec<(i64, i64)>> {
        prop::collection::vec((-3i64..4, -3i64..4), 1..6)
            .prop_filter("no zero factor", |v| v.iter().all(|&(p, q)| p != 0 || q != 0))
    }

    /// Distinct points of P^1 among the factors `p t0 - q t1`, by cross products.
    fn distinct_points(factors: &[(i64, i64)]) -> usize {
        let mut reps: Vec<(i64, i64)> = Vec::new();
        for &(p, q) in factors {
            if !reps.iter().any(|&(r, s)| p * s - q * r == 0) {
                reps.push((p, q));
            }
        }
        reps.len()
    }

    proptest! {
        #[test]
        fn root_count_of_product_of_linear_forms(factors in linear_factors()) {
            let f = factors.iter().fold(BinaryForm::<Q>::constant(Q::from_i64(1)), |acc, &(p, q)| {
                acc.mul(&BinaryForm::from_ints(1, &[-q, p]).unwrap())
            });
            let count = root_count(&f).unwrap();
            prop_assert_eq!(count.total, factors.len());
            prop_assert_eq!(count.distinct, distinct_points(&factors));
            prop_assert!(count.distinct <= count.total);
        }

        #[test]
        fn discriminant_degree_is_twice_deg_b(seed in any::<u64>(), db in 0usize..5, da in 0usize..5) {
            prop_assume!(da <= 2 * db);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_form_fp(&mut rng, da);
            let b = random_form_fp(&mut rng, db);
            let c = random_form_fp(&mut rng, 2 * db - da);
            let d = discriminant(&b, &a, &c).unwrap();
            prop_assert_eq!(d.degree(), 2 * db);
            if !d.is_zero() {
                prop_assert_eq!(root_count(&d).unwrap().total, 2 * db);
            }
        }
    }
}
