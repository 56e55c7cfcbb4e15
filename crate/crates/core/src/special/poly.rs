//! Dense univariate polynomials as ascending coefficient vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::Scalar;

pub fn trim<S: Zero>(mut p: Vec<S>) -> Vec<S> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// `None` for the zero polynomial.
pub fn degree<S: Zero>(p: &[S]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn derivative<S: Scalar>(p: &[S]) -> Vec<S> {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| S::from_i64(i as i64) * c.clone())
            .collect(),
    )
}

fn rem<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let db = degree(b).expect("division by the zero polynomial");
    let inv = b[db].inverse().expect("leading coefficient is nonzero");
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let factor = r[dr].clone() * inv.clone();
        let shift = dr - db;
        for (i, c) in b[..=db].iter().enumerate() {
            r[i + shift] = r[i + shift].clone() - factor.clone() * c.clone();
        }
        r = trim(r);
    }
    r
}

/// Monic gcd by the Euclidean algorithm; zero if both inputs are zero.
pub fn gcd_euclid<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(d) = degree(&a) {
        let inv = a[d].inverse().expect("nonzero");
        for c in &mut a {
            *c = c.clone() * inv.clone();
        }
    }
    a
}

pub fn clear_denominators(p: &[BigRational]) -> Vec<BigInt> {
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    trim(p.iter().map(|c| (c * &lcm).to_integer()).collect())
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn primitive_part(p: &[BigInt]) -> Vec<BigInt> {
    let c = content(p);
    if c.is_zero() {
        return Vec::new();
    }
    let sign = if p.iter().rfind(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) {
        -c
    } else {
        c
    };
    p.iter().map(|x| x / &sign).collect()
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`.
pub fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = degree(b).expect("division by the zero polynomial");
    let Some(da) = degree(a) else {
        return Vec::new();
    };
    if da < db {
        return trim(a.to_vec());
    }
    let lb = &b[db];
    let mut r = trim(a.to_vec());
    let mut steps = da - db + 1;
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in &mut r {
            *c *= lb;
        }
        for (i, c) in b[..=db].iter().enumerate() {
            r[i + shift] -= &lr * c;
        }
        r = trim(r);
        steps -= 1;
    }
    let scale = num_traits::pow(lb.clone(), steps);
    trim(r.into_iter().map(|c| c * &scale).collect())
}

/// Primitive gcd over the integers via the subresultant remainder sequence.
pub fn subresultant_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = (primitive_part(&trim(a.to_vec())), primitive_part(&trim(b.to_vec())));
    if degree(&a) < degree(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    if b.is_empty() {
        return a;
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = degree(&a).unwrap() - degree(&b).unwrap();
        let r = pseudo_rem(&a, &b);
        match degree(&r) {
            None => break,
            Some(0) => return vec![BigInt::one()],
            Some(_) => {}
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        a = b;
        b = r
            .into_iter()
            .map(|c| {
                debug_assert!((&c % &divisor).is_zero());
                c / &divisor
            })
            .collect();
        g = a[degree(&a).unwrap()].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => num_traits::pow(g.clone(), d) / num_traits::pow(h, d - 1),
        };
    }
    primitive_part(&b)
}
