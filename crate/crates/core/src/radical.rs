//! Exact finite sums of the form `Σ c_k · √k` with rational coefficients and
//! squarefree integer kernels.
//!
//! Geometric-mean triplet values introduce square roots of rational weight
//! products; representing running sums in this module keeps oracle/closed-form
//! comparisons exact instead of falling back to floats. Rational values embed
//! with kernel 1.

use crate::rational::{rat_to_f64, Rat};
use num::{BigInt, BigUint, One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Trial-division bound for extracting square factors. Kernels whose square
/// factors all exceed this bound are kept as-is; with the small integer
/// weights this crate targets the bound is never reached.
const FACTOR_BOUND: u64 = 1_000_000;

/// `n = s² · k` with `k` squarefree (up to FACTOR_BOUND); returns `(s, k)`.
fn square_decompose(n: &BigUint) -> (BigUint, BigUint) {
    let mut s = BigUint::one();
    let mut k = BigUint::one();
    let mut rest = n.clone();
    let mut d = 2u64;
    while d <= FACTOR_BOUND {
        let bd = BigUint::from(d);
        if &bd * &bd > rest {
            break;
        }
        let mut mult = 0u32;
        while (&rest % &bd).is_zero() {
            rest /= &bd;
            mult += 1;
        }
        if mult > 0 {
            s *= bd.pow(mult / 2);
            if mult % 2 == 1 {
                k *= BigUint::from(d);
            }
        }
        d += 1;
    }
    (s, k * rest)
}

/// An exact element of the ℚ-module spanned by `√k` for squarefree `k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RadicalSum {
    // kernel (squarefree) -> coefficient; zero coefficients are dropped
    terms: BTreeMap<BigUint, Rat>,
}

impl RadicalSum {
    pub fn zero() -> Self {
        RadicalSum::default()
    }

    pub fn from_rat(r: Rat) -> Self {
        let mut s = RadicalSum::zero();
        s.add_term(BigUint::one(), r);
        s
    }

    /// `√r` for a nonnegative rational: `√(p/q) = √(pq)/q`.
    pub fn sqrt_of_rat(r: &Rat) -> Self {
        assert!(!r.is_negative(), "square root of a negative weight");
        if r.is_zero() {
            return RadicalSum::zero();
        }
        let p = r.numer().magnitude().clone();
        let q = r.denom().magnitude().clone();
        let (s, k) = square_decompose(&(&p * &q));
        let coeff = Rat::new(BigInt::from(s), BigInt::from(q));
        let mut out = RadicalSum::zero();
        out.add_term(k, coeff);
        out
    }

    fn add_term(&mut self, kernel: BigUint, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(kernel.clone()).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&kernel);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, factor: &Rat) -> RadicalSum {
        let mut out = RadicalSum::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c * factor);
        }
        out
    }

    /// Exact product: `√k1·√k2 = g·√(k1/g · k2/g)` with `g = gcd(k1,k2)`.
    pub fn mul(&self, other: &RadicalSum) -> RadicalSum {
        let mut out = RadicalSum::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let g = num::Integer::gcd(k1, k2);
                let kernel = (k1 / &g) * (k2 / &g);
                let coeff = c1 * c2 * Rat::from_integer(BigInt::from(g));
                out.add_term(kernel, coeff);
            }
        }
        out
    }

    /// If `self` is a plain rational (only kernel 1), returns it.
    pub fn as_rat(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (k, c) = self.terms.iter().next().unwrap();
                if k.is_one() {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Exact ratio `self / den` when it is rational: true iff
    /// `self = r · den` term-by-term for a single rational `r`.
    pub fn div_exact(&self, den: &RadicalSum) -> Option<Rat> {
        if den.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.terms.len() != den.terms.len() {
            return None;
        }
        let mut ratio: Option<Rat> = None;
        for ((k1, c1), (k2, c2)) in self.terms.iter().zip(den.terms.iter()) {
            if k1 != k2 {
                return None;
            }
            let r = c1 / c2;
            match &ratio {
                None => ratio = Some(r),
                Some(prev) if *prev == r => {}
                Some(_) => return None,
            }
        }
        ratio
    }

    /// Deterministic float approximation (terms folded in kernel order).
    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .fold(0.0, |acc, (k, c)| acc + rat_to_f64(c) * k.to_f64().unwrap_or(f64::NAN).sqrt())
    }
}
