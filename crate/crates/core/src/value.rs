//! Metric result values: exact rationals, with an exact radical-sum ratio
//! fallback for the (irrational) geometric-mean variants.

use crate::radical::RadicalSum;
use crate::rational::{rat_to_f64, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MetricValue {
    Rational(Rat),
    /// An exact ratio of radical sums that does not reduce to a rational.
    Radical { num: RadicalSum, den: RadicalSum },
}

impl MetricValue {
    /// Builds from a radical-sum ratio, collapsing to `Rational` when exact
    /// division succeeds.
    pub fn from_ratio(num: RadicalSum, den: RadicalSum) -> Self {
        match num.div_exact(&den) {
            Some(r) => MetricValue::Rational(r),
            None => MetricValue::Radical { num, den },
        }
    }

    pub fn rational(r: Rat) -> Self {
        MetricValue::Rational(r)
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            MetricValue::Rational(r) => Some(r),
            MetricValue::Radical { .. } => None,
        }
    }

    /// Exact mathematical equality (cross-multiplied for radical ratios).
    pub fn eq_exact(&self, other: &MetricValue) -> bool {
        let (n1, d1) = self.as_radical_ratio();
        let (n2, d2) = other.as_radical_ratio();
        n1.mul(&d2) == n2.mul(&d1)
    }

    fn as_radical_ratio(&self) -> (RadicalSum, RadicalSum) {
        match self {
            MetricValue::Rational(r) => (
                RadicalSum::from_rat(r.clone()),
                RadicalSum::from_rat(Rat::from_integer(1.into())),
            ),
            MetricValue::Radical { num, den } => (num.clone(), den.clone()),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            MetricValue::Rational(r) => rat_to_f64(r),
            MetricValue::Radical { num, den } => num.to_f64() / den.to_f64(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};

    #[test]
    fn ratio_collapses_when_rational() {
        let num = RadicalSum::sqrt_of_rat(&rint(2)).scale(&rint(3));
        let den = RadicalSum::sqrt_of_rat(&rint(2)).scale(&rint(6));
        assert_eq!(MetricValue::from_ratio(num, den), MetricValue::rational(rat(1, 2)));
    }

    #[test]
    fn cross_multiplied_equality() {
        // √2/2 == 1/√2
        let a = MetricValue::from_ratio(RadicalSum::sqrt_of_rat(&rint(2)), RadicalSum::from_rat(rint(2)));
        let b = MetricValue::from_ratio(RadicalSum::from_rat(rint(1)), RadicalSum::sqrt_of_rat(&rint(2)));
        assert!(a.eq_exact(&b));
        assert!(!a.eq_exact(&MetricValue::rational(rat(1, 2))));
    }
}
