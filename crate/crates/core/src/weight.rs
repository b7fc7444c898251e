//! Piecewise-constant weight functions attached to presence sets.

use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalSet};
use crate::rational::Rat;
use num::Zero;

/// A step function: disjoint, sorted pieces `(interval, value)`. Pieces may
/// share endpoints; the left piece owns the boundary point. In canonical form
/// touching pieces with equal values are merged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepWeight {
    pieces: Vec<(Interval, Rat)>,
}

impl StepWeight {
    /// Builds and canonicalizes a step weight. Pieces overlapping on more
    /// than a point with different values are rejected.
    pub fn new(raw: Vec<((Rat, Rat), Rat)>) -> Result<Self> {
        let mut pieces = raw
            .into_iter()
            .map(|((b, e), v)| Interval::new(b, e).map(|iv| (iv, v)))
            .collect::<Result<Vec<_>>>()?;
        pieces.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
        let mut merged: Vec<(Interval, Rat)> = Vec::with_capacity(pieces.len());
        for (iv, v) in pieces {
            match merged.last_mut() {
                Some((last, lv)) if iv.begin < last.end || (iv.begin == last.end && *lv == v) => {
                    if *lv != v {
                        return Err(Error::InvalidArgument(format!(
                            "weight pieces overlap with conflicting values near t={}",
                            crate::rational::format_rational(&iv.begin)
                        )));
                    }
                    if iv.end > last.end {
                        last.end = iv.end;
                    }
                }
                _ => merged.push((iv, v)),
            }
        }
        Ok(StepWeight { pieces: merged })
    }

    /// Constant weight over a support set (one piece per interval).
    pub fn constant(value: Rat, support: &IntervalSet) -> Self {
        StepWeight {
            pieces: support
                .intervals()
                .iter()
                .map(|iv| (iv.clone(), value.clone()))
                .collect(),
        }
    }

    pub fn pieces(&self) -> &[(Interval, Rat)] {
        &self.pieces
    }

    pub fn support(&self) -> IntervalSet {
        IntervalSet::normalize(self.pieces.iter().map(|(iv, _)| (iv.begin.clone(), iv.end.clone())).collect())
            .expect("pieces are well formed")
    }

    /// Value at `t`; 0 outside the support. At a shared piece boundary the
    /// left piece owns the point.
    pub fn value_at(&self, t: &Rat) -> Rat {
        for (iv, v) in &self.pieces {
            if iv.contains(t) {
                return v.clone();
            }
            if &iv.begin > t {
                break;
            }
        }
        Rat::zero()
    }

    /// `∫ w(t) dt` over `over`, with the integrand 0 outside the support.
    pub fn integrate(&self, over: &IntervalSet) -> Rat {
        let mut total = Rat::zero();
        for (iv, v) in &self.pieces {
            let piece = IntervalSet::interval(iv.begin.clone(), iv.end.clone()).expect("valid piece");
            total += v * piece.intersect(over).measure();
        }
        total
    }

    /// Subset of the support where the value is >= tau.
    pub fn threshold_support(&self, tau: &Rat) -> IntervalSet {
        IntervalSet::normalize(
            self.pieces
                .iter()
                .filter(|(_, v)| v >= tau)
                .map(|(iv, _)| (iv.begin.clone(), iv.end.clone()))
                .collect(),
        )
        .expect("pieces are well formed")
    }

    /// Restriction to `to`; pieces are clipped, values kept.
    pub fn restrict(&self, to: &IntervalSet) -> StepWeight {
        let mut raw = Vec::new();
        for (iv, v) in &self.pieces {
            let piece = IntervalSet::interval(iv.begin.clone(), iv.end.clone()).expect("valid piece");
            for (b, e) in piece.intersect(to).iter_pairs() {
                raw.push(((b, e), v.clone()));
            }
        }
        StepWeight::new(raw).expect("clipped pieces are disjoint")
    }

    pub fn min_value(&self) -> Option<Rat> {
        self.pieces.iter().map(|(_, v)| v).min().cloned()
    }

    pub fn max_value(&self) -> Option<Rat> {
        self.pieces.iter().map(|(_, v)| v).max().cloned()
    }
}

/// A maximal segment on which every listed weight is constant.
pub struct Segment {
    pub length: Rat,
    pub midpoint: Rat,
    /// value of each input weight on this segment (0 off-support)
    pub values: Vec<Rat>,
}

/// Splits `dom` at every piece boundary of the given weights and reports the
/// resulting constant segments. Zero-length segments are skipped (they never
/// affect an integral).
pub fn constant_segments(weights: &[&StepWeight], dom: &IntervalSet) -> Vec<Segment> {
    let two = crate::rational::rint(2);
    let mut out = Vec::new();
    for dom_iv in dom.intervals() {
        let mut cuts: Vec<Rat> = vec![dom_iv.begin.clone(), dom_iv.end.clone()];
        for w in weights {
            for (iv, _) in w.pieces() {
                for p in [&iv.begin, &iv.end] {
                    if p > &dom_iv.begin && p < &dom_iv.end {
                        cuts.push(p.clone());
                    }
                }
            }
        }
        cuts.sort();
        cuts.dedup();
        for pair in cuts.windows(2) {
            let (lo, hi) = (&pair[0], &pair[1]);
            if lo == hi {
                continue;
            }
            let midpoint = (lo + hi) / &two;
            out.push(Segment {
                length: hi - lo,
                values: weights.iter().map(|w| w.value_at(&midpoint)).collect(),
                midpoint,
            });
        }
    }
    out
}
