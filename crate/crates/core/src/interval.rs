//! Canonical finite unions of closed intervals with exact rational endpoints.
//!
//! The canonical form is unique: intervals are sorted, pairwise disjoint, and
//! maximally merged (touching intervals such as `[1,2]` and `[2,3]` become
//! `[1,3]`). Degenerate point intervals `[x,x]` are kept; they carry measure
//! zero but remain set-theoretically present.

use crate::error::Error;
use crate::rational::Rat;
use num::Zero;
use std::fmt;

/// A single closed interval `[begin, end]` with `begin <= end`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Interval {
    pub begin: Rat,
    pub end: Rat,
}

impl Interval {
    pub fn new(begin: Rat, end: Rat) -> Result<Self, Error> {
        if begin > end {
            return Err(Error::ReversedInterval {
                begin: crate::rational::format_rational(&begin),
                end: crate::rational::format_rational(&end),
            });
        }
        Ok(Interval { begin, end })
    }

    pub fn length(&self) -> Rat {
        &self.end - &self.begin
    }

    pub fn contains(&self, t: &Rat) -> bool {
        &self.begin <= t && t <= &self.end
    }
}

/// A finite union of disjoint closed intervals in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet::default()
    }

    /// Single-interval set.
    pub fn interval(begin: Rat, end: Rat) -> Result<Self, Error> {
        Ok(IntervalSet {
            intervals: vec![Interval::new(begin, end)?],
        })
    }

    /// Canonicalizes an arbitrary list of interval pairs. Rejects pairs with
    /// `begin > end`; merges overlapping and touching intervals. Idempotent.
    pub fn normalize(raw: Vec<(Rat, Rat)>) -> Result<Self, Error> {
        let mut intervals = raw
            .into_iter()
            .map(|(b, e)| Interval::new(b, e))
            .collect::<Result<Vec<_>, _>>()?;
        intervals.sort();
        let mut merged: Vec<Interval> = Vec::with_capacity(intervals.len());
        for iv in intervals {
            match merged.last_mut() {
                Some(last) if iv.begin <= last.end => {
                    if iv.end > last.end {
                        last.end = iv.end;
                    }
                }
                _ => merged.push(iv),
            }
        }
        Ok(IntervalSet { intervals: merged })
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// Total length. Point intervals contribute zero.
    pub fn measure(&self) -> Rat {
        self.intervals
            .iter()
            .fold(Rat::zero(), |acc, iv| acc + iv.length())
    }

    pub fn contains(&self, t: &Rat) -> bool {
        // intervals are sorted; a scan is fine at our sizes
        self.intervals.iter().any(|iv| iv.contains(t))
    }

    /// True iff every point of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &IntervalSet) -> bool {
        self.intersect(other) == *self
    }

    pub fn intersect(&self, other: &IntervalSet) -> IntervalSet {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.intervals.len() && j < other.intervals.len() {
            let a = &self.intervals[i];
            let b = &other.intervals[j];
            let lo = if a.begin >= b.begin { &a.begin } else { &b.begin };
            let hi = if a.end <= b.end { &a.end } else { &b.end };
            if lo <= hi {
                out.push((lo.clone(), hi.clone()));
            }
            if a.end <= b.end {
                i += 1;
            } else {
                j += 1;
            }
        }
        // pieces of a sorted-disjoint intersection may still touch (e.g.
        // {[0,4],[5,10]} ∩ {[4,9]} -> [4,4],[5,9]); normalize re-merges only
        // touching results, which is exactly the canonical closed-set form
        IntervalSet::normalize(out).expect("intersection pieces are well formed")
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        let mut all: Vec<(Rat, Rat)> = Vec::with_capacity(self.intervals.len() + other.intervals.len());
        for iv in self.intervals.iter().chain(other.intervals.iter()) {
            all.push((iv.begin.clone(), iv.end.clone()));
        }
        IntervalSet::normalize(all).expect("union pieces are well formed")
    }

    /// Set difference `self \ other`, treated on closed intervals: boundary
    /// points shared with `other` are removed only when they are interior to
    /// a removed piece's closure. Used for validation diagnostics.
    pub fn difference(&self, other: &IntervalSet) -> IntervalSet {
        let mut out: Vec<(Rat, Rat)> = Vec::new();
        for a in &self.intervals {
            let mut lo = a.begin.clone();
            let mut alive = true;
            for b in &other.intervals {
                if b.end < lo {
                    continue;
                }
                if b.begin > a.end {
                    break;
                }
                if b.begin > lo {
                    out.push((lo.clone(), b.begin.clone()));
                }
                if b.end >= a.end {
                    alive = false;
                    break;
                }
                lo = b.end.clone();
            }
            if alive && lo <= a.end {
                out.push((lo, a.end.clone()));
            }
        }
        IntervalSet::normalize(out).expect("difference pieces are well formed")
    }

    /// Expands every interval by `radius` on both sides, re-normalizes, and
    /// clips the result to `clip`.
    pub fn dilate(&self, radius: &Rat, clip: &IntervalSet) -> Result<IntervalSet, Error> {
        if radius < &Rat::zero() {
            return Err(Error::InvalidArgument("dilation radius must be >= 0".into()));
        }
        let expanded = self
            .intervals
            .iter()
            .map(|iv| (&iv.begin - radius, &iv.end + radius))
            .collect();
        Ok(IntervalSet::normalize(expanded)?.intersect(clip))
    }

    pub fn iter_pairs(&self) -> impl Iterator<Item = (Rat, Rat)> + '_ {
        self.intervals.iter().map(|iv| (iv.begin.clone(), iv.end.clone()))
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self
            .intervals
            .iter()
            .map(|iv| {
                format!(
                    "[{},{}]",
                    crate::rational::format_rational(&iv.begin),
                    crate::rational::format_rational(&iv.end)
                )
            })
            .collect();
        write!(f, "{}", parts.join("∪"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};

    fn set(pairs: &[(i64, i64)]) -> IntervalSet {
        IntervalSet::normalize(pairs.iter().map(|&(b, e)| (rint(b), rint(e))).collect()).unwrap()
    }

    #[test]
    fn normalize_merges_overlap() {
        // {[1,3],[2,5]} -> {[1,5]}
        assert_eq!(set(&[(1, 3), (2, 5)]), set(&[(1, 5)]));
    }

    #[test]
    fn normalize_keeps_gap() {
        // the two-piece presence set stays two pieces
        let s = set(&[(0, 4), (5, 10)]);
        assert_eq!(s.intervals().len(), 2);
    }

    #[test]
    fn normalize_merges_touching() {
        assert_eq!(set(&[(1, 2), (2, 3)]), set(&[(1, 3)]));
    }

    #[test]
    fn normalize_rejects_reversed() {
        assert!(IntervalSet::normalize(vec![(rint(3), rint(1))]).is_err());
    }

    #[test]
    fn intersect_two_piece() {
        // T_b ∩ T_c from the running example: {[0,4],[5,10]} ∩ {[4,9]} = {[4,4],[5,9]}
        let tb = set(&[(0, 4), (5, 10)]);
        let tc = set(&[(4, 9)]);
        let got = tb.intersect(&tc);
        assert_eq!(got, set(&[(4, 4), (5, 9)]));
        assert_eq!(got.measure(), rint(4));
    }

    #[test]
    fn intersect_fractional() {
        // {[1,3],[7,8]} ∩ {[4.5,7.5]} = {[7,7.5]}
        let a = set(&[(1, 3), (7, 8)]);
        let b = IntervalSet::normalize(vec![(rat(9, 2), rat(15, 2))]).unwrap();
        let expect = IntervalSet::normalize(vec![(rint(7), rat(15, 2))]).unwrap();
        assert_eq!(a.intersect(&b), expect);
    }

    #[test]
    fn intersect_empty_absorbs() {
        let x = set(&[(1, 5)]);
        assert_eq!(x.intersect(&IntervalSet::empty()), IntervalSet::empty());
    }

    #[test]
    fn union_cases() {
        assert_eq!(set(&[(4, 5)]).union(&set(&[(2, 7)])), set(&[(2, 7)]));
        let x = set(&[(1, 5)]);
        assert_eq!(IntervalSet::empty().union(&x), x);
        let two = set(&[(0, 2)]).union(&set(&[(3, 9)]));
        assert_eq!(two, set(&[(0, 2), (3, 9)]));
    }

    #[test]
    fn measure_cases() {
        assert_eq!(set(&[(0, 4), (5, 10)]).measure(), rint(9));
        assert_eq!(set(&[(3, 3)]).measure(), rint(0));
        assert_eq!(IntervalSet::empty().measure(), rint(0));
    }

    #[test]
    fn dilate_cases() {
        let clip = set(&[(1, 9)]);
        assert_eq!(set(&[(2, 3)]).dilate(&rint(1), &clip).unwrap(), set(&[(1, 4)]));
        let x = set(&[(0, 2), (5, 6)]);
        let t = set(&[(1, 10)]);
        assert_eq!(x.dilate(&rint(0), &t).unwrap(), x.intersect(&t));
        assert_eq!(
            IntervalSet::empty().dilate(&rint(3), &t).unwrap(),
            IntervalSet::empty()
        );
    }

    #[test]
    fn difference_basic() {
        let a = set(&[(0, 10)]);
        let b = set(&[(2, 4), (6, 8)]);
        assert_eq!(a.difference(&b), set(&[(0, 2), (4, 6), (8, 10)]));
        assert!(set(&[(2, 4)]).difference(&set(&[(0, 10)])).is_empty());
    }

    #[test]
    fn subset_checks() {
        assert!(set(&[(1, 2)]).is_subset_of(&set(&[(0, 4), (5, 10)])));
        assert!(!set(&[(3, 6)]).is_subset_of(&set(&[(0, 4), (5, 10)])));
        assert!(IntervalSet::empty().is_subset_of(&IntervalSet::empty()));
    }
}
