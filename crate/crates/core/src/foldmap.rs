//! One- and two-dimensional fold maps.
//!
//! A [`FoldMap1D`] is the piecewise isometry induced by a set of crease
//! positions on a closed interval: the identity on the leftmost piece, with
//! the slope flipping sign at every crease. Crease positions determine the
//! map completely, so folding is simulated by evaluating it, and alignment
//! questions reduce to exact preimage computations.
//!
//! A [`FoldMap2D`] folds a rectangle with full-length vertical and horizontal
//! creases; it factors into one fold map per axis, so a point `(x, y)` folds
//! to `(h(x), v(y))`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::Point;
use crate::rational::Rational;

/// Orientation of the paper at a point, or the sign of a marked cut point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn from_parity(n: usize) -> Sign {
        if n % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        match s.as_str() {
            "+" => Ok(Sign::Plus),
            "-" => Ok(Sign::Minus),
            other => Err(serde::de::Error::custom(format!(
                "invalid sign {other:?}: expected \"+\" or \"-\""
            ))),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FoldMapError {
    #[error("empty or inverted domain [{lo}, {hi}]")]
    BadDomain { lo: Rational, hi: Rational },
    #[error("creases must be strictly increasing and strictly inside the domain")]
    BadCreases,
    #[error("{x} is outside the domain [{lo}, {hi}]")]
    OutOfDomain {
        x: Rational,
        lo: Rational,
        hi: Rational,
    },
    #[error("orientation is undefined at the crease {0}")]
    OrientationAtCrease(Rational),
}

/// Fold map of a crease set on `[lo, hi]`.
///
/// Piece `i` runs between crease `i-1` and crease `i` (with the domain ends
/// as outer bounds) and maps `x` to `s_i * x + offset_i` where
/// `s_i = (-1)^i`. The leftmost piece is the identity, which anchors the
/// folded image; alignment statements are invariant under that choice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldMap1D {
    lo: Rational,
    hi: Rational,
    creases: Vec<Rational>,
    offsets: Vec<Rational>,
}

impl FoldMap1D {
    pub fn new(lo: Rational, hi: Rational, creases: Vec<Rational>) -> Result<Self, FoldMapError> {
        if lo >= hi {
            return Err(FoldMapError::BadDomain { lo, hi });
        }
        let strictly_increasing = creases.windows(2).all(|w| w[0] < w[1]);
        let inside = creases.iter().all(|c| *c > lo && *c < hi);
        if !strictly_increasing || !inside {
            return Err(FoldMapError::BadCreases);
        }
        // offset_0 = 0; continuity at crease i gives
        // offset_i = offset_{i-1} + (s_{i-1} - s_i) * c_i = offset_{i-1} ± 2*c_i.
        let mut offsets = Vec::with_capacity(creases.len() + 1);
        offsets.push(Rational::zero());
        for (i, c) in creases.iter().enumerate() {
            let prev = &offsets[i];
            let two_c = c + c;
            let next = if i % 2 == 0 {
                prev + two_c
            } else {
                prev - two_c
            };
            offsets.push(next);
        }
        Ok(FoldMap1D {
            lo,
            hi,
            creases,
            offsets,
        })
    }

    pub fn identity(lo: Rational, hi: Rational) -> Result<Self, FoldMapError> {
        FoldMap1D::new(lo, hi, Vec::new())
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn creases(&self) -> &[Rational] {
        &self.creases
    }

    pub fn piece_count(&self) -> usize {
        self.creases.len() + 1
    }

    /// Index of a piece whose closed interval contains `x`. At a crease both
    /// neighbors agree on the value, so either index is fine.
    fn piece_index(&self, x: &Rational) -> usize {
        self.creases.partition_point(|c| c < x)
    }

    /// Slope (+1 or -1) and offset of piece `i`.
    pub fn piece_map(&self, i: usize) -> (Sign, &Rational) {
        (Sign::from_parity(i), &self.offsets[i])
    }

    /// Closed interval of piece `i`.
    pub fn piece_interval(&self, i: usize) -> (&Rational, &Rational) {
        let lo = if i == 0 {
            &self.lo
        } else {
            &self.creases[i - 1]
        };
        let hi = if i == self.creases.len() {
            &self.hi
        } else {
            &self.creases[i]
        };
        (lo, hi)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        *x >= self.lo && *x <= self.hi
    }

    /// Position of `x` in the folded state.
    pub fn eval(&self, x: &Rational) -> Result<Rational, FoldMapError> {
        if !self.contains(x) {
            return Err(FoldMapError::OutOfDomain {
                x: x.clone(),
                lo: self.lo.clone(),
                hi: self.hi.clone(),
            });
        }
        Ok(self.eval_unchecked(x))
    }

    fn eval_unchecked(&self, x: &Rational) -> Rational {
        let i = self.piece_index(x);
        let (sign, offset) = self.piece_map(i);
        match sign {
            Sign::Plus => x + offset,
            Sign::Minus => offset - x,
        }
    }

    /// All domain points folding onto `value`, sorted ascending. Solves one
    /// linear equation per piece; exact.
    pub fn preimages(&self, value: &Rational) -> Vec<Rational> {
        let mut out = Vec::new();
        for i in 0..self.piece_count() {
            let (sign, offset) = self.piece_map(i);
            let x = match sign {
                Sign::Plus => value - offset,
                Sign::Minus => offset - value,
            };
            let (lo, hi) = self.piece_interval(i);
            if x >= *lo && x <= *hi {
                out.push(x);
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Domain intervals folding into the closed interval `[vlo, vhi]`,
    /// merged into maximal components, each listed as a closed interval.
    pub fn preimage_intervals(&self, vlo: &Rational, vhi: &Rational) -> Vec<(Rational, Rational)> {
        assert!(vlo <= vhi);
        let mut pieces: Vec<(Rational, Rational)> = Vec::new();
        for i in 0..self.piece_count() {
            let (sign, offset) = self.piece_map(i);
            // Solve s*x + o in [vlo, vhi] within the piece interval.
            let (alo, ahi) = match sign {
                Sign::Plus => (vlo - offset, vhi - offset),
                Sign::Minus => (offset - vhi, offset - vlo),
            };
            let (plo, phi) = self.piece_interval(i);
            let lo = Rational::max(alo, plo.clone());
            let hi = Rational::min(ahi, phi.clone());
            if lo <= hi {
                pieces.push((lo, hi));
            }
        }
        pieces.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
        let mut merged: Vec<(Rational, Rational)> = Vec::new();
        for (lo, hi) in pieces {
            match merged.last_mut() {
                Some((_, mhi)) if lo <= *mhi => {
                    if hi > *mhi {
                        *mhi = hi;
                    }
                }
                _ => merged.push((lo, hi)),
            }
        }
        merged
    }

    /// +1 if the map is increasing at `x`, -1 if decreasing; equals
    /// `(-1)^(number of creases left of x)`. Undefined at creases.
    pub fn orientation(&self, x: &Rational) -> Result<Sign, FoldMapError> {
        if !self.contains(x) {
            return Err(FoldMapError::OutOfDomain {
                x: x.clone(),
                lo: self.lo.clone(),
                hi: self.hi.clone(),
            });
        }
        if self.creases.binary_search(x).is_ok() {
            return Err(FoldMapError::OrientationAtCrease(x.clone()));
        }
        Ok(Sign::from_parity(self.piece_index(x)))
    }

    /// The folded image `[min f, max f]` over the whole domain.
    pub fn image(&self) -> (Rational, Rational) {
        let mut lo = self.eval_unchecked(&self.lo);
        let mut hi = lo.clone();
        let mut update = |v: Rational| {
            if v < lo {
                lo = v;
            } else if v > hi {
                hi = v;
            }
        };
        for c in &self.creases {
            update(self.eval_unchecked(c));
        }
        update(self.eval_unchecked(&self.hi));
        (lo, hi)
    }
}

/// Fold map of an orthogonal crease pattern on a rectangle: one 1D map per
/// axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldMap2D {
    hmap: FoldMap1D,
    vmap: FoldMap1D,
}

impl FoldMap2D {
    pub fn new(hmap: FoldMap1D, vmap: FoldMap1D) -> Self {
        FoldMap2D { hmap, vmap }
    }

    pub fn hmap(&self) -> &FoldMap1D {
        &self.hmap
    }

    pub fn vmap(&self) -> &FoldMap1D {
        &self.vmap
    }

    pub fn fold(&self, p: &Point) -> Result<Point, FoldMapError> {
        Ok(Point::new(self.hmap.eval(&p.x)?, self.vmap.eval(&p.y)?))
    }

    /// Preimage of a folded point: the Cartesian product of the per-axis
    /// preimages.
    pub fn preimages(&self, p: &Point) -> Vec<Point> {
        let xs = self.hmap.preimages(&p.x);
        let ys = self.vmap.preimages(&p.y);
        let mut out = Vec::with_capacity(xs.len() * ys.len());
        for x in &xs {
            for y in &ys {
                out.push(Point::new(x.clone(), y.clone()));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn map(lo: i64, hi: i64, creases: &[Rational]) -> FoldMap1D {
        FoldMap1D::new(Rational::from(lo), Rational::from(hi), creases.to_vec()).unwrap()
    }

    #[test]
    fn eval_identity_without_creases() {
        let m = map(0, 4, &[]);
        assert_eq!(m.eval(&rat!(2)).unwrap(), rat!(2));
    }

    #[test]
    fn eval_reflects_across_creases() {
        let m = map(0, 4, &[rat!(1), rat!(3)]);
        // f = x on [0,1]; f = 2-x on [1,3]; f = x-4 on [3,4].
        assert_eq!(m.eval(&rat!(2)).unwrap(), rat!(0));
        assert_eq!(m.eval(&rat!(4)).unwrap(), rat!(0));
        assert_eq!(m.eval(&rat!(1)).unwrap(), rat!(1));
        assert_eq!(m.eval(&rat!(3)).unwrap(), rat!(-1));
    }

    #[test]
    fn eval_outside_domain_errors() {
        let m = map(0, 4, &[]);
        assert!(matches!(
            m.eval(&rat!(5)),
            Err(FoldMapError::OutOfDomain { .. })
        ));
    }

    #[test]
    fn preimages_inverts_each_piece() {
        let m = map(0, 4, &[rat!(1), rat!(3)]);
        assert_eq!(m.preimages(&rat!(0)), vec![rat!(0), rat!(2), rat!(4)]);
    }

    #[test]
    fn preimages_empty_when_out_of_range() {
        let m = map(0, 4, &[]);
        assert!(m.preimages(&rat!(5)).is_empty());
    }

    #[test]
    fn preimages_symmetric_reflection() {
        let m = map(0, 4, &[rat!(2)]);
        assert_eq!(m.preimages(&rat!(1)), vec![rat!(1), rat!(3)]);
    }

    #[test]
    fn orientation_parity() {
        let m = map(0, 4, &[rat!(1), rat!(3)]);
        assert_eq!(m.orientation(&rat!(1 / 2)).unwrap(), Sign::Plus);
        assert_eq!(m.orientation(&rat!(2)).unwrap(), Sign::Minus);
        assert_eq!(m.orientation(&rat!(7 / 2)).unwrap(), Sign::Plus);
        assert!(matches!(
            m.orientation(&rat!(1)),
            Err(FoldMapError::OrientationAtCrease(_))
        ));
    }

    #[test]
    fn creases_must_be_interior_and_sorted() {
        assert!(FoldMap1D::new(rat!(0), rat!(4), vec![rat!(0)]).is_err());
        assert!(FoldMap1D::new(rat!(0), rat!(4), vec![rat!(4)]).is_err());
        assert!(FoldMap1D::new(rat!(0), rat!(4), vec![rat!(3), rat!(1)]).is_err());
        assert!(FoldMap1D::new(rat!(0), rat!(4), vec![rat!(2), rat!(2)]).is_err());
    }

    #[test]
    fn image_covers_extremes() {
        let m = map(0, 4, &[rat!(1), rat!(3)]);
        // Values at 0,1,3,4 are 0,1,-1,0.
        assert_eq!(m.image(), (rat!(-1), rat!(1)));
    }

    #[test]
    fn preimage_intervals_merge_across_creases() {
        let m = map(0, 4, &[rat!(2)]);
        // f = x on [0,2], 4-x on [2,4]; preimage of [1,2] is [1,3].
        assert_eq!(
            m.preimage_intervals(&rat!(1), &rat!(2)),
            vec![(rat!(1), rat!(3))]
        );
    }

    #[test]
    fn fold2d_factors_per_axis() {
        let fm = FoldMap2D::new(map(0, 4, &[rat!(2)]), map(0, 3, &[rat!(3 / 2)]));
        let p = fm.fold(&Point::new(rat!(3), rat!(2))).unwrap();
        assert_eq!(p, Point::new(rat!(1), rat!(1)));
        let pre = fm.preimages(&Point::new(rat!(1), rat!(1)));
        assert_eq!(pre.len(), 4);
    }
}
