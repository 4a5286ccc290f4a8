//! Solvable-instance generation by unfolding.
//!
//! Start from the folded state: a rectangle crossed by one unit-slope line.
//! Repeatedly unfold a flap across a paper edge, mirroring the cut marks
//! under the flap into the newly revealed paper. Each step records one
//! crease, and the resulting instance is exactly solvable by construction
//! (the recorded creases are a witness solution).
//!
//! Randomness comes from a self-contained splitmix64 stream so that a seed
//! reproduces the same instance across platforms and implementations; the
//! constants and the derivation of every draw are pinned in
//! `docs/formats.md`.

use thiserror::Error;

use crate::foldmap::Sign;
use crate::geometry::{Interval1D, PaperRect, Point, Segment};
use crate::oned::{CutInterval, OneDIntervalInstance};
use crate::rational::Rational;

use super::{Axis, CutInstance};

/// Splitmix64: 64-bit state advanced by the golden-gamma constant, output
/// mixed by two xor-multiply rounds.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in `0..n` by modulo reduction.
    pub fn next_below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }

    pub fn next_bool(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }

    /// A fraction `k/den` with `k` uniform in `1..den`: strictly inside
    /// `(0, 1)`.
    pub fn next_fraction(&mut self, den: u64) -> Rational {
        assert!(den >= 2);
        let k = 1 + self.next_below(den - 1);
        Rational::from_bigint(k.into(), den.into())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("folded rectangle dimensions must be positive")]
    BadFoldedSize,
    #[error("line offset {0} does not cross the folded rectangle")]
    LineMissesRectangle(Rational),
    #[error("could not find a non-degenerate unfold after {0} attempts")]
    RetriesExhausted(u32),
}

#[derive(Clone, Debug)]
pub struct GenParams {
    pub creases_x: usize,
    pub creases_y: usize,
    pub folded_width: Rational,
    pub folded_height: Rational,
    /// Intercept of the cut line (`y = x + t` or `y = -x + t`); drawn from
    /// the seed when absent.
    pub line_offset: Option<Rational>,
    /// Sign of the cut line slope; drawn from the seed when absent.
    pub slope: Option<Sign>,
}

/// A generated instance together with the witness solution it was unfolded
/// from.
#[derive(Clone, Debug)]
pub struct Generated {
    pub instance: CutInstance,
    pub vertical_creases: Vec<Rational>,
    pub horizontal_creases: Vec<Rational>,
    /// The cut line clipped to the folded rectangle, in folded coordinates.
    pub folded_segment: Segment,
}

/// Denominator of the first flap-width draw; doubled on retry when a draw
/// would produce a degenerate mirrored piece.
const FLAP_DENOMINATOR: u64 = 16;
const MAX_RETRIES: u32 = 24;

pub fn unfold_generate(seed: u64, params: &GenParams) -> Result<Generated, GenError> {
    if !params.folded_width.is_positive() || !params.folded_height.is_positive() {
        return Err(GenError::BadFoldedSize);
    }
    let mut rng = SplitMix64::new(seed);
    let fw = params.folded_width.clone();
    let fh = params.folded_height.clone();

    let slope = params.slope.unwrap_or_else(|| {
        if rng.next_bool() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    });
    // Admissible intercepts: slope +1 lines y = x + t cross the rectangle
    // for t in (-fw, fh); slope -1 lines y = -x + t for t in (0, fw + fh).
    let offset = match &params.line_offset {
        Some(t) => t.clone(),
        None => {
            let f = rng.next_fraction(1024);
            match slope {
                Sign::Plus => -(&fw) + (&fw + &fh) * f,
                Sign::Minus => (&fw + &fh) * f,
            }
        }
    };
    let base = clip_line_to_rect(slope, &offset, &fw, &fh)
        .ok_or_else(|| GenError::LineMissesRectangle(offset.clone()))?;

    let mut state = UnfoldState {
        width: fw,
        height: fh,
        segments: vec![base.clone()],
        creases_x: Vec::new(),
        creases_y: Vec::new(),
    };

    let mut remaining_x = params.creases_x;
    let mut remaining_y = params.creases_y;
    while remaining_x + remaining_y > 0 {
        let axis = if remaining_x == 0 {
            Axis::Y
        } else if remaining_y == 0 || rng.next_bool() {
            Axis::X
        } else {
            Axis::Y
        };
        state.unfold_step(axis, &mut rng)?;
        match axis {
            Axis::X => remaining_x -= 1,
            Axis::Y => remaining_y -= 1,
        }
    }

    let paper = PaperRect::new(state.width, state.height).expect("positive dimensions");
    let instance =
        CutInstance::new(paper, state.segments).expect("unfolding keeps segments inside the paper");
    Ok(Generated {
        instance,
        vertical_creases: state.creases_x,
        horizontal_creases: state.creases_y,
        folded_segment: base,
    })
}

fn clip_line_to_rect(
    slope: Sign,
    offset: &Rational,
    fw: &Rational,
    fh: &Rational,
) -> Option<Segment> {
    let zero = Rational::zero();
    let (x1, x2) = match slope {
        // y = x + t in [0, fh] and x in [0, fw].
        Sign::Plus => (
            Rational::max(zero.clone(), -offset),
            Rational::min(fw.clone(), fh - offset),
        ),
        // y = -x + t.
        Sign::Minus => (
            Rational::max(zero, offset - fh),
            Rational::min(fw.clone(), offset.clone()),
        ),
    };
    if x1 >= x2 {
        return None;
    }
    let y_at = |x: &Rational| match slope {
        Sign::Plus => x + offset,
        Sign::Minus => offset - x,
    };
    let a = Point::new(x1.clone(), y_at(&x1));
    let b = Point::new(x2.clone(), y_at(&x2));
    Some(Segment::new(a, b).expect("positive-length clip"))
}

struct UnfoldState {
    width: Rational,
    height: Rational,
    segments: Vec<Segment>,
    creases_x: Vec<Rational>,
    creases_y: Vec<Rational>,
}

impl UnfoldState {
    /// Unfolds one flap on the given axis: pick a side and a flap width that
    /// keeps the strip free of existing creases and of single-point segment
    /// touches, then mirror the strip's marks across the edge.
    fn unfold_step(&mut self, axis: Axis, rng: &mut SplitMix64) -> Result<(), GenError> {
        let low_side = rng.next_bool();
        let (extent, creases) = match axis {
            Axis::X => (&self.width, &self.creases_x),
            Axis::Y => (&self.height, &self.creases_y),
        };
        let margin = if low_side {
            creases.first().cloned().unwrap_or_else(|| extent.clone())
        } else {
            extent - creases.last().cloned().unwrap_or_else(Rational::zero)
        };

        let mut den = FLAP_DENOMINATOR;
        let mut flap = None;
        for _ in 0..MAX_RETRIES {
            let t = &margin * rng.next_fraction(den);
            let boundary = if low_side { t.clone() } else { extent - &t };
            if !self.strip_touch_is_degenerate(axis, low_side, &boundary) {
                flap = Some((t, boundary));
                break;
            }
            den = den.saturating_mul(2);
        }
        let Some((t, boundary)) = flap else {
            return Err(GenError::RetriesExhausted(MAX_RETRIES));
        };

        let edge = if low_side {
            Rational::zero()
        } else {
            extent.clone()
        };
        // Mirror the strip between `boundary` and the folding edge.
        let mut mirrored = Vec::new();
        for s in &self.segments {
            if let Some(piece) = clip_to_axis_range(s, axis, &boundary, &edge, low_side) {
                mirrored.push(reflect_across(&piece, axis, &edge));
            }
        }
        self.segments.extend(mirrored);

        match (axis, low_side) {
            (Axis::X, false) => {
                self.creases_x.push(self.width.clone());
                self.width = &self.width + &t;
            }
            (Axis::Y, false) => {
                self.creases_y.push(self.height.clone());
                self.height = &self.height + &t;
            }
            (Axis::X, true) => {
                self.shift(Axis::X, &t);
                self.creases_x.insert(0, t.clone());
                self.width = &self.width + &t;
            }
            (Axis::Y, true) => {
                self.shift(Axis::Y, &t);
                self.creases_y.insert(0, t.clone());
                self.height = &self.height + &t;
            }
        }
        Ok(())
    }

    /// True when some segment meets the strip in exactly one point: its
    /// mirror would be a degenerate mark, which no instance can express.
    /// The strip is `[0, boundary]` on the low side, `[boundary, extent]`
    /// otherwise, so a one-point touch is a segment ending exactly at the
    /// strip's inner boundary.
    fn strip_touch_is_degenerate(&self, axis: Axis, low_side: bool, boundary: &Rational) -> bool {
        self.segments.iter().any(|s| {
            let (lo, hi) = match axis {
                Axis::X => (s.x_min(), s.x_max()),
                Axis::Y => (s.y_min(), s.y_max()),
            };
            if low_side {
                lo == boundary && hi > boundary
            } else {
                hi == boundary && lo < boundary
            }
        })
    }

    fn shift(&mut self, axis: Axis, by: &Rational) {
        let map = |p: &Point| match axis {
            Axis::X => Point::new(&p.x + by, p.y.clone()),
            Axis::Y => Point::new(p.x.clone(), &p.y + by),
        };
        for s in &mut self.segments {
            *s = Segment::new(map(s.a()), map(s.b())).expect("shift keeps endpoints distinct");
        }
        match axis {
            Axis::X => {
                for c in &mut self.creases_x {
                    *c = &*c + by;
                }
            }
            Axis::Y => {
                for c in &mut self.creases_y {
                    *c = &*c + by;
                }
            }
        }
    }
}

/// Midpoint of the widest interval of `[0, extent]` not covered by marks,
/// or `None` when the marks cover everything.
fn widest_gap_midpoint(marks: &[(Rational, Rational)], extent: &Rational) -> Option<Rational> {
    let mut best: Option<(Rational, Rational)> = None;
    let mut prev = Rational::zero();
    let consider = |lo: &Rational, hi: &Rational, best: &mut Option<(Rational, Rational)>| {
        if lo < hi {
            let width = hi - lo;
            let wider = match best {
                Some((w, _)) => width > *w,
                None => true,
            };
            if wider {
                *best = Some((width, Rational::midpoint(lo, hi)));
            }
        }
    };
    for (a, b) in marks {
        consider(&prev, a, &mut best);
        prev = b.clone();
    }
    consider(&prev, extent, &mut best);
    best.map(|(_, mid)| mid)
}

/// The part of `s` whose axis coordinate lies between `boundary` and `edge`,
/// dropped when degenerate.
fn clip_to_axis_range(
    s: &Segment,
    axis: Axis,
    boundary: &Rational,
    edge: &Rational,
    low_side: bool,
) -> Option<Segment> {
    let (range_lo, range_hi) = if low_side {
        (edge, boundary)
    } else {
        (boundary, edge)
    };
    let (lo, hi) = match axis {
        Axis::X => (s.x_min(), s.x_max()),
        Axis::Y => (s.y_min(), s.y_max()),
    };
    let a = Rational::max(lo.clone(), range_lo.clone());
    let b = Rational::min(hi.clone(), range_hi.clone());
    if a >= b {
        return None;
    }
    let (pa, pb) = match axis {
        Axis::X => (
            s.point_at_x(&a).expect("within x range"),
            s.point_at_x(&b).expect("within x range"),
        ),
        Axis::Y => (
            s.point_at_y(&a).expect("within y range"),
            s.point_at_y(&b).expect("within y range"),
        ),
    };
    Some(Segment::new(pa, pb).expect("positive-length clip"))
}

fn reflect_across(s: &Segment, axis: Axis, edge: &Rational) -> Segment {
    let two_e = edge + edge;
    let map = |p: &Point| match axis {
        Axis::X => Point::new(&two_e - &p.x, p.y.clone()),
        Axis::Y => Point::new(p.x.clone(), &two_e - &p.y),
    };
    Segment::new(map(s.a()), map(s.b())).expect("reflection keeps endpoints distinct")
}

/// A generated interval instance with the witness creases it was unfolded
/// from.
#[derive(Clone, Debug)]
pub struct GeneratedOneD {
    pub instance: OneDIntervalInstance,
    pub witness_creases: Vec<Rational>,
    /// The target interval in folded coordinates.
    pub folded_interval: Interval1D,
}

/// 1D variant: unfold a folded segment carrying one cut interval.
///
/// The marks (the cut region) are tracked explicitly as disjoint closed
/// intervals, and a flap boundary is never placed strictly inside a mark:
/// a split mark would mirror into a shorter cut interval that cannot align
/// onto the common folded interval.
pub fn unfold_generate_oned(
    seed: u64,
    creases: usize,
    folded_length: &Rational,
) -> Result<GeneratedOneD, GenError> {
    if !folded_length.is_positive() {
        return Err(GenError::BadFoldedSize);
    }
    let mut rng = SplitMix64::new(seed);
    let f1 = rng.next_fraction(16);
    let f2 = rng.next_fraction(16);
    let (lo_f, hi_f) = if f1 <= f2 { (f1, f2) } else { (f2, f1) };
    let interval = if lo_f == hi_f {
        Interval1D::new(
            folded_length * lo_f / Rational::from(2),
            folded_length * hi_f,
        )
    } else {
        Interval1D::new(folded_length * lo_f, folded_length * hi_f)
    };

    let mut length = folded_length.clone();
    let mut crease_positions: Vec<Rational> = Vec::new();
    let mut marks: Vec<(Rational, Rational)> = vec![(interval.lo.clone(), interval.hi.clone())];

    for _ in 0..creases {
        let low_side = rng.next_bool();
        // The flap boundary may fall anywhere that does not split a mark;
        // creases inside the strip are mirrored along with the marks.
        let mut den = FLAP_DENOMINATOR;
        let mut chosen = None;
        for _ in 0..MAX_RETRIES {
            let boundary = &length * rng.next_fraction(den);
            let splits_mark = marks.iter().any(|(a, b)| a < &boundary && &boundary < b);
            if !splits_mark {
                chosen = Some(boundary);
                break;
            }
            den = den.saturating_mul(2);
        }
        let boundary = match chosen.or_else(|| widest_gap_midpoint(&marks, &length)) {
            Some(b) => b,
            None => return Err(GenError::RetriesExhausted(MAX_RETRIES)),
        };
        let t = if low_side {
            boundary.clone()
        } else {
            &length - &boundary
        };

        // Mirror whole marks and interior creases of the strip across the
        // folding edge.
        let mut mirrored_marks: Vec<(Rational, Rational)> = Vec::new();
        for (a, b) in &marks {
            let inside = if low_side {
                *b <= boundary
            } else {
                *a >= boundary
            };
            if inside {
                mirrored_marks.push(if low_side {
                    (-b, -a)
                } else {
                    (&length + (&length - b), &length + (&length - a))
                });
            }
        }
        marks.extend(mirrored_marks);
        let mut mirrored_creases: Vec<Rational> = crease_positions
            .iter()
            .filter(|c| {
                if low_side {
                    **c < boundary
                } else {
                    **c > boundary
                }
            })
            .map(|c| {
                if low_side {
                    -c
                } else {
                    &length + (&length - c)
                }
            })
            .collect();
        crease_positions.append(&mut mirrored_creases);

        if low_side {
            crease_positions.push(Rational::zero());
            for c in &mut crease_positions {
                *c = &*c + &t;
            }
            for (a, b) in &mut marks {
                *a = &*a + &t;
                *b = &*b + &t;
            }
        } else {
            crease_positions.push(length.clone());
        }
        crease_positions.sort();
        length = &length + &t;

        // A mark touching the folding edge meets its own mirror there.
        marks.sort_by(|x, y| (&x.0, &x.1).cmp(&(&y.0, &y.1)));
        let mut merged: Vec<(Rational, Rational)> = Vec::new();
        for (a, b) in marks {
            match merged.last_mut() {
                Some((_, mb)) if a <= *mb => {
                    if b > *mb {
                        *mb = b;
                    }
                }
                _ => merged.push((a, b)),
            }
        }
        marks = merged;
    }

    debug_assert!(crease_positions.windows(2).all(|w| w[0] < w[1]));
    let cut_intervals: Vec<CutInterval> = marks
        .into_iter()
        .map(|(a, b)| {
            let required: Vec<Rational> = crease_positions
                .iter()
                .filter(|c| **c > a && **c < b)
                .cloned()
                .collect();
            CutInterval {
                interval: Interval1D::new(a, b),
                required_creases: required,
            }
        })
        .collect();
    let instance = OneDIntervalInstance::new(Rational::zero(), length, cut_intervals)
        .expect("mirrored marks form a valid instance");
    Ok(GeneratedOneD {
        instance,
        witness_creases: crease_positions,
        folded_interval: interval,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{solve, Verdict};
    use super::*;
    use crate::rat;

    #[test]
    fn identity_unfold_is_the_clipped_line() {
        let params = GenParams {
            creases_x: 0,
            creases_y: 0,
            folded_width: rat!(2),
            folded_height: rat!(2),
            line_offset: Some(rat!(0)),
            slope: Some(Sign::Plus),
        };
        let g = unfold_generate(7, &params).unwrap();
        assert_eq!(g.instance.paper().width(), &rat!(2));
        assert_eq!(g.instance.cuts().len(), 1);
        assert_eq!(g.folded_segment, g.instance.cuts()[0]);
    }

    #[test]
    fn single_full_unfold_makes_a_v() {
        // Folded [0,3]x[0,4] with the line through (0,4) and (3,1); one full
        // right-side x unfold produces the V on [0,6]x[0,4].
        let base = clip_line_to_rect(Sign::Minus, &rat!(4), &rat!(3), &rat!(4)).unwrap();
        let mut state = UnfoldState {
            width: rat!(3),
            height: rat!(4),
            segments: vec![base],
            creases_x: vec![],
            creases_y: vec![],
        };
        let mut mirrored = Vec::new();
        for s in &state.segments {
            if let Some(piece) = clip_to_axis_range(s, Axis::X, &rat!(0), &rat!(3), false) {
                mirrored.push(reflect_across(&piece, Axis::X, &rat!(3)));
            }
        }
        state.segments.extend(mirrored);
        state.creases_x.push(rat!(3));
        state.width = rat!(6);

        let inst = CutInstance::new(
            PaperRect::new(state.width, state.height).unwrap(),
            state.segments,
        )
        .unwrap();
        let mut cuts = inst.cuts().to_vec();
        cuts.sort();
        assert_eq!(cuts.len(), 2);
        assert_eq!(
            cuts[0],
            Segment::new(Point::new(rat!(0), rat!(4)), Point::new(rat!(3), rat!(1)))
                .unwrap()
                .normalized()
        );
        assert_eq!(
            cuts[1],
            Segment::new(Point::new(rat!(3), rat!(1)), Point::new(rat!(6), rat!(4)))
                .unwrap()
                .normalized()
        );
    }

    #[test]
    fn generated_instances_solve() {
        for seed in 0..25u64 {
            let params = GenParams {
                creases_x: 2,
                creases_y: 2,
                folded_width: rat!(3),
                folded_height: rat!(2),
                line_offset: None,
                slope: None,
            };
            let g = unfold_generate(seed, &params).unwrap();
            assert_eq!(g.vertical_creases.len(), 2);
            assert_eq!(g.horizontal_creases.len(), 2);
            match solve(&g.instance) {
                Verdict::Solvable(_) => {}
                Verdict::Unsolvable { stage, witness } => {
                    panic!("seed {seed}: generated instance unsolvable at {stage:?}: {witness:?}")
                }
            }
        }
    }

    #[test]
    fn generator_is_deterministic() {
        let params = GenParams {
            creases_x: 3,
            creases_y: 1,
            folded_width: rat!(4),
            folded_height: rat!(3),
            line_offset: None,
            slope: None,
        };
        let a = unfold_generate(99, &params).unwrap();
        let b = unfold_generate(99, &params).unwrap();
        assert_eq!(a.instance, b.instance);
        assert_eq!(a.vertical_creases, b.vertical_creases);
    }

    #[test]
    fn oned_generator_produces_valid_instances() {
        for seed in 0..25u64 {
            let g = unfold_generate_oned(seed, 3, &rat!(4)).unwrap();
            assert!(!g.instance.cut_intervals().is_empty());
        }
    }

    #[test]
    fn splitmix_reference_values() {
        // First outputs for seed 0 of the standard splitmix64 stream.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
    }
}
