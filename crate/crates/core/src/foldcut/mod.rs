//! The main solver: fold a rectangle with orthogonal creases so that one
//! straight cut severs exactly the marked segments.
//!
//! Pipeline: classify the cut slopes (mixed slopes can never share a folded
//! line), handle the all-horizontal / all-vertical degenerate cases, scale
//! the paper so the slopes are exactly +1/-1, decompose each axis into bands
//! (crease-free) and stripes (crease-permitted), place one crease at the
//! center of every stripe, and verify the resulting pattern by exact folded
//! simulation. Failure of that canonical pattern proves unsolvability.

mod decompose;
mod generate;
mod verify;

pub use decompose::{canonical_creases, compute_decomposition, Decomposition, Element};
pub use generate::{
    unfold_generate, unfold_generate_oned, GenError, GenParams, Generated, GeneratedOneD,
    SplitMix64,
};
pub use verify::{band_match_check, folded_cut_segments, verify_solution, BandCheck};

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

use crate::foldmap::FoldMap1D;
use crate::geometry::{
    cut_graph_vertices, merge_collinear_segments, GeometryError, Interval1D, PaperRect, Point,
    Segment, Slope,
};
use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IngestError {
    #[error("instance has no cuts")]
    NoCuts,
    #[error("cut {0:?} leaves the paper rectangle")]
    OutOfBounds(Segment),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FoldcutError {
    #[error("creases must be strictly increasing and strictly inside the paper")]
    BadCreases,
}

/// A fold & cut instance: the paper rectangle and the merged cut segments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutInstance {
    paper: PaperRect,
    cuts: Vec<Segment>,
}

impl CutInstance {
    /// Ingests raw segments: endpoints must stay inside the closed paper
    /// rectangle, and collinear segments sharing at least a point are merged
    /// into maximal segments so the cut graph depends only on the geometric
    /// cut set.
    pub fn new(paper: PaperRect, cuts: Vec<Segment>) -> Result<Self, IngestError> {
        if cuts.is_empty() {
            return Err(IngestError::NoCuts);
        }
        for s in &cuts {
            if !paper.contains(s.a()) || !paper.contains(s.b()) {
                return Err(IngestError::OutOfBounds(s.clone()));
            }
        }
        let cuts = merge_collinear_segments(cuts);
        Ok(CutInstance { paper, cuts })
    }

    pub fn paper(&self) -> &PaperRect {
        &self.paper
    }

    pub fn cuts(&self) -> &[Segment] {
        &self.cuts
    }

    /// Endpoints and pairwise intersections. Ingestion merged collinear
    /// overlaps, so this cannot fail.
    pub fn vertices(&self) -> BTreeSet<Point> {
        cut_graph_vertices(&self.cuts).expect("ingestion merged collinear overlaps")
    }
}

/// Common slope structure of the cut set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SlopeClass {
    /// Every cut has slope `+alpha` or `-alpha` for this positive `alpha`.
    Uniform(Rational),
    Horizontal,
    Vertical,
    /// Two cuts whose slopes are not negatives of each other.
    Mixed {
        first: Segment,
        second: Segment,
    },
}

/// Groups the cuts by slope. Two slopes are compatible only when they are
/// equal up to sign; a horizontal and a vertical cut are already mixed.
pub fn classify_slopes(inst: &CutInstance) -> SlopeClass {
    let first = &inst.cuts[0];
    let reference = first.slope();
    for s in &inst.cuts[1..] {
        let compatible = match (&reference, &s.slope()) {
            (Slope::Vertical, Slope::Vertical) => true,
            (Slope::Finite(a), Slope::Finite(b)) => a.abs() == b.abs(),
            _ => false,
        };
        if !compatible {
            return SlopeClass::Mixed {
                first: first.clone(),
                second: s.clone(),
            };
        }
    }
    match reference {
        Slope::Vertical => SlopeClass::Vertical,
        Slope::Finite(a) if a.is_zero() => SlopeClass::Horizontal,
        Slope::Finite(a) => SlopeClass::Uniform(a.abs()),
    }
}

/// Scales all y coordinates by `1/alpha`, turning slopes `±alpha` into `±1`.
/// Returns the scaled instance and the applied factor.
pub fn normalize_slope(inst: &CutInstance, alpha: &Rational) -> (CutInstance, Rational) {
    let scale = alpha.recip();
    if *alpha == Rational::one() {
        return (inst.clone(), scale);
    }
    let paper = PaperRect::new(inst.paper.width().clone(), inst.paper.height() * &scale)
        .expect("positive scale keeps dimensions positive");
    let cuts = inst
        .cuts
        .iter()
        .map(|s| {
            Segment::new(
                Point::new(s.a().x.clone(), &s.a().y * &scale),
                Point::new(s.b().x.clone(), &s.b().y * &scale),
            )
            .expect("scaling keeps segments non-degenerate")
        })
        .collect();
    (CutInstance { paper, cuts }, scale)
}

/// Coordinate axis of crease positions: vertical creases sit at `X`
/// positions, horizontal creases at `Y` positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
}

/// Mountain or valley.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CreaseLabel {
    #[serde(rename = "M")]
    Mountain,
    #[serde(rename = "V")]
    Valley,
}

/// One flat-foldable mountain/valley labeling of a crease pattern,
/// corresponding to accordion-folding the vertical creases first and the
/// horizontal creases second.
///
/// Vertical creases are labeled along the whole line. A horizontal crease
/// flips label across each vertical crease, so it is labeled per column:
/// `horizontal[column][i]` is the label of the i-th horizontal crease within
/// the column between vertical creases `column-1` and `column`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MvAssignment {
    pub vertical: Vec<CreaseLabel>,
    pub horizontal: Vec<Vec<CreaseLabel>>,
}

/// Labels vertical creases M,V,M,... left to right; the label of horizontal
/// crease `i` in a column is M when `i` plus the column's orientation parity
/// (the number of vertical creases to its left, mod 2) is even.
pub fn assign_mountain_valley(
    vertical_creases: &[Rational],
    horizontal_creases: &[Rational],
) -> MvAssignment {
    let vertical = (0..vertical_creases.len())
        .map(|i| {
            if i % 2 == 0 {
                CreaseLabel::Mountain
            } else {
                CreaseLabel::Valley
            }
        })
        .collect();
    let columns = vertical_creases.len() + 1;
    let horizontal = (0..columns)
        .map(|col| {
            (0..horizontal_creases.len())
                .map(|i| {
                    if (i + col) % 2 == 0 {
                        CreaseLabel::Mountain
                    } else {
                        CreaseLabel::Valley
                    }
                })
                .collect()
        })
        .collect();
    MvAssignment {
        vertical,
        horizontal,
    }
}

/// The folded cut line: a point on it plus its slope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldedLine {
    pub point: Point,
    pub slope: Slope,
}

impl FoldedLine {
    pub fn contains(&self, p: &Point) -> bool {
        match &self.slope {
            Slope::Vertical => p.x == self.point.x,
            Slope::Finite(m) => &p.y - &self.point.y == m * (&p.x - &self.point.x),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution2D {
    pub vertical_creases: Vec<Rational>,
    pub horizontal_creases: Vec<Rational>,
    pub mv: Option<MvAssignment>,
    pub folded_line: FoldedLine,
    /// Vertical scale factor `1/alpha` that was applied internally before
    /// solving; outputs are already mapped back to input coordinates.
    pub scale: Rational,
}

/// Pipeline stage at which an instance was proven unsolvable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailStage {
    SlopeMismatch,
    AxisCutNotFullWidth,
    BandMismatch,
    CanonicalVerificationFailed,
}

/// Concrete geometric evidence for a failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Witness {
    /// Two cuts whose slopes cannot share a folded line.
    SlopePair { first: Segment, second: Segment },
    /// An axis-parallel cut that stops short of the paper edge.
    ShortAxisCut { cut: Segment },
    /// A cut with a slope other than +1/-1 reached the unit-slope verifier.
    NonUnitSlope { cut: Segment },
    /// Reflecting the narrower band across the stripe's center crease does
    /// not reproduce the cut pattern in the wider band.
    BandMismatch {
        axis: Axis,
        stripe: Interval1D,
        unmatched: Segment,
    },
    /// A crease line meets a cut away from every cut-graph vertex.
    CreaseCrossesCut {
        axis: Axis,
        crease: Rational,
        cut: Segment,
        at: Point,
    },
    /// A cut whose folded image leaves the cut line.
    CutOffLine { cut: Segment, folded: Point },
    /// Paper that folds onto the cut line without being marked as cut; the
    /// span may be a single point.
    UncutOnLine { start: Point, end: Point },
}

impl Witness {
    /// Maps all y coordinates back through the inverse of the vertical
    /// normalization scale.
    fn unscale_y(self, alpha: &Rational) -> Witness {
        if *alpha == Rational::one() {
            return self;
        }
        let pt = |p: &Point| Point::new(p.x.clone(), &p.y * alpha);
        let seg = |s: &Segment| {
            Segment::new(pt(s.a()), pt(s.b())).expect("scaling keeps segments non-degenerate")
        };
        match self {
            Witness::SlopePair { first, second } => Witness::SlopePair {
                first: seg(&first),
                second: seg(&second),
            },
            Witness::ShortAxisCut { cut } => Witness::ShortAxisCut { cut: seg(&cut) },
            Witness::NonUnitSlope { cut } => Witness::NonUnitSlope { cut: seg(&cut) },
            Witness::BandMismatch {
                axis,
                stripe,
                unmatched,
            } => Witness::BandMismatch {
                axis,
                stripe: match axis {
                    Axis::X => stripe,
                    Axis::Y => Interval1D::new(&stripe.lo * alpha, &stripe.hi * alpha),
                },
                unmatched: seg(&unmatched),
            },
            Witness::CreaseCrossesCut {
                axis,
                crease,
                cut,
                at,
            } => Witness::CreaseCrossesCut {
                axis,
                crease: match axis {
                    Axis::X => crease,
                    Axis::Y => &crease * alpha,
                },
                cut: seg(&cut),
                at: pt(&at),
            },
            Witness::CutOffLine { cut, folded } => Witness::CutOffLine {
                cut: seg(&cut),
                folded: pt(&folded),
            },
            Witness::UncutOnLine { start, end } => Witness::UncutOnLine {
                start: pt(&start),
                end: pt(&end),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Solvable(Solution2D),
    Unsolvable { stage: FailStage, witness: Witness },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyOutcome {
    Verified(FoldedLine),
    Failed(Witness),
}

/// Which way the degenerate axis-aligned cuts run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxisCuts {
    Horizontal,
    Vertical,
}

/// All-horizontal (or all-vertical) cuts are solvable exactly when each cut
/// spans the full paper; the solution is a midpoint accordion on the
/// perpendicular axis.
pub fn solve_axis_aligned(inst: &CutInstance, kind: AxisCuts) -> Verdict {
    let (extent, cross_extent) = match kind {
        AxisCuts::Horizontal => (inst.paper.width(), inst.paper.height()),
        AxisCuts::Vertical => (inst.paper.height(), inst.paper.width()),
    };
    let mut positions: Vec<Rational> = Vec::new();
    for s in &inst.cuts {
        let (span_lo, span_hi, position) = match kind {
            AxisCuts::Horizontal => (s.x_min(), s.x_max(), &s.a().y),
            AxisCuts::Vertical => (s.y_min(), s.y_max(), &s.a().x),
        };
        if !span_lo.is_zero() || span_hi != extent {
            return Verdict::Unsolvable {
                stage: FailStage::AxisCutNotFullWidth,
                witness: Witness::ShortAxisCut { cut: s.clone() },
            };
        }
        positions.push(position.clone());
    }
    positions.sort();
    debug_assert!(positions.windows(2).all(|w| w[0] < w[1]));
    let creases: Vec<Rational> = positions
        .windows(2)
        .map(|w| Rational::midpoint(&w[0], &w[1]))
        .collect();
    let map = FoldMap1D::new(Rational::zero(), cross_extent.clone(), creases.clone())
        .expect("midpoints are interior");
    let folded = map.eval(&positions[0]).expect("positions are in range");
    let (vertical_creases, horizontal_creases, folded_line) = match kind {
        AxisCuts::Horizontal => (
            Vec::new(),
            creases,
            FoldedLine {
                point: Point::new(Rational::zero(), folded),
                slope: Slope::Finite(Rational::zero()),
            },
        ),
        AxisCuts::Vertical => (
            creases,
            Vec::new(),
            FoldedLine {
                point: Point::new(folded, Rational::zero()),
                slope: Slope::Vertical,
            },
        ),
    };
    let mv = assign_mountain_valley(&vertical_creases, &horizontal_creases);
    Verdict::Solvable(Solution2D {
        vertical_creases,
        horizontal_creases,
        mv: Some(mv),
        folded_line,
        scale: Rational::one(),
    })
}

/// End-to-end solver. Unsolvable verdicts carry the earliest failing stage.
pub fn solve(inst: &CutInstance) -> Verdict {
    let alpha = match classify_slopes(inst) {
        SlopeClass::Mixed { first, second } => {
            return Verdict::Unsolvable {
                stage: FailStage::SlopeMismatch,
                witness: Witness::SlopePair { first, second },
            }
        }
        SlopeClass::Horizontal => return solve_axis_aligned(inst, AxisCuts::Horizontal),
        SlopeClass::Vertical => return solve_axis_aligned(inst, AxisCuts::Vertical),
        SlopeClass::Uniform(alpha) => alpha,
    };

    let (norm, scale) = normalize_slope(inst, &alpha);
    let dec_x = compute_decomposition(&norm, Axis::X);
    let dec_y = compute_decomposition(&norm, Axis::Y);
    let vertical_creases = canonical_creases(&dec_x);
    let horizontal_norm = canonical_creases(&dec_y);
    let band = band_match_check(&norm, &dec_x, &dec_y);
    let outcome = verify_solution(&norm, &vertical_creases, &horizontal_norm)
        .expect("canonical creases are sorted and interior");

    match outcome {
        VerifyOutcome::Verified(line) => {
            let horizontal_creases: Vec<Rational> =
                horizontal_norm.iter().map(|c| c * &alpha).collect();
            let mv = assign_mountain_valley(&vertical_creases, &horizontal_creases);
            let folded_line = FoldedLine {
                point: Point::new(line.point.x.clone(), &line.point.y * &alpha),
                slope: match line.slope {
                    Slope::Finite(m) => Slope::Finite(m * &alpha),
                    Slope::Vertical => Slope::Vertical,
                },
            };
            Verdict::Solvable(Solution2D {
                vertical_creases,
                horizontal_creases,
                mv: Some(mv),
                folded_line,
                scale,
            })
        }
        VerifyOutcome::Failed(witness) => match band {
            // The band screen failed first; report it as the stage.
            BandCheck::Fail {
                axis,
                stripe,
                unmatched,
            } => Verdict::Unsolvable {
                stage: FailStage::BandMismatch,
                witness: Witness::BandMismatch {
                    axis,
                    stripe,
                    unmatched,
                }
                .unscale_y(&alpha),
            },
            BandCheck::Pass => Verdict::Unsolvable {
                stage: FailStage::CanonicalVerificationFailed,
                witness: witness.unscale_y(&alpha),
            },
        },
    }
}

/// Checks a user-supplied crease pattern against an instance, handling all
/// slope classes. Creases are given in input coordinates.
pub fn verify_cut_solution(
    inst: &CutInstance,
    vertical_creases: &[Rational],
    horizontal_creases: &[Rational],
) -> Result<VerifyOutcome, FoldcutError> {
    match classify_slopes(inst) {
        SlopeClass::Mixed { first, second } => {
            Ok(VerifyOutcome::Failed(Witness::SlopePair { first, second }))
        }
        SlopeClass::Horizontal => verify_axis_aligned(
            inst,
            AxisCuts::Horizontal,
            vertical_creases,
            horizontal_creases,
        ),
        SlopeClass::Vertical => verify_axis_aligned(
            inst,
            AxisCuts::Vertical,
            vertical_creases,
            horizontal_creases,
        ),
        SlopeClass::Uniform(alpha) => {
            let (norm, scale) = normalize_slope(inst, &alpha);
            let scaled: Vec<Rational> = horizontal_creases.iter().map(|c| c * &scale).collect();
            let outcome = verify_solution(&norm, vertical_creases, &scaled)?;
            Ok(match outcome {
                VerifyOutcome::Verified(line) => VerifyOutcome::Verified(FoldedLine {
                    point: Point::new(line.point.x.clone(), &line.point.y * &alpha),
                    slope: match line.slope {
                        Slope::Finite(m) => Slope::Finite(m * &alpha),
                        Slope::Vertical => Slope::Vertical,
                    },
                }),
                VerifyOutcome::Failed(w) => VerifyOutcome::Failed(w.unscale_y(&alpha)),
            })
        }
    }
}

fn verify_axis_aligned(
    inst: &CutInstance,
    kind: AxisCuts,
    vertical_creases: &[Rational],
    horizontal_creases: &[Rational],
) -> Result<VerifyOutcome, FoldcutError> {
    let (extent, cross_extent, cross_creases, parallel_creases) = match kind {
        AxisCuts::Horizontal => (
            inst.paper.width(),
            inst.paper.height(),
            horizontal_creases,
            vertical_creases,
        ),
        AxisCuts::Vertical => (
            inst.paper.height(),
            inst.paper.width(),
            vertical_creases,
            horizontal_creases,
        ),
    };
    // Creases parallel to the cuts must still be well formed; they fold the
    // paper along the cut direction and cannot break alignment.
    FoldMap1D::new(Rational::zero(), extent.clone(), parallel_creases.to_vec())
        .map_err(|_| FoldcutError::BadCreases)?;

    let mut positions: Vec<Rational> = Vec::new();
    for s in &inst.cuts {
        let (span_lo, span_hi, position) = match kind {
            AxisCuts::Horizontal => (s.x_min(), s.x_max(), &s.a().y),
            AxisCuts::Vertical => (s.y_min(), s.y_max(), &s.a().x),
        };
        if !span_lo.is_zero() || span_hi != extent {
            return Ok(VerifyOutcome::Failed(Witness::ShortAxisCut {
                cut: s.clone(),
            }));
        }
        positions.push(position.clone());
    }
    positions.sort();

    // Folding exactly on a cut line crosses the cut everywhere at once.
    for c in cross_creases {
        if positions.contains(c) {
            let cut = inst
                .cuts
                .iter()
                .find(|s| match kind {
                    AxisCuts::Horizontal => &s.a().y == c,
                    AxisCuts::Vertical => &s.a().x == c,
                })
                .expect("position came from a cut")
                .clone();
            let at = cut.a().clone();
            return Ok(VerifyOutcome::Failed(Witness::CreaseCrossesCut {
                axis: match kind {
                    AxisCuts::Horizontal => Axis::Y,
                    AxisCuts::Vertical => Axis::X,
                },
                crease: c.clone(),
                cut,
                at,
            }));
        }
    }

    let map = FoldMap1D::new(
        Rational::zero(),
        cross_extent.clone(),
        cross_creases.to_vec(),
    )
    .map_err(|_| FoldcutError::BadCreases)?;
    let target = map.eval(&positions[0]).expect("cut positions are in range");
    for (s, p) in inst.cuts.iter().zip(&positions) {
        let v = map.eval(p).expect("in range");
        if v != target {
            let folded = match kind {
                AxisCuts::Horizontal => Point::new(Rational::zero(), v),
                AxisCuts::Vertical => Point::new(v, Rational::zero()),
            };
            return Ok(VerifyOutcome::Failed(Witness::CutOffLine {
                cut: s.clone(),
                folded,
            }));
        }
    }
    let preimages = map.preimages(&target);
    for extra in &preimages {
        if !positions.contains(extra) {
            let (start, end) = match kind {
                AxisCuts::Horizontal => (
                    Point::new(Rational::zero(), extra.clone()),
                    Point::new(extent.clone(), extra.clone()),
                ),
                AxisCuts::Vertical => (
                    Point::new(extra.clone(), Rational::zero()),
                    Point::new(extra.clone(), extent.clone()),
                ),
            };
            return Ok(VerifyOutcome::Failed(Witness::UncutOnLine { start, end }));
        }
    }
    let folded_line = match kind {
        AxisCuts::Horizontal => FoldedLine {
            point: Point::new(Rational::zero(), target),
            slope: Slope::Finite(Rational::zero()),
        },
        AxisCuts::Vertical => FoldedLine {
            point: Point::new(target, Rational::zero()),
            slope: Slope::Vertical,
        },
    };
    Ok(VerifyOutcome::Verified(folded_line))
}
