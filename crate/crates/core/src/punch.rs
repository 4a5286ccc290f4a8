//! Orthogonal fold & punch: fold a rectangle with orthogonal creases and
//! punch out a single point so that exactly the marked holes are removed.
//!
//! Solvable exactly when the holes form a combinatorial rectangle `X x Y`;
//! the construction is then one midpoint accordion per axis.

use thiserror::Error;

use crate::foldcut::{assign_mountain_valley, MvAssignment};
use crate::foldmap::{FoldMap1D, FoldMap2D};
use crate::geometry::{PaperRect, Point};
use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PunchError {
    #[error("holes must be nonempty and pairwise distinct")]
    BadHoles,
    #[error("hole {0:?} is not strictly inside the paper")]
    HoleOnBoundary(Point),
    #[error("creases must be strictly increasing and strictly inside the paper")]
    BadCreases,
    #[error("punch point {0:?} is outside the folded paper")]
    PunchOutsideFoldedPaper(Point),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoleInstance {
    paper: PaperRect,
    holes: Vec<Point>,
}

impl HoleInstance {
    /// Holes are deduplicated rejection-style (duplicates are an error) and
    /// stored sorted.
    pub fn new(paper: PaperRect, mut holes: Vec<Point>) -> Result<Self, PunchError> {
        if holes.is_empty() {
            return Err(PunchError::BadHoles);
        }
        for h in &holes {
            if !paper.strictly_contains(h) {
                return Err(PunchError::HoleOnBoundary(h.clone()));
            }
        }
        holes.sort();
        if holes.windows(2).any(|w| w[0] == w[1]) {
            return Err(PunchError::BadHoles);
        }
        Ok(HoleInstance { paper, holes })
    }

    pub fn paper(&self) -> &PaperRect {
        &self.paper
    }

    pub fn holes(&self) -> &[Point] {
        &self.holes
    }
}

/// A hole set written as `X x Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombRect {
    pub xs: Vec<Rational>,
    pub ys: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RectCheck {
    Rectangle(CombRect),
    /// A coordinate pair that would have to be a hole but is not.
    NotRectangle {
        missing: Point,
    },
}

/// Tests whether the holes are exactly the product of their coordinate sets.
pub fn check_combinatorial_rectangle(inst: &HoleInstance) -> RectCheck {
    let mut xs: Vec<Rational> = inst.holes.iter().map(|h| h.x.clone()).collect();
    let mut ys: Vec<Rational> = inst.holes.iter().map(|h| h.y.clone()).collect();
    xs.sort();
    xs.dedup();
    ys.sort();
    ys.dedup();
    for x in &xs {
        for y in &ys {
            let candidate = Point::new(x.clone(), y.clone());
            if !inst.holes.contains(&candidate) {
                return RectCheck::NotRectangle { missing: candidate };
            }
        }
    }
    RectCheck::Rectangle(CombRect { xs, ys })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PunchSolution {
    pub vertical_creases: Vec<Rational>,
    pub horizontal_creases: Vec<Rational>,
    pub punch_point: Point,
    pub mv: MvAssignment,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PunchVerdict {
    Solvable(PunchSolution),
    Unsolvable { missing: Point },
}

/// Midpoint creases between consecutive coordinates of `X` and of `Y`; the
/// punch lands on the common folded image of the holes.
pub fn solve_punch(inst: &HoleInstance) -> PunchVerdict {
    let rect = match check_combinatorial_rectangle(inst) {
        RectCheck::Rectangle(rect) => rect,
        RectCheck::NotRectangle { missing } => return PunchVerdict::Unsolvable { missing },
    };
    let vertical_creases: Vec<Rational> = rect
        .xs
        .windows(2)
        .map(|w| Rational::midpoint(&w[0], &w[1]))
        .collect();
    let horizontal_creases: Vec<Rational> = rect
        .ys
        .windows(2)
        .map(|w| Rational::midpoint(&w[0], &w[1]))
        .collect();
    // Midpoints lie strictly between distinct coordinates, so a crease can
    // never coincide with a hole line.
    debug_assert!(vertical_creases.iter().all(|c| !rect.xs.contains(c)));
    debug_assert!(horizontal_creases.iter().all(|c| !rect.ys.contains(c)));
    let fm = fold_map(inst.paper(), &vertical_creases, &horizontal_creases)
        .expect("midpoint creases are interior");
    let punch_point = fm.fold(&inst.holes[0]).expect("holes lie inside the paper");
    let mv = assign_mountain_valley(&vertical_creases, &horizontal_creases);
    PunchVerdict::Solvable(PunchSolution {
        vertical_creases,
        horizontal_creases,
        punch_point,
        mv,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum PunchWitness {
    /// A non-hole point that folds onto the punch point.
    AlignedNonHole { point: Point },
    /// A hole that does not fold onto the punch point.
    UnalignedHole { hole: Point },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PunchCheck {
    Verified,
    Failed(PunchWitness),
}

/// Checks that the punch removes exactly the holes: the preimage of the
/// punch point (the product of the per-axis preimages) must equal the hole
/// set.
pub fn verify_punch(
    inst: &HoleInstance,
    vertical_creases: &[Rational],
    horizontal_creases: &[Rational],
    punch_point: &Point,
) -> Result<PunchCheck, PunchError> {
    let fm = fold_map(inst.paper(), vertical_creases, horizontal_creases)?;
    let (hlo, hhi) = fm.hmap().image();
    let (vlo, vhi) = fm.vmap().image();
    if punch_point.x < hlo || punch_point.x > hhi || punch_point.y < vlo || punch_point.y > vhi {
        return Err(PunchError::PunchOutsideFoldedPaper(punch_point.clone()));
    }
    let mut preimage = fm.preimages(punch_point);
    preimage.sort();
    for p in &preimage {
        if !inst.holes.contains(p) {
            return Ok(PunchCheck::Failed(PunchWitness::AlignedNonHole {
                point: p.clone(),
            }));
        }
    }
    for h in &inst.holes {
        if !preimage.contains(h) {
            return Ok(PunchCheck::Failed(PunchWitness::UnalignedHole {
                hole: h.clone(),
            }));
        }
    }
    Ok(PunchCheck::Verified)
}

fn fold_map(
    paper: &PaperRect,
    vertical_creases: &[Rational],
    horizontal_creases: &[Rational],
) -> Result<FoldMap2D, PunchError> {
    let hmap = FoldMap1D::new(
        Rational::zero(),
        paper.width().clone(),
        vertical_creases.to_vec(),
    )
    .map_err(|_| PunchError::BadCreases)?;
    let vmap = FoldMap1D::new(
        Rational::zero(),
        paper.height().clone(),
        horizontal_creases.to_vec(),
    )
    .map_err(|_| PunchError::BadCreases)?;
    Ok(FoldMap2D::new(hmap, vmap))
}
