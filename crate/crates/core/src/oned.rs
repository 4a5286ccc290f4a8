//! The three one-dimensional problems: aligning marked cut points, aligning
//! signed cut points face-up, and aligning cut intervals with required
//! creases.
//!
//! Each solver builds the canonical crease pattern (midpoints between
//! consecutive cut features, plus any required creases) and decides
//! solvability exactly. The interval verifier is reused by user-supplied
//! solutions.

use thiserror::Error;

use crate::foldmap::{FoldMap1D, Sign};
use crate::geometry::Interval1D;
use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OneDError {
    #[error("domain [{lo}, {hi}] is empty or inverted")]
    BadDomain { lo: Rational, hi: Rational },
    #[error("cut points must be nonempty, strictly increasing, and within the domain")]
    BadCutPoints,
    #[error("cut interval [{lo}, {hi}] must have positive length")]
    EmptyCutInterval { lo: Rational, hi: Rational },
    #[error("cut intervals must be sorted, within the domain, and separated by positive gaps")]
    BadCutIntervals,
    #[error("required creases must be strictly increasing and strictly inside their cut interval")]
    BadRequiredCreases,
}

/// Why a user-supplied crease list cannot even be checked.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvalidCreases {
    #[error("creases must be strictly increasing and strictly inside the domain")]
    Malformed,
    #[error("required crease {0} is missing")]
    MissingRequired(Rational),
    #[error("crease {0} lies inside a cut interval but is not a required crease")]
    ForbiddenInsideInterval(Rational),
    #[error("crease {0} coincides with a cut point")]
    AtCutPoint(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneDUnsignedInstance {
    lo: Rational,
    hi: Rational,
    cut_points: Vec<Rational>,
}

impl OneDUnsignedInstance {
    pub fn new(lo: Rational, hi: Rational, cut_points: Vec<Rational>) -> Result<Self, OneDError> {
        if lo >= hi {
            return Err(OneDError::BadDomain { lo, hi });
        }
        let ok = !cut_points.is_empty()
            && cut_points.windows(2).all(|w| w[0] < w[1])
            && cut_points.iter().all(|p| *p >= lo && *p <= hi);
        if !ok {
            return Err(OneDError::BadCutPoints);
        }
        Ok(OneDUnsignedInstance { lo, hi, cut_points })
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn cut_points(&self) -> &[Rational] {
        &self.cut_points
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneDSignedInstance {
    lo: Rational,
    hi: Rational,
    cut_points: Vec<(Rational, Sign)>,
}

impl OneDSignedInstance {
    pub fn new(
        lo: Rational,
        hi: Rational,
        cut_points: Vec<(Rational, Sign)>,
    ) -> Result<Self, OneDError> {
        if lo >= hi {
            return Err(OneDError::BadDomain { lo, hi });
        }
        let ok = !cut_points.is_empty()
            && cut_points.windows(2).all(|w| w[0].0 < w[1].0)
            && cut_points.iter().all(|(p, _)| *p >= lo && *p <= hi);
        if !ok {
            return Err(OneDError::BadCutPoints);
        }
        Ok(OneDSignedInstance { lo, hi, cut_points })
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn cut_points(&self) -> &[(Rational, Sign)] {
        &self.cut_points
    }

    pub fn positions(&self) -> Vec<Rational> {
        self.cut_points.iter().map(|(p, _)| p.clone()).collect()
    }
}

/// One cut interval with the creases that must be folded inside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutInterval {
    pub interval: Interval1D,
    pub required_creases: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneDIntervalInstance {
    lo: Rational,
    hi: Rational,
    cut_intervals: Vec<CutInterval>,
}

impl OneDIntervalInstance {
    pub fn new(
        lo: Rational,
        hi: Rational,
        cut_intervals: Vec<CutInterval>,
    ) -> Result<Self, OneDError> {
        if lo >= hi {
            return Err(OneDError::BadDomain { lo, hi });
        }
        if cut_intervals.is_empty() {
            return Err(OneDError::BadCutIntervals);
        }
        for ci in &cut_intervals {
            if ci.interval.is_degenerate() {
                // A zero-length cut interval is a cut point; that is the
                // unsigned problem, not this one.
                return Err(OneDError::EmptyCutInterval {
                    lo: ci.interval.lo.clone(),
                    hi: ci.interval.hi.clone(),
                });
            }
            let sorted = ci.required_creases.windows(2).all(|w| w[0] < w[1]);
            let interior = ci
                .required_creases
                .iter()
                .all(|c| ci.interval.contains_strictly(c));
            if !sorted || !interior {
                return Err(OneDError::BadRequiredCreases);
            }
        }
        let within = cut_intervals
            .iter()
            .all(|ci| ci.interval.lo >= lo && ci.interval.hi <= hi);
        let gaps = cut_intervals
            .windows(2)
            .all(|w| w[0].interval.hi < w[1].interval.lo);
        if !within || !gaps {
            return Err(OneDError::BadCutIntervals);
        }
        Ok(OneDIntervalInstance {
            lo,
            hi,
            cut_intervals,
        })
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn cut_intervals(&self) -> &[CutInterval] {
        &self.cut_intervals
    }

    /// All required creases plus the midpoint of each gap between
    /// consecutive cut intervals, sorted.
    pub fn canonical_creases(&self) -> Vec<Rational> {
        let mut creases = Vec::new();
        for ci in &self.cut_intervals {
            creases.extend(ci.required_creases.iter().cloned());
        }
        for w in self.cut_intervals.windows(2) {
            creases.push(Rational::midpoint(&w[0].interval.hi, &w[1].interval.lo));
        }
        creases.sort();
        creases
    }
}

/// Where the cuts end up in the folded state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutImage {
    Point(Rational),
    Interval(Interval1D),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneDSolution {
    pub creases: Vec<Rational>,
    pub cut_image: CutImage,
    /// Reflect the final folded state so orientations match the requested
    /// signs. Only meaningful for the signed problem.
    pub flip_whole_paper: bool,
}

/// Two consecutive cut points with equal signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualSignPair {
    pub first: (Rational, Sign),
    pub second: (Rational, Sign),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignedVerdict {
    Solvable(OneDSolution),
    Unsolvable(EqualSignPair),
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum IntervalWitness {
    /// Two cut intervals whose folded images differ.
    ImageMismatch {
        first_index: usize,
        first_image: Interval1D,
        second_index: usize,
        second_image: Interval1D,
    },
    /// A point outside every cut interval that folds into the common image.
    ForbiddenOverlap { at: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntervalCheck {
    Verified(Interval1D),
    Failed(IntervalWitness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntervalVerdict {
    Solvable(OneDSolution),
    Unsolvable(IntervalWitness),
}

/// Midpoint creases between consecutive cut points. Always succeeds, and the
/// preimage of the folded cut position is checked to be exactly the cut set.
pub fn solve_unsigned(inst: &OneDUnsignedInstance) -> OneDSolution {
    let creases: Vec<Rational> = inst
        .cut_points
        .windows(2)
        .map(|w| Rational::midpoint(&w[0], &w[1]))
        .collect();
    let map = FoldMap1D::new(inst.lo.clone(), inst.hi.clone(), creases.clone())
        .expect("midpoints are interior and sorted");
    let image = map
        .eval(&inst.cut_points[0])
        .expect("cut points lie in the domain");
    assert_eq!(
        map.preimages(&image),
        inst.cut_points,
        "midpoint creases align exactly the cut points"
    );
    OneDSolution {
        creases,
        cut_image: CutImage::Point(image),
        flip_whole_paper: false,
    }
}

/// Solvable exactly when the signs alternate; the creases are the unsigned
/// midpoints, and a single global flip fixes the starting parity.
pub fn solve_signed(inst: &OneDSignedInstance) -> SignedVerdict {
    for w in inst.cut_points.windows(2) {
        if w[0].1 == w[1].1 {
            return SignedVerdict::Unsolvable(EqualSignPair {
                first: w[0].clone(),
                second: w[1].clone(),
            });
        }
    }
    let unsigned = OneDUnsignedInstance::new(inst.lo.clone(), inst.hi.clone(), inst.positions())
        .expect("signed instance positions form a valid unsigned instance");
    let mut solution = solve_unsigned(&unsigned);
    // Orientation at cut point i under the identity anchor is (-1)^i, so the
    // whole pattern matches after one optional global reflection.
    solution.flip_whole_paper = inst.cut_points[0].1 == Sign::Minus;
    if cfg!(debug_assertions) {
        let map =
            FoldMap1D::new(inst.lo.clone(), inst.hi.clone(), solution.creases.clone()).unwrap();
        for (p, sign) in &inst.cut_points {
            let mut o = map.orientation(p).expect("cut points are never creases");
            if solution.flip_whole_paper {
                o = o.flip();
            }
            debug_assert_eq!(o, *sign);
        }
    }
    SignedVerdict::Solvable(solution)
}

/// Builds the canonical crease pattern and verifies it; failure of the
/// canonical pattern proves the instance unsolvable.
pub fn solve_interval(inst: &OneDIntervalInstance) -> IntervalVerdict {
    let creases = inst.canonical_creases();
    match verify_interval(inst, &creases).expect("canonical creases are valid") {
        IntervalCheck::Verified(image) => IntervalVerdict::Solvable(OneDSolution {
            creases,
            cut_image: CutImage::Interval(image),
            flip_whole_paper: false,
        }),
        IntervalCheck::Failed(witness) => IntervalVerdict::Unsolvable(witness),
    }
}

/// Checks a crease list against an interval instance.
///
/// The creases must contain every required crease and nothing else inside
/// any closed cut interval. The check then requires (1) all cut intervals to
/// fold onto one common interval `I`, and (2) every linear piece of the fold
/// map outside the cut intervals to meet `I` in at most a single
/// region-boundary point.
pub fn verify_interval(
    inst: &OneDIntervalInstance,
    creases: &[Rational],
) -> Result<IntervalCheck, InvalidCreases> {
    let sorted = creases.windows(2).all(|w| w[0] < w[1]);
    let interior = creases.iter().all(|c| *c > inst.lo && *c < inst.hi);
    if !sorted || !interior {
        return Err(InvalidCreases::Malformed);
    }
    for ci in &inst.cut_intervals {
        for rc in &ci.required_creases {
            if !creases.contains(rc) {
                return Err(InvalidCreases::MissingRequired(rc.clone()));
            }
        }
        for c in creases {
            if ci.interval.contains(c) && !ci.required_creases.contains(c) {
                return Err(InvalidCreases::ForbiddenInsideInterval(c.clone()));
            }
        }
    }

    let map = FoldMap1D::new(inst.lo.clone(), inst.hi.clone(), creases.to_vec())
        .expect("creases validated above");

    // (1) Every cut interval folds onto the same closed interval.
    let mut common: Option<(usize, Interval1D)> = None;
    for (i, ci) in inst.cut_intervals.iter().enumerate() {
        let image = fold_image_of_interval(&map, ci);
        match &common {
            None => common = Some((i, image)),
            Some((first_index, first_image)) => {
                if image != *first_image {
                    return Ok(IntervalCheck::Failed(IntervalWitness::ImageMismatch {
                        first_index: *first_index,
                        first_image: first_image.clone(),
                        second_index: i,
                        second_image: image,
                    }));
                }
            }
        }
    }
    let (_, image) = common.expect("instance has at least one cut interval");

    // (2) Outside the cut intervals, nothing may fold into I except a
    // single touch at a region boundary.
    let mut regions: Vec<(Rational, Rational)> = Vec::new();
    let mut prev = inst.lo.clone();
    for ci in &inst.cut_intervals {
        regions.push((prev, ci.interval.lo.clone()));
        prev = ci.interval.hi.clone();
    }
    regions.push((prev, inst.hi.clone()));

    for (rlo, rhi) in regions {
        if rlo == rhi {
            continue;
        }
        // Split the region at its interior creases.
        let mut bounds = vec![rlo.clone()];
        for c in creases {
            if *c > rlo && *c < rhi {
                bounds.push(c.clone());
            }
        }
        bounds.push(rhi.clone());
        for w in bounds.windows(2) {
            let overlap = piece_preimage_within(&map, &w[0], &w[1], &image);
            match overlap {
                None => {}
                Some((qlo, qhi)) => {
                    if qlo < qhi {
                        return Ok(IntervalCheck::Failed(IntervalWitness::ForbiddenOverlap {
                            at: Rational::midpoint(&qlo, &qhi),
                        }));
                    }
                    // A single touch point is fine only at the region ends,
                    // where the cut intervals themselves begin.
                    if qlo != rlo && qlo != rhi {
                        return Ok(IntervalCheck::Failed(IntervalWitness::ForbiddenOverlap {
                            at: qlo,
                        }));
                    }
                }
            }
        }
    }

    Ok(IntervalCheck::Verified(image))
}

fn fold_image_of_interval(map: &FoldMap1D, ci: &CutInterval) -> Interval1D {
    let mut values = vec![
        map.eval(&ci.interval.lo).expect("interval within domain"),
        map.eval(&ci.interval.hi).expect("interval within domain"),
    ];
    for c in &ci.required_creases {
        values.push(map.eval(c).expect("crease within domain"));
    }
    let min = values.iter().min().unwrap().clone();
    let max = values.iter().max().unwrap().clone();
    Interval1D::new(min, max)
}

/// Intersection of the preimage of `image` with one linear piece `[plo, phi]`
/// of the map (no creases strictly inside). Returns the closed overlap, or
/// `None` when empty.
fn piece_preimage_within(
    map: &FoldMap1D,
    plo: &Rational,
    phi: &Rational,
    image: &Interval1D,
) -> Option<(Rational, Rational)> {
    // The piece is linear, so the preimage of a closed interval is closed;
    // evaluate at the ends to recover it.
    let flo = map.eval(plo).expect("within domain");
    let fhi = map.eval(phi).expect("within domain");
    let (vlo, vhi) = if flo <= fhi { (flo, fhi) } else { (fhi, flo) };
    let olo = Rational::max(vlo, image.lo.clone());
    let ohi = Rational::min(vhi, image.hi.clone());
    if olo > ohi {
        return None;
    }
    // Map the folded overlap back through the (monotone) piece.
    let a = map.preimages(&olo);
    let b = map.preimages(&ohi);
    let xa = a
        .into_iter()
        .find(|x| x >= plo && x <= phi)
        .expect("preimage in piece");
    let xb = b
        .into_iter()
        .find(|x| x >= plo && x <= phi)
        .expect("preimage in piece");
    Some(if xa <= xb { (xa, xb) } else { (xb, xa) })
}

/// Re-checks an unsigned solution: creases avoid cut points, and the folded
/// cut position's preimage is exactly the cut set.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PointVerifyFailure {
    #[error("creases must be strictly increasing and strictly inside the domain")]
    MalformedCreases,
    #[error("crease {0} coincides with a cut point")]
    CreaseAtCutPoint(Rational),
    #[error("cut points do not all fold to one position: {0} folds to {1}, expected {2}")]
    NotAligned(Rational, Rational, Rational),
    #[error("point {0} also folds onto the cut position")]
    ExtraAlignment(Rational),
    #[error("solution claims cut image {claimed}, but the creases give {actual}")]
    WrongImage { claimed: Rational, actual: Rational },
    #[error("orientation at {0} does not match its sign")]
    OrientationMismatch(Rational),
}

pub fn verify_unsigned(
    inst: &OneDUnsignedInstance,
    creases: &[Rational],
    claimed_image: Option<&Rational>,
) -> Result<Rational, PointVerifyFailure> {
    let map = build_point_map(inst.lo(), inst.hi(), creases, inst.cut_points())?;
    let image = map.eval(&inst.cut_points[0]).expect("in domain");
    for p in &inst.cut_points {
        let v = map.eval(p).expect("in domain");
        if v != image {
            return Err(PointVerifyFailure::NotAligned(p.clone(), v, image));
        }
    }
    let pre = map.preimages(&image);
    if pre != inst.cut_points {
        let extra = pre
            .into_iter()
            .find(|x| !inst.cut_points.contains(x))
            .expect("preimage superset mismatch");
        return Err(PointVerifyFailure::ExtraAlignment(extra));
    }
    if let Some(claimed) = claimed_image {
        if *claimed != image {
            return Err(PointVerifyFailure::WrongImage {
                claimed: claimed.clone(),
                actual: image,
            });
        }
    }
    Ok(image)
}

pub fn verify_signed(
    inst: &OneDSignedInstance,
    creases: &[Rational],
    flip_whole_paper: bool,
    claimed_image: Option<&Rational>,
) -> Result<Rational, PointVerifyFailure> {
    let positions = inst.positions();
    let unsigned = OneDUnsignedInstance::new(inst.lo().clone(), inst.hi().clone(), positions)
        .expect("valid positions");
    let image = verify_unsigned(&unsigned, creases, claimed_image)?;
    let map = FoldMap1D::new(inst.lo().clone(), inst.hi().clone(), creases.to_vec())
        .expect("validated by verify_unsigned");
    for (p, sign) in inst.cut_points() {
        let mut o = map
            .orientation(p)
            .map_err(|_| PointVerifyFailure::CreaseAtCutPoint(p.clone()))?;
        if flip_whole_paper {
            o = o.flip();
        }
        if o != *sign {
            return Err(PointVerifyFailure::OrientationMismatch(p.clone()));
        }
    }
    Ok(image)
}

fn build_point_map(
    lo: &Rational,
    hi: &Rational,
    creases: &[Rational],
    cut_points: &[Rational],
) -> Result<FoldMap1D, PointVerifyFailure> {
    for c in creases {
        if cut_points.contains(c) {
            return Err(PointVerifyFailure::CreaseAtCutPoint(c.clone()));
        }
    }
    FoldMap1D::new(lo.clone(), hi.clone(), creases.to_vec())
        .map_err(|_| PointVerifyFailure::MalformedCreases)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn unsigned(lo: i64, hi: i64, pts: &[Rational]) -> OneDUnsignedInstance {
        OneDUnsignedInstance::new(Rational::from(lo), Rational::from(hi), pts.to_vec()).unwrap()
    }

    #[test]
    fn unsigned_midpoint_construction() {
        let inst = unsigned(0, 4, &[rat!(1), rat!(3)]);
        let sol = solve_unsigned(&inst);
        assert_eq!(sol.creases, vec![rat!(2)]);
        assert_eq!(sol.cut_image, CutImage::Point(rat!(1)));
        let map = FoldMap1D::new(rat!(0), rat!(4), sol.creases.clone()).unwrap();
        assert_eq!(map.preimages(&rat!(1)), vec![rat!(1), rat!(3)]);
    }

    #[test]
    fn unsigned_single_point_needs_no_creases() {
        let inst = unsigned(0, 5, &[rat!(2)]);
        let sol = solve_unsigned(&inst);
        assert!(sol.creases.is_empty());
        assert_eq!(sol.cut_image, CutImage::Point(rat!(2)));
    }

    #[test]
    fn unsigned_three_points() {
        let inst = unsigned(0, 5, &[rat!(1), rat!(2), rat!(4)]);
        let sol = solve_unsigned(&inst);
        assert_eq!(sol.creases, vec![rat!(3 / 2), rat!(3)]);
        let map = FoldMap1D::new(rat!(0), rat!(5), sol.creases.clone()).unwrap();
        let CutImage::Point(image) = &sol.cut_image else {
            panic!("point problem yields point image")
        };
        assert_eq!(map.preimages(image), vec![rat!(1), rat!(2), rat!(4)]);
    }

    #[test]
    fn unsigned_boundary_cut_points_allowed() {
        let inst = unsigned(0, 4, &[rat!(0), rat!(4)]);
        let sol = solve_unsigned(&inst);
        assert_eq!(sol.creases, vec![rat!(2)]);
    }

    #[test]
    fn signed_alternating_solves() {
        let inst = OneDSignedInstance::new(
            rat!(0),
            rat!(4),
            vec![(rat!(1), Sign::Plus), (rat!(3), Sign::Minus)],
        )
        .unwrap();
        let SignedVerdict::Solvable(sol) = solve_signed(&inst) else {
            panic!("alternating signs must solve")
        };
        assert_eq!(sol.creases, vec![rat!(2)]);
        assert!(!sol.flip_whole_paper);
        let map = FoldMap1D::new(rat!(0), rat!(4), sol.creases).unwrap();
        assert_eq!(map.orientation(&rat!(1)).unwrap(), Sign::Plus);
        assert_eq!(map.orientation(&rat!(3)).unwrap(), Sign::Minus);
    }

    #[test]
    fn signed_equal_pair_unsolvable() {
        let inst = OneDSignedInstance::new(
            rat!(0),
            rat!(4),
            vec![(rat!(1), Sign::Plus), (rat!(3), Sign::Plus)],
        )
        .unwrap();
        let SignedVerdict::Unsolvable(w) = solve_signed(&inst) else {
            panic!("equal signs must fail")
        };
        assert_eq!(w.first.0, rat!(1));
        assert_eq!(w.second.0, rat!(3));
    }

    #[test]
    fn signed_negative_start_flips_paper() {
        let inst = OneDSignedInstance::new(
            rat!(0),
            rat!(4),
            vec![
                (rat!(1), Sign::Minus),
                (rat!(2), Sign::Plus),
                (rat!(3), Sign::Minus),
            ],
        )
        .unwrap();
        let SignedVerdict::Solvable(sol) = solve_signed(&inst) else {
            panic!("alternating signs must solve")
        };
        assert_eq!(sol.creases, vec![rat!(3 / 2), rat!(5 / 2)]);
        assert!(sol.flip_whole_paper);
    }

    fn interval_inst(
        lo: i64,
        hi: i64,
        intervals: &[(Rational, Rational, Vec<Rational>)],
    ) -> OneDIntervalInstance {
        OneDIntervalInstance::new(
            Rational::from(lo),
            Rational::from(hi),
            intervals
                .iter()
                .map(|(a, b, req)| CutInterval {
                    interval: Interval1D::new(a.clone(), b.clone()),
                    required_creases: req.clone(),
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn interval_example_with_required_crease() {
        // Cut intervals [0,2] (required crease 1) and [3,4] on [0,4].
        let inst = interval_inst(
            0,
            4,
            &[
                (rat!(0), rat!(2), vec![rat!(1)]),
                (rat!(3), rat!(4), vec![]),
            ],
        );
        assert_eq!(inst.canonical_creases(), vec![rat!(1), rat!(5 / 2)]);
        let IntervalVerdict::Solvable(sol) = solve_interval(&inst) else {
            panic!("instance is solvable")
        };
        assert_eq!(sol.creases, vec![rat!(1), rat!(5 / 2)]);
        assert_eq!(
            sol.cut_image,
            CutImage::Interval(Interval1D::new(rat!(0), rat!(1)))
        );
    }

    #[test]
    fn interval_unequal_lengths_unsolvable() {
        let inst = interval_inst(
            0,
            4,
            &[(rat!(0), rat!(1), vec![]), (rat!(2), rat!(4), vec![])],
        );
        let IntervalVerdict::Unsolvable(w) = solve_interval(&inst) else {
            panic!("unequal lengths with no required creases cannot align")
        };
        assert!(matches!(w, IntervalWitness::ImageMismatch { .. }));
    }

    #[test]
    fn interval_single_interval_trivial() {
        let inst = interval_inst(0, 3, &[(rat!(1), rat!(2), vec![])]);
        let IntervalVerdict::Solvable(sol) = solve_interval(&inst) else {
            panic!("single interval is trivially solvable")
        };
        assert!(sol.creases.is_empty());
        assert_eq!(
            sol.cut_image,
            CutImage::Interval(Interval1D::new(rat!(1), rat!(2)))
        );
    }

    #[test]
    fn verify_interval_detects_missing_gap_crease() {
        let inst = interval_inst(
            0,
            4,
            &[
                (rat!(0), rat!(2), vec![rat!(1)]),
                (rat!(3), rat!(4), vec![]),
            ],
        );
        // Only the required crease: the two images differ.
        let check = verify_interval(&inst, &[rat!(1)]).unwrap();
        let IntervalCheck::Failed(IntervalWitness::ImageMismatch {
            first_image,
            second_image,
            ..
        }) = check
        else {
            panic!("must fail with an image mismatch")
        };
        assert_eq!(first_image, Interval1D::new(rat!(0), rat!(1)));
        assert_eq!(second_image, Interval1D::new(rat!(-2), rat!(-1)));
    }

    #[test]
    fn verify_interval_rejects_invalid_creases() {
        let inst = interval_inst(
            0,
            4,
            &[
                (rat!(0), rat!(2), vec![rat!(1)]),
                (rat!(3), rat!(4), vec![]),
            ],
        );
        assert!(matches!(
            verify_interval(&inst, &[rat!(5 / 2)]),
            Err(InvalidCreases::MissingRequired(_))
        ));
        assert!(matches!(
            verify_interval(&inst, &[rat!(1), rat!(3 / 2), rat!(5 / 2)]),
            Err(InvalidCreases::ForbiddenInsideInterval(_))
        ));
    }

    #[test]
    fn verify_interval_rejects_uncut_overlap() {
        // One cut interval [1,2] on [0,6]: a crease at 3 folds the tail
        // [3,6] back across the cut interval.
        let inst = interval_inst(0, 6, &[(rat!(1), rat!(2), vec![])]);
        let check = verify_interval(&inst, &[rat!(3)]).unwrap();
        assert!(matches!(
            check,
            IntervalCheck::Failed(IntervalWitness::ForbiddenOverlap { .. })
        ));
    }

    #[test]
    fn verify_interval_allows_boundary_touch_at_domain_end() {
        // Crease at 4 sends the domain end 6 exactly onto the image
        // boundary; a single touch at a region end is accepted.
        let inst = interval_inst(0, 6, &[(rat!(1), rat!(2), vec![])]);
        let check = verify_interval(&inst, &[rat!(4)]).unwrap();
        assert_eq!(
            check,
            IntervalCheck::Verified(Interval1D::new(rat!(1), rat!(2)))
        );
    }

    #[test]
    fn zero_length_interval_rejected() {
        let err = OneDIntervalInstance::new(
            rat!(0),
            rat!(4),
            vec![CutInterval {
                interval: Interval1D::new(rat!(1), rat!(1)),
                required_creases: vec![],
            }],
        );
        assert!(matches!(err, Err(OneDError::EmptyCutInterval { .. })));
    }

    #[test]
    fn touching_intervals_rejected() {
        let err = OneDIntervalInstance::new(
            rat!(0),
            rat!(4),
            vec![
                CutInterval {
                    interval: Interval1D::new(rat!(0), rat!(2)),
                    required_creases: vec![],
                },
                CutInterval {
                    interval: Interval1D::new(rat!(2), rat!(3)),
                    required_creases: vec![],
                },
            ],
        );
        assert!(matches!(err, Err(OneDError::BadCutIntervals)));
    }
}
