//! Exact verification of a crease pattern against a cut instance.
//!
//! [`verify_solution`] is the normative check and implements the problem
//! definition directly: fold the paper, require every cut to land on one
//! line of slope +1/-1, and require the preimage of that line within every
//! grid cell to be exactly covered by cuts. [`band_match_check`] is the fast
//! reflection screen over stripe-adjacent bands; it is vacuous for patterns
//! without stripes, so it never overrides the simulation.

use crate::foldmap::{FoldMap1D, FoldMap2D, Sign};
use crate::geometry::{Interval1D, Point, Segment, Slope};
use crate::rational::Rational;

use super::decompose::{Decomposition, Element};
use super::{Axis, CutInstance, FoldcutError, FoldedLine, VerifyOutcome, Witness};

/// Outcome of the band reflection screen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BandCheck {
    Pass,
    Fail {
        axis: Axis,
        stripe: Interval1D,
        unmatched: Segment,
    },
}

/// Folds every cut segment, split at crease crossings so each piece lives in
/// one grid cell, and returns `(piece, folded piece)` pairs.
pub fn folded_cut_segments(
    inst: &CutInstance,
    vertical_creases: &[Rational],
    horizontal_creases: &[Rational],
) -> Result<Vec<(Segment, Segment)>, FoldcutError> {
    let fm = build_fold_map(inst, vertical_creases, horizontal_creases)?;
    Ok(split_cuts(inst, vertical_creases, horizontal_creases)
        .into_iter()
        .map(|piece| {
            let fa = fm.fold(piece.a()).expect("piece inside paper");
            let fb = fm.fold(piece.b()).expect("piece inside paper");
            let folded = Segment::new(fa, fb)
                .expect("a fold map is isometric within a cell, so pieces stay non-degenerate");
            (piece, folded)
        })
        .collect())
}

/// The normative solvability check for unit-slope instances.
pub fn verify_solution(
    inst: &CutInstance,
    vertical_creases: &[Rational],
    horizontal_creases: &[Rational],
) -> Result<VerifyOutcome, FoldcutError> {
    // Only +1/-1 cuts can be checked against a single diagonal line.
    for s in inst.cuts() {
        match s.slope() {
            Slope::Finite(m) if m.abs() == Rational::one() => {}
            _ => {
                return Ok(VerifyOutcome::Failed(Witness::NonUnitSlope {
                    cut: s.clone(),
                }))
            }
        }
    }

    // Creases may meet cuts only at cut-graph vertices.
    let vertices = inst.vertices();
    for c in vertical_creases {
        for s in inst.cuts() {
            if s.x_min() < c && c < s.x_max() {
                let at = s.point_at_x(c).expect("crease strictly inside x range");
                if !vertices.contains(&at) {
                    return Ok(VerifyOutcome::Failed(Witness::CreaseCrossesCut {
                        axis: Axis::X,
                        crease: c.clone(),
                        cut: s.clone(),
                        at,
                    }));
                }
            }
        }
    }
    for c in horizontal_creases {
        for s in inst.cuts() {
            if s.y_min() < c && c < s.y_max() {
                let at = s.point_at_y(c).expect("crease strictly inside y range");
                if !vertices.contains(&at) {
                    return Ok(VerifyOutcome::Failed(Witness::CreaseCrossesCut {
                        axis: Axis::Y,
                        crease: c.clone(),
                        cut: s.clone(),
                        at,
                    }));
                }
            }
        }
    }

    let fm = build_fold_map(inst, vertical_creases, horizontal_creases)?;
    let folded = folded_cut_segments(inst, vertical_creases, horizontal_creases)?;

    // The cut line is fixed by the first folded piece.
    let (_, first) = &folded[0];
    let dx = &first.b().x - &first.a().x;
    let dy = &first.b().y - &first.a().y;
    debug_assert!(!dx.is_zero(), "unit-slope pieces fold to unit-slope pieces");
    let m = dy / dx;
    debug_assert_eq!(m.abs(), Rational::one());
    let line = FoldedLine {
        point: first.a().clone(),
        slope: Slope::Finite(m.clone()),
    };

    for (piece, fp) in &folded {
        for endpoint in [fp.a(), fp.b()] {
            if !line.contains(endpoint) {
                return Ok(VerifyOutcome::Failed(Witness::CutOffLine {
                    cut: piece.clone(),
                    folded: endpoint.clone(),
                }));
            }
        }
    }

    // Cell-by-cell: the fold map is one affine isometry per cell, so the
    // preimage of the cut line in a cell is a single diagonal segment (or a
    // corner point); the cuts inside the cell must cover it exactly.
    let grid_x = grid_coords(
        Rational::zero(),
        inst.paper().width().clone(),
        vertical_creases,
    );
    let grid_y = grid_coords(
        Rational::zero(),
        inst.paper().height().clone(),
        horizontal_creases,
    );
    for i in 0..grid_x.len() - 1 {
        let (sx, ox) = piece_map(fm.hmap(), i);
        for j in 0..grid_y.len() - 1 {
            let (sy, oy) = piece_map(fm.vmap(), j);
            // Pull the line w = m*(u - qx) + qy back through
            // T(x, y) = (sx*x + ox, sy*y + oy):
            // y = (m*sx*sy)*x + sy*(m*(ox - qx) + qy - oy).
            let m_cell = &m * &sx * &sy;
            let b_cell = &sy * (&m * (&ox - &line.point.x) + &line.point.y - &oy);
            if let Some(gap) = uncovered_span(
                inst,
                (&grid_x[i], &grid_x[i + 1]),
                (&grid_y[j], &grid_y[j + 1]),
                &m_cell,
                &b_cell,
            ) {
                return Ok(VerifyOutcome::Failed(gap));
            }
        }
    }

    Ok(VerifyOutcome::Verified(line))
}

fn build_fold_map(
    inst: &CutInstance,
    vertical_creases: &[Rational],
    horizontal_creases: &[Rational],
) -> Result<FoldMap2D, FoldcutError> {
    let hmap = FoldMap1D::new(
        Rational::zero(),
        inst.paper().width().clone(),
        vertical_creases.to_vec(),
    )
    .map_err(|_| FoldcutError::BadCreases)?;
    let vmap = FoldMap1D::new(
        Rational::zero(),
        inst.paper().height().clone(),
        horizontal_creases.to_vec(),
    )
    .map_err(|_| FoldcutError::BadCreases)?;
    Ok(FoldMap2D::new(hmap, vmap))
}

fn piece_map(map: &FoldMap1D, i: usize) -> (Rational, Rational) {
    let (sign, offset) = map.piece_map(i);
    let s = match sign {
        Sign::Plus => Rational::one(),
        Sign::Minus => -Rational::one(),
    };
    (s, offset.clone())
}

fn grid_coords(lo: Rational, hi: Rational, creases: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(creases.len() + 2);
    out.push(lo);
    out.extend(creases.iter().cloned());
    out.push(hi);
    out
}

/// Splits each cut at every crease line it crosses, ordered by x.
fn split_cuts(
    inst: &CutInstance,
    vertical_creases: &[Rational],
    horizontal_creases: &[Rational],
) -> Vec<Segment> {
    let mut pieces = Vec::new();
    for s in inst.cuts() {
        let (lo, hi) = if s.a().x <= s.b().x {
            (s.a().clone(), s.b().clone())
        } else {
            (s.b().clone(), s.a().clone())
        };
        let mut xs: Vec<Rational> = Vec::new();
        for c in vertical_creases {
            if *c > lo.x && *c < hi.x {
                xs.push(c.clone());
            }
        }
        for c in horizontal_creases {
            if let Some(p) = s.point_at_y(c) {
                if p.x > lo.x && p.x < hi.x {
                    xs.push(p.x);
                }
            }
        }
        xs.sort();
        xs.dedup();
        let mut prev = lo.clone();
        for x in xs {
            let next = s.point_at_x(&x).expect("split point inside x range");
            pieces.push(Segment::new(prev, next.clone()).expect("split points are distinct"));
            prev = next;
        }
        pieces.push(Segment::new(prev, hi).expect("split points are distinct"));
    }
    pieces
}

/// Checks one cell: clips the pulled-back line `y = m*x + b` to the cell and
/// subtracts the cut coverage. Returns a witness for the first uncovered
/// span (possibly a single point).
fn uncovered_span(
    inst: &CutInstance,
    (xa, xb): (&Rational, &Rational),
    (ya, yb): (&Rational, &Rational),
    m: &Rational,
    b: &Rational,
) -> Option<Witness> {
    let at = |x: &Rational| Point::new(x.clone(), m * x + b);
    // x range where the line's y stays within the cell.
    let (mut u1, mut u2) = if m.is_positive() {
        (ya - b, yb - b)
    } else {
        (b - yb, b - ya)
    };
    if &u1 < xa {
        u1 = xa.clone();
    }
    if &u2 > xb {
        u2 = xb.clone();
    }
    if u1 > u2 {
        return None;
    }

    // Closed coverage intervals along x from every cut restricted to the
    // cell: collinear cuts contribute their clipped span, transversal cuts
    // the single crossing point.
    let mut covered: Vec<(Rational, Rational)> = Vec::new();
    for s in inst.cuts() {
        let k = match s.slope() {
            Slope::Finite(k) => k,
            Slope::Vertical => continue,
        };
        let c_s = &s.a().y - &k * &s.a().x;
        // Clip the cut to the cell, as an x interval.
        let (mut w1, mut w2) = (s.x_min().clone(), s.x_max().clone());
        if &w1 < xa {
            w1 = xa.clone();
        }
        if &w2 > xb {
            w2 = xb.clone();
        }
        let (cy1, cy2) = if k.is_positive() {
            (ya - &c_s, yb - &c_s)
        } else {
            (&c_s - yb, &c_s - ya)
        };
        if cy1 > w1 {
            w1 = cy1;
        }
        if cy2 < w2 {
            w2 = cy2;
        }
        if w1 > w2 {
            continue;
        }
        if k == *m {
            if c_s == *b {
                covered.push((w1, w2));
            }
            continue;
        }
        // Transversal: single crossing at x* = (b - c_s) / (k - m).
        let x_star = (b - &c_s) / (&k - m);
        if x_star >= w1 && x_star <= w2 && x_star >= u1 && x_star <= u2 {
            covered.push((x_star.clone(), x_star));
        }
    }

    covered.retain(|(a, bb)| *bb >= u1 && *a <= u2);
    for c in &mut covered {
        if c.0 < u1 {
            c.0 = u1.clone();
        }
        if c.1 > u2 {
            c.1 = u2.clone();
        }
    }
    covered.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));

    let mut cur = u1.clone();
    let mut any = false;
    for (a, bb) in covered {
        if a > cur {
            return Some(Witness::UncutOnLine {
                start: at(&cur),
                end: at(&a),
            });
        }
        if bb > cur {
            cur = bb;
        }
        any = true;
    }
    if cur < u2 || !any {
        return Some(Witness::UncutOnLine {
            start: at(&cur),
            end: at(&u2),
        });
    }
    None
}

/// Reflects the narrower band adjacent to each stripe across the stripe's
/// center crease and compares cut patterns with the matching portion of the
/// wider band. A screening check only; `verify_solution` is normative.
pub fn band_match_check(
    inst: &CutInstance,
    dec_x: &Decomposition,
    dec_y: &Decomposition,
) -> BandCheck {
    for dec in [dec_x, dec_y] {
        for window in dec.elements.windows(3) {
            let [Element::Band(left), Element::Stripe(stripe), Element::Band(right)] = window
            else {
                continue;
            };
            let center = stripe.midpoint();
            let (narrow, reflect_into) = if left.length() <= right.length() {
                let mirrored_hi = &center + (&center - &left.lo);
                (
                    left.clone(),
                    Interval1D::new(stripe.hi.clone(), mirrored_hi),
                )
            } else {
                let mirrored_lo = &center - (&right.hi - &center);
                (
                    right.clone(),
                    Interval1D::new(mirrored_lo, stripe.lo.clone()),
                )
            };
            let mut mirrored: Vec<Segment> = clip_cuts(inst, dec.axis, &narrow)
                .into_iter()
                .map(|s| reflect(dec.axis, &s, &center))
                .collect();
            mirrored.sort();
            let mut other = clip_cuts(inst, dec.axis, &reflect_into);
            other.sort();
            if mirrored != other {
                let unmatched = mirrored
                    .iter()
                    .find(|s| !other.contains(s))
                    .or_else(|| other.iter().find(|s| !mirrored.contains(s)))
                    .expect("unequal sorted sets differ in some element")
                    .clone();
                return BandCheck::Fail {
                    axis: dec.axis,
                    stripe: stripe.clone(),
                    unmatched,
                };
            }
        }
    }
    BandCheck::Pass
}

/// Positive-length pieces of the cuts inside a closed axis range.
/// Single-point touches at the range boundary are dropped on both sides of
/// the comparison.
fn clip_cuts(inst: &CutInstance, axis: Axis, range: &Interval1D) -> Vec<Segment> {
    let mut out = Vec::new();
    for s in inst.cuts() {
        let (lo, hi) = match axis {
            Axis::X => (s.x_min(), s.x_max()),
            Axis::Y => (s.y_min(), s.y_max()),
        };
        let a = Rational::max(lo.clone(), range.lo.clone());
        let b = Rational::min(hi.clone(), range.hi.clone());
        if a >= b {
            continue;
        }
        let (pa, pb) = match axis {
            Axis::X => (
                s.point_at_x(&a).expect("clip bound within x range"),
                s.point_at_x(&b).expect("clip bound within x range"),
            ),
            Axis::Y => (
                s.point_at_y(&a).expect("clip bound within y range"),
                s.point_at_y(&b).expect("clip bound within y range"),
            ),
        };
        out.push(
            Segment::new(pa, pb)
                .expect("positive-length clip")
                .normalized(),
        );
    }
    out
}

fn reflect(axis: Axis, s: &Segment, center: &Rational) -> Segment {
    let two_c = center + center;
    let map = |p: &Point| match axis {
        Axis::X => Point::new(&two_c - &p.x, p.y.clone()),
        Axis::Y => Point::new(p.x.clone(), &two_c - &p.y),
    };
    Segment::new(map(s.a()), map(s.b()))
        .expect("reflection keeps segments non-degenerate")
        .normalized()
}

#[cfg(test)]
mod tests {
    use super::super::tests::{instance, pt, seg, v_instance};
    use super::super::{compute_decomposition, Axis};
    use super::*;
    use crate::rat;

    #[test]
    fn v_instance_verifies_with_apex_crease() {
        let inst = v_instance();
        let outcome = verify_solution(&inst, &[rat!(3)], &[]).unwrap();
        let VerifyOutcome::Verified(line) = outcome else {
            panic!("the V folds onto one line")
        };
        assert!(line.contains(&pt(0, 4)));
        assert!(line.contains(&pt(3, 1)));
        assert_eq!(line.slope, Slope::Finite(rat!(-1)));
    }

    #[test]
    fn lone_interior_segment_fails_with_uncut_witness() {
        let inst = instance(4, 4, vec![seg(1, 1, 3, 3)]);
        let outcome = verify_solution(&inst, &[], &[]).unwrap();
        let VerifyOutcome::Failed(Witness::UncutOnLine { start, end }) = outcome else {
            panic!("the extended line crosses uncut paper")
        };
        // The uncut span below the segment runs from the corner to the cut.
        assert_eq!(start, pt(0, 0));
        assert_eq!(end, pt(1, 1));
    }

    #[test]
    fn asymmetric_pair_fails_canonical_check() {
        let inst = instance(4, 2, vec![seg(0, 0, 1, 1), seg(2, 0, 4, 2)]);
        let outcome = verify_solution(&inst, &[rat!(3 / 2)], &[]).unwrap();
        assert!(matches!(outcome, VerifyOutcome::Failed(_)));
    }

    #[test]
    fn crease_through_cut_interior_rejected() {
        let inst = instance(4, 4, vec![seg(1, 1, 3, 3)]);
        let outcome = verify_solution(&inst, &[rat!(2)], &[]).unwrap();
        let VerifyOutcome::Failed(Witness::CreaseCrossesCut { at, .. }) = outcome else {
            panic!("crease crosses the cut off-vertex")
        };
        assert_eq!(at, pt(2, 2));
    }

    #[test]
    fn crease_through_vertex_allowed() {
        let inst = instance(2, 2, vec![seg(0, 0, 2, 2), seg(0, 2, 2, 0)]);
        let outcome = verify_solution(&inst, &[rat!(1)], &[rat!(1)]).unwrap();
        assert!(matches!(outcome, VerifyOutcome::Verified(_)));
    }

    #[test]
    fn band_check_passes_on_v() {
        let inst = v_instance();
        let dec_x = compute_decomposition(&inst, Axis::X);
        let dec_y = compute_decomposition(&inst, Axis::Y);
        assert_eq!(band_match_check(&inst, &dec_x, &dec_y), BandCheck::Pass);
    }

    #[test]
    fn band_check_fails_on_asymmetric_pair() {
        let inst = instance(4, 2, vec![seg(0, 0, 1, 1), seg(2, 0, 4, 2)]);
        let dec_x = compute_decomposition(&inst, Axis::X);
        let dec_y = compute_decomposition(&inst, Axis::Y);
        let BandCheck::Fail { axis, stripe, .. } = band_match_check(&inst, &dec_x, &dec_y) else {
            panic!("reflected slopes disagree")
        };
        assert_eq!(axis, Axis::X);
        assert_eq!(stripe, Interval1D::new(rat!(1), rat!(2)));
    }

    #[test]
    fn band_check_passes_on_x_crossing() {
        let inst = instance(2, 2, vec![seg(0, 0, 2, 2), seg(0, 2, 2, 0)]);
        let dec_x = compute_decomposition(&inst, Axis::X);
        let dec_y = compute_decomposition(&inst, Axis::Y);
        assert_eq!(band_match_check(&inst, &dec_x, &dec_y), BandCheck::Pass);
    }

    #[test]
    fn folded_pieces_of_x_crossing() {
        let inst = instance(2, 2, vec![seg(0, 0, 2, 2), seg(0, 2, 2, 0)]);
        let folded = folded_cut_segments(&inst, &[rat!(1)], &[rat!(1)]).unwrap();
        assert_eq!(folded.len(), 4);
        for (_, fp) in &folded {
            assert_eq!(fp.normalized(), seg(0, 0, 1, 1));
        }
    }
}
