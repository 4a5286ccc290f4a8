//! Band/stripe decomposition of one axis.
//!
//! A position is banned for creases (it lies in a band) when the
//! perpendicular line there crosses some cut away from every cut-graph
//! vertex. The remaining positions form closed stripes, possibly single
//! points; crossing through a vertex is allowed, so a four-way intersection
//! leaves a zero-width stripe at its coordinate. Stripes touching the paper
//! edge need no crease and are absorbed into the neighboring band.

use std::collections::BTreeSet;

use crate::geometry::{Interval1D, Point, Segment};
use crate::rational::Rational;

use super::{Axis, CutInstance};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    /// Open interval where creases are banned.
    Band(Interval1D),
    /// Closed (possibly degenerate) interval where creases are allowed.
    Stripe(Interval1D),
}

/// Alternating band/stripe tiling of `[0, extent]`, beginning and ending
/// with a band.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub axis: Axis,
    pub extent: Rational,
    pub elements: Vec<Element>,
}

impl Decomposition {
    pub fn stripes(&self) -> impl Iterator<Item = &Interval1D> {
        self.elements.iter().filter_map(|e| match e {
            Element::Stripe(s) => Some(s),
            Element::Band(_) => None,
        })
    }

    pub fn bands(&self) -> impl Iterator<Item = &Interval1D> {
        self.elements.iter().filter_map(|e| match e {
            Element::Band(b) => Some(b),
            Element::Stripe(_) => None,
        })
    }
}

fn coord(axis: Axis, p: &Point) -> &Rational {
    match axis {
        Axis::X => &p.x,
        Axis::Y => &p.y,
    }
}

fn span(axis: Axis, s: &Segment) -> (&Rational, &Rational) {
    match axis {
        Axis::X => (s.x_min(), s.x_max()),
        Axis::Y => (s.y_min(), s.y_max()),
    }
}

/// Computes the band/stripe structure of the given axis.
pub fn compute_decomposition(inst: &CutInstance, axis: Axis) -> Decomposition {
    let extent = match axis {
        Axis::X => inst.paper().width().clone(),
        Axis::Y => inst.paper().height().clone(),
    };
    let vertices = inst.vertices();

    // Per segment: the axis coordinates of cut-graph vertices on it, sorted.
    // A line through one of these crosses the segment only at a vertex.
    let punctured: Vec<(&Segment, Rational, Rational, Vec<Rational>)> = inst
        .cuts()
        .iter()
        .map(|s| {
            let (lo, hi) = span(axis, s);
            let mut on_seg: Vec<Rational> = vertices
                .iter()
                .filter(|v| s.contains_point(v))
                .map(|v| coord(axis, v).clone())
                .collect();
            on_seg.sort();
            on_seg.dedup();
            (s, lo.clone(), hi.clone(), on_seg)
        })
        .collect();

    let mut criticals: BTreeSet<Rational> = BTreeSet::new();
    criticals.insert(Rational::zero());
    criticals.insert(extent.clone());
    for (_, lo, hi, _) in &punctured {
        criticals.insert(lo.clone());
        criticals.insert(hi.clone());
    }
    for v in &vertices {
        criticals.insert(coord(axis, v).clone());
    }
    let criticals: Vec<Rational> = criticals
        .into_iter()
        .filter(|c| !c.is_negative() && *c <= extent)
        .collect();

    let point_banned = |x: &Rational| {
        punctured
            .iter()
            .any(|(_, lo, hi, on_seg)| lo < x && x < hi && on_seg.binary_search(x).is_err())
    };
    // Between adjacent criticals no puncture occurs, so a covering segment
    // bans the whole open cell.
    let cell_banned =
        |a: &Rational, b: &Rational| punctured.iter().any(|(_, lo, hi, _)| lo <= a && b <= hi);

    // Walk points and open cells in order, collecting maximal allowed runs.
    let mut components: Vec<Interval1D> = Vec::new();
    let mut run_start: Option<Rational> = None;
    let mut run_end: Option<Rational> = None;
    let mut close_run = |start: &mut Option<Rational>, end: &mut Option<Rational>| {
        if let (Some(s), Some(e)) = (start.take(), end.take()) {
            components.push(Interval1D::new(s, e));
        }
    };
    for (i, c) in criticals.iter().enumerate() {
        if point_banned(c) {
            close_run(&mut run_start, &mut run_end);
        } else {
            if run_start.is_none() {
                run_start = Some(c.clone());
            }
            run_end = Some(c.clone());
        }
        if let Some(next) = criticals.get(i + 1) {
            if cell_banned(c, next) {
                close_run(&mut run_start, &mut run_end);
            } else {
                // A segment strictly covering the point c would cover this
                // cell too, so the run is already open here.
                debug_assert!(run_start.is_some());
                if run_start.is_none() {
                    run_start = Some(c.clone());
                }
                run_end = Some(next.clone());
            }
        }
    }
    close_run(&mut run_start, &mut run_end);

    // Allowed components touching the paper edge become part of the
    // adjacent band; no crease is ever needed there.
    let stripes: Vec<Interval1D> = components
        .into_iter()
        .filter(|c| !c.lo.is_zero() && c.hi != extent)
        .collect();

    let mut elements = Vec::with_capacity(stripes.len() * 2 + 1);
    let mut prev = Rational::zero();
    for s in stripes {
        elements.push(Element::Band(Interval1D::new(prev, s.lo.clone())));
        prev = s.hi.clone();
        elements.push(Element::Stripe(s));
    }
    elements.push(Element::Band(Interval1D::new(prev, extent.clone())));

    Decomposition {
        axis,
        extent,
        elements,
    }
}

/// One crease at the center of every stripe (the point itself for
/// zero-width stripes).
pub fn canonical_creases(dec: &Decomposition) -> Vec<Rational> {
    dec.stripes().map(|s| s.midpoint()).collect()
}

#[cfg(test)]
mod tests {
    use super::super::tests::{instance, seg, v_instance};
    use super::*;
    use crate::rat;

    #[test]
    fn v_instance_vertical_axis_has_apex_stripe() {
        let dec = compute_decomposition(&v_instance(), Axis::X);
        assert_eq!(
            dec.elements,
            vec![
                Element::Band(Interval1D::new(rat!(0), rat!(3))),
                Element::Stripe(Interval1D::point(rat!(3))),
                Element::Band(Interval1D::new(rat!(3), rat!(6))),
            ]
        );
        assert_eq!(canonical_creases(&dec), vec![rat!(3)]);
    }

    #[test]
    fn v_instance_horizontal_axis_is_one_band() {
        // Allowed regions [0,1] and {4} touch the paper edges and merge
        // into the band; no horizontal creases.
        let dec = compute_decomposition(&v_instance(), Axis::Y);
        assert_eq!(
            dec.elements,
            vec![Element::Band(Interval1D::new(rat!(0), rat!(4)))]
        );
        assert!(canonical_creases(&dec).is_empty());
    }

    #[test]
    fn x_crossing_has_zero_width_stripes_both_axes() {
        let inst = instance(2, 2, vec![seg(0, 0, 2, 2), seg(0, 2, 2, 0)]);
        for axis in [Axis::X, Axis::Y] {
            let dec = compute_decomposition(&inst, axis);
            assert_eq!(
                dec.elements,
                vec![
                    Element::Band(Interval1D::new(rat!(0), rat!(1))),
                    Element::Stripe(Interval1D::point(rat!(1))),
                    Element::Band(Interval1D::new(rat!(1), rat!(2))),
                ],
                "axis {axis:?}"
            );
            assert_eq!(canonical_creases(&dec), vec![rat!(1)]);
        }
    }

    #[test]
    fn positive_width_stripe_between_separated_cuts() {
        // Fig.-7-style pair: gap [1,2] in x is a positive-width stripe.
        let inst = instance(4, 2, vec![seg(0, 0, 1, 1), seg(2, 0, 4, 2)]);
        let dec = compute_decomposition(&inst, Axis::X);
        assert_eq!(
            dec.elements,
            vec![
                Element::Band(Interval1D::new(rat!(0), rat!(1))),
                Element::Stripe(Interval1D::new(rat!(1), rat!(2))),
                Element::Band(Interval1D::new(rat!(2), rat!(4))),
            ]
        );
        assert_eq!(canonical_creases(&dec), vec![rat!(3 / 2)]);
    }

    #[test]
    fn lone_interior_segment_leaves_no_stripes() {
        let inst = instance(4, 4, vec![seg(1, 1, 3, 3)]);
        for axis in [Axis::X, Axis::Y] {
            let dec = compute_decomposition(&inst, axis);
            assert_eq!(
                dec.elements,
                vec![Element::Band(Interval1D::new(rat!(0), rat!(4)))],
                "axis {axis:?}"
            );
        }
    }

    #[test]
    fn canonical_creases_of_midpoint_and_point_stripes() {
        let dec = Decomposition {
            axis: Axis::X,
            extent: rat!(10),
            elements: vec![
                Element::Band(Interval1D::new(rat!(0), rat!(1))),
                Element::Stripe(Interval1D::new(rat!(1), rat!(2))),
                Element::Band(Interval1D::new(rat!(2), rat!(3))),
                Element::Stripe(Interval1D::point(rat!(3))),
                Element::Band(Interval1D::new(rat!(3), rat!(10))),
            ],
        };
        assert_eq!(canonical_creases(&dec), vec![rat!(3 / 2), rat!(3)]);
    }
}
