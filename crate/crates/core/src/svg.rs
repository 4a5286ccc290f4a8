//! Deterministic SVG rendering of instances and solutions.
//!
//! Cuts and holes are bold green, mountain creases red, valley creases blue,
//! unlabeled creases purple. 1D instances render as a horizontal strip with
//! dots for cut points and creases; negative signed points are squares.
//! Coordinates are decimal presentations (truncated at six fractional
//! digits) of the exact rationals; stroke widths and radii are fixed
//! fractions of the drawing extent, so identical documents produce
//! identical bytes. The constants are listed in `docs/formats.md`.

use std::fmt::Write;

use crate::foldcut::{CreaseLabel, CutInstance, MvAssignment};
use crate::formats::{InstanceDocument, SolutionDocument};
use crate::geometry::{Interval1D, Point, Segment};
use crate::oned::CutInterval;
use crate::rational::Rational;

const CUT_COLOR: &str = "green";
const MOUNTAIN_COLOR: &str = "red";
const VALLEY_COLOR: &str = "blue";
const CREASE_COLOR: &str = "purple";
const OUTLINE_COLOR: &str = "black";

fn dec(r: &Rational) -> String {
    r.to_decimal(6)
}

/// Renders an instance, with the solution's creases and folded artifacts
/// overlaid when one is given. A solution of a different kind than the
/// instance is ignored.
pub fn render_svg(instance: &InstanceDocument, solution: Option<&SolutionDocument>) -> String {
    let solution = solution.filter(|s| s.kind() == instance.kind());
    match instance {
        InstanceDocument::Foldcut(inst) => render_foldcut(inst, solution),
        InstanceDocument::Punch(inst) => render_punch(inst, solution),
        InstanceDocument::OnedUnsigned(inst) => {
            let points: Vec<(Rational, bool)> = inst
                .cut_points()
                .iter()
                .map(|p| (p.clone(), true))
                .collect();
            let creases = match solution {
                Some(SolutionDocument::OnedUnsigned { creases, .. }) => creases.clone(),
                _ => Vec::new(),
            };
            render_strip(inst.lo(), inst.hi(), &points, &[], &creases, &[])
        }
        InstanceDocument::OnedSigned(inst) => {
            let points: Vec<(Rational, bool)> = inst
                .cut_points()
                .iter()
                .map(|(p, sign)| (p.clone(), *sign == crate::foldmap::Sign::Plus))
                .collect();
            let creases = match solution {
                Some(SolutionDocument::OnedSignedSolvable { creases, .. }) => creases.clone(),
                _ => Vec::new(),
            };
            render_strip(inst.lo(), inst.hi(), &points, &[], &creases, &[])
        }
        InstanceDocument::OnedInterval(inst) => {
            let intervals: Vec<Interval1D> = inst
                .cut_intervals()
                .iter()
                .map(|ci| ci.interval.clone())
                .collect();
            let required: Vec<Rational> = inst
                .cut_intervals()
                .iter()
                .flat_map(|ci: &CutInterval| ci.required_creases.iter().cloned())
                .collect();
            let creases = match solution {
                Some(SolutionDocument::OnedIntervalSolvable { creases, .. }) => creases
                    .iter()
                    .filter(|c| !required.contains(c))
                    .cloned()
                    .collect(),
                _ => Vec::new(),
            };
            render_strip(inst.lo(), inst.hi(), &[], &intervals, &creases, &required)
        }
    }
}

struct Canvas {
    out: String,
    height: Rational,
}

impl Canvas {
    fn new(width: &Rational, height: &Rational) -> Canvas {
        let mut out = String::new();
        writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {} {}">"#,
            dec(width),
            dec(height)
        )
        .unwrap();
        Canvas {
            out,
            height: height.clone(),
        }
    }

    /// Paper y grows upward; SVG y grows downward.
    fn flip(&self, y: &Rational) -> Rational {
        &self.height - y
    }

    fn line(&mut self, a: &Point, b: &Point, color: &str, width: &Rational) {
        writeln!(
            self.out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}" stroke-width="{}" stroke-linecap="round"/>"#,
            dec(&a.x),
            dec(&self.flip(&a.y)),
            dec(&b.x),
            dec(&self.flip(&b.y)),
            color,
            dec(width)
        )
        .unwrap();
    }

    fn circle(&mut self, center: &Point, r: &Rational, color: &str) {
        writeln!(
            self.out,
            r#"<circle cx="{}" cy="{}" r="{}" fill="{}"/>"#,
            dec(&center.x),
            dec(&self.flip(&center.y)),
            dec(r),
            color
        )
        .unwrap();
    }

    fn ring(&mut self, center: &Point, r: &Rational, color: &str, width: &Rational) {
        writeln!(
            self.out,
            r#"<circle cx="{}" cy="{}" r="{}" fill="none" stroke="{}" stroke-width="{}"/>"#,
            dec(&center.x),
            dec(&self.flip(&center.y)),
            dec(r),
            color,
            dec(width)
        )
        .unwrap();
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }
}

fn outline(canvas: &mut Canvas, width: &Rational, height: &Rational, stroke: &Rational) {
    writeln!(
        canvas.out,
        r#"<rect x="0" y="0" width="{}" height="{}" fill="none" stroke="{}" stroke-width="{}"/>"#,
        dec(width),
        dec(height),
        OUTLINE_COLOR,
        dec(stroke)
    )
    .unwrap();
}

fn label_color(label: CreaseLabel) -> &'static str {
    match label {
        CreaseLabel::Mountain => MOUNTAIN_COLOR,
        CreaseLabel::Valley => VALLEY_COLOR,
    }
}

fn render_creases_2d(
    canvas: &mut Canvas,
    width: &Rational,
    height: &Rational,
    vertical: &[Rational],
    horizontal: &[Rational],
    mv: Option<&MvAssignment>,
    stroke: &Rational,
) {
    for (i, c) in vertical.iter().enumerate() {
        let color = mv
            .map(|mv| label_color(mv.vertical[i]))
            .unwrap_or(CREASE_COLOR);
        canvas.line(
            &Point::new(c.clone(), Rational::zero()),
            &Point::new(c.clone(), height.clone()),
            color,
            stroke,
        );
    }
    // Horizontal creases flip label across each vertical crease; draw one
    // sub-segment per column.
    let mut columns = Vec::with_capacity(vertical.len() + 2);
    columns.push(Rational::zero());
    columns.extend(vertical.iter().cloned());
    columns.push(width.clone());
    for (i, c) in horizontal.iter().enumerate() {
        match mv {
            Some(mv) => {
                for col in 0..columns.len() - 1 {
                    let color = label_color(mv.horizontal[col][i]);
                    canvas.line(
                        &Point::new(columns[col].clone(), c.clone()),
                        &Point::new(columns[col + 1].clone(), c.clone()),
                        color,
                        stroke,
                    );
                }
            }
            None => {
                canvas.line(
                    &Point::new(Rational::zero(), c.clone()),
                    &Point::new(width.clone(), c.clone()),
                    CREASE_COLOR,
                    stroke,
                );
            }
        }
    }
}

fn render_foldcut(inst: &CutInstance, solution: Option<&SolutionDocument>) -> String {
    let width = inst.paper().width();
    let height = inst.paper().height();
    let unit = Rational::max(width.clone(), height.clone());
    let cut_stroke = &unit / &Rational::from(60);
    let crease_stroke = &unit / &Rational::from(150);
    let outline_stroke = &unit / &Rational::from(300);

    let mut canvas = Canvas::new(width, height);
    outline(&mut canvas, width, height, &outline_stroke);
    if let Some(SolutionDocument::FoldcutSolvable {
        vertical_creases,
        horizontal_creases,
        mv,
        ..
    }) = solution
    {
        render_creases_2d(
            &mut canvas,
            width,
            height,
            vertical_creases,
            horizontal_creases,
            mv.as_ref(),
            &crease_stroke,
        );
    }
    for cut in inst.cuts() {
        render_segment(&mut canvas, cut, CUT_COLOR, &cut_stroke);
    }
    canvas.finish()
}

fn render_segment(canvas: &mut Canvas, s: &Segment, color: &str, width: &Rational) {
    let (a, b) = (s.a().clone(), s.b().clone());
    canvas.line(&a, &b, color, width);
}

fn render_punch(inst: &crate::punch::HoleInstance, solution: Option<&SolutionDocument>) -> String {
    let width = inst.paper().width();
    let height = inst.paper().height();
    let unit = Rational::max(width.clone(), height.clone());
    let dot = &unit / &Rational::from(60);
    let crease_stroke = &unit / &Rational::from(150);
    let outline_stroke = &unit / &Rational::from(300);

    let mut canvas = Canvas::new(width, height);
    outline(&mut canvas, width, height, &outline_stroke);
    if let Some(SolutionDocument::PunchSolvable {
        vertical_creases,
        horizontal_creases,
        mv,
        punch_point,
    }) = solution
    {
        render_creases_2d(
            &mut canvas,
            width,
            height,
            vertical_creases,
            horizontal_creases,
            Some(mv),
            &crease_stroke,
        );
        let ring_r = &unit / &Rational::from(40);
        canvas.ring(punch_point, &ring_r, CUT_COLOR, &crease_stroke);
    }
    for hole in inst.holes() {
        canvas.circle(hole, &dot, CUT_COLOR);
    }
    canvas.finish()
}

/// 1D strip: the domain drawn as a horizontal baseline two units tall in
/// viewBox coordinates, with dots for points and bold spans for intervals.
/// Positive cut points are circles, negative ones squares.
fn render_strip(
    lo: &Rational,
    hi: &Rational,
    cut_points: &[(Rational, bool)],
    cut_intervals: &[Interval1D],
    creases: &[Rational],
    required_creases: &[Rational],
) -> String {
    let len = hi - lo;
    let margin = &len / &Rational::from(20);
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} -1 {} 2">"#,
        dec(&(lo - &margin)),
        dec(&(&len + &(&margin + &margin)))
    )
    .unwrap();
    let baseline = &len / &Rational::from(200);
    writeln!(
        out,
        r#"<line x1="{}" y1="0" x2="{}" y2="0" stroke="{}" stroke-width="{}"/>"#,
        dec(lo),
        dec(hi),
        OUTLINE_COLOR,
        dec(&baseline)
    )
    .unwrap();
    let span_stroke = &len / &Rational::from(40);
    for iv in cut_intervals {
        writeln!(
            out,
            r#"<line x1="{}" y1="0" x2="{}" y2="0" stroke="{}" stroke-width="{}"/>"#,
            dec(&iv.lo),
            dec(&iv.hi),
            CUT_COLOR,
            dec(&span_stroke)
        )
        .unwrap();
    }
    let dot = &len / &Rational::from(50);
    for (p, positive) in cut_points {
        if *positive {
            writeln!(
                out,
                r#"<circle cx="{}" cy="0" r="{}" fill="{}"/>"#,
                dec(p),
                dec(&dot),
                CUT_COLOR
            )
            .unwrap();
        } else {
            let side = &dot + &dot;
            writeln!(
                out,
                r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{}"/>"#,
                dec(&(p - &dot)),
                dec(&-(&dot)),
                dec(&side),
                dec(&side),
                CUT_COLOR
            )
            .unwrap();
        }
    }
    let crease_dot = &len / &Rational::from(75);
    for c in required_creases {
        writeln!(
            out,
            r#"<circle cx="{}" cy="0" r="{}" fill="{}"/>"#,
            dec(c),
            dec(&crease_dot),
            CUT_COLOR
        )
        .unwrap();
    }
    for c in creases {
        writeln!(
            out,
            r#"<circle cx="{}" cy="0" r="{}" fill="{}"/>"#,
            dec(c),
            dec(&crease_dot),
            CREASE_COLOR
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
