//! Exact 2D primitives: points, segments, paper rectangles, and the
//! cut-graph vertex computation used by the solvers.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (&self.x, &self.y).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (x, y) = <(Rational, Rational)>::deserialize(deserializer)?;
        Ok(Point { x, y })
    }
}

/// A cut segment with two distinct endpoints.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    a: Point,
    b: Point,
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}-{:?}", self.a, self.b)
    }
}

impl Serialize for Segment {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (&self.a, &self.b).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Segment {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (a, b) = <(Point, Point)>::deserialize(deserializer)?;
        Segment::new(a, b).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("degenerate segment: both endpoints are {0:?}")]
    DegenerateSegment(Point),
    #[error("collinear segments {0:?} and {1:?} overlap in more than one point")]
    Overlap(Segment, Segment),
    #[error("paper dimensions must be positive, got {width} x {height}")]
    NonPositivePaper { width: Rational, height: Rational },
}

/// Slope of a segment. Vertical is its own case rather than a sentinel value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Slope {
    Finite(Rational),
    Vertical,
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Slope::Finite(m) => m.serialize(serializer),
            Slope::Vertical => serializer.serialize_str("vertical"),
        }
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        if s == "vertical" {
            return Ok(Slope::Vertical);
        }
        s.parse::<Rational>()
            .map(Slope::Finite)
            .map_err(serde::de::Error::custom)
    }
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Self, GeometryError> {
        if a == b {
            return Err(GeometryError::DegenerateSegment(a));
        }
        Ok(Segment { a, b })
    }

    pub fn a(&self) -> &Point {
        &self.a
    }

    pub fn b(&self) -> &Point {
        &self.b
    }

    pub fn slope(&self) -> Slope {
        if self.a.x == self.b.x {
            Slope::Vertical
        } else {
            let dy = &self.b.y - &self.a.y;
            let dx = &self.b.x - &self.a.x;
            Slope::Finite(dy / dx)
        }
    }

    pub fn x_min(&self) -> &Rational {
        if self.a.x <= self.b.x {
            &self.a.x
        } else {
            &self.b.x
        }
    }

    pub fn x_max(&self) -> &Rational {
        if self.a.x >= self.b.x {
            &self.a.x
        } else {
            &self.b.x
        }
    }

    pub fn y_min(&self) -> &Rational {
        if self.a.y <= self.b.y {
            &self.a.y
        } else {
            &self.b.y
        }
    }

    pub fn y_max(&self) -> &Rational {
        if self.a.y >= self.b.y {
            &self.a.y
        } else {
            &self.b.y
        }
    }

    /// Endpoint-sorted copy (lexicographically smaller endpoint first), for
    /// canonical comparisons.
    pub fn normalized(&self) -> Segment {
        if self.a <= self.b {
            self.clone()
        } else {
            Segment {
                a: self.b.clone(),
                b: self.a.clone(),
            }
        }
    }

    /// The unique point of `self` with the given x coordinate, if the segment
    /// is not vertical and the coordinate is within its x range.
    pub fn point_at_x(&self, x: &Rational) -> Option<Point> {
        if self.a.x == self.b.x || x < self.x_min() || x > self.x_max() {
            return None;
        }
        let t = (x - &self.a.x) / (&self.b.x - &self.a.x);
        let y = &self.a.y + &t * (&self.b.y - &self.a.y);
        Some(Point::new(x.clone(), y))
    }

    /// Same along the y axis, for non-horizontal segments.
    pub fn point_at_y(&self, y: &Rational) -> Option<Point> {
        if self.a.y == self.b.y || y < self.y_min() || y > self.y_max() {
            return None;
        }
        let t = (y - &self.a.y) / (&self.b.y - &self.a.y);
        let x = &self.a.x + &t * (&self.b.x - &self.a.x);
        Some(Point::new(x, y.clone()))
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        if cross(&self.a, &self.b, p) != Rational::zero() {
            return false;
        }
        p.x >= *self.x_min() && p.x <= *self.x_max() && p.y >= *self.y_min() && p.y <= *self.y_max()
    }
}

/// Cross product of (b - a) x (p - a).
fn cross(a: &Point, b: &Point, p: &Point) -> Rational {
    let abx = &b.x - &a.x;
    let aby = &b.y - &a.y;
    let apx = &p.x - &a.x;
    let apy = &p.y - &a.y;
    abx * apy - aby * apx
}

/// A closed interval `[lo, hi]`, possibly degenerate to a single point.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval1D {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval1D {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval bounds out of order");
        Interval1D { lo, hi }
    }

    pub fn point(at: Rational) -> Self {
        Interval1D {
            lo: at.clone(),
            hi: at,
        }
    }

    pub fn length(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> Rational {
        Rational::midpoint(&self.lo, &self.hi)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        *x >= self.lo && *x <= self.hi
    }

    pub fn contains_strictly(&self, x: &Rational) -> bool {
        *x > self.lo && *x < self.hi
    }
}

impl fmt::Debug for Interval1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Serialize for Interval1D {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (&self.lo, &self.hi).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Interval1D {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (lo, hi) = <(Rational, Rational)>::deserialize(deserializer)?;
        if lo > hi {
            return Err(serde::de::Error::custom(format!(
                "interval bounds out of order: [{lo}, {hi}]"
            )));
        }
        Ok(Interval1D { lo, hi })
    }
}

/// The paper rectangle `[0, width] x [0, height]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaperRect {
    width: Rational,
    height: Rational,
}

impl PaperRect {
    pub fn new(width: Rational, height: Rational) -> Result<Self, GeometryError> {
        if !width.is_positive() || !height.is_positive() {
            return Err(GeometryError::NonPositivePaper { width, height });
        }
        Ok(PaperRect { width, height })
    }

    pub fn width(&self) -> &Rational {
        &self.width
    }

    pub fn height(&self) -> &Rational {
        &self.height
    }

    pub fn contains(&self, p: &Point) -> bool {
        !p.x.is_negative() && !p.y.is_negative() && p.x <= self.width && p.y <= self.height
    }

    pub fn strictly_contains(&self, p: &Point) -> bool {
        p.x.is_positive() && p.y.is_positive() && p.x < self.width && p.y < self.height
    }
}

/// Intersection of two segments when it is a single point (proper crossings,
/// T-contacts, and shared endpoints all count). Collinear segments sharing
/// more than one point are an error; instance ingestion merges those first.
pub fn segment_intersection(s1: &Segment, s2: &Segment) -> Result<Option<Point>, GeometryError> {
    let d1 = (&s1.b.x - &s1.a.x, &s1.b.y - &s1.a.y);
    let d2 = (&s2.b.x - &s2.a.x, &s2.b.y - &s2.a.y);
    let denom = &d1.0 * &d2.1 - &d1.1 * &d2.0;
    if denom.is_zero() {
        // Parallel. Collinear iff s2's start sits on s1's line.
        if !cross(&s1.a, &s1.b, &s2.a).is_zero() {
            return Ok(None);
        }
        return collinear_touch(s1, s2);
    }
    // Solve s1.a + t*d1 = s2.a + u*d2 for t, u in [0, 1].
    let ex = &s2.a.x - &s1.a.x;
    let ey = &s2.a.y - &s1.a.y;
    let t = (&ex * &d2.1 - &ey * &d2.0) / &denom;
    let u = (&ex * &d1.1 - &ey * &d1.0) / &denom;
    let zero = Rational::zero();
    let one = Rational::one();
    if t < zero || t > one || u < zero || u > one {
        return Ok(None);
    }
    let x = &s1.a.x + &t * &d1.0;
    let y = &s1.a.y + &t * &d1.1;
    Ok(Some(Point::new(x, y)))
}

fn collinear_touch(s1: &Segment, s2: &Segment) -> Result<Option<Point>, GeometryError> {
    // Project on the dominant axis of s1.
    let vertical = s1.a.x == s1.b.x;
    let key = |p: &Point| if vertical { p.y.clone() } else { p.x.clone() };
    let (lo1, hi1) = ordered(key(&s1.a), key(&s1.b));
    let (lo2, hi2) = ordered(key(&s2.a), key(&s2.b));
    let lo = Rational::max(lo1, lo2);
    let hi = Rational::min(hi1, hi2);
    if lo > hi {
        return Ok(None);
    }
    if lo < hi {
        return Err(GeometryError::Overlap(s1.clone(), s2.clone()));
    }
    // Exactly one shared point.
    let p = if vertical {
        s1.point_at_y(&lo)
            .unwrap_or_else(|| pick_endpoint_at(s1, &lo, true))
    } else {
        s1.point_at_x(&lo)
            .unwrap_or_else(|| pick_endpoint_at(s1, &lo, false))
    };
    Ok(Some(p))
}

fn pick_endpoint_at(s: &Segment, key: &Rational, vertical: bool) -> Point {
    let matches = |p: &Point| if vertical { &p.y == key } else { &p.x == key };
    if matches(&s.a) {
        s.a.clone()
    } else {
        s.b.clone()
    }
}

fn ordered(a: Rational, b: Rational) -> (Rational, Rational) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// All segment endpoints plus all pairwise single-point intersections.
pub fn cut_graph_vertices(cuts: &[Segment]) -> Result<BTreeSet<Point>, GeometryError> {
    let mut vertices = BTreeSet::new();
    for s in cuts {
        vertices.insert(s.a.clone());
        vertices.insert(s.b.clone());
    }
    for (i, s1) in cuts.iter().enumerate() {
        for s2 in &cuts[i + 1..] {
            if let Some(p) = segment_intersection(s1, s2)? {
                vertices.insert(p);
            }
        }
    }
    Ok(vertices)
}

/// Merges collinear segments whose union is connected into maximal segments.
/// Segments on distinct lines pass through untouched. Output is sorted.
pub fn merge_collinear_segments(segments: Vec<Segment>) -> Vec<Segment> {
    use std::collections::BTreeMap;

    // Canonical line key: reduced normal (nx, ny) with first nonzero positive,
    // plus offset c where nx*x + ny*y = c.
    let mut groups: BTreeMap<(Rational, Rational, Rational), Vec<Segment>> = BTreeMap::new();
    for s in segments {
        let dx = &s.b.x - &s.a.x;
        let dy = &s.b.y - &s.a.y;
        let (mut nx, mut ny) = (dy, -dx);
        // Scale so the first nonzero component is 1.
        let scale = if nx.is_zero() { ny.clone() } else { nx.clone() };
        nx = nx / &scale;
        ny = ny / &scale;
        let c = &nx * &s.a.x + &ny * &s.a.y;
        groups.entry((nx, ny, c)).or_default().push(s);
    }

    let mut out = Vec::new();
    for ((_, ny, _), mut group) in groups {
        if group.len() == 1 {
            out.push(group.pop().unwrap());
            continue;
        }
        let vertical = ny.is_zero();
        let key = |p: &Point| if vertical { p.y.clone() } else { p.x.clone() };
        let mut spans: Vec<(Rational, Rational, Segment)> = group
            .into_iter()
            .map(|s| {
                let (lo, hi) = ordered(key(s.a()), key(s.b()));
                (lo, hi, s)
            })
            .collect();
        spans.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
        let mut iter = spans.into_iter();
        let (mut lo, mut hi, mut seg) = iter.next().unwrap();
        for (nlo, nhi, nseg) in iter {
            if nlo <= hi {
                // Touching or overlapping: extend.
                if nhi > hi {
                    hi = nhi;
                    seg = merge_endpoints(&seg, &nseg, &lo, &hi, vertical);
                }
            } else {
                out.push(seg);
                (lo, hi, seg) = (nlo, nhi, nseg);
            }
        }
        let _ = lo;
        out.push(seg);
    }
    out.sort_by(|a, b| a.normalized().cmp(&b.normalized()));
    out.into_iter().map(|s| s.normalized()).collect()
}

fn merge_endpoints(
    s1: &Segment,
    s2: &Segment,
    lo: &Rational,
    hi: &Rational,
    vertical: bool,
) -> Segment {
    let pts = [s1.a(), s1.b(), s2.a(), s2.b()];
    let key = |p: &&Point| if vertical { p.y.clone() } else { p.x.clone() };
    let a = pts.iter().find(|p| key(p) == *lo).unwrap();
    let b = pts.iter().find(|p| key(p) == *hi).unwrap();
    Segment::new((*a).clone(), (*b).clone()).expect("merged span has positive length")
}
