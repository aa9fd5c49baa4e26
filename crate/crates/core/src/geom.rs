//! Exact-formula 2D primitives: points, lines, circles, intersections.
//!
//! All values are immutable and all operations are pure functions, so the
//! whole module is trivially thread-safe. Coordinates are dimensionless
//! construction units; figures are expected to be O(1)-O(10) in size, which
//! keeps closed-form double-precision intersections far below the default
//! tolerance.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

pub use crate::error::GeomError;

/// A 2D point in construction units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

/// A 2D displacement.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dist(&self, other: Point) -> f64 {
        (*self - other).norm()
    }

    pub fn midpoint(&self, other: Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn dot(&self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(&self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn unit(&self) -> Result<Vec2, GeomError> {
        let n = self.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(GeomError::ZeroDirection);
        }
        Ok(Vec2::new(self.x / n, self.y / n))
    }

    /// Counterclockwise rotation by 90 degrees.
    pub fn perp(&self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }
}

impl Sub for Point {
    type Output = Vec2;
    fn sub(self, rhs: Point) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add<Vec2> for Point {
    type Output = Point;
    fn add(self, rhs: Vec2) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub<Vec2> for Point {
    type Output = Point;
    fn sub(self, rhs: Vec2) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// Absolute/relative epsilon policy used by every comparison in the crate.
///
/// Two quantities are equal when their difference is below
/// `max(abs_eps, rel_eps * magnitude)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs_eps: f64,
    pub rel_eps: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs_eps: 1e-9,
            rel_eps: 1e-9,
        }
    }
}

impl Tolerance {
    /// Both epsilons must be strictly positive.
    pub fn new(abs_eps: f64, rel_eps: f64) -> Result<Self, GeomError> {
        if !(abs_eps > 0.0 && rel_eps > 0.0) {
            return Err(GeomError::Invalid("tolerance epsilons must be positive"));
        }
        Ok(Tolerance { abs_eps, rel_eps })
    }

    pub fn threshold(&self, magnitude: f64) -> f64 {
        self.abs_eps.max(self.rel_eps * magnitude.abs())
    }

    pub fn eq(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.threshold(a.abs().max(b.abs()))
    }

    pub fn is_zero(&self, v: f64, magnitude: f64) -> bool {
        v.abs() <= self.threshold(magnitude)
    }
}

/// A line given by an anchor point and a unit direction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LineSpec {
    pub anchor: Point,
    pub direction: Vec2,
}

impl LineSpec {
    /// Normalizes the direction; errors on a zero vector.
    pub fn new(anchor: Point, direction: Vec2) -> Result<Self, GeomError> {
        Ok(LineSpec {
            anchor,
            direction: direction.unit()?,
        })
    }

    /// Line through two distinct points, directed from `a` towards `b`.
    pub fn through(a: Point, b: Point) -> Result<Self, GeomError> {
        let d = (b - a).unit().map_err(|_| GeomError::CoincidentPoints)?;
        Ok(LineSpec {
            anchor: a,
            direction: d,
        })
    }

    pub fn point_at(&self, t: f64) -> Point {
        self.anchor + self.direction * t
    }

    /// Signed parameter of the orthogonal projection of `p`.
    pub fn project(&self, p: Point) -> f64 {
        (p - self.anchor).dot(self.direction)
    }

    pub fn distance_to(&self, p: Point) -> f64 {
        (p - self.anchor).cross(self.direction).abs()
    }
}

/// A circle with strictly positive radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CircleSpec {
    pub centre: Point,
    pub radius: f64,
}

impl CircleSpec {
    pub fn new(centre: Point, radius: f64) -> Result<Self, GeomError> {
        if !(radius > 0.0 && radius.is_finite() && centre.is_finite()) {
            return Err(GeomError::Invalid(
                "circle needs a finite centre and a positive radius",
            ));
        }
        Ok(CircleSpec { centre, radius })
    }
}

/// Fixed output ordering for intersection pairs: larger y first, ties broken
/// by larger x. Constructions use it to pick the "upper" branch.
fn order_pair(p: Point, q: Point) -> (Point, Point) {
    if p.y > q.y || (p.y == q.y && p.x >= q.x) {
        (p, q)
    } else {
        (q, p)
    }
}

/// Intersection of two circles.
///
/// Returns zero, one or two points (upper first). Tangency within `tol`
/// collapses to exactly one point on the line of centres.
pub fn intersect_circle_circle(
    c1: CircleSpec,
    c2: CircleSpec,
    tol: Tolerance,
) -> Result<Vec<Point>, GeomError> {
    let delta = c2.centre - c1.centre;
    let d = delta.norm();
    let scale = d.max(c1.radius).max(c2.radius);
    if tol.is_zero(d, scale) {
        if tol.eq(c1.radius, c2.radius) {
            return Err(GeomError::ConcentricIdentical);
        }
        return Ok(vec![]);
    }
    let u = delta.unit()?;
    let sum = c1.radius + c2.radius;
    let diff = (c1.radius - c2.radius).abs();
    // Distance from c1 to the radical line along u.
    let a = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d);
    if tol.eq(d, sum) || tol.eq(d, diff) {
        return Ok(vec![c1.centre + u * a]);
    }
    if d > sum || d < diff {
        return Ok(vec![]);
    }
    let h_sq = c1.radius * c1.radius - a * a;
    if h_sq <= 0.0 {
        // Numerically inside the annulus but below resolution: tangent.
        return Ok(vec![c1.centre + u * a]);
    }
    let h = h_sq.sqrt();
    let foot = c1.centre + u * a;
    let (p, q) = order_pair(foot + u.perp() * h, foot - u.perp() * h);
    Ok(vec![p, q])
}

/// Intersection of a line and a circle, ordered by parameter along the
/// line's direction.
pub fn intersect_line_circle(l: LineSpec, c: CircleSpec, tol: Tolerance) -> Vec<Point> {
    let t0 = l.project(c.centre);
    let foot = l.point_at(t0);
    let h = foot.dist(c.centre);
    if tol.eq(h, c.radius) {
        return vec![foot];
    }
    if h > c.radius {
        return vec![];
    }
    let half = (c.radius * c.radius - h * h).sqrt();
    vec![l.point_at(t0 - half), l.point_at(t0 + half)]
}

/// Intersection of two non-parallel lines.
pub fn intersect_line_line(l1: LineSpec, l2: LineSpec, tol: Tolerance) -> Result<Point, GeomError> {
    let cross = l1.direction.cross(l2.direction);
    // Directions are unit vectors, so the cross product is sin of the angle.
    if tol.is_zero(cross, 1.0) {
        return Err(GeomError::Parallel);
    }
    let t = (l2.anchor - l1.anchor).cross(l2.direction) / cross;
    Ok(l1.point_at(t))
}

/// Line through `p` perpendicular to `l`.
pub fn perpendicular_through(l: LineSpec, p: Point) -> LineSpec {
    LineSpec {
        anchor: p,
        direction: l.direction.perp(),
    }
}

/// Perpendicular bisector of the segment `p1 p2`.
pub fn perpendicular_bisector(p1: Point, p2: Point, tol: Tolerance) -> Result<LineSpec, GeomError> {
    let delta = p2 - p1;
    let scale = p1.x.abs().max(p1.y.abs()).max(p2.x.abs()).max(p2.y.abs());
    if tol.is_zero(delta.norm(), scale.max(1.0)) {
        return Err(GeomError::CoincidentPoints);
    }
    Ok(LineSpec {
        anchor: p1.midpoint(p2),
        direction: delta.unit()?.perp(),
    })
}

/// Mirror image of `p` across `axis`.
pub fn reflect_point(p: Point, axis: LineSpec) -> Point {
    let v = p - axis.anchor;
    let along = axis.direction * v.dot(axis.direction);
    let across = v - along;
    p - across * 2.0
}

/// Collinearity test: twice the triangle area against the tolerance scaled
/// by the largest pairwise distance.
pub fn collinear(p1: Point, p2: Point, p3: Point, tol: Tolerance) -> bool {
    let twice_area = (p2 - p1).cross(p3 - p1).abs();
    let max_dist = p1.dist(p2).max(p2.dist(p3)).max(p1.dist(p3));
    twice_area <= tol.threshold(max_dist) * max_dist.max(1.0)
}
