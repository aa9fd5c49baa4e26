//! The validated 4-centre-oval data model and its measurement utilities.
//!
//! Canonical pose: centre of symmetry at the origin, symmetry axes along the
//! coordinate axes. `major_axis_direction` records whether the major axis
//! runs horizontally or vertically; validation itself works from the stored
//! geometry and does not assume a pose.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt;

use serde::Deserialize;

use crate::error::Error;
use crate::geom::{collinear, LineSpec, Point, Tolerance, Vec2};

/// Counterclockwise circular arc, `start_angle < end_angle`, sweep below a
/// full turn.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
pub struct ArcSpec {
    pub centre: Point,
    pub radius: f64,
    pub start_angle: f64,
    pub end_angle: f64,
}

impl ArcSpec {
    pub fn sweep(&self) -> f64 {
        self.end_angle - self.start_angle
    }

    pub fn point_at(&self, angle: f64) -> Point {
        Point::new(
            self.centre.x + self.radius * angle.cos(),
            self.centre.y + self.radius * angle.sin(),
        )
    }

    pub fn start_point(&self) -> Point {
        self.point_at(self.start_angle)
    }

    pub fn end_point(&self) -> Point {
        self.point_at(self.end_angle)
    }

    /// Whether the direction `angle` falls inside the sweep, modulo 2pi.
    pub fn contains_angle(&self, angle: f64, eps: f64) -> bool {
        let mut a = (angle - self.start_angle).rem_euclid(TAU);
        if a > TAU - eps {
            a -= TAU;
        }
        a <= self.sweep() + eps
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AxisDirection {
    Horizontal,
    Vertical,
}

impl AxisDirection {
    pub fn as_str(&self) -> &'static str {
        match self {
            AxisDirection::Horizontal => "horizontal",
            AxisDirection::Vertical => "vertical",
        }
    }
}

/// A 4-centre oval.
///
/// Ordering contracts (kept byte-stable through serialization):
/// - `centres`: small-arc centre on the positive major axis, large-arc
///   centre on the positive minor-axis line, small-arc centre on the
///   negative major axis, large-arc centre on the negative minor-axis line;
/// - `junctions`: one per quadrant, quadrant I first, counterclockwise;
/// - `arcs`: starting with the small arc around the positive-major-axis
///   vertex, counterclockwise.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct FourCentreOval {
    pub semiaxis_minor: f64,
    pub semiaxis_major: f64,
    pub r_small: f64,
    pub r_large: f64,
    pub centres: [Point; 4],
    pub junctions: [Point; 4],
    pub arcs: [ArcSpec; 4],
    pub major_axis_direction: AxisDirection,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub name: String,
    pub residual: f64,
}

/// Result of [`validate_oval`]; failures are data, not errors.
#[derive(Debug, Clone, PartialEq)]
pub struct OvalReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl OvalReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        OvalReport {
            valid: violations.is_empty(),
            violations,
        }
    }
}

impl fmt::Display for OvalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            return write!(f, "valid");
        }
        let names: Vec<String> = self
            .violations
            .iter()
            .map(|v| format!("{} (residual {:e})", v.name, v.residual))
            .collect();
        write!(f, "{}", names.join(", "))
    }
}

impl FourCentreOval {
    /// Assembles the canonical oval from the two semiaxes and the two arc
    /// radii. The caller must supply parameters that actually close the
    /// rhombus, i.e. `hypot(major - r_small, r_large - minor) = r_large -
    /// r_small`; every construction in this crate guarantees that identity.
    pub fn assemble(
        minor: f64,
        major: f64,
        r_small: f64,
        r_large: f64,
        direction: AxisDirection,
        tol: Tolerance,
    ) -> Result<FourCentreOval, Error> {
        for (name, v) in [
            ("minor", minor),
            ("major", major),
            ("r_small", r_small),
            ("r_large", r_large),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::BadParameter(format!(
                    "{name} must be finite and positive (got {v})"
                )));
            }
        }
        if minor >= major {
            return Err(Error::BadAxes { minor, major });
        }
        if r_small >= r_large {
            return Err(Error::BadRadii(format!(
                "requires r_small < r_large (r_small = {r_small}, r_large = {r_large})"
            )));
        }
        let cs = major - r_small; // small-centre offset along the major axis
        let cl = r_large - minor; // large-centre offset along the minor axis
        if cs <= 0.0 || cl <= 0.0 {
            return Err(Error::BadRadii(format!(
                "requires r_small < major and r_large > minor (r_small = {r_small}, \
                 major = {major}, r_large = {r_large}, minor = {minor})"
            )));
        }
        let side = cs.hypot(cl);
        if !tol.eq(side, r_large - r_small) {
            return Err(Error::BadParameter(format!(
                "parameters do not close the rhombus: centre distance {side} vs \
                 r_large - r_small = {}",
                r_large - r_small
            )));
        }

        // Horizontal-major frame first.
        let c_small = [Point::new(cs, 0.0), Point::new(-cs, 0.0)];
        let c_large = [Point::new(0.0, cl), Point::new(0.0, -cl)];
        // Quadrant-I junction: on the segment from the lower large centre
        // through the right small centre, at distance r_large.
        let u = (c_small[0] - c_large[1]) * (1.0 / side);
        let j1 = c_large[1] + u * r_large;
        let junctions = [
            j1,
            Point::new(-j1.x, j1.y),
            Point::new(-j1.x, -j1.y),
            Point::new(j1.x, -j1.y),
        ];
        let angle = |centre: Point, p: Point| (p.y - centre.y).atan2(p.x - centre.x);
        let arc = |centre: Point, radius: f64, from: Point, to: Point| {
            let start = angle(centre, from);
            let mut end = angle(centre, to);
            if end <= start {
                end += TAU;
            }
            ArcSpec {
                centre,
                radius,
                start_angle: start,
                end_angle: end,
            }
        };
        let arcs = [
            arc(c_small[0], r_small, junctions[3], junctions[0]),
            arc(c_large[1], r_large, junctions[0], junctions[1]),
            arc(c_small[1], r_small, junctions[1], junctions[2]),
            arc(c_large[0], r_large, junctions[2], junctions[3]),
        ];
        let centres = [c_small[0], c_large[0], c_small[1], c_large[1]];

        let oval = match direction {
            AxisDirection::Horizontal => FourCentreOval {
                semiaxis_minor: minor,
                semiaxis_major: major,
                r_small,
                r_large,
                centres,
                junctions,
                arcs,
                major_axis_direction: AxisDirection::Horizontal,
            },
            AxisDirection::Vertical => {
                let rot = |p: Point| Point::new(-p.y, p.x);
                let rot_arc = |a: &ArcSpec| {
                    let mut start = (a.start_angle + FRAC_PI_2).rem_euclid(TAU);
                    if start > TAU - 1e-12 {
                        start = 0.0;
                    }
                    ArcSpec {
                        centre: rot(a.centre),
                        radius: a.radius,
                        start_angle: start,
                        end_angle: start + a.sweep(),
                    }
                };
                FourCentreOval {
                    semiaxis_minor: minor,
                    semiaxis_major: major,
                    r_small,
                    r_large,
                    // Rotation by +90 deg maps +major to +y and the large
                    // centre on the negative minor side to +x.
                    centres: [
                        rot(centres[0]),
                        rot(centres[3]),
                        rot(centres[2]),
                        rot(centres[1]),
                    ],
                    junctions: [
                        rot(junctions[3]),
                        rot(junctions[0]),
                        rot(junctions[1]),
                        rot(junctions[2]),
                    ],
                    arcs: [
                        rot_arc(&arcs[0]),
                        rot_arc(&arcs[1]),
                        rot_arc(&arcs[2]),
                        rot_arc(&arcs[3]),
                    ],
                    major_axis_direction: AxisDirection::Vertical,
                }
            }
        };
        Ok(oval)
    }

    /// Mean of the four arc centres; the centre of symmetry for a valid oval.
    pub fn symmetry_centre(&self) -> Point {
        let mut x = 0.0;
        let mut y = 0.0;
        for c in &self.centres {
            x += c.x;
            y += c.y;
        }
        Point::new(0.25 * x, 0.25 * y)
    }

    fn small_centres(&self) -> [Point; 2] {
        [self.centres[0], self.centres[2]]
    }

    fn large_centres(&self) -> [Point; 2] {
        [self.centres[1], self.centres[3]]
    }
}

fn nearest(p: Point, candidates: &[Point]) -> (Point, f64) {
    let mut best = candidates[0];
    let mut best_d = f64::INFINITY;
    for &c in candidates {
        let d = p.dist(c);
        if d < best_d {
            best_d = d;
            best = c;
        }
    }
    (best, best_d)
}

fn farthest(p: Point, candidates: &[Point]) -> (Point, f64) {
    let mut best = candidates[0];
    let mut best_d = f64::NEG_INFINITY;
    for &c in candidates {
        let d = p.dist(c);
        if d > best_d {
            best_d = d;
            best = c;
        }
    }
    (best, best_d)
}

/// Checks every model invariant and reports each violation with its
/// measured residual.
pub fn validate_oval(o: &FourCentreOval, tol: Tolerance) -> OvalReport {
    let mut v: Vec<Violation> = Vec::new();
    let mut add = |name: String, residual: f64| v.push(Violation { name, residual });

    let mut finite = o.semiaxis_minor.is_finite()
        && o.semiaxis_major.is_finite()
        && o.r_small.is_finite()
        && o.r_large.is_finite();
    for p in o.centres.iter().chain(o.junctions.iter()) {
        finite &= p.is_finite();
    }
    for a in &o.arcs {
        finite &= a.centre.is_finite() && a.radius.is_finite() && a.sweep().is_finite();
    }
    if !finite {
        add("finite_values".into(), f64::INFINITY);
        return OvalReport::from_violations(v);
    }

    let scale = o.semiaxis_major.abs().max(1.0);
    let thr = tol.threshold(scale);

    if !(o.semiaxis_minor > 0.0 && o.semiaxis_minor < o.semiaxis_major) {
        add("semiaxis_order".into(), o.semiaxis_minor - o.semiaxis_major);
    }
    if !(o.r_small > 0.0 && o.r_small < o.r_large) {
        add("radius_order".into(), o.r_small - o.r_large);
    }
    if o.r_small >= o.semiaxis_major {
        add("r_small_below_major".into(), o.r_small - o.semiaxis_major);
    }
    if o.r_large <= o.semiaxis_minor {
        add("r_large_above_minor".into(), o.semiaxis_minor - o.r_large);
    }

    for (i, a) in o.arcs.iter().enumerate() {
        if a.radius <= 0.0 {
            add(format!("arc_{i}_radius_positive"), -a.radius);
        }
        let sweep = a.sweep();
        if !(sweep > 0.0 && sweep < TAU) {
            add(format!("arc_{i}_sweep_range"), sweep);
        }
    }

    // Rhombus: the four sides of the centre quadrilateral are equal.
    let sides: Vec<f64> = (0..4)
        .map(|i| o.centres[i].dist(o.centres[(i + 1) % 4]))
        .collect();
    let side_spread = sides.iter().cloned().fold(f64::MIN, f64::max)
        - sides.iter().cloned().fold(f64::MAX, f64::min);
    if side_spread > thr {
        add("centres_rhombus".into(), side_spread);
    }

    // Junction smoothness: each junction lies on the segment geometry of its
    // two adjoining arc centres, at the two prescribed radii.
    let small = o.small_centres();
    let large = o.large_centres();
    for (i, &j) in o.junctions.iter().enumerate() {
        // The adjoining small centre is the nearer of the two; the adjoining
        // large centre lies across the oval and is always the farther one.
        let (cs, _) = nearest(j, &small);
        let (cl, _) = farthest(j, &large);
        if !collinear(cs, j, cl, tol) {
            let line = LineSpec::through(cs, cl)
                .map(|l| l.distance_to(j))
                .unwrap_or(f64::INFINITY);
            add(format!("junction_{i}_collinear"), line);
        }
        let rs_res = (j.dist(cs) - o.r_small).abs();
        if rs_res > thr {
            add(format!("junction_{i}_r_small"), rs_res);
        }
        let rl_res = (j.dist(cl) - o.r_large).abs();
        if rl_res > thr {
            add(format!("junction_{i}_r_large"), rl_res);
        }
    }

    // Mirror symmetry across both axes: centres map to centres, junctions
    // to junctions. The axes are the lines through the small (major) and
    // large (minor) centre pairs.
    let centre = o.symmetry_centre();
    let axes: Vec<LineSpec> = [o.centres[0], o.centres[1]]
        .iter()
        .filter_map(|&c| LineSpec::through(centre, c).ok())
        .collect();
    if axes.len() < 2 {
        add("symmetry_axes".into(), f64::INFINITY);
    } else {
        let mut worst: f64 = 0.0;
        for axis in &axes {
            for &p in o.centres.iter() {
                let (_, d) = nearest(crate::geom::reflect_point(p, *axis), &o.centres);
                worst = worst.max(d);
            }
            for &p in o.junctions.iter() {
                let (_, d) = nearest(crate::geom::reflect_point(p, *axis), &o.junctions);
                worst = worst.max(d);
            }
        }
        if worst > thr {
            add("axis_symmetry".into(), worst);
        }
    }

    // The arcs concatenate into a closed curve, and their boundary points
    // are the declared junctions.
    for i in 0..4 {
        let gap = o.arcs[i]
            .end_point()
            .dist(o.arcs[(i + 1) % 4].start_point());
        if gap > thr {
            add(format!("arc_{i}_closure"), gap);
        }
        let (_, d) = nearest(o.arcs[i].start_point(), &o.junctions);
        if d > thr {
            add(format!("arc_{i}_starts_at_junction"), d);
        }
    }

    OvalReport::from_violations(v)
}

/// Measured distances from the centre of symmetry to the minor-axis vertex
/// (on a large arc) and to the major-axis vertex (on a small arc).
pub fn measure_semiaxes(o: &FourCentreOval, tol: Tolerance) -> Result<(f64, f64), Error> {
    let report = validate_oval(o, tol);
    if !report.valid {
        return Err(Error::InvalidOval(report));
    }
    let centre = o.symmetry_centre();
    let small = o.small_centres();
    let large = o.large_centres();
    let major = 0.5 * (centre.dist(small[0]) + centre.dist(small[1])) + o.r_small;
    let minor = o.r_large - 0.5 * (centre.dist(large[0]) + centre.dist(large[1]));
    Ok((minor, major))
}

/// Maximum absolute residual of sampled boundary points against the
/// ellipse with the oval's semiaxes. Uniform angular sampling around the
/// centre of symmetry; purely a diagnostic for how closely the oval mimics
/// an ellipse.
pub fn ellipse_deviation(o: &FourCentreOval, samples: u32, tol: Tolerance) -> Result<f64, Error> {
    if samples < 8 {
        return Err(Error::BadParameter(format!(
            "samples must be at least 8 (got {samples})"
        )));
    }
    let report = validate_oval(o, tol);
    if !report.valid {
        return Err(Error::InvalidOval(report));
    }
    let centre = o.symmetry_centre();
    let e_major = (o.centres[0] - centre).unit().map_err(Error::Geom)?;
    let e_minor = e_major.perp();
    let maj2 = o.semiaxis_major * o.semiaxis_major;
    let min2 = o.semiaxis_minor * o.semiaxis_minor;

    let mut worst: f64 = 0.0;
    for k in 0..samples {
        let phi = TAU * (k as f64) / (samples as f64);
        let dir = Vec2::new(phi.cos(), phi.sin());
        if let Some(p) = boundary_point(o, centre, dir) {
            let rel = p - centre;
            let xi = rel.dot(e_major);
            let eta = rel.dot(e_minor);
            worst = worst.max((xi * xi / maj2 + eta * eta / min2 - 1.0).abs());
        }
    }
    Ok(worst)
}

/// Intersection of the ray `centre + t dir` (t > 0) with the oval boundary.
/// A valid oval is star-shaped around its symmetry centre, so the point is
/// unique up to junction ties.
pub fn boundary_point(o: &FourCentreOval, centre: Point, dir: Vec2) -> Option<Point> {
    let eps = 1e-9;
    for a in &o.arcs {
        // |centre + t dir - c|^2 = r^2
        let rel = centre - a.centre;
        let b = rel.dot(dir);
        let c0 = rel.dot(rel) - a.radius * a.radius;
        let disc = b * b - c0;
        if disc < 0.0 {
            continue;
        }
        let sq = disc.sqrt();
        for t in [-b + sq, -b - sq] {
            if t <= 0.0 {
                continue;
            }
            let p = centre + dir * t;
            let ang = (p.y - a.centre.y).atan2(p.x - a.centre.x);
            if a.contains_angle(ang, eps) {
                return Some(p);
            }
        }
    }
    None
}
