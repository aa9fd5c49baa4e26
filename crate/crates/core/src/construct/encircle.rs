//! Circles encompassing two given circles, internally tangent to both.
//! Four cases: adjacent (externally tangent) givens, overlapping givens,
//! separate givens with a single auxiliary-tangency solution, and the
//! general parametrized family for separate givens.
//!
//! Labels follow the classical diagrams: `o` is the centre of the smaller
//! (first) circle, `a` of the larger (second); the encompassing circle
//! touches the small circle at `f` and the large circle at `d`.

use crate::error::Error;
use crate::geom::{collinear, intersect_circle_circle, CircleSpec, Point, Tolerance, Vec2};
use crate::trace::ConstructionTrace;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    Adjacent,
    Overlapping,
    SeparateSingle,
    SeparateFamily,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::Adjacent => "adjacent",
            CaseTag::Overlapping => "overlapping",
            CaseTag::SeparateSingle => "separate_single",
            CaseTag::SeparateFamily => "separate_family",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EncompassingResult {
    pub circle: CircleSpec,
    pub case_tag: CaseTag,
    /// Tangency point on the first given circle (`f`), then on the second
    /// (`d`).
    pub tangency_points: [Point; 2],
    pub trace: ConstructionTrace,
}

/// Internal-tangency residual of a result against the two given circles:
/// max over both of | |X O_i| + r_i - R | plus the collinearity defects of
/// the tangency points.
pub fn validate_encompassing(
    r: &EncompassingResult,
    given: &[CircleSpec; 2],
    tol: Tolerance,
) -> Result<(), Error> {
    let mut worst: f64 = 0.0;
    for (i, g) in given.iter().enumerate() {
        let res = (r.circle.centre.dist(g.centre) + g.radius - r.circle.radius).abs();
        worst = worst.max(res);
        let t = r.tangency_points[i];
        if !collinear(r.circle.centre, g.centre, t, tol) {
            worst = worst.max(f64::INFINITY);
        }
        worst = worst.max((t.dist(g.centre) - g.radius).abs());
        worst = worst.max((t.dist(r.circle.centre) - r.circle.radius).abs());
    }
    if worst > tol.threshold(r.circle.radius) {
        return Err(Error::InvalidResult { residual: worst });
    }
    Ok(())
}

/// Orders the pair so the smaller circle comes first; records a swap in the
/// trace so diagrams keep `o` on the small circle.
fn ordered(
    c1: CircleSpec,
    c2: CircleSpec,
    tr: &mut ConstructionTrace,
) -> (CircleSpec, CircleSpec, bool) {
    if c1.radius > c2.radius {
        tr.push(
            "",
            crate::trace::TraceGeometry::Segment(c1.centre, c2.centre),
            "given circles swapped so that o is the smaller circle",
        );
        (c2, c1, true)
    } else {
        (c1, c2, false)
    }
}

fn seed(small: CircleSpec, large: CircleSpec, tr: &mut ConstructionTrace) -> Result<Vec2, Error> {
    tr.point("o", small.centre, "centre of the smaller given circle");
    tr.point("a", large.centre, "centre of the larger given circle");
    tr.circle("", small, "smaller given circle");
    tr.circle("", large, "larger given circle");
    Ok((large.centre - small.centre).unit()?)
}

/// Picks the kernel's first-ordered ("upper") intersection point.
fn upper(points: Vec<Point>, what: &str) -> Result<Point, Error> {
    points
        .into_iter()
        .next()
        .ok_or_else(|| Error::BadParameter(format!("auxiliary circles do not meet ({what})")))
}

fn tangency_points(
    centre: Point,
    small: CircleSpec,
    large: CircleSpec,
    tr: &mut ConstructionTrace,
) -> Result<[Point; 2], Error> {
    // f on the extension of the segment centre->o beyond o, d beyond a.
    let f = small.centre + (small.centre - centre).unit()? * small.radius;
    let d = large.centre + (large.centre - centre).unit()? * large.radius;
    tr.point("f", f, "tangency point on the smaller circle");
    tr.point("d", d, "tangency point on the larger circle");
    Ok([f, d])
}

fn swap_tangency(points: [Point; 2], swapped: bool) -> [Point; 2] {
    if swapped {
        [points[1], points[0]]
    } else {
        points
    }
}

/// Encompassing circle for externally tangent given circles.
pub fn encircle_adjacent(
    c1: CircleSpec,
    c2: CircleSpec,
    tol: Tolerance,
) -> Result<EncompassingResult, Error> {
    let mut tr = ConstructionTrace::new();
    let (small, large, swapped) = ordered(c1, c2, &mut tr);
    let u = seed(small, large, &mut tr)?;
    let dist = small.centre.dist(large.centre);
    let sum = small.radius + large.radius;
    if !tol.eq(dist, sum) {
        return Err(Error::NotAdjacent { dist, sum });
    }

    let q = small.centre - u * small.radius;
    let i = small.centre + u * small.radius;
    let e = i + u * small.radius;
    let b = large.centre + u * large.radius;
    tr.point(
        "q",
        q,
        "outer intersection of the small circle with the centre line",
    );
    tr.point("i", i, "connection point of the given circles");
    tr.point("e", e, "point right of i with ie = qo");
    tr.point(
        "b",
        b,
        "outer intersection of the large circle with the centre line",
    );

    let eb = e.dist(b);
    let aux_o = CircleSpec::new(small.centre, eb)?;
    tr.circle("", aux_o, "circle around o with radius eb");
    let centre = upper(
        intersect_circle_circle(aux_o, large, tol)?,
        "circle(o, eb) and the larger given circle",
    )?;
    tr.point(
        "u",
        centre,
        "upper intersection; centre of the encompassing circle",
    );

    let radius = small.radius + eb;
    let tangency = tangency_points(centre, small, large, &mut tr)?;
    Ok(EncompassingResult {
        circle: CircleSpec::new(centre, radius)?,
        case_tag: CaseTag::Adjacent,
        tangency_points: swap_tangency(tangency, swapped),
        trace: tr,
    })
}

/// Same construction for given circles that intersect in two points; `i`
/// becomes the larger circle's intersection with the centre line inside
/// the segment.
pub fn encircle_overlapping(
    c1: CircleSpec,
    c2: CircleSpec,
    tol: Tolerance,
) -> Result<EncompassingResult, Error> {
    let mut tr = ConstructionTrace::new();
    let (small, large, swapped) = ordered(c1, c2, &mut tr);
    let dist = small.centre.dist(large.centre);
    let scale = dist.max(large.radius);
    if tol.is_zero(dist, scale) && tol.eq(small.radius, large.radius) {
        return Err(Error::Geom(crate::error::GeomError::ConcentricIdentical));
    }
    let u = seed(small, large, &mut tr)?;
    let sum = small.radius + large.radius;
    let diff = large.radius - small.radius;
    if !(dist < sum && dist > diff) || tol.eq(dist, sum) || tol.eq(dist, diff) {
        return Err(Error::NotOverlapping { dist, diff, sum });
    }

    let i = large.centre - u * large.radius;
    let e = i + u * small.radius;
    let b = large.centre + u * large.radius;
    tr.point(
        "i",
        i,
        "inner intersection of the larger circle with the centre line",
    );
    tr.point("e", e, "point right of i with ie = qo");
    tr.point(
        "b",
        b,
        "outer intersection of the large circle with the centre line",
    );

    let eb = e.dist(b);
    let aux_o = CircleSpec::new(small.centre, eb)?;
    tr.circle("", aux_o, "circle around o with radius eb");
    let centre = upper(
        intersect_circle_circle(aux_o, large, tol)?,
        "circle(o, eb) and the larger given circle",
    )?;
    tr.point(
        "u",
        centre,
        "upper intersection; centre of the encompassing circle",
    );

    let radius = small.radius + eb;
    let tangency = tangency_points(centre, small, large, &mut tr)?;
    Ok(EncompassingResult {
        circle: CircleSpec::new(centre, radius)?,
        case_tag: CaseTag::Overlapping,
        tangency_points: swap_tangency(tangency, swapped),
        trace: tr,
    })
}

/// Single encompassing circle for separate given circles; only exists while
/// the auxiliary circles `circle(o, 2 ab)` and `circle(a, oq + ab)` meet.
pub fn encircle_separate_single(
    c1: CircleSpec,
    c2: CircleSpec,
    tol: Tolerance,
) -> Result<EncompassingResult, Error> {
    let mut tr = ConstructionTrace::new();
    let (small, large, swapped) = ordered(c1, c2, &mut tr);
    let u = seed(small, large, &mut tr)?;
    let dist = small.centre.dist(large.centre);
    let sum = small.radius + large.radius;
    if dist <= sum || tol.eq(dist, sum) {
        return Err(Error::NotSeparate { dist, sum });
    }

    let b = large.centre + u * large.radius;
    let i = large.centre - u * large.radius;
    let q = small.centre - u * small.radius;
    let j = small.centre + u * small.radius;
    tr.point(
        "q",
        q,
        "outer intersection of the small circle with the centre line",
    );
    tr.point(
        "j",
        j,
        "inner intersection of the small circle with the centre line",
    );
    tr.point(
        "i",
        i,
        "inner intersection of the large circle with the centre line",
    );
    tr.point(
        "b",
        b,
        "outer intersection of the large circle with the centre line",
    );

    let bi = b.dist(i); // a diameter of the larger circle
    let aux_o = CircleSpec::new(small.centre, bi)?;
    let aux_a = CircleSpec::new(large.centre, small.radius + large.radius)?;
    tr.circle("", aux_o, "circle around o with radius bi");
    tr.circle("", aux_a, "circle around a with radius oq + ab");
    let hits = intersect_circle_circle(aux_o, aux_a, tol)?;
    let centre = hits.into_iter().next().ok_or(Error::TooFarApart {
        dist,
        reach: 2.0 * large.radius + small.radius + large.radius,
        stated_bound: 2.0 * (large.radius + small.radius),
    })?;
    tr.point(
        "x",
        centre,
        "intersection of the auxiliary circles; centre of the encompassing circle",
    );

    let radius = small.radius + 2.0 * large.radius;
    let tangency = tangency_points(centre, small, large, &mut tr)?;
    Ok(EncompassingResult {
        circle: CircleSpec::new(centre, radius)?,
        case_tag: CaseTag::SeparateSingle,
        tangency_points: swap_tangency(tangency, swapped),
        trace: tr,
    })
}

/// Parametrized family of circles encompassing two separate given circles.
/// The parameter `d = kz = zp` is the offset of the auxiliary points from
/// the midpoint `z` of the outer intersections `q`, `b`; each `d >= 0`
/// yields one encompassing circle and the radius grows affinely with `d`.
pub fn encircle_separate_family(
    c1: CircleSpec,
    c2: CircleSpec,
    d: f64,
    tol: Tolerance,
) -> Result<EncompassingResult, Error> {
    if !(d >= 0.0 && d.is_finite()) {
        return Err(Error::BadParameter(format!(
            "family parameter d must be nonnegative (got {d})"
        )));
    }
    let mut tr = ConstructionTrace::new();
    let (small, large, swapped) = ordered(c1, c2, &mut tr);
    let u = seed(small, large, &mut tr)?;
    let dist = small.centre.dist(large.centre);
    let sum = small.radius + large.radius;
    if dist <= sum || tol.eq(dist, sum) {
        return Err(Error::NotSeparate { dist, sum });
    }

    let q = small.centre - u * small.radius;
    let b = large.centre + u * large.radius;
    let z = q.midpoint(b);
    let p = z + u * d;
    let k = z - u * d;
    tr.point(
        "q",
        q,
        "outer intersection of the small circle with the centre line",
    );
    tr.point(
        "b",
        b,
        "outer intersection of the large circle with the centre line",
    );
    tr.point("z", z, "midpoint of qb");
    tr.point("k", k, "auxiliary point, kz = d");
    tr.point("p", p, "auxiliary point, zp = d");

    let op = small.centre.dist(p);
    let ak = large.centre.dist(k);
    let aux_o = CircleSpec::new(small.centre, op)?;
    let aux_a = CircleSpec::new(large.centre, ak)?;
    tr.circle("", aux_o, "circle around o with radius op");
    tr.circle("", aux_a, "circle around a with radius ak");
    let centre = upper(
        intersect_circle_circle(aux_o, aux_a, tol)?,
        "circle(o, op) and circle(a, ak)",
    )?;
    tr.point(
        "x",
        centre,
        "intersection of the auxiliary circles; xf = qo + op = qp",
    );

    let radius = small.radius + op;
    let tangency = tangency_points(centre, small, large, &mut tr)?;
    Ok(EncompassingResult {
        circle: CircleSpec::new(centre, radius)?,
        case_tag: CaseTag::SeparateFamily,
        tangency_points: swap_tangency(tangency, swapped),
        trace: tr,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::GeomError;

    const TOL: Tolerance = Tolerance {
        abs_eps: 1e-9,
        rel_eps: 1e-9,
    };

    fn circ(x: f64, y: f64, r: f64) -> CircleSpec {
        CircleSpec::new(Point::new(x, y), r).unwrap()
    }

    fn assert_tangent(r: &EncompassingResult, given: &[CircleSpec; 2]) {
        validate_encompassing(r, given, TOL).unwrap();
    }

    #[test]
    fn adjacent_example() {
        // |uo| = 3 and |ua| = 2 solved by hand: u = (7/3, 4 sqrt(2) / 3),
        // R = |uo| + 1 = |ua| + 2 = 4.
        let given = [circ(0.0, 0.0, 1.0), circ(3.0, 0.0, 2.0)];
        let r = encircle_adjacent(given[0], given[1], TOL).unwrap();
        assert!((r.circle.radius - 4.0).abs() < 1e-9);
        let expect = Point::new(7.0 / 3.0, 4.0 * 2.0_f64.sqrt() / 3.0);
        assert!(r.circle.centre.dist(expect) < 1e-9);
        assert_tangent(&r, &given);
    }

    #[test]
    fn adjacent_equal_circles_degenerate_to_contact_point() {
        let given = [circ(0.0, 0.0, 1.0), circ(2.0, 0.0, 1.0)];
        let r = encircle_adjacent(given[0], given[1], TOL).unwrap();
        assert!(r.circle.centre.dist(Point::new(1.0, 0.0)) < 1e-9);
        assert!((r.circle.radius - 2.0).abs() < 1e-9);
        assert_tangent(&r, &given);
    }

    #[test]
    fn adjacent_rejects_gap() {
        let err = encircle_adjacent(circ(0.0, 0.0, 1.0), circ(4.0, 0.0, 2.0), TOL).unwrap_err();
        assert!(matches!(err, Error::NotAdjacent { .. }));
    }

    #[test]
    fn overlapping_example() {
        let given = [circ(0.0, 0.0, 2.0), circ(3.0, 0.0, 2.0)];
        let r = encircle_overlapping(given[0], given[1], TOL).unwrap();
        assert!((r.circle.radius - 4.0).abs() < 1e-9);
        assert_tangent(&r, &given);
    }

    #[test]
    fn overlapping_identical_circles_propagate_kernel_error() {
        let err = encircle_overlapping(circ(1.0, 1.0, 2.0), circ(1.0, 1.0, 2.0), TOL).unwrap_err();
        assert!(matches!(err, Error::Geom(GeomError::ConcentricIdentical)));
    }

    #[test]
    fn overlapping_rejects_disjoint() {
        let err = encircle_overlapping(circ(0.0, 0.0, 1.0), circ(5.0, 0.0, 1.0), TOL).unwrap_err();
        assert!(matches!(err, Error::NotOverlapping { .. }));
    }

    #[test]
    fn separate_single_tangent_auxiliaries() {
        // circle(o, 2) and circle(a, 2) touch at (2, 0): R = 1 + 2 = 3,
        // tangencies at (-1, 0) and (5, 0).
        let given = [circ(0.0, 0.0, 1.0), circ(4.0, 0.0, 1.0)];
        let r = encircle_separate_single(given[0], given[1], TOL).unwrap();
        assert!(r.circle.centre.dist(Point::new(2.0, 0.0)) < 1e-9);
        assert!((r.circle.radius - 3.0).abs() < 1e-9);
        assert!(r.tangency_points[0].dist(Point::new(-1.0, 0.0)) < 1e-9);
        assert!(r.tangency_points[1].dist(Point::new(5.0, 0.0)) < 1e-9);
        assert_tangent(&r, &given);
    }

    #[test]
    fn separate_single_too_far_apart() {
        let err =
            encircle_separate_single(circ(0.0, 0.0, 1.0), circ(20.0, 0.0, 1.0), TOL).unwrap_err();
        match err {
            Error::TooFarApart {
                dist,
                reach,
                stated_bound,
            } => {
                assert!((dist - 20.0).abs() < 1e-12);
                assert!((reach - 4.0).abs() < 1e-12);
                assert!((stated_bound - 4.0).abs() < 1e-12);
            }
            other => panic!("expected TooFarApart, got {other:?}"),
        }
    }

    #[test]
    fn separate_single_rejects_overlapping() {
        let err =
            encircle_separate_single(circ(0.0, 0.0, 2.0), circ(3.0, 0.0, 2.0), TOL).unwrap_err();
        assert!(matches!(err, Error::NotSeparate { .. }));
    }

    #[test]
    fn family_examples() {
        let given = [circ(0.0, 0.0, 1.0), circ(4.0, 0.0, 1.0)];
        // d = 0 coincides with the tangent-auxiliary configuration.
        let r0 = encircle_separate_family(given[0], given[1], 0.0, TOL).unwrap();
        assert!(r0.circle.centre.dist(Point::new(2.0, 0.0)) < 1e-9);
        assert!((r0.circle.radius - 3.0).abs() < 1e-9);
        assert_tangent(&r0, &given);

        // d = 1: x^2 + y^2 = 9 and (x-4)^2 + y^2 = 9 give (2, sqrt 5);
        // R = qo + op = 1 + 3 = 4.
        let r1 = encircle_separate_family(given[0], given[1], 1.0, TOL).unwrap();
        assert!(r1.circle.centre.dist(Point::new(2.0, 5.0_f64.sqrt())) < 1e-9);
        assert!((r1.circle.radius - 4.0).abs() < 1e-9);
        assert_tangent(&r1, &given);

        // Tangency holds across a parameter sweep.
        for d in [0.0, 0.5, 1.0, 2.0, 5.0] {
            let r = encircle_separate_family(given[0], given[1], d, TOL).unwrap();
            assert_tangent(&r, &given);
            assert!((r.circle.radius - (3.0 + d)).abs() < 1e-9, "affine in d");
        }
    }

    #[test]
    fn family_rejects_touching_givens() {
        let err = encircle_separate_family(circ(0.0, 0.0, 1.0), circ(2.0, 0.0, 1.0), 1.0, TOL)
            .unwrap_err();
        assert!(matches!(err, Error::NotSeparate { .. }));
    }

    #[test]
    fn argument_order_is_normalized() {
        // Passing the larger circle first swaps internally; tangency points
        // still follow the caller's argument order.
        let a = circ(0.0, 0.0, 2.0);
        let b = circ(5.0, 0.0, 1.0);
        let r = encircle_separate_family(a, b, 0.5, TOL).unwrap();
        assert_tangent(&r, &[a, b]);
        assert!((r.tangency_points[0].dist(a.centre) - a.radius).abs() < 1e-9);
        assert!((r.tangency_points[1].dist(b.centre) - b.radius).abs() < 1e-9);
    }
}
