//! Oval B2: given the minor semiaxis `ea`, the major semiaxis `ec` and the
//! radius `ct` of the smaller circular arcs. Major axis vertical.
//!
//! Frame: `e` at the origin, minor axis `qa` horizontal with `a = (ea, 0)`,
//! major axis `cp` vertical with `c = (0, ec)`, and the small circle of
//! radius `ct` around `t = (0, ec - ct)`. Requires `ct < ea`.

use crate::error::Error;
use crate::geom::{
    intersect_line_line, perpendicular_bisector, CircleSpec, LineSpec, Point, Tolerance, Vec2,
};
use crate::oval::{AxisDirection, FourCentreOval};
use crate::trace::ConstructionTrace;

fn check_inputs(ea: f64, ec: f64, ct: f64) -> Result<(), Error> {
    if !(ea > 0.0 && ec > ea && ea.is_finite() && ec.is_finite()) {
        return Err(Error::BadAxes {
            minor: ea,
            major: ec,
        });
    }
    if !(ct > 0.0 && ct < ea && ct.is_finite()) {
        return Err(Error::RadiusTooLarge { ct, ae: ea });
    }
    Ok(())
}

fn seed_trace(ea: f64, ec: f64, ct: f64) -> (ConstructionTrace, Point, Point, Point, Point) {
    let mut tr = ConstructionTrace::new();
    let e = Point::new(0.0, 0.0);
    let a = Point::new(ea, 0.0);
    let q = Point::new(-ea, 0.0);
    let c = Point::new(0.0, ec);
    let t = Point::new(0.0, ec - ct);
    tr.point("e", e, "centre of symmetry; the axes meet here");
    tr.point("a", a, "minor-axis vertex, ea right of e");
    tr.point("q", q, "minor-axis vertex, opposite a");
    tr.point("c", c, "major-axis vertex, ec above e");
    tr.point(
        "t",
        t,
        "centre of the smaller arc; the circle through c of radius ct",
    );
    (tr, e, a, c, t)
}

fn finish(
    ea: f64,
    ec: f64,
    ct: f64,
    o: Point,
    mut tr: ConstructionTrace,
    tol: Tolerance,
) -> Result<(FourCentreOval, ConstructionTrace), Error> {
    let a = Point::new(ea, 0.0);
    let t = Point::new(0.0, ec - ct);
    // Junction d on the extension of ot beyond t: od = ot + ct = oa.
    let dir = (t - o).unit()?;
    let d = t + dir * ct;
    tr.point("d", d, "junction on the line ot extended, od = ot + ct");
    let s = Point::new(-o.x, o.y);
    tr.point("s", s, "reflection of o across the major axis");
    let t_reflected = Point::new(0.0, -(ec - ct));
    tr.point("t'", t_reflected, "reflection of t across the minor axis");

    let r_large = o.dist(a);
    let oval = FourCentreOval::assemble(ea, ec, ct, r_large, AxisDirection::Vertical, tol)?;
    Ok((oval, tr))
}

/// Benedetti's construction of oval B2 via the perpendicular bisector of
/// the auxiliary segment `tx`.
pub fn construct_oval_b2(
    ea: f64,
    ec: f64,
    ct: f64,
    tol: Tolerance,
) -> Result<(FourCentreOval, ConstructionTrace), Error> {
    check_inputs(ea, ec, ct)?;
    let (mut tr, e, a, _c, t) = seed_trace(ea, ec, ct);
    tr.circle(
        "",
        CircleSpec::new(t, ct)?,
        "the given smaller circle around t",
    );

    // x on ea with xa = ct.
    let x = Point::new(ea - ct, 0.0);
    tr.point("x", x, "point on ea with xa = ct");
    let n = t.midpoint(x);
    tr.point("n", n, "midpoint of tx");

    // o: perpendicular bisector of tx meets the minor-axis line qa,
    // extended beyond e when necessary.
    let bisector = perpendicular_bisector(t, x, tol)?;
    tr.line("", bisector, "perpendicular bisector of tx");
    let line_qa = LineSpec::through(a, e)?;
    let o = intersect_line_line(bisector, line_qa, tol)?;
    tr.point(
        "o",
        o,
        "bisector meets qa; centre of the larger arc, od = ot + ct = ox + xa = oa",
    );

    finish(ea, ec, ct, o, tr, tol)
}

/// Variant closing remark: instead of the bisector, `o` is the point on the
/// half-line `eq` at which the base angles of the triangle `otx` (at `t`
/// and at `x`) are equal. Solved by bisection on the angle difference.
pub fn construct_oval_b2_angle_variant(
    ea: f64,
    ec: f64,
    ct: f64,
    tol: Tolerance,
) -> Result<(FourCentreOval, ConstructionTrace), Error> {
    check_inputs(ea, ec, ct)?;
    let (mut tr, _e, _a, _c, t) = seed_trace(ea, ec, ct);
    tr.circle(
        "",
        CircleSpec::new(t, ct)?,
        "the given smaller circle around t",
    );
    let x = Point::new(ea - ct, 0.0);
    tr.point("x", x, "point on ea with xa = ct");

    // Base-angle difference at candidate o = (u, 0); positive at u = 0 and
    // negative far out on the half-line eq.
    let angle_gap = |u: f64| -> f64 {
        let o = Point::new(u, 0.0);
        let cos_at_t = cos_angle(t, o, x);
        let cos_at_x = cos_angle(x, o, t);
        cos_at_t - cos_at_x
    };
    let mut lo = -1.0;
    let mut iterations = 0;
    while angle_gap(lo) > 0.0 {
        lo *= 2.0;
        iterations += 1;
        if iterations > 200 {
            return Err(Error::BadParameter(
                "angle-variant bracket search failed to converge".into(),
            ));
        }
    }
    let mut hi = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if angle_gap(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo < 1e-16 * (1.0 + lo.abs()) {
            break;
        }
    }
    let o = Point::new(0.5 * (lo + hi), 0.0);
    tr.point(
        "o",
        o,
        "point on the half-line eq with equal base angles in the triangle otx",
    );

    finish(ea, ec, ct, o, tr, tol)
}

/// Cosine of the angle at `vertex` in the triangle (vertex, p, q).
fn cos_angle(vertex: Point, p: Point, q: Point) -> f64 {
    let u: Vec2 = p - vertex;
    let v: Vec2 = q - vertex;
    u.dot(v) / (u.norm() * v.norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oval::{measure_semiaxes, validate_oval};

    const TOL: Tolerance = Tolerance {
        abs_eps: 1e-9,
        rel_eps: 1e-9,
    };

    #[test]
    fn b2_example_position_of_o() {
        // u = (ex^2 - et^2) / (2 ex) with ex = ea - ct = 1, et = ec - ct = 2,
        // solved by hand from |ot| = |ox|.
        let (oval, tr) = construct_oval_b2(2.0, 3.0, 1.0, TOL).unwrap();
        let o = tr.find_point("o").unwrap();
        assert!((o.x - (-1.5)).abs() < 1e-9);
        assert!(o.y.abs() < 1e-12);
        assert!((oval.r_large - 3.5).abs() < 1e-9);
        assert!(validate_oval(&oval, TOL).valid);
        let (minor, major) = measure_semiaxes(&oval, TOL).unwrap();
        assert!((minor - 2.0).abs() < 1e-9);
        assert!((major - 3.0).abs() < 1e-9);
    }

    #[test]
    fn b2_chain_holds_on_trace() {
        // od = ot + ct = ox + xa = oa, link by link.
        for (ea, ec, ct) in [(2.0, 3.0, 1.0), (1.0, 4.0, 0.3), (5.0, 8.0, 2.0)] {
            let (_, tr) = construct_oval_b2(ea, ec, ct, TOL).unwrap();
            let o = tr.find_point("o").unwrap();
            let t = tr.find_point("t").unwrap();
            let x = tr.find_point("x").unwrap();
            let d = tr.find_point("d").unwrap();
            let a = tr.find_point("a").unwrap();
            let od = o.dist(d);
            let scale = ec;
            assert!((od - (o.dist(t) + ct)).abs() < 1e-9 * scale);
            assert!((od - (o.dist(x) + x.dist(a))).abs() < 1e-9 * scale);
            assert!((od - o.dist(a)).abs() < 1e-9 * scale);
        }
    }

    #[test]
    fn b2_error_cases() {
        assert!(matches!(
            construct_oval_b2(2.0, 3.0, 2.0, TOL).unwrap_err(),
            Error::RadiusTooLarge { .. }
        ));
        assert!(matches!(
            construct_oval_b2(2.0, 2.0, 1.0, TOL).unwrap_err(),
            Error::BadAxes { .. }
        ));
    }

    #[test]
    fn angle_variant_agrees_with_bisector_route() {
        for (ea, ec, ct) in [(2.0, 3.0, 1.0), (2.0, 3.0, 1.999), (0.9, 5.5, 0.25)] {
            let (a, _) = construct_oval_b2(ea, ec, ct, TOL).unwrap();
            let (b, _) = construct_oval_b2_angle_variant(ea, ec, ct, TOL).unwrap();
            for (p, q) in a.centres.iter().zip(b.centres.iter()) {
                assert!(
                    p.dist(*q) < 1e-9 * ec,
                    "centres differ for ({ea}, {ec}, {ct})"
                );
            }
        }
        assert!(matches!(
            construct_oval_b2_angle_variant(2.0, 3.0, 2.0, TOL).unwrap_err(),
            Error::RadiusTooLarge { .. }
        ));
    }
}
