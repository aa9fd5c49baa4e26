//! Oval B1: given the minor semiaxis `ae`, the major semiaxis `ce` and the
//! radius `oa` of the larger circular arcs. Major axis horizontal.
//!
//! Frame: `e` at the origin, `a = (0, ae)` on the minor axis, `c = (-ce, 0)`
//! on the major axis, `o = (0, ae - oa)` so that the circle around `o`
//! through `a` has radius `oa`. Feasible iff `oa > oc`.

use crate::error::Error;
use crate::geom::{
    intersect_line_circle, intersect_line_line, perpendicular_through, CircleSpec, LineSpec, Point,
    Tolerance,
};
use crate::oval::{AxisDirection, FourCentreOval};
use crate::trace::ConstructionTrace;

fn check_axes(ae: f64, ce: f64) -> Result<(), Error> {
    if !(ae > 0.0 && ce > ae && ae.is_finite() && ce.is_finite()) {
        return Err(Error::BadAxes {
            minor: ae,
            major: ce,
        });
    }
    Ok(())
}

/// Closed-form feasibility bound: `oa > (ae^2 + ce^2) / (2 ae)`.
pub fn b1_feasibility_bound(ae: f64, ce: f64) -> f64 {
    (ae * ae + ce * ce) / (2.0 * ae)
}

/// Feasibility of oval B1. Evaluates both the geometric test `oa > oc`
/// (with `o` on the minor-axis line at distance `oa` from `a`) and the
/// closed form, and insists that they agree.
pub fn b1_feasible(ae: f64, ce: f64, oa: f64) -> Result<bool, Error> {
    check_axes(ae, ce)?;
    if !(oa > 0.0 && oa.is_finite()) {
        return Err(Error::BadParameter(format!(
            "radius oa must be finite and positive (got {oa})"
        )));
    }
    let oc = (oa - ae).hypot(ce);
    let geometric = oa > oc;
    let closed_form = oa > b1_feasibility_bound(ae, ce);
    // The two forms are algebraically identical; a disagreement can only be
    // a rounding artifact exactly on the boundary.
    if geometric != closed_form {
        let band = 1e-9 * oa.max(1.0);
        if (oa - b1_feasibility_bound(ae, ce)).abs() > band {
            return Err(Error::BadParameter(format!(
                "feasibility forms disagree away from the boundary: oa = {oa}, oc = {oc}, \
                 bound = {}",
                b1_feasibility_bound(ae, ce)
            )));
        }
    }
    Ok(geometric)
}

/// Benedetti's construction of oval B1.
pub fn construct_oval_b1(
    ae: f64,
    ce: f64,
    oa: f64,
    tol: Tolerance,
) -> Result<(FourCentreOval, ConstructionTrace), Error> {
    if !b1_feasible(ae, ce, oa)? {
        let oc = (oa - ae).hypot(ce);
        return Err(Error::Infeasible {
            oa,
            oc,
            bound: b1_feasibility_bound(ae, ce),
        });
    }

    let mut tr = ConstructionTrace::new();
    let e = Point::new(0.0, 0.0);
    let a = Point::new(0.0, ae);
    let c = Point::new(-ce, 0.0);
    let o = Point::new(0.0, ae - oa);
    tr.point("e", e, "centre of symmetry; the semiaxes meet here");
    tr.point("a", a, "minor-axis vertex, ae above e");
    tr.point("c", c, "major-axis vertex, ce left of e");
    tr.point("o", o, "centre of the larger arc through a, on the line ae");

    let line_ao = LineSpec::through(a, o)?;
    let circle_o = CircleSpec::new(o, oa)?;
    tr.circle("", circle_o, "circle around o with radius ao");

    // b: left intersection of the perpendicular to ao through o with the
    // circle around o.
    let perp_o = perpendicular_through(line_ao, o);
    tr.line("", perp_o, "perpendicular to ao through o");
    let hits = intersect_line_circle(perp_o, circle_o, tol);
    let b = *hits
        .iter()
        .min_by(|p, q| p.x.total_cmp(&q.x))
        .ok_or_else(|| Error::BadParameter("perpendicular misses its own circle".into()))?;
    tr.point(
        "b",
        b,
        "left intersection of the perpendicular with the circle around o",
    );

    // d: second intersection of the line bc with the circle around o; exists
    // because oa > oc.
    let line_bc = LineSpec::through(b, c)?;
    tr.segment("", b, c, "line bc extended to the circle around o");
    let hits = intersect_line_circle(line_bc, circle_o, tol);
    let d = *hits
        .iter()
        .max_by(|p, q| p.dist(b).total_cmp(&q.dist(b)))
        .filter(|p| p.dist(b) > tol.threshold(oa))
        .ok_or(Error::Infeasible {
            oa,
            oc: (oa - ae).hypot(ce),
            bound: b1_feasibility_bound(ae, ce),
        })?;
    tr.point(
        "d",
        d,
        "intersection of the line bc with the circle around o",
    );

    // t: intersection of the line do with the major axis ce.
    let line_do = LineSpec::through(d, o)?;
    let line_ce = LineSpec::through(c, e)?;
    let t = intersect_line_line(line_do, line_ce, tol)?;
    tr.point(
        "t",
        t,
        "intersection of the line do with ce; centre of the arc cd",
    );

    // x: foot of the perpendicular from d onto ce; h: its second meeting
    // with the circle around t through d.
    let perp_d = perpendicular_through(line_ce, d);
    let x = intersect_line_line(perp_d, line_ce, tol)?;
    tr.point("x", x, "foot of the perpendicular from d onto ce");
    let td = t.dist(d);
    let circle_t = CircleSpec::new(t, td)?;
    tr.circle("", circle_t, "circle around t with radius td");
    let hits = intersect_line_circle(perp_d, circle_t, tol);
    let h = *hits
        .iter()
        .max_by(|p, q| p.dist(d).total_cmp(&q.dist(d)))
        .ok_or_else(|| Error::BadParameter("perpendicular misses the circle around t".into()))?;
    tr.point(
        "h",
        h,
        "second intersection of the perpendicular with the circle around t",
    );

    // Remaining centres by reflection: r mirrors t across ae, z mirrors o
    // across e (ze = oe on the opposite side).
    let line_ae = LineSpec::through(a, e)?;
    let r = crate::geom::reflect_point(t, line_ae);
    tr.point("r", r, "reflection of t across the line ae");
    let z = Point::new(0.0, oa - ae);
    tr.point("z", z, "point on ae with ze = oe, opposite side of e");

    let r_small = td;
    let oval = FourCentreOval::assemble(ae, ce, r_small, oa, AxisDirection::Horizontal, tol)?;
    Ok((oval, tr))
}
