//! The family of all 4-centre ovals with a given major axis `qb` and given
//! arc radii, built by running the encompassing-circle family construction
//! on two equal seed circles and reflecting across the major axis.

use crate::error::Error;
use crate::geom::{intersect_circle_circle, CircleSpec, Point, Tolerance};
use crate::oval::{AxisDirection, FourCentreOval};
use crate::trace::ConstructionTrace;

/// Builds the 4-centre oval with major axis `qb` and arc radii `r_small`,
/// `r_large`. The two equal seed circles of radius `r_small` sit on the
/// major axis with outer intersections at `q` and `b`; the family parameter
/// is forced to `d = r_large - qb/2`, which must be positive for the large
/// arc centre `x` to leave the axis.
pub fn oval_from_major_axis_and_radii(
    qb: f64,
    r_small: f64,
    r_large: f64,
    tol: Tolerance,
) -> Result<(FourCentreOval, ConstructionTrace), Error> {
    for (name, v) in [("qb", qb), ("r_small", r_small), ("r_large", r_large)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::BadRadii(format!(
                "{name} must be finite and positive (got {v})"
            )));
        }
    }
    if 2.0 * r_small >= qb {
        return Err(Error::BadRadii(format!(
            "requires 2 r_small < qb (r_small = {r_small}, qb = {qb})"
        )));
    }
    let d = r_large - qb / 2.0;
    if d <= 0.0 {
        return Err(Error::DegenerateFamily { d });
    }

    let mut tr = ConstructionTrace::new();
    let half = qb / 2.0;
    let o = Point::new(-(half - r_small), 0.0);
    let a = Point::new(half - r_small, 0.0);
    let q = Point::new(-half, 0.0);
    let b = Point::new(half, 0.0);
    let z = Point::new(0.0, 0.0);
    tr.point("q", q, "major-axis vertex");
    tr.point("b", b, "major-axis vertex, qb apart from q");
    tr.point("o", o, "centre of the left seed circle, qo = r_small");
    tr.point("a", a, "centre of the right seed circle, ab = r_small");
    tr.circle("", CircleSpec::new(o, r_small)?, "left seed circle");
    tr.circle("", CircleSpec::new(a, r_small)?, "right seed circle");
    tr.point("z", z, "midpoint of qb");
    let k = Point::new(-d, 0.0);
    let p = Point::new(d, 0.0);
    tr.point("k", k, "auxiliary point, kz = d");
    tr.point("p", p, "auxiliary point, zp = d");

    // op = ak = r_large - r_small; the seed circles need not be separate,
    // so the auxiliary intersection is taken directly.
    let op = o.dist(p);
    let aux_o = CircleSpec::new(o, op)?;
    let aux_a = CircleSpec::new(a, a.dist(k))?;
    tr.circle("", aux_o, "circle around o with radius op");
    tr.circle("", aux_a, "circle around a with radius ak");
    let x = intersect_circle_circle(aux_o, aux_a, tol)?
        .into_iter()
        .next()
        .ok_or(Error::DegenerateFamily { d })?;
    tr.point(
        "x",
        x,
        "upper intersection; centre of the upper large arc, xf = qo + op",
    );
    let x_mirror = Point::new(x.x, -x.y);
    tr.point("x'", x_mirror, "reflection of x across the major axis");

    let minor = r_large - x.y;
    let oval = FourCentreOval::assemble(
        minor,
        half,
        r_small,
        r_large,
        AxisDirection::Horizontal,
        tol,
    )?;
    Ok((oval, tr))
}

/// Checks that running B2's inputs through the family construction
/// reproduces B2's oval: centres and junctions must match within tol after
/// rotating the family oval into B2's major-vertical pose.
pub fn b2_family_equivalence(ea: f64, ec: f64, ct: f64, tol: Tolerance) -> Result<bool, Error> {
    let (b2, _) = super::construct_oval_b2(ea, ec, ct, tol)?;
    let (fam, _) = oval_from_major_axis_and_radii(2.0 * ec, ct, b2.r_large, tol)?;

    // Rotate the horizontal-pose family oval a quarter turn CCW.
    let rot = |p: Point| Point::new(-p.y, p.x);
    let threshold = tol.threshold(ec);
    let matches = |targets: &[Point; 4], sources: &[Point; 4]| {
        targets
            .iter()
            .all(|t| sources.iter().any(|s| t.dist(rot(*s)) <= threshold))
    };
    Ok(matches(&b2.centres, &fam.centres) && matches(&b2.junctions, &fam.junctions))
}
