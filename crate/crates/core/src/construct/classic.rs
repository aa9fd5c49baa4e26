//! Serlio's four classical ovals and Clavius's isosceles generalization of
//! the triangle-based one, all in the canonical major-horizontal pose.
//!
//! Each seed figure fixes the rhombus of arc centres: small-arc centres at
//! (+-p, 0), large-arc centres at (0, +-q), with rhombus side p.hypot(q) =
//! r_large - r_small by construction.

use std::f64::consts::PI;
use std::str::FromStr;

use crate::error::Error;
use crate::geom::{CircleSpec, Point, Tolerance};
use crate::oval::{AxisDirection, FourCentreOval};
use crate::trace::ConstructionTrace;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicKind {
    /// Two equilateral triangles sharing a side; scale = triangle side.
    S1,
    /// Two adjacent (externally tangent) equal circles; scale = circle
    /// radius.
    S2,
    /// Two adjacent equal squares, diagonal construction; scale = square
    /// side.
    S3,
    /// Two intersecting equal circles (vesica piscis, centre distance =
    /// radius); scale = circle radius.
    S4,
    /// Isosceles generalization of S1 with a given apex half-angle; scale =
    /// triangle base.
    Clavius,
}

impl ClassicKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ClassicKind::S1 => "S1",
            ClassicKind::S2 => "S2",
            ClassicKind::S3 => "S3",
            ClassicKind::S4 => "S4",
            ClassicKind::Clavius => "Clavius",
        }
    }
}

impl FromStr for ClassicKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "s1" => Ok(ClassicKind::S1),
            "s2" => Ok(ClassicKind::S2),
            "s3" => Ok(ClassicKind::S3),
            "s4" => Ok(ClassicKind::S4),
            "clavius" => Ok(ClassicKind::Clavius),
            other => Err(Error::BadParameter(format!(
                "unknown classic oval kind {other:?} (expected S1, S2, S3, S4 or Clavius)"
            ))),
        }
    }
}

/// Rhombus data of the seed figure: small-centre offset `p`, large-centre
/// offset `q`, and the two arc radii.
struct Frame {
    p: f64,
    q: f64,
    r_small: f64,
    r_large: f64,
}

/// Triangle-based frame shared by S1 and Clavius: isosceles triangle with
/// base `s` on the major axis and apex half-angle `theta`, mirrored across
/// its base. Small arcs centred at the base endpoints with radius s/2,
/// large arcs at the apexes with radius s/2 + side.
fn triangle_frame(s: f64, theta: f64) -> Frame {
    let p = s / 2.0;
    let q = p / theta.tan();
    let side = p / theta.sin();
    Frame {
        p,
        q,
        r_small: p,
        r_large: p + side,
    }
}

/// Builds the named classical oval at the given scale. `clavius_half_angle`
/// is required exactly for `Clavius` and must lie strictly inside
/// (0, pi/2); the open interval keeps the minor semiaxis strictly below the
/// major one (they coincide only in the pi/2 limit).
pub fn construct_classic_oval(
    kind: ClassicKind,
    scale: f64,
    clavius_half_angle: Option<f64>,
    tol: Tolerance,
) -> Result<(FourCentreOval, ConstructionTrace), Error> {
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(Error::BadParameter(format!(
            "scale must be finite and positive (got {scale})"
        )));
    }
    match (kind, clavius_half_angle) {
        (ClassicKind::Clavius, None) => {
            return Err(Error::BadParameter("Clavius requires a half-angle".into()));
        }
        (ClassicKind::Clavius, Some(theta)) if !(theta > 0.0 && theta < PI / 2.0) => {
            return Err(Error::BadParameter(format!(
                "Clavius half-angle must lie in (0, pi/2) (got {theta})"
            )));
        }
        (ClassicKind::Clavius, Some(_)) => {}
        (_, Some(theta)) => {
            return Err(Error::BadParameter(format!(
                "half-angle {theta} only applies to the Clavius oval"
            )));
        }
        (_, None) => {}
    }

    let mut tr = ConstructionTrace::new();
    let frame = match kind {
        ClassicKind::S1 => {
            let f = triangle_frame(scale, PI / 6.0);
            seed_triangle(&mut tr, scale, f.q, "equilateral triangle apex");
            f
        }
        ClassicKind::Clavius => {
            let theta = clavius_half_angle.unwrap();
            let f = triangle_frame(scale, theta);
            seed_triangle(&mut tr, scale, f.q, "isosceles triangle apex");
            f
        }
        ClassicKind::S2 => {
            // Tangent circles radius r at (+-r, 0); large-arc centres at the
            // apexes of the equilateral triangle over the two centres.
            let r = scale;
            let o1 = Point::new(-r, 0.0);
            let o2 = Point::new(r, 0.0);
            tr.point("o1", o1, "centre of the left given circle");
            tr.point("o2", o2, "centre of the right given circle");
            tr.circle("", CircleSpec::new(o1, r)?, "left given circle");
            tr.circle("", CircleSpec::new(o2, r)?, "right given circle");
            tr.point(
                "g",
                Point::new(0.0, r * 3.0_f64.sqrt()),
                "apex of the equilateral triangle on o1 o2; centre of the lower large arc's mirror",
            );
            Frame {
                p: r,
                q: r * 3.0_f64.sqrt(),
                r_small: r,
                r_large: 3.0 * r,
            }
        }
        ClassicKind::S3 => {
            // Two squares of side a sharing an edge on the minor axis; the
            // square diagonals carry the junctions (the outer corners).
            let a = scale;
            tr.point("c1", Point::new(-a / 2.0, 0.0), "centre of the left square");
            tr.point("c2", Point::new(a / 2.0, 0.0), "centre of the right square");
            tr.point(
                "m",
                Point::new(0.0, a / 2.0),
                "upper endpoint of the shared edge",
            );
            tr.point(
                "w",
                Point::new(a, a / 2.0),
                "outer corner of the right square; junction",
            );
            Frame {
                p: a / 2.0,
                q: a / 2.0,
                r_small: a / 2.0_f64.sqrt(),
                r_large: a * 2.0_f64.sqrt(),
            }
        }
        ClassicKind::S4 => {
            // Vesica piscis: equal circles radius r, centre distance r.
            let r = scale;
            let o1 = Point::new(-r / 2.0, 0.0);
            let o2 = Point::new(r / 2.0, 0.0);
            tr.point("o1", o1, "centre of the left given circle");
            tr.point("o2", o2, "centre of the right given circle");
            tr.circle("", CircleSpec::new(o1, r)?, "left given circle");
            tr.circle("", CircleSpec::new(o2, r)?, "right given circle");
            let q = r * 3.0_f64.sqrt() / 2.0;
            tr.point("g", Point::new(0.0, q), "upper intersection of the circles");
            Frame {
                p: r / 2.0,
                q,
                r_small: r,
                r_large: 2.0 * r,
            }
        }
    };

    let minor = frame.r_large - frame.q;
    let major = frame.p + frame.r_small;
    let oval = FourCentreOval::assemble(
        minor,
        major,
        frame.r_small,
        frame.r_large,
        AxisDirection::Horizontal,
        tol,
    )?;
    Ok((oval, tr))
}

fn seed_triangle(tr: &mut ConstructionTrace, base: f64, apex_height: f64, note: &str) {
    tr.point(
        "b1",
        Point::new(-base / 2.0, 0.0),
        "base vertex; centre of the left small arc",
    );
    tr.point(
        "b2",
        Point::new(base / 2.0, 0.0),
        "base vertex; centre of the right small arc",
    );
    tr.point("g", Point::new(0.0, apex_height), note);
    tr.point("g'", Point::new(0.0, -apex_height), "mirrored apex");
}
