use crate::oval::OvalReport;

/// Failures of the geometry kernel proper.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeomError {
    #[error("circles are concentric and identical: infinitely many intersection points")]
    ConcentricIdentical,
    #[error("lines are parallel: no unique intersection")]
    Parallel,
    #[error("points coincide: no unique bisector")]
    CoincidentPoints,
    #[error("direction vector has zero length")]
    ZeroDirection,
    #[error("invalid value: {0}")]
    Invalid(&'static str),
}

/// Everything that can go wrong while constructing, validating or rendering.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(
        "bad axes: requires 0 < minor semiaxis < major semiaxis (minor = {minor}, major = {major})"
    )]
    BadAxes { minor: f64, major: f64 },

    /// B1 feasibility failure; carries both forms of the inequality.
    #[error("infeasible: requires oa > oc (oa = {oa}, oc = {oc}); equivalently oa > (ae\u{b2} + ce\u{b2}) / (2 ae) = {bound}")]
    Infeasible { oa: f64, oc: f64, bound: f64 },

    #[error("radius too large: requires ct < ae (ct = {ct}, ae = {ae})")]
    RadiusTooLarge { ct: f64, ae: f64 },

    #[error("circles are not adjacent: centre distance {dist} differs from sum of radii {sum}")]
    NotAdjacent { dist: f64, sum: f64 },

    #[error(
        "circles do not overlap: centre distance {dist} is not strictly between {diff} and {sum}"
    )]
    NotOverlapping { dist: f64, diff: f64, sum: f64 },

    #[error("circles are not separate: centre distance {dist} does not exceed sum of radii {sum}")]
    NotSeparate { dist: f64, sum: f64 },

    /// The auxiliary circles of the separate-circles construction miss each
    /// other. `stated_bound` is the classical bound 2(ab + oq), `reach` the
    /// literal reach 2 ab + (oq + ab) of the auxiliary circles; both are
    /// reported against the centre distance.
    #[error("circles too far apart: auxiliary circles miss (centre distance {dist}, auxiliary reach {reach}, classical bound 2(ab + oq) = {stated_bound})")]
    TooFarApart {
        dist: f64,
        reach: f64,
        stated_bound: f64,
    },

    #[error("degenerate family: d = r_large - qb/2 = {d} must be strictly positive")]
    DegenerateFamily { d: f64 },

    #[error("bad radii: {0}")]
    BadRadii(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("oval failed validation: {0}")]
    InvalidOval(OvalReport),

    #[error("encompassing result failed tangency validation (max residual {residual})")]
    InvalidResult { residual: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Geom(#[from] GeomError),
}
