//! Deterministic SVG emission of ovals, encompassing circles and
//! construction traces. Rendering is a pure function of (input, style):
//! identical inputs produce byte-identical documents. Coordinates are
//! written with a fixed number of decimals and never in scientific
//! notation; the model's y axis points up, so y is flipped at emission.

use crate::construct::{validate_encompassing, EncompassingResult};
use crate::error::Error;
use crate::geom::{CircleSpec, Point, Tolerance};
use crate::oval::{validate_oval, FourCentreOval};
use crate::trace::{ConstructionTrace, TraceGeometry};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderStyle {
    pub stroke_width_main: f64,
    pub stroke_width_aux: f64,
    pub show_labels: bool,
    pub show_aux: bool,
    /// Coordinate rounding in the output document.
    pub decimals: u32,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            stroke_width_main: 0.04,
            stroke_width_aux: 0.015,
            show_labels: true,
            show_aux: true,
            decimals: 6,
        }
    }
}

impl RenderStyle {
    fn check(&self) -> Result<(), Error> {
        if !(self.stroke_width_main > 0.0 && self.stroke_width_main.is_finite())
            || !(self.stroke_width_aux > 0.0 && self.stroke_width_aux.is_finite())
        {
            return Err(Error::BadParameter(
                "stroke widths must be finite and positive".into(),
            ));
        }
        if !(3..=12).contains(&self.decimals) {
            return Err(Error::BadParameter(format!(
                "decimals must lie in [3, 12] (got {})",
                self.decimals
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub min_x: f64,
    pub max_x: f64,
    pub min_y: f64,
    pub max_y: f64,
    pub margin_fraction: f64,
}

impl Viewport {
    pub fn new(
        min_x: f64,
        max_x: f64,
        min_y: f64,
        max_y: f64,
        margin_fraction: f64,
    ) -> Result<Self, Error> {
        if !(max_x > min_x && max_y > min_y) {
            return Err(Error::BadParameter(
                "viewport must have positive extent on both axes".into(),
            ));
        }
        if !(0.0..=0.5).contains(&margin_fraction) {
            return Err(Error::BadParameter(format!(
                "margin fraction must lie in [0, 0.5] (got {margin_fraction})"
            )));
        }
        Ok(Viewport {
            min_x,
            max_x,
            min_y,
            max_y,
            margin_fraction,
        })
    }

    fn margin(&self) -> f64 {
        self.margin_fraction * (self.max_x - self.min_x).max(self.max_y - self.min_y)
    }

    fn span(&self) -> f64 {
        (self.max_x - self.min_x).max(self.max_y - self.min_y) + 2.0 * self.margin()
    }
}

/// Accumulates the bounding box of everything drawn (model coordinates).
struct Bounds {
    min_x: f64,
    max_x: f64,
    min_y: f64,
    max_y: f64,
}

impl Bounds {
    fn new() -> Self {
        Bounds {
            min_x: f64::INFINITY,
            max_x: f64::NEG_INFINITY,
            min_y: f64::INFINITY,
            max_y: f64::NEG_INFINITY,
        }
    }

    fn point(&mut self, p: Point) {
        self.min_x = self.min_x.min(p.x);
        self.max_x = self.max_x.max(p.x);
        self.min_y = self.min_y.min(p.y);
        self.max_y = self.max_y.max(p.y);
    }

    fn circle(&mut self, c: CircleSpec) {
        self.point(Point::new(c.centre.x - c.radius, c.centre.y - c.radius));
        self.point(Point::new(c.centre.x + c.radius, c.centre.y + c.radius));
    }

    /// Lines are unbounded and clipped at emission; everything else counts.
    fn trace(&mut self, t: &ConstructionTrace) {
        for step in &t.steps {
            match &step.geometry {
                TraceGeometry::Point(p) => self.point(*p),
                TraceGeometry::Circle(c) => self.circle(*c),
                TraceGeometry::Segment(a, b) => {
                    self.point(*a);
                    self.point(*b);
                }
                TraceGeometry::Arc(a) => {
                    self.circle(CircleSpec::new(a.centre, a.radius).expect("trace arc"))
                }
                TraceGeometry::Line(_) => {}
            }
        }
    }

    fn viewport(&self, margin_fraction: f64) -> Result<Viewport, Error> {
        Viewport::new(
            self.min_x,
            self.max_x,
            self.min_y,
            self.max_y,
            margin_fraction,
        )
    }
}

struct Emitter {
    out: String,
    decimals: u32,
}

impl Emitter {
    fn num(&self, v: f64) -> String {
        let s = format!("{v:.*}", self.decimals as usize);
        // Never emit a negative zero.
        if s.starts_with('-') && s[1..].bytes().all(|b| b == b'0' || b == b'.') {
            s[1..].to_string()
        } else {
            s
        }
    }

    /// Model point to document coordinates: y flipped.
    fn xy(&self, p: Point) -> (String, String) {
        (self.num(p.x), self.num(-p.y))
    }

    fn circle(&mut self, c: CircleSpec, class: &str) {
        let (cx, cy) = self.xy(c.centre);
        let r = self.num(c.radius);
        self.out.push_str(&format!(
            "<circle class=\"{class}\" cx=\"{cx}\" cy=\"{cy}\" r=\"{r}\"/>\n"
        ));
    }

    fn segment(&mut self, a: Point, b: Point, class: &str) {
        let (x1, y1) = self.xy(a);
        let (x2, y2) = self.xy(b);
        self.out.push_str(&format!(
            "<line class=\"{class}\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\"/>\n"
        ));
    }

    /// Counterclockwise model arc as a native SVG arc. Our arcs always span
    /// less than a half turn, and the y flip reverses orientation, so both
    /// flags are fixed: large-arc 0, sweep 0.
    fn arc(&mut self, a: &crate::oval::ArcSpec, class: &str) {
        let (sx, sy) = self.xy(a.start_point());
        let (ex, ey) = self.xy(a.end_point());
        let r = self.num(a.radius);
        self.out.push_str(&format!(
            "<path class=\"{class}\" d=\"M {sx} {sy} A {r} {r} 0 0 0 {ex} {ey}\"/>\n"
        ));
    }

    fn cross(&mut self, p: Point, half: f64, class: &str) {
        let (x1, y1) = self.xy(Point::new(p.x - half, p.y - half));
        let (x2, y2) = self.xy(Point::new(p.x + half, p.y + half));
        let (x3, y3) = self.xy(Point::new(p.x - half, p.y + half));
        let (x4, y4) = self.xy(Point::new(p.x + half, p.y - half));
        self.out.push_str(&format!(
            "<path class=\"{class}\" d=\"M {x1} {y1} L {x2} {y2} M {x3} {y3} L {x4} {y4}\"/>\n"
        ));
    }

    fn text(&mut self, p: Point, offset: f64, label: &str) {
        let shifted = Point::new(p.x + offset, p.y + offset);
        let (x, y) = self.xy(shifted);
        self.out.push_str(&format!(
            "<text class=\"label\" x=\"{x}\" y=\"{y}\">{}</text>\n",
            escape_xml(label)
        ));
    }
}

fn escape_xml(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn document_open(e: &mut Emitter, vp: &Viewport) {
    let m = vp.margin();
    let x = e.num(vp.min_x - m);
    let y = e.num(-(vp.max_y + m));
    let w = e.num(vp.max_x - vp.min_x + 2.0 * m);
    let h = e.num(vp.max_y - vp.min_y + 2.0 * m);
    e.out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         viewBox=\"{x} {y} {w} {h}\">\n"
    ));
}

fn emit_trace_aux(e: &mut Emitter, trace: &ConstructionTrace, vp: &Viewport, style: &RenderStyle) {
    e.out.push_str(&format!(
        "<g class=\"aux\" fill=\"none\" stroke=\"#808080\" stroke-width=\"{}\">\n",
        e.num(style.stroke_width_aux)
    ));
    let reach = 2.0 * vp.span();
    for step in &trace.steps {
        match &step.geometry {
            TraceGeometry::Point(p) => e.cross(*p, 2.0 * style.stroke_width_aux, "point"),
            TraceGeometry::Circle(c) => e.circle(*c, "aux-circle"),
            TraceGeometry::Line(l) => {
                // Clip an unbounded line to a segment that safely crosses
                // the viewport.
                let a = l.anchor + l.direction * (-reach);
                let b = l.anchor + l.direction * reach;
                e.segment(a, b, "aux-line");
            }
            TraceGeometry::Segment(a, b) => e.segment(*a, *b, "aux-segment"),
            TraceGeometry::Arc(a) => e.arc(a, "aux-arc"),
        }
    }
    e.out.push_str("</g>\n");
}

fn emit_trace_labels(e: &mut Emitter, trace: &ConstructionTrace, vp: &Viewport) {
    let font = 0.04 * vp.span();
    e.out.push_str(&format!(
        "<g class=\"labels\" font-size=\"{}\" font-family=\"serif\">\n",
        e.num(font)
    ));
    for step in &trace.steps {
        if let TraceGeometry::Point(p) = &step.geometry {
            if !step.label.is_empty() {
                e.text(*p, 0.01 * vp.span(), &step.label);
            }
        }
    }
    e.out.push_str("</g>\n");
}

/// Renders a valid oval, optionally with its construction trace, as a
/// standalone SVG 1.1 document. The boundary is exactly four arc paths.
pub fn render_oval(
    o: &FourCentreOval,
    trace: Option<&ConstructionTrace>,
    style: &RenderStyle,
) -> Result<String, Error> {
    style.check()?;
    let report = validate_oval(o, Tolerance::default());
    if !report.valid {
        return Err(Error::InvalidOval(report));
    }

    let mut b = Bounds::new();
    let centre = o.symmetry_centre();
    for j in &o.junctions {
        b.point(*j);
    }
    for c in &o.centres {
        b.point(*c);
    }
    // Axis vertices are the extreme points of the convex boundary.
    let e_major = (o.centres[0] - centre).unit().map_err(Error::Geom)?;
    let e_minor = e_major.perp();
    b.point(centre + e_major * o.semiaxis_major);
    b.point(centre + e_major * (-o.semiaxis_major));
    b.point(centre + e_minor * o.semiaxis_minor);
    b.point(centre + e_minor * (-o.semiaxis_minor));
    if let Some(t) = trace {
        if style.show_aux {
            b.trace(t);
        }
    }
    let vp = b.viewport(0.1)?;

    let mut e = Emitter {
        out: String::new(),
        decimals: style.decimals,
    };
    document_open(&mut e, &vp);
    if let Some(t) = trace {
        if style.show_aux {
            emit_trace_aux(&mut e, t, &vp, style);
        }
    }
    e.out.push_str(&format!(
        "<g class=\"main\" fill=\"none\" stroke=\"#000000\" stroke-width=\"{}\">\n",
        e.num(style.stroke_width_main)
    ));
    for a in &o.arcs {
        e.arc(a, "arc");
    }
    e.out.push_str("</g>\n");
    if let Some(t) = trace {
        if style.show_labels {
            emit_trace_labels(&mut e, t, &vp);
        }
    }
    e.out.push_str("</svg>\n");
    Ok(e.out)
}

/// Renders an encompassing-circle result with its two given circles. The
/// result is re-validated first; tangency points are marked with crosses.
pub fn render_encompassing(
    r: &EncompassingResult,
    given: &[CircleSpec; 2],
    style: &RenderStyle,
) -> Result<String, Error> {
    style.check()?;
    validate_encompassing(r, given, Tolerance::default())?;

    let mut b = Bounds::new();
    b.circle(r.circle);
    for g in given {
        b.circle(*g);
    }
    if style.show_aux {
        b.trace(&r.trace);
    }
    let vp = b.viewport(0.1)?;

    let mut e = Emitter {
        out: String::new(),
        decimals: style.decimals,
    };
    document_open(&mut e, &vp);
    e.out.push_str(&format!(
        "<g class=\"given\" fill=\"none\" stroke=\"#404040\" stroke-width=\"{}\">\n",
        e.num(style.stroke_width_main)
    ));
    for g in given {
        e.circle(*g, "given-circle");
    }
    e.out.push_str("</g>\n");
    if style.show_aux {
        emit_trace_aux(&mut e, &r.trace, &vp, style);
    }
    e.out.push_str(&format!(
        "<g class=\"main\" fill=\"none\" stroke=\"#000000\" stroke-width=\"{}\">\n",
        e.num(style.stroke_width_main)
    ));
    e.circle(r.circle, "encompassing");
    for t in &r.tangency_points {
        e.cross(*t, 3.0 * style.stroke_width_main, "tangency");
    }
    e.out.push_str("</g>\n");
    if style.show_labels {
        emit_trace_labels(&mut e, &r.trace, &vp);
    }
    e.out.push_str("</svg>\n");
    Ok(e.out)
}
