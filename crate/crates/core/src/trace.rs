//! Ordered, labeled record of every auxiliary object a construction produces.

use crate::geom::{CircleSpec, LineSpec, Point};
use crate::oval::ArcSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceKind {
    Point,
    Line,
    Circle,
    Arc,
    Segment,
}

impl TraceKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            TraceKind::Point => "point",
            TraceKind::Line => "line",
            TraceKind::Circle => "circle",
            TraceKind::Arc => "arc",
            TraceKind::Segment => "segment",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TraceGeometry {
    Point(Point),
    Line(LineSpec),
    Circle(CircleSpec),
    Arc(ArcSpec),
    Segment(Point, Point),
}

impl TraceGeometry {
    pub fn kind(&self) -> TraceKind {
        match self {
            TraceGeometry::Point(_) => TraceKind::Point,
            TraceGeometry::Line(_) => TraceKind::Line,
            TraceGeometry::Circle(_) => TraceKind::Circle,
            TraceGeometry::Arc(_) => TraceKind::Arc,
            TraceGeometry::Segment(_, _) => TraceKind::Segment,
        }
    }
}

/// One recorded construction step: the traditional diagram letter, what was
/// drawn, and a free-text note describing the step.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceStep {
    pub label: String,
    pub geometry: TraceGeometry,
    pub note: String,
}

impl TraceStep {
    pub fn kind(&self) -> TraceKind {
        self.geometry.kind()
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConstructionTrace {
    pub steps: Vec<TraceStep>,
}

impl ConstructionTrace {
    pub fn new() -> Self {
        Self::default()
    }

    /// Point labels must be unique within a trace; duplicates panic early
    /// rather than producing an ambiguous diagram.
    pub fn push(
        &mut self,
        label: impl Into<String>,
        geometry: TraceGeometry,
        note: impl Into<String>,
    ) {
        let label = label.into();
        if geometry.kind() == TraceKind::Point {
            assert!(
                !self
                    .steps
                    .iter()
                    .any(|s| s.kind() == TraceKind::Point && s.label == label),
                "duplicate point label {label:?} in trace"
            );
        }
        self.steps.push(TraceStep {
            label,
            geometry,
            note: note.into(),
        });
    }

    pub fn point(&mut self, label: impl Into<String>, p: Point, note: impl Into<String>) {
        self.push(label, TraceGeometry::Point(p), note);
    }

    pub fn line(&mut self, label: impl Into<String>, l: LineSpec, note: impl Into<String>) {
        self.push(label, TraceGeometry::Line(l), note);
    }

    pub fn circle(&mut self, label: impl Into<String>, c: CircleSpec, note: impl Into<String>) {
        self.push(label, TraceGeometry::Circle(c), note);
    }

    pub fn segment(
        &mut self,
        label: impl Into<String>,
        a: Point,
        b: Point,
        note: impl Into<String>,
    ) {
        self.push(label, TraceGeometry::Segment(a, b), note);
    }

    /// Looks up the most recent point step with the given label.
    pub fn find_point(&self, label: &str) -> Option<Point> {
        self.steps.iter().rev().find_map(|s| match &s.geometry {
            TraceGeometry::Point(p) if s.label == label => Some(*p),
            _ => None,
        })
    }
}
