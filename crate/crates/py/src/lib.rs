//! Python bindings: the constructions, validation, JSON and SVG emission.

use std::str::FromStr;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ovals::construct::{
    b1_feasible as core_b1_feasible, b2_family_equivalence as core_b2_family_equivalence,
    construct_classic_oval, construct_oval_b1, construct_oval_b2, construct_oval_b2_angle_variant,
    encircle_adjacent, encircle_overlapping, encircle_separate_family, encircle_separate_single,
    oval_from_major_axis_and_radii, ClassicKind, EncompassingResult,
};
use ovals::json::{encompassing_to_json, oval_to_json, trace_to_json};
use ovals::oval::{ellipse_deviation, measure_semiaxes, validate_oval};
use ovals::render::{render_encompassing, render_oval, RenderStyle};
use ovals::{CircleSpec, ConstructionTrace, FourCentreOval, Point, Tolerance};

fn err(e: ovals::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn tol() -> Tolerance {
    Tolerance::default()
}

fn pair(p: Point) -> (f64, f64) {
    (p.x, p.y)
}

/// A validated 4-centre oval together with its construction trace.
#[pyclass(frozen)]
struct Oval {
    inner: FourCentreOval,
    trace: ConstructionTrace,
}

#[pymethods]
impl Oval {
    #[getter]
    fn semiaxis_minor(&self) -> f64 {
        self.inner.semiaxis_minor
    }

    #[getter]
    fn semiaxis_major(&self) -> f64 {
        self.inner.semiaxis_major
    }

    #[getter]
    fn r_small(&self) -> f64 {
        self.inner.r_small
    }

    #[getter]
    fn r_large(&self) -> f64 {
        self.inner.r_large
    }

    #[getter]
    fn centres(&self) -> Vec<(f64, f64)> {
        self.inner.centres.iter().copied().map(pair).collect()
    }

    #[getter]
    fn junctions(&self) -> Vec<(f64, f64)> {
        self.inner.junctions.iter().copied().map(pair).collect()
    }

    #[getter]
    fn major_axis_direction(&self) -> &'static str {
        self.inner.major_axis_direction.as_str()
    }

    /// (valid, [(violation_name, residual), ...])
    fn validate(&self) -> (bool, Vec<(String, f64)>) {
        let report = validate_oval(&self.inner, tol());
        let violations = report
            .violations
            .iter()
            .map(|v| (v.name.clone(), v.residual))
            .collect();
        (report.valid, violations)
    }

    fn measure_semiaxes(&self) -> PyResult<(f64, f64)> {
        measure_semiaxes(&self.inner, tol()).map_err(err)
    }

    #[pyo3(signature = (samples = 4096))]
    fn ellipse_deviation(&self, samples: u32) -> PyResult<f64> {
        ellipse_deviation(&self.inner, samples, tol()).map_err(err)
    }

    fn to_json(&self) -> String {
        oval_to_json(&self.inner)
    }

    fn trace_json(&self) -> String {
        trace_to_json(&self.trace)
    }

    #[pyo3(signature = (show_aux = true, show_labels = true))]
    fn to_svg(&self, show_aux: bool, show_labels: bool) -> PyResult<String> {
        let style = RenderStyle {
            show_aux,
            show_labels,
            ..RenderStyle::default()
        };
        render_oval(&self.inner, Some(&self.trace), &style).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Oval(minor={}, major={}, r_small={}, r_large={}, direction={})",
            self.inner.semiaxis_minor,
            self.inner.semiaxis_major,
            self.inner.r_small,
            self.inner.r_large,
            self.inner.major_axis_direction.as_str()
        )
    }
}

/// An encompassing circle, its case tag and tangency points.
#[pyclass(frozen)]
struct Encompassing {
    inner: EncompassingResult,
    given: [CircleSpec; 2],
}

#[pymethods]
impl Encompassing {
    #[getter]
    fn centre(&self) -> (f64, f64) {
        pair(self.inner.circle.centre)
    }

    #[getter]
    fn radius(&self) -> f64 {
        self.inner.circle.radius
    }

    #[getter]
    fn case_tag(&self) -> &'static str {
        self.inner.case_tag.as_str()
    }

    #[getter]
    fn tangency_points(&self) -> Vec<(f64, f64)> {
        self.inner
            .tangency_points
            .iter()
            .copied()
            .map(pair)
            .collect()
    }

    fn to_json(&self) -> String {
        encompassing_to_json(&self.inner)
    }

    fn trace_json(&self) -> String {
        trace_to_json(&self.inner.trace)
    }

    #[pyo3(signature = (show_aux = true, show_labels = true))]
    fn to_svg(&self, show_aux: bool, show_labels: bool) -> PyResult<String> {
        let style = RenderStyle {
            show_aux,
            show_labels,
            ..RenderStyle::default()
        };
        render_encompassing(&self.inner, &self.given, &style).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Encompassing(centre=({}, {}), radius={}, case={})",
            self.inner.circle.centre.x,
            self.inner.circle.centre.y,
            self.inner.circle.radius,
            self.inner.case_tag.as_str()
        )
    }
}

#[pyfunction]
fn oval_b1(minor: f64, major: f64, radius_large: f64) -> PyResult<Oval> {
    let (inner, trace) = construct_oval_b1(minor, major, radius_large, tol()).map_err(err)?;
    Ok(Oval { inner, trace })
}

#[pyfunction]
fn oval_b2(minor: f64, major: f64, radius_small: f64) -> PyResult<Oval> {
    let (inner, trace) = construct_oval_b2(minor, major, radius_small, tol()).map_err(err)?;
    Ok(Oval { inner, trace })
}

#[pyfunction]
fn oval_b2_angle_variant(minor: f64, major: f64, radius_small: f64) -> PyResult<Oval> {
    let (inner, trace) =
        construct_oval_b2_angle_variant(minor, major, radius_small, tol()).map_err(err)?;
    Ok(Oval { inner, trace })
}

#[pyfunction]
fn oval_family(major_axis: f64, radius_small: f64, radius_large: f64) -> PyResult<Oval> {
    let (inner, trace) =
        oval_from_major_axis_and_radii(major_axis, radius_small, radius_large, tol())
            .map_err(err)?;
    Ok(Oval { inner, trace })
}

#[pyfunction]
#[pyo3(signature = (kind, scale, half_angle = None))]
fn oval_classic(kind: &str, scale: f64, half_angle: Option<f64>) -> PyResult<Oval> {
    let kind = ClassicKind::from_str(kind).map_err(err)?;
    let (inner, trace) = construct_classic_oval(kind, scale, half_angle, tol()).map_err(err)?;
    Ok(Oval { inner, trace })
}

/// `case`: "adjacent", "overlapping", "separate" or "family" (with `d`).
/// Circles are (x, y, r) triples.
#[pyfunction]
#[pyo3(signature = (case, c1, c2, d = None))]
fn encircle(
    case: &str,
    c1: (f64, f64, f64),
    c2: (f64, f64, f64),
    d: Option<f64>,
) -> PyResult<Encompassing> {
    let mk = |(x, y, r): (f64, f64, f64)| {
        CircleSpec::new(Point::new(x, y), r).map_err(|e| err(ovals::Error::Geom(e)))
    };
    let s1 = mk(c1)?;
    let s2 = mk(c2)?;
    let inner = match case {
        "adjacent" => encircle_adjacent(s1, s2, tol()),
        "overlapping" => encircle_overlapping(s1, s2, tol()),
        "separate" => encircle_separate_single(s1, s2, tol()),
        "family" => {
            let d = d.ok_or_else(|| PyValueError::new_err("the family case requires d"))?;
            encircle_separate_family(s1, s2, d, tol())
        }
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown case {other:?} (expected adjacent, overlapping, separate or family)"
            )))
        }
    }
    .map_err(err)?;
    Ok(Encompassing {
        inner,
        given: [s1, s2],
    })
}

#[pyfunction]
fn b1_feasible(minor: f64, major: f64, radius_large: f64) -> PyResult<bool> {
    core_b1_feasible(minor, major, radius_large).map_err(err)
}

#[pyfunction]
fn b2_family_equivalence(minor: f64, major: f64, radius_small: f64) -> PyResult<bool> {
    core_b2_family_equivalence(minor, major, radius_small, tol()).map_err(err)
}

#[pymodule]
fn ovals_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Oval>()?;
    m.add_class::<Encompassing>()?;
    m.add_function(wrap_pyfunction!(oval_b1, m)?)?;
    m.add_function(wrap_pyfunction!(oval_b2, m)?)?;
    m.add_function(wrap_pyfunction!(oval_b2_angle_variant, m)?)?;
    m.add_function(wrap_pyfunction!(oval_family, m)?)?;
    m.add_function(wrap_pyfunction!(oval_classic, m)?)?;
    m.add_function(wrap_pyfunction!(encircle, m)?)?;
    m.add_function(wrap_pyfunction!(b1_feasible, m)?)?;
    m.add_function(wrap_pyfunction!(b2_family_equivalence, m)?)?;
    Ok(())
}
