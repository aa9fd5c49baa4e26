//! Byte-stable JSON serialization. Numbers are emitted with 12 significant
//! digits in plain decimal notation; keys and array elements follow the
//! canonical ordering of the data model, so identical inputs always produce
//! identical bytes.

use crate::construct::EncompassingResult;
use crate::error::Error;
use crate::geom::Point;
use crate::oval::{FourCentreOval, OvalReport};
use crate::trace::{ConstructionTrace, TraceGeometry};

/// Formats a finite number with 12 significant digits, plain decimal, no
/// trailing fraction zeros, and no negative zero.
pub fn format_sig(v: f64) -> String {
    assert!(v.is_finite(), "cannot serialize non-finite number {v}");
    if v == 0.0 {
        return "0".into();
    }
    // 11 fraction digits in the mantissa = 12 significant digits.
    let s = format!("{v:.11e}");
    let (mant, exp) = s.split_once('e').expect("exponential format");
    let exp: i32 = exp.parse().expect("exponent");
    let neg = mant.starts_with('-');
    let digits: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    let point = exp + 1; // digits left of the decimal point
    let mut out = String::new();
    if point <= 0 {
        out.push_str("0.");
        for _ in 0..(-point) {
            out.push('0');
        }
        out.push_str(&digits);
    } else if point as usize >= digits.len() {
        out.push_str(&digits);
        for _ in 0..(point as usize - digits.len()) {
            out.push('0');
        }
    } else {
        out.push_str(&digits[..point as usize]);
        out.push('.');
        out.push_str(&digits[point as usize..]);
    }
    if out.contains('.') {
        while out.ends_with('0') {
            out.pop();
        }
        if out.ends_with('.') {
            out.pop();
        }
    }
    if out.bytes().all(|b| b == b'0' || b == b'.') {
        return "0".into();
    }
    if neg {
        out.insert(0, '-');
    }
    out
}

fn number_or_null(v: f64) -> String {
    if v.is_finite() {
        format_sig(v)
    } else {
        "null".into()
    }
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

fn point(p: Point) -> String {
    format!("{{\"x\":{},\"y\":{}}}", format_sig(p.x), format_sig(p.y))
}

fn points<'a>(ps: impl IntoIterator<Item = &'a Point>) -> String {
    let inner: Vec<String> = ps.into_iter().map(|p| point(*p)).collect();
    format!("[{}]", inner.join(","))
}

pub fn oval_to_json(o: &FourCentreOval) -> String {
    let arcs: Vec<String> = o
        .arcs
        .iter()
        .map(|a| {
            format!(
                "{{\"centre\":{},\"radius\":{},\"start_angle\":{},\"end_angle\":{}}}",
                point(a.centre),
                format_sig(a.radius),
                format_sig(a.start_angle),
                format_sig(a.end_angle)
            )
        })
        .collect();
    format!(
        "{{\"semiaxis_minor\":{},\"semiaxis_major\":{},\"r_small\":{},\"r_large\":{},\
         \"centres\":{},\"junctions\":{},\"arcs\":[{}],\"major_axis_direction\":\"{}\"}}",
        format_sig(o.semiaxis_minor),
        format_sig(o.semiaxis_major),
        format_sig(o.r_small),
        format_sig(o.r_large),
        points(&o.centres),
        points(&o.junctions),
        arcs.join(","),
        o.major_axis_direction.as_str()
    )
}

pub fn oval_from_json(text: &str) -> Result<FourCentreOval, Error> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn encompassing_to_json(r: &EncompassingResult) -> String {
    format!(
        "{{\"circle\":{{\"centre\":{},\"radius\":{}}},\"case_tag\":\"{}\",\
         \"tangency_points\":{}}}",
        point(r.circle.centre),
        format_sig(r.circle.radius),
        r.case_tag.as_str(),
        points(&r.tangency_points)
    )
}

pub fn report_to_json(r: &OvalReport) -> String {
    let violations: Vec<String> = r
        .violations
        .iter()
        .map(|v| {
            format!(
                "{{\"name\":\"{}\",\"residual\":{}}}",
                escape(&v.name),
                number_or_null(v.residual)
            )
        })
        .collect();
    format!(
        "{{\"valid\":{},\"violations\":[{}]}}",
        r.valid,
        violations.join(",")
    )
}

pub fn trace_to_json(t: &ConstructionTrace) -> String {
    let steps: Vec<String> = t
        .steps
        .iter()
        .map(|s| {
            let geometry = match &s.geometry {
                TraceGeometry::Point(p) => point(*p),
                TraceGeometry::Line(l) => format!(
                    "{{\"anchor\":{},\"direction\":{{\"x\":{},\"y\":{}}}}}",
                    point(l.anchor),
                    format_sig(l.direction.x),
                    format_sig(l.direction.y)
                ),
                TraceGeometry::Circle(c) => format!(
                    "{{\"centre\":{},\"radius\":{}}}",
                    point(c.centre),
                    format_sig(c.radius)
                ),
                TraceGeometry::Arc(a) => format!(
                    "{{\"centre\":{},\"radius\":{},\"start_angle\":{},\"end_angle\":{}}}",
                    point(a.centre),
                    format_sig(a.radius),
                    format_sig(a.start_angle),
                    format_sig(a.end_angle)
                ),
                TraceGeometry::Segment(a, b) => {
                    format!("{{\"from\":{},\"to\":{}}}", point(*a), point(*b))
                }
            };
            format!(
                "{{\"label\":\"{}\",\"kind\":\"{}\",\"geometry\":{},\"note\":\"{}\"}}",
                escape(&s.label),
                s.kind().as_str(),
                geometry,
                escape(&s.note)
            )
        })
        .collect();
    format!("{{\"steps\":[{}]}}", steps.join(","))
}
