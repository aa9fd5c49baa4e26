//! `oval`: construct, validate and render 4-centre ovals and encompassing
//! circles.
//!
//! Exit codes: 0 success, 1 usage/IO/parse error, 2 geometric precondition
//! failure.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ovals::construct::{
    construct_classic_oval, construct_oval_b1, construct_oval_b2, encircle_adjacent,
    encircle_overlapping, encircle_separate_family, encircle_separate_single, ClassicKind,
    EncompassingResult,
};
use ovals::json::{
    encompassing_to_json, oval_from_json, oval_to_json, report_to_json, trace_to_json,
};
use ovals::oval::validate_oval;
use ovals::render::{render_encompassing, render_oval, RenderStyle};
use ovals::{CircleSpec, ConstructionTrace, Error, FourCentreOval, Point, Tolerance};

#[derive(Parser)]
#[command(
    name = "oval",
    version,
    about = "Compass-and-straightedge constructions of 4-centre ovals and encompassing circles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Oval B1 from the minor semiaxis, major semiaxis and large-arc radius
    B1 {
        #[arg(long, value_parser = parse_real)]
        minor: f64,
        #[arg(long, value_parser = parse_real)]
        major: f64,
        #[arg(long = "radius-large", value_parser = parse_real)]
        radius_large: f64,
        #[command(flatten)]
        output: OutputOptions,
    },
    /// Oval B2 from the minor semiaxis, major semiaxis and small-arc radius
    B2 {
        #[arg(long, value_parser = parse_real)]
        minor: f64,
        #[arg(long, value_parser = parse_real)]
        major: f64,
        #[arg(long = "radius-small", value_parser = parse_real)]
        radius_small: f64,
        #[command(flatten)]
        output: OutputOptions,
    },
    /// Oval from the full major axis and both arc radii
    Family {
        #[arg(long = "major-axis", value_parser = parse_real)]
        major_axis: f64,
        #[arg(long = "radius-small", value_parser = parse_real)]
        radius_small: f64,
        #[arg(long = "radius-large", value_parser = parse_real)]
        radius_large: f64,
        #[command(flatten)]
        output: OutputOptions,
    },
    /// Serlio's classic ovals S1-S4 and the Clavius generalization
    Classic {
        /// S1, S2, S3, S4 or Clavius
        #[arg(long)]
        kind: String,
        #[arg(long, value_parser = parse_real)]
        scale: f64,
        /// Apex half-angle in radians (Clavius only)
        #[arg(long = "half-angle", value_parser = parse_real)]
        half_angle: Option<f64>,
        #[command(flatten)]
        output: OutputOptions,
    },
    /// Circle encompassing two given circles, internally tangent to both
    Encircle {
        #[arg(long, value_enum)]
        case: EncircleCase,
        /// First given circle as x,y,r
        #[arg(long, value_parser = parse_circle)]
        c1: CircleArg,
        /// Second given circle as x,y,r
        #[arg(long, value_parser = parse_circle)]
        c2: CircleArg,
        /// Family parameter (family case only)
        #[arg(long, value_parser = parse_real)]
        d: Option<f64>,
        #[command(flatten)]
        output: OutputOptions,
    },
    /// Validate an oval JSON file against the model invariants
    Validate {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EncircleCase {
    Adjacent,
    Overlapping,
    Separate,
    Family,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Svg,
    Both,
}

#[derive(Args)]
struct OutputOptions {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Output path; with --format both, `.json` and `.svg` are appended
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include the construction trace in JSON output
    #[arg(long)]
    trace: bool,
    #[arg(long = "abs-eps", value_parser = parse_real, default_value = "0.000000001")]
    abs_eps: f64,
    #[arg(long = "rel-eps", value_parser = parse_real, default_value = "0.000000001")]
    rel_eps: f64,
    #[arg(long = "stroke-width-main", value_parser = parse_real)]
    stroke_width_main: Option<f64>,
    #[arg(long = "stroke-width-aux", value_parser = parse_real)]
    stroke_width_aux: Option<f64>,
    /// Omit point labels in SVG output
    #[arg(long = "no-labels")]
    no_labels: bool,
    /// Omit auxiliary construction geometry in SVG output
    #[arg(long = "no-aux")]
    no_aux: bool,
    /// Coordinate decimals in SVG output (3 to 12)
    #[arg(long, default_value_t = 6)]
    decimals: u32,
}

impl OutputOptions {
    fn tolerance(&self) -> Tolerance {
        Tolerance {
            abs_eps: self.abs_eps,
            rel_eps: self.rel_eps,
        }
    }

    fn style(&self) -> RenderStyle {
        let base = RenderStyle::default();
        RenderStyle {
            stroke_width_main: self.stroke_width_main.unwrap_or(base.stroke_width_main),
            stroke_width_aux: self.stroke_width_aux.unwrap_or(base.stroke_width_aux),
            show_labels: !self.no_labels,
            show_aux: !self.no_aux,
            decimals: self.decimals,
        }
    }
}

#[derive(Clone, Copy)]
struct CircleArg {
    x: f64,
    y: f64,
    r: f64,
}

/// Plain decimal numbers only: optional sign, digits, optional dot-separated
/// fraction. No exponents, no infinities, no locale variants.
fn parse_real(s: &str) -> Result<f64, String> {
    let body = s.strip_prefix('-').unwrap_or(s);
    let body = body.strip_prefix('+').unwrap_or(body);
    let mut parts = body.splitn(2, '.');
    let int = parts.next().unwrap_or("");
    let frac = parts.next();
    let digits_ok = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let ok = match frac {
        Some(f) => {
            (digits_ok(int) || int.is_empty()) && digits_ok(f) && !(int.is_empty() && f.is_empty())
        }
        None => digits_ok(int),
    };
    if !ok {
        return Err(format!("not a plain decimal number: {s:?}"));
    }
    s.parse::<f64>().map_err(|e| e.to_string())
}

fn parse_circle(s: &str) -> Result<CircleArg, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected x,y,r (got {s:?})"));
    }
    Ok(CircleArg {
        x: parse_real(parts[0])?,
        y: parse_real(parts[1])?,
        r: parse_real(parts[2])?,
    })
}

enum Failure {
    /// Geometric precondition failure: exit 2.
    Geometric(Error),
    /// IO or input-parsing failure: exit 1.
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(msg) => Failure::Io(msg),
            other => Failure::Geometric(other),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; everything else is a
            // usage error (exit 1, not clap's default 2).
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Geometric(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::B1 {
            minor,
            major,
            radius_large,
            output,
        } => {
            let (oval, trace) = construct_oval_b1(minor, major, radius_large, output.tolerance())?;
            emit_oval(&oval, &trace, &output)
        }
        Command::B2 {
            minor,
            major,
            radius_small,
            output,
        } => {
            let (oval, trace) = construct_oval_b2(minor, major, radius_small, output.tolerance())?;
            emit_oval(&oval, &trace, &output)
        }
        Command::Family {
            major_axis,
            radius_small,
            radius_large,
            output,
        } => {
            let (oval, trace) = ovals::construct::oval_from_major_axis_and_radii(
                major_axis,
                radius_small,
                radius_large,
                output.tolerance(),
            )?;
            emit_oval(&oval, &trace, &output)
        }
        Command::Classic {
            kind,
            scale,
            half_angle,
            output,
        } => {
            let kind = ClassicKind::from_str(&kind)?;
            let (oval, trace) =
                construct_classic_oval(kind, scale, half_angle, output.tolerance())?;
            emit_oval(&oval, &trace, &output)
        }
        Command::Encircle {
            case,
            c1,
            c2,
            d,
            output,
        } => {
            let tol = output.tolerance();
            let s1 = CircleSpec::new(Point::new(c1.x, c1.y), c1.r).map_err(Error::Geom)?;
            let s2 = CircleSpec::new(Point::new(c2.x, c2.y), c2.r).map_err(Error::Geom)?;
            let result = match case {
                EncircleCase::Adjacent => encircle_adjacent(s1, s2, tol)?,
                EncircleCase::Overlapping => encircle_overlapping(s1, s2, tol)?,
                EncircleCase::Separate => encircle_separate_single(s1, s2, tol)?,
                EncircleCase::Family => {
                    let d = d.ok_or_else(|| Failure::Io("the family case requires --d".into()))?;
                    encircle_separate_family(s1, s2, d, tol)?
                }
            };
            emit_encircle(&result, &[s1, s2], &output)
        }
        Command::Validate { input } => {
            let text = fs::read_to_string(&input)
                .map_err(|e| Failure::Io(format!("cannot read {}: {e}", input.display())))?;
            let oval: FourCentreOval = oval_from_json(&text)?;
            let report = validate_oval(&oval, Tolerance::default());
            println!("{}", report_to_json(&report));
            if report.valid {
                Ok(())
            } else {
                Err(Failure::Geometric(Error::InvalidOval(report)))
            }
        }
    }
}

fn json_with_trace(body: String, trace: &ConstructionTrace, include: bool) -> String {
    if include {
        format!("{{\"result\":{body},\"trace\":{}}}", trace_to_json(trace))
    } else {
        body
    }
}

fn emit_oval(
    oval: &FourCentreOval,
    trace: &ConstructionTrace,
    output: &OutputOptions,
) -> Result<(), Failure> {
    let json = || json_with_trace(oval_to_json(oval), trace, output.trace);
    let svg = || render_oval(oval, Some(trace), &output.style());
    emit(output, json, svg)
}

fn emit_encircle(
    result: &EncompassingResult,
    given: &[CircleSpec; 2],
    output: &OutputOptions,
) -> Result<(), Failure> {
    let json = || json_with_trace(encompassing_to_json(result), &result.trace, output.trace);
    let svg = || render_encompassing(result, given, &output.style());
    emit(output, json, svg)
}

fn emit(
    output: &OutputOptions,
    json: impl Fn() -> String,
    svg: impl Fn() -> Result<String, Error>,
) -> Result<(), Failure> {
    let write = |path: &PathBuf, text: &str| -> Result<(), Failure> {
        fs::write(path, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))
    };
    match (output.format, &output.out) {
        (Format::Json, None) => println!("{}", json()),
        (Format::Json, Some(path)) => write(path, &(json() + "\n"))?,
        (Format::Svg, None) => print!("{}", svg()?),
        (Format::Svg, Some(path)) => write(path, &svg()?)?,
        (Format::Both, None) => {
            println!("{}", json());
            print!("{}", svg()?);
        }
        (Format::Both, Some(path)) => {
            let mut json_path = path.clone().into_os_string();
            json_path.push(".json");
            let mut svg_path = path.clone().into_os_string();
            svg_path.push(".svg");
            write(&PathBuf::from(json_path), &(json() + "\n"))?;
            write(&PathBuf::from(svg_path), &svg()?)?;
        }
    }
    Ok(())
}
