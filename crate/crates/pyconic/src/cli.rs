//! Command-line front end.
//!
//! Exit status: 0 success, 1 usage or input error, 2 failed verification or
//! quadrature that did not converge, 3 infeasible `(e, k)`.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use pyconic_core::{
    altitude_from_right_angle, arc_length, build_scene, closed_form_circle, closed_form_parabola,
    conic_triple, construct_arc, make_right_triangle, place_triangle, polyline_length,
    pythagorean_centre, sweep, verify_homothety, ConicClass, Error, QuadratureSettings,
};

use crate::json::{self, ArcDoc, CentreDoc, LengthDoc, SceneDoc, VerifyDoc};
use crate::number::sig17;
use crate::{svg, sweep_csv};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILED: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "pyconic",
    version,
    about = "Conic arcs on right triangles: lengths, Pythagorean residuals, homothety centre"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SceneFormat {
    Svg,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the arc for chord l, sagitta f and eccentricity e (JSON).
    Construct {
        #[arg(long, allow_hyphen_values = true)]
        l: f64,
        #[arg(long, allow_hyphen_values = true)]
        f: f64,
        #[arg(long, allow_hyphen_values = true)]
        e: f64,
    },
    /// Arc length by adaptive quadrature (JSON).
    Arclen {
        #[arg(long, allow_hyphen_values = true)]
        l: f64,
        #[arg(long, allow_hyphen_values = true)]
        f: f64,
        #[arg(long, allow_hyphen_values = true)]
        e: f64,
        #[arg(long, default_value_t = 1e-12)]
        rel_tol: f64,
    },
    /// Check c1² = c2² + c3² for one (e, k) triple; exit 2 when the residual
    /// reaches the threshold.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        leg2: f64,
        #[arg(long, allow_hyphen_values = true)]
        leg3: f64,
        #[arg(long, allow_hyphen_values = true)]
        e: f64,
        #[arg(long, allow_hyphen_values = true)]
        k: f64,
        #[arg(long, default_value_t = 1e-12)]
        rel_tol: f64,
        #[arg(long, default_value_t = 1e-8)]
        threshold: f64,
    },
    /// Residuals over an (e, k) grid (CSV).
    Sweep {
        #[arg(long, allow_hyphen_values = true)]
        leg2: f64,
        #[arg(long, allow_hyphen_values = true)]
        leg3: f64,
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        e_list: Vec<f64>,
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        k_list: Vec<f64>,
        #[arg(long, default_value_t = 1e-12)]
        rel_tol: f64,
    },
    /// Triangle, arcs, envelope and centre as SVG or JSON.
    Scene {
        #[arg(long, allow_hyphen_values = true)]
        leg2: f64,
        #[arg(long, allow_hyphen_values = true)]
        leg3: f64,
        #[arg(long, allow_hyphen_values = true)]
        e: f64,
        #[arg(long, allow_hyphen_values = true)]
        k: f64,
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = SceneFormat::Svg)]
        format: SceneFormat,
    },
    /// Pythagorean centre and homothety ratios for each k (JSON).
    Centre {
        #[arg(long, allow_hyphen_values = true)]
        leg2: f64,
        #[arg(long, allow_hyphen_values = true)]
        leg3: f64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        k_list: Vec<f64>,
    },
    /// Quadrature against an n-segment polyline and, for circles and
    /// parabolas, the closed form.
    Oracle {
        #[arg(long, allow_hyphen_values = true)]
        l: f64,
        #[arg(long, allow_hyphen_values = true)]
        f: f64,
        #[arg(long, allow_hyphen_values = true)]
        e: f64,
        #[arg(long, default_value_t = 200_000)]
        n: usize,
        #[arg(long, default_value_t = 1e-12)]
        rel_tol: f64,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Core(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn check_finite(pairs: &[(&str, f64)]) -> Result<(), Failure> {
    for &(name, v) in pairs {
        if !v.is_finite() {
            return Err(Failure::Usage(format!(
                "--{name} must be a finite number, got {v}"
            )));
        }
    }
    Ok(())
}

fn check_finite_list(name: &str, values: &[f64]) -> Result<(), Failure> {
    for &v in values {
        check_finite(&[(name, v)])?;
    }
    Ok(())
}

fn settings(rel_tol: f64) -> QuadratureSettings {
    QuadratureSettings::with_rel_tol(rel_tol)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };

    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(failure) => {
            let (code, msg) = match failure {
                Failure::Usage(msg) => (EXIT_USAGE, msg),
                Failure::Io(e) => (EXIT_USAGE, format!("output error: {e}")),
                Failure::Core(e @ Error::InfeasibleSagitta { .. }) => {
                    (EXIT_INFEASIBLE, e.to_string())
                }
                Failure::Core(e @ Error::QuadratureNonConvergence { .. }) => {
                    (EXIT_FAILED, e.to_string())
                }
                Failure::Core(e) => (EXIT_USAGE, e.to_string()),
            };
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match *command {
        Command::Construct { l, f, e } => {
            check_finite(&[("l", l), ("f", f), ("e", e)])?;
            let arc = construct_arc(l, f, e)?;
            out.write_all(json::to_string(&ArcDoc::from(&arc)).as_bytes())?;
        }
        Command::Arclen { l, f, e, rel_tol } => {
            check_finite(&[("l", l), ("f", f), ("e", e), ("rel-tol", rel_tol)])?;
            let arc = construct_arc(l, f, e)?;
            let r = arc_length(&arc, &settings(rel_tol))?;
            out.write_all(json::to_string(&LengthDoc::from(&r)).as_bytes())?;
        }
        Command::Verify {
            leg2,
            leg3,
            e,
            k,
            rel_tol,
            threshold,
        } => {
            check_finite(&[
                ("leg2", leg2),
                ("leg3", leg3),
                ("e", e),
                ("k", k),
                ("rel-tol", rel_tol),
                ("threshold", threshold),
            ])?;
            let tri = make_right_triangle(leg2, leg3)?;
            let triple = conic_triple(&tri, e, k, &settings(rel_tol))?;
            let doc = VerifyDoc::new(&triple, threshold);
            out.write_all(json::to_string(&doc).as_bytes())?;
            if triple.residual >= threshold {
                return Ok(EXIT_FAILED);
            }
        }
        Command::Sweep {
            leg2,
            leg3,
            ref e_list,
            ref k_list,
            rel_tol,
        } => {
            check_finite(&[("leg2", leg2), ("leg3", leg3), ("rel-tol", rel_tol)])?;
            check_finite_list("e-list", e_list)?;
            check_finite_list("k-list", k_list)?;
            let tri = make_right_triangle(leg2, leg3)?;
            let rows = sweep(&tri, e_list, k_list, &settings(rel_tol))?;
            sweep_csv::write_sweep(&rows, &mut *out)?;
        }
        Command::Scene {
            leg2,
            leg3,
            e,
            k,
            samples,
            format,
        } => {
            check_finite(&[("leg2", leg2), ("leg3", leg3), ("e", e), ("k", k)])?;
            let tri = place_triangle(leg2, leg3)?;
            let scene = build_scene(&tri, e, k, samples)?;
            let doc = match format {
                SceneFormat::Svg => svg::render(&scene),
                SceneFormat::Json => json::to_string(&SceneDoc::new(&scene, e, k)),
            };
            out.write_all(doc.as_bytes())?;
        }
        Command::Centre {
            leg2,
            leg3,
            ref k_list,
        } => {
            check_finite(&[("leg2", leg2), ("leg3", leg3)])?;
            check_finite_list("k-list", k_list)?;
            let tri = place_triangle(leg2, leg3)?;
            let (foot, h1) = altitude_from_right_angle(&tri);
            let reports = k_list
                .iter()
                .map(|&k| verify_homothety(&tri, k))
                .collect::<Result<Vec<_>, _>>()?;
            let doc = CentreDoc::new(tri.vertices(), foot, h1, pythagorean_centre(&tri), &reports);
            out.write_all(json::to_string(&doc).as_bytes())?;
        }
        Command::Oracle {
            l,
            f,
            e,
            n,
            rel_tol,
        } => {
            check_finite(&[("l", l), ("f", f), ("e", e), ("rel-tol", rel_tol)])?;
            let arc = construct_arc(l, f, e)?;
            let quad = arc_length(&arc, &settings(rel_tol))?;
            let poly = polyline_length(&arc, n)?;
            let closed = match arc.class() {
                ConicClass::Circle => Some(closed_form_circle(&arc)?),
                ConicClass::Parabola => Some(closed_form_parabola(&arc)?),
                _ => None,
            };

            let gap = |v: f64| sig17((v - quad.length).abs() / quad.length);
            writeln!(
                out,
                "class {} e {} l {} f {}",
                arc.class(),
                sig17(e),
                sig17(l),
                sig17(f)
            )?;
            writeln!(out, "{:<16} {:<24} rel_gap", "method", "length")?;
            writeln!(out, "{:<16} {:<24} 0", "quadrature", sig17(quad.length))?;
            writeln!(
                out,
                "{:<16} {:<24} {}",
                format!("polyline_{n}"),
                sig17(poly),
                gap(poly)
            )?;
            if let Some(c) = closed {
                writeln!(out, "{:<16} {:<24} {}", "closed_form", sig17(c), gap(c))?;
            }
            writeln!(out, "error_estimate {}", sig17(quad.error_estimate))?;
        }
    }
    Ok(EXIT_OK)
}
