mod latex;
mod verify;

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use ballmag::bessel::bessel_row;
use ballmag::engine::{
    ball_magnitude, bessel_capacity, conjecture_gap, conjecture_polynomial,
};
use ballmag::exact::{laurent_at_infinity, Poly, RatFunc, Rational};
use ballmag::finite::{
    finite_magnitude, grid_approximation, read_distance_csv, read_points_csv, FiniteSpace, Shape,
    DEFAULT_POINT_CAP,
};
use ballmag::radial::{build_boundary_system, half_dimension, solve_alphas};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "ballmag", version, about = "Exact magnitude of balls in odd dimensions")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest grid allowed by `approx`.
    #[arg(long, default_value_t = DEFAULT_POINT_CAP, global = true)]
    grid_cap: usize,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Log progress to standard error.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Magnitude of the ball of radius R in ℝⁿ.
    Ball {
        #[arg(long)]
        dim: u32,
    },
    /// Exact magnitude at a rational radius.
    Eval {
        #[arg(long)]
        dim: u32,
        #[arg(long, value_parser = parse_rational)]
        radius: Rational,
    },
    /// The intrinsic-volume polynomial, or its difference from the exact value.
    Conjecture {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        gap: bool,
    },
    /// Leading terms of the magnitude at R = ∞.
    Expand {
        #[arg(long)]
        dim: u32,
        #[arg(long, default_value_t = 6)]
        terms: usize,
    },
    /// Bessel-like capacity C_m(B_R, s²) divided by ωₙ.
    Capacity {
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        sqrt_lambda: Rational,
    },
    /// Rows of the Bessel number triangle.
    Bessel {
        #[arg(long)]
        rows: u32,
    },
    /// The generated boundary system.
    System {
        #[arg(long)]
        dim: u32,
        /// Number of boundary conditions; defaults to (n+1)/2.
        #[arg(long)]
        conditions: Option<u32>,
    },
    /// Reduced coefficients of the extremal function.
    Alphas {
        #[arg(long)]
        dim: u32,
    },
    /// Magnitude of a finite subset of Euclidean space or a finite metric.
    Finite {
        #[arg(long, conflicts_with = "matrix", required_unless_present = "matrix")]
        points: Option<PathBuf>,
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
    },
    /// Lower bounds from nested grids in a shape.
    Approx {
        #[arg(long, default_value = "ball", value_parser = parse_shape)]
        shape: Shape,
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        radius: f64,
        #[arg(long)]
        levels: u32,
        /// Also write the level table as CSV here.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Recompute the worked examples and report each check.
    Verify,
}

fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

fn parse_shape(s: &str) -> std::result::Result<Shape, String> {
    s.parse::<Shape>().map_err(|e| e.to_string())
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] ballmag::Error),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn unsupported(format: Format, what: &str) -> CliError {
    CliError::Usage(format!("--format {format:?} is not available for {what}").to_lowercase())
}

fn odd_dim(dim: u32) -> Result<u32> {
    half_dimension(dim).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(dim)
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serialisable")
}

fn coefficient_table(f: &RatFunc) -> String {
    let mut w = csv_writer();
    w.write_record(["part", "power", "coefficient"]).expect("in-memory");
    for (part, p) in [("numerator", f.numerator()), ("denominator", f.denominator())] {
        for (k, c) in p.coeffs().iter().enumerate() {
            w.write_record([part, &k.to_string(), &c.to_string()]).expect("in-memory");
        }
    }
    finish_csv(w)
}

fn poly_table(p: &Poly) -> String {
    coefficient_table(&RatFunc::from_poly(p.clone()))
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::Writer::from_writer(Vec::new())
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory")).expect("utf-8")
}

fn ratfunc_out(format: Format, f: &RatFunc) -> String {
    match format {
        Format::Text => f.to_text(),
        Format::Json => to_json(f),
        Format::Latex => latex::ratfunc(f),
        Format::Csv => coefficient_table(f),
    }
}

fn run(cli: &Cli) -> Result<(String, bool)> {
    let format = cli.format;
    let out = match &cli.command {
        Command::Ball { dim } => {
            let r = ball_magnitude(odd_dim(*dim)?)?;
            match format {
                Format::Text => r.magnitude.to_text(),
                Format::Json => to_json(&*r),
                Format::Latex => latex::ball(*dim, &r.magnitude),
                Format::Csv => coefficient_table(&r.magnitude),
            }
        }
        Command::Eval { dim, radius } => {
            if radius.is_negative() {
                return Err(CliError::Usage("--radius must be nonnegative".into()));
            }
            let r = ball_magnitude(odd_dim(*dim)?)?;
            let value = r.magnitude.evaluate(radius)?;
            match format {
                Format::Text => value.to_string(),
                Format::Json => to_json(&json!({
                    "dim": dim,
                    "radius": radius,
                    "value": value,
                    "approx": value.to_f64(),
                })),
                Format::Latex => latex::rational(&value),
                Format::Csv => {
                    let mut w = csv_writer();
                    w.write_record(["dim", "radius", "value", "approx"]).expect("in-memory");
                    w.write_record([
                        dim.to_string(),
                        radius.to_string(),
                        value.to_string(),
                        value.to_f64().to_string(),
                    ])
                    .expect("in-memory");
                    finish_csv(w)
                }
            }
        }
        Command::Conjecture { dim, gap } => {
            let dim = odd_dim(*dim)?;
            if *gap {
                let g = conjecture_gap(dim)?;
                match format {
                    Format::Json => to_json(&json!({ "dim": dim, "gap": g })),
                    _ => ratfunc_out(format, &g),
                }
            } else {
                let c = conjecture_polynomial(dim)?;
                let p = c.to_poly();
                match format {
                    Format::Text => p.to_text(),
                    Format::Json => to_json(&c),
                    Format::Latex => latex::poly(&p),
                    Format::Csv => poly_table(&p),
                }
            }
        }
        Command::Expand { dim, terms } => {
            if *terms == 0 {
                return Err(CliError::Usage("--terms must be at least 1".into()));
            }
            let r = ball_magnitude(odd_dim(*dim)?)?;
            let e = laurent_at_infinity(&r.magnitude, *terms)?;
            match format {
                Format::Text => format!("{} + O(R^{})", e.to_text(), e.top_degree - *terms as i64),
                Format::Json => to_json(&e),
                Format::Latex => {
                    let terms: Vec<String> = e
                        .coeffs
                        .iter()
                        .enumerate()
                        .map(|(i, c)| {
                            let power = e.top_degree - i as i64;
                            let c = latex::rational(c);
                            match power {
                                0 => c,
                                1 => format!("{c}R"),
                                _ => format!("{c}R^{{{power}}}"),
                            }
                        })
                        .collect();
                    format!(
                        "{} + O(R^{{{}}})",
                        terms.join(" + "),
                        e.top_degree - e.coeffs.len() as i64
                    )
                }
                Format::Csv => {
                    let mut w = csv_writer();
                    w.write_record(["power", "coefficient"]).expect("in-memory");
                    for (i, c) in e.coeffs.iter().enumerate() {
                        w.write_record([(e.top_degree - i as i64).to_string(), c.to_string()])
                            .expect("in-memory");
                    }
                    finish_csv(w)
                }
            }
        }
        Command::Capacity { dim, m, sqrt_lambda } => {
            let dim = odd_dim(*dim)?;
            let cap = bessel_capacity(dim, *m, sqrt_lambda).map_err(|e| match e {
                ballmag::Error::OutOfRange { .. } | ballmag::Error::NotPositive(_) => {
                    CliError::Usage(e.to_string())
                }
                other => other.into(),
            })?;
            if cap.experimental {
                log::warn!("order m = {} uses the extended boundary ladder; treat as experimental", m);
            }
            match format {
                Format::Json => to_json(&cap),
                _ => ratfunc_out(format, &cap.value),
            }
        }
        Command::Bessel { rows } => {
            if *rows == 0 {
                return Err(CliError::Usage("--rows must be at least 1".into()));
            }
            let table: Vec<_> = (1..=*rows).map(bessel_row).collect::<std::result::Result<_, _>>()?;
            match format {
                Format::Text => table
                    .iter()
                    .map(|r| {
                        r.values
                            .iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
                Format::Json => to_json(&table),
                Format::Csv => {
                    let mut w = csv_writer();
                    w.write_record(["j", "k", "coefficient"]).expect("in-memory");
                    for r in &table {
                        for (k, c) in r.terms() {
                            w.write_record([r.j.to_string(), k.to_string(), c.to_string()])
                                .expect("in-memory");
                        }
                    }
                    finish_csv(w)
                }
                Format::Latex => return Err(unsupported(format, "bessel")),
            }
        }
        Command::System { dim, conditions } => {
            let dim = odd_dim(*dim)?;
            let m = conditions.unwrap_or(dim.div_ceil(2));
            let sys = build_boundary_system(dim, m).map_err(|e| CliError::Usage(e.to_string()))?;
            match format {
                Format::Text => sys.to_text().trim_end().to_string(),
                Format::Json => to_json(&sys),
                Format::Latex => {
                    let rows: Vec<String> = sys
                        .matrix
                        .iter()
                        .zip(&sys.rhs)
                        .map(|(row, b)| {
                            let mut cells: Vec<String> = row.iter().map(latex::ratfunc).collect();
                            cells.push(latex::rational(b));
                            cells.join(" & ")
                        })
                        .collect();
                    let cols = "c".repeat(sys.size());
                    format!(
                        "\\left(\\begin{{array}}{{{cols}|c}}\n{}\n\\end{{array}}\\right)",
                        rows.join(" \\\\\n")
                    )
                }
                Format::Csv => return Err(unsupported(format, "system")),
            }
        }
        Command::Alphas { dim } => {
            let dim = odd_dim(*dim)?;
            let sol = solve_alphas(&build_boundary_system(dim, dim.div_ceil(2))?)?;
            match format {
                Format::Text => sol
                    .indices
                    .iter()
                    .zip(&sol.reduced_alphas)
                    .map(|(j, a)| format!("alpha_{j} = {a}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
                Format::Json => to_json(&sol),
                Format::Latex => sol
                    .indices
                    .iter()
                    .zip(&sol.reduced_alphas)
                    .map(|(j, a)| format!("\\bar\\alpha_{{{j}}} = {}", latex::ratfunc(a)))
                    .collect::<Vec<_>>()
                    .join(" \\\\\n"),
                Format::Csv => {
                    let mut w = csv_writer();
                    w.write_record(["j", "alpha"]).expect("in-memory");
                    for (j, a) in sol.indices.iter().zip(&sol.reduced_alphas) {
                        w.write_record([j.to_string(), a.to_text()]).expect("in-memory");
                    }
                    finish_csv(w)
                }
            }
        }
        Command::Finite { points, matrix, scale } => {
            if !(*scale > 0.0 && scale.is_finite()) {
                return Err(CliError::Usage("--scale must be positive".into()));
            }
            let space = match (points, matrix) {
                (Some(p), _) => FiniteSpace::from_points(&read_points_csv(File::open(p)?)?)?,
                (None, Some(m)) => FiniteSpace::from_distance_matrix(&read_distance_csv(File::open(m)?)?)?,
                (None, None) => return Err(CliError::Usage("give --points or --matrix".into())),
            };
            let space = space.with_scale(*scale)?;
            let w = finite_magnitude(&space)?;
            match format {
                Format::Text => format!(
                    "magnitude = {}\npoints = {}\nresidual = {:.3e}",
                    w.magnitude,
                    space.len(),
                    w.residual
                ),
                Format::Json => to_json(&json!({
                    "points": space.len(),
                    "scale": scale,
                    "magnitude": w.magnitude,
                    "weights": w.weights,
                    "residual": w.residual,
                })),
                Format::Csv => {
                    let mut c = csv_writer();
                    c.write_record(["index", "weight"]).expect("in-memory");
                    for (i, x) in w.weights.iter().enumerate() {
                        c.write_record([i.to_string(), x.to_string()]).expect("in-memory");
                    }
                    finish_csv(c)
                }
                Format::Latex => return Err(unsupported(format, "finite")),
            }
        }
        Command::Approx { shape, dim, radius, levels, csv } => {
            if *levels == 0 {
                return Err(CliError::Usage("--levels must be at least 1".into()));
            }
            let table = grid_approximation(*shape, *dim, *radius, *levels, cli.grid_cap)
                .map_err(|e| match e {
                    ballmag::Error::OutOfRange { .. } | ballmag::Error::NotPositive(_) => {
                        CliError::Usage(e.to_string())
                    }
                    other => other.into(),
                })?;
            let mut w = csv_writer();
            w.write_record(["level", "points", "magnitude"]).expect("in-memory");
            for l in &table {
                w.write_record([l.level.to_string(), l.points.to_string(), l.magnitude.to_string()])
                    .expect("in-memory");
            }
            let table_csv = finish_csv(w);
            if let Some(path) = csv {
                std::fs::write(path, &table_csv)?;
            }
            match format {
                Format::Text => table
                    .iter()
                    .map(|l| format!("level {:>2}  points {:>6}  magnitude {:.10}", l.level, l.points, l.magnitude))
                    .collect::<Vec<_>>()
                    .join("\n"),
                Format::Json => to_json(&json!({
                    "shape": shape,
                    "dim": dim,
                    "radius": radius,
                    "levels": table,
                })),
                Format::Csv => table_csv,
                Format::Latex => return Err(unsupported(format, "approx")),
            }
        }
        Command::Verify => {
            let checks = verify::run()?;
            let ok = checks.iter().all(|c| c.passed);
            let body = match format {
                Format::Text => {
                    let mut lines: Vec<String> = checks
                        .iter()
                        .map(|c| {
                            format!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)
                        })
                        .collect();
                    let passed = checks.iter().filter(|c| c.passed).count();
                    lines.push(format!("{passed}/{} checks passed", checks.len()));
                    lines.join("\n")
                }
                Format::Json => to_json(&checks),
                Format::Csv => {
                    let mut w = csv_writer();
                    w.write_record(["check", "passed", "detail"]).expect("in-memory");
                    for c in &checks {
                        w.write_record([c.name.as_str(), if c.passed { "true" } else { "false" }, &c.detail])
                            .expect("in-memory");
                    }
                    finish_csv(w)
                }
                Format::Latex => return Err(unsupported(format, "verify")),
            };
            return Ok((body, ok));
        }
    };
    Ok((out, true))
}

fn emit(cli: &Cli, body: &str) -> io::Result<()> {
    let mut text = body.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.output {
        Some(path) => std::fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    env_logger::Builder::new()
        .filter_level(if cli.verbose {
            log::LevelFilter::Info
        } else {
            log::LevelFilter::Warn
        })
        .init();
    let result = run(&cli).and_then(|(body, ok)| {
        emit(&cli, &body)?;
        if ok {
            Ok(())
        } else {
            Err(CliError::Failed("one or more checks failed".into()))
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
