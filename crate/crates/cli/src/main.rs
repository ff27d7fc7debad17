//! Command line frontend for the covering-radius library.
//!
//! Exit codes: 0 when a result was computed, 2 for usage problems
//! (unknown flags, malformed bodies or files), 3 for numeric domain
//! errors (invalid geometry, out-of-range parameters).

mod formats;
mod svg;

use clap::{Parser, Subcommand, ValueEnum};
use latcover::criteria::{self, EllipsoidSpec, ParallelogramSpec, TriangleSpec};
use latcover::geom::{regular_polygon, ConvexPolygon};
use latcover::lattice;
use latcover::steiner;
use std::path::PathBuf;
use std::process::ExitCode;

pub(crate) struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Failure { code: 2, msg: msg.into() }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Failure { code: 3, msg: msg.into() }
    }
}

impl From<latcover::Error> for Failure {
    fn from(e: latcover::Error) -> Self {
        Failure::domain(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

#[derive(Parser)]
#[command(
    name = "latcover",
    version,
    about = "Covering radii of planar convex bodies over the integer lattice"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form critical scale of a regular polygon, oracle-confirmed
    Zradius {
        /// Body selector, regular:<n>
        body: String,
        /// Angles in the confirmation sweep
        #[arg(long, default_value_t = 256)]
        sweep: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Output path, - for stdout
        #[arg(long, default_value = "-")]
        output: String,
    },
    /// Covering verdict over a rotation sweep, with certificate trail
    Check {
        /// Body selector, regular:<n> or file:<path>
        body: String,
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        /// Angles in the sweep
        #[arg(long, default_value_t = 256)]
        sweep: usize,
        /// Oracle grid resolution
        #[arg(long, default_value_t = lattice::DEFAULT_GRID)]
        grid: usize,
        /// Oracle refinement rounds
        #[arg(long, default_value_t = lattice::DEFAULT_REFINEMENTS)]
        refine: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long, default_value = "-")]
        output: String,
    },
    /// Per-angle covering radii from the deep-hole oracle
    Sweep {
        /// Body selector, regular:<n> or file:<path>
        body: String,
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        #[arg(long, default_value_t = 256)]
        sweep: usize,
        #[arg(long, default_value_t = lattice::DEFAULT_GRID)]
        grid: usize,
        #[arg(long, default_value_t = lattice::DEFAULT_REFINEMENTS)]
        refine: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long, default_value = "-")]
        output: String,
    },
    /// Search for a verified lattice-free placement at a fixed rotation
    Witness {
        /// Body selector, regular:<n> or file:<path>
        body: String,
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        /// Rotation angle in radians
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        #[arg(long, default_value_t = lattice::DEFAULT_GRID)]
        grid: usize,
        #[arg(long, default_value_t = lattice::DEFAULT_REFINEMENTS)]
        refine: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long, default_value = "-")]
        output: String,
    },
    /// Steiner symmetral of a body, as vertices or an SVG overlay
    Steiner {
        /// Body selector, regular:<n> or file:<path>
        body: String,
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        /// Rotation angle in radians
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long, default_value = "-")]
        output: String,
    },
    /// Inequality battery behind the hexagon and decagon scales
    Appendix {
        /// Grid points per inequality
        #[arg(long, default_value_t = 10_000)]
        grid: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long, default_value = "-")]
        output: String,
    },
    /// Classical covering criteria with closed-form answers
    Classic {
        #[command(subcommand)]
        shape: ClassicShape,
    },
}

#[derive(Subcommand)]
enum ClassicShape {
    /// Triangle with side lengths a <= b <= c
    Triangle { a: f64, b: f64, c: f64 },
    /// Parallelogram with side-pair distances a <= b and angle gamma
    Parallelogram { a: f64, b: f64, gamma: f64 },
    /// Ellipsoid with the given semi axes (any dimension)
    Ellipsoid {
        #[arg(required = true)]
        semi_axes: Vec<f64>,
    },
}

enum BodySel {
    Regular(u32),
    File(PathBuf),
}

fn parse_body(s: &str) -> Result<BodySel, Failure> {
    if let Some(n) = s.strip_prefix("regular:") {
        let n: u32 = n
            .parse()
            .map_err(|_| Failure::usage(format!("invalid side count in `{s}`")))?;
        return Ok(BodySel::Regular(n));
    }
    if let Some(p) = s.strip_prefix("file:") {
        return Ok(BodySel::File(PathBuf::from(p)));
    }
    Err(Failure::usage(format!(
        "body must be `regular:<n>` or `file:<path>`, got `{s}`"
    )))
}

fn load_body(body: &str, scale: f64, theta: f64) -> Result<ConvexPolygon, Failure> {
    if !(scale.is_finite() && scale > 0.0) {
        return Err(Failure::usage("--scale must be positive and finite"));
    }
    if !theta.is_finite() {
        return Err(Failure::usage("--theta must be finite"));
    }
    let base = match parse_body(body)? {
        BodySel::Regular(n) => regular_polygon(n, 1.0, 0.0)?,
        BodySel::File(p) => formats::load_polygon(&p)?,
    };
    Ok(base.scale(scale).rotate(theta))
}

fn closed_form_scale(sides: u32) -> Result<f64, Failure> {
    if sides >= 4 && sides % 4 == 0 {
        return Ok(criteria::z_regular_4n(sides / 4)?);
    }
    match sides {
        6 => Ok(criteria::z_hexagon()),
        10 => Ok(criteria::z_decagon()),
        _ => Err(Failure::domain(format!(
            "no closed-form critical scale for the regular {sides}-gon; use `check` with an explicit scale"
        ))),
    }
}

fn emit(output: &str, content: &str) -> CliResult {
    if output == "-" {
        print!("{content}");
        Ok(())
    } else {
        std::fs::write(output, content).map_err(Into::into)
    }
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Zradius { body, sweep, format, output } => {
            let sides = match parse_body(&body)? {
                BodySel::Regular(n) => n,
                BodySel::File(_) => {
                    return Err(Failure::usage("zradius needs a regular:<n> body"));
                }
            };
            let z = closed_form_scale(sides)?;
            let k = regular_polygon(sides, z, 0.0)?;
            let report = lattice::rotation_sweep(
                &k,
                sweep,
                lattice::DEFAULT_GRID,
                lattice::DEFAULT_REFINEMENTS,
            )?;
            emit(&output, &formats::render_zradius(sides, z, &report, format)?)
        }
        Command::Check { body, scale, sweep, grid, refine, format, output } => {
            let k = load_body(&body, scale, 0.0)?;
            let report = lattice::certified_sweep(&k, sweep, grid, refine)?;
            emit(&output, &formats::render_check(&report, format)?)
        }
        Command::Sweep { body, scale, sweep, grid, refine, format, output } => {
            let k = load_body(&body, scale, 0.0)?;
            let report = lattice::rotation_sweep(&k, sweep, grid, refine)?;
            emit(&output, &formats::render_sweep(&report, format)?)
        }
        Command::Witness { body, scale, theta, grid, refine, format, output } => {
            let k = load_body(&body, scale, 0.0)?;
            let found = lattice::find_witness_with(&k, theta, grid, refine)?;
            emit(&output, &formats::render_witness(theta, found, format)?)
        }
        Command::Steiner { body, scale, theta, format, output } => {
            let k = load_body(&body, scale, theta)?;
            let st = steiner::symmetrize(&k)?;
            emit(&output, &formats::render_steiner(&k, st.polygon(), format)?)
        }
        Command::Appendix { grid, format, output } => {
            let reports = criteria::verify_appendix(grid)?;
            emit(&output, &formats::render_appendix(&reports, format)?)
        }
        Command::Classic { shape } => {
            let covers = match shape {
                ClassicShape::Triangle { a, b, c } => TriangleSpec::new(a, b, c)?.covers(),
                ClassicShape::Parallelogram { a, b, gamma } => {
                    ParallelogramSpec::new(a, b, gamma)?.covers()
                }
                ClassicShape::Ellipsoid { semi_axes } => EllipsoidSpec::new(semi_axes)?.covers(),
            };
            println!("{covers}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
