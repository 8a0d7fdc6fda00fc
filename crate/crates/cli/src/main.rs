//! Command-line front end: enumeration, coloring censuses and verification suites.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tricolor::coloring::{
    census, census_dwbc, enumerate_colorings, enumerate_dwbc_colorings, BoundaryCondition,
    ColoringCensus, FaceWeightParams, GridColoring,
};
use tricolor::sixvertex::enumerate_dwbc_states;
use tricolor::verify::{run_suite, Suite, VerifyConfig};
use tricolor::{Color, Error};

#[derive(Parser)]
#[command(
    name = "tricolor",
    version,
    about = "Three-coloring and six-vertex lattice workbench"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every state of a model with the count.
    Enumerate {
        #[arg(long, value_enum)]
        model: Model,
        /// Vertices per side of a DWBC lattice.
        #[arg(long)]
        n: Option<usize>,
        /// Face rows of a coloring grid.
        #[arg(long)]
        rows: Option<usize>,
        /// Face columns of a coloring grid.
        #[arg(long)]
        cols: Option<usize>,
        #[arg(long, value_enum, default_value_t = Bc::Free)]
        bc: Bc,
        /// Top-left face color of a DWBC coloring; all three when omitted.
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..3))]
        corner: Option<u8>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite and write its JSON report.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Parameter draws per suite; suite defaults when omitted.
        #[arg(long)]
        samples: Option<usize>,
        /// `key = value` file with tolerances, domains and series settings.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count colorings by color content and evaluate the generating function.
    Census {
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        cols: Option<usize>,
        /// Vertices per side, for DWBC.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Bc::Free)]
        bc: Bc,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..3))]
        corner: Option<u8>,
        #[arg(long, default_value_t = 1.0)]
        z0: f64,
        #[arg(long, default_value_t = 1.0)]
        z1: f64,
        #[arg(long, default_value_t = 1.0)]
        z2: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Sixvertex,
    Coloring,
}

#[derive(Clone, Copy, ValueEnum)]
enum Bc {
    Free,
    Toroidal,
    Dwbc,
}

impl From<Bc> for BoundaryCondition {
    fn from(b: Bc) -> Self {
        match b {
            Bc::Free => BoundaryCondition::Free,
            Bc::Toroidal => BoundaryCondition::Toroidal,
            Bc::Dwbc => BoundaryCondition::Dwbc,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Theta,
    Ybe,
    Recursion6v,
    Functional6v,
    Recursion3c,
    Functional3c,
    Appendix,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Theta => Suite::Theta,
            SuiteArg::Ybe => Suite::Ybe,
            SuiteArg::Recursion6v => Suite::Recursion6v,
            SuiteArg::Functional6v => Suite::Functional6v,
            SuiteArg::Recursion3c => Suite::Recursion3c,
            SuiteArg::Functional3c => Suite::Functional3c,
            SuiteArg::Appendix => Suite::Appendix,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Failure of a command: usage and configuration problems exit 2, failed identities exit 1.
enum Failure {
    Usage(String),
    Identities(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Identities(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Enumerate {
            model,
            n,
            rows,
            cols,
            bc,
            corner,
            out,
        } => {
            let value = enumerate(model, n, rows, cols, bc.into(), corner)?;
            emit(
                out,
                &format!("{}\n", serde_json::to_string_pretty(&value).expect("json")),
            )
        }
        Command::Verify {
            suite,
            seed,
            samples,
            config,
            out,
        } => {
            let cfg = match config {
                Some(path) => VerifyConfig::load(&path)?,
                None => VerifyConfig::default(),
            };
            let report = run_suite(suite.into(), seed, samples, &cfg)?;
            emit(out, &format!("{}\n", report.to_json()))?;
            if report.pass {
                Ok(())
            } else {
                let names: Vec<String> = report
                    .failing()
                    .map(|c| c.identity.clone())
                    .collect::<std::collections::BTreeSet<_>>()
                    .into_iter()
                    .collect();
                Err(Failure::Identities(format!(
                    "{} of {} cases failed ({} unexpected): {}",
                    report.failures,
                    report.cases.len(),
                    report.unexpected_failures,
                    names.join(", ")
                )))
            }
        }
        Command::Census {
            rows,
            cols,
            n,
            bc,
            corner,
            z0,
            z1,
            z2,
            format,
            out,
        } => {
            let c = run_census(rows, cols, n, bc.into(), corner)?;
            let z = FaceWeightParams::real(z0, z1, z2);
            let text = match format {
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&census_json(&c, corner, &z)).expect("json")
                ),
                Format::Csv => census_csv(&c, &z),
            };
            emit(out, &text)
        }
    }
}

fn emit(out: Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(&path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(e.to_string())),
    }
}

fn required(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{flag} is required here")))
}

/// Vertices per side of a DWBC lattice from `--n`, or from a square `--rows`/`--cols` face grid.
fn dwbc_size(n: Option<usize>, rows: Option<usize>, cols: Option<usize>) -> Result<usize, Failure> {
    match (n, rows, cols) {
        (Some(n), _, _) => Ok(n),
        (None, Some(r), Some(c)) if r == c && r >= 2 => Ok(r - 1),
        _ => Err(Failure::Usage(
            "DWBC needs --n, or equal --rows and --cols of at least 2".into(),
        )),
    }
}

fn matrices(colorings: &[GridColoring]) -> Value {
    Value::from(
        colorings
            .iter()
            .map(|g| json!(g.to_matrix()))
            .collect::<Vec<_>>(),
    )
}

fn enumerate(
    model: Model,
    n: Option<usize>,
    rows: Option<usize>,
    cols: Option<usize>,
    bc: BoundaryCondition,
    corner: Option<u8>,
) -> Result<Value, Failure> {
    match model {
        Model::Sixvertex => {
            let n = required(n, "n")?;
            let states = enumerate_dwbc_states(n)?;
            let kinds: Vec<_> = states.iter().map(|s| s.kind_matrix()).collect();
            Ok(json!({ "model": "sixvertex", "n": n, "count": states.len(), "states": kinds }))
        }
        Model::Coloring if bc == BoundaryCondition::Dwbc => {
            let n = dwbc_size(n, rows, cols)?;
            let corners: Vec<Color> = match corner {
                Some(c) => vec![Color::from_int(c as i64)],
                None => Color::ALL.to_vec(),
            };
            let mut all = Vec::new();
            for c in corners {
                all.extend(enumerate_dwbc_colorings(n, c)?);
            }
            Ok(json!({
                "model": "coloring", "bc": bc, "n": n, "rows": n + 1, "cols": n + 1,
                "corner": corner, "count": all.len(), "colorings": matrices(&all),
            }))
        }
        Model::Coloring => {
            if corner.is_some() {
                return Err(Failure::Usage("--corner applies only to --bc dwbc".into()));
            }
            let (rows, cols) = (required(rows, "rows")?, required(cols, "cols")?);
            let all = enumerate_colorings(rows, cols, bc)?;
            Ok(json!({
                "model": "coloring", "bc": bc, "rows": rows, "cols": cols,
                "count": all.len(), "colorings": matrices(&all),
            }))
        }
    }
}

fn run_census(
    rows: Option<usize>,
    cols: Option<usize>,
    n: Option<usize>,
    bc: BoundaryCondition,
    corner: Option<u8>,
) -> Result<ColoringCensus, Failure> {
    if bc == BoundaryCondition::Dwbc {
        let n = dwbc_size(n, rows, cols)?;
        return Ok(match corner {
            Some(c) => census_dwbc(n, Color::from_int(c as i64))?,
            None => census(n + 1, n + 1, bc)?,
        });
    }
    if corner.is_some() || n.is_some() {
        return Err(Failure::Usage(
            "--n and --corner apply only to --bc dwbc".into(),
        ));
    }
    Ok(census(
        required(rows, "rows")?,
        required(cols, "cols")?,
        bc,
    )?)
}

fn census_json(c: &ColoringCensus, corner: Option<u8>, z: &FaceWeightParams) -> Value {
    let gf = c.generating_function(z);
    json!({
        "rows": c.rows, "cols": c.cols, "bc": c.bc, "corner": corner,
        "total": c.total(), "entries": c.entries(),
        "z": z.z.map(|x| x.re),
        "generating_function": { "re": gf.re, "im": gf.im },
    })
}

fn census_csv(c: &ColoringCensus, z: &FaceWeightParams) -> String {
    let mut s = String::from("k0,k1,k2,count\n");
    for e in c.entries() {
        s.push_str(&format!("{},{},{},{}\n", e.k0, e.k1, e.k2, e.count));
    }
    let gf = c.generating_function(z);
    s.push_str(&format!(
        "# total = {}\n# generating_function = {}\n",
        c.total(),
        gf.re
    ));
    s
}
