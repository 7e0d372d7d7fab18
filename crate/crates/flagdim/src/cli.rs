//! `flagdim` command line: argument parsing, dispatch and exit codes.
//!
//! Exit codes: 0 success, 1 verification mismatch or internal failure,
//! 2 usage or domain error, 3 multiplicity ceiling exceeded.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use flagdim_core::classify::{
    enumerate_weights_with, verify_candidates_with, verify_theorem_with, ClassificationReport,
    Group,
};
use flagdim_core::fixedpoints::{fixed_subspace_dim_so, fixed_subspace_dim_su};
use flagdim_core::isospectral::{
    build_model, harmonic_dim, harmonic_fixed_dim, orbit_dim, stabilizer_dim_exact, Field,
};
use flagdim_core::multiplicity::DEFAULT_CEILING;
use flagdim_core::weyldim::dimension;
use flagdim_core::{DominantWeight, Error, Family};
use num_bigint::BigUint;
use num_rational::Rational64;
use rayon::prelude::*;
use serde_json::json;

use crate::cache::DimCache;
use crate::numeric::{flag_roundtrip, h2_iso_check};
use crate::report::{
    classification_json, classification_table, weight_json, weight_text, Format, Report,
    ReportEnvelope, Table,
};

pub const CEILING_ENV: &str = "FLAGDIM_DIM_CEILING";
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SAMPLES: usize = 100;

#[derive(Debug, Parser)]
#[command(
    name = "flagdim",
    version,
    about = "Minimal equivariant embeddings of flag manifolds"
)]
pub struct Cli {
    /// Emit the JSON report envelope.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV rows.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Write the report to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension of an irreducible representation.
    Dim {
        family: Family,
        rank: usize,
        /// Highest weight, comma separated.
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// Dominant weights with dimension at most BOUND.
    Enum {
        family: Family,
        rank: usize,
        bound: BigUint,
    },
    /// Weights below the isospectral bound with an H-fixed vector.
    Classify(ClassifyArgs),
    /// Candidate weights after the dimension bound and lattice filter.
    Candidates { family: Family, rank: usize },
    /// Dimension of the H-fixed subspace of V(weight).
    Fixdim {
        group: GroupKind,
        n: usize,
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// Stabilizer, orbit and roundtrip checks of the isospectral embedding.
    Embed {
        field: Field,
        /// Block sizes, comma separated.
        partition: String,
        /// Distinct eigenvalues with zero trace, comma separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        eigenvalues: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Harmonic polynomials on the sphere and their H-fixed parts.
    Harmonic {
        /// Largest degree listed.
        #[arg(default_value_t = 11)]
        max_k: usize,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    pub group: GroupKind,
    /// Matrix size; every n up to --max-n when omitted.
    pub n: Option<usize>,
    #[arg(long, default_value_t = 12)]
    pub max_n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GroupKind {
    #[value(name = "SO", alias = "so")]
    So,
    #[value(name = "SU", alias = "su")]
    Su,
}

impl GroupKind {
    fn group(self, n: usize) -> Group {
        match self {
            GroupKind::So => Group::So(n),
            GroupKind::Su => Group::Su(n),
        }
    }

    fn min_n(self) -> usize {
        match self {
            GroupKind::So => 3,
            GroupKind::Su => 2,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Core(#[from] Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(Error::Ceiling { .. }) => 3,
            CliError::Core(Error::Internal(_)) => 1,
            CliError::Core(_) => 2,
            CliError::Io { .. } => 1,
        }
    }
}

/// Outcome of a command: the report and whether its verification passed.
struct Outcome {
    report: Report,
    passed: bool,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome {
            report,
            passed: true,
        }
    }
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, CliError> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("invalid {what} entry '{p}' in '{s}'")))
        })
        .collect()
}

fn ceiling() -> Result<u64, CliError> {
    match std::env::var(CEILING_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{CEILING_ENV} must be a positive integer, got '{v}'"
            ))
        }),
        Err(_) => Ok(DEFAULT_CEILING),
    }
}

fn cmd_dim(family: Family, rank: usize, weight: &str) -> Result<Outcome, CliError> {
    let coords: Vec<i64> = parse_list(weight, "weight")?;
    let w = DominantWeight::new(family, rank, coords)?;
    let dim = dimension(&w);
    let mut env = ReportEnvelope::new("dim")
        .param("family", family.to_string())
        .param("rank", rank)
        .param("weight", weight_json(&w));
    env.results = json!({ "dim": dim.to_string() });
    let mut table = Table::new(&["family", "rank", "weight", "dim"]);
    table.row(&[
        family.to_string(),
        rank.to_string(),
        weight_text(&w),
        dim.to_string(),
    ]);
    Ok(Report {
        envelope: env,
        table,
    }
    .into())
}

fn cmd_enum(family: Family, rank: usize, bound: &BigUint) -> Result<Outcome, CliError> {
    let cache = DimCache::new();
    let weights = enumerate_weights_with(&cache, family, rank, bound)?;
    let mut env = ReportEnvelope::new("enum")
        .param("family", family.to_string())
        .param("rank", rank)
        .param("bound", bound.to_string());
    env.results = json!({
        "count": weights.len(),
        "weights": weights
            .iter()
            .map(|(w, d)| json!({ "weight": weight_json(w), "dim": d.to_string() }))
            .collect::<Vec<_>>(),
    });
    let mut table = Table::new(&["weight", "dim"]);
    for (w, d) in &weights {
        table.row(&[weight_text(w), d.to_string()]);
    }
    Ok(Report {
        envelope: env,
        table,
    }
    .into())
}

fn classification_outcome(
    command: &str,
    env: ReportEnvelope,
    reports: Vec<ClassificationReport>,
) -> Outcome {
    let passed = reports.iter().all(|r| r.verdict.passed());
    let mut env = env;
    env.results = if reports.len() == 1 {
        classification_json(&reports[0])
    } else {
        json!({
            "reports": reports.iter().map(classification_json).collect::<Vec<_>>(),
            "all_passed": passed,
        })
    };
    env.command = command.to_string();
    Outcome {
        report: Report {
            envelope: env,
            table: classification_table(&reports),
        },
        passed,
    }
}

fn cmd_classify(args: &ClassifyArgs) -> Result<Outcome, CliError> {
    let ceiling = ceiling()?;
    let min = args.group.min_n();
    let ns: Vec<usize> = match args.n {
        Some(n) if n > args.max_n => {
            return Err(CliError::Usage(format!(
                "n = {n} exceeds --max-n {}",
                args.max_n
            )))
        }
        Some(n) if n < min => {
            return Err(CliError::Usage(format!(
                "{} needs n >= {min}, got {n}",
                args.group.group(n)
            )))
        }
        Some(n) => vec![n],
        None => (min..=args.max_n).collect(),
    };
    if ns.is_empty() {
        return Err(CliError::Usage(format!("--max-n must be at least {min}")));
    }
    let cache = DimCache::new();
    let reports = ns
        .par_iter()
        .map(|&n| verify_theorem_with(&cache, args.group.group(n), ceiling))
        .collect::<Result<Vec<_>, _>>()?;
    let mut env = ReportEnvelope::new("classify")
        .param("group", format!("{:?}", args.group).to_uppercase())
        .param("max_n", args.max_n)
        .param("ceiling", ceiling);
    if let Some(n) = args.n {
        env = env.param("n", n);
    }
    Ok(classification_outcome("classify", env, reports))
}

fn cmd_candidates(family: Family, rank: usize) -> Result<Outcome, CliError> {
    let cache = DimCache::new();
    let rep = verify_candidates_with(&cache, family, rank)?;
    let env = ReportEnvelope::new("candidates")
        .param("family", family.to_string())
        .param("rank", rank);
    Ok(classification_outcome("candidates", env, vec![rep]))
}

fn cmd_fixdim(group: GroupKind, n: usize, weight: &str) -> Result<Outcome, CliError> {
    let coords: Vec<i64> = parse_list(weight, "weight")?;
    let ceiling = ceiling()?;
    let fixed = match group {
        GroupKind::So => fixed_subspace_dim_so(n, &coords, ceiling)?,
        GroupKind::Su => fixed_subspace_dim_su(n, &coords, ceiling)?,
    };
    let g = group.group(n);
    let mut env = ReportEnvelope::new("fixdim")
        .param("group", g.to_string())
        .param("weight", json!(coords))
        .param("ceiling", ceiling);
    env.results = json!({ "fixed_dim": fixed });
    let mut table = Table::new(&["group", "weight", "fixed_dim"]);
    table.row(&[g.to_string(), format!("({weight})"), fixed.to_string()]);
    Ok(Report {
        envelope: env,
        table,
    }
    .into())
}

fn cmd_embed(
    field: Field,
    partition: &str,
    eigenvalues: Option<&str>,
    samples: usize,
    seed: u64,
) -> Result<Outcome, CliError> {
    let blocks: Vec<usize> = parse_list(partition, "partition")?;
    let eigen: Option<Vec<Rational64>> = eigenvalues
        .map(|s| parse_list(s, "eigenvalue"))
        .transpose()?;
    if samples == 0 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    let model = build_model(field, &blocks, eigen)?;
    let stab = stabilizer_dim_exact(&model);
    let orbit = orbit_dim(&model)?;
    let rt = flag_roundtrip(&model, samples, seed);
    let eig_text: Vec<String> = model.eigenvalues().iter().map(|r| r.to_string()).collect();

    let mut env = ReportEnvelope::new("embed")
        .param("field", field.to_string())
        .param("partition", json!(blocks))
        .param("eigenvalues", json!(eig_text))
        .param("samples", samples);
    env.seed = Some(seed);
    env.results = json!({
        "n": model.n(),
        "group_dim": model.group_dim(),
        "stabilizer_dim": stab,
        "stabilizer_closed_form": model.stabilizer_closed_form(),
        "orbit_dim": orbit,
        "orbit_closed_form": model.orbit_closed_form(),
        "roundtrip": {
            "samples": rt.samples,
            "max_residual": rt.max_residual,
            "max_orthonormality_defect": rt.max_orthonormality,
            "worst_sample": rt.worst_sample,
            "passed": rt.passed,
        },
    });
    let mut table = Table::new(&["quantity", "value"]);
    table.row(&["field".to_string(), field.to_string()]);
    table.row(&["partition".to_string(), format!("({partition})")]);
    table.row(&[
        "eigenvalues".to_string(),
        format!("({})", eig_text.join(",")),
    ]);
    table.row(&["group_dim".to_string(), model.group_dim().to_string()]);
    table.row(&["stabilizer_dim".to_string(), stab.to_string()]);
    table.row(&["orbit_dim".to_string(), orbit.to_string()]);
    table.row(&[
        "roundtrip_max_residual".to_string(),
        format!("{:.3e}", rt.max_residual),
    ]);
    table.row(&[
        "roundtrip".to_string(),
        if rt.passed { "pass" } else { "fail" }.to_string(),
    ]);
    if !rt.passed {
        table.note(format!(
            "roundtrip failed at sample {} (seed {seed})",
            rt.worst_sample
        ));
    }
    Ok(Outcome {
        report: Report {
            envelope: env,
            table,
        },
        passed: rt.passed,
    })
}

fn cmd_harmonic(max_k: usize, samples: usize, seed: u64) -> Result<Outcome, CliError> {
    if samples == 0 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    let rows: Vec<(usize, usize, usize)> = (0..=max_k)
        .map(|k| (k, harmonic_dim(k), harmonic_fixed_dim(k)))
        .collect();
    let iso = h2_iso_check(samples, seed);
    let mut env = ReportEnvelope::new("harmonic")
        .param("max_k", max_k)
        .param("samples", samples);
    env.seed = Some(seed);
    env.results = json!({
        "degrees": rows
            .iter()
            .map(|&(k, d, f)| json!({ "k": k, "dim": d, "fixed_dim": f }))
            .collect::<Vec<_>>(),
        "h2_iso": {
            "samples": iso.samples,
            "max_residual": iso.max_residual,
            "worst_sample": iso.worst_sample,
            "passed": iso.passed,
        },
    });
    let mut table = Table::new(&["k", "dim", "fixed_dim"]);
    for (k, d, f) in &rows {
        table.row(&[k, d, f]);
    }
    table.note(format!(
        "h2 isomorphism: max residual {:.3e} over {samples} samples, {}",
        iso.max_residual,
        if iso.passed { "pass" } else { "fail" }
    ));
    Ok(Outcome {
        report: Report {
            envelope: env,
            table,
        },
        passed: iso.passed,
    })
}

fn dispatch(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Dim {
            family,
            rank,
            weight,
        } => cmd_dim(*family, *rank, weight),
        Command::Enum {
            family,
            rank,
            bound,
        } => cmd_enum(*family, *rank, bound),
        Command::Classify(args) => cmd_classify(args),
        Command::Candidates { family, rank } => cmd_candidates(*family, *rank),
        Command::Fixdim { group, n, weight } => cmd_fixdim(*group, *n, weight),
        Command::Embed {
            field,
            partition,
            eigenvalues,
            samples,
            seed,
        } => cmd_embed(*field, partition, eigenvalues.as_deref(), *samples, *seed),
        Command::Harmonic {
            max_k,
            samples,
            seed,
        } => cmd_harmonic(*max_k, *samples, *seed),
    }
}

/// Result of one invocation: exit code, stdout and stderr text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse `args` (program name first) and execute.
pub fn run<I, S>(args: I) -> RunOutput
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return RunOutput {
                code,
                stdout,
                stderr,
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> RunOutput {
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Text
    };
    let outcome = match dispatch(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            return RunOutput {
                code: e.exit_code(),
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let rendered = outcome.report.render(format);
    let code = if outcome.passed { 0 } else { 1 };
    match &cli.out {
        Some(path) => match std::fs::write(path, &rendered) {
            Ok(()) => RunOutput {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(source) => {
                let e = CliError::Io {
                    path: path.clone(),
                    source,
                };
                RunOutput {
                    code: e.exit_code(),
                    stdout: String::new(),
                    stderr: format!("error: {e}\n"),
                }
            }
        },
        None => RunOutput {
            code,
            stdout: rendered,
            stderr: String::new(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> RunOutput {
        run(std::iter::once("flagdim").chain(args.iter().copied()))
    }

    #[test]
    fn negative_weights_parse() {
        let out = run_args(&["dim", "D", "2", "4,-4"]);
        assert_eq!(out.code, 0, "{out:?}");
        assert!(out.stdout.contains("(4,-4)"));
    }

    #[test]
    fn bad_weight_is_usage_error() {
        assert_eq!(run_args(&["dim", "B", "3", "2,x,0"]).code, 2);
        assert_eq!(run_args(&["dim", "B", "3", "0,1,0"]).code, 2);
        assert_eq!(run_args(&["dim", "Q", "3", "1,0,0"]).code, 2);
    }

    #[test]
    fn rational_eigenvalues() {
        let out = run_args(&[
            "embed",
            "real",
            "1,2",
            "--eigenvalues",
            "-2,1",
            "--samples",
            "5",
        ]);
        assert_eq!(out.code, 0, "{out:?}");
        let out = run_args(&["embed", "real", "1,2", "--eigenvalues", "1,1"]);
        assert_eq!(out.code, 2);
    }

    #[test]
    fn classify_range_below_minimum() {
        assert_eq!(run_args(&["classify", "SO", "--max-n", "2"]).code, 2);
        assert_eq!(run_args(&["classify", "SO", "2"]).code, 2);
    }
}
