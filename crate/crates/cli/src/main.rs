mod args;
mod rows;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::Parser;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use nct_core::addcomb::{max_extremal_with_limits, ExtremalProblem, Variant};
use nct_core::arith::is_prime;
use nct_core::bounds::{
    best_family, build_model, classify_degenerate_cubes, classify_restricted_triples,
    gamma_bracket_with_limits, min_cover_with_limits, SearchLimits,
};
use nct_core::coverage::primitive_catalog;
use nct_core::families::{build_family, verify_family, Provenance};
use nct_core::Group;

use args::{Cli, Command, CubeVariant, Format, Parity, Range, Step, SumVariant, TripleKind};
use rows::{CatalogRow, ClassifyRow, ExtremalRow, GammaRow, LimitsRow, VerifyRow};

const SCHEMA_LINE: &str = "#nct-schema=1";

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] nct_core::Error),
    #[error("io: {0}")]
    Io(#[from] io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(nct_core::Error::Infeasible { .. }) => 3,
            _ => 1,
        }
    }
}

/// Flags raised while producing rows.
#[derive(Debug, Default, Clone, Copy)]
struct Status {
    failed: bool,
    uncertified: bool,
}

impl Status {
    fn merge(self, o: Status) -> Status {
        Status {
            failed: self.failed || o.failed,
            uncertified: self.uncertified || o.uncertified,
        }
    }

    fn exit_code(self) -> u8 {
        if self.failed {
            2
        } else if self.uncertified {
            4
        } else {
            0
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(status) => ExitCode::from(status.exit_code()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn degrees(r: &Range) -> Result<Vec<u32>, CliError> {
    let (lo, hi) = match (r.n, r.min, r.max) {
        (Some(n), _, _) => (n, n),
        (None, Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(CliError::Usage("give --n, or both --min and --max".into())),
    };
    let keep = |n: u32| match r.parity {
        Parity::All => true,
        Parity::Odd => n % 2 == 1,
        Parity::Even => n % 2 == 0,
    };
    let out: Vec<u32> = match r.step {
        Step::Every(k) => (lo..=hi).step_by(k as usize).filter(|&n| keep(n)).collect(),
        Step::TwicePrime => (lo..=hi)
            .filter(|&n| n % 2 == 0 && is_prime(u64::from(n / 2)) && keep(n))
            .collect(),
        Step::Prime => (lo..=hi)
            .filter(|&n| is_prime(n.into()) && keep(n))
            .collect(),
        Step::PowerOfTwo => (lo..=hi)
            .filter(|&n| n.is_power_of_two() && keep(n))
            .collect(),
    };
    if out.is_empty() {
        return Err(CliError::Usage(format!(
            "no degrees selected in [{lo}, {hi}]"
        )));
    }
    Ok(out)
}

fn run(cli: &Cli) -> Result<Status, CliError> {
    let c = &cli.common;
    if c.parallel == 0 {
        return Err(CliError::Usage("--parallel must be positive".into()));
    }
    let limits = match c.budget {
        Some(b) if !(b > 0.0 && b.is_finite()) => {
            return Err(CliError::Usage(
                "--budget must be a positive number of seconds".into(),
            ))
        }
        Some(b) => SearchLimits {
            deadline: Some(Instant::now() + Duration::from_secs_f64(b)),
        },
        None => SearchLimits::default(),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(c.parallel)
        .build()?;
    let sink: Box<dyn Write> = match &c.out {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    };
    let mut sink = BufWriter::new(sink);
    let emit = Emitter { format: c.format };

    // Evaluates `f` on every degree on the pool, keeping input order.
    fn sweep<R: Send>(
        pool: &rayon::ThreadPool,
        ns: &[u32],
        f: impl Fn(u32) -> Result<(Vec<R>, Status), CliError> + Sync + Send,
    ) -> Result<(Vec<R>, Status), CliError> {
        let parts: Vec<_> = pool.install(|| ns.par_iter().map(|&n| f(n)).collect());
        let mut rows = Vec::new();
        let mut status = Status::default();
        for p in parts {
            let (r, s) = p?;
            rows.extend(r);
            status = status.merge(s);
        }
        Ok((rows, status))
    }

    let status = match &cli.command {
        Command::Gamma { range, group } => {
            let g: Group = (*group).into();
            let (rows, s) = sweep(&pool, &degrees(range)?, |n| {
                let b = gamma_bracket_with_limits(n, g, limits)?;
                let st = Status {
                    failed: !b.consistent,
                    uncertified: !b.certified,
                };
                Ok((vec![GammaRow::from(&b)], st))
            })?;
            emit.write(&mut sink, &rows)?;
            s
        }
        Command::Verify {
            range,
            group,
            provenance,
        } => {
            let g: Group = (*group).into();
            let wanted: Option<Provenance> = provenance
                .as_deref()
                .map(str::parse)
                .transpose()
                .map_err(|e: nct_core::Error| CliError::Usage(e.to_string()))?;
            let (rows, s) = sweep(&pool, &degrees(range)?, |n| {
                let mut out = Vec::new();
                let mut st = Status::default();
                let provs: Vec<Provenance> = match wanted {
                    Some(p) => vec![p],
                    None => Provenance::BUILT_IN
                        .into_iter()
                        .filter(|p| p.violated_hypothesis(n, g).is_none())
                        .collect(),
                };
                for p in provs {
                    let f = build_family(p, n, g)?;
                    let formula = p.size_formula(n, g)?;
                    let r = verify_family(&f);
                    let row = VerifyRow::new(&f, formula, &r);
                    st.failed |= !row.covered || !row.formula_holds;
                    out.push(row);
                }
                Ok((out, st))
            })?;
            emit.write(&mut sink, &rows)?;
            s
        }
        Command::Catalog { range } => {
            let (rows, s) = sweep(&pool, &degrees(range)?, |n| {
                let cat = primitive_catalog(n);
                let rows = cat
                    .entries
                    .iter()
                    .map(|e| CatalogRow::new(&cat, e))
                    .collect();
                Ok((rows, Status::default()))
            })?;
            emit.write(&mut sink, &rows)?;
            s
        }
        Command::Sumfree { range, variant } => {
            let v = match variant {
                SumVariant::Coprime => Variant::CoprimeSumFree,
                SumVariant::Restricted => Variant::RestrictedTripleFree,
            };
            let (rows, s) = extremal_sweep(&pool, &degrees(range)?, v, limits)?;
            emit.write(&mut sink, &rows)?;
            s
        }
        Command::Cubefree { range, variant } => {
            let v = match variant {
                CubeVariant::Coprime => Variant::CoprimeCubeFree,
                CubeVariant::Degenerate => Variant::DegenerateCubeFree,
                CubeVariant::DegenerateEven => Variant::DegenerateCubeEvenFree,
            };
            let (rows, s) = extremal_sweep(&pool, &degrees(range)?, v, limits)?;
            emit.write(&mut sink, &rows)?;
            s
        }
        Command::Triples { range, kind } => {
            let (rows, s) = sweep(&pool, &degrees(range)?, |n| {
                let r = match kind {
                    TripleKind::Triples => classify_restricted_triples(n)?,
                    TripleKind::Cubes => {
                        let g = if n % 2 == 1 {
                            Group::Symmetric
                        } else {
                            Group::Alternating
                        };
                        classify_degenerate_cubes(n, g)?
                    }
                };
                let row = ClassifyRow::from(&r);
                let st = Status {
                    failed: !row.within_ceiling,
                    uncertified: false,
                };
                Ok((vec![row], st))
            })?;
            emit.write(&mut sink, &rows)?;
            s
        }
        Command::Limits {
            range,
            group,
            upper_only,
        } => {
            let g: Group = (*group).into();
            let (rows, s) = sweep(&pool, &degrees(range)?, |n| {
                let (family, _) = best_family(n, g)?;
                let upper = family.len() as u64;
                let (lower, certified) = if *upper_only {
                    (None, true)
                } else {
                    let m = min_cover_with_limits(&build_model(n, g)?, limits)?;
                    (Some(m.lower_bound as u64), m.certified)
                };
                let row = LimitsRow {
                    n,
                    group: g.symbol(),
                    lower,
                    upper,
                    lower_ratio: lower.map(|l| l as f64 / f64::from(n)),
                    upper_ratio: upper as f64 / f64::from(n),
                    certified,
                    upper_provenance: family.provenance.tag(),
                };
                let st = Status {
                    failed: lower.is_some_and(|l| l > upper),
                    uncertified: !certified,
                };
                Ok((vec![row], st))
            })?;
            emit.write(&mut sink, &rows)?;
            s
        }
    };
    sink.flush()?;
    Ok(status)
}

fn extremal_sweep(
    pool: &rayon::ThreadPool,
    ns: &[u32],
    v: Variant,
    limits: SearchLimits,
) -> Result<(Vec<ExtremalRow>, Status), CliError> {
    let parts: Vec<_> = pool.install(|| {
        ns.par_iter()
            .map(|&n| max_extremal_with_limits(&ExtremalProblem::new(v, n), limits))
            .collect()
    });
    let mut rows = Vec::new();
    let mut status = Status::default();
    for p in parts {
        let r = p?;
        status.uncertified |= !r.certified;
        rows.push(ExtremalRow::from(&r));
    }
    Ok((rows, status))
}

struct Emitter {
    format: Format,
}

impl Emitter {
    fn write<W: Write, R: Serialize>(&self, out: &mut W, rows: &[R]) -> Result<(), CliError> {
        match self.format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, rows)?;
                writeln!(out)?;
            }
            Format::Csv => {
                writeln!(out, "{SCHEMA_LINE}")?;
                let mut w = csv::Writer::from_writer(&mut *out);
                for r in rows {
                    w.serialize(r)?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }
}
