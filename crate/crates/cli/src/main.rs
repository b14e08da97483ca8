//! `rampoly`: compute, export, verify and benchmark Ramanujan's polynomials
//! and the number triangles around them.
//!
//! Data goes to standard output (or `--out`), diagnostics to standard error.
//! Exit codes: 0 success, 1 a verification failed or I/O broke, 2 bad usage.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use rampoly_core::partitions::{enumerate_pi, enumerate_pi0, DEFAULT_CAP};
use rampoly_core::ramanujan::{r_poly, RRoute};
use rampoly_core::series::{gm_series, lhs_series, tree_series};
use rampoly_core::suite::{self, Suite, SuiteConfig};
use rampoly_core::triangles::{assoc_stirling2, AssocRoute, Family, TriangleTable};
use rampoly_core::{BiPoly, Error};

const TRIANGLE_CAP: usize = 500;

#[derive(Parser)]
#[command(
    name = "rampoly",
    version,
    about = "Exact Ramanujan polynomials and allied numbers"
)]
struct Cli {
    /// Write data to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print rows 0..=max-n of a number triangle.
    Triangle {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = TriangleFormat::Csv)]
        format: TriangleFormat,
        /// Raise the row limit (default 500).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Print R_m(u, x).
    Rpoly {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = RouteArg::Triple)]
        route: RouteArg,
        #[arg(long, value_enum, default_value_t = PolyFormat::Json)]
        format: PolyFormat,
    },
    /// Print a truncated series as JSON.
    Series {
        #[arg(long, value_enum)]
        kind: SeriesKind,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = SeriesFormat::Json)]
        format: SeriesFormat,
    },
    /// Enumerate Pi(m, k, i), or Pi0(m, k+1, i) with --pi0.
    Partitions {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        pi0: bool,
        #[arg(long, value_enum, default_value_t = PartitionFormat::Count)]
        format: PartitionFormat,
        /// Raise the ground-set limit (default 12).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Check identities; one report line per instance.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long)]
        max_m: usize,
        /// Truncation order for the series checks.
        #[arg(long, default_value_t = 16)]
        order: usize,
        /// Raise the ground-set limit for enumerations (default 12).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Median wall-clock time of alternative computation routes.
    Bench {
        #[arg(long, value_enum)]
        target: BenchTarget,
        /// m for r_routes, largest row n for triangles.
        #[arg(long)]
        max_m: usize,
        #[arg(long, default_value_t = 5)]
        repetitions: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Stirling2,
    #[value(alias = "assoc_stirling2")]
    Assoc,
    Eulerian2,
}

#[derive(Clone, Copy, ValueEnum)]
enum TriangleFormat {
    Csv,
    Json,
    Bfile,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Triple,
    Q,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFormat {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    Tree,
    Lhs,
    Gm,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesFormat {
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PartitionFormat {
    Count,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Ramanujan,
    Series,
    Partitions,
    Triangles,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum BenchTarget {
    RRoutes,
    Triangles,
}

enum Failure {
    Usage(String),
    Runtime(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Negative { .. } | Error::OutOfRange { .. } | Error::CapExceeded { .. } => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Runtime(other.into()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e)
    }
}

/// Output of a command: the data and whether every check passed.
struct Outcome {
    data: String,
    ok: bool,
}

impl Outcome {
    fn data(data: String) -> Self {
        Outcome { data, ok: true }
    }
}

fn cap_or(cap: Option<usize>, default: usize) -> usize {
    match cap {
        Some(c) => {
            if c != default {
                eprintln!("warning: limit overridden: {c} (default {default})");
            }
            c
        }
        None => default,
    }
}

fn poly_csv(p: &BiPoly) -> String {
    let mut out = String::new();
    for row in p.rows() {
        let line: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

fn median(mut samples: Vec<u128>) -> u128 {
    samples.sort_unstable();
    let n = samples.len();
    if n % 2 == 1 {
        samples[n / 2]
    } else {
        (samples[n / 2 - 1] + samples[n / 2]) / 2
    }
}

fn time_it(reps: usize, mut f: impl FnMut()) -> u128 {
    let samples = (0..reps)
        .map(|_| {
            let start = Instant::now();
            f();
            start.elapsed().as_nanos()
        })
        .collect();
    median(samples)
}

fn execute(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Triangle {
            family,
            max_n,
            format,
            cap,
        } => {
            let cap = cap_or(cap, TRIANGLE_CAP);
            if max_n > cap {
                return Err(Failure::Usage(format!(
                    "--max-n {max_n} exceeds the limit {cap}"
                )));
            }
            let family = match family {
                FamilyArg::Stirling2 => Family::Stirling2,
                FamilyArg::Assoc => Family::AssocStirling2,
                FamilyArg::Eulerian2 => Family::Eulerian2,
            };
            let table = TriangleTable::build(family, max_n);
            Ok(Outcome::data(match format {
                TriangleFormat::Csv => table.to_csv(),
                TriangleFormat::Bfile => table.to_bfile(),
                TriangleFormat::Json => format!("{}\n", table.to_json()),
            }))
        }
        Command::Rpoly { m, route, format } => {
            let route = match route {
                RouteArg::Triple => RRoute::TripleSum,
                RouteArg::Q => RRoute::QRoute,
            };
            let p = r_poly(m as i64, route)?;
            Ok(Outcome::data(match format {
                PolyFormat::Json => format!("{}\n", p.to_json()),
                PolyFormat::Csv => poly_csv(&p),
                PolyFormat::Pretty => format!("{p}\n"),
            }))
        }
        Command::Series {
            kind,
            m,
            order,
            format: SeriesFormat::Json,
        } => {
            let json = match kind {
                SeriesKind::Tree => tree_series(order).to_json(),
                SeriesKind::Lhs => lhs_series(m as i64, order)?.to_json(),
                SeriesKind::Gm => gm_series(m as i64, order)?.to_json(),
            };
            Ok(Outcome::data(format!("{json}\n")))
        }
        Command::Partitions {
            m,
            k,
            i,
            pi0,
            format,
            cap,
        } => {
            let cap = cap_or(cap, DEFAULT_CAP);
            let list = if pi0 {
                enumerate_pi0(m, k + 1, i, cap)?
            } else {
                enumerate_pi(m, k, i, cap)?
            };
            Ok(Outcome::data(match format {
                PartitionFormat::Count => format!("{}\n", list.len()),
                PartitionFormat::Json => format!(
                    "{}\n",
                    serde_json::to_string(&list).context("serializing partitions")?
                ),
            }))
        }
        Command::Verify {
            suite,
            max_m,
            order,
            cap,
        } => {
            let suite = match suite {
                SuiteArg::All => Suite::All,
                SuiteArg::Ramanujan => Suite::Ramanujan,
                SuiteArg::Series => Suite::Series,
                SuiteArg::Partitions => Suite::Partitions,
                SuiteArg::Triangles => Suite::Triangles,
            };
            let cfg = SuiteConfig {
                max_m,
                order,
                cap: cap_or(cap, DEFAULT_CAP),
            };
            let reports = suite::run(suite, cfg)?;
            let failed = reports.iter().filter(|r| !r.passed()).count();
            let mut data = String::new();
            for r in &reports {
                writeln!(data, "{r}").expect("writing to a String");
            }
            eprintln!("{} checks, {failed} failed", reports.len());
            Ok(Outcome {
                data,
                ok: failed == 0,
            })
        }
        Command::Bench {
            target,
            max_m,
            repetitions,
        } => {
            if repetitions == 0 {
                return Err(Failure::Usage("--repetitions must be at least 1".into()));
            }
            let mut data = String::from("target,route,size,repetitions,median_ns\n");
            match target {
                BenchTarget::RRoutes => {
                    for route in [RRoute::TripleSum, RRoute::QRoute] {
                        let t = time_it(repetitions, || {
                            r_poly(max_m as i64, route).expect("m is nonnegative");
                        });
                        writeln!(data, "r_routes,{},{max_m},{repetitions},{t}", route.name())
                            .expect("writing to a String");
                    }
                }
                BenchTarget::Triangles => {
                    let n = max_m;
                    let t = time_it(repetitions, || {
                        TriangleTable::build(Family::AssocStirling2, n);
                    });
                    writeln!(data, "triangles,recurrence,{n},{repetitions},{t}")
                        .expect("writing to a String");
                    let t = time_it(repetitions, || {
                        for row in 0..=n as i64 {
                            for k in 0..=row / 2 {
                                assoc_stirling2(row, k, AssocRoute::InclusionExclusion)
                                    .expect("indices are nonnegative");
                            }
                        }
                    });
                    writeln!(data, "triangles,inclusion_exclusion,{n},{repetitions},{t}")
                        .expect("writing to a String");
                }
            }
            Ok(Outcome::data(data))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(outcome) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &outcome.data)
                    .with_context(|| format!("writing {}", path.display())),
                None => {
                    print!("{}", outcome.data);
                    Ok(())
                }
            };
            match written {
                Err(e) => {
                    eprintln!("error: {e:#}");
                    ExitCode::from(1)
                }
                Ok(()) if outcome.ok => ExitCode::SUCCESS,
                Ok(()) => ExitCode::from(1),
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
