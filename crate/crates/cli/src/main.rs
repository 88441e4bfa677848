//! `edlab`: exact distances, the approximation pipeline, the sampling
//! estimator and hardness instances from the command line.
//!
//! Results go to stdout as `key=value` or whitespace-separated lines;
//! summaries meant for people go to stderr.

mod bench;
mod suite;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use edlab::approx::{approximate_edit_distance, sample_estimate, ApproxOptions};
use edlab::graph::io::{read_edge_list, read_weighted};
use edlab::hardness::{
    build_reduction, dgt_graph, is_dgt_meta, parse_bundle, recover_ell, spectrum_check,
    verify_bundle, verify_dgt_bundle, write_bundle, write_dgt_bundle, GRAPH_FILE, META_FILE,
};
use edlab::oracles::{
    edit_distance_exact_with, hom_edit_distance_exact_with, Caps, ForbiddenFamily,
};
use edlab::rational::{format_rational, parse_rational, to_f64, Rational};
use edlab::regularity::{e_regular_pair_of_partitions, ParameterSchedule, Preset};
use edlab::{Error, Graph};

#[derive(Parser)]
#[command(
    name = "edlab",
    version,
    about = "Edge-deletion distance to monotone graph properties"
)]
struct Cli {
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true, env = "EDLAB_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact minimum deletions E' and E = E'/n².
    Exact {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        family: PathBuf,
        /// Also print the deleted edges.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Exact homomorphism distance of a weighted complete graph.
    HomDist {
        #[arg(short, long)]
        weights: PathBuf,
        #[arg(short, long)]
        family: PathBuf,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Partition, reduce and solve: an ε-approximation of E.
    Approx {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        family: PathBuf,
        #[arg(long, default_value = "1/10")]
        eps: String,
        #[command(flatten)]
        schedule: ScheduleArgs,
        /// Round reduced weights down to multiples of ε.
        #[arg(long)]
        snap: bool,
    },
    /// Exact distances of random induced subgraphs.
    Sample {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        family: PathBuf,
        #[arg(short, long)]
        d: usize,
        #[arg(short, long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Regular pair of partitions; prints `vertex outer inner` lines.
    Regularity {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(long, default_value = "1/10")]
        eps: String,
        #[command(flatten)]
        schedule: ScheduleArgs,
    },
    /// Pseudo-random graph on GF(q)² with k directions.
    GenDgt {
        #[arg(short, long)]
        q: usize,
        #[arg(short, long)]
        k: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Reduction instance bundle from a source graph.
    GenReduction {
        #[arg(short = 'F', long)]
        source: PathBuf,
        #[arg(short, long)]
        r: usize,
        #[arg(short, long)]
        b: usize,
        #[arg(long, default_value = "3/20")]
        mu: String,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Recover the source distance from an r-partite distance value.
    Recover {
        #[arg(short = 'L', long = "value")]
        value: String,
        #[arg(long)]
        bundle: PathBuf,
    },
    /// Re-derive a bundle's invariants, or run the built-in invariant suite.
    Verify {
        #[arg(long, conflicts_with = "suite", required_unless_present = "suite")]
        bundle: Option<PathBuf>,
        #[arg(long, value_parser = ["invariants"])]
        suite: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Timing tables for the main operations.
    Bench {
        /// Smaller sizes, for smoke runs.
        #[arg(long)]
        quick: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct CapArgs {
    /// Host order cap for the exact oracle.
    #[arg(long)]
    exact_n: Option<usize>,
    /// Order cap for weighted complete graphs.
    #[arg(long)]
    hom_k: Option<usize>,
}

impl CapArgs {
    fn apply(&self, mut caps: Caps) -> Caps {
        if let Some(n) = self.exact_n {
            caps.exact_n = n;
            caps.single_pattern_n = caps.single_pattern_n.max(n);
        }
        if let Some(k) = self.hom_k {
            caps.hom_k = k;
        }
        caps
    }
}

#[derive(Args)]
struct ScheduleArgs {
    /// `desk`, `constant:c`, `pipeline` or `pipeline:γ`.
    #[arg(long, default_value = "desk")]
    schedule: String,
    /// Order of the starting equipartition (default: ⌈1/ε⌉ for approx, 2 otherwise).
    #[arg(short, long)]
    m: Option<usize>,
    #[arg(long)]
    floor: Option<usize>,
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long)]
    max_order: Option<usize>,
}

impl ScheduleArgs {
    fn build(&self, eps: Rational, default_m: usize) -> Result<ParameterSchedule, Error> {
        let mut s = ParameterSchedule::desk(self.m.unwrap_or(default_m))
            .with_preset(self.schedule.parse::<Preset>()?);
        s.eps = eps;
        if let Some(f) = self.floor {
            s.floor = f;
        }
        if let Some(c) = self.cap {
            s.cap = c;
        }
        s.max_order = self.max_order;
        Ok(s)
    }
}

fn read_text(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Error> {
    read_edge_list(&read_text(path)?)
}

fn read_family(path: &Path) -> Result<ForbiddenFamily, Error> {
    ForbiddenFamily::from_json(&read_text(path)?)
}

fn run(cli: Cli) -> Result<bool, Error> {
    if let Some(t) = cli.threads {
        edlab::configure_threads(t);
    }
    match cli.command {
        Command::Exact {
            graph,
            family,
            witness,
            caps,
        } => {
            let g = read_graph(&graph)?;
            let d =
                edit_distance_exact_with(&g, &read_family(&family)?, &caps.apply(Caps::default()))?;
            println!("E'={} E={}/{}", d.raw, d.raw, d.n * d.n);
            if witness {
                for (u, v) in &d.witness {
                    println!("{u} {v}");
                }
            }
        }
        Command::HomDist {
            weights,
            family,
            caps,
        } => {
            let w = read_weighted(&read_text(&weights)?)?;
            let h = hom_edit_distance_exact_with(
                &w,
                &read_family(&family)?,
                &caps.apply(Caps::default()),
            )?;
            println!(
                "H'={} H={}",
                format_rational(&h.raw),
                format_rational(&h.normalized)
            );
            for (i, j) in &h.witness {
                println!("{i} {j}");
            }
        }
        Command::Approx {
            graph,
            family,
            eps,
            schedule,
            snap,
        } => {
            let eps = parse_rational(&eps)?;
            let m = (Rational::from_integer(1) / eps).ceil().to_integer().max(2) as usize;
            let mut opts = ApproxOptions::new(schedule.build(eps, m)?);
            opts.snap = snap;
            let report = approximate_edit_distance(
                &read_graph(&graph)?,
                &read_family(&family)?,
                eps,
                &opts,
            )?;
            print!("{}", report.to_text());
            if !report.certified {
                eprintln!("warning: partition not certified, estimate is best effort");
            }
        }
        Command::Sample {
            graph,
            family,
            d,
            trials,
            seed,
            caps,
        } => {
            let g = read_graph(&graph)?;
            let values = sample_estimate(
                &g,
                &read_family(&family)?,
                d,
                trials,
                seed,
                &caps.apply(Caps::default()),
            )?;
            for (t, v) in values.iter().enumerate() {
                println!("{t} {}", format_rational(v));
            }
            let mean = values.iter().map(to_f64).sum::<f64>() / values.len().max(1) as f64;
            eprintln!("{trials} trials, d={d}, mean {mean:.6}");
        }
        Command::Regularity {
            graph,
            eps,
            schedule,
        } => {
            let g = read_graph(&graph)?;
            let run = e_regular_pair_of_partitions(&g, &schedule.build(parse_rational(&eps)?, 2)?)?;
            print!("{}", run.pair.dump());
            eprint!("{}", run.diagnostics());
        }
        Command::GenDgt { q, k, out } => {
            let d = dgt_graph(q, k)?;
            write_dgt_bundle(&d, &out)?;
            println!("n={} degree={}", d.graph.n(), d.degree());
            if d.graph.n() <= edlab::hardness::SPECTRUM_CAP {
                let s = spectrum_check(&d)?;
                println!("lambda={:.6} two_valued={}", s.lambda, s.two_valued);
            }
        }
        Command::GenReduction {
            source,
            r,
            b,
            mu,
            out,
        } => {
            let inst = build_reduction(&read_graph(&source)?, r, b, parse_rational(&mu)?)?;
            write_bundle(&inst, &out)?;
            println!(
                "q={} k={} n={} mu_eff={}",
                inst.q,
                inst.k,
                inst.n(),
                format_rational(&inst.mu_eff)
            );
            match inst.planted_ell {
                Some(l) => println!("planted_ell={l}"),
                None => println!("planted_ell=unknown"),
            }
        }
        Command::Recover { value, bundle } => {
            let inst = parse_bundle(
                &read_text(&bundle.join(GRAPH_FILE))?,
                &read_text(&bundle.join(META_FILE))?,
            )?;
            let rec = recover_ell(parse_rational(&value)?, &inst)?;
            println!("ell={} tie={}", rec.ell, rec.tie);
        }
        Command::Verify {
            bundle,
            suite,
            seed,
        } => {
            if let Some(dir) = bundle {
                let graph = read_text(&dir.join(GRAPH_FILE))?;
                let meta = read_text(&dir.join(META_FILE))?;
                let rep = if is_dgt_meta(&meta) {
                    verify_dgt_bundle(&graph, &meta)?
                } else {
                    verify_bundle(&parse_bundle(&graph, &meta)?)?
                };
                print!("{rep}");
                return Ok(rep.passes());
            }
            debug_assert_eq!(suite.as_deref(), Some("invariants"));
            return Ok(suite::run(seed));
        }
        Command::Bench { quick, seed } => bench::run(quick, seed)?,
    }
    Ok(true)
}

/// 1 for usage and input errors, 2 for broken contracts or preconditions,
/// 3 for size caps, 4 when a verification fails.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Precondition(_) | Error::Contract(_) | Error::Infeasible(_) => 2,
        Error::SizeLimit { .. } => 3,
        Error::Verification(_) => 4,
        Error::Parse(_) | Error::Io(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(4),
        Err(e) => {
            eprintln!("edlab: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
