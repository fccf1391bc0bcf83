use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use circio::{
    export_csv, export_json, export_jsonl, load_goldens, orbit_cell, parallel_family,
    parallel_scan, verify_goldens, worker_count,
};
use circio_core::classify::classify_tuple;
use circio_core::enumerate::c1_tuple;
use circio_core::{
    adam_orbit, classify_pair, generate_a17c, probe_open_problems, theta_image, ConnectionSet,
    Family, ScanConfig, DEFAULT_BUDGET,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "circio", version, about = "Type-1 and Type-2 isomorphism of circulant graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Adam orbit of a connection set.
    Orbit { set: ConnectionSet },
    /// Apply θ_{n,m,t} and print the image, or "not circulant".
    Theta {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        t: u32,
        set: ConnectionSet,
    },
    /// Classify a pair or a tuple of connection sets.
    Classify {
        #[arg(required = true, num_args = 2..)]
        sets: Vec<ConnectionSet>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Build and classify the 511 triples of one order-54 family.
    EnumerateFamily {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// CSV output; the table is printed to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write one JSON record per row.
        #[arg(long)]
        jsonl: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Exhaustive Type-2 scan of one order.
    Scan {
        #[arg(long)]
        n: u32,
        /// JSON report with every pair and class.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        max_jumps: Option<usize>,
    },
    /// Run one of the constructive generators.
    Generate(GenerateArgs),
    /// Run the isomorphism oracle on the open-problem pairs.
    ProbeOpen {
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// JSON-lines output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute the transcribed table rows and report discrepancies.
    VerifyGoldens {
        /// JSON discrepancy report.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GenerateArgs {
    /// Order-8k pair for k and s.
    #[arg(long, num_args = 2, value_names = ["K", "S"])]
    a17c: Option<Vec<u32>>,
    /// The p sets of order base·p³.
    #[arg(long, num_args = 4, value_names = ["BASE", "P", "X", "Y"])]
    c1: Option<Vec<u32>>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    A,
    B,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::B => Family::B,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Orbit { set } => {
            for member in adam_orbit(&set).members() {
                println!("{member}");
            }
        }
        Command::Theta { m, t, set } => match theta_image(&set, m, t)? {
            Some(image) => println!("{image}"),
            None => println!("not circulant"),
        },
        Command::Classify { sets, budget } => {
            if sets.len() == 2 {
                let c = classify_pair(&sets[0], &sets[1], budget)?;
                println!("{}", c.verdict);
                println!("orbit {}", orbit_cell(&c.orbit));
            } else {
                let record = classify_tuple(&sets, budget)?;
                println!("{}", record.verdict);
                for p in &record.pairs {
                    println!("{} {} {}", record.members[p.i], record.members[p.j], p.verdict);
                }
            }
        }
        Command::EnumerateFamily {
            family,
            out,
            jsonl,
            budget,
        } => {
            let rows = parallel_family(family.into(), budget, worker_count()?)?;
            match &out {
                Some(path) => export_csv(&rows, path)?,
                None => circio::write_csv(&rows, std::io::stdout().lock())?,
            }
            if let Some(path) = &jsonl {
                export_jsonl(&rows, path)?;
            }
            let t2 = rows.iter().filter(|r| r.record.verdict.label() == "T2").count();
            eprintln!("family {}: {} rows, {} T2, {} T1", Family::from(family), rows.len(), t2, rows.len() - t2);
        }
        Command::Scan { n, out, max_jumps } => {
            let config = ScanConfig {
                max_jump_count: max_jumps,
                ..ScanConfig::default()
            };
            eprintln!("scanning order {n}");
            let report = parallel_scan(n, config, worker_count()?)?;
            let c = &report.counts;
            println!(
                "n={} raw_pairs={} pairs_mod_adam={} pairs_mod_complement={} tuples={} tuples_mod_adam={} tuples_mod_complement={}",
                report.n,
                c.raw_pairs,
                c.pairs_mod_adam,
                c.pairs_mod_complement,
                c.tuples,
                c.tuples_mod_adam,
                c.tuples_mod_complement
            );
            if let Some(path) = &out {
                export_json(&report, path)?;
            }
        }
        Command::Generate(args) => generate(args)?,
        Command::ProbeOpen { budget, out } => {
            let entries = probe_open_problems(budget)?;
            for e in &entries {
                println!("{} s={} {} {} {}", e.problem, e.s, e.left, e.right, e.verdict);
            }
            if let Some(path) = &out {
                export_jsonl(&entries, path)?;
            }
        }
        Command::VerifyGoldens { out, budget } => {
            let goldens = load_goldens()?;
            let workers = worker_count()?;
            let mut computed = parallel_family(Family::A, budget, workers)?;
            computed.extend(parallel_family(Family::B, budget, workers)?);
            let report = verify_goldens(&goldens, &computed);
            for d in &report.printed_mismatches {
                println!(
                    "warning: table {} row {} {}: printed {:?}, computed {:?}",
                    d.table, d.row, d.column, d.printed, d.computed
                );
            }
            for d in &report.verdict_mismatches {
                println!(
                    "MISMATCH: table {} row {} {}: printed {:?}, computed {:?}",
                    d.table, d.row, d.column, d.printed, d.computed
                );
            }
            println!(
                "{} rows checked, {} verdict mismatches, {} printed-cell warnings",
                report.checked,
                report.verdict_mismatches.len(),
                report.printed_mismatches.len()
            );
            if let Some(path) = &out {
                export_json(&report, path)?;
            }
            if !report.passed() {
                return Ok(EXIT_MISMATCH);
            }
        }
    }
    Ok(0)
}

fn generate(args: GenerateArgs) -> Result<()> {
    if let Some(v) = args.a17c {
        let (r, s) = generate_a17c(v[0], v[1])?;
        println!("{r}");
        println!("{s}");
        println!("{}", classify_pair(&r, &s, DEFAULT_BUDGET)?.verdict);
    } else if let Some(v) = args.c1 {
        let tuple = c1_tuple(v[0], v[1], v[2], v[3])?;
        for set in &tuple {
            println!("{set}");
        }
        if tuple.iter().collect::<std::collections::BTreeSet<_>>().len() < tuple.len() {
            bail!("generated sets coincide; no tuple to classify");
        }
        println!("{}", classify_tuple(&tuple, DEFAULT_BUDGET)?.verdict);
    }
    Ok(())
}
