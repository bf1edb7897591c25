use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use stingy_core::bounds::{write_csv, write_jsonl, HalfInt, VerificationParams};
use stingy_core::coloring::Guards;
use stingy_core::graph::{generate, parse_graph6, Family, Graph};
use stingy_core::harness::{
    analyze, default_densities, exhaustive_corpus, parse_corpus, search, search_corpus, sweep,
    validate_claim, verify, Suite, EXHAUSTIVE_MAX_N,
};

/// Exact colouring analysis and bound verification for small graphs.
///
/// Exit status: 0 when nothing failed, 1 when a claim was violated, 2 on
/// usage or input errors. Enumeration guards can be raised with
/// STINGY_OPTIMAL_GUARD and STINGY_FULL_GUARD.
#[derive(Parser, Debug)]
#[command(name = "stingy", version)]
struct Cli {
    /// Write results here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Jsonl)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full report for a single graph.
    Analyze {
        /// Graph in graph6.
        #[arg(long, conflicts_with = "gen", required_unless_present = "gen")]
        g6: Option<String>,
        /// Generator, e.g. cycle:5, complete:4, petersen, er:8:0.5:42.
        #[arg(long)]
        gen: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Bounds report for every graph of a corpus.
    Sweep {
        /// File of graph6 lines.
        #[arg(
            long,
            conflicts_with = "exhaustive",
            required_unless_present = "exhaustive"
        )]
        input: Option<PathBuf>,
        /// All graphs up to isomorphism with min-n <= n <= max-n.
        #[arg(long, requires = "max_n")]
        exhaustive: bool,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Look for graphs violating one claim.
    Search {
        /// Claim name; a suffix such as [r=3] fixes the class-size cap.
        #[arg(long)]
        claim: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        /// Seed for random graphs; required when max-n exceeds the
        /// exhaustive range.
        #[arg(long)]
        seed: Option<u64>,
        /// Random graphs drawn beyond the exhaustive range.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Edge densities cycled through by the random graphs.
        #[arg(long, value_delimiter = ',')]
        densities: Option<Vec<f64>>,
        #[command(flatten)]
        common: Common,
    },
    /// Run a named verification suite exhaustively.
    Verify {
        /// lonely-path, generalized-lonely-path, replete, swap, properties or identities.
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Class-size caps for the r-bounded claims.
    #[arg(long = "r", value_delimiter = ',', default_values_t = [2usize, 3])]
    r: Vec<usize>,
    /// Slack values, half-integers such as 0, 1/2, 1.5.
    #[arg(long = "t", value_delimiter = ',', default_values_t = [HalfInt(0), HalfInt(1)])]
    t: Vec<HalfInt>,
    /// Longest lonely path, in vertices.
    #[arg(long, default_value_t = stingy_core::lonely::DEFAULT_MAX_LEN)]
    max_len: usize,
}

impl Common {
    fn params(&self, guards: Guards, seed: u64) -> VerificationParams {
        VerificationParams {
            t: self.t.clone(),
            r: self.r.clone(),
            guards,
            seed,
            max_len: self.max_len,
        }
    }
}

/// Result of a command apart from hard errors.
#[derive(Default)]
struct Status {
    violation: bool,
    input_errors: bool,
}

impl Status {
    fn code(&self) -> ExitCode {
        if self.violation {
            ExitCode::from(1)
        } else if self.input_errors {
            ExitCode::from(2)
        } else {
            ExitCode::SUCCESS
        }
    }
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json_line<T: serde::Serialize>(w: &mut dyn Write, x: &T) -> Result<()> {
    serde_json::to_writer(&mut *w, x)?;
    writeln!(w)?;
    Ok(())
}

fn load_graph(g6: &Option<String>, gen: &Option<String>) -> Result<Graph> {
    match (g6, gen) {
        (Some(s), _) => parse_graph6(s).with_context(|| format!("parsing graph6 `{s}`")),
        (None, Some(spec)) => {
            let family: Family = spec
                .parse()
                .with_context(|| format!("parsing generator `{spec}`"))?;
            generate(&family).with_context(|| format!("generating `{spec}`"))
        }
        (None, None) => bail!("one of --g6 or --gen is required"),
    }
}

fn run(cli: Cli) -> Result<Status> {
    let guards = Guards::from_env()?;
    let mut status = Status::default();
    let mut out = sink(&cli.out)?;
    match &cli.command {
        Command::Analyze { g6, gen, common } => {
            let g = load_graph(g6, gen)?;
            let params = common.params(guards, 0);
            let a = analyze(&g, &params)?;
            status.violation = a.has_violation();
            match cli.format {
                Format::Jsonl => write_json_line(&mut out, &a)?,
                Format::Csv => write_csv(std::slice::from_ref(&a.report), &mut out)?,
            }
            eprintln!(
                "{}: n={} chi={} iota={} violations={}",
                a.report.g6,
                a.report.inv.n,
                a.report.inv.chi,
                a.report.inv.iota,
                a.report.violations().count() as u64 + a.lonely["violations"].as_u64().unwrap_or(0)
            );
        }
        Command::Sweep {
            input,
            exhaustive,
            max_n,
            min_n,
            common,
        } => {
            let params = common.params(guards, 0);
            let graphs = if *exhaustive {
                exhaustive_corpus(*min_n, max_n.expect("clap enforces --max-n"))?
            } else {
                let path = input.as_ref().expect("clap enforces --input");
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let corpus = parse_corpus(&text);
                for (line, e) in &corpus.errors {
                    eprintln!("{}:{line}: {e}", path.display());
                }
                status.input_errors = !corpus.errors.is_empty();
                corpus.graphs.into_iter().map(|(_, g)| g).collect()
            };
            let reports = sweep(&graphs, &params)?;
            match cli.format {
                Format::Jsonl => write_jsonl(&reports, &mut out)?,
                Format::Csv => write_csv(&reports, &mut out)?,
            }
            let bad = reports.iter().filter(|r| r.has_violation()).count();
            status.violation = bad > 0;
            eprintln!("graphs: {}, with violations: {bad}", reports.len());
        }
        Command::Search {
            claim,
            max_n,
            min_n,
            seed,
            samples,
            densities,
            common,
        } => {
            validate_claim(claim)?;
            if *max_n > EXHAUSTIVE_MAX_N && seed.is_none() {
                bail!("--seed is required when --max-n exceeds {EXHAUSTIVE_MAX_N} (random graphs are drawn beyond that)");
            }
            let mut params = common.params(guards, seed.unwrap_or(0));
            if let Some(r) = claim
                .strip_suffix(']')
                .and_then(|c| c.split_once("[r="))
                .map(|(_, r)| r)
            {
                params.r = vec![r.parse().with_context(|| format!("bad r in `{claim}`"))?];
            }
            let densities = densities.clone().unwrap_or_else(default_densities);
            let graphs = search_corpus(*min_n, *max_n, *samples, &densities, params.seed)?;
            let outcome = search(claim, &graphs, &params)?;
            match cli.format {
                Format::Jsonl => {
                    for hit in &outcome.hits {
                        write_json_line(&mut out, hit)?;
                    }
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut out);
                    w.write_record(["g6", "claim", "verdict", "witness"])?;
                    for hit in &outcome.hits {
                        w.write_record([
                            hit.g6.as_str(),
                            hit.claim.name.as_str(),
                            hit.claim.verdict.as_str(),
                            &hit.claim.witness.to_string(),
                        ])?;
                    }
                    w.flush()?;
                }
            }
            status.violation = !outcome.hits.is_empty();
            eprintln!(
                "{}: graphs {}, checked {}, vacuous {}, not evaluated {}, violations {}",
                outcome.claim,
                outcome.graphs,
                outcome.evaluated,
                outcome.vacuous,
                outcome.not_evaluated,
                outcome.hits.len()
            );
        }
        Command::Verify {
            suite,
            max_n,
            min_n,
            common,
        } => {
            let suite: Suite = suite.parse()?;
            let params = common.params(guards, 0);
            let graphs = exhaustive_corpus(*min_n, *max_n)?;
            let rep = verify(suite, &graphs, &params)?;
            match cli.format {
                Format::Jsonl => write_json_line(&mut out, &rep)?,
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut out);
                    w.write_record([
                        "suite",
                        "graphs",
                        "checked-pass",
                        "vacuous-pass",
                        "VIOLATION",
                    ])?;
                    w.write_record([
                        suite.name().to_string(),
                        rep.graphs.to_string(),
                        rep.checked_pass.to_string(),
                        rep.vacuous_pass.to_string(),
                        rep.violations.to_string(),
                    ])?;
                    w.flush()?;
                }
            }
            status.violation = !rep.is_clean();
            eprintln!(
                "{suite}: graphs {}, checked-pass {}, vacuous-pass {}, VIOLATION {} {}",
                rep.graphs,
                rep.checked_pass,
                rep.vacuous_pass,
                rep.violations,
                json!(rep.counters)
            );
        }
    }
    out.flush()?;
    Ok(status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(status) => status.code(),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
