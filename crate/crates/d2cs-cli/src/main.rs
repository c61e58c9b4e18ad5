use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use d2cs_core::generators::FamilySpec;
use d2cs_core::schordal::{self, EliminationOrdering, SeoCheck};
use d2cs_core::{edgelist, enum_all, formulas, oracle, reconcile, Error, Graph};

/// Count and enumerate distance-2-clique-sets (D2CS) of graphs.
#[derive(Parser)]
#[command(name = "d2cs", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph family instance as an edge-list file.
    Gen {
        /// Family name: kary, fibonacci, binary-fibonacci, binomial, split,
        /// star, ladder, complete, empty, path, cycle, ktree, random.
        #[arg(long)]
        family: String,
        /// Comma-separated integer parameters (the random family takes
        /// "n,p" with a decimal probability).
        #[arg(long)]
        params: String,
        /// Seed for the random family (default 0).
        #[arg(long)]
        seed: Option<u64>,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a family's closed-form count: the decimal value, then a JSON
    /// record. Use family "kary-bounds" for the rooted-tree bounds.
    CountFormula {
        #[arg(long)]
        family: String,
        #[arg(long)]
        params: String,
    },
    /// Count all D2CS of a connected graph via cliques of the square.
    EnumAll {
        /// Edge-list file ("-" for stdin).
        input: String,
        /// Also print every D2CS of size >= 3, one per line, canonical
        /// order; the size-0/1/2 strata are reported as counts.
        #[arg(long)]
        emit_sets: bool,
    },
    /// Brute-force count over all vertex subsets.
    Oracle {
        input: String,
        /// Vertex cap (default 24; env D2CS_ORACLE_LIMIT overrides).
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Maximal D2CS of a strongly chordal graph, one set per line.
    MaximalSchordal {
        input: String,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Strong elimination ordering to use (paper mode); found
        /// automatically when omitted.
        #[arg(long)]
        order: Option<String>,
        /// Collapse repeated printed sets (paper mode).
        #[arg(long)]
        dedup: bool,
    },
    /// Verify that an ordering is a strong elimination ordering.
    SeoCheck {
        input: String,
        /// Comma-separated vertex ids, elimination order.
        #[arg(long)]
        order: String,
    },
    /// Find a strong elimination ordering, or report none.
    SeoFind { input: String },
    /// Cross-check published formulas against the oracle and audit the
    /// strongly chordal enumerator; mismatches are findings, not failures.
    Reconcile {
        /// Family range spec, repeatable: "star=1..10", "kary=2..3,1..2",
        /// "binomial=4", or a bare name for its default range. When absent
        /// the suite selection applies.
        #[arg(long)]
        family: Vec<String>,
        /// Which default suite to run when no --family is given.
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Write the JSON report here (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Exit nonzero if any verdict is MISMATCH.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        limit: Option<usize>,
        /// Stamp the report with the generation time.
        #[arg(long)]
        timestamps: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Paper,
    Reference,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    All,
    Formulas,
    Findings,
    Schordal,
}

#[derive(Serialize)]
struct FormulaRecord {
    schema: &'static str,
    family: String,
    params: Vec<u64>,
    value: String,
    disputed: bool,
}

#[derive(Serialize)]
struct BoundsRecord {
    schema: &'static str,
    family: &'static str,
    params: Vec<u64>,
    lower: String,
    upper: String,
    fmax: String,
    disputed: bool,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Gen {
            family,
            params,
            seed,
            out,
        } => {
            let spec = FamilySpec::from_cli(&family, &params, seed).map_err(stringify)?;
            if let FamilySpec::Split { r: 1, .. } = spec {
                eprintln!(
                    "warning: split graphs with r = 1 are outside the published \
                     hypothesis (r > 1); the count formula still evaluates"
                );
            }
            let graph = spec.generate().map_err(stringify)?;
            let text = edgelist::write(&graph);
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::CountFormula { family, params } => count_formula(&family, &params),

        Command::EnumAll { input, emit_sets } => {
            let graph = read_graph(&input)?;
            if emit_sets {
                let components = graph.components();
                if components.len() > 1 {
                    let sizes: Vec<usize> = components.iter().map(|c| c.len()).collect();
                    return Err(stringify(Error::Disconnected(sizes)));
                }
                println!("# size0=1 size1={} size2={}", graph.n(), graph.m());
                let total =
                    enum_all::enum_all_d2cs(&graph, |s| println!("{s}")).map_err(stringify)?;
                println!("{total}");
            } else {
                let total = enum_all::enum_all_d2cs(&graph, |_| {}).map_err(stringify)?;
                println!("{total}");
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Oracle { input, limit } => {
            let graph = read_graph(&input)?;
            let result = oracle::oracle_count_limited(&graph, false, oracle_limit(limit))
                .map_err(stringify)?;
            println!("{}", result.total);
            let hist: Vec<String> = result.by_size.iter().map(|c| c.to_string()).collect();
            println!("# by_size: {}", hist.join(" "));
            Ok(ExitCode::SUCCESS)
        }

        Command::MaximalSchordal {
            input,
            mode,
            order,
            dedup,
        } => maximal_schordal(&input, mode, order.as_deref(), dedup),

        Command::SeoCheck { input, order } => {
            let graph = read_graph(&input)?;
            let ordering = parse_order(&order)?;
            match schordal::verify_seo(&graph, &ordering).map_err(stringify)? {
                SeoCheck::Valid => println!("OK"),
                SeoCheck::Violation(v) => println!("{v}"),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::SeoFind { input } => {
            let graph = read_graph(&input)?;
            match schordal::find_seo(&graph) {
                Some(ordering) => println!("{}", join(ordering.as_slice())),
                None => println!("none"),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Reconcile {
            family,
            suite,
            out,
            strict,
            limit,
            timestamps,
        } => {
            let checks = if family.is_empty() {
                match suite {
                    Suite::All => reconcile::default_suite(),
                    Suite::Formulas => reconcile::default_formula_checks(),
                    Suite::Findings => reconcile::default_findings_checks(),
                    Suite::Schordal => reconcile::default_schordal_checks(),
                }
            } else {
                let mut checks = Vec::new();
                for spec in &family {
                    checks.extend(parse_family_ranges(spec)?);
                }
                checks
            };
            let report = reconcile::run(&checks, oracle_limit(limit), timestamps);
            let json = report.to_json();
            match out {
                Some(path) => {
                    std::fs::write(&path, &json)
                        .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                    for e in &report.entries {
                        let verdict = match e.verdict {
                            reconcile::Verdict::Match => "MATCH",
                            reconcile::Verdict::Mismatch => "MISMATCH",
                            reconcile::Verdict::Skipped => "SKIPPED",
                        };
                        println!("{} {} {}", e.family, e.params.join(","), verdict);
                    }
                    let m = report.mismatches();
                    println!(
                        "# {} entries, {} mismatches -> {}",
                        report.entries.len(),
                        m,
                        path.display()
                    );
                }
                None => println!("{json}"),
            }
            if strict && report.mismatches() > 0 {
                return Ok(ExitCode::FAILURE);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn count_formula(family: &str, params: &str) -> Result<ExitCode, String> {
    if family == "kary-bounds" {
        let nums = parse_u64_list(params)?;
        let [k, h] = nums[..] else {
            return Err("kary-bounds takes two parameters: k,h".into());
        };
        let bounds = formulas::kary_bounds(k, h).map_err(stringify)?;
        println!(
            "lower={} upper={} fmax={}",
            bounds.lower, bounds.upper, bounds.fmax
        );
        let record = BoundsRecord {
            schema: reconcile::SCHEMA,
            family: "kary-bounds",
            params: vec![k, h],
            lower: bounds.lower.to_string(),
            upper: bounds.upper.to_string(),
            fmax: bounds.fmax.to_string(),
            disputed: false,
        };
        println!("{}", serde_json::to_string(&record).expect("serializes"));
        return Ok(ExitCode::SUCCESS);
    }
    let spec = FamilySpec::from_cli(family, params, None).map_err(stringify)?;
    let value = spec.formula_count().map_err(stringify)?;
    println!("{}", value.value);
    let record = FormulaRecord {
        schema: reconcile::SCHEMA,
        family: spec.family_name().to_string(),
        params: spec
            .params()
            .iter()
            .map(|p| p.parse().expect("formula families take integer params"))
            .collect(),
        value: value.value.to_string(),
        disputed: value.disputed,
    };
    println!("{}", serde_json::to_string(&record).expect("serializes"));
    Ok(ExitCode::SUCCESS)
}

fn maximal_schordal(
    input: &str,
    mode: Mode,
    order: Option<&str>,
    dedup: bool,
) -> Result<ExitCode, String> {
    let graph = read_graph(input)?;
    match mode {
        Mode::Reference => {
            if schordal::find_seo(&graph).is_none() {
                return Err("input graph is not strongly chordal".into());
            }
            for s in schordal::maximal_d2cs_reference(&graph).map_err(stringify)? {
                println!("{s}");
            }
        }
        Mode::Paper => {
            let ordering = match order {
                Some(text) => parse_order(text)?,
                None => schordal::find_seo(&graph)
                    .ok_or_else(|| "input graph is not strongly chordal".to_string())?,
            };
            let run = schordal::maximal_d2cs_paper(&graph, &ordering).map_err(stringify)?;
            println!("# seo: {}", join(ordering.as_slice()));
            let sets = if dedup {
                run.deduped()
            } else {
                run.printed.clone()
            };
            for s in sets {
                println!("{s}");
            }
            for note in &run.notes {
                println!("# note: {note}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn read_graph(input: &str) -> Result<Graph, String> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        buf
    } else {
        std::fs::read_to_string(Path::new(input))
            .map_err(|e| format!("cannot read {input}: {e}"))?
    };
    edgelist::parse(&text).map_err(stringify)
}

fn oracle_limit(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("D2CS_ORACLE_LIMIT")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(oracle::DEFAULT_LIMIT)
}

fn parse_order(text: &str) -> Result<EliminationOrdering, String> {
    let order: Result<Vec<usize>, _> = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect();
    let order = order.map_err(|_| format!("invalid ordering '{text}'"))?;
    EliminationOrdering::new(order).map_err(stringify)
}

fn parse_u64_list(text: &str) -> Result<Vec<u64>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| format!("'{s}' is not an integer")))
        .collect()
}

fn join(vals: &[usize]) -> String {
    vals.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

// "star=1..10" / "kary=2..3,1..2" / "binomial=4" / bare family name.
fn parse_family_ranges(spec: &str) -> Result<Vec<reconcile::Check>, String> {
    use reconcile::Check;

    let (name, ranges_text) = match spec.split_once('=') {
        Some((n, r)) => (n.trim(), Some(r.trim())),
        None => (spec.trim(), None),
    };
    let ranges: Vec<(u64, u64)> = match ranges_text {
        Some(text) => text
            .split(',')
            .map(parse_range)
            .collect::<Result<Vec<_>, String>>()?,
        None => Vec::new(),
    };
    let one = |f: &dyn Fn(u64) -> FamilySpec, default: (u64, u64)| -> Result<Vec<Check>, String> {
        let (lo, hi) = *ranges.first().unwrap_or(&default);
        Ok((lo..=hi).map(|n| Check::Formula(f(n))).collect())
    };
    let two = |f: &dyn Fn(u64, u64) -> FamilySpec,
               d1: (u64, u64),
               d2: (u64, u64)|
     -> Result<Vec<Check>, String> {
        let (alo, ahi) = *ranges.first().unwrap_or(&d1);
        let (blo, bhi) = *ranges.get(1).unwrap_or(&d2);
        let mut out = Vec::new();
        for a in alo..=ahi {
            for b in blo..=bhi {
                out.push(Check::Formula(f(a, b)));
            }
        }
        Ok(out)
    };
    match name {
        "star" => one(&|n| FamilySpec::Star { n }, (1, 12)),
        "complete" => one(&|n| FamilySpec::Complete { n }, (1, 12)),
        "empty" => one(&|n| FamilySpec::Empty { n }, (1, 10)),
        "ladder" => one(&|n| FamilySpec::Ladder { n }, (1, 8)),
        "binomial" => one(&|k| FamilySpec::BinomialTree { k }, (0, 4)),
        "fibonacci" => one(&|n| FamilySpec::FibonacciTree { n }, (2, 8)),
        "binary-fibonacci" => one(&|n| FamilySpec::BinaryFibonacciTree { n }, (0, 6)),
        "path" => one(&|n| FamilySpec::Path { n }, (2, 8)),
        "cycle" => one(&|n| FamilySpec::Cycle { n }, (3, 8)),
        "split" => two(&|k, r| FamilySpec::Split { k, r }, (1, 4), (1, 3)),
        "kary" => {
            if ranges.is_empty() {
                Ok([(2, 1), (2, 2), (3, 1), (3, 2), (2, 3)]
                    .into_iter()
                    .map(|(k, h)| Check::Formula(FamilySpec::KaryTree { k, h }))
                    .collect())
            } else {
                two(&|k, h| FamilySpec::KaryTree { k, h }, (2, 3), (1, 3))
            }
        }
        "ktree" => {
            let checks = two(&|n, k| FamilySpec::KTree { n, k }, (2, 10), (1, 3))?;
            Ok(checks
                .into_iter()
                .filter(|c| match c {
                    reconcile::Check::Formula(FamilySpec::KTree { n, k }) => *n > *k,
                    _ => true,
                })
                .collect())
        }
        other => Err(format!("unknown family '{other}' in --family spec")),
    }
}

fn parse_range(text: &str) -> Result<(u64, u64), String> {
    let text = text.trim();
    if let Some((lo, hi)) = text.split_once("..") {
        let lo = lo
            .trim()
            .parse()
            .map_err(|_| format!("bad range '{text}'"))?;
        let hi = hi
            .trim()
            .parse()
            .map_err(|_| format!("bad range '{text}'"))?;
        if lo > hi {
            return Err(format!("empty range '{text}'"));
        }
        Ok((lo, hi))
    } else {
        let v = text.parse().map_err(|_| format!("bad range '{text}'"))?;
        Ok((v, v))
    }
}

fn stringify(e: Error) -> String {
    e.to_string()
}
