use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use alcove_core::center::translation_trace_scalar;
use alcove_core::charring::{specialize, weyl_character, CyclotomicRing, LaurentRing};
use alcove_core::linkage::{block_label, enumerate_blocks, in_closed_alcove};
use alcove_core::verify::{cyc_json, default_l, laurent_json, run_suite, SuiteConfig};
use alcove_core::{root_datum_from_str, Error, RootDatum, Weight};

#[derive(Parser)]
#[command(name = "alcove-center", version, about = "Exact computations with blocks and centers at a root of unity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan data of a root system.
    Datum {
        #[arg(long = "type")]
        type_name: String,
        #[arg(long)]
        json: bool,
    },
    /// Block labels with their stabilizers and parahoric types.
    Blocks {
        #[arg(long = "type")]
        type_name: String,
        #[arg(long)]
        l: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Weyl character of a dominant weight.
    Character {
        #[arg(long = "type")]
        type_name: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value_t = QMode::Generic)]
        q: QMode,
        #[arg(long)]
        l: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Translation trace scalar of a block.
    Trace {
        #[arg(long = "type")]
        type_name: String,
        #[arg(long)]
        l: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = ["d2", "d1", "l514", "b5", "poincare", "linkage", "all"])]
        suite: String,
        #[arg(long = "type")]
        type_name: Option<String>,
        #[arg(long)]
        l: Option<i64>,
        #[arg(long, default_value_t = 4)]
        deg: u32,
        #[arg(long, default_value_t = 4)]
        trunc: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum QMode {
    Generic,
    Zeta,
}

#[derive(Debug)]
enum CliError {
    Domain(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

fn parse_weight(d: &RootDatum, s: &str) -> Result<Weight, CliError> {
    let coords = s
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Usage(format!("cannot parse weight {s:?}")))?;
    if coords.len() != d.rank {
        return Err(Error::RankMismatch { expected: d.rank, got: coords }.into());
    }
    Ok(Weight(coords))
}

fn level(d: &RootDatum, l: Option<i64>) -> Result<i64, CliError> {
    let l = l.unwrap_or_else(|| default_l(d));
    if !d.validate_l(l) {
        return Err(Error::InvalidL { l }.into());
    }
    Ok(l)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Datum { type_name, json } => {
            let d = root_datum_from_str(&type_name)?;
            let w = d.weyl_order();
            if json {
                let v = json!({
                    "type": d.type_name(), "rank": d.rank, "cartan": d.cartan, "e": d.e(),
                    "coxeter_number": d.coxeter_number, "positive_roots": d.positive_roots.len(),
                    "exponents": d.exponents, "weyl_order": w, "rho": d.rho.0, "pi1_order": d.pi1_order,
                });
                println!("{v}");
            } else {
                println!("type {}", d.type_name());
                println!("cartan {:?}", d.cartan);
                println!("e={} h={} |Φ⁺|={} |W|={}", d.e(), d.coxeter_number, d.positive_roots.len(), w);
                let ex: Vec<String> = d.exponents.iter().map(|m| m.to_string()).collect();
                println!("exponents {}", ex.join(","));
                println!("rho {}", d.rho);
            }
            Ok(true)
        }
        Command::Blocks { type_name, l, json } => {
            let d = root_datum_from_str(&type_name)?;
            let l = level(&d, l)?;
            let blocks = enumerate_blocks(&d, l)?;
            if json {
                let list: Vec<_> = blocks.iter().map(|b| b.summary()).collect();
                println!("{}", json!({"type": d.type_name(), "l": l, "blocks": list}));
            } else {
                println!("{} blocks for {} at l={l}", blocks.len(), d.type_name());
                for b in &blocks {
                    let nodes: Vec<String> = b.parahoric_type.iter().map(|n| n.to_string()).collect();
                    println!("ω={}  |W_ω|={}  walls={{{}}}", b.omega, b.stabilizer_order(), nodes.join(","));
                }
            }
            Ok(true)
        }
        Command::Character { type_name, weight, q, l, json } => {
            let d = root_datum_from_str(&type_name)?;
            let lambda = parse_weight(&d, &weight)?;
            let chr = weyl_character(&d, &LaurentRing, &lambda)?;
            let (mode, terms): (&str, Vec<(Vec<i64>, serde_json::Value, String)>) = match q {
                QMode::Generic => (
                    "generic",
                    chr.terms().map(|(w, c)| (w.0.clone(), laurent_json(c), c.to_string())).collect(),
                ),
                QMode::Zeta => {
                    let field = CyclotomicRing::new(level(&d, l)? as u64);
                    let s = specialize(&chr, &field);
                    ("zeta", s.terms().map(|(w, c)| (w.0.clone(), cyc_json(&field, c), c.to_string())).collect())
                }
            };
            if json {
                let list: Vec<_> = terms.iter().map(|(w, c, _)| json!({"weight": w, "coeff": c})).collect();
                println!("{}", json!({"type": d.type_name(), "highest_weight": lambda.0, "mode": mode, "terms": list}));
            } else {
                println!("ch V{} for {} ({} weights)", lambda, d.type_name(), terms.len());
                for (w, _, c) in &terms {
                    println!("{}  {c}", Weight(w.clone()));
                }
            }
            Ok(true)
        }
        Command::Trace { type_name, l, omega, n, json } => {
            let d = root_datum_from_str(&type_name)?;
            let l = level(&d, l)?;
            let omega = parse_weight(&d, &omega)?;
            if !in_closed_alcove(&d, l, &omega) {
                return Err(CliError::Usage(format!("ω = {omega} is not in the closed fundamental {l}-alcove")));
            }
            let t = translation_trace_scalar(&d, &block_label(&d, l, &omega), n)?;
            if json {
                println!("{}", serde_json::to_string(&t.report()).expect("serializable"));
            } else {
                println!(
                    "ω={}  scalar={}  expected |W_ω|={}  stable={} (n={})",
                    t.omega, t.value, t.expected, t.stable, t.n
                );
            }
            Ok(t.matches_expected())
        }
        Command::Verify { suite, type_name, l, deg, trunc, seed, n, json } => {
            let cfg = SuiteConfig { type_name, l, seed, deg, trunc, n };
            let start = Instant::now();
            let report = run_suite(&suite, &cfg)?;
            if json {
                println!("{}", report.to_json());
            } else {
                for c in &report.cases {
                    println!("{} {}", if c.pass { "PASS" } else { "FAIL" }, c.name);
                }
                let passed = report.cases.iter().filter(|c| c.pass).count();
                println!(
                    "{suite}: {passed}/{} cases passed in {:.2}s",
                    report.cases.len(),
                    start.elapsed().as_secs_f64()
                );
            }
            Ok(report.pass)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
