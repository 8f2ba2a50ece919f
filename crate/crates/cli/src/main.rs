use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use homolog::bounds::{
    best_v_search_in, check_it_certificate, BoundContext, ItCaps, ItCertificate, ItVerdict,
    SampleVerdict,
};
use homolog::bracket::{bracket_membership, BracketAnswer, BracketCaps, BracketMode, BracketQuery};
use homolog::corpus::run_verification;
use homolog::invariants::{compute_invariants, InvariantOptions};
use homolog::io::{emit_report, parse_document, Document, ReportValue};
use homolog::rep::{simple, Algebra};
use homolog::syzygy::{syzygy_scan, ScanConfig, DEFAULT_CUTOFF};
use homolog::torsion::SimpleSet;
use homolog::{Error, Field, FieldSpec, PrimeField, Rationals, Representation};

const EXIT_FAILURE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNDECIDED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "homolog",
    version,
    about = "Homological invariants of bound quiver algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions, Loewy length, global dimension and selfinjectivity.
    Invariants {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        cutoff: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Derived and Igusa-Todorov dimension bounds for a set of simples.
    Bounds {
        file: PathBuf,
        /// Comma-separated vertex names forming V.
        #[arg(long, value_delimiter = ',')]
        simples: Vec<String>,
        /// Search all sets of simples of finite projective dimension.
        #[arg(long)]
        best_v: bool,
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        cutoff: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Indecomposable summands of iterated syzygies of the simples.
    SyzygyScan {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(long, default_value_t = 256)]
        dim_cap: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Brute-force decision procedures.
    Oracle {
        #[command(subcommand)]
        oracle: Oracle,
    },
    /// Checks an (m, n) Igusa-Todorov certificate on the simples and the
    /// document's other modules.
    ItCheck {
        file: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Name of the module block holding V.
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Recomputes the built-in corpus and compares with expected values.
    CheckCorpus {
        names: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        cutoff: usize,
    },
}

#[derive(Subcommand)]
enum Oracle {
    /// Is MODULE in [GENERATOR]_LEVEL?
    Bracket {
        file: PathBuf,
        #[arg(long)]
        module: String,
        #[arg(long)]
        generator: String,
        #[arg(long)]
        level: usize,
        #[arg(long, value_enum, default_value_t = Mode::Direct)]
        mode: Mode,
        #[arg(long, default_value_t = 8)]
        dim_cap: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Direct,
    Summand,
}

fn read_document(path: &Path) -> anyhow::Result<Document> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(parse_document(&text).map_err(Error::from)?)
}

fn doc_name(doc: &Document, path: &Path) -> String {
    doc.name.clone().unwrap_or_else(|| {
        path.file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default()
    })
}

fn simple_set<F: Field>(alg: &Algebra<F>, names: &[String]) -> homolog::Result<SimpleSet> {
    let q = alg.quiver();
    Ok(SimpleSet::new(
        names
            .iter()
            .map(|n| q.vertex_index(n))
            .collect::<homolog::Result<Vec<_>>>()?,
    ))
}

fn print_report_text(fields: &[(String, ReportValue)]) {
    for (k, v) in fields {
        println!("{k}: {}", v.to_json());
    }
}

fn run_on_algebra<F: Field>(
    field: F,
    doc: &Document,
    path: &Path,
    cmd: &Command,
) -> anyhow::Result<ExitCode> {
    let alg = doc.build_algebra(field)?;
    let name = doc_name(doc, path);
    match cmd {
        Command::Invariants {
            cutoff, seed, json, ..
        } => {
            let opts = InvariantOptions {
                cutoff: *cutoff,
                seed: *seed,
                ..Default::default()
            };
            let report = compute_invariants(&alg, &name, &opts);
            if *json {
                print!("{}", emit_report(&report));
            } else {
                println!(
                    "algebra: {name} over {} (dimension {})",
                    alg.field_spec(),
                    alg.dimension()
                );
                print_report_text(&report.invariants);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds {
            simples,
            best_v,
            cutoff,
            seed,
            ..
        } => {
            let opts = InvariantOptions {
                cutoff: *cutoff,
                seed: *seed,
                ..Default::default()
            };
            let ctx = BoundContext::new(&alg, &opts.homology());
            let report = if *best_v {
                best_v_search_in(&ctx).1
            } else {
                ctx.report(&simple_set(&alg, simples)?)
            };
            let names = alg.quiver().vertices();
            let v: Vec<&str> = report.v.iter().map(|i| names[i].as_str()).collect();
            println!("V: {{{}}}", v.join(","));
            if let ReportValue::Record(fields) = report.to_report(*cutoff) {
                print_report_text(&fields);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::SyzygyScan {
            depth,
            dim_cap,
            seed,
            ..
        } => {
            let mut cfg = ScanConfig {
                depth: *depth,
                dim_cap: *dim_cap,
                ..Default::default()
            };
            cfg.decompose.seed = *seed;
            let catalog = syzygy_scan(&alg, &[], &cfg)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&catalog.to_report().to_json())?
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle {
            oracle:
                Oracle::Bracket {
                    module,
                    generator,
                    level,
                    mode,
                    dim_cap,
                    ..
                },
        } => {
            let caps = BracketCaps {
                dim_cap: *dim_cap,
                mode: match mode {
                    Mode::Direct => BracketMode::Direct,
                    Mode::Summand => BracketMode::SummandClosed,
                },
                ..Default::default()
            };
            let q = BracketQuery {
                target: doc.module(&alg, module)?,
                generator: doc.module(&alg, generator)?,
                level: *level,
                caps,
            };
            match bracket_membership(&q)? {
                BracketAnswer::Yes(w) => {
                    w.validate(&q.target)?;
                    println!("yes");
                    println!("ambient dims: {:?}", w.ambient.module.dims());
                    for (i, s) in w.chain.iter().enumerate() {
                        println!("W_{}: {:?}", i + 1, s.dims());
                    }
                    Ok(ExitCode::SUCCESS)
                }
                BracketAnswer::No => {
                    println!("no");
                    Ok(ExitCode::SUCCESS)
                }
                BracketAnswer::Unknown(reason) => {
                    println!("unknown: {reason}");
                    Ok(ExitCode::from(EXIT_UNDECIDED))
                }
            }
        }
        Command::ItCheck {
            m, n, module, seed, ..
        } => {
            let v = doc.module(&alg, module)?;
            let mut samples: Vec<Representation<F>> =
                (0..alg.num_vertices()).map(|i| simple(&alg, i)).collect();
            for other in doc.module_names() {
                if other != module {
                    samples.push(doc.module(&alg, other)?);
                }
            }
            let mut caps = ItCaps::default();
            caps.decompose.seed = *seed;
            let check = check_it_certificate(
                &ItCertificate {
                    m: *m,
                    n: *n,
                    module: v,
                },
                &samples,
                &caps,
            )?;
            for (i, s) in check.samples.iter().enumerate() {
                let line = match &s.verdict {
                    SampleVerdict::Verified => "verified".to_string(),
                    SampleVerdict::Refuted(r) => format!("refuted: {r}"),
                    SampleVerdict::Undecided(r) => format!("undecided: {r}"),
                };
                println!("sample {i} {:?}: {line}", samples[i].dims());
            }
            let (label, code) = match check.verdict {
                ItVerdict::VerifiedOnSamples => ("verified on samples", ExitCode::SUCCESS),
                ItVerdict::Refuted => ("refuted", ExitCode::from(EXIT_FAILURE)),
                ItVerdict::Undecided => ("undecided", ExitCode::from(EXIT_UNDECIDED)),
            };
            println!("verdict: {label}");
            Ok(code)
        }
        Command::CheckCorpus { .. } => unreachable!("handled without a document"),
    }
}

fn file_of(cmd: &Command) -> Option<&Path> {
    match cmd {
        Command::Invariants { file, .. }
        | Command::Bounds { file, .. }
        | Command::SyzygyScan { file, .. }
        | Command::ItCheck { file, .. }
        | Command::Oracle {
            oracle: Oracle::Bracket { file, .. },
        } => Some(file),
        Command::CheckCorpus { .. } => None,
    }
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    if let Command::CheckCorpus {
        names,
        seed,
        cutoff,
    } = &cli.command
    {
        let report = run_verification(names, *cutoff, *seed)?;
        print!("{}", report.to_text());
        return Ok(if report.passed() {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(EXIT_FAILURE)
        });
    }
    let path = file_of(&cli.command).expect("command takes a file");
    let doc = read_document(path)?;
    match doc.field {
        FieldSpec::Prime(p) => run_on_algebra(PrimeField::new(p)?, &doc, path, &cli.command),
        FieldSpec::Rationals => run_on_algebra(Rationals, &doc, path, &cli.command),
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::CapExceeded(_) | Error::Undecided(_)) => EXIT_UNDECIDED,
        _ => EXIT_INPUT,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("HOMOLOG_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
    {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
