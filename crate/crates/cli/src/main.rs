//! `lieons` — exact computations with Lie algebra structures as linear
//! Poisson bivectors.
//!
//! Exit codes: 0 success / positive answer, 1 domain-negative result
//! (Jacobi failure, incompatibility, inapplicable mode), 2 usage or parse
//! error.

use clap::{Parser, Subcommand, ValueEnum};
use lieons_cli::docs::{CardDocument, FamilyDocument, SchemeDocument, StructureDocument};
use lieons_cli::dot;
use lieons_core::classical::{canonical_scheme, ClassicalKind, ClassicalSpec};
use lieons_core::clusters::{compute_card, enumerate_clusters, is_cluster, synthesize};
use lieons_core::gen;
use lieons_core::lie::LieonKind;
use lieons_core::rational::{format_rational, parse_rational};
use lieons_core::scheme::{disassemble_solvable, verify_scheme, AScheme};
use lieons_core::{CoreError, LieStructure, Rational};
use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "lieons", version, about = "exact Lie structure engine")]
struct Cli {
    /// Seed for optional random property sweeps.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum DisMode {
    Solvable,
    ModularSplit,
}

#[derive(Subcommand)]
enum Command {
    /// Jacobi status, modular vector, rank and lieon recognition.
    Check {
        /// Structure JSON file ("-" for stdin).
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Schouten compatibility of two structures.
    Compat {
        /// Two structure JSON files ("-" for stdin, at most once).
        files: Vec<String>,
    },
    /// Disassemble a structure into a verified scheme.
    Disassemble {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, value_enum)]
        mode: DisMode,
    },
    /// Canonical complete disassembling of a classical algebra.
    Classical {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: u32,
        /// Diagonal form coefficients for so (comma separated rationals).
        #[arg(long)]
        params: Option<String>,
        /// Dressing scale override for the matrix kinds.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Enumerate clusters on {1..n} with cards.
    Clusters {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Card of a cluster family.
    Card {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Synthesize the coaxial structure of a compatible family.
    Synth {
        #[arg(long, default_value = "-")]
        input: String,
    },
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| e.to_string())?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

fn parse_structure(path: &str) -> Result<LieStructure, String> {
    let text = read_input(path)?;
    let doc: StructureDocument = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    doc.to_structure().map_err(|e| e.to_string())
}

fn parse_family(path: &str) -> Result<lieons_core::BaseFamily, String> {
    let text = read_input(path)?;
    let doc: FamilyDocument = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    doc.to_family().map_err(|e| e.to_string())
}

fn theta_string(g: &LieStructure) -> String {
    let theta = g.modular_vector();
    if theta.is_zero() {
        return "0".to_string();
    }
    let comps: Vec<String> =
        (1..=g.dim()).map(|i| format_rational(&theta.get(i))).collect();
    format!("({})", comps.join(","))
}

fn cmd_check(input: &str) -> Result<ExitCode, String> {
    let g = parse_structure(input)?;
    let defect = g.jacobi_defect();
    if defect.is_zero() {
        println!("jacobi: ok");
    } else {
        println!("jacobi: FAIL");
        println!("defect: {defect}");
    }
    println!("theta: {}", theta_string(&g));
    println!("rank: {}", g.lie_rank());
    if defect.is_zero() {
        let kind = match g.recognize_lieon().map_err(|e| e.to_string())? {
            LieonKind::Fork(n) => format!("fork({n})"),
            LieonKind::Dee(n) => format!("dee({n})"),
            LieonKind::Abelian => "abelian".to_string(),
            LieonKind::Other => "other".to_string(),
        };
        println!("lieon: {kind}");
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_compat(files: &[String], seed: Option<u64>) -> Result<ExitCode, String> {
    if files.len() != 2 {
        return Err("compat needs exactly two structure files".to_string());
    }
    let a = parse_structure(&files[0])?;
    let b = parse_structure(&files[1])?;
    if a.dim() != b.dim() {
        return Err(format!("dimension mismatch: {} vs {}", a.dim(), b.dim()));
    }
    let bracket = a
        .to_bivector()
        .schouten(&b.to_bivector())
        .map_err(|e| e.to_string())?;
    if bracket.is_zero() {
        println!("compatible");
        if let Some(seed) = seed {
            // cross-check: random pencil members stay Jacobi when both
            // inputs are
            let mut rng = gen::rng(seed);
            if a.jacobi_defect().is_zero() && b.jacobi_defect().is_zero() {
                for _ in 0..3 {
                    let s = gen::nonzero_small_rational(&mut rng);
                    let t = gen::nonzero_small_rational(&mut rng);
                    let pencil = a.scale(&s).sum(&b.scale(&t)).map_err(|e| e.to_string())?;
                    let ok = pencil.jacobi_defect().is_zero();
                    println!(
                        "pencil s={} t={}: {}",
                        format_rational(&s),
                        format_rational(&t),
                        if ok { "jacobi ok" } else { "jacobi FAIL" }
                    );
                }
            }
        }
        Ok(ExitCode::SUCCESS)
    } else {
        println!("incompatible");
        println!("defect: {bracket}");
        Ok(ExitCode::from(1))
    }
}

fn print_scheme(s: &AScheme) -> Result<(), String> {
    let doc = SchemeDocument::from_scheme(s);
    let json = serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?;
    println!("{json}");
    Ok(())
}

fn cmd_disassemble(input: &str, mode: DisMode) -> Result<ExitCode, String> {
    let g = parse_structure(input)?;
    if !g.jacobi_defect().is_zero() {
        println!("error: input violates the Jacobi identity");
        return Ok(ExitCode::from(1));
    }
    let scheme = match mode {
        DisMode::Solvable => match disassemble_solvable(&g) {
            Ok(s) => s,
            Err(CoreError::NotSolvable) => {
                println!("error: not solvable");
                return Ok(ExitCode::from(1));
            }
            Err(e) => return Err(e.to_string()),
        },
        DisMode::ModularSplit => match g.modular_split() {
            Ok(split) => AScheme::internal(
                g.clone(),
                "modular-split",
                vec![
                    AScheme::leaf(split.uni, "unimodular-part"),
                    AScheme::leaf(split.non, "modular-part"),
                ],
            ),
            Err(CoreError::AlreadyUnimodular) => {
                println!("error: already unimodular");
                return Ok(ExitCode::from(1));
            }
            Err(e) => return Err(e.to_string()),
        },
    };
    let report = verify_scheme(&scheme);
    if !report.is_empty() {
        return Err(format!("internal error: emitted scheme fails verification: {report:?}"));
    }
    print_scheme(&scheme)?;
    Ok(ExitCode::SUCCESS)
}

fn parse_rational_list(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',')
        .map(|p| parse_rational(p.trim()).map_err(|e| e.to_string()))
        .collect()
}

fn cmd_classical(
    kind: &str,
    n: u32,
    params: Option<&str>,
    lambda: Option<&str>,
) -> Result<ExitCode, String> {
    let kind = ClassicalKind::parse(kind).ok_or_else(|| format!("unknown kind: {kind}"))?;
    let mut spec = match kind {
        ClassicalKind::So => {
            let params = match params {
                Some(p) => parse_rational_list(p)?,
                None => vec![num_traits::one(); n as usize],
            };
            ClassicalSpec::so(n, params).map_err(|e| e.to_string())?
        }
        ClassicalKind::Sp => ClassicalSpec::sp(n).map_err(|e| e.to_string())?,
        k => ClassicalSpec::matrix_kind(k, n).map_err(|e| e.to_string())?,
    };
    if let Some(l) = lambda {
        spec.lambda = parse_rational(l).map_err(|e| e.to_string())?;
    }
    let scheme = canonical_scheme(&spec).map_err(|e| e.to_string())?;
    let report = verify_scheme(&scheme);
    if !report.is_empty() {
        return Err(format!("internal error: scheme fails verification: {report:?}"));
    }
    print_scheme(&scheme)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_clusters(n: u32, format: Format) -> Result<ExitCode, String> {
    let clusters = enumerate_clusters(n).map_err(|e| e.to_string())?;
    match format {
        Format::Json => {
            #[derive(serde::Serialize)]
            struct Entry {
                family: FamilyDocument,
                card: CardDocument,
            }
            let entries: Vec<Entry> = clusters
                .iter()
                .map(|f| {
                    let card = compute_card(f).expect("enumerated families are clusters");
                    Entry {
                        family: FamilyDocument::from_family(f),
                        card: CardDocument::from_card(&card),
                    }
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&entries).map_err(|e| e.to_string())?);
        }
        Format::Dot => {
            for (i, f) in clusters.iter().enumerate() {
                print!("{}", dot::family_to_dot(f, &format!("cluster_{i}")));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_card(input: &str, format: Format) -> Result<ExitCode, String> {
    let fam = parse_family(input)?;
    match is_cluster(&fam).map_err(|e| e.to_string())? {
        true => {}
        false => {
            println!("error: family is not a cluster");
            return Ok(ExitCode::from(1));
        }
    }
    match format {
        Format::Json => {
            let card = compute_card(&fam).map_err(|e| e.to_string())?;
            let doc = CardDocument::from_card(&card);
            println!("{}", serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?);
        }
        Format::Dot => {
            print!("{}", dot::family_to_dot(&fam, "cluster"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_synth(input: &str) -> Result<ExitCode, String> {
    let fam = parse_family(input)?;
    if !fam.is_compatible() {
        println!("error: family is not mutually compatible");
        return Ok(ExitCode::from(1));
    }
    // stored coefficients apply when the map has no entry
    let g = synthesize(&fam, &BTreeMap::new()).map_err(|e| e.to_string())?;
    if !g.jacobi_defect().is_zero() {
        return Err("internal error: synthesized structure violates Jacobi".to_string());
    }
    let doc = StructureDocument::from_structure(&g);
    println!("{}", serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?);
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check { input } => cmd_check(input),
        Command::Compat { files } => cmd_compat(files, cli.seed),
        Command::Disassemble { input, mode } => cmd_disassemble(input, *mode),
        Command::Classical { kind, n, params, lambda } => {
            cmd_classical(kind, *n, params.as_deref(), lambda.as_deref())
        }
        Command::Clusters { n, format } => cmd_clusters(*n, *format),
        Command::Card { input, format } => cmd_card(input, *format),
        Command::Synth { input } => cmd_synth(input),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
