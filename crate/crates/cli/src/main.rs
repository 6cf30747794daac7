//! `diffclass`: construct groups, print character tables, classify
//! difference classes and scan corpora of `.pgrp` files.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use diffclass_core::classify::{self, THEOREM_IDS};
use diffclass_core::{make, pgrp, FamilySpec, Limits, PermGroup};

/// Exit status: 0 completed, 1 falsified clause or disagreement, 2 input
/// or budget error.
const EXIT_FALSIFIED: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "diffclass", version, about = "Conjugacy classes that are differences of normal subgroups")]
struct Cli {
    /// Write the report to this file instead of standard output.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,

    /// Treat any skipped cross-check as a failure.
    #[arg(long, global = true)]
    strict: bool,

    /// Largest group order for which a character table is computed.
    #[arg(long, global = true)]
    max_order: Option<u128>,

    /// Worker threads for `scan`.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a group from a named family, e.g. `construct dihedral 8`.
    Construct {
        family: String,
        params: Vec<String>,
    },
    /// Print the character table.
    Chartab { path: PathBuf },
    /// Print the full classification report.
    Classify {
        path: PathBuf,
        /// Emit JSON instead of key-value text.
        #[arg(long)]
        json: bool,
    },
    /// Check one theorem on every admissible input of the group.
    Verify { path: PathBuf, theorem: String },
    /// Census over every `.pgrp` file in a directory.
    Scan { dir: PathBuf },
}

/// Failure carrying its exit status.
#[derive(Debug)]
struct Exit {
    code: u8,
    message: String,
}

fn exit_for(e: &anyhow::Error) -> u8 {
    use diffclass_core::Error::*;
    match e.downcast_ref::<diffclass_core::Error>() {
        Some(Disagreement { .. } | Falsified(_) | Internal(_)) => EXIT_FALSIFIED,
        _ => EXIT_INPUT,
    }
}

fn load(path: &Path, cli: &Cli) -> Result<PermGroup> {
    let g = pgrp::read(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(match cli.max_order {
        Some(n) => g.relimited(Limits {
            table_order: n,
            ..*g.limits()
        }),
        None => g,
    })
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.output {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn construct(cli: &Cli, family: &str, params: &[String]) -> Result<Option<Exit>> {
    let mut tokens = vec![family];
    tokens.extend(params.iter().map(String::as_str));
    let spec = FamilySpec::parse_tokens(&tokens)?;
    let g = make(&spec)?;
    let header = vec![format!("family: {spec}"), format!("order: {}", g.order())];
    emit(cli, &pgrp::to_string(&g, &header))?;
    Ok(None)
}

fn chartab(cli: &Cli, path: &Path) -> Result<Option<Exit>> {
    let g = load(path, cli)?;
    let t = g.character_table()?;
    let mut s = String::new();
    writeln!(s, "order {}  exponent {}  Dixon prime {}", t.order, t.exponent, t.dixon_prime)?;
    writeln!(s, "classes {}", t.num_classes())?;
    let cells = |f: &dyn Fn(usize) -> String| -> String {
        (0..t.num_classes()).map(f).collect::<Vec<_>>().join("\t")
    };
    writeln!(s, "size\t{}", cells(&|c| t.classes[c].size.to_string()))?;
    writeln!(s, "elt order\t{}", cells(&|c| t.classes[c].order.to_string()))?;
    writeln!(s, "centralizer\t{}", cells(&|c| t.classes[c].centralizer_order.to_string()))?;
    for (i, chi) in t.irreducibles.iter().enumerate() {
        writeln!(s, "X.{}\t{}", i + 1, cells(&|c| chi.value(c).to_string()))?;
    }
    emit(cli, &s)?;
    Ok(None)
}

fn strict_failure(cli: &Cli, skipped: &[String]) -> Option<Exit> {
    (cli.strict && !skipped.is_empty()).then(|| Exit {
        code: EXIT_INPUT,
        message: format!("strict mode: {} cross-check(s) skipped", skipped.len()),
    })
}

fn classify_cmd(cli: &Cli, path: &Path, json: bool) -> Result<Option<Exit>> {
    let g = load(path, cli)?;
    let r = classify::scan_group(&g)?;
    emit(cli, &if json { r.to_json() + "\n" } else { r.to_text() })?;
    if !r.falsified.is_empty() {
        return Ok(Some(Exit {
            code: EXIT_FALSIFIED,
            message: format!("falsified: {}", r.falsified.join("; ")),
        }));
    }
    Ok(strict_failure(cli, &r.skipped))
}

fn verify_cmd(cli: &Cli, path: &Path, id: &str) -> Result<Option<Exit>> {
    if !THEOREM_IDS.contains(&id) {
        return Ok(Some(Exit {
            code: EXIT_INPUT,
            message: format!("unknown theorem id {id:?}; expected one of {}", THEOREM_IDS.join(", ")),
        }));
    }
    let g = load(path, cli)?;
    let v = classify::verify(&g, id)?;
    let mut s = String::new();
    writeln!(s, "theorem {}: evaluated {}", v.theorem, v.evaluated)?;
    if let Some(n) = &v.note {
        writeln!(s, "{n}")?;
    }
    for o in v.outcomes.iter().filter(|o| o.applicable) {
        write!(s, "{o}")?;
    }
    let status = if v.falsified() { "FALSIFIED" } else { "ok" };
    writeln!(s, "status: {status}")?;
    emit(cli, &s)?;
    if v.falsified() {
        return Ok(Some(Exit {
            code: EXIT_FALSIFIED,
            message: format!("{id} falsified"),
        }));
    }
    Ok(strict_failure(cli, &v.skipped()))
}

fn scan_cmd(cli: &Cli, dir: &Path) -> Result<Option<Exit>> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        pool = pool.num_threads(n);
    }
    let pool = pool.build()?;
    let r = pool.install(|| classify::scan_directory(dir))?;
    emit(cli, &r.render())?;
    if r.has_bug() {
        return Ok(Some(Exit {
            code: EXIT_FALSIFIED,
            message: "a checker failed on at least one group".into(),
        }));
    }
    let budget: Vec<String> = r.failed.iter().map(|f| f.file.clone()).collect();
    Ok(strict_failure(cli, &budget))
}

fn run(cli: &Cli) -> Result<Option<Exit>> {
    match &cli.command {
        Command::Construct { family, params } => construct(cli, family, params),
        Command::Chartab { path } => chartab(cli, path),
        Command::Classify { path, json } => classify_cmd(cli, path, *json),
        Command::Verify { path, theorem } => verify_cmd(cli, path, theorem),
        Command::Scan { dir } => scan_cmd(cli, dir),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(e)) => {
            eprintln!("diffclass: {}", e.message);
            ExitCode::from(e.code)
        }
        Err(e) => {
            eprintln!("diffclass: {e:#}");
            ExitCode::from(exit_for(&e))
        }
    }
}
