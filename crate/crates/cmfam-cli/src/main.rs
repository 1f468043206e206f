//! Command-line front end.
//!
//! Subcommands: `report` (run the full per-group pipeline and print a text
//! or machine report), `diff-golden` (byte-compare normalized machine
//! reports against the shipped goldens), and `validate` (run the load-time
//! invariants of a bundle file without the full pipeline).
//!
//! Exit codes: 0 success, 1 missing input or usage error, 2 parse error,
//! 3 validation failure, 4 refusal (bad generic Euler families), 5 golden
//! diff failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cmfam::bundles;
use cmfam::report::{diff_reports, machine_report, run_pipeline, text_report};
use cmfam::supersingular::CmCertification;
use cmfam::Error;

#[derive(Parser)]
#[command(
    name = "cmfam",
    about = "Generic Euler and Calogero-Moser families for complex reflection groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Args)]
struct Selection {
    /// Group name, e.g. G4, G25, S6.
    #[arg(long, conflicts_with = "all")]
    group: Option<String>,
    /// Process every group with a bundle in the bundle directory.
    #[arg(long)]
    all: bool,
    /// Directory holding `<group>.group.json` / `.chars.json` / `.rouquier.json`.
    #[arg(long, default_value = "data/bundles")]
    bundles: PathBuf,
    /// Worker threads under --all.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline for a group and print its report.
    Report {
        #[command(flatten)]
        sel: Selection,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Seed for the specialization self-test (0 disables it).
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare machine reports against golden files.
    DiffGolden {
        #[command(flatten)]
        sel: Selection,
        /// Directory holding `<group>.golden` files.
        #[arg(long, default_value = "data/golden")]
        golden: PathBuf,
    },
    /// Validate one bundle file (load-time invariants only).
    Validate {
        /// Path to a .group.json, .chars.json, or .rouquier.json file.
        path: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } => 2,
        Error::Validation(_)
        | Error::Consistency { .. }
        | Error::FingerprintAmbiguity { .. }
        | Error::LabelMismatch
        | Error::DimensionMismatch(_, _) => 3,
        Error::MissingBundle { .. } | Error::Io(_) => 1,
        _ => 3,
    }
}

/// A refusal is reported through the exit code as well.
const EXIT_REFUSAL: u8 = 4;
const EXIT_DIFF: u8 = 5;

fn selected_groups(sel: &Selection) -> Result<Vec<String>, Error> {
    if let Some(g) = &sel.group {
        return Ok(vec![g.clone()]);
    }
    if sel.all {
        let groups = bundles::available_groups(&sel.bundles)?;
        if groups.is_empty() {
            return Err(Error::Io(format!(
                "no group bundles found under {}",
                sel.bundles.display()
            )));
        }
        return Ok(groups);
    }
    Err(Error::Io("pass --group <name> or --all".into()))
}

/// Run `work` over the groups, optionally in parallel, and print the
/// collected outputs in input order.
fn for_groups<F>(groups: &[String], jobs: usize, work: F) -> Result<u8, Error>
where
    F: Fn(&str) -> Result<(String, u8), Error> + Sync,
{
    let jobs = jobs.max(1).min(groups.len().max(1));
    let results: Vec<Result<(String, u8), Error>> = if jobs <= 1 {
        groups.iter().map(|g| work(g)).collect()
    } else {
        let mut results: Vec<Option<Result<(String, u8), Error>>> =
            (0..groups.len()).map(|_| None).collect();
        let next = std::sync::atomic::AtomicUsize::new(0);
        let slots = std::sync::Mutex::new(&mut results);
        std::thread::scope(|scope| {
            for _ in 0..jobs {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                    if i >= groups.len() {
                        break;
                    }
                    let out = work(&groups[i]);
                    slots.lock().unwrap()[i] = Some(out);
                });
            }
        });
        results.into_iter().map(Option::unwrap).collect()
    };
    let mut worst = 0u8;
    for r in results {
        let (text, code) = r?;
        print!("{text}");
        worst = worst.max(code);
    }
    Ok(worst)
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Report { sel, format, seed } => {
            let groups = selected_groups(&sel)?;
            let code = for_groups(&groups, sel.jobs, |name| {
                let out = run_pipeline(&sel.bundles, name)?;
                if seed != 0 {
                    cmfam::report::check_generic_specializations(&out, seed, 10)?;
                }
                let rendered = match format {
                    Format::Text => text_report(&out),
                    Format::Machine => machine_report(&out),
                };
                let code = match &out.cm {
                    CmCertification::Certified(_) => 0,
                    CmCertification::Refusal { .. } => EXIT_REFUSAL,
                };
                Ok((rendered, code))
            })?;
            if code != 0 {
                std::process::exit(code as i32);
            }
            Ok(())
        }
        Command::DiffGolden { sel, golden } => {
            let groups = selected_groups(&sel)?;
            let code = for_groups(&groups, sel.jobs, |name| {
                let golden_path = golden.join(format!("{name}.golden"));
                if !golden_path.exists() {
                    return Err(Error::MissingBundle {
                        group: name.into(),
                        kind: "golden".into(),
                        dir: golden.display().to_string(),
                    });
                }
                let want = std::fs::read_to_string(&golden_path)?;
                let out = run_pipeline(&sel.bundles, name)?;
                let got = machine_report(&out);
                match diff_reports(&want, &got) {
                    None => Ok((format!("{name}: golden diff ok\n"), 0)),
                    Some(d) => Ok((
                        format!(
                            "{name}: DIVERGES at line {}\n  golden: {}\n  got:    {}\n",
                            d.line, d.expected, d.got
                        ),
                        EXIT_DIFF,
                    )),
                }
            })?;
            if code != 0 {
                std::process::exit(code as i32);
            }
            Ok(())
        }
        Command::Validate { path } => validate_bundle(&path),
    }
}

/// Validation entry point: checks the load-time invariants of one bundle,
/// pulling in the sibling bundles it depends on.
fn validate_bundle(path: &Path) -> Result<(), Error> {
    let name = path.file_name().and_then(|s| s.to_str()).unwrap_or("");
    let dir = path.parent().unwrap_or(Path::new("."));
    if let Some(group) = name.strip_suffix(".group.json") {
        let gb: bundles::GroupBundle = bundles::read_json(path)?;
        let g = cmfam::group::GroupData::enumerate(&gb.to_spec()?)?;
        println!(
            "{group}: group bundle ok (order {}, {} classes, {} reflections, {} orbits)",
            g.order,
            g.classes.len(),
            g.reflections.len(),
            g.orbits.len()
        );
        Ok(())
    } else if let Some(group) = name.strip_suffix(".chars.json") {
        let (g, table) = bundles::load_group_and_table(dir, group)?;
        println!(
            "{group}: character bundle ok ({} characters, orthogonality and fake degrees verified, P(1) = {})",
            table.num_chars(),
            g.order
        );
        Ok(())
    } else if let Some(group) = name.strip_suffix(".rouquier.json") {
        let (g, table) = bundles::load_group_and_table(dir, group)?;
        let rq = bundles::load_rouquier(dir, group, &g, &table)?.ok_or_else(|| {
            Error::MissingBundle {
                group: group.into(),
                kind: "rouquier".into(),
                dir: dir.display().to_string(),
            }
        })?;
        println!(
            "{group}: rouquier bundle ok ({} families, {} essential planes)",
            rq.generic_families.num_blocks(),
            rq.essential.len()
        );
        Ok(())
    } else {
        Err(Error::Io(format!(
            "cannot infer bundle kind from file name {name:?} (expected *.group.json, *.chars.json, or *.rouquier.json)"
        )))
    }
}
