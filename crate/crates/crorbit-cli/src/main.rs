//! Command line front end: parse orbit documents, run analyses, emit
//! human-readable or JSON reports, and host the brute-force oracle suite.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crorbit::oracle::{run_oracle, OracleCheck, OracleOutcome};
use crorbit::realform::catalog;
use crorbit::report::{AnalysisReport, OrbitDocument, ENUMERATION_LIMIT};
use crorbit::Error;

#[derive(Parser)]
#[command(
    name = "crorbit",
    version,
    about = "Exact CR invariants of real-form orbits in complex flag manifolds"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct DocArg {
    /// Path to an orbit document (JSON), or `-` for stdin.
    doc: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis report for an orbit document.
    Analyze(DocArg),
    /// Fundamental and weakly nondegenerate reductions, and the weakening.
    Reduce(DocArg),
    /// The reduction tower down to the real core.
    Core(DocArg),
    /// Fundamental group of the orbit and of its real core.
    Pi1(DocArg),
    /// The space of algebraic arc components.
    Arc(DocArg),
    /// Exhaustive brute-force verification at small rank.
    Oracle {
        #[command(flatten)]
        doc: DocArg,
        /// One of: parabolicity, reductions-minimality,
        /// chamber-independence, arc-invariance, all.
        #[arg(long, default_value = "all")]
        check: String,
    },
    /// List built-in real forms, or show one entry as JSON.
    Catalog {
        /// Name of a single entry to print.
        name: Option<String>,
        /// Write every entry as `<name>.json` into a directory.
        #[arg(long)]
        export: Option<PathBuf>,
    },
}

fn read_doc(arg: &DocArg) -> Result<OrbitDocument, Error> {
    let text = if arg.doc.as_os_str() == "-" {
        use std::io::Read;
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Schema(format!("cannot read stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(&arg.doc)
            .map_err(|e| Error::Schema(format!("cannot read {}: {e}", arg.doc.display())))?
    };
    OrbitDocument::from_json(&text)
}

fn signature(sig: &[usize]) -> String {
    if sig.is_empty() {
        "{}".to_string()
    } else {
        format!(
            "{{{}}}",
            sig.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

fn print_analysis(r: &AnalysisReport) {
    println!(
        "orbit: {} / {}  flag type {}",
        r.dynkin,
        r.real_form,
        signature(&r.flag_type)
    );
    if !r.cayley.is_empty() {
        println!("cayley roots: {:?}", r.cayley);
    }
    let kind = if r.totally_real {
        "totally real"
    } else if r.totally_complex {
        "totally complex"
    } else {
        "mixed"
    };
    println!("CR dim {}  CR codim {}  ({kind})", r.cr_dim, r.cr_codim);
    println!(
        "isotropy dims: n {}  l {}  s {}  z {}",
        r.isotropy.dim_n, r.isotropy.dim_l, r.isotropy.dim_s, r.isotropy.dim_z
    );
    println!(
        "fundamental: {}  holomorphically nondegenerate: {}  strictly nondegenerate: {}  maximal CR: {}",
        r.is_fundamental,
        r.is_holomorphically_nondegenerate,
        r.is_strictly_nondegenerate,
        r.is_maximal_cr
    );
    println!(
        "fundamental reduction {}  weak reduction {}  weakening {}",
        signature(&r.fundamental_reduction_flag_type),
        signature(&r.weak_reduction_flag_type),
        signature(&r.weakening_flag_type)
    );
    print_trace(r);
    print_pi1(r);
    print_arc(r);
    println!(
        "euler characteristic of the ambient flag manifold: {}",
        r.euler_ambient_flag
    );
}

fn print_trace(r: &AnalysisReport) {
    println!(
        "real core: {} reached at iteration {}",
        signature(&r.core_flag_type),
        r.core_iteration
    );
    for stage in &r.trace {
        println!(
            "  [{}] flag type {}  CR dim {}  CR codim {}",
            match stage.tag {
                crorbit::StageTag::Initial => "initial",
                crorbit::StageTag::WeakReduction => "weak reduction",
                crorbit::StageTag::Weakening => "weakening",
                crorbit::StageTag::Core => "core",
            },
            signature(&stage.flag_type),
            stage.cr_dim,
            stage.cr_codim
        );
    }
}

fn print_pi1(r: &AnalysisReport) {
    let p = &r.pi1_core;
    println!(
        "pi1(core): generators {:?} killed {:?} invariant factors {:?}",
        p.survivors, p.killed, p.invariant_factors
    );
    let s = &r.pi1_orbit;
    if s.kernel_words.is_empty() && s.index == 1 {
        println!("pi1(orbit): the whole group (index 1)");
    } else {
        println!(
            "pi1(orbit): subgroup generated by [{}], index {}, invariant factors {:?}",
            s.kernel_words.join(", "),
            s.index,
            s.subgroup_invariant_factors
        );
    }
    println!(
        "fiber components of orbit -> core: {} (cartan heuristic ok: {})",
        r.fiber_components_to_core, r.cartan_heuristic_ok
    );
}

fn print_arc(r: &AnalysisReport) {
    println!(
        "arc space: flag type {}  relation to core: {:?}  chamber condition: {:?}",
        signature(&r.arc.flag_type),
        r.arc.report.relation,
        r.arc.report.kj_condition
    );
}

fn run(cli: &Cli) -> Result<(), Error> {
    match &cli.command {
        Command::Analyze(doc) => {
            let report = crorbit::analyze(&read_doc(doc)?)?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                print_analysis(&report);
            }
        }
        Command::Reduce(doc) => {
            let report = crorbit::analyze(&read_doc(doc)?)?;
            if cli.json {
                let out = serde_json::json!({
                    "schema_version": report.schema_version,
                    "fundamental_reduction": report.fundamental_reduction_flag_type,
                    "weak_reduction": report.weak_reduction_flag_type,
                    "weakening": report.weakening_flag_type,
                    "is_fundamental": report.is_fundamental,
                    "is_holomorphically_nondegenerate": report.is_holomorphically_nondegenerate,
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!(
                    "fundamental reduction {}  (fundamental: {})",
                    signature(&report.fundamental_reduction_flag_type),
                    report.is_fundamental
                );
                println!(
                    "weak reduction {}  (holomorphically nondegenerate: {})",
                    signature(&report.weak_reduction_flag_type),
                    report.is_holomorphically_nondegenerate
                );
                println!("weakening {}", signature(&report.weakening_flag_type));
            }
        }
        Command::Core(doc) => {
            let report = crorbit::analyze(&read_doc(doc)?)?;
            if cli.json {
                let out = serde_json::json!({
                    "schema_version": report.schema_version,
                    "core_flag_type": report.core_flag_type,
                    "core_iteration": report.core_iteration,
                    "trace": report.trace,
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                print_trace(&report);
            }
        }
        Command::Pi1(doc) => {
            let report = crorbit::analyze(&read_doc(doc)?)?;
            if cli.json {
                let out = serde_json::json!({
                    "schema_version": report.schema_version,
                    "pi1_core": report.pi1_core,
                    "pi1_orbit": report.pi1_orbit,
                    "fiber_components_to_core": report.fiber_components_to_core,
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                print_pi1(&report);
            }
        }
        Command::Arc(doc) => {
            let report = crorbit::analyze(&read_doc(doc)?)?;
            if cli.json {
                let out = serde_json::json!({
                    "schema_version": report.schema_version,
                    "flag_type": report.arc.flag_type,
                    "report": report.arc.report,
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                print_arc(&report);
            }
        }
        Command::Oracle { doc, check } => {
            let (rs, spec) = read_doc(doc)?.resolve()?;
            let checks: Vec<OracleCheck> = if check == "all" {
                OracleCheck::ALL.to_vec()
            } else {
                vec![OracleCheck::parse(check)
                    .ok_or_else(|| Error::Schema(format!("unknown oracle check `{check}`")))?]
            };
            let mut outcomes: Vec<OracleOutcome> = Vec::new();
            let mut failed = false;
            for c in checks {
                let out = run_oracle(&rs, &spec.conj, c, ENUMERATION_LIMIT)?;
                failed |= !out.passed;
                outcomes.push(out);
            }
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&outcomes).unwrap());
            } else {
                for out in &outcomes {
                    match &out.counterexample {
                        None => println!("{}: pass ({} cases)", out.check.name(), out.cases),
                        Some(ce) => println!("{}: FAIL - {}", out.check.name(), ce),
                    }
                }
            }
            if failed {
                return Err(Error::Inconsistent("oracle check failed".into()));
            }
        }
        Command::Catalog { name, export } => {
            if let Some(dir) = export {
                std::fs::create_dir_all(dir)
                    .map_err(|e| Error::Schema(format!("cannot create {}: {e}", dir.display())))?;
                for e in catalog::builtin() {
                    let path = dir.join(format!("{}.json", e.name));
                    std::fs::write(&path, serde_json::to_string_pretty(e).unwrap()).map_err(
                        |er| Error::Schema(format!("cannot write {}: {er}", path.display())),
                    )?;
                }
                println!(
                    "wrote {} entries to {}",
                    catalog::builtin().len(),
                    dir.display()
                );
            } else if let Some(name) = name {
                let entry = catalog::find(name)?;
                println!("{}", serde_json::to_string_pretty(&entry).unwrap());
            } else if cli.json {
                let names: Vec<&str> = catalog::builtin().iter().map(|e| e.name.as_str()).collect();
                println!("{}", serde_json::to_string_pretty(&names).unwrap());
            } else {
                for e in catalog::builtin() {
                    println!(
                        "{:12} {:6} {}",
                        e.name,
                        e.dynkin.to_string(),
                        e.cor_id_list
                            .as_deref()
                            .map(|f| format!("list ({f})"))
                            .unwrap_or_default()
                    );
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
