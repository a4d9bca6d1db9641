//! `schurlab`: build groups from JSON specs, compute multipliers and run the
//! verification suites. JSON goes to stdout, a summary to stderr.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use schurlab::catalog;
use schurlab::cohomology::{h2, schur_multiplier};
use schurlab::group::CayleyTable;
use schurlab::lab::{self, CentralProductInstance, VerificationReport};
use schurlab::spec::GroupSpec;
use schurlab::subgroup::{center, derived_subgroup};
use schurlab::Error;

const EXIT_FAILED: u8 = 1;
const EXIT_MALFORMED: u8 = 2;
const EXIT_SIZE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "schurlab", version, about = "Schur multipliers of finite groups and central products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a group from a spec and print its table and basic invariants.
    Build {
        spec: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute M(G), or H²(G, ℤ/m) with --modulus.
    Multiplier {
        spec: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        modulus: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite, or every instance check on one central product.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::Theory)]
        suite: Suite,
        /// Central-product spec to check instead of a suite.
        #[arg(long)]
        instance: Option<PathBuf>,
        /// Include instances of order above 100.
        #[arg(long)]
        slow: bool,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
        jobs: u64,
        /// Coefficient modulus for instance checks; a multiple of |G|.
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        modulus: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-read a saved report list and summarize it.
    Report { file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Theorem checks on the standard instances, the worked examples and the Jones bound.
    Theory,
    /// Multipliers against the bar-complex oracle.
    Oracle,
    All,
}

type Task = Box<dyn Fn() -> Vec<VerificationReport> + Send + Sync>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_of(&e))
        }
    }
}

fn exit_code_of(e: &Error) -> u8 {
    match e {
        Error::SizeGuard { .. } => EXIT_SIZE,
        Error::InvalidSpec(_)
        | Error::InvalidTable(_)
        | Error::InvalidAmalgam(_)
        | Error::InvalidPresentation(_)
        | Error::NotSolvable => EXIT_MALFORMED,
        _ => EXIT_FAILED,
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Build { spec, out } => {
            let spec = read_spec(&spec)?;
            let start = Instant::now();
            let g = spec.build()?;
            let v = json!({
                "spec": spec.label(),
                "order": g.order(),
                "exponent": g.exponent(),
                "abelian": g.is_abelian(),
                "center_order": center(&g).order(),
                "derived_order": derived_subgroup(&g).order(),
                "table": g.canonical_serialization(),
                "ms": start.elapsed().as_millis() as u64,
            });
            emit(&v, out.as_deref())?;
            eprintln!("{}: order {}", spec.label(), g.order());
            Ok(0)
        }
        Command::Multiplier { spec, modulus, out } => {
            let spec = read_spec(&spec)?;
            let start = Instant::now();
            let g = spec.build()?;
            let m = schur_multiplier(&g)?;
            let mut v = json!({"spec": spec.label(), "order": g.order(), "multiplier": m.invariants()});
            if let Some(modulus) = modulus {
                v["modulus"] = json!(modulus);
                v["h2"] = json!(h2(&g, modulus)?.structure().invariants());
            }
            v["ms"] = json!(start.elapsed().as_millis() as u64);
            emit(&v, out.as_deref())?;
            eprintln!("{}: M(G) = {:?}", spec.label(), m.invariants());
            Ok(0)
        }
        Command::Verify { suite, instance, slow, jobs, modulus, out } => {
            let tasks = match instance {
                Some(path) => {
                    let mut inst = read_spec(&path)?.instance()?;
                    if let Some(m) = modulus {
                        inst = inst.with_modulus(m)?;
                    }
                    instance_tasks(vec![inst])
                }
                None => suite_tasks(suite, slow, modulus)?,
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs as usize)
                .build()
                .map_err(|e| Error::Precondition(e.to_string()))?;
            let reports: Vec<VerificationReport> = pool.install(|| tasks.par_iter().flat_map(|t| t()).collect());
            emit(&serde_json::to_value(&reports).expect("reports serialize"), out.as_deref())?;
            Ok(summarize(&reports))
        }
        Command::Report { file } => {
            let text = fs::read_to_string(&file).map_err(|e| Error::InvalidSpec(format!("{}: {e}", file.display())))?;
            let reports: Vec<VerificationReport> =
                serde_json::from_str(&text).map_err(|e| Error::InvalidSpec(format!("malformed report: {e}")))?;
            emit(&serde_json::to_value(&reports).expect("reports serialize"), None)?;
            Ok(summarize(&reports))
        }
    }
}

fn read_spec(path: &Path) -> Result<GroupSpec, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::InvalidSpec(format!("{}: {e}", path.display())))?;
    GroupSpec::parse(&text)
}

fn emit(v: &Value, out: Option<&Path>) -> Result<(), Error> {
    let text = serde_json::to_string(v).expect("values serialize");
    println!("{text}");
    if let Some(path) = out {
        fs::write(path, &text).map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn summarize(reports: &[VerificationReport]) -> u8 {
    let mut failed = Vec::new();
    for r in reports {
        eprintln!("{:<5} {:<12} {} ({} ms)", if r.passed() { "ok" } else { "FAIL" }, r.claim, r.instance, r.ms);
        if !r.passed() {
            failed.push(format!("{} [{}]: {}", r.claim, r.instance, r.failures().join(", ")));
        }
    }
    eprintln!("{} reports, {} failed", reports.len(), failed.len());
    for f in &failed {
        eprintln!("failed: {f}");
    }
    if failed.is_empty() {
        0
    } else {
        EXIT_FAILED
    }
}

fn guarded(
    claim: &'static str,
    instance: String,
    f: impl Fn() -> schurlab::Result<Vec<VerificationReport>>,
) -> Vec<VerificationReport> {
    f().unwrap_or_else(|e| vec![VerificationReport::from_error(claim, instance, &e)])
}

fn instance_tasks(instances: Vec<CentralProductInstance>) -> Vec<Task> {
    instances
        .into_iter()
        .map(Arc::new)
        .map(|inst| -> Task { Box::new(move || guarded("instance", inst.describe(), || lab::check_instance(&inst))) })
        .collect()
}

fn suite_tasks(suite: Suite, slow: bool, modulus: Option<u64>) -> Result<Vec<Task>, Error> {
    let mut tasks: Vec<Task> = Vec::new();
    if matches!(suite, Suite::Oracle | Suite::All) {
        let groups = if slow { catalog::jones_catalog()? } else { catalog::oracle_catalog()? };
        let limit = if slow { schurlab::homology::ORACLE_SLOW_LIMIT } else { schurlab::homology::ORACLE_LIMIT };
        for (name, g) in groups.into_iter().filter(|(_, g)| g.order() <= limit) {
            tasks.push(Box::new(move || {
                guarded("oracle", name.clone(), || Ok(vec![lab::check_oracle(&name, &g, slow)?]))
            }));
        }
    }
    if matches!(suite, Suite::Theory | Suite::All) {
        tasks.push(Box::new(move || guarded("examples", "p=3, n=1".into(), || lab::run_examples(3, 1, slow))));
        tasks.push(Box::new(|| {
            guarded("extraspecial", "2^(1+4)".into(), || Ok(vec![lab::check_corollary_extraspecial(2, 2)?]))
        }));
        if slow {
            tasks.push(Box::new(|| {
                guarded("extraspecial", "3^(1+4)".into(), || Ok(vec![lab::check_corollary_extraspecial(3, 2)?]))
            }));
        }
        for (name, g) in catalog::jones_catalog()? {
            tasks.push(jones_task(name, g));
        }
        let mut instances = lab::standard_instances(slow)?;
        if let Some(m) = modulus {
            instances = instances.into_iter().map(|i| i.with_modulus(m)).collect::<schurlab::Result<_>>()?;
        }
        tasks.extend(instance_tasks(instances));
    }
    Ok(tasks)
}

fn jones_task(name: String, g: Arc<CayleyTable>) -> Task {
    Box::new(move || guarded("jones", name.clone(), || Ok(vec![lab::check_jones_all(&g, &name)?])))
}
