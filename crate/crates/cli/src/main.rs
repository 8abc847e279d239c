use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use xcomp_core::acceptance::{run_acceptance_suite, AcceptanceConfig};
use xcomp_core::compose::{compose_group, distillation_budget, partition_instances, BudgetParameters, CompositionRegistry};
use xcomp_core::engine::SolverRegistry;
use xcomp_core::fpt::turing_kernel_clique_by_vc;
use xcomp_core::transform::TransformRegistry;
use xcomp_core::verify::run_verification;
use xcomp_core::{
    Certificate, ComposeError, InstanceError, ProblemInstance, SolveError, TransformError, VerifyError, WitnessError,
};

#[derive(Parser)]
#[command(name = "xcomp", version, about = "Cross-compositions, parameter transformations and exact oracles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance and print YES/NO with the optimum value.
    Solve {
        #[arg(long, default_value = "oracle")]
        engine: String,
        file: PathBuf,
    },
    /// Compose instances of one equivalence class into a single instance.
    Compose {
        #[arg(long)]
        construction: String,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Apply a named transformation to one instance.
    Transform {
        #[arg(long)]
        rule: String,
        file: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Write the clique-by-vertex-cover instance list to a directory.
    TuringKernel {
        file: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Print the equivalence classes of a list of instances.
    Partition {
        #[arg(long)]
        construction: String,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Print the distillation budget t(s) and delta.
    Budget {
        #[arg(long)]
        b: f64,
        #[arg(long)]
        c: f64,
        #[arg(long)]
        d: f64,
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        s: f64,
    },
    /// Check a construction against the oracles on seeded random batches.
    Verify {
        #[arg(long)]
        construction: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the acceptance suite.
    Accept {
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

/// A message plus the process exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn other(message: impl Display) -> Self {
        Failure { code: 1, message: message.to_string() }
    }

    fn witness(e: WitnessError) -> Self {
        Failure { code: 3, message: e.to_string() }
    }
}

impl From<InstanceError> for Failure {
    fn from(e: InstanceError) -> Self {
        match e {
            InstanceError::Parse(p) => Failure { code: 2, message: format!("parse error: {p}") },
            InstanceError::Witness(w) => Failure::witness(w),
        }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Witness(w) => Failure::witness(w),
            other => Failure::other(other),
        }
    }
}

impl From<ComposeError> for Failure {
    fn from(e: ComposeError) -> Self {
        match e {
            ComposeError::Witness(w) => Failure::witness(w),
            other => Failure::other(other),
        }
    }
}

impl From<TransformError> for Failure {
    fn from(e: TransformError) -> Self {
        match e {
            TransformError::Witness(w) => Failure::witness(w),
            other => Failure::other(other),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        Failure::other(e)
    }
}

fn read_instance(path: &Path) -> Result<ProblemInstance, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::other(format!("{}: {e}", path.display())))?;
    ProblemInstance::parse(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::other(format!("{}: {e}", path.display())))
}

fn join<T: Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Solve { engine, file } => {
            let registry = SolverRegistry::default();
            let solver = registry
                .get(&engine)
                .ok_or_else(|| Failure::other(format!("unknown engine `{engine}` (known: {})", registry.ids().join(", "))))?;
            let inst = read_instance(&file)?;
            let verdict = solver.solve(&inst)?;
            println!("{}", verdict.answer);
            if let Some(v) = verdict.value {
                println!("value {v}");
            }
            match &verdict.witness {
                Some(Certificate::Set(s)) => println!("witness {}", join(&s.to_vec())),
                Some(Certificate::Coloring(c)) => println!("coloring {}", join(c)),
                None => {}
            }
        }
        Command::Compose { construction, files, out } => {
            let registry = CompositionRegistry::default();
            let comp = registry.get(&construction)?;
            let group = files.iter().map(|f| read_instance(f)).collect::<Result<Vec<_>, _>>()?;
            let report = compose_group(comp, &group)?;
            write(&out, &report.instance.serialize())?;
            let mut sidecar = out.clone().into_os_string();
            sidecar.push(".audit");
            write(Path::new(&sidecar), &report.audit.to_text())?;
            print!("{}", report.audit.to_text());
        }
        Command::Transform { rule, file, out } => {
            let registry = TransformRegistry::default();
            let t = registry.get(&rule)?;
            let inst = read_instance(&file)?;
            let result = t.apply(&inst)?;
            write(&out, &result.serialize())?;
            println!("{} -> {} ({} vertices, k={})", inst.kind, result.kind, result.graph.n(), result.parameter().map_or("-".into(), |k| k.to_string()));
        }
        Command::TuringKernel { file, out } => {
            let inst = read_instance(&file)?;
            let list = turing_kernel_clique_by_vc(&inst)?;
            fs::create_dir_all(&out).map_err(|e| Failure::other(format!("{}: {e}", out.display())))?;
            let width = list.len().to_string().len();
            for (i, item) in list.iter().enumerate() {
                write(&out.join(format!("instance-{:0width$}.txt", i + 1)), &item.serialize())?;
            }
            println!("{} instances written to {}", list.len(), out.display());
        }
        Command::Partition { construction, files } => {
            let registry = CompositionRegistry::default();
            let comp = registry.get(&construction)?;
            let group = files.iter().map(|f| read_instance(f)).collect::<Result<Vec<_>, _>>()?;
            for class in partition_instances(comp, &group)? {
                let members: Vec<String> = class.members.iter().map(|&i| files[i].display().to_string()).collect();
                println!("{}: {}", class.key, members.join(" "));
            }
        }
        Command::Budget { b, c, d, eps, s } => {
            let r = distillation_budget(BudgetParameters { b, c, d, epsilon: eps, s }).map_err(Failure::other)?;
            println!("t {}", r.t);
            println!("delta {}", r.delta);
            println!("s^(b+c(d-eps)) {}", r.lhs);
            println!("t^(eps/d-delta) {}", r.rhs);
        }
        Command::Verify { construction, trials, seed, out } => {
            let registry = CompositionRegistry::default();
            let comp = registry.get(&construction)?;
            let report = run_verification(comp, trials, seed, out.as_deref())?;
            print!("{}", report.to_text());
            if !report.passed() {
                return Ok(1);
            }
        }
        Command::Accept { config } => {
            let cfg = match config {
                Some(path) => {
                    let text = fs::read_to_string(&path).map_err(|e| Failure::other(format!("{}: {e}", path.display())))?;
                    AcceptanceConfig::from_toml(&text).map_err(|e| Failure { code: 2, message: e.to_string() })?
                }
                None => AcceptanceConfig::default(),
            };
            let summary = run_acceptance_suite(&cfg);
            print!("{}", summary.to_text());
            return Ok(summary.exit_code() as u8);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
