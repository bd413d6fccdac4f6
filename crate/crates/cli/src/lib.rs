//! Command-line front end for `frobrel`.
//!
//! Exit codes: 0 on success, 1 when an axiom fails, a cross-validation
//! mismatches or a candidate cannot be decomposed, 2 on usage, parse and
//! bound errors.

pub mod file;
pub mod spec;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use frobrel::{
    brute_force_search, build_biproduct, check_duality, classical_elements, comonoid_subobjects,
    cross_validate, decompose, enumerate_classical_structures, enumerate_special_frobenius,
    quantum_structure, quotient_by_iso, verify_structure, ClassRow, FrobeniusCandidate, Rel,
    SearchConfig, Verdict,
};
use serde_json::{json, Value};
use thiserror::Error;

pub use file::{StructureFile, FILE_N_LIMIT};
pub use spec::parse_structure_spec;

/// Largest carrier `enumerate` will list.
pub const ENUMERATE_LIMIT: usize = 40;

#[derive(Debug, Parser)]
#[command(
    name = "frobrel",
    version,
    about = "Classical structures in the category of relations"
)]
pub struct Cli {
    /// Output style.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every axiom of a structure file.
    Verify { file: PathBuf },
    /// Write the structure induced by a disjoint union of groups.
    Build {
        /// Blocks separated by ';', each a comma list of cyclic orders or S3, D4, Q8.
        #[arg(long, allow_hyphen_values = true)]
        groups: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List the classical structures on n elements up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Also allow non-abelian groups (n <= 8).
        #[arg(long)]
        special: bool,
    },
    /// Search every structure on n labeled elements.
    BruteForce {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        no_commutative: bool,
        /// Maximum number of search nodes.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Split a structure into its groups.
    Decompose { file: PathBuf },
    /// Print the induced copairing and check the snake equations.
    Quantum { file: PathBuf },
    /// List the classical elements.
    Elements { file: PathBuf },
    /// List the comonoid subobjects of dimension m.
    Subobjects {
        file: PathBuf,
        #[arg(long)]
        m: usize,
    },
    /// Compare the exhaustive search with the enumeration.
    CrossValidate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    #[error("--groups {spec:?}: {message}")]
    GroupSpec { spec: String, message: String },
    #[error("{0}")]
    Bound(String),
    #[error(transparent)]
    Engine(#[from] frobrel::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(
                frobrel::Error::NotSpecialFrobenius { .. } | frobrel::Error::TheoremViolation(_),
            ) => 1,
            _ => 2,
        }
    }
}

/// What a command produced: both renderings and the exit code.
struct Report {
    human: String,
    machine: Value,
    code: i32,
}

impl Report {
    fn ok(human: String, machine: Value) -> Self {
        Report {
            human,
            machine,
            code: 0,
        }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            let text = match cli.format {
                Format::Human => report.human,
                Format::Machine => {
                    let mut s = serde_json::to_string_pretty(&report.machine)
                        .expect("json values serialize");
                    s.push('\n');
                    s
                }
            };
            if out.write_all(text.as_bytes()).is_err() {
                return 2;
            }
            report.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Verify { file } => verify(&load(file)?),
        Command::Build { groups, output } => build(groups, output.as_deref()),
        Command::Enumerate { n, special } => enumerate(*n, *special),
        Command::BruteForce {
            n,
            no_commutative,
            budget,
        } => brute_force(*n, !no_commutative, *budget),
        Command::Decompose { file } => decomposition(&load(file)?),
        Command::Quantum { file } => quantum(&load(file)?),
        Command::Elements { file } => elements(&load(file)?),
        Command::Subobjects { file, m } => subobjects(&load(file)?, *m),
        Command::CrossValidate { n, budget } => cross_validation(*n, *budget),
    }
}

fn load(path: &Path) -> Result<FrobeniusCandidate, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    let file = StructureFile::parse(&text).map_err(|message| CliError::Parse {
        path: shown.clone(),
        message,
    })?;
    file.to_candidate().map_err(|e| CliError::Parse {
        path: shown,
        message: e.to_string(),
    })
}

fn fmt_pairs(pairs: &[(usize, usize)]) -> String {
    let items: Vec<_> = pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
    format!("{{{}}}", items.join(","))
}

fn rel_pairs(r: &Rel) -> Vec<(usize, usize)> {
    r.pairs().collect()
}

fn fmt_table(triples: &[(usize, usize, usize)]) -> String {
    let items: Vec<_> = triples
        .iter()
        .map(|(x, y, z)| format!("{x}.{y}={z}"))
        .collect();
    items.join(" ")
}

fn verify(c: &FrobeniusCandidate) -> Result<Report, CliError> {
    let report = verify_structure(c);
    let mut human = String::new();
    writeln!(human, "n = {}", report.n).unwrap();
    if report.empty_carrier {
        human.push_str("empty carrier: every axiom holds vacuously\n");
    }
    for (name, verdict) in report.entries() {
        match verdict {
            Verdict::Pass => writeln!(human, "{name:<20} pass").unwrap(),
            Verdict::Fail(ws) => {
                writeln!(human, "{name:<20} FAIL").unwrap();
                for w in ws {
                    writeln!(human, "    {w}").unwrap();
                }
            }
        }
    }
    let classical = report.is_classical();
    if classical {
        human.push_str("classical structure\n");
    } else if report.is_special_frobenius() {
        human.push_str("special Frobenius algebra, not commutative\n");
    } else {
        writeln!(human, "not a special Frobenius algebra").unwrap();
    }
    let machine = json!({ "classical": classical, "report": report });
    Ok(Report {
        human,
        machine,
        code: if classical { 0 } else { 1 },
    })
}

fn build(groups: &str, output: Option<&Path>) -> Result<Report, CliError> {
    let spec = parse_structure_spec(groups).map_err(|message| CliError::GroupSpec {
        spec: groups.to_string(),
        message,
    })?;
    if spec.n() > FILE_N_LIMIT {
        return Err(CliError::Bound(format!(
            "--groups {groups:?}: carrier size {} exceeds the limit of {FILE_N_LIMIT}",
            spec.n()
        )));
    }
    let c = build_biproduct(&spec);
    let text = StructureFile::from_candidate(&c).render();
    match output {
        None => Ok(Report {
            human: text.clone(),
            machine: Value::String(text),
            code: 0,
        }),
        Some(path) => {
            std::fs::write(path, &text).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            Ok(Report::ok(
                format!("wrote {spec} (n = {}) to {}\n", c.n(), path.display()),
                json!({ "spec": spec.to_string(), "n": c.n(), "file": path.display().to_string() }),
            ))
        }
    }
}

fn enumerate(n: usize, special: bool) -> Result<Report, CliError> {
    let specs = if special {
        enumerate_special_frobenius(n)?
    } else {
        if n > ENUMERATE_LIMIT {
            return Err(CliError::Bound(format!(
                "--n {n} exceeds the enumeration limit of {ENUMERATE_LIMIT}"
            )));
        }
        enumerate_classical_structures(n)
    };
    let names: Vec<String> = specs.iter().map(|s| s.to_string()).collect();
    let mut human = String::new();
    for name in &names {
        writeln!(human, "{name}").unwrap();
    }
    writeln!(human, "total: {}", names.len()).unwrap();
    let machine = json!({ "n": n, "special": special, "count": names.len(), "structures": names });
    Ok(Report::ok(human, machine))
}

fn class_lines(classes: &[ClassRow]) -> String {
    let mut human = String::new();
    for row in classes {
        writeln!(
            human,
            "{}  class size {}  bot = {}  nabla: {}",
            row.spec,
            row.class_size,
            row.unit,
            fmt_table(&row.representative)
        )
        .unwrap();
    }
    human
}

fn brute_force(n: usize, commutative: bool, budget: Option<u64>) -> Result<Report, CliError> {
    let found = brute_force_search(SearchConfig {
        n,
        require_commutative: commutative,
        node_budget: budget,
    })?;
    let mut classes = Vec::new();
    for (rep, class_size) in quotient_by_iso(&found)? {
        classes.push(ClassRow {
            representative: rep.triples(),
            unit: rep.bot().clone(),
            class_size,
            spec: decompose(&rep)?.spec,
        });
    }
    let mut human = format!(
        "{} labeled structures in {} isomorphism classes\n",
        found.len(),
        classes.len()
    );
    human.push_str(&class_lines(&classes));
    let machine = json!({
        "n": n,
        "commutative": commutative,
        "candidates": found.len(),
        "classes": classes,
    });
    Ok(Report::ok(human, machine))
}

fn decomposition(c: &FrobeniusCandidate) -> Result<Report, CliError> {
    let d = decompose(c)?;
    let mut human = format!("{}\n", d.spec);
    for b in &d.blocks {
        writeln!(human, "block {}  unit {}  {}", b.elements, b.unit, b.group).unwrap();
    }
    let machine = json!({ "spec": d.spec.to_string(), "decomposition": d });
    Ok(Report::ok(human, machine))
}

fn quantum(c: &FrobeniusCandidate) -> Result<Report, CliError> {
    let q = quantum_structure(c);
    let eta = q.pairs();
    let duality = check_duality(&q);
    let mut human = format!("η = {}\n", fmt_pairs(&eta));
    match &duality {
        Verdict::Pass => human.push_str("duality: pass\n"),
        Verdict::Fail(ws) => {
            human.push_str("duality: FAIL\n");
            for w in ws {
                writeln!(human, "    {w}").unwrap();
            }
        }
    }
    let code = if duality.passed() { 0 } else { 1 };
    let machine = json!({ "n": q.n(), "eta": eta, "duality": duality });
    Ok(Report {
        human,
        machine,
        code,
    })
}

fn elements(c: &FrobeniusCandidate) -> Result<Report, CliError> {
    let els = classical_elements(c)?;
    let mut human = String::new();
    for e in &els {
        writeln!(human, "{e}").unwrap();
    }
    writeln!(human, "total: {}", els.len()).unwrap();
    let machine = json!({ "count": els.len(), "elements": els });
    Ok(Report::ok(human, machine))
}

fn subobjects(c: &FrobeniusCandidate, m: usize) -> Result<Report, CliError> {
    let subs: Vec<Vec<(usize, usize)>> = comonoid_subobjects(c, m)?.iter().map(rel_pairs).collect();
    let mut human = String::new();
    for s in &subs {
        writeln!(human, "{}", fmt_pairs(s)).unwrap();
    }
    writeln!(human, "total: {}", subs.len()).unwrap();
    let machine = json!({ "m": m, "count": subs.len(), "subobjects": subs });
    Ok(Report::ok(human, machine))
}

fn cross_validation(n: usize, budget: Option<u64>) -> Result<Report, CliError> {
    let cv = cross_validate(n, budget)?;
    let mut human = format!(
        "n = {}: {} labeled structures, {} classes, {} enumerated\n",
        cv.n,
        cv.candidates,
        cv.classes.len(),
        cv.enumerated.len()
    );
    human.push_str(&class_lines(&cv.classes));
    if cv.matches() {
        human.push_str("match\n");
    } else {
        for m in &cv.mismatches {
            writeln!(human, "mismatch: {m}").unwrap();
        }
    }
    let code = if cv.matches() { 0 } else { 1 };
    let machine = serde_json::to_value(&cv).expect("json values serialize");
    Ok(Report {
        human,
        machine,
        code,
    })
}
