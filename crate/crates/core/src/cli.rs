//! The `snrd` command line.
//!
//! Exit codes: 0 success, 2 parse or validation error, 3 resource limit,
//! 4 audit or theorem failure.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::audit::audit_instance;
use crate::connectivity::{is_strong_fuzzy_cycle, strong_profile, StrongProfile};
use crate::families::{
    cycle_extremal_check, cycle_mus_sum_check, cycle_pattern_labeling, cycle_upper_bound,
    gamma_snr_bipartite, gamma_snr_complete, gamma_snr_universal, path_extremal_necessary,
    path_mus_sum_check, path_upper_bound, CycleProfile, FamilyError, PathProfile,
};
use crate::graph::FuzzyGraph;
use crate::io::json::{graph_to_value, profile_to_value, read_text, solve_result_to_value, FamilyKind};
use crate::io::{generate, plan, read_graph, to_dot, FamilySpec, GenSpec, IoError};
use crate::solvers::{gamma_s, gamma_s_bruteforce, gamma_snr, gamma_snr_bruteforce, SolveError, SolverLimits};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;
pub const EXIT_AUDIT: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "snrd", version, about = "Strong-neighbors Roman domination on fuzzy graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    GammaS,
    GammaSnr,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Strong edges, strong neighbourhoods, mu_s, degrees and universal vertices.
    Analyze {
        file: PathBuf,
        /// Emit Graphviz DOT instead of JSON.
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact gamma_s or gamma_snR with its canonical witness.
    Solve {
        file: PathBuf,
        #[arg(value_enum, default_value = "gamma-snr")]
        which: Which,
        /// Enumerate every candidate instead of branch and bound.
        #[arg(long)]
        brute: bool,
        /// Largest vertex count for --brute (default: SNRD_BRUTE_LIMIT or 15).
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Build a family member from a JSON spec and evaluate its closed forms.
    Family {
        spec: PathBuf,
        /// Also write the constructed graph here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every bound and characterisation on a graph file or random graphs.
    Audit {
        file: Option<PathBuf>,
        /// Generator spec such as `n=8,p=0.5,D=20`.
        #[arg(long, conflicts_with = "file")]
        random: Option<String>,
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long)]
        seed: Option<u64>,
        /// Directory for failing instances.
        #[arg(long, default_value = "snrd-failures")]
        out: PathBuf,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Read the optimal labeling as a relay deployment plan.
    Plan {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Generate a random graph from a spec such as `n=5,topology=cycle`.
    Gen {
        spec: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Input(String),
    Limit(String),
    Audit(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::Limit(_) => EXIT_LIMIT,
            Failure::Audit(_) => EXIT_AUDIT,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Limit(m) | Failure::Audit(m) => m,
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Family(f) => f.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::TooLarge { .. } | SolveError::WeightOverflow => Failure::Limit(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::Solve(s) => s.into(),
            FamilyError::TheoremViolation(_) => Failure::Audit(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Runs `snrd` with `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Analyze { file, dot, out: path } => analyze(&file, dot, path.as_deref(), out),
        Command::Solve { file, which, brute, limit } => solve(&file, which, brute, limit, out),
        Command::Family { spec, out: path } => family(&spec, path.as_deref(), out),
        Command::Audit { file, random, count, seed, out: dir, limit } => {
            audit(file.as_deref(), random.as_deref(), count, seed, &dir, limit, out, err)
        }
        Command::Plan { file, json } => plan_cmd(&file, json, out),
        Command::Gen { spec, seed, out: path } => gen(&spec, seed, path.as_deref(), out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn limits(limit: Option<usize>) -> SolverLimits {
    limit.map_or_else(SolverLimits::from_env, SolverLimits::with_brute_limit)
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Outcome {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn analyze(file: &Path, dot: bool, path: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let g = read_graph(file)?;
    let profile = strong_profile(&g);
    let text = if dot {
        to_dot(&g, &profile, None)
    } else {
        pretty(&profile_to_value(&g, &profile))
    };
    emit(&text, path, out)
}

fn solve(file: &Path, which: Which, brute: bool, limit: Option<usize>, out: &mut dyn Write) -> Outcome {
    let g = read_graph(file)?;
    let profile = strong_profile(&g);
    let limits = limits(limit);
    let res = match (which, brute) {
        (Which::GammaS, false) => gamma_s(&profile)?,
        (Which::GammaS, true) => gamma_s_bruteforce(&profile, &limits)?,
        (Which::GammaSnr, false) => gamma_snr(&profile)?,
        (Which::GammaSnr, true) => gamma_snr_bruteforce(&profile, &limits)?,
    };
    emit(&pretty(&solve_result_to_value(&g, &res)), None, out)
}

struct Report {
    values: Map<String, Value>,
    anchors: Map<String, Value>,
}

impl Report {
    fn put(&mut self, key: &str, anchor: &str, value: impl Into<Value>) {
        self.values.insert(key.into(), value.into());
        if !anchor.is_empty() {
            self.anchors.insert(key.into(), anchor.into());
        }
    }
}

fn family(spec_path: &Path, graph_out: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let spec = FamilySpec::from_json(&read_text(spec_path)?)?;
    let g = spec.build()?;
    if let Some(p) = graph_out {
        crate::io::write_graph(&g, p)?;
    }
    let profile = strong_profile(&g);
    let mut r = Report {
        values: Map::new(),
        anchors: Map::new(),
    };
    r.put("gamma_snr", "exact solver", gamma_snr(&profile)?.value.to_string());
    if let Some(v) = gamma_snr_universal(&profile) {
        r.put("gamma_snr_universal", "2 min{mu_s(v) : v in U_s}", v.to_string());
    }
    match spec.family {
        FamilyKind::Complete => {
            let v = gamma_snr_complete(&g, &profile)?;
            r.put("gamma_snr_complete", "2 min{mu_s(v) : v in V}", v.to_string());
        }
        FamilyKind::Bipartite => {
            let form = gamma_snr_bipartite(&g, &profile)?;
            r.put("gamma_snr_bipartite", "complete bipartite closed form", form.value.to_string());
            r.put("bipartite_case", "", form.case.to_string());
        }
        FamilyKind::Cycle => cycle_report(&g, &profile, &mut r)?,
        FamilyKind::Path => path_report(&g, &profile, &mut r)?,
    }
    let doc = json!({
        "family": spec.family,
        "graph": graph_to_value(&g),
        "values": r.values,
        "anchors": r.anchors,
    });
    emit(&pretty(&doc), None, out)
}

fn cycle_report(g: &FuzzyGraph, profile: &StrongProfile, r: &mut Report) -> Result<(), FamilyError> {
    let strong = is_strong_fuzzy_cycle(g)?;
    r.put("strong_cycle", "at least two edges of minimum weight", strong);
    if !strong {
        return Ok(());
    }
    let c = CycleProfile::new(g, profile)?;
    r.put(
        "cycle_upper_bound",
        "(1 - k/n)(q - (mu_max - mu_min))",
        cycle_upper_bound(&c)?.to_string(),
    );
    let weights = (1..=c.len())
        .map(|m| cycle_pattern_labeling(&c, m).map(|f| Value::from(f.weight().to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    r.put("pattern_weights", "w(f_m), m = 1..n", weights);
    let s = cycle_mus_sum_check(&c)?;
    r.put("mus_sum", "sum mu_s <= q - (mu_max - mu_min)", s.sum.to_string());
    r.put("mus_sum_bound", "", s.bound.to_string());
    r.put("mus_sum_equality", "equality <=> valley", s.equality);
    if c.residue != 0 {
        let e = cycle_extremal_check(&c, profile)?;
        r.put(
            "extremal_condition",
            "gamma_snR = bound <=> at least n - 1 edges weigh mu_min",
            e.condition,
        );
        r.put("bound_attained", "", e.attained);
    }
    Ok(())
}

fn path_report(g: &FuzzyGraph, profile: &StrongProfile, r: &mut Report) -> Result<(), FamilyError> {
    let p = PathProfile::new(g, profile)?;
    let bound = path_upper_bound(&p);
    r.put("path_upper_bound", "(2/3)(q + mu_min + mu_max), n >= 6", bound.value.to_string());
    r.put("in_hypothesis", "", bound.in_hypothesis);
    if p.len() >= 3 {
        let s = path_mus_sum_check(&p)?;
        r.put("mus_sum", "sum mu_s <= q + mu_min", s.sum.to_string());
        r.put("mus_sum_bound", "", s.bound.to_string());
        r.put("mus_sum_equality", "equality <=> shape", s.equality);
    }
    let gamma = gamma_snr(profile)?.value;
    let e = path_extremal_necessary(&p, &gamma)?;
    r.put("bound_attained", "", e.attained);
    r.put(
        "necessary_conditions",
        "mu_s(u1) = mu_s(u2) = mu_s(u_{n-1}) = mu_s(u_n) = mu_max and sum shape",
        e.holds(),
    );
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn audit(
    file: Option<&Path>,
    random: Option<&str>,
    count: u64,
    seed: Option<u64>,
    dir: &Path,
    limit: Option<usize>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let limits = limits(limit);
    let instances: Vec<(String, FuzzyGraph)> = match (file, random) {
        (Some(f), None) => vec![(f.display().to_string(), read_graph(f)?)],
        (None, Some(text)) => {
            let base: GenSpec = text.parse()?;
            let first = seed.unwrap_or(base.seed);
            (0..count)
                .map(|i| {
                    let spec = base.with_seed(first.wrapping_add(i));
                    generate(&spec).map(|g| (format!("random-seed-{}", spec.seed), g))
                })
                .collect::<Result<_, _>>()?
        }
        _ => return Err(Failure::Input("give a graph file or --random".into())),
    };

    let mut failed = 0usize;
    for (name, g) in &instances {
        if g.vertex_count() > limits.brute_force_max_vertices {
            return Err(SolveError::TooLarge {
                n: g.vertex_count(),
                limit: limits.brute_force_max_vertices,
            }
            .into());
        }
        let report = audit_instance(name, g)?;
        writeln!(out, "{}", serde_json::to_string(&report).expect("serializable"))?;
        if !report.passed() {
            failed += 1;
            fs::create_dir_all(dir)?;
            let file_name: String = name
                .chars()
                .map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' })
                .collect();
            let path = dir.join(format!("{file_name}.json"));
            crate::io::write_graph(g, &path)?;
            writeln!(err, "failing instance written to {}", path.display())?;
        }
    }
    writeln!(err, "{} of {} instances passed", instances.len() - failed, instances.len())?;
    if failed > 0 {
        return Err(Failure::Audit(format!("{failed} instance(s) failed")));
    }
    Ok(())
}

fn plan_cmd(file: &Path, as_json: bool, out: &mut dyn Write) -> Outcome {
    let g = read_graph(file)?;
    let p = plan(&g, &strong_profile(&g))?;
    if as_json {
        emit(&pretty(&serde_json::to_value(&p).expect("serializable")), None, out)
    } else {
        Ok(writeln!(out, "{p}")?)
    }
}

fn gen(spec: &str, seed: Option<u64>, path: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let mut spec: GenSpec = spec.parse()?;
    if let Some(s) = seed {
        spec.seed = s;
    }
    let g = generate(&spec)?;
    emit(&crate::io::graph_to_json(&g), path, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failure_codes() {
        let violation: Failure = FamilyError::TheoremViolation("x".into()).into();
        assert_eq!(violation.code(), EXIT_AUDIT);
        let big: Failure = SolveError::TooLarge { n: 20, limit: 15 }.into();
        assert_eq!(big.code(), EXIT_LIMIT);
        let nested: Failure = FamilyError::Solve(SolveError::WeightOverflow).into();
        assert_eq!(nested.code(), EXIT_LIMIT);
        let bad: Failure = FamilyError::NotComplete.into();
        assert_eq!(bad.code(), EXIT_INPUT);
    }
}
