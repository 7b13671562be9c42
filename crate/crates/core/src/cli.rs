//! The `omega` command line.
//!
//! [`run`] parses arguments and returns the captured streams and exit code
//! instead of touching the process, so the binary, the examples and the
//! tests all drive the same code. Exit codes: 0 success, 1 a verification
//! check failed, 2 usage or input error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::census::{analyze_pair, facet_census};
use crate::error::{Error, Result};
use crate::graph2p::{enumerate_cliques, find_clique, to_2cnf, Assignment, Graph2P, GraphJson};
use crate::limits::Limits;
use crate::neighborly::{certify_all_pairs, edge_certificate, edges_via_hull, verify_certificate};
use crate::omega::{
    all_vertices, check_equalities, display_form, full_vertices, independent_family,
    omega_dimension, reduced_dim, reduced_vertices, vertex_from_assignment, Equality,
};
use crate::polyhedra::format::{
    parse_text, write_hrep, write_vrep, HRepJson, Representation, VRepJson,
};
use crate::polyhedra::{affine_rank_of, convex_hull_facets, HRep, VRep};
use crate::rational;

#[derive(Parser, Debug)]
#[command(
    name = "omega",
    version,
    about = "Exact computations on the clique polytope Ω_n"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Largest n for commands that walk all 2^n vertices.
    #[arg(long, global = true, env = "OMEGA_MAX_BRUTEFORCE", default_value_t = Limits::default().max_bruteforce)]
    max_bruteforce: usize,
    /// Largest ambient dimension accepted by the hull.
    #[arg(long, global = true, env = "OMEGA_MAX_HULL_DIM", default_value_t = Limits::default().max_hull_dim)]
    max_hull_dim: usize,
    /// Largest point count accepted by the hull.
    #[arg(long, global = true, env = "OMEGA_MAX_HULL_POINTS", default_value_t = Limits::default().max_hull_points)]
    max_hull_points: usize,
    /// Largest n for the LP edge sweep in `verify`.
    #[arg(long, global = true, env = "OMEGA_MAX_LP_EDGE_N", default_value_t = Limits::default().max_lp_edge_n)]
    max_lp_edge_n: usize,
    /// Worker threads; 0 picks the number of CPUs. Output does not depend on it.
    #[arg(long, global = true, env = "OMEGA_JOBS", default_value_t = 0)]
    jobs: usize,
}

impl GlobalArgs {
    fn limits(&self) -> Limits {
        Limits {
            max_bruteforce: self.max_bruteforce,
            max_hull_dim: self.max_hull_dim,
            max_hull_points: self.max_hull_points,
            max_census_n: Limits::default().max_census_n,
            max_lp_edge_n: self.max_lp_edge_n,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the vertices of Ω_n as a V-representation.
    Vertices {
        #[arg(long)]
        n: usize,
        /// Use the n(n+1)/2 coordinates y_ij = X_{ij11}, i ≤ j.
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check the defining equalities, the dimension and every edge certificate.
    Verify {
        #[arg(long)]
        n: usize,
    },
    /// Facets of Ω_n in reduced coordinates as an H-representation.
    Hull {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Facet count, incidences and symmetry orbits as JSON.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        orbits: bool,
        /// Permit n above the default census bound (slow).
        #[arg(long)]
        allow_large: bool,
    },
    /// Separating form showing that two vertices span an edge.
    EdgeCert {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: Assignment,
        #[arg(long)]
        b: Assignment,
    },
    /// Whether the six vertices of Ω_3 left after removing a pair form a face.
    FaceTest {
        #[arg(long)]
        n: usize,
        #[arg(long, num_args = 2, value_names = ["A", "B"], required = true)]
        exclude: Vec<Assignment>,
    },
    /// Find (or list) the n-cliques of a graph given as JSON.
    CliqueSolve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        enumerate: bool,
    },
    /// Translate between the V/H text format and JSON, or a graph to DIMACS.
    Convert {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Json,
    Text,
    Dimacs,
}

/// Captured result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs the command line `args`, where `args[0]` is the program name.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput {
                    stderr: text,
                    code: 2,
                    ..Default::default()
                }
            } else {
                CliOutput {
                    stdout: text,
                    ..Default::default()
                }
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.global.jobs)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            return CliOutput {
                stderr: format!(
                    "error: cannot start {} worker threads: {e}\n",
                    cli.global.jobs
                ),
                code: 2,
                ..Default::default()
            }
        }
    };
    let mut out = CliOutput::default();
    let limits = cli.global.limits();
    match pool.install(|| dispatch(&cli.command, limits, &mut out)) {
        Ok(()) => {}
        Err(e) => {
            let _ = writeln!(out.stderr, "error: {e}");
            out.code = match e {
                Error::Verification(_) => 1,
                _ => 2,
            };
        }
    }
    out
}

fn dispatch(cmd: &Command, mut limits: Limits, out: &mut CliOutput) -> Result<()> {
    match cmd {
        Command::Vertices { n, reduced, json } => {
            let v = if *reduced {
                reduced_vertices(*n, &limits)?
            } else {
                full_vertices(*n, &limits)?
            };
            out.stdout = if *json {
                to_json(&VRepJson::from(&v))?
            } else {
                write_vrep(&v)
            };
        }
        Command::Verify { n } => verify(*n, &limits, out)?,
        Command::Hull { n, json } => {
            need_omega(*n)?;
            let h = convex_hull_facets(&reduced_vertices(*n, &limits)?, &limits)?;
            out.stdout = if *json {
                to_json(&HRepJson::from(&h))?
            } else {
                write_hrep(&h)
            };
        }
        Command::Census {
            n,
            orbits,
            allow_large,
        } => {
            if *allow_large {
                limits.max_census_n = limits.max_census_n.max(*n);
                limits.max_hull_points = limits
                    .max_hull_points
                    .max(1usize.checked_shl(*n as u32).unwrap_or(usize::MAX));
                if *n > Limits::default().max_census_n {
                    let _ = writeln!(
                        out.stderr,
                        "warning: census for n = {n} may take minutes or longer"
                    );
                }
            }
            out.stdout = to_json(&facet_census(*n, &limits, *orbits)?)?;
        }
        Command::EdgeCert { n, a, b } => {
            let c = edge_certificate(*n, a, b, &limits)?;
            out.stdout = to_json(&c.to_json())?;
        }
        Command::FaceTest { n, exclude } => face_test(*n, &exclude[0], &exclude[1], out)?,
        Command::CliqueSolve { graph, enumerate } => {
            let text = std::fs::read_to_string(graph)?;
            let g = Graph2P::from_json(&serde_json::from_str::<GraphJson>(&text)?)?;
            if *enumerate {
                let all = enumerate_cliques(&g, &limits)?;
                let _ = writeln!(out.stdout, "cliques: {}", all.len());
                for a in all {
                    let _ = writeln!(out.stdout, "{a}");
                }
            } else {
                out.stdout = match find_clique(&g) {
                    Some(a) => format!("clique: {a}\n"),
                    None => "no clique\n".to_string(),
                };
            }
        }
        Command::Convert { input, to } => {
            let text = std::fs::read_to_string(input)?;
            out.stdout = convert(&text, *to)?;
        }
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string(v)?;
    s.push('\n');
    Ok(s)
}

fn need_omega(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::invalid("--n must be at least 2"));
    }
    Ok(())
}

struct Table {
    rows: Vec<(String, bool, String)>,
}

impl Table {
    fn push(&mut self, check: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.rows.push((check.into(), ok, detail.into()));
    }

    fn render(&self) -> String {
        let w = self
            .rows
            .iter()
            .map(|r| r.0.chars().count())
            .max()
            .unwrap_or(0);
        let mut s = String::new();
        for (check, ok, detail) in &self.rows {
            let pad = w - check.chars().count();
            let _ = writeln!(
                s,
                "{check}{}  {}  {detail}",
                " ".repeat(pad),
                if *ok { "PASS" } else { "FAIL" }
            );
        }
        s
    }
}

fn verify(n: usize, limits: &Limits, out: &mut CliOutput) -> Result<()> {
    need_omega(n)?;
    let mut t = Table { rows: Vec::new() };
    let vertices = all_vertices(n, limits)?;
    let reports: Vec<_> = vertices.iter().map(check_equalities).collect();
    for e in Equality::ALL {
        let bad = reports.iter().map(|r| r.count(e)).sum::<usize>();
        t.push(
            format!("equality {}", e.describe()),
            bad == 0,
            format!(
                "{} vertices x {} instances, {bad} violations",
                vertices.len(),
                e.instances(n)
            ),
        );
    }

    let expected = reduced_dim(n);
    let dim = omega_dimension(n, limits)?;
    t.push(
        "dimension",
        dim == expected,
        format!("{dim}, expected n(n+1)/2 = {expected}"),
    );

    let family = independent_family(n)?;
    let pts = family
        .iter()
        .map(|a| vertex_from_assignment(n, a).map(|v| v.coords().to_vec()))
        .collect::<Result<Vec<_>>>()?;
    let rank = affine_rank_of(&pts)?;
    t.push(
        "independent family",
        rank == expected && family.len() == expected + 1,
        format!("{} vertices, affine rank {rank}", family.len()),
    );

    let certs = certify_all_pairs(n, limits);
    let pairs = (1u64 << n) * ((1u64 << n) - 1) / 2;
    match certs {
        Ok(cs) => {
            let good = cs.iter().filter(|c| verify_certificate(c)).count();
            let low = cs.iter().map(|c| c.min_other.clone()).min();
            t.push(
                "edge certificates",
                good as u64 == pairs,
                format!(
                    "{good}/{pairs} pairs, F = 1 on the pair, min elsewhere {}",
                    low.map_or("-".to_string(), |q| rational::format(&q))
                ),
            );
        }
        Err(Error::Verification(m)) => t.push("edge certificates", false, m),
        Err(e) => return Err(e),
    }

    if n <= limits.max_lp_edge_n {
        let edges = edges_via_hull(n, limits)?;
        t.push(
            "edges by LP face test",
            edges as u64 == pairs,
            format!("{edges}/{pairs} pairs are 1-faces"),
        );
    }

    out.stdout = format!("verify n = {n}\n{}", t.render());
    if t.rows.iter().any(|r| !r.1) {
        out.code = 1;
    }
    Ok(())
}

fn face_test(n: usize, a: &Assignment, b: &Assignment, out: &mut CliOutput) -> Result<()> {
    if n != 3 {
        return Err(Error::invalid("face-test is defined for --n 3 only"));
    }
    let r = analyze_pair(a, b)?;
    let rest: Vec<String> = r
        .other_values
        .iter()
        .map(|(_, v)| rational::format(v))
        .collect();
    let mut s = String::new();
    let _ = writeln!(s, "excluded: {} / {}", r.a, r.b);
    let _ = writeln!(s, "class: {}", r.class.name());
    let _ = writeln!(s, "form: {}", display_form(n, &r.form, "="));
    let _ = writeln!(
        s,
        "values: a = {}, b = {}, remaining = [{}]",
        rational::format(&r.value_a),
        rational::format(&r.value_b),
        rest.join(", ")
    );
    let _ = writeln!(s, "verdict: {}", r.verdict.label());
    out.stdout = s;
    Ok(())
}

fn convert(text: &str, to: Target) -> Result<String> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(trimmed)?;
        if value.get("missing_edges").is_some() {
            let g = Graph2P::from_json(&serde_json::from_value::<GraphJson>(value)?)?;
            return match to {
                Target::Dimacs => Ok(to_2cnf(&g).to_dimacs()),
                _ => Err(Error::invalid("a graph converts only with --to dimacs")),
            };
        }
        if to != Target::Text {
            return Err(Error::invalid("JSON input converts only with --to text"));
        }
        if value.get("points").is_some() {
            let v = VRep::try_from(&serde_json::from_value::<VRepJson>(value)?)?;
            return Ok(write_vrep(&v));
        }
        let h = HRep::try_from(&serde_json::from_value::<HRepJson>(value)?)?;
        return Ok(write_hrep(&h));
    }
    if to != Target::Json {
        return Err(Error::invalid("text input converts only with --to json"));
    }
    match parse_text(text)? {
        Representation::V(v) => to_json(&VRepJson::from(&v)),
        Representation::H(h) => to_json(&HRepJson::from(&h)),
    }
}
