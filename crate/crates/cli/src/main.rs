use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sgd_harness::{
    to_svg, verify_all, verify_eq1, verify_ineq, verify_oplus, verify_square, verify_theta_n, Suite,
};
use spatial_knots::constructors::{
    build_oplus, build_theta, build_theta_n, connected_sum, delete_vertical, double_diagram,
    resolve_nodes, KnotSpec,
};
use spatial_knots::diagram::{crossing_matrix, parse_sgd, serialize_sgd, Vertex};
use spatial_knots::gamma::{extremal_enumeration, find_bicoloured_triangle, gamma};
use spatial_knots::gauss::{find_partition, GaussCode};
use spatial_knots::invariants::{identify, jones};
use spatial_knots::moves::{random_corpus, simplify};
use spatial_knots::{Error, Result, SpatialDiagram};

#[derive(Parser)]
#[command(
    name = "sgd",
    version,
    about = "Build, analyse and check knot and theta-curve diagrams"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct a diagram.
    Build {
        what: BuildKind,
        #[command(flatten)]
        p: Params,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print data derived from a diagram.
    Analyze { what: AnalyzeKind, input: PathBuf },
    /// Check crossing-number statements on constructed diagrams.
    Verify {
        what: VerifyKind,
        #[command(flatten)]
        p: Params,
        /// Check this diagram instead of the constructed one (eq1, ineq, theta-n).
        #[arg(long)]
        input: Option<PathBuf>,
        /// Embed the .sgd of every diagram checked.
        #[arg(long)]
        full: bool,
    },
    /// Search Reidemeister and vertex-slide moves for fewer crossings.
    /// Without an input, runs on a random corpus built from --seed.
    Simplify {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Corpus size when no input is given.
        #[arg(long, default_value_t = 20)]
        count: usize,
        /// Most random moves per corpus diagram.
        #[arg(long, default_value_t = 8)]
        moves: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Replace each node by crossing-free arcs, giving a knot diagram.
    Resolve {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Name a knot diagram by its Jones polynomial.
    Identify { input: PathBuf },
    /// Largest graph on n blue and n red vertices without a bicoloured triangle.
    Extremal {
        #[arg(long)]
        n: usize,
    },
    ExportSvg {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Params {
    /// Table name such as 3_1, m5_2 or 3_1#4_1, or a path to a .sgd file.
    #[arg(long, default_value = "3_1")]
    k1: String,
    #[arg(long, default_value = "4_1")]
    k2: String,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, default_value_t = 1)]
    i: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildKind {
    Sum,
    Theta,
    ThetaN,
    Double,
    Oplus,
    #[value(name = "G")]
    G,
}

#[derive(Clone, Copy, ValueEnum)]
enum AnalyzeKind {
    Matrix,
    Gamma,
    Faces,
    Gauss,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    Eq1,
    Ineq,
    ThetaN,
    Square,
    Oplus,
    All,
}

fn knot(s: &str) -> Result<KnotSpec> {
    let p = Path::new(s);
    if p.extension().is_some_and(|e| e == "sgd") || p.exists() {
        Ok(KnotSpec::Diagram(read(p)?))
    } else {
        KnotSpec::from_str(s)
    }
}

fn read(p: &Path) -> Result<SpatialDiagram> {
    parse_sgd(&std::fs::read_to_string(p)?)
}

fn write(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => Ok(std::fs::write(p, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn build(what: BuildKind, p: &Params) -> Result<SpatialDiagram> {
    let (k1, k2) = (knot(&p.k1)?, knot(&p.k2)?);
    match what {
        BuildKind::Sum => connected_sum(&k1.diagram()?, &k2.diagram()?),
        BuildKind::Theta => build_theta(&k1, &k2),
        BuildKind::ThetaN => build_theta_n(p.n, &k1, &k2),
        BuildKind::Double => double_diagram(&connected_sum(&k1.diagram()?, &k2.diagram()?)?, p.n),
        BuildKind::Oplus => build_oplus(p.n, p.k, &k1, &k2),
        BuildKind::G => delete_vertical(&build_oplus(p.n, p.k, &k1, &k2)?, p.i),
    }
}

fn analyze(what: AnalyzeKind, d: &SpatialDiagram) -> Result<String> {
    Ok(match what {
        AnalyzeKind::Matrix => format!("{}\n", crossing_matrix(d)?),
        AnalyzeKind::Gamma => {
            let g = gamma(d)?;
            let tri = match find_bicoloured_triangle(&g) {
                Some([a, b, c]) => format!("({a},{b},{c})"),
                None => "none".into(),
            };
            format!(
                "vertices {}\nedges {} {g}\ncomplete {}\nbicoloured triangle {tri}\n",
                g.vertices()
                    .iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
                g.edge_count(),
                g.is_complete()
            )
        }
        AnalyzeKind::Faces => {
            let mut s = String::new();
            for (i, f) in d.faces().iter().enumerate() {
                let vs: Vec<String> = f
                    .darts
                    .iter()
                    .map(|&h| match d.vertex(h) {
                        Vertex::Crossing(c) => format!("c{}", c.0),
                        Vertex::Node(n) => format!("n{}", n.0),
                    })
                    .collect();
                s.push_str(&format!("face {i} len {}: {}\n", f.len(), vs.join(" ")));
            }
            let chi: Vec<String> = d
                .euler_characteristics()
                .iter()
                .map(|c| c.to_string())
                .collect();
            s.push_str(&format!("euler {}\n", chi.join(" ")));
            s
        }
        AnalyzeKind::Gauss => {
            let g = GaussCode::from_diagram(d)?;
            let part = match find_partition(&g) {
                Some(p) => format!("{} {}", p.first, p.second),
                None => "none".into(),
            };
            format!("{g}\npartition {part}\n")
        }
    })
}

fn verify(what: VerifyKind, p: &Params, input: &Option<PathBuf>) -> Result<Suite> {
    let (k1, k2) = (knot(&p.k1)?, knot(&p.k2)?);
    let given = input.as_deref().map(read).transpose()?;
    match what {
        VerifyKind::Eq1 => verify_eq1(&given.map_or_else(|| build_theta(&k1, &k2), Ok)?, &k1, &k2),
        VerifyKind::Ineq => {
            verify_ineq(&given.map_or_else(|| build_theta(&k1, &k2), Ok)?, &k1, &k2)
        }
        VerifyKind::ThetaN => verify_theta_n(
            &given.map_or_else(|| build_theta_n(p.n, &k1, &k2), Ok)?,
            &k1,
            &k2,
            p.n,
        ),
        VerifyKind::Square => verify_square(&k1, &k2, p.n),
        VerifyKind::Oplus => verify_oplus(p.n, p.k, p.i, &k1, &k2),
        VerifyKind::All => verify_all(&k1, &k2, p.n, p.k),
    }
}

fn print_suite(s: &Suite, full: bool) {
    for n in &s.notes {
        println!("# {n}");
    }
    for r in &s.reports {
        if full {
            print!("{}", r.full());
        } else {
            println!("{r}");
        }
    }
    let fails = s.reports.iter().filter(|r| !r.pass).count();
    println!("# {} statements, {} failed", s.reports.len(), fails);
}

fn run(cmd: Cmd) -> Result<bool> {
    match cmd {
        Cmd::Build { what, p, output } => {
            write(&output, &serialize_sgd(&build(what, &p)?))?;
            Ok(true)
        }
        Cmd::Analyze { what, input } => {
            print!("{}", analyze(what, &read(&input)?)?);
            Ok(true)
        }
        Cmd::Verify {
            what,
            p,
            input,
            full,
        } => {
            let s = verify(what, &p, &input)?;
            print_suite(&s, full);
            Ok(s.all_pass())
        }
        Cmd::Simplify {
            input,
            budget,
            depth,
            seed,
            count,
            moves,
            output,
        } => match input {
            Some(path) => {
                let d = read(&path)?;
                let r = simplify(&d, budget, depth);
                eprintln!(
                    "crossings {} -> {} explored {}{}",
                    d.num_crossings(),
                    r.crossings,
                    r.explored,
                    if r.budget_exhausted {
                        " (budget exhausted)"
                    } else {
                        ""
                    }
                );
                for m in &r.trace {
                    eprintln!("  {m}");
                }
                write(&output, &serialize_sgd(&r.best))?;
                Ok(true)
            }
            None => {
                let mut all = true;
                for e in random_corpus(seed, count, moves)? {
                    let r = simplify(&e.diagram, budget, depth);
                    let ok = r.crossings == 0;
                    all &= ok;
                    println!(
                        "{} moves {} crossings {} -> {} explored {} {}",
                        e.name,
                        e.trace.len(),
                        e.diagram.num_crossings(),
                        r.crossings,
                        r.explored,
                        if ok { "PASS" } else { "FAIL" }
                    );
                }
                Ok(all)
            }
        },
        Cmd::Resolve { input, output } => {
            write(&output, &serialize_sgd(&resolve_nodes(&read(&input)?)?))?;
            Ok(true)
        }
        Cmd::Identify { input } => {
            let d = read(&input)?;
            println!("{}", identify(&d)?);
            println!("jones {}", jones(&d)?);
            Ok(true)
        }
        Cmd::Extremal { n } => {
            let r = extremal_enumeration(n)?;
            println!("n, max_edges, bound_3n2/2-n, witness_edge_list");
            println!("{}", r.table_row());
            println!("max={}", r.max_edges_without_bicoloured_triangle);
            println!(
                "bound attained by a triangle-free graph: {}",
                if r.bound_attained() { "yes" } else { "no" }
            );
            Ok(true)
        }
        Cmd::ExportSvg { input, output } => {
            write(&output, &to_svg(&read(&input)?))?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Internal(_) => 1,
                _ => 2,
            })
        }
    }
}
