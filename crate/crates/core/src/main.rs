use chromabound::bounds::{self, parse_rational, rat_to_f64, render_decimal, sweep_csv};
use chromabound::constructions::{build, ConstructionKind, ConstructionSpec, EgCore};
use chromabound::edgelist::{parse_edge_list, write_edge_list};
use chromabound::graph6::{encode_graph6, parse_graph6};
use chromabound::oracle;
use chromabound::threshold::{chromatic_threshold, verify_witness, ThresholdWitness};
use chromabound::zykov::{symmetrize, DegreeMode};
use chromabound::Graph;
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "chromabound", version, about = "Edge-density bounds, constructions, and oracles for H-free graphs", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// machine-readable JSON output
    #[arg(long, global = true)]
    json: bool,
    /// worker threads for enumeration-heavy commands
    #[arg(long, global = true, default_value_t = 4)]
    workers: usize,
    /// seed for randomized corpora
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// write primary output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    EdgeList,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Current,
    Frozen,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a bound curve at one point
    Bounds {
        #[arg(long)]
        theorem: u8,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        delta: String,
    },
    /// Evaluate a bound curve over a rational grid, as CSV
    Sweep {
        #[arg(long)]
        theorem: u8,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        step: String,
    },
    /// Build a tightness construction and report its density
    Construct {
        #[command(subcommand)]
        kind: ConstructCmd,
    },
    /// Classify the chromatic threshold of a graph
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
    },
    /// Run Zykov symmetrization Z(G|A)
    Symmetrize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
        /// comma-separated vertex set A
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value = "current")]
        mode: Mode,
    },
    /// Run a verification oracle
    Verify {
        #[command(subcommand)]
        statement: VerifyCmd,
    },
}

#[derive(Parser, Clone)]
struct ConstructArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    delta: String,
    /// target total vertex count
    #[arg(long)]
    scale: usize,
    /// circle-core size (bh kinds)
    #[arg(long)]
    core_size: Option<usize>,
    /// circle-core angular slack (bh kinds)
    #[arg(long, default_value_t = 0.1)]
    eps: f64,
    /// eg core: c5 | petersen | grotzsch | path to a graph file
    #[arg(long)]
    core: Option<String>,
    /// output graph format
    #[arg(long, value_enum, default_value = "edge-list")]
    format: GraphFormat,
}

#[derive(Subcommand)]
enum ConstructCmd {
    BhStar(ConstructArgs),
    BhStarStar(ConstructArgs),
    Eg(ConstructArgs),
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Turan-join edge bound over all small labeled graphs
    LemmaBasic {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
    },
    /// three-part edge bound over all small labeled graphs
    LemmaXyz {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long)]
        r: usize,
    },
    /// bounded chromatic number above the degree threshold
    Aes {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long)]
        r: usize,
    },
    /// symmetrization properties on a seeded random corpus
    Zykov {
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
    },
    /// quadratic-program bound over grids and exact points
    Claim {
        /// comma-separated r values
        #[arg(long, default_value = "4,5,6,7,8")]
        r_set: String,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = 1e-3)]
        grid_step: f64,
    },
}

fn read_graph(path: &PathBuf, format: Option<GraphFormat>) -> chromabound::Result<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| chromabound::GraphError::EdgeList(format!("cannot read {path:?}: {e}")))?;
    let format = format.unwrap_or_else(|| {
        let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
        let looks_numeric = {
            let fields: Vec<&str> = first.split_whitespace().collect();
            fields.len() == 2 && fields.iter().all(|f| f.chars().all(|c| c.is_ascii_digit()))
        };
        if looks_numeric { GraphFormat::EdgeList } else { GraphFormat::Graph6 }
    });
    match format {
        GraphFormat::EdgeList => parse_edge_list(&text),
        GraphFormat::Graph6 => parse_graph6(text.trim()),
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => {
            print!("{content}");
            if !content.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Bounds { theorem, r, delta } => {
            let d = parse_rational(&delta).map_err(|e| e.to_string())?;
            let eval = match theorem {
                1 => bounds::f1(r, &d),
                2 => bounds::f2(r, &d),
                t => return Err(format!("unknown theorem {t}")),
            }
            .map_err(|e| e.to_string())?;
            let content = if cli.json {
                serde_json::json!({
                    "theorem": theorem,
                    "r": r,
                    "delta": d.to_string(),
                    "value": eval.value.to_string(),
                    "value_f64": rat_to_f64(&eval.value),
                    "regime": eval.regime.to_string(),
                })
                .to_string()
            } else {
                format!("{} ({}), regime={}", eval.value, render_decimal(&eval.value, 3), eval.regime)
            };
            emit(&cli.out, &content).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Sweep { theorem, r, from, to, step } => {
            let parse = |s: &str| parse_rational(s).map_err(|e| e.to_string());
            let rows = bounds::sweep(theorem, r, &parse(&from)?, &parse(&to)?, &parse(&step)?)
                .map_err(|e| e.to_string())?;
            let content = if cli.json {
                let rows: Vec<_> = rows
                    .iter()
                    .map(|row| {
                        serde_json::json!({
                            "delta": row.delta.to_string(),
                            "value": row.value.to_string(),
                            "regime": row.regime.to_string(),
                        })
                    })
                    .collect();
                serde_json::to_string_pretty(&rows).unwrap()
            } else {
                sweep_csv(&rows)
            };
            emit(&cli.out, &content).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Construct { kind } => {
            let (kind, args) = match kind {
                ConstructCmd::BhStar(a) => (ConstructionKind::BhStar, a),
                ConstructCmd::BhStarStar(a) => (ConstructionKind::BhStarStar, a),
                ConstructCmd::Eg(a) => (ConstructionKind::Eg, a),
            };
            let delta = parse_rational(&args.delta).map_err(|e| e.to_string())?;
            let mut spec = ConstructionSpec::new(kind, args.r, delta, args.scale);
            if let Some(m) = args.core_size {
                spec.core_size = m;
            }
            spec.eps = args.eps;
            if let Some(core) = &args.core {
                spec.eg_core = Some(match core.as_str() {
                    "c5" => EgCore::C5,
                    "petersen" => EgCore::Petersen,
                    "grotzsch" => EgCore::Grotzsch,
                    path => EgCore::External(
                        read_graph(&PathBuf::from(path), None).map_err(|e| e.to_string())?,
                    ),
                });
            }
            let built = build(&spec).map_err(|e| e.to_string())?;
            if let Some(path) = &cli.out {
                let text = match args.format {
                    GraphFormat::EdgeList => write_edge_list(&built.graph),
                    GraphFormat::Graph6 => {
                        let mut s = encode_graph6(&built.graph).map_err(|e| e.to_string())?;
                        s.push('\n');
                        s
                    }
                };
                std::fs::write(path, text).map_err(|e| e.to_string())?;
            }
            let rep = &built.report;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(rep).unwrap());
            } else {
                println!(
                    "{} r={} delta={} n={} edges={} min_degree={} density={:.6} target={} deviation={:.6} omega={}",
                    rep.kind, rep.r, rep.delta, rep.n, rep.edges, rep.min_degree, rep.density,
                    rep.target_exact, rep.deviation, rep.clique_number
                );
            }
            Ok(0)
        }
        Command::Classify { input, format } => {
            let g = read_graph(&input, format).map_err(|e| e.to_string())?;
            let class = chromatic_threshold(&g).map_err(|e| e.to_string())?;
            if !verify_witness(&g, &class).map_err(|e| e.to_string())? {
                return Err("internal error: classifier witness failed re-verification".into());
            }
            let r = class.r;
            let witness_text = match &class.witness {
                ThresholdWitness::RNearAcyclic(w) => format!(
                    "{r}-near-acyclic: delete {:?}, independent set {:?} + forest {:?}",
                    w.deleted_sets, w.remainder.independent_set, w.remainder.forest_part
                ),
                ThresholdWitness::ForestInFamily(f) => {
                    let name = if f.n() == 2 && f.edge_count() == 1 {
                        "K2".to_string()
                    } else {
                        format!("on {} vertices with {} edges", f.n(), f.edge_count())
                    };
                    format!("forest {name} in decomposition family; not {r}-near-acyclic")
                }
                ThresholdWitness::NoForest => {
                    format!("no forest in decomposition family; not {r}-near-acyclic")
                }
            };
            let content = if cli.json {
                serde_json::json!({
                    "chi": r,
                    "delta_chi": class.value.to_string(),
                    "witness": witness_text,
                })
                .to_string()
            } else {
                format!("chi={r}, delta_chi={}, witness={witness_text}", class.value)
            };
            emit(&cli.out, &content).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Symmetrize { input, format, set, mode } => {
            let g = read_graph(&input, format).map_err(|e| e.to_string())?;
            let a: Vec<usize> = set
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<usize>().map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?;
            let mode = match mode {
                Mode::Current => DegreeMode::Current,
                Mode::Frozen => DegreeMode::Frozen,
            };
            let z = symmetrize(&g, &a, mode).map_err(|e| e.to_string())?;
            let content = if cli.json {
                serde_json::json!({
                    "n": z.n(),
                    "edges_before": g.edge_count(),
                    "edges_after": z.edge_count(),
                    "graph": write_edge_list(&z),
                })
                .to_string()
            } else {
                write_edge_list(&z)
            };
            emit(&cli.out, &content).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Verify { statement } => {
            let report = match statement {
                VerifyCmd::LemmaBasic { n_max, r, t } => {
                    oracle::verify_lemma_basic(n_max, r, t, cli.workers)
                }
                VerifyCmd::LemmaXyz { n_max, r } => oracle::verify_lemma_xyz(n_max, r, cli.workers),
                VerifyCmd::Aes { n_max, r } => oracle::verify_aes(n_max, r, cli.workers),
                VerifyCmd::Zykov { trials } => {
                    oracle::verify_symmetrization(trials, cli.seed, cli.workers)
                }
                VerifyCmd::Claim { r_set, samples, grid_step } => {
                    let rs: Vec<usize> = r_set
                        .split(',')
                        .filter(|s| !s.trim().is_empty())
                        .map(|s| s.trim().parse::<usize>().map_err(|e| e.to_string()))
                        .collect::<Result<_, _>>()?;
                    oracle::verify_claim_sweep(&rs, samples, grid_step)
                }
            }
            .map_err(|e| e.to_string())?;
            let content = if cli.json {
                serde_json::to_string_pretty(&report).unwrap()
            } else {
                format!(
                    "{}: {} ({} instances, {} violations, {} equality witnesses, {} ms)\ncorpus: {}",
                    report.statement,
                    if report.pass { "PASS" } else { "FAIL" },
                    report.instances_checked,
                    report.violation_count,
                    report.equality_count,
                    report.wall_time_ms,
                    report.corpus
                )
            };
            emit(&cli.out, &content).map_err(|e| e.to_string())?;
            Ok(if report.pass { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
