//! Command-line front end.
//!
//! Exit status: 0 success, 2 invalid input or arguments, 3 a resource cap
//! was hit, 4 the verification suite found a mismatch.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use zq_forcing::census::{census_with_workers, write_csv, MAX_TREE_ORDER};
use zq_forcing::structure::{
    classify, gen_comb, gen_complete_binary, gen_double_star, gen_pick_comb, gen_spider,
    path_graph, Attachment, CombSpec,
};
use zq_forcing::verify::{verify, VerifyConfig};
use zq_forcing::{
    components, emit_graph, parse_graph, Error, Format, GameSolver, Graph, Move, SolverConfig,
    VertexSet, Q,
};

#[derive(Parser)]
#[command(name = "zqforce", version, about = "Exact q-analogue zero forcing numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for census and verify.
    #[arg(long, global = true, env = "ZQ_WORKERS")]
    workers: Option<usize>,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute Z_q of a graph and an optimal first move.
    Compute(GraphArgs),
    /// Compute Z_q and name the family that explains the value.
    Classify(GraphArgs),
    /// Histogram of Z_1 over all trees on n vertices, as CSV.
    Census {
        /// Vertex range, `a..b` inclusive, or a single order.
        #[arg(long)]
        n: String,
    },
    /// Run the cross-validation suite.
    Verify,
    /// Emit a member of a graph family.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        /// `key=value` parameters; see the family list in the README.
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(long, value_parser = parse_format, default_value = "graph6")]
        format: Format,
    },
}

#[derive(Args)]
struct GraphArgs {
    /// Oracle parameter: a non-negative integer or `inf`.
    #[arg(long, value_parser = parse_q)]
    q: Q,
    /// Path to a graph file, `-` for standard input, or the graph text itself.
    #[arg(long)]
    input: String,
    /// Input format; guessed from the text when omitted.
    #[arg(long, value_parser = parse_format)]
    format: Option<Format>,
    /// Maximum number of memoised game states.
    #[arg(long = "cap-states")]
    cap_states: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Spider,
    DoubleStar,
    Binary,
    Comb,
    PickComb,
}

fn parse_q(s: &str) -> Result<Q, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Lib(Error),
    Io(std::io::Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Resource(_) => 3,
                _ => 2,
            })
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(report)) => {
            emit(&cli, &report).ok();
            ExitCode::from(4)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    if let Some(w) = cli.workers {
        if w == 0 {
            return Err(Error::Contract("--workers must be positive".into()).into());
        }
        rayon::ThreadPoolBuilder::new().num_threads(w).build_global().ok();
    }
    let report = match &cli.command {
        Command::Compute(args) => compute(args)?,
        Command::Classify(args) => {
            let g = read_graph(args)?;
            classify(&g, args.q)?.to_string()
        }
        Command::Census { n } => {
            let (lo, hi) = parse_range(n)?;
            let workers = cli.workers.unwrap_or_else(rayon::current_num_threads);
            let rows = census_with_workers(lo, hi, workers)?;
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf)?;
            String::from_utf8(buf).expect("ascii csv")
        }
        Command::Verify => {
            let report = verify(&VerifyConfig::default())?;
            let mut out = String::new();
            for c in &report.checks {
                match &c.mismatch {
                    None => writeln!(out, "ok {} ({} cases)", c.name, c.cases).unwrap(),
                    Some(m) => {
                        writeln!(out, "MISMATCH {}: {}", c.name, m.detail).unwrap();
                        writeln!(out, "counterexample {}", m.graph6()).unwrap();
                    }
                }
            }
            if !report.passed() {
                return Err(Failure::Mismatch(out));
            }
            out
        }
        Command::Generate { family, params, format } => {
            let g = generate(*family, params)?;
            let mut s = emit_graph(&g, *format);
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
    };
    emit(cli, &report)?;
    Ok(())
}

fn emit(cli: &Cli, report: &str) -> std::io::Result<()> {
    match &cli.output {
        Some(path) => std::fs::write(path, report),
        None => std::io::stdout().lock().write_all(report.as_bytes()),
    }
}

fn read_graph(args: &GraphArgs) -> Result<Graph, Failure> {
    let bytes = if args.input == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        buf
    } else if std::path::Path::new(&args.input).is_file() {
        std::fs::read(&args.input)?
    } else {
        // inline text; `;` separates edge-list lines
        args.input.replace(';', "\n").into_bytes()
    };
    let format = args.format.unwrap_or_else(|| {
        if bytes.iter().all(|b| b.is_ascii_digit() || b.is_ascii_whitespace()) {
            Format::EdgeList
        } else {
            Format::Graph6
        }
    });
    Ok(parse_graph(&bytes, format)?)
}

fn compute(args: &GraphArgs) -> Result<String, Failure> {
    let g = read_graph(args)?;
    if g.n() == 0 {
        return Err(Error::Contract("graph must have at least one vertex".into()).into());
    }
    let mut config = SolverConfig::new(args.q);
    if let Some(cap) = args.cap_states {
        if cap == 0 {
            return Err(Error::Contract("--cap-states must be positive".into()).into());
        }
        config = config.with_state_limit(cap);
    }
    let mut total = 0;
    let mut first = None;
    for comp in components(&g, &g.vertex_set()) {
        let (h, map) = g.induced_subgraph(&comp);
        let mut solver = GameSolver::new(&h, config.clone())?;
        let (value, mv) = solver.best_move(&VertexSet::new(h.n()))?;
        total += value;
        if first.is_none() && mv != Move::Done {
            first = Some(relabel(mv, &map, g.n()));
        }
    }
    let mv = first.unwrap_or(Move::Done);
    Ok(format!("{total}\nfirst-move: {mv}\n"))
}

fn relabel(mv: Move, map: &[usize], n: usize) -> Move {
    match mv {
        Move::Done => Move::Done,
        Move::Token(v) => Move::Token(map[v]),
        Move::Force { from, to } => Move::Force {
            from: map[from],
            to: map[to],
        },
        Move::Announce(cs) => Move::Announce(
            cs.iter()
                .map(|c| VertexSet::from_vertices(n, c.iter().map(|v| map[v])))
                .collect(),
        ),
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || Error::Contract(format!("expected `a..b` or a single order, got `{s}`"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if hi > MAX_TREE_ORDER {
        return Err(Error::Resource(format!("census is capped at {MAX_TREE_ORDER} vertices")).into());
    }
    Ok((lo, hi))
}

fn generate(family: Family, params: &[String]) -> Result<Graph, Failure> {
    let mut kv = HashMap::new();
    for p in params {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| Error::Contract(format!("parameter `{p}` is not key=value")))?;
        kv.insert(k.trim().to_string(), v.trim().to_string());
    }
    let get = |key: &str| -> Result<&str, Error> {
        kv.get(key)
            .map(String::as_str)
            .ok_or_else(|| Error::Contract(format!("missing parameter `{key}`")))
    };
    let num = |key: &str| -> Result<usize, Error> {
        get(key)?
            .parse()
            .map_err(|_| Error::Contract(format!("parameter `{key}` must be a number")))
    };
    let comb_spec = || -> Result<CombSpec, Error> {
        let teeth = match kv.get("teeth").map(String::as_str) {
            None | Some("") => Vec::new(),
            Some(list) => list
                .split(',')
                .map(|t| {
                    let (a, l) = t.split_once(':').ok_or_else(|| {
                        Error::Contract(format!("tooth `{t}` is not anchor:length"))
                    })?;
                    match (a.trim().parse(), l.trim().parse()) {
                        (Ok(a), Ok(l)) => Ok((a, l)),
                        _ => Err(Error::Contract(format!("tooth `{t}` is not anchor:length"))),
                    }
                })
                .collect::<Result<_, _>>()?,
        };
        Ok(CombSpec {
            spine: num("spine")?,
            teeth,
        })
    };
    let g = match family {
        Family::Path => path_graph(num("n")?),
        Family::Spider => gen_spider(num("k")?)?,
        Family::DoubleStar => gen_double_star(num("a")?, num("b")?)?,
        Family::Binary => {
            let d = num("d")?;
            gen_complete_binary(u32::try_from(d).unwrap_or(u32::MAX))?
        }
        Family::Comb => gen_comb(&comb_spec()?)?,
        Family::PickComb => {
            let pair = get("pair")?;
            let (u, v) = pair
                .split_once(',')
                .and_then(|(u, v)| Some((u.trim().parse().ok()?, v.trim().parse().ok()?)))
                .ok_or_else(|| Error::Contract(format!("pair `{pair}` is not u,v")))?;
            let attach = get("attach")?;
            let attachment = match attach.split_once(':') {
                Some(("path", l)) => l.parse().ok().map(Attachment::Path),
                Some(("zigzag", m)) => m.parse().ok().map(Attachment::Zigzag),
                _ => None,
            }
            .ok_or_else(|| {
                Error::Contract(format!("attach `{attach}` is not path:LEN or zigzag:M"))
            })?;
            gen_pick_comb(&comb_spec()?, (u, v), attachment)?
        }
    };
    Ok(g)
}
