use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde_json::{json, Value};

use orbchrom::automorphism::automorphism_group;
use orbchrom::forge::{check_problem1, find_premise, forge, DEFAULT_S_MAX};
use orbchrom::graph::Graph;
use orbchrom::json::{self as j, parse_rational};
use orbchrom::outerplanar::{enumerate_outerplanar, verify_theorem2_with, VerifyConfig};
use orbchrom::perm::{quotient, PermGroup, Permutation};
use orbchrom::poly::{chromatic, orbital_chromatic};
use orbchrom::roots::isolate_real_roots;
use orbchrom::{Error, Rational};

const EXIT_PREMISE: u8 = 2;
const EXIT_EXHAUSTED: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_RESOURCE: u8 = 65;
const EXIT_SOFTWARE: u8 = 70;
const EXIT_IO: u8 = 74;

#[derive(Parser)]
#[command(
    name = "orbchrom",
    version,
    about = "Chromatic and orbital chromatic polynomials of small graphs"
)]
struct Cli {
    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// `cycle:6`, `path:5`, `complete:4`, `hns:2,3`, inline Graph JSON, a
    /// JSON file, or `-` for standard input.
    input: String,
}

#[derive(Args)]
struct GroupArg {
    /// `antipodal`, `rot:k`, `flip:k`, `aut`, `trivial`, or Group JSON
    /// (inline or `@file`). Repeat to combine generators.
    #[arg(long, short, default_value = "aut")]
    group: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic polynomial.
    Chrom(GraphArg),
    /// Orbital chromatic polynomial under a group.
    Orbital {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        group: GroupArg,
    },
    /// Quotient graph by a single automorphism.
    Quotient {
        #[command(flatten)]
        graph: GraphArg,
        /// `antipodal`, `rot:k`, `flip:k`, or an image array.
        #[arg(long, short)]
        perm: String,
    },
    /// Automorphism group.
    Aut(GraphArg),
    /// Real roots of the chromatic polynomial, or of the orbital one with `--group`.
    Roots {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, short)]
        group: Vec<String>,
        /// Largest width of an isolating interval, as `p/q`.
        #[arg(long, default_value = "1/1024")]
        width: String,
    },
    /// Build a graph whose orbital chromatic polynomial has a root above every chromatic root.
    Forge {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, default_value_t = DEFAULT_S_MAX)]
        smax: usize,
    },
    /// Whether the orbital chromatic roots are bounded by the largest chromatic root.
    CheckBound {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        group: GroupArg,
    },
    /// Connected outerplanar graphs up to isomorphism, one per line.
    Outerplanar(CorpusArgs),
    /// Root sets and bound verdicts for every subgroup over an outerplanar corpus, one report per line.
    VerifyT2 {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Verify this graph instead of a corpus.
        #[arg(long)]
        graph: Option<String>,
        /// Largest subgroup order enumerated.
        #[arg(long, default_value_t = 5040)]
        max_subgroup_order: usize,
    },
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long, default_value_t = 6)]
    max_vertices: usize,
    /// Shuffle the corpus with this seed before applying `--limit`.
    #[arg(long)]
    seed: Option<u64>,
    /// Keep only the first this many graphs.
    #[arg(long)]
    limit: Option<usize>,
}

struct Failure {
    code: u8,
    message: String,
    body: Option<Value>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Premise(_) => EXIT_PREMISE,
            Error::Exhausted { .. } => EXIT_EXHAUSTED,
            Error::ResourceLimit { .. } => EXIT_RESOURCE,
            Error::Inconsistent(_) => EXIT_SOFTWARE,
            _ => EXIT_USAGE,
        };
        let body = match &e {
            Error::Exhausted { s_max, trajectory } => Some(json!({
                "error": "exhausted",
                "s_max": s_max,
                "trajectory": trajectory.iter().map(|(s, v)| json!([s, v])).collect::<Vec<_>>(),
            })),
            _ => None,
        };
        Failure {
            code,
            message: e.to_string(),
            body,
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
        body: None,
    }
}

fn read_json(text: &str) -> Result<Value, Failure> {
    serde_json::from_str(text).map_err(|e| usage(format!("invalid JSON: {e}")))
}

fn read_source(spec: &str) -> Result<String, Failure> {
    if spec == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("reading standard input: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(spec).map_err(|e| usage(format!("reading {spec}: {e}")))
}

fn family_args(args: &str) -> Result<Vec<usize>, Failure> {
    args.split(',')
        .map(|a| {
            a.trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("bad size {a:?}")))
        })
        .collect()
}

fn parse_graph(spec: &str) -> Result<Graph, Failure> {
    let spec = spec.trim();
    if spec.starts_with('{') {
        return Ok(j::graph_from_json(&read_json(spec)?)?);
    }
    if let Some((family, args)) = spec.split_once(':') {
        let sizes = family_args(args)?;
        let graph = match (family, sizes.as_slice()) {
            ("cycle", [n]) => Graph::cycle(*n),
            ("path", [n]) => Graph::path(*n),
            ("complete", [n]) => Graph::complete(*n),
            ("empty", [n]) => Graph::empty(*n),
            ("hns", [n, s]) => Graph::clique_star(*n, *s),
            _ => return Err(usage(format!("unknown family {spec:?}"))),
        };
        return Ok(graph?);
    }
    Ok(j::graph_from_json(&read_json(&read_source(spec)?)?)?)
}

fn named_permutation(spec: &str, n: usize) -> Result<Option<Permutation>, Failure> {
    let perm = if spec == "antipodal" {
        if !n.is_multiple_of(2) {
            return Err(usage("antipodal needs an even number of vertices"));
        }
        Permutation::rotation(n, n / 2)
    } else if let Some(k) = spec.strip_prefix("rot:") {
        let k: usize = k
            .parse()
            .map_err(|_| usage(format!("bad rotation {spec:?}")))?;
        Permutation::rotation(n, k % n.max(1))
    } else if let Some(k) = spec.strip_prefix("flip:") {
        let k: usize = k
            .parse()
            .map_err(|_| usage(format!("bad reflection {spec:?}")))?;
        Permutation::reflection(n).compose(&Permutation::rotation(n, k % n.max(1)))
    } else {
        return Ok(None);
    };
    Ok(Some(perm))
}

fn parse_permutation(spec: &str, n: usize) -> Result<Permutation, Failure> {
    match named_permutation(spec, n)? {
        Some(p) => Ok(p),
        None => Ok(j::permutation_from_json(&read_json(spec)?)?),
    }
}

fn parse_group(specs: &[String], g: &Graph) -> Result<PermGroup, Failure> {
    let n = g.num_vertices();
    let mut gens = Vec::new();
    let mut groups = Vec::new();
    for spec in specs {
        match spec.as_str() {
            "aut" => groups.push(automorphism_group(g)?),
            "trivial" => groups.push(PermGroup::trivial(n)),
            s => match named_permutation(s, n)? {
                Some(p) => gens.push(p),
                None => {
                    let text = match s.strip_prefix('@') {
                        Some(path) => read_source(path)?,
                        None => s.to_string(),
                    };
                    groups.push(j::group_from_json(&read_json(&text)?)?);
                }
            },
        }
    }
    for group in &groups {
        gens.extend(group.generators());
    }
    Ok(PermGroup::close(n, &gens)?)
}

fn parse_width(s: &str) -> Result<Rational, Failure> {
    Ok(parse_rational(s)?)
}

fn corpus(args: &CorpusArgs) -> Result<Vec<(usize, Graph)>, Failure> {
    let mut graphs: Vec<(usize, Graph)> = enumerate_outerplanar(args.max_vertices)?
        .into_iter()
        .enumerate()
        .collect();
    if let Some(seed) = args.seed {
        graphs.shuffle(&mut StdRng::seed_from_u64(seed));
    }
    if let Some(limit) = args.limit {
        graphs.truncate(limit);
    }
    Ok(graphs)
}

// Each entry is one output line.
fn run(command: &Command) -> Result<Vec<Value>, Failure> {
    let out = match command {
        Command::Chrom(a) => {
            let g = parse_graph(&a.input)?;
            vec![
                json!({ "graph": j::graph_to_json(&g), "chromatic": j::int_poly_to_json(&chromatic(&g)) }),
            ]
        }
        Command::Orbital { graph, group } => {
            let g = parse_graph(&graph.input)?;
            let group = parse_group(&group.group, &g)?;
            let op = orbital_chromatic(&g, &group)?;
            vec![json!({
                "graph": j::graph_to_json(&g),
                "group": j::group_to_json(&group),
                "order": group.order(),
                "orbital": j::rat_poly_to_json(&op),
            })]
        }
        Command::Quotient { graph, perm } => {
            let g = parse_graph(&graph.input)?;
            let p = parse_permutation(perm, g.num_vertices())?;
            let quo = quotient(&g, &p)?;
            vec![json!({
                "permutation": j::permutation_to_json(&p),
                "quotient": j::graph_to_json(&quo),
            })]
        }
        Command::Aut(a) => {
            let g = parse_graph(&a.input)?;
            let aut = automorphism_group(&g)?;
            vec![json!({ "group": j::group_to_json(&aut), "order": aut.order() })]
        }
        Command::Roots {
            graph,
            group,
            width,
        } => {
            let g = parse_graph(&graph.input)?;
            let width = parse_width(width)?;
            let p = if group.is_empty() {
                chromatic(&g)
            } else {
                orbital_chromatic(&g, &parse_group(group, &g)?)?
                    .numerator()
                    .clone()
            };
            if p.is_zero() {
                return Err(Error::ZeroPolynomial.into());
            }
            vec![j::root_report_to_json(&isolate_real_roots(&p, &width)?)]
        }
        Command::Forge { graph, group, smax } => {
            let g = parse_graph(&graph.input)?;
            let group = parse_group(&group.group, &g)?;
            let premise = find_premise(&g, &group)?
                .ok_or_else(|| Failure::from(Error::Premise("no element with a unique smallest quotient that is negative above the chromatic roots".into())))?;
            vec![j::forge_result_to_json(&forge(&premise, *smax)?)]
        }
        Command::CheckBound { graph, group } => {
            let g = parse_graph(&graph.input)?;
            let group = parse_group(&group.group, &g)?;
            vec![j::bound_report_to_json(&check_problem1(&g, &group)?)]
        }
        Command::Outerplanar(args) => corpus(args)?
            .into_iter()
            .map(|(id, g)| json!({ "id": id, "graph": j::graph_to_json(&g) }))
            .collect(),
        Command::VerifyT2 {
            corpus: args,
            graph,
            max_subgroup_order,
        } => {
            let config = VerifyConfig {
                max_subgroup_order: *max_subgroup_order,
                ..VerifyConfig::default()
            };
            let graphs = match graph {
                Some(spec) => vec![(0, parse_graph(spec)?)],
                None => corpus(args)?,
            };
            let mut lines = Vec::with_capacity(graphs.len() + 1);
            let (mut subgroups, mut held, mut failed_bipartite) = (0usize, 0usize, 0usize);
            for (id, g) in &graphs {
                let rep = verify_theorem2_with(g, Some(*id), config)?;
                subgroups += rep.subgroup_results.len();
                for v in &rep.subgroup_results {
                    if v.bound_holds {
                        held += 1;
                    } else {
                        failed_bipartite += 1;
                    }
                }
                lines.push(j::outerplanar_report_to_json(&rep));
            }
            lines.push(json!({
                "summary": {
                    "graphs": graphs.len(),
                    "subgroups": subgroups,
                    "bound_holds": held,
                    "bound_fails_without_odd_cycle": failed_bipartite,
                }
            }));
            lines
        }
    };
    Ok(out)
}

fn emit(lines: &[Value], output: Option<&PathBuf>) -> io::Result<()> {
    let mut text = String::new();
    for line in lines {
        text.push_str(&line.to_string());
        text.push('\n');
    }
    match output {
        Some(path) => fs::write(path, text),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli.command) {
        Ok(lines) => match emit(&lines, cli.output.as_ref()) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("orbchrom: {e}");
                ExitCode::from(EXIT_IO)
            }
        },
        Err(f) => {
            if let Some(body) = f.body {
                let _ = emit(&[body], cli.output.as_ref());
            }
            eprintln!("orbchrom: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
