use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use powgraph::format::{
    parse_graph, parse_motif, parse_wgraph, write_graph, write_motif, write_plan, write_recognition,
    write_reduced, write_wgraph, GraphFile,
};
use powgraph::graph::{
    automorphism_count, aut_pow_cyclic_formula, build_directed_power_graph, build_power_graph, color_isomorphic,
    cyclic_power_graph, reduce, AutLimits,
};
use powgraph::motif::{occurs_bruteforce, solve, Engine, MotifInstance, MotifLimits};
use powgraph::number::{divisors, euler_phi};
use powgraph::recognition::{
    recognize_undirected, recognize_with, verify_color_iso, RecognitionInput, Recognizer, Target,
};
use powgraph::reductions::{
    build_embedding, build_gadget, choose_b, materialize_embedded_subgraph, materialize_full_instance, maxcut_bruteforce,
    maxcut_embed, parse_dimacs, sat_bruteforce, verify_plan, DEFAULT_VERTEX_BUDGET,
};
use powgraph::{build_group, Error, ErrorKind, GroupLimits, GroupSpec, Result};

#[derive(Parser)]
#[command(name = "powgraph", version, about = "Power graphs of finite groups")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Largest group order that may be materialized.
    #[arg(long, global = true, default_value_t = GroupLimits::default().max_order)]
    limit_order: usize,
    /// Largest graph that may be materialized.
    #[arg(long, global = true, default_value_t = DEFAULT_VERTEX_BUDGET)]
    limit_vertices: u64,
    /// Seed for generated data (random colourings).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cross-check results against an independent oracle.
    #[arg(long, global = true)]
    verify: bool,
    /// Output file (or prefix, for reduce-sat); stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Pow,
    Dpow,
    Reduced,
}

#[derive(Subcommand)]
enum Command {
    /// Build Pow, DPow or the reduced graph of a group.
    BuildGraph {
        spec: String,
        #[arg(long, value_enum, default_value = "pow")]
        kind: Kind,
        /// Colour vertices uniformly from 1..=K (seeded).
        #[arg(long, value_name = "K")]
        random_colors: Option<u64>,
    },
    /// Decide whether a motif occurs in a coloured undirected graph.
    Motif {
        graph: PathBuf,
        motif: PathBuf,
        #[arg(long, default_value = "auto")]
        engine: String,
    },
    /// Compile a 3-CNF formula into a power-graph motif instance.
    ReduceSat {
        cnf: PathBuf,
        /// Materialize all of Pow(Z_N) instead of the embedded subgraph.
        #[arg(long, conflicts_with = "subgraph")]
        full: bool,
        #[arg(long)]
        subgraph: bool,
    },
    /// Embed a weighted graph into Pow(Z_{n^2}) or solve max-cut exactly.
    Maxcut {
        wgraph: PathBuf,
        #[arg(long, conflicts_with = "solve")]
        embed: bool,
        #[arg(long)]
        solve: bool,
    },
    /// Recognize a (reduced) directed power graph or an undirected power graph.
    Recognize {
        graph: PathBuf,
        #[arg(long = "class", default_value = "abelian")]
        class: String,
        #[arg(long, conflicts_with = "undirected")]
        directed: bool,
        #[arg(long)]
        undirected: bool,
    },
    /// Reduce a raw directed graph by closed twin classes.
    ReduceGraph { graph: PathBuf },
    /// Arithmetic and automorphism facts for Z_n, or a summary of a group.
    Stats { target: String },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Writes an artifact to `--out` (summary then goes to stdout) or to stdout
/// (summary to stderr).
fn emit(out: Option<&Path>, artifact: &str, summary: &str) -> Result<()> {
    match out {
        Some(p) => {
            std::fs::write(p, artifact).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            if !summary.is_empty() {
                println!("{summary}");
            }
        }
        None => {
            print!("{artifact}");
            if !summary.is_empty() {
                eprintln!("{summary}");
            }
        }
    }
    Ok(())
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn limits(c: &Common) -> GroupLimits {
    GroupLimits { max_order: c.limit_order, ..GroupLimits::default() }
}

fn check_vertices(c: &Common, n: usize) -> Result<()> {
    if n as u64 > c.limit_vertices {
        return Err(Error::LimitExceeded { what: "vertex count", value: n as u128, limit: c.limit_vertices as u128 });
    }
    Ok(())
}

fn build_graph(c: &Common, spec: &str, kind: Kind, random_colors: Option<u64>) -> Result<()> {
    let spec = GroupSpec::parse(spec)?;
    let t = build_group(&spec, &limits(c))?;
    check_vertices(c, t.order())?;
    let (text, summary) = match kind {
        Kind::Pow | Kind::Dpow => {
            let mut g = if matches!(kind, Kind::Pow) { build_power_graph(&t) } else { build_directed_power_graph(&t) };
            if let Some(k) = random_colors {
                if k == 0 {
                    return Err(Error::InvalidSpec("--random-colors needs K >= 1".into()));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
                g.set_colors((0..g.len()).map(|_| rng.gen_range(1..=k)).collect());
            }
            (write_graph(&g), format!("{} vertices {} edges", g.len(), g.edge_count()))
        }
        Kind::Reduced => {
            let r = reduce(&build_directed_power_graph(&t))?.without_members();
            (write_reduced(&r), format!("{} classes {} edges", r.len(), r.edge_count()))
        }
    };
    emit(c.out.as_deref(), &text, &summary)
}

fn motif(c: &Common, graph: &Path, motif: &Path, engine: &str) -> Result<()> {
    let g = match parse_graph(&read(graph)?)? {
        GraphFile::Plain(g) => g,
        GraphFile::Reduced(_) => return Err(Error::InvalidGraph("motif search needs a plain undirected graph".into())),
    };
    check_vertices(c, g.len())?;
    let inst = MotifInstance::new(g, parse_motif(&read(motif)?)?)?;
    let limits = MotifLimits::default();
    let start = Instant::now();
    let (answer, used) = solve(&inst, engine.parse::<Engine>()?, &limits)?;
    let elapsed = start.elapsed();
    if c.verify {
        let oracle = occurs_bruteforce(&inst, &limits)?;
        if oracle.occurs != answer.occurs {
            return Err(Error::Internal(format!("engine {used} disagrees with the oracle")));
        }
    }
    let mut text = String::from(if answer.occurs { "occurs\n" } else { "absent\n" });
    if let Some(w) = &answer.witness {
        let vs: Vec<String> = w.iter().map(usize::to_string).collect();
        text.push_str(&format!("witness {}\n", vs.join(" ")));
    }
    text.push_str(&format!("engine {used}\n"));
    if c.verify {
        text.push_str("verified oracle\n");
    }
    eprintln!("time {:.3}s", elapsed.as_secs_f64());
    emit(c.out.as_deref(), &text, "")
}

fn reduce_sat(c: &Common, cnf: &Path, full: bool) -> Result<()> {
    let f = parse_dimacs(&read(cnf)?)?;
    let gadget = build_gadget(&f);
    let plan = build_embedding(&f, &gadget, choose_b(&f))?;
    verify_plan(&plan)?;
    let embedded = materialize_embedded_subgraph(&plan, &gadget)?;
    let filler = gadget.instance.motif.counts().keys().max().map_or(0, |m| m + 1);
    let instance = if full {
        Some(materialize_full_instance(&plan, &gadget, filler, c.limit_vertices)?)
    } else {
        None
    };
    if c.verify {
        let sat = sat_bruteforce(&f)?.is_some();
        let limits = MotifLimits::default();
        let gadget_says = solve(&gadget.instance, Engine::Auto, &limits)?.0.occurs;
        let full_says = match &instance {
            Some(i) => solve(i, Engine::TwinClass, &limits)?.0.occurs,
            None => gadget_says,
        };
        if sat != gadget_says || sat != full_says {
            return Err(Error::Internal(format!("sat {sat}, gadget {gadget_says}, instance {full_says} disagree")));
        }
    }
    let summary = format!("b {} N {} gadget {} vertices", plan.b, plan.modulus, gadget.instance.graph.len());
    let graph_text = match &instance {
        Some(i) => write_graph(&i.graph),
        None => write_graph(&embedded),
    };
    match &c.out {
        Some(prefix) => {
            let files = [
                (".gadget.cgraph", write_graph(&gadget.instance.graph)),
                (".motif", write_motif(&gadget.instance.motif)),
                (".plan", write_plan(&plan)),
                (if full { ".full.cgraph" } else { ".sub.cgraph" }, graph_text),
            ];
            for (suffix, text) in files {
                let p = with_suffix(prefix, suffix);
                std::fs::write(&p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            }
            println!("{summary}");
        }
        None => {
            print!("{}", write_plan(&plan));
            eprintln!("{summary}");
        }
    }
    if c.verify {
        println!("verified sat-oracle");
    }
    Ok(())
}

fn maxcut(c: &Common, path: &Path, embed: bool) -> Result<()> {
    let w = parse_wgraph(&read(path)?)?;
    if embed {
        let (e, map) = maxcut_embed(&w)?;
        check_vertices(c, e.len())?;
        if c.verify {
            let (a, _) = maxcut_bruteforce(&w)?;
            let (b, _) = maxcut_bruteforce(&e)?;
            if a != b {
                return Err(Error::Internal(format!("embedded optimum {b} differs from {a}")));
            }
        }
        let mut text = write_wgraph(&e);
        for (v, r) in map.iter().enumerate() {
            text.push_str(&format!("# map {v} {r}\n"));
        }
        return emit(c.out.as_deref(), &text, &format!("vertices {}", e.len()));
    }
    let (value, side) = maxcut_bruteforce(&w)?;
    let part: Vec<String> = (0..side.len()).filter(|&v| side[v]).map(|v| v.to_string()).collect();
    let text = format!("value {value}\nside {}\n", part.join(" "));
    emit(c.out.as_deref(), &text, "")
}

fn recognize(c: &Common, path: &Path, class: &str, directed: bool, undirected: bool) -> Result<()> {
    let target: Target = class.parse()?;
    let file = parse_graph(&read(path)?)?;
    let rec = Recognizer::new(limits(c));
    let is_undirected = matches!(&file, GraphFile::Plain(g) if !g.is_directed());
    if directed && is_undirected {
        return Err(Error::InvalidGraph("--directed given but the graph is undirected".into()));
    }
    if undirected && !is_undirected {
        return Err(Error::InvalidGraph("--undirected given but the graph is directed".into()));
    }
    let res = match file {
        GraphFile::Plain(g) if !g.is_directed() => recognize_undirected(&g, target, &rec)?,
        GraphFile::Plain(g) => {
            check_vertices(c, g.len())?;
            recognize_with(&rec, &RecognitionInput::Raw(g), target)?
        }
        GraphFile::Reduced(r) => recognize_with(&rec, &RecognitionInput::Reduced(r), target)?,
    };
    if c.verify && res.verdict && !is_undirected {
        let input = match parse_graph(&read(path)?)? {
            GraphFile::Plain(g) => reduce(&g)?,
            GraphFile::Reduced(r) => r,
        };
        let spec = res.spec.as_ref().expect("positive verdicts carry a spec");
        let real = reduce(&build_directed_power_graph(&build_group(spec, &limits(c))?))?;
        let ok = match (&res.witness, &res.iso) {
            (Some(w), Some(iso)) => verify_color_iso(w, &input, iso) && color_isomorphic(&real, w).is_some(),
            _ => false,
        };
        if !ok {
            return Err(Error::Internal("returned witness failed independent verification".into()));
        }
    }
    let mut text = write_recognition(&res);
    if c.verify && res.verdict {
        text.push_str("verified reconstruction\n");
    }
    emit(c.out.as_deref(), &text, "")
}

fn reduce_graph(c: &Common, path: &Path) -> Result<()> {
    let g = match parse_graph(&read(path)?)? {
        GraphFile::Plain(g) => g,
        GraphFile::Reduced(_) => return Err(Error::InvalidGraph("graph is already reduced".into())),
    };
    let r = reduce(&g)?.without_members();
    emit(c.out.as_deref(), &write_reduced(&r), &format!("{} classes {} edges", r.len(), r.edge_count()))
}

/// Brute-force automorphism counts are attempted up to this `n`.
const STATS_BRUTE_MAX: u64 = 64;

fn stats(c: &Common, target: &str) -> Result<()> {
    let mut text = String::new();
    if let Ok(n) = target.parse::<u64>() {
        if n == 0 {
            return Err(Error::InvalidSpec("n must be positive".into()));
        }
        text.push_str(&format!("n {n}\nphi {}\ndivisors {}\n", euler_phi(&n), divisors(n).len()));
        let formula = match aut_pow_cyclic_formula(n) {
            Ok(v) => {
                text.push_str(&format!("aut_formula {v}\n"));
                Some(v)
            }
            Err(e) => {
                text.push_str(&format!("aut_formula inapplicable ({e})\n"));
                None
            }
        };
        if n <= STATS_BRUTE_MAX {
            let brute = automorphism_count(&cyclic_power_graph(n), &AutLimits::default())?;
            text.push_str(&format!("aut_brute {brute}\n"));
            if let Some(f) = formula {
                text.push_str(&format!("match {}\n", if f == brute { "yes" } else { "no" }));
                if c.verify && f != brute {
                    return Err(Error::Internal("formula and brute-force counts differ".into()));
                }
            }
        }
    } else {
        let spec = GroupSpec::parse(target)?;
        let t = build_group(&spec, &limits(c))?;
        let profile: Vec<String> = t.order_profile().iter().map(|(o, k)| format!("{o}:{k}")).collect();
        let r = reduce(&build_directed_power_graph(&t))?;
        let yn = |b: bool| if b { "yes" } else { "no" };
        text.push_str(&format!(
            "group {spec}\norder {}\nabelian {}\ncyclic {}\nnilpotent {}\nelement_orders {}\nclasses {}\n",
            t.order(),
            yn(t.is_abelian()),
            yn(t.is_cyclic()),
            yn(t.sylow_decomposition().is_ok()),
            profile.join(" "),
            r.len()
        ));
    }
    emit(c.out.as_deref(), &text, "")
}

fn run(cli: Cli) -> Result<()> {
    let c = &cli.common;
    match &cli.command {
        Command::BuildGraph { spec, kind, random_colors } => build_graph(c, spec, *kind, *random_colors),
        Command::Motif { graph, motif: m, engine } => motif(c, graph, m, engine),
        Command::ReduceSat { cnf, full, .. } => reduce_sat(c, cnf, *full),
        Command::Maxcut { wgraph, embed, .. } => maxcut(c, wgraph, *embed),
        Command::Recognize { graph, class, directed, undirected } => recognize(c, graph, class, *directed, *undirected),
        Command::ReduceGraph { graph } => reduce_graph(c, graph),
        Command::Stats { target } => stats(c, target),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {
            let _ = std::io::stdout().flush();
            ExitCode::SUCCESS
        }
        Err(e) => {
            let msg = e.to_string().replace('\n', " ");
            eprintln!("error: {msg}");
            ExitCode::from(match e.kind() {
                ErrorKind::Input => 2,
                ErrorKind::Budget => 3,
                ErrorKind::Internal => 4,
            })
        }
    }
}
