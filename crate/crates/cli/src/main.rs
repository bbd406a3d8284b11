use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::json;

use ribbonlab::algorithms::{checkerboard_partial_petrial_from, checkerboard_twisted_dual_with};
use ribbonlab::medial::{build_medial, classify_cd, straight_ahead_direction, to_dot, CdLabel, WalkSeed};
use ribbonlab::operators::{
    apply_twist_word, contract, delete, geometric_dual, parse_twist_word, partial_dual, partial_petrial, petrial,
};
use ribbonlab::predicates::{
    checkerboard_colouring, face_degrees, is_bipartite, is_checkerboard_colourable, is_even_face, is_eulerian,
};
use ribbonlab::text::{parse, to_text};
use ribbonlab::workbench::{
    enumerate_graphs, for_each_graph, property_names, run_property_suite_with, search_converse_counterexample,
    SuiteOptions, UniverseParams,
};
use ribbonlab::{are_isomorphic, euler_characteristic, trace_boundary, Colour, EdgeSet, Error, RibbonGraph};

#[derive(Parser)]
#[command(name = "ribbonlab", version, about = "Ribbon graphs, twisted duals and checkerboard colourings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table of basic invariants.
    Check { file: PathBuf },
    /// Apply one operator and print the resulting graph.
    Op(OpArgs),
    /// Describe the medial graph, or export it as DOT.
    Medial {
        file: PathBuf,
        #[arg(long)]
        dot: bool,
        /// Reverse every straight-ahead walk.
        #[arg(long)]
        reverse: bool,
    },
    /// Find a checkerboard colourable twisted dual.
    Theorem1 {
        file: PathBuf,
        #[arg(long)]
        reverse: bool,
    },
    /// Find a checkerboard colourable partial Petrial of an Eulerian graph.
    Theorem2 {
        file: PathBuf,
        /// Start every vertex colouring with blue.
        #[arg(long)]
        blue: bool,
    },
    /// List the graphs of a universe.
    Enumerate {
        #[command(flatten)]
        universe: UniverseArgs,
        /// Print only the number of graphs.
        #[arg(long)]
        count: bool,
    },
    /// Run a property (or `all`) over a universe.
    Verify {
        property: String,
        #[command(flatten)]
        universe: UniverseArgs,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        workers: Option<usize>,
        /// Random subsets per graph above the exhaustive limit.
        #[arg(long, default_value_t = 8)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Decide whether two graphs are isomorphic.
    Iso { first: PathBuf, second: PathBuf },
    /// Search for bipartite partial-dual minors whose partial dual is not bipartite.
    Counterexample {
        #[command(flatten)]
        universe: UniverseArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("operator").required(true).multiple(false)))]
struct OpArgs {
    file: PathBuf,
    /// Per-edge twist word such as `a:dt,b:t`.
    #[arg(long, group = "operator")]
    word: Option<String>,
    #[arg(long, group = "operator")]
    dual: bool,
    #[arg(long, group = "operator")]
    petrial: bool,
    /// Comma-separated edge labels.
    #[arg(long, group = "operator", value_name = "EDGES")]
    pdual: Option<String>,
    #[arg(long, group = "operator", value_name = "EDGES")]
    ppetrial: Option<String>,
    #[arg(long, group = "operator", value_name = "EDGES")]
    delete: Option<String>,
    #[arg(long, group = "operator", value_name = "EDGES")]
    contract: Option<String>,
}

#[derive(Args)]
struct UniverseArgs {
    #[arg(long, default_value_t = 3)]
    max_edges: usize,
    #[arg(long, default_value_t = 0)]
    min_edges: usize,
    #[arg(long)]
    max_vertices: Option<usize>,
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    no_dedup: bool,
}

impl UniverseArgs {
    fn params(&self) -> UniverseParams {
        UniverseParams {
            min_edges: self.min_edges,
            max_edges: self.max_edges,
            max_vertices: self.max_vertices,
            connected_only: self.connected,
            dedup: !self.no_dedup,
        }
    }
}

/// A failure with its exit code.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Invariant(_) | Error::NotAllCrossing(_) => 1,
            _ => 2,
        };
        Fail(code, e.to_string())
    }
}

type Outcome = Result<ExitCode, Fail>;

fn load(path: &Path) -> Result<RibbonGraph, Fail> {
    let text = fs::read_to_string(path).map_err(|e| Fail(2, format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| match e {
        Error::Parse { line, column, message } => Fail(2, format!("{}:{line}:{column}: {message}", path.display())),
        other => Fail(2, format!("{}: {other}", path.display())),
    })
}

fn edge_list(g: &RibbonGraph, labels: &str) -> Result<EdgeSet, Fail> {
    let labels: Vec<&str> = labels.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    Ok(g.edge_set(&labels)?)
}

fn set_text(g: &RibbonGraph, set: &EdgeSet) -> String {
    format!("{{{}}}", g.edge_labels(set).join(", "))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn colours(c: &[Colour]) -> String {
    c.iter().map(Colour::to_string).collect::<Vec<_>>().join(" ")
}

fn check(file: &Path) -> Outcome {
    let g = load(file)?;
    let b = trace_boundary(&g);
    let rows = [
        ("vertices", g.vertex_count().to_string()),
        ("edges", g.edge_count().to_string()),
        ("faces", b.face_count().to_string()),
        ("face degrees", format!("{:?}", face_degrees(&g))),
        ("euler char", euler_characteristic(&g).total.to_string()),
        ("connected", yes(g.is_connected()).into()),
        ("orientable", yes(g.is_orientable()).into()),
        ("eulerian", yes(is_eulerian(&g)).into()),
        ("bipartite", yes(is_bipartite(&g)).into()),
        ("even-face", yes(is_even_face(&g)).into()),
        ("checkerboard", yes(is_checkerboard_colourable(&g)).into()),
    ];
    for (k, v) in rows {
        println!("{k:<14}{v}");
    }
    Ok(ExitCode::SUCCESS)
}

fn op(a: &OpArgs) -> Outcome {
    let g = load(&a.file)?;
    let out = if let Some(w) = &a.word {
        apply_twist_word(&g, &parse_twist_word(&g, w)?)?
    } else if a.dual {
        geometric_dual(&g)
    } else if a.petrial {
        petrial(&g)
    } else if let Some(s) = &a.pdual {
        partial_dual(&g, &edge_list(&g, s)?)?
    } else if let Some(s) = &a.ppetrial {
        partial_petrial(&g, &edge_list(&g, s)?)?
    } else if let Some(s) = &a.delete {
        delete(&g, &edge_list(&g, s)?)?
    } else if let Some(s) = &a.contract {
        contract(&g, &edge_list(&g, s)?)?
    } else {
        unreachable!("clap requires one operator")
    };
    print!("{}", to_text(&out));
    Ok(ExitCode::SUCCESS)
}

fn seed(reverse: bool) -> WalkSeed {
    if reverse {
        WalkSeed::Reverse
    } else {
        WalkSeed::Forward
    }
}

fn medial(file: &Path, dot: bool, reverse: bool) -> Outcome {
    let g = load(file)?;
    let m = build_medial(&g)?;
    let dir = straight_ahead_direction(&m, seed(reverse));
    let cls = classify_cd(&m, &dir)?;
    if dot {
        print!("{}", to_dot(&m, &dir, &cls));
        return Ok(ExitCode::SUCCESS);
    }
    println!("medial vertices {}", m.vertex_count());
    println!("medial edges    {}", m.edges().len());
    println!("free loops      {}", m.free_loops().len());
    println!("walks           {}", dir.walks.len());
    for e in m.host().edge_ids() {
        let l = match cls.label(e) {
            CdLabel::C => "c",
            CdLabel::D => "d",
        };
        println!("edge {} {l}", m.host().edge(e).label);
    }
    Ok(ExitCode::SUCCESS)
}

fn theorem1(file: &Path, reverse: bool) -> Outcome {
    let g = load(file)?;
    let c = checkerboard_twisted_dual_with(&g, seed(reverse))?;
    let word: Vec<String> = c
        .twist_word()
        .iter()
        .map(|(&e, t)| format!("{}:{}", g.edge(e).label, t.name()))
        .collect();
    println!("petrial set  {}", set_text(&g, &c.petrial_set));
    println!("dual set     {}", set_text(&g, &c.dual_set));
    println!("twist word   {}", if word.is_empty() { "1".into() } else { word.join(",") });
    println!("faces        {}", c.colouring.0.len());
    println!("colouring    {}", colours(&c.colouring.0));
    println!("checkerboard yes");
    println!("result:");
    print!("{}", to_text(&c.result));
    Ok(ExitCode::SUCCESS)
}

fn theorem2(file: &Path, blue: bool) -> Outcome {
    let g = load(file)?;
    if !is_eulerian(&g) {
        return Err(Error::NotEulerian(
            g.vertex_ids()
                .find(|&v| g.degree(v) % 2 == 1)
                .map(|v| g.vertex(v).label.clone())
                .unwrap_or_default(),
        )
        .into());
    }
    let first = if blue { Colour::Blue } else { Colour::Red };
    let c = checkerboard_partial_petrial_from(&g, first)?;
    println!("eulerian             yes");
    println!("checkerboard         {}", yes(checkerboard_colouring(&g).is_some()));
    println!("inconsistent         {}", set_text(&g, &c.inconsistent));
    println!("result checkerboard  {}", yes(is_checkerboard_colourable(&c.result)));
    println!("colouring            {}", colours(&c.colouring.0));
    println!("result:");
    print!("{}", to_text(&c.result));
    Ok(ExitCode::SUCCESS)
}

fn enumerate(u: &UniverseArgs, count: bool) -> Outcome {
    let mut n = 0usize;
    for_each_graph(&u.params(), |g| {
        if !count {
            if n > 0 {
                println!();
            }
            print!("{}", to_text(&g));
        }
        n += 1;
    })?;
    if count {
        println!("{n}");
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(property: &str, u: &UniverseArgs, json: bool, workers: Option<usize>, samples: usize, seed: u64) -> Outcome {
    let names: Vec<&str> = if property == "all" {
        property_names().collect()
    } else {
        vec![property]
    };
    let universe = enumerate_graphs(u.params())?;
    let opts = SuiteOptions {
        workers,
        samples,
        seed,
        ..SuiteOptions::default()
    };
    let mut reports = Vec::new();
    for name in names {
        reports.push(run_property_suite_with(&universe, name, &opts)?);
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&reports).map_err(|e| Fail(1, e.to_string()))?);
    } else {
        for r in &reports {
            println!("{r}");
            for f in &r.failures {
                println!("  {}", f.detail);
                for line in f.graph.lines() {
                    println!("    {line}");
                }
            }
        }
    }
    Ok(if reports.iter().all(|r| r.passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn iso(a: &Path, b: &Path) -> Outcome {
    if are_isomorphic(&load(a)?, &load(b)?) {
        println!("isomorphic");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("not isomorphic");
        Ok(ExitCode::from(1))
    }
}

fn counterexample(u: &UniverseArgs, json: bool) -> Outcome {
    let universe = enumerate_graphs(u.params())?;
    let r = search_converse_counterexample(&universe)?;
    if json {
        let witness = r.witness.as_ref().map(|w| {
            json!({
                "graph": to_text(&w.graph),
                "set": w.graph.edge_labels(&w.set),
            })
        });
        let out = json!({
            "params": r.params,
            "graphs_examined": r.graphs_examined,
            "pairs_examined": r.pairs_examined,
            "witness": witness,
            "elapsed_ms": r.elapsed_ms,
        });
        println!("{}", serde_json::to_string_pretty(&out).map_err(|e| Fail(1, e.to_string()))?);
        return Ok(ExitCode::SUCCESS);
    }
    match &r.witness {
        Some(w) => {
            println!("witness A = {}", set_text(&w.graph, &w.set));
            print!("{}", to_text(&w.graph));
        }
        None => println!(
            "none within {} edges ({} graphs, {} subsets)",
            r.params.max_edges, r.graphs_examined, r.pairs_examined
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Check { file } => check(&file),
        Command::Op(a) => op(&a),
        Command::Medial { file, dot, reverse } => medial(&file, dot, reverse),
        Command::Theorem1 { file, reverse } => theorem1(&file, reverse),
        Command::Theorem2 { file, blue } => theorem2(&file, blue),
        Command::Enumerate { universe, count } => enumerate(&universe, count),
        Command::Verify {
            property,
            universe,
            json,
            workers,
            samples,
            seed,
        } => verify(&property, &universe, json, workers, samples, seed),
        Command::Iso { first, second } => iso(&first, &second),
        Command::Counterexample { universe, json } => counterexample(&universe, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
