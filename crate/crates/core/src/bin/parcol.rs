use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use parity_colouring::constructions::{colour_cycle, colour_path, colour_tree_centroid};
use parity_colouring::extremal::ExtremalTable;
use parity_colouring::graph::{graph_from_text, graph_to_text, rooted_tree_from_text, Graph};
use parity_colouring::mso::{emit_parity_colourable, render, structural_check, Syntax};
use parity_colouring::parity::{verify_colouring_until, Colouring, Verdict};
use parity_colouring::reduction::{build_hampath_gadget, check_reduction_equivalence, Consistency};
use parity_colouring::reproduce::{self, Mode};
use parity_colouring::safflower::{build_main_safflower, lower_bound_certificate, safflower_violations};
use parity_colouring::solver::{brute_force_chromatic, chromatic_number};
use parity_colouring::Error;

#[derive(Parser)]
#[command(name = "parcol", version, about = "Parity vertex colourings workbench")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomised sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Wall-clock budget in seconds.
    #[arg(long, global = true)]
    budget: Option<f64>,
    /// Write the primary output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact parity chromatic number of a connected graph.
    Solve {
        graph: PathBuf,
        /// Use the brute-force oracle instead of the search.
        #[arg(long)]
        oracle: bool,
    },
    /// Checks a colouring; exits 1 with a parity-path certificate when it is not valid.
    Verify { graph: PathBuf, colouring: PathBuf },
    /// Explicit colourings.
    #[command(subcommand)]
    Colour(ColourCmd),
    /// Extracts and checks the main safflower of a coloured rooted binary tree.
    Safflower { tree: PathBuf, colouring: PathBuf },
    #[command(subcommand)]
    Extremal(ExtremalCmd),
    #[command(subcommand)]
    Gadget(GadgetCmd),
    #[command(subcommand)]
    Mso(MsoCmd),
    /// Runs every experiment suite.
    Reproduce {
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Subcommand)]
enum ColourCmd {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// Centroid colouring of the tree in a graph file.
    Tree {
        graph: PathBuf,
    },
}

#[derive(Subcommand)]
enum ExtremalCmd {
    /// TSV of A(l, d) for l up to `lmax`.
    Table {
        #[arg(long, default_value_t = 20)]
        lmax: usize,
    },
    /// Cross-checks recursion, closed form, brute force and explicit trees.
    Check,
}

#[derive(Subcommand)]
enum GadgetCmd {
    /// Gadget graph and colouring; with --out FILE the colouring goes to FILE.col.
    Build { graph: PathBuf },
    /// Compares Hamiltonicity with validity of the gadget colouring.
    Verify { graph: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum SyntaxArg {
    Sexpr,
    Text,
}

#[derive(Subcommand)]
enum MsoCmd {
    Emit {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = SyntaxArg::Sexpr)]
        syntax: SyntaxArg,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(graph_from_text(&read(path)?)?)
}

fn read_colouring(path: &Path) -> Result<Colouring, Failure> {
    Ok(Colouring::from_text(&read(path)?)?)
}

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("json values serialise") + "\n"
}

fn ids(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = match cli.budget {
        Some(s) if !(s.is_finite() && s >= 0.0) => {
            eprintln!("error: --budget must be a non-negative number of seconds");
            return ExitCode::from(2);
        }
        b => b.map(Duration::from_secs_f64),
    };
    match run(&cli, budget) {
        Ok((output, ok)) => {
            if let Some(path) = &cli.out {
                if let Err(e) = fs::write(path, &output) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{output}");
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli, budget: Option<Duration>) -> Outcome {
    match &cli.command {
        Command::Solve { graph, oracle } => solve(cli, &read_graph(graph)?, *oracle, budget),
        Command::Verify { graph, colouring } => verify(cli, &read_graph(graph)?, &read_colouring(colouring)?, budget),
        Command::Colour(c) => colour(cli, c),
        Command::Safflower { tree, colouring } => safflower(cli, tree, colouring),
        Command::Extremal(ExtremalCmd::Table { lmax }) => Ok((ExtremalTable::new(*lmax)?.to_tsv(), true)),
        Command::Extremal(ExtremalCmd::Check) => report(cli, reproduce::extremal(Mode::Full)?),
        Command::Gadget(GadgetCmd::Build { graph }) => gadget_build(cli, &read_graph(graph)?),
        Command::Gadget(GadgetCmd::Verify { graph }) => {
            let r = check_reduction_equivalence(&read_graph(graph)?, None, budget)?;
            Ok((pretty(r.to_json()), r.outcome != Consistency::Inconsistent))
        }
        Command::Mso(MsoCmd::Emit { k, syntax }) => {
            let sentence = emit_parity_colourable(*k)?;
            let check = structural_check(&sentence);
            if !check.passes() {
                return Err(Failure::Verification(check.diagnostics.join("; ")));
            }
            let syntax = match syntax {
                SyntaxArg::Sexpr => Syntax::Sexpr,
                SyntaxArg::Text => Syntax::Text,
            };
            let text = render(&sentence, syntax);
            if cli.json {
                Ok((pretty(json!({"k": k, "sentence": text, "size": check.size})), true))
            } else {
                Ok((text + "\n", true))
            }
        }
        Command::Reproduce { quick } => {
            let mode = if *quick { Mode::Quick } else { Mode::Full };
            let rep = reproduce::reproduce(mode, cli.seed)?;
            let ok = rep.passed();
            if cli.json {
                Ok((pretty(json!({"report": rep.to_json(), "timings": rep.timings_json()})), ok))
            } else {
                Ok((rep.to_markdown(), ok))
            }
        }
    }
}

fn solve(cli: &Cli, g: &Graph, oracle: bool, budget: Option<Duration>) -> Outcome {
    let (value, witness) = if oracle {
        let r = brute_force_chromatic(g, g.n())?
            .ok_or_else(|| Failure::Verification("oracle found no colouring".into()))?;
        (json!({"chi": r.chi, "witness": r.witness.colours(), "nodes": r.stats.nodes, "status": "exact"}), r.witness)
    } else {
        let r = chromatic_number(g, budget)?;
        (r.to_json(), r.witness().clone())
    };
    if cli.json {
        return Ok((pretty(value), true));
    }
    let head = match value["status"].as_str() {
        Some("exact") => format!("c chi {}\n", value["chi"]),
        _ => format!("c bounds {} {}\n", value["lo"], value["hi"]),
    };
    Ok((head + &witness.to_text(), true))
}

fn verify(cli: &Cli, g: &Graph, c: &Colouring, budget: Option<Duration>) -> Outcome {
    let deadline = budget.map(|b| Instant::now() + b);
    let verdict = verify_colouring_until(g, c, None, deadline)?;
    let (value, text, ok) = match &verdict {
        Verdict::Valid => (json!({"status": "valid"}), "valid\n".to_string(), true),
        Verdict::Invalid(cert) => {
            let text = format!("invalid, parity path:\n{}", pretty(cert.to_json()));
            (json!({"status": "invalid", "certificate": cert.to_json()}), text, false)
        }
        Verdict::Indeterminate { expansions } => {
            let text = format!("inconclusive after {expansions} expansions\n");
            (json!({"status": "indeterminate", "expansions": expansions}), text, false)
        }
    };
    Ok((if cli.json { pretty(value) } else { text }, ok))
}

fn colour(cli: &Cli, cmd: &ColourCmd) -> Outcome {
    let c = match cmd {
        ColourCmd::Path { n } => colour_path(*n)?,
        ColourCmd::Cycle { n } => colour_cycle(*n)?,
        ColourCmd::Tree { graph } => colour_tree_centroid(&read_graph(graph)?)?,
    };
    if cli.json {
        let value = json!({"k": c.colouring.k(), "colours": c.colouring.colours(), "claimed_bound": c.claimed_bound});
        Ok((pretty(value), true))
    } else {
        Ok((c.colouring.to_text(), true))
    }
}

fn safflower(cli: &Cli, tree: &Path, colouring: &Path) -> Outcome {
    let tree = rooted_tree_from_text(&read(tree)?)?;
    let c = read_colouring(colouring)?;
    if tree.main_marks().is_some() {
        let cert = lower_bound_certificate(&tree, &c)?;
        let violations = safflower_violations(&tree, &c, &cert.safflower)?;
        if !violations.is_empty() {
            return Err(Failure::Verification(format!("{violations:?}")));
        }
        return Ok((pretty(cert.to_json()), true));
    }
    let saff = build_main_safflower(&tree, &c)?;
    let violations = safflower_violations(&tree, &c, &saff)?;
    let value = json!({
        "stem": ids(&saff.stem),
        "num_nice": saff.num_nice(),
        "nice_vertices": saff.trees.iter().map(|t| ids(&t.nice_vertices)).collect::<Vec<_>>(),
        "violations": violations.iter().map(|v| format!("{v:?}")).collect::<Vec<_>>(),
    });
    let ok = violations.is_empty();
    if cli.json {
        Ok((pretty(value), ok))
    } else {
        let mut text = format!("stem {:?}\nnice vertices {}\n", ids(&saff.stem), saff.num_nice());
        for v in &violations {
            text.push_str(&format!("violation {v:?}\n"));
        }
        Ok((text, ok))
    }
}

fn gadget_build(cli: &Cli, g: &Graph) -> Outcome {
    let inst = build_hampath_gadget(g)?;
    inst.check_invariants()?;
    let (graph, col) = (graph_to_text(&inst.host), inst.colouring.to_text());
    if cli.json {
        return Ok((pretty(json!({"graph": graph, "colouring": col})), true));
    }
    match &cli.out {
        Some(out) => {
            let path = format!("{}.col", out.display());
            fs::write(&path, col).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
            Ok((graph, true))
        }
        None => Ok((graph + &col, true)),
    }
}

fn report(cli: &Cli, s: reproduce::SuiteReport) -> Outcome {
    let ok = s.passed();
    if cli.json {
        return Ok((pretty(json!({"name": s.name, "passed": ok, "checks": s.checks, "failures": s.failures})), ok));
    }
    let mut text = format!("{}: {} ({} checks)\n", s.name, if ok { "pass" } else { "FAIL" }, s.checks);
    for f in &s.failures {
        text.push_str(&format!("failure: {f}\n"));
    }
    Ok((text, ok))
}
