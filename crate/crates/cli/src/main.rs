//! `gsep`: separability analysis of graph Laplacian quantum states.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use gsep_core::criteria::{th1_check, th1_expand_witness, CriterionId};
use gsep_core::fixtures::{appendix_state, example_graph, GraphFixture, StateFixture};
use gsep_core::{Cut, Tolerances};

use gsep_cli::audit::{audit, evaluate_input, AuditInput};
use gsep_cli::ensemble::{generate_ensemble, EnsembleSpec, WeightMode};
use gsep_cli::inputs::{
    build_state, load_graph_file, resolve_state, state_descriptor, StateParams,
};
use gsep_cli::report::{oracle_verdict_str, REPORT_SCHEMA};

#[derive(Parser)]
#[command(
    name = "gsep",
    about = "Separability criteria and oracle audits for graph Laplacian quantum states",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a graph file (text format or its JSON mirror).
    Analyze {
        path: PathBuf,
        /// Bipartition after the first M qubits.
        #[arg(long, default_value_t = 1)]
        cut: u32,
        /// Comma-separated criterion ids, or "all".
        #[arg(long, default_value = "all")]
        criteria: String,
        /// Cross-check with the PPT/Schmidt oracle.
        #[arg(long)]
        oracle: bool,
        /// Emit the JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Analyze a named state family from the catalog.
    State {
        /// One of: ket00 ket000 cos_sin_2q uniform_2q one_exc_3q two_exc_3q
        /// werner_like mems ghz w3 w_type.
        id: String,
        #[command(flatten)]
        params: StateArgs,
        /// Bipartition after the first M qubits (default: the state's
        /// canonical cut).
        #[arg(long)]
        cut: Option<u32>,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run the whole fixture corpus at canonical cuts.
    Corpus {
        #[arg(long)]
        json: bool,
    },
    /// Audit a seeded random graph ensemble against the oracle.
    Sweep {
        #[arg(long)]
        qubits: u32,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        /// simple | real | complex.
        #[arg(long)]
        weights: String,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Comma-separated cut list.
        #[arg(long, default_value = "1")]
        cuts: String,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the explicit convex product decomposition of a graph state.
    Witness {
        path: PathBuf,
        #[arg(long)]
        cut: u32,
    },
}

#[derive(Args)]
struct StateArgs {
    #[arg(long)]
    theta: Option<f64>,
    #[arg(long)]
    phi: Option<f64>,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    delta: Option<f64>,
    #[arg(long)]
    nparam: Option<u64>,
}

enum Failure {
    /// Bad input: missing files, parse errors, invalid parameters.
    Input(anyhow::Error),
    /// Internal numerical failure.
    Internal(anyhow::Error),
}

fn main() -> ExitCode {
    // die silently when a downstream pipe closes, like other unix tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap help/version output is not an error
            if e.use_stderr() {
                eprintln!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("internal error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn parse_criteria(list: &str) -> Result<Option<Vec<CriterionId>>> {
    if list == "all" {
        return Ok(None);
    }
    let mut ids = Vec::new();
    for token in list.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        ids.push(
            CriterionId::parse(token).ok_or_else(|| anyhow!("unknown criterion id '{token}'"))?,
        );
    }
    if ids.is_empty() {
        bail!("empty criteria list");
    }
    Ok(Some(ids))
}

fn parse_cuts(list: &str) -> Result<Vec<u32>> {
    let mut cuts = Vec::new();
    for token in list.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        cuts.push(
            token
                .parse::<u32>()
                .with_context(|| format!("bad cut '{token}'"))?,
        );
    }
    if cuts.is_empty() {
        bail!("empty cut list");
    }
    Ok(cuts)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let tol = Tolerances::default();
    match cli.command {
        Command::Analyze {
            path,
            cut,
            criteria,
            oracle,
            json,
        } => {
            let filter = parse_criteria(&criteria).map_err(Failure::Input)?;
            let (graph, descriptor) = load_graph_file(&path).map_err(Failure::Input)?;
            let cut =
                Cut::new(graph.n_qubits(), cut).map_err(|e| Failure::Input(anyhow!("{e}")))?;
            let input = AuditInput::Graph { descriptor, graph };
            let mut report =
                evaluate_input(&input, cut, &tol).map_err(|e| Failure::Input(anyhow!("{e}")))?;
            if let Some(filter) = &filter {
                report.criteria.retain(|c| filter.contains(&c.id));
            }
            if !oracle {
                report.oracle = None;
                report.disagreements.clear();
            }
            emit_report(&report, json);
            Ok(())
        }
        Command::State {
            id,
            params,
            cut,
            oracle,
            json,
        } => {
            let params = StateParams {
                theta: params.theta,
                phi: params.phi,
                a: params.a,
                delta: params.delta,
                nparam: params.nparam,
            };
            let state = resolve_state(&id, &params).map_err(Failure::Input)?;
            let rho = build_state(&state, &tol).map_err(Failure::Input)?;
            let m = cut.unwrap_or(state.canonical_cut().m());
            let cut = Cut::new(rho.n_qubits(), m).map_err(|e| Failure::Input(anyhow!("{e}")))?;
            let input = AuditInput::State {
                descriptor: state_descriptor(&state),
                rho,
                replay: state_descriptor(&state),
            };
            let mut report =
                evaluate_input(&input, cut, &tol).map_err(|e| Failure::Internal(anyhow!("{e}")))?;
            if !oracle {
                report.oracle = None;
                report.disagreements.clear();
            }
            emit_report(&report, json);
            Ok(())
        }
        Command::Corpus { json } => corpus(&tol, json).map_err(Failure::Internal),
        Command::Sweep {
            qubits,
            count,
            seed,
            weights,
            p,
            cuts,
            out,
        } => {
            let spec = EnsembleSpec {
                qubits,
                count,
                seed,
                weights: WeightMode::parse(&weights).map_err(Failure::Input)?,
                p,
                cuts: parse_cuts(&cuts).map_err(Failure::Input)?,
            };
            spec.validate().map_err(Failure::Input)?;
            sweep(&spec, out.as_deref(), &tol).map_err(Failure::Internal)
        }
        Command::Witness { path, cut } => {
            let (graph, descriptor) = load_graph_file(&path).map_err(Failure::Input)?;
            let cut =
                Cut::new(graph.n_qubits(), cut).map_err(|e| Failure::Input(anyhow!("{e}")))?;
            let rho = graph
                .density(&tol)
                .map_err(|e| Failure::Input(anyhow!("{e}")))?;
            println!("input: {descriptor}  (cut m={})", cut.m());
            let verdict = th1_check(&rho, cut, &tol);
            if verdict.is_separable() {
                let witness = verdict
                    .witness()
                    .expect("separable verdicts carry a witness");
                let decomposition = th1_expand_witness(witness, &rho, &tol)
                    .map_err(|e| Failure::Internal(anyhow!("{e}")))?;
                println!(
                    "separable: {} product terms, reconstruction error {:.3e}",
                    decomposition.terms.len(),
                    decomposition.reconstruction_error(&rho)
                );
                for (k, term) in decomposition.terms.iter().enumerate() {
                    println!("term {}: p = {:.12}", k + 1, term.weight);
                    println!("  outer:");
                    print!("{}", indent(&term.outer.entries().render()));
                    println!("  inner:");
                    print!("{}", indent(&term.inner.entries().render()));
                }
            } else {
                println!(
                    "inconclusive: {}",
                    verdict.diagnostic().unwrap_or("no witness found")
                );
            }
            Ok(())
        }
    }
}

fn indent(block: &str) -> String {
    block.lines().map(|l| format!("    {l}\n")).collect()
}

fn emit_report(report: &gsep_cli::report::CriterionReport, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report.to_json_value()).expect("report serializes")
        );
    } else {
        print!("{}", report.render_text());
    }
}

fn corpus(tol: &Tolerances, json: bool) -> Result<()> {
    let mut entries = Vec::new();
    for fixture in GraphFixture::ALL {
        let graph = example_graph(fixture);
        let cut = fixture.canonical_cut();
        let input = AuditInput::Graph {
            descriptor: fixture.as_str().to_string(),
            graph,
        };
        let report = evaluate_input(&input, cut, tol).map_err(|e| anyhow!("{e}"))?;
        entries.push((format!("separable ({})", fixture.illustrates()), report));
    }
    let pi4 = std::f64::consts::FRAC_PI_4;
    let states = [
        StateFixture::Ket00,
        StateFixture::Ket000,
        StateFixture::CosSin2q { theta: pi4 },
        StateFixture::Uniform2q,
        StateFixture::OneExc3q {
            theta: pi4,
            phi: 0.0,
        },
        StateFixture::TwoExc3q {
            theta: pi4,
            phi: 0.0,
        },
        StateFixture::WernerLike { a: 0.5 },
        StateFixture::Mems { delta: 0.5 },
        StateFixture::Ghz {
            theta: pi4,
            phi: 0.0,
        },
        StateFixture::W3,
        StateFixture::WType { n: 1, delta: 0.0 },
    ];
    for state in states {
        let rho = appendix_state(state, tol).map_err(|e| anyhow!("{e}"))?;
        let input = AuditInput::State {
            descriptor: state_descriptor(&state),
            rho,
            replay: state_descriptor(&state),
        };
        let report =
            evaluate_input(&input, state.canonical_cut(), tol).map_err(|e| anyhow!("{e}"))?;
        let expected = if state.claimed_separable() {
            "separable"
        } else {
            "entangled"
        };
        entries.push((expected.to_string(), report));
    }

    if json {
        let array: Vec<serde_json::Value> = entries
            .iter()
            .map(|(expected, report)| {
                let mut value = report.to_json_value();
                value["expected"] = serde_json::Value::String(expected.clone());
                value
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&array)?);
    } else {
        println!(
            "{:<28} {:>3}  {:<22} {:<30} criteria fired",
            "input", "cut", "expected", "oracle"
        );
        for (expected, report) in &entries {
            let fired: Vec<&str> = report
                .criteria
                .iter()
                .filter(|c| c.separable)
                .map(|c| c.id.as_str())
                .collect();
            let oracle = report
                .oracle
                .as_ref()
                .map(|o| oracle_verdict_str(&o.verdict))
                .unwrap_or_default();
            println!(
                "{:<28} {:>3}  {:<22} {:<30} {}",
                report.input,
                report.cut,
                expected,
                oracle,
                if fired.is_empty() {
                    "-".to_string()
                } else {
                    fired.join(",")
                }
            );
        }
    }
    Ok(())
}

fn sweep(spec: &EnsembleSpec, out: Option<&std::path::Path>, tol: &Tolerances) -> Result<()> {
    let graphs = generate_ensemble(spec, tol)?;
    let inputs: Vec<AuditInput> = graphs
        .into_iter()
        .enumerate()
        .map(|(k, graph)| AuditInput::Graph {
            descriptor: format!("sweep:{k:06}"),
            graph,
        })
        .collect();
    let outcome = audit(&inputs, &spec.cuts, tol)?;
    let json = serde_json::json!({
        "schema": REPORT_SCHEMA,
        "spec": spec,
        "counts": outcome.counts,
        "reports": outcome.reports.iter().map(|r| r.to_json_value()).collect::<Vec<_>>(),
        "invalid": outcome.invalid.iter().map(|(input, reason)| {
            serde_json::json!({"input": input, "reason": reason})
        }).collect::<Vec<_>>(),
        "disagreements": outcome.disagreements,
    });
    let rendered = serde_json::to_string_pretty(&json)?;
    match out {
        Some(path) => std::fs::write(path, rendered.as_bytes())
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => println!("{rendered}"),
    }
    Ok(())
}
