//! Command-line front end. Every subcommand is a thin shell over one
//! library operation plus formatting.

use std::collections::BTreeSet;
use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sufread::core::{dfa_size, dsa_size, validate_dfa, validate_dsa, Dfa, Dsa, StateId, Word};
use sufread::derivation::{
    derive, derive_smallest, enumerate_suffix_tracking_sets, is_suffix_tracking, Caps,
};
use sufread::dfa_ops::{complete, dfa_equiv, minimize, Equiv};
use sufread::hardness::{build_vc_dfa, default_theta, reduction_size_check, Graph};
use sufread::io::{parse, serialize, to_dot, DocKind, Document};
use sufread::semantics::{dfa_run, dsa_run};
use sufread::strong::{brute_force_min_dsa, minimize_strong, BruteForceOptions};
use sufread::tracking::tracking_dfa;

#[derive(Parser)]
#[command(name = "sufread", about = "Deterministic suffix-reading automata toolkit")]
struct Cli {
    /// Simple-word cap for the derivation machinery (env: SUFREAD_CAP).
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Seed for sampling helpers; accepted for reproducible scripting.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output format for commands that print automata.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Check structural invariants of an automaton or graph file.
    Validate { file: String },
    /// Run an automaton on a word and print the full trace.
    Run {
        file: String,
        /// The input word, whitespace-separated tokens.
        word: Vec<String>,
        /// Split a single bare argument into one-character symbols.
        #[arg(long)]
        chars: bool,
    },
    /// Print the size metrics of an automaton.
    Size { file: String },
    /// Convert a DSA to its tracking DFA.
    ToDfa { file: String },
    /// Complete a DFA by adding a sink.
    Complete { file: String },
    /// Minimize a complete DFA.
    Minimize { file: String },
    /// Check language equivalence of two automata (exit 0 iff equivalent).
    Equiv { file1: String, file2: String },
    /// Enumerate suffix-tracking sets of a complete DFA.
    Sts {
        file: String,
        #[arg(long)]
        max_card: Option<usize>,
    },
    /// Derive a DSA from a complete DFA using the given states.
    Derive {
        file: String,
        /// Comma-separated state names forming the candidate set.
        #[arg(long, value_delimiter = ',')]
        states: Vec<String>,
    },
    /// Derive the smallest DSA over all suffix-tracking sets.
    DeriveSmallest { file: String },
    /// Synthesize a minimal strong DSA from the canonical DFA.
    MinimizeStrong { file: String },
    /// Exhaustively search for a smallest equivalent DSA within a bound.
    BruteMin {
        file: String,
        #[arg(long)]
        max_total: usize,
    },
    /// Build the vertex-cover reduction DFA from a graph.
    GenVc {
        graphfile: String,
        #[arg(long)]
        theta: Option<usize>,
        #[arg(long)]
        k_prime: Option<usize>,
    },
    /// Render a file as DOT.
    Dot { file: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = cli
        .cap
        .or_else(|| {
            std::env::var("SUFREAD_CAP")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(Caps::default().simple_words);
    let caps = Caps::with_simple_words(cap);
    match dispatch(&cli, &caps) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn load(path: &str) -> Result<Document, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    parse(&text, path).map_err(|e| format!("{path}: {e}"))
}

fn load_dfa(path: &str) -> Result<Dfa, String> {
    match load(path)?.kind {
        DocKind::Dfa(m) => Ok(m),
        other => Err(format!("{path}: expected a dfa, found {}", other.kind_name())),
    }
}

fn load_dsa(path: &str) -> Result<Dsa, String> {
    match load(path)?.kind {
        DocKind::Dsa(a) => Ok(a),
        other => Err(format!("{path}: expected a dsa, found {}", other.kind_name())),
    }
}

fn load_graph(path: &str) -> Result<Graph, String> {
    match load(path)?.kind {
        DocKind::Graph(g) => Ok(g),
        other => Err(format!("{path}: expected a graph, found {}", other.kind_name())),
    }
}

fn emit(doc: &Document, format: Format) {
    match format {
        Format::Text => print!("{}", serialize(doc)),
        Format::Dot => print!("{}", to_dot(doc)),
    }
}

fn emit_dfa(m: Dfa, format: Format) {
    emit(
        &Document {
            kind: DocKind::Dfa(m),
            source_name: String::new(),
        },
        format,
    );
}

fn emit_dsa(a: Dsa, format: Format) {
    emit(
        &Document {
            kind: DocKind::Dsa(a),
            source_name: String::new(),
        },
        format,
    );
}

fn parse_word(tokens: &[String], chars: bool) -> Result<Word, String> {
    if chars {
        if tokens.len() != 1 {
            return Err("--chars expects a single bare string".into());
        }
        Ok(Word::from_chars(&tokens[0]))
    } else {
        Ok(Word::new(
            tokens.iter().map(|t| sufread::core::Symbol::new(t.clone())).collect(),
        ))
    }
}

fn resolve_states(m: &Dfa, names: &[String]) -> Result<BTreeSet<StateId>, String> {
    let mut out = BTreeSet::new();
    for name in names {
        let id = m
            .names()
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| format!("unknown state `{name}`"))?;
        out.insert(id);
    }
    Ok(out)
}

fn dispatch(cli: &Cli, caps: &Caps) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Validate { file } => {
            let doc = load(file)?;
            let violations = match &doc.kind {
                DocKind::Dfa(m) => validate_dfa(m).iter().map(|v| v.to_string()).collect(),
                DocKind::Dsa(a) => validate_dsa(a).iter().map(|v| v.to_string()).collect(),
                DocKind::Graph(_) => Vec::new(),
            };
            if violations.is_empty() {
                println!("ok: {} ({})", file, doc.kind.kind_name());
                Ok(ExitCode::SUCCESS)
            } else {
                for v in &violations {
                    println!("violation: {v}");
                }
                Ok(ExitCode::from(1))
            }
        }
        Command::Run { file, word, chars } => {
            let doc = load(file)?;
            let input = parse_word(word, *chars)?;
            match &doc.kind {
                DocKind::Dsa(a) => {
                    let run = dsa_run(a, &input);
                    for mv in &run.moves {
                        println!(
                            "move: {} --{}--> {} (consumed {})",
                            a.name(mv.source),
                            mv.label,
                            a.name(mv.target),
                            mv.consumed
                        );
                    }
                    if run.accepted {
                        println!("accept at {}", a.name(run.final_state));
                        Ok(ExitCode::SUCCESS)
                    } else {
                        println!(
                            "reject at {} (residue: {})",
                            a.name(run.final_state),
                            run.residue
                        );
                        Ok(ExitCode::from(1))
                    }
                }
                DocKind::Dfa(m) => match dfa_run(m, &input) {
                    Some(q) if m.is_accepting(q) => {
                        println!("accept at {}", m.name(q));
                        Ok(ExitCode::SUCCESS)
                    }
                    Some(q) => {
                        println!("reject at {}", m.name(q));
                        Ok(ExitCode::from(1))
                    }
                    None => {
                        println!("reject (no run)");
                        Ok(ExitCode::from(1))
                    }
                },
                DocKind::Graph(_) => Err("cannot run a graph".into()),
            }
        }
        Command::Size { file } => {
            let doc = load(file)?;
            let metrics = match &doc.kind {
                DocKind::Dfa(m) => dfa_size(m),
                DocKind::Dsa(a) => dsa_size(a),
                DocKind::Graph(_) => return Err("graphs have no size metrics".into()),
            };
            println!("{metrics}");
            Ok(ExitCode::SUCCESS)
        }
        Command::ToDfa { file } => {
            let a = load_dsa(file)?;
            let tracking = tracking_dfa(&a).map_err(|v| format!("invalid dsa: {}", v[0]))?;
            emit_dfa(tracking.dfa, cli.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Complete { file } => {
            let m = load_dfa(file)?;
            emit_dfa(complete(&m), cli.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Minimize { file } => {
            let m = load_dfa(file)?;
            let (canon, _) = minimize(&m).map_err(|e| e.to_string())?;
            emit_dfa(canon, cli.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Equiv { file1, file2 } => {
            let to_dfa = |doc: Document| -> Result<Dfa, String> {
                match doc.kind {
                    DocKind::Dfa(m) => Ok(m),
                    DocKind::Dsa(a) => Ok(tracking_dfa(&a)
                        .map_err(|v| format!("invalid dsa: {}", v[0]))?
                        .dfa),
                    DocKind::Graph(_) => Err("cannot compare a graph".into()),
                }
            };
            let m1 = to_dfa(load(file1)?)?;
            let m2 = to_dfa(load(file2)?)?;
            match dfa_equiv(&m1, &m2).map_err(|e| e.to_string())? {
                Equiv::Equivalent => {
                    println!("equivalent");
                    Ok(ExitCode::SUCCESS)
                }
                Equiv::Distinguished(w) => {
                    println!("not equivalent: counterexample {w}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Sts { file, max_card } => {
            let m = load_dfa(file)?;
            let sets = enumerate_suffix_tracking_sets(&m, None, *max_card, caps)
                .map_err(|e| e.to_string())?;
            for s in &sets {
                let names: Vec<&str> = s.iter().map(|&q| m.name(q)).collect();
                let report = is_suffix_tracking(&m, s, caps).map_err(|e| e.to_string())?;
                println!("suffix-tracking: {{{}}} ({})", names.join(", "), report.summary());
            }
            println!("{} suffix-tracking set(s)", sets.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Derive { file, states } => {
            let m = load_dfa(file)?;
            let s = resolve_states(&m, states)?;
            match derive(&m, &s, caps) {
                Ok(dsa) => {
                    emit_dsa(dsa, cli.format);
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::DeriveSmallest { file } => {
            let m = load_dfa(file)?;
            let (dsa, s) = derive_smallest(&m, caps).map_err(|e| e.to_string())?;
            let names: Vec<&str> = s.iter().map(|&q| m.name(q)).collect();
            eprintln!("# from suffix-tracking set {{{}}}", names.join(", "));
            emit_dsa(dsa, cli.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::MinimizeStrong { file } => {
            let m = load_dfa(file)?;
            let (dsa, _) = minimize_strong(&m, caps).map_err(|e| e.to_string())?;
            emit_dsa(dsa, cli.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::BruteMin { file, max_total } => {
            let doc = load(file)?;
            let target = match doc.kind {
                DocKind::Dfa(m) => complete(&m),
                DocKind::Dsa(a) => {
                    tracking_dfa(&a)
                        .map_err(|v| format!("invalid dsa: {}", v[0]))?
                        .dfa
                }
                DocKind::Graph(_) => return Err("cannot minimize a graph".into()),
            };
            let certificate =
                brute_force_min_dsa(&target, *max_total, BruteForceOptions::default())
                    .map_err(|e| e.to_string())?;
            match certificate.automaton {
                Some(dsa) => {
                    println!("# minimal total {}", certificate.total.unwrap());
                    emit_dsa(dsa, cli.format);
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!(
                        "exhausted: no equivalent DSA with total size <= {}",
                        certificate.search_bound
                    );
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        Command::GenVc {
            graphfile,
            theta,
            k_prime,
        } => {
            let g = load_graph(graphfile)?;
            let theta = theta.unwrap_or_else(|| default_theta(&g));
            if let Some(k_prime) = k_prime {
                let report =
                    reduction_size_check(&g, *k_prime, theta, caps).map_err(|e| e.to_string())?;
                println!(
                    "theta={} k'={} k={} cover={:?} derived_total={:?} forward_ok={} padding_ok={} converse_ok={}",
                    report.theta,
                    report.k_prime,
                    report.k,
                    report.cover.as_ref().map(|c| c.len()),
                    report.derived_total,
                    report.forward_ok,
                    report.padding_sufficient,
                    report.converse_ok
                );
                Ok(ExitCode::SUCCESS)
            } else {
                emit_dfa(build_vc_dfa(&g, theta), cli.format);
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Dot { file } => {
            let doc = load(file)?;
            print!("{}", to_dot(&doc));
            Ok(ExitCode::SUCCESS)
        }
    }
}
