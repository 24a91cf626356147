//! The line-oriented text format for automata and graphs, plus DOT export.
//!
//! A document is UTF-8; `#` starts a comment, blank lines are ignored. The
//! header names the kind (`type: dfa|dsa|graph`). Automata then declare
//! `alphabet:`, `states:`, `initial:`, `accepting:` (possibly empty) and
//! `edge: SRC LABEL -> DST` lines, where LABEL is one or more
//! whitespace-separated tokens (exactly one for a DFA). Graphs declare
//! `vertices:` and `edge: U -- V` lines. Tokens match `[A-Za-z0-9_.$-]+`.
//! Serialization is canonical: states, symbols and edges are emitted in
//! sorted order, so equal automata print identically.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::core::{validate_dfa, validate_dsa, Alphabet, Dfa, Dsa, StateId, Symbol, Word};
use crate::hardness::Graph;

/// A parsed file: one automaton or graph plus the name it came from.
#[derive(Clone, Debug)]
pub struct Document {
    pub kind: DocKind,
    pub source_name: String,
}

#[derive(Clone, Debug)]
pub enum DocKind {
    Dfa(Dfa),
    Dsa(Dsa),
    Graph(Graph),
}

impl DocKind {
    pub fn kind_name(&self) -> &'static str {
        match self {
            DocKind::Dfa(_) => "dfa",
            DocKind::Dsa(_) => "dsa",
            DocKind::Graph(_) => "graph",
        }
    }
}

/// A positioned parse failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

fn is_token(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '$' | '-'))
}

struct Line<'a> {
    number: usize,
    key: &'a str,
    rest: &'a str,
    /// Column where `rest` begins, for error positions.
    rest_col: usize,
}

fn logical_lines(text: &str) -> Result<Vec<Line<'_>>, ParseError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let number = idx + 1;
        let content = match raw.find('#') {
            Some(cut) => &raw[..cut],
            None => raw,
        };
        if content.trim().is_empty() {
            continue;
        }
        let Some(colon) = content.find(':') else {
            return Err(ParseError::at(number, 1, "expected `key: value` syntax"));
        };
        let key = content[..colon].trim();
        let rest = content[colon + 1..].trim();
        out.push(Line {
            number,
            key,
            rest,
            rest_col: colon + 2,
        });
    }
    Ok(out)
}

/// Parses one document from text.
pub fn parse(text: &str, source_name: &str) -> Result<Document, ParseError> {
    let lines = logical_lines(text)?;
    let Some(first) = lines.first() else {
        return Err(ParseError::at(1, 1, "empty document; expected a `type:` line"));
    };
    if first.key != "type" {
        return Err(ParseError::at(
            first.number,
            1,
            format!("expected `type:` as the first declaration, found `{}`", first.key),
        ));
    }
    let kind = match first.rest {
        "dfa" => parse_automaton(&lines[1..], true, source_name)?,
        "dsa" => parse_automaton(&lines[1..], false, source_name)?,
        "graph" => DocKind::Graph(parse_graph(&lines[1..])?),
        other => {
            return Err(ParseError::at(
                first.number,
                first.rest_col,
                format!("unknown document type `{other}`"),
            ))
        }
    };
    Ok(Document {
        kind,
        source_name: source_name.to_string(),
    })
}

fn parse_automaton(
    lines: &[Line<'_>],
    single_letter: bool,
    source_name: &str,
) -> Result<DocKind, ParseError> {
    let mut alphabet: Option<(Vec<Symbol>, usize)> = None;
    let mut states: Option<(Vec<String>, usize)> = None;
    let mut initial: Option<(String, usize)> = None;
    let mut accepting: Option<(Vec<String>, usize)> = None;
    let mut edges: Vec<(usize, usize, String, Vec<Symbol>, String)> = Vec::new();

    for line in lines {
        match line.key {
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(ParseError::at(line.number, 1, "duplicate `alphabet:` line"));
                }
                let mut symbols = Vec::new();
                for tok in line.rest.split_whitespace() {
                    if !is_token(tok) {
                        return Err(ParseError::at(
                            line.number,
                            line.rest_col,
                            format!("invalid token `{tok}`"),
                        ));
                    }
                    symbols.push(Symbol::from(tok));
                }
                if symbols.is_empty() {
                    return Err(ParseError::at(line.number, line.rest_col, "empty alphabet"));
                }
                alphabet = Some((symbols, line.number));
            }
            "states" => {
                if states.is_some() {
                    return Err(ParseError::at(line.number, 1, "duplicate `states:` line"));
                }
                let names: Vec<String> =
                    line.rest.split_whitespace().map(|s| s.to_string()).collect();
                for name in &names {
                    if !is_token(name) {
                        return Err(ParseError::at(
                            line.number,
                            line.rest_col,
                            format!("invalid state name `{name}`"),
                        ));
                    }
                }
                if names.is_empty() {
                    return Err(ParseError::at(line.number, line.rest_col, "no states declared"));
                }
                let mut seen = BTreeSet::new();
                for name in &names {
                    if !seen.insert(name) {
                        return Err(ParseError::at(
                            line.number,
                            line.rest_col,
                            format!("duplicate state `{name}`"),
                        ));
                    }
                }
                states = Some((names, line.number));
            }
            "initial" => {
                if initial.is_some() {
                    return Err(ParseError::at(line.number, 1, "duplicate `initial:` line"));
                }
                initial = Some((line.rest.to_string(), line.number));
            }
            "accepting" => {
                if accepting.is_some() {
                    return Err(ParseError::at(line.number, 1, "duplicate `accepting:` line"));
                }
                accepting = Some((
                    line.rest.split_whitespace().map(|s| s.to_string()).collect(),
                    line.number,
                ));
            }
            "edge" => {
                let toks: Vec<&str> = line.rest.split_whitespace().collect();
                let arrow = toks.iter().position(|t| *t == "->").ok_or_else(|| {
                    ParseError::at(line.number, line.rest_col, "edge needs `SRC LABEL -> DST`")
                })?;
                if arrow < 2 || arrow + 2 != toks.len() {
                    return Err(ParseError::at(
                        line.number,
                        line.rest_col,
                        "edge needs `SRC LABEL -> DST` with a non-empty label",
                    ));
                }
                let src = toks[0].to_string();
                let label: Vec<Symbol> = toks[1..arrow].iter().map(|t| Symbol::from(*t)).collect();
                if single_letter && label.len() != 1 {
                    return Err(ParseError::at(
                        line.number,
                        line.rest_col,
                        "a dfa edge carries exactly one symbol",
                    ));
                }
                let dst = toks[arrow + 1].to_string();
                edges.push((line.number, line.rest_col, src, label, dst));
            }
            other => {
                return Err(ParseError::at(
                    line.number,
                    1,
                    format!("unexpected `{other}:` in an automaton document"),
                ))
            }
        }
    }

    let (symbols, _) = alphabet.ok_or_else(|| ParseError::at(1, 1, "missing `alphabet:` line"))?;
    let (names, _) = states.ok_or_else(|| ParseError::at(1, 1, "missing `states:` line"))?;
    let (init_name, init_line) =
        initial.ok_or_else(|| ParseError::at(1, 1, "missing `initial:` line"))?;
    let (accept_names, accept_line) =
        accepting.ok_or_else(|| ParseError::at(1, 1, "missing `accepting:` line"))?;

    let alphabet = Alphabet::new(symbols.clone());
    if alphabet.len() != symbols.len() {
        return Err(ParseError::at(1, 1, "duplicate alphabet symbol"));
    }
    let index: BTreeMap<String, StateId> = names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.clone(), i))
        .collect();
    let resolve = move |name: &str, line: usize| -> Result<StateId, ParseError> {
        index
            .get(name)
            .copied()
            .ok_or_else(|| ParseError::at(line, 1, format!("unknown state `{name}`")))
    };
    let initial = resolve(&init_name, init_line)?;
    let accepting: Vec<StateId> = accept_names
        .iter()
        .map(|n| resolve(n, accept_line))
        .collect::<Result<_, _>>()?;

    if single_letter {
        let mut dfa = Dfa::new(names, alphabet.clone(), initial, accepting);
        let mut seen = BTreeSet::new();
        for (line, col, src, label, dst) in edges {
            let s = resolve(&src, line)?;
            let d = resolve(&dst, line)?;
            let sym = label.into_iter().next().unwrap();
            if alphabet.index_of(&sym).is_none() {
                return Err(ParseError::at(line, col, format!("symbol `{sym}` not in alphabet")));
            }
            if !seen.insert((s, sym.clone())) {
                return Err(ParseError::at(
                    line,
                    col,
                    format!("duplicate edge from `{src}` on `{sym}`"),
                ));
            }
            dfa.set_edge(s, &sym, d);
        }
        let violations = validate_dfa(&dfa);
        if let Some(v) = violations.first() {
            return Err(ParseError::at(1, 1, format!("invalid dfa: {v}")));
        }
        Ok(DocKind::Dfa(dfa))
    } else {
        let mut transitions = Vec::new();
        for (line, col, src, label, dst) in &edges {
            let s = resolve(src, *line)?;
            let d = resolve(dst, *line)?;
            for sym in label {
                if alphabet.index_of(sym).is_none() {
                    return Err(ParseError::at(
                        *line,
                        *col,
                        format!("symbol `{sym}` not in alphabet"),
                    ));
                }
            }
            transitions.push((s, Word::new(label.clone()), d));
        }
        let dsa = Dsa::new(names, alphabet, initial, accepting, transitions);
        let violations = validate_dsa(&dsa);
        if let Some(v) = violations.first() {
            return Err(ParseError::at(1, 1, format!("invalid dsa ({source_name}): {v}")));
        }
        Ok(DocKind::Dsa(dsa))
    }
}

fn parse_graph(lines: &[Line<'_>]) -> Result<Graph, ParseError> {
    let mut vertices: Option<Vec<String>> = None;
    let mut edges: Vec<(String, String)> = Vec::new();
    for line in lines {
        match line.key {
            "vertices" => {
                if vertices.is_some() {
                    return Err(ParseError::at(line.number, 1, "duplicate `vertices:` line"));
                }
                let names: Vec<String> =
                    line.rest.split_whitespace().map(|s| s.to_string()).collect();
                for name in &names {
                    if !is_token(name) {
                        return Err(ParseError::at(
                            line.number,
                            line.rest_col,
                            format!("invalid vertex name `{name}`"),
                        ));
                    }
                }
                vertices = Some(names);
            }
            "edge" => {
                let toks: Vec<&str> = line.rest.split_whitespace().collect();
                if toks.len() != 3 || toks[1] != "--" {
                    return Err(ParseError::at(
                        line.number,
                        line.rest_col,
                        "graph edge needs `U -- V`",
                    ));
                }
                edges.push((toks[0].to_string(), toks[2].to_string()));
            }
            other => {
                return Err(ParseError::at(
                    line.number,
                    1,
                    format!("unexpected `{other}:` in a graph document"),
                ))
            }
        }
    }
    let vertices = vertices.ok_or_else(|| ParseError::at(1, 1, "missing `vertices:` line"))?;
    Graph::new(vertices, edges).map_err(|e| ParseError::at(1, 1, format!("invalid graph: {e}")))
}

/// Order in which states are listed: by display name.
fn sorted_state_order(names: &[String]) -> Vec<StateId> {
    let mut order: Vec<StateId> = (0..names.len()).collect();
    order.sort_by(|&a, &b| names[a].cmp(&names[b]));
    order
}

pub fn dfa_to_text(m: &Dfa) -> String {
    let mut out = String::from("type: dfa\n");
    let symbols: Vec<&str> = m.alphabet().symbols().iter().map(|s| s.as_str()).collect();
    out.push_str(&format!("alphabet: {}\n", symbols.join(" ")));
    let order = sorted_state_order(m.names());
    let names: Vec<&str> = order.iter().map(|&q| m.name(q)).collect();
    out.push_str(&format!("states: {}\n", names.join(" ")));
    out.push_str(&format!("initial: {}\n", m.name(m.initial())));
    let mut acc: Vec<&str> = m.accepting().iter().map(|&q| m.name(q)).collect();
    acc.sort_unstable();
    out.push_str(&format!("accepting: {}\n", acc.join(" ")));
    let mut edges: Vec<(String, String, String)> = m
        .edges()
        .map(|(q, i, t)| {
            (
                m.name(q).to_string(),
                m.alphabet().symbols()[i].to_string(),
                m.name(t).to_string(),
            )
        })
        .collect();
    edges.sort();
    for (src, sym, dst) in edges {
        out.push_str(&format!("edge: {src} {sym} -> {dst}\n"));
    }
    out
}

pub fn dsa_to_text(a: &Dsa) -> String {
    let mut out = String::from("type: dsa\n");
    let symbols: Vec<&str> = a.alphabet().symbols().iter().map(|s| s.as_str()).collect();
    out.push_str(&format!("alphabet: {}\n", symbols.join(" ")));
    let order = sorted_state_order(a.names());
    let names: Vec<&str> = order.iter().map(|&q| a.name(q)).collect();
    out.push_str(&format!("states: {}\n", names.join(" ")));
    out.push_str(&format!("initial: {}\n", a.name(a.initial())));
    let mut acc: Vec<&str> = a.accepting().iter().map(|&q| a.name(q)).collect();
    acc.sort_unstable();
    out.push_str(&format!("accepting: {}\n", acc.join(" ")));
    let mut edges: Vec<(String, usize, Vec<String>, String)> = a
        .transitions()
        .iter()
        .map(|t| {
            (
                a.name(t.source).to_string(),
                t.label.len(),
                t.label.symbols().iter().map(|s| s.to_string()).collect(),
                a.name(t.target).to_string(),
            )
        })
        .collect();
    edges.sort();
    for (src, _, label, dst) in edges {
        out.push_str(&format!("edge: {src} {} -> {dst}\n", label.join(" ")));
    }
    out
}

pub fn graph_to_text(g: &Graph) -> String {
    let mut out = String::from("type: graph\n");
    out.push_str(&format!("vertices: {}\n", g.vertices().join(" ")));
    for &(u, v) in g.edges() {
        out.push_str(&format!("edge: {} -- {}\n", g.vertices()[u], g.vertices()[v]));
    }
    out
}

/// Canonical text for any document.
pub fn serialize(doc: &Document) -> String {
    match &doc.kind {
        DocKind::Dfa(m) => dfa_to_text(m),
        DocKind::Dsa(a) => dsa_to_text(a),
        DocKind::Graph(g) => graph_to_text(g),
    }
}

fn dot_label(word: &Word, char_alphabet: bool) -> String {
    if char_alphabet {
        word.symbols().iter().map(|s| s.as_str()).collect()
    } else {
        let parts: Vec<&str> = word.symbols().iter().map(|s| s.as_str()).collect();
        parts.join("·")
    }
}

fn is_char_alphabet(alphabet: &Alphabet) -> bool {
    alphabet
        .symbols()
        .iter()
        .all(|s| s.as_str().chars().count() == 1)
}

/// Renders a document as DOT: doubled circles mark accepting states, an
/// entry arrow marks the initial state, and graphs render undirected.
pub fn to_dot(doc: &Document) -> String {
    let mut out = String::new();
    match &doc.kind {
        DocKind::Dfa(m) => {
            out.push_str("digraph dfa {\n  rankdir=LR;\n");
            out.push_str("  __start [shape=point];\n");
            for q in m.states() {
                let shape = if m.is_accepting(q) { "doublecircle" } else { "circle" };
                out.push_str(&format!("  \"{}\" [shape={shape}];\n", m.name(q)));
            }
            out.push_str(&format!("  __start -> \"{}\";\n", m.name(m.initial())));
            for (q, i, t) in m.edges() {
                out.push_str(&format!(
                    "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                    m.name(q),
                    m.name(t),
                    m.alphabet().symbols()[i]
                ));
            }
            out.push_str("}\n");
        }
        DocKind::Dsa(a) => {
            let chars = is_char_alphabet(a.alphabet());
            out.push_str("digraph dsa {\n  rankdir=LR;\n");
            out.push_str("  __start [shape=point];\n");
            for q in a.states() {
                let shape = if a.is_accepting(q) { "doublecircle" } else { "circle" };
                out.push_str(&format!("  \"{}\" [shape={shape}];\n", a.name(q)));
            }
            out.push_str(&format!("  __start -> \"{}\";\n", a.name(a.initial())));
            for t in a.transitions() {
                out.push_str(&format!(
                    "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                    a.name(t.source),
                    a.name(t.target),
                    dot_label(&t.label, chars)
                ));
            }
            out.push_str("}\n");
        }
        DocKind::Graph(g) => {
            out.push_str("graph g {\n");
            for v in g.vertices() {
                out.push_str(&format!("  \"{v}\";\n"));
            }
            for &(u, v) in g.edges() {
                out.push_str(&format!(
                    "  \"{}\" -- \"{}\";\n",
                    g.vertices()[u],
                    g.vertices()[v]
                ));
            }
            out.push_str("}\n");
        }
    }
    out
}
