//! Core automaton types: symbols, words, alphabets, DFAs and suffix-reading
//! automata (DSAs), together with structural validation and size accounting.
//!
//! A DSA carries words on its transitions. From a state `q`, a transition
//! labeled `α` fires once the input read at `q` first ends with one of the
//! outgoing labels, taking the longest matching one. The types here are plain
//! containers; execution lives in [`crate::semantics`].

use std::collections::{BTreeSet, HashSet};
use std::fmt;

/// A single alphabet symbol. Symbols are text tokens, so both character-level
/// alphabets (`a`, `b`) and token-level alphabets (`if`, `endif`) work.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(String);

impl Symbol {
    pub fn new(token: impl Into<String>) -> Self {
        Symbol(token.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Token validity for the file format: non-empty, `[A-Za-z0-9_.$-]+`.
    pub fn is_valid_token(&self) -> bool {
        !self.0.is_empty()
            && self
                .0
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '$' | '-'))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<&str> for Symbol {
    fn from(s: &str) -> Self {
        Symbol::new(s)
    }
}

impl From<char> for Symbol {
    fn from(c: char) -> Self {
        Symbol::new(c.to_string())
    }
}

/// A finite word over [`Symbol`]s. The empty word is ε.
///
/// Words order lexicographically by symbol token; [`Word::cmp_len_lex`] gives
/// the (length, lexicographic) order used for canonical transition listings.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    /// Builds a word from whitespace-separated tokens.
    pub fn from_tokens(s: &str) -> Self {
        Word(s.split_whitespace().map(Symbol::from).collect())
    }

    /// Builds a word of single-character symbols, used for character-level
    /// alphabets.
    pub fn from_chars(s: &str) -> Self {
        Word(s.chars().map(Symbol::from).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn push(&mut self, sym: Symbol) {
        self.0.push(sym);
    }

    pub fn appended(&self, sym: &Symbol) -> Word {
        let mut w = self.clone();
        w.push(sym.clone());
        w
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.0.extend_from_slice(&other.0);
        w
    }

    /// The prefix consisting of the first `n` symbols.
    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n].to_vec())
    }

    /// The suffix starting at symbol index `n`.
    pub fn suffix_from(&self, n: usize) -> Word {
        Word(self.0[n..].to_vec())
    }

    /// All prefixes including ε and the word itself, shortest first.
    pub fn prefixes(&self) -> impl Iterator<Item = Word> + '_ {
        (0..=self.len()).map(|n| self.prefix(n))
    }

    /// All non-empty suffixes, longest first.
    pub fn suffixes(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.len()).map(|n| self.suffix_from(n))
    }

    /// Orders by length first, then lexicographically by symbol token.
    pub fn cmp_len_lex(&self, other: &Word) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.cmp(other))
    }

    /// True iff every symbol occurs in `alphabet`.
    pub fn over_alphabet(&self, alphabet: &Alphabet) -> bool {
        self.0.iter().all(|s| alphabet.contains(s))
    }
}

impl fmt::Display for Word {
    /// Symbols are concatenated when all are single characters, otherwise
    /// joined with a middle dot. ε renders as `ε`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("ε");
        }
        if self.0.iter().all(|s| s.as_str().chars().count() == 1) {
            for s in &self.0 {
                f.write_str(s.as_str())?;
            }
            Ok(())
        } else {
            let parts: Vec<&str> = self.0.iter().map(|s| s.as_str()).collect();
            f.write_str(&parts.join("·"))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// True iff `u` is a suffix of `w`. ε is a suffix of every word.
pub fn is_suffix(u: &Word, w: &Word) -> bool {
    u.len() <= w.len() && w.symbols()[w.len() - u.len()..] == *u.symbols()
}

/// True iff `u` is a prefix of `w`.
pub fn is_prefix(u: &Word, w: &Word) -> bool {
    u.len() <= w.len() && w.symbols()[..u.len()] == *u.symbols()
}

/// The longest element of `candidates` that is a suffix of `w`, if any.
///
/// The longest such element is unique: two suffixes of `w` with equal length
/// are equal.
pub fn longest_suffix_in<'a, I>(candidates: I, w: &Word) -> Option<&'a Word>
where
    I: IntoIterator<Item = &'a Word>,
{
    let mut best: Option<&'a Word> = None;
    for u in candidates {
        if is_suffix(u, w) && best.map_or(true, |b| u.len() > b.len()) {
            best = Some(u);
        }
    }
    best
}

/// A finite, non-empty set of symbols, kept sorted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
}

impl Alphabet {
    /// Builds an alphabet, sorting and deduplicating the given symbols.
    pub fn new(symbols: impl IntoIterator<Item = Symbol>) -> Self {
        let mut symbols: Vec<Symbol> = symbols.into_iter().collect();
        symbols.sort();
        symbols.dedup();
        Alphabet { symbols }
    }

    pub fn from_strs(tokens: &[&str]) -> Self {
        Alphabet::new(tokens.iter().map(|t| Symbol::from(*t)))
    }

    /// Single-character symbols taken from a string, e.g. `"ab"`.
    pub fn from_chars(s: &str) -> Self {
        Alphabet::new(s.chars().map(Symbol::from))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn contains(&self, s: &Symbol) -> bool {
        self.symbols.binary_search(s).is_ok()
    }

    pub fn index_of(&self, s: &Symbol) -> Option<usize> {
        self.symbols.binary_search(s).ok()
    }
}

/// Dense state identifier; display names live on the owning automaton.
pub type StateId = usize;

/// A deterministic finite automaton with a possibly partial transition
/// function. When `delta` is total the DFA is complete, otherwise trim.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dfa {
    names: Vec<String>,
    alphabet: Alphabet,
    initial: StateId,
    accepting: BTreeSet<StateId>,
    /// `delta[q][i]` is the successor of state `q` on `alphabet.symbols()[i]`.
    delta: Vec<Vec<Option<StateId>>>,
}

impl Dfa {
    pub fn new(
        names: Vec<String>,
        alphabet: Alphabet,
        initial: StateId,
        accepting: impl IntoIterator<Item = StateId>,
    ) -> Self {
        let n = names.len();
        let k = alphabet.len();
        Dfa {
            names,
            alphabet,
            initial,
            accepting: accepting.into_iter().collect(),
            delta: vec![vec![None; k]; n],
        }
    }

    /// Convenience constructor from `(source, symbol, target)` edges over
    /// states named by index.
    pub fn from_edges(
        n_states: usize,
        alphabet: Alphabet,
        initial: StateId,
        accepting: impl IntoIterator<Item = StateId>,
        edges: impl IntoIterator<Item = (StateId, Symbol, StateId)>,
    ) -> Self {
        let names = (0..n_states).map(|i| format!("q{i}")).collect();
        let mut dfa = Dfa::new(names, alphabet, initial, accepting);
        for (src, sym, dst) in edges {
            dfa.set_edge(src, &sym, dst);
        }
        dfa
    }

    pub fn n_states(&self) -> usize {
        self.names.len()
    }

    pub fn states(&self) -> impl Iterator<Item = StateId> {
        0..self.n_states()
    }

    pub fn name(&self, q: StateId) -> &str {
        &self.names[q]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rename(&mut self, names: Vec<String>) {
        assert_eq!(names.len(), self.names.len());
        self.names = names;
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn accepting(&self) -> &BTreeSet<StateId> {
        &self.accepting
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting.contains(&q)
    }

    pub fn set_edge(&mut self, src: StateId, sym: &Symbol, dst: StateId) {
        let i = self
            .alphabet
            .index_of(sym)
            .unwrap_or_else(|| panic!("symbol {sym} not in alphabet"));
        self.delta[src][i] = Some(dst);
    }

    pub fn step(&self, q: StateId, sym: &Symbol) -> Option<StateId> {
        let i = self.alphabet.index_of(sym)?;
        self.delta[q][i]
    }

    pub fn step_idx(&self, q: StateId, sym_idx: usize) -> Option<StateId> {
        self.delta[q][sym_idx]
    }

    /// All present edges in `(source, symbol index, target)` form, in
    /// deterministic (source, symbol) order.
    pub fn edges(&self) -> impl Iterator<Item = (StateId, usize, StateId)> + '_ {
        self.delta.iter().enumerate().flat_map(|(q, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(i, t)| t.map(|t| (q, i, t)))
        })
    }

    pub fn n_edges(&self) -> usize {
        self.delta
            .iter()
            .map(|row| row.iter().filter(|t| t.is_some()).count())
            .sum()
    }

    /// True iff `delta` is total on states × alphabet.
    pub fn is_complete(&self) -> bool {
        self.delta
            .iter()
            .all(|row| row.iter().all(|t| t.is_some()))
    }

    /// States reachable from the initial state, in BFS order over the sorted
    /// alphabet.
    pub fn reachable_states(&self) -> Vec<StateId> {
        let mut seen = vec![false; self.n_states()];
        let mut order = Vec::new();
        let mut queue = std::collections::VecDeque::new();
        if self.initial < self.n_states() {
            seen[self.initial] = true;
            queue.push_back(self.initial);
        }
        while let Some(q) = queue.pop_front() {
            order.push(q);
            for i in 0..self.alphabet.len() {
                if let Some(t) = self.delta[q][i] {
                    if t < self.n_states() && !seen[t] {
                        seen[t] = true;
                        queue.push_back(t);
                    }
                }
            }
        }
        order
    }
}

/// A transition of a DSA: a word-labeled edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Transition {
    pub source: StateId,
    pub label: Word,
    pub target: StateId,
}

/// A deterministic suffix-reading automaton. Transitions carry non-empty
/// words; no state has two outgoing transitions with the same label.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dsa {
    names: Vec<String>,
    alphabet: Alphabet,
    initial: StateId,
    accepting: BTreeSet<StateId>,
    /// Sorted by (source, label length, label, target) for canonical output.
    transitions: Vec<Transition>,
}

impl Dsa {
    pub fn new(
        names: Vec<String>,
        alphabet: Alphabet,
        initial: StateId,
        accepting: impl IntoIterator<Item = StateId>,
        transitions: impl IntoIterator<Item = (StateId, Word, StateId)>,
    ) -> Self {
        let mut transitions: Vec<Transition> = transitions
            .into_iter()
            .map(|(source, label, target)| Transition {
                source,
                label,
                target,
            })
            .collect();
        sort_transitions(&mut transitions);
        Dsa {
            names,
            alphabet,
            initial,
            accepting: accepting.into_iter().collect(),
            transitions,
        }
    }

    /// Constructor over states named by index.
    pub fn from_parts(
        n_states: usize,
        alphabet: Alphabet,
        initial: StateId,
        accepting: impl IntoIterator<Item = StateId>,
        transitions: impl IntoIterator<Item = (StateId, Word, StateId)>,
    ) -> Self {
        let names = (0..n_states).map(|i| format!("q{i}")).collect();
        Dsa::new(names, alphabet, initial, accepting, transitions)
    }

    pub fn n_states(&self) -> usize {
        self.names.len()
    }

    pub fn states(&self) -> impl Iterator<Item = StateId> {
        0..self.n_states()
    }

    pub fn name(&self, q: StateId) -> &str {
        &self.names[q]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn accepting(&self) -> &BTreeSet<StateId> {
        &self.accepting
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting.contains(&q)
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    /// Outgoing transitions of `q`, in label (length, lexicographic) order.
    pub fn out(&self, q: StateId) -> impl Iterator<Item = &Transition> {
        self.transitions.iter().filter(move |t| t.source == q)
    }

    /// The set of labels on `q`'s outgoing transitions.
    pub fn out_labels(&self, q: StateId) -> Vec<&Word> {
        self.out(q).map(|t| &t.label).collect()
    }

    /// All prefixes (including ε) of `q`'s outgoing labels.
    pub fn out_prefix_closure(&self, q: StateId) -> BTreeSet<Word> {
        let mut closure = BTreeSet::new();
        closure.insert(Word::empty());
        for t in self.out(q) {
            for p in t.label.prefixes() {
                closure.insert(p);
            }
        }
        closure
    }

    /// States reachable from the initial state through transitions.
    pub fn reachable_states(&self) -> Vec<StateId> {
        let mut seen = vec![false; self.n_states()];
        let mut order = Vec::new();
        let mut queue = std::collections::VecDeque::new();
        if self.initial < self.n_states() {
            seen[self.initial] = true;
            queue.push_back(self.initial);
        }
        while let Some(q) = queue.pop_front() {
            order.push(q);
            for t in self.out(q) {
                if t.target < self.n_states() && !seen[t.target] {
                    seen[t.target] = true;
                    queue.push_back(t.target);
                }
            }
        }
        order
    }
}

pub(crate) fn sort_transitions(transitions: &mut [Transition]) {
    transitions.sort_by(|a, b| {
        a.source
            .cmp(&b.source)
            .then_with(|| a.label.cmp_len_lex(&b.label))
            .then_with(|| a.target.cmp(&b.target))
    });
}

/// Size of an automaton per the total-size measure: states + edges + summed
/// label length. A DFA edge counts label length 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SizeMetrics {
    pub n_states: usize,
    pub n_edges: usize,
    pub label_len: usize,
    pub total: usize,
}

impl SizeMetrics {
    fn new(n_states: usize, n_edges: usize, label_len: usize) -> Self {
        SizeMetrics {
            n_states,
            n_edges,
            label_len,
            total: n_states + n_edges + label_len,
        }
    }
}

impl fmt::Display for SizeMetrics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "states={} edges={} labels={} total={}",
            self.n_states, self.n_edges, self.label_len, self.total
        )
    }
}

pub fn dsa_size(a: &Dsa) -> SizeMetrics {
    let label_len = a.transitions().iter().map(|t| t.label.len()).sum();
    SizeMetrics::new(a.n_states(), a.transitions().len(), label_len)
}

pub fn dfa_size(m: &Dfa) -> SizeMetrics {
    let edges = m.n_edges();
    SizeMetrics::new(m.n_states(), edges, edges)
}

/// A structural defect found by [`validate_dsa`] or [`validate_dfa`].
/// Violations are data, not errors: automata holding them can be inspected.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    EmptyAlphabet,
    BadInitial(StateId),
    BadAccepting(StateId),
    DanglingSource(String),
    DanglingTarget(String),
    ForeignSymbol { place: String, symbol: Symbol },
    EmptyLabel { state: String },
    DuplicateLabel { state: String, label: Word },
    BadToken(Symbol),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyAlphabet => write!(f, "alphabet is empty"),
            Violation::BadInitial(q) => write!(f, "initial state {q} is not a declared state"),
            Violation::BadAccepting(q) => {
                write!(f, "accepting state {q} is not a declared state")
            }
            Violation::DanglingSource(t) => write!(f, "transition {t} leaves an unknown state"),
            Violation::DanglingTarget(t) => write!(f, "transition {t} enters an unknown state"),
            Violation::ForeignSymbol { place, symbol } => {
                write!(f, "{place} uses symbol {symbol} outside the alphabet")
            }
            Violation::EmptyLabel { state } => {
                write!(f, "state {state} has a transition with an empty label")
            }
            Violation::DuplicateLabel { state, label } => {
                write!(f, "state {state} has two transitions labeled {label}")
            }
            Violation::BadToken(sym) => write!(f, "symbol {sym} is not a valid token"),
        }
    }
}

pub fn validate_dfa(m: &Dfa) -> Vec<Violation> {
    let mut out = Vec::new();
    if m.alphabet().is_empty() {
        out.push(Violation::EmptyAlphabet);
    }
    for s in m.alphabet().symbols() {
        if !s.is_valid_token() {
            out.push(Violation::BadToken(s.clone()));
        }
    }
    if m.initial() >= m.n_states() {
        out.push(Violation::BadInitial(m.initial()));
    }
    for &q in m.accepting() {
        if q >= m.n_states() {
            out.push(Violation::BadAccepting(q));
        }
    }
    for (q, i, t) in m.edges() {
        if t >= m.n_states() {
            let sym = &m.alphabet().symbols()[i];
            out.push(Violation::DanglingTarget(format!(
                "{} --{}--> {}",
                m.name(q),
                sym,
                t
            )));
        }
    }
    out
}

pub fn validate_dsa(a: &Dsa) -> Vec<Violation> {
    let mut out = Vec::new();
    if a.alphabet().is_empty() {
        out.push(Violation::EmptyAlphabet);
    }
    for s in a.alphabet().symbols() {
        if !s.is_valid_token() {
            out.push(Violation::BadToken(s.clone()));
        }
    }
    if a.initial() >= a.n_states() {
        out.push(Violation::BadInitial(a.initial()));
    }
    for &q in a.accepting() {
        if q >= a.n_states() {
            out.push(Violation::BadAccepting(q));
        }
    }
    let mut seen: HashSet<(StateId, &Word)> = HashSet::new();
    for t in a.transitions() {
        let describe = |q: StateId| {
            if q < a.n_states() {
                a.name(q).to_string()
            } else {
                format!("#{q}")
            }
        };
        if t.source >= a.n_states() {
            out.push(Violation::DanglingSource(format!(
                "{} --{}--> {}",
                describe(t.source),
                t.label,
                describe(t.target)
            )));
            continue;
        }
        if t.target >= a.n_states() {
            out.push(Violation::DanglingTarget(format!(
                "{} --{}--> {}",
                describe(t.source),
                t.label,
                describe(t.target)
            )));
        }
        if t.label.is_empty() {
            out.push(Violation::EmptyLabel {
                state: a.name(t.source).to_string(),
            });
            continue;
        }
        if !t.label.over_alphabet(a.alphabet()) {
            let foreign = t
                .label
                .symbols()
                .iter()
                .find(|s| !a.alphabet().contains(s))
                .unwrap()
                .clone();
            out.push(Violation::ForeignSymbol {
                place: format!("transition from {}", a.name(t.source)),
                symbol: foreign,
            });
        }
        if !seen.insert((t.source, &t.label)) {
            out.push(Violation::DuplicateLabel {
                state: a.name(t.source).to_string(),
                label: t.label.clone(),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn w(s: &str) -> Word {
        Word::from_chars(s)
    }

    #[test]
    fn suffix_basics() {
        assert!(is_suffix(&Word::empty(), &w("abc")));
        assert!(is_suffix(&w("aab"), &w("abbaab")));
        assert!(!is_suffix(&w("ba"), &w("aab")));
        // Direct check against all four suffixes of aab: aab, ab, b, ε.
        let all: Vec<Word> = w("aab").suffixes().collect();
        assert!(!all.contains(&w("ba")));
    }

    #[test]
    fn longest_suffix_picks_longest() {
        let toks = |xs: &[&str]| xs.iter().map(|x| Word::from_tokens(x)).collect::<Vec<_>>();
        let u = toks(&["if", "endif"]);
        let target = Word::from_tokens("x y endif");
        assert_eq!(
            longest_suffix_in(u.iter(), &target),
            Some(&Word::from_tokens("endif"))
        );

        let u = vec![w("aa"), w("b")];
        assert_eq!(longest_suffix_in(u.iter(), &w("ab")), Some(&w("b")));

        let u = vec![w("ab")];
        assert_eq!(longest_suffix_in(u.iter(), &w("ba")), None);
    }

    #[test]
    fn out_labels_and_prefix_closure() {
        let a2 = samples::ends_with_aab_dsa();
        let labels = a2.out_labels(0);
        assert_eq!(labels, vec![&w("aab")]);
        let closure = a2.out_prefix_closure(0);
        let expect: BTreeSet<Word> = [w(""), w("a"), w("aa"), w("aab")].into_iter().collect();
        assert_eq!(closure, expect);
        // A state with no outgoing transitions has no labels.
        let lonely = Dsa::from_parts(1, Alphabet::from_chars("a"), 0, [0], []);
        assert!(lonely.out_labels(0).is_empty());
    }

    #[test]
    fn size_metrics_examples() {
        let a2 = samples::ends_with_aab_dsa();
        assert_eq!(dsa_size(&a2).total, 10);

        for n in 2..=6 {
            let chain = samples::suffix_chain_dsa(n);
            assert_eq!(dsa_size(&chain).total, 4 + 2 * n);
        }
    }

    #[test]
    fn size_metrics_ignore_names() {
        let mut a = samples::ends_with_aab_dsa();
        let before = dsa_size(&a);
        a = Dsa::new(
            vec!["x".into(), "y".into()],
            a.alphabet().clone(),
            a.initial(),
            a.accepting().iter().copied().collect::<Vec<_>>(),
            a.transitions()
                .iter()
                .map(|t| (t.source, t.label.clone(), t.target)),
        );
        assert_eq!(dsa_size(&a), before);
    }

    #[test]
    fn validation_catches_defects() {
        let a2 = samples::ends_with_aab_dsa();
        assert!(validate_dsa(&a2).is_empty());

        let dup = Dsa::from_parts(
            2,
            Alphabet::from_chars("ab"),
            0,
            [1],
            [(0, w("ab"), 0), (0, w("ab"), 1)],
        );
        assert!(validate_dsa(&dup)
            .iter()
            .any(|v| matches!(v, Violation::DuplicateLabel { .. })));

        let mut dangling = Dfa::from_edges(1, Alphabet::from_chars("a"), 0, [], []);
        dangling.set_edge(0, &Symbol::from("a"), 0);
        let mut delta_broken = dangling.clone();
        delta_broken.set_edge(0, &Symbol::from("a"), 0);
        // Point the edge out of range by rebuilding with a bad target.
        let bad = Dfa::from_edges(
            1,
            Alphabet::from_chars("a"),
            0,
            [],
            [(0, Symbol::from("a"), 7)],
        );
        assert!(validate_dfa(&bad)
            .iter()
            .any(|v| matches!(v, Violation::DanglingTarget(_))));
    }

    #[test]
    fn suffix_relation_is_transitive() {
        let ws = [w(""), w("a"), w("ba"), w("aba"), w("bb"), w("abb")];
        for u in &ws {
            for v in &ws {
                for x in &ws {
                    if is_suffix(u, v) && is_suffix(v, x) {
                        assert!(is_suffix(u, x));
                    }
                }
            }
        }
    }
}
