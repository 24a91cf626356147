//! Deriving DSAs from complete DFAs.
//!
//! The pipeline selects a subset `S` of DFA states, connects them with the
//! simple words that avoid `S` internally, checks that the selection is
//! suffix-tracking (every transition suffix-compatible, the set well-formed),
//! and then prunes useless transitions from the induced DSA. Suffix-tracking
//! selections induce language-equivalent DSAs.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::core::{
    dsa_size, is_prefix, is_suffix, longest_suffix_in, Dfa, Dsa, StateId, Symbol, Word,
};
use crate::strong::is_dsa_well_formed;

/// Resource guards for the derivation machinery.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    /// Maximum number of simple words recorded per `sp_from` call. Simple
    /// word sets can grow exponentially; the computation fails loudly rather
    /// than truncating.
    pub simple_words: usize,
    /// Maximum host size for suffix-tracking-set enumeration.
    pub max_enum_states: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            simple_words: 10_000,
            max_enum_states: 20,
        }
    }
}

impl Caps {
    pub fn with_simple_words(cap: usize) -> Self {
        Caps {
            simple_words: cap,
            ..Caps::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeriveError {
    /// The simple-word cap was exceeded while exploring from this state.
    CapExceeded { from: StateId, cap: usize },
    /// The host DFA must be complete.
    IncompleteDfa,
    /// Enumeration guard: too many states in the host DFA.
    TooManyStates { states: usize, max: usize },
    /// The candidate set is not suffix-tracking (see the report).
    NotSuffixTracking(Box<DerivationReport>),
    /// Useless-transition removal requires a well-formed DSA.
    NotWellFormed,
}

impl fmt::Display for DeriveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeriveError::CapExceeded { from, cap } => {
                write!(f, "simple-word cap of {cap} exceeded exploring from state {from}")
            }
            DeriveError::IncompleteDfa => write!(f, "derivation requires a complete DFA"),
            DeriveError::TooManyStates { states, max } => {
                write!(f, "enumeration guard: {states} states exceeds the maximum of {max}")
            }
            DeriveError::NotSuffixTracking(report) => {
                write!(f, "state set is not suffix-tracking: {}", report.summary())
            }
            DeriveError::NotWellFormed => {
                write!(f, "useless-transition removal requires a well-formed DSA")
            }
        }
    }
}

impl std::error::Error for DeriveError {}

/// Simple words from `p` grouped by endpoint: for each state `q`, the words
/// labeling paths `p ⇝ q` whose intermediate states avoid `S` and repeat
/// only at the endpoints.
pub type SpMap = BTreeMap<StateId, BTreeSet<Word>>;

/// Computes `SP(p ⇝ q, S)` for every endpoint `q` at once.
pub fn sp_from(
    m: &Dfa,
    s: &BTreeSet<StateId>,
    p: StateId,
    caps: &Caps,
) -> Result<SpMap, DeriveError> {
    if !m.is_complete() {
        return Err(DeriveError::IncompleteDfa);
    }
    let mut out: SpMap = BTreeMap::new();
    let mut count = 0usize;
    let mut visited: HashSet<StateId> = HashSet::new();
    visited.insert(p);
    let word = Word::empty();
    dfs_simple(m, s, p, p, &mut visited, &word, &mut out, &mut count, caps)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn dfs_simple(
    m: &Dfa,
    s: &BTreeSet<StateId>,
    p: StateId,
    at: StateId,
    visited: &mut HashSet<StateId>,
    word: &Word,
    out: &mut SpMap,
    count: &mut usize,
    caps: &Caps,
) -> Result<(), DeriveError> {
    for (i, sym) in m.alphabet().symbols().iter().enumerate() {
        let t = m.step_idx(at, i).expect("complete DFA");
        let next = word.appended(sym);
        if t == p {
            // Closing the cycle back to the source ends the path.
            record(out, t, next, count, p, caps)?;
            continue;
        }
        if visited.contains(&t) {
            // An intermediate state would repeat; not a simple path.
            continue;
        }
        record(out, t, next.clone(), count, p, caps)?;
        if !s.contains(&t) {
            visited.insert(t);
            dfs_simple(m, s, p, t, visited, &next, out, count, caps)?;
            visited.remove(&t);
        }
    }
    Ok(())
}

/// Records one simple word, enforcing the cap.
fn record(
    out: &mut SpMap,
    endpoint: StateId,
    word: Word,
    count: &mut usize,
    p: StateId,
    caps: &Caps,
) -> Result<(), DeriveError> {
    *count += 1;
    if *count > caps.simple_words {
        return Err(DeriveError::CapExceeded {
            from: p,
            cap: caps.simple_words,
        });
    }
    out.entry(endpoint).or_default().insert(word);
    Ok(())
}

/// `SP(p ⇝ q, S)`: the simple words from `p` to `q` modulo `S`.
pub fn simple_words(
    m: &Dfa,
    s: &BTreeSet<StateId>,
    p: StateId,
    q: StateId,
    caps: &Caps,
) -> Result<BTreeSet<Word>, DeriveError> {
    Ok(sp_from(m, s, p, caps)?.remove(&q).unwrap_or_default())
}

/// `Out(p, S)`: simple words from `p` that end inside `S`. These become the
/// outgoing labels of `p` in the induced DSA.
pub fn out_mod(
    m: &Dfa,
    s: &BTreeSet<StateId>,
    p: StateId,
    caps: &Caps,
) -> Result<SpMap, DeriveError> {
    let mut sp = sp_from(m, s, p, caps)?;
    sp.retain(|q, _| s.contains(q));
    Ok(sp)
}

/// A transition that fails suffix-compatibility, with the witnessing source
/// state `p ∈ S` and simple word `σ` whose extension goes astray.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncompatibleEdge {
    pub source: StateId,
    pub symbol: Symbol,
    pub target: StateId,
    pub witness_state: StateId,
    pub witness_word: Word,
}

/// A well-formedness violation: a simple word `alpha` into `q ∈ S` is a
/// suffix of a simple word `beta` into `q_out ∉ S`, both from `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WfViolation {
    pub from: StateId,
    pub q_in: StateId,
    pub q_out: StateId,
    pub alpha: Word,
    pub beta: Word,
}

/// Verdict for a candidate state set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationReport {
    pub members: BTreeSet<StateId>,
    /// Required states (initial or accepting) absent from the candidate.
    pub missing: Vec<StateId>,
    pub incompatible: Vec<IncompatibleEdge>,
    pub wf_violations: Vec<WfViolation>,
    pub is_suffix_tracking: bool,
}

impl DerivationReport {
    pub fn summary(&self) -> String {
        if self.is_suffix_tracking {
            return "suffix-tracking".to_string();
        }
        let mut parts = Vec::new();
        if !self.missing.is_empty() {
            parts.push(format!("missing required states {:?}", self.missing));
        }
        if !self.incompatible.is_empty() {
            parts.push(format!("{} incompatible transition(s)", self.incompatible.len()));
        }
        if !self.wf_violations.is_empty() {
            parts.push(format!("{} well-formedness violation(s)", self.wf_violations.len()));
        }
        parts.join("; ")
    }
}

/// Precomputed simple-word data for each `p ∈ S`, shared by the checks.
struct SpTable {
    by_state: BTreeMap<StateId, SpMap>,
    /// For each `p`: word → endpoint (unique by determinism) plus the flat
    /// word list for longest-suffix queries.
    endpoints: BTreeMap<StateId, HashMap<Word, StateId>>,
}

fn sp_table(m: &Dfa, s: &BTreeSet<StateId>, caps: &Caps) -> Result<SpTable, DeriveError> {
    let mut by_state = BTreeMap::new();
    let mut endpoints = BTreeMap::new();
    for &p in s {
        let sp = sp_from(m, s, p, caps)?;
        let mut map = HashMap::new();
        for (&q, words) in &sp {
            for w in words {
                map.insert(w.clone(), q);
            }
        }
        endpoints.insert(p, map);
        by_state.insert(p, sp);
    }
    Ok(SpTable {
        by_state,
        endpoints,
    })
}

/// Checks one DFA transition for suffix-compatibility with respect to `S`.
///
/// A transition touching `S` is trivially compatible. Otherwise every simple
/// word `σ` from every `p ∈ S` into the transition's source must have the
/// longest suffix of `σa` among `SP(p, S)` land exactly in the transition's
/// target.
pub fn is_suffix_compatible(
    m: &Dfa,
    s: &BTreeSet<StateId>,
    source: StateId,
    sym_idx: usize,
    caps: &Caps,
) -> Result<Option<IncompatibleEdge>, DeriveError> {
    let table = sp_table(m, s, caps)?;
    Ok(check_edge(m, s, &table, source, sym_idx))
}

fn check_edge(
    m: &Dfa,
    s: &BTreeSet<StateId>,
    table: &SpTable,
    source: StateId,
    sym_idx: usize,
) -> Option<IncompatibleEdge> {
    let target = m.step_idx(source, sym_idx).expect("complete DFA");
    if s.contains(&source) || s.contains(&target) {
        return None;
    }
    let sym = &m.alphabet().symbols()[sym_idx];
    for (&p, sp) in &table.by_state {
        let Some(into_source) = sp.get(&source) else {
            continue;
        };
        let endpoint_of = &table.endpoints[&p];
        for sigma in into_source {
            let extended = sigma.appended(sym);
            let best = longest_suffix_in(endpoint_of.keys(), &extended);
            let lands_right = best.map_or(false, |alpha| endpoint_of[alpha] == target);
            if !lands_right {
                return Some(IncompatibleEdge {
                    source,
                    symbol: sym.clone(),
                    target,
                    witness_state: p,
                    witness_word: sigma.clone(),
                });
            }
        }
    }
    None
}

/// Checks well-formedness of `S`: no simple word into `S` may be a suffix of
/// a simple word leaving `S` from the same origin.
pub fn is_well_formed_set(
    m: &Dfa,
    s: &BTreeSet<StateId>,
    caps: &Caps,
) -> Result<Vec<WfViolation>, DeriveError> {
    let table = sp_table(m, s, caps)?;
    Ok(wf_violations(s, &table))
}

fn wf_violations(s: &BTreeSet<StateId>, table: &SpTable) -> Vec<WfViolation> {
    let mut out = Vec::new();
    for (&p, sp) in &table.by_state {
        for (&q_in, alphas) in sp.iter().filter(|(q, _)| s.contains(q)) {
            for (&q_out, betas) in sp.iter().filter(|(q, _)| !s.contains(q)) {
                for alpha in alphas {
                    for beta in betas {
                        if is_suffix(alpha, beta) {
                            out.push(WfViolation {
                                from: p,
                                q_in,
                                q_out,
                                alpha: alpha.clone(),
                                beta: beta.clone(),
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

/// Full suffix-tracking verdict for a candidate state set: the membership
/// precondition, suffix-compatibility of every DFA transition, and
/// well-formedness, with witnesses for each failure.
pub fn is_suffix_tracking(
    m: &Dfa,
    s: &BTreeSet<StateId>,
    caps: &Caps,
) -> Result<DerivationReport, DeriveError> {
    if !m.is_complete() {
        return Err(DeriveError::IncompleteDfa);
    }
    let mut missing = Vec::new();
    if !s.contains(&m.initial()) {
        missing.push(m.initial());
    }
    for &q in m.accepting() {
        if !s.contains(&q) {
            missing.push(q);
        }
    }
    let table = sp_table(m, s, caps)?;
    let mut incompatible = Vec::new();
    for source in m.states() {
        for i in 0..m.alphabet().len() {
            if let Some(witness) = check_edge(m, s, &table, source, i) {
                incompatible.push(witness);
            }
        }
    }
    let wf = wf_violations(s, &table);
    let ok = missing.is_empty() && incompatible.is_empty() && wf.is_empty();
    Ok(DerivationReport {
        members: s.clone(),
        missing,
        incompatible,
        wf_violations: wf,
        is_suffix_tracking: ok,
    })
}

/// Builds the DSA induced by `S`: states are `S`, transitions are the simple
/// words between members of `S`.
///
/// Refuses a non-suffix-tracking `S` unless `force` is set; the forced form
/// exists to reproduce non-equivalent selections for diagnosis.
pub fn induced_dsa(
    m: &Dfa,
    s: &BTreeSet<StateId>,
    caps: &Caps,
    force: bool,
) -> Result<Dsa, DeriveError> {
    let report = is_suffix_tracking(m, s, caps)?;
    if !report.is_suffix_tracking && !force {
        return Err(DeriveError::NotSuffixTracking(Box::new(report)));
    }
    let members: Vec<StateId> = s.iter().copied().collect();
    let index: HashMap<StateId, StateId> =
        members.iter().enumerate().map(|(i, &q)| (q, i)).collect();
    let names: Vec<String> = members.iter().map(|&q| m.name(q).to_string()).collect();
    let mut transitions = Vec::new();
    for &p in &members {
        for (&q, words) in out_mod(m, s, p, caps)? .iter() {
            for w in words {
                transitions.push((index[&p], w.clone(), index[&q]));
            }
        }
    }
    let accepting: Vec<StateId> = m
        .accepting()
        .iter()
        .filter_map(|q| index.get(q).copied())
        .collect();
    Ok(Dsa::new(
        names,
        m.alphabet().clone(),
        index[&m.initial()],
        accepting,
        transitions,
    ))
}

/// Classification of a DSA transition for the pruning pass.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum UselessKind {
    /// Subsumed by a shorter same-target suffix label with no diverting
    /// label in between; removable.
    UselessBiggerSuffix,
    /// Has a shorter same-target suffix label, but an intermediate-length
    /// label diverts to another state; must stay.
    UsefulBiggerSuffix,
    /// A non-accepting self-loop whose label cannot begin any other match at
    /// the state; removable after bigger-suffix pruning.
    UselessSelfLoop,
    Plain,
}

/// Classifies transition index `idx` of `a` per the pruning rules.
pub fn classify_transition(a: &Dsa, idx: usize) -> UselessKind {
    let t = &a.transitions()[idx];
    let out: HashMap<&Word, StateId> = a.out(t.source).map(|x| (&x.label, x.target)).collect();

    // Labels that are proper suffixes of this label form a chain; find the
    // shortest one with the same target and any diverting one at or above it.
    let mut shortest_same: Option<usize> = None;
    let mut divert_lens: Vec<usize> = Vec::new();
    for len in 1..t.label.len() {
        let suffix = t.label.suffix_from(t.label.len() - len);
        if let Some(&target) = out.get(&suffix) {
            if target == t.target {
                shortest_same = Some(shortest_same.map_or(len, |c: usize| c.min(len)));
            } else {
                divert_lens.push(len);
            }
        }
    }
    if let Some(base) = shortest_same {
        if divert_lens.iter().any(|&l| l >= base) {
            return UselessKind::UsefulBiggerSuffix;
        }
        return UselessKind::UselessBiggerSuffix;
    }

    if t.source == t.target && !a.is_accepting(t.source) {
        // No suffix of the label may begin another potential match. The
        // label itself paired with itself is exempt, otherwise no self-loop
        // could ever be removable.
        let blocked = t.label.suffixes().any(|sfx| {
            out.keys().any(|label| {
                !(sfx == t.label && **label == t.label) && is_prefix(&sfx, label)
            })
        });
        if !blocked {
            return UselessKind::UselessSelfLoop;
        }
    }
    UselessKind::Plain
}

/// Removal order: longest label first, then source id, then label.
fn next_candidate(a: &Dsa, kind: UselessKind) -> Option<usize> {
    let mut best: Option<usize> = None;
    for idx in 0..a.transitions().len() {
        if classify_transition(a, idx) != kind {
            continue;
        }
        best = Some(match best {
            None => idx,
            Some(b) => {
                let (tb, ti) = (&a.transitions()[b], &a.transitions()[idx]);
                let order = ti
                    .label
                    .len()
                    .cmp(&tb.label.len())
                    .reverse()
                    .then(ti.source.cmp(&tb.source))
                    .then(ti.label.cmp(&tb.label));
                if order == std::cmp::Ordering::Less {
                    idx
                } else {
                    b
                }
            }
        });
    }
    best
}

fn without_transition(a: &Dsa, idx: usize) -> Dsa {
    let transitions = a
        .transitions()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != idx)
        .map(|(_, t)| (t.source, t.label.clone(), t.target));
    Dsa::new(
        a.names().to_vec(),
        a.alphabet().clone(),
        a.initial(),
        a.accepting().iter().copied(),
        transitions,
    )
}

/// Removes useless transitions from a well-formed DSA, preserving its
/// language.
///
/// Phase 1 repeatedly removes useless bigger-suffix transitions, phase 2
/// useless self-loops; since a self-loop removal can expose new phase-1
/// candidates, the two phases iterate to a global fixpoint. Verdicts are
/// recomputed after every removal. Unreachable states are dropped at the
/// end.
pub fn remove_useless(a: &Dsa) -> Result<Dsa, DeriveError> {
    remove_useless_impl(a, false)
}

/// As [`remove_useless`], additionally checking language preservation
/// through the tracking DFA after every single removal. Expensive; meant for
/// tests at desk scale.
pub fn remove_useless_audited(a: &Dsa) -> Result<Dsa, DeriveError> {
    remove_useless_impl(a, true)
}

fn remove_useless_impl(a: &Dsa, audit: bool) -> Result<Dsa, DeriveError> {
    if !is_dsa_well_formed(a).is_empty() {
        return Err(DeriveError::NotWellFormed);
    }
    let mut current = a.clone();
    loop {
        while let Some(idx) = next_candidate(&current, UselessKind::UselessBiggerSuffix) {
            current = commit_removal(current, idx, audit);
        }
        let mut removed_loop = false;
        while let Some(idx) = next_candidate(&current, UselessKind::UselessSelfLoop) {
            current = commit_removal(current, idx, audit);
            removed_loop = true;
        }
        // Self-loop removals shrink Out sets, which can expose new phase-1
        // candidates; iterate to a global fixpoint.
        if !removed_loop {
            break;
        }
    }
    Ok(trim_unreachable(&current))
}

fn commit_removal(a: Dsa, idx: usize, audit: bool) -> Dsa {
    let next = without_transition(&a, idx);
    if audit {
        let verdict = crate::dfa_ops::dsa_equiv(&a, &next).expect("same alphabet");
        assert!(
            verdict.holds(),
            "useless-transition removal changed the language on {:?}",
            a.transitions()[idx]
        );
    }
    next
}

fn trim_unreachable(a: &Dsa) -> Dsa {
    let reachable = a.reachable_states();
    if reachable.len() == a.n_states() {
        return a.clone();
    }
    let mut keep: Vec<StateId> = reachable;
    keep.sort_unstable();
    let index: HashMap<StateId, StateId> = keep.iter().enumerate().map(|(i, &q)| (q, i)).collect();
    let names = keep.iter().map(|&q| a.name(q).to_string()).collect();
    let transitions = a
        .transitions()
        .iter()
        .filter(|t| index.contains_key(&t.source) && index.contains_key(&t.target))
        .map(|t| (index[&t.source], t.label.clone(), index[&t.target]));
    let accepting: Vec<StateId> = a
        .accepting()
        .iter()
        .filter_map(|q| index.get(q).copied())
        .collect();
    Dsa::new(
        names,
        a.alphabet().clone(),
        index[&a.initial()],
        accepting,
        transitions,
    )
}

/// The full DFA-to-DSA derivation: induce from a suffix-tracking set, then
/// remove all useless transitions. The result is language-equivalent to the
/// host DFA.
pub fn derive(m: &Dfa, s: &BTreeSet<StateId>, caps: &Caps) -> Result<Dsa, DeriveError> {
    let induced = induced_dsa(m, s, caps, false)?;
    remove_useless(&induced)
}

/// Enumerates the suffix-tracking sets of `m` in deterministic order:
/// increasing cardinality, then lexicographic on the sorted members. Every
/// yielded set contains the initial and accepting states. `limit` bounds the
/// number of sets returned.
pub fn enumerate_suffix_tracking_sets(
    m: &Dfa,
    limit: Option<usize>,
    max_card: Option<usize>,
    caps: &Caps,
) -> Result<Vec<BTreeSet<StateId>>, DeriveError> {
    if m.n_states() > caps.max_enum_states {
        return Err(DeriveError::TooManyStates {
            states: m.n_states(),
            max: caps.max_enum_states,
        });
    }
    if !m.is_complete() {
        return Err(DeriveError::IncompleteDfa);
    }
    let mut found = Vec::new();
    for s in candidate_sets(m, max_card) {
        if is_suffix_tracking(m, &s, caps)?.is_suffix_tracking {
            found.push(s);
            if limit.map_or(false, |l| found.len() >= l) {
                break;
            }
        }
    }
    Ok(found)
}

/// All subsets containing the initial and accepting states, by cardinality
/// then lexicographically.
pub(crate) fn candidate_sets(m: &Dfa, max_card: Option<usize>) -> Vec<BTreeSet<StateId>> {
    let mut required: BTreeSet<StateId> = m.accepting().clone();
    required.insert(m.initial());
    let free: Vec<StateId> = m.states().filter(|q| !required.contains(q)).collect();
    let mut out = Vec::new();
    for extra in 0..=free.len() {
        if max_card.map_or(false, |c| required.len() + extra > c) {
            break;
        }
        let mut chosen = Vec::new();
        combinations(&free, extra, 0, &mut chosen, &mut |combo| {
            let mut s = required.clone();
            s.extend(combo.iter().copied());
            out.push(s);
        });
    }
    out
}

fn combinations(
    items: &[StateId],
    k: usize,
    start: usize,
    chosen: &mut Vec<StateId>,
    yield_fn: &mut impl FnMut(&[StateId]),
) {
    if chosen.len() == k {
        yield_fn(chosen);
        return;
    }
    for i in start..items.len() {
        chosen.push(items[i]);
        combinations(items, k, i + 1, chosen, yield_fn);
        chosen.pop();
    }
}

/// Derives over every suffix-tracking set and keeps the smallest result by
/// total size, breaking ties by fewer states and then by canonical text.
pub fn derive_smallest(m: &Dfa, caps: &Caps) -> Result<(Dsa, BTreeSet<StateId>), DeriveError> {
    let mut best: Option<(Dsa, BTreeSet<StateId>, usize, String)> = None;
    for s in candidate_sets(m, None) {
        if let Some((_, _, total, _)) = &best {
            // Each kept state costs at least 1, so larger sets cannot win.
            if s.len() > *total {
                continue;
            }
        }
        if !is_suffix_tracking(m, &s, caps)?.is_suffix_tracking {
            continue;
        }
        let derived = derive(m, &s, caps)?;
        let total = dsa_size(&derived).total;
        let text = crate::io::dsa_to_text(&derived);
        let better = match &best {
            None => true,
            Some((b, _, bt, btext)) => {
                (total, derived.n_states(), &text) < (*bt, b.n_states(), btext)
            }
        };
        if better {
            best = Some((derived, s, total, text));
        }
    }
    let (dsa, s, _, _) = best.expect("the all-states set is always suffix-tracking");
    Ok((dsa, s))
}
