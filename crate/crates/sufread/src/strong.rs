//! Strong DSAs, well-formedness of DSAs, minimal strong-DSA synthesis from
//! the canonical DFA, and a brute-force minimality oracle over all small
//! DSAs.

use std::collections::BTreeSet;
use std::fmt;

use crate::core::{
    dsa_size, is_suffix, Alphabet, Dfa, Dsa, StateId, Word,
};
use crate::derivation::{candidate_sets, derive, is_suffix_tracking, Caps, DeriveError};
use crate::dfa_ops::{complete, dfa_equiv, dsa_isomorphic, minimize, residual_equiv, Equiv};
use crate::tracking::tracking_dfa;

/// A label pair breaking DSA well-formedness: `alpha` is a suffix of the
/// proper prefix `beta_prefix` of sibling label `beta`, so a transition on
/// `beta` could never fire.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WellFormedViolation {
    pub state: StateId,
    pub alpha: Word,
    pub beta: Word,
    pub beta_prefix: Word,
}

/// Checks Out-label well-formedness at every state: no outgoing label may be
/// a suffix of a proper prefix of a sibling outgoing label.
pub fn is_dsa_well_formed(a: &Dsa) -> Vec<WellFormedViolation> {
    let mut out = Vec::new();
    for q in a.states() {
        let labels = a.out_labels(q);
        for alpha in &labels {
            for beta in &labels {
                for cut in 0..beta.len() {
                    let beta_prefix = beta.prefix(cut);
                    if is_suffix(alpha, &beta_prefix) {
                        out.push(WellFormedViolation {
                            state: q,
                            alpha: (*alpha).clone(),
                            beta: (*beta).clone(),
                            beta_prefix,
                        });
                    }
                }
            }
        }
    }
    out
}

/// A pair of sibling labels breaking strong determinism: the non-trivial
/// prefix `alpha_prefix` of `alpha` occurs as a suffix inside the proper
/// prefix `beta_prefix` of `beta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongViolation {
    pub state: StateId,
    pub alpha: Word,
    pub beta: Word,
    pub alpha_prefix: Word,
    pub beta_prefix: Word,
}

impl fmt::Display for StrongViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at state {}: prefix {} of {} is a suffix of {} (proper prefix of {})",
            self.state, self.alpha_prefix, self.alpha, self.beta_prefix, self.beta
        )
    }
}

/// Checks strong determinism: for every state and every pair of distinct
/// outgoing labels `alpha`, `beta`, no non-trivial prefix of `alpha` is a
/// suffix of a non-trivial proper prefix of `beta`. The pair must be
/// distinct: a label always begins with a prefix of itself, so identical
/// pairs would outlaw every multi-letter label.
pub fn is_strong(a: &Dsa) -> Vec<StrongViolation> {
    let mut out = Vec::new();
    for q in a.states() {
        let labels = a.out_labels(q);
        for alpha in &labels {
            for beta in &labels {
                if alpha == beta {
                    continue;
                }
                for ac in 1..=alpha.len() {
                    let alpha_prefix = alpha.prefix(ac);
                    for bc in 1..beta.len() {
                        let beta_prefix = beta.prefix(bc);
                        if is_suffix(&alpha_prefix, &beta_prefix) {
                            out.push(StrongViolation {
                                state: q,
                                alpha: (*alpha).clone(),
                                beta: (*beta).clone(),
                                alpha_prefix: alpha_prefix.clone(),
                                beta_prefix,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

/// True iff the two DSA states have equal residual languages, decided on the
/// tracking DFA.
pub fn dsa_residual_equiv(a: &Dsa, q1: StateId, q2: StateId) -> bool {
    let tracking = tracking_dfa(a).expect("structurally valid DSA");
    residual_equiv(&tracking.dfa, tracking.dsa_state(q1), tracking.dsa_state(q2))
        .expect("tracking DFA is complete")
}

/// Synthesizes a smallest strong DSA derivable from the canonical DFA of
/// `m`'s language: minimizes, enumerates suffix-tracking sets, derives each,
/// keeps the strong results and returns the smallest by total size (ties:
/// fewer states, then canonical text). The all-states set always derives a
/// strong DSA, so the search cannot come up empty.
pub fn minimize_strong(m: &Dfa, caps: &Caps) -> Result<(Dsa, BTreeSet<StateId>), DeriveError> {
    let mut all = minimize_strong_all(m, caps)?;
    Ok(all.swap_remove(0))
}

/// All smallest strong derivations from the canonical DFA, in deterministic
/// order. Exposes non-uniqueness where it occurs.
pub fn minimize_strong_all(
    m: &Dfa,
    caps: &Caps,
) -> Result<Vec<(Dsa, BTreeSet<StateId>)>, DeriveError> {
    let (canonical, _) = minimize(&complete(m)).map_err(|_| DeriveError::IncompleteDfa)?;
    if canonical.n_states() > caps.max_enum_states {
        return Err(DeriveError::TooManyStates {
            states: canonical.n_states(),
            max: caps.max_enum_states,
        });
    }
    let mut best: Vec<(Dsa, BTreeSet<StateId>, usize, String)> = Vec::new();
    for s in candidate_sets(&canonical, None) {
        if !is_suffix_tracking(&canonical, &s, caps)?.is_suffix_tracking {
            continue;
        }
        let derived = derive(&canonical, &s, caps)?;
        if !is_strong(&derived).is_empty() {
            continue;
        }
        let total = dsa_size(&derived).total;
        let text = crate::io::dsa_to_text(&derived);
        match best.first() {
            None => best.push((derived, s, total, text)),
            Some((b, _, bt, _)) => {
                let key = (total, derived.n_states());
                let best_key = (*bt, b.n_states());
                if key < best_key {
                    best.clear();
                    best.push((derived, s, total, text));
                } else if key == best_key {
                    best.push((derived, s, total, text));
                }
            }
        }
    }
    best.sort_by(|a, b| a.3.cmp(&b.3));
    best.dedup_by(|a, b| a.3 == b.3);
    Ok(best
        .into_iter()
        .map(|(dsa, s, _, _)| (dsa, s))
        .collect())
}

/// Guards and switches for [`brute_force_min_dsa`].
#[derive(Clone, Copy, Debug)]
pub struct BruteForceOptions {
    /// Restrict the search to strong candidates.
    pub strong_only: bool,
    /// Collect every minimum (up to isomorphism) instead of one witness.
    pub collect_all_minima: bool,
}

impl Default for BruteForceOptions {
    fn default() -> Self {
        BruteForceOptions {
            strong_only: false,
            collect_all_minima: false,
        }
    }
}

/// Search guard violations for the brute-force oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BruteForceError {
    AlphabetTooLarge { size: usize, max: usize },
    BoundTooLarge { bound: usize, max: usize },
}

impl fmt::Display for BruteForceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BruteForceError::AlphabetTooLarge { size, max } => {
                write!(f, "brute force guard: alphabet size {size} exceeds {max}")
            }
            BruteForceError::BoundTooLarge { bound, max } => {
                write!(f, "brute force guard: total-size bound {bound} exceeds {max}")
            }
        }
    }
}

impl std::error::Error for BruteForceError {}

const MAX_BRUTE_ALPHABET: usize = 3;
const MAX_BRUTE_TOTAL: usize = 10;

/// Result of the exhaustive search: either a smallest equivalent DSA within
/// the bound, or the certificate that none exists at or below it.
#[derive(Clone, Debug)]
pub struct MinimalityCertificate {
    pub automaton: Option<Dsa>,
    pub total: Option<usize>,
    pub search_bound: usize,
    /// All candidates of total size up to `search_bound` (or up to `total`
    /// when a witness was found) were enumerated.
    pub exhausted: bool,
    /// When requested, all pairwise non-isomorphic minima at `total`.
    pub minima: Vec<Dsa>,
}

/// Exhaustively searches for a DSA of total size at most `max_total` that is
/// language-equivalent to `target`.
///
/// Candidates are enumerated in increasing total size, up to BFS-canonical
/// state renaming: state 0 is initial and states are numbered in discovery
/// order over transitions sorted by (label length, label), which visits each
/// isomorphism class of reachable automata exactly once. Acceptance sets are
/// constrained word-by-word against the target's language rather than
/// enumerated blindly.
pub fn brute_force_min_dsa(
    target: &Dfa,
    max_total: usize,
    opts: BruteForceOptions,
) -> Result<MinimalityCertificate, BruteForceError> {
    let k = target.alphabet().len();
    if k > MAX_BRUTE_ALPHABET {
        return Err(BruteForceError::AlphabetTooLarge {
            size: k,
            max: MAX_BRUTE_ALPHABET,
        });
    }
    if max_total > MAX_BRUTE_TOTAL {
        return Err(BruteForceError::BoundTooLarge {
            bound: max_total,
            max: MAX_BRUTE_TOTAL,
        });
    }

    let target_complete = complete(target);
    let search = Search::new(&target_complete, opts);

    for total in 1..=max_total {
        let mut hits: Vec<Dsa> = Vec::new();
        search.structures_of_total(total, &mut |structure| {
            search.check_structure(structure, &mut hits);
        });
        if !hits.is_empty() {
            let minima = if opts.collect_all_minima {
                let mut unique: Vec<Dsa> = Vec::new();
                for cand in hits.iter() {
                    if !unique.iter().any(|u| dsa_isomorphic(u, cand)) {
                        unique.push(cand.clone());
                    }
                }
                unique
            } else {
                Vec::new()
            };
            return Ok(MinimalityCertificate {
                automaton: Some(hits.swap_remove(0)),
                total: Some(total),
                search_bound: max_total,
                exhausted: true,
                minima,
            });
        }
    }
    Ok(MinimalityCertificate {
        automaton: None,
        total: None,
        search_bound: max_total,
        exhausted: true,
        minima: Vec::new(),
    })
}

/// A candidate under construction: per-state sorted transition lists over
/// symbol indices.
struct Structure {
    n: usize,
    /// (source, label over symbol indices, target), grouped by source in
    /// enumeration order.
    edges: Vec<(u8, Vec<u8>, u8)>,
}

struct Search<'a> {
    target: &'a Dfa,
    opts: BruteForceOptions,
    /// Label universe in (length, lexicographic) order.
    labels: Vec<Vec<u8>>,
    /// Probe words over symbol indices, shortest first, with the target's
    /// verdicts.
    probes: Vec<(Vec<u8>, bool)>,
}

impl<'a> Search<'a> {
    fn new(target: &'a Dfa, opts: BruteForceOptions) -> Self {
        let k = target.alphabet().len();
        let max_label = MAX_BRUTE_TOTAL.saturating_sub(2);
        let mut labels: Vec<Vec<u8>> = Vec::new();
        let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
        for _ in 0..max_label {
            let mut next = Vec::new();
            for l in &layer {
                for s in 0..k as u8 {
                    let mut e = l.clone();
                    e.push(s);
                    next.push(e);
                }
            }
            labels.extend(next.iter().cloned());
            layer = next;
        }

        let probe_len = 6usize;
        let mut probes = Vec::new();
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        let mut frontier: Vec<Vec<u8>> = vec![Vec::new()];
        for _ in 0..probe_len {
            let mut next = Vec::new();
            for w in &frontier {
                for s in 0..k as u8 {
                    let mut e = w.clone();
                    e.push(s);
                    next.push(e);
                }
            }
            words.extend(next.iter().cloned());
            frontier = next;
        }
        for w in words {
            let verdict = {
                let mut q = target.initial();
                for &s in &w {
                    q = target.step_idx(q, s as usize).unwrap();
                }
                target.is_accepting(q)
            };
            probes.push((w, verdict));
        }

        Search {
            target,
            opts,
            labels,
            probes,
        }
    }

    /// Enumerates all BFS-canonical structures of the exact total size.
    fn structures_of_total(&self, total: usize, f: &mut impl FnMut(&Structure)) {
        for n in 1..=total.saturating_sub(0) {
            if n > total {
                break;
            }
            let budget = total - n;
            // Discovering states 1..n needs at least (n-1) transitions of
            // cost ≥ 2 each.
            if budget < 2 * (n - 1) {
                continue;
            }
            let mut structure = Structure {
                n,
                edges: Vec::new(),
            };
            self.rec_state(&mut structure, 0, 1, budget, 0, f);
        }
    }

    /// Extends the structure at state `q`, whose next label must rank at or
    /// after `min_rank`. `d` is the number of discovered states.
    #[allow(clippy::too_many_arguments)]
    fn rec_state(
        &self,
        structure: &mut Structure,
        q: usize,
        d: usize,
        remaining: usize,
        min_rank: usize,
        f: &mut impl FnMut(&Structure),
    ) {
        // Close state q and move on.
        if q + 1 < structure.n {
            if q + 1 < d {
                self.rec_state(structure, q + 1, d, remaining, 0, f);
            }
            // A state beyond the discovery frontier would be unreachable.
        } else if remaining == 0 && d == structure.n {
            f(structure);
        }

        // Or add one more transition to state q.
        for rank in min_rank..self.labels.len() {
            let label = &self.labels[rank];
            let cost = 1 + label.len();
            if cost > remaining {
                break; // labels only get longer from here
            }
            if self.opts.strong_only && !self.strong_compatible(structure, q, label) {
                continue;
            }
            let max_target = d.min(structure.n - 1);
            for target in 0..=max_target {
                let d_after = if target == d { d + 1 } else { d };
                let undiscovered = structure.n - d_after;
                if remaining - cost < 2 * undiscovered {
                    continue;
                }
                structure.edges.push((q as u8, label.clone(), target as u8));
                self.rec_state(structure, q, d_after, remaining - cost, rank + 1, f);
                structure.edges.pop();
            }
        }
    }

    /// Pairwise strong-determinism check of `label` against the labels
    /// already placed at `q`.
    fn strong_compatible(&self, structure: &Structure, q: usize, label: &[u8]) -> bool {
        for (src, other, _) in &structure.edges {
            if *src as usize != q {
                continue;
            }
            if !strong_pair(other, label) || !strong_pair(label, other) {
                return false;
            }
        }
        true
    }

    /// Runs the candidate on every probe word, deriving which states must or
    /// must not accept; surviving acceptance sets get the exact check.
    fn check_structure(&self, structure: &Structure, hits: &mut Vec<Dsa>) {
        let mut required: u32 = 0;
        let mut forbidden: u32 = 0;
        for (word, want) in &self.probes {
            let (final_state, clean) = run_indexed(structure, word);
            if *want {
                if !clean {
                    return;
                }
                required |= 1 << final_state;
            } else if clean {
                forbidden |= 1 << final_state;
            }
            if required & forbidden != 0 {
                return;
            }
        }
        let free: Vec<usize> = (0..structure.n)
            .filter(|i| required & (1 << i) == 0 && forbidden & (1 << i) == 0)
            .collect();
        // Every consistent acceptance set is required ∪ (subset of free).
        for pick in 0..(1u32 << free.len()) {
            let mut accepting = required;
            for (bit, &state) in free.iter().enumerate() {
                if pick & (1 << bit) != 0 {
                    accepting |= 1 << state;
                }
            }
            if let Some(dsa) = self.exact_check(structure, accepting) {
                hits.push(dsa);
            }
        }
    }

    fn exact_check(&self, structure: &Structure, accepting: u32) -> Option<Dsa> {
        let alphabet = self.target.alphabet();
        let transitions = structure.edges.iter().map(|(src, label, dst)| {
            let word = Word::new(
                label
                    .iter()
                    .map(|&s| alphabet.symbols()[s as usize].clone())
                    .collect(),
            );
            (*src as StateId, word, *dst as StateId)
        });
        let dsa = Dsa::from_parts(
            structure.n,
            alphabet.clone(),
            0,
            (0..structure.n).filter(|i| accepting & (1 << i) != 0),
            transitions,
        );
        let tracking = tracking_dfa(&dsa).ok()?;
        match dfa_equiv(&tracking.dfa, self.target).ok()? {
            Equiv::Equivalent => Some(dsa),
            Equiv::Distinguished(_) => None,
        }
    }
}

/// Strong-determinism check of the ordered pair (alpha, beta) over indexed
/// labels: no non-trivial prefix of `alpha` ends a non-trivial proper prefix
/// of `beta`.
fn strong_pair(alpha: &[u8], beta: &[u8]) -> bool {
    for ac in 1..=alpha.len() {
        let ap = &alpha[..ac];
        for bc in 1..beta.len() {
            let bp = &beta[..bc];
            if bp.len() >= ap.len() && &bp[bp.len() - ap.len()..] == ap {
                return false;
            }
        }
    }
    true
}

/// Runs a structure on a word of symbol indices; returns the final state and
/// whether the residue is empty.
fn run_indexed(structure: &Structure, word: &[u8]) -> (usize, bool) {
    let mut state = 0u8;
    let mut pos = 0usize;
    'outer: loop {
        let rest = &word[pos..];
        if rest.is_empty() {
            return (state as usize, true);
        }
        for cut in 1..=rest.len() {
            let read = &rest[..cut];
            // Longest label among this state's that suffixes `read`.
            let mut best: Option<(usize, u8)> = None;
            for (src, label, dst) in &structure.edges {
                if *src != state || label.len() > read.len() {
                    continue;
                }
                if &read[read.len() - label.len()..] == label.as_slice()
                    && best.map_or(true, |(blen, _)| label.len() > blen)
                {
                    best = Some((label.len(), *dst));
                }
            }
            if let Some((_, dst)) = best {
                state = dst;
                pos += cut;
                continue 'outer;
            }
        }
        return (state as usize, false);
    }
}

/// Convenience wrapper: a complete DFA for the target language built from a
/// DSA, used when the oracle's target is easier to state as a DSA.
pub fn brute_force_min_for_dsa(
    target: &Dsa,
    max_total: usize,
    opts: BruteForceOptions,
) -> Result<MinimalityCertificate, BruteForceError> {
    let tracking = tracking_dfa(target).expect("structurally valid DSA");
    brute_force_min_dsa(&tracking.dfa, max_total, opts)
}

/// Empty-language helper for tests: a one-state complete DFA with no
/// accepting states.
pub fn empty_language_dfa(alphabet: Alphabet) -> Dfa {
    let mut m = Dfa::from_edges(1, alphabet.clone(), 0, [], []);
    for sym in alphabet.symbols() {
        m.set_edge(0, sym, 0);
    }
    m
}
