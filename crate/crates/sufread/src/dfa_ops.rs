//! Classical DFA machinery: completion, minimization, isomorphism and exact
//! language equivalence, plus the DSA-level wrappers that go through the
//! tracking construction.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::core::{Alphabet, Dfa, Dsa, StateId, Word};
use crate::tracking::tracking_dfa;

/// Partition of a DFA's states into blocks of Nerode-equivalent states.
/// Two states share a block iff their residual languages are equal.
#[derive(Clone, Debug)]
pub struct EquivClasses {
    /// `class_of[q]` is the block index of state `q`.
    pub class_of: Vec<usize>,
    /// Members of each block, sorted.
    pub blocks: Vec<Vec<StateId>>,
}

/// Adds at most one non-accepting sink plus all missing edges. Idempotent on
/// complete DFAs; the language is unchanged.
pub fn complete(m: &Dfa) -> Dfa {
    if m.is_complete() {
        return m.clone();
    }
    let sink = m.n_states();
    let mut names = m.names().to_vec();
    let mut sink_name = "sink".to_string();
    let mut i = 0;
    while names.contains(&sink_name) {
        i += 1;
        sink_name = format!("sink{i}");
    }
    names.push(sink_name);
    let mut out = Dfa::new(
        names,
        m.alphabet().clone(),
        m.initial(),
        m.accepting().iter().copied(),
    );
    for q in m.states() {
        for (i, sym) in m.alphabet().symbols().iter().enumerate() {
            out.set_edge(q, sym, m.step_idx(q, i).unwrap_or(sink));
        }
    }
    for sym in m.alphabet().symbols() {
        out.set_edge(sink, sym, sink);
    }
    out
}

/// Error for operations that require a complete DFA.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct IncompleteDfa;

impl fmt::Display for IncompleteDfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("operation requires a complete DFA")
    }
}

impl std::error::Error for IncompleteDfa {}

/// Moore partition refinement over all states of a complete DFA.
///
/// The returned classes cover every state (including unreachable ones, whose
/// residual languages are still well defined); the canonical DFA is built
/// from the blocks reachable from the initial block, numbered in BFS order
/// over the sorted alphabet so that equivalent inputs yield identical
/// outputs up to block naming.
pub fn minimize(m: &Dfa) -> Result<(Dfa, EquivClasses), IncompleteDfa> {
    if !m.is_complete() {
        return Err(IncompleteDfa);
    }
    let n = m.n_states();
    let k = m.alphabet().len();
    let mut class_of: Vec<usize> = (0..n).map(|q| usize::from(m.is_accepting(q))).collect();
    let mut n_classes = if class_of.iter().any(|&c| c == 1) && class_of.iter().any(|&c| c == 0) {
        2
    } else {
        1
    };
    if n_classes == 1 {
        // All states agree on acceptance; normalize to class 0.
        class_of.iter_mut().for_each(|c| *c = 0);
    }
    loop {
        // Signature of a state: its class plus the classes of its successors.
        let mut sig_to_class: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut next: Vec<usize> = vec![0; n];
        for q in 0..n {
            let mut sig = Vec::with_capacity(k + 1);
            sig.push(class_of[q]);
            for i in 0..k {
                sig.push(class_of[m.step_idx(q, i).unwrap()]);
            }
            let fresh = sig_to_class.len();
            next[q] = *sig_to_class.entry(sig).or_insert(fresh);
        }
        let next_count = sig_to_class.len();
        if next_count == n_classes {
            class_of = next;
            break;
        }
        class_of = next;
        n_classes = next_count;
    }

    // Number reachable blocks in BFS order from the initial block.
    let mut block_index: HashMap<usize, usize> = HashMap::new();
    let mut order: Vec<usize> = Vec::new();
    let mut queue = VecDeque::new();
    let start = class_of[m.initial()];
    block_index.insert(start, 0);
    order.push(start);
    queue.push_back(m.initial());
    let mut rep_of_block: Vec<StateId> = vec![m.initial()];
    while let Some(q) = queue.pop_front() {
        for i in 0..k {
            let t = m.step_idx(q, i).unwrap();
            let c = class_of[t];
            if !block_index.contains_key(&c) {
                block_index.insert(c, order.len());
                order.push(c);
                rep_of_block.push(t);
                queue.push_back(t);
            }
        }
    }

    let mut names = Vec::with_capacity(order.len());
    let mut blocks_sorted: Vec<Vec<StateId>> = vec![Vec::new(); order.len()];
    for q in 0..n {
        if let Some(&b) = block_index.get(&class_of[q]) {
            blocks_sorted[b].push(q);
        }
    }
    for members in &mut blocks_sorted {
        members.sort_unstable();
    }
    for members in &blocks_sorted {
        let joined: Vec<&str> = members.iter().map(|&q| m.name(q)).collect();
        names.push(joined.join("+"));
    }

    let accepting: Vec<usize> = (0..order.len())
        .filter(|&b| m.is_accepting(rep_of_block[b]))
        .collect();
    let mut canon = Dfa::new(names, m.alphabet().clone(), 0, accepting);
    for (b, &rep) in rep_of_block.iter().enumerate() {
        for (i, sym) in m.alphabet().symbols().iter().enumerate() {
            let t = m.step_idx(rep, i).unwrap();
            canon.set_edge(b, sym, block_index[&class_of[t]]);
        }
    }

    // Report classes over all states, renumbered so reachable blocks come
    // first in canonical order.
    let mut final_index: HashMap<usize, usize> = block_index.clone();
    for q in 0..n {
        let c = class_of[q];
        let fresh = final_index.len();
        final_index.entry(c).or_insert(fresh);
    }
    let class_of: Vec<usize> = (0..n).map(|q| final_index[&class_of[q]]).collect();
    let mut blocks: Vec<Vec<StateId>> = vec![Vec::new(); final_index.len()];
    for q in 0..n {
        blocks[class_of[q]].push(q);
    }
    Ok((canon, EquivClasses { class_of, blocks }))
}

/// Outcome of an equivalence check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Equiv {
    Equivalent,
    /// A shortest word accepted by exactly one of the two automata
    /// (lexicographically least among the shortest).
    Distinguished(Word),
}

impl Equiv {
    pub fn holds(&self) -> bool {
        matches!(self, Equiv::Equivalent)
    }

    pub fn counterexample(&self) -> Option<&Word> {
        match self {
            Equiv::Equivalent => None,
            Equiv::Distinguished(w) => Some(w),
        }
    }
}

/// The two automata declare different alphabets; equivalence is not defined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphabetMismatch {
    pub only_left: Vec<String>,
    pub only_right: Vec<String>,
}

impl fmt::Display for AlphabetMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "alphabet mismatch: left-only {{{}}}, right-only {{{}}}",
            self.only_left.join(", "),
            self.only_right.join(", ")
        )
    }
}

impl std::error::Error for AlphabetMismatch {}

fn check_alphabets(a: &Alphabet, b: &Alphabet) -> Result<(), AlphabetMismatch> {
    if a == b {
        return Ok(());
    }
    let left: BTreeSet<&str> = a.symbols().iter().map(|s| s.as_str()).collect();
    let right: BTreeSet<&str> = b.symbols().iter().map(|s| s.as_str()).collect();
    Err(AlphabetMismatch {
        only_left: left.difference(&right).map(|s| s.to_string()).collect(),
        only_right: right.difference(&left).map(|s| s.to_string()).collect(),
    })
}

/// Exact language equivalence via breadth-first search over the product of
/// the completed automata. On failure returns the shortest distinguishing
/// word, which makes test diagnostics concrete.
pub fn dfa_equiv(m1: &Dfa, m2: &Dfa) -> Result<Equiv, AlphabetMismatch> {
    check_alphabets(m1.alphabet(), m2.alphabet())?;
    let m1 = complete(m1);
    let m2 = complete(m2);
    let k = m1.alphabet().len();
    let mut seen = vec![false; m1.n_states() * m2.n_states()];
    let key = |a: StateId, b: StateId| a * m2.n_states() + b;
    let mut queue: VecDeque<(StateId, StateId, Word)> = VecDeque::new();
    seen[key(m1.initial(), m2.initial())] = true;
    queue.push_back((m1.initial(), m2.initial(), Word::empty()));
    while let Some((a, b, w)) = queue.pop_front() {
        if m1.is_accepting(a) != m2.is_accepting(b) {
            return Ok(Equiv::Distinguished(w));
        }
        for i in 0..k {
            let (na, nb) = (m1.step_idx(a, i).unwrap(), m2.step_idx(b, i).unwrap());
            if !seen[key(na, nb)] {
                seen[key(na, nb)] = true;
                queue.push_back((na, nb, w.appended(&m1.alphabet().symbols()[i])));
            }
        }
    }
    Ok(Equiv::Equivalent)
}

/// Looks for a state bijection preserving initial, accepting and transition
/// structure, by synchronized BFS from the initial states. Inputs should be
/// complete; reachability from the initial state is required for the map to
/// be a bijection.
pub fn dfa_isomorphic(m1: &Dfa, m2: &Dfa) -> Option<Vec<StateId>> {
    if m1.alphabet() != m2.alphabet() || m1.n_states() != m2.n_states() {
        return None;
    }
    let n = m1.n_states();
    let mut map: Vec<Option<StateId>> = vec![None; n];
    let mut hit: Vec<bool> = vec![false; n];
    let mut queue = VecDeque::new();
    map[m1.initial()] = Some(m2.initial());
    hit[m2.initial()] = true;
    queue.push_back(m1.initial());
    let mut matched = 1;
    while let Some(q) = queue.pop_front() {
        let img = map[q].unwrap();
        if m1.is_accepting(q) != m2.is_accepting(img) {
            return None;
        }
        for i in 0..m1.alphabet().len() {
            match (m1.step_idx(q, i), m2.step_idx(img, i)) {
                (None, None) => {}
                (Some(t1), Some(t2)) => match map[t1] {
                    Some(existing) => {
                        if existing != t2 {
                            return None;
                        }
                    }
                    None => {
                        if hit[t2] {
                            return None;
                        }
                        map[t1] = Some(t2);
                        hit[t2] = true;
                        matched += 1;
                        queue.push_back(t1);
                    }
                },
                _ => return None,
            }
        }
    }
    if matched != n {
        return None;
    }
    Some(map.into_iter().map(|x| x.unwrap()).collect())
}

/// Language equivalence of DSAs, decided on their tracking DFAs.
pub fn dsa_equiv(a1: &Dsa, a2: &Dsa) -> Result<Equiv, AlphabetMismatch> {
    check_alphabets(a1.alphabet(), a2.alphabet())?;
    let t1 = tracking_dfa(a1).expect("structurally valid DSA");
    let t2 = tracking_dfa(a2).expect("structurally valid DSA");
    dfa_equiv(&t1.dfa, &t2.dfa)
}

/// True iff the two states have equal residual languages, i.e. share a block
/// of the minimized automaton.
pub fn residual_equiv(m: &Dfa, s1: StateId, s2: StateId) -> Result<bool, IncompleteDfa> {
    let (_, classes) = minimize(m)?;
    Ok(classes.class_of[s1] == classes.class_of[s2])
}

/// Structural DSA isomorphism: a bijection of reachable states preserving
/// initial, accepting and word-labeled transitions. Decided by canonical
/// renumbering (BFS over transitions in label order) and comparison.
pub fn dsa_isomorphic(a1: &Dsa, a2: &Dsa) -> bool {
    if a1.alphabet() != a2.alphabet() {
        return false;
    }
    canonical_dsa_key(a1) == canonical_dsa_key(a2)
}

/// Renumbers reachable states by BFS discovery over transitions sorted by
/// (label length, label), then serializes the structure.
fn canonical_dsa_key(a: &Dsa) -> (Vec<(usize, Word, usize)>, Vec<bool>, usize) {
    let mut index: HashMap<StateId, usize> = HashMap::new();
    let mut order: Vec<StateId> = Vec::new();
    index.insert(a.initial(), 0);
    order.push(a.initial());
    let mut head = 0;
    while head < order.len() {
        let q = order[head];
        head += 1;
        for t in a.out(q) {
            if !index.contains_key(&t.target) {
                index.insert(t.target, order.len());
                order.push(t.target);
            }
        }
    }
    let mut edges: Vec<(usize, Word, usize)> = Vec::new();
    for &q in &order {
        for t in a.out(q) {
            edges.push((index[&q], t.label.clone(), index[&t.target]));
        }
    }
    let accepting: Vec<bool> = order.iter().map(|&q| a.is_accepting(q)).collect();
    (edges, accepting, order.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{dfa_size, Alphabet, Dfa, Word};
    use crate::samples;
    use crate::semantics::{dfa_accepts, words_up_to};

    fn w(s: &str) -> Word {
        Word::from_chars(s)
    }

    #[test]
    fn completion_adds_one_sink() {
        let trim = samples::ab_star_trim_dfa();
        assert_eq!(trim.n_states(), 2);
        let full = complete(&trim);
        assert!(full.is_complete());
        assert_eq!(full.n_states(), 3);
        for word in words_up_to(trim.alphabet(), 6) {
            assert_eq!(dfa_accepts(&trim, &word), dfa_accepts(&full, &word));
        }
        // Idempotent on complete DFAs.
        assert_eq!(complete(&full), full);
    }

    #[test]
    fn minimize_is_sound_and_canonical() {
        let m = samples::at_least_two_as_dfa();
        let (canon, classes) = minimize(&m).unwrap();
        assert!(dfa_equiv(&m, &canon).unwrap().holds());
        assert_eq!(classes.class_of.len(), m.n_states());

        // Minimizing a minimal DFA is an isomorphism.
        let (again, _) = minimize(&canon).unwrap();
        assert!(dfa_isomorphic(&canon, &again).is_some());
    }

    #[test]
    fn minimize_requires_complete() {
        let trim = samples::ab_star_trim_dfa();
        assert!(minimize(&trim).is_err());
    }

    #[test]
    fn suffix_chain_minimal_dfa_is_quadratic() {
        for n in [2usize, 4] {
            let m = samples::suffix_chain_dfa(n);
            let (canon, _) = minimize(&complete(&m)).unwrap();
            assert!(canon.n_states() * canon.alphabet().len() >= n * n);
        }
    }

    #[test]
    fn equivalence_and_counterexamples() {
        let m = samples::ends_with_ab_dfa();
        assert!(dfa_equiv(&m, &m).unwrap().holds());

        // Disagree exactly on words ending in "ab" vs containing two a's.
        let other = samples::at_least_two_as_dfa();
        match dfa_equiv(&m, &other).unwrap() {
            Equiv::Distinguished(cex) => {
                assert_ne!(dfa_accepts(&m, &cex), dfa_accepts(&other, &cex));
                // Shortest: nothing of smaller length distinguishes.
                for word in words_up_to(m.alphabet(), cex.len() - 1) {
                    assert_eq!(dfa_accepts(&m, &word), dfa_accepts(&other, &word));
                }
            }
            Equiv::Equivalent => panic!("languages differ"),
        }
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let m1 = samples::ends_with_ab_dfa();
        let m2 = Dfa::from_edges(1, Alphabet::from_chars("abc"), 0, [], []);
        assert!(dfa_equiv(&m1, &m2).is_err());
    }

    #[test]
    fn isomorphism_examples() {
        let m = samples::ends_with_ab_dfa();
        let mut renamed = m.clone();
        renamed.rename(vec!["x".into(), "y".into(), "z".into()]);
        assert!(dfa_isomorphic(&m, &renamed).is_some());

        let bigger = complete(&samples::ab_star_trim_dfa());
        assert!(dfa_isomorphic(&m, &bigger).is_none() || m.n_states() != bigger.n_states());
    }

    #[test]
    fn dsa_equivalence_through_tracking() {
        let a = samples::two_phase_dsa_late_split();
        let b = samples::two_phase_dsa_early_split();
        assert!(dsa_equiv(&a, &b).unwrap().holds());
        assert!(dsa_equiv(&a, &a).unwrap().holds());

        let a2 = samples::ends_with_aab_dsa();
        let a3 = samples::ab_then_bb_dsa();
        let verdict = dsa_equiv(&a2, &a3).unwrap();
        assert!(!verdict.holds());
        let cex = verdict.counterexample().unwrap();
        assert_ne!(
            crate::semantics::dsa_accepts(&a2, cex),
            crate::semantics::dsa_accepts(&a3, cex)
        );
    }

    #[test]
    fn residual_equivalence() {
        let m = samples::duplicated_state_dfa(1);
        let canon = samples::small_canonical_dfa(1);
        // The duplicate states collapse under minimization.
        let (min, _) = minimize(&m).unwrap();
        assert!(dfa_isomorphic(&min, &minimize(&canon).unwrap().0).is_some());
        let (p, p_dup) = samples::duplicated_state_pair();
        assert!(residual_equiv(&m, p, p_dup).unwrap());
        assert!(residual_equiv(&m, p, p).unwrap());
        // An accepting state never matches a non-accepting one.
        let acc = *m.accepting().iter().next().unwrap();
        assert!(!residual_equiv(&m, acc, m.initial()).unwrap());
    }

    #[test]
    fn refinement_maps_onto_canonical() {
        // The block map from a complete DFA onto its canonical DFA is a DFA
        // homomorphism: initial to initial, accepting to accepting, edges to
        // edges.
        for m in [
            samples::duplicated_state_dfa(1),
            samples::at_least_two_as_dfa(),
            complete(&samples::suffix_chain_dfa(3)),
        ] {
            let (canon, classes) = minimize(&m).unwrap();
            let reachable = m.reachable_states();
            assert_eq!(classes.class_of[m.initial()], canon.initial());
            for &q in &reachable {
                let b = classes.class_of[q];
                assert_eq!(m.is_accepting(q), canon.is_accepting(b));
                for (i, _) in m.alphabet().symbols().iter().enumerate() {
                    let t = m.step_idx(q, i).unwrap();
                    assert_eq!(canon.step_idx(b, i), Some(classes.class_of[t]));
                }
            }
            let _ = dfa_size(&canon);
        }
    }
}
