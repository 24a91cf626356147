//! The tracking DFA of a DSA: a complete DFA that simulates suffix-reading
//! semantics by remembering, per DSA state, the longest partially matched
//! prefix of an outgoing label.

use std::collections::HashMap;
use std::fmt;

use crate::core::{
    dsa_size, longest_suffix_in, validate_dsa, Dfa, Dsa, StateId, Violation, Word,
};

/// Origin of a tracking-DFA state.
///
/// `Pair(q, β)` tracks DSA state `q` with `β` the longest partial match among
/// the prefixes of `Out(q)`. `Copy(q)` mirrors `Pair(q, ε)`'s outgoing
/// transitions but is never accepting; one copy exists per DSA state, so the
/// fallback for "no progress" never re-accepts at an accepting `q`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum TrackState {
    Pair(StateId, Word),
    Copy(StateId),
}

impl fmt::Display for TrackState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrackState::Pair(q, b) => write!(f, "({q},{b})"),
            TrackState::Copy(q) => write!(f, "copy({q})"),
        }
    }
}

/// A tracking DFA together with the origin of each of its states.
#[derive(Clone, Debug)]
pub struct TrackingDfa {
    pub dfa: Dfa,
    /// `origin[s]` tells which [`TrackState`] DFA state `s` represents.
    pub origin: Vec<TrackState>,
    index: HashMap<TrackState, StateId>,
}

impl TrackingDfa {
    /// The DFA state for `Pair(q, β)`, when `β` is in the prefix closure of
    /// `Out(q)`.
    pub fn pair_state(&self, q: StateId, partial: &Word) -> Option<StateId> {
        self.index
            .get(&TrackState::Pair(q, partial.clone()))
            .copied()
    }

    /// The DFA state tracking DSA state `q` with no partial match.
    pub fn dsa_state(&self, q: StateId) -> StateId {
        self.pair_state(q, &Word::empty())
            .expect("every DSA state has an ε pair")
    }

    pub fn copy_state(&self, q: StateId) -> StateId {
        self.index.get(&TrackState::Copy(q)).copied().unwrap()
    }
}

/// Builds the tracking DFA of `a`.
///
/// States are all `(q, β)` with `β` in the prefix closure of `Out(q)`, plus
/// one copy state per DSA state. The initial state is `(init, ε)`; accepting
/// states are `(q, ε)` for accepting `q`. On symbol `a` from `(q, β)` the
/// successor follows the longest word `β'` in the closure that is a suffix
/// of `βa`: to `(q', ε)` when `β'` is a full label of a transition to `q'`,
/// to `(q, β')` when `β'` is a proper prefix, and to the copy of `q` when
/// `β' = ε`. Pair states for full labels are kept even though they are
/// unreachable by construction.
pub fn tracking_dfa(a: &Dsa) -> Result<TrackingDfa, Vec<Violation>> {
    let violations = validate_dsa(a);
    if !violations.is_empty() {
        return Err(violations);
    }

    let mut origin: Vec<TrackState> = Vec::new();
    let mut index: HashMap<TrackState, StateId> = HashMap::new();
    let mut add = |st: TrackState, origin: &mut Vec<TrackState>| -> StateId {
        let id = origin.len();
        index.insert(st.clone(), id);
        origin.push(st);
        id
    };

    // Closure states first, per DSA state, in (length, lex) order; then the
    // copy states. The order fixes state numbering deterministically.
    let mut closures: Vec<Vec<Word>> = Vec::with_capacity(a.n_states());
    for q in a.states() {
        let mut closure: Vec<Word> = a.out_prefix_closure(q).into_iter().collect();
        closure.sort_by(|x, y| x.cmp_len_lex(y));
        for b in &closure {
            add(TrackState::Pair(q, b.clone()), &mut origin);
        }
        closures.push(closure);
    }
    for q in a.states() {
        add(TrackState::Copy(q), &mut origin);
    }

    let names: Vec<String> = origin.iter().map(|st| track_name(a, st)).collect();
    let tracking = TrackingDfa {
        dfa: Dfa::new(names, a.alphabet().clone(), 0, []),
        origin,
        index,
    };
    let initial = tracking
        .index
        .get(&TrackState::Pair(a.initial(), Word::empty()))
        .copied()
        .unwrap();
    let accepting: Vec<StateId> = a
        .accepting()
        .iter()
        .map(|&q| tracking.index[&TrackState::Pair(q, Word::empty())])
        .collect();
    let mut dfa = Dfa::new(
        tracking.dfa.names().to_vec(),
        a.alphabet().clone(),
        initial,
        accepting,
    );

    // Resolve one step of the matcher for state q holding partial match β.
    let successor = |q: StateId, beta: &Word, sym_idx: usize| -> TrackState {
        let sym = &a.alphabet().symbols()[sym_idx];
        let extended = beta.appended(sym);
        let best = longest_suffix_in(closures[q].iter(), &extended)
            .cloned()
            .unwrap_or_else(Word::empty);
        if !best.is_empty() {
            if let Some(t) = a.out(q).find(|t| t.label == best) {
                return TrackState::Pair(t.target, Word::empty());
            }
            return TrackState::Pair(q, best);
        }
        TrackState::Copy(q)
    };

    for (id, st) in tracking.origin.iter().enumerate() {
        let (q, beta) = match st {
            TrackState::Pair(q, b) => (*q, b.clone()),
            TrackState::Copy(q) => (*q, Word::empty()),
        };
        for (i, sym) in a.alphabet().symbols().iter().enumerate() {
            let next = successor(q, &beta, i);
            dfa.set_edge(id, sym, tracking.index[&next]);
        }
    }

    Ok(TrackingDfa {
        dfa,
        origin: tracking.origin,
        index: tracking.index,
    })
}

fn track_name(a: &Dsa, st: &TrackState) -> String {
    match st {
        TrackState::Pair(q, b) if b.is_empty() => a.name(*q).to_string(),
        TrackState::Pair(q, b) => {
            let parts: Vec<&str> = b.symbols().iter().map(|s| s.as_str()).collect();
            format!("{}.{}", a.name(*q), parts.join("-"))
        }
        TrackState::Copy(q) => format!("{}.copy", a.name(*q)),
    }
}

/// Checks the size bound of the DSA-to-DFA direction: the tracking DFA has
/// at most `2·|A|` states and total size at most `2·|A|·(1 + 2·|Σ|)`.
pub fn tracking_size_bound_check(a: &Dsa) -> bool {
    let Ok(tracking) = tracking_dfa(a) else {
        return false;
    };
    let size = dsa_size(a).total;
    let states = tracking.dfa.n_states();
    let total = crate::core::dfa_size(&tracking.dfa).total;
    states <= 2 * size && total <= 2 * size * (1 + 2 * a.alphabet().len())
}

/// Per-word invariant of the tracking construction: while no label of
/// `Out(q)` occurs as a factor of `w`, the run from `(q, ε)` stays within
/// `Pair(q, ·)` and `Copy(q)` states and ends at the state tracking the
/// longest prefix-closure suffix of `w`.
#[cfg(test)]
fn run_stays_tracking(a: &Dsa, tracking: &TrackingDfa, q: StateId, w: &Word) -> bool {
    let closure = a.out_prefix_closure(q);
    let labels = a.out_labels(q);
    let has_factor = (0..=w.len()).any(|i| {
        (i..=w.len()).any(|j| {
            let fragment = Word::new(w.symbols()[i..j].to_vec());
            labels.iter().any(|l| **l == fragment)
        })
    });
    if has_factor {
        return true; // invariant only speaks about factor-free words
    }
    let mut s = tracking.dsa_state(q);
    for sym in w.symbols() {
        s = tracking.dfa.step(s, sym).unwrap();
        match &tracking.origin[s] {
            TrackState::Pair(p, _) if *p == q => {}
            TrackState::Copy(p) if *p == q => {}
            _ => return false,
        }
    }
    let expect = longest_suffix_in(closure.iter(), w)
        .cloned()
        .unwrap_or_else(Word::empty);
    match &tracking.origin[s] {
        TrackState::Pair(_, b) => *b == expect,
        TrackState::Copy(_) => expect.is_empty(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::Alphabet;
    use crate::samples;
    use crate::semantics::{dfa_accepts, dsa_accepts, words_up_to};

    fn w(s: &str) -> Word {
        Word::from_chars(s)
    }

    #[test]
    fn partial_match_states() {
        let a = samples::two_pattern_dsa();
        let tracking = tracking_dfa(&a).unwrap();
        // Reading aab from the fresh state leaves the matcher holding ab.
        let mut s = tracking.dsa_state(0);
        for sym in w("aab").symbols() {
            s = tracking.dfa.step(s, sym).unwrap();
        }
        assert_eq!(tracking.origin[s], TrackState::Pair(0, w("ab")));
    }

    #[test]
    fn tracking_is_complete_and_language_equal() {
        for a in [
            samples::ends_with_aab_dsa(),
            samples::ab_then_bb_dsa(),
            samples::block_pair_dsa(),
            samples::two_pattern_dsa(),
        ] {
            let tracking = tracking_dfa(&a).unwrap();
            assert!(tracking.dfa.is_complete());
            for word in words_up_to(a.alphabet(), 8) {
                assert_eq!(
                    dsa_accepts(&a, &word),
                    dfa_accepts(&tracking.dfa, &word),
                    "word {word}"
                );
            }
        }
    }

    #[test]
    fn single_state_dsa_tracks_empty_word_language() {
        let a = Dsa::from_parts(1, Alphabet::from_chars("ab"), 0, [0], []);
        let tracking = tracking_dfa(&a).unwrap();
        assert!(dfa_accepts(&tracking.dfa, &Word::empty()));
        for word in words_up_to(a.alphabet(), 4) {
            if !word.is_empty() {
                assert!(!dfa_accepts(&tracking.dfa, &word));
            }
        }
    }

    #[test]
    fn tracking_against_independent_dfa() {
        // Independent oracle: the hand-built complete DFA for Σ*aab.
        let a2 = samples::ends_with_aab_dsa();
        let tracking = tracking_dfa(&a2).unwrap();
        let oracle = samples::ends_with_aab_dfa();
        assert!(crate::dfa_ops::dfa_equiv(&tracking.dfa, &oracle)
            .unwrap()
            .holds());
    }

    #[test]
    fn factor_free_words_stay_in_their_component() {
        let a = samples::two_pattern_dsa();
        let tracking = tracking_dfa(&a).unwrap();
        for word in words_up_to(a.alphabet(), 6) {
            assert!(run_stays_tracking(&a, &tracking, 0, &word), "word {word}");
        }
    }

    #[test]
    fn size_bound_on_fixtures() {
        assert!(tracking_size_bound_check(&samples::ends_with_aab_dsa()));
        assert!(tracking_size_bound_check(&samples::suffix_chain_dsa(4)));
        assert!(tracking_size_bound_check(&samples::two_pattern_dsa()));
    }

    #[test]
    fn rejects_invalid_dsa() {
        let dup = Dsa::from_parts(
            2,
            Alphabet::from_chars("ab"),
            0,
            [1],
            [(0, w("ab"), 0), (0, w("ab"), 1)],
        );
        assert!(tracking_dfa(&dup).is_err());
    }
}
