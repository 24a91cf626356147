//! Execution of DFAs and DSAs on words.
//!
//! A DSA move fires at the first position where the word read so far ends
//! with one of the current state's outgoing labels; among labels matching at
//! that position, the longest wins. A run is the maximal move sequence plus
//! the dangling residue; it accepts when the final state is accepting and the
//! residue is empty.

use crate::core::{longest_suffix_in, Dfa, Dsa, StateId, Word};

/// One move of a DSA: the fired transition plus the word consumed by it.
/// The label is the longest out-label suffix of `consumed`, and no proper
/// prefix of `consumed` ends with any out-label of `source`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Move {
    pub source: StateId,
    pub label: Word,
    pub target: StateId,
    pub consumed: Word,
}

/// The full trace of a DSA on a word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Run {
    pub moves: Vec<Move>,
    /// The dangling suffix left when no further move is possible.
    pub residue: Word,
    pub final_state: StateId,
    pub accepted: bool,
}

/// Attempts one move of `a` from state `q` on `w`.
///
/// Scans `w` left to right; at the first position where some label of
/// `Out(q)` is a suffix of the prefix read so far, returns the move on the
/// longest such label together with the unread remainder. Returns `None`
/// when no prefix of `w` (including `w` itself) triggers a transition.
pub fn dsa_step(a: &Dsa, q: StateId, w: &Word) -> Option<(Move, Word)> {
    let labels = a.out_labels(q);
    if labels.is_empty() {
        return None;
    }
    for cut in 1..=w.len() {
        let read = w.prefix(cut);
        if let Some(label) = longest_suffix_in(labels.iter().copied(), &read) {
            let t = a
                .out(q)
                .find(|t| t.label == *label)
                .expect("label comes from Out(q)");
            let mv = Move {
                source: q,
                label: t.label.clone(),
                target: t.target,
                consumed: read,
            };
            return Some((mv, w.suffix_from(cut)));
        }
    }
    None
}

/// Runs `a` on `w` from its initial state and returns the full trace.
pub fn dsa_run(a: &Dsa, w: &Word) -> Run {
    dsa_run_from(a, a.initial(), w)
}

/// Runs `a` on `w` starting at `q`. Runs are unique: moves are replayed
/// deterministically until no move is possible on the remaining suffix.
pub fn dsa_run_from(a: &Dsa, q: StateId, w: &Word) -> Run {
    let mut state = q;
    let mut rest = w.clone();
    let mut moves = Vec::new();
    while let Some((mv, remaining)) = dsa_step(a, state, &rest) {
        state = mv.target;
        moves.push(mv);
        rest = remaining;
    }
    let accepted = a.is_accepting(state) && rest.is_empty();
    Run {
        moves,
        residue: rest,
        final_state: state,
        accepted,
    }
}

pub fn dsa_accepts(a: &Dsa, w: &Word) -> bool {
    dsa_run(a, w).accepted
}

/// The final state of the unique run of `m` on `w`, or `None` when a trim
/// DFA has no run.
pub fn dfa_run(m: &Dfa, w: &Word) -> Option<StateId> {
    let mut q = m.initial();
    for sym in w.symbols() {
        q = m.step(q, sym)?;
    }
    Some(q)
}

pub fn dfa_accepts(m: &Dfa, w: &Word) -> bool {
    dfa_run(m, w).map_or(false, |q| m.is_accepting(q))
}

/// Views a complete DFA as a DSA with single-letter labels.
pub fn dfa_as_dsa(m: &Dfa) -> Dsa {
    let transitions = m.edges().map(|(q, i, t)| {
        (
            q,
            Word::new(vec![m.alphabet().symbols()[i].clone()]),
            t,
        )
    });
    Dsa::new(
        m.names().to_vec(),
        m.alphabet().clone(),
        m.initial(),
        m.accepting().iter().copied(),
        transitions,
    )
}

/// Enumerates all words over `alphabet` with length at most `max_len`,
/// shortest first, lexicographic within a length. Used by the exhaustive
/// cross-checks in tests.
pub fn words_up_to(alphabet: &crate::core::Alphabet, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for sym in alphabet.symbols() {
                next.push(w.appended(sym));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::Alphabet;
    use crate::samples;

    fn w(s: &str) -> Word {
        Word::from_chars(s)
    }

    #[test]
    fn step_waits_for_first_match() {
        let a2 = samples::ends_with_aab_dsa();
        let (mv, rest) = dsa_step(&a2, 0, &w("abbaabbbbaab")).unwrap();
        assert_eq!(mv.label, w("aab"));
        assert_eq!(mv.consumed, w("abbaab"));
        assert_eq!(mv.target, 1);
        assert_eq!(rest, w("bbbaab"));

        // Nowhere to move on a word that never completes the pattern.
        assert!(dsa_step(&a2, 1, &w("aa")).is_none());
    }

    #[test]
    fn step_takes_longest_match() {
        let guard = samples::keyword_guard_dsa();
        // At the waiting state both "if" and "endif" match the same position;
        // the longer label must fire.
        let word = Word::from_tokens("g h e n d i f");
        let (mv, _) = dsa_step(&guard, 1, &word).unwrap();
        assert_eq!(mv.label, Word::from_tokens("e n d i f"));
        assert_eq!(mv.target, 0);
    }

    #[test]
    fn run_and_residue() {
        let a2 = samples::ends_with_aab_dsa();
        let run = dsa_run(&a2, &w("abbaabbbbaab"));
        assert!(run.accepted);
        assert_eq!(run.moves.len(), 2);
        assert_eq!(run.final_state, 1);

        let run = dsa_run(&a2, &w("baabaa"));
        assert!(!run.accepted);
        assert_eq!(run.residue, w("aa"));

        // The empty word accepts exactly when the initial state accepts.
        let run = dsa_run(&a2, &Word::empty());
        assert!(!run.accepted);
        assert!(run.moves.is_empty());
    }

    #[test]
    fn moves_reassemble_the_word() {
        let a3 = samples::ab_then_bb_dsa();
        let input = w("abbbb");
        let run = dsa_run(&a3, &input);
        assert!(run.accepted);
        let mut rebuilt = Word::empty();
        for mv in &run.moves {
            rebuilt = rebuilt.concat(&mv.consumed);
        }
        rebuilt = rebuilt.concat(&run.residue);
        assert_eq!(rebuilt, input);
    }

    #[test]
    fn accepts_examples() {
        let a3 = samples::ab_then_bb_dsa();
        assert!(dsa_accepts(&a3, &w("abbbb")));
        let a2 = samples::ends_with_aab_dsa();
        assert!(!dsa_accepts(&a2, &Word::empty()));
    }

    #[test]
    fn dfa_run_partial_and_total() {
        // Trim DFA for (ab)*: no run on "aa".
        let ab_star = samples::ab_star_trim_dfa();
        assert_eq!(dfa_run(&ab_star, &w("aa")), None);
        assert!(dfa_accepts(&ab_star, &w("abab")));
        assert!(!dfa_accepts(&ab_star, &w("aa")));

        // A complete DFA has a run on every word.
        let m = samples::ends_with_ab_dfa();
        for word in words_up_to(m.alphabet(), 4) {
            assert!(dfa_run(&m, &word).is_some());
        }
    }

    #[test]
    fn complete_dfa_agrees_with_its_dsa_view() {
        let m = samples::ends_with_ab_dfa();
        let a = dfa_as_dsa(&m);
        for word in words_up_to(m.alphabet(), 8) {
            assert_eq!(dfa_accepts(&m, &word), dsa_accepts(&a, &word));
        }
        let m = samples::at_least_two_as_dfa();
        let a = dfa_as_dsa(&m);
        for word in words_up_to(m.alphabet(), 8) {
            assert_eq!(dfa_accepts(&m, &word), dsa_accepts(&a, &word));
        }
    }

    #[test]
    fn longest_match_dominance_and_prefix_minimality() {
        let a4 = samples::block_pair_dsa();
        let alphabet = Alphabet::from_chars("ab");
        for word in words_up_to(&alphabet, 7) {
            let run = dsa_run(&a4, &word);
            for mv in &run.moves {
                let labels = a4.out_labels(mv.source);
                for beta in &labels {
                    if crate::core::is_suffix(beta, &mv.consumed) {
                        assert!(beta.len() <= mv.label.len());
                    }
                    for cut in 1..mv.consumed.len() {
                        let proper = mv.consumed.prefix(cut);
                        assert!(!crate::core::is_suffix(beta, &proper));
                    }
                }
            }
            // Re-running yields an identical trace.
            assert_eq!(run, dsa_run(&a4, &word));
        }
    }
}
