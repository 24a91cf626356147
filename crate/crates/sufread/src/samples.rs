//! Small automata used across tests, demos and documentation. Each is named
//! for the language it accepts or the behavior it illustrates.

use crate::core::{Alphabet, Dfa, Dsa, Symbol, Word};

fn w(s: &str) -> Word {
    Word::from_chars(s)
}

/// DSA accepting Σ*aab over {a,b}: wait for the first aab, then keep
/// accepting on every further aab.
pub fn ends_with_aab_dsa() -> Dsa {
    Dsa::from_parts(
        2,
        Alphabet::from_chars("ab"),
        0,
        [1],
        [(0, w("aab"), 1), (1, w("aab"), 1)],
    )
}

/// Complete DFA for Σ*aab over {a,b}, built as a suffix tracker; the
/// independent oracle for [`ends_with_aab_dsa`].
pub fn ends_with_aab_dfa() -> Dfa {
    // States remember the longest prefix of aab matched so far.
    let mut m = Dfa::new(
        vec!["e".into(), "a".into(), "aa".into(), "aab".into()],
        Alphabet::from_chars("ab"),
        0,
        [3],
    );
    let a = Symbol::from("a");
    let b = Symbol::from("b");
    m.set_edge(0, &a, 1);
    m.set_edge(0, &b, 0);
    m.set_edge(1, &a, 2);
    m.set_edge(1, &b, 0);
    m.set_edge(2, &a, 2);
    m.set_edge(2, &b, 3);
    m.set_edge(3, &a, 1);
    m.set_edge(3, &b, 0);
    m
}

/// DSA reading an ab block, then a bb block, then trailing b blocks.
pub fn ab_then_bb_dsa() -> Dsa {
    Dsa::from_parts(
        3,
        Alphabet::from_chars("ab"),
        0,
        [2],
        [(0, w("ab"), 1), (1, w("bb"), 2), (2, w("b"), 2)],
    )
}

/// DSA for (b*ba)*a*ab over {a,b}: ba blocks loop at the start state, an ab
/// block accepts. Its start state carries the label pair {ab, ba}.
pub fn block_pair_dsa() -> Dsa {
    Dsa::from_parts(
        2,
        Alphabet::from_chars("ab"),
        0,
        [1],
        [(0, w("ab"), 1), (0, w("ba"), 0)],
    )
}

/// DSA matching the two patterns abaa and baaa from one waiting state.
pub fn two_pattern_dsa() -> Dsa {
    Dsa::from_parts(
        2,
        Alphabet::from_chars("ab"),
        0,
        [1],
        [(0, w("abaa"), 1), (0, w("baaa"), 1)],
    )
}

/// Token-level DSA guarding `else` against an enclosing `if`/`endif`: the
/// motivating out-of-context keyword example. At the waiting state both
/// `if` and `endif` can match the same position; `endif` wins by length.
pub fn keyword_guard_dsa() -> Dsa {
    let alphabet = Alphabet::new(
        ["i", "f", "e", "n", "d", "l", "s", "g", "h"]
            .into_iter()
            .map(Symbol::from),
    );
    let tok = |s: &str| Word::new(s.chars().map(Symbol::from).collect());
    Dsa::new(
        vec!["s0".into(), "s1".into(), "s2".into(), "s3".into()],
        alphabet,
        0,
        [2],
        [
            (0, tok("if"), 1),
            (0, tok("else"), 2),
            (1, tok("if"), 3),
            (1, tok("endif"), 0),
        ],
    )
}

/// Trim DFA for (ab)* over {a,b}: two states, two edges, no sink.
pub fn ab_star_trim_dfa() -> Dfa {
    let mut m = Dfa::from_edges(2, Alphabet::from_chars("ab"), 0, [0], []);
    m.set_edge(0, &Symbol::from("a"), 1);
    m.set_edge(1, &Symbol::from("b"), 0);
    m
}

/// Complete DFA for (ab)* over {a,b}.
pub fn ab_star_dfa() -> Dfa {
    crate::dfa_ops::complete(&ab_star_trim_dfa())
}

/// Complete DFA for Σ*ab over {a,b}. Selecting {q0, q2} is suffix-tracking:
/// the suppressed middle state tracks the suffix a.
pub fn ends_with_ab_dfa() -> Dfa {
    let mut m = Dfa::from_edges(3, Alphabet::from_chars("ab"), 0, [2], []);
    let a = Symbol::from("a");
    let b = Symbol::from("b");
    m.set_edge(0, &a, 1);
    m.set_edge(0, &b, 0);
    m.set_edge(1, &a, 1);
    m.set_edge(1, &b, 2);
    m.set_edge(2, &a, 1);
    m.set_edge(2, &b, 0);
    m
}

/// Complete DFA over {a,b} accepting words with at least two a's. Selecting
/// {q0, q2} here is *not* suffix-tracking: the b self-loop on the middle
/// state is not suffix-compatible, and the induced DSA wrongly rejects aba.
pub fn at_least_two_as_dfa() -> Dfa {
    let mut m = Dfa::from_edges(3, Alphabet::from_chars("ab"), 0, [2], []);
    let a = Symbol::from("a");
    let b = Symbol::from("b");
    m.set_edge(0, &a, 1);
    m.set_edge(0, &b, 0);
    m.set_edge(1, &a, 2);
    m.set_edge(1, &b, 1);
    m.set_edge(2, &a, 2);
    m.set_edge(2, &b, 2);
    m
}

/// Five-state complete DFA over {a,b} whose selection {0,2,4} is
/// suffix-compatible everywhere yet not well-formed (the simple word b into
/// state 4 is a suffix of the simple word ab into state 3), while
/// {0,2,3,4} is suffix-tracking.
pub fn guarded_prefix_dfa() -> Dfa {
    let mut m = Dfa::new(
        vec!["0".into(), "1".into(), "2".into(), "3".into(), "4".into()],
        Alphabet::from_chars("ab"),
        0,
        [2],
    );
    let a = Symbol::from("a");
    let b = Symbol::from("b");
    m.set_edge(0, &a, 1);
    m.set_edge(0, &b, 4);
    m.set_edge(1, &a, 2);
    m.set_edge(1, &b, 3);
    m.set_edge(2, &a, 2);
    m.set_edge(2, &b, 2);
    m.set_edge(3, &a, 2);
    m.set_edge(3, &b, 4);
    m.set_edge(4, &a, 4);
    m.set_edge(4, &b, 4);
    m
}

/// DSA of total size 4 + 2n for Σ*a1…an over the n-symbol alphabet
/// {a1,…,an}: one transition to reach the accepting state, one to stay.
pub fn suffix_chain_dsa(n: usize) -> Dsa {
    assert!(n >= 1);
    let symbols: Vec<Symbol> = (1..=n).map(|i| Symbol::new(format!("a{i}"))).collect();
    let label = Word::new(symbols.clone());
    Dsa::from_parts(
        2,
        Alphabet::new(symbols),
        0,
        [1],
        [(0, label.clone(), 1), (1, label, 1)],
    )
}

/// Trim DFA for Σ*a1…an built as a pattern matcher with failure edges; the
/// independent oracle for [`suffix_chain_dsa`]. Any complete DFA for this
/// language needs at least n states with n outgoing edges each.
pub fn suffix_chain_dfa(n: usize) -> Dfa {
    assert!(n >= 1);
    let symbols: Vec<Symbol> = (1..=n).map(|i| Symbol::new(format!("a{i}"))).collect();
    let alphabet = Alphabet::new(symbols.clone());
    // State i = longest matched prefix a1…ai.
    let names = (0..=n).map(|i| format!("p{i}")).collect();
    let mut m = Dfa::new(names, alphabet, 0, [n]);
    for state in 0..=n {
        for (j, sym) in symbols.iter().enumerate() {
            // Longest suffix of a1…a_state·sym that is a prefix of a1…an:
            // the concatenation only ever matches a1 fresh or extends the
            // current run, because all symbols are distinct.
            let target = if state < n && j == state {
                state + 1
            } else if j == 0 {
                1
            } else {
                0
            };
            m.set_edge(state, sym, target);
        }
    }
    m
}

/// Minimal DSA for b*a⁺b⁺a: consume b*a⁺b on the two-letter label, then the
/// final b*a. One of two non-isomorphic minima for this language.
pub fn two_phase_dsa_early_split() -> Dsa {
    Dsa::from_parts(
        3,
        Alphabet::from_chars("ab"),
        0,
        [2],
        [(0, w("ab"), 1), (1, w("a"), 2)],
    )
}

/// The other minimal DSA for b*a⁺b⁺a: consume b*a first, then a*b⁺a.
pub fn two_phase_dsa_late_split() -> Dsa {
    Dsa::from_parts(
        3,
        Alphabet::from_chars("ab"),
        0,
        [2],
        [(0, w("a"), 1), (1, w("ba"), 2)],
    )
}

/// Complete DFA for b*a⁺b⁺a over {a,b}, the target language of the
/// minimality-oracle demonstrations.
pub fn two_phase_dfa() -> Dfa {
    // 0: leading b's; 1: inside a-block; 2: inside b-block; 3: accept after
    // final a; 4: dead.
    let mut m = Dfa::from_edges(5, Alphabet::from_chars("ab"), 0, [3], []);
    let a = Symbol::from("a");
    let b = Symbol::from("b");
    m.set_edge(0, &a, 1);
    m.set_edge(0, &b, 0);
    m.set_edge(1, &a, 1);
    m.set_edge(1, &b, 2);
    m.set_edge(2, &a, 3);
    m.set_edge(2, &b, 2);
    m.set_edge(3, &a, 4);
    m.set_edge(3, &b, 4);
    m.set_edge(4, &a, 4);
    m.set_edge(4, &b, 4);
    m
}

/// The alarm/panic specification DFA over signals {p, s, t}: pressing the
/// panic switch twice within one clock cycle while the alarm is off is an
/// error. q0 = off, q1 = on, q2 = off with one panic this cycle, q3 = error.
pub fn alarm_panic_dfa() -> Dfa {
    let mut m = Dfa::new(
        vec!["off".into(), "on".into(), "armed".into(), "err".into()],
        Alphabet::from_strs(&["p", "s", "t"]),
        0,
        [3],
    );
    let p = Symbol::from("p");
    let s = Symbol::from("s");
    let t = Symbol::from("t");
    m.set_edge(0, &p, 2);
    m.set_edge(0, &s, 1);
    m.set_edge(0, &t, 0);
    m.set_edge(2, &p, 3);
    m.set_edge(2, &s, 1);
    m.set_edge(2, &t, 0);
    m.set_edge(1, &p, 1);
    m.set_edge(1, &s, 0);
    m.set_edge(1, &t, 1);
    m.set_edge(3, &p, 3);
    m.set_edge(3, &s, 3);
    m.set_edge(3, &t, 3);
    m
}

/// The strong DSA the alarm/panic DFA minimizes to: wait at off for either
/// an s or a double panic press pp, toggle on s, absorb at the error state.
pub fn alarm_panic_sdsa() -> Dsa {
    let p = || Word::new(vec![Symbol::from("p")]);
    let s = || Word::new(vec![Symbol::from("s")]);
    let t = || Word::new(vec![Symbol::from("t")]);
    let pp = Word::new(vec![Symbol::from("p"), Symbol::from("p")]);
    Dsa::new(
        vec!["off".into(), "on".into(), "err".into()],
        Alphabet::from_strs(&["p", "s", "t"]),
        0,
        [2],
        [
            (0, s(), 1),
            (0, pp, 2),
            (1, s(), 0),
            (2, p(), 2),
            (2, s(), 2),
            (2, t(), 2),
        ],
    )
}

fn sigma_with_extras(extras: usize) -> Alphabet {
    let mut symbols = vec![Symbol::from("a"), Symbol::from("b")];
    for i in 0..extras {
        symbols.push(Symbol::new(format!("c{i}")));
    }
    Alphabet::new(symbols)
}

/// A minimal five-state complete DFA over {a,b} plus `extras` spare symbols.
/// Exactly two of its state sets are suffix-tracking: {q0, q2, q4, p} and
/// all states. Deriving from it is stuck with heavy spare-symbol transitions
/// that the expanded variant [`duplicated_state_dfa`] avoids.
pub fn small_canonical_dfa(extras: usize) -> Dfa {
    let alphabet = sigma_with_extras(extras);
    let names = vec![
        "q0".into(),
        "q1".into(),
        "q2".into(),
        "p".into(),
        "q4".into(),
    ];
    let mut m = Dfa::new(names, alphabet.clone(), 0, [4]);
    let a = Symbol::from("a");
    let b = Symbol::from("b");
    let (q0, q1, q2, p, q4) = (0, 1, 2, 3, 4);
    m.set_edge(q0, &a, q1);
    m.set_edge(q0, &b, p);
    m.set_edge(q1, &a, p);
    m.set_edge(q1, &b, q2);
    m.set_edge(q2, &a, p);
    m.set_edge(q2, &b, p);
    m.set_edge(p, &a, p);
    m.set_edge(p, &b, q4);
    m.set_edge(q4, &a, p);
    m.set_edge(q4, &b, p);
    for sym in alphabet.symbols() {
        if sym.as_str() != "a" && sym.as_str() != "b" {
            m.set_edge(q0, sym, q0);
            m.set_edge(q1, sym, q0);
            m.set_edge(q2, sym, q2);
            m.set_edge(p, sym, q2);
            m.set_edge(q4, sym, q2);
        }
    }
    m
}

/// [`small_canonical_dfa`] with its looping state duplicated. The duplicate
/// is residual-equivalent to the original, so this DFA is not minimal, yet
/// it admits the suffix-tracking set {q0, p, q4} and derives a strictly
/// smaller DSA when the spare alphabet is large.
pub fn duplicated_state_dfa(extras: usize) -> Dfa {
    let alphabet = sigma_with_extras(extras);
    let names = vec![
        "q0".into(),
        "q1".into(),
        "q2".into(),
        "p".into(),
        "q4".into(),
        "pd".into(),
    ];
    let mut m = Dfa::new(names, alphabet.clone(), 0, [4]);
    let a = Symbol::from("a");
    let b = Symbol::from("b");
    let (q0, q1, q2, p, q4, pd) = (0, 1, 2, 3, 4, 5);
    m.set_edge(q0, &a, q1);
    m.set_edge(q0, &b, pd);
    m.set_edge(q1, &a, p);
    m.set_edge(q1, &b, q2);
    m.set_edge(q2, &a, p);
    m.set_edge(q2, &b, p);
    m.set_edge(p, &a, p);
    m.set_edge(p, &b, q4);
    m.set_edge(pd, &a, p);
    m.set_edge(pd, &b, q4);
    m.set_edge(q4, &a, p);
    m.set_edge(q4, &b, p);
    for sym in alphabet.symbols() {
        if sym.as_str() != "a" && sym.as_str() != "b" {
            m.set_edge(q0, sym, q0);
            m.set_edge(q1, sym, q0);
            m.set_edge(q2, sym, q2);
            m.set_edge(p, sym, q2);
            m.set_edge(pd, sym, q2);
            m.set_edge(q4, sym, q2);
        }
    }
    m
}

/// The (original, duplicate) state pair of [`duplicated_state_dfa`].
pub fn duplicated_state_pair() -> (usize, usize) {
    (3, 5)
}
