//! One-off search harness used to pin down the duplicated-state fixture
//! pair. Run with `cargo test --release --test fixture_search -- --ignored
//! --nocapture`. Not part of the regular suite.

use std::collections::BTreeSet;

use sufread::core::{dsa_size, Alphabet, Dfa, StateId, Symbol};
use sufread::derivation::{derive_smallest, is_suffix_tracking, Caps};
use sufread::dfa_ops::{dfa_isomorphic, minimize};

const Q0: usize = 0;
const Q1: usize = 1;
const Q2: usize = 2;
const P: usize = 3;
const Q4: usize = 4;
const PD: usize = 5;

/// delta rows over (a, b, c) per state; c stands for every spare symbol.
type Rows = [[usize; 3]; 5];

fn build_primary(rows: &Rows, extras: usize) -> Dfa {
    let mut symbols = vec![Symbol::from("a"), Symbol::from("b")];
    for i in 0..extras {
        symbols.push(Symbol::new(format!("c{i}")));
    }
    let alphabet = Alphabet::new(symbols.clone());
    let names = vec!["q0".into(), "q1".into(), "q2".into(), "p".into(), "q4".into()];
    let mut m = Dfa::new(names, alphabet, Q0, [Q4]);
    for (q, row) in rows.iter().enumerate() {
        for (i, sym) in symbols.iter().enumerate() {
            let slot = match sym.as_str() {
                "a" => 0,
                "b" => 1,
                _ => 2,
            };
            let _ = i;
            m.set_edge(q, sym, row[slot]);
        }
    }
    m
}

/// Duplicates state P into PD. `redirect` selects, for every p-valued slot
/// other than p's own a-loop, whether it now points at PD (bit set) or P.
fn build_duplicated(rows: &Rows, redirect: u32, extras: usize) -> Dfa {
    let mut symbols = vec![Symbol::from("a"), Symbol::from("b")];
    for i in 0..extras {
        symbols.push(Symbol::new(format!("c{i}")));
    }
    let alphabet = Alphabet::new(symbols.clone());
    let names = vec![
        "q0".into(),
        "q1".into(),
        "q2".into(),
        "p".into(),
        "q4".into(),
        "pd".into(),
    ];
    let mut m = Dfa::new(names, alphabet, Q0, [Q4]);
    let mut bit = 0;
    let mut pick = |q: usize, slot: usize, original: usize| -> usize {
        if original != P {
            return original;
        }
        // The q0 --b--> p edge must move to the duplicate so the only
        // simple word into p becomes two letters.
        if q == Q0 && slot == 1 {
            return PD;
        }
        let chosen = if redirect & (1 << bit) != 0 { PD } else { P };
        bit += 1;
        chosen
    };
    for (q, row) in rows.iter().enumerate() {
        for sym in symbols.iter() {
            let slot = match sym.as_str() {
                "a" => 0,
                "b" => 1,
                _ => 2,
            };
            m.set_edge(q, sym, pick(q, slot, row[slot]));
        }
    }
    // The duplicate mirrors p, except that p-valued targets may point back
    // at p (needed so the word ba reaches p).
    for sym in symbols.clone() {
        let slot = match sym.as_str() {
            "a" => 0,
            "b" => 1,
            _ => 2,
        };
        let target = rows[P][slot];
        m.set_edge(PD, &sym, target);
    }
    m
}

fn count_p_slots(rows: &Rows) -> usize {
    let mut n = 0;
    for (q, row) in rows.iter().enumerate() {
        for (slot, &t) in row.iter().enumerate() {
            if t == P && !(q == Q0 && slot == 1) {
                n += 1;
            }
        }
    }
    n
}

fn set(ids: &[StateId]) -> BTreeSet<StateId> {
    ids.iter().copied().collect()
}

#[test]
#[ignore]
fn search_duplicated_state_fixture() {
    let caps = Caps::default();
    let star = set(&[Q0, Q2, P, Q4]);
    let bad = set(&[Q0, Q1, P, Q4]);
    let all5 = set(&[Q0, Q1, Q2, P, Q4]);
    let no_q1_q2 = set(&[Q0, P, Q4]);

    let mut rows: Rows = [[0; 3]; 5];
    rows[Q0][0] = Q1;
    rows[Q0][1] = P;
    rows[Q1][1] = Q2;
    rows[P][0] = P;
    rows[P][1] = Q4;

    let free: [(usize, usize); 9] = [
        (Q0, 2),
        (Q1, 0),
        (Q1, 2),
        (Q2, 0),
        (Q2, 1),
        (Q2, 2),
        (Q4, 0),
        (Q4, 1),
        (Q4, 2),
    ];

    let mut found = 0usize;
    let mut ties = 0usize;
    let mut checked = 0usize;
    let total = 5usize.pow(9);
    for combo in 0..total {
        let mut c = combo;
        for &(q, slot) in &free {
            rows[q][slot] = c % 5;
            c /= 5;
        }

        // Two non-accepting states with identical rows are equivalent.
        let mut dead = false;
        for i in 0..4 {
            for j in (i + 1)..4 {
                if rows[i] == rows[j] {
                    dead = true;
                }
            }
        }
        if dead {
            continue;
        }
        checked += 1;

        let m = build_primary(&rows, 2);
        let (canon, _) = minimize(&m).unwrap();
        if canon.n_states() != 5 {
            continue;
        }
        let Ok(rep_star) = is_suffix_tracking(&m, &star, &caps) else {
            continue;
        };
        if !rep_star.is_suffix_tracking {
            continue;
        }
        if is_suffix_tracking(&m, &bad, &caps).unwrap().is_suffix_tracking {
            continue;
        }
        // Exactly S* and the full set may pass.
        let mut ok = true;
        for cand in [
            set(&[Q0, Q4]),
            set(&[Q0, Q1, Q4]),
            set(&[Q0, Q2, Q4]),
            set(&[Q0, Q1, Q2, Q4]),
            no_q1_q2.clone(),
        ] {
            if is_suffix_tracking(&m, &cand, &caps).unwrap().is_suffix_tracking {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        assert!(is_suffix_tracking(&m, &all5, &caps).unwrap().is_suffix_tracking);

        // Try every redirection of p-valued edges to the duplicate.
        let slots = count_p_slots(&rows);
        for redirect in 0..(1u32 << slots) {
            let mm = build_duplicated(&rows, redirect, 2);
            let (mm_canon, _) = minimize(&mm).unwrap();
            if mm_canon.n_states() != 5 || dfa_isomorphic(&mm_canon, &canon).is_none() {
                continue;
            }
            let rep = is_suffix_tracking(&mm, &set(&[Q0, P, Q4]), &caps);
            let Ok(rep) = rep else { continue };
            if !rep.is_suffix_tracking {
                continue;
            }

            // Finalists: compare derive_smallest totals at a wide alphabet.
            let wide = build_primary(&rows, 8);
            let wide_dup = build_duplicated(&rows, redirect, 8);
            let Ok((small_a, set_a)) = derive_smallest(&wide, &caps) else {
                continue;
            };
            let Ok((small_b, set_b)) = derive_smallest(&wide_dup, &caps) else {
                continue;
            };
            let ta = dsa_size(&small_a).total;
            let tb = dsa_size(&small_b).total;
            if tb < ta {
                found += 1;
                println!(
                    "HIT rows={rows:?} redirect={redirect:#b} totals {ta} vs {tb} sets {:?} {:?}",
                    set_a, set_b
                );
                if found >= 40 {
                    println!("checked {checked} candidates");
                    return;
                }
            } else if tb == ta && ties < 5 {
                ties += 1;
                println!("TIE rows={rows:?} redirect={redirect:#b} total {ta}");
            }
        }
    }
    println!("checked {checked} candidates, found {found}");
}
