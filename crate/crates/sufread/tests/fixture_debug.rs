//! Diagnostic for one hand-analyzed candidate of the duplicated-state pair.

use std::collections::BTreeSet;

use sufread::core::{dsa_size, Alphabet, Dfa, StateId, Symbol};
use sufread::derivation::{derive, derive_smallest, is_suffix_tracking, Caps};
use sufread::dfa_ops::minimize;
use sufread::io::dsa_to_text;

fn set(ids: &[StateId]) -> BTreeSet<StateId> {
    ids.iter().copied().collect()
}

fn build(rows: &[[usize; 3]], extras: usize, names: &[&str]) -> Dfa {
    let mut symbols = vec![Symbol::from("a"), Symbol::from("b")];
    for i in 0..extras {
        symbols.push(Symbol::new(format!("c{i}")));
    }
    let alphabet = Alphabet::new(symbols.clone());
    let mut m = Dfa::new(
        names.iter().map(|s| s.to_string()).collect(),
        alphabet,
        0,
        [4],
    );
    for (q, row) in rows.iter().enumerate() {
        for sym in &symbols {
            let slot = match sym.as_str() {
                "a" => 0,
                "b" => 1,
                _ => 2,
            };
            m.set_edge(q, sym, row[slot]);
        }
    }
    m
}

#[test]
#[ignore]
fn debug_redirects() {
    let caps = Caps::default();
    let primary: [[usize; 3]; 5] = [
        [1, 3, 2],
        [3, 2, 3],
        [3, 3, 2],
        [3, 4, 2],
        [3, 3, 2],
    ];
    // enumerate redirect choices for each p-valued slot (q,slot):
    // (1,0),(1,2),(2,0),(2,1),(4,0),(4,1) and p's own (3,0)
    let slots: Vec<(usize, usize)> = vec![(1, 0), (1, 2), (2, 0), (2, 1), (3, 0), (4, 0), (4, 1)];
    for extras in [2usize, 8] {
        println!("== extras={extras}");
        for mask in 0u32..(1 << slots.len()) {
            let mut dup: Vec<[usize; 3]> = primary.to_vec();
            for (bit, &(q, slot)) in slots.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    dup[q][slot] = 5;
                }
            }
            dup[0][1] = 5; // q0-b -> pd always
            dup.push([3, 4, 2]); // pd mirrors p
            let mm = build(&dup, extras, &["q0", "q1", "q2", "p", "q4", "pd"]);
            let (mm_canon, _) = minimize(&mm).unwrap();
            if mm_canon.n_states() != 5 {
                continue;
            }
            match is_suffix_tracking(&mm, &set(&[0, 3, 4]), &caps) {
                Ok(rep) if rep.is_suffix_tracking => {
                    let t = derive(&mm, &set(&[0, 3, 4]), &caps)
                        .map(|d| dsa_size(&d).total)
                        .unwrap_or(0);
                    let best = derive_smallest(&mm, &caps)
                        .map(|(d, s)| (dsa_size(&d).total, format!("{s:?}")))
                        .unwrap_or((0, "cap".into()));
                    println!("  mask={mask:#09b} S** OK derive={t} best={:?}", best);
                }
                Ok(rep) => {
                    if mask < 4 {
                        println!("  mask={mask:#09b} S** fail: {}", rep.summary());
                    }
                }
                Err(e) => println!("  mask={mask:#09b} err {e}"),
            }
        }
    }
}

#[test]
#[ignore]
fn debug_candidate() {
    let caps = Caps::default();
    // q0=0 q1=1 q2=2 p=3 q4=4
    let primary: [[usize; 3]; 5] = [
        [1, 3, 2], // q0: a->q1 b->p  c->q2
        [3, 2, 3], // q1: a->p  b->q2 c->p
        [3, 3, 2], // q2: a->p  b->p  c->q2
        [3, 4, 2], // p:  a->p  b->q4 c->q2
        [3, 3, 2], // q4: a->p  b->p  c->q2
    ];
    // duplicate pd=5; q0-b -> pd; q2-b -> pd; q4-b -> pd; others keep p.
    let dup: [[usize; 3]; 6] = [
        [1, 5, 2],
        [3, 2, 3],
        [3, 5, 2],
        [3, 4, 2],
        [3, 5, 2],
        [3, 4, 2], // pd mirrors p
    ];

    for extras in [1usize, 8, 16, 28, 48] {
        let m = build(&primary, extras, &["q0", "q1", "q2", "p", "q4"]);
        let (canon, _) = minimize(&m).unwrap();
        println!("extras={extras} primary minimal states = {}", canon.n_states());
        for cand in [
            set(&[0, 4]),
            set(&[0, 1, 4]),
            set(&[0, 2, 4]),
            set(&[0, 3, 4]),
            set(&[0, 1, 2, 4]),
            set(&[0, 1, 3, 4]),
            set(&[0, 2, 3, 4]),
            set(&[0, 1, 2, 3, 4]),
        ] {
            let rep = is_suffix_tracking(&m, &cand, &caps).unwrap();
            println!("  sts{:?} = {}", cand, rep.is_suffix_tracking);
        }
        let (small, s) = derive_smallest(&m, &caps).unwrap();
        println!(
            "  derive_smallest(primary) total={} from {:?}",
            dsa_size(&small).total,
            s
        );
        if let Ok(a_star) = derive(&m, &set(&[0, 2, 3, 4]), &caps) {
            println!("  derive(S*) total={}", dsa_size(&a_star).total);
        }

        let mm = build(&dup, extras, &["q0", "q1", "q2", "p", "q4", "pd"]);
        let (mm_canon, _) = minimize(&mm).unwrap();
        println!("  dup minimal states = {}", mm_canon.n_states());
        let rep = is_suffix_tracking(&mm, &set(&[0, 3, 4]), &caps).unwrap();
        println!("  dup sts{{q0,p,q4}} = {} ({})", rep.is_suffix_tracking, rep.summary());
        if rep.is_suffix_tracking {
            let a2 = derive(&mm, &set(&[0, 3, 4]), &caps).unwrap();
            println!("  dup derive(S**) total={}", dsa_size(&a2).total);
            println!("{}", dsa_to_text(&a2));
        }
        let (small2, s2) = derive_smallest(&mm, &caps).unwrap();
        println!(
            "  derive_smallest(dup) total={} from {:?}",
            dsa_size(&small2).total,
            s2
        );
    }
}
