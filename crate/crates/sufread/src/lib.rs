//! Deterministic suffix-reading automata.
//!
//! A DSA is a finite automaton whose transitions carry words. From a state,
//! a transition fires once the input read there first ends with one of the
//! state's outgoing labels, taking the longest matching label. This lets a
//! DSA jump along blocks of letters and often gives a much smaller machine
//! than the equivalent DFA, measured as total size: states + transitions +
//! summed label length.
//!
//! The crate provides:
//!
//! * the exact move/run semantics ([`semantics`]),
//! * the tracking-DFA conversion that proves DSAs regular ([`tracking`]),
//! * classical DFA machinery: completion, minimization, equivalence with
//!   shortest counterexamples, isomorphism ([`dfa_ops`]),
//! * the derivation pipeline that extracts small DSAs from a complete DFA
//!   via suffix-tracking state sets ([`derivation`]),
//! * strong DSAs, minimal-strong synthesis from the canonical DFA, and a
//!   brute-force minimality oracle ([`strong`]),
//! * the vertex-cover reduction generator witnessing that DSA minimization
//!   is NP-hard ([`hardness`]),
//! * a text format, DOT export and a CLI ([`io`]).

pub mod core;
pub mod derivation;
pub mod dfa_ops;
pub mod hardness;
pub mod io;
pub mod samples;
pub mod semantics;
pub mod strong;
pub mod tracking;

pub use crate::core::{
    dfa_size, dsa_size, is_prefix, is_suffix, longest_suffix_in, validate_dfa, validate_dsa,
    Alphabet, Dfa, Dsa, SizeMetrics, StateId, Symbol, Transition, Violation, Word,
};
pub use crate::derivation::{
    derive, derive_smallest, enumerate_suffix_tracking_sets, induced_dsa, is_suffix_tracking,
    is_well_formed_set, remove_useless, simple_words, sp_from, Caps, DerivationReport, DeriveError,
};
pub use crate::dfa_ops::{complete, dfa_equiv, dfa_isomorphic, dsa_equiv, minimize, Equiv};
pub use crate::semantics::{dfa_accepts, dfa_run, dsa_accepts, dsa_run, dsa_step, Move, Run};
pub use crate::strong::{
    brute_force_min_dsa, is_dsa_well_formed, is_strong, minimize_strong, BruteForceOptions,
    MinimalityCertificate,
};
pub use crate::tracking::{tracking_dfa, tracking_size_bound_check, TrackState, TrackingDfa};
