//! The vertex-cover reduction instance: a DFA family in which choosing a
//! suffix-tracking set is exactly choosing a vertex cover of the source
//! graph, with padding symbols that make kept states expensive.

use std::collections::BTreeSet;
use std::fmt;

use crate::core::{dsa_size, Alphabet, Dfa, StateId, Symbol};
use crate::derivation::{derive, is_suffix_tracking, Caps, DeriveError};

/// A connected undirected graph with at least three vertices, no self-loops
/// and no parallel edges.
#[derive(Clone, Debug)]
pub struct Graph {
    vertices: Vec<String>,
    /// Pairs of vertex indices with the smaller index first.
    edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    TooFewVertices(usize),
    DuplicateVertex(String),
    UnknownVertex(String),
    SelfLoop(String),
    ParallelEdge(String, String),
    Disconnected,
    /// Vertex names may not collide with the reduction's reserved symbols.
    ReservedName(String),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::TooFewVertices(n) => {
                write!(f, "graph has {n} vertices; at least 3 are required")
            }
            GraphError::DuplicateVertex(v) => write!(f, "duplicate vertex {v}"),
            GraphError::UnknownVertex(v) => write!(f, "edge uses unknown vertex {v}"),
            GraphError::SelfLoop(v) => write!(f, "self-loop at {v}"),
            GraphError::ParallelEdge(u, v) => write!(f, "parallel edge {u} -- {v}"),
            GraphError::Disconnected => write!(f, "graph is not connected"),
            GraphError::ReservedName(v) => {
                write!(f, "vertex name {v} collides with a reserved symbol")
            }
        }
    }
}

impl std::error::Error for GraphError {}

impl Graph {
    pub fn new(
        vertices: Vec<String>,
        edges: Vec<(String, String)>,
    ) -> Result<Graph, GraphError> {
        if vertices.len() < 3 {
            return Err(GraphError::TooFewVertices(vertices.len()));
        }
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(GraphError::DuplicateVertex(v.clone()));
            }
            if v == "$" || v.chars().all(|c| c.is_ascii_digit()) || v.starts_with("e.") {
                return Err(GraphError::ReservedName(v.clone()));
            }
        }
        let index = |name: &str| -> Result<usize, GraphError> {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
        };
        let mut pairs = Vec::new();
        let mut pair_set = BTreeSet::new();
        for (u, v) in &edges {
            let (i, j) = (index(u)?, index(v)?);
            if i == j {
                return Err(GraphError::SelfLoop(u.clone()));
            }
            let pair = (i.min(j), i.max(j));
            if !pair_set.insert(pair) {
                return Err(GraphError::ParallelEdge(u.clone(), v.clone()));
            }
            pairs.push(pair);
        }
        pairs.sort_unstable();
        let g = Graph {
            vertices,
            edges: pairs,
        };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(i, j) in &self.edges {
                for (x, y) in [(i, j), (j, i)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// True iff `subset` (vertex indices) covers every edge.
    pub fn is_vertex_cover(&self, subset: &BTreeSet<usize>) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| subset.contains(&u) || subset.contains(&v))
    }

    /// The size of a minimum vertex cover, by brute force over subsets.
    pub fn min_vertex_cover(&self) -> BTreeSet<usize> {
        let n = self.vertices.len();
        for size in 0..=n {
            let mut found = None;
            subsets_of_size(n, size, &mut |s| {
                if found.is_none() && self.is_vertex_cover(s) {
                    found = Some(s.clone());
                }
            });
            if let Some(s) = found {
                return s;
            }
        }
        unreachable!("the full vertex set is always a cover")
    }
}

fn subsets_of_size(n: usize, k: usize, f: &mut impl FnMut(&BTreeSet<usize>)) {
    fn rec(
        n: usize,
        k: usize,
        start: usize,
        acc: &mut BTreeSet<usize>,
        f: &mut impl FnMut(&BTreeSet<usize>),
    ) {
        if acc.len() == k {
            f(acc);
            return;
        }
        for v in start..n {
            acc.insert(v);
            rec(n, k, v + 1, acc, f);
            acc.remove(&v);
        }
    }
    rec(n, k, 0, &mut BTreeSet::new(), f);
}

/// The canonical name of the symbol for edge (u, v); endpoints ordered.
pub fn edge_symbol(g: &Graph, u: usize, v: usize) -> Symbol {
    let (i, j) = (u.min(v), u.max(v));
    Symbol::new(format!("e.{}.{}", g.vertices[i], g.vertices[j]))
}

/// The default padding-width: (|V| + |E|)⁴.
pub fn default_theta(g: &Graph) -> usize {
    (g.n_vertices() + g.n_edges()).pow(4)
}

/// State ids of the reduction automaton: the vertices come first, then the
/// three bookkeeping states.
pub struct VcStates {
    pub init: StateId,
    pub sink: StateId,
    pub acc: StateId,
}

pub fn vc_states(g: &Graph) -> VcStates {
    let n = g.n_vertices();
    VcStates {
        init: n,
        sink: n + 1,
        acc: n + 2,
    }
}

/// Builds the reduction DFA for `g` with padding parameter `theta`.
///
/// The alphabet is V ∪ E ∪ {$} ∪ {1..theta}. Each edge symbol moves between
/// its endpoints; the initial state enters any vertex by its name; `$` moves
/// from any vertex to the accepting state; everything else falls into the
/// sink. The padding symbols make every kept state carry weight 2·theta in a
/// derived DSA.
pub fn build_vc_dfa(g: &Graph, theta: usize) -> Dfa {
    assert!(theta >= 1, "theta must be positive");
    let n = g.n_vertices();
    let states = vc_states(g);
    let mut names: Vec<String> = g.vertices.to_vec();
    names.push("init".into());
    names.push("snk".into());
    names.push("acc".into());

    let mut symbols: Vec<Symbol> = g.vertices.iter().map(Symbol::new).collect();
    for &(u, v) in &g.edges {
        symbols.push(edge_symbol(g, u, v));
    }
    symbols.push(Symbol::from("$"));
    for d in 1..=theta {
        symbols.push(Symbol::new(d.to_string()));
    }
    let alphabet = Alphabet::new(symbols);

    let mut m = Dfa::new(names, alphabet.clone(), states.init, [states.acc]);
    // Everything not set below falls to the sink.
    for q in 0..(n + 3) {
        for sym in alphabet.symbols() {
            m.set_edge(q, sym, states.sink);
        }
    }
    for (v, name) in g.vertices.iter().enumerate() {
        m.set_edge(states.init, &Symbol::new(name.clone()), v);
        m.set_edge(v, &Symbol::from("$"), states.acc);
    }
    for &(u, v) in &g.edges {
        let e = edge_symbol(g, u, v);
        m.set_edge(u, &e, v);
        m.set_edge(v, &e, u);
    }
    m
}

/// One row of the correspondence report: a vertex subset, whether its
/// closure is suffix-tracking, and whether it covers the edges.
#[derive(Clone, Debug)]
pub struct CorrespondenceRow {
    pub subset: BTreeSet<usize>,
    pub suffix_tracking: bool,
    pub vertex_cover: bool,
}

#[derive(Clone, Debug)]
pub struct CorrespondenceReport {
    pub rows: Vec<CorrespondenceRow>,
    /// True iff suffix-tracking and covering coincide on every subset.
    pub agreement: bool,
}

/// For every subset S of vertices, compares "S ∪ {init, sink, acc} is
/// suffix-tracking in the reduction DFA" against "S is a vertex cover",
/// the latter computed independently by edge iteration.
pub fn vc_sts_correspondence(
    g: &Graph,
    theta: usize,
    caps: &Caps,
) -> Result<CorrespondenceReport, DeriveError> {
    assert!(g.n_vertices() <= 8, "correspondence check is desk scale");
    let m = build_vc_dfa(g, theta);
    let states = vc_states(g);
    let mut rows = Vec::new();
    let n = g.n_vertices();
    for size in 0..=n {
        let mut err = None;
        subsets_of_size(n, size, &mut |subset| {
            if err.is_some() {
                return;
            }
            let mut s: BTreeSet<StateId> = subset.iter().copied().collect();
            s.insert(states.init);
            s.insert(states.sink);
            s.insert(states.acc);
            match is_suffix_tracking(&m, &s, caps) {
                Ok(report) => rows.push(CorrespondenceRow {
                    subset: subset.clone(),
                    suffix_tracking: report.is_suffix_tracking,
                    vertex_cover: g.is_vertex_cover(subset),
                }),
                Err(e) => err = Some(e),
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
    }
    let agreement = rows.iter().all(|r| r.suffix_tracking == r.vertex_cover);
    Ok(CorrespondenceReport { rows, agreement })
}

/// Outcome of the size bound check for one reduction instance.
#[derive(Clone, Debug)]
pub struct SizeCheckReport {
    pub theta: usize,
    pub k_prime: usize,
    /// k = (k' + 2) · 2θ + (2θ − 1).
    pub k: usize,
    /// The smallest vertex cover found, if within k'.
    pub cover: Option<BTreeSet<usize>>,
    /// Total size of the DSA derived from the cover's closure.
    pub derived_total: Option<usize>,
    /// Forward direction: a cover of size ≤ k' yields a DSA of total ≤ k.
    pub forward_ok: bool,
    /// Precondition: the non-padding transition mass fits under 2θ − 1.
    pub padding_sufficient: bool,
    /// Converse at desk scale: every suffix-tracking closure whose derived
    /// DSA has total ≤ k selects at most k' vertices.
    pub converse_ok: bool,
}

/// The reduction size parameter k for the given k' and theta.
pub fn reduction_k(k_prime: usize, theta: usize) -> usize {
    (k_prime + 2) * 2 * theta + (2 * theta - 1)
}

/// Checks both directions of the size bound on a concrete instance.
pub fn reduction_size_check(
    g: &Graph,
    k_prime: usize,
    theta: usize,
    caps: &Caps,
) -> Result<SizeCheckReport, DeriveError> {
    assert!(g.n_vertices() <= 8, "size check is desk scale");
    let m = build_vc_dfa(g, theta);
    let states = vc_states(g);
    let k = reduction_k(k_prime, theta);

    let min_cover = g.min_vertex_cover();
    let cover = (min_cover.len() <= k_prime).then(|| min_cover.clone());

    let mut derived_total = None;
    let mut forward_ok = true;
    let mut padding_sufficient = true;
    if let Some(cover) = &cover {
        let mut s: BTreeSet<StateId> = cover.iter().copied().collect();
        s.insert(states.init);
        s.insert(states.sink);
        s.insert(states.acc);
        let derived = derive(&m, &s, caps)?;
        let total = dsa_size(&derived).total;
        derived_total = Some(total);
        // Kept non-sink states carry the theta padding transitions; all
        // remaining mass must fit into the slack term.
        let padding = (cover.len() + 2) * 2 * theta;
        padding_sufficient = total.saturating_sub(padding) <= 2 * theta - 1;
        forward_ok = total <= k;
    }

    // Converse: enumerate vertex subsets; any suffix-tracking closure whose
    // derived DSA fits within k must select at most k' vertices.
    let mut converse_ok = true;
    let n = g.n_vertices();
    let mut err = None;
    for size in 0..=n {
        subsets_of_size(n, size, &mut |subset| {
            if err.is_some() || !converse_ok {
                return;
            }
            let mut s: BTreeSet<StateId> = subset.iter().copied().collect();
            s.insert(states.init);
            s.insert(states.sink);
            s.insert(states.acc);
            match is_suffix_tracking(&m, &s, caps) {
                Ok(report) if report.is_suffix_tracking => match derive(&m, &s, caps) {
                    Ok(derived) => {
                        if dsa_size(&derived).total <= k && subset.len() > k_prime {
                            converse_ok = false;
                        }
                    }
                    Err(e) => err = Some(e),
                },
                Ok(_) => {}
                Err(e) => err = Some(e),
            }
        });
    }
    if let Some(e) = err {
        return Err(e);
    }

    Ok(SizeCheckReport {
        theta,
        k_prime,
        k,
        cover,
        derived_total,
        forward_ok,
        padding_sufficient,
        converse_ok,
    })
}

/// Convenience constructors for the test graphs.
pub fn triangle() -> Graph {
    Graph::new(
        vec!["u".into(), "v".into(), "w".into()],
        vec![
            ("u".into(), "v".into()),
            ("v".into(), "w".into()),
            ("u".into(), "w".into()),
        ],
    )
    .unwrap()
}

pub fn path3() -> Graph {
    Graph::new(
        vec!["x".into(), "y".into(), "z".into()],
        vec![("x".into(), "y".into()), ("y".into(), "z".into())],
    )
    .unwrap()
}

pub fn star4() -> Graph {
    Graph::new(
        vec!["c".into(), "l1".into(), "l2".into(), "l3".into()],
        vec![
            ("c".into(), "l1".into()),
            ("c".into(), "l2".into()),
            ("c".into(), "l3".into()),
        ],
    )
    .unwrap()
}

/// All connected graphs with `n` unlabeled vertices, 3 ≤ n ≤ 5, as edge
/// sets over canonical vertex names. Used by the exhaustive structure
/// tests.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((3..=5).contains(&n));
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut all_pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            all_pairs.push((i, j));
        }
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << all_pairs.len()) {
        let edges: Vec<(String, String)> = all_pairs
            .iter()
            .enumerate()
            .filter(|(idx, _)| mask & (1 << idx) != 0)
            .map(|(_, &(i, j))| (names[i].clone(), names[j].clone()))
            .collect();
        if let Ok(g) = Graph::new(names.clone(), edges) {
            out.push(g);
        }
    }
    out
}
