//! Toggling independent sets of arbitrary simple graphs.
//!
//! `NC(n)` is the special case of the base graph: its independent sets are
//! exactly the noncrossing partitions, and toggling a vertex is toggling the
//! arc. Everything here runs on the same engine as [`crate::dynamics`].

mod cliquish;
mod iso;
mod skeletal;

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::dynamics::{report_on, Ground, HomomesyReport, Statistic, ToggleSystem};
use crate::error::{Error, Result};
use crate::ncpartition::{all_arcs, NCPartition};
use crate::space::{bit, iter_bits, ConflictGraph, State, StateSpace, MAX_VERTICES};
use crate::toggles::{commutes, toggle};

pub use cliquish::{
    add_edge, certify, complete_minus_edge, cycle_with_edge_triangles, disjoint_union, is_2_cliquish, pendant_double,
    remove_edge, verify_cardinality_homomesy, verify_psi_homomesy, CliquishCertificate,
};
pub use iso::{graph_isomorphic, multigraph_isomorphic, MAX_ISOMORPHISM_VERTICES};
pub use skeletal::{
    enumerate_2cliquish_from_skeletal, enumerate_multigraphs, is_skeletal, multigraph_to_skeletal, removable_edges,
    skeletal_to_multigraph, skeletalize, skeletalize_in_order, Augmentations, Multigraph,
};

/// Default ceiling on vertices for exhaustive enumeration of `ind(G)`.
pub const DEFAULT_MAX_GRAPH_VERTICES: usize = 24;

/// A simple graph with named vertices, optionally carrying a pinned
/// independent set `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<u128>,
    pinned: Option<u128>,
}

impl SimpleGraph {
    /// An edgeless graph on the given labels.
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_VERTICES {
            return Err(Error::Ceiling {
                what: "graph",
                requested: labels.len(),
                limit: MAX_VERTICES,
            });
        }
        let mut seen = HashMap::new();
        for (k, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::InvalidGraph(format!("bad vertex label {l:?}")));
            }
            if seen.insert(l.as_str(), k).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex {l}")));
            }
        }
        Ok(SimpleGraph {
            adj: vec![0; labels.len()],
            labels,
            pinned: None,
        })
    }

    /// Vertices labelled `1..=k`.
    pub fn numbered(k: usize) -> Result<Self> {
        Self::new((1..=k).map(|i| i.to_string()))
    }

    pub fn from_edges<S: AsRef<str>>(labels: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut g = Self::new(labels.iter().map(|s| s.as_ref().to_string()))?;
        for (a, b) in edges {
            let (a, b) = (g.vertex(a.as_ref())?, g.vertex(b.as_ref())?);
            g.connect(a, b)?;
        }
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Index of a label.
    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn vertices_of(&self, labels: &[&str]) -> Result<u128> {
        labels.iter().try_fold(0, |m, l| Ok(m | bit(self.vertex(l)?)))
    }

    pub fn neighbours(&self, v: usize) -> u128 {
        self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] & bit(b) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| iter_bits(self.adj[a]).filter(move |&b| b > a).map(move |b| (a, b)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub(crate) fn connect(&mut self, a: usize, b: usize) -> Result<()> {
        if a == b {
            return Err(Error::InvalidGraph(format!("loop at {}", self.labels[a])));
        }
        self.adj[a] |= bit(b);
        self.adj[b] |= bit(a);
        Ok(())
    }

    pub(crate) fn disconnect(&mut self, a: usize, b: usize) {
        self.adj[a] &= !bit(b);
        self.adj[b] &= !bit(a);
    }

    pub(crate) fn add_vertex(&mut self, label: String) -> Result<usize> {
        if self.labels.contains(&label) {
            return Err(Error::InvalidGraph(format!("duplicate vertex {label}")));
        }
        if self.len() == MAX_VERTICES {
            return Err(Error::Ceiling {
                what: "graph",
                requested: MAX_VERTICES + 1,
                limit: MAX_VERTICES,
            });
        }
        self.labels.push(label);
        self.adj.push(0);
        Ok(self.len() - 1)
    }

    /// The independent set `U` carried with the graph, if any.
    pub fn pinned(&self) -> Option<u128> {
        self.pinned
    }

    pub fn with_pinned(mut self, u: u128) -> Self {
        self.pinned = Some(u);
        self
    }

    pub fn pinned_labels(&self) -> Option<Vec<&str>> {
        self.pinned.map(|u| iter_bits(u).map(|v| self.label(v)).collect())
    }

    pub fn is_clique(&self, m: u128) -> bool {
        iter_bits(m).all(|v| (m & !bit(v)) & !self.adj[v] == 0)
    }

    pub fn is_independent(&self, m: u128) -> bool {
        iter_bits(m).all(|v| self.adj[v] & m == 0)
    }

    pub fn conflict_graph(&self) -> ConflictGraph {
        ConflictGraph::from_masks(self.adj.clone()).expect("adjacency is symmetric and irreflexive")
    }

    /// Parses the edge-list format:
    ///
    /// ```text
    /// # comment
    /// vertices: a b c d      (or `vertices: 4` for labels 1..4)
    /// independent: a b       (optional pinned U)
    /// a c
    /// b c
    /// ```
    ///
    /// Vertices not declared are added in order of first appearance.
    pub fn parse(s: &str) -> Result<Self> {
        let raw = RawGraph::parse(s)?;
        let mut g = SimpleGraph::new(raw.labels)?;
        for (line, a, b) in raw.edges {
            if a == b {
                return Err(Error::Parse {
                    token: g.labels[a].clone(),
                    position: line,
                    message: "loops are not allowed".into(),
                });
            }
            if g.has_edge(a, b) {
                return Err(Error::Parse {
                    token: format!("{} {}", g.labels[a], g.labels[b]),
                    position: line,
                    message: "repeated edge in a simple graph".into(),
                });
            }
            g.connect(a, b)?;
        }
        if let Some(u) = raw.independent {
            let m = u.iter().fold(0, |m, &v| m | bit(v));
            g.pinned = Some(m);
        }
        Ok(g)
    }

    /// Inverse of [`Self::parse`].
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "vertices: {}", self.labels.join(" ")).unwrap();
        if let Some(u) = self.pinned_labels() {
            writeln!(s, "independent: {}", u.join(" ")).unwrap();
        }
        for (a, b) in self.edges() {
            writeln!(s, "{} {}", self.labels[a], self.labels[b]).unwrap();
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<[&str; 2]> = self
            .edges()
            .into_iter()
            .map(|(a, b)| [self.label(a), self.label(b)])
            .collect();
        let mut v = serde_json::json!({ "vertices": self.labels, "edges": edges });
        if let Some(u) = self.pinned_labels() {
            v["independent"] = serde_json::json!(u);
        }
        v
    }

    /// Independent sets as a toggle system, subject to a vertex ceiling.
    pub fn toggle_system(&self, max_vertices: usize) -> Result<ToggleSystem> {
        check_ceiling(self.len(), max_vertices)?;
        Ok(ToggleSystem::from_parts(
            StateSpace::new(self.conflict_graph()),
            Ground::Graph {
                labels: self.labels.clone(),
            },
        ))
    }

    /// Labels of the vertices of `m`, in index order.
    pub fn names(&self, m: u128) -> Vec<&str> {
        iter_bits(m).map(|v| self.label(v)).collect()
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl std::str::FromStr for SimpleGraph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SimpleGraph::parse(s)
    }
}

/// Shared line parser for graphs and multigraphs.
pub(crate) struct RawGraph {
    pub labels: Vec<String>,
    /// `(line, a, b)` for each edge line.
    pub edges: Vec<(usize, usize, usize)>,
    pub independent: Option<Vec<usize>>,
}

impl RawGraph {
    pub fn parse(s: &str) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut edges = Vec::new();
        let mut independent_names: Option<(usize, Vec<String>)> = None;
        let mut intern = |labels: &mut Vec<String>, l: &str| -> usize {
            *index.entry(l.to_string()).or_insert_with(|| {
                labels.push(l.to_string());
                labels.len() - 1
            })
        };
        for (k, line) in s.lines().enumerate() {
            let line_no = k + 1;
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("vertices:") {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                match toks.as_slice() {
                    [count] if count.parse::<usize>().is_ok() => {
                        let count: usize = count.parse().unwrap();
                        for i in 1..=count {
                            intern(&mut labels, &i.to_string());
                        }
                    }
                    _ => {
                        for t in toks {
                            intern(&mut labels, t);
                        }
                    }
                }
                continue;
            }
            if let Some(rest) = line.strip_prefix("independent:") {
                independent_names = Some((line_no, rest.split_whitespace().map(String::from).collect()));
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                [a] => {
                    intern(&mut labels, a);
                }
                [a, b] => {
                    let (a, b) = (intern(&mut labels, a), intern(&mut labels, b));
                    edges.push((line_no, a, b));
                }
                _ => {
                    return Err(Error::Parse {
                        token: line.to_string(),
                        position: line_no,
                        message: "expected `u v`, a single vertex, or a header".into(),
                    })
                }
            }
        }
        let independent = match independent_names {
            None => None,
            Some((line_no, names)) => Some(
                names
                    .iter()
                    .map(|l| {
                        labels.iter().position(|x| x == l).ok_or_else(|| Error::Parse {
                            token: l.clone(),
                            position: line_no,
                            message: "independent set names an unknown vertex".into(),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        Ok(RawGraph {
            labels,
            edges,
            independent,
        })
    }
}

fn check_ceiling(k: usize, max_vertices: usize) -> Result<()> {
    let limit = max_vertices.min(MAX_VERTICES);
    if k > limit {
        return Err(Error::Ceiling {
            what: "graph for exhaustive enumeration",
            requested: k,
            limit,
        });
    }
    Ok(())
}

/// A set of pairwise non-adjacent vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndependentSet {
    bits: State,
}

impl IndependentSet {
    pub const EMPTY: IndependentSet = IndependentSet { bits: 0 };

    pub fn new(g: &SimpleGraph, bits: State) -> Result<Self> {
        if g.len() < MAX_VERTICES && bits >> g.len() != 0 {
            return Err(Error::InvalidGraph("set names a vertex outside the graph".into()));
        }
        if !g.is_independent(bits) {
            let (a, b) = g
                .edges()
                .into_iter()
                .find(|&(a, b)| bits & bit(a) != 0 && bits & bit(b) != 0)
                .expect("some edge inside");
            return Err(Error::Precondition(format!(
                "{} and {} are adjacent",
                g.label(a),
                g.label(b)
            )));
        }
        Ok(IndependentSet { bits })
    }

    pub fn from_labels(g: &SimpleGraph, labels: &[&str]) -> Result<Self> {
        Self::new(g, g.vertices_of(labels)?)
    }

    pub fn bits(self) -> State {
        self.bits
    }

    pub fn contains(self, v: usize) -> bool {
        self.bits & bit(v) != 0
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn vertices(self) -> impl Iterator<Item = usize> {
        iter_bits(self.bits)
    }

    pub fn to_text(self, g: &SimpleGraph) -> String {
        format!("{{{}}}", g.names(self.bits).join(","))
    }
}

/// All independent sets in canonical order: lexicographic in sorted vertex
/// index lists, empty set first.
pub fn enumerate_independent_sets(g: &SimpleGraph) -> Result<Vec<IndependentSet>> {
    enumerate_independent_sets_with_limit(g, DEFAULT_MAX_GRAPH_VERTICES)
}

pub fn enumerate_independent_sets_with_limit(g: &SimpleGraph, max_vertices: usize) -> Result<Vec<IndependentSet>> {
    check_ceiling(g.len(), max_vertices)?;
    Ok(g.conflict_graph()
        .independent_sets()
        .into_iter()
        .map(|bits| IndependentSet { bits })
        .collect())
}

/// Adds `v` if that keeps the set independent, removes it if present,
/// otherwise leaves the set unchanged.
pub fn toggle_vertex(g: &SimpleGraph, w: IndependentSet, v: &str) -> Result<IndependentSet> {
    let v = g.vertex(v)?;
    Ok(IndependentSet {
        bits: g.conflict_graph().toggle(w.bits, v),
    })
}

/// `2 chi_v(W) + sum over neighbours u of chi_u(W)`.
pub fn psi_v(g: &SimpleGraph, w: IndependentSet, v: &str) -> Result<i64> {
    let v = g.vertex(v)?;
    Ok(2 * w.contains(v) as i64 + (w.bits & g.neighbours(v)).count_ones() as i64)
}

/// A sequence of vertex toggles, stored in evaluation order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexWord {
    seq: Vec<usize>,
}

impl VertexWord {
    pub fn from_evaluation_order(g: &SimpleGraph, seq: Vec<usize>) -> Result<Self> {
        if let Some(&v) = seq.iter().find(|&&v| v >= g.len()) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        Ok(VertexWord { seq })
    }

    /// Whitespace-separated labels in product order (last acts first).
    pub fn parse_paper(g: &SimpleGraph, s: &str) -> Result<Self> {
        let mut seq = s
            .split_whitespace()
            .enumerate()
            .map(|(pos, tok)| {
                g.vertex(tok).map_err(|_| Error::Parse {
                    token: tok.to_string(),
                    position: pos + 1,
                    message: "unknown vertex".into(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        seq.reverse();
        Ok(VertexWord { seq })
    }

    /// Every vertex once, in index order of evaluation.
    pub fn all_vertices(g: &SimpleGraph) -> Self {
        VertexWord {
            seq: (0..g.len()).collect(),
        }
    }

    pub fn evaluation_order(&self) -> &[usize] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn support(&self) -> u128 {
        self.seq.iter().fold(0, |m, &v| m | bit(v))
    }

    pub fn is_partial_coxeter(&self) -> bool {
        self.support().count_ones() as usize == self.seq.len()
    }

    pub fn is_coxeter(&self, g: &SimpleGraph) -> bool {
        self.is_partial_coxeter() && self.seq.len() == g.len()
    }

    pub fn to_paper_text(&self, g: &SimpleGraph) -> String {
        self.seq.iter().rev().map(|&v| g.label(v)).collect::<Vec<_>>().join(" ")
    }

    pub fn apply(&self, g: &SimpleGraph, w: IndependentSet) -> IndependentSet {
        IndependentSet {
            bits: g.conflict_graph().apply(w.bits, &self.seq),
        }
    }
}

/// A partial Coxeter word containing every vertex of `required`, every
/// other vertex independently with probability 1/2, uniformly shuffled.
pub fn random_vertex_word<R: Rng>(g: &SimpleGraph, required: u128, rng: &mut R) -> VertexWord {
    let mut seq: Vec<usize> = (0..g.len())
        .filter(|&v| required & bit(v) != 0 || rng.gen_bool(0.5))
        .collect();
    seq.shuffle(rng);
    VertexWord { seq }
}

/// A uniformly shuffled Coxeter word on the vertices.
pub fn random_coxeter_vertex_word<R: Rng>(g: &SimpleGraph, rng: &mut R) -> VertexWord {
    random_vertex_word(g, crate::space::full_mask(g.len()), rng)
}

/// Homomesy report for any statistic under a vertex word.
pub fn check_graph_homomesy(
    g: &SimpleGraph,
    w: &VertexWord,
    stat: &Statistic,
    max_vertices: usize,
    threads: usize,
) -> Result<HomomesyReport> {
    let sys = g.toggle_system(max_vertices)?;
    let orbits = sys.orbits(w.evaluation_order(), threads);
    report_on(&sys, &orbits, stat, w.to_paper_text(g))
}

/// `Gamma_n` as a labelled graph (`"i,j"`), with the short arcs pinned.
pub fn base_simple_graph(n: usize) -> Result<SimpleGraph> {
    let arcs = all_arcs(n);
    let mut g = SimpleGraph::new(arcs.iter().map(|a| format!("{},{}", a.i, a.j)))?;
    for x in 0..arcs.len() {
        for y in x + 1..arcs.len() {
            if !commutes(arcs[x], arcs[y]) {
                g.connect(x, y)?;
            }
        }
    }
    let u = arcs
        .iter()
        .enumerate()
        .filter(|(_, a)| a.length() == 1)
        .fold(0, |m, (v, _)| m | bit(v));
    Ok(g.with_pinned(u))
}

/// Checks exhaustively that reading arcs as vertices of `Gamma_n` maps
/// `NC(n)` bijectively onto `ind(Gamma_n)` and carries every arc toggle to
/// the vertex toggle. Returns a description of the first mismatch.
pub fn base_graph_correspondence(n: usize) -> Result<Option<String>> {
    let g = base_simple_graph(n)?;
    let arcs = all_arcs(n);
    let sets = enumerate_independent_sets_with_limit(&g, MAX_VERTICES)?;
    let parts = crate::ncpartition::enumerate_nc(n)?;
    if sets.len() != parts.len() {
        return Err(Error::Precondition(format!(
            "|ind| = {} but |NC| = {}",
            sets.len(),
            parts.len()
        )));
    }
    let to_partition =
        |w: IndependentSet| -> Result<NCPartition> { NCPartition::new(n, w.vertices().map(|v| arcs[v])) };
    for (w, p) in sets.iter().zip(&parts) {
        let q = to_partition(*w)?;
        if &q != p {
            return Ok(Some(format!("{} maps to {q}, expected {p}", w.to_text(&g))));
        }
        for (v, &a) in arcs.iter().enumerate() {
            let via_graph = to_partition(toggle_vertex(&g, *w, g.label(v))?)?;
            if via_graph != toggle(p, a)? {
                return Ok(Some(format!("toggling {a} at {p} disagrees")));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::psi;

    pub(crate) fn k4_minus_edge() -> SimpleGraph {
        SimpleGraph::parse("vertices: a b c d\nc d\na c\na d\nb c\nb d\n").unwrap()
    }

    #[test]
    fn parse_roundtrip_and_errors() {
        let g =
            SimpleGraph::parse("# K4 minus an edge\nvertices: 4\nindependent: 1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n").unwrap();
        assert_eq!(g.len(), 4);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.pinned_labels().unwrap(), vec!["1", "2"]);
        assert_eq!(SimpleGraph::parse(&g.to_text()).unwrap(), g);
        let e = SimpleGraph::parse("a b\na b c\n").unwrap_err();
        assert!(matches!(e, Error::Parse { position: 2, .. }));
        assert!(SimpleGraph::parse("a a\n").is_err());
        assert!(SimpleGraph::parse("a b\nb a\n").is_err());
        assert!(SimpleGraph::parse("independent: z\na b\n").is_err());
        let iso = SimpleGraph::parse("vertices: x y\n").unwrap();
        assert_eq!(iso.edge_count(), 0);
    }

    #[test]
    fn independent_set_counts() {
        let sets = enumerate_independent_sets(&k4_minus_edge()).unwrap();
        assert_eq!(sets.len(), 6);
        let g = k4_minus_edge();
        assert!(sets.contains(&IndependentSet::from_labels(&g, &["a", "b"]).unwrap()));
        for k in 0..=8 {
            let g = SimpleGraph::numbered(k).unwrap();
            assert_eq!(enumerate_independent_sets(&g).unwrap().len(), 1 << k);
        }
        let big = SimpleGraph::numbered(25).unwrap();
        assert!(matches!(enumerate_independent_sets(&big), Err(Error::Ceiling { .. })));
        let g5 = base_simple_graph(5).unwrap();
        assert_eq!(enumerate_independent_sets(&g5).unwrap().len(), 42);
    }

    #[test]
    fn vertex_toggles_and_psi() {
        let g = SimpleGraph::parse("vertices: u v z\nu v\n").unwrap();
        let e = IndependentSet::EMPTY;
        let z = toggle_vertex(&g, e, "z").unwrap();
        assert_eq!(z.to_text(&g), "{z}");
        let u = toggle_vertex(&g, e, "u").unwrap();
        assert_eq!(toggle_vertex(&g, u, "v").unwrap(), u);
        assert_eq!(toggle_vertex(&g, u, "u").unwrap(), e);
        assert!(toggle_vertex(&g, e, "q").is_err());
        assert_eq!(psi_v(&g, u, "u").unwrap(), 2);
        assert_eq!(psi_v(&g, u, "v").unwrap(), 1);
        assert!(IndependentSet::from_labels(&g, &["u", "v"]).is_err());
    }

    #[test]
    fn base_graph_matches_partitions() {
        for n in 0..=6 {
            assert_eq!(base_graph_correspondence(n).unwrap(), None, "n = {n}");
        }
    }

    #[test]
    fn psi_vertex_matches_psi_k() {
        for n in 2..=6 {
            let g = base_simple_graph(n).unwrap();
            let arcs = all_arcs(n);
            for w in enumerate_independent_sets(&g).unwrap() {
                let p = NCPartition::new(n, w.vertices().map(|v| arcs[v])).unwrap();
                for k in 1..n {
                    let label = format!("{},{}", k, k + 1);
                    assert_eq!(psi_v(&g, w, &label).unwrap(), psi(&p, k));
                }
            }
        }
        let g = base_simple_graph(4).unwrap();
        assert_eq!(g.pinned_labels().unwrap(), vec!["1,2", "2,3", "3,4"]);
    }

    #[test]
    fn vertex_words() {
        let g = k4_minus_edge();
        let w = VertexWord::parse_paper(&g, "a b c d").unwrap();
        assert_eq!(w.evaluation_order(), &[3, 2, 1, 0]);
        assert_eq!(w.to_paper_text(&g), "a b c d");
        assert!(w.is_coxeter(&g));
        let e = VertexWord::parse_paper(&g, "a q").unwrap_err();
        assert!(matches!(e, Error::Parse { position: 2, .. }));
    }
}
