//! Skeletal 2-cliquish graphs and their correspondence with loopless
//! multigraphs.
//!
//! In a 2-cliquish `(G, U)`, two vertices outside `U` that share a
//! `U`-neighbour must be adjacent; an edge between two that share none can
//! be removed without breaking the structure. Removing all of them leaves
//! the skeletal graph, which is determined by the pairs of `U`-neighbours,
//! i.e. by a multigraph on `U`.

use std::fmt::Write as _;

use super::iso::{graph_isomorphic, multigraph_isomorphic};
use super::{certify, RawGraph, SimpleGraph};
use crate::error::{Error, Result};
use crate::space::{bit, iter_bits};

/// A loopless multigraph; parallel edges and isolated vertices allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    labels: Vec<String>,
    /// `(a, b)` with `a < b`, sorted; repeats encode multiplicity.
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut norm = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a >= labels.len() || b >= labels.len() {
                return Err(Error::InvalidGraph(format!("edge {a}-{b} leaves the vertex set")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at {}", labels[a])));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        Ok(Multigraph { labels, edges: norm })
    }

    /// Edge-list text; repeated lines are parallel edges.
    pub fn parse(s: &str) -> Result<Self> {
        let raw = RawGraph::parse(s)?;
        if let Some(&(line, a, _)) = raw.edges.iter().find(|(_, a, b)| a == b) {
            return Err(Error::Parse {
                token: raw.labels[a].clone(),
                position: line,
                message: "loops are not allowed".into(),
            });
        }
        Self::new(raw.labels, raw.edges.iter().map(|&(_, a, b)| (a, b)).collect())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn multiplicity_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.labels.len();
        let mut m = vec![vec![0u8; n]; n];
        for &(a, b) in &self.edges {
            m[a][b] += 1;
            m[b][a] += 1;
        }
        m
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "vertices: {}", self.labels.join(" ")).unwrap();
        for &(a, b) in &self.edges {
            writeln!(s, "{} {}", self.labels[a], self.labels[b]).unwrap();
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<[&str; 2]> = self
            .edges
            .iter()
            .map(|&(a, b)| [self.labels[a].as_str(), self.labels[b].as_str()])
            .collect();
        serde_json::json!({
            "vertices": self.labels,
            "edges": edges,
            "order": self.vertex_count() + self.edge_count(),
        })
    }
}

fn pinned_certified(g: &SimpleGraph) -> Result<u128> {
    let u = g
        .pinned()
        .ok_or_else(|| Error::Precondition("graph has no pinned independent set U".into()))?;
    certify(g, u)?;
    Ok(u)
}

fn removable(g: &SimpleGraph, u: u128, a: usize, b: usize) -> bool {
    u & (bit(a) | bit(b)) == 0 && g.has_edge(a, b) && g.neighbours(a) & g.neighbours(b) & u == 0
}

/// Edges between vertices outside `U` with no common `U`-neighbour.
pub fn removable_edges(g: &SimpleGraph) -> Result<Vec<(usize, usize)>> {
    let u = pinned_certified(g)?;
    Ok(g.edges().into_iter().filter(|&(a, b)| removable(g, u, a, b)).collect())
}

pub fn is_skeletal(g: &SimpleGraph) -> Result<bool> {
    Ok(removable_edges(g)?.is_empty())
}

/// Removes removable edges until none remain.
pub fn skeletalize(g: &SimpleGraph) -> Result<SimpleGraph> {
    let order = g.edges();
    skeletalize_in_order(g, &order)
}

/// Like [`skeletalize`], but scans edges in the given priority order and
/// removes one edge at a time, re-checking removability after each
/// removal. Used to probe order independence.
pub fn skeletalize_in_order(g: &SimpleGraph, order: &[(usize, usize)]) -> Result<SimpleGraph> {
    let u = pinned_certified(g)?;
    let mut h = g.clone();
    while let Some(&(a, b)) = order.iter().find(|&&(a, b)| removable(&h, u, a, b)) {
        h.disconnect(a, b);
    }
    if !is_skeletal(&h)? {
        return Err(Error::Precondition("removal order left a removable edge".into()));
    }
    Ok(h)
}

/// Vertices become the members of `U`; every other vertex becomes an edge
/// between its two `U`-neighbours.
pub fn skeletal_to_multigraph(g: &SimpleGraph) -> Result<Multigraph> {
    let u = pinned_certified(g)?;
    if let Some(&(a, b)) = removable_edges(g)?.first() {
        return Err(Error::NotSkeletal(g.label(a).into(), g.label(b).into()));
    }
    let members: Vec<usize> = iter_bits(u).collect();
    let pos = |v: usize| members.iter().position(|&m| m == v).expect("member of U");
    let edges = (0..g.len())
        .filter(|&v| u & bit(v) == 0)
        .map(|v| {
            let mut ends = iter_bits(g.neighbours(v) & u);
            (pos(ends.next().unwrap()), pos(ends.next().unwrap()))
        })
        .collect();
    Multigraph::new(members.iter().map(|&v| g.label(v).to_string()), edges)
}

/// Inverse of [`skeletal_to_multigraph`]: one vertex per multigraph vertex
/// (these form `U`), and one vertex `v1, v2, ...` per edge in canonical
/// edge order, joined to both endpoints and to every edge-vertex sharing an
/// endpoint with it.
pub fn multigraph_to_skeletal(m: &Multigraph) -> Result<SimpleGraph> {
    let mut prefix = String::from("v");
    let clash = |p: &str| {
        m.labels.iter().any(|l| {
            l.strip_prefix(p)
                .is_some_and(|rest| !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()))
        })
    };
    while clash(&prefix) {
        prefix.push('_');
    }
    let k = m.vertex_count();
    let labels = m
        .labels
        .iter()
        .cloned()
        .chain((1..=m.edge_count()).map(|i| format!("{prefix}{i}")));
    let mut g = SimpleGraph::new(labels)?;
    for (x, &(a, b)) in m.edges.iter().enumerate() {
        g.connect(k + x, a)?;
        g.connect(k + x, b)?;
        for (y, &(c, d)) in m.edges.iter().enumerate().skip(x + 1) {
            if a == c || a == d || b == c || b == d {
                g.connect(k + x, k + y)?;
            }
        }
    }
    Ok(g.with_pinned(crate::space::full_mask(k)))
}

/// Every loopless multigraph on vertices `1..=v` with `v >= 1` and
/// `v + |E| <= max_order`. With `up_to_isomorphism`, one representative
/// per class.
pub fn enumerate_multigraphs(max_order: usize, up_to_isomorphism: bool) -> Result<Vec<Multigraph>> {
    let mut out: Vec<Multigraph> = Vec::new();
    for v in 1..=max_order {
        let pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
        for e in 0..=max_order - v {
            if e > 0 && pairs.is_empty() {
                break;
            }
            // Multisets of size e from pairs, as non-decreasing index lists.
            let mut idx = vec![0usize; e];
            loop {
                let m = Multigraph::new((1..=v).map(|i| i.to_string()), idx.iter().map(|&i| pairs[i]).collect())?;
                let fresh = !up_to_isomorphism
                    || !out
                        .iter()
                        .filter(|o| o.vertex_count() == v && o.edge_count() == e)
                        .any(|o| multigraph_isomorphic(o, &m).unwrap_or(false));
                if fresh {
                    out.push(m);
                }
                // Next non-decreasing sequence.
                let Some(p) = (0..e).rev().find(|&p| idx[p] + 1 < pairs.len()) else {
                    break;
                };
                idx[p] += 1;
                for q in p + 1..e {
                    idx[q] = idx[p];
                }
            }
        }
    }
    Ok(out)
}

/// The 2-cliquish graphs obtained from a skeletal graph by adding edges.
#[derive(Debug, Clone)]
pub struct Augmentations {
    /// Pairs outside `U` with no common `U`-neighbour.
    pub addable: Vec<(String, String)>,
    /// One graph per subset of `addable`, the skeletal graph first.
    pub labelled: Vec<SimpleGraph>,
    /// Representatives of `labelled` up to graph isomorphism.
    pub unlabelled: Vec<SimpleGraph>,
}

/// Largest number of addable pairs [`enumerate_2cliquish_from_skeletal`]
/// will expand.
pub const MAX_ADDABLE_PAIRS: usize = 16;

/// All graphs reachable from a skeletal graph by legal edge additions.
pub fn enumerate_2cliquish_from_skeletal(g: &SimpleGraph) -> Result<Augmentations> {
    let u = pinned_certified(g)?;
    if let Some(&(a, b)) = removable_edges(g)?.first() {
        return Err(Error::NotSkeletal(g.label(a).into(), g.label(b).into()));
    }
    let outside: Vec<usize> = (0..g.len()).filter(|&v| u & bit(v) == 0).collect();
    let pairs: Vec<(usize, usize)> = outside
        .iter()
        .enumerate()
        .flat_map(|(k, &a)| outside[k + 1..].iter().map(move |&b| (a, b)))
        .filter(|&(a, b)| !g.has_edge(a, b))
        .collect();
    if pairs.len() > MAX_ADDABLE_PAIRS {
        return Err(Error::Ceiling {
            what: "addable edge set",
            requested: pairs.len(),
            limit: MAX_ADDABLE_PAIRS,
        });
    }
    let mut labelled = Vec::with_capacity(1 << pairs.len());
    for mask in 0u32..1 << pairs.len() {
        let mut h = g.clone();
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                h.connect(a, b)?;
            }
        }
        labelled.push(h);
    }
    let mut unlabelled: Vec<SimpleGraph> = Vec::new();
    for h in &labelled {
        let mut seen = false;
        for r in &unlabelled {
            if graph_isomorphic(r, h)? {
                seen = true;
                break;
            }
        }
        if !seen {
            unlabelled.push(h.clone());
        }
    }
    Ok(Augmentations {
        addable: pairs
            .iter()
            .map(|&(a, b)| (g.label(a).to_string(), g.label(b).to_string()))
            .collect(),
        labelled,
        unlabelled,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{complete_minus_edge, is_2_cliquish};
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn two_pair_skeleton() -> SimpleGraph {
        SimpleGraph::parse("vertices: a b c d x y z\nindependent: a b c d\nx a\nx b\ny a\ny b\nx y\nz c\nz d\n")
            .unwrap()
    }

    fn double_edge_multigraph() -> Multigraph {
        Multigraph::parse("vertices: A B C D E\nA B\nA B\nB C\nC D\n").unwrap()
    }

    #[test]
    fn two_pair_skeleton_augmentations() {
        let g = two_pair_skeleton();
        assert!(is_skeletal(&g).unwrap());
        let aug = enumerate_2cliquish_from_skeletal(&g).unwrap();
        assert_eq!(aug.addable, vec![("x".into(), "z".into()), ("y".into(), "z".into())]);
        assert_eq!(aug.labelled.len(), 4);
        assert_eq!(aug.unlabelled.len(), 3);
        assert!(graph_isomorphic(&aug.labelled[1], &aug.labelled[2]).unwrap());
        for h in &aug.labelled {
            certify(h, h.pinned().unwrap()).unwrap();
            assert_eq!(skeletalize(h).unwrap(), g);
        }
    }

    #[test]
    fn double_edge_multigraph_bijection() {
        let m = double_edge_multigraph();
        assert_eq!(m.vertex_count() + m.edge_count(), 9);
        let g = multigraph_to_skeletal(&m).unwrap();
        assert_eq!(g.len(), 9);
        assert_eq!(g.pinned_labels().unwrap(), vec!["A", "B", "C", "D", "E"]);
        // v1, v2 are the parallel AB edges; v3 is BC; v4 is CD.
        let e = |a: &str, b: &str| g.has_edge(g.vertex(a).unwrap(), g.vertex(b).unwrap());
        assert!(e("v1", "v2") && e("v1", "v3") && e("v2", "v3") && e("v3", "v4"));
        assert!(!e("v1", "v4") && !e("v2", "v4"));
        assert_eq!(g.edge_count(), 12);
        assert!(is_skeletal(&g).unwrap());
        assert_eq!(skeletal_to_multigraph(&g).unwrap(), m);
    }

    #[test]
    fn single_vertex_and_k4_minus_edge() {
        let m = Multigraph::parse("vertices: A\n").unwrap();
        let g = multigraph_to_skeletal(&m).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(skeletal_to_multigraph(&g).unwrap(), m);
        let k = complete_minus_edge(4).unwrap();
        assert!(is_skeletal(&k).unwrap());
        let mk = skeletal_to_multigraph(&k).unwrap();
        assert_eq!(mk.edges(), &[(0, 1), (0, 1)]);
    }

    #[test]
    fn non_skeletal_input_is_rejected() {
        let aug = enumerate_2cliquish_from_skeletal(&two_pair_skeleton()).unwrap();
        let full = aug.labelled.last().unwrap();
        assert!(!is_skeletal(full).unwrap());
        assert!(matches!(skeletal_to_multigraph(full), Err(Error::NotSkeletal(..))));
        let plain = SimpleGraph::parse("a b\n").unwrap();
        assert!(skeletalize(&plain).is_err());
    }

    #[test]
    fn skeletalization_is_order_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for m in enumerate_multigraphs(6, true).unwrap() {
            let g = multigraph_to_skeletal(&m).unwrap();
            let Ok(aug) = enumerate_2cliquish_from_skeletal(&g) else {
                continue;
            };
            for h in aug.labelled.iter().take(16) {
                let mut order = h.edges();
                for _ in 0..3 {
                    order.shuffle(&mut rng);
                    assert_eq!(skeletalize_in_order(h, &order).unwrap(), g);
                }
            }
        }
    }

    #[test]
    fn multigraph_counts() {
        // Labelled loopless multigraphs on [v] with e edges: C(C(v,2)+e-1, e).
        let all = enumerate_multigraphs(4, false).unwrap();
        // v=1: 1; v=2: e<=2 -> 3; v=3: e<=1 -> 1+3; v=4: 1.
        assert_eq!(all.len(), 1 + 3 + 4 + 1);
        let classes = enumerate_multigraphs(4, true).unwrap();
        // v=3, e=1 collapses to one class.
        assert_eq!(classes.len(), 1 + 3 + 2 + 1);
    }

    #[test]
    fn roundtrip_small() {
        for m in enumerate_multigraphs(7, false).unwrap() {
            let g = multigraph_to_skeletal(&m).unwrap();
            assert_eq!(g.len(), m.vertex_count() + m.edge_count());
            let back = skeletal_to_multigraph(&g).unwrap();
            assert!(multigraph_isomorphic(&back, &m).unwrap());
            let again = multigraph_to_skeletal(&back).unwrap();
            assert!(graph_isomorphic(&again, &g).unwrap());
            // The searched certificate may pick a different U, but one exists.
            assert!(is_2_cliquish(&g).unwrap().is_some());
        }
    }
}
