//! Toggles on `NC(n)`, the six-way classification of arc pairs, and the
//! base graph of non-commuting toggles.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ncpartition::{all_arcs, arc_index, catalan, nc_space, Arc, NCPartition};
use crate::space::{bit, permutation_order};

/// Relative position of two distinct arcs `(i,j)`, `(k,l)` after ordering
/// them so that `i <= k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairType {
    /// `i < j < k < l`
    Disjoint,
    /// `i < k < l < j`
    Nesting,
    /// `i < j = k < l`
    MShaped,
    /// `i = k < j < l`
    LeftNesting,
    /// `i < k < j = l`
    RightNesting,
    /// `i < k < j < l`
    Crossing,
}

impl PairType {
    /// Disjoint, nesting and m-shaped pairs commute.
    pub fn commutes(self) -> bool {
        matches!(self, PairType::Disjoint | PairType::Nesting | PairType::MShaped)
    }
}

/// Classifies an unordered pair of distinct arcs.
pub fn classify_pair(a: Arc, b: Arc) -> Result<PairType> {
    if a == b {
        return Err(Error::EqualArcs(a));
    }
    let (a, b) = if (a.i, a.j) <= (b.i, b.j) { (a, b) } else { (b, a) };
    let (i, j, k, l) = (a.i, a.j, b.i, b.j);
    Ok(if i == k {
        // a is the shorter arc since (i, j) < (k, l)
        PairType::LeftNesting
    } else if j == l {
        PairType::RightNesting
    } else if j < k {
        PairType::Disjoint
    } else if j == k {
        PairType::MShaped
    } else if l < j {
        PairType::Nesting
    } else {
        PairType::Crossing
    })
}

/// True iff the toggles at `a` and `b` commute.
pub fn commutes(a: Arc, b: Arc) -> bool {
    a == b || classify_pair(a, b).map(PairType::commutes).unwrap_or(true)
}

/// Applies the toggle at `a`: remove it if present, add it if the result is
/// noncrossing, otherwise leave `p` unchanged.
pub fn toggle(p: &NCPartition, a: Arc) -> Result<NCPartition> {
    if !a.in_range(p.n()) {
        return Err(Error::ArcOutOfRange { arc: a, n: p.n() });
    }
    let mut q = p.clone();
    if p.contains(a) {
        q.set(a, false);
    } else if p.accepts(a) {
        q.set(a, true);
    }
    Ok(q)
}

/// Order of `tau_a tau_b` from the pair type: 1, 2 or 6.
pub fn pair_order(a: Arc, b: Arc) -> u64 {
    if a == b {
        1
    } else if commutes(a, b) {
        2
    } else {
        6
    }
}

/// Order of `tau_a tau_b` computed from its cycle decomposition on `NC(n)`.
pub fn pair_order_verified(a: Arc, b: Arc, n: usize) -> Result<u64> {
    for arc in [a, b] {
        if !arc.in_range(n) {
            return Err(Error::ArcOutOfRange { arc, n });
        }
    }
    let space = nc_space(n, crate::ncpartition::DEFAULT_MAX_ENUMERATION_N)?;
    // tau_a tau_b acts right to left: b first.
    let seq = [arc_index(n, b), arc_index(n, a)];
    Ok(permutation_order(&space.permutation(&seq, 1)))
}

/// Number of toggles not commuting with `tau_a`, `m(n+1-m) - 2` with
/// `m = j - i`.
pub fn noncommuting_count(n: usize, a: Arc) -> Result<usize> {
    if !a.in_range(n) {
        return Err(Error::ArcOutOfRange { arc: a, n });
    }
    let m = a.length();
    Ok(m * (n + 1 - m) - 2)
}

/// The same count by scanning every other arc.
pub fn noncommuting_count_brute(n: usize, a: Arc) -> usize {
    all_arcs(n).into_iter().filter(|&b| b != a && !commutes(a, b)).count()
}

/// Partition counts relative to the arc `(i, i+k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcCounts {
    /// Partitions containing the arc.
    pub containing: u128,
    /// Partitions lacking the arc to which the toggle adds it.
    pub togglable: u128,
    /// Partitions fixed by the toggle.
    pub fixed: u128,
}

/// Closed-form counts: `containing = C_{n-k} C_{k-1}`.
pub fn counts(n: usize, i: usize, k: usize) -> Result<ArcCounts> {
    let a = Arc::new(i, i + k);
    if k == 0 || !a.in_range(n) {
        return Err(Error::ArcOutOfRange { arc: a, n });
    }
    let containing = catalan(n - k)? * catalan(k - 1)?;
    Ok(ArcCounts {
        containing,
        togglable: containing,
        fixed: catalan(n)? - 2 * containing,
    })
}

/// The same counts by enumerating `NC(n)`.
pub fn counts_brute(n: usize, i: usize, k: usize) -> Result<ArcCounts> {
    let a = Arc::new(i, i + k);
    if k == 0 || !a.in_range(n) {
        return Err(Error::ArcOutOfRange { arc: a, n });
    }
    let space = nc_space(n, crate::ncpartition::DEFAULT_MAX_ENUMERATION_N)?;
    let v = arc_index(n, a);
    let g = space.graph();
    let mut c = ArcCounts {
        containing: 0,
        togglable: 0,
        fixed: 0,
    };
    for &s in space.states() {
        let t = g.toggle(s, v);
        if s & bit(v) != 0 {
            c.containing += 1;
        } else if t != s {
            c.togglable += 1;
        } else {
            c.fixed += 1;
        }
    }
    Ok(c)
}

/// The graph on arcs whose edges join non-commuting toggles.
///
/// Vertices are indexed by [`arc_index`]; adjacency rows are bitsets over
/// the same indexing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseGraph {
    n: usize,
    arcs: Vec<Arc>,
    adjacency: Vec<Vec<u64>>,
}

impl BaseGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn has_edge(&self, a: Arc, b: Arc) -> bool {
        let (x, y) = (arc_index(self.n, a), arc_index(self.n, b));
        self.adjacency[x][y / 64] >> (y % 64) & 1 == 1
    }

    pub fn degree(&self, a: Arc) -> usize {
        self.adjacency[arc_index(self.n, a)]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// Edges `(a, b)` with `a < b` lexicographically.
    pub fn edges(&self) -> Vec<(Arc, Arc)> {
        let mut out = Vec::new();
        for (x, &a) in self.arcs.iter().enumerate() {
            for &b in &self.arcs[x + 1..] {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// One edge per line, arcs rendered `i-j`.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for (a, b) in self.edges() {
            writeln!(s, "{}-{} {}-{}", a.i, a.j, b.i, b.j).unwrap();
        }
        s
    }

    /// Graphviz rendering with vertices pinned to the upper-triangular grid
    /// (row `i`, column `j`).
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph base {\n  node [shape=circle];\n");
        for a in &self.arcs {
            writeln!(s, "  \"{}-{}\" [pos=\"{},{}!\"];", a.i, a.j, a.j, self.n - a.i).unwrap();
        }
        for (a, b) in self.edges() {
            writeln!(s, "  \"{}-{}\" -- \"{}-{}\";", a.i, a.j, b.i, b.j).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

/// Builds the base graph on the `C(n,2)` arcs of `[n]`.
pub fn base_graph(n: usize) -> Result<BaseGraph> {
    if n > crate::ncpartition::MAX_PARTITION_N {
        return Err(Error::Ceiling {
            what: "base graph",
            requested: n,
            limit: crate::ncpartition::MAX_PARTITION_N,
        });
    }
    let arcs = all_arcs(n);
    let words = arcs.len().div_ceil(64);
    let mut adjacency = vec![vec![0u64; words]; arcs.len()];
    for (x, &a) in arcs.iter().enumerate() {
        for (y, &b) in arcs.iter().enumerate() {
            if x != y && !commutes(a, b) {
                adjacency[x][y / 64] |= 1 << (y % 64);
            }
        }
    }
    Ok(BaseGraph { n, arcs, adjacency })
}
