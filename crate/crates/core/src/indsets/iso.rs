//! Brute-force isomorphism for small graphs and multigraphs.

use super::{Multigraph, SimpleGraph};
use crate::error::{Error, Result};

/// Largest vertex count accepted by the isomorphism tests.
pub const MAX_ISOMORPHISM_VERTICES: usize = 10;

/// Plain graph isomorphism; labels and pinned sets are ignored.
pub fn graph_isomorphic(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<bool> {
    let m = |g: &SimpleGraph| -> Vec<Vec<u8>> {
        (0..g.len())
            .map(|a| (0..g.len()).map(|b| g.has_edge(a, b) as u8).collect())
            .collect()
    };
    matrices_isomorphic(&m(g1), &m(g2))
}

/// Isomorphism of multigraphs, respecting edge multiplicities.
pub fn multigraph_isomorphic(m1: &Multigraph, m2: &Multigraph) -> Result<bool> {
    matrices_isomorphic(&m1.multiplicity_matrix(), &m2.multiplicity_matrix())
}

fn matrices_isomorphic(a: &[Vec<u8>], b: &[Vec<u8>]) -> Result<bool> {
    let n = a.len();
    for len in [a.len(), b.len()] {
        if len > MAX_ISOMORPHISM_VERTICES {
            return Err(Error::Ceiling {
                what: "isomorphism test",
                requested: len,
                limit: MAX_ISOMORPHISM_VERTICES,
            });
        }
    }
    if n != b.len() {
        return Ok(false);
    }
    // Invariant per vertex: sorted row. Equal multisets are necessary.
    let sig = |m: &[Vec<u8>], v: usize| {
        let mut row = m[v].clone();
        row.sort_unstable();
        row
    };
    let sa: Vec<_> = (0..n).map(|v| sig(a, v)).collect();
    let sb: Vec<_> = (0..n).map(|v| sig(b, v)).collect();
    let (mut x, mut y) = (sa.clone(), sb.clone());
    x.sort();
    y.sort();
    if x != y {
        return Ok(false);
    }
    // Most constrained vertices first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(sa[v].iter().map(|&c| c as usize).sum::<usize>()));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(a, b, &sa, &sb, &order, 0, &mut image, &mut used))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &[Vec<u8>],
    b: &[Vec<u8>],
    sa: &[Vec<u8>],
    sb: &[Vec<u8>],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for t in 0..b.len() {
        if used[t] || sa[v] != sb[t] || a[v][v] != b[t][t] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| a[v][u] == b[t][image[u]]);
        if !consistent {
            continue;
        }
        image[v] = t;
        used[t] = true;
        if extend(a, b, sa, sb, order, depth + 1, image, used) {
            return true;
        }
        used[t] = false;
    }
    image[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn relabelled_graphs_are_isomorphic() {
        let g = SimpleGraph::parse("a b\nb c\nc d\nd a\na c\ne a\n").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let mut perm: Vec<usize> = (0..g.len()).collect();
            perm.shuffle(&mut rng);
            let mut h = SimpleGraph::numbered(g.len()).unwrap();
            for (x, y) in g.edges() {
                h.connect(perm[x], perm[y]).unwrap();
            }
            assert!(graph_isomorphic(&g, &h).unwrap());
        }
    }

    #[test]
    fn distinguishes_graphs() {
        let path = SimpleGraph::parse("a b\nb c\nc d\n").unwrap();
        let star = SimpleGraph::parse("a b\na c\na d\n").unwrap();
        assert!(!graph_isomorphic(&path, &star).unwrap());
        // Same degree sequence, different structure: C6 versus two triangles.
        let c6 = SimpleGraph::parse("1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n").unwrap();
        let tt = SimpleGraph::parse("1 2\n2 3\n3 1\n4 5\n5 6\n6 4\n").unwrap();
        assert!(!graph_isomorphic(&c6, &tt).unwrap());
        let small = SimpleGraph::numbered(3).unwrap();
        assert!(!graph_isomorphic(&small, &SimpleGraph::numbered(4).unwrap()).unwrap());
        let big = SimpleGraph::numbered(11).unwrap();
        assert!(graph_isomorphic(&big, &big).is_err());
    }

    #[test]
    fn multiplicities_matter() {
        let m1 = Multigraph::parse("A B\nA B\nB C\n").unwrap();
        let m2 = Multigraph::parse("A B\nB C\nB C\n").unwrap();
        let m3 = Multigraph::parse("A B\nB C\nA C\n").unwrap();
        assert!(multigraph_isomorphic(&m1, &m2).unwrap());
        assert!(!multigraph_isomorphic(&m1, &m3).unwrap());
    }
}
