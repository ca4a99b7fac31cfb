//! A toggle engine over independent sets of a conflict graph.
//!
//! Both state spaces in this crate are instances of the same structure:
//! `NC(n)` is the family of independent sets of the base graph on arcs,
//! and the graph module works with independent sets directly. States are
//! encoded as `u128` vertex bitsets, so the engine supports up to 128
//! vertices (every arc of `NC(16)`).

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// A set of vertices, bit `v` set when vertex `v` is present.
pub type State = u128;

/// Largest number of vertices a [`ConflictGraph`] can hold.
pub const MAX_VERTICES: usize = 128;

/// An undirected graph stored as one neighbourhood mask per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictGraph {
    masks: Vec<u128>,
}

impl ConflictGraph {
    /// Builds the graph from neighbourhood masks. The relation must be
    /// symmetric and irreflexive.
    pub fn from_masks(masks: Vec<u128>) -> Result<Self> {
        if masks.len() > MAX_VERTICES {
            return Err(Error::Ceiling {
                what: "conflict graph",
                requested: masks.len(),
                limit: MAX_VERTICES,
            });
        }
        for (v, &m) in masks.iter().enumerate() {
            if m & bit(v) != 0 {
                return Err(Error::InvalidGraph(format!("vertex {v} is adjacent to itself")));
            }
            if masks.len() < 128 && m >> masks.len() != 0 {
                return Err(Error::InvalidGraph(format!("vertex {v} has an out-of-range neighbour")));
            }
            for u in iter_bits(m) {
                if masks[u] & bit(v) == 0 {
                    return Err(Error::InvalidGraph(format!("edge {v}-{u} is not symmetric")));
                }
            }
        }
        Ok(ConflictGraph { masks })
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn neighbours(&self, v: usize) -> u128 {
        self.masks[v]
    }

    pub fn is_independent(&self, s: State) -> bool {
        iter_bits(s).all(|v| self.masks[v] & s == 0)
    }

    /// Adds `v` when legal, removes it when present, otherwise does nothing.
    #[inline]
    pub fn toggle(&self, s: State, v: usize) -> State {
        let b = bit(v);
        if s & b != 0 {
            s & !b
        } else if s & self.masks[v] == 0 {
            s | b
        } else {
            s
        }
    }

    /// Applies the toggles of `seq` in order (first element acts first).
    #[inline]
    pub fn apply(&self, mut s: State, seq: &[usize]) -> State {
        for &v in seq {
            s = self.toggle(s, v);
        }
        s
    }

    /// All independent sets, ordered lexicographically by their sorted
    /// vertex lists (the empty set first).
    pub fn independent_sets(&self) -> Vec<State> {
        let n = self.masks.len();
        let mut out = Vec::new();
        // Depth-first: emit the current set, then extend by each larger
        // compatible vertex in increasing order.
        let mut stack: Vec<(State, u128, usize)> = vec![(0, full_mask(n), 0)];
        while let Some((s, allowed, start)) = stack.pop() {
            out.push(s);
            let mut children = Vec::new();
            for v in start..n {
                if allowed & bit(v) != 0 {
                    children.push((s | bit(v), allowed & !self.masks[v] & !bit(v), v + 1));
                }
            }
            stack.extend(children.into_iter().rev());
        }
        out
    }
}

/// The enumerated states of a conflict graph with a reverse index.
#[derive(Debug, Clone)]
pub struct StateSpace {
    graph: ConflictGraph,
    states: Vec<State>,
    index: HashMap<State, u32>,
}

impl StateSpace {
    pub fn new(graph: ConflictGraph) -> Self {
        let states = graph.independent_sets();
        let index = states.iter().enumerate().map(|(i, &s)| (s, i as u32)).collect();
        StateSpace { graph, states, index }
    }

    pub fn graph(&self) -> &ConflictGraph {
        &self.graph
    }

    pub fn states(&self) -> &[State] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn index_of(&self, s: State) -> Option<usize> {
        self.index.get(&s).map(|&i| i as usize)
    }

    /// The permutation of state indices induced by a toggle sequence.
    /// With `threads > 1` the images are computed on a bounded pool; the
    /// result does not depend on the thread count.
    pub fn permutation(&self, seq: &[usize], threads: usize) -> Vec<u32> {
        let image = |s: &State| self.index[&self.graph.apply(*s, seq)];
        if threads > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .expect("thread pool");
            pool.install(|| self.states.par_iter().map(image).collect())
        } else {
            self.states.iter().map(image).collect()
        }
    }
}

/// Splits a permutation into cycles. Cycles are discovered from the
/// smallest unvisited index, so each cycle starts at its least element and
/// cycles are listed in order of their least elements.
pub fn cycles(perm: &[u32]) -> Vec<Vec<u32>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x as u32);
            x = perm[x] as usize;
        }
        out.push(cycle);
    }
    out
}

/// Order of a permutation as the lcm of its cycle lengths.
pub fn permutation_order(perm: &[u32]) -> u64 {
    cycles(perm)
        .iter()
        .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
}

#[inline]
pub(crate) fn bit(v: usize) -> u128 {
    1u128 << v
}

pub(crate) fn full_mask(n: usize) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
pub fn iter_bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> ConflictGraph {
        let mut masks = vec![0u128; n];
        for v in 0..n.saturating_sub(1) {
            masks[v] |= bit(v + 1);
            masks[v + 1] |= bit(v);
        }
        ConflictGraph::from_masks(masks).unwrap()
    }

    #[test]
    fn path_independent_sets_are_fibonacci() {
        let fib = [1, 2, 3, 5, 8, 13, 21, 34];
        for (n, &f) in fib.iter().enumerate() {
            assert_eq!(path(n).independent_sets().len(), f, "n = {n}");
        }
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let sets = path(5).independent_sets();
        let lists: Vec<Vec<usize>> = sets.iter().map(|&s| iter_bits(s).collect()).collect();
        let mut sorted = lists.clone();
        sorted.sort();
        assert_eq!(lists, sorted);
        assert_eq!(lists[0], Vec::<usize>::new());
    }

    #[test]
    fn rejects_asymmetric_masks() {
        assert!(ConflictGraph::from_masks(vec![0b10, 0]).is_err());
        assert!(ConflictGraph::from_masks(vec![0b1]).is_err());
    }

    #[test]
    fn cycles_start_at_least_element() {
        let perm = [2, 0, 1, 4, 3, 5];
        assert_eq!(cycles(&perm), vec![vec![0, 2, 1], vec![3, 4], vec![5]]);
        assert_eq!(permutation_order(&perm), 6);
    }

    #[test]
    fn threaded_permutation_matches_serial() {
        let space = StateSpace::new(path(9));
        let seq = [0, 3, 1, 8, 2, 5, 4, 7, 6];
        assert_eq!(space.permutation(&seq, 1), space.permutation(&seq, 4));
    }
}
