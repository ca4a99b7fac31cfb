//! Toggle words, their acyclic orientations, and admissible conjugation.
//!
//! A [`ToggleWord`] stores its toggles in evaluation order: the first
//! element acts first. Words written as products `tau_{3,4} tau_{1,2} ...`
//! act right to left, so parsing that notation (product order, `parse_paper`) reverses it.
//!
//! The orientation of a partial Coxeter word directs each base-graph edge
//! between two of its toggles from the one applied first to the one applied
//! later. Sources are the toggles that can be moved to the front by
//! commutations; conjugating by a source moves it to the back and turns it
//! into a sink.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::ncpartition::{all_arcs, arc_index, nc_space, parse_arc, Arc, NCPartition};
use crate::toggles::{commutes, toggle};

/// A finite sequence of toggles on `NC(n)`, stored in evaluation order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ToggleWord {
    n: usize,
    seq: Vec<Arc>,
}

impl ToggleWord {
    /// Builds a word whose first element acts first.
    pub fn from_evaluation_order(n: usize, seq: Vec<Arc>) -> Result<Self> {
        if let Some(&arc) = seq.iter().find(|a| !a.in_range(n)) {
            return Err(Error::ArcOutOfRange { arc, n });
        }
        Ok(ToggleWord { n, seq })
    }

    /// Builds a word from product notation, where the last factor acts first.
    pub fn from_paper_order(n: usize, mut seq: Vec<Arc>) -> Result<Self> {
        seq.reverse();
        Self::from_evaluation_order(n, seq)
    }

    /// Parses whitespace-separated arcs `i,j` in product notation, e.g.
    /// `"3,4 1,2 2,3 1,4"`.
    pub fn parse_paper(n: usize, s: &str) -> Result<Self> {
        let seq = s
            .split_whitespace()
            .enumerate()
            .map(|(pos, tok)| parse_arc(tok, pos + 1))
            .collect::<Result<Vec<_>>>()?;
        Self::from_paper_order(n, seq)
    }

    /// Parses `{"n":4,"paper_order":[[3,4],[1,2],...]}`.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            paper_order: Vec<Arc>,
        }
        let raw: Raw = serde_json::from_value(v.clone()).map_err(|e| Error::Parse {
            token: v.to_string(),
            position: 0,
            message: e.to_string(),
        })?;
        Self::from_paper_order(raw.n, raw.paper_order)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.n, "paper_order": self.paper_order() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn evaluation_order(&self) -> &[Arc] {
        &self.seq
    }

    pub fn paper_order(&self) -> Vec<Arc> {
        self.seq.iter().rev().copied().collect()
    }

    /// `i,j` tokens in product notation.
    pub fn to_paper_text(&self) -> String {
        let toks: Vec<String> = self.paper_order().iter().map(|a| format!("{},{}", a.i, a.j)).collect();
        toks.join(" ")
    }

    /// `i,j` tokens, first-applied first.
    pub fn to_evaluation_text(&self) -> String {
        let toks: Vec<String> = self.seq.iter().map(|a| format!("{},{}", a.i, a.j)).collect();
        toks.join(" ")
    }

    pub fn contains(&self, a: Arc) -> bool {
        self.seq.contains(&a)
    }

    pub fn support(&self) -> BTreeSet<Arc> {
        self.seq.iter().copied().collect()
    }

    /// Each arc appears at most once.
    pub fn is_partial_coxeter(&self) -> bool {
        self.support().len() == self.seq.len()
    }

    /// Each of the `C(n,2)` arcs appears exactly once.
    pub fn is_coxeter(&self) -> bool {
        self.is_partial_coxeter() && self.seq.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Contains every `tau_{i,i+1}`.
    pub fn contains_all_short_arcs(&self) -> bool {
        (1..self.n).all(|i| self.contains(Arc::new(i, i + 1)))
    }

    /// Arc indices in evaluation order, for the state-space engine.
    pub fn indices(&self) -> Vec<usize> {
        self.seq.iter().map(|&a| arc_index(self.n, a)).collect()
    }

    fn require_partial_coxeter(&self) -> Result<()> {
        let mut seen = HashSet::new();
        match self.seq.iter().find(|a| !seen.insert(**a)) {
            Some(a) => Err(Error::NotPartialCoxeter(a.to_string())),
            None => Ok(()),
        }
    }
}

/// Product notation, e.g. `τ_{3,4}τ_{1,2}`; the empty word prints as `id`.
impl fmt::Display for ToggleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.seq.is_empty() {
            return f.write_str("id");
        }
        for a in self.paper_order() {
            write!(f, "τ_{{{},{}}}", a.i, a.j)?;
        }
        Ok(())
    }
}

/// Applies a word to a partition, first element of the evaluation order
/// first.
pub fn apply_word(w: &ToggleWord, p: &NCPartition) -> Result<NCPartition> {
    if w.n != p.n() {
        return Err(Error::MismatchedN {
            left: w.n,
            right: p.n(),
        });
    }
    let mut q = p.clone();
    for &a in &w.seq {
        q = toggle(&q, a)?;
    }
    Ok(q)
}

/// An acyclic orientation of the base graph restricted to a word's support.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    support: BTreeSet<Arc>,
    edges: BTreeSet<(Arc, Arc)>,
}

impl Orientation {
    pub fn support(&self) -> &BTreeSet<Arc> {
        &self.support
    }

    /// Directed edges `(from, to)`.
    pub fn edges(&self) -> &BTreeSet<(Arc, Arc)> {
        &self.edges
    }

    pub fn sources(&self) -> BTreeSet<Arc> {
        let targets: HashSet<Arc> = self.edges.iter().map(|e| e.1).collect();
        self.support.iter().filter(|a| !targets.contains(a)).copied().collect()
    }

    pub fn sinks(&self) -> BTreeSet<Arc> {
        let origins: HashSet<Arc> = self.edges.iter().map(|e| e.0).collect();
        self.support.iter().filter(|a| !origins.contains(a)).copied().collect()
    }

    /// Reverses every edge at the source `a`, turning it into a sink.
    pub fn flip_source(&self, a: Arc) -> Result<Orientation> {
        if !self.sources().contains(&a) {
            return Err(Error::NotSource(a.to_string()));
        }
        let edges = self
            .edges
            .iter()
            .map(|&(x, y)| if x == a { (y, x) } else { (x, y) })
            .collect();
        Ok(Orientation {
            support: self.support.clone(),
            edges,
        })
    }

    /// Kahn's algorithm; `None` if the orientation has a cycle.
    pub fn topological_order(&self) -> Option<Vec<Arc>> {
        let mut indeg: std::collections::BTreeMap<Arc, usize> = self.support.iter().map(|&a| (a, 0)).collect();
        for &(_, y) in &self.edges {
            *indeg.get_mut(&y)? += 1;
        }
        let mut ready: VecDeque<Arc> = indeg.iter().filter(|(_, &d)| d == 0).map(|(&a, _)| a).collect();
        let mut order = Vec::with_capacity(self.support.len());
        while let Some(a) = ready.pop_front() {
            order.push(a);
            for &(x, y) in &self.edges {
                if x == a {
                    let d = indeg.get_mut(&y)?;
                    *d -= 1;
                    if *d == 0 {
                        ready.push_back(y);
                    }
                }
            }
        }
        (order.len() == self.support.len()).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// A uniformly shuffled linear extension, as an evaluation-order word.
    pub fn random_linear_extension<R: Rng>(&self, n: usize, rng: &mut R) -> ToggleWord {
        let mut remaining: BTreeSet<Arc> = self.support.clone();
        let mut seq = Vec::with_capacity(remaining.len());
        while !remaining.is_empty() {
            let ready: Vec<Arc> = remaining
                .iter()
                .filter(|&&a| !self.edges.iter().any(|&(x, y)| y == a && remaining.contains(&x)))
                .copied()
                .collect();
            let &pick = ready.choose(rng).expect("acyclic orientation");
            remaining.remove(&pick);
            seq.push(pick);
        }
        ToggleWord { n, seq }
    }
}

/// Orientation induced by a partial Coxeter word: `a -> b` when `a` is
/// applied before `b` and the two toggles do not commute.
pub fn orientation_of(w: &ToggleWord) -> Result<Orientation> {
    w.require_partial_coxeter()?;
    let mut edges = BTreeSet::new();
    for (x, &a) in w.seq.iter().enumerate() {
        for &b in &w.seq[x + 1..] {
            if !commutes(a, b) {
                edges.insert((a, b));
            }
        }
    }
    Ok(Orientation {
        support: w.support(),
        edges,
    })
}

pub fn sources(w: &ToggleWord) -> Result<BTreeSet<Arc>> {
    Ok(orientation_of(w)?.sources())
}

pub fn sinks(w: &ToggleWord) -> Result<BTreeSet<Arc>> {
    Ok(orientation_of(w)?.sinks())
}

/// True iff both words induce the same permutation of `NC(n)`, checked on
/// every element.
pub fn functionally_equal(w1: &ToggleWord, w2: &ToggleWord) -> Result<bool> {
    functionally_equal_with_limit(w1, w2, crate::ncpartition::DEFAULT_MAX_ENUMERATION_N)
}

pub fn functionally_equal_with_limit(w1: &ToggleWord, w2: &ToggleWord, max_n: usize) -> Result<bool> {
    if w1.n != w2.n {
        return Err(Error::MismatchedN {
            left: w1.n,
            right: w2.n,
        });
    }
    let space = nc_space(w1.n, max_n)?;
    let g = space.graph();
    let (s1, s2) = (w1.indices(), w2.indices());
    Ok(space.states().iter().all(|&s| g.apply(s, &s1) == g.apply(s, &s2)))
}

/// The word for `a w a` with the source `a` moved from the front to the
/// back of the evaluation order.
///
/// Formally the product is `a`, then `w`, then `a`; the leading `a` is
/// commuted rightwards past the toggles preceding `a` in `w` and cancelled.
/// That is possible exactly when `a` is a source.
pub fn admissible_conjugate(w: &ToggleWord, a: Arc) -> Result<ToggleWord> {
    w.require_partial_coxeter()?;
    let pos = w
        .seq
        .iter()
        .position(|&b| b == a)
        .ok_or_else(|| Error::NotSource(a.to_string()))?;
    if w.seq[..pos].iter().any(|&b| !commutes(a, b)) {
        return Err(Error::NotSource(a.to_string()));
    }
    let mut seq = Vec::with_capacity(w.seq.len());
    seq.extend_from_slice(&w.seq[..pos]);
    seq.extend_from_slice(&w.seq[pos + 1..]);
    seq.push(a);
    Ok(ToggleWord { n: w.n, seq })
}

/// Applies a sequence of admissible conjugations in turn.
pub fn conjugate_by_sequence(w: &ToggleWord, seq: &[Arc]) -> Result<ToggleWord> {
    seq.iter().try_fold(w.clone(), |acc, &a| admissible_conjugate(&acc, a))
}

/// True iff each element is a source of the successively conjugated word.
pub fn admissible_sequence_valid(w: &ToggleWord, seq: &[Arc]) -> bool {
    conjugate_by_sequence(w, seq).is_ok()
}

/// Whether `target` is reachable from `start` by source-to-sink flips.
/// Explores at most `budget` orientations; `None` when the budget runs out.
pub fn torically_equivalent(start: &Orientation, target: &Orientation, budget: usize) -> Option<bool> {
    if start.support != target.support {
        return Some(false);
    }
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start.clone());
    while let Some(o) = queue.pop_front() {
        if &o == target {
            return Some(true);
        }
        for s in o.sources() {
            let next = o.flip_source(s).expect("source");
            if seen.insert(next.clone()) {
                if seen.len() > budget {
                    return None;
                }
                queue.push_back(next);
            }
        }
    }
    Some(false)
}

/// Toggling by rows: `(1,2),(1,3),...,(1,n),(2,3),...` in evaluation order.
pub fn row_word(n: usize) -> ToggleWord {
    ToggleWord { n, seq: all_arcs(n) }
}

/// Toggling by columns: `(1,2),(1,3),(2,3),(1,4),(2,4),(3,4),...` in
/// evaluation order.
pub fn column_word(n: usize) -> ToggleWord {
    let seq = (2..=n).flat_map(|j| (1..j).map(move |i| Arc::new(i, j))).collect();
    ToggleWord { n, seq }
}

/// The word whose action is the inverse of Kreweras complementation; it is
/// the row word.
pub fn kreweras_inverse_word(n: usize) -> ToggleWord {
    row_word(n)
}

/// Kreweras complementation `tau_{1,2} tau_{1,3} ... tau_{n-1,n}`: the row
/// word reversed.
pub fn kreweras_word(n: usize) -> ToggleWord {
    let mut seq = all_arcs(n);
    seq.reverse();
    ToggleWord { n, seq }
}

/// A random partial Coxeter word containing every arc of `required`, with
/// each other arc included independently with probability 1/2, in uniformly
/// shuffled order.
pub fn random_partial_coxeter<R: Rng>(n: usize, required: &[Arc], rng: &mut R) -> ToggleWord {
    let mut seq: Vec<Arc> = all_arcs(n)
        .into_iter()
        .filter(|a| required.contains(a) || rng.gen_bool(0.5))
        .collect();
    seq.shuffle(rng);
    ToggleWord { n, seq }
}

/// A uniformly shuffled Coxeter word.
pub fn random_coxeter<R: Rng>(n: usize, rng: &mut R) -> ToggleWord {
    let mut seq = all_arcs(n);
    seq.shuffle(rng);
    ToggleWord { n, seq }
}

/// `(1,2), (2,3), ..., (n-1,n)`.
pub fn short_arcs(n: usize) -> Vec<Arc> {
    (1..n).map(|i| Arc::new(i, i + 1)).collect()
}
