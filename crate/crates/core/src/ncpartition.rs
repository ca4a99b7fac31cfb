//! Noncrossing partitions of `[n]` in arc (linear) and block form.
//!
//! A partition is stored by its arc set: the pairs `(i, j)` of successive
//! elements of each block. Labels are 1-based everywhere in the public
//! surface; internally arcs are packed into a bitset using
//! [`arc_index`], which orders arcs lexicographically.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::space::{ConflictGraph, State, StateSpace};
use crate::toggles::{classify_pair, PairType};

/// Default ceiling for exhaustive enumeration of `NC(n)`.
pub const DEFAULT_MAX_ENUMERATION_N: usize = 16;
/// Ceiling for operations on a single partition.
pub const MAX_PARTITION_N: usize = 64;

/// An arc `(i, j)` joining two successive elements of a block, `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Arc {
    pub i: usize,
    pub j: usize,
}

impl Arc {
    pub const fn new(i: usize, j: usize) -> Self {
        Arc { i, j }
    }

    /// `j - i`.
    pub fn length(self) -> usize {
        self.j - self.i
    }

    pub fn in_range(self, n: usize) -> bool {
        1 <= self.i && self.i < self.j && self.j <= n
    }
}

impl From<(usize, usize)> for Arc {
    fn from((i, j): (usize, usize)) -> Self {
        Arc { i, j }
    }
}

impl From<Arc> for (usize, usize) {
    fn from(a: Arc) -> Self {
        (a.i, a.j)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Number of arc slots `C(n, 2)`.
pub fn arc_slots(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of an arc in the lexicographic list of all arcs of `[n]`.
#[inline]
pub fn arc_index(n: usize, a: Arc) -> usize {
    (a.i - 1) * n - a.i * (a.i - 1) / 2 + (a.j - a.i - 1)
}

/// Inverse of [`arc_index`].
pub fn arc_at(n: usize, mut idx: usize) -> Arc {
    let mut i = 1;
    while idx >= n - i {
        idx -= n - i;
        i += 1;
    }
    Arc::new(i, i + 1 + idx)
}

/// All arcs of `[n]` in lexicographic order.
pub fn all_arcs(n: usize) -> Vec<Arc> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| Arc::new(i, j))).collect()
}

/// Why an arc set fails to be a noncrossing partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    Crossing,
    LeftNesting,
    RightNesting,
    OutOfRange,
    Duplicate,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::Crossing => "crossing",
            ViolationKind::LeftNesting => "left_nesting",
            ViolationKind::RightNesting => "right_nesting",
            ViolationKind::OutOfRange => "out_of_range",
            ViolationKind::Duplicate => "duplicate",
        })
    }
}

/// A violation together with the offending arcs. `second` is absent for
/// out-of-range arcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub first: Arc,
    pub second: Option<Arc>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.second {
            Some(b) => write!(f, "{} on ({}, {})", self.kind, self.first, b),
            None => write!(f, "{} on {}", self.kind, self.first),
        }
    }
}

/// Checks that `arcs` is the linear representation of a noncrossing
/// partition of `[n]`. Reports the first violating pair in lexicographic
/// order.
pub fn validate(n: usize, arcs: &[Arc]) -> std::result::Result<(), Violation> {
    if let Some(&a) = arcs.iter().find(|a| !a.in_range(n)) {
        return Err(Violation {
            kind: ViolationKind::OutOfRange,
            first: a,
            second: None,
        });
    }
    let mut sorted = arcs.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Violation {
            kind: ViolationKind::Duplicate,
            first: w[0],
            second: Some(w[1]),
        });
    }
    for (x, &a) in sorted.iter().enumerate() {
        for &b in &sorted[x + 1..] {
            let kind = match classify_pair(a, b).expect("distinct arcs") {
                PairType::Crossing => ViolationKind::Crossing,
                PairType::LeftNesting => ViolationKind::LeftNesting,
                PairType::RightNesting => ViolationKind::RightNesting,
                _ => continue,
            };
            return Err(Violation {
                kind,
                first: a,
                second: Some(b),
            });
        }
    }
    Ok(())
}

/// A noncrossing partition of `[n]` in arc form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NCPartition {
    n: usize,
    bits: Vec<u64>,
}

impl NCPartition {
    /// The partition into singletons.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_PARTITION_N {
            return Err(Error::Ceiling {
                what: "partition ground set",
                requested: n,
                limit: MAX_PARTITION_N,
            });
        }
        Ok(NCPartition {
            n,
            bits: vec![0; arc_slots(n).div_ceil(64)],
        })
    }

    /// Builds a partition from its arcs, validating them.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let arcs: Vec<Arc> = arcs.into_iter().collect();
        let mut p = Self::empty(n)?;
        validate(n, &arcs).map_err(Error::Invalid)?;
        for a in arcs {
            p.set(a, true);
        }
        Ok(p)
    }

    /// The single-block partition `{(1,2),(2,3),...,(n-1,n)}`.
    pub fn full_chain(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|i| Arc::new(i, i + 1)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, a: Arc) -> bool {
        if !a.in_range(self.n) {
            return false;
        }
        let k = arc_index(self.n, a);
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        let n = self.n;
        self.bits.iter().enumerate().flat_map(move |(w, &word)| {
            let mut m = word;
            std::iter::from_fn(move || {
                if m == 0 {
                    return None;
                }
                let b = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(arc_at(n, w * 64 + b))
            })
        })
    }

    pub fn arc_vec(&self) -> Vec<Arc> {
        self.arcs().collect()
    }

    /// Whether `a` can be added without creating a forbidden pair.
    pub fn accepts(&self, a: Arc) -> bool {
        a.in_range(self.n)
            && !self.contains(a)
            && self
                .arcs()
                .all(|b| classify_pair(a, b).map(|t| t.commutes()).unwrap_or(false))
    }

    pub(crate) fn set(&mut self, a: Arc, on: bool) {
        let k = arc_index(self.n, a);
        if on {
            self.bits[k / 64] |= 1 << (k % 64);
        } else {
            self.bits[k / 64] &= !(1 << (k % 64));
        }
    }

    /// The `u128` engine encoding, available for `n <= 16`.
    pub fn to_state(&self) -> Option<State> {
        match self.bits.len() {
            0 => Some(0),
            1 => Some(self.bits[0] as u128),
            2 => Some(self.bits[0] as u128 | (self.bits[1] as u128) << 64),
            _ => None,
        }
    }

    /// Decodes an engine state. The caller guarantees validity.
    pub fn from_state(n: usize, s: State) -> Self {
        let mut bits = vec![0u64; arc_slots(n).div_ceil(64)];
        if let Some(w) = bits.get_mut(0) {
            *w = s as u64;
        }
        if let Some(w) = bits.get_mut(1) {
            *w = (s >> 64) as u64;
        }
        NCPartition { n, bits }
    }

    /// Number of arcs, `alpha`.
    pub fn arc_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of blocks, `beta = n - alpha`.
    pub fn block_count(&self) -> usize {
        self.n - self.arc_count()
    }

    pub fn to_blocks(&self) -> BlockPartition {
        arcs_to_blocks(self)
    }

    /// Text form `n; (i1,j1) (i2,j2) ...`.
    pub fn to_text(&self) -> String {
        let arcs: Vec<String> = self.arcs().map(|a| a.to_string()).collect();
        if arcs.is_empty() {
            format!("{};", self.n)
        } else {
            format!("{}; {}", self.n, arcs.join(" "))
        }
    }

    /// Parses either the text form or a bare block form with an explicit `n`.
    pub fn parse_text(s: &str) -> Result<Self> {
        let (n_part, rest) = s.split_once(';').ok_or_else(|| Error::Parse {
            token: s.to_string(),
            position: 0,
            message: "expected `n; (i,j) ...`".into(),
        })?;
        let n: usize = n_part.trim().parse().map_err(|_| Error::Parse {
            token: n_part.trim().to_string(),
            position: 0,
            message: "ground set size must be a non-negative integer".into(),
        })?;
        let rest = rest.trim();
        if rest.starts_with('{') {
            return blocks_to_arcs(&BlockPartition::parse(n, rest)?);
        }
        let arcs = parse_arc_list(rest, 1)?;
        Self::new(n, arcs)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.n, "arcs": self.arc_vec() })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            arcs: Vec<Arc>,
        }
        let raw: Raw = serde_json::from_value(v.clone()).map_err(|e| Error::Parse {
            token: v.to_string(),
            position: 0,
            message: e.to_string(),
        })?;
        Self::new(raw.n, raw.arcs)
    }
}

/// Parses arcs `(i,j)` or `i,j`, separated by whitespace; parenthesized arcs
/// may also abut. `offset` is added to reported token positions.
pub(crate) fn parse_arc_list(s: &str, offset: usize) -> Result<Vec<Arc>> {
    s.replace(")(", ") (")
        .split_whitespace()
        .enumerate()
        .map(|(pos, tok)| parse_arc(tok, pos + offset))
        .collect()
}

pub(crate) fn parse_arc(tok: &str, position: usize) -> Result<Arc> {
    let err = |message: &str| Error::Parse {
        token: tok.to_string(),
        position,
        message: message.to_string(),
    };
    let inner = tok.trim_start_matches('(').trim_end_matches(')');
    let (a, b) = inner.split_once(',').ok_or_else(|| err("expected `i,j`"))?;
    let i = a.trim().parse().map_err(|_| err("left endpoint is not an integer"))?;
    let j = b.trim().parse().map_err(|_| err("right endpoint is not an integer"))?;
    Ok(Arc::new(i, j))
}

impl fmt::Debug for NCPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPartition({})", self.to_text())
    }
}

impl fmt::Display for NCPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for NCPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_text(s)
    }
}

/// Lexicographic on the sorted arc lists, then by `n`.
impl Ord for NCPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.arcs().cmp(other.arcs()))
    }
}

impl PartialOrd for NCPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for NCPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// A set partition of `[n]` given by its blocks.
///
/// Blocks are kept sorted internally and ordered by least element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl BlockPartition {
    /// Checks that the blocks are nonempty, disjoint and cover `[n]`.
    /// Crossing blocks are accepted here; see [`Self::is_noncrossing`].
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::Precondition("empty block".into()));
            }
            for &x in b {
                if x == 0 || x > n {
                    return Err(Error::Precondition(format!("element {x} outside [1,{n}]")));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::Precondition(format!("element {x} appears twice")));
                }
            }
        }
        if let Some(x) = (1..=n).find(|&x| !seen[x]) {
            return Err(Error::Precondition(format!("element {x} is not covered")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(BlockPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block label of each element, indexed from 1.
    pub fn labels(&self) -> Vec<usize> {
        let mut lab = vec![usize::MAX; self.n + 1];
        for (k, b) in self.blocks.iter().enumerate() {
            for &x in b {
                lab[x] = k;
            }
        }
        lab
    }

    /// No `a < b < c < d` with `a, c` in one block and `b, d` in another.
    pub fn is_noncrossing(&self) -> bool {
        self.blocks
            .iter()
            .enumerate()
            .all(|(x, b)| self.blocks[x + 1..].iter().all(|c| !blocks_cross(b, c)))
    }

    /// Text form `{1,4,5}{2}{3}...`.
    pub fn to_text(&self) -> String {
        self.blocks
            .iter()
            .map(|b| {
                let items: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect()
    }

    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for (pos, chunk) in s.split('}').enumerate() {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let body = chunk.strip_prefix('{').ok_or_else(|| Error::Parse {
                token: chunk.to_string(),
                position: pos,
                message: "expected `{`".into(),
            })?;
            let block = body
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| {
                    t.trim().parse().map_err(|_| Error::Parse {
                        token: t.to_string(),
                        position: pos,
                        message: "block element is not an integer".into(),
                    })
                })
                .collect::<Result<Vec<usize>>>()?;
            blocks.push(block);
        }
        Self::new(n, blocks)
    }
}

impl fmt::Display for BlockPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Two disjoint sorted blocks cross iff their merged sequence alternates at
/// least four times (`x y x y`).
pub(crate) fn blocks_cross(b: &[usize], c: &[usize]) -> bool {
    let (mut x, mut y) = (0, 0);
    let mut runs = 0;
    let mut last: Option<bool> = None;
    while x < b.len() || y < c.len() {
        let from_b = y == c.len() || (x < b.len() && b[x] < c[y]);
        if from_b {
            x += 1;
        } else {
            y += 1;
        }
        if last != Some(from_b) {
            runs += 1;
            last = Some(from_b);
            if runs >= 4 {
                return true;
            }
        }
    }
    false
}

/// Blocks are the connected components of the arcs.
pub fn arcs_to_blocks(p: &NCPartition) -> BlockPartition {
    let n = p.n;
    // Each element has at most one outgoing arc to its successor.
    let mut next = vec![0usize; n + 1];
    let mut has_prev = vec![false; n + 1];
    for a in p.arcs() {
        next[a.i] = a.j;
        has_prev[a.j] = true;
    }
    let mut blocks = Vec::with_capacity(p.block_count());
    for start in (1..=n).filter(|&s| !has_prev[s]) {
        let mut block = vec![start];
        let mut x = start;
        while next[x] != 0 {
            x = next[x];
            block.push(x);
        }
        blocks.push(block);
    }
    BlockPartition { n, blocks }
}

/// Joins successive elements of each block by arcs. Crossing blocks are
/// rejected with the first crossing arc pair.
pub fn blocks_to_arcs(pi: &BlockPartition) -> Result<NCPartition> {
    let arcs = pi
        .blocks
        .iter()
        .flat_map(|b| b.windows(2).map(|w| Arc::new(w[0], w[1])));
    NCPartition::new(pi.n, arcs)
}

/// True iff every block of `pi` lies inside some block of `sigma`.
pub fn is_refinement(pi: &BlockPartition, sigma: &BlockPartition) -> Result<bool> {
    if pi.n != sigma.n {
        return Err(Error::MismatchedN {
            left: pi.n,
            right: sigma.n,
        });
    }
    let lab = sigma.labels();
    Ok(pi.blocks.iter().all(|b| b.iter().all(|&x| lab[x] == lab[b[0]])))
}

/// Catalan number `C_n` by the convolution recurrence, with overflow
/// reported as an error.
pub fn catalan(n: usize) -> Result<u128> {
    let mut c: Vec<u128> = vec![1];
    for m in 1..=n {
        let mut sum: u128 = 0;
        for k in 0..m {
            let term = c[k]
                .checked_mul(c[m - 1 - k])
                .ok_or_else(|| Error::Overflow(format!("catalan({n})")))?;
            sum = sum
                .checked_add(term)
                .ok_or_else(|| Error::Overflow(format!("catalan({n})")))?;
        }
        c.push(sum);
    }
    Ok(c[n])
}

/// The base graph `Gamma_n` as a conflict graph on arc indices.
pub(crate) fn base_conflict_graph(n: usize) -> Result<ConflictGraph> {
    let arcs = all_arcs(n);
    if arcs.len() > crate::space::MAX_VERTICES {
        return Err(Error::Ceiling {
            what: "arc set for exhaustive work",
            requested: n,
            limit: DEFAULT_MAX_ENUMERATION_N,
        });
    }
    let mut masks = vec![0u128; arcs.len()];
    for (x, &a) in arcs.iter().enumerate() {
        for (y, &b) in arcs.iter().enumerate() {
            if x != y && !classify_pair(a, b).expect("distinct").commutes() {
                masks[x] |= 1u128 << y;
            }
        }
    }
    ConflictGraph::from_masks(masks)
}

fn check_enumeration_ceiling(n: usize, max_n: usize) -> Result<()> {
    // The engine packs arcs into a u128, which caps n at 16 regardless of
    // the configured limit.
    let limit = max_n.min(16);
    if n > limit {
        return Err(Error::Ceiling {
            what: "NC(n) enumeration",
            requested: n,
            limit,
        });
    }
    Ok(())
}

/// The state space `NC(n)` as independent sets of the base graph, in
/// canonical (lexicographic) order.
pub fn nc_space(n: usize, max_n: usize) -> Result<StateSpace> {
    check_enumeration_ceiling(n, max_n)?;
    Ok(StateSpace::new(base_conflict_graph(n)?))
}

/// All of `NC(n)` in lexicographic order of sorted arc lists, using the
/// default ceiling.
pub fn enumerate_nc(n: usize) -> Result<Vec<NCPartition>> {
    enumerate_nc_with_limit(n, DEFAULT_MAX_ENUMERATION_N)
}

pub fn enumerate_nc_with_limit(n: usize, max_n: usize) -> Result<Vec<NCPartition>> {
    let space = nc_space(n, max_n)?;
    Ok(space.states().iter().map(|&s| NCPartition::from_state(n, s)).collect())
}

/// Number of elements of `NC(n)`, counted by enumeration.
pub fn count_nc(n: usize, max_n: usize) -> Result<usize> {
    Ok(nc_space(n, max_n)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arcs(list: &[(usize, usize)]) -> Vec<Arc> {
        list.iter().map(|&p| p.into()).collect()
    }

    #[test]
    fn arc_index_is_lexicographic_rank() {
        for n in 2..=9 {
            for (k, a) in all_arcs(n).into_iter().enumerate() {
                assert_eq!(arc_index(n, a), k);
                assert_eq!(arc_at(n, k), a);
            }
        }
    }

    #[test]
    fn validate_examples() {
        assert_eq!(validate(10, &arcs(&[(1, 4), (4, 5), (7, 10), (8, 9)])), Ok(()));
        let v = validate(4, &arcs(&[(1, 3), (2, 4)])).unwrap_err();
        assert_eq!(v.kind, ViolationKind::Crossing);
        assert_eq!((v.first, v.second), (Arc::new(1, 3), Some(Arc::new(2, 4))));
        let v = validate(3, &arcs(&[(1, 2), (1, 3)])).unwrap_err();
        assert_eq!(v.kind, ViolationKind::LeftNesting);
        assert_eq!((v.first, v.second), (Arc::new(1, 2), Some(Arc::new(1, 3))));
        let v = validate(3, &arcs(&[(1, 3), (2, 3)])).unwrap_err();
        assert_eq!(v.kind, ViolationKind::RightNesting);
    }

    #[test]
    fn validate_errors() {
        let v = validate(3, &arcs(&[(1, 4)])).unwrap_err();
        assert_eq!(v.kind, ViolationKind::OutOfRange);
        assert_eq!(
            validate(3, &arcs(&[(2, 2)])).unwrap_err().kind,
            ViolationKind::OutOfRange
        );
        assert_eq!(
            validate(3, &arcs(&[(0, 2)])).unwrap_err().kind,
            ViolationKind::OutOfRange
        );
        let v = validate(3, &arcs(&[(1, 2), (1, 2)])).unwrap_err();
        assert_eq!(v.kind, ViolationKind::Duplicate);
    }

    #[test]
    fn blocks_of_sample_partitions() {
        let p = NCPartition::new(10, arcs(&[(1, 4), (4, 5), (7, 10), (8, 9)])).unwrap();
        assert_eq!(p.to_blocks().to_text(), "{1,4,5}{2}{3}{6}{7,10}{8,9}");
        let p = NCPartition::new(8, arcs(&[(2, 4), (4, 5), (6, 8)])).unwrap();
        assert_eq!(p.to_blocks().to_text(), "{1}{2,4,5}{3}{6,8}{7}");
        let p = NCPartition::empty(3).unwrap();
        assert_eq!(p.to_blocks().to_text(), "{1}{2}{3}");
    }

    #[test]
    fn blocks_to_arcs_examples() {
        let pi = BlockPartition::parse(10, "{1,4,5}{2}{3}{6}{7,10}{8,9}").unwrap();
        let p = blocks_to_arcs(&pi).unwrap();
        assert_eq!(p.arc_vec(), arcs(&[(1, 4), (4, 5), (7, 10), (8, 9)]));
        let pi = BlockPartition::parse(3, "{1}{2}{3}").unwrap();
        assert_eq!(blocks_to_arcs(&pi).unwrap().arc_count(), 0);
        let pi = BlockPartition::parse(3, "{1,2,3}").unwrap();
        assert_eq!(blocks_to_arcs(&pi).unwrap().arc_vec(), arcs(&[(1, 2), (2, 3)]));
    }

    #[test]
    fn crossing_blocks_rejected() {
        let pi = BlockPartition::parse(4, "{1,3}{2,4}").unwrap();
        assert!(!pi.is_noncrossing());
        match blocks_to_arcs(&pi) {
            Err(Error::Invalid(v)) => assert_eq!(v.kind, ViolationKind::Crossing),
            other => panic!("unexpected {other:?}"),
        }
        let pi = BlockPartition::parse(6, "{1,2,5}{3,6}{4}").unwrap();
        assert!(!pi.is_noncrossing());
        assert!(blocks_to_arcs(&pi).is_err());
    }

    #[test]
    fn block_partition_rejects_bad_covers() {
        assert!(BlockPartition::new(3, vec![vec![1, 2]]).is_err());
        assert!(BlockPartition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(BlockPartition::new(3, vec![vec![1, 2, 3], vec![]]).is_err());
        assert!(BlockPartition::new(3, vec![vec![1, 2, 4], vec![3]]).is_err());
    }

    #[test]
    fn counts_and_chain() {
        let p = NCPartition::new(10, arcs(&[(1, 4), (4, 5), (7, 10), (8, 9)])).unwrap();
        assert_eq!((p.arc_count(), p.block_count()), (4, 6));
        let p = NCPartition::empty(5).unwrap();
        assert_eq!((p.arc_count(), p.block_count()), (0, 5));
        for n in 1..10 {
            let p = NCPartition::full_chain(n).unwrap();
            assert_eq!((p.arc_count(), p.block_count()), (n - 1, 1));
        }
    }

    #[test]
    fn refinement_examples() {
        let fine = BlockPartition::parse(3, "{1}{2}{3}").unwrap();
        let coarse = BlockPartition::parse(3, "{1,2,3}").unwrap();
        assert!(is_refinement(&fine, &coarse).unwrap());
        let single = NCPartition::new(3, arcs(&[(1, 3)])).unwrap();
        let chain = NCPartition::full_chain(3).unwrap();
        assert!(is_refinement(&single.to_blocks(), &chain.to_blocks()).unwrap());
        assert!(!single.arcs().all(|a| chain.contains(a)));
        let a = BlockPartition::parse(3, "{1,2}{3}").unwrap();
        let b = BlockPartition::parse(3, "{1,3}{2}").unwrap();
        assert!(!is_refinement(&a, &b).unwrap());
        assert!(is_refinement(&a, &BlockPartition::parse(4, "{1,2,3,4}").unwrap()).is_err());
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0).unwrap(), 1);
        assert_eq!(catalan(1).unwrap(), 1);
        assert_eq!(catalan(5).unwrap(), 42);
        assert_eq!(catalan(14).unwrap(), 2_674_440);
        assert!(matches!(catalan(100), Err(Error::Overflow(_))));
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_nc(0).unwrap().len(), 1);
        assert_eq!(enumerate_nc(1).unwrap().len(), 1);
        assert_eq!(enumerate_nc(3).unwrap().len(), 5);
        assert_eq!(enumerate_nc(4).unwrap().len(), 14);
        assert!(matches!(enumerate_nc(17), Err(Error::Ceiling { .. })));
        assert!(matches!(enumerate_nc_with_limit(9, 8), Err(Error::Ceiling { .. })));
    }

    #[test]
    fn enumeration_order_is_canonical() {
        let all = enumerate_nc(6).unwrap();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
    }

    #[test]
    fn text_and_json_forms() {
        let p: NCPartition = "10; (1,4) (4,5) (7,10) (8,9)".parse().unwrap();
        assert_eq!(p.to_text(), "10; (1,4) (4,5) (7,10) (8,9)");
        let q: NCPartition = "10; {1,4,5}{2}{3}{6}{7,10}{8,9}".parse().unwrap();
        assert_eq!(p, q);
        let j = p.to_json();
        assert_eq!(j.to_string(), r#"{"arcs":[[1,4],[4,5],[7,10],[8,9]],"n":10}"#);
        assert_eq!(NCPartition::from_json(&j).unwrap(), p);
        assert_eq!("3;".parse::<NCPartition>().unwrap(), NCPartition::empty(3).unwrap());
        assert!("4; (1,3) (2,4)".parse::<NCPartition>().is_err());
        assert!(matches!(
            "4; (1,3) x".parse::<NCPartition>(),
            Err(Error::Parse { position: 2, .. })
        ));
    }

    #[test]
    fn large_n_single_partition() {
        let p = NCPartition::full_chain(64).unwrap();
        assert_eq!(p.arc_count(), 63);
        assert!(p.to_state().is_none());
        assert!(NCPartition::empty(65).is_err());
    }
}
