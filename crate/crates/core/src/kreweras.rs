//! Kreweras complementation, rotation and the Simion–Ullman involution.
//!
//! [`kreweras`] applies the toggle word `tau_{1,2} tau_{1,3} ... tau_{n-1,n}`;
//! [`kreweras_oracle`] computes the complement directly from its definition
//! as the coarsest noncrossing partition on interleaved primed points.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ncpartition::{arcs_to_blocks, blocks_cross, blocks_to_arcs, enumerate_nc, BlockPartition, NCPartition};
use crate::words::{apply_word, kreweras_inverse_word, kreweras_word};

/// `kappa(pi)` via its toggle word.
pub fn kreweras(p: &NCPartition) -> NCPartition {
    apply_word(&kreweras_word(p.n()), p).expect("word and partition share n")
}

/// `kappa(pi)'`: the complement relabelled by `i -> i+1 (mod n)`, computed
/// by the inverse toggle word. Equals `kappa^{-1}(pi)`.
pub fn kreweras_prime(p: &NCPartition) -> NCPartition {
    apply_word(&kreweras_inverse_word(p.n()), p).expect("word and partition share n")
}

/// `kappa^k(pi)` for any integer `k`; negative powers use the inverse.
pub fn kreweras_power(p: &NCPartition, k: i64) -> NCPartition {
    let n = p.n() as i64;
    if n == 0 {
        return p.clone();
    }
    // kappa^2 is a rotation, so kappa has order dividing 2n.
    let k = k.rem_euclid(2 * n);
    let mut q = p.clone();
    for _ in 0..k {
        q = kreweras(&q);
    }
    q
}

/// Relabels every element through `f`, which must be a bijection of `[n]`.
pub fn relabel(p: &NCPartition, f: impl Fn(usize) -> usize) -> Result<NCPartition> {
    let blocks = arcs_to_blocks(p);
    let mapped = blocks
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&x| f(x)).collect())
        .collect();
    let pi = BlockPartition::new(p.n(), mapped)?;
    blocks_to_arcs(&pi)
}

/// Rotates the circular picture counterclockwise by `steps` positions:
/// label `i` becomes `i - steps (mod n)`.
pub fn rotate(p: &NCPartition, steps: i64) -> NCPartition {
    let n = p.n() as i64;
    if n == 0 {
        return p.clone();
    }
    relabel(p, |i| ((i as i64 - 1 - steps).rem_euclid(n) + 1) as usize).expect("rotation preserves noncrossing")
}

/// `i -> n - i` for `i < n`, with `n` fixed.
pub fn eta(p: &NCPartition) -> NCPartition {
    let n = p.n();
    relabel(p, |i| if i == n { n } else { n - i }).expect("reflection preserves noncrossing")
}

/// `lambda = eta . kappa`.
pub fn simion_ullman(p: &NCPartition) -> NCPartition {
    eta(&kreweras(p))
}

/// Where the unprimed and primed copies of `i` sit on the `2n` interleaved
/// points, read clockwise from `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interleaving {
    /// `1 1' 2 2' ...`: each primed point just clockwise of its partner.
    PrimeClockwise,
    /// `1' 1 2' 2 ...`: each primed point just counterclockwise.
    PrimeCounterclockwise,
}

impl Interleaving {
    fn positions(self, i: usize) -> (usize, usize) {
        match self {
            Interleaving::PrimeClockwise => (2 * i - 1, 2 * i),
            Interleaving::PrimeCounterclockwise => (2 * i, 2 * i - 1),
        }
    }
}

/// The noncrossing partition `sigma` of the primed points with fewest
/// blocks such that `pi` together with `sigma` is noncrossing on the
/// interleaved points. Fails if the minimum is not attained uniquely.
pub fn complement_oracle(p: &NCPartition, layout: Interleaving) -> Result<NCPartition> {
    let n = p.n();
    let place = |bp: &BlockPartition, primed: bool| -> Vec<Vec<usize>> {
        bp.blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&i| {
                        let (u, v) = layout.positions(i);
                        if primed {
                            v
                        } else {
                            u
                        }
                    })
                    .collect::<Vec<_>>()
            })
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect()
    };
    let pi = place(&arcs_to_blocks(p), false);
    let mut best: Option<(usize, NCPartition)> = None;
    let mut ties = 0;
    for sigma in enumerate_nc(n)? {
        let blocks = arcs_to_blocks(&sigma);
        if best.as_ref().is_some_and(|(b, _)| blocks.len() > *b) {
            continue;
        }
        let placed = place(&blocks, true);
        let compatible = pi.iter().all(|b| placed.iter().all(|c| !blocks_cross(b, c)));
        if !compatible {
            continue;
        }
        match &best {
            Some((b, _)) if *b == blocks.len() => ties += 1,
            _ => {
                best = Some((blocks.len(), sigma));
                ties = 1;
            }
        }
    }
    if ties != 1 {
        return Err(Error::NonUniqueComplement(ties));
    }
    Ok(best.expect("the finest partition is always compatible").1)
}

/// `kappa(pi)` from the definition, with primed points clockwise.
pub fn kreweras_oracle(p: &NCPartition) -> Result<NCPartition> {
    complement_oracle(p, Interleaving::PrimeClockwise)
}

/// `kappa(pi)'` from the definition, with primed points counterclockwise.
pub fn kreweras_prime_oracle(p: &NCPartition) -> Result<NCPartition> {
    complement_oracle(p, Interleaving::PrimeCounterclockwise)
}

/// A partition drawn on `n` points placed clockwise around a circle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularPartition {
    partition: NCPartition,
}

impl CircularPartition {
    pub fn new(partition: NCPartition) -> Self {
        CircularPartition { partition }
    }

    pub fn partition(&self) -> &NCPartition {
        &self.partition
    }

    pub fn into_partition(self) -> NCPartition {
        self.partition
    }

    pub fn rotate(&self, steps: i64) -> Self {
        CircularPartition::new(rotate(&self.partition, steps))
    }

    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Result<Self> {
        relabel(&self.partition, f).map(CircularPartition::new)
    }

    /// Labels in clockwise order, each tagged with the index of its block
    /// (blocks numbered by least element): `1:0 2:1 3:1 4:0`.
    pub fn to_text(&self) -> String {
        let labels = arcs_to_blocks(&self.partition).labels();
        (1..=self.partition.n())
            .map(|i| format!("{i}:{}", labels[i]))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Graphviz source with the points pinned on a circle and one edge per
    /// arc.
    pub fn to_dot(&self) -> String {
        let n = self.partition.n();
        let mut s = String::from("graph nc {\n  node [shape=circle];\n");
        for i in 1..=n {
            // Point 1 at the top, increasing clockwise.
            let theta = std::f64::consts::FRAC_PI_2 - 2.0 * std::f64::consts::PI * (i - 1) as f64 / n as f64;
            writeln!(s, "  {i} [pos=\"{:.3},{:.3}!\"];", 2.0 * theta.cos(), 2.0 * theta.sin()).unwrap();
        }
        for a in self.partition.arcs() {
            writeln!(s, "  {} -- {};", a.i, a.j).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpartition::Arc;

    fn nc(n: usize, arcs: &[(usize, usize)]) -> NCPartition {
        NCPartition::new(n, arcs.iter().map(|&(i, j)| Arc::new(i, j))).unwrap()
    }

    fn eight_point_sample() -> NCPartition {
        nc(8, &[(2, 4), (4, 5), (6, 8)])
    }

    #[test]
    fn eight_point_complement_and_square() {
        let p = eight_point_sample();
        let k = nc(8, &[(1, 5), (2, 3), (5, 8), (6, 7)]);
        assert_eq!(kreweras(&p), k);
        assert_eq!(kreweras_oracle(&p).unwrap(), k);
        assert_eq!(p.block_count() + k.block_count(), 9);
        let k2 = nc(8, &[(1, 3), (3, 4), (5, 7)]);
        assert_eq!(kreweras(&k), k2);
        assert_eq!(rotate(&p, 1), k2);
        assert_eq!(kreweras_power(&p, 2), k2);
        assert_eq!(kreweras_power(&p, 16), p);
        assert_eq!(kreweras_power(&p, -1), kreweras_prime(&p));
    }

    #[test]
    fn finest_complements_to_coarsest() {
        for n in 1..=6 {
            let e = NCPartition::empty(n).unwrap();
            assert_eq!(kreweras(&e), NCPartition::full_chain(n).unwrap());
            assert_eq!(kreweras_oracle(&e).unwrap(), NCPartition::full_chain(n).unwrap());
        }
        let e = NCPartition::empty(2).unwrap();
        assert_eq!(kreweras_prime(&e), nc(2, &[(1, 2)]));
    }

    #[test]
    fn oracles_agree_with_words_up_to_seven() {
        for n in 0..=7 {
            for p in enumerate_nc(n).unwrap() {
                let k = kreweras(&p);
                assert_eq!(kreweras_oracle(&p).unwrap(), k, "{p}");
                let kp = kreweras_prime(&p);
                assert_eq!(kreweras_prime_oracle(&p).unwrap(), kp, "{p}");
                assert_eq!(kreweras_prime(&k), p);
                assert_eq!(kreweras(&k), rotate(&p, 1));
                let l = simion_ullman(&p);
                assert_eq!(simion_ullman(&l), p);
                // The empty ground set has no blocks at all.
                if n > 0 {
                    assert_eq!(relabel(&k, |i| i % n + 1).unwrap(), kp);
                    assert_eq!(p.block_count() + k.block_count(), n + 1);
                    assert_eq!(p.block_count() + l.block_count(), n + 1);
                }
            }
        }
    }

    #[test]
    fn rotation_and_eta() {
        let p = eight_point_sample();
        assert_eq!(rotate(&p, 8), p);
        assert_eq!(rotate(&rotate(&p, 3), -3), p);
        assert_eq!(eta(&nc(3, &[(1, 2)])), nc(3, &[(1, 2)]));
        assert_eq!(eta(&eta(&p)), p);
        assert_eq!(eta(&nc(4, &[(1, 4)])), nc(4, &[(3, 4)]));
    }

    #[test]
    fn circular_text_and_dot() {
        let c = CircularPartition::new(nc(4, &[(1, 4), (2, 3)]));
        assert_eq!(c.to_text(), "1:0 2:1 3:1 4:0");
        assert_eq!(c.rotate(4), c);
        let dot = c.to_dot();
        assert!(dot.contains("1 -- 4;") && dot.contains("2 -- 3;"));
    }
}
