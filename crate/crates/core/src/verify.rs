//! End-to-end checks of the main identities, one runner per claim.
//!
//! Each runner returns a [`Check`] with a pass flag and a one-line detail.
//! [`Limits::full`] runs every check at its published size;
//! [`Limits::capped`] shrinks the ranges for quick runs.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dynamics::{
    check_homomesy, chi_sum_conjugation_check, orbit_average, orbits, report_on, sample_qualifying_words, Rational,
    Statistic, Status, ToggleSystem, Verdict,
};
use crate::error::Result;
use crate::indsets::{
    base_graph_correspondence, certify, complete_minus_edge, cycle_with_edge_triangles,
    enumerate_2cliquish_from_skeletal, enumerate_multigraphs, graph_isomorphic, multigraph_isomorphic,
    multigraph_to_skeletal, pendant_double, random_vertex_word, skeletal_to_multigraph, verify_cardinality_homomesy,
    Multigraph, SimpleGraph,
};
use crate::kreweras::{kreweras, kreweras_oracle, kreweras_prime, relabel, rotate, simion_ullman};
use crate::ncpartition::{all_arcs, arc_index, catalan, count_nc, enumerate_nc, Arc};
use crate::space::bit;
use crate::toggles::{base_graph, counts, counts_brute, noncommuting_count, pair_order, pair_order_verified};
use crate::words::{column_word, functionally_equal, orientation_of, random_coxeter, row_word, ToggleWord};

/// The product `tau_{3,4} tau_{1,2} tau_{2,3} tau_{1,4}` on `NC(4)`.
pub const FOUR_TOGGLE_WORD: &str = "3,4 1,2 2,3 1,4";

/// A Coxeter element on `NC(6)` with orbit sizes 4, 22, 46, 60.
pub const COXETER_SIX_WORD: &str = "4,6 3,6 2,4 1,5 2,5 1,3 3,4 1,2 1,6 2,6 3,5 2,3 1,4 5,6 4,5";

/// The skeletal graph whose augmentations give four labelled and three
/// unlabelled 2-cliquish graphs.
pub const TWO_PAIR_SKELETON: &str = "\
vertices: a b c d x y z
independent: a b c d
x a
x b
y a
y b
x y
z c
z d
";

/// A multigraph with a double edge and an isolated vertex.
pub const DOUBLE_EDGE_MULTIGRAPH: &str = "\
vertices: A B C D E
A B
A B
B C
C D
";

/// Outcome of a single check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

impl Check {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2}. {} -- {} ({} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.millis
        )
    }
}

/// Sizes and sampling parameters for the checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Every `n` range is clipped to at most this value.
    pub max_n: usize,
    pub seed: u64,
    /// Words sampled per `n` for the arc-count and psi checks.
    pub words_per_n: usize,
    pub threads: usize,
}

impl Limits {
    /// The published sizes.
    pub fn full(seed: u64) -> Self {
        Limits {
            max_n: usize::MAX,
            seed,
            words_per_n: 100,
            threads: 1,
        }
    }

    pub fn capped(max_n: usize, seed: u64) -> Self {
        Limits {
            max_n,
            ..Self::full(seed)
        }
    }

    fn upto(&self, n: usize) -> usize {
        n.min(self.max_n)
    }
}

type Outcome = Result<(bool, String)>;

fn run(id: u8, name: &'static str, f: impl FnOnce() -> Outcome) -> Check {
    let start = Instant::now();
    let (passed, detail) = match f() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    Check {
        id,
        name,
        passed,
        detail,
        millis: start.elapsed().as_millis(),
    }
}

/// Runs every check in order.
pub fn run_all(lim: &Limits) -> Vec<Check> {
    (1..=14).map(|id| run_one(id, lim).expect("valid id")).collect()
}

/// Runs one check by number, `1..=14`.
pub fn run_one(id: u8, lim: &Limits) -> Option<Check> {
    let lim = *lim;
    Some(match id {
        1 => run(1, "Catalan counts", || catalan_counts(&lim)),
        2 => run(2, "orbits of a four-toggle word on NC(4)", four_toggle_orbits),
        3 => run(3, "Coxeter element orbit sizes on NC(6)", coxeter_six),
        4 => run(4, "arc and block counts are homomesic", || arc_count(&lim)),
        5 => run(5, "psi_k is 1-mesic", || psi_k(&lim)),
        6 => run(6, "pair orders and base-graph degrees", || pair_orders(&lim)),
        7 => run(7, "arc-containment counts", || arc_counts(&lim)),
        8 => run(8, "Kreweras agreement", || kreweras_agreement(&lim)),
        9 => run(9, "row word equals column word", || row_column(&lim)),
        10 => run(10, "orbits have even size", || even_orbits(&lim)),
        11 => run(11, "chi_{1,3} is not homomesic on NC(3)", negative_control),
        12 => run(12, "independent-set generalization", || independent_sets(&lim)),
        13 => run(13, "skeletal/multigraph bijection", || bijection(&lim)),
        14 => run(14, "chi sums survive admissible conjugation", || conjugation(&lim)),
        _ => return None,
    })
}

fn catalan_counts(lim: &Limits) -> Outcome {
    let top = lim.upto(12);
    let start = Instant::now();
    for n in 0..=top {
        let got = count_nc(n, 16)? as u128;
        let want = catalan(n)?;
        if got != want {
            return Ok((false, format!("|NC({n})| = {got}, C_{n} = {want}")));
        }
    }
    let c12_ok = top < 12 || catalan(12)? == 208_012;
    if start.elapsed() >= Duration::from_secs(10) {
        return Ok((false, format!("n = 0..={top} match but took longer than 10s")));
    }
    Ok((c12_ok, format!("n = 0..={top} match, within 10s")))
}

fn four_toggle_orbits() -> Outcome {
    let w = ToggleWord::parse_paper(4, FOUR_TOGGLE_WORD)?;
    let os = orbits(&w)?;
    let total: usize = os.iter().map(|o| o.len()).sum();
    let mut avgs = Vec::new();
    for o in &os {
        avgs.push(orbit_average(&Statistic::alpha(), o)?);
    }
    let all = avgs.iter().all(|&a| a == Rational::new(3, 2));
    let mut sizes: Vec<usize> = os.iter().map(|o| o.len()).collect();
    sizes.sort_unstable();
    Ok((
        os.len() == 5 && total == 14 && all,
        format!(
            "{} orbits, sizes {sizes:?}, total {total}, alpha averages all 3/2: {all}",
            os.len()
        ),
    ))
}

fn coxeter_six() -> Outcome {
    let w = ToggleWord::parse_paper(6, COXETER_SIX_WORD)?;
    let mut sizes: Vec<usize> = orbits(&w)?.iter().map(|o| o.len()).collect();
    sizes.sort_unstable();
    Ok((
        w.is_coxeter() && sizes == [4, 22, 46, 60],
        format!("orbit sizes {sizes:?}"),
    ))
}

fn arc_count(lim: &Limits) -> Outcome {
    let mut checked = 0;
    for n in 3..=lim.upto(8) {
        let start = Instant::now();
        let sys = ToggleSystem::partitions(n)?;
        let alpha_mean = Rational::new(n as i64 - 1, 2);
        let beta_mean = Rational::new(n as i64 + 1, 2);
        for w in sample_qualifying_words(n, lim.words_per_n, lim.seed ^ n as u64) {
            let os = sys.orbits(&w.indices(), lim.threads);
            let label = w.to_paper_text();
            let a = report_on(&sys, &os, &Statistic::alpha(), label.clone())?;
            let b = report_on(&sys, &os, &Statistic::beta(), label)?;
            if a.verdict.mean() != Some(alpha_mean) || b.verdict.mean() != Some(beta_mean) {
                return Ok((
                    false,
                    format!(
                        "n = {n}, word {}: alpha {}, beta {}",
                        w.to_paper_text(),
                        a.verdict,
                        b.verdict
                    ),
                ));
            }
            checked += 1;
        }
        if n == 8 && start.elapsed() >= Duration::from_secs(120) {
            return Ok((false, "n = 8 took longer than 2 minutes".into()));
        }
    }
    Ok((
        true,
        format!("{checked} words, alpha (n-1)/2-mesic and beta (n+1)/2-mesic, n = 8 within 2 minutes"),
    ))
}

fn psi_k(lim: &Limits) -> Outcome {
    let mut checked = 0;
    for n in 3..=lim.upto(8) {
        let sys = ToggleSystem::partitions(n)?;
        let states = sys.space().states();
        let g = sys.space().graph();
        for w in sample_qualifying_words(n, lim.words_per_n, lim.seed ^ n as u64) {
            let os = sys.orbits(&w.indices(), lim.threads);
            for k in 1..n {
                let short = Arc::new(k, k + 1);
                if !w.contains(short) {
                    continue;
                }
                let v = arc_index(n, short);
                let nb = g.neighbours(v);
                for (x, orbit) in os.iter().enumerate() {
                    let (mut zeros, mut twos, mut sum) = (0usize, 0usize, 0usize);
                    for &i in orbit {
                        let s = states[i as usize];
                        let psi = 2 * (s & bit(v) != 0) as usize + (s & nb).count_ones() as usize;
                        sum += psi;
                        match psi {
                            0 => zeros += 1,
                            2 => twos += 1,
                            _ => {}
                        }
                    }
                    if zeros != twos || sum != orbit.len() {
                        return Ok((
                            false,
                            format!(
                                "n = {n}, k = {k}, word {}, orbit {x}: #0 = {zeros}, #2 = {twos}, sum {sum} over {}",
                                w.to_paper_text(),
                                orbit.len()
                            ),
                        ));
                    }
                }
                checked += 1;
            }
        }
    }
    Ok((
        true,
        format!("{checked} (word, k) pairs: psi_k 1-mesic with #0 = #2 on every orbit"),
    ))
}

fn pair_orders(lim: &Limits) -> Outcome {
    let mut pairs = 0;
    for n in 2..=lim.upto(6) {
        let arcs = all_arcs(n);
        let bg = base_graph(n)?;
        for &a in &arcs {
            let want = noncommuting_count(n, a)?;
            if bg.degree(a) != want {
                return Ok((false, format!("n = {n}: deg {a} = {}, formula {want}", bg.degree(a))));
            }
            for &b in &arcs {
                let f = pair_order(a, b);
                let got = pair_order_verified(a, b, n)?;
                if f != got || ![1, 2, 6].contains(&got) {
                    return Ok((false, format!("n = {n}: order of {a}{b} is {got}, formula {f}")));
                }
                pairs += 1;
            }
        }
    }
    Ok((
        true,
        format!("{pairs} ordered pairs, all orders in {{1,2,6}}; all degrees m(n+1-m)-2"),
    ))
}

fn arc_counts(lim: &Limits) -> Outcome {
    let mut cases = 0;
    for n in 2..=lim.upto(10) {
        let cn = catalan(n)?;
        let mut by_len: HashMap<usize, u128> = HashMap::new();
        for i in 1..n {
            for k in 1..=n - i {
                let brute = counts_brute(n, i, k)?;
                let formula = counts(n, i, k)?;
                let prod = catalan(n - k)? * catalan(k - 1)?;
                if brute != formula || brute.containing != prod || brute.fixed != cn - 2 * prod {
                    return Ok((
                        false,
                        format!("n = {n}, arc ({i},{}): brute {brute:?}, formula {formula:?}", i + k),
                    ));
                }
                if let Some(&prev) = by_len.get(&k) {
                    if prev != brute.containing {
                        return Ok((false, format!("n = {n}: count depends on i for k = {k}")));
                    }
                }
                by_len.insert(k, brute.containing);
                cases += 1;
            }
        }
        // Arc lengths run 1..n, so the reflection pairs up 2..n-1.
        for k in 2..n {
            if by_len[&k] != by_len[&(n + 1 - k)] {
                return Ok((false, format!("n = {n}: k = {k} and {} differ", n + 1 - k)));
            }
        }
    }
    Ok((
        true,
        format!("{cases} arcs: C_(n-k) C_(k-1) containing, C_n - 2 C_(n-k) C_(k-1) fixed, k <-> n+1-k symmetric"),
    ))
}

fn kreweras_agreement(lim: &Limits) -> Outcome {
    let mut total = 0;
    for n in 1..=lim.upto(8) {
        for p in enumerate_nc(n)? {
            let k = kreweras(&p);
            let oracle = kreweras_oracle(&p)?;
            let bad = |what: &str| Ok((false, format!("n = {n}, pi = {p}: {what}")));
            if oracle != k {
                return bad(&format!("oracle {oracle} vs word {k}"));
            }
            if relabel(&k, |i| i % n + 1)? != kreweras_prime(&p) {
                return bad("relabelled complement differs from inverse-word image");
            }
            if kreweras(&k) != rotate(&p, 1) {
                return bad("kappa^2 is not the rotation");
            }
            if p.block_count() + k.block_count() != n + 1 {
                return bad("|pi| + |kappa(pi)| != n+1");
            }
            let l = simion_ullman(&p);
            if simion_ullman(&l) != p || p.block_count() + l.block_count() != n + 1 {
                return bad("lambda fails");
            }
            total += 1;
        }
    }
    Ok((true, format!("{total} partitions, n = 1..={}", lim.upto(8))))
}

fn row_column(lim: &Limits) -> Outcome {
    for n in 0..=lim.upto(7) {
        if !functionally_equal(&row_word(n), &column_word(n))? {
            return Ok((false, format!("row and column words differ on NC({n})")));
        }
    }
    Ok((true, format!("n = 0..={}", lim.upto(7))))
}

fn even_orbits(lim: &Limits) -> Outcome {
    let mut words = 0;
    for n in [4, 6, 8].into_iter().filter(|&n| n <= lim.max_n) {
        let sys = ToggleSystem::partitions(n)?;
        for w in sample_qualifying_words(n, lim.words_per_n, lim.seed.wrapping_add(n as u64)) {
            if let Some(o) = sys.orbits(&w.indices(), lim.threads).iter().find(|o| o.len() % 2 == 1) {
                return Ok((
                    false,
                    format!("n = {n}, word {}: orbit of size {}", w.to_paper_text(), o.len()),
                ));
            }
            words += 1;
        }
    }
    Ok((true, format!("{words} words, every orbit even")))
}

fn negative_control() -> Outcome {
    let w = ToggleWord::parse_paper(3, "1,3 2,3 1,2")?;
    let rep = check_homomesy(&w, &Statistic::chi(Arc::new(1, 3)))?;
    let two = matches!(&rep.verdict, Verdict::NotHomomesic { averages, .. } if averages.len() == 2);
    Ok((
        rep.orbit_count == 2 && two && rep.status() == Status::Falsified,
        format!("{} orbits; {}", rep.orbit_count, rep.verdict),
    ))
}

fn independent_sets(lim: &Limits) -> Outcome {
    for n in 0..=lim.upto(6) {
        if let Some(m) = base_graph_correspondence(n)? {
            return Ok((false, format!("n = {n}: {m}")));
        }
    }
    let path = SimpleGraph::parse("a b\nb c\n")?;
    let graphs = [
        ("K4-e", complete_minus_edge(4)?),
        ("pendant-doubled K4-e", pendant_double(&complete_minus_edge(4)?)?),
        ("pendant-doubled P3", pendant_double(&path)?),
        ("C6 with edge triangles", cycle_with_edge_triangles(6)?),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(lim.seed);
    let mut words = 0;
    for (name, g) in &graphs {
        let cert = certify(g, g.pinned().expect("constructors pin U"))?;
        for _ in 0..20 {
            let w = random_vertex_word(g, cert.u, &mut rng);
            let rep = verify_cardinality_homomesy(g, &cert, &w, 24, lim.threads)?;
            if rep.status() != Status::Holds {
                return Ok((false, format!("{name}, word {}: {}", rep.word, rep.verdict)));
            }
            words += 1;
        }
    }
    Ok((
        true,
        format!(
            "NC(n) = ind(Gamma_n) for n <= {}; 4 graphs certified; {words} words A/2-mesic",
            lim.upto(6)
        ),
    ))
}

fn bijection(lim: &Limits) -> Outcome {
    let order = lim.upto(7);
    let all = enumerate_multigraphs(order, false)?;
    for m in &all {
        let g = multigraph_to_skeletal(m)?;
        let back = skeletal_to_multigraph(&g)?;
        if !multigraph_isomorphic(&back, m)? || !graph_isomorphic(&multigraph_to_skeletal(&back)?, &g)? {
            return Ok((false, format!("roundtrip fails on {}", m.to_text().replace('\n', "; "))));
        }
    }
    let m11 = Multigraph::parse(DOUBLE_EDGE_MULTIGRAPH)?;
    let g11 = multigraph_to_skeletal(&m11)?;
    let fig11 = g11.len() == 9 && skeletal_to_multigraph(&g11)? == m11;
    let aug = enumerate_2cliquish_from_skeletal(&SimpleGraph::parse(TWO_PAIR_SKELETON)?)?;
    let fig10 = (aug.labelled.len(), aug.unlabelled.len());
    Ok((
        fig11 && fig10 == (4, 3),
        format!(
            "{} multigraphs with |V|+|E| <= {order} roundtrip; double-edge example ok: {fig11}; two-pair skeleton: {} labelled / {} unlabelled",
            all.len(),
            fig10.0,
            fig10.1
        ),
    ))
}

fn conjugation(lim: &Limits) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(lim.seed);
    let mut cases = 0;
    for n in 2..=lim.upto(5) {
        for _ in 0..20 {
            let w = random_coxeter(n, &mut rng);
            for a in orientation_of(&w)?.sources() {
                let c = chi_sum_conjugation_check(&w, &[a])?;
                if !c.preserved() {
                    return Ok((
                        false,
                        format!(
                            "n = {n}, word {}, source {a}: orbit {:?}",
                            w.to_paper_text(),
                            c.counterexample
                        ),
                    ));
                }
                cases += 1;
            }
        }
    }
    Ok((
        true,
        format!("{cases} (word, source) pairs preserve sizes and chi sums"),
    ))
}
