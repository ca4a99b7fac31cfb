//! 2-cliquish graphs: certificates, constructions, and the cardinality
//! homomesy they support.

use serde::Serialize;

use super::{check_ceiling, SimpleGraph, VertexWord, DEFAULT_MAX_GRAPH_VERTICES};
use crate::dynamics::{report_on, HomomesyReport, Rational, Statistic};
use crate::error::{Error, Result};
use crate::space::{bit, iter_bits};

/// Evidence that `(G, U)` is 2-cliquish: `U` is a maximal independent set,
/// each `N(u)` is a clique, and each other vertex has exactly two
/// neighbours in `U`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliquishCertificate {
    #[serde(skip)]
    pub u: u128,
    #[serde(rename = "U")]
    pub u_labels: Vec<String>,
    /// Each vertex outside `U` with its two `U`-neighbours.
    pub anchors: Vec<(String, [String; 2])>,
}

impl CliquishCertificate {
    /// `A = |U|`.
    pub fn size(&self) -> usize {
        self.u.count_ones() as usize
    }
}

/// Checks the conditions for a given `U`, naming the first that fails.
pub fn certify(g: &SimpleGraph, u: u128) -> Result<CliquishCertificate> {
    let fail = |m: String| Err(Error::NotTwoCliquish(m));
    if g.len() < 128 && u >> g.len() != 0 {
        return fail("U names a vertex outside the graph".into());
    }
    if let Some((a, b)) = g.edges().into_iter().find(|&(a, b)| u & bit(a) != 0 && u & bit(b) != 0) {
        return fail(format!("U is not independent: {} ~ {}", g.label(a), g.label(b)));
    }
    for x in iter_bits(u) {
        let nb = g.neighbours(x);
        if !g.is_clique(nb) {
            return fail(format!("neighbourhood of {} is not a clique", g.label(x)));
        }
    }
    let mut anchors = Vec::new();
    for v in (0..g.len()).filter(|&v| u & bit(v) == 0) {
        let un = g.neighbours(v) & u;
        if un == 0 {
            return fail(format!("U is not maximal: {} has no neighbour in U", g.label(v)));
        }
        let names = g.names(un);
        if names.len() != 2 {
            return fail(format!("{} has {} neighbours in U, not 2", g.label(v), names.len()));
        }
        anchors.push((g.label(v).to_string(), [names[0].to_string(), names[1].to_string()]));
    }
    Ok(CliquishCertificate {
        u,
        u_labels: g.names(u).into_iter().map(String::from).collect(),
        anchors,
    })
}

/// Searches maximal independent sets in canonical order and certifies the
/// first that works.
pub fn is_2_cliquish(g: &SimpleGraph) -> Result<Option<CliquishCertificate>> {
    check_ceiling(g.len(), DEFAULT_MAX_GRAPH_VERTICES)?;
    let all = crate::space::full_mask(g.len());
    for w in g.conflict_graph().independent_sets() {
        let covered = iter_bits(w).fold(w, |m, v| m | g.neighbours(v));
        if covered != all {
            continue;
        }
        if let Ok(cert) = certify(g, w) {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

fn word_precondition(w: &VertexWord, required: u128, g: &SimpleGraph) -> Option<String> {
    if !w.is_partial_coxeter() {
        return Some("word repeats a vertex".into());
    }
    let missing = required & !w.support();
    (missing != 0).then(|| format!("word lacks toggles {}", g.names(missing).join(" ")))
}

/// Checks that cardinality is `|U|/2`-mesic under `w`. A word that is not
/// partial Coxeter or misses some `u` in `U` is evaluated but flagged.
pub fn verify_cardinality_homomesy(
    g: &SimpleGraph,
    cert: &CliquishCertificate,
    w: &VertexWord,
    max_vertices: usize,
    threads: usize,
) -> Result<HomomesyReport> {
    let sys = g.toggle_system(max_vertices)?;
    let orbits = sys.orbits(w.evaluation_order(), threads);
    let mut rep = report_on(&sys, &orbits, &Statistic::card(), w.to_paper_text(g))?;
    rep.expected_mean = Some(Rational::new(cert.size() as i64, 2));
    rep.precondition_unmet = word_precondition(w, cert.u, g);
    Ok(rep)
}

/// Checks that `psi_v` is 1-mesic under `w`, which needs `N(v)` to be a
/// clique and `w` to toggle `v`.
pub fn verify_psi_homomesy(
    g: &SimpleGraph,
    v: &str,
    w: &VertexWord,
    max_vertices: usize,
    threads: usize,
) -> Result<HomomesyReport> {
    let x = g.vertex(v)?;
    let sys = g.toggle_system(max_vertices)?;
    let orbits = sys.orbits(w.evaluation_order(), threads);
    let mut rep = report_on(&sys, &orbits, &Statistic::psi_vertex(v), w.to_paper_text(g))?;
    rep.expected_mean = Some(Rational::from_integer(1));
    rep.precondition_unmet = if g.is_clique(g.neighbours(x)) {
        word_precondition(w, bit(x), g)
    } else {
        Some(format!("neighbourhood of {v} is not a clique"))
    };
    Ok(rep)
}

/// `K_k` minus the edge `1-2`, with `U = {1, 2}`.
pub fn complete_minus_edge(k: usize) -> Result<SimpleGraph> {
    if k < 2 {
        return Err(Error::Precondition("complete_minus_edge needs k >= 2".into()));
    }
    let mut g = SimpleGraph::numbered(k)?;
    for a in 0..k {
        for b in a + 1..k {
            if (a, b) != (0, 1) {
                g.connect(a, b)?;
            }
        }
    }
    Ok(g.with_pinned(0b11))
}

/// Attaches two new pendant vertices `v'` and `v''` to every vertex `v`;
/// the pendants form `U`.
pub fn pendant_double(g: &SimpleGraph) -> Result<SimpleGraph> {
    let mut h = SimpleGraph {
        pinned: None,
        ..g.clone()
    };
    let mut u = 0;
    for v in 0..g.len() {
        for suffix in ["'", "''"] {
            let p = h.add_vertex(format!("{}{suffix}", g.label(v)))?;
            h.connect(v, p)?;
            u |= bit(p);
        }
    }
    Ok(h.with_pinned(u))
}

/// The cycle `c1 ... cm` with a new vertex `ti` joined to both ends of
/// each edge `ci c(i+1)`; `U` is the set of added vertices.
pub fn cycle_with_edge_triangles(m: usize) -> Result<SimpleGraph> {
    if m < 3 {
        return Err(Error::Precondition("a cycle needs at least 3 vertices".into()));
    }
    let labels = (1..=m).map(|i| format!("c{i}")).chain((1..=m).map(|i| format!("t{i}")));
    let mut g = SimpleGraph::new(labels)?;
    let mut u = 0;
    for i in 0..m {
        let j = (i + 1) % m;
        g.connect(i, j)?;
        g.connect(m + i, i)?;
        g.connect(m + i, j)?;
        u |= bit(m + i);
    }
    Ok(g.with_pinned(u))
}

/// Disjoint union. Right-hand labels that collide get `'` appended; pinned
/// sets are combined when both sides carry one.
pub fn disjoint_union(g: &SimpleGraph, h: &SimpleGraph) -> Result<SimpleGraph> {
    let mut out = SimpleGraph {
        pinned: None,
        ..g.clone()
    };
    let offset = g.len();
    for l in h.labels() {
        let mut name = l.clone();
        while out.labels.contains(&name) || h.labels.iter().any(|x| x != l && *x == name) {
            name.push('\'');
        }
        out.add_vertex(name)?;
    }
    for (a, b) in h.edges() {
        out.connect(offset + a, offset + b)?;
    }
    Ok(match (g.pinned, h.pinned) {
        (Some(p), Some(q)) => out.with_pinned(p | q << offset),
        _ => out,
    })
}

fn pinned_pair(g: &SimpleGraph, a: &str, b: &str) -> Result<(u128, usize, usize)> {
    let u = g
        .pinned
        .ok_or_else(|| Error::Precondition("graph has no pinned independent set U".into()))?;
    let (x, y) = (g.vertex(a)?, g.vertex(b)?);
    for (v, l) in [(x, a), (y, b)] {
        if u & bit(v) != 0 {
            return Err(Error::Precondition(format!("{l} lies in U")));
        }
    }
    if x == y {
        return Err(Error::Precondition("endpoints coincide".into()));
    }
    Ok((u, x, y))
}

/// Adds an edge between two non-adjacent vertices outside `U`.
pub fn add_edge(g: &SimpleGraph, a: &str, b: &str) -> Result<SimpleGraph> {
    let (_, x, y) = pinned_pair(g, a, b)?;
    if g.has_edge(x, y) {
        return Err(Error::Precondition(format!("{a} and {b} are already adjacent")));
    }
    let mut h = g.clone();
    h.connect(x, y)?;
    Ok(h)
}

/// Removes an edge between vertices outside `U` that share no neighbour
/// in `U`.
pub fn remove_edge(g: &SimpleGraph, a: &str, b: &str) -> Result<SimpleGraph> {
    let (u, x, y) = pinned_pair(g, a, b)?;
    if !g.has_edge(x, y) {
        return Err(Error::Precondition(format!("{a} and {b} are not adjacent")));
    }
    let common = g.neighbours(x) & g.neighbours(y) & u;
    if common != 0 {
        return Err(Error::Precondition(format!(
            "{a} and {b} have a common neighbour {} in U",
            g.names(common)[0]
        )));
    }
    let mut h = g.clone();
    h.disconnect(x, y);
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::super::tests::k4_minus_edge;
    use super::super::{base_simple_graph, random_coxeter_vertex_word, random_vertex_word};
    use super::*;
    use crate::dynamics::Status;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn k4_minus_edge_certificate() {
        let cert = is_2_cliquish(&k4_minus_edge()).unwrap().unwrap();
        assert_eq!(cert.u_labels, vec!["a", "b"]);
        assert_eq!(cert.anchors.len(), 2);
        let g = complete_minus_edge(4).unwrap();
        assert_eq!(certify(&g, g.pinned().unwrap()).unwrap().u_labels, vec!["1", "2"]);
    }

    #[test]
    fn triangle_is_not_cliquish() {
        let k3 = SimpleGraph::parse("a b\nb c\na c\n").unwrap();
        assert_eq!(is_2_cliquish(&k3).unwrap(), None);
        let e = certify(&k3, 0b1).unwrap_err();
        assert!(e.to_string().contains("neighbours in U, not 2"), "{e}");
    }

    #[test]
    fn certify_names_failures() {
        let g = k4_minus_edge();
        assert!(certify(&g, 0b0101).unwrap_err().to_string().contains("not independent"));
        // {a} alone leaves b uncovered.
        assert!(certify(&g, 0b0001).unwrap_err().to_string().contains("not maximal"));
        // A path a-b-c-d with U = {a, c}: N(c) = {b, d} is not a clique.
        let p = SimpleGraph::parse("a b\nb c\nc d\n").unwrap();
        assert!(certify(&p, 0b0101).unwrap_err().to_string().contains("not a clique"));
    }

    #[test]
    fn cycle_with_triangles() {
        let g = cycle_with_edge_triangles(6).unwrap();
        assert_eq!(g.len(), 12);
        let pinned = certify(&g, g.pinned().unwrap()).unwrap();
        assert_eq!(pinned.size(), 6);
        let found = is_2_cliquish(&g).unwrap().unwrap();
        assert_eq!(found.size(), 6);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let w = random_coxeter_vertex_word(&g, &mut rng);
        let rep = verify_cardinality_homomesy(&g, &pinned, &w, 24, 1).unwrap();
        assert_eq!(rep.verdict.mean(), Some(Rational::from_integer(3)));
        assert_eq!(rep.status(), Status::Holds);
    }

    #[test]
    fn constructions_stay_cliquish() {
        let k = k4_minus_edge();
        let d = pendant_double(&k).unwrap();
        assert_eq!(d.len(), 12);
        for v in ["a", "b", "c", "d"] {
            let x = d.vertex(v).unwrap();
            assert_eq!((d.neighbours(x) & d.pinned().unwrap()).count_ones(), 2);
        }
        certify(&d, d.pinned().unwrap()).unwrap();
        let km = complete_minus_edge(4).unwrap();
        let u = disjoint_union(&km, &km).unwrap();
        assert_eq!(u.len(), 8);
        assert_eq!(u.labels()[4], "1'");
        assert_eq!(certify(&u, u.pinned().unwrap()).unwrap().size(), 4);
    }

    #[test]
    fn edge_surgery_preconditions() {
        let g = complete_minus_edge(4).unwrap();
        let e = remove_edge(&g, "3", "4").unwrap_err();
        assert!(e.to_string().contains("common neighbour"));
        assert!(add_edge(&g, "1", "3").unwrap_err().to_string().contains("in U"));
        assert!(add_edge(&g, "3", "4").is_err());
        let two = disjoint_union(&g, &g).unwrap();
        let joined = add_edge(&two, "3", "3'").unwrap();
        certify(&joined, joined.pinned().unwrap()).unwrap();
        let back = remove_edge(&joined, "3", "3'").unwrap();
        assert_eq!(back, two);
        assert!(add_edge(&k4_minus_edge(), "c", "d")
            .unwrap_err()
            .to_string()
            .contains("no pinned"));
    }

    #[test]
    fn cardinality_homomesy_examples() {
        let g = complete_minus_edge(4).unwrap();
        let cert = certify(&g, g.pinned().unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let w = random_coxeter_vertex_word(&g, &mut rng);
            let rep = verify_cardinality_homomesy(&g, &cert, &w, 24, 1).unwrap();
            assert_eq!(rep.verdict.mean(), Some(Rational::from_integer(1)));
            for v in ["1", "2"] {
                let rep = verify_psi_homomesy(&g, v, &w, 24, 1).unwrap();
                assert_eq!(rep.status(), Status::Holds);
            }
        }
        let w = VertexWord::parse_paper(&g, "3 4 1").unwrap();
        let rep = verify_cardinality_homomesy(&g, &cert, &w, 24, 1).unwrap();
        assert_eq!(rep.status(), Status::PreconditionUnmet);
    }

    #[test]
    fn base_graph_reproduces_arc_count() {
        for n in 2..=6 {
            let g = base_simple_graph(n).unwrap();
            let cert = certify(&g, g.pinned().unwrap()).unwrap();
            assert_eq!(cert.size(), n - 1);
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            let w = random_vertex_word(&g, cert.u, &mut rng);
            let rep = verify_cardinality_homomesy(&g, &cert, &w, 24, 1).unwrap();
            assert_eq!(rep.verdict.mean(), Some(Rational::new(n as i64 - 1, 2)));
        }
    }
}
