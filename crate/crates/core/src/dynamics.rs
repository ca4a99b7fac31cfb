//! Orbits of toggle words and homomesy verification.
//!
//! Everything here runs on a [`ToggleSystem`]: an enumerated family of
//! independent sets together with a description of its ground set. `NC(n)`
//! is the system built on the base graph; arbitrary graphs come from
//! [`crate::indsets`]. Statistic averages are exact rationals.

use std::fmt::{self, Write as _};

use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ncpartition::{arc_index, nc_space, parse_arc, Arc, NCPartition, DEFAULT_MAX_ENUMERATION_N};
use crate::space::{bit, cycles, State, StateSpace};
use crate::words::{conjugate_by_sequence, random_partial_coxeter, short_arcs, ToggleWord};

/// Exact rational numbers used for every average.
pub type Rational = Ratio<i64>;

/// Serializes a rational as `"p/q"` (or `"p"` when integral).
pub fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn serialize_rationals<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

/// What the states of a [`ToggleSystem`] are made of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ground {
    /// Arcs of `NC(n)`, vertex `v` is `arc_at(n, v)`.
    Partitions { n: usize },
    /// Named vertices of a simple graph.
    Graph { labels: Vec<String> },
}

/// An enumerated state space with a toggle action.
#[derive(Debug, Clone)]
pub struct ToggleSystem {
    space: StateSpace,
    ground: Ground,
}

impl ToggleSystem {
    /// `NC(n)` with the default enumeration ceiling.
    pub fn partitions(n: usize) -> Result<Self> {
        Self::partitions_with_limit(n, DEFAULT_MAX_ENUMERATION_N)
    }

    pub fn partitions_with_limit(n: usize, max_n: usize) -> Result<Self> {
        Ok(ToggleSystem {
            space: nc_space(n, max_n)?,
            ground: Ground::Partitions { n },
        })
    }

    pub(crate) fn from_parts(space: StateSpace, ground: Ground) -> Self {
        ToggleSystem { space, ground }
    }

    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.space.len()
    }

    pub fn is_empty(&self) -> bool {
        self.space.is_empty()
    }

    /// Decodes a state of an `NC(n)` system.
    pub fn partition(&self, s: State) -> Option<NCPartition> {
        match self.ground {
            Ground::Partitions { n } => Some(NCPartition::from_state(n, s)),
            Ground::Graph { .. } => None,
        }
    }

    /// Cycles of the permutation induced by `seq` (vertex indices in
    /// evaluation order), as state indices. Each orbit starts at its least
    /// state in canonical order; orbits are sorted by that state.
    pub fn orbits(&self, seq: &[usize], threads: usize) -> Vec<Vec<u32>> {
        cycles(&self.space.permutation(seq, threads))
    }
}

/// One basis statistic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    /// Arc count.
    Alpha,
    /// Block count, `n - alpha`.
    Beta,
    /// Cardinality of the state (equals `alpha` on `NC(n)`).
    Card,
    /// Indicator of an arc.
    Chi(Arc),
    /// `psi_k = 2 chi_{k,k+1} + sum_{i<k} chi_{i,k+1} + sum_{j>k+1} chi_{k,j}`.
    Psi(usize),
    /// Indicator of a named graph vertex.
    ChiVertex(String),
    /// `2 chi_v + sum_{u ~ v} chi_u` for a named graph vertex.
    PsiVertex(String),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Alpha => f.write_str("alpha"),
            Term::Beta => f.write_str("beta"),
            Term::Card => f.write_str("card"),
            Term::Chi(a) => write!(f, "chi:{},{}", a.i, a.j),
            Term::Psi(k) => write!(f, "psi:{k}"),
            Term::ChiVertex(v) => write!(f, "chi:{v}"),
            Term::PsiVertex(v) => write!(f, "psi:{v}"),
        }
    }
}

/// A rational linear combination of basis statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statistic {
    terms: Vec<(Rational, Term)>,
}

impl Statistic {
    pub fn term(t: Term) -> Self {
        Statistic {
            terms: vec![(Rational::from_integer(1), t)],
        }
    }

    pub fn alpha() -> Self {
        Self::term(Term::Alpha)
    }

    pub fn beta() -> Self {
        Self::term(Term::Beta)
    }

    pub fn card() -> Self {
        Self::term(Term::Card)
    }

    pub fn chi(a: Arc) -> Self {
        Self::term(Term::Chi(a))
    }

    pub fn psi(k: usize) -> Self {
        Self::term(Term::Psi(k))
    }

    pub fn psi_vertex(v: &str) -> Self {
        Self::term(Term::PsiVertex(v.to_string()))
    }

    pub fn terms(&self) -> &[(Rational, Term)] {
        &self.terms
    }

    /// `self + coeff * other`.
    pub fn plus(mut self, coeff: Rational, other: Statistic) -> Self {
        self.terms.extend(other.terms.into_iter().map(|(c, t)| (c * coeff, t)));
        self
    }

    /// Parses `alpha`, `beta`, `card`, `chi:i,j`, `psi:k`, or for graphs
    /// `chi:v`, `psi:v`, combined as `2*psi:1 + 1/2*alpha - chi:1,3`.
    /// On graphs, `chi:` and `psi:` always name vertices.
    pub fn parse(s: &str, graph: bool) -> Result<Self> {
        let mut terms = Vec::new();
        let normalized = s.replace('-', "+-");
        for (pos, raw) in normalized.split('+').enumerate() {
            let tok = raw.trim();
            if tok.is_empty() {
                continue;
            }
            let err = |message: &str| Error::Parse {
                token: tok.to_string(),
                position: pos,
                message: message.to_string(),
            };
            let (neg, body) = match tok.strip_prefix('-') {
                Some(rest) => (true, rest.trim()),
                None => (false, tok),
            };
            let (coeff, name) = match body.split_once('*') {
                Some((c, name)) => (
                    parse_rational(c.trim()).ok_or_else(|| err("bad coefficient"))?,
                    name.trim(),
                ),
                None => (Rational::from_integer(1), body),
            };
            let coeff = if neg { -coeff } else { coeff };
            let term = match name.split_once(':') {
                None => match name {
                    "alpha" => Term::Alpha,
                    "beta" => Term::Beta,
                    "card" => Term::Card,
                    _ => return Err(err("unknown statistic")),
                },
                Some(("chi", arg)) if graph => Term::ChiVertex(arg.trim().to_string()),
                Some(("psi", arg)) if graph => Term::PsiVertex(arg.trim().to_string()),
                Some(("chi", arg)) => Term::Chi(parse_arc(arg.trim(), pos)?),
                Some(("psi", arg)) => Term::Psi(arg.trim().parse().map_err(|_| err("psi index is not an integer"))?),
                Some(_) => return Err(err("unknown statistic")),
            };
            terms.push((coeff, term));
        }
        if terms.is_empty() {
            return Err(Error::Parse {
                token: s.to_string(),
                position: 0,
                message: "empty statistic".into(),
            });
        }
        Ok(Statistic { terms })
    }

    /// Resolves names and indices against a system.
    pub fn compile(&self, sys: &ToggleSystem) -> Result<CompiledStatistic> {
        let mut terms = Vec::with_capacity(self.terms.len());
        let mut constant = Rational::from_integer(0);
        for (c, t) in &self.terms {
            let unsupported = || Error::Precondition(format!("statistic {t} is not defined on this state space"));
            let ct = match (&sys.ground, t) {
                (_, Term::Card) => CTerm::Card,
                (Ground::Partitions { .. }, Term::Alpha) => CTerm::Card,
                (Ground::Partitions { n }, Term::Beta) => {
                    constant += *c * Rational::from_integer(*n as i64);
                    terms.push((-*c, CTerm::Card));
                    continue;
                }
                (Ground::Partitions { n }, Term::Chi(a)) => {
                    if !a.in_range(*n) {
                        return Err(Error::ArcOutOfRange { arc: *a, n: *n });
                    }
                    CTerm::Bit(arc_index(*n, *a))
                }
                (Ground::Partitions { n }, Term::Psi(k)) => {
                    if *k == 0 || *k >= *n {
                        return Err(Error::Precondition(format!("psi:{k} needs 1 <= k < n = {n}")));
                    }
                    CTerm::Psi(arc_index(*n, Arc::new(*k, k + 1)))
                }
                (Ground::Graph { labels }, Term::ChiVertex(v)) => CTerm::Bit(vertex_of(labels, v)?),
                (Ground::Graph { labels }, Term::PsiVertex(v)) => CTerm::Psi(vertex_of(labels, v)?),
                _ => return Err(unsupported()),
            };
            terms.push((*c, ct));
        }
        let masks = sys.space.graph().clone();
        Ok(CompiledStatistic {
            constant,
            terms: terms
                .into_iter()
                .map(|(c, t)| {
                    let t = match t {
                        CTerm::Psi(v) => CTermMask::Psi(v, masks.neighbours(v)),
                        CTerm::Bit(v) => CTermMask::Bit(v),
                        CTerm::Card => CTermMask::Card,
                    };
                    (c, t)
                })
                .collect(),
        })
    }
}

fn vertex_of(labels: &[String], v: &str) -> Result<usize> {
    labels
        .iter()
        .position(|l| l == v)
        .ok_or_else(|| Error::UnknownVertex(v.to_string()))
}

fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().ok()?;
            let q: i64 = q.trim().parse().ok()?;
            (q != 0).then(|| Rational::new(p, q))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, (c, t)) in self.terms.iter().enumerate() {
            let one = Rational::from_integer(1);
            let (sign, mag) = if *c < Rational::from_integer(0) {
                ("-", -*c)
            } else {
                ("+", *c)
            };
            if x > 0 {
                write!(f, " {sign} ")?;
            } else if sign == "-" {
                f.write_str("-")?;
            }
            if mag == one {
                write!(f, "{t}")?;
            } else {
                write!(f, "{mag}*{t}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Statistic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Statistic::parse(s, false)
    }
}

enum CTerm {
    Card,
    Bit(usize),
    Psi(usize),
}

#[derive(Debug, Clone)]
enum CTermMask {
    Card,
    Bit(usize),
    Psi(usize, u128),
}

/// A statistic bound to a particular system.
#[derive(Debug, Clone)]
pub struct CompiledStatistic {
    constant: Rational,
    terms: Vec<(Rational, CTermMask)>,
}

impl CompiledStatistic {
    pub fn eval(&self, s: State) -> Rational {
        let mut total = self.constant;
        for (c, t) in &self.terms {
            let v = match *t {
                CTermMask::Card => s.count_ones() as i64,
                CTermMask::Bit(v) => (s >> v & 1) as i64,
                CTermMask::Psi(v, nb) => 2 * (s >> v & 1) as i64 + (s & nb).count_ones() as i64,
            };
            total += *c * Rational::from_integer(v);
        }
        total
    }
}

/// Indicator of an arc.
pub fn chi(p: &NCPartition, a: Arc) -> i64 {
    p.contains(a) as i64
}

/// `psi_k(P)`, always in `{0, 1, 2}`.
pub fn psi(p: &NCPartition, k: usize) -> i64 {
    let n = p.n();
    let left: i64 = (1..=k).map(|i| chi(p, Arc::new(i, k + 1))).sum();
    let right: i64 = (k + 1..=n).map(|j| chi(p, Arc::new(k, j))).sum();
    left + right
}

/// Evaluates a statistic on a single partition.
pub fn eval(stat: &Statistic, p: &NCPartition) -> Result<Rational> {
    let n = p.n();
    let mut total = Rational::from_integer(0);
    for (c, t) in &stat.terms {
        let v = match t {
            Term::Alpha | Term::Card => p.arc_count() as i64,
            Term::Beta => p.block_count() as i64,
            Term::Chi(a) => {
                if !a.in_range(n) {
                    return Err(Error::ArcOutOfRange { arc: *a, n });
                }
                chi(p, *a)
            }
            Term::Psi(k) => {
                if *k == 0 || *k >= n {
                    return Err(Error::Precondition(format!("psi:{k} needs 1 <= k < n = {n}")));
                }
                psi(p, *k)
            }
            Term::ChiVertex(_) | Term::PsiVertex(_) => {
                return Err(Error::Precondition(format!("{t} is a graph statistic")))
            }
        };
        total += *c * Rational::from_integer(v);
    }
    Ok(total)
}

/// A cyclically ordered orbit; `elements[k+1]` is the image of
/// `elements[k]` and the last maps to the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub elements: Vec<NCPartition>,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Orbits of a word on `NC(n)`, starting at their least elements.
pub fn orbits(w: &ToggleWord) -> Result<Vec<Orbit>> {
    let sys = ToggleSystem::partitions(w.n())?;
    let n = w.n();
    Ok(sys
        .orbits(&w.indices(), 1)
        .into_iter()
        .map(|c| Orbit {
            elements: c
                .iter()
                .map(|&i| NCPartition::from_state(n, sys.space.states()[i as usize]))
                .collect(),
        })
        .collect())
}

/// Exact average of a statistic over an orbit.
pub fn orbit_average(stat: &Statistic, orbit: &Orbit) -> Result<Rational> {
    if orbit.is_empty() {
        return Err(Error::Precondition("empty orbit".into()));
    }
    let mut sum = Rational::from_integer(0);
    for p in &orbit.elements {
        sum += eval(stat, p)?;
    }
    Ok(sum / Rational::from_integer(orbit.len() as i64))
}

/// Size and exact average of one orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitSummary {
    pub size: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub average: Rational,
}

/// Outcome of a homomesy check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    /// Every orbit has the same average.
    Homomesic {
        #[serde(serialize_with = "serialize_rational")]
        mean: Rational,
    },
    /// The first two orbits (by index) whose averages differ.
    NotHomomesic {
        orbits: [usize; 2],
        #[serde(serialize_with = "serialize_rationals")]
        averages: Vec<Rational>,
    },
}

impl Verdict {
    pub fn mean(&self) -> Option<Rational> {
        match self {
            Verdict::Homomesic { mean } => Some(*mean),
            Verdict::NotHomomesic { .. } => None,
        }
    }

    fn from_summaries(orbits: &[OrbitSummary]) -> Self {
        let first = orbits.first().map(|o| o.average).unwrap_or_default();
        match orbits.iter().position(|o| o.average != first) {
            None => Verdict::Homomesic { mean: first },
            Some(k) => Verdict::NotHomomesic {
                orbits: [0, k],
                averages: vec![first, orbits[k].average],
            },
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Homomesic { mean } => write!(f, "{mean}-mesic"),
            Verdict::NotHomomesic { orbits, averages } => write!(
                f,
                "NOT homomesic: orbit {} has average {}, orbit {} has average {}",
                orbits[0], averages[0], orbits[1], averages[1]
            ),
        }
    }
}

/// Overall status of a report, mapped to process exit codes by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Falsified,
    PreconditionUnmet,
}

/// Per-orbit averages of a statistic under a word, with a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomomesyReport {
    pub word: String,
    pub statistic: String,
    pub orbit_count: usize,
    pub orbits: Vec<OrbitSummary>,
    pub verdict: Verdict,
    /// The mean a theorem predicts, when one is being checked.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "serialize_opt_rational")]
    pub expected_mean: Option<Rational>,
    /// Set when the word does not meet a theorem's hypotheses.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precondition_unmet: Option<String>,
}

fn serialize_opt_rational<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => serialize_rational(r, s),
        None => s.serialize_none(),
    }
}

impl HomomesyReport {
    pub fn is_homomesic(&self) -> bool {
        matches!(self.verdict, Verdict::Homomesic { .. })
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.size).collect()
    }

    pub fn status(&self) -> Status {
        if self.precondition_unmet.is_some() {
            return Status::PreconditionUnmet;
        }
        match (self.verdict.mean(), self.expected_mean) {
            (Some(m), Some(e)) if m == e => Status::Holds,
            (Some(_), None) => Status::Holds,
            _ => Status::Falsified,
        }
    }

    /// Aligned text table followed by the verdict.
    pub fn to_table(&self) -> String {
        let mut s = String::new();
        writeln!(s, "word:      {}", self.word).unwrap();
        writeln!(s, "statistic: {}", self.statistic).unwrap();
        writeln!(s, "orbits:    {}", self.orbit_count).unwrap();
        let w_size = self
            .orbits
            .iter()
            .map(|o| o.size.to_string().len())
            .max()
            .unwrap_or(0)
            .max(4);
        let w_idx = self.orbits.len().to_string().len().max(5);
        writeln!(s, "{:>w_idx$}  {:>w_size$}  average", "orbit", "size").unwrap();
        for (k, o) in self.orbits.iter().enumerate() {
            writeln!(s, "{:>w_idx$}  {:>w_size$}  {}", k, o.size, o.average).unwrap();
        }
        if let Some(reason) = &self.precondition_unmet {
            writeln!(s, "precondition unmet: {reason}").unwrap();
        }
        if let Some(e) = self.expected_mean {
            writeln!(s, "expected:  {e}-mesic").unwrap();
        }
        writeln!(s, "verdict:   {}", self.verdict).unwrap();
        s
    }
}

/// Builds a report from precomputed orbits.
pub fn report_on(
    sys: &ToggleSystem,
    orbits: &[Vec<u32>],
    stat: &Statistic,
    word_label: String,
) -> Result<HomomesyReport> {
    let compiled = stat.compile(sys)?;
    let states = sys.space.states();
    let summaries: Vec<OrbitSummary> = orbits
        .iter()
        .map(|c| {
            let sum: Rational = c.iter().map(|&i| compiled.eval(states[i as usize])).sum();
            OrbitSummary {
                size: c.len(),
                average: sum / Rational::from_integer(c.len() as i64),
            }
        })
        .collect();
    Ok(HomomesyReport {
        word: word_label,
        statistic: stat.to_string(),
        orbit_count: summaries.len(),
        verdict: Verdict::from_summaries(&summaries),
        orbits: summaries,
        expected_mean: None,
        precondition_unmet: None,
    })
}

/// Checks whether a statistic has the same average on every orbit of `w`.
pub fn check_homomesy(w: &ToggleWord, stat: &Statistic) -> Result<HomomesyReport> {
    check_homomesy_with(w, stat, DEFAULT_MAX_ENUMERATION_N, 1)
}

pub fn check_homomesy_with(w: &ToggleWord, stat: &Statistic, max_n: usize, threads: usize) -> Result<HomomesyReport> {
    let sys = ToggleSystem::partitions_with_limit(w.n(), max_n)?;
    let orbits = sys.orbits(&w.indices(), threads);
    report_on(&sys, &orbits, stat, w.to_paper_text())
}

/// Reports for `alpha` and `beta` against the predicted means
/// `(n-1)/2` and `(n+1)/2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArcCountReport {
    pub alpha: HomomesyReport,
    pub beta: HomomesyReport,
}

impl ArcCountReport {
    pub fn status(&self) -> Status {
        match (self.alpha.status(), self.beta.status()) {
            (Status::PreconditionUnmet, _) => Status::PreconditionUnmet,
            (Status::Holds, Status::Holds) => Status::Holds,
            _ => Status::Falsified,
        }
    }
}

/// Missing-hypothesis description for the arc-count theorem, if any.
pub fn arc_count_precondition(w: &ToggleWord) -> Option<String> {
    if !w.is_partial_coxeter() {
        return Some("word repeats a toggle".into());
    }
    let missing: Vec<String> = short_arcs(w.n())
        .into_iter()
        .filter(|a| !w.contains(*a))
        .map(|a| a.to_string())
        .collect();
    (!missing.is_empty()).then(|| format!("word lacks toggles {}", missing.join(" ")))
}

/// Checks that `alpha` is `(n-1)/2`-mesic and `beta` is `(n+1)/2`-mesic.
/// Words outside the hypotheses are still evaluated and flagged.
pub fn verify_arc_count_theorem(w: &ToggleWord) -> Result<ArcCountReport> {
    verify_arc_count_theorem_with(w, DEFAULT_MAX_ENUMERATION_N, 1)
}

pub fn verify_arc_count_theorem_with(w: &ToggleWord, max_n: usize, threads: usize) -> Result<ArcCountReport> {
    let sys = ToggleSystem::partitions_with_limit(w.n(), max_n)?;
    let orbits = sys.orbits(&w.indices(), threads);
    let n = w.n() as i64;
    let unmet = arc_count_precondition(w);
    let mut alpha = report_on(&sys, &orbits, &Statistic::alpha(), w.to_paper_text())?;
    alpha.expected_mean = Some(Rational::new(n - 1, 2));
    alpha.precondition_unmet = unmet.clone();
    let mut beta = report_on(&sys, &orbits, &Statistic::beta(), w.to_paper_text())?;
    beta.expected_mean = Some(Rational::new(n + 1, 2));
    beta.precondition_unmet = unmet;
    Ok(ArcCountReport { alpha, beta })
}

/// Orbit sizes and the first odd-sized orbit, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvenOrbitsReport {
    pub sizes: Vec<usize>,
    pub all_even: bool,
    /// Index and size of an odd orbit.
    pub witness: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precondition_unmet: Option<String>,
}

/// Checks that every orbit of `w` has even size.
pub fn even_orbits_check(w: &ToggleWord) -> Result<EvenOrbitsReport> {
    let sys = ToggleSystem::partitions(w.n())?;
    let sizes: Vec<usize> = sys.orbits(&w.indices(), 1).iter().map(Vec::len).collect();
    let witness = sizes
        .iter()
        .enumerate()
        .find(|(_, &s)| s % 2 == 1)
        .map(|(k, &s)| (k, s));
    let mut unmet = arc_count_precondition(w);
    if w.n() % 2 == 1 {
        unmet.get_or_insert_with(|| format!("n = {} is odd", w.n()));
    }
    Ok(EvenOrbitsReport {
        all_even: witness.is_none(),
        sizes,
        witness,
        precondition_unmet: unmet,
    })
}

/// Result of comparing per-orbit arc-indicator sums before and after an
/// admissible conjugation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugationCheck {
    pub conjugate: String,
    pub orbit_count: usize,
    pub sizes_preserved: bool,
    pub chi_sums_preserved: bool,
    /// An orbit of `w` whose image is not an orbit of the conjugate or has
    /// different sums.
    pub counterexample: Option<usize>,
}

impl ConjugationCheck {
    pub fn preserved(&self) -> bool {
        self.sizes_preserved && self.chi_sums_preserved && self.counterexample.is_none()
    }
}

/// Conjugates `w` along an admissible sequence and checks that every orbit
/// `O` maps to the orbit `a^{-1} O` of the conjugate with the same size and
/// the same sum of every `chi_{i,j}`.
pub fn chi_sum_conjugation_check(w: &ToggleWord, seq: &[Arc]) -> Result<ConjugationCheck> {
    let conj = conjugate_by_sequence(w, seq)?;
    let n = w.n();
    let sys = ToggleSystem::partitions(n)?;
    let states = sys.space.states();
    let g = sys.space.graph();
    let before = sys.orbits(&w.indices(), 1);
    let after = sys.orbits(&conj.indices(), 1);
    let mut orbit_of = vec![0usize; states.len()];
    for (k, c) in after.iter().enumerate() {
        for &i in c {
            orbit_of[i as usize] = k;
        }
    }
    let shift: Vec<usize> = seq.iter().map(|&a| arc_index(n, a)).collect();
    let slots = crate::ncpartition::arc_slots(n);
    let chi_sums = |orbit: &mut dyn Iterator<Item = State>| {
        let mut sums = vec![0usize; slots];
        for s in orbit {
            for (v, sum) in sums.iter_mut().enumerate() {
                *sum += (s & bit(v) != 0) as usize;
            }
        }
        sums
    };
    let mut check = ConjugationCheck {
        conjugate: conj.to_paper_text(),
        orbit_count: before.len(),
        sizes_preserved: before.len() == after.len(),
        chi_sums_preserved: true,
        counterexample: None,
    };
    for (k, c) in before.iter().enumerate() {
        let image: Vec<State> = c.iter().map(|&i| g.apply(states[i as usize], &shift)).collect();
        let target = orbit_of[sys.space.index_of(image[0]).expect("state")];
        let same_orbit = image
            .iter()
            .all(|&s| orbit_of[sys.space.index_of(s).expect("state")] == target);
        let target_states = &after[target];
        if !same_orbit || target_states.len() != c.len() {
            check.sizes_preserved = false;
            check.counterexample.get_or_insert(k);
            continue;
        }
        let lhs = chi_sums(&mut c.iter().map(|&i| states[i as usize]));
        let rhs = chi_sums(&mut target_states.iter().map(|&i| states[i as usize]));
        if lhs != rhs {
            check.chi_sums_preserved = false;
            check.counterexample.get_or_insert(k);
        }
    }
    Ok(check)
}

/// Seeded sample of partial Coxeter words on `[n]` that contain every
/// `tau_{i,i+1}`.
pub fn sample_qualifying_words(n: usize, count: usize, seed: u64) -> Vec<ToggleWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let required = short_arcs(n);
    (0..count)
        .map(|_| random_partial_coxeter(n, &required, &mut rng))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{column_word, row_word};

    fn arc(i: usize, j: usize) -> Arc {
        Arc::new(i, j)
    }

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    fn four_toggle_word() -> ToggleWord {
        ToggleWord::parse_paper(4, "3,4 1,2 2,3 1,4").unwrap()
    }

    fn cox6() -> ToggleWord {
        ToggleWord::parse_paper(6, "4,6 3,6 2,4 1,5 2,5 1,3 3,4 1,2 1,6 2,6 3,5 2,3 1,4 5,6 4,5").unwrap()
    }

    #[test]
    fn four_toggle_word_orbits() {
        let os = orbits(&four_toggle_word()).unwrap();
        assert_eq!(os.len(), 5);
        let mut sizes: Vec<usize> = os.iter().map(Orbit::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 2, 2, 6]);
        let w = four_toggle_word();
        for o in &os {
            assert_eq!(orbit_average(&Statistic::alpha(), o).unwrap(), r(3, 2));
            assert_eq!(orbit_average(&Statistic::beta(), o).unwrap(), r(5, 2));
            // cyclic order and canonical rotation
            for (k, p) in o.elements.iter().enumerate() {
                let next = &o.elements[(k + 1) % o.len()];
                assert_eq!(&crate::words::apply_word(&w, p).unwrap(), next);
                assert!(o.elements[0] <= *p);
            }
        }
    }

    #[test]
    fn four_toggle_word_two_cycles_are_involutive() {
        let w = four_toggle_word();
        for o in orbits(&w).unwrap().iter().filter(|o| o.len() == 2) {
            let p = &o.elements[0];
            let twice = crate::words::apply_word(&w, &crate::words::apply_word(&w, p).unwrap()).unwrap();
            assert_eq!(&twice, p);
        }
    }

    #[test]
    fn coxeter_six_orbit_sizes() {
        let w = cox6();
        assert!(w.is_coxeter());
        let mut sizes: Vec<usize> = orbits(&w).unwrap().iter().map(Orbit::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![4, 22, 46, 60]);
        let even = even_orbits_check(&w).unwrap();
        assert!(even.all_even && even.precondition_unmet.is_none());
    }

    #[test]
    fn psi_examples() {
        let p = NCPartition::new(4, [arc(2, 3)]).unwrap();
        assert_eq!(psi(&p, 2), 2);
        let p = NCPartition::new(4, [arc(1, 3)]).unwrap();
        assert_eq!(psi(&p, 2), 1);
        let p = NCPartition::empty(4).unwrap();
        assert_eq!(psi(&p, 2), 0);
        assert_eq!(eval(&Statistic::psi(2), &p).unwrap(), r(0, 1));
        assert!(eval(&Statistic::psi(4), &p).is_err());
    }

    #[test]
    fn alpha_is_half_the_psi_sum_pointwise() {
        for n in 1..=7 {
            for p in crate::ncpartition::enumerate_nc(n).unwrap() {
                let s: i64 = (1..n).map(|k| psi(&p, k)).sum();
                assert_eq!(2 * p.arc_count() as i64, s);
                for k in 1..n {
                    assert!((0..=2).contains(&psi(&p, k)));
                }
            }
        }
    }

    #[test]
    fn smallest_orbit() {
        let w = ToggleWord::parse_paper(2, "1,2").unwrap();
        let os = orbits(&w).unwrap();
        assert_eq!(os.len(), 1);
        assert_eq!(orbit_average(&Statistic::alpha(), &os[0]).unwrap(), r(1, 2));
        let even = even_orbits_check(&w).unwrap();
        assert_eq!(even.sizes, vec![2]);
    }

    #[test]
    fn homomesy_verdicts() {
        let rep = check_homomesy(&four_toggle_word(), &Statistic::alpha()).unwrap();
        assert_eq!(rep.verdict, Verdict::Homomesic { mean: r(3, 2) });
        assert_eq!(rep.status(), Status::Holds);

        let w = ToggleWord::parse_paper(3, "1,3 2,3 1,2").unwrap();
        let rep = check_homomesy(&w, &Statistic::chi(arc(1, 3))).unwrap();
        assert_eq!(rep.orbit_count, 2);
        match &rep.verdict {
            Verdict::NotHomomesic { orbits, averages } => {
                assert_eq!(orbits, &[0, 1]);
                assert!(averages.contains(&r(0, 1)));
            }
            v => panic!("unexpected {v:?}"),
        }

        for k in 1..4 {
            let rep = check_homomesy(&four_toggle_word(), &Statistic::psi(k)).unwrap();
            assert_eq!(rep.verdict.mean(), Some(r(1, 1)));
        }
    }

    #[test]
    fn arc_count_theorem_and_preconditions() {
        let rep = verify_arc_count_theorem(&four_toggle_word()).unwrap();
        assert_eq!(rep.status(), Status::Holds);
        for w in [row_word(7), column_word(7)] {
            let rep = verify_arc_count_theorem(&w).unwrap();
            assert_eq!(rep.alpha.verdict.mean(), Some(r(3, 1)));
            assert_eq!(rep.status(), Status::Holds);
        }
        let w = ToggleWord::parse_paper(3, "2,3 1,3").unwrap();
        let rep = verify_arc_count_theorem(&w).unwrap();
        assert_eq!(rep.status(), Status::PreconditionUnmet);
        assert!(rep.alpha.precondition_unmet.as_deref().unwrap().contains("(1,2)"));
    }

    #[test]
    fn statistic_parsing_and_display() {
        let s: Statistic = "alpha".parse().unwrap();
        assert_eq!(s, Statistic::alpha());
        let s: Statistic = "chi:1,3".parse().unwrap();
        assert_eq!(s, Statistic::chi(arc(1, 3)));
        let s: Statistic = "1/2*psi:1 + psi:2 - 2*beta".parse().unwrap();
        assert_eq!(s.to_string(), "1/2*psi:1 + psi:2 - 2*beta");
        assert!("gamma".parse::<Statistic>().is_err());
        assert!("x*alpha".parse::<Statistic>().is_err());
        let g = Statistic::parse("psi:a + chi:b", true).unwrap();
        assert_eq!(g.terms()[0].1, Term::PsiVertex("a".into()));
    }

    #[test]
    fn linear_combinations_evaluate_linearly() {
        let w = four_toggle_word();
        let s: Statistic = "alpha + beta".parse().unwrap();
        let rep = check_homomesy(&w, &s).unwrap();
        assert_eq!(rep.verdict.mean(), Some(r(4, 1)));
        let s: Statistic = "1/2*psi:1 + 1/2*psi:2 + 1/2*psi:3 - alpha".parse().unwrap();
        let rep = check_homomesy(&w, &s).unwrap();
        assert!(rep.orbits.iter().all(|o| o.average == r(0, 1)));
    }

    #[test]
    fn conjugation_examples() {
        let col = column_word(3);
        assert!(chi_sum_conjugation_check(&col, &[arc(1, 2)]).unwrap().preserved());
        assert!(chi_sum_conjugation_check(&col, &[]).unwrap().preserved());
        let w = column_word(4);
        let seq = [arc(1, 2), arc(1, 3), arc(2, 3)];
        assert!(chi_sum_conjugation_check(&w, &seq).unwrap().preserved());
        assert!(chi_sum_conjugation_check(&col, &[arc(2, 3)]).is_err());
    }

    #[test]
    fn report_serialization() {
        let rep = check_homomesy(&four_toggle_word(), &Statistic::alpha()).unwrap();
        let j = serde_json::to_value(&rep).unwrap();
        assert_eq!(j["orbits"][0]["average"], "3/2");
        assert_eq!(j["verdict"]["kind"], "homomesic");
        assert_eq!(j["verdict"]["mean"], "3/2");
        assert_eq!(j["word"], "3,4 1,2 2,3 1,4");
        let table = rep.to_table();
        assert!(table.contains("verdict:   3/2-mesic"));
    }

    #[test]
    fn sampling_is_seeded() {
        let a = sample_qualifying_words(6, 5, 42);
        let b = sample_qualifying_words(6, 5, 42);
        assert_eq!(a, b);
        assert!(a.iter().all(|w| w.is_partial_coxeter() && w.contains_all_short_arcs()));
        assert_ne!(a, sample_qualifying_words(6, 5, 43));
    }
}
