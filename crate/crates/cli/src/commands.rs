use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use nctoggle::dynamics::{self, check_homomesy_with, Statistic, Status, ToggleSystem};
use nctoggle::indsets::{
    self, certify, check_graph_homomesy, enumerate_2cliquish_from_skeletal, enumerate_independent_sets_with_limit,
    is_2_cliquish, multigraph_to_skeletal, random_coxeter_vertex_word, skeletal_to_multigraph, skeletalize,
    verify_cardinality_homomesy, CliquishCertificate, Multigraph, SimpleGraph, VertexWord,
};
use nctoggle::kreweras::{kreweras, kreweras_oracle, kreweras_power, kreweras_prime, simion_ullman, CircularPartition};
use nctoggle::ncpartition::{enumerate_nc_with_limit, NCPartition};
use nctoggle::verify::{run_all, run_one, Limits};
use nctoggle::words::{apply_word, column_word, kreweras_inverse_word, kreweras_word, row_word, ToggleWord};
use nctoggle::{Error, Rational, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::args::{Cli, Command, GraphCommand, NamedWord, WordInput, WordOrder};

/// What a command produced: a text rendering, a JSON result, and the exit
/// status.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub code: i32,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, code: 0 }
    }

    fn with_status(mut self, status: Status) -> Self {
        self.code = exit_code(status);
        self
    }
}

pub fn exit_code(status: Status) -> i32 {
    match status {
        Status::Holds => 0,
        Status::Falsified => 1,
        Status::PreconditionUnmet => 2,
    }
}

/// Exit status for a library error: unmet mathematical preconditions are
/// 2, everything else (parsing, ceilings, bad input) is 3.
pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::Precondition(_)
        | Error::NotTwoCliquish(_)
        | Error::NotSkeletal(..)
        | Error::NotPartialCoxeter(_)
        | Error::NotSource(_)
        | Error::NonUniqueComplement(_) => 2,
        _ => 3,
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Enumerate { n, count_only } => enumerate(cli, *n, *count_only),
        Command::Toggle {
            n,
            partition,
            arc,
            word,
            times,
        } => toggle(cli, *n, partition, arc.as_deref(), word, *times),
        Command::Orbits { n, word, sizes_only } => orbits(cli, *n, word, *sizes_only),
        Command::Homomesy {
            n,
            word,
            stat,
            expect,
            arc_count,
        } => homomesy(cli, *n, word, stat, expect.as_deref(), *arc_count),
        Command::Kreweras {
            n,
            partition,
            prime,
            simion_ullman,
            power,
            oracle,
            dot,
        } => kreweras_cmd(*n, partition, *prime, *simion_ullman, *power, *oracle, *dot),
        Command::Graph(g) => graph(cli, g),
        Command::VerifyAll { max_n, words, only } => verify_all(cli, *max_n, *words, only),
    }
}

fn parse_partition(n: usize, s: &str) -> Result<NCPartition> {
    NCPartition::parse_text(&format!("{n}; {s}"))
}

fn arcs_text(p: &NCPartition) -> String {
    let arcs: Vec<String> = p.arcs().map(|a| a.to_string()).collect();
    if arcs.is_empty() {
        "-".into()
    } else {
        arcs.join(" ")
    }
}

fn partition_json(p: &NCPartition) -> Value {
    json!({ "arcs": p.arc_vec(), "blocks": p.to_blocks().to_text() })
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse {
        token: path.display().to_string(),
        position: 0,
        message: e.to_string(),
    })
}

fn parse_word(cli: &Cli, n: usize, text: &str) -> Result<ToggleWord> {
    let w = ToggleWord::parse_paper(n, text)?;
    Ok(match cli.order {
        WordOrder::Paper => w,
        WordOrder::Evaluation => ToggleWord::from_evaluation_order(n, w.paper_order())?,
    })
}

fn load_word(cli: &Cli, n: usize, input: &WordInput) -> Result<ToggleWord> {
    if let Some(named) = input.named {
        return Ok(match named {
            NamedWord::Row => row_word(n),
            NamedWord::Column => column_word(n),
            NamedWord::Kreweras => kreweras_word(n),
            NamedWord::KrewerasInverse => kreweras_inverse_word(n),
        });
    }
    if let Some(w) = &input.word {
        return parse_word(cli, n, w);
    }
    if let Some(path) = &input.word_file {
        let body = read(path)?;
        if body.trim_start().starts_with('{') {
            let v: Value = serde_json::from_str(&body).map_err(|e| Error::Parse {
                token: path.display().to_string(),
                position: e.line(),
                message: e.to_string(),
            })?;
            let w = ToggleWord::from_json(&v)?;
            if w.n() != n {
                return Err(Error::MismatchedN { left: n, right: w.n() });
            }
            return Ok(w);
        }
        let text: Vec<&str> = body.lines().map(|l| l.split('#').next().unwrap_or("")).collect();
        return parse_word(cli, n, &text.join(" "));
    }
    Err(Error::Parse {
        token: String::new(),
        position: 0,
        message: "give a word with --word, --word-file or --named".into(),
    })
}

fn word_json(w: &ToggleWord) -> Value {
    json!({ "paper_order": w.to_paper_text(), "length": w.len(), "coxeter": w.is_coxeter(), "partial_coxeter": w.is_partial_coxeter() })
}

fn enumerate(cli: &Cli, n: usize, count_only: bool) -> Result<Outcome> {
    let parts = enumerate_nc_with_limit(n, cli.ceiling)?;
    let count = parts.len();
    if count_only {
        return Ok(Outcome::ok(format!("{count}\n"), json!({ "n": n, "count": count })));
    }
    let mut text = String::new();
    for p in &parts {
        writeln!(text, "{}\t{}", p.to_blocks().to_text(), arcs_text(p)).unwrap();
    }
    let list: Vec<Value> = parts.iter().map(partition_json).collect();
    Ok(Outcome::ok(text, json!({ "n": n, "count": count, "partitions": list })))
}

fn toggle(cli: &Cli, n: usize, partition: &str, arc: Option<&str>, input: &WordInput, times: usize) -> Result<Outcome> {
    let p = parse_partition(n, partition)?;
    let w = match arc {
        Some(a) => parse_word(cli, n, a)?,
        None => load_word(cli, n, input)?,
    };
    let mut q = p.clone();
    for _ in 0..times {
        q = apply_word(&w, &q)?;
    }
    Ok(Outcome::ok(
        format!("{}\n", arcs_text(&q)),
        json!({ "n": n, "input": partition_json(&p), "word": word_json(&w), "times": times, "output": partition_json(&q) }),
    ))
}

fn orbits(cli: &Cli, n: usize, input: &WordInput, sizes_only: bool) -> Result<Outcome> {
    let w = load_word(cli, n, input)?;
    let sys = ToggleSystem::partitions_with_limit(n, cli.ceiling)?;
    let cycles = sys.orbits(&w.indices(), cli.threads);
    let mut sizes: Vec<usize> = cycles.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    let sizes_text = sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ");
    let mut json = json!({ "n": n, "word": word_json(&w), "orbit_count": cycles.len(), "sizes": sizes });
    if sizes_only {
        return Ok(Outcome::ok(format!("{sizes_text}\n"), json));
    }
    let states = sys.space().states();
    let mut text = format!(
        "word: {}\norbits: {}\nsizes: {sizes_text}\n",
        w.to_paper_text(),
        cycles.len()
    );
    let mut list = Vec::new();
    for (k, c) in cycles.iter().enumerate() {
        let parts: Vec<NCPartition> = c
            .iter()
            .map(|&i| NCPartition::from_state(n, states[i as usize]))
            .collect();
        let shown: Vec<String> = parts.iter().map(|p| format!("[{}]", arcs_text(p))).collect();
        writeln!(text, "orbit {k} (size {}): {}", c.len(), shown.join(" -> ")).unwrap();
        list.push(json!({ "size": c.len(), "elements": parts.iter().map(|p| p.arc_vec()).collect::<Vec<_>>() }));
    }
    json["orbits"] = Value::Array(list);
    Ok(Outcome::ok(text, json))
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse {
        token: s.to_string(),
        position: 0,
        message: "expected an integer or p/q".into(),
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

fn homomesy(
    cli: &Cli,
    n: usize,
    input: &WordInput,
    stat: &str,
    expect: Option<&str>,
    arc_count: bool,
) -> Result<Outcome> {
    let w = load_word(cli, n, input)?;
    if arc_count {
        let rep = dynamics::verify_arc_count_theorem_with(&w, cli.ceiling, cli.threads)?;
        let mut text = rep.alpha.to_table();
        text.push('\n');
        text.push_str(&rep.beta.to_table());
        let json = serde_json::to_value(&rep).expect("report serializes");
        return Ok(Outcome::ok(text, json).with_status(rep.status()));
    }
    let stat: Statistic = Statistic::parse(stat, false)?;
    let mut rep = check_homomesy_with(&w, &stat, cli.ceiling, cli.threads)?;
    if let Some(e) = expect {
        rep.expected_mean = Some(parse_rational(e)?);
    }
    let json = serde_json::to_value(&rep).expect("report serializes");
    Ok(Outcome::ok(rep.to_table(), json).with_status(rep.status()))
}

fn kreweras_cmd(
    n: usize,
    partition: &str,
    prime: bool,
    su: bool,
    power: Option<i64>,
    oracle: bool,
    dot: bool,
) -> Result<Outcome> {
    let p = parse_partition(n, partition)?;
    let (map, q) = if prime {
        ("kreweras_prime", kreweras_prime(&p))
    } else if su {
        ("simion_ullman", simion_ullman(&p))
    } else if let Some(k) = power {
        ("kreweras_power", kreweras_power(&p, k))
    } else if oracle {
        ("kreweras_oracle", kreweras_oracle(&p)?)
    } else {
        ("kreweras", kreweras(&p))
    };
    let circ = CircularPartition::new(q.clone());
    let text = if dot {
        circ.to_dot()
    } else {
        format!(
            "{}\nblocks: {}\ncircle: {}\n",
            arcs_text(&q),
            q.to_blocks().to_text(),
            circ.to_text()
        )
    };
    Ok(Outcome::ok(
        text,
        json!({ "n": n, "map": map, "power": power, "input": partition_json(&p), "output": partition_json(&q), "circle": circ.to_text() }),
    ))
}

fn load_graph(path: &Path) -> Result<SimpleGraph> {
    SimpleGraph::parse(&read(path)?)
}

/// The graph with `U` pinned: the file's own `independent:` line if
/// present, otherwise the first maximal independent set that works.
fn with_u(g: SimpleGraph) -> Result<(SimpleGraph, CliquishCertificate)> {
    if let Some(u) = g.pinned() {
        let cert = certify(&g, u)?;
        return Ok((g, cert));
    }
    match is_2_cliquish(&g)? {
        Some(cert) => Ok((g.with_pinned(cert.u), cert)),
        None => Err(Error::NotTwoCliquish(
            "no maximal independent set satisfies the conditions".into(),
        )),
    }
}

fn graph(cli: &Cli, cmd: &GraphCommand) -> Result<Outcome> {
    match cmd {
        GraphCommand::CheckCliquish { file, search } => {
            let g = load_graph(file)?;
            let found: Option<std::result::Result<CliquishCertificate, String>> = match g.pinned() {
                Some(u) if !search => match certify(&g, u) {
                    Ok(c) => Some(Ok(c)),
                    Err(Error::NotTwoCliquish(m)) => Some(Err(m)),
                    Err(e) => return Err(e),
                },
                _ => is_2_cliquish(&g)?.map(Ok),
            };
            Ok(match found {
                Some(Ok(cert)) => {
                    let mut text = format!(
                        "2-cliquish with U = {{{}}} (A = {})\n",
                        cert.u_labels.join(", "),
                        cert.size()
                    );
                    for (v, [a, b]) in &cert.anchors {
                        writeln!(text, "  {v}: {a} {b}").unwrap();
                    }
                    Outcome::ok(text, json!({ "cliquish": true, "certificate": cert, "A": cert.size() }))
                }
                Some(Err(reason)) => Outcome {
                    text: format!("not 2-cliquish with the pinned U: {reason}\n"),
                    json: json!({ "cliquish": false, "reason": reason }),
                    code: 1,
                },
                None => Outcome {
                    text: "not 2-cliquish: no maximal independent set satisfies the conditions\n".into(),
                    json: json!({ "cliquish": false }),
                    code: 1,
                },
            })
        }
        GraphCommand::IndependentSets { file, count_only } => {
            let g = load_graph(file)?;
            let sets = enumerate_independent_sets_with_limit(&g, graph_ceiling(cli))?;
            let listed: Vec<String> = sets.iter().map(|w| w.to_text(&g)).collect();
            let text = if *count_only {
                format!("{}\n", sets.len())
            } else {
                listed.iter().map(|s| format!("{s}\n")).collect()
            };
            let mut json = json!({ "count": sets.len() });
            if !count_only {
                json["sets"] = json!(listed);
            }
            Ok(Outcome::ok(text, json))
        }
        GraphCommand::Skeletalize { file } => {
            let (g, _) = with_u(load_graph(file)?)?;
            let s = skeletalize(&g)?;
            let removed = g.edge_count() - s.edge_count();
            Ok(Outcome::ok(
                s.to_text(),
                json!({ "graph": s.to_json(), "removed_edges": removed }),
            ))
        }
        GraphCommand::ToMultigraph { file } => {
            let (g, _) = with_u(load_graph(file)?)?;
            let m = skeletal_to_multigraph(&g)?;
            let text = format!(
                "{}# {} vertices, {} edges, |V|+|E| = {}\n",
                m.to_text(),
                m.vertex_count(),
                m.edge_count(),
                m.vertex_count() + m.edge_count()
            );
            Ok(Outcome::ok(text, json!({ "multigraph": m.to_json() })))
        }
        GraphCommand::FromMultigraph { file } => {
            let m = Multigraph::parse(&read(file)?)?;
            let g = multigraph_to_skeletal(&m)?;
            Ok(Outcome::ok(
                g.to_text(),
                json!({ "graph": g.to_json(), "vertices": g.len() }),
            ))
        }
        GraphCommand::Gen {
            from_skeletal,
            labelled,
        } => {
            let (g, _) = with_u(load_graph(from_skeletal)?)?;
            let aug = enumerate_2cliquish_from_skeletal(&g)?;
            let shown = if *labelled { &aug.labelled } else { &aug.unlabelled };
            let mut text = format!(
                "# {} labelled, {} up to isomorphism\n",
                aug.labelled.len(),
                aug.unlabelled.len()
            );
            for (k, h) in shown.iter().enumerate() {
                writeln!(text, "\n# graph {k}").unwrap();
                text.push_str(&h.to_text());
            }
            Ok(Outcome::ok(
                text,
                json!({
                    "addable": aug.addable,
                    "labelled": aug.labelled.len(),
                    "unlabelled": aug.unlabelled.len(),
                    "graphs": shown.iter().map(SimpleGraph::to_json).collect::<Vec<_>>(),
                }),
            ))
        }
        GraphCommand::Homomesy { file, word, stat } => {
            let g = load_graph(file)?;
            let w = match word {
                Some(s) => VertexWord::parse_paper(&g, s)?,
                None => random_coxeter_vertex_word(&g, &mut ChaCha8Rng::seed_from_u64(cli.seed)),
            };
            let limit = graph_ceiling(cli);
            let rep = if stat.trim() == "card" {
                match with_u(g.clone()) {
                    Ok((g, cert)) => verify_cardinality_homomesy(&g, &cert, &w, limit, cli.threads)?,
                    Err(Error::NotTwoCliquish(_)) => {
                        check_graph_homomesy(&g, &w, &Statistic::card(), limit, cli.threads)?
                    }
                    Err(e) => return Err(e),
                }
            } else {
                let s = Statistic::parse(stat, true)?;
                check_graph_homomesy(&g, &w, &s, limit, cli.threads)?
            };
            let json = serde_json::to_value(&rep).expect("report serializes");
            Ok(Outcome::ok(rep.to_table(), json).with_status(rep.status()))
        }
    }
}

/// Graphs get the default vertex ceiling unless the partition ceiling was
/// raised above its default.
fn graph_ceiling(cli: &Cli) -> usize {
    let base = indsets::DEFAULT_MAX_GRAPH_VERTICES;
    let default_n = nctoggle::ncpartition::DEFAULT_MAX_ENUMERATION_N;
    if cli.ceiling > default_n {
        base.max(cli.ceiling)
    } else {
        base
    }
}

fn verify_all(cli: &Cli, max_n: Option<usize>, words: usize, only: &[u8]) -> Result<Outcome> {
    let lim = Limits {
        max_n: max_n.unwrap_or(usize::MAX),
        seed: cli.seed,
        words_per_n: words,
        threads: cli.threads,
    };
    let checks = if only.is_empty() {
        run_all(&lim)
    } else {
        let mut v = Vec::new();
        for &id in only {
            v.push(run_one(id, &lim).ok_or_else(|| Error::Parse {
                token: id.to_string(),
                position: 0,
                message: "checks are numbered 1-14".into(),
            })?);
        }
        v
    };
    let passed = checks.iter().filter(|c| c.passed).count();
    let mut text: String = checks.iter().map(|c| c.line() + "\n").collect();
    writeln!(text, "{passed}/{} passed", checks.len()).unwrap();
    // Timings vary run to run; keep them out of the JSON so it stays
    // reproducible.
    let list: Vec<Value> = checks
        .iter()
        .map(|c| json!({ "id": c.id, "name": c.name, "passed": c.passed, "detail": c.detail }))
        .collect();
    let code = if passed == checks.len() { 0 } else { 1 };
    Ok(Outcome {
        text,
        json: json!({ "checks": list, "passed": passed, "total": checks.len() }),
        code,
    })
}
