use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Toggle dynamics and homomesy experiments on noncrossing partitions and
/// independent sets.
///
/// Exit status: 0 when the checked property holds, 1 when it is falsified,
/// 2 when a precondition is unmet, 3 on usage or parse errors.
#[derive(Debug, Parser)]
#[command(name = "nctoggle", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for every random choice; echoed in the output.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads for orbit discovery.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,

    /// Largest n (or graph size, scaled) allowed for exhaustive enumeration.
    #[arg(long, global = true, env = "NCTOGGLE_MAX_N", default_value_t = nctoggle::ncpartition::DEFAULT_MAX_ENUMERATION_N)]
    pub ceiling: usize,

    /// How to read toggle words: product notation (rightmost acts first)
    /// or evaluation order (leftmost acts first).
    #[arg(long, global = true, value_enum, default_value_t = WordOrder::Paper)]
    pub order: WordOrder,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WordOrder {
    Paper,
    Evaluation,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List NC(n) in canonical order.
    Enumerate {
        n: usize,
        /// Print only the number of partitions.
        #[arg(long)]
        count_only: bool,
    },
    /// Apply a toggle or a word to one partition.
    Toggle {
        n: usize,
        /// Arcs such as "(1,3) (3,4)" or blocks such as "{1,3,4}{2}".
        #[arg(long, short)]
        partition: String,
        /// A single arc `i,j` to toggle.
        #[arg(long, conflicts_with_all = ["word", "word_file"])]
        arc: Option<String>,
        #[command(flatten)]
        word: WordInput,
        /// Number of times to apply.
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
    /// Orbits of a toggle word on NC(n).
    Orbits {
        n: usize,
        #[command(flatten)]
        word: WordInput,
        /// Print the multiset of orbit sizes only.
        #[arg(long)]
        sizes_only: bool,
    },
    /// Per-orbit averages of a statistic and a homomesy verdict.
    Homomesy {
        n: usize,
        #[command(flatten)]
        word: WordInput,
        /// Statistic, e.g. `alpha`, `beta`, `chi:1,3`, `psi:2`,
        /// `1/2*psi:1 + psi:2`.
        #[arg(long, default_value = "alpha")]
        stat: String,
        /// Mean the statistic is expected to take on every orbit.
        #[arg(long)]
        expect: Option<String>,
        /// Check the arc-count theorem: alpha and beta against (n-1)/2 and
        /// (n+1)/2, with the word's hypotheses.
        #[arg(long, conflicts_with_all = ["stat", "expect"])]
        arc_count: bool,
    },
    /// Kreweras complement and related maps.
    Kreweras {
        n: usize,
        #[arg(long, short)]
        partition: String,
        /// The relabelled complement, i -> i+1 (mod n).
        #[arg(long, group = "map")]
        prime: bool,
        /// eta after kappa.
        #[arg(long, group = "map")]
        simion_ullman: bool,
        /// Apply kappa this many times (negative for the inverse).
        #[arg(long, group = "map", allow_hyphen_values = true)]
        power: Option<i64>,
        /// Compute kappa from the definition instead of the toggle word.
        #[arg(long)]
        oracle: bool,
        /// Emit Graphviz instead of text.
        #[arg(long)]
        dot: bool,
    },
    /// Independent sets of graphs, 2-cliquish structure, multigraphs.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Run the full verification suite.
    VerifyAll {
        /// Clip every n range to this value.
        #[arg(long)]
        max_n: Option<usize>,
        /// Random words sampled per n.
        #[arg(long, default_value_t = 100)]
        words: usize,
        /// Run only these checks (1-14).
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Debug, Args)]
pub struct WordInput {
    /// Whitespace-separated arcs, e.g. "3,4 1,2 2,3 1,4".
    #[arg(long, short)]
    pub word: Option<String>,
    /// File holding a word as text (comments with `#`) or JSON
    /// `{"n":..,"paper_order":[[i,j],..]}`.
    #[arg(long, conflicts_with = "word")]
    pub word_file: Option<PathBuf>,
    /// Use a named word: row, column, kreweras, kreweras-inverse.
    #[arg(long, conflicts_with_all = ["word", "word_file"])]
    pub named: Option<NamedWord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NamedWord {
    Row,
    Column,
    Kreweras,
    KrewerasInverse,
}

#[derive(Debug, Subcommand)]
pub enum GraphCommand {
    /// Search for (or check a pinned) independent set U making the graph
    /// 2-cliquish.
    CheckCliquish {
        file: PathBuf,
        /// Ignore a pinned U and search all maximal independent sets.
        #[arg(long)]
        search: bool,
    },
    /// List the independent sets.
    IndependentSets {
        file: PathBuf,
        #[arg(long)]
        count_only: bool,
    },
    /// Remove every removable edge.
    Skeletalize { file: PathBuf },
    /// Skeletal graph to multigraph on U.
    ToMultigraph { file: PathBuf },
    /// Multigraph to skeletal graph.
    FromMultigraph { file: PathBuf },
    /// Every 2-cliquish graph with a given skeleton.
    Gen {
        #[arg(long)]
        from_skeletal: PathBuf,
        /// Print every labelled graph rather than one per isomorphism class.
        #[arg(long)]
        labelled: bool,
    },
    /// Orbit averages of a statistic under a vertex word.
    Homomesy {
        file: PathBuf,
        /// Vertex labels in product order; defaults to a seeded random
        /// Coxeter word.
        #[arg(long, short)]
        word: Option<String>,
        /// `card`, `chi:v`, `psi:v`, or a combination.
        #[arg(long, default_value = "card")]
        stat: String,
    },
}
