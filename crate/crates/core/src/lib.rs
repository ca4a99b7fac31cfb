//! Toggle dynamics on noncrossing partitions and on independent sets of
//! graphs, with exact homomesy checks.
//!
//! A noncrossing partition of `[n]` is stored as its set of arcs: `(i, j)`
//! joins successive elements of a block. Two arcs can coexist exactly when
//! their toggles commute, so `NC(n)` is the family of independent sets of a
//! graph on arcs, and every computation here runs on one engine
//! ([`space`]) that toggles bits of independent sets.
//!
//! ```
//! use nctoggle::{dynamics, words::ToggleWord};
//!
//! // tau_{3,4} tau_{1,2} tau_{2,3} tau_{1,4}, rightmost factor first.
//! let w = ToggleWord::parse_paper(4, "3,4 1,2 2,3 1,4").unwrap();
//! let report = dynamics::verify_arc_count_theorem(&w).unwrap();
//! assert_eq!(report.alpha.verdict.mean().unwrap().to_string(), "3/2");
//! assert_eq!(report.alpha.orbit_count, 5);
//! ```

pub mod dynamics;
pub mod error;
pub mod indsets;
pub mod kreweras;
pub mod ncpartition;
pub mod space;
pub mod toggles;
pub mod verify;
pub mod words;

pub use dynamics::{HomomesyReport, Rational, Statistic, Status, ToggleSystem};
pub use error::{Error, Result};
pub use indsets::{Multigraph, SimpleGraph};
pub use ncpartition::{Arc, BlockPartition, NCPartition};
pub use words::ToggleWord;

/// The guide's chapters, compiled as doc-tests so their examples stay
/// current.
#[cfg(doctest)]
pub mod guide {
    #[doc = include_str!("../../../book/src/intro.md")]
    pub mod intro {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    pub mod partitions {}
    #[doc = include_str!("../../../book/src/toggles.md")]
    pub mod toggles {}
    #[doc = include_str!("../../../book/src/words.md")]
    pub mod words {}
    #[doc = include_str!("../../../book/src/homomesy.md")]
    pub mod homomesy {}
    #[doc = include_str!("../../../book/src/kreweras.md")]
    pub mod kreweras {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    pub mod graphs {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
    #[doc = include_str!("../../../README.md")]
    pub mod readme {}
}
