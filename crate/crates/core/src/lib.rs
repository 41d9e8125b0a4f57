//! Exact combinatorics for edge ideals of graphs and linear-quotients orderings.
//!
//! The crate builds monomial ideals from graphs, decides whether an ordered
//! generator list is a linear-quotients ordering (producing a machine-checkable
//! certificate or a refutation), constructs the two explicit orderings for
//! antipath powers and anticycle squares, and searches for orderings on small
//! instances where no explicit construction is known.
//!
//! Everything is exact integer arithmetic on exponent vectors; there are no
//! coefficients and no floating point anywhere.

pub mod error;
pub mod graph;
pub mod ideal;
pub mod lq;
pub mod monomial;
pub mod orderings;
pub mod search;

pub use error::Error;
pub use graph::{AnticycleLabeling, Role, SimpleGraph};
pub use ideal::MonomialIdeal;
pub use lq::{BettiTable, LqCertificate, LqFailure, LqOutcome, PairViolation};
pub use monomial::{Monomial, Ring, VarPriority};
pub use orderings::StageTag;
pub use search::{SearchOptions, SearchOutcome, SearchStats, SearchStatus};
