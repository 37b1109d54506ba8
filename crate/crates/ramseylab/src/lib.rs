//! Graph Ramsey toolbox: pattern families, witness edge-colorings, exact
//! arrowing search with certificates, and balance analytics for
//! vertex-deletion gaps.

pub mod balance;
pub mod coloring;
pub mod graph;
pub mod pattern;
pub mod search;

/// Re-exported so downstream code can name the rational types that appear
/// in public signatures.
pub use num;

pub use balance::{
    balance_report, balanced_trace, chase_trace, es_clique_order, reverse_jensen_bound,
    BalanceError, BalanceReport, BalancedTrace, ChaseTrace,
};
pub use coloring::{
    find_mono_copy, find_mono_copy_in_family, first_mono_copy, pentagon_coloring,
    product_coloring, random_coloring, turan_coloring, verify_free, verify_free_in_family,
    ColoringError, EdgeColoring, FreeTranscript, MonoCopy, RcolParseError,
};
pub use graph::{
    find_subgraph, greedy_embed, DegeneracyOrder, EmbedError, Embedding, Graph, GraphError,
    GraphParseError, LimitExceeded, VertexSet, DEFAULT_CHROMATIC_LIMIT, DEFAULT_CLIQUE_LIMIT,
};
pub use pattern::{PatternError, PatternSpec};
pub use search::{
    arrows, expected_mono_copies, ramsey_number, random_lb_witness, ArrowsOutcome,
    ExpectedCopyBound, RamseyCertificate, SearchError, SearchLimits, DEFAULT_ATTEMPTS,
    DEFAULT_MAX_N,
};
