//! Enumeration of maximal k-plexes in undirected graphs.
//!
//! A k-plex relaxes the clique requirement: every member may miss up to
//! `k - 1` of the other members (equivalently, counting itself, each member
//! has at most `k` non-neighbors inside the set). This crate lists all
//! maximal k-plexes of a graph, or all maximal k-plexes with at least `l`
//! vertices when a size floor `l >= 2k - 1` is given, which is the regime
//! where community-like plexes live and where the search scales to graphs
//! with millions of edges.
//!
//! The pipeline: a degeneracy ordering decomposes the graph into one small
//! seed subgraph per vertex (its later neighbors plus later two-hop
//! vertices), seed subgraphs are pruned with size-floor counting rules, and
//! a pivoted set-enumeration search lists the plexes of each seed subgraph.
//! Seed subgraphs are independent, so they parallelize across a work-stealing
//! pool. Plexes too small for the decomposition's structural guarantees
//! (fewer than `2k - 1` vertices) come from a separate bounded pass.
//!
//! ```
//! use kplex::graph::Graph;
//! use kplex::scheduler::{run, RunConfig};
//! use kplex::sink::VecSink;
//!
//! // Two triangles sharing an edge.
//! let g = Graph::from_edges([(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)]);
//! let sink = VecSink::new();
//! let summary = run(&g, &RunConfig::new(2), &sink).unwrap();
//! assert_eq!(summary.plexes, 1);
//! assert_eq!(sink.take_sorted(), vec![vec![0, 1, 2, 3]]);
//! ```

pub mod graph;
pub mod ingest;
pub mod oracle;
pub mod scheduler;
pub mod search;
pub mod seed;
pub mod sink;
pub mod smallplex;

pub use graph::{Graph, VertexId};
pub use scheduler::{run, RunConfig, RunSummary};
pub use sink::PlexSink;

// mdbook cannot run the guide's examples, so each chapter is also included
// here and `cargo test --doc` runs every Rust block it contains.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/kplexes.md")]
    pub mod kplexes {}
    #[doc = include_str!("../../../book/src/library.md")]
    pub mod library {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
    #[doc = include_str!("../../../book/src/algorithm.md")]
    pub mod algorithm {}
}

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub mod readme {}
