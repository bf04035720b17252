//! Helpers shared by the integration suites.
#![allow(dead_code)]

use std::collections::VecDeque;
use std::path::PathBuf;

use kplex::graph::Graph;
use kplex::scheduler::{run, RunConfig};
use kplex::sink::VecSink;
use kplex::smallplex::is_kplex;
use kplex::VertexId;
use rand::Rng;

/// Resolves a dataset under `data/` at the repository root, or wherever
/// `KPLEX_DATA_DIR` points. Returns `None` when the file is absent so the
/// caller can skip honestly.
pub fn data_path(name: &str) -> Option<PathBuf> {
    let dir = std::env::var_os("KPLEX_DATA_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data"));
    let p = dir.join(name);
    p.exists().then_some(p)
}

/// G(n, p) with a self-loop per vertex so isolated vertices stay
/// registered; internal ids equal 0..n.
pub fn gnp(rng: &mut impl Rng, n: u64, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        edges.push((a, a));
        for b in a + 1..n {
            if rng.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(edges)
}

pub fn petersen() -> Graph {
    Graph::from_edges([
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 0),
        (0, 5),
        (1, 6),
        (2, 7),
        (3, 8),
        (4, 9),
        (5, 7),
        (5, 8),
        (6, 8),
        (6, 9),
        (7, 9),
    ])
}

/// Four 5-cliques joined in a ring by single edges.
pub fn caveman() -> Graph {
    let mut edges = Vec::new();
    for c in 0..4u64 {
        let base = c * 5;
        for a in 0..5 {
            for b in a + 1..5 {
                edges.push((base + a, base + b));
            }
        }
    }
    edges.extend([(4, 5), (9, 10), (14, 15), (19, 0)]);
    Graph::from_edges(edges)
}

pub fn listed(g: &Graph, config: &RunConfig) -> Vec<Vec<VertexId>> {
    let sink = VecSink::new();
    run(g, config, &sink).unwrap();
    sink.take_sorted()
}

pub fn config(k: u32, min_size: u32, threads: usize) -> RunConfig {
    let mut cfg = RunConfig::new(k);
    cfg.min_size = min_size;
    cfg.threads = threads;
    cfg
}

/// No two equal entries in a canonically sorted listing.
pub fn assert_no_duplicates(plexes: &[Vec<VertexId>], context: &str) {
    for w in plexes.windows(2) {
        assert!(w[0] < w[1], "{context}: duplicate or unsorted entry {:?}", w[0]);
    }
}

/// Every listed plex is a k-plex, admits no one-vertex extension, and (when
/// it has at least 2k - 1 members) is connected with diameter at most two.
pub fn assert_plex_properties(g: &Graph, k: u32, plexes: &[Vec<VertexId>], context: &str) {
    let n = g.vertex_count() as VertexId;
    for p in plexes {
        assert!(is_kplex(g, p, k), "{context}: {p:?} is not a {k}-plex");
        let mut extended = p.clone();
        for v in 0..n {
            if p.binary_search(&v).is_ok() {
                continue;
            }
            extended.push(v);
            assert!(
                !is_kplex(g, &extended, k),
                "{context}: {p:?} extends by {v}"
            );
            extended.pop();
        }
        if p.len() >= (2 * k - 1) as usize {
            assert_connected_diameter_two(g, p, context);
        }
    }
}

fn assert_connected_diameter_two(g: &Graph, p: &[VertexId], context: &str) {
    let inside = |v: VertexId| p.binary_search(&v).is_ok();
    // Connectivity by breadth-first search within the plex.
    let mut seen = vec![false; p.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([p[0]]);
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if let Ok(i) = p.binary_search(&w) {
                if !seen[i] {
                    seen[i] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
    }
    assert_eq!(reached, p.len(), "{context}: {p:?} is disconnected");
    // Diameter: non-adjacent members need a common member neighbor.
    for (i, &u) in p.iter().enumerate() {
        for &v in &p[i + 1..] {
            if g.has_edge(u, v) {
                continue;
            }
            let linked = g
                .neighbors(u)
                .iter()
                .any(|&w| inside(w) && g.has_edge(w, v));
            assert!(
                linked,
                "{context}: {p:?} has distance > 2 between {u} and {v}"
            );
        }
    }
}
