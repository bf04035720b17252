//! Compressed sparse row graph storage and degeneracy ordering.

use std::collections::HashMap;

/// Internal vertex identifier: a dense index in `0..n`.
pub type VertexId = u32;

/// An undirected simple graph in compressed sparse row form.
///
/// Vertices carry dense internal ids `0..n`, assigned by first appearance in
/// the edge input. Each adjacency row is sorted ascending and holds neither
/// self-loops nor duplicates; every edge appears in both endpoint rows.
#[derive(Debug, Clone)]
pub struct Graph {
    offsets: Vec<usize>,
    adjacency: Vec<VertexId>,
    original_ids: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list over arbitrary `u64` labels.
    ///
    /// Self-loops are dropped (the endpoint is still registered as a vertex)
    /// and duplicate edges collapse to one.
    pub fn from_edges<I>(edges: I) -> Graph
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut ids: HashMap<u64, VertexId> = HashMap::new();
        let mut original_ids: Vec<u64> = Vec::new();
        let mut intern = |label: u64, original_ids: &mut Vec<u64>| -> VertexId {
            *ids.entry(label).or_insert_with(|| {
                original_ids.push(label);
                (original_ids.len() - 1) as VertexId
            })
        };

        let mut directed: Vec<(VertexId, VertexId)> = Vec::new();
        for (a, b) in edges {
            let ia = intern(a, &mut original_ids);
            let ib = intern(b, &mut original_ids);
            if ia != ib {
                directed.push((ia, ib));
                directed.push((ib, ia));
            }
        }
        directed.sort_unstable();
        directed.dedup();

        let n = original_ids.len();
        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in &directed {
            offsets[u as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let adjacency = directed.into_iter().map(|(_, v)| v).collect();

        Graph {
            offsets,
            adjacency,
            original_ids,
        }
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.original_ids.len()
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> u64 {
        (self.adjacency.len() / 2) as u64
    }

    /// Sorted adjacency row of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    /// Largest degree over all vertices, 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count() as VertexId)
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    /// Whether `{u, v}` is an edge. Binary search on the shorter row.
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// External label of internal vertex `v`.
    pub fn original_id(&self, v: VertexId) -> u64 {
        self.original_ids[v as usize]
    }

    /// All undirected edges as internal-id pairs with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.vertex_count() as VertexId).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }
}

/// A degeneracy ordering: repeatedly remove a minimum-degree vertex,
/// breaking ties by smallest internal id.
///
/// `core[v]` is the degree of `v` in the residual graph at the moment it is
/// removed; the maximum of these over the whole peel is the degeneracy.
#[derive(Debug, Clone)]
pub struct DegeneracyOrder {
    order: Vec<VertexId>,
    position: Vec<u32>,
    core: Vec<u32>,
    degeneracy: u32,
}

impl DegeneracyOrder {
    /// Vertices in peel order: `order()[i]` is the `i`-th removed vertex.
    pub fn order(&self) -> &[VertexId] {
        &self.order
    }

    /// Rank of `v` in the ordering, inverse of [`order`](Self::order).
    pub fn position(&self, v: VertexId) -> u32 {
        self.position[v as usize]
    }

    /// Residual degree of `v` at the moment it was peeled.
    pub fn core(&self, v: VertexId) -> u32 {
        self.core[v as usize]
    }

    /// Maximum core value; every subgraph has a vertex of at most this degree.
    pub fn degeneracy(&self) -> u32 {
        self.degeneracy
    }
}

/// Computes the degeneracy ordering of `g`.
///
/// Uses a min-heap with lazy deletion: stale entries (where the recorded
/// degree no longer matches) are skipped on pop. Ties on degree resolve to
/// the smallest internal id because the heap key is `(degree, id)`.
pub fn degeneracy_order(g: &Graph) -> DegeneracyOrder {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    let n = g.vertex_count();
    let mut degree: Vec<u32> = (0..n as VertexId).map(|v| g.degree(v) as u32).collect();
    let mut heap: BinaryHeap<Reverse<(u32, VertexId)>> = (0..n as VertexId)
        .map(|v| Reverse((degree[v as usize], v)))
        .collect();

    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut position = vec![0u32; n];
    let mut core = vec![0u32; n];
    let mut degeneracy = 0u32;

    while let Some(Reverse((d, v))) = heap.pop() {
        if removed[v as usize] || d != degree[v as usize] {
            continue;
        }
        removed[v as usize] = true;
        position[v as usize] = order.len() as u32;
        order.push(v);
        core[v as usize] = d;
        degeneracy = degeneracy.max(d);
        for &u in g.neighbors(v) {
            if !removed[u as usize] {
                degree[u as usize] -= 1;
                heap.push(Reverse((degree[u as usize], u)));
            }
        }
    }

    DegeneracyOrder {
        order,
        position,
        core,
        degeneracy,
    }
}

/// Neighbors of `v` that come after it in the ordering, sorted by position.
pub fn later_neighbors(g: &Graph, ord: &DegeneracyOrder, v: VertexId) -> Vec<VertexId> {
    let pv = ord.position(v);
    let mut out: Vec<VertexId> = g
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&u| ord.position(u) > pv)
        .collect();
    out.sort_unstable_by_key(|&u| ord.position(u));
    out
}

/// Vertices at distance exactly two from `v` that come after it in the
/// ordering, sorted by position. The intermediate vertex may sit anywhere
/// in the ordering.
pub fn two_hop_later(g: &Graph, ord: &DegeneracyOrder, v: VertexId) -> Vec<VertexId> {
    let pv = ord.position(v);
    let mut seen = vec![false; g.vertex_count()];
    seen[v as usize] = true;
    for &u in g.neighbors(v) {
        seen[u as usize] = true;
    }
    let mut out = Vec::new();
    for &u in g.neighbors(v) {
        for &w in g.neighbors(u) {
            if !seen[w as usize] && ord.position(w) > pv {
                seen[w as usize] = true;
                out.push(w);
            }
        }
    }
    out.sort_unstable_by_key(|&u| ord.position(u));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: u64) -> Graph {
        Graph::from_edges((0..n.saturating_sub(1)).map(|i| (i, i + 1)))
    }

    fn cycle(n: u64) -> Graph {
        Graph::from_edges((0..n).map(|i| (i, (i + 1) % n)))
    }

    fn complete(n: u64) -> Graph {
        Graph::from_edges((0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j))))
    }

    #[test]
    fn builds_csr_with_sorted_rows_and_no_duplicates() {
        let g = Graph::from_edges([(7, 3), (3, 7), (7, 7), (3, 9), (9, 7)]);
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        // First-appearance interning: 7 -> 0, 3 -> 1, 9 -> 2.
        assert_eq!(g.original_id(0), 7);
        assert_eq!(g.original_id(1), 3);
        assert_eq!(g.original_id(2), 9);
        assert_eq!(g.neighbors(0), &[1, 2]);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.neighbors(2), &[0, 1]);
        assert!(g.has_edge(0, 2));
        assert!(g.has_edge(2, 0));
    }

    #[test]
    fn self_loop_only_vertex_is_registered_with_degree_zero() {
        let g = Graph::from_edges([(1, 1), (2, 3)]);
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.degree(0), 0);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn empty_graph() {
        let g = Graph::from_edges(std::iter::empty());
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.max_degree(), 0);
        let ord = degeneracy_order(&g);
        assert_eq!(ord.degeneracy(), 0);
        assert!(ord.order().is_empty());
    }

    #[test]
    fn edges_iterator_lists_each_edge_once() {
        let g = complete(4);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges.len(), 6);
        for &(u, v) in &edges {
            assert!(u < v);
            assert!(g.has_edge(u, v));
        }
    }

    #[test]
    fn degeneracy_of_standard_families() {
        assert_eq!(degeneracy_order(&path(10)).degeneracy(), 1);
        assert_eq!(degeneracy_order(&cycle(10)).degeneracy(), 2);
        assert_eq!(degeneracy_order(&complete(6)).degeneracy(), 5);
        // Star: leaves peel at degree 1 until only the hub and one leaf
        // remain; both sit at degree 1 and the smaller id (the hub) wins.
        let star = Graph::from_edges((1..8).map(|i| (0, i)));
        let ord = degeneracy_order(&star);
        assert_eq!(ord.degeneracy(), 1);
        assert_eq!(*ord.order().last().unwrap(), 7);
        assert_eq!(ord.core(0), 1);
        assert_eq!(ord.core(7), 0);
    }

    #[test]
    fn order_and_position_are_inverse_and_ties_break_by_id() {
        let g = cycle(5);
        let ord = degeneracy_order(&g);
        for (i, &v) in ord.order().iter().enumerate() {
            assert_eq!(ord.position(v) as usize, i);
        }
        // All degrees equal, so the peel must start at vertex 0.
        assert_eq!(ord.order()[0], 0);
    }

    /// Replays the peel with a naive scan and checks the recorded residual
    /// degrees, which pins both `core` and `degeneracy`.
    fn check_peel(g: &Graph) {
        let ord = degeneracy_order(g);
        let n = g.vertex_count();
        let mut alive = vec![true; n];
        let mut max_seen = 0;
        for &v in ord.order() {
            let residual = g
                .neighbors(v)
                .iter()
                .filter(|&&u| alive[u as usize])
                .count() as u32;
            assert_eq!(residual, ord.core(v), "residual degree mismatch at {v}");
            // A minimum-degree vertex was chosen.
            for u in 0..n as VertexId {
                if alive[u as usize] {
                    let du = g
                        .neighbors(u)
                        .iter()
                        .filter(|&&w| alive[w as usize])
                        .count() as u32;
                    assert!(du >= residual);
                }
            }
            max_seen = max_seen.max(residual);
            alive[v as usize] = false;
        }
        assert_eq!(max_seen, ord.degeneracy());
    }

    #[test]
    fn peel_replay_matches_on_fixtures() {
        check_peel(&path(9));
        check_peel(&cycle(8));
        check_peel(&complete(5));
        check_peel(&Graph::from_edges([
            (0, 1),
            (0, 2),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 3),
        ]));
    }

    #[test]
    fn later_neighbors_respects_order() {
        let g = cycle(6);
        let ord = degeneracy_order(&g);
        for v in 0..6 {
            let later = later_neighbors(&g, &ord, v);
            for &u in &later {
                assert!(g.has_edge(v, u));
                assert!(ord.position(u) > ord.position(v));
            }
            let naive = g
                .neighbors(v)
                .iter()
                .filter(|&&u| ord.position(u) > ord.position(v))
                .count();
            assert_eq!(later.len(), naive);
            assert!(later.windows(2).all(|w| ord.position(w[0]) < ord.position(w[1])));
        }
    }

    #[test]
    fn two_hop_matches_breadth_first_distance() {
        // A graph with pendant paths so that distance-2 sets are nontrivial.
        let g = Graph::from_edges([
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (0, 5),
            (5, 6),
            (1, 6),
            (2, 6),
        ]);
        let ord = degeneracy_order(&g);
        for v in 0..g.vertex_count() as VertexId {
            let got = two_hop_later(&g, &ord, v);
            let mut expect: Vec<VertexId> = (0..g.vertex_count() as VertexId)
                .filter(|&w| {
                    w != v
                        && !g.has_edge(v, w)
                        && ord.position(w) > ord.position(v)
                        && g.neighbors(v).iter().any(|&u| g.has_edge(u, w))
                })
                .collect();
            expect.sort_unstable_by_key(|&w| ord.position(w));
            assert_eq!(got, expect, "two-hop mismatch at {v}");
        }
    }
}
