//! Anchored seed subgraphs, their pruning rules, and the earlier-vertex
//! view used for global maximality checks.
//!
//! Every maximal k-plex with at least `2k - 1` vertices has diameter at most
//! two, so the plexes whose earliest-ordered member (the anchor) is `v` live
//! entirely inside `{v}`, the later neighbors of `v`, and the later vertices
//! at distance exactly two from `v`. Enumerating per anchor over that small
//! subgraph, with the anchor's later distance-two members restricted to at
//! most `k - 1` picks, covers each plex exactly once.

use crate::graph::{DegeneracyOrder, Graph, VertexId};

/// Seed subgraphs at most this large use a bit-matrix for adjacency;
/// larger ones fall back to sorted neighbor lists.
pub const BITSET_MEMBER_LIMIT: usize = 4096;

/// Local adjacency over the dense member ids of one seed subgraph.
enum LocalAdj {
    Bits { words: usize, rows: Vec<u64> },
    Lists { rows: Vec<Vec<u32>> },
}

impl LocalAdj {
    fn with_capacity(members: usize) -> LocalAdj {
        if members <= BITSET_MEMBER_LIMIT {
            let words = members.div_ceil(64).max(1);
            LocalAdj::Bits {
                words,
                rows: vec![0u64; words * members],
            }
        } else {
            LocalAdj::Lists {
                rows: vec![Vec::new(); members],
            }
        }
    }

    fn insert(&mut self, u: u32, v: u32) {
        match self {
            LocalAdj::Bits { words, rows } => {
                rows[u as usize * *words + v as usize / 64] |= 1 << (v % 64);
            }
            LocalAdj::Lists { rows } => rows[u as usize].push(v),
        }
    }

    fn finish_rows(&mut self) {
        if let LocalAdj::Lists { rows } = self {
            for row in rows {
                row.sort_unstable();
            }
        }
    }

    #[inline]
    fn adjacent(&self, u: u32, v: u32) -> bool {
        match self {
            LocalAdj::Bits { words, rows } => {
                rows[u as usize * words + v as usize / 64] & (1 << (v % 64)) != 0
            }
            LocalAdj::Lists { rows } => rows[u as usize].binary_search(&v).is_ok(),
        }
    }

    /// Number of common neighbors of `u` and `v` with local id in `[lo, hi)`.
    fn count_common_span(&self, u: u32, v: u32, lo: u32, hi: u32) -> u32 {
        if hi <= lo {
            return 0;
        }
        match self {
            LocalAdj::Bits { words, rows } => {
                let ru = &rows[u as usize * words..(u as usize + 1) * words];
                let rv = &rows[v as usize * words..(v as usize + 1) * words];
                let (w0, w1) = (lo as usize / 64, (hi as usize - 1) / 64);
                let mut total = 0u32;
                for w in w0..=w1 {
                    let mut bits = ru[w] & rv[w];
                    if w == w0 {
                        bits &= u64::MAX << (lo % 64);
                    }
                    if w == w1 {
                        let tail = hi % 64;
                        if tail != 0 {
                            bits &= u64::MAX >> (64 - tail);
                        }
                    }
                    total += bits.count_ones();
                }
                total
            }
            LocalAdj::Lists { rows } => {
                let (ru, rv) = (&rows[u as usize], &rows[v as usize]);
                let (mut i, mut j, mut total) = (0, 0, 0);
                while i < ru.len() && j < rv.len() {
                    match ru[i].cmp(&rv[j]) {
                        std::cmp::Ordering::Less => i += 1,
                        std::cmp::Ordering::Greater => j += 1,
                        std::cmp::Ordering::Equal => {
                            if ru[i] >= lo && ru[i] < hi {
                                total += 1;
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                }
                total
            }
        }
    }
}

/// The search arena of one anchor: the anchor itself (local id 0), its
/// later neighbors (local ids `1..=one_hop_count`), and its later
/// distance-two vertices (the remaining local ids), with induced adjacency.
pub struct SeedGraph {
    anchor: VertexId,
    members: Vec<VertexId>,
    one_hop_count: u32,
    index: Vec<(VertexId, u32)>,
    adj: LocalAdj,
}

impl SeedGraph {
    /// The anchor vertex (global id); always local id 0.
    pub fn anchor(&self) -> VertexId {
        self.anchor
    }

    /// All members as global ids, indexed by local id. The anchor comes
    /// first, then later neighbors, then later two-hop vertices, each block
    /// in degeneracy-position order.
    pub fn members(&self) -> &[VertexId] {
        &self.members
    }

    pub fn member_count(&self) -> usize {
        self.members.len()
    }

    pub fn one_hop_count(&self) -> u32 {
        self.one_hop_count
    }

    pub fn two_hop_count(&self) -> u32 {
        (self.members.len() as u32) - 1 - self.one_hop_count
    }

    /// Later neighbors of the anchor, as global ids.
    pub fn one_hop(&self) -> &[VertexId] {
        &self.members[1..=self.one_hop_count as usize]
    }

    /// Later distance-two vertices of the anchor, as global ids.
    pub fn two_hop(&self) -> &[VertexId] {
        &self.members[1 + self.one_hop_count as usize..]
    }

    /// First local id of the two-hop block.
    pub fn two_hop_start(&self) -> u32 {
        1 + self.one_hop_count
    }

    /// Local id of a global vertex, if it is a member.
    pub fn local_id(&self, v: VertexId) -> Option<u32> {
        self.index
            .binary_search_by_key(&v, |&(g, _)| g)
            .ok()
            .map(|i| self.index[i].1)
    }

    /// Whether two members are adjacent, by local id.
    #[inline]
    pub fn adjacent(&self, u: u32, v: u32) -> bool {
        self.adj.adjacent(u, v)
    }

    /// Common neighbors of `u` and `v` inside the candidate block (the
    /// anchor's later neighbors), by local id.
    pub fn common_candidates(&self, u: u32, v: u32) -> u32 {
        self.adj.count_common_span(u, v, 1, 1 + self.one_hop_count)
    }

    /// Hand-built seed graph over local ids `0..member_count` (globals equal
    /// locals) with the given undirected local edges; test fixtures only.
    #[cfg(test)]
    pub(crate) fn synthetic(
        member_count: u32,
        one_hop_count: u32,
        edges: &[(u32, u32)],
    ) -> SeedGraph {
        assert!(one_hop_count < member_count);
        let members: Vec<VertexId> = (0..member_count).collect();
        let index: Vec<(VertexId, u32)> = (0..member_count).map(|v| (v, v)).collect();
        let mut adj = LocalAdj::with_capacity(member_count as usize);
        for &(a, b) in edges {
            assert!(a != b && a < member_count && b < member_count);
            adj.insert(a, b);
            adj.insert(b, a);
        }
        adj.finish_rows();
        SeedGraph {
            anchor: 0,
            members,
            one_hop_count,
            index,
            adj,
        }
    }
}

/// Reusable per-thread buffers for seed construction. All arrays are sized
/// to the host graph and reused across anchors via generation stamps.
pub struct SeedScratch {
    gen: u32,
    member_mark: Vec<u32>,
    local_of: Vec<u32>,
    cand_gen: u32,
    cand_mark: Vec<u32>,
    near_gen: u32,
    near_mark: Vec<u32>,
    one_hop: Vec<VertexId>,
    two_hop: Vec<VertexId>,
}

impl Default for SeedScratch {
    fn default() -> Self {
        Self::new()
    }
}

impl SeedScratch {
    pub fn new() -> SeedScratch {
        SeedScratch {
            gen: 0,
            member_mark: Vec::new(),
            local_of: Vec::new(),
            cand_gen: 0,
            cand_mark: Vec::new(),
            near_gen: 0,
            near_mark: Vec::new(),
            one_hop: Vec::new(),
            two_hop: Vec::new(),
        }
    }

    fn ensure(&mut self, n: usize) {
        if self.member_mark.len() < n {
            self.member_mark.resize(n, 0);
            self.local_of.resize(n, 0);
            self.cand_mark.resize(n, 0);
            self.near_mark.resize(n, 0);
        }
    }
}

/// Knobs for engine-path seed construction.
#[derive(Debug, Clone, Copy)]
pub struct SeedParams {
    pub k: u32,
    /// Emission floor: `max(l, 2k - 1)`.
    pub min_size: u32,
    /// Apply the counting rule that shrinks the seed subgraph.
    pub prune_graph: bool,
}

/// Collects the anchor's later neighbors and later two-hop vertices into
/// scratch, in degeneracy-position order.
fn collect_hops(g: &Graph, ord: &DegeneracyOrder, anchor: VertexId, scratch: &mut SeedScratch) {
    let pv = ord.position(anchor);
    scratch.near_gen += 1;
    let near = scratch.near_gen;
    scratch.near_mark[anchor as usize] = near;
    for &u in g.neighbors(anchor) {
        scratch.near_mark[u as usize] = near;
    }

    scratch.one_hop.clear();
    scratch
        .one_hop
        .extend(g.neighbors(anchor).iter().copied().filter(|&u| ord.position(u) > pv));
    scratch.one_hop.sort_unstable_by_key(|&u| ord.position(u));

    scratch.two_hop.clear();
    for &u in g.neighbors(anchor) {
        for &w in g.neighbors(u) {
            if ord.position(w) > pv && scratch.near_mark[w as usize] != near {
                scratch.near_mark[w as usize] = near;
                scratch.two_hop.push(w);
            }
        }
    }
    scratch.two_hop.sort_unstable_by_key(|&u| ord.position(u));
}

/// Applies the seed-size counting rule to the scratch hop lists until a
/// fixpoint: a later neighbor must share at least `l - 2k` neighbors with
/// the anchor's (surviving) later neighborhood, a two-hop member at least
/// `l - 2k + 2`. Thresholds at or below zero make the rule vacuous.
fn prune_hops(g: &Graph, k: u32, l: u32, scratch: &mut SeedScratch) {
    let one_thresh = l as i64 - 2 * k as i64;
    let two_thresh = one_thresh + 2;
    if two_thresh <= 0 {
        return;
    }

    scratch.cand_gen += 1;
    let cur = scratch.cand_gen;
    for &u in &scratch.one_hop {
        scratch.cand_mark[u as usize] = cur;
    }

    if one_thresh > 0 {
        loop {
            let mut removed_any = false;
            let mut keep = Vec::with_capacity(scratch.one_hop.len());
            for &u in &scratch.one_hop {
                if scratch.cand_mark[u as usize] != cur {
                    continue;
                }
                let common = g
                    .neighbors(u)
                    .iter()
                    .filter(|&&w| scratch.cand_mark[w as usize] == cur)
                    .count() as i64;
                if common < one_thresh {
                    scratch.cand_mark[u as usize] = 0;
                    removed_any = true;
                } else {
                    keep.push(u);
                }
            }
            scratch.one_hop = keep;
            if !removed_any {
                break;
            }
        }
    }

    scratch.two_hop.retain(|&u| {
        let common = g
            .neighbors(u)
            .iter()
            .filter(|&&w| scratch.cand_mark[w as usize] == cur)
            .count() as i64;
        common >= two_thresh
    });
}

/// Assembles a `SeedGraph` from the scratch hop lists.
fn assemble(g: &Graph, anchor: VertexId, scratch: &mut SeedScratch) -> SeedGraph {
    let one_hop_count = scratch.one_hop.len() as u32;
    let mut members = Vec::with_capacity(1 + scratch.one_hop.len() + scratch.two_hop.len());
    members.push(anchor);
    members.extend_from_slice(&scratch.one_hop);
    members.extend_from_slice(&scratch.two_hop);

    scratch.gen += 1;
    let gen = scratch.gen;
    for (i, &v) in members.iter().enumerate() {
        scratch.member_mark[v as usize] = gen;
        scratch.local_of[v as usize] = i as u32;
    }

    let mut adj = LocalAdj::with_capacity(members.len());
    for (i, &v) in members.iter().enumerate() {
        for &u in g.neighbors(v) {
            if scratch.member_mark[u as usize] == gen {
                adj.insert(i as u32, scratch.local_of[u as usize]);
            }
        }
    }
    adj.finish_rows();

    let mut index: Vec<(VertexId, u32)> = members
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as u32))
        .collect();
    index.sort_unstable_by_key(|&(v, _)| v);

    SeedGraph {
        anchor,
        members,
        one_hop_count,
        index,
        adj,
    }
}

/// Engine-path construction: hop collection, optional pruning, and size
/// bounds folded together. Returns `None` when no k-plex of at least
/// `params.min_size` vertices can be anchored at `anchor`.
///
/// The bound: a plex anchored here has at most `1 + |one hop| + (k - 1)`
/// members, since the anchor tolerates at most `k - 1` non-neighbors.
pub fn build_seed(
    g: &Graph,
    ord: &DegeneracyOrder,
    anchor: VertexId,
    params: &SeedParams,
    scratch: &mut SeedScratch,
) -> Option<SeedGraph> {
    scratch.ensure(g.vertex_count());
    let need = params.min_size as usize;
    let pv = ord.position(anchor);
    let slack = params.k.saturating_sub(1) as usize;

    // Later-neighbor count bounds the seed before any two-hop scan.
    let later = g
        .neighbors(anchor)
        .iter()
        .filter(|&&u| ord.position(u) > pv)
        .count();
    if 1 + later + slack < need {
        return None;
    }

    collect_hops(g, ord, anchor, scratch);
    if params.prune_graph {
        prune_hops(g, params.k, params.min_size, scratch);
    }
    let cap = 1 + scratch.one_hop.len() + slack.min(scratch.two_hop.len());
    if cap < need {
        return None;
    }
    Some(assemble(g, anchor, scratch))
}

/// Builds the full (unpruned) seed subgraph of `anchor`.
pub fn build_seed_graph(g: &Graph, ord: &DegeneracyOrder, anchor: VertexId) -> SeedGraph {
    let mut scratch = SeedScratch::new();
    scratch.ensure(g.vertex_count());
    collect_hops(g, ord, anchor, &mut scratch);
    assemble(g, anchor, &mut scratch)
}

/// Applies the counting rule to an existing seed subgraph, returning the
/// shrunken equivalent. With `l < 2k` the rule is vacuous.
pub fn prune_seed_graph(
    g: &Graph,
    sg: &SeedGraph,
    k: u32,
    l: u32,
) -> SeedGraph {
    let mut scratch = SeedScratch::new();
    scratch.ensure(g.vertex_count());
    scratch.one_hop = sg.one_hop().to_vec();
    scratch.two_hop = sg.two_hop().to_vec();
    prune_hops(g, k, l, &mut scratch);
    assemble(g, sg.anchor(), &mut scratch)
}

/// One choice of the anchor's two-hop members: the search then starts from
/// `P = {anchor} + s`, candidates the anchor's later neighbors, exclusion
/// set the remaining two-hop members. `s` holds local ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedSet {
    pub s: Vec<u32>,
}

/// Whether two two-hop members may appear together in one seed set, by the
/// pair counting rule: members of a size-`l` plex share enough candidate
/// neighbors, with a laxer bound when they are adjacent.
pub fn check_seed_pair(sg: &SeedGraph, u: u32, v: u32, k: u32, l: u32) -> bool {
    let slack = (k as i64 - 3).max(0);
    let base = l as i64 - 2 * k as i64 - slack;
    let need = if sg.adjacent(u, v) { base } else { base + 2 };
    if need <= 0 {
        return true;
    }
    sg.common_candidates(u, v) as i64 >= need
}

/// Streams every admissible seed set of `sg` in size-then-lexicographic
/// order (sizes `0..=k-1`, each size in ascending local-id order). When
/// `prune_pairs` is set, sets containing a pair that fails
/// [`check_seed_pair`] are skipped wholesale.
pub fn for_each_seed_set<F: FnMut(&[u32])>(
    sg: &SeedGraph,
    k: u32,
    l: u32,
    prune_pairs: bool,
    mut f: F,
) {
    let start = sg.two_hop_start();
    let end = sg.member_count() as u32;
    let max_pick = (k - 1).min(end - start) as usize;
    let mut chosen: Vec<u32> = Vec::with_capacity(max_pick);

    f(&chosen);
    for size in 1..=max_pick {
        pick_rec(sg, k, l, prune_pairs, start, end, size, &mut chosen, &mut f);
    }
}

fn pick_rec<F: FnMut(&[u32])>(
    sg: &SeedGraph,
    k: u32,
    l: u32,
    prune_pairs: bool,
    from: u32,
    end: u32,
    remaining: usize,
    chosen: &mut Vec<u32>,
    f: &mut F,
) {
    if remaining == 0 {
        f(chosen);
        return;
    }
    for v in from..end {
        // Not enough ids left to fill the set.
        if end - v < remaining as u32 {
            break;
        }
        if prune_pairs && !chosen.iter().all(|&u| check_seed_pair(sg, u, v, k, l)) {
            continue;
        }
        chosen.push(v);
        pick_rec(sg, k, l, prune_pairs, v + 1, end, remaining - 1, chosen, f);
        chosen.pop();
    }
}

/// Collects the admissible seed sets of `sg`; see [`for_each_seed_set`].
pub fn enum_seed_sets(sg: &SeedGraph, k: u32, l: u32, prune_pairs: bool) -> Vec<SeedSet> {
    let mut out = Vec::new();
    for_each_seed_set(sg, k, l, prune_pairs, |s| out.push(SeedSet { s: s.to_vec() }));
    out
}

/// Earlier vertices that could extend a plex of the seed subgraph: the
/// anchor's earlier neighbors and earlier distance-two vertices, each with
/// its edges into the (possibly pruned) member set.
pub struct BipartiteView {
    left: Vec<VertexId>,
    row_len: Vec<u32>,
    rows: LocalAdj,
}

impl BipartiteView {
    pub fn left(&self) -> &[VertexId] {
        &self.left
    }

    /// Edges from left vertex `idx` into the member set, as local ids.
    pub fn row_degree(&self, idx: usize) -> u32 {
        self.row_len[idx]
    }

    #[inline]
    fn connects(&self, idx: usize, local: u32) -> bool {
        self.rows.adjacent(idx as u32, local)
    }

    /// Whether left vertex `idx` extends the plex `p` (local ids) without
    /// breaking any budget: the vertex itself needs `|p| + 1 - k` member
    /// neighbors, and every saturated member must be its neighbor.
    pub fn can_extend(&self, idx: usize, p: &[u32], saturated: &[u32], k: u32) -> bool {
        let need = (p.len() as i64) + 1 - k as i64;
        if (self.row_len[idx] as i64) < need {
            return false;
        }
        for &v in saturated {
            if !self.connects(idx, v) {
                return false;
            }
        }
        let mut count = 0i64;
        for &v in p {
            if self.connects(idx, v) {
                count += 1;
            }
        }
        count >= need
    }
}

/// Builds the earlier-vertex view for `sg` over its current member set.
pub fn build_bipartite(g: &Graph, ord: &DegeneracyOrder, sg: &SeedGraph) -> BipartiteView {
    let mut scratch = SeedScratch::new();
    scratch.ensure(g.vertex_count());
    build_bipartite_with(g, ord, sg, &mut scratch)
}

/// Scratch-reusing variant of [`build_bipartite`].
pub fn build_bipartite_with(
    g: &Graph,
    ord: &DegeneracyOrder,
    sg: &SeedGraph,
    scratch: &mut SeedScratch,
) -> BipartiteView {
    scratch.ensure(g.vertex_count());
    let anchor = sg.anchor();
    let pv = ord.position(anchor);

    // Stamp members for row construction.
    scratch.gen += 1;
    let gen = scratch.gen;
    for (i, &v) in sg.members().iter().enumerate() {
        scratch.member_mark[v as usize] = gen;
        scratch.local_of[v as usize] = i as u32;
    }

    // Earlier neighbors, then earlier strict two-hop vertices.
    scratch.near_gen += 1;
    let near = scratch.near_gen;
    scratch.near_mark[anchor as usize] = near;
    for &u in g.neighbors(anchor) {
        scratch.near_mark[u as usize] = near;
    }
    let mut left: Vec<VertexId> = Vec::new();
    for &u in g.neighbors(anchor) {
        if ord.position(u) < pv {
            left.push(u);
        }
    }
    scratch.cand_gen += 1;
    let seen = scratch.cand_gen;
    for &u in g.neighbors(anchor) {
        for &w in g.neighbors(u) {
            if ord.position(w) < pv
                && scratch.near_mark[w as usize] != near
                && scratch.cand_mark[w as usize] != seen
            {
                scratch.cand_mark[w as usize] = seen;
                left.push(w);
            }
        }
    }

    // Row representation keyed on member count: rows are indexed by left
    // position but store member local ids.
    let mut rows = if sg.member_count() <= BITSET_MEMBER_LIMIT {
        let words = sg.member_count().div_ceil(64).max(1);
        LocalAdj::Bits {
            words,
            rows: vec![0u64; words * left.len()],
        }
    } else {
        LocalAdj::Lists {
            rows: vec![Vec::new(); left.len()],
        }
    };
    let mut row_len = vec![0u32; left.len()];
    for (i, &u) in left.iter().enumerate() {
        for &w in g.neighbors(u) {
            if scratch.member_mark[w as usize] == gen {
                rows.insert(i as u32, scratch.local_of[w as usize]);
                row_len[i] += 1;
            }
        }
    }
    rows.finish_rows();

    BipartiteView {
        left,
        row_len,
        rows,
    }
}

/// Whether no earlier vertex extends the plex `p` (local ids, containing
/// the anchor). Budgets inside `p` are recomputed here; the engine path
/// passes its maintained counters to the underlying check instead.
pub fn globally_maximal(sg: &SeedGraph, bv: &BipartiteView, p: &[u32], k: u32) -> bool {
    let mut saturated = Vec::new();
    for &v in p {
        let nonadj = 1 + p
            .iter()
            .filter(|&&w| w != v && !sg.adjacent(v, w))
            .count() as u32;
        debug_assert!(nonadj <= k, "p must be a k-plex");
        if nonadj == k {
            saturated.push(v);
        }
    }
    globally_maximal_with(bv, p, &saturated, k)
}

/// Core of the global maximality check, with saturated members precomputed.
pub fn globally_maximal_with(bv: &BipartiteView, p: &[u32], saturated: &[u32], k: u32) -> bool {
    for idx in 0..bv.left().len() {
        if bv.can_extend(idx, p, saturated, k) {
            return false;
        }
    }
    true
}
