//! Pivoted set-enumeration over one seed subgraph.
//!
//! The state is a permutation of the seed's local ids partitioned into
//! `[P | C | X | dropped]`: P is the plex under construction, C the
//! candidates still allowed to join, X vertices excluded from P but able to
//! witness non-maximality. All moves are O(1) slot swaps plus counter
//! updates, recorded in a log and rewound on backtrack.
//!
//! Branching follows the pivot's non-adjacency budget: a pivot in P with
//! budget `k'` admits at most `k'` more non-neighbors, so its non-neighbor
//! candidates `u_1 < u_2 < ...` yield `k' + 1` branches (exclude `u_1`;
//! include `u_1`, exclude `u_2`; ...; include `u_1..u_k'`, exclude the
//! rest). A branch that would push a vertex into P past some member's
//! budget is skipped along with all later branches, which would contain the
//! same overfull set.

use crate::seed::SeedGraph;

/// Sizing knobs for one search: `k` and the smallest plex worth emitting.
#[derive(Debug, Clone, Copy)]
pub struct SearchParams {
    pub k: u32,
    pub min_size: u32,
}

/// Where emitted plexes go and where child calls may be intercepted.
pub trait SearchDelegate {
    /// Called with a plex that is maximal within the seed subgraph:
    /// `locals` are seed-local ids (unsorted), `saturated` the members whose
    /// non-adjacency budget is exhausted. Global maximality against
    /// earlier vertices is the delegate's business.
    fn emit(&mut self, sg: &SeedGraph, locals: &[u32], saturated: &[u32]);

    /// Offered every child call about to recurse. Returning `true` claims
    /// the call: the delegate owns a fork of the state and the search moves
    /// on to its next branch. The default declines.
    fn try_offload(&mut self, _sg: &SeedGraph, _st: &SearchState) -> bool {
        false
    }
}

#[derive(Clone, Copy, Debug)]
enum Move {
    CToP(u32),
    CToX(u32),
    XToDrop(u32),
}

/// Partitioned search state over local ids `0..m` of one seed subgraph.
#[derive(Clone, Default)]
pub struct SearchState {
    order: Vec<u32>,
    pos: Vec<u32>,
    p_end: usize,
    c_end: usize,
    x_end: usize,
    /// `|P \ N(v)|`, counting `v` itself when `v` is in P.
    nonadj: Vec<u32>,
    log: Vec<Move>,
}

impl SearchState {
    /// Fresh state for one seed set: P is the anchor plus `seed` (ascending
    /// local ids from the two-hop block), C the candidate block, X the
    /// remaining two-hop ids.
    pub fn init(sg: &SeedGraph, seed: &[u32]) -> SearchState {
        let mut st = SearchState {
            order: Vec::new(),
            pos: Vec::new(),
            p_end: 0,
            c_end: 0,
            x_end: 0,
            nonadj: Vec::new(),
            log: Vec::new(),
        };
        st.reset(sg, seed);
        st
    }

    /// Reinitializes in place; see [`init`](Self::init).
    pub fn reset(&mut self, sg: &SeedGraph, seed: &[u32]) {
        let m = sg.member_count() as u32;
        let two_start = sg.two_hop_start();
        debug_assert!(seed.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(seed.iter().all(|&s| s >= two_start && s < m));

        self.order.clear();
        self.order.push(0);
        self.order.extend_from_slice(seed);
        self.order.extend(1..two_start);
        self.p_end = 1 + seed.len();
        self.c_end = self.p_end + (two_start - 1) as usize;
        let mut si = 0;
        for t in two_start..m {
            if si < seed.len() && seed[si] == t {
                si += 1;
            } else {
                self.order.push(t);
            }
        }
        self.x_end = self.order.len();
        debug_assert_eq!(self.x_end, m as usize);

        self.pos.clear();
        self.pos.resize(m as usize, 0);
        for (i, &v) in self.order.iter().enumerate() {
            self.pos[v as usize] = i as u32;
        }

        self.nonadj.clear();
        self.nonadj.resize(m as usize, 0);
        for v in 0..m {
            let mut cnt = if self.in_p(v) { 1 } else { 0 };
            for &w in &self.order[..self.p_end] {
                if w != v && !sg.adjacent(v, w) {
                    cnt += 1;
                }
            }
            self.nonadj[v as usize] = cnt;
        }
        self.log.clear();
    }

    /// Copy for a parallel subtask: same partition, empty log.
    pub fn fork(&self) -> SearchState {
        let mut st = self.clone();
        st.log.clear();
        st
    }

    pub fn p_len(&self) -> usize {
        self.p_end
    }

    pub fn c_len(&self) -> usize {
        self.c_end - self.p_end
    }

    pub fn x_len(&self) -> usize {
        self.x_end - self.c_end
    }

    /// Members of P, unsorted.
    pub fn p(&self) -> &[u32] {
        &self.order[..self.p_end]
    }

    /// Members of C, unsorted.
    pub fn c(&self) -> &[u32] {
        &self.order[self.p_end..self.c_end]
    }

    /// Members of X, unsorted.
    pub fn x(&self) -> &[u32] {
        &self.order[self.c_end..self.x_end]
    }

    /// P and C together.
    fn pc(&self) -> &[u32] {
        &self.order[..self.c_end]
    }

    pub fn nonadj_p(&self, v: u32) -> u32 {
        self.nonadj[v as usize]
    }

    fn in_p(&self, v: u32) -> bool {
        (self.pos[v as usize] as usize) < self.p_end
    }

    fn in_c(&self, v: u32) -> bool {
        let p = self.pos[v as usize] as usize;
        p >= self.p_end && p < self.c_end
    }

    fn in_x(&self, v: u32) -> bool {
        let p = self.pos[v as usize] as usize;
        p >= self.c_end && p < self.x_end
    }

    fn swap_slots(&mut self, a: usize, b: usize) {
        self.order.swap(a, b);
        self.pos[self.order[a] as usize] = a as u32;
        self.pos[self.order[b] as usize] = b as u32;
    }

    fn mark(&self) -> usize {
        self.log.len()
    }

    fn move_c_to_p(&mut self, sg: &SeedGraph, v: u32) {
        debug_assert!(self.in_c(v));
        // Every live non-neighbor pays one budget unit; v pays for itself.
        for slot in 0..self.x_end {
            let w = self.order[slot];
            if !sg.adjacent(v, w) {
                self.nonadj[w as usize] += 1;
            }
        }
        let slot = self.pos[v as usize] as usize;
        self.swap_slots(slot, self.p_end);
        self.p_end += 1;
        self.log.push(Move::CToP(v));
    }

    fn move_c_to_x(&mut self, v: u32) {
        debug_assert!(self.in_c(v));
        let slot = self.pos[v as usize] as usize;
        self.swap_slots(slot, self.c_end - 1);
        self.c_end -= 1;
        self.log.push(Move::CToX(v));
    }

    fn move_x_to_drop(&mut self, v: u32) {
        debug_assert!(self.in_x(v));
        let slot = self.pos[v as usize] as usize;
        self.swap_slots(slot, self.x_end - 1);
        self.x_end -= 1;
        self.log.push(Move::XToDrop(v));
    }

    fn move_c_to_drop(&mut self, v: u32) {
        self.move_c_to_x(v);
        self.move_x_to_drop(v);
    }

    /// Rewinds the log down to `mark`. Region membership is restored
    /// exactly; slot order within regions may differ, which nothing
    /// observes (branch order sorts by id, never by slot).
    fn rewind(&mut self, sg: &SeedGraph, mark: usize) {
        while self.log.len() > mark {
            match self.log.pop().unwrap() {
                Move::CToP(v) => {
                    for slot in 0..self.x_end {
                        let w = self.order[slot];
                        if !sg.adjacent(v, w) {
                            self.nonadj[w as usize] -= 1;
                        }
                    }
                    self.p_end -= 1;
                    let slot = self.pos[v as usize] as usize;
                    self.swap_slots(slot, self.p_end);
                }
                Move::CToX(v) => {
                    let slot = self.pos[v as usize] as usize;
                    self.swap_slots(slot, self.c_end);
                    self.c_end += 1;
                }
                Move::XToDrop(v) => {
                    let slot = self.pos[v as usize] as usize;
                    self.swap_slots(slot, self.x_end);
                    self.x_end += 1;
                }
            }
        }
    }

    /// Full recount of every live budget against P; debug builds only.
    #[cfg(debug_assertions)]
    fn audit(&self, sg: &SeedGraph) {
        for (i, &v) in self.order.iter().enumerate() {
            assert_eq!(self.pos[v as usize] as usize, i, "pos/order desync");
        }
        for slot in 0..self.x_end {
            let v = self.order[slot];
            let mut cnt = if self.in_p(v) { 1 } else { 0 };
            for &w in self.p() {
                if w != v && !sg.adjacent(v, w) {
                    cnt += 1;
                }
            }
            assert_eq!(
                self.nonadj[v as usize], cnt,
                "budget desync at local {v}"
            );
        }
    }

    #[cfg(not(debug_assertions))]
    fn audit(&self, _sg: &SeedGraph) {}
}

/// Reusable buffers for one search; sized to the seed on first use.
#[derive(Default)]
pub struct SearchScratch {
    pc_nonadj: Vec<u32>,
    saturated: Vec<u32>,
    nn_frames: Vec<Vec<u32>>,
}

impl SearchScratch {
    pub fn new() -> SearchScratch {
        SearchScratch::default()
    }
}

/// Runs the pivoted search to completion from the current state. Emits via
/// the delegate every plex that is maximal within the seed subgraph and has
/// at least `params.min_size` members.
pub fn bkpivot_search<D: SearchDelegate>(
    sg: &SeedGraph,
    st: &mut SearchState,
    params: SearchParams,
    scratch: &mut SearchScratch,
    delegate: &mut D,
) {
    scratch.pc_nonadj.resize(sg.member_count(), 0);
    recurse(sg, st, params, scratch, delegate, 0);
}

/// Whether `v` (in C) may join P right now: its own budget holds and every
/// saturated member of P is its neighbor.
fn can_join_p(sg: &SeedGraph, st: &SearchState, k: u32, v: u32) -> bool {
    if st.nonadj_p(v) + 1 > k {
        return false;
    }
    for &w in st.p() {
        if st.nonadj_p(w) == k && !sg.adjacent(v, w) {
            return false;
        }
    }
    true
}

/// Drops C and X members that can no longer join P.
fn filter_extendable(sg: &SeedGraph, st: &mut SearchState, k: u32, saturated: &[u32]) {
    let keep = |st: &SearchState, v: u32| -> bool {
        st.nonadj_p(v) + 1 <= k && saturated.iter().all(|&w| sg.adjacent(v, w))
    };
    for slot in (st.p_end..st.c_end).rev() {
        let v = st.order[slot];
        if !keep(st, v) {
            st.move_c_to_drop(v);
        }
    }
    for slot in (st.c_end..st.x_end).rev() {
        let v = st.order[slot];
        if !keep(st, v) {
            st.move_x_to_drop(v);
        }
    }
}

fn recurse<D: SearchDelegate>(
    sg: &SeedGraph,
    st: &mut SearchState,
    params: SearchParams,
    scratch: &mut SearchScratch,
    delegate: &mut D,
    depth: usize,
) {
    st.audit(sg);
    let k = params.k;
    let entry = st.mark();

    // Saturated members constrain every extension identically; collect
    // once. The filter leaves P alone, so the list stays valid below.
    scratch.saturated.clear();
    scratch
        .saturated
        .extend(st.p().iter().copied().filter(|&v| st.nonadj_p(v) == k));
    filter_extendable(sg, st, k, &scratch.saturated);

    // Nothing below can reach the floor.
    if st.p_len() + st.c_len() < params.min_size as usize {
        st.rewind(sg, entry);
        return;
    }

    if st.c_len() == 0 {
        if st.x_len() == 0 {
            delegate.emit(sg, st.p(), &scratch.saturated);
        }
        st.rewind(sg, entry);
        return;
    }

    // Pivot: the member of P or C with the most non-neighbors counted
    // against P and C together (itself included). Ties prefer P, then the
    // smaller local id.
    let mut pivot = u32::MAX;
    let mut pivot_in_p = false;
    let mut pivot_nonadj = 0u32;
    {
        let SearchScratch { pc_nonadj, .. } = scratch;
        for &v in st.pc() {
            let in_p = st.in_p(v);
            let mut cnt = st.nonadj_p(v);
            for &w in st.c() {
                if w != v && !sg.adjacent(v, w) {
                    cnt += 1;
                }
            }
            if !in_p {
                cnt += 1;
            }
            pc_nonadj[v as usize] = cnt;
            let better = cnt > pivot_nonadj
                || (cnt == pivot_nonadj
                    && ((in_p && !pivot_in_p) || (in_p == pivot_in_p && v < pivot)));
            if pivot == u32::MAX || better {
                pivot = v;
                pivot_in_p = in_p;
                pivot_nonadj = cnt;
            }
        }
    }

    if pivot_nonadj <= k {
        // P and C together already form a k-plex, and it is the only
        // candidate for a maximal one in this subtree: anything smaller is
        // extendable by the leftover candidates. Emit unless X reaches in.
        let SearchScratch {
            pc_nonadj,
            saturated,
            ..
        } = scratch;
        saturated.clear();
        saturated.extend(
            st.pc()
                .iter()
                .copied()
                .filter(|&v| pc_nonadj[v as usize] == k),
        );
        let blocked = st.x().iter().any(|&x| {
            let mut cnt = st.nonadj_p(x);
            for &w in st.c() {
                if !sg.adjacent(x, w) {
                    cnt += 1;
                }
            }
            cnt + 1 <= k && saturated.iter().all(|&w| sg.adjacent(x, w))
        });
        if !blocked {
            delegate.emit(sg, st.pc(), saturated);
        }
        st.rewind(sg, entry);
        return;
    }

    if !pivot_in_p {
        // Two branches: exclude the pivot, then include it.
        let mark = st.mark();
        st.move_c_to_x(pivot);
        descend(sg, st, params, scratch, delegate, depth);
        st.rewind(sg, mark);

        st.move_c_to_p(sg, pivot);
        descend(sg, st, params, scratch, delegate, depth);
        st.rewind(sg, mark);
    } else {
        // Pivot in P with budget k': branch over its non-neighbor
        // candidates u_1, u_2, ... in ascending (budget, id) order. Branch
        // i excludes u_i with u_1..u_{i-1} included; the last includes
        // u_1..u_k' and excludes the rest.
        let budget = (k - st.nonadj_p(pivot)) as usize;
        debug_assert!(budget >= 1, "a saturated pivot cannot have candidates left");
        let mut nn = match scratch.nn_frames.get_mut(depth) {
            Some(buf) => std::mem::take(buf),
            None => Vec::new(),
        };
        nn.clear();
        nn.extend(st.c().iter().copied().filter(|&v| !sg.adjacent(pivot, v)));
        nn.sort_unstable_by_key(|&v| (st.nonadj_p(v), v));
        debug_assert!(nn.len() > budget, "a non-exit pivot exceeds its budget");

        let take = budget.min(nn.len());
        let mark = st.mark();
        let mut aborted = false;
        for i in 0..take {
            if i > 0 {
                let prev = nn[i - 1];
                if !can_join_p(sg, st, k, prev) {
                    // P plus u_1..u_{i-1} is not a k-plex; every remaining
                    // branch would contain it, so none can emit.
                    aborted = true;
                    break;
                }
                st.move_c_to_p(sg, prev);
            }
            let sub = st.mark();
            st.move_c_to_x(nn[i]);
            descend(sg, st, params, scratch, delegate, depth);
            st.rewind(sg, sub);
        }
        if !aborted && can_join_p(sg, st, k, nn[take - 1]) {
            st.move_c_to_p(sg, nn[take - 1]);
            for &v in &nn[take..] {
                st.move_c_to_x(v);
            }
            descend(sg, st, params, scratch, delegate, depth);
        }
        st.rewind(sg, mark);

        if scratch.nn_frames.len() <= depth {
            scratch.nn_frames.resize_with(depth + 1, Vec::new);
        }
        scratch.nn_frames[depth] = nn;
    }

    st.rewind(sg, entry);
}

fn descend<D: SearchDelegate>(
    sg: &SeedGraph,
    st: &mut SearchState,
    params: SearchParams,
    scratch: &mut SearchScratch,
    delegate: &mut D,
    depth: usize,
) {
    if delegate.try_offload(sg, st) {
        return;
    }
    recurse(sg, st, params, scratch, delegate, depth + 1);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{degeneracy_order, Graph};
    use crate::seed::build_seed_graph;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type Snap = (Vec<u32>, Vec<u32>, Vec<u32>, Vec<(u32, u32)>);

    fn snap(st: &SearchState) -> Snap {
        let sorted = |s: &[u32]| {
            let mut v = s.to_vec();
            v.sort_unstable();
            v
        };
        let live = st.order[..st.x_end]
            .iter()
            .map(|&v| (v, st.nonadj[v as usize]))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        (sorted(st.p()), sorted(st.c()), sorted(st.x()), live)
    }

    struct Collect {
        out: Vec<Vec<u32>>,
    }

    impl SearchDelegate for Collect {
        fn emit(&mut self, sg: &SeedGraph, locals: &[u32], _saturated: &[u32]) {
            let mut g: Vec<u32> = locals.iter().map(|&l| sg.members()[l as usize]).collect();
            g.sort_unstable();
            self.out.push(g);
        }
    }

    /// Claims every child call, recording its partition; emissions forbidden.
    struct Claim {
        calls: Vec<(Vec<u32>, Vec<u32>, Vec<u32>)>,
    }

    impl SearchDelegate for Claim {
        fn emit(&mut self, _sg: &SeedGraph, locals: &[u32], _saturated: &[u32]) {
            panic!("unexpected emission {locals:?}");
        }

        fn try_offload(&mut self, _sg: &SeedGraph, st: &SearchState) -> bool {
            let sorted = |s: &[u32]| {
                let mut v = s.to_vec();
                v.sort_unstable();
                v
            };
            self.calls.push((sorted(st.p()), sorted(st.c()), sorted(st.x())));
            true
        }
    }

    fn run(
        sg: &SeedGraph,
        seed: &[u32],
        k: u32,
        min_size: u32,
    ) -> Vec<Vec<u32>> {
        let mut st = SearchState::init(sg, seed);
        let mut scratch = SearchScratch::new();
        let mut del = Collect { out: Vec::new() };
        bkpivot_search(sg, &mut st, SearchParams { k, min_size }, &mut scratch, &mut del);
        assert_eq!(st.log.len(), 0, "search must rewind everything it does");
        del.out
    }

    #[test]
    fn init_lays_out_partitions() {
        let sg = SeedGraph::synthetic(8, 4, &[(0, 1), (0, 2), (5, 6), (1, 7)]);
        let st = SearchState::init(&sg, &[5, 7]);
        let mut p = st.p().to_vec();
        p.sort_unstable();
        assert_eq!(p, vec![0, 5, 7]);
        let mut c = st.c().to_vec();
        c.sort_unstable();
        assert_eq!(c, vec![1, 2, 3, 4]);
        assert_eq!(st.x(), &[6]);
        // 0 misses 5 and 7; 1 is adjacent to 0 and 7 but not 5; 6 is
        // adjacent to 5 only and sits outside P, so no self count.
        assert_eq!(st.nonadj_p(0), 3);
        assert_eq!(st.nonadj_p(1), 1);
        assert_eq!(st.nonadj_p(6), 2);
        st.audit(&sg);
    }

    #[test]
    fn undo_restores_partitions() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..20 {
            let m = 12u32;
            let mut edges = Vec::new();
            for a in 0..m {
                for b in a + 1..m {
                    if rng.random_bool(0.5) {
                        edges.push((a, b));
                    }
                }
            }
            let sg = SeedGraph::synthetic(m, 6, &edges);
            let seed: Vec<u32> = (7..m).filter(|_| rng.random_bool(0.3)).collect();
            let mut st = SearchState::init(&sg, &seed);
            st.audit(&sg);
            let base = snap(&st);

            let mut stack: Vec<(usize, Snap)> = Vec::new();
            for _ in 0..60 {
                if rng.random_bool(0.25) {
                    stack.push((st.mark(), snap(&st)));
                }
                let mut options: Vec<u8> = Vec::new();
                if st.c_len() > 0 {
                    options.extend([0, 1]);
                }
                if st.x_len() > 0 {
                    options.push(2);
                }
                if options.is_empty() {
                    break;
                }
                match options[rng.random_range(0..options.len())] {
                    0 => {
                        let v = st.c()[rng.random_range(0..st.c_len())];
                        st.move_c_to_p(&sg, v);
                    }
                    1 => {
                        let v = st.c()[rng.random_range(0..st.c_len())];
                        st.move_c_to_x(v);
                    }
                    _ => {
                        let v = st.x()[rng.random_range(0..st.x_len())];
                        st.move_x_to_drop(v);
                    }
                }
                st.audit(&sg);
            }
            while let Some((mark, expected)) = stack.pop() {
                st.rewind(&sg, mark);
                st.audit(&sg);
                assert_eq!(snap(&st), expected);
            }
            st.rewind(&sg, 0);
            assert_eq!(snap(&st), base);
        }
    }

    #[test]
    fn clique_exits_with_everything() {
        let sg = SeedGraph::synthetic(
            4,
            3,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        );
        assert_eq!(run(&sg, &[], 1, 0), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn cycle_seed_sets_split_the_work() {
        // 5-cycle, anchor 0: one seed set per triple through the anchor.
        let g = Graph::from_edges([(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let ord = degeneracy_order(&g);
        let sg = build_seed_graph(&g, &ord, 0);
        assert_eq!(sg.members(), &[0, 1, 4, 2, 3]);
        assert_eq!(run(&sg, &[], 2, 3), vec![vec![0, 1, 4]]);
        assert_eq!(run(&sg, &[3], 2, 3), vec![vec![0, 1, 2]]);
        assert_eq!(run(&sg, &[4], 2, 3), vec![vec![0, 3, 4]]);
    }

    #[test]
    fn x_witness_blocks_the_exit_emission() {
        // Anchor 1 of the 5-cycle: {1,2} is a 2-plex inside the seed graph
        // but vertex 3 (in X for the empty seed set) extends it.
        let g = Graph::from_edges([(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let ord = degeneracy_order(&g);
        let sg = build_seed_graph(&g, &ord, 1);
        assert_eq!(sg.members(), &[1, 2, 3, 4]);
        assert_eq!(run(&sg, &[], 2, 0), Vec::<Vec<u32>>::new());
        assert_eq!(run(&sg, &[2], 2, 0), vec![vec![1, 2, 3]]);
        // {1,4} is maximal in the seed graph but below the usual floor.
        assert_eq!(run(&sg, &[3], 2, 0), vec![vec![1, 4]]);
        assert_eq!(run(&sg, &[3], 2, 3), Vec::<Vec<u32>>::new());
    }

    #[test]
    fn pivot_branches_follow_the_budget() {
        // P = {0, 5} with 5 non-adjacent to everything: pivot 5 has budget
        // 2 at k = 4, its non-neighbor candidates are 1,2,3,4, so exactly
        // three branches arise.
        let sg = SeedGraph::synthetic(
            6,
            4,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 4),
            ],
        );
        let mut st = SearchState::init(&sg, &[5]);
        let mut scratch = SearchScratch::new();
        let mut del = Claim { calls: Vec::new() };
        bkpivot_search(
            &sg,
            &mut st,
            SearchParams { k: 4, min_size: 0 },
            &mut scratch,
            &mut del,
        );
        assert_eq!(
            del.calls,
            vec![
                (vec![0, 5], vec![2, 3, 4], vec![1]),
                (vec![0, 1, 5], vec![3, 4], vec![2]),
                (vec![0, 1, 2, 5], vec![], vec![3, 4]),
            ]
        );
        assert_eq!(st.log.len(), 0);
        assert_eq!((st.p_len(), st.c_len(), st.x_len()), (2, 4, 0));
    }

    #[test]
    fn branch_past_a_budget_stops_the_rest() {
        // After branch two moves 1 into P, 1 is saturated and non-adjacent
        // to 2, so the final branch (which would add 2) must not run.
        let sg = SeedGraph::synthetic(
            8,
            4,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (5, 6),
                (5, 7),
                (6, 7),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 4),
            ],
        );
        let mut st = SearchState::init(&sg, &[5, 6, 7]);
        let mut scratch = SearchScratch::new();
        let mut del = Claim { calls: Vec::new() };
        bkpivot_search(
            &sg,
            &mut st,
            SearchParams { k: 4, min_size: 0 },
            &mut scratch,
            &mut del,
        );
        assert_eq!(
            del.calls,
            vec![
                (vec![0, 5, 6, 7], vec![2, 3, 4], vec![1]),
                (vec![0, 1, 5, 6, 7], vec![3, 4], vec![2]),
            ]
        );
        assert_eq!((st.p_len(), st.c_len(), st.x_len()), (4, 4, 0));
    }
}
