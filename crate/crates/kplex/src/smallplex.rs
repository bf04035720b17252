//! Enumeration of maximal k-plexes with at most `2k - 2` vertices.
//!
//! Plexes this small may be disconnected or have diameter above two, so the
//! anchored decomposition used for large plexes does not apply. A bounded
//! set-enumeration over the whole vertex set covers them instead: the
//! recursion never grows the partial set past `2k - 2`, and at that depth it
//! only decides maximality.

use crate::graph::{Graph, VertexId};
use crate::sink::PlexSink;

/// Whether the vertex set `members` induces a k-plex: every member is
/// adjacent to all but at most `k` members, counting itself.
pub fn is_kplex(g: &Graph, members: &[VertexId], k: u32) -> bool {
    for &v in members {
        let mut nonadj = 0;
        for &w in members {
            if w != v && !g.has_edge(v, w) {
                nonadj += 1;
            }
        }
        if nonadj + 1 > k {
            return false;
        }
    }
    true
}

/// Adjacency probe with an optional dense bit-matrix fast path.
struct AdjProbe<'g> {
    g: &'g Graph,
    words: usize,
    bits: Vec<u64>,
}

const DENSE_LIMIT: usize = 8192;

impl<'g> AdjProbe<'g> {
    fn new(g: &'g Graph) -> AdjProbe<'g> {
        let n = g.vertex_count();
        let (words, bits) = if n <= DENSE_LIMIT && n > 0 {
            let words = n.div_ceil(64);
            let mut bits = vec![0u64; words * n];
            for v in 0..n as VertexId {
                let row = v as usize * words;
                for &u in g.neighbors(v) {
                    bits[row + u as usize / 64] |= 1 << (u % 64);
                }
            }
            (words, bits)
        } else {
            (0, Vec::new())
        };
        AdjProbe { g, words, bits }
    }

    #[inline]
    fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        if self.words > 0 {
            self.bits[u as usize * self.words + v as usize / 64] & (1 << (v % 64)) != 0
        } else {
            self.g.has_edge(u, v)
        }
    }
}

#[derive(Default)]
struct Frame {
    cand: Vec<VertexId>,
    excl: Vec<VertexId>,
}

struct SmallSearch<'g, 's> {
    adj: AdjProbe<'g>,
    k: u32,
    limit: usize,
    sink: &'s dyn PlexSink,
    p: Vec<VertexId>,
    // Per-member non-adjacency counts within p, counting self; parallel to p.
    nonadj: Vec<u32>,
    saturated: Vec<VertexId>,
    frames: Vec<Frame>,
}

/// Emits every maximal k-plex of `g` with at most `2k - 2` vertices, as
/// sorted internal ids. For `k = 1` the bound is empty and nothing is
/// emitted. Children are explored in ascending internal id, so emission
/// order is deterministic.
pub fn list_small_plexes(g: &Graph, k: u32, sink: &dyn PlexSink) {
    if k <= 1 {
        return;
    }
    let limit = (2 * k - 2) as usize;
    let n = g.vertex_count();
    if n == 0 {
        return;
    }
    let mut search = SmallSearch {
        adj: AdjProbe::new(g),
        k,
        limit,
        sink,
        p: Vec::with_capacity(limit),
        nonadj: Vec::with_capacity(limit),
        saturated: Vec::with_capacity(limit),
        frames: (0..=limit).map(|_| Frame::default()).collect(),
    };
    let all: Vec<VertexId> = (0..n as VertexId).collect();
    search.recurse(&all, &[], &[]);
}

impl<'g, 's> SmallSearch<'g, 's> {
    /// Refreshes `nonadj` and `saturated` for the current `p`.
    fn refresh_budgets(&mut self) {
        self.nonadj.clear();
        self.saturated.clear();
        for &v in &self.p {
            let mut cnt = 1;
            for &w in &self.p {
                if w != v && !self.adj.adjacent(v, w) {
                    cnt += 1;
                }
            }
            debug_assert!(cnt <= self.k, "p must stay a k-plex");
            self.nonadj.push(cnt);
            if cnt == self.k {
                self.saturated.push(v);
            }
        }
    }

    /// Whether `p + {v}` is still a k-plex, given refreshed budgets.
    fn extendable(&self, v: VertexId) -> bool {
        let mut cnt = 1;
        for (i, &w) in self.p.iter().enumerate() {
            if !self.adj.adjacent(v, w) {
                if self.nonadj[i] == self.k {
                    return false;
                }
                cnt += 1;
                if cnt > self.k {
                    return false;
                }
            }
        }
        true
    }

    /// Whether any vertex in the three sorted id lists extends `p`.
    ///
    /// With a saturated member every extension must be one of its
    /// neighbors, so scanning the shortest such adjacency row and testing
    /// membership beats scanning the candidate lists themselves.
    fn any_extendable(&self, cand: &[VertexId], xa: &[VertexId], xb: &[VertexId]) -> bool {
        if self.saturated.is_empty() {
            return cand
                .iter()
                .chain(xa)
                .chain(xb)
                .any(|&v| self.extendable(v));
        }
        let w0 = *self
            .saturated
            .iter()
            .min_by_key(|&&w| self.adj.g.degree(w))
            .unwrap();
        for &v in self.adj.g.neighbors(w0) {
            let present = cand.binary_search(&v).is_ok()
                || xa.binary_search(&v).is_ok()
                || xb.binary_search(&v).is_ok();
            if present && self.extendable(v) {
                return true;
            }
        }
        false
    }

    fn emit(&mut self) {
        debug_assert!(self.p.windows(2).all(|w| w[0] < w[1]));
        self.sink.accept(&self.p);
    }

    /// `cand` holds candidates not yet branched on; `xa` and `xb` are the
    /// two sorted halves of the exclusion set (prior-level exclusions and
    /// already-branched siblings). All three are ascending internal ids and
    /// pairwise disjoint from `p`.
    fn recurse(&mut self, cand: &[VertexId], xa: &[VertexId], xb: &[VertexId]) {
        self.refresh_budgets();

        if self.p.len() == self.limit {
            if !self.any_extendable(cand, xa, xb) {
                self.emit();
            }
            return;
        }

        let depth = self.p.len();
        let mut frame = std::mem::take(&mut self.frames[depth]);
        frame.cand.clear();
        frame.cand.extend(cand.iter().filter(|&&v| self.extendable(v)));
        frame.excl.clear();
        merge_filtered(xa, xb, &mut frame.excl, |v| self.extendable(v));

        if frame.cand.is_empty() {
            if frame.excl.is_empty() && !self.p.is_empty() {
                self.emit();
            }
            self.frames[depth] = frame;
            return;
        }

        for i in 0..frame.cand.len() {
            let u = frame.cand[i];
            self.p.push(u);
            self.recurse(&frame.cand[i + 1..], &frame.excl, &frame.cand[..i]);
            self.p.pop();
        }
        self.frames[depth] = frame;
    }
}

/// Merges two sorted id lists into `out`, keeping elements passing `keep`.
fn merge_filtered<F: Fn(VertexId) -> bool>(
    a: &[VertexId],
    b: &[VertexId],
    out: &mut Vec<VertexId>,
    keep: F,
) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i] < b[j]);
        let v = if take_a {
            let v = a[i];
            i += 1;
            v
        } else {
            let v = b[j];
            j += 1;
            v
        };
        if keep(v) {
            out.push(v);
        }
    }
}
