//! Run orchestration: the two enumeration passes, anchor tasks, and
//! work splitting across a thread pool.
//!
//! Every vertex of the degeneracy order becomes one anchor task listing the
//! maximal plexes led by that vertex. Anchor tasks are spawned in order
//! into a FIFO pool scope, which keeps early (usually heavy) anchors ahead
//! of the tail. A task that still has a deep subtree left when the pool
//! runs short of work forks its current branch into a fresh task instead of
//! recursing, so stragglers spread across idle threads.

use std::sync::atomic::{AtomicU32, AtomicU64, AtomicUsize, Ordering};
use std::sync::Arc;

use crossbeam_utils::CachePadded;
use rayon::ScopeFifo;
use thiserror::Error;

use crate::graph::{degeneracy_order, DegeneracyOrder, Graph, VertexId};
use crate::search::{
    bkpivot_search, SearchDelegate, SearchParams, SearchScratch, SearchState,
};
use crate::seed::{
    build_bipartite_with, build_seed, for_each_seed_set, globally_maximal_with, BipartiteView,
    SeedGraph, SeedParams, SeedScratch,
};
use crate::sink::PlexSink;
use crate::smallplex::list_small_plexes;

/// What to enumerate and how to run it.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub k: u32,
    /// Smallest plex to report. Zero lists every maximal k-plex; any other
    /// value must be at least `2k - 1`.
    pub min_size: u32,
    /// Worker threads; zero picks the available parallelism.
    pub threads: usize,
    /// Branches with more than this many candidates may be forked to idle
    /// threads.
    pub split_threshold: usize,
    /// Shrink seed subgraphs with the size-floor counting rule.
    pub prune_seeds: bool,
    /// Skip seed sets whose members share too few candidates.
    pub prune_pairs: bool,
    /// Tally plexes without materializing them in the sink.
    pub count_only: bool,
}

impl RunConfig {
    pub fn new(k: u32) -> RunConfig {
        RunConfig {
            k,
            min_size: 0,
            threads: 0,
            split_threshold: 10,
            prune_seeds: true,
            prune_pairs: true,
            count_only: false,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("min size {min_size} is below 2k - 1 = {floor}; pass 0 to list every maximal k-plex")]
    MinSizeBelowFloor { min_size: u32, floor: u32 },
    #[error("could not build the worker pool: {0}")]
    ThreadPool(String),
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.k == 0 {
            return Err(ConfigError::ZeroK);
        }
        let floor = 2 * self.k as u64 - 1;
        if self.min_size != 0 && (self.min_size as u64) < floor {
            return Err(ConfigError::MinSizeBelowFloor {
                min_size: self.min_size,
                floor: floor.min(u32::MAX as u64) as u32,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunSummary {
    pub plexes: u64,
    /// Largest plex seen; zero when none were.
    pub max_size: u32,
}

/// Per-thread counters, one cache line each, summed at the end.
struct Tally {
    shards: Vec<CachePadded<TallyShard>>,
}

#[derive(Default)]
struct TallyShard {
    count: AtomicU64,
    max: AtomicU32,
}

impl Tally {
    fn new(workers: usize) -> Tally {
        Tally {
            shards: (0..workers + 1)
                .map(|_| CachePadded::new(TallyShard::default()))
                .collect(),
        }
    }

    fn record(&self, size: usize) {
        let last = self.shards.len() - 1;
        let i = rayon::current_thread_index().map_or(last, |i| i.min(last));
        let shard = &self.shards[i];
        shard.count.fetch_add(1, Ordering::Relaxed);
        shard.max.fetch_max(size as u32, Ordering::Relaxed);
    }

    fn totals(&self) -> (u64, u32) {
        self.shards.iter().fold((0, 0), |(c, m), s| {
            (
                c + s.count.load(Ordering::Relaxed),
                m.max(s.max.load(Ordering::Relaxed)),
            )
        })
    }
}

/// Counts everything the bounded small-plex pass reports, forwarding to the
/// real sink unless the run is count-only.
struct CountingSink<'a> {
    tally: &'a Tally,
    inner: Option<&'a dyn PlexSink>,
}

impl PlexSink for CountingSink<'_> {
    fn accept(&self, plex: &[VertexId]) {
        self.tally.record(plex.len());
        if let Some(sink) = self.inner {
            sink.accept(plex);
        }
    }
}

/// Everything a task needs, shared by reference across the pool scope.
struct Env<'e> {
    g: &'e Graph,
    ord: &'e DegeneracyOrder,
    tally: &'e Tally,
    sink: Option<&'e dyn PlexSink>,
    /// Tasks spawned but not finished; the pool is short of work while this
    /// is below the worker count.
    outstanding: &'e AtomicUsize,
    workers: usize,
    split_threshold: usize,
    may_split: bool,
    seed_params: SeedParams,
    search: SearchParams,
    prune_pairs: bool,
}

/// One anchor's decomposition, shared with any tasks forked from it.
struct SeedData {
    sg: SeedGraph,
    bv: BipartiteView,
}

/// Reusable per-thread state; tasks of all kinds borrow it for their whole
/// run, which is safe because a task never yields to the pool mid-search.
#[derive(Default)]
struct TaskScratch {
    seed: SeedScratch,
    search: SearchScratch,
    state: SearchState,
    buf: Vec<VertexId>,
}

thread_local! {
    static SCRATCH: std::cell::RefCell<TaskScratch> =
        std::cell::RefCell::new(TaskScratch::default());
}

struct EmitCtx<'a, 's> {
    scope: &'a ScopeFifo<'s>,
    env: &'s Env<'s>,
    data: &'a Arc<SeedData>,
    buf: &'a mut Vec<VertexId>,
}

impl SearchDelegate for EmitCtx<'_, '_> {
    fn emit(&mut self, sg: &SeedGraph, locals: &[u32], saturated: &[u32]) {
        debug_assert!(locals.len() >= self.env.search.min_size as usize);
        if !globally_maximal_with(&self.data.bv, locals, saturated, self.env.search.k) {
            return;
        }
        self.env.tally.record(locals.len());
        if let Some(sink) = self.env.sink {
            self.buf.clear();
            self.buf
                .extend(locals.iter().map(|&l| sg.members()[l as usize]));
            self.buf.sort_unstable();
            sink.accept(self.buf);
        }
    }

    fn try_offload(&mut self, _sg: &SeedGraph, st: &SearchState) -> bool {
        let env = self.env;
        if !env.may_split || st.c_len() <= env.split_threshold {
            return false;
        }
        if env.outstanding.load(Ordering::Relaxed) >= env.workers {
            return false;
        }
        env.outstanding.fetch_add(1, Ordering::Relaxed);
        let data = Arc::clone(self.data);
        let fork = st.fork();
        self.scope
            .spawn_fifo(move |scope| run_subtask(scope, env, data, fork));
        true
    }
}

fn run_subtask<'s>(
    scope: &ScopeFifo<'s>,
    env: &'s Env<'s>,
    data: Arc<SeedData>,
    mut st: SearchState,
) {
    SCRATCH.with(|cell| {
        let ts = &mut *cell.borrow_mut();
        let TaskScratch { search, buf, .. } = ts;
        let mut ctx = EmitCtx {
            scope,
            env,
            data: &data,
            buf: &mut *buf,
        };
        bkpivot_search(&data.sg, &mut st, env.search, search, &mut ctx);
    });
    env.outstanding.fetch_sub(1, Ordering::Relaxed);
}

fn process_anchor<'s>(scope: &ScopeFifo<'s>, env: &'s Env<'s>, anchor: VertexId) {
    SCRATCH.with(|cell| {
        let ts = &mut *cell.borrow_mut();
        let TaskScratch {
            seed,
            search,
            state,
            buf,
        } = ts;
        let Some(sg) = build_seed(env.g, env.ord, anchor, &env.seed_params, seed) else {
            return;
        };
        let bv = build_bipartite_with(env.g, env.ord, &sg, seed);
        let data = Arc::new(SeedData { sg, bv });
        for_each_seed_set(
            &data.sg,
            env.search.k,
            env.seed_params.min_size,
            env.prune_pairs,
            |s| {
                state.reset(&data.sg, s);
                let mut ctx = EmitCtx {
                    scope,
                    env,
                    data: &data,
                    buf: &mut *buf,
                };
                bkpivot_search(&data.sg, &mut *state, env.search, &mut *search, &mut ctx);
            },
        );
    });
    env.outstanding.fetch_sub(1, Ordering::Relaxed);
}

/// Lists every maximal k-plex of `g` into `sink`, subject to the size floor
/// and execution knobs in `config`. Plexes arrive as sorted internal vertex
/// ids, from whichever thread found them.
pub fn run(g: &Graph, config: &RunConfig, sink: &dyn PlexSink) -> Result<RunSummary, ConfigError> {
    config.validate()?;
    let k = config.k;
    let floor = (2 * k as u64 - 1).min(u32::MAX as u64) as u32;
    let need = config.min_size.max(floor);
    let workers = if config.threads == 0 {
        std::thread::available_parallelism().map_or(1, |n| n.get())
    } else {
        config.threads
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        // Deep, narrow subtrees recurse once per candidate.
        .stack_size(32 << 20)
        .build()
        .map_err(|e| ConfigError::ThreadPool(e.to_string()))?;

    let ord = degeneracy_order(g);
    let tally = Tally::new(workers);
    let sink_opt: Option<&dyn PlexSink> = if config.count_only { None } else { Some(sink) };
    let outstanding = AtomicUsize::new(0);
    let env = Env {
        g,
        ord: &ord,
        tally: &tally,
        sink: sink_opt,
        outstanding: &outstanding,
        workers,
        split_threshold: config.split_threshold,
        may_split: workers > 1,
        seed_params: SeedParams {
            k,
            min_size: need,
            prune_graph: config.prune_seeds,
        },
        search: SearchParams { k, min_size: need },
        prune_pairs: config.prune_pairs,
    };

    pool.install(|| {
        // Plexes below 2k - 1 vertices escape the decomposition's
        // connectivity guarantees; a bounded pass covers them when the
        // caller asked for everything.
        if config.min_size == 0 {
            let counting = CountingSink {
                tally: &tally,
                inner: sink_opt,
            };
            list_small_plexes(g, k, &counting);
        }
        let envr = &env;
        rayon::scope_fifo(|scope| {
            for &anchor in envr.ord.order() {
                envr.outstanding.fetch_add(1, Ordering::Relaxed);
                scope.spawn_fifo(move |s| process_anchor(s, envr, anchor));
            }
        });
    });

    let (plexes, max_size) = tally.totals();
    Ok(RunSummary { plexes, max_size })
}
