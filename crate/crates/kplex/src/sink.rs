//! Emission targets for discovered plexes.

use std::io::{self, Write};
use std::sync::Mutex;

use crossbeam_utils::CachePadded;

use crate::graph::{Graph, VertexId};

/// Receives maximal plexes as they are found.
///
/// `accept` gets the member set as internal ids sorted ascending. It may be
/// called concurrently from many worker threads, so implementations
/// synchronize internally.
pub trait PlexSink: Sync {
    fn accept(&self, plex: &[VertexId]);
}

/// Discards everything; used when only counts are wanted.
pub struct NullSink;

impl PlexSink for NullSink {
    fn accept(&self, _plex: &[VertexId]) {}
}

/// Collects plexes into memory, for tests and small runs.
#[derive(Default)]
pub struct VecSink {
    inner: Mutex<Vec<Vec<VertexId>>>,
}

impl VecSink {
    pub fn new() -> VecSink {
        VecSink::default()
    }

    pub fn len(&self) -> usize {
        self.inner.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Drains the collected plexes in canonical order (sorted as vertex
    /// lists), so results from differently scheduled runs compare equal.
    pub fn take_sorted(&self) -> Vec<Vec<VertexId>> {
        let mut all = std::mem::take(&mut *self.inner.lock().unwrap());
        all.sort_unstable();
        all
    }
}

impl PlexSink for VecSink {
    fn accept(&self, plex: &[VertexId]) {
        self.inner.lock().unwrap().push(plex.to_vec());
    }
}

const FLUSH_BYTES: usize = 1 << 20;

enum WriterMode {
    /// Shard-buffered pass-through; line order depends on scheduling.
    Stream {
        shards: Vec<CachePadded<Mutex<String>>>,
    },
    /// Collects every line and emits them byte-sorted at the end.
    Collect {
        shards: Vec<CachePadded<Mutex<Vec<String>>>>,
    },
}

/// Formats each plex as its original (external) labels, space-separated and
/// sorted ascending, one line per plex.
pub struct LineWriterSink<'g, W: Write + Send> {
    graph: &'g Graph,
    mode: WriterMode,
    out: Mutex<W>,
    error: Mutex<Option<io::Error>>,
}

impl<'g, W: Write + Send> LineWriterSink<'g, W> {
    /// `shards` should be at least the number of worker threads; one extra
    /// slot serves callers outside the worker pool. `sorted` selects the
    /// collect-and-sort mode, which holds all output in memory.
    pub fn new(graph: &'g Graph, out: W, shards: usize, sorted: bool) -> Self {
        let slots = shards.max(1) + 1;
        let mode = if sorted {
            WriterMode::Collect {
                shards: (0..slots).map(|_| CachePadded::new(Mutex::new(Vec::new()))).collect(),
            }
        } else {
            WriterMode::Stream {
                shards: (0..slots).map(|_| CachePadded::new(Mutex::new(String::new()))).collect(),
            }
        };
        LineWriterSink {
            graph,
            mode,
            out: Mutex::new(out),
            error: Mutex::new(None),
        }
    }

    fn shard_index(&self, slots: usize) -> usize {
        rayon::current_thread_index()
            .map(|i| i % (slots - 1))
            .unwrap_or(slots - 1)
    }

    fn format_line(&self, plex: &[VertexId]) -> String {
        let mut labels: Vec<u64> = plex.iter().map(|&v| self.graph.original_id(v)).collect();
        labels.sort_unstable();
        let mut line = String::with_capacity(labels.len() * 8);
        for (i, id) in labels.iter().enumerate() {
            if i > 0 {
                line.push(' ');
            }
            line.push_str(itoa_buf(*id).as_str());
        }
        line
    }

    fn record_error(&self, err: io::Error) {
        let mut slot = self.error.lock().unwrap();
        if slot.is_none() {
            *slot = Some(err);
        }
    }

    /// Flushes buffered output and returns the first write error, if any.
    pub fn finish(self) -> io::Result<()> {
        let mut out = self.out.into_inner().unwrap();
        match self.mode {
            WriterMode::Stream { shards } => {
                for shard in shards {
                    let buf = shard.into_inner().into_inner().unwrap();
                    out.write_all(buf.as_bytes())?;
                }
            }
            WriterMode::Collect { shards } => {
                let mut lines: Vec<String> = Vec::new();
                for shard in shards {
                    lines.append(&mut shard.into_inner().into_inner().unwrap());
                }
                lines.sort_unstable();
                for line in lines {
                    out.write_all(line.as_bytes())?;
                    out.write_all(b"\n")?;
                }
            }
        }
        out.flush()?;
        if let Some(err) = self.error.into_inner().unwrap() {
            return Err(err);
        }
        Ok(())
    }
}

impl<'g, W: Write + Send> PlexSink for LineWriterSink<'g, W> {
    fn accept(&self, plex: &[VertexId]) {
        let line = self.format_line(plex);
        match &self.mode {
            WriterMode::Stream { shards } => {
                let mut buf = shards[self.shard_index(shards.len())].lock().unwrap();
                buf.push_str(&line);
                buf.push('\n');
                if buf.len() >= FLUSH_BYTES {
                    let chunk = std::mem::take(&mut *buf);
                    drop(buf);
                    let mut out = self.out.lock().unwrap();
                    if let Err(err) = out.write_all(chunk.as_bytes()) {
                        self.record_error(err);
                    }
                }
            }
            WriterMode::Collect { shards } => {
                shards[self.shard_index(shards.len())]
                    .lock()
                    .unwrap()
                    .push(line);
            }
        }
    }
}

/// Stack-buffered decimal formatting for u64.
fn itoa_buf(mut value: u64) -> ItoaBuf {
    let mut buf = [0u8; 20];
    let mut pos = buf.len();
    loop {
        pos -= 1;
        buf[pos] = b'0' + (value % 10) as u8;
        value /= 10;
        if value == 0 {
            break;
        }
    }
    ItoaBuf { buf, pos }
}

struct ItoaBuf {
    buf: [u8; 20],
    pos: usize,
}

impl ItoaBuf {
    fn as_str(&self) -> &str {
        std::str::from_utf8(&self.buf[self.pos..]).unwrap()
    }
}
