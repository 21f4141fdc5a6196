//! Dinic max-flow on small integer networks.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    rev: usize,
    cap: i64,
}

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    adj: Vec<Vec<Arc>>,
}

/// Handle to a forward arc, for reading its flow after `max_flow`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ArcId {
    from: usize,
    idx: usize,
    cap: i64,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); nodes],
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> ArcId {
        let idx = self.adj[from].len();
        let rev = self.adj[to].len() + usize::from(from == to);
        self.adj[from].push(Arc { to, rev, cap });
        self.adj[to].push(Arc {
            to: from,
            rev: idx,
            cap: 0,
        });
        ArcId { from, idx, cap }
    }

    pub fn flow_on(&self, id: ArcId) -> i64 {
        id.cap - self.adj[id.from][id.idx].cap
    }

    pub fn max_flow(&mut self, source: usize, sink: usize) -> i64 {
        let n = self.adj.len();
        let mut total = 0;
        loop {
            let mut level = vec![-1i64; n];
            level[source] = 0;
            let mut queue = VecDeque::from([source]);
            while let Some(v) = queue.pop_front() {
                for a in &self.adj[v] {
                    if a.cap > 0 && level[a.to] < 0 {
                        level[a.to] = level[v] + 1;
                        queue.push_back(a.to);
                    }
                }
            }
            if level[sink] < 0 {
                return total;
            }
            let mut next = vec![0usize; n];
            loop {
                let pushed = self.augment(source, sink, i64::MAX, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    fn augment(&mut self, v: usize, sink: usize, limit: i64, level: &[i64], next: &mut [usize]) -> i64 {
        if v == sink {
            return limit;
        }
        while next[v] < self.adj[v].len() {
            let i = next[v];
            let Arc { to, cap, rev } = self.adj[v][i];
            if cap > 0 && level[to] == level[v] + 1 {
                let pushed = self.augment(to, sink, limit.min(cap), level, next);
                if pushed > 0 {
                    self.adj[v][i].cap -= pushed;
                    self.adj[to][rev].cap += pushed;
                    return pushed;
                }
            }
            next[v] += 1;
        }
        0
    }
}
