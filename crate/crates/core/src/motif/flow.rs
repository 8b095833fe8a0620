//! Small integral max-flow (Edmonds–Karp) and a lower-bounded feasibility
//! wrapper.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
}

impl FlowNetwork {
    pub(crate) fn new(n: usize) -> Self {
        FlowNetwork { head: vec![Vec::new(); n], to: Vec::new(), cap: Vec::new() }
    }

    /// Adds `u -> v` and returns its edge id.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize, cap: i64) -> usize {
        let id = self.to.len();
        self.head[u].push(id);
        self.to.push(v);
        self.cap.push(cap);
        self.head[v].push(id + 1);
        self.to.push(u);
        self.cap.push(0);
        id
    }

    /// Flow currently carried by edge `id`.
    pub(crate) fn flow(&self, id: usize) -> i64 {
        self.cap[id ^ 1]
    }

    pub(crate) fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let n = self.head.len();
        let mut total = 0;
        loop {
            let mut via = vec![usize::MAX; n];
            let mut queue = VecDeque::from([s]);
            let mut reached = vec![false; n];
            reached[s] = true;
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for &e in &self.head[u] {
                    let v = self.to[e];
                    if self.cap[e] > 0 && !reached[v] {
                        reached[v] = true;
                        via[v] = e;
                        queue.push_back(v);
                    }
                }
            }
            if !reached[t] {
                return total;
            }
            let mut push = i64::MAX;
            let mut v = t;
            while v != s {
                let e = via[v];
                push = push.min(self.cap[e]);
                v = self.to[e ^ 1];
            }
            let mut v = t;
            while v != s {
                let e = via[v];
                self.cap[e] -= push;
                self.cap[e ^ 1] += push;
                v = self.to[e ^ 1];
            }
            total += push;
        }
    }
}

/// Network with per-edge lower bounds, solved through the standard
/// super-source/super-sink transformation.
pub(crate) struct BoundedFlow {
    net: FlowNetwork,
    excess: Vec<i64>,
    lower: Vec<i64>,
    ids: Vec<usize>,
    nodes: usize,
}

impl BoundedFlow {
    pub(crate) fn new(n: usize) -> Self {
        BoundedFlow { net: FlowNetwork::new(n + 2), excess: vec![0; n], lower: Vec::new(), ids: Vec::new(), nodes: n }
    }

    /// Edge with flow constrained to `[lo, hi]`; returns a handle.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize, lo: i64, hi: i64) -> usize {
        debug_assert!(0 <= lo && lo <= hi);
        let id = self.net.add_edge(u, v, hi - lo);
        self.excess[v] += lo;
        self.excess[u] -= lo;
        self.lower.push(lo);
        self.ids.push(id);
        self.ids.len() - 1
    }

    /// Whether a circulation satisfying all bounds exists; on success the
    /// flow values are available through [`BoundedFlow::flow`].
    pub(crate) fn feasible(&mut self) -> bool {
        let (ss, tt) = (self.nodes, self.nodes + 1);
        let mut demand = 0;
        for v in 0..self.nodes {
            let e = self.excess[v];
            if e > 0 {
                self.net.add_edge(ss, v, e);
                demand += e;
            } else if e < 0 {
                self.net.add_edge(v, tt, -e);
            }
        }
        self.net.max_flow(ss, tt) == demand
    }

    pub(crate) fn flow(&self, handle: usize) -> i64 {
        self.lower[handle] + self.net.flow(self.ids[handle])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn max_flow_on_a_diamond() {
        let mut f = FlowNetwork::new(4);
        f.add_edge(0, 1, 3);
        f.add_edge(0, 2, 2);
        f.add_edge(1, 3, 2);
        f.add_edge(2, 3, 3);
        f.add_edge(1, 2, 1);
        assert_eq!(f.max_flow(0, 3), 5);
    }

    #[test]
    fn lower_bounds() {
        // circulation s -> a -> t -> s where a must carry at least 2 but t->s at most 1
        let mut b = BoundedFlow::new(3);
        b.add_edge(0, 1, 2, 5);
        b.add_edge(1, 2, 0, 5);
        b.add_edge(2, 0, 0, 1);
        assert!(!b.feasible());
        let mut b = BoundedFlow::new(3);
        let h = b.add_edge(0, 1, 2, 5);
        b.add_edge(1, 2, 0, 5);
        b.add_edge(2, 0, 0, 3);
        assert!(b.feasible());
        assert!(b.flow(h) >= 2);
    }
}
