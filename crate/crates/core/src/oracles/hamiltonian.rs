use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, VertexId};

use super::{Combinations, OracleCertificate, Refutation, Witness};

/// Vertex of a cut, if the (connected) graph has one.
fn articulation_point(adj: &[Vec<VertexId>]) -> Option<VertexId> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let root = 0;
    let mut root_children = 0;
    // (vertex, parent, next neighbour index)
    let mut stack = vec![(root, usize::MAX, 0usize)];
    disc[root] = timer;
    low[root] = timer;
    timer += 1;
    while let Some(&mut (v, parent, ref mut i)) = stack.last_mut() {
        if *i < adj[v].len() {
            let w = adj[v][*i];
            *i += 1;
            if disc[w] == usize::MAX {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                if v == root {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else if w != parent {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if parent != usize::MAX {
                low[parent] = low[parent].min(low[v]);
                if parent != root && low[v] >= disc[parent] {
                    return Some(parent);
                }
            }
        }
    }
    (root_children > 1).then_some(root)
}

struct Search<'a> {
    adj: &'a [Vec<VertexId>],
    n: usize,
    start: VertexId,
    start_adj: Vec<bool>,
    visited: Vec<bool>,
    /// unvisited neighbours of each vertex
    free: Vec<usize>,
    path: Vec<VertexId>,
    nodes: u64,
}

impl Search<'_> {
    fn adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    fn visit(&mut self, v: VertexId) {
        self.visited[v] = true;
        self.path.push(v);
        for &w in &self.adj[v] {
            self.free[w] -= 1;
        }
    }

    fn unvisit(&mut self) {
        let v = self.path.pop().expect("non-empty path");
        self.visited[v] = false;
        for &w in &self.adj[v] {
            self.free[w] += 1;
        }
    }

    /// Every unvisited vertex near the old or new head still has two ways in
    /// and out, and the unvisited part hangs together through the head.
    fn feasible(&self, old_head: VertexId, head: VertexId) -> bool {
        let remaining = self.n - self.path.len();
        let ok = |x: VertexId| {
            self.visited[x]
                || self.free[x] + usize::from(self.start_adj[x]) + usize::from(self.adjacent(x, head))
                    >= 2
        };
        if !self.adj[head].iter().chain(&self.adj[old_head]).all(|&x| ok(x)) {
            return false;
        }
        if !(0..self.n).any(|x| !self.visited[x] && self.start_adj[x]) {
            return false;
        }
        // connectivity of unvisited vertices through the head
        let mut seen = vec![false; self.n];
        let mut stack = vec![head];
        seen[head] = true;
        let mut reached = 0;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !self.visited[w] && !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == remaining
    }

    fn candidates(&self, head: VertexId) -> Vec<VertexId> {
        let mut c: Vec<VertexId> = self.adj[head]
            .iter()
            .copied()
            .filter(|&w| !self.visited[w])
            .collect();
        c.sort_by_key(|&w| (self.free[w], w));
        c
    }

    fn run(&mut self, budget: u64) -> Option<bool> {
        self.visit(self.start);
        let mut frames: Vec<(Vec<VertexId>, usize)> = vec![(self.candidates(self.start), 0)];
        while let Some((cands, idx)) = frames.last_mut() {
            if *idx >= cands.len() {
                frames.pop();
                if !frames.is_empty() {
                    self.unvisit();
                }
                continue;
            }
            let w = cands[*idx];
            *idx += 1;
            self.nodes += 1;
            if self.nodes > budget {
                return None;
            }
            let old_head = *self.path.last().expect("path holds the start");
            self.visit(w);
            if self.path.len() == self.n {
                if self.start_adj[w] {
                    return Some(true);
                }
                self.unvisit();
                continue;
            }
            if !self.feasible(old_head, w) {
                self.unvisit();
                continue;
            }
            frames.push((self.candidates(w), 0));
        }
        Some(false)
    }
}

/// Exact Hamiltonian cycle search.
///
/// Cheap necessary conditions (connectivity, minimum degree two, no cut
/// vertex) are tried first; then a depth-first path extension from a
/// minimum-degree vertex, visiting neighbours with the fewest unvisited
/// neighbours first, pruned on vertex availability and on connectivity of
/// the unvisited part.
pub fn hamiltonian(g: &MultiGraph, budget: u64) -> Result<OracleCertificate> {
    let started = Instant::now();
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::Precondition(format!(
            "Hamiltonicity needs at least 3 vertices, got {n}"
        )));
    }
    if !g.is_connected() {
        return Ok(OracleCertificate::fails(Refutation::Disconnected, 0, started));
    }
    let adj = g.simple_adjacency();
    if let Some(v) = (0..n).find(|&v| adj[v].len() < 2) {
        return Ok(OracleCertificate::fails(
            Refutation::LowDegree {
                vertex: v,
                degree: adj[v].len(),
            },
            0,
            started,
        ));
    }
    if let Some(v) = articulation_point(&adj) {
        return Ok(OracleCertificate::fails(Refutation::CutVertex { vertex: v }, 0, started));
    }
    let start = (0..n).min_by_key(|&v| (adj[v].len(), v)).expect("n >= 3");
    let mut start_adj = vec![false; n];
    for &w in &adj[start] {
        start_adj[w] = true;
    }
    let mut search = Search {
        adj: &adj,
        n,
        start,
        start_adj,
        visited: vec![false; n],
        free: adj.iter().map(Vec::len).collect(),
        path: Vec::with_capacity(n),
        nodes: 0,
    };
    Ok(match search.run(budget) {
        Some(true) => {
            let order = search.path.clone();
            OracleCertificate::holds(Witness::Cycle { order }, search.nodes, started)
        }
        Some(false) => OracleCertificate::fails(Refutation::Exhausted, search.nodes, started),
        None => OracleCertificate::undetermined(search.nodes, started),
    })
}

const CYCLE_CACHE: usize = 32;

/// A Hamiltonian cycle of `g - removed` obtained from `cycle` by skipping
/// the removed vertices. If that leaves a single gap, the resulting path
/// `p_0 .. p_k` is closed by one rotation: `p_0 .. p_i p_k .. p_{i+1}` for
/// some `i` with `p_i ~ p_k` and `p_{i+1} ~ p_0`.
fn shortcut(g: &MultiGraph, cycle: &[VertexId], removed: &[VertexId]) -> Option<Vec<VertexId>> {
    let kept: Vec<VertexId> = cycle.iter().copied().filter(|v| removed.binary_search(v).is_err()).collect();
    let k = kept.len();
    if k < 3 || k + removed.len() != g.vertex_count() {
        return None;
    }
    let mut gaps = (0..k).filter(|&i| !g.adjacent(kept[i], kept[(i + 1) % k]));
    let Some(gap) = gaps.next() else {
        return Some(kept);
    };
    if gaps.next().is_some() {
        return None;
    }
    let path: Vec<VertexId> = (1..=k).map(|j| kept[(gap + j) % k]).collect();
    let (first, last) = (path[0], path[k - 1]);
    let i = (1..k - 2).find(|&i| g.adjacent(path[i], last) && g.adjacent(path[i + 1], first))?;
    let mut order = path[..=i].to_vec();
    order.extend(path[i + 1..].iter().rev());
    Some(order)
}

/// `g - S` is Hamiltonian for every vertex set `S` with `|S| <= s`.
pub fn s_hamiltonian(g: &MultiGraph, s: usize, budget: u64) -> Result<OracleCertificate> {
    let started = Instant::now();
    let n = g.vertex_count();
    if s + 3 > n {
        return Err(Error::Precondition(format!(
            "s = {s} exceeds |V| - 3 = {}",
            n as i64 - 3
        )));
    }
    let mut nodes = 0;
    let mut undetermined = false;
    let mut entries: Vec<(Vec<VertexId>, Vec<VertexId>)> = Vec::new();
    // indices into `entries` of distinct searched cycles, newest last
    let mut found: Vec<usize> = Vec::new();
    for k in 0..=s {
        for removed in Combinations::new(n, k) {
            let reused = found.iter().rev().take(CYCLE_CACHE).find_map(|&i| shortcut(g, &entries[i].1, &removed));
            if let Some(order) = reused {
                entries.push((removed, order));
                continue;
            }
            let h = g.delete_vertices(&removed)?;
            let cert = hamiltonian(&h, budget)?;
            nodes += cert.stats.nodes;
            match cert.witness {
                Some(Witness::Cycle { order }) => {
                    let kept: Vec<VertexId> =
                        (0..n).filter(|v| removed.binary_search(v).is_err()).collect();
                    let order = order.into_iter().map(|v| kept[v]).collect();
                    found.push(entries.len());
                    entries.push((removed, order));
                }
                _ => match cert.refutation {
                    Some(inner) => {
                        return Ok(OracleCertificate::fails(
                            Refutation::DeletedVertices {
                                removed,
                                inner: Box::new(inner),
                            },
                            nodes,
                            started,
                        ))
                    }
                    None => undetermined = true,
                },
            }
        }
    }
    Ok(if undetermined {
        OracleCertificate::undetermined(nodes, started)
    } else {
        OracleCertificate::holds(Witness::PerDeletion { entries }, nodes, started)
    })
}
