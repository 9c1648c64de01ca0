use std::collections::VecDeque;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, VertexId};

use super::{binomial, Combinations, OracleCertificate, PairTrail, Refutation, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cover {
    /// Every vertex lies on the subgraph.
    Spanning,
    /// Every edge has an end on the subgraph.
    Dominating,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum State {
    Open,
    In,
    Out,
}

/// Branch-and-propagate search for a connected even subgraph.
struct EvenSearch<'a> {
    g: &'a MultiGraph,
    cover: Cover,
    state: Vec<State>,
    in_deg: Vec<usize>,
    open: Vec<usize>,
    trail: Vec<EdgeId>,
    queue: VecDeque<VertexId>,
    nodes: u64,
}

impl<'a> EvenSearch<'a> {
    fn new(g: &'a MultiGraph, cover: Cover) -> Self {
        let n = g.vertex_count();
        Self {
            g,
            cover,
            state: vec![State::Open; g.edge_count()],
            in_deg: vec![0; n],
            open: g.vertices().map(|v| g.degree(v)).collect(),
            trail: Vec::new(),
            queue: VecDeque::new(),
            nodes: 0,
        }
    }

    fn dead(&self, v: VertexId) -> bool {
        self.open[v] == 0 && self.in_deg[v] == 0
    }

    fn set(&mut self, e: EdgeId, s: State) {
        debug_assert_eq!(self.state[e], State::Open);
        self.state[e] = s;
        self.trail.push(e);
        let (a, b) = self.g.ends(e);
        for v in [a, b] {
            self.open[v] -= 1;
            if s == State::In {
                self.in_deg[v] += 1;
            }
            self.queue.push_back(v);
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().expect("trail above mark");
            let s = self.state[e];
            self.state[e] = State::Open;
            let (a, b) = self.g.ends(e);
            for v in [a, b] {
                self.open[v] += 1;
                if s == State::In {
                    self.in_deg[v] -= 1;
                }
            }
        }
        self.queue.clear();
    }

    fn assign(&mut self, e: EdgeId, s: State) -> bool {
        match self.state[e] {
            State::Open => {
                self.set(e, s);
                self.propagate()
            }
            current => current == s,
        }
    }

    fn propagate(&mut self) -> bool {
        while let Some(v) = self.queue.pop_front() {
            match self.open[v] {
                0 => {
                    if self.in_deg[v] % 2 == 1 {
                        return false;
                    }
                    if self.in_deg[v] == 0 {
                        match self.cover {
                            Cover::Spanning if self.g.vertex_count() > 1 => return false,
                            Cover::Dominating => {
                                let starved = self
                                    .g
                                    .incident(v)
                                    .iter()
                                    .any(|&e| self.dead(self.g.other_end(e, v)));
                                if starved {
                                    return false;
                                }
                            }
                            _ => {}
                        }
                    }
                }
                1 => {
                    let f = *self
                        .g
                        .incident(v)
                        .iter()
                        .find(|&&e| self.state[e] == State::Open)
                        .expect("one open edge");
                    let s = if self.in_deg[v] % 2 == 1 { State::In } else { State::Out };
                    self.set(f, s);
                }
                _ => {}
            }
        }
        self.connected_enough()
    }

    /// Selected edges can still be joined, and for spanning search every
    /// vertex can still be reached.
    fn connected_enough(&self) -> bool {
        let n = self.g.vertex_count();
        let root = match self.cover {
            Cover::Spanning => 0,
            Cover::Dominating => match self.state.iter().position(|&s| s == State::In) {
                Some(e) => self.g.ends(e).0,
                None => return true,
            },
        };
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &e in self.g.incident(v) {
                if self.state[e] != State::Out {
                    let w = self.g.other_end(e, v);
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        match self.cover {
            Cover::Spanning => seen.iter().all(|&s| s),
            Cover::Dominating => self
                .state
                .iter()
                .enumerate()
                .all(|(e, &s)| s != State::In || seen[self.g.ends(e).0]),
        }
    }

    /// An open edge at a vertex with the fewest open edges.
    fn pick(&self) -> Option<EdgeId> {
        self.g
            .edges()
            .filter(|&e| self.state[e] == State::Open)
            .min_by_key(|&e| {
                let (a, b) = self.g.ends(e);
                (self.open[a].min(self.open[b]), e)
            })
    }

    fn chosen(&self) -> Vec<EdgeId> {
        self.g.edges().filter(|&e| self.state[e] == State::In).collect()
    }

    fn leaf_ok(&self) -> bool {
        let chosen = self.chosen();
        if chosen.is_empty() {
            return false;
        }
        if euler_circuit(self.g, &chosen).is_none() {
            return false;
        }
        match self.cover {
            Cover::Spanning => self.g.vertices().all(|v| self.in_deg[v] > 0),
            Cover::Dominating => self
                .g
                .edge_list()
                .iter()
                .all(|&(a, b)| self.in_deg[a] > 0 || self.in_deg[b] > 0),
        }
    }

    /// `Some(Some(edges))` for a solution, `Some(None)` when there is none,
    /// `None` when the budget ran out.
    fn solve(&mut self, budget: u64) -> Option<Option<Vec<EdgeId>>> {
        if !self.propagate() {
            return Some(None);
        }
        // (trail mark, edge, next alternative)
        let mut frames: Vec<(usize, EdgeId, u8)> = Vec::new();
        loop {
            match self.pick() {
                Some(e) => frames.push((self.trail.len(), e, 0)),
                None if self.leaf_ok() => return Some(Some(self.chosen())),
                None => {}
            }
            loop {
                let Some(frame) = frames.last_mut() else {
                    return Some(None);
                };
                let (mark, e, next) = *frame;
                self.undo_to(mark);
                if next == 2 {
                    frames.pop();
                    continue;
                }
                frame.2 += 1;
                self.nodes += 1;
                if self.nodes > budget {
                    return None;
                }
                let s = if next == 0 { State::In } else { State::Out };
                if self.assign(e, s) {
                    break;
                }
            }
        }
    }
}

/// Connected even subgraph of `g - forbidden` containing `forced`.
fn even_subgraph(
    g: &MultiGraph,
    cover: Cover,
    forced: &[EdgeId],
    forbidden: &[EdgeId],
    budget: u64,
) -> (Option<Option<Vec<EdgeId>>>, u64) {
    let mut search = EvenSearch::new(g, cover);
    for &e in forbidden {
        search.set(e, State::Out);
    }
    for &e in forced {
        if search.state[e] == State::Out {
            return (Some(None), 0);
        }
        if search.state[e] == State::Open {
            search.set(e, State::In);
        }
    }
    let out = search.solve(budget);
    (out, search.nodes)
}

/// Closed trail through every edge of `edges`, as `(start, edge order)`.
/// `None` if the edges are empty, not all of even degree, or not connected.
pub fn euler_circuit(g: &MultiGraph, edges: &[EdgeId]) -> Option<(VertexId, Vec<EdgeId>)> {
    let first = *edges.first()?;
    let n = g.vertex_count();
    let mut local: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
    for &e in edges {
        let (a, b) = g.ends(e);
        local[a].push(e);
        local[b].push(e);
    }
    if local.iter().any(|l| l.len() % 2 == 1) {
        return None;
    }
    let start = g.ends(first).0;
    let mut used = vec![false; g.edge_count()];
    let mut ptr = vec![0usize; n];
    let mut stack: Vec<(VertexId, Option<EdgeId>)> = vec![(start, None)];
    let mut circuit = Vec::with_capacity(edges.len());
    while let Some(&(v, via)) = stack.last() {
        while ptr[v] < local[v].len() && used[local[v][ptr[v]]] {
            ptr[v] += 1;
        }
        if ptr[v] < local[v].len() {
            let e = local[v][ptr[v]];
            used[e] = true;
            stack.push((g.other_end(e, v), Some(e)));
        } else {
            stack.pop();
            circuit.extend(via);
        }
    }
    if circuit.len() != edges.len() {
        return None;
    }
    circuit.reverse();
    Some((start, circuit))
}

/// Spanning tree of `g - forbidden`, avoiding `avoid` edges where possible.
fn spanning_tree(
    g: &MultiGraph,
    root: VertexId,
    allowed: &[bool],
    avoid: &[bool],
) -> Option<Vec<EdgeId>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut tree = Vec::with_capacity(n.saturating_sub(1));
    seen[root] = true;
    // two passes: preferred edges first, then whatever connects the rest
    for pass in 0..2 {
        let mut queue: VecDeque<VertexId> = (0..n).filter(|&v| seen[v]).collect();
        while let Some(v) = queue.pop_front() {
            for &e in g.incident(v) {
                if !allowed[e] || (pass == 0 && avoid[e]) {
                    continue;
                }
                let w = g.other_end(e, v);
                if !seen[w] {
                    seen[w] = true;
                    tree.push(e);
                    queue.push_back(w);
                }
            }
        }
    }
    (tree.len() + 1 == n).then_some(tree)
}

/// Removes a tree T-join for the odd vertices from all allowed edges and
/// keeps the result when it is still spanning and connected.
fn tjoin_heuristic(g: &MultiGraph, forced: &[EdgeId], forbidden: &[EdgeId]) -> Option<Vec<EdgeId>> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut allowed = vec![true; m];
    for &e in forbidden {
        allowed[e] = false;
    }
    let mut must = vec![false; m];
    for &e in forced {
        must[e] = true;
    }
    let roots: Vec<VertexId> = (0..n).step_by((n / 8).max(1)).collect();
    for root in roots {
        let tree = spanning_tree(g, root, &allowed, &must)?;
        let mut odd = vec![false; n];
        for e in g.edges().filter(|&e| allowed[e]) {
            let (a, b) = g.ends(e);
            odd[a] ^= true;
            odd[b] ^= true;
        }
        // leaves-up pass over the tree: keep an edge iff its subtree is odd
        let mut children: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); n];
        let mut parent_seen = vec![false; n];
        parent_seen[root] = true;
        let mut order = vec![root];
        let mut tree_adj: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
        for &e in &tree {
            let (a, b) = g.ends(e);
            tree_adj[a].push(e);
            tree_adj[b].push(e);
        }
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &e in &tree_adj[v] {
                let w = g.other_end(e, v);
                if !parent_seen[w] {
                    parent_seen[w] = true;
                    children[v].push((w, e));
                    order.push(w);
                }
            }
        }
        let mut join = vec![false; m];
        for &v in order.iter().rev() {
            for &(w, e) in &children[v] {
                if odd[w] {
                    join[e] = true;
                    odd[w] = false;
                    odd[v] ^= true;
                }
            }
        }
        if join.iter().zip(&must).any(|(&j, &x)| j && x) {
            continue;
        }
        let chosen: Vec<EdgeId> = g.edges().filter(|&e| allowed[e] && !join[e]).collect();
        let (sub, _) = g.edge_induced(&chosen).ok()?;
        if (sub.vertex_count() == n && sub.is_connected()) && euler_circuit(g, &chosen).is_some() {
            return Some(chosen);
        }
    }
    None
}

fn trail_witness(g: &MultiGraph, edges: &[EdgeId]) -> (VertexId, Vec<EdgeId>) {
    euler_circuit(g, edges).expect("search returns connected even subgraphs")
}

/// Edits a known spanning even subgraph `mask` so it keeps `forced` and
/// avoids `forbidden`: each offending edge is toggled together with the
/// other two edges of a triangle through it, which preserves parity.
/// `None` if no such edit gives a spanning closed trail.
fn repair(
    g: &MultiGraph,
    mask: &[bool],
    forced: &[EdgeId],
    forbidden: &[EdgeId],
) -> Option<(VertexId, Vec<EdgeId>)> {
    let mut next = mask.to_vec();
    let mut degree = vec![0usize; g.vertex_count()];
    for e in g.edges().filter(|&e| next[e]) {
        let (a, b) = g.ends(e);
        degree[a] += 1;
        degree[b] += 1;
    }
    let fixed = |f: EdgeId| forced.contains(&f) || forbidden.contains(&f);
    let wrong: Vec<EdgeId> = forced
        .iter()
        .filter(|&&e| !mask[e])
        .chain(forbidden.iter().filter(|&&e| mask[e]))
        .copied()
        .collect();
    for e in wrong {
        let (a, b) = g.ends(e);
        let swap = g.incident(a).iter().find_map(|&f1| {
            let c = g.other_end(f1, a);
            if f1 == e || c == b || fixed(f1) {
                return None;
            }
            let f2 = g.incident(b).iter().copied().find(|&f2| g.other_end(f2, b) == c && !fixed(f2))?;
            let mut d = [degree[a] as i64, degree[b] as i64, degree[c] as i64];
            for (ends, f) in [((0, 1), e), ((0, 2), f1), ((1, 2), f2)] {
                let step = if next[f] { -1 } else { 1 };
                d[ends.0] += step;
                d[ends.1] += step;
            }
            d.iter().all(|&x| x > 0).then_some((f1, f2, c, d))
        })?;
        let (f1, f2, c, d) = swap;
        for f in [e, f1, f2] {
            next[f] = !next[f];
        }
        degree[a] = d[0] as usize;
        degree[b] = d[1] as usize;
        degree[c] = d[2] as usize;
    }
    if degree.contains(&0) {
        return None;
    }
    let edges: Vec<EdgeId> = g.edges().filter(|&e| next[e]).collect();
    euler_circuit(g, &edges)
}

/// A Hamiltonian cycle as a sparse first trail for dense graphs.
fn sparse_seed(g: &MultiGraph, budget: u64) -> Option<(VertexId, Vec<EdgeId>)> {
    let n = g.vertex_count();
    if n < 3 || g.edge_count() <= 2 * n {
        return None;
    }
    let cert = super::hamiltonian(g, budget.min(SEED_BUDGET)).ok()?;
    let Some(Witness::Cycle { order }) = cert.witness else {
        return None;
    };
    let edges: Vec<EdgeId> = (0..n)
        .map(|i| g.edges_between(order[i], order[(i + 1) % n])[0])
        .collect();
    euler_circuit(g, &edges)
}

const SEED_BUDGET: u64 = 20_000;

type Search = std::result::Result<(VertexId, Vec<EdgeId>), Option<Refutation>>;

/// Spanning closed trail through `forced`, avoiding `forbidden`.
fn spanning_with(
    g: &MultiGraph,
    forced: &[EdgeId],
    forbidden: &[EdgeId],
    budget: u64,
) -> (Search, u64) {
    let n = g.vertex_count();
    if n == 1 {
        return (Ok((0, Vec::new())), 0);
    }
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    for &e in forbidden {
        let (a, b) = g.ends(e);
        degree[a] -= 1;
        degree[b] -= 1;
    }
    if let Some(v) = (0..n).find(|&v| degree[v] < 2) {
        return (
            Err(Some(Refutation::LowDegree {
                vertex: v,
                degree: degree[v],
            })),
            0,
        );
    }
    if let Some(edges) = tjoin_heuristic(g, forced, forbidden) {
        return (Ok(trail_witness(g, &edges)), 0);
    }
    match even_subgraph(g, Cover::Spanning, forced, forbidden, budget) {
        (Some(Some(edges)), nodes) => (Ok(trail_witness(g, &edges)), nodes),
        (Some(None), nodes) => (Err(Some(Refutation::Exhausted)), nodes),
        (None, nodes) => (Err(None), nodes),
    }
}

/// Whether `g` has a closed trail (possibly a single vertex) meeting every edge.
pub fn dominating_closed_trail(g: &MultiGraph, budget: u64) -> Result<OracleCertificate> {
    let started = Instant::now();
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let m = g.edge_count();
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == m) {
        let w = Witness::Trail {
            start: v,
            edges: Vec::new(),
        };
        return Ok(OracleCertificate::holds(w, 0, started));
    }
    let isolated: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) == 0).collect();
    if !g.delete_vertices(&isolated)?.is_connected() {
        return Ok(OracleCertificate::fails(Refutation::Disconnected, 0, started));
    }
    Ok(match even_subgraph(g, Cover::Dominating, &[], &[], budget) {
        (Some(Some(edges)), nodes) => {
            let (start, edges) = trail_witness(g, &edges);
            OracleCertificate::holds(Witness::Trail { start, edges }, nodes, started)
        }
        (Some(None), nodes) => OracleCertificate::fails(Refutation::Exhausted, nodes, started),
        (None, nodes) => OracleCertificate::undetermined(nodes, started),
    })
}

/// Whether `g` is supereulerian: it has a closed trail through every vertex.
pub fn spanning_closed_trail(g: &MultiGraph, budget: u64) -> Result<OracleCertificate> {
    let started = Instant::now();
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Ok(OracleCertificate::fails(Refutation::Disconnected, 0, started));
    }
    Ok(match spanning_with(g, &[], &[], budget) {
        (Ok((start, edges)), nodes) => {
            OracleCertificate::holds(Witness::Trail { start, edges }, nodes, started)
        }
        (Err(Some(r)), nodes) => OracleCertificate::fails(r, nodes, started),
        (Err(None), nodes) => OracleCertificate::undetermined(nodes, started),
    })
}

/// Pair sizes `(|X|, |Y|)` that cannot be enlarged.
fn maximal_sizes(m: usize, s: usize, t: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..=s.min(m) {
        for b in 0..=t.min(m - a) {
            let full = a + b == m;
            if (a == s || full) && (b == t || full) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Every disjoint pair `(X, Y)` of edge sets with maximal sizes, in the
/// order the oracle checks them.
pub(crate) fn maximal_pairs(m: usize, s: usize, t: usize) -> Vec<(Vec<EdgeId>, Vec<EdgeId>)> {
    let mut out = Vec::new();
    for (a, b) in maximal_sizes(m, s, t) {
        for x in Combinations::new(m, a) {
            let rest: Vec<EdgeId> = (0..m).filter(|e| x.binary_search(e).is_err()).collect();
            for yi in Combinations::new(rest.len(), b) {
                out.push((x.clone(), yi.iter().map(|&i| rest[i]).collect()));
            }
        }
    }
    out
}

/// Number of disjoint edge-set pairs with maximal sizes.
pub(crate) fn maximal_pair_count(m: usize, s: usize, t: usize) -> usize {
    maximal_sizes(m, s, t)
        .into_iter()
        .map(|(a, b)| binomial(m, a) * binomial(m - a, b))
        .sum()
}

/// For all disjoint `X, Y` with `|X| <= s`, `|Y| <= t`, `g - Y` has a
/// spanning closed trail through `X`.
///
/// The property is monotone in both sets, so only pairs that cannot be
/// enlarged are checked. A trail found for one pair is reused for every
/// later pair it already serves.
pub fn st_supereulerian(g: &MultiGraph, s: usize, t: usize, budget: u64) -> Result<OracleCertificate> {
    st_search(g, s, t, budget, true)
}

/// Same decision as [`st_supereulerian`] without collecting per-pair witnesses.
pub(crate) fn st_verdict(g: &MultiGraph, s: usize, t: usize, budget: u64) -> Result<OracleCertificate> {
    st_search(g, s, t, budget, false)
}

/// Trails found so far, indexed by the edges each one avoids.
struct TrailCache {
    found: Vec<(Vec<bool>, VertexId, Vec<EdgeId>)>,
    avoiding: Vec<Vec<usize>>,
    sparsest: Option<usize>,
}

impl TrailCache {
    fn new(m: usize) -> Self {
        Self {
            found: Vec::new(),
            avoiding: vec![Vec::new(); m],
            sparsest: None,
        }
    }

    fn remember(&mut self, start: VertexId, edges: &[EdgeId]) {
        let m = self.avoiding.len();
        let mut mask = vec![false; m];
        for &e in edges {
            mask[e] = true;
        }
        let i = self.found.len();
        for e in (0..m).filter(|&e| !mask[e]) {
            self.avoiding[e].push(i);
        }
        if self.sparsest.is_none_or(|j| edges.len() < self.found[j].2.len()) {
            self.sparsest = Some(i);
        }
        self.found.push((mask, start, edges.to_vec()));
    }

    /// Newest trail through all of `x` and none of `y`.
    fn lookup(&self, x: &[EdgeId], y: &[EdgeId]) -> Option<usize> {
        let fits = |&i: &usize| {
            let mask = &self.found[i].0;
            x.iter().all(|&e| mask[e]) && y.iter().all(|&e| !mask[e])
        };
        match y.first() {
            Some(&e) => self.avoiding[e].iter().rev().copied().find(fits),
            None => (0..self.found.len()).rev().find(fits),
        }
    }

    /// Starting point for [`repair`].
    fn base(&self) -> Option<usize> {
        self.sparsest
    }
}

fn st_search(g: &MultiGraph, s: usize, t: usize, budget: u64, keep: bool) -> Result<OracleCertificate> {
    let started = Instant::now();
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Ok(OracleCertificate::fails(Refutation::Disconnected, 0, started));
    }
    let m = g.edge_count();
    let mut nodes = 0;
    let mut undetermined = false;
    let mut entries = Vec::new();
    let mut cache = TrailCache::new(m);
    if s + t > 0 {
        if let Some((start, edges)) = sparse_seed(g, budget) {
            cache.remember(start, &edges);
        }
    }
    for (a, b) in maximal_sizes(m, s, t) {
        for x in Combinations::new(m, a) {
            let rest: Vec<EdgeId> = (0..m).filter(|e| x.binary_search(e).is_err()).collect();
            for yi in Combinations::new(rest.len(), b) {
                let y: Vec<EdgeId> = yi.iter().map(|&i| rest[i]).collect();
                let outcome = match cache.lookup(&x, &y) {
                    Some(i) => Ok((cache.found[i].1, cache.found[i].2.clone())),
                    None => {
                        let repaired = cache.base().and_then(|i| repair(g, &cache.found[i].0, &x, &y));
                        let (outcome, spent) = match repaired {
                            Some(trail) => (Ok(trail), 0),
                            None => spanning_with(g, &x, &y, budget),
                        };
                        nodes += spent;
                        if let Ok((start, edges)) = &outcome {
                            cache.remember(*start, edges);
                        }
                        outcome
                    }
                };
                match outcome {
                    Ok((start, edges)) => {
                        if keep {
                            entries.push(PairTrail {
                                x: x.clone(),
                                y,
                                start,
                                edges,
                            })
                        }
                    }
                    Err(Some(inner)) => {
                        return Ok(OracleCertificate::fails(
                            Refutation::EdgePair {
                                x,
                                y,
                                inner: Box::new(inner),
                            },
                            nodes,
                            started,
                        ))
                    }
                    Err(None) => undetermined = true,
                }
            }
        }
    }
    Ok(if undetermined {
        OracleCertificate::undetermined(nodes, started)
    } else {
        OracleCertificate::holds(Witness::PerPair { entries }, nodes, started)
    })
}

/// Exhaustive reference check: is there a spanning closed trail of
/// `g - forbidden` using every edge of `forced`? Tries every subset of the
/// free edges, so it refuses more than 24 of them.
pub fn spanning_trail_brute(g: &MultiGraph, forced: &[EdgeId], forbidden: &[EdgeId]) -> Result<bool> {
    let n = g.vertex_count();
    let mut fixed = vec![0u8; g.edge_count()];
    for &e in forbidden {
        fixed[e] = 2;
    }
    for &e in forced {
        if fixed[e] == 2 {
            return Ok(false);
        }
        fixed[e] = 1;
    }
    let free: Vec<EdgeId> = g.edges().filter(|&e| fixed[e] == 0).collect();
    if free.len() > 24 {
        return Err(Error::Precondition(format!(
            "{} free edges is too many for exhaustive search",
            free.len()
        )));
    }
    if n == 1 {
        return Ok(true);
    }
    let base: Vec<EdgeId> = g.edges().filter(|&e| fixed[e] == 1).collect();
    for mask in 0u32..1 << free.len() {
        let mut edges = base.clone();
        edges.extend(free.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e));
        let mut deg = vec![0usize; n];
        for &e in &edges {
            let (a, b) = g.ends(e);
            deg[a] += 1;
            deg[b] += 1;
        }
        if deg.iter().any(|&d| d == 0 || d % 2 == 1) {
            continue;
        }
        if g.edge_induced(&edges)?.0.is_connected() {
            return Ok(true);
        }
    }
    Ok(false)
}
