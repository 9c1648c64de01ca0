//! Exact deciders for the Hamiltonian family of predicates.
//!
//! Every positive verdict carries a witness that [`replay`] re-checks
//! against the graph without going through the search code. Negative
//! verdicts are either exhaustive or come from a necessary condition that
//! the refutation names. Anything that runs out of budget is
//! [`Verdict::Undetermined`].

mod collapsible;
mod hamiltonian;
mod index;
mod trail;

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;

use crate::graph::{EdgeId, MultiGraph, VertexId};

pub use collapsible::{collapsible, collapsible_contract_equiv, ContractionCheck};
pub use hamiltonian::{hamiltonian, s_hamiltonian};
pub use index::{exact_index, IndexResult, LevelVerdict, Property};
pub(crate) use trail::maximal_pairs;
pub use trail::{
    dominating_closed_trail, euler_circuit, spanning_closed_trail, spanning_trail_brute, st_supereulerian,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Vertex order of a spanning cycle.
    Cycle { order: Vec<VertexId> },
    /// A closed trail given as consecutive edges from `start`. An empty edge
    /// list is the trivial trail at `start`.
    Trail { start: VertexId, edges: Vec<EdgeId> },
    /// One spanning connected subgraph per even vertex set `R`, with odd set `R`.
    ParitySubgraphs { entries: Vec<(Vec<VertexId>, Vec<EdgeId>)> },
    /// For every edge, a cycle of length 2 or 3 through it, as edge ids.
    ShortCycles { cycles: Vec<Vec<EdgeId>> },
    /// A witness for each removed vertex set, cycle in original ids.
    PerDeletion { entries: Vec<(Vec<VertexId>, Vec<VertexId>)> },
    /// A trail of `G - Y` through `X` for every checked pair.
    PerPair { entries: Vec<PairTrail> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairTrail {
    pub x: Vec<EdgeId>,
    pub y: Vec<EdgeId>,
    pub start: VertexId,
    pub edges: Vec<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Refutation {
    Disconnected,
    LowDegree { vertex: VertexId, degree: usize },
    CutVertex { vertex: VertexId },
    /// The search space was exhausted.
    Exhausted,
    DeletedVertices { removed: Vec<VertexId>, inner: Box<Refutation> },
    EdgePair { x: Vec<EdgeId>, y: Vec<EdgeId>, inner: Box<Refutation> },
    /// No spanning connected subgraph has this odd-degree set.
    MissingParityClass { r: Vec<VertexId> },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed_micros: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleCertificate {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub refutation: Option<Refutation>,
    pub stats: SearchStats,
}

impl OracleCertificate {
    pub(crate) fn holds(witness: Witness, nodes: u64, started: Instant) -> Self {
        Self {
            verdict: Verdict::Holds,
            witness: Some(witness),
            refutation: None,
            stats: stats(nodes, started),
        }
    }

    pub(crate) fn fails(refutation: Refutation, nodes: u64, started: Instant) -> Self {
        Self {
            verdict: Verdict::Fails,
            witness: None,
            refutation: Some(refutation),
            stats: stats(nodes, started),
        }
    }

    pub(crate) fn undetermined(nodes: u64, started: Instant) -> Self {
        Self {
            verdict: Verdict::Undetermined,
            witness: None,
            refutation: None,
            stats: stats(nodes, started),
        }
    }

    pub fn holds_verdict(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

fn stats(nodes: u64, started: Instant) -> SearchStats {
    SearchStats {
        nodes,
        elapsed_micros: started.elapsed().as_micros() as u64,
    }
}

/// The claim a witness is replayed against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Claim {
    Hamiltonian,
    SHamiltonian { s: usize },
    DominatingClosedTrail,
    SpanningClosedTrail,
    StSupereulerian { s: usize, t: usize },
    Collapsible,
}

/// Walks a closed trail and returns the vertices it visits.
pub fn walk_closed_trail(
    g: &MultiGraph,
    start: VertexId,
    edges: &[EdgeId],
) -> Result<BTreeSet<VertexId>, String> {
    if start >= g.vertex_count() {
        return Err(format!("start vertex {start} out of range"));
    }
    let mut seen_edges = BTreeSet::new();
    let mut visited = BTreeSet::from([start]);
    let mut cur = start;
    for &e in edges {
        if e >= g.edge_count() {
            return Err(format!("edge {e} out of range"));
        }
        if !seen_edges.insert(e) {
            return Err(format!("edge {e} repeated"));
        }
        let (a, b) = g.ends(e);
        cur = if a == cur {
            b
        } else if b == cur {
            a
        } else {
            return Err(format!("edge {e} does not continue from vertex {cur}"));
        };
        visited.insert(cur);
    }
    if cur != start {
        return Err(format!("trail ends at {cur}, not at {start}"));
    }
    Ok(visited)
}

fn check_cycle(g: &MultiGraph, order: &[VertexId]) -> Result<(), String> {
    let n = g.vertex_count();
    if order.len() != n || n < 3 {
        return Err(format!("cycle has {} vertices, graph has {n}", order.len()));
    }
    let distinct: BTreeSet<_> = order.iter().collect();
    if distinct.len() != n || order.iter().any(|&v| v >= n) {
        return Err("cycle does not visit every vertex exactly once".into());
    }
    for i in 0..n {
        let (a, b) = (order[i], order[(i + 1) % n]);
        if !g.adjacent(a, b) {
            return Err(format!("{a} and {b} are not adjacent"));
        }
    }
    Ok(())
}

fn check_spanning_trail(g: &MultiGraph, start: VertexId, edges: &[EdgeId]) -> Result<(), String> {
    let visited = walk_closed_trail(g, start, edges)?;
    if visited.len() != g.vertex_count() {
        return Err("trail is not spanning".into());
    }
    Ok(())
}

/// Independently re-validates a witness for `claim` on `g`.
pub fn replay(g: &MultiGraph, claim: &Claim, witness: &Witness) -> Result<(), String> {
    match (claim, witness) {
        (Claim::Hamiltonian, Witness::Cycle { order }) => check_cycle(g, order),
        (Claim::SHamiltonian { s }, Witness::PerDeletion { entries }) => {
            let n = g.vertex_count();
            let expected: usize = (0..=*s).map(|k| binomial(n, k)).sum();
            let sets: BTreeSet<_> = entries.iter().map(|(r, _)| r.clone()).collect();
            if sets.len() != expected || entries.iter().any(|(r, _)| r.len() > *s) {
                return Err(format!("{} deletion sets, expected {expected}", sets.len()));
            }
            for (removed, order) in entries {
                let h = g.delete_vertices(removed).map_err(|e| e.to_string())?;
                let kept: Vec<VertexId> = g.vertices().filter(|v| !removed.contains(v)).collect();
                let local: Option<Vec<VertexId>> =
                    order.iter().map(|v| kept.binary_search(v).ok()).collect();
                let local = local.ok_or("cycle uses a deleted vertex")?;
                check_cycle(&h, &local).map_err(|e| format!("after deleting {removed:?}: {e}"))?;
            }
            Ok(())
        }
        (Claim::DominatingClosedTrail, Witness::Trail { start, edges }) => {
            let visited = walk_closed_trail(g, *start, edges)?;
            match g
                .edge_list()
                .iter()
                .find(|(a, b)| !visited.contains(a) && !visited.contains(b))
            {
                Some(e) => Err(format!("edge {e:?} is not dominated")),
                None => Ok(()),
            }
        }
        (Claim::SpanningClosedTrail, Witness::Trail { start, edges }) => {
            check_spanning_trail(g, *start, edges)
        }
        (Claim::StSupereulerian { s, t }, Witness::PerPair { entries }) => {
            let m = g.edge_count();
            let expected = trail::maximal_pair_count(m, *s, *t);
            if entries.len() != expected {
                return Err(format!("{} pairs checked, expected {expected}", entries.len()));
            }
            for p in entries {
                if p.x.len() > *s || p.y.len() > *t || p.x.iter().any(|e| p.y.contains(e)) {
                    return Err(format!("invalid pair {:?} / {:?}", p.x, p.y));
                }
                if p.edges.iter().any(|e| p.y.contains(e)) {
                    return Err(format!("trail uses a deleted edge for pair {:?}", p.y));
                }
                if p.x.iter().any(|e| !p.edges.contains(e)) {
                    return Err(format!("trail misses a required edge of {:?}", p.x));
                }
                check_spanning_trail(g, p.start, &p.edges)?;
            }
            Ok(())
        }
        (Claim::Collapsible, Witness::ParitySubgraphs { entries }) => {
            let n = g.vertex_count();
            let expected = if n == 0 { 0 } else { 1usize << (n - 1) };
            let sets: BTreeSet<_> = entries.iter().map(|(r, _)| r.clone()).collect();
            if sets.len() != expected {
                return Err(format!("{} parity classes, expected {expected}", sets.len()));
            }
            for (r, edges) in entries {
                if r.len() % 2 == 1 {
                    return Err(format!("odd set {r:?}"));
                }
                let (sub, origin) = g.edge_induced(edges).map_err(|e| e.to_string())?;
                let spanning = sub.vertex_count() == n || (n == 1 && edges.is_empty());
                if !spanning || !sub.is_connected() {
                    return Err(format!("subgraph for {r:?} is not spanning and connected"));
                }
                let mut odd: Vec<VertexId> = sub
                    .vertices()
                    .filter(|&v| sub.degree(v) % 2 == 1)
                    .map(|v| origin[v])
                    .collect();
                odd.sort_unstable();
                if &odd != r {
                    return Err(format!("odd set {odd:?}, expected {r:?}"));
                }
            }
            Ok(())
        }
        (Claim::Collapsible, Witness::ShortCycles { cycles }) => {
            if !g.is_connected() || cycles.len() != g.edge_count() {
                return Err("need a connected graph and one cycle per edge".into());
            }
            for (e, cycle) in cycles.iter().enumerate() {
                if !cycle.contains(&e) || !(2..=3).contains(&cycle.len()) {
                    return Err(format!("bad short cycle for edge {e}"));
                }
                let distinct: BTreeSet<_> = cycle.iter().collect();
                let mut touches: std::collections::BTreeMap<VertexId, usize> = Default::default();
                for &c in cycle {
                    let (a, b) = g.ends(c);
                    *touches.entry(a).or_default() += 1;
                    *touches.entry(b).or_default() += 1;
                }
                if distinct.len() != cycle.len()
                    || touches.len() != cycle.len()
                    || touches.values().any(|&d| d != 2)
                {
                    return Err(format!("edges {cycle:?} do not form a cycle"));
                }
            }
            Ok(())
        }
        _ => Err("witness kind does not match the claim".into()),
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Lexicographic `k`-subsets of `0..n`.
pub(crate) struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_enumerate_all() {
        let all: Vec<_> = Combinations::new(5, 2).collect();
        assert_eq!(all.len(), 10);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[9], vec![3, 4]);
        assert_eq!(Combinations::new(3, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(Combinations::new(2, 3).count(), 0);
        for n in 0..8 {
            for k in 0..=n {
                assert_eq!(Combinations::new(n, k).count(), binomial(n, k));
            }
        }
    }

    #[test]
    fn trail_walk_rejects_bad_sequences() {
        let g = crate::named::cycle(4);
        assert!(walk_closed_trail(&g, 0, &[0, 1, 2, 3]).is_ok());
        assert!(walk_closed_trail(&g, 0, &[0, 1, 2]).is_err());
        assert!(walk_closed_trail(&g, 0, &[0, 0]).is_err());
        assert!(walk_closed_trail(&g, 0, &[1]).is_err());
        assert_eq!(walk_closed_trail(&g, 2, &[]).unwrap().len(), 1);
    }
}
