use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, VertexId};

use super::{OracleCertificate, Refutation, Verdict, Witness};

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn spanning_connected(g: &MultiGraph, mask: u64) -> bool {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut parts = n;
    for e in g.edges().filter(|e| mask >> e & 1 == 1) {
        let (a, b) = g.ends(e);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            parts -= 1;
        }
    }
    parts == 1
}

/// A cycle of length two or three through every edge, if there is one.
fn short_cycles(g: &MultiGraph) -> Option<Vec<Vec<EdgeId>>> {
    g.edges()
        .map(|e| {
            let (u, v) = g.ends(e);
            if let Some(&f) = g.edges_between(u, v).iter().find(|&&f| f != e) {
                return Some(vec![e, f]);
            }
            let nv = g.neighbors(v);
            g.neighbors(u)
                .into_iter()
                .find(|w| *w != v && nv.binary_search(w).is_ok())
                .map(|w| vec![e, g.edges_between(v, w)[0], g.edges_between(w, u)[0]])
        })
        .collect()
}

/// Whether every even vertex set is the odd set of some spanning connected
/// subgraph.
///
/// Exhaustive over edge subsets (Gray-code order) when the edge count is at
/// most `edge_cap`. Larger graphs are accepted only when every edge lies on
/// a cycle of length at most three, and are otherwise undetermined.
pub fn collapsible(g: &MultiGraph, edge_cap: usize) -> Result<OracleCertificate> {
    let started = Instant::now();
    let n = g.vertex_count();
    let m = g.edge_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n == 1 {
        let w = Witness::ParitySubgraphs {
            entries: vec![(Vec::new(), Vec::new())],
        };
        return Ok(OracleCertificate::holds(w, 0, started));
    }
    if !g.is_connected() {
        return Ok(OracleCertificate::fails(Refutation::Disconnected, 0, started));
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) < 2) {
        let r = Refutation::LowDegree {
            vertex: v,
            degree: g.degree(v),
        };
        return Ok(OracleCertificate::fails(r, 0, started));
    }
    if m > edge_cap.min(63) {
        return Ok(match short_cycles(g) {
            Some(cycles) => OracleCertificate::holds(Witness::ShortCycles { cycles }, 0, started),
            None => OracleCertificate::undetermined(0, started),
        });
    }
    let classes = 1usize << (n - 1);
    let mut found: BTreeMap<u64, u64> = BTreeMap::new();
    let mut mask = 0u64;
    let mut odd = 0u64;
    let mut nodes = 0u64;
    for i in 1u64..1 << m {
        let e = i.trailing_zeros() as usize;
        mask ^= 1 << e;
        let (a, b) = g.ends(e);
        odd ^= (1 << a) | (1 << b);
        nodes += 1;
        if !found.contains_key(&odd) && spanning_connected(g, mask) {
            found.insert(odd, mask);
            if found.len() == classes {
                break;
            }
        }
    }
    if found.len() < classes {
        // smallest even set that was never realised
        let r = (0u64..1 << n)
            .filter(|r| r.count_ones() % 2 == 0)
            .find(|r| !found.contains_key(r))
            .expect("a missing class exists");
        let r = (0..n).filter(|v| r >> v & 1 == 1).collect();
        return Ok(OracleCertificate::fails(
            Refutation::MissingParityClass { r },
            nodes,
            started,
        ));
    }
    let entries = found
        .into_iter()
        .map(|(r, mask)| {
            let r: Vec<VertexId> = (0..n).filter(|v| r >> v & 1 == 1).collect();
            let edges: Vec<EdgeId> = (0..m).filter(|e| mask >> e & 1 == 1).collect();
            (r, edges)
        })
        .collect();
    Ok(OracleCertificate::holds(
        Witness::ParitySubgraphs { entries },
        nodes,
        started,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContractionCheck {
    /// Verdict for `G`.
    pub graph: Verdict,
    /// Verdict for `G/H`.
    pub contracted: Verdict,
    /// Both verdicts are determined and equal.
    pub agree: bool,
}

/// Compares collapsibility of `G` and `G/H` for a collapsible subgraph `H`
/// given by its edges.
pub fn collapsible_contract_equiv(
    g: &MultiGraph,
    h_edges: &[EdgeId],
    edge_cap: usize,
) -> Result<ContractionCheck> {
    if h_edges.is_empty() {
        return Err(Error::Precondition("H must have at least one edge".into()));
    }
    let (h, _) = g.edge_induced(h_edges)?;
    if collapsible(&h, edge_cap)?.verdict != Verdict::Holds {
        return Err(Error::Precondition("H is not known to be collapsible".into()));
    }
    let graph = collapsible(g, edge_cap)?.verdict;
    let contracted = collapsible(&g.contract(h_edges)?, edge_cap)?.verdict;
    Ok(ContractionCheck {
        graph,
        contracted,
        agree: graph != Verdict::Undetermined && graph == contracted,
    })
}
