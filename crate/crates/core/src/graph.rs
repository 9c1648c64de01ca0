//! Finite loopless multigraphs with explicit edge identity.
//!
//! Vertices and edges are dense integer ids. Every structural operation
//! returns a new graph; nothing is mutated in place. Operations that
//! renumber (deletion, contraction, subdivision) attach labels recording
//! where each surviving vertex and edge came from.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    ends: Vec<(VertexId, VertexId)>,
    incidence: Vec<Vec<EdgeId>>,
    vertex_labels: Option<Vec<String>>,
    edge_labels: Option<Vec<String>>,
}

/// Membership tag for the admissible class: connected graphs that are not
/// paths, cycles, `K_{1,3}`, `J1` or `J2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphClass {
    Path,
    Cycle,
    K13,
    J1,
    J2,
    InG,
    Disconnected,
}

impl GraphClass {
    pub fn is_admissible(self) -> bool {
        self == GraphClass::InG
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GraphClass::Path => "Path",
            GraphClass::Cycle => "Cycle",
            GraphClass::K13 => "K13",
            GraphClass::J1 => "J1",
            GraphClass::J2 => "J2",
            GraphClass::InG => "InG",
            GraphClass::Disconnected => "Disconnected",
        };
        f.write_str(s)
    }
}

/// A vertex or an edge, used by [`MultiGraph::delete`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Element {
    Vertex(VertexId),
    Edge(EdgeId),
}

/// Degree classes of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeView {
    /// `degree -> vertices of that degree`, vertices ascending.
    pub by_degree: BTreeMap<usize, Vec<VertexId>>,
    pub odd: Vec<VertexId>,
    pub min_degree: usize,
    pub max_degree: usize,
}

impl DegreeView {
    pub fn of_degree(&self, d: usize) -> &[VertexId] {
        self.by_degree.get(&d).map(Vec::as_slice).unwrap_or(&[])
    }
}

impl MultiGraph {
    /// Builds a graph on `n` vertices. Edge ids follow iteration order.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut ends = Vec::new();
        let mut incidence = vec![Vec::new(); n];
        for (id, (u, v)) in edges.into_iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::OutOfRange {
                        kind: "vertex",
                        id: x,
                        len: n,
                    });
                }
            }
            if u == v {
                return Err(Error::Loop { edge: id, vertex: u });
            }
            let e = (u.min(v), u.max(v));
            incidence[e.0].push(id);
            incidence[e.1].push(id);
            ends.push(e);
        }
        Ok(Self {
            ends,
            incidence,
            vertex_labels: None,
            edge_labels: None,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, std::iter::empty()).expect("edgeless graph is valid")
    }

    pub fn with_vertex_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::Precondition(format!(
                "{} vertex labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        self.vertex_labels = Some(labels);
        Ok(self)
    }

    pub fn with_edge_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.edge_count() {
            return Err(Error::Precondition(format!(
                "{} edge labels for {} edges",
                labels.len(),
                self.edge_count()
            )));
        }
        self.edge_labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.incidence.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count()
    }

    pub fn edges(&self) -> std::ops::Range<EdgeId> {
        0..self.edge_count()
    }

    /// Endpoints of `e` with the smaller id first.
    pub fn ends(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.ends[e]
    }

    pub fn edge_list(&self) -> &[(VertexId, VertexId)] {
        &self.ends
    }

    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.ends[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// `E_G(v)`: the edges incident with `v`.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v]
    }

    /// `d_G(v)`, counting parallel edges.
    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    /// `N_G(v)`, ascending and deduplicated.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<_> = self.incidence[v]
            .iter()
            .map(|&e| self.other_end(e, v))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Sorted, deduplicated neighbor lists for every vertex.
    pub fn simple_adjacency(&self) -> Vec<Vec<VertexId>> {
        self.vertices().map(|v| self.neighbors(v)).collect()
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        let (small, other) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.incidence[small]
            .iter()
            .any(|&e| self.other_end(e, small) == other)
    }

    /// Edge ids joining `u` and `v`.
    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        self.incidence[u]
            .iter()
            .copied()
            .filter(|&e| self.other_end(e, u) == v)
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.ends.iter().all(|e| seen.insert(*e))
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).max()
    }

    pub fn degree_view(&self) -> DegreeView {
        let mut by_degree: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
        let mut odd = Vec::new();
        for v in self.vertices() {
            let d = self.degree(v);
            by_degree.entry(d).or_default().push(v);
            if d % 2 == 1 {
                odd.push(v);
            }
        }
        DegreeView {
            min_degree: by_degree.keys().next().copied().unwrap_or(0),
            max_degree: by_degree.keys().next_back().copied().unwrap_or(0),
            by_degree,
            odd,
        }
    }

    pub fn vertex_label(&self, v: VertexId) -> String {
        match &self.vertex_labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn edge_label(&self, e: EdgeId) -> String {
        match &self.edge_labels {
            Some(labels) => labels[e].clone(),
            None => e.to_string(),
        }
    }

    pub fn has_labels(&self) -> bool {
        self.vertex_labels.is_some() || self.edge_labels.is_some()
    }

    /// Same structure with all labels dropped.
    pub fn unlabeled(&self) -> Self {
        Self {
            ends: self.ends.clone(),
            incidence: self.incidence.clone(),
            vertex_labels: None,
            edge_labels: None,
        }
    }

    /// Component index per vertex, numbered in order of smallest member.
    pub fn components(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &e in &self.incidence[v] {
                    let w = self.other_end(e, v);
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// Classifies the graph against the exceptional family.
    pub fn classify(&self) -> Result<GraphClass> {
        let n = self.vertex_count();
        let m = self.edge_count();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if !self.is_connected() {
            return Ok(GraphClass::Disconnected);
        }
        let simple = self.is_simple();
        let max_deg = self.max_degree().unwrap_or(0);
        if n == 2 && m == 3 {
            return Ok(GraphClass::J2);
        }
        if n == 3 && m == 3 && !simple && self.max_multiplicity() == 2 {
            return Ok(GraphClass::J1);
        }
        if simple && n == 4 && m == 3 && max_deg == 3 {
            return Ok(GraphClass::K13);
        }
        if m + 1 == n && max_deg <= 2 {
            return Ok(GraphClass::Path);
        }
        if m == n && self.vertices().all(|v| self.degree(v) == 2) {
            return Ok(GraphClass::Cycle);
        }
        Ok(GraphClass::InG)
    }

    fn max_multiplicity(&self) -> usize {
        let mut counts: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
        for e in &self.ends {
            *counts.entry(*e).or_default() += 1;
        }
        counts.values().copied().max().unwrap_or(0)
    }

    /// `G - X` for a vertex set or an edge set. Mixing the two is an error.
    pub fn delete(&self, selection: &[Element]) -> Result<Self> {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for el in selection {
            match *el {
                Element::Vertex(v) => vertices.push(v),
                Element::Edge(e) => edges.push(e),
            }
        }
        match (vertices.is_empty(), edges.is_empty()) {
            (false, false) => Err(Error::MixedSelection),
            (false, true) => self.delete_vertices(&vertices),
            _ => self.delete_edges(&edges),
        }
    }

    /// `G[V(G) - X]`. Survivors are renumbered ascending and keep their labels.
    pub fn delete_vertices(&self, xs: &[VertexId]) -> Result<Self> {
        let removed = self.vertex_mask(xs)?;
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        let mut vlabels = Vec::new();
        for v in self.vertices().filter(|&v| !removed[v]) {
            new_id[v] = vlabels.len();
            vlabels.push(self.vertex_label(v));
        }
        let mut edges = Vec::new();
        let mut elabels = Vec::new();
        for (e, &(u, v)) in self.ends.iter().enumerate() {
            if !removed[u] && !removed[v] {
                edges.push((new_id[u], new_id[v]));
                elabels.push(self.edge_label(e));
            }
        }
        Self::new(vlabels.len(), edges)?
            .with_vertex_labels(vlabels)?
            .with_edge_labels(elabels)
    }

    /// `G[E(G) - X]` keeping every vertex.
    pub fn delete_edges(&self, xs: &[EdgeId]) -> Result<Self> {
        let removed = self.edge_mask(xs)?;
        let keep: Vec<EdgeId> = self.edges().filter(|&e| !removed[e]).collect();
        let g = Self::new(self.vertex_count(), keep.iter().map(|&e| self.ends[e]))?;
        let g = match &self.vertex_labels {
            Some(l) => g.with_vertex_labels(l.clone())?,
            None => g,
        };
        g.with_edge_labels(keep.iter().map(|&e| self.edge_label(e)).collect())
    }

    /// `G/X`: identify the ends of every edge in `X`, drop resulting loops,
    /// keep resulting parallel edges. Merged vertices are numbered by their
    /// smallest original member and labelled with the merged class.
    pub fn contract(&self, xs: &[EdgeId]) -> Result<Self> {
        let mask = self.edge_mask(xs)?;
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in self.edges().filter(|&e| mask[e]) {
            let (u, v) = self.ends[e];
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru.max(rv)] = ru.min(rv);
            }
        }
        let mut class_id = vec![usize::MAX; n];
        let mut members: Vec<Vec<VertexId>> = Vec::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            if class_id[r] == usize::MAX {
                class_id[r] = members.len();
                members.push(Vec::new());
            }
            class_id[v] = class_id[r];
            members[class_id[v]].push(v);
        }
        let vlabels = members
            .iter()
            .map(|m| {
                if m.len() == 1 {
                    self.vertex_label(m[0])
                } else {
                    let parts: Vec<_> = m.iter().map(|&v| self.vertex_label(v)).collect();
                    format!("{{{}}}", parts.join(","))
                }
            })
            .collect();
        let mut edges = Vec::new();
        let mut elabels = Vec::new();
        for (e, &(u, v)) in self.ends.iter().enumerate() {
            let (cu, cv) = (class_id[u], class_id[v]);
            if cu != cv {
                edges.push((cu, cv));
                elabels.push(self.edge_label(e));
            }
        }
        Self::new(members.len(), edges)?
            .with_vertex_labels(vlabels)?
            .with_edge_labels(elabels)
    }

    /// `G(X)`: every edge of `X` is replaced by a path of length two through
    /// a new vertex. New vertices are appended in ascending edge order and
    /// labelled `s<edge label>`; the two halves are labelled `<label>a`,
    /// `<label>b`.
    pub fn subdivide(&self, xs: &[EdgeId]) -> Result<Self> {
        let mask = self.edge_mask(xs)?;
        let mut vlabels: Vec<String> = self.vertices().map(|v| self.vertex_label(v)).collect();
        let mut edges = Vec::with_capacity(self.edge_count() + xs.len());
        let mut elabels = Vec::with_capacity(edges.capacity());
        for (e, &(u, v)) in self.ends.iter().enumerate() {
            let label = self.edge_label(e);
            if mask[e] {
                let mid = vlabels.len();
                vlabels.push(format!("s{label}"));
                edges.push((u, mid));
                elabels.push(format!("{label}a"));
                edges.push((mid, v));
                elabels.push(format!("{label}b"));
            } else {
                edges.push((u, v));
                elabels.push(label);
            }
        }
        Self::new(vlabels.len(), edges)?
            .with_vertex_labels(vlabels)?
            .with_edge_labels(elabels)
    }

    /// The subgraph formed by an edge set: its edges plus their endpoints.
    /// Returns the graph and, for each of its vertices, the original id.
    pub fn edge_induced(&self, xs: &[EdgeId]) -> Result<(Self, Vec<VertexId>)> {
        let mask = self.edge_mask(xs)?;
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        let mut origin = Vec::new();
        let mut edges = Vec::new();
        for e in self.edges().filter(|&e| mask[e]) {
            let (u, v) = self.ends[e];
            for x in [u, v] {
                if new_id[x] == usize::MAX {
                    new_id[x] = origin.len();
                    origin.push(x);
                }
            }
            edges.push((new_id[u], new_id[v]));
        }
        Ok((Self::new(origin.len(), edges)?, origin))
    }

    /// Renames vertex `v` to `perm[v]`. Edge ids are preserved.
    pub fn permute_vertices(&self, perm: &[VertexId]) -> Result<Self> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Precondition("not a permutation".into()));
        }
        Self::new(n, self.ends.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Sorted degree sequence, descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    fn vertex_mask(&self, xs: &[VertexId]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.vertex_count()];
        for &v in xs {
            if v >= mask.len() {
                return Err(Error::OutOfRange {
                    kind: "vertex",
                    id: v,
                    len: mask.len(),
                });
            }
            mask[v] = true;
        }
        Ok(mask)
    }

    pub(crate) fn edge_mask(&self, xs: &[EdgeId]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.edge_count()];
        for &e in xs {
            if e >= mask.len() {
                return Err(Error::OutOfRange {
                    kind: "edge",
                    id: e,
                    len: mask.len(),
                });
            }
            mask[e] = true;
        }
        Ok(mask)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn classify_exceptional_family() {
        assert_eq!(named::star(3).classify().unwrap(), GraphClass::K13);
        let j2 = MultiGraph::new(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(j2.classify().unwrap(), GraphClass::J2);
        let j1 = MultiGraph::new(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(j1.classify().unwrap(), GraphClass::J1);
        assert_eq!(named::path(5).classify().unwrap(), GraphClass::Path);
        assert_eq!(named::cycle(5).classify().unwrap(), GraphClass::Cycle);
        assert_eq!(named::figure_one_tree().classify().unwrap(), GraphClass::InG);
        assert_eq!(named::complete(4).classify().unwrap(), GraphClass::InG);
        assert_eq!(
            MultiGraph::new(4, [(0, 1), (2, 3)]).unwrap().classify().unwrap(),
            GraphClass::Disconnected
        );
        assert_eq!(MultiGraph::empty(0).classify(), Err(Error::EmptyGraph));
    }

    #[test]
    fn loops_rejected() {
        assert!(matches!(
            MultiGraph::new(2, [(0, 1), (1, 1)]),
            Err(Error::Loop { edge: 1, vertex: 1 })
        ));
    }

    #[test]
    fn delete_examples() {
        let k2 = named::complete(3).delete(&[Element::Vertex(0)]).unwrap();
        assert_eq!((k2.vertex_count(), k2.edge_count()), (2, 1));
        let k4e = named::complete(4).delete(&[Element::Edge(0)]).unwrap();
        assert_eq!((k4e.vertex_count(), k4e.edge_count()), (4, 5));
        let tree = named::figure_one_tree();
        let centers = tree.degree_view().of_degree(3).to_vec();
        let sel: Vec<_> = centers.iter().map(|&v| Element::Vertex(v)).collect();
        let rest = tree.delete(&sel).unwrap();
        assert_eq!((rest.vertex_count(), rest.edge_count()), (4, 0));
        assert_eq!(
            tree.delete(&[Element::Vertex(0), Element::Edge(0)]),
            Err(Error::MixedSelection)
        );
    }

    #[test]
    fn contract_examples() {
        let k3 = named::complete(3);
        let c = k3.contract(&[0]).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count()), (2, 2));
        assert!(!c.is_simple());

        let k4 = named::complete(4);
        let all: Vec<_> = k4.edges().collect();
        let point = k4.contract(&all).unwrap();
        assert_eq!((point.vertex_count(), point.edge_count()), (1, 0));

        // triangle on {0,1,2}
        let tri: Vec<_> = k4
            .edges()
            .filter(|&e| {
                let (u, v) = k4.ends(e);
                u < 3 && v < 3
            })
            .collect();
        let c = k4.contract(&tri).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count()), (2, 3));
        assert_eq!(c.vertex_label(0), "{0,1,2}");
        assert_eq!(c.classify().unwrap(), GraphClass::J2);
    }

    #[test]
    fn subdivide_examples() {
        let c3 = named::cycle(3);
        let c4 = c3.subdivide(&[0]).unwrap();
        assert_eq!(c4.classify().unwrap(), GraphClass::Cycle);
        assert_eq!(c4.vertex_count(), 4);
        assert_eq!(c3.subdivide(&[]).unwrap().unlabeled(), c3);

        let k4 = named::complete(4);
        let all: Vec<_> = k4.edges().collect();
        let s = k4.subdivide(&all).unwrap();
        assert_eq!((s.vertex_count(), s.edge_count()), (10, 12));
        assert_eq!(s.min_degree(), Some(2));
        assert_eq!(s.vertex_label(4), "s0");
    }

    #[test]
    fn degree_view_partitions_vertices() {
        let g = named::figure_one_tree();
        let view = g.degree_view();
        assert_eq!(view.of_degree(1).len(), 4);
        assert_eq!(view.of_degree(3).len(), 2);
        assert_eq!(view.odd.len(), 6);
        assert_eq!(view.min_degree, 1);
    }
}
