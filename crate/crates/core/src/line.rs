//! The line graph operator, iterated towers and subset pullback.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, VertexId};

pub const DEFAULT_MAX_VERTICES: usize = 200_000;
pub const DEFAULT_MAX_DEPTH: usize = 12;

/// A line graph together with the map from its vertices to source edges.
#[derive(Clone, Debug)]
pub struct LineGraph {
    pub graph: MultiGraph,
    /// `source_edge[v]` is the edge of the source graph that vertex `v` represents.
    pub source_edge: Vec<EdgeId>,
}

/// `L(G)`: vertices are the edges of `g`, adjacent when they share an end.
/// Parallel edges of `g` give a single adjacency, so `L(G)` is always simple.
/// Edges of the result are sorted lexicographically.
pub fn line_graph(g: &MultiGraph) -> Result<LineGraph> {
    if g.edge_count() == 0 {
        return Err(Error::LineGraphUndefined);
    }
    let simple = g.is_simple();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for v in g.vertices() {
        let inc = g.incident(v);
        for (i, &a) in inc.iter().enumerate() {
            for &b in &inc[i + 1..] {
                pairs.push((a.min(b), a.max(b)));
            }
        }
    }
    pairs.sort_unstable();
    if !simple {
        pairs.dedup();
    }
    Ok(LineGraph {
        graph: MultiGraph::new(g.edge_count(), pairs)?,
        source_edge: g.edges().collect(),
    })
}

/// A vertex or edge subset of one tower level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Subset {
    Vertices(BTreeSet<VertexId>),
    Edges(BTreeSet<EdgeId>),
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelSummary {
    pub level: usize,
    pub vertices: usize,
    pub edges: usize,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
    /// Largest `k` with the level `k`-triangular; `None` when edgeless.
    pub triangularity: Option<u32>,
}

/// `G = L^0(G), L^1(G), ..., L^d(G)` with provenance maps between levels.
#[derive(Clone, Debug)]
pub struct LineTower {
    levels: Vec<MultiGraph>,
    /// `up_maps[i - 1][v]` is the edge of level `i - 1` behind vertex `v` of level `i`.
    up_maps: Vec<Vec<EdgeId>>,
    pub max_vertices: usize,
    pub max_depth: usize,
    /// Set when a level would have exceeded `max_vertices` (or the next line
    /// graph was undefined) before `max_depth` was reached.
    pub truncated: bool,
}

impl LineTower {
    /// A tower holding only `g`, ready to be extended with [`LineTower::advance`].
    pub fn start(g: MultiGraph, max_depth: usize, max_vertices: usize) -> Self {
        Self {
            levels: vec![g],
            up_maps: Vec::new(),
            max_vertices,
            max_depth,
            truncated: false,
        }
    }

    /// Builds levels up to `depth`, stopping early (and flagging it) if a
    /// level would exceed `max_vertices`.
    pub fn build(g: &MultiGraph, depth: usize, max_vertices: usize) -> Self {
        let mut tower = Self::start(g.clone(), depth, max_vertices);
        while tower.depth() < depth && tower.advance() {}
        tower
    }

    /// Appends the next level. Returns `false` without modifying the levels
    /// when the depth or vertex cap forbids it.
    pub fn advance(&mut self) -> bool {
        if self.depth() >= self.max_depth {
            return false;
        }
        let top = self.top();
        if top.edge_count() > self.max_vertices || top.edge_count() == 0 {
            self.truncated = true;
            return false;
        }
        let next = line_graph(top).expect("top level has edges");
        self.levels.push(next.graph);
        self.up_maps.push(next.source_edge);
        true
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, i: usize) -> Option<&MultiGraph> {
        self.levels.get(i)
    }

    pub fn levels(&self) -> &[MultiGraph] {
        &self.levels
    }

    pub fn top(&self) -> &MultiGraph {
        self.levels.last().expect("tower is never empty")
    }

    pub fn up_map(&self, level: usize) -> Option<&[EdgeId]> {
        level.checked_sub(1).and_then(|i| self.up_maps.get(i)).map(Vec::as_slice)
    }

    /// `L^{-j}` of a subset of level `level`. Vertices of level `i` map to
    /// their source edges in level `i - 1`; an edge set of level `i` maps to
    /// the source edges of all its endpoints.
    pub fn pull_back(&self, level: usize, subset: &Subset, j: usize) -> Result<Subset> {
        if level > self.depth() {
            return Err(Error::OutOfRange {
                kind: "level",
                id: level,
                len: self.depth() + 1,
            });
        }
        if j > level {
            return Err(Error::Precondition(format!(
                "cannot pull back {j} levels from level {level}"
            )));
        }
        self.check_subset(level, subset)?;
        let mut current = subset.clone();
        for i in (level - j + 1..=level).rev() {
            let up = &self.up_maps[i - 1];
            let g = &self.levels[i];
            current = match current {
                Subset::Vertices(vs) => Subset::Edges(vs.iter().map(|&v| up[v]).collect()),
                Subset::Edges(es) => Subset::Edges(
                    es.iter()
                        .flat_map(|&e| {
                            let (a, b) = g.ends(e);
                            [up[a], up[b]]
                        })
                        .collect(),
                ),
            };
        }
        Ok(current)
    }

    fn check_subset(&self, level: usize, subset: &Subset) -> Result<()> {
        let g = &self.levels[level];
        let (kind, ids, len) = match subset {
            Subset::Vertices(vs) => ("vertex", vs, g.vertex_count()),
            Subset::Edges(es) => ("edge", es, g.edge_count()),
        };
        match ids.iter().next_back() {
            Some(&id) if id >= len => Err(Error::OutOfRange { kind, id, len }),
            _ => Ok(()),
        }
    }

    pub fn summaries(&self) -> Vec<LevelSummary> {
        self.levels
            .iter()
            .enumerate()
            .map(|(level, g)| summarize(level, g))
            .collect()
    }
}

pub fn summarize(level: usize, g: &MultiGraph) -> LevelSummary {
    LevelSummary {
        level,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        triangularity: crate::triangular::triangularity(g),
    }
}

/// True when `g` has no induced `K_{1,3}`.
pub fn is_claw_free(g: &MultiGraph) -> bool {
    let adj = g.simple_adjacency();
    let adjacent = |a: usize, b: usize| adj[a].binary_search(&b).is_ok();
    for nbrs in &adj {
        // an independent triple in N(v) is a claw centred at v
        for (i, &a) in nbrs.iter().enumerate() {
            for (j, &b) in nbrs.iter().enumerate().skip(i + 1) {
                if adjacent(a, b) {
                    continue;
                }
                if nbrs[j + 1..]
                    .iter()
                    .any(|&c| !adjacent(a, c) && !adjacent(b, c))
                {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphClass;
    use crate::named;

    #[test]
    fn small_line_graphs() {
        let p3 = line_graph(&named::path(4)).unwrap().graph;
        assert_eq!(p3.classify().unwrap(), GraphClass::Path);
        assert_eq!(p3.vertex_count(), 3);

        let k3 = line_graph(&named::star(3)).unwrap().graph;
        assert_eq!(k3, named::complete(3));

        let bowtie = line_graph(&named::figure_one_tree()).unwrap().graph;
        assert_eq!(bowtie.vertex_count(), 5);
        assert_eq!(bowtie.degree_sequence(), vec![4, 2, 2, 2, 2]);
        assert_eq!(crate::triangular::triangle_count_total(&bowtie), 2);
    }

    #[test]
    fn edgeless_is_error() {
        assert!(matches!(
            line_graph(&MultiGraph::empty(3)),
            Err(Error::LineGraphUndefined)
        ));
    }

    #[test]
    fn multigraph_adjacency_is_deduplicated() {
        let j2 = MultiGraph::new(2, [(0, 1), (0, 1), (0, 1)]).unwrap();
        let l = line_graph(&j2).unwrap().graph;
        assert_eq!(l, named::complete(3));
        let j1 = MultiGraph::new(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        let l = line_graph(&j1).unwrap().graph;
        assert_eq!(l, named::complete(3));
    }

    #[test]
    fn tower_truncation_is_flagged() {
        let t = LineTower::build(&named::complete(5), 4, 100);
        assert!(t.truncated);
        assert!(t.depth() < 4);
        assert!(t.levels().iter().all(|g| g.vertex_count() <= 100));

        let c5 = LineTower::build(&named::cycle(5), 3, 100);
        assert!(!c5.truncated);
        assert_eq!(c5.depth(), 3);
        for g in c5.levels() {
            assert_eq!(g.classify().unwrap(), GraphClass::Cycle);
            assert_eq!(g.vertex_count(), 5);
        }
    }

    #[test]
    fn k4_first_level() {
        let t = LineTower::build(&named::complete(4), 1, 1000);
        let l1 = t.level(1).unwrap();
        assert_eq!(l1.vertex_count(), 6);
        assert_eq!(l1.degree_sequence(), vec![4; 6]);
        assert!(crate::triangular::is_k_triangular(l1, 2));
    }

    #[test]
    fn pull_back_basics() {
        let t = LineTower::build(&named::petersen(), 2, 10_000);
        let s = Subset::Vertices([3, 7].into());
        assert_eq!(t.pull_back(2, &s, 0).unwrap(), s);
        let one = t.pull_back(1, &Subset::Vertices([4].into()), 1).unwrap();
        assert_eq!(one, Subset::Edges([t.up_map(1).unwrap()[4]].into()));
        assert!(t.pull_back(1, &s, 2).is_err());
        assert!(t.pull_back(3, &s, 1).is_err());
        assert!(t.pull_back(0, &Subset::Vertices([10].into()), 0).is_err());
    }

    #[test]
    fn claw_detection() {
        assert!(!is_claw_free(&named::star(3)));
        assert!(is_claw_free(&named::complete(4)));
        assert!(!is_claw_free(&named::petersen()));
        assert!(is_claw_free(&line_graph(&named::petersen()).unwrap().graph));
    }
}
