//! Divalent path statistics and the minimum-degree-three depth `d~(G)`.
//!
//! A divalent path has every internal vertex of degree 2. The maximal ones
//! ("branches") run between vertices of degree other than 2; each edge of
//! a graph lies on exactly one branch unless its component is a cycle of
//! degree-2 vertices.
//!
//! Conventions:
//! * a missing path category contributes 0 (`l2 = 0` when no vertex of
//!   degree >= 4 carries a pendant branch);
//! * `l3` also counts closed branches, which start and end at the same
//!   vertex of degree >= 3. [`DivalentProfile::ell3_open`] keeps the
//!   open-only reading so the two can be compared.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, VertexId};
use crate::line::{line_graph, LineTower, Subset};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivalentPath {
    /// Vertex sequence, both ends included. Closed paths repeat the anchor.
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub end_degrees: (usize, usize),
    pub closed: bool,
    /// The path is contained in a triangle of the graph.
    pub in_triangle: bool,
}

impl DivalentPath {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Branches {
    /// Maximal divalent paths between vertices of degree != 2.
    pub paths: Vec<DivalentPath>,
    /// Components in which every vertex has degree 2.
    pub pure_cycles: Vec<DivalentPath>,
}

fn path_in_triangle(g: &MultiGraph, vertices: &[VertexId], closed: bool) -> bool {
    let len = vertices.len() - 1;
    match (closed, len) {
        (false, 1) => {
            let (u, v) = (vertices[0], vertices[1]);
            g.neighbors(u)
                .iter()
                .any(|&w| w != v && g.adjacent(w, v))
        }
        (false, 2) => g.adjacent(vertices[0], vertices[2]),
        (true, 3) => vertices[0] != vertices[2] && vertices[1] != vertices[3],
        _ => false,
    }
}

fn make_path(g: &MultiGraph, vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> DivalentPath {
    let first = vertices[0];
    let last = *vertices.last().expect("non-empty");
    let closed = first == last && !edges.is_empty();
    DivalentPath {
        end_degrees: (g.degree(first), g.degree(last)),
        in_triangle: path_in_triangle(g, &vertices, closed),
        closed,
        vertices,
        edges,
    }
}

/// Every maximal divalent path exactly once, in order of the smaller anchor
/// and then incidence order.
pub fn divalent_paths(g: &MultiGraph) -> Branches {
    let mut used = vec![false; g.edge_count()];
    let mut out = Branches::default();
    let walk = |start: VertexId, first: EdgeId, used: &mut Vec<bool>| {
        let mut vertices = vec![start];
        let mut edges = Vec::new();
        let (mut cur, mut e) = (start, first);
        loop {
            used[e] = true;
            edges.push(e);
            let next = g.other_end(e, cur);
            vertices.push(next);
            if g.degree(next) != 2 || next == start {
                break;
            }
            let inc = g.incident(next);
            e = if inc[0] == e { inc[1] } else { inc[0] };
            cur = next;
        }
        (vertices, edges)
    };
    for a in g.vertices().filter(|&v| g.degree(v) != 2) {
        for &e in g.incident(a) {
            if !used[e] {
                let (vs, es) = walk(a, e, &mut used);
                out.paths.push(make_path(g, vs, es));
            }
        }
    }
    for v in g.vertices() {
        if let Some(&e) = g.incident(v).iter().find(|&&e| !used[e]) {
            let (vs, es) = walk(v, e, &mut used);
            out.pure_cycles.push(make_path(g, vs, es));
        }
    }
    out
}

/// Longest proper (non-closed, not a 2-path inside a triangle) divalent
/// sub-path of a branch.
fn longest_proper(g: &MultiGraph, p: &DivalentPath) -> Option<DivalentPath> {
    let (vs, es) = if p.closed {
        // drop the closing edge: the anchor may only be an end
        (p.vertices[..p.vertices.len() - 1].to_vec(), p.edges[..p.edges.len() - 1].to_vec())
    } else {
        (p.vertices.clone(), p.edges.clone())
    };
    if es.is_empty() {
        return None;
    }
    let candidate = make_path(g, vs, es);
    if candidate.len() == 2 && candidate.in_triangle {
        Some(make_path(g, candidate.vertices[..2].to_vec(), candidate.edges[..1].to_vec()))
    } else {
        Some(candidate)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Witnesses {
    pub ell: Option<DivalentPath>,
    pub ell1: Option<DivalentPath>,
    pub ell2: Option<DivalentPath>,
    pub ell3: Option<DivalentPath>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DivalentProfile {
    pub ell: usize,
    pub ell1: usize,
    pub ell2: usize,
    pub ell3: usize,
    /// `l3` restricted to non-closed paths.
    pub ell3_open: usize,
    pub ell0: i64,
    pub pendant_condition: bool,
    pub d_tilde_formula: usize,
    /// The same formula with `l3` taken over non-closed paths only.
    pub d_tilde_formula_open: usize,
    pub d_tilde_direct: Option<usize>,
    pub witnesses: Witnesses,
}

impl DivalentProfile {
    pub fn agreement(&self) -> Option<bool> {
        self.d_tilde_direct.map(|d| d == self.d_tilde_formula)
    }
}

fn ensure_admissible(g: &MultiGraph) -> Result<()> {
    let class = g.classify()?;
    if class.is_admissible() {
        Ok(())
    } else {
        Err(Error::NotAdmissible(class))
    }
}

/// Some degree-3 vertex has exactly two edges to vertices with a single neighbour.
pub fn pendant_condition(g: &MultiGraph) -> bool {
    let lonely: Vec<bool> = g.vertices().map(|v| g.neighbors(v).len() == 1).collect();
    g.vertices().filter(|&v| g.degree(v) == 3).any(|v| {
        g.incident(v)
            .iter()
            .filter(|&&e| {
                let (a, b) = g.ends(e);
                lonely[a] || lonely[b]
            })
            .count()
            == 2
    })
}

fn max_by_len(paths: impl Iterator<Item = DivalentPath>) -> Option<DivalentPath> {
    // first path of maximum length, for deterministic witnesses
    paths.fold(None, |best: Option<DivalentPath>, p| match &best {
        Some(b) if b.len() >= p.len() => best,
        _ => Some(p),
    })
}

fn formula_value(delta: usize, ell0: i64, pendant: bool) -> usize {
    if delta >= 3 {
        return 0;
    }
    let base = ell0.max(0) as usize;
    if pendant {
        base.max(3)
    } else {
        base
    }
}

/// Computes every statistic; `d_tilde_direct` uses the tower within `caps`.
pub fn ell_statistics(g: &MultiGraph, caps: &Caps) -> Result<DivalentProfile> {
    let mut profile = path_statistics(g)?;
    profile.d_tilde_direct = d_tilde_direct(g, caps).value;
    Ok(profile)
}

/// All statistics except `d_tilde_direct`, which is left `None`.
pub fn path_statistics(g: &MultiGraph) -> Result<DivalentProfile> {
    ensure_admissible(g)?;
    let branches = divalent_paths(g);
    let degs = |p: &DivalentPath| {
        let (a, b) = p.end_degrees;
        (a.min(b), a.max(b))
    };
    let open = || branches.paths.iter().filter(|p| !p.closed);

    let ell_w = max_by_len(branches.paths.iter().filter_map(|p| longest_proper(g, p)));
    let ell1_w = max_by_len(open().filter(|p| degs(p) == (1, 3)).cloned());
    let ell2_w = max_by_len(open().filter(|p| degs(p).0 == 1 && degs(p).1 >= 4).cloned());
    let ell3_open_w = max_by_len(open().filter(|p| degs(p).0 >= 3).cloned());
    let ell3_w = max_by_len(
        branches
            .paths
            .iter()
            .filter(|p| degs(p).0 >= 3)
            .cloned(),
    );
    let len = |w: &Option<DivalentPath>| w.as_ref().map_or(0, DivalentPath::len);
    let (ell, ell1, ell2, ell3, ell3_open) = (
        len(&ell_w),
        len(&ell1_w),
        len(&ell2_w),
        len(&ell3_w),
        len(&ell3_open_w),
    );
    let ell0_of = |l3: usize| (ell1 as i64 + 1).max(ell2 as i64).max(l3 as i64 - 1);
    let ell0 = ell0_of(ell3);
    let pendant = pendant_condition(g);
    let delta = g.min_degree().unwrap_or(0);
    Ok(DivalentProfile {
        ell,
        ell1,
        ell2,
        ell3,
        ell3_open,
        ell0,
        pendant_condition: pendant,
        d_tilde_formula: formula_value(delta, ell0, pendant),
        d_tilde_formula_open: formula_value(delta, ell0_of(ell3_open), pendant),
        d_tilde_direct: None,
        witnesses: Witnesses {
            ell: ell_w,
            ell1: ell1_w,
            ell2: ell2_w,
            ell3: ell3_w,
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DTildeMode {
    Formula,
    Direct,
    Audit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectDepth {
    pub value: Option<usize>,
    /// Deepest level built; meaningful when `value` is `None`.
    pub last_level: usize,
}

/// `min { i : delta(L^i(g)) >= 3 }` by building the tower; `None` when the
/// caps stop the tower first.
pub fn d_tilde_direct(g: &MultiGraph, caps: &Caps) -> DirectDepth {
    let mut tower = LineTower::start(g.clone(), caps.max_depth, caps.max_vertices);
    loop {
        if tower.top().min_degree().unwrap_or(0) >= 3 {
            return DirectDepth {
                value: Some(tower.depth()),
                last_level: tower.depth(),
            };
        }
        if !tower.advance() {
            return DirectDepth {
                value: None,
                last_level: tower.depth(),
            };
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DTildeResult {
    pub formula: Option<usize>,
    pub direct: Option<usize>,
    /// Set in direct and audit modes when the tower caps were reached.
    pub undetermined: bool,
    pub agree: Option<bool>,
}

pub fn d_tilde(g: &MultiGraph, mode: DTildeMode, caps: &Caps) -> Result<DTildeResult> {
    ensure_admissible(g)?;
    let formula = || path_statistics(g).map(|p| p.d_tilde_formula);
    let (formula, direct) = match mode {
        DTildeMode::Formula => (Some(formula()?), None),
        DTildeMode::Direct => (None, Some(d_tilde_direct(g, caps))),
        DTildeMode::Audit => (Some(formula()?), Some(d_tilde_direct(g, caps))),
    };
    let direct_value = direct.as_ref().and_then(|d| d.value);
    Ok(DTildeResult {
        formula,
        direct: direct_value,
        undetermined: direct.is_some() && direct_value.is_none(),
        agree: match (formula, direct_value) {
            (Some(f), Some(d)) => Some(f == d),
            _ => None,
        },
    })
}

/// Every non-closed divalent sub-path of length >= 1 (branch windows that
/// use a closed branch's anchor at most once).
pub fn all_divalent_subpaths(g: &MultiGraph) -> Vec<DivalentPath> {
    let mut out = Vec::new();
    for p in divalent_paths(g).paths {
        let n = p.vertices.len();
        for i in 0..n {
            for j in i + 1..n {
                if p.closed && i == 0 && j == n - 1 {
                    continue;
                }
                out.push(make_path(g, p.vertices[i..=j].to_vec(), p.edges[i..j].to_vec()));
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct PullbackViolation {
    pub path_in_line_graph: Vec<VertexId>,
    pub preimage_edges: Vec<EdgeId>,
    pub reason: String,
}

/// Checks that an edge set of `g` is a divalent path of the given length
/// whose end degrees are `ends` (as a multiset). A closed path (a cycle
/// through at most one vertex of degree other than 2) has that vertex as
/// both ends.
pub fn is_divalent_path_edge_set(
    g: &MultiGraph,
    edges: &BTreeSet<EdgeId>,
    length: usize,
    ends: (usize, usize),
) -> std::result::Result<(), String> {
    if edges.len() != length {
        return Err(format!("expected {length} edges, found {}", edges.len()));
    }
    let mut local: std::collections::BTreeMap<VertexId, usize> = Default::default();
    for &e in edges {
        let (a, b) = g.ends(e);
        *local.entry(a).or_default() += 1;
        *local.entry(b).or_default() += 1;
    }
    let (sub, _) = g.edge_induced(&edges.iter().copied().collect::<Vec<_>>()).map_err(|e| e.to_string())?;
    if !sub.is_connected() {
        return Err("edge set is disconnected".into());
    }
    if local.values().any(|&d| d > 2) {
        return Err("edge set is not a path".into());
    }
    let terminals: Vec<_> = if local.len() == length + 1 {
        local.iter().filter(|(_, &d)| d == 1).map(|(&v, _)| v).collect()
    } else if local.len() == length {
        // closed: one anchor of any degree, the rest divalent
        let anchors: Vec<_> = local.keys().copied().filter(|&v| g.degree(v) != 2).collect();
        match anchors[..] {
            [] => vec![*local.keys().next().expect("non-empty"); 2],
            [a] => vec![a, a],
            _ => return Err("closed edge set has more than one vertex of degree other than 2".into()),
        }
    } else {
        return Err("edge set is not a path".into());
    };
    if terminals.len() != 2 {
        return Err("edge set is not a path".into());
    }
    for (&v, _) in local.iter().filter(|(&v, _)| !terminals.contains(&v)) {
        if g.degree(v) != 2 {
            return Err(format!("internal vertex {v} has degree {}", g.degree(v)));
        }
    }
    let mut got = [g.degree(terminals[0]), g.degree(terminals[1])];
    let mut want = [ends.0, ends.1];
    got.sort_unstable();
    want.sort_unstable();
    if got != want {
        return Err(format!("end degrees {got:?}, expected {want:?}"));
    }
    Ok(())
}

/// One-level pullback check: every divalent path of `L(g)` of length `r >= 1`
/// that is not inside a triangle pulls back to a divalent path of `g` with
/// the same end degrees and length `r + 1`.
pub fn pullback_violations(g: &MultiGraph) -> Result<Vec<PullbackViolation>> {
    let tower = LineTower::build(g, 1, usize::MAX);
    let lg = tower.level(1).ok_or(Error::LineGraphUndefined)?;
    let mut out = Vec::new();
    for p in all_divalent_subpaths(lg) {
        if p.in_triangle {
            continue;
        }
        let pre = match tower.pull_back(1, &Subset::Vertices(p.vertices.iter().copied().collect()), 1)? {
            Subset::Edges(es) => es,
            Subset::Vertices(_) => unreachable!("pullback of vertices yields edges"),
        };
        if let Err(reason) = is_divalent_path_edge_set(g, &pre, p.len() + 1, p.end_degrees) {
            out.push(PullbackViolation {
                path_in_line_graph: p.vertices.clone(),
                preimage_edges: pre.into_iter().collect(),
                reason,
            });
        }
    }
    Ok(out)
}

/// Pullback of a witness path from `L(g)`: the source edges of its vertices.
pub fn pull_back_path(g: &MultiGraph, p: &DivalentPath) -> Result<BTreeSet<EdgeId>> {
    let l = line_graph(g)?;
    Ok(p.vertices.iter().map(|&v| l.source_edge[v]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn profile(g: &MultiGraph) -> DivalentProfile {
        ell_statistics(g, &Caps::default()).unwrap()
    }

    #[test]
    fn figure_one_branches() {
        let g = named::figure_one_tree();
        let b = divalent_paths(&g);
        let mut kinds: Vec<_> = b
            .paths
            .iter()
            .map(|p| {
                let (x, y) = p.end_degrees;
                (x.min(y), x.max(y), p.len())
            })
            .collect();
        kinds.sort();
        assert_eq!(kinds, vec![(1, 3, 1), (1, 3, 1), (1, 3, 1), (1, 3, 1), (3, 3, 1)]);
        assert!(b.pure_cycles.is_empty());
    }

    #[test]
    fn cycle_is_a_pure_cycle() {
        let b = divalent_paths(&named::cycle(5));
        assert!(b.paths.is_empty());
        assert_eq!(b.pure_cycles.len(), 1);
        assert!(b.pure_cycles[0].closed);
        assert_eq!(b.pure_cycles[0].len(), 5);
    }

    #[test]
    fn bowtie_closed_traversals() {
        let b = divalent_paths(&named::bowtie());
        assert_eq!(b.paths.len(), 2);
        for p in &b.paths {
            assert!(p.closed);
            assert_eq!(p.len(), 3);
            assert_eq!(p.end_degrees, (4, 4));
            assert!(p.in_triangle);
        }
    }

    #[test]
    fn figure_one_profile() {
        let p = profile(&named::figure_one_tree());
        assert_eq!((p.ell1, p.ell2, p.ell3, p.ell0), (1, 0, 1, 2));
        assert_eq!(p.ell, 1);
        assert!(p.pendant_condition);
        assert_eq!(p.d_tilde_formula, 3);
        assert_eq!(p.d_tilde_direct, Some(3));
    }

    #[test]
    fn bowtie_profile() {
        let p = profile(&named::bowtie());
        assert_eq!((p.ell3, p.ell0), (3, 2));
        assert_eq!(p.ell3_open, 0);
        assert_eq!(p.d_tilde_direct, Some(2));
        assert_eq!(p.d_tilde_formula, 2);
        // the open-only reading undercounts here
        assert_eq!(p.d_tilde_formula_open, 1);
        assert_eq!(p.ell, 1);
    }

    #[test]
    fn star_profile() {
        let p = profile(&named::star(4));
        assert_eq!((p.ell2, p.ell0), (1, 1));
        assert_eq!(p.d_tilde_direct, Some(1));
        assert_eq!(p.d_tilde_formula, 1);
    }

    #[test]
    fn d_tilde_modes() {
        let caps = Caps::default();
        let r = d_tilde(&named::figure_one_tree(), DTildeMode::Audit, &caps).unwrap();
        assert_eq!((r.formula, r.direct, r.agree), (Some(3), Some(3), Some(true)));
        let r = d_tilde(&named::petersen(), DTildeMode::Formula, &caps).unwrap();
        assert_eq!(r.formula, Some(0));
        let r = d_tilde(&named::petersen(), DTildeMode::Direct, &caps).unwrap();
        assert_eq!(r.direct, Some(0));
        assert!(d_tilde(&named::path(5), DTildeMode::Audit, &caps).is_err());
    }

    #[test]
    fn direct_reports_undetermined_at_cap() {
        let caps = Caps {
            max_depth: 2,
            ..Caps::default()
        };
        let r = d_tilde(&named::figure_one_tree(), DTildeMode::Audit, &caps).unwrap();
        assert!(r.undetermined);
        assert_eq!(r.direct, None);
        assert_eq!(r.agree, None);
    }

    #[test]
    fn proper_length_excludes_triangle_two_paths() {
        // triangle 0-1-2 where 1 has degree 2, plus pendant edges making 0, 2 degree 3+
        let g = MultiGraph::new(5, [(0, 1), (1, 2), (0, 2), (0, 3), (2, 4), (3, 4)]).unwrap();
        let p = profile(&g);
        // branch 0-1-2 has length 2 and sits in a triangle; 0-3-4-2 has length 3
        assert_eq!(p.ell, 3);
        let g = MultiGraph::new(4, [(0, 1), (1, 2), (0, 2), (0, 3), (2, 3)]).unwrap();
        // branches: 0-1-2 (in triangle), 0-3-2 (in triangle), 0-2
        assert_eq!(profile(&g).ell, 1);
    }

    #[test]
    fn pullback_on_long_branch() {
        // two degree-3 hubs joined by a path of length 3
        let g = MultiGraph::new(
            8,
            [(0, 2), (0, 3), (0, 4), (4, 5), (5, 1), (1, 6), (1, 7)],
        )
        .unwrap();
        let lg = line_graph(&g).unwrap().graph;
        let p = all_divalent_subpaths(&lg)
            .into_iter()
            .find(|p| p.end_degrees == (3, 3) && p.len() == 2 && !p.in_triangle)
            .expect("(3,3)-path of length 2 in L(g)");
        let pre = pull_back_path(&g, &p).unwrap();
        assert!(is_divalent_path_edge_set(&g, &pre, 3, (3, 3)).is_ok());
        assert!(pullback_violations(&g).unwrap().is_empty());
    }

    #[test]
    fn pullback_lemma_on_named_graphs() {
        for name in ["fig1-tree", "bowtie", "K14", "petersen", "cube", "K4"] {
            let g = named::by_name(name).unwrap();
            assert!(pullback_violations(&g).unwrap().is_empty(), "{name}");
        }
    }

    #[test]
    fn pullback_may_close_up() {
        // a 4-cycle through a degree-3 vertex with a pendant edge
        let g = MultiGraph::new(5, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 4)]).unwrap();
        let closed: BTreeSet<EdgeId> = [0, 1, 3, 4].into();
        assert!(is_divalent_path_edge_set(&g, &closed, 4, (3, 3)).is_ok());
        assert!(is_divalent_path_edge_set(&g, &closed, 4, (3, 2)).is_err());
        assert!(pullback_violations(&g).unwrap().is_empty());
        let bowtie = named::bowtie();
        let two_cycles: BTreeSet<EdgeId> = (0..6).collect();
        assert!(is_divalent_path_edge_set(&bowtie, &two_cycles, 6, (4, 4)).is_err());
    }
}
