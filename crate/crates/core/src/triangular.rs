//! k-triangularity, the exact k-triangular index and its closed-form bound.

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::ceil_lg_ratio;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph};
use crate::line::LineTower;

const PAR_THRESHOLD: usize = 4096;

fn intersection_size(a: &[usize], b: &[usize]) -> u32 {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Number of triangles through each edge: the common neighbours of its ends.
/// Parallel copies of an edge share the same count.
pub fn triangle_counts(g: &MultiGraph) -> Vec<u32> {
    let adj = g.simple_adjacency();
    let count = |e: EdgeId| {
        let (u, v) = g.ends(e);
        intersection_size(&adj[u], &adj[v])
    };
    if g.edge_count() >= PAR_THRESHOLD {
        (0..g.edge_count()).into_par_iter().map(count).collect()
    } else {
        g.edges().map(count).collect()
    }
}

/// Number of distinct triangles (vertex triples) in `g`.
pub fn triangle_count_total(g: &MultiGraph) -> u64 {
    let adj = g.simple_adjacency();
    let mut total = 0u64;
    for (u, nbrs) in adj.iter().enumerate() {
        for &v in nbrs.iter().filter(|&&v| v > u) {
            total += adj[u]
                .iter()
                .filter(|&&w| w > v && adj[v].binary_search(&w).is_ok())
                .count() as u64;
        }
    }
    total
}

/// Largest `k` such that `g` is `k`-triangular, or `None` for an edgeless graph.
pub fn triangularity(g: &MultiGraph) -> Option<u32> {
    triangle_counts(g).into_iter().min()
}

/// Every edge lies in at least `k` triangles. Vacuous for edgeless graphs.
pub fn is_k_triangular(g: &MultiGraph, k: u32) -> bool {
    triangularity(g).is_none_or(|t| t >= k)
}

#[derive(Clone, Debug, Serialize)]
pub struct TriangularReport {
    pub k: u32,
    pub triangle_counts: Vec<u32>,
    pub is_k_triangular: bool,
    pub t_k_exact: Option<usize>,
    pub t_k_bound: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexProbe {
    /// Smallest level with the property, if one was reached.
    pub value: Option<usize>,
    /// Deepest level examined.
    pub last_level: usize,
    pub cap_hit: bool,
}

/// Smallest `m` with `L^m(g)` `k`-triangular, starting from `m = 0`.
pub fn t_k_exact(g: &MultiGraph, k: u32, caps: &Caps) -> Result<IndexProbe> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let class = g.classify()?;
    if !class.is_admissible() {
        return Err(Error::NotAdmissible(class));
    }
    let mut tower = LineTower::start(g.clone(), caps.max_depth, caps.max_vertices);
    loop {
        let level = tower.depth();
        if is_k_triangular(tower.top(), k) {
            return Ok(IndexProbe {
                value: Some(level),
                last_level: level,
                cap_hit: false,
            });
        }
        if !tower.advance() {
            return Ok(IndexProbe {
                value: None,
                last_level: level,
                cap_hit: true,
            });
        }
    }
}

/// The closed-form upper bound on `t_k` from the minimum degree and `d~`.
pub fn t_k_bound(delta: usize, d_tilde: usize, k: u32) -> Result<u32> {
    if k < 2 {
        return Err(Error::Precondition("the bound needs k >= 2".into()));
    }
    let k64 = u64::from(k);
    let delta64 = delta as u64;
    let value = if delta <= 2 {
        d_tilde as i64 + 1 + ceil_lg_ratio(k64, 1)
    } else if delta64 <= k64 + 1 {
        1 + ceil_lg_ratio(k64, delta64 - 2)
    } else {
        1
    };
    Ok(value as u32)
}

/// Whether `L(g)` is still `k`-triangular for a simple `k`-triangular `g`.
pub fn check_stability(g: &MultiGraph, k: u32) -> Result<bool> {
    if k < 2 {
        return Err(Error::Precondition("stability is stated for k >= 2".into()));
    }
    if !g.is_simple() {
        return Err(Error::Precondition("graph must be simple".into()));
    }
    let class = g.classify()?;
    if !class.is_admissible() {
        return Err(Error::NotAdmissible(class));
    }
    if !is_k_triangular(g, k) {
        return Err(Error::Precondition(format!("graph is not {k}-triangular")));
    }
    let l = crate::line::line_graph(g)?;
    Ok(is_k_triangular(&l.graph, k))
}

/// Whether `g - X` is `(k - |X|)`-triangular for a `k`-triangular `g`.
pub fn triangular_after_deletion(g: &MultiGraph, k: u32, xs: &[EdgeId]) -> Result<bool> {
    let s = xs.len() as u32;
    if s == 0 || s >= k {
        return Err(Error::Precondition(format!("need 1 <= |X| < k, got |X|={s}, k={k}")));
    }
    let mut distinct = xs.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != xs.len() {
        return Err(Error::Precondition("X has repeated edges".into()));
    }
    if !is_k_triangular(g, k) {
        return Err(Error::Precondition(format!("graph is not {k}-triangular")));
    }
    let h = g.delete_edges(xs)?;
    Ok(is_k_triangular(&h, k - s))
}

/// Report for one graph and one `k`; the bound is omitted when `k < 2`.
pub fn report(g: &MultiGraph, k: u32, d_tilde: Option<usize>, caps: &Caps) -> Result<TriangularReport> {
    let counts = triangle_counts(g);
    let is_k = counts.iter().all(|&c| c >= k);
    let exact = t_k_exact(g, k, caps)?;
    let delta = g.min_degree().unwrap_or(0);
    let bound = match d_tilde {
        Some(d) if k >= 2 => Some(t_k_bound(delta, d, k)?),
        _ => None,
    };
    Ok(TriangularReport {
        k,
        triangle_counts: counts,
        is_k_triangular: is_k,
        t_k_exact: exact.value,
        t_k_bound: bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn counts_on_named_graphs() {
        assert!(triangle_counts(&named::complete(4)).iter().all(|&c| c == 2));
        assert!(triangle_counts(&named::petersen()).iter().all(|&c| c == 0));
        let lp = crate::line::line_graph(&named::petersen()).unwrap().graph;
        let counts = triangle_counts(&lp);
        assert!(counts.iter().all(|&c| c >= 1));
        assert!(counts.contains(&1));
    }

    #[test]
    fn parallel_edges_do_not_make_triangles() {
        let g = MultiGraph::new(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(triangle_counts(&g), vec![0, 0, 0]);
        let g = MultiGraph::new(3, [(0, 1), (0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(triangle_counts(&g), vec![1, 1, 1, 1]);
    }

    #[test]
    fn exact_index_examples() {
        let caps = Caps::default();
        assert_eq!(t_k_exact(&named::complete(4), 2, &caps).unwrap().value, Some(0));
        assert_eq!(t_k_exact(&named::petersen(), 2, &caps).unwrap().value, Some(2));
        let t1 = t_k_exact(&named::figure_one_tree(), 1, &caps).unwrap().value.unwrap();
        assert_eq!(t1, 1);
        assert!(t_k_exact(&named::cycle(5), 1, &caps).is_err());
    }

    #[test]
    fn cap_reports_undetermined() {
        let caps = Caps {
            max_vertices: 20,
            ..Caps::default()
        };
        let probe = t_k_exact(&named::petersen(), 8, &caps).unwrap();
        assert_eq!(probe.value, None);
        assert!(probe.cap_hit);
    }

    #[test]
    fn bound_branches() {
        assert_eq!(t_k_bound(1, 3, 2).unwrap(), 5);
        assert_eq!(t_k_bound(3, 0, 2).unwrap(), 2);
        assert_eq!(t_k_bound(5, 0, 2).unwrap(), 1);
        assert_eq!(t_k_bound(3, 0, 8).unwrap(), 4);
        assert_eq!(t_k_bound(4, 0, 5).unwrap(), 3);
        assert!(t_k_bound(3, 0, 1).is_err());
    }

    #[test]
    fn stability_examples() {
        assert!(check_stability(&named::complete(4), 2).unwrap());
        assert!(check_stability(&named::complete(5), 3).unwrap());
        assert!(check_stability(&named::complete(6), 4).unwrap());
        assert!(check_stability(&named::petersen(), 2).is_err());
    }

    #[test]
    fn deletion_examples() {
        let k5 = named::complete(5);
        assert!(triangular_after_deletion(&k5, 3, &[0]).unwrap());
        assert!(triangular_after_deletion(&k5, 3, &[0, 9]).unwrap());
        assert!(triangular_after_deletion(&named::complete(4), 2, &[3]).unwrap());
        assert!(triangular_after_deletion(&k5, 3, &[0, 1, 2]).is_err());
        assert!(triangular_after_deletion(&k5, 3, &[]).is_err());
    }

    #[test]
    fn monotone_in_k() {
        let g = crate::line::line_graph(&named::complete(5)).unwrap().graph;
        let t = triangularity(&g).unwrap();
        for k in 1..=t {
            assert!(is_k_triangular(&g, k));
        }
        assert!(!is_k_triangular(&g, t + 1));
    }
}
