//! Small named graphs used throughout the corpus and tests.

use crate::graph::MultiGraph;

fn build(n: usize, edges: Vec<(usize, usize)>) -> MultiGraph {
    MultiGraph::new(n, edges).expect("named graph is well formed")
}

pub fn complete(n: usize) -> MultiGraph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            edges.push((u, v));
        }
    }
    build(n, edges)
}

/// `P_n` on `n` vertices.
pub fn path(n: usize) -> MultiGraph {
    build(n, (1..n).map(|v| (v - 1, v)).collect())
}

pub fn cycle(n: usize) -> MultiGraph {
    assert!(n >= 3, "simple cycle needs three vertices");
    build(n, (0..n).map(|v| (v, (v + 1) % n)).collect())
}

/// `K_{1,k}` with the center at vertex 0.
pub fn star(k: usize) -> MultiGraph {
    build(k + 1, (1..=k).map(|v| (0, v)).collect())
}

pub fn petersen() -> MultiGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, edges)
}

/// The `d`-dimensional hypercube.
pub fn hypercube(d: u32) -> MultiGraph {
    let n = 1usize << d;
    let mut edges = Vec::new();
    for v in 0..n {
        for b in 0..d {
            let w = v ^ (1 << b);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    build(n, edges)
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> MultiGraph {
    build(5, vec![(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
}

/// The smallest tree whose degrees are all 1 or 3 besides `K_{1,3}`:
/// two adjacent centers (0 and 1), each carrying two leaves.
pub fn figure_one_tree() -> MultiGraph {
    build(6, vec![(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
}

/// Names accepted by [`by_name`], in corpus order.
pub const NAMES: &[&str] = &[
    "K3", "K4", "K5", "K13", "K14", "P5", "bowtie", "petersen", "cube", "fig1-tree",
];

pub fn by_name(name: &str) -> Option<MultiGraph> {
    Some(match name {
        "K3" => complete(3),
        "K4" => complete(4),
        "K5" => complete(5),
        "K13" => star(3),
        "K14" => star(4),
        "P5" => path(5),
        "C5" => cycle(5),
        "bowtie" => bowtie(),
        "petersen" => petersen(),
        "cube" => hypercube(3),
        "fig1-tree" => figure_one_tree(),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(petersen().edge_count(), 15);
        assert_eq!(petersen().degree_sequence(), vec![3; 10]);
        assert_eq!(hypercube(3).edge_count(), 12);
        assert_eq!(complete(5).edge_count(), 10);
        for name in NAMES {
            assert!(by_name(name).is_some(), "{name}");
        }
    }
}
