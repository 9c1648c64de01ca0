//! Shared inputs for the criterion benchmarks.

use itline::{named, LineTower, MultiGraph};

/// `L^depth(g)`, panicking if the tower stops early.
pub fn level(g: &MultiGraph, depth: usize) -> MultiGraph {
    let tower = LineTower::build(g, depth, 1_000_000);
    tower.level(depth).expect("tower reaches the requested depth").clone()
}

/// Named graphs with their usual ids.
pub fn family() -> Vec<(&'static str, MultiGraph)> {
    vec![
        ("K5", named::complete(5)),
        ("petersen", named::petersen()),
        ("cube", named::hypercube(3)),
    ]
}
