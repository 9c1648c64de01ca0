use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::line::LineTower;
use crate::triangular::is_k_triangular;

use super::trail::st_verdict;
use super::{s_hamiltonian, spanning_closed_trail, Verdict};

/// A property whose first occurrence along the line graph tower defines an index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Property {
    Hamiltonian { s: usize },
    Supereulerian,
    StSupereulerian { s: usize, t: usize },
    KTriangular { k: u32 },
}

impl Property {
    pub fn name(&self) -> String {
        match self {
            Property::Hamiltonian { s } => format!("h_{s}"),
            Property::Supereulerian => "s".into(),
            Property::StSupereulerian { s, t } => format!("i_{{{s},{t}}}"),
            Property::KTriangular { k } => format!("t_{k}"),
        }
    }

    fn decide(&self, g: &MultiGraph, caps: &Caps) -> Result<Verdict> {
        if let Property::KTriangular { k } = *self {
            return Ok(if is_k_triangular(g, k) { Verdict::Holds } else { Verdict::Fails });
        }
        if g.vertex_count() > caps.oracle_max_vertices {
            return Ok(Verdict::Undetermined);
        }
        let budget = caps.search_budget;
        Ok(match *self {
            Property::Hamiltonian { s } if g.vertex_count() < s + 3 => Verdict::Fails,
            Property::Hamiltonian { s } => s_hamiltonian(g, s, budget)?.verdict,
            Property::Supereulerian => spanning_closed_trail(g, budget)?.verdict,
            Property::StSupereulerian { s, t } => st_verdict(g, s, t, budget)?.verdict,
            Property::KTriangular { .. } => unreachable!("handled above"),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelVerdict {
    pub level: usize,
    pub vertices: usize,
    pub edges: usize,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexResult {
    pub name: String,
    /// Smallest level with the property; `None` when a cap was hit first.
    pub value: Option<usize>,
    pub cap_hit: bool,
    pub levels: Vec<LevelVerdict>,
}

/// Smallest `m` such that `L^m(g)` has `prop`, decided level by level.
pub fn exact_index(g: &MultiGraph, prop: Property, caps: &Caps) -> Result<IndexResult> {
    caps.validate()?;
    let class = g.classify()?;
    if !class.is_admissible() {
        return Err(Error::NotAdmissible(class));
    }
    let mut tower = LineTower::start(g.clone(), caps.max_depth, caps.max_vertices);
    let mut levels = Vec::new();
    loop {
        let top = tower.top();
        let verdict = prop.decide(top, caps)?;
        levels.push(LevelVerdict {
            level: tower.depth(),
            vertices: top.vertex_count(),
            edges: top.edge_count(),
            verdict,
        });
        let (value, cap_hit) = match verdict {
            Verdict::Holds => (Some(tower.depth()), false),
            Verdict::Undetermined => (None, true),
            Verdict::Fails if !tower.advance() => (None, true),
            Verdict::Fails => continue,
        };
        return Ok(IndexResult {
            name: prop.name(),
            value,
            cap_hit,
            levels,
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn value(g: &MultiGraph, prop: Property) -> Option<usize> {
        exact_index(g, prop, &Caps::default()).unwrap().value
    }

    #[test]
    fn hamiltonian_index_examples() {
        let h0 = Property::Hamiltonian { s: 0 };
        assert_eq!(value(&named::petersen(), h0), Some(1));
        assert_eq!(value(&named::complete(4), h0), Some(0));
        assert_eq!(value(&named::figure_one_tree(), h0), Some(2));
        assert_eq!(value(&named::star(4), h0), Some(1));
        assert_eq!(value(&named::bowtie(), h0), Some(1));
    }

    #[test]
    fn other_properties() {
        let p = named::petersen();
        assert_eq!(value(&p, Property::Supereulerian), Some(1));
        assert_eq!(value(&p, Property::KTriangular { k: 2 }), Some(2));
        assert_eq!(value(&named::complete(5), Property::StSupereulerian { s: 1, t: 1 }), Some(0));
        assert_eq!(value(&named::figure_one_tree(), Property::Supereulerian), Some(1));
        assert_eq!(value(&named::complete(4), Property::StSupereulerian { s: 0, t: 0 }), Some(0));
    }

    #[test]
    fn levels_are_recorded() {
        let r = exact_index(&named::petersen(), Property::Hamiltonian { s: 0 }, &Caps::default()).unwrap();
        assert_eq!(r.name, "h_0");
        assert_eq!(r.levels.len(), 2);
        assert_eq!(r.levels[0].verdict, Verdict::Fails);
        assert_eq!((r.levels[1].vertices, r.levels[1].edges), (15, 30));
    }

    #[test]
    fn caps_and_preconditions() {
        let caps = Caps {
            oracle_max_vertices: 10,
            ..Caps::default()
        };
        let r = exact_index(&named::petersen(), Property::Hamiltonian { s: 0 }, &caps).unwrap();
        assert!(r.cap_hit && r.value.is_none());
        assert!(exact_index(&named::cycle(5), Property::Supereulerian, &Caps::default()).is_err());
        // too few vertices for 2-Hamiltonicity counts as a failing level
        let r = exact_index(&named::complete(4), Property::Hamiltonian { s: 2 }, &Caps::default()).unwrap();
        assert_eq!(r.levels[0].verdict, Verdict::Fails);
    }
}
