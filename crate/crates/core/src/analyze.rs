//! Per-graph reports: classification, path statistics, bounds and, where
//! the caps allow, exact index values.

use serde::Serialize;

use crate::bounds::{hs_bound, ist_bound, prior_bound};
use crate::caps::Caps;
use crate::divalent::{d_tilde_direct, path_statistics, DivalentProfile};
use crate::error::Result;
use crate::graph::{GraphClass, MultiGraph};
use crate::oracles::{exact_index, IndexResult, Property};
use crate::triangular::{report as triangular_report, TriangularReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IstRow {
    pub s: usize,
    pub t: usize,
    pub bound: u64,
    pub exact: Option<usize>,
    /// `bound - exact`.
    pub slack: Option<i64>,
    pub cap_hit: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HsRow {
    pub s: usize,
    pub bound: u64,
    /// `l + s + 1`.
    pub prior: u64,
    pub exact: Option<usize>,
    pub slack: Option<i64>,
    pub cap_hit: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub graph_id: String,
    pub delta: usize,
    pub d_tilde: usize,
    /// `direct` when the tower reached minimum degree three within the
    /// caps, otherwise `formula`.
    pub d_tilde_source: &'static str,
    pub ell: usize,
    pub ell0: i64,
    pub ist_rows: Vec<IstRow>,
    pub hs_rows: Vec<HsRow>,
}

/// Which rows a [`BoundReport`] holds and whether exact values are attempted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRequest {
    pub st_grid: Vec<(usize, usize)>,
    pub hs: Vec<usize>,
    pub exact: bool,
}

impl Default for BoundRequest {
    fn default() -> Self {
        Self {
            st_grid: vec![(0, 0), (0, 1), (1, 0)],
            hs: vec![0, 1],
            exact: true,
        }
    }
}

fn exact_value(g: &MultiGraph, prop: Property, caps: &Caps, exact: bool) -> Result<(Option<usize>, bool)> {
    if !exact {
        return Ok((None, false));
    }
    let r = exact_index(g, prop, caps)?;
    Ok((r.value, r.cap_hit))
}

/// `d~` by the tower when possible, else by the formula.
pub fn resolved_d_tilde(g: &MultiGraph, profile: &DivalentProfile, caps: &Caps) -> (usize, &'static str) {
    match profile.d_tilde_direct.or_else(|| d_tilde_direct(g, caps).value) {
        Some(d) => (d, "direct"),
        None => (profile.d_tilde_formula, "formula"),
    }
}

/// Bound rows for a simple admissible graph.
pub fn bound_report(id: &str, g: &MultiGraph, req: &BoundRequest, caps: &Caps) -> Result<BoundReport> {
    let profile = path_statistics(g)?;
    let delta = g.min_degree().unwrap_or(0);
    let (d_tilde, d_tilde_source) = resolved_d_tilde(g, &profile, caps);
    let ell = profile.ell;
    let slack = |bound: u64, exact: Option<usize>| exact.map(|e| bound as i64 - e as i64);
    let mut ist_rows = Vec::new();
    for &(s, t) in &req.st_grid {
        let bound = ist_bound(delta, d_tilde, ell, s, t);
        let (exact, cap_hit) = exact_value(g, Property::StSupereulerian { s, t }, caps, req.exact)?;
        ist_rows.push(IstRow {
            s,
            t,
            bound,
            exact,
            slack: slack(bound, exact),
            cap_hit,
        });
    }
    let mut hs_rows = Vec::new();
    for &s in req.hs.iter().filter(|&&s| s + 3 <= g.vertex_count()) {
        let bound = hs_bound(delta, d_tilde, ell, s);
        let (exact, cap_hit) = exact_value(g, Property::Hamiltonian { s }, caps, req.exact)?;
        hs_rows.push(HsRow {
            s,
            bound,
            prior: prior_bound(ell, s),
            exact,
            slack: slack(bound, exact),
            cap_hit,
        });
    }
    Ok(BoundReport {
        graph_id: id.to_string(),
        delta,
        d_tilde,
        d_tilde_source,
        ell,
        ell0: profile.ell0,
        ist_rows,
        hs_rows,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalyzeOptions {
    pub ks: Vec<u32>,
    pub bounds: BoundRequest,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            ks: vec![1, 2],
            bounds: BoundRequest::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphReport {
    pub id: String,
    pub vertices: usize,
    pub edges: usize,
    pub simple: bool,
    pub class: GraphClass,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
    pub degree_sequence: Vec<usize>,
    pub profile: Option<DivalentProfile>,
    pub triangular: Vec<TriangularReport>,
    pub bounds: Option<BoundReport>,
    /// Exact supereulerian index.
    pub supereulerian_index: Option<IndexResult>,
    /// Fields left out and why.
    pub not_applicable: Vec<String>,
}

/// Full report for one graph. Fields that need the admissible class (or a
/// simple graph) are left empty and listed in `not_applicable`.
pub fn analyze(id: &str, g: &MultiGraph, opts: &AnalyzeOptions, caps: &Caps) -> Result<GraphReport> {
    caps.validate()?;
    let class = g.classify()?;
    let mut report = GraphReport {
        id: id.to_string(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        simple: g.is_simple(),
        class,
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        degree_sequence: g.degree_sequence(),
        profile: None,
        triangular: Vec::new(),
        bounds: None,
        supereulerian_index: None,
        not_applicable: Vec::new(),
    };
    if !class.is_admissible() {
        report.not_applicable = ["profile", "triangular", "bounds", "indices"]
            .iter()
            .map(|f| format!("{f}: graph is classified {class}"))
            .collect();
        return Ok(report);
    }
    let mut profile = path_statistics(g)?;
    profile.d_tilde_direct = d_tilde_direct(g, caps).value;
    let (d_tilde, _) = resolved_d_tilde(g, &profile, caps);
    for &k in &opts.ks {
        report.triangular.push(triangular_report(g, k, Some(d_tilde), caps)?);
    }
    report.profile = Some(profile);
    if g.is_simple() {
        report.bounds = Some(bound_report(id, g, &opts.bounds, caps)?);
    } else {
        report.not_applicable.push("bounds: stated for simple graphs".into());
    }
    if opts.bounds.exact {
        report.supereulerian_index = Some(exact_index(g, Property::Supereulerian, caps)?);
    }
    Ok(report)
}
