use std::fs::{self, OpenOptions};
use std::io::{Read, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use itline::analyze::{analyze, resolved_d_tilde, AnalyzeOptions, BoundRequest};
use itline::bounds::{hs_bound, ist_bound};
use itline::corpus::{self, Corpus};
use itline::divalent::{d_tilde, path_statistics, DTildeMode};
use itline::harness::{counterexamples_graph6, parse_suites, run_suite, to_csv, Status};
use itline::io::{encode_graph6, write_dot, write_graph, Format};
use itline::line::{summarize, LineTower};
use itline::oracles::{
    collapsible, dominating_closed_trail, exact_index, hamiltonian, s_hamiltonian, spanning_closed_trail,
    st_supereulerian, OracleCertificate, Property,
};
use itline::triangular::{t_k_bound, t_k_exact};
use itline::{named, Caps, Error, MultiGraph, Result, Verdict};

use crate::args::{FormatArg, GenKind, IndexKind, InputArgs, Mode, OracleName};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Undetermined = 3,
    Counterexample = 1,
}

impl Exit {
    /// Failure outranks undetermined.
    pub fn merge(self, other: Exit) -> Exit {
        match (self, other) {
            (Exit::Counterexample, _) | (_, Exit::Counterexample) => Exit::Counterexample,
            (Exit::Undetermined, _) | (_, Exit::Undetermined) => Exit::Undetermined,
            _ => Exit::Ok,
        }
    }
}

pub enum Body {
    Json(Value),
    /// JSON lines; the first is the header.
    Lines(Vec<Value>),
    /// Raw text such as graph6 lines.
    Text(String),
}

pub struct Done {
    pub body: Body,
    pub exit: Exit,
}

pub struct Graph {
    pub id: String,
    pub graph: MultiGraph,
}

fn guess_format(path: &Path) -> Format {
    match path.extension().and_then(|e| e.to_str()) {
        Some("el" | "edgelist" | "txt") => Format::Edgelist,
        _ => Format::Graph6,
    }
}

pub fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

pub fn load_corpus(path: &Path, format: Option<FormatArg>) -> Result<Corpus> {
    let format = format.map(Format::from).unwrap_or_else(|| guess_format(path));
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("stdin");
    corpus::from_text(name, &read_text(path)?, format)
}

pub fn load(input: &InputArgs) -> Result<Vec<Graph>> {
    if let Some(name) = &input.named {
        let graph = named::by_name(name).ok_or_else(|| {
            Error::Precondition(format!("unknown graph `{name}`; known: {}", named::NAMES.join(", ")))
        })?;
        return Ok(vec![Graph { id: name.clone(), graph }]);
    }
    let path = input.input.as_deref().expect("clap requires an input");
    Ok(load_corpus(path, input.format)?
        .members
        .into_iter()
        .map(|m| Graph { id: m.id, graph: m.graph })
        .collect())
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn verdict_exit(v: Verdict) -> Exit {
    if v == Verdict::Undetermined {
        Exit::Undetermined
    } else {
        Exit::Ok
    }
}

pub fn analyze_cmd(
    input: &InputArgs,
    ks: &[u32],
    st: &[(usize, usize)],
    hs: &[usize],
    no_exact: bool,
    dot: Option<&Path>,
    caps: &Caps,
) -> Result<Done> {
    let opts = AnalyzeOptions {
        ks: ks.to_vec(),
        bounds: BoundRequest {
            st_grid: st.to_vec(),
            hs: hs.to_vec(),
            exact: !no_exact,
        },
    };
    let mut reports = Vec::new();
    let mut exit = Exit::Ok;
    for g in load(input)? {
        let r = analyze(&g.id, &g.graph, &opts, caps)?;
        let capped = r.supereulerian_index.as_ref().is_some_and(|i| i.cap_hit)
            || r.bounds.as_ref().is_some_and(|b| {
                b.ist_rows.iter().any(|x| x.cap_hit) || b.hs_rows.iter().any(|x| x.cap_hit)
            });
        if capped {
            exit = exit.merge(Exit::Undetermined);
        }
        if let Some(dir) = dot {
            fs::create_dir_all(dir)?;
            let file = dir.join(format!("{}.dot", g.id.replace([':', '/'], "_")));
            fs::write(file, write_dot(&g.graph))?;
        }
        reports.push(to_value(&r));
    }
    Ok(Done {
        body: Body::Json(json!({ "graphs": reports })),
        exit,
    })
}

pub fn tower_cmd(input: &InputArgs, depth: usize, caps: &Caps) -> Result<Done> {
    let mut lines = Vec::new();
    for g in load(input)? {
        let tower = LineTower::build(&g.graph, depth.min(caps.max_depth), caps.max_vertices);
        for (i, level) in tower.levels().iter().enumerate() {
            let mut v = to_value(&summarize(i, level));
            v["graph_id"] = json!(g.id);
            lines.push(v);
        }
        if tower.depth() < depth {
            lines.push(json!({
                "graph_id": g.id,
                "stopped_at": tower.depth(),
                "reason": "next level would exceed the caps or is undefined",
            }));
        }
    }
    Ok(Done {
        body: Body::Lines(lines),
        exit: Exit::Ok,
    })
}

pub fn dtilde_cmd(input: &InputArgs, mode: Mode, counterexamples: &Path, caps: &Caps) -> Result<Done> {
    let mode = match mode {
        Mode::Formula => DTildeMode::Formula,
        Mode::Direct => DTildeMode::Direct,
        Mode::Audit => DTildeMode::Audit,
    };
    let mut out = Vec::new();
    let mut disagreements = String::new();
    let mut exit = Exit::Ok;
    for g in load(input)? {
        let class = g.graph.classify()?;
        if !class.is_admissible() {
            out.push(json!({ "graph_id": g.id, "class": class, "not_applicable": "graph is not in the admissible class" }));
            continue;
        }
        let result = d_tilde(&g.graph, mode, caps)?;
        if result.undetermined {
            exit = exit.merge(Exit::Undetermined);
        }
        let mut v = json!({ "graph_id": g.id, "class": class, "d_tilde": result });
        if mode == DTildeMode::Audit {
            v["profile"] = to_value(&path_statistics(&g.graph)?);
        }
        if result.agree == Some(false) {
            exit = exit.merge(Exit::Counterexample);
            match encode_graph6(&g.graph) {
                Ok(line) => disagreements.push_str(&(line + "\n")),
                Err(_) => v["note"] = json!("multigraph: not written to the graph6 counterexample file"),
            }
        }
        out.push(v);
    }
    if !disagreements.is_empty() {
        let mut f = OpenOptions::new().create(true).append(true).open(counterexamples)?;
        f.write_all(disagreements.as_bytes())?;
    }
    Ok(Done {
        body: Body::Json(json!({ "graphs": out })),
        exit,
    })
}

fn delta_and_d_tilde(g: &MultiGraph, caps: &Caps) -> Result<(usize, usize, usize)> {
    let profile = path_statistics(g)?;
    let (d, _) = resolved_d_tilde(g, &profile, caps);
    Ok((g.min_degree().unwrap_or(0), d, profile.ell))
}

pub fn index_cmd(kind: &IndexKind, caps: &Caps) -> Result<Done> {
    let input = match kind {
        IndexKind::Tk { input, .. } | IndexKind::Hs { input, .. } | IndexKind::Ist { input, .. } | IndexKind::S { input } => input,
    };
    let mut out = Vec::new();
    let mut exit = Exit::Ok;
    for g in load(input)? {
        let (delta, d_tilde, ell) = delta_and_d_tilde(&g.graph, caps)?;
        let slack = |bound: u64, exact: Option<usize>| exact.map(|e| bound as i64 - e as i64);
        let v = match *kind {
            IndexKind::Tk { k, .. } => {
                let probe = t_k_exact(&g.graph, k, caps)?;
                let bound = t_k_bound(delta, d_tilde, k)?;
                if probe.cap_hit {
                    exit = exit.merge(Exit::Undetermined);
                }
                json!({
                    "graph_id": g.id,
                    "k": k,
                    "t_k_exact": probe.value,
                    "t_k_bound": bound,
                    "slack": slack(bound.into(), probe.value),
                    "cap_hit": probe.cap_hit,
                })
            }
            IndexKind::Hs { s, .. } | IndexKind::Ist { s, .. } => {
                let (prop, bound) = match *kind {
                    IndexKind::Hs { .. } => (Property::Hamiltonian { s }, hs_bound(delta, d_tilde, ell, s)),
                    IndexKind::Ist { t, .. } => (Property::StSupereulerian { s, t }, ist_bound(delta, d_tilde, ell, s, t)),
                    _ => unreachable!("matched above"),
                };
                let r = exact_index(&g.graph, prop, caps)?;
                if r.cap_hit {
                    exit = exit.merge(Exit::Undetermined);
                }
                json!({ "graph_id": g.id, "exact": r.value, "bound": bound, "slack": slack(bound, r.value), "index": r })
            }
            IndexKind::S { .. } => {
                let r = exact_index(&g.graph, Property::Supereulerian, caps)?;
                if r.cap_hit {
                    exit = exit.merge(Exit::Undetermined);
                }
                json!({ "graph_id": g.id, "exact": r.value, "ell": ell, "index": r })
            }
        };
        out.push(v);
    }
    Ok(Done {
        body: Body::Json(json!({ "graphs": out })),
        exit,
    })
}

pub fn oracle_cmd(name: OracleName, input: &InputArgs, s: usize, t: usize, caps: &Caps) -> Result<Done> {
    let budget = caps.search_budget;
    let mut out = Vec::new();
    let mut exit = Exit::Ok;
    for g in load(input)? {
        let cert: OracleCertificate = match name {
            OracleName::Hamiltonian => hamiltonian(&g.graph, budget)?,
            OracleName::SHamiltonian => s_hamiltonian(&g.graph, s, budget)?,
            OracleName::Supereulerian => spanning_closed_trail(&g.graph, budget)?,
            OracleName::DominatingTrail => dominating_closed_trail(&g.graph, budget)?,
            OracleName::StSupereulerian => st_supereulerian(&g.graph, s, t, budget)?,
            OracleName::Collapsible => collapsible(&g.graph, caps.collapsible_max_edges)?,
        };
        exit = exit.merge(verdict_exit(cert.verdict));
        out.push(json!({ "graph_id": g.id, "certificate": cert }));
    }
    Ok(Done {
        body: Body::Json(json!({ "graphs": out })),
        exit,
    })
}

pub fn verify_cmd(
    suite: &str,
    corpus: &str,
    format: Option<FormatArg>,
    seed: u64,
    csv: Option<&Path>,
    counterexamples: &Path,
    caps: &Caps,
) -> Result<Done> {
    let suites = parse_suites(suite)?;
    let external = match corpus {
        "builtin" => None,
        path => Some(load_corpus(Path::new(path), format)?),
    };
    let mut reports = Vec::new();
    for s in suites {
        let c = match &external {
            Some(c) => c.clone(),
            None => s.default_corpus(seed),
        };
        reports.push(run_suite(s, &c, caps)?);
    }
    let failed: usize = reports.iter().map(|r| r.failed).sum();
    let open: usize = reports.iter().map(|r| r.undetermined).sum();
    let exit = if failed > 0 {
        Exit::Counterexample
    } else if open > 0 {
        Exit::Undetermined
    } else {
        Exit::Ok
    };
    if let Some(path) = csv {
        fs::write(path, to_csv(&reports))?;
    }
    let g6 = counterexamples_graph6(&reports);
    if !g6.is_empty() {
        fs::write(counterexamples, g6)?;
    }
    let status = match exit {
        Exit::Ok => Status::Pass,
        Exit::Counterexample => Status::Fail,
        Exit::Undetermined => Status::Undetermined,
    };
    Ok(Done {
        body: Body::Json(json!({
            "status": status,
            "failed": failed,
            "undetermined": open,
            "suites": reports,
        })),
        exit,
    })
}

pub fn gen_cmd(kind: &GenKind, format: FormatArg) -> Result<Done> {
    let c = match *kind {
        GenKind::BFamily { max_vertices } => corpus::generate_b_family(max_vertices)?,
        GenKind::Random {
            seed,
            min_order,
            max_order,
            per_n,
        } => corpus::random_connected(seed, min_order..=max_order, per_n),
        GenKind::LowDegree { seed, count } => corpus::random_low_degree(seed, count),
        GenKind::Named => corpus::named_corpus(),
    };
    let mut text = String::new();
    for m in c.iter() {
        if matches!(format, FormatArg::Edgelist) {
            text.push_str(&format!("# {}\n", m.id));
        }
        text.push_str(&write_graph(&m.graph, format.into())?);
    }
    Ok(Done {
        body: Body::Text(text),
        exit: Exit::Ok,
    })
}
