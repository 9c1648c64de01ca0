//! Graph collections the verification suites run over.
//!
//! Every member carries an id and a provenance tag. Random members are
//! drawn from ChaCha streams keyed by the seed, so the same seed always
//! yields the same corpus.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{GraphClass, MultiGraph};
use crate::io::{encode_graph6, read_graphs, Format};
use crate::named;

#[derive(Clone, Debug, Serialize)]
pub struct Member {
    pub id: String,
    /// Where the graph came from: `named`, `b-family`, `random-er`,
    /// `random-low-degree`, or `file:<name>`.
    pub source: String,
    #[serde(skip)]
    pub graph: MultiGraph,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Corpus {
    pub seed: Option<u64>,
    pub members: Vec<Member>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn extend(&mut self, other: Corpus) {
        self.seed = self.seed.or(other.seed);
        self.members.extend(other.members);
    }

    pub fn iter(&self) -> impl Iterator<Item = &Member> {
        self.members.iter()
    }

    /// One graph6 line per simple member, multigraphs skipped.
    pub fn to_graph6(&self) -> String {
        self.members
            .iter()
            .filter_map(|m| encode_graph6(&m.graph).ok())
            .map(|line| line + "\n")
            .collect()
    }
}

fn member(id: impl Into<String>, source: &str, graph: MultiGraph) -> Member {
    Member {
        id: id.into(),
        source: source.into(),
        graph,
    }
}

/// The small named graphs, in a fixed order.
pub fn named_corpus() -> Corpus {
    Corpus {
        seed: None,
        members: named::NAMES
            .iter()
            .map(|&name| member(name, "named", named::by_name(name).expect("listed name")))
            .collect(),
    }
}

/// Rooted canonical string of a tree (AHU encoding).
fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut parts: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(adj, w, v))
        .collect();
    parts.sort();
    format!("({})", parts.concat())
}

fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Unrooted canonical form: the least rooted code over the centers.
fn tree_code(adj: &[Vec<usize>]) -> String {
    centers(adj)
        .into_iter()
        .map(|c| rooted_code(adj, c, usize::MAX))
        .min()
        .expect("non-empty tree")
}

/// Tree in preorder numbering of a rooted code.
fn tree_from_code(code: &str) -> Vec<Vec<usize>> {
    let mut adj: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for c in code.chars() {
        if c == '(' {
            let v = adj.len();
            adj.push(Vec::new());
            if let Some(&p) = stack.last() {
                adj[p].push(v);
                adj[v].push(p);
            }
            stack.push(v);
        } else {
            stack.pop();
        }
    }
    adj
}

/// Trees whose degrees are all 1 or 3, on at least six and at most
/// `max_vertices` vertices, one per isomorphism class.
///
/// Such a tree with `k` internal vertices is determined by the subtree on
/// its internal vertices, which has maximum degree 3; these are grown leaf
/// by leaf and deduplicated by canonical form. Internal vertices come first
/// (preorder of the canonical rooting), leaves follow in order of their
/// attachment. `K_{1,3}` is left out since it is not in the admissible class.
pub fn generate_b_family(max_vertices: usize) -> Result<Corpus> {
    if max_vertices < 6 {
        return Err(Error::Precondition(format!(
            "max_vertices must be at least 6, got {max_vertices}"
        )));
    }
    let max_internal = (max_vertices - 2) / 2;
    let mut members = Vec::new();
    let mut layer: BTreeSet<String> = BTreeSet::from([tree_code(&[vec![1], vec![0]])]);
    for k in 2..=max_internal {
        if k > 2 {
            let mut next = BTreeSet::new();
            for code in &layer {
                let adj = tree_from_code(code);
                for v in 0..adj.len() {
                    if adj[v].len() < 3 {
                        let mut grown = adj.clone();
                        grown.push(vec![v]);
                        grown[v].push(k - 1);
                        next.insert(tree_code(&grown));
                    }
                }
            }
            layer = next;
        }
        for (i, code) in layer.iter().enumerate() {
            let internal = tree_from_code(code);
            let mut edges = Vec::new();
            for (v, nbrs) in internal.iter().enumerate() {
                edges.extend(nbrs.iter().filter(|&&w| w > v).map(|&w| (v, w)));
            }
            let mut next_leaf = k;
            for (v, nbrs) in internal.iter().enumerate() {
                for _ in nbrs.len()..3 {
                    edges.push((v, next_leaf));
                    next_leaf += 1;
                }
            }
            let g = MultiGraph::new(next_leaf, edges)?;
            members.push(member(format!("B{}-{}", next_leaf, i), "b-family", g));
        }
    }
    Ok(Corpus { seed: None, members })
}

fn stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Connected Erdős–Rényi graphs: `per_n` graphs for each order in `orders`,
/// edge probability drawn per graph from `[0.25, 0.6]`, resampled until
/// connected.
pub fn random_connected(seed: u64, orders: std::ops::RangeInclusive<usize>, per_n: usize) -> Corpus {
    let mut members = Vec::new();
    for n in orders {
        let mut rng = stream(seed, n as u64);
        for i in 0..per_n {
            let p: f64 = rng.gen_range(0.25..0.6);
            let g = loop {
                let mut edges = Vec::new();
                for v in 1..n {
                    for u in 0..v {
                        if rng.gen_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
                let g = MultiGraph::new(n, edges).expect("simple edges");
                if g.is_connected() {
                    break g;
                }
            };
            members.push(member(format!("er-n{n}-{i:03}"), "random-er", g));
        }
    }
    Corpus {
        seed: Some(seed),
        members,
    }
}

fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|v| (rng.gen_range(0..v), v)).collect()
}

/// Graphs in the admissible class with minimum degree at most two: random
/// recursive trees on 6 to 12 vertices, half of them with one to three extra
/// edges added.
pub fn random_low_degree(seed: u64, count: usize) -> Corpus {
    let mut rng = stream(seed, 1 << 32);
    let mut members = Vec::new();
    while members.len() < count {
        let n = rng.gen_range(6..=12);
        let mut edges = random_tree(&mut rng, n);
        if members.len() % 2 == 1 {
            for _ in 0..rng.gen_range(1..=3) {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                let (u, v) = (u.min(v), u.max(v));
                if u != v && !edges.contains(&(u, v)) {
                    edges.push((u, v));
                }
            }
        }
        let g = MultiGraph::new(n, edges).expect("simple edges");
        let admissible = g.classify().map(GraphClass::is_admissible).unwrap_or(false);
        if admissible && g.min_degree().is_some_and(|d| d <= 2) {
            let id = format!("low-{:03}", members.len());
            members.push(member(id, "random-low-degree", g));
        }
    }
    Corpus {
        seed: Some(seed),
        members,
    }
}

/// Graphs read from `text`; ids are `<name>:<index>`.
pub fn from_text(name: &str, text: &str, format: Format) -> Result<Corpus> {
    let graphs = read_graphs(text, format)?;
    Ok(Corpus {
        seed: None,
        members: graphs
            .into_iter()
            .enumerate()
            .map(|(i, g)| member(format!("{name}:{i}"), &format!("file:{name}"), g))
            .collect(),
    })
}

/// Default corpus: named graphs, the tree family up to 14 vertices and 50
/// connected random graphs per order 5 to 9.
pub fn builtin(seed: u64) -> Corpus {
    let mut c = named_corpus();
    c.extend(generate_b_family(14).expect("14 >= 6"));
    c.extend(random_connected(seed, 5..=9, 50));
    c.seed = Some(seed);
    c
}
