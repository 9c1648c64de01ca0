//! graph6, edge-list and DOT serialization.
//!
//! graph6 follows the nauty format description: a size prefix `N(n)`
//! followed by the upper triangle of the adjacency matrix in column order
//! (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per byte, offset by 63.
//! Decoded edges receive ids in that column order, so re-encoding a decoded
//! line reproduces it byte for byte.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::MultiGraph;

const HEADER: &str = ">>graph6<<";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Graph6,
    Edgelist,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "el" => Ok(Format::Edgelist),
            other => Err(Error::Precondition(format!("unknown format `{other}`"))),
        }
    }
}

fn parse_err(line: usize, offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        offset,
        message: message.into(),
    }
}

/// Decodes one graph6 line. `line_no` is only used in error positions.
pub fn decode_graph6_at(text: &str, line_no: usize) -> Result<MultiGraph> {
    let body = text.strip_prefix(HEADER).unwrap_or(text);
    let skipped = text.len() - body.len();
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(line_no, skipped, "empty graph6 line"));
    }
    let mut values = Vec::with_capacity(bytes.len());
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(
                line_no,
                skipped + i,
                format!("byte {b:#04x} outside the graph6 range"),
            ));
        }
        values.push(u64::from(b - 63));
    }
    let take = |from: usize, count: usize| -> Result<u64> {
        if values.len() < from + count {
            return Err(parse_err(line_no, skipped + values.len(), "truncated size prefix"));
        }
        Ok(values[from..from + count]
            .iter()
            .fold(0u64, |acc, &v| (acc << 6) | v))
    };
    let (n, start) = if values[0] < 63 {
        (values[0], 1)
    } else if values.len() > 1 && values[1] == 63 {
        (take(2, 6)?, 8)
    } else {
        (take(1, 3)?, 4)
    };
    let n = usize::try_from(n).map_err(|_| parse_err(line_no, skipped, "vertex count overflow"))?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let have = values.len() - start;
    if have != need {
        return Err(parse_err(
            line_no,
            skipped + start + have.min(need),
            format!("expected {need} adjacency bytes for n={n}, found {have}"),
        ));
    }
    let data = &values[start..];
    let bit = |k: usize| (data[k / 6] >> (5 - k % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    for pad in bits..need * 6 {
        if bit(pad) {
            return Err(parse_err(line_no, skipped + start + pad / 6, "nonzero padding bit"));
        }
    }
    MultiGraph::new(n, edges)
}

pub fn decode_graph6(text: &str) -> Result<MultiGraph> {
    decode_graph6_at(text, 1)
}

/// Encodes a simple graph as a graph6 line without header or newline.
pub fn encode_graph6(g: &MultiGraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n as u64 >> shift) & 63) as u8 + 63);
        }
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    for &(u, v) in g.edge_list() {
        // column order index of (u, v) with u < v
        let k = v * (v - 1) / 2 + u;
        data[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(data.into_iter().map(|b| b + 63));
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses edge-list text: blocks of an `n m` header followed by `m` lines
/// `u v`. Blank lines and `#` comments are ignored. Repeated pairs become
/// parallel edges.
pub fn parse_edgelist(text: &str) -> Result<Vec<MultiGraph>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });
    let mut graphs = Vec::new();
    while let Some((line_no, header)) = lines.next() {
        let [n, m] = parse_pair(header, line_no)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (line_no, l) = lines
                .next()
                .ok_or_else(|| parse_err(line_no, 0, format!("expected {m} edge lines")))?;
            let [u, v] = parse_pair(l, line_no)?;
            for (x, col) in [(u, 0), (v, 1)] {
                if x >= n {
                    return Err(parse_err(
                        line_no,
                        token_offset(l, col),
                        format!("vertex {x} out of range for n={n}"),
                    ));
                }
            }
            if u == v {
                return Err(parse_err(line_no, 0, format!("loop at vertex {u}")));
            }
            edges.push((u, v));
        }
        graphs.push(MultiGraph::new(n, edges)?);
    }
    if graphs.is_empty() {
        return Err(parse_err(1, 0, "no graph found"));
    }
    Ok(graphs)
}

fn token_offset(line: &str, index: usize) -> usize {
    let mut count = 0;
    let mut in_token = false;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            in_token = false;
        } else if !in_token {
            if count == index {
                return i;
            }
            count += 1;
            in_token = true;
        }
    }
    line.len()
}

fn parse_pair(line: &str, line_no: usize) -> Result<[usize; 2]> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(parse_err(
            line_no,
            token_offset(line, tokens.len().min(2)),
            format!("expected two integers, found {} tokens", tokens.len()),
        ));
    }
    let mut out = [0; 2];
    for (i, t) in tokens.iter().enumerate() {
        out[i] = t
            .parse()
            .map_err(|_| parse_err(line_no, token_offset(line, i), format!("`{t}` is not a non-negative integer")))?;
    }
    Ok(out)
}

pub fn write_edgelist(g: &MultiGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edge_list() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_dot(g: &MultiGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        if g.has_labels() {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", g.vertex_label(v).replace('"', "\\\""));
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for &(u, v) in g.edge_list() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// Reads every graph in `text`. graph6 input is one graph per non-empty line.
pub fn read_graphs(text: &str, format: Format) -> Result<Vec<MultiGraph>> {
    match format {
        Format::Edgelist => parse_edgelist(text),
        Format::Graph6 => {
            let graphs: Vec<_> = text
                .lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty())
                .map(|(i, l)| decode_graph6_at(l.trim_end(), i + 1))
                .collect::<Result<_>>()?;
            if graphs.is_empty() {
                return Err(parse_err(1, 0, "no graph found"));
            }
            Ok(graphs)
        }
    }
}

/// Serializes a graph in `format`; multigraphs are refused by graph6.
pub fn write_graph(g: &MultiGraph, format: Format) -> Result<String> {
    match format {
        Format::Graph6 => encode_graph6(g).map(|mut s| {
            s.push('\n');
            s
        }),
        Format::Edgelist => Ok(write_edgelist(g)),
    }
}
