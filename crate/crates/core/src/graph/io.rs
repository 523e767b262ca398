//! Text and JSON graph formats.
//!
//! Text: one edge per line as `u v`; `u u` is a loop; repeated lines are
//! parallel edges; `#` starts a comment line; `vertices: n` declares the
//! vertices `0..n` so isolated vertices can be written. Edge ids follow input
//! order starting at 0.
//!
//! JSON: `{"vertices": n, "edges": [[u, v], ...]}` with edge id = array index.
//! `vertices` is optional and has the same meaning as the text header.

use serde::{Deserialize, Serialize};

use super::{EdgeId, Multigraph, VertexId, VertexSet, ID_LIMIT};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<u32>,
    pub edges: Vec<[u32; 2]>,
}

/// Parses the text edge-list format, or JSON when the input starts with `{`.
pub fn parse_graph(text: &str) -> Result<Multigraph> {
    if text.trim_start().starts_with('{') {
        return parse_json(text);
    }
    let mut declared: Option<u32> = None;
    let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertices:") {
            let n = parse_id(rest.trim(), line_no)?;
            if n > ID_LIMIT {
                return Err(Error::VertexOutOfRange(n as u64 - 1));
            }
            declared = Some(n);
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected two vertex ids, found {:?}", line),
            });
        }
        let u = parse_id(tokens[0], line_no)?;
        let v = parse_id(tokens[1], line_no)?;
        pairs.push((u, v));
    }
    build(declared, &pairs)
}

fn parse_id(token: &str, line: usize) -> Result<u32> {
    let value: i64 = token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("not an integer: {token:?}"),
    })?;
    if value < 0 {
        return Err(Error::NegativeVertex { line });
    }
    if value >= ID_LIMIT as i64 + 1 {
        return Err(Error::VertexOutOfRange(value as u64));
    }
    Ok(value as u32)
}

fn build(declared: Option<u32>, pairs: &[(VertexId, VertexId)]) -> Result<Multigraph> {
    if pairs.is_empty() && declared.unwrap_or(0) == 0 {
        return Err(Error::EmptyInput);
    }
    if pairs.len() > ID_LIMIT as usize {
        return Err(Error::EdgeOutOfRange(pairs.len() as u64 - 1));
    }
    if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| a >= ID_LIMIT || b >= ID_LIMIT) {
        return Err(Error::VertexOutOfRange(a.max(b) as u64));
    }
    let mut vertices = VertexSet::range(declared.unwrap_or(0));
    for &(a, b) in pairs {
        vertices.insert(a);
        vertices.insert(b);
    }
    Multigraph::new(
        vertices.iter(),
        pairs.iter().enumerate().map(|(i, &(a, b))| (i as EdgeId, a, b)),
    )
}

pub fn parse_json(text: &str) -> Result<Multigraph> {
    let raw: GraphJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    let pairs: Vec<(VertexId, VertexId)> = raw.edges.iter().map(|&[a, b]| (a, b)).collect();
    build(raw.vertices, &pairs)
}

/// Vertex-count header needed to reproduce the vertex set, if any.
fn header(g: &Multigraph) -> Result<Option<u32>> {
    for (i, e) in g.edges().iter().enumerate() {
        if e.id != i as EdgeId {
            return Err(Error::NotRepresentable(format!(
                "edge ids are not 0..{} in order",
                g.edge_count()
            )));
        }
    }
    let covered = g.endpoints(g.edge_set());
    let isolated = g.vertex_set().difference(covered);
    if isolated.is_empty() && !covered.is_empty() {
        return Ok(None);
    }
    let n = isolated.iter().max().map_or(0, |v| v + 1);
    if !VertexSet::range(n).is_subset(g.vertex_set()) {
        return Err(Error::NotRepresentable(format!(
            "isolated vertices {isolated} are not an initial segment"
        )));
    }
    Ok(Some(n))
}

/// Writes the text format. Fails for graphs whose ids are not in parsed form
/// (use [`Multigraph::compacted`] first).
pub fn to_text(g: &Multigraph) -> Result<String> {
    let mut out = String::new();
    if let Some(n) = header(g)? {
        out.push_str(&format!("vertices: {n}\n"));
    }
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    Ok(out)
}

pub fn to_json(g: &Multigraph) -> Result<GraphJson> {
    Ok(GraphJson {
        vertices: header(g)?,
        edges: g.edges().iter().map(|e| [e.u, e.v]).collect(),
    })
}
