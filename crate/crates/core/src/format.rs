//! The line-oriented PTG file format and the `matching <k>:` colouring lines.
//!
//! ```text
//! ptg 1
//! d 7
//! v a a' b c        # clockwise rotation at a
//! e a b 2           # undirected edge with its multiplicity
//! ```
//!
//! `#` starts a comment; blank lines are ignored. Vertex ids are ASCII graphic
//! tokens that contain none of `#`, `-` or `:`.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::colouring::Colouring;
use crate::planar::{EdgeId, Embedding, EmbeddingError, Graph};
use crate::target::{Target, TargetError};

/// A parse failure with a 1-based position.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub reason: String,
}

/// Failure turning a parsed document into an embedding or target.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DocumentError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error("line {line}: edge record `{u} {v}` is not an edge of the rotation system")]
    StrayEdgeRecord { u: String, v: String, line: usize },
    #[error("edge `{0}` has no `e` record")]
    MissingMultiplicity(String),
    #[error(transparent)]
    Target(#[from] TargetError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeRecord {
    pub u: String,
    pub v: String,
    pub m: u32,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PtgDocument {
    pub version: u32,
    pub d: u32,
    /// `(id, clockwise neighbours)` in file order.
    pub vertices: Vec<(String, Vec<String>)>,
    pub edges: Vec<EdgeRecord>,
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in content.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &content[s..i],
                    column: content[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &content[s..],
            column: content[..s].chars().count() + 1,
        });
    }
    out
}

fn err(line: usize, column: usize, reason: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        reason: reason.into(),
    }
}

fn check_id(tok: &Token<'_>, line: usize) -> Result<String, ParseError> {
    let ok = tok
        .text
        .chars()
        .all(|c| c.is_ascii_graphic() && !matches!(c, '#' | '-' | ':'));
    if ok {
        Ok(tok.text.to_string())
    } else {
        Err(err(line, tok.column, format!("invalid vertex id `{}`", tok.text)))
    }
}

fn line_end(line: &str) -> usize {
    line.split('#').next().unwrap_or("").trim_end().chars().count() + 1
}

pub fn parse_ptg(text: &str) -> Result<PtgDocument, ParseError> {
    let mut header: Option<u32> = None;
    let mut d: Option<u32> = None;
    let mut vertices: Vec<(String, Vec<String>)> = Vec::new();
    let mut seen_vertices: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<EdgeRecord> = Vec::new();
    let mut seen_edges: HashMap<(String, String), usize> = HashMap::new();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let toks = tokens(raw);
        let Some(first) = toks.first() else { continue };

        if header.is_none() {
            if first.text != "ptg" {
                return Err(err(line, first.column, "expected header `ptg 1`"));
            }
            let Some(ver) = toks.get(1) else {
                return Err(err(line, line_end(raw), "missing format version"));
            };
            if ver.text != "1" {
                return Err(err(line, ver.column, format!("unsupported version `{}`", ver.text)));
            }
            if let Some(extra) = toks.get(2) {
                return Err(err(line, extra.column, "unexpected token after header"));
            }
            header = Some(1);
            continue;
        }
        if d.is_none() {
            if first.text != "d" {
                return Err(err(line, first.column, "expected `d <positive integer>`"));
            }
            let Some(val) = toks.get(1) else {
                return Err(err(line, line_end(raw), "missing value for d"));
            };
            match val.text.parse::<u32>() {
                Ok(x) if x > 0 => d = Some(x),
                _ => {
                    return Err(err(
                        line,
                        val.column,
                        format!("d must be a positive integer, got `{}`", val.text),
                    ))
                }
            }
            if let Some(extra) = toks.get(2) {
                return Err(err(line, extra.column, "unexpected token after d"));
            }
            continue;
        }
        match first.text {
            "v" => {
                let Some(id_tok) = toks.get(1) else {
                    return Err(err(line, line_end(raw), "vertex record needs an id"));
                };
                let id = check_id(id_tok, line)?;
                if let Some(prev) = seen_vertices.get(&id) {
                    return Err(err(
                        line,
                        id_tok.column,
                        format!("duplicate vertex `{id}` (first on line {prev})"),
                    ));
                }
                let nbrs = toks[2..]
                    .iter()
                    .map(|t| check_id(t, line))
                    .collect::<Result<Vec<_>, _>>()?;
                seen_vertices.insert(id.clone(), line);
                vertices.push((id, nbrs));
            }
            "e" => {
                if toks.len() != 4 {
                    let col = toks.get(4).map_or_else(|| line_end(raw), |t| t.column);
                    return Err(err(line, col, "edge record must be `e <u> <v> <m>`"));
                }
                let u = check_id(&toks[1], line)?;
                let v = check_id(&toks[2], line)?;
                if u == v {
                    return Err(err(line, toks[2].column, format!("loop at `{u}`")));
                }
                let m = match toks[3].text.parse::<i64>() {
                    Ok(x) if x < 0 => return Err(err(line, toks[3].column, format!("negative multiplicity {x}"))),
                    Ok(x) => u32::try_from(x)
                        .map_err(|_| err(line, toks[3].column, format!("multiplicity {x} too large")))?,
                    Err(_) => {
                        return Err(err(
                            line,
                            toks[3].column,
                            format!("multiplicity must be an integer, got `{}`", toks[3].text),
                        ))
                    }
                };
                let key = if u < v {
                    (u.clone(), v.clone())
                } else {
                    (v.clone(), u.clone())
                };
                if let Some(prev) = seen_edges.get(&key) {
                    return Err(err(
                        line,
                        toks[0].column,
                        format!("duplicate edge `{} {}` (first on line {prev})", key.0, key.1),
                    ));
                }
                seen_edges.insert(key, line);
                edges.push(EdgeRecord { u, v, m, line });
            }
            other => {
                return Err(err(line, first.column, format!("unknown record `{other}`")));
            }
        }
    }
    let Some(version) = header else {
        return Err(err(last_line.max(1), 1, "missing header `ptg 1`"));
    };
    let Some(d) = d else {
        return Err(err(last_line.max(1), 1, "missing `d` line"));
    };
    Ok(PtgDocument {
        version,
        d,
        vertices,
        edges,
    })
}

impl PtgDocument {
    /// The validated plane embedding.
    pub fn embedding(&self) -> Result<Embedding, DocumentError> {
        Ok(Embedding::new(&self.vertices)?)
    }

    /// The abstract graph, without the planarity check.
    pub fn graph(&self) -> Result<Graph, DocumentError> {
        Ok(Graph::from_adjacency(&self.vertices)?)
    }

    /// Multiplicities in the edge order of `g`.
    pub fn multiplicities(&self, g: &Graph) -> Result<Vec<u32>, DocumentError> {
        let mut m: Vec<Option<u32>> = vec![None; g.edge_count()];
        for rec in &self.edges {
            let e = match (g.vertex(&rec.u), g.vertex(&rec.v)) {
                (Some(a), Some(b)) => g.edge_between(a, b),
                _ => None,
            };
            let Some(e) = e else {
                return Err(DocumentError::StrayEdgeRecord {
                    u: rec.u.clone(),
                    v: rec.v.clone(),
                    line: rec.line,
                });
            };
            m[e.0] = Some(rec.m);
        }
        m.iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| DocumentError::MissingMultiplicity(g.edge_label(EdgeId(i)))))
            .collect()
    }

    pub fn target(&self, cap: usize) -> Result<Target, DocumentError> {
        let emb = self.embedding()?;
        let m = self.multiplicities(emb.graph())?;
        Ok(Target::with_cap(emb, self.d, m, cap)?)
    }

    pub fn from_parts(emb: &Embedding, d: u32, m: &[u32]) -> PtgDocument {
        let g = emb.graph();
        PtgDocument {
            version: 1,
            d,
            vertices: emb.rotation_records(),
            edges: g
                .edge_ids()
                .map(|e| {
                    let edge = g.edge(e);
                    EdgeRecord {
                        u: g.name(edge.u).to_string(),
                        v: g.name(edge.v).to_string(),
                        m: m[e.0],
                        line: 0,
                    }
                })
                .collect(),
        }
    }

    pub fn from_target(t: &Target) -> PtgDocument {
        Self::from_parts(t.embedding(), t.d(), t.multiplicities())
    }

    /// Canonical text: vertices sorted by id, each rotation starting at its least
    /// neighbour, edges sorted with the smaller id first.
    pub fn emit(&self) -> String {
        let mut out = format!("ptg {}\nd {}\n", self.version, self.d);
        let sorted: BTreeMap<&str, &Vec<String>> = self.vertices.iter().map(|(v, n)| (v.as_str(), n)).collect();
        for (v, nbrs) in sorted {
            let mut rot: Vec<&str> = nbrs.iter().map(String::as_str).collect();
            if let Some(start) = rot.iter().enumerate().min_by_key(|(_, w)| **w).map(|(i, _)| i) {
                rot.rotate_left(start);
            }
            out.push_str("v ");
            out.push_str(v);
            for w in rot {
                out.push(' ');
                out.push_str(w);
            }
            out.push('\n');
        }
        let mut edges: Vec<(&str, &str, u32)> = self
            .edges
            .iter()
            .map(|r| {
                if r.u <= r.v {
                    (r.u.as_str(), r.v.as_str(), r.m)
                } else {
                    (r.v.as_str(), r.u.as_str(), r.m)
                }
            })
            .collect();
        edges.sort();
        for (u, v, m) in edges {
            out.push_str(&format!("e {u} {v} {m}\n"));
        }
        out
    }
}

/// Parse and validate a target with the given odd-set cap.
pub fn load_target(text: &str, cap: usize) -> Result<Target, DocumentError> {
    parse_ptg(text)?.target(cap)
}

/// Canonical PTG text of a target.
pub fn emit_target(t: &Target) -> String {
    PtgDocument::from_target(t).emit()
}

/// `matching <k>: u-v u-v ...` lines, `k` counted from 1.
pub fn emit_colouring(g: &Graph, c: &Colouring) -> String {
    let mut out = String::new();
    for (k, f) in c.matchings().iter().enumerate() {
        out.push_str(&format!("matching {}:", k + 1));
        for &e in f {
            out.push(' ');
            out.push_str(&g.edge_label(e));
        }
        out.push('\n');
    }
    out
}

/// Read back `matching <k>:` lines; other lines are ignored. Matchings are taken
/// in order of appearance.
pub fn parse_colouring(g: &Graph, text: &str) -> Result<Vec<Vec<EdgeId>>, ParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let Some(rest) = raw.trim_start().strip_prefix("matching ") else {
            continue;
        };
        let Some((_, edges)) = rest.split_once(':') else {
            return Err(err(line, 1, "expected `matching <k>: ...`"));
        };
        let mut f = Vec::new();
        for tok in edges.split_whitespace() {
            let Some((a, b)) = tok.split_once('-') else {
                return Err(err(line, 1, format!("bad edge token `{tok}`")));
            };
            let e = g.edge_by_names(a, b).map_err(|e| err(line, 1, e.to_string()))?;
            f.push(e);
        }
        out.push(f);
    }
    Ok(out)
}
