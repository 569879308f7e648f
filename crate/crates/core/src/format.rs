//! Plain text graph format.
//!
//! ```text
//! # comment
//! graph qubits=<n> field=<real|complex>
//! loop <v> <re> [<im>]
//! edge <u> <v> <re> [<im>]
//! ```
//!
//! Indices are 1-based decimal, weights IEEE-754 decimal literals. `<im>` is
//! forbidden when `field=real`; duplicate pairs are errors. Serialisation is
//! canonical: loops then edges, each sorted.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{GraphError, ParseError};
use crate::graph::{Field, WeightedGraph};
use crate::C64;

fn syntax(line: usize, column: usize, detail: &str) -> ParseError {
    ParseError::SyntaxError {
        line,
        column,
        detail: detail.to_string(),
    }
}

fn lift(line: usize, err: GraphError) -> ParseError {
    match err {
        GraphError::FieldMismatch { .. } => ParseError::FieldMismatch { line },
        other => ParseError::RangeError {
            line,
            detail: format!("{other}"),
        },
    }
}

fn column_of(line: &str, token: &str) -> usize {
    line.find(token).map(|p| p + 1).unwrap_or(1)
}

fn parse_f64(tok: &str, line_no: usize, line: &str) -> Result<f64, ParseError> {
    tok.parse::<f64>()
        .map_err(|_| syntax(line_no, column_of(line, tok), "expected a number"))
}

fn parse_index(tok: &str, line_no: usize, line: &str) -> Result<usize, ParseError> {
    tok.parse::<usize>()
        .map_err(|_| syntax(line_no, column_of(line, tok), "expected a vertex index"))
}

/// Parses the text form into a graph.
pub fn parse_graph(text: &str) -> Result<WeightedGraph, ParseError> {
    let mut graph: Option<WeightedGraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "graph" => {
                if graph.is_some() {
                    return Err(syntax(line_no, 1, "repeated graph header"));
                }
                let mut qubits: Option<u32> = None;
                let mut field: Option<Field> = None;
                for tok in &toks[1..] {
                    if let Some(v) = tok.strip_prefix("qubits=") {
                        qubits = Some(v.parse().map_err(|_| {
                            syntax(line_no, column_of(line, tok), "bad qubit count")
                        })?);
                    } else if let Some(v) = tok.strip_prefix("field=") {
                        field = Some(match v {
                            "real" => Field::Real,
                            "complex" => Field::Complex,
                            _ => {
                                return Err(syntax(
                                    line_no,
                                    column_of(line, tok),
                                    "field must be real or complex",
                                ))
                            }
                        });
                    } else {
                        return Err(syntax(line_no, column_of(line, tok), "unknown attribute"));
                    }
                }
                let q = qubits.ok_or_else(|| syntax(line_no, 1, "missing qubits="))?;
                let f = field.ok_or_else(|| syntax(line_no, 1, "missing field="))?;
                graph = Some(WeightedGraph::new(q, f).map_err(|e| lift(line_no, e))?);
            }
            "loop" => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| syntax(line_no, 1, "loop before graph header"))?;
                if toks.len() < 3 || toks.len() > 4 {
                    return Err(syntax(line_no, 1, "loop takes: vertex re [im]"));
                }
                let v = parse_index(toks[1], line_no, line)?;
                let re = parse_f64(toks[2], line_no, line)?;
                let im = if toks.len() == 4 {
                    if g.field() == Field::Real {
                        return Err(ParseError::FieldMismatch { line: line_no });
                    }
                    parse_f64(toks[3], line_no, line)?
                } else {
                    0.0
                };
                g.add_loop(v, C64::new(re, im))
                    .map_err(|e| lift(line_no, e))?;
            }
            "edge" => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| syntax(line_no, 1, "edge before graph header"))?;
                if toks.len() < 4 || toks.len() > 5 {
                    return Err(syntax(line_no, 1, "edge takes: u v re [im]"));
                }
                let u = parse_index(toks[1], line_no, line)?;
                let v = parse_index(toks[2], line_no, line)?;
                let re = parse_f64(toks[3], line_no, line)?;
                let im = if toks.len() == 5 {
                    if g.field() == Field::Real {
                        return Err(ParseError::FieldMismatch { line: line_no });
                    }
                    parse_f64(toks[4], line_no, line)?
                } else {
                    0.0
                };
                g.add_edge(u, v, C64::new(re, im))
                    .map_err(|e| lift(line_no, e))?;
            }
            other => {
                return Err(syntax(line_no, column_of(line, other), "unknown directive"));
            }
        }
    }
    graph.ok_or_else(|| syntax(1, 1, "missing graph header"))
}

fn render_weight(out: &mut String, w: C64, field: Field) {
    out.push(' ');
    out.push_str(&format_float(w.re));
    if field == Field::Complex {
        out.push(' ');
        out.push_str(&format_float(w.im));
    }
}

fn format_float(x: f64) -> String {
    // shortest representation that round-trips
    let mut s = format!("{x}");
    if !s.contains('.') && !s.contains('e') && !s.contains("inf") && !s.contains("NaN") {
        s.push_str(".0");
    }
    s
}

/// Canonical text form: header, sorted loops, sorted edges.
pub fn serialize_graph(g: &WeightedGraph) -> String {
    let mut out = String::new();
    out.push_str("graph qubits=");
    out.push_str(&g.n_qubits().to_string());
    out.push_str(" field=");
    out.push_str(match g.field() {
        Field::Real => "real",
        Field::Complex => "complex",
    });
    out.push('\n');
    for (&v, &w) in g.loops() {
        out.push_str("loop ");
        out.push_str(&v.to_string());
        render_weight(&mut out, w, g.field());
        out.push('\n');
    }
    for (&(u, v), &w) in g.edges() {
        out.push_str("edge ");
        out.push_str(&u.to_string());
        out.push(' ');
        out.push_str(&v.to_string());
        render_weight(&mut out, w, g.field());
        out.push('\n');
    }
    out
}
