//! Line-based graph format.
//!
//! ```text
//! graph <name>
//! vertex <id>
//! edge <id> : <src> -> <rng>
//! bundle <id> : <src> -> <rng> * <n|inf>
//! ```
//!
//! `#` at the start of a token comments out the rest of the line. Writers
//! emit lines sorted by kind and then by identifier.

use std::fmt::Write as _;

use thiserror::Error;

use super::{is_identifier_char, Bundle, Graph, GraphError, MultiGraph, Multiplicity};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}: {source}")]
    Semantic {
        line: usize,
        #[source]
        source: GraphError,
    },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok<'a> {
    Word(&'a str),
    Colon,
    Arrow,
    Star,
}

fn tokenize(line: &str, lineno: usize) -> Result<Vec<(usize, Tok<'_>)>, ParseError> {
    let mut out = Vec::new();
    let bytes = line.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c == '#' {
            break;
        } else if c == ':' {
            out.push((col, Tok::Colon));
            i += 1;
        } else if c == '*' {
            out.push((col, Tok::Star));
            i += 1;
        } else if line[i..].starts_with("->") {
            out.push((col, Tok::Arrow));
            i += 2;
        } else if is_identifier_char(c) {
            let start = i;
            while i < bytes.len() && is_identifier_char(bytes[i] as char) {
                i += 1;
            }
            out.push((col, Tok::Word(&line[start..i])));
        } else {
            return Err(ParseError::Syntax { line: lineno, col, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parsed {
    name: String,
    vertices: Vec<String>,
    edges: Vec<(String, String, String)>,
    bundles: Vec<(String, String, String, Multiplicity, usize)>,
    first_line_of: std::collections::HashMap<String, usize>,
}

fn parse_lines(text: &str, allow_bundles: bool) -> Result<Parsed, ParseError> {
    let mut parsed = Parsed {
        name: String::new(),
        vertices: Vec::new(),
        edges: Vec::new(),
        bundles: Vec::new(),
        first_line_of: Default::default(),
    };
    let mut have_header = false;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = raw.trim_end_matches('\r');
        let trimmed = line.trim_start();
        if !have_header {
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let offset = line.len() - trimmed.len();
            let mut parts = trimmed.split_whitespace();
            if parts.next() != Some("graph") {
                return Err(ParseError::Syntax {
                    line: lineno,
                    col: offset + 1,
                    msg: "expected `graph <name>`".into(),
                });
            }
            let name = parts.next().ok_or_else(|| ParseError::Syntax {
                line: lineno,
                col: line.len() + 1,
                msg: "missing graph name".into(),
            })?;
            if let Some(extra) = parts.next() {
                if !extra.starts_with('#') {
                    let col = line.find(extra).map_or(1, |c| c + 1);
                    return Err(ParseError::Syntax {
                        line: lineno,
                        col,
                        msg: "trailing input after graph name".into(),
                    });
                }
            }
            parsed.name = name.to_string();
            have_header = true;
            continue;
        }
        let toks = tokenize(line, lineno)?;
        if toks.is_empty() {
            continue;
        }
        let err = |col: usize, msg: &str| ParseError::Syntax { line: lineno, col, msg: msg.to_string() };
        let end_col = line.len() + 1;
        let word = |k: usize| -> Result<&str, ParseError> {
            match toks.get(k) {
                Some((_, Tok::Word(w))) => Ok(w),
                Some((c, _)) => Err(err(*c, "expected identifier")),
                None => Err(err(end_col, "expected identifier")),
            }
        };
        let expect = |k: usize, t: Tok<'static>, what: &str| -> Result<(), ParseError> {
            match toks.get(k) {
                Some((_, got)) if *got == t => Ok(()),
                Some((c, _)) => Err(err(*c, &format!("expected `{what}`"))),
                None => Err(err(end_col, &format!("expected `{what}`"))),
            }
        };
        let finish = |k: usize| -> Result<(), ParseError> {
            match toks.get(k) {
                Some((c, _)) => Err(err(*c, "trailing input")),
                None => Ok(()),
            }
        };
        match toks[0].1 {
            Tok::Word("vertex") => {
                let id = word(1)?;
                finish(2)?;
                parsed.first_line_of.entry(id.to_string()).or_insert(lineno);
                parsed.vertices.push(id.to_string());
            }
            Tok::Word(kind @ ("edge" | "bundle")) => {
                if kind == "bundle" && !allow_bundles {
                    return Err(err(toks[0].0, "bundle lines are only allowed in multigraph files"));
                }
                let id = word(1)?;
                expect(2, Tok::Colon, ":")?;
                let src = word(3)?;
                expect(4, Tok::Arrow, "->")?;
                let rng = word(5)?;
                parsed.first_line_of.entry(id.to_string()).or_insert(lineno);
                parsed.first_line_of.entry(src.to_string()).or_insert(lineno);
                parsed.first_line_of.entry(rng.to_string()).or_insert(lineno);
                if kind == "edge" {
                    finish(6)?;
                    parsed.edges.push((id.to_string(), src.to_string(), rng.to_string()));
                } else {
                    expect(6, Tok::Star, "*")?;
                    let m = word(7)?;
                    let mult = if m == "inf" {
                        Multiplicity::Infinite
                    } else {
                        m.parse::<u32>()
                            .map(Multiplicity::Finite)
                            .map_err(|_| err(toks[7].0, "expected a multiplicity or `inf`"))?
                    };
                    finish(8)?;
                    parsed.bundles.push((id.to_string(), src.to_string(), rng.to_string(), mult, lineno));
                }
            }
            _ => return Err(err(toks[0].0, "expected `vertex`, `edge` or `bundle`")),
        }
    }
    if !have_header {
        return Err(ParseError::Syntax { line: last_line.max(1), col: 1, msg: "missing `graph <name>` header".into() });
    }
    Ok(parsed)
}

fn semantic(parsed: &Parsed, e: GraphError) -> ParseError {
    let id = match &e {
        GraphError::InvalidIdentifier(s)
        | GraphError::DuplicateVertex(s)
        | GraphError::DuplicateEdge(s)
        | GraphError::AmbiguousIdentifier(s)
        | GraphError::UnknownVertex(s)
        | GraphError::UnknownEdge(s)
        | GraphError::EmptyBundle(s) => Some(s.as_str()),
        _ => None,
    };
    let line = id.and_then(|s| parsed.first_line_of.get(s)).copied().unwrap_or(1);
    ParseError::Semantic { line, source: e }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let p = parse_lines(text, false)?;
    Graph::new(p.name.clone(), p.vertices.clone(), p.edges.clone()).map_err(|e| semantic(&p, e))
}

pub fn parse_multigraph(text: &str) -> Result<MultiGraph, ParseError> {
    let p = parse_lines(text, true)?;
    let base = Graph::new(p.name.clone(), p.vertices.clone(), p.edges.clone()).map_err(|e| semantic(&p, e))?;
    let bundles = p.bundles.iter().map(|(i, s, r, m, _)| (i.clone(), s.clone(), r.clone(), *m));
    MultiGraph::new(base, bundles).map_err(|e| semantic(&p, e))
}

pub(super) fn write_graph(g: &Graph, bundles: &[Bundle]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {}", g.name());
    for v in g.vertex_names() {
        let _ = writeln!(out, "vertex {v}");
    }
    for (e, s, r) in g.edge_triples() {
        let _ = writeln!(out, "edge {e} : {s} -> {r}");
    }
    for b in bundles {
        let _ = writeln!(
            out,
            "bundle {} : {} -> {} * {}",
            b.id,
            g.vertex_name(b.src),
            g.vertex_name(b.rng),
            b.multiplicity
        );
    }
    out
}
