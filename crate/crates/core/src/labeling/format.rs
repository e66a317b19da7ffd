//! Plain-text format for graphs and labelings, one graph per file.
//!
//! Header line, one of:
//!
//! ```text
//! theta a1 a2 ... as
//! spider a1 ... as
//! cycles n1 ... nr
//! graph <n> <m>
//! ```
//!
//! Family headers may be followed by one label line per structural part, in
//! any order but each part exactly once:
//!
//! ```text
//! path <i>: l1 l2 ... l_{a_i}     (u -> v order)
//! leg <i>: l1 ... l_{a_i}         (core -> pendant order)
//! cycle <i>: l1 ... l_{n_i}       (starting and ending at the core)
//! ```
//!
//! The generic fallback is followed by `m` lines `edge u v [label]`. Labels,
//! when present, must form a bijection onto `1..=q`; violations are reported
//! at parse time with line and column.

use std::fmt;

use thiserror::Error;

use crate::graphs::{
    build_cycle_union, build_spider, build_theta, CycleUnionSpec, Graph, GraphError, GraphKind,
    SpiderSpec, ThetaSpec, VertexRole,
};
use crate::labeling::EdgeLabeling;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected a header line (theta/spider/cycles/graph)")]
    MissingHeader,
    #[error("unknown keyword `{0}`")]
    UnknownKeyword(String),
    #[error("expected an integer, got `{0}`")]
    BadInteger(String),
    #[error("unexpected trailing input `{0}`")]
    TrailingInput(String),
    #[error("expected `{0}`")]
    Expected(&'static str),
    #[error("part index {got} out of range 1..={max}")]
    PartOutOfRange { got: usize, max: usize },
    #[error("part {0} labeled twice")]
    DuplicatePart(usize),
    #[error("part {part} needs {need} labels, got {got}")]
    WrongLabelCount {
        part: usize,
        need: usize,
        got: usize,
    },
    #[error("label {0} repeated; labels must be a bijection onto 1..=q")]
    DuplicateLabel(i64),
    #[error("label {0} outside 1..=q")]
    LabelOutOfRange(i64),
    #[error("labels cover only part of the graph")]
    IncompleteLabeling,
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
}

/// Cursor over one line, tracking 1-based column of the current token.
struct LineCursor<'a> {
    line_no: usize,
    text: &'a str,
    pos: usize,
}

impl<'a> LineCursor<'a> {
    fn new(line_no: usize, text: &'a str) -> Self {
        LineCursor {
            line_no,
            text,
            pos: 0,
        }
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line_no,
            col: self.pos + 1,
            kind,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text.as_bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next_token(&mut self) -> Option<&'a str> {
        self.skip_ws();
        if self.pos >= self.text.len() {
            return None;
        }
        let start = self.pos;
        while self.pos < self.text.len() && !self.text.as_bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let tok = &self.text[start..self.pos];
        self.pos = start; // keep column pointing at the token for errors
        Some(tok)
    }

    fn consume_token(&mut self) -> Option<&'a str> {
        let tok = self.next_token()?;
        self.pos += tok.len();
        Some(tok)
    }

    fn integer<T: std::str::FromStr>(&mut self) -> Result<T, ParseError> {
        let tok = self
            .next_token()
            .ok_or_else(|| self.err(ParseErrorKind::Expected("an integer")))?;
        let value = tok
            .parse::<T>()
            .map_err(|_| self.err(ParseErrorKind::BadInteger(tok.to_string())))?;
        self.pos += tok.len();
        Ok(value)
    }

    fn rest_integers<T: std::str::FromStr>(&mut self) -> Result<Vec<T>, ParseError> {
        let mut out = Vec::new();
        while self.next_token().is_some() {
            out.push(self.integer()?);
        }
        Ok(out)
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        if let Some(tok) = self.next_token() {
            return Err(self.err(ParseErrorKind::TrailingInput(tok.to_string())));
        }
        Ok(())
    }
}

/// Parses a graph file, returning the labeling too if label lines are present.
pub fn parse_text(text: &str) -> Result<(Graph, Option<EdgeLabeling>), ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let (header_no, header) = lines.next().ok_or(ParseError {
        line: 1,
        col: 1,
        kind: ParseErrorKind::MissingHeader,
    })?;
    let mut cur = LineCursor::new(header_no, header);
    let keyword = cur
        .consume_token()
        .ok_or_else(|| cur.err(ParseErrorKind::MissingHeader))?;

    match keyword {
        "theta" | "spider" | "cycles" => {
            let params: Vec<usize> = cur.rest_integers()?;
            let graph = match keyword {
                "theta" => build_theta(
                    &ThetaSpec::new(params).map_err(|e| cur.err(ParseErrorKind::Graph(e)))?,
                ),
                "spider" => build_spider(
                    &SpiderSpec::new(params).map_err(|e| cur.err(ParseErrorKind::Graph(e)))?,
                ),
                _ => build_cycle_union(
                    &CycleUnionSpec::new(params).map_err(|e| cur.err(ParseErrorKind::Graph(e)))?,
                ),
            };
            let part_keyword = match graph.kind() {
                GraphKind::Theta(_) => "path",
                GraphKind::Spider(_) => "leg",
                _ => "cycle",
            };
            let labeling = parse_part_labels(&graph, part_keyword, lines)?;
            Ok((graph, labeling))
        }
        "graph" => {
            let n: usize = cur.integer()?;
            let m: usize = cur.integer()?;
            cur.expect_end()?;
            let mut ends = Vec::with_capacity(m);
            let mut labels: Vec<(i64, usize, usize)> = Vec::new();
            let mut last_no = header_no;
            for _ in 0..m {
                let (no, line) = lines.next().ok_or(ParseError {
                    line: last_no,
                    col: 1,
                    kind: ParseErrorKind::Expected("an `edge u v` line"),
                })?;
                last_no = no;
                let mut cur = LineCursor::new(no, line);
                let kw = cur
                    .consume_token()
                    .ok_or_else(|| cur.err(ParseErrorKind::Expected("edge")))?;
                if kw != "edge" {
                    return Err(cur.err(ParseErrorKind::UnknownKeyword(kw.to_string())));
                }
                let a: usize = cur.integer()?;
                let b: usize = cur.integer()?;
                if cur.next_token().is_some() {
                    let col = cur.pos + 1;
                    labels.push((cur.integer::<i64>()?, no, col));
                }
                cur.expect_end()?;
                ends.push((a, b));
            }
            let graph = Graph::from_raw(
                GraphKind::Generic,
                vec![VertexRole::Internal; n],
                ends,
                (0..=m).collect(),
            )
            .map_err(|e| ParseError {
                line: header_no,
                col: 1,
                kind: ParseErrorKind::Graph(e),
            })?;
            let labeling = if labels.is_empty() {
                None
            } else {
                if labels.len() != m {
                    let &(_, line, col) = labels.last().unwrap();
                    return Err(ParseError {
                        line,
                        col,
                        kind: ParseErrorKind::IncompleteLabeling,
                    });
                }
                let values: Vec<i64> = labels.iter().map(|&(v, _, _)| v).collect();
                check_bijection(&values, |i, kind| ParseError {
                    line: labels[i].1,
                    col: labels[i].2,
                    kind,
                })?;
                Some(EdgeLabeling::new(values))
            };
            Ok((graph, labeling))
        }
        other => Err(cur.err(ParseErrorKind::UnknownKeyword(other.to_string()))),
    }
}

fn parse_part_labels<'a>(
    graph: &Graph,
    part_keyword: &'static str,
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<Option<EdgeLabeling>, ParseError> {
    let q = graph.edge_count();
    let mut labels: Vec<Option<i64>> = vec![None; q];
    let mut seen_part = vec![false; graph.part_count()];
    let mut any = false;
    let mut positions: Vec<(usize, usize)> = vec![(0, 0); q]; // label line/col per edge

    for (no, line) in lines {
        any = true;
        let mut cur = LineCursor::new(no, line);
        let kw = cur
            .consume_token()
            .ok_or_else(|| cur.err(ParseErrorKind::Expected(part_keyword)))?;
        let kw = kw.strip_suffix(':').unwrap_or(kw);
        if kw != part_keyword {
            return Err(cur.err(ParseErrorKind::UnknownKeyword(kw.to_string())));
        }
        let idx_tok = cur
            .next_token()
            .ok_or_else(|| cur.err(ParseErrorKind::Expected("a part index")))?;
        let raw_len = idx_tok.len();
        let idx_tok = idx_tok.strip_suffix(':').unwrap_or(idx_tok);
        let idx: usize = idx_tok
            .parse()
            .map_err(|_| cur.err(ParseErrorKind::BadInteger(idx_tok.to_string())))?;
        cur.pos += raw_len;
        if idx == 0 || idx > graph.part_count() {
            return Err(cur.err(ParseErrorKind::PartOutOfRange {
                got: idx,
                max: graph.part_count(),
            }));
        }
        if seen_part[idx - 1] {
            return Err(cur.err(ParseErrorKind::DuplicatePart(idx)));
        }
        seen_part[idx - 1] = true;

        let range = graph.part_edges(idx - 1);
        let need = range.len();
        let mut got = 0;
        for e in range {
            if cur.next_token().is_none() {
                return Err(cur.err(ParseErrorKind::WrongLabelCount {
                    part: idx,
                    need,
                    got,
                }));
            }
            positions[e] = (cur.line_no, cur.pos + 1);
            labels[e] = Some(cur.integer()?);
            got += 1;
        }
        if let Some(extra) = cur.next_token() {
            return Err(cur.err(ParseErrorKind::TrailingInput(extra.to_string())));
        }
    }

    if !any {
        return Ok(None);
    }
    if let Some(part) = seen_part.iter().position(|&s| !s) {
        return Err(ParseError {
            line: positions.iter().map(|&(l, _)| l).max().unwrap_or(1),
            col: 1,
            kind: ParseErrorKind::WrongLabelCount {
                part: part + 1,
                need: graph.part_edges(part).len(),
                got: 0,
            },
        });
    }
    let values: Vec<i64> = labels.into_iter().map(Option::unwrap).collect();
    check_bijection(&values, |i, kind| ParseError {
        line: positions[i].0,
        col: positions[i].1,
        kind,
    })?;
    Ok(Some(EdgeLabeling::new(values)))
}

fn check_bijection(
    values: &[i64],
    err_at: impl Fn(usize, ParseErrorKind) -> ParseError,
) -> Result<(), ParseError> {
    let q = values.len() as i64;
    let mut used = vec![false; values.len()];
    for (i, &v) in values.iter().enumerate() {
        if v < 1 || v > q {
            return Err(err_at(i, ParseErrorKind::LabelOutOfRange(v)));
        }
        if used[(v - 1) as usize] {
            return Err(err_at(i, ParseErrorKind::DuplicateLabel(v)));
        }
        used[(v - 1) as usize] = true;
    }
    Ok(())
}

/// Renders a graph (and optionally a labeling) in the canonical text format.
pub fn serialize_text(g: &Graph, f: Option<&EdgeLabeling>) -> String {
    let mut out = String::new();
    match g.kind() {
        GraphKind::Theta(spec) => {
            push_family(&mut out, "theta", spec.lengths(), "path", g, f);
        }
        GraphKind::Spider(spec) => {
            push_family(&mut out, "spider", spec.legs(), "leg", g, f);
        }
        GraphKind::CycleUnion(spec) => {
            push_family(&mut out, "cycles", spec.cycles(), "cycle", g, f);
        }
        GraphKind::Generic => {
            out.push_str(&format!(
                "graph {} {}\n",
                g.vertex_count(),
                g.edge_count()
            ));
            for (e, &(a, b)) in g.edges().iter().enumerate() {
                match f {
                    Some(f) => out.push_str(&format!("edge {a} {b} {}\n", f.get(e))),
                    None => out.push_str(&format!("edge {a} {b}\n")),
                }
            }
        }
    }
    out
}

fn push_family(
    out: &mut String,
    header: &str,
    params: &[usize],
    part_keyword: &str,
    g: &Graph,
    f: Option<&EdgeLabeling>,
) {
    out.push_str(header);
    for p in params {
        out.push_str(&format!(" {p}"));
    }
    out.push('\n');
    if let Some(f) = f {
        for i in 0..g.part_count() {
            out.push_str(&format!("{part_keyword} {}:", i + 1));
            for e in g.part_edges(i) {
                out.push_str(&format!(" {}", f.get(e)));
            }
            out.push('\n');
        }
    }
}

/// Strict variant of [`parse_text`]: the file must carry labels.
pub fn parse_labeling(text: &str) -> Result<(Graph, EdgeLabeling), ParseError> {
    let (g, f) = parse_text(text)?;
    match f {
        Some(f) => Ok((g, f)),
        None => Err(ParseError {
            line: 1,
            col: 1,
            kind: ParseErrorKind::IncompleteLabeling,
        }),
    }
}

/// Strict variant of [`serialize_text`] for (graph, labeling) pairs.
pub fn serialize_labeling(g: &Graph, f: &EdgeLabeling) -> String {
    serialize_text(g, Some(f))
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_text(self, None))
    }
}
