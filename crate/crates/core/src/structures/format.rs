//! Text formats for every core structure.
//!
//! Native formats are line oriented with 1-based indices; JSON mirrors use the
//! same 1-based convention. Blank lines and lines starting with `#` are
//! ignored by the native parsers. See `docs/formats.md` for the schemas.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{
    Arc, ColoredDigraph, FiniteLattice, FinitePoset, LatticeError, PosetError, UndirectedGraph,
};
use crate::groups::{FiniteGroup, GroupError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Native,
    Json,
    Dot,
}

/// A parse failure, tagged with the 1-based line where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct FormatError {
    pub line: usize,
    pub kind: FormatErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatErrorKind {
    #[error("malformed header: {0}")]
    Header(String),
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("expected {expected} data lines, found {found}")]
    LineCount { expected: usize, found: usize },
    #[error("index {0} out of range")]
    OutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate arc {0} {1} color {2}")]
    DuplicateArc(usize, usize, u32),
    #[error("arc colors must be at least 1")]
    ZeroColor,
    #[error("invalid group: {0}")]
    Group(GroupError),
    #[error("invalid order: {0}")]
    Poset(PosetError),
    #[error("not a lattice: {0}")]
    Lattice(LatticeError),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("DOT output cannot be parsed back")]
    DotUnsupported,
}

impl FormatError {
    fn at(line: usize, kind: FormatErrorKind) -> Self {
        FormatError { line, kind }
    }
}

/// Conversion between a structure and its text encodings.
pub trait TextFormat: Sized {
    fn to_native(&self) -> String;
    fn from_native(text: &str) -> Result<Self, FormatError>;
    fn to_json(&self) -> String;
    fn from_json(text: &str) -> Result<Self, FormatError>;
    fn to_dot(&self) -> String;
}

pub fn serialize<T: TextFormat>(x: &T, format: Format) -> String {
    match format {
        Format::Native => x.to_native(),
        Format::Json => x.to_json(),
        Format::Dot => x.to_dot(),
    }
}

pub fn parse<T: TextFormat>(text: &str, format: Format) -> Result<T, FormatError> {
    match format {
        Format::Native => T::from_native(text),
        Format::Json => T::from_json(text),
        Format::Dot => Err(FormatError::at(0, FormatErrorKind::DotUnsupported)),
    }
}

pub fn parse_graph(text: &str) -> Result<UndirectedGraph, FormatError> {
    UndirectedGraph::from_native(text)
}

/// Non-comment lines of `text` with their 1-based line numbers.
struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    fn next_fields(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, line) in self.inner.by_ref() {
            self.last = i + 1;
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            return Some((i + 1, t.split_whitespace().collect()));
        }
        None
    }

    fn header(&mut self, arity: usize) -> Result<Vec<usize>, FormatError> {
        let (line, fields) = self
            .next_fields()
            .ok_or_else(|| FormatError::at(1, FormatErrorKind::Header("missing".into())))?;
        if fields.len() != arity {
            return Err(FormatError::at(
                line,
                FormatErrorKind::Header(format!("expected {arity} integers, got {}", fields.len())),
            ));
        }
        fields
            .iter()
            .map(|f| {
                f.parse::<usize>().map_err(|_| {
                    FormatError::at(
                        line,
                        FormatErrorKind::Header(format!("not an integer: {f}")),
                    )
                })
            })
            .collect()
    }

    /// Exactly `count` data lines of `arity` integers each.
    fn rows(
        &mut self,
        count: usize,
        arity: usize,
    ) -> Result<Vec<(usize, Vec<usize>)>, FormatError> {
        let mut out = Vec::with_capacity(count);
        while let Some((line, fields)) = self.next_fields() {
            if out.len() == count {
                return Err(FormatError::at(
                    line,
                    FormatErrorKind::LineCount {
                        expected: count,
                        found: count + 1,
                    },
                ));
            }
            if fields.len() != arity {
                return Err(FormatError::at(
                    line,
                    FormatErrorKind::Malformed(format!(
                        "expected {arity} integers, got {}",
                        fields.len()
                    )),
                ));
            }
            let vals = fields
                .iter()
                .map(|f| {
                    f.parse::<usize>().map_err(|_| {
                        FormatError::at(
                            line,
                            FormatErrorKind::Malformed(format!("not an integer: {f}")),
                        )
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            out.push((line, vals));
        }
        if out.len() != count {
            return Err(FormatError::at(
                self.last.max(1),
                FormatErrorKind::LineCount {
                    expected: count,
                    found: out.len(),
                },
            ));
        }
        Ok(out)
    }
}

/// 1-based file index to 0-based, checked against `n`.
fn index(line: usize, v: usize, n: usize) -> Result<usize, FormatError> {
    if v == 0 || v > n {
        Err(FormatError::at(line, FormatErrorKind::OutOfRange(v)))
    } else {
        Ok(v - 1)
    }
}

fn json_err(e: serde_json::Error) -> FormatError {
    FormatError::at(e.line(), FormatErrorKind::Json(e.to_string()))
}

fn to_json_string<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("structure serializes to JSON")
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

// ---------------------------------------------------------------- graphs

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: usize,
    edges: Vec<[usize; 2]>,
}

impl TextFormat for UndirectedGraph {
    fn to_native(&self) -> String {
        let mut s = format!("{} {}", self.vertex_count(), self.edge_count());
        for &(u, v) in self.edges() {
            write!(s, "\n{} {}", u + 1, v + 1).unwrap();
        }
        s
    }

    fn from_native(text: &str) -> Result<Self, FormatError> {
        let mut lines = Lines::new(text);
        let h = lines.header(2)?;
        let (n, m) = (h[0], h[1]);
        let mut seen = BTreeSet::new();
        let mut edges = Vec::with_capacity(m);
        for (line, r) in lines.rows(m, 2)? {
            let (u, v) = (index(line, r[0], n)?, index(line, r[1], n)?);
            if u == v {
                return Err(FormatError::at(line, FormatErrorKind::SelfLoop(r[0])));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(FormatError::at(
                    line,
                    FormatErrorKind::DuplicateEdge(r[0], r[1]),
                ));
            }
            edges.push((u, v));
        }
        Ok(UndirectedGraph::new(n, edges).expect("edges validated above"))
    }

    fn to_json(&self) -> String {
        to_json_string(&GraphJson {
            vertices: self.vertex_count(),
            edges: self.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect(),
        })
    }

    fn from_json(text: &str) -> Result<Self, FormatError> {
        let j: GraphJson = serde_json::from_str(text).map_err(json_err)?;
        let mut native = format!("{} {}", j.vertices, j.edges.len());
        for [u, v] in j.edges {
            write!(native, "\n{u} {v}").unwrap();
        }
        Self::from_native(&native).map_err(|e| FormatError::at(0, e.kind))
    }

    fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.vertex_count() {
            writeln!(s, "  {};", v + 1).unwrap();
        }
        for &(u, v) in self.edges() {
            writeln!(s, "  {} -- {};", u + 1, v + 1).unwrap();
        }
        s.push('}');
        s
    }
}

// ------------------------------------------------------ colored digraphs

#[derive(Serialize, Deserialize)]
struct DigraphJson {
    nodes: usize,
    arcs: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl TextFormat for ColoredDigraph {
    fn to_native(&self) -> String {
        let mut s = format!("{} {}", self.node_count(), self.arc_count());
        for a in self.arcs() {
            write!(s, "\n{} {} {}", a.src + 1, a.dst + 1, a.color).unwrap();
        }
        s
    }

    fn from_native(text: &str) -> Result<Self, FormatError> {
        let mut lines = Lines::new(text);
        let h = lines.header(2)?;
        let (n, m) = (h[0], h[1]);
        let mut seen = BTreeSet::new();
        for (line, r) in lines.rows(m, 3)? {
            let (u, v) = (index(line, r[0], n)?, index(line, r[1], n)?);
            let color = u32::try_from(r[2]).map_err(|_| {
                FormatError::at(line, FormatErrorKind::Malformed("color too large".into()))
            })?;
            if color == 0 {
                return Err(FormatError::at(line, FormatErrorKind::ZeroColor));
            }
            if !seen.insert(Arc::new(u, v, color)) {
                return Err(FormatError::at(
                    line,
                    FormatErrorKind::DuplicateArc(r[0], r[1], color),
                ));
            }
        }
        Ok(ColoredDigraph::new(n, seen).expect("arcs validated above"))
    }

    fn to_json(&self) -> String {
        to_json_string(&DigraphJson {
            nodes: self.node_count(),
            arcs: self
                .arcs()
                .iter()
                .map(|a| [a.src + 1, a.dst + 1, a.color as usize])
                .collect(),
            labels: self.labels().map(|l| l.to_vec()),
        })
    }

    fn from_json(text: &str) -> Result<Self, FormatError> {
        let j: DigraphJson = serde_json::from_str(text).map_err(json_err)?;
        let mut native = format!("{} {}", j.nodes, j.arcs.len());
        for [u, v, c] in j.arcs {
            write!(native, "\n{u} {v} {c}").unwrap();
        }
        let d = Self::from_native(&native).map_err(|e| FormatError::at(0, e.kind))?;
        match j.labels {
            Some(labels) => d
                .with_labels(labels)
                .map_err(|e| FormatError::at(0, FormatErrorKind::Json(e.to_string()))),
            None => Ok(d),
        }
    }

    fn to_dot(&self) -> String {
        let mut s = String::from("digraph G {\n  edge [colorscheme=paired12];\n");
        for v in 0..self.node_count() {
            match self.label(v) {
                Some(l) => writeln!(s, "  {} [label=\"{}\"];", v + 1, dot_escape(l)).unwrap(),
                None => writeln!(s, "  {};", v + 1).unwrap(),
            }
        }
        for a in self.arcs() {
            writeln!(
                s,
                "  {} -> {} [color=\"{}\", label=\"{}\"];",
                a.src + 1,
                a.dst + 1,
                a.color,
                a.color
            )
            .unwrap();
        }
        s.push('}');
        s
    }
}

// --------------------------------------------------------------- groups

#[derive(Serialize, Deserialize)]
struct GroupJson {
    order: usize,
    table: Vec<Vec<usize>>,
}

impl TextFormat for FiniteGroup {
    fn to_native(&self) -> String {
        let n = self.order();
        let mut s = n.to_string();
        for i in 0..n {
            s.push('\n');
            let row: Vec<String> = (0..n).map(|j| (self.op(i, j) + 1).to_string()).collect();
            s.push_str(&row.join(" "));
        }
        s
    }

    fn from_native(text: &str) -> Result<Self, FormatError> {
        let mut lines = Lines::new(text);
        let n = lines.header(1)?[0];
        let rows = lines.rows(n, n)?;
        let mut table = Vec::with_capacity(n);
        for (line, r) in rows {
            table.push(
                r.into_iter()
                    .map(|v| index(line, v, n))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        let last = lines.last.max(1);
        FiniteGroup::from_table(table).map_err(|e| FormatError::at(last, FormatErrorKind::Group(e)))
    }

    fn to_json(&self) -> String {
        let n = self.order();
        to_json_string(&GroupJson {
            order: n,
            table: (0..n)
                .map(|i| (0..n).map(|j| self.op(i, j) + 1).collect())
                .collect(),
        })
    }

    fn from_json(text: &str) -> Result<Self, FormatError> {
        let j: GroupJson = serde_json::from_str(text).map_err(json_err)?;
        if j.table.len() != j.order {
            return Err(FormatError::at(
                0,
                FormatErrorKind::Malformed(format!(
                    "table has {} rows, order is {}",
                    j.table.len(),
                    j.order
                )),
            ));
        }
        let table = j
            .table
            .into_iter()
            .map(|row| row.into_iter().map(|v| index(0, v, j.order)).collect())
            .collect::<Result<Vec<Vec<usize>>, _>>()?;
        FiniteGroup::from_table(table).map_err(|e| FormatError::at(0, FormatErrorKind::Group(e)))
    }

    /// Cayley digraph over the canonical generating set; arc color `k`
    /// marks right multiplication by the `k`-th generator.
    fn to_dot(&self) -> String {
        let gens = self.generating_set();
        let mut s = String::from("digraph Cayley {\n  edge [colorscheme=paired12];\n");
        for v in 0..self.order() {
            writeln!(s, "  {};", v + 1).unwrap();
        }
        for v in 0..self.order() {
            for (k, &g) in gens.iter().enumerate() {
                writeln!(
                    s,
                    "  {} -> {} [color=\"{}\", label=\"g{}\"];",
                    v + 1,
                    self.op(v, g) + 1,
                    k + 1,
                    g + 1
                )
                .unwrap();
            }
        }
        s.push('}');
        s
    }
}

// ------------------------------------------------- posets and lattices

#[derive(Serialize, Deserialize)]
struct PosetJson {
    elements: usize,
    covers: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
struct LatticeJson {
    elements: usize,
    covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bottom: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    top: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    meet: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    join: Option<Vec<Vec<usize>>>,
}

fn covers_native(n: usize, covers: &[(usize, usize)]) -> String {
    let mut s = format!("{} {}", n, covers.len());
    for &(u, v) in covers {
        write!(s, "\n{} {}", u + 1, v + 1).unwrap();
    }
    s
}

fn covers_from_native(text: &str) -> Result<(FinitePoset, usize), FormatError> {
    let mut lines = Lines::new(text);
    let h = lines.header(2)?;
    let (n, k) = (h[0], h[1]);
    let mut covers = Vec::with_capacity(k);
    for (line, r) in lines.rows(k, 2)? {
        let (u, v) = (index(line, r[0], n)?, index(line, r[1], n)?);
        if u == v {
            return Err(FormatError::at(line, FormatErrorKind::SelfLoop(r[0])));
        }
        covers.push((u, v));
    }
    let last = lines.last.max(1);
    let p = FinitePoset::from_covers(n, &covers)
        .map_err(|e| FormatError::at(last, FormatErrorKind::Poset(e)))?;
    Ok((p, last))
}

fn hasse_dot(n: usize, covers: &[(usize, usize)]) -> String {
    let mut s = String::from("digraph Hasse {\n  rankdir=BT;\n");
    for v in 0..n {
        writeln!(s, "  {};", v + 1).unwrap();
    }
    for &(u, v) in covers {
        writeln!(s, "  {} -> {};", u + 1, v + 1).unwrap();
    }
    s.push('}');
    s
}

fn one_based(covers: &[(usize, usize)]) -> Vec<[usize; 2]> {
    covers.iter().map(|&(u, v)| [u + 1, v + 1]).collect()
}

fn covers_to_native_text(n: usize, covers: &[[usize; 2]]) -> String {
    let mut s = format!("{} {}", n, covers.len());
    for [u, v] in covers {
        write!(s, "\n{u} {v}").unwrap();
    }
    s
}

impl TextFormat for FinitePoset {
    fn to_native(&self) -> String {
        covers_native(self.len(), &self.covers())
    }

    fn from_native(text: &str) -> Result<Self, FormatError> {
        covers_from_native(text).map(|(p, _)| p)
    }

    fn to_json(&self) -> String {
        to_json_string(&PosetJson {
            elements: self.len(),
            covers: one_based(&self.covers()),
        })
    }

    fn from_json(text: &str) -> Result<Self, FormatError> {
        let j: PosetJson = serde_json::from_str(text).map_err(json_err)?;
        Self::from_native(&covers_to_native_text(j.elements, &j.covers))
            .map_err(|e| FormatError::at(0, e.kind))
    }

    fn to_dot(&self) -> String {
        hasse_dot(self.len(), &self.covers())
    }
}

impl TextFormat for FiniteLattice {
    fn to_native(&self) -> String {
        covers_native(self.len(), &self.to_poset().covers())
    }

    fn from_native(text: &str) -> Result<Self, FormatError> {
        let (p, last) = covers_from_native(text)?;
        FiniteLattice::from_poset(&p)
            .map_err(|e| FormatError::at(last, FormatErrorKind::Lattice(e)))
    }

    fn to_json(&self) -> String {
        let inc = |t: Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            t.into_iter()
                .map(|r| r.into_iter().map(|v| v + 1).collect())
                .collect()
        };
        to_json_string(&LatticeJson {
            elements: self.len(),
            covers: one_based(&self.to_poset().covers()),
            bottom: Some(self.bottom() + 1),
            top: Some(self.top() + 1),
            meet: Some(inc(self.meet_table())),
            join: Some(inc(self.join_table())),
        })
    }

    fn from_json(text: &str) -> Result<Self, FormatError> {
        let j: LatticeJson = serde_json::from_str(text).map_err(json_err)?;
        let from_covers = Self::from_native(&covers_to_native_text(j.elements, &j.covers))
            .map_err(|e| FormatError::at(0, e.kind))?;
        // tables, when present, must agree with the cover relation
        if let (Some(meet), Some(join)) = (j.meet, j.join) {
            let dec = |t: Vec<Vec<usize>>| -> Result<Vec<Vec<usize>>, FormatError> {
                t.into_iter()
                    .map(|r| r.into_iter().map(|v| index(0, v, j.elements)).collect())
                    .collect()
            };
            let tables = FiniteLattice::from_tables(&dec(meet)?, &dec(join)?)
                .map_err(|e| FormatError::at(0, FormatErrorKind::Lattice(e)))?;
            if tables != from_covers {
                return Err(FormatError::at(
                    0,
                    FormatErrorKind::Malformed("meet/join tables disagree with covers".into()),
                ));
            }
        }
        Ok(from_covers)
    }

    fn to_dot(&self) -> String {
        hasse_dot(self.len(), &self.to_poset().covers())
    }
}
