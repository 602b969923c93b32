//! Plain-text instance files.
//!
//! ```text
//! matroid linear q=<q> rank=<r> cols=<m>     then m lines of r field indices
//! matroid graphic vertices=<n>               then edge lines `u v`
//! biasedgraph vertices=<n> group=cyclic<k>   then `edge <id> <u> <v> <gain>`
//!                                            and `loop <id> <v> <gain|u>`
//! graph vertices=<n>                         then edge lines `u v`
//! ```
//!
//! A biased graph may instead use `group=table` with one `row ...` line per
//! row of the multiplication table, or `group=explicit` with gainless edges
//! and `balanced <ids..>` lines listing its balanced cycles. Blank lines and
//! lines starting with `#` are ignored. Towers and witnesses have their own
//! `Display`/`FromStr` pairs.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::path::Path;

use crate::algebra::{Fe, Field, GroupTable};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::extremal::SimpleGraph;
use crate::frame::{frame_matroid, Balance, BiasedGraph, Gain};
use crate::linear::LinearMatroid;
use crate::matroid::{GraphicMatroid, MatroidHandle};

/// Any instance the text format can hold.
#[derive(Debug, Clone)]
pub enum Instance {
    Linear(LinearMatroid),
    Graphic(GraphicMatroid),
    Biased(BiasedGraph),
    Graph(SimpleGraph),
}

impl Instance {
    /// The matroid of the instance; graphs give their cycle matroid.
    pub fn matroid(&self) -> MatroidHandle {
        match self {
            Instance::Linear(l) => l.clone().into_handle(),
            Instance::Graphic(g) => g.clone().into_handle(),
            Instance::Biased(b) => frame_matroid(b),
            Instance::Graph(g) => g.cycle_matroid(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Linear(_) => "linear",
            Instance::Graphic(_) => "graphic",
            Instance::Biased(_) => "biasedgraph",
            Instance::Graph(_) => "graph",
        }
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Instance> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        text.parse()
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_string()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Linear(l) => f.write_str(&write_linear(l)),
            Instance::Graphic(g) => f.write_str(&write_edges(
                &format!("matroid graphic vertices={}", g.vertices()),
                g.edges().iter().copied(),
            )),
            Instance::Biased(b) => f.write_str(&write_biased(b)),
            Instance::Graph(g) => f.write_str(&write_edges(
                &format!("graph vertices={}", g.vertex_count()),
                g.edges(),
            )),
        }
    }
}

impl std::str::FromStr for Instance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Instance> {
        let mut lines = content_lines(s);
        let (ln, header) = lines.next().ok_or_else(|| Error::parse(1, "empty file"))?;
        let words: Vec<&str> = header.split_whitespace().collect();
        match words.as_slice() {
            ["matroid", "linear", rest @ ..] => read_linear(ln, rest, lines).map(Instance::Linear),
            ["matroid", "graphic", rest @ ..] => {
                let n = Header::new(ln, rest)?.usize("vertices")?;
                let edges = read_edges(lines)?;
                GraphicMatroid::new(n, edges).map(Instance::Graphic)
            }
            ["graph", rest @ ..] => {
                let n = Header::new(ln, rest)?.usize("vertices")?;
                let edges = read_edges(lines)?;
                SimpleGraph::from_edges(n, &edges).map(Instance::Graph)
            }
            ["biasedgraph", rest @ ..] => read_biased(ln, rest, lines).map(Instance::Biased),
            _ => Err(Error::parse(ln, format!("unknown header {header:?}"))),
        }
    }
}

fn content_lines(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// `key=value` tokens of a header line.
struct Header<'a> {
    line: usize,
    map: BTreeMap<&'a str, &'a str>,
    extra: Vec<&'a str>,
}

impl<'a> Header<'a> {
    fn new(line: usize, words: &[&'a str]) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut extra = Vec::new();
        for w in words {
            match w.split_once('=') {
                Some((k, v)) => {
                    if map.insert(k, v).is_some() {
                        return Err(Error::parse(line, format!("{k} given twice")));
                    }
                }
                None => extra.push(*w),
            }
        }
        Ok(Header { line, map, extra })
    }

    fn str(&self, key: &str) -> Result<&'a str> {
        self.map
            .get(key)
            .copied()
            .ok_or_else(|| Error::parse(self.line, format!("missing {key}=")))
    }

    fn usize(&self, key: &str) -> Result<usize> {
        let v = self.str(key)?;
        v.parse()
            .map_err(|_| Error::parse(self.line, format!("{key}={v} is not a number")))
    }
}

fn num<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse().map_err(|_| Error::parse(line, format!("bad number {tok:?}")))
}

fn write_edges(header: &str, edges: impl Iterator<Item = (usize, usize)>) -> String {
    let mut out = format!("{header}\n");
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn read_edges<'a>(lines: impl Iterator<Item = (usize, &'a str)>) -> Result<Vec<(usize, usize)>> {
    lines
        .map(|(ln, l)| {
            let toks: Vec<&str> = l.split_whitespace().collect();
            match toks.as_slice() {
                [u, v] => Ok((num(ln, u)?, num(ln, v)?)),
                _ => Err(Error::parse(ln, "expected an edge `u v`")),
            }
        })
        .collect()
}

pub fn write_linear(l: &LinearMatroid) -> String {
    let mut out = format!(
        "matroid linear q={} rank={} cols={}\n",
        l.field().order(),
        l.rows(),
        l.columns().len()
    );
    for c in l.columns() {
        let row: Vec<String> = c.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

fn read_linear<'a>(
    ln: usize,
    rest: &[&str],
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<LinearMatroid> {
    let h = Header::new(ln, rest)?;
    let q = h.usize("q")? as u64;
    let rows = h.usize("rank")?;
    let m = h.usize("cols")?;
    let field = Field::new(q)?;
    let mut cols = Vec::with_capacity(m);
    for (ln, l) in lines {
        let col = l.split_whitespace().map(|t| num::<Fe>(ln, t)).collect::<Result<Vec<_>>>()?;
        if col.len() != rows {
            return Err(Error::parse(ln, format!("column has {} entries, expected {rows}", col.len())));
        }
        cols.push(col);
    }
    if cols.len() != m {
        return Err(Error::parse(ln, format!("header says {m} columns, found {}", cols.len())));
    }
    LinearMatroid::new(field, rows, cols)
}

/// Vertices are written as `0..=max`; isolated vertices outside the current
/// vertex set do not change the frame matroid.
pub fn write_biased(b: &BiasedGraph) -> String {
    let g = b.graph();
    let n = g.vertices().iter().next_back().map_or(0, |v| v + 1);
    let mut out = format!("biasedgraph vertices={n} ");
    match b.balance() {
        Balance::Gains { group, .. } if group.is_cyclic_named() => {
            let _ = writeln!(out, "group=cyclic{}", group.order());
        }
        Balance::Gains { group, .. } => {
            out.push_str("group=table\n");
            for row in group.rows() {
                let row: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(out, "row {}", row.join(" "));
            }
        }
        Balance::Explicit { .. } => out.push_str("group=explicit\n"),
    }
    for e in g.edges() {
        let gain = match b.gain_of(e.id) {
            Some(Gain::Element(x)) => format!(" {x}"),
            Some(Gain::Unbalanced) => " u".into(),
            None => String::new(),
        };
        if e.is_loop() {
            let _ = writeln!(out, "loop {} {}{gain}", e.id, e.tail);
        } else {
            let _ = writeln!(out, "edge {} {} {}{gain}", e.id, e.tail, e.head);
        }
    }
    if let Balance::Explicit { balanced } = b.balance() {
        for c in balanced {
            let ids: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "balanced {}", ids.join(" "));
        }
    }
    out
}

fn read_biased<'a>(
    ln: usize,
    rest: &[&str],
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<BiasedGraph> {
    let h = Header::new(ln, rest)?;
    let n = h.usize("vertices")?;
    let group = h.str("group")?;
    // `group=cyclic 3` and `group=cyclic3` are both accepted.
    let cyclic = match (group.strip_prefix("cyclic"), h.extra.as_slice()) {
        (Some(""), [k]) => Some(num::<usize>(ln, k)?),
        (Some(k), []) if !k.is_empty() => Some(num::<usize>(ln, k)?),
        (None, []) => None,
        _ => return Err(Error::parse(ln, format!("bad group specification {group:?}"))),
    };
    let explicit = group == "explicit";
    if cyclic.is_none() && !explicit && group != "table" {
        return Err(Error::parse(ln, format!("unknown group {group:?}")));
    }
    let mut rows = Vec::new();
    let mut edges = Vec::new();
    let mut balanced = Vec::new();
    for (ln, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let gain = |t: &str| -> Result<Gain> {
            if t == "u" {
                Ok(Gain::Unbalanced)
            } else {
                num(ln, t).map(Gain::Element)
            }
        };
        match (toks.as_slice(), explicit) {
            (["row", xs @ ..], false) => rows.push(xs.iter().map(|x| num(ln, x)).collect::<Result<Vec<usize>>>()?),
            (["edge", id, u, v, g], false) => edges.push((num(ln, id)?, num(ln, u)?, num(ln, v)?, Some(gain(g)?))),
            (["loop", id, v, g], false) => {
                let v = num(ln, v)?;
                edges.push((num(ln, id)?, v, v, Some(gain(g)?)));
            }
            (["edge", id, u, v], true) => edges.push((num(ln, id)?, num(ln, u)?, num(ln, v)?, None)),
            (["loop", id, v], true) => {
                let v = num(ln, v)?;
                edges.push((num(ln, id)?, v, v, None));
            }
            (["balanced", ids @ ..], true) => {
                balanced.push(ids.iter().map(|x| num(ln, x)).collect::<Result<Vec<usize>>>()?)
            }
            _ => return Err(Error::parse(ln, format!("unexpected line {l:?}"))),
        }
    }
    if explicit {
        let edges = edges.into_iter().map(|(id, u, v, _)| (id, u, v)).collect();
        return BiasedGraph::with_explicit(0..n, edges, balanced, Caps::global());
    }
    let group = match cyclic {
        Some(k) => GroupTable::cyclic(k)?,
        None => GroupTable::from_table(&rows)?,
    };
    let edges = edges.into_iter().map(|(id, u, v, g)| (id, u, v, g.expect("gain parsed"))).collect();
    BiasedGraph::with_gains(0..n, group, edges)
}
