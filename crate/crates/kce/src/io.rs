//! Text formats: `.gr` graphs, one-line orderings, `.td` tree
//! decompositions, and the JSON sidecars for instances and gadget labels.
//!
//! All ids are 1-based on disk and 0-based in memory. Emission is canonical
//! (fixed header, edges sorted ascending), so equal graphs serialize to
//! byte-identical files and every written file reads back unchanged.

use std::io::{self, BufRead, Write};

use serde_json::{json, Map, Value};

use crate::gadgets::GadgetLabels;
use crate::graph::Graph;
use crate::ordering::{Coloring, VertexOrdering};
use crate::reductions::BetweennessInstance;
use crate::treewidth::TreeDecomposition;

/// Reader errors; syntax problems carry the 1-based line number.
#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error(transparent)]
    Content(#[from] crate::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn syntax(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        reason: reason.into(),
    }
}

fn parse_count(tok: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| syntax(line, format!("{what} is not a number: {tok:?}")))
}

/// Parses a 1-based vertex id bounded by `n`, returning it 0-based.
fn parse_vertex(tok: &str, line: usize, n: usize) -> Result<usize, ParseError> {
    let id: usize = parse_count(tok, line, "vertex id")?;
    if id == 0 || id > n {
        return Err(syntax(line, format!("vertex id {id} outside 1..={n}")));
    }
    Ok(id - 1)
}

/// Yields (1-based line number, trimmed content) for significant lines,
/// skipping blanks and `c` comment lines.
fn significant_lines<R: BufRead>(
    r: R,
) -> impl Iterator<Item = Result<(usize, String), io::Error>> {
    r.lines().enumerate().filter_map(|(i, line)| match line {
        Err(e) => Some(Err(e)),
        Ok(raw) => {
            let t = raw.trim();
            if t.is_empty() || t == "c" || t.starts_with("c ") {
                None
            } else {
                Some(Ok((i + 1, t.to_string())))
            }
        }
    })
}

/// Reads a PACE-style `.gr` file: `p tw <n> <m>` header, then exactly `m`
/// edge lines `u v`.
pub fn read_gr<R: BufRead>(r: R) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut last_line = 0;
    for item in significant_lines(r) {
        let (lineno, line) = item?;
        last_line = lineno;
        let toks: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if toks.len() != 4 || toks[0] != "p" || toks[1] != "tw" {
                    return Err(syntax(lineno, "expected header \"p tw <n> <m>\""));
                }
                let n = parse_count(toks[2], lineno, "vertex count")?;
                let m = parse_count(toks[3], lineno, "edge count")?;
                header = Some((n, m));
                edges.reserve(m);
            }
            Some((n, m)) => {
                if toks.len() != 2 {
                    return Err(syntax(lineno, format!("expected edge \"u v\", got {line:?}")));
                }
                if edges.len() == m {
                    return Err(syntax(lineno, format!("more than {m} edge lines")));
                }
                let u = parse_vertex(toks[0], lineno, n)?;
                let v = parse_vertex(toks[1], lineno, n)?;
                if u == v {
                    return Err(syntax(lineno, format!("self-loop at vertex {}", u + 1)));
                }
                let key = (u.min(v), u.max(v));
                if edges.contains(&key) {
                    return Err(syntax(
                        lineno,
                        format!("duplicate edge {} {}", key.0 + 1, key.1 + 1),
                    ));
                }
                edges.push(key);
            }
        }
    }
    let (n, m) = header.ok_or_else(|| syntax(last_line + 1, "missing \"p tw\" header"))?;
    if edges.len() != m {
        return Err(syntax(
            last_line,
            format!("header declares {m} edges, file has {}", edges.len()),
        ));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Writes the canonical `.gr` form: header, then edges ascending.
pub fn write_gr<W: Write>(mut w: W, g: &Graph) -> io::Result<()> {
    writeln!(w, "p tw {} {}", g.n(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(w, "{} {}", u + 1, v + 1)?;
    }
    Ok(())
}

pub fn gr_to_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_gr(&mut buf, g).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("gr output is ASCII")
}

/// Reads an ordering of `n` vertices: whitespace-separated 1-based ids
/// (conventionally one line; comments and line breaks are tolerated).
pub fn read_ordering<R: BufRead>(r: R, n: usize) -> Result<VertexOrdering, ParseError> {
    let mut seq = Vec::with_capacity(n);
    for item in significant_lines(r) {
        let (lineno, line) = item?;
        for tok in line.split_whitespace() {
            seq.push(parse_vertex(tok, lineno, n)?);
        }
    }
    if seq.len() != n {
        return Err(crate::Error::OrderingLengthMismatch {
            expected: n,
            got: seq.len(),
        }
        .into());
    }
    Ok(VertexOrdering::from_sequence(seq)?)
}

/// Writes the ordering as a single line of 1-based ids.
pub fn write_ordering<W: Write>(mut w: W, phi: &VertexOrdering) -> io::Result<()> {
    let line: Vec<String> = phi.sequence().iter().map(|&v| (v + 1).to_string()).collect();
    writeln!(w, "{}", line.join(" "))
}

pub fn ordering_to_string(phi: &VertexOrdering) -> String {
    let mut buf = Vec::new();
    write_ordering(&mut buf, phi).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("ordering output is ASCII")
}

/// Reads a PACE `.td` file: `s td <#bags> <width+1> <n>` header, `b <id>
/// <vertices>` bag lines (each bag exactly once), then tree edges over bag
/// ids. Returns the decomposition plus the declared vertex count.
pub fn read_td<R: BufRead>(r: R) -> Result<(TreeDecomposition, usize), ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut tree_edges: Vec<(usize, usize)> = Vec::new();
    let mut last_line = 0;
    for item in significant_lines(r) {
        let (lineno, line) = item?;
        last_line = lineno;
        let toks: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if toks.len() != 5 || toks[0] != "s" || toks[1] != "td" {
                    return Err(syntax(lineno, "expected header \"s td <#bags> <width+1> <n>\""));
                }
                let b = parse_count(toks[2], lineno, "bag count")?;
                let n = parse_count(toks[4], lineno, "vertex count")?;
                header = Some((b, n));
                bags = vec![None; b];
            }
            Some((b, n)) => {
                if toks[0] == "b" {
                    if toks.len() < 2 {
                        return Err(syntax(lineno, "bag line without id"));
                    }
                    let id = parse_count(toks[1], lineno, "bag id")?;
                    if id == 0 || id > b {
                        return Err(syntax(lineno, format!("bag id {id} outside 1..={b}")));
                    }
                    if bags[id - 1].is_some() {
                        return Err(syntax(lineno, format!("bag {id} listed twice")));
                    }
                    let mut bag = Vec::with_capacity(toks.len() - 2);
                    for tok in &toks[2..] {
                        bag.push(parse_vertex(tok, lineno, n)?);
                    }
                    bags[id - 1] = Some(bag);
                } else {
                    if toks.len() != 2 {
                        return Err(syntax(lineno, format!("expected tree edge \"i j\", got {line:?}")));
                    }
                    let x = parse_vertex(toks[0], lineno, b)?;
                    let y = parse_vertex(toks[1], lineno, b)?;
                    tree_edges.push((x, y));
                }
            }
        }
    }
    let (_, n) = header.ok_or_else(|| syntax(last_line + 1, "missing \"s td\" header"))?;
    if let Some(missing) = bags.iter().position(|bag| bag.is_none()) {
        return Err(syntax(last_line, format!("bag {} never listed", missing + 1)));
    }
    let bags: Vec<Vec<usize>> = bags.into_iter().map(|bag| bag.unwrap()).collect();
    Ok((TreeDecomposition::new(bags, tree_edges), n))
}

/// Writes the PACE `.td` form. `n` is the vertex count of the decomposed
/// graph (the decomposition itself only stores bags).
pub fn write_td<W: Write>(mut w: W, td: &TreeDecomposition, n: usize) -> io::Result<()> {
    writeln!(w, "s td {} {} {}", td.n_bags(), td.max_bag_size(), n)?;
    for (i, bag) in td.bags().iter().enumerate() {
        write!(w, "b {}", i + 1)?;
        for &v in bag {
            write!(w, " {}", v + 1)?;
        }
        writeln!(w)?;
    }
    for &(x, y) in td.tree_edges() {
        writeln!(w, "{} {}", x + 1, y + 1)?;
    }
    Ok(())
}

pub fn td_to_string(td: &TreeDecomposition, n: usize) -> String {
    let mut buf = Vec::new();
    write_td(&mut buf, td, n).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("td output is ASCII")
}

/// Reads a colouring of `n` vertices: whitespace-separated 1-based class
/// labels, one per vertex in id order (classes are 0-based in memory, like
/// every other id).
pub fn read_coloring<R: BufRead>(r: R, n: usize) -> Result<Coloring, ParseError> {
    let mut class_of = Vec::with_capacity(n);
    for item in significant_lines(r) {
        let (lineno, line) = item?;
        for tok in line.split_whitespace() {
            let c: usize = parse_count(tok, lineno, "class label")?;
            if c == 0 {
                return Err(syntax(lineno, "class labels start at 1"));
            }
            class_of.push(c - 1);
        }
    }
    if class_of.len() != n {
        return Err(crate::Error::OrderingLengthMismatch {
            expected: n,
            got: class_of.len(),
        }
        .into());
    }
    Ok(Coloring::from_classes(class_of))
}

/// Writes the colouring as a single line of 1-based class labels.
pub fn write_coloring<W: Write>(mut w: W, col: &Coloring) -> io::Result<()> {
    let line: Vec<String> = col
        .class_indices()
        .iter()
        .map(|&c| (c + 1).to_string())
        .collect();
    writeln!(w, "{}", line.join(" "))
}

pub fn coloring_to_string(col: &Coloring) -> String {
    let mut buf = Vec::new();
    write_coloring(&mut buf, col).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("colouring output is ASCII")
}

/// Reads a betweenness instance from JSON:
/// `{ "universe": n, "triples": [[a, b, c], ...] }` with 0-based elements.
pub fn read_betweenness_json<R: io::Read>(r: R) -> Result<BetweennessInstance, ParseError> {
    let inst: BetweennessInstance = serde_json::from_reader(r)
        .map_err(|e| syntax(e.line(), e.to_string()))?;
    inst.validate()?;
    Ok(inst)
}

pub fn betweenness_to_json(inst: &BetweennessInstance) -> String {
    serde_json::to_string_pretty(inst).expect("instances serialize")
}

/// Gadget label sidecar: role name ("v1", "u1,2") to 1-based vertex id.
pub fn labels_to_json(labels: &GadgetLabels) -> Value {
    let mut map = Map::new();
    for (i, &v) in labels.clique_vertices().iter().enumerate() {
        map.insert(format!("v{}", i + 1), json!(v + 1));
    }
    for (&(i, j), &v) in labels.pairs() {
        map.insert(format!("u{i},{j}"), json!(v + 1));
    }
    Value::Object(map)
}
