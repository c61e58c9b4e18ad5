//! The plain edge-list file format.
//!
//! Line 1 is `n m`; the next m lines are `u v` with 1 <= u < v <= n.
//! Anything after a `#` is a comment. Duplicate edges, self-loops and
//! endpoints out of order are rejected rather than repaired.

use crate::{Error, Graph, Result};

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty());

    let (line_no, header) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        msg: "empty input".into(),
    })?;
    let mut it = header.split_whitespace();
    let n: usize = parse_field(it.next(), line_no, "vertex count")?;
    let m: usize = parse_field(it.next(), line_no, "edge count")?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line: line_no,
            msg: "header must be exactly 'n m'".into(),
        });
    }

    let last_line = text.lines().count();
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines.next().ok_or_else(|| Error::Parse {
            line: last_line,
            msg: format!("expected {m} edge lines, found {}", edges.len()),
        })?;
        let mut it = line.split_whitespace();
        let u: usize = parse_field(it.next(), line_no, "edge endpoint")?;
        let v: usize = parse_field(it.next(), line_no, "edge endpoint")?;
        if it.next().is_some() {
            return Err(Error::Parse {
                line: line_no,
                msg: "edge line must be exactly 'u v'".into(),
            });
        }
        if u >= v {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("edge endpoints must satisfy u < v, got {u} {v}"),
            });
        }
        edges.push((u, v));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::Parse {
            line: line_no,
            msg: "trailing content after last edge".into(),
        });
    }
    Graph::new(n, &edges)
}

pub fn write(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_field(field: Option<&str>, line: usize, what: &str) -> Result<usize> {
    field
        .ok_or_else(|| Error::Parse {
            line,
            msg: format!("missing {what}"),
        })?
        .parse()
        .map_err(|_| Error::Parse {
            line,
            msg: format!("invalid {what}"),
        })
}
