use std::io::{BufRead, Write};

use super::Graph;
use crate::error::{Error, Result};

/// Writes `v m` followed by the sorted edge list, one `u v` per line.
pub fn write_graph<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    let mut buf = std::io::BufWriter::new(&mut out);
    writeln!(buf, "{} {}", g.n_vertices(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(buf, "{u} {v}")?;
    }
    buf.flush()
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let err = |msg: &str| Error::Parse {
        line: lineno,
        msg: msg.to_string(),
    };
    let mut it = line.split_whitespace();
    let a = it.next().ok_or_else(|| err("expected two integers"))?;
    let b = it.next().ok_or_else(|| err("expected two integers"))?;
    if it.next().is_some() {
        return Err(err("trailing tokens"));
    }
    let a = a.parse().map_err(|_| err("not a nonnegative integer"))?;
    let b = b.parse().map_err(|_| err("not a nonnegative integer"))?;
    Ok((a, b))
}

/// Reads the format produced by [`write_graph`]. Edges must be strictly
/// increasing pairs `u < v` and the count must match the header.
pub fn read_graph<R: BufRead>(input: R) -> Result<Graph> {
    let mut lines = input.lines().enumerate().map(|(i, l)| {
        l.map(|s| (i + 1, s)).map_err(|e| Error::Parse {
            line: i + 1,
            msg: e.to_string(),
        })
    });
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty input".into(),
    })??;
    let (n, m) = parse_pair(&header, 1)?;
    let mut g = Graph::new(n);
    let mut prev: Option<(usize, usize)> = None;
    let mut count = 0usize;
    for item in lines {
        let (lineno, line) = item?;
        if line.trim().is_empty() {
            continue;
        }
        let (u, v) = parse_pair(&line, lineno)?;
        let fail = |msg: String| Error::Parse { line: lineno, msg };
        if u >= v {
            return Err(fail(format!("edge {u} {v} not of the form u < v")));
        }
        if v >= n {
            return Err(fail(format!("vertex {v} out of range")));
        }
        if prev.is_some_and(|p| p >= (u, v)) {
            return Err(fail("edges not sorted or duplicated".into()));
        }
        prev = Some((u, v));
        g.add_edge(u, v);
        count += 1;
    }
    if count != m {
        return Err(Error::Parse {
            line: 1,
            msg: format!("header declares {m} edges, found {count}"),
        });
    }
    Ok(g)
}
