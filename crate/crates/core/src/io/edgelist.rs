//! Plain edge lists: one `u v` pair per line, 0-indexed. Blank lines and
//! lines starting with `#` are ignored. An optional `n <count>` line before
//! the first edge fixes the vertex count; otherwise it is one more than the
//! largest endpoint.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::MAX_VERTICES;

pub fn parse(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "n" {
            if declared.is_some() || !edges.is_empty() {
                return Err(Error::parse(line_no, "`n` must appear once, before any edge"));
            }
            let [_, count] = fields[..] else {
                return Err(Error::parse(line_no, "expected `n <count>`"));
            };
            declared = Some(number(count, line_no)?);
            continue;
        }
        let [u, v] = fields[..] else {
            return Err(Error::parse(line_no, "expected two vertex numbers"));
        };
        let (u, v) = (number(u, line_no)?, number(v, line_no)?);
        if u == v {
            return Err(Error::parse(line_no, format!("self-loop at vertex {u}")));
        }
        edges.push((line_no, u, v));
    }
    let implied = edges.iter().map(|&(_, u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = declared.unwrap_or(implied);
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { what: "edge list", n, cap: MAX_VERTICES });
    }
    let mut g = Graph::new(n);
    for (line_no, u, v) in edges {
        if u.max(v) >= n {
            return Err(Error::parse(line_no, format!("vertex {} out of range for n={n}", u.max(v))));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

fn number(s: &str, line: usize) -> Result<usize> {
    s.parse().map_err(|_| Error::parse(line, format!("`{s}` is not a vertex number")))
}

pub fn write(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_and_without_header() {
        let g = parse("# a path\n0 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3));
        let g = parse("n 5\n0 1\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 1));
        assert_eq!(parse(&write(&Graph::cycle(6))).unwrap(), Graph::cycle(6));
        assert_eq!(parse("").unwrap().n(), 0);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(matches!(parse("0 1\n2 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("0 x"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("n 2\n0 3"), Err(Error::Parse { line: 2, .. })));
        assert!(parse("0 1\nn 3").is_err());
        assert!(parse("0 1 2").is_err());
        assert!(matches!(parse("0 70"), Err(Error::TooLarge { .. })));
    }
}
