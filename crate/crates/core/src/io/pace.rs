//! PACE 2017 `.td` files.
//!
//! ```text
//! c optional comment
//! s td <#bags> <max bag size> <#vertices>
//! b <bag id> <vertex> <vertex> ...
//! <bag id> <bag id>
//! ```
//!
//! Bag ids and vertices are 1-based on disk and 0-based in memory. Lines
//! starting with `c` or `#` are comments. The writer emits bags in id
//! order with ascending vertices, then tree edges in stored order, so
//! `write(parse(write(td))) == write(td)` byte for byte.

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::limits::MAX_VERTICES;
use crate::oracles::TreeDecomposition;

pub fn write(td: &TreeDecomposition) -> String {
    let max_bag = td.bags.iter().map(|b| b.len()).max().unwrap_or(0);
    let mut out = format!("s td {} {} {}\n", td.bags.len(), max_bag, td.n);
    for (i, bag) in td.bags.iter().enumerate() {
        out.push_str(&format!("b {}", i + 1));
        for v in bag.iter() {
            out.push_str(&format!(" {}", v + 1));
        }
        out.push('\n');
    }
    for &(a, b) in &td.edges {
        out.push_str(&format!("{} {}\n", a + 1, b + 1));
    }
    out
}

pub fn parse(text: &str) -> Result<TreeDecomposition> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<VertexSet>> = Vec::new();
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "s" => {
                if header.is_some() {
                    return Err(Error::parse(line_no, "duplicate `s` line"));
                }
                let ["s", "td", nb, mb, n] = fields[..] else {
                    return Err(Error::parse(line_no, "expected `s td <bags> <max bag> <vertices>`"));
                };
                let (nb, mb, n) = (num(nb, line_no)?, num(mb, line_no)?, num(n, line_no)?);
                if n > MAX_VERTICES {
                    return Err(Error::TooLarge { what: "tree decomposition", n, cap: MAX_VERTICES });
                }
                if nb > 1 << 16 {
                    return Err(Error::parse(line_no, format!("{nb} bags is more than supported")));
                }
                header = Some((nb, mb, n));
                bags = vec![None; nb];
            }
            "b" => {
                let (nb, _, n) = header.ok_or_else(|| Error::parse(line_no, "bag before `s` line"))?;
                let id = fields.get(1).ok_or_else(|| Error::parse(line_no, "missing bag id"))?;
                let id = num(id, line_no)?;
                if id == 0 || id > nb {
                    return Err(Error::parse(line_no, format!("bag id {id} outside 1..={nb}")));
                }
                if bags[id - 1].is_some() {
                    return Err(Error::parse(line_no, format!("bag {id} listed twice")));
                }
                let mut bag = VertexSet::EMPTY;
                for f in &fields[2..] {
                    let v = num(f, line_no)?;
                    if v == 0 || v > n {
                        return Err(Error::parse(line_no, format!("vertex {v} outside 1..={n}")));
                    }
                    if bag.contains(v - 1) {
                        return Err(Error::parse(line_no, format!("vertex {v} repeated in bag {id}")));
                    }
                    bag.insert(v - 1);
                }
                bags[id - 1] = Some(bag);
            }
            _ => {
                let (nb, _, _) = header.ok_or_else(|| Error::parse(line_no, "edge before `s` line"))?;
                let [a, b] = fields[..] else {
                    return Err(Error::parse(line_no, "expected a tree edge `<bag> <bag>`"));
                };
                let (a, b) = (num(a, line_no)?, num(b, line_no)?);
                for x in [a, b] {
                    if x == 0 || x > nb {
                        return Err(Error::parse(line_no, format!("bag id {x} outside 1..={nb}")));
                    }
                }
                edges.push((a - 1, b - 1));
            }
        }
    }
    let (_, max_bag, n) = header.ok_or_else(|| Error::parse(1, "missing `s td` line"))?;
    let bags: Vec<VertexSet> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| Error::parse(0, format!("bag {} is never listed", i + 1))))
        .collect::<Result<_>>()?;
    let actual = bags.iter().map(|b| b.len()).max().unwrap_or(0);
    if actual != max_bag {
        return Err(Error::parse(0, format!("header declares max bag size {max_bag}, bags have {actual}")));
    }
    Ok(TreeDecomposition { n, bags, edges })
}

fn num(s: &str, line: usize) -> Result<usize> {
    s.parse().map_err(|_| Error::parse(line, format!("`{s}` is not a non-negative integer")))
}
