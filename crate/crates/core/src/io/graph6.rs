//! graph6 and sparse6 encodings as published with nauty (`formats.txt`).
//!
//! Decoding is strict: every byte must lie in `63..=126`, lengths must match
//! the header exactly, and graph6 padding bits must be zero. Graphs above
//! [`MAX_VERTICES`](crate::limits::MAX_VERTICES) are rejected after the
//! header is read.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";
const SPARSE_HEADER: &str = ">>sparse6<<";

fn encode_size(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + BIAS) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 63) as u8 + BIAS) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift & 63) as u8 + BIAS) as char);
        }
    }
}

/// Returns `(n, bytes consumed)`.
fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let field = |i: usize| -> Result<usize> {
        bytes
            .get(i)
            .map(|&b| (b - BIAS) as usize)
            .ok_or_else(|| Error::parse(1, "truncated size field"))
    };
    match bytes.first() {
        None => Err(Error::parse(1, "empty input")),
        Some(b'~') if bytes.get(1) == Some(&b'~') => {
            let mut n = 0usize;
            for i in 2..8 {
                n = n << 6 | field(i)?;
            }
            if n <= 258_047 {
                return Err(Error::parse(1, "non-minimal size field"));
            }
            Ok((n, 8))
        }
        Some(b'~') => {
            let mut n = 0usize;
            for i in 1..4 {
                n = n << 6 | field(i)?;
            }
            if n <= 62 {
                return Err(Error::parse(1, "non-minimal size field"));
            }
            Ok((n, 4))
        }
        Some(&b) => Ok(((b - BIAS) as usize, 1)),
    }
}

fn check_alphabet(s: &str) -> Result<&[u8]> {
    let bytes = s.as_bytes();
    if let Some(pos) = bytes.iter().position(|&b| !(BIAS..=126).contains(&b)) {
        return Err(Error::parse(1, format!("byte {pos} outside the printable range 63..=126")));
    }
    Ok(bytes)
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + BIAS) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + BIAS) as char);
    }
    out
}

pub fn decode(line: &str) -> Result<Graph> {
    let s = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = check_alphabet(s)?;
    let (n, off) = decode_size(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = off + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::parse(
            1,
            format!("graph6 length {} does not match {} for n={n}", bytes.len(), expected),
        ));
    }
    let mut g = Graph::try_new(n)?;
    let body = &bytes[off..];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let b = body[k / 6] - BIAS;
            if b >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let last = body[k / 6] - BIAS;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(Error::parse(1, "nonzero graph6 padding bits"));
        }
    }
    Ok(g)
}

/// Bits needed to write `n - 1`.
fn sparse_width(n: usize) -> usize {
    let mut k = 0;
    while (1usize << k) < n {
        k += 1;
    }
    k
}

struct BitWriter {
    out: String,
    acc: u8,
    filled: usize,
}

impl BitWriter {
    fn push(&mut self, bit: bool) {
        self.acc = self.acc << 1 | bit as u8;
        self.filled += 1;
        if self.filled == 6 {
            self.out.push((self.acc + BIAS) as char);
            self.acc = 0;
            self.filled = 0;
        }
    }

    fn push_value(&mut self, x: usize, width: usize) {
        for shift in (0..width).rev() {
            self.push(x >> shift & 1 == 1);
        }
    }
}

pub fn encode_sparse(g: &Graph) -> String {
    let n = g.n();
    let k = sparse_width(n);
    let mut w = BitWriter { out: String::from(":"), acc: 0, filled: 0 };
    encode_size(n, &mut w.out);
    let mut current = 0usize;
    // Edges ordered by larger endpoint, then smaller.
    for v in 0..n {
        for u in g.neighbors(v).iter().filter(|&u| u <= v) {
            if v == current {
                w.push(false);
                w.push_value(u, k);
            } else if v == current + 1 {
                w.push(true);
                w.push_value(u, k);
                current = v;
            } else {
                w.push(true);
                w.push_value(v, k);
                w.push(false);
                w.push_value(u, k);
                current = v;
            }
        }
    }
    if w.filled > 0 {
        let pad = 6 - w.filled;
        if n >= 2 && k < 6 && n == 1 << k && pad > k && current == n - 2 {
            // Keep trailing ones from reading as an edge to vertex n-1.
            w.push(false);
            while w.filled != 0 {
                w.push(true);
            }
        } else {
            while w.filled != 0 {
                w.push(true);
            }
        }
    }
    w.out
}

pub fn decode_sparse(line: &str) -> Result<Graph> {
    let s = line.strip_prefix(SPARSE_HEADER).unwrap_or(line);
    let s = match s.strip_prefix(':') {
        Some(rest) => rest,
        None if s.starts_with(';') => {
            return Err(Error::parse(1, "incremental sparse6 is not supported"))
        }
        None => return Err(Error::parse(1, "sparse6 must start with ':'")),
    };
    let bytes = check_alphabet(s)?;
    let (n, off) = decode_size(bytes)?;
    let mut g = Graph::try_new(n)?;
    let k = sparse_width(n);
    let body = &bytes[off..];
    let total = body.len() * 6;
    let bit = |i: usize| (body[i / 6] - BIAS) >> (5 - i % 6) & 1 == 1;
    let mut pos = 0usize;
    let mut v = 0usize;
    while pos + 1 + k <= total {
        if bit(pos) {
            v += 1;
        }
        pos += 1;
        let mut x = 0usize;
        for _ in 0..k {
            x = x << 1 | bit(pos) as usize;
            pos += 1;
        }
        if v >= n || x >= n {
            break;
        }
        if x > v {
            v = x;
        } else if x != v {
            g.add_edge(x, v);
        } else {
            return Err(Error::parse(1, format!("sparse6 self-loop at vertex {v}")));
        }
    }
    Ok(g)
}

/// Decodes one line, choosing sparse6 when it starts with `:`.
pub fn decode_any(line: &str) -> Result<Graph> {
    let t = line.trim_end_matches(['\r', '\n']);
    if t.starts_with(':') || t.starts_with(SPARSE_HEADER) || t.starts_with(';') {
        decode_sparse(t)
    } else {
        decode(t)
    }
}
