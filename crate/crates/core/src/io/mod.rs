//! Text formats: graph6/sparse6, edge lists, and PACE `.td` files.

pub mod edgelist;
pub mod graph6;
pub mod pace;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Reads one graph6 or sparse6 graph per non-blank line. Parse errors carry
/// the 1-based line number of the offending line.
pub fn read_graph_lines(text: &str) -> impl Iterator<Item = Result<Graph>> + '_ {
    text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()).map(|(i, line)| {
        graph6::decode_any(line.trim()).map_err(|e| match e {
            Error::Parse { message, .. } => Error::parse(i + 1, message),
            other => other,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_numbers_are_reported() {
        let got: Vec<_> = read_graph_lines("Dhc\n\nbad line\n").collect();
        assert_eq!(got.len(), 2);
        assert!(got[0].is_ok());
        assert!(matches!(got[1], Err(Error::Parse { line: 3, .. })));
    }
}
