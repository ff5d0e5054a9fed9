//! Exhaustive enumeration of all labeled graphs of a given small order.
//!
//! Every subset of the `n(n-1)/2` vertex pairs is one graph, so order 7
//! already means 2^21 graphs; larger orders must come from an external
//! enumerator stream instead.

use crate::graph::Graph;
use crate::invariants::is_connected;
use thiserror::Error;

/// Largest order the built-in enumerator will attempt.
pub const MAX_ENUMERATION_ORDER: usize = 7;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("order must be between 1 and {MAX_ENUMERATION_ORDER} for exhaustive enumeration, got {0}")]
    OrderOutOfRange(usize),
}

#[derive(Debug)]
pub struct LabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let mut edges = Vec::new();
        let mut bit = 0;
        for col in 1..self.n {
            for row in 0..col {
                if mask >> bit & 1 == 1 {
                    edges.push((row, col));
                }
                bit += 1;
            }
        }
        Some(Graph::from_edges(self.n, &edges).expect("enumerated edges are simple"))
    }
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices, in mask order.
pub fn labeled_graphs(n: usize) -> Result<LabeledGraphs, EnumerateError> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(EnumerateError::OrderOutOfRange(n));
    }
    let pairs = n * (n - 1) / 2;
    Ok(LabeledGraphs {
        n,
        next: 0,
        end: 1u64 << pairs,
    })
}

/// The connected labeled graphs on `n` vertices.
pub fn connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, EnumerateError> {
    Ok(labeled_graphs(n)?.filter(is_connected))
}
