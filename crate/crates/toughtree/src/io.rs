//! Bit-exact graph6 codec, a small edge-list text format, and streaming
//! ingestion of either.
//!
//! graph6 records have the form `N(n) ++ R(bits)`: a single header byte
//! `n + 63` for `0 <= n <= 62`, followed by the upper triangle of the
//! adjacency matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ..`,
//! padded with zero bits to a multiple of 6; each 6-bit group `b` is emitted
//! as the byte `b + 63`. Only the 1-byte header is supported here; the 4- and
//! 8-byte extended headers (leading `~`) are rejected with a clear error.
//!
//! The edge-list format is line oriented: a header line `n m`, then `m`
//! lines `u v` with 0-based endpoints. Blank lines and lines starting with
//! `#` are ignored; in a stream, a blank line (or end of input) terminates a
//! record.

use crate::graph::{Graph, GraphError};
use std::io::BufRead;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty record")]
    EmptyRecord,
    #[error("byte offset 0: extended (>62 vertex) graph6 headers are not supported")]
    ExtendedHeader,
    #[error("byte offset 0: order-0 graph6 record (graphs here have at least one vertex)")]
    ZeroOrder,
    #[error("byte offset {offset}: byte {byte:#04x} outside the graph6 range [63, 126]")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("record truncated: expected {expected} bytes for the header plus bit body, got {actual}")]
    Truncated { expected: usize, actual: usize },
    #[error("trailing bytes: expected {expected} bytes, got {actual}")]
    TrailingBytes { expected: usize, actual: usize },
    #[error("byte offset {offset}: nonzero padding bit")]
    NonzeroPadding { offset: usize },
    #[error("order {0} exceeds 62, the largest encodable with a 1-byte graph6 header")]
    OrderTooLarge(usize),
}

/// Number of body bytes for a graph6 record of order `n`.
fn graph6_body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Decodes a single graph6 record (no trailing newline).
pub fn parse_graph6(record: &str) -> Result<Graph, Graph6Error> {
    let bytes = record.as_bytes();
    let header = *bytes.first().ok_or(Graph6Error::EmptyRecord)?;
    if header == 126 {
        return Err(Graph6Error::ExtendedHeader);
    }
    if !(63..=125).contains(&header) {
        return Err(Graph6Error::InvalidByte {
            offset: 0,
            byte: header,
        });
    }
    let n = (header - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }
    let expected = 1 + graph6_body_len(n);
    if bytes.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            actual: bytes.len(),
        });
    }
    if bytes.len() > expected {
        return Err(Graph6Error::TrailingBytes {
            expected,
            actual: bytes.len(),
        });
    }
    for (i, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { offset: i, byte: b });
        }
    }
    let bit = |k: usize| -> bool {
        let byte = bytes[1 + k / 6] - 63;
        byte >> (5 - k % 6) & 1 == 1
    };
    let mut edges = Vec::new();
    let mut k = 0;
    for col in 1..n {
        for row in 0..col {
            if bit(k) {
                edges.push((row, col));
            }
            k += 1;
        }
    }
    for pad in k..graph6_body_len(n) * 6 {
        if bit(pad) {
            return Err(Graph6Error::NonzeroPadding {
                offset: 1 + pad / 6,
            });
        }
    }
    // Range, loops and duplicates are impossible by construction.
    Ok(Graph::from_edges(n, &edges).expect("decoded edges are simple"))
}

/// Encodes a graph of order at most 62 as a graph6 record.
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > 62 {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + graph6_body_len(n));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | u8::from(g.has_edge(row, col));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: expected header `n m`")]
    BadHeader { line: u64 },
    #[error("line {line}: expected edge `u v`")]
    BadEdge { line: u64 },
    #[error("line {line}: {source}")]
    Graph {
        line: u64,
        source: GraphError,
    },
    #[error("expected {expected} edge lines, found {found}")]
    MissingEdges { expected: usize, found: usize },
    #[error("line {line}: unexpected content after the final edge")]
    TrailingContent { line: u64 },
}

fn content_lines(text: &str) -> impl Iterator<Item = (u64, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i as u64 + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses one edge-list record. Line numbers in errors are 1-based within
/// `text`.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(EdgeListError::BadHeader { line: 1 })?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or(EdgeListError::BadHeader { line: hline })?;
    let m: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or(EdgeListError::BadHeader { line: hline })?;
    if parts.next().is_some() {
        return Err(EdgeListError::BadHeader { line: hline });
    }
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for _ in 0..m {
        let (line, text) = lines.next().ok_or(EdgeListError::MissingEdges {
            expected: m,
            found: edges.len(),
        })?;
        last_line = line;
        let mut parts = text.split_whitespace();
        let u: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or(EdgeListError::BadEdge { line })?;
        let v: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or(EdgeListError::BadEdge { line })?;
        if parts.next().is_some() {
            return Err(EdgeListError::BadEdge { line });
        }
        edges.push((u, v));
    }
    if let Some((line, _)) = lines.next() {
        return Err(EdgeListError::TrailingContent { line });
    }
    Graph::from_edges(n, &edges).map_err(|source| EdgeListError::Graph {
        line: last_line,
        source,
    })
}

/// Writes the edge-list form of a graph, edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let edges: Vec<_> = g.edges().collect();
    out.push_str(&format!("{} {}\n", g.order(), edges.len()));
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StreamFormat {
    Graph6,
    EdgeList,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StreamMode {
    /// The first malformed record ends the stream.
    Strict,
    /// Malformed records are reported and the stream continues.
    Lenient,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RecordError {
    #[error("{0}")]
    Graph6(#[from] Graph6Error),
    #[error("{0}")]
    EdgeList(#[from] EdgeListError),
}

/// One record of a graph stream. Indices count records (malformed records
/// consume an index); `line` is the 1-based input line the record starts on.
#[derive(Debug)]
pub struct StreamRecord {
    pub index: u64,
    pub line: u64,
    pub result: Result<Graph, RecordError>,
}

/// Sequential reader yielding graphs in input order. Individual records are
/// pure to parse; fan the yielded graphs out to parallel workers downstream.
pub struct GraphStream<R> {
    reader: R,
    format: StreamFormat,
    mode: StreamMode,
    index: u64,
    line: u64,
    started: bool,
    done: bool,
}

/// Optional stream header emitted by some graph6 producers.
const GRAPH6_STREAM_HEADER: &str = ">>graph6<<";

pub fn read_stream<R: BufRead>(reader: R, format: StreamFormat, mode: StreamMode) -> GraphStream<R> {
    GraphStream {
        reader,
        format,
        mode,
        index: 0,
        line: 0,
        started: false,
        done: false,
    }
}

impl<R: BufRead> GraphStream<R> {
    fn next_line(&mut self) -> std::io::Result<Option<String>> {
        let mut buf = String::new();
        let read = self.reader.read_line(&mut buf)?;
        if read == 0 {
            return Ok(None);
        }
        self.line += 1;
        while buf.ends_with('\n') || buf.ends_with('\r') {
            buf.pop();
        }
        Ok(Some(buf))
    }

    fn emit(&mut self, line: u64, result: Result<Graph, RecordError>) -> StreamRecord {
        if result.is_err() && self.mode == StreamMode::Strict {
            self.done = true;
        }
        let record = StreamRecord {
            index: self.index,
            line,
            result,
        };
        self.index += 1;
        record
    }

    fn next_graph6(&mut self) -> std::io::Result<Option<StreamRecord>> {
        loop {
            let Some(mut line) = self.next_line()? else {
                return Ok(None);
            };
            if !self.started {
                self.started = true;
                if let Some(rest) = line.strip_prefix(GRAPH6_STREAM_HEADER) {
                    line = rest.to_string();
                }
            }
            if line.is_empty() {
                continue;
            }
            let at = self.line;
            let result = parse_graph6(&line).map_err(RecordError::from);
            return Ok(Some(self.emit(at, result)));
        }
    }

    fn next_edge_list(&mut self) -> std::io::Result<Option<StreamRecord>> {
        // A record is a block of lines up to a blank line or end of input.
        let mut block = String::new();
        let mut start = 0;
        while let Some(line) = self.next_line()? {
            if line.trim().is_empty() {
                if block.trim().is_empty() {
                    block.clear();
                    continue;
                }
                break;
            }
            if block.is_empty() {
                start = self.line;
            }
            block.push_str(&line);
            block.push('\n');
        }
        if block.trim().is_empty() {
            return Ok(None);
        }
        let result = parse_edge_list(&block).map_err(RecordError::from);
        Ok(Some(self.emit(start, result)))
    }
}

impl<R: BufRead> Iterator for GraphStream<R> {
    type Item = std::io::Result<StreamRecord>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let next = match self.format {
            StreamFormat::Graph6 => self.next_graph6(),
            StreamFormat::EdgeList => self.next_edge_list(),
        };
        match next {
            Ok(Some(record)) => Some(Ok(record)),
            Ok(None) => None,
            Err(e) => {
                self.done = true;
                Some(Err(e))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::edge_count;

    #[test]
    fn parse_known_records() {
        let g = parse_graph6("A?").unwrap();
        assert_eq!((g.order(), edge_count(&g)), (2, 0));

        let g = parse_graph6("A_").unwrap();
        assert_eq!((g.order(), edge_count(&g)), (2, 1));

        let g = parse_graph6("Bw").unwrap();
        assert!(g.is_complete());
        assert_eq!(g.order(), 3);

        // K_4 is the all-ones body byte.
        let g = parse_graph6("C~").unwrap();
        assert!(g.is_complete());
        assert_eq!(g.order(), 4);
    }

    #[test]
    fn write_known_records() {
        assert_eq!(write_graph6(&Graph::complete(2).unwrap()).unwrap(), "A_");
        assert_eq!(write_graph6(&Graph::empty(2).unwrap()).unwrap(), "A?");
        assert_eq!(write_graph6(&Graph::complete(3).unwrap()).unwrap(), "Bw");
        assert_eq!(
            write_graph6(&Graph::complete(63).unwrap()).unwrap_err(),
            Graph6Error::OrderTooLarge(63)
        );
    }

    #[test]
    fn parse_rejections_carry_offsets() {
        assert_eq!(parse_graph6("").unwrap_err(), Graph6Error::EmptyRecord);
        assert_eq!(parse_graph6("~??").unwrap_err(), Graph6Error::ExtendedHeader);
        assert_eq!(parse_graph6("?").unwrap_err(), Graph6Error::ZeroOrder);
        assert_eq!(
            parse_graph6("B").unwrap_err(),
            Graph6Error::Truncated {
                expected: 2,
                actual: 1
            }
        );
        assert_eq!(
            parse_graph6("A_x").unwrap_err(),
            Graph6Error::TrailingBytes {
                expected: 2,
                actual: 3
            }
        );
        assert_eq!(
            parse_graph6("B:").unwrap_err(),
            Graph6Error::InvalidByte {
                offset: 1,
                byte: b':'
            }
        );
        // n = 2 uses only the top bit of the body byte; '@' = 63 + 0b000001.
        assert_eq!(
            parse_graph6("A@").unwrap_err(),
            Graph6Error::NonzeroPadding { offset: 1 }
        );
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        let h = parse_edge_list(&text).unwrap();
        assert_eq!(g, h);

        assert_eq!(
            parse_edge_list("4\n").unwrap_err(),
            EdgeListError::BadHeader { line: 1 }
        );
        assert_eq!(
            parse_edge_list("2 1\n0 0\n").unwrap_err(),
            EdgeListError::Graph {
                line: 2,
                source: GraphError::SelfLoop(0)
            }
        );
        assert_eq!(
            parse_edge_list("3 2\n0 1\n1 0\n").unwrap_err(),
            EdgeListError::Graph {
                line: 3,
                source: GraphError::DuplicateEdge(0, 1)
            }
        );
        assert_eq!(
            parse_edge_list("3 2\n0 1\n").unwrap_err(),
            EdgeListError::MissingEdges {
                expected: 2,
                found: 1
            }
        );
    }

    #[test]
    fn graph6_stream_in_order() {
        let input = "A_\nBw\n";
        let records: Vec<_> = read_stream(input.as_bytes(), StreamFormat::Graph6, StreamMode::Strict)
            .map(|r| r.unwrap())
            .collect();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].index, 0);
        assert_eq!(records[0].result.as_ref().unwrap().order(), 2);
        assert_eq!(records[1].index, 1);
        assert!(records[1].result.as_ref().unwrap().is_complete());
    }

    #[test]
    fn stream_skips_header_and_blank_lines() {
        let input = ">>graph6<<A_\n\nBw\n";
        let records: Vec<_> = read_stream(input.as_bytes(), StreamFormat::Graph6, StreamMode::Strict)
            .map(|r| r.unwrap())
            .collect();
        assert_eq!(records.len(), 2);
    }

    #[test]
    fn empty_stream() {
        let records: Vec<_> = read_stream("".as_bytes(), StreamFormat::Graph6, StreamMode::Strict)
            .map(|r| r.unwrap())
            .collect();
        assert!(records.is_empty());
    }

    #[test]
    fn lenient_stream_reports_and_continues() {
        let input = "A_\nB!\nBw\n";
        let records: Vec<_> = read_stream(input.as_bytes(), StreamFormat::Graph6, StreamMode::Lenient)
            .map(|r| r.unwrap())
            .collect();
        assert_eq!(records.len(), 3);
        assert!(records[0].result.is_ok());
        assert!(records[1].result.is_err());
        assert_eq!(records[1].line, 2);
        assert!(records[2].result.is_ok());
    }

    #[test]
    fn strict_stream_aborts() {
        let input = "A_\nB!\nBw\n";
        let records: Vec<_> = read_stream(input.as_bytes(), StreamFormat::Graph6, StreamMode::Strict)
            .map(|r| r.unwrap())
            .collect();
        assert_eq!(records.len(), 2);
        assert!(records[1].result.is_err());
    }

    #[test]
    fn edge_list_stream_blocks() {
        let input = "2 1\n0 1\n\n3 0\n";
        let records: Vec<_> = read_stream(input.as_bytes(), StreamFormat::EdgeList, StreamMode::Strict)
            .map(|r| r.unwrap())
            .collect();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].result.as_ref().unwrap().order(), 2);
        assert_eq!(records[1].result.as_ref().unwrap().order(), 3);
    }
}
