//! Plain-text edge lists: one edge per line, two whitespace-separated labels,
//! `#` starts a comment. Extra columns (e.g. weights) are ignored.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut edges = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let body = match line.find('#') {
            Some(p) => &line[..p],
            None => &line[..],
        };
        let mut tokens = body.split_whitespace();
        match (tokens.next(), tokens.next()) {
            (None, _) => continue,
            (Some(a), Some(b)) => edges.push((a.to_string(), b.to_string())),
            (Some(_), None) => {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("expected two vertex labels, found {:?}", body.trim()),
                })
            }
        }
    }
    Ok(Graph::from_labeled_edges(&edges))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    read_edge_list(text.as_bytes())
}

pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", g.label(u), g.label(v))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_blanks_and_extra_columns() {
        let g = parse_edge_list("# header\n\n1 2\n2 3 0.5 # weighted\n  3\t1\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
    }

    #[test]
    fn zero_based_labels_kept() {
        let g = parse_edge_list("0 1\n1 2\n").unwrap();
        assert_eq!(g.labels(), &["0", "1", "2"]);
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let err = parse_edge_list("1 2\n# ok\n7\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn empty_input_is_empty_graph() {
        let g = parse_edge_list("# nothing\n").unwrap();
        assert_eq!((g.n(), g.m()), (0, 0));
    }

    #[test]
    fn write_then_read_reproduces_graph() {
        let g = parse_edge_list("a b\nb c\nc a\nc d\nd d\nb a\n").unwrap();
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        assert_eq!(read_edge_list(&buf[..]).unwrap(), g);
    }
}
