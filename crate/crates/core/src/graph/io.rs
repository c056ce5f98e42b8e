use super::Graph;
use crate::error::{Error, Result};
use std::fmt::Write;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Reads lines of `text` starting at `first_line` (1-based) that carry content;
/// blank lines and `#` comments are skipped.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses the `n m` + `u v` edge-list format.
///
/// Duplicate edge lines collapse to one edge and are logged as warnings.
pub fn parse_graph(text: &str) -> Result<Graph> {
    parse_graph_lines(&mut content_lines(text))
}

pub(crate) fn parse_graph_lines<'a, I>(lines: &mut I) -> Result<Graph>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let (header_line, header) = lines.next().ok_or_else(|| parse_err(1, "missing 'n m' header"))?;
    let (n, m) = parse_pair(header_line, header)?;
    let mut g = Graph::empty(n);
    let mut last_line = header_line;
    for _ in 0..m {
        let (line, text) = lines
            .next()
            .ok_or_else(|| parse_err(last_line + 1, format!("expected {m} edge lines")))?;
        last_line = line;
        let (u, v) = parse_pair(line, text)?;
        if u >= n || v >= n {
            return Err(parse_err(line, format!("endpoint out of range: ({u},{v}) with n={n}")));
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at vertex {u}")));
        }
        if !g.add_edge(u, v) {
            log::warn!("line {line}: duplicate edge ({u},{v}) ignored");
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(parse_err(line, format!("trailing content after {m} edge lines")));
    }
    Ok(g)
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| parse_err(line, format!("missing {what}")))?;
        tok.parse::<usize>()
            .map_err(|_| parse_err(line, format!("invalid {what} '{tok}'")))
    };
    let a = next("first integer")?;
    let b = next("second integer")?;
    if let Some(extra) = it.next() {
        return Err(parse_err(line, format!("unexpected token '{extra}'")));
    }
    Ok((a, b))
}

/// Canonical text form: header then edges sorted by `(u, v)` with `u < v`.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use proptest::prelude::*;

    #[test]
    fn parses_path_and_clique() {
        assert_eq!(parse_graph("3 2\n0 1\n1 2").unwrap(), families::path(3));
        assert_eq!(
            parse_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3").unwrap(),
            families::complete(4)
        );
    }

    #[test]
    fn self_loop_names_line() {
        match parse_graph("2 1\n0 0") {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 2);
                assert!(message.contains("self-loop"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_graph("3 1\n0 5"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 2\n0 1"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_graph("3 1\n0 x"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 1\n0 1 2"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_graph("2 1\n0 1\n1 0"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn duplicates_collapse() {
        let g = parse_graph("3 3\n0 1\n1 0\n1 2").unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# seed=7\n\n3 1\n# edge\n0 2\n").unwrap();
        assert!(g.has_edge(0, 2));
    }

    proptest! {
        #[test]
        fn serialize_parse_identity(n in 1usize..12, raw in proptest::collection::vec((0usize..12, 0usize..12), 0..40)) {
            let edges: Vec<_> = raw.into_iter().map(|(a, b)| (a % n, b % n)).filter(|(a, b)| a != b).collect();
            let g = Graph::from_edges(n, edges).unwrap();
            let text = serialize_graph(&g);
            let back = parse_graph(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(serialize_graph(&back), text);
        }
    }
}
