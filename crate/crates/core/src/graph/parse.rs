use super::Graph;
use crate::error::{Error, Result};

/// Reads the edge-list format: a header `n m`, then `m` lines `u v`.
///
/// Text after `#` is ignored and blank lines are skipped. Edges may be
/// written in either orientation; [`Graph::to_edge_list`] always emits
/// `u < v`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header `n m`".into(),
    })?;
    let [n, m] = two_numbers(hline, header)?;
    let mut g = Graph::new(n);
    let mut seen = 0;
    for (line, body) in lines {
        if seen == m {
            return Err(Error::Parse {
                line,
                message: format!("more than the declared {m} edges"),
            });
        }
        let [u, v] = two_numbers(line, body)?;
        g.add_edge(u, v).map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
        seen += 1;
    }
    if seen < m {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            message: format!("expected {m} edges, found {seen}"),
        });
    }
    Ok(g)
}

fn two_numbers(line: usize, body: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = body.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line,
            message: format!("expected two integers, found `{body}`"),
        });
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f.parse().map_err(|_| Error::Parse {
            line,
            message: format!("not a non-negative integer: `{f}`"),
        })?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_path_and_star() {
        assert_eq!(parse_graph("3 2\n0 1\n1 2").unwrap(), Graph::path(3));
        assert_eq!(parse_graph("4 3\n0 1\n0 2\n0 3").unwrap(), Graph::star(4));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a path\n3 2 # header\n\n0 1\n# middle\n1 2\n";
        assert_eq!(parse_graph(text).unwrap(), Graph::path(3));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_graph("2 2\n0 1\n0 1").unwrap_err();
        match err {
            Error::Parse { line, message } => {
                assert_eq!(line, 3);
                assert!(message.contains("duplicate"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_graph("3 1\n1 1"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 1\n0 3"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 1\n0 x"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 1\n0 1 2"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
        assert!(parse_graph("3 2\n0 1").is_err());
        assert!(matches!(parse_graph("3 1\n0 1\n1 2"), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn round_trip() {
        for g in [Graph::sun(5), Graph::star4_sum(3), Graph::new(4), Graph::complete(5)] {
            let text = g.to_edge_list();
            let back = parse_graph(&text).unwrap();
            assert_eq!(back, g);
            assert_eq!(back.to_edge_list(), text);
        }
    }
}
