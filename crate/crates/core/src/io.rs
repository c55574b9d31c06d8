//! Text formats for matrices, graphs and automorphisms.
//!
//! All formats are line based and UTF-8; `#` starts a comment.

use crate::equivariance::AutoElem;
use crate::error::{Error, Result};
use crate::exact::{parse_rat, Mat, Rat};
use crate::space::{Graph, LinearSpace};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// First line: labels. Remaining lines: rows of rationals (`p/q` or integers).
pub fn parse_matrix(text: &str) -> Result<LinearSpace> {
    let mut lines = content_lines(text);
    let (_, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing label line"))?;
    let labels: Vec<&str> = header.split_whitespace().collect();
    let mut rows = Vec::new();
    for (no, line) in lines {
        let row: Vec<Rat> = line
            .split_whitespace()
            .map(|tok| {
                parse_rat(tok).ok_or_else(|| parse_error(no, format!("bad rational `{tok}`")))
            })
            .collect::<Result<_>>()?;
        if row.len() != labels.len() {
            return Err(parse_error(
                no,
                format!("expected {} entries, found {}", labels.len(), row.len()),
            ));
        }
        rows.push(row);
    }
    LinearSpace::make(&labels, &Mat::from_rows(labels.len(), rows))
}

/// One edge per line: `tail head label`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut graph = Graph::new();
    for (no, line) in content_lines(text) {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [tail, head, label] = parts[..] else {
            return Err(parse_error(no, "expected `tail head label`"));
        };
        if graph.edges.iter().any(|e| e.label == label) {
            return Err(Error::DuplicateLabel(label.to_string()));
        }
        graph = graph.edge(tail, head, label);
    }
    Ok(graph)
}

/// One generator per line: `perm: (a b c)(d e); scalars: a=-1,b=1/2`.
/// Either clause may be omitted.
pub fn parse_automorphisms(text: &str, a: &LinearSpace) -> Result<Vec<AutoElem>> {
    content_lines(text)
        .map(|(no, line)| parse_generator(no, line, a))
        .collect()
}

fn parse_generator(no: usize, line: &str, a: &LinearSpace) -> Result<AutoElem> {
    let mut cycles: Vec<Vec<String>> = Vec::new();
    let mut scalars: Vec<(String, Rat)> = Vec::new();
    for clause in line.split(';').map(str::trim).filter(|c| !c.is_empty()) {
        let (key, value) = clause
            .split_once(':')
            .ok_or_else(|| parse_error(no, format!("expected `key: value` in `{clause}`")))?;
        match key.trim() {
            "perm" => cycles = parse_cycles(no, value)?,
            "scalars" => {
                for item in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    let (label, val) = item.split_once('=').ok_or_else(|| {
                        parse_error(no, format!("expected `label=value`, found `{item}`"))
                    })?;
                    let val = parse_rat(val.trim())
                        .ok_or_else(|| parse_error(no, format!("bad rational `{val}`")))?;
                    scalars.push((label.trim().to_string(), val));
                }
            }
            other => return Err(parse_error(no, format!("unknown clause `{other}`"))),
        }
    }
    AutoElem::from_cycles(a, &cycles, &scalars).map_err(|e| match e {
        Error::Parse { message, .. } => parse_error(no, message),
        other => other,
    })
}

fn parse_cycles(no: usize, text: &str) -> Result<Vec<Vec<String>>> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| parse_error(no, "cycle must start with `(`"))?;
        let end = body
            .find(')')
            .ok_or_else(|| parse_error(no, "unclosed cycle"))?;
        let cycle: Vec<String> = body[..end]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(String::from)
            .collect();
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = body[end + 1..].trim_start();
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::fixtures;
    use crate::space::GraphMode;

    #[test]
    fn matrix_roundtrip() {
        let a = parse_matrix("# U23\n1 2 3\n1 0 -1\n0 1 -1\n").unwrap();
        assert_eq!(a, fixtures::u23());
        let b = parse_matrix("x y\n1/2 3\n").unwrap();
        assert_eq!(b.rank(), 1);
        assert!(matches!(
            parse_matrix("a b\n1 2 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_matrix("a b\n1 q\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_matrix("a b\n1 1\n2 2\n"),
            Err(Error::RankDeficient { .. })
        ));
        assert!(matches!(parse_matrix(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn graph_parse() {
        let g = parse_graph("1 2 1\n2 3 2 # edge\n3 1 3\n").unwrap();
        assert_eq!(g, fixtures::triangle());
        assert_eq!(
            LinearSpace::from_graph(&g, GraphMode::Cographical).unwrap(),
            fixtures::k3()
        );
        assert!(matches!(
            parse_graph("1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("1 2 a\n2 1 a\n"),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn automorphism_parse() {
        let k3 = fixtures::k3();
        let gens = parse_automorphisms(
            "perm: (1 3); scalars: 1=-1,2=-1,3=-1\nperm: (1 2 3)\n\nscalars: 2=1\n",
            &k3,
        )
        .unwrap();
        assert_eq!(gens.len(), 3);
        assert_eq!(gens[0].perm, vec![2, 1, 0]);
        assert_eq!(gens[0].scalars, vec![rat(-1); 3]);
        assert_eq!(gens[1].perm, vec![1, 2, 0]);
        assert_eq!(gens[2], AutoElem::identity(3));
        assert!(matches!(
            parse_automorphisms("perm: (1 9)\n", &k3),
            Err(Error::UnknownLabel(_))
        ));
        assert!(matches!(
            parse_automorphisms("perm: 1 2\n", &k3),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_automorphisms("perm: (1 2)(2 3)\n", &k3),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
