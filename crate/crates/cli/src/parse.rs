//! Edge-list and hyperedge-list readers.
//!
//! Both formats are line oriented. `#` starts a comment that runs to the end
//! of the line; blank lines are ignored. Integer labels are mapped to a dense
//! range `0..n` in order of first appearance.

use std::collections::HashMap;

use lapchi::graph::Graph;
use lapchi::hypergraph::LinearHypergraph;

use crate::CliError;

/// A parsed file together with the original label of each dense vertex.
#[derive(Debug, Clone)]
pub struct Parsed<T> {
    pub value: T,
    pub labels: Vec<u64>,
}

#[derive(Default)]
struct Labels {
    dense: HashMap<u64, usize>,
    original: Vec<u64>,
}

impl Labels {
    fn intern(&mut self, label: u64) -> usize {
        *self.dense.entry(label).or_insert_with(|| {
            self.original.push(label);
            self.original.len() - 1
        })
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn label(token: &str, line: usize) -> Result<u64, CliError> {
    token.parse().map_err(|_| CliError::Parse {
        line,
        message: format!("vertex label {token:?} is not a nonnegative integer"),
    })
}

/// Lines `u v [w]`; the weight defaults to 1.
pub fn parse_graph(text: &str) -> Result<Parsed<Graph>, CliError> {
    let mut labels = Labels::default();
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut edges = Vec::new();
    for (line, tokens) in content_lines(text) {
        if !(2..=3).contains(&tokens.len()) {
            return Err(CliError::Parse {
                line,
                message: format!("expected \"u v [w]\", found {} fields", tokens.len()),
            });
        }
        let (lu, lv) = (label(tokens[0], line)?, label(tokens[1], line)?);
        let w = match tokens.get(2) {
            None => 1.0,
            Some(t) => match t.parse::<f64>() {
                Ok(w) if w.is_finite() => w,
                _ => {
                    return Err(CliError::Parse {
                        line,
                        message: format!("weight {t:?} is not a finite number"),
                    })
                }
            },
        };
        let at_line = |source| CliError::AtLine { line, source };
        if lu == lv {
            return Err(at_line(lapchi::Error::LoopEdge(lu as usize)));
        }
        if w <= 0.0 {
            return Err(at_line(lapchi::Error::NonpositiveWeight {
                u: lu as usize,
                v: lv as usize,
                w,
            }));
        }
        let (u, v) = (labels.intern(lu), labels.intern(lv));
        let key = (u.min(v), u.max(v));
        if seen.insert(key, line).is_some() {
            return Err(at_line(lapchi::Error::DuplicateEdge(
                lu as usize,
                lv as usize,
            )));
        }
        edges.push((u, v, w));
    }
    if edges.is_empty() {
        return Err(CliError::Lapchi(lapchi::Error::NoEdges));
    }
    let graph = Graph::new(labels.original.len(), &edges)?;
    Ok(Parsed {
        value: graph,
        labels: labels.original,
    })
}

/// One hyperedge per line; the uniformity is taken from the first line.
pub fn parse_hypergraph(text: &str) -> Result<Parsed<LinearHypergraph>, CliError> {
    let mut labels = Labels::default();
    let mut hyperedges = Vec::new();
    for (line, tokens) in content_lines(text) {
        let edge = tokens
            .iter()
            .map(|t| label(t, line).map(|l| labels.intern(l)))
            .collect::<Result<Vec<_>, _>>()?;
        hyperedges.push(edge);
    }
    let Some(m) = hyperedges.first().map(Vec::len) else {
        return Err(CliError::Lapchi(lapchi::Error::NoEdges));
    };
    let h = LinearHypergraph::new(labels.original.len(), m, hyperedges)?;
    Ok(Parsed {
        value: h,
        labels: labels.original,
    })
}
