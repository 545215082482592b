//! Plain edge lists: a header line `n <order>`, then one `u v` pair per line.
//! Blank lines and text after `#` are ignored.

use thiserror::Error;
use wrdom_core::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing `n <order>` header line")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

fn strip(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

pub fn parse(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, strip(l))).filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let syntax = |line, message: &str| EdgeListError::Syntax { line, message: message.to_string() };
    let n: usize = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count.parse().map_err(|_| syntax(header_line, "order is not a number"))?,
        _ => return Err(EdgeListError::MissingHeader),
    };
    let mut edges = Vec::new();
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(syntax(line, "expected two vertex numbers"));
        };
        let u: usize = u.parse().map_err(|_| syntax(line, "vertex is not a number"))?;
        let v: usize = v.parse().map_err(|_| syntax(line, "vertex is not a number"))?;
        Graph::from_edges(n, &[(u, v)]).map_err(|source| EdgeListError::Graph { line, source })?;
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges).map_err(|source| EdgeListError::Graph { line: header_line, source })
}

pub fn write(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
