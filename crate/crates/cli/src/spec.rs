//! The family-spec mini-language used on the command line; see [`GRAMMAR`].

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;
use wrdom_core::enumerate::graphs_up_to_isomorphism;
use wrdom_core::{FamilySpec, Graph, GraphError};

use crate::random;

/// The spec grammar, shown in `--help`.
pub const GRAMMAR: &str = "\
spec    = family | op | random | corpus
family  = (\"path\" | \"cycle\" | \"complete\" | \"star\" | \"empty\" | \"hypercube\") \":\" int
        | \"hamming\" \":\" int \",\" int
op      = (\"prod\" | \"join\" | \"union\") \":\" spec \",\" spec
        | \"corona\" \":\" spec \",\" int
        | \"complement\" \":\" spec
random  = \"random-tree\" \":\" int
        | \"gnp\" \":\" int \",\" float
corpus  = (\"all\" | \"connected\") \":\" int

star:N is K_{1,N-1}; hamming:k,t is the k-th Cartesian power of K_t;
corona:G,t hangs t new leaves on every vertex of G; a corpus lists every
graph of that order up to isomorphism (N <= 8). Operands of prod, join,
union, corona and complement must denote a single graph.
Examples: path:7  prod:complete:3,star:5  corona:path:3,2  join:complete:3,empty:2";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("spec position {position}: {message}")]
pub struct SpecError {
    /// Byte offset into the spec string.
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Node {
    Family(FamilySpec),
    Product(Box<Node>, usize, Box<Node>, usize),
    Join(Box<Node>, usize, Box<Node>, usize),
    Union(Box<Node>, usize, Box<Node>, usize),
    Corona(Box<Node>, usize, usize),
    Complement(Box<Node>, usize),
    RandomTree(usize),
    Gnp(usize, f64),
    Corpus { n: usize, connected: bool },
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error<T>(&self, position: usize, message: impl Into<String>) -> Result<T, SpecError> {
        Err(SpecError { position, message: message.into() })
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn expect(&mut self, c: char) -> Result<(), SpecError> {
        if self.rest().starts_with(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(self.pos, format!("expected `{c}`"))
        }
    }

    fn name(&mut self) -> &'a str {
        let len = self.rest().find(|c: char| !(c.is_ascii_alphanumeric() || c == '-')).unwrap_or(self.rest().len());
        let s = &self.rest()[..len];
        self.pos += len;
        s
    }

    fn token(&mut self) -> (usize, &'a str) {
        let start = self.pos;
        let len = self.rest().find([',', ':']).unwrap_or(self.rest().len());
        self.pos += len;
        (start, &self.text[start..start + len])
    }

    fn int(&mut self) -> Result<usize, SpecError> {
        let (at, tok) = self.token();
        tok.parse().or_else(|_| self.error(at, format!("expected a non-negative integer, found `{tok}`")))
    }

    fn float(&mut self) -> Result<f64, SpecError> {
        let (at, tok) = self.token();
        match tok.parse::<f64>() {
            Ok(p) if (0.0..=1.0).contains(&p) => Ok(p),
            _ => self.error(at, format!("expected a probability in [0, 1], found `{tok}`")),
        }
    }

    fn spec(&mut self) -> Result<Node, SpecError> {
        let start = self.pos;
        let name = self.name();
        self.expect(':')?;
        Ok(match name {
            "path" => Node::Family(FamilySpec::Path(self.int()?)),
            "cycle" => Node::Family(FamilySpec::Cycle(self.int()?)),
            "complete" => Node::Family(FamilySpec::Complete(self.int()?)),
            "star" => Node::Family(FamilySpec::Star(self.int()?)),
            "empty" => Node::Family(FamilySpec::Empty(self.int()?)),
            "hypercube" => Node::Family(FamilySpec::Hypercube(self.int()?)),
            "hamming" => {
                let k = self.int()?;
                self.expect(',')?;
                Node::Family(FamilySpec::Hamming(k, self.int()?))
            }
            "prod" | "join" | "union" => {
                let (a_at, a) = (self.pos, self.spec()?);
                self.expect(',')?;
                let (b_at, b) = (self.pos, self.spec()?);
                let (a, b) = (Box::new(a), Box::new(b));
                match name {
                    "prod" => Node::Product(a, a_at, b, b_at),
                    "join" => Node::Join(a, a_at, b, b_at),
                    _ => Node::Union(a, a_at, b, b_at),
                }
            }
            "corona" => {
                let (at, g) = (self.pos, self.spec()?);
                self.expect(',')?;
                Node::Corona(Box::new(g), at, self.int()?)
            }
            "complement" => {
                let at = self.pos;
                Node::Complement(Box::new(self.spec()?), at)
            }
            "random-tree" => Node::RandomTree(self.int()?),
            "gnp" => {
                let n = self.int()?;
                self.expect(',')?;
                Node::Gnp(n, self.float()?)
            }
            "all" | "connected" => Node::Corpus { n: self.int()?, connected: name == "connected" },
            _ => return self.error(start, format!("unknown family `{name}`")),
        })
    }
}

struct Eval {
    rng: ChaCha8Rng,
}

impl Eval {
    fn many(&mut self, node: &Node, at: usize) -> Result<Vec<Graph>, SpecError> {
        let graph_err = |e: GraphError| SpecError { position: at, message: e.to_string() };
        Ok(match node {
            Node::Family(f) => vec![Graph::generate(*f).map_err(graph_err)?],
            Node::Product(a, a_at, b, b_at) => {
                let (a, b) = (self.one(a, *a_at)?, self.one(b, *b_at)?);
                vec![a.cartesian_product(&b).map_err(graph_err)?]
            }
            Node::Join(a, a_at, b, b_at) => {
                let (a, b) = (self.one(a, *a_at)?, self.one(b, *b_at)?);
                vec![a.join(&b).map_err(graph_err)?]
            }
            Node::Union(a, a_at, b, b_at) => {
                let (a, b) = (self.one(a, *a_at)?, self.one(b, *b_at)?);
                vec![a.disjoint_union(&b).map_err(graph_err)?]
            }
            Node::Corona(g, g_at, t) => vec![self.one(g, *g_at)?.corona(*t).map_err(graph_err)?],
            Node::Complement(g, g_at) => vec![self.one(g, *g_at)?.complement()],
            Node::RandomTree(n) => {
                Graph::empty(*n).map_err(graph_err)?;
                vec![random::tree(*n, &mut self.rng)]
            }
            Node::Gnp(n, p) => {
                Graph::empty(*n).map_err(graph_err)?;
                vec![random::gnp(*n, *p, &mut self.rng)]
            }
            Node::Corpus { n, connected } => graphs_up_to_isomorphism(*n, *connected).map_err(graph_err)?,
        })
    }

    fn one(&mut self, node: &Node, at: usize) -> Result<Graph, SpecError> {
        let mut gs = self.many(node, at)?;
        if gs.len() != 1 {
            return Err(SpecError { position: at, message: "operand must denote a single graph".into() });
        }
        Ok(gs.pop().expect("length checked"))
    }
}

/// Parses and evaluates a spec; random parts draw from a generator seeded with `seed`.
pub fn evaluate(text: &str, seed: u64) -> Result<Vec<Graph>, SpecError> {
    let mut p = Parser { text, pos: 0 };
    let node = p.spec()?;
    if p.pos != text.len() {
        return p.error(p.pos, "unexpected trailing input");
    }
    Eval { rng: ChaCha8Rng::seed_from_u64(seed) }.many(&node, 0)
}
