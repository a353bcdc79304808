//! Isomorph-free enumeration of graphs with degree bounds.
//!
//! [`Generator`] walks the tree of canonical augmentations depth first and
//! yields every graph of the target order once, canonically labeled. Its
//! position can be saved as a token and restored later.
//!
//! Token format (hex encoded): a version byte (currently 1), the spec as four
//! bytes `n, min_degree, max_degree, connected_only`, then one little-endian
//! `u16` per open level giving the index of the next child to visit.

mod gen;
mod oracle;
mod stream;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

use gen::{children, Node};

pub use oracle::{brute_force_enumerate, BRUTE_FORCE_MAX_ORDER};
pub use stream::{read_graph6_stream, Graph6Stream, OnError, StreamError};

const TOKEN_VERSION: u8 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("order {0} outside 1..=16")]
    InvalidOrder(usize),
    #[error("degree bounds {min}..={max} invalid for order {n}")]
    InvalidDegrees { n: usize, min: usize, max: usize },
    #[error("order {n} exceeds the brute-force limit of {max}")]
    TooLargeForOracle { n: usize, max: usize },
    #[error("malformed checkpoint token")]
    BadToken,
    #[error("checkpoint token was written for a different spec")]
    TokenMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub connected_only: bool,
}

impl GenSpec {
    /// All connected graphs of order `n`.
    pub fn connected(n: usize) -> GenSpec {
        GenSpec {
            n,
            min_degree: 0,
            max_degree: n.saturating_sub(1),
            connected_only: true,
        }
    }

    pub fn with_degrees(mut self, min_degree: usize, max_degree: usize) -> GenSpec {
        self.min_degree = min_degree;
        self.max_degree = max_degree;
        self
    }

    pub fn validate(&self) -> Result<(), EnumError> {
        if self.n == 0 || self.n > MAX_ORDER {
            return Err(EnumError::InvalidOrder(self.n));
        }
        if self.min_degree > self.max_degree || self.max_degree >= self.n {
            return Err(EnumError::InvalidDegrees {
                n: self.n,
                min: self.min_degree,
                max: self.max_degree,
            });
        }
        Ok(())
    }

    fn header(&self) -> [u8; 5] {
        [
            TOKEN_VERSION,
            self.n as u8,
            self.min_degree as u8,
            self.max_degree as u8,
            u8::from(self.connected_only),
        ]
    }

    /// Whether `g` is in the class this spec describes.
    pub fn admits(&self, g: &Graph) -> bool {
        g.n() == self.n
            && (!self.connected_only || g.is_connected())
            && (0..g.n()).all(|v| (self.min_degree..=self.max_degree).contains(&g.degree(v)))
    }
}

struct Frame {
    children: Vec<Node>,
    next: usize,
}

/// Depth-first orderly generator; an iterator over canonical graphs.
pub struct Generator {
    spec: GenSpec,
    stack: Vec<Frame>,
    emitted: u64,
}

/// Starts a fresh enumeration.
pub fn generate(spec: GenSpec) -> Result<Generator, EnumError> {
    Generator::new(spec)
}

impl Generator {
    pub fn new(spec: GenSpec) -> Result<Generator, EnumError> {
        spec.validate()?;
        let first = if spec.n == 1 {
            let root = Node::root();
            if spec.admits(&root.graph) {
                vec![root]
            } else {
                Vec::new()
            }
        } else {
            children(&spec, &Node::root())
        };
        Ok(Generator {
            spec,
            stack: vec![Frame {
                children: first,
                next: 0,
            }],
            emitted: 0,
        })
    }

    /// Continues an enumeration from a token produced by [`Generator::token`].
    pub fn resume(spec: GenSpec, token: &str) -> Result<Generator, EnumError> {
        let bytes = hex::decode(token.trim()).map_err(|_| EnumError::BadToken)?;
        if bytes.len() < 5 || (bytes.len() - 5) % 2 != 0 {
            return Err(EnumError::BadToken);
        }
        if bytes[0] != TOKEN_VERSION {
            return Err(EnumError::BadToken);
        }
        if bytes[..5] != spec.header() {
            return Err(EnumError::TokenMismatch);
        }
        let positions: Vec<usize> = bytes[5..]
            .chunks(2)
            .map(|c| u16::from_le_bytes([c[0], c[1]]) as usize)
            .collect();
        let mut g = Generator::new(spec)?;
        let mut frame = g.stack.pop().expect("root frame");
        for (depth, &next) in positions.iter().enumerate() {
            if next > frame.children.len() {
                return Err(EnumError::BadToken);
            }
            frame.next = next;
            if depth + 1 == positions.len() {
                g.stack.push(frame);
                break;
            }
            let expanded = next.checked_sub(1).ok_or(EnumError::BadToken)?;
            let node = &frame.children[expanded];
            if node.graph.n() == spec.n {
                return Err(EnumError::BadToken);
            }
            let kids = children(&spec, node);
            g.stack.push(frame);
            frame = Frame {
                children: kids,
                next: 0,
            };
        }
        Ok(g)
    }

    pub fn spec(&self) -> &GenSpec {
        &self.spec
    }

    /// Graphs yielded so far by this generator object.
    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    /// Opaque resume point: resuming yields exactly the graphs this generator
    /// has not yet yielded.
    pub fn token(&self) -> String {
        let mut bytes = self.spec.header().to_vec();
        for f in &self.stack {
            bytes.extend_from_slice(&(f.next as u16).to_le_bytes());
        }
        hex::encode(bytes)
    }
}

impl Iterator for Generator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            let top = self.stack.last_mut()?;
            if top.next == top.children.len() {
                self.stack.pop();
                continue;
            }
            let node = &top.children[top.next];
            top.next += 1;
            if node.graph.n() == self.spec.n {
                self.emitted += 1;
                return Some(node.graph);
            }
            let kids = children(&self.spec, node);
            self.stack.push(Frame {
                children: kids,
                next: 0,
            });
        }
    }
}
