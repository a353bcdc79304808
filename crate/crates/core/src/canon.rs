//! Canonical labeling by colour refinement and individualization.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, pick the first smallest non-singleton cell, and branch on
//! each of its vertices. Every discrete leaf yields a relabeled graph; the
//! canonical graph is the largest leaf graph in the whole tree. Two leaves with
//! the same graph give an automorphism, which is used to skip children that lie
//! in an already explored orbit and to abandon subtrees equivalent to explored
//! ones. Both prunings only remove leaves whose graphs also occur elsewhere, so
//! the maximum is unchanged.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{parse_graph6, to_graph6, Graph, VertexSet, MAX_ORDER};

/// A vertex map on `0..16`; entry `v` is the image of `v`.
pub type Perm = [u8; MAX_ORDER];

pub fn identity() -> Perm {
    std::array::from_fn(|i| i as u8)
}

/// graph6 bytes of the canonically relabeled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    pub fn to_graph(&self) -> Graph {
        parse_graph6(&self.0).expect("canonical form is valid graph6")
    }

    /// Wraps the encoding of a graph that is already canonically labeled.
    pub(crate) fn of_canonical(g: &Graph) -> Self {
        CanonicalForm(to_graph6(g))
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Output of the canonical labeling search.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `order[i]` is the input vertex placed at canonical position `i`.
    pub order: Perm,
    /// The input graph relabeled so that `order[i]` becomes `i`.
    pub canonical: Graph,
    /// Automorphisms of the input graph found during the search; they generate
    /// the full automorphism group.
    pub generators: Vec<Perm>,
}

impl Labeling {
    /// `position()[v]` is the canonical position of input vertex `v`.
    pub fn position(&self) -> Perm {
        let mut pos = [0u8; MAX_ORDER];
        for (i, &v) in self.order[..self.canonical.n()].iter().enumerate() {
            pos[v as usize] = i as u8;
        }
        pos
    }

    /// For each vertex, the smallest vertex of its automorphism orbit.
    pub fn orbits(&self) -> [u8; MAX_ORDER] {
        orbits(self.canonical.n(), &self.generators)
    }

    /// Generators conjugated onto the canonical labels.
    pub fn canonical_generators(&self) -> Vec<Perm> {
        let n = self.canonical.n();
        let pos = self.position();
        self.generators
            .iter()
            .map(|gamma| {
                let mut out = identity();
                for i in 0..n {
                    out[i] = pos[gamma[self.order[i] as usize] as usize];
                }
                out
            })
            .collect()
    }

    pub fn form(&self) -> CanonicalForm {
        CanonicalForm::of_canonical(&self.canonical)
    }
}

/// Orbit representatives (smallest member) of the group generated by `gens`.
pub fn orbits(n: usize, gens: &[Perm]) -> [u8; MAX_ORDER] {
    let mut parent: [u8; MAX_ORDER] = identity();
    fn find(parent: &mut [u8; MAX_ORDER], mut x: u8) -> u8 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    for g in gens {
        for (v, &image) in g.iter().enumerate().take(n) {
            let a = find(&mut parent, v as u8);
            let b = find(&mut parent, image);
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi as usize] = lo;
            }
        }
    }
    let mut out = [0u8; MAX_ORDER];
    for (v, slot) in out.iter_mut().enumerate().take(n) {
        *slot = find(&mut parent, v as u8);
    }
    out
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    canonical_labeling_with(g, &[g.vertices()])
}

/// Canonical labeling of a vertex-coloured graph.
///
/// `cells` is an ordered partition of the vertices; isomorphisms must map the
/// `i`-th cell onto the `i`-th cell.
pub fn canonical_labeling_with(g: &Graph, cells: &[VertexSet]) -> Labeling {
    let n = g.n();
    let mut start = Partition::default();
    for c in cells.iter().filter(|c| !c.is_empty()) {
        start.push(c.bits());
    }
    debug_assert_eq!(
        start.cells[..start.len].iter().fold(0u16, |a, c| a | c),
        g.vertices().bits()
    );
    start.refine(g);
    let mut search = Search {
        g,
        n,
        first: None,
        best: None,
        gens: Vec::new(),
        path: [0; MAX_ORDER],
    };
    search.descend(&start, 0);
    let best = search.best.expect("search reaches at least one leaf");
    Labeling {
        order: best.order,
        canonical: best.graph,
        generators: search.gens,
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form()
}

/// Ordered partition; each cell is a vertex mask.
#[derive(Clone, Copy, Default)]
struct Partition {
    cells: [u16; MAX_ORDER],
    len: usize,
}

impl Partition {
    #[inline]
    fn push(&mut self, cell: u16) {
        self.cells[self.len] = cell;
        self.len += 1;
    }

    /// Splits cells by neighbor counts into every cell until stable.
    fn refine(&mut self, g: &Graph) {
        let rows = g.rows();
        loop {
            let old = *self;
            self.len = 0;
            let mut changed = false;
            let mut items = [(0u64, 0u8); MAX_ORDER];
            for &cell in &old.cells[..old.len] {
                if cell & (cell - 1) == 0 {
                    self.push(cell);
                    continue;
                }
                let mut m = 0;
                let mut bits = cell;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let row = rows[v].bits();
                    let mut sig = 0u64;
                    for (j, &c) in old.cells[..old.len].iter().enumerate() {
                        sig |= ((row & c).count_ones() as u64) << (4 * j);
                    }
                    items[m] = (sig, v as u8);
                    m += 1;
                }
                let items = &mut items[..m];
                items.sort_unstable();
                let mut cur = 1u16 << items[0].1;
                for w in 1..m {
                    if items[w].0 != items[w - 1].0 {
                        self.push(cur);
                        cur = 0;
                        changed = true;
                    }
                    cur |= 1 << items[w].1;
                }
                self.push(cur);
            }
            if !changed {
                return;
            }
        }
    }

    /// Index of the first smallest non-singleton cell.
    fn target(&self) -> Option<usize> {
        let mut best: Option<(u32, usize)> = None;
        for (i, &c) in self.cells[..self.len].iter().enumerate() {
            let size = c.count_ones();
            if size > 1 && best.is_none_or(|(s, _)| size < s) {
                best = Some((size, i));
            }
        }
        best.map(|(_, i)| i)
    }

    fn individualize(&self, at: usize, v: usize) -> Partition {
        let mut out = Partition::default();
        out.cells[..at].copy_from_slice(&self.cells[..at]);
        out.cells[at] = 1 << v;
        out.cells[at + 1] = self.cells[at] & !(1 << v);
        out.cells[at + 2..self.len + 1].copy_from_slice(&self.cells[at + 1..self.len]);
        out.len = self.len + 1;
        out
    }
}

#[derive(Clone, Copy)]
struct Leaf {
    order: Perm,
    graph: Graph,
    path: [u8; MAX_ORDER],
    depth: usize,
}

struct Search<'g> {
    g: &'g Graph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Perm>,
    path: [u8; MAX_ORDER],
}

impl Search<'_> {
    /// Explores the subtree below `p`. Returns `Some(level)` when an
    /// automorphism shows that everything below the node at `level` that has
    /// not been explored yet is redundant.
    fn descend(&mut self, p: &Partition, depth: usize) -> Option<usize> {
        let Some(at) = p.target() else {
            return self.leaf(p, depth);
        };
        let cell = p.cells[at];
        let mut explored = 0u16;
        let mut closure = 0u16;
        let mut seen_gens = usize::MAX;
        let mut bits = cell;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if explored != 0 {
                if seen_gens != self.gens.len() {
                    closure = self.orbit_closure(explored, depth);
                    seen_gens = self.gens.len();
                }
                if closure >> v & 1 == 1 {
                    continue;
                }
            }
            explored |= 1 << v;
            closure |= 1 << v;
            let child = {
                let mut c = p.individualize(at, v);
                c.refine(self.g);
                c
            };
            self.path[depth] = v as u8;
            if let Some(level) = self.descend(&child, depth + 1) {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, p: &Partition, depth: usize) -> Option<usize> {
        let n = self.n;
        let mut order = identity();
        let mut pos = [0u8; MAX_ORDER];
        for (i, (cell, slot)) in p.cells[..n].iter().zip(&mut order).enumerate() {
            let v = cell.trailing_zeros() as u8;
            *slot = v;
            pos[v as usize] = i as u8;
        }
        let mut rows = [VertexSet::EMPTY; MAX_ORDER];
        for i in 0..n {
            rows[i] = self.g.neighbors(order[i] as usize).map(&pos);
        }
        let graph = Graph::from_rows(n, &rows);
        let leaf = Leaf {
            order,
            graph,
            path: self.path,
            depth,
        };
        let Some(first) = &self.first else {
            self.best = Some(leaf);
            self.first = Some(leaf);
            return None;
        };
        if first.graph == graph {
            let gamma = automorphism(&first.order, &order, n);
            let level = common_prefix(&first.path, first.depth, &self.path, depth);
            self.gens.push(gamma);
            return Some(level);
        }
        let best = self.best.as_ref().expect("best set with first");
        match graph.cmp(&best.graph) {
            std::cmp::Ordering::Equal => {
                let gamma = automorphism(&best.order, &order, n);
                let level = common_prefix(&best.path, best.depth, &self.path, depth);
                self.gens.push(gamma);
                Some(level)
            }
            std::cmp::Ordering::Greater => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Less => None,
        }
    }

    /// Closure of `set` under the stored generators that fix the current path pointwise.
    fn orbit_closure(&self, set: u16, depth: usize) -> u16 {
        let path = &self.path[..depth];
        let fixing: Vec<&Perm> = self
            .gens
            .iter()
            .filter(|g| path.iter().all(|&v| g[v as usize] == v))
            .collect();
        let mut cur = set;
        loop {
            let mut next = cur;
            for g in &fixing {
                next |= VertexSet(cur).map(&g[..]).bits();
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }
}

/// The map sending `from[i]` to `to[i]` for every position `i`.
fn automorphism(from: &Perm, to: &Perm, n: usize) -> Perm {
    let mut gamma = identity();
    for i in 0..n {
        gamma[from[i] as usize] = to[i];
    }
    gamma
}

fn common_prefix(a: &[u8; MAX_ORDER], alen: usize, b: &[u8; MAX_ORDER], blen: usize) -> usize {
    let len = alen.min(blen);
    (0..len).find(|&i| a[i] != b[i]).unwrap_or(len)
}
