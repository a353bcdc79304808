//! Orderly generation by canonical vertex deletion.
//!
//! A graph on `m + 1` vertices is produced from its parent on `m` vertices by
//! adding vertex `m` adjacent to a set `S`. The child is kept only if the new
//! vertex lies in the automorphism orbit of the child's designated deletion
//! vertex: among vertices whose removal keeps the graph connected (all vertices
//! when disconnected graphs are wanted), the one of minimum degree, then
//! maximum multiset of neighbor degrees, then smallest canonical position.
//! Sets `S` in the same orbit of the parent's automorphism group give
//! isomorphic children, so only the smallest set of each orbit is tried.

use crate::canon::{canonical_labeling, Perm};
use crate::graph::{to_graph6, Graph, VertexSet};

use super::GenSpec;

/// A generated graph in canonical labeling, with generators of its
/// automorphism group when it still has to be extended.
#[derive(Clone)]
pub(super) struct Node {
    pub graph: Graph,
    pub gens: Vec<Perm>,
}

impl Node {
    pub fn root() -> Node {
        Node {
            graph: Graph::empty(1).expect("order 1 is valid"),
            gens: Vec::new(),
        }
    }
}

/// Smallest member of each subset orbit under the group generated by `gens`.
fn subset_orbit_minima(m: usize, gens: &[Perm]) -> Vec<u16> {
    let size = 1usize << m;
    let mut parent: Vec<u16> = (0..size as u32).map(|s| s as u16).collect();
    fn find(parent: &mut [u16], mut x: u16) -> u16 {
        while parent[x as usize] != x {
            let up = parent[parent[x as usize] as usize];
            parent[x as usize] = up;
            x = up;
        }
        x
    }
    for g in gens {
        for s in 0..size {
            let image = VertexSet(s as u16).map(g).bits();
            let a = find(&mut parent, s as u16);
            let b = find(&mut parent, image);
            if a != b {
                parent[a.max(b) as usize] = a.min(b);
            }
        }
    }
    for s in 0..size {
        let r = find(&mut parent, s as u16);
        parent[s] = r;
    }
    parent
}

#[inline]
fn degree_key(degrees: &[usize], set: VertexSet) -> u64 {
    set.iter().map(|x| 1u64 << (4 * degrees[x])).sum()
}

/// Canonical children of `parent`, sorted by graph6 encoding.
pub(super) fn children(spec: &GenSpec, parent: &Node) -> Vec<Node> {
    let p = &parent.graph;
    let m = p.n();
    let order = m + 1;
    let remaining = spec.n - order;
    let final_level = remaining == 0;
    let deg: Vec<usize> = (0..m).map(|w| p.degree(w)).collect();

    let allowed: VertexSet = (0..m).filter(|&w| deg[w] < spec.max_degree).collect();
    // vertices that reach the minimum degree only if they gain this neighbor
    let needy: VertexSet = (0..m)
        .filter(|&w| deg[w] + remaining < spec.min_degree)
        .collect();
    if !needy.is_subset(allowed) {
        return Vec::new();
    }
    let min_size = needy
        .len()
        .max(spec.min_degree.saturating_sub(remaining))
        .max(usize::from(spec.connected_only));
    let max_size = spec.max_degree.min(m);

    // vertices of the parent whose removal keeps it connected, and the
    // components left behind by removing each vertex
    let (removable, split): (VertexSet, Vec<Vec<VertexSet>>) = if spec.connected_only {
        let split: Vec<Vec<VertexSet>> = (0..m)
            .map(|w| p.components_within(p.vertices().without(w)))
            .collect();
        let removable = (0..m).filter(|&w| split[w].len() <= 1).collect();
        (removable, split)
    } else {
        (p.vertices(), Vec::new())
    };
    let low = removable.iter().map(|w| deg[w]).min().unwrap_or(usize::MAX);
    let reps = (!parent.gens.is_empty()).then(|| subset_orbit_minima(m, &parent.gens));

    let mut out: Vec<(String, Node)> = Vec::new();
    let free = allowed - needy;
    let mut sub = free.bits();
    loop {
        let s = VertexSet(sub) | needy;
        let k = s.len();
        let fits = k >= min_size && k <= max_size && (k <= 1 || k <= low + 1);
        let is_rep = reps
            .as_ref()
            .is_none_or(|r| r[s.bits() as usize] == s.bits());
        if fits && is_rep {
            if let Some(node) = try_child(spec, p, &deg, s, &split, final_level) {
                out.push((to_graph6(&node.graph), node));
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & free.bits();
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, node)| node).collect()
}

fn try_child(
    spec: &GenSpec,
    p: &Graph,
    deg: &[usize],
    s: VertexSet,
    split: &[Vec<VertexSet>],
    final_level: bool,
) -> Option<Node> {
    let m = p.n();
    let k = s.len();
    let mut dc = [0usize; 16];
    for w in 0..m {
        dc[w] = deg[w] + usize::from(s.contains(w));
    }
    dc[m] = k;
    let key_new = degree_key(&dc, s);
    let mut ties = VertexSet::singleton(m);
    for w in 0..m {
        if dc[w] > k {
            continue;
        }
        if spec.connected_only && !split[w].iter().all(|c| c.intersects(s)) {
            continue;
        }
        if dc[w] < k {
            return None;
        }
        let mut key = degree_key(&dc, p.neighbors(w));
        if s.contains(w) {
            key += 1u64 << (4 * k);
        }
        if key > key_new {
            return None;
        }
        if key == key_new {
            ties.insert(w);
        }
    }
    let child = p.extend_unchecked(s);
    let lab = canonical_labeling(&child);
    if ties.len() > 1 {
        let pos = lab.position();
        let chosen = ties
            .iter()
            .min_by_key(|&w| pos[w])
            .expect("ties is nonempty");
        let orbit = lab.orbits();
        if orbit[chosen] != orbit[m] {
            return None;
        }
    }
    let gens = if final_level {
        Vec::new()
    } else {
        lab.canonical_generators()
    };
    Some(Node {
        graph: lab.canonical,
        gens,
    })
}
