//! Named constructions. All panic only when asked for more than 16 vertices.

use super::{Graph, MAX_ORDER};

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    assert!((1..=MAX_ORDER).contains(&n), "order {n} unsupported");
    Graph::from_edges(n, edges).expect("named construction is well formed")
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i + 5`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    build(10, outer.chain(inner).chain(spokes))
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    build(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Path `0 - 1 - .. - (n-1)`.
pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j))))
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
}
