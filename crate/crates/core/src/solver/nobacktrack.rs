use super::SolveError;
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`is_no_backtrack_winning`].
pub const NO_BACKTRACK_MAX_ORDER: usize = 12;

/// Whether one cop placed at `start` can force capture without ever moving
/// onto a vertex it has already occupied.
///
/// The cop may stay put; the robber is placed after the cop and the cop moves
/// first. States are `(cop, visited, robber, side to move)`. Moves only enlarge
/// the visited set, so sets are processed from largest to smallest and only the
/// "stay" transitions need an inner fixed point.
pub fn is_no_backtrack_winning(g: &Graph, start: usize) -> Result<bool, SolveError> {
    let n = g.n();
    if n > NO_BACKTRACK_MAX_ORDER {
        let states = (n as u64) * (1u64 << n) * (n as u64) * 2;
        return Err(SolveError::Budget {
            states,
            limit: (NO_BACKTRACK_MAX_ORDER as u64)
                * (1u64 << NO_BACKTRACK_MAX_ORDER)
                * (NO_BACKTRACK_MAX_ORDER as u64)
                * 2,
        });
    }
    if start >= n {
        return Err(SolveError::InvalidState);
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    let full = g.vertices();
    let closed: Vec<VertexSet> = (0..n).map(|v| g.closed_neighbors(v)).collect();
    // robber-to-move win masks indexed by (visited, cop)
    let mut robber_turn = vec![VertexSet::EMPTY; (1usize << n) * n];
    let mut cop_turn_at_root = VertexSet::EMPTY;
    let mut order: Vec<u16> = (1..(1u32 << n)).map(|s| s as u16).collect();
    order.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
    for visited in order {
        let vis = VertexSet(visited);
        if !vis.contains(start) {
            continue;
        }
        for c in vis {
            let mut base = VertexSet::singleton(c);
            for w in g.neighbors(c) - vis {
                base |= robber_turn[(visited as usize | 1 << w) * n + w];
            }
            // stay transitions: iterate cop/robber masks for this (visited, c)
            let mut rob = VertexSet::singleton(c);
            let mut cop;
            loop {
                cop = base | rob;
                let mut next = VertexSet::singleton(c);
                for r in full {
                    if closed[r].is_subset(cop) {
                        next.insert(r);
                    }
                }
                if next == rob {
                    break;
                }
                rob = next;
            }
            robber_turn[visited as usize * n + c] = rob;
            if visited == 1 << start && c == start {
                cop_turn_at_root = cop;
            }
        }
    }
    Ok(cop_turn_at_root == full)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, petersen, star};

    #[test]
    fn every_tree_vertex_wins() {
        for g in [path(5), star(4), path(1)] {
            for v in 0..g.n() {
                assert_eq!(is_no_backtrack_winning(&g, v), Ok(true), "{g:?} from {v}");
            }
        }
        let spider =
            Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        for v in 0..7 {
            assert_eq!(is_no_backtrack_winning(&spider, v), Ok(true));
        }
    }

    #[test]
    fn cycles_lose() {
        assert_eq!(is_no_backtrack_winning(&cycle(4), 0), Ok(false));
        assert_eq!(is_no_backtrack_winning(&cycle(5), 2), Ok(false));
    }

    #[test]
    fn cliques_win() {
        assert_eq!(is_no_backtrack_winning(&complete(4), 1), Ok(true));
    }

    #[test]
    fn size_and_connectivity_errors() {
        let big = crate::graph::cycle(13);
        assert!(matches!(
            is_no_backtrack_winning(&big, 0),
            Err(SolveError::Budget { .. })
        ));
        let two = Graph::empty(2).unwrap();
        assert_eq!(
            is_no_backtrack_winning(&two, 0),
            Err(SolveError::Disconnected)
        );
        assert!(matches!(is_no_backtrack_winning(&petersen(), 0), Ok(false)));
    }
}
