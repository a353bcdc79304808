use std::fmt;

use serde::{Serialize, Serializer};

use super::SolveError;
use crate::graph::{Graph, VertexSet};

/// Largest supported number of cops.
pub const MAX_COPS: usize = 4;

/// Cop positions as a sorted multiset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cops {
    pos: [u8; MAX_COPS],
    k: u8,
}

impl Cops {
    /// Sorts `positions`; callers guarantee `1 <= len <= MAX_COPS`.
    pub fn new(positions: &[usize]) -> Self {
        assert!(
            (1..=MAX_COPS).contains(&positions.len()),
            "cop count {} unsupported",
            positions.len()
        );
        let mut pos = [0u8; MAX_COPS];
        for (slot, &p) in pos.iter_mut().zip(positions) {
            *slot = p as u8;
        }
        pos[..positions.len()].sort_unstable();
        Cops {
            pos,
            k: positions.len() as u8,
        }
    }

    #[inline]
    pub fn as_slice(&self) -> &[u8] {
        &self.pos[..self.k as usize]
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.as_slice().iter().map(|&c| c as usize).collect()
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k as usize
    }

    #[inline]
    pub fn mask(&self) -> VertexSet {
        self.as_slice().iter().map(|&c| c as usize).collect()
    }
}

impl fmt::Debug for Cops {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.as_slice()).finish()
    }
}

impl fmt::Display for Cops {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.as_slice().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Serialize for Cops {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.as_slice().serialize(s)
    }
}

/// All cop configurations of a graph with their one-round transitions.
///
/// Configurations are numbered in lexicographic order of their sorted tuples,
/// and each successor list is ascending, so "smallest index" and
/// "lexicographically smallest tuple" coincide.
pub(crate) struct CopSpace {
    pub n: usize,
    pub k: usize,
    pub configs: Vec<Cops>,
    pub masks: Vec<VertexSet>,
    rank: Vec<u32>,
    move_start: Vec<u32>,
    move_to: Vec<u32>,
}

fn multiset_count(n: usize, k: usize) -> u64 {
    // C(n + k - 1, k)
    (0..k as u64).fold(1u64, |acc, i| acc * (n as u64 + i) / (i + 1))
}

/// Game states for `k` cops on `n` vertices, checked against the budget.
pub(crate) fn checked_state_count(n: usize, k: usize, max_states: u64) -> Result<u64, SolveError> {
    if k == 0 || k > MAX_COPS {
        return Err(SolveError::InvalidCopCount { k, max: MAX_COPS });
    }
    let states = multiset_count(n, k) * n as u64 * 2;
    if states > max_states {
        return Err(SolveError::Budget {
            states,
            limit: max_states,
        });
    }
    Ok(states)
}

impl CopSpace {
    pub fn new(g: &Graph, k: usize, max_states: u64) -> Result<Self, SolveError> {
        let n = g.n();
        checked_state_count(n, k, max_states)?;
        let configs_needed = multiset_count(n, k);
        let mut configs = Vec::with_capacity(configs_needed as usize);
        let mut tuple = vec![0usize; k];
        loop {
            configs.push(Cops::new(&tuple));
            // next non-decreasing tuple in lexicographic order
            let Some(i) = (0..k).rev().find(|&i| tuple[i] + 1 < n) else {
                break;
            };
            let next = tuple[i] + 1;
            for slot in &mut tuple[i..] {
                *slot = next;
            }
        }
        let table = n.pow(k as u32);
        let mut rank = vec![u32::MAX; table];
        for (i, c) in configs.iter().enumerate() {
            rank[Self::key(n, c.as_slice())] = i as u32;
        }
        let masks = configs.iter().map(Cops::mask).collect();
        let mut space = CopSpace {
            n,
            k,
            configs,
            masks,
            rank,
            move_start: Vec::new(),
            move_to: Vec::new(),
        };
        space.build_moves(g);
        Ok(space)
    }

    #[inline]
    fn key(n: usize, sorted: &[u8]) -> usize {
        sorted.iter().fold(0usize, |acc, &c| acc * n + c as usize)
    }

    /// Index of a configuration given by any (unsorted) tuple.
    pub fn index_of(&self, positions: &[usize]) -> Option<usize> {
        if positions.len() != self.k || positions.iter().any(|&p| p >= self.n) {
            return None;
        }
        let c = Cops::new(positions);
        Some(self.rank[Self::key(self.n, c.as_slice())] as usize)
    }

    fn build_moves(&mut self, g: &Graph) {
        let k = self.k;
        let mut starts = Vec::with_capacity(self.configs.len() + 1);
        let mut targets = Vec::new();
        let mut scratch: Vec<u32> = Vec::new();
        let mut opts: Vec<Vec<u8>> = vec![Vec::new(); k];
        let mut idx = vec![0usize; k];
        let mut buf = [0u8; MAX_COPS];
        for c in &self.configs {
            starts.push(targets.len() as u32);
            for (o, &p) in opts.iter_mut().zip(c.as_slice()) {
                o.clear();
                o.extend(g.closed_neighbors(p as usize).iter().map(|v| v as u8));
            }
            scratch.clear();
            idx.fill(0);
            'product: loop {
                for i in 0..k {
                    buf[i] = opts[i][idx[i]];
                }
                let t = &mut buf[..k];
                t.sort_unstable();
                scratch.push(self.rank[Self::key(self.n, t)]);
                for i in (0..k).rev() {
                    idx[i] += 1;
                    if idx[i] < opts[i].len() {
                        continue 'product;
                    }
                    idx[i] = 0;
                }
                break;
            }
            scratch.sort_unstable();
            scratch.dedup();
            targets.extend_from_slice(&scratch);
        }
        starts.push(targets.len() as u32);
        self.move_start = starts;
        self.move_to = targets;
    }

    /// Configurations reachable in one cop move (each cop stays or steps to a neighbor).
    ///
    /// The relation is symmetric, so this is also the predecessor list.
    #[inline]
    pub fn moves(&self, ci: usize) -> &[u32] {
        &self.move_to[self.move_start[ci] as usize..self.move_start[ci + 1] as usize]
    }

    pub fn len(&self) -> usize {
        self.configs.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    #[test]
    fn enumerates_multisets_in_order() {
        let s = CopSpace::new(&path(3), 2, u64::MAX).unwrap();
        let tuples: Vec<Vec<usize>> = s.configs.iter().map(Cops::to_vec).collect();
        assert_eq!(
            tuples,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 1],
                vec![1, 2],
                vec![2, 2]
            ]
        );
        assert_eq!(s.index_of(&[2, 1]), Some(4));
    }

    #[test]
    fn moves_are_symmetric_and_sorted() {
        let g = cycle(5);
        let s = CopSpace::new(&g, 2, u64::MAX).unwrap();
        for a in 0..s.len() {
            let m = s.moves(a);
            assert!(m.windows(2).all(|w| w[0] < w[1]));
            assert!(m.contains(&(a as u32)));
            for &b in m {
                assert!(s.moves(b as usize).contains(&(a as u32)));
            }
        }
        // two cops on distinct vertices of C5, each with 3 options
        let i = s.index_of(&[0, 2]).unwrap();
        assert_eq!(s.moves(i).len(), 9);
    }

    #[test]
    fn budget_and_count_errors() {
        assert!(matches!(
            CopSpace::new(&path(3), 0, u64::MAX),
            Err(SolveError::InvalidCopCount { .. })
        ));
        assert!(matches!(
            CopSpace::new(&path(3), 2, 5),
            Err(SolveError::Budget {
                states: 36,
                limit: 5
            })
        ));
    }
}
