use std::collections::VecDeque;

use serde::Serialize;

use super::space::{CopSpace, Cops};
use super::{GameState, Turn};
use crate::graph::Graph;

const UNRESOLVED: u16 = u16::MAX;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub states: u64,
    pub queue_pops: u64,
}

/// Cop-win flags and capture distances for every state of the k-cop game.
///
/// A state is winning for the cops when they can force capture; its distance
/// counts cop moves until capture under optimal play on both sides.
pub struct WinTable {
    graph: Graph,
    space: CopSpace,
    dist: Vec<u16>,
    stats: SolveStats,
}

#[inline]
fn state_index(n: usize, ci: usize, r: usize, turn: Turn) -> usize {
    (ci * n + r) * 2 + turn as usize
}

impl WinTable {
    /// Backward induction from the capture states.
    ///
    /// Each robber-to-move state keeps a countdown of robber options not yet
    /// known to lose; it becomes winning for the cops when the count reaches
    /// zero. States are processed in non-decreasing distance order (a 0-1
    /// breadth-first queue), so the first labeling of a cop-to-move state is its
    /// minimum and the last decrement of a robber-to-move state its maximum.
    pub(crate) fn build(g: &Graph, space: CopSpace) -> WinTable {
        let n = g.n();
        let total = space.len() * n * 2;
        let mut dist = vec![UNRESOLVED; total];
        let mut escapes = vec![0u8; space.len() * n];
        let mut queue = VecDeque::new();
        for ci in 0..space.len() {
            for r in 0..n {
                escapes[ci * n + r] = g.closed_neighbors(r).len() as u8;
            }
            for r in space.masks[ci] {
                for turn in [Turn::Cops, Turn::Robber] {
                    let s = state_index(n, ci, r, turn);
                    dist[s] = 0;
                    queue.push_back(s);
                }
            }
        }
        let mut pops = 0u64;
        while let Some(s) = queue.pop_front() {
            pops += 1;
            let d = dist[s];
            let ci = s / (2 * n);
            let r = s / 2 % n;
            if s % 2 == Turn::Cops as usize {
                // robber stepped (or stayed) onto r from some r0 in N̄(r)
                for r0 in g.closed_neighbors(r) {
                    let p = state_index(n, ci, r0, Turn::Robber);
                    if dist[p] != UNRESOLVED {
                        continue;
                    }
                    let e = &mut escapes[ci * n + r0];
                    *e -= 1;
                    if *e == 0 {
                        dist[p] = d;
                        queue.push_front(p);
                    }
                }
            } else {
                for &cj in space.moves(ci) {
                    let p = state_index(n, cj as usize, r, Turn::Cops);
                    if dist[p] == UNRESOLVED {
                        dist[p] = d + 1;
                        queue.push_back(p);
                    }
                }
            }
        }
        let stats = SolveStats {
            states: total as u64,
            queue_pops: pops,
        };
        WinTable {
            graph: *g,
            space,
            dist,
            stats,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.space.k
    }

    pub fn stats(&self) -> SolveStats {
        self.stats
    }

    /// All cop configurations, lexicographically ordered.
    pub fn configurations(&self) -> &[Cops] {
        &self.space.configs
    }

    fn index(&self, s: &GameState) -> Option<usize> {
        let n = self.graph.n();
        if s.robber >= n {
            return None;
        }
        let ci = self.space.index_of(&s.cops.to_vec())?;
        Some(state_index(n, ci, s.robber, s.turn))
    }

    pub(crate) fn dist_at(&self, ci: usize, r: usize, turn: Turn) -> Option<u32> {
        let d = self.dist[state_index(self.graph.n(), ci, r, turn)];
        (d != UNRESOLVED).then_some(d as u32)
    }

    pub(crate) fn space(&self) -> &CopSpace {
        &self.space
    }

    /// Capture distance of a cop-win state; `None` for robber-win or invalid states.
    pub fn dist(&self, s: &GameState) -> Option<u32> {
        let i = self.index(s)?;
        let d = self.dist[i];
        (d != UNRESOLVED).then_some(d as u32)
    }

    pub fn is_win(&self, s: &GameState) -> bool {
        self.dist(s).is_some()
    }

    /// Cop placements from which every robber placement loses, ascending.
    pub fn winning_placements(&self) -> Vec<Cops> {
        let n = self.graph.n();
        (0..self.space.len())
            .filter(|&ci| (0..n).all(|r| self.dist_at(ci, r, Turn::Cops).is_some()))
            .map(|ci| self.space.configs[ci])
            .collect()
    }

    /// Some placement of k cops wins against every robber placement.
    pub fn cops_win(&self) -> bool {
        let n = self.graph.n();
        (0..self.space.len()).any(|ci| (0..n).all(|r| self.dist_at(ci, r, Turn::Cops).is_some()))
    }

    /// Every state of the game in index order.
    pub fn states(&self) -> impl Iterator<Item = GameState> + '_ {
        let n = self.graph.n();
        self.space.configs.iter().flat_map(move |&cops| {
            (0..n).flat_map(move |robber| {
                [Turn::Cops, Turn::Robber].map(|turn| GameState { cops, robber, turn })
            })
        })
    }

    /// Successor states of `s`; for cop turns in ascending configuration order.
    pub fn successors(&self, s: &GameState) -> Vec<GameState> {
        let Some(ci) = self.space.index_of(&s.cops.to_vec()) else {
            return Vec::new();
        };
        match s.turn {
            Turn::Cops => self
                .space
                .moves(ci)
                .iter()
                .map(|&cj| GameState {
                    cops: self.space.configs[cj as usize],
                    robber: s.robber,
                    turn: Turn::Robber,
                })
                .collect(),
            Turn::Robber => self
                .graph
                .closed_neighbors(s.robber)
                .iter()
                .map(|r| GameState {
                    cops: s.cops,
                    robber: r,
                    turn: Turn::Cops,
                })
                .collect(),
        }
    }
}
