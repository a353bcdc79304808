//! Exact solving of the k-cop game.
//!
//! Cops are placed first, then the robber; afterwards the cops move first and
//! the sides alternate. On its turn every cop (and the robber on its turn)
//! stays put or steps to a neighbor. The cops win once the robber shares a
//! vertex with some cop.

mod fast;
mod nobacktrack;
mod play;
mod space;
mod table;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub use nobacktrack::{is_no_backtrack_winning, NO_BACKTRACK_MAX_ORDER};
pub use play::{strategy_move, trace_game, RobberPolicy, Step, StepKind, Transcript};
pub use space::{Cops, MAX_COPS};
pub use table::{SolveStats, WinTable};

/// Default ceiling on the number of game states a single solve may allocate.
pub const DEFAULT_STATE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("cop count {k} outside 1..={max}")]
    InvalidCopCount { k: usize, max: usize },
    #[error("state space of {states} states exceeds the budget of {limit}")]
    Budget { states: u64, limit: u64 },
    #[error("no k <= {k_max} cops win on this graph")]
    ExceedsKMax { k_max: usize },
    #[error("state is not winning for the cops")]
    NotCopWin,
    #[error("invalid game state")]
    InvalidState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Turn {
    Cops = 0,
    Robber = 1,
}

/// One node of the game digraph: cop multiset, robber vertex, side to move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GameState {
    pub cops: Cops,
    pub robber: usize,
    pub turn: Turn,
}

impl GameState {
    pub fn new(cops: &[usize], robber: usize, turn: Turn) -> Self {
        GameState {
            cops: Cops::new(cops),
            robber,
            turn,
        }
    }

    pub fn captured(&self) -> bool {
        self.cops.mask().contains(self.robber)
    }
}

impl fmt::Display for GameState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.turn {
            Turn::Cops => write!(f, "⟨{}* | {}⟩", self.cops, self.robber),
            Turn::Robber => write!(f, "⟨{} | {}*⟩", self.cops, self.robber),
        }
    }
}

fn check_connected(g: &Graph) -> Result<(), SolveError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(SolveError::Disconnected)
    }
}

/// Full win table for `k` cops under the default state budget.
pub fn solve_k(g: &Graph, k: usize) -> Result<WinTable, SolveError> {
    solve_k_with_budget(g, k, DEFAULT_STATE_BUDGET)
}

pub fn solve_k_with_budget(g: &Graph, k: usize, budget: u64) -> Result<WinTable, SolveError> {
    check_connected(g)?;
    let space = space::CopSpace::new(g, k, budget)?;
    Ok(WinTable::build(g, space))
}

/// Decision with the number of game states it covered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub cops_win: bool,
    pub states: u64,
}

/// Whether `k` cops have a placement that wins against every robber placement.
pub fn k_cops_win(g: &Graph, k: usize) -> Result<bool, SolveError> {
    k_cops_win_counted(g, k, DEFAULT_STATE_BUDGET).map(|v| v.cops_win)
}

pub fn k_cops_win_counted(g: &Graph, k: usize, budget: u64) -> Result<Verdict, SolveError> {
    check_connected(g)?;
    let states = space::checked_state_count(g.n(), k, budget)?;
    Ok(Verdict {
        cops_win: fast::decide(g, k),
        states,
    })
}

/// Cop number with the total number of states examined across the `k` tried.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CopNumber {
    pub value: usize,
    pub states: u64,
}

/// Smallest `k <= k_max` for which `k` cops win.
pub fn cop_number(g: &Graph, k_max: usize) -> Result<usize, SolveError> {
    cop_number_counted(g, k_max).map(|c| c.value)
}

pub fn cop_number_counted(g: &Graph, k_max: usize) -> Result<CopNumber, SolveError> {
    let mut states = 0;
    for k in 1..=k_max {
        let v = k_cops_win_counted(g, k, DEFAULT_STATE_BUDGET)?;
        states += v.states;
        if v.cops_win {
            return Ok(CopNumber { value: k, states });
        }
    }
    Err(SolveError::ExceedsKMax { k_max })
}

/// `S(R)`: the component of `G − N̄(C)` containing the robber, empty when the
/// robber is inside `N̄(C)`.
pub fn safe_neighborhood(g: &Graph, cops: &[usize], r: usize) -> VertexSet {
    let guarded = g.closed_neighborhood(cops.iter().copied().collect());
    g.component_within(g.vertices() - guarded, r)
}

/// The robber, not yet caught, sits next to a cop and every robber option is
/// inside `N̄(C)`, so the next cop move captures.
pub fn is_trapped(g: &Graph, cops: &[usize], r: usize) -> bool {
    let c: VertexSet = cops.iter().copied().collect();
    let guarded = g.closed_neighborhood(c);
    !c.contains(r) && guarded.contains(r) && g.neighbors(r).is_subset(guarded)
}
