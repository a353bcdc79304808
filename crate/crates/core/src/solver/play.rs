use std::fmt;

use serde::Serialize;

use super::space::Cops;
use super::table::WinTable;
use super::{solve_k, GameState, SolveError, Turn};
use crate::graph::Graph;

/// Optimal cop move from a cop-win, cop-to-move state: the successor
/// configuration with the smallest capture distance, ties broken by the
/// lexicographically smallest tuple.
pub fn strategy_move(table: &WinTable, s: &GameState) -> Result<Cops, SolveError> {
    if s.turn != Turn::Cops {
        return Err(SolveError::InvalidState);
    }
    let space = table.space();
    let ci = space
        .index_of(&s.cops.to_vec())
        .ok_or(SolveError::InvalidState)?;
    if s.robber >= table.graph().n() {
        return Err(SolveError::InvalidState);
    }
    if table.dist_at(ci, s.robber, Turn::Cops).is_none() {
        return Err(SolveError::NotCopWin);
    }
    let mut best: Option<(u32, usize)> = None;
    for &cj in space.moves(ci) {
        if let Some(d) = table.dist_at(cj as usize, s.robber, Turn::Robber) {
            if best.is_none_or(|(bd, _)| d < bd) {
                best = Some((d, cj as usize));
            }
        }
    }
    let (_, cj) = best.ok_or(SolveError::NotCopWin)?;
    Ok(space.configs[cj])
}

/// How the robber picks placements and moves when a game is traced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RobberPolicy {
    /// Maximize the resulting capture distance; ties go to the smallest vertex.
    #[default]
    Greedy,
    /// Always take the smallest available vertex.
    Lowest,
}

impl RobberPolicy {
    fn choose(self, table: &WinTable, cops: Cops, options: impl Iterator<Item = usize>) -> usize {
        let mut chosen: Option<(u32, usize)> = None;
        for r in options {
            let d = table
                .dist(&GameState {
                    cops,
                    robber: r,
                    turn: Turn::Cops,
                })
                .unwrap_or(u32::MAX);
            let better = match (self, chosen) {
                (_, None) => true,
                (RobberPolicy::Greedy, Some((bd, _))) => d > bd,
                (RobberPolicy::Lowest, Some(_)) => false,
            };
            if better {
                chosen = Some((d, r));
            }
        }
        chosen.expect("at least one robber option").1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    PlaceCops,
    PlaceRobber,
    CopMove,
    RobberMove,
}

/// One line of a transcript: the state reached after a placement or move.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub kind: StepKind,
    pub cops: Cops,
    pub robber: Option<usize>,
    /// Side to move next.
    pub to_move: Turn,
    pub captured: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transcript {
    pub k: usize,
    pub steps: Vec<Step>,
}

impl Transcript {
    /// Number of cop moves made after placement.
    pub fn cop_moves(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| s.kind == StepKind::CopMove)
            .count()
    }

    pub fn ends_in_capture(&self) -> bool {
        self.steps.last().is_some_and(|s| s.captured)
    }
}

/// Renders one state per line in arrow notation; `*` marks the side to move.
impl fmt::Display for Transcript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            let robber = step
                .robber
                .map_or_else(|| "·".to_string(), |r| r.to_string());
            let (c_mark, r_mark) = match step.to_move {
                Turn::Cops => ("*", ""),
                Turn::Robber => ("", "*"),
            };
            let lead = match step.kind {
                StepKind::PlaceCops | StepKind::PlaceRobber => "  ",
                StepKind::CopMove | StepKind::RobberMove => "→ ",
            };
            let tail = match step.kind {
                _ if step.captured => "  captured",
                StepKind::PlaceCops => "  cops placed",
                StepKind::PlaceRobber => "  robber placed",
                _ => "",
            };
            writeln!(f, "{lead}⟨{}{c_mark} | {robber}{r_mark}⟩{tail}", step.cops)?;
        }
        Ok(())
    }
}

/// Plays one game with `k` cops following the table strategy against `policy`.
///
/// The cops open on the winning placement with the smallest worst-case
/// capture distance (ties: smallest tuple).
pub fn trace_game(g: &Graph, k: usize, policy: RobberPolicy) -> Result<Transcript, SolveError> {
    let table = solve_k(g, k)?;
    let n = g.n();
    let mut opening: Option<(u32, Cops)> = None;
    for cops in table.winning_placements() {
        let worst = (0..n)
            .filter_map(|r| {
                table.dist(&GameState {
                    cops,
                    robber: r,
                    turn: Turn::Cops,
                })
            })
            .max()
            .unwrap_or(0);
        if opening.is_none_or(|(w, _)| worst < w) {
            opening = Some((worst, cops));
        }
    }
    let (_, mut cops) = opening.ok_or(SolveError::NotCopWin)?;
    let mut steps = vec![Step {
        kind: StepKind::PlaceCops,
        cops,
        robber: None,
        to_move: Turn::Robber,
        captured: false,
    }];
    let mut robber = policy.choose(&table, cops, 0..n);
    let mut captured = cops.mask().contains(robber);
    steps.push(Step {
        kind: StepKind::PlaceRobber,
        cops,
        robber: Some(robber),
        to_move: Turn::Cops,
        captured,
    });
    while !captured {
        let s = GameState {
            cops,
            robber,
            turn: Turn::Cops,
        };
        cops = strategy_move(&table, &s)?;
        captured = cops.mask().contains(robber);
        steps.push(Step {
            kind: StepKind::CopMove,
            cops,
            robber: Some(robber),
            to_move: Turn::Robber,
            captured,
        });
        if captured {
            break;
        }
        robber = policy.choose(&table, cops, g.closed_neighbors(robber).iter());
        captured = cops.mask().contains(robber);
        steps.push(Step {
            kind: StepKind::RobberMove,
            cops,
            robber: Some(robber),
            to_move: Turn::Cops,
            captured,
        });
    }
    Ok(Transcript { k, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path, petersen};

    #[test]
    fn dist_one_state_captures() {
        let g = path(3);
        let t = solve_k(&g, 1).unwrap();
        let s = GameState::new(&[1], 0, Turn::Cops);
        assert_eq!(t.dist(&s), Some(1));
        assert_eq!(strategy_move(&t, &s).unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn ties_break_lexicographically() {
        // from the center of a star every leaf is one step away; robber on the
        // center is captured by staying or moving, smallest tuple is [0]
        let g = crate::graph::star(3);
        let t = solve_k(&g, 1).unwrap();
        let s = GameState::new(&[1], 0, Turn::Cops);
        assert_eq!(strategy_move(&t, &s).unwrap().to_vec(), vec![0]);
        let c4 = cycle(4);
        let t2 = solve_k(&c4, 2).unwrap();
        // robber at 2 is adjacent to both cops at 1 and 3; capture options [1,2],[2,3],[2,2]
        let s = GameState::new(&[1, 3], 2, Turn::Cops);
        assert_eq!(strategy_move(&t2, &s).unwrap().to_vec(), vec![0, 2]);
    }

    #[test]
    fn rejects_robber_win_states() {
        let t = solve_k(&cycle(4), 1).unwrap();
        let s = GameState::new(&[0], 2, Turn::Cops);
        assert_eq!(strategy_move(&t, &s), Err(SolveError::NotCopWin));
    }

    #[test]
    fn traces_end_in_capture() {
        let tr = trace_game(&path(6), 1, RobberPolicy::Greedy).unwrap();
        assert!(tr.ends_in_capture());
        let text = tr.to_string();
        assert!(text.contains("captured"));
        assert!(text.lines().count() == tr.steps.len());

        let tr = trace_game(&cycle(4), 2, RobberPolicy::Greedy).unwrap();
        assert!(tr.ends_in_capture());
        assert!(tr.cop_moves() <= 2);

        let tr = trace_game(&petersen(), 3, RobberPolicy::Greedy).unwrap();
        assert!(tr.ends_in_capture());
        assert_eq!(
            trace_game(&petersen(), 2, RobberPolicy::Greedy),
            Err(SolveError::NotCopWin)
        );
    }
}
