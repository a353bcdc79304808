use std::collections::HashSet;

use copnum::enumerate::{generate, GenSpec};
use copnum::graph::{cycle, path, petersen, star};
use copnum::solver::{
    cop_number, is_no_backtrack_winning, is_trapped, k_cops_win, solve_k, strategy_move,
    trace_game, GameState, RobberPolicy, SolveError, Turn, WinTable,
};
use copnum::structure::endgame_predicates;
use copnum::Graph;
use proptest::prelude::*;

fn connected(n: usize) -> Vec<Graph> {
    generate(GenSpec::connected(n)).unwrap().collect()
}

#[test]
fn more_cops_never_hurt() {
    for n in 1..=8 {
        for g in connected(n) {
            let wins: Vec<bool> = (1..=3).map(|k| k_cops_win(&g, k).unwrap()).collect();
            assert!(wins.windows(2).all(|w| !w[0] || w[1]), "{g}");
        }
    }
}

#[test]
fn one_cop_wins_exactly_on_dismantleable_graphs() {
    for n in 1..=8 {
        for g in connected(n) {
            let dismantleable = g.dismantling_order().unwrap().is_dismantleable();
            assert_eq!(cop_number(&g, 4).unwrap() == 1, dismantleable, "{g}");
        }
    }
}

#[test]
fn table_and_decision_agree() {
    for n in 1..=7 {
        for g in connected(n) {
            for k in 1..=3 {
                assert_eq!(
                    solve_k(&g, k).unwrap().cops_win(),
                    k_cops_win(&g, k).unwrap(),
                    "{g} k={k}"
                );
            }
        }
    }
}

fn check_local_consistency(t: &WinTable) {
    for s in t.states() {
        let d = t.dist(&s);
        let succ: Vec<Option<u32>> = t.successors(&s).iter().map(|x| t.dist(x)).collect();
        if s.captured() {
            assert_eq!(d, Some(0));
            continue;
        }
        match (s.turn, d) {
            (Turn::Cops, Some(d)) => {
                let best = succ.iter().flatten().min().copied();
                assert_eq!(best.map(|b| b + 1), Some(d), "{s}");
            }
            (Turn::Cops, None) => assert!(succ.iter().all(Option::is_none), "{s}"),
            (Turn::Robber, Some(d)) => {
                assert!(succ.iter().all(Option::is_some), "{s}");
                assert_eq!(succ.iter().flatten().max().copied(), Some(d), "{s}");
            }
            (Turn::Robber, None) => assert!(succ.iter().any(Option::is_none), "{s}"),
        }
    }
}

#[test]
fn distances_are_locally_consistent() {
    for n in 1..=6 {
        for g in connected(n) {
            for k in 1..=2 {
                check_local_consistency(&solve_k(&g, k).unwrap());
            }
        }
    }
    check_local_consistency(&solve_k(&petersen(), 2).unwrap());
    check_local_consistency(&solve_k(&petersen(), 3).unwrap());
}

#[test]
fn trapped_robbers_are_caught_next_move() {
    for n in 2..=7 {
        for g in connected(n) {
            let t = solve_k(&g, 2).unwrap();
            for s in t
                .states()
                .filter(|s| s.turn == Turn::Robber && !s.captured())
            {
                if is_trapped(&g, &s.cops.to_vec(), s.robber) {
                    assert!(t.is_win(&s), "{g} {s}");
                    for next in t.successors(&s) {
                        assert!(t.dist(&next).unwrap() <= 1, "{g} {s} -> {next}");
                    }
                }
            }
        }
    }
}

#[test]
fn endgame_conditions_imply_cop_win_small() {
    for n in 1..=6 {
        for g in connected(n) {
            let t = solve_k(&g, 2).unwrap();
            for s in t.states().filter(|s| s.turn == Turn::Cops) {
                let f = endgame_predicates(&g, &s.cops.to_vec(), s.robber);
                if f.small_safe_region || f.low_degree_safe_region {
                    assert!(t.is_win(&s), "{g} {s}");
                }
            }
        }
    }
}

/// Follows the table strategy against every robber reply; returns the
/// longest number of cop moves needed.
fn worst_playout(t: &WinTable, s: GameState, seen: &mut HashSet<GameState>) -> u32 {
    assert_eq!(s.turn, Turn::Cops);
    if s.captured() {
        return 0;
    }
    let cops = strategy_move(t, &s).unwrap();
    let after = GameState {
        cops,
        robber: s.robber,
        turn: Turn::Robber,
    };
    if after.captured() {
        return 1;
    }
    assert!(seen.insert(after), "strategy revisits {after}");
    let worst = t
        .successors(&after)
        .into_iter()
        .map(|next| worst_playout(t, next, seen))
        .max()
        .unwrap();
    seen.remove(&after);
    worst + 1
}

#[test]
fn petersen_strategy_beats_every_robber() {
    let g = petersen();
    let t = solve_k(&g, 3).unwrap();
    let opening = t.winning_placements()[0];
    for r in 0..10 {
        let s = GameState {
            cops: opening,
            robber: r,
            turn: Turn::Cops,
        };
        let d = t.dist(&s).unwrap();
        assert!(worst_playout(&t, s, &mut HashSet::new()) <= d);
    }
}

#[test]
fn transcripts() {
    let c4 = trace_game(&cycle(4), 2, RobberPolicy::Greedy).unwrap();
    assert!(c4.ends_in_capture() && c4.cop_moves() <= 2);
    let tree = trace_game(&star(5), 1, RobberPolicy::Lowest).unwrap();
    assert!(tree.ends_in_capture());
    assert!(trace_game(&petersen(), 3, RobberPolicy::Greedy)
        .unwrap()
        .ends_in_capture());
    assert_eq!(
        trace_game(&petersen(), 2, RobberPolicy::Greedy).err(),
        Some(SolveError::NotCopWin)
    );
    // consecutive positions differ by legal moves
    let g = petersen();
    let tr = trace_game(&g, 3, RobberPolicy::Greedy).unwrap();
    for w in tr.steps.windows(2).skip(1) {
        let (a, b) = (&w[0], &w[1]);
        let (ra, rb) = (a.robber.unwrap(), b.robber.unwrap());
        assert!(ra == rb || g.has_edge(ra, rb));
        assert!(legal_cop_move(&g, a.cops.as_slice(), b.cops.as_slice()));
    }
}

/// Some matching of the cops before and after pairs every cop with a vertex
/// it can stay on or step to.
fn legal_cop_move(g: &Graph, from: &[u8], to: &[u8]) -> bool {
    if from.is_empty() {
        return true;
    }
    (0..to.len()).any(|j| {
        let (x, y) = (from[0] as usize, to[j] as usize);
        let mut rest = to.to_vec();
        rest.remove(j);
        (x == y || g.has_edge(x, y)) && legal_cop_move(g, &from[1..], &rest)
    })
}

#[test]
fn path_endpoint_is_no_backtrack_winning() {
    assert_eq!(is_no_backtrack_winning(&path(5), 0), Ok(true));
    assert_eq!(is_no_backtrack_winning(&cycle(4), 0), Ok(false));
}

fn arb_connected() -> impl Strategy<Value = Graph> {
    (
        2usize..=9,
        prop::collection::vec(any::<u8>(), 9),
        prop::collection::vec(any::<bool>(), 36),
    )
        .prop_map(|(n, parents, bits)| {
            // a random spanning tree plus random extra edges
            let mut edges: Vec<(usize, usize)> =
                (1..n).map(|v| (parents[v] as usize % v, v)).collect();
            let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
            edges.extend(pairs.zip(&bits).filter(|(_, &b)| b).map(|(e, _)| e));
            Graph::from_edges(n, edges).unwrap()
        })
}

fn arb_relabeled() -> impl Strategy<Value = (Graph, Vec<u8>)> {
    arb_connected().prop_flat_map(|g| {
        let ids: Vec<u8> = (0..g.n() as u8).collect();
        (Just(g), Just(ids).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn cop_number_ignores_labels((g, perm) in arb_relabeled()) {
        let h = g.permute(&perm);
        prop_assert_eq!(cop_number(&g, 4), cop_number(&h, 4));
    }
}
