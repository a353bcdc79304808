use copnum::enumerate::{generate, GenSpec};
use copnum::graph::petersen;
use copnum::solver::cop_number;
use copnum::structure::{is_petersen_by_property, lower_bound, prune_c_at_most_2, PruneVerdict};
use copnum::{canonical_form, Graph, VertexSet};
use proptest::prelude::*;

fn outside(g: &Graph, u: usize) -> VertexSet {
    g.vertices() - g.closed_neighbors(u)
}

#[test]
fn filters_and_bounds_are_sound_up_to_order_eight() {
    for n in 1..=8 {
        for g in generate(GenSpec::connected(n)).unwrap() {
            let c = cop_number(&g, 4).unwrap();
            let lb = lower_bound(&g).unwrap();
            assert!(lb.value <= c, "{g}: bound {lb:?} above {c}");
            if let PruneVerdict::ProvedAtMost2(cert) = prune_c_at_most_2(&g).unwrap() {
                assert!(cert.holds(&g), "{g}: {cert}");
                assert!(c <= 2, "{g}: {cert} but c = {c}");
            }
            for u in (0..n).filter(|&u| g.degree(u) + 6 >= n) {
                assert!(c <= 2 || g.induced_is_cycle(outside(&g, u), 5), "{g}");
            }
        }
    }
}

#[test]
fn six_cycle_hub_rule() {
    // with maximum degree n - 7 <= 3, every vertex of maximum degree meets
    // the hypotheses (outside degrees are at most 3)
    let mut checked = 0;
    for n in 8..=10 {
        let hub = n - 7;
        for g in generate(GenSpec::connected(n).with_degrees(1, hub)).unwrap() {
            if g.max_degree() != hub {
                continue;
            }
            let c = cop_number(&g, 4).unwrap();
            for u in (0..n).filter(|&u| g.degree(u) == hub) {
                assert!(c <= 2 || g.induced_is_cycle(outside(&g, u), 6), "{g}");
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn petersen_recognizer_matches_canonical_equality() {
    let target = canonical_form(&petersen());
    let mut hits = 0;
    for g in generate(GenSpec::connected(10).with_degrees(3, 3)).unwrap() {
        let by_property = is_petersen_by_property(&g);
        assert_eq!(by_property, canonical_form(&g) == target, "{g}");
        hits += usize::from(by_property);
    }
    assert_eq!(hits, 1);
}

fn arb_connected() -> impl Strategy<Value = Graph> {
    (
        4usize..=10,
        prop::collection::vec(any::<u8>(), 10),
        prop::collection::vec(any::<bool>(), 45),
    )
        .prop_map(|(n, parents, bits)| {
            let mut edges: Vec<(usize, usize)> =
                (1..n).map(|v| (parents[v] as usize % v, v)).collect();
            let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
            edges.extend(pairs.zip(&bits).filter(|(_, &b)| b).map(|(e, _)| e));
            Graph::from_edges(n, edges).unwrap()
        })
}

proptest! {
    #[test]
    fn certificates_replay_and_ignore_labels(g in arb_connected(), seed in any::<u64>()) {
        let verdict = prune_c_at_most_2(&g).unwrap();
        let mut perm: Vec<u8> = (0..g.n() as u8).collect();
        perm.rotate_left(seed as usize % g.n());
        let h = g.permute(&perm);
        let other = prune_c_at_most_2(&h).unwrap();
        prop_assert_eq!(verdict.certificate().map(|c| c.rule), other.certificate().map(|c| c.rule));
        if let Some(cert) = verdict.certificate() {
            prop_assert!(cert.holds(&g));
            prop_assert!(cop_number(&g, 4).unwrap() <= 2);
        }
        prop_assert!(lower_bound(&g).unwrap().value <= cop_number(&g, 4).unwrap());
    }
}
