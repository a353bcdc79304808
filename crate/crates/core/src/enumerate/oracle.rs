use std::collections::BTreeMap;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;

use super::{EnumError, GenSpec};

/// Largest order accepted by [`brute_force_enumerate`].
pub const BRUTE_FORCE_MAX_ORDER: usize = 7;

/// One canonical representative per isomorphism class admitted by `spec`,
/// found by filtering every labeled graph on `spec.n` vertices.
pub fn brute_force_enumerate(spec: GenSpec) -> Result<Vec<Graph>, EnumError> {
    spec.validate()?;
    let n = spec.n;
    if n > BRUTE_FORCE_MAX_ORDER {
        return Err(EnumError::TooLargeForOracle {
            n,
            max: BRUTE_FORCE_MAX_ORDER,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let mut classes: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut g = Graph::empty(n).expect("order checked");
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.link(u, v);
            }
        }
        if spec.admits(&g) {
            let f = canonical_form(&g);
            classes.entry(f).or_insert_with_key(|f| f.to_graph());
        }
    }
    Ok(classes.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_small_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| brute_force_enumerate(GenSpec::connected(n)).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
        let p3_k3: Vec<String> = brute_force_enumerate(GenSpec::connected(3))
            .unwrap()
            .iter()
            .map(|g| g.edge_count().to_string())
            .collect();
        assert_eq!(p3_k3, vec!["2", "3"]);
    }

    #[test]
    fn rejects_large_orders() {
        assert!(matches!(
            brute_force_enumerate(GenSpec::connected(8)),
            Err(EnumError::TooLargeForOracle { n: 8, .. })
        ));
    }
}
