mod common;

use proptest::prelude::*;
use streamcert::oracles::{self, Distance};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn matching_agrees(seed: u64) {
        let g = common::random_graph(seed, 12);
        let m = oracles::maximum_matching(&g);
        prop_assert_eq!(m.len(), common::matching(&g));
        let mut used = std::collections::HashSet::new();
        for e in &m {
            prop_assert!(g.has_edge(e.u(), e.v()));
            prop_assert!(used.insert(e.u()) && used.insert(e.v()));
        }
    }

    #[test]
    fn tutte_berge_agrees(seed: u64) {
        let g = common::random_graph(seed, 12);
        let (value, witness) = oracles::tutte_berge(&g).unwrap();
        prop_assert_eq!(value, common::tutte_berge(&g));
        let mut in_u = vec![false; g.node_count()];
        for v in witness {
            in_u[v as usize - 1] = true;
        }
        prop_assert_eq!(oracles::tutte_berge_bound(&g, &in_u), value);
    }

    #[test]
    fn degeneracy_agrees(seed: u64) {
        let g = common::random_graph(seed, 12);
        prop_assert_eq!(oracles::degeneracy(&g), common::degeneracy(&g));
    }

    #[test]
    fn diameter_agrees(seed: u64) {
        let g = common::random_graph(seed, 14);
        let expected = common::diameter(&g).map_or(Distance::Infinite, Distance::Finite);
        prop_assert_eq!(oracles::diameter(&g), expected);
    }

    #[test]
    fn chromatic_agrees(seed: u64) {
        let g = common::random_graph(seed, 11);
        let (chi, colors) = oracles::chromatic(&g).unwrap();
        prop_assert_eq!(chi, common::chromatic(&g));
        for e in g.edges() {
            prop_assert_ne!(colors[e.u() as usize - 1], colors[e.v() as usize - 1]);
        }
    }

    #[test]
    fn set_parameters_agree(seed: u64) {
        let g = common::random_graph(seed, 14);
        let p = oracles::set_parameters(&g).unwrap();
        prop_assert_eq!(p.is, common::independence(&g));
        prop_assert_eq!(p.clique, common::clique(&g));
        prop_assert_eq!(p.vc, common::vertex_cover(&g));
    }
}

#[test]
fn size_limits() {
    let big = streamcert::generators::path(oracles::SET_LIMIT + 1);
    assert!(oracles::set_parameters(&big).is_err());
    assert!(oracles::chromatic(&big).is_err());
    assert!(oracles::tutte_berge(&streamcert::generators::path(oracles::TUTTE_BERGE_LIMIT + 1)).is_err());
    // The polynomial oracles have no limit.
    assert_eq!(oracles::max_matching(&big), 12);
    assert_eq!(oracles::diameter(&big), Distance::Finite(24));
}
