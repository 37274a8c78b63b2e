use proptest::prelude::*;

use super::*;
use crate::constructions::{construct_connelly, construct_id, construct_upper, make_gadget, GadgetKind};
use crate::corpus::{all_graphs, random_graph};
use crate::variants::satisfies;

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

/// Minimum or maximum over all 2^n subsets, written without any of the
/// solver machinery.
fn subset_oracle(g: &Graph, variant: DomVariant) -> Option<(usize, Vec<VertexSet>)> {
    let all: Vec<VertexSet> = (0u128..1 << g.n())
        .map(VertexSet::from_bits)
        .filter(|&s| satisfies(g, s, variant))
        .collect();
    let best = match variant.direction() {
        crate::variants::Direction::Minimize => all.iter().map(|s| s.len()).min()?,
        crate::variants::Direction::Maximize => all.iter().map(|s| s.len()).max()?,
    };
    let mut sets: Vec<_> = all.into_iter().filter(|s| s.len() == best).collect();
    sets.sort_unstable();
    Some((best, sets))
}

#[test]
fn c_gadget_identifying_code() {
    let g = make_gadget(GadgetKind::CGadget).graph;
    let opt = bb_optimal(&g, DomVariant::IdCode);
    assert_eq!(opt.value, ParamValue::Finite(3));
    assert_eq!(opt.family.sets(), &[set(&[0, 1, 2])]);
    assert_eq!(opt, brute_force_optimal(&g, DomVariant::IdCode));
}

#[test]
fn connelly_gamma_family() {
    let c = construct_connelly(&Graph::named("K4-e").unwrap()).unwrap();
    let opt = bb_optimal(&c.graph, DomVariant::Gamma);
    assert_eq!(opt.value, ParamValue::Finite(2));
    let cv = c.index_of("c").unwrap();
    let expected: Vec<_> = (0..4).map(|i| set(&[i, cv])).collect();
    assert_eq!(opt.family.sets(), expected.as_slice());
}

#[test]
fn guards() {
    assert_eq!(parameter(&Graph::complete(2), DomVariant::IdCode), ParamValue::Infinite);
    let with_isolated = Graph::path(2).disjoint_union(&Graph::empty(1));
    for v in [DomVariant::Total, DomVariant::Paired, DomVariant::LocTotal] {
        assert_eq!(parameter(&with_isolated, v), ParamValue::Undefined);
        assert_eq!(brute_force_optimal(&with_isolated, v).value, ParamValue::Undefined);
    }
    assert_eq!(parameter(&with_isolated, DomVariant::Connected), ParamValue::Undefined);
    assert_eq!(parameter(&Graph::empty(0), DomVariant::Connected), ParamValue::Undefined);
    // paired domination needs a perfect matching, which P3's {0,1,2} lacks
    assert_eq!(parameter(&Graph::path(3), DomVariant::Paired), ParamValue::Finite(2));
}

#[test]
fn empty_graph() {
    let g = Graph::empty(0);
    for v in DomVariant::ALL {
        if v == DomVariant::Connected {
            continue;
        }
        let opt = bb_optimal(&g, v);
        assert_eq!(opt, brute_force_optimal(&g, v), "{v}");
        assert_eq!(opt.value, ParamValue::Finite(0), "{v}");
    }
}

#[test]
fn minimal_dominating_enumeration() {
    assert_eq!(enumerate_minimal_dominating(&Graph::cycle(4)).len(), 6);
    assert_eq!(enumerate_minimal_dominating(&Graph::empty(1)).sets(), &[set(&[0])]);
    assert_eq!(
        enumerate_minimal_dominating(&Graph::path(3)).sets(),
        &[set(&[1]), set(&[0, 2])]
    );
}

#[test]
fn fig4_value() {
    let g = crate::constructions::attach(&Graph::cycle(4), &make_gadget(GadgetKind::CGadget), 3).unwrap();
    let opt = bb_optimal(&g, DomVariant::IdCode);
    assert_eq!(opt.value, ParamValue::Finite(5));
    assert!(opt.family.contains(set(&[0, 2, 4, 5, 6])));
}

#[test]
fn id_construction_on_k2() {
    let c = construct_id(&Graph::complete(2)).unwrap();
    let opt = bb_optimal(&c.graph, DomVariant::IdCode);
    // 3 forced vertices in each of the 6 C gadgets plus one host vertex
    assert_eq!(opt.value, ParamValue::Finite(19));
    assert_eq!(opt.family.len(), 2);
    assert!(opt.family.iter().all(|s| c.forced.is_subset(s)));
}

#[test]
fn upper_construction_on_k2() {
    let c = construct_upper(&Graph::complete(2)).unwrap();
    let opt = bb_optimal(&c.graph, DomVariant::UpperGamma);
    assert_eq!(opt.value, ParamValue::Finite(10));
    assert_eq!(opt.family.len(), 2);
    let mut expected = c.expected_family();
    expected.sort_unstable();
    assert_eq!(opt.family.sets(), expected.as_slice());
}

#[test]
fn engines_agree_on_all_small_graphs() {
    for n in 0..=5 {
        for g in all_graphs(n) {
            for v in DomVariant::ALL {
                let brute = brute_force_optimal(&g, v);
                assert_eq!(bb_optimal(&g, v), brute, "{v} on {g:?}");
                if let ParamValue::Finite(k) = brute.value {
                    let (best, sets) = subset_oracle(&g, v).unwrap();
                    assert_eq!(k, best);
                    assert_eq!(brute.family.sets(), sets.as_slice());
                }
            }
        }
    }
}

#[test]
fn enumeration_matches_oracle() {
    for g in all_graphs(5) {
        let fam = enumerate_minimal_dominating(&g);
        let oracle: Vec<_> = (0u128..1 << g.n())
            .map(VertexSet::from_bits)
            .filter(|&s| crate::variants::is_minimal_dominating(&g, s))
            .collect();
        assert_eq!(fam.sets(), SetFamily::new(oracle).sets());
        assert_eq!(fam.largest(), bb_optimal(&g, DomVariant::UpperGamma).family);
    }
}

#[test]
fn subset_scan_counts() {
    let mut count = 0;
    for_each_subset_of_size(10, 4, |s| {
        assert_eq!(s.len(), 4);
        count += 1;
    });
    assert_eq!(count, 210);
    let mut none = 0;
    for_each_subset_of_size(3, 4, |_| none += 1);
    assert_eq!(none, 0);
}

#[test]
fn param_value_rendering() {
    assert_eq!(ParamValue::Infinite.to_string(), "infinity");
    assert_eq!(ParamValue::Undefined.to_string(), "undefined");
    assert_eq!(serde_json::to_string(&ParamValue::Finite(3)).unwrap(), "3");
    assert_eq!(serde_json::to_string(&ParamValue::Infinite).unwrap(), "\"infinity\"");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn engines_agree_on_random_graphs(n in 6usize..=9, seed in any::<u64>(), p in 0.1f64..0.7) {
        use rand::SeedableRng;
        let g = random_graph(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed), n, p);
        for v in DomVariant::ALL {
            prop_assert_eq!(bb_optimal(&g, v), brute_force_optimal(&g, v), "{}", v);
        }
    }

    #[test]
    fn every_optimal_set_satisfies(n in 1usize..=8, seed in any::<u64>()) {
        use rand::SeedableRng;
        let g = random_graph(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed), n, 0.4);
        for v in DomVariant::ALL {
            let opt = bb_optimal(&g, v);
            for s in opt.family.iter() {
                prop_assert!(satisfies(&g, s, v));
            }
        }
    }
}
