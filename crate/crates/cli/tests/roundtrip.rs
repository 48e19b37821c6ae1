use derange::{
    parse_digraph, parse_group, parse_perm_set, write_digraph, write_graph, write_group,
    write_perm_set,
};
use derange_core::dad::build_da;
use derange_core::twosided::group_from_generators;
use derange_core::{DerangementSet, Permutation};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn derangement_set() -> impl Strategy<Value = DerangementSet> {
    (2..=9usize).prop_flat_map(|n| {
        proptest::collection::vec(
            perm(n).prop_filter("derangement", Permutation::is_derangement),
            1..=4,
        )
        .prop_map(|v| DerangementSet::new_dedup(v).unwrap())
    })
}

proptest! {
    #[test]
    fn perm_sets(s in derangement_set()) {
        let text = write_perm_set(&s);
        let back = parse_perm_set(&text, false).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(write_perm_set(&back), text);
    }

    #[test]
    fn digraphs(s in derangement_set()) {
        let g = build_da(&s);
        let text = write_digraph(&g);
        prop_assert_eq!(&parse_digraph(&text).unwrap(), &g);
        if let Some(text) = write_graph(&g) {
            prop_assert_eq!(parse_digraph(&text).unwrap(), g);
        }
    }

    #[test]
    fn group_tables(gens in (2..=4usize).prop_flat_map(|n| proptest::collection::vec(perm(n), 1..=2))) {
        let group = group_from_generators(&gens).unwrap().group;
        let text = write_group(&group);
        let back = parse_group(&text).unwrap();
        prop_assert_eq!(back.group(), &group);
        prop_assert_eq!(write_group(back.group()), text);
    }
}
