use proptest::prelude::*;

use clasperkit::diagram::{
    enumerate_chord_diagrams, fox_alexander, fox_alexander_deleting, knots, realize_chord_diagram_with, AuxCrossings,
    CrossingKind, LinkDiagram, Realization,
};
use clasperkit::ring::{substitute_exp, symmetric_normalize, unit_equivalent};
use clasperkit::skein::{alexander_to_c, c_series, conway, conway_to_alexander, conway_with, ConwayPoly, SkeinStrategy};

fn named() -> Vec<LinkDiagram> {
    ["3_1", "4_1", "5_1", "5_2", "6_1", "granny", "square", "hopf"].iter().map(|n| knots::by_name(n).unwrap()).collect()
}

/// Knot diagrams resolved from realizations of random chord diagrams.
fn realized_knot() -> impl Strategy<Value = LinkDiagram> {
    (1usize..=3, any::<u64>(), any::<u64>(), 0usize..6).prop_map(|(n, seed, signs, rotation)| {
        let all = enumerate_chord_diagrams(n);
        let cd = &all[(seed % all.len() as u64) as usize];
        let how = Realization { aux: AuxCrossings::Seeded(seed), push_from_later: signs & 1 == 1, double_on_return: false, rotation };
        let s = realize_chord_diagram_with(cd, &how);
        let bits: Vec<bool> = (0..n).map(|i| signs >> (i + 1) & 1 == 1).collect();
        s.resolve(&bits).unwrap()
    })
}

fn diagram() -> impl Strategy<Value = LinkDiagram> {
    prop_oneof![prop::sample::select(named()), realized_knot()]
}

fn knot() -> impl Strategy<Value = LinkDiagram> {
    diagram().prop_filter("knots only", |d| d.is_knot())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn skein_relation_at_every_crossing(d in diagram(), pick in any::<prop::sample::Index>()) {
        prop_assume!(d.crossing_count() > 0);
        let i = pick.index(d.crossing_count());
        let switched = d.switch_crossing(i).unwrap();
        let (plus, minus) = match d.crossings()[i].kind {
            CrossingKind::Positive => (d.clone(), switched),
            _ => (switched, d.clone()),
        };
        let zero = d.smooth_crossing(i).unwrap();
        let lhs = &conway(&plus).unwrap() - &conway(&minus).unwrap();
        prop_assert_eq!(lhs, &ConwayPoly::z() * &conway(&zero).unwrap());
    }

    #[test]
    fn strategies_agree(d in diagram(), seed in any::<u64>()) {
        prop_assert_eq!(conway_with(&d, SkeinStrategy::Seeded(seed)).unwrap(), conway(&d).unwrap());
    }

    #[test]
    fn fox_minor_choice_is_irrelevant(k in knot()) {
        let base = fox_alexander(&k).unwrap();
        for col in 0..k.crossing_count() {
            prop_assert!(unit_equivalent(&fox_alexander_deleting(&k, col).unwrap(), &base));
        }
    }

    #[test]
    fn fox_agrees_with_skein(k in knot()) {
        let fox = symmetric_normalize(&fox_alexander(&k).unwrap()).unwrap();
        prop_assert_eq!(fox, conway_to_alexander(&conway(&k).unwrap()).unwrap());
    }

    #[test]
    fn mirror_flips_t(k in knot()) {
        let a = fox_alexander(&k).unwrap();
        let m = fox_alexander(&knots::mirror(&k)).unwrap();
        prop_assert!(unit_equivalent(&m, &a.bar()));
        prop_assert!(unit_equivalent(&m, &a));
        let n = symmetric_normalize(&a).unwrap();
        prop_assert_eq!(n.bar(), n);
    }

    #[test]
    fn series_paths_agree_to_order_eight(k in knot()) {
        let p = conway(&k).unwrap();
        let direct = c_series(&p, 8);
        let via_alexander = alexander_to_c(&conway_to_alexander(&p).unwrap(), 8).unwrap();
        let via_fox = substitute_exp(&symmetric_normalize(&fox_alexander(&k).unwrap()).unwrap(), 8);
        prop_assert_eq!(&direct, &via_alexander);
        prop_assert_eq!(&direct, &via_fox);
    }
}

#[test]
fn connected_sums_multiply() {
    let ks = [knots::trefoil(), knots::figure_eight(), knots::five_two()];
    for a in &ks {
        for b in &ks {
            let s = LinkDiagram::connected_sum(a, b, a.arcs()[0], b.arcs()[0]).unwrap();
            assert!(s.is_knot());
            assert_eq!(conway(&s).unwrap(), &conway(a).unwrap() * &conway(b).unwrap());
        }
    }
}

#[test]
fn kinks_and_split_links() {
    assert_eq!(conway(&knots::kink(true)).unwrap(), ConwayPoly::one());
    assert_eq!(conway(&knots::kink(false)).unwrap(), ConwayPoly::one());
    assert_eq!(conway(&LinkDiagram::unlink(2)).unwrap(), ConwayPoly::zero());
    assert_eq!(conway(&knots::hopf_link()).unwrap(), ConwayPoly::z());
}
