use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use clasperkit::clasper::{enumerate_negative_chi_graphs, reduce_negative_chi, ClasperGraph};
use clasperkit::diagram::{enumerate_chord_diagrams, ChordDiagram};
use clasperkit::web::{stu_reduce, DiagramCombination, StuOrder, WebDiagram};
use clasperkit::weights::{check_multiplicativity, eval_chord_bruteforce, eval_web, smoothing_weight, WeightFunctional};

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn degree_three_webs() -> Vec<WebDiagram> {
    let mut v: Vec<WebDiagram> = enumerate_chord_diagrams(3).iter().map(WebDiagram::from_chord_diagram).collect();
    v.push(WebDiagram::double_bubble());
    v
}

#[test]
fn degree_four_brute_force_matches_smoothing_rule() {
    for cd in enumerate_chord_diagrams(4) {
        assert_eq!(eval_chord_bruteforce(&cd, 4).unwrap(), smoothing_weight(&cd), "{:?}", cd.word());
    }
}

#[test]
fn isolated_chords_vanish() {
    for n in 1..=3 {
        for cd in enumerate_chord_diagrams(n).into_iter().filter(ChordDiagram::has_isolated_chord) {
            assert_eq!(eval_chord_bruteforce(&cd, n).unwrap(), q(0, 1));
        }
    }
    let w = WebDiagram::wheel(2).unwrap();
    let chord = WebDiagram::from_chord_diagram(&ChordDiagram::theta());
    let m = check_multiplicativity(&w, &chord).unwrap();
    assert_eq!((m.sum.clone(), m.left.clone(), m.right.clone()), (q(0, 1), q(-2, 1), q(0, 1)));
    assert!(m.holds());
}

#[test]
fn theta_sums_vanish() {
    let t = WebDiagram::from_chord_diagram(&ChordDiagram::theta());
    let m = check_multiplicativity(&t, &t).unwrap();
    assert_eq!(m.sum, q(0, 1));
    assert!(m.holds());
}

#[test]
fn negative_chi_diagrams_have_zero_weight() {
    assert_eq!(eval_web(&WebDiagram::double_bubble(), 3).unwrap(), q(0, 1));
    let graphs = enumerate_negative_chi_graphs(3);
    for g in graphs.iter().filter(|g| !g.leaves().is_empty()) {
        let w = g.underlying().unwrap();
        assert_eq!(eval_web(&w, w.degree()).unwrap(), q(0, 1), "{:?}", g.to_spec());
    }
}

#[test]
fn every_enumerated_graph_reduces() {
    let graphs = enumerate_negative_chi_graphs(4);
    assert_eq!(graphs.len(), 134);
    for g in &graphs {
        assert!(reduce_negative_chi(g).unwrap().ends_empty);
        let back: ClasperGraph = g.to_spec().build().unwrap();
        assert_eq!(&back, g);
    }
}

#[test]
fn stu_output_is_chord_diagrams_of_the_same_degree() {
    for w in degree_three_webs() {
        let x = stu_reduce(&w).unwrap();
        for (cd, _) in x.chord_terms().unwrap() {
            assert_eq!(cd.degree(), 3);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn evaluation_is_linear(
        i in 0usize..6, j in 0usize..6,
        (a, b) in (-7i64..=7, 1i64..=4), (c, d) in (-7i64..=7, 1i64..=4),
        seed in any::<u64>(),
    ) {
        let webs = degree_three_webs();
        let (d1, d2) = (&webs[i % webs.len()], &webs[j % webs.len()]);
        let (r1, r2) = (q(a, b), q(c, d));
        let mut x = DiagramCombination::new();
        x.add_term(d1.clone(), r1.clone());
        x.add_term(d2.clone(), r2.clone());
        let mut f = WeightFunctional::new(3);
        let lhs = f.eval_combination(&x, StuOrder::Seeded(seed)).unwrap();
        let rhs = &r1 * f.eval_web(d1, StuOrder::default()).unwrap() + &r2 * f.eval_web(d2, StuOrder::default()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn stu_order_is_irrelevant(seed in any::<u64>()) {
        let w = WebDiagram::wheel(2).unwrap();
        prop_assert_eq!(WeightFunctional::new(2).eval_web(&w, StuOrder::Seeded(seed)).unwrap(), q(-2, 1));
    }
}
