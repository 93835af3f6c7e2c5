//! The end-to-end checks behind `verify-all`. Each check records what was
//! expected and what was computed, both as canonical strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::clasper::{bracket, enumerate_negative_chi_graphs, eval_on_combination, ChordClasper};
use crate::covers::{
    alexander_from_presentation, decomposition_check, expansion_ok, slice_form_check, vanishing_alexander,
    wheel_alexander_closed, wheel_c_series, wheel_presentation,
};
use crate::diagram::{enumerate_chord_diagrams, fox_alexander, knots, AuxCrossings, LinkDiagram, Realization};
use crate::ring::{symmetric_normalize, unit_equivalent, LaurentPoly};
use crate::skein::{c_coefficient, conway, conway_to_alexander, conway_with, d_coeffs, ConwaySolver, SkeinStrategy};
use crate::weights::{check_multiplicativity, eval_chord_with, eval_wheel_clasper, max_degree, WeightFunctional};
use crate::web::{StuOrder, WebDiagram};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let pass = expected == actual;
        Check { name: name.into(), expected, actual, pass }
    }

    fn error(name: impl Into<String>, expected: impl ToString, e: impl std::fmt::Display) -> Self {
        Check { name: name.into(), expected: expected.to_string(), actual: format!("error: {e}"), pass: false }
    }
}

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Determinant of the wheel presentation against the closed form.
pub fn wheel_alexander_checks(max_n: usize) -> Vec<Check> {
    (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let name = format!("01_wheel_alexander/n={n}");
            let closed = wheel_alexander_closed(n);
            match wheel_presentation(n).and_then(|p| alexander_from_presentation(&p)) {
                Ok(a) if unit_equivalent(&a, &closed) => Check::new(name, &closed, &closed),
                Ok(a) => Check::new(name, &closed, a),
                Err(e) => Check::error(name, &closed, e),
            }
        })
        .collect()
}

pub fn expansion_checks(max_n: usize) -> Vec<Check> {
    (1..=max_n)
        .map(|n| {
            let name = format!("02_conway_expansion/n={n}");
            let expected = format!("1 - 2h^{}", 2 * n);
            match wheel_c_series(n, 2 * n + 2) {
                Ok(s) if expansion_ok(&s, n) => Check::new(name, &expected, &expected),
                Ok(s) => Check::new(name, expected, s),
                Err(e) => Check::error(name, expected, e),
            }
        })
        .collect()
}

/// The fully written-out case of the wheel with two spokes.
pub fn first_wheel_checks() -> Vec<Check> {
    let mut out = Vec::new();
    let expected_a = LaurentPoly::from_terms([(-1, -2), (0, 5), (1, -2)]);
    let a = wheel_presentation(1).and_then(|p| alexander_from_presentation(&p));
    out.push(match a.as_ref().map(symmetric_normalize) {
        Ok(Ok(a)) => Check::new("03_first_wheel/alexander", &expected_a, a),
        Ok(Err(e)) => Check::error("03_first_wheel/alexander", &expected_a, e),
        Err(e) => Check::error("03_first_wheel/alexander", &expected_a, e),
    });
    let expected_c = [q(1, 1), q(0, 1), q(-2, 1), q(0, 1), q(-1, 6)];
    match wheel_c_series(1, 4) {
        Ok(s) => {
            out.push(Check::new("03_first_wheel/c_series", join(&expected_c), join(s.coeffs())));
            match d_coeffs(&wheel_c_series(1, 6).expect("order 6 is valid")) {
                Ok(d) => {
                    out.push(Check::new("03_first_wheel/d2", q(1, 1), &d[2]));
                    out.push(Check::new("03_first_wheel/d4", q(13, 12), &d[4]));
                }
                Err(e) => out.push(Check::error("03_first_wheel/d", "1, 13/12", e)),
            }
        }
        Err(e) => out.push(Check::error("03_first_wheel/c_series", join(&expected_c), e)),
    }
    out
}

pub fn decomposition_checks(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let dec = wheel_presentation(n).map(|p| decomposition_check(&p));
        out.push(match dec {
            Ok(b) => Check::new(format!("04_decomposition/n={n}"), true, b),
            Err(e) => Check::error(format!("04_decomposition/n={n}"), true, e),
        });
        out.push(match slice_form_check(n) {
            Ok(b) => Check::new(format!("04_slice_form/n={n}"), true, b),
            Err(e) => Check::error(format!("04_slice_form/n={n}"), true, e),
        });
    }
    out
}

/// Every enumerated graph reduces to nothing and leaves the unknot.
pub fn vanishing_checks(max_degree: usize) -> Vec<Check> {
    let graphs = enumerate_negative_chi_graphs(max_degree);
    let failures: Vec<String> = graphs
        .par_iter()
        .enumerate()
        .filter_map(|(i, g)| match vanishing_alexander(g) {
            Ok((a, trace)) if a == LaurentPoly::one() && trace.ends_empty => None,
            Ok((a, _)) => Some(format!("graph {i}: {a}")),
            Err(e) => Some(format!("graph {i}: {e}")),
        })
        .collect();
    vec![
        Check::new("05_vanishing/graphs_found", true, !graphs.is_empty()),
        Check::new(
            "05_vanishing/alexander_is_one",
            format!("{} of {}", graphs.len(), graphs.len()),
            format!("{} of {}", graphs.len() - failures.len(), graphs.len()),
        ),
    ]
}

pub fn wheel_weight_checks(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let brute = WebDiagram::wheel(2)
        .map_err(|e| e.to_string())
        .and_then(|w| WeightFunctional::new(2).eval_web(&w, StuOrder::default()).map_err(|e| e.to_string()));
    out.push(match &brute {
        Ok(v) => Check::new("06_wheel_weight/brute_force", -2, v),
        Err(e) => Check::error("06_wheel_weight/brute_force", -2, e),
    });
    for n in 1..=max_n {
        out.push(match eval_wheel_clasper(n) {
            Ok(v) => Check::new(format!("06_wheel_weight/cover_route/n={n}"), -2, v),
            Err(e) => Check::error(format!("06_wheel_weight/cover_route/n={n}"), -2, e),
        });
    }
    if let (Ok(b), Ok(c)) = (&brute, eval_wheel_clasper(1)) {
        out.push(Check::new("06_wheel_weight/routes_agree", b, c));
    }
    out
}

pub fn multiplicativity_checks() -> Vec<Check> {
    let w = WebDiagram::wheel(2).expect("two spokes");
    match check_multiplicativity(&w, &w) {
        Ok(m) => vec![
            Check::new("07_multiplicativity/sum", 4, &m.sum),
            Check::new("07_multiplicativity/product", &m.sum, &m.left * &m.right),
        ],
        Err(e) => vec![Check::error("07_multiplicativity/sum", 4, e)],
    }
}

fn c2(d: &LinkDiagram) -> Result<BigRational, String> {
    c_coefficient(&mut ConwaySolver::new(SkeinStrategy::Standard), d, 2).map_err(|e| e.to_string())
}

/// `c_2` kills brackets with three or more claspers; seeded hosts and sites.
pub fn finite_type_checks(seed: u64, trials: usize) -> Vec<Check> {
    let hosts = [
        ("4_1", knots::figure_eight()),
        ("5_1", knots::five_one()),
        ("5_2", knots::five_two()),
        ("6_1", knots::six_one()),
        ("granny", knots::granny()),
        ("square", knots::square()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for trial in 0..trials {
        for size in [3, 4] {
            let (name, host) = &hosts[rng.gen_range(0..hosts.len())];
            let mut sites: Vec<usize> = (0..host.crossing_count()).collect();
            sites.shuffle(&mut rng);
            let claspers: Vec<ChordClasper> = sites[..size].iter().map(|&site| ChordClasper { site }).collect();
            let label = format!("08_finite_type/{size}_claspers/trial={trial}");
            let value = bracket(host, &claspers).map_err(|e| e.to_string()).and_then(|x| eval_on_combination(c2, &x));
            out.push(match value {
                Ok(v) => Check::new(label, 0, v),
                Err(e) => Check::error(label, 0, format!("{name}: {e}")),
            });
        }
    }
    // U - trefoil: one clasper on an unknot diagram whose surgery gives the trefoil
    let value = knots::trefoil()
        .switch_crossing(0)
        .map_err(|e| e.to_string())
        .and_then(|u| bracket(&u, &[ChordClasper { site: 0 }]).map_err(|e| e.to_string()))
        .and_then(|x| eval_on_combination(c2, &x));
    out.push(match value {
        Ok(v) => Check::new("08_finite_type/unknot_minus_trefoil", -1, v),
        Err(e) => Check::error("08_finite_type/unknot_minus_trefoil", -1, e),
    });
    out
}

/// Fox calculus and the skein route give the same normalized polynomial.
pub fn oracle_checks() -> Vec<Check> {
    let knots = [
        ("3_1", knots::trefoil()),
        ("4_1", knots::figure_eight()),
        ("5_2", knots::five_two()),
        ("granny", knots::granny()),
    ];
    knots
        .iter()
        .map(|(name, k)| {
            let label = format!("09_oracle/{name}");
            let fox = fox_alexander(k).map_err(|e| e.to_string()).and_then(|a| symmetric_normalize(&a).map_err(|e| e.to_string()));
            let skein = conway(k).map_err(|e| e.to_string()).and_then(|p| conway_to_alexander(&p).map_err(|e| e.to_string()));
            match (fox, skein) {
                (Ok(f), Ok(s)) => Check::new(label, f, s),
                (Err(e), _) | (_, Err(e)) => Check::error(label, "agreement", e),
            }
        })
        .collect()
}

/// Passes when every computed value equals the first and none failed.
fn agreement(name: String, values: Vec<String>) -> Check {
    let pass = values.iter().all(|v| *v == values[0]) && !values[0].starts_with("error");
    Check { name, expected: values[0].clone(), actual: values.join(" | "), pass }
}

/// Values do not depend on realization, rewrite order or skein strategy.
pub fn well_definedness_checks(seed: u64) -> Vec<Check> {
    let mut out = Vec::new();
    let cap = max_degree();
    let realizations = [
        Realization::default(),
        Realization { aux: AuxCrossings::Seeded(seed), push_from_later: true, double_on_return: false, rotation: 1 },
        Realization { aux: AuxCrossings::Seeded(seed ^ 0x9e37), push_from_later: false, double_on_return: true, rotation: 2 },
    ];
    for n in 1..=3.min(cap) {
        for cd in enumerate_chord_diagrams(n) {
            let values: Vec<String> = realizations
                .iter()
                .map(|r| eval_chord_with(&cd, n, r, cap).map(|v| v.to_string()).unwrap_or_else(|e| format!("error: {e}")))
                .collect();
            let word: String = cd.word().iter().map(ToString::to_string).collect();
            out.push(agreement(format!("10_realizations/{word}"), values));
        }
    }
    let webs = [
        ("wheel2", WebDiagram::wheel(2).expect("two spokes")),
        ("double_bubble", WebDiagram::double_bubble()),
    ];
    for (name, w) in &webs {
        let orders = [StuOrder::LowestIndex, StuOrder::HighestIndex, StuOrder::Seeded(seed)];
        let values: Vec<String> = orders
            .iter()
            .map(|&o| {
                WeightFunctional::new(w.degree()).eval_web(w, o).map(|v| v.to_string()).unwrap_or_else(|e| format!("error: {e}"))
            })
            .collect();
        out.push(agreement(format!("10_stu_orders/{name}"), values));
    }
    let knots = [
        ("3_1", knots::trefoil()),
        ("4_1", knots::figure_eight()),
        ("5_2", knots::five_two()),
        ("granny", knots::granny()),
        ("hopf", knots::hopf_link()),
    ];
    for (name, k) in &knots {
        let strategies =
            [SkeinStrategy::Standard].into_iter().chain((1..=4).map(|i| SkeinStrategy::Seeded(seed.wrapping_add(i))));
        let values: Vec<String> = strategies
            .map(|s| conway_with(k, s).map(|p| p.to_string()).unwrap_or_else(|e| format!("error: {e}")))
            .collect();
        out.push(agreement(format!("10_skein_strategies/{name}"), values));
    }
    out
}

/// All checks, sorted by name.
pub fn verify_all(max_n: usize, seed: u64) -> Vec<Check> {
    let mut out = Vec::new();
    out.extend(wheel_alexander_checks(max_n));
    out.extend(expansion_checks(max_n));
    out.extend(first_wheel_checks());
    out.extend(decomposition_checks(max_n));
    out.extend(vanishing_checks(4));
    out.extend(wheel_weight_checks(max_n));
    out.extend(multiplicativity_checks());
    out.extend(finite_type_checks(seed, 5));
    out.extend(oracle_checks());
    out.extend(well_definedness_checks(seed));
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}
