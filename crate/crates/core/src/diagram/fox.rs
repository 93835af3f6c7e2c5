use std::collections::HashMap;

use super::{ArcId, CrossingKind, DiagramError, LinkDiagram, UnionFind};
use crate::ring::{LaurentPoly, PolyMatrix};

/// Abelianized Fox Jacobian of the Wirtinger presentation: one row per
/// crossing, one column per over-arc (a maximal run of PD arcs joined
/// through over-crossings).
///
/// The relation at a crossing of sign `e` is `x_out = x_o^e x_in x_o^-e`;
/// its abelianized Fox derivatives are `(1 - t, t, -1)` for `e = +1` and
/// `(1 - t, -1, t)` after clearing the unit for `e = -1`, on the columns of
/// the over-arc, the incoming and the outgoing under-arc.
pub fn wirtinger_matrix(d: &LinkDiagram) -> Result<PolyMatrix, DiagramError> {
    let arcs = d.arcs();
    let index: HashMap<ArcId, usize> = arcs.iter().enumerate().map(|(i, a)| (*a, i)).collect();
    let mut uf = UnionFind::new(arcs.len());
    for (i, x) in d.crossings().iter().enumerate() {
        if x.kind == CrossingKind::Double {
            return Err(DiagramError::DoublePoint(i));
        }
        uf.union(index[&x.over_in()], index[&x.over_out()]);
    }
    let mut gens: HashMap<usize, usize> = HashMap::new();
    for i in 0..arcs.len() {
        let r = uf.find(i);
        let next = gens.len();
        gens.entry(r).or_insert(next);
    }
    let mut col = |a: ArcId| gens[&uf.find(index[&a])];
    let t = LaurentPoly::t();
    let one = LaurentPoly::one();
    let one_minus_t = &one - &t;
    let mut m = PolyMatrix::zeros(d.crossing_count(), gens.len());
    for (i, x) in d.crossings().iter().enumerate() {
        let (c_in, c_out) = match x.kind {
            CrossingKind::Positive => (t.clone(), -&one),
            _ => (-&one, t.clone()),
        };
        for (arc, v) in [(x.over_in(), one_minus_t.clone()), (x.under_in(), c_in), (x.under_out(), c_out)] {
            let j = col(arc);
            let cur = m.get(i, j).clone();
            m.set(i, j, &cur + &v);
        }
    }
    Ok(m)
}

/// Alexander polynomial of a knot diagram (up to units) from the Wirtinger
/// matrix with the last relation and the given generator column removed.
pub fn fox_alexander_deleting(d: &LinkDiagram, column: usize) -> Result<LaurentPoly, DiagramError> {
    let n = d.component_count();
    if n != 1 {
        return Err(DiagramError::NotAKnot(n));
    }
    if d.crossing_count() == 0 {
        return Ok(LaurentPoly::one());
    }
    let m = wirtinger_matrix(d)?;
    if column >= m.cols() {
        return Err(DiagramError::BadIndex(column));
    }
    Ok(m.minor(m.rows() - 1, column).det().expect("knot Wirtinger matrices are square"))
}

/// Alexander polynomial of a knot diagram, up to units `±t^k`.
pub fn fox_alexander(d: &LinkDiagram) -> Result<LaurentPoly, DiagramError> {
    fox_alexander_deleting(d, 0)
}

#[cfg(test)]
mod tests {
    use super::super::knots;
    use super::*;
    use crate::ring::{symmetric_normalize, unit_equivalent};

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn kinks_have_trivial_polynomial() {
        assert!(fox_alexander(&knots::kink(true)).unwrap().is_one());
        assert!(fox_alexander(&knots::kink(false)).unwrap().is_one());
        assert!(fox_alexander(&LinkDiagram::unknot()).unwrap().is_one());
    }

    #[test]
    fn trefoil_and_figure_eight() {
        assert!(unit_equivalent(&fox_alexander(&knots::trefoil()).unwrap(), &lp(&[(2, 1), (1, -1), (0, 1)])));
        assert!(unit_equivalent(&fox_alexander(&knots::figure_eight()).unwrap(), &lp(&[(2, 1), (1, -3), (0, 1)])));
    }

    #[test]
    fn five_two_and_six_one() {
        let p = symmetric_normalize(&fox_alexander(&knots::five_two()).unwrap()).unwrap();
        assert_eq!(p, lp(&[(1, 2), (0, -3), (-1, 2)]));
        let p = symmetric_normalize(&fox_alexander(&knots::six_one()).unwrap()).unwrap();
        assert_eq!(p, lp(&[(1, -2), (0, 5), (-1, -2)]));
    }

    #[test]
    fn every_column_deletion_agrees() {
        for k in [knots::trefoil(), knots::figure_eight()] {
            let cols = wirtinger_matrix(&k).unwrap().cols();
            let base = fox_alexander_deleting(&k, 0).unwrap();
            for j in 0..cols {
                assert!(unit_equivalent(&fox_alexander_deleting(&k, j).unwrap(), &base), "column {j}");
            }
        }
    }

    #[test]
    fn links_are_rejected() {
        assert_eq!(fox_alexander(&knots::hopf_link()), Err(DiagramError::NotAKnot(2)));
    }
}
