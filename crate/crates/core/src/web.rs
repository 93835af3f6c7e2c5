//! Web (Jacobi) diagrams on an oriented circle and STU rewriting.
//!
//! Half-edges are numbered so that leg `i` is half-edge `i` (legs in
//! counterclockwise order along the circle) and slot `s` of internal vertex
//! `v` is half-edge `L + 3v + s`, the three slots listed counterclockwise.
//! `mate` pairs the half-edges into edges.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::ChordDiagram;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WebError {
    #[error("wheels need an even positive number of spokes, got {0}")]
    BadWheel(usize),
    #[error("malformed web diagram: {0}")]
    Malformed(String),
    #[error("a dashed component does not touch the circle")]
    NotReducible,
}

/// A web diagram, stored in canonical form so that `==` is isomorphism
/// (rotation of the circle plus relabeling respecting cyclic orders).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WebDiagram {
    legs: usize,
    internal: usize,
    mate: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub degree: usize,
    pub chi: i64,
    pub primitive: bool,
    pub complete: bool,
}

/// Free-form description used for construction: ends carry arbitrary
/// integer ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WebSpec {
    /// Leg ends in counterclockwise order along the circle.
    pub legs: Vec<u64>,
    pub internal: usize,
    pub edges: Vec<[u64; 2]>,
    /// Ends at each internal vertex, counterclockwise.
    pub cyclic: Vec<[u64; 3]>,
}

impl WebSpec {
    pub fn build(&self) -> Result<WebDiagram, WebError> {
        if self.cyclic.len() != self.internal {
            return Err(WebError::Malformed(format!(
                "internal = {} but {} cyclic orders given",
                self.internal,
                self.cyclic.len()
            )));
        }
        let mut index: HashMap<u64, usize> = HashMap::new();
        let all = self.legs.iter().chain(self.cyclic.iter().flatten());
        for (k, e) in all.enumerate() {
            if index.insert(*e, k).is_some() {
                return Err(WebError::Malformed(format!("end {e} used twice")));
            }
        }
        let n = index.len();
        let mut mate = vec![usize::MAX; n];
        for [a, b] in &self.edges {
            let ia = *index.get(a).ok_or_else(|| WebError::Malformed(format!("unknown end {a}")))?;
            let ib = *index.get(b).ok_or_else(|| WebError::Malformed(format!("unknown end {b}")))?;
            if ia == ib || mate[ia] != usize::MAX || mate[ib] != usize::MAX {
                return Err(WebError::Malformed(format!("edge [{a}, {b}] reuses an end")));
            }
            mate[ia] = ib;
            mate[ib] = ia;
        }
        if let Some(k) = mate.iter().position(|m| *m == usize::MAX) {
            let name = self.legs.iter().chain(self.cyclic.iter().flatten()).nth(k).unwrap();
            return Err(WebError::Malformed(format!("end {name} is not on an edge")));
        }
        WebDiagram::new(self.legs.len(), self.internal, mate)
    }
}

struct Numbering {
    /// new id and slot offset of each old vertex
    vert: Vec<Option<(usize, usize)>>,
    order: Vec<usize>,
}

impl WebDiagram {
    /// Validates and canonicalizes.
    pub fn new(legs: usize, internal: usize, mate: Vec<usize>) -> Result<Self, WebError> {
        if mate.len() != legs + 3 * internal {
            return Err(WebError::Malformed(format!("{} half-edges for {legs} legs and {internal} vertices", mate.len())));
        }
        for (h, &m) in mate.iter().enumerate() {
            if m >= mate.len() || m == h || mate[m] != h {
                return Err(WebError::Malformed(format!("half-edge {h} is not properly paired")));
            }
        }
        Ok(WebDiagram { legs, internal, mate }.canonical())
    }

    pub fn empty() -> Self {
        WebDiagram { legs: 0, internal: 0, mate: Vec::new() }
    }

    pub fn theta() -> Self {
        WebDiagram { legs: 2, internal: 0, mate: vec![1, 0] }
    }

    /// The wheel with `spokes` spokes.
    pub fn wheel(spokes: usize) -> Result<Self, WebError> {
        if spokes == 0 || spokes % 2 == 1 {
            return Err(WebError::BadWheel(spokes));
        }
        let l = spokes;
        let slot = |v: usize, s: usize| l + 3 * (v % l) + s;
        let mut mate = vec![0; 4 * l];
        for v in 0..l {
            // slots: spoke, towards v+1, towards v-1 (counterclockwise)
            mate[v] = slot(v, 0);
            mate[slot(v, 0)] = v;
            mate[slot(v, 1)] = slot(v + 1, 2);
            mate[slot(v + 1, 2)] = slot(v, 1);
        }
        Self::new(l, l, mate)
    }

    /// Two legs, four vertices: each leg vertex joins a doubled edge, and
    /// the two bubbles are joined by a single edge.
    pub fn double_bubble() -> Self {
        WebSpec {
            legs: vec![0, 1],
            internal: 4,
            // i1 = ends 10.., i2 = 20.., i3 = 30.., i4 = 40..
            cyclic: vec![[10, 11, 12], [20, 21, 22], [30, 31, 32], [40, 41, 42]],
            edges: vec![[0, 20], [21, 10], [22, 11], [12, 30], [31, 40], [32, 41], [42, 1]],
        }
        .build()
        .expect("well-formed")
    }

    pub fn from_chord_diagram(cd: &ChordDiagram) -> Self {
        let mut mate = vec![0; cd.word().len()];
        for (a, b) in cd.chords() {
            mate[a] = b;
            mate[b] = a;
        }
        WebDiagram { legs: mate.len(), internal: 0, mate }.canonical()
    }

    /// The chord diagram, if there are no internal vertices.
    pub fn to_chord_diagram(&self) -> Option<ChordDiagram> {
        if self.internal > 0 {
            return None;
        }
        let word: Vec<u32> = (0..self.legs).map(|i| i.min(self.mate[i]) as u32).collect();
        Some(ChordDiagram::new(word).expect("every chord has two ends"))
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn internal(&self) -> usize {
        self.internal
    }

    pub fn mate(&self) -> &[usize] {
        &self.mate
    }

    pub fn degree(&self) -> usize {
        (self.legs + self.internal) / 2
    }

    pub fn chi(&self) -> i64 {
        (self.legs as i64 - self.internal as i64) / 2
    }

    fn is_leg(&self, h: usize) -> bool {
        h < self.legs
    }

    fn vertex_of(&self, h: usize) -> Option<(usize, usize)> {
        (h >= self.legs).then(|| ((h - self.legs) / 3, (h - self.legs) % 3))
    }

    fn slot(&self, v: usize, s: usize) -> usize {
        self.legs + 3 * v + s
    }

    /// Connected components of the dashed graph, as lists of nodes: legs
    /// are `0..L`, vertex `v` is `L + v`.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let nodes = self.legs + self.internal;
        let node_of = |h: usize| if h < self.legs { h } else { self.legs + (h - self.legs) / 3 };
        let mut comp = vec![usize::MAX; nodes];
        let mut out = Vec::new();
        for start in 0..nodes {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut k = 0;
            while k < members.len() {
                let u = members[k];
                let halves: Vec<usize> = if u < self.legs { vec![u] } else { (0..3).map(|s| self.slot(u - self.legs, s)).collect() };
                for h in halves {
                    let w = node_of(self.mate[h]);
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn classify(&self) -> Classification {
        let complete = (0..self.internal).all(|v| (0..3).filter(|&s| self.is_leg(self.mate[self.slot(v, s)])).count() <= 1);
        let primitive = self.legs + self.internal > 0 && self.components().len() == 1;
        Classification { degree: self.degree(), chi: self.chi(), primitive, complete }
    }

    /// True if some chord (leg-to-leg edge) separates the circle into two
    /// arcs with no dashed component meeting both.
    pub fn has_isolated_chord(&self) -> bool {
        if let Some(cd) = self.to_chord_diagram() {
            return cd.has_isolated_chord();
        }
        let comps = self.components();
        let mut comp_of = vec![0; self.legs];
        for (k, c) in comps.iter().enumerate() {
            for &u in c.iter().filter(|&&u| u < self.legs) {
                comp_of[u] = k;
            }
        }
        (0..self.legs).filter(|&a| self.is_leg(self.mate[a]) && a < self.mate[a]).any(|a| {
            let b = self.mate[a];
            let inside: std::collections::BTreeSet<usize> = (a + 1..b).map(|i| comp_of[i]).collect();
            let outside: std::collections::BTreeSet<usize> = (0..a).chain(b + 1..self.legs).map(|i| comp_of[i]).collect();
            inside.is_disjoint(&outside)
        })
    }

    fn new_half(&self, num: &Numbering, rot: usize, h: usize) -> usize {
        match self.vertex_of(h) {
            None => (h + self.legs - rot) % self.legs.max(1),
            Some((v, s)) => {
                let (nv, off) = num.vert[v].expect("numbered");
                self.legs + 3 * nv + (s + 3 - off) % 3
            }
        }
    }

    fn visit(&self, num: &mut Numbering, h: usize) {
        if let Some((v, s)) = self.vertex_of(h) {
            if num.vert[v].is_none() {
                num.vert[v] = Some((num.order.len(), s));
                num.order.push(v);
            }
        }
    }

    /// Breadth-first numbering of vertices from `num.order[from..]`.
    fn spread(&self, num: &mut Numbering, from: usize) {
        let mut k = from;
        while k < num.order.len() {
            let v = num.order[k];
            let off = num.vert[v].unwrap().1;
            for j in 0..3 {
                let h = self.mate[self.slot(v, (off + j) % 3)];
                self.visit(num, h);
            }
            k += 1;
        }
    }

    fn relabel(&self, num: &Numbering, rot: usize) -> Vec<usize> {
        let mut mate = vec![0; self.mate.len()];
        for h in 0..self.mate.len() {
            mate[self.new_half(num, rot, h)] = self.new_half(num, rot, self.mate[h]);
        }
        mate
    }

    fn canonical(&self) -> WebDiagram {
        let mut best: Option<Vec<usize>> = None;
        for rot in 0..self.legs.max(1) {
            let mut num = Numbering { vert: vec![None; self.internal], order: Vec::new() };
            for k in 0..self.legs {
                self.visit(&mut num, self.mate[(rot + k) % self.legs]);
            }
            self.spread(&mut num, 0);
            self.number_closed_components(&mut num);
            let mate = self.relabel(&num, rot);
            if best.as_ref().is_none_or(|b| mate < *b) {
                best = Some(mate);
            }
        }
        WebDiagram { legs: self.legs, internal: self.internal, mate: best.unwrap_or_default() }
    }

    /// Numbers components that never reach a leg, each from its best start,
    /// components sorted by their local code.
    fn number_closed_components(&self, num: &mut Numbering) {
        let mut pending: Vec<(Vec<usize>, Vec<(usize, usize)>)> = Vec::new();
        let mut claimed = vec![false; self.internal];
        for v in 0..self.internal {
            if num.vert[v].is_some() || claimed[v] {
                continue;
            }
            let mut best: Option<(Vec<usize>, Vec<(usize, usize)>)> = None;
            for start in 0..self.internal {
                for s in 0..3 {
                    let mut local = Numbering { vert: vec![None; self.internal], order: Vec::new() };
                    local.vert[start] = Some((0, s));
                    local.order.push(start);
                    self.spread(&mut local, 0);
                    if !local.order.contains(&v) {
                        break;
                    }
                    let mut code = Vec::new();
                    for &u in &local.order {
                        let off = local.vert[u].unwrap().1;
                        for j in 0..3 {
                            let (w, t) = self.vertex_of(self.mate[self.slot(u, (off + j) % 3)]).unwrap();
                            let (nw, woff) = local.vert[w].unwrap();
                            code.push(3 * nw + (t + 3 - woff) % 3);
                        }
                    }
                    let assign: Vec<(usize, usize)> = local.order.iter().map(|&u| (u, local.vert[u].unwrap().1)).collect();
                    if best.as_ref().is_none_or(|(c, _)| code < *c) {
                        best = Some((code, assign));
                    }
                }
            }
            let (code, assign) = best.expect("component has a start");
            for (u, _) in &assign {
                claimed[*u] = true;
            }
            pending.push((code, assign));
        }
        pending.sort();
        for (_, assign) in pending {
            for (u, off) in assign {
                num.vert[u] = Some((num.order.len(), off));
                num.order.push(u);
            }
        }
    }

    /// True if every internal vertex is connected to some leg.
    pub fn touches_circle(&self) -> bool {
        self.components().iter().all(|c| c.iter().any(|&u| u < self.legs))
    }

    /// Internal vertices with a leg neighbour, ascending, with that leg's
    /// slot (the lowest one if there are two).
    fn leg_adjacent(&self) -> Vec<(usize, Vec<usize>)> {
        (0..self.internal)
            .filter_map(|v| {
                let slots: Vec<usize> = (0..3).filter(|&s| self.is_leg(self.mate[self.slot(v, s)])).collect();
                (!slots.is_empty()).then_some((v, slots))
            })
            .collect()
    }

    /// One STU step at vertex `v` through its leg slot `s`: returns
    /// `(T, U)` with `S = T − U`. If the other two ends are `x`, `y` in
    /// counterclockwise order after the leg, `T` meets them on the circle
    /// in the order `y, x` and `U` in the order `x, y`.
    pub fn stu_step(&self, v: usize, s: usize) -> Result<(WebDiagram, WebDiagram), WebError> {
        if v >= self.internal || s >= 3 || !self.is_leg(self.mate[self.slot(v, s)]) {
            return Err(WebError::Malformed(format!("slot {s} of vertex {v} is not attached to a leg")));
        }
        let leg = self.mate[self.slot(v, s)];
        let hx = self.slot(v, (s + 1) % 3);
        let hy = self.slot(v, (s + 2) % 3);
        let (mx, my) = (self.mate[hx], self.mate[hy]);
        let n = self.mate.len() as u64;
        let (new_x, new_y) = (n, n + 1);
        let build = |first: u64, second: u64| -> Result<WebDiagram, WebError> {
            let mut legs = Vec::with_capacity(self.legs + 1);
            for i in 0..self.legs {
                if i == leg {
                    legs.extend([first, second]);
                } else {
                    legs.push(i as u64);
                }
            }
            let cyclic: Vec<[u64; 3]> =
                (0..self.internal).filter(|&u| u != v).map(|u| [0, 1, 2].map(|t| self.slot(u, t) as u64)).collect();
            let mine = |h: usize| h == leg || self.vertex_of(h).is_some_and(|(u, _)| u == v);
            let mut edges: Vec<[u64; 2]> =
                (0..self.mate.len()).filter(|&h| h < self.mate[h] && !mine(h) && !mine(self.mate[h])).map(|h| [h as u64, self.mate[h] as u64]).collect();
            if mx == hy {
                edges.push([new_x, new_y]);
            } else {
                edges.push([new_x, mx as u64]);
                edges.push([new_y, my as u64]);
            }
            WebSpec { legs, internal: self.internal - 1, edges, cyclic }.build()
        };
        Ok((build(new_y, new_x)?, build(new_x, new_y)?))
    }

    /// JSON-friendly description; ends are numbered as half-edges.
    pub fn to_spec(&self) -> WebSpec {
        WebSpec {
            legs: (0..self.legs as u64).collect(),
            internal: self.internal,
            edges: (0..self.mate.len()).filter(|&h| h < self.mate[h]).map(|h| [h as u64, self.mate[h] as u64]).collect(),
            cyclic: (0..self.internal).map(|v| [0, 1, 2].map(|s| self.slot(v, s) as u64)).collect(),
        }
    }
}

impl fmt::Debug for WebDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Web(L={}, I={}, mate={:?})", self.legs, self.internal, self.mate)
    }
}

/// Legs of `d2` inserted, in order, into the circle arc of `d1` between its
/// last and first legs. The dashed graphs stay disjoint.
pub fn diagram_connected_sum(d1: &WebDiagram, d2: &WebDiagram) -> WebDiagram {
    let off = d1.mate.len() as u64;
    let mut s1 = d1.to_spec();
    let s2 = d2.to_spec();
    s1.legs.extend(s2.legs.iter().map(|e| e + off));
    s1.internal += s2.internal;
    s1.cyclic.extend(s2.cyclic.iter().map(|c| c.map(|e| e + off)));
    s1.edges.extend(s2.edges.iter().map(|[a, b]| [a + off, b + off]));
    s1.build().expect("sum of valid diagrams")
}

/// A finite rational combination of web diagrams.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiagramCombination {
    terms: BTreeMap<WebDiagram, BigRational>,
}

impl DiagramCombination {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(d: WebDiagram) -> Self {
        let mut c = Self::new();
        c.add_term(d, BigRational::one());
        c
    }

    pub fn add_term(&mut self, d: WebDiagram, coeff: BigRational) {
        let entry = self.terms.entry(d).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, other: &DiagramCombination) -> DiagramCombination {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, r: &BigRational) -> DiagramCombination {
        if r.is_zero() {
            return Self::new();
        }
        DiagramCombination { terms: self.terms.iter().map(|(d, c)| (d.clone(), c * r)).collect() }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WebDiagram, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The terms as chord diagrams, if every term is one.
    pub fn chord_terms(&self) -> Option<Vec<(ChordDiagram, BigRational)>> {
        self.terms.iter().map(|(d, c)| d.to_chord_diagram().map(|cd| (cd, c.clone()))).collect()
    }
}

/// Which leg-adjacent vertex the next STU step uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum StuOrder {
    #[default]
    LowestIndex,
    HighestIndex,
    Seeded(u64),
}

/// Rewrites `d` into chord diagrams with the default vertex order.
pub fn stu_reduce(d: &WebDiagram) -> Result<DiagramCombination, WebError> {
    stu_reduce_with(&DiagramCombination::single(d.clone()), StuOrder::LowestIndex)
}

/// Rewrites every term of `x` into chord diagrams. Each step removes one
/// internal vertex.
pub fn stu_reduce_with(x: &DiagramCombination, order: StuOrder) -> Result<DiagramCombination, WebError> {
    if x.terms().any(|(d, _)| !d.touches_circle()) {
        return Err(WebError::NotReducible);
    }
    let mut rng = match order {
        StuOrder::Seeded(s) => Some(ChaCha8Rng::seed_from_u64(s)),
        _ => None,
    };
    let mut done = DiagramCombination::new();
    let mut work: Vec<(WebDiagram, BigRational)> = x.terms().map(|(d, c)| (d.clone(), c.clone())).collect();
    while let Some((d, c)) = work.pop() {
        let candidates = d.leg_adjacent();
        if candidates.is_empty() {
            debug_assert_eq!(d.internal(), 0);
            done.add_term(d, c);
            continue;
        }
        let (v, slots) = match (&mut rng, order) {
            (Some(r), _) => &candidates[r.gen_range(0..candidates.len())],
            (None, StuOrder::HighestIndex) => candidates.last().unwrap(),
            (None, _) => &candidates[0],
        };
        let s = match &mut rng {
            Some(r) => slots[r.gen_range(0..slots.len())],
            None => slots[0],
        };
        let (t, u) = d.stu_step(*v, s)?;
        work.push((t, c.clone()));
        work.push((u, -c));
    }
    Ok(done)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::enumerate_chord_diagrams;

    fn y_diagram() -> WebDiagram {
        WebSpec { legs: vec![0, 1, 2], internal: 1, cyclic: vec![[10, 11, 12]], edges: vec![[0, 10], [1, 11], [2, 12]] }
            .build()
            .unwrap()
    }

    #[test]
    fn wheels() {
        for k in 1..=6 {
            let w = WebDiagram::wheel(2 * k).unwrap();
            let c = w.classify();
            assert_eq!((w.legs(), w.internal()), (2 * k, 2 * k));
            assert_eq!(c, Classification { degree: 2 * k, chi: 0, primitive: true, complete: true });
        }
        assert_eq!(WebDiagram::wheel(3), Err(WebError::BadWheel(3)));
        assert_eq!(WebDiagram::wheel(0), Err(WebError::BadWheel(0)));
    }

    #[test]
    fn theta_and_double_bubble() {
        assert_eq!(WebDiagram::theta().classify(), Classification { degree: 1, chi: 1, primitive: true, complete: true });
        assert_eq!(
            WebDiagram::double_bubble().classify(),
            Classification { degree: 3, chi: -1, primitive: true, complete: true }
        );
    }

    #[test]
    fn canonical_form_ignores_rotation_and_labels() {
        let a = WebSpec { legs: vec![5, 6, 7], internal: 1, cyclic: vec![[1, 2, 3]], edges: vec![[5, 2], [6, 3], [7, 1]] }
            .build()
            .unwrap();
        assert_eq!(a, y_diagram());
        // reversing the cyclic order gives a different diagram
        let b = WebSpec { legs: vec![0, 1, 2], internal: 1, cyclic: vec![[10, 12, 11]], edges: vec![[0, 10], [1, 11], [2, 12]] }
            .build()
            .unwrap();
        assert_ne!(b, y_diagram());
    }

    #[test]
    fn chord_diagrams_round_trip() {
        for n in 0..=4 {
            for cd in enumerate_chord_diagrams(n) {
                assert_eq!(WebDiagram::from_chord_diagram(&cd).to_chord_diagram(), Some(cd));
            }
        }
    }

    #[test]
    fn stu_on_chord_diagram_is_identity() {
        let cd = ChordDiagram::new(vec![0, 1, 0, 1]).unwrap();
        let r = stu_reduce(&WebDiagram::from_chord_diagram(&cd)).unwrap();
        assert_eq!(r.chord_terms().unwrap(), vec![(cd, BigRational::one())]);
    }

    #[test]
    fn stu_on_y_is_a_difference_of_two_chord_diagrams() {
        let r = stu_reduce(&y_diagram()).unwrap();
        let terms = r.chord_terms().unwrap();
        assert_eq!(terms.len(), 2);
        let mut coeffs: Vec<i64> = terms.iter().map(|(_, c)| if c.is_one() { 1 } else { -1 }).collect();
        coeffs.sort();
        assert_eq!(coeffs, vec![-1, 1]);
        assert!(terms.iter().all(|(cd, _)| cd.degree() == 2));
    }

    #[test]
    fn stu_preserves_degree_and_terminates() {
        for d in [WebDiagram::wheel(2).unwrap(), WebDiagram::wheel(4).unwrap(), WebDiagram::double_bubble(), y_diagram()] {
            for order in [StuOrder::LowestIndex, StuOrder::HighestIndex, StuOrder::Seeded(3)] {
                let r = stu_reduce_with(&DiagramCombination::single(d.clone()), order).unwrap();
                for (cd, _) in r.chord_terms().unwrap() {
                    assert_eq!(cd.degree(), d.degree());
                }
            }
        }
    }

    #[test]
    fn closed_components_are_not_reducible() {
        // theta graph with no legs
        let closed = WebSpec {
            legs: vec![],
            internal: 2,
            cyclic: vec![[0, 1, 2], [3, 4, 5]],
            edges: vec![[0, 3], [1, 5], [2, 4]],
        }
        .build()
        .unwrap();
        assert_eq!(stu_reduce(&closed), Err(WebError::NotReducible));
        let sum = diagram_connected_sum(&WebDiagram::theta(), &closed);
        assert_eq!(stu_reduce(&sum), Err(WebError::NotReducible));
        assert_eq!(sum.degree(), 2);
    }

    #[test]
    fn connected_sums() {
        let tt = diagram_connected_sum(&WebDiagram::theta(), &WebDiagram::theta());
        assert_eq!(tt.to_chord_diagram(), Some(ChordDiagram::new(vec![0, 0, 1, 1]).unwrap()));
        let w = WebDiagram::wheel(2).unwrap();
        let ww = diagram_connected_sum(&w, &w);
        assert_eq!(ww.degree(), 4);
        assert_eq!(ww.components().len(), 2);
        assert_eq!(ww.chi(), 0);
        let wb = diagram_connected_sum(&w, &WebDiagram::double_bubble());
        assert_eq!(wb.chi(), -1);
    }

    #[test]
    fn isolated_chords() {
        assert!(WebDiagram::theta().has_isolated_chord());
        let w = WebDiagram::wheel(2).unwrap();
        assert!(!w.has_isolated_chord());
        assert!(diagram_connected_sum(&w, &WebDiagram::theta()).has_isolated_chord());
    }

    #[test]
    fn malformed_specs() {
        let bad = WebSpec { legs: vec![0, 1], internal: 0, cyclic: vec![], edges: vec![[0, 0]] };
        assert!(bad.build().is_err());
        let dangling = WebSpec { legs: vec![0, 1], internal: 0, cyclic: vec![], edges: vec![] };
        assert!(dangling.build().is_err());
    }
}
