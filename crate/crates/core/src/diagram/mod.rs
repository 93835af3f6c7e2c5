//! Oriented link diagrams as PD codes, singular diagrams and chord diagrams.
//!
//! A crossing is stored as `[a, b, c, d]`: the four arc labels met going
//! counterclockwise around the crossing, starting from the incoming
//! under-arc. The under-strand therefore runs `a -> c`. On a positive
//! crossing the over-strand runs `d -> b`, on a negative one `b -> d`. A
//! double point is stored with the arc order of its positive resolution.

mod chord;
mod fox;
mod gauss;
pub mod knots;
mod realize;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use chord::{enumerate_chord_diagrams, ChordDiagram};
pub use fox::{fox_alexander, fox_alexander_deleting, wirtinger_matrix};
pub use gauss::parse_gauss_code;
pub use realize::{realize_chord_diagram, realize_chord_diagram_with, AuxCrossings, Realization};

pub type ArcId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CrossingKind {
    Positive,
    Negative,
    Double,
}

impl CrossingKind {
    pub fn sign(self) -> Option<i32> {
        match self {
            CrossingKind::Positive => Some(1),
            CrossingKind::Negative => Some(-1),
            CrossingKind::Double => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub pd: [ArcId; 4],
    pub kind: CrossingKind,
}

impl Crossing {
    pub fn new(pd: [ArcId; 4], kind: CrossingKind) -> Self {
        Crossing { pd, kind }
    }

    fn over_in_pos(&self) -> usize {
        match self.kind {
            CrossingKind::Negative => 1,
            _ => 3,
        }
    }

    fn over_out_pos(&self) -> usize {
        match self.kind {
            CrossingKind::Negative => 3,
            _ => 1,
        }
    }

    pub fn under_in(&self) -> ArcId {
        self.pd[0]
    }

    pub fn under_out(&self) -> ArcId {
        self.pd[2]
    }

    pub fn over_in(&self) -> ArcId {
        self.pd[self.over_in_pos()]
    }

    pub fn over_out(&self) -> ArcId {
        self.pd[self.over_out_pos()]
    }

    /// True if position `pos` is an incoming end.
    pub fn is_incoming(&self, pos: usize) -> bool {
        pos == 0 || pos == self.over_in_pos()
    }

    /// Position where the strand entering at `pos` leaves.
    pub fn exit_of(&self, pos: usize) -> usize {
        (pos + 2) % 4
    }

    /// The crossing with over and under strands exchanged.
    fn switched(&self) -> Option<Crossing> {
        let [a, b, c, d] = self.pd;
        match self.kind {
            CrossingKind::Positive => Some(Crossing::new([d, a, b, c], CrossingKind::Negative)),
            CrossingKind::Negative => Some(Crossing::new([b, c, d, a], CrossingKind::Positive)),
            CrossingKind::Double => None,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("crossing index {0} out of range")]
    BadIndex(usize),
    #[error("crossing {0} is a double point")]
    DoublePoint(usize),
    #[error("crossing {0} is not a double point")]
    NotDoublePoint(usize),
    #[error("expected a knot, found {0} components")]
    NotAKnot(usize),
    #[error("arc {0} is not an arc of the diagram")]
    BadArc(ArcId),
    #[error("invalid diagram: {0:?}")]
    Invalid(Vec<DiagramIssue>),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("expected {expected} resolution choices, got {got}")]
    ResolutionArity { expected: usize, got: usize },
}

/// A single violated invariant reported by [`LinkDiagram::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagramIssue {
    /// The arc label occurs `count != 2` times.
    Arity { arc: ArcId, count: usize },
    /// The arc does not have exactly one incoming and one outgoing end.
    Orientation { arc: ArcId },
    /// A double point in a diagram that must be nonsingular.
    UnexpectedDoublePoint { crossing: usize },
}

/// Crossing and position where an arc ends.
#[derive(Clone, Copy, Debug)]
struct ArcEnds {
    head: (usize, usize),
}

/// An oriented link diagram: PD crossings plus a count of crossingless
/// circles.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    loops: usize,
}

impl LinkDiagram {
    /// A diagram from crossings and a number of extra crossingless circles.
    /// No validation is done; call [`LinkDiagram::validate`].
    pub fn new(crossings: Vec<Crossing>, loops: usize) -> Self {
        LinkDiagram { crossings, loops }
    }

    /// Builds and validates a diagram from `(pd, sign)` tuples.
    pub fn from_pd(tuples: &[([ArcId; 4], CrossingKind)]) -> Result<Self, DiagramError> {
        let crossings = tuples.iter().map(|(pd, k)| Crossing::new(*pd, *k)).collect();
        let loops = if tuples.is_empty() { 1 } else { 0 };
        let d = LinkDiagram { crossings, loops };
        d.validate().map_err(DiagramError::Invalid)?;
        Ok(d)
    }

    pub fn unknot() -> Self {
        LinkDiagram { crossings: Vec::new(), loops: 1 }
    }

    /// `n` unlinked circles with no crossings.
    pub fn unlink(n: usize) -> Self {
        LinkDiagram { crossings: Vec::new(), loops: n }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, i: usize) -> Option<&Crossing> {
        self.crossings.get(i)
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Number of crossingless circles.
    pub fn loops(&self) -> usize {
        self.loops
    }

    pub fn writhe(&self) -> i32 {
        self.crossings.iter().filter_map(|c| c.kind.sign()).sum()
    }

    /// Reports every violated invariant. Double points are rejected.
    pub fn validate(&self) -> Result<(), Vec<DiagramIssue>> {
        self.validate_inner(false)
    }

    fn validate_inner(&self, allow_double: bool) -> Result<(), Vec<DiagramIssue>> {
        let mut issues = Vec::new();
        let mut ends: BTreeMap<ArcId, (usize, usize)> = BTreeMap::new();
        for (i, x) in self.crossings.iter().enumerate() {
            if x.kind == CrossingKind::Double && !allow_double {
                issues.push(DiagramIssue::UnexpectedDoublePoint { crossing: i });
            }
            for (pos, arc) in x.pd.iter().enumerate() {
                let e = ends.entry(*arc).or_insert((0, 0));
                if x.is_incoming(pos) {
                    e.0 += 1;
                } else {
                    e.1 += 1;
                }
            }
        }
        for (arc, (inc, out)) in ends {
            if inc + out != 2 {
                issues.push(DiagramIssue::Arity { arc, count: inc + out });
            } else if inc != 1 {
                issues.push(DiagramIssue::Orientation { arc });
            }
        }
        if issues.is_empty() {
            Ok(())
        } else {
            Err(issues)
        }
    }

    fn arc_ends(&self) -> HashMap<ArcId, ArcEnds> {
        let mut heads = HashMap::new();
        for (i, x) in self.crossings.iter().enumerate() {
            for pos in (0..4).filter(|&p| x.is_incoming(p)) {
                heads.insert(x.pd[pos], ArcEnds { head: (i, pos) });
            }
        }
        heads
    }

    /// Arc following `arc` along the orientation, with the crossing and
    /// position where `arc` ends.
    fn successor_map(&self) -> HashMap<ArcId, (ArcId, usize, usize)> {
        let ends = self.arc_ends();
        ends.iter()
            .map(|(a, e)| {
                let (ci, pos) = e.head;
                let next = self.crossings[ci].pd[self.crossings[ci].exit_of(pos)];
                (*a, (next, ci, pos))
            })
            .collect()
    }

    /// Components as arc sequences in traversal order, each starting at its
    /// smallest arc; components are sorted by that arc. Crossingless
    /// circles are not included (see [`LinkDiagram::loops`]).
    pub fn components(&self) -> Vec<Vec<ArcId>> {
        let succ = self.successor_map();
        let mut arcs: Vec<ArcId> = succ.keys().copied().collect();
        arcs.sort_unstable();
        let mut seen = BTreeSet::new();
        let mut comps = Vec::new();
        for a in arcs {
            if seen.contains(&a) {
                continue;
            }
            let mut comp = vec![a];
            seen.insert(a);
            let mut cur = succ[&a].0;
            while cur != a {
                seen.insert(cur);
                comp.push(cur);
                cur = succ[&cur].0;
            }
            comps.push(comp);
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        self.components().len() + self.loops
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }

    /// Passage sequence of a component: `(arc, crossing, position)` for
    /// every crossing reached, starting from `start`.
    pub(crate) fn walk_from(&self, start: ArcId) -> Vec<(ArcId, usize, usize)> {
        let succ = self.successor_map();
        let mut out = Vec::new();
        let mut cur = start;
        loop {
            let (next, ci, pos) = succ[&cur];
            out.push((cur, ci, pos));
            cur = next;
            if cur == start {
                break;
            }
        }
        out
    }

    /// True if the components split into two groups that share no
    /// crossing. Crossingless circles count as separate groups.
    pub fn is_split(&self) -> bool {
        let comps = self.components();
        let total = comps.len() + self.loops;
        if total <= 1 {
            return false;
        }
        if self.loops > 0 {
            return true;
        }
        let mut comp_of = HashMap::new();
        for (k, c) in comps.iter().enumerate() {
            for a in c {
                comp_of.insert(*a, k);
            }
        }
        let mut uf = UnionFind::new(comps.len());
        for x in &self.crossings {
            let k0 = comp_of[&x.pd[0]];
            for a in &x.pd[1..] {
                uf.union(k0, comp_of[a]);
            }
        }
        let root = uf.find(0);
        (1..comps.len()).any(|k| uf.find(k) != root)
    }

    /// Flips crossing `i` between positive and negative.
    pub fn switch_crossing(&self, i: usize) -> Result<LinkDiagram, DiagramError> {
        let x = self.crossings.get(i).ok_or(DiagramError::BadIndex(i))?;
        let s = x.switched().ok_or(DiagramError::DoublePoint(i))?;
        let mut d = self.clone();
        d.crossings[i] = s;
        Ok(d)
    }

    /// Oriented smoothing of crossing `i`.
    pub fn smooth_crossing(&self, i: usize) -> Result<LinkDiagram, DiagramError> {
        let x = self.crossings.get(i).ok_or(DiagramError::BadIndex(i))?;
        let [a, b, c, d] = x.pd;
        let joins = match x.kind {
            CrossingKind::Positive | CrossingKind::Double => [(a, b), (d, c)],
            CrossingKind::Negative => [(a, d), (b, c)],
        };
        Ok(self.splice(i, joins))
    }

    /// Removes crossing `i` and joins each `(incoming, outgoing)` pair of
    /// arc ends there. Arcs left with no crossing become free circles.
    fn splice(&self, i: usize, joins: [(ArcId, ArcId); 2]) -> LinkDiagram {
        let removed = self.crossings[i];
        let local: Vec<ArcId> = removed.pd.to_vec();
        let index_of = |a: ArcId| local.iter().position(|x| *x == a).unwrap();
        let mut uf = UnionFind::new(4);
        // identical labels at the removed crossing are the same arc
        for p in 0..4 {
            for q in 0..p {
                if local[p] == local[q] {
                    uf.union(p, q);
                }
            }
        }
        for (u, v) in joins {
            uf.union(index_of(u), index_of(v));
        }
        let mut crossings: Vec<Crossing> = self.crossings.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, x)| *x).collect();
        let present: BTreeSet<ArcId> = crossings.iter().flat_map(|x| x.pd).collect();
        let mut rename: HashMap<ArcId, ArcId> = HashMap::new();
        let mut loops = self.loops;
        let mut classes: BTreeMap<usize, Vec<ArcId>> = BTreeMap::new();
        for (p, a) in local.iter().enumerate() {
            classes.entry(uf.find(p)).or_default().push(*a);
        }
        for members in classes.values() {
            let live: Vec<ArcId> = members.iter().copied().filter(|a| present.contains(a)).collect();
            match live.first() {
                None => loops += 1,
                Some(rep) => {
                    for a in members {
                        rename.insert(*a, *rep);
                    }
                }
            }
        }
        for x in &mut crossings {
            for a in &mut x.pd {
                if let Some(r) = rename.get(a) {
                    *a = *r;
                }
            }
        }
        LinkDiagram { crossings, loops }
    }

    /// Removes one Reidemeister I kink at crossing `i` if there is one.
    pub(crate) fn remove_kink(&self, i: usize) -> Option<LinkDiagram> {
        let x = &self.crossings[i];
        let [a, b, c, d] = x.pd;
        let (ui, uo, oi, oo) = (x.under_in(), x.under_out(), x.over_in(), x.over_out());
        // a loop arc joins an outgoing end to an adjacent incoming end
        let adjacent = [(a, b), (b, c), (c, d), (d, a)];
        if !adjacent.iter().any(|(p, q)| p == q) {
            return None;
        }
        Some(self.splice(i, [(ui, uo), (oi, oo)]))
    }

    /// Repeatedly removes Reidemeister I kinks.
    pub fn without_kinks(&self) -> LinkDiagram {
        let mut d = self.clone();
        'outer: loop {
            for i in 0..d.crossings.len() {
                if d.crossings[i].kind == CrossingKind::Double {
                    continue;
                }
                if let Some(next) = d.remove_kink(i) {
                    d = next;
                    continue 'outer;
                }
            }
            return d;
        }
    }

    /// Connected sum of two knots, cutting `d1` at arc `a1` and `d2` at arc
    /// `a2`. Arcs of `d2` are relabeled past those of `d1`.
    pub fn connected_sum(d1: &LinkDiagram, d2: &LinkDiagram, a1: ArcId, a2: ArcId) -> Result<LinkDiagram, DiagramError> {
        for d in [d1, d2] {
            let n = d.component_count();
            if n != 1 {
                return Err(DiagramError::NotAKnot(n));
            }
        }
        if d1.crossings.is_empty() {
            return Ok(d2.clone());
        }
        if d2.crossings.is_empty() {
            return Ok(d1.clone());
        }
        let offset = d1.max_arc();
        let shifted: Vec<Crossing> =
            d2.crossings.iter().map(|x| Crossing::new(x.pd.map(|a| a + offset), x.kind)).collect();
        let a2s = a2 + offset;
        let ends1 = d1.arc_ends();
        let ends2 = LinkDiagram { crossings: shifted.clone(), loops: 0 }.arc_ends();
        let h1 = ends1.get(&a1).ok_or(DiagramError::BadArc(a1))?.head;
        let h2 = ends2.get(&a2s).ok_or(DiagramError::BadArc(a2))?.head;
        // a1 now runs into d2 where a2 ended, and a2 into d1 where a1 ended
        let mut crossings = d1.crossings.clone();
        crossings[h1.0].pd[h1.1] = a2s;
        let n1 = crossings.len();
        crossings.extend(shifted);
        crossings[n1 + h2.0].pd[h2.1] = a1;
        Ok(LinkDiagram { crossings, loops: 0 })
    }

    /// Largest arc label in use (0 for crossingless diagrams).
    pub fn max_arc(&self) -> ArcId {
        self.crossings.iter().flat_map(|x| x.pd).max().unwrap_or(0)
    }

    /// All arc labels, sorted.
    pub fn arcs(&self) -> Vec<ArcId> {
        let set: BTreeSet<ArcId> = self.crossings.iter().flat_map(|x| x.pd).collect();
        set.into_iter().collect()
    }

    /// Relabels arcs `1..=2n` in traversal order, components taken in the
    /// order given by [`LinkDiagram::components`].
    pub fn relabeled(&self) -> LinkDiagram {
        let mut map = HashMap::new();
        let mut next = 1;
        for comp in self.components() {
            for a in comp {
                map.insert(a, next);
                next += 1;
            }
        }
        self.apply_labels(&map)
    }

    fn apply_labels(&self, map: &HashMap<ArcId, ArcId>) -> LinkDiagram {
        LinkDiagram {
            crossings: self.crossings.iter().map(|x| Crossing::new(x.pd.map(|a| map[&a]), x.kind)).collect(),
            loops: self.loops,
        }
    }

    /// A relabeling-invariant key for knot diagrams: the lexicographically
    /// least sorted crossing list over all traversal starting arcs. For
    /// links each component is started greedily, so equal keys still imply
    /// equal diagrams up to relabeling, but not conversely.
    pub fn canonical_key(&self) -> (usize, Vec<Crossing>) {
        let comps = self.components();
        if comps.is_empty() {
            return (self.loops, Vec::new());
        }
        let succ = self.successor_map();
        let mut map: HashMap<ArcId, ArcId> = HashMap::new();
        let mut next: ArcId = 1;
        let mut best_prefix: Vec<Crossing> = Vec::new();
        for comp in &comps {
            let mut best: Option<(Vec<Crossing>, HashMap<ArcId, ArcId>)> = None;
            for &start in comp {
                let mut m = map.clone();
                let mut k = next;
                let mut cur = start;
                loop {
                    m.insert(cur, k);
                    k += 1;
                    cur = succ[&cur].0;
                    if cur == start {
                        break;
                    }
                }
                // score by the crossings fully labeled so far
                let mut key: Vec<Crossing> = self
                    .crossings
                    .iter()
                    .filter(|x| x.pd.iter().all(|a| m.contains_key(a)))
                    .map(|x| Crossing::new(x.pd.map(|a| m[&a]), x.kind))
                    .collect();
                key.sort_unstable();
                if best.as_ref().is_none_or(|(b, _)| key < *b) {
                    best = Some((key, m));
                }
            }
            let (key, m) = best.unwrap();
            best_prefix = key;
            map = m;
            next += comp.len() as ArcId;
        }
        (self.loops, best_prefix)
    }
}

impl fmt::Debug for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PD[")?;
        for (i, x) in self.crossings.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let k = match x.kind {
                CrossingKind::Positive => "+",
                CrossingKind::Negative => "-",
                CrossingKind::Double => "d",
            };
            write!(f, "X{:?}{k}", x.pd)?;
        }
        write!(f, "]")?;
        if self.loops > 0 {
            write!(f, " + {} circle(s)", self.loops)?;
        }
        Ok(())
    }
}

/// A link diagram some of whose crossings may be double points.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SingularLinkDiagram {
    diagram: LinkDiagram,
}

impl SingularLinkDiagram {
    pub fn new(crossings: Vec<Crossing>, loops: usize) -> Result<Self, DiagramError> {
        let diagram = LinkDiagram { crossings, loops };
        diagram.validate_inner(true).map_err(DiagramError::Invalid)?;
        Ok(SingularLinkDiagram { diagram })
    }

    pub fn from_diagram(diagram: LinkDiagram) -> Self {
        SingularLinkDiagram { diagram }
    }

    pub fn validate(&self) -> Result<(), Vec<DiagramIssue>> {
        self.diagram.validate_inner(true)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.diagram.crossings
    }

    /// The underlying data, double points included.
    pub fn as_diagram(&self) -> &LinkDiagram {
        &self.diagram
    }

    /// Indices of the double points, ascending.
    pub fn double_points(&self) -> Vec<usize> {
        self.diagram.crossings.iter().enumerate().filter(|(_, x)| x.kind == CrossingKind::Double).map(|(i, _)| i).collect()
    }

    /// Marks crossing `i` as a double point.
    pub fn make_double(&self, i: usize) -> Result<SingularLinkDiagram, DiagramError> {
        let x = *self.diagram.crossings.get(i).ok_or(DiagramError::BadIndex(i))?;
        let positive = match x.kind {
            CrossingKind::Positive => x,
            CrossingKind::Negative => x.switched().unwrap(),
            CrossingKind::Double => return Ok(self.clone()),
        };
        let mut d = self.diagram.clone();
        d.crossings[i] = Crossing::new(positive.pd, CrossingKind::Double);
        Ok(SingularLinkDiagram { diagram: d })
    }

    /// Resolves the double points (in [`Self::double_points`] order):
    /// `true` gives the positive crossing, `false` the negative one.
    pub fn resolve(&self, positive: &[bool]) -> Result<LinkDiagram, DiagramError> {
        let doubles = self.double_points();
        if doubles.len() != positive.len() {
            return Err(DiagramError::ResolutionArity { expected: doubles.len(), got: positive.len() });
        }
        let mut d = self.diagram.clone();
        for (&i, &pos) in doubles.iter().zip(positive) {
            let x = Crossing::new(d.crossings[i].pd, CrossingKind::Positive);
            d.crossings[i] = if pos { x } else { x.switched().unwrap() };
        }
        Ok(d)
    }

    /// Chord diagram read off from the order in which a knot passes through
    /// its double points.
    pub fn chord_diagram(&self) -> Result<ChordDiagram, DiagramError> {
        let n = self.diagram.component_count();
        if n != 1 {
            return Err(DiagramError::NotAKnot(n));
        }
        if self.diagram.crossings.is_empty() {
            return Ok(ChordDiagram::empty());
        }
        let start = self.diagram.arcs()[0];
        let word: Vec<u32> = self
            .diagram
            .walk_from(start)
            .into_iter()
            .filter(|(_, ci, _)| self.diagram.crossings[*ci].kind == CrossingKind::Double)
            .map(|(_, ci, _)| ci as u32)
            .collect();
        ChordDiagram::new(word).map_err(|e| DiagramError::Parse(e.to_string()))
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::knots;
    use super::*;

    #[test]
    fn standard_diagrams_validate() {
        for d in [knots::trefoil(), knots::figure_eight(), knots::five_two(), knots::hopf_link(), LinkDiagram::unknot()] {
            assert_eq!(d.validate(), Ok(()), "{d:?}");
        }
    }

    #[test]
    fn arc_appearing_once_is_an_arity_error() {
        let d = LinkDiagram::new(vec![Crossing::new([1, 1, 2, 3], CrossingKind::Positive)], 0);
        let issues = d.validate().unwrap_err();
        assert!(issues.contains(&DiagramIssue::Arity { arc: 2, count: 1 }));
        assert!(issues.contains(&DiagramIssue::Arity { arc: 3, count: 1 }));
    }

    #[test]
    fn wrong_sign_is_an_orientation_error() {
        // the trefoil with one sign flipped but arcs unchanged
        let mut x: Vec<Crossing> = knots::trefoil().crossings().to_vec();
        x[0].kind = CrossingKind::Negative;
        let issues = LinkDiagram::new(x, 0).validate().unwrap_err();
        assert!(issues.iter().all(|i| matches!(i, DiagramIssue::Orientation { .. })));
        assert!(!issues.is_empty());
    }

    #[test]
    fn double_points_rejected_in_plain_diagrams() {
        let x = vec![Crossing::new([1, 1, 2, 2], CrossingKind::Double)];
        assert!(LinkDiagram::new(x.clone(), 0).validate().is_err());
        assert!(SingularLinkDiagram::new(x, 0).is_ok());
    }

    #[test]
    fn component_counts() {
        assert_eq!(knots::trefoil().component_count(), 1);
        assert_eq!(knots::hopf_link().component_count(), 2);
        assert_eq!(LinkDiagram::unknot().component_count(), 1);
        assert_eq!(LinkDiagram::unlink(3).component_count(), 3);
    }

    #[test]
    fn switch_is_an_involution() {
        let k = knots::five_two();
        for i in 0..k.crossing_count() {
            let s = k.switch_crossing(i).unwrap();
            assert_ne!(s, k);
            assert_eq!(s.validate(), Ok(()));
            assert_eq!(s.switch_crossing(i).unwrap(), k);
        }
        assert_eq!(k.switch_crossing(99), Err(DiagramError::BadIndex(99)));
    }

    #[test]
    fn smoothing_changes_component_count_by_one() {
        for k in [knots::trefoil(), knots::figure_eight(), knots::five_two(), knots::hopf_link(), knots::kink(true)] {
            let n = k.component_count() as i64;
            for i in 0..k.crossing_count() {
                let s = k.smooth_crossing(i).unwrap();
                assert_eq!(s.validate(), Ok(()));
                assert_eq!((s.component_count() as i64 - n).abs(), 1, "{k:?} at {i}");
            }
        }
    }

    #[test]
    fn smoothing_hopf_gives_a_one_crossing_knot() {
        let s = knots::hopf_link().smooth_crossing(0).unwrap();
        assert_eq!(s.crossing_count(), 1);
        assert!(s.is_knot());
        assert_eq!(s.without_kinks(), LinkDiagram::unknot());
    }

    #[test]
    fn smoothing_a_kink_gives_two_circles() {
        let s = knots::kink(true).smooth_crossing(0).unwrap();
        assert_eq!(s.crossing_count(), 0);
        assert_eq!(s.loops(), 2);
    }

    #[test]
    fn kink_removal() {
        assert_eq!(knots::kink(false).without_kinks(), LinkDiagram::unknot());
        let k = knots::trefoil();
        assert_eq!(k.without_kinks(), k);
    }

    #[test]
    fn split_detection() {
        assert!(!knots::hopf_link().is_split());
        assert!(LinkDiagram::unlink(2).is_split());
        let s = knots::kink(true).smooth_crossing(0).unwrap();
        assert!(s.is_split());
        assert!(!knots::trefoil().is_split());
    }

    #[test]
    fn connected_sum_adds_crossings() {
        let t = knots::trefoil();
        let f = knots::figure_eight();
        let s = LinkDiagram::connected_sum(&t, &f, 1, 1).unwrap();
        assert_eq!(s.validate(), Ok(()));
        assert_eq!(s.crossing_count(), 7);
        assert!(s.is_knot());
        assert_eq!(LinkDiagram::connected_sum(&LinkDiagram::unknot(), &t, 0, 1).unwrap(), t);
        assert!(matches!(
            LinkDiagram::connected_sum(&knots::hopf_link(), &t, 1, 1),
            Err(DiagramError::NotAKnot(2))
        ));
    }

    #[test]
    fn canonical_key_ignores_labels() {
        let k = knots::figure_eight();
        let map: HashMap<ArcId, ArcId> = k.arcs().into_iter().map(|a| (a, 100 - 3 * a)).collect();
        let relabeled = k.apply_labels(&map);
        assert_eq!(k.canonical_key(), relabeled.canonical_key());
        assert_ne!(k.canonical_key(), knots::trefoil().canonical_key());
    }

    #[test]
    fn resolving_double_points() {
        let s = SingularLinkDiagram::from_diagram(knots::trefoil()).make_double(0).unwrap();
        assert_eq!(s.double_points(), vec![0]);
        assert_eq!(s.resolve(&[true]).unwrap(), knots::trefoil());
        assert_eq!(s.resolve(&[false]).unwrap(), knots::trefoil().switch_crossing(0).unwrap());
        assert!(s.resolve(&[]).is_err());
    }
}
