//! Clasper graphs: chord claspers as crossing changes, brackets, the
//! alternating sum over subgraphs, and the reductions used to show that
//! surgery on a complete graph of negative Euler characteristic is trivial.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{DiagramError, LinkDiagram};
use crate::web::{WebDiagram, WebSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClasperError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("malformed clasper graph: {0}")]
    Malformed(String),
    #[error("node {0} is not an internal node")]
    NotInternal(usize),
    #[error("two claspers share the crossing {0}")]
    OverlappingSites(usize),
    #[error("the underlying diagram is not connected")]
    NotPrimitive,
    #[error("some internal node has two or more leaf neighbours")]
    NotComplete,
    #[error("every internal node has a leaf neighbour")]
    NoEligibleVertex,
}

/// A node of a clasper graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Leaf(usize),
    Internal(usize),
    Free(usize),
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Leaf(i) => write!(f, "l{i}"),
            Node::Internal(i) => write!(f, "i{i}"),
            Node::Free(i) => write!(f, "f{i}"),
        }
    }
}

impl std::str::FromStr for Node {
    type Err = ClasperError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ClasperError::Malformed(format!("bad node name {s:?}"));
        let (kind, idx) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(k, _)| k));
        let i: usize = idx.parse().map_err(|_| bad())?;
        match kind {
            "l" => Ok(Node::Leaf(i)),
            "i" => Ok(Node::Internal(i)),
            "f" => Ok(Node::Free(i)),
            _ => Err(bad()),
        }
    }
}

/// A leaf, optionally attached at a crossing of the host diagram.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Leaf {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub site: Option<usize>,
}

/// Leaves, trivalent internal nodes, free ends and the edges between them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClasperGraph {
    leaves: Vec<Leaf>,
    internal: usize,
    free_ends: usize,
    edges: Vec<(Node, Node)>,
}

/// JSON form: nodes are named `l0`, `i0`, `f0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClasperSpec {
    pub leaves: Vec<Leaf>,
    pub internal: usize,
    pub edges: Vec<[String; 2]>,
    #[serde(default)]
    pub free_ends: Vec<String>,
}

impl ClasperSpec {
    pub fn build(&self) -> Result<ClasperGraph, ClasperError> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for [a, b] in &self.edges {
            edges.push((a.parse()?, b.parse()?));
        }
        let mut free = 0;
        for (k, name) in self.free_ends.iter().enumerate() {
            if name.parse::<Node>()? != Node::Free(k) {
                return Err(ClasperError::Malformed(format!("free ends must be listed as f0, f1, …; found {name}")));
            }
            free += 1;
        }
        ClasperGraph::new(self.leaves.clone(), self.internal, free, edges)
    }
}

impl ClasperGraph {
    pub fn new(leaves: Vec<Leaf>, internal: usize, free_ends: usize, edges: Vec<(Node, Node)>) -> Result<Self, ClasperError> {
        let g = ClasperGraph { leaves, internal, free_ends, edges };
        g.validate()?;
        Ok(g)
    }

    pub fn empty() -> Self {
        ClasperGraph { leaves: Vec::new(), internal: 0, free_ends: 0, edges: Vec::new() }
    }

    /// A chord clasper: two leaves at a crossing joined by an edge.
    pub fn chord(site: usize) -> Self {
        let leaf = Leaf { site: Some(site) };
        ClasperGraph { leaves: vec![leaf, leaf], internal: 0, free_ends: 0, edges: vec![(Node::Leaf(0), Node::Leaf(1))] }
    }

    /// The graph underlying a web diagram; leaves follow the leg order.
    pub fn from_web(d: &WebDiagram) -> Self {
        let l = d.legs();
        let node = |h: usize| if h < l { Node::Leaf(h) } else { Node::Internal((h - l) / 3) };
        let mate = d.mate();
        let edges = (0..mate.len()).filter(|&h| h < mate[h]).map(|h| (node(h), node(mate[h]))).collect();
        ClasperGraph { leaves: vec![Leaf::default(); l], internal: d.internal(), free_ends: 0, edges }
    }

    fn validate(&self) -> Result<(), ClasperError> {
        let mut deg: BTreeMap<Node, usize> = BTreeMap::new();
        for &(a, b) in &self.edges {
            for n in [a, b] {
                let ok = match n {
                    Node::Leaf(i) => i < self.leaves.len(),
                    Node::Internal(i) => i < self.internal,
                    Node::Free(i) => i < self.free_ends,
                };
                if !ok {
                    return Err(ClasperError::Malformed(format!("node {n} out of range")));
                }
                *deg.entry(n).or_default() += 1;
            }
        }
        for n in self.nodes() {
            let want = if matches!(n, Node::Internal(_)) { 3 } else { 1 };
            let got = deg.get(&n).copied().unwrap_or(0);
            if got != want {
                return Err(ClasperError::Malformed(format!("node {n} has valence {got}, expected {want}")));
            }
        }
        Ok(())
    }

    pub fn leaves(&self) -> &[Leaf] {
        &self.leaves
    }

    pub fn internal(&self) -> usize {
        self.internal
    }

    pub fn free_ends(&self) -> usize {
        self.free_ends
    }

    pub fn edges(&self) -> &[(Node, Node)] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.leaves.is_empty() && self.internal == 0 && self.free_ends == 0
    }

    /// `(#leaves + #internal) / 2`.
    pub fn degree(&self) -> usize {
        (self.leaves.len() + self.internal) / 2
    }

    /// `(#leaves - #internal) / 2`.
    pub fn chi(&self) -> i64 {
        (self.leaves.len() as i64 - self.internal as i64) / 2
    }

    pub fn nodes(&self) -> Vec<Node> {
        (0..self.leaves.len())
            .map(Node::Leaf)
            .chain((0..self.internal).map(Node::Internal))
            .chain((0..self.free_ends).map(Node::Free))
            .collect()
    }

    /// Nodes adjacent to `n`, with multiplicity; a loop contributes `n`
    /// twice.
    pub fn neighbours(&self, n: Node) -> Vec<Node> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == n {
                out.push(b);
            }
            if b == n {
                out.push(a);
            }
        }
        out
    }

    /// Connected components, each sorted; components ordered by their
    /// least node.
    pub fn components(&self) -> Vec<Vec<Node>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for start in self.nodes() {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut k = 0;
            while k < comp.len() {
                for w in self.neighbours(comp[k]) {
                    if seen.insert(w) {
                        comp.push(w);
                    }
                }
                k += 1;
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    /// The underlying web diagram, taking leaves in index order along the
    /// circle and each node's edges in listing order as its cyclic order.
    pub fn underlying(&self) -> Result<WebDiagram, ClasperError> {
        if self.free_ends > 0 {
            return Err(ClasperError::Malformed("free ends have no underlying diagram".into()));
        }
        let l = self.leaves.len() as u64;
        let mut next_slot = vec![0u64; self.internal];
        let mut end = |n: Node| -> u64 {
            match n {
                Node::Leaf(i) => i as u64,
                Node::Internal(v) => {
                    let s = next_slot[v];
                    next_slot[v] += 1;
                    l + 3 * v as u64 + s
                }
                Node::Free(_) => unreachable!(),
            }
        };
        let edges = self.edges.iter().map(|&(a, b)| [end(a), end(b)]).collect();
        let spec = WebSpec {
            legs: (0..l).collect(),
            internal: self.internal,
            edges,
            cyclic: (0..self.internal as u64).map(|v| [0, 1, 2].map(|s| l + 3 * v + s)).collect(),
        };
        spec.build().map_err(|e| ClasperError::Malformed(e.to_string()))
    }

    /// Connected and nonempty.
    pub fn is_primitive(&self) -> bool {
        self.components().len() == 1
    }

    /// No internal node has two leaf neighbours.
    pub fn is_complete(&self) -> bool {
        (0..self.internal).all(|v| self.neighbours(Node::Internal(v)).iter().filter(|n| matches!(n, Node::Leaf(_))).count() <= 1)
    }

    /// Keeps only the nodes satisfying `keep`, renumbering the rest.
    fn restrict(&self, keep: impl Fn(Node) -> bool) -> ClasperGraph {
        let mut map = BTreeMap::new();
        let mut leaves = Vec::new();
        let (mut internal, mut free) = (0, 0);
        for n in self.nodes() {
            if !keep(n) {
                continue;
            }
            let m = match n {
                Node::Leaf(i) => {
                    leaves.push(self.leaves[i]);
                    Node::Leaf(leaves.len() - 1)
                }
                Node::Internal(_) => {
                    internal += 1;
                    Node::Internal(internal - 1)
                }
                Node::Free(_) => {
                    free += 1;
                    Node::Free(free - 1)
                }
            };
            map.insert(n, m);
        }
        let edges = self
            .edges
            .iter()
            .filter(|(a, b)| keep(*a) && keep(*b))
            .map(|(a, b)| (map[a], map[b]))
            .collect();
        ClasperGraph { leaves, internal, free_ends: free, edges }
    }

    pub fn to_spec(&self) -> ClasperSpec {
        ClasperSpec {
            leaves: self.leaves.clone(),
            internal: self.internal,
            edges: self.edges.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
            free_ends: (0..self.free_ends).map(|i| Node::Free(i).to_string()).collect(),
        }
    }
}

/// A chord clasper, modeled by the crossing it changes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChordClasper {
    pub site: usize,
}

/// Surgery on a chord clasper changes its crossing.
pub fn chord_surgery(k: &LinkDiagram, c: &ChordClasper) -> Result<LinkDiagram, ClasperError> {
    Ok(k.switch_crossing(c.site)?)
}

/// A finite rational combination of diagrams; identical diagrams are merged.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KnotCombination {
    terms: Vec<(LinkDiagram, BigRational)>,
}

impl KnotCombination {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, d: LinkDiagram, c: BigRational) {
        match self.terms.iter().position(|(e, _)| *e == d) {
            Some(i) => {
                self.terms[i].1 += c;
                if self.terms[i].1.is_zero() {
                    self.terms.remove(i);
                }
            }
            None if !c.is_zero() => self.terms.push((d, c)),
            None => {}
        }
    }

    pub fn terms(&self) -> &[(LinkDiagram, BigRational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `[K, C] = Σ_{D ⊆ C} (-1)^{#D} K^D`.
pub fn bracket(k: &LinkDiagram, claspers: &[ChordClasper]) -> Result<KnotCombination, ClasperError> {
    let mut sites = HashSet::new();
    for c in claspers {
        if c.site >= k.crossing_count() {
            return Err(DiagramError::BadIndex(c.site).into());
        }
        if !sites.insert(c.site) {
            return Err(ClasperError::OverlappingSites(c.site));
        }
    }
    let mut out = KnotCombination::new();
    for mask in 0u64..(1 << claspers.len()) {
        let mut d = k.clone();
        for (i, c) in claspers.iter().enumerate() {
            if mask >> i & 1 == 1 {
                d = chord_surgery(&d, c)?;
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { BigRational::one() } else { -BigRational::one() };
        out.add_term(d, sign);
    }
    Ok(out)
}

/// `Σ coeff · inv(K)`.
pub fn eval_on_combination<E>(
    mut inv: impl FnMut(&LinkDiagram) -> Result<BigRational, E>,
    x: &KnotCombination,
) -> Result<BigRational, E> {
    let mut acc = BigRational::zero();
    for (d, c) in x.terms() {
        acc += c * inv(d)?;
    }
    Ok(acc)
}

/// One term `(-1)^{#G - #S} K^S` of the alternating sum, `S` given by the
/// indices of the components it keeps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiTerm {
    pub components: Vec<usize>,
    pub sign: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiTerms {
    /// `(-1)^{l + deg}` with `l` the number of leaves.
    pub overall_sign: i32,
    pub terms: Vec<PhiTerm>,
}

/// Signed subsets of the connected components of `g`.
pub fn phi_terms(g: &ClasperGraph) -> PhiTerms {
    let comps = g.components().len();
    let overall_sign = if (g.leaves.len() + g.degree()) % 2 == 0 { 1 } else { -1 };
    let terms = (0u64..(1 << comps))
        .rev()
        .map(|mask| {
            let components: Vec<usize> = (0..comps).filter(|i| mask >> i & 1 == 1).collect();
            let sign = if (comps - components.len()) % 2 == 0 { 1 } else { -1 };
            PhiTerm { components, sign }
        })
        .collect();
    PhiTerms { overall_sign, terms }
}

/// Deletes every component that contains a free end.
pub fn free_end_reduce(g: &ClasperGraph) -> ClasperGraph {
    let doomed: HashSet<Node> =
        g.components().into_iter().filter(|c| c.iter().any(|n| matches!(n, Node::Free(_)))).flatten().collect();
    if doomed.is_empty() {
        return g.clone();
    }
    g.restrict(|n| !doomed.contains(&n))
}

/// Unlinks the Borromean rings at internal node `v`: the node goes away and
/// each edge that ended there gets a free end instead.
pub fn borromean_unlink(g: &ClasperGraph, v: usize) -> Result<ClasperGraph, ClasperError> {
    if v >= g.internal {
        return Err(ClasperError::NotInternal(v));
    }
    let target = Node::Internal(v);
    let mut h = g.clone();
    let mut edges = Vec::new();
    for &(a, b) in &g.edges {
        match (a == target, b == target) {
            (true, true) => {}
            (true, false) | (false, true) => {
                let other = if a == target { b } else { a };
                edges.push((other, Node::Free(h.free_ends)));
                h.free_ends += 1;
            }
            (false, false) => edges.push((a, b)),
        }
    }
    h.edges = edges;
    Ok(h.restrict(|n| n != target))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ReductionStep {
    Unlink { vertex: usize, internal_after: usize, free_ends_after: usize },
    RemoveFreeEnds { components_removed: usize, internal_after: usize, leaves_after: usize },
}

/// Certificate that surgery on the graph leaves the host unchanged.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub vertex: usize,
    pub steps: Vec<ReductionStep>,
    pub ends_empty: bool,
}

/// Internal nodes all of whose neighbours are internal.
pub fn eligible_vertices(g: &ClasperGraph) -> Vec<usize> {
    (0..g.internal).filter(|&v| g.neighbours(Node::Internal(v)).iter().all(|n| matches!(n, Node::Internal(_)))).collect()
}

/// Unlinks a node with no leaf neighbour, then removes components with
/// free ends until none are left.
pub fn reduce_negative_chi(g: &ClasperGraph) -> Result<ReductionTrace, ClasperError> {
    if g.free_ends > 0 {
        return Err(ClasperError::Malformed("graph already has free ends".into()));
    }
    if !g.is_primitive() {
        return Err(ClasperError::NotPrimitive);
    }
    if !g.is_complete() {
        return Err(ClasperError::NotComplete);
    }
    let v = *eligible_vertices(g).first().ok_or(ClasperError::NoEligibleVertex)?;
    let mut cur = borromean_unlink(g, v)?;
    let mut steps =
        vec![ReductionStep::Unlink { vertex: v, internal_after: cur.internal, free_ends_after: cur.free_ends }];
    while cur.free_ends > 0 {
        let before = cur.components().len();
        let next = free_end_reduce(&cur);
        steps.push(ReductionStep::RemoveFreeEnds {
            components_removed: before - next.components().len(),
            internal_after: next.internal,
            leaves_after: next.leaves.len(),
        });
        cur = next;
    }
    Ok(ReductionTrace { vertex: v, steps, ends_empty: cur.is_empty() })
}

/// Canonical adjacency of a multigraph whose first `leaves` nodes are
/// leaves: least flattened matrix over relabelings that respect a stable
/// colour refinement.
fn canonical_adjacency(adj: &[Vec<u8>], leaves: usize) -> Vec<u8> {
    let n = adj.len();
    let mut colour: Vec<usize> = (0..n).map(|i| usize::from(i >= leaves)).collect();
    loop {
        let sigs: Vec<(usize, u8, Vec<(usize, u8)>)> = (0..n)
            .map(|i| {
                let mut nb: Vec<(usize, u8)> = (0..n).filter(|&j| j != i && adj[i][j] > 0).map(|j| (colour[j], adj[i][j])).collect();
                nb.sort_unstable();
                (colour[i], adj[i][i], nb)
            })
            .collect();
        let mut distinct: Vec<_> = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let classes = |c: &[usize]| c.iter().collect::<HashSet<_>>().len();
        if classes(&next) == classes(&colour) {
            colour = next;
            break;
        }
        colour = next;
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, c) in colour.iter().enumerate() {
        groups.entry(*c).or_default().push(i);
    }
    let groups: Vec<Vec<usize>> = groups.into_values().collect();
    let mut best: Option<Vec<u8>> = None;
    let mut order = Vec::with_capacity(n);
    fn permute(groups: &[Vec<usize>], g: usize, used: &mut Vec<bool>, order: &mut Vec<usize>, adj: &[Vec<u8>], best: &mut Option<Vec<u8>>) {
        if g == groups.len() {
            let flat: Vec<u8> = order.iter().flat_map(|&i| order.iter().map(move |&j| adj[i][j])).collect();
            if best.as_ref().is_none_or(|b| flat < *b) {
                *best = Some(flat);
            }
            return;
        }
        let group = &groups[g];
        let placed = order.len();
        let start = groups[..g].iter().map(Vec::len).sum::<usize>();
        if placed == start + group.len() {
            permute(groups, g + 1, used, order, adj, best);
            return;
        }
        for &v in group {
            if !used[v] {
                used[v] = true;
                order.push(v);
                permute(groups, g, used, order, adj, best);
                order.pop();
                used[v] = false;
            }
        }
    }
    permute(&groups, 0, &mut vec![false; n], &mut order, adj, &mut best);
    best.unwrap_or_default()
}

/// Every connected, complete clasper graph (up to graph isomorphism) with
/// at least one leaf, negative Euler characteristic and degree at most
/// `max_degree`. Self-loops at internal nodes are allowed.
pub fn enumerate_negative_chi_graphs(max_degree: usize) -> Vec<ClasperGraph> {
    let mut out = Vec::new();
    for total in (2..=2 * max_degree).step_by(2) {
        for leaves in 1..total {
            let internal = total - leaves;
            if internal <= leaves {
                continue;
            }
            out.extend(enumerate_shape(leaves, internal));
        }
    }
    out
}

fn enumerate_shape(leaves: usize, internal: usize) -> Vec<ClasperGraph> {
    let n = leaves + internal;
    let mut adj = vec![vec![0u8; n]; n];
    let mut remaining: Vec<u8> = (0..n).map(|i| if i < leaves { 1 } else { 3 }).collect();
    // complete graphs put their leaves on distinct internal nodes, so leaf k
    // may be attached to internal node k
    for k in 0..leaves {
        adj[k][leaves + k] = 1;
        adj[leaves + k][k] = 1;
        remaining[k] = 0;
        remaining[leaves + k] -= 1;
    }
    let pairs: Vec<(usize, usize)> = (leaves..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    fill(&pairs, 0, &mut adj, &mut remaining, leaves, &mut seen, &mut out);
    out
}

fn fill(
    pairs: &[(usize, usize)],
    k: usize,
    adj: &mut Vec<Vec<u8>>,
    remaining: &mut Vec<u8>,
    leaves: usize,
    seen: &mut HashSet<Vec<u8>>,
    out: &mut Vec<ClasperGraph>,
) {
    if k == pairs.len() {
        if remaining.iter().any(|r| *r != 0) || !connected(adj) {
            return;
        }
        let key = canonical_adjacency(adj, leaves);
        if seen.insert(key) {
            out.push(graph_from_adjacency(adj, leaves));
        }
        return;
    }
    let (i, j) = pairs[k];
    // once the pairs of row i are done its valence must be used up
    let last_of_row = k + 1 == pairs.len() || pairs[k + 1].0 != i;
    let cost = if i == j { 2 } else { 1 };
    let max = if i == j { remaining[i] / 2 } else { remaining[i].min(remaining[j]) };
    for m in 0..=max {
        let left = remaining[i] - cost * m;
        if last_of_row && left != 0 {
            continue;
        }
        adj[i][j] += m;
        if i != j {
            adj[j][i] += m;
        }
        remaining[i] -= cost * m;
        if i != j {
            remaining[j] -= m;
        }
        fill(pairs, k + 1, adj, remaining, leaves, seen, out);
        remaining[i] += cost * m;
        if i != j {
            remaining[j] += m;
        }
        adj[i][j] -= m;
        if i != j {
            adj[j][i] -= m;
        }
    }
}

fn connected(adj: &[Vec<u8>]) -> bool {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for w in 0..n {
            if adj[u][w] > 0 && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|s| *s)
}

fn graph_from_adjacency(adj: &[Vec<u8>], leaves: usize) -> ClasperGraph {
    let node = |i: usize| if i < leaves { Node::Leaf(i) } else { Node::Internal(i - leaves) };
    let mut edges = Vec::new();
    for i in 0..adj.len() {
        for j in i..adj.len() {
            for _ in 0..adj[i][j] {
                edges.push((node(i), node(j)));
            }
        }
    }
    ClasperGraph::new(vec![Leaf::default(); leaves], adj.len() - leaves, 0, edges).expect("valences match")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::knots;

    fn double_bubble() -> ClasperGraph {
        ClasperGraph::from_web(&WebDiagram::double_bubble())
    }

    #[test]
    fn spec_round_trip() {
        let g = double_bubble();
        assert_eq!(g.to_spec().build().unwrap(), g);
        assert_eq!(g.underlying().unwrap(), WebDiagram::double_bubble());
        let bad = ClasperSpec { leaves: vec![Leaf::default()], internal: 0, edges: vec![], free_ends: vec![] };
        assert!(bad.build().is_err());
    }

    #[test]
    fn chord_surgery_is_an_involution() {
        let k = knots::trefoil();
        let c = ChordClasper { site: 1 };
        let once = chord_surgery(&k, &c).unwrap();
        assert_ne!(once, k);
        assert_eq!(chord_surgery(&once, &c).unwrap(), k);
        assert!(chord_surgery(&k, &ChordClasper { site: 9 }).is_err());
    }

    #[test]
    fn bracket_sizes() {
        let k = knots::figure_eight();
        assert_eq!(bracket(&k, &[]).unwrap().terms(), &[(k.clone(), BigRational::one())]);
        let one = bracket(&k, &[ChordClasper { site: 0 }]).unwrap();
        assert_eq!(one.len(), 2);
        let three = bracket(&k, &[0, 1, 2].map(|site| ChordClasper { site })).unwrap();
        assert_eq!(three.len(), 8);
        assert_eq!(
            bracket(&k, &[ChordClasper { site: 0 }, ChordClasper { site: 0 }]),
            Err(ClasperError::OverlappingSites(0))
        );
    }

    #[test]
    fn phi_on_primitive_and_split_graphs() {
        let w = ClasperGraph::from_web(&WebDiagram::wheel(4).unwrap());
        let p = phi_terms(&w);
        assert_eq!(p.overall_sign, 1);
        assert_eq!(p.terms, vec![PhiTerm { components: vec![0], sign: 1 }, PhiTerm { components: vec![], sign: -1 }]);
        let two = ClasperGraph::from_web(&crate::web::diagram_connected_sum(&WebDiagram::theta(), &WebDiagram::theta()));
        assert_eq!(phi_terms(&two).terms.len(), 4);
        // one chord: l = 2, degree 1
        assert_eq!(phi_terms(&ClasperGraph::chord(0)).overall_sign, -1);
    }

    #[test]
    fn free_end_reduction() {
        let g = double_bubble();
        assert_eq!(free_end_reduce(&g), g);
        let chain = ClasperGraph::new(vec![Leaf::default()], 0, 1, vec![(Node::Leaf(0), Node::Free(0))]).unwrap();
        assert!(free_end_reduce(&chain).is_empty());
        let unlinked = borromean_unlink(&g, 0).unwrap();
        let reduced = free_end_reduce(&unlinked);
        assert!(reduced.is_empty());
        assert_eq!(free_end_reduce(&reduced), reduced);
    }

    #[test]
    fn unlink_splits_the_double_bubble() {
        let g = double_bubble();
        let v = eligible_vertices(&g)[0];
        let h = borromean_unlink(&g, v).unwrap();
        assert_eq!(h.internal(), 3);
        assert_eq!(h.free_ends(), 3);
        assert_eq!(h.components().len(), 2);
        assert_eq!(borromean_unlink(&g, 4), Err(ClasperError::NotInternal(4)));
    }

    #[test]
    fn reductions() {
        let trace = reduce_negative_chi(&double_bubble()).unwrap();
        assert!(trace.ends_empty);
        let wheel = ClasperGraph::from_web(&WebDiagram::wheel(2).unwrap());
        assert_eq!(reduce_negative_chi(&wheel), Err(ClasperError::NoEligibleVertex));
        let two = ClasperGraph::from_web(&crate::web::diagram_connected_sum(&WebDiagram::theta(), &WebDiagram::theta()));
        assert_eq!(reduce_negative_chi(&two), Err(ClasperError::NotPrimitive));
    }

    #[test]
    fn enumeration_small_cases() {
        let g2 = enumerate_negative_chi_graphs(2);
        // one leaf, three internal nodes
        assert!(g2.iter().all(|g| g.leaves().len() == 1 && g.internal() == 3));
        assert!(!g2.is_empty());
        for g in &g2 {
            assert!(g.is_primitive() && g.is_complete() && g.chi() < 0);
        }
        let g3 = enumerate_negative_chi_graphs(3);
        assert!(g3.contains(&double_bubble()) || g3.iter().any(|g| canonical_of(g) == canonical_of(&double_bubble())));
    }

    fn canonical_of(g: &ClasperGraph) -> Vec<u8> {
        let nodes = g.nodes();
        let idx = |n: Node| nodes.iter().position(|m| *m == n).unwrap();
        let mut adj = vec![vec![0u8; nodes.len()]; nodes.len()];
        for &(a, b) in g.edges() {
            adj[idx(a)][idx(b)] += 1;
            if a != b {
                adj[idx(b)][idx(a)] += 1;
            }
        }
        canonical_adjacency(&adj, g.leaves().len())
    }
}
