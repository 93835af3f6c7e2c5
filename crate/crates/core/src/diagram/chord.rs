use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("label {label} appears {count} times (expected exactly 2)")]
pub struct ChordDiagramError {
    pub label: u32,
    pub count: usize,
}

/// A chord diagram: a cyclic word of length `2n` in which every chord label
/// occurs exactly twice.
///
/// Stored in canonical form (labels renumbered by first occurrence, then the
/// lexicographically least rotation), so `==` is equality up to rotation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordDiagram {
    word: Vec<u32>,
}

fn relabel(word: &[u32]) -> Vec<u32> {
    let mut map = BTreeMap::new();
    word.iter()
        .map(|w| {
            let next = map.len() as u32;
            *map.entry(*w).or_insert(next)
        })
        .collect()
}

impl ChordDiagram {
    pub fn new(word: Vec<u32>) -> Result<Self, ChordDiagramError> {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for w in &word {
            *counts.entry(*w).or_default() += 1;
        }
        if let Some((label, count)) = counts.into_iter().find(|(_, c)| *c != 2) {
            return Err(ChordDiagramError { label, count });
        }
        let n = word.len();
        let best = (0..n.max(1))
            .map(|r| {
                let rotated: Vec<u32> = word[r.min(n)..].iter().chain(&word[..r.min(n)]).copied().collect();
                relabel(&rotated)
            })
            .min()
            .unwrap_or_default();
        Ok(ChordDiagram { word: best })
    }

    pub fn empty() -> Self {
        ChordDiagram { word: Vec::new() }
    }

    /// The single chord.
    pub fn theta() -> Self {
        ChordDiagram { word: vec![0, 0] }
    }

    pub fn degree(&self) -> usize {
        self.word.len() / 2
    }

    /// Canonical cyclic word.
    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// Endpoint positions `(first, second)` of each chord, indexed by label.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        let mut ends = vec![(usize::MAX, usize::MAX); self.degree()];
        for (pos, w) in self.word.iter().enumerate() {
            let e = &mut ends[*w as usize];
            if e.0 == usize::MAX {
                e.0 = pos;
            } else {
                e.1 = pos;
            }
        }
        ends
    }

    /// True if chords `i` and `j` have interleaved endpoints.
    pub fn crosses(&self, i: usize, j: usize) -> bool {
        let ch = self.chords();
        let (a, b) = ch[i];
        let (c, d) = ch[j];
        (a < c && c < b) != (a < d && d < b)
    }

    /// True if some chord crosses no other chord.
    pub fn has_isolated_chord(&self) -> bool {
        let n = self.degree();
        (0..n).any(|i| (0..n).all(|j| j == i || !self.crosses(i, j)))
    }

    /// Number of circles obtained by smoothing every chord of the circle it
    /// sits on (orientation-preserving). One circle means the smoothing is
    /// a knot.
    pub fn smoothing_circles(&self) -> usize {
        let m = self.word.len();
        if m == 0 {
            return 1;
        }
        let ch = self.chords();
        // entering endpoint p, jump along the chord to its partner q and
        // continue along the circle from q
        let partner = |p: usize| {
            let (a, b) = ch[self.word[p] as usize];
            if p == a {
                b
            } else {
                a
            }
        };
        let mut seen = vec![false; m];
        let mut circles = 0;
        for start in 0..m {
            if seen[start] {
                continue;
            }
            circles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = (partner(p) + 1) % m;
            }
        }
        circles
    }
}

impl fmt::Debug for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.word.iter().map(|w| w.to_string()).collect();
        write!(f, "CD({})", s.join(""))
    }
}

/// Every chord diagram of degree `n` up to rotation, sorted.
pub fn enumerate_chord_diagrams(n: usize) -> Vec<ChordDiagram> {
    fn rec(word: &mut Vec<u32>, open: &mut Vec<usize>, next: u32, n: u32, out: &mut BTreeSet<ChordDiagram>) {
        if word.len() == 2 * n as usize {
            out.insert(ChordDiagram::new(word.clone()).expect("balanced word"));
            return;
        }
        let remaining = 2 * n as usize - word.len();
        // open a new chord
        if next < n && remaining > open.len() {
            word.push(next);
            open.push(next as usize);
            rec(word, open, next + 1, n, out);
            open.pop();
            word.pop();
        }
        // close any open chord
        for k in 0..open.len() {
            let label = open.remove(k);
            word.push(label as u32);
            rec(word, open, next, n, out);
            word.pop();
            open.insert(k, label);
        }
    }
    let mut out = BTreeSet::new();
    rec(&mut Vec::new(), &mut Vec::new(), 0, n as u32, &mut out);
    out.into_iter().collect()
}
