//! Planar singular knots with a prescribed chord diagram.
//!
//! The endpoints of the chords are placed on the unit circle. For every
//! chord a thin finger is pushed from one endpoint along the straight chord
//! until its tip pokes through the circle beside the other endpoint. The tip
//! meets the circle in two crossings: one becomes the double point, the
//! other an ordinary crossing. Fingers of interleaved chords cross each
//! other in four ordinary crossings. The PD code is read off the resulting
//! closed polyline, so it is planar by construction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ArcId, ChordDiagram, Crossing, CrossingKind, SingularLinkDiagram};

/// How the over/under data of the auxiliary (non-double) crossings is
/// chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuxCrossings {
    /// Every auxiliary crossing is positive.
    AllPositive,
    /// Over/under picked by a seeded coin flip.
    Seeded(u64),
}

/// Knobs of the construction. Different settings give different singular
/// knots with the same chord diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Realization {
    pub aux: AuxCrossings,
    /// Push each finger from the later endpoint instead of the earlier one.
    pub push_from_later: bool,
    /// Use the second tip crossing as the double point.
    pub double_on_return: bool,
    /// Rotates the word before placing endpoints on the circle.
    pub rotation: usize,
}

impl Default for Realization {
    fn default() -> Self {
        Realization { aux: AuxCrossings::AllPositive, push_from_later: false, double_on_return: false, rotation: 0 }
    }
}

/// Realizes `cd` with the default construction: all auxiliary crossings
/// positive.
pub fn realize_chord_diagram(cd: &ChordDiagram) -> SingularLinkDiagram {
    realize_chord_diagram_with(cd, &Realization::default())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Piece {
    Circle,
    Out(usize),
    Cap(usize),
    Back(usize),
}

#[derive(Clone, Copy, Debug)]
struct Pt {
    x: f64,
    y: f64,
}

impl Pt {
    fn polar(r: f64, theta: f64) -> Pt {
        Pt { x: r * theta.cos(), y: r * theta.sin() }
    }
    fn sub(self, o: Pt) -> Pt {
        Pt { x: self.x - o.x, y: self.y - o.y }
    }
    fn cross(self, o: Pt) -> f64 {
        self.x * o.y - self.y * o.x
    }
}

/// Proper intersection parameters `(s, u)` of segments `p0p1` and `q0q1`.
fn intersect(p0: Pt, p1: Pt, q0: Pt, q1: Pt) -> Option<(f64, f64)> {
    let r = p1.sub(p0);
    let s = q1.sub(q0);
    let denom = r.cross(s);
    if denom.abs() < 1e-14 {
        return None;
    }
    let qp = q0.sub(p0);
    let t = qp.cross(s) / denom;
    let u = qp.cross(r) / denom;
    if t > 0.0 && t < 1.0 && u > 0.0 && u < 1.0 {
        Some((t, u))
    } else {
        None
    }
}

/// Realizes `cd` as a planar singular knot diagram whose double points are
/// met in the order of the chord diagram.
pub fn realize_chord_diagram_with(cd: &ChordDiagram, opts: &Realization) -> SingularLinkDiagram {
    let m = cd.word().len();
    if m == 0 {
        return SingularLinkDiagram::new(Vec::new(), 1).expect("unknot");
    }
    let rot = opts.rotation % m;
    let word: Vec<u32> = cd.word()[rot..].iter().chain(&cd.word()[..rot]).copied().collect();
    let n = m / 2;
    let mut ends = vec![(usize::MAX, usize::MAX); n];
    for (pos, w) in word.iter().enumerate() {
        let e = &mut ends[*w as usize];
        if e.0 == usize::MAX {
            e.0 = pos;
        } else {
            e.1 = pos;
        }
    }
    // root (finger start) and tip position of each chord
    let fingers: Vec<(usize, usize)> =
        ends.iter().map(|&(a, b)| if opts.push_from_later { (b, a) } else { (a, b) }).collect();

    let gap = std::f64::consts::TAU / m as f64;
    // deterministic irregular spacing keeps the chords in general position
    let angle = |k: usize| gap * (k as f64 + 0.21 * (((k % m) as f64 * 2.399 + 0.7).sin()));
    let delta = 0.12 * gap;
    let tip = 0.04 * gap;
    // the finger runs inside the disc and crosses the circle radially
    let inner = 0.9;
    let bulge = 1.08;
    let samples = 12;

    let mut pts: Vec<(Pt, Piece)> = Vec::new();
    for k in 0..m {
        let theta = angle(k);
        let next = angle(k + 1);
        let chord = word[k] as usize;
        let (root, tip_pos) = fingers[chord];
        if root == k {
            let tip_theta = angle(tip_pos);
            // put the outgoing side of the finger on the same side of the chord
            // as its start, so the finger does not twist
            let start = Pt::polar(1.0, theta - delta);
            let axis = Pt::polar(1.0, tip_theta).sub(Pt::polar(1.0, theta));
            let side = |p: Pt| axis.cross(p.sub(Pt::polar(1.0, theta))) > 0.0;
            let sigma = if side(Pt::polar(1.0, tip_theta + tip)) == side(start) { tip } else { -tip };
            pts.push((start, Piece::Out(chord)));
            pts.push((Pt::polar(inner, tip_theta + sigma), Piece::Out(chord)));
            pts.push((Pt::polar(bulge, tip_theta + sigma), Piece::Cap(chord)));
            pts.push((Pt::polar(bulge, tip_theta - sigma), Piece::Back(chord)));
            pts.push((Pt::polar(inner, tip_theta - sigma), Piece::Back(chord)));
            pts.push((Pt::polar(1.0, theta + delta), Piece::Circle));
        } else {
            pts.push((Pt::polar(1.0, theta - delta), Piece::Circle));
            pts.push((Pt::polar(1.0, theta + delta), Piece::Circle));
        }
        // arc up to just before the next endpoint
        let from = theta + delta;
        let to = next - delta;
        for s in 1..samples {
            let a = from + (to - from) * s as f64 / samples as f64;
            pts.push((Pt::polar(1.0, a), Piece::Circle));
        }
    }

    let seg_count = pts.len();
    let seg = |i: usize| (pts[i].0, pts[(i + 1) % seg_count].0, pts[i].1);

    struct Hit {
        segs: [usize; 2],
        params: [f64; 2],
    }
    let mut hits = Vec::new();
    for i in 0..seg_count {
        for j in i + 2..seg_count {
            if i == 0 && j == seg_count - 1 {
                continue;
            }
            let (p0, p1, _) = seg(i);
            let (q0, q1, _) = seg(j);
            if let Some((s, u)) = intersect(p0, p1, q0, q1) {
                hits.push(Hit { segs: [i, j], params: [s, u] });
            }
        }
    }

    // passages in traversal order
    let mut passages: Vec<(usize, f64, usize, usize)> = Vec::new();
    for (h, hit) in hits.iter().enumerate() {
        for side in 0..2 {
            passages.push((hit.segs[side], hit.params[side], h, side));
        }
    }
    passages.sort_by(|a, b| (a.0, a.1).partial_cmp(&(b.0, b.1)).unwrap());
    let total = passages.len() as ArcId;
    let mut passage_index = vec![[0usize; 2]; hits.len()];
    for (k, p) in passages.iter().enumerate() {
        passage_index[p.2][p.3] = k;
    }
    let incoming = |k: usize| if k == 0 { total } else { k as ArcId };
    let outgoing = |k: usize| k as ArcId + 1;

    let mut rng = match opts.aux {
        AuxCrossings::Seeded(s) => Some(ChaCha8Rng::seed_from_u64(s)),
        AuxCrossings::AllPositive => None,
    };
    let mut crossings = Vec::with_capacity(hits.len());
    for (h, hit) in hits.iter().enumerate() {
        let (a0, a1, pa) = seg(hit.segs[0]);
        let (b0, b1, pb) = seg(hit.segs[1]);
        let da = a1.sub(a0);
        let db = b1.sub(b0);
        let is_double = match (pa, pb) {
            (Piece::Circle, Piece::Out(_)) | (Piece::Out(_), Piece::Circle) => !opts.double_on_return,
            (Piece::Circle, Piece::Back(_)) | (Piece::Back(_), Piece::Circle) => opts.double_on_return,
            (Piece::Out(_) | Piece::Back(_), Piece::Out(_) | Piece::Back(_)) => false,
            other => panic!("unexpected intersection {other:?} in chord realization"),
        };
        // side 0 over gives a positive crossing iff da x db > 0
        let positive_if_a_over = da.cross(db) > 0.0;
        let a_over = match (&mut rng, is_double) {
            (Some(r), false) => r.gen::<bool>(),
            _ => positive_if_a_over,
        };
        let (over, under) = if a_over { (0, 1) } else { (1, 0) };
        let positive = a_over == positive_if_a_over;
        let (o, u) = (passage_index[h][over], passage_index[h][under]);
        let pd = if positive {
            [incoming(u), outgoing(o), outgoing(u), incoming(o)]
        } else {
            [incoming(u), incoming(o), outgoing(u), outgoing(o)]
        };
        let kind = match (is_double, positive) {
            (true, _) => CrossingKind::Double,
            (false, true) => CrossingKind::Positive,
            (false, false) => CrossingKind::Negative,
        };
        crossings.push(Crossing::new(pd, kind));
    }
    SingularLinkDiagram::new(crossings, 0).expect("realized polyline is a valid diagram")
}
