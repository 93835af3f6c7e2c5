//! Small table of hand-checked diagrams.
//!
//! PD codes follow the KnotInfo arc labelling (arcs numbered consecutively
//! along the orientation), with signs read off from the over-strand
//! direction.

use super::{Crossing, CrossingKind, LinkDiagram};

fn build(tuples: &[[u32; 4]]) -> LinkDiagram {
    let n = tuples.iter().flatten().copied().max().unwrap_or(0);
    let crossings = tuples
        .iter()
        .map(|&[a, b, c, d]| {
            // over-strand runs d -> b exactly when b follows d
            let kind = if b == d % n + 1 { CrossingKind::Positive } else { CrossingKind::Negative };
            Crossing::new([a, b, c, d], kind)
        })
        .collect();
    LinkDiagram::new(crossings, 0)
}

/// One-crossing diagram of the unknot.
pub fn kink(positive: bool) -> LinkDiagram {
    if positive {
        LinkDiagram::new(vec![Crossing::new([1, 1, 2, 2], CrossingKind::Positive)], 0)
    } else {
        LinkDiagram::new(vec![Crossing::new([1, 2, 2, 1], CrossingKind::Negative)], 0)
    }
}

/// Trefoil with three positive crossings.
pub fn trefoil() -> LinkDiagram {
    build(&[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]])
}

pub fn figure_eight() -> LinkDiagram {
    build(&[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]])
}

pub fn five_one() -> LinkDiagram {
    build(&[[2, 8, 3, 7], [4, 10, 5, 9], [6, 2, 7, 1], [8, 4, 9, 3], [10, 6, 1, 5]])
}

pub fn five_two() -> LinkDiagram {
    build(&[[1, 5, 2, 4], [3, 9, 4, 8], [5, 1, 6, 10], [7, 3, 8, 2], [9, 7, 10, 6]])
}

pub fn six_one() -> LinkDiagram {
    build(&[[1, 7, 2, 6], [3, 10, 4, 11], [5, 3, 6, 2], [7, 1, 8, 12], [9, 4, 10, 5], [11, 9, 12, 8]])
}

/// Positive Hopf link.
pub fn hopf_link() -> LinkDiagram {
    LinkDiagram::new(
        vec![Crossing::new([1, 3, 2, 4], CrossingKind::Positive), Crossing::new([3, 1, 4, 2], CrossingKind::Positive)],
        0,
    )
}

/// Every crossing switched.
pub fn mirror(d: &LinkDiagram) -> LinkDiagram {
    let mut m = d.clone();
    for i in 0..d.crossing_count() {
        m = m.switch_crossing(i).expect("no double points");
    }
    m
}

/// Connected sum of two trefoils of the same handedness.
pub fn granny() -> LinkDiagram {
    LinkDiagram::connected_sum(&trefoil(), &trefoil(), 1, 1).expect("trefoil is a knot")
}

/// Connected sum of a trefoil and its mirror image.
pub fn square() -> LinkDiagram {
    LinkDiagram::connected_sum(&trefoil(), &mirror(&trefoil()), 1, 1).expect("trefoil is a knot")
}

/// Looks up a diagram by name (`3_1`, `4_1`, `5_1`, `5_2`, `6_1`, `granny`,
/// `square`, `hopf`, `unknot`).
pub fn by_name(name: &str) -> Option<LinkDiagram> {
    Some(match name {
        "unknot" | "0_1" => LinkDiagram::unknot(),
        "3_1" | "trefoil" => trefoil(),
        "4_1" | "figure8" | "figure-eight" => figure_eight(),
        "5_1" => five_one(),
        "5_2" => five_two(),
        "6_1" => six_one(),
        "granny" => granny(),
        "square" => square(),
        "hopf" => hopf_link(),
        _ => return None,
    })
}
