use std::collections::BTreeMap;

use super::{ArcId, Crossing, CrossingKind, DiagramError, SingularLinkDiagram};

/// Parses a signed Gauss code such as `O1+ U2+ O3+ U1+ O2+ U3+` into a
/// knot diagram. Each crossing label must occur once with `O` and once with
/// `U`, with the same kind (`+`, `-`, or `d` for a double point).
///
/// Planarity of the code is not checked.
pub fn parse_gauss_code(code: &str) -> Result<SingularLinkDiagram, DiagramError> {
    let err = |m: String| DiagramError::Parse(m);
    let mut passages = Vec::new();
    for tok in code.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()) {
        let mut chars = tok.chars();
        let over = match chars.next() {
            Some('O') | Some('o') => true,
            Some('U') | Some('u') => false,
            _ => return Err(err(format!("token {tok:?} must start with O or U"))),
        };
        let rest: String = chars.collect();
        let (label, kind) = match rest.chars().last() {
            Some('+') => (&rest[..rest.len() - 1], CrossingKind::Positive),
            Some('-') => (&rest[..rest.len() - 1], CrossingKind::Negative),
            Some('d') => (&rest[..rest.len() - 1], CrossingKind::Double),
            _ => return Err(err(format!("token {tok:?} has no sign"))),
        };
        let label: u32 = label.parse().map_err(|_| err(format!("bad crossing label in {tok:?}")))?;
        passages.push((label, over, kind));
    }
    if passages.is_empty() {
        return SingularLinkDiagram::new(Vec::new(), 1);
    }
    let n = passages.len() as ArcId;
    // arc k + 1 leaves passage k
    let incoming = |k: usize| if k == 0 { n } else { k as ArcId };
    let outgoing = |k: usize| k as ArcId + 1;
    let mut seen: BTreeMap<u32, (Option<usize>, Option<usize>, CrossingKind)> = BTreeMap::new();
    for (k, (label, over, kind)) in passages.iter().enumerate() {
        let e = seen.entry(*label).or_insert((None, None, *kind));
        if e.2 != *kind {
            return Err(err(format!("crossing {label} has inconsistent kinds")));
        }
        let slot = if *over { &mut e.0 } else { &mut e.1 };
        if slot.replace(k).is_some() {
            return Err(err(format!("crossing {label} passed twice as {}", if *over { "over" } else { "under" })));
        }
    }
    let mut crossings = Vec::new();
    for (label, (o, u, kind)) in seen {
        let (o, u) = match (o, u) {
            (Some(o), Some(u)) => (o, u),
            _ => return Err(err(format!("crossing {label} needs one O and one U passage"))),
        };
        let pd = match kind {
            CrossingKind::Negative => [incoming(u), incoming(o), outgoing(u), outgoing(o)],
            _ => [incoming(u), outgoing(o), outgoing(u), incoming(o)],
        };
        crossings.push(Crossing::new(pd, kind));
    }
    SingularLinkDiagram::new(crossings, 0)
}

#[cfg(test)]
mod tests {
    use super::super::fox_alexander;
    use super::*;
    use crate::ring::{unit_equivalent, LaurentPoly};

    #[test]
    fn trefoil_code() {
        let d = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
        let k = d.as_diagram();
        assert_eq!(k.validate(), Ok(()));
        assert!(k.is_knot());
        let p = fox_alexander(k).unwrap();
        assert!(unit_equivalent(&p, &LaurentPoly::from_terms([(2, 1), (1, -1), (0, 1)])));
    }

    #[test]
    fn double_points_parse() {
        let d = parse_gauss_code("O1d U1d").unwrap();
        assert_eq!(d.double_points(), vec![0]);
    }

    #[test]
    fn malformed_codes() {
        assert!(parse_gauss_code("O1+ O1+").is_err());
        assert!(parse_gauss_code("O1+ U1-").is_err());
        assert!(parse_gauss_code("X1+").is_err());
        assert!(parse_gauss_code("O1+").is_err());
        assert!(parse_gauss_code("O1 U1").is_err());
    }

    #[test]
    fn empty_code_is_the_unknot() {
        let d = parse_gauss_code("").unwrap();
        assert!(d.as_diagram().is_knot());
        assert_eq!(d.crossings().len(), 0);
    }
}
