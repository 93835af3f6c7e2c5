//! JSON forms of polynomials, series and diagrams. Objects are built as
//! `serde_json::Value`, whose maps keep keys sorted, so output is stable.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::diagram::{Crossing, CrossingKind, DiagramError, LinkDiagram, SingularLinkDiagram};
use crate::ring::{CoeffRing, LaurentPoly, PolyMatrix, PowerSeries};
use crate::skein::ConwayPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JsonError {
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

fn shape(m: impl Into<String>) -> JsonError {
    JsonError::Shape(m.into())
}

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
pub fn integer_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

/// Canonical `p/q` (or `p`) string.
pub fn rational_string(r: &BigRational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Result<BigRational, JsonError> {
    let s = s.trim();
    let bad = || shape(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn rational_from_value(v: &Value) -> Result<BigRational, JsonError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(i.into()))
            .ok_or_else(|| shape(format!("coefficient {n} is not an integer"))),
        Value::String(s) => parse_rational(s),
        other => Err(shape(format!("bad coefficient {other}"))),
    }
}

/// `{"ring":"Z","coeffs":{"-1":-2,"0":5,"1":-2}}`
pub fn laurent_to_json(p: &LaurentPoly) -> Value {
    let mut coeffs = Map::new();
    for (e, c) in p.terms() {
        let v = if p.ring() == CoeffRing::Integer { integer_value(c.numer()) } else { json!(rational_string(c)) };
        coeffs.insert(e.to_string(), v);
    }
    let ring = if p.ring() == CoeffRing::Integer { "Z" } else { "Q" };
    json!({ "ring": ring, "coeffs": coeffs })
}

pub fn laurent_from_json(v: &Value) -> Result<LaurentPoly, JsonError> {
    let ring = v.get("ring").and_then(Value::as_str).unwrap_or("Z");
    let coeffs = v.get("coeffs").and_then(Value::as_object).ok_or_else(|| shape("missing \"coeffs\" object"))?;
    let mut terms = Vec::new();
    for (k, c) in coeffs {
        let e: i64 = k.parse().map_err(|_| shape(format!("bad exponent {k:?}")))?;
        terms.push((e, rational_from_value(c)?));
    }
    let p = LaurentPoly::from_rational_terms(terms);
    match ring {
        "Z" => p.into_integer().map_err(|e| shape(e.to_string())),
        "Q" => Ok(p),
        other => Err(shape(format!("unknown ring {other:?}"))),
    }
}

/// `{"order":6,"coeffs":["1","0","-2",…]}`
pub fn series_to_json(s: &PowerSeries) -> Value {
    json!({
        "order": s.order(),
        "coeffs": s.coeffs().iter().map(rational_string).collect::<Vec<_>>(),
    })
}

pub fn series_from_json(v: &Value) -> Result<PowerSeries, JsonError> {
    let order = v.get("order").and_then(Value::as_u64).ok_or_else(|| shape("missing \"order\""))? as usize;
    let coeffs = v.get("coeffs").and_then(Value::as_array).ok_or_else(|| shape("missing \"coeffs\" array"))?;
    let coeffs: Result<Vec<_>, _> = coeffs.iter().map(rational_from_value).collect();
    Ok(PowerSeries::from_coeffs(coeffs?, order))
}

/// Coefficients of `z^0, z^1, …`.
pub fn conway_to_json(p: &ConwayPoly) -> Value {
    json!(p.coeffs().iter().map(integer_value).collect::<Vec<_>>())
}

pub fn matrix_to_json(m: &PolyMatrix) -> Value {
    json!((0..m.rows()).map(|i| m.row(i).iter().map(|p| json!(p.to_string())).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn kind_str(k: CrossingKind) -> &'static str {
    match k {
        CrossingKind::Positive => "+",
        CrossingKind::Negative => "-",
        CrossingKind::Double => "d",
    }
}

fn crossings_to_json(xs: &[Crossing], loops: usize) -> Value {
    let pd: Vec<Value> = xs.iter().map(|x| json!([x.pd[0], x.pd[1], x.pd[2], x.pd[3], kind_str(x.kind)])).collect();
    let mut obj = Map::new();
    obj.insert("pd".into(), json!(pd));
    if loops > 0 && !(xs.is_empty() && loops == 1) {
        obj.insert("loops".into(), json!(loops));
    }
    Value::Object(obj)
}

/// `{"pd":[[1,5,2,4,"+"],…]}`, with `"loops"` for extra crossingless
/// circles.
pub fn diagram_to_json(d: &LinkDiagram) -> Value {
    crossings_to_json(d.crossings(), d.loops())
}

pub fn singular_to_json(d: &SingularLinkDiagram) -> Value {
    crossings_to_json(d.crossings(), d.as_diagram().loops())
}

fn crossings_from_json(v: &Value) -> Result<(Vec<Crossing>, usize), JsonError> {
    let pd = v.get("pd").and_then(Value::as_array).ok_or_else(|| shape("missing \"pd\" array"))?;
    let mut xs = Vec::with_capacity(pd.len());
    for (i, entry) in pd.iter().enumerate() {
        let t = entry.as_array().filter(|a| a.len() == 5).ok_or_else(|| shape(format!("crossing {i}: expected [a,b,c,d,sign]")))?;
        let mut arcs = [0u32; 4];
        for (k, a) in arcs.iter_mut().enumerate() {
            *a = t[k]
                .as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| shape(format!("crossing {i}: arc labels must be non-negative integers")))?;
        }
        let kind = match t[4].as_str() {
            Some("+") => CrossingKind::Positive,
            Some("-") => CrossingKind::Negative,
            Some("d") => CrossingKind::Double,
            _ => return Err(shape(format!("crossing {i}: kind must be \"+\", \"-\" or \"d\""))),
        };
        xs.push(Crossing::new(arcs, kind));
    }
    let loops = match v.get("loops") {
        None => usize::from(xs.is_empty()),
        Some(l) => l.as_u64().ok_or_else(|| shape("\"loops\" must be a non-negative integer"))? as usize,
    };
    Ok((xs, loops))
}

/// Parses and validates a nonsingular diagram. An empty `pd` is the unknot.
pub fn diagram_from_json(v: &Value) -> Result<LinkDiagram, JsonError> {
    let (xs, loops) = crossings_from_json(v)?;
    let d = LinkDiagram::new(xs, loops);
    d.validate().map_err(DiagramError::Invalid)?;
    Ok(d)
}

pub fn singular_from_json(v: &Value) -> Result<SingularLinkDiagram, JsonError> {
    let (xs, loops) = crossings_from_json(v)?;
    Ok(SingularLinkDiagram::new(xs, loops)?)
}
