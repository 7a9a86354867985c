//! JSON wire formats.
//!
//! Rationals travel as decimal strings `"p/q"` (or `"p"`); integers are also
//! accepted on input. A polynomial is an array of rationals indexed by
//! degree. A complex is `{"facets": [[0,1],[1,2],…]}`.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::gamma::GammaVector;
use crate::poly::Poly;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::simplicial::SimplicialComplex;

pub fn rational_from_value(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(crate::rational::rat(i))
            } else {
                Err(Error::InvalidInput(format!(
                    "only integers and \"p/q\" strings are exact, got {n}"
                )))
            }
        }
        other => Err(Error::InvalidInput(format!("expected a rational, got {other}"))),
    }
}

pub fn rationals_from_value(v: &Value) -> Result<Vec<Rational>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::InvalidInput(format!("expected an array, got {v}")))?;
    arr.iter().map(rational_from_value).collect()
}

pub fn rationals_to_value(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(|r| Value::String(format_rational(r))).collect())
}

pub fn poly_from_value(v: &Value) -> Result<Poly> {
    Ok(Poly::new(rationals_from_value(v)?))
}

pub fn poly_to_value(p: &Poly) -> Value {
    rationals_to_value(p.coeffs())
}

pub fn gamma_to_value(g: &GammaVector) -> Value {
    rationals_to_value(g.entries())
}

pub fn complex_from_value(v: &Value) -> Result<SimplicialComplex> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::InvalidInput("expected an object with a \"facets\" key".into()))?;
    let facets = obj
        .get("facets")
        .ok_or_else(|| Error::InvalidInput("missing \"facets\" key".into()))?
        .as_array()
        .ok_or_else(|| Error::InvalidInput("\"facets\" must be an array".into()))?;
    let mut out: Vec<Vec<u32>> = Vec::with_capacity(facets.len());
    for f in facets {
        let verts = f
            .as_array()
            .ok_or_else(|| Error::InvalidInput("each facet must be an array".into()))?;
        let mut facet = Vec::with_capacity(verts.len());
        for x in verts {
            let label = x
                .as_u64()
                .ok_or_else(|| Error::InvalidInput(format!("bad vertex label {x}")))?;
            facet.push(u32::try_from(label).map_err(|_| {
                Error::InvalidInput(format!("vertex label {label} too large"))
            })?);
        }
        out.push(facet);
    }
    Ok(SimplicialComplex::from_facets(out))
}

pub fn complex_to_value(k: &SimplicialComplex) -> Value {
    json!({
        "facets": k.facets().map(|f| Value::Array(
            f.iter().map(|&v| Value::from(v)).collect()
        )).collect::<Vec<_>>()
    })
}

/// Stable object construction helper: `serde_json::Map` is sorted by key,
/// so identical inputs serialize to identical bytes.
pub fn object(fields: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in fields {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}
