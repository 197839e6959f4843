//! JSON encoding at the command-line boundary. Weights are integer arrays,
//! bipartitions `{"mu":[..],"nu":[..]}`, rationals bare integers or "p/q".

use std::path::Path;

use exotic::bipartitions::{Bipartition, Partition};
use exotic::exoticlin::{ExoticPair, SymplecticSpace};
use exotic::linalg::{Matrix, Q};
use exotic::rootdata::Weight;
use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::CliError;

fn bad_json(what: &str, e: serde_json::Error) -> CliError {
    CliError::Domain(format!("malformed JSON in {what}: {e}"))
}

pub fn parse_weight(flag: &str, text: &str, n: Option<usize>) -> Result<Weight, CliError> {
    let coords: Vec<i64> = serde_json::from_str(text).map_err(|e| bad_json(flag, e))?;
    if let Some(n) = n {
        if coords.len() != n {
            return Err(CliError::Domain(format!("{flag}: expected {n} coordinates, got {}", coords.len())));
        }
    }
    Ok(Weight(coords))
}

pub fn parse_partition(flag: &str, text: &str) -> Result<Partition, CliError> {
    let parts: Vec<usize> = serde_json::from_str(text).map_err(|e| bad_json(flag, e))?;
    Ok(Partition::new(parts)?)
}

pub fn parse_bipartition(mu: &str, nu: &str) -> Result<Bipartition, CliError> {
    Ok(Bipartition::new(parse_partition("--mu", mu)?, parse_partition("--nu", nu)?))
}

pub fn parse_rational(v: &Value, at: &str) -> Result<Q, CliError> {
    let fail = || CliError::Domain(format!("{at}: expected an integer or a \"p/q\" string, got {v}"));
    match v {
        Value::Number(num) => num.as_i64().map(|i| Q::from_integer(i.into())).ok_or_else(fail),
        Value::String(s) => {
            let (p, q) = match s.split_once('/') {
                Some((p, q)) => (p.trim(), q.trim()),
                None => (s.trim(), "1"),
            };
            let p: BigInt = p.parse().map_err(|_| fail())?;
            let q: BigInt = q.parse().map_err(|_| fail())?;
            if q.is_zero() {
                return Err(CliError::Domain(format!("{at}: zero denominator in \"{s}\"")));
            }
            Ok(Q::new(p, q))
        }
        _ => Err(fail()),
    }
}

fn parse_matrix(rows: &[Vec<Value>], dim: usize, name: &str) -> Result<Matrix, CliError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(CliError::Domain(format!("{name}: expected a {dim}×{dim} matrix")));
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(i, r)| r.iter().enumerate().map(|(j, v)| parse_rational(v, &format!("{name}[{i}][{j}]"))).collect())
        .collect::<Result<Vec<Vec<Q>>, _>>()?;
    Ok(Matrix::from_rows(rows))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairFile {
    n: usize,
    v: Vec<Value>,
    x: Vec<Vec<Value>>,
    #[serde(default)]
    omega: Option<Vec<Vec<Value>>>,
}

pub fn parse_pair(text: &str, origin: &str) -> Result<ExoticPair, CliError> {
    let file: PairFile = serde_json::from_str(text).map_err(|e| bad_json(origin, e))?;
    let dim = 2 * file.n;
    if file.v.len() != dim {
        return Err(CliError::Domain(format!("{origin}: v has {} entries, expected {dim}", file.v.len())));
    }
    let v = file
        .v
        .iter()
        .enumerate()
        .map(|(i, e)| parse_rational(e, &format!("v[{i}]")))
        .collect::<Result<Vec<Q>, _>>()?;
    let x = parse_matrix(&file.x, dim, "x")?;
    let space = match &file.omega {
        Some(rows) => Some(SymplecticSpace::new(parse_matrix(rows, dim, "omega")?)?),
        None => None,
    };
    Ok(ExoticPair::new(space, v, x)?)
}

pub fn read_pair(path: &Path) -> Result<ExoticPair, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
    parse_pair(&text, &path.display().to_string())
}

pub fn rational(q: &Q) -> Value {
    if q.is_integer() {
        if let Some(i) = q.numer().to_i64() {
            return json!(i);
        }
    }
    json!(q.to_string())
}

pub fn vector(v: &[Q]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub fn matrix(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vector(r)).collect())
}

/// Counts fit in a JSON number when they fit in u64; larger ones become strings.
pub fn count(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn weight(w: &Weight) -> Value {
    json!(w.0)
}

pub fn partition(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn bipartition(b: &Bipartition) -> Value {
    json!({"mu": b.mu.parts(), "nu": b.nu.parts()})
}

pub fn pair(p: &ExoticPair) -> Value {
    let mut out = json!({"n": p.rank(), "v": vector(&p.v), "x": matrix(&p.x)});
    if let Some(space) = &p.space {
        out["omega"] = matrix(space.omega());
    }
    out
}
