//! Presentation files and JSON encodings of elements.
//!
//! ```json
//! {
//!   "space": "alphaN",
//!   "family": "FAB",
//!   "generators": {
//!     "a": { "tails": [["0", "1"], ["0"]] },
//!     "b": { "tails": [["0", "0", "1"], ["0"]], "exceptions": { "3": "1/2" } }
//!   }
//! }
//! ```
//!
//! Element encodings per space:
//!
//! - `alphaN`: `{ "modulus"?, "tails": [[c0, c1, ...], ...], "threshold"?,
//!   "exceptions"?: { "x": value }, "alpha"? }`. Tail `r` applies to
//!   `x ≡ r (mod modulus)`; `alpha` defaults to the common constant term.
//! - `halfline`: `{ "breakpoints": [...], "values": [...], "tail": q }`.
//! - `finite`: an array of `finite_size` rationals. Without `generators` a
//!   finite presentation is generated by the indicator vectors `e0, e1, ...`.
//!
//! Rationals are strings `"p/q"` or integer strings; bare JSON integers are
//! accepted as well. Errors name the offending JSON path.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::alphan::{AsymptoticSequence, TailPoly};
use crate::finite::{Finite, FiniteVector};
use crate::halfline::{HalfLine, PwlFunction};
use crate::rat::{fmt_rat, parse_rat, Rat};
use crate::terms::{AnyPresentation, Family, GroupPresentation, PresentationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Syntax(String),
    #[error("{path}: {msg}")]
    Schema { path: String, msg: String },
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

fn schema<T>(path: &str, msg: impl Into<String>) -> Result<T, IoError> {
    Err(IoError::Schema {
        path: path.to_string(),
        msg: msg.into(),
    })
}

fn rat_at(v: &Value, path: &str) -> Result<Rat, IoError> {
    match v {
        Value::String(s) => parse_rat(s).or_else(|e| schema(path, format!("bad rational {s:?}: {e}"))),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rat(&n.to_string()).or_else(|e| schema(path, e.to_string())),
        _ => schema(path, "expected a rational as a string \"p/q\""),
    }
}

fn array_at<'v>(v: &'v Value, path: &str) -> Result<&'v Vec<Value>, IoError> {
    v.as_array().map_or_else(|| schema(path, "expected an array"), Ok)
}

fn object_at<'v>(v: &'v Value, path: &str) -> Result<&'v Map<String, Value>, IoError> {
    v.as_object().map_or_else(|| schema(path, "expected an object"), Ok)
}

fn rats_at(v: &Value, path: &str) -> Result<Vec<Rat>, IoError> {
    array_at(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| rat_at(x, &format!("{path}[{i}]")))
        .collect()
}

fn uint_at(v: &Value, path: &str) -> Result<u64, IoError> {
    v.as_u64().map_or_else(|| schema(path, "expected a non-negative integer"), Ok)
}

fn check_keys(obj: &Map<String, Value>, allowed: &[&str], path: &str) -> Result<(), IoError> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => schema(&format!("{path}.{k}"), format!("unknown field (expected one of {allowed:?})")),
        None => Ok(()),
    }
}

pub fn alphan_from_json(v: &Value, path: &str) -> Result<AsymptoticSequence, IoError> {
    let obj = object_at(v, path)?;
    check_keys(obj, &["modulus", "tails", "threshold", "exceptions", "alpha"], path)?;
    let tails_path = format!("{path}.tails");
    let Some(tails_v) = obj.get("tails") else {
        return schema(&tails_path, "missing");
    };
    let tails: Vec<TailPoly> = array_at(tails_v, &tails_path)?
        .iter()
        .enumerate()
        .map(|(r, t)| rats_at(t, &format!("{tails_path}[{r}]")).map(TailPoly::new))
        .collect::<Result<_, _>>()?;
    if tails.is_empty() {
        return schema(&tails_path, "at least one tail is required");
    }
    if let Some(m) = obj.get("modulus") {
        let p = format!("{path}.modulus");
        if uint_at(m, &p)? != tails.len() as u64 {
            return schema(&p, format!("modulus must equal the number of tails ({})", tails.len()));
        }
    }
    if let Some(t) = obj.get("threshold") {
        let p = format!("{path}.threshold");
        if uint_at(t, &p)? == 0 {
            return schema(&p, "threshold must be positive");
        }
    }
    let mut exceptions = BTreeMap::new();
    if let Some(ex) = obj.get("exceptions") {
        let p = format!("{path}.exceptions");
        for (k, val) in object_at(ex, &p)? {
            let kp = format!("{p}.{k}");
            let x: u64 = k.parse().or_else(|_| schema(&kp, "key must be a decimal integer"))?;
            if x == 0 {
                return schema(&kp, "points of ℕ start at 1");
            }
            exceptions.insert(x, rat_at(val, &kp)?);
        }
    }
    let alpha = match obj.get("alpha") {
        Some(a) => rat_at(a, &format!("{path}.alpha"))?,
        None => tails[0].constant_term().clone(),
    };
    AsymptoticSequence::new(tails, exceptions, alpha).or_else(|e| schema(path, e.to_string()))
}

pub fn pwl_from_json(v: &Value, path: &str) -> Result<PwlFunction, IoError> {
    let obj = object_at(v, path)?;
    check_keys(obj, &["breakpoints", "values", "tail"], path)?;
    let field = |name: &str| {
        obj.get(name)
            .map_or_else(|| schema(&format!("{path}.{name}"), "missing"), Ok)
    };
    let breaks = rats_at(field("breakpoints")?, &format!("{path}.breakpoints"))?;
    let values = rats_at(field("values")?, &format!("{path}.values"))?;
    let tail = rat_at(field("tail")?, &format!("{path}.tail"))?;
    PwlFunction::new(breaks, values, &tail).or_else(|e| schema(path, e.to_string()))
}

pub fn finite_from_json(space: &Finite, v: &Value, path: &str) -> Result<FiniteVector, IoError> {
    space.vector(rats_at(v, path)?).or_else(|e| schema(path, e.to_string()))
}

fn rat_json(q: &Rat) -> Value {
    Value::String(fmt_rat(q))
}

/// JSON encoding of a model element, in the format read by the presentation
/// loader.
pub trait ElementJson {
    fn to_json(&self) -> Value;
}

impl ElementJson for AsymptoticSequence {
    fn to_json(&self) -> Value {
        let tails: Vec<Value> = self
            .tails()
            .iter()
            .map(|t| Value::Array(t.coeffs().iter().map(rat_json).collect()))
            .collect();
        let exceptions: Map<String, Value> = self
            .exceptions()
            .iter()
            .map(|(x, v)| (x.to_string(), rat_json(v)))
            .collect();
        json!({
            "modulus": self.modulus(),
            "tails": tails,
            "threshold": self.threshold(),
            "exceptions": exceptions,
            "alpha": rat_json(self.alpha()),
        })
    }
}

impl ElementJson for PwlFunction {
    fn to_json(&self) -> Value {
        json!({
            "breakpoints": self.breaks().iter().map(rat_json).collect::<Vec<_>>(),
            "values": self.values().iter().map(rat_json).collect::<Vec<_>>(),
            "tail": rat_json(self.tail()),
        })
    }
}

impl ElementJson for FiniteVector {
    fn to_json(&self) -> Value {
        Value::Array(self.0.iter().map(rat_json).collect())
    }
}

fn generators_of<E>(
    obj: &Map<String, Value>,
    mut parse: impl FnMut(&Value, &str) -> Result<E, IoError>,
) -> Result<Vec<(String, E)>, IoError> {
    let Some(gens) = obj.get("generators") else {
        return Ok(Vec::new());
    };
    object_at(gens, "$.generators")?
        .iter()
        .map(|(name, v)| parse(v, &format!("$.generators.{name}")).map(|e| (name.clone(), e)))
        .collect()
}

/// Parses a presentation file. `name` labels the presentation in reports.
pub fn presentation_from_str(text: &str, name: &str) -> Result<AnyPresentation, IoError> {
    let root: Value = serde_json::from_str(text).map_err(|e| IoError::Syntax(e.to_string()))?;
    let obj = object_at(&root, "$")?;
    check_keys(obj, &["space", "finite_size", "family", "generators", "name"], "$")?;
    let name = match obj.get("name") {
        Some(Value::String(s)) => s.clone(),
        Some(_) => return schema("$.name", "expected a string"),
        None => name.to_string(),
    };
    let family = match obj.get("family") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.parse::<Family>().or_else(|e| schema("$.family", e.to_string()))?),
        Some(_) => return schema("$.family", "expected a string"),
    };
    let space = match obj.get("space") {
        Some(Value::String(s)) => s.as_str(),
        Some(_) => return schema("$.space", "expected a string"),
        None => return schema("$.space", "missing"),
    };
    if space != "finite" && obj.contains_key("finite_size") {
        return schema("$.finite_size", "only valid with \"space\": \"finite\"");
    }
    Ok(match space {
        "alphaN" => {
            let gens = generators_of(obj, alphan_from_json)?;
            AnyPresentation::AlphaN(GroupPresentation::alphan(name, gens, family)?)
        }
        "halfline" => {
            let gens = generators_of(obj, pwl_from_json)?;
            AnyPresentation::HalfLine(GroupPresentation::new(name, HalfLine, gens, family)?)
        }
        "finite" => {
            let Some(size) = obj.get("finite_size") else {
                return schema("$.finite_size", "missing");
            };
            let size = uint_at(size, "$.finite_size")? as usize;
            let space = Finite::new(size).or_else(|e| schema("$.finite_size", e.to_string()))?;
            let p = if obj.contains_key("generators") {
                let gens = generators_of(obj, |v, path| finite_from_json(&space, v, path))?;
                GroupPresentation::new(name, space, gens, family)?
            } else if family.is_some() {
                GroupPresentation::new(name, space, Vec::new(), family)?
            } else {
                let mut p = GroupPresentation::finite(size)?;
                p.name = name;
                p
            };
            AnyPresentation::Finite(p)
        }
        other => return schema("$.space", format!("unknown space {other:?} (expected alphaN, halfline or finite)")),
    })
}

/// Inverse of [`presentation_from_str`] (up to formatting).
pub fn presentation_to_json(p: &AnyPresentation) -> Value {
    fn gens<E: ElementJson>(items: &[(String, E)]) -> Value {
        Value::Object(items.iter().map(|(n, e)| (n.clone(), e.to_json())).collect())
    }
    let mut obj = Map::new();
    obj.insert("name".into(), Value::String(p.name().to_string()));
    match p {
        AnyPresentation::AlphaN(q) => {
            obj.insert("space".into(), json!("alphaN"));
            if let Some(f) = q.family {
                obj.insert("family".into(), json!(f.name()));
            }
            obj.insert("generators".into(), gens(&q.generators));
        }
        AnyPresentation::HalfLine(q) => {
            obj.insert("space".into(), json!("halfline"));
            obj.insert("generators".into(), gens(&q.generators));
        }
        AnyPresentation::Finite(q) => {
            obj.insert("space".into(), json!("finite"));
            obj.insert("finite_size".into(), json!(q.space.size()));
            obj.insert("generators".into(), gens(&q.generators));
        }
    }
    Value::Object(obj)
}
