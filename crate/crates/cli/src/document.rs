//! The JSON triring document format.
//!
//! ```json
//! {"name":"z4z2","even":{"kind":"zn","n":4},"odd":{"kind":"zn","n":2},
//!  "lambda":[0,1,0,1],"rho":[0,1,0,1]}
//! {"kind":"triquaternion","base":{"kind":"zn","n":3}}
//! ```
//!
//! Ring descriptors are `{"kind":"zn","n":N}`,
//! `{"kind":"product","factors":[...]}` or
//! `{"kind":"table","size":K,"add":[[...]],"mul":[[...]],"one":J}`.
//! Explicit documents may carry `"kind":"explicit"`; it is dropped on
//! serialization. Canonical output has sorted keys and no whitespace.

use serde_json::{json, Map, Value};
use thiserror::Error;
use triring::{make_ring, triquaternions_over, build_triring, FiniteCommRing, Limits, RingDescriptor, Triring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("parse error at line {line}, column {column}: {expected}")]
    ParseError {
        line: usize,
        column: usize,
        expected: String,
    },
    #[error("schema error in `{field}`: {reason}")]
    SchemaError { field: String, reason: String },
    #[error("value out of range in `{field}` at index {index}")]
    RangeError { field: String, index: usize },
}

fn schema(field: &str, reason: impl Into<String>) -> DocumentError {
    DocumentError::SchemaError {
        field: field.to_string(),
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocumentBody {
    Explicit {
        even: RingDescriptor,
        odd: RingDescriptor,
        lambda: Vec<usize>,
        rho: Vec<usize>,
    },
    Triquaternion {
        base: RingDescriptor,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriringDocument {
    pub name: Option<String>,
    pub body: DocumentBody,
}

pub fn parse_document(text: &str) -> Result<TriringDocument, DocumentError> {
    let value: Value = serde_json::from_str(text).map_err(|e| DocumentError::ParseError {
        line: e.line(),
        column: e.column(),
        expected: e.to_string(),
    })?;
    from_value(&value)
}

pub fn from_value(value: &Value) -> Result<TriringDocument, DocumentError> {
    let obj = value
        .as_object()
        .ok_or_else(|| schema("", "document must be an object"))?;
    let name = match obj.get("name") {
        None => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err(schema("name", "expected a string")),
    };
    let kind = match obj.get("kind") {
        None => "explicit",
        Some(Value::String(s)) => s.as_str(),
        Some(_) => return Err(schema("kind", "expected a string")),
    };
    let body = match kind {
        "explicit" => {
            check_keys(obj, "", &["name", "kind", "even", "odd", "lambda", "rho"])?;
            let even = descriptor(required(obj, "", "even")?, "even")?;
            let odd = descriptor(required(obj, "", "odd")?, "odd")?;
            let n0 = carrier(&even, "even")?;
            let n1 = carrier(&odd, "odd")?;
            let lambda = index_list(required(obj, "", "lambda")?, "lambda", n0, n1)?;
            let rho = index_list(required(obj, "", "rho")?, "rho", n0, n1)?;
            DocumentBody::Explicit { even, odd, lambda, rho }
        }
        "triquaternion" => {
            check_keys(obj, "", &["name", "kind", "base"])?;
            let base = descriptor(required(obj, "", "base")?, "base")?;
            carrier(&base, "base")?;
            DocumentBody::Triquaternion { base }
        }
        other => return Err(schema("kind", format!("unknown document kind `{other}`"))),
    };
    Ok(TriringDocument { name, body })
}

fn join(prefix: &str, field: &str) -> String {
    if prefix.is_empty() {
        field.to_string()
    } else {
        format!("{prefix}.{field}")
    }
}

fn required<'a>(obj: &'a Map<String, Value>, prefix: &str, field: &str) -> Result<&'a Value, DocumentError> {
    obj.get(field)
        .ok_or_else(|| schema(&join(prefix, field), "missing field"))
}

fn check_keys(obj: &Map<String, Value>, prefix: &str, allowed: &[&str]) -> Result<(), DocumentError> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(schema(&join(prefix, k), "unknown field")),
        None => Ok(()),
    }
}

fn natural(value: &Value, field: &str) -> Result<usize, DocumentError> {
    value
        .as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| schema(field, "expected a non-negative integer"))
}

fn carrier(d: &RingDescriptor, field: &str) -> Result<usize, DocumentError> {
    d.carrier_size()
        .ok_or_else(|| schema(field, "carrier size overflows"))
}

fn descriptor(value: &Value, field: &str) -> Result<RingDescriptor, DocumentError> {
    let obj = value
        .as_object()
        .ok_or_else(|| schema(field, "ring descriptor must be an object"))?;
    let kind = required(obj, field, "kind")?
        .as_str()
        .ok_or_else(|| schema(&join(field, "kind"), "expected a string"))?;
    match kind {
        "zn" => {
            check_keys(obj, field, &["kind", "n"])?;
            let n = natural(required(obj, field, "n")?, &join(field, "n"))?;
            if n == 0 {
                return Err(schema(&join(field, "n"), "must be at least 1"));
            }
            Ok(RingDescriptor::Zn(n))
        }
        "product" => {
            check_keys(obj, field, &["kind", "factors"])?;
            let path = join(field, "factors");
            let factors = required(obj, field, "factors")?
                .as_array()
                .ok_or_else(|| schema(&path, "expected an array"))?;
            factors
                .iter()
                .enumerate()
                .map(|(i, f)| descriptor(f, &format!("{path}[{i}]")))
                .collect::<Result<Vec<_>, _>>()
                .map(RingDescriptor::Product)
        }
        "table" => {
            check_keys(obj, field, &["kind", "size", "add", "mul", "one"])?;
            let size = natural(required(obj, field, "size")?, &join(field, "size"))?;
            if size == 0 {
                return Err(schema(&join(field, "size"), "must be at least 1"));
            }
            let add = table(required(obj, field, "add")?, &join(field, "add"), size)?;
            let mul = table(required(obj, field, "mul")?, &join(field, "mul"), size)?;
            let one = natural(required(obj, field, "one")?, &join(field, "one"))?;
            if one >= size {
                return Err(DocumentError::RangeError {
                    field: join(field, "one"),
                    index: 0,
                });
            }
            Ok(RingDescriptor::Table { add, mul, one })
        }
        other => Err(schema(&join(field, "kind"), format!("unknown ring kind `{other}`"))),
    }
}

fn table(value: &Value, field: &str, size: usize) -> Result<Vec<Vec<usize>>, DocumentError> {
    let rows = value
        .as_array()
        .ok_or_else(|| schema(field, "expected an array of rows"))?;
    if rows.len() != size {
        return Err(schema(field, format!("expected {size} rows, found {}", rows.len())));
    }
    rows.iter()
        .enumerate()
        .map(|(r, row)| {
            let path = format!("{field}[{r}]");
            let row = row.as_array().ok_or_else(|| schema(&path, "expected an array"))?;
            if row.len() != size {
                return Err(schema(&path, format!("expected {size} entries, found {}", row.len())));
            }
            row.iter()
                .enumerate()
                .map(|(c, v)| {
                    let v = natural(v, &path)?;
                    if v >= size {
                        return Err(DocumentError::RangeError {
                            field: path.clone(),
                            index: c,
                        });
                    }
                    Ok(v)
                })
                .collect()
        })
        .collect()
}

fn index_list(value: &Value, field: &str, len: usize, bound: usize) -> Result<Vec<usize>, DocumentError> {
    let items = value
        .as_array()
        .ok_or_else(|| schema(field, "expected an array"))?;
    if items.len() != len {
        return Err(schema(
            field,
            format!("length mismatch: expected {len}, found {}", items.len()),
        ));
    }
    items
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let v = natural(v, field)?;
            if v >= bound {
                return Err(DocumentError::RangeError {
                    field: field.to_string(),
                    index: i,
                });
            }
            Ok(v)
        })
        .collect()
}

fn descriptor_value(d: &RingDescriptor) -> Value {
    match d {
        RingDescriptor::Zn(n) => json!({"kind": "zn", "n": n}),
        RingDescriptor::Product(factors) => {
            json!({"kind": "product", "factors": factors.iter().map(descriptor_value).collect::<Vec<_>>()})
        }
        RingDescriptor::Table { add, mul, one } => {
            json!({"kind": "table", "size": add.len(), "add": add, "mul": mul, "one": one})
        }
    }
}

/// A ring's own tables as a descriptor.
pub fn table_descriptor(ring: &FiniteCommRing) -> RingDescriptor {
    RingDescriptor::Table {
        add: ring.add_table(),
        mul: ring.mul_table(),
        one: ring.one(),
    }
}

impl TriringDocument {
    /// An explicit document reproducing `ring` from its tables.
    pub fn from_triring(ring: &Triring) -> Self {
        TriringDocument {
            name: Some(ring.name().to_string()),
            body: DocumentBody::Explicit {
                even: table_descriptor(ring.even()),
                odd: table_descriptor(ring.odd()),
                lambda: ring.lambda_table().to_vec(),
                rho: ring.rho_table().to_vec(),
            },
        }
    }

    pub fn to_value(&self) -> Value {
        let mut obj = Map::new();
        if let Some(name) = &self.name {
            obj.insert("name".into(), Value::String(name.clone()));
        }
        match &self.body {
            DocumentBody::Explicit { even, odd, lambda, rho } => {
                obj.insert("even".into(), descriptor_value(even));
                obj.insert("odd".into(), descriptor_value(odd));
                obj.insert("lambda".into(), json!(lambda));
                obj.insert("rho".into(), json!(rho));
            }
            DocumentBody::Triquaternion { base } => {
                obj.insert("kind".into(), json!("triquaternion"));
                obj.insert("base".into(), descriptor_value(base));
            }
        }
        Value::Object(obj)
    }

    /// Sorted keys, no insignificant whitespace.
    pub fn to_canonical_string(&self) -> String {
        self.to_value().to_string()
    }

    pub fn display_name(&self) -> &str {
        match (&self.name, &self.body) {
            (Some(n), _) => n,
            (None, DocumentBody::Triquaternion { .. }) => "triquaternions",
            (None, DocumentBody::Explicit { .. }) => "triring",
        }
    }

    /// Builds and validates the triring.
    pub fn build(&self, limits: &Limits) -> triring::Result<Triring> {
        let ring = match &self.body {
            DocumentBody::Explicit { even, odd, lambda, rho } => build_triring(
                self.display_name(),
                make_ring(even, limits)?,
                make_ring(odd, limits)?,
                lambda.clone(),
                rho.clone(),
            )?,
            DocumentBody::Triquaternion { base } => {
                triquaternions_over(&make_ring(base, limits)?, limits)?
            }
        };
        Ok(ring.with_name(self.display_name()))
    }
}
