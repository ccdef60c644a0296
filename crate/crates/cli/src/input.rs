//! Problem files: interpolation data or a plane parametrization.
//!
//! Rationals are accepted as JSON strings (`"p/q"`, `"p"`) or integers;
//! floats are rejected so nothing inexact sneaks in.

use std::fs;
use std::io::Read;
use std::path::Path;

use serde_json::Value;
use thiserror::Error;

use ratinterp::{parse_rational, InterpolationData, Node, PlaneParametrization, Poly, Rational};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {source_name}: {message}")]
    Io {
        source_name: String,
        message: String,
    },
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("{field}: {message}")]
    Field { field: String, message: String },
}

impl InputError {
    pub fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        InputError::Field {
            field: field.into(),
            message: message.into(),
        }
    }
}

pub enum Problem {
    Interpolation(InterpolationData),
    Parametrization(PlaneParametrization),
}

/// Reads JSON from a path, or from stdin when the path is absent or `-`.
pub fn read_json(path: Option<&Path>) -> Result<Value, InputError> {
    let text = match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).map_err(|e| InputError::Io {
            source_name: p.display().to_string(),
            message: e.to_string(),
        })?,
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| InputError::Io {
                    source_name: "stdin".into(),
                    message: e.to_string(),
                })?;
            buf
        }
    };
    serde_json::from_str(&text).map_err(|e| InputError::Json(e.to_string()))
}

pub fn parse_problem(value: &Value) -> Result<Problem, InputError> {
    let obj = value.as_object().ok_or_else(|| {
        InputError::field("$", "expected an object with \"points\" or \"r0\"/\"r1\"")
    })?;
    if obj.contains_key("points") {
        return parse_data(value).map(Problem::Interpolation);
    }
    if obj.contains_key("r0") || obj.contains_key("r1") {
        let r0 = parse_poly(obj.get("r0").unwrap_or(&Value::Null), "r0")?;
        let r1 = parse_poly(obj.get("r1").unwrap_or(&Value::Null), "r1")?;
        return parametrization(r0, r1).map(Problem::Parametrization);
    }
    Err(InputError::field(
        "$",
        "expected \"points\" or \"r0\"/\"r1\"",
    ))
}

pub fn parametrization(r0: Poly, r1: Poly) -> Result<PlaneParametrization, InputError> {
    PlaneParametrization::new(r0, r1).map_err(|e| InputError::field("r0/r1", e.to_string()))
}

pub fn parse_data(value: &Value) -> Result<InterpolationData, InputError> {
    let points = value
        .get("points")
        .and_then(Value::as_array)
        .ok_or_else(|| InputError::field("points", "expected an array"))?;
    if points.is_empty() {
        return Err(InputError::field("points", "at least one node is required"));
    }
    let mut nodes: Vec<Node> = Vec::with_capacity(points.len());
    for (i, point) in points.iter().enumerate() {
        let at = format!("points[{i}]");
        let x = parse_rat(point.get("x").unwrap_or(&Value::Null), &format!("{at}.x"))?;
        if nodes.iter().any(|node| node.x == x) {
            return Err(InputError::field(
                format!("{at}.x"),
                format!("duplicate node {x}"),
            ));
        }
        let values = point
            .get("values")
            .and_then(Value::as_array)
            .ok_or_else(|| InputError::field(format!("{at}.values"), "expected an array"))?;
        if values.is_empty() {
            return Err(InputError::field(
                format!("{at}.values"),
                "at least one value is required",
            ));
        }
        let values = values
            .iter()
            .enumerate()
            .map(|(j, v)| parse_rat(v, &format!("{at}.values[{j}]")))
            .collect::<Result<_, _>>()?;
        nodes.push(Node { x, values });
    }
    InterpolationData::new(nodes).map_err(|e| InputError::field("points", e.to_string()))
}

/// Ascending coefficient array.
pub fn parse_poly(value: &Value, field: &str) -> Result<Poly, InputError> {
    let coeffs = value
        .as_array()
        .ok_or_else(|| InputError::field(field, "expected an array of coefficients"))?;
    coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| parse_rat(c, &format!("{field}[{k}]")))
        .collect::<Result<Vec<_>, _>>()
        .map(Poly::from_coeffs)
}

pub fn parse_poly_str(text: &str, field: &str) -> Result<Poly, InputError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| InputError::field(field, format!("malformed JSON: {e}")))?;
    parse_poly(&value, field)
}

pub fn parse_rat(value: &Value, field: &str) -> Result<Rational, InputError> {
    match value {
        Value::String(s) => parse_rational(s)
            .map_err(|_| InputError::field(field, format!("invalid rational {s:?}"))),
        Value::Number(n) if n.is_i64() || n.is_u64() => {
            parse_rational(&n.to_string()).map_err(|e| InputError::field(field, e.to_string()))
        }
        Value::Number(n) => Err(InputError::field(
            field,
            format!("{n} is not exact; write rationals as \"p/q\" strings"),
        )),
        Value::Null => Err(InputError::field(field, "missing")),
        other => Err(InputError::field(
            field,
            format!("expected a rational, found {other}"),
        )),
    }
}
