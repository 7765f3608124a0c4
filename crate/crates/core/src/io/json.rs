//! JSON chart tables and pair manifests.
//!
//! The table schema is
//!
//! ```json
//! {"charts": [{"name": "X", "segments": [{"label": "A", "value": 500.0}]}]}
//! ```
//!
//! and a pair manifest is a list of `{"left": name, "right": name}` objects.
//! Typing is strict: a numeric string where a number belongs is rejected,
//! as are keys outside the schema. Violations carry the path to the
//! offending element.

use serde_json::{Map, Value};

use crate::chart::{Segment, StackedBarChart};
use crate::error::Error;
use crate::io::{ChartTable, ParseError};

fn violation(path: impl Into<String>, reason: impl Into<String>) -> ParseError {
    ParseError::SchemaViolation {
        path: path.into(),
        reason: reason.into(),
    }
}

fn decode(bytes: &[u8]) -> Result<Value, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|e| ParseError::InvalidUtf8(e.valid_up_to()))?;
    serde_json::from_str(text).map_err(|e| violation("$", format!("invalid JSON: {e}")))
}

fn known_keys(object: &Map<String, Value>, path: &str, keys: &[&str]) -> Result<(), ParseError> {
    for key in object.keys() {
        if !keys.contains(&key.as_str()) {
            return Err(violation(
                format!("{path}.{key}"),
                "key is not part of the schema",
            ));
        }
    }
    Ok(())
}

fn string_field(object: &Map<String, Value>, path: &str, key: &str) -> Result<String, ParseError> {
    let field = format!("{path}.{key}");
    match object.get(key) {
        None => Err(violation(field, "missing")),
        Some(Value::String(s)) => Ok(s.clone()),
        Some(_) => Err(violation(field, "expected a string")),
    }
}

fn parse_segment(value: &Value, path: &str) -> Result<Segment, ParseError> {
    let object = value
        .as_object()
        .ok_or_else(|| violation(path, "expected an object"))?;
    known_keys(object, path, &["label", "value"])?;
    let label = string_field(object, path, "label")?;
    let field = format!("{path}.value");
    let number = match object.get("value") {
        None => return Err(violation(field, "missing")),
        Some(Value::Number(n)) => n
            .as_f64()
            .ok_or_else(|| violation(field, "not representable as a float"))?,
        Some(_) => return Err(violation(field, "expected a number")),
    };
    Ok(Segment::new(label, number))
}

fn parse_chart(value: &Value, path: &str) -> Result<StackedBarChart, Error> {
    let object = value
        .as_object()
        .ok_or_else(|| violation(path, "expected an object"))?;
    known_keys(object, path, &["name", "segments"])?;
    let name = string_field(object, path, "name")?;
    if name.trim().is_empty() {
        return Err(violation(format!("{path}.name"), "must be a non-empty string").into());
    }
    let segments = match object.get("segments") {
        None => return Err(violation(format!("{path}.segments"), "missing").into()),
        Some(Value::Array(items)) => items
            .iter()
            .enumerate()
            .map(|(i, item)| parse_segment(item, &format!("{path}.segments[{i}]")))
            .collect::<Result<Vec<_>, _>>()?,
        Some(_) => return Err(violation(format!("{path}.segments"), "expected an array").into()),
    };
    Ok(StackedBarChart::new(name, segments)?)
}

/// Parses the bytes of a JSON chart table. As with CSV, structural problems
/// are parse errors while value-domain problems are chart errors.
pub fn parse_json(bytes: &[u8]) -> Result<ChartTable, Error> {
    let root = decode(bytes)?;
    let object = root
        .as_object()
        .ok_or_else(|| violation("$", "expected an object"))?;
    known_keys(object, "$", &["charts"]).map_err(|e| match e {
        // Root-level keys read better without the "$." prefix.
        ParseError::SchemaViolation { path, reason } => ParseError::SchemaViolation {
            path: path.trim_start_matches("$.").to_string(),
            reason,
        },
        other => other,
    })?;
    let charts = match object.get("charts") {
        None => return Err(violation("charts", "missing").into()),
        Some(Value::Array(items)) => items,
        Some(_) => return Err(violation("charts", "expected an array").into()),
    };
    if charts.is_empty() {
        return Err(ParseError::EmptyCollection.into());
    }
    let charts = charts
        .iter()
        .enumerate()
        .map(|(i, item)| parse_chart(item, &format!("charts[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ChartTable::new(charts)?)
}

/// Emits a table in the schema [`parse_json`] accepts. Parsing the output
/// reproduces the table exactly.
pub fn serialize_json(table: &ChartTable) -> String {
    let mut text =
        serde_json::to_string_pretty(table).expect("validated tables hold only finite numbers");
    text.push('\n');
    text
}

/// Parses a pair manifest: an ordered JSON list of `{"left", "right"}` chart
/// names. Names are resolved against a table later, so an empty list is fine
/// here.
pub fn parse_pairs_manifest(bytes: &[u8]) -> Result<Vec<(String, String)>, Error> {
    let root = decode(bytes)?;
    let items = root
        .as_array()
        .ok_or_else(|| violation("$", "expected a list of {left, right} objects"))?;
    let mut pairs = Vec::with_capacity(items.len());
    for (i, item) in items.iter().enumerate() {
        let path = format!("[{i}]");
        let object = item
            .as_object()
            .ok_or_else(|| violation(&path, "expected an object"))?;
        known_keys(object, &path, &["left", "right"])?;
        let left = string_field(object, &path, "left")?;
        let right = string_field(object, &path, "right")?;
        pairs.push((left, right));
    }
    Ok(pairs)
}
