//! Structural validator for the report schema.
//!
//! Supports exactly the subset of JSON Schema the shipped schema file
//! uses: `type`, `properties`, `required`, `items`, `enum`, and the
//! union keywords `anyOf`/`oneOf`, both read with match-at-least-one
//! semantics. References and the draft's other keywords are out of
//! scope; the schema file is written without them.

use serde_json::Value;

/// Checks `value` against `schema`, reporting the path of the first
/// violation found.
pub fn validate(schema: &Value, value: &Value) -> Result<(), String> {
    check(schema, value, "$")
}

fn check(schema: &Value, value: &Value, path: &str) -> Result<(), String> {
    let schema = match schema.as_object() {
        Some(object) => object,
        None => return Ok(()),
    };

    let union = schema
        .get("anyOf")
        .or_else(|| schema.get("oneOf"))
        .and_then(Value::as_array);
    if let Some(branches) = union {
        if !branches.iter().any(|b| check(b, value, path).is_ok()) {
            return Err(format!("{path}: matches no branch of the union"));
        }
        return Ok(());
    }

    if let Some(allowed) = schema.get("enum").and_then(Value::as_array) {
        if !allowed.iter().any(|candidate| candidate == value) {
            return Err(format!("{path}: not among the enumerated values"));
        }
    }

    if let Some(expected) = schema.get("type").and_then(Value::as_str) {
        let ok = match expected {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "number" => value.is_number(),
            "integer" => value.is_i64() || value.is_u64(),
            "boolean" => value.is_boolean(),
            "null" => value.is_null(),
            other => return Err(format!("{path}: unsupported schema type {other:?}")),
        };
        if !ok {
            return Err(format!("{path}: expected type {expected}"));
        }
    }

    if let Some(required) = schema.get("required").and_then(Value::as_array) {
        if let Some(map) = value.as_object() {
            for key in required.iter().filter_map(Value::as_str) {
                if !map.contains_key(key) {
                    return Err(format!("{path}: missing required key {key:?}"));
                }
            }
        }
    }

    if let Some(properties) = schema.get("properties").and_then(Value::as_object) {
        if let Some(map) = value.as_object() {
            for (key, subschema) in properties {
                if let Some(child) = map.get(key) {
                    check(subschema, child, &format!("{path}.{key}"))?;
                }
            }
        }
    }

    if let Some(items) = schema.get("items") {
        if let Some(elements) = value.as_array() {
            for (index, element) in elements.iter().enumerate() {
                check(items, element, &format!("{path}[{index}]"))?;
            }
        }
    }

    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn accepts_a_matching_object() {
        let schema = json!({
            "type": "object",
            "required": ["n", "values"],
            "properties": {
                "n": {"type": "integer"},
                "values": {"type": "array", "items": {"type": "number"}},
            }
        });
        assert_eq!(validate(&schema, &json!({"n": 2, "values": [1.0, 2.5]})), Ok(()));
    }

    #[test]
    fn reports_the_path_of_a_missing_key() {
        let schema = json!({"type": "object", "required": ["seed"]});
        let err = validate(&schema, &json!({})).unwrap_err();
        assert!(err.contains("seed"), "{err}");
    }

    #[test]
    fn reports_the_path_of_a_nested_type_violation() {
        let schema = json!({
            "type": "object",
            "properties": {"rows": {"type": "array", "items": {"type": "number"}}}
        });
        let err = validate(&schema, &json!({"rows": [1.0, "x"]})).unwrap_err();
        assert_eq!(err, "$.rows[1]: expected type number");
    }

    #[test]
    fn union_accepts_numbers_and_sentinels_but_not_other_strings() {
        let schema = json!({"anyOf": [
            {"type": "number"},
            {"enum": ["inf", "-inf", "nan"]},
        ]});
        assert_eq!(validate(&schema, &json!(1.5)), Ok(()));
        assert_eq!(validate(&schema, &json!("inf")), Ok(()));
        assert!(validate(&schema, &json!("fast")).is_err());
    }

    #[test]
    fn null_type_matches_only_null() {
        let schema = json!({"anyOf": [{"type": "number"}, {"type": "null"}]});
        assert_eq!(validate(&schema, &json!(null)), Ok(()));
        assert!(validate(&schema, &json!("null")).is_err());
    }
}
