//! Field-by-field decoding of registry files so errors can name the code and
//! field at fault.

use serde::de::DeserializeOwned;
use serde_json::{Map, Value};

use super::{CodeSpec, RegistryError, SCHEMA_VERSION};

const CODE_FIELDS: [&str; 12] = [
    "id",
    "display_name",
    "overhead",
    "distance",
    "k",
    "threshold",
    "protection",
    "decoders",
    "transversal",
    "scalable",
    "realizations",
    "complexity",
];

fn field_error(location: &str, field: &str, message: impl Into<String>) -> RegistryError {
    RegistryError::Field {
        location: location.to_string(),
        field: field.to_string(),
        message: message.into(),
    }
}

pub(super) fn parse_registry(value: &Value) -> Result<Vec<CodeSpec>, RegistryError> {
    let root = value
        .as_object()
        .ok_or_else(|| field_error("registry", "(root)", "expected a JSON object"))?;
    for key in root.keys() {
        if key != "schema_version" && key != "codes" {
            return Err(field_error("registry", key, "unknown field"));
        }
    }
    let version = root
        .get("schema_version")
        .ok_or_else(|| field_error("registry", "schema_version", "missing"))?
        .as_u64()
        .ok_or_else(|| field_error("registry", "schema_version", "expected an integer"))?;
    if version != u64::from(SCHEMA_VERSION) {
        return Err(RegistryError::SchemaVersion(version));
    }
    let codes = root
        .get("codes")
        .ok_or_else(|| field_error("registry", "codes", "missing"))?
        .as_array()
        .ok_or_else(|| field_error("registry", "codes", "expected an array"))?;
    codes
        .iter()
        .enumerate()
        .map(|(i, v)| parse_code(i, v))
        .collect()
}

fn parse_code(index: usize, value: &Value) -> Result<CodeSpec, RegistryError> {
    let anon = format!("codes[{index}]");
    let obj = value
        .as_object()
        .ok_or_else(|| field_error(&anon, "(entry)", "expected a JSON object"))?;
    let id: String = get(obj, &anon, "id")?;
    let location = format!("code `{id}`");
    if let Some(key) = obj.keys().find(|k| !CODE_FIELDS.contains(&k.as_str())) {
        return Err(field_error(&location, key, "unknown field"));
    }
    let loc = location.as_str();
    Ok(CodeSpec {
        id,
        display_name: get(obj, loc, "display_name")?,
        overhead: get(obj, loc, "overhead")?,
        distance_domain: get(obj, loc, "distance")?,
        logical_qubits_per_block: get(obj, loc, "k")?,
        threshold: get(obj, loc, "threshold")?,
        protection: get(obj, loc, "protection")?,
        decoders: get(obj, loc, "decoders")?,
        transversal: get(obj, loc, "transversal")?,
        scalable: get(obj, loc, "scalable")?,
        realizations: get(obj, loc, "realizations")?,
        complexity: get(obj, loc, "complexity")?,
    })
}

fn get<T: DeserializeOwned>(obj: &Map<String, Value>, location: &str, field: &str) -> Result<T, RegistryError> {
    let value = obj
        .get(field)
        .ok_or_else(|| field_error(location, field, "missing"))?;
    T::deserialize(value).map_err(|e| field_error(location, field, e.to_string()))
}
