use std::path::Path;

use toml::{Table, Value};

use crate::engine::{preset, ScenarioConfig, REQUIRED_SECTIONS};
use crate::error::{Error, Result};

/// Key naming a preset that the rest of the file overrides.
pub const PRESET_KEY: &str = "preset";

/// Reads and validates a scenario file.
pub fn parse_config(path: impl AsRef<Path>) -> Result<ScenarioConfig> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_config_str(&text).map_err(|e| match e {
        Error::Config(msg) => Error::Config(format!("{}: {msg}", path.display())),
        other => other,
    })
}

/// Parses a scenario from TOML text.
///
/// A file either spells out every section or names a `preset` and overrides
/// some of its keys. Unknown keys are rejected with their location.
pub fn parse_config_str(text: &str) -> Result<ScenarioConfig> {
    let table: Table = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
    let config = match table.get(PRESET_KEY) {
        None => {
            let missing: Vec<&str> = REQUIRED_SECTIONS
                .iter()
                .copied()
                .filter(|s| !table.contains_key(*s))
                .collect();
            if !missing.is_empty() {
                return Err(Error::Config(format!("missing required keys: {}", missing.join(", "))));
            }
            // Deserializing the text itself keeps line numbers in errors.
            toml::from_str::<ScenarioConfig>(text).map_err(|e| Error::Config(e.to_string()))?
        }
        Some(Value::String(name)) => {
            let mut overrides = table.clone();
            overrides.remove(PRESET_KEY);
            let mut base = to_table(&preset(name)?)?;
            merge(&mut base, overrides, "")?;
            from_table(base)?
        }
        Some(other) => {
            return Err(Error::Config(format!(
                "`{PRESET_KEY}` must be a string, got {}",
                other.type_str()
            )));
        }
    };
    config.validate()?;
    Ok(config)
}

fn to_table(config: &ScenarioConfig) -> Result<Table> {
    Table::try_from(config).map_err(|e| Error::Config(e.to_string()))
}

fn from_table(table: Table) -> Result<ScenarioConfig> {
    Value::Table(table)
        .try_into()
        .map_err(|e: toml::de::Error| Error::Config(e.to_string()))
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_string()
    } else {
        format!("{prefix}.{key}")
    }
}

/// Deep-merges `overrides` into `base`. Keys absent from `base` are errors,
/// except optional fields the serializer leaves out.
fn merge(base: &mut Table, overrides: Table, prefix: &str) -> Result<()> {
    for (key, value) in overrides {
        let path = join(prefix, &key);
        match (base.get_mut(&key), value) {
            (Some(Value::Table(b)), Value::Table(o)) => merge(b, o, &path)?,
            (Some(slot), v) => *slot = v,
            (None, v) if OPTIONAL_KEYS.contains(&path.as_str()) => {
                base.insert(key, v);
            }
            (None, _) => return Err(Error::Config(format!("unknown key `{path}`"))),
        }
    }
    Ok(())
}

/// Keys that may be absent from a serialized configuration.
const OPTIONAL_KEYS: [&str; 1] = ["channel.constants_file"];

/// Leaf keys of a configuration in dotted form, in serialization order.
pub fn config_keys(config: &ScenarioConfig) -> Result<Vec<String>> {
    fn walk(t: &Table, prefix: &str, out: &mut Vec<String>) {
        for (k, v) in t {
            let path = join(prefix, k);
            match v {
                Value::Table(sub) => walk(sub, &path, out),
                _ => out.push(path),
            }
        }
    }
    let mut out = Vec::new();
    walk(&to_table(config)?, "", &mut out);
    Ok(out)
}

/// Resolves a possibly abbreviated key to its dotted path. `key` matches a
/// full path, or a unique leaf whose name is `key` or starts with `key_`.
pub fn resolve_key(config: &ScenarioConfig, key: &str) -> Result<String> {
    let keys = config_keys(config)?;
    if keys.iter().any(|k| k == key) {
        return Ok(key.to_string());
    }
    let leaf = |k: &str| k.rsplit('.').next().unwrap_or(k).to_string();
    let exact: Vec<&String> = keys
        .iter()
        .filter(|k| leaf(k) == key || k.ends_with(&format!(".{key}")))
        .collect();
    let candidates = if exact.is_empty() {
        keys.iter()
            .filter(|k| leaf(k).starts_with(&format!("{key}_")))
            .collect()
    } else {
        exact
    };
    match candidates.as_slice() {
        [one] => Ok((*one).clone()),
        [] => Err(Error::Config(format!("unknown key `{key}`"))),
        many => Err(Error::Config(format!(
            "ambiguous key `{key}`: {}",
            many.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(", ")
        ))),
    }
}

/// Parses a command-line value as a TOML scalar, falling back to a bare
/// string.
pub fn parse_value(text: &str) -> Value {
    let text = text.trim();
    toml::from_str::<Table>(&format!("v = {text}"))
        .ok()
        .and_then(|mut t| t.remove("v"))
        .unwrap_or_else(|| Value::String(text.to_string()))
}

/// Returns `config` with the dotted `key` set to `value`, validated.
pub fn with_override(config: &ScenarioConfig, key: &str, value: Value) -> Result<ScenarioConfig> {
    let path = resolve_key(config, key)?;
    let mut table = to_table(config)?;
    let mut slot = &mut table;
    let parts: Vec<&str> = path.split('.').collect();
    let (last, parents) = parts.split_last().expect("split yields at least one part");
    for p in parents {
        slot = match slot.get_mut(*p) {
            Some(Value::Table(t)) => t,
            _ => return Err(Error::Config(format!("unknown key `{path}`"))),
        };
    }
    // Integers are accepted where floats are expected.
    let value = match (slot.get(*last), value) {
        (Some(Value::Float(_)), Value::Integer(i)) => Value::Float(i as f64),
        (_, v) => v,
    };
    slot.insert(last.to_string(), value);
    let out = from_table(table).map_err(|e| Error::Config(format!("{path}: {e}")))?;
    out.validate()?;
    Ok(out)
}
