//! On-disk character tables, one JSON file per n.

use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Value};

use specht_core::{partitions_of, CharacterTable, Partition};

pub const SCHEMA_VERSION: u64 = 1;

pub fn resolve_dir(flag: Option<PathBuf>) -> Option<PathBuf> {
    flag.or_else(|| std::env::var_os("SPECHT_CACHE_DIR").map(PathBuf::from))
        .or_else(|| std::env::var_os("XDG_CACHE_HOME").map(|d| PathBuf::from(d).join("specht")))
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("specht")))
}

fn path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("table-{n}.json"))
}

pub fn to_json(table: &CharacterTable) -> Value {
    let rows: Vec<Value> = table
        .values
        .iter()
        .map(|row| Value::Array(row.iter().map(crate::number).collect()))
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "n": table.n,
        "labels": table.labels,
        "classes": table.classes,
        "values": rows,
    })
}

#[derive(Deserialize)]
struct Stored {
    schema_version: u64,
    n: usize,
    labels: Vec<Partition>,
    classes: Vec<Partition>,
    values: Vec<Vec<serde_json::Number>>,
}

/// A cached table, if present, of the current schema, and still orthonormal.
pub fn load(dir: &Path, n: usize) -> Option<CharacterTable> {
    let text = std::fs::read_to_string(path(dir, n)).ok()?;
    let stored: Stored = serde_json::from_str(&text).ok()?;
    if stored.schema_version != SCHEMA_VERSION || stored.n != n {
        return None;
    }
    let labels: Vec<Partition> = partitions_of(n).collect();
    let classes: Vec<Partition> = labels.iter().rev().cloned().collect();
    if stored.labels != labels || stored.classes != classes {
        return None;
    }
    let values = stored
        .values
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| v.to_string().parse::<BigInt>().ok())
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<Vec<_>>>()?;
    let table = CharacterTable {
        n,
        labels,
        classes,
        values,
    };
    table.rows_orthonormal().then_some(table)
}

/// Writes to a temporary file in `dir`, then renames it into place.
pub fn store(dir: &Path, table: &CharacterTable) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    serde_json::to_writer(&mut tmp, &to_json(table))?;
    tmp.write_all(b"\n")?;
    tmp.persist(path(dir, table.n)).map_err(|e| e.error)?;
    Ok(())
}
