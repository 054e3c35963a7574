//! Line-oriented text cache for coefficient tables, keyed by
//! (name, ring, limit). Purely an optimization: deleting the cache never
//! changes results, and identical keys always hold identical contents, so
//! last-writer-wins collisions are benign.
//!
//! Format: a header of `key: value` lines (`table`, `ring`, `limit`), a `---`
//! separator, then one coefficient per line as a decimal string.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;

use crate::gen::{a_table, a_table_mod, xi_table, xi_table_mod, CoefficientTable, TableName};

fn ring_tag(modulus: Option<u64>) -> String {
    match modulus {
        None => "Z".to_string(),
        Some(m) => format!("Zmod{m}"),
    }
}

pub fn cache_file_name(name: TableName, modulus: Option<u64>, limit: usize) -> String {
    format!("{}-{}-{}.tbl", name.as_str(), ring_tag(modulus), limit)
}

pub fn store(dir: &Path, table: &CoefficientTable) -> io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(cache_file_name(
        table.name,
        table.modulus,
        table.computed_to(),
    ));
    let mut body = String::new();
    body.push_str(&format!("table: {}\n", table.name.as_str()));
    body.push_str(&format!("ring: {}\n", ring_tag(table.modulus)));
    body.push_str(&format!("limit: {}\n", table.computed_to()));
    body.push_str("---\n");
    for v in &table.values {
        body.push_str(&v.to_string());
        body.push('\n');
    }
    let tmp = path.with_extension("tbl.tmp");
    fs::write(&tmp, body)?;
    fs::rename(&tmp, &path)?;
    Ok(path)
}

pub fn load(
    dir: &Path,
    name: TableName,
    modulus: Option<u64>,
    limit: usize,
) -> io::Result<Option<CoefficientTable>> {
    let path = dir.join(cache_file_name(name, modulus, limit));
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e),
    };
    let bad = |msg: &str| io::Error::new(io::ErrorKind::InvalidData, format!("{path:?}: {msg}"));
    let mut lines = text.lines();
    let mut header = std::collections::BTreeMap::new();
    for line in lines.by_ref() {
        if line == "---" {
            break;
        }
        let (k, v) = line
            .split_once(": ")
            .ok_or_else(|| bad("malformed header line"))?;
        header.insert(k.to_string(), v.to_string());
    }
    if header.get("table").map(String::as_str) != Some(name.as_str())
        || header.get("ring").map(String::as_str) != Some(ring_tag(modulus).as_str())
        || header.get("limit").map(String::as_str) != Some(limit.to_string().as_str())
    {
        return Err(bad("header does not match requested key"));
    }
    let mut values = Vec::with_capacity(limit + 1);
    for line in lines {
        values.push(BigInt::from_str(line).map_err(|_| bad("bad coefficient"))?);
    }
    if values.len() != limit + 1 {
        return Err(bad("coefficient count does not match limit"));
    }
    Ok(Some(CoefficientTable {
        name,
        modulus,
        values,
    }))
}

/// Fetch from the cache when possible, compute and store otherwise.
/// `dir = None` disables caching entirely.
pub fn load_or_compute(
    dir: Option<&Path>,
    name: TableName,
    modulus: Option<u64>,
    limit: usize,
) -> io::Result<CoefficientTable> {
    if let Some(dir) = dir {
        if let Some(t) = load(dir, name, modulus, limit)? {
            return Ok(t);
        }
    }
    let table = match (name, modulus) {
        (TableName::Xi, None) => xi_table(limit),
        (TableName::Xi, Some(m)) => xi_table_mod(limit, m),
        (TableName::A, None) => a_table(limit),
        (TableName::A, Some(m)) => a_table_mod(limit, m),
    };
    if let Some(dir) = dir {
        store(dir, &table)?;
    }
    Ok(table)
}
