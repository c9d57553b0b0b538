//! On-disk corpus: one table file per entry plus `manifest.json`.

use std::fs;
use std::path::Path;

use maxab_core::{CatalogEntry, Fingerprint, FiniteGroup};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::formats::{read_table_file, write_table};

pub const MANIFEST: &str = "manifest.json";
pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    pub order: usize,
    pub fingerprint: String,
    pub provenance: String,
    /// Relative to the manifest's directory.
    pub path: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub schema: u32,
    pub max_order: usize,
    pub entries: Vec<ManifestEntry>,
}

/// Lowercase ASCII alphanumerics, with every other run of characters
/// collapsed to one `-`.
pub fn slug(name: &str) -> String {
    let mut out = String::new();
    for c in name.chars() {
        if c.is_ascii_alphanumeric() {
            out.push(c.to_ascii_lowercase());
        } else if !out.is_empty() && !out.ends_with('-') {
            out.push('-');
        }
    }
    while out.ends_with('-') {
        out.pop();
    }
    if out.is_empty() {
        out.push_str("group");
    }
    out
}

fn write_if_changed(path: &Path, contents: &str) -> Result<(), CliError> {
    if fs::read_to_string(path).is_ok_and(|old| old == contents) {
        return Ok(());
    }
    fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

/// Writes `entries` (assumed sorted by order) into `dir` and returns the
/// manifest. Unchanged files are left untouched.
pub fn write_catalog(
    dir: &Path,
    max_order: usize,
    entries: &[CatalogEntry],
) -> Result<Manifest, CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut records = Vec::with_capacity(entries.len());
    let mut k = 0;
    for (i, e) in entries.iter().enumerate() {
        let order = e.group.order();
        k = if i > 0 && entries[i - 1].group.order() == order {
            k + 1
        } else {
            1
        };
        let file = format!("{order:03}-{k:02}-{}.table", slug(e.name()));
        let text = format!(
            "# {}\n# {}\n{}",
            e.name(),
            e.provenance,
            write_table(&e.group)
        );
        write_if_changed(&dir.join(&file), &text)?;
        records.push(ManifestEntry {
            name: e.name().to_string(),
            order,
            fingerprint: e.fingerprint.to_string(),
            provenance: e.provenance.clone(),
            path: file,
        });
    }
    let manifest = Manifest {
        schema: SCHEMA,
        max_order,
        entries: records,
    };
    let mut json = serde_json::to_string_pretty(&manifest)?;
    json.push('\n');
    write_if_changed(&dir.join(MANIFEST), &json)?;
    Ok(manifest)
}

pub fn read_manifest(dir: &Path) -> Result<Manifest, CliError> {
    let path = dir.join(MANIFEST);
    let text = fs::read_to_string(&path).map_err(|e| CliError::io(&path, e))?;
    let manifest: Manifest = serde_json::from_str(&text)
        .map_err(|e| CliError::parse(&path, Some(e.line()), e.to_string()))?;
    if manifest.schema != SCHEMA {
        return Err(CliError::parse(
            &path,
            None,
            format!("unsupported manifest schema {}", manifest.schema),
        ));
    }
    Ok(manifest)
}

/// Loads every manifest entry of order at most `max_order`, checking each
/// table against its recorded fingerprint.
pub fn load_catalog(
    dir: &Path,
    manifest: &Manifest,
    max_order: usize,
) -> Result<Vec<FiniteGroup>, CliError> {
    manifest
        .entries
        .iter()
        .filter(|e| e.order <= max_order)
        .map(|e| {
            let path = dir.join(&e.path);
            let g = read_table_file(&path)?.with_name(e.name.clone());
            let found = Fingerprint::of(&g).to_string();
            if found != e.fingerprint {
                return Err(CliError::parse(
                    &path,
                    None,
                    format!(
                        "fingerprint `{found}` does not match the manifest's `{}`",
                        e.fingerprint
                    ),
                ));
            }
            Ok(g)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slugs() {
        assert_eq!(slug("C4 x C2"), "c4-x-c2");
        assert_eq!(slug("(C4xC2):C2"), "c4xc2-c2");
        assert_eq!(slug("--"), "group");
    }
}
