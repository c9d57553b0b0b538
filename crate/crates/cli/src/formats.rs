//! Text formats for groups.
//!
//! Cayley table file:
//!
//! ```text
//! order 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! labels
//! 0 e
//! 1 a
//! 2 a^2
//! ```
//!
//! Indices are zero-based and the `labels` section is optional. Blank lines
//! and lines starting with `#` are ignored.
//!
//! Generators file: a `degree N` line, then one permutation per line in
//! cycle notation on the points `1..=N`, e.g. `(1 2)(3 4)`.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use maxab_core::perm::from_permutation_generators;
use maxab_core::{FiniteGroup, Permutation};

use crate::error::CliError;

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn header(path: &Path, line: Option<(usize, &str)>, keyword: &str) -> Result<usize, CliError> {
    let (no, text) = line.ok_or_else(|| {
        CliError::parse(path, None, format!("empty file, expected `{keyword} N`"))
    })?;
    let mut parts = text.split_whitespace();
    if parts.next() != Some(keyword) {
        return Err(CliError::parse(
            path,
            Some(no),
            format!("expected `{keyword} N`, found `{text}`"),
        ));
    }
    let value = parts
        .next()
        .and_then(|v| v.parse::<usize>().ok())
        .ok_or_else(|| {
            CliError::parse(
                path,
                Some(no),
                format!("`{keyword}` needs a non-negative integer"),
            )
        })?;
    if parts.next().is_some() {
        return Err(CliError::parse(
            path,
            Some(no),
            format!("unexpected text after `{keyword} {value}`"),
        ));
    }
    Ok(value)
}

/// Parsed table file: rows in file order and optional labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableFile {
    pub rows: Vec<Vec<usize>>,
    pub labels: Option<Vec<String>>,
}

pub fn parse_table(path: &Path, text: &str) -> Result<TableFile, CliError> {
    let mut lines = content_lines(text);
    let n = header(path, lines.next(), "order")?;
    if n == 0 {
        return Err(CliError::parse(path, None, "order must be at least 1"));
    }
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let (no, line) = lines.next().ok_or_else(|| {
            CliError::parse(path, None, format!("expected {n} table rows, found {r}"))
        })?;
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| {
                    CliError::parse(
                        path,
                        Some(no),
                        format!("`{t}` is not a non-negative integer"),
                    )
                })
            })
            .collect::<Result<Vec<usize>, _>>()?;
        if row.len() != n {
            return Err(CliError::parse(
                path,
                Some(no),
                format!("row {r} has {} entries, expected {n}", row.len()),
            ));
        }
        if let Some(&bad) = row.iter().find(|&&v| v >= n) {
            return Err(CliError::parse(
                path,
                Some(no),
                format!("entry {bad} is out of range for order {n}"),
            ));
        }
        rows.push(row);
    }
    let labels = match lines.next() {
        None => None,
        Some((_, "labels")) => {
            let mut labels: Vec<Option<String>> = vec![None; n];
            for (no, line) in lines.by_ref() {
                let (index, label) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
                let index: usize = index.parse().ok().filter(|&i| i < n).ok_or_else(|| {
                    CliError::parse(
                        path,
                        Some(no),
                        format!("`{index}` is not an element index below {n}"),
                    )
                })?;
                let label = label.trim();
                if label.is_empty() {
                    return Err(CliError::parse(
                        path,
                        Some(no),
                        format!("missing label for element {index}"),
                    ));
                }
                if labels[index].replace(label.to_string()).is_some() {
                    return Err(CliError::parse(
                        path,
                        Some(no),
                        format!("element {index} is labelled twice"),
                    ));
                }
            }
            let missing: Vec<String> = (0..n)
                .filter(|&i| labels[i].is_none())
                .map(|i| i.to_string())
                .collect();
            if !missing.is_empty() {
                return Err(CliError::parse(
                    path,
                    None,
                    format!("no label for element(s) {}", missing.join(", ")),
                ));
            }
            Some(labels.into_iter().map(Option::unwrap).collect())
        }
        Some((no, other)) => {
            return Err(CliError::parse(
                path,
                Some(no),
                format!("expected `labels` or end of file, found `{other}`"),
            ))
        }
    };
    Ok(TableFile { rows, labels })
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "group".to_string())
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Reads and validates a Cayley table file. The group is named after the
/// file stem.
pub fn read_table_file(path: &Path) -> Result<FiniteGroup, CliError> {
    let text = read(path)?;
    let file = parse_table(path, &text)?;
    FiniteGroup::from_table(stem(path), &file.rows, file.labels)
        .map_err(|e| CliError::group(path.display().to_string(), e))
}

/// Table file text for `g`, in the labeling the group was read with: a
/// group whose input had its identity elsewhere than 0 is written back in
/// that original order.
pub fn write_table(g: &FiniteGroup) -> String {
    let n = g.order();
    // Internal index of input element i; the relabeling is an involution.
    let internal = |i: usize| g.relabeling().map_or(i, |m| m[i]);
    let mut out = String::new();
    writeln!(out, "order {n}").unwrap();
    for i in 0..n {
        let row: Vec<String> = (0..n)
            .map(|j| internal(g.mul(internal(i), internal(j))).to_string())
            .collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    if let Some(labels) = g.labels() {
        writeln!(out, "labels").unwrap();
        for i in 0..n {
            writeln!(out, "{i} {}", labels[internal(i)]).unwrap();
        }
    }
    out
}

pub fn parse_generators(path: &Path, text: &str) -> Result<(usize, Vec<Permutation>), CliError> {
    let mut lines = content_lines(text);
    let degree = header(path, lines.next(), "degree")?;
    let gens = lines
        .map(|(no, line)| {
            Permutation::parse(degree, line)
                .map_err(|e| CliError::parse(path, Some(no), e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((degree, gens))
}

/// Reads a generators file and closes the permutations into a group named
/// after the file stem.
pub fn read_generators_file(path: &Path) -> Result<FiniteGroup, CliError> {
    let text = read(path)?;
    let (degree, gens) = parse_generators(path, &text)?;
    let g = from_permutation_generators(degree, &gens)
        .map_err(|e| CliError::group(path.display().to_string(), e))?;
    Ok(g.with_name(stem(path)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use maxab_core::{family, FamilyKind};

    fn p() -> &'static Path {
        Path::new("test.table")
    }

    #[test]
    fn round_trip_with_labels() {
        let g = family(FamilyKind::Symmetric, 3).unwrap();
        let text = write_table(&g);
        let file = parse_table(p(), &text).unwrap();
        let h = FiniteGroup::from_table("S3", &file.rows, file.labels).unwrap();
        assert_eq!(write_table(&h), text);
        assert_eq!(h.rows(), g.rows());
    }

    #[test]
    fn identity_elsewhere_is_written_back_unchanged() {
        // Z/2 with the identity stored at index 1.
        let text = "order 2\n1 0\n0 1\n";
        let file = parse_table(p(), text).unwrap();
        let g = FiniteGroup::from_table("x", &file.rows, None).unwrap();
        assert_eq!(write_table(&g), text);
    }

    #[test]
    fn diagnostics_carry_line_numbers() {
        let err = parse_table(p(), "order 2\n0 1\n1 5\n").unwrap_err();
        assert_eq!(
            err.to_string(),
            "test.table:3: entry 5 is out of range for order 2"
        );
        let err = parse_table(p(), "# comment\nsize 2\n").unwrap_err();
        assert_eq!(
            err.to_string(),
            "test.table:2: expected `order N`, found `size 2`"
        );
        let err = parse_table(p(), "order 2\n0 1\n").unwrap_err();
        assert_eq!(
            err.to_string(),
            "test.table: expected 2 table rows, found 1"
        );
        let err = parse_table(p(), "order 2\n0 1\n1 0\nlabels\n0 e\n").unwrap_err();
        assert_eq!(err.to_string(), "test.table: no label for element(s) 1");
    }

    #[test]
    fn generators() {
        let (degree, gens) = parse_generators(p(), "degree 4\n(1 2)(3 4)\n\n(1 3)\n").unwrap();
        assert_eq!(degree, 4);
        assert_eq!(gens.len(), 2);
        let err = parse_generators(p(), "degree 3\n(1 4)\n").unwrap_err();
        assert!(err.to_string().starts_with("test.table:2:"));
    }
}
