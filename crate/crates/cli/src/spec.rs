//! Group descriptions on the command line.
//!
//! ```text
//! family <kind> <n>          cyclic | dihedral | symmetric | alternating | quaternion | klein
//! table <path>               Cayley table file
//! generators <path>          permutation generators file
//! product <spec> <spec>      direct product
//! ```

use std::fmt;
use std::path::PathBuf;

use maxab_core::{direct_product, family, FamilyKind, FiniteGroup};

use crate::error::CliError;
use crate::formats::{read_generators_file, read_table_file};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Family(FamilyKind, usize),
    Table(PathBuf),
    Generators(PathBuf),
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    /// Parses the whole token list as one spec.
    pub fn parse<S: AsRef<str>>(tokens: &[S]) -> Result<GroupSpec, CliError> {
        let tokens: Vec<&str> = tokens.iter().map(AsRef::as_ref).collect();
        let (spec, rest) = Self::parse_prefix(&tokens)?;
        if !rest.is_empty() {
            return Err(CliError::Usage(format!(
                "unexpected trailing arguments after group spec: {}",
                rest.join(" ")
            )));
        }
        Ok(spec)
    }

    fn parse_prefix<'a>(tokens: &'a [&'a str]) -> Result<(GroupSpec, &'a [&'a str]), CliError> {
        let usage = |m: &str| CliError::Usage(m.to_string());
        match tokens {
            [] => Err(usage(
                "missing group spec: expected `family <kind> <n>`, `table <path>`, `generators <path>` or `product <spec> <spec>`",
            )),
            ["family", kind, n, rest @ ..] => {
                let kind: FamilyKind = kind.parse().map_err(|_| {
                    usage(&format!(
                        "unknown family `{kind}`; expected one of {}",
                        FamilyKind::ALL.map(FamilyKind::as_str).join(", ")
                    ))
                })?;
                let n: usize = n
                    .parse()
                    .map_err(|_| usage(&format!("family parameter `{n}` is not a non-negative integer")))?;
                Ok((GroupSpec::Family(kind, n), rest))
            }
            ["family", ..] => Err(usage("`family` needs a kind and a parameter")),
            ["table", path, rest @ ..] => Ok((GroupSpec::Table(PathBuf::from(path)), rest)),
            ["generators", path, rest @ ..] => Ok((GroupSpec::Generators(PathBuf::from(path)), rest)),
            ["table" | "generators"] => Err(usage(&format!("`{}` needs a file path", tokens[0]))),
            ["product", rest @ ..] => {
                let (a, rest) = Self::parse_prefix(rest)?;
                let (b, rest) = Self::parse_prefix(rest)?;
                Ok((GroupSpec::Product(Box::new(a), Box::new(b)), rest))
            }
            [other, ..] => Err(usage(&format!("unknown group source `{other}`"))),
        }
    }

    pub fn resolve(&self) -> Result<FiniteGroup, CliError> {
        match self {
            GroupSpec::Family(kind, n) => {
                family(*kind, *n).map_err(|e| CliError::group(self.to_string(), e))
            }
            GroupSpec::Table(path) => read_table_file(path),
            GroupSpec::Generators(path) => read_generators_file(path),
            GroupSpec::Product(a, b) => {
                let (a, b) = (a.resolve()?, b.resolve()?);
                direct_product(&a, &b).map_err(|e| CliError::group(self.to_string(), e))
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Family(kind, n) => write!(f, "family {kind} {n}"),
            GroupSpec::Table(p) => write!(f, "table {}", p.display()),
            GroupSpec::Generators(p) => write!(f, "generators {}", p.display()),
            GroupSpec::Product(a, b) => write!(f, "product {a} {b}"),
        }
    }
}
