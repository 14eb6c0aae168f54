//! The `.sds` family file: a line-oriented text format that keeps the
//! residue lists readable next to the literature they come from.
//!
//! ```text
//! # optional comments
//! name 47-X
//! modulus 47
//! lambda 50
//! skew_block 0
//! block 1 2 3 4 6 ...
//! block 2 3 5 6 7 ...
//! ```
//!
//! `name` and `skew_block` are optional; `block` lines appear once per
//! block, in order.

use std::fmt;

use skewhad::diffsets::SdsFamily;
use skewhad::modring::{Modulus, ResidueSet};

/// A parsed family file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyRecord {
    pub name: Option<String>,
    pub family: SdsFamily,
    pub skew_block: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError(pub String);

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for FormatError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError(format!("line {line}: {}", message.into())))
}

pub fn parse(text: &str) -> Result<FamilyRecord, FormatError> {
    let mut name = None;
    let mut modulus: Option<Modulus> = None;
    let mut lambda: Option<u32> = None;
    let mut skew_block = None;
    let mut blocks: Vec<Vec<usize>> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None if line == "block" => ("block", ""),
            None => return err(lineno, format!("expected 'key value', got {line:?}")),
        };
        match key {
            "name" => name = Some(rest.to_string()),
            "modulus" => {
                let n: usize = rest
                    .parse()
                    .map_err(|_| FormatError(format!("line {lineno}: bad modulus {rest:?}")))?;
                modulus =
                    Some(Modulus::new(n).map_err(|e| FormatError(format!("line {lineno}: {e}")))?);
            }
            "lambda" => {
                lambda = Some(rest.parse().map_err(|_| {
                    FormatError(format!("line {lineno}: bad lambda {rest:?}"))
                })?);
            }
            "skew_block" => {
                skew_block = Some(rest.parse().map_err(|_| {
                    FormatError(format!("line {lineno}: bad skew_block {rest:?}"))
                })?);
            }
            "block" => {
                let mut members = Vec::new();
                for token in rest.split_whitespace() {
                    let m: usize = token.parse().map_err(|_| {
                        FormatError(format!("line {lineno}: bad residue {token:?}"))
                    })?;
                    members.push(m);
                }
                blocks.push(members);
            }
            other => return err(lineno, format!("unknown key {other:?}")),
        }
    }

    let modulus = modulus.ok_or_else(|| FormatError("missing 'modulus' line".into()))?;
    let lambda = lambda.ok_or_else(|| FormatError("missing 'lambda' line".into()))?;
    if blocks.is_empty() {
        return Err(FormatError("no 'block' lines".into()));
    }
    let sets: Vec<ResidueSet> = blocks
        .into_iter()
        .map(|members| {
            ResidueSet::from_members(modulus, members).map_err(|e| FormatError(e.to_string()))
        })
        .collect::<Result<_, _>>()?;
    let family = SdsFamily::new(sets, lambda).map_err(|e| FormatError(e.to_string()))?;
    if let Some(k) = skew_block {
        if k >= family.block_count() {
            return Err(FormatError(format!(
                "skew_block {k} out of range for {} blocks",
                family.block_count()
            )));
        }
    }
    Ok(FamilyRecord {
        name,
        family,
        skew_block,
    })
}

pub fn render(record: &FamilyRecord) -> String {
    let mut out = String::new();
    if let Some(name) = &record.name {
        out.push_str(&format!("name {name}\n"));
    }
    out.push_str(&format!("modulus {}\n", record.family.modulus()));
    out.push_str(&format!("lambda {}\n", record.family.lambda()));
    if let Some(k) = record.skew_block {
        out.push_str(&format!("skew_block {k}\n"));
    }
    for block in record.family.blocks() {
        let members: Vec<String> = block.iter().map(|x| x.to_string()).collect();
        if members.is_empty() {
            out.push_str("block\n");
        } else {
            out.push_str("block ");
            out.push_str(&members.join(" "));
            out.push('\n');
        }
    }
    out
}
