//! The family text format.
//!
//! First line `n k`, then one member per line as its elements in ascending
//! order, separated by single spaces. Blank lines and lines starting with
//! `#` are ignored. Writers emit members in colex order, so a write/read
//! round trip is byte-identical for canonical input.

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::kset::KSet;
use std::io::{BufRead, Write};
use std::path::Path;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Reads a family from anything line-oriented.
pub fn read_family(reader: impl BufRead) -> Result<SetFamily> {
    let mut header: Option<(usize, usize)> = None;
    let mut members: Vec<KSet> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let numbers: Vec<usize> = fields
            .iter()
            .map(|f| {
                f.parse::<usize>()
                    .map_err(|_| parse_err(lineno, format!("expected an integer, found {f:?}")))
            })
            .collect::<Result<_>>()?;
        match header {
            None => {
                if numbers.len() != 2 {
                    return Err(parse_err(
                        lineno,
                        format!("header must be \"n k\", found {} field(s)", numbers.len()),
                    ));
                }
                header = Some((numbers[0], numbers[1]));
            }
            Some((n, k)) => {
                if numbers.len() != k {
                    return Err(parse_err(
                        lineno,
                        format!("member has {} element(s), expected k = {k}", numbers.len()),
                    ));
                }
                if numbers.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(parse_err(lineno, "elements must be strictly ascending"));
                }
                let set = KSet::from_elems(n, &numbers)
                    .map_err(|e| parse_err(lineno, e.to_string()))?;
                members.push(set);
            }
        }
    }
    let (n, k) = header.ok_or_else(|| parse_err(0, "missing \"n k\" header line"))?;
    SetFamily::new(n, k, members)
}

/// Writes a family in canonical form (members in colex order).
pub fn write_family(mut writer: impl Write, f: &SetFamily) -> Result<()> {
    if f.k() == 0 && !f.is_empty() {
        return Err(Error::Input(
            "the text format cannot represent a member with zero elements".into(),
        ));
    }
    writeln!(writer, "{} {}", f.n(), f.k())?;
    for s in f.iter() {
        let elems: Vec<String> = s.to_vec().iter().map(|e| e.to_string()).collect();
        writeln!(writer, "{}", elems.join(" "))?;
    }
    Ok(())
}

pub fn read_family_path(path: &Path) -> Result<SetFamily> {
    let file = std::fs::File::open(path)?;
    read_family(std::io::BufReader::new(file))
}

pub fn write_family_path(path: &Path, f: &SetFamily) -> Result<()> {
    let mut buf = Vec::new();
    write_family(&mut buf, f)?;
    std::fs::write(path, buf)?;
    Ok(())
}

pub fn family_from_str(s: &str) -> Result<SetFamily> {
    read_family(std::io::Cursor::new(s))
}

pub fn family_to_string(f: &SetFamily) -> Result<String> {
    let mut buf = Vec::new();
    write_family(&mut buf, f)?;
    Ok(String::from_utf8(buf).expect("family text is always ASCII"))
}
