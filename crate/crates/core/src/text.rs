//! Plain-text table and parameter files.
//!
//! A table file holds optional `#` comment lines, one line of distinct
//! element names, then one row of products per element (row = left factor):
//!
//! ```text
//! # right zero on two elements
//! x y
//! x y
//! x y
//! ```
//!
//! A parameter file names a construction, its two parts, and its maps:
//!
//! ```text
//! construction: 2
//! A:
//! set: a
//! B:
//! b 0
//! 0 0
//! 0 0
//! alpha:
//! a -> b
//! beta:
//! a -> 0
//! gamma:
//! b -> 0
//! 0 -> 0
//! ```
//!
//! Parts that must be semigroups are given as a table block, bare-set parts
//! as `set:` followed by their element names.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::constructions::{BareSet, ConstructionParams, Family};
use crate::retract::{RetractError, RetractSemigroup};
use crate::semigroup::{ElementMap, FiniteSemigroup, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error("part {part}: {source}")]
    Part {
        part: &'static str,
        #[source]
        source: RetractError,
    },
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            line,
            message: message.into(),
        }
    }

    /// Malformed text, as opposed to well-formed text describing an invalid structure.
    pub fn is_syntax(&self) -> bool {
        matches!(self, ParseError::Syntax { .. })
    }
}

/// A parsed but not yet validated Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTable {
    pub names: Vec<String>,
    pub rows: Vec<Vec<usize>>,
}

impl RawTable {
    pub fn into_semigroup(self) -> Result<FiniteSemigroup, SemigroupError> {
        FiniteSemigroup::new(self.names, self.rows)
    }
}

/// Numbered lines with comments and blank lines removed.
fn content_lines(src: &str) -> Vec<(usize, &str)> {
    src.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn parse_table_lines(lines: &[(usize, &str)], context_line: usize) -> Result<RawTable, ParseError> {
    let Some(&(header_line, header)) = lines.first() else {
        return Err(ParseError::at(context_line, "missing element names"));
    };
    let names: Vec<String> = header.split_whitespace().map(str::to_string).collect();
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.as_str(), i).is_some() {
            return Err(ParseError::at(
                header_line,
                format!("duplicate element name `{}`", name),
            ));
        }
    }
    let n = names.len();
    let body = &lines[1..];
    if body.len() != n {
        let line = body.last().map_or(header_line, |l| l.0);
        return Err(ParseError::at(
            line,
            format!("expected {} rows, found {}", n, body.len()),
        ));
    }
    let mut rows = Vec::with_capacity(n);
    for &(line, text) in body {
        let cells: Vec<&str> = text.split_whitespace().collect();
        if cells.len() != n {
            return Err(ParseError::at(
                line,
                format!("expected {} entries, found {}", n, cells.len()),
            ));
        }
        let row = cells
            .iter()
            .map(|c| {
                index
                    .get(c)
                    .copied()
                    .ok_or_else(|| ParseError::at(line, format!("unknown element `{}`", c)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(RawTable { names, rows })
}

/// Parses a table file without checking associativity.
pub fn parse_table(src: &str) -> Result<RawTable, ParseError> {
    parse_table_lines(&content_lines(src), 1)
}

/// Parses and validates a table file.
pub fn read_semigroup(src: &str) -> Result<FiniteSemigroup, ParseError> {
    Ok(parse_table(src)?.into_semigroup()?)
}

pub fn format_table(s: &FiniteSemigroup) -> String {
    let mut out = s.names().join(" ");
    out.push('\n');
    for x in 0..s.order() {
        let row: Vec<&str> = s.row(x).iter().map(|&p| s.name(p)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

enum PartText {
    Table(RawTable),
    Set(Vec<String>),
}

struct Section<'a> {
    line: usize,
    body: Vec<(usize, &'a str)>,
}

const SECTIONS: [&str; 5] = ["A", "B", "alpha", "beta", "gamma"];

fn section_header(text: &str) -> Option<(&'static str, &str)> {
    let (key, rest) = text.split_once(':')?;
    let key = key.trim();
    SECTIONS
        .iter()
        .find(|s| **s == key)
        .map(|s| (*s, rest.trim()))
}

fn parse_part(name: &'static str, section: &Section<'_>) -> Result<PartText, ParseError> {
    if let Some(&(line, first)) = section.body.first() {
        if let Some(rest) = first.strip_prefix("set:") {
            if section.body.len() > 1 {
                return Err(ParseError::at(
                    section.body[1].0,
                    format!("unexpected line after `set:` in {}", name),
                ));
            }
            let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            if names.is_empty() {
                return Err(ParseError::at(
                    line,
                    format!("part {} has no elements", name),
                ));
            }
            let mut seen = HashSet::new();
            if let Some(dup) = names.iter().find(|n| !seen.insert(n.as_str())) {
                return Err(ParseError::at(
                    line,
                    format!("duplicate element name `{}`", dup),
                ));
            }
            return Ok(PartText::Set(names));
        }
    }
    Ok(PartText::Table(parse_table_lines(
        &section.body,
        section.line,
    )?))
}

fn parse_map(
    name: &'static str,
    section: &Section<'_>,
    domain: &[String],
    codomain: &[String],
) -> Result<ElementMap, ParseError> {
    let lookup = |names: &[String], x: &str, line: usize| {
        names.iter().position(|n| n == x).ok_or_else(|| {
            ParseError::at(
                line,
                format!("`{}` is not an element of the expected part", x),
            )
        })
    };
    let mut image: Vec<Option<usize>> = vec![None; domain.len()];
    for &(line, text) in &section.body {
        let (x, y) = text
            .split_once("->")
            .ok_or_else(|| ParseError::at(line, format!("expected `x -> y` in {}", name)))?;
        let x = lookup(domain, x.trim(), line)?;
        let y = lookup(codomain, y.trim(), line)?;
        if image[x].replace(y).is_some() {
            return Err(ParseError::at(
                line,
                format!("{} is defined twice at `{}`", name, domain[x]),
            ));
        }
    }
    let image = image
        .into_iter()
        .enumerate()
        .map(|(x, y)| {
            y.ok_or_else(|| {
                ParseError::at(
                    section.line,
                    format!("{} is undefined at `{}`", name, domain[x]),
                )
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ElementMap::new(codomain.len(), image)?)
}

fn retract_part(
    part: &'static str,
    given: PartText,
    line: usize,
) -> Result<RetractSemigroup, ParseError> {
    match given {
        PartText::Table(raw) => {
            let s = raw.into_semigroup()?;
            RetractSemigroup::from_semigroup(s).map_err(|source| ParseError::Part { part, source })
        }
        PartText::Set(_) => Err(ParseError::at(
            line,
            format!("part {} must be given as a table", part),
        )),
    }
}

fn bare_part(part: &'static str, given: PartText, line: usize) -> Result<BareSet, ParseError> {
    match given {
        PartText::Set(names) => Ok(BareSet::new(names)?),
        PartText::Table(_) => Err(ParseError::at(
            line,
            format!("part {} must be given as `set: ...`", part),
        )),
    }
}

/// `(map, domain is A, codomain is A)` for every map the family uses.
fn family_maps(family: Family) -> &'static [(&'static str, bool, bool)] {
    match family {
        Family::Semilattice => &[("alpha", true, false), ("beta", false, false)],
        Family::Zero => &[
            ("alpha", true, false),
            ("beta", true, false),
            ("gamma", false, false),
        ],
        Family::Group => &[("alpha", true, false), ("gamma", false, true)],
        Family::RightZero => &[("alpha", true, false), ("beta", false, true)],
    }
}

/// Parses a parameter file. Equation checks are left to
/// [`ConstructionParams::validate`].
pub fn parse_params(src: &str) -> Result<ConstructionParams, ParseError> {
    let lines = content_lines(src);
    let Some(&(first_line, first)) = lines.first() else {
        return Err(ParseError::at(1, "empty parameter file"));
    };
    let family = first
        .strip_prefix("construction:")
        .and_then(|k| k.trim().parse::<u8>().ok())
        .and_then(Family::from_number)
        .ok_or_else(|| ParseError::at(first_line, "expected `construction: 1|2|3|4`"))?;

    let mut sections: BTreeMap<&'static str, Section<'_>> = BTreeMap::new();
    let mut current: Option<&'static str> = None;
    for &(line, text) in &lines[1..] {
        if let Some((key, rest)) = section_header(text) {
            if sections.contains_key(key) {
                return Err(ParseError::at(
                    line,
                    format!("section `{}` appears twice", key),
                ));
            }
            let mut body = Vec::new();
            if !rest.is_empty() {
                body.push((line, rest));
            }
            sections.insert(key, Section { line, body });
            current = Some(key);
        } else {
            let key =
                current.ok_or_else(|| ParseError::at(line, "content before the first section"))?;
            sections
                .get_mut(key)
                .expect("current section exists")
                .body
                .push((line, text));
        }
    }

    fn take<'a>(
        sections: &mut BTreeMap<&'static str, Section<'a>>,
        key: &'static str,
        line: usize,
    ) -> Result<Section<'a>, ParseError> {
        sections
            .remove(key)
            .ok_or_else(|| ParseError::at(line, format!("missing section `{}`", key)))
    }
    let sec_a = take(&mut sections, "A", first_line)?;
    let sec_b = take(&mut sections, "B", first_line)?;
    let given_a = parse_part("A", &sec_a)?;
    let given_b = parse_part("B", &sec_b)?;
    let names_of = |given: &PartText| match given {
        PartText::Table(raw) => raw.names.clone(),
        PartText::Set(names) => names.clone(),
    };
    let (names_a, names_b) = (names_of(&given_a), names_of(&given_b));

    let mut maps: HashMap<&'static str, ElementMap> = HashMap::new();
    for &(name, from_a, to_a) in family_maps(family) {
        let section = take(&mut sections, name, first_line)?;
        let domain = if from_a { &names_a } else { &names_b };
        let codomain = if to_a { &names_a } else { &names_b };
        maps.insert(name, parse_map(name, &section, domain, codomain)?);
    }
    if let Some((key, section)) = sections.into_iter().next() {
        return Err(ParseError::at(
            section.line,
            format!(
                "section `{}` is not used by construction {}",
                key,
                family.number()
            ),
        ));
    }
    let mut map = |name| maps.remove(name).expect("parsed above");
    Ok(match family {
        Family::Semilattice => ConstructionParams::Semilattice {
            a: retract_part("A", given_a, sec_a.line)?,
            b: retract_part("B", given_b, sec_b.line)?,
            alpha: map("alpha"),
            beta: map("beta"),
        },
        Family::Zero => ConstructionParams::Zero {
            a: bare_part("A", given_a, sec_a.line)?,
            b: retract_part("B", given_b, sec_b.line)?,
            alpha: map("alpha"),
            beta: map("beta"),
            gamma: map("gamma"),
        },
        Family::Group => ConstructionParams::Group {
            a: retract_part("A", given_a, sec_a.line)?,
            b: bare_part("B", given_b, sec_b.line)?,
            alpha: map("alpha"),
            gamma: map("gamma"),
        },
        Family::RightZero => ConstructionParams::RightZero {
            a: retract_part("A", given_a, sec_a.line)?,
            b: retract_part("B", given_b, sec_b.line)?,
            alpha: map("alpha"),
            beta: map("beta"),
        },
    })
}

/// Writes a parameter file that [`parse_params`] reads back to the same value.
pub fn format_params(params: &ConstructionParams) -> String {
    let mut out = format!("construction: {}\n", params.family().number());
    let (names_a, names_b) = (params.a_names(), params.b_names());
    let write_map =
        |out: &mut String, name: &str, map: &ElementMap, domain: &[String], codomain: &[String]| {
            writeln!(out, "{}:", name).unwrap();
            for (x, &y) in map.image().iter().enumerate() {
                writeln!(out, "{} -> {}", domain[x], codomain[y]).unwrap();
            }
        };
    let write_table = |out: &mut String, label: &str, part: &RetractSemigroup| {
        writeln!(out, "{}:", label).unwrap();
        out.push_str(&format_table(part.semigroup()));
    };
    let write_set = |out: &mut String, label: &str, part: &BareSet| {
        writeln!(out, "{}:\nset: {}", label, part.names().join(" ")).unwrap();
    };
    match params {
        ConstructionParams::Semilattice { a, b, alpha, beta } => {
            write_table(&mut out, "A", a);
            write_table(&mut out, "B", b);
            write_map(&mut out, "alpha", alpha, names_a, names_b);
            write_map(&mut out, "beta", beta, names_b, names_b);
        }
        ConstructionParams::Zero {
            a,
            b,
            alpha,
            beta,
            gamma,
        } => {
            write_set(&mut out, "A", a);
            write_table(&mut out, "B", b);
            write_map(&mut out, "alpha", alpha, names_a, names_b);
            write_map(&mut out, "beta", beta, names_a, names_b);
            write_map(&mut out, "gamma", gamma, names_b, names_b);
        }
        ConstructionParams::Group { a, b, alpha, gamma } => {
            write_table(&mut out, "A", a);
            write_set(&mut out, "B", b);
            write_map(&mut out, "alpha", alpha, names_a, names_b);
            write_map(&mut out, "gamma", gamma, names_b, names_a);
        }
        ConstructionParams::RightZero { a, b, alpha, beta } => {
            write_table(&mut out, "A", a);
            write_table(&mut out, "B", b);
            write_map(&mut out, "alpha", alpha, names_a, names_b);
            write_map(&mut out, "beta", beta, names_b, names_a);
        }
    }
    out
}
