//! Text file formats for monoids and M-sets.
//!
//! Elements carry user-chosen names in files and in all output; indices
//! exist only internally. Both formats are line-based, `#` starts a
//! comment, blank lines are ignored.

use std::sync::Arc;

use wtop_core::{ElemSet, MSet, Monoid};

use crate::CliError;

/// A monoid together with the element names it was declared with.
#[derive(Debug, Clone)]
pub struct NamedMonoid {
    pub monoid: Arc<Monoid>,
    pub names: Vec<String>,
}

impl NamedMonoid {
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Member names of a subset, in declared element order.
    pub fn set_names(&self, set: &ElemSet) -> Vec<String> {
        set.indices().iter().map(|&i| self.names[i].clone()).collect()
    }

    /// Render a subset as `{a, b}`.
    pub fn set_text(&self, set: &ElemSet) -> String {
        format!("{{{}}}", self.set_names(set).join(", "))
    }

    /// Parse a comma-separated list of element names; empty input is the
    /// empty subset.
    pub fn parse_subset(&self, csv: &str) -> Result<ElemSet, CliError> {
        let mut set = ElemSet::empty(self.monoid.order());
        for name in csv.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let index = self.index_of(name).ok_or_else(|| {
                CliError::Usage(format!("unknown monoid element '{name}'"))
            })?;
            set.insert(index);
        }
        Ok(set)
    }
}

/// An M-set together with the point names it was declared with.
#[derive(Debug, Clone)]
pub struct NamedMSet {
    pub object: MSet,
    pub points: Vec<String>,
}

impl NamedMSet {
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.points.iter().position(|n| n == name)
    }

    pub fn point_names(&self, indices: &[usize]) -> Vec<String> {
        indices.iter().map(|&i| self.points[i].clone()).collect()
    }

    pub fn set_text(&self, indices: &[usize]) -> String {
        format!("{{{}}}", self.point_names(indices).join(", "))
    }

    /// Parse a comma-separated list of point names.
    pub fn parse_points(&self, csv: &str) -> Result<Vec<usize>, CliError> {
        csv.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|name| {
                self.index_of(name)
                    .ok_or_else(|| CliError::Usage(format!("unknown point '{name}'")))
            })
            .collect()
    }
}

/// Significant lines of a file: comments stripped, blanks skipped, with
/// their original 1-based line numbers.
fn significant_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = raw.split('#').next().unwrap_or("").trim();
            (!line.is_empty()).then_some((i + 1, line))
        })
        .collect()
}

fn parse_err(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        path: None,
        line,
        message: message.into(),
    }
}

/// Take a `key:`-prefixed line, returning its payload.
fn expect_key<'a>(
    lines: &[(usize, &'a str)],
    at: usize,
    key: &str,
) -> Result<(usize, &'a str), CliError> {
    let last_line = lines.last().map_or(0, |(n, _)| *n);
    let (number, line) = lines
        .get(at)
        .ok_or_else(|| parse_err(last_line + 1, format!("expected '{key}:'")))?;
    line.strip_prefix(key)
        .and_then(|rest| rest.strip_prefix(':'))
        .map(|rest| (*number, rest.trim()))
        .ok_or_else(|| parse_err(*number, format!("expected '{key}:', found '{line}'")))
}

fn check_names(number: usize, names: &[String]) -> Result<(), CliError> {
    for (i, name) in names.iter().enumerate() {
        if name.contains(',') {
            return Err(parse_err(number, format!("name '{name}' contains a comma")));
        }
        if names[..i].contains(name) {
            return Err(parse_err(number, format!("duplicate name '{name}'")));
        }
    }
    Ok(())
}

/// Parse a monoid file:
///
/// ```text
/// elements: 1 0 s
/// identity: 1
/// table:
/// 1 0 s
/// 0 0 0
/// s 0 0
/// ```
///
/// Row `i`, column `k` of the table is the product (element `i`) * (element `k`).
pub fn parse_monoid_file(text: &str) -> Result<NamedMonoid, CliError> {
    let lines = significant_lines(text);

    let (elements_at, element_list) = expect_key(&lines, 0, "elements")?;
    let names: Vec<String> = element_list.split_whitespace().map(String::from).collect();
    if names.is_empty() {
        return Err(parse_err(elements_at, "a monoid needs at least one element"));
    }
    check_names(elements_at, &names)?;
    let order = names.len();

    let (identity_at, identity_name) = expect_key(&lines, 1, "identity")?;
    let identity = names
        .iter()
        .position(|n| n == identity_name)
        .ok_or_else(|| parse_err(identity_at, format!("unknown identity '{identity_name}'")))?;

    let (table_at, rest) = expect_key(&lines, 2, "table")?;
    if !rest.is_empty() {
        return Err(parse_err(table_at, "table rows start on the following lines"));
    }

    let mut mult = Vec::with_capacity(order * order);
    for row in 0..order {
        let (number, line) = lines
            .get(3 + row)
            .ok_or_else(|| parse_err(table_at + row + 1, format!("missing table row {row}")))?;
        let entries: Vec<&str> = line.split_whitespace().collect();
        if entries.len() != order {
            return Err(parse_err(
                *number,
                format!("row has {} entries, expected {order}", entries.len()),
            ));
        }
        for entry in entries {
            let index = names
                .iter()
                .position(|n| n == entry)
                .ok_or_else(|| parse_err(*number, format!("unknown element '{entry}'")))?;
            mult.push(index);
        }
    }
    if let Some((number, line)) = lines.get(3 + order) {
        return Err(parse_err(*number, format!("unexpected content '{line}'")));
    }

    let monoid = Monoid::new(order, mult, identity)?;
    Ok(NamedMonoid {
        monoid: Arc::new(monoid),
        names,
    })
}

/// The `monoid:` reference at the top of an M-set file.
pub fn mset_monoid_reference(text: &str) -> Result<String, CliError> {
    let lines = significant_lines(text);
    let (number, path) = expect_key(&lines, 0, "monoid")?;
    if path.is_empty() {
        return Err(parse_err(number, "missing monoid file path"));
    }
    Ok(path.to_string())
}

/// Parse an M-set file against an already-loaded monoid:
///
/// ```text
/// monoid: m3.mon
/// carrier: x y
/// action:
/// # rows = carrier, cols = monoid elements in declared order
/// x x y
/// y y y
/// ```
pub fn parse_mset_file(text: &str, monoid: &NamedMonoid) -> Result<NamedMSet, CliError> {
    let lines = significant_lines(text);
    expect_key(&lines, 0, "monoid")?;

    let (carrier_at, carrier_list) = expect_key(&lines, 1, "carrier")?;
    let points: Vec<String> = carrier_list.split_whitespace().map(String::from).collect();
    check_names(carrier_at, &points)?;
    let size = points.len();
    let order = monoid.monoid.order();

    let (action_at, rest) = expect_key(&lines, 2, "action")?;
    if !rest.is_empty() {
        return Err(parse_err(action_at, "action rows start on the following lines"));
    }

    let mut act = Vec::with_capacity(size * order);
    for row in 0..size {
        let (number, line) = lines
            .get(3 + row)
            .ok_or_else(|| parse_err(action_at + row + 1, format!("missing action row {row}")))?;
        let entries: Vec<&str> = line.split_whitespace().collect();
        if entries.len() != order {
            return Err(parse_err(
                *number,
                format!("row has {} entries, expected {order}", entries.len()),
            ));
        }
        for entry in entries {
            let index = points
                .iter()
                .position(|n| n == entry)
                .ok_or_else(|| parse_err(*number, format!("unknown point '{entry}'")))?;
            act.push(index);
        }
    }
    if let Some((number, line)) = lines.get(3 + size) {
        return Err(parse_err(*number, format!("unexpected content '{line}'")));
    }

    let object = MSet::new(&monoid.monoid, size, act)?;
    Ok(NamedMSet { object, points })
}
