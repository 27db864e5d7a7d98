//! Text formats for Cayley tables and action tables.
//!
//! Tables: the order `m` on the first line, an optional `labels:` line with
//! `m` distinct names, then `m` rows of `m` indices. Actions: `n k` on the
//! first line, then `n` rows of `k` indices. `#` starts a comment; blank
//! lines are skipped. Parsing checks shape and ranges only; the algebraic
//! validators decide the rest.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use crate::action::ActionTable;
use crate::error::{ParseError, Result};

/// A square table as read from a file, before any axiom checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTable {
    pub rows: Vec<Vec<usize>>,
    pub labels: Option<Vec<String>>,
}

/// Non-comment lines with their 1-based line numbers and the byte offset
/// each token starts at.
fn content_lines(text: &str) -> Vec<(usize, Vec<(usize, &str)>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let body = line.split('#').next().unwrap_or("");
            let tokens: Vec<(usize, &str)> = body
                .split_whitespace()
                .map(|t| (t.as_ptr() as usize - line.as_ptr() as usize + 1, t))
                .collect();
            (!tokens.is_empty()).then_some((i + 1, tokens))
        })
        .collect()
}

fn number(line: usize, (column, token): (usize, &str), what: &str) -> Result<usize, ParseError> {
    token
        .parse::<usize>()
        .map_err(|_| ParseError::new(line, Some(column), format!("expected {what}, found '{token}'")))
}

fn index_row(line: usize, tokens: &[(usize, &str)], width: usize, bound: usize, row: usize) -> Result<Vec<usize>, ParseError> {
    if tokens.len() != width {
        return Err(ParseError::new(
            line,
            None,
            format!("row {row} has {} entries, expected {width}", tokens.len()),
        ));
    }
    tokens
        .iter()
        .map(|&tok| {
            let v = number(line, tok, "an element index")?;
            if v >= bound {
                return Err(ParseError::new(line, Some(tok.0), format!("index {v} is out of range 0..{bound}")));
            }
            Ok(v)
        })
        .collect()
}

pub fn parse_table(text: &str) -> Result<RawTable, ParseError> {
    let lines = content_lines(text);
    let mut it = lines.iter();
    let Some((first, header)) = it.next() else {
        return Err(ParseError::new(1, None, "empty input: expected the table order"));
    };
    if header.len() != 1 {
        return Err(ParseError::new(*first, None, "the first line must hold only the order"));
    }
    let m = number(*first, header[0], "the table order")?;
    if m == 0 {
        return Err(ParseError::new(*first, Some(header[0].0), "the order must be positive"));
    }
    let mut rest: Vec<&(usize, Vec<(usize, &str)>)> = it.collect();
    let mut labels = None;
    if let Some((line, tokens)) = rest.first() {
        if tokens[0].1 == "labels:" {
            let names: Vec<String> = tokens[1..].iter().map(|t| t.1.to_string()).collect();
            if names.len() != m {
                return Err(ParseError::new(*line, None, format!("{} labels for order {m}", names.len())));
            }
            let mut seen = HashSet::new();
            for (i, name) in names.iter().enumerate() {
                if !seen.insert(name.as_str()) {
                    return Err(ParseError::new(*line, Some(tokens[i + 1].0), format!("duplicate label '{name}'")));
                }
            }
            labels = Some(names);
            rest.remove(0);
        }
    }
    if rest.len() < m {
        let line = rest.last().map_or(*first, |l| l.0);
        return Err(ParseError::new(line, None, format!("expected {m} rows, found {}", rest.len())));
    }
    if rest.len() > m {
        return Err(ParseError::new(rest[m].0, None, format!("unexpected extra row after {m} rows")));
    }
    let rows = rest
        .iter()
        .enumerate()
        .map(|(r, (line, tokens))| index_row(*line, tokens, m, m, r))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RawTable { rows, labels })
}

pub fn parse_action(text: &str) -> Result<ActionTable, ParseError> {
    let lines = content_lines(text);
    let Some((first, header)) = lines.first() else {
        return Err(ParseError::new(1, None, "empty input: expected 'n |X|'"));
    };
    if header.len() != 2 {
        return Err(ParseError::new(*first, None, "the first line must be 'n |X|'"));
    }
    let n = number(*first, header[0], "the actor order")?;
    let k = number(*first, header[1], "the set size")?;
    let rest = &lines[1..];
    if rest.len() != n {
        let line = rest.get(n).or(rest.last()).map_or(*first, |l| l.0);
        return Err(ParseError::new(line, None, format!("expected {n} rows, found {}", rest.len())));
    }
    let rows = rest
        .iter()
        .enumerate()
        .map(|(r, (line, tokens))| index_row(*line, tokens, k, k, r))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ActionTable::new(n, k, rows.concat()).expect("shape checked while parsing"))
}

pub fn read_table(path: &Path) -> Result<RawTable> {
    Ok(parse_table(&std::fs::read_to_string(path)?)?)
}

pub fn read_action(path: &Path) -> Result<ActionTable> {
    Ok(parse_action(&std::fs::read_to_string(path)?)?)
}

pub fn format_table(rows: &[Vec<usize>], labels: Option<&[String]>) -> String {
    let mut out = format!("{}\n", rows.len());
    if let Some(l) = labels {
        let _ = writeln!(out, "labels: {}", l.join(" "));
    }
    for row in rows {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

pub fn format_action(act: &ActionTable) -> String {
    let mut out = format!("{} {}\n", act.actor_order(), act.set_size());
    for row in act.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}
