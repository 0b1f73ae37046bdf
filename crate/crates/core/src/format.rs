//! Line-oriented text formats for posets, fillings, matrices and orders.
//!
//! Poset files hold `elements <n>`, then optional `name <id> <string>`
//! lines, then `cover <low> <high>` lines; `#` starts a comment line.
//! Writing always produces the canonical form (names by id, covers sorted),
//! and parsing a canonical file and writing it back is byte-identical.

use std::fmt::Write as _;

use crate::classical::MatrixFilling;
use crate::error::{Error, Result};
use crate::poset::{Element, LinearExtension, Poset};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::rsk::Filling;

fn parse_err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, message: message.into() })
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_index(line: usize, token: Option<&str>, what: &str) -> Result<usize> {
    match token {
        None => parse_err(line, format!("missing {what}")),
        Some(t) => t
            .parse()
            .or_else(|_| parse_err(line, format!("{what} {t:?} is not a nonnegative integer"))),
    }
}

pub fn write_poset(poset: &Poset) -> String {
    let mut out = format!("elements {}\n", poset.len());
    for p in poset.elements() {
        if let Some(name) = poset.name(p) {
            writeln!(out, "name {p} {name}").unwrap();
        }
    }
    for &(a, b) in poset.cover_pairs() {
        writeln!(out, "cover {a} {b}").unwrap();
    }
    out
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut n: Option<usize> = None;
    let mut names: Vec<(usize, Element, String)> = Vec::new();
    let mut pairs = Vec::new();
    for (line, content) in content_lines(text) {
        let mut parts = content.splitn(2, char::is_whitespace);
        let keyword = parts.next().unwrap_or_default();
        let rest = parts.next().unwrap_or_default().trim();
        match keyword {
            "elements" => {
                if n.is_some() {
                    return parse_err(line, "duplicate elements line");
                }
                let mut tokens = rest.split_whitespace();
                n = Some(parse_index(line, tokens.next(), "element count")?);
                if tokens.next().is_some() {
                    return parse_err(line, "trailing tokens after element count");
                }
            }
            "name" => {
                let mut parts = rest.splitn(2, char::is_whitespace);
                let id = parse_index(line, parts.next(), "element id")?;
                let name = parts.next().unwrap_or_default().trim();
                if name.is_empty() {
                    return parse_err(line, "missing name");
                }
                names.push((line, id, name.to_string()));
            }
            "cover" => {
                let mut tokens = rest.split_whitespace();
                let a = parse_index(line, tokens.next(), "lower element")?;
                let b = parse_index(line, tokens.next(), "upper element")?;
                if tokens.next().is_some() {
                    return parse_err(line, "trailing tokens after cover pair");
                }
                pairs.push((line, a, b));
            }
            other => return parse_err(line, format!("unknown keyword {other:?}")),
        }
        if n.is_none() {
            return parse_err(line, "the first line must be `elements <n>`");
        }
    }
    let n = match n {
        Some(n) => n,
        None => return parse_err(1, "missing `elements <n>` line"),
    };
    for &(line, a, b) in &pairs {
        for e in [a, b] {
            if e >= n {
                return parse_err(line, format!("element {e} out of range for {n} elements"));
            }
        }
    }
    let cover_pairs: Vec<_> = pairs.iter().map(|&(_, a, b)| (a, b)).collect();
    let mut poset = Poset::from_cover_relations(n, &cover_pairs)?;
    let mut named = vec![false; n];
    for (line, id, name) in names {
        if id >= n {
            return parse_err(line, format!("element {id} out of range for {n} elements"));
        }
        if std::mem::replace(&mut named[id], true) {
            return parse_err(line, format!("element {id} named twice"));
        }
        poset.set_name(id, name);
    }
    Ok(poset)
}

/// One `value <element> <p>/<q>` line per element, in id order.
pub fn write_filling(f: &Filling) -> String {
    let mut out = String::new();
    for (p, v) in f.values().iter().enumerate() {
        writeln!(out, "value {p} {}", format_rational(v)).unwrap();
    }
    out
}

/// Every element in `0..n` must receive exactly one value.
pub fn parse_filling(text: &str, n: usize) -> Result<Filling> {
    let mut values: Vec<Option<Rational>> = vec![None; n];
    for (line, content) in content_lines(text) {
        let mut tokens = content.split_whitespace();
        if tokens.next() != Some("value") {
            return parse_err(line, "expected `value <element> <p>/<q>`");
        }
        let p = parse_index(line, tokens.next(), "element")?;
        let v = match tokens.next() {
            Some(t) => parse_rational(t).map_err(|e| Error::Parse { line, message: e.to_string() })?,
            None => return parse_err(line, "missing value"),
        };
        if tokens.next().is_some() {
            return parse_err(line, "trailing tokens after value");
        }
        if p >= n {
            return parse_err(line, format!("element {p} out of range for {n} elements"));
        }
        if values[p].replace(v).is_some() {
            return parse_err(line, format!("element {p} given twice"));
        }
    }
    let mut out = Vec::with_capacity(n);
    for (p, v) in values.into_iter().enumerate() {
        match v {
            Some(v) => out.push(v),
            None => return parse_err(0, format!("no value for element {p}")),
        }
    }
    Ok(Filling::new(out))
}

pub fn write_matrix(m: &MatrixFilling) -> String {
    m.to_string()
}

pub fn parse_matrix(text: &str) -> Result<MatrixFilling> {
    let mut rows = Vec::new();
    let mut width = None;
    for (line, content) in content_lines(text) {
        let row = content
            .split_whitespace()
            .map(|t| {
                t.parse::<u64>().or_else(|_| parse_err(line, format!("{t:?} is not a nonnegative integer")))
            })
            .collect::<Result<Vec<u64>>>()?;
        if *width.get_or_insert(row.len()) != row.len() {
            return parse_err(line, "rows have different lengths");
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return parse_err(1, "empty matrix");
    }
    MatrixFilling::new(rows)
}

pub fn write_order(order: &LinearExtension) -> String {
    let ids: Vec<String> = order.as_slice().iter().map(usize::to_string).collect();
    format!("{}\n", ids.join(" "))
}

/// Whitespace-separated element ids, top element first.
pub fn parse_order(text: &str) -> Result<LinearExtension> {
    let mut ids = Vec::new();
    for (line, content) in content_lines(text) {
        for t in content.split_whitespace() {
            ids.push(parse_index(line, Some(t), "element id")?);
        }
    }
    Ok(LinearExtension(ids))
}
