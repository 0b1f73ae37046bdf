//! The fixed list of test posets the acceptance suite runs over.
//!
//! Entry names: `young-<parts>` and `shifted-<parts>` with comma-separated
//! parts, `tree-<n>-<index>` into [`rooted_trees`], `d<k>` for the
//! double-tailed diamond, and the hand-drawn examples by name.

use crate::error::{domain, Result};
use crate::generators::{
    d_k_one, named_example, partitions, rooted_trees, shifted_young, strict_partitions, tree, young,
    NAMED_EXAMPLES,
};
use crate::poset::Poset;

pub const MAX_BOXES: usize = 8;
pub const MAX_TREE_NODES: usize = 8;
pub const DIAMOND_RANGE: std::ops::RangeInclusive<usize> = 3..=6;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub poset: Poset,
}

fn join(parts: &[usize]) -> String {
    parts.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

/// Young diagrams and shifted diagrams with at most eight boxes, rooted
/// trees with at most eight nodes, `d3`..`d6` and the named examples.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for n in 1..=MAX_BOXES {
        for lambda in partitions(n) {
            out.push(CatalogEntry { name: format!("young-{}", join(&lambda)), poset: young(&lambda).unwrap() });
        }
    }
    for n in 1..=MAX_BOXES {
        for lambda in strict_partitions(n) {
            out.push(CatalogEntry {
                name: format!("shifted-{}", join(&lambda)),
                poset: shifted_young(&lambda).unwrap(),
            });
        }
    }
    for n in 1..=MAX_TREE_NODES {
        for (i, parent) in rooted_trees(n).iter().enumerate() {
            out.push(CatalogEntry { name: format!("tree-{n}-{i}"), poset: tree(parent).unwrap() });
        }
    }
    for k in DIAMOND_RANGE {
        out.push(CatalogEntry { name: format!("d{k}"), poset: d_k_one(k).unwrap() });
    }
    for &name in NAMED_EXAMPLES {
        out.push(CatalogEntry { name: name.to_string(), poset: named_example(name).unwrap() });
    }
    out
}

fn parse_parts(s: &str) -> Option<Vec<usize>> {
    s.split(',').map(|p| p.parse().ok()).collect()
}

/// Builds a poset from a catalog-style name. Shapes and diamonds of any size
/// are accepted, not only those in [`catalog`].
pub fn catalog_poset(name: &str) -> Result<Poset> {
    if let Some(rest) = name.strip_prefix("young-") {
        if let Some(lambda) = parse_parts(rest) {
            return young(&lambda);
        }
    } else if let Some(rest) = name.strip_prefix("shifted-") {
        if let Some(lambda) = parse_parts(rest) {
            return shifted_young(&lambda);
        }
    } else if let Some(rest) = name.strip_prefix("tree-") {
        if let Some((n, i)) = rest.split_once('-') {
            if let (Ok(n), Ok(i)) = (n.parse::<usize>(), i.parse::<usize>()) {
                return match rooted_trees(n).get(i) {
                    Some(parent) => tree(parent),
                    None => domain(format!("there is no tree {i} on {n} nodes")),
                };
            }
        }
    } else if let Some(k) = name.strip_prefix('d').and_then(|k| k.parse::<usize>().ok()) {
        return d_k_one(k);
    } else if let Some(n) = name.strip_prefix("chain-").and_then(|n| n.parse::<usize>().ok()) {
        return Ok(Poset::chain(n));
    } else if NAMED_EXAMPLES.contains(&name) {
        return named_example(name);
    }
    domain(format!(
        "unknown poset name {name:?}; expected young-<parts>, shifted-<parts>, tree-<n>-<i>, d<k>, chain-<n> or one of {NAMED_EXAMPLES:?}"
    ))
}
