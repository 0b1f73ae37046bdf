//! Linear extension enumeration and counting.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poset::{Element, LinearExtension, Poset};

/// Default bound on how many extensions the enumerator may walk through.
pub const DEFAULT_CAP: u64 = 1_000_000;

/// Above this many order ideals the downset table is abandoned in favour of
/// capped enumeration.
const MAX_IDEALS: usize = 1 << 22;

/// Streams every linear extension exactly once, top element first.
///
/// At each step the candidates are the elements all of whose upper covers
/// have been placed; they are tried in increasing id order, so the stream is
/// lexicographic in that sense.
pub struct LinearExtensions<'a> {
    poset: &'a Poset,
    // Number of upper covers of each element not yet placed.
    pending: Vec<usize>,
    prefix: Vec<Element>,
    // For each depth: the candidates available there and the index tried.
    frames: Vec<(Vec<Element>, usize)>,
    started: bool,
    done: bool,
}

impl<'a> LinearExtensions<'a> {
    pub fn new(poset: &'a Poset) -> Self {
        let pending = poset
            .elements()
            .map(|p| poset.upper_covers(p).len())
            .collect();
        LinearExtensions {
            poset,
            pending,
            prefix: Vec::with_capacity(poset.len()),
            frames: Vec::with_capacity(poset.len()),
            started: false,
            done: false,
        }
    }

    fn candidates(&self) -> Vec<Element> {
        let placed = &self.prefix;
        self.poset
            .elements()
            .filter(|&p| self.pending[p] == 0 && !placed.contains(&p))
            .collect()
    }

    fn place(&mut self, p: Element) {
        self.prefix.push(p);
        for &q in self.poset.lower_covers(p) {
            self.pending[q] -= 1;
        }
    }

    fn unplace(&mut self) {
        let p = self.prefix.pop().expect("unplace on empty prefix");
        for &q in self.poset.lower_covers(p) {
            self.pending[q] += 1;
        }
    }

    /// Extend the current prefix greedily with first choices.
    fn descend(&mut self) {
        while self.prefix.len() < self.poset.len() {
            let cands = self.candidates();
            let first = cands[0];
            self.frames.push((cands, 0));
            self.place(first);
        }
    }

    /// Move to the next branch; false when exhausted.
    fn advance(&mut self) -> bool {
        while let Some((cands, idx)) = self.frames.pop() {
            self.unplace();
            if idx + 1 < cands.len() {
                let next = cands[idx + 1];
                self.frames.push((cands, idx + 1));
                self.place(next);
                self.descend();
                return true;
            }
        }
        false
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = LinearExtension;

    fn next(&mut self) -> Option<LinearExtension> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        if self.poset.is_empty() {
            // The empty poset has exactly one (empty) extension.
            self.done = true;
        }
        Some(LinearExtension(self.prefix.clone()))
    }
}

pub fn enumerate_linear_extensions(poset: &Poset) -> LinearExtensions<'_> {
    LinearExtensions::new(poset)
}

/// Collects all extensions, refusing once more than `cap` have been seen.
pub fn collect_linear_extensions(poset: &Poset, cap: u64) -> Result<Vec<LinearExtension>> {
    let mut out = Vec::new();
    for ext in LinearExtensions::new(poset) {
        if out.len() as u64 >= cap {
            return Err(Error::CapExceeded(cap));
        }
        out.push(ext);
    }
    Ok(out)
}

/// Exact number of linear extensions with the default enumeration cap.
pub fn count_linear_extensions(poset: &Poset) -> Result<BigUint> {
    count_linear_extensions_capped(poset, DEFAULT_CAP)
}

/// Dynamic programming over order ideals keyed by bitmask; posets too large
/// for the table fall back to enumeration bounded by `cap`.
pub fn count_linear_extensions_capped(poset: &Poset, cap: u64) -> Result<BigUint> {
    if poset.len() <= 64 {
        if let Some(c) = count_by_ideals(poset) {
            return Ok(c);
        }
    }
    let mut count = 0u64;
    for _ in LinearExtensions::new(poset) {
        count += 1;
        if count > cap {
            return Err(Error::CapExceeded(cap));
        }
    }
    Ok(BigUint::from(count))
}

fn count_by_ideals(poset: &Poset) -> Option<BigUint> {
    let n = poset.len();
    let lower_mask: Vec<u64> = poset
        .elements()
        .map(|p| poset.lower_covers(p).iter().fold(0u64, |m, &q| m | (1 << q)))
        .collect();
    // ways[I] = number of ways to build the ideal I bottom-up.
    let mut ways: HashMap<u64, BigUint> = HashMap::new();
    ways.insert(0, BigUint::one());
    let mut layer = vec![0u64];
    for _ in 0..n {
        let mut next: HashMap<u64, BigUint> = HashMap::new();
        for ideal in &layer {
            let w = ways[ideal].clone();
            for p in 0..n {
                let bit = 1u64 << p;
                if ideal & bit == 0 && lower_mask[p] & !ideal == 0 {
                    *next.entry(ideal | bit).or_insert_with(BigUint::zero) += &w;
                }
            }
        }
        if next.len() > MAX_IDEALS {
            return None;
        }
        layer = next.keys().copied().collect();
        ways = next;
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Some(ways.remove(&full).unwrap_or_else(BigUint::one))
}
