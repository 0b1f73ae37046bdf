//! Finite posets stored as a Hasse diagram plus a cached order relation.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{domain, Error, Result};

pub type Element = usize;

/// A finite poset on the elements `0..n`.
///
/// Constructed from cover pairs; the reflexive-transitive closure is computed
/// eagerly and redundant input pairs are dropped, so `cover_pairs` is always
/// the transitive reduction.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    names: Vec<Option<String>>,
    covers: Vec<(Element, Element)>,
    upper: Vec<Vec<Element>>,
    lower: Vec<Vec<Element>>,
    leq: Vec<bool>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("n", &self.n)
            .field("covers", &self.covers)
            .finish()
    }
}

impl Poset {
    /// Builds a poset from `(low, high)` pairs meaning "`high` covers `low`".
    pub fn from_cover_relations(n: usize, pairs: &[(Element, Element)]) -> Result<Poset> {
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in pairs {
            for e in [a, b] {
                if e >= n {
                    return Err(Error::OutOfRange { element: e, len: n });
                }
            }
            if a == b {
                return Err(Error::Cycle(vec![a]));
            }
            succ[a].push(b);
        }
        for s in succ.iter_mut() {
            s.sort_unstable();
            s.dedup();
        }
        let order = topological_order(n, &succ)?;

        // Closure, filled from the top of the order downwards.
        let mut leq = vec![false; n * n];
        for &a in order.iter().rev() {
            leq[a * n + a] = true;
            for &b in &succ[a] {
                for c in 0..n {
                    if leq[b * n + c] {
                        leq[a * n + c] = true;
                    }
                }
            }
        }

        let mut covers = Vec::new();
        for a in 0..n {
            for &b in &succ[a] {
                let implied = (0..n)
                    .any(|c| c != a && c != b && leq[a * n + c] && leq[c * n + b]);
                if !implied {
                    covers.push((a, b));
                }
            }
        }
        covers.sort_unstable();
        covers.dedup();

        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for &(a, b) in &covers {
            upper[a].push(b);
            lower[b].push(a);
        }
        for v in upper.iter_mut().chain(lower.iter_mut()) {
            v.sort_unstable();
        }
        Ok(Poset {
            n,
            names: vec![None; n],
            covers,
            upper,
            lower,
            leq,
        })
    }

    pub fn chain(n: usize) -> Poset {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_cover_relations(n, &pairs).expect("chains are acyclic")
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::from_cover_relations(n, &[]).expect("antichains are acyclic")
    }

    pub fn with_names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Poset {
        for (slot, name) in self.names.iter_mut().zip(names) {
            *slot = Some(name.into());
        }
        self
    }

    pub fn set_name(&mut self, p: Element, name: impl Into<String>) {
        self.names[p] = Some(name.into());
    }

    pub fn name(&self, p: Element) -> Option<&str> {
        self.names[p].as_deref()
    }

    /// The name of `p` if it has one, otherwise its id.
    pub fn label(&self, p: Element) -> String {
        match &self.names[p] {
            Some(s) => s.clone(),
            None => p.to_string(),
        }
    }

    pub fn find(&self, name: &str) -> Option<Element> {
        self.names.iter().position(|n| n.as_deref() == Some(name))
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.n
    }

    #[inline]
    pub fn leq(&self, a: Element, b: Element) -> bool {
        self.leq[a * self.n + b]
    }

    #[inline]
    pub fn lt(&self, a: Element, b: Element) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn comparable(&self, a: Element, b: Element) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// True iff `high` covers `low`.
    pub fn covers(&self, low: Element, high: Element) -> bool {
        self.upper[low].binary_search(&high).is_ok()
    }

    /// Adjacent in the Hasse diagram, in either direction.
    pub fn adjacent(&self, a: Element, b: Element) -> bool {
        self.covers(a, b) || self.covers(b, a)
    }

    /// Sorted `(low, high)` cover pairs.
    pub fn cover_pairs(&self) -> &[(Element, Element)] {
        &self.covers
    }

    /// Elements covering `p`.
    pub fn upper_covers(&self, p: Element) -> &[Element] {
        &self.upper[p]
    }

    /// Elements covered by `p`.
    pub fn lower_covers(&self, p: Element) -> &[Element] {
        &self.lower[p]
    }

    pub fn minimal_elements(&self) -> Vec<Element> {
        self.elements().filter(|&p| self.lower[p].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<Element> {
        self.elements().filter(|&p| self.upper[p].is_empty()).collect()
    }

    fn check(&self, p: Element) -> Result<()> {
        if p >= self.n {
            Err(Error::OutOfRange { element: p, len: self.n })
        } else {
            Ok(())
        }
    }

    /// `{ x : p <= x <= q }`.
    pub fn interval(&self, p: Element, q: Element) -> Result<ElementSet> {
        self.check(p)?;
        self.check(q)?;
        if !self.leq(p, q) {
            return domain(format!("interval [{p}, {q}] is empty: {p} is not below {q}"));
        }
        Ok(self
            .elements()
            .filter(|&x| self.leq(p, x) && self.leq(x, q))
            .collect())
    }

    pub fn is_convex(&self, s: &ElementSet) -> bool {
        for a in s.iter() {
            for b in s.iter() {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                for x in self.elements() {
                    if self.lt(a, x) && self.lt(x, b) && !s.contains(x) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_upper_set(&self, s: &ElementSet) -> bool {
        s.iter().all(|p| self.upper[p].iter().all(|&q| s.contains(q)))
    }

    pub fn is_lower_set(&self, s: &ElementSet) -> bool {
        s.iter().all(|p| self.lower[p].iter().all(|&q| s.contains(q)))
    }

    /// The induced subposet on `members`, with `map[new] = old`.
    pub fn induced(&self, members: &ElementSet) -> (Poset, Vec<Element>) {
        let map: Vec<Element> = members.iter().collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &p) in map.iter().enumerate() {
            index[p] = i;
        }
        let mut pairs = Vec::new();
        for (i, &a) in map.iter().enumerate() {
            for (j, &b) in map.iter().enumerate() {
                if i != j && self.lt(a, b) {
                    pairs.push((i, j));
                }
            }
        }
        let mut sub = Poset::from_cover_relations(map.len(), &pairs)
            .expect("a subposet of a poset is acyclic");
        for (i, &p) in map.iter().enumerate() {
            sub.names[i] = self.names[p].clone();
        }
        (sub, map)
    }

    /// All order ideals (downward closed subsets), including the empty set.
    pub fn downsets(&self) -> Vec<ElementSet> {
        let order = self.bottom_up_order();
        let mut out = Vec::new();
        let mut inside = vec![false; self.n];
        self.downsets_rec(&order, 0, &mut inside, &mut out);
        out
    }

    fn downsets_rec(
        &self,
        order: &[Element],
        i: usize,
        inside: &mut Vec<bool>,
        out: &mut Vec<ElementSet>,
    ) {
        if i == order.len() {
            out.push(self.elements().filter(|&p| inside[p]).collect());
            return;
        }
        let p = order[i];
        self.downsets_rec(order, i + 1, inside, out);
        if self.lower[p].iter().all(|&q| inside[q]) {
            inside[p] = true;
            self.downsets_rec(order, i + 1, inside, out);
            inside[p] = false;
        }
    }

    /// All upper sets, including the empty set and the whole poset.
    pub fn upper_sets(&self) -> Vec<ElementSet> {
        self.downsets()
            .into_iter()
            .map(|d| self.elements().filter(|&p| !d.contains(p)).collect())
            .collect()
    }

    /// Every element appears after everything it covers.
    pub fn bottom_up_order(&self) -> Vec<Element> {
        let succ: Vec<Vec<Element>> = self.upper.clone();
        topological_order(self.n, &succ).expect("posets are acyclic")
    }
}

/// Kahn's algorithm over `succ` (edges `a -> b` for `a < b`); on failure
/// returns a witness cycle.
fn topological_order(n: usize, succ: &[Vec<Element>]) -> Result<Vec<Element>> {
    let mut indeg = vec![0usize; n];
    for s in succ {
        for &b in s {
            indeg[b] += 1;
        }
    }
    let mut ready: BTreeSet<Element> = (0..n).filter(|&p| indeg[p] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(a) = ready.pop_first() {
        order.push(a);
        for &b in &succ[a] {
            indeg[b] -= 1;
            if indeg[b] == 0 {
                ready.insert(b);
            }
        }
    }
    if order.len() == n {
        Ok(order)
    } else {
        Err(Error::Cycle(find_cycle(n, succ)))
    }
}

fn find_cycle(n: usize, succ: &[Vec<Element>]) -> Vec<Element> {
    // 0 = unseen, 1 = on stack, 2 = done
    let mut color = vec![0u8; n];
    let mut stack: Vec<Element> = Vec::new();

    fn dfs(
        v: Element,
        succ: &[Vec<Element>],
        color: &mut [u8],
        stack: &mut Vec<Element>,
    ) -> Option<Vec<Element>> {
        color[v] = 1;
        stack.push(v);
        for &w in &succ[v] {
            if color[w] == 1 {
                let start = stack.iter().position(|&x| x == w).unwrap();
                return Some(stack[start..].to_vec());
            }
            if color[w] == 0 {
                if let Some(c) = dfs(w, succ, color, stack) {
                    return Some(c);
                }
            }
        }
        stack.pop();
        color[v] = 2;
        None
    }

    for v in 0..n {
        if color[v] == 0 {
            if let Some(c) = dfs(v, succ, &mut color, &mut stack) {
                return c;
            }
        }
    }
    Vec::new()
}

/// A subset of poset elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(BTreeSet<Element>);

impl ElementSet {
    pub fn new() -> Self {
        ElementSet(BTreeSet::new())
    }

    pub fn contains(&self, p: Element) -> bool {
        self.0.contains(&p)
    }

    pub fn insert(&mut self, p: Element) -> bool {
        self.0.insert(p)
    }

    pub fn remove(&mut self, p: Element) -> bool {
        self.0.remove(&p)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.0.iter().copied()
    }

    pub fn min(&self) -> Option<Element> {
        self.0.first().copied()
    }

    pub fn to_vec(&self) -> Vec<Element> {
        self.0.iter().copied().collect()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.is_subset(&other.0)
    }
}

impl FromIterator<Element> for ElementSet {
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        ElementSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[Element; N]> for ElementSet {
    fn from(v: [Element; N]) -> Self {
        v.into_iter().collect()
    }
}

/// A linear extension listed from the top down: whenever `a < b` in the
/// poset, `b` appears before `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearExtension(pub Vec<Element>);

impl LinearExtension {
    pub fn as_slice(&self) -> &[Element] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_valid(&self, poset: &Poset) -> bool {
        let n = poset.len();
        if self.0.len() != n {
            return false;
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &p) in self.0.iter().enumerate() {
            if p >= n || pos[p] != usize::MAX {
                return false;
            }
            pos[p] = i;
        }
        poset.cover_pairs().iter().all(|&(a, b)| pos[b] < pos[a])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_and_two_chain() {
        let p = Poset::from_cover_relations(1, &[]).unwrap();
        assert!(p.leq(0, 0));
        let c = Poset::from_cover_relations(2, &[(0, 1)]).unwrap();
        let pairs = (0..2)
            .flat_map(|a| (0..2).map(move |b| (a, b)))
            .filter(|&(a, b)| c.leq(a, b))
            .count();
        assert_eq!(pairs, 3);
    }

    #[test]
    fn redundant_pairs_are_reduced() {
        let p = Poset::from_cover_relations(3, &[(0, 1), (1, 2), (0, 2), (0, 1)]).unwrap();
        assert_eq!(p.cover_pairs(), &[(0, 1), (1, 2)]);
        assert!(p.leq(0, 2));
    }

    #[test]
    fn cycle_is_reported_with_witness() {
        let err = Poset::from_cover_relations(4, &[(0, 1), (1, 2), (2, 1), (2, 3)]).unwrap_err();
        match err {
            Error::Cycle(w) => {
                let mut w = w;
                w.sort();
                assert_eq!(w, vec![1, 2]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Poset::from_cover_relations(2, &[(0, 0)]),
            Err(Error::Cycle(_))
        ));
        assert!(matches!(
            Poset::from_cover_relations(2, &[(0, 5)]),
            Err(Error::OutOfRange { element: 5, len: 2 })
        ));
    }

    #[test]
    fn intervals_and_convexity() {
        let c = Poset::chain(3);
        assert_eq!(c.interval(0, 2).unwrap(), ElementSet::from([0, 1, 2]));
        assert_eq!(c.interval(1, 1).unwrap(), ElementSet::from([1]));
        assert!(c.interval(2, 0).is_err());
        assert!(c.is_convex(&c.interval(0, 2).unwrap()));
        assert!(!c.is_convex(&ElementSet::from([0, 2])));
        assert!(c.is_convex(&ElementSet::from([0, 1])));
    }

    #[test]
    fn upper_sets_of_antichain() {
        let a = Poset::antichain(3);
        assert_eq!(a.upper_sets().len(), 8);
        let c = Poset::chain(4);
        let ups = c.upper_sets();
        assert_eq!(ups.len(), 5);
        assert!(ups.iter().all(|u| c.is_upper_set(u)));
    }

    #[test]
    fn induced_subposet_keeps_order() {
        let c = Poset::chain(4);
        let (sub, map) = c.induced(&ElementSet::from([0, 2, 3]));
        assert_eq!(map, vec![0, 2, 3]);
        assert_eq!(sub.cover_pairs(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn linear_extension_validity() {
        let c = Poset::chain(3);
        assert!(LinearExtension(vec![2, 1, 0]).is_valid(&c));
        assert!(!LinearExtension(vec![0, 1, 2]).is_valid(&c));
        assert!(!LinearExtension(vec![2, 1]).is_valid(&c));
        assert!(!LinearExtension(vec![2, 2, 0]).is_valid(&c));
    }
}
