//! d-intervals, d⁻-convex sets and the d-complete axioms.
//!
//! Both shapes are recognised structurally: an interval is a d_k-interval
//! exactly when it has one incomparable pair and `k - 2` elements strictly
//! below and above that pair. No general isomorphism search is needed.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poset::{Element, ElementSet, Poset};
use crate::report::OracleReport;

/// An interval `[bottom, top]` isomorphic to d_k(1).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DInterval {
    pub k: usize,
    pub bottom: Element,
    pub top: Element,
    /// The incomparable pair, smaller id first.
    pub sides: (Element, Element),
    /// `k - 2` elements above the sides, top first.
    pub neck: Vec<Element>,
    /// `k - 2` elements below the sides, highest first (so ends in `bottom`).
    pub tail: Vec<Element>,
}

impl DInterval {
    pub fn members(&self) -> ElementSet {
        self.neck
            .iter()
            .chain(self.tail.iter())
            .copied()
            .chain([self.sides.0, self.sides.1])
            .collect()
    }

    pub fn contains(&self, p: Element) -> bool {
        p == self.sides.0 || p == self.sides.1 || self.neck.contains(&p) || self.tail.contains(&p)
    }

    pub fn is_side(&self, p: Element) -> bool {
        p == self.sides.0 || p == self.sides.1
    }

    /// Top of the innermost diamond, i.e. the lowest neck element.
    pub fn diamond_top(&self) -> Element {
        *self.neck.last().expect("necks are nonempty")
    }

    /// Highest tail element.
    pub fn diamond_bottom(&self) -> Element {
        self.tail[0]
    }
}

/// A convex subset isomorphic to d_k(1) with its maximum removed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DMinusConvexSet {
    pub k: usize,
    pub members: ElementSet,
    pub bottom: Element,
    pub sides: (Element, Element),
    /// `k - 3` elements above the sides, top first.
    pub neck: Vec<Element>,
}

impl DMinusConvexSet {
    /// The maximal elements: the neck top, or both sides when k = 3.
    pub fn maximal(&self) -> Vec<Element> {
        match self.neck.first() {
            Some(&t) => vec![t],
            None => vec![self.sides.0, self.sides.1],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    /// Which axiom failed: 1 (completion), 2 (top covers only inside), or
    /// 3 (no two d⁻-convex sets differing only in their minimum).
    pub axiom: u8,
    pub witness: Vec<Element>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub is_d_complete: bool,
    pub violations: Vec<AxiomViolation>,
}

/// `(sides, below both, above both)`.
type OneGapShape = ((Element, Element), Vec<Element>, Vec<Element>);

/// Shape of a set whose induced order has exactly one incomparable pair.
fn one_gap_shape(poset: &Poset, members: &[Element]) -> Option<OneGapShape> {
    let mut pair = None;
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if !poset.comparable(a, b) {
                if pair.is_some() {
                    return None;
                }
                pair = Some((a.min(b), a.max(b)));
            }
        }
    }
    let (a, b) = pair?;
    let mut below = Vec::new();
    let mut above = Vec::new();
    for &x in members {
        if x == a || x == b {
            continue;
        }
        if poset.lt(x, a) && poset.lt(x, b) {
            below.push(x);
        } else if poset.lt(a, x) && poset.lt(b, x) {
            above.push(x);
        } else {
            return None;
        }
    }
    // Chains, listed top first.
    let height = |x: Element| poset.elements().filter(|&y| poset.leq(y, x)).count();
    below.sort_by_key(|&x| std::cmp::Reverse(height(x)));
    above.sort_by_key(|&x| std::cmp::Reverse(height(x)));
    Some(((a, b), below, above))
}

/// `Some` iff `[p, q]` is a d_k-interval for some k.
pub fn classify_interval(poset: &Poset, p: Element, q: Element) -> Option<DInterval> {
    if p >= poset.len() || q >= poset.len() || !poset.lt(p, q) {
        return None;
    }
    let members = poset.interval(p, q).ok()?.to_vec();
    if members.len() < 4 || members.len() % 2 != 0 {
        return None;
    }
    let (sides, tail, neck) = one_gap_shape(poset, &members)?;
    if tail.is_empty() || tail.len() != neck.len() {
        return None;
    }
    Some(DInterval {
        k: tail.len() + 2,
        bottom: p,
        top: q,
        sides,
        neck,
        tail,
    })
}

/// Every d-interval of the poset, ordered by `(bottom, top)`.
pub fn find_d_intervals(poset: &Poset) -> Vec<DInterval> {
    let mut out = Vec::new();
    for p in poset.elements() {
        for q in poset.elements() {
            if let Some(d) = classify_interval(poset, p, q) {
                out.push(d);
            }
        }
    }
    out
}

fn chains_down(poset: &Poset, from: Element, len: usize, out: &mut Vec<Vec<Element>>) {
    fn rec(poset: &Poset, cur: &mut Vec<Element>, len: usize, out: &mut Vec<Vec<Element>>) {
        out.push(cur.clone());
        if cur.len() == len {
            return;
        }
        let last = *cur.last().unwrap();
        for &next in poset.lower_covers(last) {
            cur.push(next);
            rec(poset, cur, len, out);
            cur.pop();
        }
    }
    rec(poset, &mut vec![from], len, out);
}

fn chains_up(poset: &Poset, from: Element, len: usize, out: &mut Vec<Vec<Element>>) {
    fn rec(poset: &Poset, cur: &mut Vec<Element>, len: usize, out: &mut Vec<Vec<Element>>) {
        out.push(cur.clone());
        if cur.len() == len {
            return;
        }
        let last = *cur.last().unwrap();
        for &next in poset.upper_covers(last) {
            cur.push(next);
            rec(poset, cur, len, out);
            cur.pop();
        }
    }
    rec(poset, &mut vec![from], len, out);
}

/// Every d⁻-convex subset of the poset.
///
/// Candidates are grown from the rigid shape: pick the highest tail element
/// and two elements covering it, extend the tail downward along covers and
/// the neck upward from a common cover of the sides, then keep candidates
/// that are convex and have the right shape.
pub fn find_d_minus_convex_sets(poset: &Poset) -> Vec<DMinusConvexSet> {
    let n = poset.len();
    let mut found: BTreeMap<ElementSet, DMinusConvexSet> = BTreeMap::new();
    for t1 in poset.elements() {
        let ups = poset.upper_covers(t1);
        if ups.len() < 2 {
            continue;
        }
        let mut tails = Vec::new();
        chains_down(poset, t1, n, &mut tails);
        for (i, &a) in ups.iter().enumerate() {
            for &b in &ups[i + 1..] {
                let common: Vec<Element> = poset
                    .upper_covers(a)
                    .iter()
                    .copied()
                    .filter(|x| poset.upper_covers(b).contains(x))
                    .collect();
                let mut necks: Vec<Vec<Element>> = vec![Vec::new()];
                for &n1 in &common {
                    chains_up(poset, n1, n, &mut necks);
                }
                for tail in &tails {
                    for neck in necks.iter().filter(|nk| nk.len() + 1 == tail.len()) {
                        let members: ElementSet = tail
                            .iter()
                            .chain(neck.iter())
                            .copied()
                            .chain([a, b])
                            .collect();
                        if members.len() != 2 * tail.len() + 1 || found.contains_key(&members) {
                            continue;
                        }
                        if let Some(set) = classify_d_minus(poset, &members) {
                            found.insert(members, set);
                        }
                    }
                }
            }
        }
    }
    found.into_values().collect()
}

/// `Some` iff `members` is convex and shaped like d_k(1) minus its top.
pub fn classify_d_minus(poset: &Poset, members: &ElementSet) -> Option<DMinusConvexSet> {
    if members.len() < 3 || members.len().is_multiple_of(2) || !poset.is_convex(members) {
        return None;
    }
    let list = members.to_vec();
    let (sides, tail, neck) = one_gap_shape(poset, &list)?;
    if tail.is_empty() || neck.len() + 1 != tail.len() {
        return None;
    }
    Some(DMinusConvexSet {
        k: tail.len() + 2,
        members: members.clone(),
        bottom: *tail.last().unwrap(),
        sides,
        neck,
    })
}

/// Checks the three d-complete axioms and lists every violation.
pub fn check_d_complete(poset: &Poset) -> AxiomReport {
    let minus = find_d_minus_convex_sets(poset);
    let intervals = find_d_intervals(poset);
    let mut violations = Vec::new();

    // Axiom 1: every d_k⁻-convex set completes to a d_k-interval.
    for set in &minus {
        let tops = set.maximal();
        let completes = poset.upper_covers(tops[0]).iter().any(|&z| {
            classify_interval(poset, set.bottom, z).is_some_and(|d| {
                let mut with_z = set.members.clone();
                with_z.insert(z);
                d.k == set.k && d.members() == with_z
            })
        });
        if !completes {
            violations.push(AxiomViolation { axiom: 1, witness: set.members.to_vec() });
        }
    }

    // Axiom 2: the top of a d-interval covers nothing outside it.
    for d in &intervals {
        for &y in poset.lower_covers(d.top) {
            if !d.contains(y) {
                violations.push(AxiomViolation { axiom: 2, witness: vec![d.bottom, d.top, y] });
            }
        }
    }

    // Axiom 3: no two d⁻-convex sets agree once their minima are removed.
    let mut by_rest: BTreeMap<ElementSet, Vec<&DMinusConvexSet>> = BTreeMap::new();
    for set in &minus {
        let mut rest = set.members.clone();
        rest.remove(set.bottom);
        by_rest.entry(rest).or_default().push(set);
    }
    for (rest, sets) in by_rest {
        if sets.len() > 1 {
            let mut witness: Vec<Element> = sets.iter().map(|s| s.bottom).collect();
            witness.extend(rest.iter());
            violations.push(AxiomViolation { axiom: 3, witness });
        }
    }

    AxiomReport { is_d_complete: violations.is_empty(), violations }
}

/// The d-intervals of a poset indexed by their extreme elements.
#[derive(Clone, Debug)]
pub struct DStructure {
    pub intervals: Vec<DInterval>,
    by_bottom: Vec<Option<usize>>,
    by_top: Vec<Option<usize>>,
}

impl DStructure {
    /// Fails if some element is the bottom (or top) of two d-intervals,
    /// which cannot happen in a d-complete poset.
    pub fn new(poset: &Poset) -> Result<DStructure> {
        Self::from_intervals(poset.len(), find_d_intervals(poset))
    }

    pub fn from_intervals(n: usize, intervals: Vec<DInterval>) -> Result<DStructure> {
        let mut by_bottom = vec![None; n];
        let mut by_top = vec![None; n];
        for (i, d) in intervals.iter().enumerate() {
            if let Some(j) = by_bottom[d.bottom].replace(i) {
                let other: &DInterval = &intervals[j];
                return Err(Error::Contract(format!(
                    "element {} is the bottom of two d-intervals (tops {} and {})",
                    d.bottom, other.top, d.top
                )));
            }
            if let Some(j) = by_top[d.top].replace(i) {
                let other: &DInterval = &intervals[j];
                return Err(Error::Contract(format!(
                    "element {} is the top of two d-intervals (bottoms {} and {})",
                    d.top, other.bottom, d.bottom
                )));
            }
        }
        Ok(DStructure { intervals, by_bottom, by_top })
    }

    /// The d-interval with `p` as its bottom.
    pub fn interval_from(&self, p: Element) -> Option<&DInterval> {
        self.by_bottom[p].map(|i| &self.intervals[i])
    }

    /// The d-interval with `p` as its top.
    pub fn interval_to(&self, p: Element) -> Option<&DInterval> {
        self.by_top[p].map(|i| &self.intervals[i])
    }

    pub fn up(&self, p: Element) -> Option<Element> {
        self.interval_from(p).map(|d| d.top)
    }

    pub fn down(&self, p: Element) -> Option<Element> {
        self.interval_to(p).map(|d| d.bottom)
    }

    /// Neck element of some d-interval. Equivalent to being a top, since any
    /// interval with `p` in its neck contains the one ending at `p`.
    pub fn is_neck(&self, p: Element) -> bool {
        self.intervals.iter().any(|d| d.neck.contains(&p))
    }
}

/// The unique `q` with `[p, q]` a d-interval.
pub fn up_of(poset: &Poset, p: Element) -> Result<Option<Element>> {
    let tops: Vec<Element> = poset
        .elements()
        .filter(|&q| classify_interval(poset, p, q).is_some())
        .collect();
    match tops.as_slice() {
        [] => Ok(None),
        [q] => Ok(Some(*q)),
        _ => Err(Error::Contract(format!(
            "element {p} is the bottom of several d-intervals with tops {tops:?}"
        ))),
    }
}

/// The unique `q` with `[q, p]` a d-interval.
pub fn down_of(poset: &Poset, p: Element) -> Result<Option<Element>> {
    let bottoms: Vec<Element> = poset
        .elements()
        .filter(|&q| classify_interval(poset, q, p).is_some())
        .collect();
    match bottoms.as_slice() {
        [] => Ok(None),
        [q] => Ok(Some(*q)),
        _ => Err(Error::Contract(format!(
            "element {p} is the top of several d-intervals with bottoms {bottoms:?}"
        ))),
    }
}

/// Exhaustive checks of the structural facts every d-complete poset obeys:
/// the cover bound, closure of d-intervals under covers, uniqueness and
/// nesting of d-intervals at an element, and absence of the six-element
/// crown made of three d₃⁻-convex sets.
pub fn structural_oracles(poset: &Poset) -> OracleReport {
    let mut report = OracleReport::new();
    let intervals = find_d_intervals(poset);

    for p in poset.elements() {
        let ups = poset.upper_covers(p);
        report.check("cover-bound", ups.len() <= 2, || {
            format!("element {p} is covered by {ups:?}")
        });
    }

    for d in &intervals {
        for &x in &d.neck {
            for &y in poset.lower_covers(x) {
                report.check("neck-closure", d.contains(y), || {
                    format!("neck element {x} of [{}, {}] covers outside element {y}", d.bottom, d.top)
                });
            }
        }
        for &x in &d.tail {
            for &y in poset.upper_covers(x) {
                report.check("tail-closure", d.contains(y), || {
                    format!("tail element {x} of [{}, {}] is covered by outside element {y}", d.bottom, d.top)
                });
            }
        }
    }

    for p in poset.elements() {
        let as_top: Vec<&DInterval> = intervals.iter().filter(|d| d.top == p).collect();
        let as_bottom: Vec<&DInterval> = intervals.iter().filter(|d| d.bottom == p).collect();
        report.check("unique-top", as_top.len() <= 1, || {
            format!("element {p} tops {} d-intervals", as_top.len())
        });
        report.check("unique-bottom", as_bottom.len() <= 1, || {
            format!("element {p} bottoms {} d-intervals", as_bottom.len())
        });
        if let [own] = as_top.as_slice() {
            for d in intervals.iter().filter(|d| d.neck.contains(&p)) {
                report.check("neck-containment", own.members().is_subset(&d.members()), || {
                    format!("[{}, {}] has neck element {p} but misses [{}, {p}]", d.bottom, d.top, own.bottom)
                });
            }
        }
        if let [own] = as_bottom.as_slice() {
            for d in intervals.iter().filter(|d| d.tail.contains(&p)) {
                report.check("tail-containment", own.members().is_subset(&d.members()), || {
                    format!("[{}, {}] has tail element {p} but misses [{p}, {}]", d.bottom, d.top, own.top)
                });
            }
        }
    }

    // Three V shapes {p_i, q_j, q_k} whose side pairs form a triangle.
    let vs: Vec<(Element, (Element, Element))> = find_d_minus_convex_sets(poset)
        .into_iter()
        .filter(|s| s.k == 3)
        .map(|s| (s.bottom, s.sides))
        .collect();
    let bottoms_for = |x: Element, y: Element| -> Vec<Element> {
        let key = (x.min(y), x.max(y));
        vs.iter().filter(|(_, s)| *s == key).map(|(b, _)| *b).collect()
    };
    let mut crown = None;
    let tops: Vec<Element> = {
        let mut t: Vec<Element> = vs.iter().flat_map(|(_, (a, b))| [*a, *b]).collect();
        t.sort_unstable();
        t.dedup();
        t
    };
    'search: for (i, &q1) in tops.iter().enumerate() {
        for (j, &q2) in tops.iter().enumerate().skip(i + 1) {
            for &q3 in tops.iter().skip(j + 1) {
                for &p3 in &bottoms_for(q1, q2) {
                    for &p2 in &bottoms_for(q1, q3) {
                        for &p1 in &bottoms_for(q2, q3) {
                            if p1 != p2 && p2 != p3 && p1 != p3 {
                                crown = Some([p1, p2, p3, q1, q2, q3]);
                                break 'search;
                            }
                        }
                    }
                }
            }
        }
    }
    report.check("forbidden-crown", crown.is_none(), || {
        format!("p1,p2,p3,q1,q2,q3 = {:?}", crown.unwrap())
    });

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{d_k_one, named_example, tree};

    #[test]
    fn diamond_is_d3() {
        let d3 = d_k_one(3).unwrap();
        let d = classify_interval(&d3, 0, 3).unwrap();
        assert_eq!(d.k, 3);
        assert_eq!(d.sides, (1, 2));
        assert_eq!(d.neck, vec![3]);
        assert_eq!(d.tail, vec![0]);
    }

    #[test]
    fn lettered_d4_structure() {
        let p = named_example("lettered-d4").unwrap();
        let id = |s: &str| p.find(s).unwrap();
        let d = classify_interval(&p, id("p"), id("q")).unwrap();
        assert_eq!(d.k, 4);
        assert_eq!(d.sides, (id("a"), id("b")));
        assert_eq!(d.neck, vec![id("q"), id("d")]);
        assert_eq!(d.tail, vec![id("c"), id("p")]);
    }

    #[test]
    fn chain_interval_is_not_a_d_interval() {
        let c = Poset::chain(4);
        assert!(classify_interval(&c, 0, 3).is_none());
        assert!(find_d_intervals(&c).is_empty());
    }

    #[test]
    fn d4_has_two_d_intervals() {
        let d4 = d_k_one(4).unwrap();
        let found: Vec<(Element, Element)> =
            find_d_intervals(&d4).iter().map(|d| (d.bottom, d.top)).collect();
        // Labels 1..6 are ids 0..5: [2, 5] and [1, 6].
        assert_eq!(found, vec![(0, 5), (1, 4)]);
        assert!(find_d_intervals(&Poset::antichain(3)).is_empty());
    }

    #[test]
    fn d_minus_sets_of_lettered_d4() {
        let p = named_example("lettered-d4").unwrap();
        let sets = find_d_minus_convex_sets(&p);
        let ks: Vec<usize> = sets.iter().map(|s| s.k).collect();
        assert_eq!(sets.len(), 2);
        let biggest = sets.iter().max_by_key(|s| s.k).unwrap();
        assert_eq!(biggest.k, 4);
        let names: Vec<&str> = biggest.members.iter().map(|e| p.name(e).unwrap()).collect();
        let mut names = names;
        names.sort();
        assert_eq!(names, vec!["a", "b", "c", "d", "p"]);
        assert!(ks.contains(&3));
        assert!(p.is_convex(&biggest.members));
    }

    #[test]
    fn chain_has_no_d_minus_sets() {
        assert!(find_d_minus_convex_sets(&Poset::chain(5)).is_empty());
    }

    #[test]
    fn truncated_diamond_fails_axiom_one() {
        // d_3(1) without its top: a V shape.
        let v = Poset::from_cover_relations(3, &[(0, 1), (0, 2)]).unwrap();
        let sets = find_d_minus_convex_sets(&v);
        assert_eq!(sets.len(), 1);
        assert_eq!(sets[0].members, ElementSet::from([0, 1, 2]));
        let report = check_d_complete(&v);
        assert!(!report.is_d_complete);
        assert_eq!(report.violations[0].axiom, 1);

        for k in 3..=6 {
            let full = d_k_one(k).unwrap();
            let top = full.len() - 1;
            let lower: ElementSet = (0..top).collect();
            let (trunc, _) = full.induced(&lower);
            let report = check_d_complete(&trunc);
            assert!(!report.is_d_complete, "k = {k}");
            assert!(report.violations.iter().any(|v| v.axiom == 1));
        }
    }

    #[test]
    fn axiom_two_violation() {
        // A diamond whose top also covers an extra element.
        let p = Poset::from_cover_relations(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (4, 3)]).unwrap();
        let report = check_d_complete(&p);
        assert!(report.violations.iter().any(|v| v.axiom == 2 && v.witness == vec![0, 3, 4]));
    }

    #[test]
    fn axiom_three_violation() {
        // Two diamonds sharing sides and top but with different bottoms.
        let p = Poset::from_cover_relations(
            5,
            &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)],
        )
        .unwrap();
        let report = check_d_complete(&p);
        assert!(report.violations.iter().any(|v| v.axiom == 3));
    }

    #[test]
    fn trees_and_examples_are_d_complete() {
        let t = tree(&[None, Some(0), Some(0), Some(1), Some(1), Some(2)]).unwrap();
        assert!(check_d_complete(&t).is_d_complete);
        assert!(check_d_complete(&named_example("ten-element").unwrap()).is_d_complete);
        assert!(check_d_complete(&named_example("lettered-d4").unwrap()).is_d_complete);
    }

    #[test]
    fn up_and_down_in_d4() {
        let d4 = d_k_one(4).unwrap();
        assert_eq!(up_of(&d4, 0).unwrap(), Some(5));
        assert_eq!(up_of(&d4, 1).unwrap(), Some(4));
        assert_eq!(up_of(&d4, 2).unwrap(), None);
        for p in d4.elements() {
            if let Some(q) = up_of(&d4, p).unwrap() {
                assert_eq!(down_of(&d4, q).unwrap(), Some(p));
            }
        }
        let c = Poset::chain(3);
        assert_eq!(up_of(&c, 2).unwrap(), None);
    }

    #[test]
    fn up_of_rejects_ambiguity() {
        // Element 0 is the bottom of two diamonds.
        let p = Poset::from_cover_relations(
            5,
            &[(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4)],
        )
        .unwrap();
        assert!(matches!(up_of(&p, 0), Err(Error::Contract(_))));
        assert!(DStructure::new(&p).is_err());
    }

    #[test]
    fn structural_oracles_catch_counterexamples() {
        let claw = Poset::from_cover_relations(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = structural_oracles(&claw);
        assert!(r.failed("cover-bound"));

        // p1 = 0, p2 = 1, p3 = 2; q1 = 3, q2 = 4, q3 = 5.
        let crown = Poset::from_cover_relations(
            6,
            &[(0, 5), (0, 4), (1, 5), (1, 3), (2, 4), (2, 3)],
        )
        .unwrap();
        let r = structural_oracles(&crown);
        assert!(r.failed("forbidden-crown"));
        assert!(!r.failed("cover-bound"));

        assert!(structural_oracles(&named_example("ten-element").unwrap()).passed());
    }
}
