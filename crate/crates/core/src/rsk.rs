//! Toggles and the toggle-based RSK bijection from fillings to
//! order-reversing fillings.
//!
//! Elements are inserted top-down along a linear extension. A freshly
//! inserted element is labelled with the negated input value, then every
//! already-inserted element of its diagonal is toggled. Diagonals contain no
//! two adjacent elements, so these toggles commute.

use std::ops::{Index, IndexMut};

use num_traits::{One, Signed, Zero};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::Analysis;
use crate::diagonals::DiagonalPartition;
use crate::error::{domain, Error, Result};
use crate::poset::{Element, ElementSet, LinearExtension, Poset};
use crate::rational::{determinant, int, random_positive, ratio, Rational};
use crate::report::OracleReport;

/// Exact rational labels, one per element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Filling(Vec<Rational>);

impl Filling {
    pub fn new(values: Vec<Rational>) -> Self {
        Filling(values)
    }

    pub fn zeros(n: usize) -> Self {
        Filling(vec![Rational::zero(); n])
    }

    pub fn from_integers(values: &[i64]) -> Self {
        Filling(values.iter().map(|&v| int(v)).collect())
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|v| !v.is_negative())
    }

    /// `p <= q` implies `s_p >= s_q`; checking covers suffices.
    pub fn is_order_reversing(&self, poset: &Poset) -> bool {
        poset.cover_pairs().iter().all(|&(a, b)| self.0[a] >= self.0[b])
    }

    pub fn total(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, v| acc + v)
    }
}

impl Index<Element> for Filling {
    type Output = Rational;

    fn index(&self, p: Element) -> &Rational {
        &self.0[p]
    }
}

impl IndexMut<Element> for Filling {
    fn index_mut(&mut self, p: Element) -> &mut Rational {
        &mut self.0[p]
    }
}

/// A linear extension used as an RSK insertion order, top element first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InsertionOrder(pub LinearExtension);

impl InsertionOrder {
    pub fn as_slice(&self) -> &[Element] {
        self.0.as_slice()
    }
}

/// Which neighbours a toggle read. Ties are broken towards the lowest id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToggleStep {
    pub element: Element,
    /// True for the toggle of the element just inserted.
    pub inserted: bool,
    pub upper: Option<Element>,
    pub lower: Option<Element>,
    /// Some maximum or minimum was attained twice.
    pub tie: bool,
}

fn toggle_in(
    s: &mut [Rational],
    poset: &Poset,
    present: &[bool],
    p: Element,
) -> (Option<Element>, Option<Element>, bool) {
    let mut tie = false;
    let mut upper: Option<Element> = None;
    for &x in poset.upper_covers(p).iter().filter(|&&x| present[x]) {
        match upper {
            None => upper = Some(x),
            Some(u) if s[x] > s[u] => upper = Some(x),
            Some(u) if s[x] == s[u] => tie = true,
            _ => {}
        }
    }
    let mut lower: Option<Element> = None;
    for &y in poset.lower_covers(p).iter().filter(|&&y| present[y]) {
        match lower {
            None => lower = Some(y),
            Some(l) if s[y] < s[l] => lower = Some(y),
            Some(l) if s[y] == s[l] => tie = true,
            _ => {}
        }
    }
    let sx = upper.map_or_else(Rational::zero, |x| s[x].clone());
    let sy = lower.map_or_else(Rational::zero, |y| s[y].clone());
    s[p] = sx + sy - &s[p];
    (upper, lower, tie)
}

/// Toggles `p` with every element of the poset present: the new label is
/// `max(labels above) + min(labels below) - old`, a missing side reading 0.
pub fn toggle(state: &Filling, poset: &Poset, p: Element) -> Filling {
    let mut s = state.0.clone();
    toggle_in(&mut s, poset, &vec![true; poset.len()], p);
    Filling(s)
}

fn check_order(poset: &Poset, order: &InsertionOrder) -> Result<()> {
    if order.0.is_valid(poset) {
        Ok(())
    } else {
        domain(format!("{:?} is not a linear extension listed top-down", order.as_slice()))
    }
}

fn resolve_order(an: &Analysis, order: Option<&InsertionOrder>) -> Result<InsertionOrder> {
    match order {
        Some(o) => {
            check_order(an.poset(), o)?;
            Ok(o.clone())
        }
        None => stable_insertion_order(an),
    }
}

/// RSK without input validation, recording every toggle.
fn rsk_steps(an: &Analysis, t: &[Rational], order: &[Element]) -> (Vec<Rational>, Vec<ToggleStep>) {
    let poset = an.poset();
    let part = an.diagonals();
    let mut s = vec![Rational::zero(); poset.len()];
    let mut present = vec![false; poset.len()];
    let mut trace = Vec::new();
    for &c in order {
        present[c] = true;
        s[c] = -t[c].clone();
        for q in part.class(part.diagonal_of(c)).iter().filter(|&q| present[q]) {
            let (upper, lower, tie) = toggle_in(&mut s, poset, &present, q);
            trace.push(ToggleStep { element: q, inserted: q == c, upper, lower, tie });
        }
    }
    (s, trace)
}

pub fn rsk(an: &Analysis, t: &Filling, order: Option<&InsertionOrder>) -> Result<Filling> {
    rsk_traced(an, t, order).map(|(s, _)| s)
}

/// RSK together with the list of toggles it performed.
pub fn rsk_traced(
    an: &Analysis,
    t: &Filling,
    order: Option<&InsertionOrder>,
) -> Result<(Filling, Vec<ToggleStep>)> {
    if t.len() != an.len() {
        return domain(format!("filling has {} values for {} elements", t.len(), an.len()));
    }
    if let Some(p) = t.0.iter().position(|v| v.is_negative()) {
        return domain(format!("filling value at element {p} is negative"));
    }
    let order = resolve_order(an, order)?;
    let (s, trace) = rsk_steps(an, &t.0, order.as_slice());
    Ok((Filling(s), trace))
}

/// Undoes [`rsk`]: replays the insertions backwards, toggling each diagonal
/// again and reading off the negated label of the element being removed.
pub fn inverse_rsk(an: &Analysis, s: &Filling, order: Option<&InsertionOrder>) -> Result<Filling> {
    let poset = an.poset();
    if s.len() != an.len() {
        return domain(format!("filling has {} values for {} elements", s.len(), an.len()));
    }
    if !s.is_nonnegative() {
        return domain("inverse RSK needs a nonnegative filling");
    }
    if !s.is_order_reversing(poset) {
        return domain("inverse RSK needs an order-reversing filling");
    }
    let order = resolve_order(an, order)?;
    let part = an.diagonals();
    let mut cur = s.0.clone();
    let mut present = vec![true; poset.len()];
    let mut t = vec![Rational::zero(); poset.len()];
    for &c in order.as_slice().iter().rev() {
        for q in part.class(part.diagonal_of(c)).iter().filter(|&q| present[q]) {
            toggle_in(&mut cur, poset, &present, q);
        }
        t[c] = -cur[c].clone();
        present[c] = false;
    }
    if let Some(p) = t.iter().position(|v| v.is_negative()) {
        return Err(Error::Contract(format!("inverse RSK produced a negative value at {p}")));
    }
    Ok(Filling(t))
}

/// Checks, for every prefix `P_i` of the order, that when `p_i` is the
/// bottom of a d-interval, neither side of that interval is a neck element
/// of another d-interval inside `P_i`.
pub fn is_stable(an: &Analysis, order: &InsertionOrder) -> bool {
    let poset = an.poset();
    if !order.0.is_valid(poset) {
        return false;
    }
    let ds = an.structure();
    let mut inserted = vec![false; poset.len()];
    for &p in order.as_slice() {
        inserted[p] = true;
        let Some(own) = ds.interval_from(p) else { continue };
        // The d-intervals of an upper set are those of P starting inside it.
        for other in ds.intervals.iter().filter(|d| inserted[d.bottom] && *d != own) {
            if other.neck.contains(&own.sides.0) || other.neck.contains(&own.sides.1) {
                return false;
            }
        }
    }
    true
}

/// Builds a stable insertion order from the bottom up.
///
/// Repeatedly removes a minimal element lying in no d-interval of what
/// remains; when there is none, takes the bottom of a maximal d-interval
/// whose innermost diamond has a minimal top. The result is checked with
/// [`is_stable`] before it is returned.
pub fn stable_insertion_order(an: &Analysis) -> Result<InsertionOrder> {
    let poset = an.poset();
    let ds = an.structure();
    let n = poset.len();
    let mut remaining = vec![true; n];
    let mut stripped = Vec::with_capacity(n);
    for _ in 0..n {
        let live: Vec<_> = ds.intervals.iter().filter(|d| remaining[d.bottom]).collect();
        let minimal: Vec<Element> = (0..n)
            .filter(|&p| remaining[p] && poset.lower_covers(p).iter().all(|&q| !remaining[q]))
            .collect();
        let free = minimal.iter().copied().find(|&p| live.iter().all(|d| !d.contains(p)));
        let next = match free {
            Some(p) => p,
            None => {
                let maximal: Vec<_> = live
                    .iter()
                    .filter(|d| {
                        let m = d.members();
                        !live.iter().any(|e| e.bottom != d.bottom && m.is_subset(&e.members()))
                    })
                    .collect();
                let chosen = maximal
                    .iter()
                    .filter(|d| {
                        !maximal
                            .iter()
                            .any(|e| poset.lt(e.diamond_top(), d.diamond_top()))
                    })
                    .min_by_key(|d| d.bottom)
                    .ok_or_else(|| Error::Contract("no d-interval to strip".into()))?;
                if !minimal.contains(&chosen.bottom) {
                    return Err(Error::Contract(format!(
                        "bottom {} of the chosen d-interval is not minimal",
                        chosen.bottom
                    )));
                }
                chosen.bottom
            }
        };
        remaining[next] = false;
        stripped.push(next);
    }
    stripped.reverse();
    let order = InsertionOrder(LinearExtension(stripped));
    if !is_stable(an, &order) {
        return Err(Error::Contract(format!(
            "constructed order {:?} is not stable",
            order.as_slice()
        )));
    }
    Ok(order)
}

/// `S(D) = sum of s_p over p in D`, one entry per diagonal.
pub fn diagonal_sums(part: &DiagonalPartition, s: &Filling) -> Vec<Rational> {
    let mut sums = vec![Rational::zero(); part.len()];
    for (p, v) in s.0.iter().enumerate() {
        sums[part.diagonal_of(p)] += v;
    }
    sums
}

/// Diagonal sums over the elements of `members` only.
pub fn diagonal_sums_over(part: &DiagonalPartition, s: &Filling, members: &ElementSet) -> Vec<Rational> {
    let mut sums = vec![Rational::zero(); part.len()];
    for p in members.iter() {
        sums[part.diagonal_of(p)] += &s.0[p];
    }
    sums
}

/// A linear extension chosen by picking uniformly among the currently
/// available maximal elements at each step.
pub fn random_linear_extension<R: Rng + ?Sized>(poset: &Poset, rng: &mut R) -> LinearExtension {
    let n = poset.len();
    let mut pending: Vec<usize> = poset.elements().map(|p| poset.upper_covers(p).len()).collect();
    let mut placed = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let avail: Vec<Element> = (0..n).filter(|&p| !placed[p] && pending[p] == 0).collect();
        let &p = avail.choose(rng).expect("a finite poset always has a maximal element");
        placed[p] = true;
        for &q in poset.lower_covers(p) {
            pending[q] -= 1;
        }
        out.push(p);
    }
    LinearExtension(out)
}

pub fn random_filling<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Filling {
    Filling((0..n).map(|_| random_positive(rng)).collect())
}

/// Determinant of the linear piece of RSK containing `t`, from exact finite
/// differences. `None` when `t` sits on a boundary between pieces (some
/// toggle saw a tie) or no perturbation stays inside the piece.
pub fn jacobian_determinant(an: &Analysis, t: &Filling, order: Option<&InsertionOrder>) -> Result<Option<Rational>> {
    let (base, trace) = rsk_traced(an, t, order)?;
    if trace.iter().any(|s| s.tie) {
        return Ok(None);
    }
    let order = resolve_order(an, order)?;
    let n = an.len();
    let selections = |tr: &[ToggleStep]| -> Vec<(Option<Element>, Option<Element>)> {
        tr.iter().map(|s| (s.upper, s.lower)).collect()
    };
    let base_sel = selections(&trace);

    let mut distinct: Vec<&Rational> = t.0.iter().collect();
    distinct.sort();
    distinct.dedup();
    let gap = distinct
        .windows(2)
        .map(|w| w[1] - w[0])
        .min()
        .unwrap_or_else(Rational::one);
    let start = gap / int(1 << 20);

    let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(n);
    for k in 0..n {
        let mut eps = start.clone();
        let mut column = None;
        for _ in 0..40 {
            let mut shifted = t.0.clone();
            shifted[k] += &eps;
            let (img, tr) = rsk_steps(an, &shifted, order.as_slice());
            if selections(&tr) == base_sel {
                column = Some(
                    img.iter()
                        .zip(&base.0)
                        .map(|(a, b)| (a - b) / &eps)
                        .collect::<Vec<_>>(),
                );
                break;
            }
            eps /= int(2);
        }
        match column {
            Some(c) => columns.push(c),
            None => return Ok(None),
        }
    }
    // Rows are outputs, columns are inputs.
    let matrix: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| columns[j][i].clone()).collect())
        .collect();
    Ok(Some(determinant(matrix)))
}

/// Randomized checks of the RSK identities on `trials` fillings:
/// independence from the insertion order, the diagonal-sum formula, the
/// diagonal-sum recurrence for removing a minimal element, order reversal,
/// round trips through the inverse, and that only freshly inserted
/// elements are toggled without a lower neighbour.
pub fn rsk_oracles(an: &Analysis, trials: usize, seed: u64) -> OracleReport {
    let mut report = OracleReport::new();
    let poset = an.poset();
    let part = an.diagonals();
    let n = poset.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Removing each minimal element c leaves an upper set, again d-complete.
    let mut removals = Vec::new();
    if n >= 2 {
        for c in poset.minimal_elements() {
            let rest: ElementSet = poset.elements().filter(|&p| p != c).collect();
            let (sub, map) = poset.induced(&rest);
            match Analysis::new(sub) {
                Ok(sub_an) => removals.push((c, rest, sub_an, map)),
                Err(e) => report.check("upper-set-d-complete", false, || e.to_string()),
            }
        }
    }

    for trial in 0..trials {
        let t = random_filling(n, &mut rng);
        let first = InsertionOrder(random_linear_extension(poset, &mut rng));
        let second = InsertionOrder(random_linear_extension(poset, &mut rng));
        let (s1, trace) = match rsk_traced(an, &t, Some(&first)) {
            Ok(v) => v,
            Err(e) => {
                report.check("rsk", false, || e.to_string());
                continue;
            }
        };
        let s2 = rsk(an, &t, Some(&second)).expect("valid order");
        report.check("order-independence", s1 == s2, || {
            format!("trial {trial}: t={t:?} orders {:?} / {:?}", first.as_slice(), second.as_slice())
        });

        let sums = diagonal_sums(part, &s1);
        for (d, sum) in sums.iter().enumerate() {
            let expected = poset
                .elements()
                .fold(Rational::zero(), |acc, p| acc + int(an.hook(p)[d]) * &t[p]);
            report.check("diagonal-sum", *sum == expected, || {
                format!("trial {trial}: diagonal {d}: S = {sum}, hook sum = {expected}, t={t:?}")
            });
        }

        report.check("order-reversing", s1.is_order_reversing(poset) && s1.is_nonnegative(), || {
            format!("trial {trial}: t={t:?} s={s1:?}")
        });

        report.check(
            "missing-lower-only-when-inserting",
            trace.iter().all(|st| st.lower.is_some() || st.inserted),
            || format!("trial {trial}: t={t:?}"),
        );

        match inverse_rsk(an, &s1, None) {
            Ok(back) => report.check("round-trip", back == t, || format!("trial {trial}: t={t:?} back={back:?}")),
            Err(e) => report.check("round-trip", false, || format!("trial {trial}: {e}")),
        }

        for (c, rest, sub_an, map) in &removals {
            let sub_t = Filling(map.iter().map(|&p| t[p].clone()).collect());
            let sub_s = rsk(sub_an, &sub_t, None).expect("valid filling");
            let mut lifted = Filling::zeros(n);
            for (i, &p) in map.iter().enumerate() {
                lifted[p] = sub_s[i].clone();
            }
            let s_small = diagonal_sums_over(part, &lifted, rest);
            let dc = part.diagonal_of(*c);
            let adjacent_sum = (0..part.len())
                .filter(|&d| part.adjacent(dc, d))
                .fold(Rational::zero(), |acc, d| acc + &s_small[d]);
            let lhs = &s_small[dc] + &sums[dc];
            let rhs = &t[*c] + adjacent_sum;
            report.check("diagonal-sum-recurrence", lhs == rhs, || {
                format!("trial {trial}: removing {c}: {lhs} != {rhs}")
            });
        }
    }
    report
}

/// Samples fillings until one avoids every tie, then returns the Jacobian
/// determinant there. Gives up after `attempts` tries.
pub fn generic_jacobian<R: Rng + ?Sized>(an: &Analysis, rng: &mut R, attempts: usize) -> Option<(Filling, Rational)> {
    for _ in 0..attempts {
        let t = random_filling(an.len(), rng);
        if let Ok(Some(det)) = jacobian_determinant(an, &t, None) {
            return Some((t, det));
        }
    }
    None
}

/// Rational with small numerator and denominator, for test fillings that
/// should include zeros.
pub fn random_nonnegative<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let a: i64 = rng.random_range(0..=16);
    let b: i64 = rng.random_range(1..=16);
    ratio(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{d_k_one, named_example, shifted_young, young};

    fn d4() -> Analysis {
        Analysis::new(d_k_one(4).unwrap()).unwrap()
    }

    #[test]
    fn toggle_isolated_and_involution() {
        let single = Poset::chain(1);
        let t = Filling::from_integers(&[5]);
        assert_eq!(toggle(&t, &single, 0), Filling::from_integers(&[-5]));

        let c = Poset::chain(3);
        let s = Filling::from_integers(&[7, 4, 1]);
        let once = toggle(&s, &c, 1);
        assert_eq!(once, Filling::from_integers(&[7, 4, 1]).with(1, int(1 + 7 - 4)));
        assert_eq!(toggle(&once, &c, 1), s);
    }

    impl Filling {
        fn with(mut self, p: Element, v: Rational) -> Filling {
            self.0[p] = v;
            self
        }
    }

    #[test]
    fn toggle_reads_max_above_and_min_below() {
        // Central element 0 covered by 1 (label 3) and 2 (label 4), covering
        // 3 (label 6) and 4 (label 7).
        let p = Poset::from_cover_relations(5, &[(0, 1), (0, 2), (3, 0), (4, 0)]).unwrap();
        let s = Filling::from_integers(&[5, 3, 4, 6, 7]);
        let out = toggle(&s, &p, 0);
        assert_eq!(out[0], int(4 + 6 - 5));
    }

    #[test]
    fn worked_example_on_d4() {
        let an = d4();
        // Labels 6,5,3,4,2,1 read top to bottom carry 1,2,3,4,2,2.
        let t = Filling::from_integers(&[2, 2, 3, 4, 2, 1]);
        let order = InsertionOrder(LinearExtension(vec![5, 4, 2, 3, 1, 0]));
        let s = rsk(&an, &t, Some(&order)).unwrap();
        assert_eq!(s, Filling::from_integers(&[11, 9, 6, 7, 4, 3]));
        assert_eq!(inverse_rsk(&an, &s, Some(&order)).unwrap(), t);
        assert_eq!(rsk(&an, &t, None).unwrap(), s);
        let sums = diagonal_sums(an.diagonals(), &s);
        assert_eq!(sums, vec![int(14), int(13), int(6), int(7)]);
    }

    #[test]
    fn singleton_is_identity() {
        let an = Analysis::new(Poset::chain(1)).unwrap();
        let t = Filling::from_integers(&[3]);
        assert_eq!(rsk(&an, &t, None).unwrap(), t);
        assert_eq!(inverse_rsk(&an, &t, None).unwrap(), t);
    }

    #[test]
    fn rejects_bad_inputs() {
        let an = d4();
        let neg = Filling::from_integers(&[1, 1, 1, 1, 1, -1]);
        assert!(matches!(rsk(&an, &neg, None), Err(Error::Domain(_))));
        let bad = InsertionOrder(LinearExtension(vec![0, 1, 2, 3, 4, 5]));
        assert!(rsk(&an, &Filling::zeros(6), Some(&bad)).is_err());
        let not_rev = Filling::from_integers(&[0, 0, 0, 0, 0, 1]);
        assert!(inverse_rsk(&an, &not_rev, None).is_err());
    }

    #[test]
    fn zero_filling_maps_to_zero() {
        let an = Analysis::new(named_example("ten-element").unwrap()).unwrap();
        let z = Filling::zeros(10);
        assert_eq!(rsk(&an, &z, None).unwrap(), z);
        assert!(rsk_oracles(&an, 0, 1).passed());
        let sums = diagonal_sums(an.diagonals(), &z);
        assert!(sums.iter().all(|s| s.is_zero()));
    }

    #[test]
    fn stable_orders() {
        let chain = Analysis::new(Poset::chain(4)).unwrap();
        assert_eq!(stable_insertion_order(&chain).unwrap().as_slice(), &[3, 2, 1, 0]);

        let ten = Analysis::new(named_example("ten-element").unwrap()).unwrap();
        let order = stable_insertion_order(&ten).unwrap();
        assert!(is_stable(&ten, &order));
        // t a b c f i e g h j, top row first.
        let id = |s: &str| ten.poset().find(s).unwrap();
        let drawn: Vec<Element> = ["t", "a", "b", "c", "f", "i", "e", "g", "h", "j"].iter().map(|s| id(s)).collect();
        assert!(is_stable(&ten, &InsertionOrder(LinearExtension(drawn))));
    }

    #[test]
    fn unstable_order_on_shifted_diagram() {
        let an = Analysis::new(shifted_young(&[5, 4, 2]).unwrap()).unwrap();
        let id = |s: &str| an.poset().find(s).unwrap();
        // Insert 2,4 (making 1,3 a neck element) before 3,3, the bottom of
        // the d-interval whose sides are 1,3 and 2,2.
        let names = ["1,1", "1,2", "1,3", "2,2", "1,4", "2,3", "1,5", "2,4", "3,3", "2,5", "3,4"];
        let order = InsertionOrder(LinearExtension(names.iter().map(|s| id(s)).collect()));
        assert!(order.0.is_valid(an.poset()));
        assert!(!is_stable(&an, &order));
        assert!(is_stable(&an, &stable_insertion_order(&an).unwrap()));
    }

    #[test]
    fn jacobian_is_unimodular() {
        let an = Analysis::new(young(&[3, 2]).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let (_, det) = generic_jacobian(&an, &mut rng, 50).unwrap();
        assert_eq!(det.abs(), int(1));
    }

    #[test]
    fn oracles_pass_on_examples() {
        for p in [named_example("ten-element").unwrap(), young(&[3, 2, 2]).unwrap(), shifted_young(&[4, 2, 1]).unwrap()] {
            let an = Analysis::new(p).unwrap();
            let r = rsk_oracles(&an, 10, 3);
            assert!(r.passed(), "{r}");
        }
    }
}
