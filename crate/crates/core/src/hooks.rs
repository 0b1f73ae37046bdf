//! Hook vectors, indicator vectors and hook polynomials.

use std::ops::{Add, Index, Sub};

use num_traits::Zero;

use crate::diagonals::{DiagonalId, DiagonalPartition};
use crate::dstructure::DStructure;
use crate::error::{domain, Error, Result};
use crate::poset::{Element, Poset};
use crate::rational::{int, Rational};

/// An integer vector indexed by diagonal ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagonalVector(Vec<i64>);

pub type HookVector = DiagonalVector;
pub type IndicatorVector = DiagonalVector;

impl DiagonalVector {
    pub fn zero(diagonals: usize) -> Self {
        DiagonalVector(vec![0; diagonals])
    }

    pub fn from_entries(entries: Vec<i64>) -> Self {
        DiagonalVector(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the entries: the hook length when this is a hook vector.
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl Index<DiagonalId> for DiagonalVector {
    type Output = i64;

    fn index(&self, d: DiagonalId) -> &i64 {
        &self.0[d]
    }
}

impl Add for &DiagonalVector {
    type Output = DiagonalVector;

    fn add(self, rhs: &DiagonalVector) -> DiagonalVector {
        DiagonalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &DiagonalVector {
    type Output = DiagonalVector;

    fn sub(self, rhs: &DiagonalVector) -> DiagonalVector {
        DiagonalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// `1_p`: the unit vector at the diagonal of `p`.
pub fn indicator(part: &DiagonalPartition, p: Element) -> IndicatorVector {
    let mut v = DiagonalVector::zero(part.len());
    v.0[part.diagonal_of(p)] = 1;
    v
}

/// `1_S`: the sum of the members' unit vectors.
pub fn indicator_of_set(part: &DiagonalPartition, set: impl IntoIterator<Item = Element>) -> IndicatorVector {
    let mut v = DiagonalVector::zero(part.len());
    for p in set {
        v.0[part.diagonal_of(p)] += 1;
    }
    v
}

/// Hook vectors of every element, computed bottom-up.
///
/// An element that tops no d-interval counts, per diagonal, the elements
/// below or equal to it. The top `p` of a d-interval `[p', p]` with sides
/// `w, z` gets `h(w) + h(z) - h(p')`.
pub fn hook_vectors(poset: &Poset, part: &DiagonalPartition) -> Result<Vec<HookVector>> {
    let ds = DStructure::new(poset)?;
    hook_vectors_with(poset, &ds, part)
}

pub(crate) fn hook_vectors_with(
    poset: &Poset,
    ds: &DStructure,
    part: &DiagonalPartition,
) -> Result<Vec<HookVector>> {
    let mut hooks: Vec<Option<HookVector>> = vec![None; poset.len()];
    for p in poset.bottom_up_order() {
        let h = match ds.interval_to(p) {
            None => indicator_of_set(part, poset.elements().filter(|&q| poset.leq(q, p))),
            Some(d) => {
                let get = |e: Element| {
                    hooks[e].as_ref().ok_or_else(|| {
                        Error::Contract(format!("hook of {e} needed before it was computed"))
                    })
                };
                let (w, z) = d.sides;
                &(get(w)? + get(z)?) - get(d.bottom)?
            }
        };
        hooks[p] = Some(h);
    }
    Ok(hooks.into_iter().map(|h| h.unwrap()).collect())
}

/// Positive rational values, one per diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint(Vec<Rational>);

impl RationalPoint {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if let Some(v) = values.iter().find(|v| *v <= &Rational::zero()) {
            return domain(format!("point coordinates must be positive, got {v}"));
        }
        Ok(RationalPoint(values))
    }

    pub fn ones(diagonals: usize) -> Self {
        RationalPoint(vec![int(1); diagonals])
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Index<DiagonalId> for RationalPoint {
    type Output = Rational;

    fn index(&self, d: DiagonalId) -> &Rational {
        &self.0[d]
    }
}

/// `H(x) = sum_D h^(D) x_D`.
pub fn hook_polynomial_eval(h: &HookVector, x: &RationalPoint) -> Result<Rational> {
    if h.len() != x.len() {
        return domain(format!(
            "hook vector has {} diagonals but the point has {}",
            h.len(),
            x.len()
        ));
    }
    Ok(h.0
        .iter()
        .zip(x.values())
        .fold(Rational::zero(), |acc, (&c, v)| acc + int(c) * v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dstructure::find_d_intervals;
    use crate::diagonals::compute_diagonals;
    use crate::generators::{d_k_one, young};
    use crate::rational::ratio;

    fn hooks_of(p: &Poset) -> (DiagonalPartition, Vec<HookVector>) {
        let part = compute_diagonals(p, &find_d_intervals(p));
        let h = hook_vectors(p, &part).unwrap();
        (part, h)
    }

    #[test]
    fn d4_hook_vectors() {
        let (_, h) = hooks_of(&d_k_one(4).unwrap());
        let got: Vec<Vec<i64>> = h.iter().map(|v| v.entries().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![1, 0, 0, 0],
                vec![1, 1, 0, 0],
                vec![1, 1, 1, 0],
                vec![1, 1, 0, 1],
                vec![1, 1, 1, 1],
                vec![1, 2, 1, 1],
            ]
        );
    }

    #[test]
    fn chain_hooks_are_depths() {
        let c = Poset::chain(5);
        let (part, h) = hooks_of(&c);
        assert_eq!(part.len(), 5);
        for (i, v) in h.iter().enumerate() {
            assert_eq!(v.total(), i as i64 + 1);
        }
    }

    #[test]
    fn young_333_matches_arm_plus_leg() {
        let lambda = [3usize, 3, 3];
        let p = young(&lambda).unwrap();
        let (_, h) = hooks_of(&p);
        for e in p.elements() {
            let name = p.name(e).unwrap();
            let (i, j) = name.split_once(',').unwrap();
            let (i, j): (usize, usize) = (i.parse::<usize>().unwrap() - 1, j.parse::<usize>().unwrap() - 1);
            let arm = lambda[i] - j - 1;
            let leg = lambda.iter().filter(|&&r| r > j).count() - i - 1;
            assert_eq!(h[e].total(), (arm + leg + 1) as i64, "cell {name}");
        }
    }

    #[test]
    fn hook_polynomial_values() {
        let (part, h) = hooks_of(&d_k_one(4).unwrap());
        let ones = RationalPoint::ones(part.len());
        assert_eq!(hook_polynomial_eval(&h[5], &ones).unwrap(), int(5));
        let x = RationalPoint::new(vec![int(1), ratio(1, 2), ratio(1, 3), ratio(1, 4)]).unwrap();
        assert_eq!(hook_polynomial_eval(&h[5], &x).unwrap(), ratio(31, 12));
        let unit = indicator(&part, 2);
        assert_eq!(hook_polynomial_eval(&unit, &x).unwrap(), ratio(1, 3));
        let short = RationalPoint::ones(3);
        assert!(hook_polynomial_eval(&h[0], &short).is_err());
        assert!(RationalPoint::new(vec![int(1), int(0)]).is_err());
    }
}
