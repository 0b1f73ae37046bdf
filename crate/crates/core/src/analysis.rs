use crate::diagonals::{compute_diagonals, DiagonalId, DiagonalPartition};
use crate::dstructure::{check_d_complete, DStructure};
use crate::error::{Error, Result};
use crate::hooks::{hook_polynomial_eval, hook_vectors_with, HookVector, RationalPoint};
use crate::poset::{Element, Poset};
use crate::rational::Rational;

/// A d-complete poset with its d-intervals, diagonals and hook vectors
/// computed once.
#[derive(Clone, Debug)]
pub struct Analysis {
    poset: Poset,
    structure: DStructure,
    diagonals: DiagonalPartition,
    hooks: Vec<HookVector>,
}

impl Analysis {
    /// Fails with a contract error naming the first violated axiom if the
    /// poset is not d-complete.
    pub fn new(poset: Poset) -> Result<Analysis> {
        let report = check_d_complete(&poset);
        if let Some(v) = report.violations.first() {
            return Err(Error::Contract(format!(
                "poset is not d-complete: axiom {} fails at {:?}",
                v.axiom, v.witness
            )));
        }
        let structure = DStructure::new(&poset)?;
        let diagonals = compute_diagonals(&poset, &structure.intervals);
        let hooks = hook_vectors_with(&poset, &structure, &diagonals)?;
        Ok(Analysis { poset, structure, diagonals, hooks })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn structure(&self) -> &DStructure {
        &self.structure
    }

    pub fn diagonals(&self) -> &DiagonalPartition {
        &self.diagonals
    }

    pub fn diagonal_of(&self, p: Element) -> DiagonalId {
        self.diagonals.diagonal_of(p)
    }

    pub fn hook(&self, p: Element) -> &HookVector {
        &self.hooks[p]
    }

    pub fn hooks(&self) -> &[HookVector] {
        &self.hooks
    }

    pub fn hook_lengths(&self) -> Vec<i64> {
        self.hooks.iter().map(|h| h.total()).collect()
    }

    /// `H_p(x)` for every element.
    pub fn hook_polynomials(&self, x: &RationalPoint) -> Result<Vec<Rational>> {
        self.hooks.iter().map(|h| hook_polynomial_eval(h, x)).collect()
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }
}
