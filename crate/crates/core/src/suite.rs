//! The acceptance battery: ten criteria run over the catalog.

use std::fmt;

use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::Analysis;
use crate::catalog::catalog;
use crate::classical::{
    classical_insert_rsk, gt_from_rpp, reading_order, rsk_on_rectangle, ssyt_from_gt, toggle_rpp, MatrixFilling,
};
use crate::diagonals::diagonal_oracles;
use crate::dstructure::structural_oracles;
use crate::extensions::{count_linear_extensions, DEFAULT_CAP};
use crate::generators::d_k_one;
use crate::hooks::RationalPoint;
use crate::poset::LinearExtension;
use crate::rational::{int, ratio, to_f64};
use crate::report::OracleReport;
use crate::rsk::{
    diagonal_sums, inverse_rsk, is_stable, jacobian_determinant, random_filling, random_linear_extension, rsk,
    rsk_oracles, stable_insertion_order, Filling, InsertionOrder,
};
use crate::verify::{
    closed_form_volume, monte_carlo_volume, random_point, rsk_polytope_check, verify_multivariate, verify_proctor,
    PolytopeKind, PolytopeSpec,
};

pub const CRITERIA: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2} {status} {}: {}", self.id, self.name, self.detail)
    }
}

/// The catalog with its analyses, built once and shared by all criteria.
pub struct Suite {
    seed: u64,
    entries: Vec<(String, Analysis)>,
}

fn mix(seed: u64, i: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64)
}

/// Collects failures across the catalog, keeping the first few witnesses.
struct Tally {
    checks: usize,
    failures: usize,
    witnesses: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checks: 0, failures: 0, witnesses: Vec::new() }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.witnesses.len() < 3 {
                self.witnesses.push(witness());
            }
        }
    }

    fn report(&mut self, poset: &str, r: &OracleReport) {
        self.checks += r.checks;
        self.failures += r.failures.len();
        for f in r.failures.iter().take(3usize.saturating_sub(self.witnesses.len())) {
            self.witnesses.push(format!("{poset}: {}: {}", f.property, f.witness));
        }
    }

    fn finish(self, id: usize, name: &'static str, extra: String) -> CriterionResult {
        let mut detail = format!("checks={} failures={}", self.checks, self.failures);
        if !extra.is_empty() {
            detail = format!("{extra} {detail}");
        }
        if !self.witnesses.is_empty() {
            detail = format!("{detail} first: {}", self.witnesses.join(" | "));
        }
        CriterionResult { id, name, passed: self.failures == 0 && self.checks > 0, detail }
    }
}

impl Suite {
    pub fn new(seed: u64) -> crate::error::Result<Suite> {
        let entries = catalog()
            .into_iter()
            .map(|e| Analysis::new(e.poset).map(|a| (e.name, a)))
            .collect::<crate::error::Result<Vec<_>>>()?;
        Ok(Suite { seed, entries })
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(n, _)| n.as_str())
    }

    pub fn run_all(&self) -> Vec<CriterionResult> {
        (1..=CRITERIA).map(|id| self.criterion(id)).collect()
    }

    /// Runs criterion `id` (1-based).
    pub fn criterion(&self, id: usize) -> CriterionResult {
        match id {
            1 => self.proctor(),
            2 => self.multivariate(),
            3 => worked_example(),
            4 => self.diagonal_sums(),
            5 => self.order_independence(),
            6 => self.volume_preservation(),
            7 => self.polytope_bijection(),
            8 => self.structure(),
            9 => self.classical(),
            10 => self.monte_carlo(),
            _ => CriterionResult { id, name: "unknown", passed: false, detail: format!("no criterion {id}") },
        }
    }

    fn proctor(&self) -> CriterionResult {
        let mut tally = Tally::new();
        for (name, an) in &self.entries {
            match verify_proctor(an) {
                Ok(c) => tally.check(c.ok, || {
                    format!("{name}: extensions={} hook_product={} factorial={}", c.extensions, c.hook_product, c.factorial)
                }),
                Err(e) => tally.check(false, || format!("{name}: {e}")),
            }
        }
        let d4 = Analysis::new(d_k_one(4).unwrap()).unwrap();
        let c = verify_proctor(&d4).unwrap();
        let instance = c.extensions == 2u32.into() && c.hook_product == 360u32.into() && c.factorial == 720u32.into();
        tally.check(instance && c.ok, || format!("d4: {c:?}"));
        tally.finish(1, "hook length count", format!("posets={}", self.entries.len()))
    }

    fn multivariate(&self) -> CriterionResult {
        let mut tally = Tally::new();
        let mut covered = 0;
        for (i, (name, an)) in self.entries.iter().enumerate() {
            if count_linear_extensions(an.poset()).map_or(true, |c| c > 100_000u32.into()) {
                continue;
            }
            covered += 1;
            match verify_multivariate(an, 20, mix(self.seed, i), DEFAULT_CAP) {
                Ok(r) => {
                    for p in &r.points {
                        tally.check(p.ok(), || {
                            format!("{name}: at {:?}: {} != {}", p.point.values(), p.weight_sum, p.hook_side)
                        });
                    }
                }
                Err(e) => tally.check(false, || format!("{name}: {e}")),
            }
        }
        let d4 = Analysis::new(d_k_one(4).unwrap()).unwrap();
        let exts: Vec<LinearExtension> = crate::extensions::collect_linear_extensions(d4.poset(), 10).unwrap();
        let at_ones = crate::verify::check_point(&d4, &exts, RationalPoint::ones(4)).unwrap();
        tally.check(at_ones.weight_sum == ratio(1, 360) && at_ones.ok(), || format!("d4 at ones: {at_ones:?}"));
        tally.finish(2, "multivariate hook identity", format!("posets={covered} points=20"))
    }

    fn diagonal_sums(&self) -> CriterionResult {
        let mut tally = Tally::new();
        for (i, (name, an)) in self.entries.iter().enumerate() {
            tally.report(name, &rsk_oracles(an, 100, mix(self.seed, i)));
        }
        let (an, s) = worked_example_image();
        let sums = diagonal_sums(an.diagonals(), &s);
        tally.check(sums == vec![int(14), int(13), int(6), int(7)], || format!("d4 example sums {sums:?}"));
        tally.finish(4, "diagonal sums", "trials=100".into())
    }

    fn order_independence(&self) -> CriterionResult {
        let mut tally = Tally::new();
        for (i, (name, an)) in self.entries.iter().enumerate() {
            let mut rng = ChaCha8Rng::seed_from_u64(mix(self.seed, i));
            for _ in 0..100 {
                let t = random_filling(an.len(), &mut rng);
                let a = InsertionOrder(random_linear_extension(an.poset(), &mut rng));
                let b = InsertionOrder(random_linear_extension(an.poset(), &mut rng));
                let same = matches!((rsk(an, &t, Some(&a)), rsk(an, &t, Some(&b))), (Ok(x), Ok(y)) if x == y);
                tally.check(same, || format!("{name}: t={t:?} orders {:?} {:?}", a.as_slice(), b.as_slice()));
            }
        }
        tally.finish(5, "insertion order independence", "trials=100".into())
    }

    fn volume_preservation(&self) -> CriterionResult {
        let mut tally = Tally::new();
        let mut covered = 0;
        for (i, (name, an)) in self.entries.iter().enumerate() {
            if an.len() > 10 {
                continue;
            }
            covered += 1;
            let mut rng = ChaCha8Rng::seed_from_u64(mix(self.seed, i));
            let mut found = 0;
            let mut attempts = 0;
            while found < 25 && attempts < 1000 {
                attempts += 1;
                let t = random_filling(an.len(), &mut rng);
                match jacobian_determinant(an, &t, None) {
                    Ok(Some(det)) => {
                        found += 1;
                        tally.check(det.abs() == int(1), || format!("{name}: det={det} at t={t:?}"));
                    }
                    Ok(None) => {}
                    Err(e) => tally.check(false, || format!("{name}: {e}")),
                }
            }
            tally.check(found == 25, || format!("{name}: only {found} generic points in {attempts} draws"));
        }
        tally.finish(6, "volume preservation", format!("posets={covered} points=25"))
    }

    fn polytope_bijection(&self) -> CriterionResult {
        let mut tally = Tally::new();
        for (i, (name, an)) in self.entries.iter().enumerate() {
            let mut rng = ChaCha8Rng::seed_from_u64(mix(self.seed, i));
            let x = random_point(an.diagonals().len(), &mut rng);
            match rsk_polytope_check(an, &x, 100, rng.random()) {
                Ok(r) => tally.report(name, &r),
                Err(e) => tally.check(false, || format!("{name}: {e}")),
            }
        }
        tally.finish(7, "polytope bijection", "trials=100".into())
    }

    fn structure(&self) -> CriterionResult {
        let mut tally = Tally::new();
        for (name, an) in &self.entries {
            tally.report(name, &structural_oracles(an.poset()));
            if an.len() <= 12 {
                tally.report(name, &diagonal_oracles(an.poset(), an.diagonals()));
            }
            match stable_insertion_order(an) {
                Ok(o) => tally.check(is_stable(an, &o), || format!("{name}: {:?} not stable", o.as_slice())),
                Err(e) => tally.check(false, || format!("{name}: {e}")),
            }
        }
        tally.finish(8, "structural oracles", String::new())
    }

    fn classical(&self) -> CriterionResult {
        let mut tally = Tally::new();
        let example = MatrixFilling::new(vec![vec![1, 0, 2], vec![0, 2, 0], vec![1, 1, 0]]).unwrap();
        let order = [(0, 0), (0, 1), (0, 2), (1, 0), (2, 0), (1, 1), (2, 1), (1, 2), (2, 2)];
        match toggle_rpp(&example, &order) {
            Ok(r) => {
                tally.check(r.rows() == [vec![1, 2, 3], vec![1, 2, 3], vec![2, 4, 4]], || format!("example RPP {r:?}"));
                let (lower, upper) = gt_from_rpp(&r).unwrap();
                tally.check(lower.rows() == [vec![4, 2, 1], vec![4, 1], vec![2]], || format!("lower {lower}"));
                tally.check(upper.rows() == [vec![4, 2, 1], vec![3, 2], vec![3]], || format!("upper {upper}"));
                let (p, q) = classical_insert_rsk(&example);
                tally.check(p.rows() == [vec![1, 1, 2, 2], vec![2, 3], vec![3]], || format!("P {p}"));
                tally.check(q.rows() == [vec![1, 1, 1, 3], vec![2, 2], vec![3]], || format!("Q {q}"));
                tally.check(ssyt_from_gt(&lower).ok() == Some(p), || "P from lower pattern".into());
                tally.check(ssyt_from_gt(&upper).ok() == Some(q), || "Q from upper pattern".into());
            }
            Err(e) => tally.check(false, || format!("example: {e}")),
        }

        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        for trial in 0..200 {
            let n = if trial % 2 == 0 { 3 } else { 4 };
            let m = MatrixFilling::new(
                (0..n).map(|_| (0..n).map(|_| rng.random_range(0..=4)).collect()).collect(),
            )
            .unwrap();
            let shuffled = random_square_order(n, &mut rng);
            let outcome = (|| -> crate::error::Result<bool> {
                let r = toggle_rpp(&m, &reading_order(n, n))?;
                let (lower, upper) = gt_from_rpp(&r)?;
                let (p, q) = classical_insert_rsk(&m);
                Ok(r.is_rpp()
                    && ssyt_from_gt(&lower)? == p
                    && ssyt_from_gt(&upper)? == q
                    && toggle_rpp(&m, &shuffled)? == r
                    && rsk_on_rectangle(&m)? == r)
            })();
            tally.check(matches!(outcome, Ok(true)), || format!("matrix {:?}: {outcome:?}", m.rows()));
        }
        tally.finish(9, "classical correspondence", "matrices=200".into())
    }

    fn monte_carlo(&self) -> CriterionResult {
        const SAMPLES: u64 = 1_000_000;
        let mut tally = Tally::new();
        let mut covered = 0;
        let mut worst = 0.0f64;
        for (i, (name, an)) in self.entries.iter().enumerate() {
            if an.len() > 6 {
                continue;
            }
            covered += 1;
            let x = RationalPoint::ones(an.diagonals().len());
            for (j, kind) in [PolytopeKind::Fillings, PolytopeKind::Rpp].into_iter().enumerate() {
                let spec = PolytopeSpec { kind, point: x.clone() };
                let exact = to_f64(&closed_form_volume(an, kind, &x, DEFAULT_CAP).unwrap());
                let est = monte_carlo_volume(an, &spec, SAMPLES, mix(self.seed, 2 * i + j)).unwrap();
                // When the box is the polytope every sample hits and the
                // error is exactly zero.
                let diff = (est.estimate - exact).abs();
                let z = if diff == 0.0 { 0.0 } else { diff / est.std_error_at(exact) };
                worst = worst.max(z);
                tally.check(z <= 4.0, || {
                    format!("{name} {kind}: estimate {} exact {exact} hits {} z={z:.2}", est.estimate, est.hits)
                });
            }
        }
        tally.finish(10, "Monte Carlo volumes", format!("posets={covered} samples={SAMPLES} max_z={worst:.2}"))
    }
}

fn random_square_order<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<(usize, usize)> {
    // A random linear extension of the square, built by picking among the
    // squares whose upper and left neighbours are already placed.
    let mut placed = vec![false; n * n];
    let mut out = Vec::with_capacity(n * n);
    while out.len() < n * n {
        let mut ready: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| {
                !placed[i * n + j] && (i == 0 || placed[(i - 1) * n + j]) && (j == 0 || placed[i * n + j - 1])
            })
            .collect();
        ready.shuffle(rng);
        let (i, j) = ready[0];
        placed[i * n + j] = true;
        out.push((i, j));
    }
    out
}

fn worked_example_image() -> (Analysis, Filling) {
    let an = Analysis::new(d_k_one(4).unwrap()).unwrap();
    let t = Filling::from_integers(&[2, 2, 3, 4, 2, 1]);
    let s = rsk(&an, &t, None).unwrap();
    (an, s)
}

/// The d4 example: elements listed top-down carry 1, 2, 3, 4, 2, 2.
fn worked_example() -> CriterionResult {
    let mut tally = Tally::new();
    let an = Analysis::new(d_k_one(4).unwrap()).unwrap();
    let t = Filling::from_integers(&[2, 2, 3, 4, 2, 1]);
    let order = InsertionOrder(LinearExtension(vec![5, 4, 2, 3, 1, 0]));
    let expected = Filling::from_integers(&[11, 9, 6, 7, 4, 3]);
    match rsk(&an, &t, Some(&order)) {
        Ok(s) => {
            tally.check(s == expected, || format!("image {s:?}"));
            let back = inverse_rsk(&an, &s, Some(&order));
            tally.check(back.as_ref() == Ok(&t), || format!("inverse {back:?}"));
        }
        Err(e) => tally.check(false, || e.to_string()),
    }
    let stable = rsk(&an, &t, None);
    tally.check(stable.as_ref() == Ok(&expected), || format!("stable-order image {stable:?}"));
    tally.finish(3, "worked RSK example", "labels=3,4,6,7,9,11".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_passes() {
        assert!(worked_example().passed);
    }

    #[test]
    fn unknown_criterion_fails() {
        let suite = Suite { seed: 1, entries: Vec::new() };
        assert!(!suite.criterion(11).passed);
    }

    #[test]
    fn square_orders_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let m = MatrixFilling::new(vec![vec![1; 4]; 4]).unwrap();
        for _ in 0..20 {
            assert!(toggle_rpp(&m, &random_square_order(4, &mut rng)).is_ok());
        }
    }
}
