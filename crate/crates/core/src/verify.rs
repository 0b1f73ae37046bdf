//! Exact checks of the hook length formulas and the two polytopes that
//! RSK maps onto each other.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::Analysis;
use crate::error::{domain, Result};
use crate::extensions::{collect_linear_extensions, count_linear_extensions_capped};
use crate::hooks::RationalPoint;
use crate::poset::LinearExtension;
use crate::rational::{factorial, random_positive, ratio, to_f64, Rational};
use crate::report::OracleReport;
use crate::rsk::{inverse_rsk, rsk, Filling};

/// The integers behind `e(P) * prod(hook lengths) == n!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProctorCheck {
    pub extensions: BigUint,
    pub hook_product: BigUint,
    pub factorial: BigUint,
    pub ok: bool,
}

pub fn verify_proctor(an: &Analysis) -> Result<ProctorCheck> {
    verify_proctor_capped(an, crate::extensions::DEFAULT_CAP)
}

pub fn verify_proctor_capped(an: &Analysis, cap: u64) -> Result<ProctorCheck> {
    let extensions = count_linear_extensions_capped(an.poset(), cap)?;
    let mut hook_product = BigUint::one();
    for h in an.hook_lengths() {
        if h <= 0 {
            return domain(format!("non-positive hook length {h}"));
        }
        hook_product *= BigUint::from(h as u64);
    }
    let factorial = factorial(an.len());
    let ok = &extensions * &hook_product == factorial;
    Ok(ProctorCheck { extensions, hook_product, factorial, ok })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEvaluation {
    pub extension: LinearExtension,
    pub value: Rational,
}

/// `weight(T) = prod_i 1 / (x_D(p_i) + ... + x_D(p_n))` for `T` listed top
/// first: each factor sums over the elements not yet listed, a lower set.
pub fn weight_eval(an: &Analysis, t: &LinearExtension, x: &RationalPoint) -> Result<WeightEvaluation> {
    if !t.is_valid(an.poset()) {
        return domain(format!("{:?} is not a linear extension", t.as_slice()));
    }
    if x.len() != an.diagonals().len() {
        return domain(format!("point has {} coordinates for {} diagonals", x.len(), an.diagonals().len()));
    }
    Ok(WeightEvaluation { extension: t.clone(), value: weight_unchecked(an, t, x) })
}

fn weight_unchecked(an: &Analysis, t: &LinearExtension, x: &RationalPoint) -> Rational {
    let mut suffix = Rational::zero();
    let mut denominator = Rational::one();
    for &p in t.as_slice().iter().rev() {
        suffix += &x[an.diagonal_of(p)];
        denominator *= &suffix;
    }
    denominator.recip()
}

/// `1 / prod_p H_p(x)`.
pub fn hook_product_inverse(an: &Analysis, x: &RationalPoint) -> Result<Rational> {
    let product = an
        .hook_polynomials(x)?
        .into_iter()
        .fold(Rational::one(), |acc, h| acc * h);
    Ok(product.recip())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointCheck {
    pub point: RationalPoint,
    pub weight_sum: Rational,
    pub hook_side: Rational,
}

impl PointCheck {
    pub fn ok(&self) -> bool {
        self.weight_sum == self.hook_side
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultivariateReport {
    pub extensions: usize,
    pub seed: u64,
    pub points: Vec<PointCheck>,
}

impl MultivariateReport {
    pub fn ok(&self) -> bool {
        self.points.iter().all(PointCheck::ok)
    }
}

pub fn random_point<R: Rng + ?Sized>(diagonals: usize, rng: &mut R) -> RationalPoint {
    RationalPoint::new((0..diagonals).map(|_| random_positive(rng)).collect())
        .expect("random_positive is positive")
}

/// Sums `weight(T)` over all linear extensions at `points` random positive
/// rational points and compares with `1 / prod_p H_p(x)`. Refuses with a
/// cap error when there are more than `cap` extensions.
pub fn verify_multivariate(an: &Analysis, points: usize, seed: u64, cap: u64) -> Result<MultivariateReport> {
    let extensions = collect_linear_extensions(an.poset(), cap)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::with_capacity(points);
    for _ in 0..points {
        let x = random_point(an.diagonals().len(), &mut rng);
        checks.push(check_point(an, &extensions, x)?);
    }
    Ok(MultivariateReport { extensions: extensions.len(), seed, points: checks })
}

/// The identity at one given point.
pub fn check_point(an: &Analysis, extensions: &[LinearExtension], x: RationalPoint) -> Result<PointCheck> {
    let hook_side = hook_product_inverse(an, &x)?;
    let weight_sum = extensions
        .iter()
        .fold(Rational::zero(), |acc, t| acc + weight_unchecked(an, t, &x));
    Ok(PointCheck { point: x, weight_sum, hook_side })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolytopeKind {
    /// `t >= 0`, `sum H_p(x) t_p <= 1`.
    Fillings,
    /// `s >= 0` order-reversing, `sum x_D(p) s_p <= 1`.
    Rpp,
}

impl std::str::FromStr for PolytopeKind {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fillings" => Ok(PolytopeKind::Fillings),
            "rpp" => Ok(PolytopeKind::Rpp),
            other => domain(format!("unknown polytope kind {other:?}; expected fillings or rpp")),
        }
    }
}

impl std::fmt::Display for PolytopeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PolytopeKind::Fillings => "fillings",
            PolytopeKind::Rpp => "rpp",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeSpec {
    pub kind: PolytopeKind,
    pub point: RationalPoint,
}

fn linear_form(an: &Analysis, kind: PolytopeKind, x: &RationalPoint, v: &Filling) -> Result<Rational> {
    let coefficients: Vec<Rational> = match kind {
        PolytopeKind::Fillings => an.hook_polynomials(x)?,
        PolytopeKind::Rpp => an.poset().elements().map(|p| x[an.diagonal_of(p)].clone()).collect(),
    };
    Ok(coefficients
        .iter()
        .zip(v.values())
        .fold(Rational::zero(), |acc, (c, t)| acc + c * t))
}

pub fn polytope_membership(an: &Analysis, spec: &PolytopeSpec, v: &Filling) -> Result<bool> {
    if v.len() != an.len() {
        return domain(format!("vector has {} entries for {} elements", v.len(), an.len()));
    }
    if !v.is_nonnegative() {
        return Ok(false);
    }
    if spec.kind == PolytopeKind::Rpp && !v.is_order_reversing(an.poset()) {
        return Ok(false);
    }
    Ok(linear_form(an, spec.kind, &spec.point, v)? <= Rational::one())
}

/// Draws points of the fillings simplex by rejection from the box with
/// sides `2 / (n H_p(x))`, maps them through RSK, and checks membership of
/// the image, the round trip, and `sum x_D(p) s_p == sum H_p(x) t_p`.
pub fn rsk_polytope_check(an: &Analysis, x: &RationalPoint, trials: usize, seed: u64) -> Result<OracleReport> {
    let n = an.len();
    let hooks = an.hook_polynomials(x)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = OracleReport::new();
    let fillings = PolytopeSpec { kind: PolytopeKind::Fillings, point: x.clone() };
    let rpp = PolytopeSpec { kind: PolytopeKind::Rpp, point: x.clone() };
    let order = crate::rsk::stable_insertion_order(an)?;
    let mut accepted = 0;
    while accepted < trials {
        let t = Filling::new(
            hooks
                .iter()
                .map(|h| {
                    let k: i64 = rng.random_range(0..=1024);
                    ratio(2 * k, 1024 * n as i64) / h
                })
                .collect(),
        );
        if !polytope_membership(an, &fillings, &t)? {
            continue;
        }
        accepted += 1;
        let s = rsk(an, &t, Some(&order))?;
        report.check("image-in-rpp", polytope_membership(an, &rpp, &s)?, || format!("t={t:?} s={s:?}"));
        let back = inverse_rsk(an, &s, Some(&order))?;
        report.check("round-trip", back == t, || format!("t={t:?} back={back:?}"));
        let lhs = linear_form(an, PolytopeKind::Rpp, x, &s)?;
        let rhs = linear_form(an, PolytopeKind::Fillings, x, &t)?;
        report.check("linear-forms", lhs == rhs, || format!("t={t:?}: {lhs} != {rhs}"));
    }
    Ok(report)
}

/// Exact volumes: `1 / (n! prod H_p(x))` for the fillings simplex, and
/// `(1/n!) sum_T weight(T)` for the RPP polytope, one simplex per linear
/// extension.
pub fn closed_form_volume(an: &Analysis, kind: PolytopeKind, x: &RationalPoint, cap: u64) -> Result<Rational> {
    let nf = Rational::from_integer(factorial(an.len()).into());
    match kind {
        PolytopeKind::Fillings => Ok(hook_product_inverse(an, x)? / nf),
        PolytopeKind::Rpp => {
            let total = collect_linear_extensions(an.poset(), cap)?
                .iter()
                .fold(Rational::zero(), |acc, t| acc + weight_unchecked(an, t, x));
            Ok(total / nf)
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VolumeEstimate {
    pub kind: PolytopeKind,
    pub samples: u64,
    pub hits: u64,
    pub box_volume: f64,
    pub estimate: f64,
    /// Binomial standard error of the estimate at the observed hit rate.
    pub std_error: f64,
    pub seed: u64,
}

impl VolumeEstimate {
    /// Standard error the estimate would have if the true volume were
    /// `volume`; usable even when no sample hit.
    pub fn std_error_at(&self, volume: f64) -> f64 {
        let p = (volume / self.box_volume).clamp(0.0, 1.0);
        self.box_volume * (p * (1.0 - p) / self.samples as f64).sqrt()
    }
}

/// Per-coordinate upper bounds of a box containing the polytope.
///
/// For fillings, `t_p <= 1 / H_p(x)`. For RPPs, every `q <= p` has
/// `s_q >= s_p`, so `s_p <= 1 / sum_{q <= p} x_D(q)`.
pub fn bounding_box(an: &Analysis, kind: PolytopeKind, x: &RationalPoint) -> Result<Vec<Rational>> {
    match kind {
        PolytopeKind::Fillings => Ok(an.hook_polynomials(x)?.into_iter().map(|h| h.recip()).collect()),
        PolytopeKind::Rpp => {
            let poset = an.poset();
            Ok(poset
                .elements()
                .map(|p| {
                    poset
                        .elements()
                        .filter(|&q| poset.leq(q, p))
                        .fold(Rational::zero(), |acc, q| acc + &x[an.diagonal_of(q)])
                        .recip()
                })
                .collect())
        }
    }
}

/// Hit-or-miss estimate of the polytope volume in floating point.
pub fn monte_carlo_volume(an: &Analysis, spec: &PolytopeSpec, samples: u64, seed: u64) -> Result<VolumeEstimate> {
    let n = an.len();
    let x = &spec.point;
    let bounds: Vec<f64> = bounding_box(an, spec.kind, x)?.iter().map(to_f64).collect();
    let coefficients: Vec<f64> = match spec.kind {
        PolytopeKind::Fillings => an.hook_polynomials(x)?.iter().map(to_f64).collect(),
        PolytopeKind::Rpp => an.poset().elements().map(|p| to_f64(&x[an.diagonal_of(p)])).collect(),
    };
    let covers = an.poset().cover_pairs();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v = vec![0.0f64; n];
    let mut hits = 0u64;
    for _ in 0..samples {
        for (slot, b) in v.iter_mut().zip(&bounds) {
            *slot = rng.random::<f64>() * b;
        }
        if spec.kind == PolytopeKind::Rpp && covers.iter().any(|&(a, b)| v[a] < v[b]) {
            continue;
        }
        let form: f64 = coefficients.iter().zip(&v).map(|(c, t)| c * t).sum();
        if form <= 1.0 {
            hits += 1;
        }
    }
    let box_volume: f64 = bounds.iter().product();
    let rate = hits as f64 / samples.max(1) as f64;
    Ok(VolumeEstimate {
        kind: spec.kind,
        samples,
        hits,
        box_volume,
        estimate: rate * box_volume,
        std_error: box_volume * (rate * (1.0 - rate) / samples.max(1) as f64).sqrt(),
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{d_k_one, named_example, young};
    use crate::poset::Poset;
    use crate::rational::int;

    fn d4() -> Analysis {
        Analysis::new(d_k_one(4).unwrap()).unwrap()
    }

    #[test]
    fn proctor_on_d4_and_chain() {
        let c = verify_proctor(&d4()).unwrap();
        assert_eq!(c.extensions, BigUint::from(2u32));
        assert_eq!(c.hook_product, BigUint::from(360u32));
        assert_eq!(c.factorial, BigUint::from(720u32));
        assert!(c.ok);
        let chain = verify_proctor(&Analysis::new(Poset::chain(5)).unwrap()).unwrap();
        assert_eq!(chain.extensions, BigUint::one());
        assert!(chain.ok);
    }

    #[test]
    fn weights_on_d4() {
        let an = d4();
        let ones = RationalPoint::ones(4);
        let t = LinearExtension(vec![5, 4, 2, 3, 1, 0]);
        assert_eq!(weight_eval(&an, &t, &ones).unwrap().value, ratio(1, 720));
        let exts = collect_linear_extensions(an.poset(), 10).unwrap();
        let pc = check_point(&an, &exts, ones).unwrap();
        assert_eq!(pc.weight_sum, ratio(1, 360));
        assert!(pc.ok());
        // Diagonals of 6,5,3,4,2,1 read top-down: D1 D2 D3 D4 D2 D1.
        let x = RationalPoint::new(vec![int(1), ratio(1, 2), ratio(1, 3), ratio(1, 4)]).unwrap();
        let by_hand = {
            let sums = [
                ratio(1, 1),
                ratio(3, 2),
                ratio(7, 4),
                ratio(25, 12),
                ratio(31, 12),
                ratio(43, 12),
            ];
            sums.iter().fold(Rational::one(), |a, s| a * s).recip()
        };
        assert_eq!(weight_eval(&an, &t, &x).unwrap().value, by_hand);
    }

    #[test]
    fn singleton_weight() {
        let an = Analysis::new(Poset::chain(1)).unwrap();
        let x = RationalPoint::new(vec![ratio(3, 7)]).unwrap();
        assert_eq!(weight_eval(&an, &LinearExtension(vec![0]), &x).unwrap().value, ratio(7, 3));
    }

    #[test]
    fn multivariate_on_examples() {
        for p in [named_example("ten-element").unwrap(), young(&[3, 2, 1]).unwrap(), d_k_one(5).unwrap()] {
            let an = Analysis::new(p).unwrap();
            let r = verify_multivariate(&an, 5, 9, 1000).unwrap();
            assert!(r.ok());
        }
        let an = Analysis::new(Poset::antichain(1)).unwrap();
        assert!(verify_multivariate(&an, 2, 1, 10).unwrap().ok());
    }

    #[test]
    fn multivariate_refuses_over_cap() {
        let an = Analysis::new(young(&[3, 3]).unwrap()).unwrap();
        assert!(verify_multivariate(&an, 1, 1, 3).is_err());
    }

    #[test]
    fn membership() {
        let an = d4();
        let x = RationalPoint::ones(4);
        let fill = PolytopeSpec { kind: PolytopeKind::Fillings, point: x.clone() };
        let rpp = PolytopeSpec { kind: PolytopeKind::Rpp, point: x.clone() };
        let zero = Filling::zeros(6);
        assert!(polytope_membership(&an, &fill, &zero).unwrap());
        assert!(polytope_membership(&an, &rpp, &zero).unwrap());
        let hooks = an.hook_polynomials(&x).unwrap();
        for p in 0..6 {
            let mut v = Filling::zeros(6);
            v[p] = hooks[p].recip();
            assert!(polytope_membership(&an, &fill, &v).unwrap());
            v[p] += ratio(1, 1000);
            assert!(!polytope_membership(&an, &fill, &v).unwrap());
        }
        // Vertex of the simplex of one extension: a constant vector on a
        // lower set of the extension.
        let v = Filling::new(vec![ratio(1, 6); 6]);
        assert!(polytope_membership(&an, &rpp, &v).unwrap());
        let not_rev = Filling::new(vec![int(0), int(0), int(0), int(0), int(0), ratio(1, 10)]);
        assert!(!polytope_membership(&an, &rpp, &not_rev).unwrap());
    }

    #[test]
    fn worked_example_linear_forms() {
        let an = d4();
        let x = RationalPoint::ones(4);
        let t = Filling::from_integers(&[2, 2, 3, 4, 2, 1]);
        let s = rsk(&an, &t, None).unwrap();
        assert_eq!(linear_form(&an, PolytopeKind::Rpp, &x, &s).unwrap(), int(40));
        assert_eq!(linear_form(&an, PolytopeKind::Fillings, &x, &t).unwrap(), int(40));
    }

    #[test]
    fn polytope_check_passes() {
        let an = Analysis::new(named_example("ten-element").unwrap()).unwrap();
        let x = RationalPoint::ones(an.diagonals().len());
        let r = rsk_polytope_check(&an, &x, 20, 5).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks, 60);
    }

    #[test]
    fn closed_forms() {
        let two = Analysis::new(Poset::chain(2)).unwrap();
        let x = RationalPoint::ones(2);
        assert_eq!(closed_form_volume(&two, PolytopeKind::Fillings, &x, 10).unwrap(), ratio(1, 4));
        let three = Analysis::new(Poset::chain(3)).unwrap();
        let x = RationalPoint::ones(3);
        assert_eq!(closed_form_volume(&three, PolytopeKind::Rpp, &x, 10).unwrap(), ratio(1, 36));
        let d3 = Analysis::new(d_k_one(3).unwrap()).unwrap();
        let x = RationalPoint::ones(d3.diagonals().len());
        assert_eq!(closed_form_volume(&d3, PolytopeKind::Fillings, &x, 10).unwrap(), ratio(1, 24 * 12));
        assert_eq!(closed_form_volume(&d3, PolytopeKind::Rpp, &x, 10).unwrap(), ratio(1, 24 * 12));
    }

    #[test]
    fn monte_carlo_near_closed_form() {
        let an = Analysis::new(d_k_one(3).unwrap()).unwrap();
        let x = RationalPoint::ones(an.diagonals().len());
        for kind in [PolytopeKind::Fillings, PolytopeKind::Rpp] {
            let spec = PolytopeSpec { kind, point: x.clone() };
            let est = monte_carlo_volume(&an, &spec, 200_000, 4).unwrap();
            let exact = to_f64(&closed_form_volume(&an, kind, &x, 10).unwrap());
            assert!((est.estimate - exact).abs() <= 4.0 * est.std_error_at(exact), "{est:?} vs {exact}");
        }
    }
}
