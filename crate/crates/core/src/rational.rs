//! Exact rational helpers shared by the filling, point and report formats.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{domain, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Formats `r` as `p/q` in lowest terms with a positive denominator, always
/// including the denominator.
pub fn format_rational(r: &Rational) -> String {
    // BigRational keeps itself reduced with a positive denominator.
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = match num.parse() {
        Ok(v) => v,
        Err(_) => return domain(format!("invalid rational numerator in {s:?}")),
    };
    let den: BigInt = match den.parse() {
        Ok(v) => v,
        Err(_) => return domain(format!("invalid rational denominator in {s:?}")),
    };
    if den.is_zero() {
        return domain(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(num, den))
}

/// A random rational `a/b` with `a, b` drawn uniformly from `1..=16`.
pub fn random_positive<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let a: i64 = rng.random_range(1..=16);
    let b: i64 = rng.random_range(1..=16);
    ratio(a, b)
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}

pub fn factorial(n: usize) -> num_bigint::BigUint {
    (1..=n).fold(num_bigint::BigUint::one(), |acc, k| acc * k)
}

/// Determinant of a square matrix by fraction-exact Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            for c in col..n {
                let delta = &f * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_always_has_denominator() {
        assert_eq!(format_rational(&int(3)), "3/1");
        assert_eq!(format_rational(&ratio(6, -4)), "-3/2");
        assert_eq!(format_rational(&int(0)), "0/1");
    }

    #[test]
    fn parse_accepts_integers_and_fractions() {
        assert_eq!(parse_rational("4/6").unwrap(), ratio(2, 3));
        assert_eq!(parse_rational(" -7 ").unwrap(), int(-7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x/2").is_err());
    }

    #[test]
    fn determinant_of_small_matrices() {
        let m = vec![vec![int(2), int(1)], vec![int(1), int(1)]];
        assert_eq!(determinant(m), int(1));
        let swap = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(determinant(swap), int(-1));
        let singular = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(determinant(singular), int(0));
    }
}
