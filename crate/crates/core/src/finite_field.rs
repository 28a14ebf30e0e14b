//! Point counts of the complement of `J_n` over `F_q`, and interpolation of
//! the characteristic polynomial through them.
//!
//! A point survives when no coordinate is 0 or 1 and no pair sums to 1 mod
//! `q`. The box is restricted to `{2, ..., q-1}^n` up front, so the inner
//! test only looks at pair sums.

use num_rational::Ratio;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::{from_i64, ExactInt};

/// Upper bound on `q^n` for brute-force counting.
pub const POINT_BUDGET: u64 = 100_000_000;

pub const DEFAULT_PRIMES: [u64; 6] = [5, 7, 11, 13, 17, 19];

/// [`DEFAULT_PRIMES`] within budget for dimension `n`, with 3 added in
/// front when fewer than `n + 1` remain (n = 6 needs seven primes and
/// 23^6 is over budget).
pub fn default_primes(n: usize) -> Vec<u64> {
    let mut primes: Vec<u64> = DEFAULT_PRIMES.iter().copied().filter(|&q| check_modulus(n, q).is_ok()).collect();
    if primes.len() < n + 1 {
        primes.insert(0, 3);
    }
    primes
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointCount {
    pub q: u64,
    pub n: usize,
    pub count: u64,
}

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_modulus(n: usize, q: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if q < 3 {
        return Err(Error::ModulusTooSmall(q));
    }
    let within = u32::try_from(n)
        .ok()
        .and_then(|e| q.checked_pow(e))
        .is_some_and(|size| size <= POINT_BUDGET);
    if !within {
        return Err(Error::BudgetExceeded { q, n, budget: POINT_BUDGET });
    }
    Ok(())
}

/// Number of points of `F_q^n` on no wall of `J_n`. Work is split over the
/// first coordinate.
pub fn count_points(n: usize, q: u64) -> Result<PointCount> {
    check_modulus(n, q)?;
    let count = (2..q)
        .into_par_iter()
        .map(|first| {
            let mut coords = Vec::with_capacity(n);
            coords.push(first);
            extend(&mut coords, n, q)
        })
        .sum();
    Ok(PointCount { q, n, count })
}

fn extend(coords: &mut Vec<u64>, n: usize, q: u64) -> u64 {
    if coords.len() == n {
        return 1;
    }
    let mut total = 0;
    for v in 2..q {
        // v + c ≡ 1 (mod q) with v, c in [2, q-1] means v + c == q + 1
        if coords.iter().all(|&c| c + v != q + 1) {
            coords.push(v);
            total += extend(coords, n, q);
            coords.pop();
        }
    }
    total
}

/// Point counts for several primes.
pub fn count_points_for(n: usize, primes: &[u64]) -> Result<Vec<PointCount>> {
    primes.iter().map(|&q| count_points(n, q)).collect()
}

/// The unique polynomial of degree at most `n` through the first `n + 1`
/// `(q, count)` pairs, by exact Lagrange interpolation. Any further pairs
/// must lie on it.
pub fn interpolate_chi<T: ExactInt>(n: usize, counts: &[PointCount]) -> Result<Polynomial<T>> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if let Some(bad) = counts.iter().find(|c| c.n != n) {
        return Err(Error::DimensionMismatch { expected: n, found: bad.n });
    }
    for (i, a) in counts.iter().enumerate() {
        if counts[..i].iter().any(|b| b.q == a.q) {
            return Err(Error::DuplicateNode(a.q));
        }
    }
    if counts.len() < n + 1 {
        return Err(Error::InsufficientPoints { n, needed: n + 1, got: counts.len() });
    }
    let (nodes, extra) = counts.split_at(n + 1);
    let to_t = |v: u64| -> T { from_i64(i64::try_from(v).expect("point data fits in i64")) };
    let xs: Vec<T> = nodes.iter().map(|c| to_t(c.q)).collect();
    let ys: Vec<T> = nodes.iter().map(|c| to_t(c.count)).collect();

    let mut acc: Vec<Ratio<T>> = vec![Ratio::zero(); n + 1];
    for (i, (xi, yi)) in xs.iter().zip(&ys).enumerate() {
        // basis_i(t) = Π_{j≠i} (t - x_j) / (x_i - x_j)
        let mut basis: Vec<Ratio<T>> = vec![Ratio::one()];
        let mut denom = T::one();
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![Ratio::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] = next[k + 1].clone() + b.clone();
                next[k] = next[k].clone() - b.clone() * Ratio::from_integer(xj.clone());
            }
            basis = next;
            denom = denom * (xi.clone() - xj.clone());
        }
        let scale = Ratio::new(yi.clone(), denom);
        for (a, b) in acc.iter_mut().zip(basis) {
            *a = a.clone() + b * scale.clone();
        }
    }

    let coeffs = acc
        .into_iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::NonIntegerCoefficients(c.to_string()))
            }
        })
        .collect::<Result<Vec<T>>>()?;
    let poly = Polynomial::new(coeffs);
    for c in extra {
        if poly.eval(&to_t(c.q)) != to_t(c.count) {
            return Err(Error::InconsistentPoint { q: c.q });
        }
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(n: usize, primes: &[u64]) -> Vec<PointCount> {
        count_points_for(n, primes).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_points(2, 5).unwrap().count, 6);
        assert_eq!(count_points(3, 5).unwrap().count, 8);
        assert_eq!(count_points(1, 7).unwrap().count, 5);
    }

    #[test]
    fn count_bounded_by_box() {
        for n in 1..=4 {
            for q in [3, 5, 7] {
                assert!(count_points(n, q).unwrap().count <= (q - 2).pow(n as u32));
            }
        }
    }

    #[test]
    fn default_primes_cover_every_supported_dimension() {
        assert_eq!(default_primes(2), DEFAULT_PRIMES.to_vec());
        assert_eq!(default_primes(5), DEFAULT_PRIMES.to_vec());
        assert_eq!(default_primes(6), vec![3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn modulus_errors() {
        assert_eq!(count_points(2, 9), Err(Error::NotPrime(9)));
        assert_eq!(count_points(2, 1), Err(Error::NotPrime(1)));
        assert_eq!(count_points(2, 2), Err(Error::ModulusTooSmall(2)));
        assert!(matches!(count_points(9, 17), Err(Error::BudgetExceeded { .. })));
        assert_eq!(count_points(0, 5), Err(Error::ZeroDimension));
    }

    #[test]
    fn interpolates_small_polynomials() {
        let p: Polynomial<i64> = interpolate_chi(2, &counts(2, &[5, 7, 11])).unwrap();
        assert_eq!(p.coeffs(), &[6, -5, 1]);
        let p: Polynomial<i64> = interpolate_chi(3, &counts(3, &[5, 7, 11, 13])).unwrap();
        assert_eq!(p.coeffs(), &[-27, 27, -9, 1]);
    }

    #[test]
    fn extra_points_are_checked() {
        let mut c = counts(2, &[5, 7, 11, 13]);
        assert!(interpolate_chi::<i64>(2, &c).is_ok());
        c[3].count += 1;
        assert_eq!(interpolate_chi::<i64>(2, &c), Err(Error::InconsistentPoint { q: 13 }));
    }

    #[test]
    fn interpolation_errors() {
        let c = counts(2, &[5, 7]);
        assert_eq!(
            interpolate_chi::<i64>(2, &c),
            Err(Error::InsufficientPoints { n: 2, needed: 3, got: 2 })
        );
        let dup = [c[0], c[1], c[0]];
        assert_eq!(interpolate_chi::<i64>(2, &dup), Err(Error::DuplicateNode(5)));
        let wrong_dim = counts(3, &[5, 7, 11]);
        assert!(matches!(interpolate_chi::<i64>(2, &wrong_dim), Err(Error::DimensionMismatch { .. })));
        // values on a non-integer polynomial: t(t-1)/2 at 3, 5, 7
        let fake = [
            PointCount { q: 3, n: 2, count: 3 },
            PointCount { q: 5, n: 2, count: 10 },
            PointCount { q: 7, n: 2, count: 21 },
        ];
        assert!(matches!(interpolate_chi::<i64>(2, &fake), Err(Error::NonIntegerCoefficients(_))));
    }

    #[test]
    fn interpolation_over_bigint() {
        use num_bigint::BigInt;
        let p: Polynomial<BigInt> = interpolate_chi(2, &counts(2, &[5, 7, 11])).unwrap();
        assert_eq!(p.coeffs(), &[BigInt::from(6), BigInt::from(-5), BigInt::from(1)]);
    }
}
