//! Dense univariate polynomials with exact integer coefficients.

use std::fmt;

use crate::scalar::{checked_add, checked_mul, ExactInt};

/// `Σ c_k t^k`, coefficients stored ascending with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: ExactInt> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// Ascending coefficients `c_0, c_1, ...`.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Horner evaluation with overflow checks.
    pub fn eval(&self, t: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| checked_add(&checked_mul(&acc, t), c))
    }

    /// Quotient by `(t - root)` when the division is exact.
    pub fn div_linear(&self, root: &T) -> Option<Polynomial<T>> {
        let d = self.degree()?;
        if d == 0 {
            return None;
        }
        let mut quotient = vec![T::zero(); d];
        let mut carry = T::zero();
        for k in (1..=d).rev() {
            carry = checked_add(&checked_mul(&carry, root), &self.coeffs[k]);
            quotient[k - 1] = carry.clone();
        }
        let rem = checked_add(&checked_mul(&carry, root), &self.coeffs[0]);
        rem.is_zero().then(|| Polynomial::new(quotient))
    }

    /// Repeatedly splits off `(t - r)` for integer roots `r` found by
    /// rational-root testing.
    pub fn factor_report(&self) -> FactorReport<T> {
        let mut rest = self.clone();
        let mut roots: Vec<(T, usize)> = Vec::new();
        'search: while rest.degree().is_some_and(|d| d >= 1) {
            for r in rest.integer_root_candidates() {
                if let Some(q) = rest.div_linear(&r) {
                    match roots.iter_mut().find(|(x, _)| *x == r) {
                        Some((_, m)) => *m += 1,
                        None => roots.push((r, 1)),
                    }
                    rest = q;
                    continue 'search;
                }
            }
            break;
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        let linear_only = !rest.is_zero() && rest.degree() == Some(0);
        FactorReport { roots, remainder: rest, linear_only }
    }

    /// Divisors `±d` of the lowest nonzero coefficient, plus 0 when the
    /// constant term vanishes.
    fn integer_root_candidates(&self) -> Vec<T> {
        if self.coeffs.is_empty() {
            return Vec::new();
        }
        if self.coeffs[0].is_zero() {
            return vec![T::zero()];
        }
        let target = self.coeffs[0].abs();
        let mut small = Vec::new();
        let mut large = Vec::new();
        let mut d = T::one();
        while checked_mul(&d, &d) <= target {
            if target.is_multiple_of(&d) {
                let other = target.clone() / d.clone();
                if other != d {
                    large.push(other);
                }
                small.push(d.clone());
            }
            d = d + T::one();
        }
        small
            .into_iter()
            .chain(large.into_iter().rev())
            .flat_map(|d| [d.clone(), -d])
            .collect()
    }
}

impl<T: ExactInt> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Integer linear factors of a polynomial and what is left over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorReport<T> {
    /// `(root, multiplicity)`, ascending by root.
    pub roots: Vec<(T, usize)>,
    /// Cofactor after removing every `(t - root)`.
    pub remainder: Polynomial<T>,
    /// True when the remainder is a nonzero constant.
    pub linear_only: bool,
}

impl<T: ExactInt> fmt::Display for FactorReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.remainder.is_zero() {
            return f.write_str("0");
        }
        let rem_is_one = self.remainder.degree() == Some(0) && self.remainder.coeff(0).is_one();
        if self.roots.is_empty() || !rem_is_one && self.remainder.degree() == Some(0) {
            if self.remainder.degree() == Some(0) {
                write!(f, "{}", self.remainder)?;
            } else {
                write!(f, "({})", self.remainder)?;
            }
        }
        for (r, m) in &self.roots {
            if r.is_zero() {
                f.write_str("t")?;
            } else if r.is_negative() {
                write!(f, "(t+{})", r.abs())?;
            } else {
                write!(f, "(t-{r})")?;
            }
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        if !self.roots.is_empty() && self.remainder.degree().is_some_and(|d| d > 0) {
            write!(f, "({})", self.remainder)?;
        }
        Ok(())
    }
}
