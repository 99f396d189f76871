use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

/// Laurent polynomial in one variable `t` with integer coefficients. Used as
/// the carrier for (truncated) Hilbert series.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentInT {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentInT {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coeff: i64, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exp: i64, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(exp).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, *c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Drops every term with exponent above `max_exp`.
    pub fn truncate(&self, max_exp: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .range(..=max_exp)
                .map(|(e, c)| (*e, *c))
                .collect(),
        }
    }

    /// Power series expansion of `1 / (1 - t^step)` through exponent `max_exp`.
    pub fn geometric(step: i64, max_exp: i64) -> Self {
        assert!(step > 0);
        let mut p = Self::zero();
        let mut e = 0;
        while e <= max_exp {
            p.add_term(e, 1);
            e += step;
        }
        p
    }
}

impl Add for &LaurentInT {
    type Output = LaurentInT;
    fn add(self, rhs: &LaurentInT) -> LaurentInT {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentInT {
    type Output = LaurentInT;
    fn sub(self, rhs: &LaurentInT) -> LaurentInT {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentInT {
    type Output = LaurentInT;
    fn mul(self, rhs: &LaurentInT) -> LaurentInT {
        let mut out = LaurentInT::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

/// Laurent polynomial in two variables `t` and `z` with integer
/// coefficients, keyed by `(t exponent, z exponent)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentTZ {
    coeffs: BTreeMap<(i64, i64), i64>,
}

impl LaurentTZ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: i64, t_exp: i64, z_exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(t_exp, z_exp, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, t_exp: i64, z_exp: i64) -> i64 {
        self.coeffs.get(&(t_exp, z_exp)).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, t_exp: i64, z_exp: i64, c: i64) {
        if c == 0 {
            return;
        }
        let key = (t_exp, z_exp);
        let e = self.coeffs.entry(key).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&key);
        }
    }

    /// Iterates over `((t_exp, z_exp), coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), i64)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, *c))
    }

    /// Value at `t = z = 1`.
    pub fn total(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// Applies `(t, z) -> (f(t, z))` to every exponent pair.
    pub fn map_exponents<F: Fn(i64, i64) -> (i64, i64)>(&self, f: F) -> Self {
        let mut out = Self::zero();
        for ((t, z), c) in self.terms() {
            let (t2, z2) = f(t, z);
            out.add_term(t2, z2, c);
        }
        out
    }
}

impl Add for &LaurentTZ {
    type Output = LaurentTZ;
    fn add(self, rhs: &LaurentTZ) -> LaurentTZ {
        let mut out = self.clone();
        for ((t, z), c) in rhs.terms() {
            out.add_term(t, z, c);
        }
        out
    }
}

impl Sub for &LaurentTZ {
    type Output = LaurentTZ;
    fn sub(self, rhs: &LaurentTZ) -> LaurentTZ {
        let mut out = self.clone();
        for ((t, z), c) in rhs.terms() {
            out.add_term(t, z, -c);
        }
        out
    }
}

impl Mul for &LaurentTZ {
    type Output = LaurentTZ;
    fn mul(self, rhs: &LaurentTZ) -> LaurentTZ {
        let mut out = LaurentTZ::zero();
        for ((t1, z1), c1) in self.terms() {
            for ((t2, z2), c2) in rhs.terms() {
                out.add_term(t1 + t2, z1 + z2, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series_times_denominator_is_one() {
        let g = LaurentInT::geometric(2, 20);
        let den = &LaurentInT::monomial(1, 0) - &LaurentInT::monomial(1, 2);
        let prod = (&g * &den).truncate(20);
        assert_eq!(prod, LaurentInT::monomial(1, 0));
    }

    #[test]
    fn two_variable_product() {
        // (t + 1/t) z squared
        let v = &LaurentTZ::monomial(1, 1, 1) + &LaurentTZ::monomial(1, -1, 1);
        let sq = &v * &v;
        assert_eq!(sq.coeff(0, 2), 2);
        assert_eq!(sq.coeff(2, 2), 1);
        assert_eq!(sq.total(), 4);
    }
}
