use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rational;

/// Polynomial in the single variable `a` (cohomological degree 2) with
/// rational coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyA {
    coeffs: BTreeMap<u32, Rational>,
}

impl PolyA {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The generator `a`.
    pub fn a() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (u32, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: u32) -> Rational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.values().next_back()
    }

    /// Iterates over `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn add_term(&mut self, exp: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by `a^k`.
    pub fn shift(&self, k: u32) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, x)| (e + k, x.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let mut last = self.degree().unwrap_or(0);
        // Horner over the sparse exponents.
        for (e, c) in self.coeffs.iter().rev() {
            for _ in *e..last {
                acc *= x;
            }
            acc += c;
            last = *e;
        }
        for _ in 0..last {
            acc *= x;
        }
        acc
    }

    /// True when every stored term has exponent `exp`.
    pub fn is_monomial_of_degree(&self, exp: u32) -> bool {
        self.coeffs.keys().all(|e| *e == exp)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &PolyA) -> (PolyA, PolyA) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading_coeff().unwrap().clone();
        let mut q = PolyA::zero();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let factor = r.leading_coeff().unwrap() / &lc;
            let t = PolyA::monomial(factor, rd - dd);
            r = &r - &(&t * divisor);
            q = &q + &t;
        }
        (q, r)
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &PolyA) -> PolyA {
        let (mut x, mut y) = (self.clone(), other.clone());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r;
        }
        match x.leading_coeff().cloned() {
            Some(lc) => x.scale(&lc.recip()),
            None => x,
        }
    }
}

impl fmt::Display for PolyA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs.iter().rev().map(|(e, c)| (c, monomial_name(&[("a", *e)]))),
        )
    }
}

/// Polynomial in `a` and `c` (both of degree 2) with rational coefficients.
/// Keys are `(exponent of a, exponent of c)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    coeffs: BTreeMap<(u32, u32), Rational>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0, 0)
    }

    pub fn a() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn c() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn monomial(coeff: Rational, a_exp: u32, c_exp: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert((a_exp, c_exp), coeff);
        }
        Self { coeffs }
    }

    /// Builds `sum_k coeffs[k](a) * c^k`.
    pub fn from_c_coefficients(coeffs: &[PolyA]) -> Self {
        let mut p = Self::zero();
        for (k, pa) in coeffs.iter().enumerate() {
            for (e, c) in pa.terms() {
                p.add_term(e, k as u32, c.clone());
            }
        }
        p
    }

    /// The linear form `c - s*a`.
    pub fn c_minus_a_times(s: &Rational) -> Self {
        &Self::c() - &Self::monomial(s.clone(), 1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, a_exp: u32, c_exp: u32) -> Rational {
        self.coeffs
            .get(&(a_exp, c_exp))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Iterates over `((a_exp, c_exp), coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn add_term(&mut self, a_exp: u32, c_exp: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (a_exp, c_exp);
        let entry = self.coeffs.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn degree_in_c(&self) -> Option<u32> {
        self.coeffs.keys().map(|(_, c)| *c).max()
    }

    /// Coefficient of `c^k`, as a polynomial in `a`.
    pub fn coeff_in_c(&self, k: u32) -> PolyA {
        PolyA::from_terms(
            self.coeffs
                .iter()
                .filter(|((_, ce), _)| *ce == k)
                .map(|((ae, _), x)| (*ae, x.clone())),
        )
    }

    /// Monic in `c`: the top `c`-coefficient is the constant 1.
    pub fn is_monic_in_c(&self) -> bool {
        match self.degree_in_c() {
            Some(d) => self.coeff_in_c(d) == PolyA::one(),
            None => false,
        }
    }

    /// Every monomial `a^i c^j` has `i + j == d` (so total degree `2d`).
    pub fn is_homogeneous_of_weight(&self, d: u32) -> bool {
        self.coeffs.keys().all(|(i, j)| i + j == d)
    }

    /// Substitutes a polynomial in `a` for `c`.
    pub fn substitute_c(&self, value: &PolyA) -> PolyA {
        let mut acc = PolyA::zero();
        let deg = self.degree_in_c().unwrap_or(0);
        for k in (0..=deg).rev() {
            acc = &(&acc * value) + &self.coeff_in_c(k);
        }
        acc
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Highest power of c first, then highest power of a.
        let mut keys: Vec<_> = self.coeffs.iter().collect();
        keys.sort_by(|((a1, c1), _), ((a2, c2), _)| c2.cmp(c1).then(a2.cmp(a1)));
        write_terms(
            f,
            keys.into_iter()
                .map(|((ae, ce), x)| (x, monomial_name(&[("a", *ae), ("c", *ce)]))),
        )
    }
}

fn monomial_name(parts: &[(&str, u32)]) -> String {
    parts
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (&'a Rational, String)>,
{
    let mut first = true;
    for (c, mono) in terms {
        let negative = c.is_negative();
        let abs = c.abs();
        if first {
            if negative {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if negative { " - " } else { " + " })?;
        }
        first = false;
        match (mono.is_empty(), abs.is_one()) {
            (true, _) => write!(f, "{abs}")?,
            (false, true) => write!(f, "{mono}")?,
            (false, false) => write!(f, "{abs}*{mono}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

macro_rules! ring_ops {
    ($t:ty, $key:ty, $mulkey:expr) => {
        impl Add for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                let mut out = self.clone();
                for (k, c) in rhs.coeffs.iter() {
                    let entry = out.coeffs.entry(*k).or_insert_with(Rational::zero);
                    *entry += c;
                    if entry.is_zero() {
                        out.coeffs.remove(k);
                    }
                }
                out
            }
        }

        impl Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                self + &(-rhs)
            }
        }

        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                let mut out = self.clone();
                for c in out.coeffs.values_mut() {
                    *c = -c.clone();
                }
                out
            }
        }

        impl Mul for &$t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                let mut out = <$t>::default();
                for (k1, c1) in self.coeffs.iter() {
                    for (k2, c2) in rhs.coeffs.iter() {
                        let key: $key = $mulkey(*k1, *k2);
                        let entry = out.coeffs.entry(key).or_insert_with(Rational::zero);
                        *entry += c1 * c2;
                    }
                }
                out.coeffs.retain(|_, c| !c.is_zero());
                out
            }
        }

        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }

        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }

        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }

        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

ring_ops!(PolyA, u32, |a: u32, b: u32| a + b);
ring_ops!(BivarPoly, (u32, u32), |a: (u32, u32), b: (u32, u32)| (
    a.0 + b.0,
    a.1 + b.1
));

impl From<&PolyA> for BivarPoly {
    fn from(p: &PolyA) -> Self {
        BivarPoly::from_c_coefficients(std::slice::from_ref(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::{int, rat};

    #[test]
    fn polya_arithmetic() {
        let a = PolyA::a();
        let p = &(&a * &a) - &PolyA::constant(int(1));
        let q = &a - &PolyA::one();
        let (quot, rem) = p.div_rem(&q);
        assert!(rem.is_zero());
        assert_eq!(quot, &a + &PolyA::one());
        assert_eq!(p.eval(&int(3)), int(8));
        assert_eq!(p.to_string(), "a^2 - 1");
    }

    #[test]
    fn polya_gcd_is_monic() {
        let a = PolyA::a();
        let p = (&a - &PolyA::one()).scale(&int(4));
        let q = &(&a - &PolyA::one()) * &(&a + &PolyA::constant(int(2)));
        assert_eq!(p.gcd(&q), &a - &PolyA::one());
        assert_eq!(PolyA::constant(rat(3, 2)).gcd(&a), PolyA::one());
    }

    #[test]
    fn bivar_display_and_substitution() {
        let p = &(&BivarPoly::c() * &BivarPoly::c()) - &(&BivarPoly::a() * &BivarPoly::c()).pow(1);
        assert_eq!(p.to_string(), "c^2 - a*c");
        // c := a gives a^2 - a^2 = 0
        assert!(p.substitute_c(&PolyA::a()).is_zero());
        assert!(p.is_monic_in_c());
        assert!(p.is_homogeneous_of_weight(2));
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let p = &PolyA::a() - &PolyA::a();
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        assert_eq!(p.to_string(), "0");
    }
}
