//! Stalks of the convolution `F^0_! * IC^lam` at level `k`.
//!
//! A point of `Y_lam` lies over the orbit label `(m, l)` exactly when the
//! lattice inequalities `n + m >= n2`, `-m >= n2` hold and
//! `z^{-m} (z^{n+l} - a z^{-k}) ∈ z^{n2} O` for the unit `a = sum a_i z^i`.
//! The stalk is a single shifted point when these conditions pin `a` down,
//! and vanishes when they fail or leave `a_{k-1}` free (the character then
//! integrates to zero along that coordinate).
//!
//! Over a finite field the same statement becomes a character sum over the
//! solution set, which is evaluated exactly in a cyclotomic ring.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exact_math::{int, solve_affine, AffineSolution, Rational, SparseMatrix};
use crate::orbit_combinatorics::DominantGL2Coweight;
use crate::{Error, Result};

/// A unit `a_0 + a_1 z + ... + a_{k-1} z^{k-1}` of `F[z] / z^k`, with
/// coefficients reduced modulo a prime `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedUnit {
    coeffs: Vec<u64>,
    q: u64,
}

impl TruncatedUnit {
    pub fn new(coeffs: Vec<u64>, q: u64) -> Option<Self> {
        let coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % q).collect();
        (!coeffs.is_empty() && coeffs[0] != 0).then_some(Self { coeffs, q })
    }

    pub fn k(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!((self.q, self.k()), (other.q, other.k()));
        let k = self.k();
        let mut out = vec![0u64; k];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in other.coeffs.iter().enumerate().take(k - i) {
                out[i + j] = (out[i + j] + x * y) % self.q;
            }
        }
        Self {
            coeffs: out,
            q: self.q,
        }
    }

    /// Every unit of `F_q[z] / z^k`, in lexicographic order of coefficients.
    pub fn enumerate(q: u64, k: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut digits = vec![0u64; k];
        loop {
            if digits[0] != 0 {
                out.push(Self {
                    coeffs: digits.clone(),
                    q,
                });
            }
            // Increment the base-q counter from the last digit.
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < q {
                    break;
                }
                digits[i] = 0;
            }
        }
    }
}

/// An affine constraint `sum coeff * a_i = rhs` with integer data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineConstraint {
    pub terms: Vec<(usize, i64)>,
    pub rhs: i64,
    /// The Laurent exponent this constraint comes from.
    pub exponent: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StalkConditionSystem {
    pub k: usize,
    pub lam: DominantGL2Coweight,
    pub m: i64,
    pub l: i64,
    /// `n + m >= n2`.
    pub lower_lattice_ok: bool,
    /// `-m >= n2`.
    pub upper_lattice_ok: bool,
    pub constraints: Vec<AffineConstraint>,
    /// `constrained[i]` iff some constraint involves `a_i`.
    pub constrained: Vec<bool>,
}

impl StalkConditionSystem {
    pub fn lattice_ok(&self) -> bool {
        self.lower_lattice_ok && self.upper_lattice_ok
    }

    /// Whether `a` (with coefficients mod `q`) satisfies every constraint.
    pub fn satisfied_mod(&self, a: &[u64], q: u64) -> bool {
        let q = q as i64;
        self.constraints.iter().all(|c| {
            let lhs: i64 = c.terms.iter().map(|(i, x)| x * a[*i] as i64).sum();
            (lhs - c.rhs).rem_euclid(q) == 0
        })
    }

    /// Solves the constraints over the rationals in the unknowns
    /// `a_0, ..., a_{k-1}`.
    pub fn solve_rational(&self) -> AffineSolution {
        let mut a = SparseMatrix::new(self.k);
        let mut b = Vec::new();
        for c in &self.constraints {
            a.push_row(c.terms.iter().map(|(i, x)| (*i, int(*x))));
            b.push(int(c.rhs));
        }
        solve_affine(&a, &b)
    }
}

/// Builds the membership conditions for level `k`, coweight `lam` and
/// orbit label `(m, l)`.
///
/// The coefficient of `z^j` in `z^{n+l-m} - sum_i a_i z^{i-k-m}` must vanish
/// for every `j < n2`. Only exponents `j` in `[-k-m, n2)` involve the `a_i`;
/// when that window is empty the `a_i` are unconstrained. A constraint with
/// no terms and `rhs = 1` means the condition cannot hold.
pub fn build_conditions(
    k: usize,
    lam: DominantGL2Coweight,
    m: i64,
    l: i64,
) -> Result<StalkConditionSystem> {
    if k == 0 {
        return Err(Error::InvalidLevel(0));
    }
    let ki = k as i64;
    let (n, n2) = (lam.n(), lam.n2());
    let e0 = n + l - m;
    let mut constraints = Vec::new();
    let mut constrained = vec![false; k];
    let lo = (-ki - m).min(e0);
    for j in lo..n2 {
        let i = j + ki + m;
        let mut terms = Vec::new();
        if (0..ki).contains(&i) {
            terms.push((i as usize, 1));
            constrained[i as usize] = true;
        }
        let rhs = i64::from(j == e0);
        if terms.is_empty() && rhs == 0 {
            continue;
        }
        constraints.push(AffineConstraint {
            terms,
            rhs,
            exponent: j,
        });
    }
    Ok(StalkConditionSystem {
        k,
        lam,
        m,
        l,
        lower_lattice_ok: n + m >= n2,
        upper_lattice_ok: -m >= n2,
        constraints,
        constrained,
    })
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroReason {
    /// The point conditions have no solution with `a` a unit: a lattice
    /// inequality fails, or the membership condition is inconsistent or
    /// forces `a_0 = 0`.
    LatticeFailure,
    /// Solutions exist but `a_{k-1}` is unconstrained.
    FreeTopCoefficient,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StalkResult {
    Zero { reason: ZeroReason },
    /// One-dimensional, in cohomological degree `-shift`.
    Point { shift: i64 },
}

impl StalkResult {
    pub fn is_point(&self) -> bool {
        matches!(self, StalkResult::Point { .. })
    }
}

/// Whether the rational solution set contains a point with `a_0 != 0`.
fn admits_unit(sol: &AffineSolution) -> bool {
    match sol {
        AffineSolution::Inconsistent => false,
        AffineSolution::Solutions {
            particular,
            homogeneous,
        } => !particular[0].is_zero() || homogeneous.iter().any(|v| !v[0].is_zero()),
    }
}

/// Classifies the stalk at `(m, l)`.
pub fn classify_stalk(
    k: usize,
    lam: DominantGL2Coweight,
    m: i64,
    l: i64,
) -> Result<StalkResult> {
    let sys = build_conditions(k, lam, m, l)?;
    let zero = |reason| Ok(StalkResult::Zero { reason });
    if !sys.lattice_ok() {
        return zero(ZeroReason::LatticeFailure);
    }
    let sol = sys.solve_rational();
    if !admits_unit(&sol) {
        return zero(ZeroReason::LatticeFailure);
    }
    if !sys.constrained[k - 1] {
        return zero(ZeroReason::FreeTopCoefficient);
    }
    Ok(StalkResult::Point {
        shift: k as i64 + lam.orbit_dim(),
    })
}

/// The unique rational solution of the point conditions, when there is one.
pub fn unique_rational_solution(
    k: usize,
    lam: DominantGL2Coweight,
    m: i64,
    l: i64,
) -> Result<Option<Vec<Rational>>> {
    let sys = build_conditions(k, lam, m, l)?;
    Ok(sys.solve_rational().unique().map(|v| v.to_vec()))
}

/// Element of `Z[zeta_N]`, stored as its remainder modulo the cyclotomic
/// polynomial `Phi_N` (coefficients of `1, x, ..., x^{phi(N)-1}`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicValue {
    pub order: u64,
    pub coeffs: Vec<i64>,
}

impl CyclotomicValue {
    /// `sum_e counts[e] zeta_N^e`.
    pub fn from_exponent_counts(counts: &[i64]) -> Self {
        let order = counts.len() as u64;
        let phi = cyclotomic_polynomial(order);
        let mut rem = counts.to_vec();
        reduce_mod_monic(&mut rem, &phi);
        while rem.last() == Some(&0) {
            rem.pop();
        }
        Self { order, coeffs: rem }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }
}

/// Coefficients (low to high) of `Phi_n`, from `x^n - 1 = prod_{d | n} Phi_d`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    assert!(n >= 1);
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = exact_div(&p, &cyclotomic_polynomial(d));
    }
    p
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, x) in den.iter().enumerate() {
            rem[i + j] -= c * x;
        }
    }
    debug_assert!(rem.iter().all(|x| *x == 0), "division was not exact");
    quot
}

/// Reduces `p` modulo the monic polynomial `m` in place.
fn reduce_mod_monic(p: &mut Vec<i64>, m: &[i64]) {
    let dm = m.len() - 1;
    while p.len() > dm {
        let c = p.pop().expect("nonempty");
        let top = p.len();
        for (j, x) in m[..dm].iter().enumerate() {
            p[top - dm + j] -= c * x;
        }
    }
}

pub fn is_prime(q: u64) -> bool {
    q >= 2 && (2..q).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

fn pow_mod(mut b: u64, mut e: u64, q: u64) -> u64 {
    let mut acc = 1 % q;
    b %= q;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % q;
        }
        b = b * b % q;
        e >>= 1;
    }
    acc
}

/// A character of `(F_q[z] / z^k)^x` of conductor exactly `k`, with values
/// recorded as exponents of `zeta_N`.
///
/// `psi(a) = zeta_{q-1}^{log_g a_0} * zeta_q^{L}`, where `g` generates
/// `F_q^x` and `L` is the `z^{k-1}` coefficient of `log(a / a_0)`. The
/// truncated logarithm needs `1, ..., k-1` invertible mod `q`, so `k <= q`.
#[derive(Clone, Debug)]
pub struct ConductorCharacter {
    q: u64,
    k: usize,
    order: u64,
    dlog: Vec<u64>,
}

impl ConductorCharacter {
    pub fn new(q: u64, k: usize) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if k == 0 {
            return Err(Error::InvalidLevel(0));
        }
        if k == 1 && q == 2 {
            return Err(Error::NoConductorCharacter {
                q,
                k: 1,
                reason: "F_2^x is trivial".into(),
            });
        }
        if k as u64 > q {
            return Err(Error::NoConductorCharacter {
                q,
                k: k as u32,
                reason: "truncated logarithm needs k <= q".into(),
            });
        }
        let g = (1..q)
            .find(|g| (1..q - 1).all(|e| pow_mod(*g, e, q) != 1))
            .expect("F_q^x is cyclic");
        let mut dlog = vec![0u64; q as usize];
        let mut x = 1u64;
        for e in 0..q - 1 {
            dlog[x as usize] = e;
            x = x * g % q;
        }
        let order = if k == 1 { q - 1 } else { q * (q - 1) };
        Ok(Self { q, k, order, dlog })
    }

    /// `N` such that every value is an `N`-th root of unity.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// The exponent `e` with `psi(a) = zeta_N^e`.
    pub fn exponent(&self, a: &TruncatedUnit) -> u64 {
        assert_eq!((a.q, a.k()), (self.q, self.k));
        let q = self.q;
        let tame = self.dlog[a.coeffs[0] as usize];
        if self.k == 1 {
            return tame;
        }
        // u = a / a_0 - 1 has zero constant term.
        let inv0 = pow_mod(a.coeffs[0], q - 2, q);
        let mut u: Vec<u64> = a.coeffs.iter().map(|c| c * inv0 % q).collect();
        u[0] = 0;
        let top = self.k - 1;
        // Coefficient of z^{k-1} in sum_r (-1)^{r+1} u^r / r.
        let mut power = u.clone();
        let mut wild = 0u64;
        for r in 1..=top as u64 {
            let inv_r = pow_mod(r, q - 2, q);
            let term = power[top] * inv_r % q;
            wild = if r % 2 == 1 {
                (wild + term) % q
            } else {
                (wild + q - term) % q
            };
            power = truncated_mul(&power, &u, q);
        }
        (tame * q + wild * (q - 1)) % self.order
    }
}

fn truncated_mul(x: &[u64], y: &[u64], q: u64) -> Vec<u64> {
    let k = x.len();
    let mut out = vec![0u64; k];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate().take(k - i) {
            out[i + j] = (out[i + j] + a * b) % q;
        }
    }
    out
}

const ENUMERATION_LIMIT: u64 = 1_000_000;

/// A character table for one `(q, k)`, reusable across many stalks.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    q: u64,
    k: usize,
    character: ConductorCharacter,
    units: Vec<(TruncatedUnit, u64)>,
}

impl CharacterTable {
    pub fn new(q: u64, k: usize) -> Result<Self> {
        let character = ConductorCharacter::new(q, k)?;
        let size = (q as u128).pow(k as u32);
        if size > ENUMERATION_LIMIT as u128 {
            return Err(Error::EnumerationTooLarge { q, k: k as u32 });
        }
        let units = TruncatedUnit::enumerate(q, k)
            .into_iter()
            .map(|a| {
                let e = character.exponent(&a);
                (a, e)
            })
            .collect();
        Ok(Self {
            q,
            k,
            character,
            units,
        })
    }

    pub fn character(&self) -> &ConductorCharacter {
        &self.character
    }

    pub fn units(&self) -> impl Iterator<Item = (&TruncatedUnit, u64)> {
        self.units.iter().map(|(a, e)| (a, *e))
    }

    /// Sum of `psi(a)` over units satisfying the point conditions.
    pub fn stalk_sum(&self, lam: DominantGL2Coweight, m: i64, l: i64) -> Result<CyclotomicValue> {
        let sys = build_conditions(self.k, lam, m, l)?;
        let mut counts = vec![0i64; self.character.order as usize];
        if sys.lattice_ok() {
            for (a, e) in &self.units {
                if sys.satisfied_mod(&a.coeffs, self.q) {
                    counts[*e as usize] += 1;
                }
            }
        }
        Ok(CyclotomicValue::from_exponent_counts(&counts))
    }
}

/// Brute-force finite-field evaluation of the stalk.
pub fn character_sum_oracle(
    k: usize,
    lam: DominantGL2Coweight,
    m: i64,
    l: i64,
    q: u64,
) -> Result<CyclotomicValue> {
    CharacterTable::new(q, k)?.stalk_sum(lam, m, l)
}

/// Outcome of a stalk sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StalkSweepReport {
    pub cases_checked: usize,
    pub points: usize,
    pub failures: Vec<String>,
}

impl StalkSweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Dominant coweights with `|n2| <= n2_bound` and `0 <= n1 - n2 <= spread`.
pub fn sweep_coweights(n2_bound: i64, spread: i64) -> Vec<DominantGL2Coweight> {
    let mut out = Vec::new();
    for n2 in -n2_bound..=n2_bound {
        for d in 0..=spread {
            out.push(DominantGL2Coweight::new(n2 + d, n2).expect("dominant"));
        }
    }
    out
}

/// Valid orbit labels within `radius` of `(m0, l0)` in both coordinates.
pub fn label_window(m0: i64, l0: i64, radius: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for m in m0 - radius..=m0 + radius {
        for l in l0 - radius..=l0 + radius {
            if l - 2 * m <= 0 {
                out.push((m, l));
            }
        }
    }
    out
}

/// Checks one `(q, k, lam, m, l)` case against the classifier and returns
/// a failure message, if any.
pub fn check_stalk_case(
    table: &CharacterTable,
    lam: DominantGL2Coweight,
    m: i64,
    l: i64,
) -> Result<Option<String>> {
    let k = table.k;
    let class = classify_stalk(k, lam, m, l)?;
    let sum = table.stalk_sum(lam, m, l)?;
    let tag = format!("q={} k={k} lam=({},{}) (m,l)=({m},{l})", table.q, lam.n1(), lam.n2());
    let expected_point = -m == lam.n2() && lam.n() + l == -(k as i64);
    if class.is_point() != expected_point {
        return Ok(Some(format!("{tag}: classifier {class:?} disagrees with the closed criterion")));
    }
    if class.is_point() == sum.is_zero() {
        return Ok(Some(format!("{tag}: classifier {class:?}, character sum {:?}", sum.coeffs)));
    }
    if let StalkResult::Point { .. } = class {
        if !sum.is_one() {
            return Ok(Some(format!("{tag}: point stalk with character sum {:?}", sum.coeffs)));
        }
        let mut expected = vec![Rational::zero(); k];
        expected[0] = int(1);
        match unique_rational_solution(k, lam, m, l)? {
            Some(v) if v == expected => {}
            other => return Ok(Some(format!("{tag}: rational solution {other:?}"))),
        }
    }
    Ok(None)
}

/// Sweeps `k <= k_max`, the given primes, coweights with `|n2| <= 3` and
/// `n1 - n2 <= 3`, and labels within `radius` of `iota(k, lam)`.
pub fn verify_stalks(k_max: usize, primes: &[u64], radius: i64) -> Result<StalkSweepReport> {
    let mut report = StalkSweepReport::default();
    for k in 1..=k_max {
        for &q in primes {
            let table = CharacterTable::new(q, k)?;
            for lam in sweep_coweights(3, 3) {
                let center = crate::orbit_combinatorics::iota(k as i64, lam)?;
                for (m, l) in label_window(center.m(), center.l(), radius) {
                    report.cases_checked += 1;
                    if classify_stalk(k, lam, m, l)?.is_point() {
                        report.points += 1;
                    }
                    if let Some(f) = check_stalk_case(&table, lam, m, l)? {
                        report.failures.push(f);
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit_combinatorics::iota;

    fn dom(n1: i64, n2: i64) -> DominantGL2Coweight {
        DominantGL2Coweight::new(n1, n2).unwrap()
    }

    #[test]
    fn condition_examples() {
        let s = build_conditions(1, dom(1, 0), 0, -2).unwrap();
        assert!(s.lattice_ok());
        assert_eq!(s.solve_rational().unique(), Some(&[int(1)][..]));

        let s = build_conditions(1, dom(1, 0), -1, -2).unwrap();
        assert!(s.constraints.is_empty());
        assert_eq!(s.constrained, vec![false]);

        let s = build_conditions(2, dom(0, 0), 0, -2).unwrap();
        assert_eq!(s.solve_rational().unique(), Some(&[int(1), int(0)][..]));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_stalk(1, dom(1, 0), 0, -2).unwrap(),
            StalkResult::Point { shift: 2 }
        );
        assert_eq!(
            classify_stalk(1, dom(1, 0), -1, -2).unwrap(),
            StalkResult::Zero {
                reason: ZeroReason::FreeTopCoefficient
            }
        );
        assert_eq!(
            classify_stalk(1, dom(1, 0), 1, -2).unwrap(),
            StalkResult::Zero {
                reason: ZeroReason::LatticeFailure
            }
        );
        assert_eq!(classify_stalk(0, dom(0, 0), 0, 0), Err(Error::InvalidLevel(0)));
    }

    #[test]
    fn oracle_examples() {
        assert!(character_sum_oracle(1, dom(1, 0), 0, -2, 3).unwrap().is_one());
        assert!(character_sum_oracle(1, dom(1, 0), -1, -2, 3).unwrap().is_zero());
        assert!(character_sum_oracle(2, dom(1, 1), -1, -4, 3).unwrap().is_one());
    }

    #[test]
    fn character_errors() {
        assert_eq!(ConductorCharacter::new(4, 1).err(), Some(Error::NotPrime(4)));
        assert!(matches!(
            ConductorCharacter::new(2, 1),
            Err(Error::NoConductorCharacter { .. })
        ));
        assert!(matches!(
            ConductorCharacter::new(3, 4),
            Err(Error::NoConductorCharacter { .. })
        ));
        assert!(matches!(
            CharacterTable::new(11, 6),
            Err(Error::EnumerationTooLarge { .. })
        ));
    }

    /// psi is multiplicative and has conductor exactly k.
    #[test]
    fn character_is_homomorphism_of_conductor_k() {
        for (q, k) in [(3, 1), (3, 2), (3, 3), (5, 2), (5, 3), (7, 3), (5, 4)] {
            let chi = ConductorCharacter::new(q, k).unwrap();
            let units = TruncatedUnit::enumerate(q, k);
            assert_eq!(units.len() as u64, (q - 1) * q.pow(k as u32 - 1));
            let n = chi.order();
            for x in &units {
                for y in units.iter().step_by(3) {
                    let lhs = chi.exponent(&x.mul(y));
                    assert_eq!(lhs, (chi.exponent(x) + chi.exponent(y)) % n, "q={q} k={k}");
                }
            }
            let mut layer = vec![1u64; k];
            for c in layer.iter_mut().skip(1) {
                *c = 0;
            }
            layer[k - 1] += 1;
            let u = TruncatedUnit::new(layer, q).unwrap();
            assert_ne!(chi.exponent(&u), 0, "q={q} k={k}");
        }
    }

    #[test]
    fn cyclotomic_reduction() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // Sum of all 6th roots of unity is zero.
        assert!(CyclotomicValue::from_exponent_counts(&[1; 6]).is_zero());
        // 1 + zeta_6^2 + zeta_6^4 = 0.
        assert!(CyclotomicValue::from_exponent_counts(&[1, 0, 1, 0, 1, 0]).is_zero());
        assert!(!CyclotomicValue::from_exponent_counts(&[1, 1, 0, 0, 0, 0]).is_zero());
        assert!(CyclotomicValue::from_exponent_counts(&[1, 0]).is_one());
    }

    #[test]
    fn own_orbit_is_a_point() {
        for k in 1..=4 {
            for lam in sweep_coweights(4, 4) {
                let x = iota(k, lam).unwrap();
                let r = classify_stalk(k as usize, lam, x.m(), x.l()).unwrap();
                assert_eq!(r, StalkResult::Point { shift: k + lam.orbit_dim() });
            }
        }
    }

    #[test]
    fn small_sweep_agrees() {
        let r = verify_stalks(2, &[3, 5], 3).unwrap();
        assert!(r.points > 0);
        assert!(r.passed(), "{:?}", r.failures);
    }
}
