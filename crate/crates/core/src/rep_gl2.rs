//! Irreducible representations `V(lam, mu)` of GL(2).
//!
//! `V(lam, mu)` restricts to the `(lam + 1)`-dimensional irreducible
//! representation of SL(2) and has central character `mu`. We use the weight
//! basis `v_0, ..., v_lam` ordered by descending `h`-weight with
//!
//! ```text
//! h v_j = (lam - 2j) v_j,   f v_j = v_{j+1},   e v_j = j (lam + 1 - j) v_{j-1}
//! ```
//!
//! so that `V(1, 1)` is literally the defining representation. Matrices act on
//! column vectors: column `j` is the image of `v_j`.

use serde::{Deserialize, Serialize};

use crate::exact_math::{int, LaurentTZ, PolyA, PolyMatrix, Rational};
use crate::{Error, Result};
use num_traits::Zero;

/// A pair `(lam, mu)` with `lam >= 0` and `lam = mu (mod 2)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoweightPair {
    lam: i64,
    mu: i64,
}

impl CoweightPair {
    pub fn new(lam: i64, mu: i64) -> Result<Self> {
        if lam < 0 || (lam - mu).rem_euclid(2) != 0 {
            return Err(Error::InvalidPair { lam, mu });
        }
        Ok(Self { lam, mu })
    }

    pub fn lam(&self) -> i64 {
        self.lam
    }

    pub fn mu(&self) -> i64 {
        self.mu
    }

    pub fn dim(&self) -> usize {
        (self.lam + 1) as usize
    }

    /// All valid pairs with `lam <= lam_max` and `|mu| <= mu_bound`, ordered
    /// by `(lam, mu)`.
    pub fn enumerate(lam_max: i64, mu_bound: i64) -> Vec<Self> {
        let mut out = Vec::new();
        for lam in 0..=lam_max {
            for mu in -mu_bound..=mu_bound {
                if let Ok(p) = Self::new(lam, mu) {
                    out.push(p);
                }
            }
        }
        out
    }
}

impl std::fmt::Display for CoweightPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.lam, self.mu)
    }
}

/// `V(lam, mu)` with its weight basis and the action of `e`, `f`, `h` and
/// the identity of `gl_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightRep {
    pair: CoweightPair,
    weights: Vec<i64>,
    e: PolyMatrix,
    f: PolyMatrix,
    h: PolyMatrix,
    identity: PolyMatrix,
}

impl WeightRep {
    pub fn pair(&self) -> CoweightPair {
        self.pair
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// `h`-eigenvalues of the basis vectors, descending.
    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn e(&self) -> &PolyMatrix {
        &self.e
    }

    pub fn f(&self) -> &PolyMatrix {
        &self.f
    }

    pub fn h(&self) -> &PolyMatrix {
        &self.h
    }

    /// Action of the identity matrix of `gl_2` (the scalar `mu`).
    pub fn identity_action(&self) -> &PolyMatrix {
        &self.identity
    }

    /// `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`, checked exactly.
    pub fn commutation_relations_hold(&self) -> bool {
        let br = |x: &PolyMatrix, y: &PolyMatrix| &(x * y) - &(y * x);
        let two = PolyA::constant(int(2));
        br(&self.e, &self.f) == self.h
            && br(&self.h, &self.e) == self.e.scale(&two)
            && br(&self.h, &self.f) == self.f.scale(&-two)
            && br(&self.identity, &self.e).is_zero()
            && br(&self.identity, &self.f).is_zero()
    }
}

/// Builds `V(lam, mu)`.
#[allow(clippy::needless_range_loop)]
pub fn irrep(pair: CoweightPair) -> WeightRep {
    let lam = pair.lam();
    let n = pair.dim();
    let weights: Vec<i64> = (0..n as i64).map(|j| lam - 2 * j).collect();
    let mut e = PolyMatrix::zeros(n, n);
    let mut f = PolyMatrix::zeros(n, n);
    let mut h = PolyMatrix::zeros(n, n);
    for j in 0..n {
        h.set(j, j, PolyA::constant(int(weights[j])));
        if j + 1 < n {
            f.set(j + 1, j, PolyA::one());
        }
        if j > 0 {
            let jj = j as i64;
            e.set(j - 1, j, PolyA::constant(int(jj * (lam + 1 - jj))));
        }
    }
    let identity = PolyMatrix::scalar(n, &PolyA::constant(int(pair.mu())));
    WeightRep {
        pair,
        weights,
        e,
        f,
        h,
        identity,
    }
}

/// A 2x2 matrix over `Q[a]`, read as an element of `gl_2(Q[a])` or, when its
/// determinant is a nonzero constant, of `GL_2(Q[a])`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GL2Element(PolyMatrix);

impl GL2Element {
    pub fn new(m: PolyMatrix) -> Self {
        assert!(m.nrows() == 2 && m.ncols() == 2, "GL2Element must be 2x2");
        Self(m)
    }

    pub fn from_entries(m00: PolyA, m01: PolyA, m10: PolyA, m11: PolyA) -> Self {
        Self(PolyMatrix::from_rows(vec![vec![m00, m01], vec![m10, m11]]))
    }

    pub fn identity() -> Self {
        Self(PolyMatrix::identity(2))
    }

    /// `S(a) = [[a, 1], [a^2, a]]`.
    pub fn s_matrix() -> Self {
        let a = PolyA::a();
        Self::from_entries(a.clone(), PolyA::one(), a.pow(2), a)
    }

    /// `T(a) = [[0, 1], [0, 2a]]`.
    pub fn t_matrix() -> Self {
        Self::from_entries(
            PolyA::zero(),
            PolyA::one(),
            PolyA::zero(),
            PolyA::a().scale(&int(2)),
        )
    }

    /// `g(a) = [[1, 0], [-a, 1]]`.
    pub fn g_matrix() -> Self {
        Self::from_entries(PolyA::one(), PolyA::zero(), -PolyA::a(), PolyA::one())
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.0
    }

    pub fn entry(&self, i: usize, j: usize) -> &PolyA {
        self.0.get(i, j)
    }

    pub fn trace(&self) -> PolyA {
        self.0.trace()
    }

    pub fn det(&self) -> PolyA {
        &(self.entry(0, 0) * self.entry(1, 1)) - &(self.entry(0, 1) * self.entry(1, 0))
    }

    /// Inverse, provided the determinant is a nonzero constant.
    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det.is_zero() || det.degree() != Some(0) {
            return None;
        }
        let inv = det.coeff(0).recip();
        let s = |p: &PolyA| p.scale(&inv);
        Some(Self::from_entries(
            s(self.entry(1, 1)),
            s(&-self.entry(0, 1)),
            s(&-self.entry(1, 0)),
            s(self.entry(0, 0)),
        ))
    }

    /// Entrywise specialisation `a := x`.
    pub fn specialize(&self, x: &Rational) -> Self {
        Self(self.0.specialize(x))
    }
}

impl std::ops::Mul for &GL2Element {
    type Output = GL2Element;
    fn mul(self, rhs: &GL2Element) -> GL2Element {
        GL2Element(&self.0 * &rhs.0)
    }
}

/// Lie-algebra action `pi_{lam,mu}(A)`: the traceless part of `A` acts
/// through `sl_2` and `tr(A)/2` acts through the central character.
pub fn act(rep: &WeightRep, a: &GL2Element) -> PolyMatrix {
    let half_trace = a.trace().scale(&Rational::new(1.into(), 2.into()));
    let h_coeff = a.entry(0, 0) - &half_trace;
    let e_coeff = a.entry(0, 1);
    let f_coeff = a.entry(1, 0);
    let n = rep.dim();
    let central = half_trace.scale(&int(rep.pair().mu()));
    &(&(&rep.h.scale(&h_coeff) + &rep.e.scale(e_coeff)) + &rep.f.scale(f_coeff))
        + &PolyMatrix::scalar(n, &central)
}

/// Group action of `g` on `V(lam, mu)`, realised as
/// `Sym^lam(C^2) ⊗ det^{(mu - lam)/2}` with `v_j = lam!/(lam-j)! x^{lam-j} y^j`.
///
/// Returns `None` unless `det g` is a nonzero constant.
pub fn group_act(rep: &WeightRep, g: &GL2Element) -> Option<PolyMatrix> {
    let det = g.det();
    if det.is_zero() || det.degree() != Some(0) {
        return None;
    }
    let det = det.coeff(0);
    let lam = rep.pair().lam() as usize;
    let twist_exp = (rep.pair().mu() - rep.pair().lam()) / 2;
    let twist = pow_signed(&det, twist_exp);

    // g e_1 = g00 x + g10 y, g e_2 = g01 x + g11 y, as homogeneous forms
    // indexed by the power of y.
    let ge1 = vec![g.entry(0, 0).clone(), g.entry(1, 0).clone()];
    let ge2 = vec![g.entry(0, 1).clone(), g.entry(1, 1).clone()];
    // falling[j] = lam! / (lam - j)!
    let falling: Vec<Rational> = (0..=lam)
        .scan(int(1), |acc, j| {
            let out = acc.clone();
            *acc = &*acc * int((lam - j) as i64);
            Some(out)
        })
        .collect();

    let mut out = PolyMatrix::zeros(lam + 1, lam + 1);
    for j in 0..=lam {
        let mut form = vec![PolyA::one()];
        for _ in 0..(lam - j) {
            form = mul_forms(&form, &ge1);
        }
        for _ in 0..j {
            form = mul_forms(&form, &ge2);
        }
        for (i, coeff) in form.iter().enumerate() {
            // coeff * x^{lam-i} y^i = coeff / falling[i] * v_i
            let scale = &(&falling[j] / &falling[i]) * &twist;
            out.set(i, j, coeff.scale(&scale));
        }
    }
    Some(out)
}

fn mul_forms(p: &[PolyA], q: &[PolyA]) -> Vec<PolyA> {
    let mut out = vec![PolyA::zero(); p.len() + q.len() - 1];
    for (i, x) in p.iter().enumerate() {
        for (j, y) in q.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn pow_signed(x: &Rational, n: i64) -> Rational {
    let base = if n < 0 { x.recip() } else { x.clone() };
    (0..n.unsigned_abs()).fold(int(1), |acc, _| acc * &base)
}

/// Checks `g(a)^{-1} S(a) g(a) = T(a)` exactly over `Q[a]`.
pub fn verify_conjugation() -> bool {
    conjugation_holds(
        &GL2Element::s_matrix(),
        &GL2Element::t_matrix(),
        &GL2Element::g_matrix(),
    )
}

/// The same identity after specialising `a := x` in all three matrices.
pub fn verify_conjugation_at(x: &Rational) -> bool {
    conjugation_holds(
        &GL2Element::s_matrix().specialize(x),
        &GL2Element::t_matrix().specialize(x),
        &GL2Element::g_matrix().specialize(x),
    )
}

fn conjugation_holds(s: &GL2Element, t: &GL2Element, g: &GL2Element) -> bool {
    match g.inverse() {
        Some(g_inv) => &(&g_inv * s) * g == *t,
        None => false,
    }
}

/// Character `sum_j t^{weight_j} z^{mu}`.
pub fn character(rep: &WeightRep) -> LaurentTZ {
    let mut ch = LaurentTZ::zero();
    for w in rep.weights() {
        ch.add_term(*w, rep.pair().mu(), 1);
    }
    ch
}

/// Checks that the Lie-algebra action of `S(a)` and `T(a)` on `rep` are
/// conjugate by the group image of `g(a)`.
pub fn conjugation_holds_in(rep: &WeightRep) -> bool {
    let g = GL2Element::g_matrix();
    let (Some(pg), Some(pg_inv)) = (group_act(rep, &g), g.inverse().and_then(|gi| group_act(rep, &gi)))
    else {
        return false;
    };
    let s = act(rep, &GL2Element::s_matrix());
    let t = act(rep, &GL2Element::t_matrix());
    &(&pg_inv * &s) * &pg == t && (&pg * &pg_inv) == PolyMatrix::identity(rep.dim())
}

/// True when `m` is homogeneous of degree `deg` for the grading where basis
/// vector `j` has degree `weights[j]` and `a` has degree 2.
pub fn is_homogeneous(m: &PolyMatrix, weights: &[i64], deg: i64) -> bool {
    (0..m.nrows()).all(|i| {
        (0..m.ncols()).all(|j| {
            m.get(i, j)
                .terms()
                .all(|(e, c)| c.is_zero() || weights[i] + 2 * e as i64 == weights[j] + deg)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::{char_poly_in_c, BivarPoly};

    fn pair(l: i64, m: i64) -> CoweightPair {
        CoweightPair::new(l, m).unwrap()
    }

    fn konst(rows: &[&[i64]]) -> PolyMatrix {
        PolyMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|x| PolyA::constant(int(*x))).collect())
                .collect(),
        )
    }

    #[test]
    fn rejects_invalid_pairs() {
        assert_eq!(
            CoweightPair::new(-1, 1),
            Err(Error::InvalidPair { lam: -1, mu: 1 })
        );
        assert!(CoweightPair::new(1, 0).is_err());
        assert!(CoweightPair::new(2, -4).is_ok());
    }

    #[test]
    fn trivial_representation() {
        let r = irrep(pair(0, 0));
        assert_eq!(r.dim(), 1);
        assert!(r.e().is_zero() && r.f().is_zero() && r.h().is_zero());
    }

    #[test]
    fn defining_representation_is_literal() {
        let r = irrep(pair(1, 1));
        assert_eq!(*r.e(), konst(&[&[0, 1], &[0, 0]]));
        assert_eq!(*r.f(), konst(&[&[0, 0], &[1, 0]]));
        assert_eq!(*r.h(), konst(&[&[1, 0], &[0, -1]]));
    }

    #[test]
    fn adjoint_dimension_and_weights() {
        let r = irrep(pair(2, 0));
        assert_eq!(r.dim(), 3);
        assert_eq!(r.weights(), &[2, 0, -2]);
    }

    #[test]
    fn commutation_relations_for_small_irreps() {
        for p in CoweightPair::enumerate(8, 3) {
            assert!(irrep(p).commutation_relations_hold(), "{p}");
        }
    }

    #[test]
    fn act_examples() {
        let t = GL2Element::t_matrix();
        assert_eq!(act(&irrep(pair(1, 1)), &t), *t.matrix());
        let two_a = PolyA::a().scale(&int(2));
        assert_eq!(
            act(&irrep(pair(0, 2)), &t),
            PolyMatrix::from_rows(vec![vec![two_a]])
        );
        for p in [pair(0, 0), pair(3, -1), pair(4, 6)] {
            let r = irrep(p);
            assert_eq!(
                act(&r, &GL2Element::identity()),
                PolyMatrix::scalar(r.dim(), &PolyA::constant(int(p.mu())))
            );
        }
    }

    #[test]
    fn conjugation_identity_and_specialisations() {
        assert!(verify_conjugation());
        assert!(verify_conjugation_at(&int(0)));
        assert!(verify_conjugation_at(&int(1)));
        // Integer check at a = 1 by hand: g^{-1} = [[1,0],[1,1]],
        // S(1) = [[1,1],[1,1]], g^{-1} S g = [[0,1],[0,2]].
        let s1 = GL2Element::s_matrix().specialize(&int(1));
        assert_eq!(*s1.matrix(), konst(&[&[1, 1], &[1, 1]]));
    }

    #[test]
    fn group_action_matches_defining_matrix() {
        let g = GL2Element::g_matrix();
        let r = irrep(pair(1, 1));
        assert_eq!(group_act(&r, &g).unwrap(), *g.matrix());
    }

    #[test]
    fn group_action_is_multiplicative() {
        let g = GL2Element::g_matrix();
        let h = GL2Element::from_entries(
            PolyA::constant(int(2)),
            PolyA::a(),
            PolyA::zero(),
            PolyA::constant(int(3)),
        );
        for p in [pair(2, 0), pair(3, 5), pair(4, -2)] {
            let r = irrep(p);
            let lhs = group_act(&r, &(&g * &h)).unwrap();
            let rhs = &group_act(&r, &g).unwrap() * &group_act(&r, &h).unwrap();
            assert_eq!(lhs, rhs, "{p}");
        }
    }

    #[test]
    fn s_and_t_conjugate_in_every_irrep() {
        for lam in 0..=10 {
            for mu in [-lam, lam, lam + 2] {
                let r = irrep(pair(lam, mu));
                assert!(conjugation_holds_in(&r), "({lam}, {mu})");
            }
        }
    }

    #[test]
    fn t_action_is_homogeneous_of_degree_two() {
        for p in CoweightPair::enumerate(6, 4) {
            let r = irrep(p);
            let m = act(&r, &GL2Element::t_matrix());
            assert!(is_homogeneous(&m, r.weights(), 2), "{p}");
        }
    }

    #[test]
    fn t_eigenvalues_are_the_s_set() {
        for p in CoweightPair::enumerate(6, 4) {
            let r = irrep(p);
            let cp = char_poly_in_c(&act(&r, &GL2Element::t_matrix()));
            let mut expected = BivarPoly::one();
            for i in 0..=p.lam() {
                expected = &expected * &BivarPoly::c_minus_a_times(&int(p.mu() - p.lam() + 2 * i));
            }
            assert_eq!(cp, expected, "{p}");
        }
    }

    #[test]
    fn character_examples() {
        assert_eq!(character(&irrep(pair(0, 0))), LaurentTZ::one());
        let ch = character(&irrep(pair(1, 1)));
        assert_eq!(
            ch,
            &LaurentTZ::monomial(1, 1, 1) + &LaurentTZ::monomial(1, -1, 1)
        );
        let ch = character(&irrep(pair(2, 0)));
        assert_eq!(ch.coeff(2, 0) + ch.coeff(0, 0) + ch.coeff(-2, 0), 3);
        assert_eq!(ch.total(), 3);
    }
}
