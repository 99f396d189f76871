//! Graded `C[a, c]`-modules `M(lam, mu)` and their Hom spaces.
//!
//! `M(lam, mu)` is free over `C[a]` on a basis of `V(lam, mu)`, graded by
//! `h`-weight, with `c` acting through `pi_{lam,mu}(T(a))`. It is cyclic,
//! isomorphic to `C[a, c] / (prod_{s in S} (c - a s))`, and Hom between two
//! such modules is again cyclic with annihilator the product over the common
//! eigenvalues. Hom spaces are computed both from that closed form and by
//! solving the intertwining equations degree by degree.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exact_math::{
    int, kernel, rank, BivarPoly, LaurentInT, PolyA, PolyMatrix, Rational, SparseMatrix,
};
use crate::orbit_combinatorics::{s_set, s_set_intersection};
use crate::rep_gl2::{act, irrep, is_homogeneous, CoweightPair, GL2Element};
use crate::{Error, Result};

/// A graded module free of finite rank over `C[a]`, with `c` given by a
/// matrix. Column `j` of `c_matrix` is `c * b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeCModel {
    basis_degrees: Vec<i64>,
    c_matrix: PolyMatrix,
}

impl FreeCModel {
    /// Validates shape and degree homogeneity of `c`.
    pub fn new(basis_degrees: Vec<i64>, c_matrix: PolyMatrix) -> Option<Self> {
        let n = basis_degrees.len();
        if c_matrix.nrows() != n || c_matrix.ncols() != n {
            return None;
        }
        if !is_homogeneous(&c_matrix, &basis_degrees, 2) {
            return None;
        }
        Some(Self {
            basis_degrees,
            c_matrix,
        })
    }

    pub fn rank(&self) -> usize {
        self.basis_degrees.len()
    }

    pub fn basis_degrees(&self) -> &[i64] {
        &self.basis_degrees
    }

    pub fn c_matrix(&self) -> &PolyMatrix {
        &self.c_matrix
    }
}

/// The closed-form description of `Hom(M(p), M(p2))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomDescription {
    pub source: CoweightPair,
    pub target: CoweightPair,
    pub is_zero: bool,
    /// Number of common eigenvalues of `c / a`.
    pub k: usize,
    /// Degree of the cyclic generator, measured as the amount by which it
    /// raises internal degree.
    pub generator_degree: i64,
    pub annihilator: BivarPoly,
    /// Hilbert series through `truncation`.
    pub hilbert_series: LaurentInT,
    pub truncation: i64,
}

impl HomDescription {
    /// The generator degree measured relative to the target's grading,
    /// `2(lam' + 1 - k)`: the degree-raising value shifted by `lam' - lam`.
    pub fn target_relative_degree(&self) -> i64 {
        self.generator_degree + self.target.lam() - self.source.lam()
    }
}

/// Dimension of each graded piece over a finite range of degrees.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDimTable {
    dims: BTreeMap<i64, usize>,
}

impl GradedDimTable {
    pub fn get(&self, degree: i64) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn insert(&mut self, degree: i64, dim: usize) {
        self.dims.insert(degree, dim);
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.dims.iter().map(|(d, n)| (*d, *n))
    }

    /// Degrees covered by the table, in increasing order.
    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.dims.keys().copied()
    }
}

/// Output of [`hom_oracle`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomOracleResult {
    pub dims: GradedDimTable,
    /// First basis vector of the lowest nonzero graded piece, normalised so
    /// that its first nonzero coefficient is 1.
    pub generator: Option<(i64, PolyMatrix)>,
}

/// `M(lam, mu)`: weights of `V(lam, mu)` as degrees, `c = pi(T(a))`.
pub fn standard_module(pair: CoweightPair) -> FreeCModel {
    let rep = irrep(pair);
    let c = act(&rep, &GL2Element::t_matrix());
    FreeCModel::new(rep.weights().to_vec(), c).expect("T(a) acts homogeneously of degree 2")
}

/// `prod_{i=0}^{lam} (c - a (2i + mu - lam))`.
pub fn annihilator_polynomial(pair: CoweightPair) -> BivarPoly {
    product_over(&s_set(pair))
}

fn product_over(eigenvalues: &[i64]) -> BivarPoly {
    eigenvalues.iter().fold(BivarPoly::one(), |acc, s| {
        &acc * &BivarPoly::c_minus_a_times(&int(*s))
    })
}

/// Coordinates of a homogeneous element of degree `degree` in a module with
/// the given basis degrees: entry `j` is the coefficient of `a^e b_j`, where
/// `deg b_j + 2e = degree`. Positions with no such `e` are always zero.
fn coordinates(v: &[PolyA], basis_degrees: &[i64], degree: i64) -> Vec<Rational> {
    v.iter()
        .zip(basis_degrees)
        .map(|(p, w)| match exponent(degree - w) {
            Some(e) => p.coeff(e),
            None => {
                debug_assert!(p.is_zero());
                Rational::zero()
            }
        })
        .collect()
}

/// `x / 2` when `x` is even and non-negative.
fn exponent(x: i64) -> Option<u32> {
    (x >= 0 && x % 2 == 0).then_some((x / 2) as u32)
}

fn column(m: &PolyMatrix, j: usize) -> Vec<PolyA> {
    (0..m.nrows()).map(|i| m.get(i, j).clone()).collect()
}

fn apply(m: &PolyMatrix, v: &[PolyA]) -> Vec<PolyA> {
    (0..m.nrows())
        .map(|i| {
            v.iter()
                .enumerate()
                .fold(PolyA::zero(), |acc, (j, x)| &acc + &(m.get(i, j) * x))
        })
        .collect()
}

/// True iff the basis vector of lowest degree generates `M(pair)` under `a`
/// and `c`.
///
/// In each degree `D` from `-lam` to `lam` the span of `a^e c^i v` with
/// `-lam + 2e + 2i = D` is compared against the full graded piece. Every
/// basis vector lives in that range, so equality there means equality
/// everywhere.
pub fn generator_check(pair: CoweightPair) -> bool {
    let m = standard_module(pair);
    let n = m.rank();
    let lam = pair.lam();
    let lowest = n - 1;
    let mut powers = vec![column(&PolyMatrix::identity(n), lowest)];
    for _ in 0..n {
        let next = apply(&m.c_matrix, powers.last().expect("nonempty"));
        powers.push(next);
    }
    let mut d = -lam;
    while d <= lam {
        let mut span = Vec::new();
        for (i, v) in powers.iter().enumerate() {
            let rest = d + lam - 2 * i as i64;
            let Some(e) = exponent(rest) else { continue };
            let shifted: Vec<PolyA> = v.iter().map(|p| p.shift(e)).collect();
            span.push(coordinates(&shifted, &m.basis_degrees, d));
        }
        let full = m
            .basis_degrees
            .iter()
            .filter(|w| exponent(d - *w).is_some())
            .count();
        let got = if span.is_empty() {
            0
        } else {
            rank(&SparseMatrix::from_dense(&span, n))
        };
        if got != full {
            return false;
        }
        d += 2;
    }
    true
}

/// Default truncation `2(lam + lam' + 4)`.
pub fn default_max_degree(p: CoweightPair, p2: CoweightPair) -> i64 {
    2 * (p.lam() + p2.lam() + 4)
}

/// [`hom_formula_to`] with the default truncation.
pub fn hom_formula(p: CoweightPair, p2: CoweightPair) -> HomDescription {
    hom_formula_to(p, p2, default_max_degree(p, p2))
}

/// Closed form of `Hom(M(p), M(p2))`: zero when the S-sets are disjoint,
/// otherwise cyclic on one generator with annihilator
/// `prod_{s in S ∩ S'} (c - a s)` and Hilbert series
/// `t^g (1 - t^{2k}) / (1 - t^2)^2`.
pub fn hom_formula_to(p: CoweightPair, p2: CoweightPair, max_degree: i64) -> HomDescription {
    let common = s_set_intersection(p, p2);
    let k = common.len();
    if k == 0 {
        return HomDescription {
            source: p,
            target: p2,
            is_zero: true,
            k: 0,
            generator_degree: 0,
            annihilator: BivarPoly::one(),
            hilbert_series: LaurentInT::zero(),
            truncation: max_degree,
        };
    }
    let lam2 = (common[k - 1] - common[0]) / 2;
    let g = p.lam() + p2.lam() - 2 * lam2;
    let numerator = &LaurentInT::monomial(1, 0) - &LaurentInT::monomial(1, 2 * k as i64);
    let geom = LaurentInT::geometric(2, max_degree - g);
    let series = (&(&numerator * &geom) * &geom).truncate(max_degree - g);
    let hilbert_series = &series * &LaurentInT::monomial(1, g);
    HomDescription {
        source: p,
        target: p2,
        is_zero: false,
        k,
        generator_degree: g,
        annihilator: product_over(&common),
        hilbert_series,
        truncation: max_degree,
    }
}

/// Unknowns of a homogeneous degree-`d` map `M -> M2`: entry `(i, j)` is
/// `x a^e` with `w'_i + 2e = w_j + d`.
fn hom_unknowns(m: &FreeCModel, m2: &FreeCModel, d: i64) -> Vec<(usize, usize, u32)> {
    let mut out = Vec::new();
    for (i, wi) in m2.basis_degrees.iter().enumerate() {
        for (j, wj) in m.basis_degrees.iter().enumerate() {
            if let Some(e) = exponent(wj + d - wi) {
                out.push((i, j, e));
            }
        }
    }
    out
}

/// Linear system `Phi C - C' Phi = 0` on the degree-`d` unknowns.
fn intertwining_system(
    m: &FreeCModel,
    m2: &FreeCModel,
    unknowns: &[(usize, usize, u32)],
) -> SparseMatrix {
    // Keyed by (row, column, power of a) of the matrix equation.
    let mut eqs: BTreeMap<(usize, usize, u32), Vec<(usize, Rational)>> = BTreeMap::new();
    for (u, &(i, j, e)) in unknowns.iter().enumerate() {
        // Phi C: x_{ij} a^e C_{j s} lands in entry (i, s).
        for s in 0..m.rank() {
            for (t, coeff) in m.c_matrix.get(j, s).terms() {
                eqs.entry((i, s, e + t)).or_default().push((u, coeff.clone()));
            }
        }
        // C' Phi: C'_{r i} x_{ij} a^e lands in entry (r, j).
        for r in 0..m2.rank() {
            for (t, coeff) in m2.c_matrix.get(r, i).terms() {
                eqs.entry((r, j, e + t)).or_default().push((u, -coeff.clone()));
            }
        }
    }
    let mut sys = SparseMatrix::new(unknowns.len());
    for row in eqs.into_values() {
        sys.push_row(row);
    }
    sys
}

fn assemble(
    m: &FreeCModel,
    m2: &FreeCModel,
    unknowns: &[(usize, usize, u32)],
    values: &[Rational],
) -> PolyMatrix {
    let mut phi = PolyMatrix::zeros(m2.rank(), m.rank());
    for (&(i, j, e), x) in unknowns.iter().zip(values) {
        phi.set(i, j, PolyA::monomial(x.clone(), e));
    }
    phi
}

/// Graded dimensions of `Hom_{C[a,c]}(M, M2)` for every degree from the
/// lowest possible one up to `max_degree`, computed by exact linear algebra
/// on each graded piece.
pub fn hom_oracle(m: &FreeCModel, m2: &FreeCModel, max_degree: i64) -> HomOracleResult {
    let mut dims = GradedDimTable::default();
    let mut generator = None;
    let lowest = match (m2.basis_degrees.iter().min(), m.basis_degrees.iter().max()) {
        (Some(lo), Some(hi)) => lo - hi,
        _ => return HomOracleResult { dims, generator },
    };
    for d in lowest..=max_degree {
        let unknowns = hom_unknowns(m, m2, d);
        if unknowns.is_empty() {
            dims.insert(d, 0);
            continue;
        }
        let sys = intertwining_system(m, m2, &unknowns);
        if generator.is_none() {
            let ker = kernel(&sys);
            dims.insert(d, ker.len());
            if let Some(v) = ker.first() {
                let lead = v.iter().find(|x| !x.is_zero()).expect("kernel vector is nonzero");
                let v: Vec<Rational> = v.iter().map(|x| x / lead).collect();
                generator = Some((d, assemble(m, m2, &unknowns, &v)));
            }
        } else {
            dims.insert(d, unknowns.len() - rank(&sys));
        }
    }
    HomOracleResult { dims, generator }
}

/// Tensoring with `V(0, mu0)`: adds `mu0 * a` to the diagonal of `c`.
pub fn twist(m: &FreeCModel, mu0: i64) -> Result<FreeCModel> {
    if mu0.rem_euclid(2) != 0 {
        return Err(Error::OddTwist(mu0));
    }
    let shift = PolyMatrix::scalar(m.rank(), &PolyA::monomial(int(mu0), 1));
    Ok(FreeCModel {
        basis_degrees: m.basis_degrees.clone(),
        c_matrix: &m.c_matrix + &shift,
    })
}

/// Coordinates of a homogeneous map of degree `d` in the oracle's unknowns.
fn hom_coordinates(
    phi: &PolyMatrix,
    unknowns: &[(usize, usize, u32)],
) -> Vec<Rational> {
    unknowns.iter().map(|&(i, j, e)| phi.get(i, j).coeff(e)).collect()
}

/// Checks that `phi` (homogeneous of degree `g`) generates the Hom module
/// in every degree up to `max_degree`: the span of `a^e C'^i phi` in degree
/// `D = g + 2e + 2i` must have dimension `dims[D]`.
fn cyclic_span_matches(
    m: &FreeCModel,
    m2: &FreeCModel,
    g: i64,
    phi: &PolyMatrix,
    dims: &GradedDimTable,
    max_degree: i64,
) -> std::result::Result<(), String> {
    let mut powers = vec![phi.clone()];
    let steps = ((max_degree - g) / 2).max(0) as usize;
    for _ in 0..steps {
        let next = &m2.c_matrix * powers.last().expect("nonempty");
        powers.push(next);
    }
    for d in dims.degrees().filter(|d| *d <= max_degree) {
        let unknowns = hom_unknowns(m, m2, d);
        let mut span = Vec::new();
        if d >= g && (d - g) % 2 == 0 {
            let top = ((d - g) / 2) as usize;
            for (i, x) in powers.iter().enumerate().take(top + 1) {
                let e = (top - i) as u32;
                let shifted = x.map(|p| p.shift(e));
                span.push(hom_coordinates(&shifted, &unknowns));
            }
        }
        let got = if span.is_empty() || unknowns.is_empty() {
            0
        } else {
            rank(&SparseMatrix::from_dense(&span, unknowns.len()))
        };
        if got != dims.get(d) {
            return Err(format!(
                "degree {d}: generator spans {got}, graded piece has dim {}",
                dims.get(d)
            ));
        }
    }
    Ok(())
}

/// Compares closed form and oracle for one pair of pairs. Returns the list
/// of discrepancies (empty on agreement).
pub fn check_hom_case(p: CoweightPair, p2: CoweightPair, max_degree: i64) -> Vec<String> {
    check_hom_case_with_oracle(p, p2, max_degree).0
}

/// [`check_hom_case`], also returning the oracle output for further
/// comparisons.
pub fn check_hom_case_with_oracle(
    p: CoweightPair,
    p2: CoweightPair,
    max_degree: i64,
) -> (Vec<String>, HomOracleResult) {
    let mut failures = Vec::new();
    let tag = format!("Hom(M{p}, M{p2})");
    let formula = hom_formula_to(p, p2, max_degree);
    let m = standard_module(p);
    let m2 = standard_module(p2);
    let oracle = hom_oracle(&m, &m2, max_degree);

    for (d, dim) in oracle.dims.iter() {
        let expected = formula.hilbert_series.coeff(d);
        if dim as i64 != expected {
            failures.push(format!("{tag}: degree {d}: oracle {dim}, formula {expected}"));
        }
        if dim != 0 && (d - p.lam() - p2.lam()).rem_euclid(2) != 0 {
            failures.push(format!("{tag}: nonzero piece in degree {d} of wrong parity"));
        }
    }
    // Formula terms below the oracle's range would be missed above.
    if let Some(lo) = formula.hilbert_series.min_exponent() {
        if oracle.dims.degrees().next().is_none_or(|d| lo < d) {
            failures.push(format!("{tag}: formula has terms below degree range"));
        }
    }

    match (&oracle.generator, formula.is_zero) {
        (None, true) => {}
        (Some((d, _)), true) => {
            failures.push(format!("{tag}: formula is zero but oracle found a map in degree {d}"))
        }
        (None, false) => {
            if formula.generator_degree <= max_degree {
                failures.push(format!("{tag}: oracle found no generator"));
            }
        }
        (Some((g, phi)), false) => {
            if *g != formula.generator_degree {
                failures.push(format!(
                    "{tag}: generator degree oracle {g}, formula {}",
                    formula.generator_degree
                ));
            }
            if oracle.dims.get(*g) != 1 {
                failures.push(format!("{tag}: lowest piece is not one-dimensional"));
            }
            if phi * &m.c_matrix != &m2.c_matrix * phi {
                failures.push(format!("{tag}: generator does not intertwine c"));
            }
            if !(&m2.c_matrix.eval_bivar(&formula.annihilator) * phi).is_zero() {
                failures.push(format!("{tag}: annihilator does not kill the generator"));
            }
            if let Err(e) = cyclic_span_matches(&m, &m2, *g, phi, &oracle.dims, max_degree) {
                failures.push(format!("{tag}: {e}"));
            }
        }
    }
    (failures, oracle)
}

/// Outcome of a Hom agreement sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomAgreementReport {
    pub cases_checked: usize,
    pub failures: Vec<String>,
}

impl HomAgreementReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs [`check_hom_case`] over all ordered pairs of valid pairs with
/// `lam, lam' <= lam_max` and `|mu|, |mu'| <= mu_bound`.
pub fn verify_hom_agreement(lam_max: i64, mu_bound: i64, max_degree: i64) -> HomAgreementReport {
    let pairs = CoweightPair::enumerate(lam_max, mu_bound);
    let mut report = HomAgreementReport::default();
    for &p in &pairs {
        for &p2 in &pairs {
            report.cases_checked += 1;
            report.failures.extend(check_hom_case(p, p2, max_degree));
        }
    }
    report
}

/// Distinct eigenvalues of `c / a` on `M(pair)`, read off the diagonal of
/// the upper-triangular `c`-matrix.
pub fn c_over_a_eigenvalues(pair: CoweightPair) -> BTreeSet<i64> {
    let m = standard_module(pair);
    (0..m.rank())
        .map(|i| {
            let x = m.c_matrix.get(i, i).coeff(1);
            x.to_integer().try_into().expect("small eigenvalue")
        })
        .collect()
}
