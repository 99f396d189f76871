//! The coherent side: `P`-equivariant graded modules on `V* = Spec C[x, y]`,
//! the restriction functor to the line `y = -1`, equivariant Hom as Lie
//! algebra invariants, GL(2) invariant theory on `V × V*`, and the support
//! lattice used by the compactness criterion.
//!
//! `P = {[[1, α], [0, β]]}` acts on `V*` through `(g^t)^{-1}`, so the Lie
//! element `A = [[0, u], [0, v]]` moves the point `(x, y)` in the direction
//! `(0, -ux - vy)`. For a free module `O ⊗ V(lam, mu)` the operator
//!
//! `D_A(f ⊗ w) = L_A(f) ⊗ w - f ⊗ pi(A) w`, with `L_A f = (-ux - vy) ∂f/∂y`,
//!
//! is the infinitesimal equivariance condition: invariant sections are its
//! joint kernel, and `-D_A` is the Lie algebra action on sections.
//!
//! Gradings: `x^p y^q ⊗ v_j` has degree `2p + lam - 2j` (polynomial degree
//! plus twice the eigenvalue of `D_V` for `V = [[0, 0], [0, 1]]`, plus `mu`).
//! With `a = x / 2` this puts `tilde_F(O ⊗ V(lam, mu))` exactly on the
//! weight grading of `M(lam, mu)`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cohomology_modules::{
    check_hom_case_with_oracle, hom_formula_to, FreeCModel, GradedDimTable, HomDescription,
};
use crate::exact_math::{int, kernel, rank, PolyA, PolyMatrix, Rational, SparseMatrix};
use crate::rep_gl2::{act, irrep, CoweightPair, GL2Element};

/// Polynomial in `x` and `y`, keyed by `(exponent of x, exponent of y)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct XYPoly {
    coeffs: BTreeMap<(u32, u32), Rational>,
}

impl XYPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: Rational, p: u32, q: u32) -> Self {
        let mut out = Self::zero();
        out.add_term(p, q, c);
        out
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// Embeds a polynomial in one variable as a polynomial in `x`.
    pub fn from_x_poly(p: &PolyA) -> Self {
        let mut out = Self::zero();
        for (e, c) in p.terms() {
            out.add_term(e, 0, c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, p: u32, q: u32) -> Rational {
        self.coeffs.get(&(p, q)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn add_term(&mut self, p: u32, q: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry((p, q)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&(p, q));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((p, q), c) in other.terms() {
            out.add_term(p, q, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((p1, q1), c1) in self.terms() {
            for ((p2, q2), c2) in other.terms() {
                out.add_term(p1 + p2, q1 + q2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for ((p, q), x) in self.terms() {
            out.add_term(p, q, x * c);
        }
        out
    }

    pub fn d_dy(&self) -> Self {
        let mut out = Self::zero();
        for ((p, q), c) in self.terms() {
            if q > 0 {
                out.add_term(p, q - 1, c * int(q as i64));
            }
        }
        out
    }

    /// Substitutes `y = y0`, leaving a polynomial in `x`.
    pub fn at_y(&self, y0: &Rational) -> PolyA {
        let mut out = PolyA::zero();
        for ((p, q), c) in self.terms() {
            let mut t = c.clone();
            for _ in 0..q {
                t *= y0;
            }
            out.add_term(p, t);
        }
        out
    }
}

/// The group `P` and its Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PGroupData {
    /// `[[0, 1], [0, 0]]`.
    pub u_generator: GL2Element,
    /// `[[0, 0], [0, 1]]`, generating the torus `α = 0`.
    pub v_generator: GL2Element,
}

impl Default for PGroupData {
    fn default() -> Self {
        Self::new()
    }
}

impl PGroupData {
    pub fn new() -> Self {
        Self {
            u_generator: Self::lie_element(&int(1), &PolyA::zero()),
            v_generator: Self::lie_element(&int(0), &PolyA::one()),
        }
    }

    /// `[[0, u], [0, v]]`.
    pub fn lie_element(u: &Rational, v: &PolyA) -> GL2Element {
        GL2Element::from_entries(PolyA::zero(), PolyA::constant(u.clone()), PolyA::zero(), v.clone())
    }

    /// `(g^t)^{-1} (x, y)` for `g = [[1, α], [0, β]]`.
    pub fn act_on_point(alpha: &Rational, beta: &Rational, pt: (&Rational, &Rational)) -> (Rational, Rational) {
        let (x, y) = pt;
        (x.clone(), (y - alpha * x) / beta)
    }
}

/// `O(V*) ⊗ V(lam, mu)` with its `P`-equivariant structure.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct PEquivFreeModule {
    pub pair: CoweightPair,
}

/// A section `sum_j f_j ⊗ v_j`.
pub type Section = Vec<XYPoly>;

impl PEquivFreeModule {
    pub fn new(pair: CoweightPair) -> Self {
        Self { pair }
    }

    pub fn rank(&self) -> usize {
        self.pair.dim()
    }

    /// Degree of `x^p y^q ⊗ v_j`.
    pub fn degree(&self, p: u32, _q: u32, j: usize) -> i64 {
        2 * p as i64 + self.pair.lam() - 2 * j as i64
    }

    /// `pi(A)` for `A = [[0, u], [0, v(x)]]`, with entries in `x`.
    fn rep_matrix(&self, u: &Rational, v: &PolyA) -> Vec<Vec<XYPoly>> {
        let m = act(&irrep(self.pair), &PGroupData::lie_element(u, v));
        m.rows()
            .iter()
            .map(|r| r.iter().map(XYPoly::from_x_poly).collect())
            .collect()
    }

    /// `D_A s` for `A = [[0, u], [0, v(x)]]`.
    pub fn apply(&self, u: &Rational, v: &PolyA, s: &[XYPoly]) -> Section {
        let field = XYPoly::from_x_poly(&PolyA::monomial(-u.clone(), 1))
            .add(&XYPoly::from_x_poly(v).mul(&XYPoly::y()).scale(&int(-1)));
        let pi = self.rep_matrix(u, v);
        (0..self.rank())
            .map(|i| {
                let mut out = derivation(&field, &s[i]);
                for (j, sj) in s.iter().enumerate() {
                    out = out.add(&pi[i][j].mul(sj).scale(&int(-1)));
                }
                out
            })
            .collect()
    }
}

/// `L(f) = field * ∂f/∂y`: the derivation with `x -> 0`, `y -> field`.
pub fn derivation(field: &XYPoly, f: &XYPoly) -> XYPoly {
    field.mul(&f.d_dy())
}

/// Matrix of `D_A` on the sections of polynomial degree `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedPieceAction {
    /// Basis elements `(p, q, j)` meaning `x^p y^q ⊗ v_j`.
    pub basis: Vec<(u32, u32, usize)>,
    /// Column `c` holds the coordinates of `D_A(basis[c])`.
    pub matrix: Vec<Vec<Rational>>,
}

/// `D_A` for `A = [[0, u], [0, v]]` on the degree-`n` sections of `module`.
pub fn lie_p_action(module: &PEquivFreeModule, u: &Rational, v: &Rational, n: u32) -> GradedPieceAction {
    let mut basis = Vec::new();
    for p in 0..=n {
        for j in 0..module.rank() {
            basis.push((p, n - p, j));
        }
    }
    let index: BTreeMap<_, _> = basis.iter().enumerate().map(|(i, b)| (*b, i)).collect();
    let v = PolyA::constant(v.clone());
    let mut matrix = vec![vec![Rational::zero(); basis.len()]; basis.len()];
    for (col, &(p, q, j)) in basis.iter().enumerate() {
        let mut s = vec![XYPoly::zero(); module.rank()];
        s[j] = XYPoly::monomial(Rational::one(), p, q);
        for (i, fi) in module.apply(u, &v, &s).iter().enumerate() {
            for ((p2, q2), c) in fi.terms() {
                matrix[index[&(p2, q2, i)]][col] = c.clone();
            }
        }
    }
    GradedPieceAction { basis, matrix }
}

fn constant_entries(m: &PolyMatrix) -> Vec<Vec<Rational>> {
    m.rows()
        .iter()
        .map(|r| r.iter().map(|x| x.coeff(0)).collect())
        .collect()
}

/// Index `(i, j, p, q)`: the map `v_j -> x^p y^q v'_i`.
type HomBasis = (usize, usize, u32, u32);

struct HomOperators {
    e_src: Vec<Vec<Rational>>,
    e_tgt: Vec<Vec<Rational>>,
    /// Diagonal of `pi(V)` on source and target.
    v_src: Vec<Rational>,
    v_tgt: Vec<Rational>,
}

impl HomOperators {
    fn new(p: CoweightPair, p2: CoweightPair) -> Self {
        let g = PGroupData::new();
        let src = irrep(p);
        let tgt = irrep(p2);
        let diag = |m: Vec<Vec<Rational>>| (0..m.len()).map(|i| m[i][i].clone()).collect();
        Self {
            e_src: constant_entries(&act(&src, &g.u_generator)),
            e_tgt: constant_entries(&act(&tgt, &g.u_generator)),
            v_src: diag(constant_entries(&act(&src, &g.v_generator))),
            v_tgt: diag(constant_entries(&act(&tgt, &g.v_generator))),
        }
    }

    /// Eigenvalue of `Phi -> L_V Phi - pi'(V) Phi + Phi pi(V)` on a basis map.
    fn v_weight(&self, b: HomBasis) -> Rational {
        let (i, j, _, q) = b;
        -int(q as i64) - &self.v_tgt[i] + &self.v_src[j]
    }

    /// `Phi -> L_U Phi - pi'(U) Phi + Phi pi(U)` on a basis map.
    fn u_image(&self, b: HomBasis) -> Vec<(HomBasis, Rational)> {
        let (i, j, p, q) = b;
        let mut out = Vec::new();
        if q > 0 {
            out.push(((i, j, p + 1, q - 1), -int(q as i64)));
        }
        for (r, row) in self.e_tgt.iter().enumerate() {
            if !row[i].is_zero() {
                out.push(((r, j, p, q), -row[i].clone()));
            }
        }
        for (s, x) in self.e_src[j].iter().enumerate() {
            if !x.is_zero() {
                out.push(((i, s, p, q), x.clone()));
            }
        }
        out
    }
}

fn hom_basis(p: CoweightPair, p2: CoweightPair, n: u32) -> Vec<HomBasis> {
    let mut out = Vec::new();
    for i in 0..p2.dim() {
        for j in 0..p.dim() {
            for a in 0..=n {
                out.push((i, j, a, n - a));
            }
        }
    }
    out
}

/// Dimension of the invariant maps `O ⊗ V(p) -> O ⊗ V(p2)` of polynomial
/// degree `n`: first restrict to the `D_V`-kernel (diagonal), then take the
/// kernel of `D_U` there.
pub fn equivariant_hom_piece(p: CoweightPair, p2: CoweightPair, n: u32) -> usize {
    let ops = HomOperators::new(p, p2);
    let weight_zero: Vec<HomBasis> = hom_basis(p, p2, n)
        .into_iter()
        .filter(|b| ops.v_weight(*b).is_zero())
        .collect();
    if weight_zero.is_empty() {
        return 0;
    }
    let mut rows: BTreeMap<HomBasis, Vec<(usize, Rational)>> = BTreeMap::new();
    for (col, b) in weight_zero.iter().enumerate() {
        for (target, c) in ops.u_image(*b) {
            rows.entry(target).or_default().push((col, c));
        }
    }
    let mut m = SparseMatrix::new(weight_zero.len());
    for r in rows.into_values() {
        m.push_row(r);
    }
    weight_zero.len() - rank(&m)
}

/// Same dimension computed on the full degree-`n` space with both operators
/// stacked; used as an independent check of the diagonal shortcut.
pub fn equivariant_hom_piece_stacked(p: CoweightPair, p2: CoweightPair, n: u32) -> usize {
    let ops = HomOperators::new(p, p2);
    let basis = hom_basis(p, p2, n);
    let index: BTreeMap<HomBasis, usize> = basis.iter().enumerate().map(|(i, b)| (*b, i)).collect();
    let mut rows: BTreeMap<(u8, usize), Vec<(usize, Rational)>> = BTreeMap::new();
    for (col, b) in basis.iter().enumerate() {
        rows.entry((0, col)).or_default().push((col, ops.v_weight(*b)));
        for (target, c) in ops.u_image(*b) {
            rows.entry((1, index[&target])).or_default().push((col, c));
        }
    }
    let mut m = SparseMatrix::new(basis.len());
    for r in rows.into_values() {
        m.push_row(r);
    }
    kernel(&m).len()
}

/// Graded dimensions of `Hom_P(O ⊗ V(p), O ⊗ V(p2))` for degrees
/// `-(lam + lam')` through `max_degree`. A map of polynomial degree `n`
/// has degree `2n + mu' - mu`.
pub fn equivariant_hom_graded(p: CoweightPair, p2: CoweightPair, max_degree: i64) -> GradedDimTable {
    let mut table = GradedDimTable::default();
    for d in -(p.lam() + p2.lam())..=max_degree {
        let twice_n = d - p2.mu() + p.mu();
        let dim = if twice_n >= 0 && twice_n % 2 == 0 {
            equivariant_hom_piece(p, p2, (twice_n / 2) as u32)
        } else {
            0
        };
        table.insert(d, dim);
    }
    table
}

/// Three-way Hom comparison for one pair of pairs: closed form against the
/// `C[a, c]` oracle (including generator and annihilator checks), and the
/// `P`-equivariant dimensions against both. Returns the discrepancies.
pub fn check_three_way(p: CoweightPair, p2: CoweightPair, max_degree: i64) -> Vec<String> {
    three_way_hom(p, p2, max_degree).failures
}

/// Hom dimensions from the closed formula, the `C[a,c]` oracle and the
/// P-equivariant side, with every disagreement found between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeWayHom {
    pub formula: HomDescription,
    pub oracle: GradedDimTable,
    pub equivariant: GradedDimTable,
    pub failures: Vec<String>,
}

pub fn three_way_hom(p: CoweightPair, p2: CoweightPair, max_degree: i64) -> ThreeWayHom {
    let (mut failures, oracle) = check_hom_case_with_oracle(p, p2, max_degree);
    let formula = hom_formula_to(p, p2, max_degree);
    let equivariant = equivariant_hom_graded(p, p2, max_degree);
    for (d, dim) in equivariant.iter() {
        if dim != oracle.dims.get(d) || dim as i64 != formula.hilbert_series.coeff(d) {
            failures.push(format!(
                "Hom(M{p}, M{p2}) degree {d}: P-side {dim}, oracle {}, formula {}",
                oracle.dims.get(d),
                formula.hilbert_series.coeff(d)
            ));
        }
    }
    if equivariant.degrees().ne(oracle.dims.degrees()) {
        failures.push(format!("Hom(M{p}, M{p2}): degree ranges differ"));
    }
    ThreeWayHom {
        formula,
        oracle: oracle.dims,
        equivariant,
        failures,
    }
}

/// Restriction of `O ⊗ V(pair)` to the line `y = -1`, as a graded
/// `C[a, c]`-module with `a = x / 2` and `c` acting by the stabiliser
/// element `[[0, 1], [0, x]]` of the point `(x, -1)`.
#[allow(non_snake_case)]
pub fn tilde_F(pair: CoweightPair) -> FreeCModel {
    let module = PEquivFreeModule::new(pair);
    let n = module.rank();
    let u = int(1);
    let v = PolyA::a();
    let minus_one = int(-1);
    let mut c = PolyMatrix::zeros(n, n);
    for j in 0..n {
        let mut s = vec![XYPoly::zero(); n];
        s[j] = XYPoly::monomial(Rational::one(), 0, 0);
        let image = module.apply(&u, &v, &s);
        for (i, fi) in image.iter().enumerate() {
            // c acts by -D_A; rewrite x as 2a.
            let entry = fi.at_y(&minus_one).scale(&int(-1));
            c.set(i, j, x_to_two_a(&entry));
        }
    }
    let degrees = (0..n).map(|j| module.degree(0, 0, j)).collect();
    FreeCModel::new(degrees, c).expect("restriction is graded")
}

/// Whether `D_A` for the stabiliser element preserves the submodule
/// `(y + 1)`, so that it descends to the restriction. Checked on
/// `(y + 1) x^p y^q ⊗ v_j` for `p + q <= max_deg`.
pub fn restriction_is_well_defined(pair: CoweightPair, max_deg: u32) -> bool {
    let module = PEquivFreeModule::new(pair);
    let y_plus_one = XYPoly::y().add(&XYPoly::monomial(int(1), 0, 0));
    let v = PolyA::a();
    for j in 0..module.rank() {
        for total in 0..=max_deg {
            for p in 0..=total {
                let mut s = vec![XYPoly::zero(); module.rank()];
                s[j] = y_plus_one.mul(&XYPoly::monomial(int(1), p, total - p));
                let image = module.apply(&int(1), &v, &s);
                if image.iter().any(|f| !f.at_y(&int(-1)).is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

fn x_to_two_a(p: &PolyA) -> PolyA {
    PolyA::from_terms(p.terms().map(|(e, c)| (e, c * int(2).pow(e as i32))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizerReport {
    /// Stabiliser of `(2a, -1)` in `Lie(P)` is the line through `T(a)`.
    pub generic_line: bool,
    /// At `a = 0` it is spanned by `[[0, 1], [0, 0]]`.
    pub specialization: bool,
    /// The line direction and the `Lie(P)` directions span the tangent plane.
    pub tangent_rank: bool,
    /// `P` applied to the line `{(x, -1)}` covers a grid of nonzero points
    /// and never reaches the origin.
    pub orbit_cover: bool,
}

impl StabilizerReport {
    pub fn passed(&self) -> bool {
        self.generic_line && self.specialization && self.tangent_rank && self.orbit_cover
    }
}

/// Rank of a matrix over `Q(a)`, computed at enough points to detect every
/// nonzero maximal minor of the entries' degrees involved here.
fn generic_rank(rows: &[Vec<PolyA>]) -> usize {
    (1..=8)
        .map(|t| {
            let x = int(t);
            let ncols = rows.first().map_or(0, |r| r.len());
            let dense: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|p| p.eval(&x)).collect()).collect();
            rank(&SparseMatrix::from_dense(&dense, ncols))
        })
        .max()
        .unwrap_or(0)
}

pub fn stabilizer_check() -> StabilizerReport {
    // A (x, y) = (0, -ux - vy); at (2a, -1) the second entry is -2a u + v.
    let row = [PolyA::monomial(int(-2), 1), PolyA::one()];
    // Kernel of a nonzero 1x2 row over Q(a) is spanned by (r1, -r0).
    let k = [row[1].clone(), -row[0].clone()];
    let t = GL2Element::t_matrix();
    let generic_line = generic_rank(&[row.to_vec()]) == 1
        && &k[0] * t.entry(1, 1) == &k[1] * t.entry(0, 1)
        && !k[0].is_zero();

    let zero = int(0);
    let row0: Vec<Rational> = row.iter().map(|p| p.eval(&zero)).collect();
    let ker0 = kernel(&SparseMatrix::from_dense(&[row0], 2));
    let specialization = ker0.len() == 1 && ker0[0][1].is_zero() && !ker0[0][0].is_zero();

    // Columns: d/dx along the line, then the u and v directions.
    let tangent = vec![
        vec![PolyA::one(), PolyA::zero(), PolyA::zero()],
        vec![PolyA::zero(), PolyA::monomial(int(-2), 1), PolyA::one()],
    ];
    let at_zero: Vec<Vec<PolyA>> = tangent
        .iter()
        .map(|r| r.iter().map(|p| PolyA::constant(p.eval(&zero))).collect())
        .collect();
    let tangent_rank = generic_rank(&tangent) == 2 && generic_rank(&at_zero) == 2;

    let mut orbit_cover = true;
    for xt in -3..=3 {
        for yt in -3..=3 {
            let (xt, yt) = (int(xt), int(yt));
            let reached = if !xt.is_zero() {
                // beta = 1, alpha = -(1 + Y) / X.
                let alpha = -(&yt + int(1)) / &xt;
                Some((alpha, int(1)))
            } else if !yt.is_zero() {
                Some((int(0), -int(1) / &yt))
            } else {
                None
            };
            match reached {
                Some((alpha, beta)) => {
                    let img = PGroupData::act_on_point(&alpha, &beta, (&xt, &int(-1)));
                    orbit_cover &= img == (xt.clone(), yt.clone());
                }
                // Any image of (0, -1) has second coordinate -1/β ≠ 0.
                None => orbit_cover &= xt.is_zero() && yt.is_zero(),
            }
        }
    }
    StabilizerReport {
        generic_line,
        specialization,
        tangent_rank,
        orbit_cover,
    }
}

/// Monomial `v1^a v2^b w1^c w2^d` on `V × V*`.
pub type Mono4 = [u32; 4];

/// Polynomial on `V × V*` in coordinates `(v1, v2, w1, w2)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly4 {
    coeffs: BTreeMap<Mono4, Rational>,
}

impl Poly4 {
    pub fn var(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        Self::from_terms([(e, int(1))])
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_terms([([0; 4], c)])
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono4, Rational)>>(terms: I) -> Self {
        let mut out = Self::default();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    /// The pairing `p = v*(v) = v1 w1 + v2 w2`.
    pub fn pairing() -> Self {
        Self::from_terms([([1, 0, 1, 0], int(1)), ([0, 1, 0, 1], int(1))])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono4, &Rational)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, e: Mono4, c: Rational) {
        if c.is_zero() {
            return;
        }
        let x = self.coeffs.entry(e).or_insert_with(Rational::zero);
        *x += c;
        if x.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::constant(int(1)), |acc, _| acc.mul(self))
    }

    /// `E_kl` acting on functions: `v_l ∂/∂v_k - w_k ∂/∂w_l`.
    pub fn gl2_action(&self, k: usize, l: usize) -> Self {
        let mut out = Self::default();
        for (e, c) in self.terms() {
            if e[k] > 0 {
                let mut f = *e;
                f[k] -= 1;
                f[l] += 1;
                out.add_term(f, c * int(e[k] as i64));
            }
            if e[2 + l] > 0 {
                let mut f = *e;
                f[2 + l] -= 1;
                f[2 + k] += 1;
                out.add_term(f, -c * int(e[2 + l] as i64));
            }
        }
        out
    }

    /// Substitutes `v = (1, 0)`, `w = (x, -1)`.
    pub fn restrict_to_s(&self) -> PolyA {
        let mut out = PolyA::zero();
        for (e, c) in self.terms() {
            if e[1] > 0 {
                continue;
            }
            let sign = if e[3] % 2 == 0 { int(1) } else { int(-1) };
            out.add_term(e[2], c * sign);
        }
        out
    }

    pub fn eval(&self, pt: &[Rational; 4]) -> Rational {
        self.terms()
            .map(|(e, c)| {
                (0..4).fold(c.clone(), |acc, i| {
                    (0..e[i]).fold(acc, |a, _| a * &pt[i])
                })
            })
            .sum()
    }
}

/// Monomials of bidegree `(d1, d2)`.
fn bidegree_monomials(d1: u32, d2: u32) -> Vec<Mono4> {
    let mut out = Vec::new();
    for a in 0..=d1 {
        for c in 0..=d2 {
            out.push([a, d1 - a, c, d2 - c]);
        }
    }
    out
}

const GL2_BASIS: [(usize, usize); 4] = [(0, 0), (0, 1), (1, 0), (1, 1)];

#[derive(Clone, Debug, PartialEq)]
pub struct InvariantSpace {
    pub dim: usize,
    pub basis: Vec<Poly4>,
}

/// GL(2)-invariant polynomials of bidegree `(d1, d2)`: the joint kernel of
/// the four elementary matrices.
pub fn gl2_invariants_bidegree(d1: u32, d2: u32) -> InvariantSpace {
    let monos = bidegree_monomials(d1, d2);
    let index: BTreeMap<Mono4, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows: BTreeMap<(usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
    for (col, m) in monos.iter().enumerate() {
        let f = Poly4::from_terms([(*m, int(1))]);
        for (g, &(k, l)) in GL2_BASIS.iter().enumerate() {
            for (e, c) in f.gl2_action(k, l).terms() {
                rows.entry((g, index[e])).or_default().push((col, c.clone()));
            }
        }
    }
    let mut sys = SparseMatrix::new(monos.len());
    for r in rows.into_values() {
        sys.push_row(r);
    }
    let basis: Vec<Poly4> = kernel(&sys)
        .into_iter()
        .map(|v| Poly4::from_terms(monos.iter().copied().zip(v)))
        .collect();
    InvariantSpace {
        dim: basis.len(),
        basis,
    }
}

/// Checks that the invariants of bidegree `(d1, d2)` are `C p^d1` when
/// `d1 = d2` and zero otherwise, with `p = v*(v)`.
pub fn pairing_power_failures(d1: u32, d2: u32) -> Vec<String> {
    let space = gl2_invariants_bidegree(d1, d2);
    let expected = usize::from(d1 == d2);
    if space.dim != expected {
        return vec![format!("bidegree ({d1}, {d2}): dim {} != {expected}", space.dim)];
    }
    if d1 != d2 {
        return Vec::new();
    }
    let power = Poly4::pairing().pow(d1);
    let b = &space.basis[0];
    let proportional = b.terms().next().is_some_and(|(mono, c)| {
        power
            .terms()
            .find(|(m, _)| *m == mono)
            .is_some_and(|(_, x)| *b == power.mul(&Poly4::constant(c / x)))
    });
    if proportional {
        Vec::new()
    } else {
        vec![format!("bidegree ({d1}, {d1}): invariant is not a multiple of p^{d1}")]
    }
}

fn bidegree_count(d1: i64, d2: i64) -> usize {
    if d1 < 0 || d2 < 0 {
        0
    } else {
        ((d1 + 1) * (d2 + 1)) as usize
    }
}

/// Invariants of `O(V × V*) / (p^N)` in bidegree `(d1, d2)`.
///
/// Unknowns are `F` of bidegree `(d1, d2)` and, for each generator `X`, a
/// cofactor `G_X` of bidegree `(d1 - N, d2 - N)` with `X F = p^N G_X`. The
/// solution space projects isomorphically onto the admissible `F` (the
/// cofactors are determined by `F`), and the invariants of the quotient are
/// those `F` modulo the ideal's own piece `p^N R_{d1-N, d2-N}`.
fn quotient_invariants_bidegree(n: u32, d1: u32, d2: u32) -> usize {
    let monos = bidegree_monomials(d1, d2);
    let index: BTreeMap<Mono4, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let (e1, e2) = (d1 as i64 - n as i64, d2 as i64 - n as i64);
    let cof = if e1 >= 0 && e2 >= 0 {
        bidegree_monomials(e1 as u32, e2 as u32)
    } else {
        Vec::new()
    };
    let nf = monos.len();
    let ncols = nf + 4 * cof.len();
    let pn = Poly4::pairing().pow(n);
    let mut rows: BTreeMap<(usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
    for (col, m) in monos.iter().enumerate() {
        let f = Poly4::from_terms([(*m, int(1))]);
        for (g, &(k, l)) in GL2_BASIS.iter().enumerate() {
            for (e, c) in f.gl2_action(k, l).terms() {
                rows.entry((g, index[e])).or_default().push((col, c.clone()));
            }
        }
    }
    for g in 0..4 {
        for (t, m) in cof.iter().enumerate() {
            let col = nf + g * cof.len() + t;
            for (e, c) in pn.mul(&Poly4::from_terms([(*m, int(1))])).terms() {
                rows.entry((g, index[e])).or_default().push((col, -c.clone()));
            }
        }
    }
    let mut sys = SparseMatrix::new(ncols);
    for r in rows.into_values() {
        sys.push_row(r);
    }
    let solutions = ncols - rank(&sys);
    solutions - bidegree_count(e1, e2)
}

/// Graded dimensions (by total degree `d1 + d2`) of the GL(2)-invariants of
/// `O(V × V*) / (p^N)` through total degree `dmax`; `None` means the full
/// ring.
#[allow(non_snake_case)]
pub fn invariants_of_Z_quotient(n: Option<u32>, dmax: u32) -> GradedDimTable {
    let mut table = GradedDimTable::default();
    for total in 0..=dmax {
        let mut dim = 0;
        for d1 in 0..=total {
            let d2 = total - d1;
            dim += match n {
                Some(n) => quotient_invariants_bidegree(n, d1, d2),
                None => gl2_invariants_bidegree(d1, d2).dim,
            };
        }
        table.insert(total as i64, dim);
    }
    table
}

/// GL(V)-orbits on `V × V*`, with the generic ones merged under dilation of
/// the second factor.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Stratum {
    Origin,
    /// `v* = 0`, `v ≠ 0`.
    VStarZero,
    /// `v = 0`, `v* ≠ 0`.
    VZero,
    /// `v*(v) = 0` with both nonzero.
    ZGeneric,
    /// `v*(v) ≠ 0`.
    Generic,
}

impl Stratum {
    pub const ALL: [Stratum; 5] = [
        Stratum::Origin,
        Stratum::VStarZero,
        Stratum::VZero,
        Stratum::ZGeneric,
        Stratum::Generic,
    ];

    fn bit(self) -> u8 {
        1 << (self as u8)
    }

    /// A point of the stratum, as `(v1, v2, w1, w2)`.
    pub fn representative(self) -> [Rational; 4] {
        let r = |a: [i64; 4]| a.map(int);
        match self {
            Stratum::Origin => r([0, 0, 0, 0]),
            Stratum::VStarZero => r([1, 0, 0, 0]),
            Stratum::VZero => r([0, 0, 1, 0]),
            Stratum::ZGeneric => r([1, 0, 0, 1]),
            Stratum::Generic => r([1, 0, 1, 0]),
        }
    }
}

/// A closed, GL(V)- and dilation-invariant subset of `V × V*`, stored as
/// the set of strata it contains.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InvariantSupportLabel(u8);

impl InvariantSupportLabel {
    pub const EMPTY: Self = Self(0);
    pub const ORIGIN: Self = Self(0b00001);
    pub const V_STAR_ZERO: Self = Self(0b00011);
    pub const V_ZERO: Self = Self(0b00101);
    pub const Z_V: Self = Self(0b01111);
    pub const FULL: Self = Self(0b11111);

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn contains(self, s: Stratum) -> bool {
        self.0 & s.bit() != 0
    }

    pub fn strata(self) -> Vec<Stratum> {
        Stratum::ALL.into_iter().filter(|s| self.contains(*s)).collect()
    }

    /// The six named labels.
    pub fn named() -> [(&'static str, Self); 6] {
        [
            ("EMPTY", Self::EMPTY),
            ("ORIGIN", Self::ORIGIN),
            ("V_STAR_ZERO", Self::V_STAR_ZERO),
            ("V_ZERO", Self::V_ZERO),
            ("Z_V", Self::Z_V),
            ("FULL", Self::FULL),
        ]
    }

    /// Closure of the named labels under union.
    pub fn lattice() -> Vec<Self> {
        let mut out: Vec<Self> = Self::named().iter().map(|(_, l)| *l).collect();
        let mut i = 0;
        while i < out.len() {
            for j in 0..out.len() {
                let u = out[i].union(out[j]);
                if !out.contains(&u) {
                    out.push(u);
                }
            }
            i += 1;
        }
        out.sort();
        out
    }

    pub fn name(self) -> String {
        if let Some((n, _)) = Self::named().iter().find(|(_, l)| *l == self) {
            return (*n).to_string();
        }
        // Unions of named labels: list the maximal named pieces.
        let parts: Vec<&str> = Self::named()
            .iter()
            .filter(|(_, l)| *l != Self::EMPTY && l.0 & !self.0 == 0)
            .filter(|(_, l)| {
                !Self::named()
                    .iter()
                    .any(|(_, m)| *m != *l && m.0 & !self.0 == 0 && m.0 & l.0 == l.0)
            })
            .map(|(n, _)| *n)
            .collect();
        parts.join("|")
    }

    pub fn parse(s: &str) -> Option<Self> {
        s.split('|').try_fold(Self::EMPTY, |acc, part| {
            let part = part.trim().to_ascii_uppercase();
            Self::named()
                .iter()
                .find(|(n, _)| *n == part)
                .map(|(_, l)| acc.union(*l))
        })
    }

    /// Generators of an ideal with this zero set. Named labels use their
    /// defining equations; unions use products of generators.
    pub fn ideal_generators(self) -> Vec<Poly4> {
        let base = |l: Self| -> Vec<Poly4> {
            match l {
                Self::EMPTY => vec![Poly4::constant(int(1))],
                Self::ORIGIN => (0..4).map(Poly4::var).collect(),
                Self::V_STAR_ZERO => vec![Poly4::var(2), Poly4::var(3)],
                Self::V_ZERO => vec![Poly4::var(0), Poly4::var(1)],
                Self::Z_V => vec![Poly4::pairing()],
                Self::FULL => vec![],
                _ => unreachable!("not a named label"),
            }
        };
        if let Some((_, l)) = Self::named().iter().find(|(_, l)| *l == self) {
            return base(*l);
        }
        // A union of named labels that are not comparable.
        let pieces: Vec<Self> = Self::named()
            .iter()
            .map(|(_, l)| *l)
            .filter(|l| *l != Self::EMPTY && l.0 & !self.0 == 0)
            .collect();
        let maximal: Vec<Self> = pieces
            .iter()
            .copied()
            .filter(|l| !pieces.iter().any(|m| m != l && m.0 & l.0 == l.0))
            .collect();
        maximal.iter().fold(vec![Poly4::constant(int(1))], |acc, l| {
            let gens = base(*l);
            acc.iter()
                .flat_map(|a| gens.iter().map(move |g| a.mul(g)))
                .collect()
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportClassification {
    pub contained_in_z: bool,
    /// Dimension of the intersection with `S = {v = (1, 0), v* = (x, -1)}`;
    /// `-1` when empty.
    pub intersection_with_s_dim: i64,
}

pub fn classify_invariant_support(label: InvariantSupportLabel) -> SupportClassification {
    let contained_in_z = !label.contains(Stratum::Generic);
    let restricted: Vec<PolyA> = label
        .ideal_generators()
        .iter()
        .map(Poly4::restrict_to_s)
        .filter(|p| !p.is_zero())
        .collect();
    let intersection_with_s_dim = match restricted.split_first() {
        None => 1,
        Some((first, rest)) => {
            let g = rest.iter().fold(first.clone(), |acc, p| acc.gcd(p));
            if g.degree() == Some(0) {
                -1
            } else {
                0
            }
        }
    };
    SupportClassification {
        contained_in_z,
        intersection_with_s_dim,
    }
}

/// Whether the label's ideal generators vanish exactly on its strata
/// (checked at one representative per stratum).
pub fn zero_set_matches(label: InvariantSupportLabel) -> bool {
    let gens = label.ideal_generators();
    Stratum::ALL.iter().all(|s| {
        let pt = s.representative();
        let vanishes = gens.iter().all(|g| g.eval(&pt).is_zero());
        vanishes == label.contains(*s)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology_modules::{hom_oracle, standard_module};

    fn pair(l: i64, m: i64) -> CoweightPair {
        CoweightPair::new(l, m).unwrap()
    }

    #[test]
    fn lie_action_examples() {
        let m = PEquivFreeModule::new(pair(0, 0));
        let v0 = PolyA::zero();
        for (u, v) in [(1, 0), (0, 1), (3, -2)] {
            let out = m.apply(&int(u), &PolyA::constant(int(v)), &[XYPoly::x()]);
            assert!(out[0].is_zero());
        }
        let out = m.apply(&int(1), &v0, &[XYPoly::y()]);
        assert_eq!(out[0], XYPoly::x().scale(&int(-1)));
        let y2 = XYPoly::y().mul(&XYPoly::y());
        let out = m.apply(&int(0), &PolyA::one(), std::slice::from_ref(&y2));
        assert_eq!(out[0], y2.scale(&int(-2)));
    }

    #[test]
    fn derivation_is_leibniz() {
        let field = XYPoly::x().scale(&int(-2)).add(&XYPoly::y().scale(&int(3)));
        let f = XYPoly::monomial(int(2), 1, 2).add(&XYPoly::y());
        let g = XYPoly::monomial(int(-1), 0, 3).add(&XYPoly::monomial(int(5), 2, 1));
        let lhs = derivation(&field, &f.mul(&g));
        let rhs = derivation(&field, &f).mul(&g).add(&f.mul(&derivation(&field, &g)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn graded_piece_matrix_is_square_and_preserves_degree() {
        let m = PEquivFreeModule::new(pair(2, 0));
        let a = lie_p_action(&m, &int(1), &int(0), 3);
        assert_eq!(a.basis.len(), 12);
        assert_eq!(a.matrix.len(), 12);
    }

    #[test]
    fn equivariant_hom_examples() {
        let t = equivariant_hom_graded(pair(0, 0), pair(0, 0), 10);
        for d in 0..=10 {
            assert_eq!(t.get(d), if d % 2 == 0 { 1 } else { 0 });
        }
        let t = equivariant_hom_graded(pair(0, 0), pair(0, 2), 10);
        assert!(t.iter().all(|(_, n)| n == 0));
        let t = equivariant_hom_graded(pair(1, 1), pair(1, -1), 10);
        let o = hom_oracle(&standard_module(pair(1, 1)), &standard_module(pair(1, -1)), 10);
        assert_eq!(t, o.dims);
    }

    #[test]
    fn diagonal_shortcut_matches_stacked_kernel() {
        for p in CoweightPair::enumerate(2, 2) {
            for p2 in CoweightPair::enumerate(2, 2) {
                for n in 0..4 {
                    assert_eq!(
                        equivariant_hom_piece(p, p2, n),
                        equivariant_hom_piece_stacked(p, p2, n),
                        "{p} {p2} {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn three_way_small() {
        for p in CoweightPair::enumerate(2, 2) {
            for p2 in CoweightPair::enumerate(2, 2) {
                let f = check_three_way(p, p2, 12);
                assert!(f.is_empty(), "{f:?}");
            }
        }
    }

    #[test]
    fn tilde_f_examples() {
        for p in [pair(0, 0), pair(1, 1), pair(2, 0), pair(3, -3)] {
            assert_eq!(tilde_F(p), standard_module(p), "{p}");
            assert!(restriction_is_well_defined(p, 3));
        }
    }

    #[test]
    fn stabilizer() {
        let r = stabilizer_check();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn invariants_by_bidegree() {
        let s = gl2_invariants_bidegree(0, 0);
        assert_eq!(s.dim, 1);
        let s = gl2_invariants_bidegree(1, 1);
        assert_eq!(s.dim, 1);
        let b = &s.basis[0];
        let c = b.terms().next().unwrap().1.clone();
        assert_eq!(*b, Poly4::pairing().mul(&Poly4::constant(c)));
        assert_eq!(gl2_invariants_bidegree(2, 1).dim, 0);
    }

    #[test]
    fn z_quotient_totals() {
        let total = |t: &GradedDimTable| t.iter().map(|(_, n)| n).sum::<usize>();
        assert_eq!(total(&invariants_of_Z_quotient(Some(1), 8)), 1);
        assert_eq!(total(&invariants_of_Z_quotient(Some(3), 12)), 3);
        let full = invariants_of_Z_quotient(None, 8);
        for d in 0..=8 {
            assert_eq!(full.get(d), usize::from(d % 2 == 0));
        }
    }

    #[test]
    fn support_examples() {
        let c = classify_invariant_support(InvariantSupportLabel::Z_V);
        assert_eq!((c.contained_in_z, c.intersection_with_s_dim), (true, 0));
        let c = classify_invariant_support(InvariantSupportLabel::FULL);
        assert_eq!((c.contained_in_z, c.intersection_with_s_dim), (false, 1));
        let c = classify_invariant_support(InvariantSupportLabel::V_ZERO);
        assert_eq!((c.contained_in_z, c.intersection_with_s_dim), (true, -1));
    }

    #[test]
    fn support_lattice() {
        let lattice = InvariantSupportLabel::lattice();
        assert_eq!(lattice.len(), 7);
        for l in &lattice {
            assert!(zero_set_matches(*l), "{}", l.name());
            assert_eq!(InvariantSupportLabel::parse(&l.name()), Some(*l));
            let c = classify_invariant_support(*l);
            assert_eq!(c.contained_in_z, c.intersection_with_s_dim <= 0, "{}", l.name());
        }
        let u = InvariantSupportLabel::V_ZERO.union(InvariantSupportLabel::V_STAR_ZERO);
        assert_eq!(u.name(), "V_STAR_ZERO|V_ZERO");
    }
}
