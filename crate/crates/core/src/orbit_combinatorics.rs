//! Orbit combinatorics on the affine Grassmannian.
//!
//! `O^x`-orbits on `Gr_SL(2)` are labelled by pairs `(m, l)` with
//! `l - 2m <= 0`; the orbit through `[[1, z^l], [0, 1]] * diag(z^m, z^-m)`
//! has stabiliser `1 + z^{2m-l} O` and dimension `2m - l`. Dominant GL(2)
//! coweights embed into these labels at each level `k`, and closures of
//! translated orbits are recorded by their sets of `C^x`-fixed points.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::rep_gl2::CoweightPair;
use crate::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitLabel {
    m: i64,
    l: i64,
}

impl OrbitLabel {
    pub fn new(m: i64, l: i64) -> Result<Self> {
        if l - 2 * m > 0 {
            return Err(Error::InvalidOrbitLabel { m, l });
        }
        Ok(Self { m, l })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn l(&self) -> i64 {
        self.l
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitData {
    pub label: OrbitLabel,
    pub dim: i64,
    pub stabilizer_level: i64,
}

impl OrbitData {
    /// Whether the orbit carries a nonzero equivariant sheaf for a character
    /// of conductor `k`: the character must be trivial on the stabiliser.
    pub fn supports(&self, k: i64) -> bool {
        self.stabilizer_level >= k
    }
}

pub fn orbit(m: i64, l: i64) -> Result<OrbitData> {
    let label = OrbitLabel::new(m, l)?;
    let level = 2 * m - l;
    Ok(OrbitData {
        label,
        dim: level,
        stabilizer_level: level,
    })
}

/// A dominant GL(2) coweight `(n1, n2)`, `n1 >= n2`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DominantGL2Coweight {
    n1: i64,
    n2: i64,
}

impl DominantGL2Coweight {
    pub fn new(n1: i64, n2: i64) -> Result<Self> {
        if n1 < n2 {
            return Err(Error::NotDominant { n1, n2 });
        }
        Ok(Self { n1, n2 })
    }

    pub fn n1(&self) -> i64 {
        self.n1
    }

    pub fn n2(&self) -> i64 {
        self.n2
    }

    /// `n = n1 + n2`.
    pub fn n(&self) -> i64 {
        self.n1 + self.n2
    }

    /// Dimension of the GL(2) orbit `Gr^lam`, namely `n1 - n2`.
    pub fn orbit_dim(&self) -> i64 {
        self.n1 - self.n2
    }

    /// Dominant coweights with `|n1|, |n2| <= bound`.
    pub fn enumerate(bound: i64) -> Vec<Self> {
        let mut out = Vec::new();
        for n2 in -bound..=bound {
            for n1 in n2..=bound {
                out.push(Self { n1, n2 });
            }
        }
        out
    }
}

/// The orbit label of `Y_lam ∩ Gr_SL(2)` at level `k`:
/// `(m, l) = (-n2, -k - n1 - n2)`.
pub fn iota(k: i64, lam: DominantGL2Coweight) -> Result<OrbitLabel> {
    if k <= 0 {
        return Err(Error::InvalidLevel(k));
    }
    OrbitLabel::new(-lam.n2, -k - lam.n())
}

/// Inverse of [`iota`]: the dominant coweight mapping to `label`, if any.
pub fn iota_preimage(k: i64, label: OrbitLabel) -> Option<DominantGL2Coweight> {
    let n2 = -label.m;
    let n1 = -k - label.l - n2;
    DominantGL2Coweight::new(n1, n2).ok()
}

/// `S(lam, mu) = {mu - lam, mu - lam + 2, ..., mu + lam}`: the fixed points
/// `z^nu` in the closure of `z^mu Gr^lam`, and also the eigenvalues of
/// `c / a` on the cohomology module `M(lam, mu)`.
pub fn s_set(pair: CoweightPair) -> Vec<i64> {
    (0..=pair.lam())
        .map(|i| pair.mu() - pair.lam() + 2 * i)
        .collect()
}

/// The pair whose closure is the intersection of the two closures, or
/// `None` when the intersection is empty.
pub fn closure_intersection(p: CoweightPair, p2: CoweightPair) -> Option<CoweightPair> {
    let (lo, hi) = intersection_bounds(p, p2)?;
    let out = CoweightPair::new((hi - lo) / 2, (hi + lo) / 2)
        .expect("endpoints of an intersection of even sets give a valid pair");
    Some(out)
}

/// Smallest and largest element of `S ∩ S'`.
fn intersection_bounds(p: CoweightPair, p2: CoweightPair) -> Option<(i64, i64)> {
    let lo = (p.mu() - p.lam()).max(p2.mu() - p2.lam());
    let hi = (p.mu() + p.lam()).min(p2.mu() + p2.lam());
    // Both progressions have step 2 and even elements, so any overlap of the
    // hulls is an overlap of the sets.
    (lo <= hi).then_some((lo, hi))
}

/// Set intersection of the two S-sets, computed elementwise.
pub fn s_set_intersection(p: CoweightPair, p2: CoweightPair) -> Vec<i64> {
    let other: BTreeSet<i64> = s_set(p2).into_iter().collect();
    s_set(p).into_iter().filter(|x| other.contains(x)).collect()
}

/// Checks that every S-set consists of even numbers and that the S-set
/// determines the pair, for all pairs with `lam, |mu| <= range`.
pub fn fixed_point_bijection_check(range: i64) -> bool {
    let mut seen: HashMap<Vec<i64>, CoweightPair> = HashMap::new();
    for p in CoweightPair::enumerate(range, range) {
        let s = s_set(p);
        if s.iter().any(|x| x.rem_euclid(2) != 0) {
            return false;
        }
        if let Some(prev) = seen.insert(s, p) {
            if prev != p {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportDimensionReport {
    pub k: i64,
    pub coweights_checked: usize,
    pub orbits_checked: usize,
    /// `dim X_0` at this level.
    pub base_orbit_dim: i64,
    pub failures: Vec<String>,
}

impl SupportDimensionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the dimension and support conditions at level `k`:
///
/// 1. `dim iota(k, lam) = k + n1 - n2`;
/// 2. `dim X_0 + dim Gr^lam = dim X_lam`, with `dim X_0 = k`;
/// 3. an orbit supports level-`k` sheaves iff it lies in the image of `iota`,
///    and every supporting orbit has dimension at least `k`.
///
/// Coweights range over `|n1|, |n2| <= lam_range`; condition 3 is checked on
/// every orbit label with `|m| <= lam_range` and `2m - l <= k + 2 lam_range + 2`.
pub fn check_support_dimension_conditions(k: i64, lam_range: i64) -> Result<SupportDimensionReport> {
    if k <= 0 {
        return Err(Error::InvalidLevel(k));
    }
    let mut report = SupportDimensionReport {
        k,
        ..Default::default()
    };
    let x0 = orbit_of(iota(k, DominantGL2Coweight::new(0, 0)?)?);
    report.base_orbit_dim = x0.dim;
    if x0.dim != k {
        report.failures.push(format!("dim X_0 = {} != k = {k}", x0.dim));
    }

    let mut image = BTreeSet::new();
    for lam in DominantGL2Coweight::enumerate(lam_range) {
        report.coweights_checked += 1;
        let label = iota(k, lam)?;
        if !image.insert(label) {
            report.failures.push(format!("iota({k}, ·) not injective at {lam:?}"));
        }
        let x = orbit_of(label);
        if x.dim != k + lam.n1 - lam.n2 {
            report.failures.push(format!(
                "dim iota({k}, {lam:?}) = {} != k + n1 - n2",
                x.dim
            ));
        }
        if x0.dim + lam.orbit_dim() != x.dim {
            report.failures.push(format!(
                "dim X_0 + dim Gr^lam != dim X_lam at {lam:?}"
            ));
        }
        if iota_preimage(k, label) != Some(lam) {
            report.failures.push(format!("preimage mismatch at {lam:?}"));
        }
    }

    let depth = k + 2 * lam_range + 2;
    for m in -lam_range..=lam_range {
        for level in 0..=depth {
            let x = orbit(m, 2 * m - level)?;
            report.orbits_checked += 1;
            let in_image = iota_preimage(k, x.label).is_some();
            if x.supports(k) != in_image {
                report.failures.push(format!(
                    "orbit {:?}: supports({k}) = {} but image membership = {in_image}",
                    x.label,
                    x.supports(k)
                ));
            }
            if x.supports(k) && x.dim < k {
                report
                    .failures
                    .push(format!("orbit {:?} supports level {k} with dim {}", x.label, x.dim));
            }
            // Labels in the image whose preimage is within the enumerated
            // range must have been produced by the forward map.
            if let Some(lam) = iota_preimage(k, x.label) {
                if lam.n1.abs() <= lam_range && lam.n2.abs() <= lam_range && !image.contains(&x.label) {
                    report
                        .failures
                        .push(format!("orbit {:?} missing from forward image", x.label));
                }
            }
        }
    }
    Ok(report)
}

fn orbit_of(label: OrbitLabel) -> OrbitData {
    orbit(label.m, label.l).expect("validated label")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(l: i64, m: i64) -> CoweightPair {
        CoweightPair::new(l, m).unwrap()
    }

    fn dom(n1: i64, n2: i64) -> DominantGL2Coweight {
        DominantGL2Coweight::new(n1, n2).unwrap()
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(orbit(0, 0).unwrap().dim, 0);
        let o = orbit(0, -1).unwrap();
        assert_eq!(o.dim, 1);
        assert!(o.supports(1));
        assert!(!o.supports(2));
        assert_eq!(orbit(-1, -4).unwrap().dim, 2);
        assert_eq!(orbit(0, 1), Err(Error::InvalidOrbitLabel { m: 0, l: 1 }));
    }

    #[test]
    fn iota_examples() {
        assert_eq!(iota(1, dom(0, 0)).unwrap(), OrbitLabel::new(0, -1).unwrap());
        assert_eq!(iota(2, dom(1, 0)).unwrap(), OrbitLabel::new(0, -3).unwrap());
        assert_eq!(iota(1, dom(1, 1)).unwrap(), OrbitLabel::new(-1, -3).unwrap());
        assert_eq!(iota(0, dom(0, 0)), Err(Error::InvalidLevel(0)));
    }

    #[test]
    fn s_set_examples() {
        assert_eq!(s_set(pair(0, 0)), vec![0]);
        assert_eq!(s_set(pair(2, 0)), vec![-2, 0, 2]);
        assert_eq!(s_set(pair(1, 1)), vec![0, 2]);
    }

    #[test]
    fn closure_intersection_examples() {
        assert_eq!(closure_intersection(pair(0, 0), pair(0, 2)), None);
        assert_eq!(closure_intersection(pair(2, 0), pair(2, 2)), Some(pair(1, 1)));
        let p = pair(3, 1);
        assert_eq!(closure_intersection(p, p), Some(p));
    }

    #[test]
    fn closure_intersection_matches_set_intersection() {
        let pairs = CoweightPair::enumerate(8, 8);
        for &p in &pairs {
            for &q in &pairs {
                let set = s_set_intersection(p, q);
                match closure_intersection(p, q) {
                    None => assert!(set.is_empty(), "{p} {q}"),
                    Some(r) => {
                        assert_eq!(s_set(r), set, "{p} {q}");
                        assert_eq!(closure_intersection(q, p), Some(r));
                    }
                }
            }
        }
    }

    #[test]
    fn bijection_check() {
        assert!(fixed_point_bijection_check(0));
        assert!(fixed_point_bijection_check(2));
        assert!(fixed_point_bijection_check(6));
        assert_eq!(CoweightPair::enumerate(2, 2).len(), 8);
    }

    #[test]
    fn support_dimension_conditions() {
        let r = check_support_dimension_conditions(1, 3).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        let r = check_support_dimension_conditions(5, 0).unwrap();
        assert_eq!(r.base_orbit_dim, 5);
        assert!(r.passed());
        let r = check_support_dimension_conditions(2, 2).unwrap();
        assert!(r.passed());
        assert!(!orbit(0, -1).unwrap().supports(2));
        assert_eq!(iota_preimage(2, OrbitLabel::new(0, -1).unwrap()), None);
    }
}
