//! Verification suites. Each suite enumerates its cases up front, evaluates
//! them on the rayon pool and keeps the results in enumeration order.

use rayon::prelude::*;
use serde_json::{json, Value};

use satake_core::cohomology_modules::{annihilator_polynomial, standard_module, twist, GradedDimTable};
use satake_core::equivariant_coherent::{
    classify_invariant_support, invariants_of_Z_quotient, pairing_power_failures,
    restriction_is_well_defined, stabilizer_check, three_way_hom, tilde_F, zero_set_matches,
    InvariantSupportLabel,
};
use satake_core::exact_math::char_poly_in_c;
use satake_core::koszul_exterior::{
    build_E, decompose_by_subtraction, decompose_character, ideal_power_dims, radical_layers,
    regrade, simple_equivariant_modules, unregrade, BigradedCharacter,
};
use satake_core::loop_convolution::{
    check_stalk_case, classify_stalk, label_window, sweep_coweights, CharacterTable,
};
use satake_core::orbit_combinatorics::{
    check_support_dimension_conditions, closure_intersection, fixed_point_bijection_check, iota,
    s_set, s_set_intersection,
};
use satake_core::rep_gl2::CoweightPair;

use crate::config::{Suite, SweepConfig};
use crate::encode::{self, compact};
use crate::report::{CaseRecord, VerificationReport};
use crate::CliError;

/// Half-width of the `(m, l)` window scanned around each `iota(k, lam)`.
pub const STALK_WINDOW: i64 = 4;

pub fn run_suite(suite: Suite, config: &SweepConfig) -> Result<VerificationReport, CliError> {
    config.validate()?;
    let cases = match suite {
        Suite::Annihilators => annihilators(config),
        Suite::HomAgreement => hom_agreement(config),
        Suite::Orbits => orbits(config)?,
        Suite::Stalks => stalks(config)?,
        Suite::CoherentSide => coherent_side(config)?,
        Suite::InvariantTheory => invariant_theory(config),
        Suite::Koszul => koszul(config),
    };
    Ok(VerificationReport::new(suite, config.clone(), cases))
}

fn pair_inputs(p: CoweightPair) -> String {
    format!("lam={} mu={}", p.lam(), p.mu())
}

fn two_pair_inputs(p: CoweightPair, p2: CoweightPair) -> String {
    format!("{}; lam'={} mu'={}", pair_inputs(p), p2.lam(), p2.mu())
}

fn ordered_pairs(pairs: &[CoweightPair]) -> Vec<(CoweightPair, CoweightPair)> {
    pairs
        .iter()
        .flat_map(|&p| pairs.iter().map(move |&p2| (p, p2)))
        .collect()
}

fn nonzero(t: &GradedDimTable) -> Value {
    Value::Array(t.iter().filter(|(_, n)| *n > 0).map(|(d, n)| json!([d, n])).collect())
}

fn annihilators(config: &SweepConfig) -> Vec<CaseRecord> {
    let pairs = CoweightPair::enumerate(config.lam_max, config.mu_bound);
    pairs
        .par_iter()
        .map(|&p| {
            let expected = annihilator_polynomial(p);
            let computed = char_poly_in_c(standard_module(p).c_matrix());
            CaseRecord::new(
                format!("annihilator{p}"),
                pair_inputs(p),
                compact(&encode::bivar(&expected)),
                compact(&encode::bivar(&computed)),
                expected == computed,
            )
        })
        .collect()
}

fn hom_agreement(config: &SweepConfig) -> Vec<CaseRecord> {
    let pairs = CoweightPair::enumerate(config.lam_max, config.mu_bound);
    ordered_pairs(&pairs)
        .par_iter()
        .map(|&(p, p2)| {
            let r = three_way_hom(p, p2, config.max_degree);
            let computed = json!({"oracle": nonzero(&r.oracle), "p_side": nonzero(&r.equivariant)});
            CaseRecord::from_failures(
                format!("hom{p}->{p2}"),
                format!("{}; max_degree={}", two_pair_inputs(p, p2), config.max_degree),
                compact(&encode::series(&r.formula.hilbert_series)),
                compact(&computed),
                r.failures,
            )
        })
        .collect()
}

fn orbits(config: &SweepConfig) -> Result<Vec<CaseRecord>, CliError> {
    let mut cases = Vec::new();
    for k in 1..=config.k_max as i64 {
        let r = check_support_dimension_conditions(k, config.lam_max)?;
        cases.push(CaseRecord::from_failures(
            format!("support/k={k}"),
            format!("k={k} coweight_bound={}", config.lam_max),
            format!("dim X_0={k}; no failures"),
            format!(
                "dim X_0={}; {} coweights, {} orbits checked",
                r.base_orbit_dim, r.coweights_checked, r.orbits_checked
            ),
            r.failures,
        ));
    }
    let range = config.lam_max.max(config.mu_bound);
    let bijective = fixed_point_bijection_check(range);
    cases.push(CaseRecord::new(
        format!("fixed-points/range={range}"),
        format!("range={range}"),
        "injective",
        if bijective { "injective" } else { "not injective" },
        bijective,
    ));
    let pairs = CoweightPair::enumerate(config.lam_max, config.mu_bound);
    let closures: Vec<CaseRecord> = ordered_pairs(&pairs)
        .par_iter()
        .map(|&(p, p2)| {
            let expected = s_set_intersection(p, p2);
            let computed = closure_intersection(p, p2).map(s_set).unwrap_or_default();
            CaseRecord::new(
                format!("closure{p}&{p2}"),
                two_pair_inputs(p, p2),
                compact(&json!(expected)),
                compact(&json!(computed)),
                expected == computed,
            )
        })
        .collect();
    cases.extend(closures);
    Ok(cases)
}

fn stalks(config: &SweepConfig) -> Result<Vec<CaseRecord>, CliError> {
    let mut tables = Vec::new();
    for k in 1..=config.k_max {
        for &q in &config.finite_field_primes {
            tables.push(CharacterTable::new(q, k)?);
        }
    }
    let coweights = sweep_coweights(config.mu_bound, config.lam_max);
    let mut jobs = Vec::new();
    for (t, (k, q)) in (1..=config.k_max)
        .flat_map(|k| config.finite_field_primes.iter().map(move |&q| (k, q)))
        .enumerate()
    {
        for &lam in &coweights {
            let center = iota(k as i64, lam)?;
            for (m, l) in label_window(center.m(), center.l(), STALK_WINDOW) {
                jobs.push((t, k, q, lam, m, l));
            }
        }
    }
    jobs.par_iter()
        .map(|&(t, k, q, lam, m, l)| {
            let table = &tables[t];
            let class = classify_stalk(k, lam, m, l)?;
            let sum = table.stalk_sum(lam, m, l)?;
            let computed = if sum.is_zero() {
                json!(0)
            } else if sum.is_one() {
                json!(1)
            } else {
                json!({"order": sum.order, "coeffs": sum.coeffs})
            };
            let failure = check_stalk_case(table, lam, m, l)?;
            Ok(CaseRecord::from_failures(
                format!("stalk/q={q}/k={k}/({},{})/({m},{l})", lam.n1(), lam.n2()),
                format!("q={q} k={k} n1={} n2={} m={m} l={l}", lam.n1(), lam.n2()),
                compact(&serde_json::to_value(class)?),
                compact(&computed),
                failure.into_iter().collect(),
            ))
        })
        .collect()
}

fn coherent_side(config: &SweepConfig) -> Result<Vec<CaseRecord>, CliError> {
    let pairs = CoweightPair::enumerate(config.lam_max, config.mu_bound);
    let mut cases: Vec<CaseRecord> = pairs
        .par_iter()
        .map(|&p| {
            let expected = standard_module(p);
            let computed = tilde_F(p);
            let mut failures = Vec::new();
            if computed != expected {
                failures.push(format!("tilde_F{p} differs from M{p}"));
            }
            if !restriction_is_well_defined(p, 2) {
                failures.push(format!("c does not descend to y = -1 for {p}"));
            }
            CaseRecord::from_failures(
                format!("tilde_F{p}"),
                pair_inputs(p),
                compact(&encode::matrix(expected.c_matrix())),
                compact(&encode::matrix(computed.c_matrix())),
                failures,
            )
        })
        .collect();
    let twists: Vec<(CoweightPair, CoweightPair)> = pairs
        .iter()
        .filter_map(|&p| CoweightPair::new(p.lam(), p.mu() + 2).ok().map(|p2| (p, p2)))
        .filter(|(_, p2)| p2.mu() <= config.mu_bound)
        .collect();
    let twisted: Result<Vec<CaseRecord>, CliError> = twists
        .par_iter()
        .map(|&(p, p2)| {
            let expected = twist(&tilde_F(p), 2)?;
            let computed = tilde_F(p2);
            Ok(CaseRecord::new(
                format!("twist{p}->{p2}"),
                format!("{}; twist=2", pair_inputs(p)),
                compact(&encode::matrix(expected.c_matrix())),
                compact(&encode::matrix(computed.c_matrix())),
                expected == computed,
            ))
        })
        .collect();
    cases.extend(twisted?);
    let stab = stabilizer_check();
    cases.push(CaseRecord::new(
        "stabilizer",
        "point=(2a,-1)",
        compact(&json!({"generic_line": true, "specialization": true, "tangent_rank": true, "orbit_cover": true})),
        compact(&serde_json::to_value(&stab)?),
        stab.passed(),
    ));
    Ok(cases)
}

fn invariant_theory(config: &SweepConfig) -> Vec<CaseRecord> {
    let dmax = 2 * config.lam_max as u32;
    let bidegrees: Vec<(u32, u32)> = (0..=dmax).flat_map(|d| (0..=dmax).map(move |e| (d, e))).collect();
    let mut cases: Vec<CaseRecord> = bidegrees
        .par_iter()
        .map(|&(d, e)| {
            let failures = pairing_power_failures(d, e);
            let expected = if d == e { format!("span(p^{d})") } else { "0".to_string() };
            let computed = if failures.is_empty() { expected.clone() } else { failures.join("; ") };
            CaseRecord::from_failures(
                format!("invariants/({d},{e})"),
                format!("d1={d} d2={e}"),
                expected,
                computed,
                failures,
            )
        })
        .collect();
    let levels: Vec<u32> = (1..=config.lam_max.max(1) as u32).collect();
    let quotients: Vec<CaseRecord> = levels
        .par_iter()
        .map(|&n| {
            let t = invariants_of_Z_quotient(Some(n), 4 * n + 4);
            let total: usize = t.iter().map(|(_, x)| x).sum();
            CaseRecord::new(
                format!("z-quotient/N={n}"),
                format!("N={n} max_total_degree={}", 4 * n + 4),
                format!("total {n}"),
                format!("total {total}; by degree {}", compact(&nonzero(&t))),
                total == n as usize,
            )
        })
        .collect();
    cases.extend(quotients);
    for label in InvariantSupportLabel::lattice() {
        let c = classify_invariant_support(label);
        let biconditional = c.contained_in_z == (c.intersection_with_s_dim <= 0);
        let zeros = zero_set_matches(label);
        cases.push(CaseRecord::new(
            format!("support/{}", label.name()),
            format!("label={}", label.name()),
            "contained_in_z iff dim(supp ∩ S) <= 0; ideal cuts out supp",
            compact(&json!({
                "contained_in_z": c.contained_in_z,
                "intersection_with_s_dim": c.intersection_with_s_dim,
                "zero_set_matches": zeros,
            })),
            biconditional && zeros,
        ));
    }
    cases
}

fn koszul(config: &SweepConfig) -> Vec<CaseRecord> {
    let alg = build_E();
    let mut cases = vec![
        CaseRecord::new("E/dim", "", "16", alg.dim().to_string(), alg.dim() == 16),
    ];
    let powers = ideal_power_dims(&alg);
    cases.push(CaseRecord::new(
        "E/ideal-powers",
        "",
        "[16,15,11,5,1,0]",
        compact(&json!(powers)),
        powers == [16, 15, 11, 5, 1, 0],
    ));
    let layers = radical_layers(&alg);
    cases.push(CaseRecord::new(
        "E/radical-layers",
        "",
        "[1,4,6,4,1]",
        compact(&json!(layers)),
        layers == [1, 4, 6, 4, 1],
    ));
    let ch = alg.character();
    let encode_decomp = |d: &[(CoweightPair, usize)]| {
        Value::Array(d.iter().map(|(p, n)| json!([p.lam(), p.mu(), n])).collect())
    };
    let by_peeling = decompose_character(&ch);
    let by_subtraction = decompose_by_subtraction(&ch);
    cases.push(CaseRecord::new(
        "E/character",
        "",
        compact(&encode_decomp(&by_subtraction)),
        compact(&encode_decomp(&by_peeling)),
        by_peeling == by_subtraction,
    ));

    let report = simple_equivariant_modules(config.lam_max);
    for r in &report.radical_checks {
        cases.push(CaseRecord::new(
            format!("radical/{}", r.module),
            format!("module={}", r.module),
            "proper nonzero submodule stable under gl2 and E",
            compact(&json!({
                "module_dim": r.module_dim,
                "submodule_dim": r.submodule_dim,
                "gl2_stable": r.gl2_stable,
                "e_stable": r.e_stable,
            })),
            r.passed(),
        ));
    }
    cases.push(CaseRecord::new(
        format!("simple-modules/lam<={}", config.lam_max),
        format!("lam_max={}", config.lam_max),
        compact(&json!({"reducible": [], "bijection": true})),
        compact(&json!({
            "reducible": report.reducible.iter().map(|p| encode::pair(*p)).collect::<Vec<_>>(),
            "bijection": report.bijection,
            "rep_side": report.rep_side,
            "fixed_point_side": report.fixed_point_side,
        })),
        report.reducible.is_empty() && report.bijection,
    ));

    // Generators of the symmetric and exterior factors on each side.
    let gens = [(0, -1), (1, -1), (0, 1), (-1, 1), (2, 1)];
    let mut failures = Vec::new();
    for &(t, z) in &gens {
        let x = BigradedCharacter::monomial(1, t, z);
        if unregrade(&regrade(&x)) != x {
            failures.push(format!("regrade not invertible on t^{t} z^{z}"));
        }
        for &(t2, z2) in &gens {
            let y = BigradedCharacter::monomial(1, t2, z2);
            if regrade(&x.mul(&y)) != regrade(&x).mul(&regrade(&y)) {
                failures.push(format!("regrade not multiplicative on t^{t} z^{z} * t^{t2} z^{z2}"));
            }
        }
    }
    cases.push(CaseRecord::from_failures(
        "regrade",
        "generator characters",
        "bijective and multiplicative",
        if failures.is_empty() { "bijective and multiplicative" } else { "violated" },
        failures,
    ));
    cases
}
