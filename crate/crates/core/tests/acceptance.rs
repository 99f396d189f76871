//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use satake_core::cohomology_modules::{annihilator_polynomial, standard_module};
use satake_core::equivariant_coherent::{
    check_three_way, classify_invariant_support, invariants_of_Z_quotient, pairing_power_failures,
    restriction_is_well_defined, tilde_F, zero_set_matches, InvariantSupportLabel,
};
use satake_core::exact_math::char_poly_in_c;
use satake_core::koszul_exterior::{
    build_E, ideal_power_dims, radical_layers, regrade, simple_equivariant_modules, unregrade,
    BigradedCharacter,
};
use satake_core::loop_convolution::verify_stalks;
use satake_core::orbit_combinatorics::{
    check_support_dimension_conditions, closure_intersection, s_set, s_set_intersection,
};
use satake_core::rep_gl2::{verify_conjugation, CoweightPair};

type Outcome = Result<String, Vec<String>>;
type Criterion = (&'static str, fn() -> Outcome);

fn annihilator_identity() -> Outcome {
    let pairs = CoweightPair::enumerate(10, 10);
    let bad: Vec<String> = pairs
        .iter()
        .filter(|p| char_poly_in_c(standard_module(**p).c_matrix()) != annihilator_polynomial(**p))
        .map(|p| format!("char poly mismatch at {p}"))
        .collect();
    if bad.is_empty() {
        Ok(format!("{} pairs", pairs.len()))
    } else {
        Err(bad)
    }
}

fn conjugation_identity() -> Outcome {
    if verify_conjugation() {
        Ok("T(a) = g(a)^-1 S(a) g(a)".into())
    } else {
        Err(vec!["conjugation identity fails".into()])
    }
}

fn three_way_hom() -> Outcome {
    let pairs = CoweightPair::enumerate(4, 4);
    let mut failures = Vec::new();
    for &p in &pairs {
        for &p2 in &pairs {
            failures.extend(check_three_way(p, p2, 20));
        }
    }
    if failures.is_empty() {
        Ok(format!("{} ordered pairs through degree 20", pairs.len() * pairs.len()))
    } else {
        Err(failures)
    }
}

fn tilde_f_keystone() -> Outcome {
    let pairs = CoweightPair::enumerate(6, 6);
    let mut failures = Vec::new();
    for &p in &pairs {
        if tilde_F(p) != standard_module(p) {
            failures.push(format!("tilde_F{p} differs from M{p}"));
        }
        if !restriction_is_well_defined(p, 2) {
            failures.push(format!("c does not descend to y = -1 for {p}"));
        }
    }
    if failures.is_empty() {
        Ok(format!("{} pairs", pairs.len()))
    } else {
        Err(failures)
    }
}

fn orbit_conditions() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for k in 1..=5 {
        match check_support_dimension_conditions(k, 5) {
            Ok(r) => {
                checked += r.coweights_checked + r.orbits_checked;
                failures.extend(r.failures);
            }
            Err(e) => failures.push(e.to_string()),
        }
    }
    if failures.is_empty() {
        Ok(format!("{checked} coweight and orbit checks for k <= 5"))
    } else {
        Err(failures)
    }
}

fn stalk_classifier() -> Outcome {
    match verify_stalks(3, &[3, 5, 7], 6) {
        Ok(r) if r.passed() => Ok(format!("{} cases, {} point stalks", r.cases_checked, r.points)),
        Ok(r) => Err(r.failures),
        Err(e) => Err(vec![e.to_string()]),
    }
}

fn closure_lemma() -> Outcome {
    let pairs = CoweightPair::enumerate(8, 8);
    let mut failures = Vec::new();
    for &p in &pairs {
        for &p2 in &pairs {
            let set = s_set_intersection(p, p2);
            let ok = match closure_intersection(p, p2) {
                None => set.is_empty(),
                Some(r) => s_set(r) == set,
            };
            if !ok {
                failures.push(format!("S{p} ∩ S{p2} is not an S-set"));
            }
        }
    }
    if failures.is_empty() {
        Ok(format!("{} ordered pairs", pairs.len() * pairs.len()))
    } else {
        Err(failures)
    }
}

fn invariant_theory() -> Outcome {
    let mut failures = Vec::new();
    for d in 0..=8u32 {
        for e in 0..=8u32 {
            failures.extend(pairing_power_failures(d, e));
        }
    }
    for n in 1..=4u32 {
        let t = invariants_of_Z_quotient(Some(n), 4 * n + 4);
        let total: usize = t.iter().map(|(_, x)| x).sum();
        if total != n as usize {
            failures.push(format!("O/(p^{n}) invariants total {total}"));
        }
    }
    let lattice = InvariantSupportLabel::lattice();
    for l in &lattice {
        let c = classify_invariant_support(*l);
        if c.contained_in_z != (c.intersection_with_s_dim <= 0) {
            failures.push(format!("{}: biconditional fails", l.name()));
        }
        if !zero_set_matches(*l) {
            failures.push(format!("{}: ideal has the wrong zero set", l.name()));
        }
    }
    if failures.is_empty() {
        Ok(format!("81 bidegrees, N <= 4, {} support labels", lattice.len()))
    } else {
        Err(failures)
    }
}

fn koszul_shadows() -> Outcome {
    let mut failures = Vec::new();
    let e = build_E();
    if e.dim() != 16 {
        failures.push(format!("dim E = {}", e.dim()));
    }
    let layers = radical_layers(&e);
    if layers != [1, 4, 6, 4, 1] {
        failures.push(format!("radical layers {layers:?}"));
    }
    let powers = ideal_power_dims(&e);
    if powers.get(4).copied() == Some(0) || powers.get(5).copied() != Some(0) {
        failures.push(format!("ideal powers {powers:?}"));
    }
    let r = simple_equivariant_modules(6);
    if !r.passed() {
        failures.push(format!("simple module classification: {r:?}"));
    }
    // Generators of Sym(V*), Λ(V*[-1]) and their V-side counterparts.
    let gens = [
        BigradedCharacter::monomial(1, 0, -1),
        BigradedCharacter::monomial(1, 1, -1),
        BigradedCharacter::monomial(1, 0, 1),
        BigradedCharacter::monomial(1, -1, 1),
        BigradedCharacter::monomial(2, 0, 1),
    ];
    for x in &gens {
        if unregrade(&regrade(x)) != *x || regrade(&unregrade(x)) != *x {
            failures.push(format!("regrade not invertible on {x:?}"));
        }
        for y in &gens {
            if regrade(&x.mul(y)) != regrade(x).mul(&regrade(y)) {
                failures.push(format!("regrade not multiplicative on {x:?} * {y:?}"));
            }
        }
    }
    if failures.is_empty() {
        Ok(format!("layers {layers:?}, {} index pairs matched", r.rep_side))
    } else {
        Err(failures)
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 annihilator identity", annihilator_identity),
        ("2 conjugation identity", conjugation_identity),
        ("3 three-way Hom agreement", three_way_hom),
        ("4 tilde_F keystone", tilde_f_keystone),
        ("5 orbit conditions", orbit_conditions),
        ("6 stalk classifier vs finite fields", stalk_classifier),
        ("7 closure-intersection lemma", closure_lemma),
        ("8 invariant theory and compactness", invariant_theory),
        ("9 Koszul shadows", koszul_shadows),
    ];
    let mut all_ok = true;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(summary) => println!("PASS  criterion {name}: {summary} ({secs:.1}s)"),
            Err(failures) => {
                all_ok = false;
                println!("FAIL  criterion {name}: {} failures ({secs:.1}s)", failures.len());
                for f in failures.iter().take(10) {
                    println!("        {f}");
                }
            }
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
