//! One-shot computations printed as a single JSON document.

use clap::Subcommand;
use serde_json::{json, Value};

use satake_core::cohomology_modules::{
    annihilator_polynomial, c_over_a_eigenvalues, default_max_degree, hom_formula_to, standard_module,
};
use satake_core::equivariant_coherent::{
    classify_invariant_support, gl2_invariants_bidegree, invariants_of_Z_quotient, InvariantSupportLabel,
};
use satake_core::koszul_exterior::{build_E, decompose_character};
use satake_core::loop_convolution::classify_stalk;
use satake_core::orbit_combinatorics::{iota_preimage, orbit, s_set, DominantGL2Coweight};
use satake_core::rep_gl2::{character, irrep, CoweightPair};

use crate::config::parse_int_pair;
use crate::encode;
use crate::CliError;

#[derive(Debug, Clone, Subcommand)]
pub enum ComputeCommand {
    /// Hom between two standard modules: annihilator, generator degree, Hilbert series.
    Hom {
        /// Source pair as `lam,mu`.
        #[arg(long, value_parser = parse_int_pair, allow_hyphen_values = true)]
        source: (i64, i64),
        /// Target pair as `lam,mu`.
        #[arg(long, value_parser = parse_int_pair, allow_hyphen_values = true)]
        target: (i64, i64),
        /// Truncation degree of the Hilbert series.
        #[arg(long, allow_negative_numbers = true)]
        max_degree: Option<i64>,
    },
    /// The graded module M(lam, mu): basis degrees and the matrix of c.
    Module {
        #[arg(long)]
        lam: i64,
        #[arg(long, allow_negative_numbers = true)]
        mu: i64,
    },
    /// Dimension and stabiliser of the orbit with label (m, l).
    Orbit {
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, allow_negative_numbers = true)]
        l: i64,
        /// Also report support and the preimage coweight at this level.
        #[arg(long)]
        k: Option<i64>,
    },
    /// Classify the convolution stalk at (m, l).
    Stalk {
        #[arg(long)]
        k: usize,
        /// Dominant coweight as `n1,n2`.
        #[arg(long, value_parser = parse_int_pair, allow_hyphen_values = true)]
        lam: (i64, i64),
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, allow_negative_numbers = true)]
        l: i64,
    },
    /// The fixed-point set S(lam, mu).
    SSet {
        #[arg(long)]
        lam: i64,
        #[arg(long, allow_negative_numbers = true)]
        mu: i64,
    },
    /// Invariant theory on V x V*: one of --bidegree, --quotient or --support.
    Invariants {
        /// GL(2)-invariants of bidegree `d1,d2`.
        #[arg(long, value_parser = parse_int_pair)]
        bidegree: Option<(i64, i64)>,
        /// Graded invariants of O / (p^N); 0 gives the invariants of O itself.
        #[arg(long)]
        quotient: Option<u32>,
        /// Total degree bound for --quotient.
        #[arg(long, default_value_t = 12)]
        max_degree: u32,
        /// Classify a support label such as `V_STAR_ZERO|V_ZERO`.
        #[arg(long)]
        support: Option<String>,
    },
    /// Character of V(lam, mu), or of the exterior algebra with --exterior.
    Character {
        #[arg(long, required_unless_present = "exterior")]
        lam: Option<i64>,
        #[arg(long, allow_negative_numbers = true, required_unless_present = "exterior")]
        mu: Option<i64>,
        #[arg(long, conflicts_with_all = ["lam", "mu"])]
        exterior: bool,
    },
}

fn pair(lam: i64, mu: i64) -> Result<CoweightPair, CliError> {
    Ok(CoweightPair::new(lam, mu)?)
}

pub fn compute(cmd: &ComputeCommand) -> Result<Value, CliError> {
    match cmd {
        ComputeCommand::Hom {
            source,
            target,
            max_degree,
        } => {
            let p = pair(source.0, source.1)?;
            let p2 = pair(target.0, target.1)?;
            let max = max_degree.unwrap_or_else(|| default_max_degree(p, p2));
            let h = hom_formula_to(p, p2, max);
            Ok(json!({
                "source": encode::pair(p),
                "target": encode::pair(p2),
                "is_zero": h.is_zero,
                "k": h.k,
                "generator_degree": (!h.is_zero).then_some(h.generator_degree),
                "annihilator": encode::bivar(&h.annihilator),
                "hilbert_series": encode::series(&h.hilbert_series),
                "truncation": h.truncation,
            }))
        }
        ComputeCommand::Module { lam, mu } => {
            let p = pair(*lam, *mu)?;
            let m = standard_module(p);
            Ok(json!({
                "pair": encode::pair(p),
                "rank": m.rank(),
                "basis_degrees": m.basis_degrees(),
                "c_matrix": encode::matrix(m.c_matrix()),
                "annihilator": encode::bivar(&annihilator_polynomial(p)),
                "c_over_a_eigenvalues": c_over_a_eigenvalues(p),
            }))
        }
        ComputeCommand::Orbit { m, l, k } => {
            let o = orbit(*m, *l)?;
            let mut out = json!({
                "m": m,
                "l": l,
                "dim": o.dim,
                "stabilizer_level": o.stabilizer_level,
            });
            if let Some(k) = *k {
                if k <= 0 {
                    return Err(satake_core::Error::InvalidLevel(k).into());
                }
                let pre = iota_preimage(k, o.label).map(|c| json!([c.n1(), c.n2()]));
                out["k"] = json!(k);
                out["supports"] = json!(o.supports(k));
                out["coweight"] = pre.unwrap_or(Value::Null);
            }
            Ok(out)
        }
        ComputeCommand::Stalk { k, lam, m, l } => {
            let lam = DominantGL2Coweight::new(lam.0, lam.1)?;
            Ok(serde_json::to_value(classify_stalk(*k, lam, *m, *l)?)?)
        }
        ComputeCommand::SSet { lam, mu } => Ok(json!({ "set": s_set(pair(*lam, *mu)?) })),
        ComputeCommand::Invariants {
            bidegree,
            quotient,
            max_degree,
            support,
        } => invariants(*bidegree, *quotient, *max_degree, support.as_deref()),
        ComputeCommand::Character { lam, mu, exterior } => {
            if *exterior {
                let ch = build_E().character();
                let parts: Vec<Value> = decompose_character(&ch)
                    .into_iter()
                    .map(|(p, n)| json!([p.lam(), p.mu(), n]))
                    .collect();
                return Ok(json!({
                    "module": "exterior",
                    "character": weights(&ch),
                    "decomposition": parts,
                }));
            }
            let (lam, mu) = lam.zip(*mu).ok_or_else(|| CliError::Usage("--lam and --mu are required".into()))?;
            let p = pair(lam, mu)?;
            Ok(json!({
                "pair": encode::pair(p),
                "character": weights(&character(&irrep(p))),
            }))
        }
    }
}

/// `[h-weight, central weight, multiplicity]` triples.
fn weights(ch: &satake_core::exact_math::LaurentTZ) -> Value {
    Value::Array(ch.terms().map(|((h, z), n)| json!([h, z, n])).collect())
}

fn invariants(
    bidegree: Option<(i64, i64)>,
    quotient: Option<u32>,
    max_degree: u32,
    support: Option<&str>,
) -> Result<Value, CliError> {
    let chosen = usize::from(bidegree.is_some()) + usize::from(quotient.is_some()) + usize::from(support.is_some());
    if chosen != 1 {
        return Err(CliError::Usage(
            "invariants needs exactly one of --bidegree, --quotient, --support".into(),
        ));
    }
    if let Some((d1, d2)) = bidegree {
        let (d1, d2) = (
            u32::try_from(d1).map_err(|_| CliError::Usage("bidegree must be non-negative".into()))?,
            u32::try_from(d2).map_err(|_| CliError::Usage("bidegree must be non-negative".into()))?,
        );
        let space = gl2_invariants_bidegree(d1, d2);
        let basis: Vec<Value> = space.basis.iter().map(encode::poly4).collect();
        return Ok(json!({ "bidegree": [d1, d2], "dim": space.dim, "basis": basis }));
    }
    if let Some(n) = quotient {
        let table = invariants_of_Z_quotient((n > 0).then_some(n), max_degree);
        return Ok(json!({
            "power": n,
            "max_degree": max_degree,
            "dims": encode::table(&table),
        }));
    }
    let name = support.expect("exactly one option is set");
    let label = InvariantSupportLabel::parse(name)
        .ok_or_else(|| CliError::Usage(format!("unknown support label `{name}`")))?;
    let c = classify_invariant_support(label);
    Ok(json!({
        "label": label.name(),
        "contained_in_z": c.contained_in_z,
        "intersection_with_s_dim": c.intersection_with_s_dim,
    }))
}
