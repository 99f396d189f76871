//! Lossless JSON encodings of exact objects.
//!
//! Polynomials are arrays of `[a_exp, c_exp, num, den]`; Hilbert series and
//! graded dimension tables are arrays of `[degree, dim]`.

use serde_json::{json, Value};

use satake_core::cohomology_modules::GradedDimTable;
use satake_core::equivariant_coherent::Poly4;
use satake_core::exact_math::{BivarPoly, LaurentInT, PolyA, PolyMatrix, Rational};
use satake_core::rep_gl2::CoweightPair;

fn rational(x: &Rational) -> [Value; 2] {
    [rational_part(x.numer()), rational_part(x.denom())]
}

// Integers that fit in i64 stay numbers; larger ones fall back to strings.
fn rational_part(n: &num_bigint::BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

pub fn bivar(p: &BivarPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|((a, c), x)| {
                let [n, d] = rational(x);
                json!([a, c, n, d])
            })
            .collect(),
    )
}

pub fn poly_a(p: &PolyA) -> Value {
    bivar(&BivarPoly::from(p))
}

pub fn matrix(m: &PolyMatrix) -> Value {
    Value::Array(
        m.rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(poly_a).collect()))
            .collect(),
    )
}

pub fn series(s: &LaurentInT) -> Value {
    Value::Array(s.terms().map(|(d, n)| json!([d, n])).collect())
}

pub fn table(t: &GradedDimTable) -> Value {
    Value::Array(t.iter().map(|(d, n)| json!([d, n])).collect())
}

/// Terms of a polynomial on `V × V*` as `[[v1, v2, w1, w2], num, den]`.
pub fn poly4(p: &Poly4) -> Value {
    Value::Array(
        p.terms()
            .map(|(m, x)| {
                let [n, d] = rational(x);
                json!([m, n, d])
            })
            .collect(),
    )
}

pub fn pair(p: CoweightPair) -> Value {
    json!([p.lam(), p.mu()])
}

/// Compact text form used in report cells.
pub fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("serializing a JSON value cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use satake_core::exact_math::rat;

    #[test]
    fn polynomial_quadruples() {
        let mut p = BivarPoly::zero();
        p.add_term(1, 0, rat(-3, 2));
        p.add_term(0, 2, rat(1, 1));
        assert_eq!(bivar(&p), json!([[0, 2, 1, 1], [1, 0, -3, 2]]));
        assert_eq!(poly_a(&PolyA::zero()), json!([]));
    }

    #[test]
    fn series_pairs() {
        let mut s = LaurentInT::zero();
        s.add_term(-2, 1);
        s.add_term(4, 3);
        assert_eq!(series(&s), json!([[-2, 1], [4, 3]]));
    }
}
