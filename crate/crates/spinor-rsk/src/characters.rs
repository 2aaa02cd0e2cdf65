//! Characters as exact Laurent polynomials, and the identities relating
//! them.
//!
//! Three families of variables appear: one `x` variable per alphabet letter,
//! the symplectic torus variables `z1, ..., zl`, and a marker `t`.  All
//! arithmetic is exact over big integers.  Infinite products are compared
//! after truncating by total degree in the `x` variables alone; `z` and `t`
//! are never cut, and since every `x` exponent in sight is nonnegative, both
//! sides of each identity are complete in every retained `x` degree, which
//! makes the truncated comparison sound.

use std::collections::BTreeMap;

use laurent::{LaurentPoly, Monomial};
use serde::Serialize;
use serde_json::{json, Value};

use crate::alphabet::{Degree, GradedAlphabet, Letter};
use crate::oscillating::{enumerate_king, king_end_shape};
use crate::partition::{enumerate_partitions, Partition};
use crate::spinor::enumerate_tuples;
use crate::tableau::enumerate_sst;

/// The variable name attached to the letter `a`: `x2`, `x-1`, `x3'`, ...
pub fn x_var(a: Letter) -> String {
    format!("x{a}")
}

/// The name of the `j`-th symplectic variable, 1-based.
pub fn z_var(j: usize) -> String {
    format!("z{j}")
}

/// Selects the `x` variables; truncation caps are measured against these.
pub fn is_x_var(name: &str) -> bool {
    name.starts_with('x')
}

/// The monomial with one `x` exponent per letter of the sequence.
pub fn x_monomial<'a, I: IntoIterator<Item = &'a Letter>>(letters: I) -> Monomial {
    letters
        .into_iter()
        .fold(Monomial::one(), |m, &a| m.mul(&Monomial::var(&x_var(a), 1)))
}

/// The symplectic character `sp_lambda(z1, ..., zl)`: one term per King
/// tableau of shape `lambda` with letters of `ell` kinds, weighted by the
/// multiplicity of each letter minus that of its barred partner.
pub fn sp_character(lambda: &Partition, ell: usize) -> LaurentPoly {
    assert!(lambda.length() <= ell, "sp_lambda needs at most ell rows");
    let mut out = LaurentPoly::zero();
    for king in enumerate_king(lambda, ell as i32) {
        let m = king
            .weight()
            .iter()
            .enumerate()
            .fold(Monomial::one(), |m, (j, &w)| {
                m.mul(&Monomial::var(&z_var(j + 1), w))
            });
        out = out.add(&LaurentPoly::term(m, 1));
    }
    out
}

/// The character of tuples of `ell` blocks with parameters `lambda`:
/// `t^ell` times one `x` term per tuple.  `cap` bounds the block heights,
/// which keeps the enumeration finite when the alphabet has degree-1
/// letters; with only degree-0 letters any `cap >= |A|` is exhaustive.
pub fn spinor_character(
    lambda: &Partition,
    ell: usize,
    alph: &GradedAlphabet,
    cap: usize,
) -> LaurentPoly {
    let t = Monomial::var("t", ell as i64);
    let mut out = LaurentPoly::zero();
    for tuple in enumerate_tuples(alph, lambda, ell, cap) {
        let m = tuple.iter().fold(t.clone(), |m, b| {
            m.mul(&x_monomial(b.left().iter().chain(b.right())))
        });
        out = out.add(&LaurentPoly::term(m, 1));
    }
    out
}

/// The (super) Schur polynomial of shape `mu` over an alphabet: one term per
/// semistandard tableau.  Shapes with more than `cap` cells return zero, so
/// truncated identity sums can call this for every shape below the cap.
pub fn schur(mu: &Partition, alph: &GradedAlphabet, cap: i64) -> LaurentPoly {
    if mu.size() as i64 > cap {
        return LaurentPoly::zero();
    }
    let mut out = LaurentPoly::zero();
    for t in enumerate_sst(alph, mu) {
        out = out.add(&LaurentPoly::term(x_monomial(t.iter().flatten()), 1));
    }
    out
}

/// The earliest differing monomial of a failed comparison, with the two
/// coefficients as decimal strings.
#[derive(Serialize, Clone, Debug)]
pub struct Mismatch {
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

/// The outcome of one identity check, serializable as a JSON report.
/// `status` is `"pass"`, `"fail"` (with `first_mismatch` set), or `"error"`
/// (with `error` holding a machine-readable code).
#[derive(Serialize, Clone, Debug)]
pub struct Report {
    pub identity: String,
    pub parameters: BTreeMap<String, Value>,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Report {
    /// True if the identity was confirmed.
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }

    fn compare(
        identity: &str,
        parameters: BTreeMap<String, Value>,
        lhs: &LaurentPoly,
        rhs: &LaurentPoly,
    ) -> Report {
        let diff = lhs.sub(rhs);
        let first_mismatch = diff.terms().next().map(|(m, _)| Mismatch {
            monomial: m.to_string(),
            lhs: lhs.coeff(m).to_string(),
            rhs: rhs.coeff(m).to_string(),
        });
        Report {
            identity: identity.to_string(),
            parameters,
            status: if first_mismatch.is_none() { "pass" } else { "fail" }.to_string(),
            first_mismatch,
            error: None,
        }
    }

    fn error(identity: &str, parameters: BTreeMap<String, Value>, code: &str) -> Report {
        Report {
            identity: identity.to_string(),
            parameters,
            status: "error".to_string(),
            first_mismatch: None,
            error: Some(code.to_string()),
        }
    }
}

fn params<const N: usize>(pairs: [(&str, Value); N]) -> BTreeMap<String, Value> {
    pairs
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

/// Renames `z1, ..., zn` to the plain-letter variables `x1, ..., xn`.
fn z_to_x(p: &LaurentPoly, n: usize) -> LaurentPoly {
    (1..=n).fold(p.clone(), |p, i| {
        p.substitute(&z_var(i), &LaurentPoly::var(&x_var(Letter::Num(i as i32)), 1))
    })
}

/// Checks the Cauchy-type identity for block tuples: `t^ell` times the
/// product over `j` of `(1 + x_a z_j)(1 + x_a z_j^-1)` for degree-0 letters
/// and `1 / (1 - x_a z_j)(1 - x_a z_j^-1)` for degree-1 letters equals the
/// sum of `spinor_character * sp_character` over all shapes.
///
/// With only degree-0 letters both sides are polynomials and the comparison
/// is exact (`cap` may be `None`).  Degree-1 letters make both sides
/// infinite series, so a cap on the total `x` degree is mandatory; without
/// one the check returns the error `cap-too-small-to-decide`.
pub fn verify_cauchy(alph: &GradedAlphabet, ell: usize, cap: Option<i64>) -> Report {
    let parameters = params([
        ("alphabet", json!(alph.name())),
        ("ell", json!(ell)),
        ("cap", json!(cap)),
    ]);
    let infinite = alph
        .letters()
        .iter()
        .any(|&a| alph.degree(a) == Degree::One);
    if infinite && cap.is_none() {
        return Report::error("cauchy", parameters, "cap-too-small-to-decide");
    }
    let cap = if infinite { cap } else { None };

    let mut lhs = LaurentPoly::term(Monomial::var("t", ell as i64), 1);
    for j in 1..=ell {
        for &a in alph.letters() {
            for e in [1, -1] {
                let m = Monomial::from_pairs([(x_var(a).as_str(), 1), (z_var(j).as_str(), e)]);
                let factor = match alph.degree(a) {
                    Degree::Zero => LaurentPoly::one().add(&LaurentPoly::term(m, 1)),
                    Degree::One => {
                        LaurentPoly::geometric_series(&m, &is_x_var, cap.expect("cap checked"))
                    }
                };
                lhs = match cap {
                    Some(c) => lhs.mul_trunc_where(&factor, &is_x_var, c),
                    None => lhs.mul(&factor),
                };
            }
        }
    }

    // Every tuple whose total cell count is at most the cap has all block
    // heights, hence all block parameters, at most the cap; with no cap the
    // alphabet size bounds the column heights instead.
    let bound = match cap {
        Some(c) => c.max(0) as usize,
        None => alph.len(),
    };
    let mut rhs = LaurentPoly::zero();
    for lambda in enumerate_partitions(bound * ell.max(1), ell, bound) {
        let s = spinor_character(&lambda, ell, alph, bound);
        if s.is_zero() {
            continue;
        }
        rhs = rhs.add(&s.mul(&sp_character(&lambda, ell)));
    }
    if let Some(c) = cap {
        rhs = rhs.truncate_where(&is_x_var, c);
    }
    Report::compare("cauchy", parameters, &lhs, &rhs)
}

/// Checks the exact dual-spinor identity: the product over `i, j` of
/// `x_i + x_i^-1 + z_j + z_j^-1` equals the sum over shapes inside the
/// `n x ell` rectangle of `sp` characters in `x` (at the complementary
/// shape) times `sp` characters in `z`.
pub fn verify_dual_spinor(n: usize, ell: usize) -> Report {
    let parameters = params([("n", json!(n)), ("ell", json!(ell))]);
    let mut lhs = LaurentPoly::one();
    for i in 1..=n {
        let xi = x_var(Letter::Num(i as i32));
        for j in 1..=ell {
            let zj = z_var(j);
            let factor = LaurentPoly::var(&xi, 1)
                .add(&LaurentPoly::var(&xi, -1))
                .add(&LaurentPoly::var(&zj, 1))
                .add(&LaurentPoly::var(&zj, -1));
            lhs = lhs.mul(&factor);
        }
    }
    let mut rhs = LaurentPoly::zero();
    for lambda in enumerate_partitions(n * ell, ell, n) {
        let rho = king_end_shape(n as i32, &lambda, ell);
        let sp_x = z_to_x(&sp_character(&rho, n), n);
        rhs = rhs.add(&sp_x.mul(&sp_character(&lambda, ell)));
    }
    Report::compare("dual-spinor", parameters, &lhs, &rhs)
}

/// Checks the truncated Littlewood identity: the product over `i, j` of
/// `1 / (1 - x_i z_j)(1 - x_i z_j^-1)` equals the sum over shapes with at
/// most `n` rows of `sp_lambda(z) s_lambda(x)`, times the sum of `s_beta(x)`
/// over shapes `beta` whose conjugate has even parts, all cut at total `x`
/// degree `cap`.  Requires `ell >= n`; smaller `ell` returns the error
/// `ell-less-than-n`.
pub fn verify_littlewood(n: usize, ell: usize, cap: i64) -> Report {
    let parameters = params([("n", json!(n)), ("ell", json!(ell)), ("cap", json!(cap))]);
    if ell < n {
        return Report::error("littlewood", parameters, "ell-less-than-n");
    }
    let cap = cap.max(0);

    let mut lhs = LaurentPoly::one();
    for i in 1..=n {
        let xi = x_var(Letter::Num(i as i32));
        for j in 1..=ell {
            for e in [1, -1] {
                let m = Monomial::from_pairs([(xi.as_str(), 1), (z_var(j).as_str(), e)]);
                let factor = LaurentPoly::geometric_series(&m, &is_x_var, cap);
                lhs = lhs.mul_trunc_where(&factor, &is_x_var, cap);
            }
        }
    }

    let xn = GradedAlphabet::standard(n as i32);
    let shapes = enumerate_partitions(cap as usize, n, cap as usize);
    let mut even_sum = LaurentPoly::zero();
    for beta in &shapes {
        if beta.conjugate().parts().iter().all(|p| p % 2 == 0) {
            even_sum = even_sum.add(&schur(beta, &xn, cap));
        }
    }
    let mut sp_sum = LaurentPoly::zero();
    for lambda in &shapes {
        let s = schur(lambda, &xn, cap);
        if s.is_zero() {
            continue;
        }
        sp_sum = sp_sum.add(&s.mul(&sp_character(lambda, ell)));
    }
    let rhs = sp_sum.mul_trunc_where(&even_sum, &is_x_var, cap);
    Report::compare("littlewood", parameters, &lhs, &rhs)
}
