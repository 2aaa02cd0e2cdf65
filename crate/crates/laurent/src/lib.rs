//! Sparse multivariate Laurent polynomials with arbitrary-precision integer
//! coefficients.
//!
//! A [`Monomial`] is a finite product of named variables raised to (possibly
//! negative) integer powers; a [`LaurentPoly`] is a finite integer combination
//! of monomials.  The crate is geared towards exact character computations:
//! everything is integral, equality is exact, and infinite products can be
//! expanded up to a chosen degree with [`LaurentPoly::truncate_where`] and
//! [`LaurentPoly::geometric_series`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A product of named variables with integer (possibly negative) exponents.
///
/// Invariant: no variable is stored with exponent zero, so structural equality
/// coincides with mathematical equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct Monomial {
    exps: BTreeMap<String, i64>,
}

impl Monomial {
    /// The empty product `1`.
    pub fn one() -> Self {
        Monomial::default()
    }

    /// The monomial `name^exp`.
    pub fn var(name: &str, exp: i64) -> Self {
        let mut exps = BTreeMap::new();
        if exp != 0 {
            exps.insert(name.to_string(), exp);
        }
        Monomial { exps }
    }

    /// Builds a monomial from `(variable, exponent)` pairs, summing repeats.
    pub fn from_pairs<'a, I: IntoIterator<Item = (&'a str, i64)>>(pairs: I) -> Self {
        let mut m = Monomial::one();
        for (name, exp) in pairs {
            m = m.mul(&Monomial::var(name, exp));
        }
        m
    }

    /// True if this is the empty product.
    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// The exponent of `name` (zero if absent).
    pub fn exponent(&self, name: &str) -> i64 {
        self.exps.get(name).copied().unwrap_or(0)
    }

    /// Iterates over `(variable, exponent)` pairs in variable order.
    pub fn vars(&self) -> impl Iterator<Item = (&str, i64)> {
        self.exps.iter().map(|(k, v)| (k.as_str(), *v))
    }

    /// Product of two monomials.
    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = self.exps.clone();
        for (name, exp) in &other.exps {
            let e = exps.entry(name.clone()).or_insert(0);
            *e += exp;
            if *e == 0 {
                exps.remove(name);
            }
        }
        Monomial { exps }
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Self {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self
                .exps
                .iter()
                .map(|(name, exp)| (name.clone(), exp * k))
                .collect(),
        }
    }

    /// Total degree (sum of all exponents).
    pub fn degree(&self) -> i64 {
        self.exps.values().sum()
    }

    /// Total degree restricted to variables accepted by `pred`.
    pub fn degree_where(&self, pred: &dyn Fn(&str) -> bool) -> i64 {
        self.exps
            .iter()
            .filter(|(name, _)| pred(name))
            .map(|(_, exp)| *exp)
            .sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, exp) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
        }
        Ok(())
    }
}

/// A finite integer combination of [`Monomial`]s.
///
/// Invariant: no term is stored with coefficient zero.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    /// A constant polynomial.
    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        LaurentPoly::term(Monomial::one(), c)
    }

    /// The polynomial `name^exp`.
    pub fn var(name: &str, exp: i64) -> Self {
        LaurentPoly::term(Monomial::var(name, exp), 1)
    }

    /// The single-term polynomial `c * m`.
    pub fn term<C: Into<BigInt>>(m: Monomial, c: C) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    /// True if this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of `m` (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterates over `(monomial, coefficient)` pairs in monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let now_zero = {
            let entry = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
            *entry += c;
            entry.is_zero()
        };
        if now_zero {
            self.terms.remove(&m);
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Sum of two polynomials.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    /// Difference of two polynomials.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Product of two polynomials.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }

    /// Product by a single monomial (cheaper than a general `mul`).
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m1, c)| (m1.mul(m), c.clone()))
                .collect(),
        }
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, k: u32) -> Self {
        let mut base = self.clone();
        let mut out = LaurentPoly::one();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Drops every term whose degree in the variables accepted by `pred`
    /// exceeds `max`.
    pub fn truncate_where(&self, pred: &dyn Fn(&str) -> bool, max: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_where(pred) <= max)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Product followed by truncation (the intermediate blow-up is avoided by
    /// filtering each cross term as it is produced).
    pub fn mul_trunc_where(&self, other: &Self, pred: &dyn Fn(&str) -> bool, max: i64) -> Self {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            let d1 = m1.degree_where(pred);
            for (m2, c2) in &other.terms {
                if d1 + m2.degree_where(pred) <= max {
                    out.add_term(m1.mul(m2), &(c1 * c2));
                }
            }
        }
        out
    }

    /// The truncated geometric series `1 + m + m^2 + ...`, i.e. the expansion
    /// of `1/(1 - m)` keeping terms of `pred`-degree at most `max`.
    ///
    /// Panics unless `m` has positive `pred`-degree, which is what makes the
    /// series finite after truncation.
    pub fn geometric_series(m: &Monomial, pred: &dyn Fn(&str) -> bool, max: i64) -> Self {
        let d = m.degree_where(pred);
        assert!(d > 0, "geometric series requires positive filtered degree, got {d} for {m}");
        let mut out = LaurentPoly::zero();
        let mut power = Monomial::one();
        let mut deg = 0;
        while deg <= max {
            out.add_term(power.clone(), &BigInt::one());
            power = power.mul(m);
            deg += d;
        }
        out
    }

    /// Substitutes `replacement` for the variable `name`.
    ///
    /// When `name` appears with a negative exponent the replacement must be a
    /// single term with coefficient `1` or `-1`, so that its inverse is again a
    /// Laurent term; otherwise this panics.
    pub fn substitute(&self, name: &str, replacement: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(name);
            let rest = m.mul(&Monomial::var(name, -e));
            let factor = if e >= 0 {
                replacement.pow(e as u32)
            } else {
                assert_eq!(
                    replacement.num_terms(),
                    1,
                    "negative power of {name}: replacement must be a single term"
                );
                let (rm, rc) = replacement.terms().next().expect("one term");
                assert!(
                    rc.abs().is_one(),
                    "negative power of {name}: replacement coefficient must be a unit"
                );
                let coeff = if rc.is_negative() && e % 2 != 0 {
                    BigInt::from(-1)
                } else {
                    BigInt::one()
                };
                LaurentPoly::term(rm.pow(e), coeff)
            };
            out = out.add(&factor.mul_monomial(&rest).scale(c));
        }
        out
    }

    /// Evaluates the polynomial with every variable set to `1`.
    pub fn eval_all_ones(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(i: i64, e: i64) -> LaurentPoly {
        LaurentPoly::var(&format!("z{i}"), e)
    }

    #[test]
    fn monomial_mul_cancels_zero_exponents() {
        let m = Monomial::var("x", 2).mul(&Monomial::var("x", -2));
        assert!(m.is_one());
        assert_eq!(m.exponent("x"), 0);
    }

    #[test]
    fn monomial_pow_and_degree() {
        let m = Monomial::from_pairs([("x", 2), ("y", -1)]);
        assert_eq!(m.degree(), 1);
        assert_eq!(m.pow(3).exponent("x"), 6);
        assert_eq!(m.pow(-1).exponent("y"), 1);
        assert_eq!(m.pow(0), Monomial::one());
    }

    #[test]
    fn add_cancels_to_zero() {
        let p = z(1, 1);
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.add(&p.neg()), LaurentPoly::zero());
    }

    #[test]
    fn character_of_sp2_vector_rep_squares() {
        // (z + z^-1)^2 = z^2 + 2 + z^-2
        let chi = z(1, 1).add(&z(1, -1));
        let sq = chi.pow(2);
        assert_eq!(sq.coeff(&Monomial::var("z1", 2)), BigInt::from(1));
        assert_eq!(sq.coeff(&Monomial::one()), BigInt::from(2));
        assert_eq!(sq.coeff(&Monomial::var("z1", -2)), BigInt::from(1));
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(sq.eval_all_ones(), BigInt::from(4));
    }

    #[test]
    fn mul_is_commutative_and_distributes() {
        let p = z(1, 1).add(&z(2, -1)).add(&LaurentPoly::constant(3));
        let q = z(1, -1).sub(&z(2, 2));
        let r = z(2, 1).add(&LaurentPoly::constant(-1));
        assert_eq!(p.mul(&q), q.mul(&p));
        assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
    }

    #[test]
    fn truncation_by_filtered_degree() {
        let is_x = |name: &str| name.starts_with('x');
        // (1 + x*z)(1 + x/z) = 1 + x(z + z^-1) + x^2
        let p = LaurentPoly::one().add(&LaurentPoly::term(
            Monomial::from_pairs([("x", 1), ("z", 1)]),
            1,
        ));
        let q = LaurentPoly::one().add(&LaurentPoly::term(
            Monomial::from_pairs([("x", 1), ("z", -1)]),
            1,
        ));
        let full = p.mul(&q);
        let trunc = p.mul_trunc_where(&q, &is_x, 1);
        assert_eq!(trunc, full.truncate_where(&is_x, 1));
        assert_eq!(trunc.num_terms(), 3);
        // z-degree is not restricted by the x-filter
        assert_eq!(
            full.coeff(&Monomial::from_pairs([("x", 2)])),
            BigInt::from(1)
        );
    }

    #[test]
    fn geometric_series_expands_inverse_factor() {
        let is_x = |name: &str| name.starts_with('x');
        let m = Monomial::from_pairs([("x", 1), ("z", -1)]);
        let g = LaurentPoly::geometric_series(&m, &is_x, 3);
        // (1 - m) * (1 + m + m^2 + m^3) = 1 - m^4
        let check = LaurentPoly::one().sub(&LaurentPoly::term(m.clone(), 1)).mul(&g);
        assert_eq!(
            check,
            LaurentPoly::one().sub(&LaurentPoly::term(m.pow(4), 1))
        );
    }

    #[test]
    fn substitute_positive_and_negative_powers() {
        // p = z + z^-1, substitute z -> w^2
        let p = LaurentPoly::var("z", 1).add(&LaurentPoly::var("z", -1));
        let w2 = LaurentPoly::var("w", 2);
        let q = p.substitute("z", &w2);
        assert_eq!(q, LaurentPoly::var("w", 2).add(&LaurentPoly::var("w", -2)));
        // substitute z -> -w: z + z^-1 -> -w - w^-1
        let neg_w = LaurentPoly::term(Monomial::var("w", 1), -1);
        let r = p.substitute("z", &neg_w);
        assert_eq!(r.num_terms(), 2);
        assert_eq!(r.coeff(&Monomial::var("w", 1)), BigInt::from(-1));
        assert_eq!(r.coeff(&Monomial::var("w", -1)), BigInt::from(-1));
    }

    #[test]
    fn display_is_readable() {
        let p = z(1, 2).neg().add(&LaurentPoly::constant(3));
        assert_eq!(p.to_string(), "3 - z1^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
