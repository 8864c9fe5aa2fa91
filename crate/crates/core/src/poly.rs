//! Exact Laurent polynomials and truncated power series in q over
//! arbitrary-precision integers.
//!
//! [`IntLaurentPoly`] is the value type for every finite identity: a dense
//! coefficient vector together with the exponent of its first entry.
//! Construction canonicalizes (leading/trailing zeros trimmed), so equality
//! is plain structural equality. [`TruncSeries`] realizes formal power
//! series cut off at a fixed degree cap, used for the infinite identities.
//!
//! The text rendering produced by [`IntLaurentPoly::render`] (ascending
//! exponents, explicit signs, `c*q^e` terms) is the exact payload embedded
//! in JSON reports; [`IntLaurentPoly::parse`] reads the same format back.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// Integer-coefficient Laurent polynomial in q, kept in canonical form.
///
/// The zero polynomial is the distinguished value with an empty coefficient
/// vector and `min_exp == 0`. For any nonzero value the first and last
/// entries of `coeffs` are nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct IntLaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl IntLaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        IntLaurentPoly { min_exp: 0, coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        IntLaurentPoly { min_exp: 0, coeffs: vec![BigInt::one()] }
    }

    /// The monomial c * q^e.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        IntLaurentPoly { min_exp: e, coeffs: vec![c] }
    }

    /// Build from a coefficient run starting at `min_exp`; trims to
    /// canonical form.
    pub fn from_coeffs(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = IntLaurentPoly { min_exp, coeffs };
        p.canonicalize();
        p
    }

    fn canonicalize(&mut self) {
        let leading_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if leading_zeros == self.coeffs.len() {
            self.min_exp = 0;
            self.coeffs.clear();
            return;
        }
        if leading_zeros > 0 {
            self.coeffs.drain(..leading_zeros);
            self.min_exp += leading_zeros as i64;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_exp == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent present, `None` for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        if self.is_zero() { None } else { Some(self.min_exp) }
    }

    /// Highest exponent present, `None` for the zero polynomial.
    pub fn max_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64 - 1)
        }
    }

    /// Coefficient of q^e.
    pub fn coeff(&self, e: i64) -> BigInt {
        let idx = e - self.min_exp;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Number of stored terms (including interior zeros of the dense run).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Iterate over (exponent, coefficient) pairs of the dense run.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        let min = self.min_exp;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (min + i as i64, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let min = self.min_exp.min(other.min_exp);
        let max = self.max_exp().unwrap().max(other.max_exp().unwrap());
        let mut coeffs = vec![BigInt::zero(); (max - min + 1) as usize];
        for (e, c) in self.terms() {
            coeffs[(e - min) as usize] += c;
        }
        for (e, c) in other.terms() {
            coeffs[(e - min) as usize] += c;
        }
        Self::from_coeffs(min, coeffs)
    }

    pub fn neg(&self) -> Self {
        IntLaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Exact product by schoolbook convolution.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let min = self.min_exp + other.min_exp;
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(min, coeffs)
    }

    /// Multiply by q^k.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        IntLaurentPoly { min_exp: self.min_exp + k, coeffs: self.coeffs.clone() }
    }

    /// Substitute q -> q^t (t >= 1); every exponent is multiplied by t.
    pub fn dilate(&self, t: i64) -> Self {
        assert!(t >= 1, "dilation factor must be positive");
        if self.is_zero() || t == 1 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * t as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i * t as usize] = c.clone();
            }
        }
        Self::from_coeffs(self.min_exp * t, coeffs)
    }

    /// Substitute q -> 1/q; exponent e becomes -e.
    pub fn reverse(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let max = self.max_exp().unwrap();
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntLaurentPoly { min_exp: -max, coeffs }
    }

    /// Smallest exponent carrying a negative coefficient, if any.
    pub fn first_negative(&self) -> Option<i64> {
        self.terms().find(|(_, c)| c.is_negative()).map(|(e, _)| e)
    }

    /// True iff every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.first_negative().is_none()
    }

    /// Value at q = 1, i.e. the coefficient sum.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Smallest exponent at which two polynomials differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<i64> {
        if self == other {
            return None;
        }
        let lo = match (self.min_exp(), other.min_exp()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => return None,
        };
        let hi = self.max_exp().unwrap_or(lo).max(other.max_exp().unwrap_or(lo));
        (lo..=hi).find(|&e| self.coeff(e) != other.coeff(e))
    }

    /// Render as "c*q^e + ..." in ascending exponent order.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.terms() {
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&render_term(&mag, e));
        }
        out
    }

    /// Parse the format produced by [`render`](Self::render).
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::PolyParse { reason: "empty input".into() });
        }
        if text == "0" {
            return Ok(Self::zero());
        }
        let mut poly = Self::zero();
        let mut rest = text;
        let mut sign = BigInt::one();
        let mut first = true;
        loop {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            if !first {
                let op = rest.chars().next().unwrap();
                match op {
                    '+' => sign = BigInt::one(),
                    '-' => sign = -BigInt::one(),
                    _ => {
                        return Err(Error::PolyParse {
                            reason: format!("expected '+' or '-' before `{rest}`"),
                        })
                    }
                }
                rest = rest[1..].trim_start();
            } else if let Some(stripped) = rest.strip_prefix('-') {
                sign = -BigInt::one();
                rest = stripped.trim_start();
            }
            let term_end = split_term(rest).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(term_end);
            let (coeff, exp) = parse_term(term.trim())?;
            poly = poly.add(&Self::monomial(&sign * coeff, exp));
            rest = tail;
            first = false;
        }
        Ok(poly)
    }
}

/// Find where the current term ends: the next top-level '+'/'-' that is not
/// an exponent sign (i.e. not directly preceded by '^').
fn split_term(s: &str) -> Option<usize> {
    let bytes = s.as_bytes();
    let mut prev_non_space = 0u8;
    for (i, &b) in bytes.iter().enumerate() {
        if (b == b'+' || b == b'-') && i > 0 && prev_non_space != b'^' {
            return Some(i);
        }
        if b != b' ' {
            prev_non_space = b;
        }
    }
    None
}

fn parse_term(term: &str) -> Result<(BigInt, i64)> {
    let bad = |reason: String| Error::PolyParse { reason };
    if term.is_empty() {
        return Err(bad("empty term".into()));
    }
    let (coeff_str, q_part) = match term.find('q') {
        None => (term, ""),
        Some(0) => ("1", term),
        Some(i) => {
            let head = term[..i].trim_end();
            let head = head.strip_suffix('*').map(str::trim_end).unwrap_or(head);
            (head, &term[i..])
        }
    };
    let coeff: BigInt = coeff_str
        .trim()
        .parse()
        .map_err(|_| bad(format!("bad coefficient `{coeff_str}`")))?;
    let exp = match q_part {
        "" => 0,
        "q" => 1,
        _ => {
            let e = q_part
                .strip_prefix("q^")
                .ok_or_else(|| bad(format!("bad term `{term}`")))?;
            e.trim()
                .parse()
                .map_err(|_| bad(format!("bad exponent `{e}`")))?
        }
    };
    Ok((coeff, exp))
}

fn render_term(mag: &BigInt, e: i64) -> String {
    match e {
        0 => mag.to_string(),
        1 if mag.is_one() => "q".to_string(),
        1 => format!("{mag}*q"),
        _ if mag.is_one() => format!("q^{e}"),
        _ => format!("{mag}*q^{e}"),
    }
}

impl fmt::Display for IntLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for IntLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntLaurentPoly({})", self.render())
    }
}

/// Integer power series truncated at a fixed degree cap.
///
/// All arithmetic discards exponents above the cap; both operands of a
/// binary operation must share the same cap.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    cap: i64,
    coeffs: Vec<BigInt>, // exactly cap + 1 entries, exponents 0..=cap
}

impl TruncSeries {
    pub fn zero(cap: i64) -> Self {
        assert!(cap >= 0, "cap must be nonnegative");
        TruncSeries { cap, coeffs: vec![BigInt::zero(); cap as usize + 1] }
    }

    pub fn one(cap: i64) -> Self {
        let mut s = Self::zero(cap);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// c * q^e, dropped entirely when e > cap.
    pub fn monomial(cap: i64, c: impl Into<BigInt>, e: i64) -> Self {
        assert!(e >= 0, "series monomial exponent must be nonnegative");
        let mut s = Self::zero(cap);
        if e <= cap {
            s.coeffs[e as usize] = c.into();
        }
        s
    }

    /// Truncate a Laurent polynomial; terms below q^0 are an error.
    pub fn from_poly(p: &IntLaurentPoly, cap: i64) -> Result<Self> {
        if let Some(min) = p.min_exp() {
            if min < 0 {
                return Err(Error::NegativeMinExp { min_exp: min });
            }
        }
        let mut s = Self::zero(cap);
        for (e, c) in p.terms() {
            if e <= cap {
                s.coeffs[e as usize] = c.clone();
            }
        }
        Ok(s)
    }

    pub fn cap(&self) -> i64 {
        self.cap
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if e < 0 || e > self.cap {
            BigInt::zero()
        } else {
            self.coeffs[e as usize].clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.cap, other.cap, "cap mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        TruncSeries { cap: self.cap, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.cap, other.cap, "cap mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        TruncSeries { cap: self.cap, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cap, other.cap, "cap mismatch");
        let mut coeffs = vec![BigInt::zero(); self.cap as usize + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(self.cap as usize + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncSeries { cap: self.cap, coeffs }
    }

    /// Multiplicative inverse up to the cap; the constant term must be a
    /// unit (+1 or -1).
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !c0.is_one() && !(-c0).is_one() {
            return Err(Error::NonUnitConstant { constant: c0.to_string() });
        }
        // With a unit constant u, the inverse b satisfies
        //   b_0 = u,  b_n = -u * sum_{k=1..n} a_k b_{n-k}.
        let u = c0.clone();
        let mut inv = vec![BigInt::zero(); self.cap as usize + 1];
        inv[0] = u.clone();
        for n in 1..=self.cap as usize {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &inv[n - k];
                }
            }
            inv[n] = -(&u * acc);
        }
        Ok(TruncSeries { cap: self.cap, coeffs: inv })
    }

    pub fn first_negative(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| c.is_negative())
            .map(|i| i as i64)
    }

    /// Smallest exponent (up to the shared cap) where two series differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<i64> {
        assert_eq!(self.cap, other.cap, "cap mismatch");
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
            .map(|i| i as i64)
    }

    /// Render using the polynomial text format.
    pub fn render(&self) -> String {
        IntLaurentPoly::from_coeffs(0, self.coeffs.clone()).render()
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries[cap {}]({})", self.cap, self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(text: &str) -> IntLaurentPoly {
        IntLaurentPoly::parse(text).unwrap()
    }

    #[test]
    fn mul_difference_of_squares() {
        assert_eq!(p("1 + q").mul(&p("1 - q")), p("1 - q^2"));
    }

    #[test]
    fn mul_by_zero_annihilates() {
        let a = p("3 + q^2 - 5*q^7");
        assert_eq!(a.mul(&IntLaurentPoly::zero()), IntLaurentPoly::zero());
    }

    #[test]
    fn mul_schoolbook_example() {
        assert_eq!(p("1 + q").mul(&p("1 + q + q^2")), p("1 + 2*q + 2*q^2 + q^3"));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p("1 + q").shift(2), p("q^2 + q^3"));
        let a = p("2 - q^3");
        assert_eq!(a.shift(0), a);
        assert_eq!(p("q^-1 + 1").shift(1), p("1 + q"));
    }

    #[test]
    fn dilate_examples() {
        assert_eq!(p("1 + q").dilate(3), p("1 + q^3"));
        let a = p("1 - 2*q + q^5");
        assert_eq!(a.dilate(1), a);
        assert_eq!(p("q^-1 + q").dilate(2), p("q^-2 + q^2"));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(p("1 + q").reverse(), p("q^-1 + 1"));
        let a = p("q^-2 + 3 - q^4");
        assert_eq!(a.reverse().reverse(), a);
    }

    #[test]
    fn nonnegativity_witness() {
        assert!(p("1 + q^2").is_nonnegative());
        assert_eq!(p("1 - q").first_negative(), Some(1));
        assert_eq!(p("-q^-3 + 1").first_negative(), Some(-3));
    }

    #[test]
    fn invert_geometric_series() {
        let s = TruncSeries::from_poly(&p("1 - q"), 4).unwrap();
        let inv = s.invert().unwrap();
        assert_eq!(inv, TruncSeries::from_poly(&p("1 + q + q^2 + q^3 + q^4"), 4).unwrap());
    }

    #[test]
    fn invert_one_is_one() {
        let one = TruncSeries::one(6);
        assert_eq!(one.invert().unwrap(), one);
    }

    #[test]
    fn invert_finite_pochhammer_counts_partitions() {
        // 1/((1-q)(1-q^2)) counts partitions into parts of size at most 2.
        let q2 = p("1 - q").mul(&p("1 - q^2"));
        let inv = TruncSeries::from_poly(&q2, 5).unwrap().invert().unwrap();
        let expected = p("1 + q + 2*q^2 + 2*q^3 + 3*q^4 + 3*q^5");
        assert_eq!(inv, TruncSeries::from_poly(&expected, 5).unwrap());
    }

    #[test]
    fn invert_rejects_non_unit() {
        let s = TruncSeries::from_poly(&p("2 + q"), 3).unwrap();
        assert!(matches!(s.invert(), Err(Error::NonUnitConstant { .. })));
    }

    #[test]
    fn trunc_series_rejects_negative_min_exp() {
        let e = TruncSeries::from_poly(&p("q^-1 + 1"), 3);
        assert!(matches!(e, Err(Error::NegativeMinExp { min_exp: -1 })));
    }

    #[test]
    fn render_matches_expected_format() {
        assert_eq!(p("1 + q + 2*q^2 + q^3 + q^4").render(), "1 + q + 2*q^2 + q^3 + q^4");
        assert_eq!(IntLaurentPoly::zero().render(), "0");
        assert_eq!(p("-1 + q").render(), "-1 + q");
        assert_eq!(p("q^-1 + 1").render(), "q^-1 + 1");
        assert_eq!(IntLaurentPoly::monomial(-7, 2).render(), "-7*q^2");
    }

    fn arb_poly() -> impl Strategy<Value = IntLaurentPoly> {
        (
            -6i64..6,
            prop::collection::vec(-9i64..10, 0..8),
        )
            .prop_map(|(min, cs)| {
                IntLaurentPoly::from_coeffs(min, cs.into_iter().map(BigInt::from).collect())
            })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.sub(&a), IntLaurentPoly::zero());
        }

        #[test]
        fn dilate_commutes_with_reverse(a in arb_poly(), t in 1i64..=4) {
            prop_assert_eq!(a.dilate(t).reverse(), a.reverse().dilate(t));
        }

        #[test]
        fn invert_roundtrip(cs in prop::collection::vec(-5i64..6, 0..20), unit in prop::bool::ANY) {
            let mut coeffs = vec![BigInt::from(if unit { 1 } else { -1 })];
            coeffs.extend(cs.into_iter().map(BigInt::from));
            let cap = 50;
            let s = TruncSeries::from_poly(&IntLaurentPoly::from_coeffs(0, coeffs), cap).unwrap();
            let prod = s.invert().unwrap().mul(&s);
            prop_assert_eq!(prod, TruncSeries::one(cap));
        }

        #[test]
        fn render_parse_roundtrip(a in arb_poly()) {
            prop_assert_eq!(IntLaurentPoly::parse(&a.render()).unwrap(), a);
        }

        #[test]
        fn nonnegative_agrees_with_scan(a in arb_poly()) {
            let by_scan = a.terms().all(|(_, c)| !c.is_negative());
            prop_assert_eq!(a.is_nonnegative(), by_scan);
        }
    }
}
