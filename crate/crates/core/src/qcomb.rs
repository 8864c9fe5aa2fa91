//! q-combinatorial building blocks: Gaussian binomial coefficients, finite
//! Pochhammer products, double binomials, triangular numbers, q-trinomial
//! coefficients and floor-indexed binomials.
//!
//! Binomials are computed by the Pascal recurrence
//! `[n; m] = [n-1; m-1] + q^m [n-1; m]` with a process-wide memo cache, so
//! every identity evaluation shares the same table. Out-of-range arguments
//! yield the zero polynomial; the theta sums rely on that to self-truncate.

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::One;
use std::sync::{Arc, OnceLock};

use crate::poly::IntLaurentPoly;

/// Triangular number T(j) = j(j+1)/2; nonnegative for all integers j and
/// symmetric under j -> -1-j.
pub fn triangular(j: i64) -> i64 {
    j * (j + 1) / 2
}

/// Floor division with the quotient rounded toward negative infinity.
pub fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// Ceiling division for positive divisors.
pub fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

type BinomCache = DashMap<(i64, i64), Arc<IntLaurentPoly>>;

fn binom_cache() -> &'static BinomCache {
    static CACHE: OnceLock<BinomCache> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

fn poly_zero() -> Arc<IntLaurentPoly> {
    static ZERO: OnceLock<Arc<IntLaurentPoly>> = OnceLock::new();
    ZERO.get_or_init(|| Arc::new(IntLaurentPoly::zero())).clone()
}

fn poly_one() -> Arc<IntLaurentPoly> {
    static ONE: OnceLock<Arc<IntLaurentPoly>> = OnceLock::new();
    ONE.get_or_init(|| Arc::new(IntLaurentPoly::one())).clone()
}

/// Shared-cache binomial in top/bottom form; zero outside 0 <= bottom <= top.
pub(crate) fn binom_tb_arc(top: i64, bottom: i64) -> Arc<IntLaurentPoly> {
    if bottom < 0 || bottom > top {
        return poly_zero();
    }
    // [top; bottom] and [top; top-bottom] are the same polynomial.
    let bottom = bottom.min(top - bottom);
    if bottom == 0 {
        return poly_one();
    }
    let key = (top, bottom);
    if let Some(hit) = binom_cache().get(&key) {
        return hit.clone();
    }
    let a = binom_tb_arc(top - 1, bottom - 1);
    let b = binom_tb_arc(top - 1, bottom);
    let value = Arc::new(a.add(&b.shift(bottom)));
    binom_cache().insert(key, value.clone());
    value
}

/// Gaussian binomial in the symmetric (m, n) form: the polynomial
/// `(q)_{m+n} / ((q)_m (q)_n)` of degree m*n when m, n >= 0, and the zero
/// polynomial otherwise.
pub fn qbinom(m: i64, n: i64) -> IntLaurentPoly {
    if m < 0 || n < 0 {
        return IntLaurentPoly::zero();
    }
    (*binom_tb_arc(m + n, m)).clone()
}

/// Gaussian binomial `[top; bottom]`; zero when bottom < 0 or bottom > top.
pub fn qbinom_top_bottom(top: i64, bottom: i64) -> IntLaurentPoly {
    (*binom_tb_arc(top, bottom)).clone()
}

/// Sign of the Pochhammer argument +/-q^s.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Finite Pochhammer product `prod_{j=0}^{m-1} (1 - sign * q^{s + j t})`.
///
/// `pochhammer(Sign::Plus, 1, 1, m)` is (q)_m and
/// `pochhammer(Sign::Minus, 1, 2, m)` is (-q; q^2)_m.
pub fn pochhammer(sign: Sign, s: i64, t: i64, m: i64) -> IntLaurentPoly {
    assert!(s >= 0, "base exponent must be nonnegative");
    assert!(t >= 1, "step must be positive");
    assert!(m >= 0, "length must be nonnegative");
    let mut acc = IntLaurentPoly::one();
    for j in 0..m {
        let c: BigInt = match sign {
            Sign::Plus => -BigInt::one(),
            Sign::Minus => BigInt::one(),
        };
        let factor = IntLaurentPoly::one().add(&IntLaurentPoly::monomial(c, s + j * t));
        acc = acc.mul(&factor);
    }
    acc
}

/// Double binomial `[L; m, k] = [L; m] [L-m; k]`; zero when any index is
/// out of range.
pub fn double_binom(l: i64, m: i64, k: i64) -> IntLaurentPoly {
    binom_tb_arc(l, m).mul(&binom_tb_arc(l - m, k))
}

pub(crate) fn double_binom_arc(l: i64, m: i64, k: i64) -> IntLaurentPoly {
    binom_tb_arc(l, m).mul(&binom_tb_arc(l - m, k))
}

/// Floor-indexed binomial `[top; floor(offset / 2)]` with floor toward
/// negative infinity.
pub fn floor_binom(top: i64, offset: i64) -> IntLaurentPoly {
    (*binom_tb_arc(top, floor_div(offset, 2))).clone()
}

/// The polynomial `(q^3; q^3)_k / (q)_k`, expanded as
/// `prod_{j=1}^{k} (1 + q^j + q^{2j})`.
pub fn cube_ratio(k: i64) -> IntLaurentPoly {
    assert!(k >= 0, "length must be nonnegative");
    let mut acc = IntLaurentPoly::one();
    for j in 1..=k {
        let f = IntLaurentPoly::one()
            .add(&IntLaurentPoly::monomial(1, j))
            .add(&IntLaurentPoly::monomial(1, 2 * j));
        acc = acc.mul(&f);
    }
    acc
}

/// q-trinomial coefficient T_{-1}(k, a): the sum over m >= 0 with
/// m == k + a (mod 2) of `q^{T(m)} [k; m] [k-m; (k-m-a)/2]`.
pub fn trinomial_tm1(k: i64, a: i64) -> IntLaurentPoly {
    assert!(k >= 0, "trinomial order must be nonnegative");
    let mut acc = IntLaurentPoly::zero();
    for m in 0..=k {
        if (m - k - a).rem_euclid(2) != 0 {
            continue;
        }
        let half = (k - m - a) / 2;
        let part = binom_tb_arc(k, m).mul(&binom_tb_arc(k - m, half));
        if !part.is_zero() {
            acc = acc.add(&part.shift(triangular(m)));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::TruncSeries;
    use num_traits::Zero;

    fn p(text: &str) -> IntLaurentPoly {
        IntLaurentPoly::parse(text).unwrap()
    }

    #[test]
    fn triangular_symmetry() {
        for j in -30..=30 {
            assert!(triangular(j) >= 0);
            assert_eq!(triangular(j), triangular(-1 - j));
        }
        assert_eq!(triangular(0), 0);
    }

    #[test]
    fn floor_div_rounds_toward_negative_infinity() {
        assert_eq!(floor_div(-1, 2), -1);
        assert_eq!(floor_div(1, 2), 0);
        assert_eq!(ceil_div(-1, 3), 0);
        assert_eq!(ceil_div(1, 3), 1);
    }

    #[test]
    fn qbinom_base_cases() {
        assert_eq!(qbinom(0, 5), IntLaurentPoly::one());
        assert_eq!(qbinom(1, -2), IntLaurentPoly::zero());
        assert_eq!(qbinom(2, 2), p("1 + q + 2*q^2 + q^3 + q^4"));
    }

    #[test]
    fn qbinom_top_bottom_examples() {
        assert_eq!(qbinom_top_bottom(2, 1), p("1 + q"));
        assert_eq!(qbinom_top_bottom(3, 5), IntLaurentPoly::zero());
        assert_eq!(qbinom_top_bottom(3, 1), p("1 + q + q^2"));
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(Sign::Plus, 1, 1, 0), IntLaurentPoly::one());
        assert_eq!(pochhammer(Sign::Minus, 1, 1, 2), p("1 + q + q^2 + q^3"));
        assert_eq!(pochhammer(Sign::Minus, 1, 2, 2), p("1 + q + q^3 + q^4"));
    }

    #[test]
    fn double_binom_examples() {
        assert_eq!(double_binom(1, 0, 1), IntLaurentPoly::one());
        assert_eq!(double_binom(0, 0, 1), IntLaurentPoly::zero());
        assert_eq!(double_binom(2, 1, 1), p("1 + q"));
        // the two factorizations agree
        for l in 0..=6 {
            for m in 0..=l {
                for k in 0..=l {
                    let lhs = qbinom_top_bottom(l, m).mul(&qbinom_top_bottom(l - m, k));
                    let rhs = qbinom_top_bottom(l, k).mul(&qbinom_top_bottom(l - k, m));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn floor_binom_examples() {
        assert_eq!(floor_binom(1, 1), IntLaurentPoly::one());
        assert_eq!(floor_binom(2, -1), IntLaurentPoly::zero());
        assert_eq!(floor_binom(4, 3), p("1 + q + q^2 + q^3"));
    }

    #[test]
    fn cube_ratio_divides_exactly() {
        // (q^3;q^3)_k equals (q)_k times the expanded ratio
        for k in 0..=8 {
            let lhs = pochhammer(Sign::Plus, 3, 3, k);
            let rhs = pochhammer(Sign::Plus, 1, 1, k).mul(&cube_ratio(k));
            assert_eq!(lhs, rhs, "k={k}");
        }
    }

    #[test]
    fn trinomial_examples() {
        assert_eq!(trinomial_tm1(0, 0), IntLaurentPoly::one());
        assert_eq!(trinomial_tm1(1, 0), p("q"));
        assert_eq!(trinomial_tm1(1, 1), IntLaurentPoly::one());
    }

    fn integer_binom(n: i64, k: i64) -> BigInt {
        if k < 0 || k > n {
            return BigInt::zero();
        }
        let mut acc = BigInt::one();
        for i in 0..k {
            acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        acc
    }

    #[test]
    fn palindromic_and_counts_at_one() {
        for m in 0..=12i64 {
            for n in 0..=12i64 {
                let b = qbinom(m, n);
                for i in 0..=m * n {
                    assert_eq!(b.coeff(i), b.coeff(m * n - i), "m={m} n={n} i={i}");
                }
                assert_eq!(b.eval_at_one(), integer_binom(m + n, m), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn pascal_recurrences() {
        for n in 1..=20i64 {
            for m in 0..=n {
                let b = qbinom_top_bottom(n, m);
                let first = qbinom_top_bottom(n - 1, m - 1)
                    .add(&qbinom_top_bottom(n - 1, m).shift(m));
                let second = qbinom_top_bottom(n - 1, m)
                    .add(&qbinom_top_bottom(n - 1, m - 1).shift(n - m));
                assert_eq!(b, first, "n={n} m={m}");
                assert_eq!(b, second, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn inversion_rule() {
        // substituting q -> 1/q multiplies [n+m; n] by q^{-nm}
        for m in 0..=10i64 {
            for n in 0..=10i64 {
                let b = qbinom(m, n);
                assert_eq!(b.reverse(), b.shift(-m * n));
            }
        }
    }

    #[test]
    fn q_binomial_theorem() {
        // sum_n q^{n(n-1)/2} (q^s)^n [L; n] = (-q^s; q)_L
        for s in 0..=4i64 {
            for l in 0..=12i64 {
                let mut lhs = IntLaurentPoly::zero();
                for n in 0..=l {
                    let e = n * (n - 1) / 2 + s * n;
                    lhs = lhs.add(&qbinom_top_bottom(l, n).shift(e));
                }
                assert_eq!(lhs, pochhammer(Sign::Minus, s, 1, l), "s={s} L={l}");
            }
        }
    }

    #[test]
    fn finite_jacobi_triple_product() {
        // sum_j (-1)^j q^{j^2} z^j [L+M; L-j]_{q^2} = (q/z; q^2)_M (zq; q^2)_L
        // with z = q^{2s+1}, a Laurent identity for s >= 0.
        let factor = |e: i64| IntLaurentPoly::one().sub(&IntLaurentPoly::monomial(1, e));
        for s in 0..=2i64 {
            for l in 0..=10i64 {
                for m in 0..=10i64 {
                    let mut lhs = IntLaurentPoly::zero();
                    for j in -m..=l {
                        let term = qbinom_top_bottom(l + m, l - j)
                            .dilate(2)
                            .shift(j * j + (2 * s + 1) * j);
                        lhs = if j.rem_euclid(2) == 0 { lhs.add(&term) } else { lhs.sub(&term) };
                    }
                    let mut rhs = IntLaurentPoly::one();
                    for i in 0..m {
                        rhs = rhs.mul(&factor(-2 * s + 2 * i));
                    }
                    for i in 0..l {
                        rhs = rhs.mul(&factor(2 * s + 2 + 2 * i));
                    }
                    assert_eq!(lhs, rhs, "s={s} L={l} M={m}");
                }
            }
        }
    }

    #[test]
    fn trinomial_combination_matches_floor_form() {
        // T_{-1}(k,a) + T_{-1}(k,a+1) = sum_m q^{T(m)} [k; m] [k-m; floor((k-m-a)/2)]
        for k in 0..=12i64 {
            for a in -6..=6i64 {
                let lhs = trinomial_tm1(k, a).add(&trinomial_tm1(k, a + 1));
                let mut rhs = IntLaurentPoly::zero();
                for m in 0..=k {
                    let part = qbinom_top_bottom(k, m)
                        .mul(&floor_binom(k - m, k - m - a));
                    rhs = rhs.add(&part.shift(triangular(m)));
                }
                assert_eq!(lhs, rhs, "k={k} a={a}");
            }
        }
    }

    #[test]
    fn binomial_limits_match_inverted_pochhammer() {
        // coefficients of [L; m] agree with 1/(q)_m up to degree L - m
        for m in 0..=6i64 {
            for l in m..=30i64 {
                let cap = l - m;
                let poch = pochhammer(Sign::Plus, 1, 1, m);
                let inv = TruncSeries::from_poly(&poch, cap.max(0)).unwrap().invert().unwrap();
                let b = qbinom_top_bottom(l, m);
                for e in 0..=cap {
                    assert_eq!(b.coeff(e), inv.coeff(e), "m={m} L={l} e={e}");
                }
            }
        }
    }
}
