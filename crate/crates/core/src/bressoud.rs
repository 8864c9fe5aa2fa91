//! The two-parameter family of alternating binomial sums
//! `G(N, M, alpha, beta, K, q)`, its admissible positivity region, and the
//! Borwein polynomial triple with its cyclotomic-style decomposition.
//!
//! The fractional parameters alpha = alphaK/K and beta = betaK/K are carried
//! as the integer pair (alphaK, betaK) together with K; all region and
//! exponent arithmetic stays in exact integers.

use crate::error::{Error, Result};
use crate::poly::IntLaurentPoly;
use crate::qcomb::{binom_tb_arc, ceil_div, floor_div};

/// Parameters (N, M, alpha*K, beta*K, K) of the G polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GParams {
    pub n: i64,
    pub m: i64,
    pub alpha_k: i64,
    pub beta_k: i64,
    pub k: i64,
}

impl GParams {
    /// Validated constructor: K >= 2 and alphaK, betaK >= 0.
    pub fn new(n: i64, m: i64, alpha_k: i64, beta_k: i64, k: i64) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParam {
                id: "gpoly".into(),
                reason: format!("K must be at least 2, got {k}"),
            });
        }
        if alpha_k < 0 || beta_k < 0 {
            return Err(Error::InvalidParam {
                id: "gpoly".into(),
                reason: format!("alphaK and betaK must be nonnegative, got ({alpha_k}, {beta_k})"),
            });
        }
        Ok(GParams { n, m, alpha_k, beta_k, k })
    }
}

/// Outcome of the admissible-region test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionVerdict {
    pub in_region: bool,
    /// Human-readable constraints that failed; empty iff `in_region`.
    pub violated: Vec<String>,
}

/// Exact test of the admissible region
/// `1 <= alpha + beta <= 2K - 1`, `beta - K <= N - M <= K - alpha`,
/// with every inequality strict when K = 2.
///
/// All comparisons are carried out on integers after clearing the
/// denominator K.
pub fn region_check(p: &GParams) -> RegionVerdict {
    let GParams { n, m, alpha_k, beta_k, k } = *p;
    let strict = k == 2;
    let ab = alpha_k + beta_k;
    let nm_k = k * (n - m);
    let mut violated = Vec::new();
    let le = |lhs: i64, rhs: i64| if strict { lhs < rhs } else { lhs <= rhs };
    if !le(k, ab) {
        violated.push("1 <= alpha+beta".to_string());
    }
    if !le(ab, k * (2 * k - 1)) {
        violated.push("alpha+beta <= 2K-1".to_string());
    }
    if !le(beta_k - k * k, nm_k) {
        violated.push("beta-K <= N-M".to_string());
    }
    if !le(nm_k, k * k - alpha_k) {
        violated.push("N-M <= K-alpha".to_string());
    }
    RegionVerdict { in_region: violated.is_empty(), violated }
}

/// The alternating sum
/// `sum_j (-1)^j q^{K j ((alpha+beta) j + (alpha-beta)) / 2} [N+M; N-Kj]`,
/// taken over exactly the j with a nonzero binomial.
///
/// The exponent `j ((alphaK+betaK) j + (alphaK-betaK)) / 2` is checked to be
/// an integer for every surviving j; a failure is a hard error naming j.
pub fn g_poly(p: &GParams) -> Result<IntLaurentPoly> {
    let GParams { n, m, alpha_k, beta_k, k } = *p;
    let mut acc = IntLaurentPoly::zero();
    // Binomial support: 0 <= N - Kj <= N + M.
    let lo = ceil_div(-m, k);
    let hi = floor_div(n, k);
    for j in lo..=hi {
        let doubled = j * ((alpha_k + beta_k) * j + (alpha_k - beta_k));
        if doubled % 2 != 0 {
            return Err(Error::NonIntegerExponent { j });
        }
        let exp = doubled / 2;
        let binom = binom_tb_arc(n + m, n - k * j);
        if binom.is_zero() {
            continue;
        }
        let term = binom.shift(exp);
        acc = if j.rem_euclid(2) == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    Ok(acc)
}

/// The Borwein triple (A_n, B_n, C_n) as instances of the G family.
pub fn borwein_abc(n: i64) -> (IntLaurentPoly, IntLaurentPoly, IntLaurentPoly) {
    assert!(n >= 0, "index must be nonnegative");
    let a = g_poly(&GParams { n, m: n, alpha_k: 5, beta_k: 4, k: 3 }).unwrap();
    let b = g_poly(&GParams { n: n - 1, m: n + 1, alpha_k: 7, beta_k: 2, k: 3 }).unwrap();
    let c = g_poly(&GParams { n: n - 1, m: n + 1, alpha_k: 8, beta_k: 1, k: 3 }).unwrap();
    (a, b, c)
}

/// Check `prod_{k=1}^n (1 - q^{3k-1})(1 - q^{3k-2})
///        = A_n(q^3) - q B_n(q^3) - q^2 C_n(q^3)` exactly.
pub fn borwein_decomposition(n: i64) -> bool {
    assert!(n >= 0, "index must be nonnegative");
    let mut lhs = IntLaurentPoly::one();
    for k in 1..=n {
        for e in [3 * k - 1, 3 * k - 2] {
            lhs = lhs.mul(&IntLaurentPoly::one().sub(&IntLaurentPoly::monomial(1, e)));
        }
    }
    let (a, b, c) = borwein_abc(n);
    let rhs = a
        .dilate(3)
        .sub(&b.dilate(3).shift(1))
        .sub(&c.dilate(3).shift(2));
    lhs == rhs
}

/// All integer parameter points of the admissible region with K in the
/// given inclusive range and N + M bounded, together with the count of
/// enumerated points that fell outside the region.
///
/// alphaK and betaK run over 0 ..= K(2K-1), the largest value either can
/// take inside the region.
pub fn region_grid(k_lo: i64, k_hi: i64, max_size: i64) -> (Vec<GParams>, u64) {
    let mut inside = Vec::new();
    let mut outside = 0u64;
    for k in k_lo.max(2)..=k_hi {
        let ab_max = k * (2 * k - 1);
        for n in 0..=max_size {
            for m in 0..=(max_size - n) {
                for alpha_k in 0..=ab_max {
                    for beta_k in 0..=(ab_max - alpha_k) {
                        let params = GParams { n, m, alpha_k, beta_k, k };
                        if region_check(&params).in_region {
                            inside.push(params);
                        } else {
                            outside += 1;
                        }
                    }
                }
            }
        }
    }
    (inside, outside)
}

/// Parameters of the G instance produced by the odd-modulus kernel
/// construction: `G(L, L+1+2s, (nu+1)(1 + (1+2s)/(2nu+1)),
/// (nu+1)(1 - (1+2s)/(2nu+1)), 2nu+1)` for 0 <= s < nu.
pub fn odd_modulus_g_params(nu: i64, s: i64, l: i64) -> GParams {
    assert!(nu >= 1 && (0..nu).contains(&s), "need 0 <= s < nu");
    GParams {
        n: l,
        m: l + 1 + 2 * s,
        alpha_k: 2 * (nu + 1) * (nu + 1 + s),
        beta_k: 2 * (nu + 1) * (nu - s),
        k: 2 * nu + 1,
    }
}
