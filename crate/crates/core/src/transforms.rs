//! Positivity-preserving kernel transformations.
//!
//! Three kernels are provided, each a finite sum of manifestly nonnegative
//! terms, so any sum `sum_k kernel(L,k) * F(k)` with nonnegative inputs F
//! stays nonnegative:
//!
//! - `C_{L,k} = sum_m q^{T(m)+T(m+k)} [L; m, k]`, paired with the
//!   floor-indexed binomial `[k; floor((k-a)/2)]`;
//! - `W_{L,k} = sum_m q^{(m+k)^2+k^2} [L; m, 2k]`, paired with `[2k; k-a]`;
//! - `O_{L,k} = sum_m q^{2T(m+k)+2T(k)} [L; m, 2k+1]`, the odd companion,
//!   paired with `[2k+1; k-a]`.
//!
//! [`verify_kernel_identity`] checks the closed forms
//!
//! ```text
//! sum_k C_{L,k} [k; floor((k-a)/2)] = q^{T(a)}  [2L+1; L-a]
//! sum_k W_{L,k} [2k; k-a]           = q^{2a^2}  [2L; L-2a]
//! sum_k O_{L,k} [2k+1; k-a]         = q^{4T(a)} [2L; L-2a-1]
//! ```
//!
//! Kernel rows are cached per (kind, L) since identity checks reuse them.

use dashmap::DashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::poly::IntLaurentPoly;
use crate::qcomb::{binom_tb_arc, double_binom_arc, floor_binom, qbinom, triangular, trinomial_tm1};

/// Which of the three kernels to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KernelKind {
    C,
    W,
    O,
}

impl KernelKind {
    /// Largest k with a nonzero kernel entry at size L.
    pub fn k_max(self, l: i64) -> i64 {
        match self {
            KernelKind::C => l,
            KernelKind::W => l.div_euclid(2),
            KernelKind::O => (l - 1).div_euclid(2),
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "C" | "c" => Some(KernelKind::C),
            "W" | "w" => Some(KernelKind::W),
            "O" | "o" => Some(KernelKind::O),
            _ => None,
        }
    }
}

impl fmt::Display for KernelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            KernelKind::C => "C",
            KernelKind::W => "W",
            KernelKind::O => "O",
        };
        f.write_str(tag)
    }
}

/// One cached row of kernel entries: k = 0 ..= k_max(kind, L).
#[derive(Clone, Debug)]
pub struct KernelMatrix {
    pub kind: KernelKind,
    pub l: i64,
    pub entries: Vec<IntLaurentPoly>,
}

fn kernel_entry(kind: KernelKind, l: i64, k: i64) -> IntLaurentPoly {
    let mut acc = IntLaurentPoly::zero();
    for m in 0..=l {
        let (exp, cols) = match kind {
            KernelKind::C => (triangular(m) + triangular(m + k), k),
            KernelKind::W => ((m + k) * (m + k) + k * k, 2 * k),
            KernelKind::O => (2 * triangular(m + k) + 2 * triangular(k), 2 * k + 1),
        };
        let b = double_binom_arc(l, m, cols);
        if !b.is_zero() {
            acc = acc.add(&b.shift(exp));
        }
    }
    acc
}

type RowCache = DashMap<(KernelKind, i64), Arc<KernelMatrix>>;

fn row_cache() -> &'static RowCache {
    static CACHE: OnceLock<RowCache> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

/// Full kernel row at size L, computed once and shared.
pub fn kernel_row(kind: KernelKind, l: i64) -> Arc<KernelMatrix> {
    assert!(l >= 0, "kernel size must be nonnegative");
    if let Some(hit) = row_cache().get(&(kind, l)) {
        return hit.clone();
    }
    let entries = (0..=kind.k_max(l)).map(|k| kernel_entry(kind, l, k)).collect();
    let row = Arc::new(KernelMatrix { kind, l, entries });
    row_cache().insert((kind, l), row.clone());
    row
}

/// Single kernel entry; zero outside the support.
pub fn kernel(kind: KernelKind, l: i64, k: i64) -> IntLaurentPoly {
    assert!(l >= 0, "kernel size must be nonnegative");
    if k < 0 || k > kind.k_max(l) {
        return IntLaurentPoly::zero();
    }
    kernel_row(kind, l).entries[k as usize].clone()
}

/// Apply the kernel transform: `sum_k kernel(kind, L, k) * F(k)`.
///
/// F is queried only inside the kernel support at L.
pub fn apply_transform<F>(kind: KernelKind, l: i64, f: F) -> IntLaurentPoly
where
    F: Fn(i64) -> IntLaurentPoly,
{
    let row = kernel_row(kind, l);
    let mut acc = IntLaurentPoly::zero();
    for (k, entry) in row.entries.iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let fk = f(k as i64);
        if !fk.is_zero() {
            acc = acc.add(&entry.mul(&fk));
        }
    }
    acc
}

/// Check the closed-form summation for one kernel at (L, a).
pub fn verify_kernel_identity(kind: KernelKind, l: i64, a: i64) -> bool {
    assert!(l >= 0, "kernel size must be nonnegative");
    let lhs = match kind {
        KernelKind::C => apply_transform(kind, l, |k| floor_binom(k, k - a)),
        KernelKind::W => apply_transform(kind, l, |k| (*binom_tb_arc(2 * k, k - a)).clone()),
        KernelKind::O => apply_transform(kind, l, |k| (*binom_tb_arc(2 * k + 1, k - a)).clone()),
    };
    let rhs = match kind {
        KernelKind::C => binom_tb_arc(2 * l + 1, l - a).shift(triangular(a)),
        KernelKind::W => binom_tb_arc(2 * l, l - 2 * a).shift(2 * a * a),
        KernelKind::O => binom_tb_arc(2 * l, l - 2 * a - 1).shift(4 * triangular(a)),
    };
    lhs == rhs
}

/// Check the trinomial summation
/// `sum_k q^{T(k)} [L; k] (T_{-1}(k,a) + T_{-1}(k,a+1)) = q^{T(a)} [2L+1; L-a]`.
pub fn verify_trinomial_identity(l: i64, a: i64) -> bool {
    assert!(l >= 0, "size must be nonnegative");
    let mut lhs = IntLaurentPoly::zero();
    for k in 0..=l {
        let tri = trinomial_tm1(k, a).add(&trinomial_tm1(k, a + 1));
        if tri.is_zero() {
            continue;
        }
        let term = binom_tb_arc(l, k).mul(&tri).shift(triangular(k));
        lhs = lhs.add(&term);
    }
    let rhs = binom_tb_arc(2 * l + 1, l - a).shift(triangular(a));
    lhs == rhs
}

/// `sum_k C_{L,k}` rewritten as `sum_k q^{T(k)} [L; k] (-q)_k`; both sides
/// returned for comparison.
pub fn kernel_sum_pair(l: i64) -> (IntLaurentPoly, IntLaurentPoly) {
    let direct = apply_transform(KernelKind::C, l, |_| IntLaurentPoly::one());
    let mut poch_form = IntLaurentPoly::zero();
    for k in 0..=l {
        let poch = crate::qcomb::pochhammer(crate::qcomb::Sign::Minus, 1, 1, k);
        let term = qbinom(k, l - k).mul(&poch).shift(triangular(k));
        poch_form = poch_form.add(&term);
    }
    (direct, poch_form)
}
