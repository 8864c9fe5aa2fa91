//! Registry of the finite (polynomial-level) identities: each entry builds
//! both sides as exact polynomials and yields an [`IdentityReport`].
//!
//! Two workhorse evaluators live here:
//!
//! - [`theta_sum`]: finite alternating sums
//!   `sum_j (-1)^j q^{e(j)} [top; bottom(j)]` with a quadratic rational
//!   exponent and a linear or floor-type bottom index. Binomial vanishing
//!   makes the j-support finite; the exponent is checked to be a
//!   nonnegative integer at every surviving j.
//! - [`foda_quano_lhs`]: the finite Andrews-Gordon multi-sum, enumerated
//!   over weakly decreasing chains with early pruning on binomial support.

use std::collections::BTreeMap;
use std::time::Instant;

use crate::bressoud::{g_poly, odd_modulus_g_params};
use crate::error::{Error, Result};
use crate::poly::IntLaurentPoly;
use crate::qcomb::{
    binom_tb_arc, ceil_div, cube_ratio, floor_div, pochhammer, triangular, Sign,
};
use crate::report::{IdentityReport, RENDER_TERM_LIMIT};
use crate::transforms::{apply_transform, kernel_sum_pair, KernelKind};

/// Affine expression `l_coeff * L + constant` in the driving size variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Affine {
    pub l_coeff: i64,
    pub constant: i64,
}

impl Affine {
    pub fn eval(&self, l: i64) -> i64 {
        self.l_coeff * l + self.constant
    }
}

const fn aff(l_coeff: i64, constant: i64) -> Affine {
    Affine { l_coeff, constant }
}

/// Exponent `e(j) = (quad j^2 + lin j + constant) / den` as an exact rational.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadExp {
    pub quad: i64,
    pub lin: i64,
    pub constant: i64,
    pub den: i64,
}

impl QuadExp {
    fn eval(&self, j: i64) -> Result<i64> {
        let num = self.quad * j * j + self.lin * j + self.constant;
        if num.rem_euclid(self.den) != 0 {
            return Err(Error::NonIntegerExponent { j });
        }
        let e = num / self.den;
        if e < 0 {
            return Err(Error::NegativeExponent { j, exp: e });
        }
        Ok(e)
    }
}

/// e(j) = (quad j^2 + lin j) / 2
const fn half(quad: i64, lin: i64) -> QuadExp {
    QuadExp { quad, lin, constant: 0, den: 2 }
}

/// e(j) = quad j^2 + lin j
const fn whole(quad: i64, lin: i64) -> QuadExp {
    QuadExp { quad, lin, constant: 0, den: 1 }
}

/// Bottom index of the binomial inside a theta sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BottomMode {
    /// bottom = center(L) - step * j
    Linear { center: Affine, step: i64 },
    /// bottom = floor((top - step * j - offset) / 2)
    Floor { step: i64, offset: i64 },
}

/// Shape of an alternating theta-like sum; the driving size L is supplied
/// separately to [`theta_sum`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThetaSumSpec {
    pub top: Affine,
    pub exp: QuadExp,
    pub bottom: BottomMode,
    pub alternating: bool,
}

/// Evaluate the finite alternating sum described by `spec` at size `l`.
pub fn theta_sum(spec: &ThetaSumSpec, l: i64) -> Result<IntLaurentPoly> {
    let top = spec.top.eval(l);
    if top < 0 {
        return Ok(IntLaurentPoly::zero());
    }
    // j-support derived from binomial vanishing: bottom in [0, top].
    let (lo, hi) = match spec.bottom {
        BottomMode::Linear { center, step } => {
            assert!(step >= 1, "bottom step must be positive");
            let c = center.eval(l);
            (ceil_div(c - top, step), floor_div(c, step))
        }
        BottomMode::Floor { step, offset } => {
            assert!(step >= 1, "bottom step must be positive");
            (ceil_div(-(top + offset + 1), step), floor_div(top - offset, step))
        }
    };
    let mut acc = IntLaurentPoly::zero();
    for j in lo..=hi {
        let bottom = match spec.bottom {
            BottomMode::Linear { center, step } => center.eval(l) - step * j,
            BottomMode::Floor { step, offset } => floor_div(top - step * j - offset, 2),
        };
        let binom = binom_tb_arc(top, bottom);
        if binom.is_zero() {
            continue;
        }
        let term = binom.shift(spec.exp.eval(j)?);
        let negate = spec.alternating && j.rem_euclid(2) != 0;
        acc = if negate { acc.sub(&term) } else { acc.add(&term) };
    }
    Ok(acc)
}

/// Parameters of the finite Andrews-Gordon multi-sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FodaQuanoParams {
    pub nu: i64,
    pub s: i64,
    pub l: i64,
}

impl FodaQuanoParams {
    pub fn new(nu: i64, s: i64, l: i64) -> Result<Self> {
        if nu < 1 {
            return Err(Error::InvalidParam {
                id: "eq2.21".into(),
                reason: format!("nu must be positive, got {nu}"),
            });
        }
        if !(0..nu).contains(&s) {
            return Err(Error::InvalidParam {
                id: "eq2.21".into(),
                reason: format!("s must satisfy 0 <= s < nu, got s={s}, nu={nu}"),
            });
        }
        if l < 0 {
            return Err(Error::InvalidParam {
                id: "eq2.21".into(),
                reason: format!("L must be nonnegative, got {l}"),
            });
        }
        Ok(FodaQuanoParams { nu, s, l })
    }
}

/// The multi-sum
/// `sum_{n_2..n_nu >= 0} q^{N_2^2+..+N_nu^2 + N_{nu+1-s}+..+N_nu}
///  prod_i [n_i + L - 2(N_2+..+N_i) - E_i; n_i]`
/// with `N_i = n_i + .. + n_nu` and `E_i = max(i + s - nu, 0)`.
///
/// Enumeration runs over the weakly decreasing chain N_2 >= .. >= N_nu >= 0;
/// a chain prefix is pruned as soon as some binomial top drops below its
/// bottom, which depends only on the prefix. For nu = 1 the empty product
/// gives the constant 1.
pub fn foda_quano_lhs(p: &FodaQuanoParams) -> IntLaurentPoly {
    let FodaQuanoParams { nu, s, l } = *p;
    if nu == 1 {
        return IntLaurentPoly::one();
    }
    let levels = (nu - 1) as usize; // chain entries N_2 .. N_nu
    let mut chain = vec![0i64; levels];
    let mut acc = IntLaurentPoly::zero();
    enumerate_chain(nu, s, l, 0, &mut chain, &mut acc);
    acc
}

fn excess(i: i64, s: i64, nu: i64) -> i64 {
    (i + s - nu).max(0)
}

fn enumerate_chain(
    nu: i64,
    s: i64,
    l: i64,
    level: usize,
    chain: &mut Vec<i64>,
    acc: &mut IntLaurentPoly,
) {
    let i = level as i64 + 2; // this level chooses N_i
    let upper = if level == 0 { i64::MAX } else { chain[level - 1] };
    let prefix_sum: i64 = chain[..level].iter().sum();
    let mut value = 0i64;
    while value <= upper {
        // binomial support at level i: L - 2 * (N_2 + .. + N_i) - E_i >= 0
        if l - 2 * (prefix_sum + value) - excess(i, s, nu) < 0 {
            break;
        }
        chain[level] = value;
        if level + 1 == chain.len() {
            add_chain_term(nu, s, l, chain, acc);
        } else {
            enumerate_chain(nu, s, l, level + 1, chain, acc);
        }
        value += 1;
    }
    chain[level] = 0;
}

fn add_chain_term(nu: i64, s: i64, l: i64, chain: &[i64], acc: &mut IntLaurentPoly) {
    let mut exp = 0i64;
    for (idx, &n_cum) in chain.iter().enumerate() {
        let i = idx as i64 + 2;
        exp += n_cum * n_cum;
        if i >= nu + 1 - s {
            exp += n_cum;
        }
    }
    let mut term = IntLaurentPoly::monomial(1, exp);
    let mut running = 0i64;
    for (idx, &n_cum) in chain.iter().enumerate() {
        let i = idx as i64 + 2;
        running += n_cum;
        let next = chain.get(idx + 1).copied().unwrap_or(0);
        let n_i = n_cum - next;
        let top = n_i + l - 2 * running - excess(i, s, nu);
        term = term.mul(&binom_tb_arc(top, n_i));
        if term.is_zero() {
            return;
        }
    }
    *acc = acc.add(&term);
}

/// Kernel transform of the finite Andrews-Gordon sum:
/// `sum_k C_{L,k} * foda_quano_lhs(nu, s, k)`.
pub fn theorem1_lhs(p: &FodaQuanoParams) -> IntLaurentPoly {
    let FodaQuanoParams { nu, s, l } = *p;
    apply_transform(KernelKind::C, l, |k| {
        foda_quano_lhs(&FodaQuanoParams { nu, s, l: k })
    })
}

/// Right-hand side of the transformed identity:
/// `q^{T(s)} sum_j (-1)^j q^{(nu+1)(2nu+1) j^2 + (nu+1)(2s+1) j}
///  [2L+1; L-s-(2nu+1)j]`.
pub fn theorem1_rhs(p: &FodaQuanoParams) -> Result<IntLaurentPoly> {
    let FodaQuanoParams { nu, s, l } = *p;
    let spec = ThetaSumSpec {
        top: aff(2, 1),
        exp: whole((nu + 1) * (2 * nu + 1), (nu + 1) * (2 * s + 1)),
        bottom: BottomMode::Linear { center: aff(1, -s), step: 2 * nu + 1 },
        alternating: true,
    };
    Ok(theta_sum(&spec, l)?.shift(triangular(s)))
}

/// The same right-hand side obtained through the G family, up to the
/// q^{T(s)} prefactor: `G(L-s, L+s+1, ., ., 2nu+1)` with the odd-modulus
/// parameters.
pub fn theorem1_g_side(p: &FodaQuanoParams) -> Result<IntLaurentPoly> {
    let FodaQuanoParams { nu, s, l } = *p;
    let mut params = odd_modulus_g_params(nu, s, 0);
    params.n = l - s;
    params.m = l + s + 1;
    Ok(g_poly(&params)?.shift(triangular(s)))
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

/// Declared parameter of an identity with its documented default range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub lo: i64,
    pub hi: i64,
}

const fn param(name: &'static str, lo: i64, hi: i64) -> ParamSpec {
    ParamSpec { name, lo, hi }
}

/// Registry metadata for one identity.
#[derive(Clone, Copy, Debug)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub summary: &'static str,
    pub params: &'static [ParamSpec],
    /// Whether the verdict also requires nonnegative coefficients.
    pub positivity: bool,
}

/// Typed access to a parameter map.
pub(crate) struct ParamView<'a> {
    id: &'a str,
    map: &'a BTreeMap<String, i64>,
}

impl<'a> ParamView<'a> {
    pub fn get(&self, name: &str) -> Result<i64> {
        self.map.get(name).copied().ok_or_else(|| Error::MissingParam {
            id: self.id.to_string(),
            param: name.to_string(),
        })
    }
}

type BuildFn = fn(&ParamView) -> Result<Vec<(&'static str, IntLaurentPoly)>>;
type ConstraintFn = fn(&BTreeMap<String, i64>) -> bool;

struct FiniteIdentity {
    desc: IdentityDescriptor,
    /// Extra validity constraint on a parameter combination (grid sweeps
    /// skip combinations that fail it).
    constraint: Option<ConstraintFn>,
    build: BuildFn,
}

fn delta(l: i64) -> IntLaurentPoly {
    if l == 0 { IntLaurentPoly::one() } else { IntLaurentPoly::zero() }
}

/// `sum_{n>=0} q^{n^2 + shift*n} [l; n]`.
fn rr_sum(l: i64, shift: i64) -> IntLaurentPoly {
    let mut acc = IntLaurentPoly::zero();
    for n in 0..=l.max(0) {
        let b = binom_tb_arc(l, n);
        if !b.is_zero() {
            acc = acc.add(&b.shift(n * n + shift * n));
        }
    }
    acc
}

/// `sum_k q^{T(k)} [L; k] (-q)_k`.
pub(crate) fn lebesgue_lhs(l: i64) -> IntLaurentPoly {
    let mut acc = IntLaurentPoly::zero();
    for k in 0..=l {
        let term = binom_tb_arc(l, k)
            .mul(&pochhammer(Sign::Minus, 1, 1, k))
            .shift(triangular(k));
        acc = acc.add(&term);
    }
    acc
}

/// `sum_k (-q)_{L-k} q^{(L+1)k} [L; k]`.
fn pnt_lhs(l: i64) -> IntLaurentPoly {
    let mut acc = IntLaurentPoly::zero();
    for k in 0..=l {
        let term = binom_tb_arc(l, k)
            .mul(&pochhammer(Sign::Minus, 1, 1, l - k))
            .shift((l + 1) * k);
        acc = acc.add(&term);
    }
    acc
}

fn kernel_identity_sides(kind: KernelKind, l: i64, a: i64) -> Vec<(&'static str, IntLaurentPoly)> {
    let lhs = match kind {
        KernelKind::C => apply_transform(kind, l, |k| crate::qcomb::floor_binom(k, k - a)),
        KernelKind::W => apply_transform(kind, l, |k| (*binom_tb_arc(2 * k, k - a)).clone()),
        KernelKind::O => apply_transform(kind, l, |k| (*binom_tb_arc(2 * k + 1, k - a)).clone()),
    };
    let rhs = match kind {
        KernelKind::C => binom_tb_arc(2 * l + 1, l - a).shift(triangular(a)),
        KernelKind::W => binom_tb_arc(2 * l, l - 2 * a).shift(2 * a * a),
        KernelKind::O => binom_tb_arc(2 * l, l - 2 * a - 1).shift(4 * triangular(a)),
    };
    vec![("lhs", lhs), ("rhs", rhs)]
}

fn trinomial_sides(l: i64, a: i64) -> Vec<(&'static str, IntLaurentPoly)> {
    let mut lhs = IntLaurentPoly::zero();
    for k in 0..=l {
        let tri = crate::qcomb::trinomial_tm1(k, a).add(&crate::qcomb::trinomial_tm1(k, a + 1));
        if !tri.is_zero() {
            lhs = lhs.add(&binom_tb_arc(l, k).mul(&tri).shift(triangular(k)));
        }
    }
    let rhs = binom_tb_arc(2 * l + 1, l - a).shift(triangular(a));
    vec![("lhs", lhs), ("rhs", rhs)]
}

fn s_lt_nu(map: &BTreeMap<String, i64>) -> bool {
    match (map.get("s"), map.get("nu")) {
        (Some(s), Some(nu)) => (0..*nu).contains(s),
        _ => false,
    }
}

static REGISTRY: &[FiniteIdentity] = &[
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq1.6",
            summary: "Borwein polynomial decomposition into the dilated triple A, B, C",
            params: &[param("n", 0, 20)],
            positivity: false,
        },
        constraint: None,
        build: |p| {
            let n = p.get("n")?;
            let mut lhs = IntLaurentPoly::one();
            for k in 1..=n {
                for e in [3 * k - 1, 3 * k - 2] {
                    lhs = lhs.mul(&IntLaurentPoly::one().sub(&IntLaurentPoly::monomial(1, e)));
                }
            }
            let (a, b, c) = crate::bressoud::borwein_abc(n);
            let rhs = a.dilate(3).sub(&b.dilate(3).shift(1)).sub(&c.dilate(3).shift(2));
            Ok(vec![("lhs", lhs), ("rhs", rhs)])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq2.1",
            summary: "floor-binomial summation for the C kernel",
            params: &[param("L", 0, 12), param("a", -6, 6)],
            positivity: false,
        },
        constraint: None,
        build: |p| Ok(kernel_identity_sides(KernelKind::C, p.get("L")?, p.get("a")?)),
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq2.6a",
            summary: "Berkovich-Uncu trinomial summation",
            params: &[param("L", 0, 12), param("a", -6, 6)],
            positivity: false,
        },
        constraint: None,
        build: |p| Ok(trinomial_sides(p.get("L")?, p.get("a")?)),
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq2.6d",
            summary: "Warnaar's summation for the W kernel",
            params: &[param("L", 0, 12), param("a", -6, 6)],
            positivity: false,
        },
        constraint: None,
        build: |p| Ok(kernel_identity_sides(KernelKind::W, p.get("L")?, p.get("a")?)),
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq2.6f",
            summary: "odd companion summation for the O kernel",
            params: &[param("L", 0, 12), param("a", -6, 6)],
            positivity: false,
        },
        constraint: None,
        build: |p| Ok(kernel_identity_sides(KernelKind::O, p.get("L")?, p.get("a")?)),
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq2.13",
            summary: "Schur's bounded version of Euler's pentagonal number theorem",
            params: &[param("L", 0, 40)],
            positivity: false,
        },
        constraint: None,
        build: |p| {
            let l = p.get("L")?;
            let spec = ThetaSumSpec {
                top: aff(1, 0),
                exp: half(3, 1),
                bottom: BottomMode::Floor { step: 3, offset: 0 },
                alternating: true,
            };
            Ok(vec![("lhs", theta_sum(&spec, l)?), ("rhs", IntLaurentPoly::one())])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq2.14",
            summary: "C-kernel row sum as a nonnegative alternating binomial sum",
            params: &[param("L", 0, 20)],
            positivity: true,
        },
        constraint: None,
        build: |p| {
            let l = p.get("L")?;
            let lhs = apply_transform(KernelKind::C, l, |_| IntLaurentPoly::one());
            let spec = ThetaSumSpec {
                top: aff(2, 1),
                exp: whole(6, 2),
                bottom: BottomMode::Linear { center: aff(1, 0), step: 3 },
                alternating: true,
            };
            Ok(vec![("lhs", lhs), ("rhs", theta_sum(&spec, l)?)])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq2.15",
            summary: "C-kernel row sum rewritten through Pochhammer terms",
            params: &[param("L", 0, 20)],
            positivity: false,
        },
        constraint: None,
        build: |p| {
            let (direct, poch_form) = kernel_sum_pair(p.get("L")?);
            Ok(vec![("lhs", direct), ("rhs", poch_form)])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq2.16",
            summary: "bounded Lebesgue identity",
            params: &[param("L", 0, 30)],
            positivity: false,
        },
        constraint: None,
        build: |p| {
            let l = p.get("L")?;
            let spec = ThetaSumSpec {
                top: aff(2, 1),
                exp: whole(6, 2),
                bottom: BottomMode::Linear { center: aff(1, 0), step: 3 },
                alternating: true,
            };
            Ok(vec![("lhs", lebesgue_lhs(l)), ("rhs", theta_sum(&spec, l)?)])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq2.19",
            summary: "bounded Euler pentagonal number theorem",
            params: &[param("L", 0, 30)],
            positivity: false,
        },
        constraint: None,
        build: |p| {
            let l = p.get("L")?;
            let spec = ThetaSumSpec {
                top: aff(2, 1),
                exp: whole(3, 1),
                bottom: BottomMode::Linear { center: aff(1, 0), step: 3 },
                alternating: true,
            };
            Ok(vec![("lhs", pnt_lhs(l)), ("rhs", theta_sum(&spec, l)?)])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq2.21",
            summary: "Foda-Quano finite form of the Andrews-Gordon identity",
            params: &[param("nu", 1, 4), param("s", 0, 3), param("L", 0, 20)],
            positivity: false,
        },
        constraint: Some(s_lt_nu),
        build: |p| {
            let fq = FodaQuanoParams::new(p.get("nu")?, p.get("s")?, p.get("L")?)?;
            let spec = ThetaSumSpec {
                top: aff(1, 0),
                exp: half(2 * fq.nu + 1, 1 + 2 * fq.s),
                bottom: BottomMode::Floor { step: 2 * fq.nu + 1, offset: fq.s },
                alternating: true,
            };
            Ok(vec![("lhs", foda_quano_lhs(&fq)), ("rhs", theta_sum(&spec, fq.l)?)])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq2.22",
            summary: "C-kernel transform of the Foda-Quano sum; odd-modulus G instances",
            params: &[param("nu", 1, 3), param("s", 0, 2), param("L", 0, 12)],
            positivity: true,
        },
        constraint: Some(s_lt_nu),
        build: |p| {
            let fq = FodaQuanoParams::new(p.get("nu")?, p.get("s")?, p.get("L")?)?;
            Ok(vec![
                ("lhs", theorem1_lhs(&fq)),
                ("rhs", theorem1_rhs(&fq)?),
                ("gpoly", theorem1_g_side(&fq)?),
            ])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq3.1",
            summary: "vanishing alternating triangular-exponent sum, even top",
            params: &[param("L", 0, 40)],
            positivity: false,
        },
        constraint: None,
        build: |p| {
            let l = p.get("L")?;
            let spec = ThetaSumSpec {
                top: aff(2, 0),
                exp: half(1, 1),
                bottom: BottomMode::Linear { center: aff(1, 0), step: 1 },
                alternating: true,
            };
            Ok(vec![("lhs", theta_sum(&spec, l)?), ("rhs", delta(l))])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq3.2",
            summary: "vanishing alternating triangular-exponent sum, odd top",
            params: &[param("L", 0, 30)],
            positivity: false,
        },
        constraint: None,
        build: |p| {
            let l = p.get("L")?;
            let spec = ThetaSumSpec {
                top: aff(2, 1),
                exp: half(1, 1),
                bottom: BottomMode::Linear { center: aff(1, 0), step: 1 },
                alternating: true,
            };
            Ok(vec![("lhs", theta_sum(&spec, l)?), ("rhs", IntLaurentPoly::zero())])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq3.3",
            summary: "combined floor form of the vanishing triangular sums",
            params: &[param("L", 0, 40)],
            positivity: false,
        },
        constraint: None,
        build: |p| {
            let l = p.get("L")?;
            let spec = ThetaSumSpec {
                top: aff(1, 0),
                exp: half(1, 1),
                bottom: BottomMode::Floor { step: 2, offset: 0 },
                alternating: true,
            };
            Ok(vec![("lhs", theta_sum(&spec, l)?), ("rhs", delta(l))])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq3.4",
            summary: "Bressoud's bounded version of the first Rogers-Ramanujan identity",
            params: &[param("L", 0, 30)],
            positivity: false,
        },
        constraint: None,
        build: |p| {
            let l = p.get("L")?;
            let spec = ThetaSumSpec {
                top: aff(2, 0),
                exp: half(5, 1),
                bottom: BottomMode::Linear { center: aff(1, 0), step: 2 },
                alternating: true,
            };
            Ok(vec![("lhs", rr_sum(l, 0)), ("rhs", theta_sum(&spec, l)?)])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq3.5",
            summary: "Warnaar's bounded version of the second Rogers-Ramanujan identity",
            params: &[param("L", 0, 30)],
            positivity: false,
        },
        constraint: None,
        build: |p| {
            let l = p.get("L")?;
            let spec = ThetaSumSpec {
                top: aff(2, 1),
                exp: half(5, 3),
                bottom: BottomMode::Linear { center: aff(1, 0), step: 2 },
                alternating: true,
            };
            Ok(vec![("lhs", rr_sum(l, 1)), ("rhs", theta_sum(&spec, l)?)])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq3.7",
            summary: "vanishing alternating sum with 5T(j) exponents",
            params: &[param("L", 0, 30)],
            positivity: false,
        },
        constraint: None,
        build: |p| {
            let l = p.get("L")?;
            let spec = ThetaSumSpec {
                top: aff(2, 0),
                exp: half(5, 5),
                bottom: BottomMode::Linear { center: aff(1, -1), step: 2 },
                alternating: true,
            };
            let lhs = theta_sum(&spec, l)?.shift(l + 1);
            Ok(vec![("lhs", lhs), ("rhs", IntLaurentPoly::zero())])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq3.8",
            summary: "odd-top form of the bounded first Rogers-Ramanujan identity",
            params: &[param("L", 0, 30)],
            positivity: false,
        },
        constraint: None,
        build: |p| {
            let l = p.get("L")?;
            let spec = ThetaSumSpec {
                top: aff(2, 1),
                exp: half(5, 1),
                bottom: BottomMode::Linear { center: aff(1, 0), step: 2 },
                alternating: true,
            };
            Ok(vec![("lhs", rr_sum(l, 0)), ("rhs", theta_sum(&spec, l)?)])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq3.9",
            summary: "combined floor form of the bounded Rogers-Ramanujan pair",
            params: &[param("k", 0, 40)],
            positivity: false,
        },
        constraint: None,
        build: |p| {
            let k = p.get("k")?;
            let spec = ThetaSumSpec {
                top: aff(1, 0),
                exp: half(5, 1),
                bottom: BottomMode::Floor { step: 4, offset: 0 },
                alternating: true,
            };
            Ok(vec![("lhs", rr_sum(floor_div(k, 2), 0)), ("rhs", theta_sum(&spec, k)?)])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq3.10",
            summary: "C-kernel transform of the floor-form Rogers-Ramanujan identity",
            params: &[param("L", 0, 12)],
            positivity: true,
        },
        constraint: None,
        build: |p| {
            let l = p.get("L")?;
            let lhs = apply_transform(KernelKind::C, l, |k| rr_sum(floor_div(k, 2), 0));
            let spec = ThetaSumSpec {
                top: aff(2, 1),
                exp: half(21, 5),
                bottom: BottomMode::Linear { center: aff(1, 0), step: 4 },
                alternating: true,
            };
            Ok(vec![("lhs", lhs), ("rhs", theta_sum(&spec, l)?)])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq3.16x",
            summary: "bounded identity with odd-square product side, even top",
            params: &[param("L", 0, 30)],
            positivity: false,
        },
        constraint: None,
        build: |p| {
            let l = p.get("L")?;
            let spec = ThetaSumSpec {
                top: aff(2, 0),
                exp: whole(2, 0),
                bottom: BottomMode::Linear { center: aff(1, 0), step: 2 },
                alternating: true,
            };
            Ok(vec![("lhs", theta_sum(&spec, l)?), ("rhs", pochhammer(Sign::Minus, 1, 2, l))])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq3.17y",
            summary: "vanishing companion of the even-top odd-square identity",
            params: &[param("L", 0, 30)],
            positivity: false,
        },
        constraint: None,
        build: |p| {
            let l = p.get("L")?;
            let spec = ThetaSumSpec {
                top: aff(2, 0),
                exp: whole(2, 2),
                bottom: BottomMode::Linear { center: aff(1, -1), step: 2 },
                alternating: true,
            };
            let lhs = theta_sum(&spec, l)?.shift(l + 1);
            Ok(vec![("lhs", lhs), ("rhs", IntLaurentPoly::zero())])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq3.18z",
            summary: "bounded identity with odd-square product side, odd top",
            params: &[param("L", 0, 30)],
            positivity: false,
        },
        constraint: None,
        build: |p| {
            let l = p.get("L")?;
            let spec = ThetaSumSpec {
                top: aff(2, 1),
                exp: whole(2, 0),
                bottom: BottomMode::Linear { center: aff(1, 0), step: 2 },
                alternating: true,
            };
            Ok(vec![("lhs", theta_sum(&spec, l)?), ("rhs", pochhammer(Sign::Minus, 1, 2, l))])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq3.19w",
            summary: "combined floor form of the odd-square pair",
            params: &[param("k", 0, 40)],
            positivity: false,
        },
        constraint: None,
        build: |p| {
            let k = p.get("k")?;
            let spec = ThetaSumSpec {
                top: aff(1, 0),
                exp: whole(2, 0),
                bottom: BottomMode::Floor { step: 4, offset: 0 },
                alternating: true,
            };
            Ok(vec![
                ("lhs", theta_sum(&spec, k)?),
                ("rhs", pochhammer(Sign::Minus, 1, 2, floor_div(k, 2))),
            ])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq3.24",
            summary: "Dyson's identity with the cube-ratio product side",
            params: &[param("L", 0, 30)],
            positivity: false,
        },
        constraint: None,
        build: |p| {
            let l = p.get("L")?;
            let spec = ThetaSumSpec {
                top: aff(2, 1),
                exp: half(9, 3),
                bottom: BottomMode::Linear { center: aff(1, 0), step: 3 },
                alternating: true,
            };
            Ok(vec![("lhs", theta_sum(&spec, l)?), ("rhs", cube_ratio(l))])
        },
    },
    FiniteIdentity {
        desc: IdentityDescriptor {
            id: "eq3.25",
            summary: "O-kernel transform of Dyson's identity",
            params: &[param("L", 0, 12)],
            positivity: true,
        },
        constraint: None,
        build: |p| {
            let l = p.get("L")?;
            let spec = ThetaSumSpec {
                top: aff(2, 0),
                exp: half(45, 15),
                bottom: BottomMode::Linear { center: aff(1, -1), step: 6 },
                alternating: true,
            };
            let rhs = apply_transform(KernelKind::O, l, cube_ratio);
            Ok(vec![("lhs", theta_sum(&spec, l)?), ("rhs", rhs)])
        },
    },
];

fn find(id: &str) -> Result<&'static FiniteIdentity> {
    REGISTRY
        .iter()
        .find(|entry| entry.desc.id == id)
        .ok_or_else(|| Error::UnknownIdentity { id: id.to_string() })
}

/// All registered finite identities, in registry order.
pub fn registry_list() -> Vec<IdentityDescriptor> {
    REGISTRY.iter().map(|e| e.desc).collect()
}

/// Descriptor lookup by id.
pub fn descriptor(id: &str) -> Result<IdentityDescriptor> {
    find(id).map(|e| e.desc)
}

/// True when the parameter combination satisfies the identity's constraints
/// (e.g. s < nu); used by grid sweeps to skip invalid cells.
pub fn params_admissible(id: &str, params: &BTreeMap<String, i64>) -> Result<bool> {
    let entry = find(id)?;
    Ok(entry.constraint.is_none_or(|c| c(params)))
}

fn render_capped(p: &IntLaurentPoly) -> Option<String> {
    (p.len() <= RENDER_TERM_LIMIT).then(|| p.render())
}

/// Build both sides of an identity instance, compare them exactly, run the
/// positivity scan where the identity claims it, and produce a report with
/// witnesses on failure.
pub fn verify(id: &str, params: &BTreeMap<String, i64>) -> Result<IdentityReport> {
    let entry = find(id)?;
    let started = Instant::now();
    let view = ParamView { id, map: params };
    let sides = (entry.build)(&view)?;
    let mut report = IdentityReport::new(id, params.clone());

    let (_, reference) = &sides[0];
    let mut equal = true;
    for (label, side) in &sides[1..] {
        if let Some(exp) = reference.first_mismatch(side) {
            equal = false;
            if report.first_mismatch_exp.is_none() {
                report.first_mismatch_exp = Some(exp);
                if sides.len() > 2 {
                    report.notes = Some(format!("mismatch against side `{label}`"));
                }
            }
        }
    }
    if entry.desc.positivity {
        report.negative_witness = reference.first_negative();
    }
    report.passed = equal && report.negative_witness.is_none();
    report.lhs = render_capped(reference);
    report.rhs = render_capped(&sides[1].1);
    report.elapsed_millis = started.elapsed().as_millis() as u64;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(name: &str, value: i64) -> BTreeMap<String, i64> {
        let mut m = BTreeMap::new();
        m.insert(name.to_string(), value);
        m
    }

    fn p(text: &str) -> IntLaurentPoly {
        IntLaurentPoly::parse(text).unwrap()
    }

    #[test]
    fn schur_sum_is_constant_one() {
        for l in 0..=40 {
            let r = verify("eq2.13", &single("L", l)).unwrap();
            assert!(r.passed, "L={l}");
        }
    }

    #[test]
    fn vanishing_sum_small_case_by_hand() {
        // even-top triangular sum at L = 1: [2;1] - q [2;0] - [2;2] = 0
        let spec = ThetaSumSpec {
            top: aff(2, 0),
            exp: half(1, 1),
            bottom: BottomMode::Linear { center: aff(1, 0), step: 1 },
            alternating: true,
        };
        assert!(theta_sum(&spec, 1).unwrap().is_zero());
        assert!(verify("eq3.1", &single("L", 1)).unwrap().passed);
        assert!(verify("eq3.1", &single("L", 0)).unwrap().passed);
    }

    #[test]
    fn bounded_lebesgue_small_value() {
        assert_eq!(lebesgue_lhs(1), p("1 + q + q^2"));
        assert!(verify("eq2.16", &single("L", 1)).unwrap().passed);
    }

    #[test]
    fn bounded_pnt_small_value() {
        assert_eq!(pnt_lhs(1), p("1 + q + q^2"));
        assert!(verify("eq2.19", &single("L", 1)).unwrap().passed);
    }

    #[test]
    fn foda_quano_base_cases() {
        for l in [0, 3, 17] {
            let fq = FodaQuanoParams::new(1, 0, l).unwrap();
            assert_eq!(foda_quano_lhs(&fq), IntLaurentPoly::one());
        }
        let fq = FodaQuanoParams::new(2, 0, 0).unwrap();
        assert_eq!(foda_quano_lhs(&fq), IntLaurentPoly::one());
        // nu = 2, L = 2: terms N_2 = 0 and N_2 = 1 give 1 + q
        let fq = FodaQuanoParams::new(2, 0, 2).unwrap();
        assert_eq!(foda_quano_lhs(&fq), p("1 + q"));
    }

    #[test]
    fn foda_quano_params_validation() {
        assert!(FodaQuanoParams::new(0, 0, 1).is_err());
        assert!(FodaQuanoParams::new(2, 2, 1).is_err());
        assert!(FodaQuanoParams::new(2, 1, -1).is_err());
    }

    #[test]
    fn theorem1_small_cases() {
        // nu = 1, s = 0 reduces to the plain kernel row sum
        for l in 0..=6 {
            let fq = FodaQuanoParams::new(1, 0, l).unwrap();
            let lhs = theorem1_lhs(&fq);
            let direct = apply_transform(KernelKind::C, l, |_| IntLaurentPoly::one());
            assert_eq!(lhs, direct);
            assert_eq!(lhs, theorem1_rhs(&fq).unwrap());
            assert_eq!(lhs, theorem1_g_side(&fq).unwrap());
        }
        let fq = FodaQuanoParams::new(2, 0, 0).unwrap();
        assert_eq!(theorem1_lhs(&fq), IntLaurentPoly::one());
    }

    #[test]
    fn non_integer_exponent_is_reported() {
        let spec = ThetaSumSpec {
            top: aff(1, 0),
            exp: QuadExp { quad: 1, lin: 0, constant: 0, den: 2 },
            bottom: BottomMode::Linear { center: aff(0, 2), step: 1 },
            alternating: true,
        };
        let err = theta_sum(&spec, 4).unwrap_err();
        assert!(matches!(err, Error::NonIntegerExponent { j: -1 }), "{err:?}");
    }

    #[test]
    fn transform_chain_commutes_on_schur_input() {
        // For an input family given by an alternating floor-form sum,
        // transforming the family termwise equals transforming its closed
        // form: sum_k C_{L,k} F(k) = sum_j alpha(j) q^{T(3j)} [2L+1; L-3j].
        let schur = ThetaSumSpec {
            top: aff(1, 0),
            exp: half(3, 1),
            bottom: BottomMode::Floor { step: 3, offset: 0 },
            alternating: true,
        };
        for l in 0..=12 {
            let transform_then_sum =
                apply_transform(KernelKind::C, l, |k| theta_sum(&schur, k).unwrap());
            let mut sum_then_transform = IntLaurentPoly::zero();
            for j in -l..=l {
                let binom = binom_tb_arc(2 * l + 1, l - 3 * j);
                if binom.is_zero() {
                    continue;
                }
                let term = binom.shift(schur.exp.eval(j).unwrap() + triangular(3 * j));
                sum_then_transform = if j.rem_euclid(2) == 0 {
                    sum_then_transform.add(&term)
                } else {
                    sum_then_transform.sub(&term)
                };
            }
            assert_eq!(transform_then_sum, sum_then_transform, "L={l}");
        }
    }

    #[test]
    fn registry_covers_required_ids() {
        let required = [
            "eq1.6", "eq2.1", "eq2.6a", "eq2.6d", "eq2.6f", "eq2.13", "eq2.14", "eq2.15",
            "eq2.16", "eq2.19", "eq2.21", "eq2.22", "eq3.1", "eq3.2", "eq3.3", "eq3.4",
            "eq3.5", "eq3.7", "eq3.8", "eq3.9", "eq3.10", "eq3.16x", "eq3.17y", "eq3.18z",
            "eq3.19w", "eq3.24", "eq3.25",
        ];
        let listed = registry_list();
        for id in required {
            assert!(listed.iter().any(|d| d.id == id), "missing {id}");
        }
    }

    #[test]
    fn registry_lookup_examples() {
        assert!(descriptor("eq3.4").unwrap().summary.contains("Bressoud's bounded"));
        assert!(descriptor("eq3.5").unwrap().summary.contains("Warnaar's bounded"));
        assert!(matches!(descriptor("bogus"), Err(Error::UnknownIdentity { .. })));
    }

    #[test]
    fn missing_param_is_reported() {
        let err = verify("eq2.13", &BTreeMap::new()).unwrap_err();
        assert!(matches!(err, Error::MissingParam { .. }));
    }

    #[test]
    fn mismatch_witness_is_self_consistent() {
        // compare two polynomials that differ first at q^2
        let a = p("1 + q + 2*q^2");
        let b = p("1 + q + 3*q^2 + q^5");
        let exp = a.first_mismatch(&b).unwrap();
        assert_eq!(exp, 2);
        assert_ne!(a.coeff(exp), b.coeff(exp));
        assert_eq!(a.first_mismatch(&a), None);
    }

    #[test]
    fn reports_carry_rendered_sides_when_small() {
        let r = verify("eq2.16", &single("L", 1)).unwrap();
        assert_eq!(r.lhs.as_deref(), Some("1 + q + q^2"));
        assert_eq!(r.rhs.as_deref(), Some("1 + q + q^2"));
    }
}
