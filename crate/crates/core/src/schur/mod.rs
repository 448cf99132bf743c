//! Schur elements of Ariki–Koike algebras and their specialisations.
//!
//! The primary object is `s̃_λ = (q-1)^n s_λ`, a signed monomial times a
//! product of binomials `q^{a-b} Q_i Q_j^{-1} - 1` over the CJ-hooks of the
//! equal-charge symbol of `λ`. Polynomials in `l+1` variables use the order
//! `q, Q_1, ..., Q_l`.

mod poly;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

pub use poly::{var_names, Exponent, LaurentPoly};

use crate::combinatorics::{equal_charge_symbol, multipartitions, Multipartition, Partition};
use crate::cores::{es_core, quotient_data};
use crate::error::{check_len, check_positive, Error, Result};
use crate::hooks::{enumerate_hooks, Hook, HookKind, IntMultiset};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurDatum {
    pub lambda: Multipartition,
    pub schur: LaurentPoly,
    pub schur_tilde: LaurentPoly,
    pub n: usize,
    pub n_bar: usize,
}

fn sign_exponent(lambda: &Multipartition) -> usize {
    lambda.rank() * (lambda.l() - 1)
}

fn sign_of(parity: usize) -> i64 {
    if parity.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `N(λ̄)`: the weighted sum of all parts of `λ`, reordered decreasingly.
pub fn n_bar(lambda: &Multipartition) -> usize {
    lambda.merged_parts().weighted_sum()
}

fn cj_hooks(lambda: &Multipartition) -> Result<Vec<Hook>> {
    let x = equal_charge_symbol(lambda, None)?;
    Ok(enumerate_hooks(&x, HookKind::Cj))
}

/// Exponent vector of `q^{a-b} Q_i Q_j^{-1}`.
fn hook_exponent(h: &Hook, l: usize) -> Vec<i32> {
    let mut e = vec![0; l + 1];
    e[0] = h.length() as i32;
    e[h.i] += 1;
    e[h.j] -= 1;
    e
}

fn hook_product(prefactor: LaurentPoly, hooks: &[Hook], l: usize) -> Result<LaurentPoly> {
    hooks
        .iter()
        .try_fold(prefactor, |acc, h| acc.mul_binomial(&hook_exponent(h, l)))
}

fn tilde_prefactor(lambda: &Multipartition) -> LaurentPoly {
    let l = lambda.l();
    let mut e = vec![0; l + 1];
    e[0] = -(n_bar(lambda) as i32);
    LaurentPoly::monomial(sign_of(sign_exponent(lambda)), &e)
}

/// `s̃_λ` as a polynomial in `q, Q_1, ..., Q_l`.
pub fn schur_tilde(lambda: &Multipartition) -> Result<LaurentPoly> {
    hook_product(tilde_prefactor(lambda), &cj_hooks(lambda)?, lambda.l())
}

/// `∏ (q^{a-b} Q_i Q_j^{-1} - 1)` over the BGO-hooks of the equal-charge symbol.
pub fn bgo_product(lambda: &Multipartition) -> Result<LaurentPoly> {
    let x = equal_charge_symbol(lambda, None)?;
    let hooks = enumerate_hooks(&x, HookKind::Bgo);
    hook_product(LaurentPoly::one(lambda.l() + 1), &hooks, lambda.l())
}

/// `s̃_λ / ∏_{BGO} (...)`, which must be a signed monomial.
pub fn bgo_unit(lambda: &Multipartition) -> Result<LaurentPoly> {
    let unit = schur_tilde(lambda)?.exact_divide(&bgo_product(lambda)?)?;
    if is_signed_monomial(&unit) {
        Ok(unit)
    } else {
        Err(Error::InternalInvariantViolation(format!(
            "BGO and CJ products of {lambda} differ by {unit}, not a unit"
        )))
    }
}

pub fn schur_element(lambda: &Multipartition) -> Result<SchurDatum> {
    let l = lambda.l();
    let n = lambda.rank();
    let schur_tilde = schur_tilde(lambda)?;
    let mut q_minus_one = vec![0; l + 1];
    q_minus_one[0] = 1;
    let denominator = LaurentPoly::binomial_minus_one(&q_minus_one).pow(n as u32);
    let schur = schur_tilde.exact_divide(&denominator).map_err(|e| {
        Error::InternalInvariantViolation(format!("(q-1)^{n} does not divide s̃ of {lambda}: {e}"))
    })?;
    Ok(SchurDatum {
        lambda: lambda.clone(),
        schur,
        schur_tilde,
        n,
        n_bar: n_bar(lambda),
    })
}

/// `θ_{k,s}`: `q -> q^k`, `Q_i -> q^{s_i}`. Negative `s_i` are allowed.
pub fn specialize(p: &LaurentPoly, k: usize, s: &[i64]) -> Result<LaurentPoly> {
    check_positive(k, "k")?;
    p.specialize(k as i64, s)
}

/// `{k(a-b) + s_i - s_j}` over the CJ-hooks of the equal-charge symbol:
/// the exponents `h` of the factors `q^h - 1` of `θ_{k,s}(s̃_λ)`.
pub fn specialized_lengths(lambda: &Multipartition, k: usize, s: &[i64]) -> Result<IntMultiset> {
    check_len(lambda.l(), s.len())?;
    let hooks = cj_hooks(lambda)?;
    Ok(hooks
        .iter()
        .map(|h| k as i64 * h.length() + s[h.i - 1] - s[h.j - 1])
        .collect())
}

/// `θ_{k,s}(s̃_λ)`, computed factor by factor in one variable without
/// building the multivariate `s̃_λ`.
pub fn specialized_schur_tilde(
    lambda: &Multipartition,
    k: usize,
    s: &[i64],
) -> Result<LaurentPoly> {
    check_positive(k, "k")?;
    let lengths = specialized_lengths(lambda, k, s)?;
    let prefactor = LaurentPoly::monomial(
        sign_of(sign_exponent(lambda)),
        &[-((k * n_bar(lambda)) as i32)],
    );
    let product = lengths
        .iter()
        .try_fold(prefactor, |acc, h| acc.mul_binomial(&[h as i32]))?;
    Ok(product)
}

/// `(-1)^{n(l-1)} q^{-kN(λ̄)} ∏ (q^h - 1)` over the lengths `h` of the charged
/// scaled CJ-hooks of the equal-charge symbol, taken literally. This agrees
/// with [`specialized_schur_tilde`] up to a signed power of `q`.
pub fn charged_scaled_product(
    lambda: &Multipartition,
    k: usize,
    s: &[usize],
) -> Result<LaurentPoly> {
    let hooks = crate::hooks::charged_scaled_hooks(lambda, k, s, HookKind::Cj, None)?;
    let prefactor = LaurentPoly::monomial(
        sign_of(sign_exponent(lambda)),
        &[-((k * n_bar(lambda)) as i32)],
    );
    hooks
        .iter()
        .try_fold(prefactor, |acc, h| acc.mul_binomial(&[h.length() as i32]))
}

/// Lowest exponent of `θ_{k,s}(s̃_λ)` and the sign `ε` in
/// `θ_{k,s}(s̃_λ) = ε q^v ∏ (q^{|h|} - 1)`.
pub fn valuation_and_sign(lambda: &Multipartition, k: usize, s: &[i64]) -> Result<(i64, i64)> {
    let p = specialized_schur_tilde(lambda, k, s)?;
    let (exp, coeff) = p.lowest_term().ok_or(Error::ZeroPolynomial)?;
    let factors = specialized_lengths(lambda, k, s)?.len();
    let sign = if coeff.is_positive() { 1 } else { -1 } * sign_of(factors);
    Ok((exp[0] as i64, sign))
}

/// Ariki's product criterion, evaluated at a primitive e-th root of unity
/// with `u = q^k` and `ξ_i = q^{s_i}`.
pub fn ariki_semisimple_at_root(
    n: usize,
    l: usize,
    e: usize,
    k: usize,
    s: &[usize],
) -> Result<bool> {
    check_positive(e, "e")?;
    check_positive(k, "k")?;
    check_len(l, s.len())?;
    let e = e as i64;
    let k = k as i64;
    for i in 1..=n as i64 {
        // 1 + u + ... + u^{i-1} vanishes iff u ≠ 1 and u^i = 1
        if (k * i) % e == 0 && k % e != 0 {
            return Ok(false);
        }
    }
    let n = n as i64;
    for a in 0..l {
        for b in a + 1..l {
            for h in (1 - n)..n {
                if (h * k + s[a] as i64 - s[b] as i64).rem_euclid(e) == 0 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Whether `θ_{k,s}(s_λ)` vanishes at a primitive e-th root of unity.
///
/// `θ_{k,s}(s_λ) = θ_{k,s}(s̃_λ) / (q^k - 1)^n`; each factor `q^h - 1` with
/// `h ≠ 0` carries the e-th cyclotomic polynomial exactly once when `e | h`.
pub fn vanishes_at_root(lambda: &Multipartition, e: usize, k: usize, s: &[usize]) -> Result<bool> {
    check_positive(e, "e")?;
    let s: Vec<i64> = s.iter().map(|&x| x as i64).collect();
    let lengths = specialized_lengths(lambda, k, &s)?;
    if lengths.contains(0) {
        return Ok(true);
    }
    let e = e as i64;
    let in_numerator = lengths.iter().filter(|h| h % e == 0).count();
    let in_denominator = if k as i64 % e == 0 { lambda.rank() } else { 0 };
    Ok(in_numerator > in_denominator)
}

/// Semisimplicity decided by the non-vanishing of every specialised Schur element.
pub fn semisimplicity_via_schur(
    n: usize,
    l: usize,
    e: usize,
    k: usize,
    s: &[usize],
) -> Result<bool> {
    check_positive(k, "k")?;
    check_len(l, s.len())?;
    for lambda in multipartitions(n, l) {
        if vanishes_at_root(&lambda, e, k, s)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn single(p: &Partition) -> Multipartition {
    Multipartition::single(p.clone())
}

/// The sign `ε` with `s̃_λ = ε · s̃_{λ°} · θ_{e,s̃}(s̃_{quotient})`, all univariate.
pub fn factorization_check(lambda: &Partition, e: usize) -> Result<i64> {
    let qd = quotient_data(lambda, e)?;
    let lhs = specialized_schur_tilde(&single(lambda), 1, &[0])?;
    let core = specialized_schur_tilde(&single(&qd.core), 1, &[0])?;
    let s: Vec<i64> = qd.tilde_s().iter().map(|&x| x as i64).collect();
    let theta = specialized_schur_tilde(&qd.quotient, e, &s)?;
    let rhs = core.mul(&theta)?;
    if lhs == rhs {
        Ok(1)
    } else if lhs == rhs.neg() {
        Ok(-1)
    } else {
        Err(Error::FactorizationFailed(format!(
            "{lambda} at e={e}: s̃ = {lhs}, core · quotient = {rhs}"
        )))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityReport {
    pub lambda: Multipartition,
    pub core: Multipartition,
    pub core_multicharge: Vec<i64>,
    /// `θ_{1,s}(s̃_λ)` vanishes, so divisibility holds for free.
    pub trivial: bool,
    pub dividend: LaurentPoly,
    pub divisor: LaurentPoly,
    pub quotient: LaurentPoly,
}

/// `∏_{i<j} ∏_{h=1}^{|s_i-s_j|-1} (q^h - 1)`.
pub fn charge_correction(s: &[usize]) -> LaurentPoly {
    let mut out = LaurentPoly::one(1);
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            for h in 1..s[i].abs_diff(s[j]) {
                out = out.mul_binomial(&[h as i32]).expect("univariate");
            }
        }
    }
    out
}

/// Checks that `θ_{1,s°}(s̃_{λ°})` divides `θ_{1,s}(s̃_λ)` times the charge
/// correction, where `λ°` is the (e,s)-core with multicharge `s°`.
pub fn divisibility_check(
    lambda: &Multipartition,
    e: usize,
    s: &[usize],
) -> Result<DivisibilityReport> {
    check_len(lambda.l(), s.len())?;
    let (core, core_s) = es_core(lambda, e, s)?;
    let s_signed: Vec<i64> = s.iter().map(|&x| x as i64).collect();
    let theta = specialized_schur_tilde(lambda, 1, &s_signed)?;
    let dividend = theta.mul(&charge_correction(s))?;
    let divisor = specialized_schur_tilde(&core, 1, &core_s)?;
    if divisor.is_zero() {
        return Err(Error::DivisibilityFailed(format!(
            "specialised Schur element of the core {core} vanishes"
        )));
    }
    let quotient = dividend
        .exact_divide(&divisor)
        .map_err(|err| Error::DivisibilityFailed(format!("{lambda} with e={e}, s={s:?}: {err}")))?;
    Ok(DivisibilityReport {
        lambda: lambda.clone(),
        core,
        core_multicharge: core_s,
        trivial: theta.is_zero(),
        dividend,
        divisor,
        quotient,
    })
}

/// The constant `(-1)^{n(l-1)}` in front of every Schur product.
pub fn leading_sign(lambda: &Multipartition) -> BigInt {
    BigInt::from(sign_of(sign_exponent(lambda)))
}

pub(crate) fn is_signed_monomial(p: &LaurentPoly) -> bool {
    matches!(p.as_monomial(), Some((c, _)) if c.abs().is_one())
}
