//! Abacus cores and quotients, [d,t]-cores and (e,s)-cores of symbols, and
//! the a-function.

use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    partition_of_beta_set, symbol_of_multipartition, BetaSet, Multipartition, Partition, Symbol,
};
use crate::error::{check_len, check_positive, Error, Result};
use crate::hooks::Hook;

/// The e-quotient of a partition together with its e-core and the
/// multicharge of its e-abacus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientData {
    pub core: Partition,
    pub quotient: Multipartition,
    pub multicharge: Vec<usize>,
}

impl QuotientData {
    pub fn e(&self) -> usize {
        self.multicharge.len()
    }

    /// `(e s_1, e s_2 + 1, ..., e s_e + (e-1))`.
    pub fn tilde_s(&self) -> Vec<usize> {
        let e = self.e();
        self.multicharge
            .iter()
            .enumerate()
            .map(|(j, &s)| e * s + j)
            .collect()
    }

    /// Common charge of the quotient symbol read off the abacus: every runner
    /// of the e-abacus fits at this charge.
    pub fn common_charge(&self) -> usize {
        self.multicharge.iter().copied().max().unwrap_or(0)
    }

    /// The equal-charge symbol of the quotient at [`Self::common_charge`].
    pub fn quotient_symbol(&self) -> Symbol {
        crate::combinatorics::equal_charge_symbol(&self.quotient, Some(self.common_charge()))
            .expect("abacus charge holds every runner")
    }
}

/// Result of a core reduction on a symbol.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreResult {
    #[serde(with = "components")]
    pub core: Symbol,
    pub multicharge: Vec<usize>,
    pub trace: Vec<Hook>,
}

mod components {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::combinatorics::{BetaSet, Symbol};

    pub fn serialize<S: Serializer>(x: &Symbol, s: S) -> Result<S::Ok, S::Error> {
        x.components().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Symbol, D::Error> {
        let c = Vec::<BetaSet>::deserialize(d)?;
        Symbol::new(c).map_err(serde::de::Error::custom)
    }
}

/// The e-symbol `Y(λ)`: runner `j` holds `{k : j-1+ke ∈ X(λ)}`.
pub fn e_abacus(lambda: &Partition, e: usize) -> Result<Symbol> {
    check_positive(e, "e")?;
    let x = lambda.beta_set();
    let mut runners = vec![Vec::new(); e];
    for &a in x.entries() {
        runners[a % e].push(a / e);
    }
    Symbol::from_entries(runners)
}

pub fn e_quotient(lambda: &Partition, e: usize) -> Result<Multipartition> {
    Ok(e_abacus(lambda, e)?.multipartition())
}

pub fn e_core(lambda: &Partition, e: usize) -> Result<Partition> {
    let y = e_abacus(lambda, e)?;
    Ok(core_of_abacus(&y.multicharge(), e))
}

fn core_of_abacus(multicharge: &[usize], e: usize) -> Partition {
    let mut beads: Vec<usize> = multicharge
        .iter()
        .enumerate()
        .flat_map(|(j, &m)| (0..m).map(move |k| j + k * e))
        .collect();
    beads.sort_unstable();
    partition_of_beta_set(&BetaSet::new(beads).expect("distinct positions"))
}

pub fn quotient_data(lambda: &Partition, e: usize) -> Result<QuotientData> {
    let y = e_abacus(lambda, e)?;
    let multicharge = y.multicharge();
    Ok(QuotientData {
        core: core_of_abacus(&multicharge, e),
        quotient: y.multipartition(),
        multicharge,
    })
}

fn iteration_cap(x: &Symbol) -> usize {
    let base = x.entry_sum() + x.l() * x.max_entry().unwrap_or(0) + 1;
    base.saturating_mul(base)
}

fn apply_move(x: &mut Symbol, h: &Hook) {
    let comps = x.components_mut();
    comps[h.i - 1].remove(h.a);
    comps[h.j - 1].insert(h.b);
}

/// Removable hooks `(a, a-t, i, j)` with `i - j ≡ d (mod l)`, ordered by `(i, a)`.
fn dt_hooks(x: &Symbol, d: usize, t: usize) -> Vec<Hook> {
    let l = x.l();
    let mut out = Vec::new();
    for i in 1..=l {
        let j = (i - 1 + l - d) % l + 1;
        let xj = &x.components()[j - 1];
        for &a in x.components()[i - 1].entries() {
            if a >= t && !xj.contains(a - t) {
                out.push(Hook::new(a, a - t, i, j));
            }
        }
    }
    out
}

/// The [d,t]-core, always removing the smallest eligible hook first.
pub fn dt_core(x: &Symbol, d: usize, t: usize) -> Result<CoreResult> {
    dt_core_by(x, d, t, |_| 0)
}

/// The [d,t]-core, with `choose` picking which eligible hook to remove next
/// (an index into the current list, ordered by `(i, a)`).
pub fn dt_core_by(
    x: &Symbol,
    d: usize,
    t: usize,
    mut choose: impl FnMut(&[Hook]) -> usize,
) -> Result<CoreResult> {
    check_positive(t, "t")?;
    if d >= x.l() {
        return Err(Error::ResidueOutOfRange { d, l: x.l() });
    }
    let cap = iteration_cap(x);
    let mut cur = x.clone();
    let mut trace = Vec::new();
    loop {
        let eligible = dt_hooks(&cur, d, t);
        if eligible.is_empty() {
            break;
        }
        if trace.len() >= cap {
            return Err(Error::InternalInvariantViolation(format!(
                "[{d},{t}]-core of {x} did not terminate"
            )));
        }
        let h = eligible[choose(&eligible).min(eligible.len() - 1)];
        apply_move(&mut cur, &h);
        trace.push(h);
    }
    Ok(CoreResult {
        multicharge: cur.multicharge(),
        core: cur,
        trace,
    })
}

/// First step-(1) move: the smallest `(i, a, j)` with `i < j`, `a ∈ X_i`, `a ∉ X_j`.
fn first_equal_position_move(x: &Symbol) -> Option<Hook> {
    let l = x.l();
    for i in 1..=l {
        for &a in x.components()[i - 1].entries() {
            for j in i + 1..=l {
                if !x.components()[j - 1].contains(a) {
                    return Some(Hook::new(a, a, i, j));
                }
            }
        }
    }
    None
}

/// First step-(2) move: the smallest hook `(a, a-e, l, 1)`.
fn first_wrap_move(x: &Symbol, e: usize) -> Option<Hook> {
    let l = x.l();
    let bottom = &x.components()[0];
    x.components()[l - 1]
        .entries()
        .iter()
        .find(|&&a| a >= e && !bottom.contains(a - e))
        .map(|&a| Hook::new(a, a - e, l, 1))
}

/// The (e,s)-core `X°` of a symbol: moves of step (1) are exhausted before
/// each move of step (2).
pub fn es_core_symbol(x: &Symbol, e: usize) -> Result<CoreResult> {
    check_positive(e, "e")?;
    let cap = iteration_cap(x);
    let mut cur = x.clone();
    let mut trace = Vec::new();
    loop {
        let next = first_equal_position_move(&cur).or_else(|| first_wrap_move(&cur, e));
        let Some(h) = next else { break };
        if trace.len() >= cap {
            return Err(Error::InternalInvariantViolation(format!(
                "({e},s)-core of {x} did not terminate"
            )));
        }
        apply_move(&mut cur, &h);
        trace.push(h);
    }
    Ok(CoreResult {
        multicharge: cur.multicharge(),
        core: cur,
        trace,
    })
}

/// The (e,s)-core of a multipartition, read from `X^{1,s}(λ)` at its
/// default common charge `m`. The returned multicharge is that of `X°`
/// minus `m`, so an (e,s)-core comes back with its own `s`.
pub fn es_core(
    lambda: &Multipartition,
    e: usize,
    s: &[usize],
) -> Result<(Multipartition, Vec<i64>)> {
    es_core_with_charge(lambda, e, s, None)
}

pub fn es_core_with_charge(
    lambda: &Multipartition,
    e: usize,
    s: &[usize],
    common_charge: Option<usize>,
) -> Result<(Multipartition, Vec<i64>)> {
    check_len(lambda.l(), s.len())?;
    let m = common_charge.unwrap_or_else(|| lambda.default_common_charge());
    let x = symbol_of_multipartition(lambda, 1, s, Some(m))?;
    let res = es_core_symbol(&x, e)?;
    let shifted = res
        .multicharge
        .iter()
        .map(|&c| c as i64 - m as i64)
        .collect();
    Ok((res.core.multipartition(), shifted))
}

/// `𝔞(X) = Σ (i-1) κ_i` over all entries `κ_1 ≥ κ_2 ≥ ...` of all components.
pub fn a_of_symbol(x: &Symbol) -> u64 {
    let mut all: Vec<usize> = x
        .components()
        .iter()
        .flat_map(|c| c.entries().iter().copied())
        .collect();
    all.sort_unstable_by(|a, b| b.cmp(a));
    all.iter().enumerate().map(|(i, &k)| (i * k) as u64).sum()
}

/// Smallest common charge from which `a_{s,k}(λ)` no longer changes when
/// the charge grows: the default charge plus `⌈(max s - min s) / k⌉`.
pub fn stable_common_charge(lambda: &Multipartition, s: &[usize], k: usize) -> Result<usize> {
    check_positive(k, "k")?;
    let spread = s.iter().max().unwrap_or(&0) - s.iter().min().unwrap_or(&0);
    Ok(lambda.default_common_charge() + spread.div_ceil(k))
}

/// `a_{s,k}(λ)` at [`stable_common_charge`].
pub fn a_value(lambda: &Multipartition, s: &[usize], k: usize) -> Result<i64> {
    a_value_with_charge(lambda, s, k, None)
}

/// `a_{s,k}(λ) = 𝔞(X^{k,s}(λ)) - 𝔞(X^{k,s}(∅))`, both at common charge `m`
/// (default [`stable_common_charge`]).
pub fn a_value_with_charge(
    lambda: &Multipartition,
    s: &[usize],
    k: usize,
    common_charge: Option<usize>,
) -> Result<i64> {
    check_len(lambda.l(), s.len())?;
    let m = match common_charge {
        Some(m) => m,
        None => stable_common_charge(lambda, s, k)?,
    };
    let x = symbol_of_multipartition(lambda, k, s, Some(m))?;
    let empty = Multipartition::empty(lambda.l())?;
    let x0 = symbol_of_multipartition(&empty, k, s, Some(m))?;
    Ok(a_of_symbol(&x) as i64 - a_of_symbol(&x0) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hooks::{hook_lengths, HookKind};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sym(c: &[&[usize]]) -> Symbol {
        Symbol::from_entries(c.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    fn mp(c: &[&[usize]]) -> Multipartition {
        Multipartition::from_parts(c.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    #[test]
    fn abacus_of_worked_partition() {
        let y = e_abacus(&p(&[3, 2, 1, 1, 1]), 3).unwrap();
        assert_eq!(y, sym(&[&[0, 1, 2], &[1], &[0, 2]]));
        assert_eq!(y.multicharge(), vec![3, 1, 2]);

        let y = e_abacus(&Partition::empty(), 2).unwrap();
        assert_eq!(y, sym(&[&[0], &[]]));
        assert_eq!(y.multicharge(), vec![1, 0]);

        let lam = p(&[4, 1]);
        assert_eq!(
            e_abacus(&lam, 1).unwrap(),
            Symbol::new(vec![lam.beta_set()]).unwrap()
        );
    }

    #[test]
    fn quotients_and_cores() {
        let q = quotient_data(&p(&[3, 2, 1, 1, 1]), 3).unwrap();
        assert_eq!(q.quotient, mp(&[&[], &[1], &[1]]));
        assert_eq!(q.core, p(&[1, 1]));
        assert_eq!(q.tilde_s(), vec![9, 4, 8]);
        assert_eq!(q.common_charge(), 3);
        assert_eq!(
            q.quotient_symbol(),
            sym(&[&[0, 1, 2], &[0, 1, 3], &[0, 1, 3]])
        );

        assert_eq!(
            e_quotient(&p(&[4, 3, 2, 2]), 2).unwrap(),
            mp(&[&[1, 1, 1], &[1]])
        );
        assert_eq!(e_core(&p(&[4, 3, 2, 2]), 2).unwrap(), p(&[2, 1]));
        assert_eq!(e_core(&p(&[1, 1]), 3).unwrap(), p(&[1, 1]));
        assert!(e_quotient(&p(&[1, 1]), 3).unwrap().is_empty());
        assert_eq!(e_abacus(&p(&[1]), 0), Err(Error::NonPositive { name: "e" }));
    }

    #[test]
    fn dt_core_examples() {
        let x = sym(&[&[0, 2, 4, 7], &[0, 2, 3, 4, 6, 8]]);
        let r = dt_core(&x, 0, 3).unwrap();
        assert_eq!(r.core, sym(&[&[0, 1, 2, 4], &[0, 1, 2, 3, 5, 6]]));
        let r = dt_core(&x, 1, 3).unwrap();
        assert_eq!(r.core, sym(&[&[0, 1, 2, 3, 5], &[0, 1, 2, 3, 4]]));
        assert_eq!(r.multicharge, vec![5, 5]);

        let reduced = sym(&[&[0, 1, 2, 4], &[0, 1, 2, 3, 5, 6]]);
        let r = dt_core(&reduced, 0, 3).unwrap();
        assert_eq!(r.core, reduced);
        assert!(r.trace.is_empty());
        assert_eq!(
            dt_core(&x, 2, 3),
            Err(Error::ResidueOutOfRange { d: 2, l: 2 })
        );
    }

    #[test]
    fn es_core_examples() {
        let packed = Symbol::packed(&[2, 2]).unwrap();
        let r = es_core_symbol(&packed, 2).unwrap();
        assert_eq!(r.core, packed);
        assert!(r.trace.is_empty());

        let x = sym(&[&[0, 1, 2, 5], &[0, 3, 4]]);
        let r = es_core_symbol(&x, 2).unwrap();
        assert!(!hook_lengths(&r.core, HookKind::Cj).contains(0));
        assert!(first_wrap_move(&r.core, 2).is_none());
        assert_eq!(r.core, sym(&[&[0, 1, 2], &[0, 1, 2, 3]]));
        assert_eq!(r.multicharge, vec![3, 4]);

        let lam = p(&[3, 2, 1, 1, 1]);
        let r = es_core_symbol(&Symbol::new(vec![lam.beta_set()]).unwrap(), 3).unwrap();
        assert_eq!(r.core.multipartition().components()[0], p(&[1, 1]));
    }

    #[test]
    fn es_core_of_multipartitions() {
        let lam = mp(&[&[1], &[1]]);
        let (core, s) = es_core(&lam, 1_000, &[0, 0]).unwrap();
        assert_eq!(core, lam);
        assert_eq!(s, vec![0, 0]);
        assert_eq!(
            es_core(&lam, 2, &[0]),
            Err(Error::LengthMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn a_function_values() {
        assert_eq!(a_of_symbol(&sym(&[&[0, 2, 3, 4, 6, 8]])), 31);
        assert_eq!(a_of_symbol(&sym(&[&[0, 1, 2, 3, 4, 5]])), 20);
        for m in 0..8usize {
            let closed: usize = (1..=m).map(|i| (i - 1) * (m - i)).sum();
            assert_eq!(a_of_symbol(&Symbol::packed(&[m]).unwrap()), closed as u64);
        }
        let single = |parts: &[usize]| Multipartition::single(p(parts));
        assert_eq!(a_value(&single(&[3, 2, 1, 1, 1]), &[0], 1).unwrap(), 11);
        assert_eq!(a_value(&single(&[1, 1]), &[0], 1).unwrap(), 1);
        let lam = mp(&[&[], &[1], &[1]]);
        assert_eq!(
            a_value_with_charge(&lam, &[9, 4, 8], 3, Some(3)).unwrap(),
            10
        );
        assert_eq!(a_value(&lam, &[9, 4, 8], 3).unwrap(), 10);
    }
}
