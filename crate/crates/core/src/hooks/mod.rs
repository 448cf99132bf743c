//! Generalised hooks on l-symbols.
//!
//! A hook `(a, b, i, j)` pairs a bead `a` of runner `i` with a gap `b` of
//! runner `j`. Runner indices are 1-based throughout the public API.

mod injection;
mod multiset;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use injection::injection_f;
pub use multiset::IntMultiset;

use crate::combinatorics::{BetaSet, Multipartition, Symbol};
use crate::error::{check_len, check_positive, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Hook {
    pub a: usize,
    pub b: usize,
    pub i: usize,
    pub j: usize,
}

impl Hook {
    pub fn new(a: usize, b: usize, i: usize, j: usize) -> Self {
        Hook { a, b, i, j }
    }

    pub fn length(&self) -> i64 {
        self.a as i64 - self.b as i64
    }

    pub fn is_diagonal(&self) -> bool {
        self.i == self.j
    }

    /// Sort key used for every returned hook sequence.
    pub(crate) fn key(&self) -> (usize, usize, usize, usize) {
        (self.i, self.a, self.j, self.b)
    }
}

impl fmt::Display for Hook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a, self.b, self.i, self.j)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HookKind {
    Bgo,
    Cj,
}

impl HookKind {
    pub fn name(self) -> &'static str {
        match self {
            HookKind::Bgo => "bgo",
            HookKind::Cj => "cj",
        }
    }
}

impl FromStr for HookKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "bgo" => Ok(HookKind::Bgo),
            "cj" => Ok(HookKind::Cj),
            other => Err(format!("unknown hook kind `{other}` (expected bgo or cj)")),
        }
    }
}

fn runner(x: &Symbol, i: usize) -> Result<&BetaSet> {
    x.component(i)
}

pub fn is_hook(x: &Symbol, h: &Hook) -> Result<bool> {
    let xi = runner(x, h.i)?;
    let xj = runner(x, h.j)?;
    Ok(xi.contains(h.a) && !xj.contains(h.b))
}

fn require_hook(x: &Symbol, h: &Hook) -> Result<()> {
    if is_hook(x, h)? {
        Ok(())
    } else {
        Err(Error::NotAHook {
            a: h.a,
            b: h.b,
            i: h.i,
            j: h.j,
        })
    }
}

fn bgo_condition(h: &Hook) -> bool {
    h.a > h.b || (h.a == h.b && h.i > h.j)
}

fn cj_condition(x: &Symbol, h: &Hook) -> bool {
    let xi = &x.components()[h.i - 1];
    let xj = &x.components()[h.j - 1];
    xi.gaps_below(h.a) > xj.gaps_below(h.b)
}

pub fn is_bgo_hook(x: &Symbol, h: &Hook) -> Result<bool> {
    require_hook(x, h)?;
    Ok(bgo_condition(h))
}

pub fn is_cj_hook(x: &Symbol, h: &Hook) -> Result<bool> {
    require_hook(x, h)?;
    Ok(cj_condition(x, h))
}

pub fn is_kind(x: &Symbol, h: &Hook, kind: HookKind) -> Result<bool> {
    match kind {
        HookKind::Bgo => is_bgo_hook(x, h),
        HookKind::Cj => is_cj_hook(x, h),
    }
}

/// Gaps of `xj` strictly below `limit`, ascending.
fn gaps_below(xj: &BetaSet, limit: usize) -> impl Iterator<Item = usize> + '_ {
    (0..limit).filter(move |&g| !xj.contains(g))
}

/// Hooks `(a, b, i, j)` of the given kind for one fixed bead `a` of runner `i`
/// and one target runner `j`, in increasing `b`.
fn hooks_at(x: &Symbol, a: usize, i: usize, j: usize, kind: HookKind, out: &mut Vec<Hook>) {
    let xi = &x.components()[i - 1];
    let xj = &x.components()[j - 1];
    match kind {
        HookKind::Bgo => {
            let limit = if i > j { a + 1 } else { a };
            out.extend(gaps_below(xj, limit).map(|b| Hook::new(a, b, i, j)));
        }
        HookKind::Cj => {
            let count = xi.gaps_below(a);
            out.extend(
                xj.first_gaps(count)
                    .into_iter()
                    .map(|b| Hook::new(a, b, i, j)),
            );
        }
    }
}

/// All hooks of the given kind, ordered by `(i, a, j, b)`.
pub fn enumerate_hooks(x: &Symbol, kind: HookKind) -> Vec<Hook> {
    let l = x.l();
    let mut out = Vec::new();
    for i in 1..=l {
        for &a in x.components()[i - 1].entries() {
            for j in 1..=l {
                hooks_at(x, a, i, j, kind, &mut out);
            }
        }
    }
    out
}

pub fn lengths_of(hooks: &[Hook]) -> IntMultiset {
    hooks.iter().map(Hook::length).collect()
}

/// Hook lengths split into same-runner and cross-runner parts.
pub fn split_lengths(hooks: &[Hook]) -> (IntMultiset, IntMultiset) {
    let diagonal = hooks
        .iter()
        .filter(|h| h.is_diagonal())
        .map(Hook::length)
        .collect();
    let cross = hooks
        .iter()
        .filter(|h| !h.is_diagonal())
        .map(Hook::length)
        .collect();
    (diagonal, cross)
}

pub fn hook_lengths(x: &Symbol, kind: HookKind) -> IntMultiset {
    lengths_of(&enumerate_hooks(x, kind))
}

/// Number of hooks `(a, _, i, j)` of the given kind, by the closed count formulas.
pub fn hook_count_at(x: &Symbol, a: usize, i: usize, j: usize, kind: HookKind) -> Result<usize> {
    let xi = runner(x, i)?;
    let xj = runner(x, j)?;
    if !xi.contains(a) {
        return Err(Error::NotABead { a, i });
    }
    Ok(match kind {
        HookKind::Cj => xi.gaps_below(a),
        HookKind::Bgo if i <= j => xj.gaps_below(a),
        HookKind::Bgo => xj.gaps_below(a + 1),
    })
}

/// Hooks of `kX` whose length is divisible by `k`.
pub fn scaled_hooks(x: &Symbol, k: usize, kind: HookKind) -> Result<Vec<Hook>> {
    check_positive(k, "k")?;
    let kx = x.scale(k)?;
    Ok(enumerate_hooks(&kx, kind)
        .into_iter()
        .filter(|h| h.length().rem_euclid(k as i64) == 0)
        .collect())
}

/// Hooks of `(kX)[s]` with `(a - s_i) - (b - s_j)` divisible by `k`, for an
/// equal-charge symbol `X`.
pub fn charged_scaled_hooks_of_symbol(
    x: &Symbol,
    k: usize,
    s: &[usize],
    kind: HookKind,
) -> Result<Vec<Hook>> {
    check_positive(k, "k")?;
    check_len(x.l(), s.len())?;
    if !x.has_equal_charges() {
        return Err(Error::UnequalCharges {
            charges: x.multicharge(),
        });
    }
    let y = x.scale(k)?.shift(s)?;
    let k = k as i64;
    Ok(enumerate_hooks(&y, kind)
        .into_iter()
        .filter(|h| {
            let diff = (h.a as i64 - s[h.i - 1] as i64) - (h.b as i64 - s[h.j - 1] as i64);
            diff.rem_euclid(k) == 0
        })
        .collect())
}

/// Charged scaled hooks of `X^{1,0}(λ)`; `common_charge` as in
/// [`crate::combinatorics::equal_charge_symbol`].
pub fn charged_scaled_hooks(
    lambda: &Multipartition,
    k: usize,
    s: &[usize],
    kind: HookKind,
    common_charge: Option<usize>,
) -> Result<Vec<Hook>> {
    check_len(lambda.l(), s.len())?;
    let x = crate::combinatorics::equal_charge_symbol(lambda, common_charge)?;
    charged_scaled_hooks_of_symbol(&x, k, s, kind)
}

/// `{k(a-b) + s_i - s_j}` over the hooks of `X` of the given kind.
pub fn hook_lengths_shifted(
    x: &Symbol,
    k: usize,
    s: &[usize],
    kind: HookKind,
) -> Result<IntMultiset> {
    check_len(x.l(), s.len())?;
    Ok(shifted_lengths(&enumerate_hooks(x, kind), k, s))
}

pub(crate) fn shifted_lengths(hooks: &[Hook], k: usize, s: &[usize]) -> IntMultiset {
    hooks
        .iter()
        .map(|h| k as i64 * h.length() + s[h.i - 1] as i64 - s[h.j - 1] as i64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(c: &[&[usize]]) -> Symbol {
        Symbol::from_entries(c.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    fn ms(xs: &[i64]) -> IntMultiset {
        xs.iter().copied().collect()
    }

    fn three_runner() -> Symbol {
        sym(&[&[0, 2, 4, 6], &[0, 3, 4], &[0, 2, 5]])
    }

    /// Definitional enumeration with an explicit search bound, used to cross-check.
    fn brute(x: &Symbol, kind: HookKind) -> Vec<Hook> {
        let bound = x.max_entry().unwrap_or(0)
            + x.components().iter().map(|c| c.charge()).sum::<usize>()
            + 2;
        let mut out = Vec::new();
        for i in 1..=x.l() {
            for j in 1..=x.l() {
                for &a in x.components()[i - 1].entries() {
                    for b in 0..bound {
                        let h = Hook::new(a, b, i, j);
                        if is_hook(x, &h).unwrap() && is_kind(x, &h, kind).unwrap() {
                            out.push(h);
                        }
                    }
                }
            }
        }
        out.sort_by_key(Hook::key);
        out
    }

    #[test]
    fn hook_predicates() {
        let x = three_runner();
        assert!(is_hook(&x, &Hook::new(2, 2, 3, 2)).unwrap());
        assert!(!is_hook(&x, &Hook::new(1, 0, 1, 1)).unwrap());
        assert!(is_hook(&x, &Hook::new(3, 3, 2, 3)).unwrap());
        assert!(is_bgo_hook(&x, &Hook::new(2, 2, 3, 2)).unwrap());
        assert!(!is_bgo_hook(&x, &Hook::new(3, 3, 2, 3)).unwrap());
        assert!(is_cj_hook(&x, &Hook::new(3, 3, 2, 3)).unwrap());
        assert!(!is_cj_hook(&x, &Hook::new(2, 2, 3, 2)).unwrap());
        assert!(is_cj_hook(&sym(&[&[0, 3]]), &Hook::new(3, 1, 1, 1)).unwrap());
        assert_eq!(
            is_hook(&x, &Hook::new(0, 1, 4, 1)),
            Err(Error::IndexOutOfRange { index: 4, l: 3 })
        );
        assert_eq!(
            is_bgo_hook(&x, &Hook::new(1, 0, 1, 1)),
            Err(Error::NotAHook {
                a: 1,
                b: 0,
                i: 1,
                j: 1
            })
        );
    }

    #[test]
    fn same_runner_equal_positions_are_never_bgo() {
        let x = three_runner();
        for i in 1..=3 {
            for &a in x.components()[i - 1].entries() {
                // (a,a,i,i) is never even a hook, since a is a bead of X_i
                assert!(!is_hook(&x, &Hook::new(a, a, i, i)).unwrap());
            }
        }
    }

    #[test]
    fn lengths_of_two_runner_examples() {
        let x = sym(&[&[0, 5], &[0, 1, 4]]);
        let bgo = enumerate_hooks(&x, HookKind::Bgo);
        let cj = enumerate_hooks(&x, HookKind::Cj);
        let (d, c) = split_lengths(&bgo);
        assert_eq!(d, ms(&[1, 1, 2, 2, 3, 4]));
        assert_eq!(c, ms(&[0, 0, 1, 2, 3, 2, 3]));
        let (d, c) = split_lengths(&cj);
        assert_eq!(d, ms(&[1, 1, 2, 2, 3, 4]));
        assert_eq!(c, ms(&[-1, 0, 2, 3, 2, 3]));

        let x = sym(&[&[0, 1, 2, 5], &[0, 3, 4]]);
        assert_eq!(
            hook_lengths(&x, HookKind::Bgo),
            ms(&[1, 1, 2, 2, 2, 3, 0, 0, 1, 1, 3, 4])
        );
        assert_eq!(
            hook_lengths(&x, HookKind::Cj),
            ms(&[1, 1, 2, 2, 2, 3, -1, 0, 0, 1, 3, 4])
        );

        let x = sym(&[&[0, 3]]);
        assert_eq!(hook_lengths(&x, HookKind::Bgo), ms(&[1, 2]));
        assert_eq!(hook_lengths(&x, HookKind::Cj), ms(&[1, 2]));
    }

    #[test]
    fn packed_equal_charge_has_no_hooks() {
        let x = Symbol::packed(&[3, 3, 3]).unwrap();
        assert!(enumerate_hooks(&x, HookKind::Cj).is_empty());
        assert!(enumerate_hooks(&x, HookKind::Bgo)
            .iter()
            .all(|h| h.length() == 0));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for x in [
            three_runner(),
            sym(&[&[0, 5], &[0, 1, 4]]),
            sym(&[&[1, 2, 7], &[], &[0, 4]]),
            sym(&[&[3], &[0, 1, 2, 3, 9]]),
        ] {
            for kind in [HookKind::Bgo, HookKind::Cj] {
                assert_eq!(enumerate_hooks(&x, kind), brute(&x, kind), "{x} {kind:?}");
            }
        }
    }

    #[test]
    fn counts_at_a_bead() {
        let x = three_runner();
        assert_eq!(hook_count_at(&x, 6, 1, 1, HookKind::Cj).unwrap(), 3);
        assert_eq!(hook_count_at(&x, 0, 2, 3, HookKind::Cj).unwrap(), 0);
        assert_eq!(hook_count_at(&x, 2, 3, 2, HookKind::Bgo).unwrap(), 2);
        assert_eq!(
            hook_count_at(&x, 1, 1, 1, HookKind::Cj),
            Err(Error::NotABead { a: 1, i: 1 })
        );
    }

    #[test]
    fn scaled_example() {
        let x = sym(&[&[0, 2, 3], &[0, 1, 2]]);
        let bgo = scaled_hooks(&x, 2, HookKind::Bgo).unwrap();
        let cj = scaled_hooks(&x, 2, HookKind::Cj).unwrap();
        assert_eq!(lengths_of(&bgo), ms(&[2, 4, 0, 2]));
        assert_eq!(lengths_of(&cj), ms(&[2, 4, 0, 2]));
        assert_eq!(
            scaled_hooks(&x, 1, HookKind::Cj).unwrap(),
            enumerate_hooks(&x, HookKind::Cj)
        );
    }

    #[test]
    fn charged_scaled_example() {
        let x = sym(&[&[0, 2, 3], &[0, 1, 2]]);
        let hooks = charged_scaled_hooks_of_symbol(&x, 2, &[1, 4], HookKind::Cj).unwrap();
        assert_eq!(
            hooks,
            vec![
                Hook::new(5, 3, 1, 1),
                Hook::new(7, 3, 1, 1),
                Hook::new(7, 10, 1, 2),
                Hook::new(8, 3, 2, 1)
            ]
        );
        assert_eq!(lengths_of(&hooks), ms(&[2, 4, -3, 5]));
    }

    #[test]
    fn charged_scaled_of_quotient() {
        let lam = Multipartition::from_parts(vec![vec![], vec![1], vec![1]]).unwrap();
        let hooks = charged_scaled_hooks(&lam, 3, &[9, 4, 8], HookKind::Cj, Some(3)).unwrap();
        assert_eq!(lengths_of(&hooks), ms(&[3, -5, -1, 3, -1, 7]));
        let mut listed = vec![
            Hook::new(13, 10, 2, 2),
            Hook::new(13, 18, 2, 1),
            Hook::new(13, 14, 2, 3),
            Hook::new(17, 14, 3, 3),
            Hook::new(17, 18, 3, 1),
            Hook::new(17, 10, 3, 2),
        ];
        listed.sort_by_key(Hook::key);
        assert_eq!(hooks, listed);

        let x = crate::combinatorics::equal_charge_symbol(&lam, None).unwrap();
        assert_eq!(
            charged_scaled_hooks(&lam, 1, &[0, 0, 0], HookKind::Cj, None).unwrap(),
            enumerate_hooks(&x, HookKind::Cj)
        );
    }

    #[test]
    fn shifted_lengths_example() {
        let x = sym(&[&[0, 2, 3], &[0, 1, 2]]);
        assert_eq!(
            hook_lengths_shifted(&x, 2, &[1, 4], HookKind::Bgo).unwrap(),
            ms(&[2, 4, 3, 5])
        );
        assert_eq!(
            hook_lengths_shifted(&x, 2, &[1, 4], HookKind::Cj).unwrap(),
            ms(&[2, 4, -3, -5])
        );
        assert_eq!(
            hook_lengths_shifted(&x, 1, &[0, 0], HookKind::Cj).unwrap(),
            hook_lengths(&x, HookKind::Cj)
        );
        assert_eq!(
            hook_lengths_shifted(&x, 1, &[0], HookKind::Cj),
            Err(Error::LengthMismatch {
                expected: 2,
                found: 1
            })
        );
    }
}
