use std::collections::{BTreeMap, HashSet};

use super::{bgo_condition, enumerate_hooks, Hook, HookKind};
use crate::combinatorics::Symbol;
use crate::error::{Error, Result};

/// The injection from CJ-hooks to BGO-hooks, as `(source, image)` pairs in
/// the enumeration order of the CJ-hooks.
///
/// Hooks that are both CJ and BGO map to themselves. A CJ-hook
/// `(a, a+h, i, j)` that is not BGO is sent to `(c+h, c, j, i)` where `c` is
/// the largest unused gap of runner `i` below `a` with `c+h` a bead of
/// runner `j`. Sources are handled pair by pair (`i<j` first, then `i>j`),
/// then by increasing `h`, then by increasing `a`.
pub fn injection_f(x: &Symbol) -> Result<Vec<(Hook, Hook)>> {
    let cj = enumerate_hooks(x, HookKind::Cj);

    // (i > j, i, j, h) -> sources a, ascending
    let mut groups: BTreeMap<(bool, usize, usize, usize), Vec<usize>> = BTreeMap::new();
    for h in cj.iter().filter(|h| !bgo_condition(h)) {
        groups
            .entry((h.i > h.j, h.i, h.j, h.b - h.a))
            .or_default()
            .push(h.a);
    }

    let mut images: BTreeMap<Hook, Hook> = BTreeMap::new();
    let mut used: HashSet<Hook> = HashSet::new();
    for (&(_, i, j, h), sources) in &groups {
        let xi = &x.components()[i - 1];
        let xj = &x.components()[j - 1];
        for &a in sources {
            let target = (0..a)
                .rev()
                .filter(|&c| !xi.contains(c) && xj.contains(c + h))
                .map(|c| Hook::new(c + h, c, j, i))
                .find(|t| !used.contains(t))
                .ok_or_else(|| {
                    Error::InternalInvariantViolation(format!(
                        "no image for CJ-hook ({a},{},{i},{j}) in {x}",
                        a + h
                    ))
                })?;
            used.insert(target);
            images.insert(Hook::new(a, a + h, i, j), target);
        }
    }

    Ok(cj
        .into_iter()
        .map(|h| (h, images.get(&h).copied().unwrap_or(h)))
        .collect())
}
