//! Partitions, beta-sets, l-symbols and the conversions between them.
//!
//! A beta-set always carries its charge explicitly: `(0,2,3)` and
//! `(0,1,3,4)` represent the same partition `(1,1)` but are different
//! values. Everything that needs two symbols "at the same multicharge"
//! checks that at the call site.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_len, check_positive, Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from already non-negative parts, stripping zeros.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(index) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing { index });
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The part in row `i` (1-based); zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn weighted_sum(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    pub fn beta_set(&self) -> BetaSet {
        beta_set_of_partition(self)
    }

    /// The beta-set of charge `charge` representing this partition.
    pub fn beta_set_with_charge(&self, charge: usize) -> Result<BetaSet> {
        if charge < self.len() {
            return Err(Error::ChargeTooSmall {
                charge,
                required: self.len(),
            });
        }
        let entries = (1..=charge)
            .rev()
            .map(|i| self.part(i) + charge - i)
            .collect();
        Ok(BetaSet { entries })
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(raw: Vec<i64>) -> Result<Self> {
        normalize_partition(&raw)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

/// A strictly increasing sequence of bead positions; its length is the charge.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct BetaSet {
    entries: Vec<usize>,
}

impl BetaSet {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if let Some(index) = entries.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyIncreasing { index });
        }
        Ok(BetaSet { entries })
    }

    /// `(0, 1, ..., charge-1)`.
    pub fn packed(charge: usize) -> Self {
        BetaSet {
            entries: (0..charge).collect(),
        }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn charge(&self) -> usize {
        self.entries.len()
    }

    pub fn max_entry(&self) -> Option<usize> {
        self.entries.last().copied()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.entries.binary_search(&x).is_ok()
    }

    /// Number of beads strictly below `x`.
    pub fn beads_below(&self, x: usize) -> usize {
        self.entries.partition_point(|&e| e < x)
    }

    /// Number of gaps strictly below `x`.
    pub fn gaps_below(&self, x: usize) -> usize {
        x - self.beads_below(x)
    }

    /// The first `count` gaps in increasing order.
    pub fn first_gaps(&self, count: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(count);
        let mut beads = self.entries.iter().peekable();
        let mut x = 0;
        while out.len() < count {
            if beads.peek() == Some(&&x) {
                beads.next();
            } else {
                out.push(x);
            }
            x += 1;
        }
        out
    }

    pub fn is_packed(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, &e)| i == e)
    }

    pub fn partition(&self) -> Partition {
        partition_of_beta_set(self)
    }

    pub fn shift(&self, s: usize) -> BetaSet {
        shift_beta_set(self, s)
    }

    pub fn scale(&self, k: usize) -> BetaSet {
        BetaSet {
            entries: self.entries.iter().map(|&a| k * a).collect(),
        }
    }

    pub(crate) fn insert(&mut self, x: usize) {
        if let Err(pos) = self.entries.binary_search(&x) {
            self.entries.insert(pos, x);
        }
    }

    pub(crate) fn remove(&mut self, x: usize) {
        if let Ok(pos) = self.entries.binary_search(&x) {
            self.entries.remove(pos);
        }
    }
}

impl TryFrom<Vec<usize>> for BetaSet {
    type Error = Error;

    fn try_from(entries: Vec<usize>) -> Result<Self> {
        BetaSet::new(entries)
    }
}

impl From<BetaSet> for Vec<usize> {
    fn from(b: BetaSet) -> Self {
        b.entries
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

/// An l-tuple of beta-sets. Component `j` is runner `j` of the abacus,
/// counted from the bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SymbolRepr", into = "SymbolRepr")]
pub struct Symbol {
    components: Vec<BetaSet>,
}

#[derive(Serialize, Deserialize)]
struct SymbolRepr {
    components: Vec<BetaSet>,
}

impl TryFrom<SymbolRepr> for Symbol {
    type Error = Error;

    fn try_from(r: SymbolRepr) -> Result<Self> {
        Symbol::new(r.components)
    }
}

impl From<Symbol> for SymbolRepr {
    fn from(s: Symbol) -> Self {
        SymbolRepr {
            components: s.components,
        }
    }
}

impl Symbol {
    pub fn new(components: Vec<BetaSet>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptySymbol);
        }
        Ok(Symbol { components })
    }

    /// Convenience constructor from raw entry lists.
    pub fn from_entries(components: Vec<Vec<usize>>) -> Result<Self> {
        Symbol::new(
            components
                .into_iter()
                .map(BetaSet::new)
                .collect::<Result<_>>()?,
        )
    }

    /// The symbol with every runner packed, at the given multicharge.
    pub fn packed(multicharge: &[usize]) -> Result<Self> {
        Symbol::new(multicharge.iter().map(|&m| BetaSet::packed(m)).collect())
    }

    pub fn l(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[BetaSet] {
        &self.components
    }

    /// Component `j`, 1-based.
    pub fn component(&self, j: usize) -> Result<&BetaSet> {
        if j == 0 || j > self.l() {
            return Err(Error::IndexOutOfRange {
                index: j,
                l: self.l(),
            });
        }
        Ok(&self.components[j - 1])
    }

    pub(crate) fn components_mut(&mut self) -> &mut [BetaSet] {
        &mut self.components
    }

    pub fn multicharge(&self) -> Vec<usize> {
        self.components.iter().map(BetaSet::charge).collect()
    }

    pub fn has_equal_charges(&self) -> bool {
        let m = self.components[0].charge();
        self.components.iter().all(|c| c.charge() == m)
    }

    pub fn max_entry(&self) -> Option<usize> {
        self.components.iter().filter_map(BetaSet::max_entry).max()
    }

    pub fn entry_sum(&self) -> usize {
        self.components.iter().flat_map(|c| c.entries()).sum()
    }

    pub fn scale(&self, k: usize) -> Result<Symbol> {
        scale_symbol(self, k)
    }

    pub fn shift(&self, s: &[usize]) -> Result<Symbol> {
        shift_symbol(self, s)
    }

    /// Shifts every component by the same amount.
    pub fn shift_uniform(&self, c: usize) -> Symbol {
        Symbol {
            components: self.components.iter().map(|x| x.shift(c)).collect(),
        }
    }

    pub fn multipartition(&self) -> Multipartition {
        multipartition_of_symbol(self).0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, c) in self.components.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An l-tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptySymbol);
        }
        Ok(Multipartition { components })
    }

    pub fn from_parts(components: Vec<Vec<usize>>) -> Result<Self> {
        Multipartition::new(
            components
                .into_iter()
                .map(Partition::new)
                .collect::<Result<_>>()?,
        )
    }

    pub fn empty(l: usize) -> Result<Self> {
        Multipartition::new(vec![Partition::empty(); l])
    }

    pub fn single(p: Partition) -> Self {
        Multipartition {
            components: vec![p],
        }
    }

    pub fn l(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(Partition::rank).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(Partition::is_empty)
    }

    /// The partition formed by all parts of all components, reordered.
    pub fn merged_parts(&self) -> Partition {
        let mut parts: Vec<usize> = self
            .components
            .iter()
            .flat_map(|p| p.parts().iter().copied())
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Smallest common charge accepted by [`equal_charge_symbol`].
    pub fn min_common_charge(&self) -> usize {
        self.components
            .iter()
            .map(Partition::len)
            .max()
            .unwrap_or(0)
    }

    /// Common charge used when none is given: the largest charge among the
    /// canonical beta-sets of the components.
    pub fn default_common_charge(&self) -> usize {
        self.min_common_charge() + 1
    }
}

impl TryFrom<Vec<Partition>> for Multipartition {
    type Error = Error;

    fn try_from(c: Vec<Partition>) -> Result<Self> {
        Multipartition::new(c)
    }
}

impl From<Multipartition> for Vec<Partition> {
    fn from(m: Multipartition) -> Self {
        m.components
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, c) in self.components.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            if c.is_empty() {
                write!(f, "∅")?;
            } else {
                write!(f, "{c}")?;
            }
        }
        write!(f, ")")
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

pub fn normalize_partition(raw: &[i64]) -> Result<Partition> {
    if let Some(index) = raw.iter().position(|&x| x < 0) {
        return Err(Error::NegativePart {
            index,
            value: raw[index],
        });
    }
    Partition::new(raw.iter().map(|&x| x as usize).collect())
}

/// `X(λ)`: charge is the number of nonzero parts plus one.
pub fn beta_set_of_partition(lambda: &Partition) -> BetaSet {
    lambda
        .beta_set_with_charge(lambda.len() + 1)
        .expect("charge len+1 always suffices")
}

/// `Λ(X)`: part `i` is the number of gaps to the left of the `i`-th largest bead.
pub fn partition_of_beta_set(x: &BetaSet) -> Partition {
    let parts = x
        .entries
        .iter()
        .enumerate()
        .rev()
        .map(|(idx, &a)| a - idx)
        .filter(|&p| p > 0)
        .collect();
    Partition { parts }
}

/// `X[s]`: prepend `s` beads and push the rest up by `s`.
pub fn shift_beta_set(x: &BetaSet, s: usize) -> BetaSet {
    let entries = (0..s).chain(x.entries.iter().map(|&a| a + s)).collect();
    BetaSet { entries }
}

pub fn scale_symbol(x: &Symbol, k: usize) -> Result<Symbol> {
    check_positive(k, "k")?;
    Ok(Symbol {
        components: x.components.iter().map(|c| c.scale(k)).collect(),
    })
}

pub fn shift_symbol(x: &Symbol, s: &[usize]) -> Result<Symbol> {
    check_len(x.l(), s.len())?;
    let components = x
        .components
        .iter()
        .zip(s)
        .map(|(c, &si)| c.shift(si))
        .collect();
    Ok(Symbol { components })
}

/// `X^{1,0}(λ)`: every component at the same charge `m`.
///
/// With `common_charge = None` the charge is the largest canonical charge
/// `max_j (len λ^j + 1)`. An explicit charge must hold every component.
pub fn equal_charge_symbol(
    lambda: &Multipartition,
    common_charge: Option<usize>,
) -> Result<Symbol> {
    let m = common_charge.unwrap_or_else(|| lambda.default_common_charge());
    let components = lambda
        .components
        .iter()
        .map(|p| p.beta_set_with_charge(m))
        .collect::<Result<_>>()?;
    Ok(Symbol { components })
}

/// `X^{k,s}(λ) = (k X^{1,0}(λ))[s]`.
pub fn symbol_of_multipartition(
    lambda: &Multipartition,
    k: usize,
    s: &[usize],
    common_charge: Option<usize>,
) -> Result<Symbol> {
    check_positive(k, "k")?;
    check_len(lambda.l(), s.len())?;
    equal_charge_symbol(lambda, common_charge)?
        .scale(k)?
        .shift(s)
}

pub fn multipartition_of_symbol(x: &Symbol) -> (Multipartition, Vec<usize>) {
    let components = x.components.iter().map(partition_of_beta_set).collect();
    (Multipartition { components }, x.multicharge())
}

/// ASCII abacus: one line per runner with runner 1 at the bottom, `x` for a
/// bead and `o` for a gap, followed by a line of position labels.
pub fn render_abacus(x: &Symbol, width: usize) -> Result<String> {
    let required = x.max_entry().map_or(1, |m| m + 1);
    if width < required || width == 0 {
        return Err(Error::WidthTooSmall {
            width,
            required: required.max(1),
        });
    }
    let cell = (width - 1).to_string().len();
    let mut lines = Vec::with_capacity(x.l() + 1);
    for runner in x.components.iter().rev() {
        let cells: Vec<String> = (0..width)
            .map(|p| format!("{:>cell$}", if runner.contains(p) { "x" } else { "o" }))
            .collect();
        lines.push(cells.join(" "));
    }
    let labels: Vec<String> = (0..width).map(|p| format!("{p:>cell$}")).collect();
    lines.push(labels.join(" "));
    let mut out = lines.join("\n");
    out.push('\n');
    Ok(out)
}

/// All partitions of `n`, in increasing lexicographic order of their parts.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in 1..=n.min(max) {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of rank at most `n_max`, by rank then lexicographically.
pub fn partitions_up_to(n_max: usize) -> Vec<Partition> {
    (0..=n_max).flat_map(partitions).collect()
}

/// Weak compositions of `n` into `l` parts, in increasing lexicographic order.
pub fn compositions(n: usize, l: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, l: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if l == 1 {
            prefix.push(n);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for p in 0..=n {
            prefix.push(p);
            go(n - p, l - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if l > 0 {
        go(n, l, &mut Vec::new(), &mut out);
    }
    out
}

/// All l-partitions of `n`: compositions of `n` in order, then each
/// component's partitions in order, first component outermost.
pub fn multipartitions(n: usize, l: usize) -> Vec<Multipartition> {
    let mut out = Vec::new();
    for comp in compositions(n, l) {
        let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
        for &c in &comp {
            let options = partitions(c);
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    options.iter().map(move |p| {
                        let mut next = prefix.clone();
                        next.push(p.clone());
                        next
                    })
                })
                .collect();
        }
        out.extend(
            acc.into_iter()
                .map(|components| Multipartition { components }),
        );
    }
    out
}
