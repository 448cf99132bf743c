//! Instance generators for verification sweeps.
//!
//! Random instances come from ChaCha8 seeded with `seed_from_u64`, so a given
//! seed reproduces the same instances on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    compositions, multipartitions, partitions, partitions_up_to, BetaSet, Multipartition,
    Partition, Symbol,
};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Random(usize),
}

/// Bounds for a sweep. Ranges are inclusive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub n_max: usize,
    pub l_min: usize,
    pub l_max: usize,
    pub e_range: (usize, usize),
    pub k_range: (usize, usize),
    pub s_bound: usize,
    /// Largest entry of randomly drawn symbols.
    pub entry_max: usize,
    pub seed: u64,
    pub mode: Mode,
    /// Restricts the sweep to this one (multi)partition.
    pub lambda: Option<Multipartition>,
}

impl Default for InstanceSpec {
    fn default() -> Self {
        InstanceSpec {
            n_max: 6,
            l_min: 1,
            l_max: 3,
            e_range: (2, 4),
            k_range: (1, 3),
            s_bound: 4,
            entry_max: 30,
            seed: 0,
            mode: Mode::Exhaustive,
            lambda: None,
        }
    }
}

impl InstanceSpec {
    pub fn validate(&self) -> Result<()> {
        let ranges = [
            ("e", self.e_range),
            ("k", self.k_range),
            ("l", (self.l_min, self.l_max)),
        ];
        for (name, (lo, hi)) in ranges {
            if lo == 0 {
                return Err(Error::NonPositive { name });
            }
            if lo > hi {
                return Err(Error::InvalidRange { name, lo, hi });
            }
        }
        if let Mode::Random(0) = self.mode {
            return Err(Error::NonPositive { name: "count" });
        }
        Ok(())
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    pub fn es(&self) -> impl Iterator<Item = usize> + Clone {
        self.e_range.0..=self.e_range.1
    }

    pub fn ks(&self) -> impl Iterator<Item = usize> + Clone {
        self.k_range.0..=self.k_range.1
    }

    pub fn ls(&self) -> impl Iterator<Item = usize> + Clone {
        self.l_min..=self.l_max
    }

    /// Number of random draws; exhaustive mode falls back to `default`.
    pub fn count_or(&self, default: usize) -> usize {
        match self.mode {
            Mode::Random(c) => c,
            Mode::Exhaustive => default,
        }
    }

    /// Partitions of rank at most `n_max` (all of them, or a random sample).
    pub fn partitions(&self, rng: &mut ChaCha8Rng) -> Vec<Partition> {
        if let Some(lambda) = &self.lambda {
            return vec![lambda.merged_parts()];
        }
        match self.mode {
            Mode::Exhaustive => partitions_up_to(self.n_max),
            Mode::Random(count) => (0..count)
                .map(|_| random_partition(rng, self.n_max))
                .collect(),
        }
    }

    /// l-partitions of rank at most `n_max` for `l` in range.
    pub fn multipartitions(&self, rng: &mut ChaCha8Rng) -> Vec<Multipartition> {
        if let Some(lambda) = &self.lambda {
            return vec![lambda.clone()];
        }
        match self.mode {
            Mode::Exhaustive => self
                .ls()
                .flat_map(|l| (0..=self.n_max).flat_map(move |n| multipartitions(n, l)))
                .collect(),
            Mode::Random(count) => (0..count)
                .map(|_| {
                    let l = rng.gen_range(self.l_min..=self.l_max);
                    random_multipartition(rng, self.n_max, l)
                })
                .collect(),
        }
    }

    /// Charge vectors of length `l` with entries at most `s_bound`.
    pub fn charges(&self, l: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
        match self.mode {
            Mode::Exhaustive => charge_vectors(l, self.s_bound),
            Mode::Random(_) => vec![random_charge(rng, l, self.s_bound)],
        }
    }
}

/// All vectors in `{0, ..., bound}^l`, lexicographically.
pub fn charge_vectors(l: usize, bound: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn random_charge(rng: &mut impl Rng, l: usize, bound: usize) -> Vec<usize> {
    (0..l).map(|_| rng.gen_range(0..=bound)).collect()
}

/// A partition of a uniformly drawn rank `n ≤ n_max`, uniform among partitions of `n`.
pub fn random_partition(rng: &mut impl Rng, n_max: usize) -> Partition {
    let n = rng.gen_range(0..=n_max);
    partitions(n)
        .choose(rng)
        .cloned()
        .expect("at least one partition")
}

/// A uniformly drawn rank and composition, then uniform components.
pub fn random_multipartition(rng: &mut impl Rng, n_max: usize, l: usize) -> Multipartition {
    let n = rng.gen_range(0..=n_max);
    let comp = compositions(n, l)
        .choose(rng)
        .cloned()
        .expect("at least one composition");
    let parts = comp
        .into_iter()
        .map(|c| {
            partitions(c)
                .choose(rng)
                .cloned()
                .expect("at least one partition")
        })
        .collect();
    Multipartition::new(parts).expect("l ≥ 1")
}

/// A random beta-set with the given charge and entries at most `entry_max`.
pub fn random_beta_set(rng: &mut impl Rng, charge: usize, entry_max: usize) -> BetaSet {
    let mut pool: Vec<usize> = (0..=entry_max).collect();
    pool.shuffle(rng);
    pool.truncate(charge);
    pool.sort_unstable();
    BetaSet::new(pool).expect("distinct entries")
}

/// A random l-symbol. With `equal_charges` every component gets the same charge.
pub fn random_symbol(
    rng: &mut impl Rng,
    l: usize,
    entry_max: usize,
    equal_charges: bool,
) -> Symbol {
    let top = (entry_max + 1).min(12);
    let common = rng.gen_range(0..=top);
    let comps = (0..l)
        .map(|_| {
            let m = if equal_charges {
                common
            } else {
                rng.gen_range(0..=top)
            };
            random_beta_set(rng, m, entry_max)
        })
        .collect();
    Symbol::new(comps).expect("l ≥ 1")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_generation_is_reproducible() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            assert_eq!(
                random_symbol(&mut a, 3, 30, false),
                random_symbol(&mut b, 3, 30, false)
            );
            assert_eq!(
                random_multipartition(&mut a, 6, 2),
                random_multipartition(&mut b, 6, 2)
            );
        }
    }

    #[test]
    fn equal_charge_symbols() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let x = random_symbol(&mut rng, 4, 30, true);
            assert!(x.has_equal_charges());
            assert!(x.max_entry().is_none_or(|m| m <= 30));
        }
    }

    #[test]
    fn exhaustive_counts() {
        assert_eq!(charge_vectors(2, 2).len(), 9);
        assert_eq!(charge_vectors(0, 5), vec![Vec::<usize>::new()]);
        let spec = InstanceSpec {
            n_max: 3,
            l_min: 2,
            l_max: 2,
            ..InstanceSpec::default()
        };
        // 1 + 2 + 5 + 10 bipartitions of rank 0..=3
        assert_eq!(spec.multipartitions(&mut spec.rng()).len(), 18);
        assert!(InstanceSpec {
            e_range: (3, 2),
            ..InstanceSpec::default()
        }
        .validate()
        .is_err());
    }
}
