//! Young-diagram computations that do not go through beta-sets, used to
//! cross-check the abacus code.

use crate::combinatorics::Partition;
use crate::error::{check_positive, Result};
use crate::hooks::IntMultiset;

/// Classical hook lengths `λ_i - j + λ'_j - i + 1` over all cells.
pub fn oracle_young_hooks(lambda: &Partition) -> IntMultiset {
    let conj = lambda.conjugate();
    let mut out = Vec::with_capacity(lambda.rank());
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.parts()[j] - i - 1;
            out.push((arm + leg + 1) as i64);
        }
    }
    IntMultiset::from(out)
}

fn hook_length(parts: &[usize], conj: &[usize], i: usize, j: usize) -> usize {
    (parts[i] - j - 1) + (conj[j] - i - 1) + 1
}

/// Removes the rim hook attached to cell `(i, j)` (0-based).
fn remove_rim_hook(parts: &[usize], conj: &[usize], i: usize, j: usize) -> Vec<usize> {
    let last = conj[j] - 1;
    let mut out = parts.to_vec();
    for r in i..last {
        out[r] = parts[r + 1] - 1;
    }
    out[last] = j;
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Strips rim e-hooks from the Young diagram until none is left.
pub fn oracle_rim_hook_core(lambda: &Partition, e: usize) -> Result<Partition> {
    check_positive(e, "e")?;
    let mut parts = lambda.parts().to_vec();
    'outer: loop {
        let p = Partition::new(parts.clone())?;
        let conj = p.conjugate().parts().to_vec();
        for i in 0..parts.len() {
            for j in 0..parts[i] {
                if hook_length(&parts, &conj, i, j) == e {
                    parts = remove_rim_hook(&parts, &conj, i, j);
                    continue 'outer;
                }
            }
        }
        return Partition::new(parts);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn young_hooks() {
        let ms = |xs: &[i64]| IntMultiset::from(xs.to_vec());
        assert_eq!(
            oracle_young_hooks(&p(&[3, 2, 1, 1, 1])),
            ms(&[1, 1, 1, 2, 3, 3, 5, 7])
        );
        assert!(oracle_young_hooks(&Partition::empty()).is_empty());
        assert_eq!(oracle_young_hooks(&p(&[1, 1])), ms(&[1, 2]));
    }

    #[test]
    fn rim_hook_cores() {
        assert_eq!(
            oracle_rim_hook_core(&p(&[3, 2, 1, 1, 1]), 3).unwrap(),
            p(&[1, 1])
        );
        assert_eq!(oracle_rim_hook_core(&p(&[1, 1]), 3).unwrap(), p(&[1, 1]));
        assert_eq!(
            oracle_rim_hook_core(&p(&[4, 3, 2, 2]), 2).unwrap(),
            p(&[2, 1])
        );
        assert_eq!(
            oracle_rim_hook_core(&p(&[3]), 1).unwrap(),
            Partition::empty()
        );
    }
}
