use std::fmt;

use serde::{Deserialize, Serialize};

/// A finite multiset of signed integers, stored sorted ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct IntMultiset {
    items: Vec<i64>,
}

impl IntMultiset {
    pub fn new() -> Self {
        IntMultiset { items: Vec::new() }
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn count(&self, x: i64) -> usize {
        let lo = self.items.partition_point(|&y| y < x);
        let hi = self.items.partition_point(|&y| y <= x);
        hi - lo
    }

    pub fn contains(&self, x: i64) -> bool {
        self.items.binary_search(&x).is_ok()
    }

    pub fn union(&self, other: &IntMultiset) -> IntMultiset {
        let mut items = Vec::with_capacity(self.len() + other.len());
        let (mut p, mut q) = (0, 0);
        while p < self.len() && q < other.len() {
            if self.items[p] <= other.items[q] {
                items.push(self.items[p]);
                p += 1;
            } else {
                items.push(other.items[q]);
                q += 1;
            }
        }
        items.extend_from_slice(&self.items[p..]);
        items.extend_from_slice(&other.items[q..]);
        IntMultiset { items }
    }

    /// `self - other`, or `None` if `other` is not a sub-multiset of `self`.
    pub fn difference(&self, other: &IntMultiset) -> Option<IntMultiset> {
        let mut items = Vec::with_capacity(self.len());
        let mut q = 0;
        for &x in &self.items {
            if q < other.len() && other.items[q] == x {
                q += 1;
            } else if q < other.len() && other.items[q] < x {
                return None;
            } else {
                items.push(x);
            }
        }
        (q == other.len()).then_some(IntMultiset { items })
    }

    pub fn is_submultiset_of(&self, other: &IntMultiset) -> bool {
        other.difference(self).is_some()
    }

    pub fn abs(&self) -> IntMultiset {
        self.items.iter().map(|x| x.abs()).collect()
    }

    pub fn nonzero(&self) -> IntMultiset {
        IntMultiset {
            items: self.items.iter().copied().filter(|&x| x != 0).collect(),
        }
    }

    pub fn negated(&self) -> IntMultiset {
        self.items.iter().map(|x| -x).collect()
    }

    pub fn count_negative(&self) -> usize {
        self.items.partition_point(|&x| x < 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.items.iter().copied()
    }
}

impl From<Vec<i64>> for IntMultiset {
    fn from(mut items: Vec<i64>) -> Self {
        items.sort_unstable();
        IntMultiset { items }
    }
}

impl From<IntMultiset> for Vec<i64> {
    fn from(m: IntMultiset) -> Self {
        m.items
    }
}

impl FromIterator<i64> for IntMultiset {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        IntMultiset::from(iter.into_iter().collect::<Vec<_>>())
    }
}

impl fmt::Display for IntMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, x) in self.items.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}
