//! Partitions, conjugation, parity families and bounded enumeration.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Trailing zeros are stripped on construction, so `[2, 0]` and `[2]`
/// compare equal and hash identically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from a weakly decreasing sequence.
    ///
    /// Panics if the sequence increases anywhere.
    pub fn new(parts: impl Into<Vec<usize>>) -> Self {
        let mut parts = parts.into();
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing: {parts:?}"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// Builds a partition from arbitrary entries by sorting them.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `i`-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of all parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The conjugate partition: `conj[j] = #{i : parts[i] > j}`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Containment of Young diagrams: `self_i <= other_i` for all rows.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// The reverse sequence padded with zeros to length `n`,
    /// `rev[i] = part(n - 1 - i)`; weakly increasing.
    pub fn reverse_padded(&self, n: usize) -> Option<Vec<usize>> {
        if self.len() > n {
            return None;
        }
        Some((0..n).map(|i| self.part(n - 1 - i)).collect())
    }

    /// Appends `extra` as new leading parts, e.g. `(4,2) ∪ {6} = (6,4,2)`.
    pub fn union_sorted(&self, extra: &[usize]) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(extra);
        Partition::from_unsorted(parts)
    }

    pub fn is_in_family(&self, family: ParityFamily) -> bool {
        family.contains(self)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "[]");
        }
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(serde::de::Error::custom("parts must be weakly decreasing"));
        }
        Ok(Partition::new(parts))
    }
}

/// Families of partitions singled out by row/column parity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParityFamily {
    All,
    /// All parts even.
    EvenRows,
    /// Conjugate has all parts even, i.e. every column height is even.
    EvenColumns,
    /// Even parts and even column heights.
    Both,
}

impl ParityFamily {
    pub fn contains(self, p: &Partition) -> bool {
        let even_rows = || p.parts().iter().all(|x| x % 2 == 0);
        let even_cols = || p.conjugate().parts().iter().all(|x| x % 2 == 0);
        match self {
            ParityFamily::All => true,
            ParityFamily::EvenRows => even_rows(),
            ParityFamily::EvenColumns => even_cols(),
            ParityFamily::Both => even_rows() && even_cols(),
        }
    }
}

/// All partitions with `|λ| <= max_weight` and `ℓ(λ) <= max_length`,
/// in lexicographic order on the part sequences.
pub fn enumerate_partitions(max_weight: usize, max_length: usize) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    let mut stack: Vec<Vec<usize>> = Vec::new();
    fn rec(
        prefix: &mut Vec<usize>,
        remaining: usize,
        max_part: usize,
        max_len: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if prefix.len() == max_len {
            return;
        }
        for part in 1..=max_part.min(remaining) {
            prefix.push(part);
            out.push(prefix.clone());
            rec(prefix, remaining - part, part, max_len, out);
            prefix.pop();
        }
    }
    let mut prefix = Vec::new();
    rec(&mut prefix, max_weight, max_weight, max_length, &mut stack);
    stack.sort();
    out.extend(stack.into_iter().map(Partition::new));
    out
}

/// Members of a parity family within the given weight and length bounds,
/// lexicographically ordered.
pub fn enumerate_family(
    family: ParityFamily,
    max_weight: usize,
    max_length: usize,
) -> Vec<Partition> {
    enumerate_partitions(max_weight, max_length)
        .into_iter()
        .filter(|p| family.contains(p))
        .collect()
}
