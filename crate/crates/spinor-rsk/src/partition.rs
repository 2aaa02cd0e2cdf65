//! Integer partitions and basic shape operations.

use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

/// An integer partition: a weakly decreasing list of positive parts.
/// Trailing zeros are trimmed on construction, so equality is equality of
/// the underlying part lists.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, trimming trailing zeros.
    /// Panics if the parts are not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition::default()
    }

    /// The parts, without trailing zeros.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// True if there are no parts.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The first (largest) part, or zero.
    pub fn first(&self) -> usize {
        self[0]
    }

    /// The conjugate partition (rows and columns swapped).
    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        Partition::new(parts)
    }

    /// True if every part of `self` is at least the matching part of `other`,
    /// i.e. the diagram of `other` fits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.length()).all(|i| self[i] >= other[i])
    }

    /// Iterates over the cells `(row, col)` of the diagram, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// The partition with one more box in `row` (which must keep the parts
    /// weakly decreasing).
    pub fn with_box_added(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(0);
        }
        assert!(row < parts.len(), "cannot add a box in row {row} of {self}");
        parts[row] += 1;
        Partition::new(parts)
    }

    /// The partition with one box removed from `row`.
    pub fn with_box_removed(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        assert!(row < parts.len() && parts[row] > 0, "cannot remove a box in row {row} of {self}");
        parts[row] -= 1;
        Partition::new(parts)
    }

    /// If `other` is `self` plus exactly one box, returns that box's row.
    pub fn one_box_larger_than(&self, other: &Partition) -> Option<usize> {
        if self.size() != other.size() + 1 || !self.contains(other) {
            return None;
        }
        (0..self.length()).find(|&r| self[r] == other[r] + 1)
    }
}

/// All partitions with size at most `max_size`, at most `max_length` parts,
/// and every part at most `max_part`, in lexicographic order of their part
/// lists (starting with the empty partition).
pub fn enumerate_partitions(max_size: usize, max_length: usize, max_part: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts: Vec<usize> = Vec::new();
    fn extend(
        parts: &mut Vec<usize>,
        remaining: usize,
        slots: usize,
        cap: usize,
        out: &mut Vec<Partition>,
    ) {
        out.push(Partition::new(parts.clone()));
        if slots == 0 {
            return;
        }
        for p in 1..=cap.min(remaining) {
            parts.push(p);
            extend(parts, remaining - p, slots - 1, p, out);
            parts.pop();
        }
    }
    extend(&mut parts, max_size, max_length, max_part, &mut out);
    out
}

impl Index<usize> for Partition {
    type Output = usize;

    /// The `i`-th part, with zero beyond the end.
    fn index(&self, i: usize) -> &usize {
        self.parts.get(i).unwrap_or(&0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec())
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(parts: [usize; N]) -> Self {
        Partition::new(parts.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(Partition::new(vec![3, 2, 0, 0]), Partition::from([3, 2]));
        assert_eq!(Partition::new(vec![]), Partition::empty());
    }

    #[test]
    #[should_panic(expected = "weakly decreasing")]
    fn rejects_increasing_parts() {
        Partition::new(vec![2, 3]);
    }

    #[test]
    fn index_beyond_end_is_zero() {
        let p = Partition::from([3, 1]);
        assert_eq!(p[0], 3);
        assert_eq!(p[1], 1);
        assert_eq!(p[5], 0);
    }

    #[test]
    fn conjugate_conjugate_is_identity() {
        let p = Partition::from([4, 2, 1]);
        assert_eq!(p.conjugate(), Partition::from([3, 2, 1, 1]));
        assert_eq!(p.conjugate().conjugate(), p);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn containment() {
        let big = Partition::from([3, 2, 1]);
        assert!(big.contains(&Partition::from([2, 2])));
        assert!(!big.contains(&Partition::from([4])));
        assert!(!big.contains(&Partition::from([1, 1, 1, 1])));
        assert!(big.contains(&Partition::empty()));
    }

    #[test]
    fn cells_enumerates_row_major() {
        let p = Partition::from([2, 1]);
        let cells: Vec<_> = p.cells().collect();
        assert_eq!(cells, vec![(0, 0), (0, 1), (1, 0)]);
        assert_eq!(p.size(), 3);
    }

    #[test]
    fn box_addition_and_removal() {
        let p = Partition::from([2, 1]);
        assert_eq!(p.with_box_added(0), Partition::from([3, 1]));
        assert_eq!(p.with_box_added(2), Partition::from([2, 1, 1]));
        assert_eq!(p.with_box_removed(1), Partition::from([2]));
        assert_eq!(
            Partition::from([3, 1]).one_box_larger_than(&p),
            Some(0)
        );
        assert_eq!(p.one_box_larger_than(&Partition::from([3, 1])), None);
    }

    #[test]
    fn display() {
        assert_eq!(Partition::from([3, 2, 1]).to_string(), "(3, 2, 1)");
        assert_eq!(Partition::empty().to_string(), "()");
    }

    #[test]
    fn enumeration_respects_all_three_bounds() {
        let all = enumerate_partitions(4, 2, 3);
        assert!(all.contains(&Partition::empty()));
        assert!(all.contains(&Partition::from([3, 1])));
        assert!(!all.contains(&Partition::from([4])), "part above cap");
        assert!(!all.contains(&Partition::from([2, 1, 1])), "too many parts");
        assert!(all.iter().all(|p| p.size() <= 4));
        // 0: (); 1: (1); 2: (2), (1,1); 3: (3), (2,1); 4: (3,1), (2,2)
        assert_eq!(all.len(), 8);
        // partitions inside a 2x2 box
        assert_eq!(enumerate_partitions(4, 2, 2).len(), 6);
        let mut sorted = all.clone();
        sorted.sort_by_key(|p| p.parts().to_vec());
        assert_eq!(all, sorted, "lexicographic order");
    }
}
