//! Columns and skew tableaux over a graded alphabet.
//!
//! A tableau is stored column by column, left to right, together with the
//! ambient row of each column's top cell (row 0 at the top, rows increasing
//! downward).  Two constructors cover the usual alignments:
//!
//! * [`SkewTableau::ceil`]: top-aligned columns, the `i`-th column lowered by
//!   a given amount;
//! * [`SkewTableau::floor`]: bottom-aligned columns, the `i`-th column raised
//!   by a given amount.
//!
//! Configurations built this way need not form a legal skew shape (columns of
//! a spinor tuple may be vertically disjoint); [`SkewTableau::shape`] reports
//! the outer/inner partition pair exactly when they do.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alphabet::{GradedAlphabet, Letter};
use crate::partition::Partition;

/// A column of letters, listed top to bottom.
pub type Column = Vec<Letter>;

/// Checks the intra-column condition: consecutive letters weakly increase,
/// with equality allowed only in degree 1.
pub fn column_is_valid(alph: &GradedAlphabet, col: &[Letter]) -> bool {
    col.windows(2).all(|w| alph.col_pair_ok(w[0], w[1]))
}

/// A configuration of columns at explicit vertical offsets.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SkewTableau {
    columns: Vec<Column>,
    tops: Vec<i32>,
}

impl SkewTableau {
    /// Builds a configuration from columns and the ambient rows of their tops.
    pub fn new(columns: Vec<Column>, tops: Vec<i32>) -> Self {
        assert_eq!(columns.len(), tops.len(), "one top per column");
        SkewTableau { columns, tops }
    }

    /// Top-aligned columns, column `i` lowered by `lowerings[i]`.
    pub fn ceil(columns: Vec<Column>, lowerings: &[usize]) -> Self {
        assert_eq!(columns.len(), lowerings.len(), "one lowering per column");
        let tops = lowerings.iter().map(|&d| d as i32).collect();
        SkewTableau { columns, tops }
    }

    /// Bottom-aligned columns, column `i` raised by `raises[i]`.
    pub fn floor(columns: Vec<Column>, raises: &[usize]) -> Self {
        assert_eq!(columns.len(), raises.len(), "one raise per column");
        let baseline = columns
            .iter()
            .zip(raises)
            .map(|(c, &u)| c.len() + u)
            .max()
            .unwrap_or(0) as i32;
        let tops = columns
            .iter()
            .zip(raises)
            .map(|(c, &u)| baseline - (c.len() + u) as i32)
            .collect();
        SkewTableau { columns, tops }
    }

    /// The columns, left to right.
    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    /// The ambient top rows, one per column.
    pub fn tops(&self) -> &[i32] {
        &self.tops
    }

    /// Number of columns.
    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    /// Total number of cells.
    pub fn total_cells(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    /// The ambient row one past the bottom cell of column `j`.
    pub fn bottom(&self, j: usize) -> i32 {
        self.tops[j] + self.columns[j].len() as i32
    }

    /// The letter at ambient position `(row, col)`, if occupied.
    pub fn entry(&self, row: i32, col: usize) -> Option<Letter> {
        let t = *self.tops.get(col)?;
        if row < t {
            return None;
        }
        self.columns[col].get((row - t) as usize).copied()
    }

    /// Shifts all columns vertically so that the smallest top is row 0.
    pub fn normalized(&self) -> SkewTableau {
        let min = self.tops.iter().copied().min().unwrap_or(0);
        SkewTableau {
            columns: self.columns.clone(),
            tops: self.tops.iter().map(|t| t - min).collect(),
        }
    }

    /// The reading word: columns right to left, each top to bottom.
    pub fn reading_word(&self) -> Vec<Letter> {
        self.columns.iter().rev().flatten().copied().collect()
    }

    /// Semistandardness: every column satisfies the column condition and, for
    /// each pair of horizontally adjacent occupied cells in neighboring
    /// columns, the row condition holds.
    pub fn is_semistandard(&self, alph: &GradedAlphabet) -> bool {
        if !self.columns.iter().all(|c| column_is_valid(alph, c)) {
            return false;
        }
        for j in 0..self.columns.len().saturating_sub(1) {
            let (lo, hi) = (self.tops[j].max(self.tops[j + 1]), self.bottom(j).min(self.bottom(j + 1)));
            for row in lo..hi {
                let u = self.entry(row, j).expect("row in range");
                let v = self.entry(row, j + 1).expect("row in range");
                if !alph.row_pair_ok(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// The outer/inner partition pair `(outer, inner)` if the configuration is
    /// a legal skew shape anchored at row 0 (rows contiguous, columns flush).
    pub fn shape(&self) -> Option<(Partition, Partition)> {
        if self.columns.iter().any(|c| c.is_empty()) {
            return None;
        }
        if self.tops.iter().any(|&t| t < 0) {
            return None;
        }
        let tops: Vec<usize> = self.tops.iter().map(|&t| t as usize).collect();
        let bottoms: Vec<usize> = (0..self.num_columns()).map(|j| self.bottom(j) as usize).collect();
        // Column depths of the inner and outer shape must both be weakly
        // decreasing left to right for the conjugates to be partitions.
        if tops.windows(2).any(|w| w[0] < w[1]) || bottoms.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        let inner = Partition::new(tops).conjugate();
        let outer = Partition::new(bottoms).conjugate();
        Some((outer, inner))
    }

    /// True if the configuration is a straight-shape tableau: a legal skew
    /// shape with empty inner part.
    pub fn is_straight(&self) -> bool {
        matches!(self.shape(), Some((_, inner)) if inner.is_empty())
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.columns.is_empty() {
            return write!(f, "(empty)");
        }
        let lo = *self.tops.iter().min().unwrap();
        let hi = (0..self.num_columns()).map(|j| self.bottom(j)).max().unwrap();
        let width = self
            .columns
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for row in lo..hi {
            if row > lo {
                writeln!(f)?;
            }
            for col in 0..self.num_columns() {
                if col > 0 {
                    write!(f, " ")?;
                }
                match self.entry(row, col) {
                    Some(x) => write!(f, "{:>width$}", x.to_string())?,
                    None => write!(f, "{:>width$}", ".")?,
                }
            }
        }
        Ok(())
    }
}

/// Parses a column from a comma/space separated list of letters
/// (top to bottom).  Convenience for tests and the CLI.
pub fn parse_column(s: &str) -> Result<Column, crate::alphabet::ParseError> {
    crate::alphabet::parse_letters(s)
}

/// All valid columns of the given height over an alphabet, in lexicographic
/// order of letter positions.
pub fn enumerate_columns(alph: &GradedAlphabet, height: usize) -> Vec<Column> {
    let mut out = Vec::new();
    let mut stack: Column = Vec::with_capacity(height);
    fn extend(alph: &GradedAlphabet, height: usize, stack: &mut Column, out: &mut Vec<Column>) {
        if stack.len() == height {
            out.push(stack.clone());
            return;
        }
        for &x in alph.letters() {
            if stack.last().is_none_or(|&last| alph.col_pair_ok(last, x)) {
                stack.push(x);
                extend(alph, height, stack, out);
                stack.pop();
            }
        }
    }
    extend(alph, height, &mut stack, &mut out);
    out
}

/// All semistandard tableaux of the straight shape `mu` (given by its rows)
/// over an alphabet, as top-aligned column lists, in lexicographic order of
/// letter positions column by column.
pub fn enumerate_sst(alph: &GradedAlphabet, mu: &Partition) -> Vec<Vec<Column>> {
    let heights = mu.conjugate();
    let per_column: Vec<Vec<Column>> = (0..heights.length())
        .map(|j| enumerate_columns(alph, heights[j]))
        .collect();
    let mut out = Vec::new();
    let mut partial: Vec<Column> = Vec::new();
    fn rows_ok(alph: &GradedAlphabet, left: &[Letter], right: &[Letter]) -> bool {
        right
            .iter()
            .enumerate()
            .all(|(s, &x)| alph.row_pair_ok(left[s], x))
    }
    fn extend(
        alph: &GradedAlphabet,
        per_column: &[Vec<Column>],
        partial: &mut Vec<Column>,
        out: &mut Vec<Vec<Column>>,
    ) {
        if partial.len() == per_column.len() {
            out.push(partial.clone());
            return;
        }
        let j = partial.len();
        for col in &per_column[j] {
            if j == 0 || rows_ok(alph, &partial[j - 1], col) {
                partial.push(col.clone());
                extend(alph, per_column, partial, out);
                partial.pop();
            }
        }
    }
    extend(alph, &per_column, &mut partial, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::GradedAlphabet;

    fn col(s: &str) -> Column {
        parse_column(s).unwrap()
    }

    #[test]
    fn reading_word_goes_right_to_left() {
        // Columns of a straight symplectic tableau with rows
        // (1 1 -5)(5 -5 -4)(-5 -3)(-4).
        let t = SkewTableau::ceil(
            vec![col("1 5 -5 -4"), col("1 -5 -3"), col("-5 -4")],
            &[0, 0, 0],
        );
        let word: Vec<String> = t.reading_word().iter().map(|x| x.to_string()).collect();
        assert_eq!(word.join(" "), "-5 -4 1 -5 -3 1 5 -5 -4");
    }

    #[test]
    fn floor_alignment_raises_columns() {
        // Two columns, the right one raised by 1: they share two rows.
        let t = SkewTableau::floor(vec![col("1 2 1' 3'"), col("1 3 2'")], &[0, 1]);
        assert_eq!(t.tops(), &[0, 0]);
        assert_eq!(t.entry(0, 1), Some("1".parse().unwrap()));
        assert_eq!(t.entry(3, 1), None);
        assert_eq!(t.entry(3, 0), Some("3'".parse().unwrap()));
    }

    #[test]
    fn semistandard_mixed_example() {
        let a = GradedAlphabet::mixed(4, 3);
        let good = SkewTableau::floor(vec![col("1 2 1' 3'"), col("1 3 2'")], &[0, 1]);
        assert!(good.is_semistandard(&a));
        // Lowering the right column puts 3 next to 2 in a row, which fails.
        let bad = SkewTableau::floor(vec![col("1 2 1' 3'"), col("1 3 2'")], &[0, 0]);
        assert!(!bad.is_semistandard(&a));
    }

    #[test]
    fn row_violation_detected_between_raised_columns() {
        let a = GradedAlphabet::mixed(4, 3);
        // left [4 2'] raised 1, right [1 2 1'] raised 1: row pair (4, 2) fails.
        let t = SkewTableau::floor(vec![col("4 2'"), col("1 2 1'")], &[1, 1]);
        assert!(!t.is_semistandard(&a));
        // with the right column raised 2 the overlap pairs become legal.
        let t2 = SkewTableau::floor(vec![col("4 2'"), col("1 2 1'")], &[1, 2]);
        assert!(t2.is_semistandard(&a));
    }

    #[test]
    fn degree_one_repeats_in_column_but_not_row() {
        let a = GradedAlphabet::mixed(2, 2);
        assert!(column_is_valid(&a, &col("1 2 1' 1' 2'")));
        assert!(!column_is_valid(&a, &col("1 1")));
        let t = SkewTableau::ceil(vec![col("1'"), col("1'")], &[0, 0]);
        assert!(!t.is_semistandard(&a));
    }

    #[test]
    fn shape_of_straight_and_skew_configurations() {
        let t = SkewTableau::ceil(vec![col("1 5 -5 -4"), col("1 -5 -3"), col("-5 -4")], &[0, 0, 0]);
        let (outer, inner) = t.shape().unwrap();
        assert_eq!(outer, Partition::from([3, 3, 2, 1]));
        assert!(inner.is_empty());
        assert!(t.is_straight());

        let s = SkewTableau::ceil(vec![col("1 2"), col("3")], &[1, 0]);
        let (outer, inner) = s.shape().unwrap();
        assert_eq!(outer, Partition::from([2, 1, 1]));
        assert_eq!(inner, Partition::from([1]));
        assert!(!s.is_straight());

        // Columns with increasing tops do not form a skew shape.
        let bad = SkewTableau::ceil(vec![col("1"), col("2")], &[0, 1]);
        assert!(bad.shape().is_none());
    }

    #[test]
    fn display_draws_a_grid() {
        let t = SkewTableau::ceil(vec![col("1 2"), col("3")], &[1, 0]);
        assert_eq!(t.to_string(), ". 3\n1 .\n2 .");
    }

    #[test]
    fn enumerating_straight_tableaux() {
        let two = GradedAlphabet::standard(2);
        assert_eq!(enumerate_sst(&two, &Partition::from([1])).len(), 2);
        // (2,1) over {1,2}: rows 11/2 and 12/2
        let hook = enumerate_sst(&two, &Partition::from([2, 1]));
        assert_eq!(
            hook,
            vec![
                vec![col("1 2"), col("1")],
                vec![col("1 2"), col("2")],
            ]
        );
        // a primed letter repeats down a column but not along a row
        let p = GradedAlphabet::primed(1);
        assert!(enumerate_sst(&p, &Partition::from([2])).is_empty());
        assert_eq!(enumerate_sst(&p, &Partition::from([1, 1])).len(), 1);
        // every output really is semistandard
        let a = GradedAlphabet::mixed(1, 1);
        for t in enumerate_sst(&a, &Partition::from([2, 2])) {
            assert!(SkewTableau::ceil(t, &[0, 0]).is_semistandard(&a));
        }
    }
}
