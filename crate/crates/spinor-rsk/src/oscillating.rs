//! Oscillating tableaux with vertical segments and their King encoding.
//!
//! An oscillating tableau of rank `n` is a sequence of partitions with at
//! most `n` rows that starts implicitly at the empty shape and moves by one
//! box at a time.  The steps are grouped into segments; within a segment
//! (counting the step that enters it) all additions come first, in rows that
//! strictly increase, followed by all removals, in rows that strictly
//! decrease.  A segment may be empty, in which case the shape does not move.
//!
//! Each segment is recorded faithfully by a column over the symplectic
//! alphabet `1 < ... < n < -n < ... < -1`: letter `a` for a box added in row
//! `a`, letter `-a` for a box removed from row `a`.  Listing the additions
//! and removals in their canonical order sorts the column, so segments of
//! oscillating tableaux correspond to strictly increasing symplectic
//! columns, and the column operators of [`Symplectic`] equip every segment
//! with the structure of a string: [`Oscillating::segment_e`] cancels an
//! addition/removal pair, [`Oscillating::segment_f`] introduces one, and
//! both fix the shapes outside the segment.
//!
//! A tableau splits into its fully raised form together with the count of
//! lowering moves per segment ([`Oscillating::split`]); the fully raised
//! forms are exactly the tableaux whose segment columns are admissible.
//! Shifting the rank up renames every letter `k` to `k + 1` and opens each
//! segment with a new box in row 1 ([`Oscillating::shift_up`]); tableaux
//! that differ by rank shifts carry the same combinatorial content, exposed
//! by [`osc_to_king`] as a King tableau: a semistandard tableau over the
//! alphabet `1 < -1 < 2 < -2 < ...` whose row `i` entries are at least `i`.

use std::collections::BTreeSet;
use std::fmt;

use crate::alphabet::{GradedAlphabet, Letter};
use crate::kn::Symplectic;
use crate::partition::Partition;
use crate::tableau::Column;

/// An oscillating tableau: partitions with at most `n` rows, starting from
/// the empty shape and grouped into segments.  `segments[i]` lists the
/// shapes after each step of segment `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Oscillating {
    n: i32,
    segments: Vec<Vec<Partition>>,
}

impl Oscillating {
    /// Builds an oscillating tableau, checking every step: shapes move by
    /// one box, stay within `n` rows, and each segment performs its
    /// additions first in increasing rows, then its removals in decreasing
    /// rows.
    pub fn new(n: i32, segments: Vec<Vec<Partition>>) -> Self {
        assert!(n >= 0, "rank must be nonnegative");
        let mut prev = Partition::empty();
        for (i, seg) in segments.iter().enumerate() {
            let mut removing = false;
            let mut last_add = None;
            let mut last_del = None;
            for q in seg {
                assert!(
                    q.length() <= n as usize,
                    "segment {}: shape {q} has more than {n} rows",
                    i + 1
                );
                if let Some(r) = q.one_box_larger_than(&prev) {
                    assert!(!removing, "segment {}: addition after a removal", i + 1);
                    assert!(
                        last_add.is_none_or(|s| s < r),
                        "segment {}: added rows must increase",
                        i + 1
                    );
                    last_add = Some(r);
                } else if let Some(r) = prev.one_box_larger_than(q) {
                    removing = true;
                    assert!(
                        last_del.is_none_or(|s| s > r),
                        "segment {}: removed rows must decrease",
                        i + 1
                    );
                    last_del = Some(r);
                } else {
                    panic!(
                        "segment {}: {prev} to {q} is not a one-box step",
                        i + 1
                    );
                }
                prev = q.clone();
            }
        }
        Oscillating { n, segments }
    }

    /// The rank: shapes live within `n` rows and letters within `1..=n`.
    pub fn n(&self) -> i32 {
        self.n
    }

    /// The number of segments.
    pub fn ell(&self) -> usize {
        self.segments.len()
    }

    /// The segments, each a list of shapes.
    pub fn segments(&self) -> &[Vec<Partition>] {
        &self.segments
    }

    /// The final shape.
    pub fn end_shape(&self) -> Partition {
        self.segments.iter().flatten().next_back().cloned().unwrap_or_default()
    }

    /// The shape in force when segment `i` begins.
    pub fn start_of(&self, i: usize) -> Partition {
        self.segments[..i].iter().flatten().next_back().cloned().unwrap_or_default()
    }

    /// The column recording segment `i`: letter `a` for each box added in
    /// row `a`, then `-a` for each box removed from row `a`, in step order,
    /// which coincides with the symplectic ordering of the letters.
    pub fn segment_column(&self, i: usize) -> Column {
        let mut prev = self.start_of(i);
        let mut col = Vec::with_capacity(self.segments[i].len());
        for q in &self.segments[i] {
            if let Some(r) = q.one_box_larger_than(&prev) {
                col.push(Letter::Num(r as i32 + 1));
            } else {
                let r = prev.one_box_larger_than(q).expect("steps validated on construction");
                col.push(Letter::Bar(r as i32 + 1));
            }
            prev = q.clone();
        }
        col
    }

    /// Rebuilds the tableau whose segments are recorded by the given
    /// columns, panicking if any column does not describe a valid segment.
    pub fn from_columns(n: i32, cols: &[Column]) -> Self {
        let mut prev = Partition::empty();
        let mut segments = Vec::with_capacity(cols.len());
        for col in cols {
            let seg = Self::walk(&prev, col, n);
            if let Some(last) = seg.last() {
                prev = last.clone();
            }
            segments.push(seg);
        }
        Oscillating::new(n, segments)
    }

    /// Applies the letters of one segment column to a starting shape.
    fn walk(start: &Partition, col: &[Letter], n: i32) -> Vec<Partition> {
        let mut cur = start.clone();
        let mut out = Vec::with_capacity(col.len());
        for &x in col {
            cur = match x {
                Letter::Num(k) if (1..=n).contains(&k) => cur.with_box_added(k as usize - 1),
                Letter::Bar(k) if (1..=n).contains(&k) => cur.with_box_removed(k as usize - 1),
                _ => panic!("letter {x} outside the rank-{n} alphabet"),
            };
            out.push(cur.clone());
        }
        out
    }

    /// Replaces segment `i` by the segment recorded by `col`, revalidating
    /// the whole tableau.
    fn with_segment_column(&self, i: usize, col: &[Letter]) -> Oscillating {
        let mut segments = self.segments.clone();
        segments[i] = Self::walk(&self.start_of(i), col, self.n);
        Oscillating::new(self.n, segments)
    }

    /// How many raising moves apply to segment `i`; zero exactly when the
    /// segment column is admissible.
    pub fn segment_epsilon(&self, i: usize) -> usize {
        Symplectic::new(self.n).column_epsilon(&self.segment_column(i))
    }

    /// How many lowering moves apply to segment `i`.
    pub fn segment_phi(&self, i: usize) -> usize {
        let sym = Symplectic::new(self.n);
        let mut cur = self.segment_column(i);
        let mut count = 0;
        while let Some(next) = sym.column_f(&cur) {
            cur = next;
            count += 1;
        }
        count
    }

    /// The raising counts of all segments.
    pub fn epsilons(&self) -> Vec<usize> {
        (0..self.ell()).map(|i| self.segment_epsilon(i)).collect()
    }

    /// The string weight of each segment: raising plus lowering count, an
    /// invariant of the segment operators.
    pub fn weight(&self) -> Vec<usize> {
        (0..self.ell()).map(|i| self.segment_epsilon(i) + self.segment_phi(i)).collect()
    }

    /// Whether every segment column is admissible.
    pub fn is_admissible(&self) -> bool {
        (0..self.ell()).all(|i| self.segment_epsilon(i) == 0)
    }

    /// The raising operator on segment `i`: cancels one addition/removal
    /// pair of the segment, fixing its starting and ending shapes.
    pub fn segment_e(&self, i: usize) -> Option<Oscillating> {
        let col = Symplectic::new(self.n).column_e(&self.segment_column(i))?;
        Some(self.with_segment_column(i, &col))
    }

    /// The lowering operator on segment `i`, inverse to
    /// [`Oscillating::segment_e`].
    pub fn segment_f(&self, i: usize) -> Option<Oscillating> {
        let col = Symplectic::new(self.n).column_f(&self.segment_column(i))?;
        Some(self.with_segment_column(i, &col))
    }

    /// Fully raises every segment, returning the admissible tableau and the
    /// number of raising moves each segment absorbed.
    pub fn split(&self) -> (Oscillating, Vec<usize>) {
        let mut cur = self.clone();
        let mut eps = Vec::with_capacity(self.ell());
        for i in 0..self.ell() {
            let mut count = 0;
            while let Some(next) = cur.segment_e(i) {
                cur = next;
                count += 1;
            }
            eps.push(count);
        }
        (cur, eps)
    }

    /// Rebuilds a tableau from its admissible part by applying `eps[i]`
    /// lowering moves to segment `i`; inverse to [`Oscillating::split`].
    pub fn join(admissible: &Oscillating, eps: &[usize]) -> Oscillating {
        assert_eq!(admissible.ell(), eps.len(), "one lowering count per segment");
        let mut cur = admissible.clone();
        for (i, &count) in eps.iter().enumerate() {
            for _ in 0..count {
                cur = cur.segment_f(i).expect("lowering count within the segment string");
            }
        }
        cur
    }

    /// Embeds the tableau one rank higher: every letter `k` becomes
    /// `k + 1` and every segment opens with a new box in row 1.
    pub fn shift_up(&self) -> Oscillating {
        let cols: Vec<Column> = (0..self.ell())
            .map(|i| {
                let mut col = vec![Letter::Num(1)];
                col.extend(self.segment_column(i).iter().map(|x| match x {
                    Letter::Num(k) => Letter::Num(k + 1),
                    Letter::Bar(k) => Letter::Bar(k + 1),
                    _ => unreachable!("segment letters are numeric or barred"),
                }));
                col
            })
            .collect();
        Self::from_columns(self.n + 1, &cols)
    }

    /// Undoes [`Oscillating::shift_up`] when possible: every segment must
    /// add a box in row 1 and keep it.
    pub fn shift_down(&self) -> Option<Oscillating> {
        if self.n < 1 {
            return None;
        }
        let mut cols = Vec::with_capacity(self.ell());
        for i in 0..self.ell() {
            let col = self.segment_column(i);
            if col.first() != Some(&Letter::Num(1)) || col.contains(&Letter::Bar(1)) {
                return None;
            }
            cols.push(
                col[1..]
                    .iter()
                    .map(|x| match x {
                        Letter::Num(k) => Letter::Num(k - 1),
                        Letter::Bar(k) => Letter::Bar(k - 1),
                        _ => unreachable!("segment letters are numeric or barred"),
                    })
                    .collect(),
            );
        }
        Some(Self::from_columns(self.n - 1, &cols))
    }

    /// The lowest-rank tableau reachable by [`Oscillating::shift_down`],
    /// the canonical representative among all rank shifts.
    pub fn minimal_form(&self) -> Oscillating {
        let mut cur = self.clone();
        while let Some(next) = cur.shift_down() {
            cur = next;
        }
        cur
    }
}

impl fmt::Display for Oscillating {
    /// Segments separated by colons, shapes by spaces; `-` marks an empty
    /// segment.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self
            .segments
            .iter()
            .map(|seg| {
                if seg.is_empty() {
                    "-".to_string()
                } else {
                    seg.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" : "))
    }
}

// ----------------------------------------------------------------------
// King tableaux
// ----------------------------------------------------------------------

/// A King tableau: a semistandard tableau over the interleaved alphabet
/// `1 < -1 < 2 < -2 < ... < l < -l` whose row `i` entries are at least `i`.
/// Rows are stored top to bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KingTableau {
    ell: i32,
    rows: Vec<Vec<Letter>>,
}

impl KingTableau {
    /// Builds a King tableau over the interleaved alphabet of rank `ell`,
    /// checking the shape, the semistandard conditions, and the row bound.
    pub fn new(ell: i32, rows: Vec<Vec<Letter>>) -> Self {
        let alph = GradedAlphabet::interleaved(ell);
        assert!(
            rows.windows(2).all(|w| w[0].len() >= w[1].len()),
            "row lengths must weakly decrease"
        );
        assert!(rows.iter().all(|row| !row.is_empty()), "rows must be nonempty");
        for r in 0..rows.len() {
            for c in 0..rows[r].len() {
                let x = rows[r][c];
                assert!(alph.contains(x), "letter {x} outside the rank-{ell} alphabet");
                assert!(
                    !alph.lt(x, Letter::Num(r as i32 + 1)),
                    "row {} entries must be at least {}",
                    r + 1,
                    r + 1
                );
                if c > 0 {
                    assert!(alph.le(rows[r][c - 1], x), "rows must weakly increase");
                }
                if r > 0 {
                    assert!(alph.lt(rows[r - 1][c], x), "columns must strictly increase");
                }
            }
        }
        KingTableau { ell, rows }
    }

    /// The alphabet rank.
    pub fn ell(&self) -> i32 {
        self.ell
    }

    /// The rows, top to bottom.
    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    /// The shape.
    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
    }

    /// The net multiplicity of each value: occurrences of `i` minus
    /// occurrences of `-i`.
    pub fn weight(&self) -> Vec<i64> {
        let mut out = vec![0i64; self.ell as usize];
        for row in &self.rows {
            for &x in row {
                match x {
                    Letter::Num(k) => out[k as usize - 1] += 1,
                    Letter::Bar(k) => out[k as usize - 1] -= 1,
                    _ => unreachable!("King letters are numeric or barred"),
                }
            }
        }
        out
    }
}

impl fmt::Display for KingTableau {
    /// Rows on separate lines, letters separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// The final shape of every rank-`n` oscillating tableau encoding a King
/// tableau of shape `lambda` with `ell` segments: the conjugate of
/// `(n - lambda_ell, ..., n - lambda_1)`.
pub fn king_end_shape(n: i32, lambda: &Partition, ell: usize) -> Partition {
    assert!(lambda.length() <= ell, "shape {lambda} has more than {ell} rows");
    assert!(lambda.first() <= n as usize, "shape {lambda} is wider than {n}");
    let parts: Vec<usize> = (0..ell).rev().map(|i| n as usize - lambda[i]).collect();
    Partition::new(parts).conjugate()
}

/// Recovers the King shape from the final shape of a rank-`n` oscillating
/// tableau with `ell` segments; inverse to [`king_end_shape`].
fn king_shape(n: i32, end: &Partition, ell: usize) -> Partition {
    let heights = end.conjugate();
    assert!(heights.length() <= ell, "final shape {end} is wider than {ell}");
    Partition::new((1..=ell).map(|i| n as usize - heights[ell - i]).collect())
}

/// Encodes an oscillating tableau as a King tableau.  Column `j` of the
/// result, for `j = n` down to `1` left to right, holds the letter `i` for
/// every segment that never adds a box in row `j` and the letter `-i` for
/// every segment that removes one.
pub fn osc_to_king(q: &Oscillating) -> KingTableau {
    let n = q.n();
    let ell = q.ell() as i32;
    let steps: Vec<(BTreeSet<i32>, BTreeSet<i32>)> = (0..q.ell())
        .map(|i| {
            let mut adds = BTreeSet::new();
            let mut dels = BTreeSet::new();
            for x in q.segment_column(i) {
                match x {
                    Letter::Num(k) => adds.insert(k),
                    Letter::Bar(k) => dels.insert(k),
                    _ => unreachable!("segment letters are numeric or barred"),
                };
            }
            (adds, dels)
        })
        .collect();
    let mut columns: Vec<Vec<Letter>> = Vec::new();
    for j in (1..=n).rev() {
        let mut col = Vec::new();
        for (idx, (adds, dels)) in steps.iter().enumerate() {
            let i = idx as i32 + 1;
            if !adds.contains(&j) {
                col.push(Letter::Num(i));
            }
            if dels.contains(&j) {
                col.push(Letter::Bar(i));
            }
        }
        col.sort_by_key(|x| match *x {
            Letter::Num(k) => (k, 0),
            Letter::Bar(k) => (k, 1),
            _ => unreachable!("King letters are numeric or barred"),
        });
        columns.push(col);
    }
    while columns.last().is_some_and(Vec::is_empty) {
        columns.pop();
    }
    assert!(
        columns.windows(2).all(|w| w[0].len() >= w[1].len()),
        "column heights must weakly decrease"
    );
    let height = columns.first().map_or(0, Vec::len);
    let rows: Vec<Vec<Letter>> = (0..height)
        .map(|r| columns.iter().filter_map(|c| c.get(r).copied()).collect())
        .collect();
    let king = KingTableau::new(ell, rows);
    assert_eq!(
        king.shape(),
        king_shape(n, &q.end_shape(), q.ell()),
        "King shape matches the final shape"
    );
    king
}

/// Decodes a King tableau back into the rank-`n` oscillating tableau;
/// inverse to [`osc_to_king`].
pub fn king_to_osc(king: &KingTableau, n: i32) -> Oscillating {
    assert!(king.shape().first() <= n as usize, "King tableau wider than the rank");
    let ell = king.ell() as usize;
    let mut adds = vec![BTreeSet::new(); ell];
    let mut dels = vec![BTreeSet::new(); ell];
    for j in 1..=n {
        let p = (n - j) as usize;
        let col: Vec<Letter> =
            king.rows().iter().filter_map(|row| row.get(p).copied()).collect();
        for i in 1..=ell as i32 {
            if !col.contains(&Letter::Num(i)) {
                adds[i as usize - 1].insert(j);
            }
            if col.contains(&Letter::Bar(i)) {
                dels[i as usize - 1].insert(j);
            }
        }
    }
    let cols: Vec<Column> = (0..ell)
        .map(|i| {
            let mut col: Column = adds[i].iter().map(|&j| Letter::Num(j)).collect();
            col.extend(dels[i].iter().rev().map(|&j| Letter::Bar(j)));
            col
        })
        .collect();
    Oscillating::from_columns(n, &cols)
}

/// All King tableaux of the given shape over the interleaved alphabet of
/// rank `ell`, in lexicographic order of their row readings.
pub fn enumerate_king(lambda: &Partition, ell: i32) -> Vec<KingTableau> {
    let alph = GradedAlphabet::interleaved(ell);
    let letters: Vec<Letter> = alph.letters().to_vec();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); lambda.length()];
    let mut out = Vec::new();
    fill_king(lambda, &letters, &mut rows, &mut out, ell);
    out
}

/// Extends a partial row-by-row filling with every allowed letter rank.
fn fill_king(
    lambda: &Partition,
    letters: &[Letter],
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<KingTableau>,
    ell: i32,
) {
    let Some(r) = (0..lambda.length()).find(|&r| rows[r].len() < lambda[r]) else {
        let filled = rows
            .iter()
            .map(|row| row.iter().map(|&k| letters[k]).collect())
            .collect();
        out.push(KingTableau::new(ell, filled));
        return;
    };
    let c = rows[r].len();
    let mut lo = 2 * r;
    if c > 0 {
        lo = lo.max(rows[r][c - 1]);
    }
    if r > 0 {
        lo = lo.max(rows[r - 1][c] + 1);
    }
    for k in lo..letters.len() {
        rows[r].push(k);
        fill_king(lambda, letters, rows, out, ell);
        rows[r].pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::parse_letters;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn seg(shapes: &[&[usize]]) -> Vec<Partition> {
        shapes.iter().map(|s| p(s)).collect()
    }

    fn col(s: &str) -> Column {
        parse_letters(s).unwrap()
    }

    /// The running three-segment example of rank 5.
    fn worked() -> Oscillating {
        Oscillating::new(
            5,
            vec![
                seg(&[
                    &[1],
                    &[1, 1],
                    &[1, 1, 1],
                    &[1, 1, 1, 1],
                    &[1, 1, 1, 1, 1],
                    &[1, 1, 1, 1],
                    &[1, 1, 1],
                ]),
                seg(&[&[2, 1, 1], &[2, 2, 1], &[2, 2, 1, 1], &[2, 2, 1, 1, 1]]),
                seg(&[
                    &[3, 2, 1, 1, 1],
                    &[3, 3, 1, 1, 1],
                    &[3, 3, 2, 1, 1],
                    &[3, 3, 2, 2, 1],
                    &[3, 3, 2, 2],
                    &[3, 3, 2, 1],
                ]),
            ],
        )
    }

    /// The fully raised form of the worked example.
    fn worked_admissible() -> Oscillating {
        Oscillating::new(
            5,
            vec![
                seg(&[&[1], &[1, 1], &[1, 1, 1]]),
                seg(&[&[2, 1, 1], &[2, 2, 1], &[2, 2, 1, 1], &[2, 2, 1, 1, 1]]),
                seg(&[
                    &[3, 2, 1, 1, 1],
                    &[3, 3, 1, 1, 1],
                    &[3, 3, 2, 1, 1],
                    &[3, 3, 2, 1],
                ]),
            ],
        )
    }

    #[test]
    fn the_worked_oscillating_tableau() {
        let q = worked();
        assert_eq!(q.ell(), 3);
        assert_eq!(q.end_shape(), p(&[3, 3, 2, 1]));
        assert_eq!(q.end_shape(), king_end_shape(5, &p(&[3, 2, 1]), 3));
        assert_eq!(q.segment_column(0), col("1 2 3 4 5 -5 -4"));
        assert_eq!(q.segment_column(1), col("1 2 4 5"));
        assert_eq!(q.segment_column(2), col("1 2 3 4 -5 -4"));
        assert_eq!(q.epsilons(), vec![2, 0, 1]);
        assert_eq!(
            (0..3).map(|i| q.segment_phi(i)).collect::<Vec<_>>(),
            vec![0, 1, 0]
        );
        assert_eq!(q.weight(), vec![2, 1, 1]);
        for i in 0..3 {
            let size = q.segments()[i].len();
            let a = q.weight()[i];
            assert_eq!(size, 5 - a + 2 * q.segment_epsilon(i));
        }
        assert_eq!(Oscillating::from_columns(5, &[
            col("1 2 3 4 5 -5 -4"),
            col("1 2 4 5"),
            col("1 2 3 4 -5 -4"),
        ]), q);
    }

    #[test]
    fn splitting_off_the_lowering_moves() {
        let q = worked();
        let (admissible, eps) = q.split();
        assert_eq!(eps, vec![2, 0, 1]);
        assert_eq!(admissible, worked_admissible());
        assert!(admissible.is_admissible());
        assert_eq!(
            (0..3).map(|i| admissible.segment_phi(i)).collect::<Vec<_>>(),
            vec![2, 1, 1]
        );
        assert_eq!(admissible.weight(), q.weight());
        assert_eq!(Oscillating::join(&admissible, &eps), q);
    }

    #[test]
    fn raising_and_lowering_are_inverse() {
        let q = worked();
        for i in 0..q.ell() {
            if let Some(raised) = q.segment_e(i) {
                assert_eq!(raised.segment_f(i).unwrap(), q);
                assert_eq!(raised.weight(), q.weight());
                assert_eq!(raised.segment_epsilon(i), q.segment_epsilon(i) - 1);
                assert_eq!(raised.start_of(i), q.start_of(i));
                assert_eq!(raised.start_of(i + 1), q.start_of(i + 1));
            }
            if let Some(lowered) = q.segment_f(i) {
                assert_eq!(lowered.segment_e(i).unwrap(), q);
                assert_eq!(lowered.segment_phi(i), q.segment_phi(i) - 1);
            }
        }
    }

    #[test]
    fn growing_the_rank_by_one() {
        let small = Oscillating::new(
            5,
            vec![
                seg(&[&[1], &[1, 1], &[1, 1, 1]]),
                seg(&[&[2, 1, 1], &[2, 2, 1], &[2, 2, 1, 1], &[2, 2, 1, 1, 1]]),
            ],
        );
        let big = Oscillating::new(
            6,
            vec![
                seg(&[&[1], &[1, 1], &[1, 1, 1], &[1, 1, 1, 1]]),
                seg(&[
                    &[2, 1, 1, 1],
                    &[2, 2, 1, 1],
                    &[2, 2, 2, 1],
                    &[2, 2, 2, 1, 1],
                    &[2, 2, 2, 1, 1, 1],
                ]),
            ],
        );
        assert_eq!(small.shift_up(), big);
        assert_eq!(big.shift_down().unwrap(), small);
        assert_eq!(small.shift_down().unwrap().shift_up(), small);

        let q = worked();
        assert_eq!(q.shift_up().epsilons(), q.epsilons());
        assert_eq!(q.shift_up().shift_down().unwrap(), q);
        assert_eq!(q.shift_up().minimal_form(), q.minimal_form());
    }

    #[test]
    fn the_king_tableau_of_the_worked_example() {
        let q = worked();
        let king = osc_to_king(&q);
        assert_eq!(
            king.rows(),
            &[
                col("-1 -1 2"),
                col("3 -3"),
                col("-3"),
            ]
        );
        assert_eq!(king.shape(), p(&[3, 2, 1]));
        assert_eq!(king.ell(), 3);
        assert_eq!(king.weight(), vec![-2, 1, -1]);
        assert_eq!(king.to_string(), "-1 -1 2\n3 -3\n-3");
        assert_eq!(king_to_osc(&king, 5), q);
        assert_eq!(osc_to_king(&q.shift_up()), king);
    }

    #[test]
    fn one_cell_tableaux_in_the_smallest_rank() {
        let empty_segment = Oscillating::new(1, vec![vec![]]);
        let add_and_remove = Oscillating::new(1, vec![seg(&[&[1], &[]])]);
        assert_eq!(empty_segment.end_shape(), Partition::empty());
        assert_eq!(empty_segment.end_shape(), king_end_shape(1, &p(&[1]), 1));
        assert_eq!(add_and_remove.end_shape(), king_end_shape(1, &p(&[1]), 1));

        assert_eq!(osc_to_king(&empty_segment).rows(), &[col("1")]);
        assert_eq!(osc_to_king(&add_and_remove).rows(), &[col("-1")]);
        for q in [&empty_segment, &add_and_remove] {
            assert_eq!(king_to_osc(&osc_to_king(q), 1), *q);
        }

        assert_eq!(
            empty_segment.shift_up(),
            Oscillating::new(2, vec![seg(&[&[1]])])
        );
        assert_eq!(empty_segment.shift_up().minimal_form(), empty_segment);
        assert_eq!(empty_segment.segment_epsilon(0), 0);
        assert_eq!(empty_segment.segment_phi(0), 1);
    }

    #[test]
    fn enumerating_king_tableaux() {
        assert_eq!(enumerate_king(&p(&[1]), 1).len(), 2);
        assert_eq!(enumerate_king(&p(&[1]), 2).len(), 4);
        assert_eq!(enumerate_king(&p(&[1, 1]), 2).len(), 5);
        assert_eq!(enumerate_king(&p(&[2]), 2).len(), 10);
        assert_eq!(enumerate_king(&p(&[2, 1]), 2).len(), 16);
        assert_eq!(enumerate_king(&p(&[2, 2]), 2).len(), 14);
        assert_eq!(enumerate_king(&Partition::empty(), 2).len(), 1);
    }

    #[test]
    fn every_small_king_tableau_round_trips() {
        let shapes = [
            Partition::empty(),
            p(&[1]),
            p(&[2]),
            p(&[1, 1]),
            p(&[2, 1]),
            p(&[2, 2]),
        ];
        let mut seen = 0;
        for lambda in &shapes {
            for king in enumerate_king(lambda, 2) {
                let q = king_to_osc(&king, 2);
                assert_eq!(osc_to_king(&q), king);
                assert_eq!(q.end_shape(), king_end_shape(2, lambda, 2));
                let (admissible, eps) = q.split();
                assert!(admissible.is_admissible());
                assert_eq!(Oscillating::join(&admissible, &eps), q);
                assert_eq!(king_to_osc(&king, 3), q.shift_up());
                seen += 1;
            }
        }
        assert_eq!(seen, 50);
    }
}
