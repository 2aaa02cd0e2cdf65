//! Crystal operators on pairs and tuples of columns.
//!
//! A pair of columns `(left, right)` over a graded alphabet normalizes to a
//! unique two-column configuration: the right column is placed at the top and
//! the left column is pushed down as little as possible while keeping every
//! shared row semistandard ([`pair_normalize`]).  Writing `a + c` and `b + c`
//! for the two heights, where `c` is the overlap, the configuration has shape
//! `(2^(b+c), 1^a) / (1^b)`.
//!
//! The raising operator [`crystal_e`] moves one letter from the left column
//! to the right column by an inward jeu-de-taquin slide, taking the shape to
//! `(2^(b+c+1), 1^(a-1)) / (1^(b+1))`; the lowering operator [`crystal_f`] is
//! its inverse.  On a tuple of columns `(U_r, ..., U_1)` the operator `E_i`
//! acts on the neighboring pair `(U_(i+1), U_i)`, and similarly for `F_i`.
//! These operators realize a crystal structure for which the multiplicity
//! word of the tuple ([`signature_word`]) gives an equivalent description via
//! the usual bracketing rule; [`word_e`] and [`word_f`] implement that
//! description independently as a cross-check.

use crate::alphabet::{Degree, GradedAlphabet, Letter};
use crate::tableau::Column;

/// The normalized two-column configuration of a pair of columns.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PairShape {
    /// Cells of the left column sticking out below the overlap.
    pub a: usize,
    /// Cells of the right column sticking out above the overlap.
    pub b: usize,
    /// Number of shared rows.
    pub c: usize,
}

/// Computes the largest overlap `c` for which the two-column configuration
/// with the left column starting `|right| - c` rows below the top is
/// semistandard on every shared row.  `c = 0` is always valid, so the result
/// is total.
pub fn pair_normalize(alph: &GradedAlphabet, left: &[Letter], right: &[Letter]) -> PairShape {
    let max = left.len().min(right.len());
    for c in (0..=max).rev() {
        let b = right.len() - c;
        if (0..c).all(|i| alph.row_pair_ok(left[i], right[b + i])) {
            return PairShape { a: left.len() - c, b, c };
        }
    }
    unreachable!("c = 0 is always semistandard");
}

/// Which of the two columns a sliding hole currently occupies.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Side {
    Left,
    Right,
}

/// A mutable two-column grid for the jeu-de-taquin slides.  Rows are ambient
/// (0 at the top); each column is a sparse map row -> letter.
struct Grid {
    left: Vec<Option<Letter>>,
    right: Vec<Option<Letter>>,
}

impl Grid {
    fn new(left: &[Letter], right: &[Letter], shape: PairShape) -> Self {
        let rows = shape.b + shape.c + shape.a + 1;
        let mut l = vec![None; rows + 1];
        let mut r = vec![None; rows + 1];
        for (i, &x) in left.iter().enumerate() {
            l[shape.b + i] = Some(x);
        }
        for (i, &x) in right.iter().enumerate() {
            r[i] = Some(x);
        }
        Grid { left: l, right: r }
    }

    fn get(&self, row: i32, side: Side) -> Option<Letter> {
        if row < 0 {
            return None;
        }
        let col = match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        };
        col.get(row as usize).copied().flatten()
    }

    fn take(&mut self, row: i32, side: Side) -> Letter {
        let col = match side {
            Side::Left => &mut self.left,
            Side::Right => &mut self.right,
        };
        col[row as usize].take().expect("cell occupied")
    }

    fn put(&mut self, row: i32, side: Side, x: Letter) {
        let col = match side {
            Side::Left => &mut self.left,
            Side::Right => &mut self.right,
        };
        assert!(col[row as usize].is_none(), "cell free");
        col[row as usize] = Some(x);
    }

    fn column(&self, side: Side) -> Column {
        let col = match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        };
        col.iter().flatten().copied().collect()
    }
}

/// The raising operator on a pair of columns: moves one letter from `left`
/// to `right` by an inward slide.  Returns `None` when `a = 0`.
///
/// The hole starts just below the bottom of the right column and moves up and
/// left; at each step the larger of the letter above and the letter to the
/// left slides into the hole, a tie of degree 0 sliding vertically and a tie
/// of degree 1 horizontally.  The hole always crosses into the left column
/// and surfaces at its top.
pub fn crystal_e(
    alph: &GradedAlphabet,
    left: &[Letter],
    right: &[Letter],
) -> Option<(Column, Column)> {
    let shape = pair_normalize(alph, left, right);
    if shape.a == 0 {
        return None;
    }
    let mut grid = Grid::new(left, right, shape);
    let mut row = (shape.b + shape.c) as i32;
    let mut side = Side::Right;
    loop {
        let above = grid.get(row - 1, side);
        let beside = if side == Side::Right { grid.get(row, Side::Left) } else { None };
        match (above, beside) {
            (None, None) => {
                assert!(side == Side::Left, "raising slide must cross into the left column");
                break;
            }
            (Some(_), None) => {
                let y = grid.take(row - 1, side);
                grid.put(row, side, y);
                row -= 1;
            }
            (None, Some(_)) => {
                let x = grid.take(row, Side::Left);
                grid.put(row, Side::Right, x);
                side = Side::Left;
            }
            (Some(y), Some(x)) => {
                let vertical = if alph.lt(x, y) {
                    true
                } else if alph.lt(y, x) {
                    false
                } else {
                    alph.degree(x) == Degree::Zero
                };
                if vertical {
                    let y = grid.take(row - 1, side);
                    grid.put(row, side, y);
                    row -= 1;
                } else {
                    let x = grid.take(row, Side::Left);
                    grid.put(row, Side::Right, x);
                    side = Side::Left;
                }
            }
        }
    }
    Some((grid.column(Side::Left), grid.column(Side::Right)))
}

/// The lowering operator on a pair of columns: moves one letter from `right`
/// to `left` by an outward slide.  Returns `None` when `b = 0`.
///
/// The hole starts just above the top of the left column and moves down and
/// right; at each step the smaller of the letter below and the letter to the
/// right slides into the hole, a tie of degree 0 sliding vertically and a tie
/// of degree 1 horizontally.
pub fn crystal_f(
    alph: &GradedAlphabet,
    left: &[Letter],
    right: &[Letter],
) -> Option<(Column, Column)> {
    let shape = pair_normalize(alph, left, right);
    if shape.b == 0 {
        return None;
    }
    let mut grid = Grid::new(left, right, shape);
    let mut row = shape.b as i32 - 1;
    let mut side = Side::Left;
    loop {
        let below = grid.get(row + 1, side);
        let beside = if side == Side::Left { grid.get(row, Side::Right) } else { None };
        match (below, beside) {
            (None, None) => {
                assert!(side == Side::Right, "lowering slide must cross into the right column");
                break;
            }
            (Some(_), None) => {
                let y = grid.take(row + 1, side);
                grid.put(row, side, y);
                row += 1;
            }
            (None, Some(_)) => {
                let x = grid.take(row, Side::Right);
                grid.put(row, Side::Left, x);
                side = Side::Right;
            }
            (Some(y), Some(x)) => {
                let vertical = if alph.lt(y, x) {
                    true
                } else if alph.lt(x, y) {
                    false
                } else {
                    alph.degree(x) == Degree::Zero
                };
                if vertical {
                    let y = grid.take(row + 1, side);
                    grid.put(row, side, y);
                    row += 1;
                } else {
                    let x = grid.take(row, Side::Right);
                    grid.put(row, Side::Left, x);
                    side = Side::Right;
                }
            }
        }
    }
    Some((grid.column(Side::Left), grid.column(Side::Right)))
}

/// `epsilon_i` of a tuple: how many times `E_i` applies, i.e. the `a`
/// parameter of the pair `(U_(i+1), U_i)`.  Columns are listed with `U_1`
/// first, and `1 <= i < cols.len()`.
pub fn tuple_epsilon(alph: &GradedAlphabet, cols: &[Column], i: usize) -> usize {
    assert!(i >= 1 && i < cols.len(), "operator index {i} out of range");
    pair_normalize(alph, &cols[i], &cols[i - 1]).a
}

/// `phi_i` of a tuple: how many times `F_i` applies, i.e. the `b` parameter
/// of the pair `(U_(i+1), U_i)`.
pub fn tuple_phi(alph: &GradedAlphabet, cols: &[Column], i: usize) -> usize {
    assert!(i >= 1 && i < cols.len(), "operator index {i} out of range");
    pair_normalize(alph, &cols[i], &cols[i - 1]).b
}

/// `E_i` on a tuple of columns `(U_r, ..., U_1)` stored as `cols[0] = U_1`:
/// applies the raising operator to the pair `(U_(i+1), U_i)`.
pub fn tuple_e(alph: &GradedAlphabet, cols: &[Column], i: usize) -> Option<Vec<Column>> {
    assert!(i >= 1 && i < cols.len(), "operator index {i} out of range");
    let (l, r) = crystal_e(alph, &cols[i], &cols[i - 1])?;
    let mut out = cols.to_vec();
    out[i] = l;
    out[i - 1] = r;
    Some(out)
}

/// `F_i` on a tuple of columns, the inverse of [`tuple_e`].
pub fn tuple_f(alph: &GradedAlphabet, cols: &[Column], i: usize) -> Option<Vec<Column>> {
    assert!(i >= 1 && i < cols.len(), "operator index {i} out of range");
    let (l, r) = crystal_f(alph, &cols[i], &cols[i - 1])?;
    let mut out = cols.to_vec();
    out[i] = l;
    out[i - 1] = r;
    Some(out)
}

/// Applies `E_i` exactly `k` times, panicking if any application vanishes.
pub fn tuple_e_pow(alph: &GradedAlphabet, cols: &[Column], i: usize, k: usize) -> Vec<Column> {
    let mut out = cols.to_vec();
    for _ in 0..k {
        out = tuple_e(alph, &out, i).expect("raising operator applies");
    }
    out
}

/// Applies `F_i` exactly `k` times, panicking if any application vanishes.
pub fn tuple_f_pow(alph: &GradedAlphabet, cols: &[Column], i: usize, k: usize) -> Vec<Column> {
    let mut out = cols.to_vec();
    for _ in 0..k {
        out = tuple_f(alph, &out, i).expect("lowering operator applies");
    }
    out
}

/// The simple reflection `r_i`: applies `F_i^k` when `k = phi_i - epsilon_i`
/// is nonnegative and `E_i^(-k)` otherwise.
pub fn weyl_reflect(alph: &GradedAlphabet, cols: &[Column], i: usize) -> Vec<Column> {
    let eps = tuple_epsilon(alph, cols, i);
    let phi = tuple_phi(alph, cols, i);
    if phi >= eps {
        tuple_f_pow(alph, cols, i, phi - eps)
    } else {
        tuple_e_pow(alph, cols, i, eps - phi)
    }
}

/// One letter of the multiplicity word of a tuple: the letter `value` in
/// `1..=r` remembers which alphabet letter it came from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WordEntry {
    /// Index of the column (1-based, `U_value`).
    pub value: usize,
    /// The alphabet letter this entry records an occurrence of.
    pub letter: Letter,
}

/// The multiplicity word of a tuple of columns: for each alphabet letter `x`
/// in decreasing order, the indices of the columns containing `x`, sorted
/// increasingly when `x` has degree 0 and decreasingly (with multiplicity)
/// when `x` has degree 1.
pub fn signature_word(alph: &GradedAlphabet, cols: &[Column]) -> Vec<WordEntry> {
    let mut word = Vec::new();
    for &x in alph.letters().iter().rev() {
        let mut occurrences: Vec<usize> = Vec::new();
        for (idx, col) in cols.iter().enumerate() {
            let m = col.iter().filter(|&&y| y == x).count();
            if alph.degree(x) == Degree::Zero {
                assert!(m <= 1, "degree-0 letter {x} repeated in one column");
            }
            occurrences.extend(std::iter::repeat(idx + 1).take(m));
        }
        if alph.degree(x) == Degree::One {
            occurrences.reverse();
        }
        word.extend(occurrences.into_iter().map(|value| WordEntry { value, letter: x }));
    }
    word
}

/// Bracket cancellation on a sign sequence: entries `1` are pluses, `-1`
/// minuses, `0` neutral, and a plus cancels the next minus after it.
/// Returns the positions of the surviving pluses and minuses in word order;
/// a raising operator acts at the rightmost surviving minus, a lowering
/// operator at the leftmost surviving plus.
pub fn bracket_signs(signs: &[i8]) -> (Vec<usize>, Vec<usize>) {
    let mut plus: Vec<usize> = Vec::new();
    let mut minus: Vec<usize> = Vec::new();
    for (pos, &s) in signs.iter().enumerate() {
        if s > 0 {
            plus.push(pos);
        } else if s < 0 {
            match plus.last() {
                Some(_) => {
                    plus.pop();
                }
                None => minus.push(pos),
            }
        }
    }
    (plus, minus)
}

/// Bracketing of the multiplicity word for index `i`: entries equal to `i`
/// are pluses, entries equal to `i + 1` are minuses.
fn bracket(word: &[WordEntry], i: usize) -> (Vec<usize>, Vec<usize>) {
    let signs: Vec<i8> = word
        .iter()
        .map(|e| {
            if e.value == i {
                1
            } else if e.value == i + 1 {
                -1
            } else {
                0
            }
        })
        .collect();
    bracket_signs(&signs)
}

/// Moves one occurrence of `letter` from column `from` to column `to`
/// (both 1-based), keeping the target column sorted.
fn move_letter(alph: &GradedAlphabet, cols: &[Column], letter: Letter, from: usize, to: usize) -> Vec<Column> {
    let mut out = cols.to_vec();
    let pos = out[from - 1]
        .iter()
        .position(|&y| y == letter)
        .expect("letter present in source column");
    out[from - 1].remove(pos);
    let insert_at = out[to - 1]
        .iter()
        .position(|&y| alph.lt(letter, y))
        .unwrap_or(out[to - 1].len());
    out[to - 1].insert(insert_at, letter);
    out
}

/// The raising operator computed through the multiplicity word: picks the
/// rightmost surviving minus for index `i` and moves the recorded letter from
/// `U_(i+1)` to `U_i`.  This is an independent reference implementation of
/// [`tuple_e`].
pub fn word_e(alph: &GradedAlphabet, cols: &[Column], i: usize) -> Option<Vec<Column>> {
    let word = signature_word(alph, cols);
    let (_, minus) = bracket(&word, i);
    let pos = *minus.last()?;
    Some(move_letter(alph, cols, word[pos].letter, i + 1, i))
}

/// The lowering operator computed through the multiplicity word: picks the
/// leftmost surviving plus for index `i` and moves the recorded letter from
/// `U_i` to `U_(i+1)`.
pub fn word_f(alph: &GradedAlphabet, cols: &[Column], i: usize) -> Option<Vec<Column>> {
    let word = signature_word(alph, cols);
    let (plus, _) = bracket(&word, i);
    let pos = *plus.first()?;
    Some(move_letter(alph, cols, word[pos].letter, i, i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::GradedAlphabet;
    use crate::tableau::parse_column;

    fn col(s: &str) -> Column {
        parse_column(s).unwrap()
    }

    fn cols(list: &[&str]) -> Vec<Column> {
        list.iter().map(|s| col(s)).collect()
    }

    #[test]
    fn pair_normalize_finds_maximal_overlap() {
        let a = GradedAlphabet::mixed(4, 3);
        let s = pair_normalize(&a, &col("1 2 1' 3'"), &col("1 3 2'"));
        assert_eq!(s, PairShape { a: 1, b: 0, c: 3 });
        // (4 2') cannot overlap (1 2 1') at depth 2 because of the row (4, 2).
        let s2 = pair_normalize(&a, &col("4 2'"), &col("1 2 1'"));
        assert_eq!(s2, PairShape { a: 1, b: 2, c: 1 });
        // empty columns have zero overlap
        assert_eq!(pair_normalize(&a, &[], &col("1")), PairShape { a: 0, b: 1, c: 0 });
    }

    #[test]
    fn raising_moves_one_letter_left_to_right() {
        let a = GradedAlphabet::mixed(4, 3);
        let (l, r) = crystal_e(&a, &col("2 1' 1' 3'"), &col("2' 2'")).unwrap();
        assert_eq!(l, col("1' 1' 3'"));
        assert_eq!(r, col("2 2' 2'"));
        let (l2, r2) = crystal_e(&a, &l, &r).unwrap();
        assert_eq!(l2, col("1' 1'"));
        assert_eq!(r2, col("2 2' 2' 3'"));
    }

    #[test]
    fn lowering_inverts_raising() {
        let a = GradedAlphabet::mixed(4, 3);
        let pairs = [
            ("2 1' 1' 3'", "2' 2'"),
            ("1 2 1' 3'", "1 3 2'"),
            ("4 2'", "1 2 1'"),
            ("1'", "1"),
        ];
        for (ls, rs) in pairs {
            let (l0, r0) = (col(ls), col(rs));
            if let Some((l, r)) = crystal_e(&a, &l0, &r0) {
                let (lb, rb) = crystal_f(&a, &l, &r).unwrap();
                assert_eq!((lb, rb), (l0.clone(), r0.clone()), "F E != id at ({ls}, {rs})");
            }
            if let Some((l, r)) = crystal_f(&a, &l0, &r0) {
                let (lb, rb) = crystal_e(&a, &l, &r).unwrap();
                assert_eq!((lb, rb), (l0, r0), "E F != id at ({ls}, {rs})");
            }
        }
    }

    #[test]
    fn lowering_onto_empty_column() {
        let a = GradedAlphabet::mixed(1, 1);
        let (l, r) = crystal_f(&a, &[], &col("1 1'")).unwrap();
        assert_eq!(l, col("1'"));
        assert_eq!(r, col("1"));
    }

    #[test]
    fn tuple_operators_follow_the_worked_slide() {
        let a = GradedAlphabet::mixed(4, 3);
        // (U_4, U_3, U_2, U_1) listed right to left in the vector.
        let t0 = cols(&["2' 2'", "2 1' 1' 3'", "1 3 2'", "1 2 1' 3'"]);
        let t1 = tuple_e(&a, &t0, 3).unwrap();
        assert_eq!(t1, cols(&["2' 2'", "2 1' 1' 3'", "1 3 2' 3'", "1 2 1'"]));
        let t2 = tuple_e(&a, &t1, 2).unwrap();
        assert_eq!(t2, cols(&["2' 2'", "2 1' 1' 3' 3'", "1 3 2'", "1 2 1'"]));
        assert_eq!(tuple_epsilon(&a, &t2, 3), 0);
        // the inverse path
        assert_eq!(tuple_f(&a, &t2, 2).unwrap(), t1);
        assert_eq!(tuple_f(&a, &t1, 3).unwrap(), t0);
    }

    #[test]
    fn epsilon_counts_raising_applications() {
        let a = GradedAlphabet::mixed(4, 3);
        let t = cols(&["2 4", "2 3 1'"]);
        // pair (U_2, U_1) = ([2 3 1'], [2 4]) has overlap 2 and a = 1
        assert_eq!(tuple_epsilon(&a, &t, 1), 1);
        assert_eq!(tuple_phi(&a, &t, 1), 0);
        let raised = tuple_e(&a, &t, 1).unwrap();
        assert_eq!(tuple_epsilon(&a, &raised, 1), 0);
    }

    #[test]
    fn barred_pair_is_a_singlet() {
        let a = GradedAlphabet::barred(1);
        let t = cols(&["-1", "-1"]);
        assert_eq!(tuple_epsilon(&a, &t, 1), 0);
        assert_eq!(tuple_phi(&a, &t, 1), 0);
        assert!(tuple_e(&a, &t, 1).is_none());
        assert!(word_e(&a, &t, 1).is_none());
    }

    #[test]
    fn primed_pair_is_a_three_string() {
        let a = GradedAlphabet::primed(1);
        let mid = cols(&["1'", "1'"]);
        let top = tuple_e(&a, &mid, 1).unwrap();
        assert_eq!(top, cols(&["1' 1'", ""]));
        let bot = tuple_f(&a, &mid, 1).unwrap();
        assert_eq!(bot, cols(&["", "1' 1'"]));
        assert!(tuple_e(&a, &top, 1).is_none());
        assert!(tuple_f(&a, &bot, 1).is_none());
        // word operators agree
        assert_eq!(word_e(&a, &mid, 1).unwrap(), top);
        assert_eq!(word_f(&a, &mid, 1).unwrap(), bot);
    }

    #[test]
    fn word_operators_match_slides_on_samples() {
        let a = GradedAlphabet::mixed(2, 2);
        let samples = [
            cols(&["1 2'", "1 1' 2'", "2"]),
            cols(&["1'", "1 2", "1 1'"]),
            cols(&["2 1' 2'", "", "1 2'"]),
            cols(&["1 2 1' 2'", "1'", "2 2'"]),
        ];
        for t in samples {
            for i in 1..t.len() {
                assert_eq!(tuple_e(&a, &t, i), word_e(&a, &t, i), "E_{i} on {t:?}");
                assert_eq!(tuple_f(&a, &t, i), word_f(&a, &t, i), "F_{i} on {t:?}");
            }
        }
    }

    #[test]
    fn weyl_reflection_swaps_string_position() {
        let a = GradedAlphabet::primed(1);
        let bot = cols(&["", "1' 1'"]);
        let top = cols(&["1' 1'", ""]);
        assert_eq!(weyl_reflect(&a, &bot, 1), top);
        assert_eq!(weyl_reflect(&a, &top, 1), bot);
        let mid = cols(&["1'", "1'"]);
        assert_eq!(weyl_reflect(&a, &mid, 1), mid);
    }
}
