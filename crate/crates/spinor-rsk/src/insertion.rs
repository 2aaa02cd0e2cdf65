//! Column insertion over a graded alphabet and the resulting analogue of the
//! RSK correspondence.
//!
//! A straight-shape tableau is stored as its list of columns, tallest first.
//! Inserting a letter `x` bumps the topmost entry `y >= x` (degree 0) or
//! `y > x` (degree 1) of the first column, the bumped letter continuing into
//! the next column, until a letter comes to rest at the bottom of a column.
//! Inserting a whole column means inserting its letters from top to bottom.
//!
//! [`kappa`] inserts a tuple of columns `(U_r, ..., U_1)`, starting from
//! `U_1`, and records in which order the boxes appear: the recording tableau
//! has the conjugate shape, its row `j` following column `j` of the insertion
//! tableau, and the boxes created while inserting `U_i` are filled with `i`.
//! The result is a bijection onto pairs of a semistandard tableau and a
//! recording tableau over `[r]`, and the tuple crystal operators act on the
//! recording component alone; [`kappa_inverse`] recovers the tuple.

use crate::alphabet::{Degree, GradedAlphabet, Letter};
use crate::tableau::{column_is_valid, Column};

/// Column-inserts one letter, returning the `(row, column)` of the new box.
pub fn insert_letter(
    alph: &GradedAlphabet,
    cols: &mut Vec<Column>,
    x: Letter,
) -> (usize, usize) {
    let mut carry = x;
    let mut j = 0;
    loop {
        if j == cols.len() {
            cols.push(vec![carry]);
            return (0, j);
        }
        let col = &mut cols[j];
        let bump = col.iter().position(|&y| match alph.degree(carry) {
            Degree::Zero => !alph.lt(y, carry),
            Degree::One => alph.lt(carry, y),
        });
        match bump {
            Some(k) => {
                let y = col[k];
                col[k] = carry;
                carry = y;
                j += 1;
            }
            None => {
                col.push(carry);
                return (col.len() - 1, j);
            }
        }
    }
}

/// Column-inserts the letters of a column from top to bottom, returning the
/// new box positions in order of creation.
pub fn insert_column(
    alph: &GradedAlphabet,
    cols: &mut Vec<Column>,
    u: &[Letter],
) -> Vec<(usize, usize)> {
    u.iter().map(|&x| insert_letter(alph, cols, x)).collect()
}

/// The recording tableau of an insertion: row `j` lists, for each cell of
/// column `j` of the insertion tableau from top to bottom, the index of the
/// tuple entry whose insertion created that cell.
pub type Recording = Vec<Vec<usize>>;

/// Checks that a recording tableau is semistandard: weakly increasing rows,
/// strictly increasing columns, weakly decreasing row lengths.
pub fn recording_is_semistandard(q: &Recording) -> bool {
    for (j, row) in q.iter().enumerate() {
        if row.windows(2).any(|w| w[0] > w[1]) {
            return false;
        }
        if j > 0 {
            if row.len() > q[j - 1].len() {
                return false;
            }
            if row.iter().zip(&q[j - 1]).any(|(lo, up)| lo <= up) {
                return false;
            }
        }
    }
    true
}

/// Inserts the tuple `(U_r, ..., U_1)`, listed with `U_1` first, producing
/// the insertion tableau and its recording tableau.
pub fn kappa(alph: &GradedAlphabet, tuple: &[Column]) -> (Vec<Column>, Recording) {
    let mut p: Vec<Column> = Vec::new();
    let mut q: Recording = Vec::new();
    for (idx, u) in tuple.iter().enumerate() {
        let mut last_row: Option<usize> = None;
        for &(s, j) in &insert_column(alph, &mut p, u) {
            if q.len() <= j {
                q.push(Vec::new());
            }
            assert_eq!(q[j].len(), s, "new box sits at the end of its column");
            q[j].push(idx + 1);
            // boxes of one column land in strictly lower rows, which fixes
            // the order in which the inverse removes them
            assert!(last_row.is_none_or(|prev| prev < s), "boxes descend");
            last_row = Some(s);
        }
    }
    debug_assert!(recording_is_semistandard(&q));
    (p, q)
}

/// Reverse column insertion starting from the box at `(row, col)`: removes
/// that box and carries its letter back through the columns to its left,
/// returning the letter that leaves the tableau.
pub fn uninsert_box(
    alph: &GradedAlphabet,
    cols: &mut Vec<Column>,
    row: usize,
    col: usize,
) -> Letter {
    assert_eq!(row + 1, cols[col].len(), "only bottom boxes can be removed");
    let mut carry = cols[col].pop().expect("nonempty column");
    if cols[col].is_empty() {
        assert_eq!(col + 1, cols.len(), "only the last column can vanish");
        cols.pop();
    }
    for j in (0..col).rev() {
        let k = cols[j]
            .iter()
            .rposition(|&z| match alph.degree(z) {
                Degree::Zero => !alph.lt(carry, z),
                Degree::One => alph.lt(z, carry),
            })
            .expect("reverse bump target exists");
        std::mem::swap(&mut cols[j][k], &mut carry);
    }
    carry
}

/// Inverts [`kappa`]: rebuilds the tuple `(U_r, ..., U_1)`, listed with
/// `U_1` first, from an insertion tableau and its recording tableau.  The
/// tuple length `r` must be passed in, since entries past the largest
/// recorded index are empty columns the recording cannot see.
pub fn kappa_inverse(alph: &GradedAlphabet, p: &[Column], q: &Recording, r: usize) -> Vec<Column> {
    assert!(q.iter().flatten().all(|&v| v >= 1 && v <= r), "recorded indices lie in 1..=r");
    let mut cols = p.to_vec();
    let mut tuple: Vec<Column> = vec![Vec::new(); r];
    for i in (1..=r).rev() {
        // boxes recorded with i, removed bottom row first
        let mut boxes: Vec<(usize, usize)> = q
            .iter()
            .enumerate()
            .flat_map(|(j, row)| {
                row.iter()
                    .enumerate()
                    .filter(move |&(_, &v)| v == i)
                    .map(move |(s, _)| (s, j))
            })
            .collect();
        boxes.sort();
        let mut letters: Vec<Letter> = boxes
            .into_iter()
            .rev()
            .map(|(s, j)| uninsert_box(alph, &mut cols, s, j))
            .collect();
        letters.reverse();
        assert!(column_is_valid(alph, &letters), "recovered entry is a column");
        tuple[i - 1] = letters;
    }
    assert!(cols.is_empty(), "all boxes accounted for");
    tuple
}

/// All semistandard recording tableaux whose row lengths are the parts of
/// `shape`, with entries in `1..=max_entry`, filled row-major in
/// lexicographic order.
pub fn enumerate_recordings(shape: &crate::partition::Partition, max_entry: usize) -> Vec<Recording> {
    let rows: Vec<usize> = shape.parts().to_vec();
    let mut out = Vec::new();
    let mut partial: Recording = Vec::new();
    fn extend(rows: &[usize], max_entry: usize, partial: &mut Recording, out: &mut Vec<Recording>) {
        let j = partial.len();
        if j == rows.len() {
            out.push(partial.clone());
            return;
        }
        partial.push(Vec::with_capacity(rows[j]));
        fill(rows, max_entry, partial, out);
        partial.pop();
    }
    fn fill(rows: &[usize], max_entry: usize, partial: &mut Recording, out: &mut Vec<Recording>) {
        let j = partial.len() - 1;
        let s = partial[j].len();
        if s == rows[j] {
            extend(rows, max_entry, partial, out);
            return;
        }
        let mut lo = if s > 0 { partial[j][s - 1] } else { 1 };
        if j > 0 {
            lo = lo.max(partial[j - 1][s] + 1);
        }
        for v in lo..=max_entry {
            partial[j].push(v);
            fill(rows, max_entry, partial, out);
            partial[j].pop();
        }
    }
    extend(&rows, max_entry, &mut partial, &mut out);
    debug_assert!(out.iter().all(recording_is_semistandard));
    out
}

/// Cell positions `(row, column)` of a recording tableau in reading order:
/// columns right to left, top to bottom within each column.
fn recording_reading_order(q: &Recording) -> Vec<(usize, usize)> {
    let width = q.first().map_or(0, |row| row.len());
    let mut order = Vec::new();
    for s in (0..width).rev() {
        for (j, row) in q.iter().enumerate() {
            if s < row.len() {
                order.push((j, s));
            }
        }
    }
    order
}

fn recording_bracket(q: &Recording, i: usize) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let order = recording_reading_order(q);
    let signs: Vec<i8> = order
        .iter()
        .map(|&(j, s)| {
            if q[j][s] == i {
                1
            } else if q[j][s] == i + 1 {
                -1
            } else {
                0
            }
        })
        .collect();
    let (plus, minus) = crate::crystal::bracket_signs(&signs);
    (
        plus.into_iter().map(|p| order[p]).collect(),
        minus.into_iter().map(|p| order[p]).collect(),
    )
}

/// The `i`-signature `(epsilon_i, phi_i)` of a recording tableau: how many
/// times the raising and lowering operators apply.
pub fn recording_epsilon_phi(q: &Recording, i: usize) -> (usize, usize) {
    let (plus, minus) = recording_bracket(q, i);
    (minus.len(), plus.len())
}

/// The raising operator on a recording tableau: turns the `i + 1` at the
/// rightmost surviving minus into an `i`.
pub fn recording_e(q: &Recording, i: usize) -> Option<Recording> {
    let (_, minus) = recording_bracket(q, i);
    let &(j, s) = minus.last()?;
    let mut out = q.clone();
    out[j][s] = i;
    debug_assert!(recording_is_semistandard(&out));
    Some(out)
}

/// The lowering operator on a recording tableau: turns the `i` at the
/// leftmost surviving plus into an `i + 1`.
pub fn recording_f(q: &Recording, i: usize) -> Option<Recording> {
    let (plus, _) = recording_bracket(q, i);
    let &(j, s) = plus.first()?;
    let mut out = q.clone();
    out[j][s] = i + 1;
    debug_assert!(recording_is_semistandard(&out));
    Some(out)
}

/// The simple reflection `r_i` on a recording tableau: applies the lowering
/// operator `phi_i - epsilon_i` times when that is nonnegative, and the
/// raising operator `epsilon_i - phi_i` times otherwise.
pub fn recording_reflect(q: &Recording, i: usize) -> Recording {
    let (eps, phi) = recording_epsilon_phi(q, i);
    let mut out = q.clone();
    if phi >= eps {
        for _ in 0..phi - eps {
            out = recording_f(&out, i).expect("lowering applies");
        }
    } else {
        for _ in 0..eps - phi {
            out = recording_e(&out, i).expect("raising applies");
        }
    }
    out
}

/// The highest-weight tableau of a given shape over the barred alphabet on
/// `n` letters: row `i` from the top is filled with the letter `n - i + 1`
/// barred.  Returned as columns.
pub fn highest_weight_columns(n: i32, shape: &crate::partition::Partition) -> Vec<Column> {
    let heights = shape.conjugate();
    (0..heights.length())
        .map(|j| (0..heights[j]).map(|i| Letter::Bar(n - i as i32)).collect())
        .collect()
}
