//! The full correspondence between tuples of columns and pairs of tableaux.
//!
//! A tuple of `2l` columns, rightmost first, is processed pairwise: each
//! pair lowers to an admissible block ([`pair_to_block`]), recording how
//! many lowering moves it absorbed.  The blocks stack at their minimal
//! admissible raises ([`stack_blocks`]), slide to the straight-shape
//! insertion tableau `P`, and leave behind a recording tableau: the
//! oscillating tableau tracing the shapes while the adjoint word of the
//! rank-`n` conjugate is inserted ([`recording`]).  Lowering segment `i` of
//! the recording once per absorbed move and reading off the King tableau
//! completes the map ([`rsk`]); the composite is a bijection onto pairs of
//! a straight tuple and a King tableau of the same shape.
//!
//! The inverse ([`rsk_inverse`]) retraces every step.  The King tableau
//! decodes to an oscillating tableau whose fully raised form yields both
//! the lowering counts and a highest-weight word: the concatenation of its
//! segment columns, which inserts through exactly those shapes.  Lowering
//! that word along the crystal path that raises the conjugated insertion
//! tableau to highest weight recovers the adjoint word of the conjugate
//! tuple, and the split insertion data carries the blocks back to the
//! original alphabet.

use crate::alphabet::{GradedAlphabet, Letter};
use crate::crystal::{crystal_e, crystal_f};
use crate::insertion::kappa_inverse;
use crate::kn::Symplectic;
use crate::oscillating::{king_to_osc, osc_to_king, KingTableau, Oscillating};
use crate::sliding::{n_conjugate, p_tableau_spin, SkewSpinor};
use crate::spinor::{iota_inverse, phi, skew_distance, BlockTuple, SpinorBlock};
use crate::tableau::Column;

/// Lowers a pair of columns `(u2, u1)` to its admissible form, returning
/// the block and the number of lowering moves it took.
pub fn pair_to_block(alph: &GradedAlphabet, u2: &Column, u1: &Column) -> (SpinorBlock, usize) {
    let mut left = u2.clone();
    let mut right = u1.clone();
    let mut count = 0;
    while let Some((l, r)) = crystal_f(alph, &left, &right) {
        left = l;
        right = r;
        count += 1;
    }
    (SpinorBlock::new(alph, left, right), count)
}

/// Raises a block `count` times, recovering the pair of columns `(u2, u1)`;
/// inverse to [`pair_to_block`].
pub fn block_to_pair(
    alph: &GradedAlphabet,
    block: &SpinorBlock,
    count: usize,
) -> (Column, Column) {
    let mut left = block.left().clone();
    let mut right = block.right().clone();
    for _ in 0..count {
        let (l, r) = crystal_e(alph, &left, &right).expect("raise within the pair string");
        left = l;
        right = r;
    }
    (left, right)
}

/// Stacks a tuple of blocks at the minimal raises making every adjacent
/// pair admissible.
pub fn stack_blocks(alph: &GradedAlphabet, blocks: BlockTuple) -> SkewSpinor {
    let l = blocks.len();
    assert!(l > 0, "at least one block");
    let mut raises = vec![0usize; l];
    for i in (0..l - 1).rev() {
        raises[i] = raises[i + 1] + skew_distance(alph, &blocks[i + 1], &blocks[i]);
    }
    SkewSpinor::new(alph, blocks, raises)
}

/// The rank-`n` recording tableau of a tuple of blocks: the shapes traced
/// while the adjoint word of the rank-`n` conjugate is inserted, one
/// segment per block, rightmost block first.  Every segment column comes
/// out admissible.
pub fn recording(alph: &GradedAlphabet, blocks: &[SpinorBlock], n: i32) -> Oscillating {
    let sym = Symplectic::new(n);
    let conj = n_conjugate(alph, blocks, n);
    let cols: Vec<Column> = conj.iter().map(|b| sym.adjoint(b)).collect();
    let word: Vec<Letter> = cols.iter().flatten().copied().collect();
    let shapes = sym.q_shapes(&word);
    let mut segments = Vec::with_capacity(cols.len());
    let mut offset = 0;
    for (col, block) in cols.iter().zip(blocks) {
        assert_eq!(col.len(), n as usize - block.a(), "adjoint heights complement the widths");
        segments.push(shapes[offset..offset + col.len()].to_vec());
        offset += col.len();
    }
    let q = Oscillating::new(n, segments);
    assert!(q.is_admissible(), "the recording of a tuple is fully raised");
    q
}

/// Everything the correspondence produces from a tuple of columns.
pub struct Rsk {
    /// The straight-shape insertion tableau.
    pub p: SkewSpinor,
    /// The King tableau, of the same shape as `p`.
    pub king: KingTableau,
    /// The recording tableau after the lowering moves are restored.
    pub q: Oscillating,
    /// The fully raised recording tableau of the stacked tuple.
    pub q_admissible: Oscillating,
    /// The stacked skew tuple the columns lower to.
    pub skew: SkewSpinor,
    /// Lowering moves absorbed by each pair, rightmost pair first.
    pub phis: Vec<usize>,
}

/// Runs the correspondence on `2l` columns, rightmost first, with the
/// recording taken at rank `n`.
pub fn rsk(alph: &GradedAlphabet, columns: &[Column], n: i32) -> Rsk {
    assert!(columns.len() % 2 == 0, "columns come in pairs");
    let l = columns.len() / 2;
    assert!(l > 0, "at least one pair of columns");
    let mut blocks = Vec::with_capacity(l);
    let mut phis = Vec::with_capacity(l);
    for i in 0..l {
        let (block, count) = pair_to_block(alph, &columns[2 * i + 1], &columns[2 * i]);
        blocks.push(block);
        phis.push(count);
    }
    let skew = stack_blocks(alph, blocks);
    let p = p_tableau_spin(alph, &skew);
    let q_admissible = recording(alph, skew.blocks(), n);
    let q = Oscillating::join(&q_admissible, &phis);
    let king = osc_to_king(&q);

    assert_eq!(king.shape(), p.outer(), "the King tableau shares the shape of P");
    let net: Vec<i64> = (0..l)
        .map(|i| columns[2 * i + 1].len() as i64 - columns[2 * i].len() as i64)
        .collect();
    assert_eq!(king.weight(), net, "net column sizes survive as the King weight");
    let mut before: Vec<Letter> = columns.iter().flatten().copied().collect();
    let mut after: Vec<Letter> = p
        .blocks()
        .iter()
        .flat_map(|b| b.left().iter().chain(b.right()).copied())
        .collect();
    alph.sort(&mut before);
    alph.sort(&mut after);
    assert_eq!(before, after, "insertion preserves the letters");

    Rsk { p, king, q, q_admissible, skew, phis }
}

/// Reconstructs the tuple of columns from a straight tuple of blocks and a
/// King tableau of the same shape; inverse to [`rsk`] at the same rank.
pub fn rsk_inverse(
    alph: &GradedAlphabet,
    p: &[SpinorBlock],
    king: &KingTableau,
    n: i32,
) -> Vec<Column> {
    let l = p.len();
    assert_eq!(king.ell() as usize, l, "one King value per pair of columns");
    let sym = Symplectic::new(n);
    let q = king_to_osc(king, n);
    let (q_admissible, phis) = q.split();

    // The highest-weight representative of the recording: its segment
    // columns concatenate to a word that inserts through exactly the
    // recorded shapes.
    let segment_cols: Vec<Column> = (0..l).map(|i| q_admissible.segment_column(i)).collect();
    let mut word: Vec<Letter> = segment_cols.iter().flatten().copied().collect();

    // The crystal path raising the conjugated insertion tableau to highest
    // weight; the same path read backwards lowers the highest-weight word
    // onto the adjoint word of the conjugate tuple.
    let pbar = n_conjugate(alph, p, n);
    let mut probe = sym.blocks_to_kn(&pbar, &vec![0; l]).reading_word();
    let mut path = Vec::new();
    let budget = (probe.len() + 2) * (n as usize + 2) * 8 + 64;
    loop {
        let Some(i) = (1..=n).find(|&i| sym.word_epsilon_phi(&probe, i).0 > 0) else { break };
        probe = sym.word_e(&probe, i).expect("positive epsilon admits a raise");
        path.push(i);
        assert!(path.len() <= budget, "raising terminates within the step budget");
    }
    for &i in path.iter().rev() {
        word = sym.word_f(&word, i).expect("the lowering path stays inside the crystal");
    }

    // Cut the word back into adjoint columns and rebuild the barred tuple.
    let mut tbar = Vec::with_capacity(l);
    let mut offset = 0;
    for col in &segment_cols {
        tbar.push(sym.from_admissible(&word[offset..offset + col.len()]));
        offset += col.len();
    }

    // Return to the original alphabet: the split insertion tableau of `p`
    // together with the recording of the conjugate pins down the tuple.
    let p_cols = phi(alph, p).0;
    let q_rec = phi(&GradedAlphabet::barred(n), &tbar).1;
    let blocks = iota_inverse(alph, &kappa_inverse(alph, &p_cols, &q_rec, 2 * l));

    let mut out = Vec::with_capacity(2 * l);
    for (block, &count) in blocks.iter().zip(&phis) {
        let (u2, u1) = block_to_pair(alph, block, count);
        out.push(u1);
        out.push(u2);
    }
    out
}
