//! Blocks of the spinor model and admissible tuples of blocks.
//!
//! A block with parameter `a` is a two-column semistandard tableau whose
//! left column sticks out `a` cells below its right column, both columns
//! top-aligned.  Raising the pair `a` times moves `a` letters into the right
//! column, producing the companion columns used in all adjacency tests.
//!
//! A tuple of blocks `(T_l, ..., T_1)` models one symplectic weight: block
//! `T_i` carries parameter `lambda_i`, and consecutive blocks must satisfy
//! the interleaving condition [`precedes`].  Flattening a tuple into its
//! `2l` columns and inserting them ([`phi`]) embeds the model into pairs of
//! a semistandard tableau and a recording tableau; the image of the
//! recording side is cut out by [`recording_in_image`].

use serde::{Deserialize, Serialize};

use crate::alphabet::{GradedAlphabet, Letter};
use crate::crystal::crystal_e;
use crate::insertion::{
    kappa, recording_epsilon_phi, recording_reflect, Recording,
};
use crate::partition::Partition;
use crate::tableau::{column_is_valid, enumerate_columns, Column, SkewTableau};

/// A two-column block of the spinor model.  The left column has height
/// `a + c` and the right column height `c` for some `c >= 0`; every shared
/// row must be semistandard.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SpinorBlock {
    left: Column,
    right: Column,
}

impl SpinorBlock {
    /// Builds a block, panicking unless the two columns form a valid block.
    pub fn new(alph: &GradedAlphabet, left: Column, right: Column) -> Self {
        assert!(
            Self::is_valid(alph, &left, &right),
            "columns do not form a spinor block"
        );
        SpinorBlock { left, right }
    }

    /// Whether two columns form a block: both valid, the left at least as
    /// tall as the right, and every shared row semistandard.
    pub fn is_valid(alph: &GradedAlphabet, left: &[Letter], right: &[Letter]) -> bool {
        left.len() >= right.len()
            && column_is_valid(alph, left)
            && column_is_valid(alph, right)
            && right
                .iter()
                .enumerate()
                .all(|(i, &v)| alph.row_pair_ok(left[i], v))
    }

    /// The left column, top to bottom.
    pub fn left(&self) -> &Column {
        &self.left
    }

    /// The right column, top to bottom.
    pub fn right(&self) -> &Column {
        &self.right
    }

    /// The block parameter `a`: how far the left column sticks out.
    pub fn a(&self) -> usize {
        self.left.len() - self.right.len()
    }

    /// Height of the left column, `a + c`.
    pub fn height(&self) -> usize {
        self.left.len()
    }

    /// Height of the right column, the overlap `c`.
    pub fn overlap(&self) -> usize {
        self.right.len()
    }

    /// The companion pair obtained by raising the block `a` times, moving
    /// `a` letters from the left column into the right.  The result has the
    /// mirrored profile: left height `c`, right height `a + c`.
    pub fn raised(&self, alph: &GradedAlphabet) -> (Column, Column) {
        let mut left = self.left.clone();
        let mut right = self.right.clone();
        for _ in 0..self.a() {
            let (l, r) = crystal_e(alph, &left, &right).expect("raising applies a times");
            left = l;
            right = r;
        }
        assert_eq!(left.len(), self.overlap());
        (left, right)
    }

    /// The block as a bottom-aligned two-column configuration, the whole
    /// block raised by `raise`.
    pub fn to_skew(&self, raise: usize) -> SkewTableau {
        SkewTableau::floor(
            vec![self.left.clone(), self.right.clone()],
            &[raise, raise + self.a()],
        )
    }
}

impl std::fmt::Display for SpinorBlock {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.to_skew(0).fmt(f)
    }
}

/// The interleaving order on blocks: `t2` may sit to the left of `t1`
/// when both mixed two-column configurations are semistandard tableaux of a
/// legal skew shape: the raised right column of `t2` against the left column
/// of `t1` bottom-aligned, and the right column of `t2` against the raised
/// left column of `t1` at raises `(a_2, a_1)`.  Shape legality forces
/// `a_2 <= a_1` and `height(t2) <= height(t1)`.
pub fn precedes(alph: &GradedAlphabet, t2: &SpinorBlock, t1: &SpinorBlock) -> bool {
    admissible_at(alph, t2, t1, 0)
}

/// A tuple of blocks `(T_l, ..., T_1)`, stored with `T_1` first.
pub type BlockTuple = Vec<SpinorBlock>;

/// Whether consecutive blocks of a tuple interleave, `T_(i+1)` preceding
/// `T_i` for every `i`.
pub fn is_chain(alph: &GradedAlphabet, blocks: &[SpinorBlock]) -> bool {
    blocks.windows(2).all(|w| precedes(alph, &w[1], &w[0]))
}

/// Whether the pair `t2` (left block) and `t1` (right block) is admissible
/// with `t1` raised by `d`: the two mixed configurations at raises `(0, d)`
/// and `(a_2, d + a_1)` are semistandard, the underlying shape is a skew
/// shape (`d + a_1 >= a_2`), and the left profile descends
/// (`ht(t2 left) <= ht(t1 left) + d`).
pub fn admissible_at(
    alph: &GradedAlphabet,
    t2: &SpinorBlock,
    t1: &SpinorBlock,
    d: usize,
) -> bool {
    if d + t1.a() < t2.a() || t2.height() > t1.height() + d {
        return false;
    }
    let (_, r2) = t2.raised(alph);
    let (l1, _) = t1.raised(alph);
    let first = SkewTableau::floor(vec![r2, t1.left().clone()], &[0, d]);
    let second = SkewTableau::floor(vec![t2.right().clone(), l1], &[t2.a(), d + t1.a()]);
    first.is_semistandard(alph) && second.is_semistandard(alph)
}

/// The distance of an adjacent pair: the least raise `d` of the right block
/// `t1` making the pair admissible.  Admissibility is upward closed in `d`,
/// so the pair is admissible exactly at raises `>= skew_distance`.
pub fn skew_distance(alph: &GradedAlphabet, t2: &SpinorBlock, t1: &SpinorBlock) -> usize {
    let limit = t2.height() + t1.height() + t2.a() + 2;
    (0..=limit)
        .find(|&d| admissible_at(alph, t2, t1, d))
        .expect("large raises separate the blocks entirely")
}

/// Flattens a tuple of blocks into its column tuple
/// `(T_l left, T_l right, ..., T_1 left, T_1 right)`, listed with the
/// rightmost column first as elsewhere.
pub fn iota(blocks: &[SpinorBlock]) -> Vec<Column> {
    let mut cols = Vec::with_capacity(2 * blocks.len());
    for b in blocks {
        cols.push(b.right().clone());
        cols.push(b.left().clone());
    }
    cols
}

/// Rebuilds a tuple of blocks from its flattened column tuple.
pub fn iota_inverse(alph: &GradedAlphabet, cols: &[Column]) -> BlockTuple {
    assert!(cols.len() % 2 == 0, "flattened tuples have even length");
    cols.chunks(2)
        .map(|pair| SpinorBlock::new(alph, pair[1].clone(), pair[0].clone()))
        .collect()
}

/// The insertion of a tuple of blocks: flatten with [`iota`] and insert.
pub fn phi(alph: &GradedAlphabet, blocks: &[SpinorBlock]) -> (Vec<Column>, Recording) {
    kappa(alph, &iota(blocks))
}

/// The tuple of blocks as one bottom-aligned configuration, block `T_i`
/// raised by `mu[i - 1]`.
pub fn tuple_floor(blocks: &[SpinorBlock], mu: &[usize]) -> SkewTableau {
    assert_eq!(blocks.len(), mu.len());
    let mut cols = Vec::new();
    let mut raises = Vec::new();
    for (b, &m) in blocks.iter().zip(mu).rev() {
        cols.push(b.left().clone());
        cols.push(b.right().clone());
        raises.push(m);
        raises.push(m + b.a());
    }
    SkewTableau::floor(cols, &raises)
}

/// Whether a recording tableau lies in the image of the insertion of tuples
/// with block parameters `lambda` and `l = ell` blocks.  Writing `m_i` for
/// the number of entries `i` and `(eps_i, phi_i)` for the `i`-signature:
///
/// 1. `m_2k - m_(2k-1) = lambda_k` for every block `k`;
/// 2. `m_2k >= m_(2k+2)`;
/// 3. the `(2k-1)`-signature is `(lambda_k, 0)`;
/// 4. the `2k`-signature of `r_(2k+1) Q` is `(0, m_2k - m_(2k+2))`;
/// 5. the `2k`-signature of `r_(2k-1) Q` is
///    `(lambda_k - lambda_(k+1) - p, m_2k - m_(2k+2) - p)` for some `p >= 0`.
pub fn recording_in_image(q: &Recording, lambda: &Partition, ell: usize) -> bool {
    assert!(lambda.length() <= ell, "lambda has at most ell parts");
    let mut m = vec![0usize; 2 * ell + 3];
    for &v in q.iter().flatten() {
        if v > 2 * ell {
            return false;
        }
        m[v] += 1;
    }
    for k in 1..=ell {
        if m[2 * k] < m[2 * k - 1] || m[2 * k] - m[2 * k - 1] != lambda[k - 1] {
            return false;
        }
        if recording_epsilon_phi(q, 2 * k - 1) != (lambda[k - 1], 0) {
            return false;
        }
    }
    for k in 1..ell {
        if m[2 * k] < m[2 * k + 2] {
            return false;
        }
        let gap = m[2 * k] - m[2 * k + 2];
        if recording_epsilon_phi(&recording_reflect(q, 2 * k + 1), 2 * k) != (0, gap) {
            return false;
        }
        let (eps, phi) = recording_epsilon_phi(&recording_reflect(q, 2 * k - 1), 2 * k);
        let step = lambda[k - 1] - lambda[k];
        // both coordinates must fall short of their bounds by the same p >= 0
        if eps > step || phi > gap || step - eps != gap - phi {
            return false;
        }
    }
    true
}

/// All recording tableaux with row lengths conjugate to `mu` over `[2 ell]`
/// that satisfy [`recording_in_image`] for the block parameters `lambda`.
/// Together with the semistandard tableaux of shape `mu` these pairs form
/// exactly the image of [`phi`] on tuples of `ell` blocks.
pub fn enumerate_image_recordings(
    mu: &Partition,
    lambda: &Partition,
    ell: usize,
) -> Vec<Recording> {
    crate::insertion::enumerate_recordings(&mu.conjugate(), 2 * ell)
        .into_iter()
        .filter(|q| recording_in_image(q, lambda, ell))
        .collect()
}

/// All blocks with parameter `a` and height at most `max_height`.
pub fn enumerate_blocks(alph: &GradedAlphabet, a: usize, max_height: usize) -> Vec<SpinorBlock> {
    let mut out = Vec::new();
    for height in a..=max_height.max(a) {
        if height < a {
            continue;
        }
        let c = height - a;
        for left in enumerate_columns(alph, height) {
            for right in enumerate_columns(alph, c) {
                if SpinorBlock::is_valid(alph, &left, &right) {
                    out.push(SpinorBlock {
                        left: left.clone(),
                        right,
                    });
                }
            }
        }
    }
    out
}

/// All tuples of blocks with parameters `lambda` (padded with zeros to
/// `ell` blocks) and every block height at most `max_height`, subject to the
/// interleaving chain condition.
pub fn enumerate_tuples(
    alph: &GradedAlphabet,
    lambda: &Partition,
    ell: usize,
    max_height: usize,
) -> Vec<BlockTuple> {
    assert!(lambda.length() <= ell, "lambda has at most ell parts");
    let per_block: Vec<Vec<SpinorBlock>> = (1..=ell)
        .map(|i| enumerate_blocks(alph, lambda[i - 1], max_height))
        .collect();
    let mut out = Vec::new();
    let mut partial: BlockTuple = Vec::new();
    fn extend(
        alph: &GradedAlphabet,
        per_block: &[Vec<SpinorBlock>],
        partial: &mut BlockTuple,
        out: &mut Vec<BlockTuple>,
    ) {
        if partial.len() == per_block.len() {
            out.push(partial.clone());
            return;
        }
        let idx = partial.len();
        for b in &per_block[idx] {
            if partial
                .last()
                .is_none_or(|prev| precedes(alph, b, prev))
            {
                partial.push(b.clone());
                extend(alph, per_block, partial, out);
                partial.pop();
            }
        }
    }
    extend(alph, &per_block, &mut partial, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::GradedAlphabet;
    use crate::tableau::parse_column;

    fn col(s: &str) -> Column {
        parse_column(s).unwrap()
    }

    fn block(alph: &GradedAlphabet, left: &str, right: &str) -> SpinorBlock {
        SpinorBlock::new(alph, col(left), col(right))
    }

    #[test]
    fn raising_a_block_mirrors_its_profile() {
        let a = GradedAlphabet::mixed(4, 3);
        let t = block(&a, "2 1' 1' 3'", "2' 2'");
        assert_eq!(t.a(), 2);
        let (l, r) = t.raised(&a);
        assert_eq!(l, col("1' 1'"));
        assert_eq!(r, col("2 2' 2' 3'"));
        let s = block(&a, "2 3 1'", "2 4");
        let (ls, rs) = s.raised(&a);
        assert_eq!(ls, col("2 3"));
        assert_eq!(rs, col("2 4 1'"));
    }

    #[test]
    fn interleaving_matches_the_worked_pair() {
        let a = GradedAlphabet::mixed(4, 3);
        let s = block(&a, "2 3 1'", "2 4");
        let t = block(&a, "1 3 1' 2'", "1 2'");
        assert!(precedes(&a, &s, &t));
        assert!(!precedes(&a, &t, &s), "parameter order rules out the reverse");
    }

    #[test]
    fn worked_triple_is_a_chain() {
        let a = GradedAlphabet::mixed(4, 3);
        let t3 = block(&a, "2 3 1'", "2 4");
        let t2 = block(&a, "1 3 1' 2'", "1 2'");
        let t1 = block(&a, "2 1' 1' 3' 3'", "2' 2'");
        assert!(is_chain(&a, &[t1, t2, t3]));
    }

    #[test]
    fn insertion_of_the_worked_triple() {
        let a = GradedAlphabet::mixed(4, 3);
        let t3 = block(&a, "2 3 1'", "2 4");
        let t2 = block(&a, "1 3 1' 2'", "1 2'");
        let t1 = block(&a, "2 1' 1' 3' 3'", "2' 2'");
        let (p, q) = phi(&a, &[t1, t2, t3]);
        assert_eq!(
            p,
            vec![
                col("1 2 3 1' 1'"),
                col("1 2 4 2'"),
                col("2 3 1' 3'"),
                col("1' 2' 2'"),
                col("2' 3'"),
            ]
        );
        assert_eq!(
            q,
            vec![
                vec![1, 1, 2, 2, 2],
                vec![2, 2, 3, 4],
                vec![3, 4, 4, 6],
                vec![4, 5, 5],
                vec![6, 6],
            ]
        );
        // the recording tableau lies in the image for lambda = (3, 2, 1)
        assert!(recording_in_image(&q, &Partition::new(vec![3, 2, 1]), 3));
        assert!(!recording_in_image(&q, &Partition::new(vec![3, 2]), 3));
        assert!(!recording_in_image(&q, &Partition::new(vec![2, 2, 1]), 3));
    }

    #[test]
    fn distances_of_the_worked_pairs() {
        let a = GradedAlphabet::mixed(4, 3);
        let t3 = block(&a, "2 3 1'", "4 2'");
        let t2 = block(&a, "1 2 1' 3'", "1 3 2'");
        let t1 = block(&a, "2 1' 1' 3'", "2' 2'");
        assert_eq!(skew_distance(&a, &t2, &t1), 1);
        assert_eq!(skew_distance(&a, &t3, &t2), 1);
        // after the first slide shortens the middle block, its distance to
        // the left block grows
        let t2_slid = block(&a, "1 2 1'", "1 3 2'");
        assert_eq!(skew_distance(&a, &t3, &t2_slid), 2);
        // admissibility is upward closed
        for d in 0..6 {
            assert_eq!(admissible_at(&a, &t2, &t1, d), d >= 1);
            assert_eq!(admissible_at(&a, &t3, &t2_slid, d), d >= 2);
        }
    }

    #[test]
    fn iota_roundtrips() {
        let a = GradedAlphabet::mixed(4, 3);
        let t2 = block(&a, "1 3 1' 2'", "1 2'");
        let t1 = block(&a, "2 1' 1' 3' 3'", "2' 2'");
        let tuple = vec![t1, t2];
        let cols = iota(&tuple);
        assert_eq!(cols[0], col("2' 2'"));
        assert_eq!(cols[1], col("2 1' 1' 3' 3'"));
        assert_eq!(iota_inverse(&a, &cols), tuple);
    }

    #[test]
    fn enumerate_blocks_counts_barred_columns() {
        let a = GradedAlphabet::barred(2);
        // height <= 2, parameter 0: empty block, four single rows of equal
        // letters plus (-2, -1) pairs in each column, and all two-row blocks
        let blocks = enumerate_blocks(&a, 0, 2);
        assert!(blocks.iter().all(|b| b.a() == 0));
        assert!(blocks.contains(&block(&a, "", "")));
        assert!(blocks.contains(&block(&a, "-2", "-1")));
        assert!(blocks.contains(&block(&a, "-2 -1", "-2 -1")));
        assert!(!blocks.iter().any(|b| b.height() > 2));
        // the empty block, three height-one blocks, one height-two block
        assert_eq!(blocks.len(), 5);
        let ones = enumerate_blocks(&a, 1, 2);
        assert!(ones.iter().all(|b| b.a() == 1 && b.height() <= 2));
        assert!(ones.contains(&block(&a, "-2 -1", "-2")));
    }

    #[test]
    fn enumerate_tuples_filters_chains() {
        let a = GradedAlphabet::barred(2);
        for tuple in enumerate_tuples(&a, &Partition::new(vec![1]), 2, 2) {
            assert_eq!(tuple.len(), 2);
            assert_eq!(tuple[0].a(), 1);
            assert_eq!(tuple[1].a(), 0);
            assert!(is_chain(&a, &tuple));
        }
    }
}
