//! Jeu de taquin for tuples of two-column blocks of skew shape.
//!
//! A tuple of blocks `(T_l, ..., T_1)` of skew shape `lambda/mu` places block
//! `T_i` raised `mu_i` rows above the baseline of the bottom-aligned
//! configuration; the widths are `a_i = lambda_i - mu_i`.  The tuple is
//! admissible when every adjacent pair satisfies [`admissible_at`] at its
//! relative raise ([`SkewSpinor`]).
//!
//! An inner corner sits at block `i` whenever `mu_i > mu_(i+1)`.  Sliding at
//! the corner ([`jdt_spin`]) applies a short composite of the tuple crystal
//! operators to the pair `(T_(i+1), T_i)` ([`jdt_spin_pair`]) and pushes the
//! exchange rightward through further pairs while they fail to interleave;
//! repeating at inner corners reaches a unique straight-shape tuple, the
//! P-tableau ([`p_tableau_spin`]).
//!
//! Over the barred alphabet the whole process mirrors the symplectic jeu de
//! taquin of Kashiwara–Nakashima tableaux column by column; for a general
//! alphabet the bridge is the rank-`n` conjugate ([`n_conjugate`]), the
//! barred tuple with the same recording tableau and highest-weight insertion
//! tableau.

use crate::alphabet::GradedAlphabet;
use crate::crystal::{tuple_e, tuple_epsilon, tuple_f};
use crate::insertion::{highest_weight_columns, kappa_inverse};
use crate::partition::Partition;
use crate::spinor::{
    admissible_at, iota, iota_inverse, phi, skew_distance, tuple_floor, BlockTuple, SpinorBlock,
};
use crate::tableau::SkewTableau;

/// A tuple of blocks `(T_l, ..., T_1)` of skew shape, stored with `T_1`
/// first together with the raises `(mu_1, ..., mu_l)`.  The raises are kept
/// canonical: `mu_l = 0`, since raising every block equally does not change
/// the bottom-aligned configuration.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewSpinor {
    blocks: BlockTuple,
    raises: Vec<usize>,
}

impl SkewSpinor {
    /// Builds and validates a skew tuple; the raises are canonicalized.
    pub fn new(alph: &GradedAlphabet, blocks: BlockTuple, mut raises: Vec<usize>) -> Self {
        assert_eq!(blocks.len(), raises.len(), "one raise per block");
        let base = raises.last().copied().unwrap_or(0);
        for m in &mut raises {
            *m -= base;
        }
        assert!(
            raises.windows(2).all(|w| w[0] >= w[1]),
            "raises weakly decrease toward the leftmost block"
        );
        let skew = SkewSpinor { blocks, raises };
        assert!(skew.is_admissible(alph), "adjacent blocks fail their mixed configurations");
        skew
    }

    /// A straight-shape tuple: every raise zero.
    pub fn straight(alph: &GradedAlphabet, blocks: BlockTuple) -> Self {
        let raises = vec![0; blocks.len()];
        Self::new(alph, blocks, raises)
    }

    /// The blocks, rightmost first.
    pub fn blocks(&self) -> &BlockTuple {
        &self.blocks
    }

    /// The raises `(mu_1, ..., mu_l)`, rightmost first.
    pub fn raises(&self) -> &[usize] {
        &self.raises
    }

    /// Whether every adjacent pair is admissible at its relative raise.
    pub fn is_admissible(&self, alph: &GradedAlphabet) -> bool {
        (1..self.blocks.len()).all(|i| {
            admissible_at(
                alph,
                &self.blocks[i],
                &self.blocks[i - 1],
                self.raises[i - 1] - self.raises[i],
            )
        })
    }

    /// The inner shape `mu`.
    pub fn inner(&self) -> Partition {
        Partition::new(self.raises.clone())
    }

    /// The outer shape `lambda`, with `lambda_i = mu_i + a_i`.
    pub fn outer(&self) -> Partition {
        let parts = self
            .raises
            .iter()
            .zip(&self.blocks)
            .map(|(&m, b)| m + b.a())
            .collect();
        Partition::new(parts)
    }

    /// Blocks `i` with an inner corner: `mu_i > mu_(i+1)`, listed from the
    /// rightmost corner.
    pub fn corners(&self) -> Vec<usize> {
        (1..self.blocks.len())
            .filter(|&i| self.raises[i - 1] > self.raises[i])
            .collect()
    }

    /// Whether the shape is straight.
    pub fn is_straight(&self) -> bool {
        self.raises.iter().all(|&m| m == 0)
    }

    /// The whole tuple as one bottom-aligned configuration.
    pub fn to_floor(&self) -> SkewTableau {
        tuple_floor(&self.blocks, &self.raises)
    }
}

impl std::fmt::Display for SkewSpinor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.to_floor().fmt(f)
    }
}

/// The default rank for conjugation: total cells plus the number of blocks,
/// comfortably at least the number of rows of the insertion tableau.
pub fn conjugate_rank(blocks: &[SpinorBlock]) -> i32 {
    let cells: usize = blocks.iter().map(|b| b.left().len() + b.right().len()).sum();
    (cells + blocks.len()) as i32
}

/// The rank-`n` conjugate of a tuple of blocks: the unique tuple over the
/// barred alphabet on `n` letters whose insertion gives the highest-weight
/// tableau of the same shape with the same recording tableau.  Replacing `n`
/// by `m > n` shifts every letter by `m - n`.
///
/// Panics when `n` is smaller than the number of rows of the insertion
/// tableau.
pub fn n_conjugate(alph: &GradedAlphabet, blocks: &[SpinorBlock], n: i32) -> BlockTuple {
    let (p, q) = phi(alph, &blocks.to_vec());
    let depth = p.first().map_or(0, |c| c.len());
    assert!(
        n >= depth as i32,
        "rank {n} is smaller than the {depth} rows of the insertion tableau"
    );
    let heights = Partition::new(p.iter().map(|c| c.len()).collect());
    let barred = GradedAlphabet::barred(n);
    let h = highest_weight_columns(n, &heights.conjugate());
    let tuple = kappa_inverse(&barred, &h, &q, 2 * blocks.len());
    iota_inverse(&barred, &tuple)
}

/// Whether a bottom-aligned pair of columns forms a semistandard skew
/// configuration: the raises ascend rightward, the column tops ascend
/// rightward, and the cells are semistandard.
fn floor_ok(alph: &GradedAlphabet, cols: Vec<crate::tableau::Column>, raises: &[usize]) -> bool {
    raises.windows(2).all(|w| w[0] <= w[1])
        && cols
            .iter()
            .zip(raises)
            .map(|(c, &u)| c.len() + u)
            .collect::<Vec<_>>()
            .windows(2)
            .all(|w| w[0] <= w[1])
        && SkewTableau::floor(cols, raises).is_semistandard(alph)
}

/// One sliding exchange on an adjacent pair of blocks `(t2, t1)` whose
/// distance `d` is positive: a letter moves from the left block to the right
/// one (or the left block re-balances), after which the pair is admissible
/// with the right block raised `d - 1`.  Returns the new pair and the excess
/// `eps`: the widths become `(a_2 + 2 eps - 1, a_1 + 1)`, and `eps = 1`
/// marks the contracting slide that leaves the corner cell unabsorbed.
pub fn jdt_spin_pair(
    alph: &GradedAlphabet,
    t2: &SpinorBlock,
    t1: &SpinorBlock,
) -> (SpinorBlock, SpinorBlock, usize) {
    let d = skew_distance(alph, t2, t1);
    assert!(d > 0, "the pair already interleaves");
    let (a2, a1) = (t2.a(), t1.a());
    let mut cols = iota(&[t1.clone(), t2.clone()]);
    let (_, r2) = t2.raised(alph);
    let eps;
    if !floor_ok(alph, vec![r2, t1.left().clone()], &[0, d - 1]) {
        for _ in 0..a2 {
            cols = tuple_e(alph, &cols, 3).expect("the left block raises fully");
        }
        cols = tuple_e(alph, &cols, 2).expect("the exchange step applies");
        eps = tuple_epsilon(alph, &cols, 3);
        assert!(eps <= 1, "at most one excess raise remains after the exchange");
        let down = (a2 + eps).checked_sub(1).expect("a width-zero left block forces an excess");
        for _ in 0..down {
            cols = tuple_f(alph, &cols, 3).expect("the left block lowers back");
        }
    } else {
        let (l1, _) = t1.raised(alph);
        assert!(
            !floor_ok(alph, vec![t2.right().clone(), l1], &[a2, d - 1 + a1]),
            "one of the two mixed configurations fails one row lower"
        );
        eps = 0;
        for _ in 0..a1 {
            cols = tuple_e(alph, &cols, 1).expect("the right block raises fully");
        }
        cols = tuple_f(alph, &cols, 2).expect("the exchange step applies");
        for _ in 0..=a1 {
            cols = tuple_f(alph, &cols, 1).expect("the right block lowers back");
        }
    }
    let out = iota_inverse(alph, &cols);
    let (t1p, t2p) = (out[0].clone(), out[1].clone());
    assert_eq!(t2p.a(), a2 + 2 * eps - 1, "left width moves by one");
    assert_eq!(t1p.a(), a1 + 1, "right width grows by one");
    assert!(skew_distance(alph, &t2p, &t1p) < d, "the distance decreases");
    (t2p, t1p, eps)
}

/// Slides at the inner corner of block `corner`: if the pair to its left is
/// admissible one row lower the corner cell is simply absorbed; otherwise
/// the pair exchanges and the slide continues rightward through every pair
/// it breaks.  A contracting exchange (`eps = 1`) leaves the raises — and
/// with them the corner — untouched, matching the column contraction of the
/// symplectic jeu de taquin.
pub fn jdt_spin(alph: &GradedAlphabet, skew: &SkewSpinor, corner: usize) -> SkewSpinor {
    let l = skew.blocks.len();
    assert!(corner >= 1 && corner < l, "corner indexes an adjacent pair");
    let mut blocks = skew.blocks.clone();
    let mut raises = skew.raises.clone();
    let i = corner;
    let delta = raises[i - 1] - raises[i];
    assert!(delta > 0, "block {i} from the right has no inner corner");
    let d = skew_distance(alph, &blocks[i], &blocks[i - 1]);
    assert!(d <= delta, "adjacent blocks are admissible at their offset");
    if d == delta {
        let (t2, t1, eps) = jdt_spin_pair(alph, &blocks[i], &blocks[i - 1]);
        blocks[i] = t2;
        blocks[i - 1] = t1;
        if eps == 0 {
            raises[i] += 1;
        }
        let mut k = i - 1;
        while k >= 1 {
            let rel = raises[k - 1] - raises[k];
            let dk = skew_distance(alph, &blocks[k], &blocks[k - 1]);
            if dk <= rel {
                break;
            }
            assert_eq!(dk, rel + 1, "the slide advances one row at a time");
            let (t2, t1, ek) = jdt_spin_pair(alph, &blocks[k], &blocks[k - 1]);
            assert_eq!(ek, 0, "only the starting block contracts");
            blocks[k] = t2;
            blocks[k - 1] = t1;
            k -= 1;
        }
    } else {
        raises[i] += 1;
    }
    SkewSpinor::new(alph, blocks, raises)
}

/// Rectifies a skew tuple by sliding at the rightmost inner corner until the
/// shape is straight, reaching the unique P-tableau; the result does not
/// depend on the corner order.
pub fn p_tableau_spin(alph: &GradedAlphabet, skew: &SkewSpinor) -> SkewSpinor {
    let mut cur = skew.clone();
    let cells: usize = cur.blocks.iter().map(|b| b.left().len() + b.right().len()).sum();
    let total = cells + cur.raises.iter().sum::<usize>() + cur.blocks.len() + 4;
    let budget = total * total;
    let mut steps = 0;
    while let Some(&i) = cur.corners().first() {
        cur = jdt_spin(alph, &cur, i);
        steps += 1;
        assert!(steps <= budget, "sliding terminates within the step budget");
    }
    cur
}
