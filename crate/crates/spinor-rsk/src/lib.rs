//! A symplectic analogue of the RSK correspondence for spinor models over
//! Z2-graded alphabets.
//!
//! The crate provides, layer by layer:
//!
//! * [`alphabet`]: graded ordered alphabets and letters;
//! * [`partition`]: integer partitions;
//! * [`tableau`]: columns and skew tableaux at explicit offsets;
//! * [`crystal`]: jeu-de-taquin crystal operators on column pairs and tuples;
//! * [`insertion`]: graded column insertion and its recording tableau;
//! * [`spinor`]: one-column spinor blocks and the spinor model of type C;
//! * [`kn`]: Kashiwara–Nakashima columns and tableaux, splitting, the type-C
//!   plactic monoid, column insertion and jeu de taquin;
//! * [`sliding`]: sliding for spinor tuples, insertion tableaux, conjugates;
//! * [`oscillating`]: oscillating tableaux, their splitting, and King
//!   tableaux;
//! * [`rsk`]: the symplectic RSK correspondence and its inverse;
//! * [`characters`]: symplectic/spinor characters and identity checks.

pub mod alphabet;
pub mod characters;
pub mod crystal;
pub mod insertion;
pub mod kn;
pub mod oscillating;
pub mod partition;
pub mod rsk;
pub mod sliding;
pub mod spinor;
pub mod tableau;
