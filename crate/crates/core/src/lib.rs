//! Generators, relations and normal forms for P^K, the direct product of
//! K copies of the additive semigroup of positive integers.
//!
//! The atoms (tuples with some coordinate equal to 1) form the minimum
//! generating set. The relations `x_a x_b = x_1^m x_c`, with
//! `m = μ(a+b) − 1` and `c = a + b − m·1`, present P^K on those atoms, and
//! every word reduces to a unique `x_1^m x_a`.
//!
//! All types are generic over the unsigned coordinate type; the aliases
//! below fix it to `u64` or `u32`.

mod error;
pub mod p2;
mod parse;
pub mod relation;
pub mod rewrite;
mod scalar;
pub mod tuple;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use p2::{p2_relation, P2Letter, P2Word};
pub use relation::{relation_for, Relation};
pub use rewrite::{normalize, words_equivalent, NormalForm};
pub use scalar::Coord;
pub use tuple::{atoms_below, Atom, BoxIter, Tuple};
pub use word::Word;

pub type Tuple64 = Tuple<u64>;
pub type Atom64 = Atom<u64>;
pub type Word64 = Word<u64>;
pub type NormalForm64 = NormalForm<u64>;
pub type Relation64 = Relation<u64>;

pub type Tuple32 = Tuple<u32>;
pub type Atom32 = Atom<u32>;
pub type Word32 = Word<u32>;
pub type NormalForm32 = NormalForm<u32>;
pub type Relation32 = Relation<u32>;
