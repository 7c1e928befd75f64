//! Reduction of words to the normal form `x_1^m x_a`.

use std::fmt;

use crate::error::{Error, Result};
use crate::relation::relation_for;
use crate::scalar::Coord;
use crate::tuple::{Atom, Tuple};
use crate::word::Word;

/// The word `x_1^m x_head`, kept as the pair `(m, head)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NormalForm<T: Coord = u64> {
    pub m: T,
    pub head: Atom<T>,
}

impl<T: Coord> NormalForm<T> {
    /// The normal form of a tuple.
    pub fn of_tuple(t: &Tuple<T>) -> Self {
        let (m, head) = t.decompose();
        NormalForm { m, head }
    }

    /// `m·1 + head`.
    pub fn value(&self) -> Result<Tuple<T>> {
        self.head.as_tuple().add_diagonal(self.m)
    }

    /// The denoted word: `m` copies of `x_1` followed by `x_head`.
    pub fn expand(&self) -> Result<Word<T>> {
        let count = self
            .m
            .to_count()
            .ok_or(Error::Overflow("a normal form expansion"))?;
        let mut letters = vec![Atom::one(self.head.dim()); count];
        letters.push(self.head.clone());
        Word::new(letters)
    }
}

impl<T: Coord> fmt::Display for NormalForm<T> {
    /// Renders as `1^2 . (1,2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1^{} . {}", self.m, self.head)
    }
}

/// Left fold over the word: the accumulator `x_1^n x_b` absorbs the next
/// letter `x_a` through the relation `x_b x_a = x_1^q x_c`, giving
/// `x_1^(n+q) x_c`.
pub fn normalize<T: Coord>(w: &Word<T>) -> Result<NormalForm<T>> {
    let (first, rest) = w.letters().split_first().expect("words are nonempty");
    rest.iter().try_fold(
        NormalForm {
            m: T::zero(),
            head: first.clone(),
        },
        |acc, a| {
            let rel = relation_for(&acc.head, a)?;
            let m = acc
                .m
                .checked_add(&rel.m)
                .ok_or(Error::Overflow("a normal form exponent"))?;
            Ok(NormalForm { m, head: rel.c })
        },
    )
}

/// Whether `u` and `v` are equal in P^K, decided by comparing normal forms.
pub fn words_equivalent<T: Coord>(u: &Word<T>, v: &Word<T>) -> Result<bool> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    Ok(normalize(u)? == normalize(v)?)
}
