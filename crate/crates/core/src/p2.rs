//! The relations of P² in the letters `x`, `y_a`, `z_a` (a ≥ 2).
//!
//! `x = x_(1,1)`, `y_a = x_(a,1)` and `z_a = x_(1,a)`. The right-hand sides
//! here are written out case by case rather than computed through
//! [`relation_for`](crate::relation::relation_for), so the two can be
//! checked against each other.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Coord;
use crate::tuple::{Atom, Tuple};
use crate::word::Word;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum P2Letter<T: Coord = u64> {
    X,
    Y(T),
    Z(T),
}

impl<T: Coord> P2Letter<T> {
    pub fn y(a: T) -> Result<Self> {
        Self::check_subscript(a).map(P2Letter::Y)
    }

    pub fn z(a: T) -> Result<Self> {
        Self::check_subscript(a).map(P2Letter::Z)
    }

    fn check_subscript(a: T) -> Result<T> {
        if a >= T::one() + T::one() {
            Ok(a)
        } else {
            Err(Error::InvalidLetter(format!(
                "subscript {a} must be at least 2"
            )))
        }
    }

    pub fn to_atom(self) -> Atom<T> {
        let one = T::one();
        let coords = match self {
            P2Letter::X => vec![one, one],
            P2Letter::Y(a) => vec![a, one],
            P2Letter::Z(a) => vec![one, a],
        };
        Atom::new(Tuple::new(coords).expect("positive coordinates")).expect("one coordinate is 1")
    }

    pub fn from_atom(atom: &Atom<T>) -> Result<Self> {
        match *atom.as_tuple().coords() {
            [a, b] if a.is_one() && b.is_one() => Ok(P2Letter::X),
            [a, b] if b.is_one() => Ok(P2Letter::Y(a)),
            [a, b] if a.is_one() => Ok(P2Letter::Z(b)),
            _ => Err(Error::InvalidLetter(format!("{atom} is not an atom of P2"))),
        }
    }

    /// `x`, then `y_2..=y_max`, then `z_2..=z_max`.
    pub fn up_to(max_subscript: T) -> Vec<Self> {
        let two = T::one() + T::one();
        let subscripts: Vec<T> = std::iter::successors(Some(two), |&a| a.checked_add(&T::one()))
            .take_while(|&a| a <= max_subscript)
            .collect();
        std::iter::once(P2Letter::X)
            .chain(subscripts.iter().map(|&a| P2Letter::Y(a)))
            .chain(subscripts.iter().map(|&a| P2Letter::Z(a)))
            .collect()
    }
}

impl<T: Coord> fmt::Display for P2Letter<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P2Letter::X => f.write_str("x"),
            P2Letter::Y(a) => write!(f, "y_{a}"),
            P2Letter::Z(a) => write!(f, "z_{a}"),
        }
    }
}

/// A word over the P² letters.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct P2Word<T: Coord = u64>(pub Vec<P2Letter<T>>);

impl<T: Coord> P2Word<T> {
    pub fn to_word(&self) -> Result<Word<T>> {
        Word::new(self.0.iter().map(|l| l.to_atom()).collect())
    }
}

impl<T: Coord> fmt::Display for P2Word<T> {
    /// Runs of `x` are written as powers: `x^2 z_2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if self.0[i] == P2Letter::X {
                let run = self.0[i..]
                    .iter()
                    .take_while(|&&l| l == P2Letter::X)
                    .count();
                if run == 1 {
                    f.write_str("x")?;
                } else {
                    write!(f, "x^{run}")?;
                }
                i += run;
            } else {
                write!(f, "{}", self.0[i])?;
                i += 1;
            }
        }
        Ok(())
    }
}

/// The other side of the relation whose left side is `p q`.
pub fn p2_relation<T: Coord>(p: P2Letter<T>, q: P2Letter<T>) -> Result<P2Word<T>> {
    use P2Letter::{X, Y, Z};

    let one = T::one();
    let overflow = || Error::Overflow("a P2 subscript");
    let count = |n: T| n.to_count().ok_or_else(overflow);
    let xs = |n: usize| std::iter::repeat_n(X, n);

    let rhs = match (p, q) {
        (X, X) => vec![X, X],
        (X, l @ (Y(_) | Z(_))) => vec![l, X],
        (l @ (Y(_) | Z(_)), X) => vec![X, l],
        (Y(a), Y(b)) => vec![X, Y(a.checked_add(&b).ok_or_else(overflow)? - one)],
        (Z(a), Z(b)) => vec![X, Z(a.checked_add(&b).ok_or_else(overflow)? - one)],
        (Y(a), Z(b)) | (Z(b), Y(a)) => {
            if a < b {
                xs(count(a)?).chain([Z(b - a + one)]).collect()
            } else if a == b {
                xs(count(a)? + 1).collect()
            } else {
                xs(count(b)?).chain([Y(a - b + one)]).collect()
            }
        }
    };
    Ok(P2Word(rhs))
}
