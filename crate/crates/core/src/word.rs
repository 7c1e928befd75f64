//! Words of the free semigroup over the atom alphabet.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::parse::Cursor;
use crate::scalar::Coord;
use crate::tuple::{Atom, Tuple};

/// A nonempty sequence of letters `x_a`, each identified with its atom `a`.
///
/// Equality is letter-sequence equality. Use
/// [`words_equivalent`](crate::rewrite::words_equivalent) for equality in P^K.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word<T: Coord = u64> {
    letters: Vec<Atom<T>>,
}

impl<T: Coord> Word<T> {
    pub fn new(letters: Vec<Atom<T>>) -> Result<Self> {
        let first = letters.first().ok_or(Error::EmptyWord)?;
        if let Some(bad) = letters.iter().find(|a| a.dim() != first.dim()) {
            return Err(Error::DimensionMismatch {
                left: first.dim(),
                right: bad.dim(),
            });
        }
        Ok(Word { letters })
    }

    pub fn letter(a: Atom<T>) -> Self {
        Word { letters: vec![a] }
    }

    pub fn letters(&self) -> &[Atom<T>] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Atom<T>> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Always false; words are nonempty.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.letters[0].dim()
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word { letters })
    }

    /// The image under the evaluation morphism `x_a ↦ a`: the
    /// coordinatewise sum of the letters.
    pub fn evaluate(&self) -> Result<Tuple<T>> {
        let mut letters = self.letters.iter();
        let first = letters
            .next()
            .expect("words are nonempty")
            .as_tuple()
            .clone();
        letters.try_fold(first, |acc, a| acc.checked_add(a.as_tuple()))
    }
}

impl<T: Coord> fmt::Display for Word<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl<T: Coord> fmt::Debug for Word<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl<T: Coord> FromStr for Word<T> {
    type Err = Error;

    /// Parses `(2,1).(1,3)`. Non-atom letters and mixed dimensions are
    /// rejected with the offset of the offending letter.
    fn from_str(s: &str) -> Result<Self> {
        let mut cursor = Cursor::new(s);
        if cursor.at_end() {
            return Err(cursor.error("empty word"));
        }
        let mut letters: Vec<Atom<T>> = Vec::new();
        loop {
            cursor.skip_ws();
            let start = cursor.offset();
            let at_start = |e: Error| Error::Parse {
                offset: start,
                message: e.to_string(),
            };
            let atom = cursor
                .tuple_coords()
                .and_then(|coords| Tuple::new(coords).and_then(Atom::new).map_err(at_start))?;
            if let Some(first) = letters.first() {
                if first.dim() != atom.dim() {
                    return Err(at_start(Error::DimensionMismatch {
                        left: first.dim(),
                        right: atom.dim(),
                    }));
                }
            }
            letters.push(atom);
            if cursor.at_end() {
                break;
            }
            cursor.expect('.')?;
        }
        Ok(Word { letters })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn t(s: &str) -> Tuple {
        s.parse().unwrap()
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(w("(1,1)").evaluate().unwrap(), t("(1,1)"));
        assert_eq!(w("(2,1).(1,3)").evaluate().unwrap(), t("(3,4)"));
        assert_eq!(w("(1,1).(1,1).(2,1)").evaluate().unwrap(), t("(4,3)"));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "".parse::<Word>(),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!("   ".parse::<Word>(), Err(Error::Parse { .. })));
        assert!(matches!(
            "(2,1).(1,3".parse::<Word>(),
            Err(Error::Parse { offset: 11, .. })
        ));
        assert!(matches!(
            "(2,1).".parse::<Word>(),
            Err(Error::Parse { offset: 7, .. })
        ));
        assert!(matches!(
            "(2,1)(1,1)".parse::<Word>(),
            Err(Error::Parse { offset: 6, .. })
        ));
        match "(2,1).(1,1,1)".parse::<Word>() {
            Err(Error::Parse { offset, message }) => {
                assert_eq!(offset, 7);
                assert!(message.contains("dimension 2 vs dimension 3"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
        match "(1,1).(2,2)".parse::<Word>() {
            Err(Error::Parse { offset, message }) => {
                assert_eq!(offset, 7);
                assert!(message.contains("not an atom"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn whitespace_is_normalized() {
        assert_eq!(w(" (2, 1) . (1,3)\t").to_string(), "(2,1).(1,3)");
    }

    #[test]
    fn new_checks() {
        assert_eq!(Word::<u64>::new(vec![]), Err(Error::EmptyWord));
        let a: Atom = "(1,1)".parse().unwrap();
        let b: Atom = "(1)".parse().unwrap();
        assert!(matches!(
            Word::new(vec![a, b]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn concat_is_morphism_example() {
        let u = w("(2,1)");
        let v = w("(1,3).(1,1)");
        let uv = u.concat(&v).unwrap();
        assert_eq!(uv, w("(2,1).(1,3).(1,1)"));
        assert_eq!(
            uv.evaluate().unwrap(),
            u.evaluate()
                .unwrap()
                .checked_add(&v.evaluate().unwrap())
                .unwrap()
        );
    }
}
