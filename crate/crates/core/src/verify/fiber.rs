use crate::error::{Error, Result};
use crate::scalar::Coord;
use crate::tuple::{atoms_below, Atom, Tuple};
use crate::word::Word;

/// Every word that evaluates to `target`, sorted lexicographically by
/// letter sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber<T: Coord = u64> {
    pub target: Tuple<T>,
    pub words: Vec<Word<T>>,
}

impl<T: Coord> Fiber<T> {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word<T>) -> bool {
        self.position(w).is_some()
    }

    pub fn position(&self, w: &Word<T>) -> Option<usize> {
        self.words.binary_search(w).ok()
    }
}

/// Enumerates all factorizations of `target` into ordered sequences of
/// atoms. Fails once more than `guard` words have been produced.
pub fn enumerate_fiber<T: Coord>(target: &Tuple<T>, guard: usize) -> Result<Fiber<T>> {
    let mut words = Vec::new();
    let mut prefix = Vec::new();
    extend(target, target, &mut prefix, &mut words, guard)?;
    Ok(Fiber {
        target: target.clone(),
        words,
    })
}

// Depth-first over the first letter in increasing order. A word ending at a
// letter precedes every word that continues past it, so output is sorted.
fn extend<T: Coord>(
    target: &Tuple<T>,
    remaining: &Tuple<T>,
    prefix: &mut Vec<Atom<T>>,
    out: &mut Vec<Word<T>>,
    guard: usize,
) -> Result<()> {
    for a in atoms_below(remaining) {
        if a.as_tuple() == remaining {
            prefix.push(a);
            out.push(Word::new(prefix.clone())?);
            prefix.pop();
            if out.len() > guard {
                return Err(Error::GuardExceeded {
                    target: target.to_string(),
                    bound: guard,
                    what: "words in the fiber",
                });
            }
        } else if let Some(rest) = remaining.checked_sub(a.as_tuple()) {
            prefix.push(a);
            extend(target, &rest, prefix, out, guard)?;
            prefix.pop();
        }
    }
    Ok(())
}
