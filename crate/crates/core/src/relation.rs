//! The defining relations `x_a x_b = x_1^m x_c`.

use std::fmt;

use crate::error::Result;
use crate::scalar::Coord;
use crate::tuple::Atom;

/// One instance of the relation schema, oriented from the length-2 side
/// `x_a x_b` to the normal side `x_1^m x_c`, where `m = μ(a+b) − 1` and
/// `c = a + b − m·1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Relation<T: Coord = u64> {
    pub lhs: (Atom<T>, Atom<T>),
    pub m: T,
    pub c: Atom<T>,
}

impl<T: Coord> Relation<T> {
    /// Whether both sides are the same word. Only `x_1 x_b = x_1 x_b` is.
    pub fn is_trivial(&self) -> bool {
        self.lhs.0.is_one() && self.m.is_one() && self.lhs.1 == self.c
    }
}

/// The relation whose left side is `x_a x_b`.
///
/// Fails only on a dimension mismatch or coordinate overflow.
pub fn relation_for<T: Coord>(a: &Atom<T>, b: &Atom<T>) -> Result<Relation<T>> {
    let sum = a.as_tuple().checked_add(b.as_tuple())?;
    let (m, c) = sum.decompose();
    debug_assert!(m >= T::one());
    Ok(Relation {
        lhs: (a.clone(), b.clone()),
        m,
        c,
    })
}

impl<T: Coord> fmt::Display for Relation<T> {
    /// Renders as `x(2,1) x(1,3) = x(1,1)^2 x(1,2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = Atom::<T>::one(self.c.dim());
        write!(
            f,
            "x{} x{} = x{}^{} x{}",
            self.lhs.0, self.lhs.1, one, self.m, self.c
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn atom(s: &str) -> Atom {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let r = relation_for(&atom("(1,1)"), &atom("(1,3)")).unwrap();
        assert_eq!((r.m, r.c.clone()), (1, atom("(1,3)")));
        assert!(r.is_trivial());

        let r = relation_for(&atom("(2,1)"), &atom("(1,3)")).unwrap();
        assert_eq!((r.m, r.c.clone()), (2, atom("(1,2)")));
        assert_eq!(r.to_string(), "x(2,1) x(1,3) = x(1,1)^2 x(1,2)");

        let r = relation_for(&atom("(2,1)"), &atom("(1,1)")).unwrap();
        assert_eq!((r.m, r.c.clone()), (1, atom("(2,1)")));
        assert!(!r.is_trivial());
    }

    #[test]
    fn dimension_mismatch() {
        assert_eq!(
            relation_for(&atom("(2,1)"), &atom("(1,1,1)")),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn overflow() {
        let a: Atom<u8> = "(250,1)".parse().unwrap();
        assert!(matches!(relation_for(&a, &a), Err(Error::Overflow(_))));
    }
}
