//! Elements of P^K and the atoms among them.

use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::parse::Cursor;
use crate::scalar::Coord;

/// An element of P^K: a fixed-length sequence of coordinates, each at least 1.
///
/// Ordering is lexicographic by coordinate index.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tuple<T: Coord = u64> {
    coords: Box<[T]>,
}

impl<T: Coord> Tuple<T> {
    pub fn new(coords: Vec<T>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyTuple);
        }
        if let Some(index) = coords.iter().position(|c| c.is_zero()) {
            return Err(Error::NonPositiveCoordinate {
                index,
                value: coords[index].to_string(),
            });
        }
        Ok(Tuple {
            coords: coords.into_boxed_slice(),
        })
    }

    /// The all-ones tuple of the given dimension.
    ///
    /// Panics if `dim == 0`.
    pub fn ones(dim: usize) -> Self {
        Self::diagonal(dim, T::one())
    }

    /// The tuple `(v, v, ..., v)`. Panics if `dim == 0` or `v == 0`.
    pub fn diagonal(dim: usize, v: T) -> Self {
        assert!(dim > 0, "P^K needs at least one coordinate");
        assert!(!v.is_zero(), "diagonal value must be positive");
        Tuple {
            coords: vec![v; dim].into_boxed_slice(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    /// μ: the smallest coordinate.
    pub fn mu(&self) -> T {
        *self.coords.iter().min().expect("tuples are nonempty")
    }

    /// An element is an atom iff some coordinate equals 1.
    pub fn is_atom(&self) -> bool {
        self.coords.iter().any(|c| c.is_one())
    }

    pub fn is_ones(&self) -> bool {
        self.coords.iter().all(|c| c.is_one())
    }

    /// Writes `self = m·1 + b` with `m = μ − 1`; `b` is the unique atom with
    /// this property.
    pub fn decompose(&self) -> (T, Atom<T>) {
        let m = self.mu() - T::one();
        let b = self
            .sub_diagonal(m)
            .expect("subtracting mu - 1 keeps every coordinate positive");
        (m, Atom(b))
    }

    pub fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let coords = self
            .coords
            .iter()
            .zip(other.coords.iter())
            .map(|(a, b)| a.checked_add(b).ok_or(Error::Overflow("a tuple sum")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Tuple {
            coords: coords.into_boxed_slice(),
        })
    }

    /// `self + m·1`. `m` may be zero.
    pub fn add_diagonal(&self, m: T) -> Result<Self> {
        let coords = self
            .coords
            .iter()
            .map(|a| a.checked_add(&m).ok_or(Error::Overflow("a diagonal shift")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Tuple {
            coords: coords.into_boxed_slice(),
        })
    }

    /// `self − m·1`, or `None` if some coordinate would drop below 1.
    pub fn sub_diagonal(&self, m: T) -> Option<Self> {
        if self.mu() <= m {
            return None;
        }
        Some(Tuple {
            coords: self.coords.iter().map(|&a| a - m).collect(),
        })
    }

    /// `self − other`, or `None` if the dimensions differ or the result
    /// leaves P^K.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if self.dim() != other.dim() {
            return None;
        }
        let mut coords = Vec::with_capacity(self.dim());
        for (&a, &b) in self.coords.iter().zip(other.coords.iter()) {
            if a <= b {
                return None;
            }
            coords.push(a - b);
        }
        Some(Tuple {
            coords: coords.into_boxed_slice(),
        })
    }

    /// Coordinatewise `self <= other`.
    pub fn le_coordwise(&self, other: &Self) -> bool {
        self.dim() == other.dim()
            && self
                .coords
                .iter()
                .zip(other.coords.iter())
                .all(|(a, b)| a <= b)
    }
}

impl<T: Coord> Add for &Tuple<T> {
    type Output = Tuple<T>;

    /// Panics on dimension mismatch or overflow; use [`Tuple::checked_add`]
    /// to handle those.
    fn add(self, rhs: Self) -> Tuple<T> {
        match self.checked_add(rhs) {
            Ok(t) => t,
            Err(e) => panic!("{self} + {rhs}: {e}"),
        }
    }
}

impl<T: Coord> Sub for &Tuple<T> {
    type Output = Tuple<T>;

    /// Panics if the difference is not an element of P^K.
    fn sub(self, rhs: Self) -> Tuple<T> {
        match self.checked_sub(rhs) {
            Some(t) => t,
            None => panic!("{self} - {rhs} is not an element of P^K"),
        }
    }
}

impl<T: Coord> fmt::Display for Tuple<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl<T: Coord> fmt::Debug for Tuple<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<T: Coord> FromStr for Tuple<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cursor = Cursor::new(s);
        let coords = cursor.tuple_coords()?;
        cursor.finish()?;
        Tuple::new(coords)
    }
}

/// A tuple with at least one coordinate equal to 1. Atoms are exactly the
/// elements that are not a sum of two elements, and they form the minimum
/// generating set of P^K.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom<T: Coord = u64>(Tuple<T>);

impl<T: Coord> Atom<T> {
    pub fn new(t: Tuple<T>) -> Result<Self> {
        if t.is_atom() {
            Ok(Atom(t))
        } else {
            Err(Error::NotAtom(t.to_string()))
        }
    }

    /// The atom **1** of the given dimension.
    pub fn one(dim: usize) -> Self {
        Atom(Tuple::ones(dim))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_ones()
    }

    pub fn as_tuple(&self) -> &Tuple<T> {
        &self.0
    }

    pub fn into_tuple(self) -> Tuple<T> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }
}

impl<T: Coord> AsRef<Tuple<T>> for Atom<T> {
    fn as_ref(&self) -> &Tuple<T> {
        &self.0
    }
}

impl<T: Coord> TryFrom<Tuple<T>> for Atom<T> {
    type Error = Error;

    fn try_from(t: Tuple<T>) -> Result<Self> {
        Atom::new(t)
    }
}

impl<T: Coord> From<Atom<T>> for Tuple<T> {
    fn from(a: Atom<T>) -> Self {
        a.0
    }
}

impl<T: Coord> fmt::Display for Atom<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl<T: Coord> fmt::Debug for Atom<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl<T: Coord> FromStr for Atom<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Atom::new(s.parse()?)
    }
}

/// Iterates over every tuple `t` with `lower <= t <= upper` coordinatewise,
/// in lexicographic order. Empty if the bounds are incomparable.
#[derive(Debug, Clone)]
pub struct BoxIter<T: Coord> {
    lower: Vec<T>,
    upper: Vec<T>,
    next: Option<Vec<T>>,
}

impl<T: Coord> BoxIter<T> {
    pub fn new(lower: &Tuple<T>, upper: &Tuple<T>) -> Self {
        let next = lower.le_coordwise(upper).then(|| lower.coords.to_vec());
        BoxIter {
            lower: lower.coords.to_vec(),
            upper: upper.coords.to_vec(),
            next,
        }
    }

    /// All of `[1, bound]^dim`.
    pub fn cube(dim: usize, bound: T) -> Self {
        if bound.is_zero() {
            let mut it = Self::new(&Tuple::ones(dim), &Tuple::ones(dim));
            it.next = None;
            return it;
        }
        Self::new(&Tuple::ones(dim), &Tuple::diagonal(dim, bound))
    }
}

impl<T: Coord> Iterator for BoxIter<T> {
    type Item = Tuple<T>;

    fn next(&mut self) -> Option<Tuple<T>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if succ[i] < self.upper[i] {
                succ[i] = succ[i] + T::one();
                self.next = Some(succ);
                break;
            }
            succ[i] = self.lower[i];
        }
        Some(Tuple {
            coords: current.into_boxed_slice(),
        })
    }
}

/// Every atom `a` with `a <= upper` coordinatewise, in lexicographic order.
pub fn atoms_below<T: Coord>(upper: &Tuple<T>) -> impl Iterator<Item = Atom<T>> {
    BoxIter::new(&Tuple::ones(upper.dim()), upper).filter_map(|t| Atom::new(t).ok())
}
