use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{PrimInt, Unsigned};

/// Coordinate type for elements of P^K.
///
/// Any unsigned machine integer works. All arithmetic on coordinates goes
/// through the checked operations of [`PrimInt`], so a narrow type such as
/// `u8` reports overflow instead of wrapping.
pub trait Coord:
    PrimInt + Unsigned + Hash + Debug + Display + FromStr + Send + Sync + 'static
{
    /// Converts a count into a coordinate, failing if it does not fit.
    fn from_count(n: usize) -> Option<Self> {
        Self::from(n)
    }

    /// Converts a coordinate into a count, failing if it does not fit.
    fn to_count(self) -> Option<usize> {
        self.to_usize()
    }
}

impl<T> Coord for T where
    T: PrimInt + Unsigned + Hash + Debug + Display + FromStr + Send + Sync + 'static
{
}
