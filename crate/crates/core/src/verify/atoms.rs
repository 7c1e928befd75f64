use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::scalar::Coord;
use crate::tuple::{BoxIter, Tuple};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AtomFailure<T: Coord = u64> {
    /// `is_atom` disagrees with exhaustive search for a two-term sum.
    Characterization { tuple: Tuple<T>, is_atom: bool },
    /// The tuple is not reachable by adding atoms inside the box.
    NotGenerated(Tuple<T>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomReport<T: Coord = u64> {
    pub dim: usize,
    pub bound: T,
    pub tuples_checked: usize,
    pub atoms: Vec<Tuple<T>>,
    pub failures: Vec<AtomFailure<T>>,
}

impl<T: Coord> AtomReport<T> {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks over `[1, bound]^dim` that the atom predicate matches the set of
/// tuples that are not a sum of two tuples, and that atoms generate every
/// tuple of the box. Both checks search pairs exhaustively, so the box may
/// hold at most `guard` tuples.
pub fn verify_atoms_minimal<T: Coord>(dim: usize, bound: T, guard: usize) -> Result<AtomReport<T>> {
    let box_size = bound
        .to_count()
        .and_then(|b| u32::try_from(dim).ok().and_then(|d| b.checked_pow(d)));
    let box_size = match box_size {
        Some(n) if n <= guard => n,
        _ => {
            return Err(Error::GuardExceeded {
                target: format!("[1,{bound}]^{dim}"),
                bound: guard,
                what: "tuples in the box",
            })
        }
    };
    let tuples: Vec<Tuple<T>> = BoxIter::cube(dim, bound).collect();
    debug_assert_eq!(tuples.len(), box_size);
    let in_box: HashSet<&Tuple<T>> = tuples.iter().collect();

    // Sums of two box elements that land back in the box. Any pair summing
    // to a box element is itself in the box.
    let mut sums: Vec<(usize, usize, Tuple<T>)> = Vec::new();
    let mut decomposable: HashSet<Tuple<T>> = HashSet::new();
    for (i, u) in tuples.iter().enumerate() {
        for (j, v) in tuples.iter().enumerate() {
            let s = u.checked_add(v)?;
            if in_box.contains(&s) {
                decomposable.insert(s.clone());
                sums.push((i, j, s));
            }
        }
    }

    let mut failures = Vec::new();
    let mut atoms = Vec::new();
    for t in &tuples {
        let is_atom = t.is_atom();
        if is_atom {
            atoms.push(t.clone());
        }
        if is_atom == decomposable.contains(t) {
            failures.push(AtomFailure::Characterization {
                tuple: t.clone(),
                is_atom,
            });
        }
    }

    // Close the atoms under addition inside the box.
    let mut generated: HashSet<Tuple<T>> = atoms.iter().cloned().collect();
    loop {
        let fresh: Vec<Tuple<T>> = sums
            .iter()
            .filter(|(i, j, s)| {
                !generated.contains(s)
                    && generated.contains(&tuples[*i])
                    && generated.contains(&tuples[*j])
            })
            .map(|(_, _, s)| s.clone())
            .collect();
        if fresh.is_empty() {
            break;
        }
        generated.extend(fresh);
    }
    failures.extend(
        tuples
            .iter()
            .filter(|t| !generated.contains(*t))
            .map(|t| AtomFailure::NotGenerated(t.clone())),
    );

    Ok(AtomReport {
        dim,
        bound,
        tuples_checked: tuples.len(),
        atoms,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let r = verify_atoms_minimal::<u64>(2, 1, 1000).unwrap();
        assert!(r.pass());
        assert_eq!(r.atoms, vec!["(1,1)".parse().unwrap()]);

        let r = verify_atoms_minimal::<u64>(2, 3, 1000).unwrap();
        assert!(r.pass());
        assert_eq!(r.tuples_checked, 9);
        assert_eq!(r.atoms.len(), 5);

        let r = verify_atoms_minimal::<u64>(1, 4, 1000).unwrap();
        assert!(r.pass());
        assert_eq!(r.atoms, vec!["(1)".parse().unwrap()]);
    }

    #[test]
    fn guard() {
        assert!(matches!(
            verify_atoms_minimal::<u64>(3, 5, 124),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(verify_atoms_minimal::<u64>(3, 5, 125).unwrap().pass());
    }
}
