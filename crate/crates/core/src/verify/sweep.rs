//! Concurrent sweeps over a box of targets and their report records.
//!
//! Records serialize as one JSON object per line. Field order is fixed:
//!
//! * atoms: `check`, `k`, `bound`, `tuples`, `atoms`, `pass`
//! * fiber: `check`, `target`, `fiber_size`, `component_count`, `pass`,
//!   then `error` only when the resource guard stopped the fiber.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::scalar::Coord;
use crate::tuple::{BoxIter, Tuple};

use super::atoms::{verify_atoms_minimal, AtomReport};
use super::graph::{verify_fiber_connected, FiberReport};

/// Checks every target in `[1, max_target]^dim`. Fibers run in parallel;
/// results come back in lexicographic target order.
pub fn sweep_fibers<T: Coord>(
    dim: usize,
    max_target: T,
    guard: usize,
) -> Vec<(Tuple<T>, Result<FiberReport<T>>)> {
    let targets: Vec<Tuple<T>> = BoxIter::cube(dim, max_target).collect();
    targets
        .into_par_iter()
        .map(|t| {
            let report = verify_fiber_connected(&t, guard);
            (t, report)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "lowercase")]
pub enum Record {
    Atoms {
        k: usize,
        bound: u64,
        tuples: usize,
        atoms: usize,
        pass: bool,
    },
    Fiber {
        target: String,
        fiber_size: Option<usize>,
        component_count: Option<usize>,
        pass: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        error: Option<String>,
    },
}

impl Record {
    pub fn pass(&self) -> bool {
        match self {
            Record::Atoms { pass, .. } | Record::Fiber { pass, .. } => *pass,
        }
    }

    pub fn is_guard_error(&self) -> bool {
        matches!(self, Record::Fiber { error: Some(_), .. })
    }

    pub fn from_atoms<T: Coord>(r: &AtomReport<T>) -> Self {
        Record::Atoms {
            k: r.dim,
            bound: r.bound.to_u64().unwrap_or(u64::MAX),
            tuples: r.tuples_checked,
            atoms: r.atoms.len(),
            pass: r.pass(),
        }
    }

    pub fn from_fiber<T: Coord>(target: &Tuple<T>, r: &Result<FiberReport<T>>) -> Self {
        match r {
            Ok(r) => Record::Fiber {
                target: target.to_string(),
                fiber_size: Some(r.fiber_size),
                component_count: Some(r.component_count()),
                pass: r.pass(),
                error: None,
            },
            Err(e) => Record::Fiber {
                target: target.to_string(),
                fiber_size: None,
                component_count: None,
                pass: false,
                error: Some(e.to_string()),
            },
        }
    }
}

/// Summary verdict over a set of records.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// Some check ran to completion and failed.
    Failed,
    /// Nothing failed, but the guard stopped at least one fiber.
    GuardExceeded,
}

impl Verdict {
    /// Order-insensitive merge.
    pub fn of(records: &[Record]) -> Self {
        if records.iter().any(|r| !r.pass() && !r.is_guard_error()) {
            Verdict::Failed
        } else if records.iter().any(Record::is_guard_error) {
            Verdict::GuardExceeded
        } else {
            Verdict::Pass
        }
    }
}

/// Largest box the atom check will search; the search is quadratic in the
/// box size.
pub const ATOM_BOX_GUARD: usize = 10_000;

/// The atom check over `[1, max_entry]^dim` followed by one record per
/// fiber target in `[1, max_target]^dim`. `fiber_guard` caps each fiber;
/// a fiber that hits it yields an error record and the sweep continues.
pub fn verify_box<T: Coord>(
    dim: usize,
    max_entry: T,
    max_target: T,
    fiber_guard: usize,
) -> Result<Vec<Record>> {
    let atoms = verify_atoms_minimal(dim, max_entry, ATOM_BOX_GUARD)?;
    let mut records = vec![Record::from_atoms(&atoms)];
    records.extend(
        sweep_fibers(dim, max_target, fiber_guard)
            .iter()
            .map(|(t, r)| Record::from_fiber(t, r)),
    );
    Ok(records)
}
