//! Brute-force checks of the presentation on bounded boxes.

mod atoms;
mod fiber;
mod graph;
mod sweep;
mod union_find;

pub use atoms::{verify_atoms_minimal, AtomFailure, AtomReport};
pub use fiber::{enumerate_fiber, Fiber};
pub use graph::{one_step_neighbors, verify_fiber_connected, FiberReport, RewriteGraph};
pub use sweep::{sweep_fibers, verify_box, Record, Verdict, ATOM_BOX_GUARD};
pub use union_find::UnionFind;

/// Default cap on the number of words enumerated per fiber.
pub const DEFAULT_GUARD: usize = 200_000;
