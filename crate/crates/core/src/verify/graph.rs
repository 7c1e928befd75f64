use std::collections::BTreeSet;

use crate::error::Result;
use crate::relation::relation_for;
use crate::rewrite::normalize;
use crate::scalar::Coord;
use crate::tuple::{atoms_below, Atom, Tuple};
use crate::word::Word;

use super::fiber::{enumerate_fiber, Fiber};
use super::union_find::UnionFind;

/// Every word one relation application away from `w`, in either direction
/// and at any position. `w` itself is never included.
///
/// Forward: a factor `x_a x_b` becomes `x_1^m x_c`. Backward: a factor
/// `x_1^m x_c` with `m ≥ 1` becomes `x_a x_b` for every atom pair with
/// `a + b = m·1 + c`.
pub fn one_step_neighbors<T: Coord>(w: &Word<T>) -> Result<BTreeSet<Word<T>>> {
    let letters = w.letters();
    let one = Atom::one(w.dim());
    let mut out = BTreeSet::new();

    for i in 0..letters.len().saturating_sub(1) {
        let rel = relation_for(&letters[i], &letters[i + 1])?;
        let ones = rel
            .m
            .to_count()
            .expect("exponent bounded by the word value");
        let mut next = letters[..i].to_vec();
        next.extend(std::iter::repeat_n(one.clone(), ones));
        next.push(rel.c);
        next.extend_from_slice(&letters[i + 2..]);
        out.insert(Word::new(next)?);
    }

    for j in 0..letters.len() {
        let run = letters[..j].iter().rev().take_while(|l| l.is_one()).count();
        for m in 1..=run {
            let shift = T::from_count(m).expect("run length fits the coordinate type");
            let sum = letters[j].as_tuple().add_diagonal(shift)?;
            for (a, b) in atom_pairs_summing_to(&sum) {
                let mut next = letters[..j - m].to_vec();
                next.push(a);
                next.push(b);
                next.extend_from_slice(&letters[j + 1..]);
                out.insert(Word::new(next)?);
            }
        }
    }

    out.remove(w);
    Ok(out)
}

/// All ordered atom pairs `(a, b)` with `a + b = sum`.
fn atom_pairs_summing_to<T: Coord>(sum: &Tuple<T>) -> Vec<(Atom<T>, Atom<T>)> {
    atoms_below(sum)
        .filter_map(|a| {
            let b = sum.checked_sub(a.as_tuple())?;
            Atom::new(b).ok().map(|b| (a, b))
        })
        .collect()
}

/// The one-step rewrite graph on a fiber.
#[derive(Debug, Clone)]
pub struct RewriteGraph<T: Coord = u64> {
    pub fiber: Fiber<T>,
    /// Index pairs `(i, j)` with `i < j` into `fiber.words`.
    pub edges: BTreeSet<(usize, usize)>,
    /// Neighbors that fell outside the fiber. Always empty when the
    /// relations preserve evaluation.
    pub foreign: Vec<(Word<T>, Word<T>)>,
}

impl<T: Coord> RewriteGraph<T> {
    pub fn build(fiber: Fiber<T>) -> Result<Self> {
        let mut edges = BTreeSet::new();
        let mut foreign = Vec::new();
        for (i, w) in fiber.words.iter().enumerate() {
            for n in one_step_neighbors(w)? {
                match fiber.position(&n) {
                    Some(j) => {
                        edges.insert((i.min(j), i.max(j)));
                    }
                    None => foreign.push((w.clone(), n)),
                }
            }
        }
        Ok(RewriteGraph {
            fiber,
            edges,
            foreign,
        })
    }

    pub fn components(&self) -> UnionFind {
        let mut uf = UnionFind::new(self.fiber.len());
        for &(i, j) in &self.edges {
            uf.union(i, j);
        }
        uf
    }
}

/// Outcome of checking one fiber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberReport<T: Coord = u64> {
    pub target: Tuple<T>,
    pub fiber_size: usize,
    pub edge_count: usize,
    /// Largest first.
    pub component_sizes: Vec<usize>,
    pub foreign_edges: usize,
    /// Words whose normal form is missing from the fiber or sits in a
    /// different component.
    pub stray_normal_forms: usize,
}

impl<T: Coord> FiberReport<T> {
    pub fn component_count(&self) -> usize {
        self.component_sizes.len()
    }

    pub fn pass(&self) -> bool {
        self.component_count() == 1 && self.foreign_edges == 0 && self.stray_normal_forms == 0
    }
}

/// Builds the rewrite graph on the fiber over `target` and checks that it
/// is connected, that every edge stays in the fiber, and that every word
/// reaches its own normal form.
pub fn verify_fiber_connected<T: Coord>(target: &Tuple<T>, guard: usize) -> Result<FiberReport<T>> {
    let graph = RewriteGraph::build(enumerate_fiber(target, guard)?)?;
    let mut uf = graph.components();
    let mut stray = 0;
    for (i, w) in graph.fiber.words.iter().enumerate() {
        let nf = normalize(w)?.expand()?;
        match graph.fiber.position(&nf) {
            Some(j) if uf.find(i) == uf.find(j) => {}
            _ => stray += 1,
        }
    }
    Ok(FiberReport {
        target: target.clone(),
        fiber_size: graph.fiber.len(),
        edge_count: graph.edges.len(),
        component_sizes: uf.component_sizes(),
        foreign_edges: graph.foreign.len(),
        stray_normal_forms: stray,
    })
}
