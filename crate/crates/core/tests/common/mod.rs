//! Brute-force oracles. These work on plain coordinate vectors and never
//! call into the library's arithmetic, so they can check it.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

pub type Coords = Vec<u64>;

/// Every point of `[1, bound]^dim`, lexicographic.
pub fn cube(dim: usize, bound: u64) -> Vec<Coords> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..=bound).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

pub fn add(u: &[u64], v: &[u64]) -> Coords {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

/// True iff no pair `u, v` with entries in `[1, max(t)]` sums to `t`.
pub fn brute_is_atom(t: &[u64]) -> bool {
    let bound = *t.iter().max().unwrap();
    let points = cube(t.len(), bound);
    !points.iter().any(|u| points.iter().any(|v| add(u, v) == t))
}

/// Every `(m, b)` with `t = m·1 + b`, `m ≥ 0` and `b` an atom by brute force.
pub fn brute_decompositions(t: &[u64]) -> Vec<(u64, Coords)> {
    let top = *t.iter().max().unwrap();
    (0..=top)
        .filter_map(|m| {
            if t.iter().any(|&c| c <= m) {
                return None;
            }
            let b: Coords = t.iter().map(|&c| c - m).collect();
            brute_is_atom(&b).then_some((m, b))
        })
        .collect()
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of ordered factorizations of `t` into atoms, by inclusion and
/// exclusion over the parts forced to be non-atoms:
/// `sum_L sum_s (-1)^s C(L,s) prod_k C(t_k - s - 1, L - 1)`.
pub fn fiber_count(t: &[u64]) -> u64 {
    let mu = *t.iter().min().unwrap() as i64;
    let mut total = 0i64;
    for len in 1..=mu {
        for s in 0..=len {
            let sign = if s % 2 == 0 { 1 } else { -1 };
            let prod: i64 = t
                .iter()
                .map(|&c| binomial(c as i64 - s - 1, len - 1))
                .product();
            total += sign * binomial(len, s) * prod;
        }
    }
    u64::try_from(total).unwrap()
}

fn is_atom(a: &[u64]) -> bool {
    a.contains(&1)
}

/// Every atom sequence of length at most `min(t)` summing to `t`, sorted.
pub fn brute_fiber(t: &[u64]) -> BTreeSet<Vec<Coords>> {
    let atoms: Vec<Coords> = cube(t.len(), *t.iter().max().unwrap())
        .into_iter()
        .filter(|a| is_atom(a))
        .collect();
    let mu = *t.iter().min().unwrap();
    let mut out = BTreeSet::new();
    let mut layer: Vec<(Vec<Coords>, Coords)> = vec![(vec![], vec![0; t.len()])];
    for _ in 0..mu {
        let mut next = Vec::new();
        for (word, sum) in &layer {
            for a in &atoms {
                let s = add(sum, a);
                if s.iter().zip(t).any(|(x, y)| x > y) {
                    continue;
                }
                let mut w = word.clone();
                w.push(a.clone());
                if s == t {
                    out.insert(w.clone());
                }
                next.push((w, s));
            }
        }
        layer = next;
    }
    out
}

/// `(m, c)` for the relation with left side `a b`.
pub fn relation(a: &[u64], b: &[u64]) -> (u64, Coords) {
    let s = add(a, b);
    let m = s.iter().min().unwrap() - 1;
    (m, s.iter().map(|x| x - m).collect())
}

/// Words one relation away, both directions, written independently of the
/// library's rewrite graph.
pub fn neighbors(w: &[Coords]) -> Vec<Vec<Coords>> {
    let dim = w[0].len();
    let one = vec![1u64; dim];
    let mut out = Vec::new();
    for i in 0..w.len().saturating_sub(1) {
        let (m, c) = relation(&w[i], &w[i + 1]);
        let mut n = w[..i].to_vec();
        n.extend(std::iter::repeat_n(one.clone(), m as usize));
        n.push(c);
        n.extend_from_slice(&w[i + 2..]);
        out.push(n);
    }
    // A factor 1^m c (m >= 1) can be replaced by any a b with
    // relation(a, b) == (m, c).
    for start in 0..w.len() {
        for end in start + 1..w.len() {
            if !w[start..end].iter().all(|l| *l == one) {
                break;
            }
            let m = (end - start) as u64;
            let c = &w[end];
            let s: Coords = c.iter().map(|x| x + m).collect();
            for a in cube(dim, *s.iter().max().unwrap()) {
                if !is_atom(&a) || a.iter().zip(&s).any(|(x, y)| x >= y) {
                    continue;
                }
                let b: Coords = s.iter().zip(&a).map(|(x, y)| x - y).collect();
                if is_atom(&b) && relation(&a, &b) == (m, c.clone()) {
                    let mut n = w[..start].to_vec();
                    n.push(a.clone());
                    n.push(b);
                    n.extend_from_slice(&w[end + 1..]);
                    out.push(n);
                }
            }
        }
    }
    out
}

/// Number of words reachable from the first fiber word by breadth-first
/// search, and the fiber size.
pub fn bfs_reach(t: &[u64]) -> (usize, usize) {
    let fiber = brute_fiber(t);
    let start = fiber.iter().next().unwrap().clone();
    let mut seen: HashSet<Vec<Coords>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        for n in neighbors(&w) {
            if seen.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    (seen.len(), fiber.len())
}

/// All words of length `1..=max_len` over the given letters.
pub fn words_over(letters: &[Coords], max_len: usize) -> Vec<Vec<Coords>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Coords>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |l| {
                    let mut n = w.clone();
                    n.push(l.clone());
                    n
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn atoms_in_cube(dim: usize, bound: u64) -> Vec<Coords> {
    cube(dim, bound)
        .into_iter()
        .filter(|a| is_atom(a))
        .collect()
}

pub fn render_tuple(c: &[u64]) -> String {
    let parts: Vec<String> = c.iter().map(u64::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn render_word(w: &[Coords]) -> String {
    w.iter()
        .map(|c| render_tuple(c))
        .collect::<Vec<_>>()
        .join(".")
}

/// All permutations of `items` (with repeats if items repeat).
pub fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head.clone());
            out.push(p);
        }
    }
    out
}
