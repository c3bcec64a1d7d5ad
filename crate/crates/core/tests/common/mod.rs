#![allow(dead_code)]

use condevents::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(p: i64, r: i64) -> Rational {
    Rational::new(p.into(), r.into())
}

pub fn random_formula<R: Rng>(rng: &mut R, vars: usize, depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..10) {
            0 => Formula::True,
            1 => Formula::False,
            _ => Formula::var(rng.gen_range(0..vars)),
        };
    }
    let sub = |rng: &mut R| random_formula(rng, vars, depth - 1);
    match rng.gen_range(0..9) {
        0 => Formula::not(sub(rng)),
        1 => Formula::or(sub(rng), sub(rng)),
        2 => Formula::and(sub(rng), sub(rng)),
        3 => Formula::implies(sub(rng), sub(rng)),
        4 => Formula::iff(sub(rng), sub(rng)),
        5 => Formula::prev(sub(rng)),
        6 => Formula::since(sub(rng), sub(rng)),
        7 => Formula::once(sub(rng)),
        _ => Formula::hist(sub(rng)),
    }
}

/// Events `a`, `b`, `c` truncated to `n`.
pub fn events(n: usize) -> EventSet {
    EventSet::new(["a", "b", "c"].into_iter().take(n)).unwrap()
}

/// A random pair over 1–3 events with depth ≤ 4.
pub fn random_pair(rng: &mut impl Rng) -> (EventSet, CondPair) {
    let n = rng.gen_range(1..=3);
    let c = CondPair::new(random_formula(rng, n, 4), random_formula(rng, n, 4));
    (events(n), c)
}

/// Every word of length `1..=max_len` over `width` atoms.
pub fn all_words(width: u32, max_len: usize) -> Vec<Vec<Atom>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Atom>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..width).map(move |a| {
                    let mut w = w.clone();
                    w.push(Atom(a));
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn random_word(rng: &mut impl Rng, width: u32, len: usize) -> Vec<Atom> {
    (0..len).map(|_| Atom(rng.gen_range(0..width))).collect()
}

/// Independent marginals drawn from `{1, …, 9} / 10`.
pub fn random_positive_dist(rng: &mut impl Rng, e: &EventSet) -> Dist {
    let m: Vec<Rational> = (0..e.len()).map(|_| q(rng.gen_range(1..=9), 10)).collect();
    Dist::independent(e, &m).unwrap()
}

/// Integer weights in `lo..=hi` on every atom, normalized.
pub fn random_atom_dist(rng: &mut impl Rng, e: &EventSet, lo: i64, hi: i64) -> Dist {
    let mut w: Vec<i64> = (0..e.atom_count())
        .map(|_| rng.gen_range(lo..=hi))
        .collect();
    if w.iter().all(|&x| x == 0) {
        w[0] = 1;
    }
    let total: i64 = w.iter().sum();
    Dist::from_atoms(e, e.atoms().zip(w).map(|(a, x)| (a, q(x, total)))).unwrap()
}
