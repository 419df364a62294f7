//! Shatter functions, neighborhood complexity η, δ-separation, greedy
//! packings, and near-twin search.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};
use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// A family of distinct subsets of a ground set 0..ground.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    ground: usize,
    sets: Vec<Bits>,
}

impl SetFamily {
    /// Rejects duplicate subsets; multiset semantics live on plain slices
    /// (see [`min_symdiff_pair`]).
    pub fn new(ground: usize, sets: Vec<Bits>) -> Result<SetFamily> {
        let mut seen = BTreeSet::new();
        for s in &sets {
            if s.len() != ground {
                return Err(Error::InvalidInput("set width differs from ground size".into()));
            }
            if !seen.insert(s.clone()) {
                return Err(Error::InvalidInput(format!("duplicate subset {s:?}")));
            }
        }
        Ok(SetFamily { ground, sets })
    }

    /// Same, but silently collapses duplicates.
    pub fn from_sets_dedup(ground: usize, sets: Vec<Bits>) -> Result<SetFamily> {
        let mut distinct: Vec<Bits> = Vec::new();
        let mut seen = BTreeSet::new();
        for s in sets {
            if seen.insert(s.clone()) {
                distinct.push(s);
            }
        }
        SetFamily::new(ground, distinct)
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn sets(&self) -> &[Bits] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn is_delta_separated(&self, delta: usize) -> (bool, Option<(usize, usize, usize)>) {
        is_delta_separated_sets(&self.sets, delta)
    }

    /// Maximal δ-separated subfamily by greedy insertion in canonical
    /// (numeric bitset) order.
    pub fn greedy_delta_packing(&self, delta: usize) -> SetFamily {
        let mut order = self.sets.clone();
        order.sort();
        let mut chosen: Vec<Bits> = Vec::new();
        for s in order {
            if chosen.iter().all(|t| t.xor_count(&s) >= delta) {
                chosen.push(s);
            }
        }
        SetFamily { ground: self.ground, sets: chosen }
    }
}

/// Number of distinct traces {S ∩ W : S ∈ F}.
pub fn shatter_on(f: &SetFamily, w: &Bits) -> Result<usize> {
    if w.len() != f.ground {
        return Err(Error::InvalidInput("window width differs from ground size".into()));
    }
    let traces: BTreeSet<Bits> = f.sets.iter().map(|s| s.and(w)).collect();
    Ok(traces.len())
}

/// The pair minimizing |A Δ B| over a list (duplicates allowed), as
/// (i, j, symdiff) with i < j, ties broken lexicographically.
pub fn min_symdiff_pair(sets: &[Bits]) -> Option<(usize, usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let d = sets[i].xor_count(&sets[j]);
            if best.is_none() || d < best.unwrap().2 {
                best = Some((i, j, d));
            }
        }
    }
    best
}

/// δ-separation over a list of sets (duplicates allowed): true iff every
/// pair has symmetric difference ≥ δ, else the minimal-symdiff witness pair.
pub fn is_delta_separated_sets(
    sets: &[Bits],
    delta: usize,
) -> (bool, Option<(usize, usize, usize)>) {
    match min_symdiff_pair(sets) {
        Some((i, j, d)) if d < delta => (false, Some((i, j, d))),
        _ => (true, None),
    }
}

fn binomial_capped(n: usize, m: usize, cap: u64) -> u64 {
    let mut out: u64 = 1;
    for k in 0..m.min(n - m) {
        out = out.saturating_mul((n - k) as u64) / (k + 1) as u64;
        if out > cap {
            return cap + 1;
        }
    }
    out
}

const ETA_COMBINATION_CAP: u64 = 1_000_000;

/// Exact neighborhood complexity η_G(m): the maximum over all m-subsets A of
/// the number of distinct sets N(v) ∩ A.  Refuses when C(n,m) exceeds 10^6.
pub fn eta(g: &Graph, m: usize) -> Result<usize> {
    let n = g.n();
    if m < 1 || m > n {
        return Err(Error::InvalidInput(format!("m={m} outside 1..={n}")));
    }
    if binomial_capped(n, m, ETA_COMBINATION_CAP) > ETA_COMBINATION_CAP {
        return Err(Error::Resource(format!(
            "C({n},{m}) exceeds {ETA_COMBINATION_CAP} subsets; use eta_sampled"
        )));
    }
    let nbhd: Vec<Bits> = (0..n).map(|v| g.neighborhood_bits(v)).collect();
    let mut best = 0;
    for combo in (0..n).combinations(m) {
        let a = Bits::from_indices(n, &combo);
        let traces: BTreeSet<Bits> = nbhd.iter().map(|nb| nb.and(&a)).collect();
        best = best.max(traces.len());
    }
    Ok(best)
}

/// Sampled lower bound on η_G(m): max trace count over `samples` random
/// m-subsets.  Deterministic per seed.
pub fn eta_sampled(g: &Graph, m: usize, samples: usize, seed: u64) -> Result<usize> {
    let n = g.n();
    if m < 1 || m > n {
        return Err(Error::InvalidInput(format!("m={m} outside 1..={n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nbhd: Vec<Bits> = (0..n).map(|v| g.neighborhood_bits(v)).collect();
    let mut best = 0;
    for _ in 0..samples {
        let idx = rand::seq::index::sample(&mut rng, n, m).into_vec();
        let a = Bits::from_indices(n, &idx);
        let traces: BTreeSet<Bits> = nbhd.iter().map(|nb| nb.and(&a)).collect();
        best = best.max(traces.len());
    }
    Ok(best)
}

/// The pair of distinct vertices of `yprime` ⊆ Y with the smallest
/// open-neighborhood symmetric difference, as (u, v, symdiff).
pub fn find_near_twins(
    g: &BipartiteGraph,
    yprime: &[usize],
) -> Result<(usize, usize, usize)> {
    if yprime.len() < 2 {
        return Err(Error::InvalidInput("need at least two candidate vertices".into()));
    }
    let mut ys = yprime.to_vec();
    ys.sort_unstable();
    ys.dedup();
    if ys.len() < 2 {
        return Err(Error::InvalidInput("need at least two distinct vertices".into()));
    }
    for &v in &ys {
        if v >= g.graph().n() || g.in_x(v) {
            return Err(Error::InvalidInput(format!("vertex {v} is not on side Y")));
        }
    }
    let nbhd: Vec<Bits> = ys.iter().map(|&v| g.graph().neighborhood_bits(v)).collect();
    let (i, j, d) = min_symdiff_pair(&nbhd).expect("at least two sets");
    Ok((ys[i], ys[j], d))
}
