//! Exhaustive catalogs of small connected multigraphs up to isomorphism.
//!
//! The generator walks levels by edge count: every connected multigraph with
//! m+1 edges arises from one with m edges by adding a loop, an edge between
//! existing vertices, or a pendant edge to a fresh vertex (delete a non-bridge
//! edge, or a leaf edge plus its leaf, to see the converse).  Duplicates are
//! folded through a canonical form, so the result has one representative per
//! isomorphism class.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

type EdgeList = Vec<(usize, usize)>;

/// Canonical form `(n, edges)`: the lexicographically least sorted edge list
/// over all vertex relabelings.  Relabelings are restricted to permute only
/// vertices with equal invariants (degree, loop count, multiplicity profile),
/// which loses nothing and keeps the search tractable on small graphs.
pub fn canonical_form(g: &Multigraph) -> Result<(usize, EdgeList)> {
    let edges: EdgeList = g
        .edge_list()
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    canon_checked(g.n(), &edges)
}

fn canon_checked(n: usize, edges: &[(usize, usize)]) -> Result<(usize, EdgeList)> {
    let blocks = invariant_blocks(n, edges);
    let mut work: f64 = 1.0;
    for b in &blocks {
        for k in 1..=b.len() {
            work *= k as f64;
        }
    }
    if work > 1e7 {
        return Err(Error::Resource(format!(
            "canonical form would enumerate {work:.0} relabelings"
        )));
    }
    Ok(canon(n, edges, &blocks))
}

/// Vertices grouped by an isomorphism-invariant key, blocks sorted by key.
fn invariant_blocks(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut deg = vec![0usize; n];
    let mut loops = vec![0usize; n];
    let mut mult = vec![std::collections::BTreeMap::<usize, usize>::new(); n];
    for &(u, v) in edges {
        if u == v {
            deg[u] += 2;
            loops[u] += 1;
        } else {
            deg[u] += 1;
            deg[v] += 1;
            *mult[u].entry(v).or_insert(0) += 1;
            *mult[v].entry(u).or_insert(0) += 1;
        }
    }
    let key = |v: usize| {
        let mut profile: Vec<usize> = mult[v].values().copied().collect();
        profile.sort_unstable();
        (deg[v], loops[v], profile)
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (key(v), v));
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for v in order {
        match blocks.last() {
            Some(b) if key(b[0]) == key(v) => blocks.last_mut().unwrap().push(v),
            _ => blocks.push(vec![v]),
        }
    }
    blocks
}

fn canon(n: usize, edges: &[(usize, usize)], blocks: &[Vec<usize>]) -> (usize, EdgeList) {
    let mut offsets = Vec::with_capacity(blocks.len());
    let mut at = 0;
    for b in blocks {
        offsets.push(at);
        at += b.len();
    }
    let choices: Vec<Vec<Vec<usize>>> = blocks
        .iter()
        .map(|b| {
            b.iter()
                .copied()
                .permutations(b.len())
                .collect::<Vec<_>>()
        })
        .collect();
    let mut best: Option<EdgeList> = None;
    let mut pos = vec![0usize; n];
    for combo in choices.into_iter().multi_cartesian_product() {
        for (bi, perm) in combo.iter().enumerate() {
            for (j, &v) in perm.iter().enumerate() {
                pos[v] = offsets[bi] + j;
            }
        }
        let mut mapped: EdgeList = edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (pos[u], pos[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        mapped.sort_unstable();
        if best.as_ref().is_none_or(|b| mapped < *b) {
            best = Some(mapped);
        }
    }
    (n, best.unwrap_or_default())
}

/// All connected multigraphs with at most `max_edges` edges, one per
/// isomorphism class, loops and parallel edges allowed.  Includes the single
/// vertex as the unique 0-edge entry.  Entries are sorted by (edge count,
/// vertex count, canonical edge list) and have sorted edge lists, so edge ids
/// are deterministic.
pub fn connected_multigraphs(max_edges: usize) -> Result<Vec<Multigraph>> {
    let mut out = Vec::new();
    let mut level: Vec<(usize, EdgeList)> = vec![(1, Vec::new())];
    out.push(level[0].clone());
    for _ in 0..max_edges {
        let mut next: BTreeSet<(usize, EdgeList)> = BTreeSet::new();
        for (n, edges) in &level {
            let mut grow = |n2: usize, extra: (usize, usize)| -> Result<()> {
                let mut child = edges.clone();
                child.push(extra);
                next.insert(canon_checked(n2, &child)?);
                Ok(())
            };
            for u in 0..*n {
                for v in u..*n {
                    grow(*n, (u, v))?;
                }
                grow(*n + 1, (u, *n))?;
            }
        }
        let mut by_size: Vec<(usize, EdgeList)> = next.into_iter().collect();
        by_size.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        out.extend(by_size.iter().cloned());
        level = by_size;
    }
    out.sort_by_key(|(n, e)| (e.len(), *n, e.clone()));
    out.into_iter()
        .map(|(n, edges)| Multigraph::from_edges(n, &edges))
        .collect()
}

/// Every maximal spanning forest (for a connected graph: every spanning
/// tree), as sorted edge-id lists.  Exponential; intended for small graphs.
pub fn all_spanning_forests(g: &Multigraph) -> Vec<Vec<usize>> {
    let size = g.spanning_forest().len();
    if size == 0 {
        return vec![Vec::new()];
    }
    (0..g.m())
        .filter(|&e| !g.is_loop(e))
        .combinations(size)
        .filter(|c| g.is_spanning_forest(c))
        .collect()
}
