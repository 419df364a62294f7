//! Seeded instance generators: stacked planar triangulations with optional
//! edge deletions, random spanning trees, random bipartite graphs, and the
//! two fixed corpora the experiment drivers run on.
//!
//! Everything here is deterministic per seed (ChaCha8 throughout), and the
//! planar generator emits rotation systems that are valid by construction —
//! each insertion step splits one triangular face into three.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph, Multigraph};
use crate::matroid::graphic_fundamental_graph;
use crate::planar::{dart_home, PlanarEmbedding};

const TREE_SEED: u64 = 0x9e37_79b9_7f4a_7c15;

/// Random stacked (Apollonian-style) triangulation on `n ≥ 3` vertices:
/// start from a triangle and repeatedly drop a new vertex into a uniformly
/// chosen face, joining it to the three corners.  Every face of the result
/// is a triangle and the graph is simple, 3-connected for n ≥ 4, with 3n−6
/// edges.
pub fn random_triangulation(n: usize, seed: u64) -> Result<PlanarEmbedding> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    grow(n, &mut rng)
}

fn grow(n: usize, rng: &mut ChaCha8Rng) -> Result<PlanarEmbedding> {
    if n < 3 {
        return Err(Error::InvalidInput(format!(
            "triangulation needs at least 3 vertices, got {n}"
        )));
    }
    let mut ends: Vec<(usize, usize)> = vec![(0, 1), (1, 2), (2, 0)];
    let mut rot: Vec<Vec<usize>> = vec![vec![0, 5], vec![2, 1], vec![4, 3]];
    for x in 3..n {
        let emb = PlanarEmbedding::new(Multigraph::from_edges(x, &ends)?, rot.clone())?;
        let faces = emb.trace_faces()?;
        let cands: Vec<&Vec<usize>> = faces
            .iter()
            .filter(|w| {
                let vs: BTreeSet<usize> =
                    w.iter().map(|&d| dart_home(emb.graph(), d)).collect();
                let es: BTreeSet<usize> = w.iter().map(|&d| d / 2).collect();
                w.len() == 3 && vs.len() == 3 && es.len() == 3
            })
            .collect();
        let walk = cands[rng.random_range(0..cands.len())].clone();
        let (a, b, c) = (walk[0], walk[1], walk[2]);
        let g = emb.graph();
        let (va, vb, vc) = (dart_home(g, a), dart_home(g, b), dart_home(g, c));
        let m = ends.len();
        ends.push((va, x));
        ends.push((vb, x));
        ends.push((vc, x));
        // At each corner the new dart goes right after the dart the face
        // walk arrives on (the companion of the walk dart entering there);
        // around x the corners appear in reverse walk order.
        insert_after(&mut rot[va], c ^ 1, 2 * m);
        insert_after(&mut rot[vb], a ^ 1, 2 * (m + 1));
        insert_after(&mut rot[vc], b ^ 1, 2 * (m + 2));
        rot.push(vec![2 * m + 1, 2 * (m + 2) + 1, 2 * (m + 1) + 1]);
    }
    PlanarEmbedding::new(Multigraph::from_edges(n, &ends)?, rot)
}

fn insert_after(sigma: &mut Vec<usize>, after: usize, dart: usize) {
    let i = sigma.iter().position(|&d| d == after).expect("anchor dart present");
    sigma.insert(i + 1, dart);
}

fn delete_edge(
    ends: &[(usize, usize)],
    rot: &[Vec<usize>],
    e: usize,
) -> (Vec<(usize, usize)>, Vec<Vec<usize>>) {
    let mut ends2 = ends.to_vec();
    ends2.remove(e);
    let rot2 = rot
        .iter()
        .map(|sigma| {
            sigma
                .iter()
                .filter(|&&d| d / 2 != e)
                .map(|&d| if d / 2 > e { d - 2 } else { d })
                .collect()
        })
        .collect();
    (ends2, rot2)
}

/// Random triangulation with up to `deletions` edges removed, each removal
/// kept only if the graph stays connected and bridgeless.  The embedding is
/// updated alongside, so the result is still a valid rotation system.
pub fn random_planar_2ec(n: usize, deletions: usize, seed: u64) -> Result<PlanarEmbedding> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let emb = grow(n, &mut rng)?;
    let mut ends = emb.graph().edge_list().to_vec();
    let mut rot = emb.rotation().to_vec();
    for _ in 0..deletions {
        let mut order: Vec<usize> = (0..ends.len()).collect();
        order.shuffle(&mut rng);
        let mut removed = false;
        for &e in &order {
            let (ends2, rot2) = delete_edge(&ends, &rot, e);
            let g2 = Multigraph::from_edges(n, &ends2)?;
            if g2.is_connected() && g2.bridges().is_empty() {
                ends = ends2;
                rot = rot2;
                removed = true;
                break;
            }
        }
        if !removed {
            break;
        }
    }
    PlanarEmbedding::new(Multigraph::from_edges(n, &ends)?, rot)
}

/// Uniformly shuffled Kruskal: a random maximal spanning forest, as sorted
/// edge ids.  Loops are never picked.
pub fn random_spanning_tree(g: &Multigraph, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ids: Vec<usize> = (0..g.m()).filter(|&e| !g.is_loop(e)).collect();
    ids.shuffle(&mut rng);
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut tree = Vec::new();
    for e in ids {
        let (u, v) = g.endpoints(e);
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            tree.push(e);
        }
    }
    tree.sort_unstable();
    tree
}

/// G(nx, ny, p): each of the nx·ny cross pairs is an edge independently
/// with probability `p`.  X is `0..nx`, Y is `nx..nx+ny`.
pub fn random_bipartite(nx: usize, ny: usize, p: f64, seed: u64) -> Result<BipartiteGraph> {
    if nx == 0 || ny == 0 {
        return Err(Error::InvalidInput("both sides must be nonempty".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidInput(format!("edge probability {p} not in [0,1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for x in 0..nx {
        for y in 0..ny {
            if rng.random_bool(p) {
                edges.push((x, nx + y));
            }
        }
    }
    let graph = Graph::from_edges(nx + ny, &edges)?;
    let in_x: Vec<bool> = (0..nx + ny).map(|v| v < nx).collect();
    BipartiteGraph::new(graph, &in_x)
}

/// One instance of the planar experiment corpus: a 2-edge-connected
/// triangulation-derived embedding on 4..=40 vertices plus a random spanning
/// tree.  Instance shape is a pure function of the seed.
pub fn corpus_embedding(seed: u64) -> Result<(PlanarEmbedding, Vec<usize>)> {
    let n = 4 + (seed % 37) as usize;
    let deletions = (seed % 4) as usize;
    let emb = random_planar_2ec(n, deletions, seed)?;
    let tree = random_spanning_tree(emb.graph(), seed ^ TREE_SEED);
    Ok((emb, tree))
}

/// One instance of the bipartite soundness corpus: even seeds draw the
/// fundamental graph of a random planar graph, odd seeds a random bipartite
/// graph.  All instances have ≤ 60 vertices; seeds divisible by 5 give
/// little ones (≤ 12 vertices) that exact search can cross-check.
pub fn soundness_instance(seed: u64) -> Result<(String, BipartiteGraph)> {
    if seed % 2 == 0 {
        let small = seed % 10 == 0;
        let n = if small {
            5 + (seed / 10) as usize % 2
        } else {
            7 + (seed / 2) as usize % 16
        };
        let deletions = ((seed / 3) % 4) as usize;
        let emb = random_planar_2ec(n, deletions, seed)?;
        let tree = random_spanning_tree(emb.graph(), seed ^ TREE_SEED);
        let fund = graphic_fundamental_graph(emb.graph(), &tree)?;
        Ok((format!("fund-planar-{seed}"), fund.bipartite().clone()))
    } else {
        let small = seed % 5 == 0;
        let (nx, ny) = if small {
            (2 + (seed % 3) as usize, 2 + ((seed / 7) % 3) as usize)
        } else {
            (5 + (seed % 26) as usize, 5 + ((seed / 11) % 26) as usize)
        };
        let p = 0.15 + 0.5 * (seed % 7) as f64 / 7.0;
        let bip = random_bipartite(nx, ny, p, seed)?;
        Ok((format!("bipartite-{seed}"), bip))
    }
}

/// One instance of the exact-scan corpus: triangulation-derived graphs on
/// 4..=7 vertices, small enough that the scans' exhaustive searches finish.
pub fn scan_instance(index: usize, base_seed: u64) -> Result<(String, Multigraph, Vec<usize>)> {
    let seed = base_seed.wrapping_add(index as u64);
    let n = 4 + index % 4;
    let deletions = index % 3;
    let emb = random_planar_2ec(n, deletions, seed)?;
    let tree = random_spanning_tree(emb.graph(), seed ^ TREE_SEED);
    Ok((format!("planar-n{n}-d{deletions}-i{index}"), emb.graph().clone(), tree))
}
