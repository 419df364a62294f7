//! Binary matroids in standard form [I | A], their fundamental graphs,
//! duality, single-element minors, and the graphic special case.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph, Multigraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// Column matroid of a GF(2) matrix in standard form [I | A].  The basis is
/// the first `r` columns.  Columns carry element labels so duals and minors
/// can be compared element-wise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matroid {
    r: usize,
    m: usize,
    /// r rows, each a bit vector of length m.
    rows: Vec<Bits>,
    /// labels[c] identifies column c; unique.
    labels: Vec<usize>,
}

impl Gf2Matroid {
    pub fn new(r: usize, m: usize, rows: Vec<Bits>) -> Result<Gf2Matroid> {
        Self::with_labels(r, m, rows, (0..m).collect())
    }

    pub fn with_labels(
        r: usize,
        m: usize,
        rows: Vec<Bits>,
        labels: Vec<usize>,
    ) -> Result<Gf2Matroid> {
        if r > m {
            return Err(Error::InvalidInput(format!("rank {r} exceeds {m} columns")));
        }
        if rows.len() != r {
            return Err(Error::InvalidInput(format!(
                "expected {r} rows, got {}",
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != m {
                return Err(Error::InvalidInput(format!("row {i} has wrong width")));
            }
            for j in 0..r {
                if row.get(j) != (i == j) {
                    return Err(Error::InvalidInput(
                        "left block is not the identity (matrix not in standard form)".into(),
                    ));
                }
            }
        }
        if labels.len() != m || labels.iter().collect::<BTreeSet<_>>().len() != m {
            return Err(Error::InvalidInput("labels must be unique, one per column".into()));
        }
        Ok(Gf2Matroid { r, m, rows, labels })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }
}

/// Bipartite fundamental graph: side X (vertices 0..|X|) for basis elements,
/// side Y for the rest.  `labels[v]` names the element at vertex v.
#[derive(Clone, Debug)]
pub struct FundamentalGraph {
    bip: BipartiteGraph,
    labels: Vec<usize>,
}

impl FundamentalGraph {
    pub fn graph(&self) -> &Graph {
        self.bip.graph()
    }

    pub fn bipartite(&self) -> &BipartiteGraph {
        &self.bip
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn x_labels(&self) -> BTreeSet<usize> {
        self.bip.x().iter().map(|&v| self.labels[v]).collect()
    }

    pub fn y_labels(&self) -> BTreeSet<usize> {
        self.bip.y().iter().map(|&v| self.labels[v]).collect()
    }

    /// Edges as unordered label pairs; the label-level view used to compare
    /// graphs across duals and minors.
    pub fn labeled_edges(&self) -> BTreeSet<(usize, usize)> {
        self.bip
            .graph()
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (self.labels[u], self.labels[v]);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    /// Equality after exchanging the sides: same elements with X and Y
    /// swapped, and the same labeled edges.
    pub fn eq_side_swapped(&self, other: &FundamentalGraph) -> bool {
        self.x_labels() == other.y_labels()
            && self.y_labels() == other.x_labels()
            && self.labeled_edges() == other.labeled_edges()
    }

    /// Plain labeled equality (same sides, same edges).
    pub fn eq_labeled(&self, other: &FundamentalGraph) -> bool {
        self.x_labels() == other.x_labels()
            && self.y_labels() == other.y_labels()
            && self.labeled_edges() == other.labeled_edges()
    }
}

/// F(M,B): x_i ~ y_j iff basis row i has a 1 in non-basis column j, i.e. i
/// lies in the fundamental circuit of j.
pub fn fundamental_graph(mat: &Gf2Matroid) -> FundamentalGraph {
    let (r, m) = (mat.r, mat.m);
    let mut edges = Vec::new();
    for i in 0..r {
        for j in r..m {
            if mat.rows[i].get(j) {
                edges.push((i, j));
            }
        }
    }
    let g = Graph::from_edges(m, &edges).expect("indices in range");
    let in_x: Vec<bool> = (0..m).map(|v| v < r).collect();
    let bip = BipartiteGraph::new(g, &in_x).expect("basis/non-basis edges cross sides");
    FundamentalGraph { bip, labels: mat.labels.clone() }
}

/// Dual matroid [I | Aᵀ] with basis and cobasis exchanged.  Labels follow
/// their columns, so `fundamental_graph(dual_matroid(M))` is the side-swap of
/// `fundamental_graph(M)`.
pub fn dual_matroid(mat: &Gf2Matroid) -> Gf2Matroid {
    let (r, m) = (mat.r, mat.m);
    let rd = m - r;
    let mut rows = Vec::with_capacity(rd);
    for j in 0..rd {
        let mut row = Bits::new(m);
        row.set(j, true);
        for i in 0..r {
            if mat.rows[i].get(r + j) {
                row.set(rd + i, true);
            }
        }
        rows.push(row);
    }
    let mut labels = Vec::with_capacity(m);
    labels.extend_from_slice(&mat.labels[r..]);
    labels.extend_from_slice(&mat.labels[..r]);
    Gf2Matroid::with_labels(rd, m, rows, labels).expect("dual of standard form is standard form")
}

/// Removes one element: contraction if `label` is a basis column (drop its
/// row and column — no pivot needed in standard form), deletion otherwise.
pub fn remove_element(mat: &Gf2Matroid, label: usize) -> Result<Gf2Matroid> {
    let col = mat
        .labels
        .iter()
        .position(|&l| l == label)
        .ok_or_else(|| Error::InvalidInput(format!("no element labeled {label}")))?;
    let (r, m) = (mat.r, mat.m);
    let drop_row = if col < r { Some(col) } else { None };
    let keep_cols: Vec<usize> = (0..m).filter(|&j| j != col).collect();
    let mut rows = Vec::new();
    for i in 0..r {
        if Some(i) == drop_row {
            continue;
        }
        let mut row = Bits::new(m - 1);
        for (jj, &j) in keep_cols.iter().enumerate() {
            row.set(jj, mat.rows[i].get(j));
        }
        rows.push(row);
    }
    let labels = keep_cols.iter().map(|&j| mat.labels[j]).collect();
    let new_r = if drop_row.is_some() { r - 1 } else { r };
    Gf2Matroid::with_labels(new_r, m - 1, rows, labels)
}

/// Fundamental graph of a graphic matroid: X = edges of the spanning forest
/// `tree`, Y = the rest; y ~ x iff x lies on the fundamental cycle of y.
/// Labels are edge ids.  Loops become isolated Y-vertices.
pub fn graphic_fundamental_graph(
    g: &Multigraph,
    tree: &[usize],
) -> Result<FundamentalGraph> {
    if !g.is_spanning_forest(tree) {
        return Err(Error::InvalidInput("tree is not a spanning forest".into()));
    }
    let mut tree_sorted = tree.to_vec();
    tree_sorted.sort_unstable();
    let in_tree = {
        let mut mask = vec![false; g.m()];
        for &e in &tree_sorted {
            mask[e] = true;
        }
        mask
    };
    let nontree: Vec<usize> = (0..g.m()).filter(|&e| !in_tree[e]).collect();
    let mut vertex_of = vec![usize::MAX; g.m()];
    let mut labels = Vec::with_capacity(g.m());
    for &e in tree_sorted.iter().chain(&nontree) {
        vertex_of[e] = labels.len();
        labels.push(e);
    }
    let mut edges = Vec::new();
    for &e in &nontree {
        for f in g.fundamental_cycle(tree, e)? {
            if f != e {
                edges.push((vertex_of[f], vertex_of[e]));
            }
        }
    }
    let graph = Graph::from_edges(g.m(), &edges)?;
    let in_x: Vec<bool> = labels.iter().map(|&e| in_tree[e]).collect();
    let bip = BipartiteGraph::new(graph, &in_x)?;
    Ok(FundamentalGraph { bip, labels })
}

/// Seeded random standard-form matroid with Bernoulli(1/2) entries in A.
pub fn random_matroid(r: usize, m: usize, seed: u64) -> Result<Gf2Matroid> {
    if r > m {
        return Err(Error::InvalidInput(format!("rank {r} exceeds {m} columns")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(r);
    for i in 0..r {
        let mut row = Bits::new(m);
        row.set(i, true);
        for j in r..m {
            if rng.random_bool(0.5) {
                row.set(j, true);
            }
        }
        rows.push(row);
    }
    Gf2Matroid::new(r, m, rows)
}
