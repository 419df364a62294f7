//! Chord diagrams, circle graphs, and the G_n family of circle graphs on
//! all pairs from n cyclic points.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::HashMap;

/// A chord diagram as a double-occurrence word: 2n symbols over chord ids
/// 0..n−1, each id occurring exactly twice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordDiagram {
    word: Vec<usize>,
    n_chords: usize,
}

impl ChordDiagram {
    pub fn from_word(word: &[usize]) -> Result<ChordDiagram> {
        if word.len() % 2 != 0 {
            return Err(Error::InvalidInput("word length must be even".into()));
        }
        let n_chords = word.len() / 2;
        let mut count = vec![0usize; n_chords];
        for &c in word {
            if c >= n_chords {
                return Err(Error::InvalidInput(format!(
                    "chord id {c} out of range for {n_chords} chords"
                )));
            }
            count[c] += 1;
        }
        if let Some(c) = count.iter().position(|&k| k != 2) {
            return Err(Error::InvalidInput(format!(
                "chord {c} occurs {} times, expected 2",
                count[c]
            )));
        }
        Ok(ChordDiagram { word: word.to_vec(), n_chords })
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn n_chords(&self) -> usize {
        self.n_chords
    }

    /// Both positions of each chord, as (first, second) with first < second.
    fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(usize::MAX, usize::MAX); self.n_chords];
        for (i, &c) in self.word.iter().enumerate() {
            if pos[c].0 == usize::MAX {
                pos[c].0 = i;
            } else {
                pos[c].1 = i;
            }
        }
        pos
    }

    /// Rotation that starts at an occurrence of chord 0; of the two such
    /// rotations the lexicographically smaller word is chosen, so equal
    /// cyclic diagrams canonicalize identically.
    pub fn canonical(&self) -> ChordDiagram {
        if self.n_chords == 0 {
            return self.clone();
        }
        let rotate = |s: usize| -> Vec<usize> {
            (0..self.word.len()).map(|i| self.word[(s + i) % self.word.len()]).collect()
        };
        let (p, q) = self.positions()[0];
        let a = rotate(p);
        let b = rotate(q);
        let w = if a <= b { a } else { b };
        ChordDiagram { word: w, n_chords: self.n_chords }
    }

    /// Circle graph of the diagram: chords are adjacent iff their
    /// occurrences alternate around the circle.
    pub fn intersection_graph(&self) -> Graph {
        let pos = self.positions();
        let mut edges = Vec::new();
        for i in 0..self.n_chords {
            for j in i + 1..self.n_chords {
                let (p1, p2) = pos[i];
                let (q1, q2) = pos[j];
                let inside1 = p1 < q1 && q1 < p2;
                let inside2 = p1 < q2 && q2 < p2;
                if inside1 != inside2 {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(self.n_chords, &edges).expect("chord ids are dense")
    }
}

/// Do chords (a1,b1) and (a2,b2) on cyclic points 1..n interleave?
///
/// True iff exactly one endpoint of the second chord lies strictly inside
/// one open cyclic arc of the first.  Chords sharing an endpoint do not
/// interleave.
pub fn interleave(n: usize, a1: usize, b1: usize, a2: usize, b2: usize) -> Result<bool> {
    for p in [a1, b1, a2, b2] {
        if p < 1 || p > n {
            return Err(Error::InvalidInput(format!("point {p} outside 1..={n}")));
        }
    }
    if a1 == b1 || a2 == b2 {
        return Err(Error::InvalidInput("chord endpoints must differ".into()));
    }
    if a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2 {
        return Ok(false);
    }
    // strictly inside the arc running upward from s to t, cyclically
    let inside = |x: usize, s: usize, t: usize| -> bool {
        let rank = (x + n - s) % n;
        let span = (t + n - s) % n;
        0 < rank && rank < span
    };
    Ok(inside(a2, a1, b1) != inside(b2, a1, b1))
}

/// The circle graph on all pairs (a,b), 1 ≤ a < b ≤ n, adjacent iff the
/// chords interleave, together with a witnessing chord diagram.
#[derive(Clone, Debug)]
pub struct GnInstance {
    n: usize,
    vertices: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    graph: Graph,
    diagram: ChordDiagram,
}

impl GnInstance {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertices in lexicographic pair order; vertex k is `vertices()[k]`.
    pub fn vertices(&self) -> &[(usize, usize)] {
        &self.vertices
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn diagram(&self) -> &ChordDiagram {
        &self.diagram
    }

    pub fn vertex_index(&self, a: usize, b: usize) -> Option<usize> {
        self.index.get(&(a.min(b), a.max(b))).copied()
    }
}

/// Builds G_n.  Chord k of the emitted diagram is vertex k of the graph.
pub fn generate_gn(n: usize) -> Result<GnInstance> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("G_n needs n >= 2, got {n}")));
    }
    let mut vertices = Vec::new();
    let mut index = HashMap::new();
    for a in 1..=n {
        for b in a + 1..=n {
            index.insert((a, b), vertices.len());
            vertices.push((a, b));
        }
    }
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let (a1, b1) = vertices[i];
            let (a2, b2) = vertices[j];
            if interleave(n, a1, b1, a2, b2)? {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::from_edges(vertices.len(), &edges)?;

    // Witnessing diagram: each circle point becomes a cluster of word
    // positions.  Within the cluster at p, chords are ordered by cyclic
    // distance to the far endpoint, longest first; this makes chords that
    // share an endpoint non-crossing, matching the strict interleaving rule.
    let mut word = Vec::with_capacity(vertices.len() * 2);
    for p in 1..=n {
        let mut here: Vec<(usize, usize)> = Vec::new(); // (cyclic distance, chord id)
        for (k, &(a, b)) in vertices.iter().enumerate() {
            if a == p {
                here.push(((b + n - p) % n, k));
            } else if b == p {
                here.push(((a + n - p) % n, k));
            }
        }
        here.sort_unstable_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
        word.extend(here.into_iter().map(|(_, k)| k));
    }
    let diagram = ChordDiagram::from_word(&word)?;
    Ok(GnInstance { n, vertices, index, graph, diagram })
}

fn check_triple(g: &GnInstance, a: usize, b: usize, c: usize) -> Result<(usize, usize, usize)> {
    let n = g.n;
    for p in [a, b, c] {
        if p < 1 || p > n {
            return Err(Error::InvalidInput(format!("index {p} outside 1..={n}")));
        }
    }
    if a >= b || a >= c || b == c {
        return Err(Error::InvalidInput(
            "triple must satisfy a < b, a < c, b != c".into(),
        ));
    }
    let ab = g.vertex_index(a, b).unwrap();
    let ac = g.vertex_index(a, c).unwrap();
    let bc = g.vertex_index(b, c).unwrap();
    Ok((ab, ac, bc))
}

/// Does N(b,c) equal N(a,b) Δ N(a,c) in G_n?
///
/// The identity holds up to chords meeting {a,b,c}: see
/// [`xor_neighborhood_defect`], which is always confined to such chords.
/// It is genuinely false for some triples — e.g. (1,2,3) in G_4.
pub fn xor_neighborhood_check(g: &GnInstance, a: usize, b: usize, c: usize) -> Result<bool> {
    Ok(xor_neighborhood_defect(g, a, b, c)?.is_empty())
}

/// The vertices on which N(b,c) and N(a,b) Δ N(a,c) disagree, as pairs.
pub fn xor_neighborhood_defect(
    g: &GnInstance,
    a: usize,
    b: usize,
    c: usize,
) -> Result<Vec<(usize, usize)>> {
    let (ab, ac, bc) = check_triple(g, a, b, c)?;
    let mut want = g.graph.neighborhood_bits(ab);
    want.xor_assign(&g.graph.neighborhood_bits(ac));
    let have = g.graph.neighborhood_bits(bc);
    Ok(want.xor(&have).iter_ones().map(|k| g.vertices[k]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interleave_examples() {
        assert!(interleave(4, 1, 3, 2, 4).unwrap());
        assert!(!interleave(4, 1, 2, 3, 4).unwrap());
        assert!(!interleave(4, 1, 2, 2, 3).unwrap()); // shared endpoint
        assert!(interleave(5, 4, 2, 5, 3).unwrap()); // wraps around
        assert!(!interleave(4, 1, 4, 2, 3).unwrap()); // nested
        assert!(interleave(4, 0, 1, 2, 3).is_err());
        assert!(interleave(4, 1, 5, 2, 3).is_err());
        assert!(interleave(4, 2, 2, 1, 3).is_err());
    }

    #[test]
    fn interleave_is_symmetric() {
        let n = 7;
        for a1 in 1..=n {
            for b1 in 1..=n {
                for a2 in 1..=n {
                    for b2 in 1..=n {
                        if a1 == b1 || a2 == b2 {
                            continue;
                        }
                        assert_eq!(
                            interleave(n, a1, b1, a2, b2).unwrap(),
                            interleave(n, a2, b2, a1, b1).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn diagram_validation() {
        assert!(ChordDiagram::from_word(&[0, 1, 0]).is_err());
        assert!(ChordDiagram::from_word(&[0, 1, 0, 2]).is_err());
        assert!(ChordDiagram::from_word(&[0, 0, 0, 0]).is_err());
        assert!(ChordDiagram::from_word(&[]).unwrap().word().is_empty());
        assert_eq!(ChordDiagram::from_word(&[0, 1, 0, 1]).unwrap().n_chords(), 2);
    }

    #[test]
    fn intersection_graph_examples() {
        let k2 = ChordDiagram::from_word(&[0, 1, 0, 1]).unwrap().intersection_graph();
        assert_eq!((k2.n(), k2.m()), (2, 1));
        let iso = ChordDiagram::from_word(&[0, 0, 1, 1]).unwrap().intersection_graph();
        assert_eq!((iso.n(), iso.m()), (2, 0));
        let k3 = ChordDiagram::from_word(&[0, 1, 2, 0, 1, 2]).unwrap().intersection_graph();
        assert_eq!((k3.n(), k3.m()), (3, 3));
    }

    #[test]
    fn canonical_rotation() {
        let a = ChordDiagram::from_word(&[1, 0, 1, 0]).unwrap();
        let b = ChordDiagram::from_word(&[0, 1, 0, 1]).unwrap();
        assert_eq!(a.canonical(), b.canonical());
        assert_eq!(b.canonical().word(), &[0, 1, 0, 1]);
        // rotations of a longer word agree
        let w = [2, 0, 1, 1, 0, 2];
        let rot: Vec<usize> = (0..6).map(|i| w[(i + 4) % 6]).collect();
        let d1 = ChordDiagram::from_word(&w).unwrap().canonical();
        let d2 = ChordDiagram::from_word(&rot).unwrap().canonical();
        assert_eq!(d1, d2);
        assert_eq!(d1.word()[0], 0);
    }

    #[test]
    fn gn_small_counts() {
        assert!(generate_gn(1).is_err());
        let g3 = generate_gn(3).unwrap();
        assert_eq!((g3.graph().n(), g3.graph().m()), (3, 0));
        let g4 = generate_gn(4).unwrap();
        assert_eq!((g4.graph().n(), g4.graph().m()), (6, 1));
        let i13 = g4.vertex_index(1, 3).unwrap();
        let i24 = g4.vertex_index(2, 4).unwrap();
        assert!(g4.graph().has_edge(i13, i24));
        let g6 = generate_gn(6).unwrap();
        assert_eq!(g6.graph().n(), 15);
    }

    #[test]
    fn gn_diagram_realizes_the_graph() {
        for n in 2..=8 {
            let gn = generate_gn(n).unwrap();
            assert_eq!(&gn.diagram().intersection_graph(), gn.graph(), "n={n}");
        }
    }

    #[test]
    fn xor_identity_observed_values() {
        // Trivially true when all three neighborhoods are empty.
        let g3 = generate_gn(3).unwrap();
        assert!(xor_neighborhood_check(&g3, 1, 2, 3).unwrap());
        // False whenever the defect set is nonempty; these three triples all
        // have defects touching {a,b,c}.
        let g4 = generate_gn(4).unwrap();
        assert!(!xor_neighborhood_check(&g4, 1, 2, 3).unwrap());
        assert_eq!(xor_neighborhood_defect(&g4, 1, 2, 3).unwrap(), vec![(2, 4)]);
        let g5 = generate_gn(5).unwrap();
        assert!(!xor_neighborhood_check(&g5, 1, 3, 4).unwrap());
        let g6 = generate_gn(6).unwrap();
        assert!(!xor_neighborhood_check(&g6, 2, 4, 6).unwrap());
        // invalid triples
        assert!(xor_neighborhood_check(&g4, 2, 1, 3).is_err());
        assert!(xor_neighborhood_check(&g4, 1, 2, 2).is_err());
        assert!(xor_neighborhood_check(&g4, 1, 2, 9).is_err());
    }

    #[test]
    fn xor_defect_touches_the_triple() {
        // The identity N(b,c) = N(a,b) Δ N(a,c) restricted to chords disjoint
        // from {a,b,c} is exact: crossing parity against a fixed disjoint
        // chord is additive over endpoint sets.  So every defect chord must
        // meet {a,b,c}.
        for n in 2..=8 {
            let gn = generate_gn(n).unwrap();
            for a in 1..=n {
                for b in a + 1..=n {
                    for c in a + 1..=n {
                        if b == c {
                            continue;
                        }
                        for (x, y) in xor_neighborhood_defect(&gn, a, b, c).unwrap() {
                            assert!(
                                [x, y].iter().any(|p| [a, b, c].contains(p)),
                                "n={n} triple ({a},{b},{c}) defect ({x},{y})"
                            );
                        }
                    }
                }
            }
        }
    }
}
