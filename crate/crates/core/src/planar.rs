//! Combinatorial planar embeddings as rotation systems, face tracing, dual
//! multigraphs, and the cotree/dual-tree correspondence.
//!
//! Darts: edge e contributes dart 2e living at endpoints(e).0 and dart 2e+1
//! at endpoints(e).1 (both at the same vertex for a loop).

use crate::error::{Error, Result};
use crate::graph::Multigraph;

#[derive(Clone, Debug)]
pub struct PlanarEmbedding {
    g: Multigraph,
    rotation: Vec<Vec<usize>>,
    dart_vertex: Vec<usize>,
    dart_pos: Vec<usize>,
}

/// Vertex a dart lives at, from the encoding alone.
pub fn dart_home(g: &Multigraph, dart: usize) -> usize {
    let (u, v) = g.endpoints(dart / 2);
    if dart % 2 == 0 { u } else { v }
}

impl PlanarEmbedding {
    /// Validates that `rotation` lists every dart exactly once, at the vertex
    /// the dart encoding dictates, and that the traced faces certify genus 0
    /// on every component that has an edge.
    pub fn new(g: Multigraph, rotation: Vec<Vec<usize>>) -> Result<PlanarEmbedding> {
        if rotation.len() != g.n() {
            return Err(Error::InvalidInput("one rotation list per vertex required".into()));
        }
        let nd = 2 * g.m();
        let mut dart_vertex = vec![usize::MAX; nd];
        let mut dart_pos = vec![usize::MAX; nd];
        for (v, rot) in rotation.iter().enumerate() {
            for (p, &d) in rot.iter().enumerate() {
                if d >= nd {
                    return Err(Error::InvalidInput(format!("dart {d} out of range")));
                }
                if dart_vertex[d] != usize::MAX {
                    return Err(Error::InvalidInput(format!("dart {d} listed twice")));
                }
                if dart_home(&g, d) != v {
                    return Err(Error::InvalidInput(format!(
                        "dart {d} belongs at vertex {} but is listed at {v}",
                        dart_home(&g, d)
                    )));
                }
                dart_vertex[d] = v;
                dart_pos[d] = p;
            }
        }
        if dart_vertex.iter().any(|&v| v == usize::MAX) {
            return Err(Error::InvalidInput("some dart is missing from the rotation".into()));
        }
        let emb = PlanarEmbedding { g, rotation, dart_vertex, dart_pos };
        emb.trace_faces()?; // genus check
        Ok(emb)
    }

    pub fn graph(&self) -> &Multigraph {
        &self.g
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    /// Successor of a dart along its face: step to the companion dart, then
    /// take the next dart in the rotation at that vertex.
    pub fn next_in_face(&self, dart: usize) -> usize {
        let a = dart ^ 1;
        let w = self.dart_vertex[a];
        let p = self.dart_pos[a];
        self.rotation[w][(p + 1) % self.rotation[w].len()]
    }

    /// All face walks (dart sequences).  Errors unless every component with
    /// at least one edge satisfies V − E + F = 2 for its own faces, the
    /// genus-0 certificate.  (For a connected embedding this is Euler's
    /// V − E + F = 2; isolated vertices trace no walk.)
    pub fn trace_faces(&self) -> Result<Vec<Vec<usize>>> {
        let nd = 2 * self.g.m();
        let mut seen = vec![false; nd];
        let mut faces = Vec::new();
        for start in 0..nd {
            if seen[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                debug_assert!(!seen[d]);
                seen[d] = true;
                walk.push(d);
                d = self.next_in_face(d);
                if d == start {
                    break;
                }
            }
            faces.push(walk);
        }
        // per-component Euler check
        let comps = self.g.components();
        let mut comp_of = vec![0usize; self.g.n()];
        for (ci, comp) in comps.iter().enumerate() {
            for &v in comp {
                comp_of[v] = ci;
            }
        }
        let mut e_count = vec![0usize; comps.len()];
        for e in 0..self.g.m() {
            e_count[comp_of[self.g.endpoints(e).0]] += 1;
        }
        let mut f_count = vec![0usize; comps.len()];
        for walk in &faces {
            f_count[comp_of[self.dart_vertex[walk[0]]]] += 1;
        }
        for (ci, comp) in comps.iter().enumerate() {
            if e_count[ci] == 0 {
                continue;
            }
            let euler = comp.len() as i64 - e_count[ci] as i64 + f_count[ci] as i64;
            if euler != 2 {
                return Err(Error::InvalidInput(format!(
                    "non-planar embedding: component of vertex {} has V-E+F = {euler}, want 2",
                    comp[0]
                )));
            }
        }
        Ok(faces)
    }

    /// Face id of each dart, numbered in the order `trace_faces` reports.
    pub fn face_of_darts(&self) -> Result<(usize, Vec<usize>)> {
        let faces = self.trace_faces()?;
        let mut of = vec![usize::MAX; 2 * self.g.m()];
        for (fi, walk) in faces.iter().enumerate() {
            for &d in walk {
                of[d] = fi;
            }
        }
        Ok((faces.len(), of))
    }
}

/// Planar dual: one vertex per face, one dual edge per primal edge joining
/// the faces on its two sides (a loop when both sides are the same face).
/// Dual edge ids equal primal ids; the identity bijection is returned.
pub fn dual_graph(emb: &PlanarEmbedding) -> Result<(Multigraph, Vec<usize>)> {
    if !emb.graph().is_connected() {
        return Err(Error::InvalidInput(
            "dual of a disconnected embedding; process components separately".into(),
        ));
    }
    let (nf, face_of) = emb.face_of_darts()?;
    let ends: Vec<(usize, usize)> = (0..emb.graph().m())
        .map(|e| (face_of[2 * e], face_of[2 * e + 1]))
        .collect();
    let dual = Multigraph::from_edges(nf, &ends)?;
    Ok((dual, (0..emb.graph().m()).collect()))
}

/// The complement of a spanning tree, viewed on the dual: for a connected
/// bridgeless embedding the non-tree edges' duals form a spanning tree of
/// the dual graph.  Returns those dual edge ids (equal to primal ids).
pub fn cotree_dual_forest(emb: &PlanarEmbedding, tree: &[usize]) -> Result<Vec<usize>> {
    let g = emb.graph();
    if !g.is_connected() {
        return Err(Error::InvalidInput("embedding must be connected".into()));
    }
    if !g.bridges().is_empty() {
        return Err(Error::InvalidInput(
            "embedding must be bridgeless (contract bridges first)".into(),
        ));
    }
    if !g.is_spanning_forest(tree) {
        return Err(Error::InvalidInput("tree is not a spanning forest".into()));
    }
    let (dual, _) = dual_graph(emb)?;
    let in_tree = {
        let mut mask = vec![false; g.m()];
        for &e in tree {
            mask[e] = true;
        }
        mask
    };
    let cotree: Vec<usize> = (0..g.m()).filter(|&e| !in_tree[e]).collect();
    if !dual.is_spanning_forest(&cotree) {
        return Err(Error::Internal(
            "cotree is not a spanning tree of the dual; embedding data is inconsistent".into(),
        ));
    }
    Ok(cotree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::graphic_fundamental_graph;

    fn triangle() -> PlanarEmbedding {
        // edges 0=(0,1), 1=(1,2), 2=(2,0)
        let g = Multigraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        PlanarEmbedding::new(g, vec![vec![0, 5], vec![2, 1], vec![4, 3]]).unwrap()
    }

    fn k4() -> PlanarEmbedding {
        // triangle 0,1,2 with vertex 3 inside; edges
        // 0=(0,1) 1=(1,2) 2=(2,0) 3=(1,3) 4=(2,3) 5=(0,3)
        let g =
            Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (1, 3), (2, 3), (0, 3)]).unwrap();
        PlanarEmbedding::new(
            g,
            vec![vec![0, 5, 10], vec![2, 1, 6], vec![4, 3, 8], vec![11, 9, 7]],
        )
        .unwrap()
    }

    fn c4() -> PlanarEmbedding {
        let g = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        PlanarEmbedding::new(g, vec![vec![0, 7], vec![2, 1], vec![4, 3], vec![6, 5]]).unwrap()
    }

    #[test]
    fn face_counts() {
        assert_eq!(triangle().trace_faces().unwrap().len(), 2);
        assert_eq!(k4().trace_faces().unwrap().len(), 4);
        let single = PlanarEmbedding::new(
            Multigraph::from_edges(2, &[(0, 1)]).unwrap(),
            vec![vec![0], vec![1]],
        )
        .unwrap();
        let faces = single.trace_faces().unwrap();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].len(), 2);
    }

    #[test]
    fn face_walks_cover_each_dart_once() {
        for emb in [triangle(), k4(), c4()] {
            let faces = emb.trace_faces().unwrap();
            let total: usize = faces.iter().map(|w| w.len()).sum();
            assert_eq!(total, 2 * emb.graph().m());
            let mut all: Vec<usize> = faces.into_iter().flatten().collect();
            all.sort_unstable();
            assert_eq!(all, (0..2 * emb.graph().m()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn twisted_rotation_fails_euler() {
        let g =
            Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (1, 3), (2, 3), (0, 3)]).unwrap();
        // vertex 3's rotation reversed: genus 1
        let r = PlanarEmbedding::new(
            g,
            vec![vec![0, 5, 10], vec![2, 1, 6], vec![4, 3, 8], vec![7, 9, 11]],
        );
        assert!(matches!(r, Err(Error::InvalidInput(_))));
    }

    #[test]
    fn structural_validation() {
        let g = Multigraph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(PlanarEmbedding::new(g.clone(), vec![vec![0, 1], vec![]]).is_err());
        assert!(PlanarEmbedding::new(g.clone(), vec![vec![0], vec![]]).is_err());
        assert!(PlanarEmbedding::new(g.clone(), vec![vec![0, 0], vec![1]]).is_err());
        // loop: both darts at the same vertex, two faces
        let l = Multigraph::from_edges(1, &[(0, 0)]).unwrap();
        let emb = PlanarEmbedding::new(l, vec![vec![0, 1]]).unwrap();
        assert_eq!(emb.trace_faces().unwrap().len(), 2);
    }

    #[test]
    fn disconnected_embedding_traces_but_has_no_dual() {
        let g = Multigraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
            .unwrap();
        let emb = PlanarEmbedding::new(
            g,
            vec![vec![0, 5], vec![2, 1], vec![4, 3], vec![6, 11], vec![8, 7], vec![10, 9]],
        )
        .unwrap();
        assert_eq!(emb.trace_faces().unwrap().len(), 4);
        assert!(dual_graph(&emb).is_err());
    }

    #[test]
    fn dual_examples() {
        let (d, bij) = dual_graph(&triangle()).unwrap();
        assert_eq!((d.n(), d.m()), (2, 3));
        assert!(d.edge_list().iter().all(|&(u, v)| u != v));
        assert_eq!(bij, vec![0, 1, 2]);

        let (d, _) = dual_graph(&k4()).unwrap();
        assert_eq!((d.n(), d.m()), (4, 6));
        // self-dual: simple, all degrees 3
        assert!(d.edge_list().iter().all(|&(u, v)| u != v));
        for v in 0..4 {
            assert_eq!(d.incident(v).len(), 3);
        }

        let single = PlanarEmbedding::new(
            Multigraph::from_edges(2, &[(0, 1)]).unwrap(),
            vec![vec![0], vec![1]],
        )
        .unwrap();
        let (d, _) = dual_graph(&single).unwrap();
        assert_eq!((d.n(), d.m()), (1, 1));
        assert!(d.is_loop(0));
    }

    #[test]
    fn cotree_examples() {
        // K4 with star tree at 0: edges 0,2,5 = (0,1),(2,0),(0,3)
        let emb = k4();
        let cot = cotree_dual_forest(&emb, &[0, 2, 5]).unwrap();
        assert_eq!(cot, vec![1, 3, 4]);
        let (dual, _) = dual_graph(&emb).unwrap();
        assert!(dual.is_spanning_forest(&cot));

        let cot = cotree_dual_forest(&triangle(), &[0, 1]).unwrap();
        assert_eq!(cot, vec![2]);

        let cot = cotree_dual_forest(&c4(), &[0, 1, 2]).unwrap();
        assert_eq!(cot, vec![3]);

        // bridge input refused
        let tree = PlanarEmbedding::new(
            Multigraph::from_edges(2, &[(0, 1)]).unwrap(),
            vec![vec![0], vec![1]],
        )
        .unwrap();
        assert!(cotree_dual_forest(&tree, &[0]).is_err());
    }

    #[test]
    fn cut_cycle_duality_through_the_dual() {
        // F(G,T) equals F(G*,T*) with sides swapped, edge ids shared.
        for (emb, tree) in [
            (k4(), vec![0usize, 2, 5]),
            (k4(), vec![0, 1, 3]),
            (c4(), vec![0, 1, 2]),
            (triangle(), vec![0, 1]),
        ] {
            let f = graphic_fundamental_graph(emb.graph(), &tree).unwrap();
            let (dual, _) = dual_graph(&emb).unwrap();
            let cot = cotree_dual_forest(&emb, &tree).unwrap();
            let fd = graphic_fundamental_graph(&dual, &cot).unwrap();
            assert!(f.eq_side_swapped(&fd));
        }
    }
}
