//! Constructive odd-coloring algorithms: one-sided colorings of bipartite
//! graphs by near-twin elimination, improper odd colorings via the tensor
//! double cover, and proper odd colorings as products.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::exact::{is_odd_coloring, is_one_sided_odd};
use crate::graph::{BipartiteGraph, Graph};
use crate::ncomplexity::min_symdiff_pair;
use std::collections::{BTreeMap, BTreeSet};

/// A vertex coloring with metadata.  `colors[v] == 0` means v is uncolored
/// (only one-sided results leave a side uncolored).
#[derive(Clone, Debug)]
pub struct ColoringResult {
    pub colors: Vec<u32>,
    pub num_colors: u32,
    /// Smallest color of odd multiplicity among each vertex's colored
    /// neighbors, if any.
    pub witness: Vec<Option<u32>>,
    pub proper: bool,
    pub algorithm: String,
    pub seed: Option<u64>,
}

fn witnesses_ignoring_uncolored(g: &Graph, colors: &[u32]) -> Vec<Option<u32>> {
    (0..g.n())
        .map(|v| {
            let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
            for &u in g.neighbors(v) {
                if colors[u] > 0 {
                    *counts.entry(colors[u]).or_insert(0) += 1;
                }
            }
            counts.into_iter().find(|&(_, c)| c % 2 == 1).map(|(col, _)| col)
        })
        .collect()
}

fn distinct_colors(colors: &[u32]) -> u32 {
    colors.iter().filter(|&&c| c > 0).collect::<BTreeSet<_>>().len() as u32
}

/// Proper coloring: BFS 2-coloring when the graph is bipartite, otherwise
/// greedy along the reverse degeneracy order.
pub fn greedy_proper_color(g: &Graph) -> Vec<u32> {
    let mut colors = vec![0u32; g.n()];
    let mut bipartite = true;
    'bfs: for root in 0..g.n() {
        if colors[root] != 0 {
            continue;
        }
        colors[root] = 1;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if colors[u] == 0 {
                    colors[u] = 3 - colors[v];
                    queue.push_back(u);
                } else if colors[u] == colors[v] {
                    bipartite = false;
                    break 'bfs;
                }
            }
        }
    }
    if bipartite {
        return colors;
    }
    g.greedy_proper_coloring()
}

/// One-sided odd coloring of Y: every X vertex with a neighbor sees some
/// color an odd number of times.  Colors are dense 1..k; X stays uncolored.
///
/// The recursion removes a near-twin pair of Y vertices chosen from the
/// largest color class of the pair graph H (whose edges are the exact
/// neighborhoods of degree-2 X vertices), colors the rest, then gives the
/// pair a common color that does not erase any vertex's only odd color.
pub fn one_sided_odd_color(bip: &BipartiteGraph) -> Result<ColoringResult> {
    let g = bip.graph();
    let ys: Vec<usize> = bip.y().to_vec();
    let mut assigned: BTreeMap<usize, u32> = BTreeMap::new();
    color_rec(g, &ys, &mut assigned);

    let mut colors = vec![0u32; g.n()];
    for (&y, &c) in &assigned {
        colors[y] = c;
    }
    let num_colors = distinct_colors(&colors);
    debug_assert!(num_colors as usize <= ys.len().max(1));
    let (ok, fail) = is_one_sided_odd(bip, &colors)?;
    if !ok {
        return Err(Error::Internal(format!(
            "one-sided coloring failed verification at vertex {}",
            fail.unwrap()
        )));
    }
    Ok(ColoringResult {
        witness: witnesses_ignoring_uncolored(g, &colors),
        colors,
        num_colors,
        proper: false,
        algorithm: "one_sided".into(),
        seed: None,
    })
}

/// Deduplicated X side for the current Y subset: drop X vertices with no
/// remaining neighbor, keep the smallest id of each restricted-neighborhood
/// class.
fn dedup_x(g: &Graph, in_x: impl Fn(usize) -> bool, ys: &[usize]) -> Vec<usize> {
    let yset: BTreeSet<usize> = ys.iter().copied().collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut keep = Vec::new();
    for x in 0..g.n() {
        if !in_x(x) {
            continue;
        }
        let restricted: Vec<usize> =
            g.neighbors(x).iter().copied().filter(|u| yset.contains(u)).collect();
        if restricted.is_empty() {
            continue;
        }
        if seen.insert(restricted) {
            keep.push(x);
        }
    }
    keep
}

fn color_rec(g: &Graph, ys: &[usize], assigned: &mut BTreeMap<usize, u32>) {
    if ys.len() <= 1 {
        if let Some(&y) = ys.first() {
            assigned.insert(y, 1);
        }
        return;
    }
    let yset: BTreeSet<usize> = ys.iter().copied().collect();
    let ysafe = |v: usize| yset.contains(&v);
    let xs = dedup_x(g, |v| !ysafe(v), ys);

    // H: an edge per degree-2 X vertex whose remaining neighborhood is a pair
    let ypos: BTreeMap<usize, usize> = ys.iter().enumerate().map(|(i, &y)| (y, i)).collect();
    let mut h_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &x in &xs {
        let restricted: Vec<usize> =
            g.neighbors(x).iter().copied().filter(|&u| ysafe(u)).collect();
        if let [a, b] = restricted[..] {
            h_edges.insert((ypos[&a].min(ypos[&b]), ypos[&a].max(ypos[&b])));
        }
    }
    let h = Graph::from_edges(ys.len(), &h_edges.iter().copied().collect::<Vec<_>>())
        .expect("H edges are in range");
    let h_colors = h.greedy_proper_coloring();
    let mut classes: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (i, &c) in h_colors.iter().enumerate() {
        classes.entry(c).or_default().push(ys[i]);
    }
    let yprime = classes
        .into_iter()
        .max_by_key(|(c, members)| (members.len(), std::cmp::Reverse(*c)))
        .map(|(_, members)| members)
        .unwrap_or_default();

    if yprime.len() < 2 {
        // rainbow base case: all-distinct colors make every multiplicity one
        for (i, &y) in ys.iter().enumerate() {
            assigned.insert(y, i as u32 + 1);
        }
        return;
    }

    // near twins within Y′, symmetric difference over the deduplicated X side
    let xpos: BTreeMap<usize, usize> = xs.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let nbhd: Vec<Bits> = yprime
        .iter()
        .map(|&y| {
            let idx: Vec<usize> = g
                .neighbors(y)
                .iter()
                .filter_map(|u| xpos.get(u).copied())
                .collect();
            Bits::from_indices(xs.len(), &idx)
        })
        .collect();
    let (i, j, _) = min_symdiff_pair(&nbhd).expect("Y′ has at least two vertices");
    let (u, v) = (yprime[i], yprime[j]);

    let rest: Vec<usize> = ys.iter().copied().filter(|&y| y != u && y != v).collect();
    color_rec(g, &rest, assigned);

    let max_used = rest.iter().map(|y| assigned[y]).max().unwrap_or(0);
    // colors that are currently some affected vertex's only odd color
    let mut bad: BTreeSet<u32> = BTreeSet::new();
    for &x in &xs {
        let a = g.neighbors(x).contains(&u);
        let b = g.neighbors(x).contains(&v);
        if a == b {
            continue; // both or neither: parity of any color class is preserved
        }
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for &w in g.neighbors(x) {
            if let Some(&c) = assigned.get(&w) {
                *counts.entry(c).or_insert(0) += 1;
            }
        }
        let odd: Vec<u32> =
            counts.into_iter().filter(|&(_, c)| c % 2 == 1).map(|(c, _)| c).collect();
        if let [only] = odd[..] {
            bad.insert(only);
        }
    }
    let c = (1..=max_used).find(|c| !bad.contains(c)).unwrap_or(max_used + 1);
    assigned.insert(u, c);
    assigned.insert(v, c);
}

/// Improper odd coloring: every non-isolated vertex sees some color an odd
/// number of times, monochromatic edges allowed.  Obtained as a one-sided
/// coloring of the tensor double cover, read off the second copy.
pub fn improper_odd_color(g: &Graph) -> Result<ColoringResult> {
    let n = g.n();
    if n == 0 {
        return Ok(ColoringResult {
            colors: Vec::new(),
            num_colors: 0,
            witness: Vec::new(),
            proper: false,
            algorithm: "improper_odd".into(),
            seed: None,
        });
    }
    let bip = g.tensor_with_k2();
    let one_sided = one_sided_odd_color(&bip)?;
    let colors: Vec<u32> = (0..n).map(|v| one_sided.colors[n + v]).collect();

    let (ok, fail) = is_odd_coloring(g, &colors, false)?;
    if !ok {
        return Err(Error::Internal(format!(
            "improper odd coloring failed verification at vertex {}",
            fail.unwrap()
        )));
    }
    Ok(ColoringResult {
        num_colors: distinct_colors(&colors),
        witness: crate::exact::odd_witnesses(g, &colors),
        colors,
        proper: false,
        algorithm: "improper_odd".into(),
        seed: None,
    })
}

/// Proper odd coloring as the product of a proper coloring and an improper
/// odd coloring: pairs are renumbered densely in lexicographic order.
pub fn product_odd_color(
    g: &Graph,
    proper: &[u32],
    improper_odd: &[u32],
) -> Result<ColoringResult> {
    if proper.len() != g.n() || improper_odd.len() != g.n() {
        return Err(Error::InvalidInput("coloring length differs from vertex count".into()));
    }
    if let Some(v) = proper.iter().position(|&c| c == 0) {
        return Err(Error::InvalidInput(format!("vertex {v} is uncolored")));
    }
    for v in 0..g.n() {
        if g.neighbors(v).iter().any(|&u| proper[u] == proper[v]) {
            return Err(Error::InvalidInput(format!(
                "proper coloring has a monochromatic edge at vertex {v}"
            )));
        }
    }
    let (odd_ok, fail) = is_odd_coloring(g, improper_odd, false)?;
    if !odd_ok {
        return Err(Error::InvalidInput(format!(
            "improper coloring is not an odd coloring (vertex {})",
            fail.unwrap()
        )));
    }

    let pairs: Vec<(u32, u32)> = (0..g.n()).map(|v| (proper[v], improper_odd[v])).collect();
    let index: BTreeMap<(u32, u32), u32> = pairs
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .enumerate()
        .map(|(i, p)| (p, i as u32 + 1))
        .collect();
    let colors: Vec<u32> = pairs.iter().map(|p| index[p]).collect();

    let (ok, fail) = is_odd_coloring(g, &colors, true)?;
    if !ok {
        return Err(Error::Internal(format!(
            "product coloring failed verification at vertex {}",
            fail.unwrap()
        )));
    }
    Ok(ColoringResult {
        num_colors: index.len() as u32,
        witness: crate::exact::odd_witnesses(g, &colors),
        colors,
        proper: true,
        algorithm: "product".into(),
        seed: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{exact_chi_io, SearchBudget};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn greedy_proper_examples() {
        let c4 = cycle(4);
        assert_eq!(greedy_proper_color(&c4), vec![1, 2, 1, 2]);
        let c5 = cycle(5);
        let cols = greedy_proper_color(&c5);
        assert_eq!(cols.iter().collect::<BTreeSet<_>>().len(), 3);
        let k5 = Graph::from_edges(
            5,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        )
        .unwrap();
        assert_eq!(greedy_proper_color(&k5).iter().collect::<BTreeSet<_>>().len(), 5);
        let edgeless = Graph::from_edges(3, &[]).unwrap();
        assert_eq!(greedy_proper_color(&edgeless), vec![1, 1, 1]);
        // validity on every output
        for g in [cycle(4), cycle(5), k5] {
            let cols = greedy_proper_color(&g);
            for v in 0..g.n() {
                assert!(g.neighbors(v).iter().all(|&u| cols[u] != cols[v]));
            }
        }
    }

    #[test]
    fn one_sided_examples() {
        let c4 = cycle(4);
        let bip = BipartiteGraph::new(c4, &[true, false, true, false]).unwrap();
        let res = one_sided_odd_color(&bip).unwrap();
        assert_eq!(res.num_colors, 2);
        assert_eq!((res.colors[1], res.colors[3]), (1, 2));
        assert_eq!(res.colors[0], 0);
        assert!(!res.proper);
        assert_eq!(res.witness[0], Some(1));

        let matching = Graph::from_edges(6, &[(0, 3), (1, 4), (2, 5)]).unwrap();
        let bip =
            BipartiteGraph::new(matching, &[true, true, true, false, false, false]).unwrap();
        assert_eq!(one_sided_odd_color(&bip).unwrap().num_colors, 1);

        let k4 = crate::graph::Multigraph::from_edges(
            4,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        let f = crate::matroid::graphic_fundamental_graph(&k4, &[0, 1, 2]).unwrap();
        let res = one_sided_odd_color(f.bipartite()).unwrap();
        assert_eq!(res.num_colors, 3); // exact minimum for this instance
    }

    #[test]
    fn one_sided_on_random_bipartite_graphs() {
        for seed in 0..30u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let nx = rng.random_range(1..=8);
            let ny = rng.random_range(1..=8);
            let p = [0.15, 0.35, 0.6][(seed % 3) as usize];
            let mut edges = Vec::new();
            for x in 0..nx {
                for y in 0..ny {
                    if rng.random_bool(p) {
                        edges.push((x, nx + y));
                    }
                }
            }
            let g = Graph::from_edges(nx + ny, &edges).unwrap();
            let in_x: Vec<bool> = (0..nx + ny).map(|v| v < nx).collect();
            let bip = BipartiteGraph::new(g, &in_x).unwrap();
            let res = one_sided_odd_color(&bip).unwrap();
            assert!(is_one_sided_odd(&bip, &res.colors).unwrap().0);
            assert!(res.num_colors as usize <= ny);
        }
    }

    #[test]
    fn improper_examples() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(improper_odd_color(&k2).unwrap().num_colors, 1);
        let c4 = cycle(4);
        let res = improper_odd_color(&c4).unwrap();
        assert_eq!(res.num_colors, 2);
        assert!(is_odd_coloring(&c4, &res.colors, false).unwrap().0);
        // one edge plus isolated vertices: a single color works
        let g4 = crate::chord::generate_gn(4).unwrap();
        assert_eq!(improper_odd_color(g4.graph()).unwrap().num_colors, 1);
    }

    #[test]
    fn improper_at_least_exact_minimum() {
        let b = SearchBudget::default();
        for g in [cycle(3), cycle(4), cycle(5), cycle(6),
            Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]).unwrap()]
        {
            let res = improper_odd_color(&g).unwrap();
            assert!(res.num_colors >= exact_chi_io(&g, b).unwrap().value);
        }
    }

    #[test]
    fn product_examples() {
        let c4 = cycle(4);
        let proper = greedy_proper_color(&c4);
        let improper = improper_odd_color(&c4).unwrap();
        let res = product_odd_color(&c4, &proper, &improper.colors).unwrap();
        assert!(res.proper);
        assert!(res.num_colors <= 4);
        assert!(is_odd_coloring(&c4, &res.colors, true).unwrap().0);

        // palette never exceeds the product of the factor palettes
        let distinct = |cols: &[u32]| cols.iter().collect::<BTreeSet<_>>().len() as u32;
        assert!(res.num_colors <= distinct(&proper) * improper.num_colors);
    }

    #[test]
    fn product_rejects_bad_inputs() {
        let c4 = cycle(4);
        // monochromatic edge in the proper part
        assert!(product_odd_color(&c4, &[1, 1, 2, 2], &[1, 1, 2, 2]).is_err());
        // improper part with no odd witness at vertex 0
        assert!(product_odd_color(&c4, &[1, 2, 1, 2], &[1, 1, 1, 1]).is_err());
        assert!(product_odd_color(&c4, &[1, 2, 1], &[1, 1, 2, 2]).is_err());
    }

    #[test]
    fn product_on_random_graphs() {
        for seed in 0..25u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabcd);
            let n = rng.random_range(2..=10);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let proper = greedy_proper_color(&g);
            let improper = improper_odd_color(&g).unwrap();
            let res = product_odd_color(&g, &proper, &improper.colors).unwrap();
            assert!(is_odd_coloring(&g, &res.colors, true).unwrap().0);
        }
    }
}
