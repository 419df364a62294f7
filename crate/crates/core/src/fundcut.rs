//! Edge colorings driven by fundamental cuts: odd 3-colorings of laminar
//! families, a 9-color routine local to one cut, cut layerings, star-forest
//! decompositions, and the bounded-palette coloring of all non-tree edges.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::exact::is_fundcut_odd;
use crate::graph::{Graph, Multigraph};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};

/// A family of nonempty subsets of 0..ground in which every two members are
/// disjoint or nested.
#[derive(Clone, Debug)]
pub struct LaminarFamily {
    ground: usize,
    sets: Vec<Bits>,
}

impl LaminarFamily {
    pub fn new(ground: usize, sets: Vec<Bits>) -> Result<LaminarFamily> {
        for (i, s) in sets.iter().enumerate() {
            if s.len() != ground {
                return Err(Error::InvalidInput(format!(
                    "set {i} has width {} for ground size {ground}",
                    s.len()
                )));
            }
            if s.is_empty() {
                return Err(Error::InvalidInput(format!("set {i} is empty")));
            }
        }
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                let (a, b) = (&sets[i], &sets[j]);
                if a.intersects(b) && !a.is_subset(b) && !b.is_subset(a) {
                    return Err(Error::InvalidInput(format!(
                        "sets {i} and {j} overlap without nesting: {a:?} vs {b:?}"
                    )));
                }
            }
        }
        Ok(LaminarFamily { ground, sets })
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn sets(&self) -> &[Bits] {
        &self.sets
    }
}

// ---- parity DP over a laminar forest ----------------------------------------
//
// States are pairs (|class 1| mod 2, |class 2| mod 2) encoded as 2-bit values,
// and feasible state sets as 4-bit masks.  In strict mode every member set
// must reach a state other than (0,0): some of the first two classes is odd.
// In relaxed mode class 3 may also witness, which is automatic for odd-size
// sets; even-size sets must still avoid (0,0).

struct ForestNode {
    size: usize,
    children: Vec<usize>,
    direct: Vec<usize>,
}

struct Forest {
    nodes: Vec<ForestNode>,
    postorder: Vec<usize>,
    ground: usize,
}

fn convolve(a: u8, b: u8) -> u8 {
    let mut out = 0u8;
    for s in 0..4 {
        if a >> s & 1 == 0 {
            continue;
        }
        for t in 0..4 {
            if b >> t & 1 == 1 {
                out |= 1 << (s ^ t);
            }
        }
    }
    out
}

/// Reachable parity states of a single element from its allowed colors
/// (bit k of `allowed` = color k+1): color 1 → (1,0), color 2 → (0,1),
/// color 3 → (0,0).
fn element_states(allowed: u8) -> u8 {
    let mut m = 0u8;
    if allowed & 1 != 0 {
        m |= 1 << 2;
    }
    if allowed & 2 != 0 {
        m |= 1 << 1;
    }
    if allowed & 4 != 0 {
        m |= 1 << 0;
    }
    m
}

impl Forest {
    /// Containment forest of a laminar collection; duplicates nest.
    fn build(ground: usize, sets: &[Bits]) -> Forest {
        let mut order: Vec<usize> = (0..sets.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(sets[i].count_ones()));
        let mut nodes: Vec<ForestNode> = Vec::with_capacity(sets.len());
        let mut placed: Vec<usize> = Vec::new(); // original indices, largest first
        let mut parent: Vec<Option<usize>> = vec![None; sets.len()];
        for &i in &order {
            let mut best: Option<usize> = None;
            for &j in &placed {
                if sets[i].is_subset(&sets[j])
                    && best.is_none_or(|b| sets[j].count_ones() < sets[b].count_ones())
                {
                    best = Some(j);
                }
            }
            parent[i] = best;
            placed.push(i);
        }
        let node_of: BTreeMap<usize, usize> =
            order.iter().enumerate().map(|(pos, &i)| (i, pos)).collect();
        for &i in &order {
            nodes.push(ForestNode {
                size: sets[i].count_ones(),
                children: Vec::new(),
                direct: Vec::new(),
            });
        }
        let mut claimed: Vec<Bits> = (0..order.len()).map(|_| Bits::new(ground)).collect();
        for &i in &order {
            if let Some(p) = parent[i] {
                let (pi, ci) = (node_of[&p], node_of[&i]);
                nodes[pi].children.push(ci);
                let mut marked = claimed[pi].clone();
                marked.or_assign(&sets[i]);
                claimed[pi] = marked;
            }
        }
        for (pos, &i) in order.iter().enumerate() {
            let direct: Vec<usize> =
                sets[i].iter_ones().filter(|&e| !claimed[pos].get(e)).collect();
            nodes[pos].direct = direct;
        }
        // children were added in size-descending order, so children precede
        // parents nowhere; compute an explicit postorder
        let roots: Vec<usize> = order
            .iter()
            .enumerate()
            .filter(|(_, &i)| parent[i].is_none())
            .map(|(pos, _)| pos)
            .collect();
        let mut postorder = Vec::with_capacity(nodes.len());
        let mut stack: Vec<(usize, usize)> = roots.iter().map(|&r| (r, 0)).collect();
        while let Some(&mut (v, ref mut k)) = stack.last_mut() {
            if *k < nodes[v].children.len() {
                let c = nodes[v].children[*k];
                *k += 1;
                stack.push((c, 0));
            } else {
                postorder.push(v);
                stack.pop();
            }
        }
        Forest { nodes, postorder, ground }
    }

    fn feasible(&self, allowed: &[u8], strict: bool) -> bool {
        debug_assert_eq!(allowed.len(), self.ground);
        let mut mask = vec![0u8; self.nodes.len()];
        for &idx in &self.postorder {
            let node = &self.nodes[idx];
            let mut m: u8 = 1; // just the zero state
            for &e in &node.direct {
                m = convolve(m, element_states(allowed[e]));
            }
            for &c in &node.children {
                m = convolve(m, mask[c]);
            }
            if strict || node.size % 2 == 0 {
                m &= !1;
            }
            if m == 0 {
                return false;
            }
            mask[idx] = m;
        }
        true
    }

    /// First-feasible assignment scanning elements in id order and colors in
    /// `pref` order; None iff infeasible outright.
    fn solve(&self, allowed: &[u8], strict: bool, pref: [u8; 3]) -> Option<Vec<u8>> {
        if !self.feasible(allowed, strict) {
            return None;
        }
        let mut work = allowed.to_vec();
        let mut colors = vec![0u8; self.ground];
        for e in 0..self.ground {
            let mut done = false;
            for &c in &pref {
                if work[e] & (1 << (c - 1)) == 0 {
                    continue;
                }
                let saved = work[e];
                work[e] = 1 << (c - 1);
                if self.feasible(&work, strict) {
                    colors[e] = c;
                    done = true;
                    break;
                }
                work[e] = saved;
            }
            debug_assert!(done, "feasible family must extend");
            if !done {
                return None;
            }
        }
        Some(colors)
    }
}

/// 3-coloring of the ground set so every member of the family has an odd
/// number of 1s or an odd number of 2s (color 3 is never the witness).
pub fn laminar_odd_3color(family: &LaminarFamily) -> Result<Vec<u8>> {
    let forest = Forest::build(family.ground, &family.sets);
    let allowed = vec![0b111u8; family.ground];
    match forest.solve(&allowed, true, [1, 2, 3]) {
        Some(colors) => {
            debug_assert!(family.sets.iter().all(|s| {
                let (mut c1, mut c2) = (0usize, 0usize);
                for e in s.iter_ones() {
                    match colors[e] {
                        1 => c1 += 1,
                        2 => c2 += 1,
                        _ => {}
                    }
                }
                c1 % 2 == 1 || c2 % 2 == 1
            }));
            Ok(colors)
        }
        None => Err(Error::Infeasible(
            "no 3-coloring gives every member an odd count of color 1 or 2".into(),
        )),
    }
}

// ---- 9-color routine local to one fundamental cut ---------------------------

/// Pairs of 3-colorings encoded as codes 1..9 via code = 3(i-1)+j.  Codes
/// 1..8 are the usable colors; code 9 = (3,3) is the overflow a caller maps
/// to a shared global color.
fn combine_codes(phi1: &[u8], phi2: &[u8]) -> Vec<u8> {
    phi1.iter().zip(phi2).map(|(&i, &j)| 3 * (i - 1) + j).collect()
}

/// Every set must see some code in 1..8 an odd number of times.
fn codes_ok(sets: &[&Bits], codes: &[u8]) -> bool {
    sets.iter().all(|s| {
        let mut counts = [0usize; 10];
        for e in s.iter_ones() {
            counts[codes[e] as usize] += 1;
        }
        counts[1..9].iter().any(|&c| c % 2 == 1)
    })
}

/// Exhaustive assignment of codes with a canonical cap on fresh 1..8 codes.
fn exhaustive_codes(sets: &[&Bits], ground: usize) -> Option<Vec<u8>> {
    // parity of a set is decided once its last element is assigned
    let mut check_at: Vec<Vec<usize>> = vec![Vec::new(); ground];
    for (si, s) in sets.iter().enumerate() {
        if let Some(last) = s.iter_ones().max() {
            check_at[last].push(si);
        }
    }
    fn rec(
        e: usize,
        ground: usize,
        codes: &mut Vec<u8>,
        sets: &[&Bits],
        check_at: &[Vec<usize>],
    ) -> bool {
        if e == ground {
            return true;
        }
        let max_low = codes[..e].iter().copied().filter(|&c| c < 9).max().unwrap_or(0);
        let mut cands: Vec<u8> = (1..=(max_low + 1).min(8)).collect();
        cands.push(9);
        for c in cands {
            codes[e] = c;
            let ok = check_at[e].iter().all(|&si| {
                let mut counts = [0usize; 10];
                for x in sets[si].iter_ones() {
                    counts[codes[x] as usize] += 1;
                }
                counts[1..9].iter().any(|&c| c % 2 == 1)
            });
            if ok && rec(e + 1, ground, codes, sets, check_at) {
                return true;
            }
        }
        codes[e] = 0;
        false
    }
    let mut codes = vec![0u8; ground];
    if rec(0, ground, &mut codes, sets, &check_at) {
        Some(codes)
    } else {
        None
    }
}

/// Codes in 1..9 such that every member of either family has some code in
/// 1..8 of odd multiplicity.  Strict pairs first, then relaxed colorings that
/// keep (3,3) unoccupied, then preference sweeps, then exhaustive search.
fn nine_color(ground: usize, s1: &[Bits], s2: &[Bits]) -> Result<Vec<u8>> {
    let f1 = Forest::build(ground, s1);
    let f2 = Forest::build(ground, s2);
    let all = vec![0b111u8; ground];
    let refs: Vec<&Bits> = s1.iter().chain(s2.iter()).collect();

    // both strict: odd rows and columns stay inside 1..8 automatically
    if let (Some(p1), Some(p2)) =
        (f1.solve(&all, true, [1, 2, 3]), f2.solve(&all, true, [1, 2, 3]))
    {
        let codes = combine_codes(&p1, &p2);
        debug_assert!(codes_ok(&refs, &codes));
        return Ok(codes);
    }

    // one side relaxed, the other forbidden color 3 wherever the first used it
    for flip in [false, true] {
        let (fa, fb) = if flip { (&f2, &f1) } else { (&f1, &f2) };
        if let Some(pa) = fa.solve(&all, false, [1, 2, 3]) {
            let restricted: Vec<u8> =
                pa.iter().map(|&c| if c == 3 { 0b011 } else { 0b111 }).collect();
            if let Some(pb) = fb.solve(&restricted, false, [1, 2, 3]) {
                let codes = if flip {
                    combine_codes(&pb, &pa)
                } else {
                    combine_codes(&pa, &pb)
                };
                if codes_ok(&refs, &codes) {
                    return Ok(codes);
                }
            }
        }
    }

    // fixed preference sweeps, both relaxed, validity checked outright
    for (pa, pb) in [
        ([1, 2, 3], [2, 1, 3]),
        ([2, 1, 3], [1, 2, 3]),
        ([3, 1, 2], [1, 2, 3]),
        ([1, 3, 2], [2, 3, 1]),
    ] {
        if let (Some(p1), Some(p2)) = (f1.solve(&all, false, pa), f2.solve(&all, false, pb)) {
            let codes = combine_codes(&p1, &p2);
            if codes.iter().all(|&c| c != 9) && codes_ok(&refs, &codes) {
                return Ok(codes);
            }
        }
    }

    // randomized preference orders
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..64 {
        let mut pa = [1u8, 2, 3];
        let mut pb = [1u8, 2, 3];
        pa.shuffle(&mut rng);
        pb.shuffle(&mut rng);
        if let (Some(p1), Some(p2)) = (f1.solve(&all, false, pa), f2.solve(&all, false, pb)) {
            let codes = combine_codes(&p1, &p2);
            if codes_ok(&refs, &codes) {
                return Ok(codes);
            }
        }
    }

    if ground <= 20 {
        if let Some(codes) = exhaustive_codes(&refs, ground) {
            return Ok(codes);
        }
    }
    Err(Error::Internal("no 9-color assignment found for the cut families".into()))
}

/// Subtree structure of the tree edges on one side of f0, for reading off
/// which domain edges lie below each tree edge.
struct SideIndex {
    tin: BTreeMap<usize, usize>,
    tout: BTreeMap<usize, usize>,
    /// per tree edge on this side, its lower (deeper) endpoint
    below_of: BTreeMap<usize, usize>,
}

fn side_index(g: &Multigraph, tree: &[usize], side: &[bool], root: usize) -> SideIndex {
    let mut adj: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for &f in tree {
        let (u, v) = g.endpoints(f);
        if side[u] && side[v] {
            adj.entry(u).or_default().push((v, f));
            adj.entry(v).or_default().push((u, f));
        }
    }
    let mut tin = BTreeMap::new();
    let mut tout = BTreeMap::new();
    let mut below_of = BTreeMap::new();
    let mut timer = 0usize;
    let mut stack: Vec<(usize, Option<usize>, usize)> = vec![(root, None, 0)];
    tin.insert(root, timer);
    while let Some(&mut (v, pedge, ref mut k)) = stack.last_mut() {
        let next = adj.get(&v).and_then(|l| l.get(*k).copied());
        match next {
            Some((u, f)) => {
                *k += 1;
                if Some(f) == pedge || tin.contains_key(&u) {
                    continue;
                }
                timer += 1;
                tin.insert(u, timer);
                below_of.insert(f, u);
                stack.push((u, Some(f), 0));
            }
            None => {
                tout.insert(v, timer);
                stack.pop();
            }
        }
    }
    SideIndex { tin, tout, below_of }
}

/// 9-coloring of the entire cut C*(T, f0) ∖ {f0}.
pub fn cut_local_9color(
    g: &Multigraph,
    tree: &[usize],
    f0: usize,
) -> Result<BTreeMap<usize, u32>> {
    let cut = g.fundamental_cut(tree, f0)?;
    let domain: Vec<usize> = cut.into_iter().filter(|&e| e != f0).collect();
    cut_local_9color_filtered(g, tree, f0, &domain)
}

/// Same, but restricted to a sub-domain of the cut: every tree edge whose
/// cut meets the domain gets a color in 1..8 with odd multiplicity there.
pub fn cut_local_9color_filtered(
    g: &Multigraph,
    tree: &[usize],
    f0: usize,
    domain: &[usize],
) -> Result<BTreeMap<usize, u32>> {
    if !g.is_spanning_forest(tree) {
        return Err(Error::InvalidInput("tree is not a spanning forest".into()));
    }
    if !tree.contains(&f0) {
        return Err(Error::InvalidInput(format!("f0={f0} is not a tree edge")));
    }
    let full_cut: BTreeSet<usize> = g.fundamental_cut(tree, f0)?.into_iter().collect();
    let mut dom: Vec<usize> = domain.to_vec();
    dom.sort_unstable();
    dom.dedup();
    for &e in &dom {
        if e == f0 || !full_cut.contains(&e) {
            return Err(Error::InvalidInput(format!(
                "edge {e} is not in the cut of f0={f0}"
            )));
        }
    }
    if dom.is_empty() {
        return Ok(BTreeMap::new());
    }

    let side = g.cut_partition(tree, f0)?;
    let (r1, r2) = g.endpoints(f0);
    debug_assert!(side[r1] && !side[r2]);
    let idx1 = side_index(g, tree, &side, r1);
    let flipped: Vec<bool> = side.iter().map(|&b| !b).collect();
    let idx2 = side_index(g, tree, &flipped, r2);

    let dpos: BTreeMap<usize, usize> = dom.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let build_family = |idx: &SideIndex, on_side: &dyn Fn(usize) -> bool| -> Vec<Bits> {
        let mut sets: BTreeSet<Bits> = BTreeSet::new();
        let mut full = Bits::new(dom.len());
        for i in 0..dom.len() {
            full.set(i, true);
        }
        sets.insert(full);
        for (&_f, &lower) in &idx.below_of {
            let (lo, hi) = (idx.tin[&lower], idx.tout[&lower]);
            let mut s = Bits::new(dom.len());
            for &e in &dom {
                let (u, v) = g.endpoints(e);
                let w = if on_side(u) { u } else { v };
                debug_assert!(on_side(w));
                let t = idx.tin[&w];
                if lo <= t && t <= hi {
                    s.set(dpos[&e], true);
                }
            }
            if !s.is_empty() {
                sets.insert(s);
            }
        }
        sets.into_iter().collect()
    };
    let s1 = build_family(&idx1, &|v| side[v]);
    let s2 = build_family(&idx2, &|v| !side[v]);

    let codes = nine_color(dom.len(), &s1, &s2)?;
    let out: BTreeMap<usize, u32> =
        dom.iter().enumerate().map(|(i, &e)| (e, codes[i] as u32)).collect();

    // direct re-check against the actual cuts
    for &f in tree {
        let cut = g.fundamental_cut(tree, f)?;
        let mut counts = [0usize; 10];
        let mut seen = 0usize;
        for e in cut {
            if e == f0 || e == f {
                continue;
            }
            if let Some(&c) = out.get(&e) {
                counts[c as usize] += 1;
                seen += 1;
            }
        }
        if seen > 0 && counts[1..9].iter().all(|&c| c % 2 == 0) {
            return Err(Error::Internal(format!(
                "cut of tree edge {f} has no odd color in 1..8"
            )));
        }
    }
    Ok(out)
}

// ---- cut layering -----------------------------------------------------------

/// Layering of a connected, 2-edge-connected graph from a root: non-tree
/// edges join layer i once their fundamental cycle touches the grown vertex
/// set, and tree layers collect the newly covered tree edges.
#[derive(Clone, Debug)]
pub struct CutLayering {
    pub root: usize,
    /// tree edges first covered at each layer (1-based layers, index 0 = layer 1)
    pub a_layers: Vec<Vec<usize>>,
    /// non-tree edges assigned to each layer
    pub b_layers: Vec<Vec<usize>>,
    /// cumulative vertex sets: entry 0 is {root}, entry i is V(T_i)
    pub t_vertices: Vec<Vec<usize>>,
}

impl CutLayering {
    pub fn depth(&self) -> usize {
        self.a_layers.len()
    }

    /// Edge set of G_i (layers 1..=i, tree and non-tree together).
    pub fn gi_edges(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.a_layers[..i].iter().flatten().copied().collect();
        out.extend(self.b_layers[..i].iter().flatten().copied());
        out.sort_unstable();
        out
    }
}

pub fn build_cut_layering(g: &Multigraph, tree: &[usize], root: usize) -> Result<CutLayering> {
    if root >= g.n() {
        return Err(Error::InvalidInput(format!("root {root} out of range")));
    }
    if !g.is_connected() {
        return Err(Error::InvalidInput("graph is not connected".into()));
    }
    if !g.is_spanning_forest(tree) {
        return Err(Error::InvalidInput("tree is not a spanning forest".into()));
    }
    if !g.bridges().is_empty() {
        return Err(Error::InvalidInput("graph is not 2-edge-connected".into()));
    }
    let in_tree = {
        let mut v = vec![false; g.m()];
        for &f in tree {
            v[f] = true;
        }
        v
    };
    // cycle vertices per non-tree edge
    let mut cyc_vertices: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for e in 0..g.m() {
        if in_tree[e] {
            continue;
        }
        let mut vs = BTreeSet::new();
        for f in g.fundamental_cycle(tree, e)? {
            let (u, v) = g.endpoints(f);
            vs.insert(u);
            vs.insert(v);
        }
        cyc_vertices.insert(e, vs);
    }

    let mut in_w = vec![false; g.n()];
    in_w[root] = true;
    let mut assigned = vec![false; g.m()];
    let mut covered_tree = vec![false; g.m()];
    let mut a_layers = Vec::new();
    let mut b_layers = Vec::new();
    let mut t_vertices = vec![vec![root]];
    loop {
        let b: Vec<usize> = cyc_vertices
            .iter()
            .filter(|(&e, vs)| !assigned[e] && vs.iter().any(|&v| in_w[v]))
            .map(|(&e, _)| e)
            .collect();
        if b.is_empty() {
            break;
        }
        let mut a = Vec::new();
        for &e in &b {
            assigned[e] = true;
            for f in g.fundamental_cycle(tree, e)? {
                if in_tree[f] && !covered_tree[f] {
                    covered_tree[f] = true;
                    a.push(f);
                }
            }
            for &v in &cyc_vertices[&e] {
                in_w[v] = true;
            }
        }
        a.sort_unstable();
        a_layers.push(a);
        b_layers.push(b);
        t_vertices.push((0..g.n()).filter(|&v| in_w[v]).collect());
    }
    assert!(assigned.iter().enumerate().all(|(e, &a)| in_tree[e] || a));
    assert!(tree.iter().all(|&f| covered_tree[f]));
    assert!(in_w.iter().all(|&w| w));

    // layer index per non-tree edge, for the cut separation property
    let mut layer_of = vec![0usize; g.m()];
    for (i, b) in b_layers.iter().enumerate() {
        for &e in b {
            layer_of[e] = i + 1;
        }
    }
    for (i, a) in a_layers.iter().enumerate() {
        for &f in a {
            for e in g.fundamental_cut(tree, f)? {
                if e == f {
                    continue;
                }
                let j = layer_of[e];
                assert!(
                    i + 1 <= j && j <= i + 2,
                    "cut of layer-{} tree edge {f} meets non-tree edge {e} of layer {j}",
                    i + 1
                );
            }
        }
    }
    Ok(CutLayering { root, a_layers, b_layers, t_vertices })
}

// ---- star forests -----------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarForestMethod {
    Treewidth2,
    Generic,
}

#[derive(Clone, Debug)]
pub struct Star {
    pub center: usize,
    pub leaves: Vec<usize>,
}

/// Forests of vertex-disjoint stars whose edges partition E(G); every vertex
/// of G is the center of at least one (possibly empty) star.
#[derive(Clone, Debug)]
pub struct StarForestDecomposition {
    pub n: usize,
    pub forests: Vec<Vec<Star>>,
}

impl StarForestDecomposition {
    pub fn num_forests(&self) -> usize {
        self.forests.len()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (fi, forest) in self.forests.iter().enumerate() {
            let mut used: BTreeSet<usize> = BTreeSet::new();
            for star in forest {
                if !used.insert(star.center) {
                    return Err(Error::Internal(format!(
                        "vertex {} appears twice in forest {fi}",
                        star.center
                    )));
                }
                for &leaf in &star.leaves {
                    if !used.insert(leaf) {
                        return Err(Error::Internal(format!(
                            "vertex {leaf} appears twice in forest {fi}"
                        )));
                    }
                    if !g.has_edge(star.center, leaf) {
                        return Err(Error::Internal(format!(
                            "star edge {}-{leaf} is not a graph edge",
                            star.center
                        )));
                    }
                    let key = (star.center.min(leaf), star.center.max(leaf));
                    if !edges.insert(key) {
                        return Err(Error::Internal(format!("edge {key:?} covered twice")));
                    }
                }
            }
        }
        if edges.len() != g.m() {
            return Err(Error::Internal(format!(
                "{} of {} edges covered",
                edges.len(),
                g.m()
            )));
        }
        let centers: BTreeSet<usize> = self
            .forests
            .iter()
            .flatten()
            .map(|s| s.center)
            .collect();
        if centers.len() != self.n {
            return Err(Error::Internal("some vertex centers no star".into()));
        }
        Ok(())
    }
}

/// Orders edges into star forests.  The treewidth-2 method eliminates
/// degree ≤ 2 vertices, 3-colors the filled graph, and files each edge under
/// the color of its later-eliminated endpoint, giving at most 3 forests; it
/// fails with a method error when some vertex of minimum degree exceeds 2.
/// The generic method splits each degeneracy-orientation out-edge class by
/// the depth parity of the parent, giving at most 2·degeneracy forests.
pub fn star_forest_decomposition(
    g: &Graph,
    method: StarForestMethod,
) -> Result<StarForestDecomposition> {
    let mut forests: Vec<Vec<Star>> = match method {
        StarForestMethod::Treewidth2 => tw2_forests(g)?,
        StarForestMethod::Generic => generic_forests(g),
    };
    // normalization: give every center-less vertex an empty star in some
    // forest where it does not already occur
    let mut centered = vec![false; g.n()];
    for forest in &forests {
        for star in forest {
            centered[star.center] = true;
        }
    }
    for v in 0..g.n() {
        if centered[v] {
            continue;
        }
        let spot = forests.iter().position(|forest| {
            forest.iter().all(|s| s.center != v && !s.leaves.contains(&v))
        });
        match spot {
            Some(fi) => forests[fi].push(Star { center: v, leaves: Vec::new() }),
            None => forests.push(vec![Star { center: v, leaves: Vec::new() }]),
        }
    }
    let out = StarForestDecomposition { n: g.n(), forests };
    debug_assert!(out.validate(g).is_ok());
    Ok(out)
}

fn tw2_forests(g: &Graph) -> Result<Vec<Vec<Star>>> {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive: BTreeSet<usize> = (0..n).collect();
    let mut elim_pos = vec![usize::MAX; n];
    let mut parents: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut was_parent = vec![false; n];
    for step in 0..n {
        // breaking degree ties toward vertices that never served as a parent
        // keeps star centers alive until their leaves are gone
        let &v = alive
            .iter()
            .min_by_key(|&&v| (adj[v].len(), was_parent[v], v))
            .expect("nonempty");
        if adj[v].len() > 2 {
            return Err(Error::Method(format!(
                "vertex {v} has degree {} at elimination; graph is not treewidth ≤ 2",
                adj[v].len()
            )));
        }
        elim_pos[v] = step;
        parents[v] = adj[v].iter().copied().collect();
        if let [a, b] = parents[v][..] {
            // fill edge between the two parents
            if adj[a].insert(b) {
                adj[b].insert(a);
            }
        }
        for &u in &parents[v].clone() {
            adj[u].remove(&v);
            was_parent[u] = true;
        }
        alive.remove(&v);
    }
    // 3-color the filled graph in reverse elimination order: each vertex sees
    // at most its 2 parents, which are already colored
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(elim_pos[v]));
    let mut color = vec![0u8; n];
    for &v in &order {
        let used: BTreeSet<u8> = parents[v].iter().map(|&p| color[p]).collect();
        color[v] = (1..=3).find(|c| !used.contains(c)).expect("3 colors suffice");
    }
    let mut stars: BTreeMap<(u8, usize), Vec<usize>> = BTreeMap::new();
    for (u, v) in g.edges() {
        let head = if elim_pos[u] > elim_pos[v] { u } else { v };
        let tail = u + v - head;
        stars.entry((color[head], head)).or_default().push(tail);
    }
    let mut forests: Vec<Vec<Star>> = vec![Vec::new(); 3];
    for ((c, center), leaves) in stars {
        forests[c as usize - 1].push(Star { center, leaves });
    }
    forests.retain(|f| !f.is_empty());
    Ok(forests)
}

fn generic_forests(g: &Graph) -> Vec<Vec<Star>> {
    let (order, _) = g.degeneracy_order();
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // class k = the k-th out-edge (toward later vertices) of each vertex
    let mut classes: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for v in 0..g.n() {
        let mut outs: Vec<usize> =
            g.neighbors(v).iter().copied().filter(|&u| pos[u] > pos[v]).collect();
        outs.sort_unstable();
        for (k, &u) in outs.iter().enumerate() {
            classes.entry(k).or_default().push((v, u)); // v → u, u is the parent
        }
    }
    let mut forests: Vec<Vec<Star>> = Vec::new();
    for (_k, arcs) in classes {
        // each vertex has at most one parent here, so components are trees
        let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
        for &(v, u) in &arcs {
            parent.insert(v, u);
        }
        let mut depth: BTreeMap<usize, usize> = BTreeMap::new();
        fn depth_of(
            v: usize,
            parent: &BTreeMap<usize, usize>,
            depth: &mut BTreeMap<usize, usize>,
        ) -> usize {
            if let Some(&d) = depth.get(&v) {
                return d;
            }
            let d = match parent.get(&v) {
                Some(&u) => depth_of(u, parent, depth) + 1,
                None => 0,
            };
            depth.insert(v, d);
            d
        }
        let mut split: [BTreeMap<usize, Vec<usize>>; 2] = [BTreeMap::new(), BTreeMap::new()];
        for &(v, u) in &arcs {
            let du = depth_of(u, &parent, &mut depth);
            split[du % 2].entry(u).or_default().push(v);
        }
        for stars in split {
            if stars.is_empty() {
                continue;
            }
            forests.push(
                stars
                    .into_iter()
                    .map(|(center, leaves)| Star { center, leaves })
                    .collect(),
            );
        }
    }
    forests
}

// ---- the full pipeline ------------------------------------------------------

/// Edge coloring of the non-tree edges with per-layer bookkeeping.
/// `color_bound` is 16·(star forests actually used) + 1; every color value
/// stays at or below it.
#[derive(Clone, Debug)]
pub struct EdgeColoringResult {
    pub colors: BTreeMap<usize, u32>,
    pub num_colors: u32,
    pub color_bound: u32,
    pub method_per_layer: Vec<String>,
    pub verified: bool,
}

/// Checks an edge coloring produced by [`fund_cut_color`]: the colored
/// domain must be exactly the non-tree edges, and every fundamental cut with
/// a nonempty remainder must see some color an odd number of times.
pub fn verify_fundcut_coloring(
    g: &Multigraph,
    tree: &[usize],
    colors: &BTreeMap<usize, u32>,
) -> Result<(bool, Option<usize>)> {
    if !g.is_spanning_forest(tree) {
        return Err(Error::InvalidInput("tree is not a spanning forest".into()));
    }
    let tset: BTreeSet<usize> = tree.iter().copied().collect();
    let expected: BTreeSet<usize> = (0..g.m()).filter(|e| !tset.contains(e)).collect();
    let got: BTreeSet<usize> = colors.keys().copied().collect();
    if expected != got {
        return Err(Error::InvalidInput(
            "colored edges are not exactly the non-tree edges".into(),
        ));
    }
    let mut sorted: Vec<usize> = tset.into_iter().collect();
    sorted.sort_unstable();
    is_fundcut_odd(g, &sorted, colors)
}

pub fn fund_cut_color(g: &Multigraph, tree: &[usize]) -> Result<EdgeColoringResult> {
    fund_cut_color_with(g, tree, None)
}

/// Same with a forced star-forest method; by default treewidth-2 is tried
/// first with the generic method as fallback.
pub fn fund_cut_color_with(
    g: &Multigraph,
    tree: &[usize],
    method: Option<StarForestMethod>,
) -> Result<EdgeColoringResult> {
    if !g.is_spanning_forest(tree) {
        return Err(Error::InvalidInput("tree is not a spanning forest".into()));
    }
    let in_tree = {
        let mut v = vec![false; g.m()];
        for &f in tree {
            v[f] = true;
        }
        v
    };
    let mut colors: BTreeMap<usize, u32> = BTreeMap::new();
    let mut pending_global: Vec<usize> = Vec::new();
    let mut method_per_layer: Vec<String> = Vec::new();
    let mut max_forest_used = 0usize;

    for (ci, comp) in g.components().iter().enumerate() {
        let (local, _vmap, emap) = induced_component(g, comp);
        let local_tree: Vec<usize> = (0..local.m())
            .filter(|&le| in_tree[emap[le]])
            .collect();
        if local_tree.len() == local.m() {
            continue; // the component is a tree: nothing to color
        }
        let (contracted, _cls, cmap) = contract_bridges_mapped(&local);
        let ctree: Vec<usize> = (0..contracted.m())
            .filter(|&ce| in_tree[emap[cmap[ce]]])
            .collect();
        assert!(contracted.is_spanning_forest(&ctree));
        let layering = build_cut_layering(&contracted, &ctree, 0)?;

        for i in 1..=layering.depth() {
            let bank = (i - 1) % 2;
            let prev: BTreeSet<usize> =
                layering.t_vertices[i - 1].iter().copied().collect();
            let new_vs: Vec<usize> = layering.t_vertices[i]
                .iter()
                .copied()
                .filter(|v| !prev.contains(v))
                .collect();
            // components K of the layer-i vertices under the new tree edges,
            // indexed densely as the vertices of H
            let (k_of, ks) = layer_components(&contracted, &layering.a_layers[i - 1], &new_vs);
            let kidx: BTreeMap<usize, usize> =
                ks.iter().enumerate().map(|(i, &k)| (k, i)).collect();
            // the unique tree edge hooking each K to the previous subtree
            let mut t_k: BTreeMap<usize, usize> = BTreeMap::new();
            for &f in &layering.a_layers[i - 1] {
                let (u, v) = contracted.endpoints(f);
                let (pu, pv) = (prev.contains(&u), prev.contains(&v));
                if pu != pv {
                    let knew = kidx[&k_of[&(if pu { v } else { u })]];
                    assert!(
                        t_k.insert(knew, f).is_none(),
                        "component has two tree edges into the previous layer"
                    );
                }
            }
            assert_eq!(t_k.len(), ks.len());

            // classify this layer's non-tree edges
            let mut h_classes: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
            let mut apex_classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for &e in &layering.b_layers[i - 1] {
                let (u, v) = contracted.endpoints(e);
                if u == v || (prev.contains(&u) && prev.contains(&v)) {
                    pending_global.push(emap[cmap[e]]); // loop or apex-apex edge
                    continue;
                }
                match (k_of.get(&u), k_of.get(&v)) {
                    (Some(&ku), Some(&kv)) if ku != kv => {
                        let (a, b) = (kidx[&ku], kidx[&kv]);
                        h_classes.entry((a.min(b), a.max(b))).or_default().push(e);
                    }
                    (Some(_), Some(_)) => pending_global.push(emap[cmap[e]]), // within one K
                    (Some(&k), None) | (None, Some(&k)) => {
                        apex_classes.entry(kidx[&k]).or_default().push(e);
                    }
                    (None, None) => unreachable!("edge with no endpoint in any layer set"),
                }
            }

            let h = Graph::from_edges(
                ks.len(),
                &h_classes.keys().copied().collect::<Vec<_>>(),
            )
            .expect("class endpoints are component indices");
            let (sfd, method_name) = match method {
                Some(m) => (star_forest_decomposition(&h, m)?, name_of(m)),
                None => match star_forest_decomposition(&h, StarForestMethod::Treewidth2) {
                    Ok(s) => (s, name_of(StarForestMethod::Treewidth2)),
                    Err(Error::Method(_)) => (
                        star_forest_decomposition(&h, StarForestMethod::Generic)?,
                        name_of(StarForestMethod::Generic),
                    ),
                    Err(e) => return Err(e),
                },
            };
            method_per_layer.push(format!("component {ci} layer {i}: {method_name}"));

            // first star (smallest forest index) of each K gets its apex class
            let mut first_star: BTreeMap<usize, usize> = BTreeMap::new();
            for (fi, forest) in sfd.forests.iter().enumerate() {
                for star in forest {
                    first_star.entry(star.center).or_insert(fi);
                }
            }
            for (fi, forest) in sfd.forests.iter().enumerate() {
                for star in forest {
                    let k = star.center;
                    let mut piece: Vec<usize> = Vec::new();
                    for &leaf in &star.leaves {
                        let key = (k.min(leaf), k.max(leaf));
                        piece.extend(h_classes.get(&key).into_iter().flatten().copied());
                    }
                    if first_star[&k] == fi {
                        piece.extend(apex_classes.get(&k).into_iter().flatten().copied());
                    }
                    if piece.is_empty() {
                        continue;
                    }
                    let f0 = t_k[&k];
                    let cut: BTreeSet<usize> =
                        contracted.fundamental_cut(&ctree, f0)?.into_iter().collect();
                    assert!(piece.iter().all(|&e| e != f0 && cut.contains(&e)));
                    let local_colors =
                        cut_local_9color_filtered(&contracted, &ctree, f0, &piece)?;
                    let forest_index = fi + 1;
                    let mut used_low = false;
                    for (e, code) in local_colors {
                        let orig = emap[cmap[e]];
                        if code == 9 {
                            pending_global.push(orig);
                        } else {
                            used_low = true;
                            let slot =
                                (((forest_index - 1) * 2 + bank) * 8) as u32 + code;
                            colors.insert(orig, slot);
                        }
                    }
                    if used_low {
                        max_forest_used = max_forest_used.max(forest_index);
                    }
                }
            }
        }
    }

    let global = 16 * max_forest_used as u32 + 1;
    for e in pending_global {
        colors.insert(e, global);
    }
    let distinct: BTreeSet<u32> = colors.values().copied().collect();
    let num_colors = distinct.len() as u32;
    assert!(distinct.iter().all(|&c| c <= global));

    let (ok, fail) = verify_fundcut_coloring(g, tree, &colors)?;
    if !ok {
        return Err(Error::Internal(format!(
            "fundamental-cut coloring failed at tree edge {}",
            fail.unwrap()
        )));
    }
    Ok(EdgeColoringResult {
        colors,
        num_colors,
        color_bound: global,
        method_per_layer,
        verified: true,
    })
}

fn name_of(m: StarForestMethod) -> &'static str {
    match m {
        StarForestMethod::Treewidth2 => "treewidth2",
        StarForestMethod::Generic => "generic",
    }
}

/// Proper odd coloring of the fundamental graph F(G,T) of a connected plane
/// graph: the non-tree side is colored by [`fund_cut_color`] on G, the tree
/// side by the same routine on the dual graph with the co-tree as its
/// spanning tree, shifted past the primal palette.  Under the treewidth-2
/// star-forest method each side uses at most 49 colors.
pub fn circle98(
    emb: &crate::planar::PlanarEmbedding,
    tree: &[usize],
) -> Result<(crate::matroid::FundamentalGraph, crate::odd_color::ColoringResult)> {
    let g = emb.graph();
    if !g.is_spanning_forest(tree) {
        return Err(Error::InvalidInput("tree is not a spanning forest".into()));
    }
    let fgraph = crate::matroid::graphic_fundamental_graph(g, tree)?;
    let primal = fund_cut_color(g, tree)?;

    let (dual, _) = crate::planar::dual_graph(emb)?; // dual edge ids match primal ids
    let tset: BTreeSet<usize> = tree.iter().copied().collect();
    let cotree: Vec<usize> = (0..g.m()).filter(|e| !tset.contains(e)).collect();
    if !dual.is_spanning_forest(&cotree) {
        return Err(Error::Internal("co-tree duals do not span the dual graph".into()));
    }
    let dual_res = fund_cut_color(&dual, &cotree)?;

    let offset = 49u32.max(primal.colors.values().copied().max().unwrap_or(0));
    let bip = fgraph.bipartite();
    let n = bip.graph().n();
    let mut colors = vec![0u32; n];
    for v in 0..n {
        let eid = fgraph.labels()[v];
        colors[v] = if tset.contains(&eid) {
            offset + dual_res.colors[&eid]
        } else {
            primal.colors[&eid]
        };
    }
    let (ok, fail) = crate::exact::is_odd_coloring(bip.graph(), &colors, true)?;
    if !ok {
        return Err(Error::Internal(format!(
            "fundamental-graph coloring failed at vertex {}",
            fail.unwrap()
        )));
    }
    let result = crate::odd_color::ColoringResult {
        num_colors: colors.iter().collect::<BTreeSet<_>>().len() as u32,
        witness: crate::exact::odd_witnesses(bip.graph(), &colors),
        colors,
        proper: true,
        algorithm: "circle98".into(),
        seed: None,
    };
    Ok((fgraph, result))
}

/// Sub-multigraph on a vertex subset with dense ids; returns maps from local
/// vertex and edge ids back to the originals.
fn induced_component(
    g: &Multigraph,
    verts: &[usize],
) -> (Multigraph, Vec<usize>, Vec<usize>) {
    let vmap: BTreeMap<usize, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut edges = Vec::new();
    let mut emap = Vec::new();
    for e in 0..g.m() {
        let (u, v) = g.endpoints(e);
        if let (Some(&lu), Some(&lv)) = (vmap.get(&u), vmap.get(&v)) {
            edges.push((lu, lv));
            emap.push(e);
        }
    }
    let local = Multigraph::from_edges(verts.len(), &edges).expect("induced edges valid");
    (local, verts.to_vec(), emap)
}

/// Contracts all bridges; bridge contraction cannot create loops, and
/// pre-existing loops survive.  Returns the vertex class map and the map
/// from new edge ids to old ones.
fn contract_bridges_mapped(g: &Multigraph) -> (Multigraph, Vec<usize>, Vec<usize>) {
    let bridges: BTreeSet<usize> = g.bridges().into_iter().collect();
    let mut cls: Vec<usize> = (0..g.n()).collect();
    fn find(cls: &mut Vec<usize>, v: usize) -> usize {
        if cls[v] != v {
            let r = find(cls, cls[v]);
            cls[v] = r;
            r
        } else {
            v
        }
    }
    for &b in &bridges {
        let (u, v) = g.endpoints(b);
        let (ru, rv) = (find(&mut cls, u), find(&mut cls, v));
        if ru != rv {
            let (lo, hi) = (ru.min(rv), ru.max(rv));
            cls[hi] = lo;
        }
    }
    let mut root_ids: Vec<usize> = (0..g.n()).map(|v| find(&mut cls, v)).collect();
    let distinct: Vec<usize> = {
        let mut d: Vec<usize> = root_ids.clone();
        d.sort_unstable();
        d.dedup();
        d
    };
    let dense: BTreeMap<usize, usize> =
        distinct.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    for r in root_ids.iter_mut() {
        *r = dense[r];
    }
    let mut edges = Vec::new();
    let mut emap = Vec::new();
    for e in 0..g.m() {
        if bridges.contains(&e) {
            continue;
        }
        let (u, v) = g.endpoints(e);
        let (cu, cv) = (root_ids[u], root_ids[v]);
        debug_assert!(u == v || cu != cv, "contraction created a loop from edge {e}");
        edges.push((cu, cv));
        emap.push(e);
    }
    let contracted =
        Multigraph::from_edges(distinct.len(), &edges).expect("contracted edges valid");
    (contracted, root_ids, emap)
}

/// Connected components of `new_vs` under the given tree edges; returns the
/// component id (smallest member) per vertex and the sorted list of ids.
fn layer_components(
    g: &Multigraph,
    tree_edges: &[usize],
    new_vs: &[usize],
) -> (BTreeMap<usize, usize>, Vec<usize>) {
    let news: BTreeSet<usize> = new_vs.iter().copied().collect();
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &f in tree_edges {
        let (u, v) = g.endpoints(f);
        if news.contains(&u) && news.contains(&v) {
            adj.entry(u).or_default().push(v);
            adj.entry(v).or_default().push(u);
        }
    }
    let mut k_of: BTreeMap<usize, usize> = BTreeMap::new();
    let mut ks = Vec::new();
    for &start in new_vs {
        if k_of.contains_key(&start) {
            continue;
        }
        let mut stack = vec![start];
        let mut members = vec![start];
        k_of.insert(start, start);
        while let Some(v) = stack.pop() {
            for &u in adj.get(&v).into_iter().flatten() {
                if !k_of.contains_key(&u) {
                    k_of.insert(u, start);
                    members.push(u);
                    stack.push(u);
                }
            }
        }
        let id = *members.iter().min().expect("nonempty");
        for &v in &members {
            k_of.insert(v, id);
        }
        ks.push(id);
    }
    ks.sort_unstable();
    (k_of, ks)
}

// kept for back-compat with the K-id convention above
#[allow(dead_code)]
fn smallest(v: &[usize]) -> usize {
    *v.iter().min().expect("nonempty")
}
