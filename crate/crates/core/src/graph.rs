//! Simple graphs, bipartite graphs, and multigraphs, plus the neighborhood,
//! contraction, spanning-forest and degeneracy primitives everything else
//! builds on.

use crate::bits::Bits;
use crate::error::{Error, Result};
use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// Undirected simple graph on vertices `0..n` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list.  Duplicate edges are collapsed;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
            a.dedup();
        }
        Ok(Graph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as pairs (u,v) with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    e.push((u, v));
                }
            }
        }
        e
    }

    pub fn neighborhood_bits(&self, v: usize) -> Bits {
        Bits::from_indices(self.n, &self.adj[v])
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::InvalidInput(format!(
                "vertex {v} out of range for n={}",
                self.n
            )));
        }
        Ok(())
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Repeatedly-remove-minimum-degree ordering together with the
    /// degeneracy, i.e. the largest degree seen at removal time.  Ties break
    /// towards the smallest vertex id so the order is deterministic.
    pub fn degeneracy_order(&self) -> (Vec<usize>, usize) {
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut heap: BinaryHeap<Reverse<(usize, usize)>> =
            (0..self.n).map(|v| Reverse((deg[v], v))).collect();
        let mut removed = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut d = 0;
        while let Some(Reverse((dd, v))) = heap.pop() {
            if removed[v] || dd != deg[v] {
                continue; // stale heap entry
            }
            removed[v] = true;
            d = d.max(dd);
            order.push(v);
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                    heap.push(Reverse((deg[w], w)));
                }
            }
        }
        (order, d)
    }

    /// Greedy proper coloring along the reverse degeneracy order.  Colors are
    /// 1-based; at most degeneracy+1 distinct colors are used.
    pub fn greedy_proper_coloring(&self) -> Vec<u32> {
        let (order, _) = self.degeneracy_order();
        let mut colors = vec![0u32; self.n];
        for &v in order.iter().rev() {
            let mut used: Vec<u32> = self.adj[v]
                .iter()
                .map(|&w| colors[w])
                .filter(|&c| c != 0)
                .collect();
            used.sort_unstable();
            used.dedup();
            let mut c = 1;
            for u in used {
                if u == c {
                    c += 1;
                } else if u > c {
                    break;
                }
            }
            colors[v] = c;
        }
        colors
    }

    /// Tensor product with K2: vertices (v,1) ↦ v and (v,2) ↦ n+v, with
    /// (u,i) ~ (v,j) iff uv is an edge and i ≠ j.
    pub fn tensor_with_k2(&self) -> BipartiteGraph {
        let mut edges = Vec::with_capacity(2 * self.m());
        for (u, v) in self.edges() {
            edges.push((u, self.n + v));
            edges.push((v, self.n + u));
        }
        let g = Graph::from_edges(2 * self.n, &edges).expect("tensor edges are valid");
        let mut in_x = vec![false; 2 * self.n];
        for s in in_x.iter_mut().take(self.n) {
            *s = true;
        }
        BipartiteGraph::new(g, &in_x).expect("tensor product is bipartite by construction")
    }
}

/// Open-neighborhood symmetric difference size |N(u) Δ N(v)|.
///
/// Neighborhoods are open, so if u and v are adjacent then u ∈ N(v) and
/// v ∈ N(u) both count unless matched by the other side.
pub fn neighborhood_symdiff(g: &Graph, u: usize, v: usize) -> Result<usize> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::InvalidInput("symdiff of a vertex with itself".into()));
    }
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    // sorted-merge count of one-sided elements
    let (mut i, mut j, mut out) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out += 1;
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out += 1;
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    Ok(out + (a.len() - i) + (b.len() - j))
}

/// Bipartite graph: a simple graph plus a two-sided vertex partition (X, Y).
#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    graph: Graph,
    in_x: Vec<bool>,
    x: Vec<usize>,
    y: Vec<usize>,
}

impl BipartiteGraph {
    /// `in_x[v]` says whether v belongs to side X.  Fails if some edge does
    /// not cross the partition.
    pub fn new(graph: Graph, in_x: &[bool]) -> Result<BipartiteGraph> {
        if in_x.len() != graph.n() {
            return Err(Error::InvalidInput("side vector length mismatch".into()));
        }
        for (u, v) in graph.edges() {
            if in_x[u] == in_x[v] {
                return Err(Error::InvalidInput(format!(
                    "edge ({u},{v}) does not cross the bipartition"
                )));
            }
        }
        let x = (0..graph.n()).filter(|&v| in_x[v]).collect();
        let y = (0..graph.n()).filter(|&v| !in_x[v]).collect();
        Ok(BipartiteGraph { graph, in_x: in_x.to_vec(), x, y })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn x(&self) -> &[usize] {
        &self.x
    }

    pub fn y(&self) -> &[usize] {
        &self.y
    }

    pub fn in_x(&self, v: usize) -> bool {
        self.in_x[v]
    }
}

/// Multigraph: loops and parallel edges allowed, edges carry dense ids 0..m−1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    ends: Vec<(usize, usize)>,
    /// incident[v] = (edge id, other endpoint); loops appear once.
    inc: Vec<Vec<(usize, usize)>>,
}

impl Multigraph {
    pub fn from_edges(n: usize, ends: &[(usize, usize)]) -> Result<Multigraph> {
        let mut inc = vec![Vec::new(); n];
        for (e, &(u, v)) in ends.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge {e}=({u},{v}) out of range for n={n}"
                )));
            }
            inc[u].push((e, v));
            if u != v {
                inc[v].push((e, u));
            }
        }
        Ok(Multigraph { n, ends: ends.to_vec(), inc })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.ends.len()
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.ends[e]
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.ends[e].0 == self.ends[e].1
    }

    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.inc[v]
    }

    pub fn edge_list(&self) -> &[(usize, usize)] {
        &self.ends
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &(_, w) in &self.inc[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Bridge edges, ascending.  Loops and members of parallel classes are
    /// never bridges.
    pub fn bridges(&self) -> Vec<usize> {
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0usize; self.n];
        let mut bridges = Vec::new();
        let mut time = 0;
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            // iterative DFS: (vertex, incident index, edge id used to enter)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, 0, usize::MAX)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(&mut (v, ref mut idx, entry)) = stack.last_mut() {
                if *idx < self.inc[v].len() {
                    let (e, w) = self.inc[v][*idx];
                    *idx += 1;
                    if w == v || e == entry {
                        continue; // loop, or the edge we entered on
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, 0, e));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (p, _, _)) = stack.last_mut() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            bridges.push(entry);
                        }
                    }
                }
            }
        }
        bridges.sort_unstable();
        bridges
    }

    /// BFS spanning forest, one tree per component, roots at the smallest
    /// vertex of each component.  Returned edge ids are sorted.
    pub fn spanning_forest(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut tree = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &(e, w) in &self.inc[u] {
                    if !seen[w] {
                        seen[w] = true;
                        tree.push(e);
                        queue.push_back(w);
                    }
                }
            }
        }
        tree.sort_unstable();
        tree
    }

    /// Checks that `tree` is a loop-free acyclic edge set spanning every
    /// component (|tree| = n − #components).
    pub fn is_spanning_forest(&self, tree: &[usize]) -> bool {
        let mut uf = UnionFind::new(self.n);
        let mut distinct = std::collections::HashSet::new();
        for &e in tree {
            if e >= self.m() || self.is_loop(e) || !distinct.insert(e) {
                return false;
            }
            let (u, v) = self.ends[e];
            if !uf.union(u, v) {
                return false; // cycle
            }
        }
        tree.len() == self.n - self.components().len()
    }

    fn check_forest(&self, tree: &[usize]) -> Result<()> {
        if !self.is_spanning_forest(tree) {
            return Err(Error::InvalidInput("not a spanning forest".into()));
        }
        Ok(())
    }

    /// Edge ids of the unique cycle in tree+e, sorted; `e` must not be a tree
    /// edge.  For a loop the cycle is just {e}.
    pub fn fundamental_cycle(&self, tree: &[usize], e: usize) -> Result<Vec<usize>> {
        self.check_forest(tree)?;
        if e >= self.m() {
            return Err(Error::InvalidInput(format!("edge {e} out of range")));
        }
        if tree.contains(&e) {
            return Err(Error::InvalidInput(format!("edge {e} is a tree edge")));
        }
        if self.is_loop(e) {
            return Ok(vec![e]);
        }
        let in_tree = self.edge_mask(tree);
        let (s, t) = self.ends[e];
        // BFS from s to t along tree edges
        let mut via = vec![usize::MAX; self.n]; // edge used to reach vertex
        let mut seen = vec![false; self.n];
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for &(f, w) in &self.inc[u] {
                if in_tree[f] && !seen[w] {
                    seen[w] = true;
                    via[w] = f;
                    queue.push_back(w);
                }
            }
        }
        if !seen[t] {
            return Err(Error::InvalidInput(format!(
                "endpoints of edge {e} lie in different components"
            )));
        }
        let mut cyc = vec![e];
        let mut u = t;
        while u != s {
            let f = via[u];
            cyc.push(f);
            let (a, b) = self.ends[f];
            u = if u == a { b } else { a };
        }
        cyc.sort_unstable();
        Ok(cyc)
    }

    /// Vertex sides of the cut induced by removing tree edge `f`:
    /// `true` for vertices in the part containing endpoints(f).0.
    /// Vertices of other components keep `false`.
    pub fn cut_partition(&self, tree: &[usize], f: usize) -> Result<Vec<bool>> {
        self.check_forest(tree)?;
        if !tree.contains(&f) {
            return Err(Error::InvalidInput(format!("edge {f} is not a tree edge")));
        }
        let in_tree = self.edge_mask(tree);
        let mut side = vec![false; self.n];
        let s = self.ends[f].0;
        side[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &(g, w) in &self.inc[u] {
                if g != f && in_tree[g] && !side[w] {
                    side[w] = true;
                    queue.push_back(w);
                }
            }
        }
        Ok(side)
    }

    /// Fundamental cut of tree edge `f`: all edges with one endpoint on each
    /// side of tree − f, sorted.  Always contains `f` itself.
    pub fn fundamental_cut(&self, tree: &[usize], f: usize) -> Result<Vec<usize>> {
        let side = self.cut_partition(tree, f)?;
        Ok((0..self.m())
            .filter(|&e| side[self.ends[e].0] != side[self.ends[e].1])
            .collect())
    }

    fn edge_mask(&self, edges: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.m()];
        for &e in edges {
            mask[e] = true;
        }
        mask
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if x and y were already joined.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.parent[rx.max(ry)] = rx.min(ry);
        true
    }
}

/// Contracts every bridge of `g`.  Returns the contracted multigraph (edge
/// ids renumbered densely in original order) and the vertex map old → new.
/// Parallel edges arising from contraction are kept; a contraction never
/// turns a non-loop into a loop, so only pre-existing loops survive as loops.
pub fn contract_bridges(g: &Multigraph) -> (Multigraph, Vec<usize>) {
    let bridges = g.bridges();
    let mut uf = UnionFind::new(g.n());
    for &b in &bridges {
        let (u, v) = g.endpoints(b);
        uf.union(u, v);
    }
    // dense new ids in order of smallest original member
    let mut new_id = vec![usize::MAX; g.n()];
    let mut next = 0;
    let mut vmap = vec![0; g.n()];
    for v in 0..g.n() {
        let r = uf.find(v);
        if new_id[r] == usize::MAX {
            new_id[r] = next;
            next += 1;
        }
        vmap[v] = new_id[r];
    }
    let is_bridge = {
        let mut m = vec![false; g.m()];
        for &b in &bridges {
            m[b] = true;
        }
        m
    };
    let mut ends = Vec::new();
    for e in 0..g.m() {
        if is_bridge[e] {
            continue;
        }
        let (u, v) = g.endpoints(e);
        let (nu, nv) = (vmap[u], vmap[v]);
        debug_assert!(u == v || nu != nv, "contraction created a loop");
        if nu == nv && u != v {
            continue; // drop loops created by contraction (cannot happen)
        }
        ends.push((nu, nv));
    }
    let out = Multigraph::from_edges(next, &ends).expect("mapped edges are in range");
    (out, vmap)
}
