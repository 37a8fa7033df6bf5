//! Labeled undirected simple graphs and the constructions the rest of the
//! crate drives: paths, boxes, Cartesian products, induced prefixes, and the
//! staged box-growing sequences.

mod build;
mod enumerate;
mod io;

pub use build::{boundary_graph, intermediate_sequence, BuildSequence, BuildStage};
pub use enumerate::{
    canonical_code, enumerate_connected, enumerate_trees, random_connected_graph, MAX_CANON_N,
};
pub use io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};

use serde::Serialize;

use crate::config::RunConfig;
use crate::error::{Error, Result};

/// A labeled undirected simple graph. Vertex labels are 0..n-1; the label
/// order is meaningful (induced prefixes are taken in label order).
/// Box-derived graphs carry the lattice point of each vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coords: Option<Vec<Vec<i64>>>,
    #[serde(skip)]
    adjacency: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph, validating labels and rejecting self-loops and
    /// duplicate edges.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut normalized: Vec<(u32, u32)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "self-loop".into(),
                });
            }
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { v: u.max(v), n });
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            normalized.push((a as u32, b as u32));
        }
        normalized.sort_unstable();
        if normalized.windows(2).any(|w| w[0] == w[1]) {
            let dup = normalized
                .windows(2)
                .find(|w| w[0] == w[1])
                .unwrap()[0];
            return Err(Error::InvalidEdge {
                u: dup.0 as usize,
                v: dup.1 as usize,
                reason: "duplicate edge".into(),
            });
        }
        let adjacency = build_adjacency(n, &normalized);
        Ok(Graph {
            n,
            edges: normalized,
            coords: None,
            adjacency,
        })
    }

    /// As [`Graph::new`], attaching integer lattice coordinates. Every edge
    /// must join points at l1-distance exactly 1.
    pub fn with_coords(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        coords: Vec<Vec<i64>>,
    ) -> Result<Graph> {
        let mut g = Graph::new(n, edges)?;
        if coords.len() != n {
            return Err(Error::BadCoords(format!(
                "{} coordinate tuples for {} vertices",
                coords.len(),
                n
            )));
        }
        let dim = coords.first().map_or(0, Vec::len);
        for c in &coords {
            if c.len() != dim {
                return Err(Error::BadCoords("mixed coordinate dimensions".into()));
            }
        }
        for &(u, v) in &g.edges {
            let d: i64 = coords[u as usize]
                .iter()
                .zip(&coords[v as usize])
                .map(|(a, b)| (a - b).abs())
                .sum();
            if d != 1 {
                return Err(Error::BadCoords(format!(
                    "edge ({u}, {v}) joins lattice points at l1-distance {d}"
                )));
            }
        }
        g.coords = Some(coords);
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as normalized (u, v) pairs with u < v, sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn coords(&self) -> Option<&[Vec<i64>]> {
        self.coords.as_deref()
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&(a as u32, b as u32)).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w as usize);
                }
            }
        }
        count == self.n
    }

    /// Relabels vertices: `perm[old] = new`. Coordinates follow their vertex.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Invalid(format!(
                "relabeling of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::Invalid("relabeling is not a permutation".into()));
            }
            seen[p] = true;
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u as usize], perm[v as usize]));
        let mut g = Graph::new(self.n, edges)?;
        if let Some(coords) = &self.coords {
            let mut new_coords = vec![Vec::new(); self.n];
            for (old, c) in coords.iter().enumerate() {
                new_coords[perm[old]] = c.clone();
            }
            g.coords = Some(new_coords);
        }
        Ok(g)
    }

    /// Breadth-first vertex order from `root`; every prefix of the order
    /// induces a connected subgraph when the graph is connected.
    pub fn bfs_order(&self, root: usize) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.n);
        let mut seen = vec![false; self.n];
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(root);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &self.adjacency[v] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    queue.push_back(w as usize);
                }
            }
        }
        order
    }

    /// Relabels so that vertex labels follow a BFS from `root`; prefixes of
    /// the result are connected.
    pub fn bfs_relabeled(&self, root: usize) -> Result<Graph> {
        if !self.is_connected() {
            return Err(Error::Disconnected {
                context: "bfs relabeling".into(),
            });
        }
        let order = self.bfs_order(root);
        let mut perm = vec![0usize; self.n];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        self.relabel(&perm)
    }

    /// Labeled-graph equality after sorting both vertex sets by lattice
    /// coordinates. Usable whenever both graphs carry coordinates, at any
    /// size; this is how product-vs-box identities are checked.
    pub fn coords_isomorphic(&self, other: &Graph) -> Result<bool> {
        let (a, b) = match (&self.coords, &other.coords) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(Error::Invalid(
                    "coords_isomorphic needs lattice coordinates on both graphs".into(),
                ))
            }
        };
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return Ok(false);
        }
        let sort_key = |coords: &[Vec<i64>]| {
            let mut idx: Vec<usize> = (0..coords.len()).collect();
            idx.sort_by(|&i, &j| coords[i].cmp(&coords[j]));
            let mut rank = vec![0usize; coords.len()];
            for (r, &i) in idx.iter().enumerate() {
                rank[i] = r;
            }
            (idx, rank)
        };
        let (ia, ra) = sort_key(a);
        let (ib, _) = sort_key(b);
        for (&va, &vb) in ia.iter().zip(&ib) {
            if a[va] != b[vb] {
                return Ok(false);
            }
        }
        let rb = {
            let (_, rb) = sort_key(b);
            rb
        };
        let key = |edges: &[(u32, u32)], rank: &[usize]| {
            let mut k: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(u, v)| {
                    let (x, y) = (rank[u as usize], rank[v as usize]);
                    if x < y {
                        (x, y)
                    } else {
                        (y, x)
                    }
                })
                .collect();
            k.sort_unstable();
            k
        };
        Ok(key(&self.edges, &ra) == key(&other.edges, &rb))
    }
}

fn build_adjacency(n: usize, edges: &[(u32, u32)]) -> Vec<Vec<u32>> {
    let mut adjacency = vec![Vec::new(); n];
    for &(u, v) in edges {
        adjacency[u as usize].push(v);
        adjacency[v as usize].push(u);
    }
    for nbrs in &mut adjacency {
        nbrs.sort_unstable();
    }
    adjacency
}

/// The line graph with L+1 vertices 0..L and edges {i, i+1}.
pub fn make_path(l: usize) -> Graph {
    let coords = (0..=l as i64).map(|i| vec![i]).collect();
    Graph::with_coords(l + 1, (0..l).map(|i| (i, i + 1)), coords)
        .expect("path construction is always valid")
}

/// The cycle on n >= 3 vertices.
pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::ArgOutOfRange {
            what: "cycle size",
            got: n,
            expected: ">= 3".into(),
        });
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The complete graph on n >= 1 vertices.
pub fn make_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::ArgOutOfRange {
            what: "complete graph size",
            got: 0,
            expected: ">= 1".into(),
        });
    }
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// The box {0..L}^d with unit lattice edges. Vertex labels follow the
/// staged build order (see [`intermediate_sequence`]), so the induced prefix
/// on the first (l+1)^d labels of a larger box is exactly this box, and
/// intra-stage prefixes are the intermediate growth graphs.
pub fn make_box(d: usize, l: usize, cfg: &RunConfig) -> Result<Graph> {
    build::make_box(d, l, cfg)
}

/// Standard Cartesian product: vertices are pairs (a, b), adjacent when one
/// coordinate is equal and the other adjacent. The pair (a, b) gets label
/// a * |V(H2)| + b. Lattice coordinates concatenate when both factors have
/// them.
pub fn cartesian_product(h: &Graph, h2: &Graph) -> Result<Graph> {
    if h.n == 0 || h2.n == 0 {
        return Err(Error::Invalid("Cartesian product of an empty graph".into()));
    }
    let n = h.n * h2.n;
    let mut edges = Vec::with_capacity(h.n * h2.edge_count() + h2.n * h.edge_count());
    for a in 0..h.n {
        for &(u, v) in h2.edges() {
            edges.push((a * h2.n + u as usize, a * h2.n + v as usize));
        }
    }
    for &(a, b) in h.edges() {
        for u in 0..h2.n {
            edges.push((a as usize * h2.n + u, b as usize * h2.n + u));
        }
    }
    match (h.coords(), h2.coords()) {
        (Some(ca), Some(cb)) => {
            let mut coords = Vec::with_capacity(n);
            for a in 0..h.n {
                for b in 0..h2.n {
                    let mut c = ca[a].clone();
                    c.extend_from_slice(&cb[b]);
                    coords.push(c);
                }
            }
            Graph::with_coords(n, edges, coords)
        }
        _ => Graph::new(n, edges),
    }
}

/// The subgraph induced by the first k vertex labels.
pub fn induced_subgraph(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 || k > g.n {
        return Err(Error::ArgOutOfRange {
            what: "induced prefix size",
            got: k,
            expected: format!("1..={}", g.n),
        });
    }
    let edges = g
        .edges
        .iter()
        .filter(|&&(u, v)| (u as usize) < k && (v as usize) < k)
        .map(|&(u, v)| (u as usize, v as usize));
    let mut sub = Graph::new(k, edges)?;
    if let Some(coords) = &g.coords {
        sub.coords = Some(coords[..k].to_vec());
    }
    Ok(sub)
}

/// Returns G plus the edge {u, v}. The vertex set is unchanged.
pub fn add_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    if u >= g.n || v >= g.n {
        return Err(Error::VertexOutOfRange { v: u.max(v), n: g.n });
    }
    if u == v {
        return Err(Error::InvalidEdge {
            u,
            v,
            reason: "self-loop".into(),
        });
    }
    if g.has_edge(u, v) {
        return Err(Error::InvalidEdge {
            u,
            v,
            reason: "edge already present".into(),
        });
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges
        .iter()
        .map(|&(a, b)| (a as usize, b as usize))
        .collect();
    edges.push((u, v));
    let mut out = Graph::new(g.n, edges)?;
    // Coordinates survive only if the new edge is a unit lattice step.
    if let Some(coords) = &g.coords {
        let d: i64 = coords[u].iter().zip(&coords[v]).map(|(a, b)| (a - b).abs()).sum();
        if d == 1 {
            out.coords = Some(coords.clone());
        }
    }
    Ok(out)
}

/// Removes a pendant edge {u, v} together with its degree-1 endpoint, then
/// compacts labels. Errors when neither endpoint is pendant or when the
/// remainder would be disconnected.
pub fn remove_pendant_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    if u >= g.n || v >= g.n {
        return Err(Error::VertexOutOfRange { v: u.max(v), n: g.n });
    }
    if !g.has_edge(u, v) {
        return Err(Error::InvalidEdge {
            u,
            v,
            reason: "no such edge".into(),
        });
    }
    let drop = if g.degree(v) == 1 {
        v
    } else if g.degree(u) == 1 {
        u
    } else {
        return Err(Error::NotPendant { u, v });
    };
    let remap = |w: usize| if w > drop { w - 1 } else { w };
    let edges = g
        .edges
        .iter()
        .map(|&(a, b)| (a as usize, b as usize))
        .filter(|&(a, b)| a != drop && b != drop)
        .map(|(a, b)| (remap(a), remap(b)));
    let mut out = Graph::new(g.n - 1, edges)?;
    if let Some(coords) = &g.coords {
        let mut c = coords.clone();
        c.remove(drop);
        out.coords = Some(c);
    }
    if out.n > 0 && !out.is_connected() {
        return Err(Error::Disconnected {
            context: format!("after removing pendant edge ({u}, {v})"),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_shapes() {
        let p0 = make_path(0);
        assert_eq!(p0.vertex_count(), 1);
        assert_eq!(p0.edge_count(), 0);

        let p1 = make_path(1);
        assert_eq!(p1.vertex_count(), 2);
        assert_eq!(p1.edges(), &[(0, 1)]);

        let p3 = make_path(3);
        assert_eq!(p3.vertex_count(), 4);
        assert_eq!(p3.edges(), &[(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn rejects_non_lattice_coords() {
        let coords = vec![vec![0], vec![2]];
        assert!(Graph::with_coords(2, [(0, 1)], coords).is_err());
    }

    #[test]
    fn product_square() {
        let k2 = make_path(1);
        let square = cartesian_product(&k2, &k2).unwrap();
        assert_eq!(square.vertex_count(), 4);
        assert_eq!(square.edge_count(), 4);
        for v in 0..4 {
            assert_eq!(square.degree(v), 2);
        }
    }

    #[test]
    fn product_grid_counts() {
        let g = cartesian_product(&make_path(2), &make_path(1)).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 7);
    }

    #[test]
    fn induced_prefix() {
        let p3 = make_path(3);
        let full = induced_subgraph(&p3, 4).unwrap();
        assert_eq!(full.edges(), p3.edges());
        let pre = induced_subgraph(&p3, 2).unwrap();
        assert_eq!(pre.edges(), &[(0, 1)]);
        assert!(induced_subgraph(&p3, 0).is_err());
        assert!(induced_subgraph(&p3, 5).is_err());
    }

    #[test]
    fn add_and_remove_edges() {
        let p2 = make_path(2);
        let tri = add_edge(&p2, 0, 2).unwrap();
        assert_eq!(tri.edge_count(), 3);
        assert!(add_edge(&tri, 0, 2).is_err());

        let p3 = make_path(3);
        let p2b = remove_pendant_edge(&p3, 2, 3).unwrap();
        assert_eq!(p2b.vertex_count(), 3);
        assert_eq!(p2b.edges(), make_path(2).edges());
        assert!(remove_pendant_edge(&p3, 1, 2).is_err());
    }

    #[test]
    fn pendant_removal_on_k2() {
        let k2 = make_path(1);
        let single = remove_pendant_edge(&k2, 0, 1).unwrap();
        assert_eq!(single.vertex_count(), 1);
        assert_eq!(single.edge_count(), 0);
        assert!(single.is_connected());
    }

    #[test]
    fn bfs_prefixes_connected() {
        let star = Graph::new(5, [(4, 0), (4, 1), (4, 2), (4, 3)]).unwrap();
        let relabeled = star.bfs_relabeled(0).unwrap();
        for k in 1..=5 {
            assert!(induced_subgraph(&relabeled, k).unwrap().is_connected());
        }
    }
}
