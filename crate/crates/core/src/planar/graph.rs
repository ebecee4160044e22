use std::collections::{BTreeMap, HashMap};

use super::ids::{EdgeId, VertexId, VertexSet, MAX_VERTICES};
use super::EmbeddingError;

/// An undirected edge with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Self {
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn has_end(self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }

    /// The end that is not `w`. Panics if `w` is not an end.
    pub fn other(self, w: VertexId) -> VertexId {
        if self.u == w {
            self.v
        } else {
            assert_eq!(self.v, w, "vertex is not an end of the edge");
            self.u
        }
    }

    /// Distinct edges with no common end.
    pub fn is_disjoint_from(self, other: Edge) -> bool {
        self != other && !other.has_end(self.u) && !other.has_end(self.v)
    }
}

/// A simple undirected graph on named vertices.
///
/// Vertex indices follow the lexicographic order of names; edge indices follow
/// the order of `(u, v)` pairs with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
    edges: Vec<Edge>,
    edge_index: HashMap<Edge, EdgeId>,
    // (neighbour, edge), sorted by neighbour
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
}

impl Graph {
    /// Build from per-vertex neighbour lists. Every adjacency must be listed from both ends.
    pub fn from_adjacency(records: &[(String, Vec<String>)]) -> Result<Graph, EmbeddingError> {
        let mut lists: BTreeMap<&str, &[String]> = BTreeMap::new();
        for (name, nbrs) in records {
            if lists.insert(name.as_str(), nbrs.as_slice()).is_some() {
                return Err(EmbeddingError::DuplicateVertex(name.clone()));
            }
        }
        if lists.len() > MAX_VERTICES {
            return Err(EmbeddingError::TooManyVertices(lists.len()));
        }
        let names: Vec<String> = lists.keys().map(|s| s.to_string()).collect();
        let index: HashMap<String, VertexId> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), VertexId(i)))
            .collect();

        let mut pairs = Vec::new();
        for (name, nbrs) in &lists {
            let v = index[*name];
            let mut seen = Vec::with_capacity(nbrs.len());
            for n in nbrs.iter() {
                let w = *index.get(n).ok_or_else(|| EmbeddingError::UnknownNeighbour {
                    vertex: name.to_string(),
                    neighbour: n.clone(),
                })?;
                if w == v {
                    return Err(EmbeddingError::Loop(n.clone()));
                }
                if seen.contains(&w) {
                    return Err(EmbeddingError::RepeatedNeighbour {
                        vertex: name.to_string(),
                        neighbour: n.clone(),
                    });
                }
                seen.push(w);
                pairs.push((v, w));
            }
        }
        for &(v, w) in &pairs {
            let back = lists[names[w.0].as_str()].iter().any(|n| index[n] == v);
            if !back {
                return Err(EmbeddingError::AsymmetricRotation {
                    lister: names[v.0].clone(),
                    omitter: names[w.0].clone(),
                });
            }
        }
        let mut edges: Vec<Edge> = pairs
            .into_iter()
            .filter(|(v, w)| v < w)
            .map(|(v, w)| Edge::new(v, w))
            .collect();
        edges.sort();
        Ok(Self::assemble(names, index, edges))
    }

    /// Build from vertex names and name pairs.
    pub fn from_edge_list(names: &[&str], edges: &[(&str, &str)]) -> Result<Graph, EmbeddingError> {
        let mut records: Vec<(String, Vec<String>)> = names.iter().map(|n| (n.to_string(), Vec::new())).collect();
        let pos: HashMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (*n, i)).collect();
        for (a, b) in edges {
            let ia = *pos.get(a).ok_or_else(|| EmbeddingError::UnknownVertex(a.to_string()))?;
            let ib = *pos.get(b).ok_or_else(|| EmbeddingError::UnknownVertex(b.to_string()))?;
            records[ia].1.push(b.to_string());
            records[ib].1.push(a.to_string());
        }
        Self::from_adjacency(&records)
    }

    fn assemble(names: Vec<String>, index: HashMap<String, VertexId>, edges: Vec<Edge>) -> Graph {
        let mut adjacency = vec![Vec::new(); names.len()];
        let mut edge_index = HashMap::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            edge_index.insert(*e, EdgeId(i));
            adjacency[e.u.0].push((e.v, EdgeId(i)));
            adjacency[e.v.0].push((e.u, EdgeId(i)));
        }
        for list in &mut adjacency {
            list.sort();
        }
        Graph {
            names,
            index,
            edges,
            edge_index,
            adjacency,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.names.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.names.len())
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    pub fn vertex_or_err(&self, name: &str) -> Result<VertexId, EmbeddingError> {
        self.vertex(name)
            .ok_or_else(|| EmbeddingError::UnknownVertex(name.to_string()))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Edge {
        self.edges[e.0]
    }

    pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        if a == b {
            return None;
        }
        self.edge_index.get(&Edge::new(a, b)).copied()
    }

    pub fn edge_by_names(&self, a: &str, b: &str) -> Result<EdgeId, EmbeddingError> {
        let (va, vb) = (self.vertex_or_err(a)?, self.vertex_or_err(b)?);
        self.edge_between(va, vb).ok_or_else(|| EmbeddingError::NoSuchEdge {
            u: a.to_string(),
            v: b.to_string(),
        })
    }

    /// `u-v` with names, smaller name first.
    pub fn edge_label(&self, e: EdgeId) -> String {
        let edge = self.edges[e.0];
        format!("{}-{}", self.names[edge.u.0], self.names[edge.v.0])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v.0].len()
    }

    /// Neighbours with the connecting edge, sorted by neighbour.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v.0]
    }

    pub fn neighbours(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency[v.0].iter().map(|&(w, _)| w)
    }

    /// δ(X): edges with exactly one end in `set`, in edge order.
    pub fn cut(&self, set: VertexSet) -> Vec<EdgeId> {
        self.edge_ids()
            .filter(|&e| {
                let edge = self.edges[e.0];
                set.contains(edge.u) != set.contains(edge.v)
            })
            .collect()
    }

    /// Whether the subgraph induced on `set` is connected (empty sets are not).
    pub fn is_connected_within(&self, set: VertexSet) -> bool {
        let Some(start) = set.iter().next() else {
            return false;
        };
        self.reach_within(start, set) == set
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.all_vertices())
    }

    /// Vertices reachable from `start` inside `set`.
    pub fn reach_within(&self, start: VertexId, set: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adjacency[v.0] {
                if set.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Connected components of `G - removed_edges`, in order of least vertex.
    pub fn components_without(&self, removed: &[EdgeId]) -> Vec<VertexSet> {
        let mut dropped = vec![false; self.edges.len()];
        for e in removed {
            dropped[e.0] = true;
        }
        let mut assigned = VertexSet::empty();
        let mut out = Vec::new();
        for start in self.vertices() {
            if assigned.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &(w, e) in &self.adjacency[v.0] {
                    if !dropped[e.0] && !comp.contains(w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            assigned = VertexSet::from_bits(assigned.bits() | comp.bits());
            out.push(comp);
        }
        out
    }

    /// True iff the graph has more than `k` vertices and no set of fewer than
    /// `k` vertices separates it. Brute force over vertex subsets.
    pub fn is_k_connected(&self, k: usize) -> bool {
        self.vertex_count() > k && self.separator(k - 1).is_none()
    }

    /// A set of at most `max_size` vertices whose removal leaves a disconnected graph,
    /// smallest sets first.
    pub fn separator(&self, max_size: usize) -> Option<Vec<VertexId>> {
        let all = self.all_vertices();
        (0..=max_size).find_map(|size| {
            let mut removed = Vec::with_capacity(size);
            self.separator_of_size(size, 0, &mut removed, all)
        })
    }

    fn separator_of_size(
        &self,
        size: usize,
        from: usize,
        removed: &mut Vec<VertexId>,
        all: VertexSet,
    ) -> Option<Vec<VertexId>> {
        if removed.len() == size {
            let mut rest = all;
            for &v in removed.iter() {
                rest.remove(v);
            }
            return (!rest.is_empty() && !self.is_connected_within(rest)).then(|| removed.clone());
        }
        for v in from..self.vertex_count() {
            removed.push(VertexId(v));
            let found = self.separator_of_size(size, v + 1, removed, all);
            removed.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}
