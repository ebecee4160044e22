use super::graph::{Edge, Graph};
use super::ids::{EdgeId, RegionId, VertexId, VertexSet};
use super::EmbeddingError;

/// A directed edge, `tail -> head`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub tail: VertexId,
    pub head: VertexId,
    pub edge: EdgeId,
}

/// A face of the embedding with its boundary walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    id: RegionId,
    darts: Vec<Dart>,
}

impl Region {
    pub fn id(&self) -> RegionId {
        self.id
    }

    /// Boundary length |E(C_r)|, counted as boundary darts.
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn is_triangle(&self) -> bool {
        self.darts.len() == 3
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    /// Boundary edges in walk order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.darts.iter().map(|d| d.edge)
    }

    /// Boundary vertices in walk order (dart tails).
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.darts.iter().map(|d| d.tail)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.darts.iter().any(|d| d.edge == e)
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.darts.iter().any(|d| d.tail == v)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }
}

/// A connected simple graph together with a clockwise rotation at every vertex
/// whose traced faces satisfy Euler's formula for the sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    graph: Graph,
    // rotation[v]: clockwise neighbours, starting from the smallest index
    rotation: Vec<Vec<VertexId>>,
    // rotation_pos[v][k]: position in rotation[v] of the k-th neighbour of graph.incident(v)
    rotation_pos: Vec<Vec<usize>>,
    regions: Vec<Region>,
    dart_region: Vec<RegionId>,
}

impl Embedding {
    /// Build from `(vertex, clockwise neighbours)` records.
    pub fn new(records: &[(String, Vec<String>)]) -> Result<Embedding, EmbeddingError> {
        let graph = Graph::from_adjacency(records)?;
        if graph.edge_count() == 0 {
            return Err(EmbeddingError::NoEdges);
        }
        if !graph.is_connected() {
            return Err(EmbeddingError::Disconnected);
        }
        let mut rotation = vec![Vec::new(); graph.vertex_count()];
        for (name, nbrs) in records {
            let v = graph.vertex(name).expect("validated by graph");
            let mut rot: Vec<VertexId> = nbrs
                .iter()
                .map(|n| graph.vertex(n).expect("validated by graph"))
                .collect();
            if let Some(start) = rot.iter().enumerate().min_by_key(|(_, w)| **w).map(|(i, _)| i) {
                rot.rotate_left(start);
            }
            rotation[v.0] = rot;
        }
        Self::from_parts(graph, rotation)
    }

    fn from_parts(graph: Graph, rotation: Vec<Vec<VertexId>>) -> Result<Embedding, EmbeddingError> {
        let rotation_pos: Vec<Vec<usize>> = graph
            .vertices()
            .map(|v| {
                graph
                    .incident(v)
                    .iter()
                    .map(|(w, _)| {
                        rotation[v.0]
                            .iter()
                            .position(|x| x == w)
                            .expect("rotation lists every neighbour")
                    })
                    .collect()
            })
            .collect();
        let mut emb = Embedding {
            graph,
            rotation,
            rotation_pos,
            regions: Vec::new(),
            dart_region: Vec::new(),
        };
        emb.trace();
        let (v, e, r) = (
            emb.graph.vertex_count() as i64,
            emb.graph.edge_count() as i64,
            emb.regions.len() as i64,
        );
        if v - e + r != 2 {
            return Err(EmbeddingError::EulerFailure { v, e, r });
        }
        Ok(emb)
    }

    fn dart_index(&self, d: Dart) -> usize {
        let edge = self.graph.edge(d.edge);
        2 * d.edge.0 + usize::from(d.tail != edge.u)
    }

    fn dart_from_index(&self, i: usize) -> Dart {
        let edge = self.graph.edge(EdgeId(i / 2));
        let (tail, head) = if i.is_multiple_of(2) {
            (edge.u, edge.v)
        } else {
            (edge.v, edge.u)
        };
        Dart {
            tail,
            head,
            edge: EdgeId(i / 2),
        }
    }

    fn position_in_rotation(&self, at: VertexId, nbr: VertexId) -> usize {
        let k = self
            .graph
            .incident(at)
            .binary_search_by_key(&nbr, |&(w, _)| w)
            .expect("neighbour present");
        self.rotation_pos[at.0][k]
    }

    /// Successor of `(u,v)` along its face: `(v,w)` with `w` following `u` clockwise at `v`.
    pub fn next_dart(&self, d: Dart) -> Dart {
        let rot = &self.rotation[d.head.0];
        let pos = self.position_in_rotation(d.head, d.tail);
        let w = rot[(pos + 1) % rot.len()];
        Dart {
            tail: d.head,
            head: w,
            edge: self
                .graph
                .edge_between(d.head, w)
                .expect("rotation neighbour is adjacent"),
        }
    }

    fn trace(&mut self) {
        let total = 2 * self.graph.edge_count();
        let mut region_of = vec![usize::MAX; total];
        let mut regions = Vec::new();
        for start in 0..total {
            if region_of[start] != usize::MAX {
                continue;
            }
            let id = regions.len();
            let mut darts = Vec::new();
            let mut i = start;
            loop {
                region_of[i] = id;
                let d = self.dart_from_index(i);
                darts.push(d);
                i = self.dart_index(self.next_dart(d));
                if i == start {
                    break;
                }
            }
            regions.push(Region {
                id: RegionId(id),
                darts,
            });
        }
        self.regions = regions;
        self.dart_region = region_of.into_iter().map(RegionId).collect();
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Clockwise rotation at `v`, starting from the smallest neighbour index.
    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rotation[v.0]
    }

    /// `(name, clockwise neighbour names)` per vertex in index order.
    pub fn rotation_records(&self) -> Vec<(String, Vec<String>)> {
        self.graph
            .vertices()
            .map(|v| {
                (
                    self.graph.name(v).to_string(),
                    self.rotation[v.0]
                        .iter()
                        .map(|&w| self.graph.name(w).to_string())
                        .collect(),
                )
            })
            .collect()
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn region(&self, r: RegionId) -> &Region {
        &self.regions[r.0]
    }

    pub fn region_count(&self) -> usize {
        self.regions.len()
    }

    /// The region whose boundary walk contains the dart `tail -> head`.
    pub fn region_of_dart(&self, tail: VertexId, head: VertexId) -> Option<RegionId> {
        let edge = self.graph.edge_between(tail, head)?;
        let i = self.dart_index(Dart { tail, head, edge });
        Some(self.dart_region[i])
    }

    /// The regions on the two sides of `e`: first the one containing `u -> v`
    /// (with `u < v`), then the one containing `v -> u`.
    pub fn incident_regions(&self, e: EdgeId) -> Result<(RegionId, RegionId), EmbeddingError> {
        let (a, b) = self.sides(e);
        if a == b {
            return Err(EmbeddingError::NotTwoSided(self.graph.edge_label(e)));
        }
        Ok((a, b))
    }

    /// Like [`Embedding::incident_regions`] but allows both sides to be the same region.
    pub fn sides(&self, e: EdgeId) -> (RegionId, RegionId) {
        (self.dart_region[2 * e.0], self.dart_region[2 * e.0 + 1])
    }

    /// The region across `e` from `r`; `None` if `e` is not on `r`.
    pub fn other_region(&self, e: EdgeId, r: RegionId) -> Option<RegionId> {
        let (a, b) = self.sides(e);
        if a == r {
            Some(b)
        } else if b == r {
            Some(a)
        } else {
            None
        }
    }

    /// δ(X).
    pub fn cut_of_set(&self, set: VertexSet) -> Vec<EdgeId> {
        self.graph.cut(set)
    }

    /// Whether `q` is the edge set of a cycle of the dual graph of length at least three.
    pub fn is_cocycle(&self, q: &[EdgeId]) -> bool {
        let mut edges = q.to_vec();
        edges.sort();
        edges.dedup();
        if edges.len() != q.len() || edges.len() < 3 {
            return false;
        }
        let r = self.regions.len();
        let mut degree = vec![0usize; r];
        let mut parent: Vec<usize> = (0..r).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &e in &edges {
            let (a, b) = self.sides(e);
            if a == b {
                return false;
            }
            degree[a.0] += 1;
            degree[b.0] += 1;
            let (ra, rb) = (find(&mut parent, a.0), find(&mut parent, b.0));
            parent[ra] = rb;
        }
        let touched: Vec<usize> = (0..r).filter(|&i| degree[i] > 0).collect();
        if touched.iter().any(|&i| degree[i] != 2) {
            return false;
        }
        let root = find(&mut parent, touched[0]);
        touched.iter().all(|&i| find(&mut parent, i) == root)
    }

    /// For a bond `q`, the side of `G - q` containing vertex 0.
    pub fn bond_side(&self, q: &[EdgeId]) -> Option<VertexSet> {
        let comps = self.graph.components_without(q);
        if comps.len() != 2 {
            return None;
        }
        let mut want = q.to_vec();
        want.sort();
        (self.graph.cut(comps[0]) == want).then_some(comps[0])
    }

    pub fn is_two_connected(&self) -> bool {
        self.graph.is_k_connected(2)
    }

    /// No vertex cut of size at most two. Needs at least four vertices.
    pub fn is_three_connected(&self) -> Result<bool, EmbeddingError> {
        let n = self.graph.vertex_count();
        if n < 4 {
            return Err(EmbeddingError::TooFewVertices(n));
        }
        Ok(self.graph.is_k_connected(3))
    }

    /// Regions whose boundary contains both `x` and `y`.
    pub fn common_regions(&self, x: VertexId, y: VertexId) -> Vec<RegionId> {
        self.regions
            .iter()
            .filter(|r| r.contains_vertex(x) && r.contains_vertex(y))
            .map(|r| r.id)
            .collect()
    }

    // position of the first dart of `r` entering `v`
    fn entering_dart(&self, r: RegionId, v: VertexId) -> Option<Dart> {
        self.regions[r.0].darts.iter().copied().find(|d| d.head == v)
    }

    fn insert_after(rotation: &mut [Vec<VertexId>], at: VertexId, after: VertexId, new: VertexId) {
        let rot = &mut rotation[at.0];
        let pos = rot.iter().position(|&w| w == after).expect("neighbour in rotation");
        rot.insert(pos + 1, new);
    }

    fn rebuild(&self, rotation: Vec<Vec<VertexId>>) -> Result<Embedding, EmbeddingError> {
        let records: Vec<(String, Vec<String>)> = rotation
            .iter()
            .enumerate()
            .map(|(v, rot)| {
                (
                    self.graph.name(VertexId(v)).to_string(),
                    rot.iter().map(|&w| self.graph.name(w).to_string()).collect(),
                )
            })
            .collect();
        Embedding::new(&records)
    }

    /// Add the edge `xy` drawn inside region `r`, splitting it in two.
    pub fn with_chord(&self, x: VertexId, y: VertexId, r: RegionId) -> Result<Embedding, EmbeddingError> {
        let name = |v: VertexId| self.graph.name(v).to_string();
        if x == y {
            return Err(EmbeddingError::Loop(name(x)));
        }
        if self.graph.edge_between(x, y).is_some() {
            return Err(EmbeddingError::AlreadyAdjacent(name(x), name(y)));
        }
        let (Some(into_x), Some(into_y)) = (self.entering_dart(r, x), self.entering_dart(r, y)) else {
            return Err(EmbeddingError::NoCommonRegion(name(x), name(y)));
        };
        let mut rotation = self.rotation.clone();
        Self::insert_after(&mut rotation, x, into_x.tail, y);
        Self::insert_after(&mut rotation, y, into_y.tail, x);
        self.rebuild(rotation)
    }

    /// Remove edge `e`; fails if the graph would disconnect.
    pub fn without_edge(&self, e: EdgeId) -> Result<Embedding, EmbeddingError> {
        let Edge { u, v } = self.graph.edge(e);
        let mut rotation = self.rotation.clone();
        rotation[u.0].retain(|&w| w != v);
        rotation[v.0].retain(|&w| w != u);
        self.rebuild(rotation)
    }

    /// Add a new vertex `name` inside region `r`, joined to `attach`, which must be
    /// boundary vertices of `r` listed in boundary walk order.
    pub fn with_vertex_in_region(
        &self,
        name: &str,
        r: RegionId,
        attach: &[VertexId],
    ) -> Result<Embedding, EmbeddingError> {
        if self.graph.vertex(name).is_some() {
            return Err(EmbeddingError::DuplicateVertex(name.to_string()));
        }
        let mut records = self.rotation_records();
        let mut rotation: Vec<Vec<String>> = records.iter().map(|(_, r)| r.clone()).collect();
        for &b in attach {
            let d = self
                .entering_dart(r, b)
                .ok_or_else(|| EmbeddingError::NoCommonRegion(name.to_string(), self.graph.name(b).to_string()))?;
            let rot = &mut rotation[b.0];
            let pos = rot
                .iter()
                .position(|w| w == self.graph.name(d.tail))
                .expect("neighbour in rotation");
            rot.insert(pos + 1, name.to_string());
        }
        for (rec, rot) in records.iter_mut().zip(rotation) {
            rec.1 = rot;
        }
        records.push((
            name.to_string(),
            attach.iter().rev().map(|&b| self.graph.name(b).to_string()).collect(),
        ));
        Embedding::new(&records)
    }
}
