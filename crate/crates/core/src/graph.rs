//! Plane multigraph as a rotation system.
//!
//! A graph on dense vertex ids `0..n` with edges `0..m`. Edge `e` has two
//! darts (half-edges) `2e` and `2e+1`, sitting at the first and second
//! endpoint respectively. Each vertex stores its incident darts in clockwise
//! order. Faces are traced with `next(d) = rot_prev(twin(d))`, so face walks
//! turn counterclockwise at each vertex. Exactly one face is the outer face,
//! designated by a dart on its walk.

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;
/// Half-edge id: `2e` for the occurrence at `edges[e].0`, `2e+1` at `edges[e].1`.
pub type Dart = usize;

#[inline]
pub fn twin(d: Dart) -> Dart {
    d ^ 1
}

#[inline]
pub fn dart_edge(d: Dart) -> EdgeId {
    d >> 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    /// Closed walk of darts; consecutive darts chain tail-to-head.
    pub boundary: Vec<Dart>,
    pub is_outer: bool,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct PlaneGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    rot: Vec<Vec<Dart>>,
    outer: Dart,
    dart_pos: Vec<(VertexId, usize)>,
    faces: Vec<Face>,
    face_of: Vec<usize>,
}

/// Result of an embedding surgery: the new graph plus id remappings
/// (old id -> new id, `None` when removed).
#[derive(Debug, Clone)]
pub struct Surgery {
    pub graph: PlaneGraph,
    pub vmap: Vec<Option<VertexId>>,
    pub emap: Vec<Option<EdgeId>>,
    pub new_vertices: Vec<VertexId>,
    pub new_edges: Vec<EdgeId>,
}

impl PlaneGraph {
    /// Build and validate a plane graph from raw parts.
    pub fn new(
        n: usize,
        edges: Vec<(VertexId, VertexId)>,
        rot: Vec<Vec<Dart>>,
        outer: Dart,
    ) -> Result<Self> {
        let m = edges.len();
        if rot.len() != n {
            return Err(Error::Embedding(format!(
                "expected {} rotation lists, got {}",
                n,
                rot.len()
            )));
        }
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::Embedding(format!(
                    "edge endpoint out of range ({}, {}) with {} vertices",
                    u, v, n
                )));
            }
        }
        // Every dart appears exactly once, at the vertex matching its endpoint.
        let mut dart_pos = vec![(usize::MAX, usize::MAX); 2 * m];
        for (v, list) in rot.iter().enumerate() {
            for (i, &d) in list.iter().enumerate() {
                if d >= 2 * m {
                    return Err(Error::Embedding(format!("unknown dart {} at vertex {}", d, v)));
                }
                if dart_pos[d].0 != usize::MAX {
                    return Err(Error::Embedding(format!("dart {} listed twice", d)));
                }
                let (a, b) = edges[dart_edge(d)];
                let expect = if d & 1 == 0 { a } else { b };
                if expect != v {
                    return Err(Error::Embedding(format!(
                        "dart {} of edge {} listed at vertex {} but belongs to {}",
                        d,
                        dart_edge(d),
                        v,
                        expect
                    )));
                }
                dart_pos[d] = (v, i);
            }
        }
        if let Some(d) = dart_pos.iter().position(|p| p.0 == usize::MAX) {
            return Err(Error::Embedding(format!("dangling dart {} missing from rotations", d)));
        }
        if m > 0 && outer >= 2 * m {
            return Err(Error::Embedding(format!("outer dart {} unknown", outer)));
        }

        let mut g = PlaneGraph {
            n,
            edges,
            rot,
            outer,
            dart_pos,
            faces: Vec::new(),
            face_of: Vec::new(),
        };
        g.rebuild_faces()?;
        g.check_connected()?;
        // Euler: |V| - |E| + |F| = 2 for a connected plane graph.
        let f = g.faces.len();
        if (n as i64) - (m as i64) + (f as i64) != 2 {
            return Err(Error::Embedding(format!(
                "Euler check failed: {} - {} + {} != 2 (rotation system is not planar)",
                n, m, f
            )));
        }
        Ok(g)
    }

    fn rebuild_faces(&mut self) -> Result<()> {
        let m = self.edges.len();
        if m == 0 {
            // A single vertex: one face, empty walk.
            self.faces = vec![Face { id: 0, boundary: Vec::new(), is_outer: true }];
            self.face_of = Vec::new();
            return Ok(());
        }
        let mut face_of = vec![usize::MAX; 2 * m];
        let mut walks: Vec<Vec<Dart>> = Vec::new();
        for start in 0..2 * m {
            if face_of[start] != usize::MAX {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                if face_of[d] != usize::MAX {
                    return Err(Error::Embedding(format!(
                        "face trace through dart {} is not a simple orbit",
                        d
                    )));
                }
                face_of[d] = walks.len();
                walk.push(d);
                d = self.next_in_face(d);
                if d == start {
                    break;
                }
            }
            walks.push(walk);
        }
        // Deterministic order: by smallest dart on the walk, walk rotated to
        // start at that dart.
        let mut order: Vec<usize> = (0..walks.len()).collect();
        let min_dart: Vec<Dart> = walks.iter().map(|w| *w.iter().min().unwrap()).collect();
        order.sort_by_key(|&i| min_dart[i]);
        let outer_walk = face_of[self.outer];
        let mut faces = Vec::with_capacity(walks.len());
        let mut renum = vec![0usize; walks.len()];
        for (new_id, &old) in order.iter().enumerate() {
            renum[old] = new_id;
            let w = &walks[old];
            let pos = w.iter().position(|&d| d == min_dart[old]).unwrap();
            let mut boundary = Vec::with_capacity(w.len());
            boundary.extend_from_slice(&w[pos..]);
            boundary.extend_from_slice(&w[..pos]);
            faces.push(Face { id: new_id, boundary, is_outer: old == outer_walk });
        }
        for f in face_of.iter_mut() {
            *f = renum[*f];
        }
        self.faces = faces;
        self.face_of = face_of;
        Ok(())
    }

    fn check_connected(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Embedding("empty graph".into()));
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &d in &self.rot[v] {
                let h = self.head(d);
                if !seen[h] {
                    seen[h] = true;
                    count += 1;
                    stack.push(h);
                }
            }
        }
        if count != self.n {
            return Err(Error::Embedding("graph is not connected".into()));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        self.edges[e].0 == self.edges[e].1
    }

    pub fn rotation(&self, v: VertexId) -> &[Dart] {
        &self.rot[v]
    }

    pub fn outer_dart(&self) -> Dart {
        self.outer
    }

    /// Vertex at which a dart sits.
    pub fn tail(&self, d: Dart) -> VertexId {
        let (a, b) = self.edges[dart_edge(d)];
        if d & 1 == 0 {
            a
        } else {
            b
        }
    }

    /// Other endpoint of the dart's edge.
    pub fn head(&self, d: Dart) -> VertexId {
        self.tail(twin(d))
    }

    pub fn rot_next(&self, d: Dart) -> Dart {
        let (v, i) = self.dart_pos[d];
        let list = &self.rot[v];
        list[(i + 1) % list.len()]
    }

    pub fn rot_prev(&self, d: Dart) -> Dart {
        let (v, i) = self.dart_pos[d];
        let list = &self.rot[v];
        list[(i + list.len() - 1) % list.len()]
    }

    /// Successor along the face walk.
    pub fn next_in_face(&self, d: Dart) -> Dart {
        self.rot_prev(twin(d))
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d]
    }

    pub fn outer_face(&self) -> &Face {
        self.faces.iter().find(|f| f.is_outer).unwrap()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rot[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Neighbors of `v` in rotation order (loops yield `v` itself).
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.rot[v].iter().map(|&d| self.head(d)).collect()
    }

    /// Distinct neighbors, sorted.
    pub fn neighbor_set(&self, v: VertexId) -> Vec<VertexId> {
        let mut ns = self.neighbors(v);
        ns.sort_unstable();
        ns.dedup();
        ns
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.rot[u].iter().any(|&d| self.head(d) == v)
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
            .count()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(a, b)| a == b)
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        pairs.sort_unstable();
        pairs.windows(2).any(|w| w[0] == w[1])
    }

    pub fn is_simple(&self) -> bool {
        !self.has_loops() && !self.has_parallel_edges()
    }

    pub fn has_triangle(&self) -> bool {
        let n = self.n;
        let mut adj = vec![vec![false; n]; n];
        for &(a, b) in &self.edges {
            if a != b {
                adj[a][b] = true;
                adj[b][a] = true;
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if !adj[a][b] {
                    continue;
                }
                for c in b + 1..n {
                    if adj[a][c] && adj[b][c] {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Two-coloring; `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color = vec![None; self.n];
        let mut stack = vec![0usize];
        color[0] = Some(false);
        while let Some(v) = stack.pop() {
            let cv = color[v].unwrap();
            for &d in &self.rot[v] {
                let h = self.head(d);
                if h == v {
                    return None;
                }
                match color[h] {
                    None => {
                        color[h] = Some(!cv);
                        stack.push(h);
                    }
                    Some(ch) if ch == cv => return None,
                    _ => {}
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    /// Plane dual: one vertex per face, one edge per edge. Dart ids carry
    /// over, so dual edge `e` joins the faces on the two sides of primal `e`.
    pub fn dual(&self) -> Result<PlaneGraph> {
        let nf = self.faces.len();
        let m = self.edges.len();
        if m == 0 {
            return Err(Error::Unsupported("dual of an edgeless graph".into()));
        }
        let edges: Vec<(usize, usize)> = (0..m)
            .map(|e| (self.face_of[2 * e], self.face_of[2 * e + 1]))
            .collect();
        // Rotation at a dual vertex = the primal face walk.
        let mut rot = vec![Vec::new(); nf];
        for f in &self.faces {
            rot[f.id] = f.boundary.clone();
        }
        // The dual face traced through twin(outer) corresponds to the primal
        // vertex at the tail of the outer dart.
        PlaneGraph::new(nf, edges, rot, twin(self.outer))
    }

    /// Same abstract multigraph handed over as (n, edge list).
    pub fn abstract_edges(&self) -> (usize, Vec<(usize, usize)>) {
        (self.n, self.edges.clone())
    }

    /// Replace the outer-face designation by a dart on another face.
    pub fn reroot_outer(&self, d: Dart) -> Result<PlaneGraph> {
        PlaneGraph::new(self.n, self.edges.clone(), self.rot.clone(), d)
    }

    // ------------------------------------------------------------------
    // Embedding surgery. All operations return fresh validated graphs.
    // ------------------------------------------------------------------

    fn identity_surgery_maps(&self) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
        (
            (0..self.n).map(Some).collect(),
            (0..self.edges.len()).map(Some).collect(),
        )
    }

    /// Insert a chord between two corners of one face. A corner is named by a
    /// position `i` into the face walk and sits at `tail(boundary[i])`,
    /// between the walk's arriving and leaving darts there. The new edge is
    /// appended with endpoints `(tail(b[i]), tail(b[j]))`.
    pub fn insert_chord(&self, face: usize, i: usize, j: usize) -> Result<Surgery> {
        let b = &self.faces[face].boundary;
        if i == j || i >= b.len() || j >= b.len() {
            return Err(Error::MoveParam(format!(
                "bad chord corners {} {} on face of length {}",
                i,
                j,
                b.len()
            )));
        }
        let hi = b[i];
        let hj = b[j];
        let u = self.tail(hi);
        let v = self.tail(hj);
        if u == v {
            return Err(Error::MoveParam("chord would create a loop".into()));
        }
        let mut edges = self.edges.clone();
        let e = edges.len();
        edges.push((u, v));
        let du = 2 * e;
        let dv = 2 * e + 1;
        let mut rot = self.rot.clone();
        insert_after(&mut rot[u], hi, du);
        insert_after(&mut rot[v], hj, dv);
        let g = PlaneGraph::new(self.n, edges, rot, self.outer)?;
        let (vmap, emap) = self.identity_surgery_maps();
        Ok(Surgery { graph: g, vmap, emap, new_vertices: vec![], new_edges: vec![e] })
    }

    /// Add a parallel copy of edge `e` inside the face on the side of dart
    /// `2e` (or `2e+1` when `side_dart` says so), forming an empty lens with
    /// the original.
    pub fn double_edge(&self, e: EdgeId, side_dart: Dart) -> Result<Surgery> {
        if dart_edge(side_dart) != e {
            return Err(Error::MoveParam("side dart does not belong to the edge".into()));
        }
        if self.is_loop(e) {
            return Err(Error::MoveParam("cannot double a loop".into()));
        }
        let f = self.face_of[side_dart];
        let b = &self.faces[f].boundary;
        let i = b.iter().position(|&d| d == side_dart).unwrap();
        let j = (i + 1) % b.len();
        // Corner i sits at tail(side_dart), corner j at head(side_dart):
        // the chord between them doubles e with an empty lens face.
        self.insert_chord(f, i, j)
    }

    /// Insert a new degree-2 vertex inside a face, joined to the corners
    /// `i` and `j` of its walk. Returns the surgery; the new vertex id is
    /// `n`, the new edges are `(x, u)` then `(x, v)`.
    pub fn insert_vertex2(&self, face: usize, i: usize, j: usize) -> Result<Surgery> {
        let b = &self.faces[face].boundary;
        if i == j || i >= b.len() || j >= b.len() {
            return Err(Error::MoveParam(format!(
                "bad corners {} {} on face of length {}",
                i,
                j,
                b.len()
            )));
        }
        let hi = b[i];
        let hj = b[j];
        let u = self.tail(hi);
        let v = self.tail(hj);
        if u == v {
            return Err(Error::MoveParam("degree-2 vertex needs two distinct anchors".into()));
        }
        let x = self.n;
        let mut edges = self.edges.clone();
        let e1 = edges.len();
        edges.push((x, u));
        let e2 = edges.len();
        edges.push((x, v));
        let d1x = 2 * e1;
        let d1u = 2 * e1 + 1;
        let d2x = 2 * e2;
        let d2v = 2 * e2 + 1;
        let mut rot = self.rot.clone();
        insert_after(&mut rot[u], hi, d1u);
        insert_after(&mut rot[v], hj, d2v);
        rot.push(vec![d1x, d2x]);
        let g = PlaneGraph::new(self.n + 1, edges, rot, self.outer)?;
        let (vmap, emap) = self.identity_surgery_maps();
        Ok(Surgery { graph: g, vmap, emap, new_vertices: vec![x], new_edges: vec![e1, e2] })
    }

    /// Attach a new degree-1 vertex by a single edge at a face corner.
    pub fn insert_pendant(&self, face: usize, i: usize) -> Result<Surgery> {
        let b = &self.faces[face].boundary;
        if i >= b.len() {
            return Err(Error::MoveParam("corner out of range".into()));
        }
        let hi = b[i];
        let u = self.tail(hi);
        let x = self.n;
        let mut edges = self.edges.clone();
        let e = edges.len();
        edges.push((x, u));
        let dx = 2 * e;
        let du = 2 * e + 1;
        let mut rot = self.rot.clone();
        insert_after(&mut rot[u], hi, du);
        rot.push(vec![dx]);
        let g = PlaneGraph::new(self.n + 1, edges, rot, self.outer)?;
        let (vmap, emap) = self.identity_surgery_maps();
        Ok(Surgery { graph: g, vmap, emap, new_vertices: vec![x], new_edges: vec![e] })
    }

    /// Delete a vertex and its incident edges (no loops at it allowed).
    pub fn delete_vertex(&self, v: VertexId) -> Result<Surgery> {
        if self.rot[v].iter().any(|&d| self.head(d) == v) {
            return Err(Error::Unsupported("delete_vertex with a loop".into()));
        }
        let dead: Vec<EdgeId> = self.rot[v].iter().map(|&d| dart_edge(d)).collect();
        let mut edge_alive = vec![true; self.edges.len()];
        for &e in &dead {
            edge_alive[e] = false;
        }
        let mut emap = vec![None; self.edges.len()];
        let mut edges = Vec::new();
        let mut vmap = vec![None; self.n];
        for (w, slot) in vmap.iter_mut().enumerate() {
            if w != v {
                *slot = Some(if w < v { w } else { w - 1 });
            }
        }
        for (e, &alive) in edge_alive.iter().enumerate() {
            if alive {
                emap[e] = Some(edges.len());
                let (a, b) = self.edges[e];
                edges.push((vmap[a].unwrap(), vmap[b].unwrap()));
            }
        }
        let remap_dart = |d: Dart| -> Option<Dart> {
            emap[dart_edge(d)].map(|e| 2 * e + (d & 1))
        };
        let mut rot = Vec::with_capacity(self.n - 1);
        for (w, list) in self.rot.iter().enumerate() {
            if w == v {
                continue;
            }
            rot.push(list.iter().filter_map(|&d| remap_dart(d)).collect());
        }
        let outer = self.pick_surviving_outer(&remap_dart)?;
        let g = PlaneGraph::new(self.n - 1, edges, rot, outer)?;
        Ok(Surgery { graph: g, vmap, emap, new_vertices: vec![], new_edges: vec![] })
    }

    /// Delete a single edge, keeping both endpoints.
    pub fn delete_edge(&self, e: EdgeId) -> Result<Surgery> {
        let mut emap = vec![None; self.edges.len()];
        let mut edges = Vec::new();
        for (f, &pair) in self.edges.iter().enumerate() {
            if f != e {
                emap[f] = Some(edges.len());
                edges.push(pair);
            }
        }
        let remap_dart = |d: Dart| -> Option<Dart> {
            emap[dart_edge(d)].map(|x| 2 * x + (d & 1))
        };
        let rot = self
            .rot
            .iter()
            .map(|list| list.iter().filter_map(|&d| remap_dart(d)).collect())
            .collect();
        let outer = self.pick_surviving_outer(&remap_dart)?;
        let g = PlaneGraph::new(self.n, edges, rot, outer)?;
        let vmap = (0..self.n).map(Some).collect();
        Ok(Surgery { graph: g, vmap, emap, new_vertices: vec![], new_edges: vec![] })
    }

    fn pick_surviving_outer(
        &self,
        remap_dart: &dyn Fn(Dart) -> Option<Dart>,
    ) -> Result<Dart> {
        if let Some(d) = remap_dart(self.outer) {
            return Ok(d);
        }
        // The outer dart vanished: walk its old face for a survivor,
        // starting at the outer dart so the choice is stable under
        // relabeling, then widen to the walks of the other faces around
        // the removed feature.
        let walk = &self.faces[self.face_of[self.outer]].boundary;
        let pos = walk.iter().position(|&d| d == self.outer).unwrap();
        for k in 0..walk.len() {
            if let Some(nd) = remap_dart(walk[(pos + k) % walk.len()]) {
                return Ok(nd);
            }
        }
        // Neighboring faces in walk order: their darts merge into the new
        // outer region when the boundary between them vanishes.
        for k in 0..walk.len() {
            let t = twin(walk[(pos + k) % walk.len()]);
            let other = &self.faces[self.face_of[t]].boundary;
            let tp = other.iter().position(|&d| d == t).unwrap();
            for j in 0..other.len() {
                if let Some(nd) = remap_dart(other[(tp + j) % other.len()]) {
                    return Ok(nd);
                }
            }
        }
        for d in 0..2 * self.edges.len() {
            if let Some(nd) = remap_dart(d) {
                return Ok(nd);
            }
        }
        Err(Error::Embedding("no dart left to designate the outer face".into()))
    }

    /// Contract a non-loop edge, merging its head into its tail. The merged
    /// vertex keeps the tail's id slot (ids above the head shift down). No
    /// simplification is performed; parallel edges and loops may result.
    pub fn contract_edge(&self, e: EdgeId) -> Result<Surgery> {
        let (u, v) = self.edges[e];
        if u == v {
            return Err(Error::Unsupported("contracting a loop".into()));
        }
        let du = 2 * e;
        let dv = 2 * e + 1;
        // Splice v's rotation into u's at the contracted darts.
        let pu = self.dart_pos[du].1;
        let pv = self.dart_pos[dv].1;
        let ru = &self.rot[u];
        let rv = &self.rot[v];
        let mut merged = Vec::with_capacity(ru.len() + rv.len() - 2);
        for k in 1..ru.len() {
            merged.push(ru[(pu + k) % ru.len()]);
        }
        for k in 1..rv.len() {
            merged.push(rv[(pv + k) % rv.len()]);
        }
        let mut vmap = vec![None; self.n];
        for (w, slot) in vmap.iter_mut().enumerate() {
            let target = if w == v { u } else { w };
            *slot = Some(if target > v { target - 1 } else { target });
        }
        let mut emap = vec![None; self.edges.len()];
        let mut edges = Vec::new();
        for (f, &(a, b)) in self.edges.iter().enumerate() {
            if f == e {
                continue;
            }
            emap[f] = Some(edges.len());
            edges.push((vmap[a].unwrap(), vmap[b].unwrap()));
        }
        let remap_dart = |d: Dart| -> Option<Dart> {
            emap[dart_edge(d)].map(|x| 2 * x + (d & 1))
        };
        let mut rot: Vec<Vec<Dart>> = Vec::with_capacity(self.n - 1);
        for w in 0..self.n {
            if w == v {
                continue;
            }
            if w == u {
                rot.push(merged.iter().filter_map(|&d| remap_dart(d)).collect());
            } else {
                rot.push(self.rot[w].iter().filter_map(|&d| remap_dart(d)).collect());
            }
        }
        let outer = self.pick_surviving_outer(&remap_dart)?;
        let g = PlaneGraph::new(self.n - 1, edges, rot, outer)?;
        Ok(Surgery { graph: g, vmap, emap, new_vertices: vec![], new_edges: vec![] })
    }

    /// Remove empty lens faces (length-2 walks bounded by a parallel pair)
    /// by deleting one of the two edges, and delete loops bounding an empty
    /// face, until none remain. Returns the simplified graph with maps.
    pub fn simplify_empty_lenses(&self) -> Result<Surgery> {
        let mut g = self.clone();
        let mut vmap: Vec<Option<usize>> = (0..self.n).map(Some).collect();
        let mut emap: Vec<Option<usize>> = (0..self.edges.len()).map(Some).collect();
        loop {
            let mut removed = None;
            for f in g.faces() {
                if f.boundary.len() == 2 {
                    let a = f.boundary[0];
                    let b = f.boundary[1];
                    if dart_edge(a) != dart_edge(b) {
                        // Empty lens between two parallel edges: drop the
                        // larger edge id.
                        removed = Some(dart_edge(a).max(dart_edge(b)));
                        break;
                    }
                }
                if f.boundary.len() == 1 {
                    removed = Some(dart_edge(f.boundary[0]));
                    break;
                }
            }
            match removed {
                None => break,
                Some(e) => {
                    let s = g.delete_edge(e)?;
                    for slot in emap.iter_mut() {
                        *slot = slot.and_then(|old| s.emap[old]);
                    }
                    for slot in vmap.iter_mut() {
                        *slot = slot.and_then(|old| s.vmap[old]);
                    }
                    g = s.graph;
                }
            }
        }
        Ok(Surgery { graph: g, vmap, emap, new_vertices: vec![], new_edges: vec![] })
    }

    /// Contract a connected vertex set to a single vertex by contracting a
    /// spanning tree of it and deleting the leftover intra-set edges.
    pub fn collapse_set(&self, set: &[VertexId]) -> Result<Surgery> {
        let mut inset = vec![false; self.n];
        for &v in set {
            inset[v] = true;
        }
        let mut g = self.clone();
        let mut vmap: Vec<Option<usize>> = (0..self.n).map(Some).collect();
        let mut emap: Vec<Option<usize>> = (0..self.edges.len()).map(Some).collect();
        let mut inset_now = inset;
        loop {
            // Find an edge joining two distinct in-set vertices.
            let pick = (0..g.edge_count()).find(|&e| {
                let (a, b) = g.endpoints(e);
                a != b && inset_now[a] && inset_now[b]
            });
            match pick {
                Some(e) => {
                    let s = g.contract_edge(e)?;
                    let mut next_inset = vec![false; g.vertex_count() - 1];
                    for (w, alive) in s.vmap.iter().enumerate() {
                        if let Some(nw) = alive {
                            if inset_now[w] {
                                next_inset[*nw] = true;
                            }
                        }
                    }
                    for slot in emap.iter_mut() {
                        *slot = slot.and_then(|old| s.emap[old]);
                    }
                    for slot in vmap.iter_mut() {
                        *slot = slot.and_then(|old| s.vmap[old]);
                    }
                    inset_now = next_inset;
                    g = s.graph;
                }
                None => break,
            }
        }
        // Delete remaining loops at the merged vertex.
        loop {
            let lp = (0..g.edge_count()).find(|&e| {
                let (a, b) = g.endpoints(e);
                a == b && inset_now[a]
            });
            match lp {
                Some(e) => {
                    let s = g.delete_edge(e)?;
                    for slot in emap.iter_mut() {
                        *slot = slot.and_then(|old| s.emap[old]);
                    }
                    for slot in vmap.iter_mut() {
                        *slot = slot.and_then(|old| s.vmap[old]);
                    }
                    g = s.graph;
                }
                None => break,
            }
        }
        Ok(Surgery { graph: g, vmap, emap, new_vertices: vec![], new_edges: vec![] })
    }

    /// Induced plane subgraph on a vertex set (keeps the inherited rotation
    /// system). The set must induce a connected graph. Outer dart: the
    /// surviving dart on the face of the first deleted boundary position, or
    /// the original outer if it survives.
    pub fn induced(&self, set: &[VertexId]) -> Result<Surgery> {
        let mut keep = vec![false; self.n];
        for &v in set {
            keep[v] = true;
        }
        let mut vmap = vec![None; self.n];
        let mut next = 0usize;
        for (w, slot) in vmap.iter_mut().enumerate() {
            if keep[w] {
                *slot = Some(next);
                next += 1;
            }
        }
        let mut emap = vec![None; self.edges.len()];
        let mut edges = Vec::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if keep[a] && keep[b] {
                emap[e] = Some(edges.len());
                edges.push((vmap[a].unwrap(), vmap[b].unwrap()));
            }
        }
        let remap_dart = |d: Dart| -> Option<Dart> {
            emap[dart_edge(d)].map(|x| 2 * x + (d & 1))
        };
        let mut rot = Vec::with_capacity(next);
        for (w, list) in self.rot.iter().enumerate() {
            if keep[w] {
                rot.push(list.iter().filter_map(|&d| remap_dart(d)).collect());
            }
        }
        let outer = self.pick_surviving_outer(&remap_dart)?;
        let g = PlaneGraph::new(next, edges, rot, outer)?;
        Ok(Surgery { graph: g, vmap, emap, new_vertices: vec![], new_edges: vec![] })
    }

    /// Rebuild with explicit parts (rotation surgery helper for the move
    /// engine). Validates everything.
    pub fn rebuilt(
        n: usize,
        edges: Vec<(VertexId, VertexId)>,
        rot: Vec<Vec<Dart>>,
        outer: Dart,
    ) -> Result<PlaneGraph> {
        PlaneGraph::new(n, edges, rot, outer)
    }
}

fn insert_after(list: &mut Vec<Dart>, anchor: Dart, new: Dart) {
    let i = list.iter().position(|&d| d == anchor).expect("anchor dart in rotation");
    list.insert(i + 1, new);
}

// ----------------------------------------------------------------------
// Canonical codes for embedding isomorphism.
// ----------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Anchor {
    /// Minimize over starting darts on the outer face only (isomorphism must
    /// map outer face to outer face).
    OuterFace,
    /// Minimize over all starting darts (sphere isomorphism).
    Any,
}

/// Canonical code of the rotation system, minimized over the allowed starts
/// and over both chiralities (reflection).
pub fn canonical_code(g: &PlaneGraph, anchor: Anchor) -> Vec<i64> {
    if g.edge_count() == 0 {
        return vec![g.vertex_count() as i64];
    }
    let starts: Vec<Dart> = match anchor {
        Anchor::OuterFace => g.outer_face().boundary.clone(),
        Anchor::Any => (0..2 * g.edge_count()).collect(),
    };
    let mut best: Option<Vec<i64>> = None;
    for &s in &starts {
        for reflected in [false, true] {
            let code = code_from(g, s, reflected);
            if best.as_ref().map_or(true, |b| code < *b) {
                best = Some(code);
            }
        }
    }
    best.unwrap()
}

fn code_from(g: &PlaneGraph, start: Dart, reflected: bool) -> Vec<i64> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut vlabel = vec![usize::MAX; n];
    let mut elabel = vec![usize::MAX; m];
    let mut entry = vec![usize::MAX; n];
    let mut vorder: Vec<VertexId> = Vec::with_capacity(n);
    let mut next_v = 0;
    let mut next_e = 0;
    let root = g.tail(start);
    vlabel[root] = next_v;
    next_v += 1;
    vorder.push(root);
    entry[root] = start;
    let mut code = Vec::with_capacity(4 * m);
    let mut qi = 0;
    while qi < vorder.len() {
        let v = vorder[qi];
        qi += 1;
        let list = &g.rot[v];
        let len = list.len();
        let epos = list.iter().position(|&d| d == entry[v]).unwrap();
        code.push(-(len as i64) - 1);
        for k in 0..len {
            let idx = if reflected {
                (epos + len - k) % len
            } else {
                (epos + k) % len
            };
            let d = list[idx];
            let e = dart_edge(d);
            if elabel[e] == usize::MAX {
                elabel[e] = next_e;
                next_e += 1;
            }
            let h = g.head(d);
            if vlabel[h] == usize::MAX {
                vlabel[h] = next_v;
                next_v += 1;
                vorder.push(h);
                entry[h] = twin(d);
            }
            code.push(elabel[e] as i64);
            code.push(vlabel[h] as i64);
        }
    }
    code.push(-1000);
    code.push(n as i64);
    code
}

/// Embedding isomorphism (up to reflection), requiring the outer faces to
/// correspond.
pub fn embedding_isomorphic(a: &PlaneGraph, b: &PlaneGraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    canonical_code(a, Anchor::OuterFace) == canonical_code(b, Anchor::OuterFace)
}

/// Sphere isomorphism (outer face free to move), up to reflection.
pub fn sphere_isomorphic(a: &PlaneGraph, b: &PlaneGraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    canonical_code(a, Anchor::Any) == canonical_code(b, Anchor::Any)
}

/// Explicit isomorphism between plane graphs: vertex map, edge map, and a
/// per-edge flag telling whether the stored endpoint order flips.
#[derive(Debug, Clone)]
pub struct EmbeddingIso {
    pub vmap: Vec<VertexId>,
    pub emap: Vec<EdgeId>,
    pub flip: Vec<bool>,
}

impl EmbeddingIso {
    pub fn dart(&self, d: Dart) -> Dart {
        let e = dart_edge(d);
        2 * self.emap[e] + ((d & 1) ^ usize::from(self.flip[e]))
    }
}

/// Orientation-preserving embedding isomorphism from `a` to `b` mapping
/// `a`'s outer face onto `b`'s, when one exists. Found by joint traversal
/// anchored at `a`'s outer dart against every dart of `b`'s outer walk.
pub fn find_embedding_iso(a: &PlaneGraph, b: &PlaneGraph) -> Option<EmbeddingIso> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    if a.edge_count() == 0 {
        return Some(EmbeddingIso { vmap: vec![0], emap: vec![], flip: vec![] });
    }
    let da = a.outer_dart();
    for &db in &b.outer_face().boundary.clone() {
        if let Some(iso) = try_iso(a, b, da, db) {
            return Some(iso);
        }
    }
    None
}

fn try_iso(a: &PlaneGraph, b: &PlaneGraph, da: Dart, db: Dart) -> Option<EmbeddingIso> {
    let n = a.vertex_count();
    let m = a.edge_count();
    let unset = usize::MAX;
    let mut vmap = vec![unset; n];
    let mut emap = vec![unset; m];
    let mut flip = vec![false; m];
    let mut vused = vec![false; n];
    let mut eused = vec![false; m];
    // queue of paired entry darts
    let mut queue = std::collections::VecDeque::new();
    let (ra, rb) = (a.tail(da), b.tail(db));
    if a.degree(ra) != b.degree(rb) {
        return None;
    }
    vmap[ra] = rb;
    vused[rb] = true;
    queue.push_back((da, db));
    let mut visited_v = vec![false; n];
    visited_v[ra] = true;
    while let Some((ea, eb)) = queue.pop_front() {
        let va = a.tail(ea);
        let vb = b.tail(eb);
        let la = a.rotation(va);
        let lb = b.rotation(vb);
        if la.len() != lb.len() {
            return None;
        }
        let pa = la.iter().position(|&d| d == ea).unwrap();
        let pb = lb.iter().position(|&d| d == eb).unwrap();
        for k in 0..la.len() {
            let dxa = la[(pa + k) % la.len()];
            let dxb = lb[(pb + k) % lb.len()];
            let (eea, eeb) = (dart_edge(dxa), dart_edge(dxb));
            let fl = ((dxa & 1) ^ (dxb & 1)) == 1;
            if emap[eea] != unset {
                if emap[eea] != eeb || flip[eea] != fl {
                    return None;
                }
            } else {
                if eused[eeb] {
                    return None;
                }
                emap[eea] = eeb;
                eused[eeb] = true;
                flip[eea] = fl;
            }
            let ha = a.head(dxa);
            let hb = b.head(dxb);
            if vmap[ha] != unset {
                if vmap[ha] != hb {
                    return None;
                }
            } else {
                if vused[hb] {
                    return None;
                }
                vmap[ha] = hb;
                vused[hb] = true;
            }
            if !visited_v[ha] {
                visited_v[ha] = true;
                queue.push_back((twin(dxa), twin(dxb)));
            }
        }
    }
    if vmap.iter().any(|&v| v == unset) || emap.iter().any(|&e| e == unset) {
        return None;
    }
    Some(EmbeddingIso { vmap, emap, flip })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn triangle_has_two_faces() {
        let g = fixtures::triangle();
        assert_eq!(g.faces().len(), 2);
        assert_eq!(g.outer_face().len(), 3);
    }

    #[test]
    fn k4_has_four_faces() {
        let g = fixtures::k4();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.faces().len(), 4);
        for f in g.faces() {
            assert_eq!(f.len(), 3);
        }
    }

    #[test]
    fn corrupted_k4_rotation_fails_euler() {
        let g = fixtures::k4();
        let mut rot: Vec<Vec<Dart>> = (0..4).map(|v| g.rotation(v).to_vec()).collect();
        rot[0].swap(0, 1);
        let r = PlaneGraph::new(4, g.edges().to_vec(), rot, g.outer_dart());
        assert!(matches!(r, Err(Error::Embedding(_))));
    }

    #[test]
    fn single_vertex_one_face() {
        let g = PlaneGraph::new(1, vec![], vec![vec![]], 0).unwrap();
        assert_eq!(g.faces().len(), 1);
        assert!(g.faces()[0].is_outer);
    }

    #[test]
    fn c5_two_faces_of_length_5() {
        let g = fixtures::cycle(5);
        assert_eq!(g.faces().len(), 2);
        assert!(g.faces().iter().all(|f| f.len() == 5));
    }

    #[test]
    fn three_parallel_edges_three_lens_faces() {
        let g = fixtures::parallel_edges(3);
        assert_eq!(g.faces().len(), 3);
        assert!(g.faces().iter().all(|f| f.len() == 2));
    }

    #[test]
    fn face_lengths_sum_to_twice_edges() {
        for g in [fixtures::k4(), fixtures::cube(), fixtures::octahedron(), fixtures::cycle(7)] {
            let total: usize = g.faces().iter().map(|f| f.len()).sum();
            assert_eq!(total, 2 * g.edge_count());
        }
    }

    #[test]
    fn cube_dual_is_octahedron() {
        let g = fixtures::cube();
        let d = g.dual().unwrap();
        assert_eq!(d.vertex_count(), 6);
        assert_eq!(d.edge_count(), 12);
        assert!((0..6).all(|v| d.degree(v) == 4));
        assert!(sphere_isomorphic(&d, &fixtures::octahedron()));
    }

    #[test]
    fn triangle_dual_is_three_parallel_edges() {
        let d = fixtures::triangle().dual().unwrap();
        assert_eq!(d.vertex_count(), 2);
        assert_eq!(d.edge_count(), 3);
        assert_eq!(d.multiplicity(0, 1), 3);
    }

    #[test]
    fn dual_of_dual_restores_counts() {
        for g in [fixtures::k4(), fixtures::cube(), fixtures::octahedron(), fixtures::triangle()] {
            let dd = g.dual().unwrap().dual().unwrap();
            assert_eq!(dd.vertex_count(), g.vertex_count());
            assert_eq!(dd.edge_count(), g.edge_count());
            assert_eq!(dd.faces().len(), g.faces().len());
        }
    }

    #[test]
    fn chord_in_square_gives_two_triangles() {
        let g = fixtures::cycle(4);
        let inner = g.faces().iter().find(|f| !f.is_outer).unwrap().id;
        let s = g.insert_chord(inner, 0, 2).unwrap();
        assert_eq!(s.graph.edge_count(), 5);
        assert_eq!(s.graph.faces().len(), 3);
    }

    #[test]
    fn insert_and_delete_vertex_roundtrip() {
        let g = fixtures::triangle();
        let inner = g.faces().iter().find(|f| !f.is_outer).unwrap().id;
        let s = g.insert_vertex2(inner, 0, 1).unwrap();
        assert_eq!(s.graph.vertex_count(), 4);
        assert_eq!(s.graph.degree(3), 2);
        let back = s.graph.delete_vertex(3).unwrap();
        assert!(embedding_isomorphic(&back.graph, &g));
    }

    #[test]
    fn contract_k4_edge_then_simplify_gives_triangle() {
        let g = fixtures::k4();
        let c = g.contract_edge(0).unwrap();
        let s = c.graph.simplify_empty_lenses().unwrap();
        assert_eq!(s.graph.vertex_count(), 3);
        assert_eq!(s.graph.edge_count(), 3);
        assert!(sphere_isomorphic(&s.graph, &fixtures::triangle()));
    }

    #[test]
    fn canonical_code_detects_reflection() {
        let g = fixtures::k4();
        let mut rot: Vec<Vec<Dart>> = (0..4).map(|v| {
            let mut r = g.rotation(v).to_vec();
            r.reverse();
            r
        }).collect();
        // reversing every rotation is the mirror image
        let mirrored = PlaneGraph::new(4, g.edges().to_vec(), std::mem::take(&mut rot), g.outer_dart()).unwrap();
        assert!(sphere_isomorphic(&g, &mirrored));
    }
}
