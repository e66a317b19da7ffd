//! The three graph families: theta (bridge) graphs, spiders and one-point
//! unions of cycles, plus the vertex-merging transformation.
//!
//! Every graph here is simple, connected and undirected. Edges are stored in a
//! fixed canonical order (structural part by part, position by position) and
//! each edge is oriented along its part's traversal: `u -> v` for theta paths,
//! `core -> pendant` for spider legs, and around the cycle starting and ending
//! at the core for cycle unions. Edge ids index into this canonical order, so
//! a labeling is simply a vector parallel to it.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("need at least {need} {what}, got {got}")]
    TooFewParts {
        what: &'static str,
        need: usize,
        got: usize,
    },
    #[error("{what} must be positive")]
    ZeroLength { what: &'static str },
    #[error("at most one path of length 1 is allowed, found {0}")]
    TooManyUnitPaths(usize),
    #[error("cycle lengths must be at least 3, got {0}")]
    CycleTooShort(usize),
    #[error("merge would create a loop or a parallel edge")]
    SimplicityViolation,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("merge groups must be disjoint")]
    OverlappingGroups,
    #[error("distance {d} is invalid for a cycle of length {n}")]
    BadDistance { d: usize, n: usize },
}

/// Ordered path lengths of a theta graph `theta(a_1, ..., a_s)`.
///
/// Order is significant: the constructive labelings assign specific label
/// sequences to specific paths, and serialization lists paths in this order.
/// Use [`ThetaSpec::sorted`] when a canonical multiset form is wanted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaSpec {
    lengths: Vec<usize>,
}

impl ThetaSpec {
    /// Validates `s >= 2`, all lengths positive, and at most one length 1
    /// (two unit paths would form a parallel edge).
    pub fn new(lengths: Vec<usize>) -> Result<Self, GraphError> {
        if lengths.len() < 2 {
            return Err(GraphError::TooFewParts {
                what: "paths",
                need: 2,
                got: lengths.len(),
            });
        }
        if lengths.iter().any(|&a| a == 0) {
            return Err(GraphError::ZeroLength {
                what: "path lengths",
            });
        }
        let units = lengths.iter().filter(|&&a| a == 1).count();
        if units > 1 {
            return Err(GraphError::TooManyUnitPaths(units));
        }
        Ok(ThetaSpec { lengths })
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Number of `(u, v)`-paths, written `s`.
    pub fn num_paths(&self) -> usize {
        self.lengths.len()
    }

    /// Number of edges, written `q`.
    pub fn size(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// The same multiset of lengths in non-decreasing order.
    pub fn sorted(&self) -> ThetaSpec {
        let mut lengths = self.lengths.clone();
        lengths.sort_unstable();
        ThetaSpec { lengths }
    }
}

impl fmt::Display for ThetaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "theta(")?;
        for (i, a) in self.lengths.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Ordered leg lengths of a spider `Sp(a_1, ..., a_s)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpiderSpec {
    legs: Vec<usize>,
}

impl SpiderSpec {
    pub fn new(legs: Vec<usize>) -> Result<Self, GraphError> {
        if legs.len() < 2 {
            return Err(GraphError::TooFewParts {
                what: "legs",
                need: 2,
                got: legs.len(),
            });
        }
        if legs.iter().any(|&a| a == 0) {
            return Err(GraphError::ZeroLength {
                what: "leg lengths",
            });
        }
        Ok(SpiderSpec { legs })
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn num_legs(&self) -> usize {
        self.legs.len()
    }

    pub fn size(&self) -> usize {
        self.legs.iter().sum()
    }
}

impl fmt::Display for SpiderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "spider(")?;
        for (i, a) in self.legs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Ordered cycle lengths of a one-point union `C(n_1, ..., n_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleUnionSpec {
    cycles: Vec<usize>,
}

impl CycleUnionSpec {
    pub fn new(cycles: Vec<usize>) -> Result<Self, GraphError> {
        if cycles.len() < 2 {
            return Err(GraphError::TooFewParts {
                what: "cycles",
                need: 2,
                got: cycles.len(),
            });
        }
        if let Some(&n) = cycles.iter().find(|&&n| n < 3) {
            return Err(GraphError::CycleTooShort(n));
        }
        Ok(CycleUnionSpec { cycles })
    }

    pub fn cycles(&self) -> &[usize] {
        &self.cycles
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles.len()
    }

    pub fn size(&self) -> usize {
        self.cycles.iter().sum()
    }
}

impl fmt::Display for CycleUnionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cycles(")?;
        for (i, n) in self.cycles.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexRole {
    EndpointU,
    EndpointV,
    Core,
    Internal,
    Pendant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphKind {
    Theta(ThetaSpec),
    Spider(SpiderSpec),
    CycleUnion(CycleUnionSpec),
    Generic,
}

/// A simple connected graph with canonical edge order and per-edge structure
/// metadata (which structural part an edge belongs to, at which position).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    kind: GraphKind,
    roles: Vec<VertexRole>,
    /// Edge endpoints oriented along the part traversal, canonical order.
    ends: Vec<(VertexId, VertexId)>,
    /// Part `i` owns edges `part_offsets[i]..part_offsets[i+1]`.
    part_offsets: Vec<usize>,
}

impl Graph {
    pub fn kind(&self) -> &GraphKind {
        &self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.roles.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn role(&self, v: VertexId) -> VertexRole {
        self.roles[v]
    }

    /// Endpoints of edge `e`, oriented along its part's traversal.
    pub fn ends(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.ends[e]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.ends
    }

    pub fn part_count(&self) -> usize {
        self.part_offsets.len() - 1
    }

    /// Edge ids of structural part `i`, in traversal order.
    pub fn part_edges(&self, i: usize) -> std::ops::Range<EdgeId> {
        self.part_offsets[i]..self.part_offsets[i + 1]
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.vertex_count()];
        for &(a, b) in &self.ends {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Incident edge ids per vertex, ordered by edge id.
    pub fn incidence(&self) -> Vec<Vec<EdgeId>> {
        let mut inc = vec![Vec::new(); self.vertex_count()];
        for (e, &(a, b)) in self.ends.iter().enumerate() {
            inc[a].push(e);
            inc[b].push(e);
        }
        inc
    }

    /// Neighbor lists, ordered by edge id.
    pub fn adjacency(&self) -> Vec<Vec<VertexId>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &(a, b) in &self.ends {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Two-coloring of the vertices if the graph is bipartite, as the pair of
    /// classes (the class of vertex 0 first, both sorted). `None` if an odd
    /// cycle exists.
    pub fn bipartition(&self) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
        let adj = self.adjacency();
        let mut side = vec![u8::MAX; self.vertex_count()];
        let mut queue = std::collections::VecDeque::new();
        side[0] = 0;
        queue.push_back(0);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
        let zero = (0..self.vertex_count()).filter(|&v| side[v] == 0).collect();
        let one = (0..self.vertex_count()).filter(|&v| side[v] == 1).collect();
        Some((zero, one))
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count() == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count()
    }

    /// Assembles a graph from raw parts. Used by the format parser for the
    /// generic fallback; validates simplicity and connectivity.
    pub(crate) fn from_raw(
        kind: GraphKind,
        roles: Vec<VertexRole>,
        ends: Vec<(VertexId, VertexId)>,
        part_offsets: Vec<usize>,
    ) -> Result<Graph, GraphError> {
        let n = roles.len();
        let mut seen = BTreeSet::new();
        for &(a, b) in &ends {
            if a >= n {
                return Err(GraphError::VertexOutOfRange(a));
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange(b));
            }
            if a == b || !seen.insert((a.min(b), a.max(b))) {
                return Err(GraphError::SimplicityViolation);
            }
        }
        let g = Graph {
            kind,
            roles,
            ends,
            part_offsets,
        };
        if !g.is_connected() {
            return Err(GraphError::SimplicityViolation);
        }
        Ok(g)
    }
}

/// Builds `theta(a_1, ..., a_s)`: vertices `u = 0` and `v = 1` joined by `s`
/// internally disjoint paths. Path `j`'s edges run `u -> v`; internal vertex
/// ids are assigned path-major, position-minor.
pub fn build_theta(spec: &ThetaSpec) -> Graph {
    let q = spec.size();
    let s = spec.num_paths();
    let n = q - s + 2;
    let mut roles = vec![VertexRole::Internal; n];
    roles[0] = VertexRole::EndpointU;
    roles[1] = VertexRole::EndpointV;
    let mut ends = Vec::with_capacity(q);
    let mut part_offsets = Vec::with_capacity(s + 1);
    part_offsets.push(0);
    let mut next = 2;
    for &len in spec.lengths() {
        let mut prev = 0;
        for pos in 0..len {
            let here = if pos + 1 == len {
                1
            } else {
                next += 1;
                next - 1
            };
            ends.push((prev, here));
            prev = here;
        }
        part_offsets.push(ends.len());
    }
    debug_assert_eq!(next, n);
    Graph {
        kind: GraphKind::Theta(spec.clone()),
        roles,
        ends,
        part_offsets,
    }
}

/// Builds `Sp(a_1, ..., a_s)`: a tree of `s` paths sharing the core vertex
/// `0`. Leg `i`'s edges run core -> pendant.
pub fn build_spider(spec: &SpiderSpec) -> Graph {
    let q = spec.size();
    let n = q + 1;
    let mut roles = vec![VertexRole::Internal; n];
    roles[0] = VertexRole::Core;
    let mut ends = Vec::with_capacity(q);
    let mut part_offsets = vec![0];
    let mut next = 1;
    for &len in spec.legs() {
        let mut prev = 0;
        for _ in 0..len {
            ends.push((prev, next));
            prev = next;
            next += 1;
        }
        roles[prev] = VertexRole::Pendant;
        part_offsets.push(ends.len());
    }
    Graph {
        kind: GraphKind::Spider(spec.clone()),
        roles,
        ends,
        part_offsets,
    }
}

/// Builds `C(n_1, ..., n_r)`: `r` cycles sharing the core vertex `0` of
/// degree `2r`. Cycle `i`'s edges are listed around the cycle, the first and
/// last incident to the core.
pub fn build_cycle_union(spec: &CycleUnionSpec) -> Graph {
    let q = spec.size();
    let n = q - spec.num_cycles() + 1;
    let mut roles = vec![VertexRole::Internal; n];
    roles[0] = VertexRole::Core;
    let mut ends = Vec::with_capacity(q);
    let mut part_offsets = vec![0];
    let mut next = 1;
    for &len in spec.cycles() {
        let mut prev = 0;
        for pos in 0..len {
            let here = if pos + 1 == len {
                0
            } else {
                next += 1;
                next - 1
            };
            ends.push((prev, here));
            prev = here;
        }
        part_offsets.push(ends.len());
    }
    Graph {
        kind: GraphKind::CycleUnion(spec.clone()),
        roles,
        ends,
        part_offsets,
    }
}

/// Identifies each group of vertices into a single vertex, keeping every edge.
///
/// New vertex ids are dense, assigned by first appearance when scanning old
/// ids in increasing order (a group takes the slot of its smallest member).
/// Returns the quotient graph together with the old-vertex -> new-vertex map.
/// Fails with [`GraphError::SimplicityViolation`] if an edge would become a
/// loop or two edges would collapse onto the same vertex pair.
pub fn merge_vertices(
    g: &Graph,
    groups: &[Vec<VertexId>],
) -> Result<(Graph, Vec<VertexId>), GraphError> {
    let n = g.vertex_count();
    let mut group_of = vec![usize::MAX; n];
    for (gi, group) in groups.iter().enumerate() {
        for &v in group {
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v));
            }
            if group_of[v] != usize::MAX {
                return Err(GraphError::OverlappingGroups);
            }
            group_of[v] = gi;
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if map[v] != usize::MAX {
            continue;
        }
        if group_of[v] != usize::MAX {
            for &u in &groups[group_of[v]] {
                map[u] = next;
            }
        } else {
            map[v] = next;
        }
        next += 1;
    }

    let mut seen = BTreeSet::new();
    let mut ends = Vec::with_capacity(g.edge_count());
    for &(a, b) in g.edges() {
        let (x, y) = (map[a], map[b]);
        if x == y || !seen.insert((x.min(y), x.max(y))) {
            return Err(GraphError::SimplicityViolation);
        }
        ends.push((x, y));
    }

    // The smallest old id mapping to a slot decides its role.
    let mut roles = vec![VertexRole::Internal; next];
    for v in (0..n).rev() {
        roles[map[v]] = g.roles[v];
    }

    let merged = Graph {
        kind: GraphKind::Generic,
        roles,
        ends,
        part_offsets: g.part_offsets.clone(),
    };
    Ok((merged, map))
}

/// Path-length spec of the theta graph obtained from `C(n_1, ..., n_r)` by
/// merging, for each cycle `i`, the vertex at distance `d_i` from the core in
/// the direction of the cycle's first edge. Lengths are listed in
/// construction order: `d_1, n_1 - d_1, d_2, n_2 - d_2, ...`.
pub fn theta_of_merged_cycles(
    spec: &CycleUnionSpec,
    distances: &[usize],
) -> Result<ThetaSpec, GraphError> {
    if distances.len() != spec.num_cycles() {
        return Err(GraphError::TooFewParts {
            what: "distances",
            need: spec.num_cycles(),
            got: distances.len(),
        });
    }
    let mut lengths = Vec::with_capacity(2 * spec.num_cycles());
    for (&d, &n) in distances.iter().zip(spec.cycles()) {
        if d == 0 || d >= n {
            return Err(GraphError::BadDistance { d, n });
        }
        lengths.push(d);
        lengths.push(n - d);
    }
    ThetaSpec::new(lengths).map_err(|e| match e {
        GraphError::TooManyUnitPaths(_) => GraphError::SimplicityViolation,
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta(lengths: &[usize]) -> Graph {
        build_theta(&ThetaSpec::new(lengths.to_vec()).unwrap())
    }

    #[test]
    fn smallest_theta_is_a_triangle() {
        let g = theta(&[1, 2]);
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        let mut deg = g.degrees();
        deg.sort_unstable();
        assert_eq!(deg, vec![2, 2, 2]);
    }

    #[test]
    fn theta_222_is_k23() {
        let g = theta(&[2, 2, 2]);
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 6);
        let deg = g.degrees();
        assert_eq!(deg[0], 3);
        assert_eq!(deg[1], 3);
        assert!(deg[2..].iter().all(|&d| d == 2));
    }

    #[test]
    fn theta_2222_4_counts() {
        // Four 2-paths and one 4-path: q = 12 edges and q - s + 2 = 9
        // vertices, with both endpoints of degree s = 5.
        let g = theta(&[2, 2, 2, 2, 4]);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.vertex_count(), 9);
        let deg = g.degrees();
        assert_eq!(deg[0], 5);
        assert_eq!(deg[1], 5);
        assert!(deg[2..].iter().all(|&d| d == 2));
    }

    #[test]
    fn theta_degree_sequence_invariant() {
        for lengths in [vec![3, 5, 7], vec![1, 4, 4, 6], vec![2, 2, 2, 2, 2]] {
            let spec = ThetaSpec::new(lengths).unwrap();
            let g = build_theta(&spec);
            assert_eq!(g.edge_count(), spec.size());
            let mut deg = g.degrees();
            deg.sort_unstable();
            let s = spec.num_paths();
            let q = spec.size();
            let mut expect = vec![2usize; q - s];
            expect.extend([s, s]);
            expect.sort_unstable();
            assert_eq!(deg, expect);
        }
    }

    #[test]
    fn theta_spec_rejections() {
        assert_eq!(
            ThetaSpec::new(vec![3]),
            Err(GraphError::TooFewParts {
                what: "paths",
                need: 2,
                got: 1
            })
        );
        assert!(matches!(
            ThetaSpec::new(vec![1, 1, 2]),
            Err(GraphError::TooManyUnitPaths(2))
        ));
        assert!(matches!(
            ThetaSpec::new(vec![0, 2]),
            Err(GraphError::ZeroLength { .. })
        ));
    }

    #[test]
    fn spider_shapes() {
        let p2 = build_spider(&SpiderSpec::new(vec![1, 1]).unwrap());
        assert_eq!(p2.vertex_count(), 3);
        assert_eq!(p2.edge_count(), 2);

        let g = build_spider(&SpiderSpec::new(vec![2, 2, 2]).unwrap());
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.degrees()[0], 3);
        assert_eq!(
            (0..g.vertex_count())
                .filter(|&v| g.role(v) == VertexRole::Pendant)
                .count(),
            3
        );

        let g = build_spider(&SpiderSpec::new(vec![2, 2, 4, 6]).unwrap());
        assert_eq!(g.vertex_count(), 15);
        assert_eq!(g.edge_count(), 14);
    }

    #[test]
    fn cycle_union_shapes() {
        let bowtie = build_cycle_union(&CycleUnionSpec::new(vec![3, 3]).unwrap());
        assert_eq!(bowtie.vertex_count(), 5);
        assert_eq!(bowtie.edge_count(), 6);
        assert_eq!(bowtie.degrees()[0], 4);

        let g = build_cycle_union(&CycleUnionSpec::new(vec![10, 10, 4]).unwrap());
        assert_eq!(g.vertex_count(), 22);
        assert_eq!(g.edge_count(), 24);
        assert_eq!(g.degrees()[0], 6);

        // |V| = sum(n_i - 1) + 1 = 9 + 9 + 7 + 7 + 7 + 1.
        let g = build_cycle_union(&CycleUnionSpec::new(vec![10, 10, 8, 8, 8]).unwrap());
        assert_eq!(g.vertex_count(), 40);
        assert_eq!(g.edge_count(), 44);

        assert!(matches!(
            CycleUnionSpec::new(vec![3, 2]),
            Err(GraphError::CycleTooShort(2))
        ));
    }

    #[test]
    fn merge_preserves_edges_and_degree_total() {
        let g = build_cycle_union(&CycleUnionSpec::new(vec![4, 4]).unwrap());
        // Cycle 1 internal vertices are 1,2,3 at distances 1,2,3 from the
        // core; cycle 2's are 4,5,6.
        let (m, map) = merge_vertices(&g, &[vec![2, 5]]).unwrap();
        assert_eq!(m.edge_count(), g.edge_count());
        assert_eq!(map[2], map[5]);
        assert_eq!(
            m.degrees().iter().sum::<usize>(),
            g.degrees().iter().sum::<usize>()
        );
        assert_eq!(m.vertex_count(), g.vertex_count() - 1);
    }

    #[test]
    fn merge_c44_gives_theta_2222_and_1223() {
        let even = petgraph_of(&{
            let g = build_cycle_union(&CycleUnionSpec::new(vec![4, 4]).unwrap());
            merge_vertices(&g, &[vec![2, 5]]).unwrap().0
        });
        let t2222 = petgraph_of(&theta(&[2, 2, 2, 2]));
        assert!(petgraph::algo::is_isomorphic(&even, &t2222));

        let odd = petgraph_of(&{
            let g = build_cycle_union(&CycleUnionSpec::new(vec![4, 4]).unwrap());
            merge_vertices(&g, &[vec![1, 5]]).unwrap().0
        });
        let t1223 = petgraph_of(&theta(&[1, 2, 2, 3]));
        assert!(petgraph::algo::is_isomorphic(&odd, &t1223));
    }

    #[test]
    fn merge_singleton_group_is_identity() {
        let g = theta(&[2, 3]);
        let (m, map) = merge_vertices(&g, &[vec![1]]).unwrap();
        assert_eq!(map, (0..g.vertex_count()).collect::<Vec<_>>());
        assert_eq!(m.edges(), g.edges());
    }

    #[test]
    fn merge_rejects_loops_and_parallel_edges() {
        let g = theta(&[2, 2]);
        // Merging the two endpoints of an edge forms a loop.
        assert_eq!(
            merge_vertices(&g, &[vec![0, 2]]),
            Err(GraphError::SimplicityViolation)
        );
        // Merging the two interior vertices of a 4-cycle forms a parallel edge.
        assert_eq!(
            merge_vertices(&g, &[vec![2, 3]]),
            Err(GraphError::SimplicityViolation)
        );
    }

    #[test]
    fn theta_of_merged_cycles_examples() {
        let c = CycleUnionSpec::new(vec![10, 10, 4]).unwrap();
        let spec = theta_of_merged_cycles(&c, &[3, 5, 1]).unwrap();
        assert_eq!(spec.sorted().lengths(), &[1, 3, 3, 5, 5, 7]);
        let spec = theta_of_merged_cycles(&c, &[5, 5, 2]).unwrap();
        assert_eq!(spec.sorted().lengths(), &[2, 2, 5, 5, 5, 5]);

        let c44 = CycleUnionSpec::new(vec![4, 4]).unwrap();
        let spec = theta_of_merged_cycles(&c44, &[2, 2]).unwrap();
        assert_eq!(spec.lengths(), &[2, 2, 2, 2]);

        // Two unit-length paths would collapse into a parallel edge.
        assert_eq!(
            theta_of_merged_cycles(&c44, &[1, 1]),
            Err(GraphError::SimplicityViolation)
        );
        assert_eq!(
            theta_of_merged_cycles(&c44, &[0, 2]),
            Err(GraphError::BadDistance { d: 0, n: 4 })
        );
    }

    #[test]
    fn permuting_theta_lengths_gives_isomorphic_graphs() {
        let cases: [(&[usize], &[usize]); 3] = [
            (&[2, 3, 5], &[5, 2, 3]),
            (&[1, 2, 3, 4], &[4, 3, 2, 1]),
            (&[2, 2, 4], &[4, 2, 2]),
        ];
        for (a, b) in cases {
            let ga = petgraph_of(&theta(a));
            let gb = petgraph_of(&theta(b));
            assert!(petgraph::algo::is_isomorphic(&ga, &gb), "{a:?} vs {b:?}");
        }
    }

    fn petgraph_of(g: &Graph) -> petgraph::graph::UnGraph<(), ()> {
        let mut pg = petgraph::graph::UnGraph::new_undirected();
        let nodes: Vec<_> = (0..g.vertex_count()).map(|_| pg.add_node(())).collect();
        for &(a, b) in g.edges() {
            pg.add_edge(nodes[a], nodes[b], ());
        }
        pg
    }

    #[test]
    fn bipartition_and_connectivity() {
        let g = theta(&[2, 2, 2]);
        let (x, y) = g.bipartition().unwrap();
        assert_eq!(x.len() + y.len(), 5);
        assert!(g.is_connected());
        // Mixed parity path lengths create an odd cycle.
        assert!(theta(&[1, 2, 3]).bipartition().is_none());
    }
}
