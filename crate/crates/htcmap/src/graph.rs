//! Multigraphs with oriented edges, signed-edge path algebra with
//! cancellation, spanning trees, and fundamental cycle bases.
//!
//! Graphs are finite, connected, and loop-free; parallel edges are allowed.
//! Vertices and edges are 1-indexed everywhere in the public API.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// 1-based vertex index.
pub type VertexId = usize;
/// 1-based edge index.
pub type EdgeId = usize;

/// Signed occurrence counts per edge: entry `k-1` is the number of times
/// edge `k` appears positively in a path minus the number of times it
/// appears negatively.
pub type ChainVector = Vec<i64>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge E{edge} is a loop at vertex {vertex}")]
    LoopEdge { edge: EdgeId, vertex: VertexId },
    #[error("graph is not connected")]
    Disconnected,
    #[error("duplicate edge id {id}")]
    DuplicateEdgeId { id: EdgeId },
    #[error("edge ids must cover 1..={expected}, found {id}")]
    EdgeIdOutOfRange { id: EdgeId, expected: usize },
    #[error("edge E{edge} uses vertex {vertex}, but the graph has {count} vertices")]
    VertexOutOfRange {
        edge: EdgeId,
        vertex: VertexId,
        count: usize,
    },
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("path step {index} does not start where the previous step ends")]
    IncompatiblePath { index: usize },
    #[error("edge set is not a spanning tree")]
    NotASpanningTree,
}

/// An edge together with a direction of traversal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedEdge {
    pub edge: EdgeId,
    pub positive: bool,
}

impl SignedEdge {
    pub fn pos(edge: EdgeId) -> Self {
        SignedEdge {
            edge,
            positive: true,
        }
    }

    pub fn neg(edge: EdgeId) -> Self {
        SignedEdge {
            edge,
            positive: false,
        }
    }

    pub fn inverse(self) -> Self {
        SignedEdge {
            edge: self.edge,
            positive: !self.positive,
        }
    }
}

impl std::ops::Neg for SignedEdge {
    type Output = SignedEdge;
    fn neg(self) -> SignedEdge {
        self.inverse()
    }
}

impl fmt::Display for SignedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "E{}", self.edge)
        } else {
            write!(f, "-E{}", self.edge)
        }
    }
}

impl fmt::Debug for SignedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A sequence of signed edges. The `reduced` flag marks paths known to
/// contain no adjacent cancelling pair; it is conservative (a path without
/// the flag may still happen to be in reduced form).
#[derive(Clone, Eq)]
pub struct Path {
    steps: Vec<SignedEdge>,
    reduced: bool,
}

impl PartialEq for Path {
    fn eq(&self, other: &Self) -> bool {
        self.steps == other.steps
    }
}

impl std::hash::Hash for Path {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.steps.hash(state);
    }
}

impl Path {
    pub fn empty() -> Self {
        Path {
            steps: Vec::new(),
            reduced: true,
        }
    }

    pub fn single(step: SignedEdge) -> Self {
        Path {
            steps: vec![step],
            reduced: true,
        }
    }

    pub fn from_steps(steps: Vec<SignedEdge>) -> Self {
        let reduced = steps.len() <= 1;
        Path { steps, reduced }
    }

    pub(crate) fn from_reduced_steps(steps: Vec<SignedEdge>) -> Self {
        debug_assert!(!has_adjacent_cancellation(&steps));
        Path {
            steps,
            reduced: true,
        }
    }

    pub fn steps(&self) -> &[SignedEdge] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Whether this path carries the reduced marker.
    pub fn reduced(&self) -> bool {
        self.reduced
    }

    /// The same walk traversed backwards.
    pub fn reverse(&self) -> Path {
        Path {
            steps: self.steps.iter().rev().map(|s| s.inverse()).collect(),
            reduced: self.reduced,
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return write!(f, "(empty)");
        }
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn has_adjacent_cancellation(steps: &[SignedEdge]) -> bool {
    steps.windows(2).any(|w| w[0] == w[1].inverse())
}

/// One contraction in a step-by-step reduction: `before` is the path prior
/// to the contraction and `cancel_index` points at the first element of the
/// cancelling pair inside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub before: Path,
    pub cancel_index: usize,
}

/// A spanning tree, stored as the sorted set of its edge ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    edges: Vec<EdgeId>,
}

impl SpanningTree {
    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Builds a spanning tree from explicit edge ids, checking that they
    /// connect every vertex without cycles.
    pub fn from_edges(graph: &Graph, mut edges: Vec<EdgeId>) -> Result<Self, GraphError> {
        edges.sort_unstable();
        edges.dedup();
        if edges.len() + 1 != graph.vertex_count() {
            return Err(GraphError::NotASpanningTree);
        }
        let mut dsu: Vec<usize> = (0..=graph.vertex_count()).collect();
        fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
            if dsu[x] != x {
                let root = find(dsu, dsu[x]);
                dsu[x] = root;
            }
            dsu[x]
        }
        for &e in &edges {
            if e == 0 || e > graph.edge_count() {
                return Err(GraphError::NotASpanningTree);
            }
            let (a, b) = graph.endpoints(e);
            let (ra, rb) = (find(&mut dsu, a), find(&mut dsu, b));
            if ra == rb {
                return Err(GraphError::NotASpanningTree);
            }
            dsu[ra] = rb;
        }
        Ok(SpanningTree { edges })
    }
}

/// A fundamental cycle: its non-tree edge, the closed path and the chain
/// vector of that path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalCycle {
    pub nontree_edge: EdgeId,
    pub cycle: Path,
    pub vector: ChainVector,
}

/// The fundamental cycles of a spanning tree, one per non-tree edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleBasis {
    pub cycles: Vec<FundamentalCycle>,
}

impl CycleBasis {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn vectors(&self) -> Vec<&ChainVector> {
        self.cycles.iter().map(|c| &c.vector).collect()
    }
}

/// A finite connected multigraph without loops. Edge `k` is oriented from
/// `endpoints(k).0` to `endpoints(k).1`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    incidence: Vec<Vec<EdgeId>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph({} vertices, {} edges)",
            self.vertex_count,
            self.edges.len()
        )
    }
}

impl Graph {
    /// Validates a raw edge list into a graph. Edge ids must be exactly
    /// `1..=n`, endpoints must differ, and the graph must be connected.
    pub fn new(
        vertex_count: usize,
        edge_list: &[(EdgeId, VertexId, VertexId)],
    ) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::Empty);
        }
        let n = edge_list.len();
        let mut edges: Vec<Option<(VertexId, VertexId)>> = vec![None; n];
        for &(id, a, b) in edge_list {
            if id == 0 || id > n {
                return Err(GraphError::EdgeIdOutOfRange {
                    id,
                    expected: n,
                });
            }
            if edges[id - 1].is_some() {
                return Err(GraphError::DuplicateEdgeId { id });
            }
            for v in [a, b] {
                if v == 0 || v > vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        edge: id,
                        vertex: v,
                        count: vertex_count,
                    });
                }
            }
            if a == b {
                return Err(GraphError::LoopEdge { edge: id, vertex: a });
            }
            edges[id - 1] = Some((a, b));
        }
        let edges: Vec<(VertexId, VertexId)> = edges.into_iter().map(|e| e.unwrap()).collect();
        let mut incidence = vec![Vec::new(); vertex_count];
        for (i, &(a, b)) in edges.iter().enumerate() {
            incidence[a - 1].push(i + 1);
            incidence[b - 1].push(i + 1);
        }
        let graph = Graph {
            vertex_count,
            edges,
            incidence,
        };
        if !graph.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(graph)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(1);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &e in &self.incidence[v - 1] {
                let w = self.other_end(e, v);
                if !seen[w - 1] {
                    seen[w - 1] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.vertex_count
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        1..=self.vertex_count
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        1..=self.edges.len()
    }

    /// `(initial, final)` vertices of the positively oriented edge.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e - 1]
    }

    /// Edge ids incident to `v`, in ascending order.
    pub fn edges_at(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v - 1]
    }

    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.endpoints(e);
        if v == a {
            b
        } else {
            a
        }
    }

    pub fn initial(&self, s: SignedEdge) -> VertexId {
        let (a, b) = self.endpoints(s.edge);
        if s.positive {
            a
        } else {
            b
        }
    }

    pub fn terminal(&self, s: SignedEdge) -> VertexId {
        self.initial(s.inverse())
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.vertex_count
    }

    /// Largest hop distance between any two vertices.
    pub fn diameter(&self) -> usize {
        let mut best = 0;
        for start in self.vertices() {
            let mut dist = vec![usize::MAX; self.vertex_count];
            dist[start - 1] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &e in self.edges_at(v) {
                    let w = self.other_end(e, v);
                    if dist[w - 1] == usize::MAX {
                        dist[w - 1] = dist[v - 1] + 1;
                        queue.push_back(w);
                    }
                }
            }
            best = best.max(*dist.iter().max().unwrap());
        }
        best
    }

    /// Checks consecutive compatibility: every step starts at the vertex
    /// where the previous step ends.
    pub fn validate_path(&self, p: &Path) -> Result<(), GraphError> {
        for (i, w) in p.steps().windows(2).enumerate() {
            if self.terminal(w[0]) != self.initial(w[1]) {
                return Err(GraphError::IncompatiblePath { index: i + 1 });
            }
        }
        Ok(())
    }

    pub fn path_initial(&self, p: &Path) -> Option<VertexId> {
        p.steps().first().map(|&s| self.initial(s))
    }

    pub fn path_terminal(&self, p: &Path) -> Option<VertexId> {
        p.steps().last().map(|&s| self.terminal(s))
    }

    pub fn is_closed_path(&self, p: &Path) -> bool {
        match (self.path_initial(p), self.path_terminal(p)) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }

    /// Cancels adjacent `(E, -E)` pairs until none remain. A single stack
    /// pass; the result is the unique reduced form of the path.
    pub fn reduce_path(&self, p: &Path) -> Result<Path, GraphError> {
        self.validate_path(p)?;
        if p.reduced() {
            return Ok(p.clone());
        }
        let mut stack: Vec<SignedEdge> = Vec::with_capacity(p.len());
        for &s in p.steps() {
            if stack.last() == Some(&s.inverse()) {
                stack.pop();
            } else {
                stack.push(s);
            }
        }
        Ok(Path::from_reduced_steps(stack))
    }

    /// Like [`reduce_path`](Self::reduce_path) but records each contraction,
    /// always cancelling the leftmost pair first. Confluence makes the final
    /// path identical to the stack pass.
    pub fn reduce_path_with_trace(
        &self,
        p: &Path,
    ) -> Result<(Path, Vec<ReductionStep>), GraphError> {
        self.validate_path(p)?;
        let mut steps = Vec::new();
        let mut current: Vec<SignedEdge> = p.steps().to_vec();
        loop {
            let pair = current
                .windows(2)
                .position(|w| w[0] == w[1].inverse());
            match pair {
                Some(i) => {
                    steps.push(ReductionStep {
                        before: Path::from_steps(current.clone()),
                        cancel_index: i,
                    });
                    current.drain(i..i + 2);
                }
                None => break,
            }
        }
        Ok((Path::from_reduced_steps(current), steps))
    }

    /// Concatenates two paths without reducing. The terminal vertex of `a`
    /// must equal the initial vertex of `b` unless either path is empty.
    pub fn concat(&self, a: &Path, b: &Path) -> Result<Path, GraphError> {
        self.validate_path(a)?;
        self.validate_path(b)?;
        if let (Some(end), Some(start)) = (self.path_terminal(a), self.path_initial(b)) {
            if end != start {
                return Err(GraphError::IncompatiblePath { index: a.len() });
            }
        }
        let mut steps = a.steps().to_vec();
        steps.extend_from_slice(b.steps());
        Ok(Path::from_steps(steps))
    }

    pub fn concat_all(&self, parts: &[&Path]) -> Result<Path, GraphError> {
        let mut acc = Path::empty();
        for p in parts {
            acc = self.concat(&acc, p)?;
        }
        Ok(acc)
    }

    /// Signed occurrence counts of every edge in the path.
    pub fn chain_vector(&self, p: &Path) -> ChainVector {
        let mut v = vec![0i64; self.edge_count()];
        for s in p.steps() {
            v[s.edge - 1] += if s.positive { 1 } else { -1 };
        }
        v
    }

    /// Deterministic spanning tree: breadth-first from vertex 1, neighbors
    /// explored in ascending edge-id order.
    pub fn spanning_tree(&self) -> SpanningTree {
        let mut seen = vec![false; self.vertex_count];
        let mut tree = Vec::new();
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(1);
        while let Some(v) = queue.pop_front() {
            for &e in self.edges_at(v) {
                let w = self.other_end(e, v);
                if !seen[w - 1] {
                    seen[w - 1] = true;
                    tree.push(e);
                    queue.push_back(w);
                }
            }
        }
        tree.sort_unstable();
        SpanningTree { edges: tree }
    }

    /// The unique reduced path inside the tree from `a` to `b`; empty when
    /// `a == b`.
    pub fn tree_path(&self, tree: &SpanningTree, a: VertexId, b: VertexId) -> Path {
        if a == b {
            return Path::empty();
        }
        // BFS restricted to the tree, parents recorded as signed steps.
        let mut parent: Vec<Option<SignedEdge>> = vec![None; self.vertex_count];
        let mut seen = vec![false; self.vertex_count];
        seen[a - 1] = true;
        let mut queue = VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            if v == b {
                break;
            }
            for &e in self.edges_at(v) {
                if !tree.contains(e) {
                    continue;
                }
                let w = self.other_end(e, v);
                if !seen[w - 1] {
                    seen[w - 1] = true;
                    let (init, _) = self.endpoints(e);
                    parent[w - 1] = Some(if init == v {
                        SignedEdge::pos(e)
                    } else {
                        SignedEdge::neg(e)
                    });
                    queue.push_back(w);
                }
            }
        }
        let mut rev = Vec::new();
        let mut v = b;
        while v != a {
            let step = parent[v - 1].expect("spanning tree connects all vertices");
            rev.push(step);
            v = self.initial(step);
        }
        rev.reverse();
        Path::from_reduced_steps(rev)
    }

    /// One fundamental cycle per non-tree edge, in ascending edge-id order.
    /// Each cycle starts with the non-tree edge taken positively, followed
    /// by the tree path back to its initial vertex.
    pub fn fundamental_cycles(&self, tree: &SpanningTree) -> CycleBasis {
        let mut cycles = Vec::new();
        for e in self.edge_ids() {
            if tree.contains(e) {
                continue;
            }
            let (a, b) = self.endpoints(e);
            let back = self.tree_path(tree, b, a);
            let cycle = self
                .concat(&Path::single(SignedEdge::pos(e)), &back)
                .expect("tree path starts at the edge's final vertex");
            let vector = self.chain_vector(&cycle);
            cycles.push(FundamentalCycle {
                nontree_edge: e,
                cycle,
                vector,
            });
        }
        CycleBasis { cycles }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;

    fn ghat() -> Graph {
        sample::ghat_graph()
    }

    #[test]
    fn ghat_is_valid() {
        let g = ghat();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.endpoints(2), (5, 1));
        assert!(!g.is_tree());
    }

    #[test]
    fn loops_are_rejected() {
        let err = Graph::new(1, &[(1, 1, 1)]).unwrap_err();
        assert_eq!(err, GraphError::LoopEdge { edge: 1, vertex: 1 });
    }

    #[test]
    fn disconnected_is_rejected() {
        let err = Graph::new(4, &[(1, 1, 2), (2, 3, 4)]).unwrap_err();
        assert_eq!(err, GraphError::Disconnected);
    }

    #[test]
    fn duplicate_edge_ids_are_rejected() {
        let err = Graph::new(2, &[(1, 1, 2), (1, 2, 1)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdgeId { id: 1 });
    }

    #[test]
    fn reduce_collapses_example_cycle_image() {
        let g = ghat();
        let p = sample::path(&[3, -6, 2, -2, 6, -3]);
        let r = g.reduce_path(&p).unwrap();
        assert!(r.is_empty());
    }

    #[test]
    fn reduce_single_cancellation() {
        let g = ghat();
        let r = g.reduce_path(&sample::path(&[1, -1])).unwrap();
        assert!(r.is_empty());
    }

    #[test]
    fn reduce_second_cycle_image() {
        let g = ghat();
        let r = g.reduce_path(&sample::path(&[5, -6, 2, -2, 6, -5])).unwrap();
        assert!(r.is_empty());
    }

    #[test]
    fn reduce_rejects_incompatible() {
        let g = ghat();
        // E1 ends at v2, E1 starts at v1.
        let err = g.reduce_path(&sample::path(&[1, 1])).unwrap_err();
        assert_eq!(err, GraphError::IncompatiblePath { index: 1 });
    }

    #[test]
    fn reduce_trace_matches_stack_pass() {
        let g = ghat();
        let p = sample::path(&[3, -6, 2, -2, 6, -3]);
        let (r, steps) = g.reduce_path_with_trace(&p).unwrap();
        assert!(r.is_empty());
        assert_eq!(steps.len(), 3);
        assert_eq!(steps[0].cancel_index, 2);
        assert_eq!(steps[1].before, sample::path(&[3, -6, 6, -3]));
        assert_eq!(steps[1].cancel_index, 1);
        assert_eq!(steps[2].before, sample::path(&[3, -3]));
    }

    #[test]
    fn concat_is_not_auto_reduced() {
        let g = ghat();
        let p = g
            .concat(&sample::path(&[1]), &sample::path(&[3]))
            .unwrap();
        assert_eq!(p, sample::path(&[1, 3]));

        let image_c1 = g
            .concat_all(&[
                &sample::path(&[3]),
                &sample::path(&[-6, 2]),
                &sample::path(&[-2, 6, -3]),
            ])
            .unwrap();
        assert_eq!(image_c1, sample::path(&[3, -6, 2, -2, 6, -3]));
        assert_eq!(image_c1.len(), 6);
    }

    #[test]
    fn concat_with_empty_is_identity() {
        let g = ghat();
        let p = sample::path(&[1, 4]);
        assert_eq!(g.concat(&Path::empty(), &p).unwrap(), p);
        assert_eq!(g.concat(&p, &Path::empty()).unwrap(), p);
    }

    #[test]
    fn concat_rejects_mismatched_junction() {
        let g = ghat();
        let err = g
            .concat(&sample::path(&[1]), &sample::path(&[1]))
            .unwrap_err();
        assert!(matches!(err, GraphError::IncompatiblePath { .. }));
    }

    #[test]
    fn spanning_tree_of_ghat() {
        let t = ghat().spanning_tree();
        assert_eq!(t.edge_ids(), &[1, 2, 3, 5]);
    }

    #[test]
    fn spanning_tree_of_tree_is_everything() {
        let g = Graph::new(3, &[(1, 1, 2), (2, 2, 3)]).unwrap();
        assert_eq!(g.spanning_tree().edge_ids(), &[1, 2]);
    }

    #[test]
    fn spanning_tree_single_edge() {
        let g = Graph::new(2, &[(1, 1, 2)]).unwrap();
        assert_eq!(g.spanning_tree().edge_ids(), &[1]);
    }

    #[test]
    fn fundamental_cycles_of_ghat() {
        let g = ghat();
        let basis = g.fundamental_cycles(&g.spanning_tree());
        assert_eq!(basis.len(), 2);
        assert_eq!(basis.cycles[0].nontree_edge, 4);
        assert_eq!(basis.cycles[0].cycle, sample::path(&[4, 2, 1]));
        assert_eq!(basis.cycles[0].vector, vec![1, 1, 0, 1, 0, 0]);
        assert_eq!(basis.cycles[1].nontree_edge, 6);
        assert_eq!(basis.cycles[1].cycle, sample::path(&[6, -3, -1, -2]));
        assert_eq!(basis.cycles[1].vector, vec![-1, -1, -1, 0, 0, 1]);
    }

    #[test]
    fn ghat_basis_spans_the_documented_cycles() {
        // The cycles E1 E4 E2 and -E3 E4 E6 have vectors w1 = [1,1,0,1,0,0]
        // and w2 = [0,0,-1,1,0,1]; our basis is {w1, w2 - w1}.
        let g = ghat();
        let basis = g.fundamental_cycles(&g.spanning_tree());
        let w1 = vec![1i64, 1, 0, 1, 0, 0];
        let w2 = vec![0i64, 0, -1, 1, 0, 1];
        assert_eq!(basis.cycles[0].vector, w1);
        let sum: ChainVector = basis.cycles[0]
            .vector
            .iter()
            .zip(&basis.cycles[1].vector)
            .map(|(a, b)| a + b)
            .collect();
        assert_eq!(sum, w2);
    }

    #[test]
    fn tree_has_empty_basis() {
        let g = Graph::new(3, &[(1, 1, 2), (2, 2, 3)]).unwrap();
        assert!(g.fundamental_cycles(&g.spanning_tree()).is_empty());
    }

    #[test]
    fn parallel_edges_give_one_cycle() {
        let g = Graph::new(2, &[(1, 1, 2), (2, 1, 2)]).unwrap();
        let basis = g.fundamental_cycles(&g.spanning_tree());
        assert_eq!(basis.len(), 1);
        assert_eq!(basis.cycles[0].cycle, sample::path(&[2, -1]));
    }

    #[test]
    fn chain_vector_examples() {
        let g = ghat();
        assert_eq!(
            g.chain_vector(&sample::path(&[1, 4, 2])),
            vec![1, 1, 0, 1, 0, 0]
        );
        assert_eq!(g.chain_vector(&Path::empty()), vec![0; 6]);
        // c3 = E1 E3 -E6 E2 equals w1 - w2 as vectors.
        let c3 = g.chain_vector(&sample::path(&[1, 3, -6, 2]));
        assert_eq!(c3, vec![1, 1, 1, 0, 0, -1]);
    }

    #[test]
    fn tree_path_examples() {
        let g = ghat();
        let t = g.spanning_tree();
        assert_eq!(g.tree_path(&t, 1, 2), sample::path(&[1]));
        assert!(g.tree_path(&t, 4, 4).is_empty());
        assert_eq!(g.tree_path(&t, 5, 3), sample::path(&[2, 1, 3]));
    }

    #[test]
    fn spanning_tree_from_edges_validates() {
        let g = ghat();
        assert!(SpanningTree::from_edges(&g, vec![1, 2, 3, 5]).is_ok());
        assert_eq!(
            SpanningTree::from_edges(&g, vec![1, 2, 3]).unwrap_err(),
            GraphError::NotASpanningTree
        );
        // E4 (2-5), E2 (5-1), E1 (1-2) form a cycle.
        assert_eq!(
            SpanningTree::from_edges(&g, vec![1, 2, 4, 5]).unwrap_err(),
            GraphError::NotASpanningTree
        );
    }

    #[test]
    fn diameter_of_ghat() {
        assert_eq!(ghat().diameter(), 3);
    }
}
