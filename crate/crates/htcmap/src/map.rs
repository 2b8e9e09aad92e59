//! Linearized vertex maps: a vertex permutation together with one reduced
//! image path per edge. Includes validation, path images, iteration, the
//! HTC test, and constructive generators.

use std::fmt;

use num_integer::Integer;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{EdgeId, Graph, GraphError, Path, SignedEdge, SpanningTree, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MapError {
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("image of edge E{edge} does not run from theta(initial) to theta(final)")]
    EndpointMismatch { edge: EdgeId },
    #[error("image of edge E{edge} is not reduced")]
    UnreducedImage { edge: EdgeId },
    #[error("wrong number of edge images: expected {expected}, got {got}")]
    WrongImageCount { expected: usize, got: usize },
    #[error("loop for vertex {vertex} is not a closed path at that vertex")]
    BadLoop { vertex: VertexId },
    #[error("no HTC map found after {attempts} attempts")]
    GenerationExhausted { attempts: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A permutation of `1..=degree`, stored as an image array.
#[derive(Clone, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<VertexId>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            image: (1..=degree).collect(),
        }
    }

    pub fn from_image(image: Vec<VertexId>) -> Result<Self, MapError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x == 0 || x > n {
                return Err(MapError::NotAPermutation(format!(
                    "image value {x} outside 1..={n}"
                )));
            }
            if seen[x - 1] {
                return Err(MapError::NotAPermutation(format!("value {x} repeats")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { image })
    }

    /// Builds a permutation from disjoint cycles; vertices absent from every
    /// cycle are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<VertexId>]) -> Result<Self, MapError> {
        let mut image: Vec<VertexId> = (1..=degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (i, &v) in cycle.iter().enumerate() {
                if v == 0 || v > degree {
                    return Err(MapError::NotAPermutation(format!(
                        "vertex {v} outside 1..={degree}"
                    )));
                }
                if used[v - 1] {
                    return Err(MapError::NotAPermutation(format!(
                        "vertex {v} appears in two cycles"
                    )));
                }
                used[v - 1] = true;
                image[v - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_image(image)
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        self.image[v - 1]
    }

    /// Length of the cycle containing `v`.
    pub fn cycle_length_of(&self, v: VertexId) -> u64 {
        let mut len = 1u64;
        let mut w = self.apply(v);
        while w != v {
            w = self.apply(w);
            len += 1;
        }
        len
    }

    /// Order of the permutation: the lcm of its cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut order = 1u64;
        for v in 1..=self.degree() {
            if !seen[v - 1] {
                let mut w = v;
                let mut len = 0u64;
                loop {
                    seen[w - 1] = true;
                    len += 1;
                    w = self.apply(w);
                    if w == v {
                        break;
                    }
                }
                order = order.lcm(&len);
            }
        }
        order
    }

    pub fn power(&self, k: u64) -> Permutation {
        let mut image = Vec::with_capacity(self.degree());
        for v in 1..=self.degree() {
            let mut w = v;
            for _ in 0..k {
                w = self.apply(w);
            }
            image.push(w);
        }
        Permutation { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// True when the whole vertex set forms one cycle.
    pub fn is_cyclic(&self) -> bool {
        self.cycle_length_of(1) == self.degree() as u64
    }

    pub fn has_fixed_vertex(&self) -> bool {
        self.image.iter().enumerate().any(|(i, &x)| x == i + 1)
    }

    /// Nontrivial cycles in canonical form: each cycle starts at its minimum
    /// element; cycles ordered by that minimum.
    pub fn cycles(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for v in 1..=self.degree() {
            if seen[v - 1] {
                continue;
            }
            let mut cycle = vec![v];
            seen[v - 1] = true;
            let mut w = self.apply(v);
            while w != v {
                seen[w - 1] = true;
                cycle.push(w);
                w = self.apply(w);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A linearized vertex map: vertices move by `theta`, edge `E` maps onto the
/// stored reduced path from `theta(initial(E))` to `theta(final(E))`.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexMap {
    graph: Graph,
    theta: Permutation,
    images: Vec<Path>,
}

impl fmt::Debug for VertexMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "VertexMap theta = {}", self.theta)?;
        for e in self.graph.edge_ids() {
            writeln!(f, "  E{e} -> {}", self.images[e - 1])?;
        }
        Ok(())
    }
}

impl VertexMap {
    /// Validates a map, reducing each raw image first (linearization accepts
    /// unreduced input). Endpoint consistency is enforced after reduction.
    pub fn new(graph: Graph, theta: Permutation, images: Vec<Path>) -> Result<Self, MapError> {
        Self::build(graph, theta, images, false)
    }

    /// Like [`new`](Self::new) but rejects raw images that are not already
    /// in reduced form.
    pub fn new_strict(
        graph: Graph,
        theta: Permutation,
        images: Vec<Path>,
    ) -> Result<Self, MapError> {
        Self::build(graph, theta, images, true)
    }

    fn build(
        graph: Graph,
        theta: Permutation,
        images: Vec<Path>,
        strict: bool,
    ) -> Result<Self, MapError> {
        if theta.degree() != graph.vertex_count() {
            return Err(MapError::NotAPermutation(format!(
                "permutation degree {} does not match vertex count {}",
                theta.degree(),
                graph.vertex_count()
            )));
        }
        if images.len() != graph.edge_count() {
            return Err(MapError::WrongImageCount {
                expected: graph.edge_count(),
                got: images.len(),
            });
        }
        let mut reduced_images = Vec::with_capacity(images.len());
        for (i, raw) in images.into_iter().enumerate() {
            let edge = i + 1;
            let reduced = graph.reduce_path(&raw)?;
            if strict && reduced.len() != raw.len() {
                return Err(MapError::UnreducedImage { edge });
            }
            let (a, b) = graph.endpoints(edge);
            let want = (theta.apply(a), theta.apply(b));
            let got = (graph.path_initial(&reduced), graph.path_terminal(&reduced));
            if got != (Some(want.0), Some(want.1)) {
                return Err(MapError::EndpointMismatch { edge });
            }
            reduced_images.push(reduced);
        }
        Ok(VertexMap {
            graph,
            theta,
            images: reduced_images,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn theta(&self) -> &Permutation {
        &self.theta
    }

    /// The stored reduced image of the positively oriented edge.
    pub fn image_of_edge(&self, e: EdgeId) -> &Path {
        &self.images[e - 1]
    }

    /// Image of a signed edge; a reversed edge maps to the reverse path.
    pub fn image_of_signed(&self, s: SignedEdge) -> Path {
        if s.positive {
            self.images[s.edge - 1].clone()
        } else {
            self.images[s.edge - 1].reverse()
        }
    }

    /// Image of a path: the concatenation of the per-step images, reduced.
    pub fn image_of_path(&self, p: &Path) -> Result<Path, MapError> {
        self.graph.validate_path(p)?;
        let mut steps = Vec::new();
        for &s in p.steps() {
            steps.extend_from_slice(self.image_of_signed(s).steps());
        }
        Ok(self.graph.reduce_path(&Path::from_steps(steps))?)
    }

    /// The k-fold composition of the map with itself.
    pub fn iterate(&self, k: u64) -> VertexMap {
        assert!(k >= 1, "iterate requires k >= 1");
        let mut images = self.images.clone();
        for _ in 1..k {
            images = images
                .iter()
                .map(|p| self.image_of_path(p).expect("images stay compatible"))
                .collect();
        }
        VertexMap {
            graph: self.graph.clone(),
            theta: self.theta.power(k),
            images,
        }
    }

    /// True when the image of every fundamental cycle contracts to the empty
    /// path. Triviality on the cycle basis suffices: the basis generates all
    /// closed paths up to reduction.
    pub fn is_htc(&self) -> bool {
        let tree = self.graph.spanning_tree();
        let basis = self.graph.fundamental_cycles(&tree);
        basis.cycles.iter().all(|c| {
            self.image_of_path(&c.cycle)
                .map(|p| p.is_empty())
                .unwrap_or(false)
        })
    }

    /// The map whose edge images are routed through a spanning tree: edge
    /// `(a, b)` maps to the tree path from `theta(a)` to `theta(b)`. The
    /// result is always HTC because its image lies inside the tree.
    pub fn tree_routed(graph: &Graph, theta: &Permutation, tree: &SpanningTree) -> VertexMap {
        assert_eq!(theta.degree(), graph.vertex_count());
        let images = graph
            .edge_ids()
            .map(|e| {
                let (a, b) = graph.endpoints(e);
                graph.tree_path(tree, theta.apply(a), theta.apply(b))
            })
            .collect();
        VertexMap {
            graph: graph.clone(),
            theta: theta.clone(),
            images,
        }
    }

    /// Rejection-samples a random HTC map: each edge image is drawn as a
    /// random compatible walk (then reduced) and the candidate is kept only
    /// if it passes [`is_htc`](Self::is_htc). Deterministic in `seed`.
    pub fn random_htc(
        graph: &Graph,
        theta: &Permutation,
        seed: u64,
        max_image_len: usize,
        max_attempts: usize,
    ) -> Result<VertexMap, MapError> {
        assert!(
            max_image_len >= graph.diameter(),
            "max_image_len must cover the graph diameter"
        );
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..max_attempts {
            let images = graph
                .edge_ids()
                .map(|e| {
                    let (a, b) = graph.endpoints(e);
                    crate::gen::random_walk_between(
                        graph,
                        theta.apply(a),
                        theta.apply(b),
                        max_image_len,
                        &mut rng,
                    )
                })
                .collect();
            let candidate = VertexMap::new(graph.clone(), theta.clone(), images)?;
            if candidate.is_htc() {
                return Ok(candidate);
            }
        }
        Err(MapError::GenerationExhausted {
            attempts: max_attempts,
        })
    }

    /// Post-composes the map with a homotopy sliding every vertex around a
    /// closed loop: the image of edge `(a, b)` becomes
    /// `loop[theta(a)] f(E) loop[theta(b)]^-1`, reduced. Loop tails cancel
    /// along paths, so images of closed paths change only by conjugation and
    /// an HTC map stays HTC.
    pub fn conjugate_by_loops(&self, loops: &[Path]) -> Result<VertexMap, MapError> {
        assert_eq!(loops.len(), self.graph.vertex_count());
        for (i, l) in loops.iter().enumerate() {
            let v = i + 1;
            self.graph.validate_path(l)?;
            if !l.is_empty()
                && (self.graph.path_initial(l) != Some(v) || self.graph.path_terminal(l) != Some(v))
            {
                return Err(MapError::BadLoop { vertex: v });
            }
        }
        let images = self
            .graph
            .edge_ids()
            .map(|e| {
                let (a, b) = self.graph.endpoints(e);
                let head = &loops[self.theta.apply(a) - 1];
                let tail = loops[self.theta.apply(b) - 1].reverse();
                let glued = self
                    .graph
                    .concat_all(&[head, &self.images[e - 1], &tail])
                    .expect("loops are closed at the image endpoints");
                self.graph.reduce_path(&glued).expect("already validated")
            })
            .collect();
        VertexMap::new(self.graph.clone(), self.theta.clone(), images)
    }

    /// Reverses the declared orientation of one edge, rewriting every image
    /// accordingly. The underlying continuous map is unchanged.
    pub fn flip_edge_orientation(&self, e: EdgeId) -> VertexMap {
        let flip = |p: &Path| -> Path {
            Path::from_steps(
                p.steps()
                    .iter()
                    .map(|&s| if s.edge == e { s.inverse() } else { s })
                    .collect(),
            )
        };
        let edge_list: Vec<(EdgeId, VertexId, VertexId)> = self
            .graph
            .edge_ids()
            .map(|id| {
                let (a, b) = self.graph.endpoints(id);
                if id == e {
                    (id, b, a)
                } else {
                    (id, a, b)
                }
            })
            .collect();
        let graph = Graph::new(self.graph.vertex_count(), &edge_list)
            .expect("orientation flip preserves validity");
        let images = self
            .graph
            .edge_ids()
            .map(|id| {
                if id == e {
                    flip(&self.images[id - 1].reverse())
                } else {
                    flip(&self.images[id - 1])
                }
            })
            .collect();
        VertexMap::new(graph, self.theta.clone(), images)
            .expect("orientation flip preserves validity")
    }
}

/// Picks a uniformly random element from a slice.
pub(crate) fn pick<'a, T, R: Rng>(items: &'a [T], rng: &mut R) -> &'a T {
    &items[rng.gen_range(0..items.len())]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{self, path};

    #[test]
    fn ghat_map_validates() {
        let m = sample::ghat_map();
        assert_eq!(m.image_of_edge(1), &path(&[3]));
        assert_eq!(m.image_of_edge(6), &path(&[-2, 6, -5]));
    }

    #[test]
    fn unreduced_images_are_reduced_on_validation() {
        let g = sample::ghat_graph();
        let theta = Permutation::from_cycles(5, &[vec![1, 2, 3, 4, 5]]).unwrap();
        let mut images = vec![
            path(&[4, 6, -5, 5]), // reduces to E4 E6, running v2 -> v3
            path(&[-2, 6, -3]),
            path(&[-5]),
            path(&[-6, 2]),
            path(&[2, 1, 3, -6, -4, -1, -2, 6, -5]),
            path(&[-2, 6, -5]),
        ];
        let m = VertexMap::new(g.clone(), theta.clone(), images.clone()).unwrap();
        assert_eq!(m.image_of_edge(1), &path(&[4, 6]));

        let err = VertexMap::new_strict(g.clone(), theta.clone(), images.clone()).unwrap_err();
        assert_eq!(err, MapError::UnreducedImage { edge: 1 });

        // Wrong endpoints: E2 needs an image from v1 to v2, E3 runs v2 -> v3.
        images[0] = path(&[3]);
        images[1] = path(&[3]);
        let err = VertexMap::new(g, theta, images).unwrap_err();
        assert_eq!(err, MapError::EndpointMismatch { edge: 2 });
    }

    #[test]
    fn rejects_non_permutation() {
        let g = sample::ghat_graph();
        let err = Permutation::from_image(vec![1, 1, 3, 4, 5]).unwrap_err();
        assert!(matches!(err, MapError::NotAPermutation(_)));
        let theta = Permutation::identity(4);
        let err = VertexMap::new(g, theta, vec![]).unwrap_err();
        assert!(matches!(err, MapError::NotAPermutation(_)));
    }

    #[test]
    fn image_of_cycle_c1_is_empty() {
        let m = sample::ghat_map();
        assert!(m.image_of_path(&path(&[1, 4, 2])).unwrap().is_empty());
        assert!(m.image_of_path(&Path::empty()).unwrap().is_empty());
    }

    #[test]
    fn image_of_e5_is_already_reduced() {
        let m = sample::ghat_map();
        let img = m.image_of_path(&path(&[5])).unwrap();
        assert_eq!(img, path(&[2, 1, 3, -6, -4, -1, -2, 6, -5]));
    }

    #[test]
    fn iterate_once_is_identity_operation() {
        let m = sample::ghat_map();
        assert_eq!(m.iterate(1), m);
    }

    #[test]
    fn iterate_twice_moves_e1_to_minus_e5() {
        let m = sample::ghat_map();
        let m2 = m.iterate(2);
        assert_eq!(m2.image_of_edge(1), &path(&[-5]));
        assert_eq!(m2.theta().apply(1), 3);
    }

    #[test]
    fn ghat_map_is_htc() {
        assert!(sample::ghat_map().is_htc());
    }

    #[test]
    fn tree_maps_are_htc() {
        let g = Graph::new(2, &[(1, 1, 2)]).unwrap();
        let theta = Permutation::from_cycles(2, &[vec![1, 2]]).unwrap();
        let m = VertexMap::new(g, theta, vec![path(&[-1])]).unwrap();
        assert!(m.is_htc());
    }

    #[test]
    fn parallel_edge_flip_is_not_htc() {
        let g = Graph::new(2, &[(1, 1, 2), (2, 1, 2)]).unwrap();
        let theta = Permutation::from_cycles(2, &[vec![1, 2]]).unwrap();
        let m = VertexMap::new(g, theta, vec![path(&[-1]), path(&[-2])]).unwrap();
        assert!(!m.is_htc());
    }

    #[test]
    fn tree_routed_images_on_ghat() {
        let g = sample::ghat_graph();
        let theta = Permutation::from_cycles(5, &[vec![1, 2, 3, 4, 5]]).unwrap();
        let t = g.spanning_tree();
        let m = VertexMap::tree_routed(&g, &theta, &t);
        assert_eq!(m.image_of_edge(1), &path(&[3]));
        assert_eq!(m.image_of_edge(2), &path(&[1]));
        assert_eq!(m.image_of_edge(3), &path(&[-5]));
        assert_eq!(m.image_of_edge(4), &path(&[-3, -1]));
        assert_eq!(m.image_of_edge(5), &path(&[2, 1, 3, -5]));
        assert_eq!(m.image_of_edge(6), &path(&[1, 3, -5]));
        assert!(m.is_htc());
    }

    #[test]
    fn random_htc_on_tree_succeeds_immediately() {
        let g = Graph::new(4, &[(1, 1, 2), (2, 2, 3), (3, 3, 4)]).unwrap();
        let theta = Permutation::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap();
        let m = VertexMap::random_htc(&g, &theta, 7, 8, 1).unwrap();
        assert!(m.is_htc());
        // Deterministic in the seed.
        let m2 = VertexMap::random_htc(&g, &theta, 7, 8, 1).unwrap();
        assert_eq!(m, m2);
        let m3 = VertexMap::random_htc(&g, &theta, 8, 8, 1).unwrap();
        assert!(m3.is_htc());
    }

    #[test]
    fn conjugation_preserves_htc() {
        let m = sample::ghat_map();
        let g = m.graph().clone();
        // Loop at v2 around the cycle E4 E2 E1; all other loops empty.
        let mut loops = vec![Path::empty(); 5];
        loops[1] = path(&[4, 2, 1]);
        let conj = m.conjugate_by_loops(&loops).unwrap();
        assert!(conj.is_htc());
        assert_eq!(conj.theta(), m.theta());
        assert!(conj != m);
        let _ = g;
    }

    #[test]
    fn conjugation_rejects_open_loops() {
        let m = sample::ghat_map();
        let mut loops = vec![Path::empty(); 5];
        loops[0] = path(&[1]); // not closed
        assert_eq!(
            m.conjugate_by_loops(&loops).unwrap_err(),
            MapError::BadLoop { vertex: 1 }
        );
    }

    #[test]
    fn permutation_algebra() {
        let theta = Permutation::from_cycles(5, &[vec![1, 2, 3, 4, 5]]).unwrap();
        assert_eq!(theta.order(), 5);
        assert!(theta.is_cyclic());
        assert!(!theta.has_fixed_vertex());

        let id = Permutation::identity(3);
        assert_eq!(id.order(), 1);
        assert!(id.has_fixed_vertex());

        let mixed = Permutation::from_cycles(5, &[vec![1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(mixed.order(), 6);
        assert!(!mixed.is_cyclic());
        let sq = mixed.power(2);
        assert_eq!(sq.apply(1), 1);
        assert_eq!(sq.apply(2), 2);
        assert_eq!(sq.apply(3), 5);
        assert_eq!(mixed.power(6), Permutation::identity(5));
        assert_eq!(mixed.to_string(), "(1 2)(3 4 5)");
    }

    #[test]
    fn flip_orientation_round_trip() {
        let m = sample::ghat_map();
        let flipped = m.flip_edge_orientation(3);
        assert_eq!(flipped.graph().endpoints(3), (3, 2));
        assert_eq!(flipped.flip_edge_orientation(3), m);
        assert!(flipped.is_htc());
    }
}
