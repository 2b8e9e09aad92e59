//! Seeded random generators for graphs, permutations, walks, and HTC maps;
//! used by the property suites and the search harness.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{EdgeId, Graph, Path, SignedEdge, SpanningTree, VertexId};
use crate::map::{Permutation, VertexMap};

/// Random labeled tree on `v` vertices: vertex `i` attaches to a random
/// earlier vertex.
pub fn random_tree<R: Rng>(v: usize, rng: &mut R) -> Graph {
    assert!(v >= 2);
    let mut edges = Vec::with_capacity(v - 1);
    for i in 2..=v {
        let parent = rng.gen_range(1..i);
        edges.push((i - 1, parent, i));
    }
    Graph::new(v, &edges).unwrap()
}

/// Random connected multigraph: a random tree plus `extra` additional edges
/// between distinct vertices (parallel edges allowed, loops never).
pub fn random_graph<R: Rng>(v: usize, extra: usize, rng: &mut R) -> Graph {
    let tree = random_tree(v, rng);
    let mut edges: Vec<(EdgeId, VertexId, VertexId)> = tree
        .edge_ids()
        .map(|e| {
            let (a, b) = tree.endpoints(e);
            (e, a, b)
        })
        .collect();
    for k in 0..extra {
        let a = rng.gen_range(1..=v);
        let mut b = rng.gen_range(1..=v - 1);
        if b >= a {
            b += 1;
        }
        edges.push((v - 1 + k + 1, a, b));
    }
    Graph::new(v, &edges).unwrap()
}

/// Random spanning tree by a Kruskal pass over a shuffled edge order.
pub fn random_spanning_tree<R: Rng>(g: &Graph, rng: &mut R) -> SpanningTree {
    let mut order: Vec<EdgeId> = g.edge_ids().collect();
    order.shuffle(rng);
    let mut dsu: Vec<usize> = (0..=g.vertex_count()).collect();
    fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
        if dsu[x] != x {
            let root = find(dsu, dsu[x]);
            dsu[x] = root;
        }
        dsu[x]
    }
    let mut chosen = Vec::new();
    for e in order {
        let (a, b) = g.endpoints(e);
        let (ra, rb) = (find(&mut dsu, a), find(&mut dsu, b));
        if ra != rb {
            dsu[ra] = rb;
            chosen.push(e);
        }
    }
    SpanningTree::from_edges(g, chosen).expect("Kruskal yields a spanning tree")
}

pub fn random_permutation<R: Rng>(v: usize, rng: &mut R) -> Permutation {
    let mut image: Vec<VertexId> = (1..=v).collect();
    image.shuffle(rng);
    Permutation::from_image(image).unwrap()
}

/// A uniformly random `v`-cycle.
pub fn random_cyclic_permutation<R: Rng>(v: usize, rng: &mut R) -> Permutation {
    let mut order: Vec<VertexId> = (1..=v).collect();
    order.shuffle(rng);
    Permutation::from_cycles(v, &[order]).unwrap()
}

/// Rejection-samples a fixed-point-free permutation. Requires `v >= 2`.
pub fn random_fixed_point_free_permutation<R: Rng>(v: usize, rng: &mut R) -> Permutation {
    assert!(v >= 2);
    loop {
        let p = random_permutation(v, rng);
        if !p.has_fixed_vertex() {
            return p;
        }
    }
}

/// Fixed-point-free and not a single cycle. Requires `v >= 4`.
pub fn random_noncyclic_fpf_permutation<R: Rng>(v: usize, rng: &mut R) -> Permutation {
    assert!(v >= 4);
    loop {
        let p = random_fixed_point_free_permutation(v, rng);
        if !p.is_cyclic() {
            return p;
        }
    }
}

/// A random compatible walk from `a` to `b`: a random prefix of at most
/// `max_len` minus the tree-return budget, then the deterministic tree path
/// home, reduced. The reduced walk still runs from `a` to `b`.
pub fn random_walk_between<R: Rng>(
    g: &Graph,
    a: VertexId,
    b: VertexId,
    max_len: usize,
    rng: &mut R,
) -> Path {
    let tree = g.spanning_tree();
    let budget = max_len.saturating_sub(g.vertex_count() - 1);
    let prefix_len = if budget == 0 {
        0
    } else {
        rng.gen_range(0..=budget)
    };
    let mut steps: Vec<SignedEdge> = Vec::with_capacity(prefix_len + g.vertex_count());
    let mut current = a;
    for _ in 0..prefix_len {
        let e = *crate::map::pick(g.edges_at(current), rng);
        let (init, _) = g.endpoints(e);
        let step = if init == current {
            SignedEdge::pos(e)
        } else {
            SignedEdge::neg(e)
        };
        steps.push(step);
        current = g.terminal(step);
    }
    let home = g.tree_path(&tree, current, b);
    steps.extend_from_slice(home.steps());
    g.reduce_path(&Path::from_steps(steps))
        .expect("walk is compatible by construction")
}

/// One random closed loop per vertex (some empty): a random wander followed
/// by the tree path back, reduced.
pub fn random_vertex_loops<R: Rng>(g: &Graph, wander: usize, rng: &mut R) -> Vec<Path> {
    let tree = g.spanning_tree();
    g.vertices()
        .map(|v| {
            if rng.gen_bool(0.4) {
                return Path::empty();
            }
            let len = rng.gen_range(1..=wander.max(1));
            let mut steps = Vec::new();
            let mut current = v;
            for _ in 0..len {
                let e = *crate::map::pick(g.edges_at(current), rng);
                let (init, _) = g.endpoints(e);
                let step = if init == current {
                    SignedEdge::pos(e)
                } else {
                    SignedEdge::neg(e)
                };
                steps.push(step);
                current = g.terminal(step);
            }
            let home = g.tree_path(&tree, current, v);
            steps.extend_from_slice(home.steps());
            g.reduce_path(&Path::from_steps(steps))
                .expect("loop is compatible by construction")
        })
        .collect()
}

/// A guaranteed-HTC map: a tree-routed map over a random spanning tree,
/// optionally post-composed with a random loop conjugation.
pub fn random_htc_vertex_map<R: Rng>(g: &Graph, theta: &Permutation, rng: &mut R) -> VertexMap {
    let tree = random_spanning_tree(g, rng);
    let base = VertexMap::tree_routed(g, theta, &tree);
    if rng.gen_bool(0.5) {
        return base;
    }
    let loops = random_vertex_loops(g, 4, rng);
    base.conjugate_by_loops(&loops)
        .expect("generated loops are closed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_graph_is_valid_and_deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let g = random_graph(6, 3, &mut rng);
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 8);

        let mut rng2 = ChaCha8Rng::seed_from_u64(42);
        let g2 = random_graph(6, 3, &mut rng2);
        assert_eq!(g, g2);
    }

    #[test]
    fn random_walks_connect_their_endpoints() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let g = random_graph(5, 2, &mut rng);
            let w = random_walk_between(&g, 2, 4, 12, &mut rng);
            assert_eq!(g.path_initial(&w), Some(2));
            assert_eq!(g.path_terminal(&w), Some(4));
            assert!(w.len() <= 12);
        }
    }

    #[test]
    fn generated_htc_maps_are_htc() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..15 {
            let g = random_graph(5, 2, &mut rng);
            let theta = random_cyclic_permutation(5, &mut rng);
            let m = random_htc_vertex_map(&g, &theta, &mut rng);
            assert!(m.is_htc());
        }
    }

    #[test]
    fn fpf_permutations_have_no_fixed_vertex() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for v in 2..=8 {
            let p = random_fixed_point_free_permutation(v, &mut rng);
            assert!(!p.has_fixed_vertex());
        }
        for v in 4..=8 {
            let p = random_noncyclic_fpf_permutation(v, &mut rng);
            assert!(!p.has_fixed_vertex());
            assert!(!p.is_cyclic());
        }
    }
}
