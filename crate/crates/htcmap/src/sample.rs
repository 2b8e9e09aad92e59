//! The five-vertex running example used by the test suites and the bundled
//! `ghat.map` file: a graph with two independent cycles and an HTC map whose
//! vertices form a single period-5 orbit.

use crate::graph::{Graph, Path, SignedEdge};
use crate::map::{Permutation, VertexMap};

/// Builds a path from signed edge ids, e.g. `path(&[3, -6, 2])`.
pub fn path(signed_steps: &[i64]) -> Path {
    let steps = signed_steps
        .iter()
        .map(|&s| {
            assert!(s != 0, "edge ids are nonzero");
            if s > 0 {
                SignedEdge::pos(s as usize)
            } else {
                SignedEdge::neg((-s) as usize)
            }
        })
        .collect();
    Path::from_steps(steps)
}

/// Five vertices and six oriented edges:
/// E1: 1->2, E2: 5->1, E3: 2->3, E4: 2->5, E5: 4->3, E6: 5->3.
pub fn ghat_graph() -> Graph {
    Graph::new(
        5,
        &[
            (1, 1, 2),
            (2, 5, 1),
            (3, 2, 3),
            (4, 2, 5),
            (5, 4, 3),
            (6, 5, 3),
        ],
    )
    .unwrap()
}

/// The HTC map on [`ghat_graph`] with theta = (1 2 3 4 5) and images
///
/// ```text
/// E1 -> E3
/// E2 -> -E2 E6 -E3
/// E3 -> -E5
/// E4 -> -E6 E2
/// E5 -> E2 E1 E3 -E6 -E4 -E1 -E2 E6 -E5
/// E6 -> -E2 E6 -E5
/// ```
pub fn ghat_map() -> VertexMap {
    let graph = ghat_graph();
    let theta = Permutation::from_cycles(5, &[vec![1, 2, 3, 4, 5]]).unwrap();
    let images = vec![
        path(&[3]),
        path(&[-2, 6, -3]),
        path(&[-5]),
        path(&[-6, 2]),
        path(&[2, 1, 3, -6, -4, -1, -2, 6, -5]),
        path(&[-2, 6, -5]),
    ];
    VertexMap::new(graph, theta, images).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_map_is_valid_and_htc() {
        let m = ghat_map();
        assert!(m.is_htc());
        assert_eq!(m.theta().order(), 5);
    }
}
