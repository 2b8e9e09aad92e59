//! Exact iteration of a linearized map on the geometric realization of its
//! graph. Every edge is a unit interval; an edge whose image path has `q`
//! steps is cut into `q` affine branches of slope `+-q`. All arithmetic is
//! rational, so fixed-point equations are decided by equality, never by
//! tolerance.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graph::{EdgeId, SignedEdge, VertexId};
use crate::map::VertexMap;
use crate::markov::{build_omg, Arc, Walk};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DynamicsError {
    #[error("walk enumeration exceeded the cap of {cap}")]
    EnumerationCapExceeded { cap: usize },
    #[error("the point is not fixed by the requested power of the map")]
    NotPeriodic,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// An exact position on the geometric realization: a vertex, or an interior
/// point of an edge at a coordinate strictly between 0 and 1. Coordinates 0
/// and 1 are always stored as vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum GraphPoint {
    Vertex(VertexId),
    Interior {
        edge: EdgeId,
        coordinate: BigRational,
    },
}

impl GraphPoint {
    pub fn interior(edge: EdgeId, coordinate: BigRational) -> Self {
        assert!(
            coordinate > BigRational::zero() && coordinate < BigRational::one(),
            "interior coordinates lie strictly between 0 and 1"
        );
        GraphPoint::Interior { edge, coordinate }
    }
}

impl fmt::Display for GraphPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphPoint::Vertex(v) => write!(f, "v{v}"),
            GraphPoint::Interior { edge, coordinate } => write!(f, "(E{edge}, {coordinate})"),
        }
    }
}

impl fmt::Debug for GraphPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl PartialOrd for GraphPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GraphPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        use GraphPoint::*;
        match (self, other) {
            (Vertex(a), Vertex(b)) => a.cmp(b),
            (Vertex(_), Interior { .. }) => Ordering::Less,
            (Interior { .. }, Vertex(_)) => Ordering::Greater,
            (
                Interior { edge: e1, coordinate: c1 },
                Interior { edge: e2, coordinate: c2 },
            ) => e1.cmp(e2).then_with(|| c1.cmp(c2)),
        }
    }
}

/// One affine piece of the map on an edge: the `index`-th subinterval
/// `[lo, hi]` of `edge` maps onto the full target edge with integer slope
/// `+-q` (positive iff the target step is positively oriented).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineBranch {
    pub edge: EdgeId,
    pub index: usize,
    pub lo: BigRational,
    pub hi: BigRational,
    pub target: SignedEdge,
    pub slope: i64,
}

impl AffineBranch {
    /// Intercept of the affine formula `y = slope * x + intercept` mapping
    /// the subinterval onto the target edge's own [0, 1] coordinate.
    pub fn intercept(&self) -> i64 {
        if self.slope > 0 {
            -(self.index as i64 - 1)
        } else {
            self.index as i64
        }
    }

    pub fn apply(&self, x: &BigRational) -> BigRational {
        BigRational::from(BigInt::from(self.slope)) * x
            + BigRational::from(BigInt::from(self.intercept()))
    }
}

/// The affine branches of the map on edge `e`, in subinterval order. An
/// image path of length `q` yields `q` branches of width `1/q`.
pub fn branches(m: &VertexMap, e: EdgeId) -> Vec<AffineBranch> {
    let image = m.image_of_edge(e);
    let q = image.len() as i64;
    image
        .steps()
        .iter()
        .enumerate()
        .map(|(i, &step)| {
            let index = i + 1;
            AffineBranch {
                edge: e,
                index,
                lo: rat(index as i64 - 1, q),
                hi: rat(index as i64, q),
                target: step,
                slope: if step.positive { q } else { -q },
            }
        })
        .collect()
}

/// The branch matching one arc of the Oriented Markov Graph.
pub fn branch_for_arc(m: &VertexMap, arc: &Arc) -> AffineBranch {
    let image = m.image_of_edge(arc.from);
    let q = image.len() as i64;
    let step = image.steps()[arc.pos - 1];
    debug_assert_eq!(step.edge, arc.to);
    debug_assert_eq!(step.positive, arc.positive);
    AffineBranch {
        edge: arc.from,
        index: arc.pos,
        lo: rat(arc.pos as i64 - 1, q),
        hi: rat(arc.pos as i64, q),
        target: step,
        slope: if step.positive { q } else { -q },
    }
}

/// One application of the map to a canonical point. Vertices move by theta;
/// interior points move through their branch, and landings on a coordinate
/// of 0 or 1 are canonicalized back to vertices.
pub fn evaluate(m: &VertexMap, x: &GraphPoint) -> GraphPoint {
    match x {
        GraphPoint::Vertex(v) => GraphPoint::Vertex(m.theta().apply(*v)),
        GraphPoint::Interior { edge, coordinate } => {
            let image = m.image_of_edge(*edge);
            let q = BigInt::from(image.len());
            let scaled = coordinate * BigRational::from(q);
            if scaled.is_integer() {
                // Exactly on a branch boundary: the image is the vertex
                // between the two adjacent image steps.
                let k: usize = scaled
                    .to_integer()
                    .try_into()
                    .expect("branch index fits in usize");
                let step = image.steps()[k - 1];
                return GraphPoint::Vertex(m.graph().terminal(step));
            }
            let k: usize = scaled.floor().to_integer().try_into().unwrap();
            let branch = &branches(m, *edge)[k];
            let y = branch.apply(coordinate);
            debug_assert!(y > BigRational::zero() && y < BigRational::one());
            GraphPoint::Interior {
                edge: branch.target.edge,
                coordinate: y,
            }
        }
    }
}

/// A set of points fixed by some power of the map: an isolated point, a
/// whole vertex, or a closed interval fixed pointwise (a slope-1 branch
/// composition).
#[derive(Clone, PartialEq, Eq)]
pub enum FixedLocus {
    Vertex(VertexId),
    Point {
        edge: EdgeId,
        coordinate: BigRational,
    },
    Interval {
        edge: EdgeId,
        lo: BigRational,
        hi: BigRational,
    },
}

impl FixedLocus {
    /// A single point inside the locus; intervals report their midpoint.
    pub fn representative(&self) -> GraphPoint {
        match self {
            FixedLocus::Vertex(v) => GraphPoint::Vertex(*v),
            FixedLocus::Point { edge, coordinate } => GraphPoint::Interior {
                edge: *edge,
                coordinate: coordinate.clone(),
            },
            FixedLocus::Interval { edge, lo, hi } => GraphPoint::Interior {
                edge: *edge,
                coordinate: (lo + hi) / rat(2, 1),
            },
        }
    }
}

impl fmt::Display for FixedLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedLocus::Vertex(v) => write!(f, "v{v}"),
            FixedLocus::Point { edge, coordinate } => write!(f, "(E{edge}, {coordinate})"),
            FixedLocus::Interval { edge, lo, hi } => write!(f, "[E{edge}, {lo}..{hi}]"),
        }
    }
}

impl fmt::Debug for FixedLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl PartialOrd for FixedLocus {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FixedLocus {
    fn cmp(&self, other: &Self) -> Ordering {
        fn key(l: &FixedLocus) -> (u8, usize, BigRational, BigRational) {
            match l {
                FixedLocus::Vertex(v) => (0, *v, BigRational::zero(), BigRational::zero()),
                FixedLocus::Point { edge, coordinate } => {
                    (1, *edge, coordinate.clone(), BigRational::zero())
                }
                FixedLocus::Interval { edge, lo, hi } => (2, *edge, lo.clone(), hi.clone()),
            }
        }
        key(self).cmp(&key(other))
    }
}

/// The full composition of branches along a walk: an affine map
/// `x -> slope * x + offset` with integer coefficients, mapping `domain`
/// (a closed subinterval of the walk's base edge) onto the final edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineComposite {
    pub slope: BigInt,
    pub offset: BigInt,
    pub domain_lo: BigRational,
    pub domain_hi: BigRational,
}

/// Composes the branches along a walk. Each pullback is a nondegenerate
/// closed subinterval because every branch maps its subinterval onto the
/// whole target edge.
pub fn walk_composition(m: &VertexMap, walk: &[Arc]) -> AffineComposite {
    assert!(!walk.is_empty());
    let mut slope = BigInt::one();
    let mut offset = BigInt::zero();
    let mut lo = BigRational::zero();
    let mut hi = BigRational::one();
    for arc in walk {
        let branch = branch_for_arc(m, arc);
        // Pull [branch.lo, branch.hi] back through x -> slope*x + offset.
        let a = BigRational::from(slope.clone());
        let b = BigRational::from(offset.clone());
        let u = (&branch.lo - &b) / &a;
        let v = (&branch.hi - &b) / &a;
        let (new_lo, new_hi) = if a.is_positive() { (u, v) } else { (v, u) };
        debug_assert!(new_lo >= lo && new_hi <= hi && new_lo < new_hi);
        lo = new_lo;
        hi = new_hi;
        offset = BigInt::from(branch.slope) * offset + BigInt::from(branch.intercept());
        slope *= BigInt::from(branch.slope);
    }
    AffineComposite {
        slope,
        offset,
        domain_lo: lo,
        domain_hi: hi,
    }
}

/// Solves `slope * x + offset = x` on the composed domain of a closed walk.
/// Returns the isolated solution, the whole fixed interval when the
/// composition is the identity, or nothing.
pub fn fixed_locus_of_walk(m: &VertexMap, walk: &Walk) -> Option<FixedLocus> {
    assert!(walk.is_closed());
    let comp = walk_composition(m, walk.arcs());
    let base = walk.base();
    if comp.slope.is_one() {
        if comp.offset.is_zero() {
            return Some(FixedLocus::Interval {
                edge: base,
                lo: comp.domain_lo,
                hi: comp.domain_hi,
            });
        }
        return None;
    }
    let x = BigRational::new(comp.offset, BigInt::one() - comp.slope);
    if x < comp.domain_lo || x > comp.domain_hi {
        return None;
    }
    if x.is_zero() {
        let (a, _) = m.graph().endpoints(base);
        return Some(FixedLocus::Vertex(a));
    }
    if x.is_one() {
        let (_, b) = m.graph().endpoints(base);
        return Some(FixedLocus::Vertex(b));
    }
    Some(FixedLocus::Point {
        edge: base,
        coordinate: x,
    })
}

/// Every locus fixed by the p-th power of the map: solutions of all closed
/// length-p walk compositions plus the vertices fixed by theta^p. Results
/// are deduplicated and sorted. Fails when more than `cap` closed walks
/// would have to be enumerated.
pub fn fixed_points_of_power(
    m: &VertexMap,
    p: u64,
    cap: usize,
) -> Result<Vec<FixedLocus>, DynamicsError> {
    assert!(p >= 1);
    let omg = build_omg(m);
    let mut loci: BTreeSet<FixedLocus> = BTreeSet::new();
    let mut visited = 0usize;
    for base in 1..=omg.edge_count() {
        let complete = omg.for_each_walk(base, p as usize, &mut |arcs| {
            if arcs.last().unwrap().to != base {
                return true;
            }
            visited += 1;
            if visited > cap {
                return false;
            }
            let walk = Walk::new(arcs.to_vec()).expect("enumerated arcs chain");
            if let Some(locus) = fixed_locus_of_walk(m, &walk) {
                loci.insert(locus);
            }
            true
        });
        if !complete {
            return Err(DynamicsError::EnumerationCapExceeded { cap });
        }
    }
    let theta_p = m.theta().power(p);
    for v in m.graph().vertices() {
        if theta_p.apply(v) == v {
            loci.insert(FixedLocus::Vertex(v));
        }
    }
    Ok(loci.into_iter().collect())
}

/// The smallest divisor `d` of `p` with `f^d(x) = x`, by exact iteration.
/// The precondition `f^p(x) = x` is checked and violations are reported.
pub fn minimal_period(m: &VertexMap, x: &GraphPoint, p: u64) -> Result<u64, DynamicsError> {
    assert!(p >= 1);
    let mut orbit = Vec::with_capacity(p as usize + 1);
    orbit.push(x.clone());
    for _ in 0..p {
        let next = evaluate(m, orbit.last().unwrap());
        orbit.push(next);
    }
    if orbit[p as usize] != *x {
        return Err(DynamicsError::NotPeriodic);
    }
    for d in 1..=p {
        if p % d == 0 && orbit[d as usize] == *x {
            return Ok(d);
        }
    }
    unreachable!("d = p always satisfies the check")
}

/// Witnesses of each minimal period up to `max_period`.
#[derive(Clone, Debug)]
pub struct PeriodicCensus {
    pub max_period: u64,
    pub by_period: BTreeMap<u64, Vec<FixedLocus>>,
}

impl PeriodicCensus {
    pub fn keys(&self) -> BTreeSet<u64> {
        self.by_period.keys().copied().collect()
    }

    pub fn witnesses(&self, period: u64) -> &[FixedLocus] {
        self.by_period.get(&period).map(|v| v.as_slice()).unwrap_or(&[])
    }
}

/// Collects the fixed loci of every power `1..=max_period`, refines each by
/// its exact minimal period, and buckets the results.
///
/// Points are refined by direct iteration. An interval fixed by `f^p` is
/// assigned the smallest divisor `d` of `p` at which the fixed intervals of
/// `f^d` cover it (then `f^d` is the identity on all of it); the finitely
/// many interior points with even smaller periods surface separately at
/// their own powers.
pub fn census(m: &VertexMap, max_period: u64, cap: usize) -> Result<PeriodicCensus, DynamicsError> {
    assert!(max_period >= 1);
    let mut loci_by_power: BTreeMap<u64, Vec<FixedLocus>> = BTreeMap::new();
    for p in 1..=max_period {
        loci_by_power.insert(p, fixed_points_of_power(m, p, cap)?);
    }

    let covered = |edge: EdgeId, lo: &BigRational, hi: &BigRational, d: u64| -> bool {
        let mut pieces: Vec<(BigRational, BigRational)> = loci_by_power[&d]
            .iter()
            .filter_map(|l| match l {
                FixedLocus::Interval { edge: e, lo: a, hi: b } if *e == edge => {
                    Some((a.clone(), b.clone()))
                }
                _ => None,
            })
            .collect();
        pieces.sort();
        let mut reach = lo.clone();
        for (a, b) in pieces {
            if a > reach {
                return false;
            }
            if b > reach {
                reach = b;
            }
            if reach >= *hi {
                return true;
            }
        }
        false
    };

    let mut buckets: BTreeMap<u64, BTreeSet<FixedLocus>> = BTreeMap::new();
    for (&p, loci) in &loci_by_power {
        for locus in loci {
            match locus {
                FixedLocus::Vertex(v) => {
                    let d = m.theta().cycle_length_of(*v);
                    buckets.entry(d).or_default().insert(locus.clone());
                }
                FixedLocus::Point { edge, coordinate } => {
                    let x = GraphPoint::Interior {
                        edge: *edge,
                        coordinate: coordinate.clone(),
                    };
                    let d = minimal_period(m, &x, p).expect("solved fixed points are periodic");
                    buckets.entry(d).or_default().insert(locus.clone());
                }
                FixedLocus::Interval { edge, lo, hi } => {
                    let d = (1..=p)
                        .filter(|d| p % d == 0)
                        .find(|&d| covered(*edge, lo, hi, d))
                        .expect("the interval covers itself at d = p");
                    buckets.entry(d).or_default().insert(locus.clone());
                }
            }
        }
    }

    // Drop points that lie inside an interval of the same period.
    let mut by_period: BTreeMap<u64, Vec<FixedLocus>> = BTreeMap::new();
    for (d, set) in buckets {
        let intervals: Vec<(EdgeId, BigRational, BigRational)> = set
            .iter()
            .filter_map(|l| match l {
                FixedLocus::Interval { edge, lo, hi } => Some((*edge, lo.clone(), hi.clone())),
                _ => None,
            })
            .collect();
        let kept: Vec<FixedLocus> = set
            .into_iter()
            .filter(|l| match l {
                FixedLocus::Point { edge, coordinate } => !intervals
                    .iter()
                    .any(|(e, lo, hi)| e == edge && lo <= coordinate && coordinate <= hi),
                _ => true,
            })
            .collect();
        if !kept.is_empty() {
            by_period.insert(d, kept);
        }
    }
    Ok(PeriodicCensus {
        max_period,
        by_period,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::map::Permutation;
    use crate::markov::SignFilter;
    use crate::sample::{self, path};

    const DEFAULT_CAP_FOR_TESTS: usize = 1_000_000;

    fn flip_map() -> VertexMap {
        // Single edge 1 -> 2, theta = (1 2), image -E1: f(x) = 1 - x.
        let g = Graph::new(2, &[(1, 1, 2)]).unwrap();
        let theta = Permutation::from_cycles(2, &[vec![1, 2]]).unwrap();
        VertexMap::new(g, theta, vec![path(&[-1])]).unwrap()
    }

    fn identity_edge_map() -> VertexMap {
        let g = Graph::new(2, &[(1, 1, 2)]).unwrap();
        VertexMap::new(g, Permutation::identity(2), vec![path(&[1])]).unwrap()
    }

    #[test]
    fn branches_of_the_sample_map() {
        let m = sample::ghat_map();
        let b1 = branches(&m, 1);
        assert_eq!(b1.len(), 1);
        assert_eq!(b1[0].slope, 1);
        assert_eq!(b1[0].lo, BigRational::zero());
        assert_eq!(b1[0].hi, BigRational::one());
        assert_eq!(b1[0].target, crate::graph::SignedEdge::pos(3));

        let b3 = branches(&m, 3);
        assert_eq!(b3.len(), 1);
        assert_eq!(b3[0].slope, -1);

        let b5 = branches(&m, 5);
        assert_eq!(b5.len(), 9);
        let slopes: Vec<i64> = b5.iter().map(|b| b.slope).collect();
        assert_eq!(slopes, vec![9, 9, 9, -9, -9, -9, -9, 9, -9]);
        for (i, b) in b5.iter().enumerate() {
            assert_eq!(b.lo, rat(i as i64, 9));
            assert_eq!(b.hi, rat(i as i64 + 1, 9));
        }
    }

    #[test]
    fn evaluate_vertices_and_interior_points() {
        let m = sample::ghat_map();
        assert_eq!(
            evaluate(&m, &GraphPoint::Vertex(1)),
            GraphPoint::Vertex(2)
        );
        assert_eq!(
            evaluate(&m, &GraphPoint::interior(1, rat(1, 2))),
            GraphPoint::interior(3, rat(1, 2))
        );
        assert_eq!(
            evaluate(&m, &GraphPoint::interior(5, rat(1, 18))),
            GraphPoint::interior(2, rat(1, 2))
        );
    }

    #[test]
    fn evaluate_branch_boundary_lands_on_a_vertex() {
        let m = sample::ghat_map();
        // x = 1/9 on E5 is the boundary after step E2; E2 ends at v1.
        assert_eq!(
            evaluate(&m, &GraphPoint::interior(5, rat(1, 9))),
            GraphPoint::Vertex(1)
        );
    }

    #[test]
    fn fixed_points_of_the_sample_map() {
        let m = sample::ghat_map();
        let loci = fixed_points_of_power(&m, 1, 10_000).unwrap();
        assert_eq!(
            loci,
            vec![
                FixedLocus::Point { edge: 2, coordinate: rat(1, 4) },
                FixedLocus::Point { edge: 5, coordinate: rat(9, 10) },
                FixedLocus::Point { edge: 6, coordinate: rat(1, 2) },
            ]
        );
    }

    #[test]
    fn identity_edge_is_a_fixed_interval() {
        let m = identity_edge_map();
        let loci = fixed_points_of_power(&m, 1, 100).unwrap();
        assert_eq!(
            loci,
            vec![
                FixedLocus::Vertex(1),
                FixedLocus::Vertex(2),
                FixedLocus::Interval {
                    edge: 1,
                    lo: BigRational::zero(),
                    hi: BigRational::one(),
                },
            ]
        );
    }

    #[test]
    fn all_vertices_fixed_at_the_permutation_order() {
        let m = sample::ghat_map();
        let loci = fixed_points_of_power(&m, 5, 100_000).unwrap();
        for v in 1..=5 {
            assert!(loci.contains(&FixedLocus::Vertex(v)));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let m = sample::ghat_map();
        assert_eq!(
            fixed_points_of_power(&m, 6, 3).unwrap_err(),
            DynamicsError::EnumerationCapExceeded { cap: 3 }
        );
    }

    #[test]
    fn minimal_period_of_vertices() {
        let m = sample::ghat_map();
        for v in 1..=5 {
            assert_eq!(minimal_period(&m, &GraphPoint::Vertex(v), 5).unwrap(), 5);
        }
        assert_eq!(
            minimal_period(&m, &GraphPoint::Vertex(1), 3).unwrap_err(),
            DynamicsError::NotPeriodic
        );
    }

    #[test]
    fn minimal_period_of_a_fixed_point() {
        let m = sample::ghat_map();
        let x = GraphPoint::interior(2, rat(1, 4));
        assert_eq!(minimal_period(&m, &x, 1).unwrap(), 1);
        assert_eq!(minimal_period(&m, &x, 5).unwrap(), 1);
    }

    #[test]
    fn minimal_period_on_a_doubled_orbit() {
        let m = flip_map();
        let x = GraphPoint::interior(1, rat(1, 3));
        assert_eq!(minimal_period(&m, &x, 4).unwrap(), 2);
    }

    #[test]
    fn census_of_the_flip_map() {
        let m = flip_map();
        let c = census(&m, 2, 1000).unwrap();
        assert_eq!(c.keys(), BTreeSet::from([1, 2]));
        // Period 1: the midpoint. Period 2: both vertices and the fixed
        // interval of f^2.
        assert_eq!(
            c.witnesses(1),
            &[FixedLocus::Point { edge: 1, coordinate: rat(1, 2) }]
        );
        assert!(c.witnesses(2).contains(&FixedLocus::Vertex(1)));
        assert!(c.witnesses(2).contains(&FixedLocus::Vertex(2)));
    }

    #[test]
    fn census_of_identity_edge_reports_period_one_only() {
        let m = identity_edge_map();
        let c = census(&m, 2, 1000).unwrap();
        assert_eq!(c.keys(), BTreeSet::from([1]));
    }

    #[test]
    fn census_of_the_sample_map() {
        let m = sample::ghat_map();
        let c = census(&m, 10, DEFAULT_CAP_FOR_TESTS).unwrap();
        for p in [1u64, 2, 4, 5, 6, 7, 8, 9, 10] {
            assert!(c.keys().contains(&p), "missing period {p}");
        }
        assert!(c.witnesses(5).contains(&FixedLocus::Vertex(1)));
    }

    #[test]
    fn nonrepetitive_walks_yield_points_of_exact_period() {
        let m = sample::ghat_map();
        let omg = build_omg(&m);
        // Negative walks at the power-of-two lengths.
        for p in [1u64, 2, 4, 8] {
            let w = omg.find_negative_closed_walk(p as usize).unwrap();
            let locus = fixed_locus_of_walk(&m, &w).expect("negative walks pin a fixed point");
            let x = locus.representative();
            assert_eq!(minimal_period(&m, &x, p).unwrap(), p, "period {p}");
        }
        // Constructed non-repetitive walks for the remaining periods.
        for p in [6u64, 7] {
            let w = crate::markov::construct_nonrepetitive_walk(&omg, 0, 5, p).unwrap();
            let locus = fixed_locus_of_walk(&m, &w).expect("onto compositions have fixed points");
            let x = locus.representative();
            assert_eq!(minimal_period(&m, &x, p).unwrap(), p, "period {p}");
        }
    }

    #[test]
    fn composition_domain_is_pinned_by_the_walk() {
        let m = sample::ghat_map();
        let omg = build_omg(&m);
        let w = omg
            .closed_walks(6, 1, SignFilter::Positive, 1)
            .walks
            .into_iter()
            .next()
            .unwrap();
        let comp = walk_composition(&m, w.arcs());
        assert_eq!(comp.slope, BigInt::from(3));
        assert_eq!(comp.domain_lo, rat(1, 3));
        assert_eq!(comp.domain_hi, rat(2, 3));
    }
}
