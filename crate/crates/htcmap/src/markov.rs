//! Oriented Markov matrices and graphs: exact integer matrix algebra,
//! signed closed-walk enumeration, prime decomposition, and the
//! non-repetitive closed-walk construction.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::EdgeId;
use crate::map::VertexMap;

/// Default bound on the number of walks an enumeration will visit.
pub const DEFAULT_WALK_CAP: usize = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MarkovError {
    #[error("matrix dimensions {a}x{a} and {b}x{b} do not match")]
    DimensionMismatch { a: usize, b: usize },
    #[error("matrix rows have unequal lengths")]
    RaggedRows,
    #[error("no edge carries negative closed walks of lengths {short} and {long}")]
    WalkNotFound { short: u64, long: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// A square integer matrix with arbitrary-precision entries. Row and column
/// indices are 0-based; row `i-1`, column `j-1` correspond to edges `i`, `j`.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, MarkovError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(MarkovError::RaggedRows);
        }
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| BigInt::from(x)))
            .collect();
        Ok(IntMatrix { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.n + j] = value;
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, MarkovError> {
        if self.n != other.n {
            return Err(MarkovError::DimensionMismatch {
                a: self.n,
                b: other.n,
            });
        }
        let n = self.n;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `k`-th power; `pow(0)` is the identity.
    pub fn pow(&self, k: u64) -> IntMatrix {
        let mut result = IntMatrix::identity(self.n);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base).expect("same dimension");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same dimension");
            }
        }
        result
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Matrix times an integer column vector.
    pub fn mul_vec(&self, v: &[i64]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.get(i, j) * BigInt::from(v[j]))
                    .sum()
            })
            .collect()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strings: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = strings.iter().map(|s| s.len()).max().unwrap_or(1);
        for i in 0..self.n {
            write!(f, "[")?;
            for j in 0..self.n {
                write!(f, " {:>width$}", strings[i * self.n + j], width = width)?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The Oriented Markov Matrix: entry `(i, j)` is the signed number of times
/// edge `j`'s image covers edge `i`; column `j` is the chain vector of the
/// image of edge `j`.
pub fn omm(m: &VertexMap) -> IntMatrix {
    let n = m.graph().edge_count();
    let mut out = IntMatrix::zero(n);
    for j in m.graph().edge_ids() {
        let chain = m.graph().chain_vector(m.image_of_edge(j));
        for (i, &c) in chain.iter().enumerate() {
            if c != 0 {
                out.set(i, j - 1, BigInt::from(c));
            }
        }
    }
    out
}

/// One signed arc of the Oriented Markov Graph: the `pos`-th subinterval of
/// edge `from` maps onto edge `to`, preserving orientation iff `positive`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arc {
    pub from: EdgeId,
    pub to: EdgeId,
    pub positive: bool,
    pub pos: usize,
}

/// Directed multigraph on the edges of the underlying graph, one arc per
/// covering subinterval. Arcs out of an edge are ordered by their position
/// in the image path.
#[derive(Clone, Debug)]
pub struct OrientedMarkovGraph {
    arcs: Vec<Vec<Arc>>,
}

pub fn build_omg(m: &VertexMap) -> OrientedMarkovGraph {
    let arcs = m
        .graph()
        .edge_ids()
        .map(|e| {
            m.image_of_edge(e)
                .steps()
                .iter()
                .enumerate()
                .map(|(k, s)| Arc {
                    from: e,
                    to: s.edge,
                    positive: s.positive,
                    pos: k + 1,
                })
                .collect()
        })
        .collect();
    OrientedMarkovGraph { arcs }
}

/// A walk in the OMG: a chained arc sequence. Closed when it returns to its
/// base edge, orientation discounted; its sign is the product of arc signs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    arcs: Vec<Arc>,
}

impl Walk {
    pub fn new(arcs: Vec<Arc>) -> Result<Self, MarkovError> {
        if arcs.is_empty() {
            return Err(MarkovError::InvalidParameters(
                "walks have at least one arc".into(),
            ));
        }
        for w in arcs.windows(2) {
            if w[0].to != w[1].from {
                return Err(MarkovError::InvalidParameters(
                    "arcs do not chain".into(),
                ));
            }
        }
        Ok(Walk { arcs })
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn base(&self) -> EdgeId {
        self.arcs[0].from
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_closed(&self) -> bool {
        self.arcs.last().unwrap().to == self.base()
    }

    /// +1 or -1: the product of the arc signs.
    pub fn sign(&self) -> i8 {
        if self.arcs.iter().filter(|a| !a.positive).count() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Concatenation of two closed walks at the same base.
    pub fn concat(&self, other: &Walk) -> Walk {
        assert!(self.is_closed() && other.base() == self.base());
        let mut arcs = self.arcs.clone();
        arcs.extend_from_slice(&other.arcs);
        Walk { arcs }
    }

    pub fn repeated(&self, k: usize) -> Walk {
        assert!(self.is_closed() && k >= 1);
        let mut arcs = Vec::with_capacity(self.arcs.len() * k);
        for _ in 0..k {
            arcs.extend_from_slice(&self.arcs);
        }
        Walk { arcs }
    }

    /// True iff the walk is `d >= 2` concatenated copies of a shorter closed
    /// walk; every divisor of the length is checked.
    pub fn is_repetitive(&self) -> bool {
        let len = self.arcs.len();
        for d in 1..len {
            if len % d != 0 {
                continue;
            }
            if (d..len).all(|i| self.arcs[i] == self.arcs[i % d]) {
                return true;
            }
        }
        false
    }

    /// Splits a closed walk at every interior return to its base edge
    /// (orientation discounted). Each part is prime and the concatenation of
    /// the parts reproduces the walk.
    pub fn prime_parts(&self) -> Vec<Walk> {
        assert!(self.is_closed());
        let base = self.base();
        let mut parts = Vec::new();
        let mut start = 0;
        for (i, arc) in self.arcs.iter().enumerate() {
            if arc.to == base {
                parts.push(Walk {
                    arcs: self.arcs[start..=i].to_vec(),
                });
                start = i + 1;
            }
        }
        parts
    }
}

impl fmt::Debug for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{}", self.base())?;
        for a in &self.arcs {
            write!(
                f,
                " -{}{}-> E{}",
                if a.positive { "+" } else { "-" },
                a.pos,
                a.to
            )?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignFilter {
    Any,
    Positive,
    Negative,
}

impl SignFilter {
    fn accepts(self, sign: i8) -> bool {
        match self {
            SignFilter::Any => true,
            SignFilter::Positive => sign > 0,
            SignFilter::Negative => sign < 0,
        }
    }
}

/// Enumeration result, flagged when the cap cut it short.
#[derive(Clone, Debug)]
pub struct WalkSet {
    pub walks: Vec<Walk>,
    pub truncated: bool,
}

impl OrientedMarkovGraph {
    pub fn edge_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs_from(&self, e: EdgeId) -> &[Arc] {
        &self.arcs[e - 1]
    }

    /// Depth-first visit of every walk of exactly `len` arcs starting at
    /// `base`, in deterministic arc order. The callback returns `false` to
    /// stop the enumeration early; the function reports whether the
    /// enumeration ran to completion.
    pub fn for_each_walk(
        &self,
        base: EdgeId,
        len: usize,
        visit: &mut dyn FnMut(&[Arc]) -> bool,
    ) -> bool {
        assert!(len >= 1);
        let mut stack: Vec<Arc> = Vec::with_capacity(len);
        self.dfs(base, len, &mut stack, visit)
    }

    fn dfs(
        &self,
        current: EdgeId,
        remaining: usize,
        stack: &mut Vec<Arc>,
        visit: &mut dyn FnMut(&[Arc]) -> bool,
    ) -> bool {
        if remaining == 0 {
            return visit(stack);
        }
        for &arc in self.arcs_from(current) {
            stack.push(arc);
            let keep_going = self.dfs(arc.to, remaining - 1, stack, visit);
            stack.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }

    /// All closed walks of length `len` at `base` passing the sign filter,
    /// in depth-first order, truncated at `cap`.
    pub fn closed_walks(
        &self,
        base: EdgeId,
        len: usize,
        filter: SignFilter,
        cap: usize,
    ) -> WalkSet {
        let mut walks = Vec::new();
        let mut truncated = false;
        self.for_each_walk(base, len, &mut |arcs| {
            if arcs.last().unwrap().to != base {
                return true;
            }
            let walk = Walk {
                arcs: arcs.to_vec(),
            };
            if !filter.accepts(walk.sign()) {
                return true;
            }
            if walks.len() == cap {
                truncated = true;
                return false;
            }
            walks.push(walk);
            true
        });
        WalkSet { walks, truncated }
    }

    /// First negative closed walk of the given length in the deterministic
    /// scan order over base edges.
    pub fn find_negative_closed_walk(&self, len: usize) -> Option<Walk> {
        for base in 1..=self.edge_count() {
            let set = self.closed_walks(base, len, SignFilter::Negative, 1);
            if let Some(w) = set.walks.into_iter().next() {
                return Some(w);
            }
        }
        None
    }

    /// Signed count of walks of length `len` from edge `from` to edge `to`,
    /// by explicit enumeration.
    pub fn signed_walk_count(&self, from: EdgeId, to: EdgeId, len: usize) -> i64 {
        let mut count = 0i64;
        self.for_each_walk(from, len, &mut |arcs| {
            if arcs.last().unwrap().to == to {
                let negatives = arcs.iter().filter(|a| !a.positive).count();
                count += if negatives % 2 == 0 { 1 } else { -1 };
            }
            true
        });
        count
    }
}

/// Builds a closed non-repetitive walk of length `2^k * r` for an HTC map
/// whose vertices form one orbit of length `2^k * s` (`s > 1` odd, `r > s`).
///
/// Procedure: find a base edge carrying negative closed walks `W1` of length
/// `2^k` and `W2` of length `2^k (s+1)`; concatenate `W1^(r-s-1) W2`; if the
/// result is repetitive, rebuild it from its prime parts - either by leading
/// with the single repeated prime and padding with copies of `W1`, or by
/// grouping the distinct primes by multiplicity.
pub fn construct_nonrepetitive_walk(
    omg: &OrientedMarkovGraph,
    k: u32,
    s: u64,
    r: u64,
) -> Result<Walk, MarkovError> {
    if s <= 1 || s % 2 == 0 {
        return Err(MarkovError::InvalidParameters(format!(
            "s must be odd and greater than 1, got {s}"
        )));
    }
    if r <= s {
        return Err(MarkovError::InvalidParameters(format!(
            "r must exceed s, got r = {r}, s = {s}"
        )));
    }
    let unit = 1usize << k;
    let long = unit * (s as usize + 1);
    let mut found: Option<(Walk, Walk)> = None;
    for base in 1..=omg.edge_count() {
        let short_walk = omg
            .closed_walks(base, unit, SignFilter::Negative, 1)
            .walks
            .into_iter()
            .next();
        let Some(w1) = short_walk else { continue };
        let long_walk = omg
            .closed_walks(base, long, SignFilter::Negative, 1)
            .walks
            .into_iter()
            .next();
        if let Some(w2) = long_walk {
            found = Some((w1, w2));
            break;
        }
    }
    let Some((w1, w2)) = found else {
        return Err(MarkovError::WalkNotFound {
            short: unit as u64,
            long: long as u64,
        });
    };

    let copies = (r - s - 1) as usize;
    let walk = if copies == 0 {
        w2.clone()
    } else {
        w1.repeated(copies).concat(&w2)
    };
    debug_assert_eq!(walk.len(), unit * r as usize);
    if !walk.is_repetitive() {
        return Ok(walk);
    }

    let parts = walk.prime_parts();
    let mut kinds: Vec<(Walk, usize)> = Vec::new();
    for p in &parts {
        match kinds.iter_mut().find(|(q, _)| q == p) {
            Some((_, count)) => *count += 1,
            None => kinds.push((p.clone(), 1)),
        }
    }

    let rebuilt = if kinds.len() == 1 {
        // A single prime repeated an odd number of times: lead with one copy
        // of the prime, then pad with the short negative walk.
        let prime = &kinds[0].0;
        assert_eq!(prime.len() % unit, 0, "prime length is a multiple of 2^k");
        let t = (prime.len() / unit) as u64;
        assert!(t < r);
        prime.concat(&w1.repeated((r - t) as usize))
    } else {
        // Group primes by kind: the shortest prime occurring in the leading
        // length-2^k block first (ties broken by walk order), the rest in
        // first-occurrence order.
        let lead_limit = if copies > 0 { unit } else { walk.len() };
        let mut offset = 0usize;
        let mut lead: Option<&Walk> = None;
        for p in &parts {
            if offset >= lead_limit {
                break;
            }
            if lead.map_or(true, |best| p.len() < best.len()) {
                lead = Some(p);
            }
            offset += p.len();
        }
        let lead = lead.expect("a closed walk has at least one prime part").clone();
        let mut arcs = Vec::with_capacity(walk.len());
        for _ in 0..kinds.iter().find(|(q, _)| *q == lead).unwrap().1 {
            arcs.extend_from_slice(lead.arcs());
        }
        for (kind, count) in &kinds {
            if *kind == lead {
                continue;
            }
            for _ in 0..*count {
                arcs.extend_from_slice(kind.arcs());
            }
        }
        Walk { arcs }
    };
    debug_assert_eq!(rebuilt.len(), unit * r as usize);
    assert!(
        !rebuilt.is_repetitive(),
        "rearranged prime walks cannot repeat"
    );
    Ok(rebuilt)
}
