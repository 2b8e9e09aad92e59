//! The three period-forcing orders - Sharkovsky, the tree order, and the
//! HTC order - behind a common trait, registered by name for runtime
//! selection.
//!
//! Conventions: the Sharkovsky forced set is strictly below `v` (the
//! comparator is irreflexive); the HTC and tree sets list every period the
//! corresponding clauses guarantee, which includes `v` itself whenever a
//! clause covers it. Enumeration always demands an explicit bound.

use std::collections::BTreeSet;
use std::fmt;

/// Writes `n = 2^k * s` with `s` odd, returning `(k, s)`.
pub fn decompose(n: u64) -> (u32, u64) {
    assert!(n >= 1);
    let k = n.trailing_zeros();
    (k, n >> k)
}

/// Strict Sharkovsky comparison `a` before `b`:
/// powers of two ascend first, then for fixed odd part level the higher
/// power-of-two levels precede, larger odd factors first within a level.
pub fn sharkovsky_less(a: u64, b: u64) -> bool {
    assert!(a >= 1 && b >= 1);
    if a == b {
        return false;
    }
    let (ka, sa) = decompose(a);
    let (kb, sb) = decompose(b);
    match (sa == 1, sb == 1) {
        (true, true) => ka < kb,
        (true, false) => true,
        (false, true) => false,
        (false, false) => {
            if ka != kb {
                ka > kb
            } else {
                sa > sb
            }
        }
    }
}

/// The strictly decreasing sequence obtained by repeatedly clearing the
/// lowest set bit of `v`, ending at 0. Its length equals `popcount(v)`.
pub fn remove_ones_from_right(v: u64) -> Vec<u64> {
    assert!(v >= 1);
    let mut out = Vec::with_capacity(v.count_ones() as usize);
    let mut x = v;
    while x != 0 {
        x &= x - 1;
        out.push(x);
    }
    out
}

/// Enumerated members of a forcing rule applied to `v`, up to `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedSet {
    pub v: u64,
    pub rule: &'static str,
    pub bound: u64,
    pub members: BTreeSet<u64>,
}

impl ForcedSet {
    /// Membership for `m <= bound`; use the order's predicate beyond that.
    pub fn contains(&self, m: u64) -> bool {
        debug_assert!(m <= self.bound);
        self.members.contains(&m)
    }

    /// Members strictly below `v`, ascending.
    pub fn below_v(&self) -> Vec<u64> {
        self.members.iter().copied().filter(|&m| m < self.v).collect()
    }
}

impl fmt::Display for ForcedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(v = {}, bound = {}):", self.rule, self.v, self.bound)?;
        for m in &self.members {
            write!(f, " {m}")?;
        }
        Ok(())
    }
}

/// A period-forcing order: a decidable membership predicate plus bounded
/// enumeration. Implementations are selected by name at runtime.
pub trait ForcingOrder: Sync {
    fn name(&self) -> &'static str;

    /// Whether a map governed by this order with vertex period `v` is
    /// guaranteed a point of minimal period `m`.
    fn is_forced(&self, m: u64, v: u64) -> bool;

    /// Every forced period up to `bound`, built by clause enumeration.
    fn forced_set(&self, v: u64, bound: u64) -> ForcedSet;
}

/// Powers of two up to `bound`, starting at `1 = 2^0`.
fn powers_of_two(bound: u64) -> impl Iterator<Item = u64> {
    std::iter::successors(Some(1u64), |&x| x.checked_mul(2)).take_while(move |&x| x <= bound)
}

pub struct Sharkovsky;

impl ForcingOrder for Sharkovsky {
    fn name(&self) -> &'static str {
        "sharkovsky"
    }

    fn is_forced(&self, m: u64, v: u64) -> bool {
        sharkovsky_less(m, v)
    }

    // Clause enumeration, independent of the comparator: the two routes are
    // cross-checked in the test suite.
    fn forced_set(&self, v: u64, bound: u64) -> ForcedSet {
        let (k, s) = decompose(v);
        let mut members = BTreeSet::new();
        if s == 1 {
            for (l, p) in powers_of_two(bound).enumerate() {
                if (l as u32) < k {
                    members.insert(p);
                }
            }
        } else {
            members.extend(powers_of_two(bound));
            // 2^k * r for odd r > s.
            let mut r = s + 2;
            while (1 << k) * r <= bound {
                members.insert((1 << k) * r);
                r += 2;
            }
            // 2^l * r for l > k and odd r > 1.
            let mut l = k + 1;
            while (1u64 << l) * 3 <= bound {
                let mut r = 3u64;
                while (1 << l) * r <= bound {
                    members.insert((1 << l) * r);
                    r += 2;
                }
                l += 1;
            }
        }
        ForcedSet {
            v,
            rule: self.name(),
            bound,
            members,
        }
    }
}

pub struct HtcOrder;

impl ForcingOrder for HtcOrder {
    fn name(&self) -> &'static str {
        "htc"
    }

    fn is_forced(&self, m: u64, v: u64) -> bool {
        let (k, s) = decompose(v);
        let (a, b) = decompose(m);
        if s == 1 {
            return b == 1 && a <= k;
        }
        if b == 1 {
            return true;
        }
        (a == k && b >= s) || (a > k && (1u64 << (a - k)) * b > s)
    }

    fn forced_set(&self, v: u64, bound: u64) -> ForcedSet {
        let (k, s) = decompose(v);
        let mut members = BTreeSet::new();
        if s == 1 {
            for (l, p) in powers_of_two(bound).enumerate() {
                if (l as u32) <= k {
                    members.insert(p);
                }
            }
        } else {
            members.extend(powers_of_two(bound));
            // 2^k * r for odd r >= s.
            let mut r = s;
            while (1 << k) * r <= bound {
                members.insert((1 << k) * r);
                r += 2;
            }
            // 2^l * r for l > k, odd r > 1, and 2^(l-k) * r > s.
            let mut l = k + 1;
            while (1u64 << l) * 3 <= bound {
                let mut r = 3u64;
                while (1 << l) * r <= bound {
                    if (1u64 << (l - k)) * r > s {
                        members.insert((1 << l) * r);
                    }
                    r += 2;
                }
                l += 1;
            }
        }
        ForcedSet {
            v,
            rule: self.name(),
            bound,
            members,
        }
    }
}

pub struct TreeOrder;

impl ForcingOrder for TreeOrder {
    fn name(&self) -> &'static str {
        "tree"
    }

    fn is_forced(&self, m: u64, v: u64) -> bool {
        HtcOrder.is_forced(m, v) || remove_ones_from_right(v).contains(&m)
    }

    fn forced_set(&self, v: u64, bound: u64) -> ForcedSet {
        let mut set = HtcOrder.forced_set(v, bound);
        set.rule = self.name();
        set.members.extend(
            remove_ones_from_right(v)
                .into_iter()
                .filter(|&m| m != 0 && m <= bound),
        );
        set
    }
}

static ORDERS: [&dyn ForcingOrder; 3] = [&Sharkovsky, &TreeOrder, &HtcOrder];

/// Every registered order.
pub fn orders() -> &'static [&'static dyn ForcingOrder] {
    &ORDERS
}

/// Looks up an order by its registered name.
pub fn order_by_name(name: &str) -> Option<&'static dyn ForcingOrder> {
    ORDERS.iter().copied().find(|o| o.name() == name)
}

pub fn sharkovsky_forced(v: u64, bound: u64) -> ForcedSet {
    Sharkovsky.forced_set(v, bound)
}

pub fn htc_forced(v: u64, bound: u64) -> ForcedSet {
    HtcOrder.forced_set(v, bound)
}

pub fn tree_forced(v: u64, bound: u64) -> ForcedSet {
    TreeOrder.forced_set(v, bound)
}

/// The three forced sets side by side. `v` itself is excluded from the
/// difference summaries: the rules disagree only on whether to list the
/// vertex orbit's own period.
#[derive(Clone, Debug)]
pub struct OrderComparison {
    pub v: u64,
    pub bound: u64,
    pub sharkovsky: ForcedSet,
    pub tree: ForcedSet,
    pub htc: ForcedSet,
}

impl OrderComparison {
    /// Members of `rule_a` minus members of `rule_b`, ignoring `v` itself.
    pub fn difference(&self, a: &ForcedSet, b: &ForcedSet) -> Vec<u64> {
        a.members
            .difference(&b.members)
            .copied()
            .filter(|&m| m != self.v)
            .collect()
    }

    /// True when all three sets agree once `v` itself is set aside.
    pub fn identical_excluding_v(&self) -> bool {
        self.difference(&self.sharkovsky, &self.tree).is_empty()
            && self.difference(&self.tree, &self.sharkovsky).is_empty()
            && self.difference(&self.tree, &self.htc).is_empty()
            && self.difference(&self.htc, &self.tree).is_empty()
    }
}

pub fn compare_orders(v: u64, bound: u64) -> OrderComparison {
    OrderComparison {
        v,
        bound,
        sharkovsky: sharkovsky_forced(v, bound),
        tree: tree_forced(v, bound),
        htc: htc_forced(v, bound),
    }
}
