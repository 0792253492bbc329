//! Uniform set families and their degree analytics.
//!
//! A [`SetFamily`] is a `k`-uniform family over `[n]`, kept sorted in colex
//! order with no duplicates. A [`TraceFamily`] holds the (generally
//! non-uniform) restrictions `A ∩ [l]`.

use crate::error::{Error, Result};
use crate::kset::KSet;

/// Capacity limit for upward closures: `2^l` subsets are materialized.
pub const MAX_CLOSURE_GROUND: usize = 22;

/// A `k`-uniform family of subsets of `[n]`. Members are stored strictly
/// increasing in colex order, so equality is structural.
#[derive(Clone, PartialEq, Eq)]
pub struct SetFamily {
    n: usize,
    k: usize,
    sets: Vec<KSet>,
}

impl SetFamily {
    /// The empty `k`-uniform family over `[n]`.
    pub fn empty(n: usize, k: usize) -> Result<Self> {
        KSet::empty(n)?; // validates n
        if k > n {
            return Err(Error::Input(format!("uniformity {k} exceeds ground size {n}")));
        }
        Ok(SetFamily { n, k, sets: Vec::new() })
    }

    /// Builds a family from members, sorting into colex order and dropping
    /// duplicates. Every member must be a `k`-subset of `[n]`.
    pub fn new(n: usize, k: usize, members: impl IntoIterator<Item = KSet>) -> Result<Self> {
        let mut fam = SetFamily::empty(n, k)?;
        let mut sets: Vec<KSet> = Vec::new();
        for s in members {
            if s.n() != n {
                return Err(Error::MismatchedGround { left: n, right: s.n() });
            }
            if s.card() != k {
                return Err(Error::Input(format!(
                    "member {s} has {} elements, expected {k}",
                    s.card()
                )));
            }
            sets.push(s);
        }
        sets.sort_unstable();
        sets.dedup();
        fam.sets = sets;
        Ok(fam)
    }

    /// Convenience constructor from element lists.
    pub fn from_lists(n: usize, k: usize, lists: &[&[usize]]) -> Result<Self> {
        let members = lists
            .iter()
            .map(|l| KSet::from_elems(n, l))
            .collect::<Result<Vec<_>>>()?;
        SetFamily::new(n, k, members)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Members in colex order.
    pub fn iter(&self) -> impl Iterator<Item = &KSet> {
        self.sets.iter()
    }

    pub fn members(&self) -> &[KSet] {
        &self.sets
    }

    /// Membership test by binary search (members are colex-sorted).
    pub fn contains(&self, s: &KSet) -> bool {
        s.n() == self.n && self.sets.binary_search(s).is_ok()
    }

    /// The complement family `{[n] \ A : A ∈ F}`, which is `(n-k)`-uniform.
    pub fn complement(&self) -> SetFamily {
        let mut sets: Vec<KSet> = self.sets.iter().map(|s| s.complement()).collect();
        sets.sort_unstable();
        SetFamily { n: self.n, k: self.n - self.k, sets }
    }

    /// True iff every pair of distinct members shares at least `t` elements.
    pub fn is_t_intersecting(&self, t: usize) -> bool {
        for (i, a) in self.sets.iter().enumerate() {
            for b in &self.sets[i + 1..] {
                if a.intersection_size(b) < t {
                    return false;
                }
            }
        }
        true
    }

    /// Plain intersecting = 1-intersecting.
    pub fn is_intersecting(&self) -> bool {
        self.is_t_intersecting(1)
    }

    /// True iff every `A ∈ self`, `B ∈ other` share at least `t` elements.
    /// The two families must live on the same ground set (uniformities may differ).
    pub fn is_cross_t_intersecting(&self, other: &SetFamily, t: usize) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::MismatchedGround { left: self.n, right: other.n });
        }
        for a in &self.sets {
            for b in &other.sets {
                if a.intersection_size(b) < t {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Per-element degrees plus the sorted profile.
    pub fn degree_profile(&self) -> DegreeProfile {
        let mut raw = vec![0u64; self.n];
        for s in &self.sets {
            for e in s.elems() {
                raw[e - 1] += 1;
            }
        }
        // Ties sort the smaller element label first.
        let mut perm: Vec<usize> = (1..=self.n).collect();
        perm.sort_by_key(|&e| (std::cmp::Reverse(raw[e - 1]), e));
        let sorted = perm.iter().map(|&e| raw[e - 1]).collect();
        DegreeProfile { raw, sorted, perm }
    }

    /// Number of members whose restriction to `[l]` is exactly `s`.
    /// `s` must be a subset of `[l]` and `l <= n`.
    pub fn subset_degree(&self, s: &KSet, l: usize) -> Result<u64> {
        if l > self.n {
            return Err(Error::Input(format!("l = {l} exceeds ground size {}", self.n)));
        }
        if let Some(max) = s.max_elem() {
            if max > l {
                return Err(Error::Input(format!(
                    "subset {s} is not contained in [{l}]"
                )));
            }
        }
        let count = self
            .sets
            .iter()
            .filter(|a| a.restrict(l).bits() == s.bits())
            .count();
        Ok(count as u64)
    }

    /// The trace `{A ∩ [l] : A ∈ F}` as a family over `[l]` (duplicates collapse).
    pub fn trace(&self, l: usize) -> Result<TraceFamily> {
        if l == 0 || l > self.n {
            return Err(Error::Input(format!(
                "trace level {l} out of range 1..={}",
                self.n
            )));
        }
        let sets = self
            .sets
            .iter()
            .map(|a| a.restrict(l).reground(l))
            .collect::<Result<Vec<_>>>()?;
        TraceFamily::new(l, sets)
    }

    /// The quotient `{A \ S : S ⊆ A ∈ F}` over the same ground set (labels are
    /// not shifted down). Uniformity drops to `k - |S|`.
    pub fn quotient(&self, s: &KSet) -> Result<SetFamily> {
        if s.n() != self.n {
            return Err(Error::MismatchedGround { left: self.n, right: s.n() });
        }
        if s.card() > self.k {
            return Err(Error::Input(format!(
                "quotient by {s} of size {} exceeds uniformity {}",
                s.card(),
                self.k
            )));
        }
        let members = self
            .sets
            .iter()
            .filter(|a| s.is_subset_of(a))
            .map(|a| a.minus(s));
        SetFamily::new(self.n, self.k - s.card(), members)
    }
}

impl std::fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SetFamily(n={}, k={}, {} members)", self.n, self.k, self.len())
    }
}

/// Raw and sorted degree sequences of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    raw: Vec<u64>,
    sorted: Vec<u64>,
    perm: Vec<usize>,
}

impl DegreeProfile {
    /// Degree of a 1-based element.
    pub fn degree_of(&self, e: usize) -> u64 {
        self.raw[e - 1]
    }

    /// The `j`-th largest degree, 1-based. Positions beyond `n` read as 0,
    /// matching the convention that absent elements have degree zero.
    pub fn sorted_degree(&self, j: usize) -> u64 {
        assert!(j >= 1, "sorted degrees are 1-indexed");
        self.sorted.get(j - 1).copied().unwrap_or(0)
    }

    /// Raw degrees indexed by element - 1.
    pub fn raw(&self) -> &[u64] {
        &self.raw
    }

    /// Degrees in non-increasing order.
    pub fn sorted(&self) -> &[u64] {
        &self.sorted
    }

    /// `perm()[j-1]` is the element holding the `j`-th largest degree
    /// (ties broken toward smaller labels).
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Sum of all degrees; equals `k * |F|` for a `k`-uniform family.
    pub fn total(&self) -> u64 {
        self.raw.iter().sum()
    }
}

/// A family of arbitrary-size subsets of `[l]`, as produced by traces and
/// upward closures. Members are sorted by bitmask and deduplicated.
#[derive(Clone, PartialEq, Eq)]
pub struct TraceFamily {
    l: usize,
    sets: Vec<KSet>,
}

impl TraceFamily {
    pub fn new(l: usize, members: impl IntoIterator<Item = KSet>) -> Result<Self> {
        KSet::empty(l)?; // validates l
        let mut sets = Vec::new();
        for s in members {
            if s.n() != l {
                return Err(Error::MismatchedGround { left: l, right: s.n() });
            }
            sets.push(s);
        }
        sets.sort_unstable();
        sets.dedup();
        Ok(TraceFamily { l, sets })
    }

    pub fn from_lists(l: usize, lists: &[&[usize]]) -> Result<Self> {
        let members = lists
            .iter()
            .map(|x| KSet::from_elems(l, x))
            .collect::<Result<Vec<_>>>()?;
        TraceFamily::new(l, members)
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &KSet> {
        self.sets.iter()
    }

    pub fn members(&self) -> &[KSet] {
        &self.sets
    }

    pub fn contains(&self, s: &KSet) -> bool {
        s.n() == self.l && self.sets.binary_search(s).is_ok()
    }

    /// True iff every pair of distinct members shares an element.
    pub fn is_intersecting(&self) -> bool {
        for (i, a) in self.sets.iter().enumerate() {
            for b in &self.sets[i + 1..] {
                if a.is_disjoint(b) {
                    return false;
                }
            }
        }
        true
    }

    /// Number of members of size `m` containing element `i` (the m-degree).
    pub fn mdegree(&self, i: usize, m: usize) -> u64 {
        self.sets
            .iter()
            .filter(|s| s.card() == m && s.contains(i))
            .count() as u64
    }

    /// True iff every superset (within `[l]`, up to size `max_size`) of a
    /// member is again a member.
    pub fn upward_closed_within(&self, max_size: usize) -> bool {
        for s in &self.sets {
            for e in 1..=self.l {
                if !s.contains(e) && s.card() < max_size && !self.contains(&s.with(e)) {
                    return false;
                }
            }
        }
        true
    }

    /// The full upward closure within `[l]`: every subset of `[l]` containing
    /// some member. Materializes `2^l` flags, so `l` is capped at 22.
    pub fn upward_closure(&self) -> Result<TraceFamily> {
        if self.l > MAX_CLOSURE_GROUND {
            return Err(Error::Capacity {
                what: format!("upward closure ground set [{}]", self.l),
                requested: self.l as u64,
                limit: MAX_CLOSURE_GROUND as u64,
                hint: "restrict the trace to a smaller prefix before closing upward".into(),
            });
        }
        let size = 1usize << self.l;
        let mut closed = vec![false; size];
        for s in &self.sets {
            closed[s.bits() as usize] = true;
        }
        // Masks are visited in increasing numeric order; removing a bit only
        // ever moves downward, so each superset sees its subsets finished.
        for mask in 0..size {
            if closed[mask] {
                continue;
            }
            let mut rest = mask;
            while rest != 0 {
                let low = rest & rest.wrapping_neg();
                if closed[mask & !low] {
                    closed[mask] = true;
                    break;
                }
                rest &= !low;
            }
        }
        let members = (0..size)
            .filter(|&m| closed[m])
            .map(|m| KSet::from_bits(self.l, m as u64))
            .collect::<Result<Vec<_>>>()?;
        TraceFamily::new(self.l, members)
    }
}

impl std::fmt::Debug for TraceFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TraceFamily(l={}, {} members)", self.l, self.len())
    }
}
