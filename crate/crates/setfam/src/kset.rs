//! Subsets of `{1, ..., n}` packed into a single machine word.
//!
//! Element `e` lives at bit `e - 1`, so a whole set fits in a `u64` for any
//! ground set up to size 62 and every set operation is one or two bit
//! instructions. Two orders matter:
//!
//! * **colex**: `A < B` iff `max(A Δ B) ∈ B`. On same-size bitmasks this is
//!   plain numeric order of the words, which is why it is also the derived
//!   `Ord` on [`KSet`].
//! * **lex**: `A < B` iff `min(A \ B) < min(B \ A)`.

use crate::binom::binom;
use crate::error::{Error, Result};
use std::fmt;

/// Largest supported ground-set size. Bit 63 is kept free so ranks and
/// enumeration arithmetic never overflow mid-computation.
pub const MAX_GROUND: usize = 62;

/// A subset of `{1, ..., n}` stored as a bitmask.
///
/// The derived `Ord` compares the bitmasks numerically, which is colex order
/// for sets over the same ground; families keep their members sorted this way.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSet {
    bits: u64,
    n: u8,
}

fn check_ground(n: usize) -> Result<()> {
    if n == 0 || n > MAX_GROUND {
        return Err(Error::GroundSize { n });
    }
    Ok(())
}

impl KSet {
    /// The empty subset of `[n]`.
    pub fn empty(n: usize) -> Result<Self> {
        check_ground(n)?;
        Ok(KSet { bits: 0, n: n as u8 })
    }

    /// Builds a set from 1-based elements; rejects duplicates and out-of-range labels.
    pub fn from_elems(n: usize, elems: &[usize]) -> Result<Self> {
        check_ground(n)?;
        let mut bits = 0u64;
        for &e in elems {
            if e == 0 || e > n {
                return Err(Error::ElementOutOfRange { elem: e, n });
            }
            let bit = 1u64 << (e - 1);
            if bits & bit != 0 {
                return Err(Error::Input(format!("duplicate element {e}")));
            }
            bits |= bit;
        }
        Ok(KSet { bits, n: n as u8 })
    }

    /// Builds a set directly from a bitmask over `[n]`.
    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        check_ground(n)?;
        if n < 64 && bits >> n != 0 {
            return Err(Error::Input(format!(
                "bitmask {bits:#x} has elements above the ground set [{n}]"
            )));
        }
        Ok(KSet { bits, n: n as u8 })
    }

    /// Ground-set size `n`.
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Raw bitmask (element `e` at bit `e - 1`).
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Number of elements.
    pub fn card(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Membership test for a 1-based element; labels outside `[n]` are never members.
    pub fn contains(&self, e: usize) -> bool {
        e >= 1 && e <= self.n() && self.bits >> (e - 1) & 1 == 1
    }

    /// Ascending 1-based elements.
    pub fn elems(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let e = rest.trailing_zeros() as usize + 1;
            rest &= rest - 1;
            Some(e)
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.elems().collect()
    }

    /// Largest element, or `None` for the empty set.
    pub fn max_elem(&self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(64 - self.bits.leading_zeros() as usize)
        }
    }

    /// The set with element `e` added. `e` must lie in `1..=n`.
    pub fn with(&self, e: usize) -> Self {
        debug_assert!(e >= 1 && e <= self.n());
        KSet { bits: self.bits | 1 << (e - 1), n: self.n }
    }

    /// The set with element `e` removed. `e` must lie in `1..=n`.
    pub fn without(&self, e: usize) -> Self {
        debug_assert!(e >= 1 && e <= self.n());
        KSet { bits: self.bits & !(1 << (e - 1)), n: self.n }
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        KSet { bits: self.bits | other.bits, n: self.n }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        KSet { bits: self.bits & other.bits, n: self.n }
    }

    pub fn minus(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        KSet { bits: self.bits & !other.bits, n: self.n }
    }

    pub fn intersection_size(&self, other: &Self) -> usize {
        (self.bits & other.bits).count_ones() as usize
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.bits & other.bits != 0
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits & other.bits == 0
    }

    /// Complement within `[n]`.
    pub fn complement(&self) -> Self {
        let full = if self.n() == 64 { !0 } else { (1u64 << self.n()) - 1 };
        KSet { bits: full & !self.bits, n: self.n }
    }

    /// Restriction `A ∩ [l]` as a set over the same ground.
    pub fn restrict(&self, l: usize) -> Self {
        let mask = if l >= 64 { !0 } else { (1u64 << l) - 1 };
        KSet { bits: self.bits & mask, n: self.n }
    }

    /// Re-grounds the set over `[m]`; every element must already lie in `[m]`.
    pub fn reground(&self, m: usize) -> Result<Self> {
        check_ground(m)?;
        if let Some(max) = self.max_elem() {
            if max > m {
                return Err(Error::ElementOutOfRange { elem: max, n: m });
            }
        }
        Ok(KSet { bits: self.bits, n: m as u8 })
    }

    /// Colex rank among all `card()`-subsets of `[n]`: the combinatorial
    /// number system, `rank = Σ_j C(e_j - 1, j)` over the ascending elements.
    pub fn colex_rank(&self) -> u64 {
        self.elems()
            .enumerate()
            .map(|(idx, e)| binom(e as i64 - 1, idx as i64 + 1))
            .sum()
    }

    /// Inverse of [`colex_rank`](Self::colex_rank) for `k`-subsets of `[n]`.
    pub fn colex_unrank(rank: u64, k: usize, n: usize) -> Result<Self> {
        check_ground(n)?;
        if k > n {
            return Err(Error::Input(format!("k = {k} exceeds ground size {n}")));
        }
        let count = binom(n as i64, k as i64);
        if rank >= count {
            return Err(Error::RankOutOfRange { rank, count });
        }
        let mut bits = 0u64;
        let mut r = rank;
        // Peel off the largest element first: the biggest c with C(c, j) <= r.
        for j in (1..=k).rev() {
            let mut c = j as i64 - 1;
            while binom(c + 1, j as i64) <= r {
                c += 1;
            }
            bits |= 1 << c; // element c + 1
            r -= binom(c, j as i64);
        }
        Ok(KSet { bits, n: n as u8 })
    }
}

/// Strict lex comparison: `min(A \ B) < min(B \ A)`. Errors on `A == B`.
pub fn lex_less(a: &KSet, b: &KSet) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::MismatchedGround { left: a.n(), right: b.n() });
    }
    if a.bits == b.bits {
        return Err(Error::EqualSets);
    }
    let diff = a.bits ^ b.bits;
    Ok(a.bits & (diff & diff.wrapping_neg()) != 0)
}

/// Strict colex comparison: `max(A Δ B) ∈ B`. Errors on `A == B`.
pub fn colex_less(a: &KSet, b: &KSet) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::MismatchedGround { left: a.n(), right: b.n() });
    }
    if a.bits == b.bits {
        return Err(Error::EqualSets);
    }
    Ok(a.bits < b.bits)
}

/// All `k`-subsets of `[n]` in colex order.
///
/// Colex order on fixed-popcount bitmasks is numeric order, so the iterator
/// is Gosper's hack: repeatedly step to the next-larger word with the same
/// popcount.
pub fn enumerate_ksets(n: usize, k: usize) -> Result<KSets> {
    check_ground(n)?;
    if k > n {
        return Err(Error::Input(format!("k = {k} exceeds ground size {n}")));
    }
    Ok(KSets {
        next: Some(if k == 0 { 0 } else { (1u64 << k) - 1 }),
        limit: if n == 64 { !0 } else { (1u64 << n) - 1 },
        n: n as u8,
    })
}

/// Iterator produced by [`enumerate_ksets`].
pub struct KSets {
    next: Option<u64>,
    limit: u64,
    n: u8,
}

impl Iterator for KSets {
    type Item = KSet;

    fn next(&mut self) -> Option<KSet> {
        let bits = self.next?;
        self.next = if bits == 0 {
            None
        } else {
            let low = bits & bits.wrapping_neg();
            let ripple = bits + low;
            let ones = ((bits ^ ripple) / low) >> 2;
            let succ = ripple | ones;
            (succ <= self.limit).then_some(succ)
        };
        Some(KSet { bits, n: self.n })
    }
}

impl fmt::Display for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/[{}]", self.n())
    }
}
