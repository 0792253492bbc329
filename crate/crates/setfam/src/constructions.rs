//! Named intersecting families and the small designs they are built from.
//!
//! Each constructor materializes the family by filtering the full enumeration
//! of k-subsets, so sizes and degree profiles are observed rather than
//! asserted; the closed-form values live in the tests.

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::kset::{enumerate_ksets, KSet};

/// A 2-design: `blocks` of size `block_size` on points `[v]`, every pair of
/// points lying in exactly `lambda` blocks.
#[derive(Clone, Debug)]
pub struct Design {
    pub v: usize,
    pub block_size: usize,
    pub lambda: usize,
    /// Replication number: blocks through each point.
    pub r: usize,
    pub blocks: Vec<KSet>,
}

impl Design {
    /// Validates the pair-coverage and replication counts of a block list.
    pub fn new(v: usize, block_size: usize, lambda: usize, blocks: Vec<KSet>) -> Result<Self> {
        for b in &blocks {
            if b.n() != v {
                return Err(Error::MismatchedGround { left: v, right: b.n() });
            }
            if b.card() != block_size {
                return Err(Error::Input(format!(
                    "block {b} has {} points, expected {block_size}",
                    b.card()
                )));
            }
        }
        for x in 1..=v {
            for y in (x + 1)..=v {
                let covered = blocks.iter().filter(|b| b.contains(x) && b.contains(y)).count();
                if covered != lambda {
                    return Err(Error::Input(format!(
                        "pair {{{x},{y}}} lies in {covered} blocks, expected {lambda}"
                    )));
                }
            }
        }
        let r = lambda * (v - 1) / (block_size - 1);
        for x in 1..=v {
            let through = blocks.iter().filter(|b| b.contains(x)).count();
            if through != r {
                return Err(Error::Input(format!(
                    "point {x} lies on {through} blocks, expected {r}"
                )));
            }
        }
        Ok(Design { v, block_size, lambda, r, blocks })
    }

    /// The blocks as a uniform set family.
    pub fn family(&self) -> SetFamily {
        SetFamily::new(self.v, self.block_size, self.blocks.iter().copied())
            .expect("design blocks form a valid family")
    }
}

/// The 2-(6,3,2) design: 10 triples on 6 points, every pair covered twice,
/// each point on r = 5 blocks.
pub fn design_2_6_3_2() -> Design {
    let lists: [[usize; 3]; 10] = [
        [1, 2, 3],
        [1, 2, 4],
        [1, 3, 5],
        [1, 4, 6],
        [1, 5, 6],
        [2, 3, 6],
        [2, 4, 5],
        [2, 5, 6],
        [3, 4, 5],
        [3, 4, 6],
    ];
    let blocks = lists
        .iter()
        .map(|l| KSet::from_elems(6, l).expect("hard-coded blocks are valid"))
        .collect();
    Design::new(6, 3, 2, blocks).expect("hard-coded design validates")
}

/// The Fano plane as a 2-(7,3,1) design: 7 lines, each point on 3.
pub fn fano_plane() -> Design {
    let lists: [[usize; 3]; 7] = [
        [1, 2, 3],
        [1, 4, 5],
        [1, 6, 7],
        [2, 4, 6],
        [2, 5, 7],
        [3, 4, 7],
        [3, 5, 6],
    ];
    let blocks = lists
        .iter()
        .map(|l| KSet::from_elems(7, l).expect("hard-coded lines are valid"))
        .collect();
    Design::new(7, 3, 1, blocks).expect("hard-coded design validates")
}

/// The star: all k-sets containing `center`.
pub fn star(n: usize, k: usize, center: usize) -> Result<SetFamily> {
    if k == 0 || k > n {
        return Err(Error::Input(format!("star needs 1 <= k <= n, got k = {k}, n = {n}")));
    }
    if center == 0 || center > n {
        return Err(Error::ElementOutOfRange { elem: center, n });
    }
    SetFamily::new(n, k, enumerate_ksets(n, k)?.filter(|a| a.contains(center)))
}

/// The Hilton–Milner family: `{B0} ∪ {A : 1 ∈ A, A ∩ B0 ≠ ∅}` with
/// `B0 = {2, ..., k+1}`. Requires `n >= 2k >= 4`.
pub fn hilton_milner(n: usize, k: usize) -> Result<SetFamily> {
    if k < 2 || n < 2 * k {
        return Err(Error::Input(format!(
            "hilton_milner needs n >= 2k >= 4, got n = {n}, k = {k}"
        )));
    }
    let b0 = KSet::from_elems(n, &(2..=k + 1).collect::<Vec<_>>())?;
    let members = enumerate_ksets(n, k)?
        .filter(|a| *a == b0 || (a.contains(1) && a.intersects(&b0)));
    SetFamily::new(n, k, members)
}

/// The l-generalization of Hilton–Milner:
/// `{A : 1 ∈ A, A ∩ {2,...,l+1} ≠ ∅} ∪ {A : {2,...,l+1} ⊆ A}`.
/// Requires `2 <= l <= k+1 <= n-k`. At `l = k` this is exactly
/// [`hilton_milner`]; at `l = k+1` the second part is empty.
pub fn frankl_wang_l(n: usize, k: usize, l: usize) -> Result<SetFamily> {
    if l < 2 || l > k + 1 || k + 1 > n - k {
        return Err(Error::Input(format!(
            "frankl_wang_l needs 2 <= l <= k+1 <= n-k, got n = {n}, k = {k}, l = {l}"
        )));
    }
    let window = KSet::from_elems(n, &(2..=l + 1).collect::<Vec<_>>())?;
    let members = enumerate_ksets(n, k)?
        .filter(|a| (a.contains(1) && a.intersects(&window)) || window.is_subset_of(a));
    SetFamily::new(n, k, members)
}

/// 4-uniform family on [10]: all of `C([6], 4)` plus every design block
/// extended by one point from `{7, 8, 9, 10}`. Size 55, six elements of
/// degree 30.
pub fn example_5_1() -> SetFamily {
    let n = 10;
    let mut members: Vec<KSet> = enumerate_ksets(6, 4)
        .expect("static parameters")
        .map(|s| KSet::from_bits(n, s.bits()).expect("subsets of [6] fit in [10]"))
        .collect();
    for block in &design_2_6_3_2().blocks {
        let on_n = KSet::from_bits(n, block.bits()).expect("blocks fit in [10]");
        for extra in 7..=10 {
            members.push(on_n.with(extra));
        }
    }
    SetFamily::new(n, 4, members).expect("static construction is well-formed")
}

/// 5-uniform family on [12]: all 5-sets containing a Fano line.
pub fn example_5_2() -> SetFamily {
    let n = 12;
    let lines: Vec<KSet> = fano_plane()
        .blocks
        .iter()
        .map(|b| KSet::from_bits(n, b.bits()).expect("lines fit in [12]"))
        .collect();
    let members = enumerate_ksets(n, 5)
        .expect("static parameters")
        .filter(|a| lines.iter().any(|line| line.is_subset_of(a)));
    SetFamily::new(n, 5, members).expect("static construction is well-formed")
}

/// The generator list for [`example_5_3`]: design blocks extended by one of
/// `{7, 8, 9}`, plus `{j, 7, 8, 9}` for `j ∈ [6]` — 36 4-subsets of [9].
pub fn example_5_3_generators() -> Vec<KSet> {
    let n = 16;
    let mut gens = Vec::with_capacity(36);
    for block in &design_2_6_3_2().blocks {
        let on_n = KSet::from_bits(n, block.bits()).expect("blocks fit in [16]");
        for extra in 7..=9 {
            gens.push(on_n.with(extra));
        }
    }
    for j in 1..=6 {
        gens.push(
            KSet::from_elems(n, &[j, 7, 8, 9]).expect("static generator is valid"),
        );
    }
    gens
}

/// 7-uniform family on [16]: all 7-sets whose intersection with [9] contains
/// one of the 36 generators.
pub fn example_5_3() -> SetFamily {
    let gens = example_5_3_generators();
    let members = enumerate_ksets(16, 7)
        .expect("static parameters")
        .filter(|a| gens.iter().any(|g| g.is_subset_of(a)));
    SetFamily::new(16, 7, members).expect("static construction is well-formed")
}

/// Majority family for odd `k` on `n = 2k+1`: all k-sets with
/// `|A ∩ [k+2]| >= (k+3)/2`. Requires `k` odd, `k >= 3`.
pub fn odd_k_majority(k: usize) -> Result<SetFamily> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::Input(format!(
            "odd_k_majority needs odd k >= 3, got k = {k}"
        )));
    }
    let n = 2 * k + 1;
    let quota = (k + 3) / 2;
    let members = enumerate_ksets(n, k)?.filter(|a| a.restrict(k + 2).card() >= quota);
    SetFamily::new(n, k, members)
}
