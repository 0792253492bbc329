//! Shared helpers for the integration suites: seeded generators for random
//! intersecting families and cross-intersecting pairs.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use setfam::kset::{enumerate_ksets, KSet};
use setfam::SetFamily;

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonempty k-uniform t-intersecting family on `[n]`: shuffle all
/// candidates and greedily keep compatible ones up to a random target size.
pub fn random_t_intersecting_family(
    r: &mut ChaCha8Rng,
    n: usize,
    k: usize,
    t: usize,
) -> SetFamily {
    let mut cands: Vec<KSet> = enumerate_ksets(n, k).unwrap().collect();
    cands.shuffle(r);
    let target = r.gen_range(1..=cands.len());
    let mut chosen: Vec<KSet> = Vec::new();
    for c in cands {
        if chosen.len() >= target {
            break;
        }
        if chosen.iter().all(|m| m.intersection_size(&c) >= t) {
            chosen.push(c);
        }
    }
    SetFamily::new(n, k, chosen).unwrap()
}

pub fn random_intersecting_family(r: &mut ChaCha8Rng, n: usize, k: usize) -> SetFamily {
    random_t_intersecting_family(r, n, k, 1)
}

/// A cross-t-intersecting pair built over a shared random t-element anchor:
/// every member of either family contains the anchor, so any two members
/// across the pair meet in at least t elements.
#[allow(dead_code)] // shared across test binaries; not every binary uses it
pub fn random_cross_pair(
    r: &mut ChaCha8Rng,
    n: usize,
    ka: usize,
    kb: usize,
    t: usize,
) -> (SetFamily, SetFamily) {
    assert!(t <= ka.min(kb) && ka.max(kb) <= n);
    let mut elems: Vec<usize> = (1..=n).collect();
    elems.shuffle(r);
    let anchor = &elems[..t];
    let mut build = |k: usize| {
        let cands: Vec<KSet> = enumerate_ksets(n, k)
            .unwrap()
            .filter(|s| anchor.iter().all(|&e| s.contains(e)))
            .collect();
        let mut chosen: Vec<KSet> = cands.iter().copied().filter(|_| r.gen_bool(0.5)).collect();
        if chosen.is_empty() {
            chosen.push(cands[r.gen_range(0..cands.len())]);
        }
        SetFamily::new(n, k, chosen).unwrap()
    };
    let a = build(ka);
    let b = build(kb);
    (a, b)
}

/// All `size`-element index subsets of `0..pool`, streamed to a visitor.
#[allow(dead_code)] // shared across test binaries; not every binary uses it
pub fn for_each_index_combo(pool: usize, size: usize, mut visit: impl FnMut(&[usize])) {
    if size == 0 {
        visit(&[]);
        return;
    }
    if size > pool {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        visit(&idx);
        let mut i = size;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + pool - size {
                break;
            }
        }
        idx[i] += 1;
        for j in (i + 1)..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
