//! The acceptance suite: eleven numbered criteria, each printing one
//! PASS/FAIL line (run with `--nocapture` to see them). Every assertion is
//! an exact integer comparison against an independently computed value.

mod common;

use common::{
    for_each_index_combo, random_cross_pair, random_intersecting_family,
    random_t_intersecting_family, rng,
};
use rand::seq::SliceRandom;
use rand::Rng;
use setfam::binom::binom;
use setfam::constructions::{
    example_5_1, example_5_2, example_5_3, frankl_wang_l, hilton_milner, odd_k_majority, star,
};
use setfam::kset::{enumerate_ksets, KSet};
use setfam::search::{enumerate_maximal_families, search_maximal};
use setfam::shadow::{kk_lower_bound, shadow};
use setfam::shifting::{is_l_shifted, shift_family, shift_to_fixpoint};
use setfam::verifiers::{
    check_cor_4_3, check_cross_size, check_lemma_2_10, check_lemma_4_2, low_degree_element,
    vandermonde_identity,
};
use setfam::SetFamily;
use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

struct Harness {
    failures: Vec<String>,
}

impl Harness {
    fn run(&mut self, id: usize, name: &str, budget: Duration, body: impl FnOnce()) {
        let started = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(body));
        let elapsed = started.elapsed();
        let overtime = elapsed > budget;
        let status = match (&outcome, overtime) {
            (Ok(()), false) => "PASS".to_string(),
            (Ok(()), true) => format!("FAIL (over budget: {elapsed:.2?} > {budget:?})"),
            (Err(_), _) => "FAIL".to_string(),
        };
        println!(
            "criterion {id:>2}: {name:<58} {status} ({elapsed:.2?}, budget {budget:?})"
        );
        if outcome.is_err() || overtime {
            self.failures.push(format!("criterion {id} ({name}): {status}"));
        }
    }
}

#[test]
fn acceptance_criteria() {
    let mut h = Harness { failures: Vec::new() };
    let s = Duration::from_secs;

    h.run(1, "example 5.1: size 55, 6th degree 30 > 28", s(1), || {
        let f = example_5_1();
        assert_eq!(f.len(), 55);
        assert!(f.is_intersecting());
        let d6 = f.degree_profile().sorted_degree(6);
        assert_eq!(d6, 30);
        assert_eq!(binom(8, 2), 28);
        assert!(d6 > 28);
    });

    h.run(2, "example 5.2: 7th degree 125 > 120", s(1), || {
        let f = example_5_2();
        assert!(f.is_intersecting());
        let d7 = f.degree_profile().sorted_degree(7);
        assert_eq!(d7, 125);
        assert_eq!(binom(10, 3), 120);
        assert!(d7 > 120);
    });

    h.run(3, "example 5.3: 9th degree 2023 > 2002", s(5), || {
        let f = example_5_3();
        assert!(f.is_intersecting());
        let d9 = f.degree_profile().sorted_degree(9);
        assert!(
            d9 == 2023,
            "DISCREPANCY REPORT: the literal generator construction has 9th \
             sorted degree {d9}, but the claimed value is 2023 (for reference \
             C(14,5) = {}); the construction text and the stated degree \
             disagree and one of them is wrong",
            binom(14, 5)
        );
        assert_eq!(binom(14, 5), 2002);
        assert!(d9 > 2002);
    });

    h.run(4, "closed-form degree profiles, n <= 14, 2 <= k <= 6", s(10), || {
        for k in 2..=6usize {
            for n in (2 * k)..=14 {
                let f = hilton_milner(n, k).unwrap();
                assert!(f.is_intersecting());
                let p = f.degree_profile();
                let (ni, ki) = (n as i64, k as i64);
                assert_eq!(
                    p.sorted_degree(1),
                    binom(ni - 1, ki - 1) - binom(ni - ki - 1, ki - 1),
                    "d_1 mismatch at n={n} k={k}"
                );
                for j in 2..=k + 1 {
                    assert_eq!(
                        p.sorted_degree(j),
                        binom(ni - 2, ki - 2) + 1,
                        "d_{j} mismatch at n={n} k={k}"
                    );
                }
            }
            for l in 2..=k + 1 {
                for n in (2 * k + 1)..=14 {
                    let f = frankl_wang_l(n, k, l).unwrap();
                    assert!(f.is_intersecting());
                    let (ni, ki, li) = (n as i64, k as i64, l as i64);
                    assert_eq!(
                        f.degree_profile().sorted_degree(l + 1),
                        binom(ni - 2, ki - 2) + binom(ni - li - 1, ki - li),
                        "d_{} mismatch at n={n} k={k} l={l}",
                        l + 1
                    );
                }
            }
        }
    });

    h.run(5, "exhaustive (7,3): max d_7 over maximal families is 5", s(60), || {
        let report = search_maximal(7, 3, 1, None, 1, None).unwrap();
        assert_eq!(report.families_enumerated, 6127);
        let d7 = report
            .max_degrees
            .iter()
            .find(|d| d.index == 7)
            .expect("index 7 tracked");
        assert!(d7.value <= 5, "a maximal family has d_7 = {} > 5", d7.value);
        assert_eq!(d7.value, 5);
        assert_eq!(binom(5, 1), 5);
    });

    h.run(6, "odd-k sharpness: majority family has d_5 = 6 > 5", s(1), || {
        let f = odd_k_majority(3).unwrap();
        assert!(f.is_intersecting());
        let d5 = f.degree_profile().sorted_degree(5);
        assert_eq!(d5, 6);
        assert!(d5 > binom(5, 1));
    });

    h.run(7, "Kruskal-Katona on [6], k=3: exhaustive + 8x10^4 random", s(30), || {
        let (n, k) = (6usize, 3usize);
        let all: Vec<KSet> = enumerate_ksets(n, k).unwrap().collect();
        assert_eq!(all.len(), 20);
        let lower: Vec<u64> = (0..=12)
            .map(|m| kk_lower_bound(k, m as u64, n).unwrap())
            .collect();
        let check = |members: &[KSet]| {
            let f = SetFamily::new(n, k, members.iter().copied()).unwrap();
            let sh = shadow(&f).unwrap().len() as u64;
            let lb = lower[f.len()];
            assert!(
                sh >= lb,
                "family {:?} has shadow {sh} < KK bound {lb}",
                members.iter().map(|s| s.to_vec()).collect::<Vec<_>>()
            );
        };
        for m in 0..=4usize {
            for_each_index_combo(all.len(), m, |idx| {
                let members: Vec<KSet> = idx.iter().map(|&i| all[i]).collect();
                check(&members);
            });
        }
        let mut r = rng(7);
        let mut pool = all.clone();
        for size in 5..=12usize {
            for _ in 0..10_000 {
                let (picked, _) = pool.partial_shuffle(&mut r, size);
                let members: Vec<KSet> = picked.to_vec();
                check(&members);
            }
        }
    });

    h.run(8, "Vandermonde sweep, 2 <= k <= 8, 2k+1 <= n <= 30", s(1), || {
        for k in 2..=8usize {
            for n in (2 * k + 1)..=30 {
                assert!(
                    vandermonde_identity(n, k).unwrap(),
                    "identity fails at n={n} k={k}"
                );
            }
        }
    });

    h.run(9, "shifting suite: 10^3 random families, n <= 10, k <= 4", s(60), || {
        let mut r = rng(9);
        for round in 0..1000u64 {
            let n = r.gen_range(3..=10usize);
            let k = r.gen_range(1..=4.min(n));
            let f = random_intersecting_family(&mut r, n, k);

            // single shifts preserve t-intersecting (t = 1, and t = 2
            // on a separately generated 2-intersecting family)
            let i = r.gen_range(1..=n);
            let j = loop {
                let j = r.gen_range(1..=n);
                if j != i {
                    break j;
                }
            };
            let shifted = shift_family(&f, i, j);
            assert_eq!(shifted.len(), f.len());
            assert!(shifted.is_intersecting(), "shift broke intersecting at round {round}");
            if k >= 2 {
                let f2 = random_t_intersecting_family(&mut r, n, k, 2);
                assert!(
                    shift_family(&f2, i, j).is_t_intersecting(2),
                    "shift broke 2-intersecting at round {round}"
                );
            }

            // simultaneous shifts preserve cross-t-intersection
            let t = r.gen_range(1..=k);
            let (a, b) = random_cross_pair(&mut r, n, k, k, t);
            let (sa, sb) = (shift_family(&a, i, j), shift_family(&b, i, j));
            assert!(
                sa.is_cross_t_intersecting(&sb, t).unwrap(),
                "simultaneous shift broke cross-{t}-intersection at round {round}"
            );

            // fixpoint terminates within its guard and lands l-shifted
            let l = r.gen_range(1..=n);
            let rep = shift_to_fixpoint(&f, l, round % 2 == 0)
                .expect("fixpoint must terminate within its guard");
            let ff = &rep.final_family;
            assert!(is_l_shifted(ff, l), "fixpoint output not {l}-shifted at round {round}");
            assert_eq!(ff.len(), f.len());
            for v in check_lemma_2_10(ff, l).unwrap() {
                assert!(
                    !(v.hypothesis_met && !v.holds),
                    "trace-structure violation at round {round}: {}",
                    v.describe()
                );
            }
        }
    });

    h.run(10, "lemma sweeps within hypotheses: zero violations", s(120), || {
        // low-degree element: 10^3 shifted families, n <= 12, k <= 4
        let mut r = rng(10);
        for _ in 0..1000u64 {
            let k = r.gen_range(1..=4usize);
            let n = r.gen_range((2 * k + 1).max(4)..=12);
            let f = random_intersecting_family(&mut r, n, k);
            let ff = shift_to_fixpoint(&f, (2 * k).min(n), true)
                .unwrap()
                .final_family;
            let g_uniform = ff.trace(n).unwrap();
            low_degree_element(&g_uniform, n, k)
                .expect("a low-degree element must exist in the family itself");
            if 2 * k < n {
                let g_trace = ff.trace(2 * k).unwrap();
                assert!(g_trace.is_intersecting(), "trace on [2k] of a 2k-shifted family");
                low_degree_element(&g_trace, n, k)
                    .expect("a low-degree element must exist in the widened trace");
            }
        }

        // cross-size bounds: anchored cross-t pairs, n <= 12
        let mut r = rng(41);
        for _ in 0..500u64 {
            let n = r.gen_range(7..=12usize);
            let kmax = ((n - 1) / 3).min(3);
            let ka = r.gen_range(1..=kmax);
            let kb = r.gen_range(1..=kmax);
            let t = r.gen_range(1..=ka.min(kb));
            let (a, b) = random_cross_pair(&mut r, n, ka, kb, t);
            let v = check_cross_size(&a, &b, t).unwrap();
            assert!(v.hypothesis_met, "generator must satisfy the hypotheses");
            assert!(v.first.holds, "size bound failed: {}", v.first.describe());
            assert!(v.second.holds, "size bound failed: {}", v.second.describe());
        }

        // subset-degree dichotomy + threshold-family checks on shifted
        // families: k <= 3, n >= 4k + l, n <= 20, all disjoint pairs
        let mut r = rng(42);
        for _ in 0..150u64 {
            let k = r.gen_range(1..=3usize);
            let l = r.gen_range(1..=4usize);
            let n = r.gen_range((4 * k + l)..=20);
            let f = random_intersecting_family(&mut r, n, k);
            let ff = shift_to_fixpoint(&f, l, true).unwrap().final_family;
            assert!(is_l_shifted(&ff, l));
            for assign in 0..3u32.pow(l as u32) {
                let (mut s1, mut s2) = (KSet::empty(n).unwrap(), KSet::empty(n).unwrap());
                let mut code = assign;
                for e in 1..=l {
                    match code % 3 {
                        1 => s1 = s1.with(e),
                        2 => s2 = s2.with(e),
                        _ => {}
                    }
                    code /= 3;
                }
                if s2 < s1 {
                    continue;
                }
                let v = check_lemma_4_2(&ff, l, &s1, &s2).unwrap();
                assert!(v.hypothesis_met);
                assert!(
                    v.holds,
                    "dichotomy failed at n={n} k={k} l={l}, S1={:?} S2={:?}",
                    s1.to_vec(),
                    s2.to_vec()
                );
            }
            let v = check_cor_4_3(&ff, l).unwrap();
            // the threshold statement applies only while its binomial is
            // nondegenerate: l <= k + m
            assert_eq!(v.hypothesis_met, l <= k + v.m);
            if v.hypothesis_met {
                assert!(v.holds(), "threshold family not intersecting at n={n} k={k} l={l}");
            }
        }

        // star-derived threshold families across the whole small grid
        for k in 2..=3usize {
            for l in 3..=5usize {
                if l > k + (l - 1) / 2 {
                    continue;
                }
                for n in (4 * k + l)..=18 {
                    let v = check_cor_4_3(&star(n, k, 1).unwrap(), l).unwrap();
                    assert!(v.hypothesis_met);
                    assert!(v.holds(), "star threshold family failed at n={n} k={k} l={l}");
                }
            }
        }
    });

    h.run(11, "(5,2) clique enumeration equals brute-force subset filter", s(1), || {
        let all: Vec<KSet> = enumerate_ksets(5, 2).unwrap().collect();
        assert_eq!(all.len(), 10);
        let mut brute: BTreeSet<Vec<KSet>> = BTreeSet::new();
        for mask in 1u32..(1 << 10) {
            let fam: Vec<KSet> = (0..10).filter(|b| mask >> b & 1 == 1).map(|b| all[b]).collect();
            let intersecting = fam
                .iter()
                .enumerate()
                .all(|(x, a)| fam[x + 1..].iter().all(|b| a.intersects(b)));
            if !intersecting {
                continue;
            }
            let maximal = all
                .iter()
                .all(|c| fam.contains(c) || fam.iter().any(|m| !m.intersects(c)));
            if maximal {
                brute.insert(fam);
            }
        }
        let mut enumerated: BTreeSet<Vec<KSet>> = BTreeSet::new();
        let count = enumerate_maximal_families(5, 2, 1, None, |_, fam| {
            enumerated.insert(fam.members().to_vec());
        })
        .unwrap();
        assert_eq!(count as usize, enumerated.len(), "enumeration emitted duplicates");
        assert_eq!(enumerated.len(), brute.len());
        assert_eq!(enumerated, brute);
    });

    assert!(
        h.failures.is_empty(),
        "acceptance failures:\n  {}",
        h.failures.join("\n  ")
    );
}
