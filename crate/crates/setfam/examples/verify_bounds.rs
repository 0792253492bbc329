//! Run every bound checker and print its verdict line.
//!
//! Each verdict carries the exact integers on both sides, whether the
//! statement's hypotheses were met, and (when they were not) still shows
//! the raw comparison for context.

use setfam::constructions::{hilton_milner, odd_k_majority, star};
use setfam::verifiers::{
    check_cor_4_3, check_cross_size, check_lemma_2_10, check_lemma_4_2, check_thm_2k1,
    check_thm_huang_zhao, check_thm_k2, check_thm_l1, low_degree_element,
};
use setfam::KSet;
use setfam::Result;

fn main() -> Result<()> {
    println!("-- last-place and almost-last-place degree bounds --");
    let f = star(9, 4, 1)?;
    println!("star(9,4,1):       {}", check_thm_huang_zhao(&f).describe());
    println!("star(9,4,1):       {}", check_thm_2k1(&f).describe());
    let hm = hilton_milner(13, 3)?;
    println!("hilton_milner(13,3): {}", check_thm_k2(&hm).describe());
    println!(
        "hilton_milner(13,3): {}",
        check_thm_l1(&hm, 3, None, Some(1.0)).describe()
    );
    println!();

    println!("-- the bound that FAILS: majority family at n = 2k+1 --");
    let om = odd_k_majority(3)?;
    for v in [check_thm_k2(&om), check_thm_l1(&om, 4, None, Some(1.0))] {
        println!("odd_k_majority(3): {}", v.describe());
        if v.hypothesis_met && !v.holds {
            println!("  ^ a genuine counterexample to extending the k+2 bound down to n = 2k+1");
        }
    }
    println!();

    println!("-- trace structure of a shifted family --");
    let s = star(8, 3, 1)?; // stars are l-shifted for every l
    for v in check_lemma_2_10(&s, 6)? {
        println!("star(8,3,1), l=6:  {}", v.describe());
    }
    let g = s.trace(6)?;
    let w = low_degree_element(&g, 8, 3)?;
    println!(
        "low-degree element of the trace: {} with m-degree bounds {:?}",
        w.element,
        w.bounds.iter().map(|b| (b.m, b.degree, b.bound)).collect::<Vec<_>>()
    );
    println!();

    println!("-- cross-size and subset-degree dichotomy --");
    let a = star(10, 3, 1)?;
    let cross = check_cross_size(&a, &a, 1)?;
    println!("star(10,3,1) x itself: {}", cross.first.describe());
    let big = star(16, 3, 1)?;
    let s1 = KSet::from_elems(16, &[1])?;
    let s2 = KSet::from_elems(16, &[2])?;
    let d = check_lemma_4_2(&big, 2, &s1, &s2)?;
    println!("star(16,3,1), S1={{1}}, S2={{2}}: first branch {}", d.first.describe());
    println!("                                 second branch {}", d.second.describe());
    println!(
        "  the statement is an either/or: dichotomy holds = {}",
        d.holds
    );
    println!();

    println!("-- threshold family over the window --");
    let v = check_cor_4_3(&star(20, 3, 1)?, 4)?;
    println!(
        "star(20,3,1), l=4: m={} threshold={} |G|={} intersecting={} holds={}",
        v.m,
        v.threshold,
        v.g.len(),
        v.g_is_intersecting,
        v.holds()
    );
    Ok(())
}
