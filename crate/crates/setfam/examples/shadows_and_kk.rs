//! Shadows, colex initial segments, and the Kruskal–Katona lower bound.
//!
//! The colex segment of a given size minimizes the shadow among all
//! families of that size; every other family's shadow is at least as big.

use setfam::constructions::{hilton_milner, star};
use setfam::shadow::{check_cor_2_7, colex_segment, kk_lower_bound, shadow, upper_shadow};
use setfam::Result;

fn main() -> Result<()> {
    let (n, k) = (6, 3);
    println!("colex initial segments of 3-subsets of [6] and their shadows:");
    for m in [1u64, 4, 10, 20] {
        let seg = colex_segment(k, m, n)?;
        let sh = shadow(&seg.realized)?;
        println!(
            "  first {m:>2} sets -> shadow size {:>2} (this IS the Kruskal-Katona minimum)",
            sh.len()
        );
    }
    println!();

    println!("arbitrary families vs the bound:");
    for (name, f) in [
        ("star(6,3,1)", star(6, 3, 1)?),
        ("hilton_milner(6,3)", hilton_milner(6, 3)?),
    ] {
        let actual = shadow(&f)?.len() as u64;
        let lower = kk_lower_bound(k, f.len() as u64, n)?;
        println!(
            "  {name:<20} size {:>2}: |shadow| = {actual:>2} >= {lower:>2} = kk_lower_bound",
            f.len()
        );
    }
    println!();

    // The dual expansion check: a family strictly larger than C(n-1,k-1)
    // must have an upper shadow strictly larger than C(n-1,k).
    let f = star(6, 3, 1)?; // size 10 = C(5,2): sits exactly AT the threshold
    let v = check_cor_2_7(&f)?;
    println!("cor2.7 on star(6,3,1): {}", v.describe());
    let us = upper_shadow(&f)?;
    println!(
        "  (upper shadow of the star has {} members, C(5,3) = 10)",
        us.len()
    );
    Ok(())
}
