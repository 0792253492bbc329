//! Degree analytics on one family: raw degrees, the sorted profile,
//! subset degrees over a window, traces, and m-degrees.

use setfam::constructions::hilton_milner;
use setfam::kset::KSet;
use setfam::Result;

fn main() -> Result<()> {
    let f = hilton_milner(9, 4)?;
    let p = f.degree_profile();
    println!("hilton_milner(9,4): {} members on [9]", f.len());
    println!("raw degrees (element order): {:?}", p.raw());
    println!("sorted profile d_1 >= ... >= d_9: {:?}", p.sorted());
    println!("perm (element carrying each sorted slot): {:?}", p.perm());
    println!("degree sum {} = k * |F| = {}", p.total(), 4 * f.len() as u64);
    println!();

    // Subset degrees: how many members trace to exactly S inside [l]?
    let l = 3;
    println!("subset degrees over [{l}] (d_S counts members with A ∩ [{l}] = S):");
    for mask in 0u64..(1 << l) {
        let s = KSet::from_bits(f.n(), mask)?;
        let d = f.subset_degree(&s, l)?;
        if d > 0 {
            println!("  d_{{{:?}}} = {}", s.to_vec(), d);
        }
    }
    let total: u64 = (0..(1u64 << l))
        .map(|m| f.subset_degree(&KSet::from_bits(f.n(), m).unwrap(), l).unwrap())
        .sum();
    println!("  sum over all S = {} = |F|", total);
    println!();

    // The trace is the set of restrictions; m-degrees count by size.
    let g = f.trace(l)?;
    println!("trace on [{l}] has {} distinct restrictions:", g.len());
    for s in g.iter() {
        println!("  {:?}", s.to_vec());
    }
    for i in 1..=l {
        let by_size: Vec<u64> = (0..=l).map(|m| g.mdegree(i, m)).collect();
        println!("  m-degrees of {i} in trace (sizes 0..={l}): {by_size:?}");
    }
    Ok(())
}
