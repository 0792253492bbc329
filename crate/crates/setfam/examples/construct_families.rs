//! Build each named family and print its headline numbers.
//!
//! The interesting ones are the three hand-crafted families whose sorted
//! degrees beat the "obvious" binomial targets — run this to see the
//! numbers side by side.

use setfam::binom::binom;
use setfam::constructions::{
    example_5_1, example_5_2, example_5_3, fano_plane, hilton_milner, odd_k_majority, star,
};
use setfam::Result;

fn headline(name: &str, f: &setfam::SetFamily) {
    let p = f.degree_profile();
    println!(
        "{name:<22} n={:<3} k={:<2} size={:<5} intersecting={}  top degrees: {:?}",
        f.n(),
        f.k(),
        f.len(),
        f.is_intersecting(),
        &p.sorted()[..p.sorted().len().min(8)],
    );
}

fn main() -> Result<()> {
    println!("Classic families");
    headline("star(10,4,1)", &star(10, 4, 1)?);
    headline("hilton_milner(10,4)", &hilton_milner(10, 4)?);
    headline("fano blocks", &fano_plane().family());
    println!();

    println!("Families with surprisingly large sorted degrees");
    let f1 = example_5_1();
    headline("example_5_1", &f1);
    println!(
        "  6th largest degree {} > {} = C(8,2)",
        f1.degree_profile().sorted_degree(6),
        binom(8, 2)
    );

    let f2 = example_5_2();
    headline("example_5_2", &f2);
    println!(
        "  7th largest degree {} > {} = C(10,3)",
        f2.degree_profile().sorted_degree(7),
        binom(10, 3)
    );

    let f3 = example_5_3();
    headline("example_5_3", &f3);
    println!(
        "  9th largest degree {} > {} = C(14,5)",
        f3.degree_profile().sorted_degree(9),
        binom(14, 5)
    );
    println!();

    println!("Odd-k majority family: d_(k+2) can exceed C(n-2,k-2) at n = 2k+1");
    let om = odd_k_majority(3)?;
    headline("odd_k_majority(3)", &om);
    println!(
        "  5th largest degree {} > {} = C(5,1)",
        om.degree_profile().sorted_degree(5),
        binom(5, 1)
    );
    Ok(())
}
