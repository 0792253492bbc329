//! Run the compression calculus on a family that is not shifted, watch it
//! reach an l-shifted fixpoint, and confirm what the shifts preserved.

use setfam::constructions::star;
use setfam::shifting::{is_l_shifted, shift_family, shift_to_fixpoint};
use setfam::Result;

fn main() -> Result<()> {
    // A star centered at the LAST element is maximally un-shifted below n:
    // every member contains 8, and pushing 8 down to any j <= 7 leaves the
    // family, so no level l in 1..=7 is satisfied yet.
    let f = star(8, 3, 8)?;
    let l = 7;
    println!(
        "star(8,3,8): size {}, is_{l}_shifted = {}",
        f.len(),
        is_l_shifted(&f, l)
    );

    // One single (i,j)-shift: replace 8 by 1 where possible.
    let g = shift_family(&f, 8, 1);
    println!(
        "after one (8,1)-shift: size {} (preserved), intersecting {}, is_{l}_shifted = {}",
        g.len(),
        g.is_intersecting(),
        is_l_shifted(&g, l)
    );

    // The fixpoint driver applies shifts in canonical order until stable,
    // interleaving degree-sorting renames when asked.
    let report = shift_to_fixpoint(&f, l, true)?;
    println!(
        "fixpoint: rounds={} shifts={} renamings={} -> is_{l}_shifted = {}",
        report.rounds,
        report.shifts_applied,
        report.renamings,
        is_l_shifted(&report.final_family, l)
    );
    println!("label map (new label for each original element): {:?}", report.label_map);

    let before = f.degree_profile();
    let after = report.final_family.degree_profile();
    println!("sorted profile before: {:?}", before.sorted());
    println!("sorted profile after:  {:?}", after.sorted());
    println!(
        "no window slot 1..={l} dropped: {}",
        (1..=l).all(|j| after.sorted_degree(j) >= before.sorted_degree(j))
    );
    println!(
        "size {} and intersecting {} both preserved",
        report.final_family.len(),
        report.final_family.is_intersecting()
    );
    Ok(())
}
