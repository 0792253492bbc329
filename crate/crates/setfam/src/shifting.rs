//! The ij-shift and compression to an `l`-shifted fixpoint.
//!
//! The ij-shift replaces `A` by `(A ∪ {j}) \ {i}` when `i ∈ A`, `j ∉ A`, and
//! the replacement is not already a member; it preserves family size and
//! every t-intersecting / cross-intersecting property. A family is
//! `l`-shifted when it is fixed under every shift that moves an element from
//! outside `[l]` to inside `[l]`.

use crate::binom::binom;
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::kset::KSet;

/// What [`shift_to_fixpoint`] did and produced.
#[derive(Clone, Debug)]
pub struct ShiftReport {
    /// Number of full `(j, i)` passes executed.
    pub rounds: u64,
    /// Number of ij-shift applications that changed the family.
    pub shifts_applied: u64,
    /// Number of non-identity degree-sorted relabelings applied.
    pub renamings: u64,
    /// Composed relabeling: `label_map[e - 1]` is the final label of the
    /// element originally called `e`. Identity when renaming is off.
    pub label_map: Vec<usize>,
    /// The resulting `l`-shifted family.
    pub final_family: SetFamily,
}

fn check_pair(n: usize, i: usize, j: usize) {
    assert!(i >= 1 && i <= n && j >= 1 && j <= n, "shift labels must lie in [{n}]");
    assert!(i != j, "shift requires two distinct labels");
}

fn shift_one(a: &KSet, i: usize, j: usize, f: &SetFamily) -> KSet {
    if a.contains(i) && !a.contains(j) {
        let target = a.with(j).without(i);
        if !f.contains(&target) {
            return target;
        }
    }
    *a
}

/// The ij-shift of a single member of `f`. Errors when `a` is not a member.
pub fn shift_set(a: &KSet, i: usize, j: usize, f: &SetFamily) -> Result<KSet> {
    check_pair(f.n(), i, j);
    if !f.contains(a) {
        return Err(Error::Input(format!("{a} is not a member of the family")));
    }
    Ok(shift_one(a, i, j, f))
}

/// The shifted family `F_ij = {A_ij : A ∈ F}`, every replacement decided
/// against the original `f`. Always the same size as `f`.
pub fn shift_family(f: &SetFamily, i: usize, j: usize) -> SetFamily {
    check_pair(f.n(), i, j);
    let shifted: Vec<KSet> = f.iter().map(|a| shift_one(a, i, j, f)).collect();
    let out = SetFamily::new(f.n(), f.k(), shifted).expect("shift preserves uniformity");
    debug_assert_eq!(out.len(), f.len(), "ij-shift must preserve family size");
    out
}

/// True iff `f` is fixed under every shift with `j ∈ [l]` and `i ∈ (l, n]`.
///
/// Checked pointwise: `F_ij = F` exactly when every admissible replacement
/// `(A ∪ {j}) \ {i}` is already a member, so no family copies are built.
pub fn is_l_shifted(f: &SetFamily, l: usize) -> bool {
    assert!(l >= 1 && l <= f.n(), "shift level must lie in 1..=n");
    for a in f.iter() {
        for j in 1..=l {
            if a.contains(j) {
                continue;
            }
            for i in (l + 1)..=f.n() {
                if a.contains(i) && !f.contains(&a.with(j).without(i)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Sorted (non-increasing) vector of the `l` largest degrees.
fn top_l_degrees(f: &SetFamily, l: usize) -> Vec<u64> {
    f.degree_profile().sorted()[..l].to_vec()
}

/// Applies the degree-sorted relabeling (degree descending, label ascending
/// on ties). Returns false when the relabeling is the identity.
fn apply_rename(fam: &mut SetFamily, label_map: &mut [usize]) -> bool {
    let profile = fam.degree_profile();
    let mut new_label = vec![0usize; fam.n()];
    for (pos, &e) in profile.perm().iter().enumerate() {
        new_label[e - 1] = pos + 1;
    }
    if new_label.iter().enumerate().all(|(idx, &nl)| nl == idx + 1) {
        return false;
    }
    let n = fam.n();
    let members: Vec<KSet> = fam
        .iter()
        .map(|a| {
            let elems: Vec<usize> = a.elems().map(|e| new_label[e - 1]).collect();
            KSet::from_elems(n, &elems).expect("relabeling is a permutation")
        })
        .collect();
    *fam = SetFamily::new(n, fam.k(), members).expect("relabeling preserves shape");
    for slot in label_map.iter_mut() {
        *slot = new_label[*slot - 1];
    }
    true
}

/// Compresses `f` to an `l`-shifted family.
///
/// Each pass sweeps `j ∈ [l]` ascending, `i ∈ (l, n]` ascending, applying
/// every effective shift immediately; passes repeat until one changes
/// nothing. With `rename` set, elements are first relabeled in order of
/// decreasing degree (ties toward smaller labels), and relabeling alternates
/// with shift phases until the family is `l`-shifted *and* degree-sorted, so
/// the final `[l]` carries the `l` largest degrees.
///
/// Termination is monitored: the sorted vector of the `l` largest degrees
/// must strictly increase whenever a phase applies shifts after the initial
/// relabeling, and a hard cap of `C(n,k) * k * n` passes trips an internal
/// error. Neither fires on well-formed inputs.
pub fn shift_to_fixpoint(f: &SetFamily, l: usize, rename: bool) -> Result<ShiftReport> {
    let n = f.n();
    let k = f.k();
    if l == 0 || l > n {
        return Err(Error::Input(format!("shift level {l} out of range 1..={n}")));
    }
    let pass_cap = binom(n as i64, k as i64)
        .saturating_mul((k * n) as u64)
        .max(4);

    let mut fam = f.clone();
    let mut rounds = 0u64;
    let mut shifts_applied = 0u64;
    let mut renamings = 0u64;
    let mut label_map: Vec<usize> = (1..=n).collect();
    let mut prev_top: Option<Vec<u64>> = None;

    if rename && apply_rename(&mut fam, &mut label_map) {
        renamings += 1;
    }

    loop {
        let mut phase_shifts = 0u64;
        loop {
            rounds += 1;
            if rounds > pass_cap {
                return Err(Error::Internal(format!(
                    "shift fixpoint guard tripped after {rounds} passes (cap {pass_cap})"
                )));
            }
            let mut changed = false;
            for j in 1..=l {
                for i in (l + 1)..=n {
                    let next = shift_family(&fam, i, j);
                    if next != fam {
                        fam = next;
                        changed = true;
                        phase_shifts += 1;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        shifts_applied += phase_shifts;
        debug_assert!(is_l_shifted(&fam, l));

        // After the initial rename, [l] holds the l largest degrees and
        // shifts only move degree into [l], so this vector must strictly
        // increase whenever shifts were applied and be unchanged otherwise.
        let top = top_l_degrees(&fam, l);
        if let Some(prev) = &prev_top {
            let ok = if phase_shifts > 0 { top > *prev } else { top == *prev };
            if !ok {
                return Err(Error::Internal(format!(
                    "top-{l} degree vector failed to increase: {prev:?} -> {top:?}"
                )));
            }
        }
        prev_top = Some(top);

        if !rename {
            break;
        }
        if !apply_rename(&mut fam, &mut label_map) {
            break;
        }
        renamings += 1;
    }

    Ok(ShiftReport {
        rounds,
        shifts_applied,
        renamings,
        label_map,
        final_family: fam,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::star;
    use crate::kset::enumerate_ksets;

    fn ks(n: usize, elems: &[usize]) -> KSet {
        KSet::from_elems(n, elems).unwrap()
    }

    fn fam(n: usize, k: usize, lists: &[&[usize]]) -> SetFamily {
        SetFamily::from_lists(n, k, lists).unwrap()
    }

    #[test]
    fn shift_set_examples() {
        let f = fam(3, 2, &[&[1, 3], &[2, 3]]);
        // {2,3} moves: 3 -> 1 gives {1,2}, absent from F.
        assert_eq!(shift_set(&ks(3, &[2, 3]), 3, 1, &f).unwrap(), ks(3, &[1, 2]));
        // {1,3} already contains j = 1.
        assert_eq!(shift_set(&ks(3, &[1, 3]), 3, 1, &f).unwrap(), ks(3, &[1, 3]));
        // Replacement present -> blocked.
        let g = fam(3, 2, &[&[1, 2], &[2, 3]]);
        assert_eq!(shift_set(&ks(3, &[2, 3]), 3, 1, &g).unwrap(), ks(3, &[2, 3]));
        // Not a member -> error.
        assert!(shift_set(&ks(3, &[1, 2]), 3, 1, &f).is_err());
    }

    #[test]
    fn shift_family_example() {
        let f = fam(3, 2, &[&[1, 3], &[2, 3]]);
        let shifted = shift_family(&f, 3, 1);
        assert_eq!(shifted, fam(3, 2, &[&[1, 2], &[1, 3]]));
        assert_eq!(shifted.len(), f.len());
    }

    #[test]
    fn shift_family_preserves_size() {
        // All (i, j) pairs on a family engineered with blocked and free moves.
        let f = fam(5, 2, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        for i in 1..=5 {
            for j in 1..=5 {
                if i != j {
                    assert_eq!(shift_family(&f, i, j).len(), f.len());
                }
            }
        }
    }

    #[test]
    fn stars_are_l_shifted_for_every_l() {
        let f = star(7, 3, 1).unwrap();
        for l in 1..=7 {
            assert!(is_l_shifted(&f, l));
        }
    }

    #[test]
    fn prefix_complete_family_is_shifted() {
        // C([6], 4) viewed on ground [10] is 6-shifted.
        let members: Vec<KSet> = enumerate_ksets(6, 4)
            .unwrap()
            .map(|s| KSet::from_bits(10, s.bits()).unwrap())
            .collect();
        let f = SetFamily::new(10, 4, members).unwrap();
        assert!(is_l_shifted(&f, 6));
    }

    #[test]
    fn non_shifted_detected() {
        assert!(!is_l_shifted(&fam(3, 2, &[&[2, 3]]), 1));
        assert!(!is_l_shifted(&fam(3, 2, &[&[2, 3]]), 2));
    }

    #[test]
    fn is_l_shifted_agrees_with_definition() {
        // Pointwise route vs literal F_ij = F for all admissible pairs.
        let families = [
            fam(5, 2, &[&[1, 2], &[2, 3], &[3, 4]]),
            fam(5, 2, &[&[1, 2], &[1, 3], &[2, 3]]),
            fam(6, 3, &[&[1, 2, 3], &[1, 2, 4], &[4, 5, 6]]),
            star(6, 3, 2).unwrap(),
        ];
        for f in &families {
            for l in 1..f.n() {
                let by_def = (1..=l).all(|j| {
                    ((l + 1)..=f.n()).all(|i| shift_family(f, i, j) == *f)
                });
                assert_eq!(is_l_shifted(f, l), by_def);
            }
        }
    }

    #[test]
    fn fixpoint_micro_example() {
        let f = fam(3, 2, &[&[2, 3]]);
        let report = shift_to_fixpoint(&f, 2, false).unwrap();
        assert_eq!(report.final_family, fam(3, 2, &[&[1, 2]]));
        assert_eq!(report.shifts_applied, 1);
        assert_eq!(report.renamings, 0);
        assert_eq!(report.label_map, vec![1, 2, 3]);
        assert!(is_l_shifted(&report.final_family, 2));
    }

    #[test]
    fn fixpoint_on_shifted_family_is_identity() {
        let f = star(7, 3, 1).unwrap();
        let report = shift_to_fixpoint(&f, 3, false).unwrap();
        assert_eq!(report.shifts_applied, 0);
        assert_eq!(report.rounds, 1);
        assert_eq!(report.final_family, f);
    }

    #[test]
    fn fixpoint_preserves_size_and_intersection_level() {
        let f = fam(
            6,
            3,
            &[&[2, 3, 6], &[2, 4, 6], &[3, 4, 6], &[2, 3, 4], &[2, 5, 6]],
        );
        assert!(f.is_intersecting());
        for l in 1..=4 {
            let report = shift_to_fixpoint(&f, l, false).unwrap();
            assert_eq!(report.final_family.len(), f.len());
            assert!(report.final_family.is_intersecting());
            assert!(is_l_shifted(&report.final_family, l));
        }
    }

    #[test]
    fn fixpoint_with_rename_sorts_degrees() {
        // Center at 4: renaming must move the heavy degree onto label 1.
        let f = star(6, 3, 4).unwrap();
        let report = shift_to_fixpoint(&f, 2, true).unwrap();
        let p = report.final_family.degree_profile();
        // [l] carries the l largest degrees, in non-increasing order.
        for j in 1..=2 {
            assert_eq!(p.degree_of(j), p.sorted_degree(j));
        }
        assert!(report.renamings >= 1);
        // label_map is a permutation.
        let mut seen = report.label_map.clone();
        seen.sort_unstable();
        assert_eq!(seen, (1..=6).collect::<Vec<_>>());
        // Degrees never drop on [l] relative to the relabeled input.
        let relabeled_input: Vec<KSet> = f
            .iter()
            .map(|a| {
                let elems: Vec<usize> =
                    a.elems().map(|e| report.label_map[e - 1]).collect();
                KSet::from_elems(6, &elems).unwrap()
            })
            .collect();
        let relabeled = SetFamily::new(6, 3, relabeled_input).unwrap();
        let before = relabeled.degree_profile();
        for j in 1..=2 {
            assert!(p.degree_of(j) >= before.degree_of(j));
        }
    }

    #[test]
    fn fixpoint_rejects_bad_level() {
        let f = fam(3, 2, &[&[2, 3]]);
        assert!(shift_to_fixpoint(&f, 0, false).is_err());
        assert!(shift_to_fixpoint(&f, 4, false).is_err());
    }
}
