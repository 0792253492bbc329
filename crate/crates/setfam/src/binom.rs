//! Exact binomial coefficients from a precomputed Pascal table.
//!
//! Everything in this crate compares degrees and family sizes exactly, so the
//! coefficients are exact `u64` values rather than floats. The table covers
//! `C(a, b)` for `a <= 64`, which is the largest top argument reachable from a
//! ground set of size 62; `C(64, 32)` still fits in a `u64`.

/// Largest supported top argument.
pub const MAX_A: usize = 64;

static TABLE: [[u64; MAX_A + 1]; MAX_A + 1] = build_table();

const fn build_table() -> [[u64; MAX_A + 1]; MAX_A + 1] {
    let mut t = [[0u64; MAX_A + 1]; MAX_A + 1];
    let mut a = 0;
    while a <= MAX_A {
        t[a][0] = 1;
        let mut b = 1;
        while b <= a {
            t[a][b] = t[a - 1][b - 1] + if b < a { t[a - 1][b] } else { 0 };
            b += 1;
        }
        a += 1;
    }
    t
}

/// `C(a, b)` exactly. Returns 0 when `b < 0` or `b > a`.
///
/// Signed arguments let bound formulas like `C(n-l-1, k-l)` fall to zero
/// naturally when the lower index goes negative.
///
/// # Panics
///
/// Panics when `a < 0` or `a > 64`; callers validate ground sizes first.
pub fn binom(a: i64, b: i64) -> u64 {
    assert!(
        (0..=MAX_A as i64).contains(&a),
        "binom: top argument {a} out of range 0..=64"
    );
    if b < 0 || b > a {
        return 0;
    }
    TABLE[a as usize][b as usize]
}
