//! Degree-bound checkers and identity checks, reported as machine-readable
//! verdicts.
//!
//! Checkers never error on hypothesis failure: they flag `hypothesis_met`
//! and still evaluate the comparison with exact integer arithmetic, so a
//! verdict is always mechanical (`holds ⇔ lhs relation rhs`). Only malformed
//! inputs (mismatched grounds, subsets outside `[l]`, capacity) raise.

use crate::binom::binom;
use crate::error::{Error, Result};
use crate::family::{SetFamily, TraceFamily};
use crate::kset::KSet;
use crate::shifting::is_l_shifted;
use serde::Serialize;

/// Direction of a checked inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Le,
    Ge,
    Lt,
    Gt,
    Eq,
}

impl Relation {
    pub fn eval(self, lhs: u128, rhs: u128) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Gt => lhs > rhs,
            Relation::Eq => lhs == rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Lt => "<",
            Relation::Gt => ">",
            Relation::Eq => "==",
        }
    }
}

/// The object realizing the extremal value, when one is singled out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Element(usize),
    Set(Vec<usize>),
}

/// Parameters a bound was evaluated at.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct BoundParams {
    pub n: usize,
    pub k: usize,
    pub l: Option<usize>,
    pub t: Option<usize>,
}

/// One checked inequality: `holds` is always `lhs relation rhs`, and
/// `hypothesis_met` records whether the statement's assumptions applied.
#[derive(Clone, Debug, Serialize)]
pub struct BoundVerdict {
    pub bound_name: String,
    pub params: BoundParams,
    pub lhs: u128,
    pub rhs: u128,
    pub relation: Relation,
    pub holds: bool,
    pub hypothesis_met: bool,
    pub witness: Option<Witness>,
}

impl BoundVerdict {
    pub fn new(
        name: &str,
        params: BoundParams,
        lhs: u128,
        rhs: u128,
        relation: Relation,
        hypothesis_met: bool,
        witness: Option<Witness>,
    ) -> Self {
        BoundVerdict {
            bound_name: name.to_string(),
            params,
            lhs,
            rhs,
            relation,
            holds: relation.eval(lhs, rhs),
            hypothesis_met,
            witness,
        }
    }

    /// One-line human rendering.
    pub fn describe(&self) -> String {
        format!(
            "{}: {} {} {} -> {}{}",
            self.bound_name,
            self.lhs,
            self.relation.symbol(),
            self.rhs,
            if self.holds { "holds" } else { "VIOLATED" },
            if self.hypothesis_met { "" } else { " (hypothesis not met)" },
        )
    }
}

/// `C(a, b)` that treats a negative top argument as zero. Negative tops only
/// arise when a checker's hypothesis already failed; zero keeps the verdict
/// arithmetic total without touching any in-hypothesis value.
fn binom_z(a: i64, b: i64) -> u64 {
    if a < 0 {
        0
    } else {
        binom(a, b)
    }
}

/// `c * 2^e` with floor semantics for negative `e` (an integer `d <= c * 2^e`
/// is equivalent to `d <= floor(c * 2^e)`).
fn pow2_scaled(c: u64, e: i64) -> u128 {
    if e >= 0 {
        (c as u128) << e.min(120)
    } else {
        (c as u128) >> (-e).min(120)
    }
}

fn params(f: &SetFamily) -> BoundParams {
    BoundParams { n: f.n(), k: f.k(), l: None, t: None }
}

/// Minimum degree bound: for an intersecting family with `n > 2k`,
/// `d_n <= C(n-2, k-2)`.
pub fn check_thm_huang_zhao(f: &SetFamily) -> BoundVerdict {
    let (n, k) = (f.n(), f.k());
    let p = f.degree_profile();
    let hypothesis_met = n > 2 * k && f.is_intersecting();
    let lhs = p.sorted_degree(n) as u128;
    let rhs = binom_z(n as i64 - 2, k as i64 - 2) as u128;
    let witness = Some(Witness::Element(p.perm()[n - 1]));
    BoundVerdict::new("hz", params(f), lhs, rhs, Relation::Le, hypothesis_met, witness)
}

/// `(2k+1)`-th largest degree bound: for an intersecting family with
/// `n >= 2k+1`, `d_{2k+1} <= C(n-2, k-2)`.
pub fn check_thm_2k1(f: &SetFamily) -> BoundVerdict {
    let (n, k) = (f.n(), f.k());
    let p = f.degree_profile();
    let idx = 2 * k + 1;
    let hypothesis_met = n >= idx && f.is_intersecting();
    let lhs = p.sorted_degree(idx) as u128;
    let rhs = binom_z(n as i64 - 2, k as i64 - 2) as u128;
    let witness = (idx <= n).then(|| Witness::Element(p.perm()[idx - 1]));
    BoundVerdict::new("thm2k1", params(f), lhs, rhs, Relation::Le, hypothesis_met, witness)
}

/// `(k+2)`-th largest degree bound, hypothesized for `n > 12k`:
/// `d_{k+2} <= C(n-2, k-2)`. The comparison is evaluated regardless.
pub fn check_thm_k2(f: &SetFamily) -> BoundVerdict {
    let (n, k) = (f.n(), f.k());
    let p = f.degree_profile();
    let idx = k + 2;
    let hypothesis_met = n > 12 * k && f.is_intersecting();
    let lhs = p.sorted_degree(idx) as u128;
    let rhs = binom_z(n as i64 - 2, k as i64 - 2) as u128;
    let witness = (idx <= n).then(|| Witness::Element(p.perm()[idx - 1]));
    BoundVerdict::new("thmk2", params(f), lhs, rhs, Relation::Le, hypothesis_met, witness)
}

/// `(l+1)`-th largest degree bound:
/// `d_{l+1} <= C(n-2, k-2) + C(n-l-1, k-l)` for `eps*k <= l <= k+1` and
/// `n > c_eps * k`. `eps` defaults to `l/k` and `c_eps` to `3^(2 + 2/eps)`;
/// both gate only the hypothesis flag — the comparison itself is exact.
pub fn check_thm_l1(
    f: &SetFamily,
    l: usize,
    epsilon: Option<f64>,
    c_eps: Option<f64>,
) -> BoundVerdict {
    let (n, k) = (f.n(), f.k());
    let p = f.degree_profile();
    let eps = epsilon.unwrap_or(l as f64 / k as f64);
    let c = c_eps.unwrap_or_else(|| 3f64.powf(2.0 + 2.0 / eps));
    let hypothesis_met = f.is_intersecting()
        && eps * k as f64 <= l as f64
        && l <= k + 1
        && (n as f64) > c * k as f64;
    let lhs = p.sorted_degree(l + 1) as u128;
    let rhs = (binom_z(n as i64 - 2, k as i64 - 2)
        + binom_z(n as i64 - l as i64 - 1, k as i64 - l as i64)) as u128;
    let witness = (l < n).then(|| Witness::Element(p.perm()[l]));
    let mut v = BoundVerdict::new("thml1", params(f), lhs, rhs, Relation::Le, hypothesis_met, witness);
    v.params.l = Some(l);
    v
}

/// Trace-structure checks for an `l`-shifted intersecting family. Three
/// verdicts, each counting violations against zero:
///
/// * (a) the trace on `[l]` is upward closed among sets of size at most `k`;
/// * (b) when `l >= 2k`, the trace is intersecting;
/// * (c) members with `A ∩ B ∩ [l] = ∅` satisfy
///   `|A∩[l]| + |B∩[l]| + |A∩B| >= l+1`.
pub fn check_lemma_2_10(f: &SetFamily, l: usize) -> Result<Vec<BoundVerdict>> {
    let (n, k) = (f.n(), f.k());
    if l == 0 || l > n {
        return Err(Error::Input(format!("l = {l} out of range 1..={n}")));
    }
    let base = is_l_shifted(f, l) && f.is_intersecting();
    let trace = f.trace(l)?;
    let mut p = params(f);
    p.l = Some(l);

    // (a) upward closure violations: missing one-element extensions.
    let mut missing = 0u128;
    for s in trace.iter() {
        if s.card() + 1 > k {
            continue;
        }
        for e in 1..=l {
            if !s.contains(e) && !trace.contains(&s.with(e)) {
                missing += 1;
            }
        }
    }
    let a = BoundVerdict::new("lemma2.10a", p, missing, 0, Relation::Le, base, None);

    // (b) disjoint pairs in the trace (meaningful once l >= 2k).
    let mut disjoint_pairs = 0u128;
    let members = trace.members();
    for (i, s) in members.iter().enumerate() {
        for t in &members[i + 1..] {
            if s.is_disjoint(t) {
                disjoint_pairs += 1;
            }
        }
    }
    let b = BoundVerdict::new(
        "lemma2.10b",
        p,
        disjoint_pairs,
        0,
        Relation::Le,
        base && l >= 2 * k,
        None,
    );

    // (c) the trace-overlap inequality over all member pairs.
    let mut violations = 0u128;
    let sets = f.members();
    for (i, x) in sets.iter().enumerate() {
        for y in &sets[i..] {
            if x.intersect(y).restrict(l).is_empty() {
                let total = x.restrict(l).card() + y.restrict(l).card() + x.intersection_size(y);
                if total < l + 1 {
                    violations += 1;
                }
            }
        }
    }
    let c = BoundVerdict::new("lemma2.10c", p, violations, 0, Relation::Le, base, None);

    Ok(vec![a, b, c])
}

/// Per-size degree bounds certifying a low-degree element.
#[derive(Clone, Debug, Serialize)]
pub struct MDegreeBound {
    pub m: usize,
    pub degree: u64,
    pub bound: u64,
}

/// A ground element whose upward-closure m-degrees all sit under
/// `C(n_eff - 2, m - 2)`.
#[derive(Clone, Debug, Serialize)]
pub struct LowDegreeWitness {
    pub element: usize,
    pub bounds: Vec<MDegreeBound>,
}

/// Finds an element `i` of `[n_eff]` with
/// `mdegree(closure(G), i, m) <= C(n_eff - 2, m - 2)` for every `m <= k`.
/// For an intersecting `G` with `n_eff > 2k` such an element must exist;
/// finding none is reported as a violation error.
pub fn low_degree_element(g: &TraceFamily, n_eff: usize, k: usize) -> Result<LowDegreeWitness> {
    if g.l() > n_eff {
        return Err(Error::Input(format!(
            "family ground [{}] exceeds n_eff = {n_eff}",
            g.l()
        )));
    }
    let widened = TraceFamily::new(
        n_eff,
        g.iter()
            .map(|s| KSet::from_bits(n_eff, s.bits()))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let closure = widened.upward_closure()?;
    for i in 1..=n_eff {
        let mut bounds = Vec::with_capacity(k);
        let mut ok = true;
        for m in 1..=k {
            let degree = closure.mdegree(i, m);
            let bound = binom_z(n_eff as i64 - 2, m as i64 - 2);
            if degree > bound {
                ok = false;
                break;
            }
            bounds.push(MDegreeBound { m, degree, bound });
        }
        if ok {
            return Ok(LowDegreeWitness { element: i, bounds });
        }
    }
    Err(Error::LemmaViolation {
        lemma: "low-degree element",
        details: format!(
            "no element of [{n_eff}] meets every m-degree bound up to m = {k} \
             (is the input family intersecting with n_eff > 2k?)"
        ),
    })
}

/// Size bounds for a cross-t-intersecting pair: `|A| <= 2^b * C(n-b, a-t)`
/// and symmetrically for `|B|`, hypothesized for non-empty families with
/// `n > 3 * max(a, b)`.
#[derive(Clone, Debug, Serialize)]
pub struct CrossSizeVerdict {
    pub first: BoundVerdict,
    pub second: BoundVerdict,
    pub hypothesis_met: bool,
    pub holds: bool,
}

pub fn check_cross_size(a: &SetFamily, b: &SetFamily, t: usize) -> Result<CrossSizeVerdict> {
    if a.n() != b.n() {
        return Err(Error::MismatchedGround { left: a.n(), right: b.n() });
    }
    let n = a.n();
    let (ak, bk) = (a.k(), b.k());
    let hypothesis_met = !a.is_empty()
        && !b.is_empty()
        && n > 3 * ak.max(bk)
        && a.is_cross_t_intersecting(b, t)?;
    let mut p = BoundParams { n, k: ak, l: None, t: Some(t) };
    let bound = |other_k: usize, own_k: usize| {
        pow2_scaled(
            binom_z(n as i64 - other_k as i64, own_k as i64 - t as i64),
            other_k as i64,
        )
    };
    let first = BoundVerdict::new(
        "lemma4.1",
        p,
        a.len() as u128,
        bound(bk, ak),
        Relation::Le,
        hypothesis_met,
        None,
    );
    p.k = bk;
    let second = BoundVerdict::new(
        "lemma4.1",
        p,
        b.len() as u128,
        bound(ak, bk),
        Relation::Le,
        hypothesis_met,
        None,
    );
    let holds = first.holds && second.holds;
    Ok(CrossSizeVerdict { first, second, hypothesis_met, holds })
}

/// Subset-degree dichotomy: for disjoint `S1, S2 ⊆ [l]` in an `l`-shifted
/// intersecting family with `n >= 4k + l`, at least one of the two
/// subset-degree bounds holds.
#[derive(Clone, Debug, Serialize)]
pub struct DichotomyVerdict {
    pub first: BoundVerdict,
    pub second: BoundVerdict,
    pub hypothesis_met: bool,
    /// At least one branch holds.
    pub holds: bool,
}

pub fn check_lemma_4_2(
    f: &SetFamily,
    l: usize,
    s1: &KSet,
    s2: &KSet,
) -> Result<DichotomyVerdict> {
    let (n, k) = (f.n(), f.k());
    if l == 0 || l > n {
        return Err(Error::Input(format!("l = {l} out of range 1..={n}")));
    }
    for s in [s1, s2] {
        if s.max_elem().unwrap_or(0) > l {
            return Err(Error::Input(format!("subset {s} is not contained in [{l}]")));
        }
    }
    let hypothesis_met = s1.is_disjoint(s2)
        && n >= 4 * k + l
        && is_l_shifted(f, l)
        && f.is_intersecting();
    let mut p = params(f);
    p.l = Some(l);
    // d_{S1} <= 2^(k - |S2|) * C(n - l - k + |S2|, k - l + |S2| - 1), and
    // the mirror-image bound for d_{S2}.
    let branch = |own: &KSet, other: &KSet| -> Result<BoundVerdict> {
        let j = other.card() as i64;
        let rhs = pow2_scaled(
            binom_z(n as i64 - l as i64 - k as i64 + j, k as i64 - l as i64 + j - 1),
            k as i64 - j,
        );
        let lhs = f.subset_degree(&own.restrict(l), l)? as u128;
        Ok(BoundVerdict::new(
            "lemma4.2",
            p,
            lhs,
            rhs,
            Relation::Le,
            hypothesis_met,
            Some(Witness::Set(own.to_vec())),
        ))
    };
    let first = branch(s1, s2)?;
    let second = branch(s2, s1)?;
    let holds = first.holds || second.holds;
    Ok(DichotomyVerdict { first, second, hypothesis_met, holds })
}

/// The dichotomy bound as a function of the opposite subset's size:
/// `f(j) = 2^(k-j) * C(n - k - l + j, k - l + j - 1)`. Its monotonicity in
/// `j` is what lets a single threshold cover all small subsets.
pub fn cor_4_3_f(n: usize, k: usize, l: usize, j: usize) -> u128 {
    pow2_scaled(
        binom_z(
            n as i64 - k as i64 - l as i64 + j as i64,
            k as i64 - l as i64 + j as i64 - 1,
        ),
        k as i64 - j as i64,
    )
}

/// Membership threshold for the high-degree trace family of
/// [`check_cor_4_3`]: `2^(k-m) * C(n - k - l + m, k - l + m)`.
pub fn cor_4_3_g_threshold(n: usize, k: usize, l: usize, m: usize) -> u128 {
    pow2_scaled(
        binom_z(
            n as i64 - k as i64 - l as i64 + m as i64,
            k as i64 - l as i64 + m as i64,
        ),
        k as i64 - m as i64,
    )
}

/// The family of small high-subset-degree traces, which must be intersecting.
#[derive(Clone, Debug)]
pub struct Cor43Verdict {
    pub hypothesis_met: bool,
    /// `m = floor((l-1)/2)`.
    pub m: usize,
    /// Degree threshold `f(m)` defining membership.
    pub threshold: u128,
    /// `{S ⊆ [l] : |S| <= m, d_S >= f(m)}` as a family over `[l]`.
    pub g: TraceFamily,
    pub g_is_intersecting: bool,
    /// `f(j) <= f(j+1)` for all `j <= m`; only evaluated when `n > 3k`.
    pub f_monotone: Option<bool>,
}

impl Cor43Verdict {
    pub fn holds(&self) -> bool {
        self.g_is_intersecting && self.f_monotone.unwrap_or(true)
    }
}

pub fn check_cor_4_3(f: &SetFamily, l: usize) -> Result<Cor43Verdict> {
    let (n, k) = (f.n(), f.k());
    if l == 0 || l > n {
        return Err(Error::Input(format!("l = {l} out of range 1..={n}")));
    }
    if l > 22 {
        return Err(Error::Capacity {
            what: format!("subset enumeration over [{l}]"),
            requested: l as u64,
            limit: 22,
            hint: "the subset sweep materializes 2^l candidates".into(),
        });
    }
    let m = (l - 1) / 2;
    // `l <= k + m` keeps the threshold binomial's lower index nonnegative.
    // Below it the threshold collapses to zero, every subset of size <= m
    // (including the empty set) enters G, and the statement is not claimed.
    let hypothesis_met =
        n >= 4 * k + l && l <= k + m && is_l_shifted(f, l) && f.is_intersecting();
    let threshold = cor_4_3_g_threshold(n, k, l, m);
    let mut members = Vec::new();
    for mask in 0u64..(1 << l) {
        let s = KSet::from_bits(n.max(l), mask)?.restrict(l);
        if s.card() > m {
            continue;
        }
        if f.subset_degree(&s, l)? as u128 >= threshold {
            members.push(KSet::from_bits(l, mask)?);
        }
    }
    let g = TraceFamily::new(l, members)?;
    let g_is_intersecting = g.is_intersecting();
    let f_monotone = (n > 3 * k).then(|| {
        (1..=m).all(|j| cor_4_3_f(n, k, l, j) <= cor_4_3_f(n, k, l, j + 1))
    });
    Ok(Cor43Verdict { hypothesis_met, m, threshold, g, g_is_intersecting, f_monotone })
}

/// Checks `Σ_{m=1}^{k} C(2k-1, m-2) * C(n-2k-1, k-m) == C(n-2, k-2)` exactly.
pub fn vandermonde_identity(n: usize, k: usize) -> Result<bool> {
    if !(1..=32).contains(&k) {
        return Err(Error::Input(format!("k = {k} out of range 1..=32")));
    }
    if n < 2 * k + 1 || n > 66 {
        return Err(Error::Input(format!(
            "n = {n} out of range {}..=66 for k = {k}",
            2 * k + 1
        )));
    }
    let lhs: u128 = (1..=k as i64)
        .map(|m| {
            binom(2 * k as i64 - 1, m - 2) as u128
                * binom(n as i64 - 2 * k as i64 - 1, k as i64 - m) as u128
        })
        .sum();
    Ok(lhs == binom(n as i64 - 2, k as i64 - 2) as u128)
}
