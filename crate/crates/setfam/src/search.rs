//! Exhaustive enumeration of maximal t-intersecting families at desk scale.
//!
//! Vertices of the intersection graph are all k-subsets of `[n]` in colex
//! order; edges join pairs meeting in at least `t` elements. Maximal cliques
//! (enumerated with pivoted Bron–Kerbosch over bitset rows) are exactly the
//! maximal t-intersecting families. The shifted-only scan swaps in a derived
//! compatibility graph whose maximal cliques are the maximal `l`-shifted
//! families, which prunes the search space without losing any of them.

use crate::binom::binom;
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::kset::{enumerate_ksets, KSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

/// Default ceiling on `C(n, k)` before a search refuses to start.
pub const DEFAULT_VERTEX_CAP: usize = 4096;

// ---- dense bitset rows ----------------------------------------------------

fn bit_get(row: &[u64], i: usize) -> bool {
    (row[i >> 6] >> (i & 63)) & 1 == 1
}

fn bit_set(row: &mut [u64], i: usize) {
    row[i >> 6] |= 1 << (i & 63);
}

fn bit_clear(row: &mut [u64], i: usize) {
    row[i >> 6] &= !(1 << (i & 63));
}

fn and_vec(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn and_count(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

fn is_zero(a: &[u64]) -> bool {
    a.iter().all(|&w| w == 0)
}

fn ones_indices(a: &[u64]) -> Vec<usize> {
    let mut out = Vec::new();
    for (wi, &w) in a.iter().enumerate() {
        let mut bits = w;
        while bits != 0 {
            out.push(wi * 64 + bits.trailing_zeros() as usize);
            bits &= bits - 1;
        }
    }
    out
}

fn full_row(words: usize, nbits: usize) -> Vec<u64> {
    let mut row = vec![u64::MAX; words];
    let rem = nbits & 63;
    if rem != 0 {
        if let Some(last) = row.last_mut() {
            *last = (1u64 << rem) - 1;
        }
    }
    row
}

// ---- the graph ------------------------------------------------------------

/// Graph on all k-subsets of `[n]` (colex order), adjacency `|A ∩ B| >= t`.
pub struct IntersectionGraph {
    n: usize,
    k: usize,
    t: usize,
    verts: Vec<KSet>,
    rows: Vec<Vec<u64>>,
    words: usize,
    /// Vertices allowed into any clique; pruned scans shrink this.
    live: Vec<u64>,
}

impl IntersectionGraph {
    /// Builds the full graph. Fails with a capacity error when `C(n, k)`
    /// exceeds `cap` (default [`DEFAULT_VERTEX_CAP`]).
    pub fn build(n: usize, k: usize, t: usize, cap: Option<usize>) -> Result<Self> {
        let cap = cap.unwrap_or(DEFAULT_VERTEX_CAP);
        if !(1..=crate::kset::MAX_GROUND).contains(&n) {
            return Err(Error::GroundSize { n });
        }
        if k < 1 || k > n {
            return Err(Error::Input(format!("k = {k} out of range 1..={n}")));
        }
        let count = binom(n as i64, k as i64);
        if count > cap as u64 {
            return Err(Error::Capacity {
                what: format!("intersection graph on all {k}-subsets of [{n}]"),
                requested: count,
                limit: cap as u64,
                hint: "raise the vertex cap to search this range".into(),
            });
        }
        let verts: Vec<KSet> = enumerate_ksets(n, k)?.collect();
        let nv = verts.len();
        let words = nv.div_ceil(64);
        let mut rows = vec![vec![0u64; words]; nv];
        for u in 0..nv {
            for v in (u + 1)..nv {
                if verts[u].intersection_size(&verts[v]) >= t {
                    bit_set(&mut rows[u], v);
                    bit_set(&mut rows[v], u);
                }
            }
        }
        let live = full_row(words, nv);
        Ok(IntersectionGraph { n, k, t, verts, rows, words, live })
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn vertex(&self, idx: usize) -> &KSet {
        &self.verts[idx]
    }

    /// Degree of a vertex in the (possibly pruned) graph.
    pub fn degree(&self, idx: usize) -> usize {
        and_count(&self.rows[idx], &self.live) as usize
    }

    pub fn family_from_clique(&self, clique: &[usize]) -> Result<SetFamily> {
        SetFamily::new(self.n, self.k, clique.iter().map(|&i| self.verts[i]))
    }

    /// Restricts the graph: drop vertices failing `keep`, keep edges passing
    /// `edge` (checked on surviving pairs only).
    fn prune(
        &mut self,
        keep: impl Fn(usize) -> bool,
        edge: impl Fn(usize, usize) -> bool,
    ) {
        let nv = self.verts.len();
        let kept: Vec<usize> = (0..nv).filter(|&v| keep(v)).collect();
        let mut live = vec![0u64; self.words];
        for &v in &kept {
            bit_set(&mut live, v);
        }
        let mut rows = vec![vec![0u64; self.words]; nv];
        for (i, &u) in kept.iter().enumerate() {
            for &v in &kept[i + 1..] {
                if bit_get(&self.rows[u], v) && edge(u, v) {
                    bit_set(&mut rows[u], v);
                    bit_set(&mut rows[v], u);
                }
            }
        }
        self.rows = rows;
        self.live = live;
    }

    // ---- Bron–Kerbosch ------------------------------------------------

    /// Pivot from `P ∪ X` maximizing `|P ∩ N(u)|`.
    fn pick_pivot(&self, p: &[u64], x: &[u64]) -> Option<usize> {
        let mut best: Option<(usize, u32)> = None;
        for wi in 0..self.words {
            let mut bits = p[wi] | x[wi];
            while bits != 0 {
                let u = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let score = and_count(p, &self.rows[u]);
                if best.is_none_or(|(_, s)| score > s) {
                    best = Some((u, score));
                }
            }
        }
        best.map(|(u, _)| u)
    }

    fn bk(
        &self,
        r: &mut Vec<usize>,
        p: &mut [u64],
        x: &mut [u64],
        out: &mut dyn FnMut(&[usize]),
    ) {
        if is_zero(p) && is_zero(x) {
            out(r);
            return;
        }
        let pivot = match self.pick_pivot(p, x) {
            Some(u) => u,
            None => return,
        };
        let cands: Vec<u64> = p
            .iter()
            .zip(&self.rows[pivot])
            .map(|(pw, nw)| pw & !nw)
            .collect();
        for v in ones_indices(&cands) {
            let mut p2 = and_vec(p, &self.rows[v]);
            let mut x2 = and_vec(x, &self.rows[v]);
            r.push(v);
            self.bk(r, &mut p2, &mut x2, out);
            r.pop();
            bit_clear(p, v);
            bit_set(x, v);
        }
    }

    /// The top-level branch decomposition: candidates of the root call, each
    /// with the `(P, X)` pair it would see in sequential order. Running the
    /// branches in order reproduces the sequential enumeration exactly, which
    /// is what makes the threaded scan deterministic.
    fn top_branches(&self) -> Vec<Branch> {
        let p0 = self.live.clone();
        let x0 = vec![0u64; self.words];
        if is_zero(&p0) {
            return Vec::new();
        }
        let pivot = match self.pick_pivot(&p0, &x0) {
            Some(u) => u,
            None => return Vec::new(),
        };
        let cands: Vec<u64> = p0
            .iter()
            .zip(&self.rows[pivot])
            .map(|(pw, nw)| pw & !nw)
            .collect();
        let mut p = p0;
        let mut x = x0;
        let mut out = Vec::new();
        for v in ones_indices(&cands) {
            out.push(Branch {
                v,
                p: and_vec(&p, &self.rows[v]),
                x: and_vec(&x, &self.rows[v]),
            });
            bit_clear(&mut p, v);
            bit_set(&mut x, v);
        }
        out
    }

    fn run_branch(&self, b: &Branch, out: &mut dyn FnMut(&[usize])) {
        let mut r = vec![b.v];
        let mut p = b.p.clone();
        let mut x = b.x.clone();
        self.bk(&mut r, &mut p, &mut x, out);
    }

    /// Enumerates every maximal clique in deterministic order; `visit`
    /// receives the 0-based enumeration id and the vertex indices.
    pub fn for_each_maximal_clique(&self, mut visit: impl FnMut(u64, &[usize])) {
        let mut id = 0u64;
        for b in &self.top_branches() {
            self.run_branch(b, &mut |clique| {
                visit(id, clique);
                id += 1;
            });
        }
    }
}

struct Branch {
    v: usize,
    p: Vec<u64>,
    x: Vec<u64>,
}

// ---- aggregation ----------------------------------------------------------

/// Per-position maximum of the sorted degree sequence across all
/// enumerated families.
#[derive(Clone, Debug)]
pub struct DegreeMax {
    /// 1-based position in the sorted degree sequence.
    pub index: usize,
    pub value: u64,
    /// Enumeration id of the first family attaining the maximum.
    pub family_id: u64,
    pub witness: SetFamily,
}

/// Count of families whose sorted degree at `index` exceeds `rhs`.
#[derive(Clone, Debug)]
pub struct BoundCheck {
    pub index: usize,
    pub rhs: u64,
    pub families_exceeding: u64,
    pub max_value: u64,
    pub family_id: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub shifted_only: bool,
    pub shifted_l: Option<usize>,
    pub threads: usize,
    pub families_enumerated: u64,
    pub max_family_size: usize,
    pub max_family_id: u64,
    /// One entry per degree position 1..=n.
    pub max_degrees: Vec<DegreeMax>,
    pub bound: Option<BoundCheck>,
    pub elapsed_ms: u128,
}

impl SearchReport {
    /// JSON rendering; `witness_file` may attach a file name per degree entry.
    pub fn to_json(&self, witness_file: impl Fn(&DegreeMax) -> Option<String>) -> serde_json::Value {
        let degrees: Vec<serde_json::Value> = self
            .max_degrees
            .iter()
            .map(|d| {
                let mut v = serde_json::json!({
                    "index": d.index,
                    "value": d.value,
                    "family_id": d.family_id,
                });
                if let Some(name) = witness_file(d) {
                    v["witness_file"] = serde_json::Value::String(name);
                }
                v
            })
            .collect();
        serde_json::json!({
            "n": self.n,
            "k": self.k,
            "t": self.t,
            "shifted_only": self.shifted_only,
            "l": self.shifted_l,
            "threads": self.threads,
            "families": self.families_enumerated,
            "max_family_size": self.max_family_size,
            "max_family_id": self.max_family_id,
            "max_degrees": degrees,
            "bound": self.bound.as_ref().map(|b| serde_json::json!({
                "index": b.index,
                "rhs": b.rhs,
                "families_exceeding": b.families_exceeding,
                "max_value": b.max_value,
                "family_id": b.family_id,
            })),
            "elapsed_ms": self.elapsed_ms,
        })
    }
}

/// Running aggregate over one contiguous span of the enumeration.
struct Agg {
    families: u64,
    max_size: usize,
    max_size_id: u64,
    has_any: bool,
    max_d: Vec<Option<(u64, u64, SetFamily)>>,
    bound: Option<(usize, u64, u64, u64, Option<u64>)>, // (index, rhs, count, max, id)
}

impl Agg {
    fn new(n: usize, bound: Option<(usize, u64)>) -> Self {
        Agg {
            families: 0,
            max_size: 0,
            max_size_id: 0,
            has_any: false,
            max_d: vec![None; n],
            bound: bound.map(|(i, r)| (i, r, 0, 0, None)),
        }
    }

    fn visit(&mut self, clique: &[usize], g: &IntersectionGraph) -> Result<()> {
        let id = self.families;
        self.families += 1;
        let fam = g.family_from_clique(clique)?;
        let profile = fam.degree_profile();
        if !self.has_any || fam.len() > self.max_size {
            self.max_size = fam.len();
            self.max_size_id = id;
            self.has_any = true;
        }
        for j in 1..=g.n {
            let d = profile.sorted_degree(j);
            let slot = &mut self.max_d[j - 1];
            if slot.as_ref().is_none_or(|(v, _, _)| d > *v) {
                *slot = Some((d, id, fam.clone()));
            }
        }
        if let Some((idx, rhs, count, max_v, max_id)) = &mut self.bound {
            let d = profile.sorted_degree(*idx);
            if d > *rhs {
                *count += 1;
            }
            if d > *max_v || max_id.is_none() {
                *max_v = d;
                *max_id = Some(id);
            }
        }
        Ok(())
    }

    /// Appends `next`, which covers the enumeration span directly after
    /// `self`, remapping its local ids.
    fn merge(&mut self, next: Agg) {
        let off = self.families;
        self.families += next.families;
        if next.has_any && (!self.has_any || next.max_size > self.max_size) {
            self.max_size = next.max_size;
            self.max_size_id = next.max_size_id + off;
            self.has_any = true;
        }
        for (slot, other) in self.max_d.iter_mut().zip(next.max_d) {
            if let Some((v, id, fam)) = other {
                if slot.as_ref().is_none_or(|(sv, _, _)| v > *sv) {
                    *slot = Some((v, id + off, fam));
                }
            }
        }
        if let (Some(mine), Some(theirs)) = (&mut self.bound, next.bound) {
            mine.2 += theirs.2;
            if theirs.4.is_some() && (theirs.3 > mine.3 || mine.4.is_none()) {
                mine.3 = theirs.3;
                mine.4 = theirs.4.map(|i| i + off);
            }
        }
    }
}

fn run_aggregated(
    g: &IntersectionGraph,
    threads: usize,
    bound: Option<(usize, u64)>,
) -> Result<Agg> {
    let branches = g.top_branches();
    let threads = threads.max(1);
    if threads == 1 || branches.len() <= 1 {
        let mut agg = Agg::new(g.n, bound);
        let mut err = None;
        for b in &branches {
            g.run_branch(b, &mut |clique| {
                if err.is_none() {
                    if let Err(e) = agg.visit(clique, g) {
                        err = Some(e);
                    }
                }
            });
        }
        return match err {
            Some(e) => Err(e),
            None => Ok(agg),
        };
    }

    let next = AtomicUsize::new(0);
    let mut slots: Vec<Option<Result<Agg>>> = Vec::new();
    slots.resize_with(branches.len(), || None);
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for _ in 0..threads.min(branches.len()) {
            handles.push(scope.spawn(|| {
                let mut done: Vec<(usize, Result<Agg>)> = Vec::new();
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= branches.len() {
                        break;
                    }
                    let mut agg = Agg::new(g.n, bound);
                    let mut err = None;
                    g.run_branch(&branches[i], &mut |clique| {
                        if err.is_none() {
                            if let Err(e) = agg.visit(clique, g) {
                                err = Some(e);
                            }
                        }
                    });
                    done.push((i, err.map_or(Ok(agg), Err)));
                }
                done
            }));
        }
        for h in handles {
            for (i, res) in h.join().expect("search worker panicked") {
                slots[i] = Some(res);
            }
        }
    });
    let mut total = Agg::new(g.n, bound);
    for slot in slots {
        total.merge(slot.expect("branch not claimed by any worker")?);
    }
    Ok(total)
}

fn finish_report(
    g: &IntersectionGraph,
    agg: Agg,
    shifted_only: bool,
    shifted_l: Option<usize>,
    threads: usize,
    started: Instant,
) -> SearchReport {
    let max_degrees = agg
        .max_d
        .into_iter()
        .enumerate()
        .filter_map(|(i, slot)| {
            slot.map(|(value, family_id, witness)| DegreeMax {
                index: i + 1,
                value,
                family_id,
                witness,
            })
        })
        .collect();
    SearchReport {
        n: g.n,
        k: g.k,
        t: g.t,
        shifted_only,
        shifted_l,
        threads,
        families_enumerated: agg.families,
        max_family_size: agg.max_size,
        max_family_id: agg.max_size_id,
        max_degrees,
        bound: agg.bound.map(|(index, rhs, families_exceeding, max_value, family_id)| BoundCheck {
            index,
            rhs,
            families_exceeding,
            max_value,
            family_id,
        }),
        elapsed_ms: started.elapsed().as_millis(),
    }
}

/// Enumerates every maximal t-intersecting k-uniform family on `[n]`,
/// calling `visit` with the enumeration id and the family. Returns the count.
pub fn enumerate_maximal_families(
    n: usize,
    k: usize,
    t: usize,
    cap: Option<usize>,
    mut visit: impl FnMut(u64, &SetFamily),
) -> Result<u64> {
    let g = IntersectionGraph::build(n, k, t, cap)?;
    let mut count = 0u64;
    let mut err = None;
    g.for_each_maximal_clique(|id, clique| {
        if err.is_some() {
            return;
        }
        match g.family_from_clique(clique) {
            Ok(fam) => {
                visit(id, &fam);
                count = id + 1;
            }
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(count),
    }
}

/// Full scan: enumerate maximal t-intersecting families and aggregate
/// per-position degree maxima; optionally count violations of `d_index <= rhs`.
pub fn search_maximal(
    n: usize,
    k: usize,
    t: usize,
    cap: Option<usize>,
    threads: usize,
    bound: Option<(usize, u64)>,
) -> Result<SearchReport> {
    let started = Instant::now();
    let g = IntersectionGraph::build(n, k, t, cap)?;
    let agg = run_aggregated(&g, threads, bound)?;
    Ok(finish_report(&g, agg, false, None, threads, started))
}

/// Scans all maximal intersecting families for `d_{k+2} > C(n-2, k-2)`.
pub fn scan_question_5_1(
    n: usize,
    k: usize,
    cap: Option<usize>,
    threads: usize,
) -> Result<SearchReport> {
    if n < 2 {
        return Err(Error::Input(format!("n = {n} is too small to scan")));
    }
    let rhs = binom(n as i64 - 2, k as i64 - 2);
    search_maximal(n, k, 1, cap, threads, Some((k + 2, rhs)))
}

/// All sets reachable from `a` by repeatedly swapping an element above `l`
/// for an element of `[l]` not yet present.
pub fn l_closure(a: &KSet, l: usize) -> Result<Vec<KSet>> {
    let n = a.n();
    let outside: Vec<usize> = a.to_vec().into_iter().filter(|&e| e > l).collect();
    let inside_avail: Vec<usize> = (1..=l.min(n)).filter(|&e| !a.contains(e)).collect();
    if outside.len() > 22 {
        return Err(Error::Capacity {
            what: format!("shift closure of {a}"),
            requested: outside.len() as u64,
            limit: 22,
            hint: "closure enumeration is exponential in |A \\ [l]|".into(),
        });
    }
    let mut out = Vec::new();
    for t_mask in 0u64..(1 << outside.len()) {
        let removed: Vec<usize> = outside
            .iter()
            .enumerate()
            .filter(|(i, _)| (t_mask >> i) & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if removed.len() > inside_avail.len() {
            continue;
        }
        let mut base = *a;
        for &e in &removed {
            base = base.without(e);
        }
        for combo in combinations(&inside_avail, removed.len()) {
            let mut s = base;
            for e in combo {
                s = s.with(e);
            }
            out.push(s);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// All `size`-element subsets of `items`, in lexicographic index order.
fn combinations(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![Vec::new()];
    }
    if size > items.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance
        let mut i = size;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + items.len() - size {
                break;
            }
        }
        idx[i] += 1;
        for j in (i + 1)..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Scan restricted to `l`-shifted families (or the full scan when
/// `restrict_shifted` is false).
///
/// A family is `l`-shifted exactly when it is a union of shift closures, so
/// the maximal `l`-shifted t-intersecting families are the maximal cliques of
/// the compatibility graph: a vertex survives iff its closure is internally
/// t-intersecting, and an edge survives iff the two closures are cross
/// t-intersecting.
pub fn pruned_scan(
    n: usize,
    k: usize,
    l: usize,
    t: usize,
    restrict_shifted: bool,
    cap: Option<usize>,
    threads: usize,
) -> Result<SearchReport> {
    if !restrict_shifted {
        return search_maximal(n, k, t, cap, threads, None);
    }
    let started = Instant::now();
    if l == 0 || l > n {
        return Err(Error::Input(format!("l = {l} out of range 1..={n}")));
    }
    let mut g = IntersectionGraph::build(n, k, t, cap)?;
    let closures: Vec<Vec<KSet>> = (0..g.vertex_count())
        .map(|v| l_closure(g.vertex(v), l))
        .collect::<Result<_>>()?;
    let self_ok: Vec<bool> = closures
        .iter()
        .map(|c| cross_t_ok(c, c, t))
        .collect();
    g.prune(
        |v| self_ok[v],
        |u, v| cross_t_ok(&closures[u], &closures[v], t),
    );
    let agg = run_aggregated(&g, threads, None)?;
    Ok(finish_report(&g, agg, true, Some(l), threads, started))
}

/// Every pair drawn across the two lists meets in at least `t` elements
/// (identical sets are skipped: a set always meets itself).
fn cross_t_ok(a: &[KSet], b: &[KSet], t: usize) -> bool {
    a.iter().all(|x| {
        b.iter()
            .all(|y| x == y || x.intersection_size(y) >= t)
    })
}
