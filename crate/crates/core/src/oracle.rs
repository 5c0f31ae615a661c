//! Exhaustive small-instance enumeration and the cross-validation matrix built on it.
//!
//! Everything here works on labeled objects over `[n]` without isomorphism reduction. Complexes
//! are handled as sorted lists of `u64` facet bitmasks (bit `i` is vertex `i + 1`). The
//! definitional checks in this module (permutation search for leaf orders, subset listing for
//! face counts, cycle listing for chordality) deliberately avoid the fast paths they check.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::characterize::{check_unimodal, decompose, intersection_chain_holds, is_quasi_forest_fvector, realize};
use crate::complex::{f_vector, FVector, Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::graphs::{clique_complex, is_chordal, is_strongly_chordal, Graph};
use crate::recognize::{is_forest, leaf_order, verify_leaf_order};
use crate::transforms::{binomial, f_polynomial, facet_signature_polynomial};

pub const MAX_SCOPE_VERTICES: usize = 7;
pub const MAX_SCOPE_FACETS: usize = 5;
/// Hard cap on the number of items a single enumeration may produce.
pub const MAX_ITEMS: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationScope {
    pub max_vertices: usize,
    pub max_facets: usize,
    pub max_dimension: Option<usize>,
}

impl EnumerationScope {
    pub fn new(max_vertices: usize, max_facets: usize) -> Result<Self> {
        if max_vertices == 0 || max_vertices > MAX_SCOPE_VERTICES {
            return Err(Error::ResourceLimit { what: "scope vertices", got: max_vertices, limit: MAX_SCOPE_VERTICES });
        }
        if max_facets == 0 || max_facets > MAX_SCOPE_FACETS {
            return Err(Error::ResourceLimit { what: "scope facets", got: max_facets, limit: MAX_SCOPE_FACETS });
        }
        Ok(EnumerationScope { max_vertices, max_facets, max_dimension: None })
    }

    pub fn with_max_dimension(mut self, max_dimension: usize) -> Self {
        self.max_dimension = Some(max_dimension);
        self
    }

    fn max_facet_size(&self) -> usize {
        self.max_dimension.map_or(self.max_vertices, |m| (m + 1).min(self.max_vertices))
    }
}

// ---------------------------------------------------------------------------------------------
// graphs

/// Every labeled simple graph on exactly `n` vertices, ordered by edge bitmask, where bit `i`
/// is the `i`-th pair `(u, v)`, `u < v`, in lexicographic order.
pub fn graphs_on(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_SCOPE_VERTICES {
        return Err(Error::ResourceLimit { what: "graph vertices", got: n, limit: MAX_SCOPE_VERTICES });
    }
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).map(move |mask| {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &e)| e).collect();
        Graph::new(n, &edges).expect("enumerated edges are valid")
    }))
}

/// Every labeled graph with `1 <= n <= scope.max_vertices` vertices, by `n` then edge bitmask.
pub fn enumerate_graphs(scope: &EnumerationScope) -> Result<impl Iterator<Item = Graph>> {
    let per_n = (1..=scope.max_vertices).map(graphs_on).collect::<Result<Vec<_>>>()?;
    Ok(per_n.into_iter().flatten())
}

/// Chordality straight from the definition: every cycle of length at least 4 has a chord.
pub fn chordal_by_cycles(g: &Graph) -> bool {
    let mut bad = false;
    for_each_cycle(g, &mut |cycle| {
        let len = cycle.len();
        if len >= 4 {
            let chord =
                (0..len).any(|i| (i + 2..len).any(|j| !(i == 0 && j == len - 1) && g.has_edge(cycle[i], cycle[j])));
            if !chord {
                bad = true;
            }
        }
        !bad
    });
    !bad
}

/// Strong chordality from the definition, with distances measured either way round the cycle.
pub fn strongly_chordal_by_cycles(g: &Graph) -> bool {
    if !chordal_by_cycles(g) {
        return false;
    }
    let mut bad = false;
    for_each_cycle(g, &mut |cycle| {
        let len = cycle.len();
        if len >= 6 && len % 2 == 0 {
            let odd = (0..len).any(|i| {
                (i + 1..len).any(|j| {
                    let forward = j - i;
                    let backward = len - forward;
                    forward > 1 && backward > 1 && forward % 2 == 1 && g.has_edge(cycle[i], cycle[j])
                })
            });
            if !odd {
                bad = true;
            }
        }
        !bad
    });
    !bad
}

/// Calls `visit` on every simple cycle (length >= 3, 1-based labels) until it returns false.
fn for_each_cycle(g: &Graph, visit: &mut dyn FnMut(&[usize]) -> bool) {
    fn extend(g: &Graph, path: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let start = path[0];
        let last = *path.last().unwrap();
        for w in start + 1..=g.vertex_count() {
            if !g.has_edge(last, w) || path.contains(&w) {
                continue;
            }
            path.push(w);
            if path.len() >= 3 && g.has_edge(w, start) && path[1] < w && !visit(path) {
                return false;
            }
            let go_on = extend(g, path, visit);
            path.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    for start in 1..=g.vertex_count() {
        if !extend(g, &mut vec![start], visit) {
            return;
        }
    }
}

/// Maximal cliques by listing every vertex subset.
pub fn maximal_cliques_by_subsets(g: &Graph) -> BTreeSet<Vec<usize>> {
    let n = g.vertex_count();
    let is_clique =
        |m: u32| (0..n).all(|u| (u + 1..n).all(|v| m & (1 << u) == 0 || m & (1 << v) == 0 || g.has_edge(u + 1, v + 1)));
    let cliques: Vec<u32> = (1u32..(1 << n)).filter(|&m| is_clique(m)).collect();
    cliques
        .iter()
        .filter(|&&m| !cliques.iter().any(|&big| big != m && m & !big == 0))
        .map(|&m| (0..n).filter(|v| m & (1 << v) != 0).map(|v| v + 1).collect())
        .collect()
}

// ---------------------------------------------------------------------------------------------
// complexes as bitmasks

pub fn masks_to_complex(masks: &[u64]) -> SimplicialComplex {
    SimplicialComplex::from_facets(masks.iter().map(|&m| {
        Face::new((0..64).filter(|i| m & (1 << i) != 0).map(|i| i as Vertex + 1)).expect("labels start at 1")
    }))
    .expect("nonempty facet list")
}

pub fn complex_to_masks(c: &SimplicialComplex) -> Vec<u64> {
    let mut masks: Vec<u64> =
        c.facets().iter().map(|f| f.vertices().iter().fold(0u64, |m, &v| m | (1 << (v - 1)))).collect();
    masks.sort_unstable();
    masks
}

/// Whether `f` has a branch among `others` (facets of the complex other than `f`).
fn is_leaf_among(f: u64, others: &[u64]) -> bool {
    others.iter().any(|&g| others.iter().all(|&h| h & f & !(g & f) == 0))
}

/// Leaf order by trying every permutation.
pub fn quasi_forest_by_permutations(masks: &[u64]) -> bool {
    fn search(order: &mut Vec<u64>, rest: &mut Vec<u64>) -> bool {
        if rest.is_empty() {
            return true;
        }
        for i in 0..rest.len() {
            let f = rest.remove(i);
            let ok = order.is_empty() || is_leaf_among(f, order);
            if ok {
                order.push(f);
                if search(order, rest) {
                    return true;
                }
                order.pop();
            }
            rest.insert(i, f);
        }
        false
    }
    search(&mut Vec::new(), &mut masks.to_vec())
}

/// Forest test by listing every facet subset.
pub fn forest_by_subsets(masks: &[u64]) -> bool {
    let q = masks.len();
    (1u32..(1 << q)).filter(|s| s.count_ones() >= 2).all(|s| {
        let members: Vec<u64> = (0..q).filter(|i| s & (1 << i) != 0).map(|i| masks[i]).collect();
        members.iter().enumerate().any(|(i, &f)| {
            let others: Vec<u64> = members.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &g)| g).collect();
            is_leaf_among(f, &others)
        })
    })
}

/// Face counts by collecting every subset of every facet into a set.
pub fn naive_f_vector(c: &SimplicialComplex) -> Vec<u64> {
    let mut faces: HashSet<Vec<Vertex>> = HashSet::new();
    for facet in c.facets() {
        let v = facet.vertices();
        for m in 1u64..(1 << v.len()) {
            faces.insert((0..v.len()).filter(|i| m & (1 << i) != 0).map(|i| v[i]).collect());
        }
    }
    let d = c.max_facet_size();
    let mut counts = vec![0u64; d];
    for f in faces {
        counts[f.len() - 1] += 1;
    }
    counts
}

/// Every complex on vertices within `[n]` with at most `k` facets (antichains of nonempty
/// subsets), facets limited to `max_size` vertices. Fails once more than [`MAX_ITEMS`] exist.
pub fn all_complexes(n: usize, k: usize, max_size: usize) -> Result<Vec<Vec<u64>>> {
    let candidates: Vec<u64> = (1u64..(1 << n)).filter(|m| m.count_ones() as usize <= max_size).collect();
    let mut out = Vec::new();
    fn rec(cands: &[u64], start: usize, k: usize, chosen: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) -> bool {
        if !chosen.is_empty() {
            if out.len() == MAX_ITEMS {
                return false;
            }
            out.push(chosen.clone());
        }
        if chosen.len() == k {
            return true;
        }
        for i in start..cands.len() {
            let m = cands[i];
            if chosen.iter().any(|&c| c & m == c || c & m == m) {
                continue;
            }
            chosen.push(m);
            let ok = rec(cands, i + 1, k, chosen, out);
            chosen.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    if !rec(&candidates, 0, k, &mut Vec::new(), &mut out) {
        return Err(Error::ResourceLimit { what: "enumerated complexes", got: MAX_ITEMS + 1, limit: MAX_ITEMS });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------------------------
// quasi-forest enumeration

/// Quasi-forests grown one leaf at a time, yielded level by level (by facet count), each level
/// in increasing order of its sorted facet-mask list.
pub struct QuasiForestStream {
    candidates: Vec<u64>,
    max_facets: usize,
    level: Vec<Vec<u64>>,
    facets_in_level: usize,
    pos: usize,
    produced: usize,
    failed: bool,
}

impl QuasiForestStream {
    fn new(candidates: Vec<u64>, max_facets: usize) -> Self {
        let level = candidates.iter().map(|&m| vec![m]).collect();
        QuasiForestStream { candidates, max_facets, level, facets_in_level: 1, pos: 0, produced: 0, failed: false }
    }

    fn grow(&self) -> Vec<Vec<u64>> {
        let mut next: BTreeSet<Vec<u64>> = BTreeSet::new();
        for complex in &self.level {
            for &cand in &self.candidates {
                if complex.iter().any(|&f| f & cand == f || f & cand == cand) {
                    continue;
                }
                if is_leaf_among(cand, complex) {
                    let mut grown = complex.clone();
                    grown.push(cand);
                    grown.sort_unstable();
                    next.insert(grown);
                }
            }
        }
        next.into_iter().collect()
    }
}

impl Iterator for QuasiForestStream {
    type Item = Result<Vec<u64>>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        while self.pos == self.level.len() {
            if self.facets_in_level == self.max_facets || self.level.is_empty() {
                return None;
            }
            self.level = self.grow();
            self.facets_in_level += 1;
            self.pos = 0;
        }
        self.produced += 1;
        if self.produced > MAX_ITEMS {
            self.failed = true;
            return Some(Err(Error::ResourceLimit {
                what: "enumerated complexes",
                got: self.produced,
                limit: MAX_ITEMS,
            }));
        }
        self.pos += 1;
        Some(Ok(self.level[self.pos - 1].clone()))
    }
}

/// Every quasi-forest whose vertices lie in `[scope.max_vertices]`, with at most
/// `scope.max_facets` facets, as sorted facet masks.
pub fn quasi_forest_masks(scope: &EnumerationScope) -> QuasiForestStream {
    let max_size = scope.max_facet_size();
    let candidates = (1u64..(1 << scope.max_vertices)).filter(|m| m.count_ones() as usize <= max_size).collect();
    QuasiForestStream::new(candidates, scope.max_facets)
}

/// [`quasi_forest_masks`] as complexes.
pub fn enumerate_quasi_forests(scope: &EnumerationScope) -> impl Iterator<Item = Result<SimplicialComplex>> {
    quasi_forest_masks(scope).map(|r| r.map(|m| masks_to_complex(&m)))
}

/// Pure quasi-forests within the scope, by facet size and then as in [`quasi_forest_masks`].
pub fn enumerate_pure_quasi_forests(scope: &EnumerationScope) -> impl Iterator<Item = Result<SimplicialComplex>> {
    let n = scope.max_vertices;
    let max_facets = scope.max_facets;
    (1..=scope.max_facet_size()).flat_map(move |size| {
        let candidates = (1u64..(1 << n)).filter(|m| m.count_ones() as usize == size).collect();
        QuasiForestStream::new(candidates, max_facets).map(|r| r.map(|m| masks_to_complex(&m)))
    })
}

// ---------------------------------------------------------------------------------------------
// sequences

/// `c_i = sum_{j=i}^{d} (-1)^{j-i} C(j, i) f_{j-1}`, the binomial expansion of
/// `sum_j f_{j-1} (x - 1)^j` written out term by term.
pub fn c_by_binomials(f: &[u64]) -> Vec<i128> {
    let d = f.len();
    let full: Vec<i128> = std::iter::once(1).chain(f.iter().map(|&v| v as i128)).collect();
    (0..=d)
        .map(|i| {
            (i..=d)
                .map(|j| {
                    let term = binomial(j, i).unwrap() * full[j];
                    if (j - i) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect()
}

pub fn passes_suffix_condition(c: &[i128]) -> bool {
    let d = c.len() - 1;
    (1..=d).all(|k| c[k..].iter().sum::<i128>() > 0)
}

pub fn passes_pure_suffix_condition(c: &[i128]) -> bool {
    let d = c.len() - 1;
    passes_suffix_condition(c) && (1..d).all(|i| c[i] <= 0)
}

/// Fewest facets of any quasi-forest with this c-sequence: the sum of its positive entries.
pub fn min_facets(c: &[i128]) -> usize {
    c.iter().filter(|&&v| v > 0).sum::<i128>() as usize
}

/// Positive sequences with `f_0 <= n`, `d <= max_len` and `f_i <= C(n, i + 1)`.
pub fn sequences_in_box(n: usize, max_len: usize) -> Vec<Vec<u64>> {
    let caps: Vec<u64> = (1..=max_len).map(|i| binomial(n, i).unwrap() as u64).collect();
    let mut out = Vec::new();
    fn rec(caps: &[u64], cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == caps.len() {
            return;
        }
        for v in 1..=caps[cur.len()] {
            cur.push(v);
            rec(caps, cur, out);
            cur.pop();
        }
    }
    rec(&caps, &mut Vec::new(), &mut out);
    out
}

// ---------------------------------------------------------------------------------------------
// cross validation

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub instances: usize,
    pub counterexample: Option<String>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Accumulates one property over many instances, keeping the first counterexample.
struct Tally {
    result: PropertyResult,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { result: PropertyResult { name, instances: 0, counterexample: None } }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.result.instances += 1;
        if !ok && self.result.counterexample.is_none() {
            self.result.counterexample = Some(describe());
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub scope: EnumerationScope,
    pub properties: Vec<PropertyResult>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::passed)
    }

    pub fn get(&self, name: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.name == name)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.properties {
            write!(f, "{} {} {}", p.name, p.instances, if p.passed() { "pass" } else { "fail" })?;
            if let Some(ce) = &p.counterexample {
                write!(f, " {ce}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn masks_str(masks: &[u64]) -> String {
    masks_to_complex(masks).facets().iter().map(|f| format!("{{{f}}}")).collect::<Vec<_>>().join(",")
}

fn fv_str(f: &[u64]) -> String {
    f.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn set_diff_str(a: &BTreeSet<Vec<u64>>, b: &BTreeSet<Vec<u64>>) -> Option<String> {
    let only_a = a.difference(b).next();
    let only_b = b.difference(a).next();
    match (only_a, only_b) {
        (None, None) => None,
        (Some(x), _) => Some(format!("({}) only on the left", fv_str(x))),
        (None, Some(y)) => Some(format!("({}) only on the right", fv_str(y))),
    }
}

/// Runs the full property matrix over the scope's universe. Any counterexample is a failure.
pub fn cross_validate(scope: &EnumerationScope) -> Result<ValidationReport> {
    let n = scope.max_vertices;
    let k = scope.max_facets;
    let mut props = Vec::new();

    let stream: Vec<Vec<u64>> = quasi_forest_masks(scope).collect::<Result<_>>()?;
    let again: Vec<Vec<u64>> = quasi_forest_masks(scope).collect::<Result<_>>()?;
    let mut determinism = Tally::new("deterministic-stream");
    determinism.check(stream == again, || "two runs differ".to_string());
    props.push(determinism.result);

    let generated: HashSet<Vec<u64>> = stream.iter().cloned().collect();
    let universe = all_complexes(n, k, scope.max_facet_size())?;

    let mut naive_f = Tally::new("f-vector-matches-naive");
    let mut gen_vs_rec = Tally::new("generator-matches-leaf-order");
    let mut rec_vs_perm = Tally::new("leaf-order-matches-permutation-search");
    let mut forest_vs_subsets = Tally::new("is-forest-matches-subset-search");
    let mut forest_implies_quasi = Tally::new("forest-implies-quasi-forest");
    let mut quasi_suffix = Tally::new("quasi-forest-fvector-passes-suffix-test");
    let mut pure_suffix = Tally::new("pure-quasi-forest-fvector-passes-pure-suffix-test");
    let mut replay = Tally::new("leaf-order-replays-signature");
    let mut interleave = Tally::new("sorted-pairs-interleave");
    let mut unimodal = Tally::new("pure-quasi-forest-unimodal-chain");

    let mut quasi_fvs = BTreeSet::new();
    let mut pure_quasi_fvs = BTreeSet::new();
    let mut forest_fvs = BTreeSet::new();
    let mut pure_forest_fvs = BTreeSet::new();

    for masks in &universe {
        let c = masks_to_complex(masks);
        let fv = f_vector(&c)?;
        naive_f.check(fv.entries() == naive_f_vector(&c).as_slice(), || masks_str(masks));

        let report = is_forest(&c)?;
        let quasi = report.is_quasi_forest;
        let forest = report.is_forest == Some(true);
        gen_vs_rec.check(quasi == generated.contains(masks), || masks_str(masks));
        rec_vs_perm.check(quasi == quasi_forest_by_permutations(masks), || masks_str(masks));
        forest_vs_subsets.check(forest == forest_by_subsets(masks), || masks_str(masks));
        forest_implies_quasi.check(!forest || quasi, || masks_str(masks));
        if !quasi {
            continue;
        }

        let cseq = c_by_binomials(fv.entries());
        quasi_suffix.check(passes_suffix_condition(&cseq), || masks_str(masks));
        quasi_fvs.insert(fv.entries().to_vec());
        if forest {
            forest_fvs.insert(fv.entries().to_vec());
        }
        if c.is_pure() {
            pure_suffix.check(passes_pure_suffix_condition(&cseq), || masks_str(masks));
            unimodal.check(check_unimodal(&fv).peak_chain_holds, || masks_str(masks));
            pure_quasi_fvs.insert(fv.entries().to_vec());
            if forest {
                pure_forest_fvs.insert(fv.entries().to_vec());
            }
        }

        let order = report.leaf_order.expect("quasi-forest has a leaf order");
        let check = verify_leaf_order(&c, &order)?;
        let (deltas, es) = (check.deltas(), check.es());
        let signature = facet_signature_polynomial(&deltas, &es)?;
        replay.check(check.valid && signature == f_polynomial(&fv), || masks_str(masks));
        let mut sd = deltas.clone();
        let mut se = es.clone();
        sd.sort_unstable();
        se.sort_unstable();
        interleave.check(se.iter().zip(&sd).all(|(e, d)| e < d), || masks_str(masks));
    }

    // the sequence side of the equivalences
    let max_len = scope.max_facet_size();
    let mut suffix_fvs = BTreeSet::new();
    let mut pure_suffix_fvs = BTreeSet::new();
    let mut verdict_agrees = Tally::new("verdict-matches-binomial-c");
    let mut round_trip = Tally::new("realize-round-trip");
    for f in sequences_in_box(n, max_len) {
        let cseq = c_by_binomials(&f);
        let plain = passes_suffix_condition(&cseq);
        let pure = passes_pure_suffix_condition(&cseq);
        let fv = FVector::new(f.clone())?;
        let verdict = is_quasi_forest_fvector(&fv)?;
        verdict_agrees.check(
            verdict.c.entries() == cseq.as_slice()
                && verdict.is_quasi_forest_fvector == plain
                && verdict.is_pure_quasi_forest_fvector == pure,
            || fv_str(&f),
        );
        if !plain {
            continue;
        }
        if min_facets(&cseq) <= k {
            suffix_fvs.insert(f.clone());
            if pure {
                pure_suffix_fvs.insert(f.clone());
            }
        }
        let complex = realize(&fv)?;
        let seq = decompose(&verdict.c)?;
        let mut chain: Vec<Face> = complex.facets().to_vec();
        chain.reverse();
        let forest = is_forest(&complex)?.is_forest == Some(true);
        round_trip.check(
            f_vector(&complex)? == fv
                && forest
                && intersection_chain_holds(&chain)
                && complex.vertex_count() == seq.vertex_count()
                && (!pure || complex.facets().iter().all(|x| x.len() == f.len())),
            || fv_str(&f),
        );
    }

    let mut complete = Tally::new("quasi-forest-fvectors-equal-suffix-sequences");
    complete.check(quasi_fvs == suffix_fvs, || set_diff_str(&quasi_fvs, &suffix_fvs).unwrap());
    let mut pure_complete = Tally::new("pure-quasi-forest-fvectors-equal-pure-suffix-sequences");
    pure_complete.check(pure_quasi_fvs == pure_suffix_fvs, || set_diff_str(&pure_quasi_fvs, &pure_suffix_fvs).unwrap());
    let mut coincide = Tally::new("forest-fvectors-equal-quasi-forest-fvectors");
    coincide.check(forest_fvs == quasi_fvs, || set_diff_str(&forest_fvs, &quasi_fvs).unwrap());
    let mut pure_coincide = Tally::new("pure-forest-fvectors-equal-pure-quasi-forest-fvectors");
    pure_coincide.check(pure_forest_fvs == pure_quasi_fvs, || set_diff_str(&pure_forest_fvs, &pure_quasi_fvs).unwrap());

    // graph side
    let mut chordal_def = Tally::new("is-chordal-matches-cycle-definition");
    let mut strong_def = Tally::new("is-strongly-chordal-matches-cycle-definition");
    let mut cliques_def = Tally::new("clique-complex-matches-subset-search");
    let mut chordal_quasi = Tally::new("chordal-clique-complex-is-quasi-forest");
    let mut strong_forest = Tally::new("strongly-chordal-clique-complex-is-forest");
    for g in enumerate_graphs(scope)? {
        let describe = || g.to_string().replace('\n', ";");
        let chordal = is_chordal(&g).is_chordal;
        let strong = is_strongly_chordal(&g)?.is_strongly_chordal;
        chordal_def.check(chordal == chordal_by_cycles(&g), describe);
        strong_def.check(strong == strongly_chordal_by_cycles(&g), describe);
        let cc = clique_complex(&g)?;
        let facets: BTreeSet<Vec<usize>> =
            cc.facets().iter().map(|f| f.vertices().iter().map(|&v| v as usize).collect()).collect();
        cliques_def.check(facets == maximal_cliques_by_subsets(&g), describe);
        if cc.facet_count() > crate::recognize::MAX_FACETS {
            continue;
        }
        if chordal {
            chordal_quasi.check(leaf_order(&cc)?.is_quasi_forest, describe);
        }
        if strong {
            strong_forest.check(is_forest(&cc)?.is_forest == Some(true), describe);
        }
    }

    props.extend(
        [
            naive_f,
            gen_vs_rec,
            rec_vs_perm,
            forest_vs_subsets,
            forest_implies_quasi,
            quasi_suffix,
            pure_suffix,
            replay,
            interleave,
            unimodal,
            verdict_agrees,
            round_trip,
            complete,
            pure_complete,
            coincide,
            pure_coincide,
            chordal_def,
            strong_def,
            cliques_def,
            chordal_quasi,
            strong_forest,
        ]
        .into_iter()
        .map(|t| t.result),
    );
    Ok(ValidationReport { scope: *scope, properties: props })
}
