//! Which f-vectors belong to (pure) forests and quasi-forests, and how to build one.
//!
//! A positive sequence `(f_0, ..., f_{d-1})` is the f-vector of a quasi-forest (equivalently of a
//! forest) iff every suffix sum `sum_{i=k}^{d} c_i`, `1 <= k <= d`, of its c-sequence is
//! positive, iff every `b_k` is positive. It is the f-vector of a pure one iff in addition
//! `c_i <= 0` for `1 <= i < d`, iff `0 < b_1 <= ... <= b_d`.

use std::fmt;

use crate::complex::{f_vector, FVector, Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result, SequenceDefect};
use crate::transforms::{b_sequence, binomial, c_sequence, BSequence, CSequence};

/// Why a sequence fails the realizability conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// `sum_{i=k}^{d} c_i <= 0`.
    SuffixSum { k: usize, sum: i128 },
    /// `c_i > 0` for some `1 <= i < d`; only breaks the pure condition.
    PositiveInterior { i: usize, value: i128 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SuffixSum { k, sum } => write!(f, "suffix sum of c from k={k} is {sum}"),
            Violation::PositiveInterior { i, value } => write!(f, "c_{i}={value} is positive"),
        }
    }
}

/// Outcome of testing a sequence against both realizability conditions.
///
/// `failing_index` is `None` exactly when the pure condition holds. When the plain condition
/// fails it carries the smallest failing `k`; otherwise the smallest `i` with `c_i > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizabilityVerdict {
    pub is_quasi_forest_fvector: bool,
    pub is_pure_quasi_forest_fvector: bool,
    pub c: CSequence,
    pub b: BSequence,
    pub failing_index: Option<Violation>,
}

impl RealizabilityVerdict {
    pub fn describe_failure(&self) -> String {
        match &self.failing_index {
            Some(v) => v.to_string(),
            None => "no violation".to_string(),
        }
    }

    /// The failing `k` of the plain condition, if any.
    pub fn failing_k(&self) -> Option<usize> {
        match self.failing_index {
            Some(Violation::SuffixSum { k, .. }) => Some(k),
            _ => None,
        }
    }
}

fn verdict(f: &FVector) -> Result<RealizabilityVerdict> {
    let c = c_sequence(f)?;
    let b = b_sequence(f)?;
    let d = c.dimension();

    let suffix_failure = (1..=d).find_map(|k| {
        let sum = c.suffix_sum(k);
        (sum <= 0).then_some(Violation::SuffixSum { k, sum })
    });
    let interior_failure = (1..d).find_map(|i| {
        let value = c.entries()[i];
        (value > 0).then_some(Violation::PositiveInterior { i, value })
    });
    let plain = suffix_failure.is_none();
    let pure = plain && interior_failure.is_none();

    // The b-sequence route must agree with the c-sequence route.
    let b_plain = b.entries().iter().all(|&v| v > 0);
    let b_pure = b_plain && b.entries().windows(2).all(|w| w[0] <= w[1]);
    assert_eq!(plain, b_plain, "c and b realizability tests disagree for {f}");
    assert_eq!(pure, b_pure, "c and b pure realizability tests disagree for {f}");

    Ok(RealizabilityVerdict {
        is_quasi_forest_fvector: plain,
        is_pure_quasi_forest_fvector: pure,
        failing_index: suffix_failure.or(interior_failure),
        c,
        b,
    })
}

/// Tests the plain condition; the verdict also carries the pure flag.
pub fn is_quasi_forest_fvector(f: &FVector) -> Result<RealizabilityVerdict> {
    verdict(f)
}

/// Tests the pure condition; the verdict also carries the plain flag.
pub fn is_pure_quasi_forest_fvector(f: &FVector) -> Result<RealizabilityVerdict> {
    verdict(f)
}

/// Facet sizes `delta_1 <= ... <= delta_{s+1} = d` and leaf intersection sizes
/// `e_1 <= ... <= e_s`, with no value shared between the two lists and `e_j < delta_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeltaESequences {
    deltas: Vec<usize>,
    es: Vec<usize>,
}

impl DeltaESequences {
    pub fn new(deltas: Vec<usize>, es: Vec<usize>) -> Result<Self> {
        Self::validate(deltas, es, true)
    }

    /// Like [`DeltaESequences::new`] but lets a value occur among both deltas and es.
    ///
    /// The forest construction only needs the ordering and `e_j < delta_j`; such input still
    /// yields a forest whose f-polynomial is the signature polynomial.
    pub fn allowing_collisions(deltas: Vec<usize>, es: Vec<usize>) -> Result<Self> {
        Self::validate(deltas, es, false)
    }

    pub fn has_collisions(&self) -> bool {
        self.es.iter().any(|e| self.deltas.binary_search(e).is_ok())
    }

    fn validate(deltas: Vec<usize>, es: Vec<usize>, disjoint: bool) -> Result<Self> {
        let defect = |d| Err(Error::InvalidSequences(d));
        if deltas.is_empty() {
            return defect(SequenceDefect::NoDeltas);
        }
        if deltas.len() != es.len() + 1 {
            return defect(SequenceDefect::LengthMismatch { deltas: deltas.len(), es: es.len() });
        }
        if deltas[0] == 0 {
            return defect(SequenceDefect::ZeroDelta);
        }
        if let Some(index) = deltas.windows(2).position(|w| w[0] > w[1]) {
            return defect(SequenceDefect::UnsortedDeltas { index: index + 1 });
        }
        if let Some(index) = es.windows(2).position(|w| w[0] > w[1]) {
            return defect(SequenceDefect::UnsortedEs { index: index + 1 });
        }
        if let (true, Some(&value)) = (disjoint, es.iter().find(|e| deltas.binary_search(e).is_ok())) {
            return defect(SequenceDefect::Collision { value });
        }
        if let Some(index) = es.iter().zip(&deltas).position(|(e, delta)| e >= delta) {
            return defect(SequenceDefect::NotBelow { index: index + 1, e: es[index], delta: deltas[index] });
        }
        Ok(DeltaESequences { deltas, es })
    }

    /// Like [`DeltaESequences::new`], also requiring the largest delta to equal `dimension`.
    pub fn with_dimension(deltas: Vec<usize>, es: Vec<usize>, dimension: usize) -> Result<Self> {
        let seq = Self::new(deltas, es)?;
        if seq.d() != dimension {
            return Err(Error::InvalidSequences(SequenceDefect::TopNotDimension { top: seq.d(), dimension }));
        }
        Ok(seq)
    }

    pub fn deltas(&self) -> &[usize] {
        &self.deltas
    }

    pub fn es(&self) -> &[usize] {
        &self.es
    }

    /// `s`, the number of leaves.
    pub fn s(&self) -> usize {
        self.es.len()
    }

    /// `d = delta_{s+1}`.
    pub fn d(&self) -> usize {
        *self.deltas.last().expect("deltas are nonempty")
    }

    /// `n = sum delta_j - sum e_j`.
    pub fn vertex_count(&self) -> usize {
        self.deltas.iter().sum::<usize>() - self.es.iter().sum::<usize>()
    }
}

/// Reads `sum c_i x^i = sum x^{delta_j} - sum x^{e_j}` off the c-sequence.
pub fn decompose(c: &CSequence) -> Result<DeltaESequences> {
    let total = c.total();
    if total != 1 {
        return Err(Error::UnitSumViolated(total));
    }
    let d = c.dimension();
    if let Some(k) = (1..=d).find(|&k| c.suffix_sum(k) <= 0) {
        return Err(Error::ConditionViolated { k, sum: c.suffix_sum(k) });
    }
    let mut deltas = Vec::new();
    let mut es = Vec::new();
    for (i, &ci) in c.entries().iter().enumerate() {
        let target = if ci > 0 { &mut deltas } else { &mut es };
        let count = usize::try_from(ci.unsigned_abs()).map_err(|_| Error::Overflow("decomposition size"))?;
        target.extend(std::iter::repeat_n(i, count));
    }
    let seq = DeltaESequences::with_dimension(deltas, es, d).expect("positive suffix sums force e_j < delta_j");
    Ok(seq)
}

/// Deletes equal (delta, e) pairs until the two lists share no value.
///
/// The input only needs the sorted interleaving `e_j < delta_j`; values may collide.
pub fn reduce_collisions(deltas: &[usize], es: &[usize]) -> Result<DeltaESequences> {
    let mut deltas = deltas.to_vec();
    let mut es = es.to_vec();
    deltas.sort_unstable();
    es.sort_unstable();
    while let Some(pos) = es.iter().position(|e| deltas.contains(e)) {
        let value = es.remove(pos);
        let dpos = deltas.iter().position(|&x| x == value).expect("value present in deltas");
        deltas.remove(dpos);
    }
    DeltaESequences::new(deltas, es)
}

/// Builds facets `F_1, ..., F_{s+1}` on `[n]`: `F_{s+1}` is the top block `{n-d+1, ..., n}`
/// and `F_{j-1}` takes the largest `e_{j-1}` vertices of `F_j` plus `delta_{j-1} - e_{j-1}`
/// fresh vertices directly below `min F_j`.
///
/// Returned in order `F_1, ..., F_{s+1}`.
pub fn forest_facets(seq: &DeltaESequences) -> Vec<Face> {
    let n = seq.vertex_count();
    let d = seq.d();
    let s = seq.s();
    let mut facets: Vec<Vec<Vertex>> = vec![Vec::new(); s + 1];
    facets[s] = ((n - d + 1)..=n).map(|v| v as Vertex).collect();
    for j in (1..=s).rev() {
        // build F_{j} (0-based index j-1) from F_{j+1} (index j)
        let upper = &facets[j];
        let q1 = upper[0];
        let fresh = (seq.deltas[j - 1] - seq.es[j - 1]) as Vertex;
        let kept = &upper[upper.len() - seq.es[j - 1]..];
        let lower: Vec<Vertex> = (q1 - fresh..q1).chain(kept.iter().copied()).collect();
        facets[j - 1] = lower;
    }
    facets.into_iter().map(|f| Face::new(f).expect("labels start at 1")).collect()
}

/// The forest on `[n]`, `n = sum delta_j - sum e_j`, with facets from [`forest_facets`].
pub fn construct_forest(seq: &DeltaESequences) -> Result<SimplicialComplex> {
    let seq = DeltaESequences::allowing_collisions(seq.deltas.clone(), seq.es.clone())?;
    SimplicialComplex::from_facets(forest_facets(&seq))
}

/// Whether `F_j ∩ F_k = F_j ∩ F_{j+1}` for all `k > j`, with `facets` given as `F_1, ..., F_{s+1}`.
pub fn intersection_chain_holds(facets: &[Face]) -> bool {
    facets.iter().enumerate().all(|(j, fj)| {
        let next = facets.get(j + 1).map(|g| fj.intersection(g));
        facets[j + 1..].iter().all(|fk| Some(fj.intersection(fk)) == next)
    })
}

/// Builds a forest with f-vector `f`, or reports why none exists.
pub fn realize(f: &FVector) -> Result<SimplicialComplex> {
    let verdict = is_quasi_forest_fvector(f)?;
    if !verdict.is_quasi_forest_fvector {
        return Err(Error::NotRealizable(Box::new(verdict)));
    }
    let seq = decompose(&verdict.c)?;
    let complex = construct_forest(&seq)?;
    assert_eq!(&f_vector(&complex)?, f, "constructed forest has the wrong f-vector");
    if verdict.is_pure_quasi_forest_fvector {
        assert!(complex.is_pure(), "pure condition holds but construction is not pure");
    }
    Ok(complex)
}

/// Unimodality of `(1, f_0, ..., f_{d-1})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnimodalReport {
    /// Whether `1 <= f_0 <= ... <= f_p >= f_{p+1} >= ... >= f_{d-1}` with `p = [(d+1)/2] - 1`.
    pub peak_chain_holds: bool,
    /// `p`, as an index into `f`.
    pub chain_peak: usize,
    /// Whether the sequence rises then falls about some index.
    pub unimodal: bool,
    /// First position of the maximum entry of `f` when `unimodal` holds.
    pub peak: Option<usize>,
}

pub fn check_unimodal(f: &FVector) -> UnimodalReport {
    let seq: Vec<u64> = f.with_empty_face().collect();
    let d = f.dimension();
    let chain_peak = d.div_ceil(2) - 1;
    // seq index of f_p is p + 1
    let top = chain_peak + 1;
    let rising = seq[..=top].windows(2).all(|w| w[0] <= w[1]);
    let falling = seq[top..].windows(2).all(|w| w[0] >= w[1]);

    let mut i = 0;
    while i + 1 < seq.len() && seq[i] <= seq[i + 1] {
        i += 1;
    }
    let mut j = i;
    while j + 1 < seq.len() && seq[j] >= seq[j + 1] {
        j += 1;
    }
    let unimodal = j + 1 == seq.len();
    let peak = if unimodal {
        let max = *seq.iter().max().expect("nonempty");
        seq.iter().skip(1).position(|&v| v == max)
    } else {
        None
    };
    UnimodalReport { peak_chain_holds: rising && falling, chain_peak, unimodal, peak }
}

/// Whether the coefficients `a_0, ..., a_d` of `(1+x)^d - (1+x)^e` rise up to index
/// `[(d+1)/2]` and fall afterwards.
pub fn binomial_difference_chain(d: usize, e: usize) -> Result<bool> {
    let mut a = Vec::with_capacity(d + 1);
    for i in 0..=d {
        a.push(binomial(d, i)? - binomial(e, i)?);
    }
    let top = d.div_ceil(2);
    let rising = a[..=top].windows(2).all(|w| w[0] <= w[1]);
    let falling = a[top..].windows(2).all(|w| w[0] >= w[1]);
    Ok(rising && falling)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fv(v: &[u64]) -> FVector {
        FVector::new(v.to_vec()).unwrap()
    }

    fn faces(c: &SimplicialComplex) -> Vec<Vec<Vertex>> {
        c.facets().iter().map(|f| f.vertices().to_vec()).collect()
    }

    #[test]
    fn plain_condition_examples() {
        let v = is_quasi_forest_fvector(&fv(&[3, 2])).unwrap();
        assert!(v.is_quasi_forest_fvector);
        assert_eq!(v.c.0, vec![0, -1, 2]);

        let v = is_quasi_forest_fvector(&fv(&[4, 6])).unwrap();
        assert!(!v.is_quasi_forest_fvector);
        assert_eq!(v.c.0, vec![3, -8, 6]);
        assert_eq!(v.failing_index, Some(Violation::SuffixSum { k: 1, sum: -2 }));

        let v = is_quasi_forest_fvector(&fv(&[4, 4])).unwrap();
        assert_eq!(v.c.0, vec![1, -4, 4]);
        assert_eq!(v.failing_index, Some(Violation::SuffixSum { k: 1, sum: 0 }));
    }

    #[test]
    fn pure_condition_examples() {
        let v = is_pure_quasi_forest_fvector(&fv(&[5, 6, 2])).unwrap();
        assert!(v.is_pure_quasi_forest_fvector);
        assert_eq!((v.c.0.clone(), v.b.0.clone()), (vec![0, -1, 0, 2], vec![1, 2, 2]));
        assert_eq!(v.failing_index, None);

        let v = is_pure_quasi_forest_fvector(&fv(&[4, 4, 1])).unwrap();
        assert!(v.is_quasi_forest_fvector && !v.is_pure_quasi_forest_fvector);
        assert_eq!(v.b.0, vec![1, 2, 1]);
        assert_eq!(v.failing_index, Some(Violation::PositiveInterior { i: 2, value: 1 }));

        for n in 1..50 {
            assert!(is_pure_quasi_forest_fvector(&fv(&[n])).unwrap().is_pure_quasi_forest_fvector);
        }
    }

    #[test]
    fn decompose_examples() {
        let s = decompose(&CSequence(vec![0, -1, 2])).unwrap();
        assert_eq!((s.deltas(), s.es()), (&[2, 2][..], &[1][..]));
        let s = decompose(&CSequence(vec![0, -1, 1, 1])).unwrap();
        assert_eq!((s.deltas(), s.es()), (&[2, 3][..], &[1][..]));
        let s = decompose(&CSequence(vec![0, 0, 0, 0, 1])).unwrap();
        assert_eq!((s.deltas(), s.es()), (&[4][..], &[][..]));
    }

    #[test]
    fn decompose_rejects_bad_c() {
        assert_eq!(decompose(&CSequence(vec![3, -8, 6])), Err(Error::ConditionViolated { k: 1, sum: -2 }));
        assert_eq!(decompose(&CSequence(vec![0, 1, 1])), Err(Error::UnitSumViolated(2)));
    }

    #[test]
    fn reduce_collisions_examples() {
        let s = reduce_collisions(&[2, 3, 3], &[1, 3]).unwrap();
        assert_eq!((s.deltas(), s.es()), (&[2, 3][..], &[1][..]));
        let s = reduce_collisions(&[3, 3], &[1]).unwrap();
        assert_eq!((s.deltas(), s.es()), (&[3, 3][..], &[1][..]));
        let s = reduce_collisions(&[2, 2, 3], &[2, 2]).unwrap();
        assert_eq!((s.deltas(), s.es()), (&[3][..], &[][..]));
    }

    #[test]
    fn construct_forest_examples() {
        let c = construct_forest(&DeltaESequences::new(vec![2, 2], vec![1]).unwrap()).unwrap();
        assert_eq!(faces(&c), vec![vec![2, 3], vec![1, 3]]);

        let c = construct_forest(&DeltaESequences::new(vec![3, 3], vec![1]).unwrap()).unwrap();
        assert_eq!(faces(&c), vec![vec![3, 4, 5], vec![1, 2, 5]]);
        assert_eq!(f_vector(&c).unwrap().entries(), &[5, 6, 2]);

        let seq = DeltaESequences::allowing_collisions(vec![2, 3, 3], vec![1, 2]).unwrap();
        assert!(seq.has_collisions());
        let c = construct_forest(&seq).unwrap();
        assert_eq!(faces(&c), vec![vec![3, 4, 5], vec![2, 4, 5], vec![1, 5]]);
        assert_eq!(f_vector(&c).unwrap().entries(), &[5, 6, 2]);
    }

    #[test]
    fn sequence_validation_witnesses() {
        let err = |d: Vec<usize>, e: Vec<usize>| match DeltaESequences::new(d, e) {
            Err(Error::InvalidSequences(defect)) => defect,
            other => panic!("expected defect, got {other:?}"),
        };
        assert_eq!(err(vec![3, 2], vec![1]), SequenceDefect::UnsortedDeltas { index: 1 });
        assert_eq!(err(vec![2, 3, 3], vec![2, 1]), SequenceDefect::UnsortedEs { index: 1 });
        assert_eq!(err(vec![2, 3, 3], vec![1, 2]), SequenceDefect::Collision { value: 2 });
        assert_eq!(err(vec![1, 3], vec![2]), SequenceDefect::NotBelow { index: 1, e: 2, delta: 1 });
        assert_eq!(err(vec![3], vec![1]), SequenceDefect::LengthMismatch { deltas: 1, es: 1 });
        assert_eq!(err(vec![0, 2], vec![1]), SequenceDefect::ZeroDelta);
        assert_eq!(err(vec![], vec![]), SequenceDefect::NoDeltas);
        assert_eq!(
            DeltaESequences::with_dimension(vec![2, 3], vec![1], 4),
            Err(Error::InvalidSequences(SequenceDefect::TopNotDimension { top: 3, dimension: 4 }))
        );
    }

    #[test]
    fn realize_examples() {
        let c = realize(&fv(&[4, 4, 1])).unwrap();
        assert_eq!(faces(&c), vec![vec![2, 3, 4], vec![1, 4]]);
        let c = realize(&fv(&[5, 6, 2])).unwrap();
        assert_eq!(faces(&c), vec![vec![3, 4, 5], vec![1, 2, 5]]);
        assert!(c.is_pure());
        match realize(&fv(&[4, 4])) {
            Err(Error::NotRealizable(v)) => assert_eq!(v.failing_k(), Some(1)),
            other => panic!("expected NotRealizable, got {other:?}"),
        }
    }

    #[test]
    fn unimodal_examples() {
        let r = check_unimodal(&fv(&[5, 6, 2]));
        assert!(r.peak_chain_holds && r.unimodal);
        assert_eq!((r.chain_peak, r.peak), (1, Some(1)));

        let r = check_unimodal(&fv(&[3, 2]));
        assert!(r.peak_chain_holds);
        assert_eq!((r.chain_peak, r.peak), (0, Some(0)));

        for d in 1..=12usize {
            let f: Vec<u64> = (1..=d).map(|i| binomial(d, i).unwrap() as u64).collect();
            let r = check_unimodal(&fv(&f));
            assert!(r.peak_chain_holds && r.unimodal, "simplex d={d}");
            assert_eq!(r.chain_peak, d.div_ceil(2) - 1);
        }
    }

    #[test]
    fn unimodal_negative_cases() {
        // rises, falls, rises again
        let r = check_unimodal(&fv(&[5, 3, 4]));
        assert!(!r.unimodal && !r.peak_chain_holds);
        assert_eq!(r.peak, None);
        // unimodal but peaking past the chain position
        let r = check_unimodal(&fv(&[2, 3, 4]));
        assert!(r.unimodal && !r.peak_chain_holds);
        assert_eq!(r.peak, Some(2));
    }

    #[test]
    fn binomial_difference_small() {
        for d in 1..=12 {
            for e in 0..d {
                assert!(binomial_difference_chain(d, e).unwrap(), "d={d} e={e}");
            }
        }
    }
}
