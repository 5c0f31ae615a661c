//! Leaves, leaf orders and forests.
//!
//! A facet `F` is a leaf if some other facet `G` (a branch of `F`) satisfies
//! `H ∩ F ⊆ G ∩ F` for every facet `H ≠ F`. Containment is read non-strictly. A single-facet
//! complex counts as both a quasi-forest and a forest.

use std::collections::HashSet;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// Largest facet count accepted by [`leaf_order`] and [`is_forest`].
pub const MAX_FACETS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognitionReport {
    pub is_quasi_forest: bool,
    /// Root first; every later facet is a leaf of the facets before it.
    pub leaf_order: Option<Vec<Face>>,
    pub is_forest: Option<bool>,
    /// Smallest facet subset whose subcomplex has no leaf.
    pub witness: Option<Vec<Face>>,
}

/// Bitset over the vertex positions of one complex.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn zeros(words: usize) -> Self {
        Bits(vec![0; words])
    }

    fn clear(&mut self) {
        self.0.iter_mut().for_each(|w| *w = 0);
    }

    fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
}

/// Pairwise facet intersections of a complex, as bitsets.
struct Incidence {
    words: usize,
    inter: Vec<Vec<Bits>>,
}

impl Incidence {
    fn new(c: &SimplicialComplex) -> Self {
        let vertices = c.vertices();
        let words = vertices.len().div_ceil(64);
        let sets: Vec<Bits> = c
            .facets()
            .iter()
            .map(|f| {
                let mut b = Bits::zeros(words);
                for v in f.vertices() {
                    let p = vertices.binary_search(v).expect("facet vertex is a complex vertex");
                    b.0[p / 64] |= 1 << (p % 64);
                }
                b
            })
            .collect();
        let inter = sets.iter().map(|a| sets.iter().map(|b| a.and(b)).collect()).collect();
        Incidence { words, inter }
    }

    /// A branch of facet `f` within the facets in `members` (bitmask over facet indices).
    fn branch(&self, f: usize, members: u32, scratch: &mut Bits) -> Option<usize> {
        let others = members & !(1 << f);
        if others == 0 {
            return None;
        }
        scratch.clear();
        for h in iter_bits(others) {
            scratch.union_with(&self.inter[f][h]);
        }
        // every G ∩ F is inside the union, so containment of the union means equality
        iter_bits(others).find(|&g| self.inter[f][g] == *scratch)
    }

    fn has_leaf(&self, members: u32, scratch: &mut Bits) -> bool {
        iter_bits(members).any(|f| self.branch(f, members, scratch).is_some())
    }
}

fn iter_bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let i = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(i)
    })
}

fn facet_index(c: &SimplicialComplex, f: &Face) -> Option<usize> {
    c.facets().iter().position(|g| g == f)
}

fn check_facet_cap(c: &SimplicialComplex) -> Result<()> {
    if c.facet_count() > MAX_FACETS {
        return Err(Error::ResourceLimit { what: "facet count", got: c.facet_count(), limit: MAX_FACETS });
    }
    Ok(())
}

/// Some branch of facet `f`, or `None` when `f` is not a leaf.
pub fn branch_of(c: &SimplicialComplex, f: &Face) -> Result<Option<Face>> {
    let fi = facet_index(c, f).ok_or_else(|| Error::NotAFacet(f.vertices().to_vec()))?;
    let facets = c.facets();
    let branch = facets.iter().enumerate().find(|&(gi, g)| {
        gi != fi
            && facets
                .iter()
                .enumerate()
                .all(|(hi, h)| hi == fi || hi == gi || h.intersection(f).is_subset(&g.intersection(f)))
    });
    Ok(branch.map(|(_, g)| g.clone()))
}

/// Finds a leaf order by peeling leaves, backtracking over failed choices.
pub fn leaf_order(c: &SimplicialComplex) -> Result<RecognitionReport> {
    check_facet_cap(c)?;
    let inc = Incidence::new(c);
    let full: u32 = if c.facet_count() == 32 { u32::MAX } else { (1u32 << c.facet_count()) - 1 };
    let mut dead: HashSet<u32> = HashSet::new();
    let mut scratch = Bits::zeros(inc.words);
    let mut peeled = Vec::with_capacity(c.facet_count());
    let order = if peel(&inc, full, &mut dead, &mut scratch, &mut peeled) {
        let root = iter_bits(full & !peeled.iter().fold(0u32, |m, &i| m | (1 << i))).next().expect("one facet remains");
        let facets = c.facets();
        let order: Vec<Face> =
            std::iter::once(root).chain(peeled.iter().rev().copied()).map(|i| facets[i].clone()).collect();
        Some(order)
    } else {
        None
    };
    Ok(RecognitionReport { is_quasi_forest: order.is_some(), leaf_order: order, is_forest: None, witness: None })
}

fn peel(inc: &Incidence, members: u32, dead: &mut HashSet<u32>, scratch: &mut Bits, peeled: &mut Vec<usize>) -> bool {
    if members.count_ones() <= 1 {
        return true;
    }
    if dead.contains(&members) {
        return false;
    }
    // later facets in canonical order are tried first
    let mut candidates: Vec<usize> = iter_bits(members).collect();
    candidates.reverse();
    for f in candidates {
        if inc.branch(f, members, scratch).is_none() {
            continue;
        }
        peeled.push(f);
        if peel(inc, members & !(1 << f), dead, scratch, peeled) {
            return true;
        }
        peeled.pop();
    }
    dead.insert(members);
    false
}

/// Decides whether every facet subset generates a subcomplex with a leaf.
pub fn is_forest(c: &SimplicialComplex) -> Result<RecognitionReport> {
    let mut report = leaf_order(c)?;
    let inc = Incidence::new(c);
    let mut scratch = Bits::zeros(inc.words);
    let q = c.facet_count();
    let mut witness = None;
    'sizes: for size in 2..=q {
        for combo in Combinations::new(q, size) {
            let members = combo.iter().fold(0u32, |m, &i| m | (1 << i));
            if !inc.has_leaf(members, &mut scratch) {
                witness = Some(combo.iter().map(|&i| c.facets()[i].clone()).collect::<Vec<_>>());
                break 'sizes;
            }
        }
    }
    report.is_forest = Some(witness.is_none());
    report.witness = witness;
    Ok(report)
}

/// `size`-subsets of `0..n` in lexicographic order.
struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, size: usize) -> Self {
        let current = (size <= n).then(|| (0..size).collect());
        Combinations { n, current }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// One leaf step of a leaf order: `delta = |F_j|`, `e = |F_j ∩ G_j|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafStep {
    pub facet: Face,
    pub branch: Face,
    pub delta: usize,
    pub e: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafOrderCheck {
    pub valid: bool,
    /// Position in the ordering of the first facet that is not a leaf of its prefix.
    pub failed_at: Option<usize>,
    pub root: Face,
    /// Steps for positions `1..`, up to the failure if any.
    pub steps: Vec<LeafStep>,
}

impl LeafOrderCheck {
    /// Facet sizes, root first.
    pub fn deltas(&self) -> Vec<usize> {
        std::iter::once(self.root.len()).chain(self.steps.iter().map(|s| s.delta)).collect()
    }

    pub fn es(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.e).collect()
    }
}

/// Checks that each facet of `ordering` (root first) is a leaf of the facets up to it.
pub fn verify_leaf_order(c: &SimplicialComplex, ordering: &[Face]) -> Result<LeafOrderCheck> {
    if ordering.len() != c.facet_count() {
        return Err(Error::NotAPermutation);
    }
    let mut seen = vec![false; c.facet_count()];
    let mut indices = Vec::with_capacity(ordering.len());
    for f in ordering {
        let i = facet_index(c, f).ok_or(Error::NotAPermutation)?;
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::NotAPermutation);
        }
        indices.push(i);
    }
    let mut steps = Vec::new();
    let mut failed_at = None;
    for j in 1..ordering.len() {
        let f = &ordering[j];
        let prefix = &ordering[..=j];
        let branch = prefix[..j].iter().find(|g| {
            let gf = g.intersection(f);
            prefix[..j].iter().all(|h| h.intersection(f).is_subset(&gf))
        });
        match branch {
            Some(g) => {
                steps.push(LeafStep { facet: f.clone(), branch: g.clone(), delta: f.len(), e: g.intersection(f).len() })
            }
            None => {
                failed_at = Some(j);
                break;
            }
        }
    }
    Ok(LeafOrderCheck { valid: failed_at.is_none(), failed_at, root: ordering[0].clone(), steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Vertex;

    fn face(v: &[Vertex]) -> Face {
        Face::new(v.iter().copied()).unwrap()
    }

    fn complex(facets: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| face(f))).unwrap()
    }

    fn triangle() -> SimplicialComplex {
        complex(&[&[1, 2], &[2, 3], &[1, 3]])
    }

    #[test]
    fn branch_examples() {
        let c = complex(&[&[1, 2, 3], &[3, 4]]);
        assert_eq!(branch_of(&c, &face(&[3, 4])).unwrap(), Some(face(&[1, 2, 3])));
        assert_eq!(branch_of(&triangle(), &face(&[1, 2])).unwrap(), None);
        let c = complex(&[&[1, 2], &[3, 4]]);
        assert_eq!(branch_of(&c, &face(&[1, 2])).unwrap(), Some(face(&[3, 4])));
        assert_eq!(branch_of(&complex(&[&[1, 2]]), &face(&[1, 2])).unwrap(), None);
        assert_eq!(branch_of(&c, &face(&[1])), Err(Error::NotAFacet(vec![1])));
    }

    #[test]
    fn leaf_order_examples() {
        let c = complex(&[&[3, 4, 5], &[2, 4, 5], &[1, 5]]);
        let r = leaf_order(&c).unwrap();
        assert!(r.is_quasi_forest);
        assert_eq!(r.leaf_order.unwrap(), vec![face(&[3, 4, 5]), face(&[2, 4, 5]), face(&[1, 5])]);

        let r = leaf_order(&triangle()).unwrap();
        assert!(!r.is_quasi_forest && r.leaf_order.is_none());

        let r = leaf_order(&complex(&[&[1, 2, 3]])).unwrap();
        assert_eq!(r.leaf_order, Some(vec![face(&[1, 2, 3])]));
    }

    #[test]
    fn facet_cap() {
        let many: Vec<Vec<Vertex>> = (1..=21).map(|v| vec![v]).collect();
        let c = SimplicialComplex::from_facets(many.iter().map(|f| face(f))).unwrap();
        assert_eq!(leaf_order(&c), Err(Error::ResourceLimit { what: "facet count", got: 21, limit: 20 }));
        assert!(matches!(is_forest(&c), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn forest_examples() {
        let c = complex(&[&[3, 4, 5], &[2, 4, 5], &[1, 5]]);
        let r = is_forest(&c).unwrap();
        assert_eq!((r.is_forest, r.witness), (Some(true), None));

        let r = is_forest(&triangle()).unwrap();
        assert_eq!(r.is_forest, Some(false));
        assert_eq!(r.witness.unwrap().len(), 3);

        let r = is_forest(&complex(&[&[7, 9]])).unwrap();
        assert_eq!(r.is_forest, Some(true));
        assert!(r.is_quasi_forest);
    }

    #[test]
    fn forest_witness_is_smallest() {
        // a triangle boundary plus a pendant edge; the smallest leafless subset is the triangle
        let c = complex(&[&[1, 2], &[2, 3], &[1, 3], &[3, 4]]);
        let r = is_forest(&c).unwrap();
        let mut w: Vec<Face> = r.witness.unwrap();
        w.sort();
        assert_eq!(w, vec![face(&[1, 2]), face(&[1, 3]), face(&[2, 3])]);
    }

    #[test]
    fn verify_leaf_order_examples() {
        let c = complex(&[&[3, 4, 5], &[1, 2, 5]]);
        for order in [vec![face(&[3, 4, 5]), face(&[1, 2, 5])], vec![face(&[1, 2, 5]), face(&[3, 4, 5])]] {
            let check = verify_leaf_order(&c, &order).unwrap();
            assert!(check.valid);
            assert_eq!(check.es(), vec![1]);
        }

        let t = triangle();
        let check = verify_leaf_order(&t, t.facets()).unwrap();
        assert_eq!((check.valid, check.failed_at), (false, Some(2)));

        let single = complex(&[&[1, 2]]);
        let check = verify_leaf_order(&single, single.facets()).unwrap();
        assert!(check.valid && check.steps.is_empty());

        assert_eq!(verify_leaf_order(&t, &t.facets()[..2]), Err(Error::NotAPermutation));
        let dup = vec![face(&[1, 2]), face(&[1, 2]), face(&[2, 3])];
        assert_eq!(verify_leaf_order(&t, &dup), Err(Error::NotAPermutation));
    }

    #[test]
    fn combinations_are_lexicographic() {
        let all: Vec<Vec<usize>> = Combinations::new(4, 2).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(Combinations::new(3, 3).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }
}
