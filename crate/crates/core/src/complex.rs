//! Simplicial complexes stored by their facets.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::transforms::IntPolynomial;

/// Vertex label. Labels are positive but need not be contiguous.
pub type Vertex = u32;

/// Largest facet whose subsets [`f_vector`] will enumerate.
pub const MAX_FACET_SIZE: usize = 25;

/// A finite set of vertices, stored strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Face(Vec<Vertex>);

impl Face {
    pub fn new<I: IntoIterator<Item = Vertex>>(vertices: I) -> Result<Self> {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        if let Some(&bad) = v.iter().find(|&&x| x == 0) {
            return Err(Error::BadVertex(bad as i64));
        }
        v.sort_unstable();
        v.dedup();
        Ok(Face(v))
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    pub fn intersection(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|&v| other.contains(v)).collect())
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A nonempty simplicial complex given by its facets.
///
/// Facets are pairwise incomparable and kept in decreasing lexicographic order.
/// For complexes built by [`crate::characterize::construct_forest`] this order is
/// exactly the leaf order of the construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    facets: Vec<Face>,
    vertices: Vec<Vertex>,
}

impl SimplicialComplex {
    /// Keeps the inclusion-maximal members of `raw_faces`, deduplicated and sorted.
    pub fn from_facets<I: IntoIterator<Item = Face>>(raw_faces: I) -> Result<Self> {
        let mut faces: Vec<Face> =
            raw_faces.into_iter().collect::<BTreeSet<_>>().into_iter().filter(|f| !f.is_empty()).collect();
        if faces.is_empty() {
            return Err(Error::EmptyInput("a complex needs at least one nonempty face"));
        }
        // larger faces first so that a face is only tested against possible supersets
        faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let mut facets: Vec<Face> = Vec::with_capacity(faces.len());
        for face in faces {
            if !facets.iter().any(|g| face.is_subset(g)) {
                facets.push(face);
            }
        }
        facets.sort_unstable_by(|a, b| b.cmp(a));
        let vertices: BTreeSet<Vertex> = facets.iter().flat_map(|f| f.0.iter().copied()).collect();
        Ok(SimplicialComplex { facets, vertices: vertices.into_iter().collect() })
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Maximum facet cardinality minus one.
    pub fn dimension(&self) -> usize {
        self.max_facet_size() - 1
    }

    /// `d`, the largest facet cardinality.
    pub fn max_facet_size(&self) -> usize {
        self.facets.iter().map(Face::len).max().unwrap_or(0)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.max_facet_size();
        self.facets.iter().all(|f| f.len() == d)
    }

    pub fn is_facet(&self, face: &Face) -> bool {
        self.facets.binary_search_by(|probe| face.cmp(probe)).is_ok()
    }

    /// The subcomplex generated by the chosen facets.
    pub fn subcomplex(&self, chosen: &[Face]) -> Result<SimplicialComplex> {
        if let Some(f) = chosen.iter().find(|f| !self.is_facet(f)) {
            return Err(Error::NotAFacet(f.0.clone()));
        }
        SimplicialComplex::from_facets(chosen.iter().cloned())
    }
}

impl fmt::Display for SimplicialComplex {
    /// One facet per line, in the complex text format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for facet in &self.facets {
            writeln!(f, "{facet}")?;
        }
        Ok(())
    }
}

/// `(f_0, ..., f_{d-1})`, all positive. `f_{-1} = 1` is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyInput("an f-vector needs at least one entry"));
        }
        if let Some(index) = entries.iter().position(|&v| v == 0) {
            return Err(Error::NonPositiveEntry { index, value: 0 });
        }
        Ok(FVector(entries))
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// `d`, the number of entries.
    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    /// `f_{-1} = 1, f_0, ..., f_{d-1}`.
    pub fn with_empty_face(&self) -> impl Iterator<Item = u64> + '_ {
        std::iter::once(1).chain(self.0.iter().copied())
    }

    /// Builds from a polynomial `sum_{i=0}^{d} f_{i-1} x^i`; `None` unless the constant term
    /// is 1 and every other coefficient is positive.
    pub fn from_polynomial(p: &IntPolynomial) -> Option<Self> {
        let (&constant, rest) = p.coeffs().split_first()?;
        if constant != 1 || rest.is_empty() || rest.iter().any(|&c| c <= 0) {
            return None;
        }
        let entries: Option<Vec<u64>> = rest.iter().map(|&c| u64::try_from(c).ok()).collect();
        entries.map(FVector)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for FVector {
    type Err = Error;

    /// Comma-separated positive decimal integers, e.g. `5,6,2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::EmptyInput("an f-vector needs at least one entry"));
        }
        let mut entries = Vec::new();
        for (index, part) in s.split(',').enumerate() {
            let part = part.trim();
            let value: i128 = part
                .parse()
                .map_err(|_| Error::Parse { line: 1, message: format!("entry {index} is not an integer: {part:?}") })?;
            if value <= 0 {
                return Err(Error::NonPositiveEntry { index, value });
            }
            let value = u64::try_from(value).map_err(|_| Error::Overflow("f-vector entry"))?;
            entries.push(value);
        }
        FVector::new(entries)
    }
}

/// `(h_0, ..., h_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HVector(pub Vec<i128>);

impl HVector {
    pub fn entries(&self) -> &[i128] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Counts faces by cardinality.
///
/// Each facet contributes the subsets that are not contained in an earlier facet, which is the
/// same as listing every subset of every facet and deduplicating.
pub fn f_vector(c: &SimplicialComplex) -> Result<FVector> {
    let d = c.max_facet_size();
    if d > MAX_FACET_SIZE {
        return Err(Error::ResourceLimit { what: "facet size", got: d, limit: MAX_FACET_SIZE });
    }
    let mut counts = vec![0u64; d];
    for (i, facet) in c.facets.iter().enumerate() {
        let k = facet.len();
        // positions within `facet` shared with each earlier facet
        let mut shared: Vec<u32> = c.facets[..i]
            .iter()
            .map(|g| facet.0.iter().enumerate().filter(|(_, v)| g.contains(**v)).fold(0u32, |m, (p, _)| m | (1 << p)))
            .collect();
        shared.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
        let mut maximal: Vec<u32> = Vec::new();
        for m in shared {
            if !maximal.iter().any(|&big| m & !big == 0) {
                maximal.push(m);
            }
        }
        for mask in 1u32..(1u32 << k) {
            if !maximal.iter().any(|&big| mask & !big == 0) {
                counts[mask.count_ones() as usize - 1] += 1;
            }
        }
    }
    FVector::new(counts)
}

/// The h-vector of an f-vector, from `sum_{i=0}^{d} f_{i-1} (x-1)^{d-i} = sum_{i=0}^{d} h_i x^{d-i}`.
pub fn h_vector(f: &FVector) -> Result<HVector> {
    let d = f.dimension();
    let mut acc = IntPolynomial::zero();
    for (i, fi) in f.with_empty_face().enumerate() {
        acc.add_scaled(&IntPolynomial::binomial_power(-1, d - i)?, i128::from(fi))?;
    }
    Ok(HVector((0..=d).map(|k| acc.coeff(d - k)).collect()))
}

/// Parses the complex text format: one facet per line as space-separated positive
/// integers; blank lines and `#` comments are skipped.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut faces = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut labels = Vec::new();
        for token in line.split_whitespace() {
            let value: i64 = token
                .parse()
                .map_err(|_| Error::Parse { line: lineno + 1, message: format!("not an integer: {token:?}") })?;
            if value < 1 {
                return Err(Error::BadVertex(value));
            }
            let label = Vertex::try_from(value)
                .map_err(|_| Error::Parse { line: lineno + 1, message: format!("vertex label too large: {value}") })?;
            labels.push(label);
        }
        faces.push(Face::new(labels)?);
    }
    SimplicialComplex::from_facets(faces)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(v: &[Vertex]) -> Face {
        Face::new(v.iter().copied()).unwrap()
    }

    fn complex(facets: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| face(f))).unwrap()
    }

    fn facet_set(c: &SimplicialComplex) -> BTreeSet<Vec<Vertex>> {
        c.facets().iter().map(|f| f.vertices().to_vec()).collect()
    }

    #[test]
    fn from_facets_prunes_non_maximal() {
        let c = complex(&[&[1, 2], &[2], &[2, 3]]);
        assert_eq!(facet_set(&c), [vec![1, 2], vec![2, 3]].into_iter().collect());
        let c = complex(&[&[1, 2, 3]]);
        assert_eq!(c.facets(), &[face(&[1, 2, 3])]);
        let c = complex(&[&[3, 4, 5], &[1, 2, 5], &[5]]);
        assert_eq!(c.facets(), &[face(&[3, 4, 5]), face(&[1, 2, 5])]);
    }

    #[test]
    fn from_facets_errors() {
        assert_eq!(
            SimplicialComplex::from_facets(Vec::new()),
            Err(Error::EmptyInput("a complex needs at least one nonempty face"))
        );
        assert_eq!(Face::new([0, 1]), Err(Error::BadVertex(0)));
        assert!(matches!(parse_complex("1 2\n-3 4\n"), Err(Error::BadVertex(-3))));
        assert!(matches!(parse_complex("# nothing\n\n"), Err(Error::EmptyInput(_))));
    }

    #[test]
    fn f_vector_examples() {
        for d in 1..=8u32 {
            let simplex = complex(&[&(1..=d).collect::<Vec<_>>()]);
            let expected: Vec<u64> =
                (1..=d as usize).map(|i| crate::transforms::binomial(d as usize, i).unwrap() as u64).collect();
            assert_eq!(f_vector(&simplex).unwrap().entries(), &expected[..]);
        }
        assert_eq!(f_vector(&complex(&[&[2, 3, 4], &[1, 4]])).unwrap().entries(), &[4, 4, 1]);
        assert_eq!(f_vector(&complex(&[&[3, 4, 5], &[1, 2, 5]])).unwrap().entries(), &[5, 6, 2]);
    }

    #[test]
    fn f_vector_guard() {
        let big = complex(&[&(1..=26).collect::<Vec<_>>()]);
        assert_eq!(f_vector(&big), Err(Error::ResourceLimit { what: "facet size", got: 26, limit: 25 }));
    }

    #[test]
    fn h_vector_examples() {
        assert_eq!(h_vector(&FVector::new(vec![3, 2]).unwrap()).unwrap().0, vec![1, 1, 0]);
        assert_eq!(h_vector(&FVector::new(vec![5, 6, 2]).unwrap()).unwrap().0, vec![1, 2, -1, 0]);
        assert_eq!(h_vector(&FVector::new(vec![4, 6, 4, 1]).unwrap()).unwrap().0, vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn dimension_and_purity() {
        let c = complex(&[&[3, 4, 5], &[1, 2, 5]]);
        assert_eq!((c.dimension(), c.is_pure()), (2, true));
        let c = complex(&[&[2, 3, 4], &[1, 4]]);
        assert_eq!((c.dimension(), c.is_pure()), (2, false));
        let c = complex(&[&[1]]);
        assert_eq!((c.dimension(), c.is_pure()), (0, true));
    }

    #[test]
    fn parse_and_display() {
        let c = parse_complex("# path\n1 2\n\n2 3\n").unwrap();
        assert_eq!(c.to_string(), "2 3\n1 2\n");
        assert_eq!(c.vertex_count(), 3);
        assert_eq!("5,6,2".parse::<FVector>().unwrap().entries(), &[5, 6, 2]);
        assert!(matches!("5,0".parse::<FVector>(), Err(Error::NonPositiveEntry { index: 1, value: 0 })));
        assert!(matches!("5,x".parse::<FVector>(), Err(Error::Parse { .. })));
    }

    #[test]
    fn from_polynomial_requires_unit_constant() {
        let p = IntPolynomial::from_coeffs(vec![1, 5, 6, 2]);
        assert_eq!(FVector::from_polynomial(&p).unwrap().entries(), &[5, 6, 2]);
        assert!(FVector::from_polynomial(&IntPolynomial::from_coeffs(vec![2, 5])).is_none());
    }
}
