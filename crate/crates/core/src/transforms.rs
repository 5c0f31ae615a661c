//! Exact integer transforms between f-vectors and the c-, b- and h-sequences.
//!
//! With `f_{-1} = 1` and `d = dim + 1`:
//!
//! * `c` is defined by `sum_{i=0}^{d} f_{i-1} (x - 1)^i = sum_{i=0}^{d} c_i x^i`,
//! * `b` by `sum_{i=1}^{d} f_{i-1} (x - 1)^{i-1} = sum_{i=1}^{d} b_i x^{i-1}`,
//! * `h` by `sum_{i=0}^{d} f_{i-1} (x - 1)^{d-i} = sum_{i=0}^{d} h_i x^{d-i}`.
//!
//! All arithmetic is on `i128` with checked operations; anything that would
//! wrap is reported as [`Error::Overflow`].

use std::fmt;
use std::ops::Index;

use crate::complex::{FVector, HVector};
use crate::error::{Error, Result};

/// Polynomial with integer coefficients, indexed by degree. Trailing zeros are trimmed,
/// so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<i128>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coeffs(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// `(x + shift)^exp`, expanded with checked binomial accumulation.
    pub fn binomial_power(shift: i128, exp: usize) -> Result<Self> {
        let mut coeffs = vec![0i128; exp + 1];
        coeffs[0] = 1;
        for step in 1..=exp {
            // multiply the current degree-(step-1) polynomial by (x + shift), in place
            for k in (0..=step).rev() {
                let lower = if k > 0 { coeffs[k - 1] } else { 0 };
                let scaled = coeffs[k].checked_mul(shift).ok_or(Error::Overflow("binomial power"))?;
                coeffs[k] = lower.checked_add(scaled).ok_or(Error::Overflow("binomial power"))?;
            }
        }
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> i128 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &IntPolynomial, factor: i128) -> Result<()> {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), 0);
        }
        for (acc, &c) in self.coeffs.iter_mut().zip(&other.coeffs) {
            let term = c.checked_mul(factor).ok_or(Error::Overflow("polynomial sum"))?;
            *acc = acc.checked_add(term).ok_or(Error::Overflow("polynomial sum"))?;
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        Ok(())
    }

    pub fn mul(&self, other: &IntPolynomial) -> Result<IntPolynomial> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(Error::Overflow("polynomial product"))?;
                out[i + j] = out[i + j].checked_add(term).ok_or(Error::Overflow("polynomial product"))?;
            }
        }
        Ok(Self::from_coeffs(out))
    }

    /// `p(x + shift)`, by Horner's scheme on checked integers.
    pub fn shifted(&self, shift: i128) -> Result<IntPolynomial> {
        let linear = IntPolynomial::from_coeffs(vec![shift, 1]);
        let mut acc = IntPolynomial::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(&linear)?;
            acc.add_scaled(&IntPolynomial::from_coeffs(vec![c]), 1)?;
        }
        Ok(acc)
    }
}

impl Index<usize> for IntPolynomial {
    type Output = i128;

    fn index(&self, k: usize) -> &i128 {
        &self.coeffs[k]
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            let body = match (k, mag) {
                (0, _) => mag.to_string(),
                (1, 1) => "x".to_string(),
                (1, _) => format!("{mag}x"),
                (_, 1) => format!("x^{k}"),
                _ => format!("{mag}x^{k}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// `(c_0, c_1, ..., c_d)`. `c_0` is kept so that the entries sum to `f_{-1} = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CSequence(pub Vec<i128>);

/// `(b_1, ..., b_d)`; `b_0 = 1` is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BSequence(pub Vec<i128>);

impl CSequence {
    pub fn entries(&self) -> &[i128] {
        &self.0
    }

    /// `d`, the index of the last entry.
    pub fn dimension(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// `sum_{i=k}^{d} c_i`.
    pub fn suffix_sum(&self, k: usize) -> i128 {
        self.0.iter().skip(k).sum()
    }

    pub fn total(&self) -> i128 {
        self.0.iter().sum()
    }
}

impl BSequence {
    pub fn entries(&self) -> &[i128] {
        &self.0
    }

    /// `b_k` for `1 <= k <= d`.
    pub fn get(&self, k: usize) -> Option<i128> {
        k.checked_sub(1).and_then(|i| self.0.get(i)).copied()
    }
}

fn write_signed(f: &mut fmt::Formatter<'_>, entries: &[i128]) -> fmt::Result {
    for (i, v) in entries.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

impl fmt::Display for CSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed(f, &self.0)
    }
}

impl fmt::Display for BSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed(f, &self.0)
    }
}

/// Exact binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Result<i128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc.checked_mul((n - i) as i128).ok_or(Error::Overflow("binomial coefficient"))? / (i as i128 + 1);
    }
    Ok(acc)
}

/// `sum_{i=0}^{d} f_{i-1} x^i` with `f_{-1} = 1`.
pub fn f_polynomial(f: &FVector) -> IntPolynomial {
    IntPolynomial::from_coeffs(f.with_empty_face().map(i128::from).collect())
}

/// Expands `sum_i weight_i * (x - 1)^i` for the given weights.
fn expand_minus_one(weights: impl Iterator<Item = i128>, len: usize) -> Result<Vec<i128>> {
    let mut acc = IntPolynomial::zero();
    let mut power = IntPolynomial::from_coeffs(vec![1]);
    let step = IntPolynomial::from_coeffs(vec![-1, 1]);
    for w in weights {
        acc.add_scaled(&power, w)?;
        power = power.mul(&step)?;
    }
    let mut out = acc.coeffs().to_vec();
    out.resize(len, 0);
    Ok(out)
}

pub fn c_sequence(f: &FVector) -> Result<CSequence> {
    let d = f.dimension();
    let coeffs = expand_minus_one(f.with_empty_face().map(i128::from), d + 1)?;
    Ok(CSequence(coeffs))
}

pub fn b_sequence(f: &FVector) -> Result<BSequence> {
    let d = f.dimension();
    let coeffs = expand_minus_one(f.entries().iter().map(|&v| i128::from(v)), d)?;
    Ok(BSequence(coeffs))
}

/// `b_k = sum_{i=k}^{d} c_i` for `k = 1..=d`.
pub fn b_from_c(c: &CSequence) -> BSequence {
    let d = c.dimension();
    let mut out = vec![0i128; d];
    let mut running = 0i128;
    for k in (1..=d).rev() {
        running += c.0[k];
        out[k - 1] = running;
    }
    BSequence(out)
}

/// `c_i = sum_{j=0}^{d} (-1)^{d-i} C(j, d-i) h_j`.
pub fn c_from_h(h: &HVector) -> Result<CSequence> {
    let d = h.dimension();
    let mut out = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let mut acc = 0i128;
        for (j, &hj) in h.entries().iter().enumerate() {
            let term = binomial(j, d - i)?.checked_mul(hj).ok_or(Error::Overflow("c from h"))?;
            acc = acc.checked_add(term).ok_or(Error::Overflow("c from h"))?;
        }
        out.push(if (d - i).is_multiple_of(2) { acc } else { -acc });
    }
    Ok(CSequence(out))
}

/// `b_k = 1 + sum_{j=1}^{d} (-1)^{d-k} C(j-1, d-k) h_j` for `k = 1..=d`.
pub fn b_from_h(h: &HVector) -> Result<BSequence> {
    let d = h.dimension();
    let mut out = Vec::with_capacity(d);
    for k in 1..=d {
        let mut acc = 0i128;
        for (j, &hj) in h.entries().iter().enumerate().skip(1) {
            let term = binomial(j - 1, d - k)?.checked_mul(hj).ok_or(Error::Overflow("b from h"))?;
            acc = acc.checked_add(term).ok_or(Error::Overflow("b from h"))?;
        }
        let signed = if (d - k).is_multiple_of(2) { acc } else { -acc };
        out.push(signed.checked_add(1).ok_or(Error::Overflow("b from h"))?);
    }
    Ok(BSequence(out))
}

/// `sum_j (1 + x)^{delta_j} - sum_j (1 + x)^{e_j}`.
pub fn facet_signature_polynomial(deltas: &[usize], es: &[usize]) -> Result<IntPolynomial> {
    let mut acc = IntPolynomial::zero();
    for &delta in deltas {
        acc.add_scaled(&IntPolynomial::binomial_power(1, delta)?, 1)?;
    }
    for &e in es {
        acc.add_scaled(&IntPolynomial::binomial_power(1, e)?, -1)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fv(v: &[u64]) -> FVector {
        FVector::new(v.to_vec()).unwrap()
    }

    fn hv(v: &[i128]) -> HVector {
        HVector(v.to_vec())
    }

    fn simplex_f(d: usize) -> FVector {
        fv(&(1..=d).map(|i| binomial(d, i).unwrap() as u64).collect::<Vec<_>>())
    }

    #[test]
    fn c_sequence_examples() {
        assert_eq!(c_sequence(&fv(&[3, 2])).unwrap().0, vec![0, -1, 2]);
        assert_eq!(c_sequence(&fv(&[4, 4, 1])).unwrap().0, vec![0, -1, 1, 1]);
        for d in 1..=10 {
            let mut unit = vec![0; d + 1];
            unit[d] = 1;
            assert_eq!(c_sequence(&simplex_f(d)).unwrap().0, unit);
        }
    }

    #[test]
    fn b_sequence_examples() {
        assert_eq!(b_sequence(&fv(&[3, 2])).unwrap().0, vec![1, 2]);
        assert_eq!(b_sequence(&fv(&[4, 4, 1])).unwrap().0, vec![1, 2, 1]);
        for d in 1..=10 {
            assert_eq!(b_sequence(&simplex_f(d)).unwrap().0, vec![1; d]);
        }
    }

    #[test]
    fn b_from_c_examples() {
        assert_eq!(b_from_c(&CSequence(vec![0, -1, 2])).0, vec![1, 2]);
        assert_eq!(b_from_c(&CSequence(vec![0, -1, 0, 2])).0, vec![1, 2, 2]);
        assert_eq!(b_from_c(&CSequence(vec![0, 0, 0, 0, 1])).0, vec![1, 1, 1, 1]);
    }

    #[test]
    fn from_h_examples() {
        assert_eq!(c_from_h(&hv(&[1, 1, 0])).unwrap().0, vec![0, -1, 2]);
        assert_eq!(c_from_h(&hv(&[1, 2, -1, 0])).unwrap().0, vec![0, -1, 0, 2]);
        assert_eq!(c_from_h(&hv(&[1, 0, 0, 0, 0])).unwrap().0, vec![0, 0, 0, 0, 1]);
        assert_eq!(b_from_h(&hv(&[1, 1, 0])).unwrap().0, vec![1, 2]);
        assert_eq!(b_from_h(&hv(&[1, 2, -1, 0])).unwrap().0, vec![1, 2, 2]);
        assert_eq!(b_from_h(&hv(&[1, 0, 0, 0, 0])).unwrap().0, vec![1, 1, 1, 1]);
    }

    #[test]
    fn signature_examples() {
        assert_eq!(facet_signature_polynomial(&[2, 2], &[1]).unwrap().coeffs(), &[1, 3, 2]);
        assert_eq!(facet_signature_polynomial(&[3, 3], &[1]).unwrap().coeffs(), &[1, 5, 6, 2]);
        let single = facet_signature_polynomial(&[6], &[]).unwrap();
        assert_eq!(single.coeffs(), &[1, 6, 15, 20, 15, 6, 1]);
    }

    #[test]
    fn binomial_power_matches_pascal() {
        let p = IntPolynomial::binomial_power(-1, 5).unwrap();
        assert_eq!(p.coeffs(), &[-1, 5, -10, 10, -5, 1]);
        assert_eq!(IntPolynomial::binomial_power(3, 0).unwrap().coeffs(), &[1]);
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(IntPolynomial::binomial_power(1, 200), Err(Error::Overflow("binomial power")));
        let huge = fv(&[u64::MAX; 100]);
        assert!(matches!(c_sequence(&huge), Err(Error::Overflow(_))));
    }

    #[test]
    fn shift_inverts_minus_one_expansion() {
        let f = fv(&[7, 15, 9, 2]);
        let c = c_sequence(&f).unwrap();
        let back = IntPolynomial::from_coeffs(c.0.clone()).shifted(1).unwrap();
        assert_eq!(back, f_polynomial(&f));
    }

    #[test]
    fn polynomial_display() {
        let p = IntPolynomial::from_coeffs(vec![1, -3, 0, 2]);
        assert_eq!(p.to_string(), "1-3x+2x^3");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}
