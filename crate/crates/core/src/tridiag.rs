//! Trace and exact signature of the tridiagonal matrix `M_alpha` with diagonal
//! `(a_1, ..., a_k)` and unit off-diagonals, and the geometric formula
//! `Phi = trace - 3 * signature`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::paths::EdgeWord;

/// Counts of positive, negative and zero eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }
}

/// Diagonal of `M_alpha`; off-diagonal entries are all one.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TridiagonalSpec {
    diagonal: Vec<BigInt>,
}

impl TridiagonalSpec {
    pub fn new(diagonal: Vec<BigInt>) -> Self {
        TridiagonalSpec { diagonal }
    }

    pub fn from_word(w: &EdgeWord) -> Self {
        Self::new(w.exponents().to_vec())
    }

    pub fn diagonal(&self) -> &[BigInt] {
        &self.diagonal
    }

    pub fn dim(&self) -> usize {
        self.diagonal.len()
    }

    pub fn trace(&self) -> BigInt {
        self.diagonal.iter().sum()
    }

    /// Symmetric elimination over the rationals.
    ///
    /// A zero pivot `x = 0` at row `i` is paired with row `i + 1` into the block
    /// `(0 1; 1 a_{i+1})`, which has determinant `-1` and so one eigenvalue of
    /// each sign. Its inverse has a zero in the corner that couples to row
    /// `i + 2`, so elimination resumes there on the unmodified `a_{i+2}`.
    pub fn inertia(&self) -> Inertia {
        let mut out = Inertia::default();
        let k = self.diagonal.len();
        let mut i = 0;
        // Schur-complemented diagonal entry at row i
        let mut pivot = match self.diagonal.first() {
            Some(a) => BigRational::from_integer(a.clone()),
            None => return out,
        };
        loop {
            if pivot.is_zero() {
                if i + 1 == k {
                    out.zero += 1;
                    return out;
                }
                out.positive += 1;
                out.negative += 1;
                i += 2;
                if i >= k {
                    return out;
                }
                pivot = BigRational::from_integer(self.diagonal[i].clone());
                continue;
            }
            if pivot.is_positive() {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            i += 1;
            if i >= k {
                return out;
            }
            pivot = BigRational::from_integer(self.diagonal[i].clone()) - pivot.recip();
        }
    }

    /// Independent count through the leading principal minors
    /// `d_0 = 1`, `d_i = a_i d_{i-1} - d_{i-2}`.
    ///
    /// The number of negative eigenvalues is the number of sign changes in
    /// `d_0, ..., d_k`, skipping interior zeros (a zero minor forces
    /// `d_{i+1} = -d_{i-1}`). `M` is singular exactly when `d_k = 0`, and then
    /// the kernel is one-dimensional.
    pub fn inertia_by_minors(&self) -> Inertia {
        let k = self.diagonal.len();
        let mut minors = Vec::with_capacity(k + 1);
        minors.push(BigInt::one());
        let mut prev2 = BigInt::zero();
        for a in &self.diagonal {
            let prev = minors.last().expect("nonempty").clone();
            let next = a * &prev - &prev2;
            prev2 = prev;
            minors.push(next);
        }
        let singular = minors[k].is_zero();
        let scan = if singular { &minors[..k] } else { &minors[..] };
        let mut negative = 0;
        let mut last_sign = 1;
        for m in scan.iter().filter(|m| !m.is_zero()) {
            let s = if m.is_positive() { 1 } else { -1 };
            if s != last_sign {
                negative += 1;
            }
            last_sign = s;
        }
        let zero = usize::from(singular);
        Inertia {
            positive: k - zero - negative,
            negative,
            zero,
        }
    }
}

/// `sum a_i`.
pub fn trace(w: &EdgeWord) -> BigInt {
    TridiagonalSpec::from_word(w).trace()
}

/// `n_+ - n_-` of `M_alpha`, computed exactly.
pub fn signature(w: &EdgeWord) -> i64 {
    TridiagonalSpec::from_word(w).inertia().signature()
}

/// `trace - 3 * signature`.
pub fn km_phi(w: &EdgeWord) -> BigInt {
    let m = TridiagonalSpec::from_word(w);
    m.trace() - BigInt::from(3 * m.inertia().signature())
}
