//! Integer 2x2 matrices of determinant one and their group law.
//!
//! Values are never normalized up to sign. Two matrices that differ by a
//! global sign act identically as Moebius maps; compare them with
//! [`psl_eq`].

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Sign of an integer, with `sgn(0) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(x: &BigInt) -> Sign {
        if x.is_positive() {
            Sign::Positive
        } else if x.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn of_i64(x: i64) -> Sign {
        match x.signum() {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            _ => Sign::Zero,
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        match self.value() * rhs.value() {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            _ => Sign::Zero,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// `(a b; c d)` with integer entries and `ad - bc = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnimodularMatrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl UnimodularMatrix {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(Error::DeterminantMismatch {
                expected: BigInt::one(),
                found: det,
            });
        }
        Ok(UnimodularMatrix { a, b, c, d })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    /// Caller guarantees `ad - bc = 1`.
    pub(crate) fn new_unchecked(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        debug_assert!((&a * &d - &b * &c).is_one());
        UnimodularMatrix { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::new_unchecked(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    /// `S = (0 -1; 1 0)`.
    pub fn s() -> Self {
        Self::new_unchecked(BigInt::zero(), -BigInt::one(), BigInt::one(), BigInt::zero())
    }

    /// `T = (1 1; 0 1)`.
    pub fn t() -> Self {
        Self::t_pow(&BigInt::one())
    }

    pub fn t_pow(n: &BigInt) -> Self {
        Self::new_unchecked(BigInt::one(), n.clone(), BigInt::zero(), BigInt::one())
    }

    /// `T^n S = (n -1; 1 0)`, the building block of edge-path words.
    pub fn t_pow_s(n: &BigInt) -> Self {
        Self::new_unchecked(n.clone(), -BigInt::one(), BigInt::one(), BigInt::zero())
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn into_entries(self) -> [BigInt; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn inverse(&self) -> Self {
        Self::new_unchecked(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }
}

impl Default for UnimodularMatrix {
    fn default() -> Self {
        Self::identity()
    }
}

/// Entrywise integer product.
pub fn mat_mul(x: &UnimodularMatrix, y: &UnimodularMatrix) -> UnimodularMatrix {
    x * y
}

/// True iff `x = y` or `x = -y`.
pub fn psl_eq(x: &UnimodularMatrix, y: &UnimodularMatrix) -> bool {
    x == y || (x.a == -&y.a && x.b == -&y.b && x.c == -&y.c && x.d == -&y.d)
}

impl Mul for &UnimodularMatrix {
    type Output = UnimodularMatrix;

    fn mul(self, y: &UnimodularMatrix) -> UnimodularMatrix {
        UnimodularMatrix {
            a: &self.a * &y.a + &self.b * &y.c,
            b: &self.a * &y.b + &self.b * &y.d,
            c: &self.c * &y.a + &self.d * &y.c,
            d: &self.c * &y.b + &self.d * &y.d,
        }
    }
}

impl Mul for UnimodularMatrix {
    type Output = UnimodularMatrix;

    fn mul(self, y: UnimodularMatrix) -> UnimodularMatrix {
        &self * &y
    }
}

impl Neg for &UnimodularMatrix {
    type Output = UnimodularMatrix;

    fn neg(self) -> UnimodularMatrix {
        UnimodularMatrix {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }
}

impl Neg for UnimodularMatrix {
    type Output = UnimodularMatrix;

    fn neg(self) -> UnimodularMatrix {
        -&self
    }
}

impl TryFrom<[BigInt; 4]> for UnimodularMatrix {
    type Error = Error;

    fn try_from([a, b, c, d]: [BigInt; 4]) -> Result<Self> {
        Self::new(a, b, c, d)
    }
}

impl From<UnimodularMatrix> for [BigInt; 4] {
    fn from(m: UnimodularMatrix) -> Self {
        m.into_entries()
    }
}

/// Text form `a,b,c,d`.
impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d)
    }
}

/// Parses `n1,n2,...` as signed decimal integers with no spaces.
pub(crate) fn parse_int_list(s: &str, what: &'static str) -> Result<Vec<BigInt>> {
    let err = || Error::Parse {
        what,
        input: s.to_string(),
    };
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            let digits = part.strip_prefix('-').unwrap_or(part);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            part.parse::<BigInt>().map_err(|_| err())
        })
        .collect()
}

impl FromStr for UnimodularMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v = parse_int_list(s, "matrix a,b,c,d")?;
        let [a, b, c, d]: [BigInt; 4] = v.try_into().map_err(|_| Error::Parse {
            what: "matrix a,b,c,d",
            input: s.to_string(),
        })?;
        Self::new(a, b, c, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> UnimodularMatrix {
        UnimodularMatrix::from_i64(a, b, c, d).unwrap()
    }

    #[test]
    fn generator_products() {
        let s = UnimodularMatrix::s();
        let t = UnimodularMatrix::t();
        assert_eq!(&s * &s, m(-1, 0, 0, -1));
        assert_eq!(&t * &t, m(1, 2, 0, 1));

        // S T^-2 S T S T^-2 S
        let tm2 = UnimodularMatrix::t_pow(&BigInt::from(-2));
        let word = [&s, &tm2, &s, &t, &s, &tm2, &s];
        let prod = word
            .iter()
            .fold(UnimodularMatrix::identity(), |acc, g| &acc * *g);
        assert_eq!(prod, m(3, 1, 8, 3));
    }

    #[test]
    fn psl_equality() {
        let s = UnimodularMatrix::s();
        let t = UnimodularMatrix::t();
        assert!(psl_eq(&(&s * &s), &UnimodularMatrix::identity()));
        assert!(!psl_eq(&t, &t.inverse()));
        let tinv = t.inverse();
        let prod = &(&(&(&s * &tinv) * &s) * &tinv) * &s;
        assert!(psl_eq(&prod, &t));
    }

    #[test]
    fn rejects_bad_determinant() {
        let err = UnimodularMatrix::from_i64(1, 1, 1, 3).unwrap_err();
        assert_eq!(err.code(), "determinant_mismatch");
    }

    #[test]
    fn text_format() {
        let g: UnimodularMatrix = "3,1,8,3".parse().unwrap();
        assert_eq!(g, m(3, 1, 8, 3));
        assert_eq!(g.to_string(), "3,1,8,3");
        assert!("3, 1,8,3".parse::<UnimodularMatrix>().is_err());
        assert!("3,1,8".parse::<UnimodularMatrix>().is_err());
        assert!("+3,1,8,3".parse::<UnimodularMatrix>().is_err());
        assert_eq!(
            "1,2,3,4".parse::<UnimodularMatrix>().unwrap_err().code(),
            "determinant_mismatch"
        );
    }

    #[test]
    fn sign_conventions() {
        assert_eq!(Sign::of(&BigInt::zero()), Sign::Zero);
        assert_eq!(Sign::Negative * Sign::Negative, Sign::Positive);
        assert_eq!(Sign::Zero * Sign::Negative, Sign::Zero);
        assert_eq!((-Sign::Positive).value(), -1);
    }
}
