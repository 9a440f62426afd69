//! The group `Gamma0+(p)` generated by `Gamma0(p)` and the Fricke involution.
//!
//! Elements outside `Gamma0(p)` are real matrices `(1/sqrt p)(p*alpha, beta; p*gamma, p*delta)`.
//! They are stored through the integer quadruple `(alpha, beta, gamma, delta)`
//! with `p*alpha*delta - beta*gamma = 1`, so no irrational number is ever formed.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::{parse_int_list, UnimodularMatrix};

/// Deterministic trial division.
pub fn is_odd_prime(n: u64) -> bool {
    if n < 3 || n % 2 == 0 {
        return false;
    }
    let mut q = 3u64;
    while q.saturating_mul(q) <= n {
        if n % q == 0 {
            return false;
        }
        q += 2;
    }
    true
}

/// Validates `p` as an odd prime.
pub fn odd_prime(p: &BigInt) -> Result<u64> {
    match p.to_u64() {
        Some(v) if is_odd_prime(v) => Ok(v),
        _ => Err(Error::InvalidPrime(p.clone())),
    }
}

/// Which determinant the integer matrix handed to [`classify`] carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetScale {
    /// An element of `Gamma0(p)`.
    One,
    /// `sqrt(p)` times an element of the Fricke coset.
    P,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FrickeBody {
    Gamma0(UnimodularMatrix),
    Coset {
        alpha: BigInt,
        beta: BigInt,
        gamma: BigInt,
        delta: BigInt,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrickeElement {
    p: u64,
    body: FrickeBody,
}

impl FrickeElement {
    /// An element of `Gamma0(p)`; requires `p | c`.
    pub fn gamma0(p: u64, g: UnimodularMatrix) -> Result<Self> {
        check_prime(p)?;
        if !g.c().is_multiple_of(&BigInt::from(p)) {
            return Err(Error::DivisibilityViolation {
                entry: "c",
                value: g.c().clone(),
                p,
            });
        }
        Ok(FrickeElement {
            p,
            body: FrickeBody::Gamma0(g),
        })
    }

    /// The coset element `(1/sqrt p)(p*alpha, beta; p*gamma, p*delta)`.
    pub fn coset(p: u64, alpha: BigInt, beta: BigInt, gamma: BigInt, delta: BigInt) -> Result<Self> {
        check_prime(p)?;
        let det = BigInt::from(p) * &alpha * &delta - &beta * &gamma;
        if !det.is_one() {
            return Err(Error::DeterminantMismatch {
                expected: BigInt::one(),
                found: det,
            });
        }
        Ok(FrickeElement {
            p,
            body: FrickeBody::Coset {
                alpha,
                beta,
                gamma,
                delta,
            },
        })
    }

    pub fn identity(p: u64) -> Result<Self> {
        Self::gamma0(p, UnimodularMatrix::identity())
    }

    /// `W_p = (1/sqrt p)(0, -1; p, 0)`.
    pub fn fricke_involution(p: u64) -> Result<Self> {
        Self::coset(p, BigInt::zero(), -BigInt::one(), BigInt::one(), BigInt::zero())
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn body(&self) -> &FrickeBody {
        &self.body
    }

    pub fn as_gamma0(&self) -> Option<&UnimodularMatrix> {
        match &self.body {
            FrickeBody::Gamma0(g) => Some(g),
            FrickeBody::Coset { .. } => None,
        }
    }

    pub fn is_coset(&self) -> bool {
        matches!(self.body, FrickeBody::Coset { .. })
    }

    pub fn det_scale(&self) -> DetScale {
        if self.is_coset() {
            DetScale::P
        } else {
            DetScale::One
        }
    }

    /// The integer matrix `sqrt(det_scale)` times the element.
    pub fn integer_matrix(&self) -> [BigInt; 4] {
        match &self.body {
            FrickeBody::Gamma0(g) => g.clone().into_entries(),
            FrickeBody::Coset {
                alpha,
                beta,
                gamma,
                delta,
            } => {
                let p = BigInt::from(self.p);
                [&p * alpha, beta.clone(), &p * gamma, &p * delta]
            }
        }
    }

    pub fn neg(&self) -> Self {
        let body = match &self.body {
            FrickeBody::Gamma0(g) => FrickeBody::Gamma0(-g),
            FrickeBody::Coset {
                alpha,
                beta,
                gamma,
                delta,
            } => FrickeBody::Coset {
                alpha: -alpha,
                beta: -beta,
                gamma: -gamma,
                delta: -delta,
            },
        };
        FrickeElement { p: self.p, body }
    }
}

fn check_prime(p: u64) -> Result<()> {
    if is_odd_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidPrime(p.into()))
    }
}

/// Classifies an integer matrix as an element of `Gamma0+(p)`.
pub fn classify(p: u64, m: [BigInt; 4], det_scale: DetScale) -> Result<FrickeElement> {
    check_prime(p)?;
    let pb = BigInt::from(p);
    let [m11, m12, m21, m22] = m;
    let det = &m11 * &m22 - &m12 * &m21;
    match det_scale {
        DetScale::One => {
            if !det.is_one() {
                return Err(Error::DeterminantMismatch {
                    expected: BigInt::one(),
                    found: det,
                });
            }
            FrickeElement::gamma0(p, UnimodularMatrix::new_unchecked(m11, m12, m21, m22))
        }
        DetScale::P => {
            if det != pb {
                return Err(Error::DeterminantMismatch {
                    expected: pb,
                    found: det,
                });
            }
            let divide = |entry: &'static str, v: BigInt| {
                let (q, r) = v.div_rem(&pb);
                if r.is_zero() {
                    Ok(q)
                } else {
                    Err(Error::DivisibilityViolation { entry, value: v, p })
                }
            };
            let alpha = divide("m11", m11)?;
            let gamma = divide("m21", m21)?;
            let delta = divide("m22", m22)?;
            FrickeElement::coset(p, alpha, m12, gamma, delta)
        }
    }
}

/// Group law in `Gamma0+(p)`.
pub fn gamma_plus_mul(x: &FrickeElement, y: &FrickeElement) -> Result<FrickeElement> {
    if x.p != y.p {
        return Err(Error::PrimeMismatch {
            left: x.p,
            right: y.p,
        });
    }
    let [a1, b1, c1, d1] = x.integer_matrix();
    let [a2, b2, c2, d2] = y.integer_matrix();
    let mut prod = [
        &a1 * &a2 + &b1 * &c2,
        &a1 * &b2 + &b1 * &d2,
        &c1 * &a2 + &d1 * &c2,
        &c1 * &b2 + &d1 * &d2,
    ];
    let scale = match (x.det_scale(), y.det_scale()) {
        (DetScale::One, DetScale::One) => DetScale::One,
        (DetScale::P, DetScale::P) => {
            // det p^2 with every entry divisible by p
            let pb = BigInt::from(x.p);
            for e in prod.iter_mut() {
                debug_assert!(e.is_multiple_of(&pb));
                *e = &*e / &pb;
            }
            DetScale::One
        }
        _ => DetScale::P,
    };
    classify(x.p, prod, scale)
}

impl fmt::Display for FrickeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.body {
            FrickeBody::Gamma0(g) => write!(f, "{g}"),
            FrickeBody::Coset {
                alpha,
                beta,
                gamma,
                delta,
            } => write!(f, "{}:{},{},{},{}", self.p, alpha, beta, gamma, delta),
        }
    }
}

/// Parses the coset text form `p:alpha,beta,gamma,delta`.
impl FromStr for FrickeElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "Fricke coset p:alpha,beta,gamma,delta",
            input: s.to_string(),
        };
        let (p, rest) = s.split_once(':').ok_or_else(err)?;
        let p = parse_int_list(p, "prime p")?;
        let [p]: [BigInt; 1] = p.try_into().map_err(|_| err())?;
        let p = odd_prime(&p)?;
        let v = parse_int_list(rest, "Fricke coset p:alpha,beta,gamma,delta")?;
        let [alpha, beta, gamma, delta]: [BigInt; 4] = v.try_into().map_err(|_| err())?;
        FrickeElement::coset(p, alpha, beta, gamma, delta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn ints(v: [i64; 4]) -> [BigInt; 4] {
        v.map(BigInt::from)
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..40).filter(|&n| is_odd_prime(n)).collect();
        assert_eq!(primes, vec![3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(FrickeElement::identity(2).is_err());
        assert!(FrickeElement::identity(9).is_err());
    }

    #[test]
    fn fricke_squares_to_minus_identity() {
        let w = FrickeElement::fricke_involution(5).unwrap();
        let w2 = gamma_plus_mul(&w, &w).unwrap();
        assert_eq!(
            w2,
            FrickeElement::gamma0(5, -UnimodularMatrix::identity()).unwrap()
        );
    }

    #[test]
    fn fricke_times_gamma0() {
        let w = FrickeElement::fricke_involution(5).unwrap();
        let g = FrickeElement::gamma0(5, UnimodularMatrix::from_i64(1, 0, 5, 1).unwrap()).unwrap();
        // W (a',b';c',d') = (1/sqrt p)(-c', -d'; p a', p b')
        let expect = FrickeElement::coset(5, big(-1), big(-1), big(1), big(0)).unwrap();
        assert_eq!(gamma_plus_mul(&w, &g).unwrap(), expect);

        let one = FrickeElement::identity(5).unwrap();
        assert_eq!(gamma_plus_mul(&one, &g).unwrap(), g);
        assert_eq!(gamma_plus_mul(&one, &w).unwrap(), w);
    }

    #[test]
    fn mismatched_primes() {
        let x = FrickeElement::identity(5).unwrap();
        let y = FrickeElement::identity(7).unwrap();
        assert_eq!(gamma_plus_mul(&x, &y).unwrap_err().code(), "prime_mismatch");
    }

    #[test]
    fn classify_examples() {
        let g = classify(5, ints([1, 0, 5, 1]), DetScale::One).unwrap();
        assert!(!g.is_coset());
        let w = classify(5, ints([0, -1, 5, 0]), DetScale::P).unwrap();
        assert_eq!(w, FrickeElement::fricke_involution(5).unwrap());

        let e = classify(5, ints([1, 1, 1, 3]), DetScale::One).unwrap_err();
        assert_eq!(e.code(), "determinant_mismatch");
        let e = classify(5, ints([1, 0, 1, 1]), DetScale::One).unwrap_err();
        assert_eq!(e.code(), "divisibility_violation");
        let e = classify(5, ints([1, 1, -1, 4]), DetScale::P).unwrap_err();
        assert_eq!(e.code(), "divisibility_violation");
        let e = classify(9, ints([1, 0, 9, 1]), DetScale::One).unwrap_err();
        assert_eq!(e.code(), "invalid_prime");
        let e = classify(4, ints([1, 0, 4, 1]), DetScale::One).unwrap_err();
        assert_eq!(e.code(), "invalid_prime");
    }

    #[test]
    fn coset_text_format() {
        let w: FrickeElement = "5:0,-1,1,0".parse().unwrap();
        assert_eq!(w, FrickeElement::fricke_involution(5).unwrap());
        assert_eq!(w.to_string(), "5:0,-1,1,0");
        assert_eq!("6:0,-1,1,0".parse::<FrickeElement>().unwrap_err().code(), "invalid_prime");
        assert_eq!("5:1,1,1,1".parse::<FrickeElement>().unwrap_err().code(), "determinant_mismatch");
        assert!("5;0,-1,1,0".parse::<FrickeElement>().is_err());
    }
}
