//! Sawtooth function, Dedekind sums and the Rademacher symbol on `SL2(Z)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::{Sign, UnimodularMatrix};

/// `((x))`: `x - floor(x) - 1/2` off the integers, `0` on them.
pub fn sawtooth(x: &BigRational) -> BigRational {
    if x.is_integer() {
        return BigRational::zero();
    }
    x - x.floor() - BigRational::new(BigInt::one(), BigInt::from(2))
}

/// Tuning for [`dedekind_sum_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DedekindConfig {
    /// Moduli `k` below this use the direct sum; the rest use reciprocity descent.
    pub literal_threshold: u64,
}

impl Default for DedekindConfig {
    fn default() -> Self {
        DedekindConfig {
            literal_threshold: 64,
        }
    }
}

fn check_domain(h: &BigInt, k: &BigInt) -> Result<()> {
    if !k.is_positive() || !h.gcd(k).is_one() {
        return Err(Error::DedekindDomain {
            h: h.clone(),
            k: k.clone(),
        });
    }
    Ok(())
}

/// `s(h, k)` for `k >= 1`, `gcd(h, k) = 1`.
pub fn dedekind_sum(h: &BigInt, k: &BigInt) -> Result<BigRational> {
    dedekind_sum_with(h, k, &DedekindConfig::default())
}

pub fn dedekind_sum_with(h: &BigInt, k: &BigInt, cfg: &DedekindConfig) -> Result<BigRational> {
    check_domain(h, k)?;
    match k.to_u64() {
        Some(small) if small < cfg.literal_threshold => Ok(literal_unchecked(h, k)),
        _ => Ok(descent_unchecked(h, k)),
    }
}

/// The defining sum `sum_{mu=1}^{k} ((h mu / k)) ((mu / k))`, evaluated term by term.
pub fn dedekind_sum_literal(h: &BigInt, k: &BigInt) -> Result<BigRational> {
    check_domain(h, k)?;
    Ok(literal_unchecked(h, k))
}

/// Reciprocity-based Euclidean descent, `O(log k)` rational operations.
pub fn dedekind_sum_fast(h: &BigInt, k: &BigInt) -> Result<BigRational> {
    check_domain(h, k)?;
    Ok(descent_unchecked(h, k))
}

fn literal_unchecked(h: &BigInt, k: &BigInt) -> BigRational {
    let h = h.mod_floor(k);
    if let (Some(hs), Some(ks)) = (h.to_i64(), k.to_i64()) {
        if ks < (1 << 30) {
            // ((h mu/k)) ((mu/k)) = (2r - k)(2 mu - k) / (4 k^2), r = h mu mod k,
            // and the term vanishes when k | mu or k | h mu.
            let (hs, ks) = (hs as i128, ks as i128);
            let mut acc: i128 = 0;
            for mu in 1..ks {
                let r = (hs * mu) % ks;
                if r != 0 {
                    acc += (2 * r - ks) * (2 * mu - ks);
                }
            }
            return BigRational::new(acc.into(), BigInt::from(4 * ks * ks));
        }
    }
    let mut acc = BigRational::zero();
    let mut mu = BigInt::one();
    while &mu <= k {
        let x = BigRational::new(&h * &mu, k.clone());
        let y = BigRational::new(mu.clone(), k.clone());
        acc += sawtooth(&x) * sawtooth(&y);
        mu += 1;
    }
    acc
}

fn descent_unchecked(h: &BigInt, k: &BigInt) -> BigRational {
    let h = h.mod_floor(k);
    if let (Some(hs), Some(ks)) = (h.to_i128(), k.to_i128()) {
        if let Some(v) = descent_small(hs, ks) {
            return BigRational::new((*v.numer()).into(), (*v.denom()).into());
        }
    }
    descent_big(h, k.clone())
}

// s(h,k) + s(k,h) = -1/4 + (h/k + k/h + 1/(hk)) / 12 for coprime h, k > 0.
fn descent_big(mut h: BigInt, mut k: BigInt) -> BigRational {
    let mut acc = BigRational::zero();
    let mut negate = false;
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    while !k.is_one() {
        let term = BigRational::new(&h * &h + &k * &k + 1, BigInt::from(12) * &h * &k) - &quarter;
        if negate {
            acc -= term;
        } else {
            acc += term;
        }
        negate = !negate;
        let r = k.mod_floor(&h);
        k = h;
        h = r;
    }
    acc
}

fn descent_small(mut h: i128, mut k: i128) -> Option<Ratio<i128>> {
    let mut acc = Ratio::<i128>::zero();
    let mut negate = false;
    let quarter = Ratio::new(1, 4);
    while k != 1 {
        let num = h.checked_mul(h)?.checked_add(k.checked_mul(k)?)?.checked_add(1)?;
        let den = h.checked_mul(k)?.checked_mul(12)?;
        let term = Ratio::new(num, den).checked_sub(&quarter)?;
        acc = if negate {
            acc.checked_sub(&term)?
        } else {
            acc.checked_add(&term)?
        };
        negate = !negate;
        let r = k.rem_euclid(h);
        k = h;
        h = r;
    }
    Some(acc)
}

/// The Rademacher symbol `Phi(g)`.
///
/// `b/d` when `c = 0`, else `(a + d)/c - 12 sgn(c) s(d, |c|)`. The value is
/// computed as an exact rational; a non-integral result is an arithmetic bug
/// and panics.
pub fn rademacher_phi(g: &UnimodularMatrix) -> BigInt {
    let value = rademacher_phi_rational(g);
    assert!(
        value.is_integer(),
        "Rademacher symbol of {g} is not an integer: {value}"
    );
    value.to_integer()
}

pub(crate) fn rademacher_phi_rational(g: &UnimodularMatrix) -> BigRational {
    let (a, b, c, d) = (g.a(), g.b(), g.c(), g.d());
    match Sign::of(c) {
        Sign::Zero => BigRational::new(b.clone(), d.clone()),
        sign => {
            let s = descent_or_literal(d, &c.abs());
            let twelve_s = s * BigInt::from(12);
            let first = BigRational::new(a + d, c.clone());
            if sign == Sign::Positive {
                first - twelve_s
            } else {
                first + twelve_s
            }
        }
    }
}

fn descent_or_literal(h: &BigInt, k: &BigInt) -> BigRational {
    // gcd(d, c) = 1 always holds for determinant one
    debug_assert!(check_domain(h, k).is_ok());
    match k.to_u64() {
        Some(small) if small < DedekindConfig::default().literal_threshold => {
            literal_unchecked(h, k)
        }
        _ => descent_unchecked(h, k),
    }
}
