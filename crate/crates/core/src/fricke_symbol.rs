//! The Rademacher symbol `Phi_p` on `Gamma0+(p)`, evaluated through Dedekind
//! sums and, independently, through the trace and signature of two edge paths.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::dedekind::rademacher_phi;
use crate::error::{Error, Result};
use crate::fricke::{is_odd_prime, FrickeBody, FrickeElement};
use crate::matrix::{Sign, UnimodularMatrix};
use crate::paths::decompose;
use crate::tridiag::TridiagonalSpec;

/// Smallest even `k >= 2` with `24 | (p - 1) k`.
pub fn k_of_p(p: u64) -> Result<u64> {
    if !is_odd_prime(p) {
        return Err(Error::InvalidPrime(p.into()));
    }
    let g = num_integer::gcd(p - 1, 24);
    let k = 24 / g;
    Ok(if k % 2 == 0 { k } else { 2 * k })
}

/// `(a, pb; c/p, d)` for `(a, b; c, d)` in `Gamma0(p)`.
pub fn conjugate_by_p(e: &FrickeElement) -> Result<UnimodularMatrix> {
    let g = e.as_gamma0().ok_or(Error::NotInGamma0)?;
    Ok(conjugate_matrix(e.p(), g))
}

fn conjugate_matrix(p: u64, g: &UnimodularMatrix) -> UnimodularMatrix {
    let p = BigInt::from(p);
    debug_assert!((g.c() % &p).is_zero());
    UnimodularMatrix::new_unchecked(g.a().clone(), &p * g.b(), g.c() / &p, g.d().clone())
}

/// For a coset element `(1/sqrt p)(p alpha, beta; p gamma, p delta)`, the
/// element `W_p^{-1} g = (gamma, delta; -p alpha, -beta)` of `Gamma0(p)` and the
/// correction sign `sgn(-a c) = sgn(-alpha gamma)`.
pub fn reduce_coset(e: &FrickeElement) -> Option<(FrickeElement, Sign)> {
    match e.body() {
        FrickeBody::Gamma0(_) => None,
        FrickeBody::Coset {
            alpha,
            beta,
            gamma,
            delta,
        } => {
            let p = BigInt::from(e.p());
            let g = UnimodularMatrix::new_unchecked(
                gamma.clone(),
                delta.clone(),
                -&p * alpha,
                -beta,
            );
            let reduced = FrickeElement::gamma0(e.p(), g).expect("W_p^{-1} g lies in Gamma0(p)");
            let sign = -(Sign::of(alpha) * Sign::of(gamma));
            Some((reduced, sign))
        }
    }
}

fn via_gamma0(e: &FrickeElement, on_gamma0: impl Fn(u64, &UnimodularMatrix) -> BigRational) -> BigRational {
    match e.body() {
        FrickeBody::Gamma0(g) => on_gamma0(e.p(), g),
        FrickeBody::Coset { .. } => {
            let (reduced, sign) = reduce_coset(e).expect("coset element");
            let g = reduced
                .as_gamma0()
                .expect("one reduction step lands in Gamma0(p)");
            on_gamma0(e.p(), g) - BigRational::from_integer(BigInt::from(3 * sign.value()))
        }
    }
}

/// `Phi_p` through the classical symbol: `(Phi(g) + Phi((a, pb; c/p, d))) / 2`
/// on `Gamma0(p)`, and `Phi_p(W_p^{-1} g) - 3 sgn(-ac)` on the Fricke coset.
pub fn phi_p(e: &FrickeElement) -> BigRational {
    via_gamma0(e, |p, g| {
        let sum = rademacher_phi(g) + rademacher_phi(&conjugate_matrix(p, g));
        BigRational::new(sum, BigInt::from(2))
    })
}

/// Trace and signature of the two edge paths made from an element of `Gamma0(p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoPathData {
    pub alpha: crate::paths::EdgeWord,
    pub beta: crate::paths::EdgeWord,
    pub trace_alpha: BigInt,
    pub trace_beta: BigInt,
    pub signature_alpha: i64,
    pub signature_beta: i64,
}

pub fn two_paths(p: u64, g: &UnimodularMatrix) -> TwoPathData {
    let alpha = decompose(g);
    let beta = decompose(&conjugate_matrix(p, g));
    let ma = TridiagonalSpec::from_word(&alpha);
    let mb = TridiagonalSpec::from_word(&beta);
    TwoPathData {
        trace_alpha: ma.trace(),
        trace_beta: mb.trace(),
        signature_alpha: ma.inertia().signature(),
        signature_beta: mb.inertia().signature(),
        alpha,
        beta,
    }
}

/// `Phi_p` through geometry: `(tau_a + tau_b)/2 - 3 (sigma_a + sigma_b)/2`, with the
/// same coset reduction as [`phi_p`].
pub fn phi_p_geometric(e: &FrickeElement) -> BigRational {
    via_gamma0(e, |p, g| {
        let t = two_paths(p, g);
        let num = &t.trace_alpha + &t.trace_beta
            - BigInt::from(3 * (t.signature_alpha + t.signature_beta));
        BigRational::new(num, BigInt::from(2))
    })
}
