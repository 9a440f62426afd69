//! Seeded generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rademacher::fricke::{gamma_plus_mul, FrickeElement};
use rademacher::hp::{HPComplex, Hp};
use rademacher::{EdgeWord, UnimodularMatrix};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn m(a: i64, b: i64, c: i64, d: i64) -> UnimodularMatrix {
    UnimodularMatrix::from_i64(a, b, c, d).unwrap()
}

/// Plain 2x2 product on raw entries, independent of the library's `Mul`.
pub fn mul_raw(x: &[BigInt; 4], y: &[BigInt; 4]) -> [BigInt; 4] {
    [
        &x[0] * &y[0] + &x[1] * &y[2],
        &x[0] * &y[1] + &x[1] * &y[3],
        &x[2] * &y[0] + &x[3] * &y[2],
        &x[2] * &y[1] + &x[3] * &y[3],
    ]
}

pub fn entries(g: &UnimodularMatrix) -> [BigInt; 4] {
    g.clone().into_entries()
}

/// `S (T^{a_1} S) ... (T^{a_k} S)` multiplied out from scratch.
pub fn word_product_oracle(w: &[i64]) -> [BigInt; 4] {
    let s = [big(0), big(-1), big(1), big(0)];
    let mut acc = s.clone();
    for &a in w {
        let ts = [big(a), big(-1), big(1), big(0)];
        acc = mul_raw(&acc, &ts);
    }
    acc
}

/// `((x))` straight from the definition.
pub fn sawtooth_oracle(x: &BigRational) -> BigRational {
    if x.is_integer() {
        return BigRational::zero();
    }
    x - x.floor() - rat(1, 2)
}

/// `s(h, k)` as the literal sum over `mu = 1..k`, all in exact rationals.
pub fn dedekind_oracle(h: i64, k: i64) -> BigRational {
    let mut acc = BigRational::zero();
    for mu in 1..=k {
        acc += sawtooth_oracle(&rat(h * mu, k)) * sawtooth_oracle(&rat(mu, k));
    }
    acc
}

/// `Phi` from its defining formula, with the Dedekind sum from the oracle above.
pub fn phi_oracle(g: &[i64; 4]) -> BigRational {
    let [a, b, c, d] = *g;
    if c == 0 {
        return rat(b, d);
    }
    rat(a + d, c) - BigRational::from_integer(big(12 * c.signum())) * dedekind_oracle(d, c.abs())
}

/// Every word of length `0..=max_len` over `lo..=hi`, in lexicographic order.
pub fn all_words(max_len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for a in lo..=hi {
                let mut v: Vec<i64> = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn random_word(rng: &mut impl Rng, len: std::ops::RangeInclusive<usize>, bound: i64) -> Vec<i64> {
    let n = rng.gen_range(len);
    (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()
}

pub fn random_nonzero_word(rng: &mut impl Rng, len: std::ops::RangeInclusive<usize>, bound: i64) -> Vec<i64> {
    let n = rng.gen_range(len);
    (0..n)
        .map(|_| loop {
            let a = rng.gen_range(-bound..=bound);
            if a != 0 {
                break a;
            }
        })
        .collect()
}

pub fn edge_word(w: &[i64]) -> EdgeWord {
    EdgeWord::from_i64(w)
}

/// A random element of `SL2(Z)` from elementary row and column operations.
pub fn random_sl2(rng: &mut impl Rng, steps: usize, mult: i64) -> UnimodularMatrix {
    let mut g = UnimodularMatrix::identity();
    for _ in 0..steps {
        let n = big(rng.gen_range(-mult..=mult));
        let e = match rng.gen_range(0..5) {
            0 => UnimodularMatrix::t_pow(&n),
            1 => UnimodularMatrix::new(big(1), big(0), n, big(1)).unwrap(),
            2 => UnimodularMatrix::s(),
            3 => -UnimodularMatrix::identity(),
            _ => UnimodularMatrix::t_pow_s(&n),
        };
        g = if rng.gen_bool(0.5) { &g * &e } else { &e * &g };
    }
    g
}

/// Matrix built from generators `S`, `T^{+-1}`, `T^{+-2}`.
pub fn generator_word(w: &[u8]) -> UnimodularMatrix {
    let mut g = UnimodularMatrix::identity();
    for &x in w {
        let f = match x {
            0 => UnimodularMatrix::s(),
            1 => UnimodularMatrix::t_pow(&big(1)),
            2 => UnimodularMatrix::t_pow(&big(-1)),
            3 => UnimodularMatrix::t_pow(&big(2)),
            _ => UnimodularMatrix::t_pow(&big(-2)),
        };
        g = &g * &f;
    }
    g
}

/// Element `(a, b; c, d)` of `Gamma0(p)` with `c = p c'`, `|c'| <= c_bound`,
/// `|d| <= d_bound`; `c' = 0` gives `+-T^n`.
pub fn random_gamma0(rng: &mut impl Rng, p: u64, c_bound: i64, d_bound: i64) -> UnimodularMatrix {
    let p = p as i64;
    loop {
        let cp = rng.gen_range(-c_bound..=c_bound);
        let c = p * cp;
        if c == 0 {
            let s = if rng.gen_bool(0.5) { 1 } else { -1 };
            let n = rng.gen_range(-d_bound..=d_bound);
            return m(s, s * n, 0, s);
        }
        let d = rng.gen_range(-d_bound..=d_bound);
        if d == 0 || c.gcd(&d) != 1 {
            continue;
        }
        // a d - b c = 1
        let e = d.extended_gcd(&c);
        let (a, b) = if e.gcd == 1 { (e.x, -e.y) } else { (-e.x, e.y) };
        let shift = rng.gen_range(-3..=3);
        let g = m(a + shift * c, b + shift * d, c, d);
        return g;
    }
}

/// Moves an arbitrary `g` into `Gamma0(p)` by one elementary multiplication.
pub fn adapt_to_gamma0(p: u64, g: &UnimodularMatrix) -> UnimodularMatrix {
    let pb = BigInt::from(p);
    if (g.c() % &pb).is_zero() {
        return g.clone();
    }
    let inv = |x: &BigInt| -> BigInt {
        let e = x.mod_floor(&pb).extended_gcd(&pb);
        e.x.mod_floor(&pb)
    };
    if (g.a() % &pb).is_zero() {
        // then p does not divide c, and S g has top-left entry -c
        return adapt_to_gamma0(p, &(&UnimodularMatrix::s() * g));
    }
    // (1, 0; n, 1) g has lower-left n a + c
    let n = (-g.c() * inv(g.a())).mod_floor(&pb);
    let l = UnimodularMatrix::new(big(1), big(0), n, big(1)).unwrap();
    &l * g
}

pub fn random_element(rng: &mut impl Rng, p: u64, coset: bool, c_bound: i64, d_bound: i64) -> FrickeElement {
    let g = FrickeElement::gamma0(p, random_gamma0(rng, p, c_bound, d_bound)).unwrap();
    if coset {
        let w = FrickeElement::fricke_involution(p).unwrap();
        gamma_plus_mul(&w, &g).unwrap()
    } else {
        g
    }
}

/// Point `z = x + i y` whose image under an integer matrix with lower row
/// `(c, d)` stays well inside the upper half-plane: `|c z + d|^2 = u^2 + s^2`
/// with `y = s / |c|`.
pub fn point_pair_for(rng: &mut impl Rng, c: &BigInt, d: &BigInt) -> (BigRational, BigRational) {
    let u = rat(rng.gen_range(-500..=500), 1000);
    let s = rat(rng.gen_range(600..=1400), 1000);
    if c.is_zero() {
        let x = rat(rng.gen_range(-1000..=1000), 1000);
        return (x, s);
    }
    let cq = BigRational::from_integer(c.clone());
    let dq = BigRational::from_integer(d.clone());
    let abs_c = BigRational::from_integer(c.abs());
    let x = -dq / &cq + u / &abs_c;
    let y = s / abs_c;
    (x, y)
}

pub fn hp_point(hp: &mut Hp, x: &BigRational, y: &BigRational) -> HPComplex {
    let re = hp.rational(x);
    let im = hp.rational(y);
    hp.complex(re, im)
}
