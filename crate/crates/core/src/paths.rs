//! Words `S (T^{a_1} S) ... (T^{a_k} S)` and based edge paths in the Farey
//! triangulation.
//!
//! A word `(a_1, ..., a_k)` describes a path that starts on the base edge
//! `1/0 -> 0/1` and turns `|a_j|` triangles at each vertex (left for positive
//! `a_j`). The partial product `S (T^{a_1} S) ... (T^{a_j} S) = (a b; c d)`
//! is the directed edge from `b/d` to `a/c`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::{parse_int_list, UnimodularMatrix};

/// A vertex of the triangulation: a reduced fraction `n/d` with `d >= 0`,
/// or `1/0` for the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Farey {
    n: BigInt,
    d: BigInt,
}

impl Farey {
    /// Reduces and moves the sign to the numerator. `0/0` is rejected.
    pub fn new(n: BigInt, d: BigInt) -> Result<Self> {
        if n.is_zero() && d.is_zero() {
            return Err(Error::InvalidFraction("0/0".into()));
        }
        let g = n.gcd(&d);
        let (mut n, mut d) = (n / &g, d / &g);
        if d.is_negative() || (d.is_zero() && n.is_negative()) {
            n = -n;
            d = -d;
        }
        Ok(Farey { n, d })
    }

    pub fn from_i64(n: i64, d: i64) -> Result<Self> {
        Self::new(n.into(), d.into())
    }

    pub fn infinity() -> Self {
        Farey {
            n: BigInt::one(),
            d: BigInt::zero(),
        }
    }

    pub fn zero() -> Self {
        Farey {
            n: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.n
    }

    pub fn denom(&self) -> &BigInt {
        &self.d
    }

    pub fn is_infinite(&self) -> bool {
        self.d.is_zero()
    }

    fn from_vector(v: &(BigInt, BigInt)) -> Self {
        Self::new(v.0.clone(), v.1.clone()).expect("path vertices are primitive vectors")
    }
}

impl fmt::Display for Farey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.n, self.d)
    }
}

impl FromStr for Farey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "fraction n/d",
            input: s.to_string(),
        };
        let (n, d) = s.split_once('/').unwrap_or((s, "1"));
        let n = parse_int_list(n, "fraction n/d")?;
        let d = parse_int_list(d, "fraction n/d")?;
        match (<[BigInt; 1]>::try_from(n), <[BigInt; 1]>::try_from(d)) {
            (Ok([n]), Ok([d])) => Farey::new(n, d),
            _ => Err(err()),
        }
    }
}

fn cross(u: &Farey, v: &Farey) -> BigInt {
    &u.n * &v.d - &v.n * &u.d
}

/// True iff `n_u d_v - n_v d_u = +-1`.
pub fn is_edge(u: &Farey, v: &Farey) -> bool {
    cross(u, v).abs().is_one()
}

/// Turn sequence `(a_1, ..., a_k)`; zero entries are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EdgeWord(Vec<BigInt>);

impl EdgeWord {
    pub fn new(exponents: Vec<BigInt>) -> Self {
        EdgeWord(exponents)
    }

    pub fn from_i64(exponents: &[i64]) -> Self {
        EdgeWord(exponents.iter().map(|&a| BigInt::from(a)).collect())
    }

    pub fn exponents(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_exponents(self) -> Vec<BigInt> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Exponents as machine integers, if they all fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn has_interior_zero(&self) -> bool {
        self.0.len() > 2 && self.0[1..self.0.len() - 1].iter().any(Zero::is_zero)
    }

    pub fn reversed(&self) -> Self {
        EdgeWord(self.0.iter().rev().cloned().collect())
    }
}

/// JSON array form, e.g. `[-2,1,-2]`.
impl fmt::Display for EdgeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

/// Accepts the CLI form `a1,a2,...` and the JSON array form `[a1,a2,...]`.
impl FromStr for EdgeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = match s.strip_prefix('[') {
            Some(rest) => rest.strip_suffix(']').ok_or_else(|| Error::Parse {
                what: "word",
                input: s.to_string(),
            })?,
            None => s,
        };
        Ok(EdgeWord(parse_int_list(inner, "word")?))
    }
}

/// `S (T^{a_1} S) ... (T^{a_k} S)`; the empty word gives `S`.
pub fn reconstruct(w: &EdgeWord) -> UnimodularMatrix {
    w.0.iter().fold(UnimodularMatrix::s(), |acc, a| {
        &acc * &UnimodularMatrix::t_pow_s(a)
    })
}

/// A word whose reconstruction equals `g` up to sign.
///
/// `S^{-1} g` is peeled into factors `T^n S` by floor-quotient Euclidean
/// descent on its first column; a leftover `T^m` is closed as `(T^m S)(T^0 S)`.
/// Zero exponents are then removed with the relations
/// `T^x S T^0 S T^y S = T^{x+y} S` and `S T^-1 S T^-1 S = T` (both up to sign),
/// which leaves a zero only for `g = +-I`, whose word is `(0)`.
pub fn decompose(g: &UnimodularMatrix) -> EdgeWord {
    // S^{-1} = -S, and the sign does not matter
    let c_mat = &UnimodularMatrix::s() * g;
    let [mut a, mut b, mut c, mut d] = c_mat.into_entries();
    let mut out = Vec::new();
    while !c.is_zero() {
        let n = a.div_floor(&c);
        // (a b; c d) <- S^{-1} T^{-n} (a b; c d)
        let na = c.clone();
        let nb = d.clone();
        let nc = -(&a - &n * &c);
        let nd = -(&b - &n * &d);
        out.push(n);
        (a, b, c, d) = (na, nb, nc, nd);
    }
    // (a b; 0 a) with a = +-1 is +-T^{ab}
    debug_assert!(a.abs().is_one() && a == d);
    let m = &a * &b;
    if !m.is_zero() {
        out.push(m);
        out.push(BigInt::zero());
    }
    let w = EdgeWord(simplify(out));
    debug_assert!(crate::matrix::psl_eq(&reconstruct(&w), g));
    w
}

fn simplify(mut w: Vec<BigInt>) -> Vec<BigInt> {
    let one = BigInt::one();
    loop {
        if w.len() == 2 && w[0].is_zero() && w[1].is_zero() {
            w.clear();
            continue;
        }
        if let Some(i) = (1..w.len().saturating_sub(1)).find(|&i| w[i].is_zero()) {
            let merged = &w[i - 1] + &w[i + 1];
            w.splice(i - 1..=i + 1, [merged]);
            continue;
        }
        if w.len() >= 2 && w[0].is_zero() {
            // S (T^0 S) (T^y S) R = (T^y S) R, rewritten with I = S U_{-1} U_{-1} T^{-1}
            // or I = S U_1 U_1 T, whichever keeps the new exponent nonzero.
            let y = w[1].clone();
            let head = if y != one {
                [-&one, -&one, y - 1]
            } else {
                [one.clone(), one.clone(), y + 1]
            };
            w.splice(0..2, head);
            continue;
        }
        let k = w.len();
        if k >= 2 && w[k - 1].is_zero() {
            // R (T^x S)(T^0 S) = R T^x, and T = S U_{-1} U_{-1}, T^{-1} = S U_1 U_1.
            let x = w[k - 2].clone();
            let tail = if x != one {
                [x - 1, -&one, -&one]
            } else {
                [x + 1, one.clone(), one.clone()]
            };
            w.splice(k - 2..k, tail);
            continue;
        }
        return w;
    }
}

/// Vertex vectors `V_0 = (1, 0)`, `V_1 = (0, 1)`, `V_{j+1} = a_j V_j - V_{j-1}`.
///
/// These carry the sign convention of consecutive oriented determinants
/// `n_j d_{j+1} - n_{j+1} d_j = 1`.
pub fn endpoint_vectors(w: &EdgeWord) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::with_capacity(w.len() + 2);
    out.push((BigInt::one(), BigInt::zero()));
    out.push((BigInt::zero(), BigInt::one()));
    for a in &w.0 {
        let k = out.len();
        let (prev, cur) = (&out[k - 2], &out[k - 1]);
        let next = (a * &cur.0 - &prev.0, a * &cur.1 - &prev.1);
        out.push(next);
    }
    out
}

/// The `k + 2` vertices `1/0, 0/1, p_1, ..., p_k` of the based edge path.
pub fn endpoints(w: &EdgeWord) -> Vec<Farey> {
    endpoint_vectors(w).iter().map(Farey::from_vector).collect()
}

/// Recovers the turn integers from a vertex sequence.
///
/// Each vertex is lifted to the integer vector whose oriented determinant with
/// its predecessor is `+1`; then `a_j = n_{j-1} d_{j+1} - n_{j+1} d_{j-1}`
/// on the lifted vectors, which is the signed form of the turn count.
pub fn turns_from_endpoints(pts: &[Farey]) -> Result<EdgeWord> {
    if pts.len() < 2 {
        return Err(Error::TooFewEndpoints(pts.len()));
    }
    if pts[0] != Farey::infinity() || pts[1] != Farey::zero() {
        return Err(Error::WrongBaseEdge);
    }
    let mut lifted: Vec<(BigInt, BigInt)> = vec![
        (BigInt::one(), BigInt::zero()),
        (BigInt::zero(), BigInt::one()),
    ];
    let mut word = Vec::with_capacity(pts.len() - 2);
    for j in 2..pts.len() {
        let prev = &pts[j - 1];
        let next = &pts[j];
        let det = cross(prev, next);
        if !det.abs().is_one() {
            return Err(Error::NotAnEdge {
                left: prev.to_string(),
                right: next.to_string(),
            });
        }
        let cur = &lifted[j - 1];
        // orientation of the lifted predecessor against the canonical next vertex
        let oriented = &cur.0 * &next.d - &next.n * &cur.1;
        let v = if oriented.is_one() {
            (next.n.clone(), next.d.clone())
        } else {
            (-&next.n, -&next.d)
        };
        let back = &lifted[j - 2];
        word.push(&back.0 * &v.1 - &v.0 * &back.1);
        lifted.push(v);
    }
    Ok(EdgeWord(word))
}
