//! Arbitrary-precision real and complex arithmetic on top of `astro-float`.
//!
//! Precision is requested in decimal digits `P`; every operation runs with
//! `P + 10` digits plus one extra machine word.

use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Smallest accepted working precision, in decimal digits.
pub const MIN_PRECISION: usize = 30;

/// Guard digits carried by every intermediate result.
pub const GUARD_DIGITS: usize = 10;

const RM: RoundingMode = RoundingMode::ToEven;
const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Working context: precision bookkeeping and the constants cache.
pub struct Hp {
    digits: usize,
    bits: usize,
    cc: Consts,
}

impl fmt::Debug for Hp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hp")
            .field("digits", &self.digits)
            .field("bits", &self.bits)
            .finish()
    }
}

/// A complex number with both parts at the same working precision.
#[derive(Debug, Clone)]
pub struct HPComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl Hp {
    pub fn new(digits: usize) -> Result<Self> {
        if digits < MIN_PRECISION {
            return Err(Error::PrecisionTooLow {
                min: MIN_PRECISION,
                found: digits,
            });
        }
        let bits = ((digits + GUARD_DIGITS) as f64 * LOG2_10).ceil() as usize + 64;
        let cc = Consts::new().map_err(|e| Error::Numeric(format!("{e:?}")))?;
        Ok(Hp { digits, bits, cc })
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn int(&self, v: i64) -> BigFloat {
        BigFloat::from_i64(v, self.bits)
    }

    pub fn big_int(&mut self, v: &BigInt) -> BigFloat {
        match i64::try_from(v) {
            Ok(small) => self.int(small),
            Err(_) => self.parse_unchecked(&v.to_string()),
        }
    }

    pub fn rational(&mut self, v: &BigRational) -> BigFloat {
        let n = self.big_int(v.numer());
        let d = self.big_int(v.denom());
        self.div(&n, &d)
    }

    fn parse_unchecked(&mut self, s: &str) -> BigFloat {
        BigFloat::parse(s, Radix::Dec, self.bits, RM, &mut self.cc)
    }

    /// Parses a decimal literal such as `-1.25e-3`.
    pub fn parse(&mut self, s: &str) -> Result<BigFloat> {
        let t = s.trim();
        let ok = !t.is_empty()
            && t
                .bytes()
                .all(|b| b.is_ascii_digit() || matches!(b, b'+' | b'-' | b'.' | b'e' | b'E'));
        let v = if ok { self.parse_unchecked(t) } else { BigFloat::nan(None) };
        if v.is_nan() || v.is_inf() {
            return Err(Error::Parse {
                what: "decimal number",
                input: s.to_string(),
            });
        }
        Ok(v)
    }

    /// Parses the complex form `re,im`.
    pub fn parse_complex(&mut self, s: &str) -> Result<HPComplex> {
        let (re, im) = s.split_once(',').ok_or_else(|| Error::Parse {
            what: "complex number re,im",
            input: s.to_string(),
        })?;
        Ok(HPComplex {
            re: self.parse(re)?,
            im: self.parse(im)?,
        })
    }

    pub fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.bits, RM)
    }

    pub fn add(&self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        x.add(y, self.bits, RM)
    }

    pub fn sub(&self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        x.sub(y, self.bits, RM)
    }

    pub fn mul(&self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        x.mul(y, self.bits, RM)
    }

    pub fn div(&self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        x.div(y, self.bits, RM)
    }

    pub fn sqrt(&self, x: &BigFloat) -> BigFloat {
        x.sqrt(self.bits, RM)
    }

    pub fn ln(&mut self, x: &BigFloat) -> BigFloat {
        x.ln(self.bits, RM, &mut self.cc)
    }

    pub fn exp(&mut self, x: &BigFloat) -> BigFloat {
        x.exp(self.bits, RM, &mut self.cc)
    }

    /// `10^-e`.
    pub fn pow10_neg(&self, e: u32) -> BigFloat {
        let ten = self.int(10);
        ten.powi(e as usize, self.bits, RM).reciprocal(self.bits, RM)
    }

    /// Principal argument in `(-pi, pi]`.
    pub fn atan2(&mut self, y: &BigFloat, x: &BigFloat) -> BigFloat {
        let pi = self.pi();
        if x.is_zero() {
            let half_pi = self.div(&pi, &self.int(2));
            return if y.is_negative() {
                half_pi.neg()
            } else if y.is_zero() {
                self.int(0)
            } else {
                half_pi
            };
        }
        let ratio = self.div(y, x);
        let base = ratio.atan(self.bits, RM, &mut self.cc);
        if x.is_positive() {
            base
        } else if y.is_negative() {
            self.sub(&base, &pi)
        } else {
            self.add(&base, &pi)
        }
    }

    pub fn complex(&self, re: BigFloat, im: BigFloat) -> HPComplex {
        HPComplex { re, im }
    }

    pub fn c_int(&self, re: i64, im: i64) -> HPComplex {
        HPComplex {
            re: self.int(re),
            im: self.int(im),
        }
    }

    pub fn c_add(&self, x: &HPComplex, y: &HPComplex) -> HPComplex {
        HPComplex {
            re: self.add(&x.re, &y.re),
            im: self.add(&x.im, &y.im),
        }
    }

    pub fn c_sub(&self, x: &HPComplex, y: &HPComplex) -> HPComplex {
        HPComplex {
            re: self.sub(&x.re, &y.re),
            im: self.sub(&x.im, &y.im),
        }
    }

    pub fn c_mul(&self, x: &HPComplex, y: &HPComplex) -> HPComplex {
        HPComplex {
            re: self.sub(&self.mul(&x.re, &y.re), &self.mul(&x.im, &y.im)),
            im: self.add(&self.mul(&x.re, &y.im), &self.mul(&x.im, &y.re)),
        }
    }

    pub fn c_scale(&self, x: &HPComplex, s: &BigFloat) -> HPComplex {
        HPComplex {
            re: self.mul(&x.re, s),
            im: self.mul(&x.im, s),
        }
    }

    pub fn c_div(&self, x: &HPComplex, y: &HPComplex) -> HPComplex {
        let norm = self.add(&self.mul(&y.re, &y.re), &self.mul(&y.im, &y.im));
        let inv = norm.reciprocal(self.bits, RM);
        let re = self.add(&self.mul(&x.re, &y.re), &self.mul(&x.im, &y.im));
        let im = self.sub(&self.mul(&x.im, &y.re), &self.mul(&x.re, &y.im));
        HPComplex {
            re: self.mul(&re, &inv),
            im: self.mul(&im, &inv),
        }
    }

    pub fn c_abs(&self, x: &HPComplex) -> BigFloat {
        self.sqrt(&self.add(&self.mul(&x.re, &x.re), &self.mul(&x.im, &x.im)))
    }

    /// Principal logarithm, `ln|w| + i arg w` with `arg w` in `(-pi, pi]`.
    pub fn c_log(&mut self, w: &HPComplex) -> HPComplex {
        let norm = self.add(&self.mul(&w.re, &w.re), &self.mul(&w.im, &w.im));
        let half = self.div(&self.int(1), &self.int(2));
        let ln_norm = self.ln(&norm);
        let re = self.mul(&ln_norm, &half);
        let im = self.atan2(&w.im, &w.re);
        HPComplex { re, im }
    }

    pub fn c_exp(&mut self, w: &HPComplex) -> HPComplex {
        let r = self.exp(&w.re);
        let cos = w.im.cos(self.bits, RM, &mut self.cc);
        let sin = w.im.sin(self.bits, RM, &mut self.cc);
        HPComplex {
            re: self.mul(&r, &cos),
            im: self.mul(&r, &sin),
        }
    }

    /// `x * i`.
    pub fn c_times_i(&self, x: &HPComplex) -> HPComplex {
        HPComplex {
            re: x.im.neg(),
            im: x.re.clone(),
        }
    }

    /// `i * pi * r` for a rational `r`.
    pub fn i_pi_times(&mut self, r: &BigRational) -> HPComplex {
        let pi = self.pi();
        let v = self.rational(r);
        HPComplex {
            re: self.int(0),
            im: self.mul(&pi, &v),
        }
    }

    /// Approximate value, for sizing loops and reporting magnitudes.
    pub fn to_f64(&mut self, x: &BigFloat) -> f64 {
        let mut short = x.clone();
        if short.set_precision(64, RM).is_err() {
            return f64::NAN;
        }
        match short.format(Radix::Dec, RM, &mut self.cc) {
            Ok(s) => s.parse().unwrap_or(f64::NAN),
            Err(_) => f64::NAN,
        }
    }

    /// `log10 |x|`, or negative infinity for zero.
    pub fn log10_abs(&mut self, x: &BigFloat) -> f64 {
        if x.is_zero() {
            return f64::NEG_INFINITY;
        }
        let l = x.abs().log10(128, RM, &mut self.cc);
        self.to_f64(&l)
    }

    /// Decimal string rounded to `P` significant digits, e.g. `-1.2345e-3`.
    pub fn format(&mut self, x: &BigFloat) -> String {
        format_sig(x, self.digits, &mut self.cc)
    }

    pub fn format_complex(&mut self, z: &HPComplex) -> String {
        format!("{},{}", self.format(&z.re), self.format(&z.im))
    }
}

fn format_sig(x: &BigFloat, digits: usize, cc: &mut Consts) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let raw = match x.format(Radix::Dec, RM, cc) {
        Ok(s) => s,
        Err(_) => return "NaN".to_string(),
    };
    // raw looks like "-1.234...e-5"
    let (neg, body) = match raw.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, raw.as_str()),
    };
    let (mant, exp) = body.split_once('e').unwrap_or((body, "0"));
    let mut exp: i64 = exp.trim_start_matches('+').parse().unwrap_or(0);
    let (int_part, frac_part) = mant.split_once('.').unwrap_or((mant, ""));
    let mut ds: Vec<u8> = int_part
        .bytes()
        .chain(frac_part.bytes())
        .map(|b| b - b'0')
        .collect();
    exp += int_part.len() as i64 - 1;
    // drop leading zeros
    while ds.len() > 1 && ds[0] == 0 {
        ds.remove(0);
        exp -= 1;
    }
    if ds.len() > digits {
        let round_up = ds[digits] >= 5;
        ds.truncate(digits);
        if round_up {
            let mut i = digits;
            loop {
                if i == 0 {
                    ds.insert(0, 1);
                    ds.truncate(digits);
                    exp += 1;
                    break;
                }
                i -= 1;
                if ds[i] == 9 {
                    ds[i] = 0;
                } else {
                    ds[i] += 1;
                    break;
                }
            }
        }
    }
    while ds.len() > 1 && *ds.last().expect("nonempty") == 0 {
        ds.pop();
    }
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push((b'0' + ds[0]) as char);
    if ds.len() > 1 {
        out.push('.');
        out.extend(ds[1..].iter().map(|d| (b'0' + d) as char));
    }
    if exp != 0 {
        out.push_str(&format!("e{exp}"));
    }
    out
}
