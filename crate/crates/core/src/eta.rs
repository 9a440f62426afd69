//! High-precision `log eta`, `log eta_p`, and residual checks of the eta and
//! `eta_p` transformation laws.
//!
//! `log eta(z) = pi i z / 12 + sum_n Log(1 - q^n)` with `q = e^{2 pi i z}` is
//! the holomorphic branch whose exponential is `eta`. The sum of principal
//! logarithms is evaluated through the Lambert series
//! `sum_n Log(1 - q^n) = -sum_m q^m / (m (1 - q^m))`, which needs no logarithms
//! and agrees term-for-term with the principal branch since `|q^n| < 1`.
//!
//! `log eta_p(z)` is the additive branch `(log eta(z) + log eta(p z)) / 2`.

use astro_float::BigFloat;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::dedekind::rademacher_phi;
use crate::error::{Error, Result};
use crate::fricke::{FrickeBody, FrickeElement};
use crate::fricke_symbol::{k_of_p, phi_p};
use crate::hp::{HPComplex, Hp, GUARD_DIGITS};
use crate::matrix::{Sign, UnimodularMatrix};

/// Evaluation limits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtaOptions {
    /// Smallest accepted `Im z` for any series evaluation.
    pub y_min: f64,
}

impl Default for EtaOptions {
    fn default() -> Self {
        EtaOptions { y_min: 1e-3 }
    }
}

/// Outcome of checking one transformation identity at one point.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub lhs: HPComplex,
    pub rhs: HPComplex,
    /// `|lhs - rhs|` at the working precision.
    pub residual: BigFloat,
    /// Largest series length used by any `log eta` evaluation in the check.
    pub truncation_terms: usize,
    /// Working precision in decimal digits.
    pub precision: usize,
    pub residual_log10: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportJson {
    pub lhs: String,
    pub rhs: String,
    pub residual: String,
    pub residual_log10: f64,
    pub truncation_terms: usize,
    pub precision: usize,
}

impl VerificationReport {
    /// `residual < 10^-digits`.
    pub fn passes(&self, digits: u32) -> bool {
        self.residual_log10 < -(digits as f64)
    }

    pub fn passes_tolerance(&self, tolerance: &BigFloat) -> bool {
        matches!(self.residual.cmp(tolerance), Some(c) if c < 0)
    }

    pub fn to_json(&self) -> Result<ReportJson> {
        let mut hp = Hp::new(self.precision)?;
        Ok(ReportJson {
            lhs: hp.format_complex(&self.lhs),
            rhs: hp.format_complex(&self.rhs),
            residual: hp.format(&self.residual),
            residual_log10: self.residual_log10,
            truncation_terms: self.truncation_terms,
            precision: self.precision,
        })
    }
}

/// Comparison of the additive `eta_p` branch with `exp(Log(Delta_p) / 2k)`.
#[derive(Debug, Clone)]
pub struct BranchComparison {
    pub k: u64,
    /// `j` with `eta_p(additive) / eta_p(principal) = exp(pi i j / k)`.
    pub root_index: i64,
    /// Distance of the log-ratio from `pi i j / k`.
    pub residual_log10: f64,
}

/// Evaluator bound to one working precision.
#[derive(Debug)]
pub struct EtaEngine {
    hp: Hp,
    opts: EtaOptions,
    max_terms: usize,
}

impl EtaEngine {
    pub fn new(precision: usize) -> Result<Self> {
        Self::with_options(precision, EtaOptions::default())
    }

    pub fn with_options(precision: usize, opts: EtaOptions) -> Result<Self> {
        Ok(EtaEngine {
            hp: Hp::new(precision)?,
            opts,
            max_terms: 0,
        })
    }

    pub fn hp(&mut self) -> &mut Hp {
        &mut self.hp
    }

    pub fn precision(&self) -> usize {
        self.hp.digits()
    }

    /// Number of Lambert terms `N` with `|q|^{N+1} / (1 - |q|)^2 < 10^{-(P+10)}`.
    pub fn truncation_terms(&mut self, im: &BigFloat) -> usize {
        let y = self.hp.to_f64(im);
        terms_for(y, self.hp.digits())
    }

    fn check_domain(&mut self, z: &HPComplex) -> Result<usize> {
        let y = self.hp.to_f64(&z.im);
        let n = terms_for(y, self.hp.digits());
        if y.is_nan() || y < self.opts.y_min {
            return Err(Error::ImaginaryPartTooSmall {
                imag: format!("{y:e}"),
                threshold: format!("{:e}", self.opts.y_min),
                terms: if y > 0.0 { n.to_string() } else { "infinitely many".into() },
            });
        }
        Ok(n)
    }

    /// `q = e^{2 pi i z}`.
    pub fn nome(&mut self, z: &HPComplex) -> HPComplex {
        let pi = self.hp.pi();
        let two_pi = self.hp.mul(&pi, &self.hp.int(2));
        let w = HPComplex {
            re: self.hp.mul(&two_pi, &z.im).neg(),
            im: self.hp.mul(&two_pi, &z.re),
        };
        self.hp.c_exp(&w)
    }

    /// `pi i z / 12`.
    fn leading_term(&mut self, z: &HPComplex) -> HPComplex {
        let pi = self.hp.pi();
        let pi12 = self.hp.div(&pi, &self.hp.int(12));
        HPComplex {
            re: self.hp.mul(&pi12, &z.im).neg(),
            im: self.hp.mul(&pi12, &z.re),
        }
    }

    pub fn log_eta(&mut self, z: &HPComplex) -> Result<HPComplex> {
        let n = self.check_domain(z)?;
        self.max_terms = self.max_terms.max(n);
        Ok(self.log_eta_terms(z, n))
    }

    /// `log eta` truncated after exactly `terms` Lambert terms.
    pub fn log_eta_terms(&mut self, z: &HPComplex, terms: usize) -> HPComplex {
        let q = self.nome(z);
        let one = self.hp.c_int(1, 0);
        let mut qm = q.clone();
        let mut sum = self.hp.c_int(0, 0);
        for m in 1..=terms {
            let denom = self.hp.c_sub(&one, &qm);
            let mut term = self.hp.c_div(&qm, &denom);
            if m > 1 {
                let inv_m = self.hp.div(&self.hp.int(1), &self.hp.int(m as i64));
                term = self.hp.c_scale(&term, &inv_m);
            }
            sum = self.hp.c_add(&sum, &term);
            qm = self.hp.c_mul(&qm, &q);
        }
        let lead = self.leading_term(z);
        self.hp.c_sub(&lead, &sum)
    }

    /// `eta(z)` through the product `q^{1/24} prod (1 - q^n)`.
    pub fn eta_product(&mut self, z: &HPComplex) -> Result<HPComplex> {
        let n = self.check_domain(z)?;
        let q = self.nome(z);
        let one = self.hp.c_int(1, 0);
        let mut qn = q.clone();
        let lead = self.leading_term(z);
        let mut prod = self.hp.c_exp(&lead);
        for _ in 1..=n {
            prod = self.hp.c_mul(&prod, &self.hp.c_sub(&one, &qn));
            qn = self.hp.c_mul(&qn, &q);
        }
        Ok(prod)
    }

    fn scale_int(&mut self, z: &HPComplex, p: u64) -> HPComplex {
        let s = self.hp.int(p as i64);
        self.hp.c_scale(z, &s)
    }

    /// `(log eta(z) + log eta(p z)) / 2`.
    pub fn log_eta_p(&mut self, p: u64, z: &HPComplex) -> Result<HPComplex> {
        let pz = self.scale_int(z, p);
        let a = self.log_eta(z)?;
        let b = self.log_eta(&pz)?;
        let half = self.hp.div(&self.hp.int(1), &self.hp.int(2));
        Ok(self.hp.c_scale(&self.hp.c_add(&a, &b), &half))
    }

    /// `Delta_p(z) = eta(z)^k eta(p z)^k` from the product formula.
    pub fn delta_p(&mut self, p: u64, z: &HPComplex) -> Result<HPComplex> {
        let k = k_of_p(p)?;
        let pz = self.scale_int(z, p);
        let e1 = self.eta_product(z)?;
        let e2 = self.eta_product(&pz)?;
        let base = self.hp.c_mul(&e1, &e2);
        let mut out = self.hp.c_int(1, 0);
        for _ in 0..k {
            out = self.hp.c_mul(&out, &base);
        }
        Ok(out)
    }

    /// `exp(2k log eta_p(z))` against the product `Delta_p(z)`.
    pub fn verify_delta_p(&mut self, p: u64, z: &HPComplex) -> Result<VerificationReport> {
        self.max_terms = 0;
        let k = k_of_p(p)?;
        let l = self.log_eta_p(p, z)?;
        let two_k = self.hp.int(2 * k as i64);
        let lhs = self.hp.c_exp(&self.hp.c_scale(&l, &two_k));
        let rhs = self.delta_p(p, z)?;
        Ok(self.report(lhs, rhs))
    }

    /// Where the additive branch and `exp(Log(Delta_p)/2k)` differ by a root of unity.
    pub fn compare_branches(&mut self, p: u64, z: &HPComplex) -> Result<BranchComparison> {
        let k = k_of_p(p)?;
        let additive = self.log_eta_p(p, z)?;
        let delta = self.delta_p(p, z)?;
        let principal_log = self.hp.c_log(&delta);
        let inv_2k = self.hp.div(&self.hp.int(1), &self.hp.int(2 * k as i64));
        let principal = self.hp.c_scale(&principal_log, &inv_2k);
        let diff = self.hp.c_sub(&additive, &principal);
        // diff = pi i j / k
        let pi = self.hp.pi();
        let scaled = self.hp.div(&self.hp.mul(&diff.im, &self.hp.int(k as i64)), &pi);
        let j = self.hp.to_f64(&scaled).round() as i64;
        let target = self.hp.i_pi_times(&BigRational::new(j.into(), k.into()));
        let off = self.hp.c_abs(&self.hp.c_sub(&diff, &target));
        Ok(BranchComparison {
            k,
            root_index: j,
            residual_log10: self.hp.log10_abs(&off),
        })
    }

    /// `(m0 z + m1) / (m2 z + m3)` for an integer matrix.
    pub fn mobius(&mut self, m: &[BigInt; 4], z: &HPComplex) -> HPComplex {
        let [a, b, c, d] = m.clone().map(|v| self.hp.big_int(&v));
        let num = HPComplex {
            re: self.hp.add(&self.hp.mul(&a, &z.re), &b),
            im: self.hp.mul(&a, &z.im),
        };
        let den = HPComplex {
            re: self.hp.add(&self.hp.mul(&c, &z.re), &d),
            im: self.hp.mul(&c, &z.im),
        };
        self.hp.c_div(&num, &den)
    }

    /// `1/2 Log(w / (i s))` for `s = +-1`.
    fn half_log_over_i(&mut self, w: &HPComplex, s: Sign) -> HPComplex {
        // w / i = -i w, w / (-i) = i w
        let u = match s {
            Sign::Positive => HPComplex {
                re: w.im.clone(),
                im: w.re.neg(),
            },
            _ => self.hp.c_times_i(w),
        };
        let l = self.hp.c_log(&u);
        let half = self.hp.div(&self.hp.int(1), &self.hp.int(2));
        self.hp.c_scale(&l, &half)
    }

    fn report(&mut self, lhs: HPComplex, rhs: HPComplex) -> VerificationReport {
        let residual = self.hp.c_abs(&self.hp.c_sub(&lhs, &rhs));
        let residual_log10 = self.hp.log10_abs(&residual);
        VerificationReport {
            lhs,
            rhs,
            residual,
            truncation_terms: self.max_terms,
            precision: self.hp.digits(),
            residual_log10,
        }
    }

    /// `log eta(gz)` against
    /// `log eta(z) + 1/2 sgn(c)^2 Log((cz + d)/(i sgn c)) + (pi i / 12) Phi(g)`.
    pub fn verify_eta_transform(
        &mut self,
        g: &UnimodularMatrix,
        z: &HPComplex,
    ) -> Result<VerificationReport> {
        self.max_terms = 0;
        let m = g.clone().into_entries();
        let gz = self.mobius(&m, z);
        let lhs = self.log_eta(&gz)?;
        let mut rhs = self.log_eta(z)?;
        let s = Sign::of(g.c());
        if !s.is_zero() {
            let c = self.hp.big_int(g.c());
            let d = self.hp.big_int(g.d());
            let w = HPComplex {
                re: self.hp.add(&self.hp.mul(&c, &z.re), &d),
                im: self.hp.mul(&c, &z.im),
            };
            let branch = self.half_log_over_i(&w, s);
            rhs = self.hp.c_add(&rhs, &branch);
        }
        let phi = BigRational::new(rademacher_phi(g), BigInt::from(12));
        let shift = self.hp.i_pi_times(&phi);
        rhs = self.hp.c_add(&rhs, &shift);
        Ok(self.report(lhs, rhs))
    }

    /// `log eta_p(gz)` against
    /// `log eta_p(z) + 1/2 sgn(c)^2 Log((cz + d)/(i sgn c)) + (pi i / 12) Phi_p(g)`,
    /// where a coset element has real entries
    /// `(a, b, c, d) = (sqrt p alpha, beta / sqrt p, sqrt p gamma, sqrt p delta)`.
    pub fn verify_theorem1(&mut self, e: &FrickeElement, z: &HPComplex) -> Result<VerificationReport> {
        self.max_terms = 0;
        let p = e.p();
        let m = e.integer_matrix();
        let gz = self.mobius(&m, z);
        let lhs = self.log_eta_p(p, &gz)?;
        let mut rhs = self.log_eta_p(p, z)?;
        let (c_int, d_int, scale) = match e.body() {
            FrickeBody::Gamma0(g) => (g.c().clone(), g.d().clone(), None),
            FrickeBody::Coset { gamma, delta, .. } => {
                let sqrt_p = self.hp.sqrt(&self.hp.int(p as i64));
                (gamma.clone(), delta.clone(), Some(sqrt_p))
            }
        };
        let s = Sign::of(&c_int);
        if !s.is_zero() {
            let c = self.hp.big_int(&c_int);
            let d = self.hp.big_int(&d_int);
            let mut w = HPComplex {
                re: self.hp.add(&self.hp.mul(&c, &z.re), &d),
                im: self.hp.mul(&c, &z.im),
            };
            if let Some(sqrt_p) = scale {
                w = self.hp.c_scale(&w, &sqrt_p);
            }
            let branch = self.half_log_over_i(&w, s);
            rhs = self.hp.c_add(&rhs, &branch);
        }
        let symbol = phi_p(e) / BigRational::from_integer(BigInt::from(12));
        let shift = self.hp.i_pi_times(&symbol);
        rhs = self.hp.c_add(&rhs, &shift);
        Ok(self.report(lhs, rhs))
    }
}

fn terms_for(y: f64, digits: usize) -> usize {
    if y.is_nan() || y <= 0.0 {
        return usize::MAX;
    }
    let two_pi_y = 2.0 * std::f64::consts::PI * y;
    let abs_q = (-two_pi_y).exp();
    let target = (digits + GUARD_DIGITS) as f64 * std::f64::consts::LN_10;
    // (N + 1) * 2 pi y > target - 2 ln(1 - |q|)
    let need = (target - 2.0 * (-abs_q).ln_1p()) / two_pi_y;
    let n = need.ceil() as usize;
    n.max(1)
}

/// `log eta(z)` at `precision` decimal digits.
pub fn log_eta(z: &HPComplex, precision: usize) -> Result<HPComplex> {
    EtaEngine::new(precision)?.log_eta(z)
}

/// `log eta_p(z)` at `precision` decimal digits.
pub fn log_eta_p(p: u64, z: &HPComplex, precision: usize) -> Result<HPComplex> {
    EtaEngine::new(precision)?.log_eta_p(p, z)
}

pub fn verify_eta_transform(
    g: &UnimodularMatrix,
    z: &HPComplex,
    precision: usize,
) -> Result<VerificationReport> {
    EtaEngine::new(precision)?.verify_eta_transform(g, z)
}

pub fn verify_theorem1(e: &FrickeElement, z: &HPComplex, precision: usize) -> Result<VerificationReport> {
    EtaEngine::new(precision)?.verify_theorem1(e, z)
}
