mod common;

use common::{hp_point, m, point_pair_for, random_element, random_nonzero_word, rat, rng};
use rademacher::eta::EtaOptions;
use rademacher::fricke::{FrickeBody, FrickeElement};
use rademacher::{reconstruct, EtaEngine, UnimodularMatrix};
use rand::Rng;

/// `log eta(i) = log(Gamma(1/4) / (2 pi^{3/4}))`, from the closed form.
const LOG_ETA_I: &str = "-0.26367207024891798265419219475325330588559367893387838225591029056353568670761544";

fn lower_row(e: &FrickeElement) -> (num_bigint::BigInt, num_bigint::BigInt) {
    match e.body() {
        FrickeBody::Gamma0(g) => (g.c().clone(), g.d().clone()),
        FrickeBody::Coset { gamma, delta, .. } => (gamma.clone(), delta.clone()),
    }
}

#[test]
fn log_eta_at_i_matches_the_closed_form() {
    let mut eng = EtaEngine::new(70).unwrap();
    let z = eng.hp().c_int(0, 1);
    let v = eng.log_eta(&z).unwrap();
    let expect = eng.hp().parse(LOG_ETA_I).unwrap();
    let err = eng.hp().sub(&v.re, &expect);
    assert!(eng.hp().log10_abs(&err) < -75.0);
    assert!(eng.hp().log10_abs(&v.im) < -75.0);
}

#[test]
fn doubling_the_series_stays_below_the_tail_bound() {
    let mut r = rng(21);
    for digits in [40usize, 80] {
        let mut eng = EtaEngine::new(digits).unwrap();
        for _ in 0..6 {
            let (x, y) = (rat(r.gen_range(-900..900), 1000), rat(r.gen_range(20..1500), 1000));
            let z = hp_point(eng.hp(), &x, &y);
            let n = eng.truncation_terms(&z.im);
            let a = eng.log_eta_terms(&z, n);
            let b = eng.log_eta_terms(&z, 2 * n);
            let diff = eng.hp().c_sub(&a, &b);
            let d = eng.hp().c_abs(&diff);
            // tail bound 10^-(P+10), plus rounding of the longer sum
            assert!(eng.hp().log10_abs(&d) < -(digits as f64) - 8.0, "z = {x} + {y} i");
        }
    }
}

#[test]
fn classical_law_on_random_words() {
    let mut r = rng(22);
    let mut eng = EtaEngine::new(50).unwrap();
    for _ in 0..40 {
        let g = reconstruct(&common::edge_word(&random_nonzero_word(&mut r, 0..=5, 3)));
        let g = if r.gen_bool(0.5) { -g } else { g };
        let (x, y) = point_pair_for(&mut r, g.c(), g.d());
        let z = hp_point(eng.hp(), &x, &y);
        let rep = eng.verify_eta_transform(&g, &z).unwrap();
        assert!(rep.passes(35), "{g} at {x} + {y} i: {}", rep.residual_log10);
    }
}

#[test]
fn theorem_examples() {
    // T at a random point, p = 5
    let mut eng = EtaEngine::new(100).unwrap();
    let t = FrickeElement::gamma0(5, UnimodularMatrix::t()).unwrap();
    let z = hp_point(eng.hp(), &rat(-3, 7), &rat(2, 3));
    assert!(eng.verify_theorem1(&t, &z).unwrap().passes(85));

    // W_5 at its fixed point i / sqrt 5
    let w = FrickeElement::fricke_involution(5).unwrap();
    let five = eng.hp().int(5);
    let root = eng.hp().sqrt(&five);
    let one = eng.hp().int(1);
    let im = eng.hp().div(&one, &root);
    let zero = eng.hp().int(0);
    let z = eng.hp().complex(zero, im);
    assert!(eng.verify_theorem1(&w, &z).unwrap().passes(85));

    // p = 7, a generic element with c != 0, z = 1/5 + i, P = 120
    let mut eng = EtaEngine::new(120).unwrap();
    let g = FrickeElement::gamma0(7, m(2, 1, 7, 4)).unwrap();
    let z = hp_point(eng.hp(), &rat(1, 5), &rat(1, 1));
    let rep = eng.verify_theorem1(&g, &z).unwrap();
    assert!(rep.passes(100), "{}", rep.residual_log10);
}

#[test]
fn theorem_on_both_cosets() {
    let mut r = rng(23);
    let mut eng = EtaEngine::new(40).unwrap();
    for p in [3u64, 5, 7, 11, 13] {
        for i in 0..8 {
            let e = random_element(&mut r, p, i % 2 == 1, 2, 12);
            let (c, d) = lower_row(&e);
            let (x, y) = point_pair_for(&mut r, &c, &d);
            let z = hp_point(eng.hp(), &x, &y);
            let rep = eng.verify_theorem1(&e, &z).unwrap();
            assert!(rep.passes(25), "{e} at {x} + {y} i: {}", rep.residual_log10);
        }
    }
}

#[test]
fn residuals_shrink_with_precision() {
    let mut r = rng(24);
    let cases: Vec<(UnimodularMatrix, _)> = (0..4)
        .map(|_| {
            let g = reconstruct(&common::edge_word(&random_nonzero_word(&mut r, 1..=4, 3)));
            let pt = point_pair_for(&mut r, g.c(), g.d());
            (g, pt)
        })
        .collect();
    let worst = |digits: usize| {
        let mut eng = EtaEngine::new(digits).unwrap();
        cases
            .iter()
            .map(|(g, (x, y))| {
                let z = hp_point(eng.hp(), x, y);
                eng.verify_eta_transform(g, &z).unwrap().residual_log10
            })
            .fold(f64::NEG_INFINITY, f64::max)
    };
    let (r50, r100, r200) = (worst(50), worst(100), worst(200));
    assert!(r50 < -45.0 && r100 < -95.0 && r200 < -195.0, "{r50} {r100} {r200}");
}

#[test]
fn additive_branch_exponentiates_to_delta_p() {
    let mut eng = EtaEngine::new(60).unwrap();
    for (p, x, y) in [(3u64, rat(1, 3), rat(1, 2)), (5, rat(-2, 7), rat(3, 4)), (13, rat(0, 1), rat(1, 5))] {
        let z = hp_point(eng.hp(), &x, &y);
        let rep = eng.verify_delta_p(p, &z).unwrap();
        assert!(rep.passes(50), "p={p}: {}", rep.residual_log10);
    }
}

#[test]
fn principal_reading_differs_by_a_root_of_unity() {
    let mut eng = EtaEngine::new(50).unwrap();
    for (p, x, y) in [(5u64, rat(0, 1), rat(1, 1)), (5, rat(1, 4), rat(1, 10)), (7, rat(-1, 3), rat(1, 20))] {
        let z = hp_point(eng.hp(), &x, &y);
        let cmp = eng.compare_branches(p, &z).unwrap();
        assert!(cmp.residual_log10 < -40.0, "{}", cmp.residual_log10);
        assert!(cmp.root_index.unsigned_abs() <= 2 * cmp.k);
    }
}

#[test]
fn domain_errors() {
    let mut eng = EtaEngine::with_options(40, EtaOptions { y_min: 0.01 }).unwrap();
    let z = hp_point(eng.hp(), &rat(0, 1), &rat(1, 1000));
    assert_eq!(eng.log_eta(&z).unwrap_err().code(), "imaginary_part_too_small");
    let z = hp_point(eng.hp(), &rat(0, 1), &rat(-1, 1));
    assert_eq!(eng.log_eta(&z).unwrap_err().code(), "imaginary_part_too_small");
    assert_eq!(EtaEngine::new(10).unwrap_err().code(), "precision_too_low");
}
