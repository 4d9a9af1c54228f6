//! Exact correlation against a floating-point evaluation of the defining sums.

use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;
use zcs_core::{aacf, accf, cyclotomic_polynomial, CycloValue, QarySequence};

fn root(q: u32, e: i64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * e as f64 / q as f64)
}

/// Direct complex evaluation of both branches of the aperiodic sum.
fn accf_float(c: &[u32], d: &[u32], q: u32, u: isize) -> Complex64 {
    let l = c.len() as isize;
    let mut acc = Complex64::new(0.0, 0.0);
    if u >= 0 {
        for i in 0..(l - u) {
            acc += root(q, c[(i + u) as usize] as i64) * root(q, d[i as usize] as i64).conj();
        }
    } else {
        for i in 0..(l + u) {
            acc += root(q, c[i as usize] as i64) * root(q, d[(i - u) as usize] as i64).conj();
        }
    }
    acc
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn poly_eval(p: &[i64], x: Complex64) -> Complex64 {
    p.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c as f64)
}

#[test]
fn cyclotomic_roots_and_degree() {
    for q in 1..=40u32 {
        let phi = cyclotomic_polynomial(q).unwrap();
        let totient = (1..=q).filter(|&j| gcd(j, q) == 1).count();
        assert_eq!(phi.len() - 1, totient, "degree of Φ_{q}");
        assert_eq!(*phi.last().unwrap(), 1);
        for j in 0..q {
            let value = poly_eval(&phi, root(q, j as i64)).norm();
            if gcd(j, q) == 1 {
                assert!(value < 1e-6, "Φ_{q} at primitive root {j}: {value}");
            } else {
                assert!(value > 1e-6, "Φ_{q} vanishes at non-primitive root {j}");
            }
        }
    }
}

fn sequence_pair() -> impl Strategy<Value = (u32, Vec<u32>, Vec<u32>)> {
    (2u32..=12, 1usize..=12).prop_flat_map(|(q, l)| {
        (
            Just(q),
            prop::collection::vec(0..q, l),
            prop::collection::vec(0..q, l),
        )
    })
}

/// Zero elements built from full cosets of d-th roots of unity, plus noise.
fn cyclo_value() -> impl Strategy<Value = CycloValue> {
    (2u32..=24).prop_flat_map(|q| {
        let divisors: Vec<u32> = (2..=q).filter(|d| q % d == 0).collect();
        (
            Just(q),
            prop::collection::vec((prop::sample::select(divisors), 0..q, -3i64..=3), 0..4),
            prop::collection::vec(-2i64..=2, q as usize),
            any::<bool>(),
        )
            .prop_map(|(q, cosets, noise, add_noise)| {
                let mut coeffs = vec![0i64; q as usize];
                for (d, start, mult) in cosets {
                    let step = q / d;
                    for i in 0..d {
                        coeffs[((start + i * step) % q) as usize] += mult;
                    }
                }
                if add_noise {
                    for (c, n) in coeffs.iter_mut().zip(noise) {
                        *c += n;
                    }
                }
                CycloValue::from_coeffs(q, coeffs).unwrap()
            })
    })
}

proptest! {
    #[test]
    fn accf_matches_float_sum((q, c, d) in sequence_pair(), shift in any::<prop::sample::Index>()) {
        let l = c.len();
        let u = shift.index(2 * l - 1) as isize - (l as isize - 1);
        let cs = QarySequence::new(q, c.clone()).unwrap();
        let ds = QarySequence::new(q, d.clone()).unwrap();
        let exact = accf(&cs, &ds, u).unwrap();
        let float = accf_float(&c, &d, q, u);
        prop_assert!((exact.complex_estimate() - float).norm() < 1e-9);
        prop_assert_eq!(exact.coefficient_sum(), (l - u.unsigned_abs()) as i64);
    }

    #[test]
    fn conjugate_symmetry((q, c, d) in sequence_pair(), shift in any::<prop::sample::Index>()) {
        let l = c.len();
        let u = shift.index(l) as isize;
        let cs = QarySequence::new(q, c).unwrap();
        let ds = QarySequence::new(q, d).unwrap();
        prop_assert_eq!(accf(&cs, &ds, -u).unwrap(), accf(&ds, &cs, u).unwrap().conj());
    }

    #[test]
    fn energy_is_length((q, c, _d) in sequence_pair()) {
        let cs = QarySequence::new(q, c.clone()).unwrap();
        prop_assert_eq!(aacf(&cs, 0).unwrap(), CycloValue::monomial(q, 0, c.len() as i64));
    }

    #[test]
    fn exact_zero_agrees_with_magnitude(v in cyclo_value()) {
        let magnitude = v.complex_estimate().norm();
        prop_assert_eq!(v.is_zero(), magnitude < 1e-9, "value {} has magnitude {}", v, magnitude);
    }

    #[test]
    fn correlation_zero_agrees_with_magnitude((q, c, d) in sequence_pair()) {
        let cs = QarySequence::new(q, c).unwrap();
        let ds = QarySequence::new(q, d).unwrap();
        let v = accf(&cs, &ds, 0).unwrap();
        prop_assert_eq!(v.is_zero(), v.complex_estimate().norm() < 1e-9);
    }
}

#[test]
fn table_rows_are_orthogonal() {
    let c = QarySequence::new(6, vec![0, 0, 0, 0, 0, 3]).unwrap();
    let d = QarySequence::new(6, vec![0, 3, 0, 3, 0, 0]).unwrap();
    let v = accf(&c, &d, 0).unwrap();
    assert_eq!(v.coeffs(), &[3, 0, 0, 3, 0, 0]);
    assert!(v.is_zero());
}
