//! Exact arithmetic in the cyclotomic integers `Z[ξ]`, `ξ = exp(2πi/q)`.
//!
//! A [`CycloValue`] is stored as `q` integer coefficients over the spanning set
//! `1, ξ, …, ξ^{q-1}`. That set is not a basis, so equality of values is decided
//! by reducing modulo the `q`-th cyclotomic polynomial `Φ_q`, which is the
//! minimal polynomial of `ξ`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::rc::Rc;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Integer polynomial, coefficient of `x^j` at index `j`.
pub type IntPoly = Vec<i64>;

fn trim(p: &mut IntPoly) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

/// Remainder of `a` modulo a monic polynomial `m`.
fn rem_monic(a: &[i64], m: &[i64]) -> IntPoly {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    if r.len() <= dm {
        return r;
    }
    for top in (dm..r.len()).rev() {
        let c = r[top];
        if c == 0 {
            continue;
        }
        let shift = top - dm;
        for (j, &mj) in m.iter().enumerate() {
            r[shift + j] -= c * mj;
        }
    }
    r.truncate(dm);
    r
}

/// Exact quotient of `a` by a monic polynomial `m`; panics if the division
/// leaves a remainder.
fn div_monic_exact(a: &[i64], m: &[i64]) -> IntPoly {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    let mut quot = vec![0i64; r.len() - dm];
    for top in (dm..r.len()).rev() {
        let c = r[top];
        quot[top - dm] = c;
        if c == 0 {
            continue;
        }
        let shift = top - dm;
        for (j, &mj) in m.iter().enumerate() {
            r[shift + j] -= c * mj;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0), "inexact cyclotomic division");
    trim(&mut quot);
    quot
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// The `q`-th cyclotomic polynomial, computed by dividing `x^q − 1` by `Φ_d`
/// for every proper divisor `d` of `q`.
pub fn cyclotomic_polynomial(q: u32) -> Result<IntPoly> {
    if q < 1 {
        return Err(Error::InvalidModulus { q, min: 1 });
    }
    // Build Φ_d for every divisor in increasing order; each one only needs
    // the divisors below it.
    let divs = divisors(q);
    let mut table: HashMap<u32, IntPoly> = HashMap::with_capacity(divs.len());
    for &d in &divs {
        let mut num = vec![0i64; d as usize + 1];
        num[0] = -1;
        num[d as usize] = 1;
        for &e in divs.iter().filter(|&&e| e < d && d % e == 0) {
            num = div_monic_exact(&num, &table[&e]);
        }
        table.insert(d, num);
    }
    Ok(table.remove(&q).unwrap())
}

thread_local! {
    static PHI_CACHE: RefCell<HashMap<u32, Rc<IntPoly>>> = RefCell::new(HashMap::new());
}

fn cached_phi(q: u32) -> Rc<IntPoly> {
    PHI_CACHE.with(|cache| {
        cache
            .borrow_mut()
            .entry(q)
            .or_insert_with(|| Rc::new(cyclotomic_polynomial(q).expect("q >= 1")))
            .clone()
    })
}

/// An exact element of `Z[ξ_q]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloValue {
    q: u32,
    coeffs: Vec<i64>,
}

impl CycloValue {
    pub fn zero(q: u32) -> Self {
        assert!(q >= 1, "modulus must be positive");
        Self {
            q,
            coeffs: vec![0; q as usize],
        }
    }

    /// `count · ξ^exp`.
    pub fn monomial(q: u32, exp: u32, count: i64) -> Self {
        let mut v = Self::zero(q);
        v.coeffs[(exp % q) as usize] = count;
        v
    }

    pub fn from_coeffs(q: u32, coeffs: Vec<i64>) -> Result<Self> {
        if q < 1 {
            return Err(Error::InvalidModulus { q, min: 1 });
        }
        if coeffs.len() != q as usize {
            return Err(Error::CoefficientLength {
                len: coeffs.len(),
                q,
            });
        }
        Ok(Self { q, coeffs })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [i64] {
        &mut self.coeffs
    }

    /// Sum of the raw coefficients (the number of unit terms for a correlation).
    pub fn coefficient_sum(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Canonical remainder modulo `Φ_q`, of length `φ(q)`.
    pub fn reduced(&self) -> IntPoly {
        let phi = cached_phi(self.q);
        rem_monic(&self.coeffs, &phi)
    }

    pub fn is_zero(&self) -> bool {
        if self.coeffs.iter().all(|&c| c == 0) {
            return true;
        }
        self.reduced().iter().all(|&c| c == 0)
    }

    /// Equality as elements of `Z[ξ]` (the derived `==` compares representations).
    pub fn value_eq(&self, other: &Self) -> bool {
        self.q == other.q && self.sub(other).is_zero()
    }

    pub fn is_rational_integer(&self, n: i64) -> bool {
        self.value_eq(&Self::monomial(self.q, 0, n))
    }

    /// Complex conjugate: `ξ^j ↦ ξ^{q−j}`.
    pub fn conj(&self) -> Self {
        let q = self.q as usize;
        let mut coeffs = vec![0; q];
        for (j, &c) in self.coeffs.iter().enumerate() {
            coeffs[(q - j) % q] += c;
        }
        Self { q: self.q, coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.q, other.q, "modulus mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Self { q: self.q, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.q, other.q, "modulus mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Self { q: self.q, coeffs }
    }

    /// Product, using `ξ^q = 1`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.q, other.q, "modulus mismatch");
        let q = self.q as usize;
        let mut coeffs = vec![0; q];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[(i + j) % q] += a * b;
            }
        }
        Self { q: self.q, coeffs }
    }

    /// `|v|²` as the exact element `v · conj(v)`.
    pub fn norm_sqr(&self) -> Self {
        self.mul(&self.conj())
    }

    pub fn complex_estimate(&self) -> Complex64 {
        let q = self.q as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| Complex64::from_polar(c as f64, 2.0 * PI * j as f64 / q))
            .sum()
    }
}

impl fmt::Display for CycloValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if wrote {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            write!(f, "{}·ξ^{}", c.abs(), j)?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn is_zero(v: &CycloValue) -> bool {
    v.is_zero()
}

pub fn complex_estimate(v: &CycloValue) -> Complex64 {
    v.complex_estimate()
}
