//! Unimodular q-ary sequences and their aperiodic correlations.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::cyclo::CycloValue;
use crate::error::{Error, Result};

/// The sequence `(ξ^{a_0}, …, ξ^{a_{L-1}})` stored by its exponents `a_i ∈ Z_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QarySequence {
    q: u32,
    exps: Vec<u32>,
}

impl QarySequence {
    pub fn new(q: u32, exps: Vec<u32>) -> Result<Self> {
        if q < 1 {
            return Err(Error::InvalidModulus { q, min: 1 });
        }
        if exps.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some((index, &value)) = exps.iter().enumerate().find(|(_, &e)| e >= q) {
            return Err(Error::ExponentOutOfRange { index, value, q });
        }
        Ok(Self { q, exps })
    }

    /// Builds a sequence from arbitrary integers, reducing each modulo `q`.
    pub fn from_residues(q: u32, values: impl IntoIterator<Item = i64>) -> Result<Self> {
        if q < 1 {
            return Err(Error::InvalidModulus { q, min: 1 });
        }
        let exps = values
            .into_iter()
            .map(|v| v.rem_euclid(q as i64) as u32)
            .collect();
        Self::new(q, exps)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.exps
    }

    /// The complex sequence `φ(a)`.
    pub fn to_complex(&self) -> Vec<Complex64> {
        let q = self.q as f64;
        self.exps
            .iter()
            .map(|&e| Complex64::from_polar(1.0, 2.0 * PI * e as f64 / q))
            .collect()
    }
}

impl fmt::Display for QarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.exps.iter().enumerate() {
            if self.q <= 10 {
                write!(f, "{e}")?;
            } else {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

fn check_shift(u: isize, len: usize) -> Result<()> {
    if u.unsigned_abs() >= len {
        return Err(Error::ShiftOutOfRange { u, len });
    }
    Ok(())
}

/// Adds the terms of `ρ(c, d; u)` into `coeffs`. Caller guarantees matching
/// lengths, a shared modulus, and `|u| < len`.
pub(crate) fn accumulate_accf(c: &[u32], d: &[u32], q: u32, u: isize, coeffs: &mut [i64]) {
    let len = c.len();
    let shift = u.unsigned_abs();
    let (lead, lag) = if u >= 0 {
        (&c[shift..], &d[..len - shift])
    } else {
        (&c[..len - shift], &d[shift..])
    };
    for (&a, &b) in lead.iter().zip(lag) {
        let e = if a >= b { a - b } else { a + q - b };
        coeffs[e as usize] += 1;
    }
}

/// Aperiodic cross-correlation
/// `ρ(c, d; u) = Σ_i c_{i+u} d_i^*` for `u ≥ 0` and `Σ_i c_i d_{i-u}^*` for `u < 0`.
pub fn accf(c: &QarySequence, d: &QarySequence, u: isize) -> Result<CycloValue> {
    if c.q != d.q {
        return Err(Error::ModulusMismatch(c.q, d.q));
    }
    if c.len() != d.len() {
        return Err(Error::LengthMismatch(c.len(), d.len()));
    }
    check_shift(u, c.len())?;
    let mut out = CycloValue::zero(c.q);
    accumulate_accf(&c.exps, &d.exps, c.q, u, out.coeffs_mut());
    Ok(out)
}

/// Aperiodic autocorrelation `ρ(c; u)`.
pub fn aacf(c: &QarySequence, u: isize) -> Result<CycloValue> {
    accf(c, c, u)
}

/// Right cyclic shift by `u`: `out[j] = v[(j − u) mod len]`, for `0 ≤ u ≤ len`.
pub fn cyclic_shift<T: Clone>(v: &[T], u: isize) -> Result<Vec<T>> {
    if u < 0 || u as usize > v.len() {
        return Err(Error::RotationOutOfRange { u, len: v.len() });
    }
    let mut out = v.to_vec();
    if !out.is_empty() {
        out.rotate_right(u as usize % v.len());
    }
    Ok(out)
}
