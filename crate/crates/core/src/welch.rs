//! The zero-padded shift matrix behind the set-size bound, and its checks.
//!
//! For an `(M, N, L, Z)`-ZCS, column `pZ + u` of the matrix is the `u`-th right
//! cyclic shift of `(c^p_0, 0_{Z−1}, c^p_1, 0_{Z−1}, …, c^p_{N−1}, 0_{Z−1})`.
//! The ZCS conditions make the `MZ` columns pairwise orthogonal with energy
//! `NL`, and the Welch inequality on this matrix reduces to
//! `MNLZ − (MZ)² ≥ 0`.

use num_complex::Complex64;

use crate::cyclo::CycloValue;
use crate::error::{Error, Result};
use crate::family::ZcsFamily;
use crate::sequence::cyclic_shift;
use crate::verify::verify_zcs;

/// Entry of the shift matrix: a structural zero or `ξ^e`.
pub type Entry = Option<u32>;

/// Columns of the `N(L+Z−1) × MZ` matrix; `columns[pZ + u][row]`.
pub fn welch_matrix(family: &ZcsFamily, z: usize) -> Result<Vec<Vec<Entry>>> {
    let len = family.seq_len();
    if z < 1 || z > len {
        return Err(Error::WidthOutOfRange { z, len });
    }
    let mut columns = Vec::with_capacity(family.set_size() * z);
    for flock in family.flocks() {
        let mut padded = Vec::with_capacity(flock.size() * (len + z - 1));
        for s in flock.sequences() {
            padded.extend(s.exponents().iter().map(|&e| Some(e)));
            padded.extend(std::iter::repeat_n(None, z - 1));
        }
        for u in 0..z {
            columns.push(cyclic_shift(&padded, u as isize)?);
        }
    }
    Ok(columns)
}

#[derive(Clone, Debug, PartialEq)]
pub struct WelchMatrixReport {
    pub rows: usize,
    pub cols: usize,
    pub column_energy: Vec<u64>,
    /// Largest `|⟨s_v, s_t⟩|` over distinct columns (floating mirror).
    pub max_offdiag: f64,
    /// All distinct-column inner products are exactly zero in `Z[ξ]`.
    pub offdiag_exact_zero: bool,
    /// `MNLZ − (MZ)²`.
    pub slack: i64,
    /// `M̄(M̄−1)δ_max² + M̄E²`.
    pub welch_lhs: f64,
    /// `Σ_v Σ_t |⟨s_v, s_t⟩|²`, from exact inner products.
    pub welch_rhs: f64,
    /// The same quantity through the row Gram matrix, in floating point.
    pub welch_rhs_rows: f64,
    /// Row index `α = Z − 1`, unimodular in every column.
    pub alpha: usize,
    pub alpha_unimodular: bool,
    /// `|Σ_{l≠α} s_{l,v} s*_{l,t}|² = 1` exactly for every `v ≠ t`.
    pub excluded_alpha_unit: bool,
    /// `M̄(NL)² − M̄(NL−1)² − M̄(M̄−1) − M̄²`, which equals `2 · slack`.
    pub proof_lhs: i64,
}

impl WelchMatrixReport {
    pub fn welch_holds(&self) -> bool {
        self.welch_lhs + 1e-9 * self.welch_lhs.abs().max(1.0) >= self.welch_rhs
    }
}

fn exact_inner(a: &[Entry], b: &[Entry], q: u32) -> CycloValue {
    let mut out = CycloValue::zero(q);
    let coeffs = out.coeffs_mut();
    for (x, y) in a.iter().zip(b) {
        if let (Some(x), Some(y)) = (x, y) {
            coeffs[((x + q - y) % q) as usize] += 1;
        }
    }
    out
}

fn to_complex(col: &[Entry], q: u32) -> Vec<Complex64> {
    let q = q as f64;
    col.iter()
        .map(|e| match e {
            Some(e) => Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * *e as f64 / q),
            None => Complex64::new(0.0, 0.0),
        })
        .collect()
}

pub fn welch_matrix_check(family: &ZcsFamily, z: usize) -> Result<WelchMatrixReport> {
    if !verify_zcs(family, z)?.ok {
        return Err(Error::NotAZcs { z });
    }
    let q = family.q();
    let columns = welch_matrix(family, z)?;
    let cols = columns.len();
    let rows = columns[0].len();
    let alpha = z - 1;

    let column_energy: Vec<u64> = columns
        .iter()
        .map(|c| c.iter().filter(|e| e.is_some()).count() as u64)
        .collect();
    let energy = column_energy[0] as f64;

    let complex_cols: Vec<Vec<Complex64>> = columns.iter().map(|c| to_complex(c, q)).collect();

    let mut max_offdiag = 0.0f64;
    let mut offdiag_exact_zero = true;
    let mut excluded_alpha_unit = true;
    let mut gram_sq_sum = 0.0f64;
    for v in 0..cols {
        for t in 0..cols {
            let exact = exact_inner(&columns[v], &columns[t], q);
            gram_sq_sum += exact.norm_sqr().complex_estimate().re;
            if v == t {
                continue;
            }
            offdiag_exact_zero &= exact.is_zero();
            let float: Complex64 = complex_cols[v]
                .iter()
                .zip(&complex_cols[t])
                .map(|(a, b)| a * b.conj())
                .sum();
            max_offdiag = max_offdiag.max(float.norm());
            if let (Some(a), Some(b)) = (columns[v][alpha], columns[t][alpha]) {
                let excluded = exact.sub(&CycloValue::monomial(q, (a + q - b) % q, 1));
                excluded_alpha_unit &= excluded.norm_sqr().is_rational_integer(1);
            } else {
                excluded_alpha_unit = false;
            }
        }
    }

    let mut row_sq_sum = 0.0f64;
    for l in 0..rows {
        for lp in 0..rows {
            let s: Complex64 = complex_cols
                .iter()
                .map(|c| c[l] * c[lp].conj())
                .sum();
            row_sq_sum += s.norm_sqr();
        }
    }

    let alpha_unimodular = columns.iter().all(|c| c[alpha].is_some());

    let (m, n, l) = (
        family.set_size() as i64,
        family.flock_size() as i64,
        family.seq_len() as i64,
    );
    let zi = z as i64;
    let mbar = m * zi;
    let nl = n * l;
    let slack = m * n * l * zi - mbar * mbar;
    let proof_lhs = mbar * nl * nl - mbar * (nl - 1) * (nl - 1) - mbar * (mbar - 1) - mbar * mbar;

    let mbar_f = mbar as f64;
    Ok(WelchMatrixReport {
        rows,
        cols,
        column_energy,
        max_offdiag,
        offdiag_exact_zero,
        slack,
        welch_lhs: mbar_f * (mbar_f - 1.0) * max_offdiag * max_offdiag + mbar_f * energy * energy,
        welch_rhs: gram_sq_sum,
        welch_rhs_rows: row_sq_sum,
        alpha,
        alpha_unimodular,
        excluded_alpha_unit,
        proof_lhs,
    })
}
