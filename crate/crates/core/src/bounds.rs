//! Upper bounds on the set size `M` of an `(M, N, L, Z)`-ZCS.

use num_rational::Ratio;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub l: usize,
    pub z: usize,
    /// `⌊NL/Z⌋`, the proven bound.
    pub theorem1: u64,
    /// `N⌊L/Z⌋`, the older conjecture (violated by some families).
    pub fan: u64,
    /// `N(L+Z−1)/Z` from the inner-product argument, kept unfloored.
    pub welch_feng: Ratio<u64>,
}

impl BoundReport {
    pub fn welch_feng_f64(&self) -> f64 {
        *self.welch_feng.numer() as f64 / *self.welch_feng.denom() as f64
    }

    pub fn is_optimal(&self, m: usize) -> bool {
        m as u64 == self.theorem1
    }

    pub fn exceeds_fan(&self, m: usize) -> bool {
        m as u64 > self.fan
    }
}

pub fn bounds(n: usize, l: usize, z: usize) -> Result<BoundReport> {
    if n < 1 || l < 1 || z < 1 || z > l {
        return Err(Error::InvalidBoundInputs { n, l, z });
    }
    let (n64, l64, z64) = (n as u64, l as u64, z as u64);
    Ok(BoundReport {
        n,
        l,
        z,
        theorem1: n64 * l64 / z64,
        fan: n64 * (l64 / z64),
        welch_feng: Ratio::new(n64 * (l64 + z64 - 1), z64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_examples() {
        let b = bounds(4, 6, 4).unwrap();
        assert_eq!((b.theorem1, b.fan), (6, 4));
        assert_eq!(b.welch_feng, Ratio::from_integer(9));

        assert_eq!(bounds(4, 8, 8).unwrap().theorem1, 4);

        let b = bounds(2, 8, 4).unwrap();
        assert_eq!((b.theorem1, b.fan), (4, 4));
        assert_eq!(b.welch_feng, Ratio::new(11, 2));
        assert_eq!(b.welch_feng_f64(), 5.5);
    }

    #[test]
    fn invalid_inputs() {
        for (n, l, z) in [(0, 4, 1), (1, 0, 1), (1, 4, 0), (1, 4, 5)] {
            assert_eq!(bounds(n, l, z), Err(Error::InvalidBoundInputs { n, l, z }));
        }
    }

    #[test]
    fn ordering_of_bounds() {
        for n in 1..6 {
            for l in 1..20 {
                for z in 1..=l {
                    let b = bounds(n, l, z).unwrap();
                    assert!(b.fan <= b.theorem1);
                    assert!(Ratio::from_integer(b.theorem1) <= b.welch_feng);
                    assert!(b.fan >= 1);
                }
            }
        }
    }
}
