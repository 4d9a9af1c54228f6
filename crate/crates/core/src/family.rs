//! Flocks and Z-complementary set families.

use crate::error::{Error, Result};
use crate::sequence::QarySequence;

/// One constituent set `C^p = {c_0, …, c_{N-1}}` of equal-length sequences.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Flock {
    sequences: Vec<QarySequence>,
}

impl Flock {
    pub fn new(sequences: Vec<QarySequence>) -> Result<Self> {
        let first = sequences.first().ok_or(Error::EmptyFlock)?;
        let (q, len) = (first.q(), first.len());
        for s in &sequences[1..] {
            if s.q() != q {
                return Err(Error::ModulusMismatch(q, s.q()));
            }
            if s.len() != len {
                return Err(Error::LengthMismatch(len, s.len()));
            }
        }
        Ok(Self { sequences })
    }

    pub fn from_exponents(q: u32, rows: Vec<Vec<u32>>) -> Result<Self> {
        let sequences = rows
            .into_iter()
            .map(|r| QarySequence::new(q, r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(sequences)
    }

    pub fn sequences(&self) -> &[QarySequence] {
        &self.sequences
    }

    /// Flock size `N`.
    pub fn size(&self) -> usize {
        self.sequences.len()
    }

    pub fn seq_len(&self) -> usize {
        self.sequences[0].len()
    }

    pub fn q(&self) -> u32 {
        self.sequences[0].q()
    }

    pub(crate) fn compatible(&self, other: &Flock) -> Result<()> {
        if self.q() != other.q() {
            return Err(Error::ModulusMismatch(self.q(), other.q()));
        }
        if self.size() != other.size() {
            return Err(Error::ShapeMismatch(format!(
                "flock sizes {} and {}",
                self.size(),
                other.size()
            )));
        }
        if self.seq_len() != other.seq_len() {
            return Err(Error::LengthMismatch(self.seq_len(), other.seq_len()));
        }
        Ok(())
    }
}

/// `M` flocks of `N` sequences of length `L` over a shared `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZcsFamily {
    flocks: Vec<Flock>,
    claimed_z: Option<usize>,
}

impl ZcsFamily {
    pub fn new(flocks: Vec<Flock>, claimed_z: Option<usize>) -> Result<Self> {
        let first = flocks.first().ok_or(Error::EmptyFamily)?;
        for f in &flocks[1..] {
            first.compatible(f)?;
        }
        if let Some(z) = claimed_z {
            let len = first.seq_len();
            if z < 1 || z > len {
                return Err(Error::WidthOutOfRange { z, len });
            }
        }
        Ok(Self { flocks, claimed_z })
    }

    /// Builds a family from `sets[p][λ][i]` exponents.
    pub fn from_exponents(
        q: u32,
        sets: Vec<Vec<Vec<u32>>>,
        claimed_z: Option<usize>,
    ) -> Result<Self> {
        let flocks = sets
            .into_iter()
            .map(|rows| Flock::from_exponents(q, rows))
            .collect::<Result<Vec<_>>>()?;
        Self::new(flocks, claimed_z)
    }

    pub fn to_exponents(&self) -> Vec<Vec<Vec<u32>>> {
        self.flocks
            .iter()
            .map(|f| f.sequences.iter().map(|s| s.exponents().to_vec()).collect())
            .collect()
    }

    pub fn flocks(&self) -> &[Flock] {
        &self.flocks
    }

    pub fn flock(&self, p: usize) -> &Flock {
        &self.flocks[p]
    }

    /// Set size `M`.
    pub fn set_size(&self) -> usize {
        self.flocks.len()
    }

    /// Flock size `N`.
    pub fn flock_size(&self) -> usize {
        self.flocks[0].size()
    }

    /// Sequence length `L`.
    pub fn seq_len(&self) -> usize {
        self.flocks[0].seq_len()
    }

    pub fn q(&self) -> u32 {
        self.flocks[0].q()
    }

    pub fn claimed_z(&self) -> Option<usize> {
        self.claimed_z
    }

    pub fn with_claimed_z(mut self, z: Option<usize>) -> Result<Self> {
        if let Some(z) = z {
            let len = self.seq_len();
            if z < 1 || z > len {
                return Err(Error::WidthOutOfRange { z, len });
            }
        }
        self.claimed_z = z;
        Ok(self)
    }
}
