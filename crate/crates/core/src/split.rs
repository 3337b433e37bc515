use crate::error::{Error, Result};

/// Largest total mode count the dense kernels support (256x256 matrices).
pub const MAX_MODES: usize = 8;

/// Division of the modes into subsystem A (modes `1..=m_a`) and subsystem B
/// (modes `m_a+1..=m_a+m_b`).
///
/// Subsystem A is the left Kronecker factor and mode 1 is the most
/// significant bit of a Fock-basis index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModeBipartition {
    m_a: usize,
    m_b: usize,
}

/// Which side of a bipartition an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subsystem {
    A,
    B,
}

impl ModeBipartition {
    pub fn new(m_a: usize, m_b: usize) -> Result<Self> {
        if m_a == 0 || m_b == 0 || m_a + m_b > MAX_MODES {
            return Err(Error::InvalidSplit { m_a, m_b, max: MAX_MODES });
        }
        Ok(Self { m_a, m_b })
    }

    /// The `1x1` split used throughout the two-mode characterization.
    pub fn one_by_one() -> Self {
        Self { m_a: 1, m_b: 1 }
    }

    pub fn m_a(&self) -> usize {
        self.m_a
    }

    pub fn m_b(&self) -> usize {
        self.m_b
    }

    pub fn modes(&self) -> usize {
        self.m_a + self.m_b
    }

    pub fn dim_a(&self) -> usize {
        1 << self.m_a
    }

    pub fn dim_b(&self) -> usize {
        1 << self.m_b
    }

    pub fn dim(&self) -> usize {
        1 << self.modes()
    }

    pub fn is_one_by_one(&self) -> bool {
        self.m_a == 1 && self.m_b == 1
    }

    /// Split `(2 m_A, 2 m_B)` describing two copies regrouped as
    /// `A1 A2 | B1 B2`.
    pub fn doubled(&self) -> Result<Self> {
        Self::new(2 * self.m_a, 2 * self.m_b)
    }

    /// Parity (0 even, 1 odd) of the A-occupations of a Fock index.
    pub fn parity_a(&self, index: usize) -> usize {
        ((index >> self.m_b).count_ones() & 1) as usize
    }

    /// Parity (0 even, 1 odd) of the B-occupations of a Fock index.
    pub fn parity_b(&self, index: usize) -> usize {
        ((index & (self.dim_b() - 1)).count_ones() & 1) as usize
    }

    pub(crate) fn check_dim(&self, dim: usize) -> Result<()> {
        if dim != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: dim });
        }
        Ok(())
    }
}

impl std::fmt::Display for ModeBipartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}x{}", self.m_a, self.m_b)
    }
}

impl std::str::FromStr for ModeBipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("split `{s}` is not of the form <m_A>x<m_B>"));
        let (a, b) = s.split_once(['x', 'X']).ok_or_else(bad)?;
        let m_a = a.trim().parse().map_err(|_| bad())?;
        let m_b = b.trim().parse().map_err(|_| bad())?;
        Self::new(m_a, m_b)
    }
}
