//! JSON state files.
//!
//! ```json
//! {"version": 1, "modes_a": 1, "modes_b": 1,
//!  "matrix": [[[0.25, 0.0], [0.0, 0.0], ...], ...],
//!  "tolerance": 1e-9}
//! ```

use fermisep::linalg::{self, c, ComplexMatrix};
use fermisep::split::ModeBipartition;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub version: u32,
    pub modes_a: usize,
    pub modes_b: usize,
    pub matrix: Vec<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
}

impl StateFile {
    pub fn from_matrix(rho: &ComplexMatrix, split: ModeBipartition) -> Self {
        let matrix = (0..rho.nrows()).map(|i| (0..rho.ncols()).map(|j| [rho[(i, j)].re, rho[(i, j)].im]).collect()).collect();
        Self { version: VERSION, modes_a: split.m_a(), modes_b: split.m_b(), matrix, tolerance: None }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let file: StateFile = serde_json::from_str(text).map_err(|e| CliError::Parse(format!("state file: {e}")))?;
        if file.version != VERSION {
            return Err(CliError::Parse(format!("unsupported state file version {}", file.version)));
        }
        Ok(file)
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance.unwrap_or(linalg::DEFAULT_TOL)
    }

    /// Checks the split, the shape and Hermiticity.
    pub fn to_state(&self) -> Result<(ComplexMatrix, ModeBipartition), CliError> {
        let split = ModeBipartition::new(self.modes_a, self.modes_b).map_err(CliError::invalid)?;
        let dim = split.dim();
        if self.matrix.len() != dim || self.matrix.iter().any(|row| row.len() != dim) {
            return Err(CliError::InvalidState(format!("matrix must be {dim}x{dim} for a {split} split")));
        }
        let rho = ComplexMatrix::from_fn(dim, dim, |i, j| {
            let [re, im] = self.matrix[i][j];
            c(re, im)
        });
        linalg::check_hermitian(&rho, self.tolerance()).map_err(CliError::invalid)?;
        Ok((rho, split))
    }
}
