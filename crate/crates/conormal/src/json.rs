//! JSON encodings shared by the CLI and reports.
//!
//! A matrix is `{"n": n, "entries": [cell, ...]}` with the `n * n` cells in
//! row-major order; a cell is a list of `[exp, num, den]` terms and the empty
//! list is zero. A window is `{"n": n, "window": [...]}` and a root is
//! `{"i": i, "j": j}`.

use conormal_core::weyl::{AffinePermutation, RootIdx};
use conormal_core::{Field, LaurentMatrix, LaurentPoly};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Version tag carried by every JSON document this crate emits.
pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub entries: Vec<Vec<[i64; 3]>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowJson {
    pub n: usize,
    pub window: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootJson {
    pub i: i64,
    pub j: i64,
}

impl MatrixJson {
    /// Fails when a coefficient does not fit in `i64 / i64`.
    pub fn encode<F: Field>(m: &LaurentMatrix<F>) -> Result<Self, CliError> {
        let entries = m
            .entries()
            .iter()
            .map(|p| {
                p.terms()
                    .map(|(e, c)| {
                        let (num, den) = c.to_ratio().ok_or_else(|| CliError::Format(format!("coefficient {c} overflows i64")))?;
                        Ok([e, num, den])
                    })
                    .collect::<Result<Vec<_>, CliError>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MatrixJson { n: m.dim(), entries })
    }

    pub fn decode<F: Field>(&self) -> Result<LaurentMatrix<F>, CliError> {
        if self.entries.len() != self.n * self.n {
            return Err(CliError::Format(format!("expected {} cells for n = {}, found {}", self.n * self.n, self.n, self.entries.len())));
        }
        let cells = self
            .entries
            .iter()
            .map(|cell| {
                cell.iter()
                    .map(|&[e, num, den]| {
                        F::from_ratio(num, den).map(|c| (e, c)).ok_or_else(|| CliError::Format(format!("zero denominator in term [{e}, {num}, {den}]")))
                    })
                    .collect::<Result<Vec<_>, _>>()
                    .map(LaurentPoly::from_terms)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LaurentMatrix::from_entries(self.n, cells)?)
    }
}

impl From<&AffinePermutation> for WindowJson {
    fn from(w: &AffinePermutation) -> Self {
        WindowJson { n: w.n(), window: w.window().to_vec() }
    }
}

impl WindowJson {
    pub fn decode(&self) -> Result<AffinePermutation, CliError> {
        if self.window.len() != self.n {
            return Err(CliError::Format(format!("window has {} entries for n = {}", self.window.len(), self.n)));
        }
        Ok(AffinePermutation::new(self.window.clone())?)
    }
}

impl From<RootIdx> for RootJson {
    fn from(r: RootIdx) -> Self {
        RootJson { i: r.i, j: r.j }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use conormal_core::Rational;

    #[test]
    fn identity_encoding() {
        let m = LaurentMatrix::<Rational>::identity(2);
        let json = serde_json::to_string(&MatrixJson::encode(&m).unwrap()).unwrap();
        assert_eq!(json, r#"{"n":2,"entries":[[[0,1,1]],[],[],[[0,1,1]]]}"#);
    }

    #[test]
    fn decode_rejects_malformed_input() {
        let bad = MatrixJson { n: 2, entries: vec![vec![]; 3] };
        assert!(bad.decode::<Rational>().is_err());
        let zero_den = MatrixJson { n: 1, entries: vec![vec![[0, 1, 0]]] };
        assert!(zero_den.decode::<Rational>().is_err());
        assert!(WindowJson { n: 2, window: vec![1, 3] }.decode().is_err());
    }
}
