//! JSON schemas for operators, 4-forms, splits and reports.
//!
//! Operators declare `n` and rely on the canonical lexicographic pair
//! order; floats serialize as shortest round-trip decimals (serde_json).

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exterior::{Basis2, Basis4, FourForm, SymOp};
use crate::liealg::{HomogeneousSplit, LieAlgebraData};

#[derive(Debug, Serialize, Deserialize)]
pub struct SymOpJson {
    pub n: usize,
    pub basis: String,
    /// Row-major entries, size (n choose 2)².
    pub matrix: Vec<f64>,
}

pub fn symop_to_json(op: &SymOp) -> Result<SymOpJson> {
    if !op.basis().is_full() {
        return Err(Error::Schema {
            path: "$.basis".into(),
            message: "only full lexicographic operators serialize".into(),
        });
    }
    Ok(SymOpJson {
        n: op.n(),
        basis: "lex".into(),
        matrix: op.matrix().transpose().iter().copied().collect(),
    })
}

pub fn symop_from_json(j: &SymOpJson) -> Result<SymOp> {
    if j.basis != "lex" {
        return Err(Error::Schema {
            path: "$.basis".into(),
            message: format!("unknown basis '{}'", j.basis),
        });
    }
    let basis = Basis2::full(j.n);
    let m = basis.len();
    if j.matrix.len() != m * m {
        return Err(Error::Schema {
            path: "$.matrix".into(),
            message: format!("expected {} entries, found {}", m * m, j.matrix.len()),
        });
    }
    let mat = DMatrix::from_row_slice(m, m, &j.matrix);
    SymOp::new(basis, mat)
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FourFormJson {
    pub n: usize,
    pub coords: Vec<f64>,
}

pub fn four_form_to_json(f: &FourForm) -> FourFormJson {
    FourFormJson {
        n: f.n(),
        coords: f.coords().iter().copied().collect(),
    }
}

pub fn four_form_from_json(j: &FourFormJson) -> Result<FourForm> {
    let basis = Basis4::new(j.n);
    if j.coords.len() != basis.len() {
        return Err(Error::Schema {
            path: "$.coords".into(),
            message: format!(
                "expected {} coordinates, found {}",
                basis.len(),
                j.coords.len()
            ),
        });
    }
    FourForm::new(basis, DVector::from_vec(j.coords.clone()))
}

/// Split schema: the bracket tensor over a Q-orthonormal basis plus the
/// index partition (0-based). Matrices are not serialized; everything
/// downstream is bracket-driven.
#[derive(Debug, Serialize, Deserialize)]
pub struct SplitJson {
    pub dim: usize,
    /// `bracket[i][j]` = coordinates of [e_i, e_j].
    pub bracket: Vec<Vec<Vec<f64>>>,
    pub h: Vec<usize>,
    pub p: Vec<usize>,
    pub m: Vec<usize>,
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_normalization: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fiber_round_scale: Option<f64>,
}

pub fn split_to_json(split: &HomogeneousSplit) -> SplitJson {
    let alg = split.algebra();
    let d = alg.dim();
    let bracket = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| alg.bracket(i, j).iter().copied().collect())
                .collect()
        })
        .collect();
    SplitJson {
        dim: d,
        bracket,
        h: split.h_idx().to_vec(),
        p: split.p_idx().to_vec(),
        m: split.m_idx().to_vec(),
        labels: split.labels().to_vec(),
        q_normalization: Some(alg.q_normalization()),
        fiber_round_scale: split.fiber_round_scale(),
    }
}

pub fn split_from_json(j: &SplitJson) -> Result<HomogeneousSplit> {
    let d = j.dim;
    if j.bracket.len() != d {
        return Err(Error::Schema {
            path: "$.bracket".into(),
            message: format!("expected {d} rows, found {}", j.bracket.len()),
        });
    }
    let mut bracket = Vec::with_capacity(d);
    for (i, row) in j.bracket.iter().enumerate() {
        if row.len() != d {
            return Err(Error::Schema {
                path: format!("$.bracket[{i}]"),
                message: format!("expected {d} entries, found {}", row.len()),
            });
        }
        let mut out = Vec::with_capacity(d);
        for (jj, v) in row.iter().enumerate() {
            if v.len() != d {
                return Err(Error::Schema {
                    path: format!("$.bracket[{i}][{jj}]"),
                    message: format!("expected {d} coordinates, found {}", v.len()),
                });
            }
            out.push(DVector::from_vec(v.clone()));
        }
        bracket.push(out);
    }
    let algebra = LieAlgebraData::from_bracket(bracket, j.q_normalization.unwrap_or(0.5))?;
    let labels = if j.labels.is_empty() {
        (1..=d).map(|i| format!("e{i}")).collect()
    } else {
        j.labels.clone()
    };
    let split = HomogeneousSplit::new(algebra, j.m.clone(), j.p.clone(), j.h.clone(), labels)?;
    Ok(match j.fiber_round_scale {
        Some(mu2) => split.with_fiber_round_scale(mu2),
        None => split,
    })
}

pub fn write_json<T: Serialize>(value: &T, path: &std::path::Path) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    std::fs::write(path, text + "\n")?;
    Ok(())
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &std::path::Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{build_split, Space};

    #[test]
    fn symop_roundtrip() {
        let op = SymOp::identity(5);
        let j = symop_to_json(&op).unwrap();
        let back = symop_from_json(&j).unwrap();
        assert_eq!(op.matrix(), back.matrix());
    }

    #[test]
    fn split_roundtrip_preserves_brackets() {
        let split = build_split(Space::W6).unwrap();
        let j = split_to_json(&split);
        let back = split_from_json(&j).unwrap();
        for i in 0..6 {
            for k in 0..6 {
                assert!(
                    (split.algebra().bracket(i, k) - back.algebra().bracket(i, k)).amax() < 1e-15
                );
            }
        }
    }

    #[test]
    fn malformed_bracket_names_failing_triple() {
        let split = build_split(Space::W6).unwrap();
        let mut j = split_to_json(&split);
        j.bracket[0][1][2] += 0.5;
        j.bracket[1][0][2] -= 0.5;
        let err = split_from_json(&j).unwrap_err();
        let msg = err.to_string();
        assert!(
            msg.contains("Jacobi identity fails at triple"),
            "got: {msg}"
        );
    }
}
