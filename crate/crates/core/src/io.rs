//! State files and sweep/survey emission.
//!
//! CSV numbers are written in scientific notation with 12 significant digits.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::criteria::{Tolerances, Verdict};
use crate::error::{Error, Result};
use crate::linalg::{min_eigenvalue, ComplexMatrix, SubsystemShape, C64};
use crate::scan::{Family, ScanRecord, SurveyReport};

/// Slack used when validating a loaded state.
pub const STATE_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixParts {
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

/// `{dims: [2, d], matrix: {re, im}}`, row-major.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub dims: Vec<usize>,
    pub matrix: MatrixParts,
}

impl StateFile {
    pub fn from_state(rho: &ComplexMatrix, shape: &SubsystemShape) -> Self {
        let n = rho.rows();
        let part = |f: fn(C64) -> f64| (0..n).map(|i| (0..n).map(|j| f(rho[(i, j)])).collect()).collect();
        StateFile {
            dims: shape.dims().to_vec(),
            matrix: MatrixParts {
                re: part(|z| z.re),
                im: part(|z| z.im),
            },
        }
    }

    /// Checks shape, Hermiticity, unit trace and positivity.
    pub fn into_state(self) -> Result<(ComplexMatrix, SubsystemShape)> {
        let invalid = |m: String| Error::Validation(m);
        if self.dims.len() != 2 || self.dims[0] != 2 || self.dims[1] < 2 {
            return Err(invalid(format!("dims must be [2, d] with d >= 2, got {:?}", self.dims)));
        }
        let shape = SubsystemShape::new(self.dims.clone())?;
        let n = shape.total();
        let MatrixParts { re, im } = self.matrix;
        if re.len() != n || im.len() != n || re.iter().chain(&im).any(|row| row.len() != n) {
            return Err(invalid(format!("matrix must be {n}x{n} in both re and im")));
        }
        if re.iter().chain(&im).flatten().any(|v| !v.is_finite()) {
            return Err(invalid("matrix has non-finite entries".into()));
        }
        let rho = ComplexMatrix::from_fn(n, n, |i, j| C64::new(re[i][j], im[i][j]));
        let defect = rho.hermiticity_defect();
        if defect > STATE_TOL {
            return Err(invalid(format!("matrix is not Hermitian (defect {defect:e})")));
        }
        let rho = rho.symmetrized();
        let tr = rho.trace().re;
        if (tr - 1.0).abs() > STATE_TOL {
            return Err(invalid(format!("trace is {tr}, expected 1")));
        }
        let lmin = min_eigenvalue(&rho)?;
        if lmin < -STATE_TOL {
            return Err(invalid(format!(
                "matrix is not positive semidefinite (min eigenvalue {lmin:e})"
            )));
        }
        Ok((rho, shape))
    }
}

pub fn load_state(path: &Path) -> Result<(ComplexMatrix, SubsystemShape)> {
    let text = std::fs::read_to_string(path)?;
    let file: StateFile =
        serde_json::from_str(&text).map_err(|e| Error::Validation(format!("{}: {e}", path.display())))?;
    file.into_state()
}

pub fn save_state(path: &Path, rho: &ComplexMatrix, shape: &SubsystemShape) -> Result<()> {
    let text = serde_json::to_string_pretty(&StateFile::from_state(rho, shape))?;
    std::fs::write(path, text + "\n")?;
    Ok(())
}

/// 12 significant digits.
pub fn sig12(v: f64) -> String {
    format!("{v:.11e}")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Domain(format!(
                "unknown format '{other}' (expected csv or json)"
            ))),
        }
    }
}

pub const BASIS_CONVENTION: &str = "Pauli (x,y,z) on the qubit; Gell-Mann lambda_1..lambda_8 for d=3, \
generalized Gell-Mann (symmetric, antisymmetric, diagonal) otherwise; Tr(O_i O_j) = 2 delta_ij; \
X, Y, T are raw expectation values Tr[rho (sigma_i x O_j)]; product basis is row-major, qubit first";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub version: String,
    pub seed: Option<u64>,
    pub tolerances: Tolerances,
    pub basis_convention: String,
}

impl Metadata {
    pub fn new(seed: Option<u64>, tolerances: Tolerances) -> Self {
        Metadata {
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            tolerances,
            basis_convention: BASIS_CONVENTION.to_string(),
        }
    }
}

fn verdict_cols(v: &Verdict) -> [String; 2] {
    [format!("{:?}", v.status), sig12(v.witness)]
}

/// Fixed column order: family, parameters, class, witnesses, measures.
pub fn sweep_csv(family: Family, records: &[ScanRecord]) -> String {
    let mut out = String::new();
    let mut header: Vec<String> = vec!["family".into()];
    header.extend(family.param_names().iter().map(|s| s.to_string()));
    header.extend(
        [
            "class",
            "nonlocal_status",
            "nonlocal_witness",
            "alice_status",
            "alice_witness",
            "bob_status",
            "bob_witness",
            "bob_pptes",
            "alice_abs_separable",
            "discord_nonlocal",
            "coherence_nonlocal",
            "discord_alice",
            "coherence_alice",
        ]
        .map(String::from),
    );
    out.push_str(&header.join(","));
    out.push('\n');
    for r in records {
        let mut row: Vec<String> = vec![r.family.to_string()];
        row.extend(r.params.iter().map(|p| sig12(p.value)));
        row.push(r.broadcast_class.to_string());
        row.extend(verdict_cols(&r.verdict_nonlocal));
        row.extend(verdict_cols(&r.verdict_alice_local));
        row.extend(verdict_cols(&r.verdict_bob_local));
        row.push(r.pptes_bob.to_string());
        row.push(r.abs_sep_alice.to_string());
        row.extend(
            [
                r.discord_nonlocal,
                r.coherence_nonlocal,
                r.discord_alice_local,
                r.coherence_alice_local,
            ]
            .map(sig12),
        );
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct SweepJson<'a> {
    metadata: Metadata,
    family: Family,
    records: &'a [ScanRecord],
}

pub fn sweep_json(family: Family, records: &[ScanRecord], tol: &Tolerances) -> Result<String> {
    let doc = SweepJson {
        metadata: Metadata::new(None, *tol),
        family,
        records,
    };
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

pub fn survey_csv(report: &SurveyReport) -> String {
    let mut out = String::from(
        "index,class,x_norm,y_norm,t_column_norm_sum,x1,x2,x3,inequality_lhs,inequality_rhs,output_bloch_witness,output_bloch_separable\n",
    );
    for r in &report.records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            r.index,
            r.class,
            sig12(r.x_norm),
            sig12(r.y_norm),
            sig12(r.t_column_norm_sum),
            sig12(r.x[0]),
            sig12(r.x[1]),
            sig12(r.x[2]),
            sig12(r.inequality_lhs),
            sig12(r.inequality_rhs),
            sig12(r.output_bloch_witness),
            r.output_bloch_separable
        );
    }
    out
}

#[derive(Serialize)]
struct SurveyJson<'a> {
    metadata: Metadata,
    #[serde(flatten)]
    report: &'a SurveyReport,
}

pub fn survey_json(report: &SurveyReport) -> Result<String> {
    let doc = SurveyJson {
        metadata: Metadata::new(Some(report.seed), Tolerances::default()),
        report,
    };
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn maximally_mixed() -> StateFile {
        let rho = ComplexMatrix::identity(6).scaled(1.0 / 6.0);
        StateFile::from_state(&rho, &SubsystemShape::bipartite(2, 3).unwrap())
    }

    #[test]
    fn state_roundtrip() {
        let (rho, shape) = maximally_mixed().into_state().unwrap();
        assert_eq!(shape.dims(), &[2, 3]);
        assert!((rho.trace().re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_trace() {
        let mut f = maximally_mixed();
        f.matrix.re[0][0] = 0.5;
        assert!(matches!(f.into_state(), Err(Error::Validation(_))));
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut f = maximally_mixed();
        f.matrix.im[0][1] = 0.1;
        let err = f.into_state().unwrap_err();
        assert!(err.to_string().contains("Hermitian"), "{err}");
    }

    #[test]
    fn rejects_negative() {
        let mut f = maximally_mixed();
        f.matrix.re[0][0] = -0.1;
        f.matrix.re[1][1] += 0.1 + 1.0 / 6.0;
        let err = f.into_state().unwrap_err();
        assert!(err.to_string().contains("positive"), "{err}");
    }

    #[test]
    fn rejects_qudit_first() {
        let mut f = maximally_mixed();
        f.dims = vec![3, 2];
        assert!(f.into_state().is_err());
    }

    #[test]
    fn twelve_digits() {
        assert_eq!(sig12(1.0 / 3.0), "3.33333333333e-1");
        assert_eq!(sig12(0.0), "0.00000000000e0");
    }
}
