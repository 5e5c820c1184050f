//! One-point evaluation codes `C_L(gamma P_inf, D)`, their duals, and
//! minimum-distance bounds.

mod bounds;
mod matrix;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::curves::{enumerate_points, AffinePoint, Budget, CurveError, CurveSpec};
use crate::gf::{FieldContext, FieldElement};
use crate::numsg::SemigroupError;
use crate::rrspace::{rr_basis, MonomialBasis, RrError};

pub use bounds::{
    brute_min_distance, designed_certificates, designed_distances, gkl_bound_cl, gkl_bound_comega, gkl_comega_value,
    BoundCertificate, CertificateKind, Designed, Witness, DEFAULT_BRUTE_BUDGET, ORDER_SEQUENCE_NOTE,
};
pub use matrix::{dot, Matrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AgcError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Rr(#[from] RrError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error("evaluation set is empty")]
    EmptyD,
    #[error("evaluation point {0} is not on the curve")]
    OffCurve(usize),
    #[error("gamma = {0} is a non-gap; no gap-run certificate")]
    NotAGap(u64),
    #[error("gap-run hypothesis fails: {} non-gaps in the required runs, first {first}", .nongaps.len(), first = .nongaps[0])]
    Hypothesis { nongaps: Vec<u64> },
    #[error("exhaustive search needs {work} codewords, budget is {budget}")]
    BudgetExceeded { work: u64, budget: u64 },
}

/// `C_L(gamma P_inf, D)`.
#[derive(Clone, Debug)]
pub struct EvaluationCode {
    pub spec: CurveSpec,
    pub gamma: u64,
    pub points: Vec<AffinePoint>,
    pub basis: MonomialBasis,
    /// One row per basis monomial, one column per point of `D`.
    pub generator: Matrix,
    pub n: usize,
    pub k: usize,
}

/// Builds the code; `d = None` evaluates at every affine point in
/// lexicographic order.
pub fn build_cl(
    spec: &CurveSpec,
    gamma: u64,
    d: Option<Vec<AffinePoint>>,
    budget: &Budget,
) -> Result<EvaluationCode, AgcError> {
    let basis = rr_basis(spec, gamma)?;
    let points = match d {
        Some(pts) => pts,
        None => enumerate_points(spec, budget)?.points,
    };
    if points.is_empty() {
        return Err(AgcError::EmptyD);
    }
    if let Some(i) = points.iter().position(|&pt| !spec.on_curve(pt)) {
        return Err(AgcError::OffCurve(i));
    }
    let f = &*spec.field;
    let generator = evaluation_matrix(f, &basis, &points);
    let k = generator.rank(f);
    Ok(EvaluationCode {
        spec: spec.clone(),
        gamma,
        n: points.len(),
        points,
        basis,
        generator,
        k,
    })
}

fn evaluation_matrix(f: &FieldContext, basis: &MonomialBasis, points: &[AffinePoint]) -> Matrix {
    let max_i = basis.monomials.iter().map(|m| m[0]).max().unwrap_or(0) as usize;
    let max_j = basis.monomials.iter().map(|m| m[1]).max().unwrap_or(0) as usize;
    let powers = |base: FieldElement, top: usize| {
        let mut v = Vec::with_capacity(top + 1);
        let mut acc = f.one();
        for _ in 0..=top {
            v.push(acc);
            acc = f.mul(acc, base);
        }
        v
    };
    let columns: Vec<Vec<FieldElement>> = points
        .par_iter()
        .map(|pt| {
            let xs = powers(pt.x, max_i);
            let ys = powers(pt.y, max_j);
            basis
                .monomials
                .iter()
                .map(|&[i, j]| f.mul(xs[i as usize], ys[j as usize]))
                .collect()
        })
        .collect();
    let mut g = Matrix::zeros(basis.len(), points.len());
    for (c, col) in columns.iter().enumerate() {
        for (r, &v) in col.iter().enumerate() {
            g.set(r, c, v);
        }
    }
    g
}

impl EvaluationCode {
    pub fn field(&self) -> &FieldContext {
        &self.spec.field
    }

    /// Row-reduced generator with exactly `k` rows.
    pub fn systematic(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.generator.clone();
        let pivots = m.rref(self.field());
        m.truncate_rows(pivots.len());
        (m, pivots)
    }

    pub fn dual(&self) -> DualCode {
        dual_of(self.field(), &self.generator)
    }

    /// Rows of the generator as element text, for CSV export.
    pub fn generator_csv(&self) -> Result<String, csv::Error> {
        let f = self.field();
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in 0..self.generator.rows() {
            w.write_record(self.generator.row(r).iter().map(|&e| f.format(e)))?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("ascii"))
    }
}

/// Null space of a generator matrix, kept in systematic form: for each
/// non-pivot column `c`, the row `e_c - sum_r R[r][c] e_{pivot(r)}`.
/// Rows are produced on demand, so large duals never materialize.
#[derive(Clone, Debug)]
pub struct DualCode {
    pub n: usize,
    pub k: usize,
    reduced: Matrix,
    pivots: Vec<usize>,
    free: Vec<usize>,
    field_neg: Vec<Vec<FieldElement>>,
}

pub fn dual_of(f: &FieldContext, generator: &Matrix) -> DualCode {
    let mut reduced = generator.clone();
    let pivots = reduced.rref(f);
    reduced.truncate_rows(pivots.len());
    let n = generator.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    // negated pivot-row entries, column-major over the free columns
    let field_neg = free
        .iter()
        .map(|&c| (0..pivots.len()).map(|r| f.neg(reduced.get(r, c))).collect())
        .collect();
    DualCode {
        n,
        k: free.len(),
        reduced,
        pivots,
        free,
        field_neg,
    }
}

impl DualCode {
    pub fn row(&self, i: usize) -> Vec<FieldElement> {
        let mut v = vec![FieldElement::ZERO; self.n];
        v[self.free[i]] = FieldElement::ONE;
        for (r, &p) in self.pivots.iter().enumerate() {
            v[p] = self.field_neg[i][r];
        }
        v
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows((0..self.k).map(|i| self.row(i)).collect())
    }

    /// The reduced generator of the primal code this is the dual of.
    pub fn primal_reduced(&self) -> &Matrix {
        &self.reduced
    }
}

/// `{"n","k","gamma","designed_CL","designed_COmega","certificates"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    pub n: u64,
    pub k: u64,
    pub gamma: u64,
    #[serde(rename = "designed_CL")]
    pub designed_cl: i64,
    #[serde(rename = "designed_COmega")]
    pub designed_comega: i64,
    pub certificates: Vec<BoundCertificate>,
}
