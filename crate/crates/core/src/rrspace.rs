//! Pole orders at the point at infinity, Weierstrass semigroups and
//! monomial Riemann-Roch bases for curves with a C_ab plane model.

use serde::Serialize;
use thiserror::Error;

use crate::curves::{CurveSpec, Family};
use crate::numsg::{gcd, NumericalSemigroup, SemigroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RrError {
    #[error("family {0} has no C_ab model here")]
    NotCab(Family),
    #[error("monomial y-degree {j} must be below {deg_y}")]
    YDegree { j: u64, deg_y: u64 },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// `x` has pole order `a`, `y` has pole order `b`, and the model has
/// y-degree `deg_y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CabShape {
    pub a: u64,
    pub b: u64,
    pub deg_y: u64,
}

pub fn cab_parameters(spec: &CurveSpec) -> Result<CabShape, RrError> {
    let q = spec.q;
    let p = spec.p as u64;
    let (a, b) = match spec.family {
        Family::Hermitian => (q, q + 1),
        Family::IntermediateCenter => (q / p, q + 1),
        Family::FamilyI => (q / p, (q + 1) / spec.d.expect("d") as u64),
        other => return Err(RrError::NotCab(other)),
    };
    debug_assert_eq!(gcd(a, b), 1);
    Ok(CabShape { a, b, deg_y: a })
}

pub fn pole_order(i: u64, j: u64, shape: &CabShape) -> Result<u64, RrError> {
    if j >= shape.deg_y {
        return Err(RrError::YDegree { j, deg_y: shape.deg_y });
    }
    Ok(i * shape.a + j * shape.b)
}

/// Members of `H(P_inf)` claimed for a family without a full derivation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialMembership {
    /// As stated in the theorem.
    pub theorem_members: Vec<u64>,
    /// As stated in its proof; may differ.
    pub proof_members: Vec<u64>,
    pub tag: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeierstrassData {
    Full {
        semigroup: NumericalSemigroup,
        note: Option<&'static str>,
    },
    Partial(PartialMembership),
}

pub const ASSERTED: &str = "asserted, unverified";

/// Recorded for family I: the semigroup `<q/p, q+1>` stated alongside it
/// belongs to the center intermediate curve, not to this quotient.
pub const FAMILY_I_NOTE: &str = "generated by q/p and (q+1)/d; the alternative <q/p, q+1> does not match the genus";

pub fn weierstrass_semigroup(spec: &CurveSpec) -> Result<WeierstrassData, RrError> {
    let q = spec.q;
    let p = spec.p as u64;
    match spec.family {
        Family::Hermitian | Family::IntermediateCenter | Family::FamilyI => {
            let shape = cab_parameters(spec)?;
            let semigroup = NumericalSemigroup::from_generators(&[shape.a, shape.b])?;
            let note = (spec.family == Family::FamilyI).then_some(FAMILY_I_NOTE);
            Ok(WeierstrassData::Full { semigroup, note })
        }
        Family::IntermediateNoncenter => Ok(WeierstrassData::Partial(PartialMembership {
            theorem_members: vec![],
            proof_members: vec![2 * q / p, q, q + 1],
            tag: ASSERTED,
        })),
        Family::FamilyII => {
            let d = spec.d.expect("d") as u64;
            let members = vec![q / p, (q - 1) / d];
            Ok(WeierstrassData::Partial(PartialMembership {
                theorem_members: members.clone(),
                proof_members: members,
                tag: ASSERTED,
            }))
        }
        Family::FamilyIII => {
            let d = spec.d.expect("d") as u64;
            Ok(WeierstrassData::Partial(PartialMembership {
                theorem_members: vec![2 * (q - 1) / d, q - 1],
                proof_members: vec![(q - 1) / d, q / p],
                tag: ASSERTED,
            }))
        }
    }
}

/// Basis of `L(m P_inf)`: monomials `x^i y^j` with `j < deg_y` and pole
/// order at most `m`, sorted by pole order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialBasis {
    pub m: u64,
    pub monomials: Vec<[u64; 2]>,
    pub pole_orders: Vec<u64>,
}

impl MonomialBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

pub fn rr_basis_for_shape(shape: &CabShape, m: u64) -> MonomialBasis {
    let mut terms: Vec<(u64, [u64; 2])> = Vec::new();
    for j in 0..shape.deg_y {
        let base = j * shape.b;
        if base > m {
            break;
        }
        for i in 0..=(m - base) / shape.a {
            terms.push((i * shape.a + base, [i, j]));
        }
    }
    terms.sort_unstable();
    MonomialBasis {
        m,
        monomials: terms.iter().map(|t| t.1).collect(),
        pole_orders: terms.iter().map(|t| t.0).collect(),
    }
}

pub fn rr_basis(spec: &CurveSpec, m: u64) -> Result<MonomialBasis, RrError> {
    Ok(rr_basis_for_shape(&cab_parameters(spec)?, m))
}
