//! The Hermitian curve, its two order-p quotients and the three families of
//! order-dp quotients, with exact point enumeration and pointwise checks of
//! the quotient maps.

mod automorphism;
pub mod cache;
mod cover;
mod group;
mod points;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{is_prime, make_field, FieldContext, FieldElement, GfError};

pub use automorphism::{Automorphism, Form, HermitianModel};
pub use cover::{model_for, quotient_project, verify_cover, verify_cover_with, CoverReport};
pub use group::{build_dp_group, orbits, GroupPreset, OrbitPartition, PresetCase};
pub use points::{audit, enumerate_points, maximality_audit, AuditMode, AuditReport, Budget, PointSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error("d = {0} is not a prime")]
    DNotPrime(u32),
    #[error("d must differ from the characteristic")]
    DEqualsP,
    #[error("family {family} needs d | {divides} but d = {d}")]
    Divisibility {
        family: Family,
        d: u32,
        divides: &'static str,
    },
    #[error("family {0} needs a parameter d")]
    MissingD(Family),
    #[error("family {0} takes no parameter d")]
    UnexpectedD(Family),
    #[error("h must be at least 1")]
    ZeroH,
    #[error("hypothesis violated in strict mode: {0}")]
    Hypothesis(String),
    #[error("characteristic {0} is not supported (need p odd)")]
    Characteristic(u32),
    #[error("enumeration needs {work} steps, budget is {budget}")]
    BudgetExceeded { work: u64, budget: u64 },
    #[error("affine count {affine} exceeds the Hasse-Weil total {expected}")]
    NegativeDeficit { affine: u64, expected: u64 },
    #[error("point lies on the excluded locus ({0})")]
    ExcludedLocus(&'static str),
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("automorphisms of different canonical forms")]
    FormMismatch,
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("no element of multiplicative order {0}")]
    NoElementOfOrder(u32),
    #[error("group closure grew past {0} elements")]
    ClosureOverflow(usize),
    #[error("cache: {0}")]
    Cache(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "hermitian")]
    Hermitian,
    #[serde(rename = "intermediate-center")]
    IntermediateCenter,
    #[serde(rename = "intermediate-noncenter")]
    IntermediateNoncenter,
    #[serde(rename = "I")]
    FamilyI,
    #[serde(rename = "II")]
    FamilyII,
    #[serde(rename = "III")]
    FamilyIII,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Hermitian => "hermitian",
            Family::IntermediateCenter => "intermediate-center",
            Family::IntermediateNoncenter => "intermediate-noncenter",
            Family::FamilyI => "I",
            Family::FamilyII => "II",
            Family::FamilyIII => "III",
        }
    }

    pub fn needs_d(self) -> bool {
        matches!(self, Family::FamilyI | Family::FamilyII | Family::FamilyIII)
    }

    /// Families whose equation carries the constant omega.
    pub fn uses_omega(self) -> bool {
        matches!(self, Family::IntermediateCenter | Family::FamilyI | Family::FamilyII)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "hermitian" | "h" => Ok(Family::Hermitian),
            "intermediate-center" | "center" => Ok(Family::IntermediateCenter),
            "intermediate-noncenter" | "noncenter" => Ok(Family::IntermediateNoncenter),
            "i" | "1" => Ok(Family::FamilyI),
            "ii" | "2" => Ok(Family::FamilyII),
            "iii" | "3" => Ok(Family::FamilyIII),
            other => Err(format!("unknown family '{other}'")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AffinePoint {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl AffinePoint {
    pub fn new(x: FieldElement, y: FieldElement) -> Self {
        AffinePoint { x, y }
    }
}

/// A validated curve from one of the six families over F_{q^2}.
#[derive(Clone, Debug)]
pub struct CurveSpec {
    pub family: Family,
    pub p: u32,
    pub h: u32,
    pub d: Option<u32>,
    pub q: u64,
    pub field: Arc<FieldContext>,
    pub omega: Option<FieldElement>,
    pub strict: bool,
    /// Hypotheses that permissive mode let through.
    pub warnings: Vec<String>,
    genus: u64,
}

/// `{"family","p","h","d","omega","genus","q"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveDescriptor {
    pub family: Family,
    pub p: u32,
    pub h: u32,
    pub d: Option<u32>,
    pub omega: Option<Vec<u32>>,
    pub genus: u64,
    pub q: u64,
}

pub fn build_curve(family: Family, p: u32, h: u32, d: Option<u32>, strict: bool) -> Result<CurveSpec, CurveError> {
    let field = Arc::new(make_field(p, 2 * h.max(1) as usize)?);
    build_curve_over(family, field, h, d, strict)
}

/// Same as [`build_curve`] but reusing an already constructed F_{q^2}.
pub fn build_curve_over(
    family: Family,
    field: Arc<FieldContext>,
    h: u32,
    d: Option<u32>,
    strict: bool,
) -> Result<CurveSpec, CurveError> {
    let p = field.p();
    if h == 0 {
        return Err(CurveError::ZeroH);
    }
    if field.degree() != 2 * h as usize {
        return Err(GfError::OddDegree(field.degree()).into());
    }
    if p == 2 {
        return Err(CurveError::Characteristic(p));
    }
    let q = (p as u64).pow(h);
    let mut warnings = Vec::new();
    let mut hypothesis = |msg: String| -> Result<(), CurveError> {
        if strict {
            Err(CurveError::Hypothesis(msg))
        } else {
            warnings.push(msg);
            Ok(())
        }
    };
    if p < 5 {
        hypothesis(format!("p = {p} < 5"))?;
    }
    match (family.needs_d(), d) {
        (true, None) => return Err(CurveError::MissingD(family)),
        (false, Some(_)) => return Err(CurveError::UnexpectedD(family)),
        (true, Some(d)) => {
            if !is_prime(d as u64) {
                return Err(CurveError::DNotPrime(d));
            }
            if d == p {
                return Err(CurveError::DEqualsP);
            }
            let ok = match family {
                Family::FamilyI => (q + 1).is_multiple_of(d as u64),
                _ => (p - 1).is_multiple_of(d),
            };
            if !ok {
                let divides = if family == Family::FamilyI { "q+1" } else { "p-1" };
                return Err(CurveError::Divisibility { family, d, divides });
            }
            if family != Family::FamilyI && d == 2 {
                // the quotient maps need 2d | p^i - 1, i.e. d odd
                return Err(CurveError::Hypothesis("d = 2 is not supported for families II and III".into()));
            }
            if d < 5 {
                hypothesis(format!("d = {d} < 5"))?;
            }
        }
        (false, None) => {}
    }
    let omega = if family.uses_omega() { Some(field.find_omega()?) } else { None };
    let genus = genus_formula(family, q, p as u64, d.map(u64::from));
    Ok(CurveSpec {
        family,
        p,
        h,
        d,
        q,
        field,
        omega,
        strict,
        warnings,
        genus,
    })
}

fn genus_formula(family: Family, q: u64, p: u64, d: Option<u64>) -> u64 {
    let exact = |num: u64, den: u64| -> u64 {
        assert_eq!(num % den, 0, "genus formula is not integral");
        num / den
    };
    match (family, d) {
        (Family::Hermitian, _) => exact(q * (q - 1), 2),
        (Family::IntermediateCenter, _) => exact(q * (q / p - 1), 2),
        (Family::IntermediateNoncenter, _) => exact((q / p) * (q - 1), 2),
        (Family::FamilyI, Some(d)) => exact((q + 1 - d) * (q / p - 1), 2 * d),
        (Family::FamilyII, Some(d)) => exact(q * (q - p), 2 * d * p),
        (Family::FamilyIII, Some(d)) => exact(q * (q - 1), 2 * d * p),
        _ => unreachable!("validated at construction"),
    }
}

impl CurveSpec {
    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// `q^2 + 2 g q + 1`.
    pub fn hasse_weil_total(&self) -> u64 {
        self.q * self.q + 2 * self.genus * self.q + 1
    }

    pub fn descriptor(&self) -> CurveDescriptor {
        CurveDescriptor {
            family: self.family,
            p: self.p,
            h: self.h,
            d: self.d,
            omega: self.omega.map(|w| self.field.coeffs(w)),
            genus: self.genus,
            q: self.q,
        }
    }

    fn d_u64(&self) -> u64 {
        self.d.expect("family carries d") as u64
    }

    /// Order of the group the curve is the quotient by (1 for the Hermitian curve).
    pub fn group_order(&self) -> u64 {
        match self.family {
            Family::Hermitian => 1,
            Family::IntermediateCenter | Family::IntermediateNoncenter => self.p as u64,
            _ => self.p as u64 * self.d_u64(),
        }
    }

    /// Total degree of the plane model used for enumeration.
    pub fn total_degree(&self) -> u64 {
        let q = self.q;
        let p = self.p as u64;
        let top = q / p;
        match self.family {
            Family::Hermitian | Family::IntermediateCenter => q + 1,
            Family::IntermediateNoncenter => q.max(2 * top),
            Family::FamilyI => top.max((q + 1) / self.d_u64()),
            Family::FamilyII => {
                let d = self.d_u64();
                ((q - 1) / d).max(2 * (top - 1) / d + top)
            }
            Family::FamilyIII => {
                let d = self.d_u64();
                (2 * (q - 1) / d).max(q + 2 * (top - 1) / d)
            }
        }
    }

    /// Value of the defining polynomial at `pt`. Family III uses the
    /// denominator-free form `Y^(2(q-1)/d) + X^(q-1) - X^q (sum_i Y^((p^i-1)/d))^2`.
    pub fn equation_eval(&self, pt: AffinePoint) -> FieldElement {
        let f = &*self.field;
        let (x, y) = (pt.x, pt.y);
        let q = self.q;
        match self.family {
            Family::Hermitian => f.sub(f.add(f.pow(y, q), y), f.pow(x, q + 1)),
            Family::IntermediateCenter => {
                let w = self.omega.expect("omega");
                f.add(f.trace(y, self.h), f.mul(w, f.pow(x, q + 1)))
            }
            Family::IntermediateNoncenter => {
                let tr = f.trace(x, self.h);
                let half = f.inv(f.from_int(2)).expect("p odd");
                f.add(f.add(f.pow(y, q), y), f.mul(half, f.mul(tr, tr)))
            }
            Family::FamilyI => {
                let w = self.omega.expect("omega");
                f.add(f.trace(y, self.h), f.mul(w, f.pow(x, (q + 1) / self.d_u64())))
            }
            Family::FamilyII => {
                let w = self.omega.expect("omega");
                let d = self.d_u64();
                let lhs = f.mul(w, f.pow(x, (q - 1) / d));
                f.sub(lhs, family_ii_a(self, x, y))
            }
            Family::FamilyIII => {
                let d = self.d_u64();
                let s = family_iii_s(self, y);
                let head = f.add(f.pow(y, 2 * (q - 1) / d), f.pow(x, q - 1));
                f.sub(head, f.mul(f.pow(x, q), f.mul(s, s)))
            }
        }
    }

    pub fn on_curve(&self, pt: AffinePoint) -> bool {
        self.equation_eval(pt).is_zero()
    }
}

/// `A(X, Y) = sum_{i<h} X^(2(p^i - 1)/d) Y^(p^i)`.
pub(crate) fn family_ii_a(spec: &CurveSpec, x: FieldElement, y: FieldElement) -> FieldElement {
    let f = &*spec.field;
    let d = spec.d_u64();
    let p = spec.p as u64;
    (0..spec.h).fold(f.zero(), |acc, i| {
        let pi = p.pow(i);
        let coeff = f.pow(x, 2 * (pi - 1) / d);
        f.add(acc, f.mul(coeff, f.frobenius(y, i)))
    })
}

/// `sum_{i<h} Y^((p^i - 1)/d)`.
pub(crate) fn family_iii_s(spec: &CurveSpec, y: FieldElement) -> FieldElement {
    let f = &*spec.field;
    let d = spec.d_u64();
    let p = spec.p as u64;
    (0..spec.h).fold(f.zero(), |acc, i| f.add(acc, f.pow(y, (p.pow(i) - 1) / d)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_checks_divisibility() {
        assert!(build_curve(Family::FamilyI, 7, 2, Some(5), false).is_ok());
        let spec = build_curve(Family::FamilyI, 5, 3, Some(3), false).unwrap();
        assert_eq!(spec.warnings, vec!["d = 3 < 5".to_string()]);
        assert!(matches!(
            build_curve(Family::FamilyI, 5, 3, Some(3), true),
            Err(CurveError::Hypothesis(_))
        ));
        assert!(matches!(
            build_curve(Family::FamilyII, 7, 2, Some(5), false),
            Err(CurveError::Divisibility { d: 5, .. })
        ));
        assert_eq!(build_curve(Family::FamilyI, 7, 2, Some(7), false).unwrap_err(), CurveError::DEqualsP);
        assert_eq!(build_curve(Family::FamilyI, 7, 2, Some(25), false).unwrap_err(), CurveError::DNotPrime(25));
        assert_eq!(
            build_curve(Family::FamilyI, 7, 2, None, false).unwrap_err(),
            CurveError::MissingD(Family::FamilyI)
        );
        assert_eq!(
            build_curve(Family::Hermitian, 7, 1, Some(5), false).unwrap_err(),
            CurveError::UnexpectedD(Family::Hermitian)
        );
    }

    #[test]
    fn genus_values() {
        let g = |fam, p, h, d| build_curve(fam, p, h, d, false).unwrap().genus();
        assert_eq!(g(Family::FamilyI, 7, 2, Some(5)), 27);
        assert_eq!(g(Family::FamilyI, 5, 3, Some(3)), 492);
        assert_eq!(g(Family::FamilyIII, 11, 1, Some(5)), 1);
        assert_eq!(g(Family::FamilyII, 11, 2, Some(5)), 121);
        assert_eq!(g(Family::Hermitian, 5, 1, None), 10);
        assert_eq!(g(Family::IntermediateCenter, 7, 2, None), 147);
        assert_eq!(g(Family::IntermediateNoncenter, 7, 2, None), 168);
    }

    #[test]
    fn origin_on_families_i_and_ii() {
        for spec in [
            build_curve(Family::FamilyI, 7, 2, Some(5), false).unwrap(),
            build_curve(Family::FamilyII, 11, 2, Some(5), false).unwrap(),
        ] {
            let o = AffinePoint::new(spec.field.zero(), spec.field.zero());
            assert!(spec.equation_eval(o).is_zero());
        }
    }

    #[test]
    fn family_names_parse() {
        for fam in [
            Family::Hermitian,
            Family::IntermediateCenter,
            Family::IntermediateNoncenter,
            Family::FamilyI,
            Family::FamilyII,
            Family::FamilyIII,
        ] {
            assert_eq!(fam.name().parse::<Family>().unwrap(), fam);
        }
        assert!("IV".parse::<Family>().is_err());
    }
}
