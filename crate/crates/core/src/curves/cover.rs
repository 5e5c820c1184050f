use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use super::{AffinePoint, Budget, CurveError, CurveSpec, Family, HermitianModel};

/// The Hermitian model each family is a quotient of: the plus form for
/// Hermitian, IntermediateNoncenter and III; the minus form (with the
/// curve's omega) otherwise.
pub fn model_for(spec: &CurveSpec) -> HermitianModel {
    match spec.family {
        Family::Hermitian | Family::IntermediateNoncenter | Family::FamilyIII => {
            HermitianModel::plus(spec.field.clone(), spec.h)
        }
        _ => HermitianModel::minus(spec.field.clone(), spec.h, spec.omega.expect("omega")),
    }
}

/// Image of a Hermitian point under the composed substitution chain.
///
/// * Center: `(x, y^p - y)`
/// * Noncenter: `(x^p - x, y - x^2/2)`
/// * I: `(x^d, y^p - y)`
/// * II: `(x^d, -(y^p - y)/x^2)`, needs `x != 0`
/// * III: with `xi = x^p - x`, `eta = y - x^2/2`: `(-xi^2/(2 eta), xi^d)`, needs `eta != 0`
pub fn quotient_project(spec: &CurveSpec, pt: AffinePoint) -> Result<AffinePoint, CurveError> {
    let f = &*spec.field;
    let p = spec.p as u64;
    let (x, y) = (pt.x, pt.y);
    let half = || f.inv(f.from_int(2)).expect("p odd");
    let image = match spec.family {
        Family::Hermitian => pt,
        Family::IntermediateCenter => AffinePoint::new(x, f.sub(f.pow(y, p), y)),
        Family::IntermediateNoncenter => {
            let xi = f.sub(f.pow(x, p), x);
            let eta = f.sub(y, f.mul(half(), f.mul(x, x)));
            AffinePoint::new(xi, eta)
        }
        Family::FamilyI => {
            let d = spec.d.expect("d") as u64;
            AffinePoint::new(f.pow(x, d), f.sub(f.pow(y, p), y))
        }
        Family::FamilyII => {
            if x.is_zero() {
                return Err(CurveError::ExcludedLocus("xi = 0"));
            }
            let d = spec.d.expect("d") as u64;
            let eta = f.sub(f.pow(y, p), y);
            let rho = f.neg(f.div(eta, f.mul(x, x))?);
            AffinePoint::new(f.pow(x, d), rho)
        }
        Family::FamilyIII => {
            let xi = f.sub(f.pow(x, p), x);
            let eta = f.sub(y, f.mul(half(), f.mul(x, x)));
            if eta.is_zero() {
                return Err(CurveError::ExcludedLocus("eta = 0"));
            }
            let d = spec.d.expect("d") as u64;
            let iota = f.neg(f.div(f.mul(xi, xi), f.scale(eta, 2))?);
            AffinePoint::new(iota, f.pow(xi, d))
        }
    };
    Ok(image)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub family: Family,
    pub group_order: u64,
    pub hermitian_points: u64,
    pub admissible: u64,
    pub excluded: u64,
    pub violations: u64,
    /// Distinct images.
    pub images: u64,
    /// fiber size -> number of fibers of that size
    pub fiber_histogram: BTreeMap<u64, u64>,
    pub generic_fiber: u64,
    pub exceptional_fibers: u64,
    /// Family III: images with `X = 0` lie on the cleared locus, where the
    /// plane model is singular; they are kept out of the histogram.
    pub cleared_locus_images: u64,
    pub cleared_locus_preimages: u64,
    pub all_fibers_divide: bool,
    pub pass: bool,
}

pub fn verify_cover(spec: &CurveSpec, budget: &Budget) -> Result<CoverReport, CurveError> {
    verify_cover_with(spec, budget, |pt| quotient_project(spec, pt))
}

/// [`verify_cover`] with a caller-supplied projection, for negative controls.
pub fn verify_cover_with<F>(spec: &CurveSpec, budget: &Budget, project: F) -> Result<CoverReport, CurveError>
where
    F: Fn(AffinePoint) -> Result<AffinePoint, CurveError> + Sync,
{
    let size = spec.field.order() as u64;
    if size > budget.max_field {
        return Err(CurveError::BudgetExceeded {
            work: size,
            budget: budget.max_field,
        });
    }
    let model = model_for(spec);
    let points = model.points();
    let projected: Vec<Option<AffinePoint>> = points
        .par_iter()
        .map(|&pt| match project(pt) {
            Ok(img) => Ok(Some(img)),
            Err(CurveError::ExcludedLocus(_)) => Ok(None),
            Err(e) => Err(e),
        })
        .collect::<Result<_, _>>()?;

    let mut fibers: HashMap<AffinePoint, u64> = HashMap::new();
    let mut excluded = 0u64;
    for img in &projected {
        match img {
            Some(img) => *fibers.entry(*img).or_default() += 1,
            None => excluded += 1,
        }
    }
    let violations = fibers
        .par_iter()
        .filter(|(img, _)| !spec.on_curve(**img))
        .map(|(_, &n)| n)
        .sum::<u64>();
    let (mut cleared_locus_images, mut cleared_locus_preimages) = (0u64, 0u64);
    if spec.family == Family::FamilyIII {
        fibers.retain(|img, n| {
            if img.x.is_zero() {
                cleared_locus_images += 1;
                cleared_locus_preimages += *n;
                false
            } else {
                true
            }
        });
    }

    let mut fiber_histogram = BTreeMap::new();
    for &n in fibers.values() {
        *fiber_histogram.entry(n).or_insert(0u64) += 1;
    }
    let group_order = spec.group_order();
    let generic_fiber = fiber_histogram.keys().copied().max().unwrap_or(0);
    let exceptional_fibers = fiber_histogram
        .iter()
        .filter(|(&size, _)| size < generic_fiber)
        .map(|(_, &count)| count)
        .sum();
    let all_fibers_divide = fiber_histogram.keys().all(|&size| group_order.is_multiple_of(size));
    Ok(CoverReport {
        family: spec.family,
        group_order,
        hermitian_points: points.len() as u64,
        admissible: points.len() as u64 - excluded,
        excluded,
        violations,
        images: fibers.len() as u64,
        fiber_histogram,
        generic_fiber,
        exceptional_fibers,
        cleared_locus_images,
        cleared_locus_preimages,
        all_fibers_divide,
        pass: violations == 0 && all_fibers_divide,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::build_curve;

    #[test]
    fn origin_column_of_family_i() {
        let spec = build_curve(Family::FamilyI, 7, 1, Some(2), false).unwrap();
        let f = &*spec.field;
        let model = model_for(&spec);
        for y in f.elements().filter(|&y| f.pow(y, spec.q) == y) {
            let pt = AffinePoint::new(f.zero(), y);
            assert!(model.on_curve(pt));
            let img = quotient_project(&spec, pt).unwrap();
            assert_eq!(img, AffinePoint::new(f.zero(), f.sub(f.pow(y, 7), y)));
            assert!(spec.on_curve(img));
        }
    }

    #[test]
    fn intermediate_covers_have_fibers_of_size_p() {
        for family in [Family::IntermediateCenter, Family::IntermediateNoncenter] {
            let spec = build_curve(family, 5, 2, None, false).unwrap();
            let rep = verify_cover(&spec, &Budget::default()).unwrap();
            assert!(rep.pass, "{family}: {rep:?}");
            assert_eq!(rep.fiber_histogram.keys().copied().collect::<Vec<_>>(), vec![5]);
        }
    }

    #[test]
    fn excluded_locus_is_reported() {
        let spec = build_curve(Family::FamilyII, 11, 1, Some(5), false).unwrap();
        let f = &*spec.field;
        let origin = AffinePoint::new(f.zero(), f.zero());
        assert_eq!(quotient_project(&spec, origin), Err(CurveError::ExcludedLocus("xi = 0")));
        let rep = verify_cover(&spec, &Budget::default()).unwrap();
        assert_eq!(rep.excluded, 11);
        assert!(rep.pass);
    }

    #[test]
    fn broken_projection_is_caught() {
        let spec = build_curve(Family::FamilyI, 5, 2, Some(13), false).unwrap();
        let f = spec.field.clone();
        let rep = verify_cover_with(&spec, &Budget::default(), |pt| {
            Ok(AffinePoint::new(f.add(pt.x, f.one()), pt.y))
        })
        .unwrap();
        assert!(rep.violations > 0);
        assert!(!rep.pass);
    }
}
