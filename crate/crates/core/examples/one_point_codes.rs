//! A one-point code on a small quotient curve: dimension, dual, bounds and
//! the exact minimum distance.

use hermquot::agc::{brute_min_distance, build_cl, designed_distances, gkl_bound_cl, DEFAULT_BRUTE_BUDGET};
use hermquot::curves::{build_curve, enumerate_points, Budget, Family};
use hermquot::numsg::NumericalSemigroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = build_curve(Family::FamilyI, 5, 2, Some(13), false)?;
    let budget = Budget::default();
    let pts: Vec<_> = enumerate_points(&spec, &budget)?.points.into_iter().take(20).collect();
    let s = NumericalSemigroup::from_generators(&[5, 2])?;

    for gamma in [0, 1, 2, 3] {
        let code = build_cl(&spec, gamma, Some(pts.clone()), &budget)?;
        let d = brute_min_distance(&code, DEFAULT_BRUTE_BUDGET)?;
        let designed = designed_distances(code.n as u64, gamma, spec.genus());
        let gkl = gkl_bound_cl(&s, gamma, code.n as u64).ok().map(|c| c.value);
        println!(
            "gamma {gamma}: [n={}, k={}, d={}], dual k={}, designed {}, gap-run bound {:?}",
            code.n,
            code.k,
            d.value,
            code.dual().k,
            designed.d_cl,
            gkl
        );
    }
    Ok(())
}
