//! Point counts of Hermitian curves against the Hasse-Weil bound.

use hermquot::curves::{audit, build_curve, Budget, Family};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (p, h) in [(5, 1), (7, 1), (11, 1), (5, 2)] {
        let spec = build_curve(Family::Hermitian, p, h, None, false)?;
        let (_, report) = audit(&spec, &Budget::default())?;
        println!(
            "q = {:>2}: genus {:>3}, {} affine + 1 at infinity = {} (bound {}), pass {}",
            spec.q,
            spec.genus(),
            report.affine,
            report.affine + report.deficit,
            report.expected_total,
            report.pass
        );
    }
    Ok(())
}
