//! Equations, genera and maximality audits for the quotient families.

use hermquot::curves::{audit, build_curve, Budget, Family};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (Family::IntermediateCenter, 7, 1, None),
        (Family::IntermediateNoncenter, 7, 1, None),
        (Family::FamilyI, 7, 2, Some(5)),
        (Family::FamilyI, 5, 2, Some(13)),
        (Family::FamilyII, 11, 1, Some(5)),
        (Family::FamilyIII, 11, 1, Some(5)),
    ];
    for (family, p, h, d) in cases {
        let spec = build_curve(family, p, h, d, false)?;
        let (set, report) = audit(&spec, &Budget::default())?;
        println!(
            "{:<22} p={p:<2} h={h} d={:<4} genus {:>4}  affine {:>6}  expected {:>6}  deficit {}  {:?}  cleared {}",
            family.name(),
            d.map_or("-".to_string(), |d| d.to_string()),
            spec.genus(),
            report.affine,
            report.expected_total,
            report.deficit,
            report.mode,
            set.cleared_locus.len()
        );
        for w in &spec.warnings {
            println!("  warning: {w}");
        }
    }
    Ok(())
}
