//! Pushes every Hermitian point through the quotient map and checks the
//! image equation and fiber sizes.

use hermquot::curves::{build_curve, verify_cover, Budget, Family};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (family, p, h, d) in [(Family::FamilyI, 5, 2, 13), (Family::FamilyII, 11, 1, 5), (Family::FamilyIII, 11, 1, 5)] {
        let spec = build_curve(family, p, h, Some(d), false)?;
        let r = verify_cover(&spec, &Budget::default())?;
        println!(
            "{family} ({p},{h},{d}): {} admissible, {} excluded, {} violations, fibers {:?}, pass {}",
            r.admissible, r.excluded, r.violations, r.fiber_histogram, r.pass
        );
        if r.cleared_locus_images > 0 {
            println!("  {} images on the cleared locus from {} points", r.cleared_locus_images, r.cleared_locus_preimages);
        }
    }
    Ok(())
}
