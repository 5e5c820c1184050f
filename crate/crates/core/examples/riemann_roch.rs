//! Monomial bases of L(m P_inf) on C_ab models.

use hermquot::curves::{build_curve, Family};
use hermquot::rrspace::{cab_parameters, rr_basis, weierstrass_semigroup, WeierstrassData};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = build_curve(Family::FamilyI, 7, 2, Some(5), false)?;
    let shape = cab_parameters(&spec)?;
    println!("C_ab shape a = {}, b = {}", shape.a, shape.b);
    for m in [0, 7, 13, 20, 53, 54] {
        let basis = rr_basis(&spec, m)?;
        println!("l({m} P_inf) = {:<3} monomials {:?}", basis.len(), basis.monomials);
    }

    let iii = build_curve(Family::FamilyIII, 11, 1, Some(5), false)?;
    if let WeierstrassData::Partial(part) = weierstrass_semigroup(&iii)? {
        println!("family III: members {:?} ({})", part.theorem_members, part.tag);
    }
    Ok(())
}
