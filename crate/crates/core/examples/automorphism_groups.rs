//! The three order-dp groups fixing the point at infinity, and the
//! closed-form powers of their order-p generators.

use hermquot::curves::{build_dp_group, orbits, PresetCase};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (case, p, h, d) in [(PresetCase::I, 7, 2, 5), (PresetCase::II, 11, 2, 5), (PresetCase::III, 11, 1, 5)] {
        let g = build_dp_group(case, p, h, d)?;
        println!(
            "case {case:?} (p={p}, h={h}, d={d}): order {}, abelian {}, t^-1 s t = s^{:?}",
            g.order(),
            g.is_abelian(),
            g.conjugation_exponent()
        );
        let m = &g.model;
        let mut iterated = m.identity();
        for i in 1..=p as u64 {
            iterated = m.compose(&g.s, &iterated)?;
            assert_eq!(iterated, m.closed_form_power(&g.s, i)?);
        }
        println!("  closed-form powers of s agree with composition up to s^{p}");
    }

    let g = build_dp_group(PresetCase::I, 5, 1, 3)?;
    let pts = g.model.points();
    let part = orbits(&g, &pts)?;
    let mut sizes = part.sizes();
    sizes.sort_unstable();
    sizes.dedup();
    println!("orbits on the 125 affine points of q = 5: {} orbits, sizes {:?}", part.orbits.len(), sizes);
    Ok(())
}
