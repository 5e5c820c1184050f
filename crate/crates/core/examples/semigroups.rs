//! Gaps, Frobenius numbers and telescopic sequences.

use hermquot::numsg::{is_telescopic, NumericalSemigroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = NumericalSemigroup::from_generators(&[7, 10])?;
    println!("<7,10>: genus {}, Frobenius {}", s.genus(), s.frobenius());
    println!("  gaps {:?}", s.gaps());
    println!("  runs {:?}", s.gap_runs());

    let big = NumericalSemigroup::from_generators(&[25, 42])?;
    println!("<25,42>: genus {}, Frobenius {}", big.genus(), big.frobenius());

    for seq in [[14u64, 49, 50], [4, 6, 9], [6, 10, 15]] {
        let t = is_telescopic(&seq)?;
        println!("{seq:?}: telescopic {}, l_g {:?}, g {:?}", t.telescopic, t.l_g, t.g);
    }
    Ok(())
}
