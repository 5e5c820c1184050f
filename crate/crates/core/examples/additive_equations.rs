//! Solving `y^q + y = c` over F_{q^2} as an F_p-linear system.

use hermquot::gf::{make_field, AdditiveOperator, AdditiveSolver};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = make_field(5, 4)?;
    let one = f.one();
    // y^25 + y
    let op = AdditiveOperator::new(vec![(one, 25), (one, 1)]);
    let solver = AdditiveSolver::new(&f, &op);
    println!("rank {} over F_5, kernel of size {}", solver.rank(), solver.kernel().len());

    for text in ["1,0,0,0", "0,1,0,0", "2,3,0,1"] {
        let c = f.parse(text)?;
        let ys = solver.solve(&f, c);
        println!("y^25 + y = {text}: {} solutions", ys.len());
        for y in ys.iter().take(3) {
            assert_eq!(op.eval(&f, *y), c);
        }
    }
    Ok(())
}
