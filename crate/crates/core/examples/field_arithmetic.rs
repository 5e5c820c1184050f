//! Arithmetic in F_{7^2}: the modulus, a primitive element, Frobenius and
//! traces, and the constant omega used by the minus-form equations.

use hermquot::gf::make_field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = make_field(7, 2)?;
    println!("F_{} with modulus coefficients {:?}", f.order(), f.modulus());

    let g = f.primitive_element();
    println!("primitive element {} of order {:?}", f.format(g), f.multiplicative_order(g));

    let a = f.parse("3,5")?;
    let b = f.parse("6,1")?;
    println!("a + b = {}", f.format(f.add(a, b)));
    println!("a * b = {}", f.format(f.mul(a, b)));
    println!("a / b = {}", f.format(f.div(a, b)?));
    println!("a^7 = {} (Frobenius)", f.format(f.frobenius(a, 1)));
    println!("Tr(a) = {}", f.format(f.trace_to_prime(a)));

    let omega = f.find_omega()?;
    println!("omega = {}, omega^7 + omega = {}", f.format(omega), f.format(f.add(f.pow(omega, 7), omega)));
    Ok(())
}
