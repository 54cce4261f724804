//! GF(2^4) arithmetic: the generator's powers, inverses and a polynomial
//! evaluation.

use scsi_core::{Field, Gf};

fn main() -> scsi_core::Result<()> {
    let f = Field::with_degree(4)?;
    println!("GF(16), modulus {:#x}, generator {:?}", f.modulus(), f.generator());

    let alpha = f.generator();
    let powers: Vec<u16> = (0..15).map(|e| f.exp(e).value()).collect();
    println!("alpha^0..alpha^14 = {powers:?}");

    for v in [1u16, 2, 7, 15] {
        let a = Gf(v);
        let inv = f.inv(a)?;
        println!("{v:>2} * {:>2} = {}", inv.value(), f.mul(a, inv).value());
    }
    println!("inverting zero: {}", f.inv(Gf::ZERO).unwrap_err());

    // 1 + x + x^3 at x = alpha
    let p = [Gf(1), Gf(1), Gf(0), Gf(1)];
    println!("p(alpha) = {}", f.poly_eval(&p, alpha).value());
    Ok(())
}
