//! Syndromes of an RS(15, 11) code: codewords have zero syndrome, and the
//! coset representative shares the syndrome of the word it stands for.

use scsi_core::rs::{add_words, weight};
use scsi_core::{Field, Gf, RsCode};

fn show(w: &[Gf]) -> String {
    w.iter().map(|s| format!("{:x}", s.value())).collect()
}

fn main() -> scsi_core::Result<()> {
    let code = RsCode::narrow_sense(&Field::with_degree(4)?, 15, 11)?;
    println!("RS({}, {}) d_min = {}", code.n(), code.k(), code.d_min());

    let c = code.encode_message(&(1..=11).map(Gf).collect::<Vec<_>>())?;
    println!("codeword  {}  syndrome zero: {}", show(&c), code.syndrome(&c)?.is_zero());

    let x: Vec<Gf> = [3, 14, 1, 5, 9, 2, 6, 5, 3, 5, 8, 9, 7, 9, 3].map(Gf).to_vec();
    let s = code.syndrome(&x)?;
    let a = code.coset_representative(&s)?;
    println!("source    {}  syndrome {:?}", show(&x), s.values());
    println!("coset rep {}  weight {}", show(&a), weight(&a));
    println!("x - a is a codeword: {}", code.is_codeword(&add_words(&x, &a))?);
    Ok(())
}
