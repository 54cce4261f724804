use proptest::prelude::*;
use scsi_core::rs::{add_words, hamming_distance, weight};
use scsi_core::{Field, Gf, RsCode, Syndrome};

fn word(n: usize) -> impl Strategy<Value = Vec<Gf>> {
    prop::collection::vec((0u16..16).prop_map(Gf), n)
}

fn rs15(k: usize, b: u32) -> RsCode {
    RsCode::new(&Field::with_degree(4).unwrap(), 15, k, b).unwrap()
}

proptest! {
    #[test]
    fn syndrome_is_linear(x in word(15), y in word(15), b in 0u32..15) {
        let code = rs15(9, b);
        let sx = code.syndrome(&x).unwrap();
        let sy = code.syndrome(&y).unwrap();
        let sum: Vec<Gf> = sx.values().iter().zip(sy.values()).map(|(&a, &b)| a + b).collect();
        prop_assert_eq!(code.syndrome(&add_words(&x, &y)).unwrap(), Syndrome(sum));
    }

    #[test]
    fn representative_lies_in_the_coset(x in word(15), k in 1usize..15, b in 0u32..4) {
        let code = rs15(k, b);
        let s = code.syndrome(&x).unwrap();
        let a = code.coset_representative(&s).unwrap();
        prop_assert_eq!(code.syndrome(&a).unwrap(), s);
        // x - a is a codeword
        prop_assert!(code.is_codeword(&add_words(&x, &a)).unwrap());
        // support inside the n - k pivot columns
        prop_assert!(weight(&a) <= 15 - k);
    }

    #[test]
    fn messages_encode_to_codewords(u in prop::collection::vec((0u16..16).prop_map(Gf), 5), b in 0u32..15) {
        let code = rs15(5, b);
        let c = code.encode_message(&u).unwrap();
        prop_assert!(code.is_codeword(&c).unwrap());
    }
}

#[test]
fn distinct_codewords_are_at_least_d_min_apart() {
    let code = RsCode::narrow_sense(&Field::with_degree(3).unwrap(), 7, 3).unwrap();
    let mut words = Vec::new();
    for v in 0..512u16 {
        let u = [Gf(v & 7), Gf((v >> 3) & 7), Gf(v >> 6)];
        words.push(code.encode_message(&u).unwrap());
    }
    let mut min = usize::MAX;
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            min = min.min(hamming_distance(&words[i], &words[j]));
        }
    }
    assert_eq!(min, code.d_min());
}

#[test]
fn length_must_divide_group_order() {
    let f = Field::with_degree(4).unwrap();
    assert!(RsCode::narrow_sense(&f, 5, 2).is_ok());
    assert!(RsCode::narrow_sense(&f, 7, 2).is_err());
    assert!(RsCode::narrow_sense(&f, 15, 0).is_err());
    assert!(RsCode::narrow_sense(&f, 15, 16).is_err());
}
