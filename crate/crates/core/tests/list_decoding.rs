use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scsi_core::gs::{
    brute_force_list_decode, gs_list_decode, gs_list_decode_with, gs_radius, list_size_bound,
    min_multiplicity_for, Interpolator,
};
use scsi_core::rs::hamming_distance;
use scsi_core::{Field, Gf, RsCode};

fn random_word(rng: &mut ChaCha8Rng, f: &Field, n: usize) -> Vec<Gf> {
    (0..n).map(|_| Gf(rng.random_range(0..f.size()) as u16)).collect()
}

fn random_codeword(rng: &mut ChaCha8Rng, code: &RsCode) -> Vec<Gf> {
    let u = random_word(rng, code.field(), code.k());
    code.encode_message(&u).unwrap()
}

/// Codeword plus errors at `weight` distinct random positions.
fn corrupt(rng: &mut ChaCha8Rng, f: &Field, c: &[Gf], weight: usize) -> Vec<Gf> {
    let mut r = c.to_vec();
    let mut positions: Vec<usize> = (0..c.len()).collect();
    for i in 0..weight {
        let j = rng.random_range(i..positions.len());
        positions.swap(i, j);
        let e = Gf(rng.random_range(1..f.size()) as u16);
        r[positions[i]] = r[positions[i]] + e;
    }
    r
}

#[test]
fn random_words_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (m, n, k, trials) in [(3u32, 7usize, 2usize, 60), (4, 15, 3, 40), (4, 15, 4, 20), (4, 15, 2, 15)] {
        let f = Field::with_degree(m).unwrap();
        let code = RsCode::narrow_sense(&f, n, k).unwrap();
        let tau = gs_radius(n, k);
        let mult = min_multiplicity_for(n, k, tau).unwrap();
        for _ in 0..trials {
            // half near a codeword, half uniform
            let r = if rng.random_bool(0.5) {
                let c = random_codeword(&mut rng, &code);
                let w = rng.random_range(0..=tau);
                corrupt(&mut rng, &f, &c, w)
            } else {
                random_word(&mut rng, &f, n)
            };
            let gs = gs_list_decode(&code, &r, tau, mult).unwrap();
            let bf = brute_force_list_decode(&code, &r, tau).unwrap();
            assert_eq!(gs.candidates, bf.candidates, "RS({n},{k}) r={r:?}");
            assert!(gs.len() <= list_size_bound(n, k, tau, mult));
        }
    }
}

#[test]
fn linear_interpolation_agrees_with_koetter() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (m, n, k) in [(3u32, 7usize, 2usize), (4, 15, 3), (4, 15, 6)] {
        let f = Field::with_degree(m).unwrap();
        let code = RsCode::narrow_sense(&f, n, k).unwrap();
        let tau = gs_radius(n, k);
        let mult = min_multiplicity_for(n, k, tau).unwrap();
        for _ in 0..10 {
            let c = random_codeword(&mut rng, &code);
            let r = corrupt(&mut rng, &f, &c, tau);
            let a = gs_list_decode_with(&code, &r, tau, mult, Interpolator::Koetter).unwrap();
            let b = gs_list_decode_with(&code, &r, tau, mult, Interpolator::Linear).unwrap();
            assert_eq!(a.candidates, b.candidates);
            assert!(a.contains(&c));
        }
    }
}

#[test]
fn word_between_two_codewords_lists_both() {
    // Two RS(15,2) codewords agree in at most one position. Take r equal to
    // c1 on 7 positions and to c2 on the other 8: both lie within 8 <= 11.
    let f = Field::with_degree(4).unwrap();
    let code = RsCode::narrow_sense(&f, 15, 2).unwrap();
    let c1 = code.encode_message(&[Gf(3), Gf(1)]).unwrap();
    let c2 = code.encode_message(&[Gf(12), Gf(7)]).unwrap();
    let r: Vec<Gf> = (0..15).map(|i| if i < 7 { c1[i] } else { c2[i] }).collect();
    assert!(hamming_distance(&r, &c1) <= 8 && hamming_distance(&r, &c2) <= 8);
    let list = gs_list_decode(&code, &r, 11, 12).unwrap();
    assert!(list.contains(&c1) && list.contains(&c2));
    assert_eq!(list.candidates, brute_force_list_decode(&code, &r, 11).unwrap().candidates);
}

#[test]
fn lists_are_monotone_in_radius() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = Field::with_degree(4).unwrap();
    let code = RsCode::narrow_sense(&f, 15, 3).unwrap();
    for _ in 0..10 {
        let r = random_word(&mut rng, &f, 15);
        let mut prev: Option<Vec<Vec<Gf>>> = None;
        for tau in 0..=gs_radius(15, 3) {
            let m = min_multiplicity_for(15, 3, tau).unwrap();
            let list = gs_list_decode(&code, &r, tau, m).unwrap();
            if let Some(p) = prev {
                assert!(p.iter().all(|c| list.contains(c)));
            }
            prev = Some(list.candidates);
        }
    }
}

#[test]
fn sound_at_any_certified_multiplicity() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let f = Field::with_degree(4).unwrap();
    let code = RsCode::narrow_sense(&f, 15, 4).unwrap();
    let tau = 7;
    let m0 = min_multiplicity_for(15, 4, tau).unwrap();
    for mult in m0..m0 + 3 {
        if !scsi_core::gs::certifies(15, 4, tau, mult) {
            continue;
        }
        for _ in 0..5 {
            let r = random_word(&mut rng, &f, 15);
            let list = gs_list_decode(&code, &r, tau, mult).unwrap();
            for c in &list.candidates {
                assert!(code.is_codeword(c).unwrap());
                assert!(hamming_distance(c, &r) <= tau);
            }
        }
    }
}

#[test]
fn nonstandard_offset_decodes() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let f = Field::with_degree(4).unwrap();
    let code = RsCode::new(&f, 15, 3, 5).unwrap();
    let tau = gs_radius(15, 3);
    let m = min_multiplicity_for(15, 3, tau).unwrap();
    for _ in 0..10 {
        let c = random_codeword(&mut rng, &code);
        assert!(code.is_codeword(&c).unwrap());
        let r = corrupt(&mut rng, &f, &c, tau);
        let list = gs_list_decode(&code, &r, tau, m).unwrap();
        assert!(list.contains(&c));
        assert_eq!(list.candidates, brute_force_list_decode(&code, &r, tau).unwrap().candidates);
    }
}
