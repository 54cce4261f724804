use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use scsi_core::codec::{
    read_message, scsi_decode_with_representative, unpack_symbols, write_message, WireHeader,
};
use scsi_core::gs::brute_force_list_decode;
use scsi_core::rs::{add_words, hamming_distance};
use scsi_core::{scsi_decode, scsi_encode, CrcSpec, DecodeStatus, Field, Gf, Multiplicity, RsCode};

fn random_word(rng: &mut ChaCha8Rng, n: usize, q: usize) -> Vec<Gf> {
    (0..n).map(|_| Gf(rng.random_range(0..q) as u16)).collect()
}

fn corrupt(rng: &mut ChaCha8Rng, x: &[Gf], weight: usize, q: usize) -> Vec<Gf> {
    let mut y = x.to_vec();
    let mut pos: Vec<usize> = (0..x.len()).collect();
    for i in 0..weight {
        let j = rng.random_range(i..pos.len());
        pos.swap(i, j);
        y[pos[i]] = y[pos[i]] + Gf(rng.random_range(1..q) as u16);
    }
    y
}

fn rs(m: u32, n: usize, k: usize) -> RsCode {
    RsCode::narrow_sense(&Field::with_degree(m).unwrap(), n, k).unwrap()
}

#[test]
fn noiseless_side_information_recovers_at_every_radius() {
    let code = rs(4, 15, 5);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let x = random_word(&mut rng, 15, 16);
    let msg = scsi_encode(&code, &CrcSpec::CRC12, &x).unwrap();
    for tau in 0..=scsi_core::gs::gs_radius(15, 5) {
        let out = scsi_decode(&code, &CrcSpec::CRC12, &msg, &x, tau, Multiplicity::Auto).unwrap();
        assert_eq!(out.status, DecodeStatus::Recovered, "tau {tau}");
        assert_eq!(out.recovered.as_deref(), Some(&x[..]));
    }
}

#[test]
fn codeword_source_has_zero_syndrome() {
    let code = rs(4, 15, 11);
    let c = code.encode_message(&[Gf(1), Gf(2), Gf(3), Gf(4), Gf(5), Gf(6), Gf(7), Gf(8), Gf(9), Gf(10), Gf(11)]).unwrap();
    let msg = scsi_encode(&code, &CrcSpec::CRC12, &c).unwrap();
    assert!(msg.syndrome.is_zero());
    // shifting by a codeword keeps the syndrome; the CRC tells them apart
    let x = random_word(&mut ChaCha8Rng::seed_from_u64(2), 15, 16);
    let a = scsi_encode(&code, &CrcSpec::CRC12, &x).unwrap();
    let b = scsi_encode(&code, &CrcSpec::CRC12, &add_words(&x, &c)).unwrap();
    assert_eq!(a.syndrome, b.syndrome);
    assert_ne!(a.crc, b.crc);
}

#[test]
fn coset_list_matches_exhaustive_search() {
    // RS(15,2), tau = 11: the decoded coset list is exactly the set of coset
    // words within 11 of y
    let code = rs(4, 15, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for trial in 0..12 {
        let x = random_word(&mut rng, 15, 16);
        let y = corrupt(&mut rng, &x, 6 + trial % 6, 16);
        let msg = scsi_encode(&code, &CrcSpec::CRC12, &x).unwrap();
        let out = scsi_decode(&code, &CrcSpec::CRC12, &msg, &y, 11, Multiplicity::Auto).unwrap();
        let a = code.coset_representative(&msg.syndrome).unwrap();
        let mut want: Vec<Vec<Gf>> = brute_force_list_decode(&code, &add_words(&y, &a), 11)
            .unwrap()
            .candidates
            .iter()
            .map(|c| add_words(c, &a))
            .collect();
        let mut got = out.candidates.clone();
        want.sort();
        got.sort();
        assert_eq!(got, want);
        assert!(out.candidates.contains(&x));
        assert_eq!(out.status, DecodeStatus::Recovered);
        assert_eq!(out.recovered.as_deref(), Some(&x[..]));
    }
}

#[test]
fn any_coset_representative_gives_the_same_list() {
    let code = rs(4, 15, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..10 {
        let x = random_word(&mut rng, 15, 16);
        let y = corrupt(&mut rng, &x, 8, 16);
        let msg = scsi_encode(&code, &CrcSpec::CRC12, &x).unwrap();
        let base = scsi_decode(&code, &CrcSpec::CRC12, &msg, &y, 9, Multiplicity::Auto).unwrap();
        let a = code.coset_representative(&msg.syndrome).unwrap();
        let c = code.encode_message(&random_word(&mut rng, 3, 16)).unwrap();
        let shifted = add_words(&a, &c);
        let other = scsi_decode_with_representative(&code, &CrcSpec::CRC12, &msg, &y, 9, Multiplicity::Auto, &shifted)
            .unwrap();
        assert_eq!(base, other);
        // the source word itself is a representative too
        let own = scsi_decode_with_representative(&code, &CrcSpec::CRC12, &msg, &y, 9, Multiplicity::Auto, &x).unwrap();
        assert_eq!(base, own);
    }
    let x = random_word(&mut rng, 15, 16);
    let msg = scsi_encode(&code, &CrcSpec::CRC12, &x).unwrap();
    // all-ones is a codeword of a narrow-sense code, so flip one symbol instead
    let mut wrong = x.clone();
    wrong[0] = wrong[0] + Gf(1);
    assert!(scsi_decode_with_representative(&code, &CrcSpec::CRC12, &msg, &x, 2, Multiplicity::Auto, &wrong).is_err());
}

#[test]
fn excess_noise_is_reported_not_silently_wrong() {
    let code = rs(4, 15, 5);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let tau = 4;
    for _ in 0..50 {
        let x = random_word(&mut rng, 15, 16);
        let y = corrupt(&mut rng, &x, 12, 16);
        let msg = scsi_encode(&code, &CrcSpec::CRC12, &x).unwrap();
        let out = scsi_decode(&code, &CrcSpec::CRC12, &msg, &y, tau, Multiplicity::Auto).unwrap();
        for c in &out.candidates {
            assert_eq!(code.syndrome(c).unwrap(), msg.syndrome);
            assert!(hamming_distance(c, &y) <= tau);
        }
        // x is too far away to be listed; a match would be a collision
        assert!(!out.candidates.contains(&x));
        assert_ne!(out.status, DecodeStatus::Recovered, "CRC-12 collision in a short run is vanishingly rare");
    }
}

#[test]
fn without_a_crc_several_candidates_are_ambiguous() {
    let code = rs(3, 7, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut ambiguous = 0;
    for _ in 0..40 {
        let x = random_word(&mut rng, 7, 8);
        let y = corrupt(&mut rng, &x, 4, 8);
        let msg = scsi_encode(&code, &CrcSpec::NONE, &x).unwrap();
        let out = scsi_decode(&code, &CrcSpec::NONE, &msg, &y, 4, Multiplicity::Auto).unwrap();
        assert!(out.candidates.contains(&x));
        if out.list_size() > 1 {
            assert_eq!(out.status, DecodeStatus::Ambiguous);
            assert_eq!(out.ambiguous_set, out.candidates);
            ambiguous += 1;
        }
    }
    assert!(ambiguous > 0);
}

#[test]
fn uncertified_fixed_multiplicity_is_an_error() {
    let code = rs(4, 15, 2);
    let x = vec![Gf::ZERO; 15];
    let msg = scsi_encode(&code, &CrcSpec::CRC12, &x).unwrap();
    assert!(scsi_decode(&code, &CrcSpec::CRC12, &msg, &x, 11, Multiplicity::Fixed(3)).is_err());
    assert!(scsi_decode(&code, &CrcSpec::CRC12, &msg, &x, 12, Multiplicity::Auto).is_err());
    assert!(scsi_decode(&code, &CrcSpec::CRC12, &msg, &x[..14], 3, Multiplicity::Auto).is_err());
}

#[test]
fn escalation_reaches_the_full_radius() {
    let code = rs(4, 15, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let x = random_word(&mut rng, 15, 16);
    let y = corrupt(&mut rng, &x, 11, 16);
    let msg = scsi_encode(&code, &CrcSpec::CRC12, &x).unwrap();
    let out = scsi_decode(&code, &CrcSpec::CRC12, &msg, &y, 11, Multiplicity::Escalating).unwrap();
    assert_eq!(out.recovered.as_deref(), Some(&x[..]));
    assert_eq!((out.radius, out.multiplicity), (11, 12));
}

#[test]
fn wire_round_trip_for_several_codes() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for (m, n, k, b, crc) in [
        (4u32, 15usize, 11usize, 1u32, CrcSpec::CRC12),
        (8, 255, 88, 1, CrcSpec::CRC12),
        (3, 7, 2, 0, CrcSpec::NONE),
        (5, 31, 7, 4, CrcSpec::new(0b1011, 3).unwrap()),
    ] {
        let code = RsCode::new(&Field::with_degree(m).unwrap(), n, k, b).unwrap();
        let x = random_word(&mut rng, n, 1 << m);
        let msg = scsi_encode(&code, &crc, &x).unwrap();
        let bytes = write_message(&code, &crc, &msg);
        let bits = (n - k) * m as usize + crc.rho() as usize;
        assert_eq!(bytes.len(), 27 + bits.div_ceil(8));
        let (h, back) = read_message(&bytes).unwrap();
        assert_eq!(h, WireHeader::for_code(&code, &crc));
        assert_eq!(back, msg);
    }
}

#[test]
fn malformed_messages_are_rejected() {
    let code = rs(4, 15, 11);
    let msg = scsi_encode(&code, &CrcSpec::CRC12, &[Gf(7); 15]).unwrap();
    let good = write_message(&code, &CrcSpec::CRC12, &msg);
    assert!(read_message(&good[..20]).is_err());
    assert!(read_message(&good[..good.len() - 1]).is_err());
    let mut bad = good.clone();
    bad[0] = b'X';
    assert!(read_message(&bad).is_err());
    let mut bad = good.clone();
    bad[4] = 9;
    assert!(read_message(&bad).is_err());
    let mut bad = good.clone();
    *bad.last_mut().unwrap() |= 0x0F;
    assert!(read_message(&bad).is_err());
    let mut bad = good.clone();
    bad[10] = 20; // k > n
    assert!(read_message(&bad).is_err());
    let mut bad = good;
    bad[19] = 0x0E; // generator without constant term
    assert!(read_message(&bad).is_err());
}

#[test]
fn golden_message_decodes_to_golden_source() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let (h, msg) = read_message(&std::fs::read(dir.join("rs15_11_message.bin")).unwrap()).unwrap();
    let x = unpack_symbols(&std::fs::read(dir.join("rs15_11_source.bin")).unwrap(), h.m, h.n).unwrap();
    let code = h.code().unwrap();
    let out = scsi_decode(&code, &h.crc().unwrap(), &msg, &x, 2, Multiplicity::Auto).unwrap();
    assert_eq!(out.recovered, Some(x));
}
