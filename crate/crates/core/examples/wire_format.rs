//! Serialize a message, inspect the header and read it back.

use scsi_core::codec::{pack_symbols, read_message, unpack_symbols, write_message};
use scsi_core::{scsi_encode, CrcSpec, Field, Gf, RsCode};

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn main() -> scsi_core::Result<()> {
    let code = RsCode::narrow_sense(&Field::with_degree(4)?, 15, 11)?;
    let x: Vec<Gf> = [3, 14, 1, 5, 9, 2, 6, 5, 3, 5, 8, 9, 7, 9, 3].map(Gf).to_vec();

    let source = pack_symbols(&x, 4);
    println!("source file ({} bytes): {}", source.len(), hex(&source));
    assert_eq!(unpack_symbols(&source, 4, 15)?, x);

    let msg = scsi_encode(&code, &CrcSpec::CRC12, &x)?;
    let bytes = write_message(&code, &CrcSpec::CRC12, &msg);
    println!("message ({} bytes)", bytes.len());
    println!("  header  {}", hex(&bytes[..27]));
    println!("  payload {}", hex(&bytes[27..]));

    let (header, back) = read_message(&bytes)?;
    println!("{header:?}");
    assert_eq!(back, msg);

    let mut bad = bytes.clone();
    bad.pop();
    println!("truncated: {}", read_message(&bad).unwrap_err());
    Ok(())
}
