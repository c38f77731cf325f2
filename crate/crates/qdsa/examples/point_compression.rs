//! 32-byte compression of genus-2 Kummer surface points.
//!
//! A point of the surface sits in P^3, so a naive encoding is 64 bytes
//! (four coordinates, one normalized away). The codec gets to 32 bytes:
//! two field elements of 127 bits plus two spare bits, one marking the
//! normalization in use and one selecting between the two roots of a
//! quadratic that pins down the remaining coordinate.
//!
//! Run with: cargo run --example point_compression

use qdsa::codec::{compress, decompress};
use qdsa::kummer::{ladder_base, surface_eval};
use qdsa::params::{zero_point, N_GS};

fn main() {
    // Take a reproducible point: [12345]B for the fixed generator B.
    let mut bytes = [0u8; 32];
    bytes[..2].copy_from_slice(&12345u16.to_le_bytes());
    let n = N_GS.decode(&bytes).unwrap();
    let p = ladder_base(&n);

    println!("point [12345]B, projective coordinates:");
    for (name, c) in ["X1", "X2", "X3", "X4"].iter().zip(&p.x) {
        println!("  {name} = {}", hex::encode(c.encode()));
    }
    assert!(surface_eval(&p).is_zero());
    println!("surface equation: satisfied");

    let wire = compress(&p);
    println!("compressed ({} bytes): {}", wire.len(), hex::encode(wire));
    println!("  tau   = {}", (wire[15] >> 7) & 1);
    println!("  sigma = {}", (wire[31] >> 7) & 1);

    // Decompression returns the same projective point.
    let q = decompress(&wire).expect("round trip");
    assert!(p.proj_eq(&q));
    assert!(surface_eval(&q).is_zero());
    println!("decompressed point matches");

    // The identity has the all-zero encoding.
    assert_eq!(compress(&zero_point()), [0u8; 32]);
    println!("identity compresses to 32 zero bytes");

    // Strings that decode to no surface point are rejected; this one
    // requests the square root of a non-residue.
    let mut bad = [0u8; 32];
    bad[0] = 1;
    bad[15] = 0x80;
    bad[16] = 2;
    assert!(decompress(&bad).is_none());
    println!("non-residue wire rejected");
}
