//! Key generation, signing and verification with both instantiations.
//!
//! Run with: cargo run --example sign_verify

use qdsa::{verify, Curve25519, GaudrySchost, KeyPair, Scheme};
use rand::RngCore;

fn demo<S: Scheme>() {
    println!("== {} ==", S::NAME);

    // The 32-byte seed is the entire secret; everything else is
    // re-derived from it on load.
    let mut seed = [0u8; 32];
    rand::rngs::OsRng.fill_bytes(&mut seed);
    let kp = KeyPair::<S>::from_seed(&seed).expect("degenerate keys are practically impossible");
    println!("public key   {}", hex::encode(kp.public_key()));

    let msg = b"attack at dawn";
    let sig = kp.sign(msg);
    println!("signature    {}", hex::encode(sig));
    println!("verify       {}", verify::<S>(kp.public_key(), msg, &sig));

    // Signing is deterministic: same key and message, same signature.
    assert_eq!(sig, kp.sign(msg));

    // Any bit flip in the message or signature must be rejected.
    let mut bad_sig = sig;
    bad_sig[17] ^= 0x04;
    println!("tampered sig {}", verify::<S>(kp.public_key(), msg, &bad_sig));
    println!("tampered msg {}", verify::<S>(kp.public_key(), b"attack at dusk", &sig));
    println!();
}

fn main() {
    demo::<GaudrySchost>();
    demo::<Curve25519>();
}
