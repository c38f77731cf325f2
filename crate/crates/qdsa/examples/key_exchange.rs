//! Diffie-Hellman with the same key pairs that sign.
//!
//! Every keypair supports both operations: the public key is a point on
//! the Kummer variety, and the ladder that signs also multiplies peer
//! points. This joint use is part of the design; the one rule is to keep
//! such keys inside this scheme rather than exporting them to other
//! x25519-based protocols.
//!
//! Run with: cargo run --example key_exchange

use qdsa::{verify, GaudrySchost, KeyPair, Scheme};
use rand::RngCore;

fn keypair<S: Scheme>() -> KeyPair<S> {
    let mut seed = [0u8; 32];
    rand::rngs::OsRng.fill_bytes(&mut seed);
    KeyPair::from_seed(&seed).expect("degenerate keys are practically impossible")
}

fn main() {
    let alice = keypair::<GaudrySchost>();
    let bob = keypair::<GaudrySchost>();
    println!("alice pk  {}", hex::encode(alice.public_key()));
    println!("bob pk    {}", hex::encode(bob.public_key()));

    // Both sides derive the same 32-byte secret from the other's key.
    let k_alice = alice.dh(bob.public_key()).expect("valid peer key");
    let k_bob = bob.dh(alice.public_key()).expect("valid peer key");
    assert_eq!(k_alice, k_bob);
    println!("shared    {}", hex::encode(k_alice));

    // Authenticate the exchange with the very same keys: each side signs
    // the transcript of both public keys.
    let mut transcript = Vec::new();
    transcript.extend_from_slice(alice.public_key());
    transcript.extend_from_slice(bob.public_key());
    let sig_a = alice.sign(&transcript);
    let sig_b = bob.sign(&transcript);
    assert!(verify::<GaudrySchost>(alice.public_key(), &transcript, &sig_a));
    assert!(verify::<GaudrySchost>(bob.public_key(), &transcript, &sig_b));
    println!("transcript signatures verify");

    // Invalid peer keys are rejected rather than silently processed.
    // This wire asks for the square root of a non-residue.
    let mut junk = [0u8; 32];
    junk[0] = 1;
    junk[15] = 0x80;
    junk[16] = 2;
    assert!(alice.dh(&junk).is_none());
    println!("invalid peer key rejected");
}
