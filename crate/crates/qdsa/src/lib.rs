//! qDSA: compact signatures from Kummer varieties.
//!
//! A Schnorr-style signature scheme that never needs a group law: keys
//! and commitments live on the Kummer variety (the quotient of a curve's
//! Jacobian by +-1), scalar multiplication is a Montgomery-style ladder,
//! and verification replaces point recovery with a quadratic relation in
//! the coordinates of the transmitted commitment. Public keys are 32
//! bytes, signatures 64. The same key pair does Diffie-Hellman for free.
//!
//! Two instantiations are provided:
//!
//! * [`Curve25519`]: the x-line of Curve25519 (genus 1).
//! * [`GaudrySchost`]: the fast Kummer surface of the Gaudry-Schost
//!   genus-2 curve over GF(2^127 - 1), with 32-byte point compression.
//!
//! ```
//! use qdsa::{KeyPair, GaudrySchost, verify};
//!
//! let kp = KeyPair::<GaudrySchost>::from_seed(&[7u8; 32]).unwrap();
//! let sig = kp.sign(b"hello");
//! assert!(verify::<GaudrySchost>(kp.public_key(), b"hello", &sig));
//! ```
//!
//! The `examples/` directory walks through each capability: signing,
//! key exchange, point compression, and the verification relation
//! itself. A small `qdsa` binary wraps keygen/sign/verify/dh for the
//! command line.
//!
//! Everything secret-dependent (ladders, scalar arithmetic, swaps) runs
//! a fixed instruction schedule with masked selects. Field inversions
//! and square roots are Fermat powerings, not gcds.

pub mod codec;
pub mod field;
pub mod kummer;
pub mod mont;
pub mod opcount;
pub mod params;
pub mod reference;
pub mod scalar;
pub mod shake;
pub mod sign;

pub use sign::{verify, Curve25519, Error, GaudrySchost, KeyPair, Scheme};
