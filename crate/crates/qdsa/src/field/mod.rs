//! Constant-time arithmetic in the two base fields.
//!
//! Everything upstream works over one of two pseudo-Mersenne primes: the
//! elliptic instantiation lives over 2^255 - 19 and the genus-2 Kummer
//! surface over 2^127 - 1. Both element types keep the same contract: public
//! operations return canonical representatives, byte codecs are little-endian,
//! and nothing in the arithmetic branches or indexes memory on secret data.

mod fe127;
mod fe25519;

pub use fe127::Fe127;
pub use fe25519::Fe25519;
