//! Keys, signatures, and Diffie-Hellman over a Kummer variety.
//!
//! The scheme is Schnorr with the group replaced by its quotient under
//! +-1: commitments and public keys are compressed Kummer points, and
//! verification tests the two-point relation +-R = +-([s]P + [h]Q)
//! through the biquadratic forms instead of recomputing R exactly.
//!
//! Both instantiations go through the [`Scheme`] trait: [`Curve25519`]
//! for the x-line of the genus-1 curve, [`GaudrySchost`] for the genus-2
//! fast Kummer surface.
//!
//! A caveat that callers must take seriously: a keypair here signs and
//! runs Diffie-Hellman with the same secret. That joint use is part of
//! this design and safe within this scheme, but exporting the same key
//! into some other X25519-based protocol voids that analysis.

use crate::codec;
use crate::field::Fe25519;
use crate::kummer;
use crate::mont;
use crate::params;
use crate::scalar::{Order, Scalar, N25519};
use crate::shake::{hash_plus, hash_to_scalar, shake512};
use std::fmt;
use std::marker::PhantomData;

/// Key generation failure: the derived public point has a zero
/// coordinate and has no valid wire encoding. Practically unreachable
/// for random seeds; callers should pick a fresh seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Error {
    DegenerateKey,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegenerateKey => write!(f, "derived public key is degenerate"),
        }
    }
}

impl std::error::Error for Error {}

/// One instantiation of the scheme: a Kummer variety with a ladder, a
/// 32-byte point compression, and the verification relation.
pub trait Scheme {
    /// Short identifier used by the CLI.
    const NAME: &'static str;

    fn order() -> &'static Order;

    /// Pre-ladder adjustment of the raw key scalar bytes.
    fn clamp(d1: &mut [u8; 32]);

    fn derive_pk(d1: &[u8; 32]) -> Result<[u8; 32], Error>;

    /// Compressed [r]P for the commitment half of a signature.
    fn commit(r: &Scalar) -> [u8; 32];

    /// Whether +-R = +-([s]P + [h]Q) for the transmitted R and public
    /// key Q. False also covers undecodable points.
    fn verify_relation(s: &Scalar, h: &Scalar, pk: &[u8; 32], rbar: &[u8; 32]) -> bool;

    fn dh(d1: &[u8; 32], peer: &[u8; 32]) -> Option<[u8; 32]>;
}

/// The x-line of Curve25519.
pub struct Curve25519;

/// The fast Kummer surface of the Gaudry-Schost curve.
pub struct GaudrySchost;

impl Scheme for Curve25519 {
    const NAME: &'static str = "c25519";

    fn order() -> &'static Order {
        &N25519
    }

    fn clamp(d1: &mut [u8; 32]) {
        mont::clamp(d1);
    }

    fn derive_pk(d1: &[u8; 32]) -> Result<[u8; 32], Error> {
        let pk = mont::compress(&mont::ladder_bytes(d1, &mont::base()));
        // x = 0 encodes both the identity and the order-2 point; a key
        // there would be rejected by every verifier, so fail fast
        if pk == [0u8; 32] {
            return Err(Error::DegenerateKey);
        }
        Ok(pk)
    }

    fn commit(r: &Scalar) -> [u8; 32] {
        mont::compress(&mont::ladder(r, &mont::base()))
    }

    fn verify_relation(s: &Scalar, h: &Scalar, pk: &[u8; 32], rbar: &[u8; 32]) -> bool {
        let pk_x = Fe25519::decode(pk);
        if pk_x.is_zero() {
            return false;
        }
        let t0 = mont::ladder(s, &mont::base());
        let t1 = mont::ladder(h, &mont::MontPoint::from_affine_x(pk_x));
        let r = mont::decompress(rbar);
        mont::check(&t0, &t1, &r)
    }

    fn dh(d1: &[u8; 32], peer: &[u8; 32]) -> Option<[u8; 32]> {
        let x = Fe25519::decode(peer);
        if x.is_zero() {
            return None;
        }
        let p = mont::MontPoint::from_affine_x(x);
        Some(mont::compress(&mont::ladder_bytes(d1, &p)))
    }
}

impl Scheme for GaudrySchost {
    const NAME: &'static str = "gs2";

    fn order() -> &'static Order {
        &params::N_GS
    }

    fn clamp(_d1: &mut [u8; 32]) {}

    fn derive_pk(d1: &[u8; 32]) -> Result<[u8; 32], Error> {
        let p = kummer::ladder_base_bytes(d1);
        // verifiers must wrap the public point, which needs all four
        // coordinates nonzero
        if p.has_zero_coordinate() {
            return Err(Error::DegenerateKey);
        }
        Ok(codec::compress(&p))
    }

    fn commit(r: &Scalar) -> [u8; 32] {
        codec::compress(&kummer::ladder_base(r))
    }

    fn verify_relation(s: &Scalar, h: &Scalar, pk: &[u8; 32], rbar: &[u8; 32]) -> bool {
        let q = match codec::decompress(pk) {
            Some(q) => q,
            None => return false,
        };
        let w = match kummer::wrap(&q) {
            Some(w) => w,
            None => return false,
        };
        let t0 = kummer::ladder_base(s);
        let t1 = kummer::ladder_wrapped(h, &q, &w);
        let r = match codec::decompress(rbar) {
            Some(r) => r,
            None => return false,
        };
        kummer::check(&t0, &t1, &r)
    }

    fn dh(d1: &[u8; 32], peer: &[u8; 32]) -> Option<[u8; 32]> {
        let p = codec::decompress(peer)?;
        let w = kummer::wrap(&p)?;
        Some(codec::compress(&kummer::ladder_wrapped_bytes(d1, &p, &w)))
    }
}

/// A signing (and Diffie-Hellman) key pair, expanded from a 32-byte seed.
pub struct KeyPair<S: Scheme> {
    pk: [u8; 32],
    d1: [u8; 32],
    d2: [u8; 32],
    _scheme: PhantomData<S>,
}

impl<S: Scheme> KeyPair<S> {
    /// Expands `seed` into (d', d'') and derives the public key. The seed
    /// is the entire secret; store nothing else.
    pub fn from_seed(seed: &[u8; 32]) -> Result<KeyPair<S>, Error> {
        let expanded = shake512(seed);
        let mut d1 = [0u8; 32];
        let mut d2 = [0u8; 32];
        d1.copy_from_slice(&expanded[..32]);
        d2.copy_from_slice(&expanded[32..]);
        S::clamp(&mut d1);
        let pk = S::derive_pk(&d1)?;
        Ok(KeyPair {
            pk,
            d1,
            d2,
            _scheme: PhantomData,
        })
    }

    pub fn public_key(&self) -> &[u8; 32] {
        &self.pk
    }

    /// Deterministic signature: 32-byte compressed commitment, then the
    /// 32-byte response scalar.
    pub fn sign(&self, msg: &[u8]) -> [u8; 64] {
        let order = S::order();
        let r = hash_to_scalar(&[&self.d2, msg], order);
        let rbar = S::commit(&r);
        let h = hash_plus(&[&rbar, &self.pk, msg], order);
        let d = order.reduce256(&self.d1);
        let s = order.sub(&r, &order.mul(&h, &d));
        let mut sig = [0u8; 64];
        sig[..32].copy_from_slice(&rbar);
        sig[32..].copy_from_slice(&s.encode());
        sig
    }

    /// Shared secret with a peer public key, `None` for invalid peers.
    pub fn dh(&self, peer: &[u8; 32]) -> Option<[u8; 32]> {
        S::dh(&self.d1, peer)
    }
}

/// Verifies a 64-byte signature over `msg` under a 32-byte public key.
pub fn verify<S: Scheme>(pk: &[u8; 32], msg: &[u8], sig: &[u8; 64]) -> bool {
    let rbar: &[u8; 32] = sig[..32].try_into().unwrap();
    let s_bytes: &[u8; 32] = sig[32..].try_into().unwrap();
    // non-canonical s is rejected outright, not reduced
    let s = match S::order().decode(s_bytes) {
        Some(s) => s,
        None => return false,
    };
    let h = hash_plus(&[rbar, pk, msg], S::order());
    S::verify_relation(&s, &h, pk, rbar)
}
