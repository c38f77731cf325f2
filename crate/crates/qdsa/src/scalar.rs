//! Arithmetic mod the prime subgroup orders.
//!
//! The two instantiations share one 256-bit scalar type; an [`Order`] value
//! carries the modulus and does the reducing. Everything on the signing path
//! (the 512-bit hash reduction, multiply, subtract) runs a fixed schedule
//! with masked conditional subtractions, since `r` and `h*d'` involve secret
//! data. Verification-side scalars are public, but they take the same code
//! path anyway.

// Limb loops below index several arrays in lockstep; the range form is the
// honest shape for that.
#![allow(clippy::needless_range_loop)]

/// A scalar in [0, N), canonical for whichever order produced it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Scalar([u64; 4]);

/// A prime subgroup order N, with arithmetic mod N.
#[derive(Clone, Copy, Debug)]
pub struct Order([u64; 4]);

/// The Curve25519 prime subgroup order,
/// N = 2^252 + 27742317777372353535851937790883648493.
pub static N25519: Order = Order::new([
    0x5812631a5cf5d3ed,
    0x14def9dea2f79cd6,
    0x0000000000000000,
    0x1000000000000000,
]);

impl Scalar {
    pub const ZERO: Scalar = Scalar([0; 4]);

    /// Serializes as 32 little-endian bytes.
    pub fn encode(&self) -> [u8; 32] {
        let mut out = [0u8; 32];
        for (chunk, limb) in out.chunks_exact_mut(8).zip(self.0) {
            chunk.copy_from_slice(&limb.to_le_bytes());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }

    /// Parity of the canonical representative.
    pub fn lsb(&self) -> u8 {
        (self.0[0] & 1) as u8
    }
}

impl Order {
    pub const fn new(limbs: [u64; 4]) -> Order {
        Order(limbs)
    }

    /// Parses 32 little-endian bytes, rejecting anything not below N. The
    /// strict range check is what keeps signatures non-malleable.
    pub fn decode(&self, bytes: &[u8; 32]) -> Option<Scalar> {
        let l = load4(bytes);
        let mut borrow = 0u64;
        for i in 0..4 {
            let (t, b1) = l[i].overflowing_sub(self.0[i]);
            let (_, b2) = t.overflowing_sub(borrow);
            borrow = (b1 | b2) as u64;
        }
        if borrow == 1 {
            Some(Scalar(l))
        } else {
            None
        }
    }

    /// Little-endian 512-bit integer reduced mod N.
    pub fn reduce512(&self, bytes: &[u8; 64]) -> Scalar {
        let mut w = [0u64; 8];
        for (limb, chunk) in w.iter_mut().zip(bytes.chunks_exact(8)) {
            *limb = u64::from_le_bytes(chunk.try_into().unwrap());
        }
        self.reduce_wide(&w)
    }

    /// Convenience for 256-bit inputs (the raw d' entering s).
    pub fn reduce256(&self, bytes: &[u8; 32]) -> Scalar {
        let mut wide = [0u8; 64];
        wide[..32].copy_from_slice(bytes);
        self.reduce512(&wide)
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let mut r = [0u64; 4];
        let mut carry = 0u64;
        for i in 0..4 {
            let t = a.0[i] as u128 + b.0[i] as u128 + carry as u128;
            r[i] = t as u64;
            carry = (t >> 64) as u64;
        }
        // N > 2^249, so a + b < 2N < 2^256 and one subtraction settles it.
        Scalar(self.csub(r))
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let mut r = [0u64; 4];
        let mut borrow = 0u64;
        for i in 0..4 {
            let (t, b1) = a.0[i].overflowing_sub(b.0[i]);
            let (t, b2) = t.overflowing_sub(borrow);
            r[i] = t;
            borrow = (b1 | b2) as u64;
        }
        // fold N back in when the subtraction underflowed
        let mask = borrow.wrapping_neg();
        let mut carry = 0u64;
        for i in 0..4 {
            let t = r[i] as u128 + (self.0[i] & mask) as u128 + carry as u128;
            r[i] = t as u64;
            carry = (t >> 64) as u64;
        }
        Scalar(r)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.sub(&Scalar::ZERO, a)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let mut w = [0u64; 8];
        for i in 0..4 {
            let mut carry = 0u128;
            for j in 0..4 {
                let t = w[i + j] as u128 + a.0[i] as u128 * b.0[j] as u128 + carry;
                w[i + j] = t as u64;
                carry = t >> 64;
            }
            w[i + 4] = carry as u64;
        }
        self.reduce_wide(&w)
    }

    /// Bit-serial reduction: 512 shift-and-subtract rounds, each with one
    /// masked conditional subtraction. Slow and steady; the caller hashes
    /// far less often than it multiplies field elements.
    fn reduce_wide(&self, w: &[u64; 8]) -> Scalar {
        let mut r = [0u64; 4];
        for i in (0..512).rev() {
            let bit = (w[i / 64] >> (i % 64)) & 1;
            let mut carry = bit;
            for limb in r.iter_mut() {
                let top = *limb >> 63;
                *limb = (*limb << 1) | carry;
                carry = top;
            }
            // r was below N < 2^255, so the shift cannot carry out
            debug_assert_eq!(carry, 0);
            r = self.csub(r);
        }
        Scalar(r)
    }

    /// Subtracts N once when the value is >= N, branch-free.
    fn csub(&self, r: [u64; 4]) -> [u64; 4] {
        let mut d = [0u64; 4];
        let mut borrow = 0u64;
        for i in 0..4 {
            let (t, b1) = r[i].overflowing_sub(self.0[i]);
            let (t, b2) = t.overflowing_sub(borrow);
            d[i] = t;
            borrow = (b1 | b2) as u64;
        }
        let keep = borrow.wrapping_neg();
        let mut out = [0u64; 4];
        for i in 0..4 {
            out[i] = (r[i] & keep) | (d[i] & !keep);
        }
        out
    }

    /// The order as 32 little-endian bytes (parameter self-checks).
    pub fn modulus_bytes(&self) -> [u8; 32] {
        Scalar(self.0).encode()
    }
}

fn load4(bytes: &[u8; 32]) -> [u64; 4] {
    let mut l = [0u64; 4];
    for (limb, chunk) in l.iter_mut().zip(bytes.chunks_exact(8)) {
        *limb = u64::from_le_bytes(chunk.try_into().unwrap());
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::N_GS;
    use num_bigint::BigUint;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn orders() -> [(&'static Order, BigUint); 2] {
        [
            (&N25519, BigUint::from_bytes_le(&N25519.modulus_bytes())),
            (&N_GS, BigUint::from_bytes_le(&N_GS.modulus_bytes())),
        ]
    }

    fn to_big(s: &Scalar) -> BigUint {
        BigUint::from_bytes_le(&s.encode())
    }

    #[test]
    fn reduce512_matches_bignum_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x512);
        for (order, n) in orders() {
            for _ in 0..1_000 {
                let mut wide = [0u8; 64];
                rng.fill(&mut wide[..]);
                let got = order.reduce512(&wide);
                assert_eq!(to_big(&got), BigUint::from_bytes_le(&wide) % &n);
            }
            assert!(order.reduce512(&[0u8; 64]).is_zero());
            // N itself reduces to zero
            let mut enc_n = [0u8; 64];
            enc_n[..32].copy_from_slice(&order.modulus_bytes());
            assert!(order.reduce512(&enc_n).is_zero());
        }
    }

    #[test]
    fn ring_arith_matches_bignum_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xa27);
        for (order, n) in orders() {
            for _ in 0..1_000 {
                let mut wide = [0u8; 64];
                rng.fill(&mut wide[..]);
                let a = order.reduce512(&wide);
                rng.fill(&mut wide[..]);
                let b = order.reduce512(&wide);
                let (ab, bb) = (to_big(&a), to_big(&b));
                assert_eq!(to_big(&order.add(&a, &b)), (&ab + &bb) % &n);
                assert_eq!(to_big(&order.sub(&a, &b)), (&n + &ab - &bb) % &n);
                assert_eq!(to_big(&order.mul(&a, &b)), (&ab * &bb) % &n);
                assert_eq!(to_big(&order.neg(&a)), (&n - &ab) % &n);
            }
        }
    }

    #[test]
    fn sub_and_neg_edges() {
        for (order, _) in orders() {
            let one = order.decode(&{
                let mut b = [0u8; 32];
                b[0] = 1;
                b
            })
            .unwrap();
            let minus_one = order.sub(&Scalar::ZERO, &one);
            // N - 1 plus 1 wraps to zero
            assert!(order.add(&minus_one, &one).is_zero());
            assert!(order.add(&order.neg(&minus_one), &minus_one).is_zero());
        }
    }

    #[test]
    fn strict_decode() {
        for (order, n) in orders() {
            assert!(order.decode(&order.modulus_bytes()).is_none());
            let nm1 = (&n - 1u8).to_bytes_le();
            let mut b = [0u8; 32];
            b[..nm1.len()].copy_from_slice(&nm1);
            assert!(order.decode(&b).is_some());
            let mut one = [0u8; 32];
            one[0] = 1;
            assert_eq!(to_big(&order.decode(&one).unwrap()), BigUint::from(1u8));
            assert!(order.decode(&[0xff; 32]).is_none());
        }
    }

    #[test]
    fn decode_encode_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x30b);
        for (order, _) in orders() {
            for _ in 0..500 {
                let mut wide = [0u8; 64];
                rng.fill(&mut wide[..]);
                let s = order.reduce512(&wide);
                assert_eq!(order.decode(&s.encode()), Some(s));
                // reduce512 of an in-range encoding is the identity
                let mut padded = [0u8; 64];
                padded[..32].copy_from_slice(&s.encode());
                assert_eq!(order.reduce512(&padded), s);
            }
        }
    }

    #[test]
    fn lsb_flips_under_negation() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x15b);
        assert_eq!(Scalar::ZERO.lsb(), 0);
        for (order, n) in orders() {
            // N odd: N - 2 is odd
            let nm2 = order.reduce512(&{
                let mut wide = [0u8; 64];
                let raw = (&n - 2u8).to_bytes_le();
                wide[..raw.len()].copy_from_slice(&raw);
                wide
            });
            assert_eq!(nm2.lsb(), 1);
            for _ in 0..200 {
                let mut wide = [0u8; 64];
                rng.fill(&mut wide[..]);
                let x = order.reduce512(&wide);
                if x.is_zero() {
                    continue;
                }
                assert_eq!(order.neg(&x).lsb(), 1 - x.lsb());
            }
        }
    }

    #[test]
    fn linear_relation_round_trip() {
        // (r - h*d) + h*d = r, the signing identity
        let mut rng = ChaCha8Rng::seed_from_u64(0x51e);
        for (order, _) in orders() {
            for _ in 0..200 {
                let mut wide = [0u8; 64];
                rng.fill(&mut wide[..]);
                let r = order.reduce512(&wide);
                rng.fill(&mut wide[..]);
                let h = order.reduce512(&wide);
                rng.fill(&mut wide[..]);
                let d = order.reduce512(&wide);
                let s = order.sub(&r, &order.mul(&h, &d));
                assert_eq!(order.add(&s, &order.mul(&h, &d)), r);
            }
        }
    }
}
