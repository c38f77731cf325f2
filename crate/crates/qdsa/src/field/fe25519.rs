//! Arithmetic mod 2^255 - 19 with unsaturated 51-bit limbs.
//!
//! An element is five u64 limbs, each held below 2^52 between operations so
//! that products fit comfortably in the u128 accumulators of `mul`. Values
//! are canonicalized only at the byte boundary: `encode` freezes to the
//! unique representative below the prime, and all comparisons go through it.

use crate::opcount;
use std::ops::{Add, Mul, Sub};

const MASK: u64 = (1 << 51) - 1;

/// 16*p in limb form, added before subtraction so limbs never underflow.
const SUB_PAD: [u64; 5] = [
    0x7ffffffffffed0,
    0x7ffffffffffff0,
    0x7ffffffffffff0,
    0x7ffffffffffff0,
    0x7ffffffffffff0,
];

/// An element of the field with p = 2^255 - 19.
#[derive(Clone, Copy, Debug)]
pub struct Fe25519([u64; 5]);

impl Fe25519 {
    pub const ZERO: Fe25519 = Fe25519([0; 5]);
    pub const ONE: Fe25519 = Fe25519([1, 0, 0, 0, 0]);

    pub const fn from_u64(v: u64) -> Fe25519 {
        Fe25519([v & MASK, v >> 51, 0, 0, 0])
    }

    /// Parses 32 little-endian bytes. Bit 255 is masked off and the value
    /// reduced, so every byte string decodes (x25519 convention).
    pub fn decode(bytes: &[u8; 32]) -> Fe25519 {
        let load = |r: &[u8]| u64::from_le_bytes(r.try_into().unwrap());
        let l = [
            load(&bytes[0..8]) & MASK,
            (load(&bytes[6..14]) >> 3) & MASK,
            (load(&bytes[12..20]) >> 6) & MASK,
            (load(&bytes[19..27]) >> 1) & MASK,
            (load(&bytes[24..32]) >> 12) & MASK,
        ];
        Fe25519(Fe25519(l).freeze())
    }

    /// Serializes the canonical representative, little-endian.
    pub fn encode(&self) -> [u8; 32] {
        let l = self.freeze();
        let words = [
            l[0] | (l[1] << 51),
            (l[1] >> 13) | (l[2] << 38),
            (l[2] >> 26) | (l[3] << 25),
            (l[3] >> 39) | (l[4] << 12),
        ];
        let mut out = [0u8; 32];
        for (chunk, w) in out.chunks_exact_mut(8).zip(words) {
            chunk.copy_from_slice(&w.to_le_bytes());
        }
        out
    }

    /// Canonical limbs: value strictly below p, all limbs below 2^51.
    fn freeze(&self) -> [u64; 5] {
        let mut l = self.0;
        // Two carry passes leave the value below 2^255 (the 19-fold after the
        // first pass is tiny and the second absorbs it).
        for _ in 0..2 {
            let mut c = 0u64;
            for limb in l.iter_mut() {
                *limb += c;
                c = *limb >> 51;
                *limb &= MASK;
            }
            l[0] += 19 * c;
        }
        // q = 1 exactly when value >= p, read off as bit 255 of value + 19.
        let mut q = (l[0] + 19) >> 51;
        for limb in &l[1..] {
            q = (limb + q) >> 51;
        }
        // value - q*p = value + 19q - q*2^255; the final mask drops the 2^255.
        l[0] += 19 * q;
        for i in 0..4 {
            l[i + 1] += l[i] >> 51;
            l[i] &= MASK;
        }
        l[4] &= MASK;
        l
    }

    /// One carry pass; keeps limbs below 2^52 given inputs below 2^57.
    fn weak_reduce(mut l: [u64; 5]) -> Fe25519 {
        let mut c = 0u64;
        for limb in l.iter_mut() {
            *limb += c;
            c = *limb >> 51;
            *limb &= MASK;
        }
        l[0] += 19 * c;
        Fe25519(l)
    }

    pub fn square(&self) -> Fe25519 {
        opcount::fe25519_sqr();
        let [a0, a1, a2, a3, a4] = self.0;
        let m = |x: u64, y: u64| x as u128 * y as u128;
        let r0 = m(a0, a0) + 38 * (m(a1, a4) + m(a2, a3));
        let r1 = 2 * m(a0, a1) + 38 * m(a2, a4) + 19 * m(a3, a3);
        let r2 = 2 * m(a0, a2) + m(a1, a1) + 38 * m(a3, a4);
        let r3 = 2 * (m(a0, a3) + m(a1, a2)) + 19 * m(a4, a4);
        let r4 = 2 * (m(a0, a4) + m(a1, a3)) + m(a2, a2);
        Fe25519::carry_wide([r0, r1, r2, r3, r4])
    }

    /// Multiplication by a small public constant.
    pub fn mul_small(&self, c: u32) -> Fe25519 {
        opcount::fe25519_mul_small();
        let w = self.0.map(|l| l as u128 * c as u128);
        Fe25519::carry_wide(w)
    }

    fn carry_wide(mut r: [u128; 5]) -> Fe25519 {
        for i in 0..4 {
            r[i + 1] += r[i] >> 51;
            r[i] &= MASK as u128;
        }
        let c = (r[4] >> 51) as u64;
        let mut l = r.map(|x| (x & MASK as u128) as u64);
        l[0] += 19 * c;
        l[1] += l[0] >> 51;
        l[0] &= MASK;
        Fe25519(l)
    }

    fn pow2k(&self, k: u32) -> Fe25519 {
        let mut t = *self;
        for _ in 0..k {
            t = t.square();
        }
        t
    }

    /// Fermat inversion a^(p-2); maps 0 to 0.
    pub fn invert(&self) -> Fe25519 {
        let z2 = self.square();
        let z9 = &z2.pow2k(2) * self;
        let z11 = &z9 * &z2;
        let z_5_0 = &z11.square() * &z9;
        let z_10_0 = &z_5_0.pow2k(5) * &z_5_0;
        let z_20_0 = &z_10_0.pow2k(10) * &z_10_0;
        let z_40_0 = &z_20_0.pow2k(20) * &z_20_0;
        let z_50_0 = &z_40_0.pow2k(10) * &z_10_0;
        let z_100_0 = &z_50_0.pow2k(50) * &z_50_0;
        let z_200_0 = &z_100_0.pow2k(100) * &z_100_0;
        let z_250_0 = &z_200_0.pow2k(50) * &z_50_0;
        &z_250_0.pow2k(5) * &z11
    }

    pub fn is_zero(&self) -> bool {
        self.encode() == [0u8; 32]
    }

    /// LSB of the canonical representative.
    pub fn sign_bit(&self) -> u8 {
        self.encode()[0] & 1
    }

    /// Exchanges `a` and `b` when `bit` is 1, via masking.
    pub fn cswap(a: &mut Fe25519, b: &mut Fe25519, bit: u8) {
        let mask = (bit as u64).wrapping_neg();
        for i in 0..5 {
            let t = mask & (a.0[i] ^ b.0[i]);
            a.0[i] ^= t;
            b.0[i] ^= t;
        }
    }
}

impl Add for &Fe25519 {
    type Output = Fe25519;

    fn add(self, rhs: &Fe25519) -> Fe25519 {
        let mut l = self.0;
        for (x, y) in l.iter_mut().zip(rhs.0) {
            *x += y;
        }
        Fe25519::weak_reduce(l)
    }
}

impl Sub for &Fe25519 {
    type Output = Fe25519;

    fn sub(self, rhs: &Fe25519) -> Fe25519 {
        let mut l = self.0;
        for i in 0..5 {
            l[i] = l[i] + SUB_PAD[i] - rhs.0[i];
        }
        Fe25519::weak_reduce(l)
    }
}

impl Mul for &Fe25519 {
    type Output = Fe25519;

    fn mul(self, rhs: &Fe25519) -> Fe25519 {
        opcount::fe25519_mul();
        let [a0, a1, a2, a3, a4] = self.0;
        let [b0, b1, b2, b3, b4] = rhs.0;
        let m = |x: u64, y: u64| x as u128 * y as u128;
        let r0 = m(a0, b0) + 19 * (m(a1, b4) + m(a2, b3) + m(a3, b2) + m(a4, b1));
        let r1 = m(a0, b1) + m(a1, b0) + 19 * (m(a2, b4) + m(a3, b3) + m(a4, b2));
        let r2 = m(a0, b2) + m(a1, b1) + m(a2, b0) + 19 * (m(a3, b4) + m(a4, b3));
        let r3 = m(a0, b3) + m(a1, b2) + m(a2, b1) + m(a3, b0) + 19 * m(a4, b4);
        let r4 = m(a0, b4) + m(a1, b3) + m(a2, b2) + m(a3, b1) + m(a4, b0);
        Fe25519::carry_wide([r0, r1, r2, r3, r4])
    }
}

impl PartialEq for Fe25519 {
    fn eq(&self, other: &Fe25519) -> bool {
        self.encode() == other.encode()
    }
}

impl Eq for Fe25519 {}
