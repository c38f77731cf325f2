//! Arithmetic mod the Mersenne prime 2^127 - 1.
//!
//! A single u128 holds the canonical residue; reduction is two folds of the
//! high bit plus one masked subtraction, since 2^127 = 1 in this field. The
//! byte codec is 16 bytes little-endian with one quirk: the all-ones payload
//! (the prime itself) is the only non-canonical 127-bit string, and decoding
//! rejects it so compressed points have unique encodings.

use crate::opcount;
use std::ops::{Add, Mul, Neg, Sub};

const P: u128 = (1 << 127) - 1;

/// An element of the field with p = 2^127 - 1, always canonical.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fe127(u128);

/// Folds an arbitrary u128 into [0, p).
fn norm(t: u128) -> u128 {
    let t = (t & P) + (t >> 127);
    let t = (t & P) + (t >> 127);
    csub(t)
}

/// Subtracts p when t >= p, branch-free; expects t <= p.
fn csub(t: u128) -> u128 {
    let (d, under) = t.overflowing_sub(P);
    let keep = (under as u128).wrapping_neg();
    (t & keep) | (d & !keep)
}

impl Fe127 {
    pub const ZERO: Fe127 = Fe127(0);
    pub const ONE: Fe127 = Fe127(1);

    /// Constructs from a raw residue known to be canonical (compile-time
    /// parameter tables).
    pub(crate) const fn from_raw(v: u128) -> Fe127 {
        assert!(v < P);
        Fe127(v)
    }

    pub fn from_u128(v: u128) -> Fe127 {
        Fe127(norm(v))
    }

    pub fn from_i64(v: i64) -> Fe127 {
        let m = Fe127(v.unsigned_abs() as u128);
        if v < 0 {
            -&m
        } else {
            m
        }
    }

    /// Parses 16 little-endian bytes; `None` for the single non-canonical
    /// payload (all 127 low bits set). Flag bits above bit 126 are the
    /// caller's business and must be stripped first.
    pub fn decode(bytes: &[u8; 16]) -> Option<Fe127> {
        let v = u128::from_le_bytes(*bytes);
        if v >= P {
            None
        } else {
            Some(Fe127(v))
        }
    }

    pub fn encode(&self) -> [u8; 16] {
        self.0.to_le_bytes()
    }

    pub fn square(&self) -> Fe127 {
        opcount::fe127_sqr();
        let (a0, a1) = (self.0 as u64 as u128, self.0 >> 64);
        let ll = a0 * a0;
        let hh = a1 * a1;
        let mid = (a0 * a1) << 1;
        Fe127(fold256(ll, mid, hh))
    }

    /// Multiplication by a small public constant.
    pub fn mul_small(&self, c: u32) -> Fe127 {
        opcount::fe127_mul_small();
        let lo = (self.0 as u64 as u128) * c as u128;
        let hi = (self.0 >> 64) * c as u128;
        Fe127(fold256(lo, hi, 0))
    }

    /// `mul_small` with the sign folded in; the sign of a parameter-table
    /// constant is public.
    pub fn mul_small_signed(&self, c: i32) -> Fe127 {
        let m = self.mul_small(c.unsigned_abs());
        if c < 0 {
            -&m
        } else {
            m
        }
    }

    fn pow2k(&self, k: u32) -> Fe127 {
        let mut t = *self;
        for _ in 0..k {
            t = t.square();
        }
        t
    }

    /// Fermat inversion a^(p-2); maps 0 to 0.
    pub fn invert(&self) -> Fe127 {
        // p - 2 = 2^127 - 3 = (2^125 - 1) * 4 + 1
        let t1 = *self;
        let t2 = &t1.pow2k(1) * &t1;
        let t4 = &t2.pow2k(2) * &t2;
        let t5 = &t4.pow2k(1) * &t1;
        let t10 = &t5.pow2k(5) * &t5;
        let t20 = &t10.pow2k(10) * &t10;
        let t40 = &t20.pow2k(20) * &t20;
        let t80 = &t40.pow2k(40) * &t40;
        let t120 = &t80.pow2k(40) * &t40;
        let t125 = &t120.pow2k(5) * &t5;
        &t125.pow2k(2) * &t1
    }

    /// Square root with a requested sign bit. p = 3 mod 4, so the candidate
    /// root is a^((p+1)/4) = a^(2^125). Returns `None` for non-residues and
    /// for the unsatisfiable request sqrt(0) with sign 1.
    pub fn sqrt(&self, sign: u8) -> Option<Fe127> {
        let mut r = self.pow2k(125);
        if r.square() != *self {
            return None;
        }
        if r.is_zero() {
            return if sign == 0 { Some(r) } else { None };
        }
        if r.sign_bit() != sign {
            r = -&r;
        }
        Some(r)
    }

    pub fn is_zero(&self) -> bool {
        self.0 == 0
    }

    /// LSB of the canonical representative.
    pub fn sign_bit(&self) -> u8 {
        (self.0 & 1) as u8
    }

    /// Exchanges `a` and `b` when `bit` is 1, via masking.
    pub fn cswap(a: &mut Fe127, b: &mut Fe127, bit: u8) {
        let mask = (bit as u128).wrapping_neg();
        let t = mask & (a.0 ^ b.0);
        a.0 ^= t;
        b.0 ^= t;
    }
}

/// Reduces lo + mid*2^64 + hi*2^128 using 2^128 = 2.
fn fold256(lo: u128, mid: u128, hi: u128) -> u128 {
    let low = lo.wrapping_add(mid << 64);
    let carry = (low < lo) as u128;
    let high = hi + (mid >> 64) + carry;
    norm((low & P) + (low >> 127) + (high << 1))
}

impl Add for &Fe127 {
    type Output = Fe127;

    fn add(self, rhs: &Fe127) -> Fe127 {
        Fe127(norm(self.0 + rhs.0))
    }
}

impl Sub for &Fe127 {
    type Output = Fe127;

    fn sub(self, rhs: &Fe127) -> Fe127 {
        Fe127(norm(self.0 + (P - rhs.0)))
    }
}

impl Neg for &Fe127 {
    type Output = Fe127;

    fn neg(self) -> Fe127 {
        Fe127(csub(P - self.0))
    }
}

impl Mul for &Fe127 {
    type Output = Fe127;

    fn mul(self, rhs: &Fe127) -> Fe127 {
        opcount::fe127_mul();
        let (a0, a1) = (self.0 as u64 as u128, self.0 >> 64);
        let (b0, b1) = (rhs.0 as u64 as u128, rhs.0 >> 64);
        let ll = a0 * b0;
        let hh = a1 * b1;
        let mid = a0 * b1 + a1 * b0;
        Fe127(fold256(ll, mid, hh))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p() -> BigUint {
        (BigUint::from(1u8) << 127) - 1u8
    }

    fn to_big(fe: &Fe127) -> BigUint {
        BigUint::from_bytes_le(&fe.encode())
    }

    fn random_fe(rng: &mut ChaCha8Rng) -> Fe127 {
        loop {
            let mut b = [0u8; 16];
            rng.fill(&mut b);
            b[15] &= 0x7f;
            if let Some(fe) = Fe127::decode(&b) {
                return fe;
            }
        }
    }

    #[test]
    fn matches_wide_integer_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x127);
        let p = p();
        for _ in 0..10_000 {
            let a = random_fe(&mut rng);
            let b = random_fe(&mut rng);
            let (ab, bb) = (to_big(&a), to_big(&b));
            assert_eq!(to_big(&(&a + &b)), (&ab + &bb) % &p);
            assert_eq!(to_big(&(&a - &b)), (&p + &ab - &bb) % &p);
            assert_eq!(to_big(&(&a * &b)), (&ab * &bb) % &p);
            assert_eq!(to_big(&a.square()), (&ab * &ab) % &p);
            let c: u32 = rng.gen_range(1..1 << 16);
            assert_eq!(to_big(&a.mul_small(c)), (&ab * c) % &p);
            assert_eq!(to_big(&-&a), (&p - &ab) % &p);
        }
    }

    #[test]
    fn inversion() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1e7);
        for _ in 0..1_000 {
            let a = random_fe(&mut rng);
            if a.is_zero() {
                continue;
            }
            assert_eq!(&a * &a.invert(), Fe127::ONE);
        }
        assert_eq!(Fe127::ONE.invert(), Fe127::ONE);
        assert_eq!(Fe127::ZERO.invert(), Fe127::ZERO);
    }

    #[test]
    fn minus_one_squares_to_one() {
        let m1 = Fe127::from_u128(P - 1);
        assert_eq!(&m1 * &m1, Fe127::ONE);
    }

    #[test]
    fn sqrt_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5c);
        for _ in 0..1_000 {
            let r = random_fe(&mut rng);
            let sq = r.square();
            let back = sq.sqrt(r.sign_bit()).expect("square must have a root");
            assert_eq!(back, r);
        }
        assert_eq!(Fe127::ZERO.sqrt(0), Some(Fe127::ZERO));
        assert_eq!(Fe127::ZERO.sqrt(1), None);
    }

    #[test]
    fn sqrt_of_two_is_two_to_the_64() {
        // 2^128 = 2 in this field, so 2^64 squares to 2.
        let r64 = Fe127::from_u128(1 << 64);
        assert_eq!(r64.square(), Fe127::from_u128(2));
        assert_eq!(Fe127::from_u128(2).sqrt(r64.sign_bit()), Some(r64));
    }

    #[test]
    fn sqrt_rejects_non_residues() {
        // Euler's criterion via an independent bignum ladder: the smallest
        // non-residue n has n^((p-1)/2) = p - 1.
        let p = p();
        let exp = (&p - 1u8) >> 1;
        let mut n = 2u32;
        loop {
            if BigUint::from(n).modpow(&exp, &p) == &p - 1u8 {
                break;
            }
            n += 1;
        }
        let nr = Fe127::from_u128(n as u128);
        assert_eq!(nr.sqrt(0), None);
        assert_eq!(nr.sqrt(1), None);
    }

    #[test]
    fn codec_rejects_the_prime() {
        let mut all_ones = [0xffu8; 16];
        all_ones[15] = 0x7f;
        assert_eq!(Fe127::decode(&all_ones), None);
        let mut rng = ChaCha8Rng::seed_from_u64(0xdec);
        for _ in 0..1_000 {
            let a = random_fe(&mut rng);
            assert_eq!(Fe127::decode(&a.encode()), Some(a));
        }
    }

    #[test]
    fn sign_bits() {
        assert_eq!(Fe127::ZERO.sign_bit(), 0);
        assert_eq!(Fe127::ONE.sign_bit(), 1);
        let mut rng = ChaCha8Rng::seed_from_u64(0x5b);
        for _ in 0..200 {
            let a = random_fe(&mut rng);
            if a.is_zero() {
                continue;
            }
            assert_eq!((-&a).sign_bit(), 1 - a.sign_bit());
        }
    }

    #[test]
    fn signed_small_constants() {
        let a = Fe127::from_u128(7);
        assert_eq!(a.mul_small_signed(-3), Fe127::from_i64(-21));
        assert_eq!(Fe127::from_i64(-1), -&Fe127::ONE);
        assert_eq!(&a.mul_small_signed(-3) + &a.mul_small(3), Fe127::ZERO);
    }

    #[test]
    fn cswap_masks() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x54b);
        let orig_a = random_fe(&mut rng);
        let orig_b = random_fe(&mut rng);
        let (mut a, mut b) = (orig_a, orig_b);
        Fe127::cswap(&mut a, &mut b, 0);
        assert!(a == orig_a && b == orig_b);
        Fe127::cswap(&mut a, &mut b, 1);
        assert!(a == orig_b && b == orig_a);
        Fe127::cswap(&mut a, &mut b, 1);
        assert!(a == orig_a && b == orig_b);
    }
}
