//! SHAKE128, fixed at 64 output bytes.
//!
//! Every hash in the scheme is `H: {0,1}* -> {0,1}^512` instantiated as
//! SHAKE128 with 64-byte output, so that is all this module offers. The
//! Keccak-f[1600] permutation is written out directly; pulling in a whole
//! hashing stack for one fixed-shape call did not seem worth it (the test
//! suite still cross-checks against an independent implementation).

use crate::scalar::{Order, Scalar};

const RATE: usize = 168;

const RC: [u64; 24] = [
    0x0000000000000001,
    0x0000000000008082,
    0x800000000000808a,
    0x8000000080008000,
    0x000000000000808b,
    0x0000000080000001,
    0x8000000080008081,
    0x8000000000008009,
    0x000000000000008a,
    0x0000000000000088,
    0x0000000080008009,
    0x000000008000000a,
    0x000000008000808b,
    0x800000000000008b,
    0x8000000000008089,
    0x8000000000008003,
    0x8000000000008002,
    0x8000000000000080,
    0x000000000000800a,
    0x800000008000000a,
    0x8000000080008081,
    0x8000000000008080,
    0x0000000080000001,
    0x8000000080008008,
];

// rho rotation offsets, indexed x + 5y
const ROT: [u32; 25] = [
    0, 1, 62, 28, 27, //
    36, 44, 6, 55, 20, //
    3, 10, 43, 25, 39, //
    41, 45, 15, 21, 8, //
    18, 2, 61, 56, 14,
];

fn keccakf(a: &mut [u64; 25]) {
    for rc in RC {
        // theta
        let mut c = [0u64; 5];
        for x in 0..5 {
            c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
        }
        for x in 0..5 {
            let d = c[(x + 4) % 5] ^ c[(x + 1) % 5].rotate_left(1);
            for y in 0..5 {
                a[x + 5 * y] ^= d;
            }
        }
        // rho + pi
        let mut b = [0u64; 25];
        for x in 0..5 {
            for y in 0..5 {
                b[y + 5 * ((2 * x + 3 * y) % 5)] = a[x + 5 * y].rotate_left(ROT[x + 5 * y]);
            }
        }
        // chi
        for y in 0..5 {
            for x in 0..5 {
                a[x + 5 * y] = b[x + 5 * y] ^ (!b[(x + 1) % 5 + 5 * y] & b[(x + 2) % 5 + 5 * y]);
            }
        }
        // iota
        a[0] ^= rc;
    }
}

/// Incremental SHAKE128 absorber.
pub struct Shake128 {
    state: [u64; 25],
    pos: usize,
}

impl Shake128 {
    pub fn new() -> Shake128 {
        Shake128 {
            state: [0; 25],
            pos: 0,
        }
    }

    fn xor_byte(&mut self, byte: u8) {
        self.state[self.pos / 8] ^= (byte as u64) << (8 * (self.pos % 8));
        self.pos += 1;
        if self.pos == RATE {
            keccakf(&mut self.state);
            self.pos = 0;
        }
    }

    pub fn update(&mut self, data: &[u8]) -> &mut Self {
        for &byte in data {
            self.xor_byte(byte);
        }
        self
    }

    /// Applies the SHAKE padding and squeezes 64 bytes.
    pub fn finalize64(mut self) -> [u8; 64] {
        self.state[self.pos / 8] ^= 0x1fu64 << (8 * (self.pos % 8));
        self.state[(RATE - 1) / 8] ^= 0x80u64 << (8 * ((RATE - 1) % 8));
        keccakf(&mut self.state);
        let mut out = [0u8; 64];
        for (chunk, limb) in out.chunks_exact_mut(8).zip(self.state) {
            chunk.copy_from_slice(&limb.to_le_bytes());
        }
        out
    }
}

impl Default for Shake128 {
    fn default() -> Self {
        Shake128::new()
    }
}

/// One-shot H over the concatenation of `parts`.
pub fn shake512_parts(parts: &[&[u8]]) -> [u8; 64] {
    let mut h = Shake128::new();
    for part in parts {
        h.update(part);
    }
    h.finalize64()
}

pub fn shake512(data: &[u8]) -> [u8; 64] {
    shake512_parts(&[data])
}

/// H(parts) reduced into the scalar ring.
pub fn hash_to_scalar(parts: &[&[u8]], order: &Order) -> Scalar {
    order.reduce512(&shake512_parts(parts))
}

/// Sign-normalized hash: the output with even canonical representative out
/// of {h, -h}. Verification only sees +-[h]P, so fixing the parity costs
/// nothing and halves the effective nonce space an attacker can aim at.
pub fn hash_plus(parts: &[&[u8]], order: &Order) -> Scalar {
    let h = hash_to_scalar(parts, order);
    if h.lsb() == 1 {
        order.neg(&h)
    } else {
        h
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::N25519;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use sha3::digest::{ExtendableOutput, Update, XofReader};

    fn oracle(data: &[u8]) -> [u8; 64] {
        let mut h = sha3::Shake128::default();
        h.update(data);
        let mut out = [0u8; 64];
        h.finalize_xof().read(&mut out);
        out
    }

    #[test]
    fn known_vectors() {
        assert_eq!(
            hex::encode(shake512(b"")),
            "7f9c2ba4e88f827d616045507605853ed73b8093f6efbc88eb1a6eacfa66ef26\
             3cb1eea988004b93103cfb0aeefd2a686e01fa4a58e8a3639ca8a1e3f9ae57e2"
        );
        assert_eq!(
            hex::encode(shake512(b"abc")),
            "5881092dd818bf5cf8a3ddb793fbcba74097d5c526a6d35f97b83351940f2cc8\
             44c50af32acd3f2cdd066568706f509bc1bdde58295dae3f891a9a0fca578378"
        );
        // 200 bytes crosses the 168-byte rate boundary
        let long: Vec<u8> = (0u8..200).collect();
        assert_eq!(
            hex::encode(shake512(&long)),
            "0c4234ca1e31801ae606f8b8d8e0665c66f42a21d601c2681858a92c79ad5d69\
             e143c3b1393dd894e7abd5621b0d877f3573a34245e6b911f671081664a5fa53"
        );
    }

    #[test]
    fn matches_independent_implementation() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5a4e);
        for len in [0, 1, 7, 63, 64, 167, 168, 169, 335, 336, 1000] {
            let mut data = vec![0u8; len];
            rng.fill(&mut data[..]);
            assert_eq!(shake512(&data), oracle(&data), "len {}", len);
        }
    }

    #[test]
    fn parts_concatenation() {
        let data = b"split me anywhere at all".to_vec();
        let whole = shake512(&data);
        for cut in 0..=data.len() {
            let (a, b) = data.split_at(cut);
            assert_eq!(shake512_parts(&[a, b]), whole);
        }
        assert_eq!(shake512_parts(&[]), shake512(b""));
    }

    #[test]
    fn hash_plus_parity() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x9a7);
        for i in 0..200u32 {
            let mut msg = [0u8; 40];
            rng.fill(&mut msg[..]);
            let h = hash_plus(&[&msg], &N25519);
            assert_eq!(h.lsb(), 0, "iteration {}", i);
            let raw = hash_to_scalar(&[&msg], &N25519);
            assert!(h == raw || h == N25519.neg(&raw));
        }
    }
}
