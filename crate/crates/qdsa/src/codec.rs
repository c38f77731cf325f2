//! 32-byte encoding of Kummer surface points.
//!
//! A point is carried into (K_1 : K_2 : K_3 : K_4) coordinates, where the
//! surface has a sparse defining polynomial: K_4 satisfies a quadratic
//! k_2 K_4^2 - 2 k_3 K_4 + k_4 = 0 whose coefficients are polynomials in
//! (K_1, K_2, K_3) with the small q_i below. The wire format stores the
//! normalized (l_1, l_2) plus a normalization bit tau and the root-choice
//! bit sigma, packed into the two spare top bits.

use crate::field::Fe127;
use crate::kummer::KummerPoint;
use crate::params::{KAPPA_HAT, MU, QK};

/// Index pattern of the linear maps into and out of K-space.
const TPERM: [[usize; 4]; 4] = [[3, 2, 1, 0], [2, 3, 0, 1], [1, 0, 3, 2], [0, 1, 2, 3]];

fn tmap(x: &[Fe127; 4], coeffs: &[i32; 4]) -> [Fe127; 4] {
    std::array::from_fn(|k| {
        let p = &TPERM[k];
        let mut acc = x[0].mul_small_signed(coeffs[p[0]]);
        for i in 1..4 {
            acc = &acc + &x[i].mul_small_signed(coeffs[p[i]]);
        }
        acc
    })
}

fn q(i: usize) -> u32 {
    QK[i] as u32
}

/// k_2(l_1, l_2, tau), the K_4^2 coefficient.
pub fn k2(l1: &Fe127, l2: &Fe127, tau: &Fe127) -> Fe127 {
    let a = l1.mul_small(q(5)).square();
    let b = l2.mul_small(q(3)).square();
    let c = tau.mul_small(q(4) * q(4));
    let inner = &(l1 * l2).mul_small(q(2)) + &(&(&l1.mul_small(q(0)) - &l2.mul_small(q(1))) * tau);
    let d = inner.mul_small(2 * q(3));
    &(&(&a + &b) + &c) - &d
}

/// k_3(l_1, l_2, tau), the linear coefficient.
pub fn k3(l1: &Fe127, l2: &Fe127, tau: &Fe127) -> Fe127 {
    let l1sq = l1.square();
    let l2sq = l2.square();
    let ta = &(&l1sq + tau) * l2;
    let tb = l1 * &(&l2sq + tau);
    let tc = &(&l1sq + &l2sq) * tau;
    let main = &(&ta.mul_small(q(0)) - &tb.mul_small(q(1))) + &tc.mul_small(q(2));
    let corr = (&(l1 * l2) * tau).mul_small(q(6)).mul_small(q(7));
    &main.mul_small(q(3)) - &corr
}

/// k_4(l_1, l_2, tau), the constant coefficient.
pub fn k4(l1: &Fe127, l2: &Fe127, tau: &Fe127) -> Fe127 {
    let a = l1.mul_small(q(3)).square();
    let b = l2.mul_small(q(5)).square();
    let inner = &(&l2.mul_small(q(0)) - &l1.mul_small(q(1))) + &Fe127::from_i64(QK[2]);
    let c = &(l1 * l2).mul_small(2 * q(3)) * &inner;
    let brack = &(&a + &b) - &c;
    let d = (l1 * l2).mul_small(q(4)).square();
    &(tau * &brack) + &d
}

/// Compresses a Kummer point to 32 bytes.
pub fn compress(p: &KummerPoint) -> [u8; 32] {
    let l = tmap(&p.x, &KAPPA_HAT);
    debug_assert!(l.iter().any(|c| !c.is_zero()));
    let (tau, lam) = if !l[2].is_zero() {
        (Fe127::ONE, l[2].invert())
    } else if !l[1].is_zero() {
        (Fe127::ZERO, l[1].invert())
    } else if !l[0].is_zero() {
        (Fe127::ZERO, l[0].invert())
    } else {
        (Fe127::ZERO, l[3].invert())
    };
    let l1 = &l[0] * &lam;
    let l2 = &l[1] * &lam;
    let l4 = &l[3] * &lam;
    let k2v = k2(&l1, &l2, &tau);
    let k3v = k3(&l1, &l2, &tau);
    let sigma = (&(&k2v * &l4) - &k3v).sign_bit();
    let mut out = [0u8; 32];
    out[..16].copy_from_slice(&l1.encode());
    out[16..].copy_from_slice(&l2.encode());
    out[15] |= tau.sign_bit() << 7;
    out[31] |= sigma << 7;
    out
}

/// Decompresses 32 bytes back to a point, or `None` for any string that
/// is not the compression of a surface point.
pub fn decompress(bytes: &[u8; 32]) -> Option<KummerPoint> {
    let mut b1: [u8; 16] = bytes[..16].try_into().unwrap();
    let mut b2: [u8; 16] = bytes[16..].try_into().unwrap();
    let tau_bit = b1[15] >> 7;
    let sigma = b2[15] >> 7;
    b1[15] &= 0x7f;
    b2[15] &= 0x7f;
    let l1 = Fe127::decode(&b1)?;
    let l2 = Fe127::decode(&b2)?;
    let tau = if tau_bit == 1 { Fe127::ONE } else { Fe127::ZERO };
    let k2v = k2(&l1, &l2, &tau);
    let k3v = k3(&l1, &l2, &tau);
    let k4v = k4(&l1, &l2, &tau);
    let l = if k2v.is_zero() && k3v.is_zero() {
        // only the image of (0 : 0 : 0 : 1) lands here, and it has a
        // unique encoding
        if !l1.is_zero() || !l2.is_zero() || tau_bit != 0 || sigma != 0 {
            return None;
        }
        [Fe127::ZERO, Fe127::ZERO, Fe127::ZERO, Fe127::ONE]
    } else if k2v.is_zero() {
        // K_4 is the single root k_4 / 2k_3; sigma must match it
        if sigma != (-&k3v).sign_bit() {
            return None;
        }
        let two_k3 = k3v.mul_small(2);
        [&l1 * &two_k3, &l2 * &two_k3, &tau * &two_k3, k4v]
    } else {
        let delta = &k3v.square() - &(&k2v * &k4v);
        let root = delta.sqrt(sigma)?;
        [&k2v * &l1, &k2v * &l2, &k2v * &tau, &k3v + &root]
    };
    Some(KummerPoint { x: tmap(&l, &MU) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kummer::{self, surface_eval};
    use crate::params::{self, N_GS};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_point(rng: &mut ChaCha8Rng) -> KummerPoint {
        let mut wide = [0u8; 64];
        rng.fill(&mut wide[..]);
        kummer::ladder_base(&N_GS.reduce512(&wide))
    }

    #[test]
    fn k_polynomials_spot_values() {
        let (zero, one) = (Fe127::ZERO, Fe127::ONE);
        // k_2(0, 0, 1) = q_4^2
        assert_eq!(k2(&zero, &zero, &one), Fe127::from_i64(QK[4] * QK[4]));
        // k_3(1, 0, 1) = q_3 (q_2 - q_1)
        assert_eq!(k3(&one, &zero, &one), Fe127::from_i64(QK[3] * (QK[2] - QK[1])));
        // k_4(0, l_2, 1) = (q_5 l_2)^2
        let mut rng = ChaCha8Rng::seed_from_u64(0x40);
        let mut b = [0u8; 16];
        rng.fill(&mut b[..]);
        b[15] &= 0x7f;
        let l2 = Fe127::decode(&b).unwrap();
        assert_eq!(k4(&zero, &l2, &one), l2.mul_small(QK[5] as u32).square());
    }

    #[test]
    fn round_trip_on_ladder_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xc0dec);
        for _ in 0..50 {
            let p = random_point(&mut rng);
            let bytes = compress(&p);
            let q = decompress(&bytes).expect("compression of a real point");
            assert!(p.proj_eq(&q));
            assert!(surface_eval(&q).is_zero());
            assert_eq!(compress(&q), bytes);
        }
    }

    #[test]
    fn identity_round_trip() {
        let zero = params::zero_point();
        let bytes = compress(&zero);
        let back = decompress(&bytes).unwrap();
        assert!(back.proj_eq(&zero));
        assert_eq!(bytes, [0u8; 32]);
    }

    #[test]
    fn rejects_non_residue_wire() {
        // l_1 = 1, l_2 = 2, tau = 1, sigma = 0: the discriminant is a
        // quadratic non-residue
        let mut bytes = [0u8; 32];
        bytes[0] = 1;
        bytes[15] |= 0x80;
        bytes[16] = 2;
        assert!(decompress(&bytes).is_none());
    }

    #[test]
    fn rejects_out_of_range_field_element() {
        // l_1 payload = 2^127 - 1 = p is not a canonical element
        let mut bytes = [0u8; 32];
        for b in bytes[..16].iter_mut() {
            *b = 0xff;
        }
        bytes[15] = 0x7f;
        assert!(decompress(&bytes).is_none());
        // same for l_2
        let mut bytes = [0u8; 32];
        for b in bytes[16..].iter_mut() {
            *b = 0xff;
        }
        bytes[31] = 0x7f;
        assert!(decompress(&bytes).is_none());
    }

    #[test]
    fn rejects_malformed_identity_encodings() {
        // k_2 = k_3 = 0 forces the all-zero wire; setting sigma breaks it
        let mut bytes = [0u8; 32];
        bytes[31] = 0x80;
        assert!(decompress(&bytes).is_none());
    }

    #[test]
    fn decompress_is_sigma_consistent() {
        // flipping sigma on a generic wire yields the other root, so both
        // decode, but to different points
        let mut rng = ChaCha8Rng::seed_from_u64(0x516);
        let mut seen_both = false;
        for _ in 0..20 {
            let p = random_point(&mut rng);
            let mut bytes = compress(&p);
            bytes[31] ^= 0x80;
            if let Some(q) = decompress(&bytes) {
                assert!(!p.proj_eq(&q));
                assert!(surface_eval(&q).is_zero());
                seen_both = true;
            }
        }
        assert!(seen_both);
    }
}
