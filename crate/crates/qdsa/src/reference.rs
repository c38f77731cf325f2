//! Slow affine group arithmetic used as a test oracle.
//!
//! The production code never leaves P^1 or P^3 and never sees a group
//! law. To have something independent to test the ladders and the
//! two-point check against, this module implements the full chord and
//! tangent law on E: y^2 = x^3 + 486662 x^2 + x in affine coordinates,
//! plus helpers that generate related point tuples. Nothing here is
//! constant-time or fast, deliberately: it shares no structure with the
//! code it is checking beyond the base field.

use crate::field::Fe25519;
use crate::kummer::{self, KummerPoint};
use crate::mont::{self, MontPoint};
use crate::params::N_GS;
use crate::scalar::{Scalar, N25519};

const A: u64 = 486662;

/// An affine point; the identity is represented by `None` at call sites.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AffinePoint {
    pub x: Fe25519,
    pub y: Fe25519,
}

/// The generator (9, y) with a fixed choice of root; either sign gives
/// the same x-coordinates for every multiple.
pub fn base() -> AffinePoint {
    let y = Fe25519::decode(&[
        0xd9, 0xd3, 0xce, 0x7e, 0xa2, 0xc5, 0xe9, 0x29, 0xb2, 0x61, 0x7c, 0x6d, 0x7e, 0x4d, 0x3d,
        0x92, 0x4c, 0xd1, 0x48, 0x77, 0x2c, 0xdd, 0x1e, 0xe0, 0xb4, 0x86, 0xa0, 0xb8, 0xa1, 0x19,
        0xae, 0x20,
    ]);
    AffinePoint {
        x: Fe25519::from_u64(9),
        y,
    }
}

pub fn on_curve(p: &AffinePoint) -> bool {
    let x2 = p.x.square();
    let rhs = &(&(&x2 * &p.x) + &x2.mul_small(A as u32)) + &p.x;
    p.y.square() == rhs
}

/// Chord-and-tangent addition; `None` is the identity.
pub fn ec_add(p: Option<AffinePoint>, q: Option<AffinePoint>) -> Option<AffinePoint> {
    let p = match p {
        Some(p) => p,
        None => return q,
    };
    let q = match q {
        Some(q) => q,
        None => return Some(p),
    };
    let lambda = if p.x == q.x {
        if p.y == q.y && !p.y.is_zero() {
            // tangent: (3x^2 + 2Ax + 1) / 2y
            let num = &(&p.x.square().mul_small(3) + &p.x.mul_small(2 * A as u32)) + &Fe25519::ONE;
            &num * &p.y.mul_small(2).invert()
        } else {
            // vertical chord
            return None;
        }
    } else {
        &(&q.y - &p.y) * &(&q.x - &p.x).invert()
    };
    let a = Fe25519::from_u64(A);
    let x3 = &(&(&lambda.square() - &a) - &p.x) - &q.x;
    let y3 = &(&lambda * &(&p.x - &x3)) - &p.y;
    Some(AffinePoint { x: x3, y: y3 })
}

/// [n]P by plain double-and-add over the raw 256-bit string.
pub fn ec_scalarmul(n: &[u8; 32], p: &AffinePoint) -> Option<AffinePoint> {
    let mut acc = None;
    for i in (0..256).rev() {
        acc = ec_add(acc, acc);
        if (n[i / 8] >> (i % 8)) & 1 == 1 {
            acc = ec_add(acc, Some(*p));
        }
    }
    acc
}

/// (+-[a]P, +-[b]P, +-[a+b]P, +-[a-b]P) on the genus-1 x-line.
pub fn triple_gen_g1(a: &Scalar, b: &Scalar) -> (MontPoint, MontPoint, MontPoint, MontPoint) {
    let g = mont::base();
    (
        mont::ladder(a, &g),
        mont::ladder(b, &g),
        mont::ladder(&N25519.add(a, b), &g),
        mont::ladder(&N25519.sub(a, b), &g),
    )
}

/// (+-[a]P, +-[b]P, +-[a+b]P, +-[a-b]P) on the genus-2 surface.
pub fn triple_gen_g2(a: &Scalar, b: &Scalar) -> (KummerPoint, KummerPoint, KummerPoint, KummerPoint) {
    (
        kummer::ladder_base(a),
        kummer::ladder_base(b),
        kummer::ladder_base(&N_GS.add(a, b)),
        kummer::ladder_base(&N_GS.sub(a, b)),
    )
}
