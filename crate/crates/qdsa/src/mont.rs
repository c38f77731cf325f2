//! The x-line of Curve25519.
//!
//! Points live on P^1 as (X : Z) classes; the ladder, the biquadratic forms
//! B_XX, B_XZ, B_ZZ and the two-point check that replaces scalar recovery
//! in verification all work on these classes without ever needing a
//! y-coordinate.

use crate::field::Fe25519;
use crate::scalar::Scalar;

/// Curve coefficient A in y^2 = x^3 + A x^2 + x.
const A: u32 = 486662;

/// (X : Z) on the x-line.
#[derive(Clone, Copy, Debug)]
pub struct MontPoint {
    pub x: Fe25519,
    pub z: Fe25519,
}

/// The image of the base point (9 : 1).
pub const fn base() -> MontPoint {
    MontPoint {
        x: Fe25519::from_u64(9),
        z: Fe25519::ONE,
    }
}

impl MontPoint {
    pub fn from_affine_x(x: Fe25519) -> MontPoint {
        MontPoint { x, z: Fe25519::ONE }
    }

    /// (1 : 0), the image of the identity.
    pub fn zero() -> MontPoint {
        MontPoint {
            x: Fe25519::ONE,
            z: Fe25519::ZERO,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.z.is_zero()
    }

    /// Same class on P^1, i.e. cross-multiplication agrees.
    pub fn proj_eq(&self, other: &MontPoint) -> bool {
        (&self.x * &other.z) == (&other.x * &self.z)
    }
}

fn cswap(swap: u8, p: &mut MontPoint, q: &mut MontPoint) {
    Fe25519::cswap(&mut p.x, &mut q.x, swap);
    Fe25519::cswap(&mut p.z, &mut q.z, swap);
}

/// Clamps d' for use as a Curve25519 ladder scalar: clear the cofactor
/// bits, force bit 254. Only the Montgomery instantiation does this.
pub fn clamp(d: &mut [u8; 32]) {
    d[0] &= 248;
    d[31] &= 127;
    d[31] |= 64;
}

/// One ladder step: (2P, P + Q) from (P, Q) with base difference xp.
///
/// 5M + 4S + 1C, the Montgomery counts.
pub fn xdbladd(p: &MontPoint, q: &MontPoint, xp: &Fe25519) -> (MontPoint, MontPoint) {
    let (mut x2, mut z2) = (p.x, p.z);
    let (mut x3, mut z3) = (q.x, q.z);
    let mut t0 = &x3 - &z3;
    let mut t1 = &x2 - &z2;
    x2 = &x2 + &z2;
    z2 = &x3 + &z3;
    z3 = &t0 * &x2;
    z2 = &z2 * &t1;
    t0 = t1.square();
    t1 = x2.square();
    x3 = &z3 + &z2;
    z2 = &z3 - &z2;
    x2 = &t1 * &t0;
    t1 = &t1 - &t0;
    z2 = z2.square();
    z3 = t1.mul_small((A + 2) / 4);
    x3 = x3.square();
    t0 = &t0 + &z3;
    z3 = xp * &z2;
    z2 = &t1 * &t0;
    (MontPoint { x: x2, z: z2 }, MontPoint { x: x3, z: z3 })
}

/// [n]P on the x-line by a constant-time Montgomery ladder.
pub fn ladder(n: &Scalar, p: &MontPoint) -> MontPoint {
    ladder_bytes(&n.encode(), p)
}

/// Ladder over a raw 256-bit string, bypassing reduction mod N. The
/// clamped d' is laddered as-is and can exceed N.
pub fn ladder_bytes(n: &[u8; 32], p: &MontPoint) -> MontPoint {
    if p.is_zero() {
        return MontPoint::zero();
    }
    // the step formulas take the difference point by its affine x
    let xp = &p.x * &p.z.invert();
    let mut r0 = MontPoint::zero();
    let mut r1 = MontPoint {
        x: xp,
        z: Fe25519::ONE,
    };
    let mut prev = 0u8;
    for i in (0..256).rev() {
        let bit = (n[i / 8] >> (i % 8)) & 1;
        cswap(bit ^ prev, &mut r0, &mut r1);
        prev = bit;
        let (a, b) = xdbladd(&r0, &r1, &xp);
        r0 = a;
        r1 = b;
    }
    cswap(prev, &mut r0, &mut r1);
    r0
}

/// The biquadratic forms (B_XX, B_XZ, B_ZZ) evaluated at (P, Q).
///
/// For any R with +-R = +-(P + Q), the coordinates satisfy
/// B_XX * Z_R^2 - 2 B_XZ * X_R Z_R + B_ZZ * X_R^2 = 0.
pub fn bvalues(p: &MontPoint, q: &MontPoint) -> (Fe25519, Fe25519, Fe25519) {
    let xx = &p.x * &q.x;
    let zz = &p.z * &q.z;
    let xz = &p.x * &q.z;
    let zx = &p.z * &q.x;
    let bxx = (&xx - &zz).square();
    let bzz = (&xz - &zx).square();
    let cross = &(&xx + &zz) * &(&xz + &zx);
    let mixed = (&xx * &zz).mul_small(2 * A);
    let bxz = &cross + &mixed;
    (bxx, bxz, bzz)
}

/// Decides whether +-R = +-(P + Q), given +-P, +-Q and +-R.
pub fn check(p: &MontPoint, q: &MontPoint, r: &MontPoint) -> bool {
    let (bxx, bxz, bzz) = bvalues(p, q);
    let quad = &(&bxx * &r.z.square()) + &(&bzz * &r.x.square());
    let twice = (&bxz * &(&r.x * &r.z)).mul_small(2);
    quad == twice
}

/// Affine x-coordinate as 32 bytes. The identity compresses to zero,
/// colliding with the order-2 point; neither appears on honest paths.
pub fn compress(p: &MontPoint) -> [u8; 32] {
    (&p.x * &p.z.invert()).encode()
}

/// Reads an x-coordinate back onto the x-line. Total: every 32-byte
/// string is some x after the high-bit mask.
pub fn decompress(bytes: &[u8; 32]) -> MontPoint {
    MontPoint::from_affine_x(Fe25519::decode(bytes))
}
