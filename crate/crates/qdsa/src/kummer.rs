//! The fast Kummer surface: ladder, biquadratic forms, two-point check.
//!
//! Points are (X_1 : X_2 : X_3 : X_4) in P^3. The ladder step is the
//! classical squared-theta doubling-and-differential-addition, with the
//! inverted difference point precomputed ("wrapped") so each step costs
//! 7M + 12S + 12 multiplications by table constants.

use crate::field::Fe127;
use crate::params::{self, BIJ_SCALE, EPS, EPS_HAT, KAPPA, MU_HAT};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug)]
pub struct KummerPoint {
    pub x: [Fe127; 4],
}

/// (X_1/X_2, X_1/X_3, X_1/X_4) of a point with no zero coordinate;
/// the shape ladder steps want their base difference in.
#[derive(Clone, Copy, Debug)]
pub struct Wrapped(pub Fe127, pub Fe127, pub Fe127);

impl KummerPoint {
    /// Same class in P^3: every 2x2 cross product agrees.
    pub fn proj_eq(&self, other: &KummerPoint) -> bool {
        for i in 0..4 {
            for j in (i + 1)..4 {
                if (&self.x[i] * &other.x[j]) != (&self.x[j] * &other.x[i]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn has_zero_coordinate(&self) -> bool {
        self.x.iter().any(|c| c.is_zero())
    }
}

fn hadamard(v: &[Fe127; 4]) -> [Fe127; 4] {
    let s1 = &v[0] + &v[1];
    let s2 = &v[0] - &v[1];
    let s3 = &v[2] + &v[3];
    let s4 = &v[2] - &v[3];
    [&s1 + &s3, &s1 - &s3, &s2 + &s4, &s2 - &s4]
}

fn mul4(a: &[Fe127; 4], b: &[Fe127; 4]) -> [Fe127; 4] {
    [&a[0] * &b[0], &a[1] * &b[1], &a[2] * &b[2], &a[3] * &b[3]]
}

fn sqr4(a: &[Fe127; 4]) -> [Fe127; 4] {
    [a[0].square(), a[1].square(), a[2].square(), a[3].square()]
}

fn scale4(a: &[Fe127; 4], c: &[i32; 4]) -> [Fe127; 4] {
    [
        a[0].mul_small_signed(c[0]),
        a[1].mul_small_signed(c[1]),
        a[2].mul_small_signed(c[2]),
        a[3].mul_small_signed(c[3]),
    ]
}

/// The index pattern shared by the U and T stages of the on-diagonal
/// biquadratic forms.
const PERM: [[usize; 4]; 4] = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];

fn cswap(swap: u8, p: &mut KummerPoint, q: &mut KummerPoint) {
    for i in 0..4 {
        Fe127::cswap(&mut p.x[i], &mut q.x[i], swap);
    }
}

/// Precomputes the inverted coordinates of a ladder difference point.
/// Fails on any zero coordinate; such points cannot serve as a base.
pub fn wrap(p: &KummerPoint) -> Option<Wrapped> {
    if p.has_zero_coordinate() {
        return None;
    }
    let v1 = &p.x[1] * &p.x[2];
    let v2 = &p.x[0] * &(&v1 * &p.x[3]).invert();
    let v3 = &v2 * &p.x[3];
    Some(Wrapped(&v3 * &p.x[2], &v3 * &p.x[1], &v1 * &v2))
}

/// One ladder step: (2P, P + Q) from (P, Q), where the wrapped point is
/// the fixed difference P - Q.
pub fn xdbladd(p: &KummerPoint, q: &KummerPoint, w: &Wrapped) -> (KummerPoint, KummerPoint) {
    let yp = hadamard(&p.x);
    let yq = hadamard(&q.x);
    let mut dbl = sqr4(&yp);
    let mut add = mul4(&yp, &yq);
    dbl = scale4(&dbl, &EPS_HAT);
    add = scale4(&add, &EPS_HAT);
    dbl = hadamard(&dbl);
    add = hadamard(&add);
    dbl = sqr4(&dbl);
    add = sqr4(&add);
    dbl = scale4(&dbl, &EPS);
    let add = [add[0], &add[1] * &w.0, &add[2] * &w.1, &add[3] * &w.2];
    (KummerPoint { x: dbl }, KummerPoint { x: add })
}

/// Ladder over a raw 256-bit string with a pre-wrapped base.
pub fn ladder_wrapped_bytes(n: &[u8; 32], p: &KummerPoint, w: &Wrapped) -> KummerPoint {
    let mut r0 = params::zero_point();
    let mut r1 = *p;
    let mut prev = 0u8;
    for i in (0..256).rev() {
        let bit = (n[i / 8] >> (i % 8)) & 1;
        cswap(bit ^ prev, &mut r0, &mut r1);
        prev = bit;
        let (a, b) = xdbladd(&r0, &r1, w);
        r0 = a;
        r1 = b;
    }
    cswap(prev, &mut r0, &mut r1);
    r0
}

pub fn ladder_wrapped(n: &Scalar, p: &KummerPoint, w: &Wrapped) -> KummerPoint {
    ladder_wrapped_bytes(&n.encode(), p, w)
}

/// [n]P; `None` when P has a zero coordinate and cannot be wrapped.
pub fn ladder_bytes(n: &[u8; 32], p: &KummerPoint) -> Option<KummerPoint> {
    let w = wrap(p)?;
    Some(ladder_wrapped_bytes(n, p, &w))
}

pub fn ladder(n: &Scalar, p: &KummerPoint) -> Option<KummerPoint> {
    ladder_bytes(&n.encode(), p)
}

/// [n]B on the fixed base point.
pub fn ladder_base(n: &Scalar) -> KummerPoint {
    ladder_base_bytes(&n.encode())
}

pub fn ladder_base_bytes(n: &[u8; 32]) -> KummerPoint {
    ladder_wrapped_bytes(n, &params::BASE, params::base_wrapped())
}

/// The defining quartic evaluated at P; zero iff P lies on the surface.
pub fn surface_eval(p: &KummerPoint) -> Fe127 {
    let s = params::surface();
    let [x1, x2, x3, x4] = &p.x;
    let sum_sq = &(&(&x1.square() + &x2.square()) + &x3.square()) + &x4.square();
    let t14 = &(x1 * x4) + &(x2 * x3);
    let t13 = &(x1 * x3) + &(x2 * x4);
    let t12 = &(x1 * x2) + &(x3 * x4);
    let lin = &(&(&sum_sq - &(&s.f * &t14)) - &(&s.g * &t13)) - &(&s.h * &t12);
    let prod = &(x1 * x2) * &(x3 * x4);
    &lin.square() - &(&s.e_sq * &prod).mul_small(4)
}

/// The four on-diagonal biquadratic forms B_11..B_44, evaluated at a pair
/// of hadamard-transformed points.
fn bii_values(yp: &[Fe127; 4], yq: &[Fe127; 4]) -> [Fe127; 4] {
    let v = scale4(&sqr4(yp), &EPS_HAT);
    let w = scale4(&sqr4(yq), &EPS_HAT);
    let u: [Fe127; 4] = std::array::from_fn(|k| {
        let p = &PERM[k];
        let mut acc = &v[0] * &w[p[0]];
        for i in 1..4 {
            acc = &acc + &(&v[i] * &w[p[i]]);
        }
        acc
    });
    let t: [Fe127; 4] = std::array::from_fn(|k| {
        let p = &PERM[k];
        let mut acc = u[0].mul_small_signed(KAPPA[p[0]]);
        for i in 1..4 {
            acc = &acc + &u[i].mul_small_signed(KAPPA[p[i]]);
        }
        acc
    });
    scale4(&t, &MU_HAT)
}

/// The off-diagonal form B_ij (i < j), up to the shared projective factor.
fn bij_value(yp: &[Fe127; 4], yq: &[Fe127; 4], i: usize, j: usize) -> Fe127 {
    let [k, l]: [usize; 2] = {
        let mut rest = (0..4).filter(|t| *t != i && *t != j);
        [rest.next().unwrap(), rest.next().unwrap()]
    };
    let m = |a: usize| MU_HAT[a] as i64;
    let mut v0 = &yp[i] * &yp[j];
    let mut v1 = &yp[k] * &yp[l];
    let mut v2 = &yq[i] * &yq[j];
    let v3 = &yq[k] * &yq[l];
    v0 = &v0 - &v1;
    v2 = &v2 - &v3;
    v0 = &v0 * &v2;
    v1 = &v1 * &v3;
    v0 = v0.mul_small_signed((m(k) * m(l)) as i32);
    v1 = v1.mul_small_signed((m(i) * m(j) - m(k) * m(l)) as i32);
    v0 = &v0 + &v1;
    let c_ij = m(i) * m(j) * (m(i) * m(k) - m(j) * m(l)) * (m(i) * m(l) - m(j) * m(k));
    v0 = &v0 * &Fe127::from_i64(c_ij);
    &v0 * &BIJ_SCALE
}

/// Decides whether +-R = +-(P + Q), given only the three Kummer images.
/// All six pairwise quadratic relations in the coordinates of R must hold.
pub fn check(p: &KummerPoint, q: &KummerPoint, r: &KummerPoint) -> bool {
    let yp = hadamard(&p.x);
    let yq = hadamard(&q.x);
    let yr = hadamard(&r.x);
    let b = bii_values(&yp, &yq);
    for (i, j) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
        let bij = bij_value(&yp, &yq, i, j);
        let lhs = &(&b[i] * &yr[j].square()) + &(&b[j] * &yr[i].square());
        let rhs = (&bij * &(&yr[i] * &yr[j])).mul_small(2);
        if lhs != rhs {
            return false;
        }
    }
    true
}
