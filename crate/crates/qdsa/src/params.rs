//! Parameters of the genus-2 instantiation.
//!
//! The fast Kummer surface of the Gaudry-Schost curve over GF(2^127 - 1).
//! All of the small tables below are projective tuples of integers; signs
//! are folded into the field at use sites. The derived surface constants
//! (F, G, H, E^2) are computed once at startup from the squared thetas
//! rather than carried as magic hex, and the test suite pins them anyway.

use crate::field::Fe127;
use crate::kummer::{self, KummerPoint, Wrapped};
use crate::scalar::Order;
use std::sync::OnceLock;

/// Squared theta constants (mu_1 : mu_2 : mu_3 : mu_4).
pub const MU: [i32; 4] = [-11, 22, 19, 3];

/// Dual squared thetas (mu_hat_1 : ... : mu_hat_4).
pub const MU_HAT: [i32; 4] = [-33, 11, 17, 49];

/// eps_i = prod of the mu_j, j != i. Used to scale the doubling half of
/// the ladder step.
pub const EPS: [i32; 4] = [1254, -627, -726, -4598];

/// Projective reduction of (prod of mu_hat_j, j != i): the exact products
/// share a factor -11, so these are them divided by it.
pub const EPS_HAT: [i32; 4] = [-833, 2499, 1617, 561];

/// kappa tuple weighting the on-diagonal biquadratic forms.
pub const KAPPA: [i32; 4] = [-4697, 5951, 5753, -1991];

/// kappa_hat tuple for the coordinate change into (K_2 : K_3 : K_4) space.
pub const KAPPA_HAT: [i32; 4] = [-961, 128, 569, 1097];

/// Coefficients q_0..q_7 of the K_2, K_3, K_4 compression polynomials.
pub const QK: [i64; 8] = [3575, 9625, 4625, 12259, 11275, 7475, 6009, 43991];

/// Field constant relating the off-diagonal biquadratic forms B_ij to
/// their integer-coefficient numerators.
pub const BIJ_SCALE: Fe127 = Fe127::from_raw(0x3f0af1105cdf5d22b9081c27322257bc);

/// Order of the prime subgroup,
/// N = 2^250 - 0x334d69820c75294d2c27fc9f9a154ff47730b4b840c05bd.
pub static N_GS: Order = Order::new([
    0xb88cf4b47bf3fa43,
    0x2d3d8036065eab00,
    0xfccb2967df38ad6b,
    0x03ffffffffffffff,
]);

/// A fixed generator of the prime subgroup, coordinates normalized to
/// X_1 = 1.
pub const BASE: KummerPoint = KummerPoint {
    x: [
        Fe127::from_raw(1),
        Fe127::from_raw(0x51007299203c2fd218d8b82e7f7edf95),
        Fe127::from_raw(0x603ff24aca6474dc9f9df1f6fba40d1f),
        Fe127::from_raw(0x5ce60a4439d7c649a0f16a01e07e938f),
    ],
};

/// The image of the identity, +-0 = (mu_1 : mu_2 : mu_3 : mu_4).
pub fn zero_point() -> KummerPoint {
    KummerPoint {
        x: [
            Fe127::from_i64(MU[0] as i64),
            Fe127::from_i64(MU[1] as i64),
            Fe127::from_i64(MU[2] as i64),
            Fe127::from_i64(MU[3] as i64),
        ],
    }
}

/// Derived constants of the surface equation.
pub struct Surface {
    pub f: Fe127,
    pub g: Fe127,
    pub h: Fe127,
    pub e_sq: Fe127,
}

fn mu_fe(i: usize) -> Fe127 {
    Fe127::from_i64(MU[i] as i64)
}

/// F, G, H and E^2, computed from the thetas on first use.
pub fn surface() -> &'static Surface {
    static SURFACE: OnceLock<Surface> = OnceLock::new();
    SURFACE.get_or_init(|| {
        let (m1, m2, m3, m4) = (mu_fe(0), mu_fe(1), mu_fe(2), mu_fe(3));
        let (s1, s2, s3, s4) = (m1.square(), m2.square(), m3.square(), m4.square());
        let f = &(&(&s1 - &s2) - &s3) + &s4;
        let f = &f * &(&(&m1 * &m4) - &(&m2 * &m3)).invert();
        let g = &(&(&s1 - &s2) + &s3) - &s4;
        let g = &g * &(&(&m1 * &m3) - &(&m2 * &m4)).invert();
        let h = &(&(&s1 + &s2) - &s3) - &s4;
        let h = &h * &(&(&m1 * &m2) - &(&m3 * &m4)).invert();
        let e_sq = &(&(&(&f.square() + &g.square()) + &h.square()) + &(&(&f * &g) * &h))
            - &Fe127::from_i64(4);
        Surface { f, g, h, e_sq }
    })
}

/// The wrapped base point, shared by every ladder on the base.
pub fn base_wrapped() -> &'static Wrapped {
    static WRAPPED: OnceLock<Wrapped> = OnceLock::new();
    WRAPPED.get_or_init(|| kummer::wrap(&BASE).expect("base point has no zero coordinate"))
}
