//! The two-point verification relation, by hand.
//!
//! Signature verification must decide whether the transmitted commitment
//! R equals [s]P + [h]Q, but a Kummer variety only knows points up to
//! sign, so neither side can compute that sum directly. What it can do
//! is evaluate biquadratic forms B_ij in +-[s]P and +-[h]Q whose values
//! are, projectively, the products of coordinates of the sum and the
//! difference. The transmitted +-R satisfies a quadratic relation built
//! from those forms exactly when +-R is the image of the sum or of the
//! difference, and either one certifies s = r - h*d.
//!
//! Run with: cargo run --example check_relation

use qdsa::kummer;
use qdsa::mont;
use qdsa::params::N_GS;
use qdsa::reference::{triple_gen_g1, triple_gen_g2};
use qdsa::scalar::{Order, Scalar, N25519};

fn scalar(order: &Order, v: u64) -> Scalar {
    let mut b = [0u8; 32];
    b[..8].copy_from_slice(&v.to_le_bytes());
    order.decode(&b).unwrap()
}

fn main() {
    // --- genus 1: the x-line of Curve25519 ---
    let (a, b) = (scalar(&N25519, 1002), scalar(&N25519, 77));
    let (pa, pb, psum, pdiff) = triple_gen_g1(&a, &b);
    println!("genus 1, a = 1002, b = 77");
    println!("  check(aP, bP, (a+b)P) = {}", mont::check(&pa, &pb, &psum));
    println!("  check(aP, bP, (a-b)P) = {}", mont::check(&pa, &pb, &pdiff));
    let other = mont::ladder(&scalar(&N25519, 1080), &mont::base());
    println!("  check(aP, bP, 1080P)  = {}", mont::check(&pa, &pb, &other));
    assert!(mont::check(&pa, &pb, &psum));
    assert!(mont::check(&pa, &pb, &pdiff));
    assert!(!mont::check(&pa, &pb, &other));

    // --- genus 2: the fast Kummer surface ---
    let (a, b) = (scalar(&N_GS, 1002), scalar(&N_GS, 77));
    let (pa, pb, psum, pdiff) = triple_gen_g2(&a, &b);
    println!("genus 2, a = 1002, b = 77");
    println!("  check(aP, bP, (a+b)P) = {}", kummer::check(&pa, &pb, &psum));
    println!("  check(aP, bP, (a-b)P) = {}", kummer::check(&pa, &pb, &pdiff));
    let other = kummer::ladder_base(&scalar(&N_GS, 1080));
    println!("  check(aP, bP, 1080P)  = {}", kummer::check(&pa, &pb, &other));
    assert!(kummer::check(&pa, &pb, &psum));
    assert!(kummer::check(&pa, &pb, &pdiff));
    assert!(!kummer::check(&pa, &pb, &other));

    // The relation cannot tell a + b from a - b: on the quotient both
    // are legitimate images of "the sum of +-aP and +-bP". The signing
    // equation is stated so that either answer validates it.
    println!("sum and difference are both accepted, by design");
}
