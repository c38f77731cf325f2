//! Per-thread operation counters for the field backends.
//!
//! The combined double-and-add steps have exact published costs (5M + 4S + 1C
//! on the x-line, 7M + 12S + 12C on the Kummer surface), and the test suite
//! holds the implementation to them. Counting happens inside the field
//! multiplication routines themselves, so a stray extra multiply anywhere in a
//! ladder step shows up as a hard test failure rather than a silent slowdown.
//!
//! Counters are thread-local: tests running in parallel never see each other's
//! tallies.

use std::cell::Cell;
use std::thread::LocalKey;

/// Multiplication tallies for one field, in the usual M/S/C cost notation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Counts {
    /// Full field multiplications (M).
    pub mul: u64,
    /// Squarings (S).
    pub sqr: u64,
    /// Multiplications by small constants (C).
    pub mul_small: u64,
}

thread_local! {
    static P25519: Cell<Counts> = const { Cell::new(Counts { mul: 0, sqr: 0, mul_small: 0 }) };
    static P127: Cell<Counts> = const { Cell::new(Counts { mul: 0, sqr: 0, mul_small: 0 }) };
}

/// Resets both fields' counters for the calling thread.
pub fn reset() {
    P25519.with(|c| c.set(Counts::default()));
    P127.with(|c| c.set(Counts::default()));
}

/// Counts for arithmetic mod 2^255 - 19 on the calling thread.
pub fn fe25519() -> Counts {
    P25519.with(Cell::get)
}

/// Counts for arithmetic mod 2^127 - 1 on the calling thread.
pub fn fe127() -> Counts {
    P127.with(Cell::get)
}

fn bump(key: &'static LocalKey<Cell<Counts>>, f: fn(&mut Counts)) {
    key.with(|c| {
        let mut v = c.get();
        f(&mut v);
        c.set(v);
    });
}

pub(crate) fn fe25519_mul() {
    bump(&P25519, |c| c.mul += 1);
}

pub(crate) fn fe25519_sqr() {
    bump(&P25519, |c| c.sqr += 1);
}

pub(crate) fn fe25519_mul_small() {
    bump(&P25519, |c| c.mul_small += 1);
}

pub(crate) fn fe127_mul() {
    bump(&P127, |c| c.mul += 1);
}

pub(crate) fn fe127_sqr() {
    bump(&P127, |c| c.sqr += 1);
}

pub(crate) fn fe127_mul_small() {
    bump(&P127, |c| c.mul_small += 1);
}
