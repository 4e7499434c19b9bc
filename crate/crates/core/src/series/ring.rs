//! Coefficient rings and the convolution kernels shared by every domain.
//!
//! The kernels skip zero coefficients on both sides, so multiplying or
//! dividing by an Euler product (whose support is the generalized pentagonal
//! numbers) costs `O(N^1.5)` instead of `O(N^2)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::mod_inverse;

pub(crate) trait Ring {
    type Elem: Clone + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn embed(&self, x: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `acc += a * b`
    fn mul_add(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem);
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

pub(crate) struct IntegerRing;

impl Ring for IntegerRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, x: &BigInt) -> bool {
        x.is_zero()
    }
    fn embed(&self, x: i64) -> BigInt {
        BigInt::from(x)
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn mul_add(&self, acc: &mut BigInt, a: &BigInt, b: &BigInt) {
        *acc += a * b;
    }
    fn inverse(&self, a: &BigInt) -> Option<BigInt> {
        if a.abs().is_one() {
            Some(a.clone())
        } else {
            None
        }
    }
}

pub(crate) struct ResidueRing(pub u64);

impl Ring for ResidueRing {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
    fn embed(&self, x: i64) -> u64 {
        (x as i128).rem_euclid(self.0 as i128) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.0 as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.0 - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    fn mul_add(&self, acc: &mut u64, a: &u64, b: &u64) {
        *acc = ((*acc as u128 + *a as u128 * *b as u128) % self.0 as u128) as u64;
    }
    fn inverse(&self, a: &u64) -> Option<u64> {
        mod_inverse(*a, self.0)
    }
}

pub(crate) struct RationalRing;

impl Ring for RationalRing {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, x: &BigRational) -> bool {
        x.is_zero()
    }
    fn embed(&self, x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn mul_add(&self, acc: &mut BigRational, a: &BigRational, b: &BigRational) {
        *acc += a * b;
    }
    fn inverse(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
}

fn support<R: Ring>(ring: &R, a: &[R::Elem]) -> Vec<usize> {
    (0..a.len()).filter(|&i| !ring.is_zero(&a[i])).collect()
}

/// Cauchy product truncated to `order` coefficients.
pub(crate) fn mul<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem], order: usize) -> Vec<R::Elem> {
    let mut out = vec![ring.zero(); order];
    let sa = support(ring, a);
    let sb = support(ring, b);
    for &i in sa.iter().take_while(|&&i| i < order) {
        for &j in sb.iter().take_while(|&&j| i + j < order) {
            ring.mul_add(&mut out[i + j], &a[i], &b[j]);
        }
    }
    out
}

/// Solves `den * x = num` for `x`, truncated to `order` coefficients.
///
/// Returns `None` when the constant term of `den` is not a unit.
pub(crate) fn div<R: Ring>(
    ring: &R,
    num: &[R::Elem],
    den: &[R::Elem],
    order: usize,
) -> Option<Vec<R::Elem>> {
    let lead_inv = ring.inverse(den.first()?)?;
    let tail: Vec<usize> = support(ring, den).into_iter().filter(|&i| i > 0).collect();
    let mut out: Vec<R::Elem> = Vec::with_capacity(order);
    for n in 0..order {
        let mut acc = num.get(n).cloned().unwrap_or_else(|| ring.zero());
        for &i in tail.iter().take_while(|&&i| i <= n) {
            let term = ring.mul(&den[i], &out[n - i]);
            acc = ring.sub(&acc, &term);
        }
        out.push(ring.mul(&acc, &lead_inv));
    }
    Some(out)
}

/// Multiplies by `1 + c*q^e` in place.
pub(crate) fn mul_binomial<R: Ring>(ring: &R, a: &mut [R::Elem], c: &R::Elem, e: usize) {
    if e == 0 {
        let factor = ring.add(&ring.one(), c);
        for x in a.iter_mut() {
            *x = ring.mul(x, &factor);
        }
        return;
    }
    for n in (e..a.len()).rev() {
        let (lo, hi) = a.split_at_mut(n);
        ring.mul_add(&mut hi[0], c, &lo[n - e]);
    }
}
