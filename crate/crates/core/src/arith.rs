//! Integer helpers shared by the concrete rings.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Extended gcd normalised so that `g >= 0` and `x*a + y*b == g`.
pub fn xgcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Bézout coefficients for a tuple of integers, folded left to right.
///
/// Returns `(g, coeffs)` with `g = gcd(xs) >= 0` and `sum coeffs[i]*xs[i] == g`.
pub fn bezout_fold(xs: &[BigInt]) -> (BigInt, Vec<BigInt>) {
    let mut g = BigInt::zero();
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(xs.len());
    for x in xs {
        if coeffs.is_empty() {
            g = x.abs();
            coeffs.push(if x.is_negative() { -BigInt::one() } else { BigInt::one() });
            continue;
        }
        let (ng, s, t) = xgcd(&g, x);
        for c in coeffs.iter_mut() {
            *c *= &s;
        }
        coeffs.push(t);
        g = ng;
    }
    (g, coeffs)
}

/// Distinct prime factors of `|n|` by trial division, ascending. `n` must be nonzero.
pub fn prime_factors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2u32);
    while &p * &p <= n {
        if n.is_multiple_of(&p) {
            out.push(p.clone());
            while n.is_multiple_of(&p) {
                n /= &p;
            }
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if n > BigInt::one() {
        out.push(n);
    }
    out
}

/// Product of the distinct prime factors of `n` (`rad(0)` is taken to be 0).
pub fn radical(n: &BigInt) -> BigInt {
    if n.is_zero() {
        return BigInt::zero();
    }
    prime_factors(n).iter().fold(BigInt::one(), |acc, p| acc * p)
}

/// Divides out of `n` every prime that also divides `other`.
///
/// The result is the largest divisor of `n` coprime to `other` (up to sign, `n`'s sign kept).
/// No factorisation is needed.
pub fn coprime_part(n: &BigInt, other: &BigInt) -> BigInt {
    let mut n = n.clone();
    if n.is_zero() {
        return n;
    }
    loop {
        let g = n.gcd(other);
        if g.is_one() {
            return n;
        }
        n /= g;
    }
}

/// Positive divisors of a nonzero integer, ascending.
pub fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1u32;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Integer square root of a nonnegative integer, if exact.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Nonnegative residue of `x` modulo `n > 0`.
pub fn modulo(x: &BigInt, n: &BigInt) -> BigInt {
    x.mod_floor(n)
}
