//! ℤ[1/m]: an element is num / m^exp; every prime dividing m is a unit.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{frac_of, Elem, Ring};
use crate::arith;

/// Smallest `k` with `u | m^k`, for `u` built from primes dividing `m`.
fn smooth_exponent(u: &BigInt, m: &BigInt) -> u32 {
    let mut k = 0;
    let mut p = BigInt::one();
    while !p.is_multiple_of(u) {
        p *= m;
        k += 1;
    }
    k
}

pub(super) fn bezout(ring: &Ring, m: &BigInt, xs: &[Elem]) -> Option<Vec<Elem>> {
    let fr: Vec<(BigInt, u32)> = xs.iter().map(frac_of).collect();
    let nums: Vec<BigInt> = fr.iter().map(|(n, _)| n.clone()).collect();
    let (g, c) = arith::bezout_fold(&nums);
    if g.is_zero() || !arith::coprime_part(&g, m).abs().is_one() {
        return None;
    }
    // sum c_i n_i = g, and 1/g = (m^k/g) / m^k.
    let k = smooth_exponent(&g, m);
    let scale = m.pow(k) / &g;
    Some(c.into_iter().zip(&fr).map(|(ci, (_, e))| ring.canon_frac(ci * m.pow(*e) * &scale, k)).collect())
}

pub(super) fn divide_exact(ring: &Ring, m: &BigInt, x: &Elem, d: &Elem) -> Option<Elem> {
    let (nx, ex) = frac_of(x);
    let (nd, ed) = frac_of(d);
    let s = arith::coprime_part(&nd, m);
    if !nx.is_multiple_of(&s) {
        return None;
    }
    let u = (&nd / &s).abs();
    let sign = if (&nd / &s).is_negative() { -BigInt::one() } else { BigInt::one() };
    let k = smooth_exponent(&u, m);
    let num = sign * (nx / s) * m.pow(ed) * (m.pow(k) / u);
    Some(ring.canon_frac(num, ex + k))
}
