//! Arithmetic in ℤ[θ], θ² = −q, on coordinate pairs (x, y) = x + yθ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::lattice::Hnf2;

type Q = (BigInt, BigInt);

pub(super) fn mul(q: &BigInt, a: &Q, b: &Q) -> Q {
    (&a.0 * &b.0 - q * &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

pub(super) fn norm(q: &BigInt, a: &Q) -> BigInt {
    &a.0 * &a.0 + q * &a.1 * &a.1
}

/// The two lattice generators of the principal ideal (a): a and θa.
fn ideal_rows(q: &BigInt, a: &Q) -> [[BigInt; 2]; 2] {
    [[a.0.clone(), a.1.clone()], [-(q * &a.1), a.0.clone()]]
}

pub(super) fn ideal_hnf(q: &BigInt, a: &super::Elem) -> Hnf2 {
    let a = super::quad_of(a);
    Hnf2::compute(&ideal_rows(q, &a))
}

/// Unimodularity via the HNF of the lattice spanned by {xᵢ, θxᵢ}.
pub(super) fn bezout(q: &BigInt, xs: &[Q]) -> Option<Vec<Q>> {
    let rows: Vec<[BigInt; 2]> = xs.iter().flat_map(|x| ideal_rows(q, x)).collect();
    let hnf = Hnf2::compute(&rows);
    let (alpha, beta) = hnf.solve(&[BigInt::one(), BigInt::zero()])?;
    // Integer combination of the input rows giving (1, 0).
    let comb: Vec<BigInt> =
        hnf.transform[0].iter().zip(&hnf.transform[1]).map(|(u, v)| &alpha * u + &beta * v).collect();
    Some(comb.chunks(2).map(|c| (c[0].clone(), c[1].clone())).collect())
}

pub(super) fn divide_exact(q: &BigInt, x: &Q, d: &Q) -> Option<Q> {
    let n = norm(q, d);
    if n.is_zero() {
        return None;
    }
    let conj = (d.0.clone(), -&d.1);
    let (u, v) = mul(q, x, &conj);
    (u.is_multiple_of(&n) && v.is_multiple_of(&n)).then(|| (u / &n, v / &n))
}

/// Fixed representative of the associate class: units are ±1, plus ±θ when q = 1.
pub(super) fn normalize_associate(q: &BigInt, a: &Q) -> Q {
    let mut cands = vec![a.clone(), (-&a.0, -&a.1)];
    if q.is_one() {
        cands.push((-&a.1, a.0.clone()));
        cands.push((a.1.clone(), -&a.0));
    }
    let gaussian = q.is_one();
    cands
        .into_iter()
        .find(|(x, y)| {
            if gaussian {
                x.is_positive() && !y.is_negative()
            } else {
                x.is_positive() || (x.is_zero() && y.is_positive())
            }
        })
        .unwrap_or_else(|| a.clone())
}

/// Divisors of a nonzero `a` up to units, ordered by norm then coordinates.
///
/// Candidates d = u + vθ have N(d) | N(a); for each divisor k of N(a) solve u² + qv² = k.
pub(super) fn divisors_up_to_units(q: &BigInt, a: &Q) -> Vec<Q> {
    let mut out: Vec<(BigInt, Q)> = Vec::new();
    for k in arith::positive_divisors(&norm(q, a)) {
        let mut v = BigInt::zero();
        while q * &v * &v <= k {
            if let Some(u) = arith::exact_sqrt(&(&k - q * &v * &v)) {
                for d in [(u.clone(), v.clone()), (-&u, v.clone()), (u.clone(), -&v), (-&u, -&v)] {
                    if divide_exact(q, a, &d).is_some() {
                        let rep = normalize_associate(q, &d);
                        if !out.iter().any(|(_, r)| *r == rep) {
                            out.push((k.clone(), rep));
                        }
                    }
                }
            }
            v += 1u32;
        }
    }
    out.sort();
    out.into_iter().map(|(_, d)| d).collect()
}
