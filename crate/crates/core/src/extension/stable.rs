//! Stable-range reductions and the two constructions built on them: upgrading an
//! extendable matrix to a simply extendable one, and triangular extensions with
//! `(2,3)` entry `-1`.

use num_bigint::BigInt;

use crate::arith;
use crate::error::{Error, Result};
use crate::matrix::{Mat2, Mat3};
use crate::ring::{Elem, Family, Ring};

use super::{pair, Certificate};

/// How far the small-multiplier scan goes before falling back to a construction.
const SMALL_SCAN: i64 = 16;

fn small_multipliers(r: &Ring) -> impl Iterator<Item = Elem> + '_ {
    (0..=SMALL_SCAN).flat_map(move |k| if k == 0 { vec![r.zero()] } else { vec![r.int(k), r.int(-k)] })
}

/// Integer numerators of `xs` over a common denominator `m^K` (ℤ: the integers themselves).
fn common_numerators(r: &Ring, xs: &[&Elem]) -> Vec<BigInt> {
    match r.localization_m() {
        None => xs.iter().map(|x| r.lift_int(x)).collect(),
        Some(m) => {
            let parts: Vec<(BigInt, u32)> = xs
                .iter()
                .map(|x| match x {
                    Elem::Frac { num, exp } => (num.clone(), *exp),
                    other => (r.lift_int(other), 0),
                })
                .collect();
            let k = parts.iter().map(|p| p.1).max().unwrap_or(0);
            parts.into_iter().map(|(n, e)| n * m.pow(k - e)).collect()
        }
    }
}

/// `r` with `(a + b r, c)` unimodular, for `(a, b, c)` unimodular and `c ≠ 0`.
///
/// Small multipliers `0, 1, -1, 2, ...` are tried first. Otherwise, over ℤ and ℤ[1/m],
/// `r` is the part of `c` (numerator, with the primes of `m` removed) coprime to `a`:
/// a prime `p | c` then either divides `r` and not `a`, or divides `a` and neither `b`
/// nor `r`. Finite rings are scanned exhaustively.
pub fn fsr_reduce(ring: &Ring, a: &Elem, b: &Elem, c: &Elem) -> Result<Elem> {
    if ring.is_zero(c) || !ring.is_unimodular(&[a.clone(), b.clone(), c.clone()]) {
        return Err(Error::Precondition("fsr_reduce needs (a, b, c) unimodular with c ≠ 0".into()));
    }
    let works = |r: &Elem| ring.is_unimodular(&[ring.add(a, &ring.mul(b, r)), c.clone()]);
    if let Some(r) = small_multipliers(ring).find(|r| works(r)) {
        return Ok(r);
    }
    let r = match ring.family() {
        Family::Integers | Family::Localized => fsr_construct(ring, a, c),
        _ if ring.is_finite() => ring
            .elements()?
            .into_iter()
            .find(|r| works(r))
            .ok_or_else(|| Error::Internal("finite ring without fsr witness".into()))?,
        _ => return Err(Error::Unsupported { op: "fsr_reduce", ring: ring.to_string() }),
    };
    if !works(&r) {
        return Err(Error::Internal(format!("fsr_reduce produced a bad multiplier over {ring}")));
    }
    Ok(r)
}

/// The part of `c` coprime to `a` and to `m` (ℤ[1/m]), as an element.
fn fsr_construct(ring: &Ring, a: &Elem, c: &Elem) -> Elem {
    let nums = common_numerators(ring, &[a, c]);
    let mut cn = nums[1].clone();
    if let Some(m) = ring.localization_m() {
        cn = arith::coprime_part(&cn, m);
    }
    ring.from_bigint(arith::coprime_part(&cn, &nums[0]))
}

/// `(r1, r2)` with `(e + b r1, f + b r2)` unimodular, for `(e, f, b)` unimodular.
///
/// ℤ and ℤ[1/m]: make `E = e + b r1` nonzero, then `r2` from [`fsr_reduce`] on `(f, b, E)`.
/// Finite rings: exhaustive. Quadratic orders: pairs of height up to `cap`.
pub fn stable_range2_reduce(ring: &Ring, e: &Elem, f: &Elem, b: &Elem, cap: u32) -> Result<(Elem, Elem)> {
    if !ring.is_unimodular(&[e.clone(), f.clone(), b.clone()]) {
        return Err(Error::Precondition("stable_range2_reduce needs (e, f, b) unimodular".into()));
    }
    let works =
        |r1: &Elem, r2: &Elem| ring.is_unimodular(&[ring.add(e, &ring.mul(b, r1)), ring.add(f, &ring.mul(b, r2))]);
    let (z, o) = (ring.zero(), ring.one());
    if works(&z, &z) {
        return Ok((z.clone(), z));
    }
    let found = match ring.family() {
        Family::Integers | Family::Localized => {
            let r1 = if ring.is_zero(e) { o } else { z };
            let big_e = ring.add(e, &ring.mul(b, &r1));
            let r2 = fsr_reduce(ring, f, b, &big_e)?;
            Some((r1, r2))
        }
        _ if ring.is_finite() => {
            let elems = ring.elements()?;
            elems
                .iter()
                .flat_map(|r1| elems.iter().map(move |r2| (r1, r2)))
                .find(|(r1, r2)| works(r1, r2))
                .map(|(r1, r2)| (r1.clone(), r2.clone()))
        }
        Family::Quadratic => {
            let levels: Vec<Vec<Elem>> = (0..=cap).map(|h| ring.elements_of_height(h)).collect();
            let mut hit = None;
            'outer: for h in 0..levels.len() {
                let upto: Vec<&Elem> = levels[..=h].iter().flatten().collect();
                for r1 in &upto {
                    for r2 in &upto {
                        let top = levels[h].contains(r1) || levels[h].contains(r2);
                        if top && works(r1, r2) {
                            hit = Some(((*r1).clone(), (*r2).clone()));
                            break 'outer;
                        }
                    }
                }
            }
            match hit {
                Some(p) => Some(p),
                None => return Err(Error::CapExhausted(cap)),
            }
        }
        _ => return Err(Error::Unsupported { op: "stable_range2_reduce", ring: ring.to_string() }),
    };
    let (r1, r2) = found.ok_or_else(|| Error::Internal("finite ring without sr witness".into()))?;
    if !works(&r1, &r2) {
        return Err(Error::Internal(format!("stable range reduction failed over {ring}")));
    }
    Ok((r1, r2))
}

/// Turns `(e', f')` with `(ae' + cf', be' + df', det A)` unimodular into a certificate.
///
/// `(e, f) = (e' + det·r1, f' + det·r2)` is made unimodular; the ideal generated by
/// `(ae + cf, be + df, det)` is unchanged, and with `(e, f)` unimodular the pair alone
/// is then unimodular. `None` when the quadratic-order search cap is hit.
pub fn upgrade_to_simple(a: &Mat2, e1: &Elem, f1: &Elem, cap: u32) -> Result<Option<Certificate>> {
    let r = a.ring();
    let det = a.det();
    let (u, w) = pair::pair_image(a, e1, f1);
    if !r.is_unimodular(&[u, w, det.clone()]) {
        return Err(Error::Precondition("(ae'+cf', be'+df', det) is not unimodular".into()));
    }
    let (r1, r2) = match stable_range2_reduce(r, e1, f1, &det, cap) {
        Ok(p) => p,
        Err(Error::CapExhausted(_)) => return Ok(None),
        Err(err) => return Err(err),
    };
    let e = r.add(e1, &r.mul(&det, &r1));
    let f = r.add(f1, &r.mul(&det, &r2));
    pair::complete_direct(a, &e, &f)
        .map(Some)
        .ok_or_else(|| Error::Internal(format!("upgraded pair for {a} is not a certificate")))
}

/// Simple extension of `[[a, b], [0, d]]` (`a ≠ 0`) whose `(2,3)` entry is `-1`.
///
/// `f` makes `(b + d f, a)` unimodular and `a s + (b + d f) t = 1`; the certificate is
/// `(1, f, s, t)`.
pub fn triangular_simple_extension(a: &Mat2) -> Result<Mat3> {
    let r = a.ring();
    super::require_unimodular(a)?;
    if !r.is_zero(&a.c) {
        return Err(Error::Precondition("matrix is not upper triangular".into()));
    }
    if r.is_zero(&a.a) {
        return Err(Error::Precondition("(1,1) entry is zero".into()));
    }
    let f = fsr_reduce(r, &a.b, &a.d, &a.a)?;
    let bdf = r.add(&a.b, &r.mul(&a.d, &f));
    let st = r.bezout(&[a.a.clone(), bdf]).ok_or_else(|| Error::Internal("fsr pair not unimodular".into()))?;
    let cert = Certificate { e: r.one(), f, s: st[0].clone(), t: st[1].clone() };
    pair::assemble_simple_extension(a, &cert)
}
