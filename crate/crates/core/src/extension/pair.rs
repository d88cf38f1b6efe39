//! Certificates `(e, f, s, t)` and the ways of finding the pair `(e, f)`.

use crate::error::{Error, Result};
use crate::matrix::{Mat2, Mat3};
use crate::ring::{Elem, Ring};

use super::Certificate;

/// `[[a, b, f], [c, d, -e], [-t, s, corner]]`.
pub(crate) fn assemble(a: &Mat2, e: &Elem, f: &Elem, s: &Elem, t: &Elem, corner: &Elem) -> Mat3 {
    let r = a.ring();
    Mat3::new(
        r,
        [
            [a.a.clone(), a.b.clone(), f.clone()],
            [a.c.clone(), a.d.clone(), r.neg(e)],
            [r.neg(t), s.clone(), corner.clone()],
        ],
    )
    .expect("entries already live in the ring")
}

/// The simple extension `[[a, b, f], [c, d, -e], [-t, s, 0]]` of `a`.
pub fn assemble_simple_extension(a: &Mat2, cert: &Certificate) -> Result<Mat3> {
    if !cert.is_valid_for(a) {
        return Err(Error::InvalidCertificate);
    }
    let r = a.ring();
    Ok(assemble(a, &cert.e, &cert.f, &cert.s, &cert.t, &r.zero()))
}

/// `(ae + cf, be + df)`: the row `(e, f)·A`.
pub(crate) fn pair_image(a: &Mat2, e: &Elem, f: &Elem) -> (Elem, Elem) {
    let r = a.ring();
    (r.dot2(&a.a, e, &a.c, f), r.dot2(&a.b, e, &a.d, f))
}

/// Completes `(e, f)` to a certificate for `a` when `(e, f)·A` is unimodular.
///
/// Falls back to the transposed test `(ae + bf, ce + df)`; a certificate `(e, f, s, t)`
/// for `Aᵀ` is returned in the frame of `A` as `(s, t, e, f)`.
pub fn complete_pair(a: &Mat2, e: &Elem, f: &Elem) -> Option<Certificate> {
    complete_direct(a, e, f).or_else(|| complete_direct(&a.transpose(), e, f).map(|c| c.transposed()))
}

pub(crate) fn complete_direct(a: &Mat2, e: &Elem, f: &Elem) -> Option<Certificate> {
    let r = a.ring();
    let (u, w) = pair_image(a, e, f);
    let st = r.bezout(&[u, w])?;
    let [s, t]: [Elem; 2] = st.try_into().ok()?;
    Some(Certificate { e: e.clone(), f: f.clone(), s, t })
}

fn bezout2(r: &Ring, x: &Elem, y: &Elem) -> Option<(Elem, Elem)> {
    let c = r.bezout(&[x.clone(), y.clone()])?;
    let [p, q]: [Elem; 2] = c.try_into().ok()?;
    Some((p, q))
}

/// Cheap closed-form candidates for `(e, f)`, tried in a fixed order.
///
/// 1. a unit entry;
/// 2. a unimodular row or column;
/// 3. two entries in the Jacobson radical;
/// 4. `a | b` and `a | c`;
/// 5. the shapes `a = 0, d = 1 + b + c` and `c = 0, d = 1 - a + b`, both with `(e, f) = (1, -1)`.
pub fn heuristic_pair(a: &Mat2) -> Option<(Elem, Elem)> {
    let r = a.ring();
    let (one, zero) = (r.one(), r.zero());
    let (ea, eb, ec, ed) = (&a.a, &a.b, &a.c, &a.d);
    let mut candidates: Vec<(Elem, Elem)> = Vec::new();

    if r.is_unit(ea) || r.is_unit(eb) {
        candidates.push((one.clone(), zero.clone()));
    }
    if r.is_unit(ec) || r.is_unit(ed) {
        candidates.push((zero.clone(), one.clone()));
    }
    let accepted = |cands: &[(Elem, Elem)]| cands.iter().find(|(e, f)| complete_pair(a, e, f).is_some()).cloned();
    if let Some(p) = accepted(&candidates) {
        return Some(p);
    }

    candidates.clear();
    if r.is_unimodular(&[ea.clone(), eb.clone()]) {
        candidates.push((one.clone(), zero.clone()));
    }
    if r.is_unimodular(&[ec.clone(), ed.clone()]) {
        candidates.push((zero.clone(), one.clone()));
    }
    candidates.extend(bezout2(r, ea, ec));
    candidates.extend(bezout2(r, eb, ed));
    if let Some(p) = accepted(&candidates) {
        return Some(p);
    }

    candidates.clear();
    if r.jacobson_contains(eb) && r.jacobson_contains(ec) {
        candidates.extend(bezout2(r, ea, ed));
    }
    if r.jacobson_contains(ea) && r.jacobson_contains(ed) {
        candidates.extend(bezout2(r, eb, ec));
    }
    if let Some(p) = accepted(&candidates) {
        return Some(p);
    }

    candidates.clear();
    if let (Some(b1), Some(c1)) = (r.divide_exact(eb, ea), r.divide_exact(ec, ea)) {
        if let Some((q, f)) = bezout2(r, ea, ed) {
            // e = q - c'f(1 - b')
            let e = r.sub(&q, &r.mul(&r.mul(&c1, &f), &r.sub(&one, &b1)));
            candidates.push((e, f));
        }
    }
    let minus_one = r.neg(&one);
    let shape1 = r.is_zero(ea) && *ed == r.sum([&one, eb, ec]);
    let shape2 = r.is_zero(ec) && *ed == r.add(&r.sub(&one, ea), eb);
    if shape1 || shape2 {
        candidates.push((one.clone(), minus_one));
    }
    accepted(&candidates)
}

/// Elements in increasing height, grouped by height, for the pair search.
fn height_levels(r: &Ring, bound: u32) -> Vec<Vec<Elem>> {
    (0..=bound).map(|h| r.elements_of_height(h)).collect()
}

/// Exhaustive search for `(e, f)` accepted by [`complete_pair`].
///
/// Infinite rings: pairs of height at most `bound`, by increasing height. Finite rings:
/// every pair, `e` outer, `f` inner, in element order; the bound is ignored.
pub fn search_pair(a: &Mat2, bound: u32) -> Result<Option<(Elem, Elem)>> {
    super::require_unimodular(a)?;
    let r = a.ring();
    if r.is_finite() {
        let elems = r.elements()?;
        for e in &elems {
            for f in &elems {
                if complete_pair(a, e, f).is_some() {
                    return Ok(Some((e.clone(), f.clone())));
                }
            }
        }
        return Ok(None);
    }
    let levels = height_levels(r, bound);
    for h in 0..levels.len() {
        let top = &levels[h];
        let below = levels[..h].iter().flatten();
        // Pairs whose larger height is exactly h: (≤h, h) then (h, <h).
        for e in below.clone().chain(top) {
            for f in top {
                if complete_pair(a, e, f).is_some() {
                    return Ok(Some((e.clone(), f.clone())));
                }
            }
        }
        for e in top {
            for f in below.clone() {
                if complete_pair(a, e, f).is_some() {
                    return Ok(Some((e.clone(), f.clone())));
                }
            }
        }
    }
    Ok(None)
}
