//! The column-gcd factorisation `a = g a'`, `c = g c'`, `b = h b'`, `d = h d'` and the
//! `(w, v)` parametrisation of candidate pairs over integral domains.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith;
use crate::matrix::Mat2;
use crate::ring::{Elem, Family, Ring};

/// Primed entries are stored as `a1, b1, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredForm {
    ring: Ring,
    pub g: Elem,
    pub h: Elem,
    pub a1: Elem,
    pub b1: Elem,
    pub c1: Elem,
    pub d1: Elem,
    /// `a1 e1 + c1 f1 = 1`.
    pub e1: Elem,
    pub f1: Elem,
    /// `b1 c1 - a1 d1`.
    pub l: Elem,
    /// `b1 e1 + d1 f1`.
    pub m: Elem,
}

impl FactoredForm {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// `(e, f) = (w e1 + c1 v, w f1 - a1 v)`, for which `(ae + cf, be + df) = (g w, h(w m + v l))`.
    pub fn pair_from(&self, w: &Elem, v: &Elem) -> (Elem, Elem) {
        let r = &self.ring;
        (r.dot2(w, &self.e1, &self.c1, v), r.sub(&r.mul(w, &self.f1), &r.mul(&self.a1, v)))
    }

    fn check(&self, a: &Mat2) -> bool {
        let r = &self.ring;
        let one = r.one();
        r.mul(&self.g, &self.a1) == a.a
            && r.mul(&self.g, &self.c1) == a.c
            && r.mul(&self.h, &self.b1) == a.b
            && r.mul(&self.h, &self.d1) == a.d
            && r.dot2(&self.a1, &self.e1, &self.c1, &self.f1) == one
            && self.l == r.sub(&r.mul(&self.b1, &self.c1), &r.mul(&self.a1, &self.d1))
            && self.m == r.dot2(&self.b1, &self.e1, &self.d1, &self.f1)
    }
}

/// Integer version over ℤ; also used through lifting for ℤ/n.
fn integer_form(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> Option<[BigInt; 10]> {
    let (g, _, _) = arith::xgcd(a, c);
    if g.is_zero() {
        return None;
    }
    let (a1, c1) = (a / &g, c / &g);
    let (h, _, _) = arith::xgcd(b, d);
    let (b1, d1) = if h.is_zero() { (BigInt::zero(), BigInt::from(1)) } else { (b / &h, d / &h) };
    let (_, e1, f1) = arith::xgcd(&a1, &c1);
    let l = &b1 * &c1 - &a1 * &d1;
    let m = &b1 * &e1 + &d1 * &f1;
    Some([g, h, a1, b1, c1, d1, e1, f1, l, m])
}

/// Gcd-based factorisation; available over ℤ, ℤ[1/m] and (through integer lifts) ℤ/n.
///
/// `None` when the first column is zero or the ring has no gcd.
pub fn factored_form(a: &Mat2) -> Option<FactoredForm> {
    let r = a.ring();
    let ff = match r.family() {
        Family::Integers => from_ints(r, a),
        Family::IntegersModN | Family::Quotient if r.residue_modulus().is_some() => from_ints(r, a),
        Family::Localized => {
            let g = r.gcd(&a.a, &a.c).ok()?;
            if r.is_zero(&g) {
                return None;
            }
            let h = r.gcd(&a.b, &a.d).ok()?;
            let (a1, c1) = (r.divide_exact(&a.a, &g)?, r.divide_exact(&a.c, &g)?);
            let (b1, d1) = if r.is_zero(&h) {
                (r.zero(), r.one())
            } else {
                (r.divide_exact(&a.b, &h)?, r.divide_exact(&a.d, &h)?)
            };
            let ef = r.bezout(&[a1.clone(), c1.clone()])?;
            let (e1, f1) = (ef[0].clone(), ef[1].clone());
            let l = r.sub(&r.mul(&b1, &c1), &r.mul(&a1, &d1));
            let m = r.dot2(&b1, &e1, &d1, &f1);
            Some(FactoredForm { ring: r.clone(), g, h, a1, b1, c1, d1, e1, f1, l, m })
        }
        _ => None,
    }?;
    debug_assert!(ff.check(a));
    ff.check(a).then_some(ff)
}

fn from_ints(r: &Ring, a: &Mat2) -> Option<FactoredForm> {
    let [x, y, z, w] = a.entries().map(|e| r.lift_int(&e));
    let v = integer_form(&x, &y, &z, &w)?;
    let [g, h, a1, b1, c1, d1, e1, f1, l, m] = v.map(|n| r.from_bigint(n));
    if r.is_finite() && r.is_zero(&g) {
        return None;
    }
    Some(FactoredForm { ring: r.clone(), g, h, a1, b1, c1, d1, e1, f1, l, m })
}

/// `(w, v)` from the first unimodular pair among `(g, l)`, `(g, m)`, `(h, l)`, `(h, m)`.
///
/// The result makes `(g, w m + v l)` and `(w, h v l)` unimodular, so
/// [`FactoredForm::pair_from`] yields a valid `(e, f)`.
pub fn pr6_pair(ff: &FactoredForm) -> Option<(Elem, Elem)> {
    let r = &ff.ring;
    let um = |x: &Elem, y: &Elem| r.is_unimodular(&[x.clone(), y.clone()]);
    if r.is_zero(&ff.g) {
        return None;
    }
    if um(&ff.g, &ff.l) {
        return Some((ff.g.clone(), r.one()));
    }
    if um(&ff.g, &ff.m) {
        return Some((r.one(), r.zero()));
    }
    if um(&ff.h, &ff.l) {
        let pq = r.bezout(&[ff.l.clone(), ff.m.clone()])?;
        let (p, q) = (&pq[0], &pq[1]);
        let w = r.add(&r.mul(&ff.h, q), &ff.l);
        let v = r.sub(&r.mul(&ff.h, p), &ff.m);
        return Some((w, v));
    }
    if um(&ff.h, &ff.m) {
        let hl = r.mul(&ff.h, &ff.l);
        let wv = r.bezout(&[ff.m.clone(), hl])?;
        return Some((wv[0].clone(), r.mul(&ff.h, &wv[1])));
    }
    None
}
