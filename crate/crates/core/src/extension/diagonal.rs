//! `M A N = Diag(1, det A)` from a certificate, and the simple extension it induces.

use crate::error::{Error, Result};
use crate::matrix::{Mat2, Mat3};
use crate::ring::Elem;

use super::Certificate;

/// `M, N ∈ SL₂` with `M A N = Diag(1, det A)`.
///
/// `M` starts as `[[e, f], [-y, x]]` with `ex + fy = 1` and `N` as `[[s, -q], [t, p]]` with
/// `sp + tq = 1`, so `(MAN)₁₁ = 1`; one row and one column operation clear the rest.
pub fn diagonal_reduce(a: &Mat2, cert: &Certificate) -> Result<(Mat2, Mat2)> {
    if !cert.is_valid_for(a) {
        return Err(Error::InvalidCertificate);
    }
    let r = a.ring();
    let xy = r.bezout(&[cert.e.clone(), cert.f.clone()]).ok_or(Error::InvalidCertificate)?;
    let pq = r.bezout(&[cert.s.clone(), cert.t.clone()]).ok_or(Error::InvalidCertificate)?;
    let m0 = Mat2::new(r, cert.e.clone(), cert.f.clone(), r.neg(&xy[1]), xy[0].clone())?;
    let n0 = Mat2::new(r, cert.s.clone(), r.neg(&pq[1]), cert.t.clone(), pq[0].clone())?;
    let p = m0.mul(a).mul(&n0);
    debug_assert!(r.is_one(&p.a));
    let (beta, gamma) = (p.b.clone(), p.c.clone());
    let z = r.zero();
    let o = r.one();
    let row_op = Mat2::new(r, o.clone(), z.clone(), r.neg(&gamma), o.clone())?;
    let col_op = Mat2::new(r, o.clone(), r.neg(&beta), z, o)?;
    let m = row_op.mul(&m0);
    let n = n0.mul(&col_op);
    let d = m.mul(a).mul(&n);
    if d != Mat2::diag(r, r.one(), a.det()) {
        return Err(Error::Internal(format!("diagonal reduction of {a} gave {d}")));
    }
    Ok((m, n))
}

/// `σ(M⁻¹) · [[1, 0, 0], [0, d, 1], [0, -1, 0]] · σ(N⁻¹)`.
///
/// When `M A N = Diag(1, d)` this is a simple extension of `A`.
pub fn extension_from_diagonal(m: &Mat2, n: &Mat2, d: &Elem) -> Result<Mat3> {
    let r = m.ring();
    if n.ring() != r {
        return Err(Error::Precondition("M and N live over different rings".into()));
    }
    let mi = m.inverse().ok_or_else(|| Error::Precondition("M is not invertible".into()))?;
    let ni = n.inverse().ok_or_else(|| Error::Precondition("N is not invertible".into()))?;
    let core =
        Mat3::new(r, [[r.one(), r.zero(), r.zero()], [r.zero(), d.clone(), r.one()], [r.zero(), r.int(-1), r.zero()]])?;
    Ok(mi.sigma_auto()?.mul(&core).mul(&ni.sigma_auto()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn identity_reduction() {
        let r = Ring::integers();
        let i = Mat2::identity(&r);
        let cert = Certificate::from_ints(&r, [1, 0, 1, 0]);
        let (m, n) = diagonal_reduce(&i, &cert).unwrap();
        assert_eq!((m, n), (i.clone(), i));
    }

    #[test]
    fn double_primes_reduction() {
        let r = Ring::integers();
        let a = Mat2::from_ints(&r, [[15, 6], [10, 14]]);
        let cert = Certificate::from_ints(&r, [-1, -2, -1, 1]);
        let (m, n) = diagonal_reduce(&a, &cert).unwrap();
        assert_eq!(m.mul(&a).mul(&n), Mat2::diag(&r, r.one(), r.int(150)));
        let ext = extension_from_diagonal(&m, &n, &r.int(150)).unwrap();
        assert_eq!((ext.det(), ext.theta(), ext.get(2, 2).clone()), (r.one(), a, r.zero()));
    }

    #[test]
    fn det_zero_reduction() {
        let r = Ring::integers();
        let a = Mat2::from_ints(&r, [[2, 4], [3, 6]]);
        // From the factorisation (2, 3)ᵀ (1, 2).
        let cert = Certificate::from_ints(&r, [-1, 1, 1, 0]);
        let (m, n) = diagonal_reduce(&a, &cert).unwrap();
        assert_eq!(m.mul(&a).mul(&n), Mat2::diag(&r, r.one(), r.zero()));
    }

    #[test]
    fn bare_diagonal_extensions() {
        let r = Ring::integers();
        let i = Mat2::identity(&r);
        let ext = extension_from_diagonal(&i, &i, &r.int(7)).unwrap();
        assert_eq!(ext, Mat3::from_ints(&r, [[1, 0, 0], [0, 7, 1], [0, -1, 0]]));
        let ext = extension_from_diagonal(&i, &i, &r.zero()).unwrap();
        assert_eq!(ext, Mat3::from_ints(&r, [[1, 0, 0], [0, 0, 1], [0, -1, 0]]));
        assert_eq!(ext.det(), r.one());
        assert!(extension_from_diagonal(&Mat2::diag(&r, r.int(2), r.one()), &i, &r.one()).is_err());
    }
}
