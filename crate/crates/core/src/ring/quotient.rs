use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{frac_of, int_of, Elem, Kind, Ring, RingDescriptor};
use crate::arith;
use crate::error::{Error, Result};

/// The reduction `R → R/(a)` and a set-theoretic section back to `R`.
///
/// ℤ[1/m]/(a) is realised as ℤ/n′ where n′ is the numerator of `a` with every prime
/// factor of m removed.
#[derive(Clone, Debug)]
pub struct Quotient {
    base: Ring,
    target: Ring,
    modulus: Elem,
}

impl Quotient {
    pub(super) fn new(base: &Ring, a: &Elem) -> Result<Quotient> {
        if base.is_zero(a) {
            return Err(Error::ZeroModulus);
        }
        let target = match &base.0.kind {
            Kind::Integers => residues(int_of(a).abs())?,
            Kind::Residues { n, .. } => residues(int_of(a).gcd(n))?,
            Kind::Localized { m } => residues(arith::coprime_part(&frac_of(a).0, m).abs())?,
            Kind::Quadratic { .. } => Ring::new(&RingDescriptor::QuotientRing {
                base: Box::new(base.descriptor().clone()),
                modulus: a.clone(),
            })?,
            Kind::QuadQuotient { .. } => return Err(Error::Unsupported { op: "quotient", ring: base.to_string() }),
        };
        Ok(Quotient { base: base.clone(), target, modulus: a.clone() })
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn modulus(&self) -> &Elem {
        &self.modulus
    }

    pub fn reduce(&self, x: &Elem) -> Elem {
        match &self.base.0.kind {
            Kind::Integers | Kind::Residues { .. } => self.target.from_bigint(int_of(x).clone()),
            Kind::Localized { m } => {
                let (num, exp) = frac_of(x);
                let den = self.target.from_bigint(m.pow(exp));
                let inv = self.target.inverse(&den).expect("m is invertible modulo n'");
                self.target.mul(&self.target.from_bigint(num), &inv)
            }
            Kind::Quadratic { .. } => self.target.coerce(x).expect("quadratic element"),
            Kind::QuadQuotient { .. } => unreachable!("rejected in Quotient::new"),
        }
    }

    /// A preimage of `y` in the base ring (the canonical residue read as a base element).
    pub fn lift(&self, y: &Elem) -> Elem {
        match y {
            Elem::Int(r) => self.base.from_bigint(r.clone()),
            Elem::Quad { .. } => y.clone(),
            Elem::Frac { .. } => unreachable!("quotients are residue rings"),
        }
    }
}

fn residues(n: BigInt) -> Result<Ring> {
    debug_assert!(!n.is_negative());
    if n.is_zero() {
        return Err(Error::ZeroModulus);
    }
    if n.is_one() {
        return Err(Error::ZeroRing);
    }
    Ring::new(&RingDescriptor::IntegersModN { n })
}
