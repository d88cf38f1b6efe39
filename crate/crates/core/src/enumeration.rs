//! Bounded enumeration of the simple extensions of a matrix over ℤ and of the values
//! `ν = det A + es + ft` they realise.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::extension::{self, Certificate};
use crate::matrix::Mat2;
use crate::ring::{Elem, Family, Ring};

/// Certificates of height at most `bound` and the ν values they give.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuSample {
    pub matrix: Mat2,
    pub bound: u32,
    pub gamma: Vec<Certificate>,
    /// Sorted, without repeats.
    pub values: Vec<Elem>,
}

fn require_integers(a: &Mat2, op: &'static str) -> Result<()> {
    if a.ring().family() != Family::Integers {
        return Err(Error::Unsupported { op, ring: a.ring().descriptor().to_string() });
    }
    extension::require_unimodular(a)
}

/// All `(e, f, s, t)` with entries in `[-bound, bound]` and `a(es) + b(et) + c(fs) + d(ft) = 1`,
/// in lexicographic order.
///
/// For fixed `(e, f, s)` the condition `s(ae + cf) + t(be + df) = 1` is linear in `t`.
pub fn gamma_enumerate(a: &Mat2, bound: u32) -> Result<Vec<Certificate>> {
    require_integers(a, "gamma enumeration")?;
    let r = a.ring();
    let [ea, eb, ec, ed] = a.entries().map(|x| r.lift_int(&x));
    let b = i64::from(bound);
    let one = BigInt::from(1);
    let bound_big = BigInt::from(bound);
    let mut out: Vec<[BigInt; 4]> = (-b..=b)
        .into_par_iter()
        .flat_map_iter(|e| {
            let mut local = Vec::new();
            let e = BigInt::from(e);
            for f in -b..=b {
                let f = BigInt::from(f);
                let u = &ea * &e + &ec * &f;
                let v = &eb * &e + &ed * &f;
                for s in -b..=b {
                    let s = BigInt::from(s);
                    let rest = &one - &s * &u;
                    if v.is_zero() {
                        if rest.is_zero() {
                            local.extend((-b..=b).map(|t| [e.clone(), f.clone(), s.clone(), BigInt::from(t)]));
                        }
                    } else {
                        let (t, rem) = rest.div_rem(&v);
                        if rem.is_zero() && t.abs() <= bound_big {
                            local.push([e.clone(), f.clone(), s.clone(), t]);
                        }
                    }
                }
            }
            local
        })
        .collect();
    out.sort();
    Ok(out
        .into_iter()
        .map(|[e, f, s, t]| Certificate {
            e: r.from_bigint(e),
            f: r.from_bigint(f),
            s: r.from_bigint(s),
            t: r.from_bigint(t),
        })
        .collect())
}

pub fn nu_enumerate(a: &Mat2, bound: u32) -> Result<NuSample> {
    let gamma = gamma_enumerate(a, bound)?;
    let values: BTreeSet<Elem> = gamma.iter().map(|c| c.nu(a)).collect();
    Ok(NuSample { matrix: a.clone(), bound, gamma, values: values.into_iter().collect() })
}

/// The set `base + modulus·R`; a zero modulus is the single point `base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueClass {
    ring: Ring,
    pub base: Elem,
    pub modulus: Elem,
}

impl ResidueClass {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn contains(&self, x: &Elem) -> bool {
        let r = &self.ring;
        let diff = r.sub(x, &self.base);
        if r.is_zero(&self.modulus) {
            r.is_zero(&diff)
        } else {
            r.divides(&self.modulus, &diff)
        }
    }

    /// True when the class is all of `R`.
    pub fn is_everything(&self) -> bool {
        self.ring.is_unit(&self.modulus)
    }

    pub fn show(&self) -> String {
        let r = &self.ring;
        if r.is_zero(&self.modulus) {
            format!("{{{}}}", r.show(&self.base))
        } else if self.is_everything() {
            "R".to_string()
        } else {
            format!("{} + {}R", r.show(&self.base), r.show(&self.modulus))
        }
    }
}

/// `ν(Diag(1, d)) = 2 + (d - 1)R`.
pub fn nu_diag_closed_form(ring: &Ring, d: &Elem) -> Result<ResidueClass> {
    if !matches!(ring.family(), Family::Integers | Family::Localized) {
        return Err(Error::Unsupported { op: "diagonal ν closed form", ring: ring.descriptor().to_string() });
    }
    let d = ring.coerce(d)?;
    let modulus = ring.associate_normal(&ring.sub(&d, &ring.one()));
    Ok(ResidueClass { ring: ring.clone(), base: ring.int(2), modulus })
}
