//! Deciding and constructing extensions of unimodular 2×2 matrices.
//!
//! A certificate `(e, f, s, t)` with `a(es) + b(et) + c(fs) + d(ft) = 1` gives the simple
//! extension `[[a, b, f], [c, d, -e], [-t, s, 0]]`, whose determinant is
//! `(be + df)t + (ae + cf)s`. Finding one reduces to finding `(e, f)` with
//! `(ae + cf, be + df)` unimodular.

mod diagonal;
mod factored;
mod fullness;
mod pair;
mod stable;

pub use diagonal::{diagonal_reduce, extension_from_diagonal};
pub use factored::{factored_form, pr6_pair, FactoredForm};
pub use fullness::{
    certificate_from_factorization, divisor_analysis, extension_from_factorization, nonfull_factorize, ExcludedSplit,
    FullProof, FullnessWitness, SplitFailure,
};
pub use pair::{assemble_simple_extension, complete_pair, heuristic_pair, search_pair};
pub use stable::{fsr_reduce, stable_range2_reduce, triangular_simple_extension, upgrade_to_simple};

use crate::error::{Error, Result};
use crate::matrix::{Mat2, Mat3};
use crate::ring::{Elem, Family, Ring};

/// Search height used when none is given.
pub const DEFAULT_BOUND: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub e: Elem,
    pub f: Elem,
    pub s: Elem,
    pub t: Elem,
}

impl Certificate {
    pub fn from_ints(ring: &Ring, v: [i64; 4]) -> Certificate {
        let [e, f, s, t] = v.map(|x| ring.int(x));
        Certificate { e, f, s, t }
    }

    /// `a(es) + b(et) + c(fs) + d(ft) == 1`.
    pub fn is_valid_for(&self, a: &Mat2) -> bool {
        let r = a.ring();
        let es = r.mul(&self.e, &self.s);
        let et = r.mul(&self.e, &self.t);
        let fs = r.mul(&self.f, &self.s);
        let ft = r.mul(&self.f, &self.t);
        let total = r.add(&r.dot2(&a.a, &es, &a.b, &et), &r.dot2(&a.c, &fs, &a.d, &ft));
        r.is_one(&total)
    }

    /// A certificate for `A` read as one for `Aᵀ`, and back: `(e, f, s, t) ↦ (s, t, e, f)`.
    pub fn transposed(&self) -> Certificate {
        Certificate { e: self.s.clone(), f: self.t.clone(), s: self.e.clone(), t: self.f.clone() }
    }

    /// `ν = det A + es + ft`, the middle characteristic coefficient of the extension.
    pub fn nu(&self, a: &Mat2) -> Elem {
        let r = a.ring();
        r.add(&a.det(), &r.dot2(&self.e, &self.s, &self.f, &self.t))
    }
}

/// Result of [`simply_extend`] or [`extend`].
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionOutcome {
    Simple {
        extension: Mat3,
        certificate: Certificate,
    },
    /// An extension is known, with a nonzero `(3,3)` entry.
    ExtendableOnly {
        extension: Mat3,
    },
    NotExtendable {
        witness: FullnessWitness,
    },
    Undecided {
        bound: u32,
    },
}

impl ExtensionOutcome {
    pub fn status(&self) -> &'static str {
        match self {
            ExtensionOutcome::Simple { .. } => "simple",
            ExtensionOutcome::ExtendableOnly { .. } => "extendable",
            ExtensionOutcome::NotExtendable { .. } => "not_extendable",
            ExtensionOutcome::Undecided { .. } => "undecided",
        }
    }

    pub fn is_simple(&self) -> bool {
        matches!(self, ExtensionOutcome::Simple { .. })
    }

    pub fn extension(&self) -> Option<&Mat3> {
        match self {
            ExtensionOutcome::Simple { extension, .. } | ExtensionOutcome::ExtendableOnly { extension } => {
                Some(extension)
            }
            _ => None,
        }
    }
}

pub(crate) fn require_unimodular(a: &Mat2) -> Result<()> {
    if a.is_unimodular() {
        Ok(())
    } else {
        Err(Error::NotUnimodular { generators: a.entries().iter().map(|e| a.ring().show(e)).collect() })
    }
}

/// Checks the outcome invariants against `a`; every public entry point returns through here.
pub fn validate(a: &Mat2, outcome: ExtensionOutcome) -> Result<ExtensionOutcome> {
    let r = a.ring();
    let bad = |what: &str| Err(Error::Internal(format!("{what} for {a}: {outcome:?}")));
    if let Some(ext) = outcome.extension() {
        if !r.is_one(&ext.det()) {
            return bad("extension with det ≠ 1");
        }
        if ext.theta() != *a {
            return bad("extension does not truncate to A");
        }
    }
    if let ExtensionOutcome::Simple { extension, certificate } = &outcome {
        if !r.is_zero(extension.get(2, 2)) || !certificate.is_valid_for(a) {
            return bad("simple extension with nonzero corner or bad certificate");
        }
    }
    if let ExtensionOutcome::NotExtendable { witness } = &outcome {
        if witness.is_factorization() {
            return bad("negative verdict with a factorisation");
        }
        if matches!(r.family(), Family::Integers | Family::Localized) {
            return bad("negative verdict over a ring where every unimodular matrix extends");
        }
    }
    Ok(outcome)
}

fn simple(a: &Mat2, certificate: Certificate) -> Result<ExtensionOutcome> {
    let extension = assemble_simple_extension(a, &certificate)?;
    validate(a, ExtensionOutcome::Simple { extension, certificate })
}

/// Certificate for invertible `A`: `(e, f)` is the first row of `A⁻¹`, so `(e, f)·A = (1, 0)`.
fn unit_det_certificate(a: &Mat2) -> Option<Certificate> {
    let inv = a.inverse()?;
    let r = a.ring();
    Some(Certificate { e: inv.a, f: inv.b, s: r.one(), t: r.zero() })
}

/// Certificate from the gcd factorisation of `A`, or of `Aᵀ`.
fn factored_certificate(a: &Mat2) -> Option<Certificate> {
    let try_one = |m: &Mat2| {
        let ff = factored_form(m)?;
        let (w, v) = pr6_pair(&ff)?;
        let (e, f) = ff.pair_from(&w, &v);
        pair::complete_direct(m, &e, &f)
    };
    try_one(a).or_else(|| try_one(&a.transpose()).map(|c| c.transposed()))
}

/// Decides simple extendability, constructing a simple extension when one is found.
///
/// Order: determinant zero (fullness), unit determinant, closed-form heuristics, the gcd
/// factorisation of `A` and `Aᵀ`, bounded search, and finally an extension lifted from
/// `R/(det A)` upgraded through the stable range. Over quadratic orders the lift and
/// upgrade run before the search, which is expensive there.
pub fn simply_extend(a: &Mat2, bound: u32) -> Result<ExtensionOutcome> {
    require_unimodular(a)?;
    let r = a.ring();
    let det = a.det();
    if r.is_zero(&det) {
        let witness = nonfull_factorize(a)?;
        return match &witness {
            FullnessWitness::Factorization { column, row } => {
                simple(a, certificate_from_factorization(a, column, row)?)
            }
            _ => validate(a, ExtensionOutcome::NotExtendable { witness }),
        };
    }
    if let Some(cert) = unit_det_certificate(a) {
        return simple(a, cert);
    }
    if let Some(cert) = heuristic_pair(a).and_then(|(e, f)| complete_pair(a, &e, &f)) {
        return simple(a, cert);
    }
    if let Some(cert) = factored_certificate(a) {
        return simple(a, cert);
    }
    let quadratic = r.family() == Family::Quadratic;
    if !quadratic {
        if let Some((e, f)) = search_pair(a, bound)? {
            return simple(a, complete_pair(a, &e, &f).expect("search returned an accepted pair"));
        }
        if r.is_finite() {
            return validate(a, ExtensionOutcome::NotExtendable { witness: exhaustive_witness(r) });
        }
    }
    match lift_from_quotient(a)? {
        Lifted::None(witness) => return validate(a, ExtensionOutcome::NotExtendable { witness }),
        Lifted::Some { e, f, .. } => {
            if let Some(cert) = upgrade_to_simple(a, &e, &f, bound)? {
                return simple(a, cert);
            }
        }
    }
    if quadratic {
        if let Some((e, f)) = search_pair(a, bound)? {
            return simple(a, complete_pair(a, &e, &f).expect("search returned an accepted pair"));
        }
    } else {
        return Err(Error::Internal(format!("{a} is unimodular over {r} but no certificate was found")));
    }
    validate(a, ExtensionOutcome::Undecided { bound })
}

fn exhaustive_witness(r: &Ring) -> FullnessWitness {
    let pairs = r.size().map(|s| s.pow(2)).and_then(|s| u64::try_from(s).ok()).unwrap_or(u64::MAX);
    FullnessWitness::Exhaustive { ring: r.descriptor().clone(), pairs }
}

#[allow(clippy::large_enum_variant)]
enum Lifted {
    /// `(e, f)` with `(ae + cf, be + df, det A)` unimodular, and an extension built from it.
    Some {
        e: Elem,
        f: Elem,
        extension: Mat3,
    },
    None(FullnessWitness),
}

/// Extendability for `det A` neither zero nor a unit.
///
/// Finite rings: search `(e, f)` with `(ae + cf, be + df, det)` unimodular; the third
/// Bézout coefficient is the `(3,3)` entry. Infinite rings: find a simple extension of
/// the reduction modulo `det A`, lift it to `B` with `det B = 1 + w det A`, and subtract
/// `w` from the corner.
fn lift_from_quotient(a: &Mat2) -> Result<Lifted> {
    let r = a.ring();
    let det = a.det();
    if r.is_finite() {
        let elems = r.elements()?;
        for e in &elems {
            for f in &elems {
                let (u, w) = pair::pair_image(a, e, f);
                if let Some(c) = r.bezout(&[u, w, det.clone()]) {
                    let extension = pair::assemble(a, e, f, &c[0], &c[1], &c[2]);
                    return Ok(Lifted::Some { e: e.clone(), f: f.clone(), extension });
                }
            }
        }
        return Ok(Lifted::None(exhaustive_witness(r)));
    }
    let quo = r.quotient(&det)?;
    let abar = a.map_into(quo.target(), |x| quo.reduce(x));
    let elems = quo.target().elements()?;
    let mut found = None;
    'search: for e in &elems {
        for f in &elems {
            if let Some(c) = complete_pair(&abar, e, f) {
                found = Some(c);
                break 'search;
            }
        }
    }
    let Some(c) = found else {
        return Ok(Lifted::None(exhaustive_witness(quo.target())));
    };
    let [e, f, s, t] = [&c.e, &c.f, &c.s, &c.t].map(|x| quo.lift(x));
    let b = pair::assemble(a, &e, &f, &s, &t, &r.zero());
    let w = r
        .divide_exact(&r.sub(&b.det(), &r.one()), &det)
        .ok_or_else(|| Error::Internal("lifted extension is not 1 modulo det".into()))?;
    let extension = b.with_entry(2, 2, r.neg(&w));
    Ok(Lifted::Some { e, f, extension })
}

/// Decides extendability, constructing an extension when one exists.
///
/// Unit and zero determinants go through [`simply_extend`]. Otherwise the reduction
/// modulo `det A` decides; a found extension is upgraded to a simple one when the stable
/// range reduction succeeds.
pub fn extend(a: &Mat2, bound: u32) -> Result<ExtensionOutcome> {
    require_unimodular(a)?;
    let r = a.ring();
    let det = a.det();
    if r.is_zero(&det) || r.is_unit(&det) {
        return simply_extend(a, bound);
    }
    match lift_from_quotient(a)? {
        Lifted::None(witness) => validate(a, ExtensionOutcome::NotExtendable { witness }),
        Lifted::Some { e, f, extension } => match upgrade_to_simple(a, &e, &f, bound)? {
            Some(cert) => simple(a, cert),
            None => validate(a, ExtensionOutcome::ExtendableOnly { extension }),
        },
    }
}

#[cfg(test)]
mod tests;
