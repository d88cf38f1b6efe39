//! Determinant-zero matrices: a column-times-row factorisation, or a proof that none exists.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::matrix::{Mat2, Mat3};
use crate::ring::{Elem, Family, RingDescriptor};

use super::{diagonal, pair, Certificate};

/// Evidence about non-fullness of a determinant-zero matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FullnessWitness {
    /// `A = column · row`.
    Factorization { column: [Elem; 2], row: [Elem; 2] },
    /// Every splitting of the pivot entry fails, so `A` is full.
    FullProof(FullProof),
    /// No pair `(e, f)` over the finite ring `ring` has unimodular image: checked all `pairs`.
    Exhaustive { ring: RingDescriptor, pairs: u64 },
}

/// Case analysis over the divisors of one nonzero entry (integral domains).
///
/// If `A = (l, m)ᵀ(o, q)` then the column entry in the pivot row is, up to a unit, a
/// divisor `δ` of the pivot; each `δ` forces the remaining entries by exact division.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullProof {
    /// `(row, column)`, zero-based.
    pub pivot: (usize, usize),
    pub pivot_value: Elem,
    /// Divisors of the pivot, one per associate class.
    pub divisors: Vec<Elem>,
    /// One entry per divisor, in the same order.
    pub excluded: Vec<ExcludedSplit>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcludedSplit {
    pub divisor: Elem,
    pub failure: SplitFailure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitFailure {
    NotDivisible { dividend: Elem, divisor: Elem },
    Mismatch { position: (usize, usize), expected: Elem, found: Elem },
}

impl FullnessWitness {
    pub fn is_factorization(&self) -> bool {
        matches!(self, FullnessWitness::Factorization { .. })
    }
}

fn check_det_zero(a: &Mat2) -> Result<()> {
    super::require_unimodular(a)?;
    if !a.ring().is_zero(&a.det()) {
        return Err(Error::Precondition("fullness needs det(A) = 0".into()));
    }
    Ok(())
}

fn product_matches(a: &Mat2, column: &[Elem; 2], row: &[Elem; 2]) -> bool {
    let r = a.ring();
    let rows = a.rows();
    (0..2).all(|i| (0..2).all(|j| r.mul(&column[i], &row[j]) == rows[i][j]))
}

/// Factorises a unimodular determinant-zero matrix, or proves it full.
///
/// ℤ and ℤ[1/m] use gcds, finite rings go through a certificate and diagonal reduction,
/// quadratic orders use the divisor case analysis.
pub fn nonfull_factorize(a: &Mat2) -> Result<FullnessWitness> {
    check_det_zero(a)?;
    let r = a.ring();
    let witness = match r.family() {
        Family::Integers | Family::Localized => by_gcd(a)?,
        Family::Quadratic => divisor_analysis(a)?,
        _ if r.is_finite() => by_certificate(a)?,
        _ => return Err(Error::Unsupported { op: "fullness decision", ring: r.to_string() }),
    };
    if let FullnessWitness::Factorization { column, row } = &witness {
        if !product_matches(a, column, row) {
            return Err(Error::Internal(format!("factorisation of {a} does not multiply back")));
        }
    }
    Ok(witness)
}

fn by_gcd(a: &Mat2) -> Result<FullnessWitness> {
    let r = a.ring();
    let g = r.gcd(&a.a, &a.c)?;
    if r.is_zero(&g) {
        // Zero first column: A = (b, d)ᵀ (0, 1).
        return Ok(FullnessWitness::Factorization { column: [a.b.clone(), a.d.clone()], row: [r.zero(), r.one()] });
    }
    let div = |x: &Elem, d: &Elem| r.divide_exact(x, d).ok_or_else(|| Error::Internal("inexact gcd division".into()));
    let (a1, c1) = (div(&a.a, &g)?, div(&a.c, &g)?);
    // a1 d = b c1 with (a1, c1) coprime, so a1 | b and c1 | d with the same quotient.
    let h = if !r.is_zero(&a1) { div(&a.b, &a1)? } else { div(&a.d, &c1)? };
    Ok(FullnessWitness::Factorization { column: [a1, c1], row: [g, h] })
}

fn by_certificate(a: &Mat2) -> Result<FullnessWitness> {
    let r = a.ring();
    let Some((e, f)) = pair::search_pair(a, 0)? else {
        let n = r.size().map(|s| s.pow(2)).and_then(|s| u64::try_from(s).ok()).unwrap_or(u64::MAX);
        return Ok(FullnessWitness::Exhaustive { ring: r.descriptor().clone(), pairs: n });
    };
    let cert = pair::complete_pair(a, &e, &f).expect("search returned an accepted pair");
    let (m, n) = diagonal::diagonal_reduce(a, &cert)?;
    // A = M⁻¹ Diag(1, 0) N⁻¹ = (first column of M⁻¹)(first row of N⁻¹).
    let mi = m.inverse().ok_or_else(|| Error::Internal("M not invertible".into()))?;
    let ni = n.inverse().ok_or_else(|| Error::Internal("N not invertible".into()))?;
    Ok(FullnessWitness::Factorization { column: [mi.a, mi.c], row: [ni.a, ni.b] })
}

/// Divisor case analysis on a least-norm nonzero entry (ℤ and quadratic orders).
pub fn divisor_analysis(a: &Mat2) -> Result<FullnessWitness> {
    let r = a.ring();
    let rows = a.rows();
    let size = |x: &Elem| r.norm(x).unwrap_or_else(|| r.lift_int(x).abs());
    let (pi, pj) = (0..2)
        .flat_map(|i| (0..2).map(move |j| (i, j)))
        .filter(|&(i, j)| !r.is_zero(&rows[i][j]))
        .min_by_key(|&(i, j)| size(&rows[i][j]))
        .ok_or_else(|| Error::Precondition("zero matrix".into()))?;
    let (oi, oj) = (1 - pi, 1 - pj);
    let x = rows[pi][pj].clone();
    let divisors = r.divisors_up_to_units(&x)?;
    let mut excluded = Vec::new();
    for delta in &divisors {
        let not_div = |dividend: &Elem, divisor: &Elem| SplitFailure::NotDivisible {
            dividend: dividend.clone(),
            divisor: divisor.clone(),
        };
        // column[pi] = δ, row[pj] = x / δ.
        let row_p = r.divide_exact(&x, delta).expect("divisor divides");
        let Some(col_o) = r.divide_exact(&rows[oi][pj], &row_p) else {
            excluded.push(ExcludedSplit { divisor: delta.clone(), failure: not_div(&rows[oi][pj], &row_p) });
            continue;
        };
        let Some(row_o) = r.divide_exact(&rows[pi][oj], delta) else {
            excluded.push(ExcludedSplit { divisor: delta.clone(), failure: not_div(&rows[pi][oj], delta) });
            continue;
        };
        let found = r.mul(&col_o, &row_o);
        if found != rows[oi][oj] {
            excluded.push(ExcludedSplit {
                divisor: delta.clone(),
                failure: SplitFailure::Mismatch { position: (oi, oj), expected: rows[oi][oj].clone(), found },
            });
            continue;
        }
        let mut column = [r.zero(), r.zero()];
        let mut row = [r.zero(), r.zero()];
        column[pi] = delta.clone();
        column[oi] = col_o;
        row[pj] = row_p;
        row[oj] = row_o;
        return Ok(FullnessWitness::Factorization { column, row });
    }
    Ok(FullnessWitness::FullProof(FullProof { pivot: (pi, pj), pivot_value: x, divisors, excluded }))
}

/// Certificate `(e, f, s, t)` read off a factorisation: `e l + f m = 1`, `s o + t q = 1`.
pub fn certificate_from_factorization(a: &Mat2, column: &[Elem; 2], row: &[Elem; 2]) -> Result<Certificate> {
    let r = a.ring();
    if !product_matches(a, column, row) {
        return Err(Error::Precondition("column · row does not equal A".into()));
    }
    let ef = r.bezout(column).ok_or_else(|| Error::Precondition("factorisation column is not unimodular".into()))?;
    let st = r.bezout(row).ok_or_else(|| Error::Precondition("factorisation row is not unimodular".into()))?;
    let cert = Certificate { e: ef[0].clone(), f: ef[1].clone(), s: st[0].clone(), t: st[1].clone() };
    debug_assert!(cert.is_valid_for(a));
    Ok(cert)
}

/// `[[lo, lq, f], [mo, mq, -e], [-t, s, 0]]` for `A = (l, m)ᵀ(o, q)`.
pub fn extension_from_factorization(a: &Mat2, witness: &FullnessWitness) -> Result<Mat3> {
    let FullnessWitness::Factorization { column, row } = witness else {
        return Err(Error::Precondition("witness is not a factorisation".into()));
    };
    let cert = certificate_from_factorization(a, column, row)?;
    pair::assemble_simple_extension(a, &cert)
}
