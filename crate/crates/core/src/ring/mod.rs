//! Concrete commutative rings with identity and their canonical element forms.
//!
//! A [`Ring`] is a cheap-to-clone handle built from a [`RingDescriptor`]. Elements are
//! plain [`Elem`] values in canonical form, so structural equality is ring equality.
//!
//! | descriptor | element | canonical form |
//! |---|---|---|
//! | `Integers` | `Int(x)` | any integer |
//! | `IntegersModN(n)` | `Int(r)` | `0 <= r < n` |
//! | `LocalizedIntegers(m)` | `Frac { num, exp }` = num / m^exp | `exp == 0` or `m ∤ num` |
//! | `QuadraticOrder(q)` | `Quad { x, y }` = x + yθ, θ² = −q | any pair |
//! | `QuotientRing(ℤ, n)` | `Int(r)` | `0 <= r < |n|` |
//! | `QuotientRing(ℤ[θ], α)` | `Quad { x, y }` | inside the HNF box of αℤ[θ] |

mod localized;
mod quadratic;
mod quotient;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::lattice::Hnf2;

pub use quotient::Quotient;

/// Element of one of the supported rings. Only meaningful together with its [`Ring`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Int(BigInt),
    Frac { num: BigInt, exp: u32 },
    Quad { x: BigInt, y: BigInt },
}

impl Elem {
    pub fn int(x: impl Into<BigInt>) -> Elem {
        Elem::Int(x.into())
    }

    pub fn quad(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Elem {
        Elem::Quad { x: x.into(), y: y.into() }
    }
}

/// Which ring to build.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingDescriptor {
    Integers,
    IntegersModN {
        n: BigInt,
    },
    /// ℤ[1/m].
    LocalizedIntegers {
        m: BigInt,
    },
    /// ℤ[θ] with θ² = −q.
    QuadraticOrder {
        q: BigInt,
    },
    /// `base / (modulus)`; the base must be `Integers` or `QuadraticOrder`.
    QuotientRing {
        base: Box<RingDescriptor>,
        modulus: Elem,
    },
}

impl RingDescriptor {
    pub fn zmod(n: u64) -> RingDescriptor {
        RingDescriptor::IntegersModN { n: n.into() }
    }

    pub fn zloc(m: u64) -> RingDescriptor {
        RingDescriptor::LocalizedIntegers { m: m.into() }
    }

    pub fn zquad(q: u64) -> RingDescriptor {
        RingDescriptor::QuadraticOrder { q: q.into() }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => write!(f, "Z"),
            RingDescriptor::IntegersModN { n } => write!(f, "Z/{n}"),
            RingDescriptor::LocalizedIntegers { m } => write!(f, "Z[1/{m}]"),
            RingDescriptor::QuadraticOrder { q } => write!(f, "Z[θ], θ²=-{q}"),
            RingDescriptor::QuotientRing { base, modulus } => {
                let base_ring = Ring::new(base).map_err(|_| fmt::Error)?;
                write!(f, "({base})/({})", base_ring.show(modulus))
            }
        }
    }
}

/// What a ring handle can do beyond plain arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Capabilities {
    pub finite: bool,
    pub bezout: bool,
    pub divisor_enumeration: bool,
    pub gcd: bool,
}

/// Coarse classification of a ring handle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Integers,
    IntegersModN,
    Localized,
    Quadratic,
    Quotient,
}

#[derive(Debug)]
enum Kind {
    Integers,
    /// ℤ/n, also used for `QuotientRing(ℤ, n)`.
    Residues {
        n: BigInt,
        quotient: bool,
    },
    Localized {
        m: BigInt,
    },
    Quadratic {
        q: BigInt,
    },
    QuadQuotient {
        q: BigInt,
        modulus: Elem,
        hnf: Hnf2,
    },
}

#[derive(Debug)]
struct Inner {
    desc: RingDescriptor,
    kind: Kind,
}

/// Handle to a concrete ring. Immutable, `Send + Sync`, cheap to clone.
#[derive(Clone, Debug)]
pub struct Ring(Arc<Inner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.desc == other.0.desc
    }
}

impl Eq for Ring {}

impl Ring {
    /// Builds a handle, checking the descriptor invariants.
    pub fn new(desc: &RingDescriptor) -> Result<Ring> {
        let kind = match desc {
            RingDescriptor::Integers => Kind::Integers,
            RingDescriptor::IntegersModN { n } => {
                if n < &BigInt::from(2) {
                    return Err(Error::InvalidDescriptor(format!("Z/n needs n >= 2, got {n}")));
                }
                Kind::Residues { n: n.clone(), quotient: false }
            }
            RingDescriptor::LocalizedIntegers { m } => {
                if m < &BigInt::from(2) {
                    return Err(Error::InvalidDescriptor(format!("Z[1/m] needs m >= 2, got {m}")));
                }
                Kind::Localized { m: m.clone() }
            }
            RingDescriptor::QuadraticOrder { q } => {
                if q < &BigInt::one() {
                    return Err(Error::InvalidDescriptor(format!("Z[θ] needs q >= 1, got {q}")));
                }
                Kind::Quadratic { q: q.clone() }
            }
            RingDescriptor::QuotientRing { base, modulus } => {
                let base = Ring::new(base)?;
                let modulus = base.coerce(modulus)?;
                if base.is_zero(&modulus) {
                    return Err(Error::ZeroModulus);
                }
                match &base.0.kind {
                    Kind::Integers => {
                        let n = base.lift_int(&modulus).abs();
                        if n.is_one() {
                            return Err(Error::ZeroRing);
                        }
                        Kind::Residues { n, quotient: true }
                    }
                    Kind::Quadratic { q } => {
                        let hnf = quadratic::ideal_hnf(q, &modulus);
                        if hnf.index().is_some_and(|i| i.is_one()) {
                            return Err(Error::ZeroRing);
                        }
                        Kind::QuadQuotient { q: q.clone(), modulus, hnf }
                    }
                    _ => return Err(Error::InvalidDescriptor("quotient base must be Z or a quadratic order".into())),
                }
            }
        };
        Ok(Ring(Arc::new(Inner { desc: desc.clone(), kind })))
    }

    pub fn integers() -> Ring {
        Ring::new(&RingDescriptor::Integers).expect("Z is always valid")
    }

    pub fn zmod(n: u64) -> Result<Ring> {
        Ring::new(&RingDescriptor::zmod(n))
    }

    pub fn zloc(m: u64) -> Result<Ring> {
        Ring::new(&RingDescriptor::zloc(m))
    }

    pub fn zquad(q: u64) -> Result<Ring> {
        Ring::new(&RingDescriptor::zquad(q))
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.0.desc
    }

    pub fn family(&self) -> Family {
        match &self.0.kind {
            Kind::Integers => Family::Integers,
            Kind::Residues { quotient: false, .. } => Family::IntegersModN,
            Kind::Residues { quotient: true, .. } | Kind::QuadQuotient { .. } => Family::Quotient,
            Kind::Localized { .. } => Family::Localized,
            Kind::Quadratic { .. } => Family::Quadratic,
        }
    }

    pub fn capabilities(&self) -> Capabilities {
        let fam = self.family();
        Capabilities {
            finite: self.is_finite(),
            bezout: true,
            divisor_enumeration: matches!(fam, Family::Integers | Family::Quadratic),
            gcd: matches!(fam, Family::Integers | Family::Localized),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.0.kind, Kind::Residues { .. } | Kind::QuadQuotient { .. })
    }

    /// Number of elements of a finite ring.
    pub fn size(&self) -> Option<BigInt> {
        match &self.0.kind {
            Kind::Residues { n, .. } => Some(n.clone()),
            Kind::QuadQuotient { hnf, .. } => hnf.index(),
            _ => None,
        }
    }

    /// `q` for quadratic orders and their quotients.
    pub fn quadratic_q(&self) -> Option<&BigInt> {
        match &self.0.kind {
            Kind::Quadratic { q } | Kind::QuadQuotient { q, .. } => Some(q),
            _ => None,
        }
    }

    /// `m` for ℤ[1/m].
    pub fn localization_m(&self) -> Option<&BigInt> {
        match &self.0.kind {
            Kind::Localized { m } => Some(m),
            _ => None,
        }
    }

    /// `n` for ℤ/n and `QuotientRing(ℤ, n)`.
    pub fn residue_modulus(&self) -> Option<&BigInt> {
        match &self.0.kind {
            Kind::Residues { n, .. } => Some(n),
            _ => None,
        }
    }

    // ---- construction and canonical forms ----

    pub fn zero(&self) -> Elem {
        self.from_bigint(BigInt::zero())
    }

    pub fn one(&self) -> Elem {
        self.from_bigint(BigInt::one())
    }

    pub fn int(&self, x: i64) -> Elem {
        self.from_bigint(BigInt::from(x))
    }

    /// Image of an integer under ℤ → R.
    pub fn from_bigint(&self, x: BigInt) -> Elem {
        match &self.0.kind {
            Kind::Integers => Elem::Int(x),
            Kind::Residues { n, .. } => Elem::Int(x.mod_floor(n)),
            Kind::Localized { .. } => self.canon_frac(x, 0),
            Kind::Quadratic { .. } => Elem::Quad { x, y: BigInt::zero() },
            Kind::QuadQuotient { hnf, .. } => {
                let [x, y] = hnf.reduce(&[x, BigInt::zero()]);
                Elem::Quad { x, y }
            }
        }
    }

    /// `x + yθ` in a quadratic order or one of its quotients.
    pub fn quad(&self, x: i64, y: i64) -> Result<Elem> {
        match &self.0.kind {
            Kind::Quadratic { .. } => Ok(Elem::quad(x, y)),
            Kind::QuadQuotient { hnf, .. } => {
                let [x, y] = hnf.reduce(&[x.into(), y.into()]);
                Ok(Elem::Quad { x, y })
            }
            _ => Err(Error::Unsupported { op: "x+yθ", ring: self.to_string() }),
        }
    }

    /// `num / m^exp` in ℤ[1/m].
    pub fn frac(&self, num: i64, exp: u32) -> Result<Elem> {
        match &self.0.kind {
            Kind::Localized { .. } => Ok(self.canon_frac(num.into(), exp)),
            _ => Err(Error::Unsupported { op: "num/m^exp", ring: self.to_string() }),
        }
    }

    /// Validates an element and brings it to canonical form.
    pub fn coerce(&self, e: &Elem) -> Result<Elem> {
        let bad = || Error::Parse(format!("{e:?} is not an element of {}", self));
        match (&self.0.kind, e) {
            (_, Elem::Int(x)) => Ok(self.from_bigint(x.clone())),
            (Kind::Localized { .. }, Elem::Frac { num, exp }) => Ok(self.canon_frac(num.clone(), *exp)),
            (Kind::Quadratic { .. }, Elem::Quad { .. }) => Ok(e.clone()),
            (Kind::QuadQuotient { hnf, .. }, Elem::Quad { x, y }) => {
                let [x, y] = hnf.reduce(&[x.clone(), y.clone()]);
                Ok(Elem::Quad { x, y })
            }
            _ => Err(bad()),
        }
    }

    fn canon_frac(&self, mut num: BigInt, mut exp: u32) -> Elem {
        let Kind::Localized { m } = &self.0.kind else { unreachable!() };
        if num.is_zero() {
            return Elem::Frac { num, exp: 0 };
        }
        while exp > 0 && num.is_multiple_of(m) {
            num /= m;
            exp -= 1;
        }
        Elem::Frac { num, exp }
    }

    // ---- arithmetic ----

    pub fn is_zero(&self, x: &Elem) -> bool {
        match x {
            Elem::Int(v) => v.is_zero(),
            Elem::Frac { num, .. } => num.is_zero(),
            Elem::Quad { x, y } => x.is_zero() && y.is_zero(),
        }
    }

    pub fn is_one(&self, x: &Elem) -> bool {
        *x == self.one()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match &self.0.kind {
            Kind::Integers => Elem::Int(int_of(a) + int_of(b)),
            Kind::Residues { n, .. } => Elem::Int((int_of(a) + int_of(b)).mod_floor(n)),
            Kind::Localized { m } => {
                let (na, ea) = frac_of(a);
                let (nb, eb) = frac_of(b);
                let e = ea.max(eb);
                let num = na * m.pow(e - ea) + nb * m.pow(e - eb);
                self.canon_frac(num, e)
            }
            Kind::Quadratic { .. } => {
                let (xa, ya) = quad_of(a);
                let (xb, yb) = quad_of(b);
                Elem::Quad { x: xa + xb, y: ya + yb }
            }
            Kind::QuadQuotient { hnf, .. } => {
                let (xa, ya) = quad_of(a);
                let (xb, yb) = quad_of(b);
                let [x, y] = hnf.reduce(&[xa + xb, ya + yb]);
                Elem::Quad { x, y }
            }
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match &self.0.kind {
            Kind::Integers => Elem::Int(-int_of(a)),
            Kind::Residues { n, .. } => Elem::Int((-int_of(a)).mod_floor(n)),
            Kind::Localized { .. } => {
                let (num, exp) = frac_of(a);
                Elem::Frac { num: -num, exp }
            }
            Kind::Quadratic { .. } => {
                let (x, y) = quad_of(a);
                Elem::Quad { x: -x, y: -y }
            }
            Kind::QuadQuotient { hnf, .. } => {
                let (x, y) = quad_of(a);
                let [x, y] = hnf.reduce(&[-x, -y]);
                Elem::Quad { x, y }
            }
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match &self.0.kind {
            Kind::Integers => Elem::Int(int_of(a) * int_of(b)),
            Kind::Residues { n, .. } => Elem::Int((int_of(a) * int_of(b)).mod_floor(n)),
            Kind::Localized { .. } => {
                let (na, ea) = frac_of(a);
                let (nb, eb) = frac_of(b);
                self.canon_frac(na * nb, ea + eb)
            }
            Kind::Quadratic { q } => {
                let (x, y) = quadratic::mul(q, &quad_of(a), &quad_of(b));
                Elem::Quad { x, y }
            }
            Kind::QuadQuotient { q, hnf, .. } => {
                let (x, y) = quadratic::mul(q, &quad_of(a), &quad_of(b));
                let [x, y] = hnf.reduce(&[x, y]);
                Elem::Quad { x, y }
            }
        }
    }

    /// `a*b + c*d`, the shape of every pairing in the extension formulas.
    pub fn dot2(&self, a: &Elem, b: &Elem, c: &Elem, d: &Elem) -> Elem {
        self.add(&self.mul(a, b), &self.mul(c, d))
    }

    pub fn sum<'a>(&self, xs: impl IntoIterator<Item = &'a Elem>) -> Elem {
        xs.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    // ---- units, Bézout, radical ----

    pub fn is_unit(&self, x: &Elem) -> bool {
        match &self.0.kind {
            Kind::Integers => int_of(x).abs().is_one(),
            Kind::Residues { n, .. } => int_of(x).gcd(n).is_one(),
            Kind::Localized { m } => {
                let (num, _) = frac_of(x);
                !num.is_zero() && arith::coprime_part(&num, m).abs().is_one()
            }
            Kind::Quadratic { q } => quadratic::norm(q, &quad_of(x)).is_one(),
            Kind::QuadQuotient { .. } => self.bezout(std::slice::from_ref(x)).is_some(),
        }
    }

    pub fn inverse(&self, x: &Elem) -> Option<Elem> {
        self.bezout(std::slice::from_ref(x)).map(|mut c| c.remove(0))
    }

    /// Coefficients `c` with `sum c[i]*xs[i] == 1`, or `None` when `xs` is not unimodular.
    ///
    /// Witnesses are produced left to right, so the result is deterministic.
    pub fn bezout(&self, xs: &[Elem]) -> Option<Vec<Elem>> {
        if xs.is_empty() {
            return None;
        }
        let out = match &self.0.kind {
            Kind::Integers => {
                let ints: Vec<BigInt> = xs.iter().map(|x| int_of(x).clone()).collect();
                let (g, c) = arith::bezout_fold(&ints);
                g.is_one().then(|| c.into_iter().map(Elem::Int).collect())
            }
            Kind::Residues { n, .. } => {
                let mut ints: Vec<BigInt> = xs.iter().map(|x| int_of(x).clone()).collect();
                ints.push(n.clone());
                let (g, mut c) = arith::bezout_fold(&ints);
                c.pop();
                g.is_one().then(|| c.into_iter().map(|v| self.from_bigint(v)).collect())
            }
            Kind::Localized { m } => localized::bezout(self, m, xs),
            Kind::Quadratic { q } => quadratic::bezout(q, &xs.iter().map(quad_of).collect::<Vec<_>>())
                .map(|c| c.into_iter().map(|(x, y)| Elem::Quad { x, y }).collect()),
            Kind::QuadQuotient { q, modulus, .. } => {
                let mut lifted: Vec<(BigInt, BigInt)> = xs.iter().map(quad_of).collect();
                lifted.push(quad_of(modulus));
                quadratic::bezout(q, &lifted).map(|mut c| {
                    c.pop();
                    c.into_iter().map(|(x, y)| self.coerce(&Elem::Quad { x, y }).expect("quad element")).collect()
                })
            }
        };
        if let Some(c) = &out {
            let total = self.sum(&c.iter().zip(xs).map(|(c, x)| self.mul(c, x)).collect::<Vec<_>>());
            assert!(self.is_one(&total), "Bézout witness failed re-evaluation over {self}");
        }
        out
    }

    pub fn is_unimodular(&self, xs: &[Elem]) -> bool {
        self.bezout(xs).is_some()
    }

    /// Membership in the Jacobson radical.
    pub fn jacobson_contains(&self, x: &Elem) -> bool {
        match &self.0.kind {
            Kind::Integers | Kind::Localized { .. } | Kind::Quadratic { .. } => self.is_zero(x),
            Kind::Residues { n, .. } => int_of(x).is_multiple_of(&arith::radical(n)),
            Kind::QuadQuotient { .. } => {
                let one = self.one();
                self.elements()
                    .expect("quotients are finite")
                    .iter()
                    .all(|y| self.is_unit(&self.sub(&one, &self.mul(x, y))))
            }
        }
    }

    // ---- divisibility ----

    /// Some `q` with `d*q == x`, if one exists.
    pub fn divide_exact(&self, x: &Elem, d: &Elem) -> Option<Elem> {
        if self.is_zero(d) {
            return self.is_zero(x).then(|| self.zero());
        }
        match &self.0.kind {
            Kind::Integers => {
                let (xi, di) = (int_of(x), int_of(d));
                xi.is_multiple_of(di).then(|| Elem::Int(xi / di))
            }
            Kind::Localized { m } => localized::divide_exact(self, m, x, d),
            Kind::Quadratic { q } => {
                quadratic::divide_exact(q, &quad_of(x), &quad_of(d)).map(|(x, y)| Elem::Quad { x, y })
            }
            Kind::Residues { .. } | Kind::QuadQuotient { .. } => {
                self.elements().expect("finite").into_iter().find(|q| self.mul(d, q) == *x)
            }
        }
    }

    pub fn divides(&self, d: &Elem, x: &Elem) -> bool {
        self.divide_exact(x, d).is_some()
    }

    /// A generator of the ideal `(x, y)`; ℤ and ℤ[1/m] only.
    pub fn gcd(&self, x: &Elem, y: &Elem) -> Result<Elem> {
        match &self.0.kind {
            Kind::Integers => Ok(Elem::Int(int_of(x).gcd(int_of(y)))),
            Kind::Localized { m } => {
                let g = frac_of(x).0.gcd(&frac_of(y).0);
                Ok(self.canon_frac(arith::coprime_part(&g, m).abs(), 0))
            }
            _ => Err(Error::Unsupported { op: "gcd", ring: self.to_string() }),
        }
    }

    /// One representative per associate class of divisors of `x`.
    pub fn divisors_up_to_units(&self, x: &Elem) -> Result<Vec<Elem>> {
        if self.is_zero(x) {
            return Err(Error::Precondition("divisors of zero".into()));
        }
        match &self.0.kind {
            Kind::Integers => Ok(arith::positive_divisors(int_of(x)).into_iter().map(Elem::Int).collect()),
            Kind::Quadratic { q } => Ok(quadratic::divisors_up_to_units(q, &quad_of(x))
                .into_iter()
                .map(|(x, y)| Elem::Quad { x, y })
                .collect()),
            _ => Err(Error::Unsupported { op: "divisor enumeration", ring: self.to_string() }),
        }
    }

    /// Canonical representative of the associate class of `x` (ℤ and quadratic orders).
    pub fn associate_normal(&self, x: &Elem) -> Elem {
        match &self.0.kind {
            Kind::Integers => Elem::Int(int_of(x).abs()),
            Kind::Quadratic { q } => {
                let (x, y) = quadratic::normalize_associate(q, &quad_of(x));
                Elem::Quad { x, y }
            }
            _ => x.clone(),
        }
    }

    /// Norm `x² + q y²` in a quadratic order.
    pub fn norm(&self, x: &Elem) -> Option<BigInt> {
        match &self.0.kind {
            Kind::Quadratic { q } => Some(quadratic::norm(q, &quad_of(x))),
            _ => None,
        }
    }

    // ---- quotients and enumeration ----

    /// `R/(a)` as a ring handle. See [`Ring::quotient`] for the reduction map.
    pub fn quotient_ring(&self, a: &Elem) -> Result<Ring> {
        Ok(self.quotient(a)?.target().clone())
    }

    /// `R/(a)` together with its reduction and lifting maps.
    pub fn quotient(&self, a: &Elem) -> Result<Quotient> {
        Quotient::new(self, a)
    }

    /// All elements of a finite ring, each once, in a fixed order.
    pub fn elements(&self) -> Result<Vec<Elem>> {
        match &self.0.kind {
            Kind::Residues { n, .. } => {
                let n = n.to_u64().ok_or_else(|| Error::CapExceeded { size: n.to_string(), cap: usize::MAX })?;
                Ok((0..n).map(|r| Elem::Int(r.into())).collect())
            }
            Kind::QuadQuotient { hnf, .. } => {
                let (p, s) = (&hnf.rows[0][0], &hnf.rows[1][1]);
                let p = p.to_u64().ok_or_else(|| Error::CapExceeded { size: p.to_string(), cap: usize::MAX })?;
                let s = s.to_u64().ok_or_else(|| Error::CapExceeded { size: s.to_string(), cap: usize::MAX })?;
                let mut out = Vec::with_capacity((p * s) as usize);
                for y in 0..s {
                    for x in 0..p {
                        out.push(Elem::quad(x, y));
                    }
                }
                Ok(out)
            }
            _ => Err(Error::InfiniteRing(self.to_string())),
        }
    }

    /// Elements of an infinite ring whose height is exactly `h`.
    ///
    /// Height is |x| over ℤ, the numerator height of integral elements over ℤ[1/m]
    /// (denominators are units, so integral pairs lose nothing in pair searches), and
    /// max(|x|, |y|) for x + yθ.
    pub fn elements_of_height(&self, h: u32) -> Vec<Elem> {
        let hb = BigInt::from(h);
        match &self.0.kind {
            Kind::Integers | Kind::Localized { .. } => {
                if h == 0 {
                    vec![self.zero()]
                } else {
                    vec![self.from_bigint(hb.clone()), self.from_bigint(-hb)]
                }
            }
            Kind::Quadratic { .. } => {
                let h = h as i64;
                let mut out = Vec::new();
                for x in -h..=h {
                    for y in -h..=h {
                        if x.abs().max(y.abs()) == h {
                            out.push(Elem::quad(x, y));
                        }
                    }
                }
                out
            }
            _ => Vec::new(),
        }
    }

    // ---- lifts used by the gcd-based routes ----

    /// The integer carried by an `Int` element (residue for ℤ/n).
    pub fn lift_int(&self, x: &Elem) -> BigInt {
        int_of(x).clone()
    }

    /// Pretty form for diagnostics.
    pub fn show(&self, x: &Elem) -> String {
        match x {
            Elem::Int(v) => v.to_string(),
            Elem::Frac { num, exp } => match (&self.0.kind, exp) {
                (_, 0) => num.to_string(),
                (Kind::Localized { m }, 1) => format!("{num}/{m}"),
                (Kind::Localized { m }, e) => format!("{num}/{m}^{e}"),
                _ => format!("{num}/m^{exp}"),
            },
            Elem::Quad { x, y } => {
                if y.is_zero() {
                    x.to_string()
                } else {
                    let coef = if y.is_one() {
                        String::new()
                    } else if *y == -BigInt::one() {
                        "-".to_string()
                    } else {
                        y.to_string()
                    };
                    match (x.is_zero(), y.is_negative()) {
                        (true, _) => format!("{coef}θ"),
                        (false, true) => format!("{x}{coef}θ"),
                        (false, false) => format!("{x}+{coef}θ"),
                    }
                }
            }
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.desc.fmt(f)
    }
}

fn int_of(e: &Elem) -> &BigInt {
    match e {
        Elem::Int(v) => v,
        other => panic!("expected an integer element, got {other:?}"),
    }
}

fn frac_of(e: &Elem) -> (BigInt, u32) {
    match e {
        Elem::Frac { num, exp } => (num.clone(), *exp),
        Elem::Int(v) => (v.clone(), 0),
        other => panic!("expected an element of Z[1/m], got {other:?}"),
    }
}

fn quad_of(e: &Elem) -> (BigInt, BigInt) {
    match e {
        Elem::Quad { x, y } => (x.clone(), y.clone()),
        Elem::Int(v) => (v.clone(), BigInt::zero()),
        other => panic!("expected an element of Z[θ], got {other:?}"),
    }
}

#[cfg(test)]
mod tests;
