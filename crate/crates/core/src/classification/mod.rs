//! Exhaustive checks of ring-level properties on finite rings.
//!
//! Stable range 1, `fsr = 1.5` and `asr = 1` are tested through their one-step forms:
//! for `(a, b)` unimodular and `c` in `R \ {0}` (resp. `R \ J(R)`), some `r` makes
//! `(a + br, c)` unimodular. Π₂, E₂ and SE₂ sweep every unimodular 2×2 matrix, using
//! "some `(e, f)` makes `(ae + cf, be + df)` (resp. with `det A` appended) unimodular" as
//! the test for simple extendability (resp. extendability).

mod table;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring, RingDescriptor};

use table::Table;
pub use table::MAX_TABLE_SIZE;

/// Default bound on `|R|`.
pub const DEFAULT_CAP: usize = 64;

/// A property that fails, with the least failing tuple in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub predicate: &'static str,
    pub witness: Vec<Elem>,
}

/// Outcome of one exhaustive check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

impl Check {
    fn from_first(t: &Table, predicate: &'static str, first: Option<Vec<usize>>) -> Check {
        let counterexample =
            first.map(|w| Counterexample { predicate, witness: w.into_iter().map(|i| t.elems[i].clone()).collect() });
        Check { holds: counterexample.is_none(), counterexample }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingClassReport {
    pub ring: RingDescriptor,
    pub size: usize,
    pub sr1: bool,
    pub fsr15: bool,
    pub asr1: bool,
    pub pi2: bool,
    pub e2: bool,
    pub se2: bool,
    /// From the first failing property in the order above.
    pub counterexample: Option<Counterexample>,
}

impl RingClassReport {
    /// `sr1 ⇒ fsr15 ⇒ asr1` and `se2 ⇒ e2 ⇒ pi2`.
    pub fn chains_hold(&self) -> bool {
        (!self.sr1 || self.fsr15) && (!self.fsr15 || self.asr1) && (!self.se2 || self.e2) && (!self.e2 || self.pi2)
    }

    pub fn all_true(&self) -> bool {
        self.sr1 && self.fsr15 && self.asr1 && self.pi2 && self.e2 && self.se2
    }
}

/// First index `a` (in order) whose scan finds a failure; the scans run in parallel.
fn first_failure<F>(n: usize, scan: F) -> Option<Vec<usize>>
where
    F: Fn(usize) -> Option<Vec<usize>> + Sync,
{
    (0..n).into_par_iter().map(&scan).find_first(Option::is_some).flatten()
}

/// For every unimodular `(a, b)` and every `c` accepted by `keep`, some `r` makes
/// `(a + br, c)` unimodular.
fn one_step(t: &Table, keep: impl Fn(usize) -> bool + Sync) -> Option<Vec<usize>> {
    first_failure(t.n, |a| {
        for b in 0..t.n {
            if !t.um2(a, b) {
                continue;
            }
            for c in (0..t.n).filter(|&c| keep(c)) {
                if !(0..t.n).any(|r| t.um2(t.add(a, t.mul(b, r)), c)) {
                    return Some(vec![a, b, c]);
                }
            }
        }
        None
    })
}

fn sr1_table(t: &Table) -> Check {
    let first = first_failure(t.n, |a| {
        (0..t.n).find(|&b| t.um2(a, b) && !(0..t.n).any(|r| t.unit[t.add(a, t.mul(b, r))])).map(|b| vec![a, b])
    });
    Check::from_first(t, "sr1", first)
}

fn fsr15_table(t: &Table) -> Check {
    Check::from_first(t, "fsr15", one_step(t, |c| c != t.zero))
}

fn asr1_table(t: &Table) -> Check {
    Check::from_first(t, "asr1", one_step(t, |c| !t.jacobson[c]))
}

/// First failures of the matrix sweeps, as index tuples `[a, b, c, d]`.
#[derive(Default)]
struct Sweep {
    not_pi2: Option<Vec<usize>>,
    not_e2: Option<Vec<usize>>,
    not_se2: Option<Vec<usize>>,
    /// Extendable but not simply extendable.
    not_th2: Option<Vec<usize>>,
}

impl Sweep {
    fn merge(mut self, later: Sweep) -> Sweep {
        self.not_pi2 = self.not_pi2.or(later.not_pi2);
        self.not_e2 = self.not_e2.or(later.not_e2);
        self.not_se2 = self.not_se2.or(later.not_se2);
        self.not_th2 = self.not_th2.or(later.not_th2);
        self
    }
}

/// Row-major lexicographic sweep over all unimodular matrices.
fn sweep(t: &Table) -> Sweep {
    let n = t.n;
    let parts: Vec<Sweep> = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut out = Sweep::default();
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if !t.um4(a, b, c, d) {
                            continue;
                        }
                        let m = [a, b, c, d];
                        let simple = t.simply_extendable(m);
                        let ext = simple || t.extendable(m);
                        let first = |slot: &mut Option<Vec<usize>>| {
                            slot.get_or_insert_with(|| m.to_vec());
                        };
                        if !simple {
                            first(&mut out.not_se2);
                        }
                        if !ext {
                            first(&mut out.not_e2);
                            if t.det(m) == t.zero {
                                first(&mut out.not_pi2);
                            }
                        }
                        if ext && !simple {
                            first(&mut out.not_th2);
                        }
                    }
                }
            }
            out
        })
        .collect();
    parts.into_iter().fold(Sweep::default(), Sweep::merge)
}

pub fn sr1_check(ring: &Ring) -> Result<Check> {
    Ok(sr1_table(&Table::new(ring, MAX_TABLE_SIZE)?))
}

pub fn fsr15_check(ring: &Ring) -> Result<Check> {
    Ok(fsr15_table(&Table::new(ring, MAX_TABLE_SIZE)?))
}

pub fn asr1_check(ring: &Ring) -> Result<Check> {
    Ok(asr1_table(&Table::new(ring, MAX_TABLE_SIZE)?))
}

/// Extendable and simply extendable agree on every unimodular matrix.
pub fn th2_spot_check(ring: &Ring) -> Result<Check> {
    let t = Table::new(ring, MAX_TABLE_SIZE)?;
    Ok(Check::from_first(&t, "th2", sweep(&t).not_th2))
}

/// Full report; fails with [`Error::CapExceeded`] above `cap` elements.
pub fn classify_finite_ring(ring: &Ring, cap: usize) -> Result<RingClassReport> {
    let t = Table::new(ring, cap)?;
    let checks = [sr1_table(&t), fsr15_table(&t), asr1_table(&t)];
    let s = sweep(&t);
    let matrix_checks = [
        Check::from_first(&t, "pi2", s.not_pi2),
        Check::from_first(&t, "e2", s.not_e2),
        Check::from_first(&t, "se2", s.not_se2),
    ];
    let all: Vec<&Check> = checks.iter().chain(&matrix_checks).collect();
    let report = RingClassReport {
        ring: ring.descriptor().clone(),
        size: t.n,
        sr1: all[0].holds,
        fsr15: all[1].holds,
        asr1: all[2].holds,
        pi2: all[3].holds,
        e2: all[4].holds,
        se2: all[5].holds,
        counterexample: all.iter().find_map(|c| c.counterexample.clone()),
    };
    if !report.chains_hold() {
        return Err(Error::Internal(format!("implication chain broken: {report:?}")));
    }
    Ok(report)
}

/// Reports for `ℤ/n`, `n` in `range`.
pub fn classify_sweep(range: std::ops::RangeInclusive<u64>, cap: usize) -> Result<Vec<RingClassReport>> {
    range.map(|n| classify_finite_ring(&Ring::zmod(n)?, cap)).collect()
}
