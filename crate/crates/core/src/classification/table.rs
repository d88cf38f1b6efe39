//! A finite ring as lookup tables over element indices.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};

/// Largest ring the tables support; ideals are `u128` bitsets.
pub const MAX_TABLE_SIZE: usize = 128;

pub(crate) type Ideal = u128;

pub(crate) struct Table {
    pub elems: Vec<Elem>,
    pub n: usize,
    pub zero: usize,
    pub one: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    pub unit: Vec<bool>,
    pub jacobson: Vec<bool>,
    /// Principal ideals `aR`.
    principal: Vec<Ideal>,
    /// `aR + bR`, indexed `a * n + b`.
    pair: Vec<Ideal>,
    /// `{1 - x : x ∈ aR + bR}`; an ideal `I` meets it iff `aR + bR + I = R`.
    pair_shifted: Vec<Ideal>,
}

impl Table {
    pub fn new(ring: &Ring, cap: usize) -> Result<Table> {
        if !ring.is_finite() {
            return Err(Error::InfiniteRing(ring.descriptor().to_string()));
        }
        let size = ring.size().expect("finite ring has a size");
        let cap = cap.min(MAX_TABLE_SIZE);
        if size > cap.into() {
            return Err(Error::CapExceeded { size: size.to_string(), cap });
        }
        let elems = ring.elements()?;
        let n = elems.len();
        let index: HashMap<&Elem, u8> = elems.iter().enumerate().map(|(i, e)| (e, i as u8)).collect();
        let mut add = vec![0u8; n * n];
        let mut mul = vec![0u8; n * n];
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                add[i * n + j] = index[&ring.add(x, y)];
                mul[i * n + j] = index[&ring.mul(x, y)];
            }
        }
        let zero = index[&ring.zero()] as usize;
        let one = index[&ring.one()] as usize;
        let neg = elems.iter().map(|x| index[&ring.neg(x)]).collect();
        let unit: Vec<bool> = (0..n).map(|a| (0..n).any(|x| mul[a * n + x] as usize == one)).collect();
        let mut t = Table {
            elems,
            n,
            zero,
            one,
            add,
            mul,
            neg,
            unit,
            jacobson: Vec::new(),
            principal: Vec::new(),
            pair: Vec::new(),
            pair_shifted: Vec::new(),
        };
        t.jacobson = (0..n).map(|x| (0..n).all(|y| t.unit[t.sub(one, t.mul(x, y))])).collect();
        t.principal = (0..n).map(|a| (0..n).fold(0, |acc, x| acc | bit(t.mul(a, x)))).collect();
        let mut pair = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                pair[a * n + b] = t.ideal_sum(t.principal[a], t.principal[b]);
            }
        }
        t.pair_shifted = pair.iter().map(|&i| members(i).fold(0, |acc, x| acc | bit(t.sub(one, x)))).collect();
        t.pair = pair;
        Ok(t)
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    fn ideal_sum(&self, i: Ideal, j: Ideal) -> Ideal {
        let mut out = 0;
        for x in members(i) {
            for y in members(j) {
                out |= bit(self.add(x, y));
            }
        }
        out
    }

    /// `aR + bR = R`.
    #[inline]
    pub fn um2(&self, a: usize, b: usize) -> bool {
        self.pair[a * self.n + b] & bit(self.one) != 0
    }

    /// `aR + bR + cR = R`.
    #[inline]
    pub fn um3(&self, a: usize, b: usize, c: usize) -> bool {
        self.pair_shifted[a * self.n + b] & self.principal[c] != 0
    }

    /// `aR + bR + cR + dR = R`.
    pub fn um4(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        self.pair_shifted[a * self.n + b] & self.pair[c * self.n + d] != 0
    }

    pub fn det(&self, [a, b, c, d]: [usize; 4]) -> usize {
        self.sub(self.mul(a, d), self.mul(b, c))
    }

    /// `(ae + cf, be + df)`.
    #[inline]
    pub fn image(&self, [a, b, c, d]: [usize; 4], e: usize, f: usize) -> (usize, usize) {
        (self.add(self.mul(a, e), self.mul(c, f)), self.add(self.mul(b, e), self.mul(d, f)))
    }

    /// Some `(e, f)` with `(ae + cf, be + df)` unimodular.
    pub fn simply_extendable(&self, m: [usize; 4]) -> bool {
        (0..self.n).any(|e| {
            (0..self.n).any(|f| {
                let (u, w) = self.image(m, e, f);
                self.um2(u, w)
            })
        })
    }

    /// Some `(e, f)` with `(ae + cf, be + df, det)` unimodular.
    pub fn extendable(&self, m: [usize; 4]) -> bool {
        let det = self.det(m);
        (0..self.n).any(|e| {
            (0..self.n).any(|f| {
                let (u, w) = self.image(m, e, f);
                self.um3(u, w, det)
            })
        })
    }
}

#[inline]
fn bit(i: usize) -> Ideal {
    1 << i
}

fn members(mut i: Ideal) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (i != 0).then(|| {
            let k = i.trailing_zeros() as usize;
            i &= i - 1;
            k
        })
    })
}
