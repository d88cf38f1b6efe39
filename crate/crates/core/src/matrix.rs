//! 2×2 and 3×3 matrices over a [`Ring`], with the truncation Θ and its section σ.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};

/// `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    ring: Ring,
    pub a: Elem,
    pub b: Elem,
    pub c: Elem,
    pub d: Elem,
}

/// Row-major 3×3 matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat3 {
    ring: Ring,
    rows: [[Elem; 3]; 3],
}

impl Mat2 {
    pub fn new(ring: &Ring, a: Elem, b: Elem, c: Elem, d: Elem) -> Result<Mat2> {
        Ok(Mat2 {
            ring: ring.clone(),
            a: ring.coerce(&a)?,
            b: ring.coerce(&b)?,
            c: ring.coerce(&c)?,
            d: ring.coerce(&d)?,
        })
    }

    pub fn from_ints(ring: &Ring, rows: [[i64; 2]; 2]) -> Mat2 {
        Mat2 {
            ring: ring.clone(),
            a: ring.int(rows[0][0]),
            b: ring.int(rows[0][1]),
            c: ring.int(rows[1][0]),
            d: ring.int(rows[1][1]),
        }
    }

    pub fn identity(ring: &Ring) -> Mat2 {
        Mat2::diag(ring, ring.one(), ring.one())
    }

    pub fn diag(ring: &Ring, x: Elem, y: Elem) -> Mat2 {
        Mat2 { ring: ring.clone(), a: x, b: ring.zero(), c: ring.zero(), d: y }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn entries(&self) -> [Elem; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }

    pub fn rows(&self) -> [[Elem; 2]; 2] {
        [[self.a.clone(), self.b.clone()], [self.c.clone(), self.d.clone()]]
    }

    pub fn from_rows(ring: &Ring, rows: [[Elem; 2]; 2]) -> Result<Mat2> {
        let [[a, b], [c, d]] = rows;
        Mat2::new(ring, a, b, c, d)
    }

    pub fn det(&self) -> Elem {
        let r = &self.ring;
        r.sub(&r.mul(&self.a, &self.d), &r.mul(&self.b, &self.c))
    }

    pub fn trace(&self) -> Elem {
        self.ring.add(&self.a, &self.d)
    }

    pub fn transpose(&self) -> Mat2 {
        Mat2 { ring: self.ring.clone(), a: self.a.clone(), b: self.c.clone(), c: self.b.clone(), d: self.d.clone() }
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let r = &self.ring;
        Mat2 {
            ring: r.clone(),
            a: r.dot2(&self.a, &other.a, &self.b, &other.c),
            b: r.dot2(&self.a, &other.b, &self.b, &other.d),
            c: r.dot2(&self.c, &other.a, &self.d, &other.c),
            d: r.dot2(&self.c, &other.b, &self.d, &other.d),
        }
    }

    /// Entries generate the unit ideal.
    pub fn is_unimodular(&self) -> bool {
        self.ring.is_unimodular(&self.entries())
    }

    /// Inverse when the determinant is a unit.
    pub fn inverse(&self) -> Option<Mat2> {
        let r = &self.ring;
        let inv = r.inverse(&self.det())?;
        Some(Mat2 {
            ring: r.clone(),
            a: r.mul(&inv, &self.d),
            b: r.mul(&inv, &r.neg(&self.b)),
            c: r.mul(&inv, &r.neg(&self.c)),
            d: r.mul(&inv, &self.a),
        })
    }

    /// Entrywise reduction into `R/(modulus)`.
    pub fn reduce_mod(&self, modulus: &Elem) -> Result<Mat2> {
        let quo = self.ring.quotient(modulus)?;
        Ok(self.map_into(quo.target(), |x| quo.reduce(x)))
    }

    /// Applies `f` entrywise, landing in `target`.
    pub fn map_into(&self, target: &Ring, f: impl Fn(&Elem) -> Elem) -> Mat2 {
        Mat2 { ring: target.clone(), a: f(&self.a), b: f(&self.b), c: f(&self.c), d: f(&self.d) }
    }

    /// σ(M) = [[a, b, 0], [c, d, 0], [0, 0, det(M)⁻¹]].
    pub fn sigma(&self, det_inverse: &Elem) -> Result<Mat3> {
        let r = &self.ring;
        if !r.is_one(&r.mul(&self.det(), det_inverse)) {
            return Err(Error::Precondition("σ needs det(M)·det_inverse = 1".into()));
        }
        let z = r.zero();
        Ok(Mat3 {
            ring: r.clone(),
            rows: [
                [self.a.clone(), self.b.clone(), z.clone()],
                [self.c.clone(), self.d.clone(), z.clone()],
                [z.clone(), z, det_inverse.clone()],
            ],
        })
    }

    /// σ(M) with the inverse determinant computed.
    pub fn sigma_auto(&self) -> Result<Mat3> {
        let inv =
            self.ring.inverse(&self.det()).ok_or_else(|| Error::Precondition("σ needs an invertible matrix".into()))?;
        self.sigma(&inv)
    }

    pub fn show(&self) -> String {
        let s = |x: &Elem| self.ring.show(x);
        format!("[[{}, {}], [{}, {}]]", s(&self.a), s(&self.b), s(&self.c), s(&self.d))
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.show())
    }
}

impl Mat3 {
    pub fn new(ring: &Ring, rows: [[Elem; 3]; 3]) -> Result<Mat3> {
        let mut out = rows;
        for row in out.iter_mut() {
            for e in row.iter_mut() {
                *e = ring.coerce(e)?;
            }
        }
        Ok(Mat3 { ring: ring.clone(), rows: out })
    }

    pub fn from_ints(ring: &Ring, rows: [[i64; 3]; 3]) -> Mat3 {
        Mat3 { ring: ring.clone(), rows: rows.map(|row| row.map(|x| ring.int(x))) }
    }

    pub fn identity(ring: &Ring) -> Mat3 {
        Mat3::from_ints(ring, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> &[[Elem; 3]; 3] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.rows[i][j]
    }

    pub fn with_entry(&self, i: usize, j: usize, value: Elem) -> Mat3 {
        let mut rows = self.rows.clone();
        rows[i][j] = value;
        Mat3 { ring: self.ring.clone(), rows }
    }

    /// Minor obtained by deleting row `i` and column `j`.
    fn minor(&self, i: usize, j: usize) -> Elem {
        let r = &self.ring;
        let idx = |k: usize| -> [usize; 2] {
            let v: Vec<usize> = (0..3).filter(|&x| x != k).collect();
            [v[0], v[1]]
        };
        let [r0, r1] = idx(i);
        let [c0, c1] = idx(j);
        let m = &self.rows;
        r.sub(&r.mul(&m[r0][c0], &m[r1][c1]), &r.mul(&m[r0][c1], &m[r1][c0]))
    }

    /// Cofactor expansion along the first row.
    pub fn det(&self) -> Elem {
        let r = &self.ring;
        let t0 = r.mul(&self.rows[0][0], &self.minor(0, 0));
        let t1 = r.mul(&self.rows[0][1], &self.minor(0, 1));
        let t2 = r.mul(&self.rows[0][2], &self.minor(0, 2));
        r.add(&r.sub(&t0, &t1), &t2)
    }

    pub fn trace(&self) -> Elem {
        let r = &self.ring;
        r.add(&r.add(&self.rows[0][0], &self.rows[1][1]), &self.rows[2][2])
    }

    /// Coefficients of λ³ − tr·λ² + ν·λ − det: returns `(tr, ν, det)`, where ν is the sum
    /// of the principal 2×2 minors.
    pub fn char_poly(&self) -> (Elem, Elem, Elem) {
        let r = &self.ring;
        let nu = r.add(&r.add(&self.minor(0, 0), &self.minor(1, 1)), &self.minor(2, 2));
        (self.trace(), nu, self.det())
    }

    /// Θ: delete the third row and column.
    pub fn theta(&self) -> Mat2 {
        let m = &self.rows;
        Mat2 { ring: self.ring.clone(), a: m[0][0].clone(), b: m[0][1].clone(), c: m[1][0].clone(), d: m[1][1].clone() }
    }

    pub fn transpose(&self) -> Mat3 {
        let m = &self.rows;
        let rows = std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].clone()));
        Mat3 { ring: self.ring.clone(), rows }
    }

    pub fn mul(&self, other: &Mat3) -> Mat3 {
        let r = &self.ring;
        let rows = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let terms: Vec<Elem> = (0..3).map(|k| r.mul(&self.rows[i][k], &other.rows[k][j])).collect();
                r.sum(&terms)
            })
        });
        Mat3 { ring: r.clone(), rows }
    }

    pub fn map_into(&self, target: &Ring, f: impl Fn(&Elem) -> Elem) -> Mat3 {
        Mat3 { ring: target.clone(), rows: self.rows.clone().map(|row| row.map(|e| f(&e))) }
    }

    pub fn show(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|e| self.ring.show(e)).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.show())
    }
}
