//! Hermite normal form of integer sublattices of ℤ², with the transformation recorded.
//!
//! Used for quadratic orders: an ideal of ℤ[θ] is a sublattice of ℤ² in the basis (1, θ).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::xgcd;

/// Upper-triangular basis `[[p, r], [0, s]]` with `p > 0`, `s > 0`, `0 <= r < s`
/// (rank 2 case), or fewer rows when the lattice is degenerate.
///
/// `transform[k]` expresses basis row `k` as an integer combination of the input rows.
#[derive(Clone, Debug)]
pub struct Hnf2 {
    pub rows: Vec<[BigInt; 2]>,
    pub transform: Vec<Vec<BigInt>>,
}

impl Hnf2 {
    pub fn compute(input: &[[BigInt; 2]]) -> Hnf2 {
        let k = input.len();
        let mut rows: Vec<[BigInt; 2]> = input.to_vec();
        let mut tr: Vec<Vec<BigInt>> =
            (0..k).map(|i| (0..k).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();

        let mut pivots = Vec::new();
        let mut start = 0;
        for col in 0..2 {
            // Collect the gcd of column `col` over rows[start..] into rows[start].
            let Some(first) = (start..k).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(start, first);
            tr.swap(start, first);
            for i in start + 1..k {
                if rows[i][col].is_zero() {
                    continue;
                }
                let (g, x, y) = xgcd(&rows[start][col], &rows[i][col]);
                let u = &rows[start][col] / &g;
                let v = &rows[i][col] / &g;
                // [[x, y], [-v, u]] has determinant xu + yv = 1.
                let new_p = comb(&rows[start], &rows[i], &x, &y);
                let new_i = comb(&rows[start], &rows[i], &(-&v), &u);
                rows[start] = new_p;
                rows[i] = new_i;
                let tp = comb_vec(&tr[start], &tr[i], &x, &y);
                let ti = comb_vec(&tr[start], &tr[i], &(-&v), &u);
                tr[start] = tp;
                tr[i] = ti;
            }
            if rows[start][col].is_negative() {
                rows[start] = [-&rows[start][0], -&rows[start][1]];
                tr[start] = tr[start].iter().map(|c| -c).collect();
            }
            pivots.push((start, col));
            start += 1;
        }

        // Reduce the entry above the second pivot.
        if pivots.len() == 2 {
            let (r1, _) = pivots[1];
            let q = rows[0][1].div_floor(&rows[r1][1]);
            if !q.is_zero() {
                rows[0] = comb(&rows[0], &rows[r1], &BigInt::one(), &(-&q));
                tr[0] = comb_vec(&tr[0], &tr[r1], &BigInt::one(), &(-&q));
            }
        }

        let n = pivots.len();
        rows.truncate(n);
        tr.truncate(n);
        Hnf2 { rows, transform: tr }
    }

    /// Full-rank case: the lattice index `p * s`.
    pub fn index(&self) -> Option<BigInt> {
        (self.rows.len() == 2 && !self.rows[0][0].is_zero()).then(|| &self.rows[0][0] * &self.rows[1][1])
    }

    /// Coordinates `(alpha, beta)` with `alpha*row0 + beta*row1 == target`, if the
    /// target lies in a full-rank lattice.
    pub fn solve(&self, target: &[BigInt; 2]) -> Option<(BigInt, BigInt)> {
        self.index()?;
        let (p, r, s) = (&self.rows[0][0], &self.rows[0][1], &self.rows[1][1]);
        if !target[0].is_multiple_of(p) {
            return None;
        }
        let alpha = &target[0] / p;
        let rest = &target[1] - &alpha * r;
        if !rest.is_multiple_of(s) {
            return None;
        }
        Some((alpha, rest / s))
    }

    /// Canonical representative of `v` modulo a full-rank lattice:
    /// first coordinate in `[0, p)`, second in `[0, s)`.
    pub fn reduce(&self, v: &[BigInt; 2]) -> [BigInt; 2] {
        let (p, r, s) = (&self.rows[0][0], &self.rows[0][1], &self.rows[1][1]);
        let k = v[0].div_floor(p);
        let x = &v[0] - &k * p;
        let y = (&v[1] - &k * r).mod_floor(s);
        [x, y]
    }
}

fn comb(u: &[BigInt; 2], v: &[BigInt; 2], x: &BigInt, y: &BigInt) -> [BigInt; 2] {
    [x * &u[0] + y * &v[0], x * &u[1] + y * &v[1]]
}

fn comb_vec(u: &[BigInt], v: &[BigInt], x: &BigInt, y: &BigInt) -> Vec<BigInt> {
    u.iter().zip(v).map(|(a, b)| x * a + y * b).collect()
}
