//! Integer matrices, Smith normal form, and finitely generated abelian
//! groups presented as cokernels.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// Dense integer matrix with arbitrary-precision entries, row major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut m = IntMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Determinant by fraction-free Gaussian elimination (Bareiss).
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = &num / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Smith normal form `U * M * V = D` with unimodular `U`, `V`.
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    /// Nonzero diagonal entries d1 | d2 | ... | dr, all positive.
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let row_op = |a: &mut IntMatrix, u: &mut IntMatrix, i: usize, k: usize, q: &BigInt| {
        // row_i -= q * row_k
        for j in 0..a.cols() {
            let val = a.get(i, j) - q * a.get(k, j);
            a.set(i, j, val);
        }
        for j in 0..u.cols() {
            let val = u.get(i, j) - q * u.get(k, j);
            u.set(i, j, val);
        }
    };
    let col_op = |a: &mut IntMatrix, v: &mut IntMatrix, j: usize, k: usize, q: &BigInt| {
        // col_j -= q * col_k
        for i in 0..a.rows() {
            let val = a.get(i, j) - q * a.get(i, k);
            a.set(i, j, val);
        }
        for i in 0..v.rows() {
            let val = v.get(i, j) - q * v.get(i, k);
            v.set(i, j, val);
        }
    };
    let swap_rows = |a: &mut IntMatrix, u: &mut IntMatrix, i: usize, k: usize| {
        for j in 0..a.cols() {
            let x = a.get(i, j).clone();
            let y = a.get(k, j).clone();
            a.set(i, j, y);
            a.set(k, j, x);
        }
        for j in 0..u.cols() {
            let x = u.get(i, j).clone();
            let y = u.get(k, j).clone();
            u.set(i, j, y);
            u.set(k, j, x);
        }
    };
    let swap_cols = |a: &mut IntMatrix, v: &mut IntMatrix, j: usize, k: usize| {
        for i in 0..a.rows() {
            let x = a.get(i, j).clone();
            let y = a.get(i, k).clone();
            a.set(i, j, y);
            a.set(i, k, x);
        }
        for i in 0..v.rows() {
            let x = v.get(i, j).clone();
            let y = v.get(i, k).clone();
            v.set(i, j, y);
            v.set(i, k, x);
        }
    };

    let mut t = 0;
    'pivot: while t < rows.min(cols) {
        // smallest nonzero entry in the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a.get(i, j).is_zero()
                    && best.is_none_or(|(bi, bj)| a.get(i, j).abs() < a.get(bi, bj).abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        if pi != t {
            swap_rows(&mut a, &mut u, pi, t);
        }
        if pj != t {
            swap_cols(&mut a, &mut v, pj, t);
        }

        // clear row and column t; restart if a remainder shrinks the pivot
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if !a.get(i, t).is_zero() {
                    let q = div_round(a.get(i, t), a.get(t, t));
                    row_op(&mut a, &mut u, i, t, &q);
                    if !a.get(i, t).is_zero() {
                        swap_rows(&mut a, &mut u, i, t);
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !a.get(t, j).is_zero() {
                    let q = div_round(a.get(t, j), a.get(t, t));
                    col_op(&mut a, &mut v, j, t, &q);
                    if !a.get(t, j).is_zero() {
                        swap_cols(&mut a, &mut v, j, t);
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }

        // divisibility sweep: every trailing entry must be divisible by the pivot
        for i in t + 1..rows {
            for j in t + 1..cols {
                if !(a.get(i, j) % a.get(t, t)).is_zero() {
                    // add row i to row t and redo the pivot step
                    let minus_one = BigInt::from(-1);
                    row_op(&mut a, &mut u, t, i, &minus_one);
                    continue 'pivot;
                }
            }
        }

        if a.get(t, t).is_negative() {
            let neg = a.get(t, t).clone() * BigInt::from(-1);
            a.set(t, t, neg);
            for j in 0..u.cols() {
                let val = u.get(t, j) * BigInt::from(-1);
                u.set(t, j, val);
            }
        }
        t += 1;
    }

    let invariant_factors: Vec<BigInt> = (0..rows.min(cols))
        .map(|i| a.get(i, i).clone())
        .filter(|d| !d.is_zero())
        .collect();
    let rank = invariant_factors.len();
    SmithForm {
        d: a,
        u,
        v,
        invariant_factors,
        rank,
    }
}

/// Quotient rounded to nearest (ties toward zero), so the remainder has
/// absolute value at most |b|/2.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if &r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Finitely generated abelian group in invariant-factor form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianGroup {
    pub free_rank: usize,
    /// Invariant factors > 1, each dividing the next.
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn trivial() -> AbelianGroup {
        AbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn order(&self) -> Option<u64> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().product())
    }

    /// Cokernel of a matrix acting on column vectors: Z^rows / im(M).
    pub fn cokernel(m: &IntMatrix) -> Result<AbelianGroup> {
        let snf = smith_normal_form(m);
        let mut torsion = Vec::new();
        for d in &snf.invariant_factors {
            if d > &BigInt::one() {
                let v: u64 = d.try_into().map_err(|_| {
                    Error::Input("invariant factor exceeds u64".into())
                })?;
                torsion.push(v);
            }
        }
        Ok(AbelianGroup {
            free_rank: m.rows() - snf.rank,
            torsion,
        })
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = self.torsion[i];
            let mut count = 1;
            while i + count < self.torsion.len() && self.torsion[i + count] == d {
                count += 1;
            }
            if count == 1 {
                parts.push(format!("Z/{d}"));
            } else {
                parts.push(format!("(Z/{d})^{count}"));
            }
            i += count;
        }
        write!(f, "{}", parts.join(" x "))
    }
}

impl FromStr for AbelianGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<AbelianGroup> {
        let s = s.trim();
        if s == "0" {
            return Ok(AbelianGroup::trivial());
        }
        let mut free_rank = 0usize;
        let mut torsion: Vec<u64> = Vec::new();
        for part in s.split(" x ") {
            let part = part.trim();
            let (core, power) = match part.split_once(")^") {
                Some((head, pow)) => {
                    let head = head
                        .strip_prefix('(')
                        .ok_or_else(|| Error::Input(format!("bad group term: {part}")))?;
                    let pow: usize = pow
                        .parse()
                        .map_err(|_| Error::Input(format!("bad exponent in: {part}")))?;
                    (head, pow)
                }
                None => match part.split_once('^') {
                    Some((head, pow)) if head == "Z" => {
                        let pow: usize = pow
                            .parse()
                            .map_err(|_| Error::Input(format!("bad exponent in: {part}")))?;
                        ("Z", pow)
                    }
                    _ => (part, 1),
                },
            };
            if core == "Z" {
                free_rank += power;
            } else if let Some(d) = core.strip_prefix("Z/") {
                let d: u64 = d
                    .parse()
                    .map_err(|_| Error::Input(format!("bad torsion order in: {part}")))?;
                for _ in 0..power {
                    torsion.push(d);
                }
            } else {
                return Err(Error::Input(format!("bad group term: {part}")));
            }
        }
        torsion.sort_unstable();
        Ok(AbelianGroup { free_rank, torsion })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(m: &IntMatrix) -> SmithForm {
        let snf = smith_normal_form(m);
        // U * M * V = D
        assert_eq!(snf.u.mul(m).mul(&snf.v), snf.d);
        // unimodular transforms
        assert_eq!(snf.u.det().abs(), BigInt::one());
        assert_eq!(snf.v.det().abs(), BigInt::one());
        // divisibility chain
        for w in snf.invariant_factors.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "{} | {}", w[0], w[1]);
        }
        snf
    }

    #[test]
    fn identity_and_diagonal() {
        let snf = check_snf(&IntMatrix::identity(3));
        assert_eq!(snf.invariant_factors, vec![BigInt::one(); 3]);
        assert_eq!(snf.rank, 3);

        let d = IntMatrix::from_rows(&[vec![2, 0], vec![0, 4]]);
        let snf = check_snf(&d);
        assert_eq!(snf.invariant_factors, vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn known_forms() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let snf = check_snf(&m);
        assert_eq!(
            snf.invariant_factors,
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );

        let m = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        let snf = check_snf(&m);
        assert_eq!(snf.invariant_factors, vec![BigInt::from(1), BigInt::from(2)]);
    }

    #[test]
    fn rectangular_and_rank_deficient() {
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![4, 8], vec![6, 12]]);
        let snf = check_snf(&m);
        assert_eq!(snf.rank, 1);
        assert_eq!(snf.invariant_factors, vec![BigInt::from(2)]);
        let g = AbelianGroup::cokernel(&m).unwrap();
        assert_eq!(g.free_rank, 2);
        assert_eq!(g.torsion, vec![2]);
    }

    #[test]
    fn determinants() {
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(m.det(), BigInt::from(-2));
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.det(), BigInt::from(-1));
        let m = IntMatrix::from_rows(&[vec![1, 1], vec![2, 2]]);
        assert_eq!(m.det(), BigInt::zero());
    }

    #[test]
    fn group_display_round_trip() {
        let cases = [
            (AbelianGroup::trivial(), "0"),
            (
                AbelianGroup {
                    free_rank: 0,
                    torsion: vec![2],
                },
                "Z/2",
            ),
            (
                AbelianGroup {
                    free_rank: 0,
                    torsion: vec![2, 2, 2],
                },
                "(Z/2)^3",
            ),
            (
                AbelianGroup {
                    free_rank: 0,
                    torsion: vec![4],
                },
                "Z/4",
            ),
            (
                AbelianGroup {
                    free_rank: 2,
                    torsion: vec![2, 4],
                },
                "Z^2 x Z/2 x Z/4",
            ),
        ];
        for (g, s) in cases {
            assert_eq!(g.to_string(), s);
            assert_eq!(s.parse::<AbelianGroup>().unwrap(), g);
        }
    }
}
