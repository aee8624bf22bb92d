//! Exact integer matrices and the sign predicates used on Seifert matrices.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Sign;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::BadParameters("ragged matrix rows".into()));
        }
        Ok(IntMatrix { rows: r, cols: c, data: rows.concat() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn order(&self) -> usize {
        self.rows
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn scale(&self, k: i64) -> Self {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * k).collect() }
    }

    /// Removes row and column `k`.
    pub fn minor(&self, k: usize) -> Self {
        let keep: Vec<usize> = (0..self.rows).filter(|&i| i != k).collect();
        self.submatrix(&keep)
    }

    /// Principal submatrix on the given indices, in the given order.
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        let mut m = IntMatrix::zeros(idx.len(), idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m.set(a, b, self.get(i, j));
            }
        }
        m
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<i64> {
        (0..self.cols).map(|j| (0..self.rows).map(|i| self.get(i, j)).sum()).collect()
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    /// Exact determinant by fraction-free elimination.
    pub fn det(&self) -> Result<BigInt> {
        self.require_square()?;
        let a: Vec<Vec<BigInt>> = self.to_rows().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
        Ok(bareiss(a))
    }

    pub fn det_i64(&self) -> Result<i64> {
        self.det()?.to_i64().ok_or_else(|| Error::Corrupt("determinant exceeds 64 bits".into()))
    }

    /// Aligned text rendering, one row per line.
    pub fn to_text(&self) -> String {
        let w = self.data.iter().map(|x| format!("{x}").len()).max().unwrap_or(1);
        let mut s = String::new();
        for i in 0..self.rows {
            s.push('[');
            for j in 0..self.cols {
                if j > 0 {
                    s.push(' ');
                }
                s.push_str(&format!("{:>w$}", self.get(i, j)));
            }
            s.push_str("]\n");
        }
        s
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

pub(crate) fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

fn sign_of(x: i64) -> i64 {
    x.signum()
}

/// Diagonal entries of sign `-eps`, off-diagonal entries zero or of sign `eps`.
pub fn eps_signed_check(m: &IntMatrix, eps: Sign) -> bool {
    signed_check(m, eps, false)
}

/// As [`eps_signed_check`] but zero diagonal entries are allowed.
pub fn weak_eps_signed_check(m: &IntMatrix, eps: Sign) -> bool {
    signed_check(m, eps, true)
}

fn signed_check(m: &IntMatrix, eps: Sign, weak: bool) -> bool {
    let e = eps as i64;
    m.is_square()
        && (0..m.rows()).all(|i| {
            (0..m.cols()).all(|j| {
                let s = sign_of(m.get(i, j));
                if i == j {
                    s == -e || (weak && s == 0)
                } else {
                    s == 0 || s == e
                }
            })
        })
}

pub fn row_dominant_check(m: &IntMatrix) -> bool {
    m.is_square()
        && (0..m.rows()).all(|i| {
            let off: i64 = (0..m.cols()).filter(|&j| j != i).map(|j| m.get(i, j).abs()).sum();
            m.get(i, i).abs() >= off
        })
}

/// Greedy strict peel; returns 0-based rows in peel order. `None` means the
/// greedy certificate failed at some stage.
pub fn sard_order(m: &IntMatrix) -> Option<Vec<usize>> {
    if !row_dominant_check(m) {
        return None;
    }
    let n = m.rows();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let pick = (0..n).filter(|&i| alive[i]).find(|&i| strict_row(m, i, &alive))?;
        alive[pick] = false;
        order.push(pick);
    }
    Some(order)
}

fn strict_row(m: &IntMatrix, i: usize, alive: &[bool]) -> bool {
    let off: i64 = (0..m.cols()).filter(|&j| j != i && alive[j]).map(|j| m.get(i, j).abs()).sum();
    m.get(i, i).abs() > off
}

/// Checks a proposed 0-based row order against the strict ascending condition.
pub fn is_sard_order(m: &IntMatrix, order: &[usize]) -> bool {
    let n = m.rows();
    let mut seen = vec![false; n];
    if order.len() != n || order.iter().any(|&i| i >= n || core::mem::replace(&mut seen[i], true)) {
        return false;
    }
    if !row_dominant_check(m) {
        return false;
    }
    let mut alive = vec![true; n];
    for &i in order {
        if !strict_row(m, i, &alive) {
            return false;
        }
        alive[i] = false;
    }
    true
}

/// Expected determinant sign `(-eps)^r` for an `eps`-signed sard matrix.
pub fn predicted_det_sign(eps: Sign, r: usize) -> i64 {
    if eps < 0 || r.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn bigint_sign(x: &BigInt) -> i64 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Coefficients, from `y^0` upward, of `det(y*M - M^T)`, recovered from
/// values at `y = 0..=n` through forward differences.
pub fn det_pencil(m: &IntMatrix) -> Result<Vec<BigInt>> {
    m.require_square()?;
    let n = m.order();
    let mut values: Vec<BigInt> = (0..=n as i64)
        .map(|y| {
            let a = (0..n)
                .map(|i| (0..n).map(|j| BigInt::from(y * m.get(i, j) - m.get(j, i))).collect())
                .collect();
            bareiss(a)
        })
        .collect();
    // Newton coefficients in the falling-factorial basis
    let mut newton = Vec::with_capacity(n + 1);
    let mut fact = BigInt::one();
    for k in 0..=n {
        if k > 0 {
            fact *= BigInt::from(k);
        }
        let (q, r) = (&values[0] / &fact, &values[0] % &fact);
        if !r.is_zero() {
            return Err(Error::Corrupt("non-integral interpolation".into()));
        }
        newton.push(q);
        let next: Vec<BigInt> = values.windows(2).map(|w| &w[1] - &w[0]).collect();
        values = next;
    }
    // expand sum b_k * y(y-1)...(y-k+1)
    let mut out = vec![BigInt::zero(); n + 1];
    let mut basis = vec![BigInt::one()];
    for (k, b) in newton.iter().enumerate() {
        for (e, c) in basis.iter().enumerate() {
            out[e] += b * c;
        }
        let mut nb = vec![BigInt::zero(); basis.len() + 1];
        for (e, c) in basis.iter().enumerate() {
            nb[e + 1] += c;
            nb[e] -= c * BigInt::from(k);
        }
        basis = nb;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn predicates() {
        let a = m(&[&[-3, 0, 3], &[0, -2, 1], &[1, 0, -2]]);
        assert!(eps_signed_check(&a, 1));
        assert!(row_dominant_check(&a));
        assert!(is_sard_order(&a, &[2, 0, 1]));
        assert!(sard_order(&a).is_some());
        assert_eq!(a.det().unwrap(), BigInt::from(-6));
        assert!(!eps_signed_check(&m(&[&[-3, -1], &[0, -2]]), 1));
        assert!(!row_dominant_check(&m(&[&[-1, 2], &[0, -1]])));
        assert_eq!(sard_order(&m(&[&[-1, 1], &[1, -1]])), None);
    }

    #[test]
    fn det_with_pivoting() {
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), BigInt::from(-1));
        assert_eq!(m(&[&[0, 0], &[1, 0]]).det().unwrap(), BigInt::from(0));
        assert_eq!(IntMatrix::zeros(0, 0).det().unwrap(), BigInt::from(1));
        let f9 = m(&[&[-3, 1, 1, 0], &[1, -2, 0, 1], &[0, 1, -3, 0], &[1, 0, 1, -2]]);
        assert_eq!(f9.det_i64().unwrap(), 21);
        assert!(IntMatrix::zeros(2, 3).det().is_err());
    }

    #[test]
    fn pencil_of_trefoil_matrix() {
        // det(yM - M^T) for M = [[-1,1],[0,-1]] is y^2 - y + 1
        let p = det_pencil(&m(&[&[-1, 1], &[0, -1]])).unwrap();
        assert_eq!(p, vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]);
    }
}
