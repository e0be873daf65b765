//! Exact linear algebra over the rationals, the integers, and prime fields.
//!
//! Everything downstream (homology, jump-locus membership, Schubert
//! incidence) reduces to rank, kernel, Smith form, and Hermite form
//! computations done here.  No floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Mat<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Mat<T> {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Horizontal concatenation [self | other].
    pub fn hstack(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                other.at(i, j - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation [self; other].
    pub fn vstack(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, other.cols);
        Mat::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.at(i, j).clone()
            } else {
                other.at(i - self.rows, j).clone()
            }
        })
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat::from_fn(self.rows, self.cols, |i, j| f(self.at(i, j)))
    }
}

impl<T: Clone + Zero> Mat<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

impl<T: Clone + Zero + One> Mat<T> {
    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl<T> Mat<T>
where
    T: Clone + Zero + std::ops::Mul<Output = T> + std::ops::Add<Output = T>,
{
    pub fn mul(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, other.rows);
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self.at(i, k).clone() * other.at(k, j).clone();
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self.at(i, k).clone() * v[k].clone();
                }
                acc
            })
            .collect()
    }
}

pub type QMat = Mat<Rat>;
pub type ZMat = Mat<Int>;

impl QMat {
    pub fn from_i64(rows: Vec<Vec<i64>>) -> Self {
        Mat::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat_i).collect())
                .collect(),
        )
    }

    /// Clear denominators row by row, returning an integer matrix with
    /// the same row space (hence the same rank and kernel).
    pub fn clear_denominators(&self) -> ZMat {
        let mut out = ZMat::zero(self.rows, self.cols);
        for i in 0..self.rows {
            let mut l = Int::one();
            for j in 0..self.cols {
                l = l.lcm(self.at(i, j).denom());
            }
            for j in 0..self.cols {
                let e = self.at(i, j);
                out.set(i, j, e.numer() * (&l / e.denom()));
            }
        }
        out
    }
}

impl ZMat {
    pub fn from_i64(rows: Vec<Vec<i64>>) -> Self {
        Mat::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Int::from).collect())
                .collect(),
        )
    }

    pub fn to_rat(&self) -> QMat {
        self.map(|x| Rat::from_integer(x.clone()))
    }
}

/// Rank over the rationals, via fraction-free (Bareiss) elimination with
/// full pivoting on a denominator-cleared copy.
pub fn rat_rank(m: &QMat) -> usize {
    int_rank(&m.clear_denominators())
}

/// Rank of an integer matrix over the rationals.
pub fn int_rank(m: &ZMat) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut prev = Int::one();
    let mut t = 0;
    while t < rows && t < cols {
        // full pivoting: any nonzero entry in the remaining submatrix
        let mut pivot = None;
        'search: for i in t..rows {
            for j in t..cols {
                if !a.at(i, j).is_zero() {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        for i in t + 1..rows {
            for j in t + 1..cols {
                let v = (a.at(t, t) * a.at(i, j) - a.at(i, t) * a.at(t, j)) / &prev;
                a.set(i, j, v);
            }
            a.set(i, t, Int::zero());
        }
        prev = a.at(t, t).clone();
        t += 1;
    }
    t
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(a: &mut QMat) -> Vec<usize> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a.at(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(r, pr);
        let inv = a.at(r, c).recip();
        for j in c..cols {
            let v = a.at(r, j) * &inv;
            a.set(r, j, v);
        }
        for i in 0..rows {
            if i != r && !a.at(i, c).is_zero() {
                let f = a.at(i, c).clone();
                for j in c..cols {
                    let v = a.at(i, j) - &f * a.at(r, j);
                    a.set(i, j, v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right kernel of M over the rationals; columns of the
/// returned matrix. cols(K) = cols(M) - rank(M).
pub fn rat_kernel(m: &QMat) -> QMat {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let cols = m.cols();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = QMat::zero(cols, free.len());
    for (k, &fc) in free.iter().enumerate() {
        basis.set(fc, k, Rat::one());
        for (r, &pc) in pivots.iter().enumerate() {
            basis.set(pc, k, -a.at(r, fc).clone());
        }
    }
    basis
}

/// Solve M x = b over the rationals, if consistent.
pub fn rat_solve(m: &QMat, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(m.rows(), b.len());
    let bm = Mat::from_fn(b.len(), 1, |i, _| b[i].clone());
    let mut aug = m.hstack(&bm);
    let pivots = rref(&mut aug);
    if pivots.contains(&m.cols()) {
        return None; // pivot in the augmented column
    }
    let mut x = vec![Rat::zero(); m.cols()];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug.at(r, m.cols()).clone();
    }
    Some(x)
}

/// Rank over GF(p). Rejects composite p.
pub fn field_rank(m: &ZMat, p: u64) -> Result<usize, Error> {
    if !is_prime(p) {
        return Err(Error::CompositeModulus(p));
    }
    let pi = Int::from(p);
    let mut a: Vec<Vec<u64>> = (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| {
                    let r = m.at(i, j).mod_floor(&pi);
                    u64::try_from(r).expect("residue fits in u64")
                })
                .collect()
        })
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    for c in 0..cols {
        if rank >= rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, pr);
        let inv = mod_inverse(a[rank][c], p);
        for j in c..cols {
            a[rank][j] = mod_mul(a[rank][j], inv, p);
        }
        for i in 0..rows {
            if i != rank && a[i][c] != 0 {
                let f = a[i][c];
                for j in c..cols {
                    let s = mod_mul(f, a[rank][j], p);
                    a[i][j] = (a[i][j] + p - s) % p;
                }
            }
        }
        rank += 1;
    }
    Ok(rank)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a != 0 mod p
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mod_mul(acc, b, p);
        }
        b = mod_mul(b, b, p);
        e >>= 1;
    }
    acc
}

/// Smith normal form data: left * M * right = diag(diag) padded by zeros,
/// with left, right unimodular and d1 | d2 | ... | dk, all di > 0.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diag: Vec<Int>,
    pub left: ZMat,
    pub right: ZMat,
}

pub fn smith_form(m: &ZMat) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut left = ZMat::identity(rows);
    let mut right = ZMat::identity(cols);

    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        // smallest nonzero entry of the remaining submatrix to (t, t)
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a.at(i, j).is_zero()
                    && best.is_none_or(|(bi, bj)| a.at(i, j).abs() < a.at(bi, bj).abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap_rows(t, bi);
        left.swap_rows(t, bi);
        a.swap_cols(t, bj);
        right.swap_cols(t, bj);

        loop {
            // clear column t below the pivot
            let mut dirty = false;
            for i in t + 1..rows {
                if a.at(i, t).is_zero() {
                    continue;
                }
                let q = a.at(i, t).div_floor(a.at(t, t));
                row_sub_mul(&mut a, i, t, &q);
                row_sub_mul(&mut left, i, t, &q);
                if !a.at(i, t).is_zero() {
                    // remainder strictly smaller than the pivot: promote it
                    a.swap_rows(t, i);
                    left.swap_rows(t, i);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // clear row t right of the pivot
            for j in t + 1..cols {
                if a.at(t, j).is_zero() {
                    continue;
                }
                let q = a.at(t, j).div_floor(a.at(t, t));
                col_sub_mul(&mut a, j, t, &q);
                col_sub_mul(&mut right, j, t, &q);
                if !a.at(t, j).is_zero() {
                    a.swap_cols(t, j);
                    right.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // pivot must divide every remaining entry
            let pivot = a.at(t, t).clone();
            let mut offender = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !a.at(i, j).mod_floor(&pivot).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    // fold the offending row into row t and keep reducing
                    row_add(&mut a, t, i);
                    row_add(&mut left, t, i);
                }
                None => break,
            }
        }
        if a.at(t, t).is_negative() {
            negate_row(&mut a, t);
            negate_row(&mut left, t);
        }
        t += 1;
    }

    let diag: Vec<Int> = (0..t)
        .map(|i| a.at(i, i).clone())
        .filter(|d| !d.is_zero())
        .collect();
    SmithForm { diag, left, right }
}

fn row_sub_mul(a: &mut ZMat, target: usize, source: usize, q: &Int) {
    for j in 0..a.cols() {
        let v = a.at(target, j) - q * a.at(source, j);
        a.set(target, j, v);
    }
}

fn col_sub_mul(a: &mut ZMat, target: usize, source: usize, q: &Int) {
    for i in 0..a.rows() {
        let v = a.at(i, target) - q * a.at(i, source);
        a.set(i, target, v);
    }
}

fn row_add(a: &mut ZMat, target: usize, source: usize) {
    for j in 0..a.cols() {
        let v = a.at(target, j) + a.at(source, j);
        a.set(target, j, v);
    }
}

fn negate_row(a: &mut ZMat, i: usize) {
    for j in 0..a.cols() {
        let v = -a.at(i, j).clone();
        a.set(i, j, v);
    }
}

/// Row-style Hermite normal form: U * M = H with U unimodular, pivots
/// positive, and entries above each pivot reduced into [0, pivot).
pub fn hermite_form(m: &ZMat) -> (ZMat, ZMat) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = ZMat::identity(rows);
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        // Euclid down column c until a single nonzero entry remains at row r
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows {
                if !a.at(i, c).is_zero()
                    && best.is_none_or(|b| a.at(i, c).abs() < a.at(b, c).abs())
                {
                    best = Some(i);
                }
            }
            let Some(bi) = best else { break };
            a.swap_rows(r, bi);
            u.swap_rows(r, bi);
            let mut done = true;
            for i in r + 1..rows {
                if a.at(i, c).is_zero() {
                    continue;
                }
                let q = a.at(i, c).div_floor(a.at(r, c));
                row_sub_mul(&mut a, i, r, &q);
                row_sub_mul(&mut u, i, r, &q);
                if !a.at(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a.at(r, c).is_zero() {
            continue;
        }
        if a.at(r, c).is_negative() {
            negate_row(&mut a, r);
            negate_row(&mut u, r);
        }
        let pivot = a.at(r, c).clone();
        for i in 0..r {
            let q = a.at(i, c).div_floor(&pivot);
            if !q.is_zero() {
                row_sub_mul(&mut a, i, r, &q);
                row_sub_mul(&mut u, i, r, &q);
            }
        }
        r += 1;
    }
    (a, u)
}

/// Integer solution x of A x = b, if one exists, via the Smith form.
pub fn integer_solve(a: &ZMat, b: &[Int]) -> Option<Vec<Int>> {
    assert_eq!(a.rows(), b.len());
    let snf = smith_form(a);
    let c = snf.left.mul_vec(b);
    let k = snf.diag.len();
    let mut y = vec![Int::zero(); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        if i < k {
            let (q, r) = ci.div_rem(&snf.diag[i]);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(snf.right.mul_vec(&y))
}

/// Primitive basis (as matrix columns) of the integer kernel of A,
/// i.e. of the saturated lattice { x in Z^n | A x = 0 }.
pub fn integer_kernel(a: &ZMat) -> ZMat {
    let snf = smith_form(a);
    let k = snf.diag.len();
    let n = a.cols();
    Mat::from_fn(n, n - k, |i, j| snf.right.at(i, k + j).clone())
}
