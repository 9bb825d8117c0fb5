//! Dense square matrices over Laurent polynomials.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::laurent::{LaurentPoly, Order};

/// An `n x n` matrix with entries in `k[t, t^-1]`, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentMatrix<F: Field = Rational> {
    n: usize,
    entries: Vec<LaurentPoly<F>>,
}

/// Membership of a matrix in the Iwahori subgroups `B^+` (integral in `t`,
/// upper triangular at `t = 0`) and `B^-` (integral in `t^-1`, upper
/// triangular at `t^-1 = 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BorelMembership {
    InBplus,
    InBminus,
    /// Constant invertible upper triangular matrices lie in both.
    Both,
    Neither,
}

impl BorelMembership {
    pub fn in_plus(self) -> bool {
        matches!(self, BorelMembership::InBplus | BorelMembership::Both)
    }

    pub fn in_minus(self) -> bool {
        matches!(self, BorelMembership::InBminus | BorelMembership::Both)
    }
}

impl<F: Field> LaurentMatrix<F> {
    pub fn zero(n: usize) -> Self {
        LaurentMatrix {
            n,
            entries: (0..n * n).map(|_| LaurentPoly::zero()).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() })
    }

    /// Entry `(i, j)` (zero-based) is `f(i, j)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly<F>) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        LaurentMatrix { n, entries }
    }

    /// Row-major entries; fails unless there are exactly `n * n` of them.
    pub fn from_entries(n: usize, entries: Vec<LaurentPoly<F>>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch { left: n * n, right: entries.len() });
        }
        Ok(LaurentMatrix { n, entries })
    }

    /// A constant matrix from integer rows.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        Self::from_fn(n, |i, j| LaurentPoly::from_i64(rows[i][j]))
    }

    /// Diagonal matrix from its entries.
    pub fn diagonal(diag: Vec<LaurentPoly<F>>) -> Self {
        let n = diag.len();
        let mut m = Self::zero(n);
        for (i, d) in diag.into_iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    /// The elementary matrix `E_{i,j}` (zero-based) scaled by `p`.
    pub fn elementary(n: usize, i: usize, j: usize, p: LaurentPoly<F>) -> Self {
        let mut m = Self::zero(n);
        m.set(i, j, p);
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly<F> {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly<F>) {
        self.entries[i * self.n + j] = p;
    }

    pub fn entries(&self) -> &[LaurentPoly<F>] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vec<LaurentPoly<F>> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly<F>) -> LaurentPoly<F>) -> Self {
        LaurentMatrix { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    /// Multiply every entry by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        self.map(|p| p.shift(k))
    }

    pub fn scale(&self, p: &LaurentPoly<F>) -> Self {
        self.map(|e| e * p)
    }

    /// Smallest order among the entries (`Infinity` for the zero matrix).
    pub fn min_ord(&self) -> Order {
        self.entries.iter().map(LaurentPoly::ord).min().unwrap_or(Order::Infinity)
    }

    pub fn is_polynomial(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_polynomial)
    }

    pub fn is_constant(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_constant)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Constant terms of all entries, as a field matrix (row-major).
    pub fn constant_part(&self) -> Vec<Vec<F>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).constant_term()).collect())
            .collect()
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch { left: self.n, right: rhs.n });
        }
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * n + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact determinant.
    ///
    /// Entries are first multiplied by `t^N` so that every one lies in `k[t]`;
    /// fraction-free Bareiss elimination then runs in `k[t]` and the result
    /// is rescaled by `t^{-nN}`.
    pub fn det(&self) -> LaurentPoly<F> {
        let n = self.n;
        if n == 0 {
            return LaurentPoly::one();
        }
        let shift = match self.min_ord() {
            Order::Infinity => return LaurentPoly::zero(),
            Order::Finite(k) => -k.min(0),
        };
        let mut a: Vec<Vec<LaurentPoly<F>>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).shift(shift)).collect())
            .collect();
        let mut negate = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return LaurentPoly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].shift(-(n as i64) * shift);
        if negate {
            -d
        } else {
            d
        }
    }

    /// The matrix with row `i` and column `j` removed.
    pub fn minor(&self, i: usize, j: usize) -> Self {
        let n = self.n;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for r in (0..n).filter(|&r| r != i) {
            for c in (0..n).filter(|&c| c != j) {
                entries.push(self.get(r, c).clone());
            }
        }
        LaurentMatrix { n: n - 1, entries }
    }

    /// Inverse over `k[t, t^-1]`. Exists exactly when the determinant is a
    /// unit `c * t^k`; computed as adjugate over determinant.
    pub fn invert(&self) -> Result<Self> {
        let det = self.det();
        let (c, k) = det.as_unit().ok_or(Error::NotAUnit)?;
        let n = self.n;
        let inv_det = LaurentPoly::monomial(c.inv().ok_or(Error::NotAUnit)?, -k);
        if n == 1 {
            return Ok(Self::diagonal(alloc::vec![inv_det]));
        }
        Ok(Self::from_fn(n, |i, j| {
            // adj(M)[i][j] = (-1)^{i+j} det(minor(j, i))
            let cof = self.minor(j, i).det();
            let cof = if (i + j) % 2 == 1 { -cof } else { cof };
            &cof * &inv_det
        }))
    }

    /// Classification against the two Iwahori subgroups.
    pub fn borel_membership(&self) -> BorelMembership {
        let plus = self.in_iwahori(false);
        let minus = self.in_iwahori(true);
        match (plus, minus) {
            (true, true) => BorelMembership::Both,
            (true, false) => BorelMembership::InBplus,
            (false, true) => BorelMembership::InBminus,
            (false, false) => BorelMembership::Neither,
        }
    }

    fn in_iwahori(&self, inverse_variable: bool) -> bool {
        let integral = |p: &LaurentPoly<F>| {
            if inverse_variable {
                p.is_polynomial_in_inverse()
            } else {
                p.is_polynomial()
            }
        };
        if !self.entries.iter().all(integral) {
            return false;
        }
        let n = self.n;
        for i in 0..n {
            for j in 0..i {
                if !self.get(i, j).constant_term().is_zero() {
                    return false;
                }
            }
        }
        let det = self.det();
        det.is_constant() && !det.is_zero()
    }

    /// `Some(..)` when every row and every column has exactly one nonzero
    /// entry and that entry is a single term. Returns, for each column `j`,
    /// the row index and the term `(c, k)` meaning `c * t^k`.
    pub fn monomial_columns(&self) -> Option<Vec<(usize, F, i64)>> {
        let n = self.n;
        let mut seen_row = alloc::vec![false; n];
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut found = None;
            for (i, seen) in seen_row.iter().enumerate() {
                let p = self.get(i, j);
                if p.is_zero() {
                    continue;
                }
                if found.is_some() || *seen {
                    return None;
                }
                let (c, k) = p.as_unit()?;
                found = Some((i, c, k));
            }
            let (i, c, k) = found?;
            seen_row[i] = true;
            cols.push((i, c, k));
        }
        Some(cols)
    }

    /// Embeds a matrix over another field by mapping every coefficient.
    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> LaurentMatrix<G> {
        LaurentMatrix {
            n: self.n,
            entries: self.entries.iter().map(|p| p.map_coeffs(&f)).collect(),
        }
    }
}

/// Rank of a matrix over the field, by Gaussian elimination.
pub fn field_rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut a: Vec<Vec<F>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][col].inv().expect("pivot is nonzero");
        for r in rank + 1..a.len() {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].mul(&inv);
            let (upper, lower) = a.split_at_mut(r);
            for (x, y) in lower[0][col..ncols].iter_mut().zip(&upper[rank][col..ncols]) {
                *x = x.sub(&factor.mul(y));
            }
        }
        rank += 1;
    }
    rank
}

impl<F: Field> Mul for &LaurentMatrix<F> {
    type Output = LaurentMatrix<F>;

    fn mul(self, rhs: Self) -> LaurentMatrix<F> {
        self.checked_mul(rhs).expect("matrix dimensions agree")
    }
}

impl<F: Field> Add for &LaurentMatrix<F> {
    type Output = LaurentMatrix<F>;

    fn add(self, rhs: Self) -> LaurentMatrix<F> {
        assert_eq!(self.n, rhs.n, "matrix dimensions agree");
        LaurentMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<F: Field> Sub for &LaurentMatrix<F> {
    type Output = LaurentMatrix<F>;

    fn sub(self, rhs: Self) -> LaurentMatrix<F> {
        assert_eq!(self.n, rhs.n, "matrix dimensions agree");
        LaurentMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<F: Field> Neg for &LaurentMatrix<F> {
    type Output = LaurentMatrix<F>;

    fn neg(self) -> LaurentMatrix<F> {
        self.map(|p| -p)
    }
}

impl<F: Field> fmt::Display for LaurentMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<alloc::string::String> =
            self.entries.iter().map(|p| alloc::format!("{p}")).collect();
        let width = cells.iter().map(|s| s.chars().count()).max().unwrap_or(1);
        for i in 0..self.n {
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:>width$}", cells[i * self.n + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for LaurentMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentMatrix({}x{})\n{self}", self.n, self.n)
    }
}
