//! Lattices in `V[t, t^-1]`: finitely generated `k[t]`-submodules that span
//! `V[t, t^-1]` over the Laurent ring.
//!
//! A lattice is stored through a canonical basis: after multiplying the
//! generators by `t^N` so that they are polynomial, take the column Hermite
//! normal form over `k[t]` (upper triangular, monic pivots, entries to the
//! right of a pivot reduced modulo it) and multiply back by `t^-N`. The result
//! does not depend on `N`, so two lattices are equal exactly when their
//! canonical bases are.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::laurent::{LaurentPoly, Order};
use crate::matrix::LaurentMatrix;
use crate::partitions::Composition;

type Column<F> = Vec<LaurentPoly<F>>;

fn axpy<F: Field>(target: &mut Column<F>, q: &LaurentPoly<F>, source: &Column<F>) {
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t = &*t - &(q * s);
        }
    }
}

/// Column Hermite normal form of polynomial generators spanning a rank `n`
/// module. Returns the `n` pivot columns, column `i` having its monic pivot in
/// row `i` and zeros below.
pub fn hermite_columns<F: Field>(n: usize, mut cols: Vec<Column<F>>) -> Result<Vec<Column<F>>> {
    let mut active: Vec<usize> = (0..cols.len()).filter(|&c| cols[c].iter().any(|p| !p.is_zero())).collect();
    let mut pivots: Vec<Option<usize>> = alloc::vec![None; n];
    for i in (0..n).rev() {
        loop {
            let nz: Vec<usize> = active.iter().copied().filter(|&c| !cols[c][i].is_zero()).collect();
            if nz.is_empty() {
                return Err(Error::NotALattice);
            }
            if nz.len() == 1 {
                break;
            }
            let best = *nz.iter().min_by_key(|&&c| cols[c][i].degree()).unwrap();
            let pivot_col = cols[best].clone();
            for &c in nz.iter().filter(|&&c| c != best) {
                let (q, _) = cols[c][i].div_rem_poly(&pivot_col[i]);
                axpy(&mut cols[c], &q, &pivot_col);
            }
        }
        let p = active.iter().position(|&c| !cols[c][i].is_zero()).unwrap();
        let c = active.remove(p);
        let inv = cols[c][i].leading_coeff().and_then(F::inv).expect("nonzero pivot");
        for e in cols[c].iter_mut() {
            *e = e.scale(&inv);
        }
        pivots[i] = Some(c);
    }
    let mut h: Vec<Column<F>> = pivots.iter().map(|p| cols[p.unwrap()].clone()).collect();
    for i in (0..n).rev() {
        let pivot_col = h[i].clone();
        for col in h.iter_mut().skip(i + 1) {
            if col[i].is_zero() {
                continue;
            }
            let (q, _) = col[i].div_rem_poly(&pivot_col[i]);
            if !q.is_zero() {
                axpy(col, &q, &pivot_col);
            }
        }
    }
    Ok(h)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice<F: Field = Rational> {
    basis: LaurentMatrix<F>,
}

impl<F: Field> Lattice<F> {
    /// The lattice spanned over `k[t]` by the given columns (each of length `n`).
    pub fn from_columns(n: usize, cols: Vec<Column<F>>) -> Result<Self> {
        if cols.iter().any(|c| c.len() != n) {
            return Err(Error::DimensionMismatch { left: n, right: cols.iter().map(Vec::len).find(|&l| l != n).unwrap_or(0) });
        }
        let min_ord = cols.iter().flatten().map(LaurentPoly::ord).min().unwrap_or(Order::Infinity);
        let shift = match min_ord {
            Order::Infinity => return Err(Error::NotALattice),
            Order::Finite(k) => -k,
        };
        let scaled: Vec<Column<F>> = cols.iter().map(|c| c.iter().map(|p| p.shift(shift)).collect()).collect();
        let h = hermite_columns(n, scaled)?;
        if h.iter().enumerate().any(|(i, c)| c[i].as_unit().is_none()) {
            return Err(Error::NotALattice);
        }
        let basis = LaurentMatrix::from_fn(n, |i, j| h[j][i].shift(-shift));
        Ok(Lattice { basis })
    }

    /// The lattice spanned by the columns of `m`.
    pub fn from_matrix(m: &LaurentMatrix<F>) -> Result<Self> {
        let n = m.dim();
        Self::from_columns(n, (0..n).map(|j| m.column(j)).collect())
    }

    /// `E = V[t]`.
    pub fn standard(n: usize) -> Self {
        Lattice { basis: LaurentMatrix::identity(n) }
    }

    pub fn n(&self) -> usize {
        self.basis.dim()
    }

    /// The canonical basis (columns).
    pub fn basis(&self) -> &LaurentMatrix<F> {
        &self.basis
    }

    pub fn columns(&self) -> Vec<Column<F>> {
        (0..self.n()).map(|j| self.basis.column(j)).collect()
    }

    /// `t^k L`.
    pub fn shift(&self, k: i64) -> Self {
        Lattice { basis: self.basis.shift(k) }
    }

    /// `g L` for `g` invertible over `k[t, t^-1]`.
    pub fn apply(&self, g: &LaurentMatrix<F>) -> Result<Self> {
        Self::from_matrix(&(g * &self.basis))
    }

    /// `L + M`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        let mut cols = self.columns();
        cols.extend(other.columns());
        Self::from_columns(self.n(), cols)
    }

    /// `dim(L / L cap E) - dim(E / L cap E) = -ord det(basis)`.
    pub fn vdim(&self) -> i64 {
        -self.basis.det().ord().finite().expect("lattice bases are invertible")
    }

    /// Coordinates of `v` in the canonical basis (the basis is triangular
    /// with monomial diagonal, so back substitution is exact).
    pub fn coordinates(&self, v: &[LaurentPoly<F>]) -> Column<F> {
        let n = self.n();
        let mut x = alloc::vec![LaurentPoly::zero(); n];
        let mut rest: Column<F> = v.to_vec();
        for i in (0..n).rev() {
            let pivot = self.basis.get(i, i);
            let xi = rest[i].div_exact(pivot).expect("pivots are monomials");
            if !xi.is_zero() {
                for (r, slot) in rest.iter_mut().enumerate().take(i + 1) {
                    let b = self.basis.get(r, i);
                    if !b.is_zero() {
                        *slot = &*slot - &(&xi * b);
                    }
                }
            }
            x[i] = xi;
        }
        x
    }

    pub fn contains_vector(&self, v: &[LaurentPoly<F>]) -> bool {
        self.coordinates(v).iter().all(LaurentPoly::is_polynomial)
    }

    /// `other` is a sublattice of `self`.
    pub fn contains(&self, other: &Self) -> bool {
        other.columns().iter().all(|c| self.contains_vector(c))
    }

    /// `dim(outer / inner)`; fails unless `inner` is contained in `outer`.
    pub fn quotient_dim(outer: &Self, inner: &Self) -> Result<u64> {
        if !outer.contains(inner) {
            return Err(Error::NotContained);
        }
        let diff = outer.vdim() - inner.vdim();
        Ok(diff as u64)
    }
}

/// A chain `L_0 in L_1 in ... in L_r` of lattices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineFlag<F: Field = Rational> {
    pub lattices: Vec<Lattice<F>>,
}

impl<F: Field> AffineFlag<F> {
    /// Checks `t L_r = L_0`, `dim L_i / L_{i-1} = lambda_i` and `vdim L_0 = 0`.
    pub fn check(&self, lambda: &Composition) -> Result<()> {
        let r = lambda.r();
        if self.lattices.len() != r + 1 {
            return Err(Error::DimensionMismatch { left: r + 1, right: self.lattices.len() });
        }
        if self.lattices[r].shift(1) != self.lattices[0] {
            return Err(Error::IdentityFailed("t L_r = L_0"));
        }
        for i in 1..=r {
            let step = Lattice::quotient_dim(&self.lattices[i], &self.lattices[i - 1])?;
            if step != lambda.part(i) as u64 {
                return Err(Error::IdentityFailed("dim L_i / L_(i-1) = lambda_i"));
            }
        }
        if self.lattices[0].vdim() != 0 {
            return Err(Error::IdentityFailed("vdim L_0 = 0"));
        }
        Ok(())
    }
}
