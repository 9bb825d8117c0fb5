//! Iwahori and parabolic Bruhat cells of explicit Laurent matrices, and the
//! embeddings of the cotangent bundle and the nilpotent cone into affine flag
//! varieties.
//!
//! Cells are located with the periodic lattice chain
//! `Lambda_i = span_{k[t]} { u_j : j <= i }`, `u_{qn+r} = t^-q e_r`, which the
//! Iwahori subgroup preserves. For `M` in `B w B`,
//! `w(j) = min { i : M u_j in Lambda_i + M Lambda_{j-1} }`.

use alloc::vec::Vec;

use crate::constructions::unipotent_point;
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::laurent::{LaurentPoly, Order};
use crate::lattice::{AffineFlag, Lattice};
use crate::matrix::LaurentMatrix;
use crate::partitions::{jordan_type, Composition};
use crate::weyl::{min_coset_rep, AffinePermutation, ParabolicSubset, Side};

/// Basis columns of `Lambda_i`: `t^{-floor((i - r) / n)} e_r`.
fn chain_columns<F: Field>(n: usize, i: i64) -> Vec<Vec<LaurentPoly<F>>> {
    let nn = n as i64;
    (1..=nn)
        .map(|r| {
            let mut col = alloc::vec![LaurentPoly::zero(); n];
            col[(r - 1) as usize] = LaurentPoly::t_pow(-(i - r).div_euclid(nn));
            col
        })
        .collect()
}

type Vector<F> = Vec<LaurentPoly<F>>;

/// Largest `i` such that `v` has a nonzero `u_i` component, with that
/// component's coordinate, exponent and coefficient. `t^e e_r = u_{r - en}`,
/// so only the lowest order term of each coordinate can lead.
fn lead<F: Field>(v: &[LaurentPoly<F>], n: i64) -> Option<(i64, usize, i64, F)> {
    v.iter()
        .enumerate()
        .filter_map(|(r, p)| match p.ord() {
            Order::Finite(e) => Some((r as i64 + 1 - e * n, r, e)),
            Order::Infinity => None,
        })
        .max_by_key(|&(idx, _, _)| idx)
        .map(|(idx, r, e)| (idx, r, e, v[r].coeff(e)))
}

/// `v -= c t^m g`.
fn subtract_shifted<F: Field>(v: &mut [LaurentPoly<F>], c: &F, m: i64, g: &[LaurentPoly<F>]) {
    let scale = LaurentPoly::monomial(c.clone(), m);
    for (x, y) in v.iter_mut().zip(g) {
        if !y.is_zero() {
            *x = &*x - &(&scale * y);
        }
    }
}

/// Cancels the leading term of `v` against `g`, whose leading index is at
/// least that of `v` and in the same residue class.
fn reduce_once<F: Field>(v: &mut [LaurentPoly<F>], g: &[LaurentPoly<F>], n: i64) {
    let (lv, _, _, cv) = lead(v, n).expect("nonzero vector");
    let (lg, _, _, cg) = lead(g, n).expect("nonzero generator");
    let factor = cv.mul(&cg.inv().expect("leading coefficients are nonzero"));
    subtract_shifted(v, &factor, (lg - lv) / n, g);
}

/// Generators of a lattice whose leading indices lie in distinct residue
/// classes mod `n`; then `{t^m g}` is an echelon basis of the lattice over
/// `k` and `slots[rho]` is the generator whose lead is `= rho mod n`.
struct EchelonLattice<F: Field> {
    n: i64,
    slots: Vec<Vector<F>>,
}

impl<F: Field> EchelonLattice<F> {
    fn new(n: usize, mut gens: Vec<Vector<F>>) -> Result<Self> {
        let nn = n as i64;
        loop {
            let leads: Vec<i64> = gens
                .iter()
                .map(|g| lead(g, nn).map(|l| l.0).ok_or(Error::NotUnimodular))
                .collect::<Result<_>>()?;
            let clash = (0..n).find_map(|a| {
                (a + 1..n).find(|&b| (leads[a] - leads[b]).rem_euclid(nn) == 0).map(|b| (a, b))
            });
            let Some((a, b)) = clash else { break };
            let (hi, lo) = if leads[a] >= leads[b] { (a, b) } else { (b, a) };
            let g = gens[hi].clone();
            reduce_once(&mut gens[lo], &g, nn);
        }
        let mut slots = alloc::vec![Vec::new(); n];
        for g in gens {
            let rho = lead(&g, nn).unwrap().0.rem_euclid(nn) as usize;
            slots[rho] = g;
        }
        Ok(EchelonLattice { n: nn, slots })
    }

    /// Reduces `v` until its leading index is not a leading index of the
    /// lattice, and returns that index: the least `i` with
    /// `v in span{u_j : j <= i} + L`.
    fn reduce(&self, v: &mut Vector<F>) -> Result<i64> {
        loop {
            let (lv, ..) = lead(v, self.n).ok_or(Error::NotUnimodular)?;
            let g = &self.slots[lv.rem_euclid(self.n) as usize];
            let (lg, ..) = lead(g, self.n).unwrap();
            if lg < lv {
                return Ok(lv);
            }
            reduce_once(v, g, self.n);
        }
    }

    /// Adds `v` (already reduced, with `t v` in the lattice) as a generator.
    fn extend(&mut self, v: Vector<F>) {
        let rho = lead(&v, self.n).unwrap().0.rem_euclid(self.n) as usize;
        self.slots[rho] = v;
    }
}

/// The affine permutation `w` with `M in B w B`.
///
/// `M Lambda_{j-1}` is kept as an echelon lattice; reducing `M u_j` against
/// it leaves leading index `w(j)`, and the reduced vector then extends the
/// echelon basis to one of `M Lambda_j`.
pub fn iwahori_cell<F: Field>(m: &LaurentMatrix<F>) -> Result<AffinePermutation> {
    let n = m.dim();
    match m.det().as_unit() {
        Some((_, 0)) => {}
        _ => return Err(Error::NotUnimodular),
    }
    // M Lambda_0 = M t E
    let gens: Vec<Vector<F>> = (0..n).map(|r| m.column(r).iter().map(|p| p.shift(1)).collect()).collect();
    let mut lattice = EchelonLattice::new(n, gens)?;
    let mut window = Vec::with_capacity(n);
    for j in 0..n {
        let mut v = m.column(j);
        window.push(lattice.reduce(&mut v)?);
        lattice.extend(v);
    }
    AffinePermutation::new(window).map_err(|_| Error::IdentityFailed("cell values form an affine permutation"))
}

/// The minimal representative `w` in `W^J` with `M in B w P_J`.
pub fn parabolic_cell<F: Field>(m: &LaurentMatrix<F>, j: &ParabolicSubset) -> Result<AffinePermutation> {
    Ok(min_coset_rep(&iwahori_cell(m)?, j, Side::Right))
}

/// Whether the constant matrix `x` maps `V_{d_i}` into `V_{d_{i-1}}` for all `i`.
pub fn in_nilradical<F: Field>(x: &LaurentMatrix<F>, lambda: &Composition) -> bool {
    let n = x.dim();
    x.is_constant()
        && (0..n).all(|a| (0..n).all(|b| x.get(a, b).is_zero() || lambda.block_of(a + 1) < lambda.block_of(b + 1)))
}

/// `diag(t^-1 on the first d coordinates, 1 elsewhere)`.
fn partial_inverse_t<F: Field>(n: usize, d: usize) -> LaurentMatrix<F> {
    LaurentMatrix::diagonal((0..n).map(|i| if i < d { LaurentPoly::t_pow(-1) } else { LaurentPoly::one() }).collect())
}

#[derive(Clone, Debug)]
pub struct PhiImage<F: Field = Rational> {
    /// `g (1 - t^-1 X)`.
    pub point: LaurentMatrix<F>,
    pub flag: AffineFlag<F>,
}

/// `phi_P(g, X) = g (1 - t^-1 X) mod P`, with the lattice flag
/// `L_i = g (1 - t^-1 X) (V[t] + t^-1 V_{d_i})`. The flag invariants are
/// checked before returning.
pub fn phi_p<F: Field>(g: &LaurentMatrix<F>, x: &LaurentMatrix<F>, lambda: &Composition) -> Result<PhiImage<F>> {
    let n = lambda.n();
    if g.dim() != n || x.dim() != n {
        return Err(Error::DimensionMismatch { left: n, right: g.dim().max(x.dim()) });
    }
    if !in_nilradical(x, lambda) {
        return Err(Error::NotInNilradical);
    }
    if !g.is_constant() || !g.det().is_one() {
        return Err(Error::NotUnimodular);
    }
    let point = g * &unipotent_point(x);
    let lattices = lambda
        .partial_sums()
        .into_iter()
        .map(|d| Lattice::from_matrix(&(&point * &partial_inverse_t(n, d))))
        .collect::<Result<Vec<_>>>()?;
    let flag = AffineFlag { lattices };
    flag.check(lambda)?;
    Ok(PhiImage { point, flag })
}

/// `psi(X) = (1 - t^-1 X) mod L^+G`, with its lattice `(1 - t^-1 X) V[t]`.
pub fn psi<F: Field>(x: &LaurentMatrix<F>) -> Result<(LaurentMatrix<F>, Lattice<F>)> {
    jordan_type(x)?;
    let point = unipotent_point(x);
    let lattice = Lattice::from_matrix(&point)?;
    Ok((point, lattice))
}

/// `L_i = (1 - t^-1 X) V[t] + t^-1 g V_{d_i}` for `0 <= i < r`, where the
/// flag `F_i = g V_{d_i}` must satisfy `X F_i in F_{i-1}`.
pub fn mv_embed<F: Field>(x: &LaurentMatrix<F>, g: &LaurentMatrix<F>, lambda: &Composition) -> Result<Vec<Lattice<F>>> {
    let n = lambda.n();
    let g_inv = g.invert()?;
    if !g.is_constant() || !in_nilradical(&(&(&g_inv * x) * g), lambda) {
        return Err(Error::NotInNilradical);
    }
    let base: Vec<Vec<LaurentPoly<F>>> = {
        let p = unipotent_point(x);
        (0..n).map(|j| p.column(j)).collect()
    };
    let mut out = Vec::with_capacity(lambda.r());
    for i in 0..lambda.r() {
        let mut cols = base.clone();
        for j in 0..lambda.d(i) {
            cols.push(g.column(j).iter().map(|p| p.shift(-1)).collect());
        }
        out.push(Lattice::from_columns(n, cols)?);
    }
    Ok(out)
}

/// `(L_0 in L_1) -> (L_0 in L_1 in t^-1 L_0)`; only for maximal parabolics.
pub fn beta<F: Field>(lattices: &[Lattice<F>], lambda: &Composition) -> Result<AffineFlag<F>> {
    if lambda.r() != 2 || lattices.len() != 2 {
        return Err(Error::NotMaximalParabolic { rows: lambda.r() });
    }
    let mut out = lattices.to_vec();
    out.push(lattices[0].shift(-1));
    Ok(AffineFlag { lattices: out })
}

/// `Lambda_i` of the periodic chain; `Lambda_0 = tE` and `Lambda_n = E`.
pub fn chain_lattice<F: Field>(n: usize, i: i64) -> Lattice<F> {
    Lattice::from_columns(n, chain_columns(n, i)).expect("chain lattices are lattices")
}
