//! Seeded random inputs for the verification sweeps.
//!
//! All samplers draw from a caller-supplied RNG, so a fixed seed reproduces
//! every input exactly.

use conormal_core::partitions::Composition;
use conormal_core::weyl::AffinePermutation;
use conormal_core::{Field, LaurentMatrix, LaurentPoly, ModP, Rational};
use rand::seq::SliceRandom;
use rand::Rng;

/// The prime field used by the random sweeps.
pub type Fp = ModP<2147483647>;

/// A field whose elements can be drawn at random.
pub trait RandomScalar: Field {
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self;

    fn random_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let c = Self::random(rng);
            if !c.is_zero() {
                return c;
            }
        }
    }
}

impl<const P: u64> RandomScalar for ModP<P> {
    /// Uniform over the field.
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        ModP::new(rng.random_range(0..P) as i64)
    }
}

impl RandomScalar for Rational {
    /// Small integers, so exact coefficients stay readable.
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Rational::from_i64(rng.random_range(-9..=9))
    }
}

fn constant<F: Field>(c: F) -> LaurentPoly<F> {
    LaurentPoly::constant(c)
}

/// Diagonal constant matrix with random nonzero entries and determinant one.
fn unit_diagonal<F: RandomScalar, R: Rng + ?Sized>(n: usize, rng: &mut R) -> LaurentMatrix<F> {
    let mut diag: Vec<F> = (0..n).map(|_| F::random_nonzero(rng)).collect();
    let rest = diag[1..].iter().fold(F::one(), |acc, c| acc.mul(c));
    diag[0] = rest.inv().expect("product of nonzero elements");
    LaurentMatrix::diagonal(diag.into_iter().map(constant).collect())
}

/// Unitriangular constant matrix; entries outside `keep` stay zero.
fn unitriangular<F: RandomScalar, R: Rng + ?Sized>(n: usize, upper: bool, rng: &mut R, keep: impl Fn(usize, usize) -> bool) -> LaurentMatrix<F> {
    LaurentMatrix::from_fn(n, |i, j| {
        if i == j {
            LaurentPoly::one()
        } else if (i < j) == upper && keep(i, j) {
            constant(F::random(rng))
        } else {
            LaurentPoly::zero()
        }
    })
}

/// `D L U` with `D` of determinant one and `L`, `U` unitriangular: a
/// constant element of `SL_n`, generic with high probability over `F_p`.
pub fn sl_constant<F: RandomScalar, R: Rng + ?Sized>(n: usize, rng: &mut R) -> LaurentMatrix<F> {
    let d = unit_diagonal(n, rng);
    let l = unitriangular(n, false, rng, |_, _| true);
    let u = unitriangular(n, true, rng, |_, _| true);
    &(&d * &l) * &u
}

/// Constant upper triangular matrix of determinant one.
pub fn borel_constant<F: RandomScalar, R: Rng + ?Sized>(n: usize, rng: &mut R) -> LaurentMatrix<F> {
    let d = unit_diagonal(n, rng);
    &d * &unitriangular(n, true, rng, |_, _| true)
}

/// Random element of the nilradical `u` of the parabolic of `lambda`.
pub fn nilradical<F: RandomScalar, R: Rng + ?Sized>(lambda: &Composition, rng: &mut R) -> LaurentMatrix<F> {
    LaurentMatrix::from_fn(lambda.n(), |i, j| {
        if lambda.block_of(i + 1) < lambda.block_of(j + 1) {
            constant(F::random(rng))
        } else {
            LaurentPoly::zero()
        }
    })
}

/// Constant element of the parabolic `P` of `lambda` with determinant one.
pub fn parabolic<F: RandomScalar, R: Rng + ?Sized>(lambda: &Composition, rng: &mut R) -> LaurentMatrix<F> {
    let n = lambda.n();
    let same = |i: usize, j: usize| lambda.block_of(i + 1) == lambda.block_of(j + 1);
    let d = unit_diagonal(n, rng);
    let l = unitriangular(n, false, rng, same);
    let u = unitriangular(n, true, rng, |_, _| true);
    &(&d * &l) * &u
}

/// `D x_{a_1}(c_1 t^{k_1}) ... x_{a_m}(c_m t^{k_m})`: `D` constant diagonal
/// of determinant one and `x_a(c t^k) = 1 + c t^k E_ij` for affine positive
/// roots, so `k >= 0` above the diagonal and `k >= 1` below it.
pub fn iwahori<F: RandomScalar, R: Rng + ?Sized>(n: usize, rng: &mut R) -> LaurentMatrix<F> {
    let mut acc = unit_diagonal(n, rng);
    if n < 2 {
        return acc;
    }
    for _ in 0..2 * n {
        let i = rng.random_range(0..n);
        let j = (i + rng.random_range(1..n)) % n;
        let k = rng.random_range(if i > j { 1 } else { 0 }..=2);
        let mut x = LaurentMatrix::identity(n);
        x.set(i, j, LaurentPoly::monomial(F::random(rng), k));
        acc = &acc * &x;
    }
    acc
}

/// Random window `sigma(i) - c_i n` with `sum c = 0` and `|c_i| <= bound`
/// for all but the balancing coordinate.
pub fn window<R: Rng + ?Sized>(n: usize, bound: i64, rng: &mut R) -> AffinePermutation {
    let mut perm: Vec<i64> = (1..=n as i64).collect();
    perm.shuffle(rng);
    let mut c: Vec<i64> = (0..n).map(|_| rng.random_range(-bound..=bound)).collect();
    let total: i64 = c.iter().sum();
    let fix = rng.random_range(0..n);
    c[fix] -= total;
    let nn = n as i64;
    AffinePermutation::new(perm.iter().zip(&c).map(|(s, ci)| s - ci * nn).collect()).expect("balanced shifts give an affine permutation")
}

/// Jordan form with blocks `mu`: `e_{k+1} -> e_k` inside each block.
pub fn jordan_form<F: Field>(mu: &[usize]) -> LaurentMatrix<F> {
    let n = mu.iter().sum();
    let mut m = LaurentMatrix::zero(n);
    let mut start = 0;
    for &b in mu {
        for k in 0..b.saturating_sub(1) {
            m.set(start + k, start + k + 1, LaurentPoly::one());
        }
        start += b;
    }
    m
}
