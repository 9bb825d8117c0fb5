//! The explicit elements attached to a composition `lambda`: `kappa`, the
//! Richardson element `Z`, `varpi` with its Iwahori witnesses, the finite
//! factors `w_g`, `w_p`, and the data describing the boundary divisors.
//!
//! Throughout `F^c_{a,b} = E_{f^c_a, f^c_b}` in tableau coordinates.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::laurent::LaurentPoly;
use crate::matrix::LaurentMatrix;
use crate::partitions::Composition;
use crate::tableau::TableauData;
use crate::weyl::{min_coset_rep, AffinePermutation, Bruhat, ParabolicSubset, RootIdx, Side};

fn set_f<F: Field>(m: &mut LaurentMatrix<F>, tab: &TableauData, c: usize, a: usize, b: usize, p: LaurentPoly<F>) {
    let (i, j) = (tab.f(c, a) - 1, tab.f(c, b) - 1);
    let cur = m.get(i, j) + &p;
    m.set(i, j, cur);
}

#[derive(Clone, Debug)]
pub struct KappaBundle {
    pub tableau: TableauData,
    pub kappa: AffinePermutation,
    /// `tau_q = diag(t^{nu_1 - 1}, ..., t^{nu_s - 1}, t^-1, ..., t^-1)`.
    pub tau_q: AffinePermutation,
    pub q: Vec<i64>,
    /// Finite part with `kappa = tau_q sigma`.
    pub sigma: AffinePermutation,
}

/// `kappa = sum_{i<=s} t^{nu_i - 1} E_{i, l(i)} + sum_i t^-1 E_{i+s, m(i)}`.
pub fn kappa(lambda: &Composition) -> KappaBundle {
    let tab = TableauData::build(lambda);
    kappa_from_tableau(tab)
}

pub fn kappa_from_tableau(tab: TableauData) -> KappaBundle {
    let n = tab.n();
    let s = tab.s;
    let nn = n as i64;
    let mut window = alloc::vec![0i64; n];
    let mut sigma = alloc::vec![0usize; n];
    let mut q = alloc::vec![-1i64; n];
    for i in 1..=s {
        let nu_i = tab.height(i) as i64;
        window[tab.l[i - 1] - 1] = i as i64 - (nu_i - 1) * nn;
        sigma[tab.l[i - 1] - 1] = i;
        q[i - 1] = nu_i - 1;
    }
    for (idx, &mi) in tab.m.iter().enumerate() {
        let i = idx + 1;
        window[mi - 1] = (i + s) as i64 + nn;
        sigma[mi - 1] = i + s;
    }
    let kappa = AffinePermutation::new(window).expect("kappa is an affine permutation");
    let tau_q = AffinePermutation::translation(&q).expect("q sums to zero");
    let sigma = AffinePermutation::from_permutation(&sigma).expect("sigma is a permutation");
    let bundle = KappaBundle { tableau: tab, kappa, tau_q, q, sigma };
    debug_assert_eq!(bundle.tau_q.compose(&bundle.sigma).unwrap(), bundle.kappa);
    bundle
}

impl KappaBundle {
    pub fn lambda(&self) -> &Composition {
        &self.tableau.lambda
    }

    /// `kappa = tau_q sigma` and `tau_q` is the minimal representative of
    /// `kappa W`.
    pub fn check(&self) -> Result<()> {
        if self.tau_q.compose(&self.sigma)? != self.kappa {
            return Err(Error::IdentityFailed("kappa = tau_q sigma"));
        }
        let s0 = ParabolicSubset::finite(self.kappa.n());
        if min_coset_rep(&self.kappa, &s0, Side::Right) != self.tau_q {
            return Err(Error::IdentityFailed("tau_q is the minimal representative of kappa W"));
        }
        Ok(())
    }
}

/// `Z = sum_c sum_{j < nu_c} F^c_{j, j+1}`, so `Z e_{f^c_j} = e_{f^c_{j-1}}`.
pub fn richardson_z<F: Field>(tab: &TableauData) -> LaurentMatrix<F> {
    let mut z = LaurentMatrix::zero(tab.n());
    for c in 1..=tab.s {
        for j in 1..tab.height(c) {
            set_f(&mut z, tab, c, j, j + 1, LaurentPoly::one());
        }
    }
    z
}

/// `1 - t^-1 X`.
pub fn unipotent_point<F: Field>(x: &LaurentMatrix<F>) -> LaurentMatrix<F> {
    &LaurentMatrix::identity(x.dim()) - &x.shift(-1)
}

#[derive(Clone, Debug)]
pub struct VarpiWitness<F: Field = Rational> {
    pub varpi: AffinePermutation,
    /// `sum_c (t^{nu_c - 1} F^c_{nu_c, 1} - sum_{j >= 2} t^-1 F^c_{j-1, j})`.
    pub lift: LaurentMatrix<F>,
    pub b: LaurentMatrix<F>,
    pub c: LaurentMatrix<F>,
}

/// `b = sum_c sum_{j <= k <= nu_c} t^{k-j} F^c_{k,j}`.
pub fn varpi_b<F: Field>(tab: &TableauData) -> LaurentMatrix<F> {
    let mut b = LaurentMatrix::zero(tab.n());
    for col in 1..=tab.s {
        let h = tab.height(col);
        for j in 1..=h {
            for k in j..=h {
                set_f(&mut b, tab, col, k, j, LaurentPoly::t_pow((k - j) as i64));
            }
        }
    }
    b
}

/// `c = sum_c (sum_j F^c_{j,j} + sum_{j >= 2} t^{j-1} F^c_{j,1})`.
pub fn varpi_c<F: Field>(tab: &TableauData) -> LaurentMatrix<F> {
    let mut c = LaurentMatrix::identity(tab.n());
    for col in 1..=tab.s {
        for j in 2..=tab.height(col) {
            set_f(&mut c, tab, col, j, 1, LaurentPoly::t_pow(j as i64 - 1));
        }
    }
    c
}

pub fn varpi_lift<F: Field>(tab: &TableauData) -> LaurentMatrix<F> {
    let mut m = LaurentMatrix::zero(tab.n());
    for col in 1..=tab.s {
        let h = tab.height(col);
        set_f(&mut m, tab, col, h, 1, LaurentPoly::t_pow(h as i64 - 1));
        for j in 2..=h {
            set_f(&mut m, tab, col, j - 1, j, -LaurentPoly::t_pow(-1));
        }
    }
    m
}

/// Builds `b`, `c`, and the lift of `varpi`, then checks
/// `b (1 - t^-1 Z) c = lift` exactly with `b`, `c` in the Iwahori subgroup.
pub fn varpi_witness<F: Field>(tab: &TableauData) -> Result<VarpiWitness<F>> {
    let z = richardson_z::<F>(tab);
    let b = varpi_b::<F>(tab);
    let c = varpi_c::<F>(tab);
    let lift = varpi_lift::<F>(tab);
    if !b.borel_membership().in_plus() || !c.borel_membership().in_plus() {
        return Err(Error::IdentityFailed("b and c lie in the Iwahori subgroup"));
    }
    let product = &(&b * &unipotent_point(&z)) * &c;
    if product != lift {
        return Err(Error::IdentityFailed("b (1 - t^-1 Z) c = varpi"));
    }
    let varpi = AffinePermutation::from_matrix(&lift)?;
    Ok(VarpiWitness { varpi, lift, b, c })
}

/// Finite permutations `w_g`, `w_p` with `varpi = w_g kappa w_p` and `w_p`
/// preserving every row:
/// `w_g(i) = f^i_{nu_i}`, `w_g(i + s) = iota(t(i))`,
/// `w_p(f^i_1) = l(i)`, `w_p(t(i)) = m(i)`.
pub fn decompose_varpi(bundle: &KappaBundle, varpi: &AffinePermutation) -> Result<(AffinePermutation, AffinePermutation)> {
    let tab = &bundle.tableau;
    let n = tab.n();
    let s = tab.s;
    let mut wg = alloc::vec![0usize; n];
    let mut wp = alloc::vec![0usize; n];
    for i in 1..=s {
        wg[i - 1] = tab.f(i, tab.height(i));
        wp[tab.f(i, 1) - 1] = tab.l[i - 1];
    }
    for (idx, (&ti, &mi)) in tab.t.iter().zip(&tab.m).enumerate() {
        wg[idx + s] = tab.iota(ti).expect("t(i) lies in S_2");
        wp[ti - 1] = mi;
    }
    let w_g = AffinePermutation::from_permutation(&wg)?;
    let w_p = AffinePermutation::from_permutation(&wp)?;
    if (1..=n).any(|x| tab.row_of(x) != tab.row_of(w_p.apply(x as i64) as usize)) {
        return Err(Error::IdentityFailed("w_p preserves the rows"));
    }
    if w_g.compose(&bundle.kappa)?.compose(&w_p)? != *varpi {
        return Err(Error::IdentityFailed("varpi = w_g kappa w_p"));
    }
    Ok((w_g, w_p))
}

/// A constant `a` with `det a = 1` such that `a (1 - t^-1 Z)` lies in
/// `B kappa P`: the permutation matrix of `w_g^-1`, its first column negated
/// when the permutation is odd. Since `varpi = w_g kappa w_p` with `w_p` in
/// `W_P`, the cell of `w_g^-1 (1 - t^-1 Z)` is `w_g^-1 varpi W_P = kappa W_P`.
pub fn kappa_point_witness<F: Field>(bundle: &KappaBundle) -> Result<LaurentMatrix<F>> {
    let witness = varpi_witness::<F>(&bundle.tableau)?;
    let (w_g, _) = decompose_varpi(bundle, &witness.varpi)?;
    let mut a: LaurentMatrix<F> = w_g.inverse().to_matrix();
    if permutation_sign(&w_g) < 0 {
        let row = (0..a.dim()).find(|&i| !a.get(i, 0).is_zero()).expect("permutation matrices have no zero column");
        let negated = -a.get(row, 0);
        a.set(row, 0, negated);
    }
    let point = &a * &unipotent_point(&richardson_z::<F>(&bundle.tableau));
    let cell = crate::cells::parabolic_cell(&point, &bundle.lambda().parabolic())?;
    if cell != bundle.kappa {
        return Err(Error::IdentityFailed("a (1 - t^-1 Z) lies in B kappa P"));
    }
    Ok(a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaReport {
    /// `kappa s_i > kappa` for every `s_i` in `S_P`.
    pub in_w_hat_p: bool,
    /// For every finite `s_i`: `s_i kappa < kappa`, or `s_i kappa` lies in
    /// the same coset `kappa W_P`.
    pub left_stable: bool,
    /// `(l(kappa), 2 dim G/P + sum_{k' < k} |Row(k)| |Blue(k')|)`.
    pub length_formula: (u64, u64),
    /// `l(kappa) = 2 dim G/P`.
    pub is_compactification: bool,
    /// Number of blocks `r`; `r = 2` is a maximal parabolic and `r = 1` is
    /// `P = G`, where `G/P` is a point and `kappa = e`.
    pub rows: usize,
}

impl KappaReport {
    pub fn maximal(&self) -> bool {
        self.rows == 2
    }

    /// All checks pass; the compactification criterion is only asserted for
    /// proper parabolics.
    pub fn all_hold(&self) -> bool {
        self.in_w_hat_p
            && self.left_stable
            && self.length_formula.0 == self.length_formula.1
            && (self.rows < 2 || self.is_compactification == self.maximal())
    }
}

/// `2 dim G/P + sum_{k' < k} |Row(k)| |Blue(k')|`.
pub fn kappa_length_formula(tab: &TableauData) -> u64 {
    let lambda = &tab.lambda;
    let mut correction = 0;
    for k in 1..=lambda.r() {
        for kp in 1..k {
            correction += lambda.part(k) * tab.blue[kp - 1].len();
        }
    }
    (2 * lambda.dim_flag_variety() + correction) as u64
}

pub fn check_kappa(bundle: &KappaBundle) -> KappaReport {
    let kappa = &bundle.kappa;
    let lambda = bundle.lambda();
    let sp = lambda.parabolic();
    let n = lambda.n();
    let in_w_hat_p = sp.iter().all(|i| !kappa.has_right_descent(i));
    let rep = min_coset_rep(kappa, &sp, Side::Right);
    let left_stable = (1..n).all(|i| {
        kappa.has_left_descent(i) || min_coset_rep(&kappa.mul_simple_left(i), &sp, Side::Right) == rep
    });
    let length = kappa.length();
    let twice_dim = 2 * lambda.dim_flag_variety() as u64;
    KappaReport {
        in_w_hat_p,
        left_stable,
        length_formula: (length, kappa_length_formula(&bundle.tableau)),
        is_compactification: length == twice_dim,
        rows: lambda.r(),
    }
}

/// Whether the finite positive root `(a, b)` is a root of the Levi of `J`.
fn in_levi(a: i64, b: i64, j: &ParabolicSubset) -> bool {
    (a..b).all(|x| j.contains(x as usize))
}

/// `{alpha in positive finite roots, alpha not in the Levi of J, w(alpha) > 0}`.
pub fn conormal_directions(w: &AffinePermutation, j: &ParabolicSubset) -> Result<BTreeSet<RootIdx>> {
    if !w.is_finite() {
        return Err(Error::InvalidWindow("conormal directions need a finite permutation"));
    }
    let n = w.n();
    let mut out = BTreeSet::new();
    for a in 1..=n as i64 {
        for b in a + 1..=n as i64 {
            if in_levi(a, b, j) {
                continue;
            }
            let alpha = RootIdx { i: a, j: b };
            if w.act_on_root(alpha).is_positive() {
                out.insert(alpha);
            }
        }
    }
    Ok(out)
}

/// The longest minimal representative: reverses the order of the blocks of
/// `lambda` while keeping each block increasing.
pub fn longest_min_rep(lambda: &Composition) -> AffinePermutation {
    let n = lambda.n();
    let mut perm = alloc::vec![0usize; n];
    for k in 1..=lambda.r() {
        for c in 1..=lambda.part(k) {
            perm[lambda.d(k - 1) + c - 1] = n - lambda.d(k) + c;
        }
    }
    AffinePermutation::from_permutation(&perm).expect("block reversal is a permutation")
}

#[derive(Clone, Debug)]
pub struct DivisorBundle<F: Field = Rational> {
    /// Divisor index, `1 <= i < r`.
    pub i: usize,
    /// `k = n - d_i`.
    pub k: usize,
    /// `w = s_k w_0^P`.
    pub w: AffinePermutation,
    /// Monomial lift of `w` with determinant one; the sign sits at
    /// `(k, d_{i-1} + 1)`.
    pub lift: LaurentMatrix<F>,
    pub sign: i64,
    /// `gamma = (d_{i-1} + 1, d_{i+1})`.
    pub gamma: RootIdx,
    /// `v_k = sum_j a_j E_{j, n+1-j}`, `a_k = t^-1`, `a_{k+1} = t`, else 1.
    pub v_k: AffinePermutation,
    pub v_k_min: AffinePermutation,
}

pub fn divisor_data<F: Field>(lambda: &Composition, i: usize) -> Result<DivisorBundle<F>> {
    let r = lambda.r();
    if i == 0 || i >= r {
        return Err(Error::BadDivisorIndex { index: i, rows: r });
    }
    let n = lambda.n();
    let k = n - lambda.d(i);
    let w0p = longest_min_rep(lambda);
    let w = w0p.mul_simple_left(k);
    let sign = permutation_sign(&w);
    let mut lift: LaurentMatrix<F> = w.to_matrix();
    let col = lambda.d(i - 1);
    lift.set(k - 1, col, LaurentPoly::from_i64(sign));
    let gamma = RootIdx { i: lambda.d(i - 1) as i64 + 1, j: lambda.d(i + 1) as i64 };

    let nn = n as i64;
    let kk = k as i64;
    let mut v = alloc::vec![0i64; n];
    for j in 1..=nn {
        v[(nn - j) as usize] = j;
    }
    v[(nn - kk) as usize] = kk + nn;
    v[(nn - kk - 1) as usize] = kk + 1 - nn;
    let v_k = AffinePermutation::new(v)?;
    let v_k_min = min_coset_rep(&v_k, &lambda.parabolic(), Side::Right);
    Ok(DivisorBundle { i, k, w, lift, sign, gamma, v_k, v_k_min })
}

fn permutation_sign(w: &AffinePermutation) -> i64 {
    let inv = w.window().iter().enumerate().flat_map(|(a, &x)| w.window()[a + 1..].iter().map(move |&y| x > y)).filter(|&b| b).count();
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

impl<F: Field> DivisorBundle<F> {
    /// Conormal directions of `w` are exactly `{gamma}`, `l(v_k^P) = dim G/P`,
    /// `det(lift) = 1`, and `v_k^P <= kappa`.
    pub fn check(&self, lambda: &Composition, kappa: &AffinePermutation, bruhat: &mut Bruhat) -> Result<()> {
        let dirs = conormal_directions(&self.w, &lambda.parabolic())?;
        if dirs.len() != 1 || !dirs.contains(&self.gamma) {
            return Err(Error::IdentityFailed("conormal directions of s_k w_0^P are {gamma}"));
        }
        if self.v_k_min.length() != lambda.dim_flag_variety() as u64 {
            return Err(Error::IdentityFailed("l(v_k^P) = dim G/P"));
        }
        if !self.lift.det().is_one() {
            return Err(Error::IdentityFailed("det of the lift of w is 1"));
        }
        if !bruhat.leq(&self.v_k_min, kappa)? {
            return Err(Error::IdentityFailed("v_k^P <= kappa"));
        }
        Ok(())
    }

    /// `E_gamma` as a constant matrix.
    pub fn e_gamma(&self, n: usize) -> LaurentMatrix<F> {
        LaurentMatrix::elementary(n, self.gamma.i as usize - 1, self.gamma.j as usize - 1, LaurentPoly::one())
    }

    /// Iwahori elements `(b_1, b_2, b_3)` with
    /// `b_1 = diag(.., e/a, e a, ..)` at `k, k+1`,
    /// `b_2 = 1 + (e t / a) E_{k+1, k}`, `b_3 = 1 + (t / a) E_{d_{i+1}, d_{i-1}+1}`,
    /// so that `b_1 b_2 lift (1 - a t^-1 E_gamma) b_3` is monomial.
    pub fn witnesses(&self, a: &F) -> Result<(LaurentMatrix<F>, LaurentMatrix<F>, LaurentMatrix<F>)> {
        let n = self.lift.dim();
        let inv_a = a.inv().ok_or(Error::NotAUnit)?;
        let e = F::from_i64(self.sign);
        let k = self.k;
        let mut b1 = LaurentMatrix::identity(n);
        b1.set(k - 1, k - 1, LaurentPoly::constant(e.mul(&inv_a)));
        b1.set(k, k, LaurentPoly::constant(e.mul(a)));
        let mut b2 = LaurentMatrix::identity(n);
        b2.set(k, k - 1, LaurentPoly::monomial(e.mul(&inv_a), 1));
        let mut b3 = LaurentMatrix::identity(n);
        b3.set(self.gamma.j as usize - 1, self.gamma.i as usize - 1, LaurentPoly::monomial(inv_a, 1));
        Ok((b1, b2, b3))
    }

    /// `lift (1 - a t^-1 E_gamma)`.
    pub fn point(&self, a: &F) -> LaurentMatrix<F> {
        let n = self.lift.dim();
        let x = self.e_gamma(n).scale(&LaurentPoly::constant(a.clone()));
        &self.lift * &unipotent_point(&x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = LaurentMatrix<Rational>;
    type P = LaurentPoly<Rational>;

    fn lam(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn w(v: &[i64]) -> AffinePermutation {
        AffinePermutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn kappa_small() {
        let k = kappa(&lam("1,1"));
        assert_eq!(k.kappa, w(&[-1, 4]));
        assert_eq!(k.kappa.length(), 2);
        k.check().unwrap();
        let k = kappa(&lam("2,1"));
        assert_eq!(k.kappa, w(&[-2, 2, 6]));
        assert_eq!(k.kappa.length(), 4);
        k.check().unwrap();
    }

    #[test]
    fn kappa_worked_example_length() {
        let k = kappa(&lam("1,4,4,2,6"));
        assert_eq!(k.kappa.length(), 272);
        assert_eq!(kappa_length_formula(&k.tableau), 272);
        k.check().unwrap();
    }

    #[test]
    fn richardson_small() {
        let z: M = richardson_z(&TableauData::build(&lam("1,1")));
        assert_eq!(z, M::from_int_rows(&[&[0, 1], &[0, 0]]));
        let z: M = richardson_z(&TableauData::build(&lam("2,1")));
        assert_eq!(z, M::from_int_rows(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]));
        let z: M = richardson_z(&TableauData::build(&lam("3")));
        assert!(z.is_zero());
    }

    #[test]
    fn varpi_small() {
        let tab = TableauData::build(&lam("1,1"));
        let wit = varpi_witness::<Rational>(&tab).unwrap();
        let lower = M::from_fn(2, |i, j| match (i, j) {
            (0, 0) | (1, 1) => P::one(),
            (1, 0) => P::t_pow(1),
            _ => P::zero(),
        });
        assert_eq!(wit.b, lower);
        assert_eq!(wit.c, lower);
        assert_eq!(wit.varpi, w(&[0, 3]));
        let tab = TableauData::build(&lam("2,1"));
        let wit = varpi_witness::<Rational>(&tab).unwrap();
        let mut expected = M::zero(3);
        expected.set(2, 0, P::t_pow(1));
        expected.set(0, 2, -P::t_pow(-1));
        expected.set(1, 1, P::one());
        assert_eq!(wit.lift, expected);
        let tab = TableauData::build(&lam("3"));
        let wit = varpi_witness::<Rational>(&tab).unwrap();
        assert!(wit.varpi.is_identity());
        assert!(wit.b.is_identity() && wit.c.is_identity());
    }

    #[test]
    fn printed_c_breaks_the_identity() {
        // c with t^{j-1} F_{j-1,1} in place of t^{j-1} F_{j,1}
        let tab = TableauData::build(&lam("1,1"));
        let mut c = M::identity(2);
        c.set(0, 0, P::from_int_terms(&[(0, 1), (1, 1)]));
        let z: M = richardson_z(&tab);
        let product = &(&varpi_b::<Rational>(&tab) * &unipotent_point(&z)) * &c;
        assert_ne!(product, varpi_lift::<Rational>(&tab));
    }

    #[test]
    fn varpi_factorisation() {
        let bundle = kappa(&lam("1,1"));
        let wit = varpi_witness::<Rational>(&bundle.tableau).unwrap();
        let (wg, wp) = decompose_varpi(&bundle, &wit.varpi).unwrap();
        assert_eq!(wg, w(&[2, 1]));
        assert!(wp.is_identity());
        let bundle = kappa(&lam("1,4,4,2,6"));
        let wit = varpi_witness::<Rational>(&bundle.tableau).unwrap();
        decompose_varpi(&bundle, &wit.varpi).unwrap();
    }

    #[test]
    fn kappa_reports() {
        let r = check_kappa(&kappa(&lam("1,1")));
        assert!(r.all_hold());
        assert_eq!(r.length_formula, (2, 2));
        assert!(r.is_compactification);
        let r = check_kappa(&kappa(&lam("1,1,1")));
        assert!(r.all_hold());
        assert_eq!(r.length_formula, (7, 7));
        assert!(!r.is_compactification);
        let r = check_kappa(&kappa(&lam("2,1")));
        assert_eq!(r.length_formula, (4, 4));
        assert!(r.is_compactification);
    }

    #[test]
    fn conormal_examples() {
        let sp = lam("1,1").parabolic();
        let e = AffinePermutation::identity(2);
        assert_eq!(conormal_directions(&e, &sp).unwrap().len(), 1);
        assert!(conormal_directions(&w(&[2, 1]), &sp).unwrap().is_empty());
        let sp = lam("2,1").parabolic();
        let dirs = conormal_directions(&w(&[1, 3, 2]), &sp).unwrap();
        assert_eq!(dirs.into_iter().collect::<Vec<_>>(), alloc::vec![RootIdx { i: 1, j: 3 }]);
    }

    #[test]
    fn divisor_small() {
        let lambda = lam("1,1");
        let d = divisor_data::<Rational>(&lambda, 1).unwrap();
        assert_eq!(d.k, 1);
        assert!(d.w.is_identity());
        assert_eq!(d.gamma, RootIdx { i: 1, j: 2 });
        assert_eq!(d.v_k, w(&[0, 3]));
        assert_eq!(d.v_k_min, d.v_k);
        assert_eq!(d.v_k_min.length(), 1);
        let lambda = lam("2,1");
        let d = divisor_data::<Rational>(&lambda, 1).unwrap();
        assert_eq!(d.gamma, RootIdx { i: 1, j: 3 });
        assert_eq!(d.v_k, w(&[3, -1, 4]));
        assert_eq!(d.v_k_min, w(&[-1, 3, 4]));
        assert_eq!(d.v_k_min.length(), 2);
        assert!(divisor_data::<Rational>(&lambda, 2).is_err());
        let bundle = kappa(&lambda);
        d.check(&lambda, &bundle.kappa, &mut Bruhat::new()).unwrap();
    }

    #[test]
    fn divisor_witnesses_reduce_to_monomial() {
        for s in ["1,1", "2,1", "1,2", "2,2", "1,1,1", "1,2,1"] {
            let lambda = lam(s);
            for i in 1..lambda.r() {
                let d = divisor_data::<Rational>(&lambda, i).unwrap();
                for a in [1, -3, 5] {
                    let a = Rational::from_i64(a);
                    let (b1, b2, b3) = d.witnesses(&a).unwrap();
                    for b in [&b1, &b2, &b3] {
                        assert!(b.borel_membership().in_plus());
                    }
                    let m = &(&(&b1 * &b2) * &d.point(&a)) * &b3;
                    let v = AffinePermutation::from_matrix(&m).unwrap();
                    assert_eq!(v, d.v_k_min, "lambda {s}, i {i}");
                }
            }
        }
    }

    #[test]
    fn kappa_point_witness_reaches_kappa() {
        for s in ["1,1", "2,1", "1,2", "2,1,2", "1,3,1", "3,2"] {
            let bundle = kappa(&lam(s));
            let a = kappa_point_witness::<Rational>(&bundle).unwrap();
            assert!(a.is_constant() && a.det().is_one(), "{s}");
        }
    }
}
