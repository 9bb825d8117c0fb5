use conormal_core::cells::*;
use conormal_core::constructions::{kappa, kappa_point_witness, richardson_z, unipotent_point};
use conormal_core::lattice::Lattice;
use conormal_core::partitions::Composition;
use conormal_core::tableau::TableauData;
use conormal_core::weyl::{AffinePermutation, Bruhat, ParabolicSubset};
use conormal_core::{LaurentMatrix, LaurentPoly, Order, Rational};
use proptest::prelude::*;

type M = LaurentMatrix<Rational>;
type P = LaurentPoly<Rational>;

/// `w(j) = min { i : M u_j in Lambda_i + M Lambda_{j-1} }` by Hermite
/// membership tests, scanning `i` down from a bound where membership is
/// automatic.
fn cell_by_hermite(m: &M) -> AffinePermutation {
    let n = m.dim();
    let nn = n as i64;
    let window = (1..=nn)
        .map(|j| {
            let image = chain_lattice::<Rational>(n, j - 1).apply(m).unwrap();
            let v = m.column(j as usize - 1);
            let top = v
                .iter()
                .enumerate()
                .filter_map(|(r, p)| match p.ord() {
                    Order::Finite(e) => Some(r as i64 + 1 - e * nn),
                    Order::Infinity => None,
                })
                .max()
                .unwrap();
            let mut i = top;
            while chain_lattice::<Rational>(n, i - 1).sum(&image).unwrap().contains_vector(&v) {
                i -= 1;
            }
            i
        })
        .collect();
    AffinePermutation::new(window).unwrap()
}

fn window(n: usize) -> impl Strategy<Value = AffinePermutation> {
    let perm = Just((1..=n as i64).collect::<Vec<_>>()).prop_shuffle();
    let shifts = prop::collection::vec(-2i64..=2, n);
    (perm, shifts).prop_map(move |(p, mut c)| {
        let total: i64 = c.iter().sum();
        c[0] -= total;
        AffinePermutation::new(p.iter().zip(&c).map(|(s, ci)| s - ci * n as i64).collect()).unwrap()
    })
}

/// `D x_{a_1}(c_1 t^{k_1}) ... x_{a_m}(c_m t^{k_m})` with affine positive root
/// elements: `k >= 0` above the diagonal and `k >= 1` below it.
fn iwahori(n: usize) -> impl Strategy<Value = M> {
    let factors = prop::collection::vec((0..n, 0..n, -3i64..=3, 0i64..=2), 0..=2 * n);
    let diag = prop::collection::vec(prop::sample::select(vec![-2i64, -1, 1, 2, 3]), n);
    (factors, diag).prop_map(move |(factors, diag)| {
        let mut d: Vec<P> = diag.iter().map(|&c| P::from_i64(c)).collect();
        let prod: Rational = diag[1..].iter().map(|&c| Rational::from_integer(c.into())).product();
        d[0] = P::constant(Rational::from_integer(1.into()) / prod);
        factors.into_iter().filter(|(i, j, _, _)| i != j).fold(M::diagonal(d), |acc, (i, j, c, k)| {
            let k = if i > j { k.max(1) } else { k };
            let mut x = M::identity(n);
            x.set(i, j, P::from_int_terms(&[(k, c)]));
            &acc * &x
        })
    })
}

fn unimodular(n: usize) -> impl Strategy<Value = M> {
    let steps = prop::collection::vec((0..n, 0..n, -2i64..=2, -2i64..=2), 1..=3 * n);
    (window(n), steps).prop_map(move |(w, steps)| {
        steps.into_iter().filter(|(i, j, _, _)| i != j).fold(w.to_matrix(), |acc, (i, j, c, k)| {
            let mut x = M::identity(n);
            x.set(i, j, P::from_int_terms(&[(k, c)]));
            &acc * &x
        })
    })
}

fn sized<T: std::fmt::Debug, S: Strategy<Value = T>>(f: impl Fn(usize) -> S) -> impl Strategy<Value = T> {
    (2usize..=4).prop_flat_map(f)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cells_agree_with_hermite_membership(m in sized(unimodular)) {
        prop_assert_eq!(iwahori_cell(&m).unwrap(), cell_by_hermite(&m));
    }

    #[test]
    fn cells_are_invariant_under_the_iwahori_subgroup(
        (w, b1, b2) in sized(|n| (window(n), iwahori(n), iwahori(n))),
    ) {
        prop_assert!(b1.borel_membership().in_plus() && b2.borel_membership().in_plus());
        let m = &(&b1 * &w.to_matrix::<Rational>()) * &b2;
        prop_assert_eq!(iwahori_cell(&m).unwrap(), w);
    }

    #[test]
    fn psi_is_equivariant(
        lambda in (1usize..=5).prop_flat_map(|n| prop::sample::select(Composition::all(n))),
        seed in prop::collection::vec(-3i64..=3, 1..30),
    ) {
        let g = constant_sl(lambda.n(), &seed);
        let z: M = richardson_z(&TableauData::build(&lambda));
        let x = &(&g * &z) * &g.invert().unwrap();
        let (_, lat) = psi(&x).unwrap();
        let (_, base) = psi(&z).unwrap();
        prop_assert_eq!(lat, base.apply(&g).unwrap());
    }
}

/// Constant `g` with det 1 from small integer unitriangular factors.
fn constant_sl(n: usize, seed: &[i64]) -> M {
    let mut it = seed.iter().cycle();
    let l = M::from_fn(n, |i, j| if i == j { P::one() } else if i > j { P::from_i64(*it.next().unwrap()) } else { P::zero() });
    let u = M::from_fn(n, |i, j| if i == j { P::one() } else if i < j { P::from_i64(*it.next().unwrap()) } else { P::zero() });
    &l * &u
}

/// Random nilradical element with entries from `seed`.
fn nilradical(lambda: &Composition, seed: &[i64]) -> M {
    let mut it = seed.iter().cycle();
    M::from_fn(lambda.n(), |i, j| {
        if lambda.block_of(i + 1) < lambda.block_of(j + 1) {
            P::from_i64(*it.next().unwrap())
        } else {
            P::zero()
        }
    })
}

/// Constant element of the parabolic `P`: block upper triangular, det 1.
fn parabolic_element(lambda: &Composition, seed: &[i64]) -> M {
    let n = lambda.n();
    let mut it = seed.iter().cycle();
    let same = |i: usize, j: usize| lambda.block_of(i + 1) == lambda.block_of(j + 1);
    let mut entry = |i: usize, j: usize, keep: bool| match () {
        _ if i == j => P::one(),
        _ if keep && same(i, j) => P::from_i64(*it.next().unwrap()),
        _ => P::zero(),
    };
    let lower = M::from_fn(n, |i, j| entry(i, j, i > j));
    let upper = M::from_fn(n, |i, j| entry(i, j, i < j));
    let levi = &lower * &upper;
    let mut it = seed.iter().rev().cycle();
    let u = M::from_fn(n, |i, j| {
        if i == j {
            P::one()
        } else if lambda.block_of(i + 1) < lambda.block_of(j + 1) {
            P::from_i64(*it.next().unwrap())
        } else {
            P::zero()
        }
    });
    &levi * &u
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn phi_flags_satisfy_the_flag_invariants_and_are_p_equivariant(
        n in 1usize..=4,
        pick in any::<prop::sample::Index>(),
        seed in prop::collection::vec(-3i64..=3, 1..24),
        seed2 in prop::collection::vec(-2i64..=2, 1..24),
    ) {
        let all = Composition::all(n);
        let lambda = pick.get(&all).clone();
        let g = constant_sl(n, &seed);
        let x = nilradical(&lambda, &seed2);
        let img = phi_p(&g, &x, &lambda).unwrap();
        img.flag.check(&lambda).unwrap();
        let r = lambda.r();
        prop_assert_eq!(img.flag.lattices[r].shift(1), img.flag.lattices[0].clone());
        prop_assert_eq!(img.flag.lattices[0].vdim(), 0);
        let p = parabolic_element(&lambda, &seed2);
        let p_inv = p.invert().unwrap();
        let moved = phi_p(&(&g * &p), &(&(&p_inv * &x) * &p), &lambda).unwrap();
        prop_assert_eq!(moved.flag, img.flag);
    }
}

#[test]
fn explicit_witness_reaches_kappa_and_random_points_stay_below() {
    let mut bruhat = Bruhat::new();
    for n in 1..=4 {
        for lambda in Composition::all(n) {
            let bundle = kappa(&lambda);
            let a: M = kappa_point_witness(&bundle).unwrap();
            let z: M = richardson_z(&bundle.tableau);
            let img = phi_p(&a, &z, &lambda).unwrap();
            assert_eq!(parabolic_cell(&img.point, &lambda.parabolic()).unwrap(), bundle.kappa, "{lambda}");
            for s in 0..6i64 {
                let seed = [s - 2, 1, -1, s, 2, -3, 1];
                let g = constant_sl(n, &seed);
                let x = nilradical(&lambda, &[1, s, -2, 3]);
                let img = phi_p(&g, &x, &lambda).unwrap();
                let cell = parabolic_cell(&img.point, &lambda.parabolic()).unwrap();
                assert!(bruhat.leq(&cell, &bundle.kappa).unwrap(), "{lambda}: {cell}");
            }
        }
    }
}

#[test]
fn unipotent_points_of_richardson_elements_lie_in_varpi_cells() {
    for n in 1..=5 {
        for lambda in Composition::all(n) {
            let tab = TableauData::build(&lambda);
            let wit = conormal_core::constructions::varpi_witness::<Rational>(&tab).unwrap();
            let z: M = richardson_z(&tab);
            assert_eq!(iwahori_cell(&unipotent_point(&z)).unwrap(), wit.varpi, "{lambda}");
        }
    }
}

#[test]
fn beta_of_mirkovic_vybornov_flag_matches_phi() {
    for n in 2..=5 {
        for d in 1..n {
            let lambda = Composition::new(vec![d, n - d]).unwrap();
            for s in 0..4i64 {
                let g = constant_sl(n, &[s, -1, 2, 1 - s, 3]);
                let x = nilradical(&lambda, &[2, -s, 1]);
                let conj = &(&g * &x) * &g.invert().unwrap();
                let flag = beta(&mv_embed(&conj, &g, &lambda).unwrap(), &lambda).unwrap();
                assert_eq!(flag, phi_p(&g, &x, &lambda).unwrap().flag, "{lambda}");
            }
        }
    }
}

#[test]
fn lattice_dimensions() {
    let e = Lattice::<Rational>::standard(3);
    for i in -4..=4 {
        let l = chain_lattice::<Rational>(3, i);
        assert_eq!(l.vdim(), i - 3);
        assert_eq!(Lattice::quotient_dim(&l, &chain_lattice(3, i - 1)).unwrap(), 1);
    }
    let s0 = ParabolicSubset::finite(3);
    assert!(parabolic_cell(&M::identity(3), &s0).unwrap().is_identity());
    assert_eq!(Lattice::quotient_dim(&e, &e.shift(2)).unwrap(), 6);
}
