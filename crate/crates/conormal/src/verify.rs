//! Verification suites.
//!
//! Every check is an exact identity evaluated on exhaustive families (all
//! compositions, all partitions, whole length balls) or on seeded random
//! samples. Results are tallied per named check; failures keep the input
//! that produced them. Work fans out across compositions with rayon, and
//! every task draws from its own ChaCha stream derived from the seed and the
//! task index, so reports do not depend on scheduling.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;
use std::time::Instant;

use conormal_core::cells::{beta, iwahori_cell, mv_embed, parabolic_cell, phi_p, psi, PhiImage};
use conormal_core::constructions::*;
use conormal_core::lattice::Lattice;
use conormal_core::partitions::{jordan_type, Composition, Partition};
use conormal_core::tableau::TableauData;
use conormal_core::weyl::*;
use conormal_core::{Field, LaurentMatrix, Order, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::sample::{self, Fp, RandomScalar};

/// The library operations `verify --suite all` must exercise.
pub const OPERATIONS: &[&str] = &[
    "ord",
    "det",
    "invert",
    "borel_membership",
    "from_matrix",
    "compose",
    "length",
    "length_oracle",
    "bruhat_leq",
    "min_coset_rep",
    "decompose_translation",
    "reflection",
    "act_on_root",
    "quad_minimum",
    "conjugate",
    "dominance_leq",
    "jordan_type",
    "build",
    "kappa",
    "richardson_z",
    "varpi_witness",
    "decompose_varpi",
    "check_kappa",
    "conormal_directions",
    "divisor_data",
    "vdim",
    "quotient_dim",
    "phi_p",
    "psi",
    "iwahori_cell",
    "parabolic_cell",
    "mv_embed",
    "beta",
];

/// Failing inputs kept per check; the count still includes every failure.
const WITNESS_CAP: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Lengths,
    Bruhat,
    Kappa,
    Varpi,
    Divisors,
    Embeddings,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [Suite::Lengths, Suite::Bruhat, Suite::Varpi, Suite::Kappa, Suite::Divisors, Suite::Embeddings];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lengths => "lengths",
            Suite::Bruhat => "bruhat",
            Suite::Kappa => "kappa",
            Suite::Varpi => "varpi",
            Suite::Divisors => "divisors",
            Suite::Embeddings => "embeddings",
            Suite::All => "all",
        }
    }

    /// Largest `n` the suite visits for a requested `nmax`; the ball and
    /// random-point sweeps grow too fast to follow `nmax` unboundedly.
    pub fn n_cap(self, nmax: usize) -> usize {
        match self {
            Suite::Divisors => nmax.min(6),
            Suite::Embeddings => nmax.min(5),
            _ => nmax,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Count {
    pub passed: u64,
    pub failed: u64,
}

impl Count {
    pub fn total(self) -> u64 {
        self.passed + self.failed
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    pub input: String,
    pub detail: String,
}

/// Per-check pass/fail counts, failing witnesses, and the operations touched.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    pub checks: BTreeMap<String, Count>,
    pub witnesses: Vec<Witness>,
    pub ops: BTreeSet<&'static str>,
    lambda: Option<String>,
}

impl Tally {
    pub fn new() -> Self {
        Tally::default()
    }

    /// A tally whose witnesses are labelled with `lambda`.
    pub fn for_lambda(lambda: &Composition) -> Self {
        Tally { lambda: Some(lambda.to_string()), ..Tally::default() }
    }

    pub fn op(&mut self, name: &'static str) {
        debug_assert!(OPERATIONS.contains(&name), "unknown operation {name}");
        self.ops.insert(name);
    }

    fn record(&mut self, name: &str, failure: Option<(String, String)>) {
        let count = self.checks.entry(name.to_string()).or_default();
        match failure {
            None => count.passed += 1,
            Some((input, detail)) => {
                count.failed += 1;
                if self.witnesses.iter().filter(|w| w.check == name).count() < WITNESS_CAP {
                    self.witnesses.push(Witness { check: name.to_string(), lambda: self.lambda.clone(), input, detail });
                }
            }
        }
    }

    /// Records `ok`; `input` describes the case and is only built on failure.
    pub fn check(&mut self, name: &str, ok: bool, input: impl FnOnce() -> String) -> bool {
        self.record(name, (!ok).then(|| (input(), "identity does not hold".to_string())));
        ok
    }

    /// Records an `Ok` as a pass and an `Err` as a failure carrying the error.
    pub fn check_ok<T, E: Display>(&mut self, name: &str, r: Result<T, E>, input: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => {
                self.record(name, None);
                Some(v)
            }
            Err(e) => {
                self.record(name, Some((input(), e.to_string())));
                None
            }
        }
    }

    pub fn merge(&mut self, other: Tally) {
        for (name, c) in other.checks {
            let mine = self.checks.entry(name).or_default();
            mine.passed += c.passed;
            mine.failed += c.failed;
        }
        for w in other.witnesses {
            if self.witnesses.iter().filter(|x| x.check == w.check).count() < WITNESS_CAP {
                self.witnesses.push(w);
            }
        }
        self.ops.extend(other.ops);
    }

    pub fn count(&self, name: &str) -> Count {
        self.checks.get(name).copied().unwrap_or_default()
    }

    pub fn failures(&self) -> u64 {
        self.checks.values().map(|c| c.failed).sum()
    }

    pub fn total(&self) -> u64 {
        self.checks.values().map(|c| c.total()).sum()
    }
}

/// Sample sizes and the seed shared by all suites.
#[derive(Clone, Debug)]
pub struct Config {
    pub nmax: usize,
    pub seed: u64,
    pub random_windows: usize,
    pub phi_samples: usize,
    pub beta_samples: usize,
    pub psi_conjugates: usize,
    pub divisor_samples: usize,
    pub cell_windows: usize,
    pub cell_pairs: usize,
}

impl Config {
    pub fn new(nmax: usize, seed: u64) -> Self {
        Config {
            nmax,
            seed,
            random_windows: 200,
            phi_samples: 50,
            beta_samples: 20,
            psi_conjugates: 10,
            divisor_samples: 10,
            cell_windows: 10,
            cell_pairs: 20,
        }
    }
}

/// The RNG for task `index` of the sweep tagged `tag`.
pub fn task_rng(seed: u64, tag: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((tag << 32) | index as u64);
    rng
}

/// Runs `f` on every item in parallel and merges the tallies in item order.
pub fn sweep<T: Sync>(items: &[T], seed: u64, tag: u64, label: impl Fn(&T) -> Tally + Sync, f: impl Fn(&T, &mut Tally, &mut ChaCha8Rng) + Sync) -> Tally {
    items
        .par_iter()
        .enumerate()
        .map(|(index, item)| {
            let mut tally = label(item);
            f(item, &mut tally, &mut task_rng(seed, tag, index));
            tally
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::new(), |mut acc, t| {
            acc.merge(t);
            acc
        })
}

/// `sweep` over all compositions of `nmin..=nmax`.
pub fn over_compositions(nmin: usize, nmax: usize, seed: u64, tag: u64, f: impl Fn(&Composition, &mut Tally, &mut ChaCha8Rng) + Sync) -> Tally {
    let lambdas: Vec<Composition> = (nmin..=nmax).flat_map(Composition::all).collect();
    sweep(&lambdas, seed, tag, Tally::for_lambda, f)
}

/// `sweep` over plain items without a composition label.
pub fn over_items<T: Sync>(items: &[T], seed: u64, tag: u64, f: impl Fn(&T, &mut Tally, &mut ChaCha8Rng) + Sync) -> Tally {
    sweep(items, seed, tag, |_| Tally::new(), f)
}

// Stream tags, one per randomized sweep.
const TAG_WINDOWS: u64 = 1;
const TAG_DIVISORS: u64 = 2;
const TAG_PHI: u64 = 3;
const TAG_BETA: u64 = 4;
const TAG_PSI: u64 = 5;
const TAG_CELLS: u64 = 6;

fn window_str(w: &AffinePermutation) -> String {
    w.to_string()
}

// ---------------------------------------------------------------------------
// Affine Weyl group

/// `length = length_oracle` on the whole ball of length `<= max_len`.
pub fn check_length_ball(n: usize, max_len: u64, t: &mut Tally) {
    t.op("length");
    t.op("length_oracle");
    for w in length_ball(n, max_len) {
        t.check("length = inversion count (balls)", w.length() == w.length_oracle(), || window_str(&w));
    }
}

/// Length, composition, matrix round trip, translation decomposition and
/// root action on random windows.
pub fn check_random_windows(n: usize, count: usize, rng: &mut impl Rng, t: &mut Tally) {
    for op in ["length", "length_oracle", "compose", "from_matrix", "ord", "det", "decompose_translation", "act_on_root", "reflection"] {
        t.op(op);
    }
    for _ in 0..count {
        let w = sample::window(n, 4, rng);
        let input = || window_str(&w);
        t.check("length = inversion count (random)", w.length() == w.length_oracle(), input);
        let round = w.compose(&w.inverse()).map(|e| e.is_identity()).unwrap_or(false);
        t.check("w w^-1 = e", round, input);
        let m: LaurentMatrix<Fp> = w.to_matrix();
        let ord_det = m.det().ord();
        t.check("ord det of a monomial lift = 0", ord_det == Order::Finite(0), input);
        t.check("window from its matrix", AffinePermutation::from_matrix(&m).ok().as_ref() == Some(&w), input);
        let (sigma, q) = w.decompose_translation();
        let recomposed = AffinePermutation::translation(&q).and_then(|tau| sigma.compose(&tau));
        t.check("w = sigma tau_q", sigma.is_finite() && recomposed.ok().as_ref() == Some(&w), input);
        for a in 1..=n as i64 {
            for b in a + 1..=n as i64 {
                let Ok(s) = AffinePermutation::reflection(n, a, b) else {
                    t.check("reflection (a, b)", false, || format!("{n}: ({a}, {b})"));
                    continue;
                };
                let alpha = RootIdx { i: a, j: b };
                let longer = w.compose(&s).map(|ws| ws.length() > w.length()).unwrap_or(false);
                t.check("w(alpha) > 0 iff l(w s_alpha) > l(w)", w.act_on_root(alpha).is_positive() == longer, input);
            }
        }
    }
}

/// Recursive Bruhat order against subwords of a reduced word, all pairs.
pub fn check_bruhat_ball(n: usize, max_len: u64, t: &mut Tally) {
    t.op("bruhat_leq");
    let ball = length_ball(n, max_len);
    let mut bruhat = Bruhat::new();
    for w in &ball {
        let below = lower_interval_by_subwords(w);
        for v in &ball {
            let got = bruhat.leq(v, w);
            t.check("bruhat order = subword order", got.ok() == Some(below.contains(v)), || format!("{v} <= {w}"));
        }
    }
}

/// `quad_minimum` on every `w` of the ball and every `1 <= a < b <= n`; the
/// case, the minimum and every relation in the chains are confirmed against
/// subword intervals.
pub fn check_quad_ball(n: usize, max_len: u64, t: &mut Tally) {
    t.op("quad_minimum");
    let mut bruhat = Bruhat::new();
    for w in length_ball(n, max_len) {
        let (_, c) = w.decompose_translation();
        for a in 1..n {
            for b in a + 1..=n {
                let input = || format!("{w}, (a, b) = ({a}, {b})");
                let Some(q) = t.check_ok("quad minimum computed", quad_minimum(&w, a, b, &mut bruhat), input) else {
                    continue;
                };
                let lw = q.s_left.compose(&w).unwrap();
                let wr = w.compose(&q.s_right).unwrap();
                let lwr = lw.compose(&q.s_right).unwrap();
                let orbit: BTreeSet<AffinePermutation> = [w.clone(), lw, wr, lwr].into_iter().collect();
                let expected_case = if c[a - 1] == c[b - 1] { QuadCase::Equal } else { QuadCase::Distinct };
                let size = if expected_case == QuadCase::Equal { 2 } else { 4 };
                t.check("quad case classification", q.case == expected_case && orbit.len() == size, input);
                let min_ok = orbit.iter().all(|x| lower_interval_by_subwords(x).contains(&q.min));
                t.check("quad minimum below the orbit", min_ok, input);
                let chains = q.relations.iter().all(|(lo, hi)| lo != hi && lower_interval_by_subwords(hi).contains(lo));
                let full = match q.case {
                    QuadCase::Equal => q.relations.len() == 1,
                    QuadCase::Distinct => q.relations.len() == 4,
                };
                t.check("quad relation chains", chains && full, input);
            }
        }
    }
}

/// `w = w^J w_J` with additive lengths for every proper `J` and both sides.
pub fn check_cosets(n: usize, max_len: u64, t: &mut Tally) {
    t.op("min_coset_rep");
    let ball = length_ball(n, max_len);
    for mask in 0u32..(1 << n) - 1 {
        let j = ParabolicSubset::new(n, (0..n).filter(|i| mask & (1 << i) != 0)).expect("indices below n");
        for w in &ball {
            for side in [Side::Left, Side::Right] {
                let min = min_coset_rep(w, &j, side);
                let (min2, rest) = coset_decomposition(w, &j, side);
                let product = match side {
                    Side::Right => min.compose(&rest),
                    Side::Left => rest.compose(&min),
                };
                let minimal = j.iter().all(|i| {
                    let longer = match side {
                        Side::Right => min.mul_simple_right(i),
                        Side::Left => min.mul_simple_left(i),
                    };
                    longer.length() > min.length()
                });
                let ok = min == min2
                    && j.contains_element(&rest)
                    && product.ok().as_ref() == Some(w)
                    && w.length() == min.length() + rest.length()
                    && minimal;
                t.check("coset decomposition", ok, || format!("{w}, J = {:?}, {side:?}", j.iter().collect::<Vec<_>>()));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Partitions and tableaux

/// Conjugation is an involution and reverses dominance, for all partitions of `n`.
pub fn check_partitions(n: usize, t: &mut Tally) {
    t.op("conjugate");
    t.op("dominance_leq");
    let all = Partition::all(n);
    for a in &all {
        t.check("conjugation is an involution", a.conjugate().conjugate() == *a, || a.to_string());
        for b in &all {
            let ok = match (a.dominance_leq(b), b.conjugate().dominance_leq(&a.conjugate())) {
                (Ok(x), Ok(y)) => x == y,
                _ => false,
            };
            t.check("conjugation reverses dominance", ok, || format!("{a}, {b}"));
        }
    }
}

/// Tableau invariants and the Jordan type of the Richardson element.
pub fn check_tableau(lambda: &Composition, t: &mut Tally) {
    t.op("build");
    t.op("richardson_z");
    t.op("jordan_type");
    let tab = TableauData::build(lambda);
    t.check_ok("tableau invariants", tab.check_invariants(), || lambda.to_string());
    // nu_i = #{k : lambda_k >= i}, computed from the parts directly
    let max = lambda.parts().iter().copied().max().unwrap_or(0);
    let nu: Vec<usize> = (1..=max).map(|i| lambda.parts().iter().filter(|&&p| p >= i).count()).collect();
    t.check("column heights = nu", tab.nu.parts() == nu.as_slice(), || lambda.to_string());
    let z: LaurentMatrix<Rational> = richardson_z(&tab);
    let ok = jordan_type(&z).map(|mu| mu.parts() == nu.as_slice()).unwrap_or(false);
    t.check("Jordan type of Z = nu", ok && conormal_core::cells::in_nilradical(&z, lambda), || lambda.to_string());
}

// ---------------------------------------------------------------------------
// Constructions

/// `b (1 - t^-1 Z) c = lift of varpi` exactly over the rationals, with `b`,
/// `c` in the Iwahori subgroup, and the cell of `1 - t^-1 Z` equal to `varpi`.
pub fn check_varpi(lambda: &Composition, t: &mut Tally) {
    for op in ["varpi_witness", "borel_membership", "det", "ord", "from_matrix", "iwahori_cell"] {
        t.op(op);
    }
    let tab = TableauData::build(lambda);
    let input = || lambda.to_string();
    let Some(wit) = t.check_ok("b (1 - t^-1 Z) c = lift of varpi", varpi_witness::<Rational>(&tab), input) else {
        return;
    };
    t.check("b, c in the Iwahori subgroup", wit.b.borel_membership().in_plus() && wit.c.borel_membership().in_plus(), input);
    let det_ok = matches!(wit.lift.det().as_unit(), Some((_, 0)));
    let perm_ok = AffinePermutation::from_matrix(&wit.lift).ok().as_ref() == Some(&wit.varpi);
    t.check("lift of varpi is monomial with ord det 0", det_ok && perm_ok, input);
    let z: LaurentMatrix<Rational> = richardson_z(&tab);
    let cell = iwahori_cell(&unipotent_point(&z));
    t.check("cell of 1 - t^-1 Z = varpi", cell.ok().as_ref() == Some(&wit.varpi), input);
}

/// `varpi = w_g kappa w_p`, the descent report, `kappa` in `W^P`, the length
/// formula from two independent computations, and `l(kappa) = 2 dim G/P`
/// iff `r = 2`.
pub fn check_kappa_identities(lambda: &Composition, t: &mut Tally) {
    for op in ["kappa", "varpi_witness", "decompose_varpi", "check_kappa", "compose"] {
        t.op(op);
    }
    let input = || lambda.to_string();
    let bundle = kappa(lambda);
    t.check_ok("kappa bundle consistency", bundle.check(), input);
    if let Some(wit) = t.check_ok("varpi computed", varpi_witness::<Fp>(&bundle.tableau), input) {
        if let Some((w_g, w_p)) = t.check_ok("varpi = w_g kappa w_p", decompose_varpi(&bundle, &wit.varpi), input) {
            let recomposed = w_g.compose(&bundle.kappa).and_then(|x| x.compose(&w_p));
            let ok = w_g.is_finite() && lambda.parabolic().contains_element(&w_p) && recomposed.ok().as_ref() == Some(&wit.varpi);
            t.check("w_g finite, w_p in W_P", ok, input);
        }
    }
    let report = check_kappa(&bundle);
    t.check("kappa in W^P", report.in_w_hat_p, input);
    t.check("left stability descents", report.left_stable, input);
    t.check("length(kappa) = length formula", report.length_formula.0 == report.length_formula.1, input);
    // sum over k' < k of |Row(k)| |Blue(k')|, from the parts alone
    let parts = lambda.parts();
    let mut running_max = 0;
    let mut blue = Vec::with_capacity(parts.len());
    for &p in parts {
        blue.push(p.min(running_max));
        running_max = running_max.max(p);
    }
    let correction: usize = (0..parts.len()).map(|k| parts[k] * blue[..k].iter().sum::<usize>()).sum();
    let dim = lambda.dim_flag_variety();
    t.check("length(kappa) by inversions = 2 dim G/P + row/blue correction", bundle.kappa.length_oracle() == (2 * dim + correction) as u64, input);
    if lambda.r() >= 2 {
        let equal = bundle.kappa.length() == 2 * dim as u64;
        t.check("l(kappa) = 2 dim G/P iff r = 2", equal == (lambda.r() == 2) && report.is_compactification == equal, input);
    }
}

/// `tau_q = min_coset_rep(kappa, S_0, Right)`, `tau_q` is the translation
/// by `q`, and `l(tau_q) = 2 dim G/P`.
pub fn check_tau_q(lambda: &Composition, t: &mut Tally) {
    t.op("min_coset_rep");
    t.op("decompose_translation");
    let input = || lambda.to_string();
    let bundle = kappa(lambda);
    let s0 = ParabolicSubset::finite(lambda.n());
    t.check("tau_q = min rep of kappa W", min_coset_rep(&bundle.kappa, &s0, Side::Right) == bundle.tau_q, input);
    let (_, q) = bundle.tau_q.decompose_translation();
    let translation = AffinePermutation::translation(&bundle.q);
    t.check("tau_q is the translation by q", q == bundle.q && translation.ok().as_ref() == Some(&bundle.tau_q), input);
    t.check("l(tau_q) = 2 dim G/P", bundle.tau_q.length() == 2 * lambda.dim_flag_variety() as u64, input);
}

// ---------------------------------------------------------------------------
// Cells and embeddings

/// Flag invariants of a `phi_P` image, checked independently of
/// `AffineFlag::check`: `t L_r = L_0`, steps `lambda_i`, `vdim L_0 = 0`.
pub fn check_flag<F: Field>(img: &PhiImage<F>, lambda: &Composition, t: &mut Tally, input: impl Fn() -> String) {
    t.op("vdim");
    t.op("quotient_dim");
    let l = &img.flag.lattices;
    let r = lambda.r();
    let closes = l.len() == r + 1 && l[r].shift(1) == l[0];
    let steps = closes && (1..=r).all(|i| Lattice::quotient_dim(&l[i], &l[i - 1]).ok() == Some(lambda.part(i) as u64));
    let vdim = closes && l[0].vdim() == 0;
    t.check("flag invariants", closes && steps && vdim, input);
}

/// Divisor data for every index, and `phi_P(b w, a E_gamma)` on random
/// `b` in `B`, `a != 0`: the cell is `v_k^P`, and the explicit Iwahori
/// witnesses reduce the point to the monomial matrix of `v_k^P`.
pub fn check_divisors(lambda: &Composition, samples: usize, rng: &mut impl Rng, t: &mut Tally) {
    for op in ["divisor_data", "conormal_directions", "phi_p", "parabolic_cell", "borel_membership", "from_matrix", "bruhat_leq"] {
        t.op(op);
    }
    let n = lambda.n();
    let bundle = kappa(lambda);
    let sp = lambda.parabolic();
    let mut bruhat = Bruhat::new();
    for i in 1..lambda.r() {
        let input = || format!("i = {i}");
        let Some(d) = t.check_ok("divisor data computed", divisor_data::<Fp>(lambda, i), input) else {
            continue;
        };
        t.check_ok("divisor identities (directions, length, det, v_k^P <= kappa)", d.check(lambda, &bundle.kappa, &mut bruhat), input);
        let dirs = conormal_directions(&d.w, &sp);
        t.check("conormal directions = {gamma}", dirs.ok() == Some(BTreeSet::from([d.gamma])), input);
        for _ in 0..samples {
            let b: LaurentMatrix<Fp> = sample::borel_constant(n, rng);
            let a = Fp::random_nonzero(rng);
            let input = || format!("i = {i}, a = {a}, b = {b}");
            let g = &b * &d.lift;
            let x = d.e_gamma(n).scale(&conormal_core::LaurentPoly::constant(a));
            let Some(img) = t.check_ok("phi_P defined", phi_p(&g, &x, lambda), input) else {
                continue;
            };
            check_flag(&img, lambda, t, input);
            let cell = parabolic_cell(&img.point, &sp);
            t.check("cell of phi_P(b w, a E_gamma) = v_k^P", cell.ok().as_ref() == Some(&d.v_k_min), input);
            if let Some((b1, b2, b3)) = t.check_ok("divisor witnesses", d.witnesses(&a), input) {
                let in_b = [&b1, &b2, &b3].iter().all(|m| m.borel_membership().in_plus());
                let reduced = &(&(&b1 * &b2) * &d.point(&a)) * &b3;
                let monomial = AffinePermutation::from_matrix(&reduced);
                t.check("witnesses reduce the point to v_k^P", in_b && monomial.ok().as_ref() == Some(&d.v_k_min), input);
            }
        }
    }
}

/// The cell of `phi_P(a, Z)` at the explicit witness is `kappa`; on random
/// `(g, X)` the cell lies below `kappa`, the flag invariants hold, and the
/// flag is unchanged by `(g, X) -> (g p, p^-1 X p)`.
pub fn check_phi(lambda: &Composition, samples: usize, rng: &mut impl Rng, t: &mut Tally) {
    for op in ["phi_p", "parabolic_cell", "bruhat_leq", "invert", "richardson_z"] {
        t.op(op);
    }
    let input = || lambda.to_string();
    let bundle = kappa(lambda);
    let sp = lambda.parabolic();
    if let Some(a) = t.check_ok("kappa point witness", kappa_point_witness::<Rational>(&bundle), input) {
        let z: LaurentMatrix<Rational> = richardson_z(&bundle.tableau);
        if let Some(img) = t.check_ok("phi_P defined", phi_p(&a, &z, lambda), input) {
            check_flag(&img, lambda, t, input);
            let cell = parabolic_cell(&img.point, &sp);
            t.check("cell of phi_P(a, Z) = kappa", cell.ok().as_ref() == Some(&bundle.kappa), input);
        }
    }
    let mut bruhat = Bruhat::new();
    for _ in 0..samples {
        let g: LaurentMatrix<Fp> = sample::sl_constant(lambda.n(), rng);
        let x: LaurentMatrix<Fp> = sample::nilradical(lambda, rng);
        let input = || format!("g = {g}, X = {x}");
        let Some(img) = t.check_ok("phi_P defined", phi_p(&g, &x, lambda), input) else {
            continue;
        };
        check_flag(&img, lambda, t, input);
        let below = parabolic_cell(&img.point, &sp).and_then(|c| bruhat.leq(&c, &bundle.kappa));
        t.check("cell of phi_P(g, X) <= kappa", below.unwrap_or(false), input);
        let p: LaurentMatrix<Fp> = sample::parabolic(lambda, rng);
        let moved = p.invert().and_then(|p_inv| phi_p(&(&g * &p), &(&(&p_inv * &x) * &p), lambda));
        t.check("phi_P(g p, p^-1 X p) = phi_P(g, X)", moved.map(|m| m.flag == img.flag).unwrap_or(false), input);
    }
}

/// For maximal parabolics, `beta(mv_embed(g X g^-1)) = phi_P(g, X)` as
/// lattice flags.
pub fn check_beta(lambda: &Composition, samples: usize, rng: &mut impl Rng, t: &mut Tally) {
    if !lambda.is_maximal() {
        return;
    }
    for op in ["mv_embed", "beta", "phi_p", "invert"] {
        t.op(op);
    }
    for _ in 0..samples {
        let g: LaurentMatrix<Fp> = sample::sl_constant(lambda.n(), rng);
        let x: LaurentMatrix<Fp> = sample::nilradical(lambda, rng);
        let input = || format!("g = {g}, X = {x}");
        let Some(img) = t.check_ok("phi_P defined", phi_p(&g, &x, lambda), input) else {
            continue;
        };
        check_flag(&img, lambda, t, input);
        let flag = g.invert().and_then(|g_inv| mv_embed(&(&(&g * &x) * &g_inv), &g, lambda)).and_then(|l| beta(&l, lambda));
        t.check("beta of mv_embed = phi_P", flag.map(|f| f == img.flag).unwrap_or(false), input);
    }
}

/// `psi` on random conjugates `g J g^-1` of the Jordan form of type `mu`:
/// the Jordan type is preserved, the lattice moves by `g`, and the
/// `S_0`-cell is `tau_q` of `kappa(mu')`.
pub fn check_psi(mu: &Partition, conjugates: usize, rng: &mut impl Rng, t: &mut Tally) {
    for op in ["psi", "jordan_type", "parabolic_cell", "invert"] {
        t.op(op);
    }
    let n = mu.size();
    let j: LaurentMatrix<Fp> = sample::jordan_form(mu.parts());
    let dual = Composition::new(mu.conjugate().parts().to_vec()).expect("partitions are compositions");
    let expected = kappa(&dual).tau_q;
    let s0 = ParabolicSubset::finite(n);
    let Some((_, base)) = t.check_ok("psi defined", psi(&j), || mu.to_string()) else {
        return;
    };
    for _ in 0..conjugates {
        let g: LaurentMatrix<Fp> = sample::sl_constant(n, rng);
        let input = || format!("mu = {mu}, g = {g}");
        let Some(x) = t.check_ok("conjugator invertible", g.invert().map(|g_inv| &(&g * &j) * &g_inv), input) else {
            continue;
        };
        t.check("Jordan type of g J g^-1 = mu", jordan_type(&x).ok().as_ref() == Some(mu), input);
        let Some((point, lattice)) = t.check_ok("psi defined", psi(&x), input) else {
            continue;
        };
        t.check("psi(g X g^-1) lattice = g psi(X) lattice", base.apply(&g).ok() == Some(lattice), input);
        let cell = parabolic_cell(&point, &s0);
        t.check("S_0-cell of psi(g J g^-1) = tau_q of kappa(mu')", cell.ok().as_ref() == Some(&expected), input);
    }
}

/// Monomial matrices lie in their own cell, and cells are invariant under
/// left and right multiplication by random Iwahori elements.
pub fn check_cell_invariance(n: usize, windows: usize, pairs: usize, rng: &mut impl Rng, t: &mut Tally) {
    for op in ["iwahori_cell", "borel_membership", "det"] {
        t.op(op);
    }
    for _ in 0..windows {
        let w = sample::window(n, 2, rng);
        let m: LaurentMatrix<Fp> = w.to_matrix();
        t.check("monomial matrices lie in their own cell", iwahori_cell(&m).ok().as_ref() == Some(&w), || window_str(&w));
        for _ in 0..pairs {
            let b1: LaurentMatrix<Fp> = sample::iwahori(n, rng);
            let b2: LaurentMatrix<Fp> = sample::iwahori(n, rng);
            let input = || format!("w = {w}, b1 = {b1}, b2 = {b2}");
            let in_b = b1.borel_membership().in_plus() && b2.borel_membership().in_plus() && b1.det().is_one();
            let cell = iwahori_cell(&(&(&b1 * &m) * &b2));
            t.check("cell of b1 w b2 = w", in_b && cell.ok().as_ref() == Some(&w), input);
        }
    }
}

// ---------------------------------------------------------------------------
// Suites and reports

fn balls(lo: usize, hi: usize, len: u64, seed: u64, f: impl Fn(usize, u64, &mut Tally) + Sync) -> Tally {
    let ns: Vec<usize> = (lo..=hi).collect();
    over_items(&ns, seed, 0, |&n, t, _| f(n, len, t))
}

/// Runs one suite (not `All`) and returns its tally.
pub fn run_suite(suite: Suite, cfg: &Config) -> Tally {
    let nmax = suite.n_cap(cfg.nmax);
    let seed = cfg.seed;
    let mut tally = Tally::new();
    match suite {
        Suite::Lengths => {
            tally.merge(balls(2, nmax.min(4), 6, seed, check_length_ball));
            let ns: Vec<usize> = (2..=nmax).collect();
            tally.merge(over_items(&ns, seed, TAG_WINDOWS, |&n, t, rng| check_random_windows(n, cfg.random_windows, rng, t)));
        }
        Suite::Bruhat => {
            tally.merge(balls(2, nmax.min(3), 5, seed, check_bruhat_ball));
            tally.merge(balls(2, nmax.min(4), 5, seed, check_quad_ball));
            tally.merge(balls(2, nmax.min(4), 4, seed, check_cosets));
        }
        Suite::Varpi => {
            let ns: Vec<usize> = (1..=nmax).collect();
            tally.merge(over_items(&ns, seed, 0, |&n, t, _| check_partitions(n, t)));
            tally.merge(over_compositions(1, nmax, seed, 0, |l, t, _| {
                check_tableau(l, t);
                check_varpi(l, t);
            }));
        }
        Suite::Kappa => {
            tally.merge(over_compositions(1, nmax, seed, 0, |l, t, _| {
                check_kappa_identities(l, t);
                check_tau_q(l, t);
            }));
        }
        Suite::Divisors => {
            tally.merge(over_compositions(1, nmax, seed, TAG_DIVISORS, |l, t, rng| check_divisors(l, cfg.divisor_samples, rng, t)));
        }
        Suite::Embeddings => {
            tally.merge(over_compositions(1, nmax, seed, TAG_PHI, |l, t, rng| check_phi(l, cfg.phi_samples, rng, t)));
            tally.merge(over_compositions(2, nmax, seed, TAG_BETA, |l, t, rng| check_beta(l, cfg.beta_samples, rng, t)));
            let mus: Vec<Partition> = (1..=nmax).flat_map(Partition::all).collect();
            tally.merge(over_items(&mus, seed, TAG_PSI, |mu, t, rng| check_psi(mu, cfg.psi_conjugates, rng, t)));
            let ns: Vec<usize> = (1..=nmax).collect();
            tally.merge(over_items(&ns, seed, TAG_CELLS, |&n, t, rng| check_cell_invariance(n, cfg.cell_windows, cfg.cell_pairs, rng, t)));
        }
        Suite::All => {
            for s in Suite::EACH {
                tally.merge(run_suite(s, cfg));
            }
        }
    }
    tally
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    /// Smallest and largest `n` visited.
    pub n_range: [usize; 2],
    pub checks: BTreeMap<String, Count>,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Coverage {
    pub exercised: Vec<String>,
    pub missing: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub seed: u64,
    pub nmax: usize,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
    /// Present for `all`: every library operation must be exercised.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coverage: Option<Coverage>,
    /// Wall-clock time; omitted unless requested so that equal seeds give
    /// byte-identical JSON.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<u64>,
}

impl VerificationReport {
    pub fn failures(&self) -> u64 {
        self.suites.iter().flat_map(|s| s.checks.values()).map(|c| c.failed).sum()
    }
}

/// Runs `suite` (each member suite for `All`) and assembles the report.
pub fn verify(suite: Suite, cfg: &Config, timing: bool) -> VerificationReport {
    let start = Instant::now();
    let members: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let mut ops = BTreeSet::new();
    let suites: Vec<SuiteReport> = members
        .into_iter()
        .map(|s| {
            let tally = run_suite(s, cfg);
            ops.extend(tally.ops.iter().copied());
            SuiteReport { suite: s, n_range: [1, s.n_cap(cfg.nmax)], checks: tally.checks, witnesses: tally.witnesses }
        })
        .collect();
    let coverage = (suite == Suite::All).then(|| Coverage {
        exercised: ops.iter().map(|s| s.to_string()).collect(),
        missing: OPERATIONS.iter().filter(|op| !ops.contains(*op)).map(|s| s.to_string()).collect(),
    });
    let mut report = VerificationReport {
        schema: crate::json::SCHEMA,
        seed: cfg.seed,
        nmax: cfg.nmax,
        passed: false,
        suites,
        coverage,
        duration_ms: timing.then(|| start.elapsed().as_millis() as u64),
    };
    let covered = report.coverage.as_ref().is_none_or(|c| c.missing.is_empty());
    report.passed = report.failures() == 0 && covered;
    report
}

/// Plain-text rendering of a report.
pub fn render_text(report: &VerificationReport, elapsed_ms: u64) -> String {
    let mut out = String::new();
    for s in &report.suites {
        out.push_str(&format!("suite {} (n = {}..{}, seed {})\n", s.suite.name(), s.n_range[0], s.n_range[1], report.seed));
        let width = s.checks.keys().map(|k| k.len()).max().unwrap_or(0);
        for (name, c) in &s.checks {
            let status = if c.failed == 0 { "PASS" } else { "FAIL" };
            out.push_str(&format!("  {status}  {name:<width$}  {}/{}\n", c.passed, c.total()));
        }
        for w in &s.witnesses {
            let lambda = w.lambda.as_deref().map(|l| format!(" lambda = {l}")).unwrap_or_default();
            out.push_str(&format!("  witness [{}]{lambda}: {} -- {}\n", w.check, w.input, w.detail));
        }
    }
    if let Some(c) = &report.coverage {
        out.push_str(&format!("operations exercised: {}/{}\n", c.exercised.len(), OPERATIONS.len()));
        if !c.missing.is_empty() {
            out.push_str(&format!("  missing: {}\n", c.missing.join(", ")));
        }
    }
    let verdict = if report.passed { "PASS" } else { "FAIL" };
    out.push_str(&format!("result: {verdict}, {} failures, {:.2} s\n", report.failures(), elapsed_ms as f64 / 1000.0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_keep_witnesses() {
        let mut t = Tally::for_lambda(&"2,1".parse().unwrap());
        t.check("x", true, || unreachable!());
        for k in 0..8 {
            t.check("y", false, || format!("case {k}"));
        }
        t.check_ok::<(), _>("z", Err("boom"), || "input".into());
        assert_eq!(t.count("x"), Count { passed: 1, failed: 0 });
        assert_eq!(t.count("y").failed, 8);
        assert_eq!(t.witnesses.iter().filter(|w| w.check == "y").count(), WITNESS_CAP);
        let z = t.witnesses.iter().find(|w| w.check == "z").unwrap();
        assert_eq!((z.detail.as_str(), z.lambda.as_deref()), ("boom", Some("(2,1)")));
    }

    #[test]
    fn task_streams_are_distinct_and_reproducible() {
        let draw = |tag, idx| task_rng(9, tag, idx).random::<u64>();
        assert_eq!(draw(1, 3), draw(1, 3));
        assert_ne!(draw(1, 3), draw(1, 4));
        assert_ne!(draw(1, 3), draw(2, 3));
    }
}
