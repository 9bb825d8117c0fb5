//! The affine Weyl group of type A(n-1), as affine permutations of the integers.
//!
//! An element is stored through its window `(w(1), ..., w(n))`; the rest of
//! the permutation follows from `w(i + n) = w(i) + n`. The matching monomial
//! matrix is `sum_i t^{c_i} E_{sigma(i), i}` with `w(i) = sigma(i) - c_i n`,
//! and with this dictionary the matrix product corresponds to composition
//! `(u v)(i) = u(v(i))`.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::laurent::LaurentPoly;
use crate::matrix::LaurentMatrix;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffinePermutation {
    window: Vec<i64>,
}

/// Side on which a parabolic subgroup acts in a coset decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Cosets `W_J w`; reflections multiply on the left.
    Left,
    /// Cosets `w W_J`; reflections multiply on the right.
    Right,
}

fn modn(x: i64, n: i64) -> i64 {
    x.rem_euclid(n)
}

impl AffinePermutation {
    /// Validates that residues are distinct mod `n` and `sum (w(i) - i) = 0`.
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len() as i64;
        if n == 0 {
            return Err(Error::InvalidWindow("empty window"));
        }
        let mut seen = alloc::vec![false; n as usize];
        for &v in &window {
            let r = modn(v, n) as usize;
            if seen[r] {
                return Err(Error::InvalidWindow("residues are not distinct"));
            }
            seen[r] = true;
        }
        let drift: i64 = window.iter().enumerate().map(|(i, &v)| v - (i as i64 + 1)).sum();
        if drift != 0 {
            return Err(Error::InvalidWindow("window values do not sum to 1 + ... + n"));
        }
        Ok(AffinePermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        AffinePermutation { window: (1..=n as i64).collect() }
    }

    /// The finite permutation with `w(i) = perm[i-1]`, values in `1..=n`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        let window: Vec<i64> = perm.iter().map(|&v| v as i64).collect();
        if window.iter().any(|&v| v < 1 || v > perm.len() as i64) {
            return Err(Error::InvalidWindow("finite permutation values must lie in 1..=n"));
        }
        Self::new(window)
    }

    /// The translation `tau_q = diag(t^{q_1}, ..., t^{q_n})`, window `i - q_i n`.
    pub fn translation(q: &[i64]) -> Result<Self> {
        let n = q.len() as i64;
        Self::new(q.iter().enumerate().map(|(i, &qi)| i as i64 + 1 - qi * n).collect())
    }

    /// Simple reflection `s_i`, `0 <= i < n`. Requires `n >= 2`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if n < 2 || i >= n {
            return Err(Error::BadIndices { a: i as i64, b: n as i64 });
        }
        let mut w = Self::identity(n);
        if i == 0 {
            w.window[0] = 0;
            w.window[n - 1] = n as i64 + 1;
        } else {
            w.window.swap(i - 1, i);
        }
        Ok(w)
    }

    /// The reflection exchanging `a + kn` and `b + kn` for every `k`.
    ///
    /// For `1 <= a < b <= n` this is the finite transposition `s_(a,b)`;
    /// `reflection(n, 0, 1)` is `s_0`. In general it is the reflection in the
    /// root `(a, b)`.
    pub fn reflection(n: usize, a: i64, b: i64) -> Result<Self> {
        let nn = n as i64;
        if n < 2 || modn(a, nn) == modn(b, nn) {
            return Err(Error::BadIndices { a, b });
        }
        let d = b - a;
        let window = (1..=nn)
            .map(|i| {
                if modn(i - a, nn) == 0 {
                    i + d
                } else if modn(i - b, nn) == 0 {
                    i - d
                } else {
                    i
                }
            })
            .collect();
        Ok(AffinePermutation { window })
    }

    /// Product `s_{word[0]} s_{word[1]} ...`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(n);
        for &i in word {
            if n < 2 || i >= n {
                return Err(Error::BadIndices { a: i as i64, b: n as i64 });
            }
            w = w.mul_simple_right(i);
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i as i64 + 1)
    }

    /// Whether the element lies in the finite Weyl group `S_n`.
    pub fn is_finite(&self) -> bool {
        let n = self.n() as i64;
        self.window.iter().all(|&v| (1..=n).contains(&v))
    }

    /// `w(x)` for any integer `x`.
    pub fn apply(&self, x: i64) -> i64 {
        let n = self.n() as i64;
        let r = modn(x - 1, n);
        self.window[r as usize] + (x - 1 - r)
    }

    pub fn inverse(&self) -> Self {
        let n = self.n() as i64;
        let mut window = alloc::vec![0; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            let r = modn(v - 1, n);
            window[r as usize] = i as i64 + 1 - (v - 1 - r);
        }
        AffinePermutation { window }
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::PeriodMismatch { left: self.n(), right: other.n() });
        }
        Ok(AffinePermutation { window: other.window.iter().map(|&x| self.apply(x)).collect() })
    }

    /// `self * s_i`: exchanges window positions `i` and `i + 1`.
    pub fn mul_simple_right(&self, i: usize) -> Self {
        let n = self.n();
        let mut window = self.window.clone();
        if i == 0 {
            let first = window[0];
            window[0] = window[n - 1] - n as i64;
            window[n - 1] = first + n as i64;
        } else {
            window.swap(i - 1, i);
        }
        AffinePermutation { window }
    }

    /// `s_i * self`: exchanges the values congruent to `i` and `i + 1`.
    pub fn mul_simple_left(&self, i: usize) -> Self {
        let n = self.n() as i64;
        let lo = i as i64;
        let window = self
            .window
            .iter()
            .map(|&v| {
                let r = modn(v, n);
                if r == modn(lo, n) {
                    v + 1
                } else if r == modn(lo + 1, n) {
                    v - 1
                } else {
                    v
                }
            })
            .collect();
        AffinePermutation { window }
    }

    /// `self * s_i < self`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let n = self.n();
        if i == 0 {
            self.window[n - 1] - n as i64 > self.window[0]
        } else {
            self.window[i - 1] > self.window[i]
        }
    }

    /// `s_i * self < self`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    /// Finite part and translation: `self = sigma * tau_q`.
    pub fn decompose_translation(&self) -> (AffinePermutation, Vec<i64>) {
        let n = self.n() as i64;
        let mut sigma = Vec::with_capacity(self.n());
        let mut q = Vec::with_capacity(self.n());
        for &v in &self.window {
            let s = modn(v - 1, n) + 1;
            sigma.push(s);
            q.push((s - v) / n);
        }
        (AffinePermutation { window: sigma }, q)
    }

    /// Coxeter length from the closed formula
    /// `sum_{i<j} |c_i - c_j - f_sigma(i,j)|`.
    pub fn length(&self) -> u64 {
        let (sigma, c) = self.decompose_translation();
        let s = sigma.window();
        let n = self.n();
        let mut total = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                let f = i64::from(s[i] > s[j]);
                total += (c[i] - c[j] - f).unsigned_abs();
            }
        }
        total
    }

    /// Coxeter length by direct count of inversions `i < j`, `w(i) > w(j)`,
    /// `1 <= i <= n`. Pairs with `j - i >= n (2 + spread)` cannot be
    /// inversions, where `spread = max c - min c`.
    pub fn length_oracle(&self) -> u64 {
        let n = self.n() as i64;
        let (_, c) = self.decompose_translation();
        let spread = c.iter().max().unwrap() - c.iter().min().unwrap();
        let reach = n * (2 + spread);
        let mut count = 0u64;
        for i in 1..=n {
            let wi = self.apply(i);
            for j in i + 1..i + reach {
                if wi > self.apply(j) {
                    count += 1;
                }
            }
        }
        count
    }

    /// One reduced word `a` with `self = s_{a[0]} s_{a[1]} ...`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.n();
        let mut w = self.clone();
        let mut word = Vec::new();
        while !w.is_identity() {
            let i = (0..n).find(|&i| w.has_right_descent(i)).expect("non-identity has a descent");
            word.push(i);
            w = w.mul_simple_right(i);
        }
        word.reverse();
        word
    }

    pub fn to_matrix<F: Field>(&self) -> LaurentMatrix<F> {
        let n = self.n();
        let (sigma, c) = self.decompose_translation();
        let mut m = LaurentMatrix::zero(n);
        for (j, (&s, &cj)) in sigma.window.iter().zip(&c).enumerate() {
            m.set(s as usize - 1, j, LaurentPoly::t_pow(cj));
        }
        m
    }

    /// Reads a monomial matrix; nonzero coefficients are forgotten.
    pub fn from_matrix<F: Field>(m: &LaurentMatrix<F>) -> Result<Self> {
        let cols = m.monomial_columns().ok_or(Error::NotMonomialPermutation)?;
        let n = m.dim() as i64;
        let window = cols.iter().map(|(row, _, k)| *row as i64 + 1 - k * n).collect();
        Self::new(window).map_err(|_| Error::NotMonomialPermutation)
    }

    pub fn act_on_root(&self, alpha: RootIdx) -> RootIdx {
        RootIdx::canonical(self.apply(alpha.i), self.apply(alpha.j), self.n())
            .expect("affine permutations preserve residues being distinct")
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffinePermutation{self}")
    }
}

/// A real affine root `(i, j)`, `i != j mod n`, modulo `(i, j) ~ (i + kn, j + kn)`.
/// Stored in the canonical form with `1 <= i <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootIdx {
    pub i: i64,
    pub j: i64,
}

impl RootIdx {
    pub fn canonical(i: i64, j: i64, n: usize) -> Result<Self> {
        let nn = n as i64;
        if modn(i - j, nn) == 0 {
            return Err(Error::BadIndices { a: i, b: j });
        }
        let shift = modn(i - 1, nn) + 1 - i;
        Ok(RootIdx { i: i + shift, j: j + shift })
    }

    pub fn is_positive(self) -> bool {
        self.i < self.j
    }

    pub fn negate(self, n: usize) -> Self {
        RootIdx::canonical(self.j, self.i, n).expect("negation of a root is a root")
    }

    /// `alpha + k delta`.
    pub fn shift_delta(self, k: i64, n: usize) -> Self {
        RootIdx { i: self.i, j: self.j + k * n as i64 }
    }

    /// Whether this is a root of the finite root system (both ends in `1..=n`).
    pub fn is_finite(self, n: usize) -> bool {
        (1..=n as i64).contains(&self.j)
    }

    /// The reflection `s_alpha`.
    pub fn reflection(self, n: usize) -> AffinePermutation {
        AffinePermutation::reflection(n, self.i, self.j).expect("roots have distinct residues")
    }
}

impl fmt::Display for RootIdx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

/// `alpha(q) = q_b - q_a` for the finite root `alpha = (a, b)`.
pub fn root_pairing(a: usize, b: usize, q: &[i64]) -> i64 {
    q[b - 1] - q[a - 1]
}

/// A subset of the simple reflections `{s_0, ..., s_{n-1}}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParabolicSubset {
    n: usize,
    members: BTreeSet<usize>,
}

impl ParabolicSubset {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&i| i >= n.max(1) || n < 2) {
            return Err(Error::BadIndices { a: bad as i64, b: n as i64 });
        }
        Ok(ParabolicSubset { n, members })
    }

    /// `{s_1, ..., s_{n-1}}`: generates the finite Weyl group.
    pub fn finite(n: usize) -> Self {
        ParabolicSubset { n, members: (1..n).collect() }
    }

    /// `S_0` without the `s_{d_i}`, `0 < d_i < n`.
    pub fn from_breaks(n: usize, breaks: &[usize]) -> Self {
        ParabolicSubset { n, members: (1..n).filter(|i| !breaks.contains(i)).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Whether `w` lies in the subgroup generated by this subset.
    pub fn contains_element(&self, w: &AffinePermutation) -> bool {
        let mut w = w.clone();
        loop {
            if w.is_identity() {
                return true;
            }
            match self.iter().find(|&i| w.has_right_descent(i)) {
                Some(i) => w = w.mul_simple_right(i),
                None => return false,
            }
        }
    }
}

/// Minimal length representative of the coset of `w`, together with the
/// discarded part: `w = min * rest` (Right) or `w = rest * min` (Left), with
/// lengths adding.
pub fn coset_decomposition(
    w: &AffinePermutation,
    j: &ParabolicSubset,
    side: Side,
) -> (AffinePermutation, AffinePermutation) {
    let mut min = w.clone();
    let mut rest = Vec::new();
    'outer: loop {
        for i in j.iter() {
            let shorter = match side {
                Side::Right => min.has_right_descent(i),
                Side::Left => min.has_left_descent(i),
            };
            if shorter {
                min = match side {
                    Side::Right => min.mul_simple_right(i),
                    Side::Left => min.mul_simple_left(i),
                };
                rest.push(i);
                continue 'outer;
            }
        }
        break;
    }
    let n = w.n();
    let rest = match side {
        // w = min s_{r_k} ... s_{r_1}
        Side::Right => {
            rest.reverse();
            AffinePermutation::from_word(n, &rest)
        }
        // w = s_{r_1} ... s_{r_k} min
        Side::Left => AffinePermutation::from_word(n, &rest),
    }
    .expect("indices come from the parabolic subset");
    (min, rest)
}

pub fn min_coset_rep(w: &AffinePermutation, j: &ParabolicSubset, side: Side) -> AffinePermutation {
    coset_decomposition(w, j, side).0
}

/// Bruhat order via the lifting property, memoized on `(v, w)`.
///
/// The cache only ever holds answers of a pure function, so one instance can
/// be reused across any number of queries on the same thread.
#[derive(Default)]
pub struct Bruhat {
    cache: BTreeMap<(AffinePermutation, AffinePermutation), bool>,
}

impl Bruhat {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn leq(&mut self, v: &AffinePermutation, w: &AffinePermutation) -> Result<bool> {
        if v.n() != w.n() {
            return Err(Error::PeriodMismatch { left: v.n(), right: w.n() });
        }
        Ok(self.leq_inner(v, w))
    }

    fn leq_inner(&mut self, v: &AffinePermutation, w: &AffinePermutation) -> bool {
        if v == w || v.is_identity() {
            return true;
        }
        let (lv, lw) = (v.length(), w.length());
        if lv >= lw {
            return false;
        }
        let key = (v.clone(), w.clone());
        if let Some(&ans) = self.cache.get(&key) {
            return ans;
        }
        let s = (0..w.n()).find(|&i| w.has_left_descent(i)).expect("w is not the identity");
        let sw = w.mul_simple_left(s);
        let ans = if v.has_left_descent(s) {
            self.leq_inner(&v.mul_simple_left(s), &sw)
        } else {
            self.leq_inner(v, &sw)
        };
        self.cache.insert(key, ans);
        ans
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }
}

pub fn bruhat_leq(v: &AffinePermutation, w: &AffinePermutation) -> Result<bool> {
    Bruhat::new().leq(v, w)
}

/// Every element below `w` in Bruhat order, as the set of products of
/// subwords of one reduced word of `w`.
pub fn lower_interval_by_subwords(w: &AffinePermutation) -> BTreeSet<AffinePermutation> {
    let n = w.n();
    let mut acc = BTreeSet::new();
    acc.insert(AffinePermutation::identity(n));
    for &i in &w.reduced_word() {
        let extended: Vec<AffinePermutation> = acc.iter().map(|u| u.mul_simple_right(i)).collect();
        acc.extend(extended);
    }
    acc
}

/// All elements of length at most `max_len`, sorted by length then window.
pub fn length_ball(n: usize, max_len: u64) -> Vec<AffinePermutation> {
    let e = AffinePermutation::identity(n);
    let mut all = BTreeSet::new();
    all.insert(e.clone());
    let mut frontier = alloc::vec![e];
    for _ in 0..max_len {
        if n < 2 {
            break;
        }
        let mut next = Vec::new();
        for w in &frontier {
            for i in 0..n {
                if !w.has_right_descent(i) {
                    let u = w.mul_simple_right(i);
                    if all.insert(u.clone()) {
                        next.push(u);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<AffinePermutation> = all.into_iter().collect();
    out.sort_by_key(|w| (w.length(), w.clone()));
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadCase {
    /// `ord t_a = ord t_b`: `s_l w = w s_r` and the orbit has two elements.
    Equal,
    /// `ord t_a != ord t_b`: four distinct elements.
    Distinct,
}

#[derive(Clone, Debug)]
pub struct QuadMinimum {
    pub case: QuadCase,
    pub s_left: AffinePermutation,
    pub s_right: AffinePermutation,
    pub min: AffinePermutation,
    /// Strict relations `lower < upper`, each confirmed by the Bruhat order.
    pub relations: Vec<(AffinePermutation, AffinePermutation)>,
}

/// Minimum of `{w, s_l w, w s_r, s_l w s_r}` with `s_r = s_(a,b)` and
/// `s_l = s_(sigma(a), sigma(b))`.
///
/// When `ord t_a = ord t_b` the minimum is `w` if `sigma(a) < sigma(b)` and
/// `s_l w` otherwise. Otherwise, with `k = ord t_a - ord t_b`, `w < w s_r`
/// iff `k > 0` while `w < s_l w` iff `k (sigma(b) - sigma(a)) < 0`, so the
/// minimum is
///
/// | | `k > 0` | `k < 0` |
/// |---|---|---|
/// | `sigma(a) > sigma(b)` | `w` | `s_l w s_r` |
/// | `sigma(a) < sigma(b)` | `s_l w` | `w s_r` |
///
/// and in every case `u < s_l u < s_l u s_r` and `u < u s_r < s_l u s_r`.
pub fn quad_minimum(
    w: &AffinePermutation,
    a: usize,
    b: usize,
    bruhat: &mut Bruhat,
) -> Result<QuadMinimum> {
    let n = w.n();
    if !(1 <= a && a < b && b <= n) {
        return Err(Error::BadIndices { a: a as i64, b: b as i64 });
    }
    let (sigma, c) = w.decompose_translation();
    let (sa, sb) = (sigma.window[a - 1], sigma.window[b - 1]);
    let s_right = AffinePermutation::reflection(n, a as i64, b as i64)?;
    let s_left = AffinePermutation::reflection(n, sa, sb)?;
    let lw = s_left.compose(w)?;
    let wr = w.compose(&s_right)?;
    let mut relations = Vec::new();
    let (case, min) = if c[a - 1] == c[b - 1] {
        if lw != wr {
            return Err(Error::IdentityFailed("s_l w = w s_r when ord t_a = ord t_b"));
        }
        let (min, other) = if sa < sb { (w.clone(), lw) } else { (lw, w.clone()) };
        relations.push((min.clone(), other));
        (QuadCase::Equal, min)
    } else {
        if lw == wr {
            return Err(Error::IdentityFailed("s_l w != w s_r when ord t_a != ord t_b"));
        }
        let u = match (c[a - 1] > c[b - 1], sa > sb) {
            (true, true) => w.clone(),
            (false, true) => lw.compose(&s_right)?,
            (true, false) => lw,
            (false, false) => wr,
        };
        let lu = s_left.compose(&u)?;
        let ur = u.compose(&s_right)?;
        let lur = lu.compose(&s_right)?;
        relations.push((u.clone(), lu.clone()));
        relations.push((lu, lur.clone()));
        relations.push((u.clone(), ur.clone()));
        relations.push((ur, lur));
        (QuadCase::Distinct, u)
    };
    for (lo, hi) in &relations {
        if lo == hi || !bruhat.leq(lo, hi)? {
            return Err(Error::IdentityFailed("quad relation chain"));
        }
    }
    Ok(QuadMinimum { case, s_left, s_right, min, relations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn w(v: &[i64]) -> AffinePermutation {
        AffinePermutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(AffinePermutation::new(alloc::vec![1, 3]).is_err());
        assert!(AffinePermutation::new(alloc::vec![2, 4]).is_err());
        assert!(AffinePermutation::new(alloc::vec![0, 3]).is_ok());
    }

    #[test]
    fn simple_reflections() {
        assert_eq!(AffinePermutation::simple(2, 0).unwrap(), w(&[0, 3]));
        assert_eq!(AffinePermutation::simple(4, 0).unwrap(), w(&[0, 2, 3, 5]));
        assert_eq!(AffinePermutation::simple(3, 1).unwrap(), w(&[2, 1, 3]));
        assert_eq!(AffinePermutation::reflection(3, 1, 3).unwrap(), w(&[3, 2, 1]));
        assert_eq!(AffinePermutation::reflection(3, 0, 1).unwrap(), AffinePermutation::simple(3, 0).unwrap());
        assert!(AffinePermutation::reflection(3, 1, 4).is_err());
    }

    #[test]
    fn left_and_right_simple_multiplication_match_compose() {
        let x = w(&[-2, 2, 6]);
        for i in 0..3 {
            let s = AffinePermutation::simple(3, i).unwrap();
            assert_eq!(x.mul_simple_right(i), x.compose(&s).unwrap());
            assert_eq!(x.mul_simple_left(i), s.compose(&x).unwrap());
        }
    }

    #[test]
    fn matrix_round_trip_and_product() {
        let u = w(&[-2, 2, 6]);
        let v = w(&[0, 5, 1]);
        let mu: LaurentMatrix<Rational> = u.to_matrix();
        let mv: LaurentMatrix<Rational> = v.to_matrix();
        assert_eq!(AffinePermutation::from_matrix(&mu).unwrap(), u);
        assert_eq!(AffinePermutation::from_matrix(&(&mu * &mv)).unwrap(), u.compose(&v).unwrap());
    }

    #[test]
    fn s0_matrix() {
        let m: LaurentMatrix<Rational> = AffinePermutation::simple(2, 0).unwrap().to_matrix();
        assert_eq!(*m.get(0, 1), LaurentPoly::t_pow(-1));
        assert_eq!(*m.get(1, 0), LaurentPoly::t_pow(1));
    }

    #[test]
    fn inverse_composes_to_identity() {
        let x = w(&[-2, 2, 6]);
        assert!(x.compose(&x.inverse()).unwrap().is_identity());
        assert!(x.inverse().compose(&x).unwrap().is_identity());
    }

    #[test]
    fn lengths() {
        assert_eq!(w(&[-1, 4]).length(), 2);
        assert_eq!(w(&[0, 3]).length(), 1);
        assert_eq!(w(&[-2, 2, 6]).length(), 4);
        assert_eq!(w(&[-2, 2, 6]).length_oracle(), 4);
    }

    #[test]
    fn translation_decomposition() {
        let (sigma, q) = w(&[-1, 4]).decompose_translation();
        assert!(sigma.is_identity());
        assert_eq!(q, alloc::vec![1, -1]);
        let tau = AffinePermutation::translation(&[-1, 1]).unwrap();
        assert_eq!(tau, w(&[3, 0]));
    }

    #[test]
    fn translation_on_roots() {
        // q = (-1, 1): alpha(q) = 2, so (1,2) goes to (1,2) - 2 delta
        let tau = AffinePermutation::translation(&[-1, 1]).unwrap();
        let alpha = RootIdx::canonical(1, 2, 2).unwrap();
        assert_eq!(tau.act_on_root(alpha), RootIdx { i: 1, j: -2 });
        assert_eq!(root_pairing(1, 2, &[-1, 1]), 2);
        let s0 = AffinePermutation::simple(2, 0).unwrap();
        assert_eq!(s0.act_on_root(alpha), RootIdx { i: 2, j: 5 });
    }

    #[test]
    fn bruhat_examples() {
        let s0 = w(&[0, 3]);
        let kappa = w(&[-1, 4]);
        let mut b = Bruhat::new();
        assert!(b.leq(&s0, &kappa).unwrap());
        let s1s0 = w(&[2, 1]).compose(&s0).unwrap();
        let s0s1 = s0.compose(&w(&[2, 1])).unwrap();
        assert!(!b.leq(&s1s0, &s0s1).unwrap());
        assert!(!b.leq(&s0s1, &s1s0).unwrap());
    }

    #[test]
    fn coset_reps() {
        let kappa = w(&[-1, 4]);
        let s0 = ParabolicSubset::finite(2);
        assert_eq!(min_coset_rep(&kappa, &s0, Side::Right), kappa);
        assert!(min_coset_rep(&w(&[2, 1]), &s0, Side::Right).is_identity());
        let (min, rest) = coset_decomposition(&w(&[3, 0]), &s0, Side::Left);
        assert_eq!(rest.compose(&min).unwrap(), w(&[3, 0]));
    }

    #[test]
    fn quad_minimum_on_kappa() {
        let mut b = Bruhat::new();
        let kappa = w(&[-1, 4]);
        let q = quad_minimum(&kappa, 1, 2, &mut b).unwrap();
        assert_eq!(q.case, QuadCase::Distinct);
        assert_eq!(q.min, w(&[0, 3]));
        let q = quad_minimum(&kappa.inverse(), 1, 2, &mut b).unwrap();
        assert_eq!(q.min, w(&[0, 3]));
        // sigma = s_1 reverses (a, b): the minimum is w for k > 0, s_l w s_r for k < 0
        let q = quad_minimum(&w(&[-2, 5]), 1, 2, &mut b).unwrap();
        assert_eq!(q.min, w(&[-2, 5]));
        let x = w(&[4, -1]);
        let q = quad_minimum(&x, 1, 2, &mut b).unwrap();
        assert_eq!(q.min, q.s_left.compose(&x).unwrap().compose(&q.s_right).unwrap());
        assert_eq!(q.min.length(), 1);
        let q = quad_minimum(&AffinePermutation::identity(3), 1, 3, &mut b).unwrap();
        assert_eq!(q.case, QuadCase::Equal);
        assert!(q.min.is_identity());
    }

    #[test]
    fn reduced_words_reproduce_element() {
        let x = w(&[-2, 2, 6]);
        let word = x.reduced_word();
        assert_eq!(word.len() as u64, x.length());
        assert_eq!(AffinePermutation::from_word(3, &word).unwrap(), x);
    }
}
