//! Partitions, compositions, conjugation, dominance and Jordan types.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{field_rank, LaurentMatrix};
use crate::weyl::ParabolicSubset;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition("parts must be weakly decreasing"));
        }
        Ok(Partition(parts))
    }

    /// Sorts `parts` decreasingly and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `i`-th part (1-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let longest = self.0.first().copied().unwrap_or(0);
        Partition((1..=longest).map(|i| self.0.iter().filter(|&&p| p >= i).count()).collect())
    }

    /// `self <= other` in dominance order.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch { left: self.size(), right: other.size() });
        }
        let (mut a, mut b) = (0, 0);
        for i in 1..=self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// An ordered sequence `lambda = (lambda_1, ..., lambda_r)` of positive
/// integers, describing the block sizes of a parabolic subgroup.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("composition is empty"));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition("parts must be positive"));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of blocks `r`.
    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    /// `lambda_i`, 1-based.
    pub fn part(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `d_i = lambda_1 + ... + lambda_i` for `0 <= i <= r`.
    pub fn d(&self, i: usize) -> usize {
        self.0[..i].iter().sum()
    }

    /// `(d_0, d_1, ..., d_r)`.
    pub fn partial_sums(&self) -> Vec<usize> {
        (0..=self.r()).map(|i| self.d(i)).collect()
    }

    /// The block (1-based) containing the index `x` in `1..=n`.
    pub fn block_of(&self, x: usize) -> usize {
        let mut acc = 0;
        for (i, &p) in self.0.iter().enumerate() {
            acc += p;
            if x <= acc {
                return i + 1;
            }
        }
        panic!("index {x} is outside 1..={}", self.n())
    }

    /// `S_P`: the finite simple reflections other than `s_{d_i}`, `0 < i < r`.
    pub fn parabolic(&self) -> ParabolicSubset {
        let breaks: Vec<usize> = (1..self.r()).map(|i| self.d(i)).collect();
        ParabolicSubset::from_breaks(self.n(), &breaks)
    }

    /// `nu`: the conjugate of `lambda` sorted decreasingly.
    pub fn nu(&self) -> Partition {
        Partition::from_unsorted(self.0.clone()).conjugate()
    }

    /// `dim G/P = (n^2 - sum lambda_i^2) / 2`.
    pub fn dim_flag_variety(&self) -> usize {
        let n = self.n();
        (n * n - self.0.iter().map(|p| p * p).sum::<usize>()) / 2
    }

    /// Whether the parabolic is maximal, i.e. `r = 2`.
    pub fn is_maximal(&self) -> bool {
        self.r() == 2
    }

    /// All `2^{n-1}` compositions of `n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Composition> {
        fn go(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition(cur.clone()));
                return;
            }
            for p in 1..=rest {
                cur.push(p);
                go(rest - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            go(n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl core::str::FromStr for Composition {
    type Err = Error;

    /// Comma separated positive integers, e.g. `1,4,4,2,6`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidComposition("expected comma separated positive integers")))
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// Jordan type of a constant nilpotent matrix, from the ranks of its powers.
pub fn jordan_type<F: Field>(x: &LaurentMatrix<F>) -> Result<Partition> {
    if !x.is_constant() {
        return Err(Error::NotNilpotent);
    }
    let n = x.dim();
    let base = x.constant_part();
    let mut power = base.clone();
    let mut kernel_dims = alloc::vec![0usize];
    for _ in 0..n {
        kernel_dims.push(n - field_rank(&power));
        power = mat_mul(&power, &base);
    }
    if *kernel_dims.last().unwrap() != n {
        return Err(Error::NotNilpotent);
    }
    // kernel_dims[i] - kernel_dims[i-1] counts the blocks of size >= i
    let conj: Vec<usize> = kernel_dims.windows(2).map(|w| w[1] - w[0]).filter(|&k| k > 0).collect();
    Ok(Partition(conj).conjugate())
}

fn mat_mul<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> Vec<Vec<F>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = F::zero();
                    for (k, bk) in b.iter().enumerate() {
                        if !a[i][k].is_zero() && !bk[j].is_zero() {
                            acc = acc.add(&a[i][k].mul(&bk[j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}
