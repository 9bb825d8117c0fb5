//! Tableau bookkeeping attached to a composition.
//!
//! Row `k` holds the entries `d_{k-1}+1, ..., d_k` left to right. Column `c`
//! collects the `c`-th entry of every row of length at least `c`, top to
//! bottom, and `f^c_j` is its `j`-th entry. Column heights are `nu`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partitions::{Composition, Partition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauData {
    pub lambda: Composition,
    pub nu: Partition,
    /// Number of columns, `max lambda_i`.
    pub s: usize,
    /// `columns[c-1][j-1] = f^c_j`.
    pub columns: Vec<Vec<usize>>,
    /// Entries that head a column.
    pub s1: BTreeSet<usize>,
    /// Entries below the top of their column.
    pub s2: BTreeSet<usize>,
    /// `red[k-1]`: the first `|S_1 cap Row(k)|` entries of row `k`.
    pub red: Vec<Vec<usize>>,
    /// `blue[k-1]`: the remaining entries of row `k`.
    pub blue: Vec<Vec<usize>>,
    /// Red entries in increasing order; `l[i-1] = l(i)`.
    pub l: Vec<usize>,
    /// Blue entries, rows from bottom to top, each row left to right.
    pub m: Vec<usize>,
    /// `t[i-1] = t(i)`, an enumeration of `S_2` with `t(i)` in the row of `m(i)`.
    pub t: Vec<usize>,
    /// `position[x-1] = (c, j)` with `f^c_j = x`.
    position: Vec<(usize, usize)>,
}

impl TableauData {
    pub fn build(lambda: &Composition) -> Self {
        let n = lambda.n();
        let r = lambda.r();
        let s = *lambda.parts().iter().max().expect("compositions are nonempty");
        let mut columns = alloc::vec![Vec::new(); s];
        let mut position = alloc::vec![(0, 0); n];
        for k in 1..=r {
            for c in 1..=lambda.part(k) {
                let x = lambda.d(k - 1) + c;
                columns[c - 1].push(x);
                position[x - 1] = (c, columns[c - 1].len());
            }
        }
        let s1: BTreeSet<usize> = columns.iter().map(|col| col[0]).collect();
        let s2: BTreeSet<usize> = (1..=n).filter(|x| !s1.contains(x)).collect();

        let mut red = Vec::with_capacity(r);
        let mut blue = Vec::with_capacity(r);
        let mut running_max = 0;
        for k in 1..=r {
            let row: Vec<usize> = (lambda.d(k - 1) + 1..=lambda.d(k)).collect();
            let red_count = lambda.part(k).saturating_sub(running_max);
            running_max = running_max.max(lambda.part(k));
            red.push(row[..red_count].to_vec());
            blue.push(row[red_count..].to_vec());
        }
        let l: Vec<usize> = red.iter().flatten().copied().collect();
        let m: Vec<usize> = blue.iter().rev().flatten().copied().collect();
        let mut t = Vec::with_capacity(m.len());
        for k in (1..=r).rev() {
            let row_s2 = (lambda.d(k - 1) + 1..=lambda.d(k)).filter(|x| s2.contains(x));
            t.extend(row_s2);
        }
        let tab = TableauData {
            lambda: lambda.clone(),
            nu: lambda.nu(),
            s,
            columns,
            s1,
            s2,
            red,
            blue,
            l,
            m,
            t,
            position,
        };
        tab.check_invariants().expect("tableau construction is consistent");
        tab
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    /// `f^c_j`, 1-based.
    pub fn f(&self, c: usize, j: usize) -> usize {
        self.columns[c - 1][j - 1]
    }

    /// `(c, j)` with `f^c_j = x`.
    pub fn position(&self, x: usize) -> (usize, usize) {
        self.position[x - 1]
    }

    /// `nu_c`: the height of column `c`.
    pub fn height(&self, c: usize) -> usize {
        self.columns[c - 1].len()
    }

    /// `iota(f^c_j) = f^c_{j-1}`; defined on `S_2`.
    pub fn iota(&self, x: usize) -> Option<usize> {
        let (c, j) = self.position(x);
        (j >= 2).then(|| self.f(c, j - 1))
    }

    pub fn row_of(&self, x: usize) -> usize {
        self.lambda.block_of(x)
    }

    pub fn check_invariants(&self) -> Result<()> {
        let n = self.n();
        let fail = Error::IdentityFailed;
        let mut seen = alloc::vec![false; n];
        for col in &self.columns {
            for &x in col {
                if core::mem::replace(&mut seen[x - 1], true) {
                    return Err(fail("column entries are distinct"));
                }
            }
        }
        if seen.iter().any(|&b| !b) {
            return Err(fail("columns cover 1..=n"));
        }
        let heights: Vec<usize> = self.columns.iter().map(Vec::len).collect();
        if heights != self.nu.parts() {
            return Err(fail("column heights equal nu"));
        }
        for k in 1..=self.lambda.r() {
            let row_s1 = (self.lambda.d(k - 1) + 1..=self.lambda.d(k)).filter(|x| self.s1.contains(x)).count();
            if row_s1 != self.red[k - 1].len() {
                return Err(fail("|Red(k)| = |S_1(k)|"));
            }
            if let (Some(r), Some(b)) = (self.red[k - 1].last(), self.blue[k - 1].first()) {
                if r >= b {
                    return Err(fail("Red(k) precedes Blue(k)"));
                }
            }
        }
        if self.l.len() != self.s || self.l.windows(2).any(|w| w[0] >= w[1]) {
            return Err(fail("l is strictly increasing of length s"));
        }
        if self.m.len() != self.t.len() || self.t.len() != self.s2.len() {
            return Err(fail("|m| = |t| = |S_2|"));
        }
        let t_set: BTreeSet<usize> = self.t.iter().copied().collect();
        if t_set != self.s2 {
            return Err(fail("t enumerates S_2"));
        }
        if self.m.iter().zip(&self.t).any(|(&a, &b)| self.row_of(a) != self.row_of(b)) {
            return Err(fail("t(i) and m(i) share a row"));
        }
        let iota_image: BTreeSet<usize> = self.s2.iter().filter_map(|&x| self.iota(x)).collect();
        if iota_image.len() != self.s2.len() {
            return Err(fail("iota is injective on S_2"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_row() {
        let tab = TableauData::build(&"4".parse().unwrap());
        assert_eq!(tab.l, alloc::vec![1, 2, 3, 4]);
        assert!(tab.m.is_empty());
        assert_eq!(tab.s1.len(), 4);
    }

    #[test]
    fn two_singletons() {
        let tab = TableauData::build(&"1,1".parse().unwrap());
        assert_eq!(tab.columns, alloc::vec![alloc::vec![1, 2]]);
        assert_eq!(tab.l, alloc::vec![1]);
        assert_eq!(tab.m, alloc::vec![2]);
        assert_eq!(tab.iota(2), Some(1));
        assert_eq!(tab.iota(1), None);
    }

    #[test]
    fn worked_example() {
        let tab = TableauData::build(&"1,4,4,2,6".parse().unwrap());
        assert_eq!(tab.f(1, 4), 10);
        assert_eq!(tab.f(4, 3), 15);
        assert_eq!(tab.f(6, 1), 17);
        assert_eq!(tab.s1.iter().copied().collect::<Vec<_>>(), alloc::vec![1, 3, 4, 5, 16, 17]);
        assert_eq!(tab.l, alloc::vec![1, 2, 3, 4, 12, 13]);
        assert_eq!(tab.m, alloc::vec![14, 15, 16, 17, 10, 11, 6, 7, 8, 9, 5]);
    }
}
