//! Laurent polynomials in one variable `t` over an exact field.

use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::field::{Field, Rational};

/// Order of vanishing at `t = 0`. The zero polynomial has order [`Order::Infinity`],
/// which compares greater than every finite order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(i64),
    Infinity,
}

impl Order {
    pub fn finite(self) -> Option<i64> {
        match self {
            Order::Finite(k) => Some(k),
            Order::Infinity => None,
        }
    }
}

/// A Laurent polynomial, stored sparsely as exponent -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<F: Field = Rational> {
    terms: BTreeMap<i64, F>,
}

impl<F: Field> Default for LaurentPoly<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> LaurentPoly<F> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^exp`.
    pub fn monomial(c: F, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// `t^exp`.
    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(F::one(), exp)
    }

    pub fn from_i64(v: i64) -> Self {
        Self::constant(F::from_i64(v))
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i64, F)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, &c);
        }
        p
    }

    /// Integer coefficients, for tests and literals: `[(exp, coeff), ...]`.
    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, F::from_i64(c))))
    }

    pub fn add_term(&mut self, exp: i64, c: &F) {
        if c.is_zero() {
            return;
        }
        let remove = match self.terms.get_mut(&exp) {
            Some(existing) => {
                *existing = existing.add(c);
                existing.is_zero()
            }
            None => {
                self.terms.insert(exp, c.clone());
                false
            }
        };
        if remove {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &F)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> F {
        self.terms.get(&exp).cloned().unwrap_or_else(F::zero)
    }

    /// Least exponent carrying a nonzero coefficient.
    pub fn ord(&self) -> Order {
        match self.terms.keys().next() {
            Some(&e) => Order::Finite(e),
            None => Order::Infinity,
        }
    }

    /// Greatest exponent carrying a nonzero coefficient; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.values().next_back()
    }

    /// True when no negative power of `t` occurs, i.e. the value lies in `k[t]`.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().next().is_none_or(|&e| e >= 0)
    }

    /// True when no positive power of `t` occurs, i.e. the value lies in `k[t^-1]`.
    pub fn is_polynomial_in_inverse(&self) -> bool {
        self.terms.keys().next_back().is_none_or(|&e| e <= 0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    /// `Some((c, k))` when the value is the unit `c * t^k` of `k[t, t^-1]`.
    pub fn as_unit(&self) -> Option<(F, i64)> {
        if self.terms.len() == 1 {
            let (&e, c) = self.terms.iter().next()?;
            Some((c.clone(), e))
        } else {
            None
        }
    }

    pub fn constant_term(&self) -> F {
        self.coeff(0)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, v.mul(c))).collect(),
        }
    }

    /// Terms with exponent strictly below `bound`.
    pub fn truncate_below(&self, bound: i64) -> Self {
        LaurentPoly {
            terms: self.terms.range(..bound).map(|(&e, c)| (e, c.clone())).collect(),
        }
    }

    /// Substitute `t -> t^-1`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Scaled to leading coefficient one. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff().and_then(F::inv) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Euclidean division in `k[t]`. Both operands must be polynomials and
    /// `divisor` nonzero; returns `(quotient, remainder)` with
    /// `deg(remainder) < deg(divisor)`.
    pub fn div_rem_poly(&self, divisor: &Self) -> (Self, Self) {
        debug_assert!(self.is_polynomial() && divisor.is_polynomial());
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor
            .leading_coeff()
            .and_then(F::inv)
            .expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading_coeff().unwrap().mul(&lead_inv);
            let shift = rd - dd;
            quot.add_term(shift, &c);
            for (e, v) in divisor.terms() {
                rem.add_term(e + shift, &v.mul(&c).neg());
            }
        }
        (quot, rem)
    }

    /// Exact division in `k[t, t^-1]`; `None` when `divisor` does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let od = divisor.ord().finite()?;
        let Order::Finite(on) = self.ord() else {
            return Some(Self::zero());
        };
        let num = self.shift(-on);
        let den = divisor.shift(-od);
        let (q, r) = num.div_rem_poly(&den);
        if r.is_zero() {
            Some(q.shift(on - od))
        } else {
            None
        }
    }

    /// Apply `f` to every coefficient, dropping any that become zero.
    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> LaurentPoly<G> {
        LaurentPoly::from_terms(self.terms.iter().map(|(&e, c)| (e, f(c))))
    }
}

impl<F: Field> Add for &LaurentPoly<F> {
    type Output = LaurentPoly<F>;

    fn add(self, rhs: Self) -> LaurentPoly<F> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl<F: Field> Sub for &LaurentPoly<F> {
    type Output = LaurentPoly<F>;

    fn sub(self, rhs: Self) -> LaurentPoly<F> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, &c.neg());
        }
        out
    }
}

impl<F: Field> Mul for &LaurentPoly<F> {
    type Output = LaurentPoly<F>;

    // exponents add under multiplication
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> LaurentPoly<F> {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, &ca.mul(cb));
            }
        }
        out
    }
}

impl<F: Field> Neg for &LaurentPoly<F> {
    type Output = LaurentPoly<F>;

    fn neg(self) -> LaurentPoly<F> {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, c.neg())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for LaurentPoly<F> {
            type Output = LaurentPoly<F>;

            fn $m(self, rhs: Self) -> LaurentPoly<F> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<F: Field> Neg for LaurentPoly<F> {
    type Output = LaurentPoly<F>;

    fn neg(self) -> LaurentPoly<F> {
        -&self
    }
}

impl<F: Field> fmt::Display for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let s = alloc::format!("{c}");
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, s.as_str()),
            };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = mag == "1";
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}")?;
                    }
                    if e == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
