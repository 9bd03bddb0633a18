//! Sparse multivariate polynomials with exact coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::FieldScalar;

/// Exponent vector ordered graded-lexicographically with `x1 > x2 > ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `nvars` positional variables `x1..xn` (indices `0..n`).
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<C> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: FieldScalar> Poly<C> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(nvars, Monomial::one(nvars), c)
    }

    pub fn from_int(nvars: usize, v: i64) -> Self {
        Self::constant(nvars, C::from_int(v))
    }

    /// The variable `x_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(
            i < nvars,
            "variable index {i} out of range for {nvars} variables"
        );
        Self::monomial(nvars, Monomial::var(nvars, i), C::one())
    }

    pub fn monomial(nvars: usize, m: Monomial, c: C) -> Self {
        debug_assert_eq!(m.0.len(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { nvars, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, C)>>(nvars: usize, terms: I) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector has wrong length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().map_or(false, |c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial (`0` for the zero polynomial).
    pub fn constant_value(&self) -> Option<C> {
        if self.is_zero() {
            return Some(C::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Leading term under the graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> C {
        self.leading()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(C::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing = existing.clone() + c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    /// Divide every term by `m`; `m` must divide each term.
    pub fn div_monomial(&self, m: &Monomial) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| {
                    (
                        k.checked_div(m).expect("monomial does not divide term"),
                        v.clone(),
                    )
                })
                .collect(),
        }
    }

    /// The largest monomial dividing every term (`1` for the zero polynomial).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(self.nvars),
            Some(first) => it.fold(first.clone(), |acc, m| acc.gcd(m)),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Make the leading coefficient 1 (no-op on zero).
    pub fn monic(&self) -> Self {
        let lc = self.leading_coeff();
        if lc.is_zero() || lc.is_one() {
            return self.clone();
        }
        let inv = C::one() / lc;
        self.scale(&inv)
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Poly<C>) -> Option<Poly<C>> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        if let Some(c) = divisor.constant_value() {
            return Some(self.scale(&(C::one() / c)));
        }
        if divisor.total_degree() > self.total_degree() {
            return None;
        }
        for v in 0..self.nvars {
            if divisor.degree_in(v) > self.degree_in(v) {
                return None;
            }
        }
        let (lm, lc) = {
            let (m, c) = divisor.leading().expect("nonzero divisor");
            (m.clone(), c.clone())
        };
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((m, c)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = m.checked_div(&lm)?;
            let qc = c / lc.clone();
            rem = &rem - &divisor.mul_monomial(&qm).scale(&qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `var`;
    /// entry `i` multiplies `x_var^i` and no longer involves `var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Poly<C>> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(self.nvars); deg + 1];
        for (m, c) in &self.terms {
            let i = m.0[var] as usize;
            let mut rest = m.clone();
            rest.0[var] = 0;
            out[i].add_term(rest, c.clone());
        }
        out
    }

    /// Inverse of [`Poly::coefficients_in`].
    pub fn from_coefficients_in(nvars: usize, var: usize, coeffs: &[Poly<C>]) -> Self {
        let mut acc = Self::zero(nvars);
        for (i, c) in coeffs.iter().enumerate() {
            let mut shift = Monomial::one(nvars);
            shift.0[var] = i as u32;
            acc = &acc + &c.mul_monomial(&shift);
        }
        acc
    }

    /// Evaluate at a point.
    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.nvars);
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, e) in point.iter().zip(&m.0) {
                for _ in 0..*e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Substitute a polynomial for every variable. The result lives in the
    /// images' ring.
    pub fn compose(&self, images: &[Poly<C>]) -> Poly<C> {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, Poly::nvars);
        let mut powers: Vec<Vec<Poly<C>>> =
            images.iter().map(|p| vec![Poly::one(p.nvars)]).collect();
        let mut acc = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, e) in m.0.iter().enumerate() {
                let e = *e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    t = &t * &powers[i][e];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Reinterpret in a ring with more variables (new variables appended).
    pub fn extend_vars(&self, nvars: usize) -> Poly<C> {
        assert!(nvars >= self.nvars);
        Poly {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.resize(nvars, 0);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    pub fn map_coeffs<D: FieldScalar>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl<'a, C: FieldScalar> Add for &'a Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: &'a Poly<C>) -> Poly<C> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let (mut acc, other) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &other.terms {
            acc.add_term(m.clone(), c.clone());
        }
        acc
    }
}

impl<'a, C: FieldScalar> Sub for &'a Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: &'a Poly<C>) -> Poly<C> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut acc = self.clone();
        for (m, c) in &rhs.terms {
            acc.add_term(m.clone(), -c.clone());
        }
        acc
    }
}

impl<'a, C: FieldScalar> Mul for &'a Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: &'a Poly<C>) -> Poly<C> {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut acc = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                acc.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        acc
    }
}

impl<C: FieldScalar> Neg for &Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<C: FieldScalar> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Poly<C>) -> Poly<C> {
        &self + &rhs
    }
}

impl<C: FieldScalar> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Poly<C>) -> Poly<C> {
        &self - &rhs
    }
}

impl<C: FieldScalar> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        &self * &rhs
    }
}

impl<C: FieldScalar> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

pub(crate) fn write_monomial(f: &mut fmt::Formatter<'_>, exps: &[i64]) -> fmt::Result {
    let mut first = true;
    for (i, e) in exps.iter().enumerate() {
        if *e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if *e == 1 {
            write!(f, "x{}", i + 1)?;
        } else {
            write!(f, "x{}^{}", i + 1, e)?;
        }
    }
    Ok(())
}

/// Write a sum of terms, highest first, e.g. `x1^2 + 2*x1*x2 - 1`.
pub(crate) fn write_terms<'a, C: FieldScalar + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (Vec<i64>, &'a C)>,
) -> fmt::Result {
    let mut first = true;
    for (exps, c) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        let is_unit_monomial = exps.iter().all(|e| *e == 0);
        if is_unit_monomial {
            write!(f, "{abs}")?;
        } else {
            if !abs.is_one() {
                let s = abs.to_string();
                if s.contains('/') {
                    write!(f, "({s})*")?;
                } else {
                    write!(f, "{s}*")?;
                }
            }
            write_monomial(f, &exps)?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl<C: FieldScalar> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms
                .iter()
                .rev()
                .map(|(m, c)| (m.0.iter().map(|&e| e as i64).collect(), c)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::QPoly;

    fn x(i: usize) -> QPoly {
        Poly::var(2, i)
    }

    #[test]
    fn graded_lex_leading_term() {
        let p = &(&x(0) * &x(1)) + &x(0).pow(2);
        let p = &p + &x(1).pow(2);
        assert_eq!(p.leading().unwrap().0, &Monomial(vec![2, 0]));
    }

    #[test]
    fn exact_division_detects_remainders() {
        let a = &x(0).pow(2) - &x(1).pow(2);
        let b = &x(0) - &x(1);
        assert_eq!(a.div_exact(&b).unwrap(), &x(0) + &x(1));
        assert!(a.div_exact(&(&x(0) + &QPoly::one(2))).is_none());
    }

    #[test]
    fn compose_substitutes_all_variables() {
        let p = &x(0).pow(2) + &x(1);
        let images = [&x(0) + &x(1), x(0)];
        let q = p.compose(&images);
        let expect = &(&x(0) + &x(1)).pow(2) + &x(0);
        assert_eq!(q, expect);
    }

    #[test]
    fn display_is_readable() {
        let p = &(&x(0).pow(2) - &x(1).scale(&crate::scalar::FieldScalar::from_int(3)))
            + &QPoly::one(2);
        assert_eq!(p.to_string(), "x1^2 - 3*x2 + 1");
    }
}
