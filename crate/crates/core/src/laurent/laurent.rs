//! Laurent polynomials: polynomials whose exponents may be negative.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_traits::Zero;

use super::poly::{write_terms, Monomial, Poly};
use super::ratfn::RationalFn;
use crate::scalar::FieldScalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly<C> {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, C>,
}

impl<C: FieldScalar> LaurentPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<i32>, C)>>(nvars: usize, terms: I) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector has wrong length");
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Vec<i32>, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[i32]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// The smallest `(u_1, .., u_n)`, all `>= 0`, such that
    /// `x^u * self` is a polynomial.
    pub fn denominator_exponents(&self) -> Vec<u32> {
        let mut u = vec![0u32; self.nvars];
        for e in self.terms.keys() {
            for (ui, ei) in u.iter_mut().zip(e) {
                if *ei < 0 {
                    *ui = (*ui).max(ei.unsigned_abs());
                }
            }
        }
        u
    }

    /// Write as `f / x^u` with `u` from [`LaurentPoly::denominator_exponents`].
    pub fn split(&self) -> (Poly<C>, Monomial) {
        let u = self.denominator_exponents();
        let mut f = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let shifted = e
                .iter()
                .zip(&u)
                .map(|(ei, ui)| (ei + *ui as i32) as u32)
                .collect();
            f.add_term(Monomial(shifted), c.clone());
        }
        (f, Monomial(u))
    }

    pub fn to_rational(&self) -> RationalFn<C> {
        let (f, m) = self.split();
        RationalFn::new(f, Poly::monomial(self.nvars, m, C::one()))
            .expect("monomial denominator is nonzero")
    }

    /// Present iff the reduced denominator of `r` is a monomial.
    pub fn from_rational(r: &RationalFn<C>) -> Option<Self> {
        if !r.has_monomial_denominator() {
            return None;
        }
        let (dm, dc) = r.denom().leading()?;
        let n = r.nvars();
        let mut out = Self::zero(n);
        for (m, c) in r.numer().terms() {
            let e =
                m.0.iter()
                    .zip(&dm.0)
                    .map(|(a, b)| *a as i32 - *b as i32)
                    .collect();
            out.add_term(e, c.clone() / dc.clone());
        }
        Some(out)
    }

    pub fn eval(&self, point: &[C]) -> Option<C> {
        if point.iter().any(Zero::is_zero) {
            return None;
        }
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, ei) in point.iter().zip(e) {
                let base = if *ei < 0 {
                    C::one() / x.clone()
                } else {
                    x.clone()
                };
                for _ in 0..ei.unsigned_abs() {
                    t = t * base.clone();
                }
            }
            acc = acc + t;
        }
        Some(acc)
    }
}

impl<'a, C: FieldScalar> Add for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn add(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a, C: FieldScalar> Mul for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn mul(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = LaurentPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: FieldScalar> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by(|a, b| {
            let da: i32 = a.0.iter().sum();
            let db: i32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        write_terms(
            f,
            keys.into_iter()
                .map(|(e, c)| (e.iter().map(|&v| v as i64).collect(), c)),
        )
    }
}
