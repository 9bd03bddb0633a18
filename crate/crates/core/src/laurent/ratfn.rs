//! Reduced rational functions over an exact field.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::gcd::gcd;
use super::poly::{Monomial, Poly};
use crate::scalar::FieldScalar;
use crate::Error;

/// `num / den` with `gcd(num, den) = 1` and `den` monic.
///
/// Because the form is canonical, `==` is equality of rational functions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFn<C> {
    num: Poly<C>,
    den: Poly<C>,
}

impl<C: FieldScalar> RationalFn<C> {
    /// Build and reduce `num / den`.
    pub fn new(num: Poly<C>, den: Poly<C>) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn from_poly(p: Poly<C>) -> Self {
        let n = p.nvars();
        RationalFn {
            num: p,
            den: Poly::one(n),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(Poly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(Poly::one(nvars))
    }

    pub fn from_int(nvars: usize, v: i64) -> Self {
        Self::from_poly(Poly::from_int(nvars, v))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_poly(Poly::var(nvars, i))
    }

    pub fn numer(&self) -> &Poly<C> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<C> {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<C> {
        if !self.den.is_constant() {
            return None;
        }
        self.num.constant_value()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// True when the denominator is a single monomial, i.e. the function is
    /// a Laurent polynomial.
    pub fn has_monomial_denominator(&self) -> bool {
        self.den.is_monomial()
    }

    fn reduce(num: Poly<C>, den: Poly<C>) -> Self {
        let n = num.nvars();
        if num.is_zero() {
            return Self::zero(n);
        }
        let m = num.monomial_content().gcd(&den.monomial_content());
        let (mut num, mut den) = if m.is_one() {
            (num, den)
        } else {
            (num.div_monomial(&m), den.div_monomial(&m))
        };

        if !den.is_constant() && !num.is_constant() {
            if den.is_monomial() {
                // Monomial content already removed: nothing left to cancel.
            } else if num.is_monomial() {
                // Likewise with the roles swapped.
            } else {
                let dm = den.monomial_content();
                let dpart = den.div_monomial(&dm);
                if let Some(q) = num.div_exact(&dpart) {
                    num = q;
                    den = Poly::monomial(n, dm, den.leading_coeff() / dpart.leading_coeff());
                    let m = num.monomial_content().gcd(&den.monomial_content());
                    num = num.div_monomial(&m);
                    den = den.div_monomial(&m);
                } else if let Some(q) = den.div_exact(&num) {
                    num = Poly::one(n);
                    den = q;
                } else {
                    let g = gcd(&num, &den);
                    if !g.is_one() {
                        num = num.div_exact(&g).expect("gcd divides numerator");
                        den = den.div_exact(&g).expect("gcd divides denominator");
                    }
                }
            }
        }

        let lc = den.leading_coeff();
        if !lc.is_one() {
            let inv = C::one() / lc;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFn { num, den }
    }

    pub fn inv(&self) -> Result<Self, Error> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Result<Self, Error> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs();
        // Powers of a reduced fraction stay reduced.
        let mut r = RationalFn {
            num: base.num.pow(e),
            den: base.den.pow(e),
        };
        r.normalize_sign();
        Ok(r)
    }

    fn normalize_sign(&mut self) {
        let lc = self.den.leading_coeff();
        if !lc.is_one() {
            let inv = C::one() / lc;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, Error> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &other.inv()?)
    }

    /// Evaluate at a point; `None` if the denominator vanishes there.
    pub fn eval(&self, point: &[C]) -> Option<C> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point) / d)
    }

    /// Compose with one rational function per variable, keeping the result
    /// as an unreduced pair `(N, D)`.
    ///
    /// Each image `p_i / q_i` is cleared using the per-variable degree of the
    /// numerator and denominator, so only one polynomial product per term is
    /// formed. This is what invariance checks want: they compare by
    /// cross-multiplication and never need the reduced form.
    pub fn substitute_raw(&self, images: &[RationalFn<C>]) -> Result<(Poly<C>, Poly<C>), Error> {
        if images.len() != self.nvars() {
            return Err(Error::Dimension {
                expected: self.nvars(),
                got: images.len(),
            });
        }
        let target = images.first().map_or(0, RationalFn::nvars);
        let nums: Vec<_> = images.iter().map(|r| r.num.clone()).collect();
        let dens: Vec<_> = images.iter().map(|r| r.den.clone()).collect();
        let deg = |p: &Poly<C>, i: usize| p.degree_in(i).unwrap_or(0);
        let cleared = |p: &Poly<C>| -> Poly<C> {
            let mut acc = Poly::zero(target);
            for (m, c) in p.terms() {
                let mut t = Poly::constant(target, c.clone());
                for i in 0..p.nvars() {
                    let e = m.0[i];
                    let d = deg(p, i);
                    if e > 0 {
                        t = &t * &nums[i].pow(e);
                    }
                    if d > e {
                        t = &t * &dens[i].pow(d - e);
                    }
                }
                acc = &acc + &t;
            }
            acc
        };
        let mut n = cleared(&self.num);
        let mut d = cleared(&self.den);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        for i in 0..self.nvars() {
            let (dn, dd) = (deg(&self.num, i), deg(&self.den, i));
            if dd > dn {
                n = &n * &dens[i].pow(dd - dn);
            } else if dn > dd {
                d = &d * &dens[i].pow(dn - dd);
            }
        }
        Ok((n, d))
    }

    /// Exact composition, reduced.
    pub fn substitute(&self, images: &[RationalFn<C>]) -> Result<Self, Error> {
        let (n, d) = self.substitute_raw(images)?;
        Self::new(n, d)
    }

    /// Does `n / d` equal `self`? Compared without any gcd.
    pub fn equals_fraction(&self, n: &Poly<C>, d: &Poly<C>) -> bool {
        &self.num * d == n * &self.den
    }

    pub fn map_coeffs<D: FieldScalar>(&self, f: impl Fn(&C) -> D) -> RationalFn<D> {
        RationalFn::reduce(self.num.map_coeffs(&f), self.den.map_coeffs(&f))
    }

    /// Multiply by a monomial `x^m` (exponents may be negative).
    pub fn mul_laurent_monomial(&self, exps: &[i32]) -> Self {
        let n = self.nvars();
        let up = Monomial(exps.iter().map(|&e| e.max(0) as u32).collect());
        let down = Monomial(exps.iter().map(|&e| (-e).max(0) as u32).collect());
        debug_assert_eq!(up.0.len(), n);
        Self::reduce(self.num.mul_monomial(&up), self.den.mul_monomial(&down))
    }
}

impl<'a, C: FieldScalar> Add for &'a RationalFn<C> {
    type Output = RationalFn<C>;

    fn add(self, rhs: &'a RationalFn<C>) -> RationalFn<C> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFn::reduce(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_monomial() && rhs.den.is_monomial() {
            let (ma, _) = self
                .den
                .leading()
                .map(|(m, c)| (m.clone(), c.clone()))
                .unwrap();
            let (mb, _) = rhs
                .den
                .leading()
                .map(|(m, c)| (m.clone(), c.clone()))
                .unwrap();
            let l = ma.lcm(&mb);
            let fa = l.checked_div(&ma).unwrap();
            let fb = l.checked_div(&mb).unwrap();
            let n = &self.num.mul_monomial(&fa) + &rhs.num.mul_monomial(&fb);
            return RationalFn::reduce(n, Poly::monomial(self.nvars(), l, C::one()));
        }
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFn::reduce(n, &self.den * &rhs.den)
    }
}

impl<'a, C: FieldScalar> Neg for &'a RationalFn<C> {
    type Output = RationalFn<C>;

    fn neg(self) -> RationalFn<C> {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<'a, C: FieldScalar> Sub for &'a RationalFn<C> {
    type Output = RationalFn<C>;

    fn sub(self, rhs: &'a RationalFn<C>) -> RationalFn<C> {
        self + &(-rhs)
    }
}

impl<'a, C: FieldScalar> Mul for &'a RationalFn<C> {
    type Output = RationalFn<C>;

    fn mul(self, rhs: &'a RationalFn<C>) -> RationalFn<C> {
        if self.is_zero() || rhs.is_zero() {
            return RationalFn::zero(self.nvars());
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFn::from_poly(&self.num * &rhs.num);
        }
        RationalFn::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a, C: FieldScalar> Div for &'a RationalFn<C> {
    type Output = RationalFn<C>;

    /// Panics on division by zero; see [`RationalFn::checked_div`].
    fn div(self, rhs: &'a RationalFn<C>) -> RationalFn<C> {
        self.checked_div(rhs)
            .expect("division by zero rational function")
    }
}

macro_rules! owned_op {
    ($tr:ident, $f:ident) => {
        impl<C: FieldScalar> $tr for RationalFn<C> {
            type Output = RationalFn<C>;
            fn $f(self, rhs: RationalFn<C>) -> RationalFn<C> {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_op!(Add, add);
owned_op!(Sub, sub);
owned_op!(Mul, mul);
owned_op!(Div, div);

impl<C: FieldScalar> fmt::Display for RationalFn<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        // Parenthesise anything that is not a single atom, so the output
        // parses back to the same value.
        let wrap = |p: &Poly<C>| {
            let s = p.to_string();
            if s.contains([' ', '*', '/']) || s.starts_with('-') {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::QRationalFn;

    fn x(i: usize) -> QRationalFn {
        RationalFn::var(2, i)
    }

    #[test]
    fn ratio_of_inverse_pair_is_one() {
        let a = &x(0) / &x(1);
        let b = &x(1) / &x(0);
        assert!((&a * &b).is_constant());
        assert_eq!(&a * &b, QRationalFn::one(2));
    }

    #[test]
    fn difference_of_squares_cancels() {
        let n = &(&x(0) * &x(0)) - &(&x(1) * &x(1));
        let d = &x(0) - &x(1);
        assert_eq!(&n / &d, &x(0) + &x(1));
    }

    #[test]
    fn exchange_then_multiply_back() {
        let one = QRationalFn::one(2);
        let t = &(&(&x(1) * &x(1)) + &one) / &x(0);
        assert_eq!(&t * &x(0), &(&x(1) * &x(1)) + &one);
    }

    #[test]
    fn rank_two_markov_invariant_survives_exchange() {
        let one = QRationalFn::one(2);
        let t = &(&(&(&x(0) * &x(0)) + &(&x(1) * &x(1))) + &one) / &(&x(0) * &x(1));
        let mu1 = &(&(&x(1) * &x(1)) + &one) / &x(0);
        assert_eq!(t.substitute(&[mu1, x(1)]).unwrap(), t);
    }
}
