//! Multivariate gcd by recursive content / primitive-part splitting.
//!
//! The main variable at each level is the highest-index variable present;
//! remainders come from a lazy pseudo-division, and are made primitive after
//! every step so coefficient growth stays modest at the degrees we need.

use super::poly::Poly;
use crate::scalar::FieldScalar;

/// Monic gcd of `a` and `b`. `gcd(0, 0) = 0`.
pub fn gcd<C: FieldScalar>(a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
    let n = a.nvars();
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(n);
    }

    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let m = ma.gcd(&mb);
    let a = a.div_monomial(&ma);
    let b = b.div_monomial(&mb);
    let mono = Poly::monomial(n, m, C::one());

    // Cheap exits before the full recursion.
    if a.is_constant() || b.is_constant() {
        return mono;
    }
    if a.len() <= b.len() {
        if b.div_exact(&a).is_some() {
            return (&mono * &a).monic();
        }
    } else if a.div_exact(&b).is_some() {
        return (&mono * &b).monic();
    }

    (&mono * &gcd_no_monomial(&a, &b)).monic()
}

fn main_var<C: FieldScalar>(a: &Poly<C>, b: &Poly<C>) -> Option<usize> {
    (0..a.nvars())
        .rev()
        .find(|&v| a.uses_var(v) || b.uses_var(v))
}

/// gcd of several polynomials.
pub fn gcd_many<'a, C: FieldScalar + 'a>(
    polys: impl IntoIterator<Item = &'a Poly<C>>,
    nvars: usize,
) -> Poly<C> {
    let mut acc = Poly::zero(nvars);
    for p in polys {
        acc = gcd(&acc, p);
        if acc.is_one() {
            break;
        }
    }
    acc
}

/// Content of `p` with respect to `var`: the gcd of its coefficients.
pub fn content_in<C: FieldScalar>(p: &Poly<C>, var: usize) -> Poly<C> {
    let coeffs = p.coefficients_in(var);
    gcd_many(coeffs.iter().filter(|c| !c.is_zero()), p.nvars())
}

fn gcd_no_monomial<C: FieldScalar>(a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
    let n = a.nvars();
    let Some(v) = main_var(a, b) else {
        return Poly::one(n);
    };
    match (a.uses_var(v), b.uses_var(v)) {
        (true, false) => return gcd_many(std::iter::once(b).chain(&a.coefficients_in(v)), n),
        (false, true) => return gcd_many(std::iter::once(a).chain(&b.coefficients_in(v)), n),
        _ => {}
    }

    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let cont = gcd(&ca, &cb);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }

    loop {
        let r = pseudo_rem(&p, &q, v);
        if r.is_zero() {
            return &cont * &q.monic();
        }
        if !r.uses_var(v) {
            return cont;
        }
        let rc = content_in(&r, v);
        p = q;
        q = r.div_exact(&rc).expect("content divides").monic();
    }
}

/// Pseudo-remainder of `p` by `q` in `var`; `q` must involve `var`.
pub fn pseudo_rem<C: FieldScalar>(p: &Poly<C>, q: &Poly<C>, var: usize) -> Poly<C> {
    let dq = q.degree_in(var).unwrap_or(0);
    let qc = q.coefficients_in(var);
    let lq = qc[dq as usize].clone();
    let mut r = p.clone();
    while !r.is_zero() {
        let dr = r.degree_in(var).unwrap_or(0);
        if dr < dq {
            break;
        }
        let lr = r.coefficients_in(var).swap_remove(dr as usize);
        let mut shift = super::poly::Monomial::one(r.nvars());
        shift.0[var] = dr - dq;
        let sub = (&lr * q).mul_monomial(&shift);
        r = &(&lq * &r) - &sub;
        // Dividing out scalar content keeps rationals small.
        let lc = r.leading_coeff();
        if !lc.is_zero() {
            r = r.monic();
        }
    }
    r
}
