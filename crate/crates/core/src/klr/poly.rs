//! Sparse multivariate polynomials over the scalar field `Q(q)` and the
//! rational functions needed by the faithful polynomial representation.
//!
//! Divided differences introduce denominators that are always products of
//! the linear forms `x_a - x_b`; [`MRat`] therefore keeps its denominator
//! as a factored multiset of such forms.  Because those factors are
//! irreducible and monic, the reduced representation is canonical and
//! structural equality is mathematical equality.

use std::collections::BTreeMap;
use std::fmt;

use crate::qarith::QRat;

use super::words::Perm;

/// Sparse multivariate polynomial in `x_1 .. x_d` over `Q(q)`.
///
/// Keys are exponent vectors of fixed length `d`; no stored coefficient is
/// zero.  The `BTreeMap` order on exponent vectors is the lex order used
/// for division.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    d: usize,
    terms: BTreeMap<Vec<u16>, QRat>,
}

impl MPoly {
    pub fn zero(d: usize) -> Self {
        MPoly { d, terms: BTreeMap::new() }
    }

    pub fn constant(d: usize, c: QRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; d], c);
        }
        MPoly { d, terms }
    }

    pub fn one(d: usize) -> Self {
        Self::constant(d, QRat::one())
    }

    /// The variable `x_k` (0-based).
    pub fn var(d: usize, k: usize) -> Self {
        assert!(k < d);
        let mut e = vec![0; d];
        e[k] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, QRat::one());
        MPoly { d, terms }
    }

    /// `x_a - x_b` (0-based).
    pub fn linear_diff(d: usize, a: usize, b: usize) -> Self {
        &Self::var(d, a) - &Self::var(d, b)
    }

    pub fn monomial(d: usize, exps: Vec<u16>, c: QRat) -> Self {
        assert_eq!(exps.len(), d);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MPoly { d, terms }
    }

    pub fn nvars(&self) -> usize {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().map_or(false, |(e, c)| {
                e.iter().all(|&x| x == 0) && c.is_one()
            })
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &QRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert_add(terms: &mut BTreeMap<Vec<u16>, QRat>, e: Vec<u16>, c: QRat) {
        if c.is_zero() {
            return;
        }
        match terms.get_mut(&e) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    terms.remove(&e);
                }
            }
            None => {
                terms.insert(e, c);
            }
        }
    }

    pub fn scaled(&self, c: &QRat) -> Self {
        if c.is_zero() {
            return Self::zero(self.d);
        }
        MPoly {
            d: self.d,
            terms: self.terms.iter().map(|(e, co)| (e.clone(), co * c)).collect(),
        }
    }

    /// Act by a permutation of the variables: `x_k -> x_{w(k)}`.
    pub fn permuted(&self, w: &Perm) -> Self {
        assert_eq!(w.len(), self.d);
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut out = vec![0u16; self.d];
            for (k, &exp) in e.iter().enumerate() {
                out[w.image(k)] = exp;
            }
            terms.insert(out, c.clone());
        }
        MPoly { d: self.d, terms }
    }

    /// Leading term in lex order.
    fn leading(&self) -> Option<(&Vec<u16>, &QRat)> {
        self.terms.iter().next_back()
    }

    /// Exact division: `Some(self / g)` when the division leaves no
    /// remainder, `None` otherwise.
    pub fn exact_div(&self, g: &MPoly) -> Option<MPoly> {
        assert_eq!(self.d, g.d);
        assert!(!g.is_zero(), "division by zero polynomial");
        let (ge, gc) = g.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.d);
        while !rem.is_zero() {
            let (re, rc) = rem.leading().unwrap();
            let mut te = vec![0u16; self.d];
            for k in 0..self.d {
                if re[k] < ge[k] {
                    return None;
                }
                te[k] = re[k] - ge[k];
            }
            let t = MPoly::monomial(self.d, te, rc / gc);
            rem = &rem - &(&t * g);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Embed a polynomial in fewer variables by sending its `k`-th variable
    /// to variable `positions[k]` (0-based) of a `d`-variable ring.
    pub fn embedded(&self, d: usize, positions: &[usize]) -> MPoly {
        assert_eq!(positions.len(), self.d);
        assert!(positions.iter().all(|&p| p < d));
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut out = vec![0u16; d];
            for (k, &exp) in e.iter().enumerate() {
                out[positions[k]] += exp;
            }
            MPoly::insert_add(&mut terms, out, c.clone());
        }
        MPoly { d, terms }
    }

    /// Total degree in the `x`-variables, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u16> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// True when every term is fixed by swapping all variables by `w`.
    pub fn is_symmetric_under(&self, w: &Perm) -> bool {
        self.permuted(w) == *self
    }
}

impl std::ops::Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.d, rhs.d);
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            MPoly::insert_add(&mut terms, e.clone(), c.clone());
        }
        MPoly { d: self.d, terms }
    }
}

impl std::ops::Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.d, rhs.d);
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            MPoly::insert_add(&mut terms, e.clone(), -c);
        }
        MPoly { d: self.d, terms }
    }
}

impl std::ops::Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.d, rhs.d);
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u16> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                MPoly::insert_add(&mut terms, e, ca * cb);
            }
        }
        MPoly { d: self.d, terms }
    }
}

impl std::ops::Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            d: self.d,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let trivial_exp = e.iter().all(|&x| x == 0);
            let simple = c.is_one() && !trivial_exp;
            if !simple {
                write!(f, "({})", c)?;
            }
            let mut started = !simple;
            for (k, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if started {
                    write!(f, "*")?;
                }
                started = true;
                write!(f, "x({})", k + 1)?;
                if exp > 1 {
                    write!(f, "^{}", exp)?;
                }
            }
        }
        Ok(())
    }
}

/// Rational function in `x_1 .. x_d` whose denominator is a product of
/// linear forms `x_a - x_b` with `a < b`, kept fully reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MRat {
    num: MPoly,
    /// `(a, b) -> multiplicity` with `a < b` (0-based), representing
    /// `prod (x_a - x_b)^mult`.  Empty for polynomials.
    den: BTreeMap<(usize, usize), u32>,
}

impl MRat {
    pub fn from_poly(num: MPoly) -> Self {
        MRat { num, den: BTreeMap::new() }
    }

    pub fn zero(d: usize) -> Self {
        Self::from_poly(MPoly::zero(d))
    }

    pub fn one(d: usize) -> Self {
        Self::from_poly(MPoly::one(d))
    }

    /// `num / (x_a - x_b)` (0-based, `a < b`), reduced.
    pub fn quotient_by_diff(num: MPoly, a: usize, b: usize) -> Self {
        assert!(a < b);
        let mut den = BTreeMap::new();
        den.insert((a, b), 1);
        let mut r = MRat { num, den };
        r.reduce();
        r
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &MPoly {
        &self.num
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_poly(&self) -> Option<&MPoly> {
        if self.den.is_empty() {
            Some(&self.num)
        } else {
            None
        }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let d = self.num.nvars();
        let keys: Vec<(usize, usize)> = self.den.keys().copied().collect();
        for key in keys {
            let factor = MPoly::linear_diff(d, key.0, key.1);
            while self.den.get(&key).copied().unwrap_or(0) > 0 {
                match self.num.exact_div(&factor) {
                    Some(q) => {
                        self.num = q;
                        let m = self.den.get_mut(&key).unwrap();
                        *m -= 1;
                        if *m == 0 {
                            self.den.remove(&key);
                        }
                    }
                    None => break,
                }
            }
        }
    }

    fn den_poly(&self) -> MPoly {
        let d = self.num.nvars();
        let mut acc = MPoly::one(d);
        for (&(a, b), &m) in &self.den {
            let factor = MPoly::linear_diff(d, a, b);
            for _ in 0..m {
                acc = &acc * &factor;
            }
        }
        acc
    }

    pub fn scaled(&self, c: &QRat) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars());
        }
        MRat { num: self.num.scaled(c), den: self.den.clone() }
    }

    /// Act by a permutation of the variables on both numerator and the
    /// factored denominator, tracking signs of flipped factors.
    pub fn permuted(&self, w: &Perm) -> Self {
        let mut num = self.num.permuted(w);
        let mut den = BTreeMap::new();
        for (&(a, b), &m) in &self.den {
            let (wa, wb) = (w.image(a), w.image(b));
            let key = if wa < wb {
                (wa, wb)
            } else {
                if m % 2 == 1 {
                    num = -&num;
                }
                (wb, wa)
            };
            *den.entry(key).or_insert(0) += m;
        }
        MRat { num, den }
    }

    /// Exact quotient `self / rhs` as a polynomial; `None` when the
    /// quotient is not polynomial.
    pub fn exact_poly_quotient(&self, rhs: &MRat) -> Option<MPoly> {
        if self.is_zero() {
            return Some(MPoly::zero(self.nvars()));
        }
        // self / rhs = (self.num * rhs.den) / (rhs.num * self.den).
        let scaled_num = &self.num * &rhs.den_poly();
        let q = scaled_num.exact_div(&rhs.num)?;
        let mut candidate = MRat { num: q, den: self.den.clone() };
        candidate.reduce();
        candidate.as_poly().cloned()
    }
}

impl std::ops::Add for &MRat {
    type Output = MRat;
    fn add(self, rhs: &MRat) -> MRat {
        // Common denominator: max multiplicity per factor.
        let mut common: BTreeMap<(usize, usize), u32> = self.den.clone();
        for (&k, &m) in &rhs.den {
            let e = common.entry(k).or_insert(0);
            *e = (*e).max(m);
        }
        let d = self.nvars();
        let scale = |num: &MPoly, den: &BTreeMap<(usize, usize), u32>| {
            let mut acc = num.clone();
            for (&(a, b), &m) in &common {
                let have = den.get(&(a, b)).copied().unwrap_or(0);
                let factor = MPoly::linear_diff(d, a, b);
                for _ in have..m {
                    acc = &acc * &factor;
                }
            }
            acc
        };
        let num = &scale(&self.num, &self.den) + &scale(&rhs.num, &rhs.den);
        let mut out = MRat { num, den: common };
        out.reduce();
        out
    }
}

impl std::ops::Sub for &MRat {
    type Output = MRat;
    fn sub(self, rhs: &MRat) -> MRat {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &MRat {
    type Output = MRat;
    fn mul(self, rhs: &MRat) -> MRat {
        let num = &self.num * &rhs.num;
        let mut den = self.den.clone();
        for (&k, &m) in &rhs.den {
            *den.entry(k).or_insert(0) += m;
        }
        let mut out = MRat { num, den };
        out.reduce();
        out
    }
}

impl std::ops::Neg for &MRat {
    type Output = MRat;
    fn neg(self) -> MRat {
        MRat { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for MRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / (", self.num)?;
        let mut first = true;
        for (&(a, b), &m) in &self.den {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "(x({})-x({}))", a + 1, b + 1)?;
            if m > 1 {
                write!(f, "^{}", m)?;
            }
        }
        write!(f, ")")
    }
}

/// Divided difference `(r_t f - f) / (x_t - x_{t+1})` (0-based `t`); the
/// result is always a polynomial.
pub fn divided_difference(f: &MPoly, t: usize) -> MPoly {
    let d = f.nvars();
    assert!(t + 1 < d);
    let w = Perm::transposition(d, t);
    let num = &f.permuted(&w) - f;
    num.exact_div(&MPoly::linear_diff(d, t, t + 1))
        .expect("divided difference is always polynomial")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(d: usize, k: usize) -> MPoly {
        MPoly::var(d, k)
    }

    #[test]
    fn exact_division_detects_divisibility() {
        let d = 3;
        let f = &(&x(d, 0) - &x(d, 1)) * &(&x(d, 0) + &x(d, 2));
        let g = MPoly::linear_diff(d, 0, 1);
        assert_eq!(f.exact_div(&g).unwrap(), &x(d, 0) + &x(d, 2));
        let h = &f + &MPoly::one(d);
        assert!(h.exact_div(&g).is_none());
    }

    #[test]
    fn divided_difference_of_symmetric_vanishes() {
        let d = 2;
        let sym = &(&x(d, 0) * &x(d, 1)) + &(&x(d, 0) + &x(d, 1));
        assert!(divided_difference(&sym, 0).is_zero());
        // del(x_1) = 1 under the (r f - f)/(x_t - x_{t+1}) convention... here
        // del(x_0) = (x_1 - x_0)/(x_0 - x_1) = -1.
        assert_eq!(divided_difference(&x(d, 0), 0), MPoly::constant(d, QRat::from_int(-1)));
        assert_eq!(divided_difference(&x(d, 1), 0), MPoly::one(d));
    }

    #[test]
    fn rational_reduction_cancels_linear_factors() {
        let d = 2;
        let num = &(&x(d, 0) * &x(d, 0)) - &(&x(d, 1) * &x(d, 1));
        let r = MRat::quotient_by_diff(num, 0, 1);
        assert!(r.is_polynomial());
        assert_eq!(*r.as_poly().unwrap(), &x(d, 0) + &x(d, 1));
    }

    #[test]
    fn addition_over_common_denominator() {
        let d = 2;
        let p = &x(d, 0) + &x(d, 1);
        let a = MRat::quotient_by_diff(p.clone(), 0, 1);
        let b = -&a;
        assert!((&a + &b).is_zero());
        let twice = &a + &a;
        assert_eq!(twice, a.scaled(&QRat::from_int(2)));
    }

    #[test]
    fn permutation_flips_denominator_sign() {
        let d = 2;
        let r = MRat::quotient_by_diff(MPoly::one(d), 0, 1);
        let flipped = r.permuted(&Perm::transposition(d, 0));
        assert_eq!(flipped, -&r);
    }

    #[test]
    fn poly_quotient_through_factored_denominators() {
        let d = 2;
        let p = &x(d, 0) + &x(d, 1);
        // (p^2 / (x0-x1)) / (p / (x0-x1)) = p.
        let a = MRat::quotient_by_diff(&p * &p, 0, 1);
        let b = MRat::quotient_by_diff(p.clone(), 0, 1);
        assert_eq!(a.exact_poly_quotient(&b).unwrap(), p);
        // p / (p/(x0-x1)) = x0 - x1 is polynomial.
        let c = MRat::from_poly(p.clone());
        assert_eq!(c.exact_poly_quotient(&b).unwrap(), MPoly::linear_diff(d, 0, 1));
        // 1 / (p/(x0-x1)) is not polynomial.
        assert!(MRat::one(d).exact_poly_quotient(&b).is_none());
    }
}
