//! The faithful operator model of `R(alpha)`.
//!
//! An operator acts on the direct sum of polynomial rings indexed by
//! `Seq(alpha)`.  Every element reachable from the generators is a sum of
//! summands `(i, w, C)`: the component `i` is routed to `w(i)` and its
//! polynomial `f` is sent to `C * (w . f)`, with `C` a rational function in
//! the target variables.  Composition is closed on this shape, which is
//! what makes exact normal-form extraction possible.

use std::collections::BTreeMap;

use crate::cartan::Seq;

use super::poly::{MPoly, MRat};
use super::words::Perm;

/// A finite sum of routed summands `(source component, permutation) ->
/// coefficient`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KLROperator {
    d: usize,
    summands: BTreeMap<(Seq, Perm), MRat>,
}

impl KLROperator {
    pub fn zero(d: usize) -> Self {
        KLROperator { d, summands: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn summands(&self) -> impl Iterator<Item = (&(Seq, Perm), &MRat)> {
        self.summands.iter()
    }

    pub fn summand(&self, source: &Seq, w: &Perm) -> Option<&MRat> {
        self.summands.get(&(source.clone(), w.clone()))
    }

    pub fn insert_add(&mut self, source: Seq, w: Perm, coeff: MRat) {
        if coeff.is_zero() {
            return;
        }
        let key = (source, w);
        match self.summands.get_mut(&key) {
            Some(existing) => {
                let sum = &*existing + &coeff;
                if sum.is_zero() {
                    self.summands.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.summands.insert(key, coeff);
            }
        }
    }

    /// Projection `1_i` onto a single component.
    pub fn unit(d: usize, source: &Seq) -> Self {
        let mut op = Self::zero(d);
        op.insert_add(source.clone(), Perm::identity(d), MRat::one(d));
        op
    }

    /// Multiplication by a polynomial on a single component.
    pub fn mult_poly(d: usize, source: &Seq, poly: &MPoly) -> Self {
        let mut op = Self::zero(d);
        op.insert_add(source.clone(), Perm::identity(d), MRat::from_poly(poly.clone()));
        op
    }

    /// Composition `self . rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &KLROperator) -> KLROperator {
        assert_eq!(self.d, rhs.d);
        let mut out = Self::zero(self.d);
        for ((src2, w2), c2) in &rhs.summands {
            let mid = w2.apply_to_seq(src2);
            for ((src1, w1), c1) in &self.summands {
                if *src1 != mid {
                    continue;
                }
                let coeff = c1 * &c2.permuted(w1);
                out.insert_add(src2.clone(), w1.compose(w2), coeff);
            }
        }
        out
    }

    pub fn scaled(&self, c: &crate::qarith::QRat) -> KLROperator {
        if c.is_zero() {
            return Self::zero(self.d);
        }
        KLROperator {
            d: self.d,
            summands: self.summands.iter().map(|(k, v)| (k.clone(), v.scaled(c))).collect(),
        }
    }
}

impl std::ops::Add for &KLROperator {
    type Output = KLROperator;
    fn add(self, rhs: &KLROperator) -> KLROperator {
        assert_eq!(self.d, rhs.d);
        let mut out = self.clone();
        for ((src, w), c) in &rhs.summands {
            out.insert_add(src.clone(), w.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &KLROperator {
    type Output = KLROperator;
    fn sub(self, rhs: &KLROperator) -> KLROperator {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &KLROperator {
    type Output = KLROperator;
    fn neg(self) -> KLROperator {
        KLROperator {
            d: self.d,
            summands: self.summands.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}
