//! Elements of `R(alpha)` in normal form: finite linear combinations of the
//! basis symbols `tau_w x^t 1_i` with `w` carried by its canonical reduced
//! word.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::json;

use crate::cartan::{BorcherdsCartanDatum, RootVector, Seq};
use crate::qarith::QRat;

use super::words::{Perm, ReducedWordTable};

/// Basis coordinates of an element: `(source sequence, permutation,
/// exponent vector) -> coefficient`, every stored coefficient nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KLRElement {
    alpha: RootVector,
    d: usize,
    terms: BTreeMap<(Seq, Perm, Vec<u16>), QRat>,
}

impl KLRElement {
    pub fn zero(alpha: RootVector) -> Self {
        let d = alpha.height() as usize;
        KLRElement { alpha, d, terms: BTreeMap::new() }
    }

    /// The idempotent `1_i`.
    pub fn idempotent(source: &Seq) -> Self {
        let alpha = RootVector::of_seq(source);
        let d = source.len();
        let mut e = Self::zero(alpha);
        e.insert_add(source.clone(), Perm::identity(d), vec![0; d], QRat::one());
        e
    }

    /// A single basis symbol `c * tau_w x^e 1_i`.
    pub fn basis_term(source: Seq, w: Perm, exps: Vec<u16>, coeff: QRat) -> Self {
        let alpha = RootVector::of_seq(&source);
        let d = source.len();
        assert_eq!(w.len(), d);
        assert_eq!(exps.len(), d);
        let mut e = Self::zero(alpha);
        e.insert_add(source, w, exps, coeff);
        e
    }

    pub fn alpha(&self) -> &RootVector {
        &self.alpha
    }

    pub fn nvars(&self) -> usize {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Seq, Perm, Vec<u16>), &QRat)> {
        self.terms.iter()
    }

    pub fn insert_add(&mut self, source: Seq, w: Perm, exps: Vec<u16>, coeff: QRat) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(RootVector::of_seq(&source), self.alpha);
        let key = (source, w, exps);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += &coeff;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn scaled(&self, c: &QRat) -> Self {
        if c.is_zero() {
            return Self::zero(self.alpha.clone());
        }
        KLRElement {
            alpha: self.alpha.clone(),
            d: self.d,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn plus(&self, rhs: &KLRElement) -> KLRElement {
        assert_eq!(self.alpha, rhs.alpha);
        let mut out = self.clone();
        for ((s, w, e), c) in &rhs.terms {
            out.insert_add(s.clone(), w.clone(), e.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, rhs: &KLRElement) -> KLRElement {
        self.plus(&rhs.scaled(&QRat::from_int(-1)))
    }

    /// Expression rendering compatible with the CLI grammar, e.g.
    /// `(x(1)+x(2))*e(1,2)`.
    pub fn display_expr(&self, datum: &BorcherdsCartanDatum, table: &ReducedWordTable) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        // Group terms by (sequence, permutation); each group carries a
        // polynomial in the x-variables over Q(q).
        let mut groups: BTreeMap<(Seq, Perm), Vec<(Vec<u16>, QRat)>> = BTreeMap::new();
        for ((s, w, e), c) in &self.terms {
            groups
                .entry((s.clone(), w.clone()))
                .or_default()
                .push((e.clone(), c.clone()));
        }
        let mut parts = Vec::new();
        for ((seq, w), monomials) in groups {
            let mut factors: Vec<String> = Vec::new();
            for &t in table.word(&w) {
                factors.push(format!("tau({})", t + 1));
            }
            let poly = poly_string(&monomials);
            if poly != "1" {
                factors.push(poly);
            }
            let names: Vec<&str> = seq.iter().map(|&i| datum.name(i)).collect();
            factors.push(format!("e({})", names.join(",")));
            parts.push(factors.join("*"));
        }
        parts.join(" + ")
    }

    /// JSON rendering: a list of `{"word", "exps", "seq", "coeff"}` terms.
    pub fn to_json(&self, datum: &BorcherdsCartanDatum, table: &ReducedWordTable) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|((s, w, e), c)| {
                json!({
                    "word": table.word(w).iter().map(|&t| t + 1).collect::<Vec<usize>>(),
                    "exps": e.iter().map(|&x| x as u64).collect::<Vec<u64>>(),
                    "seq": s.iter().map(|&i| datum.name(i)).collect::<Vec<&str>>(),
                    "coeff": c.to_string(),
                })
            })
            .collect();
        serde_json::Value::Array(terms)
    }
}

fn poly_string(monomials: &[(Vec<u16>, QRat)]) -> String {
    let rendered: Vec<String> = monomials
        .iter()
        .rev()
        .map(|(e, c)| {
            let mut factors = Vec::new();
            if !c.is_one() || e.iter().all(|&x| x == 0) {
                let c_str = c.to_string();
                if c_str.contains(['+', '-', '/', ' ']) {
                    factors.push(format!("({})", c_str));
                } else {
                    factors.push(c_str);
                }
            }
            for (k, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if exp == 1 {
                    factors.push(format!("x({})", k + 1));
                } else {
                    factors.push(format!("x({})^{}", k + 1, exp));
                }
            }
            factors.join("*")
        })
        .collect();
    if rendered.len() == 1 {
        rendered.into_iter().next().unwrap()
    } else {
        format!("({})", rendered.join("+"))
    }
}

impl fmt::Display for KLRElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((s, w, e), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})*tau{:?}x{:?}e{:?}", c, w, e, s)?;
        }
        Ok(())
    }
}
