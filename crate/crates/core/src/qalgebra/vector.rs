//! Weight-homogeneous elements of the free algebra on the `f_i`, used as
//! representatives of classes in the radical quotient.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::json;

use crate::cartan::{BorcherdsCartanDatum, Index, RootVector, Seq};
use crate::qarith::QRat;

/// A finite linear combination of words (monomials `f_{i_1} .. f_{i_r}`)
/// of a fixed weight.  Equality of the underlying quotient classes is
/// decided through dual (pairing) coordinates by [`super::UqAlgebra`], not
/// by this representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UqVector {
    alpha: RootVector,
    words: BTreeMap<Seq, QRat>,
}

impl UqVector {
    pub fn zero(alpha: RootVector) -> Self {
        UqVector { alpha, words: BTreeMap::new() }
    }

    /// The unit `1` (empty word).
    pub fn one() -> Self {
        Self::word(Vec::new())
    }

    /// A single word with coefficient 1.
    pub fn word(seq: Seq) -> Self {
        let alpha = RootVector::of_seq(&seq);
        let mut words = BTreeMap::new();
        words.insert(seq, QRat::one());
        UqVector { alpha, words }
    }

    pub fn alpha(&self) -> &RootVector {
        &self.alpha
    }

    pub fn words(&self) -> impl Iterator<Item = (&Seq, &QRat)> {
        self.words.iter()
    }

    pub fn coeff(&self, seq: &Seq) -> QRat {
        self.words.get(seq).cloned().unwrap_or_else(QRat::zero)
    }

    /// Structural zero (no words); the quotient class may vanish without
    /// this holding.
    pub fn is_structurally_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn insert_add(&mut self, seq: Seq, coeff: QRat) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(RootVector::of_seq(&seq), self.alpha);
        match self.words.get_mut(&seq) {
            Some(existing) => {
                *existing += &coeff;
                if existing.is_zero() {
                    self.words.remove(&seq);
                }
            }
            None => {
                self.words.insert(seq, coeff);
            }
        }
    }

    pub fn plus(&self, rhs: &UqVector) -> UqVector {
        assert_eq!(self.alpha, rhs.alpha, "weight mismatch in addition");
        let mut out = self.clone();
        for (seq, c) in &rhs.words {
            out.insert_add(seq.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, rhs: &UqVector) -> UqVector {
        self.plus(&rhs.scaled(&QRat::from_int(-1)))
    }

    pub fn scaled(&self, c: &QRat) -> UqVector {
        if c.is_zero() {
            return UqVector::zero(self.alpha.clone());
        }
        UqVector {
            alpha: self.alpha.clone(),
            words: self.words.iter().map(|(s, co)| (s.clone(), co * c)).collect(),
        }
    }

    /// Left multiplication by `f_j`.
    pub fn fmult(&self, j: Index) -> UqVector {
        let mut out = UqVector::zero(self.alpha.plus_simple(j));
        for (seq, c) in &self.words {
            let mut word = Vec::with_capacity(seq.len() + 1);
            word.push(j);
            word.extend_from_slice(seq);
            out.insert_add(word, c.clone());
        }
        out
    }

    /// The bar involution on the representative: conjugate every
    /// coefficient by `q -> q^{-1}` (monomials are fixed).
    pub fn bar(&self) -> UqVector {
        UqVector {
            alpha: self.alpha.clone(),
            words: self.words.iter().map(|(s, c)| (s.clone(), c.bar())).collect(),
        }
    }

    /// JSON rendering `{"alpha": {...}, "words": {"1,2": "coeff"}}` over
    /// index names.
    pub fn to_json(&self, datum: &BorcherdsCartanDatum) -> serde_json::Value {
        let alpha: BTreeMap<String, u64> = self
            .alpha
            .iter()
            .map(|(&i, &k)| (datum.name(i).to_string(), k))
            .collect();
        let words: BTreeMap<String, String> = self
            .words
            .iter()
            .map(|(seq, c)| {
                let key: Vec<&str> = seq.iter().map(|&i| datum.name(i)).collect();
                (key.join(","), c.to_string())
            })
            .collect();
        json!({ "alpha": alpha, "words": words })
    }

    pub fn display(&self, datum: &BorcherdsCartanDatum) -> String {
        if self.words.is_empty() {
            return "0".into();
        }
        self.words
            .iter()
            .map(|(seq, c)| {
                let word = if seq.is_empty() {
                    "1".to_string()
                } else {
                    seq.iter().map(|&i| format!("f{}", datum.name(i))).collect::<Vec<_>>().join("")
                };
                format!("({})*{}", c, word)
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for UqVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.words.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .words
            .iter()
            .map(|(seq, c)| format!("({})*f{:?}", c, seq))
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}
