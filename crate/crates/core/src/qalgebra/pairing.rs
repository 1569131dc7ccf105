//! The twisted coproduct on words and the bilinear pairings; weight-space
//! data (Gram matrix, rank, pivot words) in the radical quotient.

use std::rc::Rc;

use crate::cartan::{enumerate_seq, RootVector, Seq};
use crate::qarith::QRat;

use super::linalg;
use super::vector::UqVector;
use super::{QAlgebraError, UqAlgebra};

/// One weight space of the quotient: the words of `Seq(alpha)` in lex
/// order, their Gram matrix under `( , )_L`, and the first lex subset of
/// words whose Gram rows are independent.
#[derive(Debug, Clone)]
pub struct WeightSpaceData {
    pub alpha: RootVector,
    pub words: Vec<Seq>,
    pub gram: linalg::Matrix,
    pub pivot_words: Vec<usize>,
    pub dimension: usize,
}

impl<'d> UqAlgebra<'d> {
    /// All two-sided splittings of a word under the twisted coproduct:
    /// `(left, right, power)` with the power collecting
    /// `-(alpha_{i_k} | alpha_{i_l})` over pairs `k < l` sent right/left.
    pub fn coproduct_split(&self, word: &[usize]) -> Vec<(Seq, Seq, i64)> {
        let n = word.len();
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0u64..(1 << n) {
            // Bit set: position goes to the left factor.
            let mut left = Vec::new();
            let mut right = Vec::new();
            let mut power = 0i64;
            for (k, &letter) in word.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    // Crossing over every earlier position sent right.
                    for (l, &other) in word.iter().enumerate().take(k) {
                        if mask & (1 << l) == 0 {
                            power -= self.datum.sym_form(other, letter);
                        }
                    }
                    left.push(letter);
                } else {
                    right.push(letter);
                }
            }
            out.push((left, right, power));
        }
        out
    }

    /// `(x, y)_L` on words, by the coproduct recursion; memoized.
    pub fn pairing_words(&self, x: &[usize], y: &[usize]) -> QRat {
        if RootVector::of_seq(x) != RootVector::of_seq(y) {
            return QRat::zero();
        }
        if x.is_empty() {
            return QRat::one();
        }
        let key = (x.to_vec(), y.to_vec());
        if let Some(cached) = self.pair_cache().borrow().get(&key) {
            return cached.clone();
        }
        // (x, f_j y')_L: split a single letter j off x to the left.
        let j = y[0];
        let rest = &y[1..];
        let unit = (&QRat::one()
            - &QRat::q_pow(2 * self.datum.symmetrizer(j)))
        .inverse()
        .expect("1 - q_i^2 is nonzero");
        let mut acc = QRat::zero();
        for (k, &letter) in x.iter().enumerate() {
            if letter != j {
                continue;
            }
            let mut power = 0i64;
            for &earlier in &x[..k] {
                power -= self.datum.sym_form(earlier, j);
            }
            let mut remainder = x.to_vec();
            remainder.remove(k);
            acc += &(&QRat::q_pow(power) * &self.pairing_words(&remainder, rest));
        }
        let result = &acc * &unit;
        self.pair_cache().borrow_mut().insert(key, result.clone());
        result
    }

    /// `( , )_L` extended bilinearly.
    pub fn pairing_l(&self, a: &UqVector, b: &UqVector) -> QRat {
        let mut acc = QRat::zero();
        for (wa, ca) in a.words() {
            for (wb, cb) in b.words() {
                let p = self.pairing_words(wa, wb);
                if !p.is_zero() {
                    acc += &(&(ca * cb) * &p);
                }
            }
        }
        acc
    }

    /// `(x, y)_K = prod_i (1 - q_i^2)^{k_i} (x, y)_L` on weight
    /// `alpha = sum k_i alpha_i`.
    pub fn pairing_k(&self, a: &UqVector, b: &UqVector) -> QRat {
        let mut scale = QRat::one();
        for (&i, &k) in a.alpha().iter() {
            let factor = &QRat::one() - &QRat::q_pow(2 * self.datum.symmetrizer(i));
            scale = &scale * &factor.pow(k as i64);
        }
        &scale * &self.pairing_l(a, b)
    }

    /// Weight-space data for `alpha`, cached.
    pub fn weight_space(&self, alpha: &RootVector) -> Result<Rc<WeightSpaceData>, QAlgebraError> {
        self.check_height(alpha)?;
        if let Some(cached) = self.weight_cache().borrow().get(alpha) {
            return Ok(cached.clone());
        }
        let words = enumerate_seq(alpha, self.cap())
            .map_err(|_| QAlgebraError::CapExceeded { height: alpha.height(), cap: self.cap() })?;
        let gram: linalg::Matrix = words
            .iter()
            .map(|a| words.iter().map(|b| self.pairing_words(a, b)).collect())
            .collect();
        let pivot_words = linalg::independent_rows(&gram);
        let dimension = pivot_words.len();
        let data = Rc::new(WeightSpaceData {
            alpha: alpha.clone(),
            words,
            gram,
            pivot_words,
            dimension,
        });
        self.weight_cache().borrow_mut().insert(alpha.clone(), data.clone());
        Ok(data)
    }

    /// Dual (pairing) coordinates of a vector against all words of its
    /// weight, in the weight space's lex order.
    pub fn dual_coords(&self, v: &UqVector) -> Result<Vec<QRat>, QAlgebraError> {
        let ws = self.weight_space(v.alpha())?;
        Ok(ws
            .words
            .iter()
            .map(|w| {
                let mut acc = QRat::zero();
                for (word, c) in v.words() {
                    let p = self.pairing_words(word, w);
                    if !p.is_zero() {
                        acc += &(c * &p);
                    }
                }
                acc
            })
            .collect())
    }

    /// Zero test in the quotient.
    pub fn vec_is_zero(&self, v: &UqVector) -> Result<bool, QAlgebraError> {
        if v.is_structurally_zero() {
            return Ok(true);
        }
        Ok(self.dual_coords(v)?.iter().all(|c| c.is_zero()))
    }

    /// Equality in the quotient.
    pub fn vec_eq(&self, a: &UqVector, b: &UqVector) -> Result<bool, QAlgebraError> {
        if a.alpha() != b.alpha() {
            return Ok(false);
        }
        Ok(self.dual_coords(a)? == self.dual_coords(b)?)
    }

    /// The pivot-word basis of the quotient weight space.
    pub fn pivot_basis(&self, alpha: &RootVector) -> Result<Vec<UqVector>, QAlgebraError> {
        let ws = self.weight_space(alpha)?;
        Ok(ws.pivot_words.iter().map(|&k| UqVector::word(ws.words[k].clone())).collect())
    }

    /// Coordinates of `v` over a quotient-spanning list, when expressible;
    /// unique when the list is independent.
    pub fn express_in(
        &self,
        basis: &[UqVector],
        v: &UqVector,
    ) -> Result<Option<Vec<QRat>>, QAlgebraError> {
        let columns: Vec<Vec<QRat>> = basis
            .iter()
            .map(|b| self.dual_coords(b))
            .collect::<Result<_, _>>()?;
        let rhs = self.dual_coords(v)?;
        let rows = rhs.len();
        let mat: linalg::Matrix = (0..rows)
            .map(|r| columns.iter().map(|col| col[r].clone()).collect())
            .collect();
        Ok(linalg::solve_unique(&mat, &rhs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::tests_support::d1;

    fn qr(text: &str) -> QRat {
        QRat::parse(text).unwrap()
    }

    #[test]
    fn coproduct_splits_of_short_words() {
        let datum = d1();
        let alg = UqAlgebra::new(&datum, 4);
        let splits = alg.coproduct_split(&[0]);
        assert_eq!(splits.len(), 2);
        assert!(splits.contains(&(vec![0], vec![], 0)));
        assert!(splits.contains(&(vec![], vec![0], 0)));
        // (1,2) with position 2 sent left: power -(a_1|a_2) = 1.
        let splits = alg.coproduct_split(&[0, 1]);
        assert!(splits.contains(&(vec![1], vec![0], 1)));
        // (2,2) with the second sent left: power -(a_2|a_2) = 2.
        let splits = alg.coproduct_split(&[1, 1]);
        assert!(splits.contains(&(vec![1], vec![1], 2)));
    }

    #[test]
    fn pairing_anchors_on_d1() {
        let datum = d1();
        let alg = UqAlgebra::new(&datum, 4);
        assert_eq!(alg.pairing_words(&[0], &[0]), qr("1/(1-q^2)"));
        assert_eq!(alg.pairing_words(&[0], &[1]), QRat::zero());
        assert_eq!(alg.pairing_words(&[0, 1], &[1, 0]), qr("q/((1-q^2)^2)"));
        assert_eq!(alg.pairing_words(&[1, 1], &[1, 1]), qr("(1+q^2)/((1-q^2)^2)"));
    }

    #[test]
    fn pairing_is_symmetric() {
        let datum = d1();
        let alg = UqAlgebra::new(&datum, 4);
        for alpha in RootVector::all_up_to_height(&datum, 3) {
            let words = enumerate_seq(&alpha, 3).unwrap();
            for a in &words {
                for b in &words {
                    assert_eq!(alg.pairing_words(a, b), alg.pairing_words(b, a));
                }
            }
        }
    }

    #[test]
    fn weight_space_dimensions_on_d1() {
        let datum = d1();
        let alg = UqAlgebra::new(&datum, 4);
        let dims = [
            (RootVector::from_coeffs([(0, 1), (1, 1)]), 2),
            (RootVector::from_coeffs([(0, 2), (1, 1)]), 2),
            (RootVector::from_coeffs([(1, 2)]), 1),
        ];
        for (alpha, dim) in dims {
            let ws = alg.weight_space(&alpha).unwrap();
            assert_eq!(ws.dimension, dim, "alpha = {}", alpha);
        }
        let too_high = RootVector::from_coeffs([(0, 5)]);
        assert!(matches!(
            alg.weight_space(&too_high),
            Err(QAlgebraError::CapExceeded { .. })
        ));
    }

    #[test]
    fn gram_rank_is_order_independent() {
        let datum = d1();
        let alg = UqAlgebra::new(&datum, 4);
        let alpha = RootVector::from_coeffs([(0, 2), (1, 1)]);
        let ws = alg.weight_space(&alpha).unwrap();
        // Reverse the word order and recompute the rank.
        let mut words = ws.words.clone();
        words.reverse();
        let gram: linalg::Matrix = words
            .iter()
            .map(|a| words.iter().map(|b| alg.pairing_words(a, b)).collect())
            .collect();
        assert_eq!(linalg::rank(&gram), ws.dimension);
    }

    #[test]
    fn quotient_equality_detects_serre_relation() {
        // In weight 2a_1 + a_2 of D1 the three words span a 2-dimensional
        // quotient: some combination vanishes.
        let datum = d1();
        let alg = UqAlgebra::new(&datum, 4);
        let alpha = RootVector::from_coeffs([(0, 2), (1, 1)]);
        let ws = alg.weight_space(&alpha).unwrap();
        assert_eq!(ws.words.len(), 3);
        let combos = linalg::nullspace(&ws.gram);
        assert_eq!(combos.len(), 1);
        let mut v = UqVector::zero(alpha.clone());
        for (k, c) in combos[0].iter().enumerate() {
            v.insert_add(ws.words[k].clone(), c.clone());
        }
        assert!(!v.is_structurally_zero());
        assert!(alg.vec_is_zero(&v).unwrap());
    }
}
