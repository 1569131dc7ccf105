//! Boson operators `e_i'` (q-derivations) and `f_i` (multiplications),
//! divided powers, the i-string decomposition and the lower and upper
//! Kashiwara operators.

use std::rc::Rc;

use crate::cartan::{Index, RootVector};
use crate::qarith::QRat;

use super::linalg;
use super::vector::UqVector;
use super::{QAlgebraError, UqAlgebra};

/// Direction selector for the lower Kashiwara operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerDir {
    Etilde,
    Ftilde,
}

/// Direction selector for the upper Kashiwara operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpperDir {
    Etilde,
    Ftilde,
}

impl<'d> UqAlgebra<'d> {
    /// `e_i'` by the recursion `e_i'(f_j u) = d_ij u + q_i^{-a_ij} f_j
    /// e_i'(u)`, `e_i'(1) = 0`; linear and quotient-descending.
    pub fn eprime(&self, i: Index, v: &UqVector) -> UqVector {
        self.derivation(i, v, false)
    }

    /// The mirrored q-derivation `e_i''(f_j u) = d_ij u + q_i^{+a_ij} f_j
    /// e_i''(u)`.
    pub fn eprime2(&self, i: Index, v: &UqVector) -> UqVector {
        self.derivation(i, v, true)
    }

    fn derivation(&self, i: Index, v: &UqVector, mirrored: bool) -> UqVector {
        let target = match v.alpha().checked_sub(&RootVector::simple(i)) {
            Some(t) => t,
            None => return UqVector::zero(RootVector::zero()),
        };
        let mut out = UqVector::zero(target);
        for (word, coeff) in v.words() {
            let mut twist = 0i64;
            for (k, &letter) in word.iter().enumerate() {
                if letter == i {
                    let mut remainder = word.clone();
                    remainder.remove(k);
                    out.insert_add(remainder, coeff * &QRat::q_pow(twist));
                }
                let step = self.datum.symmetrizer(i) * self.datum.a(i, letter);
                twist += if mirrored { step } else { -step };
            }
        }
        out
    }

    /// Left multiplication by `f_j` on the quotient.
    pub fn fmult(&self, j: Index, v: &UqVector) -> UqVector {
        v.fmult(j)
    }

    /// `f_i^{(n)} v`: `f_i^n v / [n]_i!` for real `i`, `f_i^n v` for
    /// imaginary `i`.
    pub fn f_divided(&self, i: Index, n: u64, v: &UqVector) -> UqVector {
        let mut out = v.clone();
        for _ in 0..n {
            out = out.fmult(i);
        }
        if self.datum.is_real(i) {
            let fact = self.datum.qfact_for(n, i);
            out = out.scaled(&fact.inverse().expect("[n]! is nonzero"));
        }
        out
    }

    /// `e_i'^{(n)}`: the plain power for real `i`, divided by `{n}_i!`
    /// for imaginary `i`.
    pub fn eprime_divided(&self, i: Index, n: u64, v: &UqVector) -> UqVector {
        let mut out = v.clone();
        for _ in 0..n {
            out = self.eprime(i, &out);
        }
        if self.datum.is_imaginary(i) {
            let fact = self.datum.qfact_for(n, i);
            out = out.scaled(&fact.inverse().expect("{n}! is nonzero"));
        }
        out
    }

    /// `l_i(v) = min { n : e_i'^{n+1} v = 0 }` in the quotient.
    pub fn string_length(&self, i: Index, v: &UqVector) -> Result<u64, QAlgebraError> {
        let mut n = 0u64;
        let mut current = self.eprime(i, v);
        while !self.vec_is_zero(&current)? {
            n += 1;
            current = self.eprime(i, &current);
        }
        Ok(n)
    }

    /// Basis of `ker e_i'` in the quotient weight space (cached).
    pub fn eprime_kernel(&self, i: Index, alpha: &RootVector) -> Result<Rc<Vec<UqVector>>, QAlgebraError> {
        let key = (i, alpha.clone());
        if let Some(cached) = self.kernel_cache().borrow().get(&key) {
            return Ok(cached.clone());
        }
        let basis = self.pivot_basis(alpha)?;
        let images: Vec<Vec<QRat>> = basis
            .iter()
            .map(|b| self.dual_coords(&self.eprime(i, b)))
            .collect::<Result<_, _>>()?;
        let rows = images.first().map_or(0, |c| c.len());
        let mat: linalg::Matrix = (0..rows)
            .map(|r| images.iter().map(|col| col[r].clone()).collect())
            .collect();
        let combos = if rows == 0 {
            // e_i' is the zero map out of this weight.
            (0..basis.len())
                .map(|k| {
                    let mut v = vec![QRat::zero(); basis.len()];
                    v[k] = QRat::one();
                    v
                })
                .collect()
        } else {
            linalg::nullspace(&mat)
        };
        let kernel: Vec<UqVector> = combos
            .iter()
            .map(|combo| {
                let mut v = UqVector::zero(alpha.clone());
                for (k, c) in combo.iter().enumerate() {
                    v = v.plus(&basis[k].scaled(c));
                }
                v
            })
            .collect();
        let kernel = Rc::new(kernel);
        self.kernel_cache().borrow_mut().insert(key, kernel.clone());
        Ok(kernel)
    }

    /// The unique i-string decomposition `v = sum_l f_i^{(l)} u_l` with
    /// `e_i' u_l = 0`; returns `(u_0, u_1, ..)`.
    pub fn string_decomp(&self, i: Index, v: &UqVector) -> Result<Vec<UqVector>, QAlgebraError> {
        let alpha = v.alpha().clone();
        let top = alpha.coeff(i);
        // Candidates f_i^{(l)} z over kernel bases per weight.
        let mut candidates: Vec<(u64, UqVector)> = Vec::new();
        for l in 0..=top {
            let beta = alpha
                .checked_sub(&RootVector::from_coeffs([(i, l)]))
                .expect("l bounded by the coefficient");
            for z in self.eprime_kernel(i, &beta)?.iter() {
                candidates.push((l, self.f_divided(i, l, z)));
            }
        }
        let columns: Vec<Vec<QRat>> = candidates
            .iter()
            .map(|(_, c)| self.dual_coords(c))
            .collect::<Result<_, _>>()?;
        let rhs = self.dual_coords(v)?;
        let rows = rhs.len();
        let mat: linalg::Matrix = (0..rows)
            .map(|r| columns.iter().map(|col| col[r].clone()).collect())
            .collect();
        let solution = linalg::solve_unique(&mat, &rhs).ok_or_else(|| {
            QAlgebraError::SolveFailed(format!("string decomposition at weight {}", alpha))
        })?;
        let mut out: Vec<UqVector> = (0..=top)
            .map(|l| {
                let beta = alpha.checked_sub(&RootVector::from_coeffs([(i, l)])).unwrap();
                UqVector::zero(beta)
            })
            .collect();
        let kernel_per_level: Vec<Rc<Vec<UqVector>>> = (0..=top)
            .map(|l| {
                let beta = alpha.checked_sub(&RootVector::from_coeffs([(i, l)])).unwrap();
                self.eprime_kernel(i, &beta)
            })
            .collect::<Result<_, _>>()?;
        let mut cursor = 0usize;
        for l in 0..=top {
            for z in kernel_per_level[l as usize].iter() {
                let coeff = &solution[cursor];
                cursor += 1;
                if !coeff.is_zero() {
                    out[l as usize] = out[l as usize].plus(&z.scaled(coeff));
                }
            }
        }
        Ok(out)
    }

    /// Lower Kashiwara operators from the i-string decomposition:
    /// `etilde v = sum f^{(k-1)} u_k`, `ftilde v = sum f^{(k+1)} u_k`.
    pub fn kashiwara_lower(
        &self,
        i: Index,
        v: &UqVector,
        dir: LowerDir,
    ) -> Result<UqVector, QAlgebraError> {
        let parts = self.string_decomp(i, v)?;
        let alpha = v.alpha();
        match dir {
            LowerDir::Ftilde => {
                let mut out = UqVector::zero(alpha.plus_simple(i));
                for (l, u) in parts.iter().enumerate() {
                    if !u.is_structurally_zero() {
                        out = out.plus(&self.f_divided(i, l as u64 + 1, u));
                    }
                }
                Ok(out)
            }
            LowerDir::Etilde => {
                let target = match alpha.checked_sub(&RootVector::simple(i)) {
                    Some(t) => t,
                    None => return Ok(UqVector::zero(RootVector::zero())),
                };
                let mut out = UqVector::zero(target);
                for (l, u) in parts.iter().enumerate().skip(1) {
                    if !u.is_structurally_zero() {
                        out = out.plus(&self.f_divided(i, l as u64 - 1, u));
                    }
                }
                Ok(out)
            }
        }
    }

    /// Upper Kashiwara operators, by the displayed branch scalars on each
    /// string component.
    pub fn kashiwara_upper(
        &self,
        i: Index,
        v: &UqVector,
        dir: UpperDir,
    ) -> Result<UqVector, QAlgebraError> {
        let parts = self.string_decomp(i, v)?;
        let alpha = v.alpha();
        let real = self.datum.is_real(i);
        let ci = self.datum.c(i);
        match dir {
            UpperDir::Etilde => {
                let target = match alpha.checked_sub(&RootVector::simple(i)) {
                    Some(t) => t,
                    None => return Ok(UqVector::zero(RootVector::zero())),
                };
                let mut out = UqVector::zero(target);
                for (l, u) in parts.iter().enumerate().skip(1) {
                    if u.is_structurally_zero() {
                        continue;
                    }
                    let n = l as u64;
                    let scalar = if real {
                        // q_i^{-(n-1)} / [n]_i.
                        &self.qi_pow(i, -(n as i64 - 1))
                            / &self.datum.qint_for(n, i)
                    } else {
                        // {n}_i q_i^{c_i (n-1)}.
                        &self.datum.qint_for(n, i) * &self.qi_pow(i, ci * (n as i64 - 1))
                    };
                    out = out.plus(&self.f_divided(i, n - 1, u).scaled(&scalar));
                }
                Ok(out)
            }
            UpperDir::Ftilde => {
                let mut out = UqVector::zero(alpha.plus_simple(i));
                for (l, u) in parts.iter().enumerate() {
                    if u.is_structurally_zero() {
                        continue;
                    }
                    let n = l as u64;
                    let scalar = if real {
                        // q_i^{n} [n+1]_i.
                        &self.qi_pow(i, n as i64) * &self.datum.qint_for(n + 1, i)
                    } else {
                        // 1 / ({n+1}_i q_i^{c_i n}).
                        (&self.datum.qint_for(n + 1, i) * &self.qi_pow(i, ci * n as i64))
                            .inverse()
                            .expect("{n+1} q^{c n} is nonzero")
                    };
                    out = out.plus(&self.f_divided(i, n + 1, u).scaled(&scalar));
                }
                Ok(out)
            }
        }
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
    fn eprime_examples_on_d1() {
        let datum = d1();
        let alg = UqAlgebra::new(&datum, 4);
        // e_1'(f_1 f_2) = f_2.
        let v = UqVector::word(vec![0, 1]);
        assert_eq!(alg.eprime(0, &v), UqVector::word(vec![1]));
        // e_1'(f_2 f_1) = q f_2.
        let v = UqVector::word(vec![1, 0]);
        assert_eq!(alg.eprime(0, &v), UqVector::word(vec![1]).scaled(&qr("q")));
        // e_2'(f_2^2) = (1 + q^2) f_2.
        let v = UqVector::word(vec![1, 1]);
        assert_eq!(alg.eprime(1, &v), UqVector::word(vec![1]).scaled(&qr("1+q^2")));
    }

    #[test]
    fn string_decomposition_examples() {
        let datum = d1();
        let alg = UqAlgebra::new(&datum, 4);
        // f_1^2 = [2]_1 f_1^{(2)}: u_2 = [2]_1 * 1.
        let v = UqVector::word(vec![0, 0]);
        let parts = alg.string_decomp(0, &v).unwrap();
        assert!(alg.vec_is_zero(&parts[0]).unwrap());
        assert!(alg.vec_is_zero(&parts[1]).unwrap());
        assert_eq!(parts[2], UqVector::one().scaled(&qr("q + q^-1")));
        // f_2^2: imaginary divided power is the plain power, so u_2 = 1.
        let v = UqVector::word(vec![1, 1]);
        let parts = alg.string_decomp(1, &v).unwrap();
        assert_eq!(parts[2], UqVector::one());
        // A kernel vector decomposes as u_0 = v.
        let v = UqVector::word(vec![1]);
        let parts = alg.string_decomp(0, &v).unwrap();
        assert_eq!(parts[0], v);
    }

    #[test]
    fn lower_kashiwara_examples() {
        let datum = d1();
        let alg = UqAlgebra::new(&datum, 4);
        // ftilde_1(1) = f_1.
        let one = UqVector::one();
        assert_eq!(
            alg.kashiwara_lower(0, &one, LowerDir::Ftilde).unwrap(),
            UqVector::word(vec![0])
        );
        // ftilde_1(f_1^{(n)}) = f_1^{(n+1)}.
        let f2 = alg.f_divided(0, 2, &UqVector::one());
        let f3 = alg.f_divided(0, 3, &UqVector::one());
        assert!(alg
            .vec_eq(&alg.kashiwara_lower(0, &f2, LowerDir::Ftilde).unwrap(), &f3)
            .unwrap());
        // etilde_2(f_2^3) = f_2^2 on the imaginary string.
        let f2cubed = UqVector::word(vec![1, 1, 1]);
        let f2sq = UqVector::word(vec![1, 1]);
        assert!(alg
            .vec_eq(&alg.kashiwara_lower(1, &f2cubed, LowerDir::Etilde).unwrap(), &f2sq)
            .unwrap());
    }

    #[test]
    fn upper_kashiwara_examples() {
        let datum = d1();
        let alg = UqAlgebra::new(&datum, 4);
        // Etilde_1(f_1^2) = q^-1 f_1.
        let v = UqVector::word(vec![0, 0]);
        let up = alg.kashiwara_upper(0, &v, UpperDir::Etilde).unwrap();
        assert!(alg.vec_eq(&up, &UqVector::word(vec![0]).scaled(&qr("q^-1"))).unwrap());
        // Etilde_2(f_2^2) = (q + q^-1) q f_2 on the imaginary index.
        let v = UqVector::word(vec![1, 1]);
        let up = alg.kashiwara_upper(1, &v, UpperDir::Etilde).unwrap();
        assert!(alg
            .vec_eq(&up, &UqVector::word(vec![1]).scaled(&qr("(q + q^-1)*q")))
            .unwrap());
        // Ftilde on a kernel vector produces only the f^{(1)} term.
        let v = UqVector::word(vec![1]);
        let down = alg.kashiwara_upper(0, &v, UpperDir::Ftilde).unwrap();
        assert!(alg
            .vec_eq(&down, &UqVector::word(vec![0, 1]).scaled(&qr("1")))
            .unwrap());
    }

    #[test]
    fn kashiwara_operators_are_mutually_inverse_on_strings() {
        let datum = d1();
        let alg = UqAlgebra::new(&datum, 4);
        for word in [vec![0], vec![0, 0], vec![1, 1], vec![0, 1], vec![1, 0]] {
            let v = UqVector::word(word);
            for i in 0..2 {
                let down = alg.kashiwara_lower(i, &v, LowerDir::Ftilde).unwrap();
                let back = alg.kashiwara_lower(i, &down, LowerDir::Etilde).unwrap();
                assert!(alg.vec_eq(&back, &v).unwrap(), "etilde ftilde != id at {:?}", v);
            }
        }
    }
}
