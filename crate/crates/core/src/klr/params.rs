//! Parameter polynomials of the quiver Hecke algebra: the `Q_{i,j}(u, v)`
//! twisting the mixed crossings and the `P_i(u, v)` governing equal-color
//! crossings, together with the correction polynomials entering the braid
//! relation.

use std::collections::BTreeMap;

use crate::cartan::{pair_key, BorcherdsCartanDatum, DatumFile, Index, Violation};
use crate::qarith::QRat;

use super::poly::{MPoly, MRat};
use super::KLRError;

/// Admissible parameter polynomials for a datum.
///
/// `P_i` and `Q_{i,j}` are bivariate; the total order on `I` implicit in
/// the operator model is the datum's declared index order.
#[derive(Debug, Clone)]
pub struct KLRParams {
    /// `P_i(u, v)` per index; `1` for real indices.
    p: Vec<MPoly>,
    /// `Q_{i,j}(u, v)` for `i != j`; `Q_{i,i} = 0`.
    q: Vec<Vec<MPoly>>,
}

impl KLRParams {
    /// All admissible coefficients set to 1: `Q_{i,j} = sum u^p v^q` over
    /// the solutions of `(alpha_i|alpha_j) + s_i p + s_j q = 0`, and
    /// `P_i = sum_{p+q = 1 - a_ii/2} u^p v^q` (symmetric) for imaginary
    /// `i`, `P_i = 1` for real `i`.
    pub fn default_for(datum: &BorcherdsCartanDatum) -> Self {
        let n = datum.rank();
        let mut p = Vec::with_capacity(n);
        for i in 0..n {
            if datum.is_real(i) {
                p.push(MPoly::one(2));
            } else {
                let deg = 1 - datum.a(i, i) / 2;
                let mut poly = MPoly::zero(2);
                for pu in 0..=deg {
                    let pv = deg - pu;
                    poly = &poly + &MPoly::monomial(2, vec![pu as u16, pv as u16], QRat::one());
                }
                p.push(poly);
            }
        }
        let mut q = vec![vec![MPoly::zero(2); n]; n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let mut poly = MPoly::zero(2);
                for (pu, pv) in admissible_q_exponents(datum, i, j) {
                    poly = &poly + &MPoly::monomial(2, vec![pu, pv], QRat::one());
                }
                q[i][j] = poly;
            }
        }
        KLRParams { p, q }
    }

    /// Build from a datum file, overriding defaults with its optional `P`
    /// and `Q` blocks, then validate.
    pub fn from_file(datum: &BorcherdsCartanDatum, file: &DatumFile) -> Result<Self, Vec<Violation>> {
        let mut params = Self::default_for(datum);
        let mut violations = Vec::new();
        for (name, block) in &file.p {
            match datum.index_of(name) {
                Ok(i) => match parse_poly_block(block) {
                    Ok(poly) => params.p[i] = poly,
                    Err(msg) => violations.push(Violation { cell: format!("P[{}]", name), message: msg }),
                },
                Err(_) => violations.push(Violation {
                    cell: format!("P[{}]", name),
                    message: "unknown index".into(),
                }),
            }
        }
        let mut q_given: BTreeMap<(Index, Index), MPoly> = BTreeMap::new();
        for (key, block) in &file.q {
            let parsed = key.split_once(',').and_then(|(a, b)| {
                Some((datum.index_of(a.trim()).ok()?, datum.index_of(b.trim()).ok()?))
            });
            match (parsed, parse_poly_block(block)) {
                (Some((i, j)), Ok(poly)) if i != j => {
                    q_given.insert((i, j), poly);
                }
                (Some(_), Ok(_)) => violations.push(Violation {
                    cell: format!("Q[{}]", key),
                    message: "diagonal Q must be 0".into(),
                }),
                (None, _) => violations.push(Violation {
                    cell: format!("Q[{}]", key),
                    message: "key must be a pair of index names".into(),
                }),
                (_, Err(msg)) => violations.push(Violation { cell: format!("Q[{}]", key), message: msg }),
            }
        }
        for (&(i, j), poly) in &q_given {
            params.q[i][j] = poly.clone();
            if !q_given.contains_key(&(j, i)) {
                // Complete by symmetry: Q_{j,i}(u, v) = Q_{i,j}(v, u).
                params.q[j][i] = poly.permuted(&super::words::Perm::transposition(2, 0));
            }
        }
        if !violations.is_empty() {
            return Err(violations);
        }
        params.validate(datum)?;
        Ok(params)
    }

    /// Check every admissibility constraint, reporting all failures.
    pub fn validate(&self, datum: &BorcherdsCartanDatum) -> Result<(), Vec<Violation>> {
        let mut violations = Vec::new();
        let swap = super::words::Perm::transposition(2, 0);
        for i in datum.indices() {
            let p = &self.p[i];
            if p.is_zero() {
                violations.push(Violation {
                    cell: format!("P[{}]", datum.name(i)),
                    message: "P_i must be nonzero".into(),
                });
                continue;
            }
            if datum.is_real(i) && !p.is_one() {
                violations.push(Violation {
                    cell: format!("P[{}]", datum.name(i)),
                    message: "P_i is normalized to 1 on real indices".into(),
                });
            }
            let want = 1 - datum.a(i, i) / 2;
            for (e, _) in p.terms() {
                let (pu, pv) = (e[0] as i64, e[1] as i64);
                if pu + pv != want {
                    violations.push(Violation {
                        cell: format!("P[{}]", datum.name(i)),
                        message: format!(
                            "monomial u^{} v^{} violates 2 - a_ii - 2p - 2q = 0",
                            pu, pv
                        ),
                    });
                }
            }
            let corner = |pu: i64, pv: i64| -> bool {
                !p.terms()
                    .find(|(e, _)| e[0] as i64 == pu && e[1] as i64 == pv)
                    .map_or(true, |(_, c)| c.is_zero())
            };
            if !corner(want, 0) || !corner(0, want) {
                violations.push(Violation {
                    cell: format!("P[{}]", datum.name(i)),
                    message: format!("coefficients of u^{} and v^{} must be nonzero", want, want),
                });
            }
        }
        for i in datum.indices() {
            for j in datum.indices() {
                if i == j {
                    if !self.q[i][j].is_zero() {
                        violations.push(Violation {
                            cell: format!("Q[{}]", pair_key(datum.name(i), datum.name(j))),
                            message: "Q_{i,i} must be 0".into(),
                        });
                    }
                    continue;
                }
                let q = &self.q[i][j];
                let cell = format!("Q[{}]", pair_key(datum.name(i), datum.name(j)));
                if q.permuted(&swap) != self.q[j][i] {
                    violations.push(Violation {
                        cell: cell.clone(),
                        message: "Q_{i,j}(u,v) != Q_{j,i}(v,u)".into(),
                    });
                }
                for (e, _) in q.terms() {
                    let (pu, pv) = (e[0] as i64, e[1] as i64);
                    if datum.sym_form(i, j) + datum.symmetrizer(i) * pu + datum.symmetrizer(j) * pv != 0 {
                        violations.push(Violation {
                            cell: cell.clone(),
                            message: format!(
                                "monomial u^{} v^{} violates (a_i|a_j) + s_i p + s_j q = 0",
                                pu, pv
                            ),
                        });
                    }
                }
                let lead = -datum.a(i, j);
                let has_unit = q
                    .terms()
                    .any(|(e, c)| e[0] as i64 == lead && e[1] == 0 && !c.is_zero());
                if !has_unit {
                    violations.push(Violation {
                        cell,
                        message: format!("t_{{i,j;{},0}} must be a unit", lead),
                    });
                }
            }
        }
        if violations.is_empty() {
            Ok(())
        } else {
            Err(violations)
        }
    }

    /// Replace `P_i` and re-validate.
    pub fn with_p(
        mut self,
        datum: &BorcherdsCartanDatum,
        i: Index,
        p: MPoly,
    ) -> Result<Self, Vec<Violation>> {
        self.p[i] = p;
        self.validate(datum)?;
        Ok(self)
    }

    pub fn p(&self, i: Index) -> &MPoly {
        &self.p[i]
    }

    pub fn q(&self, i: Index, j: Index) -> &MPoly {
        &self.q[i][j]
    }

    /// The unit coefficient `t_{i,j;-a_ij,0}`.
    pub fn t_unit(&self, datum: &BorcherdsCartanDatum, i: Index, j: Index) -> QRat {
        let lead = (-datum.a(i, j)) as u16;
        self.q[i][j]
            .terms()
            .find(|(e, _)| e[0] == lead && e[1] == 0)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(QRat::zero)
    }

    /// Is `P_i(u, v) = P_i(v, u)`?
    pub fn p_is_symmetric(&self, i: Index) -> bool {
        self.p[i].is_symmetric_under(&super::words::Perm::transposition(2, 0))
    }
}

fn admissible_q_exponents(datum: &BorcherdsCartanDatum, i: Index, j: Index) -> Vec<(u16, u16)> {
    let form = datum.sym_form(i, j);
    let (si, sj) = (datum.symmetrizer(i), datum.symmetrizer(j));
    let mut out = Vec::new();
    let mut pu = 0i64;
    while si * pu <= -form {
        let rem = -form - si * pu;
        if rem % sj == 0 {
            out.push((pu as u16, (rem / sj) as u16));
        }
        pu += 1;
    }
    out
}

fn parse_poly_block(block: &BTreeMap<String, serde_json::Value>) -> Result<MPoly, String> {
    let mut poly = MPoly::zero(2);
    for (key, value) in block {
        let (pu, pv) = key
            .split_once(',')
            .and_then(|(a, b)| Some((a.trim().parse::<u16>().ok()?, b.trim().parse::<u16>().ok()?)))
            .ok_or_else(|| format!("bad exponent key '{}'", key))?;
        let coeff = match value {
            serde_json::Value::Number(n) => {
                let text = n.to_string();
                QRat::parse(&text).map_err(|e| format!("bad coefficient {}: {}", text, e))?
            }
            serde_json::Value::String(s) => {
                QRat::parse(s).map_err(|e| format!("bad coefficient '{}': {}", s, e))?
            }
            other => return Err(format!("bad coefficient {:?}", other)),
        };
        poly = &poly + &MPoly::monomial(2, vec![pu, pv], coeff);
    }
    Ok(poly)
}

/// The three-variable correction polynomials entering the braid relation.
/// Each is assembled as a rational expression and certified to reduce to a
/// polynomial; a leftover denominator signals inadmissible parameters.
pub fn correction_polys(
    params: &KLRParams,
    i: Index,
) -> Result<(MPoly, MPoly), KLRError> {
    let p = params.p(i);
    // u = x_1, v = x_2, w = x_3 in a 3-variable ring.
    let at = |a: usize, b: usize| -> MPoly { p.embedded(3, &[a, b]) };
    let frac = |num: MPoly, d1: (usize, usize), d2: (usize, usize)| -> MRat {
        let mut den = BTreeMap::new();
        *den.entry(d1).or_insert(0u32) += 1;
        *den.entry(d2).or_insert(0u32) += 1;
        let mut r = MRat::from_poly(num);
        for (&(a, b), &m) in &den {
            for _ in 0..m {
                r = &r * &MRat::quotient_by_diff(MPoly::one(3), a, b);
            }
        }
        r
    };
    // P'(u,v,w) = P(v,u)P(u,w)/((u-v)(u-w)) + P(u,w)P(v,w)/((u-w)(v-w))
    //             - P(u,v)P(v,w)/((u-v)(v-w)).
    let p_prime = &(&frac(&at(1, 0) * &at(0, 2), (0, 1), (0, 2))
        + &frac(&at(0, 2) * &at(1, 2), (0, 2), (1, 2)))
        - &frac(&at(0, 1) * &at(1, 2), (0, 1), (1, 2));
    // P''(u,v,w) = -P(u,v)P(u,w)/((u-v)(u-w)) - P(u,w)P(w,v)/((u-w)(v-w))
    //              + P(u,v)P(v,w)/((u-v)(v-w)).
    let p_dprime = &(&(-&frac(&at(0, 1) * &at(0, 2), (0, 1), (0, 2)))
        - &frac(&at(0, 2) * &at(2, 1), (0, 2), (1, 2)))
        + &frac(&at(0, 1) * &at(1, 2), (0, 1), (1, 2));
    let p1 = p_prime
        .as_poly()
        .ok_or_else(|| KLRError::NonPolynomial(format!("P'_{} = {}", i, p_prime)))?;
    let p2 = p_dprime
        .as_poly()
        .ok_or_else(|| KLRError::NonPolynomial(format!("P''_{} = {}", i, p_dprime)))?;
    Ok((p1.clone(), p2.clone()))
}

/// `(Q_{i,j}(u, v) - Q_{i,j}(w, v)) / (u - w)`, certified polynomial.
pub fn correction_q(params: &KLRParams, i: Index, j: Index) -> Result<MPoly, KLRError> {
    let q_uv = params.q(i, j).embedded(3, &[0, 1]);
    let q_wv = params.q(i, j).embedded(3, &[2, 1]);
    let diff = MRat::quotient_by_diff(&q_uv - &q_wv, 0, 2);
    diff.as_poly()
        .cloned()
        .ok_or_else(|| KLRError::NonPolynomial(format!("Qbar_{},{} = {}", i, j, diff)))
}
