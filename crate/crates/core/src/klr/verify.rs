//! Exact verifiers: the defining relations of `R(alpha)`, the Serre-complex
//! identities, centrality of symmetric polynomials, and the exploratory
//! idempotent computation for `a_ii = 0` parameters.

use crate::cartan::{BorcherdsCartanDatum, Index, RootVector, Seq};
use crate::qarith::QRat;
use crate::report::Report;

use super::element::KLRElement;
use super::operator::KLROperator;
use super::params::{correction_polys, correction_q, KLRParams};
use super::poly::{divided_difference, MPoly};
use super::words::Perm;
use super::{AlphaContext, KLRError, KLR};

/// Check every instance of the defining relation families on `R(alpha)` as
/// exact operator identities.  The report carries one line per family.
pub fn verify_relations(ctx: &AlphaContext) -> Report {
    let mut report = Report::new(format!("relations alpha={}", ctx.alpha()));
    let d = ctx.nvars();
    let seqs: Vec<Seq> = ctx.seqs().to_vec();
    let params = &ctx.klr.params;

    let mut family = |name: &str, failures: Vec<String>, instances: usize| {
        if failures.is_empty() {
            report.push(name, format!("{} instances", instances), "pass", "pass", true);
        } else {
            for f in failures {
                report.push(name, f, "0", "nonzero", false);
            }
        }
    };

    // Idempotents and polynomial generators.
    {
        let mut failures = Vec::new();
        let mut instances = 0;
        for i in &seqs {
            for j in &seqs {
                instances += 1;
                let lhs = ctx.unit_op(i).unwrap().compose(&ctx.unit_op(j).unwrap());
                let rhs = if i == j { ctx.unit_op(i).unwrap() } else { KLROperator::zero(d) };
                if lhs != rhs {
                    failures.push(format!("1_{:?} 1_{:?}", i, j));
                }
            }
        }
        for k in 1..=d {
            for l in 1..=d {
                instances += 1;
                let xk = ctx.x_op(k).unwrap();
                let xl = ctx.x_op(l).unwrap();
                if xk.compose(&xl) != xl.compose(&xk) {
                    failures.push(format!("x_{} x_{}", k, l));
                }
            }
            for i in &seqs {
                instances += 1;
                let xk = ctx.x_op(k).unwrap();
                let u = ctx.unit_op(i).unwrap();
                if xk.compose(&u) != u.compose(&xk) {
                    failures.push(format!("x_{} 1_{:?}", k, i));
                }
            }
        }
        family("idempotent/polynomial relations", failures, instances);
    }

    // tau_t 1_i = 1_{r_t(i)} tau_t.
    {
        let mut failures = Vec::new();
        let mut instances = 0;
        for t in 1..d {
            let tau = ctx.tau_op(t).unwrap();
            for i in &seqs {
                instances += 1;
                let mut ri = i.clone();
                ri.swap(t - 1, t);
                let lhs = tau.compose(&ctx.unit_op(i).unwrap());
                let rhs = ctx.unit_op(&ri).unwrap().compose(&tau);
                if lhs != rhs {
                    failures.push(format!("tau_{} 1_{:?}", t, i));
                }
            }
        }
        family("tau routing", failures, instances);
    }

    // Distant braid commutation: tau_t tau_s = tau_s tau_t for |t - s| > 1.
    {
        let mut failures = Vec::new();
        let mut instances = 0;
        for t in 1..d {
            for s in t + 2..d {
                instances += 1;
                let a = ctx.tau_op(t).unwrap();
                let b = ctx.tau_op(s).unwrap();
                if a.compose(&b) != b.compose(&a) {
                    failures.push(format!("tau_{} tau_{}", t, s));
                }
            }
        }
        family("distant commutation", failures, instances);
    }

    // tau_t^2 1_i.
    {
        let mut failures = Vec::new();
        let mut instances = 0;
        for t in 1..d {
            let tau = ctx.tau_op(t).unwrap();
            for i in &seqs {
                instances += 1;
                let unit = ctx.unit_op(i).unwrap();
                let lhs = tau.compose(&tau.compose(&unit));
                let (a, b) = (i[t - 1], i[t]);
                let rhs = if a == b {
                    let p = params.p(a).embedded(d, &[t - 1, t]);
                    let del_p = divided_difference(&p, t - 1);
                    ctx.mult_poly_all(&del_p).compose(&tau.compose(&unit))
                } else {
                    let q = params.q(a, b).embedded(d, &[t - 1, t]);
                    ctx.mult_poly_op(i, &q).unwrap()
                };
                if lhs != rhs {
                    failures.push(format!("tau_{}^2 1_{:?}", t, i));
                }
            }
        }
        family("quadratic relation", failures, instances);
    }

    // (tau_t x_k - x_{r_t(k)} tau_t) 1_i.
    {
        let mut failures = Vec::new();
        let mut instances = 0;
        for t in 1..d {
            let tau = ctx.tau_op(t).unwrap();
            for k in 1..=d {
                let rtk = if k == t {
                    t + 1
                } else if k == t + 1 {
                    t
                } else {
                    k
                };
                for i in &seqs {
                    instances += 1;
                    let unit = ctx.unit_op(i).unwrap();
                    let lhs = &tau.compose(&ctx.x_op(k).unwrap().compose(&unit))
                        - &ctx.x_op(rtk).unwrap().compose(&tau.compose(&unit));
                    let eq = i[t - 1] == i[t];
                    let rhs = if eq && k == t {
                        let p = params.p(i[t - 1]).embedded(d, &[t - 1, t]);
                        ctx.mult_poly_op(i, &(-&p)).unwrap()
                    } else if eq && k == t + 1 {
                        let p = params.p(i[t - 1]).embedded(d, &[t - 1, t]);
                        ctx.mult_poly_op(i, &p).unwrap()
                    } else {
                        KLROperator::zero(d)
                    };
                    if lhs != rhs {
                        failures.push(format!("(tau_{} x_{} - x_{} tau_{}) 1_{:?}", t, k, rtk, t, i));
                    }
                }
            }
        }
        family("mixed relation", failures, instances);
    }

    // Braid relation with corrections.
    {
        let mut failures = Vec::new();
        let mut instances = 0;
        for t in 1..d.saturating_sub(1) {
            let tau_t = ctx.tau_op(t).unwrap();
            let tau_t1 = ctx.tau_op(t + 1).unwrap();
            for i in &seqs {
                instances += 1;
                let unit = ctx.unit_op(i).unwrap();
                let lhs = &tau_t1.compose(&tau_t.compose(&tau_t1.compose(&unit)))
                    - &tau_t.compose(&tau_t1.compose(&tau_t.compose(&unit)));
                let (a, b, c) = (i[t - 1], i[t], i[t + 1]);
                let rhs = if a == c && a != b {
                    let p = params.p(a).embedded(d, &[t - 1, t + 1]);
                    let qbar = match correction_q(params, a, b) {
                        Ok(q) => q.embedded(d, &[t - 1, t, t + 1]),
                        Err(e) => {
                            failures.push(format!("Qbar for 1_{:?}: {}", i, e));
                            continue;
                        }
                    };
                    ctx.mult_poly_op(i, &(&p * &qbar)).unwrap()
                } else if a == b && b == c {
                    let (p1, p2) = match correction_polys(params, a) {
                        Ok(pair) => pair,
                        Err(e) => {
                            failures.push(format!("Pbar for 1_{:?}: {}", i, e));
                            continue;
                        }
                    };
                    let p1 = p1.embedded(d, &[t - 1, t, t + 1]);
                    let p2 = p2.embedded(d, &[t - 1, t, t + 1]);
                    &ctx.mult_poly_all(&p1).compose(&tau_t.compose(&unit))
                        + &ctx.mult_poly_all(&p2).compose(&tau_t1.compose(&unit))
                } else {
                    KLROperator::zero(d)
                };
                if lhs != rhs {
                    failures.push(format!("braid at t = {} on 1_{:?}", t, i));
                }
            }
        }
        family("braid relation", failures, instances);
    }

    report
}

/// Block-diagonal tensor of normal-form elements (concatenated sequences,
/// shifted permutations, concatenated exponents).
pub fn tensor_elements(parts: &[&KLRElement]) -> KLRElement {
    let total: usize = parts.iter().map(|p| p.nvars()).sum();
    let mut alpha = RootVector::zero();
    for p in parts {
        alpha = alpha.plus(p.alpha());
    }
    let mut out = KLRElement::zero(alpha);
    // Cartesian product over the parts' terms.
    let mut stack: Vec<(Seq, Vec<usize>, Vec<u16>, QRat)> =
        vec![(Vec::new(), Vec::new(), Vec::new(), QRat::one())];
    for part in parts {
        let mut next = Vec::new();
        for (seq, images, exps, coeff) in &stack {
            for ((s, w, e), c) in part.terms() {
                let offset = seq.len();
                let mut seq2 = seq.clone();
                seq2.extend_from_slice(s);
                let mut images2 = images.clone();
                images2.extend((0..w.len()).map(|k| w.image(k) + offset));
                let mut exps2 = exps.clone();
                exps2.extend_from_slice(e);
                next.push((seq2, images2, exps2, coeff * c));
            }
        }
        stack = next;
    }
    for (seq, images, exps, coeff) in stack {
        debug_assert_eq!(seq.len(), total);
        out.insert_add(seq, Perm::from_images(images), exps, coeff);
    }
    out
}

/// Verify the Serre-complex identities for real `i` and `j != i`.
///
/// For `a_ij != 0` this checks, exactly and in the operator model, that the
/// up and down compositions vanish, the two end identities equal
/// `t_{i,j;-a_ij,0}` times the identity, and the middle splitting identity
/// carries the sign `(-1)^{b-1}`.  For `a_ij = 0` it instead checks that
/// the two crossing maps are mutually inverse up to `t_{i,j;0,0}`.
pub fn serre_verify(klr: &KLR, i: Index, j: Index) -> Result<Report, KLRError> {
    let datum = klr.datum;
    if !datum.is_real(i) {
        return Err(KLRError::OutOfRange(format!("index {} must be real", i)));
    }
    if i == j {
        return Err(KLRError::OutOfRange("serre_verify requires i != j".into()));
    }
    let mut report = Report::new(format!("serre i={} j={}", datum.name(i), datum.name(j)));
    let t_unit = klr.params.t_unit(datum, i, j);

    if datum.a(i, j) == 0 {
        let alpha = RootVector::simple(i).plus_simple(j);
        let ctx = klr.context(alpha, 2)?;
        let (lo, hi) = (i.min(j), i.max(j));
        let seq_lo_hi: Seq = vec![lo, hi];
        let seq_hi_lo: Seq = vec![hi, lo];
        let tau = ctx.tau_op(1)?;
        let plus = tau.compose(&ctx.unit_op(&seq_hi_lo)?);
        let minus = tau.compose(&ctx.unit_op(&seq_lo_hi)?);
        let t_op = |seq: &Seq| ctx.unit_op(seq).unwrap().scaled(&t_unit);
        report.check(
            "tau- tau+ = t id",
            format!("1_{:?}", seq_hi_lo),
            minus.compose(&plus) == t_op(&seq_hi_lo),
        );
        report.check(
            "tau+ tau- = t id",
            format!("1_{:?}", seq_lo_hi),
            plus.compose(&minus) == t_op(&seq_lo_hi),
        );
        return Ok(report);
    }

    let n = (1 - datum.a(i, j)) as usize;
    let d = n + 1;
    let alpha = RootVector::from_coeffs([(i, n as u64), (j, 1)]);
    let ctx = klr.context(alpha, d as u64)?;

    // e_{a,b} = e_{i,a} (x) 1_{(j)} (x) e_{i,b} with divided-power blocks.
    let block = |a: usize, b: usize| -> Result<KLROperator, KLRError> {
        let mut parts: Vec<KLRElement> = Vec::new();
        if a > 0 {
            parts.push(klr.divided_idempotent(i, a as u64)?);
        }
        parts.push(KLRElement::idempotent(&vec![j]));
        if b > 0 {
            parts.push(klr.divided_idempotent(i, b as u64)?);
        }
        let refs: Vec<&KLRElement> = parts.iter().collect();
        Ok(ctx.operator_of(&tensor_elements(&refs)))
    };

    // alpha^+_{a,b} = e_{a,b} tau_{d-1} .. tau_{a+1} e_{a+1,b-1}  (b >= 1),
    // alpha^-_{a,b} = e_{a,b} tau_1 .. tau_a e_{a-1,b+1}          (a >= 1).
    let alpha_plus = |a: usize, b: usize| -> Result<KLROperator, KLRError> {
        assert!(b >= 1 && a + b == n);
        let mut acc = block(a + 1, b - 1)?;
        for t in a + 1..=d - 1 {
            acc = ctx.tau_op(t)?.compose(&acc);
        }
        Ok(block(a, b)?.compose(&acc))
    };
    let alpha_minus = |a: usize, b: usize| -> Result<KLROperator, KLRError> {
        assert!(a >= 1 && a + b == n);
        let mut acc = block(a - 1, b + 1)?;
        for t in (1..=a).rev() {
            acc = ctx.tau_op(t)?.compose(&acc);
        }
        Ok(block(a, b)?.compose(&acc))
    };

    for a in 1..n {
        let b = n - a;
        let up = alpha_plus(a - 1, b + 1)?.compose(&alpha_plus(a, b)?);
        report.check("d+ d+ = 0", format!("(a,b)=({},{})", a, b), up.is_zero());
    }
    for b in 1..n {
        let a = n - b;
        let down = alpha_minus(a + 1, b - 1)?.compose(&alpha_minus(a, b)?);
        report.check("d- d- = 0", format!("(a,b)=({},{})", a, b), down.is_zero());
    }

    let end_plus = alpha_minus(n, 0)?.compose(&alpha_plus(n - 1, 1)?);
    report.check(
        "d+_{N-1,1} d-_{N,0} = t id",
        format!("N={}", n),
        end_plus == block(n, 0)?.scaled(&t_unit),
    );
    let sign = if n % 2 == 1 { QRat::one() } else { QRat::from_int(-1) };
    let end_minus = alpha_plus(0, n)?.compose(&alpha_minus(1, n - 1)?);
    report.check(
        "d-_{1,N-1} d+_{0,N} = (-1)^{N-1} t id",
        format!("N={}", n),
        end_minus == block(0, n)?.scaled(&(&sign * &t_unit)),
    );

    for a in 1..n {
        let b = n - a;
        let lhs = &alpha_plus(a, b)?.compose(&alpha_minus(a + 1, b - 1)?)
            - &alpha_minus(a, b)?.compose(&alpha_plus(a - 1, b + 1)?);
        let sign = if b % 2 == 1 { QRat::one() } else { QRat::from_int(-1) };
        report.check(
            "middle splitting",
            format!("(a,b)=({},{})", a, b),
            lhs == block(a, b)?.scaled(&(&sign * &t_unit)),
        );
    }

    Ok(report)
}

/// Does multiplication by `f` (the same polynomial on every component)
/// commute with every generator of `R(alpha)`?
pub fn center_check(ctx: &AlphaContext, f: &MPoly) -> bool {
    let mf = ctx.mult_poly_all(f);
    for k in 1..=ctx.nvars() {
        let x = ctx.x_op(k).unwrap();
        if mf.compose(&x) != x.compose(&mf) {
            return false;
        }
    }
    for t in 1..ctx.nvars() {
        let tau = ctx.tau_op(t).unwrap();
        if mf.compose(&tau) != tau.compose(&mf) {
            return false;
        }
    }
    true
}

/// Exploratory (non-gating): for a single `a_ii = 0` index with
/// `P(u, v) = u - v` and `m = 3`, compute the squares and pairwise
/// products of `tau_1 tau_2`, `tau_2 tau_1` and `1 - tau_1 tau_2 -
/// tau_2 tau_1` in normal form and report whether they are orthogonal
/// primitive idempotents.  The outcome is recorded, not asserted.
pub fn exploratory_idempotents_a0() -> Report {
    let datum = BorcherdsCartanDatum::validate(vec!["i".into()], vec![vec![0]], vec![1]).unwrap();
    // P(u, v) = u - v.
    let p = &MPoly::var(2, 0) - &MPoly::var(2, 1);
    let params = KLRParams::default_for(&datum).with_p(&datum, 0, p).unwrap();
    let klr = KLR::with_params(&datum, params);
    let ctx = klr.context(RootVector::from_coeffs([(0, 3)]), 3).unwrap();
    let mut report = Report::new("exploratory a_ii=0 idempotents (P = u - v, m = 3)");

    let tau1 = ctx.tau_op(1).unwrap();
    let tau2 = ctx.tau_op(2).unwrap();
    let a = tau1.compose(&tau2);
    let b = tau2.compose(&tau1);
    let c = &(&ctx.identity_op() - &a) - &b;

    let named = [("tau1*tau2", &a), ("tau2*tau1", &b), ("1 - tau1*tau2 - tau2*tau1", &c)];
    for (name, op) in &named {
        let squared = op.compose(op);
        let idem = squared == **op;
        let nf = ctx
            .to_normal(&squared)
            .map(|e| e.display_expr(&datum, ctx.table()))
            .unwrap_or_else(|e| format!("<{}>", e));
        report.push(
            "idempotency (exploratory)",
            format!("({})^2", name),
            name.to_string(),
            nf,
            idem,
        );
    }
    for (x, (name_x, op_x)) in named.iter().enumerate() {
        for (name_y, op_y) in named.iter().skip(x + 1) {
            let prod = op_x.compose(op_y);
            report.push(
                "orthogonality (exploratory)",
                format!("({})*({})", name_x, name_y),
                "0",
                if prod.is_zero() { "0".into() } else { format!("nonzero ({} summands)", prod.summands().count()) },
                prod.is_zero(),
            );
        }
    }
    report
}
