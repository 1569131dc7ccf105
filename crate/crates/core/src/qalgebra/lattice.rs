//! The crystal lattice `L(infinity)` at bounded depth and the crystal
//! `B(infinity)` as a decorated graph.
//!
//! All `ftilde`-monomials up to the depth are generated; per weight, their
//! span is echelonized over the local ring `A_0` (pivoting on coordinates
//! of minimal `q`-valuation, scaling by units only), and nodes are the
//! distinct nonzero classes at `q = 0`.  Edge well-definedness on classes
//! and the mutual-inverse law are checked during construction rather than
//! assumed.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::cartan::{Index, RootVector, WeightVector};
use crate::crystal::{CrystalGraph, CrystalNode, Edge, ExtInt};
use crate::qarith::QRat;

use super::boson::LowerDir;
use super::vector::UqVector;
use super::{linalg, QAlgebraError, UqAlgebra};

/// An `A_0`-echelon basis of one weight space of the lattice.
#[derive(Debug, Clone)]
pub struct LatticeBasis {
    pub alpha: RootVector,
    /// Echelon basis vectors; pivoted on dual coordinates of minimal
    /// valuation.
    pub vectors: Vec<UqVector>,
    /// Classes mod `q` of the crystal-node representatives at this
    /// weight, in echelon coordinates; linearly independent.
    pub classes_at_zero: Vec<Vec<BigRational>>,
}

impl LatticeBasis {
    /// Echelonize a generating set over `A_0`.
    fn echelonize(
        algebra: &UqAlgebra,
        alpha: &RootVector,
        generators: &[UqVector],
    ) -> Result<LatticeBasis, QAlgebraError> {
        let mut pool: Vec<(UqVector, Vec<QRat>)> = generators
            .iter()
            .map(|g| Ok((g.clone(), algebra.dual_coords(g)?)))
            .collect::<Result<_, QAlgebraError>>()?;
        let mut vectors = Vec::new();
        loop {
            pool.retain(|(_, coords)| coords.iter().any(|c| !c.is_zero()));
            if pool.is_empty() {
                break;
            }
            // Pivot of minimal q-valuation across the pool.
            let mut best: Option<(usize, usize, i64)> = None;
            for (v_idx, (_, coords)) in pool.iter().enumerate() {
                for (c_idx, c) in coords.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let val = c.val0().unwrap();
                    if best.map_or(true, |(_, _, bv)| val < bv) {
                        best = Some((v_idx, c_idx, val));
                    }
                }
            }
            let (v_idx, c_idx, _) = best.unwrap();
            let (pivot_vec, pivot_coords) = pool.swap_remove(v_idx);
            for (w, coords) in pool.iter_mut() {
                let ratio = &coords[c_idx] / &pivot_coords[c_idx];
                if ratio.is_zero() {
                    continue;
                }
                debug_assert!(ratio.val0().unwrap() >= 0, "elimination multiplier is in A_0");
                *w = w.minus(&pivot_vec.scaled(&ratio));
                for (c, p) in coords.iter_mut().zip(&pivot_coords) {
                    *c = &*c - &(&ratio * p);
                }
            }
            vectors.push((pivot_vec, pivot_coords));
        }
        Ok(LatticeBasis {
            alpha: alpha.clone(),
            vectors: vectors.into_iter().map(|(v, _)| v).collect(),
            classes_at_zero: Vec::new(),
        })
    }

    /// Coordinates of `v` over the echelon basis (unique).
    pub fn express(&self, algebra: &UqAlgebra, v: &UqVector) -> Result<Vec<QRat>, QAlgebraError> {
        algebra
            .express_in(&self.vectors, v)?
            .ok_or_else(|| QAlgebraError::SolveFailed(format!("lattice coordinates at {}", self.alpha)))
    }

    /// Lattice membership: all coordinates in `A_0`.
    pub fn contains(&self, algebra: &UqAlgebra, v: &UqVector) -> Result<bool, QAlgebraError> {
        let coords = self.express(algebra, v)?;
        Ok(coords.iter().all(|c| c.is_zero() || c.val0().unwrap() >= 0))
    }

    /// The class of `v` mod `qL` in echelon coordinates; `None` when `v`
    /// is outside the lattice.
    pub fn class(
        &self,
        algebra: &UqAlgebra,
        v: &UqVector,
    ) -> Result<Option<Vec<BigRational>>, QAlgebraError> {
        let coords = self.express(algebra, v)?;
        if coords.iter().any(|c| !c.is_zero() && c.val0().unwrap() < 0) {
            return Ok(None);
        }
        Ok(Some(coords.iter().map(|c| c.ev0().unwrap()).collect()))
    }
}

/// `B(infinity)` at bounded depth: the decorated crystal graph plus the
/// lattice data and per-node representatives that produced it.
pub struct BInftyData {
    pub depth: u64,
    pub graph: CrystalGraph,
    /// Node id -> representative vector (the first monomial discovered in
    /// the class).
    pub reps: Vec<UqVector>,
    /// Node id -> applied `ftilde`-string: the node is
    /// `ftilde_{p_last} ... ftilde_{p_first} 1`.
    pub paths: Vec<Vec<Index>>,
    /// Node id -> alpha with `wt = -alpha`.
    pub node_weights: Vec<RootVector>,
    pub lattices: BTreeMap<RootVector, LatticeBasis>,
    pub nodes_by_weight: BTreeMap<RootVector, Vec<usize>>,
}

impl BInftyData {
    pub fn root(&self) -> usize {
        0
    }

    /// `|B(infinity)_{-alpha}|`.
    pub fn node_count(&self, alpha: &RootVector) -> usize {
        self.nodes_by_weight.get(alpha).map_or(0, |v| v.len())
    }
}

struct Monomial {
    path: Vec<Index>,
    vec: UqVector,
}

/// Generate the lattice and crystal `B(infinity)` from `1` by BFS over
/// all `ftilde`-strings of length at most `depth`.
pub fn binfty(algebra: &UqAlgebra, depth: u64) -> Result<BInftyData, QAlgebraError> {
    if depth > algebra.cap() {
        return Err(QAlgebraError::CapExceeded { height: depth, cap: algebra.cap() });
    }
    let datum = algebra.datum;
    let mut levels: Vec<Vec<Monomial>> =
        vec![vec![Monomial { path: Vec::new(), vec: UqVector::one() }]];
    for level in 0..depth as usize {
        let mut next = Vec::new();
        for mono in &levels[level] {
            for i in datum.indices() {
                let image = algebra.kashiwara_lower(i, &mono.vec, LowerDir::Ftilde)?;
                let mut path = mono.path.clone();
                path.push(i);
                next.push(Monomial { path, vec: image });
            }
        }
        levels.push(next);
    }

    // Per-weight lattices from all monomials of that weight.
    let mut gens_by_weight: BTreeMap<RootVector, Vec<usize>> = BTreeMap::new();
    let all: Vec<&Monomial> = levels.iter().flatten().collect();
    for (idx, mono) in all.iter().enumerate() {
        gens_by_weight.entry(mono.vec.alpha().clone()).or_default().push(idx);
    }
    let mut lattices: BTreeMap<RootVector, LatticeBasis> = BTreeMap::new();
    for (alpha, gen_ids) in &gens_by_weight {
        let gens: Vec<UqVector> = gen_ids.iter().map(|&k| all[k].vec.clone()).collect();
        lattices.insert(alpha.clone(), LatticeBasis::echelonize(algebra, alpha, &gens)?);
    }

    // Nodes: distinct nonzero classes mod q, per weight.
    let mut graph = CrystalGraph::new(format!("B(infinity) depth {}", depth));
    let mut reps: Vec<UqVector> = Vec::new();
    let mut paths: Vec<Vec<Index>> = Vec::new();
    let mut node_weights: Vec<RootVector> = Vec::new();
    let mut nodes_by_weight: BTreeMap<RootVector, Vec<usize>> = BTreeMap::new();
    let mut class_of_mono: Vec<Option<usize>> = vec![None; all.len()];
    let mut class_table: BTreeMap<RootVector, Vec<(Vec<BigRational>, usize)>> = BTreeMap::new();
    // Monomials were generated level by level, so parents precede
    // children in `all`.
    for (idx, mono) in all.iter().enumerate() {
        let alpha = mono.vec.alpha().clone();
        let lattice = &lattices[&alpha];
        let class = lattice.class(algebra, &mono.vec)?.ok_or_else(|| {
            QAlgebraError::LatticeInconsistent(format!(
                "monomial {:?} escapes its own lattice",
                mono.path
            ))
        })?;
        if class.iter().all(|c| c.is_zero()) {
            return Err(QAlgebraError::LatticeInconsistent(format!(
                "ftilde-monomial {:?} vanishes mod q",
                mono.path
            )));
        }
        let existing = class_table
            .get(&alpha)
            .and_then(|entries| entries.iter().find(|(c, _)| *c == class).map(|&(_, id)| id));
        let node_id = match existing {
            Some(id) => id,
            None => {
                let wt = WeightVector::zero().sub_root(datum, &alpha);
                let id = graph.add_node(CrystalNode {
                    label: if mono.path.is_empty() {
                        "1".to_string()
                    } else {
                        mono.path
                            .iter()
                            .rev()
                            .map(|&i| format!("f{}", datum.name(i)))
                            .collect::<Vec<_>>()
                            .join("")
                    },
                    wt,
                    eps: BTreeMap::new(),
                    phi: BTreeMap::new(),
                });
                reps.push(mono.vec.clone());
                paths.push(mono.path.clone());
                node_weights.push(alpha.clone());
                nodes_by_weight.entry(alpha.clone()).or_default().push(id);
                class_table.entry(alpha.clone()).or_default().push((class, id));
                id
            }
        };
        class_of_mono[idx] = Some(node_id);
    }

    // Record the node classes on the lattices and check independence.
    for (alpha, entries) in &class_table {
        let classes: Vec<Vec<BigRational>> = entries.iter().map(|(c, _)| c.clone()).collect();
        let as_qrat: linalg::Matrix = classes
            .iter()
            .map(|row| row.iter().map(|c| QRat::from_ratio(c.clone())).collect())
            .collect();
        if linalg::rank(&as_qrat) != classes.len() {
            return Err(QAlgebraError::LatticeInconsistent(format!(
                "node classes at weight {} are dependent",
                alpha
            )));
        }
        lattices.get_mut(alpha).unwrap().classes_at_zero = classes;
    }

    // ftilde edges from the monomial tree, checked for well-definedness
    // on classes.
    let mut mono_index: BTreeMap<Vec<Index>, usize> = BTreeMap::new();
    for (idx, mono) in all.iter().enumerate() {
        mono_index.insert(mono.path.clone(), idx);
    }
    for (idx, mono) in all.iter().enumerate() {
        let node = class_of_mono[idx].unwrap();
        if mono.path.len() as u64 >= depth {
            for i in datum.indices() {
                graph.set_ftilde(node, i, Edge::Frontier);
            }
            continue;
        }
        for i in datum.indices() {
            let mut child_path = mono.path.clone();
            child_path.push(i);
            let child_node = class_of_mono[mono_index[&child_path]].unwrap();
            match graph.ftilde(node, i) {
                Edge::Zero => graph.set_ftilde(node, i, Edge::Node(child_node)),
                Edge::Node(existing) if existing == child_node => {}
                Edge::Node(_) => {
                    return Err(QAlgebraError::LatticeInconsistent(format!(
                        "ftilde_{} ill-defined on the class of {:?}",
                        datum.name(i),
                        mono.path
                    )))
                }
                Edge::Frontier => {}
            }
        }
    }

    // etilde edges from representatives, with the inverse law checked.
    for node in 0..reps.len() {
        let alpha = &node_weights[node];
        for i in datum.indices() {
            let up = algebra.kashiwara_lower(i, &reps[node], LowerDir::Etilde)?;
            if algebra.vec_is_zero(&up)? {
                graph.set_etilde(node, i, Edge::Zero);
                continue;
            }
            let beta = alpha.checked_sub(&RootVector::simple(i)).expect("etilde went up");
            let class = lattices[&beta].class(algebra, &up)?.ok_or_else(|| {
                QAlgebraError::LatticeInconsistent(format!("etilde image outside lattice at {}", beta))
            })?;
            let target = class_table[&beta]
                .iter()
                .find(|(c, _)| *c == class)
                .map(|&(_, id)| id)
                .ok_or_else(|| {
                    QAlgebraError::LatticeInconsistent(format!(
                        "etilde image is not a node class at {}",
                        beta
                    ))
                })?;
            graph.set_etilde(node, i, Edge::Node(target));
            // Mutual inverse where ftilde is known.
            if let Edge::Node(back) = graph.ftilde(target, i) {
                if back != node {
                    return Err(QAlgebraError::LatticeInconsistent(format!(
                        "ftilde etilde != id at node {}",
                        node
                    )));
                }
            }
        }
    }

    // Decorations: eps_i real by etilde-string length, 0 imaginary.
    for node in 0..reps.len() {
        let mut eps = BTreeMap::new();
        let mut phi = BTreeMap::new();
        for i in datum.indices() {
            let e = if datum.is_real(i) {
                let mut count = 0i64;
                let mut cursor = node;
                while let Edge::Node(parent) = graph.etilde(cursor, i) {
                    count += 1;
                    cursor = parent;
                }
                count
            } else {
                0
            };
            let wt_pairing = graph.node(node).wt.pairing(i);
            eps.insert(i, ExtInt::Int(e));
            phi.insert(i, ExtInt::Int(e + wt_pairing));
        }
        let wt = graph.node(node).wt.clone();
        let label = graph.node(node).label.clone();
        graph.replace_node_data(node, CrystalNode { label, wt, eps, phi });
    }

    Ok(BInftyData { depth, graph, reps, paths, node_weights, lattices, nodes_by_weight })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::tests_support::{d0, d1, d2, dim};

    #[test]
    fn rank_one_real_is_a_chain_with_increasing_eps() {
        let datum = d0();
        let algebra = UqAlgebra::new(&datum, 5);
        let data = binfty(&algebra, 4).unwrap();
        assert_eq!(data.graph.len(), 5);
        for k in 0..5 {
            assert_eq!(data.graph.node(k).eps_i(0), ExtInt::Int(k as i64));
        }
        assert!(data.graph.axiom_check(&datum).all_passed());
    }

    #[test]
    fn rank_one_imaginary_is_a_chain_with_zero_eps() {
        for datum in [dim(), d2()] {
            let algebra = UqAlgebra::new(&datum, 5);
            let data = binfty(&algebra, 4).unwrap();
            assert_eq!(data.graph.len(), 5);
            for k in 0..5 {
                assert_eq!(data.graph.node(k).eps_i(0), ExtInt::Int(0));
            }
            assert!(data.graph.axiom_check(&datum).all_passed());
        }
    }

    #[test]
    fn d1_has_two_nodes_at_mixed_weight() {
        let datum = d1();
        let algebra = UqAlgebra::new(&datum, 4);
        let data = binfty(&algebra, 3).unwrap();
        let alpha = RootVector::from_coeffs([(0, 1), (1, 1)]);
        assert_eq!(data.node_count(&alpha), 2, "f1 f2 1 and f2 f1 1 are distinct classes");
        assert!(data.graph.axiom_check(&datum).all_passed());
    }

    #[test]
    fn node_counts_match_quotient_dimensions() {
        let datum = d1();
        let algebra = UqAlgebra::new(&datum, 4);
        let data = binfty(&algebra, 3).unwrap();
        for alpha in RootVector::all_up_to_height(&datum, 3) {
            let dim = algebra.weight_space(&alpha).unwrap().dimension;
            assert_eq!(data.node_count(&alpha), dim, "alpha = {}", alpha);
        }
    }
}
