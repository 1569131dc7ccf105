//! The negative half of the quantum generalized Kac-Moody algebra as an
//! exact computational object.
//!
//! Elements are carried in word coordinates of the free algebra on the
//! `f_i`; equality, kernels and dimensions live in the radical quotient,
//! reached through the twisted bilinear pairing (the dual chart).  On top
//! of this sit the boson operators, Kashiwara operators, the crystal
//! lattice with `B(infinity)`, the lower and upper global bases and the
//! perfect-basis machinery.

pub mod boson;
pub mod global;
pub mod lattice;
pub mod linalg;
pub mod pairing;
pub mod vector;
pub mod verify;

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use crate::cartan::{BorcherdsCartanDatum, Index, RootVector, Seq};
use crate::qarith::QRat;

pub use global::{global_basis, perfect_check, GlobalBasis, PerfectOutcome};
pub use lattice::{BInftyData, LatticeBasis};
pub use pairing::WeightSpaceData;
pub use vector::UqVector;
pub use verify::verify_boson;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QAlgebraError {
    CapExceeded { height: u64, cap: u64 },
    WeightMismatch(String),
    /// The string-decomposition linear system was inconsistent, which
    /// signals corrupted quotient data.
    SolveFailed(String),
    /// A monomial left the crystal lattice or the monomial-to-class
    /// transition matrix was singular.
    TriangularityFailed(String),
    /// Crystal operators disagreed on a class, signalling that the
    /// generated lattice is not a crystal lattice.
    LatticeInconsistent(String),
}

impl fmt::Display for QAlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QAlgebraError::CapExceeded { height, cap } => {
                write!(f, "height {} exceeds cap {}", height, cap)
            }
            QAlgebraError::WeightMismatch(what) => write!(f, "weight mismatch: {}", what),
            QAlgebraError::SolveFailed(what) => write!(f, "linear solve failed: {}", what),
            QAlgebraError::TriangularityFailed(what) => {
                write!(f, "triangularity failed: {}", what)
            }
            QAlgebraError::LatticeInconsistent(what) => {
                write!(f, "lattice inconsistency: {}", what)
            }
        }
    }
}

impl std::error::Error for QAlgebraError {}

/// Shared computation state: the datum, a height cap, and caches for word
/// pairings, weight spaces and boson kernels.  Weight-space data is
/// computed once per weight and shared read-only.
pub struct UqAlgebra<'d> {
    pub datum: &'d BorcherdsCartanDatum,
    cap: u64,
    pair_cache: RefCell<HashMap<(Seq, Seq), QRat>>,
    weight_cache: RefCell<HashMap<RootVector, Rc<WeightSpaceData>>>,
    kernel_cache: RefCell<HashMap<(Index, RootVector), Rc<Vec<UqVector>>>>,
}

impl<'d> UqAlgebra<'d> {
    pub fn new(datum: &'d BorcherdsCartanDatum, cap: u64) -> Self {
        UqAlgebra {
            datum,
            cap,
            pair_cache: RefCell::new(HashMap::new()),
            weight_cache: RefCell::new(HashMap::new()),
            kernel_cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub(crate) fn check_height(&self, alpha: &RootVector) -> Result<(), QAlgebraError> {
        if alpha.height() > self.cap {
            return Err(QAlgebraError::CapExceeded { height: alpha.height(), cap: self.cap });
        }
        Ok(())
    }

    pub(crate) fn pair_cache(&self) -> &RefCell<HashMap<(Seq, Seq), QRat>> {
        &self.pair_cache
    }

    pub(crate) fn weight_cache(&self) -> &RefCell<HashMap<RootVector, Rc<WeightSpaceData>>> {
        &self.weight_cache
    }

    pub(crate) fn kernel_cache(&self) -> &RefCell<HashMap<(Index, RootVector), Rc<Vec<UqVector>>>> {
        &self.kernel_cache
    }

    /// `q_i = q^{s_i}` raised to an integer power.
    pub(crate) fn qi_pow(&self, i: Index, n: i64) -> QRat {
        QRat::q_pow(self.datum.symmetrizer(i) * n)
    }
}
