//! Validated Borcherds-Cartan data and the combinatorics living on top of
//! it: the symmetric bilinear form, quantum integers and binomials for real
//! and imaginary indices, the sequence sets `Seq(alpha)` / `Seqd(alpha)`,
//! and weight bookkeeping.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::qarith::{QLaurent, QRat};

/// Index into the datum's ordered index list.
pub type Index = usize;

/// A plain sequence in `Seq(alpha)`, entries listed one by one.
pub type Seq = Vec<Index>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CartanError {
    UnknownIndex(String),
    /// Requested the real-type quantum integer on an imaginary index or
    /// vice versa.
    KindMismatch { index: String, requested: QIntKind },
    CapExceeded { height: u64, cap: u64 },
}

impl fmt::Display for CartanError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanError::UnknownIndex(name) => write!(f, "unknown index '{}'", name),
            CartanError::KindMismatch { index, requested } => {
                write!(f, "index '{}' is not {:?}", index, requested)
            }
            CartanError::CapExceeded { height, cap } => {
                write!(f, "height {} exceeds cap {}", height, cap)
            }
        }
    }
}

impl std::error::Error for CartanError {}

/// A single validation failure, citing the offending cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub cell: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.cell, self.message)
    }
}

/// An even integral Borcherds-Cartan matrix with symmetrizers, validated on
/// construction.  Indices with `a_ii = 2` are real, the rest imaginary.
/// Immutable after validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorcherdsCartanDatum {
    names: Vec<String>,
    a: Vec<Vec<i64>>,
    s: Vec<i64>,
    real: Vec<bool>,
}

impl BorcherdsCartanDatum {
    /// Validate the raw data; on failure every violated invariant is
    /// reported, citing the failing cell.
    pub fn validate(
        names: Vec<String>,
        a: Vec<Vec<i64>>,
        s: Vec<i64>,
    ) -> Result<Self, Vec<Violation>> {
        let n = names.len();
        let mut violations = Vec::new();
        let mut seen = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if let Some(first) = seen.insert(name.clone(), i) {
                violations.push(Violation {
                    cell: format!("indices[{}]", i),
                    message: format!("duplicate index name '{}' (first at {})", name, first),
                });
            }
        }
        if a.len() != n || a.iter().any(|row| row.len() != n) {
            violations.push(Violation {
                cell: "A".into(),
                message: format!("A must be a {}x{} matrix", n, n),
            });
            return Err(violations);
        }
        if s.len() != n {
            violations.push(Violation {
                cell: "s".into(),
                message: format!("s must have {} entries", n),
            });
            return Err(violations);
        }
        for i in 0..n {
            let aii = a[i][i];
            if aii != 2 && !(aii <= 0 && aii % 2 == 0) {
                violations.push(Violation {
                    cell: format!("a_{}{}", names[i], names[i]),
                    message: format!("a_{}{} = {} not 2 nor even <= 0", names[i], names[i], aii),
                });
            }
            if s[i] <= 0 {
                violations.push(Violation {
                    cell: format!("s_{}", names[i]),
                    message: format!("symmetrizer s_{} = {} must be positive", names[i], s[i]),
                });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                if a[i][j] > 0 {
                    violations.push(Violation {
                        cell: format!("a_{}{}", names[i], names[j]),
                        message: format!("off-diagonal a_{}{} = {} > 0", names[i], names[j], a[i][j]),
                    });
                }
                if i < j && ((a[i][j] == 0) != (a[j][i] == 0)) {
                    violations.push(Violation {
                        cell: format!("a_{}{}", names[i], names[j]),
                        message: format!("a_{}{}=0 xor a_{}{}=0", names[i], names[j], names[j], names[i]),
                    });
                }
                if i < j && s[i] * a[i][j] != s[j] * a[j][i] {
                    violations.push(Violation {
                        cell: format!("a_{}{}", names[i], names[j]),
                        message: format!(
                            "DA not symmetric: s_{}*a_{}{} = {} but s_{}*a_{}{} = {}",
                            names[i],
                            names[i],
                            names[j],
                            s[i] * a[i][j],
                            names[j],
                            names[j],
                            names[i],
                            s[j] * a[j][i]
                        ),
                    });
                }
            }
        }
        if !violations.is_empty() {
            return Err(violations);
        }
        let real = (0..n).map(|i| a[i][i] == 2).collect();
        Ok(BorcherdsCartanDatum { names, a, s, real })
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn indices(&self) -> impl Iterator<Item = Index> {
        0..self.names.len()
    }

    pub fn name(&self, i: Index) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<Index, CartanError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| CartanError::UnknownIndex(name.to_string()))
    }

    pub fn a(&self, i: Index, j: Index) -> i64 {
        self.a[i][j]
    }

    pub fn symmetrizer(&self, i: Index) -> i64 {
        self.s[i]
    }

    pub fn is_real(&self, i: Index) -> bool {
        self.real[i]
    }

    pub fn is_imaginary(&self, i: Index) -> bool {
        !self.real[i]
    }

    pub fn real_indices(&self) -> impl Iterator<Item = Index> + '_ {
        self.indices().filter(|&i| self.is_real(i))
    }

    pub fn imaginary_indices(&self) -> impl Iterator<Item = Index> + '_ {
        self.indices().filter(|&i| self.is_imaginary(i))
    }

    /// `c_i = -a_ii / 2`.
    pub fn c(&self, i: Index) -> i64 {
        -self.a[i][i] / 2
    }

    /// The symmetric bilinear form `(alpha_i | alpha_j) = s_i a_ij`.
    pub fn sym_form(&self, i: Index, j: Index) -> i64 {
        self.s[i] * self.a[i][j]
    }

    /// Bilinear extension of the form to root vectors.
    pub fn sym_form_roots(&self, alpha: &RootVector, beta: &RootVector) -> i64 {
        let mut total = 0;
        for (&i, &ki) in alpha.iter() {
            for (&j, &kj) in beta.iter() {
                total += (ki as i64) * (kj as i64) * self.sym_form(i, j);
            }
        }
        total
    }

    fn check_kind(&self, i: Index, kind: QIntKind) -> Result<(), CartanError> {
        let ok = match kind {
            QIntKind::Real => self.is_real(i),
            QIntKind::Imaginary => self.is_imaginary(i),
        };
        if ok {
            Ok(())
        } else {
            Err(CartanError::KindMismatch { index: self.names[i].clone(), requested: kind })
        }
    }

    /// `[n]_i` for real `i`: `(q_i^n - q_i^-n)/(q_i - q_i^-1)`.
    fn qint_real(&self, n: u64, i: Index) -> QRat {
        let mut l = QLaurent::zero();
        let si = self.s[i];
        for k in 0..n {
            l = &l + &QLaurent::q_pow(si * (n as i64 - 1 - 2 * k as i64));
        }
        QRat::from_laurent(&l)
    }

    /// `{n}_i` for imaginary `i`: `(q_i^{c_i n} - q_i^{-c_i n})/(q_i^{c_i} -
    /// q_i^{-c_i})`, with `{n}_i = n` when `a_ii = 0`.
    fn qint_im(&self, n: u64, i: Index) -> QRat {
        let ci = self.c(i);
        if ci == 0 {
            return QRat::from_int(n as i64);
        }
        let step = self.s[i] * ci;
        let mut l = QLaurent::zero();
        for k in 0..n {
            l = &l + &QLaurent::q_pow(step * (n as i64 - 1 - 2 * k as i64));
        }
        QRat::from_laurent(&l)
    }

    /// Quantum integer of the requested kind; the kind must match the
    /// index classification.
    pub fn qint(&self, n: u64, i: Index, kind: QIntKind) -> Result<QRat, CartanError> {
        self.check_kind(i, kind)?;
        Ok(match kind {
            QIntKind::Real => self.qint_real(n, i),
            QIntKind::Imaginary => self.qint_im(n, i),
        })
    }

    /// Quantum integer matching the index's own classification.
    pub fn qint_for(&self, n: u64, i: Index) -> QRat {
        if self.is_real(i) {
            self.qint_real(n, i)
        } else {
            self.qint_im(n, i)
        }
    }

    /// `[n]_i!` resp. `{n}_i!`.
    pub fn qfact(&self, n: u64, i: Index, kind: QIntKind) -> Result<QRat, CartanError> {
        self.check_kind(i, kind)?;
        Ok(self.qfact_for(n, i))
    }

    pub fn qfact_for(&self, n: u64, i: Index) -> QRat {
        let mut acc = QRat::one();
        for k in 1..=n {
            acc = &acc * &self.qint_for(k, i);
        }
        acc
    }

    /// Gaussian binomial of the requested kind.
    pub fn qbinom(&self, m: u64, n: u64, i: Index, kind: QIntKind) -> Result<QRat, CartanError> {
        self.check_kind(i, kind)?;
        assert!(n <= m, "binomial requires n <= m");
        let num = self.qfact_for(m, i);
        let den = &self.qfact_for(m - n, i) * &self.qfact_for(n, i);
        Ok(&num / &den)
    }
}

/// Key used in datum JSON for `Q` blocks: a pair of index names.
pub fn pair_key(a: &str, b: &str) -> String {
    format!("{},{}", a, b)
}

/// Element of `Q^+`: a nonnegative integral combination of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RootVector {
    coeffs: BTreeMap<Index, u64>,
}

impl RootVector {
    pub fn zero() -> Self {
        RootVector::default()
    }

    pub fn simple(i: Index) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(i, 1);
        RootVector { coeffs }
    }

    pub fn from_coeffs(entries: impl IntoIterator<Item = (Index, u64)>) -> Self {
        let coeffs = entries.into_iter().filter(|&(_, k)| k > 0).collect();
        RootVector { coeffs }
    }

    /// Weight of a plain sequence.
    pub fn of_seq(seq: &[Index]) -> Self {
        let mut coeffs: BTreeMap<Index, u64> = BTreeMap::new();
        for &i in seq {
            *coeffs.entry(i).or_insert(0) += 1;
        }
        RootVector { coeffs }
    }

    pub fn coeff(&self, i: Index) -> u64 {
        self.coeffs.get(&i).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Index, &u64)> {
        self.coeffs.iter()
    }

    pub fn height(&self) -> u64 {
        self.coeffs.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn plus(&self, other: &RootVector) -> RootVector {
        let mut coeffs = self.coeffs.clone();
        for (&i, &k) in other.iter() {
            *coeffs.entry(i).or_insert(0) += k;
        }
        RootVector { coeffs }
    }

    pub fn plus_simple(&self, i: Index) -> RootVector {
        self.plus(&RootVector::simple(i))
    }

    /// `self - other` when it stays in `Q^+`.
    pub fn checked_sub(&self, other: &RootVector) -> Option<RootVector> {
        let mut coeffs = self.coeffs.clone();
        for (&i, &k) in other.iter() {
            let entry = coeffs.entry(i).or_insert(0);
            if *entry < k {
                return None;
            }
            *entry -= k;
            if *entry == 0 {
                coeffs.remove(&i);
            }
        }
        Some(RootVector { coeffs })
    }

    /// Every root vector of height at most `max_height` over the datum's
    /// index set, in increasing height.
    pub fn all_up_to_height(datum: &BorcherdsCartanDatum, max_height: u64) -> Vec<RootVector> {
        let mut level: Vec<RootVector> = vec![RootVector::zero()];
        let mut out = level.clone();
        for _ in 0..max_height {
            let mut next = Vec::new();
            for alpha in &level {
                for i in datum.indices() {
                    let beta = alpha.plus_simple(i);
                    if !next.contains(&beta) {
                        next.push(beta);
                    }
                }
            }
            out.extend(next.iter().cloned());
            level = next;
        }
        out
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&i, &k) in self.iter() {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if k == 1 {
                write!(f, "a{}", i)?;
            } else {
                write!(f, "{}a{}", k, i)?;
            }
        }
        Ok(())
    }
}

/// A weight, stored through its pairings `<h_i, lambda>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeightVector {
    pairings: BTreeMap<Index, i64>,
}

impl WeightVector {
    pub fn zero() -> Self {
        WeightVector::default()
    }

    pub fn from_pairings(entries: impl IntoIterator<Item = (Index, i64)>) -> Self {
        let pairings = entries.into_iter().filter(|&(_, v)| v != 0).collect();
        WeightVector { pairings }
    }

    /// `<h_i, lambda>`.
    pub fn pairing(&self, i: Index) -> i64 {
        self.pairings.get(&i).copied().unwrap_or(0)
    }

    pub fn is_dominant(&self, datum: &BorcherdsCartanDatum) -> bool {
        datum.indices().all(|i| self.pairing(i) >= 0)
    }

    /// `lambda - alpha`, using `<h_i, alpha_j> = a_ij`.
    pub fn sub_root(&self, datum: &BorcherdsCartanDatum, alpha: &RootVector) -> WeightVector {
        let mut pairings = BTreeMap::new();
        for i in datum.indices() {
            let mut v = self.pairing(i);
            for (&j, &k) in alpha.iter() {
                v -= (k as i64) * datum.a(i, j);
            }
            if v != 0 {
                pairings.insert(i, v);
            }
        }
        WeightVector { pairings }
    }

    pub fn add_root(&self, datum: &BorcherdsCartanDatum, alpha: &RootVector) -> WeightVector {
        let mut pairings = BTreeMap::new();
        for i in datum.indices() {
            let mut v = self.pairing(i);
            for (&j, &k) in alpha.iter() {
                v += (k as i64) * datum.a(i, j);
            }
            if v != 0 {
                pairings.insert(i, v);
            }
        }
        WeightVector { pairings }
    }

    /// Render as `name:value` pairs over the datum's index order.
    pub fn display(&self, datum: &BorcherdsCartanDatum) -> String {
        datum
            .indices()
            .map(|i| format!("{}:{}", datum.name(i), self.pairing(i)))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Element of `Seqd(alpha)`: indices with divided-power multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSequence {
    parts: Vec<(Index, u64)>,
}

impl IndexSequence {
    pub fn new(parts: Vec<(Index, u64)>) -> Self {
        assert!(parts.iter().all(|&(_, d)| d >= 1), "multiplicities must be >= 1");
        IndexSequence { parts }
    }

    pub fn empty() -> Self {
        IndexSequence { parts: Vec::new() }
    }

    /// All multiplicities 1.
    pub fn plain(seq: &[Index]) -> Self {
        IndexSequence { parts: seq.iter().map(|&i| (i, 1)).collect() }
    }

    pub fn parts(&self) -> &[(Index, u64)] {
        &self.parts
    }

    pub fn is_multiplicity_one(&self) -> bool {
        self.parts.iter().all(|&(_, d)| d == 1)
    }

    /// Expand divided powers into a plain sequence.
    pub fn flatten(&self) -> Seq {
        let mut out = Vec::new();
        for &(i, d) in &self.parts {
            out.extend(std::iter::repeat(i).take(d as usize));
        }
        out
    }

    pub fn weight(&self) -> RootVector {
        RootVector::of_seq(&self.flatten())
    }

    /// Concatenation `i * j`.
    pub fn concat(&self, other: &IndexSequence) -> IndexSequence {
        let mut parts = self.parts.clone();
        parts.extend(other.parts.iter().cloned());
        IndexSequence { parts }
    }
}

impl fmt::Display for IndexSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (n, &(i, d)) in self.parts.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            if d == 1 {
                write!(f, "{}", i)?;
            } else {
                write!(f, "{}^({})", i, d)?;
            }
        }
        write!(f, ")")
    }
}

/// Concatenation of plain sequences.
pub fn concat_seq(a: &[Index], b: &[Index]) -> Seq {
    let mut out = a.to_vec();
    out.extend_from_slice(b);
    out
}

/// Enumerate `Seq(alpha)` in lexicographic order of the datum's index
/// order; complete and duplicate-free.
pub fn enumerate_seq(alpha: &RootVector, cap: u64) -> Result<Vec<Seq>, CartanError> {
    let height = alpha.height();
    if height > cap {
        return Err(CartanError::CapExceeded { height, cap });
    }
    let mut remaining: Vec<(Index, u64)> = alpha.iter().map(|(&i, &k)| (i, k)).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(height as usize);
    fn go(remaining: &mut Vec<(Index, u64)>, current: &mut Seq, out: &mut Vec<Seq>, left: u64) {
        if left == 0 {
            out.push(current.clone());
            return;
        }
        for pos in 0..remaining.len() {
            if remaining[pos].1 == 0 {
                continue;
            }
            remaining[pos].1 -= 1;
            current.push(remaining[pos].0);
            go(remaining, current, out, left - 1);
            current.pop();
            remaining[pos].1 += 1;
        }
    }
    go(&mut remaining, &mut current, &mut out, height);
    Ok(out)
}

/// Enumerate `Seqd(alpha)`: all divided-power sequences of weight `alpha`.
pub fn enumerate_seqd(alpha: &RootVector, cap: u64) -> Result<Vec<IndexSequence>, CartanError> {
    let height = alpha.height();
    if height > cap {
        return Err(CartanError::CapExceeded { height, cap });
    }
    let mut out = Vec::new();
    let mut current: Vec<(Index, u64)> = Vec::new();
    fn go(
        alpha: &RootVector,
        current: &mut Vec<(Index, u64)>,
        out: &mut Vec<IndexSequence>,
        left: &RootVector,
    ) {
        if left.is_zero() {
            out.push(IndexSequence::new(current.clone()));
            return;
        }
        let indices: Vec<Index> = left.iter().map(|(&i, _)| i).collect();
        for i in indices {
            let avail = left.coeff(i);
            for d in 1..=avail {
                let mut step = BTreeMap::new();
                step.insert(i, d);
                let rest = left.checked_sub(&RootVector::from_coeffs(step)).unwrap();
                current.push((i, d));
                go(alpha, current, out, &rest);
                current.pop();
            }
        }
    }
    go(alpha, &mut current, &mut out, alpha);
    Ok(out)
}

/// On-disk datum: the JSON schema of the CLI.  The optional `P` / `Q`
/// blocks override the default parameter polynomials.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DatumFile {
    pub indices: Vec<String>,
    #[serde(rename = "A")]
    pub a: Vec<Vec<i64>>,
    pub s: Vec<i64>,
    #[serde(rename = "P", default, skip_serializing_if = "BTreeMap::is_empty")]
    pub p: BTreeMap<String, BTreeMap<String, serde_json::Value>>,
    #[serde(rename = "Q", default, skip_serializing_if = "BTreeMap::is_empty")]
    pub q: BTreeMap<String, BTreeMap<String, serde_json::Value>>,
}

impl DatumFile {
    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("invalid datum JSON: {}", e))
    }

    pub fn datum(&self) -> Result<BorcherdsCartanDatum, Vec<Violation>> {
        BorcherdsCartanDatum::validate(self.indices.clone(), self.a.clone(), self.s.clone())
    }
}

/// Parse a root vector given as `i:k,j:m` over index names.
pub fn parse_root_spec(
    datum: &BorcherdsCartanDatum,
    text: &str,
) -> Result<RootVector, CartanError> {
    let mut coeffs = BTreeMap::new();
    for part in text.split(',').filter(|p| !p.trim().is_empty()) {
        let (name, count) = part
            .split_once(':')
            .ok_or_else(|| CartanError::UnknownIndex(part.to_string()))?;
        let i = datum.index_of(name.trim())?;
        let k: u64 = count
            .trim()
            .parse()
            .map_err(|_| CartanError::UnknownIndex(part.to_string()))?;
        if k > 0 {
            *coeffs.entry(i).or_insert(0) += k;
        }
    }
    Ok(RootVector::from_coeffs(coeffs))
}

/// Parse a weight given as `i:v,j:w` over index names (values may be
/// negative).
pub fn parse_weight_spec(
    datum: &BorcherdsCartanDatum,
    text: &str,
) -> Result<WeightVector, CartanError> {
    let mut pairings = BTreeMap::new();
    for part in text.split(',').filter(|p| !p.trim().is_empty()) {
        let (name, value) = part
            .split_once(':')
            .ok_or_else(|| CartanError::UnknownIndex(part.to_string()))?;
        let i = datum.index_of(name.trim())?;
        let v: i64 = value
            .trim()
            .parse()
            .map_err(|_| CartanError::UnknownIndex(part.to_string()))?;
        pairings.insert(i, v);
    }
    Ok(WeightVector::from_pairings(pairings))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QIntKind {
    Real,
    Imaginary,
}

/// The standing test data: `D1` mixes a real and an imaginary index, `D0`
/// is a single real node, `Dim` a single imaginary node with `a = -2`,
/// `D2` a single node with `a = 0`, `D3` a disconnected pair, `D4` a
/// variant with `a_12 = -2`.
#[cfg(test)]
pub mod tests_support {
    use super::BorcherdsCartanDatum;

    pub fn d1() -> BorcherdsCartanDatum {
        BorcherdsCartanDatum::validate(
            vec!["1".into(), "2".into()],
            vec![vec![2, -1], vec![-1, -2]],
            vec![1, 1],
        )
        .unwrap()
    }

    pub fn d0() -> BorcherdsCartanDatum {
        BorcherdsCartanDatum::validate(vec!["1".into()], vec![vec![2]], vec![1]).unwrap()
    }

    pub fn dim() -> BorcherdsCartanDatum {
        BorcherdsCartanDatum::validate(vec!["i".into()], vec![vec![-2]], vec![1]).unwrap()
    }

    pub fn d2() -> BorcherdsCartanDatum {
        BorcherdsCartanDatum::validate(vec!["i".into()], vec![vec![0]], vec![1]).unwrap()
    }

    pub fn d3() -> BorcherdsCartanDatum {
        BorcherdsCartanDatum::validate(
            vec!["1".into(), "2".into()],
            vec![vec![2, 0], vec![0, -2]],
            vec![1, 1],
        )
        .unwrap()
    }

    pub fn d4() -> BorcherdsCartanDatum {
        BorcherdsCartanDatum::validate(
            vec!["1".into(), "2".into()],
            vec![vec![2, -2], vec![-1, -2]],
            vec![1, 2],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::One;

    use super::tests_support::d1;

    #[test]
    fn d1_validates_with_expected_classification() {
        let d = d1();
        assert!(d.is_real(0));
        assert!(d.is_imaginary(1));
        assert_eq!(d.c(1), 1);
    }

    #[test]
    fn asymmetric_zero_pattern_is_rejected() {
        let err = BorcherdsCartanDatum::validate(
            vec!["1".into(), "2".into()],
            vec![vec![2, -1], vec![0, -2]],
            vec![1, 1],
        )
        .unwrap_err();
        assert!(err.iter().any(|v| v.message.contains("xor")));
    }

    #[test]
    fn odd_diagonal_is_rejected() {
        let err =
            BorcherdsCartanDatum::validate(vec!["1".into()], vec![vec![3]], vec![1]).unwrap_err();
        assert!(err.iter().any(|v| v.message.contains("not 2 nor even")));
    }

    #[test]
    fn sym_form_values_on_d1() {
        let d = d1();
        assert_eq!(d.sym_form(0, 0), 2);
        assert_eq!(d.sym_form(0, 1), -1);
        assert_eq!(d.sym_form(1, 1), -2);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(d.sym_form(i, j), d.sym_form(j, i));
            }
        }
    }

    #[test]
    fn quantum_integers_on_d1() {
        let d = d1();
        // [2]_1 = q + q^-1.
        assert_eq!(d.qint(2, 0, QIntKind::Real).unwrap(), QRat::parse("q + q^-1").unwrap());
        // {2}_2 with c_2 = 1 is also q + q^-1.
        assert_eq!(d.qint(2, 1, QIntKind::Imaginary).unwrap(), QRat::parse("q + q^-1").unwrap());
        assert!(d.qint(2, 1, QIntKind::Real).is_err());
    }

    #[test]
    fn imaginary_qint_degenerates_to_n_when_a_ii_is_zero() {
        let d = BorcherdsCartanDatum::validate(vec!["i".into()], vec![vec![0]], vec![1]).unwrap();
        assert_eq!(d.qint(3, 0, QIntKind::Imaginary).unwrap(), QRat::from_int(3));
        assert_eq!(d.qfact(3, 0, QIntKind::Imaginary).unwrap(), QRat::from_int(6));
    }

    #[test]
    fn quantum_integers_specialize_to_n_at_q_one() {
        let d = d1();
        for n in 0..6u64 {
            for i in 0..2 {
                let v = d.qint_for(n, i).eval_one();
                assert_eq!(v, BigRational::from_integer((n as i64).into()));
            }
        }
    }

    #[test]
    fn gaussian_binomials_are_laurent() {
        let d = d1();
        for m in 0..=6u64 {
            for n in 0..=m {
                for i in 0..2 {
                    let b = d
                        .qbinom(m, n, i, if i == 0 { QIntKind::Real } else { QIntKind::Imaginary })
                        .unwrap();
                    assert!(b.is_laurent(), "[{} choose {}]_{} = {} not Laurent", m, n, i, b);
                }
            }
        }
    }

    #[test]
    fn seq_enumeration_on_d1() {
        let a12 = RootVector::from_coeffs([(0, 1), (1, 1)]);
        assert_eq!(enumerate_seq(&a12, 4).unwrap(), vec![vec![0, 1], vec![1, 0]]);
        let twice = RootVector::from_coeffs([(0, 2)]);
        assert_eq!(enumerate_seq(&twice, 4).unwrap(), vec![vec![0, 0]]);
        let mixed = RootVector::from_coeffs([(0, 2), (1, 1)]);
        assert_eq!(enumerate_seq(&mixed, 4).unwrap().len(), 3);
        assert!(matches!(
            enumerate_seq(&mixed, 2),
            Err(CartanError::CapExceeded { height: 3, cap: 2 })
        ));
    }

    #[test]
    fn seq_count_is_multinomial() {
        let d = d1();
        for alpha in RootVector::all_up_to_height(&d, 4) {
            let count = enumerate_seq(&alpha, 4).unwrap().len() as u64;
            let mut expected = 1u64;
            for k in 2..=alpha.height() {
                expected *= k;
            }
            for (_, &k) in alpha.iter() {
                for f in 2..=k {
                    expected /= f;
                }
            }
            assert_eq!(count, expected, "alpha = {}", alpha);
        }
    }

    #[test]
    fn seqd_contains_plain_and_divided_forms() {
        let twice = RootVector::from_coeffs([(0, 2)]);
        let seqd = enumerate_seqd(&twice, 4).unwrap();
        assert!(seqd.contains(&IndexSequence::plain(&[0, 0])));
        assert!(seqd.contains(&IndexSequence::new(vec![(0, 2)])));
        assert_eq!(seqd.len(), 2);
    }

    #[test]
    fn weight_updates_on_d1() {
        let d = d1();
        let lambda = WeightVector::from_pairings([(0, 0), (1, 1)]);
        let updated = lambda.sub_root(&d, &RootVector::simple(1));
        assert_eq!(updated.pairing(0), 1);
        assert_eq!(updated.pairing(1), 3);
        assert_eq!(lambda.sub_root(&d, &RootVector::zero()), lambda);

        let lambda = WeightVector::from_pairings([(0, 3), (1, 0)]);
        let updated = lambda.sub_root(&d, &RootVector::simple(0));
        assert_eq!(updated.pairing(0), 1);
        assert_eq!(updated.pairing(1), 1);
    }

    #[test]
    fn concatenation() {
        let i = IndexSequence::plain(&[0, 1]);
        let j = IndexSequence::new(vec![(0, 2)]);
        assert_eq!(i.concat(&j).flatten(), vec![0, 1, 0, 0]);
        assert_eq!(concat_seq(&[0, 1], &[1]), vec![0, 1, 1]);
    }
}
