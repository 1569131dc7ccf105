//! Exact arithmetic over the field of rational functions in `q` with
//! arbitrary-precision rational coefficients.
//!
//! [`QLaurent`] is a sparse Laurent polynomial in `q`; [`QRat`] is a
//! quotient of ordinary polynomials kept in a unique canonical form, so
//! structural equality coincides with mathematical equality.  The layer also
//! provides the valuation [`QRat::val0`] and evaluation [`QRat::ev0`] at
//! `q = 0` used by crystal-lattice computations, and the bar involution
//! `q -> q^{-1}`.
//!
//! All values are immutable after construction and every operation is a
//! pure function.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Errors raised by scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QArithError {
    DivisionByZero,
    /// `val0` is undefined on the zero element.
    ZeroInput,
    /// `ev0` requested on an element with a pole at `q = 0`.
    PoleAtZero,
}

impl fmt::Display for QArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QArithError::DivisionByZero => write!(f, "division by zero"),
            QArithError::ZeroInput => write!(f, "val0 undefined on zero"),
            QArithError::PoleAtZero => write!(f, "pole at q = 0"),
        }
    }
}

impl std::error::Error for QArithError {}

/// Sparse Laurent polynomial in `q` over the rationals.
///
/// Invariant: no stored coefficient is zero; the zero element is the empty
/// map.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QLaurent {
    coeffs: BTreeMap<i64, BigRational>,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0)
    }

    /// `c * q^k`, dropped if `c = 0`.
    pub fn monomial(c: BigRational, k: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        QLaurent { coeffs }
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(BigRational::from_integer(BigInt::from(n)), 0)
    }

    pub fn q_pow(k: i64) -> Self {
        Self::monomial(BigRational::one(), k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i64) -> BigRational {
        self.coeffs.get(&k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigRational)> {
        self.coeffs.iter()
    }

    /// Smallest exponent carrying a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Largest exponent carrying a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    fn insert_add(coeffs: &mut BTreeMap<i64, BigRational>, k: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match coeffs.get_mut(&k) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    coeffs.remove(&k);
                }
            }
            None => {
                coeffs.insert(k, c);
            }
        }
    }

    /// Multiply by `q^k`.
    pub fn shifted(&self, k: i64) -> Self {
        QLaurent {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QLaurent {
            coeffs: self.coeffs.iter().map(|(e, co)| (*e, co * c)).collect(),
        }
    }

    /// The bar involution `q -> q^{-1}`: negates every exponent.
    pub fn bar(&self) -> Self {
        QLaurent {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitute `q = 1`.
    pub fn eval_one(&self) -> BigRational {
        self.coeffs.values().fold(BigRational::zero(), |acc, c| acc + c)
    }
}

impl Add for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        let mut coeffs = self.coeffs.clone();
        for (k, c) in &rhs.coeffs {
            QLaurent::insert_add(&mut coeffs, *k, c.clone());
        }
        QLaurent { coeffs }
    }
}

impl Sub for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        let mut coeffs = self.coeffs.clone();
        for (k, c) in &rhs.coeffs {
            QLaurent::insert_add(&mut coeffs, *k, -c.clone());
        }
        QLaurent { coeffs }
    }
}

impl Mul for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        let mut coeffs = BTreeMap::new();
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in &rhs.coeffs {
                QLaurent::insert_add(&mut coeffs, ka + kb, ca * cb);
            }
        }
        QLaurent { coeffs }
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().rev() {
            let (sign, mag) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let show_coeff = !mag.is_one() || *k == 0;
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "{}/{}", mag.numer(), mag.denom())?;
                }
                if *k != 0 {
                    write!(f, "*")?;
                }
            }
            if *k != 0 {
                if *k == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Ordinary polynomial helpers on QLaurent with nonnegative support.
// ---------------------------------------------------------------------------

fn poly_degree(p: &QLaurent) -> i64 {
    p.max_exp().expect("degree of zero polynomial")
}

/// Division with remainder of polynomials (nonnegative support).
fn poly_divmod(a: &QLaurent, b: &QLaurent) -> (QLaurent, QLaurent) {
    assert!(!b.is_zero(), "poly_divmod by zero");
    let db = poly_degree(b);
    let lb = b.coeff(db);
    let mut rem = a.clone();
    let mut quot = QLaurent::zero();
    while !rem.is_zero() && poly_degree(&rem) >= db {
        let dr = poly_degree(&rem);
        let t = QLaurent::monomial(rem.coeff(dr) / &lb, dr - db);
        quot = &quot + &t;
        rem = &rem - &(&t * b);
    }
    (quot, rem)
}

/// Monic gcd of polynomials with nonnegative support.
fn poly_gcd(a: &QLaurent, b: &QLaurent) -> QLaurent {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = poly_divmod(&x, &y);
        x = y;
        y = r;
    }
    if x.is_zero() {
        return x;
    }
    let lead = x.coeff(poly_degree(&x));
    x.scaled(&lead.recip())
}

/// Exact rational function in `q`: a quotient of polynomials in canonical
/// form.
///
/// Invariants: the denominator is nonzero, shares no nonconstant factor with
/// the numerator, and its lowest-degree nonzero coefficient equals 1.  The
/// canonical form is unique, so `==` is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QRat {
    num: QLaurent,
    den: QLaurent,
}

impl QRat {
    pub fn zero() -> Self {
        QRat { num: QLaurent::zero(), den: QLaurent::one() }
    }

    pub fn one() -> Self {
        QRat { num: QLaurent::one(), den: QLaurent::one() }
    }

    pub fn from_int(n: i64) -> Self {
        QRat { num: QLaurent::from_int(n), den: QLaurent::one() }
    }

    pub fn from_ratio(r: BigRational) -> Self {
        QRat { num: QLaurent::monomial(r, 0), den: QLaurent::one() }
    }

    /// The variable `q` itself.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        Self::from_laurent(&QLaurent::q_pow(k))
    }

    pub fn from_laurent(l: &QLaurent) -> Self {
        Self::from_laurent_quotient(l.clone(), QLaurent::one())
    }

    /// Build `a / b` from Laurent polynomials, clearing negative powers of
    /// `q` and reducing to canonical form.  Panics if `b = 0`.
    pub fn from_laurent_quotient(a: QLaurent, b: QLaurent) -> Self {
        assert!(!b.is_zero(), "zero denominator");
        if a.is_zero() {
            return Self::zero();
        }
        let shift = a.min_exp().unwrap_or(0).min(b.min_exp().unwrap_or(0)).min(0);
        let mut num = a.shifted(-shift);
        let mut den = b.shifted(-shift);
        let g = poly_gcd(&num, &den);
        if !g.is_zero() && poly_degree(&g) > 0 {
            num = poly_divmod(&num, &g).0;
            den = poly_divmod(&den, &g).0;
        }
        // Normalize: lowest-degree nonzero coefficient of the denominator is 1.
        let low = den.coeff(den.min_exp().unwrap());
        let inv = low.recip();
        num = num.scaled(&inv);
        den = den.scaled(&inv);
        QRat { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == QLaurent::one() && self.den == QLaurent::one()
    }

    pub fn numerator(&self) -> &QLaurent {
        &self.num
    }

    pub fn denominator(&self) -> &QLaurent {
        &self.den
    }

    /// True when the canonical denominator is 1, i.e. the value is a
    /// polynomial in `q` (hence a Laurent polynomial after clearing).
    pub fn is_polynomial(&self) -> bool {
        self.den == QLaurent::one()
    }

    /// True when the value is a Laurent polynomial in `q`, i.e. the
    /// denominator is a power of `q`.
    pub fn is_laurent(&self) -> bool {
        match self.den.max_exp() {
            None => false,
            Some(d) => self.den == QLaurent::q_pow(d),
        }
    }

    /// View as a Laurent polynomial when possible.
    pub fn as_laurent(&self) -> Option<QLaurent> {
        if !self.is_laurent() {
            return None;
        }
        let d = self.den.max_exp().unwrap();
        Some(self.num.shifted(-d))
    }

    pub fn inverse(&self) -> Result<QRat, QArithError> {
        if self.is_zero() {
            return Err(QArithError::DivisionByZero);
        }
        Ok(Self::from_laurent_quotient(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &QRat) -> Result<QRat, QArithError> {
        if rhs.is_zero() {
            return Err(QArithError::DivisionByZero);
        }
        Ok(Self::from_laurent_quotient(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, n: i64) -> QRat {
        if n < 0 {
            return self.inverse().expect("pow of zero with negative exponent").pow(-n);
        }
        let mut acc = QRat::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Order of vanishing at `q = 0`: additive under multiplication.
    pub fn val0(&self) -> Result<i64, QArithError> {
        if self.is_zero() {
            return Err(QArithError::ZeroInput);
        }
        Ok(self.num.min_exp().unwrap() - self.den.min_exp().unwrap())
    }

    /// Value at `q = 0`; defined exactly on the local ring `val0 >= 0`.
    pub fn ev0(&self) -> Result<BigRational, QArithError> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        let v = self.val0().unwrap();
        if v < 0 {
            return Err(QArithError::PoleAtZero);
        }
        if v > 0 {
            return Ok(BigRational::zero());
        }
        Ok(self.num.coeff(0) / self.den.coeff(0))
    }

    /// The bar involution `q -> q^{-1}`.
    pub fn bar(&self) -> QRat {
        Self::from_laurent_quotient(self.num.bar(), self.den.bar())
    }

    /// Power-series coefficients at `q = 0` up to order `order`
    /// (inclusive); requires `val0 >= 0`.
    pub fn series_coeffs(&self, order: usize) -> Result<Vec<BigRational>, QArithError> {
        if self.is_zero() {
            return Ok(vec![BigRational::zero(); order + 1]);
        }
        if self.val0().unwrap() < 0 {
            return Err(QArithError::PoleAtZero);
        }
        // Canonical form with val0 >= 0 forces den(0) = 1.
        let mut out = Vec::with_capacity(order + 1);
        for n in 0..=order as i64 {
            let mut c = self.num.coeff(n);
            for k in 1..=n {
                let dk = self.den.coeff(k);
                if !dk.is_zero() {
                    c -= dk * &out[(n - k) as usize];
                }
            }
            out.push(c);
        }
        Ok(out)
    }

    /// Substitute `q = 1`; panics if the denominator vanishes there.
    pub fn eval_one(&self) -> BigRational {
        let d = self.den.eval_one();
        assert!(!d.is_zero(), "pole at q = 1");
        self.num.eval_one() / d
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        QRat::from_laurent_quotient(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        QRat::from_laurent_quotient(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        if self.is_zero() || rhs.is_zero() {
            return QRat::zero();
        }
        QRat::from_laurent_quotient(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &QRat {
    type Output = QRat;
    fn div(self, rhs: &QRat) -> QRat {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_value_ops {
    ($t:ty, $($trait:ident :: $m:ident),*) => {$(
        impl $trait for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { $trait::$m(&self, &rhs) }
        }
    )*};
}

forward_value_ops!(QLaurent, Add::add, Sub::sub, Mul::mul);
forward_value_ops!(QRat, Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

impl AddAssign<&QRat> for QRat {
    fn add_assign(&mut self, rhs: &QRat) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&QRat> for QRat {
    fn sub_assign(&mut self, rhs: &QRat) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&QRat> for QRat {
    fn mul_assign(&mut self, rhs: &QRat) {
        *self = &*self * rhs;
    }
}

// Textual rendering is "p(q)/r(q)" with caret exponents; the parser below
// accepts the same grammar back.
impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == QLaurent::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Position-annotated parse error for the scalar expression grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn err<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos, msg: msg.to_string() })
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let mut neg = false;
        if self.src.get(self.pos) == Some(&b'-') {
            neg = true;
            self.pos += 1;
        }
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let v: i64 = text.parse().map_err(|_| ParseError {
            pos: start,
            msg: "integer out of range".to_string(),
        })?;
        Ok(if neg { -v } else { v })
    }

    fn expr(&mut self) -> Result<QRat, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QRat, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = acc
                        .checked_div(&rhs)
                        .map_err(|_| ParseError { pos: self.pos, msg: "division by zero".into() })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<QRat, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.integer()?;
            if e < 0 && base.is_zero() {
                return self.err("zero to a negative power");
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<QRat, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.bump();
                Ok(-&self.atom()?)
            }
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            Some(b'q') => {
                self.bump();
                Ok(QRat::q())
            }
            Some(c) if c.is_ascii_digit() => Ok(QRat::from_int(self.integer()?)),
            _ => self.err("expected atom"),
        }
    }
}

impl QRat {
    /// Parse the textual grammar: integers, `q`, `^`, `+`, `-`, `*`, `/` and
    /// parentheses.
    pub fn parse(text: &str) -> Result<QRat, ParseError> {
        let mut s = Scanner::new(text);
        let v = s.expr()?;
        if s.peek().is_some() {
            return s.err("trailing input");
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(text: &str) -> QRat {
        QRat::parse(text).unwrap()
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let a = r("1 - q^2");
        let b = a.inverse().unwrap();
        assert!((&a * &b).is_one());
    }

    #[test]
    fn cancellation_gives_zero() {
        let a = r("q + q^-1");
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn partial_fraction_sum() {
        // 1/(1-q) + 1/(1+q) = 2/(1-q^2), cross-multiplied by hand.
        let lhs = &r("1/(1-q)") + &r("1/(1+q)");
        assert_eq!(lhs, r("2/(1-q^2)"));
    }

    #[test]
    fn val0_examples() {
        assert_eq!(r("q^3/(1-q)").val0().unwrap(), 3);
        assert_eq!(r("(1+q)/q^2").val0().unwrap(), -2);
        // (q^2 - q^3)/(q - q^4): factor q from both.
        assert_eq!(r("(q^2-q^3)/(q-q^4)").val0().unwrap(), 1);
        assert_eq!(r("q").val0().unwrap(), 1);
        assert_eq!(QRat::zero().val0(), Err(QArithError::ZeroInput));
    }

    #[test]
    fn ev0_examples() {
        let one = BigRational::one();
        assert_eq!(r("1/(1-q)").ev0().unwrap(), one);
        assert!(r("q/(1+q)").ev0().unwrap().is_zero());
        assert_eq!(r("(2+q)/(1-q^2)").ev0().unwrap(), BigRational::from_integer(2.into()));
        assert_eq!(r("(1+q)/q^2").ev0(), Err(QArithError::PoleAtZero));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(r("q^2 + q^-1").bar(), r("q^-2 + q"));
        let symmetric = r("q + q^-1");
        assert_eq!(symmetric.bar(), symmetric);
        // 1/(1-q) -> 1/(1-q^-1) = -q/(1-q) after clearing q^-1 by hand.
        assert_eq!(r("1/(1-q)").bar(), r("-q/(1-q)"));
    }

    #[test]
    fn bar_is_a_ring_automorphism() {
        let samples = [
            r("1"),
            r("q^2 - 3*q"),
            r("(1+q)/(1-q^3)"),
            r("q^-2/(2+q)"),
            r("(q+q^-1)/(1-q^2)"),
        ];
        for a in &samples {
            for b in &samples {
                assert_eq!((a + b).bar(), &a.bar() + &b.bar());
                assert_eq!((a * b).bar(), &a.bar() * &b.bar());
            }
            assert_eq!(a.bar().bar(), *a);
        }
    }

    #[test]
    fn val0_additive_under_multiplication() {
        let samples = [r("q^3/(1-q)"), r("(1+q)/q^2"), r("(q^2-q^3)/(q-q^4)"), r("5")];
        for a in &samples {
            for b in &samples {
                assert_eq!(
                    (a * b).val0().unwrap(),
                    a.val0().unwrap() + b.val0().unwrap()
                );
            }
        }
    }

    #[test]
    fn canonical_form_is_unique() {
        let a = r("(1-q^4)/(1-q)");
        let b = r("1 + q + q^2 + q^3");
        assert_eq!(a, b);
        assert!((&a - &b).is_zero());
        // Denominator normalization: lowest nonzero coefficient is 1.
        let c = r("1/(2-2*q)");
        assert_eq!(c.denominator().coeff(0), BigRational::one());
    }

    #[test]
    fn display_round_trips() {
        for text in ["(1+q)/(1-q^2)", "q^3 - 1/2", "(q+q^-1)", "-q/(1-q)"] {
            let v = r(text);
            assert_eq!(QRat::parse(&v.to_string()).unwrap(), v);
        }
    }

    #[test]
    fn laurent_detection() {
        assert!(r("q^-3 + q").is_laurent());
        assert!(!r("1/(1-q)").is_laurent());
        assert_eq!(r("q^-1").as_laurent().unwrap(), QLaurent::q_pow(-1));
    }
}
