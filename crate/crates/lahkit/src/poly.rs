//! Exact polynomials over the integers in three bases, the transition
//! matrices between them, and the row-polynomial recurrences.
//!
//! The three bases are the standard monomials `x^n` and, for a fixed level
//! `s`, the rising and falling factorials with higher level
//! `prod_(i=0..n-1) (x + i^s)` and `prod_(i=0..n-1) (x - i^s)`. All six
//! transition matrices between the bases are integer and lower unitriangular,
//! so every conversion stays in exact integer arithmetic.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::numbers::{self, power, Level, TriangleKind};
use crate::{Error, Result};

/// Identifies the basis a coefficient sequence refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisTag {
    /// Standard monomials `1, x, x^2, ...`.
    Standard,
    /// Rising factorials with higher level at the given level.
    RisingHl(Level),
    /// Falling factorials with higher level at the given level.
    FallingHl(Level),
}

impl BasisTag {
    pub fn level(self) -> Option<Level> {
        match self {
            BasisTag::Standard => None,
            BasisTag::RisingHl(s) | BasisTag::FallingHl(s) => Some(s),
        }
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisTag::Standard => write!(f, "standard"),
            BasisTag::RisingHl(s) => write!(f, "rising:{s}"),
            BasisTag::FallingHl(s) => write!(f, "falling:{s}"),
        }
    }
}

/// A dense polynomial: coefficient `i` multiplies the basis element of
/// degree `i`. Trailing zeros are trimmed, so the zero polynomial has an
/// empty coefficient sequence and equality is plain sequence equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    basis: BasisTag,
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(basis: BasisTag, mut coeffs: Vec<BigInt>) -> Polynomial {
        trim(&mut coeffs);
        Polynomial { basis, coeffs }
    }

    pub fn zero(basis: BasisTag) -> Polynomial {
        Polynomial {
            basis,
            coeffs: Vec::new(),
        }
    }

    /// The basis element of the given degree (coefficient vector `e_degree`).
    pub fn basis_element(basis: BasisTag, degree: usize) -> Polynomial {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = BigInt::one();
        Polynomial { basis, coeffs }
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of the degree-`i` basis element, zero beyond the end.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

fn trim(coeffs: &mut Vec<BigInt>) {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
}

/// `target[i + shift] += scale * source[i]` for all `i`.
fn add_scaled(target: &mut Vec<BigInt>, source: &[BigInt], scale: &BigInt, shift: usize) {
    if scale.is_zero() {
        return;
    }
    if target.len() < source.len() + shift {
        target.resize(source.len() + shift, BigInt::zero());
    }
    for (i, c) in source.iter().enumerate() {
        target[i + shift] += scale * c;
    }
}

/// One formal derivative of a standard coefficient vector.
fn derivative_once(coeffs: &[BigInt]) -> Vec<BigInt> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| BigInt::from(i as u64) * c)
        .collect()
}

/// Divides a standard coefficient vector by `x^k`, failing if any of the low
/// `k` coefficients is nonzero.
fn div_exact(mut coeffs: Vec<BigInt>, k: usize) -> Result<Vec<BigInt>> {
    if coeffs.iter().take(k).any(|c| !c.is_zero()) {
        return Err(Error::InexactDivision { power: k });
    }
    if coeffs.len() <= k {
        return Ok(Vec::new());
    }
    coeffs.drain(..k);
    Ok(coeffs)
}

/// Classical Stirling number of the second kind, as needed by the derivative
/// expansions of `x^s` in terms of falling powers.
fn stirling2(n: u32, k: u32) -> BigInt {
    BigInt::from(numbers::stirling2_hl(n as usize, k as usize, Level::ONE))
}

/// Maps coefficient `c_d` to `d^s * c_d`; applying `x^i d^i/dx^i` summed with
/// these Stirling weights gives the same result.
fn weight_by_degree_power(p: &Polynomial, s: Level) -> Polynomial {
    let coeffs = p
        .coeffs
        .iter()
        .enumerate()
        .map(|(d, c)| BigInt::from(power(d as u64, s.get())) * c)
        .collect();
    Polynomial::new(BasisTag::Standard, coeffs)
}

fn assert_standard(p: &Polynomial) {
    assert!(
        p.basis == BasisTag::Standard,
        "expected a standard-basis polynomial, got basis `{}`",
        p.basis
    );
}

/// Which factorial product to expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorialKind {
    Rising,
    Falling,
}

/// Expands `prod_(i=0..n-1) (x +- i^s)` into the standard basis; `n = 0`
/// yields the constant 1.
pub fn factorial_poly(kind: FactorialKind, n: usize, s: Level) -> Polynomial {
    let mut coeffs = vec![BigInt::one()];
    for i in 0..n {
        let mut root = BigInt::from(power(i as u64, s.get()));
        if kind == FactorialKind::Falling {
            root = -root;
        }
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] += &root * c;
        }
        coeffs = next;
    }
    Polynomial::new(BasisTag::Standard, coeffs)
}

/// Exact evaluation at an integer point. Factorial-basis polynomials are
/// evaluated through the product form of their basis elements directly, with
/// no conversion round-trip.
pub fn eval(p: &Polynomial, x: &BigInt) -> BigInt {
    match p.basis {
        BasisTag::Standard => {
            let mut acc = BigInt::zero();
            for c in p.coeffs.iter().rev() {
                acc = acc * x + c;
            }
            acc
        }
        BasisTag::RisingHl(s) | BasisTag::FallingHl(s) => {
            let falling = matches!(p.basis, BasisTag::FallingHl(_));
            let mut acc = BigInt::zero();
            let mut basis_value = BigInt::one();
            for (i, c) in p.coeffs.iter().enumerate() {
                if i > 0 {
                    let mut offset = BigInt::from(power((i - 1) as u64, s.get()));
                    if falling {
                        offset = -offset;
                    }
                    basis_value *= x + offset;
                }
                acc += c * &basis_value;
            }
            acc
        }
    }
}

enum EntryFamily {
    Identity,
    Unsigned(TriangleKind, Level),
    Signed(TriangleKind, Level),
}

impl EntryFamily {
    fn entry(&self, n: usize, k: usize) -> BigInt {
        match self {
            EntryFamily::Identity => {
                if n == k {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }
            EntryFamily::Unsigned(kind, s) => {
                BigInt::from(numbers::triangle_entry(*kind, n, k, *s))
            }
            EntryFamily::Signed(kind, s) => {
                let value = BigInt::from(numbers::triangle_entry(*kind, n, k, *s));
                if (n + k) % 2 == 0 {
                    value
                } else {
                    -value
                }
            }
        }
    }
}

/// A square lower-unitriangular matrix converting coefficient vectors from
/// one basis to another: row `n`, column `k` is the coefficient of the
/// target basis element `k` in the expansion of source basis element `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    from: BasisTag,
    to: BasisTag,
    entries: Vec<Vec<BigInt>>,
}

impl TransitionMatrix {
    pub fn from_basis(&self) -> BasisTag {
        self.from
    }

    pub fn to_basis(&self) -> BasisTag {
        self.to
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, n: usize, k: usize) -> &BigInt {
        &self.entries[n][k]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    /// Applies the conversion to a coefficient vector of length at most
    /// `size`, returning the target-basis coefficients.
    pub fn apply(&self, coeffs: &[BigInt]) -> Vec<BigInt> {
        assert!(coeffs.len() <= self.size(), "coefficient vector too long");
        let mut out = vec![BigInt::zero(); self.size()];
        for (n, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for k in 0..=n {
                out[k] += c * &self.entries[n][k];
            }
        }
        out
    }

    /// Matrix product performing `self` then `other`.
    pub fn compose(&self, other: &TransitionMatrix) -> TransitionMatrix {
        assert_eq!(self.to, other.from, "composition bases do not line up");
        assert_eq!(self.size(), other.size(), "composition sizes differ");
        let n = self.size();
        let mut entries = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..=i {
                let mut sum = BigInt::zero();
                for l in j..=i {
                    sum += &self.entries[i][l] * &other.entries[l][j];
                }
                entries[i][j] = sum;
            }
        }
        TransitionMatrix {
            from: self.from,
            to: other.to,
            entries,
        }
    }
}

/// Builds the transition matrix between two bases. Both factorial bases must
/// carry the same level; mixed-level conversion goes through the standard
/// basis explicitly.
pub fn transition_matrix(from: BasisTag, to: BasisTag, size: usize) -> Result<TransitionMatrix> {
    use BasisTag::*;
    let family = match (from, to) {
        (Standard, Standard) => EntryFamily::Identity,
        (RisingHl(a), RisingHl(b)) | (FallingHl(a), FallingHl(b)) => {
            if a != b {
                return Err(Error::LevelMismatch { from, to });
            }
            EntryFamily::Identity
        }
        (RisingHl(s), Standard) => EntryFamily::Unsigned(TriangleKind::StirlingFirstHl, s),
        (Standard, FallingHl(s)) => EntryFamily::Unsigned(TriangleKind::StirlingSecondHl, s),
        (FallingHl(s), Standard) => EntryFamily::Signed(TriangleKind::StirlingFirstHl, s),
        (Standard, RisingHl(s)) => EntryFamily::Signed(TriangleKind::StirlingSecondHl, s),
        (RisingHl(a), FallingHl(b)) => {
            if a != b {
                return Err(Error::LevelMismatch { from, to });
            }
            EntryFamily::Unsigned(TriangleKind::LahOrderS, a)
        }
        (FallingHl(a), RisingHl(b)) => {
            if a != b {
                return Err(Error::LevelMismatch { from, to });
            }
            EntryFamily::Signed(TriangleKind::LahOrderS, a)
        }
    };
    let entries = (0..size)
        .map(|n| (0..size).map(|k| family.entry(n, k)).collect())
        .collect();
    Ok(TransitionMatrix { from, to, entries })
}

/// Re-expresses a polynomial in the target basis. Evaluation at every
/// integer point is preserved and coefficients stay integers.
pub fn convert(p: &Polynomial, target: BasisTag) -> Result<Polynomial> {
    if p.basis == target {
        return Ok(p.clone());
    }
    if p.is_zero() {
        // Still reject incompatible level pairs.
        transition_matrix(p.basis, target, 0)?;
        return Ok(Polynomial::zero(target));
    }
    let matrix = transition_matrix(p.basis, target, p.coeffs.len())?;
    Ok(Polynomial::new(target, matrix.apply(&p.coeffs)))
}

/// Formal `order`-th derivative of a standard-basis polynomial.
pub fn derivative(p: &Polynomial, order: usize) -> Result<Polynomial> {
    if p.basis != BasisTag::Standard {
        return Err(Error::NonStandardBasis { basis: p.basis });
    }
    let mut coeffs = p.coeffs.clone();
    for _ in 0..order {
        coeffs = derivative_once(&coeffs);
    }
    Ok(Polynomial::new(BasisTag::Standard, coeffs))
}

fn row_polynomial(kind: TriangleKind, n: usize, s: Level) -> Polynomial {
    let coeffs = (0..=n)
        .map(|k| BigInt::from(numbers::triangle_entry(kind, n, k, s)))
        .collect();
    Polynomial::new(BasisTag::Standard, coeffs)
}

/// Row polynomial of the Lah numbers with higher level,
/// `sum_k hlah(n, k) x^k`.
pub fn row_poly_hl(n: usize, s: Level) -> Polynomial {
    row_polynomial(TriangleKind::LahHl, n, s)
}

/// Advances a higher-level Lah row polynomial by one row:
/// `x L_n + sum_(i=1..s) S(s, i) x^(i - n) d^i/dx^i (x^n L_n)`.
/// The division by `x^(n - i)` is exact whenever the input is a polynomial;
/// a nonzero remainder reports an internal inconsistency.
pub fn row_poly_hl_step(l_n: &Polynomial, n: usize, s: Level) -> Result<Polynomial> {
    assert_standard(l_n);
    let mut shifted = vec![BigInt::zero(); n];
    shifted.extend_from_slice(&l_n.coeffs);
    let mut result = vec![BigInt::zero(); 1];
    result.extend_from_slice(&l_n.coeffs);
    for i in 1..=s.get() {
        let weight = stirling2(s.get(), i);
        let mut term = shifted.clone();
        for _ in 0..i {
            term = derivative_once(&term);
        }
        let mut raised = vec![BigInt::zero(); i as usize];
        raised.extend(term);
        let quotient = div_exact(raised, n)?;
        add_scaled(&mut result, &quotient, &weight, 0);
    }
    Ok(Polynomial::new(BasisTag::Standard, result))
}

/// `Q_n = x^n L_n`, the shifted row polynomial with the simpler one-sum
/// recurrence.
pub fn q_poly(n: usize, s: Level) -> Polynomial {
    let row = row_poly_hl(n, s);
    let mut coeffs = vec![BigInt::zero(); n];
    coeffs.extend(row.coeffs);
    Polynomial::new(BasisTag::Standard, coeffs)
}

/// Advances `Q_n` by one row: `x^2 Q_n + sum_(i=1..s) S(s, i) x^(i+1) d^i Q_n`.
pub fn q_step(q_n: &Polynomial, n: usize, s: Level) -> Polynomial {
    assert_standard(q_n);
    debug_assert_eq!(q_n.degree(), Some(2 * n), "Q_n must have degree 2n");
    let mut result = vec![BigInt::zero(); 2];
    result.extend_from_slice(&q_n.coeffs);
    let mut term = q_n.coeffs.clone();
    for i in 1..=s.get() {
        term = derivative_once(&term);
        let weight = stirling2(s.get(), i);
        add_scaled(&mut result, &term, &weight, i as usize + 1);
    }
    Polynomial::new(BasisTag::Standard, result)
}

/// Which route computes an auxiliary polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyForm {
    /// The defining weighted sum over triangle entries.
    Definition,
    /// The equivalent Stirling-weighted derivative sum.
    Derivative,
}

fn derivative_form(base: &Polynomial, s: Level) -> Polynomial {
    let mut result = Vec::new();
    let mut term = base.coeffs.clone();
    for i in 0..=s.get() {
        if i > 0 {
            term = derivative_once(&term);
        }
        add_scaled(&mut result, &term, &stirling2(s.get(), i), i as usize);
    }
    Polynomial::new(BasisTag::Standard, result)
}

/// The auxiliary polynomial `A_n = sum_k (n + k)^s hlah(n, k) x^(n + k)`,
/// equal to the Stirling-weighted derivative sum applied to `Q_n`.
pub fn a_poly(n: usize, s: Level, form: PolyForm) -> Polynomial {
    match form {
        PolyForm::Definition => weight_by_degree_power(&q_poly(n, s), s),
        PolyForm::Derivative => derivative_form(&q_poly(n, s), s),
    }
}

/// Row polynomial of the Lah numbers of order `s`, `sum_k olah(n, k) x^k`.
pub fn lah_order_poly(n: usize, s: Level) -> Polynomial {
    row_polynomial(TriangleKind::LahOrderS, n, s)
}

/// Advances an order-`s` Lah row polynomial by one row:
/// `x P_n + n^s P_n + B_n` with `B_n` read off the coefficients of `P_n`.
pub fn lah_order_poly_step(p_n: &Polynomial, n: usize, s: Level) -> Polynomial {
    assert_standard(p_n);
    let n_pow = BigInt::from(power(n as u64, s.get()));
    let mut result = vec![BigInt::zero(); 1];
    result.extend_from_slice(&p_n.coeffs);
    add_scaled(&mut result, &p_n.coeffs, &n_pow, 0);
    let b = weight_by_degree_power(p_n, s);
    add_scaled(&mut result, &b.coeffs, &BigInt::one(), 0);
    Polynomial::new(BasisTag::Standard, result)
}

/// The auxiliary polynomial `B_n = sum_k k^s olah(n, k) x^k`, equal to the
/// Stirling-weighted derivative sum applied to the row polynomial.
pub fn b_poly(n: usize, s: Level, form: PolyForm) -> Polynomial {
    match form {
        PolyForm::Definition => weight_by_degree_power(&lah_order_poly(n, s), s),
        PolyForm::Derivative => derivative_form(&lah_order_poly(n, s), s),
    }
}

/// Row polynomial of the `(s, r)`-Lah numbers, `sum_k lr(n, k) x^k`.
pub fn lr_row_poly(n: usize, s: Level, r: usize) -> Polynomial {
    row_polynomial(TriangleKind::LrLah { r }, n, s)
}

/// Advances an `(s, r)`-Lah row polynomial by one row:
/// `x L_n + sum_(j=0..s) C(s, j) n^(s-j) sum_(i=0..j) S(j, i) x^i d^i L_n`.
pub fn lr_row_poly_step(l_n: &Polynomial, n: usize, s: Level) -> Polynomial {
    assert_standard(l_n);
    let mut result = vec![BigInt::zero(); 1];
    result.extend_from_slice(&l_n.coeffs);
    for j in 0..=s.get() {
        let binom = num_integer::binomial(BigUint::from(s.get()), BigUint::from(j));
        let outer = BigInt::from(binom * power(n as u64, s.get() - j));
        let mut term = l_n.coeffs.clone();
        for i in 0..=j {
            if i > 0 {
                term = derivative_once(&term);
            }
            let weight = &outer * stirling2(j, i);
            add_scaled(&mut result, &term, &weight, i as usize);
        }
    }
    Polynomial::new(BasisTag::Standard, result)
}
