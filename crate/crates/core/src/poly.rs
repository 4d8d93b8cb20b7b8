//! Exact integer polynomials in the color-count variable lambda.
//!
//! Chromatic counting functions of signed graphs are only counts at odd
//! lambda (signed, palette {-k..k}) or even lambda (balanced, palette without
//! zero), so every polynomial carries a [`Parity`] tag recording which
//! arithmetic progression of arguments it counts on.  The tag is metadata:
//! arithmetic is ordinary exact integer arithmetic, and mixing parities
//! degrades the tag to [`Parity::All`].
//!
//! Coefficients are stored ascending (index = power) with no trailing zeros;
//! the zero polynomial has an empty coefficient list.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Which lambda values a polynomial counts colorings at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    /// Odd lambda = 2k+1 (signed colorings).
    Odd,
    /// Even lambda = 2k (balanced colorings).
    Even,
    /// Every lambda (unsigned colorings, or plain algebra).
    All,
}

fn combine(a: Parity, b: Parity) -> Parity {
    if a == b {
        a
    } else {
        Parity::All
    }
}

/// A polynomial with exact integer coefficients and a parity tag.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    /// Ascending powers; no trailing zeros.
    coeffs: Vec<BigInt>,
    parity: Parity,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new(), parity: Parity::All }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c], Parity::All)
    }

    /// The polynomial `lambda`.
    pub fn variable() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::one()], Parity::All)
    }

    /// `c * lambda^power`.
    pub fn monomial(c: BigInt, power: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = c;
        Self::from_coeffs(coeffs, Parity::All)
    }

    /// Build from ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(coeffs: Vec<BigInt>, parity: Parity) -> Self {
        let mut p = IntPolynomial { coeffs, parity };
        p.trim();
        p
    }

    /// Test helper: ascending `i64` coefficients.
    pub fn from_i64_coeffs(coeffs: &[i64], parity: Parity) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect(), parity)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn with_parity(mut self, parity: Parity) -> Self {
        self.parity = parity;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients, no trailing zeros.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `lambda^power` (zero beyond the degree).
    pub fn coefficient(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Self to the `exp`-th power (exponents at graph scale; plain loop).
    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = IntPolynomial::one().with_parity(self.parity);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect(), self.parity)
    }

    /// `p(a*x + b)` with integer `a`, `b`; exact.  The result is a polynomial
    /// in the new variable, so the parity tag resets to `All`.
    pub fn compose_with_affine(&self, a: i64, b: i64) -> Self {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let mut acc: Vec<BigInt> = Vec::new();
        for c in self.coeffs.iter().rev() {
            // acc = acc * (a*x + b) + c
            let mut next = vec![BigInt::zero(); acc.len() + 1];
            for (i, ci) in acc.iter().enumerate() {
                next[i + 1] += ci * &a;
                next[i] += ci * &b;
            }
            next[0] += c;
            acc = next;
        }
        Self::from_coeffs(acc, Parity::All)
    }

    /// Exact polynomial division; errors unless `self = q * den` over the
    /// integers.
    pub fn exact_divide(&self, den: &IntPolynomial) -> Result<IntPolynomial> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let parity = combine(self.parity, den.parity);
        if self.is_zero() {
            return Ok(IntPolynomial::zero().with_parity(parity));
        }
        let den_deg = den.degree().expect("den is nonzero");
        let den_lead = den.leading_coefficient().expect("den is nonzero").clone();
        let mut rem = self.coeffs.clone();
        let self_deg = rem.len() - 1;
        if self_deg < den_deg {
            return Err(Error::InexactDivision);
        }
        let mut quot = vec![BigInt::zero(); self_deg - den_deg + 1];
        for shift in (0..=self_deg - den_deg).rev() {
            let lead = rem[den_deg + shift].clone();
            if lead.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&lead, &den_lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (i, d) in den.coeffs.iter().enumerate() {
                let prod = &q * d;
                rem[i + shift] -= prod;
            }
            quot[shift] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(IntPolynomial::from_coeffs(quot, parity))
    }

    /// Render with a caller-chosen variable name, descending powers.
    pub fn render(&self, var: &str) -> String {
        let mut out = String::new();
        if self.is_zero() {
            out.push('0');
            return out;
        }
        let mut first = true;
        for power in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[power];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coeff = !mag.is_one() || power == 0;
            if show_coeff {
                let _ = write!(out, "{mag}");
            }
            if power > 0 {
                out.push_str(var);
                if power > 1 {
                    let _ = write!(out, "^{power}");
                }
            }
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("λ"))
    }
}

impl Add<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPolynomial::from_coeffs(coeffs, combine(self.parity, rhs.parity))
    }
}

impl Sub<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        IntPolynomial::from_coeffs(coeffs, combine(self.parity, rhs.parity))
    }
}

impl Mul<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero().with_parity(combine(self.parity, rhs.parity));
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs, combine(self.parity, rhs.parity))
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect(), self.parity)
    }
}

/// Coefficients in powers of `2k`: builds `sum c_i (2k)^i` as a polynomial in
/// lambda via `2k = lambda - 1`, tagged [`Parity::Odd`] (lambda = 2k+1).
pub fn from_two_k_basis(coeffs: &[BigInt]) -> IntPolynomial {
    substitute_x_minus_one(coeffs).with_parity(Parity::Odd)
}

/// Coefficients in powers of `2k-1`: same substitution `2k-1 = lambda - 1`,
/// tagged [`Parity::Even`] (lambda = 2k).
pub fn from_two_k_minus_one_basis(coeffs: &[BigInt]) -> IntPolynomial {
    substitute_x_minus_one(coeffs).with_parity(Parity::Even)
}

fn substitute_x_minus_one(coeffs: &[BigInt]) -> IntPolynomial {
    // Horner in (lambda - 1).
    let shift = IntPolynomial::from_i64_coeffs(&[-1, 1], Parity::All);
    let mut acc = IntPolynomial::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * &shift) + &IntPolynomial::constant(c.clone());
    }
    acc
}

/// The falling factorial `(x)_order = x (x-1) ... (x-order+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FallingFactorial {
    pub order: usize,
}

impl FallingFactorial {
    pub fn expand(&self) -> IntPolynomial {
        let mut acc = IntPolynomial::one();
        for j in 0..self.order {
            acc = &acc * &IntPolynomial::from_i64_coeffs(&[-(j as i64), 1], Parity::All);
        }
        acc
    }
}

/// Exact Lagrange interpolation through `points`, which must have distinct x
/// values.  Errors if the result exceeds `expected_degree`, has non-integer
/// coefficients, or (when `require_monic`) is not monic.
pub fn interpolate(
    points: &[(BigInt, BigInt)],
    expected_degree: usize,
    parity: Parity,
    require_monic: bool,
) -> Result<IntPolynomial> {
    if points.len() < expected_degree + 1 {
        return Err(Error::LengthMismatch { expected: expected_degree + 1, actual: points.len() });
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        for (xj, _) in &points[..i] {
            if xi == xj {
                return Err(Error::DuplicateNode);
            }
        }
    }
    let mut acc: Vec<BigRational> = Vec::new();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        // numerator prod_{j != i} (x - x_j), denominator prod_{j != i} (x_i - x_j)
        let mut num: Vec<BigInt> = vec![BigInt::one()];
        let mut den = BigInt::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![BigInt::zero(); num.len() + 1];
            for (p, c) in num.iter().enumerate() {
                next[p + 1] += c;
                next[p] -= c * xj;
            }
            num = next;
            den *= xi - xj;
        }
        let weight = BigRational::new(yi.clone(), den);
        if acc.len() < num.len() {
            acc.resize(num.len(), BigRational::zero());
        }
        for (p, c) in num.into_iter().enumerate() {
            acc[p] += BigRational::from(c) * &weight;
        }
    }
    let poly = rational_to_int(acc, parity)?;
    if let Some(d) = poly.degree() {
        if d > expected_degree {
            return Err(Error::DegreeExceeded { expected: expected_degree, actual: d });
        }
    }
    if require_monic && !poly.is_monic() {
        return Err(Error::NotMonic);
    }
    Ok(poly)
}

fn rational_to_int(coeffs: Vec<BigRational>, parity: Parity) -> Result<IntPolynomial> {
    let mut out = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        if !c.is_integer() {
            return Err(Error::NonIntegralCoefficients);
        }
        out.push(c.to_integer());
    }
    Ok(IntPolynomial::from_coeffs(out, parity))
}

/// `p((a_num/a_den) x + b_num/b_den)` with an integrality check on the result.
/// Used to carry count polynomials in `k` back to the lambda variable.
pub(crate) fn substitute_affine_rational(
    p: &IntPolynomial,
    a_num: i64,
    a_den: i64,
    b_num: i64,
    b_den: i64,
    parity: Parity,
) -> Result<IntPolynomial> {
    let a = BigRational::new(BigInt::from(a_num), BigInt::from(a_den));
    let b = BigRational::new(BigInt::from(b_num), BigInt::from(b_den));
    let mut acc: Vec<BigRational> = Vec::new();
    for c in p.coefficients().iter().rev() {
        // acc = acc * (a*x + b) + c
        let mut next = vec![BigRational::zero(); acc.len() + 1];
        for (i, ci) in acc.iter().enumerate() {
            next[i + 1] += ci * &a;
            next[i] += ci * &b;
        }
        next[0] += BigRational::from(c.clone());
        acc = next;
    }
    while acc.last().is_some_and(Zero::is_zero) {
        acc.pop();
    }
    rational_to_int(acc, parity)
}
