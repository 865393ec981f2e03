//! Exact rational polynomial arithmetic and the two defining recursions
//!
//! ```text
//! H_0 = 1,   H_n(x) = ½ (x+1) ( (x+1) H_{n−1}(x+1) − x H_{n−1}(x) )
//! E_0 = 1,   E_n(x) = ½ (x+1) ( (x+2) E_{n−1}(x+2) − x E_{n−1}(x) )
//! ```
//!
//! whose values at `x = 1` give the counting sequences for Dellac
//! configurations and their symplectic variant.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A univariate polynomial with exact rational coefficients, stored densely
/// in ascending degree with no trailing zero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// Builds a polynomial from ascending-degree coefficients, trimming
    /// trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = RationalPolynomial { coeffs };
        p.trim();
        p
    }

    /// Convenience constructor from integer coefficients in ascending
    /// degree, e.g. `&[1, 1]` for `x + 1`.
    pub fn from_integer_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_at_integer(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }

    /// Composition with `x + c`: returns the polynomial `p(x + c)`,
    /// expanded exactly.
    pub fn shift(&self, c: i64) -> Self {
        let shift_root = Self::from_integer_coeffs(&[c, 1]);
        let mut acc = Self::zero();
        for coefficient in self.coeffs.iter().rev() {
            acc = &acc * &shift_root + Self::constant(coefficient.clone());
        }
        acc
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::from_coeffs((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RationalPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for RationalPolynomial {
    type Output = RationalPolynomial;

    fn add(self, rhs: RationalPolynomial) -> RationalPolynomial {
        &self + &rhs
    }
}

impl Sub for RationalPolynomial {
    type Output = RationalPolynomial;

    fn sub(self, rhs: RationalPolynomial) -> RationalPolynomial {
        &self - &rhs
    }
}

impl Mul for RationalPolynomial {
    type Output = RationalPolynomial;

    fn mul(self, rhs: RationalPolynomial) -> RationalPolynomial {
        &self * &rhs
    }
}

static H_CACHE: Mutex<Vec<RationalPolynomial>> = Mutex::new(Vec::new());
static E_CACHE: Mutex<Vec<RationalPolynomial>> = Mutex::new(Vec::new());

fn cached_recursion(
    cache: &Mutex<Vec<RationalPolynomial>>,
    n: usize,
    step: fn(&RationalPolynomial) -> RationalPolynomial,
) -> RationalPolynomial {
    let mut table = cache.lock().unwrap();
    if table.is_empty() {
        table.push(RationalPolynomial::from_integer_coeffs(&[1]));
    }
    while table.len() <= n {
        let next = step(table.last().unwrap());
        table.push(next);
    }
    table[n].clone()
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

fn h_step(prev: &RationalPolynomial) -> RationalPolynomial {
    let x = RationalPolynomial::from_integer_coeffs(&[0, 1]);
    let x_plus_1 = RationalPolynomial::from_integer_coeffs(&[1, 1]);
    let inner = &(&x_plus_1 * &prev.shift(1)) - &(&x * prev);
    (&x_plus_1 * &inner).scale(&half())
}

fn e_step(prev: &RationalPolynomial) -> RationalPolynomial {
    let x = RationalPolynomial::from_integer_coeffs(&[0, 1]);
    let x_plus_1 = RationalPolynomial::from_integer_coeffs(&[1, 1]);
    let x_plus_2 = RationalPolynomial::from_integer_coeffs(&[2, 1]);
    let inner = &(&x_plus_2 * &prev.shift(2)) - &(&x * prev);
    (&x_plus_1 * &inner).scale(&half())
}

/// The `n`-th polynomial of the `H` recursion, memoized per process.
pub fn h_polynomial(n: usize) -> RationalPolynomial {
    cached_recursion(&H_CACHE, n, h_step)
}

/// The `n`-th polynomial of the `E` recursion, memoized per process.
pub fn e_polynomial(n: usize) -> RationalPolynomial {
    cached_recursion(&E_CACHE, n, e_step)
}

fn integer_value(p: &RationalPolynomial, at: i64, what: &str) -> BigInt {
    let value = p.eval_at_integer(at);
    assert!(
        value.is_integer(),
        "{what} evaluated at {at} is not an integer: {value}"
    );
    value.to_integer()
}

/// `H_n(1)`, the number of Dellac configurations of order `n`. Panics if
/// the evaluation fails to reduce to an integer, which would mean the
/// recursion is implemented wrongly.
pub fn h_value(n: usize) -> BigInt {
    integer_value(&h_polynomial(n), 1, "H polynomial")
}

/// `E_n(1)`, the conjectured number of symplectic Dellac configurations of
/// half-rank `n`. Panics on a non-integer evaluation, as in [`h_value`].
pub fn e_target(n: usize) -> BigInt {
    integer_value(&e_polynomial(n), 1, "E polynomial")
}
