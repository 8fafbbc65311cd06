//! Exact rational scalars, exact comparison of square-root sums, and exact
//! inertia of symmetric rational matrices.
//!
//! Everything in this module is decided in arbitrary-precision rational
//! arithmetic; no floating point enters any predicate.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. The only scalar used on the exact path.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `n/d`, reduced. Panics if `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    pub fn pow(&self, exp: i32) -> Self {
        Rational(self.0.pow(exp))
    }

    /// Exact square root when both numerator and denominator are perfect
    /// squares; `None` otherwise. The root is nonnegative.
    pub fn sqrt_exact(&self) -> Result<Option<Rational>> {
        if self.is_negative() {
            return Err(Error::NegativeInput);
        }
        let num = self.numer().magnitude();
        let den = self.denom().magnitude();
        let rn = num.sqrt();
        let rd = den.sqrt();
        if &rn * &rn == *num && &rd * &rd == *den {
            Ok(Some(Rational(BigRational::new(
                BigInt::from(rn),
                BigInt::from(rd),
            ))))
        } else {
            Ok(None)
        }
    }

    /// Rational lower bound for the square root: a value `r >= 0` with
    /// `r <= sqrt(self)` and `sqrt(self) - r <= 2^-bits`.
    pub fn sqrt_dyadic_floor(&self, bits: u32) -> Result<Rational> {
        if self.is_negative() {
            return Err(Error::NegativeInput);
        }
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        // sqrt(n/d) = sqrt(n*d)/d, so floor(sqrt(n*d*4^k))/(d*2^k) is within
        // 1/(d*2^k) <= 2^-k of the true root.
        let n = self.numer().magnitude();
        let d = self.denom().magnitude();
        let scaled = n * &d << (2 * bits as usize);
        let root = scaled.sqrt();
        Ok(Rational(BigRational::new(
            BigInt::from(root),
            BigInt::from(d << bits as usize),
        )))
    }

    /// Nearest rational with denominator dividing `2^bits` (ties toward zero).
    pub fn dyadic_round(&self, bits: u32) -> Rational {
        let scale = BigInt::one() << bits as usize;
        let scaled = &self.0 * BigRational::from_integer(scale.clone());
        let rounded = scaled.round().to_integer();
        Rational(BigRational::new(rounded, scale))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Rational {
    /// Canonical form `num/den`, with `/den` omitted when the value is an
    /// integer. This is the wire format used by every serializer.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt> {
            BigInt::from_str(t.trim()).map_err(|_| Error::Parse(format!("bad integer `{t}`")))
        };
        match s.split_once('/') {
            Some((n, d)) => {
                let num = parse_int(n)?;
                let den = parse_int(d)?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in `{s}`")));
                }
                Ok(Rational(BigRational::new(num, den)))
            }
            None => Ok(Rational(BigRational::from_integer(parse_int(s)?))),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e| D::Error::custom(format!("{e}")))
    }
}

/// Exact ordering of `sqrt(a) + sqrt(b)` versus `sqrt(c)` for nonnegative
/// rationals, decided by a two-step squaring scheme.
///
/// If `c <= a + b` the left side can only lose by being equal, which happens
/// exactly when `ab = 0` and `a + b = c`. Otherwise both `2*sqrt(ab)` and
/// `c - a - b` are nonnegative and squaring once more reduces the question to
/// comparing `4ab` with `(c - a - b)^2`.
pub fn cmp_sqrt_sum(a: &Rational, b: &Rational, c: &Rational) -> Result<Ordering> {
    if a.is_negative() || b.is_negative() || c.is_negative() {
        return Err(Error::NegativeInput);
    }
    let sum = a + b;
    if *c <= sum {
        if *c == sum && (a.is_zero() || b.is_zero()) {
            return Ok(Ordering::Equal);
        }
        return Ok(Ordering::Greater);
    }
    let lhs = Rational::from_int(4) * a * b;
    let gap = c - sum;
    Ok(lhs.cmp(&(&gap * &gap)))
}

/// Alias for [`Rational::sqrt_exact`]: the exact square root of a
/// nonnegative rational, when one exists in the rationals.
pub fn is_rational_square(q: &Rational) -> Result<Option<Rational>> {
    q.sqrt_exact()
}

/// Eigenvalue sign counts of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

/// Symmetric matrix with exact rational entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl SymMatrix {
    /// Builds from row-major entries; fails unless the data is exactly
    /// symmetric.
    pub fn new(n: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch);
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if entries[i * n + j] != entries[j * n + i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(SymMatrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch);
        }
        SymMatrix::new(n, rows.into_iter().flatten().collect())
    }

    pub fn zero(n: usize) -> Self {
        SymMatrix {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.n + j] = v.clone();
        self.entries[j * self.n + i] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    pub fn entries_nonnegative(&self) -> bool {
        self.entries.iter().all(|e| !e.is_negative())
    }

    /// Congruence transform `S^T M S` (used by the Sylvester-invariance
    /// tests).
    pub fn congruence(&self, s: &[Vec<Rational>]) -> SymMatrix {
        let n = self.n;
        let mut out = SymMatrix::zero(n);
        for i in 0..n {
            for j in i..n {
                let mut acc = Rational::zero();
                for k in 0..n {
                    for l in 0..n {
                        acc += &(&(&s[k][i] * self.get(k, l)) * &s[l][j]);
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// Exact signature by symmetric congruence reduction.
    ///
    /// Greedily pivots on the largest-magnitude nonzero diagonal entry; when
    /// every remaining diagonal entry is zero but some off-diagonal entry `m`
    /// is nonzero, the corresponding 2x2 hyperbolic block contributes one
    /// positive and one negative eigenvalue. By Sylvester's law of inertia
    /// the counts equal the eigenvalue sign counts.
    pub fn inertia(&self) -> Inertia {
        let n = self.n;
        let mut m = self.clone();
        let mut active: Vec<usize> = (0..n).collect();
        let mut n_plus = 0;
        let mut n_minus = 0;
        let mut n_zero = 0;

        while !active.is_empty() {
            // Largest-magnitude nonzero diagonal pivot among active rows.
            let pivot = active
                .iter()
                .copied()
                .filter(|&k| !m.get(k, k).is_zero())
                .max_by(|&a, &b| m.get(a, a).abs().cmp(&m.get(b, b).abs()));

            if let Some(k) = pivot {
                let d = m.get(k, k).clone();
                if d.is_positive() {
                    n_plus += 1;
                } else {
                    n_minus += 1;
                }
                active.retain(|&t| t != k);
                for &i in &active {
                    let f = m.get(i, k) / &d;
                    if f.is_zero() {
                        continue;
                    }
                    for &j in &active {
                        let upd = m.get(i, j) - &(&f * m.get(k, j));
                        m.entries[i * n + j] = upd;
                    }
                }
                // Zero out the pivot row/column on the active block.
                for &i in &active {
                    m.entries[i * n + k] = Rational::zero();
                    m.entries[k * n + i] = Rational::zero();
                }
                continue;
            }

            // All active diagonal entries are zero. Find a nonzero
            // off-diagonal entry; if none, the active block is zero.
            let mut hyper = None;
            'search: for (pos, &i) in active.iter().enumerate() {
                for &j in &active[pos + 1..] {
                    if !m.get(i, j).is_zero() {
                        hyper = Some((i, j));
                        break 'search;
                    }
                }
            }
            let Some((i, j)) = hyper else {
                n_zero += active.len();
                break;
            };
            let v = m.get(i, j).clone();
            n_plus += 1;
            n_minus += 1;
            active.retain(|&t| t != i && t != j);
            // Block elimination against [[0, v], [v, 0]].
            let old: Vec<(usize, Rational, Rational)> = active
                .iter()
                .map(|&t| (t, m.get(t, i).clone(), m.get(t, j).clone()))
                .collect();
            for &(t, ref ti, ref tj) in &old {
                for &(u, ref ui, ref uj) in &old {
                    let upd = m.get(t, u) - &(&(&(ti * uj) + &(tj * ui)) / &v);
                    m.entries[t * n + u] = upd;
                }
            }
        }

        Inertia {
            n_plus,
            n_minus,
            n_zero,
        }
    }

    /// Lorentzian test: all entries nonnegative and at most one positive
    /// eigenvalue.
    pub fn is_lorentzian(&self) -> bool {
        self.entries_nonnegative() && self.inertia().n_plus <= 1
    }
}

impl Serialize for SymMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Rational>>::deserialize(deserializer)?;
        SymMatrix::from_rows(rows).map_err(|e| D::Error::custom(format!("{e}")))
    }
}
