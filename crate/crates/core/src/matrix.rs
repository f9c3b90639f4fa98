//! Exact 2x2 integer matrix algebra: the nilpotent cone, its similarity
//! decomposition, and the conjugation action that turns nilpotent matrices
//! into Pythagorean triples.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A 2x2 matrix of arbitrary-precision integers, row-major:
/// `a` = T11, `b` = T12, `c` = T21, `d` = T22.
///
/// Entries grow quadratically with tree depth, so everything is `BigInt`
/// from the start; there is no fixed-width fast path.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl IntMat2 {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        IntMat2 { a, b, c, d }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        IntMat2::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        IntMat2::from_i64(1, 0, 0, 1)
    }

    pub fn zero() -> Self {
        IntMat2::from_i64(0, 0, 0, 0)
    }

    /// The rank-one nilpotent seed `(0, -1; 0, 0)`. Its conjugation orbit
    /// under the even word group carries the primitive triples.
    pub fn seed_e() -> Self {
        IntMat2::from_i64(0, -1, 0, 0)
    }

    /// The reflection `diag(-1, 1)`. Conjugation by it flips the sign of
    /// every generator exponent at the word level.
    pub fn reflection_d() -> Self {
        IntMat2::from_i64(-1, 0, 0, 1)
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn transpose(&self) -> Self {
        IntMat2::new(
            self.a.clone(),
            self.c.clone(),
            self.b.clone(),
            self.d.clone(),
        )
    }

    /// Adjugate `(d, -b; -c, a)`; equals `det * inverse` for invertible matrices.
    pub fn adjugate(&self) -> Self {
        IntMat2::new(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn neg(&self) -> Self {
        IntMat2::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    /// Exact matrix product.
    pub fn mul(&self, rhs: &IntMat2) -> IntMat2 {
        IntMat2::new(
            &self.a * &rhs.a + &self.b * &rhs.c,
            &self.a * &rhs.b + &self.b * &rhs.d,
            &self.c * &rhs.a + &self.d * &rhs.c,
            &self.c * &rhs.b + &self.d * &rhs.d,
        )
    }

    /// True for every entry congruent to the identity mod 2.
    pub fn is_identity_mod2(&self) -> bool {
        self.a.is_odd() && self.b.is_even() && self.c.is_even() && self.d.is_odd()
    }
}

impl fmt::Display for IntMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {}, {})", self.a, self.b, self.c, self.d)
    }
}

impl std::ops::Mul for &IntMat2 {
    type Output = IntMat2;
    fn mul(self, rhs: &IntMat2) -> IntMat2 {
        IntMat2::mul(self, rhs)
    }
}

/// Conjugation `T X T^{-1}` for unimodular `T`, with the inverse computed
/// exactly through the adjugate. Trace and determinant of the result equal
/// those of `X`.
pub fn conjugate(t: &IntMat2, x: &IntMat2) -> Result<IntMat2> {
    let det = t.det();
    let inv = if det.is_one() {
        t.adjugate()
    } else if (-&det).is_one() {
        t.adjugate().neg()
    } else {
        return Err(Error::NotUnimodular(det.to_string()));
    };
    Ok(t.mul(x).mul(&inv))
}

/// True exactly when `X^2 = 0`, i.e. trace and determinant both vanish.
/// The zero matrix counts as nilpotent.
pub fn is_nilpotent(x: &IntMat2) -> bool {
    x.trace().is_zero() && x.det().is_zero()
}

/// Reads the triple `(|T21 + T12|, |2 T11|, |T21 - T12|)` off a nilpotent
/// matrix. For a primitive matrix built from coprime `(m, n)` this is the
/// Euclid triple `(|m^2 - n^2|, 2|mn|, m^2 + n^2)`.
pub fn triple_extract(t: &IntMat2) -> Result<(BigInt, BigInt, BigInt)> {
    if !is_nilpotent(t) {
        return Err(Error::NotNilpotent);
    }
    let s = (&t.c + &t.b).abs();
    let c = (BigInt::from(2) * &t.a).abs();
    let n = (&t.c - &t.b).abs();
    Ok((s, c, n))
}

/// A trace-zero matrix `(x, y; z, -x)` on the nilpotent cone, so `yz + x^2 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentMat {
    x: BigInt,
    y: BigInt,
    z: BigInt,
}

impl NilpotentMat {
    pub fn new(x: BigInt, y: BigInt, z: BigInt) -> Result<Self> {
        if &y * &z + &x * &x != BigInt::zero() {
            return Err(Error::InvalidNilpotentEntries);
        }
        Ok(NilpotentMat { x, y, z })
    }

    pub fn from_i64(x: i64, y: i64, z: i64) -> Result<Self> {
        NilpotentMat::new(x.into(), y.into(), z.into())
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn z(&self) -> &BigInt {
        &self.z
    }

    pub fn to_mat(&self) -> IntMat2 {
        IntMat2::new(self.x.clone(), self.y.clone(), self.z.clone(), -&self.x)
    }

    /// Splits the matrix as `lambda * (mn, -n^2; m^2, -mn)` with `gcd(m, n) = 1`.
    ///
    /// `|lambda|` is the content of the matrix and labels its similarity
    /// class; the sign of `lambda` records the orientation (sign of `z`, or
    /// of `-y` when `z = 0`), which is what makes the return exact for every
    /// cone matrix. Normalization: `m >= 0`, and `n > 0` whenever `m = 0`.
    /// The zero matrix maps to `lambda = 0` with `(m, n) = (1, 0)`.
    pub fn decompose(&self) -> NilpotentDecomposition {
        if self.x.is_zero() && self.y.is_zero() && self.z.is_zero() {
            return NilpotentDecomposition {
                lambda: BigInt::zero(),
                m: BigInt::one(),
                n: BigInt::zero(),
            };
        }
        let content = self.x.gcd(&self.y).gcd(&self.z);
        let lambda = if !self.z.is_zero() {
            if self.z.is_negative() {
                -content
            } else {
                content
            }
        } else {
            // z = 0 forces x = 0 here, so y carries the orientation.
            if self.y.is_negative() {
                content
            } else {
                -content
            }
        };
        let m_sq: BigInt = &self.z / &lambda;
        let n_sq: BigInt = -&self.y / &lambda;
        let m = m_sq.sqrt();
        let n_abs = n_sq.sqrt();
        debug_assert_eq!(&m * &m, m_sq);
        debug_assert_eq!(&n_abs * &n_abs, n_sq);
        let n = if m.is_zero() || n_abs.is_zero() {
            n_abs
        } else {
            let x_over = &self.x / &lambda;
            if x_over.is_negative() {
                -n_abs
            } else {
                n_abs
            }
        };
        NilpotentDecomposition { lambda, m, n }
    }
}

impl TryFrom<&IntMat2> for NilpotentMat {
    type Error = Error;

    fn try_from(m: &IntMat2) -> Result<Self> {
        if !is_nilpotent(m) {
            return Err(Error::NotNilpotent);
        }
        NilpotentMat::new(m.a.clone(), m.b.clone(), m.c.clone())
    }
}

/// The unique `(lambda, m, n)` with `x = mn*lambda`, `y = -n^2*lambda`,
/// `z = m^2*lambda` and `gcd(m, n) = 1` for `lambda != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentDecomposition {
    pub lambda: BigInt,
    pub m: BigInt,
    pub n: BigInt,
}

impl NilpotentDecomposition {
    /// Content of the matrix, the nonnegative similarity-class label.
    pub fn content(&self) -> BigInt {
        self.lambda.abs()
    }

    pub fn reconstruct(&self) -> NilpotentMat {
        NilpotentMat {
            x: &self.m * &self.n * &self.lambda,
            y: -(&self.n * &self.n * &self.lambda),
            z: &self.m * &self.m * &self.lambda,
        }
    }
}
