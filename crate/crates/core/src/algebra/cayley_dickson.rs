//! The Cayley-Dickson tower R -> C -> H -> octonions and its embedding
//! into the table-defined octonion algebra.
//!
//! A [`CdElement`] stores a level-`k` element in its own doubling basis
//! (`2^k` leading coefficients, trailing slots zero) and multiplies by the
//! recursive rule `(a,b)(c,d) = (ac - conj(d)b, da + b conj(c))`.  At the
//! quaternion level this is the standard `i^2 = j^2 = k^2 = ijk = -1`
//! algebra with `ij = k`.
//!
//! [`CdElement::embed`] carries the tower into the octonions.  The table
//! puts the product `e1·e2` at `e6`, so the quaternion subalgebra aligned
//! with `i -> e1, j -> e2` is `span{1, e1, e2, e6}` with `k -> e6`; the
//! doubling generator of the top level maps to `e4`.  All basis images are
//! derived from the table itself, not hard-coded, so the embedding is
//! multiplicative at every level by construction of the doubling.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::algebra::octonion::Octonion;
use crate::algebra::scalar::Scalar;
use crate::error::{Error, Result};

/// Level in the Cayley-Dickson tower.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum AlgebraLevel {
    Real,
    Complex,
    Quaternion,
    Octonion,
}

impl AlgebraLevel {
    /// Number of coefficients used at this level.
    pub fn dimension(self) -> usize {
        match self {
            AlgebraLevel::Real => 1,
            AlgebraLevel::Complex => 2,
            AlgebraLevel::Quaternion => 4,
            AlgebraLevel::Octonion => 8,
        }
    }
}

/// An element of the Cayley-Dickson algebra at a fixed level.
#[derive(Clone, Debug, PartialEq)]
pub struct CdElement<S: Scalar> {
    level: AlgebraLevel,
    coeffs: [S; 8],
}

impl<S: Scalar> CdElement<S> {
    /// Builds an element, rejecting coefficients beyond the level's span.
    pub fn new(level: AlgebraLevel, coeffs: [S; 8]) -> Result<Self> {
        let dim = level.dimension();
        for (index, c) in coeffs.iter().enumerate().skip(dim) {
            if !c.is_zero() {
                return Err(Error::LevelOverflow { level, index });
            }
        }
        Ok(CdElement { level, coeffs })
    }

    pub fn zero(level: AlgebraLevel) -> Self {
        CdElement {
            level,
            coeffs: std::array::from_fn(|_| S::zero()),
        }
    }

    pub fn one(level: AlgebraLevel) -> Self {
        Self::basis(level, 0)
    }

    pub fn basis(level: AlgebraLevel, i: usize) -> Self {
        assert!(i < level.dimension(), "basis index beyond level dimension");
        let mut coeffs: [S; 8] = std::array::from_fn(|_| S::zero());
        coeffs[i] = S::one();
        CdElement { level, coeffs }
    }

    pub fn from_real(level: AlgebraLevel, value: S) -> Self {
        let mut coeffs: [S; 8] = std::array::from_fn(|_| S::zero());
        coeffs[0] = value;
        CdElement { level, coeffs }
    }

    pub fn level(&self) -> AlgebraLevel {
        self.level
    }

    pub fn coeffs(&self) -> &[S; 8] {
        &self.coeffs
    }

    pub fn conj(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for c in coeffs.iter_mut().skip(1) {
            *c = -c.clone();
        }
        CdElement {
            level: self.level,
            coeffs,
        }
    }

    pub fn norm_sq(&self) -> S {
        self.coeffs
            .iter()
            .map(|c| c.clone() * c.clone())
            .fold(S::zero(), |acc, c| acc + c)
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj().scale(&n.invert()?))
    }

    pub fn imaginary(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] = S::zero();
        CdElement {
            level: self.level,
            coeffs,
        }
    }

    pub fn is_imaginary(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(S::is_zero)
    }

    pub fn scale(&self, s: &S) -> Self {
        CdElement {
            level: self.level,
            coeffs: std::array::from_fn(|i| self.coeffs[i].clone() * s.clone()),
        }
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .all(|(a, b)| a.scalar_eq(b))
    }

    /// Multiplicative embedding into the table-defined octonions:
    /// `1 -> 1`, `i -> e1`, `j -> e2`, `k -> e1·e2`, doubling unit `-> e4`.
    pub fn embed(&self) -> Octonion<S> {
        let images = embedding_images::<S>();
        let mut out = Octonion::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = out + images[i].scale(c);
            }
        }
        out
    }
}

/// Octonion images of the 8 doubling-basis elements, derived from the
/// multiplication table: the second half is the first half times `e4`.
fn embedding_images<S: Scalar>() -> [Octonion<S>; 8] {
    let e1 = Octonion::basis(1);
    let e2 = Octonion::basis(2);
    let e4 = Octonion::basis(4);
    let k = &e1 * &e2;
    let half: [Octonion<S>; 4] = [Octonion::one(), e1, e2, k];
    std::array::from_fn(|i| {
        if i < 4 {
            half[i].clone()
        } else {
            &half[i - 4] * &e4
        }
    })
}

/// `(a,b)(c,d) = (ac - conj(d)b, da + b conj(c))` on coefficient slices.
fn cd_mul_slices<S: Scalar>(x: &[S], y: &[S]) -> Vec<S> {
    let n = x.len();
    if n == 1 {
        return vec![x[0].clone() * y[0].clone()];
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let conj = |z: &[S]| -> Vec<S> {
        z.iter()
            .enumerate()
            .map(|(i, v)| if i == 0 { v.clone() } else { -v.clone() })
            .collect()
    };
    let sub =
        |p: Vec<S>, q: Vec<S>| -> Vec<S> { p.into_iter().zip(q).map(|(u, v)| u - v).collect() };
    let add =
        |p: Vec<S>, q: Vec<S>| -> Vec<S> { p.into_iter().zip(q).map(|(u, v)| u + v).collect() };
    let lo = sub(cd_mul_slices(a, c), cd_mul_slices(&conj(d), b));
    let hi = add(cd_mul_slices(d, a), cd_mul_slices(b, &conj(c)));
    lo.into_iter().chain(hi).collect()
}

impl<S: Scalar> Mul for &CdElement<S> {
    type Output = CdElement<S>;
    fn mul(self, rhs: &CdElement<S>) -> CdElement<S> {
        let level = self.level.max(rhs.level);
        let dim = level.dimension();
        let product = cd_mul_slices(&self.coeffs[..dim], &rhs.coeffs[..dim]);
        let coeffs: [S; 8] =
            std::array::from_fn(|i| product.get(i).cloned().unwrap_or_else(S::zero));
        CdElement { level, coeffs }
    }
}

impl<S: Scalar> Add for &CdElement<S> {
    type Output = CdElement<S>;
    fn add(self, rhs: &CdElement<S>) -> CdElement<S> {
        CdElement {
            level: self.level.max(rhs.level),
            coeffs: std::array::from_fn(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone()),
        }
    }
}

impl<S: Scalar> Sub for &CdElement<S> {
    type Output = CdElement<S>;
    fn sub(self, rhs: &CdElement<S>) -> CdElement<S> {
        CdElement {
            level: self.level.max(rhs.level),
            coeffs: std::array::from_fn(|i| self.coeffs[i].clone() - rhs.coeffs[i].clone()),
        }
    }
}

impl<S: Scalar> Neg for &CdElement<S> {
    type Output = CdElement<S>;
    fn neg(self) -> CdElement<S> {
        CdElement {
            level: self.level,
            coeffs: std::array::from_fn(|i| -self.coeffs[i].clone()),
        }
    }
}

macro_rules! forward_owned_cd_binop {
    ($trait:ident, $method:ident) => {
        impl<S: Scalar> $trait for CdElement<S> {
            type Output = CdElement<S>;
            fn $method(self, rhs: CdElement<S>) -> CdElement<S> {
                (&self).$method(&rhs)
            }
        }
        impl<S: Scalar> $trait<&CdElement<S>> for CdElement<S> {
            type Output = CdElement<S>;
            fn $method(self, rhs: &CdElement<S>) -> CdElement<S> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_cd_binop!(Add, add);
forward_owned_cd_binop!(Sub, sub);
forward_owned_cd_binop!(Mul, mul);

impl<S: Scalar> Neg for CdElement<S> {
    type Output = CdElement<S>;
    fn neg(self) -> CdElement<S> {
        -&self
    }
}

impl<S: Scalar> fmt::Display for CdElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.level, self.embed())
    }
}
