//! Octonion arithmetic over a pluggable scalar backend.
//!
//! The basis is `1 = e0, e1, ..., e7` with the product generated by the
//! relations `e2·e6 = e3·e4 = e5·e7 = e1` together with all of their cyclic
//! shifts of the indices `1..7`, anticommutativity of distinct imaginary
//! units, and `ei² = -1`.  The table is generated programmatically from
//! those relations at first use; a hand-written copy is checked against it
//! in the tests to guard transcription errors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use crate::algebra::scalar::{display_scalar, Scalar};
use crate::error::{Error, Result};
use crate::text::{split_signed_terms, split_top_level};

/// Structure constants: `TABLE[i][j] = (sign, k)` meaning `ei·ej = sign·ek`.
pub type MulTable = [[(i8, usize); 8]; 8];

/// The three generating relations `e2·e6 = e3·e4 = e5·e7 = e1`; everything
/// else follows by cyclic shifts of `1..7` and anticommutativity.
const GENERATING_TRIPLES: [(usize, usize, usize); 3] = [(2, 6, 1), (3, 4, 1), (5, 7, 1)];

fn shift_index(i: usize, by: usize) -> usize {
    (i - 1 + by) % 7 + 1
}

fn generate_table() -> MulTable {
    let mut table = [[(0i8, usize::MAX); 8]; 8];
    let set = |table: &mut MulTable, i: usize, j: usize, sign: i8, k: usize| {
        let cell = &mut table[i][j];
        if cell.0 != 0 {
            assert_eq!(
                *cell,
                (sign, k),
                "inconsistent relation for e{i}·e{j}: have {:?}, got {:?}",
                *cell,
                (sign, k)
            );
        }
        *cell = (sign, k);
    };
    for j in 0..8 {
        set(&mut table, 0, j, 1, j);
    }
    for i in 1..8 {
        set(&mut table, i, 0, 1, i);
        set(&mut table, i, i, -1, 0);
    }
    for by in 0..7 {
        for &(a, b, c) in &GENERATING_TRIPLES {
            let (i, j, k) = (shift_index(a, by), shift_index(b, by), shift_index(c, by));
            set(&mut table, i, j, 1, k);
            set(&mut table, j, i, -1, k);
        }
    }
    for (i, row) in table.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            assert!(cell.0 != 0, "multiplication table cell ({i},{j}) unfilled");
        }
    }
    table
}

/// Frozen multiplication table generated from the relations.
pub fn mul_table() -> &'static MulTable {
    static TABLE: OnceLock<MulTable> = OnceLock::new();
    TABLE.get_or_init(generate_table)
}

/// Hand-written copy of the table, kept to cross-check the generator.
#[cfg(test)]
#[rustfmt::skip]
const HAND_WRITTEN_TABLE: MulTable = [
    [( 1,0),( 1,1),( 1,2),( 1,3),( 1,4),( 1,5),( 1,6),( 1,7)],
    [( 1,1),(-1,0),( 1,6),( 1,4),(-1,3),( 1,7),(-1,2),(-1,5)],
    [( 1,2),(-1,6),(-1,0),( 1,7),( 1,5),(-1,4),( 1,1),(-1,3)],
    [( 1,3),(-1,4),(-1,7),(-1,0),( 1,1),( 1,6),(-1,5),( 1,2)],
    [( 1,4),( 1,3),(-1,5),(-1,1),(-1,0),( 1,2),( 1,7),(-1,6)],
    [( 1,5),(-1,7),( 1,4),(-1,6),(-1,2),(-1,0),( 1,3),( 1,1)],
    [( 1,6),( 1,2),(-1,1),( 1,5),(-1,7),(-1,3),(-1,0),( 1,4)],
    [( 1,7),( 1,5),( 1,3),(-1,2),( 1,6),(-1,1),(-1,4),(-1,0)],
];

/// An octonion `c0 + c1 e1 + ... + c7 e7`.
#[derive(Clone, Debug, PartialEq)]
pub struct Octonion<S: Scalar> {
    coeffs: [S; 8],
}

impl<S: Scalar> Octonion<S> {
    pub fn new(coeffs: [S; 8]) -> Self {
        Octonion { coeffs }
    }

    pub fn zero() -> Self {
        Octonion::new(std::array::from_fn(|_| S::zero()))
    }

    pub fn one() -> Self {
        Octonion::basis(0)
    }

    /// The basis element `e_i` (`e_0 = 1`).
    pub fn basis(i: usize) -> Self {
        assert!(i < 8, "basis index out of range");
        let mut coeffs: [S; 8] = std::array::from_fn(|_| S::zero());
        coeffs[i] = S::one();
        Octonion::new(coeffs)
    }

    pub fn from_real(value: S) -> Self {
        let mut coeffs: [S; 8] = std::array::from_fn(|_| S::zero());
        coeffs[0] = value;
        Octonion::new(coeffs)
    }

    pub fn coeff(&self, i: usize) -> &S {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[S; 8] {
        &self.coeffs
    }

    pub fn real_part(&self) -> S {
        self.coeffs[0].clone()
    }

    /// Conjugate: negates `c1..c7`.
    pub fn conj(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for c in coeffs.iter_mut().skip(1) {
            *c = -c.clone();
        }
        Octonion::new(coeffs)
    }

    /// Norm `N(x) = x·conj(x) = Σ ci²`.
    pub fn norm_sq(&self) -> S {
        self.coeffs
            .iter()
            .map(|c| c.clone() * c.clone())
            .fold(S::zero(), |acc, c| acc + c)
    }

    /// Modulus `|x| = √N(x)`; exact on rationals only when `N(x)` is a
    /// rational square.
    pub fn modulus(&self) -> Result<S> {
        self.norm_sq().sqrt()
    }

    /// Inverse `conj(x)/N(x)`; errors on zero.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj().scale(&n.invert()?))
    }

    /// Imaginary part `(x - conj(x))/2`.
    pub fn imaginary(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] = S::zero();
        Octonion::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(S::is_zero)
    }

    pub fn is_imaginary(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    pub fn scale(&self, s: &S) -> Self {
        Octonion::new(std::array::from_fn(|i| self.coeffs[i].clone() * s.clone()))
    }

    /// Backend-aware equality: exact for rationals, tolerant for floats.
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .all(|(a, b)| a.scalar_eq(b))
    }

    /// Compact text form: 8 comma-separated scalars.
    pub fn to_compact(&self) -> String {
        self.coeffs
            .iter()
            .map(display_scalar)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl<S: Scalar> Add for &Octonion<S> {
    type Output = Octonion<S>;
    fn add(self, rhs: &Octonion<S>) -> Octonion<S> {
        Octonion::new(std::array::from_fn(|i| {
            self.coeffs[i].clone() + rhs.coeffs[i].clone()
        }))
    }
}

impl<S: Scalar> Sub for &Octonion<S> {
    type Output = Octonion<S>;
    fn sub(self, rhs: &Octonion<S>) -> Octonion<S> {
        Octonion::new(std::array::from_fn(|i| {
            self.coeffs[i].clone() - rhs.coeffs[i].clone()
        }))
    }
}

impl<S: Scalar> Neg for &Octonion<S> {
    type Output = Octonion<S>;
    fn neg(self) -> Octonion<S> {
        Octonion::new(std::array::from_fn(|i| -self.coeffs[i].clone()))
    }
}

impl<S: Scalar> Mul for &Octonion<S> {
    type Output = Octonion<S>;
    fn mul(self, rhs: &Octonion<S>) -> Octonion<S> {
        let table = mul_table();
        let mut out: [S; 8] = std::array::from_fn(|_| S::zero());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (sign, k) = table[i][j];
                let term = a.clone() * b.clone();
                out[k] = if sign > 0 {
                    out[k].clone() + term
                } else {
                    out[k].clone() - term
                };
            }
        }
        Octonion::new(out)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl<S: Scalar> $trait for Octonion<S> {
            type Output = Octonion<S>;
            fn $method(self, rhs: Octonion<S>) -> Octonion<S> {
                (&self).$method(&rhs)
            }
        }
        impl<S: Scalar> $trait<&Octonion<S>> for Octonion<S> {
            type Output = Octonion<S>;
            fn $method(self, rhs: &Octonion<S>) -> Octonion<S> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<S: Scalar> Neg for Octonion<S> {
    type Output = Octonion<S>;
    fn neg(self) -> Octonion<S> {
        -&self
    }
}

impl<S: Scalar> fmt::Display for Octonion<S> {
    /// Canonical sum form, e.g. `3/5 + 1/5 e1 - e3`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = *c < S::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if wrote {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            } else if negative {
                write!(f, "-")?;
            }
            if i == 0 {
                write!(f, "{}", display_scalar(&magnitude))?;
            } else if magnitude.scalar_eq(&S::one()) {
                write!(f, "e{i}")?;
            } else {
                write!(f, "{} e{i}", display_scalar(&magnitude))?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Parses one signed term of a sum-form octonion literal.
/// Accepts `e3`, `2 e3`, `1/2 e3`, or a bare scalar.  The basis token must
/// be separated from the coefficient by whitespace so that float exponent
/// notation such as `2.5e1` stays a scalar.
fn parse_term<S: Scalar>(term: &str) -> Result<(usize, S)> {
    let term = term.trim();
    if let Some(idx) = basis_index(term) {
        return Ok((idx, S::one()));
    }
    if let Some((coeff_text, basis_text)) = term.rsplit_once(char::is_whitespace) {
        if let Some(idx) = basis_index(basis_text.trim()) {
            return Ok((idx, S::parse(coeff_text)?));
        }
    }
    Ok((0, S::parse(term)?))
}

fn basis_index(token: &str) -> Option<usize> {
    let rest = token.strip_prefix('e')?;
    if rest.len() == 1 {
        let d = rest.bytes().next()?;
        if (b'1'..=b'7').contains(&d) {
            return Some((d - b'0') as usize);
        }
    }
    None
}

impl<S: Scalar> FromStr for Octonion<S> {
    type Err = Error;

    /// Accepts the sum form `a0 + a1 e1 + ... + a7 e7` or the compact form
    /// of 8 comma-separated scalars.  Both round-trip with [`fmt::Display`]
    /// and [`Octonion::to_compact`].
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty octonion literal".into()));
        }
        let parts = split_top_level(s, ',');
        if parts.len() > 1 {
            if parts.len() != 8 {
                return Err(Error::Parse(format!(
                    "compact octonion needs 8 scalars, got {} in `{s}`",
                    parts.len()
                )));
            }
            let mut coeffs: [S; 8] = std::array::from_fn(|_| S::zero());
            for (i, part) in parts.iter().enumerate() {
                coeffs[i] = S::parse(part)?;
            }
            return Ok(Octonion::new(coeffs));
        }
        let mut coeffs: [S; 8] = std::array::from_fn(|_| S::zero());
        let terms = split_signed_terms(s);
        if terms.is_empty() {
            return Err(Error::Parse(format!("invalid octonion literal `{s}`")));
        }
        for (negative, term) in terms {
            let (idx, value) = parse_term::<S>(term)?;
            let value = if negative { -value } else { value };
            coeffs[idx] = coeffs[idx].clone() + value;
        }
        Ok(Octonion::new(coeffs))
    }
}
