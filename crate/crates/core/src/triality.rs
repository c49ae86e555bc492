//! Rotations of the octonions as words of unit factors, together with
//! their left and right companion maps.
//!
//! A [`SpinWord`] is a finite sequence of unit octonions `a1, ..., ak`
//! representing three linear isometries at once:
//!
//! * [`SpinWord::rotate`] composes the bi-multiplications `x -> a x a`,
//! * [`SpinWord::companion_left`] composes the left multiplications
//!   `x -> a x`,
//! * [`SpinWord::companion_right`] composes the right multiplications
//!   `x -> x a`,
//!
//! listing the outermost factor first in each case.  The three maps are
//! tied together by the companion relation
//! `rotate(x y) = companion_left(x) · companion_right(y)`, which for a
//! single factor is the middle Moufang identity `a(xy)a = (ax)(ya)`.
//!
//! [`SpinWord::normalize_unital`] converts a word into one whose right
//! companion fixes `1`; in that normal form the rotation and the left
//! companion coincide and the right companion restricts to an algebra
//! map on every subalgebra generated by a single element.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Octonion, Scalar};
use crate::error::{Error, Result};
use crate::text::split_top_level;

/// A word of unit octonions acting on the algebra three ways.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinWord<S: Scalar> {
    factors: Vec<Octonion<S>>,
}

impl<S: Scalar> SpinWord<S> {
    /// Builds a word, rejecting any factor whose norm is not 1.
    pub fn new(factors: Vec<Octonion<S>>) -> Result<Self> {
        for a in &factors {
            if !a.norm_sq().scalar_eq(&S::one()) {
                return Err(Error::NonUnitFactor(a.to_string()));
            }
        }
        Ok(SpinWord { factors })
    }

    /// The empty word; all three maps are the identity.
    pub fn identity() -> Self {
        SpinWord {
            factors: Vec::new(),
        }
    }

    pub fn factors(&self) -> &[Octonion<S>] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Composition of `x -> a x a` over the word, outermost factor first.
    pub fn rotate(&self, x: &Octonion<S>) -> Octonion<S> {
        let mut out = x.clone();
        for a in self.factors.iter().rev() {
            out = &(a * &out) * a;
        }
        out
    }

    /// Composition of the left multiplications `x -> a x`.
    pub fn companion_left(&self, x: &Octonion<S>) -> Octonion<S> {
        let mut out = x.clone();
        for a in self.factors.iter().rev() {
            out = a * &out;
        }
        out
    }

    /// Composition of the right multiplications `x -> x a`.
    pub fn companion_right(&self, x: &Octonion<S>) -> Octonion<S> {
        let mut out = x.clone();
        for a in self.factors.iter().rev() {
            out = &out * a;
        }
        out
    }

    /// Whether the right companion fixes 1.
    pub fn is_unital(&self) -> bool {
        self.companion_right(&Octonion::one())
            .approx_eq(&Octonion::one())
    }

    /// Equivalent word whose right companion fixes 1: prepends the inverse
    /// of `companion_right(1)` and drops factors equal to 1.  Factors equal
    /// to -1 are kept; dropping them would flip the sign of both
    /// companions.
    pub fn normalize_unital(&self) -> SpinWord<S> {
        let u = self.companion_right(&Octonion::one());
        let mut factors = Vec::with_capacity(self.factors.len() + 1);
        factors.push(u.inverse().expect("unit-norm evaluation is invertible"));
        factors.extend(self.factors.iter().cloned());
        factors.retain(|a| *a != Octonion::one());
        SpinWord { factors }
    }
}

impl<S: Scalar> fmt::Display for SpinWord<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl<S: Scalar> FromStr for SpinWord<S> {
    type Err = Error;

    /// Parses a semicolon-separated list of octonion literals.
    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for chunk in split_top_level(s, ';') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            factors.push(chunk.parse()?);
        }
        SpinWord::new(factors)
    }
}

/// A word packaged with its three evaluation roles.
#[derive(Clone, Debug)]
pub struct TrialityTriple<S: Scalar> {
    word: SpinWord<S>,
}

impl<S: Scalar> TrialityTriple<S> {
    pub fn new(word: SpinWord<S>) -> Self {
        TrialityTriple { word }
    }

    pub fn word(&self) -> &SpinWord<S> {
        &self.word
    }

    pub fn rotate(&self, x: &Octonion<S>) -> Octonion<S> {
        self.word.rotate(x)
    }

    pub fn companion_left(&self, x: &Octonion<S>) -> Octonion<S> {
        self.word.companion_left(x)
    }

    pub fn companion_right(&self, x: &Octonion<S>) -> Octonion<S> {
        self.word.companion_right(x)
    }

    /// Checks `rotate(x y) = companion_left(x) · companion_right(y)`.
    pub fn relation_holds(&self, x: &Octonion<S>, y: &Octonion<S>) -> bool {
        self.rotate(&(x * y))
            .approx_eq(&(self.companion_left(x) * self.companion_right(y)))
    }
}

/// Unit octonion `(1 - q)(1 + q)^{-1}` for imaginary `q`; the norm is
/// exactly 1 because `N(1 - q) = N(1 + q) = 1 + N(q)` and `1 - q`,
/// `(1 + q)^{-1}` lie in the commutative subalgebra generated by `q`.
pub fn unit_from_imaginary<S: Scalar>(q: &Octonion<S>) -> Result<Octonion<S>> {
    if !q.is_imaginary() {
        return Err(Error::NotImaginary(q.to_string()));
    }
    let one = Octonion::one();
    Ok(&(&one - q) * &(&one + q).inverse()?)
}

/// Exactly unit-norm octonion drawn from a seeded generator.
pub fn random_unit_octonion<S: Scalar>(seed: u64) -> Octonion<S> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_unit_octonion_with(&mut rng)
}

/// As [`random_unit_octonion`], threading an existing generator.
pub fn random_unit_octonion_with<S: Scalar, R: Rng>(rng: &mut R) -> Octonion<S> {
    let mut coeffs: [S; 8] = std::array::from_fn(|_| S::zero());
    for c in coeffs.iter_mut().skip(1) {
        *c = S::from_ratio(rng.gen_range(-3..=3), rng.gen_range(1..=4));
    }
    let q = Octonion::new(coeffs);
    unit_from_imaginary(&q).expect("imaginary by construction")
}

/// Materializes the matrix of a linear map column-by-column; column `i`
/// is the image of the basis element `e_i`.  Debug aid for orthogonality
/// checks.
pub fn matrix_of<S: Scalar>(map: impl Fn(&Octonion<S>) -> Octonion<S>) -> [[S; 8]; 8] {
    std::array::from_fn(|j| {
        let image = map(&Octonion::basis(j));
        std::array::from_fn(|i| image.coeff(i).clone())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Oct = Octonion<BigRational>;
    type Word = SpinWord<BigRational>;

    fn rand_octonion<R: Rng>(rng: &mut R) -> Oct {
        Octonion::new(std::array::from_fn(|_| {
            BigRational::from_ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3))
        }))
    }

    #[test]
    fn empty_word_is_identity_triple() {
        let word = Word::identity();
        let x = &Oct::from_real(BigRational::from_int(1)) + &Oct::basis(3);
        assert_eq!(word.rotate(&x), x);
        assert_eq!(word.companion_left(&x), x);
        assert_eq!(word.companion_right(&x), x);
    }

    #[test]
    fn single_factor_on_one() {
        let word = Word::new(vec![Oct::basis(1)]).unwrap();
        let one = Oct::one();
        // e1·1·e1 = -1, matching e1·e1 on the companion side.
        assert_eq!(word.rotate(&one), -&one);
        assert_eq!(
            word.companion_left(&one) * word.companion_right(&one),
            -&one
        );
    }

    #[test]
    fn companion_relation_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for len in 0..=4 {
            let factors: Vec<Oct> = (0..len)
                .map(|_| random_unit_octonion_with(&mut rng))
                .collect();
            let triple = TrialityTriple::new(Word::new(factors).unwrap());
            for _ in 0..20 {
                let x = rand_octonion(&mut rng);
                let y = rand_octonion(&mut rng);
                assert_eq!(
                    triple.rotate(&(&x * &y)),
                    triple.companion_left(&x) * triple.companion_right(&y)
                );
            }
        }
    }

    #[test]
    fn maps_are_exact_isometries() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let factors: Vec<Oct> = (0..3)
            .map(|_| random_unit_octonion_with(&mut rng))
            .collect();
        let word = Word::new(factors).unwrap();
        for _ in 0..10 {
            let x = rand_octonion(&mut rng);
            assert_eq!(word.rotate(&x).norm_sq(), x.norm_sq());
            assert_eq!(word.companion_left(&x).norm_sq(), x.norm_sq());
            assert_eq!(word.companion_right(&x).norm_sq(), x.norm_sq());
        }
    }

    #[test]
    fn non_unit_factor_rejected() {
        let two_e1 = Oct::basis(1).scale(&BigRational::from_int(2));
        assert!(matches!(
            Word::new(vec![two_e1]),
            Err(Error::NonUnitFactor(_))
        ));
    }

    #[test]
    fn normalize_single_basis_factor() {
        let word = Word::new(vec![Oct::basis(1)]).unwrap();
        let normalized = word.normalize_unital();
        assert_eq!(normalized.factors(), &[-&Oct::basis(1), Oct::basis(1)]);
        assert_eq!(normalized.companion_right(&Oct::one()), Oct::one());
        assert!(normalized.is_unital());
    }

    #[test]
    fn normalize_is_stable_and_prunes_ones() {
        let word = Word::new(vec![Oct::basis(1)]).unwrap().normalize_unital();
        // Re-normalizing prepends a factor 1 which is dropped again.
        assert_eq!(word.normalize_unital(), word);
        assert_eq!(Word::identity().normalize_unital(), Word::identity());
    }

    #[test]
    fn normalized_rotation_equals_left_companion() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let factors: Vec<Oct> = (0..3)
            .map(|_| random_unit_octonion_with(&mut rng))
            .collect();
        let word = Word::new(factors).unwrap().normalize_unital();
        for _ in 0..10 {
            let x = rand_octonion(&mut rng);
            assert_eq!(word.rotate(&x), word.companion_left(&x));
        }
    }

    #[test]
    fn normalized_right_companion_preserves_inverses_and_squares() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let factors: Vec<Oct> = (0..2)
            .map(|_| random_unit_octonion_with(&mut rng))
            .collect();
        let word = Word::new(factors).unwrap().normalize_unital();
        for _ in 0..10 {
            let x = rand_octonion(&mut rng);
            if x.is_zero() {
                continue;
            }
            assert_eq!(
                word.companion_right(&x.inverse().unwrap()),
                word.companion_right(&x).inverse().unwrap()
            );
            assert_eq!(
                word.companion_right(&(&x * &x)),
                &word.companion_right(&x) * &word.companion_right(&x)
            );
        }
    }

    #[test]
    fn cayley_parametrization_cases() {
        let zero = Oct::zero();
        assert_eq!(unit_from_imaginary(&zero).unwrap(), Oct::one());
        assert_eq!(
            unit_from_imaginary(&Oct::basis(1)).unwrap(),
            -&Oct::basis(1)
        );
        let not_imaginary = Oct::one();
        assert!(matches!(
            unit_from_imaginary(&not_imaginary),
            Err(Error::NotImaginary(_))
        ));
    }

    #[test]
    fn random_units_have_exact_norm_one() {
        for seed in 0..20 {
            let u: Oct = random_unit_octonion(seed);
            assert_eq!(u.norm_sq(), BigRational::from_int(1));
        }
    }

    #[test]
    fn word_text_round_trip() {
        let word: Word = "e1; 3/5 + 4/5 e2".parse().unwrap();
        assert_eq!(word.len(), 2);
        assert_eq!(word.to_string().parse::<Word>().unwrap(), word);
        assert!("2 e1".parse::<Word>().is_err());
    }

    #[test]
    fn rotation_matrix_is_orthogonal_in_floats() {
        let word: SpinWord<f64> = SpinWord::new(vec![
            Octonion::new(std::array::from_fn(|i| {
                [0.6, 0.0, 0.8, 0.0, 0.0, 0.0, 0.0, 0.0][i]
            })),
            Octonion::basis(5),
        ])
        .unwrap();
        let m = matrix_of(|x| word.rotate(x));
        for a in 0..8 {
            for b in 0..8 {
                let dot: f64 = (0..8).map(|i| m[a][i] * m[b][i]).sum();
                let expected = if a == b { 1.0 } else { 0.0 };
                assert!(dot.scalar_eq(&expected), "columns {a},{b}: {dot}");
            }
        }
    }
}
