//! Upper-triangular coordinates on the isometry group of the ball:
//! the dilation family A, the two-step nilpotent family N with centre
//! Z(N), the stabilizer family M of the boundary point `(1, 0)`, and the
//! change of coordinates between ball points and AN-parameters.
//!
//! Every action here is written with the exact bracketing of its
//! defining formula.  Where two-generator associativity would allow a
//! shorter equivalent expression, the shortcut is deliberately not
//! taken in this module; simplified routes exist only as independent
//! oracles in [`crate::verify`].
//!
//! The dilation family is parametrized by `λ = e^t` rather than `t`, so
//! that `cosh t`, `sinh t`, `e^t`, `e^{2t}` are rational in `λ` and the
//! whole A-calculus stays exact on the rational backend.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::algebra::{AlgebraLevel, CdElement, Octonion, Scalar};
use crate::error::{Error, Result};
use crate::geometry::{HPoint, SpherePoint};
use crate::text::split_top_level;
use crate::triality::SpinWord;

/// Dilation `a_t` with `λ = e^t > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct AElement<S: Scalar> {
    lambda: S,
}

impl<S: Scalar> AElement<S> {
    pub fn new(lambda: S) -> Result<Self> {
        // `partial_cmp` keeps float NaN on the rejecting branch.
        if lambda.partial_cmp(&S::zero()) != Some(Ordering::Greater) {
            return Err(Error::NonPositiveScale(lambda.to_string()));
        }
        Ok(AElement { lambda })
    }

    pub fn identity() -> Self {
        AElement { lambda: S::one() }
    }

    pub fn lambda(&self) -> &S {
        &self.lambda
    }

    /// `cosh t = (λ + λ⁻¹)/2`.
    pub fn cosh(&self) -> S {
        let inv = self.lambda.invert().expect("positive scale");
        (self.lambda.clone() + inv) * S::from_ratio(1, 2)
    }

    /// `sinh t = (λ − λ⁻¹)/2`.
    pub fn sinh(&self) -> S {
        let inv = self.lambda.invert().expect("positive scale");
        (self.lambda.clone() - inv) * S::from_ratio(1, 2)
    }

    pub fn inverse(&self) -> Self {
        AElement {
            lambda: self.lambda.invert().expect("positive scale"),
        }
    }
}

impl<S: Scalar> Mul for &AElement<S> {
    type Output = AElement<S>;
    fn mul(self, rhs: &AElement<S>) -> AElement<S> {
        AElement {
            lambda: self.lambda.clone() * rhs.lambda.clone(),
        }
    }
}

/// Nilpotent element `u(y, z)` with `y` purely imaginary.
#[derive(Clone, Debug, PartialEq)]
pub struct NElement<S: Scalar> {
    y: Octonion<S>,
    z: Octonion<S>,
}

impl<S: Scalar> NElement<S> {
    pub fn new(y: Octonion<S>, z: Octonion<S>) -> Result<Self> {
        if !y.is_imaginary() {
            return Err(Error::NotImaginary(y.to_string()));
        }
        Ok(NElement { y, z })
    }

    pub fn identity() -> Self {
        NElement {
            y: Octonion::zero(),
            z: Octonion::zero(),
        }
    }

    /// Central element `u(y, 0)`.
    pub fn central(y: Octonion<S>) -> Result<Self> {
        NElement::new(y, Octonion::zero())
    }

    pub fn y(&self) -> &Octonion<S> {
        &self.y
    }

    pub fn z(&self) -> &Octonion<S> {
        &self.z
    }

    pub fn is_central(&self) -> bool {
        self.z.is_zero()
    }

    /// `u(−y, −z)`; the composition correction `Im(z̄·(−z))` vanishes
    /// because `z̄ z = N(z)` is real.
    pub fn inverse(&self) -> Self {
        NElement {
            y: -&self.y,
            z: -&self.z,
        }
    }
}

/// Composition law `u(y1, z1) u(y2, z2) = u(y1 + y2 + Im(z̄1 z2), z1 + z2)`.
pub fn n_compose<S: Scalar>(n1: &NElement<S>, n2: &NElement<S>) -> NElement<S> {
    let correction = (&n1.z.conj() * &n2.z).imaginary();
    NElement {
        y: &(&n1.y + &n2.y) + &correction,
        z: &n1.z + &n2.z,
    }
}

impl<S: Scalar> Mul for &NElement<S> {
    type Output = NElement<S>;
    fn mul(self, rhs: &NElement<S>) -> NElement<S> {
        n_compose(self, rhs)
    }
}

/// Conjugation `a u(y, z) a⁻¹ = u(λ² y, λ z)`.
pub fn a_conj_n<S: Scalar>(a: &AElement<S>, n: &NElement<S>) -> NElement<S> {
    let lambda_sq = a.lambda.clone() * a.lambda.clone();
    NElement {
        y: n.y.scale(&lambda_sq),
        z: n.z.scale(&a.lambda),
    }
}

/// Stabilizer element of `(1, 0)`: a word normalized so its right
/// companion fixes 1.
#[derive(Clone, Debug, PartialEq)]
pub struct MElement<S: Scalar> {
    word: SpinWord<S>,
}

impl<S: Scalar> MElement<S> {
    /// Requires an already-normalized word.
    pub fn new(word: SpinWord<S>) -> Result<Self> {
        if !word.is_unital() {
            return Err(Error::UnnormalizedWord(word.to_string()));
        }
        Ok(MElement { word })
    }

    /// Normalizes the word first, so any unit word yields an element.
    pub fn normalizing(word: &SpinWord<S>) -> Self {
        MElement {
            word: word.normalize_unital(),
        }
    }

    pub fn identity() -> Self {
        MElement {
            word: SpinWord::identity(),
        }
    }

    pub fn word(&self) -> &SpinWord<S> {
        &self.word
    }
}

/// AN-coordinates of a ball point: `p = a_{t0} u(y0, z0) (0, 0)` with
/// `λ0 = e^{t0}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ANCoordinates<S: Scalar> {
    lambda0: S,
    y0: Octonion<S>,
    z0: Octonion<S>,
    r_sq: S,
}

impl<S: Scalar> ANCoordinates<S> {
    pub fn lambda0(&self) -> &S {
        &self.lambda0
    }

    pub fn y0(&self) -> &Octonion<S> {
        &self.y0
    }

    pub fn z0(&self) -> &Octonion<S> {
        &self.z0
    }

    /// `r² = 1 − N(x1) − N(x2)` of the source point.
    pub fn r_sq(&self) -> &S {
        &self.r_sq
    }

    pub fn a_element(&self) -> AElement<S> {
        AElement::new(self.lambda0.clone()).expect("positive scale by construction")
    }

    pub fn n_element(&self) -> NElement<S> {
        NElement::new(self.y0.clone(), self.z0.clone()).expect("imaginary by construction")
    }

    /// Evaluates `a_{t0} u(y0, z0)` at the origin, recovering the point.
    pub fn reconstruct(&self) -> HPoint<S> {
        orbit_origin(&self.a_element(), &self.n_element())
    }
}

/// Dilation action on an arbitrary affine point,
/// `(x1, x2) -> ((cosh·x1 + sinh)(sinh·x1 + cosh)⁻¹, x2(sinh·x1 + cosh)⁻¹)`.
/// Fails where the denominator vanishes (never inside the ball).
pub fn a_act_raw<S: Scalar>(
    a: &AElement<S>,
    x1: &Octonion<S>,
    x2: &Octonion<S>,
) -> Result<(Octonion<S>, Octonion<S>)> {
    let cosh = Octonion::from_real(a.cosh());
    let sinh = Octonion::from_real(a.sinh());
    let den = &(&sinh * x1) + &cosh;
    let den_inv = den
        .inverse()
        .map_err(|_| Error::VanishingDenominator(den.to_string()))?;
    let x1_new = &(&(&cosh * x1) + &sinh) * &den_inv;
    let x2_new = x2 * &den_inv;
    Ok((x1_new, x2_new))
}

/// Dilation action on the ball.
pub fn a_act<S: Scalar>(a: &AElement<S>, p: &HPoint<S>) -> HPoint<S> {
    let (x1, x2) = a_act_raw(a, p.x1(), p.x2()).expect("denominator nonzero on the ball");
    HPoint::from_parts_unchecked(x1, x2)
}

/// Shared pieces of the nilpotent action at a point: `w = 1 − x̄1`,
/// `s = N(z)/2`, and the bracketed middle term
/// `q = (z̄ (x2 w)) w⁻¹`.
struct NActPieces<S: Scalar> {
    w: Octonion<S>,
    sy: Octonion<S>,
    q: Octonion<S>,
}

fn n_act_pieces<S: Scalar>(
    n: &NElement<S>,
    x1: &Octonion<S>,
    x2: &Octonion<S>,
) -> Result<NActPieces<S>> {
    let w = &Octonion::one() - &x1.conj();
    let w_inv = w.inverse().map_err(|_| Error::DegenerateBoundaryPoint)?;
    let s = n.z.norm_sq() * S::from_ratio(1, 2);
    let sy = &Octonion::from_real(s) + &n.y;
    let q = &(&n.z.conj() * &(x2 * &w)) * &w_inv;
    Ok(NActPieces { w, sy, q })
}

/// Nilpotent action on an arbitrary affine point with the exact
/// bracketing
/// `x1' = [((1 − s − y)x1 + q + s + y) w] D⁻¹`,
/// `x2' = [(−z x1 + x2 + z) w] D⁻¹`,
/// `D = [−(s + y)x1 + q + 1 + s + y] w`,
/// where `s = N(z)/2`, `w = 1 − x̄1`, `q = (z̄(x2 w))w⁻¹`.  Fails on
/// `x1 = 1` and where `D` is not invertible (never inside the ball).
pub fn n_act_raw<S: Scalar>(
    n: &NElement<S>,
    x1: &Octonion<S>,
    x2: &Octonion<S>,
) -> Result<(Octonion<S>, Octonion<S>)> {
    let one = Octonion::one();
    let NActPieces { w, sy, q } = n_act_pieces(n, x1, x2)?;
    let d_bracket = &(&(&-(&(&sy * x1)) + &q) + &one) + &sy;
    let d = &d_bracket * &w;
    let d_inv = d
        .inverse()
        .map_err(|_| Error::VanishingDenominator(d.to_string()))?;
    let a1 = &(&(&(&one - &sy) * x1) + &q) + &sy;
    let x1_new = &(&a1 * &w) * &d_inv;
    let a2 = &(&-(&(&n.z * x1)) + x2) + &n.z;
    let x2_new = &(&a2 * &w) * &d_inv;
    Ok((x1_new, x2_new))
}

/// Nilpotent action on the ball.
pub fn n_act<S: Scalar>(n: &NElement<S>, p: &HPoint<S>) -> HPoint<S> {
    let (x1, x2) = n_act_raw(n, p.x1(), p.x2()).expect("denominator nonzero on the ball");
    HPoint::from_parts_unchecked(x1, x2)
}

/// Central action on an arbitrary affine point with the exact bracketing
/// `x1' = ((1 − y)x1 + y)(−y x1 + 1 + y)⁻¹`,
/// `x2' = (x2(1 − x̄1))[(1 − x̄1)⁻¹(−y x1 + 1 + y)⁻¹]`.
pub fn z_act_raw<S: Scalar>(
    y: &Octonion<S>,
    x1: &Octonion<S>,
    x2: &Octonion<S>,
) -> Result<(Octonion<S>, Octonion<S>)> {
    assert!(y.is_imaginary(), "central parameter must be imaginary");
    let one = Octonion::one();
    let d = &(&-(&(y * x1)) + &one) + y;
    let d_inv = d
        .inverse()
        .map_err(|_| Error::VanishingDenominator(d.to_string()))?;
    let x1_new = &(&(&(&one - y) * x1) + y) * &d_inv;
    let w = &one - &x1.conj();
    let w_inv = w.inverse().map_err(|_| Error::DegenerateBoundaryPoint)?;
    let x2_new = &(x2 * &w) * &(&w_inv * &d_inv);
    Ok((x1_new, x2_new))
}

/// Central action on the ball; agrees exactly with
/// `n_act(u(y, 0), p)`.
pub fn z_act<S: Scalar>(y: &Octonion<S>, p: &HPoint<S>) -> HPoint<S> {
    let (x1, x2) = z_act_raw(y, p.x1(), p.x2()).expect("denominator nonzero on the ball");
    HPoint::from_parts_unchecked(x1, x2)
}

/// `a_t u(y, z) (0, 0)` with `λ = e^t`:
/// `x1 = (sinh + E)(cosh + E)⁻¹`, `x2 = z(cosh + E)⁻¹`,
/// `E = λ(N(z)/2 + y)`.
pub fn orbit_origin<S: Scalar>(a: &AElement<S>, n: &NElement<S>) -> HPoint<S> {
    let s = n.z.norm_sq() * S::from_ratio(1, 2);
    let e = (&Octonion::from_real(s) + &n.y).scale(&a.lambda);
    let cosh_e = &Octonion::from_real(a.cosh()) + &e;
    let cosh_e_inv = cosh_e.inverse().expect("real part is at least cosh t");
    let x1 = &(&Octonion::from_real(a.sinh()) + &e) * &cosh_e_inv;
    let x2 = &n.z * &cosh_e_inv;
    HPoint::from_parts_unchecked(x1, x2)
}

/// AN-coordinates of a ball point:
/// `λ0² = r²/N(1 − x1)` (root taken per backend),
/// `y0 = (x1 − x̄1)/(2r²)` exactly, and
/// `z0 = (x2(1 − x̄1))·μ⁻¹` with `μ = λ0·N(1 − x1) = |1 − x1|·r`.
/// On the rational backend this fails with a square-root error whenever
/// `λ0²` is not a rational square.
pub fn an_coords<S: Scalar>(p: &HPoint<S>) -> Result<ANCoordinates<S>> {
    let x1 = p.x1();
    let x2 = p.x2();
    let w = &Octonion::one() - &x1.conj();
    let nw = w.norm_sq();
    let r_sq = S::one() - p.norm_total();
    let lambda0 = (r_sq.clone() * nw.invert().expect("x1 is not 1 on the ball")).sqrt()?;
    let half_inv_r_sq = (r_sq.clone() + r_sq.clone())
        .invert()
        .expect("r > 0 on the ball");
    let y0 = (x1 - &x1.conj()).scale(&half_inv_r_sq);
    let mu = lambda0.clone() * nw;
    let z0 = (x2 * &w).scale(&mu.invert().expect("positive by construction"));
    Ok(ANCoordinates {
        lambda0,
        y0,
        z0,
        r_sq,
    })
}

/// Stabilizer action `(x1, x2) -> (R''(x1), R(x2))` on the ball.
pub fn m_act<S: Scalar>(m: &MElement<S>, p: &HPoint<S>) -> HPoint<S> {
    HPoint::from_parts_unchecked(m.word.companion_right(p.x1()), m.word.rotate(p.x2()))
}

/// Stabilizer action on the sphere; fixes `(1, 0)`.
pub fn m_act_sphere<S: Scalar>(m: &MElement<S>, p: &SpherePoint<S>) -> SpherePoint<S> {
    SpherePoint::from_parts_unchecked(m.word.companion_right(p.x1()), m.word.rotate(p.x2()))
}

/// Nilpotent action in the associative quaternion case, where the
/// bracketing collapses:
/// `x1' = ((1 − s − y)x1 + z̄ x2 + s + y) · den⁻¹`,
/// `x2' = (−z x1 + x2 + z) · den⁻¹`,
/// `den = −(s + y)x1 + z̄ x2 + 1 + s + y`, `s = N(z)/2`.
/// All inputs must live at quaternion level or below; the point must be
/// in the ball.  Agrees exactly with [`n_act`] on the embedded images.
pub fn quaternion_n_act<S: Scalar>(
    y: &CdElement<S>,
    z: &CdElement<S>,
    x1: &CdElement<S>,
    x2: &CdElement<S>,
) -> Result<(CdElement<S>, CdElement<S>)> {
    for value in [y, z, x1, x2] {
        if value.level() > AlgebraLevel::Quaternion {
            return Err(Error::NotQuaternionic);
        }
    }
    if !y.is_imaginary() {
        return Err(Error::NotImaginary(y.to_string()));
    }
    let total = x1.norm_sq() + x2.norm_sq();
    // `partial_cmp` keeps float NaN on the rejecting branch.
    if total.partial_cmp(&S::one()) != Some(Ordering::Less) {
        return Err(Error::NotInBall(x1.to_string(), x2.to_string()));
    }
    let level = AlgebraLevel::Quaternion;
    let one = CdElement::one(level);
    let s = z.norm_sq() * S::from_ratio(1, 2);
    let sy = CdElement::from_real(level, s) + y;
    let zbar_x2 = &z.conj() * x2;
    let den = -(&sy * x1) + &zbar_x2 + &one + &sy;
    let den_inv = den
        .inverse()
        .map_err(|_| Error::VanishingDenominator(den.to_string()))?;
    let x1_new = ((&one - &sy) * x1 + &zbar_x2 + &sy) * &den_inv;
    let x2_new = (-(z * x1) + x2 + z) * &den_inv;
    Ok((x1_new, x2_new))
}

/// Pushes a point toward the attracting boundary point `(1, 0)` by the
/// dilation with `λ = e^{t_max}`; returns the moved point and its
/// Euclidean distance to `(1, 0)`.  Float backend only: `e^{t_max}` has
/// no exact rational value.
pub fn attracting_limit(p: &HPoint<f64>, t_max: f64) -> (HPoint<f64>, f64) {
    let a = AElement::new(t_max.exp()).expect("exp is positive");
    let moved = a_act(&a, p);
    let dx = moved.x1() - &Octonion::one();
    let distance = (dx.norm_sq() + moved.x2().norm_sq()).sqrt();
    (moved, distance)
}

/// One generator of the upper-triangular families, as parsed from the
/// command line: `a(λ)`, `u(y; z)`, `z(y)`, `m(word)`.  The `z` variant
/// routes through the central-action formulas rather than the general
/// nilpotent ones, so both code paths are reachable from text input.
#[derive(Clone, Debug, PartialEq)]
pub enum GroupElement<S: Scalar> {
    Dilation(AElement<S>),
    Nilpotent(NElement<S>),
    Central(Octonion<S>),
    Stabilizer(MElement<S>),
}

impl<S: Scalar> GroupElement<S> {
    pub fn act(&self, p: &HPoint<S>) -> HPoint<S> {
        match self {
            GroupElement::Dilation(a) => a_act(a, p),
            GroupElement::Nilpotent(n) => n_act(n, p),
            GroupElement::Central(y) => z_act(y, p),
            GroupElement::Stabilizer(m) => m_act(m, p),
        }
    }

    /// Parses a `*`-separated product; the rightmost factor acts first.
    pub fn parse_product(text: &str) -> Result<Vec<GroupElement<S>>> {
        let factors: Vec<&str> = split_top_level(text, '*')
            .into_iter()
            .map(str::trim)
            .filter(|chunk| !chunk.is_empty())
            .collect();
        if factors.is_empty() {
            return Err(Error::Parse(format!("no group element in `{text}`")));
        }
        factors.into_iter().map(str::parse).collect()
    }

    /// Applies a product to a point, rightmost factor first.
    pub fn apply_product(product: &[GroupElement<S>], p: &HPoint<S>) -> HPoint<S> {
        product
            .iter()
            .rev()
            .fold(p.clone(), |point, g| g.act(&point))
    }
}

impl<S: Scalar> fmt::Display for GroupElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Dilation(a) => {
                write!(f, "a({})", crate::algebra::display_scalar(a.lambda()))
            }
            GroupElement::Nilpotent(n) => write!(f, "u({}; {})", n.y(), n.z()),
            GroupElement::Central(y) => write!(f, "z({y})"),
            GroupElement::Stabilizer(m) => write!(f, "m({})", m.word()),
        }
    }
}

impl<S: Scalar> FromStr for GroupElement<S> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let (head, rest) = text
            .split_once('(')
            .ok_or_else(|| Error::Parse(format!("expected `kind(...)`, got `{text}`")))?;
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("missing closing `)` in `{text}`")))?
            .trim();
        match head.trim() {
            "a" => Ok(GroupElement::Dilation(AElement::new(S::parse(inner)?)?)),
            "u" => {
                let parts = split_top_level(inner, ';');
                if parts.len() != 2 {
                    return Err(Error::Parse(format!(
                        "expected `u(y; z)` with two octonions, got `{text}`"
                    )));
                }
                let n = NElement::new(parts[0].trim().parse()?, parts[1].trim().parse()?)?;
                Ok(GroupElement::Nilpotent(n))
            }
            "z" => {
                let y: Octonion<S> = inner.parse()?;
                if !y.is_imaginary() {
                    return Err(Error::NotImaginary(y.to_string()));
                }
                Ok(GroupElement::Central(y))
            }
            "m" => {
                let word: SpinWord<S> = inner.parse()?;
                Ok(GroupElement::Stabilizer(MElement::normalizing(&word)))
            }
            other => Err(Error::Parse(format!(
                "unknown group element kind `{other}`"
            ))),
        }
    }
}
