//! The projective plane over the octonions in affine coordinates, its
//! hyperbolic polarity, and the open unit ball the polarity carves out.
//!
//! Points are the disjoint union of the affine plane, a copy of the
//! algebra at infinity, and one extra point: `(x, y)`, `(u)`, `(inf)`.
//! Lines mirror this: `[u, v]` is `{(x, y) : y = u x + v}` together with
//! the infinite point `(u)`; `[a]` is the vertical `{(a, y)}` together
//! with `(inf)`; `[inf]` collects everything at infinity.
//!
//! The slope through two affine points is `u = (y1 - y2)(x1 - x2)^{-1}`,
//! with the factors in exactly that order: the line equation puts `u` to
//! the left of `x`, and over a non-commutative algebra the reversed
//! product is a different octonion that misses the second point.
//!
//! The polarity maps `(x, y) -> [-conj(x y^{-1}), conj(y^{-1})]` with the
//! degenerate cases `(x, 0) -> [conj(x^{-1})]` and `(0, 0) -> [inf]`; its
//! values on infinite points are forced by requiring incidence symmetry
//! (`a` on the polar of `b` iff `b` on the polar of `a`).  Self-conjugate
//! points form the unit sphere `N(x1) + N(x2) = 1`, whose open inside is
//! the ball model [`HPoint`] of the hyperbolic plane.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Octonion, Scalar};
use crate::error::{Error, Result};
use crate::text::split_top_level;
use crate::triality::SpinWord;

/// A point of the projective plane.
#[derive(Clone, Debug, PartialEq)]
pub enum ProjPoint<S: Scalar> {
    /// Affine point `(x, y)`.
    Finite(Octonion<S>, Octonion<S>),
    /// Direction point `(u)` shared by all lines of slope `u`.
    AtInfinity(Octonion<S>),
    /// The common point `(inf)` of all vertical lines.
    InfinityPoint,
}

/// A line of the projective plane.
#[derive(Clone, Debug, PartialEq)]
pub enum ProjLine<S: Scalar> {
    /// `[u, v] = {(x, y) : y = u x + v} ∪ {(u)}`.
    Oblique(Octonion<S>, Octonion<S>),
    /// `[a] = {(a, y)} ∪ {(inf)}`.
    Vertical(Octonion<S>),
    /// `[inf]`, carrying every `(u)` and `(inf)`.
    LineAtInfinity,
}

impl<S: Scalar> ProjPoint<S> {
    pub fn approx_eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ProjPoint::Finite(a, b), ProjPoint::Finite(c, d)) => a.approx_eq(c) && b.approx_eq(d),
            (ProjPoint::AtInfinity(a), ProjPoint::AtInfinity(b)) => a.approx_eq(b),
            (ProjPoint::InfinityPoint, ProjPoint::InfinityPoint) => true,
            _ => false,
        }
    }
}

impl<S: Scalar> ProjLine<S> {
    pub fn approx_eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ProjLine::Oblique(a, b), ProjLine::Oblique(c, d)) => a.approx_eq(c) && b.approx_eq(d),
            (ProjLine::Vertical(a), ProjLine::Vertical(b)) => a.approx_eq(b),
            (ProjLine::LineAtInfinity, ProjLine::LineAtInfinity) => true,
            _ => false,
        }
    }
}

/// Whether the point lies on the line.
pub fn incident<S: Scalar>(p: &ProjPoint<S>, l: &ProjLine<S>) -> bool {
    match (p, l) {
        (ProjPoint::Finite(x, y), ProjLine::Oblique(u, v)) => y.approx_eq(&(&(u * x) + v)),
        (ProjPoint::Finite(x, _), ProjLine::Vertical(a)) => x.approx_eq(a),
        (ProjPoint::Finite(..), ProjLine::LineAtInfinity) => false,
        (ProjPoint::AtInfinity(w), ProjLine::Oblique(u, _)) => w.approx_eq(u),
        (ProjPoint::AtInfinity(_), ProjLine::Vertical(_)) => false,
        (ProjPoint::AtInfinity(_), ProjLine::LineAtInfinity) => true,
        (ProjPoint::InfinityPoint, ProjLine::Oblique(..)) => false,
        (ProjPoint::InfinityPoint, ProjLine::Vertical(_)) => true,
        (ProjPoint::InfinityPoint, ProjLine::LineAtInfinity) => true,
    }
}

/// The unique line through two distinct points.
pub fn join<S: Scalar>(p: &ProjPoint<S>, q: &ProjPoint<S>) -> Result<ProjLine<S>> {
    if p == q {
        return Err(Error::EqualPoints);
    }
    Ok(match (p, q) {
        (ProjPoint::Finite(x1, y1), ProjPoint::Finite(x2, y2)) => {
            if x1 == x2 {
                ProjLine::Vertical(x1.clone())
            } else {
                let u = &(y1 - y2) * &(x1 - x2).inverse()?;
                let v = y1 - &(&u * x1);
                ProjLine::Oblique(u, v)
            }
        }
        (ProjPoint::Finite(x, y), ProjPoint::AtInfinity(u))
        | (ProjPoint::AtInfinity(u), ProjPoint::Finite(x, y)) => {
            ProjLine::Oblique(u.clone(), y - &(u * x))
        }
        (ProjPoint::Finite(x, _), ProjPoint::InfinityPoint)
        | (ProjPoint::InfinityPoint, ProjPoint::Finite(x, _)) => ProjLine::Vertical(x.clone()),
        (ProjPoint::AtInfinity(_), ProjPoint::AtInfinity(_))
        | (ProjPoint::AtInfinity(_), ProjPoint::InfinityPoint)
        | (ProjPoint::InfinityPoint, ProjPoint::AtInfinity(_)) => ProjLine::LineAtInfinity,
        (ProjPoint::InfinityPoint, ProjPoint::InfinityPoint) => unreachable!("equal points"),
    })
}

/// The unique common point of two distinct lines.
pub fn meet<S: Scalar>(l: &ProjLine<S>, m: &ProjLine<S>) -> Result<ProjPoint<S>> {
    if l == m {
        return Err(Error::EqualLines);
    }
    Ok(match (l, m) {
        (ProjLine::Oblique(u, v), ProjLine::Oblique(u2, v2)) => {
            if u == u2 {
                ProjPoint::AtInfinity(u.clone())
            } else {
                let x = &(u - u2).inverse()? * &(v2 - v);
                let y = &(u * &x) + v;
                ProjPoint::Finite(x, y)
            }
        }
        (ProjLine::Oblique(u, v), ProjLine::Vertical(a))
        | (ProjLine::Vertical(a), ProjLine::Oblique(u, v)) => {
            ProjPoint::Finite(a.clone(), &(u * a) + v)
        }
        (ProjLine::Oblique(u, _), ProjLine::LineAtInfinity)
        | (ProjLine::LineAtInfinity, ProjLine::Oblique(u, _)) => ProjPoint::AtInfinity(u.clone()),
        (ProjLine::Vertical(_), ProjLine::Vertical(_))
        | (ProjLine::Vertical(_), ProjLine::LineAtInfinity)
        | (ProjLine::LineAtInfinity, ProjLine::Vertical(_)) => ProjPoint::InfinityPoint,
        (ProjLine::LineAtInfinity, ProjLine::LineAtInfinity) => unreachable!("equal lines"),
    })
}

/// The polar line of a point.
pub fn polarity_point<S: Scalar>(p: &ProjPoint<S>) -> ProjLine<S> {
    match p {
        ProjPoint::Finite(x, y) => {
            if y.is_zero() {
                if x.is_zero() {
                    ProjLine::LineAtInfinity
                } else {
                    let x_inv = x.inverse().expect("nonzero octonion");
                    ProjLine::Vertical(x_inv.conj())
                }
            } else {
                let y_inv = y.inverse().expect("nonzero octonion");
                ProjLine::Oblique(-(x * &y_inv).conj(), y_inv.conj())
            }
        }
        ProjPoint::AtInfinity(w) => {
            if w.is_zero() {
                ProjLine::Vertical(Octonion::zero())
            } else {
                let w_conj_inv = w.conj().inverse().expect("nonzero octonion");
                ProjLine::Oblique(-w_conj_inv, Octonion::zero())
            }
        }
        ProjPoint::InfinityPoint => ProjLine::Oblique(Octonion::zero(), Octonion::zero()),
    }
}

/// The pole of a line; inverse of [`polarity_point`].
pub fn polarity_line<S: Scalar>(l: &ProjLine<S>) -> ProjPoint<S> {
    match l {
        ProjLine::LineAtInfinity => ProjPoint::Finite(Octonion::zero(), Octonion::zero()),
        ProjLine::Vertical(a) => {
            if a.is_zero() {
                ProjPoint::AtInfinity(Octonion::zero())
            } else {
                let a_inv = a.inverse().expect("nonzero octonion");
                ProjPoint::Finite(a_inv.conj(), Octonion::zero())
            }
        }
        ProjLine::Oblique(u, v) => {
            if v.is_zero() {
                if u.is_zero() {
                    ProjPoint::InfinityPoint
                } else {
                    let u_inv = u.inverse().expect("nonzero octonion");
                    ProjPoint::AtInfinity(-u_inv.conj())
                }
            } else {
                let y = v.inverse().expect("nonzero octonion").conj();
                let x = -&(&u.conj() * &y);
                ProjPoint::Finite(x, y)
            }
        }
    }
}

/// Strict ball membership `N(x1) + N(x2) < 1`.
pub fn in_ball<S: Scalar>(x1: &Octonion<S>, x2: &Octonion<S>) -> bool {
    x1.norm_sq() + x2.norm_sq() < S::one()
}

/// Sphere membership `N(x1) + N(x2) = 1` (exact on the rational backend).
pub fn on_sphere<S: Scalar>(x1: &Octonion<S>, x2: &Octonion<S>) -> bool {
    (x1.norm_sq() + x2.norm_sq()).scalar_eq(&S::one())
}

/// Isometric plane automorphism `(x, y) -> (R''(x), R(y))` attached to a
/// word: right companion on the first coordinate, rotation on the second.
/// Fixes `(0)` directions' structure at infinity and preserves
/// `N(x) + N(y)`, hence ball and sphere membership.
pub fn k_fixing_infinities_act<S: Scalar>(
    word: &SpinWord<S>,
    x: &Octonion<S>,
    y: &Octonion<S>,
) -> (Octonion<S>, Octonion<S>) {
    (word.companion_right(x), word.rotate(y))
}

/// A point of the open unit ball `N(x1) + N(x2) < 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct HPoint<S: Scalar> {
    x1: Octonion<S>,
    x2: Octonion<S>,
}

impl<S: Scalar> HPoint<S> {
    pub fn new(x1: Octonion<S>, x2: Octonion<S>) -> Result<Self> {
        if !in_ball(&x1, &x2) {
            return Err(Error::NotInBall(x1.to_string(), x2.to_string()));
        }
        Ok(HPoint { x1, x2 })
    }

    pub fn origin() -> Self {
        HPoint {
            x1: Octonion::zero(),
            x2: Octonion::zero(),
        }
    }

    /// For maps that preserve the ball by construction; skips the
    /// membership check so float rounding near the boundary cannot
    /// spuriously reject an exact isometry's output.
    pub(crate) fn from_parts_unchecked(x1: Octonion<S>, x2: Octonion<S>) -> Self {
        HPoint { x1, x2 }
    }

    pub fn x1(&self) -> &Octonion<S> {
        &self.x1
    }

    pub fn x2(&self) -> &Octonion<S> {
        &self.x2
    }

    pub fn into_parts(self) -> (Octonion<S>, Octonion<S>) {
        (self.x1, self.x2)
    }

    /// `N(x1) + N(x2)`, strictly below 1.
    pub fn norm_total(&self) -> S {
        self.x1.norm_sq() + self.x2.norm_sq()
    }

    pub fn to_projective(&self) -> ProjPoint<S> {
        ProjPoint::Finite(self.x1.clone(), self.x2.clone())
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.x1.approx_eq(&other.x1) && self.x2.approx_eq(&other.x2)
    }
}

/// A point of the unit sphere `N(x1) + N(x2) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpherePoint<S: Scalar> {
    x1: Octonion<S>,
    x2: Octonion<S>,
}

impl<S: Scalar> SpherePoint<S> {
    pub fn new(x1: Octonion<S>, x2: Octonion<S>) -> Result<Self> {
        if !on_sphere(&x1, &x2) {
            return Err(Error::NotOnSphere(x1.to_string(), x2.to_string()));
        }
        Ok(SpherePoint { x1, x2 })
    }

    /// The distinguished boundary point `(1, 0)`.
    pub fn basepoint() -> Self {
        SpherePoint {
            x1: Octonion::one(),
            x2: Octonion::zero(),
        }
    }

    /// For norm-preserving maps; see [`HPoint::from_parts_unchecked`].
    pub(crate) fn from_parts_unchecked(x1: Octonion<S>, x2: Octonion<S>) -> Self {
        SpherePoint { x1, x2 }
    }

    pub fn x1(&self) -> &Octonion<S> {
        &self.x1
    }

    pub fn x2(&self) -> &Octonion<S> {
        &self.x2
    }

    pub fn into_parts(self) -> (Octonion<S>, Octonion<S>) {
        (self.x1, self.x2)
    }

    pub fn to_projective(&self) -> ProjPoint<S> {
        ProjPoint::Finite(self.x1.clone(), self.x2.clone())
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.x1.approx_eq(&other.x1) && self.x2.approx_eq(&other.x2)
    }
}

impl<S: Scalar> fmt::Display for ProjPoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(x, y) => write!(f, "({x}, {y})"),
            ProjPoint::AtInfinity(u) => write!(f, "({u})"),
            ProjPoint::InfinityPoint => write!(f, "(inf)"),
        }
    }
}

impl<S: Scalar> fmt::Display for ProjLine<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjLine::Oblique(u, v) => write!(f, "[{u}, {v}]"),
            ProjLine::Vertical(a) => write!(f, "[{a}]"),
            ProjLine::LineAtInfinity => write!(f, "[inf]"),
        }
    }
}

impl<S: Scalar> fmt::Display for HPoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x1, self.x2)
    }
}

impl<S: Scalar> fmt::Display for SpherePoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x1, self.x2)
    }
}

/// Strips one pair of enclosing delimiters, returning the trimmed inside.
fn strip_delimiters(s: &str, open: char, close: char) -> Result<&str> {
    s.trim()
        .strip_prefix(open)
        .and_then(|rest| rest.strip_suffix(close))
        .map(str::trim)
        .ok_or_else(|| Error::Parse(format!("expected `{open}...{close}` around `{s}`")))
}

/// Splits `inner` into two octonion literals at a top-level comma.  The
/// compact 8-component form also contains commas, so every split position
/// is tried; the literal is accepted only if all successful splits agree.
fn parse_octonion_pair<S: Scalar>(inner: &str) -> Result<(Octonion<S>, Octonion<S>)> {
    let chunks = split_top_level(inner, ',');
    let mut candidates: Vec<(Octonion<S>, Octonion<S>)> = Vec::new();
    for split in 1..chunks.len() {
        let x_text = chunks[..split].join(",");
        let y_text = chunks[split..].join(",");
        if let (Ok(x), Ok(y)) = (x_text.parse(), y_text.parse()) {
            let candidate = (x, y);
            if !candidates.contains(&candidate) {
                candidates.push(candidate);
            }
        }
    }
    match candidates.len() {
        1 => Ok(candidates.pop().expect("length checked")),
        0 => Err(Error::Parse(format!(
            "cannot read `{inner}` as two octonion literals"
        ))),
        _ => Err(Error::Parse(format!("ambiguous pair literal `{inner}`"))),
    }
}

impl<S: Scalar> FromStr for ProjPoint<S> {
    type Err = Error;

    /// Accepts `(x, y)`, `(u)`, `(inf)`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = strip_delimiters(s, '(', ')')?;
        if inner == "inf" {
            return Ok(ProjPoint::InfinityPoint);
        }
        if let Ok(u) = inner.parse() {
            return Ok(ProjPoint::AtInfinity(u));
        }
        let (x, y) = parse_octonion_pair(inner)?;
        Ok(ProjPoint::Finite(x, y))
    }
}

impl<S: Scalar> FromStr for ProjLine<S> {
    type Err = Error;

    /// Accepts `[u, v]`, `[a]`, `[inf]`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = strip_delimiters(s, '[', ']')?;
        if inner == "inf" {
            return Ok(ProjLine::LineAtInfinity);
        }
        if let Ok(a) = inner.parse() {
            return Ok(ProjLine::Vertical(a));
        }
        let (u, v) = parse_octonion_pair(inner)?;
        Ok(ProjLine::Oblique(u, v))
    }
}

impl<S: Scalar> FromStr for HPoint<S> {
    type Err = Error;

    /// Accepts a finite point literal `(x1, x2)` inside the unit ball.
    fn from_str(s: &str) -> Result<Self> {
        match s.parse()? {
            ProjPoint::Finite(x1, x2) => HPoint::new(x1, x2),
            other => Err(Error::Parse(format!(
                "`{other}` is not a finite point literal"
            ))),
        }
    }
}

impl<S: Scalar> FromStr for SpherePoint<S> {
    type Err = Error;

    /// Accepts a finite point literal `(x1, x2)` on the unit sphere.
    fn from_str(s: &str) -> Result<Self> {
        match s.parse()? {
            ProjPoint::Finite(x1, x2) => SpherePoint::new(x1, x2),
            other => Err(Error::Parse(format!(
                "`{other}` is not a finite point literal"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type Oct = Octonion<BigRational>;
    type Point = ProjPoint<BigRational>;
    type Line = ProjLine<BigRational>;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::from_ratio(n, d)
    }

    fn real(n: i64, d: i64) -> Oct {
        Oct::from_real(rat(n, d))
    }

    fn rand_octonion<R: Rng>(rng: &mut R) -> Oct {
        Octonion::new(std::array::from_fn(|_| {
            rat(rng.gen_range(-3..=3), rng.gen_range(1..=3))
        }))
    }

    #[test]
    fn incidence_cases() {
        let origin = Point::Finite(Oct::zero(), Oct::zero());
        for u in [Oct::zero(), Oct::basis(3), real(2, 1)] {
            assert!(incident(&origin, &Line::Oblique(u, Oct::zero())));
        }
        let u = &Oct::basis(1) + &real(1, 2);
        assert!(incident(
            &Point::AtInfinity(u.clone()),
            &Line::Oblique(u.clone(), Oct::basis(5))
        ));
        assert!(!incident(&Point::AtInfinity(u.clone()), &Line::Vertical(u)));
        assert!(incident(&Point::InfinityPoint, &Line::Vertical(real(7, 1))));
        assert!(incident(&Point::InfinityPoint, &Line::LineAtInfinity));
    }

    #[test]
    fn join_cases() {
        let a = Point::Finite(Oct::zero(), Oct::zero());
        let b = Point::Finite(Oct::one(), Oct::zero());
        assert_eq!(
            join(&a, &b).unwrap(),
            Line::Oblique(Oct::zero(), Oct::zero())
        );
        let c = Point::Finite(Oct::one(), Oct::one());
        assert_eq!(join(&b, &c).unwrap(), Line::Vertical(Oct::one()));
        assert_eq!(
            join(&Point::AtInfinity(Oct::zero()), &Point::InfinityPoint).unwrap(),
            Line::LineAtInfinity
        );
        assert!(matches!(join(&a, &a), Err(Error::EqualPoints)));
    }

    #[test]
    fn join_slope_order_is_left_of_x() {
        // Through (e1, e2) and (0, 0): slope e2·e1⁻¹ = e6, offset 0.
        let p = Point::Finite(Oct::basis(1), Oct::basis(2));
        let q = Point::Finite(Oct::zero(), Oct::zero());
        let line = join(&p, &q).unwrap();
        assert_eq!(line, Line::Oblique(Oct::basis(6), Oct::zero()));
        assert!(incident(&p, &line) && incident(&q, &line));
        // The reversed product misses the first point.
        let wrong = Line::Oblique(-&Oct::basis(6), Oct::zero());
        assert!(!incident(&p, &wrong));
    }

    #[test]
    fn meet_cases() {
        let l = Line::Oblique(Oct::zero(), Oct::zero());
        let m = Line::Oblique(Oct::one(), Oct::zero());
        assert_eq!(
            meet(&l, &m).unwrap(),
            Point::Finite(Oct::zero(), Oct::zero())
        );
        let o = Line::Oblique(Oct::basis(2), Oct::basis(4));
        assert_eq!(
            meet(&o, &Line::LineAtInfinity).unwrap(),
            Point::AtInfinity(Oct::basis(2))
        );
        assert_eq!(
            meet(&Line::Vertical(real(1, 1)), &Line::Vertical(real(2, 1))).unwrap(),
            Point::InfinityPoint
        );
        assert!(matches!(meet(&l, &l), Err(Error::EqualLines)));
    }

    #[test]
    fn join_meet_duality_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..50 {
            let p = Point::Finite(rand_octonion(&mut rng), rand_octonion(&mut rng));
            let q = Point::Finite(rand_octonion(&mut rng), rand_octonion(&mut rng));
            if p == q {
                continue;
            }
            let line = join(&p, &q).unwrap();
            assert!(incident(&p, &line), "{p} not on join with {q}");
            assert!(incident(&q, &line), "{q} not on join with {p}");
            // A second line through p recovers p as the meet.
            let other = join(&p, &Point::InfinityPoint).unwrap();
            if other != line {
                assert_eq!(meet(&line, &other).unwrap(), p);
            }
        }
    }

    #[test]
    fn polarity_base_cases() {
        assert_eq!(
            polarity_point(&Point::Finite(Oct::zero(), Oct::zero())),
            Line::LineAtInfinity
        );
        assert_eq!(
            polarity_point(&Point::Finite(real(1, 2), Oct::zero())),
            Line::Vertical(real(2, 1))
        );
        assert_eq!(
            polarity_point(&Point::Finite(Oct::zero(), real(1, 2))),
            Line::Oblique(Oct::zero(), real(2, 1))
        );
    }

    #[test]
    fn polarity_line_inverts_base_cases() {
        assert_eq!(
            polarity_line(&Line::LineAtInfinity),
            Point::Finite(Oct::zero(), Oct::zero())
        );
        assert_eq!(
            polarity_line(&Line::Vertical(real(2, 1))),
            Point::Finite(real(1, 2), Oct::zero())
        );
    }

    #[test]
    fn polarity_round_trip_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let mut points = vec![
            Point::InfinityPoint,
            Point::AtInfinity(Oct::zero()),
            Point::AtInfinity(Oct::basis(3)),
            Point::Finite(Oct::zero(), Oct::zero()),
            Point::Finite(Oct::basis(1), Oct::zero()),
        ];
        for _ in 0..30 {
            points.push(Point::Finite(
                rand_octonion(&mut rng),
                rand_octonion(&mut rng),
            ));
        }
        for p in &points {
            assert_eq!(&polarity_line(&polarity_point(p)), p, "round trip of {p}");
            let l = polarity_point(p);
            assert_eq!(polarity_point(&polarity_line(&l)), l);
        }
    }

    #[test]
    fn polarity_preserves_incidence_symmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        let mut points = vec![
            Point::InfinityPoint,
            Point::AtInfinity(Oct::zero()),
            Point::AtInfinity(rand_octonion(&mut rng)),
            Point::Finite(Oct::zero(), Oct::zero()),
        ];
        for _ in 0..20 {
            points.push(Point::Finite(
                rand_octonion(&mut rng),
                rand_octonion(&mut rng),
            ));
        }
        for a in &points {
            for b in &points {
                assert_eq!(
                    incident(a, &polarity_point(b)),
                    incident(b, &polarity_point(a)),
                    "incidence symmetry for {a}, {b}"
                );
            }
        }
    }

    #[test]
    fn self_conjugate_iff_on_sphere() {
        let on = Point::Finite(real(3, 5), Oct::basis(2).scale(&rat(4, 5)));
        assert!(incident(&on, &polarity_point(&on)));
        let boundary = Point::Finite(Oct::one(), Oct::zero());
        assert!(incident(&boundary, &polarity_point(&boundary)));
        let inside = Point::Finite(real(1, 2), Oct::zero());
        assert!(!incident(&inside, &polarity_point(&inside)));
        let outside = Point::Finite(real(2, 1), Oct::basis(5));
        assert!(!incident(&outside, &polarity_point(&outside)));
    }

    #[test]
    fn ball_and_sphere_membership() {
        assert!(in_ball(&Oct::zero(), &Oct::zero()));
        assert!(on_sphere(&Oct::one(), &Oct::zero()));
        assert!(!in_ball(&Oct::one(), &Oct::zero()));
        // N(3/5 + e1/5) = 9/25 + 1/25 = 10/25.
        let x1 = &real(3, 5) + &Oct::basis(1).scale(&rat(1, 5));
        assert!(in_ball(&x1, &Oct::zero()));
    }

    #[test]
    fn ball_and_sphere_constructors_validate() {
        assert!(HPoint::new(real(1, 2), Oct::zero()).is_ok());
        assert!(matches!(
            HPoint::new(Oct::one(), Oct::zero()),
            Err(Error::NotInBall(..))
        ));
        assert!(SpherePoint::new(real(3, 5), Oct::basis(2).scale(&rat(4, 5))).is_ok());
        assert!(matches!(
            SpherePoint::new(real(1, 2), Oct::zero()),
            Err(Error::NotOnSphere(..))
        ));
    }

    #[test]
    fn isometric_automorphism_preserves_norms_and_polarity() {
        use crate::triality::random_unit_octonion_with;
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let factors = (0..3)
            .map(|_| random_unit_octonion_with(&mut rng))
            .collect();
        let word = SpinWord::new(factors).unwrap();
        // Identity word and linearity cases.
        let (x0, y0) = k_fixing_infinities_act(&SpinWord::identity(), &Oct::basis(1), &Oct::one());
        assert_eq!((x0, y0), (Oct::basis(1), Oct::one()));
        let (zx, zy) = k_fixing_infinities_act(&word, &Oct::zero(), &Oct::zero());
        assert!(zx.is_zero() && zy.is_zero());
        for _ in 0..20 {
            let x = rand_octonion(&mut rng);
            let y = rand_octonion(&mut rng);
            let (kx, ky) = k_fixing_infinities_act(&word, &x, &y);
            assert_eq!(&kx.norm_sq() + &ky.norm_sq(), &x.norm_sq() + &y.norm_sq());
            // Polarity equivariance in membership form.
            let p = Point::Finite(x.clone(), y.clone());
            let q = Point::Finite(rand_octonion(&mut rng), rand_octonion(&mut rng));
            let (qx, qy) = match &q {
                Point::Finite(a, b) => k_fixing_infinities_act(&word, a, b),
                _ => unreachable!(),
            };
            let kp = Point::Finite(kx.clone(), ky.clone());
            let kq = Point::Finite(qx, qy);
            assert_eq!(
                incident(&q, &polarity_point(&p)),
                incident(&kq, &polarity_point(&kp))
            );
        }
    }

    #[test]
    fn point_text_round_trip() {
        let cases = [
            Point::Finite(&real(1, 2) + &Oct::basis(3), -&Oct::basis(7)),
            Point::Finite(Oct::zero(), Oct::zero()),
            Point::AtInfinity(Oct::basis(2)),
            Point::InfinityPoint,
        ];
        for p in cases {
            assert_eq!(p.to_string().parse::<Point>().unwrap(), p, "{p}");
        }
        let compact: Point = "(0,1,0,0,0,0,0,0)".parse().unwrap();
        assert_eq!(compact, Point::AtInfinity(Oct::basis(1)));
    }

    #[test]
    fn line_text_round_trip() {
        let cases = [
            Line::Oblique(Oct::basis(1), &real(1, 3) + &Oct::basis(4)),
            Line::Vertical(real(-2, 1)),
            Line::LineAtInfinity,
        ];
        for l in cases {
            assert_eq!(l.to_string().parse::<Line>().unwrap(), l, "{l}");
        }
    }

    #[test]
    fn pair_literal_ambiguity_is_rejected() {
        // One sum-form chunk plus eight compact chunks parses both ways.
        let text = "(1, 1,0,0,0,0,0,0,1)";
        assert!(matches!(
            text.parse::<Point>(),
            Err(Error::Parse(message)) if message.contains("ambiguous")
        ));
        // The same shape is fine when both readings agree.
        let agreeing: Point = "(1, 0,0,0,0,0,0,0,0)".parse().unwrap();
        assert_eq!(agreeing, Point::Finite(Oct::one(), Oct::zero()));
    }

    #[test]
    fn ball_point_parsing() {
        let p: HPoint<BigRational> = "(1/2, 1/5 e2)".parse().unwrap();
        assert_eq!(p.x1(), &real(1, 2));
        assert!("(1, 0)".parse::<HPoint<BigRational>>().is_err());
        let s: SpherePoint<BigRational> = "(3/5, 4/5 e2)".parse().unwrap();
        assert!(on_sphere(s.x1(), s.x2()));
    }
}
