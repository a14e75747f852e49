//! Exact coefficient fields and their formal derivations.
//!
//! Four kinds of field are supported: prime fields `F_p`, the rationals,
//! and the rational function fields `F_p(t)` and `Q(t)`. The first two
//! admit only the null derivation; the function fields carry the single
//! derivation basis element `t` with `d_t(t) = 1`.

mod parse;
pub mod poly;
pub mod scalar;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
pub use poly::{Poly, RatFn};
pub use scalar::{BaseScalar, Fp};

/// Which field is in play.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
    /// `F_p(t)`
    PrimeFunction(u64),
    /// `Q(t)`
    RationalFunction,
}

impl FieldSpec {
    /// The prime subfield: `F_p` for `F_p` and `F_p(t)`, `Q` otherwise.
    pub fn constants(&self) -> FieldSpec {
        match *self {
            FieldSpec::Prime(p) | FieldSpec::PrimeFunction(p) => FieldSpec::Prime(p),
            FieldSpec::Rationals | FieldSpec::RationalFunction => FieldSpec::Rationals,
        }
    }

    pub fn prime(p: u64) -> Result<Self> {
        if scalar::is_prime(p) && p < (1 << 32) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::UnsupportedField(format!("{p} is not a supported prime")))
        }
    }

    pub fn prime_function(p: u64) -> Result<Self> {
        Self::prime(p).map(|_| FieldSpec::PrimeFunction(p))
    }

    /// Characteristic (0 for the rationals and `Q(t)`).
    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldSpec::Prime(p) | FieldSpec::PrimeFunction(p) => p,
            _ => 0,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    /// Size of the derivation basis.
    pub fn derivation_rank(&self) -> usize {
        match self {
            FieldSpec::PrimeFunction(_) | FieldSpec::RationalFunction => 1,
            _ => 0,
        }
    }

    pub fn zero(&self) -> FieldElem {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, k: i64) -> FieldElem {
        match *self {
            FieldSpec::Prime(p) => FieldElem::Fp(Fp::new(k, p)),
            FieldSpec::Rationals => FieldElem::Q(BigRational::from_integer(k.into())),
            FieldSpec::PrimeFunction(p) => FieldElem::FpT(RatFn::constant(Fp::new(k, p))),
            FieldSpec::RationalFunction => {
                FieldElem::QT(RatFn::constant(BigRational::from_integer(k.into())))
            }
        }
    }

    pub fn from_bigint(&self, k: &BigInt) -> FieldElem {
        match *self {
            FieldSpec::Prime(p) => FieldElem::Fp(Fp::from_bigint(k, p)),
            FieldSpec::Rationals => FieldElem::Q(BigRational::from_integer(k.clone())),
            FieldSpec::PrimeFunction(p) => FieldElem::FpT(RatFn::constant(Fp::from_bigint(k, p))),
            FieldSpec::RationalFunction => {
                FieldElem::QT(RatFn::constant(BigRational::from_integer(k.clone())))
            }
        }
    }

    /// The transcendental generator `t`, if this is a function field.
    pub fn variable(&self) -> Option<FieldElem> {
        match *self {
            FieldSpec::PrimeFunction(p) => Some(FieldElem::FpT(RatFn::variable(&Fp::new(1, p)))),
            FieldSpec::RationalFunction => {
                Some(FieldElem::QT(RatFn::variable(&BigRational::one())))
            }
            _ => None,
        }
    }

    /// The fixed derivation basis: empty, or `{t}`.
    pub fn derivation_basis(&self) -> DerivationBasis {
        DerivationBasis {
            field: *self,
            elements: self.variable().into_iter().collect(),
        }
    }

    /// Parses an element in the canonical string grammar (or any
    /// arithmetic expression in integers and `t`).
    pub fn parse_elem(&self, s: &str) -> Result<FieldElem> {
        parse::parse_elem(*self, s)
    }

    /// Draws a random element: polynomials of degree at most
    /// `degree_bound` with uniform coefficients, divided by a nonzero
    /// random polynomial of the same bound.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, degree_bound: usize) -> FieldElem {
        const Q_COEF: i64 = 3;
        match *self {
            FieldSpec::Prime(p) => FieldElem::Fp(Fp::new(rng.random_range(0..p) as i64, p)),
            FieldSpec::Rationals => {
                let num = rng.random_range(-Q_COEF * 2..=Q_COEF * 2);
                let den = rng.random_range(1..=Q_COEF);
                FieldElem::Q(BigRational::new(num.into(), den.into()))
            }
            FieldSpec::PrimeFunction(p) => {
                let draw = |rng: &mut R| {
                    Poly::from_coeffs(
                        (0..=degree_bound)
                            .map(|_| Fp::new(rng.random_range(0..p) as i64, p))
                            .collect(),
                    )
                };
                let num = draw(rng);
                let den = loop {
                    let d = draw(rng);
                    if !d.is_zero() {
                        break d;
                    }
                };
                FieldElem::FpT(RatFn::new(num, den))
            }
            FieldSpec::RationalFunction => {
                let draw = |rng: &mut R| {
                    Poly::from_coeffs(
                        (0..=degree_bound)
                            .map(|_| {
                                BigRational::from_integer(rng.random_range(-Q_COEF..=Q_COEF).into())
                            })
                            .collect(),
                    )
                };
                let num = draw(rng);
                let den = loop {
                    let d = draw(rng);
                    if !d.is_zero() {
                        break d;
                    }
                };
                FieldElem::QT(RatFn::new(num, den))
            }
        }
    }

    /// Like [`FieldSpec::sample`] but without the denominator over the
    /// function fields: a polynomial of degree at most `degree_bound`
    /// with uniform (integer, over `Q(t)`) coefficients.
    pub fn sample_polynomial<R: Rng + ?Sized>(&self, rng: &mut R, degree_bound: usize) -> FieldElem {
        const Q_COEF: i64 = 3;
        match *self {
            FieldSpec::PrimeFunction(p) => {
                let coeffs = (0..=degree_bound)
                    .map(|_| Fp::new(rng.random_range(0..p) as i64, p))
                    .collect();
                FieldElem::FpT(RatFn::new(Poly::from_coeffs(coeffs), Poly::constant(Fp::new(1, p))))
            }
            FieldSpec::RationalFunction => {
                let coeffs = (0..=degree_bound)
                    .map(|_| BigRational::from_integer(rng.random_range(-Q_COEF..=Q_COEF).into()))
                    .collect();
                FieldElem::QT(RatFn::new(Poly::from_coeffs(coeffs), Poly::constant(BigRational::one())))
            }
            _ => self.sample(rng, degree_bound),
        }
    }

    pub fn sample_nonzero<R: Rng + ?Sized>(&self, rng: &mut R, degree_bound: usize) -> FieldElem {
        loop {
            let x = self.sample(rng, degree_bound);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// All elements of a prime field, in residue order.
    pub fn elements(&self) -> Result<Vec<FieldElem>> {
        match *self {
            FieldSpec::Prime(p) => Ok((0..p as i64).map(|k| self.from_i64(k)).collect()),
            _ => Err(Error::UnsupportedField(format!("{self} is not finite"))),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::PrimeFunction(p) => write!(f, "fp(t):{p}"),
            FieldSpec::RationalFunction => write!(f, "q(t)"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_p = |rest: &str| {
            rest.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad prime in field spec {s:?}")))
        };
        if s == "q" {
            Ok(FieldSpec::Rationals)
        } else if s == "q(t)" {
            Ok(FieldSpec::RationalFunction)
        } else if let Some(rest) = s.strip_prefix("fp(t):") {
            FieldSpec::prime_function(parse_p(rest)?)
        } else if let Some(rest) = s.strip_prefix("fp:") {
            FieldSpec::prime(parse_p(rest)?)
        } else {
            Err(Error::Parse(format!(
                "unknown field spec {s:?} (expected fp:<p>, q, fp(t):<p> or q(t))"
            )))
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The ordered derivation basis `Omega` of a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationBasis {
    pub field: FieldSpec,
    pub elements: Vec<FieldElem>,
}

impl DerivationBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// An element of one of the supported fields, always in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Fp(Fp),
    Q(BigRational),
    FpT(RatFn<Fp>),
    QT(RatFn<BigRational>),
}

fn mismatch(a: &FieldElem, b: &FieldElem) -> Error {
    Error::FieldMismatch(a.field().to_string(), b.field().to_string())
}

impl FieldElem {
    pub fn field(&self) -> FieldSpec {
        match self {
            FieldElem::Fp(x) => FieldSpec::Prime(x.modulus()),
            FieldElem::Q(_) => FieldSpec::Rationals,
            FieldElem::FpT(x) => FieldSpec::PrimeFunction(x.context().modulus()),
            FieldElem::QT(_) => FieldSpec::RationalFunction,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Fp(x) => x.value() == 0,
            FieldElem::Q(x) => BaseScalar::is_zero(x),
            FieldElem::FpT(x) => x.is_zero(),
            FieldElem::QT(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Fp(x) => x.value() == 1,
            FieldElem::Q(x) => BaseScalar::is_one(x),
            FieldElem::FpT(x) => x.num().is_one() && x.den().is_one(),
            FieldElem::QT(x) => x.num().is_one() && x.den().is_one(),
        }
    }

    pub fn zero_like(&self) -> FieldElem {
        self.field().zero()
    }

    pub fn one_like(&self) -> FieldElem {
        self.field().one()
    }

    pub fn checked_add(&self, other: &FieldElem) -> Result<FieldElem> {
        Ok(match (self, other) {
            (FieldElem::Fp(a), FieldElem::Fp(b)) if a.modulus() == b.modulus() => {
                FieldElem::Fp(a.add(b))
            }
            (FieldElem::Q(a), FieldElem::Q(b)) => FieldElem::Q(a + b),
            (FieldElem::FpT(a), FieldElem::FpT(b))
                if a.context().modulus() == b.context().modulus() =>
            {
                FieldElem::FpT(a.add(b))
            }
            (FieldElem::QT(a), FieldElem::QT(b)) => FieldElem::QT(a.add(b)),
            _ => return Err(mismatch(self, other)),
        })
    }

    pub fn checked_sub(&self, other: &FieldElem) -> Result<FieldElem> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &FieldElem) -> Result<FieldElem> {
        Ok(match (self, other) {
            (FieldElem::Fp(a), FieldElem::Fp(b)) if a.modulus() == b.modulus() => {
                FieldElem::Fp(a.mul(b))
            }
            (FieldElem::Q(a), FieldElem::Q(b)) => FieldElem::Q(a * b),
            (FieldElem::FpT(a), FieldElem::FpT(b))
                if a.context().modulus() == b.context().modulus() =>
            {
                FieldElem::FpT(a.mul(b))
            }
            (FieldElem::QT(a), FieldElem::QT(b)) => FieldElem::QT(a.mul(b)),
            _ => return Err(mismatch(self, other)),
        })
    }

    pub fn checked_div(&self, other: &FieldElem) -> Result<FieldElem> {
        if self.field() != other.field() {
            return Err(mismatch(self, other));
        }
        self.checked_mul(&other.inv()?)
    }

    pub fn neg_ref(&self) -> FieldElem {
        match self {
            FieldElem::Fp(a) => FieldElem::Fp(a.neg()),
            FieldElem::Q(a) => FieldElem::Q(-a),
            FieldElem::FpT(a) => FieldElem::FpT(a.neg()),
            FieldElem::QT(a) => FieldElem::QT(a.neg()),
        }
    }

    pub fn inv(&self) -> Result<FieldElem> {
        let r = match self {
            FieldElem::Fp(a) => a.inv().map(FieldElem::Fp),
            FieldElem::Q(a) => BaseScalar::inv(a).map(FieldElem::Q),
            FieldElem::FpT(a) => a.inv().map(FieldElem::FpT),
            FieldElem::QT(a) => a.inv().map(FieldElem::QT),
        };
        r.ok_or(Error::DivisionByZero)
    }

    pub fn pow(&self, e: u32) -> FieldElem {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `d_omega(self)` for the `omega`-th element of the derivation basis.
    pub fn derive(&self, omega: usize) -> Result<FieldElem> {
        let len = self.field().derivation_rank();
        if omega >= len {
            return Err(Error::IndexOutOfRange { index: omega, len });
        }
        Ok(match self {
            FieldElem::FpT(a) => FieldElem::FpT(a.derivative()),
            FieldElem::QT(a) => FieldElem::QT(a.derivative()),
            _ => unreachable!("fields without derivations have rank 0"),
        })
    }

    /// Indices `omega` with `d_omega(self) != 0`.
    pub fn derivation_support(&self) -> Vec<usize> {
        (0..self.field().derivation_rank())
            .filter(|&w| !self.derive(w).expect("index in range").is_zero())
            .collect()
    }

    /// Representation size used to prefer small pivots.
    pub fn size_hint(&self) -> usize {
        match self {
            FieldElem::Fp(_) => 1,
            FieldElem::Q(a) => a.size_hint(),
            FieldElem::FpT(a) => a.size_hint(),
            FieldElem::QT(a) => a.size_hint(),
        }
    }

    /// True for elements of the prime subfield embedded in a function
    /// field, and for every element of `F_p` or `Q`.
    /// Substitutes `t = c` for `c` in the prime subfield; `None` at a
    /// pole or when `c` is not a constant of the right field. Elements of
    /// prime fields are returned unchanged.
    pub fn specialize(&self, c: &FieldElem) -> Option<FieldElem> {
        match (self, c) {
            (FieldElem::FpT(x), FieldElem::Fp(c)) if c.modulus() == x.context().modulus() => {
                x.eval(c).map(FieldElem::Fp)
            }
            (FieldElem::QT(x), FieldElem::Q(c)) => x.eval(c).map(FieldElem::Q),
            (FieldElem::Fp(_) | FieldElem::Q(_), _) => Some(self.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        match self {
            FieldElem::FpT(a) => a.num().degree().unwrap_or(0) == 0 && a.den().is_one(),
            FieldElem::QT(a) => a.num().degree().unwrap_or(0) == 0 && a.den().is_one(),
            _ => true,
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Fp(a) => write!(f, "{a}"),
            FieldElem::Q(a) => {
                if a.is_integer() {
                    write!(f, "{}", a.numer())
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())
                }
            }
            FieldElem::FpT(a) => write!(f, "{a}"),
            FieldElem::QT(a) => write!(f, "{a}"),
        }
    }
}

impl Serialize for FieldElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            /// Panics if the operands come from different fields.
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        self.neg_ref()
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        self.neg_ref()
    }
}

/// A derivation `d = sum_omega c_omega d_omega` of a supported field.
///
/// Over `F_p` and `Q` the coefficient list is empty and `d` is the null
/// derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    field: FieldSpec,
    coeffs: Vec<FieldElem>,
}

impl Derivation {
    pub fn null(field: FieldSpec) -> Self {
        Derivation {
            field,
            coeffs: vec![field.zero(); field.derivation_rank()],
        }
    }

    /// The basis derivation `d_omega`.
    pub fn basis(field: FieldSpec, omega: usize) -> Result<Self> {
        let len = field.derivation_rank();
        if len == 0 {
            return Err(Error::NoDerivations(field.to_string()));
        }
        if omega >= len {
            return Err(Error::IndexOutOfRange { index: omega, len });
        }
        let mut coeffs = vec![field.zero(); len];
        coeffs[omega] = field.one();
        Ok(Derivation { field, coeffs })
    }

    pub fn from_coeffs(field: FieldSpec, coeffs: Vec<FieldElem>) -> Result<Self> {
        if coeffs.len() != field.derivation_rank() {
            return Err(Error::DimensionMismatch(format!(
                "{} derivation coefficients for a basis of size {}",
                coeffs.len(),
                field.derivation_rank()
            )));
        }
        Ok(Derivation { field, coeffs })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn is_null(&self) -> bool {
        self.coeffs.iter().all(FieldElem::is_zero)
    }

    pub fn apply(&self, x: &FieldElem) -> FieldElem {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(self.field.zero(), |acc, (w, c)| {
                acc + c * &x.derive(w).expect("index in range")
            })
    }

    pub fn add(&self, other: &Derivation) -> Derivation {
        Derivation {
            field: self.field,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, k: &FieldElem) -> Derivation {
        Derivation {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }
}

/// Rescales a vector over a function field so every entry is a
/// polynomial; vectors over other fields are returned unchanged.
pub fn clear_denominators(v: &[FieldElem]) -> Vec<FieldElem> {
    let fpt: Option<Vec<RatFn<Fp>>> = v
        .iter()
        .map(|x| match x {
            FieldElem::FpT(r) => Some(r.clone()),
            _ => None,
        })
        .collect();
    if let Some(xs) = fpt {
        return RatFn::clear_denominators(&xs).into_iter().map(FieldElem::FpT).collect();
    }
    let qt: Option<Vec<RatFn<BigRational>>> = v
        .iter()
        .map(|x| match x {
            FieldElem::QT(r) => Some(r.clone()),
            _ => None,
        })
        .collect();
    if let Some(xs) = qt {
        return RatFn::clear_denominators(&xs).into_iter().map(FieldElem::QT).collect();
    }
    v.to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn trivial_examples() {
        let f5 = FieldSpec::Prime(5);
        assert_eq!(f5.from_i64(3) + f5.from_i64(4), f5.from_i64(2));

        let q = FieldSpec::Rationals;
        let half = q.parse_elem("1/2").unwrap();
        let two_thirds = q.parse_elem("2/3").unwrap();
        assert_eq!(half * two_thirds, q.parse_elem("1/3").unwrap());

        let f5t = FieldSpec::PrimeFunction(5);
        let x = f5t.parse_elem("(t^2-1)/(t-1)").unwrap();
        assert_eq!(x, f5t.parse_elem("t+1").unwrap());
    }

    #[test]
    fn derivation_examples() {
        let qt = FieldSpec::RationalFunction;
        let t = qt.variable().unwrap();
        assert_eq!(t.pow(2).derive(0).unwrap(), qt.from_i64(2) * &t);
        assert!(qt.from_i64(7).derive(0).unwrap().is_zero());

        let f5t = FieldSpec::PrimeFunction(5);
        let t5 = f5t.variable().unwrap();
        assert!(t5.pow(5).derive(0).unwrap().is_zero());
        assert!(t5.derive(1).is_err());
    }

    #[test]
    fn support_examples() {
        let qt = FieldSpec::RationalFunction;
        assert!(qt.from_i64(7).derivation_support().is_empty());
        let f5t = FieldSpec::PrimeFunction(5);
        let t = f5t.variable().unwrap();
        assert_eq!((&t + &f5t.one()).derivation_support(), vec![0]);
        assert!(t.pow(5).derivation_support().is_empty());
        assert!(FieldSpec::Rationals.one().derivation_support().is_empty());
    }

    #[test]
    fn errors() {
        let f5 = FieldSpec::Prime(5);
        assert_eq!(f5.zero().inv(), Err(Error::DivisionByZero));
        let f7 = FieldSpec::Prime(7);
        assert!(matches!(
            f5.one().checked_add(&f7.one()),
            Err(Error::FieldMismatch(..))
        ));
        assert!(matches!(
            FieldSpec::Rationals.one().derive(0),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!("fp:6".parse::<FieldSpec>().is_err());
        assert!("zz".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn field_string_round_trip() {
        for s in ["fp:5", "q", "fp(t):5", "q(t)", "fp:2"] {
            assert_eq!(s.parse::<FieldSpec>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn display_round_trip_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for field in [
            FieldSpec::Prime(7),
            FieldSpec::Rationals,
            FieldSpec::PrimeFunction(5),
            FieldSpec::RationalFunction,
        ] {
            for _ in 0..200 {
                let x = field.sample(&mut rng, 2);
                let s = x.to_string();
                assert_eq!(field.parse_elem(&s).unwrap(), x, "{s}");
            }
        }
    }

    #[test]
    fn canonical_strings() {
        let qt = FieldSpec::RationalFunction;
        let x = qt.parse_elem("(t^2+1)/t").unwrap();
        assert_eq!(x.to_string(), "(t^2+1)/(t)");
        let y = qt.parse_elem("t/2 - 3").unwrap();
        assert_eq!(y.to_string(), "(1/2)t-3");
        assert_eq!(FieldSpec::Rationals.parse_elem("-6/4").unwrap().to_string(), "-3/2");
    }

    #[test]
    fn derivation_linearity() {
        let f5t = FieldSpec::PrimeFunction(5);
        let t = f5t.variable().unwrap();
        let d = Derivation::basis(f5t, 0).unwrap();
        let two_d = d.scale(&f5t.from_i64(2));
        let x = t.pow(3);
        assert_eq!(two_d.apply(&x), f5t.from_i64(6) * t.pow(2));
        assert!(Derivation::null(f5t).apply(&x).is_zero());
        assert!(matches!(
            Derivation::basis(FieldSpec::Rationals, 0),
            Err(Error::NoDerivations(_))
        ));
    }
}
