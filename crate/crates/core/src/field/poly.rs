//! Univariate polynomials and reduced rational functions over a
//! [`BaseScalar`] coefficient field.

use std::fmt;

use super::scalar::BaseScalar;

/// Dense polynomial, coefficients stored from the constant term upwards
/// with no trailing zeros (the zero polynomial is empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: BaseScalar> Poly<C> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![c.zero_like(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o = o.add(s);
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dlead_inv = divisor
            .leading()
            .expect("polynomial division by zero")
            .inv()
            .expect("nonzero leading coefficient");
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return (Self::zero(), self.clone());
        }
        let zero = dlead_inv.zero_like();
        let mut quot = vec![zero; rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let c = rem[k + ddeg].mul(&dlead_inv);
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].sub(&c.mul(d));
            }
            quot[k] = c;
        }
        rem.truncate(ddeg);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Scales so the leading coefficient is one. The zero polynomial is
    /// returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if let Some(g) = C::poly_gcd(&self.coeffs, &other.coeffs) {
            return Self::from_coeffs(g);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Value at `x`, by Horner's rule.
    pub fn eval(&self, x: &C) -> C {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul(&c.int_like(k as i64)))
                .collect(),
        )
    }

    pub fn size_hint(&self) -> usize {
        self.coeffs.iter().map(|c| c.size_hint()).sum::<usize>() + self.coeffs.len()
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl<C: BaseScalar> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let coef = c.fmt_coefficient();
            match (k, coef) {
                (0, None) => write!(f, "1")?,
                (0, Some(s)) => write!(f, "{s}")?,
                (1, None) => write!(f, "t")?,
                (1, Some(s)) => write!(f, "{s}t")?,
                (_, None) => write!(f, "t^{k}")?,
                (_, Some(s)) => write!(f, "{s}t^{k}")?,
            }
        }
        Ok(())
    }
}

/// A rational function `num / den` in lowest terms with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn<C> {
    num: Poly<C>,
    den: Poly<C>,
}

impl<C: BaseScalar> RatFn<C> {
    /// Builds `num / den` in canonical form. Panics if `den` is zero.
    pub fn new(num: Poly<C>, den: Poly<C>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            let one = den.coeffs[0].one_like();
            return RatFn {
                num,
                den: Poly::constant(one),
            };
        }
        let (num, den) = if den.degree() == Some(0) {
            (num, den)
        } else {
            let g = den.gcd(&num);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            RatFn { num, den }
        } else {
            let inv = lead.inv().expect("nonzero leading coefficient");
            RatFn {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn constant(c: C) -> Self {
        let one = c.one_like();
        RatFn {
            num: Poly::constant(c),
            den: Poly::constant(one),
        }
    }

    pub fn variable(context: &C) -> Self {
        RatFn {
            num: Poly::monomial(context.one_like(), 1),
            den: Poly::constant(context.one_like()),
        }
    }

    pub fn num(&self) -> &Poly<C> {
        &self.num
    }

    pub fn den(&self) -> &Poly<C> {
        &self.den
    }

    /// Multiplies every entry by the least common multiple of the
    /// denominators, leaving polynomials.
    pub fn clear_denominators(xs: &[RatFn<C>]) -> Vec<RatFn<C>> {
        let Some(first) = xs.first() else {
            return Vec::new();
        };
        let one = Poly::constant(first.context().one_like());
        let mut l = one.clone();
        for x in xs {
            if x.den.degree() == Some(0) {
                continue;
            }
            let g = l.gcd(&x.den);
            l = l.mul(&x.den.div_rem(&g).0);
        }
        xs.iter()
            .map(|x| RatFn {
                num: x.num.mul(&l.div_rem(&x.den).0),
                den: one.clone(),
            })
            .collect()
    }

    /// Some coefficient carrying the base-field context.
    pub(crate) fn context(&self) -> &C {
        &self.den.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn zero_like(&self) -> Self {
        Self::constant(self.context().zero_like())
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone());
        }
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return self.zero_like();
        }
        // both factors are reduced, so only cross terms can cancel
        let (a, d) = cancel(&self.num, &other.den);
        let (b, c) = cancel(&other.num, &self.den);
        Self::new(a.mul(&b), c.mul(&d))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }

    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &C) -> Option<C> {
        let d = self.den.eval(x);
        Some(self.num.eval(x).mul(&d.inv()?))
    }

    /// Formal derivative with respect to the variable.
    pub fn derivative(&self) -> Self {
        let top = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        if top.is_zero() {
            return self.zero_like();
        }
        Self::new(top, self.den.mul(&self.den))
    }

    pub fn size_hint(&self) -> usize {
        self.num.size_hint() + self.den.size_hint()
    }
}

/// `(p / g, q / g)` with `g = gcd(p, q)`.
fn cancel<C: BaseScalar>(p: &Poly<C>, q: &Poly<C>) -> (Poly<C>, Poly<C>) {
    if q.degree() == Some(0) {
        return (p.clone(), q.clone());
    }
    let (quot, r) = p.div_rem(q);
    if r.is_zero() {
        return (quot, Poly::constant(q.coeffs[0].one_like()));
    }
    let g = q.gcd(&r);
    if g.is_one() {
        (p.clone(), q.clone())
    } else {
        (p.div_rem(&g).0, q.div_rem(&g).0)
    }
}

impl<C: BaseScalar> fmt::Display for RatFn<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
