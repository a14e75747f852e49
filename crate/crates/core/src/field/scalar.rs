//! Coefficient fields underneath the rational function fields: prime
//! residues and arbitrary-precision rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A residue modulo a prime `p`, always stored reduced to `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        let v = (value as i128).rem_euclid(m) as u64;
        Fp { value: v, modulus }
    }

    pub fn from_bigint(value: &BigInt, modulus: u64) -> Self {
        let r = value.mod_floor(&BigInt::from(modulus));
        Fp {
            value: r.to_u64().expect("residue fits in u64"),
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline]
    fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
        ((a as u128 * b as u128) % m as u128) as u64
    }

    pub fn pow(&self, mut e: u64) -> Fp {
        let mut base = self.value;
        let mut acc = 1 % self.modulus;
        while e > 0 {
            if e & 1 == 1 {
                acc = Self::mul_mod(acc, base, self.modulus);
            }
            base = Self::mul_mod(base, base, self.modulus);
            e >>= 1;
        }
        Fp {
            value: acc,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Operations a coefficient field must provide for polynomial arithmetic.
///
/// Elements carry whatever context they need (the modulus for `Fp`), so
/// constants are always produced relative to an existing element.
pub trait BaseScalar: Clone + PartialEq + Eq + std::hash::Hash + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn int_like(&self, k: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Rough size of the representation, used for pivot selection.
    fn size_hint(&self) -> usize;
    /// Formats a coefficient that multiplies a power of the variable.
    /// Returns `None` when the coefficient is one (omitted).
    fn fmt_coefficient(&self) -> Option<String>;
    /// True when the coefficient would print with a leading minus sign.
    fn is_negative(&self) -> bool;
    /// Monic gcd of two nonzero coefficient vectors by a method specific
    /// to the field, or `None` for plain Euclid.
    fn poly_gcd(_a: &[Self], _b: &[Self]) -> Option<Vec<Self>> {
        None
    }
}

impl BaseScalar for Fp {
    fn zero_like(&self) -> Self {
        Fp {
            value: 0,
            modulus: self.modulus,
        }
    }

    fn one_like(&self) -> Self {
        Fp {
            value: 1,
            modulus: self.modulus,
        }
    }

    fn int_like(&self, k: i64) -> Self {
        Fp::new(k, self.modulus)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn is_one(&self) -> bool {
        self.value == 1
    }

    #[inline]
    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = self.value + other.value;
        let value = if s >= self.modulus { s - self.modulus } else { s };
        Fp {
            value,
            modulus: self.modulus,
        }
    }

    #[inline]
    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let value = if self.value >= other.value {
            self.value - other.value
        } else {
            self.value + self.modulus - other.value
        };
        Fp {
            value,
            modulus: self.modulus,
        }
    }

    #[inline]
    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        Fp {
            value: Self::mul_mod(self.value, other.value, self.modulus),
            modulus: self.modulus,
        }
    }

    fn neg(&self) -> Self {
        let value = if self.value == 0 {
            0
        } else {
            self.modulus - self.value
        };
        Fp {
            value,
            modulus: self.modulus,
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        Some(self.pow(self.modulus - 2))
    }

    fn size_hint(&self) -> usize {
        1
    }

    fn fmt_coefficient(&self) -> Option<String> {
        if self.value == 1 {
            None
        } else {
            Some(self.value.to_string())
        }
    }

    fn is_negative(&self) -> bool {
        false
    }
}

impl BaseScalar for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }

    fn one_like(&self) -> Self {
        BigRational::one()
    }

    fn int_like(&self, k: i64) -> Self {
        BigRational::from_integer(BigInt::from(k))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn size_hint(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }

    fn fmt_coefficient(&self) -> Option<String> {
        let abs = self.abs();
        if One::is_one(&abs) {
            None
        } else if abs.is_integer() {
            Some(abs.numer().to_string())
        } else {
            Some(format!("({}/{})", abs.numer(), abs.denom()))
        }
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn poly_gcd(a: &[Self], b: &[Self]) -> Option<Vec<Self>> {
        Some(rational_gcd(a, b))
    }
}

// Large primes for the coprimality shortcut.
const GCD_PRIMES: [u64; 4] = [
    2_305_843_009_213_693_951,
    4_611_686_018_427_387_847,
    1_000_000_007,
    998_244_353,
];

/// Primitive integer polynomial with the same roots, positive leading
/// coefficient.
fn primitive_integer(a: &[BigRational]) -> Vec<BigInt> {
    let l = a.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = a.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    make_primitive(ints)
}

fn make_primitive(mut a: Vec<BigInt>) -> Vec<BigInt> {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    let mut g = BigInt::zero();
    for c in &a {
        g = g.gcd(c);
        if One::is_one(&g) {
            break;
        }
    }
    if g.is_zero() {
        return a;
    }
    let g = if a.last().is_some_and(Signed::is_negative) { -g } else { g };
    if !One::is_one(&g) {
        for c in &mut a {
            *c = &*c / &g;
        }
    }
    a
}

fn residues(a: &[BigInt], p: u64) -> Vec<u64> {
    a.iter().map(|c| Fp::from_bigint(c, p).value).collect()
}

/// Degree of the gcd modulo `p`.
fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = Fp { value: *b.last().unwrap(), modulus: p }.pow(p - 2).value;
        while a.len() >= b.len() {
            let c = Fp::mul_mod(*a.last().unwrap(), inv, p);
            let shift = a.len() - b.len();
            for (i, d) in b.iter().enumerate() {
                let t = Fp::mul_mod(c, *d, p);
                a[shift + i] = (a[shift + i] + p - t) % p;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len() - 1
}

fn pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let lb = b.last().expect("nonzero divisor");
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, d) in b.iter().enumerate() {
            r[shift + i] -= &lr * d;
        }
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    make_primitive(r)
}

/// Monic gcd over `Q`: a modular coprimality check first, then the
/// primitive remainder sequence over `Z`.
fn rational_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let one = vec![BigRational::one()];
    if a.len() <= 1 || b.len() <= 1 {
        return one;
    }
    let mut x = primitive_integer(a);
    let mut y = primitive_integer(b);
    for p in GCD_PRIMES {
        let bp = BigInt::from(p);
        if (x.last().unwrap() % &bp).is_zero() || (y.last().unwrap() % &bp).is_zero() {
            continue;
        }
        if gcd_degree_mod(residues(&x, p), residues(&y, p), p) == 0 {
            return one;
        }
        break;
    }
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_remainder(&x, &y);
        x = y;
        y = r;
    }
    let lead = BigRational::from_integer(x.last().unwrap().clone());
    x.into_iter().map(|c| BigRational::from_integer(c) / &lead).collect()
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_basic() {
        let a = Fp::new(3, 5);
        let b = Fp::new(4, 5);
        assert_eq!(a.add(&b), Fp::new(2, 5));
        assert_eq!(a.sub(&b), Fp::new(4, 5));
        assert_eq!(Fp::new(-1, 5).value(), 4);
        assert_eq!(a.mul(&a.inv().unwrap()), Fp::new(1, 5));
        assert!(Fp::new(0, 7).inv().is_none());
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&k| is_prime(k)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
