//! Multivariate Laurent polynomials with arbitrary-precision integer
//! coefficients over the fixed symbol set `a, b, c, A`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial symbols. `q` is never a symbol; it is the series variable of
/// [`QSeries`](super::QSeries).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    A,
    B,
    C,
    /// The finite-identity parameter, rendered `A`.
    UpperA,
}

impl Symbol {
    pub const ALL: [Symbol; 4] = [Symbol::A, Symbol::B, Symbol::C, Symbol::UpperA];

    fn index(self) -> usize {
        self as usize
    }

    pub fn as_char(self) -> char {
        match self {
            Symbol::A => 'a',
            Symbol::B => 'b',
            Symbol::C => 'c',
            Symbol::UpperA => 'A',
        }
    }
}

/// Exponent vector indexed by [`Symbol`].
///
/// Ordered graded-lexicographically: lower total degree first, then larger
/// exponents of earlier symbols first. This order is the canonical rendering
/// order of [`LaurentPoly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([i32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn new(a: i32, b: i32, c: i32, upper_a: i32) -> Self {
        Monomial([a, b, c, upper_a])
    }

    pub fn var(s: Symbol, exp: i32) -> Self {
        let mut e = [0; 4];
        e[s.index()] = exp;
        Monomial(e)
    }

    pub fn exp(&self, s: Symbol) -> i32 {
        self.0[s.index()]
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn inverse(&self) -> Self {
        Monomial(self.0.map(|e| -e))
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    // multiplying monomials adds exponents
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(rhs.0) {
            *x += y;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for s in Symbol::ALL {
            let e = self.exp(s);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", s.as_char())?;
            } else {
                write!(f, "{}^{}", s.as_char(), e)?;
            }
        }
        Ok(())
    }
}

/// A Laurent polynomial in `a, b, c, A` with integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(1, m)
    }

    pub fn var(s: Symbol) -> Self {
        Self::monomial(Monomial::var(s, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The constant term if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// `Some((±1, m))` when the polynomial is a unit of the Laurent ring.
    pub fn as_unit(&self) -> Option<(i32, Monomial)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        if c.is_one() {
            Some((1, *m))
        } else if (-c).is_one() {
            Some((-1, *m))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    /// `self += c * m * other`.
    pub fn add_scaled(&mut self, other: &LaurentPoly, c: &BigInt, m: Monomial) {
        if c.is_zero() {
            return;
        }
        for (om, oc) in &other.terms {
            self.add_term(*om * m, &(oc * c));
        }
    }

    pub fn mul_monomial(&self, c: &BigInt, m: Monomial) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (*k * m, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes symbols by polynomials. Symbols without a binding are kept.
    ///
    /// A symbol that occurs with a negative exponent must be bound to a unit
    /// monomial so that the result stays a Laurent polynomial.
    pub fn substitute(&self, bindings: &[(Symbol, LaurentPoly)]) -> Result<LaurentPoly> {
        let mut inverses: Vec<(Symbol, Option<LaurentPoly>)> = Vec::with_capacity(bindings.len());
        for (s, p) in bindings {
            let inv = p
                .as_unit()
                .map(|(sign, m)| LaurentPoly::term(sign, m.inverse()));
            inverses.push((*s, inv));
        }
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut factor = LaurentPoly::one();
            for ((s, p), (_, inv)) in bindings.iter().zip(&inverses) {
                let e = m.exp(*s);
                rest.0[s.index()] = 0;
                if e > 0 {
                    factor = &factor * &p.pow(e as u32);
                } else if e < 0 {
                    let inv = inv
                        .as_ref()
                        .ok_or(Error::NonInvertibleSubstitution(s.as_char()))?;
                    factor = &factor * &inv.pow(e.unsigned_abs());
                }
            }
            out.add_scaled(&factor, c, rest);
        }
        Ok(out)
    }

    /// Evaluates at integer points for every symbol that occurs; symbols with
    /// negative exponents must evaluate to ±1.
    pub fn eval_integer(&self, point: &[(Symbol, i64)]) -> Result<LaurentPoly> {
        let bindings: Vec<_> = point
            .iter()
            .map(|(s, v)| (*s, LaurentPoly::constant(*v)))
            .collect();
        self.substitute(&bindings)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += &(-rhs);
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            out.add_scaled(rhs, c, *m);
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> LaurentPoly {
        LaurentPoly::var(Symbol::A)
    }
    fn b() -> LaurentPoly {
        LaurentPoly::var(Symbol::B)
    }
    fn c() -> LaurentPoly {
        LaurentPoly::var(Symbol::C)
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&a() + &b()) * &(&a() - &b());
        let expected = &a().pow(2) - &b().pow(2);
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "a^2 - b^2");
    }

    #[test]
    fn jtp_specialization_kills_even_chains() {
        // c + ab under c = -1, b = a^-1
        let p = &c() + &(&a() * &b());
        let binds = [
            (Symbol::C, LaurentPoly::constant(-1)),
            (
                Symbol::B,
                LaurentPoly::monomial(Monomial::var(Symbol::A, -1)),
            ),
        ];
        assert!(p.substitute(&binds).unwrap().is_zero());
        let q = &LaurentPoly::one() + &c();
        assert!(q.substitute(&binds[..1]).unwrap().is_zero());
    }

    #[test]
    fn negative_exponent_needs_unit_binding() {
        let p = LaurentPoly::monomial(Monomial::var(Symbol::A, -2));
        let err = p
            .substitute(&[(Symbol::A, LaurentPoly::constant(2))])
            .unwrap_err();
        assert_eq!(err, Error::NonInvertibleSubstitution('a'));
        let ok = p
            .substitute(&[(
                Symbol::A,
                LaurentPoly::term(-1, Monomial::var(Symbol::B, 3)),
            )])
            .unwrap();
        assert_eq!(ok, LaurentPoly::monomial(Monomial::var(Symbol::B, -6)));
    }

    #[test]
    fn rendering_is_canonical() {
        let p = &(&c() + &(&a() * &b())) + &LaurentPoly::constant(-3);
        assert_eq!(p.to_string(), "-3 + c + a*b");
        let q = &LaurentPoly::monomial(Monomial::var(Symbol::UpperA, -1))
            + &LaurentPoly::var(Symbol::UpperA);
        assert_eq!(q.to_string(), "A^-1 + A");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
