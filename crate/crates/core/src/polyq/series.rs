//! Truncated power series in `q` with [`LaurentPoly`] coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::laurent::{LaurentPoly, Monomial, Symbol};
use crate::error::{Error, Result};

/// `Σ_{k=0}^{N} c_k q^k  (mod q^{N+1})`.
///
/// Binary operations on series of different orders truncate to the smaller
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<LaurentPoly>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![LaurentPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::term(LaurentPoly::one(), 0, order)
    }

    /// `coef * q^power`, or zero when `power > order`.
    pub fn term(coef: LaurentPoly, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = coef;
        }
        s
    }

    /// Builds a series from coefficients; missing trailing coefficients are zero.
    pub fn from_coeffs(coeffs: impl IntoIterator<Item = LaurentPoly>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[k] = c;
        }
        s
    }

    /// An integer polynomial in `q` (index = power).
    pub fn from_integers<T: Into<BigInt> + Clone>(coeffs: &[T], order: usize) -> Self {
        Self::from_coeffs(
            coeffs.iter().map(|c| LaurentPoly::constant(c.clone())),
            order,
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &LaurentPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<LaurentPoly> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    pub fn truncate(mut self, order: usize) -> Self {
        if order < self.order() {
            self.coeffs.truncate(order + 1);
        }
        self
    }

    /// Integer coefficients, or `None` if some coefficient involves a symbol.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(LaurentPoly::as_constant).collect()
    }

    /// Multiplies every coefficient by `mono` and shifts by `q^qshift`.
    pub fn scale(&self, mono: &LaurentPoly, qshift: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for k in 0..=n.saturating_sub(qshift) {
            if k + qshift > n {
                break;
            }
            out.coeffs[k + qshift] = &self.coeffs[k] * mono;
        }
        out
    }

    /// In place: `self *= (1 - coef q^e)`.
    pub fn mul_binomial(&mut self, coef: &LaurentPoly, e: usize) {
        let n = self.order();
        if e > n || coef.is_zero() {
            return;
        }
        for k in (e..=n).rev() {
            if self.coeffs[k - e].is_zero() {
                continue;
            }
            let prod = &self.coeffs[k - e] * coef;
            self.coeffs[k] = &self.coeffs[k] - &prod;
        }
    }

    /// In place: `self /= (1 - coef q^e)`, exact as a power series for `e >= 1`.
    pub fn div_binomial(&mut self, coef: &LaurentPoly, e: usize) {
        assert!(e >= 1, "division by (1 - coef) needs e >= 1");
        let n = self.order();
        if e > n || coef.is_zero() {
            return;
        }
        for k in e..=n {
            if self.coeffs[k - e].is_zero() {
                continue;
            }
            let prod = &self.coeffs[k - e] * coef;
            self.coeffs[k] += &prod;
        }
    }

    /// Multiplicative inverse when the constant term is `±monomial`.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.order();
        let (sign, m) = self.coeffs[0]
            .as_unit()
            .ok_or_else(|| Error::NonInvertibleSeries(self.coeffs[0].to_string()))?;
        let c0_inv = LaurentPoly::term(sign, m.inverse());
        let mut out = Self::zero(n);
        out.coeffs[0] = c0_inv.clone();
        for k in 1..=n {
            let mut acc = LaurentPoly::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() || out.coeffs[k - j].is_zero() {
                    continue;
                }
                acc += &(&self.coeffs[j] * &out.coeffs[k - j]);
            }
            out.coeffs[k] = -(&acc * &c0_inv);
        }
        Ok(out)
    }

    pub fn substitute(&self, bindings: &[(Symbol, LaurentPoly)]) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.substitute(bindings))
            .collect::<Result<Vec<_>>>()?;
        Ok(QSeries { coeffs })
    }

    /// Index of the first coefficient where the two series differ, compared up
    /// to the smaller order.
    pub fn first_difference(&self, other: &QSeries) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(x, y)| x != y)
    }
}

impl Add for &QSeries {
    type Output = QSeries;

    fn add(self, rhs: &QSeries) -> QSeries {
        let n = self.order().min(rhs.order());
        QSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &QSeries {
    type Output = QSeries;

    fn sub(self, rhs: &QSeries) -> QSeries {
        let n = self.order().min(rhs.order());
        QSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Neg for &QSeries {
    type Output = QSeries;

    fn neg(self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;

    fn mul(self, rhs: &QSeries) -> QSeries {
        let n = self.order().min(rhs.order());
        let mut out = QSeries::zero(n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] += &(&self.coeffs[i] * &rhs.coeffs[j]);
            }
        }
        out
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // a single negative term is pulled out as a minus sign
            let negative = c.len() == 1 && c.terms().all(|(_, v)| v.is_negative());
            let shown = if negative { -c } else { c.clone() };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            let body = if shown.len() == 1 {
                shown.to_string()
            } else {
                format!("({shown})")
            };
            let unit = shown.as_constant().is_some_and(|v| v.is_one());
            match k {
                0 => write!(f, "{body}")?,
                1 if unit => f.write_str("q")?,
                1 => write!(f, "{body}*q")?,
                _ if unit => write!(f, "q^{k}")?,
                _ => write!(f, "{body}*q^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

/// `∏_{j=0}^{count-1} (1 - coef q^{start + j*step})  (mod q^{order+1})`.
pub fn pochhammer_finite(
    coef: &LaurentPoly,
    start: usize,
    step: usize,
    count: usize,
    order: usize,
) -> QSeries {
    assert!(step >= 1, "pochhammer step must be positive");
    let mut s = QSeries::one(order);
    for j in 0..count {
        let e = start + j * step;
        if e > order {
            break;
        }
        if e == 0 {
            // (1 - coef) is a q-free factor
            s = s.scale(&(&LaurentPoly::one() - coef), 0);
        } else {
            s.mul_binomial(coef, e);
        }
    }
    s
}

/// Number of factors of an infinite product that can affect `q^0..q^order`.
pub fn relevant_factor_count(start: usize, step: usize, order: usize) -> usize {
    if start > order {
        0
    } else {
        (order - start) / step + 1
    }
}

/// `(coef q^start; q^step)_∞  (mod q^{order+1})`.
pub fn pochhammer_infinite(
    coef: &LaurentPoly,
    start: usize,
    step: usize,
    order: usize,
) -> Result<QSeries> {
    if start == 0 {
        return Err(Error::NonConvergentTruncation);
    }
    Ok(pochhammer_finite(
        coef,
        start,
        step,
        relevant_factor_count(start, step, order),
        order,
    ))
}

/// `1 / (coef q^start; q^step)_∞  (mod q^{order+1})`.
pub fn reciprocal_pochhammer_infinite(
    coef: &LaurentPoly,
    start: usize,
    step: usize,
    order: usize,
) -> Result<QSeries> {
    if start == 0 {
        return Err(Error::NonConvergentTruncation);
    }
    let mut s = QSeries::one(order);
    for j in 0..relevant_factor_count(start, step, order) {
        s.div_binomial(coef, start + j * step);
    }
    Ok(s)
}

/// `1 / (q; q)_m` as a series.
pub fn reciprocal_q_factorial(m: usize, order: usize) -> QSeries {
    let mut s = QSeries::one(order);
    let one = LaurentPoly::one();
    for j in 1..=m {
        s.div_binomial(&one, j);
    }
    s
}

/// Coefficients of the Gaussian binomial `[n m]_q` as a polynomial in `q`.
/// Empty support (`m < 0` or `m > n`) gives the zero polynomial `[]`.
pub fn gaussian_binomial_poly(n: i64, m: i64) -> Vec<BigInt> {
    if m < 0 || m > n {
        return Vec::new();
    }
    let m = m.min(n - m) as usize;
    let n = n as usize;
    let degree = m * (n - m);
    // Π_{i=1}^{m} (1 - q^{n-m+i}) / (1 - q^i), each division exact
    let mut c = vec![BigInt::zero(); degree + 1 + n];
    c[0] = BigInt::one();
    let mut top = 0usize;
    for i in 1..=m {
        let e = n - m + i;
        for k in (e..=top + e).rev() {
            let t = c[k - e].clone();
            c[k] -= t;
        }
        top += e;
        for k in i..=top {
            let t = c[k - i].clone();
            c[k] += t;
        }
        top -= i;
    }
    c.truncate(degree + 1);
    c
}

/// `[n m]` in base `q^qstep`, truncated at `order`.
pub fn gaussian_binomial(n: i64, m: i64, qstep: usize, order: usize) -> QSeries {
    assert!(
        qstep >= 1,
        "gaussian binomial base exponent must be positive"
    );
    let poly = gaussian_binomial_poly(n, m);
    let mut s = QSeries::zero(order);
    for (k, c) in poly.into_iter().enumerate() {
        let e = k * qstep;
        if e > order {
            break;
        }
        s.coeffs[e] = LaurentPoly::constant(c);
    }
    s
}

/// `T_m = m(m+1)/2`, with `T_{-1} = 0`.
pub fn triangular(m: i64) -> Result<u64> {
    if m < -1 {
        return Err(Error::TriangularDomain(m));
    }
    Ok((m * (m + 1) / 2) as u64)
}

/// `c * symbol-monomial` helper used throughout.
pub fn mono(c: i64, m: Monomial) -> LaurentPoly {
    LaurentPoly::term(c, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries) -> Vec<i64> {
        s.integer_coeffs()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c.clone()).unwrap())
            .collect()
    }

    #[test]
    fn one_plus_q_times_one_minus_q() {
        let x = QSeries::from_integers(&[1, 1], 2);
        let y = QSeries::from_integers(&[1, -1], 2);
        assert_eq!(ints(&(&x * &y)), vec![1, 0, -1]);
    }

    #[test]
    fn scale_shifts_and_multiplies() {
        let a = LaurentPoly::var(Symbol::A);
        let s = QSeries::one(3).scale(&a, 1);
        assert_eq!(s, QSeries::term(a, 1, 3));
    }

    #[test]
    fn geometric_square_counts_compositions() {
        let g = QSeries::from_integers(&[1; 6], 5);
        let sq = &g * &g;
        assert_eq!(ints(&sq)[3], 4);
    }

    #[test]
    fn finite_pochhammer_examples() {
        let one = LaurentPoly::one();
        assert_eq!(
            ints(&pochhammer_finite(&one, 1, 1, 2, 5)),
            vec![1, -1, -1, 1, 0, 0]
        );
        assert_eq!(ints(&pochhammer_finite(&one, 1, 1, 0, 3)), vec![1, 0, 0, 0]);
    }

    #[test]
    fn odd_step_product_with_symbol() {
        // (-aq; q^2)_∞ to order 4 = 1 + aq + aq^3 + a^2 q^4
        let minus_a = mono(-1, Monomial::var(Symbol::A, 1));
        let s = pochhammer_infinite(&minus_a, 1, 2, 4).unwrap();
        let a = |e| LaurentPoly::monomial(Monomial::var(Symbol::A, e));
        let expected = QSeries::from_coeffs(
            [LaurentPoly::one(), a(1), LaurentPoly::zero(), a(1), a(2)],
            4,
        );
        assert_eq!(s, expected);
    }

    #[test]
    fn euler_pentagonal_prefix() {
        let s = pochhammer_infinite(&LaurentPoly::one(), 1, 1, 5).unwrap();
        assert_eq!(ints(&s), vec![1, -1, -1, 0, 0, 1]);
    }

    #[test]
    fn start_zero_is_rejected() {
        assert_eq!(
            pochhammer_infinite(&LaurentPoly::one(), 0, 1, 5).unwrap_err(),
            Error::NonConvergentTruncation
        );
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(ints(&gaussian_binomial(2, 1, 1, 10))[..3], [1, 1, 0]);
        assert!(gaussian_binomial(3, -1, 1, 10).is_zero());
        assert!(gaussian_binomial(3, 4, 1, 10).is_zero());
        assert_eq!(ints(&gaussian_binomial(4, 2, 1, 4)), vec![1, 1, 2, 1, 1]);
        assert_eq!(ints(&gaussian_binomial(5, 0, 2, 4)), vec![1, 0, 0, 0, 0]);
        assert_eq!(ints(&gaussian_binomial(2, 1, 2, 4)), vec![1, 0, 1, 0, 0]);
    }

    #[test]
    fn triangular_numbers() {
        assert_eq!(triangular(0).unwrap(), 0);
        assert_eq!(triangular(-1).unwrap(), 0);
        assert_eq!(triangular(4).unwrap(), 10);
        assert!(triangular(-2).is_err());
    }

    #[test]
    fn inverse_of_euler_product_gives_partition_numbers() {
        let e = pochhammer_infinite(&LaurentPoly::one(), 1, 1, 10).unwrap();
        let p = e.inverse().unwrap();
        assert_eq!(ints(&p), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let r = reciprocal_pochhammer_infinite(&LaurentPoly::one(), 1, 1, 10).unwrap();
        assert_eq!(p, r);
    }
}
