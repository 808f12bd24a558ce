//! Colored partitions of the method of weighted words.
//!
//! The integer 1 comes in the primary colors `a, b, c`; integers `n >= 2`
//! additionally come in the secondary colors `ab, ac, bc`. Symbols are laid
//! out on a single index line
//!
//! ```text
//! e1 < a1 < f1 < b1 < c1 < d2 < e2 < a2 < f2 < b2 < c2 < d3 < ...
//! ```
//!
//! (`d = ab`, `e = ac`, `f = bc`; `e1`, `f1` and `d1` do not occur) and a
//! Type-1 partition is a set of symbols whose positions differ by at least 6,
//! strictly more when the larger symbol is secondary. The position of a symbol
//! is also its part size under the standard (modulus 6) transform.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::{count, enumerate, PartitionFilter};
use crate::polyq::{reciprocal_q_factorial, triangular, LaurentPoly, Monomial, QSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    A,
    B,
    C,
    /// `d`
    AB,
    /// `e`
    AC,
    /// `f`
    BC,
}

impl Color {
    /// Index order `a, b, c, d, e, f` used by color-count vectors.
    pub const ALL: [Color; 6] = [
        Color::A,
        Color::B,
        Color::C,
        Color::AB,
        Color::AC,
        Color::BC,
    ];

    pub fn is_secondary(self) -> bool {
        matches!(self, Color::AB | Color::AC | Color::BC)
    }

    /// Exponents of `a, b, c` carried by the color.
    pub fn letters(self) -> [i32; 3] {
        match self {
            Color::A => [1, 0, 0],
            Color::B => [0, 1, 0],
            Color::C => [0, 0, 1],
            Color::AB => [1, 1, 0],
            Color::AC => [1, 0, 1],
            Color::BC => [0, 1, 1],
        }
    }

    fn index(self) -> usize {
        self as usize
    }

    fn name(self) -> &'static str {
        match self {
            Color::A => "a",
            Color::B => "b",
            Color::C => "c",
            Color::AB => "ab",
            Color::AC => "ac",
            Color::BC => "bc",
        }
    }
}

/// The integer `value` in color `color`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColorSymbol {
    value: u32,
    color: Color,
}

impl ColorSymbol {
    pub fn new(value: u32, color: Color) -> Result<Self> {
        if value == 0 || (color.is_secondary() && value < 2) {
            return Err(Error::InvalidSymbol(format!(
                "{}_{} does not occur",
                color.name(),
                value
            )));
        }
        Ok(ColorSymbol { value, color })
    }

    /// The symbol at `position` on the index line, if one occurs there.
    pub fn at_position(position: u32) -> Option<Self> {
        let (color, shift) = match position % 6 {
            0 => (Color::AB, 6),
            1 => (Color::AC, 5),
            2 => (Color::A, 4),
            3 => (Color::BC, 3),
            4 => (Color::B, 2),
            _ => (Color::C, 1),
        };
        ColorSymbol::new((position + shift) / 6, color).ok()
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn color(&self) -> Color {
        self.color
    }

    pub fn is_secondary(&self) -> bool {
        self.color.is_secondary()
    }

    /// Position on the index line; equals the standard-transform part size.
    pub fn position(&self) -> u32 {
        let n = self.value * 6;
        match self.color {
            Color::A => n - 4,
            Color::B => n - 2,
            Color::C => n - 1,
            Color::AB => n - 6,
            Color::AC => n - 5,
            Color::BC => n - 3,
        }
    }

    /// Part size under the quadratic transform.
    pub fn quadratic_value(&self) -> u32 {
        let n = self.value * 2;
        match self.color {
            Color::A | Color::B | Color::AC | Color::BC => n - 1,
            Color::C => n,
            Color::AB => n - 2,
        }
    }

    pub fn transformed(&self, t: Transform) -> u32 {
        match t {
            Transform::Plain => self.value,
            Transform::Standard => self.position(),
            Transform::Quadratic => self.quadratic_value(),
        }
    }
}

impl fmt::Display for ColorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.value, self.color.name())
    }
}

/// How a symbol is turned into a part size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Transform {
    /// The integer itself; the grading of the key identity and of the
    /// refined vector-partition correspondence.
    Plain,
    /// `q -> q^6` with `a -> aq^-4, b -> bq^-2, c -> cq^-1`.
    Standard,
    /// `q -> q^2` with `a -> aq^-1, b -> bq^-1`.
    Quadratic,
}

/// Symbols in strictly decreasing position satisfying the Type-1 gap rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredPartition {
    symbols: Vec<ColorSymbol>,
}

impl ColoredPartition {
    pub fn new(symbols: Vec<ColorSymbol>) -> Result<Self> {
        for w in symbols.windows(2) {
            if !gap_ok(&w[0], &w[1]) {
                return Err(Error::InvalidSymbol(format!(
                    "{} followed by {} violates the Type-1 gap condition",
                    w[0], w[1]
                )));
            }
        }
        Ok(ColoredPartition { symbols })
    }

    pub fn symbols(&self) -> &[ColorSymbol] {
        &self.symbols
    }

    /// Product of the color letters.
    pub fn monomial(&self) -> Monomial {
        monomial_of(&self.symbols)
    }

    pub fn transformed_sum(&self, t: Transform) -> u32 {
        self.symbols.iter().map(|s| s.transformed(t)).sum()
    }

    /// Transformed parts, largest first.
    pub fn transformed_parts(&self, t: Transform) -> Vec<u32> {
        self.symbols.iter().map(|s| s.transformed(t)).collect()
    }

    /// `(α, β, γ, δ, ε, φ)`: how many parts carry each color.
    pub fn color_counts(&self) -> ColorClass {
        class_of(&self.symbols)
    }
}

impl fmt::Display for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Color multiplicities `(α, β, γ, δ, ε, φ)` for colors `a, b, c, ab, ac, bc`.
pub type ColorClass = [u32; 6];

fn gap_ok(larger: &ColorSymbol, smaller: &ColorSymbol) -> bool {
    let need = if larger.is_secondary() { 7 } else { 6 };
    larger.position() >= smaller.position() + need
}

fn monomial_of(symbols: &[ColorSymbol]) -> Monomial {
    let mut e = [0i32; 3];
    for s in symbols {
        for (x, y) in e.iter_mut().zip(s.color.letters()) {
            *x += y;
        }
    }
    Monomial::new(e[0], e[1], e[2], 0)
}

fn class_of(symbols: &[ColorSymbol]) -> ColorClass {
    let mut c = [0u32; 6];
    for s in symbols {
        c[s.color.index()] += 1;
    }
    c
}

/// `a^{α+δ+ε} b^{β+δ+φ} c^{γ+ε+φ}`, the `(i, j, k)` exponents of a class.
pub fn class_exponents(c: &ColorClass) -> (u32, u32, u32) {
    (c[0] + c[3] + c[4], c[1] + c[3] + c[5], c[2] + c[4] + c[5])
}

/// Every symbol whose transformed value is at most `n`, by increasing position.
fn symbols_up_to(n: u32, t: Transform) -> Vec<ColorSymbol> {
    // transformed values never fall below position / 6
    let max_position = 6 * (n + 1) + 6;
    (2..=max_position)
        .filter_map(ColorSymbol::at_position)
        .filter(|s| s.transformed(t) <= n)
        .collect()
}

/// Calls `visit` with each Type-1 partition (as a symbol slice, largest
/// first) whose transformed parts sum to `n`.
pub fn for_each_type1(n: u32, t: Transform, mut visit: impl FnMut(&[ColorSymbol])) {
    let table = symbols_up_to(n, t);
    let mut stack = Vec::new();
    descend(&table, table.len(), n, t, &mut stack, &mut visit);
}

fn descend(
    table: &[ColorSymbol],
    upper: usize,
    remaining: u32,
    t: Transform,
    stack: &mut Vec<ColorSymbol>,
    visit: &mut impl FnMut(&[ColorSymbol]),
) {
    if remaining == 0 {
        visit(stack);
        return;
    }
    for idx in (0..upper).rev() {
        let s = table[idx];
        let v = s.transformed(t);
        if v > remaining {
            continue;
        }
        let need = if s.is_secondary() { 7 } else { 6 };
        let limit = s.position().saturating_sub(need);
        let next_upper = if s.position() < need {
            0
        } else {
            table.partition_point(|x| x.position() <= limit)
        };
        stack.push(s);
        descend(table, next_upper, remaining - v, t, stack, visit);
        stack.pop();
    }
}

/// All Type-1 partitions of `n` under transform `t`.
pub fn enumerate_type1(n: u32, t: Transform) -> Vec<ColoredPartition> {
    let mut out = Vec::new();
    for_each_type1(n, t, |s| {
        out.push(ColoredPartition {
            symbols: s.to_vec(),
        })
    });
    out
}

/// Sum of the color monomials of the Type-1 partitions of `n` under `t`.
pub fn monomial_aggregate(n: u32, t: Transform) -> LaurentPoly {
    let mut counts: BTreeMap<Monomial, u64> = BTreeMap::new();
    for_each_type1(n, t, |s| *counts.entry(monomial_of(s)).or_default() += 1);
    let mut out = LaurentPoly::zero();
    for (m, c) in counts {
        out.add_term(m, &c.into());
    }
    out
}

pub fn count_type1(n: u32, t: Transform) -> u64 {
    let mut c = 0u64;
    for_each_type1(n, t, |_| c += 1);
    c
}

/// Counts of partitions of `n` satisfying the integer difference conditions
/// directly: smallest part not 1 or 3, consecutive differences at least 6 and
/// strictly more when the larger part is `≡ 0, 1, 3 (mod 6)`.
pub fn goellnitz_difference_count(n: u32) -> u64 {
    fn go(remaining: u32, cap: u32) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        for m in (2..=cap.min(remaining)).rev() {
            if m == 3 {
                continue;
            }
            let need = if matches!(m % 6, 0 | 1 | 3) { 7 } else { 6 };
            let next_cap = m.saturating_sub(need);
            total += go(remaining - m, next_cap);
        }
        total
    }
    go(n, n)
}

/// `(B(n), C(n))`: distinct parts `≡ 2, 4, 5 (mod 6)` against standard Type-1
/// partitions.
pub fn goellnitz_counts(n: u32) -> (u64, u64) {
    let b = count(n, &PartitionFilter::distinct_allowed(6, [2, 4, 5]));
    (b, count_type1(n, Transform::Standard))
}

/// Type-1 partitions of `n` under `t`, keyed by color class.
pub fn refined_counts(n: u32, t: Transform) -> BTreeMap<ColorClass, u64> {
    let mut out = BTreeMap::new();
    for_each_type1(n, t, |s| *out.entry(class_of(s)).or_default() += 1);
    out
}

/// Triples of distinct-part partitions of total `n`, keyed by part counts.
pub fn vector_counts(n: u32) -> BTreeMap<(u32, u32, u32), u64> {
    // by_size[s][k]: distinct-part partitions of s with k parts
    let distinct = PartitionFilter::Distinct;
    let by_size: Vec<BTreeMap<u32, u64>> = (0..=n)
        .map(|s| {
            let mut h = BTreeMap::new();
            for p in enumerate(s, &distinct) {
                *h.entry(p.nu() as u32).or_default() += 1;
            }
            h
        })
        .collect();
    let mut out = BTreeMap::new();
    for n1 in 0..=n {
        for n2 in 0..=n - n1 {
            let n3 = n - n1 - n2;
            for (&i, &x) in &by_size[n1 as usize] {
                for (&j, &y) in &by_size[n2 as usize] {
                    for (&k, &z) in &by_size[n3 as usize] {
                        *out.entry((i, j, k)).or_default() += x * y * z;
                    }
                }
            }
        }
    }
    out
}

/// Collects class counts by `(i, j, k) = (α+δ+ε, β+δ+φ, γ+ε+φ)`.
pub fn aggregate_by_exponents(
    refined: &BTreeMap<ColorClass, u64>,
) -> BTreeMap<(u32, u32, u32), u64> {
    let mut out = BTreeMap::new();
    for (c, &v) in refined {
        *out.entry(class_exponents(c)).or_default() += v;
    }
    out
}

/// Closed-form generating function of the Type-1 partitions in one color
/// class (plain grading):
/// `q^{T_s+T_δ+T_ε+T_{φ-1}} (1 - q^α(1 - q^φ)) / ((q)_α (q)_β (q)_γ (q)_δ (q)_ε (q)_φ)`.
pub fn class_generating_function(class: &ColorClass, order: usize) -> QSeries {
    let [alpha, _, _, delta, eps, phi] = class.map(|x| x as i64);
    let s: i64 = class.iter().map(|&x| x as i64).sum();
    let shift = [s, delta, eps, phi - 1]
        .into_iter()
        .map(|m| triangular(m).expect("class indices are nonnegative"))
        .sum::<u64>() as usize;
    // numerator 1 - q^α + q^{α+φ}
    let mut num = vec![0i64; (alpha + phi) as usize + 1];
    num[0] += 1;
    num[alpha as usize] -= 1;
    num[(alpha + phi) as usize] += 1;
    let mut g = QSeries::from_integers(&num, order).scale(&LaurentPoly::one(), shift);
    for &m in class {
        g = &g * &reciprocal_q_factorial(m as usize, order);
    }
    g
}
