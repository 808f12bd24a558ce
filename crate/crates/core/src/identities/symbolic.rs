//! Sides of the identities whose coefficients are polynomials in `a, b, c`
//! or Laurent polynomials in `a` / `A`.

use num_bigint::BigInt;

use crate::par::{map_collect, Execution};
use crate::partitions::{enumerate, PartitionFilter};
use crate::polyq::{
    gaussian_binomial_poly, pochhammer_finite, pochhammer_infinite, reciprocal_pochhammer_infinite,
    triangular, LaurentPoly, Monomial, QSeries, Symbol,
};
use crate::weights::symbolic_weight;

fn var(s: Symbol, e: i32) -> LaurentPoly {
    LaurentPoly::monomial(Monomial::var(s, e))
}

fn neg_var(s: Symbol, e: i32) -> LaurentPoly {
    LaurentPoly::term(-1, Monomial::var(s, e))
}

fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

fn tri(m: i64) -> usize {
    triangular(m).expect("index is at least -1") as usize
}

// ---------------------------------------------------------------------------
// Three-color product and its weighted Rogers-Ramanujan side

/// `(-aq;q^2)_∞ (-bq;q^2)_∞ (-cq^2;q^2)_∞`.
pub fn theorem1_product(order: usize) -> QSeries {
    let fa = pochhammer_infinite(&neg_var(Symbol::A, 1), 1, 2, order).expect("start >= 1");
    let fb = pochhammer_infinite(&neg_var(Symbol::B, 1), 1, 2, order).expect("start >= 1");
    let fc = pochhammer_infinite(&neg_var(Symbol::C, 1), 2, 2, order).expect("start >= 1");
    &(&fa * &fb) * &fc
}

/// `Σ ω(π)` over Rogers-Ramanujan partitions of `n`.
pub fn theorem1_lhs(n: u32) -> LaurentPoly {
    let mut total = LaurentPoly::zero();
    for p in enumerate(n, &PartitionFilter::RogersRamanujan) {
        total += &symbolic_weight(&p).expect("enumerated as Rogers-Ramanujan");
    }
    total
}

/// Vector partitions `(π₁, π₂, π₃)` of `n`: distinct odd parts in `a` and in
/// `b`, distinct even parts in `c`, each counted by `a^{ν(π₁)} b^{ν(π₂)} c^{ν(π₃)}`.
pub fn theorem1_vector_rhs(n: u32) -> LaurentPoly {
    // histogram of part counts for distinct odd / distinct even partitions of each size
    let histogram = |size: u32, residue: u32| -> Vec<u64> {
        let mut h = Vec::new();
        for p in enumerate(size, &PartitionFilter::distinct_allowed(2, [residue])) {
            if h.len() <= p.nu() {
                h.resize(p.nu() + 1, 0);
            }
            h[p.nu()] += 1;
        }
        h
    };
    let odd: Vec<Vec<u64>> = (0..=n).map(|s| histogram(s, 1)).collect();
    let even: Vec<Vec<u64>> = (0..=n).map(|s| histogram(s, 0)).collect();
    let mut total = LaurentPoly::zero();
    for n1 in 0..=n {
        for n2 in 0..=n - n1 {
            let n3 = (n - n1 - n2) as usize;
            for (i, x) in odd[n1 as usize].iter().enumerate() {
                for (j, y) in odd[n2 as usize].iter().enumerate() {
                    for (k, z) in even[n3].iter().enumerate() {
                        let c = x * y * z;
                        if c > 0 {
                            total.add_term(
                                Monomial::new(i as i32, j as i32, k as i32, 0),
                                &BigInt::from(c),
                            );
                        }
                    }
                }
            }
        }
    }
    total
}

/// `(Σ_R ω, [q^n] product)`. The vector-partition count is available
/// separately through [`theorem1_vector_rhs`].
pub fn theorem1_sides(n: u32) -> (LaurentPoly, LaurentPoly) {
    let rhs = theorem1_product(n as usize).coeff(n as usize).clone();
    (theorem1_lhs(n), rhs)
}

// ---------------------------------------------------------------------------
// Triple product

/// `1 + Σ_{n≥1} (a^n + a^{-n}) q^{n^2}`, in symbol `s`.
pub fn theta_series_in(s: Symbol, order: usize) -> QSeries {
    let mut coeffs = vec![LaurentPoly::zero(); order + 1];
    coeffs[0] = LaurentPoly::one();
    let mut n = 1usize;
    while n * n <= order {
        coeffs[n * n] = &var(s, n as i32) + &var(s, -(n as i32));
        n += 1;
    }
    QSeries::from_coeffs(coeffs, order)
}

pub fn theta_series(order: usize) -> QSeries {
    theta_series_in(Symbol::A, order)
}

/// `(-aq;q^2)_∞ (-a^{-1}q;q^2)_∞ (q^2;q^2)_∞`.
pub fn jtp_product(order: usize) -> QSeries {
    let fa = pochhammer_infinite(&neg_var(Symbol::A, 1), 1, 2, order).expect("start >= 1");
    let fb = pochhammer_infinite(&neg_var(Symbol::A, -1), 1, 2, order).expect("start >= 1");
    let fq = pochhammer_infinite(&LaurentPoly::one(), 2, 2, order).expect("start >= 1");
    &(&fa * &fb) * &fq
}

/// The three-color product with `b = a^{-1}, c = -1`.
pub fn jtp_specialized_product(order: usize) -> QSeries {
    theorem1_product(order)
        .substitute(&[
            (Symbol::B, var(Symbol::A, -1)),
            (Symbol::C, LaurentPoly::constant(-1)),
        ])
        .expect("bindings are units")
}

pub fn jtp_sides(order: usize) -> (QSeries, QSeries) {
    (theta_series(order), jtp_product(order))
}

// ---------------------------------------------------------------------------
// Key identity

/// All `(α, β, γ, δ, ε, φ)` whose leading power `T_s + T_δ + T_ε + T_{φ-1}`
/// is at most `order`.
pub fn key_identity_classes(order: usize) -> Vec<[u32; 6]> {
    let mut s_max = 0usize;
    while tri(s_max as i64 + 1) <= order {
        s_max += 1;
    }
    let mut out = Vec::new();
    let mut cur = [0u32; 6];
    fn rec(pos: usize, left: u32, cur: &mut [u32; 6], out: &mut Vec<[u32; 6]>, order: usize) {
        if pos == 6 {
            if key_identity_shift(cur) <= order {
                out.push(*cur);
            }
            return;
        }
        for v in 0..=left {
            cur[pos] = v;
            rec(pos + 1, left - v, cur, out, order);
        }
        cur[pos] = 0;
    }
    rec(0, s_max as u32, &mut cur, &mut out, order);
    out
}

fn key_identity_shift(c: &[u32; 6]) -> usize {
    let s: i64 = c.iter().map(|&x| x as i64).sum();
    tri(s) + tri(c[3] as i64) + tri(c[4] as i64) + tri(c[5] as i64 - 1)
}

/// `q^{T_s+T_δ+T_ε+T_{φ-1}} (1 - q^α(1 - q^φ)) / ((q)_α ... (q)_φ)` as an
/// integer series.
pub fn key_identity_term(class: &[u32; 6], order: usize) -> QSeries {
    let shift = key_identity_shift(class);
    let (alpha, phi) = (class[0] as usize, class[5] as usize);
    let mut num = vec![0i64; alpha + phi + 1];
    num[0] += 1;
    num[alpha] -= 1;
    num[alpha + phi] += 1;
    let mut g = QSeries::from_integers(&num, order).scale(&LaurentPoly::one(), shift);
    let one = LaurentPoly::one();
    for &m in class {
        for j in 1..=m as usize {
            g.div_binomial(&one, j);
        }
    }
    g
}

/// Left side of the key identity, summing the class terms in parallel.
pub fn key_identity_lhs(order: usize, exec: Execution) -> QSeries {
    let classes = key_identity_classes(order);
    let terms = map_collect(exec, classes, |c| {
        let (i, j, k) = crate::colored::class_exponents(&c);
        (
            Monomial::new(i as i32, j as i32, k as i32, 0),
            key_identity_term(&c, order),
        )
    });
    let mut coeffs = vec![LaurentPoly::zero(); order + 1];
    for (m, series) in terms {
        for (slot, c) in coeffs.iter_mut().zip(series.coeffs()) {
            if let Some(v) = c.as_constant() {
                slot.add_term(m, &v);
            }
        }
    }
    QSeries::from_coeffs(coeffs, order)
}

/// `(-aq)_∞ (-bq)_∞ (-cq)_∞`.
pub fn key_identity_rhs(order: usize) -> QSeries {
    let f = |s| pochhammer_infinite(&neg_var(s, 1), 1, 1, order).expect("start >= 1");
    &(&f(Symbol::A) * &f(Symbol::B)) * &f(Symbol::C)
}

pub fn key_identity_sides(order: usize) -> (QSeries, QSeries) {
    (
        key_identity_lhs(order, Execution::default()),
        key_identity_rhs(order),
    )
}

// ---------------------------------------------------------------------------
// Finite identities (Gaussian binomials in base q^2)

/// Sparse integer polynomial in `q` with Laurent coefficients in `A`,
/// accumulated without truncation.
#[derive(Default)]
struct Accum {
    coeffs: Vec<LaurentPoly>,
}

impl Accum {
    /// Adds `sign * A^a_exp * q^shift * Π binomials(q^2)`.
    fn add(&mut self, sign: i64, a_exp: i32, shift: usize, binomials: &[(i64, i64)]) {
        let mut poly: Vec<BigInt> = vec![BigInt::from(sign)];
        for &(n, m) in binomials {
            let b = gaussian_binomial_poly(n, m);
            if b.is_empty() {
                return;
            }
            let mut next = vec![BigInt::from(0); poly.len() + 2 * (b.len() - 1)];
            for (i, x) in poly.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    next[i + 2 * j] += x * y;
                }
            }
            poly = next;
        }
        let needed = shift + poly.len();
        if self.coeffs.len() < needed {
            self.coeffs.resize(needed, LaurentPoly::zero());
        }
        let m = Monomial::var(Symbol::UpperA, a_exp);
        for (k, c) in poly.iter().enumerate() {
            self.coeffs[shift + k].add_term(m, c);
        }
    }

    fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    fn into_series(self, order: usize) -> QSeries {
        QSeries::from_coeffs(self.coeffs, order)
    }
}

fn finite_jtp_lhs_accum(l: u32) -> Accum {
    let l = l as i64;
    let mut acc = Accum::default();
    for ell in 0..=l {
        let shift = 2 * (tri(l) - tri(ell));
        for n in -ell..=ell {
            acc.add(
                sign((l + ell) % 2 == 1),
                n as i32,
                shift + (n * n) as usize,
                &[],
            );
        }
    }
    acc
}

fn triple_sum(
    acc: &mut Accum,
    outer_sign: i64,
    shift: usize,
    top: i64,
    j_signed: bool,
    a_of: impl Fn(i64, i64) -> i32,
) {
    for i in 0..=top {
        for j in 0..=top {
            for k in 0..=top {
                let s = if j_signed {
                    sign(j % 2 == 1)
                } else {
                    sign(k % 2 == 1)
                };
                let e = 2 * (tri(i) + tri(j) + tri(k)) - (i + j) as usize;
                acc.add(
                    outer_sign * s,
                    a_of(i, j),
                    shift + e,
                    &[(top - k, i), (top - i, j), (top - j, k)],
                );
            }
        }
    }
}

fn finite_jtp_rhs_accum(l: u32) -> Accum {
    let mut acc = Accum::default();
    triple_sum(&mut acc, 1, 0, l as i64, false, |i, j| (i - j) as i32);
    acc
}

fn finite_lebesgue_lhs_accum(l: u32) -> Accum {
    let l = l as i64;
    let mut acc = Accum::default();
    for r in 0..=l {
        for s in 0..=(r + 1).min(l) {
            acc.add(
                sign(s % 2 == 1),
                2 * s as i32,
                2 * (tri(r) + tri(s)),
                &[(l - s, r), (r + 1, s)],
            );
        }
    }
    acc
}

fn finite_lebesgue_rhs_accum(l: u32) -> Accum {
    let l = l as i64;
    let mut acc = Accum::default();
    triple_sum(&mut acc, 1, 0, l + 1, true, |i, j| (i + j) as i32);
    triple_sum(&mut acc, -1, 2 * (l as usize + 1), l, true, |i, j| {
        (i + j) as i32
    });
    acc
}

/// Highest power of `q` occurring on either side of the finite triple product
/// identity at `L`.
pub fn finite_jtp_degree(l: u32) -> usize {
    finite_jtp_lhs_accum(l)
        .degree()
        .max(finite_jtp_rhs_accum(l).degree())
}

pub fn finite_lebesgue_degree(l: u32) -> usize {
    finite_lebesgue_lhs_accum(l)
        .degree()
        .max(finite_lebesgue_rhs_accum(l).degree())
}

/// Both sides of the finite triple product identity at `L`, truncated at `order`.
pub fn finite_jtp_sides(l: u32, order: usize) -> (QSeries, QSeries) {
    (
        finite_jtp_lhs_accum(l).into_series(order),
        finite_jtp_rhs_accum(l).into_series(order),
    )
}

/// Both sides of the finite Lebesgue identity at `L`, truncated at `order`.
pub fn finite_lebesgue_sides(l: u32, order: usize) -> (QSeries, QSeries) {
    (
        finite_lebesgue_lhs_accum(l).into_series(order),
        finite_lebesgue_rhs_accum(l).into_series(order),
    )
}

/// Powers `0..w` on which the finite triple product side at `L` (in `A`)
/// matches the theta series; returns `w`, the first disagreement, or
/// `order + 1` if there is none.
pub fn finite_jtp_theta_window(l: u32, order: usize) -> usize {
    let (lhs, _) = finite_jtp_sides(l, order);
    let theta = theta_series_in(Symbol::UpperA, order);
    lhs.first_difference(&theta).unwrap_or(order + 1)
}

// ---------------------------------------------------------------------------
// Lebesgue's identity dilated by 2

/// `Σ_r q^{2T_r} (A^2 q^4; q^2)_r / (q^2; q^2)_r`.
fn lebesgue_sum(order: usize) -> QSeries {
    let a2 = var(Symbol::UpperA, 2);
    let one = LaurentPoly::one();
    let mut total = QSeries::zero(order);
    let mut r = 0usize;
    while 2 * tri(r as i64) <= order {
        let mut t = pochhammer_finite(&a2, 4, 2, r, order).scale(&one, 2 * tri(r as i64));
        for j in 1..=r {
            t.div_binomial(&one, 2 * j);
        }
        total = &total + &t;
        r += 1;
    }
    total
}

/// `(1 - A^2 q^2) Σ_r q^{2T_r} (A^2 q^4; q^2)_r / (q^2; q^2)_r`.
pub fn lebesgue_lhs(order: usize) -> QSeries {
    let mut s = lebesgue_sum(order);
    s.mul_binomial(&var(Symbol::UpperA, 2), 2);
    s
}

/// The prefactor exactly as typeset, `(1 - A q^2)`; it does not match the
/// products.
pub fn lebesgue_lhs_printed(order: usize) -> QSeries {
    let mut s = lebesgue_sum(order);
    s.mul_binomial(&var(Symbol::UpperA, 1), 2);
    s
}

/// `(-q^2; q^2)_∞ (A^2 q^2; q^4)_∞`.
pub fn lebesgue_rhs(order: usize) -> QSeries {
    let f = pochhammer_infinite(&LaurentPoly::constant(-1), 2, 2, order).expect("start >= 1");
    let g = pochhammer_infinite(&var(Symbol::UpperA, 2), 2, 4, order).expect("start >= 1");
    &f * &g
}

/// `(A^2 q^2; q^4)_∞ / (q^2; q^4)_∞`.
pub fn lebesgue_quotient(order: usize) -> QSeries {
    let g = pochhammer_infinite(&var(Symbol::UpperA, 2), 2, 4, order).expect("start >= 1");
    let h = reciprocal_pochhammer_infinite(&LaurentPoly::one(), 2, 4, order).expect("start >= 1");
    &g * &h
}

pub fn lebesgue_sides(order: usize) -> (QSeries, QSeries) {
    (lebesgue_lhs(order), lebesgue_rhs(order))
}
