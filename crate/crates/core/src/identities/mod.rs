//! Both sides of every identity, and a uniform verification harness.

pub mod counting;
pub mod symbolic;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::colored::{
    aggregate_by_exponents, class_generating_function, goellnitz_counts,
    goellnitz_difference_count, monomial_aggregate, refined_counts, vector_counts, ColorClass,
    Transform,
};
use crate::error::{Error, Result};
use crate::par::{map_collect, map_range, Execution};
use crate::partitions::{enumerate, PartitionFilter};
use crate::polyq::{LaurentPoly, QSeries};
use crate::weights::WeightKind;

pub use counting::*;
pub use symbolic::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    T1,
    Jtp,
    FiniteJtp,
    Sylvester,
    ThmA,
    ThmB,
    KeyIdentity,
    Goellnitz,
    ThmC,
    Eq5_10,
    ThmR,
    ThmRPrime,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    Lebesgue,
    FiniteLebesgue,
    Surjection,
}

impl TheoremId {
    pub const ALL: [TheoremId; 21] = [
        TheoremId::T1,
        TheoremId::Jtp,
        TheoremId::FiniteJtp,
        TheoremId::Sylvester,
        TheoremId::ThmA,
        TheoremId::ThmB,
        TheoremId::KeyIdentity,
        TheoremId::Goellnitz,
        TheoremId::ThmC,
        TheoremId::Eq5_10,
        TheoremId::ThmR,
        TheoremId::ThmRPrime,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::T7,
        TheoremId::Lebesgue,
        TheoremId::FiniteLebesgue,
        TheoremId::Surjection,
    ];

    pub fn name(self) -> &'static str {
        use TheoremId::*;
        match self {
            T1 => "T1",
            Jtp => "JTP",
            FiniteJtp => "FINITE_JTP",
            Sylvester => "SYLVESTER",
            ThmA => "THM_A",
            ThmB => "THM_B",
            KeyIdentity => "KEY_IDENTITY",
            Goellnitz => "GOELLNITZ",
            ThmC => "THM_C",
            Eq5_10 => "EQ_5_10",
            ThmR => "THM_R",
            ThmRPrime => "THM_R_PRIME",
            T2 => "T2",
            T3 => "T3",
            T4 => "T4",
            T5 => "T5",
            T6 => "T6",
            T7 => "T7",
            Lebesgue => "LEBESGUE",
            FiniteLebesgue => "FINITE_LEBESGUE",
            Surjection => "SURJECTION",
        }
    }

    /// Default bound: max `n` for counting identities, q-order for series
    /// identities, max `L` for the finite identities.
    pub fn default_bound(self) -> u32 {
        use TheoremId::*;
        match self {
            T1 | Lebesgue => 30,
            Jtp => 100,
            FiniteJtp | FiniteLebesgue => 5,
            KeyIdentity | ThmC | Eq5_10 | Surjection => 25,
            _ => 40,
        }
    }

    /// The `(k, i)` pair and weight behind Theorems 2-7.
    pub fn weighted_pair(self) -> Option<((u32, u32), WeightKind)> {
        use TheoremId::*;
        let idx = match self {
            T2 => 0,
            T3 => 1,
            T4 => 2,
            T5 => 3,
            T6 => 4,
            T7 => 5,
            _ => return None,
        };
        Some(STUDIED_PAIRS[idx])
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.to_ascii_uppercase();
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == upper)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Case {
    pub index: i64,
    pub lhs: String,
    pub rhs: String,
    #[serde(rename = "match")]
    pub matched: bool,
}

impl Case {
    fn new(index: usize, lhs: impl ToString, rhs: impl ToString, matched: bool) -> Self {
        Case {
            index: index as i64,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            matched,
        }
    }

    fn compare<T: PartialEq + ToString>(index: usize, lhs: T, rhs: T) -> Self {
        let matched = lhs == rhs;
        Self::new(index, lhs.to_string(), rhs.to_string(), matched)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub theorem: TheoremId,
    pub bound: u32,
    pub cases: Vec<Case>,
    pub passed: bool,
}

impl Report {
    fn new(theorem: TheoremId, bound: u32, cases: Vec<Case>) -> Self {
        let passed = cases.iter().all(|c| c.matched);
        Report {
            theorem,
            bound,
            cases,
            passed,
        }
    }

    pub fn first_failure(&self) -> Option<&Case> {
        self.cases.iter().find(|c| !c.matched)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (bound {})", self.theorem, self.bound)?;
        for c in &self.cases {
            let mark = if c.matched { "ok" } else { "MISMATCH" };
            writeln!(f, "  {:>3}: {} | {} [{}]", c.index, c.lhs, c.rhs, mark)?;
        }
        let verdict = if self.passed { "PASSED" } else { "FAILED" };
        write!(
            f,
            "{}: {} ({} cases)",
            self.theorem,
            verdict,
            self.cases.len()
        )
    }
}

pub fn verify(id: TheoremId, bound: u32) -> Report {
    verify_with(id, bound, Execution::default())
}

pub fn verify_all(exec: Execution) -> Vec<Report> {
    TheoremId::ALL
        .into_iter()
        .map(|id| verify_with(id, id.default_bound(), exec))
        .collect()
}

fn series_cases(lhs: &QSeries, rhs: &QSeries) -> Vec<Case> {
    lhs.coeffs()
        .iter()
        .zip(rhs.coeffs())
        .enumerate()
        .map(|(k, (x, y))| Case::compare(k, x, y))
        .collect()
}

fn render_map<K: fmt::Debug, V: fmt::Display>(m: &BTreeMap<K, V>) -> String {
    let body: Vec<String> = m.iter().map(|(k, v)| format!("{k:?}:{v}")).collect();
    format!("{{{}}}", body.join(", "))
}

pub fn verify_with(id: TheoremId, bound: u32, exec: Execution) -> Report {
    use TheoremId::*;
    let n_max = bound as usize;
    let cases = match id {
        T1 => {
            let product = theorem1_product(n_max);
            map_range(exec, n_max, |n| {
                let lhs = theorem1_lhs(n as u32);
                let rhs = product.coeff(n).clone();
                let vector = theorem1_vector_rhs(n as u32);
                let matched = lhs == rhs && rhs == vector;
                Case::new(n, &lhs, &rhs, matched)
            })
        }
        Jtp => {
            let (lhs, rhs) = jtp_sides(n_max);
            let specialized = jtp_specialized_product(n_max);
            let mut cases = series_cases(&lhs, &rhs);
            for (c, s) in cases.iter_mut().zip(specialized.coeffs()) {
                c.matched &= c.rhs == s.to_string();
            }
            cases
        }
        FiniteJtp => map_range(exec, n_max, |l| {
            let order = finite_jtp_degree(l as u32);
            let (lhs, rhs) = finite_jtp_sides(l as u32, order);
            Case::compare(l, lhs, rhs)
        }),
        FiniteLebesgue => map_range(exec, n_max, |l| {
            let order = finite_lebesgue_degree(l as u32);
            let (lhs, rhs) = finite_lebesgue_sides(l as u32, order);
            Case::compare(l, lhs, rhs)
        }),
        Sylvester => map_range(exec, n_max, |n| {
            let counts = sylvester_counts(n as u32);
            let odd: BTreeMap<usize, u64> = counts.iter().map(|(&k, v)| (k, v.0)).collect();
            let distinct: BTreeMap<usize, u64> = counts.iter().map(|(&k, v)| (k, v.1)).collect();
            let (wl, wr) = sylvester_weighted(n as u32);
            let (sl, sr) = sylvester_specialized(n as u32);
            let matched = odd == distinct && wl == wr && sl == sr && sl == wl_at_minus(&wl);
            Case::new(
                n,
                format!("{} ; {}", render_map(&odd), wl),
                format!("{} ; {}", render_map(&distinct), wr),
                matched,
            )
        }),
        ThmA => map_range(exec, n_max, |n| {
            let (l, r) = theorem_a_sides(n as u32);
            Case::compare(n, l, r)
        }),
        ThmB => map_range(exec, n_max, |n| {
            let (l, r) = theorem_b_sides(n as u32);
            Case::compare(n, l, r)
        }),
        KeyIdentity => {
            let lhs = key_identity_lhs(n_max, exec);
            series_cases(&lhs, &key_identity_rhs(n_max))
        }
        Goellnitz => map_range(exec, n_max, |n| {
            let (b, c) = goellnitz_counts(n as u32);
            let direct = goellnitz_difference_count(n as u32);
            Case::new(n, b, c, b == c && c == direct)
        }),
        ThmC => map_range(exec, n_max, |n| {
            let lhs = vector_counts(n as u32);
            let rhs = aggregate_by_exponents(&refined_counts(n as u32, Transform::Plain));
            Case::compare(n, render_map(&lhs), render_map(&rhs))
        }),
        Eq5_10 => eq_5_10_cases(n_max, exec),
        ThmR => map_range(exec, n_max, |n| {
            let pairs = [(6, 1), (6, 2), (7, 1), (7, 2), (7, 3)];
            let q: Vec<u64> = pairs
                .iter()
                .map(|&(k, i)| rank_count(n as u32, k, i).expect("valid pair"))
                .collect();
            let a: Vec<u64> = pairs
                .iter()
                .map(|&(k, i)| modular_count(n as u32, k, i).expect("valid pair"))
                .collect();
            Case::compare(n, format!("{q:?}"), format!("{a:?}"))
        }),
        ThmRPrime => {
            let gf = modular_gf(6, 3, n_max).expect("valid pair");
            map_range(exec, n_max, |n| {
                let q = rank_count(n as u32, 6, 3).expect("valid pair");
                Case::compare(n, q.to_string(), gf.coeff(n).to_string())
            })
        }
        T2 | T3 | T4 | T5 | T6 | T7 => weighted_cases(id, n_max, exec),
        Lebesgue => {
            let (lhs, rhs) = lebesgue_sides(n_max);
            let quotient = lebesgue_quotient(n_max);
            let mut cases = series_cases(&lhs, &rhs);
            for (c, s) in cases.iter_mut().zip(quotient.coeffs()) {
                c.matched &= c.rhs == s.to_string();
            }
            cases
        }
        Surjection => map_range(exec, n_max, surjection_case),
    };
    Report::new(id, bound, cases)
}

/// `Σ(1+x)^k` read at `x = ab` equals the specialized symbolic sum at
/// `b = -a`, `x = -a^2`.
fn wl_at_minus(wl: &LaurentPoly) -> LaurentPoly {
    use crate::polyq::{Monomial, Symbol};
    wl.substitute(&[(
        Symbol::B,
        LaurentPoly::term(-1, Monomial::var(Symbol::A, 1)),
    )])
    .expect("polynomial binding")
}

fn eq_5_10_cases(n_max: usize, exec: Execution) -> Vec<Case> {
    let per_n = map_range(exec, n_max, |n| refined_counts(n as u32, Transform::Plain));
    let classes: Vec<ColorClass> = key_identity_classes_up_to_size(4);
    map_collect(
        exec,
        classes.into_iter().enumerate().collect(),
        |(idx, class)| {
            let brute: Vec<u64> = per_n
                .iter()
                .map(|m| m.get(&class).copied().unwrap_or(0))
                .collect();
            let brute = QSeries::from_integers(&brute, n_max);
            let formula = class_generating_function(&class, n_max);
            let label = format!("{class:?}");
            let matched = brute == formula;
            let diag = match brute.first_difference(&formula) {
                Some(k) => format!(" (first difference at q^{k})"),
                None => String::new(),
            };
            Case::new(
                idx,
                format!("{label}: {brute}"),
                format!("{label}: {formula}{diag}"),
                matched,
            )
        },
    )
}

/// All color classes with `α+β+γ+δ+ε+φ ≤ s_max`, in lexicographic order.
pub fn key_identity_classes_up_to_size(s_max: u32) -> Vec<ColorClass> {
    let mut out = Vec::new();
    let mut cur = [0u32; 6];
    fn rec(pos: usize, left: u32, cur: &mut ColorClass, out: &mut Vec<ColorClass>) {
        if pos == 6 {
            out.push(*cur);
            return;
        }
        for v in 0..=left {
            cur[pos] = v;
            rec(pos + 1, left - v, cur, out);
        }
        cur[pos] = 0;
    }
    rec(0, s_max, &mut cur, &mut out);
    out
}

fn weighted_cases(id: TheoremId, n_max: usize, exec: Execution) -> Vec<Case> {
    let ((k, i), kind) = id.weighted_pair().expect("weighted theorem");
    let gf = modular_gf(k, i, n_max).expect("valid pair");
    let signed = if id == TheoremId::T4 {
        Some(signed_product(n_max))
    } else {
        None
    };
    map_range(exec, n_max, |n| {
        let a = gf.coeff(n).to_string();
        let q = rank_count(n as u32, k, i).expect("valid pair").to_string();
        let w = weighted_rr_sum(n as u32, kind)
            .expect("domain filter")
            .to_string();
        let mut lhs_parts = vec![a.clone()];
        let mut agree = a == q;
        if 2 * i != k {
            let direct = modular_count(n as u32, k, i)
                .expect("valid pair")
                .to_string();
            agree &= direct == a;
        }
        if let Some(ref p) = signed {
            let s = signed_unrestricted(n as u32).to_string();
            agree &= s == a && p.coeff(n).to_string() == a;
        }
        if a != q {
            lhs_parts = vec![format!("A={a}"), format!("Q={q}")];
        }
        let matched = agree && w == a;
        Case::new(n, lhs_parts.join(" "), w, matched)
    })
}

fn surjection_case(n: usize) -> Case {
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    let mut matched = true;
    let targets: Vec<_> = enumerate(n as u32, &PartitionFilter::RogersRamanujan).collect();
    for ((k, i), _) in STUDIED_PAIRS {
        let pre = preimage_counts(n as u32, k, i).expect("valid pair");
        let total: u64 = pre.values().sum();
        let mut predicted_total = 0;
        for t in &targets {
            let got = pre.get(t).copied().unwrap_or(0);
            let want = predicted_preimages(t, k, i).expect("studied pair");
            predicted_total += want;
            matched &= got == want;
        }
        // every preimage lands on a Rogers-Ramanujan target
        matched &= pre.keys().all(|t| t.is_rogers_ramanujan());
        lhs.push(total);
        rhs.push(predicted_total);
    }
    Case::new(n, format!("{lhs:?}"), format!("{rhs:?}"), matched)
}

/// The colored oracle for the symbolic weight: quadratic Type-1 aggregate
/// against `Σ_R ω`.
pub fn colored_oracle_sides(n: u32) -> (LaurentPoly, LaurentPoly) {
    (monomial_aggregate(n, Transform::Quadratic), theorem1_lhs(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.name().parse::<TheoremId>().unwrap(), id);
        }
        assert!(matches!(
            "T9".parse::<TheoremId>(),
            Err(Error::UnknownTheorem(_))
        ));
    }

    #[test]
    fn worked_examples() {
        let r = verify(TheoremId::T2, 4);
        assert!(r.passed);
        assert_eq!(
            (r.cases[4].lhs.as_str(), r.cases[4].rhs.as_str()),
            ("2", "2")
        );
        let r = verify(TheoremId::Jtp, 0);
        assert!(r.passed);
        let r = verify(TheoremId::T5, 4);
        assert!(r.passed);
        assert_eq!(
            (r.cases[4].lhs.as_str(), r.cases[4].rhs.as_str()),
            ("3", "3")
        );
    }

    #[test]
    fn small_bounds_pass_in_both_modes() {
        for id in TheoremId::ALL {
            let bound = id.default_bound().min(8);
            let par = verify_with(id, bound, Execution::Parallel);
            let seq = verify_with(id, bound, Execution::Sequential);
            assert!(par.passed, "{}", par);
            assert_eq!(par, seq);
        }
    }

    #[test]
    fn colored_oracle_small() {
        for n in 0..=8 {
            let (l, r) = colored_oracle_sides(n);
            assert_eq!(l, r, "n = {n}");
        }
    }
}
