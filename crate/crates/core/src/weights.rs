//! Weight functions on Rogers-Ramanujan partitions.
//!
//! All weights are multiplicative: symbolic and power-of-two weights over
//! chains, Fibonacci weights over strings.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::{Chain, Partition, StringBlock};
use crate::polyq::{LaurentPoly, Monomial, Symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightKind {
    /// Product of symbolic chain weights in `a, b, c`.
    OmegaSymbolic,
    /// `2^{ν_d}` on partitions into odd parts.
    Omega1,
    /// `2^k`, `k` = odd chains with least part > 1.
    TheoremA,
    /// Chains weighted 2, `2ℓ`, `4ℓ` (even, odd from 1, odd above 1).
    TheoremB,
    /// `2^r`, `r` = even chains with least part > 2; no part 1 allowed.
    Omega2,
    /// `2^r`, `r` = odd chains with least part > 1.
    Omega3,
    /// `2^r`, `r` = even chains.
    Omega4,
    /// Fibonacci string weight for ranks in `[-1, 2]`.
    Omega5,
    /// Fibonacci string weight for ranks in `[0, 3]`.
    Omega6,
    /// Fibonacci string weight for ranks in `[1, 4]`; no part 1 allowed.
    Omega7,
}

impl WeightKind {
    pub const ALL: [WeightKind; 10] = [
        WeightKind::OmegaSymbolic,
        WeightKind::Omega1,
        WeightKind::TheoremA,
        WeightKind::TheoremB,
        WeightKind::Omega2,
        WeightKind::Omega3,
        WeightKind::Omega4,
        WeightKind::Omega5,
        WeightKind::Omega6,
        WeightKind::Omega7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WeightKind::OmegaSymbolic => "OMEGA_SYMBOLIC",
            WeightKind::Omega1 => "OMEGA1",
            WeightKind::TheoremA => "THEOREM_A",
            WeightKind::TheoremB => "THEOREM_B",
            WeightKind::Omega2 => "OMEGA2",
            WeightKind::Omega3 => "OMEGA3",
            WeightKind::Omega4 => "OMEGA4",
            WeightKind::Omega5 => "OMEGA5",
            WeightKind::Omega6 => "OMEGA6",
            WeightKind::Omega7 => "OMEGA7",
        }
    }

    /// Whether the kind is defined on `p`.
    pub fn domain_check(self, p: &Partition) -> Result<()> {
        let fail = |reason| {
            Err(Error::WeightDomain {
                kind: self.name(),
                parts: p.parts().to_vec(),
                reason,
            })
        };
        match self {
            WeightKind::Omega1 => {
                if p.parts().iter().all(|x| x % 2 == 1) {
                    Ok(())
                } else {
                    fail("parts must be odd")
                }
            }
            WeightKind::Omega2 | WeightKind::Omega7 => {
                if !p.is_rogers_ramanujan() {
                    fail("gaps must be at least 2")
                } else if p.contains_part(1) {
                    fail("part 1 is not allowed")
                } else {
                    Ok(())
                }
            }
            _ => {
                if p.is_rogers_ramanujan() {
                    Ok(())
                } else {
                    fail("gaps must be at least 2")
                }
            }
        }
    }
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WeightKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.to_ascii_uppercase();
        WeightKind::ALL
            .into_iter()
            .find(|k| k.name() == upper)
            .ok_or_else(|| Error::UnknownWeightKind(s.to_string()))
    }
}

/// Value of a weight: a polynomial for the symbolic kind, an integer otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Weight {
    Symbolic(LaurentPoly),
    Integer(u64),
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Symbolic(p) => write!(f, "{p}"),
            Weight::Integer(v) => write!(f, "{v}"),
        }
    }
}

const FIB: [u64; 94] = {
    let mut t = [0u64; 94];
    t[1] = 1;
    let mut i = 2;
    while i < 94 {
        t[i] = t[i - 1] + t[i - 2];
        i += 1;
    }
    t
};

/// `F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}`; exact for `n <= 93`.
pub fn fibonacci(n: u32) -> u64 {
    FIB[n as usize]
}

/// Number of fillings of `n` boxes in a row with no two adjacent empty boxes,
/// by exhaustive search over all `2^n` assignments.
pub fn box_fillings(n: u32) -> u64 {
    assert!(n < 64, "box_fillings enumerates 2^n assignments");
    let full: u64 = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    (0..=full)
        .filter(|filled| {
            let empty = !filled & full;
            empty & (empty >> 1) == 0
        })
        .count() as u64
}

fn sym(s: Symbol) -> LaurentPoly {
    LaurentPoly::var(s)
}

/// `Σ_{k=1}^{ℓ-1} a^k b^{ℓ-k}`.
fn mixed_sum(length: u32) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for k in 1..length as i32 {
        out.add_term(Monomial::new(k, length as i32 - k, 0, 0), &1.into());
    }
    out
}

/// `a^ℓ + (1+c) Σ a^k b^{ℓ-k} + b^ℓ`: chains starting at 1.
fn odd_from_one(length: u32) -> LaurentPoly {
    let one_plus_c = &LaurentPoly::one() + &sym(Symbol::C);
    let l = length as i32;
    let mut w = &one_plus_c * &mixed_sum(length);
    w.add_term(Monomial::new(l, 0, 0, 0), &1.into());
    w.add_term(Monomial::new(0, l, 0, 0), &1.into());
    w
}

/// Symbolic weight of one chain.
///
/// - even least part: `c^{ℓ-1}(c + ab)`
/// - least part 1: `a^ℓ + (1+c) Σ_{k=1}^{ℓ-1} a^k b^{ℓ-k} + b^ℓ`
/// - odd least part > 1: `(1+c)a^ℓ + (1+c)^2 Σ_{k=1}^{ℓ-1} a^k b^{ℓ-k} + (1+c)b^ℓ`
pub fn chain_weight(ch: &Chain) -> LaurentPoly {
    let one_plus_c = &LaurentPoly::one() + &sym(Symbol::C);
    if ch.is_even() {
        let c_pow = LaurentPoly::monomial(Monomial::var(Symbol::C, ch.length as i32 - 1));
        let c_plus_ab = &sym(Symbol::C) + &(&sym(Symbol::A) * &sym(Symbol::B));
        &c_pow * &c_plus_ab
    } else if ch.least == 1 {
        odd_from_one(ch.length)
    } else {
        &one_plus_c * &odd_from_one(ch.length)
    }
}

/// Product of [`chain_weight`] over the chains of a Rogers-Ramanujan partition.
pub fn symbolic_weight(p: &Partition) -> Result<LaurentPoly> {
    Ok(p.chains()?
        .iter()
        .fold(LaurentPoly::one(), |acc, ch| &acc * &chain_weight(ch)))
}

fn theorem_b_chain(ch: &Chain) -> u64 {
    match (ch.is_even(), ch.least) {
        (true, _) => 2,
        (false, 1) => 2 * ch.length as u64,
        (false, _) => 4 * ch.length as u64,
    }
}

fn omega5_string(s: &StringBlock) -> u64 {
    if s.contains(1) {
        fibonacci(s.eta() + 2)
    } else {
        fibonacci(s.eta() + 3)
    }
}

fn omega6_string(s: &StringBlock) -> u64 {
    let e = s.eta();
    if s.least() >= 3 {
        fibonacci(e + 3)
    } else if (s.contains(1) && !s.contains(3) && !s.contains(4)) || s.contains(2) {
        fibonacci(e + 2)
    } else {
        fibonacci(e + 1)
    }
}

fn omega7_string(s: &StringBlock) -> u64 {
    let e = s.eta();
    if s.least() >= 4 {
        fibonacci(e + 3)
    } else if (s.contains(2) && !s.contains(4) && !s.contains(5)) || s.contains(3) {
        fibonacci(e + 2)
    } else {
        fibonacci(e + 1)
    }
}

fn pow2(k: usize) -> u64 {
    1u64 << k
}

/// Integer-valued weight of `p`. The symbolic kind is rejected here; use
/// [`symbolic_weight`] or [`weight`].
pub fn integer_weight(p: &Partition, kind: WeightKind) -> Result<u64> {
    kind.domain_check(p)?;
    let chains = || p.chains();
    let strings = || p.strings();
    let w = match kind {
        WeightKind::OmegaSymbolic => {
            return Err(Error::WeightDomain {
                kind: kind.name(),
                parts: p.parts().to_vec(),
                reason: "symbolic weight has no integer value",
            })
        }
        WeightKind::Omega1 => pow2(p.nu_d()),
        WeightKind::TheoremA | WeightKind::Omega3 => pow2(
            chains()?
                .iter()
                .filter(|c| !c.is_even() && c.least > 1)
                .count(),
        ),
        WeightKind::Omega2 => pow2(
            chains()?
                .iter()
                .filter(|c| c.is_even() && c.least > 2)
                .count(),
        ),
        WeightKind::Omega4 => pow2(chains()?.iter().filter(|c| c.is_even()).count()),
        WeightKind::TheoremB => chains()?.iter().map(theorem_b_chain).product(),
        WeightKind::Omega5 => strings()?.iter().map(omega5_string).product(),
        WeightKind::Omega6 => strings()?.iter().map(omega6_string).product(),
        WeightKind::Omega7 => strings()?.iter().map(omega7_string).product(),
    };
    Ok(w)
}

pub fn weight(p: &Partition, kind: WeightKind) -> Result<Weight> {
    match kind {
        WeightKind::OmegaSymbolic => symbolic_weight(p).map(Weight::Symbolic),
        _ => integer_weight(p, kind).map(Weight::Integer),
    }
}

/// Alternative readings of two weight formulas that do not satisfy the
/// identities. Kept so tests can show that they fail.
pub mod misreadings {
    use super::*;

    /// Third chain case with `b^ℓ` doubled inside the braces:
    /// `(1+c){a^ℓ + (1+c)Σ a^k b^{ℓ-k} + 2b^ℓ}`.
    pub fn chain_weight_doubled_b(ch: &Chain) -> LaurentPoly {
        if ch.is_even() || ch.least == 1 {
            return chain_weight(ch);
        }
        let one_plus_c = &LaurentPoly::one() + &sym(Symbol::C);
        let mut inner = odd_from_one(ch.length);
        inner.add_term(Monomial::new(0, ch.length as i32, 0, 0), &1.into());
        &one_plus_c * &inner
    }

    /// String weight with the two Fibonacci cases swapped: `F_{η+3}` when the
    /// string contains 1, `F_{η+2}` otherwise.
    pub fn omega5_swapped(p: &Partition) -> Result<u64> {
        WeightKind::Omega5.domain_check(p)?;
        Ok(p.strings()?
            .iter()
            .map(|s| {
                if s.contains(1) {
                    fibonacci(s.eta() + 3)
                } else {
                    fibonacci(s.eta() + 2)
                }
            })
            .product())
    }
}
