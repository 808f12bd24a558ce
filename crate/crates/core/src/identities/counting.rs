//! Integer-valued sides: Sylvester, Theorems A and B, the successive-rank
//! theorems and their weighted Rogers-Ramanujan forms.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partitions::{count, enumerate, Partition, PartitionFilter};
use crate::polyq::{
    pochhammer_infinite, reciprocal_pochhammer_infinite, LaurentPoly, Monomial, QSeries, Symbol,
};
use crate::weights::{integer_weight, symbolic_weight, WeightKind};

/// The six `(k, i)` pairs whose rank intervals are studied, with the weight
/// that counts preimages under the hook map.
pub const STUDIED_PAIRS: [((u32, u32), WeightKind); 6] = [
    ((6, 1), WeightKind::Omega2),
    ((6, 2), WeightKind::Omega3),
    ((6, 3), WeightKind::Omega4),
    ((7, 3), WeightKind::Omega5),
    ((7, 2), WeightKind::Omega6),
    ((7, 1), WeightKind::Omega7),
];

pub fn weight_for_pair(k: u32, i: u32) -> Option<WeightKind> {
    STUDIED_PAIRS
        .iter()
        .find(|(pair, _)| *pair == (k, i))
        .map(|(_, w)| *w)
}

fn check_modulus(k: u32, i: u32) -> Result<()> {
    if i >= 1 && 2 * i <= k {
        Ok(())
    } else {
        Err(Error::InvalidModulus { k, i })
    }
}

/// Successive ranks allowed for `Q_{k,i}`: `[-i+2, k-i-2]`.
pub fn rank_interval(k: u32, i: u32) -> (i64, i64) {
    (2 - i as i64, k as i64 - i as i64 - 2)
}

/// `D(n)`: partitions into distinct parts.
pub fn distinct_count(n: u32) -> u64 {
    count(n, &PartitionFilter::Distinct)
}

fn maximal_runs(p: &Partition) -> usize {
    let parts = p.parts();
    if parts.is_empty() {
        return 0;
    }
    1 + parts.windows(2).filter(|w| w[0] != w[1] + 1).count()
}

/// `k -> (odd-part partitions with k different parts, distinct-part
/// partitions forming k maximal runs of consecutive integers)`.
pub fn sylvester_counts(n: u32) -> BTreeMap<usize, (u64, u64)> {
    let mut out: BTreeMap<usize, (u64, u64)> = BTreeMap::new();
    for p in enumerate(n, &PartitionFilter::OddParts) {
        out.entry(p.nu_d()).or_default().0 += 1;
    }
    for p in enumerate(n, &PartitionFilter::Distinct) {
        out.entry(maximal_runs(&p)).or_default().1 += 1;
    }
    out
}

fn one_plus_ab() -> LaurentPoly {
    &LaurentPoly::one() + &LaurentPoly::monomial(Monomial::new(1, 1, 0, 0))
}

/// Dilated weighted form, as polynomials in `x = ab`:
/// `Σ (1+x)^{#chains}` over Rogers-Ramanujan partitions of `n` into even
/// parts against `Σ (1+x)^{ν_d}` over partitions of `n` into parts `≡ 2 (mod 4)`.
pub fn sylvester_weighted(n: u32) -> (LaurentPoly, LaurentPoly) {
    let base = one_plus_ab();
    let mut lhs = LaurentPoly::zero();
    for p in enumerate(n, &PartitionFilter::RogersRamanujan) {
        if p.parts().iter().all(|x| x % 2 == 0) {
            let chains = p.chains().expect("enumerated as Rogers-Ramanujan").len();
            lhs += &base.pow(chains as u32);
        }
    }
    let mut rhs = LaurentPoly::zero();
    for p in enumerate(n, &PartitionFilter::parts_allowed(4, [2])) {
        rhs += &base.pow(p.nu_d() as u32);
    }
    (lhs, rhs)
}

/// The same comparison reached through the symbolic weight: the sum of the
/// chain weights over all Rogers-Ramanujan partitions of `n` at `c = 1,
/// b = -a`, against `Σ (1 - a^2)^{ν_d}` over parts `≡ 2 (mod 4)`.
pub fn sylvester_specialized(n: u32) -> (LaurentPoly, LaurentPoly) {
    let binds = [
        (Symbol::C, LaurentPoly::one()),
        (
            Symbol::B,
            LaurentPoly::term(-1, Monomial::var(Symbol::A, 1)),
        ),
    ];
    let mut lhs = LaurentPoly::zero();
    for p in enumerate(n, &PartitionFilter::RogersRamanujan) {
        let w = symbolic_weight(&p).expect("enumerated as Rogers-Ramanujan");
        lhs += &w.substitute(&binds).expect("bindings are polynomial");
    }
    let base = &LaurentPoly::one() - &LaurentPoly::monomial(Monomial::var(Symbol::A, 2));
    let mut rhs = LaurentPoly::zero();
    for p in enumerate(n, &PartitionFilter::parts_allowed(4, [2])) {
        rhs += &base.pow(p.nu_d() as u32);
    }
    (lhs, rhs)
}

/// Σ of an integer weight over its domain among partitions of `n`:
/// odd-part partitions for `Omega1`, Rogers-Ramanujan partitions without 1
/// for `Omega2`/`Omega7`, all Rogers-Ramanujan partitions otherwise.
pub fn weighted_rr_sum(n: u32, kind: WeightKind) -> Result<u64> {
    let filter = match kind {
        WeightKind::Omega1 => PartitionFilter::OddParts,
        WeightKind::Omega2 | WeightKind::Omega7 => PartitionFilter::RogersRamanujan2,
        _ => PartitionFilter::RogersRamanujan,
    };
    enumerate(n, &filter)
        .map(|p| integer_weight(&p, kind))
        .sum()
}

/// `(Σ_R ω_A, D(n))`.
pub fn theorem_a_sides(n: u32) -> (u64, u64) {
    let lhs = weighted_rr_sum(n, WeightKind::TheoremA).expect("Rogers-Ramanujan domain");
    (lhs, distinct_count(n))
}

/// `(Σ_R ω_B, Σ_{odd parts} 2^{ν_d})`.
pub fn theorem_b_sides(n: u32) -> (u64, u64) {
    let lhs = weighted_rr_sum(n, WeightKind::TheoremB).expect("Rogers-Ramanujan domain");
    let rhs = weighted_rr_sum(n, WeightKind::Omega1).expect("odd-part domain");
    (lhs, rhs)
}

/// `A_{k,i}(n)` by enumerating partitions into parts `≢ 0, ±i (mod k)`.
pub fn modular_count(n: u32, k: u32, i: u32) -> Result<u64> {
    check_modulus(k, i)?;
    if 2 * i == k {
        return Err(Error::NoPartitionInterpretation { k, i });
    }
    let allowed = (1..k).filter(|&r| r != i && r != k - i);
    Ok(count(n, &PartitionFilter::parts_allowed(k, allowed)))
}

/// `(q^k;q^k)_∞ (q^i;q^k)_∞ (q^{k-i};q^k)_∞ / (q;q)_∞`, valid for `2i = k` too.
pub fn modular_gf(k: u32, i: u32, order: usize) -> Result<QSeries> {
    check_modulus(k, i)?;
    let one = LaurentPoly::one();
    let (k, i) = (k as usize, i as usize);
    let num = &(&pochhammer_infinite(&one, k, k, order)?
        * &pochhammer_infinite(&one, i, k, order)?)
        * &pochhammer_infinite(&one, k - i, k, order)?;
    Ok(&num * &reciprocal_pochhammer_infinite(&one, 1, 1, order)?)
}

/// `Q_{k,i}(n)`: partitions of `n` whose successive ranks lie in `[-i+2, k-i-2]`.
pub fn rank_count(n: u32, k: u32, i: u32) -> Result<u64> {
    check_modulus(k, i)?;
    let (lo, hi) = rank_interval(k, i);
    Ok(count(n, &PartitionFilter::RanksIn { lo, hi }))
}

/// `Σ (-1)^{ν_3}` over all partitions of `n`.
pub fn signed_unrestricted(n: u32) -> i64 {
    enumerate(n, &PartitionFilter::All)
        .map(|p| if p.nu_3() % 2 == 0 { 1 } else { -1 })
        .sum()
}

/// `1 / ((q;q^3)_∞ (q^2;q^3)_∞ (-q^3;q^3)_∞)`.
pub fn signed_product(order: usize) -> QSeries {
    let one = LaurentPoly::one();
    let minus_one = LaurentPoly::constant(-1);
    let a = reciprocal_pochhammer_infinite(&one, 1, 3, order).expect("start >= 1");
    let b = reciprocal_pochhammer_infinite(&one, 2, 3, order).expect("start >= 1");
    let c = reciprocal_pochhammer_infinite(&minus_one, 3, 3, order).expect("start >= 1");
    &(&a * &b) * &c
}

/// Counts of rank-restricted partitions of `n`, grouped by hook partition.
pub fn preimage_counts(n: u32, k: u32, i: u32) -> Result<BTreeMap<Partition, u64>> {
    check_modulus(k, i)?;
    let (lo, hi) = rank_interval(k, i);
    let mut out = BTreeMap::new();
    for p in enumerate(n, &PartitionFilter::RanksIn { lo, hi }) {
        *out.entry(p.rank_profile().hook_partition()).or_default() += 1;
    }
    Ok(out)
}

/// Number of partitions with ranks in `[-i+2, k-i-2]` whose hook partition
/// is `target`.
pub fn preimage_count(target: &Partition, k: u32, i: u32) -> Result<u64> {
    Ok(preimage_counts(target.sigma(), k, i)?
        .get(target)
        .copied()
        .unwrap_or(0))
}

/// Weight the surjection predicts for `target`: the pair's weight on its
/// domain, 0 outside it.
pub fn predicted_preimages(target: &Partition, k: u32, i: u32) -> Result<u64> {
    let kind = weight_for_pair(k, i).ok_or(Error::InvalidModulus { k, i })?;
    match kind.domain_check(target) {
        Ok(()) => integer_weight(target, kind),
        Err(_) => Ok(0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn sylvester_small() {
        assert_eq!(
            sylvester_counts(5),
            BTreeMap::from([(1, (2, 2)), (2, (1, 1))])
        );
        assert_eq!(sylvester_counts(1), BTreeMap::from([(1, (1, 1))]));
        assert_eq!(sylvester_counts(2), BTreeMap::from([(1, (1, 1))]));
    }

    #[test]
    fn theorem_a_b_small() {
        assert_eq!(theorem_b_sides(3), (4, 4));
        assert_eq!(theorem_a_sides(4), (2, 2));
        assert_eq!(theorem_a_sides(0), (1, 1));
    }

    #[test]
    fn modular_examples() {
        assert_eq!(modular_count(4, 6, 1).unwrap(), 2);
        assert!(matches!(
            modular_count(4, 6, 3),
            Err(Error::NoPartitionInterpretation { k: 6, i: 3 })
        ));
        assert!(modular_count(4, 6, 4).is_err());
        let gf = modular_gf(6, 2, 12).unwrap();
        for n in 0..=12u32 {
            assert_eq!(
                gf.coeff(n as usize).as_constant().unwrap(),
                count(n, &PartitionFilter::OddParts).into()
            );
        }
    }

    #[test]
    fn signed_count_matches_deleted_twice_product() {
        // oracle: Σ(-1)^{ν_3} by brute force; (3)->-1, (2,1)->+1, (1,1,1)->+1
        assert_eq!(signed_unrestricted(3), 1);
        assert_eq!(signed_unrestricted(2), 2);
        let gf = modular_gf(6, 3, 3).unwrap();
        assert_eq!(gf.coeff(3).as_constant().unwrap(), 1.into());
    }

    #[test]
    fn rank_count_examples() {
        assert_eq!(rank_count(4, 6, 1).unwrap(), 2);
        assert_eq!(rank_count(2, 6, 1).unwrap(), 1);
        for (k, i) in [(6, 1), (7, 2), (6, 3)] {
            assert_eq!(rank_count(0, k, i).unwrap(), 1);
        }
    }

    #[test]
    fn weighted_sum_examples() {
        assert_eq!(weighted_rr_sum(4, WeightKind::Omega2).unwrap(), 2);
        assert_eq!(weighted_rr_sum(4, WeightKind::Omega5).unwrap(), 3);
        assert_eq!(weighted_rr_sum(3, WeightKind::Omega5).unwrap(), 2);
        assert_eq!(weighted_rr_sum(4, WeightKind::Omega6).unwrap(), 3);
    }

    #[test]
    fn preimage_examples() {
        assert_eq!(preimage_count(&p(&[4]), 6, 1).unwrap(), 2);
        assert_eq!(preimage_count(&p(&[2]), 6, 1).unwrap(), 1);
        assert_eq!(preimage_count(&p(&[1]), 7, 1).unwrap(), 0);
        assert_eq!(predicted_preimages(&p(&[1]), 7, 1).unwrap(), 0);
        assert_eq!(predicted_preimages(&p(&[4]), 6, 1).unwrap(), 2);
    }
}
