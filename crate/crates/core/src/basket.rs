//! Baskets of terminal cyclic quotient singularities and their local
//! correction terms.
//!
//! A basket element is a singularity of type `1/r(a,-a,1)` with `r ≥ 2`,
//! `0 < a < r` and `gcd(a, r) = 1`.  Since `(r, a)` and `(r, r-a)` denote the
//! same type, construction normalizes to the representative with `a ≥ r - a`.
//! Each element carries the inverse weight `b` with `a·b ≡ 1 (mod r)`, used
//! by the correction term
//!
//! ```text
//! l(Q, m) = Σ_{j=1}^{m-1} x_j (r - x_j) / (2r),    x_j = (b·j) mod r.
//! ```
//!
//! A [`Basket`] is a multiset of such types; all of its derived quantities
//! (`l(m)`, the Miyaoka-Reid sum `Σ (r²-1)/r`) are multiplicity-weighted
//! sums over the entries, computed exactly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::rational::Rational;

/// Error raised when constructing singularities or parsing basket specs.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BasketError {
    #[error("index r must be at least 2, got {r}")]
    IndexTooSmall { r: u64 },
    #[error("weight {a} out of range for index {r}: need 0 < a < r")]
    WeightOutOfRange { r: u64, a: u64 },
    #[error("weight {a} is not coprime to index {r}")]
    NotCoprime { r: u64, a: u64 },
    #[error("multiplicity must be positive in basket entry {item}")]
    ZeroMultiplicity { item: String },
    #[error("invalid basket item `{item}`: expected `mult*r/a`")]
    MalformedItem { item: String },
}

/// Multiplicative inverse of `a` modulo `r`, by the extended Euclidean
/// algorithm.
///
/// Requires `r ≥ 2`, `0 < a < r` and `gcd(a, r) = 1`; the result `b`
/// satisfies `0 < b < r` and `a·b ≡ 1 (mod r)`.
pub fn mod_inverse(a: u64, r: u64) -> Result<u64, BasketError> {
    if r < 2 {
        return Err(BasketError::IndexTooSmall { r });
    }
    if a == 0 || a >= r {
        return Err(BasketError::WeightOutOfRange { r, a });
    }
    // Invariants: old_r = old_s*a + t*r for some t, likewise r'.
    let (mut old_r, mut cur_r) = (a as i128, r as i128);
    let (mut old_s, mut cur_s) = (1i128, 0i128);
    while cur_r != 0 {
        let quot = old_r / cur_r;
        (old_r, cur_r) = (cur_r, old_r - quot * cur_r);
        (old_s, cur_s) = (cur_s, old_s - quot * cur_s);
    }
    if old_r != 1 {
        return Err(BasketError::NotCoprime { r, a });
    }
    let b = old_s.rem_euclid(r as i128) as u64;
    debug_assert!(0 < b && b < r);
    Ok(b)
}

/// A terminal cyclic quotient singularity of type `1/r(a,-a,1)`, stored in
/// canonical form (`a ≥ r - a`) together with the inverse weight `b`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuotientSingularity {
    r: u64,
    a: u64,
    b: u64,
}

impl QuotientSingularity {
    /// Construct the singularity of type `1/r(a,-a,1)`, normalizing the
    /// weight to the canonical representative `max(a, r-a)`.
    pub fn new(r: u64, a: u64) -> Result<Self, BasketError> {
        if r < 2 {
            return Err(BasketError::IndexTooSmall { r });
        }
        if a == 0 || a >= r {
            return Err(BasketError::WeightOutOfRange { r, a });
        }
        if (a as u128).gcd(&(r as u128)) != 1 {
            return Err(BasketError::NotCoprime { r, a });
        }
        let a = a.max(r - a);
        let b = mod_inverse(a, r)?;
        Ok(QuotientSingularity { r, a, b })
    }

    /// The type `1/r(1,-1,1)`, canonically `1/r(r-1,...)`.  Used by the
    /// index-bound estimates, where it minimizes `l` among weights.
    pub fn cyclic(r: u64) -> Result<Self, BasketError> {
        Self::new(r, r - 1)
    }

    /// Canonical index r.
    pub fn index(&self) -> u64 {
        self.r
    }

    /// Canonical weight a (always ≥ r - a).
    pub fn weight(&self) -> u64 {
        self.a
    }

    /// Inverse weight b with a·b ≡ 1 (mod r).
    pub fn inverse_weight(&self) -> u64 {
        self.b
    }

    /// Local correction term `l(Q, m)`; the empty sum for `m = 1`.
    pub fn correction(&self, m: u32) -> Rational {
        assert!(m >= 1, "l(Q, m) is defined for m >= 1");
        let r = self.r as u128;
        let b = self.b as u128;
        let mut num = BigInt::from(0u8);
        let mut x = 0u128; // (b*j) mod r, advanced incrementally
        for _ in 1..m {
            x += b;
            if x >= r {
                x -= r;
            }
            num += BigInt::from(x * (r - x));
        }
        Rational::new(num, BigInt::from(2 * r))
    }

    /// The term `(r² - 1)/r` contributed to the Miyaoka-Reid sum.
    pub fn miyaoka_term(&self) -> Rational {
        let r = BigInt::from(self.r);
        Rational::new(&r * &r - 1, r)
    }
}

impl fmt::Display for QuotientSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}({},-{},1)", self.r, self.a, self.a)
    }
}

impl fmt::Debug for QuotientSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A multiset of quotient singularities with positive multiplicities,
/// kept sorted by `(r, a)` with no duplicate types.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Basket {
    entries: Vec<(QuotientSingularity, u64)>,
}

impl Basket {
    pub fn empty() -> Self {
        Basket::default()
    }

    /// Build a basket from `(singularity, multiplicity)` pairs.  Entries of
    /// the same canonical type are merged; zero multiplicities are rejected.
    pub fn new(
        entries: impl IntoIterator<Item = (QuotientSingularity, u64)>,
    ) -> Result<Self, BasketError> {
        let mut merged: Vec<(QuotientSingularity, u64)> = Vec::new();
        for (q, mult) in entries {
            if mult == 0 {
                return Err(BasketError::ZeroMultiplicity { item: q.to_string() });
            }
            match merged.iter_mut().find(|(p, _)| *p == q) {
                Some((_, m)) => *m += mult,
                None => merged.push((q, mult)),
            }
        }
        merged.sort_by_key(|(q, _)| (q.index(), q.weight()));
        Ok(Basket { entries: merged })
    }

    /// Convenience constructor from `(r, a, multiplicity)` triples.
    pub fn from_triples(triples: &[(u64, u64, u64)]) -> Result<Self, BasketError> {
        Basket::new(
            triples
                .iter()
                .map(|&(r, a, mult)| Ok((QuotientSingularity::new(r, a)?, mult)))
                .collect::<Result<Vec<_>, BasketError>>()?,
        )
    }

    pub fn entries(&self) -> &[(QuotientSingularity, u64)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total number of singularities counted with multiplicity.
    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    /// Global correction term `l(m) = Σ_Q l(Q, m)`, weighted by multiplicity.
    pub fn correction(&self, m: u32) -> Rational {
        let mut total = Rational::zero();
        for (q, mult) in &self.entries {
            total += q.correction(m) * Rational::from_integer(*mult);
        }
        total
    }

    /// The Miyaoka-Reid sum `Σ_Q (r² - 1)/r`, weighted by multiplicity.
    ///
    /// An actual minimal 3-fold requires this to be at least `24·χ(O)`.
    pub fn miyaoka_sum(&self) -> Rational {
        let mut total = Rational::zero();
        for (q, mult) in &self.entries {
            total += q.miyaoka_term() * Rational::from_integer(*mult);
        }
        total
    }
}

/// Basket strings are comma-separated `mult*r/a` items, e.g.
/// `3*2/1,2*5/3,1*10/7`.  Weights are auto-canonicalized, so `2*5/2` and
/// `2*5/3` parse identically.
impl FromStr for Basket {
    type Err = BasketError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Basket::empty());
        }
        let mut entries = Vec::new();
        for item in s.split(',') {
            let item = item.trim();
            let malformed = || BasketError::MalformedItem { item: item.to_owned() };
            let (mult, rest) = item.split_once('*').ok_or_else(malformed)?;
            let (r, a) = rest.split_once('/').ok_or_else(malformed)?;
            let mult: u64 = mult.trim().parse().map_err(|_| malformed())?;
            let r: u64 = r.trim().parse().map_err(|_| malformed())?;
            let a: u64 = a.trim().parse().map_err(|_| malformed())?;
            if mult == 0 {
                return Err(BasketError::ZeroMultiplicity { item: item.to_owned() });
            }
            entries.push((QuotientSingularity::new(r, a)?, mult));
        }
        Basket::new(entries)
    }
}

impl fmt::Display for Basket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (q, mult) in &self.entries {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}*{}/{}", mult, q.index(), q.weight())?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Basket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// All canonical singularity types with index `2 ≤ r ≤ r_max`, ordered by
/// ascending index and descending weight within an index.
pub fn canonical_types(r_max: u64) -> Vec<QuotientSingularity> {
    let mut out = Vec::new();
    for r in 2..=r_max {
        let mut weights: Vec<u64> = (1..r)
            .filter(|&a| 2 * a >= r && (a as u128).gcd(&(r as u128)) == 1)
            .collect();
        weights.sort_unstable_by(|x, y| y.cmp(x));
        for a in weights {
            out.push(QuotientSingularity::new(r, a).expect("canonical weight"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(r: u64, a: u64) -> QuotientSingularity {
        QuotientSingularity::new(r, a).unwrap()
    }

    fn rat(num: i64, den: i64) -> Rational {
        Rational::new(num, den)
    }

    /// Defining sum for `l(Q, m)` evaluated directly from a raw weight,
    /// without canonicalization.  Test-side oracle.
    fn correction_oracle(r: u64, a: u64, m: u32) -> Rational {
        let b = (1..r).find(|b| (a as u128 * *b as u128) % r as u128 == 1).unwrap();
        let mut total = Rational::zero();
        for j in 1..m as u64 {
            let x = (b as u128 * j as u128) % r as u128;
            total += Rational::new(
                BigInt::from(x * (r as u128 - x)),
                BigInt::from(2 * r as u128),
            );
        }
        total
    }

    #[test]
    fn mod_inverse_small_cases() {
        assert_eq!(mod_inverse(1, 2).unwrap(), 1);
        assert_eq!(mod_inverse(3, 5).unwrap(), 2);
        // exhaustive-scan oracle for (7, 10); type 1/10(7,-7,1)
        let scan = (1..10).find(|b| (7 * b) % 10 == 1).unwrap();
        assert_eq!(scan, 3);
        assert_eq!(mod_inverse(7, 10).unwrap(), 3);
    }

    #[test]
    fn mod_inverse_rejects_bad_input() {
        assert_eq!(mod_inverse(4, 10), Err(BasketError::NotCoprime { r: 10, a: 4 }));
        assert_eq!(mod_inverse(0, 5), Err(BasketError::WeightOutOfRange { r: 5, a: 0 }));
        assert_eq!(mod_inverse(5, 5), Err(BasketError::WeightOutOfRange { r: 5, a: 5 }));
        assert_eq!(mod_inverse(1, 1), Err(BasketError::IndexTooSmall { r: 1 }));
    }

    #[test]
    fn mod_inverse_exhaustive_against_scan() {
        for r in 2..=60u64 {
            for a in 1..r {
                if (a as u128).gcd(&(r as u128)) != 1 {
                    assert!(mod_inverse(a, r).is_err());
                    continue;
                }
                let b = mod_inverse(a, r).unwrap();
                assert!((1..r).contains(&b));
                assert_eq!((a as u128 * b as u128) % r as u128, 1);
            }
        }
    }

    #[test]
    fn canonicalize_picks_the_large_weight() {
        let s = q(5, 2);
        assert_eq!((s.index(), s.weight(), s.inverse_weight()), (5, 3, 2));
        let s = q(5, 4);
        assert_eq!((s.index(), s.weight(), s.inverse_weight()), (5, 4, 4));
        let s = q(2, 1);
        assert_eq!((s.index(), s.weight(), s.inverse_weight()), (2, 1, 1));
    }

    #[test]
    fn construction_rejects_invalid_types() {
        assert!(QuotientSingularity::new(1, 1).is_err()); // smooth point
        assert!(QuotientSingularity::new(6, 3).is_err());
        assert!(QuotientSingularity::new(4, 0).is_err());
        assert!(QuotientSingularity::new(4, 4).is_err());
    }

    #[test]
    fn local_correction_examples() {
        assert_eq!(q(2, 1).correction(2), rat(1, 4));
        assert_eq!(q(2, 1).correction(1), Rational::zero());
        assert_eq!(q(3, 2).correction(3), rat(2, 3));
        // against the defining-sum oracle on a larger case
        assert_eq!(q(12, 7).correction(2), rat(35, 24));
        assert_eq!(q(12, 7).correction(15), correction_oracle(12, 7, 15));
    }

    #[test]
    fn representative_independence() {
        // x(r-x) is invariant under x -> r-x, so the two weights of one type
        // give the same correction term for every m.
        for r in 2..=25u64 {
            for a in 1..r {
                if (a as u128).gcd(&(r as u128)) != 1 {
                    continue;
                }
                for m in 1..=12u32 {
                    assert_eq!(q(r, a).correction(m), correction_oracle(r, a, m));
                    assert_eq!(correction_oracle(r, a, m), correction_oracle(r, r - a, m));
                }
            }
        }
    }

    #[test]
    fn basket_correction_examples() {
        assert_eq!(Basket::empty().correction(18), Rational::zero());
        let twos = Basket::from_triples(&[(2, 1, 2)]).unwrap();
        assert_eq!(twos.correction(2), rat(1, 2));

        // case (viii): l(2) = 1/2 + 2/3 + 3/8 + 3/5 + 6/7 = 2519/840,
        // summed entry-by-entry with the defining-sum oracle
        let viii = case_viii();
        let oracle: Rational = [(2, 1, 2), (3, 2, 2), (4, 3, 1), (5, 3, 1), (7, 5, 1)]
            .iter()
            .map(|&(r, a, mult)| {
                correction_oracle(r, a, 2) * Rational::from_integer(mult)
            })
            .sum();
        assert_eq!(oracle, rat(2519, 840));
        assert_eq!(viii.correction(2), rat(2519, 840));
    }

    fn case_viii() -> Basket {
        Basket::from_triples(&[(2, 1, 2), (3, 2, 2), (4, 3, 1), (5, 3, 1), (7, 5, 1)]).unwrap()
    }

    #[test]
    fn miyaoka_sum_examples() {
        assert_eq!(Basket::empty().miyaoka_sum(), Rational::zero());
        let one_half = Basket::from_triples(&[(2, 1, 1)]).unwrap();
        assert_eq!(one_half.miyaoka_sum(), rat(3, 2));
        // case (viii) fails the Miyaoka-Reid bound: 9971/420 < 24
        let viii = case_viii();
        assert_eq!(viii.miyaoka_sum(), rat(9971, 420));
        assert!(viii.miyaoka_sum() < Rational::from_integer(24));
    }

    #[test]
    fn basket_merges_and_sorts_entries() {
        let b = Basket::new(vec![(q(5, 3), 1), (q(2, 1), 2), (q(5, 2), 1)]).unwrap();
        // (5,2) canonicalizes to (5,3) and merges with it
        assert_eq!(b.entries().len(), 2);
        assert_eq!(b.entries()[0], (q(2, 1), 2));
        assert_eq!(b.entries()[1], (q(5, 3), 2));
        assert_eq!(b.total_multiplicity(), 4);
    }

    #[test]
    fn basket_spec_parsing() {
        let b: Basket = "3*2/1,2*5/3,1*10/7".parse().unwrap();
        assert_eq!(b.to_string(), "3*2/1,2*5/3,1*10/7");
        // weights auto-canonicalize on parse
        let c: Basket = "3*2/1, 2*5/2, 1*10/3".parse().unwrap();
        assert_eq!(c, b);
        let empty: Basket = "".parse().unwrap();
        assert!(empty.is_empty());

        let err = "3*2/1,oops".parse::<Basket>().unwrap_err();
        assert_eq!(err, BasketError::MalformedItem { item: "oops".into() });
        let err = "0*2/1".parse::<Basket>().unwrap_err();
        assert_eq!(err, BasketError::ZeroMultiplicity { item: "0*2/1".into() });
        let err = "1*6/3".parse::<Basket>().unwrap_err();
        assert_eq!(err, BasketError::NotCoprime { r: 6, a: 3 });
    }

    #[test]
    fn values_are_immutable_shareable_data() {
        fn check<T: Send + Sync + Clone>() {}
        check::<Rational>();
        check::<QuotientSingularity>();
        check::<Basket>();
    }

    #[test]
    fn canonical_types_counts() {
        // one type for r = 2, phi(r)/2 for r > 2; 115 types up to index 27
        assert_eq!(canonical_types(2).len(), 1);
        assert_eq!(canonical_types(5).len(), 5);
        assert_eq!(canonical_types(27).len(), 115);
        // paper ordering: ascending r, descending a
        let types = canonical_types(5);
        let listed: Vec<(u64, u64)> = types.iter().map(|q| (q.index(), q.weight())).collect();
        assert_eq!(listed, vec![(2, 1), (3, 2), (4, 3), (5, 4), (5, 3)]);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_type() -> impl Strategy<Value = QuotientSingularity> {
            (2u64..=40)
                .prop_flat_map(|r| (Just(r), 1u64..r))
                .prop_filter_map("coprime weights only", |(r, a)| {
                    QuotientSingularity::new(r, a).ok()
                })
        }

        proptest! {
            #[test]
            fn correction_nonnegative_and_monotone(q in arb_type(), m in 1u32..40) {
                let now = q.correction(m);
                let next = q.correction(m + 1);
                prop_assert!(now >= Rational::zero());
                prop_assert!(next >= now);
            }

            #[test]
            fn basket_spec_round_trip(triples in proptest::collection::vec(
                (2u64..=30, 1u64..30, 1u64..6), 0..6)) {
                let entries: Vec<_> = triples
                    .iter()
                    .filter_map(|&(r, a, m)| {
                        QuotientSingularity::new(r, a % r).ok().map(|q| (q, m))
                    })
                    .collect();
                let basket = Basket::new(entries).unwrap();
                let reparsed: Basket = basket.to_string().parse().unwrap();
                prop_assert_eq!(reparsed, basket);
            }
        }
    }
}
