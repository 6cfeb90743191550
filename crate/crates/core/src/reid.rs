//! Reid's plurigenus formula and the derived linear functionals.
//!
//! For a minimal 3-fold of general type with basket `{Q}`, the plurigenus
//! for `m ≥ 2` is
//!
//! ```text
//! P_m = (1/12) m(m-1)(2m-1) K³ - (2m-1) χ(O) + l(m)
//! ```
//!
//! with `l(m)` the basket correction term.  Everything here is a pure exact
//! computation on top of that formula:
//!
//! - [`plurigenus`] and its inverse [`solve_k3`];
//! - the per-type functionals `Δ_n = n²·l(2) + l(n) - l(n+1)` and their
//!   grouped sums [`nabla_vector`] (4 components, Δ₂ through Δ₁₇) and
//!   [`lambda_vector`] (3 components, Δ₂ through Δ₁₄);
//! - the unimodular transforms [`apply_f`] / [`apply_g`] that turn those
//!   sums into the small search targets used by the basket enumeration;
//! - [`LinearCombination`]: symbolic expansion of `Σ c_i P_{m_i}` into
//!   `(K³ coefficient, constant, l-terms)`, which certifies the displayed
//!   identities behind each search target;
//! - [`build_table`]: the full table of `∇'` and `Λ'` values for every
//!   canonical type up to a given index, with integrality asserted.

use num_bigint::BigInt;
use serde::Serialize;

use crate::basket::{canonical_types, Basket, QuotientSingularity};
use crate::rational::Rational;

/// Error raised by formula evaluation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReidError {
    #[error("the plurigenus formula applies for m >= 2, got m = {m}")]
    MBelowTwo { m: u32 },
}

/// The data determining every plurigenus: `K³`, `χ(O)` and the basket.
///
/// `K³ > 0` is a property of genuine minimal 3-folds of general type; it is
/// checked by callers that care, not enforced here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometrySpec {
    pub k3: Rational,
    pub chi: i64,
    pub basket: Basket,
}

/// Coefficient of `K³` in the formula: `m(m-1)(2m-1)/12`.
fn k3_coefficient(m: u32) -> Rational {
    let m = BigInt::from(m);
    Rational::new(&m * (&m - 1) * (2 * &m - 1), BigInt::from(12))
}

/// `P_m` evaluated exactly; integrality is the caller's concern when the
/// spec is claimed to come from an actual 3-fold.
pub fn plurigenus(spec: &GeometrySpec, m: u32) -> Result<Rational, ReidError> {
    if m < 2 {
        return Err(ReidError::MBelowTwo { m });
    }
    let chi_term = Rational::from_integer(BigInt::from(2 * m as i64 - 1) * spec.chi);
    Ok(k3_coefficient(m) * &spec.k3 - chi_term + spec.basket.correction(m))
}

/// The unique `K³` giving `P_m = pm` for the given basket and `χ`:
/// `(pm + (2m-1)·χ - l(m)) · 12 / (m(m-1)(2m-1))`.
pub fn solve_k3(basket: &Basket, chi: i64, m: u32, pm: &Rational) -> Result<Rational, ReidError> {
    if m < 2 {
        return Err(ReidError::MBelowTwo { m });
    }
    let chi_term = Rational::from_integer(BigInt::from(2 * m as i64 - 1) * chi);
    Ok((pm + &chi_term - basket.correction(m)) / k3_coefficient(m))
}

/// The functional `Δ_n(Q) = n²·l(Q,2) + l(Q,n) - l(Q,n+1)` for `n ≥ 2`.
pub fn delta(q: &QuotientSingularity, n: u32) -> Rational {
    assert!(n >= 2, "delta is used for n >= 2");
    let n_sq = Rational::from_integer(BigInt::from(n) * BigInt::from(n));
    n_sq * q.correction(2) + q.correction(n) - q.correction(n + 1)
}

fn delta_sum(q: &QuotientSingularity, range: std::ops::RangeInclusive<u32>) -> Rational {
    range.map(|n| delta(q, n)).sum()
}

/// The grouped sums `(Δ₂, Δ₃+Δ₄+Δ₅, Δ₆+Δ₇+Δ₈, Δ₉+⋯+Δ₁₇)` for one type.
pub fn nabla_vector(q: &QuotientSingularity) -> [Rational; 4] {
    [
        delta(q, 2),
        delta_sum(q, 3..=5),
        delta_sum(q, 6..=8),
        delta_sum(q, 9..=17),
    ]
}

/// The grouped sums `(Δ₂, Δ₃+Δ₄, Δ₅+⋯+Δ₁₄)` for one type.
pub fn lambda_vector(q: &QuotientSingularity) -> [Rational; 3] {
    [delta(q, 2), delta_sum(q, 3..=4), delta_sum(q, 5..=14)]
}

/// Row-vector-on-the-left transform matrix for the 4-component family.
pub const F_MATRIX: [[i64; 4]; 4] = [
    [1, -11, 0, -4],
    [0, 1, -3, -11],
    [0, 0, 1, -7],
    [0, 0, 0, 1],
];

/// Row-vector-on-the-left transform matrix for the 3-component family.
pub const G_MATRIX: [[i64; 3]; 3] = [
    [1, -5, -5],
    [0, 1, -40],
    [0, 0, 1],
];

fn apply_matrix<const N: usize>(v: &[Rational; N], m: &[[i64; N]; N]) -> [Rational; N] {
    std::array::from_fn(|col| {
        (0..N)
            .map(|row| &v[row] * &Rational::from_integer(m[row][col]))
            .sum()
    })
}

/// `∇' = ∇·F`, i.e. `(∇₁, -11∇₁+∇₂, -3∇₂+∇₃, -4∇₁-11∇₂-7∇₃+∇₄)`.
pub fn apply_f(nabla: &[Rational; 4]) -> [Rational; 4] {
    apply_matrix(nabla, &F_MATRIX)
}

/// `Λ' = Λ·G`, i.e. `(Λ₁, -5Λ₁+Λ₂, -5Λ₁-40Λ₂+Λ₃)`.
pub fn apply_g(lambda: &[Rational; 3]) -> [Rational; 3] {
    apply_matrix(lambda, &G_MATRIX)
}

/// A formal combination `Σ c_i · P_{m_i}` with each `m_i ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCombination {
    terms: Vec<(u32, Rational)>,
}

impl LinearCombination {
    pub fn new(terms: Vec<(u32, Rational)>) -> Result<Self, ReidError> {
        if let Some(&(m, _)) = terms.iter().find(|(m, _)| *m < 2) {
            return Err(ReidError::MBelowTwo { m });
        }
        Ok(LinearCombination { terms })
    }

    /// Combination with integer coefficients, e.g. `[(3, 1), (2, -5)]`
    /// for `P₃ - 5P₂`.
    pub fn with_integer_coefficients(terms: &[(u32, i64)]) -> Result<Self, ReidError> {
        Self::new(
            terms
                .iter()
                .map(|&(m, c)| (m, Rational::from_integer(c)))
                .collect(),
        )
    }

    pub fn terms(&self) -> &[(u32, Rational)] {
        &self.terms
    }

    /// Coefficient of `K³`: `Σ c_i · m_i(m_i-1)(2m_i-1)/12`.
    pub fn k3_coefficient(&self) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| c * &k3_coefficient(*m))
            .sum()
    }

    /// Coefficient of `χ(O)`: `-Σ c_i · (2m_i - 1)`.
    pub fn chi_coefficient(&self) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| -(c * &Rational::from_integer(2 * *m as i64 - 1)))
            .sum()
    }

    /// Expand into `k3_coefficient·K³ + constant + Σ c_i·l(m_i)` for a
    /// fixed `χ`; the l-term coefficients are merged by `m`.
    pub fn expand(&self, chi: i64) -> IdentityExpansion {
        let mut corrections: Vec<(u32, Rational)> = Vec::new();
        for (m, c) in &self.terms {
            match corrections.iter_mut().find(|(n, _)| n == m) {
                Some((_, acc)) => *acc += c,
                None => corrections.push((*m, c.clone())),
            }
        }
        corrections.sort_by_key(|(m, _)| *m);
        corrections.retain(|(_, c)| !c.is_zero());
        IdentityExpansion {
            k3_coefficient: self.k3_coefficient(),
            constant: self.chi_coefficient() * Rational::from_integer(chi),
            chi,
            corrections,
        }
    }

    /// Direct evaluation `Σ c_i · P_{m_i}(spec)`.
    pub fn evaluate(&self, spec: &GeometrySpec) -> Result<Rational, ReidError> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            total += c * &plurigenus(spec, *m)?;
        }
        Ok(total)
    }
}

/// A combination `Σ c_i P_{m_i}` resolved against the formula:
/// `k3_coefficient·K³ + constant + Σ coeff·l(m)` at a fixed `χ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityExpansion {
    pub k3_coefficient: Rational,
    pub constant: Rational,
    pub chi: i64,
    /// Signed coefficients of the surviving `l(m)` terms, sorted by `m`.
    pub corrections: Vec<(u32, Rational)>,
}

impl IdentityExpansion {
    /// Evaluate on concrete geometry.  Agrees with
    /// [`LinearCombination::evaluate`] when `spec.chi` matches the `χ`
    /// this expansion was taken at.
    pub fn evaluate(&self, k3: &Rational, basket: &Basket) -> Rational {
        let mut total = &self.k3_coefficient * k3 + self.constant.clone();
        for (m, c) in &self.corrections {
            total += c * &basket.correction(*m);
        }
        total
    }
}

impl std::fmt::Display for IdentityExpansion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}*K3 + {}", self.k3_coefficient, self.constant)?;
        for (m, c) in &self.corrections {
            if c.is_negative() {
                write!(f, " - {}*l({m})", c.abs())?;
            } else {
                write!(f, " + {c}*l({m})")?;
            }
        }
        Ok(())
    }
}

/// One row of the invariant table: a canonical type together with its
/// integral `∇'` vector and (when computed) its integral `Λ'` vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasketRow {
    pub singularity: QuotientSingularity,
    pub nabla_prime: [i64; 4],
    pub lambda_prime: Option<[i64; 3]>,
}

fn assert_integral<const N: usize>(
    q: &QuotientSingularity,
    label: &str,
    v: &[Rational; N],
) -> [i64; N] {
    std::array::from_fn(|i| {
        v[i].to_i64().unwrap_or_else(|| {
            panic!("{label} component {i} of {q} is not a small integer: {}", v[i])
        })
    })
}

impl BasketRow {
    /// Compute the row for one type from first principles.
    pub fn compute(q: QuotientSingularity) -> BasketRow {
        let nabla_prime = assert_integral(&q, "nabla'", &apply_f(&nabla_vector(&q)));
        let lambda_prime = assert_integral(&q, "lambda'", &apply_g(&lambda_vector(&q)));
        assert!(
            nabla_prime[0] >= 1 && lambda_prime[0] >= 1,
            "first coordinate of {q} must be positive (it drives search termination)"
        );
        BasketRow {
            singularity: q,
            nabla_prime,
            lambda_prime: Some(lambda_prime),
        }
    }
}

/// One table row per canonical type with `2 ≤ r ≤ r_max`, ordered by
/// ascending index and descending weight.  `Λ'` is computed for every row.
pub fn build_table(r_max: u64) -> Vec<BasketRow> {
    assert!(r_max >= 2, "the table starts at index 2");
    canonical_types(r_max).into_iter().map(BasketRow::compute).collect()
}

#[derive(Serialize)]
struct TableRecord {
    no: usize,
    r: u64,
    a: u64,
    n1: i64,
    n2: i64,
    n3: i64,
    n4: i64,
    l1: Option<i64>,
    l2: Option<i64>,
    l3: Option<i64>,
}

fn table_records(rows: &[BasketRow]) -> Vec<TableRecord> {
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let [n1, n2, n3, n4] = row.nabla_prime;
            let l = row.lambda_prime;
            TableRecord {
                no: i + 1,
                r: row.singularity.index(),
                a: row.singularity.weight(),
                n1,
                n2,
                n3,
                n4,
                l1: l.map(|l| l[0]),
                l2: l.map(|l| l[1]),
                l3: l.map(|l| l[2]),
            }
        })
        .collect()
}

/// CSV export with the fixed header `no,r,a,n1,n2,n3,n4,l1,l2,l3`.
pub fn table_to_csv(rows: &[BasketRow]) -> String {
    let mut out = String::from("no,r,a,n1,n2,n3,n4,l1,l2,l3\n");
    for rec in table_records(rows) {
        let l = |v: Option<i64>| v.map(|x| x.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            rec.no,
            rec.r,
            rec.a,
            rec.n1,
            rec.n2,
            rec.n3,
            rec.n4,
            l(rec.l1),
            l(rec.l2),
            l(rec.l3),
        ));
    }
    out
}

/// JSON export: an array of records mirroring the CSV columns.
pub fn table_to_json(rows: &[BasketRow]) -> String {
    let mut out = serde_json::to_string_pretty(&table_records(rows)).expect("serializable");
    out.push('\n');
    out
}
