//! Exhaustive enumeration of basket multisets hitting an integer target
//! vector.
//!
//! The candidates are table rows restricted to one vector family (`∇'` with
//! 4 coordinates or `Λ'` with 3) and the problem is to find every multiset
//! of rows whose coordinate-wise sum equals the target exactly.
//!
//! Every candidate's first coordinate is at least 1, so the total
//! multiplicity of a solution is bounded by the target's first coordinate;
//! that bound drives termination.  Coordinates other than the first can be
//! negative (the index-2 row has `∇'₄ = -1`), so plain nonnegativity
//! pruning is unsound for them.  Instead the search carries, for every row
//! suffix and coordinate, the minimum and maximum achievable contribution
//! per unit of first coordinate, and prunes residuals outside that window.

use serde::Serialize;

use crate::basket::{Basket, QuotientSingularity};
use crate::rational::Rational;
use crate::reid::{build_table, BasketRow};

/// Which grouped-functional family a search runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VectorFamily {
    Nabla,
    Lambda,
}

impl VectorFamily {
    pub fn arity(self) -> usize {
        match self {
            VectorFamily::Nabla => 4,
            VectorFamily::Lambda => 3,
        }
    }

    /// Index cutoff used by the published searches for this family.
    pub fn default_r_max(self) -> u64 {
        match self {
            VectorFamily::Nabla => 27,
            VectorFamily::Lambda => 25,
        }
    }
}

impl std::fmt::Display for VectorFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VectorFamily::Nabla => write!(f, "nabla"),
            VectorFamily::Lambda => write!(f, "lambda"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("target has {got} coordinates, the {family} family needs {expected}")]
    ArityMismatch {
        family: VectorFamily,
        expected: usize,
        got: usize,
    },
    #[error("candidate row for {singularity} has first coordinate {value} < 1")]
    NonPositiveLeadingCoordinate {
        singularity: QuotientSingularity,
        value: i64,
    },
    #[error("candidate row for {singularity} has {got} coordinates, expected {expected}")]
    RowArityMismatch {
        singularity: QuotientSingularity,
        expected: usize,
        got: usize,
    },
}

/// One search candidate: a canonical type with its integer row vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateRow {
    pub singularity: QuotientSingularity,
    pub vector: Vec<i64>,
}

/// A fully specified search instance.
#[derive(Clone, Debug)]
pub struct SearchProblem {
    rows: Vec<CandidateRow>,
    target: Vec<i64>,
    r_max: u64,
}

impl SearchProblem {
    /// Build the instance from the invariant table for one family, keeping
    /// rows with index up to `r_max`.
    pub fn from_table(
        family: VectorFamily,
        target: Vec<i64>,
        r_max: u64,
    ) -> Result<Self, SearchError> {
        if target.len() != family.arity() {
            return Err(SearchError::ArityMismatch {
                family,
                expected: family.arity(),
                got: target.len(),
            });
        }
        let rows = build_table(r_max)
            .iter()
            .map(|row| CandidateRow {
                singularity: row.singularity,
                vector: family_vector(family, row),
            })
            .collect();
        Self::from_rows(rows, target, r_max)
    }

    /// Build the instance from explicit rows (all of the same arity as the
    /// target, first coordinates ≥ 1).
    pub fn from_rows(
        rows: Vec<CandidateRow>,
        target: Vec<i64>,
        r_max: u64,
    ) -> Result<Self, SearchError> {
        for row in &rows {
            if row.vector.len() != target.len() {
                return Err(SearchError::RowArityMismatch {
                    singularity: row.singularity,
                    expected: target.len(),
                    got: row.vector.len(),
                });
            }
            if row.vector[0] < 1 {
                return Err(SearchError::NonPositiveLeadingCoordinate {
                    singularity: row.singularity,
                    value: row.vector[0],
                });
            }
        }
        Ok(SearchProblem { rows, target, r_max })
    }

    pub fn rows(&self) -> &[CandidateRow] {
        &self.rows
    }

    pub fn target(&self) -> &[i64] {
        &self.target
    }

    pub fn r_max(&self) -> u64 {
        self.r_max
    }
}

/// Extract the family vector from a computed table row.
pub fn family_vector(family: VectorFamily, row: &BasketRow) -> Vec<i64> {
    match family {
        VectorFamily::Nabla => row.nabla_prime.to_vec(),
        VectorFamily::Lambda => row
            .lambda_prime
            .expect("computed table rows always carry lambda'")
            .to_vec(),
    }
}

/// A multiset of types whose row vectors sum exactly to the target.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SolutionMultiset {
    entries: Vec<(QuotientSingularity, u64)>,
    sum_check: Vec<i64>,
}

impl SolutionMultiset {
    fn new(mut entries: Vec<(QuotientSingularity, u64)>, sum_check: Vec<i64>) -> Self {
        entries.sort_by_key(|(q, _)| (q.index(), q.weight()));
        SolutionMultiset { entries, sum_check }
    }

    /// Entries sorted by `(r, a)`, multiplicities ≥ 1.
    pub fn entries(&self) -> &[(QuotientSingularity, u64)] {
        &self.entries
    }

    /// The achieved vector (equal to the search target).
    pub fn sum_check(&self) -> &[i64] {
        &self.sum_check
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn to_basket(&self) -> Basket {
        Basket::new(self.entries.iter().copied()).expect("positive multiplicities")
    }

    fn sort_key(&self) -> Vec<(u64, u64, u64)> {
        self.entries
            .iter()
            .map(|(q, m)| (q.index(), q.weight(), *m))
            .collect()
    }
}

impl std::fmt::Display for SolutionMultiset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_basket())
    }
}

/// Per-suffix, per-coordinate extremes of `v[j]/v[0]` as exact fractions
/// with positive denominators.
struct SuffixBounds {
    // bounds[i][j] = (min_num, min_den, max_num, max_den) over rows i..
    bounds: Vec<Vec<(i64, i64, i64, i64)>>,
}

impl SuffixBounds {
    fn new(rows: &[CandidateRow], arity: usize) -> Self {
        let mut bounds = vec![vec![(0, 1, 0, 1); arity]; rows.len() + 1];
        for i in (0..rows.len()).rev() {
            let v = &rows[i].vector;
            for j in 0..arity {
                let (num, den) = (v[j], v[0]);
                let (mut min_num, mut min_den, mut max_num, mut max_den) = (num, den, num, den);
                if i + 1 < rows.len() {
                    let (lo_n, lo_d, hi_n, hi_d) = bounds[i + 1][j];
                    if (lo_n as i128) * (min_den as i128) < (min_num as i128) * (lo_d as i128) {
                        (min_num, min_den) = (lo_n, lo_d);
                    }
                    if (hi_n as i128) * (max_den as i128) > (max_num as i128) * (hi_d as i128) {
                        (max_num, max_den) = (hi_n, hi_d);
                    }
                }
                bounds[i][j] = (min_num, min_den, max_num, max_den);
            }
        }
        SuffixBounds { bounds }
    }

    /// Can rows `i..` spend exactly `budget` units of first coordinate and
    /// contribute exactly `residual[j]` on every coordinate?  Necessary
    /// condition only.
    fn feasible(&self, i: usize, budget: i64, residual: &[i64]) -> bool {
        let (budget, b) = (budget as i128, &self.bounds[i]);
        residual.iter().enumerate().all(|(j, &t)| {
            let (lo_n, lo_d, hi_n, hi_d) = b[j];
            let t = t as i128;
            t * lo_d as i128 >= budget * lo_n as i128
                && t * hi_d as i128 <= budget * hi_n as i128
        })
    }
}

/// All multisets of candidate rows summing exactly to the target, in
/// canonical order (lexicographic by sorted entries), without duplicates.
/// An empty list is a valid result; the zero target has exactly the empty
/// multiset as its solution.
pub fn enumerate(problem: &SearchProblem) -> Vec<SolutionMultiset> {
    let rows = problem.rows();
    let arity = problem.target().len();
    let bounds = SuffixBounds::new(rows, arity);
    let mut residual = problem.target().to_vec();
    let mut stack: Vec<(QuotientSingularity, u64)> = Vec::new();
    let mut found = Vec::new();

    fn dfs(
        rows: &[CandidateRow],
        bounds: &SuffixBounds,
        i: usize,
        residual: &mut [i64],
        stack: &mut Vec<(QuotientSingularity, u64)>,
        target: &[i64],
        found: &mut Vec<SolutionMultiset>,
    ) {
        if residual.iter().all(|&t| t == 0) {
            // rows all have positive first coordinate, so nothing more fits
            found.push(SolutionMultiset::new(stack.clone(), target.to_vec()));
            return;
        }
        if i == rows.len() || residual[0] <= 0 {
            return;
        }
        if !bounds.feasible(i, residual[0], residual) {
            return;
        }
        let v = &rows[i].vector;
        let max_mult = residual[0] / v[0];
        for mult in 0..=max_mult {
            if mult > 0 {
                for (t, &x) in residual.iter_mut().zip(v) {
                    *t -= x;
                }
                stack.push((rows[i].singularity, mult as u64));
            }
            dfs(rows, bounds, i + 1, residual, stack, target, found);
            if mult > 0 {
                stack.pop();
            }
        }
        // restore the residual for the caller
        for (t, &x) in residual.iter_mut().zip(v) {
            *t += max_mult * x;
        }
    }

    dfs(
        rows,
        &bounds,
        0,
        &mut residual,
        &mut stack,
        problem.target(),
        &mut found,
    );
    found.sort_by_key(|s| s.sort_key());
    debug_assert!(found.windows(2).all(|w| w[0] != w[1]), "duplicate solutions");
    found
}

/// Reasons a candidate basket cannot come from a minimal 3-fold of general
/// type with the given `χ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EliminationReason {
    /// Solved `K³ ≤ 0`, impossible for general type.
    K3NonPositive,
    /// `Σ (r²-1)/r < 24·χ`, violating the Miyaoka-Reid inequality.
    MiyaokaReidViolated,
}

/// One solution annotated with the elimination data used by the published
/// case analyses: `l(2)`, the `K³` solved from `P₂ = 0`, and the
/// Miyaoka-Reid sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnotatedSolution {
    pub solution: SolutionMultiset,
    pub l2: Rational,
    /// `K³ = 2(3χ - l(2))`, the unique value with `P₂ = 0`.
    pub k3: Rational,
    pub miyaoka_sum: Rational,
    pub miyaoka_pass: bool,
    pub reasons: Vec<EliminationReason>,
}

impl AnnotatedSolution {
    pub fn is_eliminated(&self) -> bool {
        !self.reasons.is_empty()
    }
}

/// Report of a filtered search: every solution plus its viability verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredSearch {
    pub chi: i64,
    pub solutions: Vec<AnnotatedSolution>,
}

/// Enumerate and annotate each solution with `l(2)`, `K³` under `P₂ = 0`,
/// and the Miyaoka-Reid verdict.  A solution is eliminated when `K³ ≤ 0`
/// or the Miyaoka-Reid sum drops below `24·χ`.
pub fn enumerate_with_filters(problem: &SearchProblem, chi: i64) -> FilteredSearch {
    assert!(chi >= 1, "the filters assume chi >= 1");
    let miyaoka_bound = Rational::from_integer(24 * chi);
    let solutions = enumerate(problem)
        .into_iter()
        .map(|solution| {
            let basket = solution.to_basket();
            let l2 = basket.correction(2);
            let k3 = (Rational::from_integer(3 * chi) - &l2) * Rational::from_integer(2);
            let miyaoka_sum = basket.miyaoka_sum();
            let miyaoka_pass = miyaoka_sum >= miyaoka_bound;
            let mut reasons = Vec::new();
            if !k3.is_positive() {
                reasons.push(EliminationReason::K3NonPositive);
            }
            if !miyaoka_pass {
                reasons.push(EliminationReason::MiyaokaReidViolated);
            }
            AnnotatedSolution {
                solution,
                l2,
                k3,
                miyaoka_sum,
                miyaoka_pass,
                reasons,
            }
        })
        .collect();
    FilteredSearch { chi, solutions }
}

#[derive(Serialize)]
struct EntryRecord {
    r: u64,
    a: u64,
    multiplicity: u64,
}

#[derive(Serialize)]
struct SolutionRecord {
    entries: Vec<EntryRecord>,
    sum: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    l2: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k3: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    miyaoka_sum: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    miyaoka_pass: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    eliminated: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reasons: Option<Vec<EliminationReason>>,
}

fn entry_records(solution: &SolutionMultiset) -> Vec<EntryRecord> {
    solution
        .entries()
        .iter()
        .map(|(q, m)| EntryRecord {
            r: q.index(),
            a: q.weight(),
            multiplicity: *m,
        })
        .collect()
}

/// JSON export of bare solutions: `[{entries: [{r, a, multiplicity}], sum}]`.
pub fn solutions_to_json(solutions: &[SolutionMultiset]) -> String {
    let records: Vec<SolutionRecord> = solutions
        .iter()
        .map(|s| SolutionRecord {
            entries: entry_records(s),
            sum: s.sum_check().to_vec(),
            l2: None,
            k3: None,
            miyaoka_sum: None,
            miyaoka_pass: None,
            eliminated: None,
            reasons: None,
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&records).expect("serializable");
    out.push('\n');
    out
}

/// JSON export of annotated solutions, with the annotation fields filled.
pub fn filtered_to_json(report: &FilteredSearch) -> String {
    let records: Vec<SolutionRecord> = report
        .solutions
        .iter()
        .map(|a| SolutionRecord {
            entries: entry_records(&a.solution),
            sum: a.solution.sum_check().to_vec(),
            l2: Some(a.l2.clone()),
            k3: Some(a.k3.clone()),
            miyaoka_sum: Some(a.miyaoka_sum.clone()),
            miyaoka_pass: Some(a.miyaoka_pass),
            eliminated: Some(a.is_eliminated()),
            reasons: Some(a.reasons.clone()),
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&records).expect("serializable");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nabla_problem(target: [i64; 4]) -> SearchProblem {
        SearchProblem::from_table(VectorFamily::Nabla, target.to_vec(), 27).unwrap()
    }

    fn multiset(triples: &[(u64, u64, u64)], sum: &[i64]) -> SolutionMultiset {
        SolutionMultiset::new(
            triples
                .iter()
                .map(|&(r, a, m)| (QuotientSingularity::new(r, a).unwrap(), m))
                .collect(),
            sum.to_vec(),
        )
    }

    #[test]
    fn zero_target_has_the_empty_solution() {
        let problem = nabla_problem([0, 0, 0, 0]);
        let solutions = enumerate(&problem);
        assert_eq!(solutions.len(), 1);
        assert!(solutions[0].entries().is_empty());
    }

    #[test]
    fn infeasible_target_yields_empty_list() {
        let problem = nabla_problem([1, 0, 0, 0]);
        assert!(enumerate(&problem).is_empty());
    }

    #[test]
    fn single_row_target() {
        // nabla' of 1/2(1,-1,1) once
        let problem = nabla_problem([1, 1, 1, -1]);
        let solutions = enumerate(&problem);
        assert_eq!(solutions, vec![multiset(&[(2, 1, 1)], &[1, 1, 1, -1])]);
    }

    #[test]
    fn first_reference_search() {
        let problem = nabla_problem([10, 34, 9, 14]);
        let solutions = enumerate(&problem);
        let expected = vec![
            multiset(&[(2, 1, 3), (5, 3, 2), (10, 7, 1)], &[10, 34, 9, 14]),
            multiset(
                &[(2, 1, 4), (3, 2, 3), (5, 4, 1), (5, 3, 1)],
                &[10, 34, 9, 14],
            ),
            multiset(
                &[(2, 1, 2), (3, 2, 2), (4, 3, 1), (12, 7, 1)],
                &[10, 34, 9, 14],
            ),
        ]
        .into_iter()
        .collect::<std::collections::BTreeSet<_>>();
        assert_eq!(
            solutions.iter().cloned().collect::<std::collections::BTreeSet<_>>(),
            expected
        );
        // canonical output order is lexicographic by sorted entries
        let mut sorted = solutions.clone();
        sorted.sort_by_key(|s| s.sort_key());
        assert_eq!(solutions, sorted);
        // termination bound: total multiplicity never exceeds target[0]
        assert!(solutions.iter().all(|s| s.total_multiplicity() <= 10));
    }

    #[test]
    fn order_independence() {
        let problem = nabla_problem([10, 34, 9, 13]);
        let reference = enumerate(&problem);
        assert_eq!(reference.len(), 1);

        let mut rows = problem.rows().to_vec();
        rows.reverse();
        let permuted = SearchProblem::from_rows(rows, vec![10, 34, 9, 13], 27).unwrap();
        assert_eq!(enumerate(&permuted), reference);

        let mut rows = problem.rows().to_vec();
        rows.rotate_left(37);
        rows.swap(0, 20);
        let permuted = SearchProblem::from_rows(rows, vec![10, 34, 9, 13], 27).unwrap();
        assert_eq!(enumerate(&permuted), reference);
    }

    #[test]
    fn solutions_resum_to_target_via_recomputed_vectors() {
        use crate::reid::{apply_f, nabla_vector};
        let problem = nabla_problem([9, 45, 9, 18]);
        let solutions = enumerate(&problem);
        assert_eq!(solutions.len(), 2);
        for s in &solutions {
            let mut total = [0i64; 4];
            for (q, mult) in s.entries() {
                let row = apply_f(&nabla_vector(q));
                for (acc, val) in total.iter_mut().zip(&row) {
                    *acc += val.to_i64().unwrap() * *mult as i64;
                }
            }
            assert_eq!(total.as_slice(), problem.target());
            assert_eq!(s.sum_check(), problem.target());
        }
    }

    #[test]
    fn lambda_family_search() {
        let problem =
            SearchProblem::from_table(VectorFamily::Lambda, vec![10, 21, 45], 25).unwrap();
        let solutions = enumerate(&problem);
        assert_eq!(solutions.len(), 5);
    }

    #[test]
    fn arity_mismatch_is_rejected() {
        let err = SearchProblem::from_table(VectorFamily::Lambda, vec![10, 21, 45, 1], 25)
            .unwrap_err();
        assert_eq!(
            err,
            SearchError::ArityMismatch {
                family: VectorFamily::Lambda,
                expected: 3,
                got: 4
            }
        );
    }

    #[test]
    fn filters_annotate_and_eliminate() {
        // all three hits of the first search have l(2) = 3, hence K³ = 0
        let report = enumerate_with_filters(&nabla_problem([10, 34, 9, 14]), 1);
        assert_eq!(report.solutions.len(), 3);
        for a in &report.solutions {
            assert_eq!(a.l2, Rational::from_integer(3));
            assert_eq!(a.k3, Rational::zero());
            assert!(a.reasons.contains(&EliminationReason::K3NonPositive));
            assert!(a.is_eliminated());
        }
        // in canonical order: (iii), (i), (ii); the first two sit exactly on
        // the Miyaoka-Reid boundary, (ii) falls below it
        let miyaoka: Vec<&Rational> =
            report.solutions.iter().map(|a| &a.miyaoka_sum).collect();
        assert_eq!(*miyaoka[0], Rational::from_integer(24));
        assert_eq!(*miyaoka[1], Rational::from_integer(24));
        assert_eq!(*miyaoka[2], Rational::new(118, 5));
        assert!(report.solutions[2].reasons.contains(&EliminationReason::MiyaokaReidViolated));

        // case (viii) passes K³ > 0 but fails Miyaoka-Reid
        let report = enumerate_with_filters(&nabla_problem([10, 34, 9, 12]), 1);
        assert_eq!(report.solutions.len(), 1);
        let viii = &report.solutions[0];
        assert_eq!(viii.k3, Rational::new(1, 420));
        assert_eq!(viii.miyaoka_sum, Rational::new(9971, 420));
        assert!(!viii.miyaoka_pass);
        assert_eq!(viii.reasons, vec![EliminationReason::MiyaokaReidViolated]);

        // case (vi) in (9,45,9,18) has l(2) > 3, hence K³ < 0
        let report = enumerate_with_filters(&nabla_problem([9, 45, 9, 18]), 1);
        let vi = report
            .solutions
            .iter()
            .find(|a| a.solution.entries().len() == 4)
            .unwrap();
        assert!(vi.l2 > Rational::from_integer(3));
        assert!(vi.k3.is_negative());
        assert_eq!(vi.k3, Rational::new(-1, 280));
    }

    #[test]
    fn json_exports_are_stable() {
        let problem = nabla_problem([10, 34, 9, 12]);
        let plain = solutions_to_json(&enumerate(&problem));
        let parsed: serde_json::Value = serde_json::from_str(&plain).unwrap();
        assert_eq!(parsed[0]["entries"][0]["r"], 2);
        assert_eq!(parsed[0]["entries"][0]["multiplicity"], 2);

        let annotated = filtered_to_json(&enumerate_with_filters(&problem, 1));
        let parsed: serde_json::Value = serde_json::from_str(&annotated).unwrap();
        assert_eq!(parsed[0]["k3"], "1/420");
        assert_eq!(parsed[0]["miyaoka_sum"], "9971/420");
        assert_eq!(parsed[0]["eliminated"], true);
        assert_eq!(parsed[0]["reasons"][0], "miyaoka-reid-violated");
        // identical invocations produce identical bytes
        assert_eq!(
            filtered_to_json(&enumerate_with_filters(&problem, 1)),
            annotated
        );
    }
}
