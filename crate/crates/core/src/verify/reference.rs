//! Published reference values reproduced by the verification harness: the
//! printed invariant table, the search targets with their case lists, and
//! the plurigenus assumptions each target was derived from.
//!
//! Every expected solution carries the case label it is listed under in
//! the source tables.  Printed values are transcribed as-is; recomputed
//! values are authoritative whenever the two disagree, and any such
//! disagreement is surfaced as a discrepancy by the harness.

use crate::search::VectorFamily;

/// One printed table row.  The type is printed as `1/r(slot1,slot2,1)`;
/// a well-formed entry has `slot2 = -slot1`.  `Λ'` columns are printed
/// only up to index 25.
pub struct PrintedRow {
    pub no: u16,
    pub r: u64,
    pub slot1: u64,
    pub slot2: i64,
    pub nabla: [i64; 4],
    pub lambda: Option<[i64; 3]>,
}

/// Printed rows whose type label is known to be misprinted; the harness
/// reinterprets them from `slot1` and reports the mismatch as documented.
/// Row 65 prints `1/21(20,-10,1)`, which is not of the form `(a,-a,1)`;
/// it is read as `1/21(20,-20,1)`.
pub const DOCUMENTED_LABEL_MISPRINTS: &[u16] = &[65];

const fn row(
    no: u16,
    r: u64,
    slot1: u64,
    slot2: i64,
    nabla: [i64; 4],
    lambda: [i64; 3],
) -> PrintedRow {
    PrintedRow { no, r, slot1, slot2, nabla, lambda: Some(lambda) }
}

const fn row_n(no: u16, r: u64, slot1: u64, slot2: i64, nabla: [i64; 4]) -> PrintedRow {
    PrintedRow { no, r, slot1, slot2, nabla, lambda: None }
}

/// The printed table: all 115 canonical types of index at most 27, with
/// `∇'` throughout and `Λ'` up to index 25 (rows 1-100).
pub const PRINTED_TABLE: &[PrintedRow] = &[
    row(1, 2, 1, -1, [1, 1, 1, -1], [1, 1, 0]),
    row(2, 3, 2, -2, [1, 5, 1, 2], [1, 3, 1]),
    row(3, 4, 3, -3, [1, 7, 1, 3], [1, 4, 1]),
    row(4, 5, 4, -4, [1, 8, 1, 10], [1, 4, 25]),
    row(5, 5, 3, -3, [2, 7, 1, 2], [2, 4, 17]),
    row(6, 6, 5, -5, [1, 8, 4, 14], [1, 4, 41]),
    row(7, 7, 6, -6, [1, 8, 6, 18], [1, 4, 52]),
    row(8, 7, 5, -5, [3, 8, 3, 5], [3, 5, 24]),
    row(9, 7, 4, -4, [2, 12, 3, 7], [2, 7, 8]),
    row(10, 8, 7, -7, [1, 8, 7, 25], [1, 4, 59]),
    row(11, 8, 5, -5, [3, 12, 3, 3], [3, 7, 22]),
    row(12, 9, 8, -8, [1, 8, 7, 35], [1, 4, 65]),
    row(13, 9, 7, -7, [4, 9, 4, 10], [4, 6, 27]),
    row(14, 9, 5, -5, [2, 15, 2, 17], [2, 8, 29]),
    row(15, 10, 9, -9, [1, 8, 7, 43], [1, 4, 70]),
    row(16, 10, 7, -7, [3, 17, 4, 13], [3, 10, 11]),
    row(17, 11, 10, -10, [1, 8, 7, 50], [1, 4, 74]),
    row(18, 11, 9, -9, [5, 10, 5, 13], [5, 7, 29]),
    row(19, 11, 8, -8, [4, 17, 4, 8], [4, 10, 25]),
    row(20, 11, 7, -7, [3, 19, 4, 12], [3, 11, 10]),
    row(21, 11, 6, -6, [2, 16, 5, 27], [2, 8, 67]),
    row(22, 12, 11, -11, [1, 8, 7, 56], [1, 4, 77]),
    row(23, 12, 7, -7, [5, 15, 4, 9], [5, 9, 42]),
    row(24, 13, 12, -12, [1, 8, 7, 61], [1, 4, 79]),
    row(25, 13, 11, -11, [6, 11, 6, 15], [6, 8, 30]),
    row(26, 13, 10, -10, [4, 22, 5, 17], [4, 13, 13]),
    row(27, 13, 9, -9, [3, 22, 3, 22], [3, 12, 31]),
    row(28, 13, 8, -8, [5, 19, 4, 6], [5, 11, 40]),
    row(29, 13, 7, -7, [2, 16, 10, 33], [2, 8, 94]),
    row(30, 14, 13, -13, [1, 8, 7, 65], [1, 4, 80]),
    row(31, 14, 11, -11, [5, 22, 5, 12], [5, 13, 27]),
    row(32, 14, 9, -9, [3, 23, 3, 28], [3, 12, 55]),
    row(33, 15, 14, -14, [1, 8, 7, 68], [1, 4, 80]),
    row(34, 15, 13, -13, [7, 12, 7, 16], [7, 9, 30]),
    row(35, 15, 11, -11, [4, 26, 5, 16], [4, 15, 11]),
    row(36, 15, 8, -8, [2, 16, 13, 44], [2, 8, 111]),
    row(37, 16, 15, -15, [1, 8, 7, 70], [1, 4, 80]),
    row(38, 16, 13, -13, [5, 27, 6, 20], [5, 16, 14]),
    row(39, 16, 11, -11, [3, 24, 6, 38], [3, 12, 92]),
    row(40, 16, 9, -9, [7, 17, 7, 16], [7, 11, 51]),
    row(41, 17, 16, -16, [1, 8, 7, 71], [1, 4, 80]),
    row(42, 17, 15, -15, [8, 13, 8, 16], [8, 10, 30]),
    row(43, 17, 14, -14, [6, 27, 6, 15], [6, 16, 28]),
    row(44, 17, 13, -13, [4, 29, 4, 26], [4, 16, 32]),
    row(45, 17, 12, -12, [7, 22, 5, 12], [7, 13, 59]),
    row(46, 17, 11, -11, [3, 24, 9, 42], [3, 12, 108]),
    row(47, 17, 10, -10, [5, 29, 7, 21], [5, 17, 19]),
    row(48, 17, 9, -9, [2, 16, 14, 61], [2, 8, 124]),
    row(49, 18, 17, -17, [1, 8, 7, 71], [1, 4, 80]),
    row(50, 18, 13, -13, [7, 26, 5, 8], [7, 15, 57]),
    row(51, 18, 11, -11, [5, 31, 7, 19], [5, 18, 18]),
    row(52, 19, 18, -18, [1, 8, 7, 71], [1, 4, 80]),
    row(53, 19, 17, -17, [9, 14, 9, 15], [9, 11, 30]),
    row(54, 19, 16, -16, [6, 32, 7, 22], [6, 19, 15]),
    row(55, 19, 15, -15, [5, 33, 6, 19], [5, 19, 12]),
    row(56, 19, 14, -14, [4, 31, 4, 38], [4, 16, 80]),
    row(57, 19, 13, -13, [3, 24, 14, 47], [3, 12, 135]),
    row(58, 19, 12, -12, [8, 23, 7, 14], [8, 14, 66]),
    row(59, 19, 11, -11, [7, 29, 7, 11], [7, 17, 47]),
    row(60, 19, 10, -10, [2, 16, 14, 78], [2, 8, 135]),
    row(61, 20, 19, -19, [1, 8, 7, 71], [1, 4, 80]),
    row(62, 20, 17, -17, [7, 32, 7, 17], [7, 19, 29]),
    row(63, 20, 13, -13, [3, 24, 16, 51], [3, 12, 146]),
    row(64, 20, 11, -11, [9, 19, 9, 23], [9, 13, 56]),
    row(65, 21, 20, -10, [1, 8, 7, 71], [1, 4, 80]),
    row(66, 21, 19, -19, [10, 15, 10, 14], [10, 12, 30]),
    row(67, 21, 17, -17, [5, 36, 5, 29], [5, 20, 33]),
    row(68, 21, 16, -16, [4, 32, 7, 48], [4, 16, 117]),
    row(69, 21, 13, -13, [8, 31, 7, 9], [8, 18, 62]),
    row(70, 21, 11, -11, [2, 16, 14, 93], [2, 8, 144]),
    row(71, 22, 21, -21, [1, 8, 7, 71], [1, 4, 80]),
    row(72, 22, 19, -19, [7, 37, 8, 24], [7, 22, 16]),
    row(73, 22, 17, -17, [9, 29, 6, 14], [9, 17, 76]),
    row(74, 22, 15, -15, [3, 24, 19, 62], [3, 12, 163]),
    row(75, 22, 13, -13, [5, 37, 5, 39], [5, 20, 60]),
    row(76, 23, 22, -22, [1, 8, 7, 71], [1, 4, 80]),
    row(77, 23, 21, -21, [11, 16, 11, 13], [11, 13, 30]),
    row(78, 23, 20, -20, [8, 37, 8, 19], [8, 22, 30]),
    row(79, 23, 19, -19, [6, 40, 7, 22], [6, 23, 13]),
    row(80, 23, 18, -18, [9, 33, 6, 10], [9, 19, 74]),
    row(81, 23, 17, -17, [4, 32, 13, 56], [4, 16, 149]),
    row(82, 23, 16, -16, [10, 25, 10, 21], [10, 16, 75]),
    row(83, 23, 15, -15, [3, 24, 20, 69], [3, 12, 170]),
    row(84, 23, 14, -14, [5, 38, 5, 45], [5, 20, 84]),
    row(85, 23, 13, -13, [7, 39, 9, 30], [7, 23, 24]),
    row(86, 23, 12, -12, [2, 16, 14, 106], [2, 8, 151]),
    row(87, 24, 23, -23, [1, 8, 7, 71], [1, 4, 80]),
    row(88, 24, 19, -19, [5, 39, 5, 48], [5, 20, 105]),
    row(89, 24, 17, -17, [7, 41, 10, 28], [7, 24, 27]),
    row(90, 24, 13, -13, [11, 21, 11, 28], [11, 15, 59]),
    row(91, 25, 24, -24, [1, 8, 7, 71], [1, 4, 80]),
    row(92, 25, 23, -23, [12, 17, 12, 12], [12, 14, 30]),
    row(93, 25, 22, -22, [8, 42, 9, 26], [8, 25, 17]),
    row(94, 25, 21, -21, [6, 43, 6, 32], [6, 24, 34]),
    row(95, 25, 19, -19, [4, 32, 18, 61], [4, 16, 176]),
    row(96, 25, 18, -18, [7, 43, 10, 26], [7, 25, 26]),
    row(97, 25, 17, -17, [3, 24, 21, 86], [3, 12, 183]),
    row(98, 25, 16, -16, [11, 26, 11, 26], [11, 17, 78]),
    row(99, 25, 14, -14, [9, 39, 9, 20], [9, 23, 52]),
    row(100, 25, 13, -13, [2, 16, 14, 117], [2, 8, 156]),
    row_n(101, 26, 25, -25, [1, 8, 7, 71]),
    row_n(102, 26, 23, -23, [9, 42, 9, 21]),
    row_n(103, 26, 21, -21, [5, 40, 8, 58]),
    row_n(104, 26, 19, -19, [11, 31, 10, 19]),
    row_n(105, 26, 17, -17, [3, 24, 21, 96]),
    row_n(106, 26, 15, -15, [7, 45, 9, 28]),
    row_n(107, 27, 26, -26, [1, 8, 7, 71]),
    row_n(108, 27, 25, -25, [13, 18, 13, 11]),
    row_n(109, 27, 23, -23, [7, 47, 8, 25]),
    row_n(110, 27, 22, -22, [11, 36, 7, 16]),
    row_n(111, 27, 20, -20, [4, 32, 22, 69]),
    row_n(112, 27, 19, -19, [10, 41, 10, 14]),
    row_n(113, 27, 17, -17, [8, 46, 11, 34]),
    row_n(114, 27, 16, -16, [5, 40, 11, 65]),
    row_n(115, 27, 14, -14, [2, 16, 14, 126]),
];

/// Printed note accompanying a case-list solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrintedL2 {
    EqualsThree,
    GreaterThanThree,
}

impl std::fmt::Display for PrintedL2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PrintedL2::EqualsThree => write!(f, "l(2)=3"),
            PrintedL2::GreaterThanThree => write!(f, "l(2)>3"),
        }
    }
}

/// One expected solution, as listed in the source case lists (i)-(xvi).
pub struct ExpectedSolution {
    /// Roman-numeral case label from the published lists.
    pub id: &'static str,
    /// `(r, a, multiplicity)` triples of the basket.
    pub entries: &'static [(u64, u64, u64)],
    /// The printed `l(2)` note, where one is given.
    pub printed_l2: Option<PrintedL2>,
}

/// One published search: the plurigenus assumptions it encodes, the printed
/// target tuple, and the expected solution list (possibly empty).
///
/// All searches assume `χ = 1` and `P₂ = 0`.  `assumed` pins the remaining
/// plurigenera appearing in the defining identities; the target tuple must
/// be recoverable from them, which the harness re-derives and checks.
pub struct ReferenceCase {
    pub label: &'static str,
    pub family: VectorFamily,
    /// Assumed plurigenus values `(m, P_m)`.
    pub assumed: &'static [(u32, i64)],
    pub target: &'static [i64],
    pub expected: &'static [ExpectedSolution],
}

use PrintedL2::{EqualsThree, GreaterThanThree};

/// The twelve published searches, in campaign order: the eleven
/// 4-component searches behind `P₁₈ ≥ 3` and the single 3-component
/// search behind `P_m ≥ 1` for `m ≥ 14`.  Cases absent from the published
/// lists (step 2 cases c/e, step 3 case e) are expected to come up empty.
pub const REFERENCE_CASES: &[ReferenceCase] = &[
    ReferenceCase {
        label: "p18-step1",
        family: VectorFamily::Nabla,
        assumed: &[(3, 0), (6, 0), (9, 0), (18, 0)],
        target: &[10, 34, 9, 14],
        expected: &[
            ExpectedSolution {
                id: "i",
                entries: &[(2, 1, 3), (5, 3, 2), (10, 7, 1)],
                printed_l2: Some(EqualsThree),
            },
            ExpectedSolution {
                id: "ii",
                entries: &[(2, 1, 4), (3, 2, 3), (5, 4, 1), (5, 3, 1)],
                printed_l2: Some(EqualsThree),
            },
            ExpectedSolution {
                id: "iii",
                entries: &[(2, 1, 2), (3, 2, 2), (4, 3, 1), (12, 7, 1)],
                printed_l2: Some(EqualsThree),
            },
        ],
    },
    ReferenceCase {
        label: "p18-step2a",
        family: VectorFamily::Nabla,
        assumed: &[(3, 0), (6, 0), (9, 0), (18, 1)],
        target: &[10, 34, 9, 13],
        expected: &[ExpectedSolution {
            id: "iv",
            entries: &[(2, 1, 5), (4, 3, 2), (5, 4, 1), (5, 3, 1)],
            printed_l2: Some(EqualsThree),
        }],
    },
    ReferenceCase {
        label: "p18-step2b",
        family: VectorFamily::Nabla,
        assumed: &[(3, 0), (6, 1), (9, 0), (18, 1)],
        target: &[10, 33, 13, 17],
        expected: &[ExpectedSolution {
            id: "v",
            entries: &[(2, 1, 5), (3, 2, 4), (6, 5, 1)],
            printed_l2: Some(EqualsThree),
        }],
    },
    ReferenceCase {
        label: "p18-step2c",
        family: VectorFamily::Nabla,
        assumed: &[(3, 0), (6, 0), (9, 1), (18, 1)],
        target: &[10, 34, 8, 21],
        expected: &[],
    },
    ReferenceCase {
        label: "p18-step2d",
        family: VectorFamily::Nabla,
        assumed: &[(3, 1), (6, 1), (9, 1), (18, 1)],
        target: &[9, 45, 9, 18],
        expected: &[
            ExpectedSolution {
                id: "vi",
                entries: &[(4, 3, 2), (5, 3, 1), (7, 4, 1), (8, 5, 1)],
                printed_l2: Some(GreaterThanThree),
            },
            ExpectedSolution {
                id: "vii",
                entries: &[(3, 2, 9)],
                printed_l2: Some(EqualsThree),
            },
        ],
    },
    ReferenceCase {
        label: "p18-step2e",
        family: VectorFamily::Nabla,
        assumed: &[(3, 0), (6, 1), (9, 1), (18, 1)],
        target: &[10, 33, 12, 25],
        expected: &[],
    },
    ReferenceCase {
        label: "p18-step3a",
        family: VectorFamily::Nabla,
        assumed: &[(3, 0), (6, 0), (9, 0), (18, 2)],
        target: &[10, 34, 9, 12],
        expected: &[ExpectedSolution {
            id: "viii",
            entries: &[(2, 1, 2), (3, 2, 2), (4, 3, 1), (5, 3, 1), (7, 5, 1)],
            printed_l2: None,
        }],
    },
    ReferenceCase {
        label: "p18-step3b",
        family: VectorFamily::Nabla,
        assumed: &[(3, 0), (6, 1), (9, 0), (18, 2)],
        target: &[10, 33, 13, 16],
        expected: &[ExpectedSolution {
            id: "ix",
            entries: &[(2, 1, 6), (3, 2, 1), (4, 3, 2), (6, 5, 1)],
            printed_l2: Some(EqualsThree),
        }],
    },
    ReferenceCase {
        label: "p18-step3c",
        family: VectorFamily::Nabla,
        assumed: &[(3, 0), (6, 0), (9, 1), (18, 2)],
        target: &[10, 34, 8, 20],
        expected: &[ExpectedSolution {
            id: "x",
            entries: &[(2, 1, 4), (5, 4, 2), (5, 3, 2)],
            printed_l2: Some(EqualsThree),
        }],
    },
    ReferenceCase {
        label: "p18-step3d",
        family: VectorFamily::Nabla,
        assumed: &[(3, 1), (6, 1), (9, 1), (18, 2)],
        target: &[9, 45, 9, 17],
        expected: &[ExpectedSolution {
            id: "xi",
            entries: &[(2, 1, 1), (3, 2, 6), (4, 3, 2)],
            printed_l2: Some(EqualsThree),
        }],
    },
    ReferenceCase {
        label: "p18-step3e",
        family: VectorFamily::Nabla,
        assumed: &[(3, 0), (6, 1), (9, 1), (18, 2)],
        target: &[10, 33, 12, 24],
        expected: &[],
    },
    ReferenceCase {
        label: "pm14",
        family: VectorFamily::Lambda,
        assumed: &[(3, 0), (5, 0), (15, 0)],
        target: &[10, 21, 45],
        expected: &[
            ExpectedSolution {
                id: "xii",
                entries: &[(2, 1, 3), (5, 3, 2), (10, 7, 1)],
                printed_l2: Some(EqualsThree),
            },
            ExpectedSolution {
                id: "xiii",
                entries: &[(2, 1, 3), (4, 3, 1), (8, 5, 2)],
                printed_l2: Some(EqualsThree),
            },
            ExpectedSolution {
                id: "xiv",
                entries: &[(2, 1, 2), (3, 2, 2), (4, 3, 1), (12, 7, 1)],
                printed_l2: Some(GreaterThanThree),
            },
            ExpectedSolution {
                id: "xv",
                entries: &[(2, 1, 4), (3, 2, 3), (5, 4, 1), (5, 3, 1)],
                printed_l2: Some(EqualsThree),
            },
            ExpectedSolution {
                id: "xvi",
                entries: &[(2, 1, 5), (3, 2, 4), (6, 5, 1)],
                printed_l2: Some(EqualsThree),
            },
        ],
    },
];

/// The plurigenus sequence `P₂..P₂₁` published for the case (viii) basket
/// with its solved `K³ = 1/420`.
pub const CASE_VIII_SEQUENCE: [i64; 20] =
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 2, 2, 3, 3];

/// The case (viii) basket, `(r, a, multiplicity)` triples.
pub const CASE_VIII_BASKET: &[(u64, u64, u64)] =
    &[(2, 1, 2), (3, 2, 2), (4, 3, 1), (5, 3, 1), (7, 5, 1)];
