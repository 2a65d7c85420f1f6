//! Reference values of `C_2(n,t)` and `P_2(n,t)` for `10 <= n <= 20`,
//! `1 <= t <= 10`.

use cwl_core::table::{CountKind, CountTable};
use cwl_core::Count;

pub const FIRST_N: usize = 10;
pub const LAST_N: usize = 20;
pub const FIRST_T: usize = 1;
pub const LAST_T: usize = 10;

const ROWS: usize = LAST_N - FIRST_N + 1;
const COLS: usize = LAST_T - FIRST_T + 1;

#[rustfmt::skip]
const CLOSED: [[u32; COLS]; ROWS] = [
    [2,    30,    70,    50,    30,    12,    6,    2,    2,    0],
    [2,    42,   118,    96,    54,    30,   13,    6,    2,    2],
    [2,    60,   200,   182,   114,    54,   30,   12,    6,    2],
    [2,    88,   338,   346,   214,   126,   54,   30,   12,    6],
    [2,   132,   570,   640,   432,   232,  126,   54,   30,   12],
    [2,   202,   962,  1192,   828,   474,  240,  126,   54,   30],
    [2,   314,  1626,  2220,  1612,   908,  492,  240,  126,   54],
    [2,   494,  2754,  4128,  3112,  1822,  956,  504,  240,  126],
    [2,   784,  4676,  7670,  6024,  3596, 1934,  982,  504,  240],
    [2,  1252,  7960, 14264, 11636,  7084, 3828, 1992,  990,  504],
    [2,  2008, 13588, 26524, 22512, 13928, 7632, 3946, 2026,  990],
];

#[rustfmt::skip]
const PRIVILEGED: [[u32; COLS]; ROWS] = [
    [2,    16,    22,    8,     6,     2,    2,    0,    2,    0],
    [2,    26,    38,   16,    10,     6,    4,    2,    2,    2],
    [2,    42,    68,   30,    18,     4,    6,    2,    2,    0],
    [2,    68,   122,   58,    38,    14,   10,    6,    4,    2],
    [2,   110,   218,  108,    76,    20,   14,    8,    6,    2],
    [2,   178,   390,  204,   148,    46,   24,   18,   14,    6],
    [2,   288,   698,  384,   288,    86,   48,   16,   18,    8],
    [2,   466,  1250,  724,   556,   178,   92,   36,   32,   26],
    [2,   754,  2240, 1364,  1076,   344,  190,   64,   36,   28],
    [2,  1220,  4016, 2572,  2092,   688,  388,  136,   70,   56],
    [2,  1974,  7204, 4850,  4068,  1342,  772,  268,  138,   52],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoldenTable {
    pub kind: CountKind,
    values: &'static [[u32; COLS]; ROWS],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub t: usize,
    pub expected: Count,
    pub actual: Count,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenDiff {
    pub compared: usize,
    pub mismatches: Vec<Mismatch>,
}

impl GoldenDiff {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl GoldenTable {
    /// Reference table for closed or privileged words; `None` for other kinds.
    pub fn for_kind(kind: CountKind) -> Option<Self> {
        let values = match kind {
            CountKind::Closed => &CLOSED,
            CountKind::Privileged => &PRIVILEGED,
            _ => return None,
        };
        Some(Self { kind, values })
    }

    pub fn get(&self, n: usize, t: usize) -> Option<Count> {
        if !(FIRST_N..=LAST_N).contains(&n) || !(FIRST_T..=LAST_T).contains(&t) {
            return None;
        }
        Some(Count::from(self.values[n - FIRST_N][t - FIRST_T]))
    }

    /// Cells `(n, t, value)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, Count)> + '_ {
        (FIRST_N..=LAST_N).flat_map(move |n| {
            (FIRST_T..=LAST_T).map(move |t| (n, t, self.get(n, t).expect("in window")))
        })
    }

    /// Compares every reference cell accepted by `select` against `table`,
    /// reading absent entries as zero.
    pub fn diff(&self, table: &CountTable, select: impl Fn(usize, usize) -> bool) -> GoldenDiff {
        let mut compared = 0;
        let mut mismatches = Vec::new();
        for (n, t, expected) in self.cells().filter(|&(n, t, _)| select(n, t)) {
            compared += 1;
            let actual = table.value(n, t);
            if actual != expected {
                mismatches.push(Mismatch {
                    n,
                    t,
                    expected,
                    actual,
                });
            }
        }
        GoldenDiff {
            compared,
            mismatches,
        }
    }
}
