//! Dellac configurations, their symplectic (mirror-fixed) variant, the melt
//! and blow maps between restricted rook arrangements and configurations,
//! and lazy canonical enumeration of both families.

use crate::boards::{right_hull, RookArrangement};
use crate::error::Error;
use crate::perm::tau;

/// A Dellac configuration of order `n`: a board with `n` rows and `2n`
/// columns where every row holds exactly two marks, every column exactly
/// one, and a mark in row `i` sits in a column `j` with `i ≤ j ≤ n + i`.
///
/// Rows store their two marked columns as an ascending pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DellacConfig {
    n: usize,
    rows: Vec<(usize, usize)>,
}

impl DellacConfig {
    /// Builds a configuration from per-row column pairs (in either order),
    /// checking all three defining conditions.
    pub fn new(n: usize, rows: Vec<(usize, usize)>) -> Result<Self, Error> {
        if rows.len() != n {
            return Err(Error::InvalidDellac {
                reason: format!("expected {n} rows, got {}", rows.len()),
            });
        }
        let rows: Vec<(usize, usize)> = rows
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        let mut column_used = vec![false; 2 * n + 1];
        for (idx, &(a, b)) in rows.iter().enumerate() {
            let i = idx + 1;
            if a == b {
                return Err(Error::InvalidDellac {
                    reason: format!("row {i} marks column {a} twice"),
                });
            }
            for j in [a, b] {
                if j < i || j > n + i {
                    return Err(Error::InvalidDellac {
                        reason: format!("mark ({i}, {j}) outside the allowed band"),
                    });
                }
                if column_used[j] {
                    return Err(Error::InvalidDellac {
                        reason: format!("column {j} marked more than once"),
                    });
                }
                column_used[j] = true;
            }
        }
        Ok(DellacConfig { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The two marked columns of each row, ascending within the row.
    pub fn rows(&self) -> &[(usize, usize)] {
        &self.rows
    }

    /// Whether cell `(i, j)` is marked, 1-based.
    pub fn is_marked(&self, i: usize, j: usize) -> bool {
        let (a, b) = self.rows[i - 1];
        j == a || j == b
    }

    /// Whether the configuration is fixed by the half-turn mirror
    /// `(i, j) ↦ (n − i + 1, 2n − j + 1)`. Only defined for an even number
    /// of rows.
    pub fn is_symplectic(&self) -> Result<bool, Error> {
        if self.n % 2 != 0 {
            return Err(Error::OddSize { size: self.n });
        }
        let cols = 2 * self.n;
        Ok((1..=self.n).all(|i| {
            let (a, b) = self.rows[self.n - i];
            self.rows[i - 1] == (cols + 1 - b, cols + 1 - a)
        }))
    }
}

/// Merges consecutive row pairs of a restricted rook arrangement: row `k` of
/// the result holds the columns marked in rows `2k − 1` and `2k` of the
/// input. The input must have even size `2n` with all marks inside the right
/// hull of `tau(n)`; the result is then a valid configuration of order `n`.
pub fn melt(r: &RookArrangement) -> Result<DellacConfig, Error> {
    let m = r.size();
    if m % 2 != 0 {
        return Err(Error::OddSize { size: m });
    }
    let n = m / 2;
    let hull = right_hull(&tau(n));
    for row in 1..=m {
        if !hull.contains_cell(row, r.mark_in_row(row)) {
            return Err(Error::UnrestrictedRook { row });
        }
    }
    let rows = (1..=n)
        .map(|k| (r.mark_in_row(2 * k - 1), r.mark_in_row(2 * k)))
        .collect();
    Ok(
        DellacConfig::new(n, rows)
            .expect("a restricted arrangement melts to a valid configuration"),
    )
}

/// Splits each row of a configuration into two rook rows: the smaller column
/// goes to row `2i − 1`, the larger to row `2i`. Inverse to [`melt`] on its
/// image; the output is always restricted with respect to `tau(n)`.
pub fn blow(c: &DellacConfig) -> RookArrangement {
    let mut marks = Vec::with_capacity(2 * c.n());
    for &(a, b) in c.rows() {
        marks.push(a);
        marks.push(b);
    }
    RookArrangement::new(marks).expect("configuration rows have pairwise distinct columns")
}

/// All Dellac configurations of order `n`, streamed lazily in lexicographic
/// order of the flattened row pairs.
pub fn enumerate_dc(n: usize) -> DellacStream {
    DellacStream::new(n)
}

/// The number of Dellac configurations of order `n`.
pub fn count_dc(n: usize) -> u64 {
    enumerate_dc(n).count() as u64
}

/// A Dellac configuration of order `2n` fixed by the half-turn mirror,
/// recording the half-rank `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpDellacConfig {
    config: DellacConfig,
}

impl SpDellacConfig {
    /// Wraps a configuration after checking that its order is even and that
    /// it passes [`DellacConfig::is_symplectic`].
    pub fn new(config: DellacConfig) -> Result<Self, Error> {
        if !config.is_symplectic()? {
            return Err(Error::InvalidDellac {
                reason: "configuration is not mirror-fixed".into(),
            });
        }
        Ok(SpDellacConfig { config })
    }

    pub fn half_rank(&self) -> usize {
        self.config.n() / 2
    }

    pub fn config(&self) -> &DellacConfig {
        &self.config
    }

    pub fn into_config(self) -> DellacConfig {
        self.config
    }
}

/// All symplectic Dellac configurations of half-rank `n` (boards with `2n`
/// rows and `4n` columns), streamed lazily in lexicographic order.
///
/// Only rows `1..=n` are searched; rows `n+1..=2n` are forced by the mirror
/// condition and the completed board is re-validated before being yielded.
pub fn enumerate_spdc(n: usize) -> SpdcStream {
    SpdcStream::new(n)
}

/// The number of symplectic Dellac configurations of half-rank `n`.
pub fn count_spdc(n: usize) -> u64 {
    enumerate_spdc(n).count() as u64
}

/// Finds the lexicographically smallest candidate pair after `after` for a
/// row with column band `lo..=hi`, skipping used columns.
fn next_pair(
    used: &[bool],
    lo: usize,
    hi: usize,
    after: Option<(usize, usize)>,
) -> Option<(usize, usize)> {
    let (mut a, mut b_floor) = match after {
        None => (lo, 0),
        Some((a0, b0)) => (a0, b0),
    };
    while a <= hi {
        if !used[a] {
            let from = (a + 1).max(b_floor + 1);
            if let Some(b) = (from..=hi).find(|&c| !used[c]) {
                return Some((a, b));
            }
        }
        a += 1;
        b_floor = 0;
    }
    None
}

/// Lazy depth-first enumeration of Dellac configurations, one row per level.
#[derive(Debug, Clone)]
pub struct DellacStream {
    n: usize,
    used: Vec<bool>,
    stack: Vec<(usize, usize)>,
    started: bool,
    done: bool,
}

impl DellacStream {
    fn new(n: usize) -> Self {
        DellacStream {
            n,
            used: vec![false; 2 * n + 1],
            stack: Vec::with_capacity(n),
            started: false,
            done: false,
        }
    }

    fn advance(&mut self) -> bool {
        let n = self.n;
        let mut after = if self.started {
            match self.stack.pop() {
                Some((a, b)) => {
                    self.used[a] = false;
                    self.used[b] = false;
                    Some((a, b))
                }
                None => return false,
            }
        } else {
            self.started = true;
            if n == 0 {
                return true;
            }
            None
        };
        loop {
            let row = self.stack.len() + 1;
            match next_pair(&self.used, row, n + row, after) {
                Some((a, b)) => {
                    self.used[a] = true;
                    self.used[b] = true;
                    self.stack.push((a, b));
                    if self.stack.len() == n {
                        return true;
                    }
                    after = None;
                }
                None => match self.stack.pop() {
                    Some((a, b)) => {
                        self.used[a] = false;
                        self.used[b] = false;
                        after = Some((a, b));
                    }
                    None => return false,
                },
            }
        }
    }
}

impl Iterator for DellacStream {
    type Item = DellacConfig;

    fn next(&mut self) -> Option<DellacConfig> {
        if self.done {
            return None;
        }
        if self.advance() {
            Some(DellacConfig {
                n: self.n,
                rows: self.stack.clone(),
            })
        } else {
            self.done = true;
            None
        }
    }
}

/// Lazy depth-first enumeration of symplectic Dellac configurations by their
/// top halves. Choosing column `c` reserves both `c` and its mirror column,
/// so the forced bottom half never collides with the top.
#[derive(Debug, Clone)]
pub struct SpdcStream {
    half: usize,
    used: Vec<bool>,
    stack: Vec<(usize, usize)>,
    started: bool,
    done: bool,
}

impl SpdcStream {
    fn new(half: usize) -> Self {
        SpdcStream {
            half,
            used: vec![false; 4 * half + 1],
            stack: Vec::with_capacity(half),
            started: false,
            done: false,
        }
    }

    fn mark(&mut self, pair: (usize, usize), value: bool) {
        let cols = 4 * self.half;
        for c in [pair.0, pair.1] {
            self.used[c] = value;
            self.used[cols + 1 - c] = value;
        }
    }

    fn advance(&mut self) -> bool {
        let half = self.half;
        let mut after = if self.started {
            match self.stack.pop() {
                Some(pair) => {
                    self.mark(pair, false);
                    Some(pair)
                }
                None => return false,
            }
        } else {
            self.started = true;
            if half == 0 {
                return true;
            }
            None
        };
        loop {
            let row = self.stack.len() + 1;
            match next_pair(&self.used, row, 2 * half + row, after) {
                Some(pair) if pair.1 == 4 * half + 1 - pair.0 => {
                    after = Some(pair);
                }
                Some(pair) => {
                    self.mark(pair, true);
                    self.stack.push(pair);
                    if self.stack.len() == half {
                        return true;
                    }
                    after = None;
                }
                None => match self.stack.pop() {
                    Some(pair) => {
                        self.mark(pair, false);
                        after = Some(pair);
                    }
                    None => return false,
                },
            }
        }
    }

    fn complete(&self) -> SpDellacConfig {
        let cols = 4 * self.half;
        let mut rows = self.stack.clone();
        for i in (1..=self.half).rev() {
            let (a, b) = self.stack[i - 1];
            rows.push((cols + 1 - b, cols + 1 - a));
        }
        let config = DellacConfig::new(2 * self.half, rows)
            .expect("mirrored completion of a legal top half is a valid configuration");
        SpDellacConfig::new(config).expect("mirrored completion is mirror-fixed")
    }
}

impl Iterator for SpdcStream {
    type Item = SpDellacConfig;

    fn next(&mut self) -> Option<SpDellacConfig> {
        if self.done {
            return None;
        }
        if self.advance() {
            Some(self.complete())
        } else {
            self.done = true;
            None
        }
    }
}
