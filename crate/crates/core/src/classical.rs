//! Classical RSK on nonnegative integer matrices, the toggle construction
//! of the reverse plane partition, and Gelfand–Tsetlin patterns. Used as an
//! independent oracle for the generalized RSK on rectangles.

use std::fmt;

use num_traits::ToPrimitive;

use crate::analysis::Analysis;
use crate::error::{domain, Error, Result};
use crate::generators::{young, young_cells};
use crate::rational::int;
use crate::rsk::{rsk, Filling, InsertionOrder};
use crate::poset::LinearExtension;

/// A rectangular array of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixFilling {
    rows: Vec<Vec<u64>>,
}

impl MatrixFilling {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self> {
        if let Some(first) = rows.first() {
            if first.is_empty() {
                return domain("matrix rows must be nonempty");
            }
            if rows.iter().any(|r| r.len() != first.len()) {
                return domain("matrix rows have different lengths");
            }
        }
        Ok(MatrixFilling { rows })
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.rows[i][j]
    }

    pub fn total(&self) -> u64 {
        self.rows.iter().flatten().sum()
    }

    /// Rows and columns weakly increase.
    pub fn is_rpp(&self) -> bool {
        let (h, w) = (self.height(), self.width());
        (0..h).all(|i| {
            (0..w).all(|j| {
                (i + 1 >= h || self.rows[i][j] <= self.rows[i + 1][j])
                    && (j + 1 >= w || self.rows[i][j] <= self.rows[i][j + 1])
            })
        })
    }

    /// The shape as a partition with every row full.
    pub fn shape(&self) -> Vec<usize> {
        vec![self.width(); self.height()]
    }
}

impl fmt::Display for MatrixFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// A semistandard Young tableau: rows weakly increase, columns strictly.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Ssyt {
    rows: Vec<Vec<u64>>,
}

impl Ssyt {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self> {
        let t = Ssyt { rows };
        if t.rows.iter().any(Vec::is_empty) {
            return domain("tableau rows must be nonempty");
        }
        if !t.is_semistandard() {
            return domain(format!("{:?} is not semistandard", t.rows));
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.windows(2).all(|w| w[0].len() >= w[1].len())
            && self.rows.iter().all(|r| r.windows(2).all(|p| p[0] <= p[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
        rows_ok && cols_ok
    }

    /// Row insertion; returns the row where the tableau grew.
    fn insert(&mut self, mut v: u64) -> usize {
        for (r, row) in self.rows.iter_mut().enumerate() {
            match row.iter().position(|&e| e > v) {
                Some(k) => v = std::mem::replace(&mut row[k], v),
                None => {
                    row.push(v);
                    return r;
                }
            }
        }
        self.rows.push(vec![v]);
        self.rows.len() - 1
    }
}

impl fmt::Display for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// An interlacing triangle, longest row first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GtPattern {
    rows: Vec<Vec<u64>>,
}

impl GtPattern {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self> {
        let n = rows.len();
        for (k, row) in rows.iter().enumerate() {
            if row.len() != n - k {
                return domain(format!("row {k} has length {}, expected {}", row.len(), n - k));
            }
        }
        for k in 0..n.saturating_sub(1) {
            for m in 0..rows[k + 1].len() {
                let v = rows[k + 1][m];
                if !(rows[k][m] >= v && v >= rows[k][m + 1]) {
                    return domain(format!("rows {k} and {} do not interlace at position {m}", k + 1));
                }
            }
        }
        Ok(GtPattern { rows })
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }
}

impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// RSK through the two-line array: each entry `m[i][j]` contributes that
/// many columns `(i+1, j+1)`; bottom entries are row-inserted into `P` and
/// top entries recorded in `Q`.
pub fn classical_insert_rsk(m: &MatrixFilling) -> (Ssyt, Ssyt) {
    let mut p = Ssyt::default();
    let mut q = Ssyt::default();
    for (i, row) in m.rows().iter().enumerate() {
        for (j, &count) in row.iter().enumerate() {
            for _ in 0..count {
                let r = p.insert(j as u64 + 1);
                if r == q.rows.len() {
                    q.rows.push(Vec::new());
                }
                q.rows[r].push(i as u64 + 1);
            }
        }
    }
    (p, q)
}

/// Squares row by row.
pub fn reading_order(height: usize, width: usize) -> Vec<(usize, usize)> {
    young_cells(&vec![width; height])
}

fn check_square_order(h: usize, w: usize, order: &[(usize, usize)]) -> Result<()> {
    let mut seen = vec![false; h * w];
    for &(i, j) in order {
        if i >= h || j >= w {
            return domain(format!("square ({i}, {j}) is outside the {h}x{w} shape"));
        }
        if seen[i * w + j] {
            return domain(format!("square ({i}, {j}) is listed twice"));
        }
        if (i > 0 && !seen[(i - 1) * w + j]) || (j > 0 && !seen[i * w + j - 1]) {
            return domain(format!("square ({i}, {j}) comes before the square above or to its left"));
        }
        seen[i * w + j] = true;
    }
    if order.len() != h * w {
        return domain(format!("order lists {} of {} squares", order.len(), h * w));
    }
    Ok(())
}

/// Builds the reverse plane partition square by square: a new square gets
/// `max(above, left) + t`, then every other built square on its diagonal is
/// toggled to `max(above, left) + min(below, right) - p`. Missing squares
/// read as 0.
pub fn toggle_rpp(m: &MatrixFilling, order: &[(usize, usize)]) -> Result<MatrixFilling> {
    let (h, w) = (m.height(), m.width());
    check_square_order(h, w, order)?;
    let mut p: Vec<Vec<Option<i64>>> = vec![vec![None; w]; h];
    let read = |p: &Vec<Vec<Option<i64>>>, i: Option<usize>, j: Option<usize>| -> i64 {
        match (i, j) {
            (Some(i), Some(j)) if i < h && j < w => p[i][j].unwrap_or(0),
            _ => 0,
        }
    };
    for &(a, b) in order {
        let above = read(&p, a.checked_sub(1), Some(b));
        let left = read(&p, Some(a), b.checked_sub(1));
        p[a][b] = Some(above.max(left) + m.get(a, b) as i64);
        for i in 0..h {
            let Some(j) = (i + b).checked_sub(a).filter(|&j| j < w) else { continue };
            if i == a || p[i][j].is_none() {
                continue;
            }
            let up = read(&p, i.checked_sub(1), Some(j)).max(read(&p, Some(i), j.checked_sub(1)));
            let down = read(&p, Some(i + 1), Some(j)).min(read(&p, Some(i), Some(j + 1)));
            p[i][j] = Some(up + down - p[i][j].unwrap());
        }
    }
    let rows = p
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|v| {
                    let v = v.expect("every square was built");
                    u64::try_from(v).map_err(|_| Error::Contract(format!("negative RPP entry {v}")))
                })
                .collect::<Result<Vec<u64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    MatrixFilling::new(rows)
}

/// The lower and upper triangles of a square RPP read as GT patterns.
///
/// Row `k` of the lower pattern is the `k`-th diagonal below the main one,
/// read from its bottom-right end; the upper pattern is the transpose.
pub fn gt_from_rpp(r: &MatrixFilling) -> Result<(GtPattern, GtPattern)> {
    let n = r.height();
    if r.width() != n {
        return domain(format!("GT patterns need a square RPP, got {}x{}", n, r.width()));
    }
    let lower = (0..n)
        .map(|k| (0..n - k).rev().map(|m| r.get(k + m, m)).collect())
        .collect();
    let upper = (0..n)
        .map(|k| (0..n - k).rev().map(|m| r.get(m, k + m)).collect())
        .collect();
    Ok((GtPattern::new(lower)?, GtPattern::new(upper)?))
}

/// The SSYT whose entries `<= i` fill the shape given by the `i`-th row of
/// the pattern counted from the bottom.
pub fn ssyt_from_gt(g: &GtPattern) -> Result<Ssyt> {
    let n = g.rows.len();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for i in 1..=n {
        let shape = &g.rows[n - i];
        for (r, &len) in shape.iter().enumerate() {
            let len = len as usize;
            if len == 0 {
                continue;
            }
            if r == rows.len() {
                rows.push(Vec::new());
            }
            if r > rows.len() {
                return domain("pattern rows do not describe nested shapes");
            }
            while rows[r].len() < len {
                rows[r].push(i as u64);
            }
        }
    }
    Ssyt::new(rows)
}

/// The generalized RSK on the rectangle poset, with square `(i, j)` as the
/// element of cell `(i, j)`.
pub fn rsk_on_rectangle(m: &MatrixFilling) -> Result<MatrixFilling> {
    let (h, w) = (m.height(), m.width());
    let an = Analysis::new(young(&m.shape())?)?;
    let t = Filling::new(m.rows().iter().flatten().map(|&v| int(v as i64)).collect());
    // Reading order is top-down in the poset.
    let order = InsertionOrder(LinearExtension((0..h * w).collect()));
    let s = rsk(&an, &t, Some(&order))?;
    let rows = (0..h)
        .map(|i| {
            (0..w)
                .map(|j| {
                    let v = &s[i * w + j];
                    if !v.is_integer() {
                        return Err(Error::Contract(format!("non-integer label {v}")));
                    }
                    v.to_integer()
                        .to_u64()
                        .ok_or_else(|| Error::Contract(format!("label {v} out of range")))
                })
                .collect::<Result<Vec<u64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    MatrixFilling::new(rows)
}
