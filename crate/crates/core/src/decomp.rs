//! Nonnegative integer factorizations `D^T D = C`.

use std::fmt;

use crate::error::{Error, Result};

pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionMatrix {
    rows: IntMatrix,
    cols: usize,
}

impl DecompositionMatrix {
    pub fn new(rows: IntMatrix, cols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse(format!("every row must have {cols} entries")));
        }
        if rows.iter().flatten().any(|&x| x < 0) {
            return Err(Error::Parse("entries must be nonnegative".into()));
        }
        if rows.iter().any(|r| r.iter().all(|&x| x == 0)) {
            return Err(Error::Parse("zero row".into()));
        }
        Ok(Self { rows, cols })
    }

    /// Rows in lexicographically descending order; equal canonical forms
    /// mean equal up to row permutation.
    pub fn canonical(&self) -> Self {
        let mut rows = self.rows.clone();
        rows.sort_by(|a, b| b.cmp(a));
        Self {
            rows,
            cols: self.cols,
        }
    }

    pub fn rows(&self) -> &IntMatrix {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    /// `D^T D`.
    pub fn gram(&self) -> IntMatrix {
        gram(&self.rows, self.cols)
    }
}

impl fmt::Display for DecompositionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_matrix(&self.rows))
    }
}

pub fn format_matrix(m: &IntMatrix) -> String {
    m.iter()
        .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Parses `3 1;1 3` or one row per line.
pub fn parse_matrix(s: &str) -> Result<IntMatrix> {
    let rows: Vec<Vec<i64>> = s
        .split([';', '\n'])
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(|r| {
            r.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|x| !x.is_empty())
                .map(|x| {
                    x.parse()
                        .map_err(|_| Error::Parse(format!("bad matrix entry `{x}`")))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(Error::Parse(format!("matrix `{s}` is empty or ragged")));
    }
    Ok(rows)
}

fn gram(rows: &IntMatrix, n: usize) -> IntMatrix {
    let mut g = vec![vec![0; n]; n];
    for r in rows {
        for i in 0..n {
            for j in 0..n {
                g[i][j] += r[i] * r[j];
            }
        }
    }
    g
}

fn check_cartan(c: &IntMatrix) -> Result<usize> {
    let n = c.len();
    if n == 0 || c.iter().any(|r| r.len() != n) {
        return Err(Error::Parse(
            "Cartan matrix must be square and nonempty".into(),
        ));
    }
    if (0..n).any(|i| c[i][i] <= 0) || c.iter().flatten().any(|&x| x < 0) {
        return Err(Error::Parse(
            "Cartan matrix must be nonnegative with positive diagonal".into(),
        ));
    }
    Ok(n)
}

/// Nonzero vectors with entries in `[0, bound]` and `v_i^2 <= C_ii`, in
/// descending lexicographic order.
fn candidate_rows(c: &IntMatrix, bound: i64) -> Vec<Vec<i64>> {
    let n = c.len();
    let mut out = vec![Vec::new()];
    for i in 0..n {
        let top = (0..=bound).filter(|x| x * x <= c[i][i]).max().unwrap_or(0);
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..=top).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&x| x != 0));
    out.sort_by(|a, b| b.cmp(a));
    out
}

struct Search<'a> {
    c: &'a IntMatrix,
    cands: Vec<Vec<i64>>,
    rows: usize,
    chosen: Vec<usize>,
    g: IntMatrix,
    out: Vec<DecompositionMatrix>,
}

impl Search<'_> {
    fn fits(&self, v: &[i64]) -> bool {
        let n = self.c.len();
        (0..n).all(|i| (0..n).all(|j| self.g[i][j] + v[i] * v[j] <= self.c[i][j]))
    }

    fn add(&mut self, v: &[i64], sign: i64) {
        let n = self.c.len();
        for i in 0..n {
            for j in 0..n {
                self.g[i][j] += sign * v[i] * v[j];
            }
        }
    }

    fn run(&mut self, start: usize) {
        let left = self.rows - self.chosen.len();
        if left == 0 {
            if self.g == *self.c {
                let rows = self.chosen.iter().map(|&k| self.cands[k].clone()).collect();
                self.out.push(
                    DecompositionMatrix::new(rows, self.c.len())
                        .expect("candidates are valid rows"),
                );
            }
            return;
        }
        let slack: i64 = (0..self.c.len()).map(|i| self.c[i][i] - self.g[i][i]).sum();
        if slack < left as i64 {
            return;
        }
        for k in start..self.cands.len() {
            let v = self.cands[k].clone();
            if !self.fits(&v) {
                continue;
            }
            self.add(&v, 1);
            self.chosen.push(k);
            self.run(k);
            self.chosen.pop();
            self.add(&v, -1);
        }
    }
}

/// All `rows x n` solutions with entries in `[0, entry_bound]` and no zero
/// rows, one per row-permutation class. `entry_bound` defaults to the
/// largest diagonal entry.
pub fn solve_decomposition(
    c: &IntMatrix,
    rows: usize,
    entry_bound: Option<i64>,
) -> Result<Vec<DecompositionMatrix>> {
    let n = check_cartan(c)?;
    if rows < n {
        return Err(Error::Usage(format!("need at least {n} rows, got {rows}")));
    }
    let bound = entry_bound.unwrap_or_else(|| (0..n).map(|i| c[i][i]).max().unwrap_or(1));
    if bound < 1 {
        return Err(Error::Usage("entry bound must be at least 1".into()));
    }
    let mut s = Search {
        c,
        cands: candidate_rows(c, bound),
        rows,
        chosen: Vec::new(),
        g: vec![vec![0; n]; n],
        out: Vec::new(),
    };
    s.run(0);
    if s.out.is_empty() {
        return Err(Error::NoSolution);
    }
    Ok(s.out)
}

/// `(n+1) x n`, ones on the diagonal and subdiagonal.
pub fn brauer_line_decomposition(n: usize) -> DecompositionMatrix {
    let rows: IntMatrix = (0..=n)
        .map(|r| (0..n).map(|c| i64::from(r == c || r == c + 1)).collect())
        .collect();
    DecompositionMatrix::new(rows, n).expect("bidiagonal rows are nonzero")
}

/// Cartan matrices of the three tame representatives with their row counts.
pub fn tame_cartan_data() -> Vec<(&'static str, IntMatrix, usize)> {
    vec![
        ("A(2,1,2)", vec![vec![3, 1], vec![1, 3]], 5),
        ("A(2,2,1)", vec![vec![4, 2], vec![2, 3]], 5),
        ("A(2,2,2)", vec![vec![4, 2], vec![2, 4]], 6),
    ]
}
