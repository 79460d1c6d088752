//! Classical pipe dreams on the staircase `{(r, c) : r + c ≤ n}`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::{minimal_transversals, subword_complex, SimplicialComplex};
use crate::coxeter::{rank_pq, Element, Permutation, Word};
use crate::error::{Error, Result};

pub type Cell = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PipeDream {
    pub n: usize,
    pub crosses: BTreeSet<Cell>,
}

/// Staircase cells in reading order: rows top to bottom, each right to left.
pub fn staircase_cells(n: usize) -> Vec<Cell> {
    let mut out = Vec::new();
    for r in 1..n {
        for c in (1..=n - r).rev() {
            out.push((r, c));
        }
    }
    out
}

/// The staircase word, e.g. `4321432434` for `n = 5`.
pub fn staircase_word(n: usize) -> Vec<usize> {
    staircase_cells(n).into_iter().map(|(r, c)| r + c - 1).collect()
}

impl PipeDream {
    pub fn new(n: usize, crosses: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let crosses: BTreeSet<Cell> = crosses.into_iter().collect();
        if let Some(&(r, c)) = crosses.iter().find(|&&(r, c)| r == 0 || c == 0 || r + c > n) {
            return Err(Error::IllegalMove(format!("cell ({r},{c}) is outside the staircase of size {n}")));
        }
        Ok(PipeDream { n, crosses })
    }

    pub fn is_cross(&self, r: usize, c: usize) -> bool {
        self.crosses.contains(&(r, c))
    }

    /// Letters `r + c − 1` of the crosses in reading order.
    pub fn reading_word(&self) -> Vec<usize> {
        staircase_cells(self.n).into_iter().filter(|c| self.crosses.contains(c)).map(|(r, c)| r + c - 1).collect()
    }

    /// Follows each pipe from the top of column `j` to the left edge at row
    /// `i` and sets `w(i) = j`. Reduced iff no two pipes cross twice.
    pub fn trace(&self) -> (Permutation, bool) {
        let n = self.n;
        let mut w = vec![0usize; n];
        for j in 1..=n {
            let (mut r, mut c) = (1usize, j);
            let mut from_north = true;
            loop {
                let cross = self.is_cross(r, c);
                // a cross keeps the direction, an elbow turns it
                let go_south = from_north == cross;
                if go_south {
                    r += 1;
                    from_north = true;
                } else if c == 1 {
                    break;
                } else {
                    c -= 1;
                    from_north = false;
                }
                assert!(r <= n, "pipe fell off the grid");
            }
            w[r - 1] = j;
        }
        let p = Permutation::new(w).expect("pipes form a bijection");
        let reduced = p.length() == self.crosses.len();
        (p, reduced)
    }

    pub fn transpose(&self) -> PipeDream {
        PipeDream { n: self.n, crosses: self.crosses.iter().map(|&(r, c)| (c, r)).collect() }
    }

    /// Ladder move on the cross at `(r, c)`: it jumps to `(r − m, c + 1)` over a
    /// column pair of crosses.
    pub fn ladder(&self, r: usize, c: usize) -> Result<PipeDream> {
        let bad = |why: &str| Error::IllegalMove(format!("ladder at ({r},{c}): {why}"));
        if !self.is_cross(r, c) {
            return Err(bad("no cross"));
        }
        if self.is_cross(r, c + 1) {
            return Err(bad("east cell is not an elbow"));
        }
        let mut top = r;
        loop {
            if top == 1 {
                return Err(bad("no elbow pair above"));
            }
            top -= 1;
            let (a, b) = (self.is_cross(top, c), self.is_cross(top, c + 1));
            if a && b {
                continue;
            }
            if !a && !b {
                break;
            }
            return Err(bad("mixed row in the ladder"));
        }
        let mut crosses = self.crosses.clone();
        crosses.remove(&(r, c));
        crosses.insert((top, c + 1));
        Ok(PipeDream { n: self.n, crosses })
    }

    /// Chute move on the cross at `(r, c)`: the transpose of a ladder move,
    /// jumping to `(r + 1, c − m)` under a row pair of crosses.
    pub fn chute(&self, r: usize, c: usize) -> Result<PipeDream> {
        self.transpose()
            .ladder(c, r)
            .map(|p| p.transpose())
            .map_err(|_| Error::IllegalMove(format!("chute at ({r},{c}): shape mismatch")))
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for r in 1..self.n {
            for c in 1..=self.n - r {
                s.push(if self.is_cross(r, c) { '+' } else { '.' });
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.crosses.iter().map(|(r, c)| format!("({r},{c})")).collect();
        write!(f, "{{{}}}", cells.join(","))
    }
}

/// Crosses left-justified by the Lehmer code.
pub fn d_bot(w: &Permutation) -> PipeDream {
    let crosses = w.lehmer_code().into_iter().enumerate().flat_map(|(i, m)| (1..=m).map(move |c| (i + 1, c))).collect();
    PipeDream { n: w.n(), crosses }
}

pub fn d_top(w: &Permutation) -> PipeDream {
    d_bot(&w.inverse()).transpose()
}

fn closure(start: PipeDream, step: impl Fn(&PipeDream, usize, usize) -> Result<PipeDream>) -> BTreeSet<PipeDream> {
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        for &(r, c) in &p.crosses {
            if let Ok(q) = step(&p, r, c) {
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
    }
    seen
}

pub fn ladder_closure(w: &Permutation) -> BTreeSet<PipeDream> {
    closure(d_bot(w), |p, r, c| p.ladder(r, c))
}

pub fn chute_closure(w: &Permutation) -> BTreeSet<PipeDream> {
    closure(d_top(w), |p, r, c| p.chute(r, c))
}

/// All reduced pipe dreams of `w`, generated by ladder moves from `d_bot`.
pub fn moves_and_enumerate(w: &Permutation) -> BTreeSet<PipeDream> {
    ladder_closure(w)
}

/// Brute-force filter over all cross subsets; the enumeration oracle.
pub fn enumerate_brute(w: &Permutation) -> BTreeSet<PipeDream> {
    let cells = staircase_cells(w.n());
    let len = w.length();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << cells.len()) {
        if mask.count_ones() as usize != len {
            continue;
        }
        let p = PipeDream {
            n: w.n(),
            crosses: (0..cells.len()).filter(|&i| mask >> i & 1 == 1).map(|i| cells[i]).collect(),
        };
        let (t, reduced) = p.trace();
        if reduced && &t == w {
            out.insert(p);
        }
    }
    out
}

/// A set of cells with no cell weakly southeast of another.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Antidiagonal {
    pub cells: BTreeSet<Cell>,
}

impl Antidiagonal {
    pub fn is_valid(&self) -> bool {
        self.cells.iter().all(|&(i, j)| self.cells.iter().all(|&(p, q)| (i, j) == (p, q) || !(i <= p && j <= q)))
    }
}

impl fmt::Display for Antidiagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // listed from the southwest end, as in the usual pictures
        let cells: Vec<String> = self.cells.iter().rev().map(|(r, c)| format!("({r},{c})")).collect();
        write!(f, "({})", cells.join(","))
    }
}

/// Inclusion-minimal antidiagonals of size `1 + r_pq(w)` inside `[p] × [q]`.
pub fn antidiagonal_set(w: &Permutation) -> BTreeSet<Antidiagonal> {
    let n = w.n();
    let mut all: BTreeSet<BTreeSet<Cell>> = BTreeSet::new();
    for p in 1..=n {
        for q in 1..=n {
            let size = rank_pq(w, p, q) + 1;
            if size > p.min(q) {
                continue;
            }
            // rows strictly increasing, columns strictly decreasing
            let mut cur = Vec::new();
            chains(p, q, size, 1, q + 1, &mut cur, &mut all);
        }
    }
    let minimal: Vec<&BTreeSet<Cell>> = all.iter().filter(|a| !all.iter().any(|b| b != *a && b.is_subset(a))).collect();
    minimal.into_iter().map(|cells| Antidiagonal { cells: cells.clone() }).collect()
}

fn chains(
    p: usize,
    q: usize,
    size: usize,
    row_from: usize,
    col_below: usize,
    cur: &mut Vec<Cell>,
    out: &mut BTreeSet<BTreeSet<Cell>>,
) {
    if cur.len() == size {
        out.insert(cur.iter().copied().collect());
        return;
    }
    for r in row_from..=p {
        for c in 1..col_below.min(q + 1) {
            cur.push((r, c));
            chains(p, q, size, r + 1, c, cur, out);
            cur.pop();
        }
    }
}

/// The subword complex of the staircase word whose facet complements are the
/// reduced pipe dreams of `w`; vertices are labelled `x{row}{col}`.
pub fn pipe_dream_complex(w: &Permutation) -> SimplicialComplex {
    let n = w.n();
    let q = Word::finite(&staircase_word(n), n).expect("staircase letters are in range");
    let labels = staircase_cells(n).into_iter().map(|(r, c)| format!("x{r}{c}")).collect();
    subword_complex(&q, &Element::Finite(w.inverse())).with_labels(labels)
}

/// Minimal transversals of a family of cell sets.
pub fn transversal_dual(family: &[BTreeSet<Cell>]) -> Vec<BTreeSet<Cell>> {
    minimal_transversals(family)
}
