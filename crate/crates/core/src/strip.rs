//! The λ-strip: the collapsed `k × (n−k)` block of free entries, its split
//! antidiagonal labels, the word `Q_λ`, and affine pipe dreams.
//!
//! Cells are addressed by `(row, original column)`, so the cell `(3, 5)` is
//! the matrix entry `a35`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::complex::subword_complex;
use crate::coxeter::{word_eval, AffinePermutation, Element, Side, Word};
use crate::error::{Error, Result};
use crate::juggling::JugglingFunction;
use crate::pipedream::PipeDream;

pub type Cell = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Step {
    East,
    South,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StripLayout {
    pub n: usize,
    pub k: usize,
    pub lambda: Vec<usize>,
    /// One step per original column: south on λ, east elsewhere.
    pub path: Vec<Step>,
    /// Collapsed column index (from 0) to original column.
    pub column_map: Vec<usize>,
    pub cell_labels: BTreeMap<Cell, usize>,
}

pub fn strip_layout(lambda: &[usize], k: usize, n: usize) -> Result<StripLayout> {
    let bad = |why: &str| Error::MalformedLambda(format!("{lambda:?} for k={k}, n={n}: {why}"));
    if lambda.len() != k || k == 0 || k >= n {
        return Err(bad("need 0 < k = |λ| < n"));
    }
    if lambda.windows(2).any(|w| w[0] >= w[1]) || lambda[0] == 0 || lambda[k - 1] > n {
        return Err(bad("entries must increase inside 1..n"));
    }
    let path = (1..=n).map(|c| if lambda.contains(&c) { Step::South } else { Step::East }).collect();
    let column_map: Vec<usize> = (1..=n).filter(|c| !lambda.contains(c)).collect();
    let mut cell_labels = BTreeMap::new();
    for r in 1..=k {
        for (j, &c) in column_map.iter().enumerate() {
            // below the path the antidiagonal continues k labels earlier
            let shift = if c > lambda[r - 1] { 0 } else { k };
            let label = (r + j + n - shift) % n;
            cell_labels.insert((r, c), label);
        }
    }
    Ok(StripLayout { n, k, lambda: lambda.to_vec(), path, column_map, cell_labels })
}

impl StripLayout {
    pub fn is_above(&self, (r, c): Cell) -> bool {
        c > self.lambda[r - 1]
    }

    pub fn is_rectangle(&self) -> bool {
        self.lambda.iter().enumerate().all(|(i, &l)| l == i + 1)
    }

    pub fn row_of_column(&self, c: usize) -> Option<usize> {
        self.lambda.iter().position(|&l| l == c).map(|i| i + 1)
    }

    pub fn label(&self, cell: Cell) -> usize {
        self.cell_labels[&cell]
    }

    /// Groups of cells in reading order: above-path parts of rows `k..1`, then
    /// below-path parts of rows `k..1`, each west to east.
    pub fn q_groups(&self) -> Vec<Vec<Cell>> {
        let mut groups = Vec::new();
        for above in [true, false] {
            for r in (1..=self.k).rev() {
                let g: Vec<Cell> =
                    self.column_map.iter().map(|&c| (r, c)).filter(|&cell| self.is_above(cell) == above).collect();
                if !g.is_empty() {
                    groups.push(g);
                }
            }
        }
        groups
    }

    pub fn q_cells(&self) -> Vec<Cell> {
        self.q_groups().into_iter().flatten().collect()
    }

    pub fn q_word(&self) -> Word {
        let letters: Vec<usize> = self.q_cells().into_iter().map(|c| self.label(c)).collect();
        Word::affine(&letters, self.n).expect("labels are residues")
    }

    /// `Q_λ` with label 0 written as `n` and row groups separated by spaces.
    pub fn q_display(&self) -> String {
        let show = |l: usize| if l == 0 { self.n } else { l };
        self.q_groups()
            .iter()
            .map(|g| g.iter().map(|&c| show(self.label(c)).to_string()).collect::<String>())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn cascade(&self) -> AffinePermutation {
        AffinePermutation::rotation(self.n, self.k as i64)
    }

    /// The trace of a set of crosses: the cascade composed with the left
    /// evaluation of their letters in reading order.
    pub fn trace_cells(&self, crosses: &BTreeSet<Cell>) -> (AffinePermutation, bool) {
        let letters: Vec<usize> =
            self.q_cells().into_iter().filter(|c| crosses.contains(c)).map(|c| self.label(c)).collect();
        let (e, reduced) = word_eval(&Word::affine(&letters, self.n).expect("residues"), Side::Left);
        let e = e.as_affine().expect("affine word").clone();
        (self.cascade().compose(&e), reduced)
    }

    pub fn render(&self, crosses: &BTreeSet<Cell>) -> String {
        let mut s = String::new();
        for r in 1..=self.k {
            for c in 1..=self.n {
                s.push(match self.row_of_column(c) {
                    Some(rr) if rr == r => '1',
                    Some(_) => ' ',
                    None if crosses.contains(&(r, c)) => '+',
                    None => '.',
                });
            }
            s.push('\n');
        }
        s
    }

    pub fn render_labels(&self) -> String {
        let mut s = String::new();
        for r in 1..=self.k {
            let row: Vec<String> = (1..=self.n)
                .map(|c| match self.row_of_column(c) {
                    Some(rr) if rr == r => "|".to_string(),
                    Some(_) => " ".to_string(),
                    None => self.label((r, c)).to_string(),
                })
                .collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

/// `π_λ`: the trace of the all-cross strip.
pub fn pi_lambda(layout: &StripLayout) -> AffinePermutation {
    layout.trace_cells(&layout.cell_labels.keys().copied().collect()).0
}

/// Cells picked by the cyclic minor on columns `j..j+k−1` under the split
/// antidiagonal rule; they carry label `j − 1 mod n`.
pub fn minor_pick(layout: &StripLayout, j: usize) -> BTreeSet<Cell> {
    let label = (j + layout.n - 1) % layout.n;
    layout.cell_labels.iter().filter(|(_, &l)| l == label).map(|(&c, _)| c).collect()
}

/// Terms of the cyclic minor on columns starting at `j`, as cell sets.
fn minor_terms(layout: &StripLayout, j: usize) -> Vec<BTreeSet<Cell>> {
    let (n, k) = (layout.n, layout.k);
    let cols: Vec<usize> = (0..k).map(|t| (j - 1 + t) % n + 1).collect();
    let mut out = Vec::new();
    let mut rows: Vec<usize> = (1..=k).collect();
    permutations(&mut rows, 0, &mut |p| {
        let mut term = BTreeSet::new();
        for (&c, &r) in cols.iter().zip(p) {
            match layout.row_of_column(c) {
                Some(rr) if rr != r => return,
                Some(_) => {}
                None => {
                    term.insert((r, c));
                }
            }
        }
        out.push(term);
    });
    out
}

fn permutations(v: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
    if i == v.len() {
        f(v);
        return;
    }
    for j in i..v.len() {
        v.swap(i, j);
        permutations(v, i + 1, f);
        v.swap(i, j);
    }
}

/// Variable ranks for rotation `rot`: ordered by `((label − rot) mod n, reading
/// position)`, smallest first.
pub fn variable_ranks(layout: &StripLayout, rot: usize) -> BTreeMap<Cell, usize> {
    let n = layout.n;
    let mut cells: Vec<(usize, usize, Cell)> = layout
        .q_cells()
        .into_iter()
        .enumerate()
        .map(|(pos, c)| ((layout.label(c) + n - rot % n) % n, pos, c))
        .collect();
    cells.sort();
    cells.into_iter().enumerate().map(|(rank, (_, _, c))| (c, rank)).collect()
}

/// Whether every cyclic minor's revlex-leading term is exactly its split
/// antidiagonal. Among squarefree terms of equal degree, the one containing
/// the smallest variable of the symmetric difference is the smaller term.
pub fn init_product_lemma(layout: &StripLayout, ranks: &BTreeMap<Cell, usize>) -> bool {
    (1..=layout.n).all(|j| {
        let terms = minor_terms(layout, j);
        let mut best: Option<&BTreeSet<Cell>> = None;
        for t in &terms {
            best = match best {
                None => Some(t),
                Some(b) => {
                    let smallest = t.symmetric_difference(b).min_by_key(|c| ranks[c]);
                    match smallest {
                        Some(c) if b.contains(c) => Some(t),
                        _ => Some(b),
                    }
                }
            };
        }
        best.is_some_and(|b| *b == minor_pick(layout, j))
    })
}

/// The first rotation under which the init-product lemma holds.
pub fn strip_rotation(layout: &StripLayout) -> Result<usize> {
    (0..layout.n)
        .find(|&r| init_product_lemma(layout, &variable_ranks(layout, r)))
        .ok_or_else(|| Error::NoTermOrder(layout.lambda.clone()))
}

/// Free cells from the largest variable to the smallest under the strip order.
pub fn strip_variable_order(layout: &StripLayout) -> Result<Vec<Cell>> {
    let ranks = variable_ranks(layout, strip_rotation(layout)?);
    let mut cells: Vec<Cell> = ranks.keys().copied().collect();
    cells.sort_by_key(|c| std::cmp::Reverse(ranks[c]));
    Ok(cells)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AffinePipeDream {
    pub crosses: BTreeSet<Cell>,
}

#[derive(Serialize)]
struct ApdJson<'a> {
    n: usize,
    k: usize,
    lambda: &'a [usize],
    crosses: Vec<Cell>,
}

impl AffinePipeDream {
    pub fn new(layout: &StripLayout, crosses: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let crosses: BTreeSet<Cell> = crosses.into_iter().collect();
        if let Some(c) = crosses.iter().find(|c| !layout.cell_labels.contains_key(c)) {
            return Err(Error::IllegalMove(format!("cell {c:?} is not a free cell of the strip")));
        }
        Ok(AffinePipeDream { crosses })
    }

    pub fn to_json(&self, layout: &StripLayout) -> serde_json::Value {
        let j = ApdJson {
            n: layout.n,
            k: layout.k,
            lambda: &layout.lambda,
            crosses: self.crosses.iter().copied().collect(),
        };
        serde_json::to_value(j).expect("serializable")
    }

    pub fn cells_display(&self) -> String {
        let v: Vec<String> = self.crosses.iter().map(|(r, c)| format!("a{r}{c}")).collect();
        format!("{{{}}}", v.join(","))
    }

    /// Ladder move in the rectangular case, where the block is a classical
    /// pipe dream region with letters `r + j − 1`.
    pub fn ladder(&self, layout: &StripLayout, r: usize, c: usize) -> Result<AffinePipeDream> {
        self.classical_move(layout, r, c, true)
    }

    pub fn chute(&self, layout: &StripLayout, r: usize, c: usize) -> Result<AffinePipeDream> {
        self.classical_move(layout, r, c, false)
    }

    fn classical_move(&self, layout: &StripLayout, r: usize, c: usize, ladder: bool) -> Result<AffinePipeDream> {
        if !layout.is_rectangle() {
            return Err(Error::NotRectangle(layout.lambda.clone()));
        }
        let k = layout.k;
        let to_pd = |(r, c): Cell| (r, c - k);
        let pd = PipeDream::new(layout.n, self.crosses.iter().map(|&x| to_pd(x)))?;
        let (r0, c0) = to_pd((r, c));
        let moved = if ladder { pd.ladder(r0, c0)? } else { pd.chute(r0, c0)? };
        if moved.crosses.iter().any(|&(rr, cc)| rr > k || cc > layout.n - k) {
            return Err(Error::IllegalMove("move leaves the block".into()));
        }
        AffinePipeDream::new(layout, moved.crosses.into_iter().map(|(rr, cc)| (rr, cc + k)))
    }
}

pub fn apd_trace(layout: &StripLayout, apd: &AffinePipeDream) -> (AffinePermutation, bool) {
    layout.trace_cells(&apd.crosses)
}

/// The subword-complex target `cascade⁻¹ ∘ f`, or `None` if the ball count
/// differs from `k`.
fn target(layout: &StripLayout, f: &JugglingFunction) -> Option<AffinePermutation> {
    if f.n() != layout.n || f.ball_count() != layout.k {
        return None;
    }
    Some(layout.cascade().inverse().compose(&f.to_affine()))
}

/// Reduced subwords of `Q_λ` for the target, as sorted position lists.
fn reduced_positions(layout: &StripLayout, f: &JugglingFunction) -> Vec<Vec<usize>> {
    let Some(t) = target(layout, f) else { return Vec::new() };
    let q = layout.q_word();
    let m = q.len();
    let all = if m == 64 { !0u64 } else { (1u64 << m) - 1 };
    let cx = subword_complex(&q, &Element::Affine(t));
    let mut out: Vec<Vec<usize>> =
        cx.facets.iter().map(|&f| (0..m).filter(|&i| (all & !f) >> i & 1 == 1).collect()).collect();
    out.sort();
    out
}

fn from_positions(layout: &StripLayout, pos: &[usize]) -> AffinePipeDream {
    let cells = layout.q_cells();
    AffinePipeDream { crosses: pos.iter().map(|&i| cells[i]).collect() }
}

/// All reduced affine pipe dreams tracing `f`, via subword-complex facets.
pub fn apd_enumerate(layout: &StripLayout, f: &JugglingFunction) -> BTreeSet<AffinePipeDream> {
    reduced_positions(layout, f).iter().map(|p| from_positions(layout, p)).collect()
}

/// The lexicographically first reduced subword (positions in `Q_λ` order).
pub fn apd_bottom(layout: &StripLayout, f: &JugglingFunction) -> Option<AffinePipeDream> {
    reduced_positions(layout, f).first().map(|p| from_positions(layout, p))
}

/// The lexicographically last reduced subword.
pub fn apd_top(layout: &StripLayout, f: &JugglingFunction) -> Option<AffinePipeDream> {
    reduced_positions(layout, f).last().map(|p| from_positions(layout, p))
}

impl fmt::Display for StripLayout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_labels())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::juggling::enumerate_bounded;

    fn layout(l: &[usize], k: usize, n: usize) -> StripLayout {
        strip_layout(l, k, n).unwrap()
    }

    fn all_lambdas(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (1..=n).filter(|&c| m >> (c - 1) & 1 == 1).collect())
            .collect()
    }

    #[test]
    fn q_word_for_124() {
        let l = layout(&[1, 2, 4], 3, 7);
        assert_eq!(l.q_display(), "456 2345 1234 7");
        assert_eq!(l.q_word().letters, vec![4, 5, 6, 2, 3, 4, 5, 1, 2, 3, 4, 0]);
        assert_eq!(pi_lambda(&l).window(), &[8, 9, 3, 11, 5, 6, 7]);
        assert_eq!(pi_lambda(&l).length(), 12);
    }

    #[test]
    fn malformed() {
        assert!(strip_layout(&[2, 1], 2, 4).is_err());
        assert!(strip_layout(&[1, 5], 2, 4).is_err());
        assert!(strip_layout(&[1], 2, 4).is_err());
    }

    #[test]
    fn paths() {
        let l = layout(&[1, 2], 2, 4);
        assert!(l.is_rectangle());
        assert_eq!(l.path, vec![Step::South, Step::South, Step::East, Step::East]);
        assert!(l.cell_labels.keys().all(|&c| l.is_above(c)));
        let l = layout(&[3, 4], 2, 4);
        assert_eq!(l.path, vec![Step::East, Step::East, Step::South, Step::South]);
    }

    #[test]
    fn pi_lambda_everywhere() {
        for n in 2..=6 {
            for k in 1..n {
                for lam in all_lambdas(n, k) {
                    let l = layout(&lam, k, n);
                    let q = l.q_word();
                    assert_eq!(q.len(), k * (n - k));
                    let (_, reduced) = word_eval(&q, Side::Left);
                    assert!(reduced, "{lam:?}");
                    let want: Vec<i64> =
                        (1..=n).map(|i| if lam.contains(&i) { (i + n) as i64 } else { i as i64 }).collect();
                    assert_eq!(pi_lambda(&l).window(), want.as_slice());
                    assert!(crate::coxeter::is_fully_commutative(&q));
                }
            }
        }
    }

    #[test]
    fn rotation_exists() {
        for n in 2..=7 {
            for k in 1..n {
                for lam in all_lambdas(n, k) {
                    assert!(strip_rotation(&layout(&lam, k, n)).is_ok(), "{lam:?}");
                }
            }
        }
    }

    #[test]
    fn cascade_and_full() {
        let l = layout(&[1, 2, 4], 3, 7);
        let (t, red) = l.trace_cells(&BTreeSet::new());
        assert_eq!(t, l.cascade());
        assert!(red);
        let f = JugglingFunction::constant(7, 3);
        let all = apd_enumerate(&l, &f);
        assert_eq!(all.len(), 1);
        assert!(all.iter().next().unwrap().crosses.is_empty());
    }

    #[test]
    fn worked_instances() {
        let f = JugglingFunction::new(vec![4, 2, 3, 4, 2, 3, 3]).unwrap();
        let l = layout(&[4, 6, 7], 3, 7);
        let apds = apd_enumerate(&l, &f);
        assert_eq!(apds.len(), 2);
        let l = layout(&[1, 2, 4], 3, 7);
        let apds = apd_enumerate(&l, &f);
        for a in &apds {
            let (t, red) = apd_trace(&l, a);
            assert!(red);
            assert_eq!(t, f.to_affine());
            assert_eq!(a.crosses.len(), l.cascade().inverse().compose(&f.to_affine()).length());
        }
        // four crosses cannot be reduced for this target
        let four = AffinePipeDream::new(&l, [(3, 3), (3, 5), (2, 6), (1, 7)]).unwrap();
        assert!(!apd_trace(&l, &four).1);
        assert!(apds.contains(&apd_bottom(&l, &f).unwrap()));
        assert!(apds.contains(&apd_top(&l, &f).unwrap()));
    }

    #[test]
    fn throws_force_rows_and_columns() {
        let (n, k) = (5, 2);
        for lam in all_lambdas(n, k) {
            let l = layout(&lam, k, n);
            for f in enumerate_bounded(n, k) {
                for a in apd_enumerate(&l, &f) {
                    let (t, red) = apd_trace(&l, &a);
                    assert!(red && t == f.to_affine());
                    for i in 1..=n {
                        let t = f.throw_at(i as i64);
                        if t == n as i64 {
                            let r = l.row_of_column(i).expect("n-throws sit on λ");
                            assert!(l.column_map.iter().all(|&c| a.crosses.contains(&(r, c))), "{lam:?} {f}");
                        }
                        if t == 0 {
                            assert!(l.row_of_column(i).is_none());
                            assert!((1..=k).all(|r| a.crosses.contains(&(r, i))), "{lam:?} {f}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rectangle_moves_preserve_trace() {
        let l = layout(&[1, 2], 2, 5);
        for f in enumerate_bounded(5, 2) {
            let apds = apd_enumerate(&l, &f);
            let mut closure = BTreeSet::new();
            if let Some(b) = apds.iter().next() {
                let mut stack = vec![b.clone()];
                while let Some(p) = stack.pop() {
                    if !closure.insert(p.clone()) {
                        continue;
                    }
                    for &(r, c) in &p.crosses {
                        for q in [p.ladder(&l, r, c), p.chute(&l, r, c)].into_iter().flatten() {
                            assert_eq!(apd_trace(&l, &q).0, f.to_affine());
                            stack.push(q);
                        }
                    }
                }
            }
            assert_eq!(closure, apds, "{f}");
        }
        let l2 = layout(&[1, 3], 2, 5);
        let a = AffinePipeDream::new(&l2, [(1, 2)]).unwrap();
        assert!(matches!(a.ladder(&l2, 1, 2), Err(Error::NotRectangle(_))));
    }
}
