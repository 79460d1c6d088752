//! Le-diagrams, Cauchon diagrams and their relation to Grassmannian
//! permutations and to bottom affine pipe dreams in the ground-state layout.
//!
//! Boxes are indexed matrix-style, row 1 on top.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::{word_eval, AffinePermutation, Element, Permutation, Side, Word};
use crate::error::{Error, Result};
use crate::juggling::JugglingFunction;
use crate::strip::{apd_bottom, apd_trace, strip_layout, AffinePipeDream, StripLayout};

/// A 0/1 filling of a Young diagram inside `k × (n−k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LeDiagram {
    pub k: usize,
    pub n: usize,
    pub shape: Vec<usize>,
    /// `filling[i][j]` is box `(i+1, j+1)`; `true` means 1.
    pub filling: Vec<Vec<bool>>,
}

/// A 0-box with a 1 to its left and a 1 above it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LeWitness {
    pub zero: (usize, usize),
    pub left: (usize, usize),
    pub above: (usize, usize),
}

fn check_shape(shape: &[usize], k: usize, n: usize) -> Result<()> {
    if shape.len() > k || shape.first().is_some_and(|&w| w > n - k) || shape.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotLe(format!("shape {shape:?} does not fit in {k} x {}", n - k)));
    }
    Ok(())
}

impl LeDiagram {
    pub fn new(k: usize, n: usize, shape: Vec<usize>, filling: Vec<Vec<bool>>) -> Result<Self> {
        if k > n {
            return Err(Error::NotLe(format!("k = {k} exceeds n = {n}")));
        }
        let shape: Vec<usize> = shape.into_iter().filter(|&w| w > 0).collect();
        check_shape(&shape, k, n)?;
        let lens: Vec<usize> = filling.iter().map(|r| r.len()).filter(|&w| w > 0).collect();
        if lens != shape {
            return Err(Error::NotLe(format!("filling rows {lens:?} do not match shape {shape:?}")));
        }
        let filling = filling.into_iter().filter(|r| !r.is_empty()).collect();
        Ok(LeDiagram { k, n, shape, filling })
    }

    pub fn constant(k: usize, n: usize, shape: Vec<usize>, one: bool) -> Result<Self> {
        let filling = shape.iter().map(|&w| vec![one; w]).collect();
        Self::new(k, n, shape, filling)
    }

    /// Rows of `0`/`1` separated by `/`, e.g. `101/1`.
    pub fn parse(k: usize, n: usize, text: &str) -> Result<Self> {
        let mut filling = Vec::new();
        for row in text.split(['/', '\n']).map(str::trim).filter(|r| !r.is_empty()) {
            let cells = row
                .chars()
                .map(|ch| match ch {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(Error::Parse(format!("unexpected {ch:?} in Le filling"))),
                })
                .collect::<Result<Vec<bool>>>()?;
            filling.push(cells);
        }
        let shape = filling.iter().map(|r| r.len()).collect();
        Self::new(k, n, shape, filling)
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.filling[i - 1][j - 1]
    }

    pub fn ones(&self) -> usize {
        self.filling.iter().flatten().filter(|&&b| b).count()
    }

    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.shape.iter().enumerate().flat_map(|(i, &w)| (1..=w).map(move |j| (i + 1, j)))
    }

    /// The first 0-box in reading order that breaks the Le condition.
    pub fn validate(&self) -> Option<LeWitness> {
        for (i, j) in self.boxes() {
            if self.get(i, j) {
                continue;
            }
            let left = (1..j).find(|&jj| self.get(i, jj));
            let above = (1..i).find(|&ii| self.get(ii, j));
            if let (Some(l), Some(a)) = (left, above) {
                return Some(LeWitness { zero: (i, j), left: (i, l), above: (a, j) });
            }
        }
        None
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_none()
    }

    pub fn render(&self) -> String {
        let rows: Vec<String> =
            self.filling.iter().map(|r| r.iter().map(|&b| if b { '1' } else { '0' }).collect()).collect();
        rows.join("\n")
    }
}

impl fmt::Display for LeDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.filling.iter().map(|r| r.iter().map(|&b| if b { '1' } else { '0' }).collect()).collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// Every filling of the shape, valid or not.
pub fn all_fillings(k: usize, n: usize, shape: &[usize]) -> Result<Vec<LeDiagram>> {
    check_shape(shape, k, n)?;
    let size: usize = shape.iter().sum();
    let mut out = Vec::with_capacity(1 << size);
    for bits in 0u64..1 << size {
        let mut idx = 0;
        let filling = shape
            .iter()
            .map(|&w| {
                (0..w)
                    .map(|_| {
                        idx += 1;
                        bits >> (idx - 1) & 1 == 1
                    })
                    .collect()
            })
            .collect();
        out.push(LeDiagram::new(k, n, shape.to_vec(), filling)?);
    }
    Ok(out)
}

/// Box `(a, b)` carries the letter `k − a + b`.
fn box_letter(k: usize, (a, b): (usize, usize)) -> usize {
    k + b - a
}

fn product(letters: Vec<usize>, n: usize) -> Permutation {
    let w = Word::finite(&letters, n).expect("box letters lie in 1..n");
    match word_eval(&w, Side::Right).0 {
        Element::Finite(p) => p,
        Element::Affine(_) => unreachable!("finite word"),
    }
}

/// The Grassmannian permutation of a shape: the product of the box letters
/// read row by row.
pub fn w_lambda(shape: &[usize], k: usize, n: usize) -> Result<Permutation> {
    check_shape(shape, k, n)?;
    let boxes = shape.iter().enumerate().flat_map(|(i, &w)| (1..=w).map(move |j| (i + 1, j)));
    Ok(product(boxes.map(|b| box_letter(k, b)).collect(), n))
}

/// 1-boxes become elbows and 0-boxes crossings, so only the 0-boxes
/// contribute letters.
pub fn u_of_le(d: &LeDiagram) -> Permutation {
    let letters = d.boxes().filter(|&(i, j)| !d.get(i, j)).map(|b| box_letter(d.k, b)).collect();
    product(letters, d.n)
}

/// An `m × p` grid with some squares black.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CauchonDiagram {
    pub m: usize,
    pub p: usize,
    pub black: BTreeSet<(usize, usize)>,
}

impl CauchonDiagram {
    pub fn new(m: usize, p: usize, black: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let black: BTreeSet<_> = black.into_iter().collect();
        if let Some(b) = black.iter().find(|&&(i, j)| i == 0 || j == 0 || i > m || j > p) {
            return Err(Error::Parse(format!("square {b:?} is outside the {m} x {p} grid")));
        }
        Ok(CauchonDiagram { m, p, black })
    }

    /// Rows of `#` (black) and `.` (white) separated by `/`.
    pub fn parse(text: &str) -> Result<Self> {
        let rows: Vec<&str> = text.split(['/', '\n']).map(str::trim).filter(|r| !r.is_empty()).collect();
        let p = rows.first().map_or(0, |r| r.chars().count());
        let mut black = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            if row.chars().count() != p {
                return Err(Error::Parse("ragged Cauchon grid".into()));
            }
            for (j, ch) in row.chars().enumerate() {
                match ch {
                    '#' => black.push((i + 1, j + 1)),
                    '.' => {}
                    _ => return Err(Error::Parse(format!("unexpected {ch:?} in Cauchon grid"))),
                }
            }
        }
        Self::new(rows.len(), p, black)
    }

    pub fn is_black(&self, i: usize, j: usize) -> bool {
        self.black.contains(&(i, j))
    }

    /// The first black square with a white square both to its left and above.
    pub fn validate(&self) -> Option<(usize, usize)> {
        self.black
            .iter()
            .copied()
            .find(|&(i, j)| (1..j).any(|jj| !self.is_black(i, jj)) && (1..i).any(|ii| !self.is_black(ii, j)))
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_none()
    }

    pub fn render(&self) -> String {
        let rows: Vec<String> =
            (1..=self.m).map(|i| (1..=self.p).map(|j| if self.is_black(i, j) { '#' } else { '.' }).collect()).collect();
        rows.join("\n")
    }
}

impl fmt::Display for CauchonDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render().replace('\n', "/"))
    }
}

/// All valid `m × p` Cauchon diagrams, by brute force over colourings.
pub fn all_cauchon(m: usize, p: usize) -> Vec<CauchonDiagram> {
    let cells: Vec<(usize, usize)> = (1..=m).flat_map(|i| (1..=p).map(move |j| (i, j))).collect();
    (0u64..1 << cells.len())
        .map(|bits| CauchonDiagram {
            m,
            p,
            black: cells.iter().enumerate().filter(|(t, _)| bits >> t & 1 == 1).map(|(_, &c)| c).collect(),
        })
        .filter(CauchonDiagram::is_valid)
        .collect()
}

/// `w ∈ S_{m+p}` with `−p ≤ w(i) − i ≤ m`.
pub fn restricted_permutations(m: usize, p: usize) -> Vec<Permutation> {
    Permutation::all(m + p)
        .into_iter()
        .filter(|w| (1..=m + p).all(|i| w.apply(i) + p >= i && w.apply(i) <= i + m))
        .collect()
}

/// Black squares are the 0-boxes. Only rectangles qualify.
pub fn le_cauchon(d: &LeDiagram) -> Result<CauchonDiagram> {
    let m = d.shape.len();
    let p = d.shape.first().copied().unwrap_or(0);
    if d.shape.iter().any(|&w| w != p) || m != d.k || p != d.n - d.k {
        return Err(Error::NotRectangle(d.shape.clone()));
    }
    CauchonDiagram::new(m, p, d.boxes().filter(|&(i, j)| !d.get(i, j)))
}

pub fn cauchon_le(c: &CauchonDiagram) -> LeDiagram {
    let filling = (1..=c.m).map(|i| (1..=c.p).map(|j| !c.is_black(i, j)).collect()).collect();
    LeDiagram::new(c.m, c.m + c.p, vec![c.p; c.m], filling).expect("rectangle fits")
}

/// The strip layout with λ = (1, …, m) inside `n = m + p`.
pub fn ground_layout(m: usize, p: usize) -> StripLayout {
    let lambda: Vec<usize> = (1..=m).collect();
    strip_layout(&lambda, m, m + p).expect("ground-state λ is well formed")
}

/// The coordinate map behind the correspondence: the grid is flipped
/// vertically and placed in the free block, so `(i, j) ↦ (m+1−i, m+j)`.
pub fn cauchon_cell_to_strip(m: usize, (i, j): (usize, usize)) -> (usize, usize) {
    (m + 1 - i, m + j)
}

pub fn strip_cell_to_cauchon(m: usize, (r, c): (usize, usize)) -> (usize, usize) {
    (m + 1 - r, c - m)
}

/// Black squares become crosses under [`cauchon_cell_to_strip`]; no validity check.
pub fn cauchon_to_apd(c: &CauchonDiagram) -> (StripLayout, AffinePipeDream) {
    let layout = ground_layout(c.m, c.p);
    let crosses = c.black.iter().map(|&b| cauchon_cell_to_strip(c.m, b)).collect();
    (layout, AffinePipeDream { crosses })
}

pub fn cauchon_to_bottom_apd(c: &CauchonDiagram) -> Result<(StripLayout, AffinePipeDream)> {
    if let Some(b) = c.validate() {
        return Err(Error::NotCauchon(b));
    }
    Ok(cauchon_to_apd(c))
}

/// The permutation a grid encodes: `(cascade⁻¹ ∘ trace)⁻¹`, which lands in
/// `S_{m+p}` with `−p ≤ w(i) − i ≤ m`.
pub fn cauchon_permutation(c: &CauchonDiagram) -> AffinePermutation {
    let (layout, apd) = cauchon_to_apd(c);
    layout.cascade().inverse().compose(&apd_trace(&layout, &apd).0).inverse()
}

/// Whether `apd` is reduced and the bottom dream of the pattern it traces.
pub fn is_bottom(layout: &StripLayout, apd: &AffinePipeDream) -> bool {
    let (trace, reduced) = apd_trace(layout, apd);
    if !reduced {
        return false;
    }
    let f = JugglingFunction::from_affine(&trace);
    apd_bottom(layout, &f).as_ref() == Some(apd)
}

pub fn bottom_apd_to_cauchon(layout: &StripLayout, apd: &AffinePipeDream) -> Result<CauchonDiagram> {
    let m = layout.k;
    if layout.lambda != (1..=m).collect::<Vec<_>>() {
        return Err(Error::NotBottom(format!("λ = {:?} is not the ground state", layout.lambda)));
    }
    if !is_bottom(layout, apd) {
        return Err(Error::NotBottom(apd.cells_display()));
    }
    CauchonDiagram::new(m, layout.n - m, apd.crosses.iter().map(|&x| strip_cell_to_cauchon(m, x)))
}
