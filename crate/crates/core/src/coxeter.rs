//! Finite and affine permutations in type A, words in simple reflections,
//! lengths, Rothe diagrams, heaps and Bruhat order.
//!
//! Words act on the left in reading order: the word `(q1, …, qm)` evaluates to
//! `s_qm ∘ … ∘ s_q1` under [`Side::Left`] and to `s_q1 ∘ … ∘ s_qm` under
//! [`Side::Right`].

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    window: Vec<usize>,
}

impl Permutation {
    pub fn new(window: Vec<usize>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{window:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { window })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { window: (1..=n).collect() }
    }

    /// The simple transposition `s_i` swapping `i` and `i+1`.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} is not a generator of S_{n}");
        Permutation::identity(n).right_mul_simple(i)
    }

    pub fn longest(n: usize) -> Self {
        Permutation { window: (1..=n).rev().collect() }
    }

    /// All permutations of `1..=n` in lexicographic order of windows.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation { window: cur.clone() });
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    pub fn apply(&self, i: usize) -> usize {
        self.window[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { window: inv }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.n(), other.n());
        Permutation { window: other.window.iter().map(|&v| self.window[v - 1]).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.window[i] > self.window[j] {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn length(&self) -> usize {
        self.inversions().len()
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.window[i - 1] > self.window[i]).collect()
    }

    /// `m_i = #{j > i : w(j) < w(i)}`.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let n = self.n();
        (0..n).map(|i| (i + 1..n).filter(|&j| self.window[j] < self.window[i]).count()).collect()
    }

    /// `s_i ∘ self`: swaps the values `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let window = self
            .window
            .iter()
            .map(|&v| {
                if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                }
            })
            .collect();
        Permutation { window }
    }

    /// `self ∘ s_i`: swaps the entries in positions `i` and `i+1`.
    pub fn right_mul_simple(&self, i: usize) -> Self {
        let mut window = self.window.clone();
        window.swap(i - 1, i);
        Permutation { window }
    }

    /// A reduced word `q` with `word_eval(q, Side::Left) == self`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        while let Some(i) = (1..w.n()).find(|&i| w.is_left_descent(i)) {
            w = w.left_mul_simple(i);
            rev.push(i);
        }
        rev.reverse();
        rev
    }

    fn is_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.apply(i) > inv.apply(i + 1)
    }

    /// Embeds into the affine group with the same window.
    pub fn to_affine(&self) -> AffinePermutation {
        AffinePermutation { n: self.n(), window: self.window.iter().map(|&v| v as i64).collect() }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_window(f, self.window.iter().map(|&v| v as i64), self.n() <= 9)
    }
}

fn write_window(f: &mut fmt::Formatter<'_>, values: impl Iterator<Item = i64>, compact: bool) -> fmt::Result {
    let parts: Vec<String> = values.map(|v| v.to_string()).collect();
    let compact = compact && parts.iter().all(|p| p.len() == 1);
    if compact {
        write!(f, "{}", parts.concat())
    } else {
        write!(f, "{}", parts.join(","))
    }
}

/// Parses `41523` (one digit per entry) or `4,1,5,2,3`.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(',') || s.contains(' ') {
        s.split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(|t| t.trim().parse::<i64>().map_err(|e| Error::Parse(format!("{t}: {e}"))))
            .collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as i64).ok_or_else(|| Error::Parse(format!("bad digit {c:?} in {s:?}"))))
            .collect()
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let vals = parse_int_list(s)?;
        if vals.iter().any(|&v| v <= 0) {
            return Err(Error::InvalidPermutation(s.to_string()));
        }
        Permutation::new(vals.into_iter().map(|v| v as usize).collect())
    }
}

/// An affine permutation of `Z` with period `n`, stored by its window
/// `(π(1), …, π(n))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffinePermutation {
    n: usize,
    window: Vec<i64>,
}

impl AffinePermutation {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty window".into()));
        }
        let mut seen = vec![false; n];
        for &v in &window {
            let r = v.rem_euclid(n as i64) as usize;
            if seen[r] {
                return Err(Error::InvalidPermutation(format!("{window:?}: repeated residue")));
            }
            seen[r] = true;
        }
        Ok(AffinePermutation { n, window })
    }

    pub fn identity(n: usize) -> Self {
        Self::rotation(n, 0)
    }

    /// The length-zero element with window `(k+1, …, k+n)`.
    pub fn rotation(n: usize, k: i64) -> Self {
        AffinePermutation { n, window: (1..=n as i64).map(|i| i + k).collect() }
    }

    /// The generator `s_i`, `0 ≤ i < n`.
    pub fn simple(n: usize, i: usize) -> Self {
        AffinePermutation::identity(n).right_mul_simple(i)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn apply(&self, i: i64) -> i64 {
        let n = self.n as i64;
        let q = (i - 1).div_euclid(n);
        let r = (i - 1).rem_euclid(n);
        self.window[r as usize] + q * n
    }

    /// `(Σ π(i) − i) / n`; for juggling patterns this is the ball count.
    pub fn shift(&self) -> i64 {
        let n = self.n as i64;
        let s: i64 = self.window.iter().enumerate().map(|(i, &v)| v - (i as i64 + 1)).sum();
        s.div_euclid(n)
    }

    pub fn inverse(&self) -> Self {
        let n = self.n as i64;
        let mut inv = vec![0i64; self.n];
        for (i, &v) in self.window.iter().enumerate() {
            let q = (v - 1).div_euclid(n);
            let r = (v - 1).rem_euclid(n) as usize;
            inv[r] = i as i64 + 1 - q * n;
        }
        AffinePermutation { n: self.n, window: inv }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffinePermutation) -> Self {
        assert_eq!(self.n, other.n);
        AffinePermutation { n: self.n, window: other.window.iter().map(|&v| self.apply(v)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i as i64 + 1)
    }

    /// Number of affine inversions: pairs `i < j` with `i` in `1..=n` and
    /// `π(i) > π(j)`, computed as `Σ_{i<j≤n} |⌊(π(j) − π(i))/n⌋|`.
    pub fn length(&self) -> usize {
        let n = self.n as i64;
        let mut total = 0i64;
        for i in 0..self.n {
            for j in i + 1..self.n {
                total += (self.window[j] - self.window[i]).div_euclid(n).abs();
            }
        }
        total as usize
    }

    /// `s_i ∘ self`: exchanges the value classes `i` and `i+1` mod `n`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let n = self.n as i64;
        let a = i as i64 % n;
        let b = (i as i64 + 1) % n;
        let window = self
            .window
            .iter()
            .map(|&v| {
                let r = v.rem_euclid(n);
                if r == a {
                    v + 1
                } else if r == b {
                    v - 1
                } else {
                    v
                }
            })
            .collect();
        AffinePermutation { n: self.n, window }
    }

    /// `self ∘ s_i`.
    pub fn right_mul_simple(&self, i: usize) -> Self {
        let mut window = self.window.clone();
        let n = self.n;
        if i == 0 {
            let first = window[0];
            let last = window[n - 1];
            window[0] = last - n as i64;
            window[n - 1] = first + n as i64;
        } else {
            window.swap(i - 1, i);
        }
        AffinePermutation { n, window }
    }

    fn is_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.apply(i as i64) > inv.apply(i as i64 + 1)
    }

    /// Splits `self = r_k ∘ eval_left(word)` with `r_k` the rotation by the
    /// shift `k` and `word` reduced.
    pub fn coset_decompose(&self) -> (i64, Vec<usize>) {
        let k = self.shift();
        let base_inv = AffinePermutation::rotation(self.n, -k);
        let mut u = base_inv.compose(self);
        let mut rev = Vec::new();
        while let Some(i) = (0..self.n).find(|&i| u.is_left_descent(i)) {
            u = u.left_mul_simple(i);
            rev.push(i);
        }
        debug_assert!(u.is_identity());
        rev.reverse();
        (k, rev)
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_window(f, self.window.iter().copied(), true)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Finite,
    Affine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A word in the simple reflections of `S_n` (letters `1..n`) or of the
/// affine group (letters `0..n`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    pub letters: Vec<usize>,
    pub n: usize,
    pub flavor: Flavor,
}

impl Word {
    pub fn new(letters: Vec<usize>, n: usize, flavor: Flavor) -> Result<Self> {
        for &l in &letters {
            let ok = match flavor {
                Flavor::Finite => l >= 1 && l < n,
                Flavor::Affine => l < n,
            };
            if !ok {
                return Err(Error::LetterOutOfRange { letter: l, n });
            }
        }
        Ok(Word { letters, n, flavor })
    }

    pub fn finite(letters: &[usize], n: usize) -> Result<Self> {
        Word::new(letters.to_vec(), n, Flavor::Finite)
    }

    pub fn affine(letters: &[usize], n: usize) -> Result<Self> {
        Word::new(letters.to_vec(), n, Flavor::Affine)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn subword(&self, positions: impl IntoIterator<Item = usize>) -> Word {
        Word { letters: positions.into_iter().map(|p| self.letters[p]).collect(), ..self.clone() }
    }

    /// Whether letters `a` and `b` fail to commute.
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        match self.flavor {
            Flavor::Finite => a.abs_diff(b) <= 1,
            Flavor::Affine => {
                let d = a.abs_diff(b);
                d <= 1 || d == self.n - 1
            }
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A group element of either flavor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Element {
    Finite(Permutation),
    Affine(AffinePermutation),
}

impl Element {
    pub fn identity(n: usize, flavor: Flavor) -> Self {
        match flavor {
            Flavor::Finite => Element::Finite(Permutation::identity(n)),
            Flavor::Affine => Element::Affine(AffinePermutation::identity(n)),
        }
    }

    pub fn length(&self) -> usize {
        match self {
            Element::Finite(p) => p.length(),
            Element::Affine(a) => a.length(),
        }
    }

    pub fn mul_simple(&self, i: usize, side: Side) -> Self {
        match (self, side) {
            (Element::Finite(p), Side::Left) => Element::Finite(p.left_mul_simple(i)),
            (Element::Finite(p), Side::Right) => Element::Finite(p.right_mul_simple(i)),
            (Element::Affine(a), Side::Left) => Element::Affine(a.left_mul_simple(i)),
            (Element::Affine(a), Side::Right) => Element::Affine(a.right_mul_simple(i)),
        }
    }

    pub fn as_finite(&self) -> Option<&Permutation> {
        match self {
            Element::Finite(p) => Some(p),
            Element::Affine(_) => None,
        }
    }

    pub fn as_affine(&self) -> Option<&AffinePermutation> {
        match self {
            Element::Affine(a) => Some(a),
            Element::Finite(_) => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Finite(p) => p.fmt(f),
            Element::Affine(a) => a.fmt(f),
        }
    }
}

/// Evaluates a word; the flag reports whether the word is reduced.
pub fn word_eval(w: &Word, side: Side) -> (Element, bool) {
    let mut cur = Element::identity(w.n, w.flavor);
    for &l in &w.letters {
        cur = cur.mul_simple(l, side);
    }
    let reduced = cur.length() == w.len();
    (cur, reduced)
}

/// The Demazure (0-Hecke) product of a word, accumulated on the given side:
/// a letter is applied only when it increases the length.
pub fn demazure(w: &Word, side: Side) -> Element {
    let mut cur = Element::identity(w.n, w.flavor);
    let mut len = 0;
    for &l in &w.letters {
        let next = cur.mul_simple(l, side);
        let nl = next.length();
        if nl > len {
            cur = next;
            len = nl;
        }
    }
    cur
}

/// Bruhat order by the Z-property: strip a left descent `s` off `v` and replace
/// `u` by `min(u, s u)` until `v` reaches the bottom of its coset.
pub fn bruhat_leq(u: &Element, v: &Element) -> Result<bool> {
    match (u, v) {
        (Element::Finite(a), Element::Finite(b)) => {
            if a.n() != b.n() {
                return Err(Error::IncompatibleGroups(format!("S_{} vs S_{}", a.n(), b.n())));
            }
            let mut u = a.clone();
            for &s in b.reduced_word().iter().rev() {
                if u.is_left_descent(s) {
                    u = u.left_mul_simple(s);
                }
            }
            Ok(u.is_identity())
        }
        (Element::Affine(a), Element::Affine(b)) => {
            if a.n() != b.n() {
                return Err(Error::IncompatibleGroups(format!("period {} vs {}", a.n(), b.n())));
            }
            if a.shift() != b.shift() {
                return Ok(false);
            }
            let base_inv = AffinePermutation::rotation(a.n(), -a.shift());
            let mut u = base_inv.compose(a);
            let (_, word) = b.coset_decompose();
            for &s in word.iter().rev() {
                if u.is_left_descent(s) {
                    u = u.left_mul_simple(s);
                }
            }
            Ok(u.is_identity())
        }
        _ => Err(Error::IncompatibleGroups("finite vs affine".into())),
    }
}

pub fn bruhat_leq_finite(u: &Permutation, v: &Permutation) -> bool {
    bruhat_leq(&Element::Finite(u.clone()), &Element::Finite(v.clone())).expect("same group")
}

/// Rothe diagram, its essential boxes and the rank function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotheDiagram {
    pub boxes: BTreeSet<(usize, usize)>,
    pub essential: BTreeSet<(usize, usize)>,
}

pub fn rothe_diagram(p: &Permutation) -> RotheDiagram {
    let n = p.n();
    let inv = p.inverse();
    let mut boxes = BTreeSet::new();
    for i in 1..=n {
        for j in 1..=n {
            if j < p.apply(i) && i < inv.apply(j) {
                boxes.insert((i, j));
            }
        }
    }
    let essential =
        boxes.iter().filter(|&&(i, j)| !boxes.contains(&(i + 1, j)) && !boxes.contains(&(i, j + 1))).copied().collect();
    RotheDiagram { boxes, essential }
}

/// `r_pq(w) = #{i ≤ p : w(i) ≤ q}`.
pub fn rank_pq(p: &Permutation, row: usize, col: usize) -> usize {
    (1..=row).filter(|&i| p.apply(i) <= col).count()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub grassmannian: bool,
    pub inverse_grassmannian: bool,
    pub bigrassmannian: bool,
    pub avoids_321: bool,
    pub fully_commutative: bool,
}

pub fn classify(p: &Permutation) -> Classification {
    let grassmannian = p.descents().len() <= 1;
    let inverse_grassmannian = p.inverse().descents().len() <= 1;
    let w = p.window();
    let n = w.len();
    let mut avoids_321 = true;
    'outer: for a in 0..n {
        for b in a + 1..n {
            if w[a] < w[b] {
                continue;
            }
            for c in b + 1..n {
                if w[b] > w[c] {
                    avoids_321 = false;
                    break 'outer;
                }
            }
        }
    }
    let word = Word::finite(&p.reduced_word(), n.max(1)).expect("valid letters");
    let fully_commutative = is_fully_commutative(&word);
    Classification {
        grassmannian,
        inverse_grassmannian,
        bigrassmannian: grassmannian && inverse_grassmannian,
        avoids_321,
        fully_commutative,
    }
}

/// Stembridge's criterion on a reduced word: between consecutive occurrences of
/// a letter there must be at least two non-commuting letters.
pub fn is_fully_commutative(w: &Word) -> bool {
    if !word_eval(w, Side::Left).1 {
        return false;
    }
    let mut last: HashMap<usize, usize> = HashMap::new();
    for (q, &l) in w.letters.iter().enumerate() {
        if let Some(&p) = last.get(&l) {
            let between = w.letters[p + 1..q].iter().filter(|&&m| m != l && w.adjacent(l, m)).count();
            if between < 2 {
                return false;
            }
        }
        last.insert(l, q);
    }
    true
}

/// The heap poset of a fully commutative word together with its wiring grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Heap {
    pub letters: Vec<usize>,
    /// Level (1-based height) of each position when the letters are dropped in.
    pub levels: Vec<usize>,
    /// Cover relations `(lower, upper)` between word positions.
    pub covers: Vec<(usize, usize)>,
}

impl Heap {
    /// Word positions sorted by level, then by letter.
    pub fn level_order(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.letters.len()).collect();
        pos.sort_by_key(|&p| (self.levels[p], self.letters[p]));
        pos
    }

    /// Rows of the wiring grid from the bottom level up: `(letter, position)`.
    pub fn wiring(&self) -> Vec<Vec<(usize, usize)>> {
        let height = self.levels.iter().copied().max().unwrap_or(0);
        let mut rows = vec![Vec::new(); height];
        for p in self.level_order() {
            rows[self.levels[p] - 1].push((self.letters[p], p));
        }
        rows
    }

    /// Number of linear extensions, by dynamic programming over down-sets.
    pub fn linear_extensions(&self) -> u64 {
        let m = self.letters.len();
        assert!(m < 25, "heap too large for subset DP");
        let mut below = vec![0u32; m];
        for &(a, b) in &self.covers {
            below[b] |= 1 << a;
        }
        let mut dp = vec![0u64; 1 << m];
        dp[0] = 1;
        for mask in 0..(1u32 << m) {
            let cur = dp[mask as usize];
            if cur == 0 {
                continue;
            }
            for p in 0..m {
                if mask & (1 << p) == 0 && below[p] & !mask == 0 {
                    dp[(mask | (1 << p)) as usize] += cur;
                }
            }
        }
        dp[(1usize << m) - 1]
    }
}

/// Drops the letters of a fully commutative word into a heap.
pub fn heap_and_wiring(w: &Word) -> Result<Heap> {
    if !is_fully_commutative(w) {
        return Err(Error::NotFullyCommutative(w.to_string()));
    }
    Ok(heap_of_word(w))
}

/// Heap levels and covers of any word (no commutativity check).
#[allow(clippy::needless_range_loop)]
pub fn heap_of_word(w: &Word) -> Heap {
    let m = w.len();
    let mut levels = vec![0; m];
    let mut covers = Vec::new();
    for q in 0..m {
        let mut lvl = 1;
        for p in 0..q {
            if w.adjacent(w.letters[p], w.letters[q]) {
                lvl = lvl.max(levels[p] + 1);
            }
        }
        levels[q] = lvl;
        // p is covered by q when they conflict and no conflicting r sits between.
        for p in 0..q {
            if !w.adjacent(w.letters[p], w.letters[q]) {
                continue;
            }
            let shadowed = (p + 1..q).any(|r| {
                w.adjacent(w.letters[p], w.letters[r]) && w.adjacent(w.letters[r], w.letters[q]) && reachable(w, p, r)
            });
            if !shadowed {
                covers.push((p, q));
            }
        }
    }
    Heap { letters: w.letters.clone(), levels, covers }
}

fn reachable(w: &Word, p: usize, r: usize) -> bool {
    // p < r in the heap order iff a chain of conflicting letters joins them.
    let mut seen = vec![false; r + 1];
    seen[p] = true;
    for x in p + 1..=r {
        seen[x] = (p..x).any(|y| seen[y] && w.adjacent(w.letters[y], w.letters[x]));
    }
    seen[r]
}

/// All reduced words of a permutation in the left convention (small `n` only).
pub fn reduced_words(p: &Permutation) -> Vec<Vec<usize>> {
    let mut memo: BTreeMap<Permutation, Vec<Vec<usize>>> = BTreeMap::new();
    fn rec(p: &Permutation, memo: &mut BTreeMap<Permutation, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
        if p.is_identity() {
            return vec![Vec::new()];
        }
        if let Some(v) = memo.get(p) {
            return v.clone();
        }
        let mut out = Vec::new();
        for i in 1..p.n() {
            if p.is_left_descent(i) {
                for mut w in rec(&p.left_mul_simple(i), memo) {
                    w.push(i);
                    out.push(w);
                }
            }
        }
        memo.insert(p.clone(), out.clone());
        out
    }
    let mut out = rec(p, &mut memo);
    out.sort();
    out
}

/// Shortest-word length by breadth-first search over generators; a test oracle.
pub fn bfs_length(target: &Element) -> usize {
    let (n, flavor) = match target {
        Element::Finite(p) => (p.n(), Flavor::Finite),
        Element::Affine(a) => (a.n(), Flavor::Affine),
    };
    let start = match target {
        Element::Affine(a) => Element::Affine(AffinePermutation::rotation(n, a.shift())),
        _ => Element::identity(n, flavor),
    };
    let gens: Vec<usize> = match flavor {
        Flavor::Finite => (1..n).collect(),
        Flavor::Affine => (0..n).collect(),
    };
    let mut dist: HashMap<Element, usize> = HashMap::new();
    dist.insert(start.clone(), 0);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        if &x == target {
            return d;
        }
        for &g in &gens {
            let y = x.mul_simple(g, Side::Right);
            if !dist.contains_key(&y) {
                dist.insert(y.clone(), d + 1);
                queue.push_back(y);
            }
        }
    }
    unreachable!("target lies in the coset of its rotation")
}
