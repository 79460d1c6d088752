//! Juggling patterns: siteswaps, states, the state graph, bounded patterns and
//! the cyclic rank data of the positroid variety they index.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::coxeter::{parse_int_list, AffinePermutation};
use crate::error::{Error, Result};
use crate::linalg::{rank, rank_of_columns, Matrix};

/// A periodic juggling function `f(i) = i + t_i`, stored by its throws.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct JugglingFunction {
    throws: Vec<i64>,
}

impl JugglingFunction {
    pub fn new(throws: Vec<i64>) -> Result<Self> {
        validate_siteswap(&throws)?;
        Ok(JugglingFunction { throws })
    }

    /// From the window `(f(1), …, f(n))`.
    pub fn from_window(window: &[i64]) -> Result<Self> {
        Self::new(window.iter().enumerate().map(|(i, &v)| v - (i as i64 + 1)).collect())
    }

    pub fn constant(n: usize, k: usize) -> Self {
        JugglingFunction { throws: vec![k as i64; n] }
    }

    pub fn n(&self) -> usize {
        self.throws.len()
    }

    pub fn throws(&self) -> &[i64] {
        &self.throws
    }

    pub fn throw_at(&self, i: i64) -> i64 {
        self.throws[(i - 1).rem_euclid(self.n() as i64) as usize]
    }

    pub fn apply(&self, i: i64) -> i64 {
        i + self.throw_at(i)
    }

    /// The unique `x` with `f(x) = m`.
    pub fn preimage(&self, m: i64) -> i64 {
        self.to_affine().inverse().apply(m)
    }

    pub fn window(&self) -> Vec<i64> {
        (1..=self.n() as i64).map(|i| self.apply(i)).collect()
    }

    pub fn ball_count(&self) -> usize {
        (self.throws.iter().sum::<i64>() / self.n() as i64) as usize
    }

    pub fn is_plain(&self) -> bool {
        self.throws.iter().all(|&t| t >= 0)
    }

    pub fn is_bounded(&self) -> bool {
        let n = self.n() as i64;
        self.throws.iter().all(|&t| (0..=n).contains(&t))
    }

    pub fn to_affine(&self) -> AffinePermutation {
        AffinePermutation::new(self.window()).expect("juggling functions are bijective")
    }

    pub fn from_affine(a: &AffinePermutation) -> Self {
        JugglingFunction::from_window(a.window()).expect("affine permutations are bijective")
    }

    /// Pairs of arcs `i < j < f(j) < f(i)` with `i` in one period.
    pub fn nested_pairs(&self) -> usize {
        let n = self.n() as i64;
        let mut count = 0;
        for i in 1..=n {
            let fi = self.apply(i);
            for j in i + 1..fi.max(i + 1) {
                if self.apply(j) < fi {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for JugglingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.throws.iter().all(|&t| (0..=9).contains(&t)) {
            for t in &self.throws {
                write!(f, "{t}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.throws.iter().map(|t| t.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for JugglingFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let throws = parse_int_list(s)?;
        if throws.is_empty() {
            return Err(Error::Parse("empty siteswap".into()));
        }
        JugglingFunction::new(throws)
    }
}

/// Checks that no two throws land together and returns the ball count.
/// A collision reports the first landing time (throws made at times ≥ 1).
pub fn validate_siteswap(throws: &[i64]) -> Result<usize> {
    let n = throws.len();
    if n == 0 {
        return Err(Error::Parse("empty siteswap".into()));
    }
    let ni = n as i64;
    let mut residues = vec![false; n];
    let mut clash = false;
    for (i, &t) in throws.iter().enumerate() {
        let r = (i as i64 + 1 + t).rem_euclid(ni) as usize;
        clash |= residues[r];
        residues[r] = true;
    }
    if clash {
        let span = throws.iter().map(|t| t.abs()).max().unwrap_or(0);
        let horizon = 3 * ni + 2 * span;
        let mut landings: BTreeMap<i64, usize> = BTreeMap::new();
        for time in 1..=horizon {
            *landings.entry(time + throws[((time - 1) % ni) as usize]).or_default() += 1;
        }
        let time = landings.iter().find(|(_, &c)| c >= 2).map(|(&t, _)| t).expect("collision exists");
        return Err(Error::Collision { time });
    }
    Ok((throws.iter().sum::<i64>() / ni) as usize)
}

/// Landing offsets of the balls in the air just after time `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct JugglingState {
    pub landing: BTreeSet<usize>,
}

impl JugglingState {
    pub fn ground(k: usize) -> Self {
        JugglingState { landing: (1..=k).collect() }
    }

    /// `×`/`−` picture of the first `width` slots.
    pub fn render(&self, width: usize) -> String {
        (1..=width).map(|j| if self.landing.contains(&j) { '×' } else { '−' }).collect()
    }
}

/// `{j ≥ 1 : f⁻¹(i+j) ≤ i}`.
pub fn state_at(f: &JugglingFunction, i: i64) -> Result<JugglingState> {
    if let Some((pos, &throw)) = f.throws().iter().enumerate().find(|(_, &t)| t < 0) {
        return Err(Error::NegativeThrow { pos: pos + 1, throw });
    }
    let max = f.throws().iter().copied().max().unwrap_or(0);
    let landing = (1..=max).filter(|&j| f.preimage(i + j) <= i).map(|j| j as usize).collect();
    Ok(JugglingState { landing })
}

/// True iff prefixing infinitely many `k`-throws causes no collision. The
/// first-`k`-spots characterization is computed alongside and must agree.
pub fn is_ground_state(f: &JugglingFunction) -> bool {
    let k = f.ball_count() as i64;
    let n = f.n() as i64;
    // prefix balls land at 1..=k; simulate the real throws for two periods
    let mut landed: BTreeSet<i64> = (1..=k).collect();
    let mut ok = true;
    for t in 1..=2 * n + k {
        if !landed.insert(f.apply(t)) {
            ok = false;
            break;
        }
    }
    let spots = (1..=k).all(|i| f.apply(i) > k);
    assert_eq!(ok, spots, "ground-state characterizations disagree for {f}");
    ok
}

/// The juggling state graph on `k`-subsets of `{1..max_throw}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StateGraph {
    pub max_throw: usize,
    pub vertices: Vec<JugglingState>,
    /// `(from, to, throw)` with indices into `vertices`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl StateGraph {
    /// Closed walks of length `len`, i.e. `trace(A^len)`.
    pub fn closed_walks(&self, len: usize) -> BigUint {
        let v = self.vertices.len();
        let mut a = vec![vec![BigUint::zero(); v]; v];
        for &(x, y, _) in &self.edges {
            a[x][y] += 1u32;
        }
        let mut p: Vec<Vec<BigUint>> =
            (0..v).map(|i| (0..v).map(|j| if i == j { BigUint::one() } else { BigUint::zero() }).collect()).collect();
        for _ in 0..len {
            p = (0..v)
                .map(|i| (0..v).map(|j| (0..v).fold(BigUint::zero(), |acc, t| acc + &p[i][t] * &a[t][j])).collect())
                .collect();
        }
        (0..v).fold(BigUint::zero(), |acc, i| acc + &p[i][i])
    }

    pub fn index_of(&self, s: &JugglingState) -> Option<usize> {
        self.vertices.iter().position(|v| v == s)
    }

    /// Whether the throw sequence is a closed walk starting somewhere.
    pub fn is_cycle(&self, throws: &[usize]) -> bool {
        (0..self.vertices.len()).any(|start| {
            let mut cur = start;
            for &t in throws {
                match self.edges.iter().find(|&&(x, _, th)| x == cur && th == t) {
                    Some(&(_, y, _)) => cur = y,
                    None => return false,
                }
            }
            cur == start
        })
    }
}

pub fn state_graph(n: usize, k: usize, max_throw: usize) -> StateGraph {
    let _ = n;
    let mut vertices = Vec::new();
    for mask in 0u64..(1 << max_throw) {
        if mask.count_ones() as usize == k {
            vertices.push(JugglingState { landing: (1..=max_throw).filter(|&j| mask >> (j - 1) & 1 == 1).collect() });
        }
    }
    let index: BTreeMap<JugglingState, usize> = vertices.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let mut edges = Vec::new();
    for (x, s) in vertices.iter().enumerate() {
        let shifted: BTreeSet<usize> = s.landing.iter().filter(|&&j| j > 1).map(|&j| j - 1).collect();
        if s.landing.contains(&1) {
            for t in 1..=max_throw {
                if !shifted.contains(&t) {
                    let mut next = shifted.clone();
                    next.insert(t);
                    edges.push((x, index[&JugglingState { landing: next }], t));
                }
            }
        } else {
            edges.push((x, index[&JugglingState { landing: shifted }], 0));
        }
    }
    StateGraph { max_throw, vertices, edges }
}

/// All bounded patterns with `n` throws and `k` balls.
pub fn enumerate_bounded(n: usize, k: usize) -> Vec<JugglingFunction> {
    let mut out = Vec::new();
    let mut throws = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, target: i64, throws: &mut Vec<i64>, used: &mut [bool], out: &mut Vec<JugglingFunction>) {
        let i = throws.len();
        let sum: i64 = throws.iter().sum();
        if i == n {
            if sum == target {
                out.push(JugglingFunction { throws: throws.clone() });
            }
            return;
        }
        let remaining = (n - i) as i64;
        for t in 0..=n as i64 {
            let rest = target - sum - t;
            if rest < 0 || rest > (remaining - 1) * n as i64 {
                continue;
            }
            let r = ((i as i64 + 1 + t) % n as i64) as usize;
            if used[r] {
                continue;
            }
            used[r] = true;
            throws.push(t);
            rec(n, target, throws, used, out);
            throws.pop();
            used[r] = false;
        }
    }
    rec(n, (n * k) as i64, &mut throws, &mut used, &mut out);
    out.sort();
    out
}

/// Bounded patterns graded by nested-arc count, with covering relations.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JugglingPoset {
    pub elements: Vec<JugglingFunction>,
    pub lengths: Vec<usize>,
    /// `(lower, upper)` index pairs.
    pub covers: Vec<(usize, usize)>,
}

pub fn juggling_poset(n: usize, k: usize) -> JugglingPoset {
    let elements = enumerate_bounded(n, k);
    let lengths: Vec<usize> = elements.iter().map(|f| f.nested_pairs()).collect();
    let index: BTreeMap<&JugglingFunction, usize> = elements.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut covers = BTreeSet::new();
    for (u, f) in elements.iter().enumerate() {
        for i in 1..=n as i64 {
            for j in i + 1..i + n as i64 {
                if f.apply(i) <= f.apply(j) {
                    continue;
                }
                let g = swap_landings(f, i, j);
                if let Some(&l) = index.get(&g) {
                    if lengths[l] + 1 == lengths[u] {
                        covers.insert((l, u));
                    }
                }
            }
        }
    }
    JugglingPoset { elements, lengths, covers: covers.into_iter().collect() }
}

/// Exchanges the landing times of the throws at `i` and `j` (periodically).
fn swap_landings(f: &JugglingFunction, i: i64, j: i64) -> JugglingFunction {
    let n = f.n() as i64;
    let mut window = f.window();
    let (fi, fj) = (f.apply(i), f.apply(j));
    let ri = (i - 1).rem_euclid(n);
    let rj = (j - 1).rem_euclid(n);
    window[ri as usize] = fj - (i - 1 - ri);
    window[rj as usize] = fi - (j - 1 - rj);
    JugglingFunction::from_window(&window).expect("swapping landings keeps a bijection")
}

/// `rank(columns i..=j) ≤ bound` for a cyclic interval; `j` lies in `i..i+n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RankCondition {
    pub i: usize,
    pub j: usize,
    pub bound: usize,
}

impl RankCondition {
    pub fn len(&self) -> usize {
        self.j + 1 - self.i
    }

    pub fn is_empty(&self) -> bool {
        self.j < self.i
    }

    /// Original column indices `1..=n` of the interval in cyclic order.
    pub fn columns(&self, n: usize) -> Vec<usize> {
        (self.i..=self.j).map(|c| (c - 1) % n + 1).collect()
    }

    pub fn display(&self, n: usize) -> String {
        format!("rank[{},{}] ≤ {}", self.i, (self.j - 1) % n + 1, self.bound)
    }

    /// Whether `self` forces `other`: a superset interval with a smaller
    /// bound, or a subset interval whose bound survives adding the extra columns.
    pub fn implies(&self, other: &RankCondition, n: usize) -> bool {
        let mine: BTreeSet<usize> = self.columns(n).into_iter().collect();
        let theirs: BTreeSet<usize> = other.columns(n).into_iter().collect();
        if theirs.is_subset(&mine) && self.bound <= other.bound {
            return true;
        }
        mine.is_subset(&theirs) && self.bound + theirs.len() - mine.len() <= other.bound
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositroidData {
    pub n: usize,
    pub k: usize,
    /// All nontrivial conditions (bound below both length and `k`).
    pub conditions: Vec<RankCondition>,
    pub essential: Vec<RankCondition>,
    /// Non-essential conditions with an essential condition implying each.
    pub implied: Vec<(RankCondition, RankCondition)>,
    /// Boxes `(i, j)` of the affine diagram for rows `i` in one period.
    pub diagram: Vec<(i64, i64)>,
}

/// Arcs leaving `[i, i+len-1]`: throws made inside that land after it.
pub fn interval_bound(f: &JugglingFunction, i: i64, len: i64) -> usize {
    let j = i + len - 1;
    (i..=j).filter(|&x| f.apply(x) > j).count()
}

fn southwest_bound(f: &JugglingFunction, i: i64, len: i64) -> usize {
    // interval length minus the permutation-matrix ones inside the square block
    let j = i + len - 1;
    let inside = (i..=j).filter(|&x| (i..=j).contains(&f.apply(x))).count();
    len as usize - inside
}

fn entering_bound(f: &JugglingFunction, i: i64, len: i64) -> usize {
    let j = i + len - 1;
    let n = f.n() as i64;
    (i - n..i).filter(|&x| (i..=j).contains(&f.apply(x))).count()
}

pub fn positroid_data(f: &JugglingFunction) -> PositroidData {
    let n = f.n();
    let k = f.ball_count();
    let ni = n as i64;
    let r = |i: i64, len: i64| -> usize {
        if len <= 0 {
            0
        } else if len >= ni {
            k
        } else {
            interval_bound(f, (i - 1).rem_euclid(ni) + 1, len)
        }
    };
    let mut conditions = Vec::new();
    let mut essential = Vec::new();
    for i in 1..=ni {
        for len in 1..ni {
            let b = interval_bound(f, i, len);
            assert_eq!(b, southwest_bound(f, i, len));
            assert_eq!(b, entering_bound(f, i, len));
            if b >= (len as usize).min(k) {
                continue;
            }
            let c = RankCondition { i: i as usize, j: (i + len - 1) as usize, bound: b };
            let implied = r(i + 1, len - 1) < b || r(i, len - 1) < b || r(i - 1, len + 1) <= b || r(i, len + 1) <= b;
            if !implied {
                essential.push(c.clone());
            }
            conditions.push(c);
        }
    }
    let implied = conditions
        .iter()
        .filter(|c| !essential.contains(c))
        .map(|c| {
            let by = essential.iter().find(|e| e.implies(c, n)).cloned().unwrap_or_else(|| c.clone());
            (c.clone(), by)
        })
        .collect();
    let finv = f.to_affine().inverse();
    let mut diagram = Vec::new();
    for i in 1..=ni {
        for j in i..f.apply(i) {
            if finv.apply(j) > i {
                diagram.push((i, j));
            }
        }
    }
    PositroidData { n, k, conditions, essential, implied, diagram }
}

/// The bounded pattern whose only essential condition is the given one.
pub fn single_condition_pattern(n: usize, k: usize, cond: &RankCondition) -> Result<JugglingFunction> {
    let want = vec![cond.clone()];
    enumerate_bounded(n, k)
        .into_iter()
        .find(|f| positroid_data(f).essential == want)
        .ok_or_else(|| Error::Unsatisfiable(cond.display(n)))
}

/// The bounded pattern of the row span of a full-rank `k × n` matrix:
/// `f(i) = i + d` for the least `d` with column `i` in the span of the next
/// `d` columns cyclically.
pub fn positroid_of_matrix(m: &Matrix) -> Result<JugglingFunction> {
    let k = m.len();
    let n = if k == 0 { 0 } else { m[0].len() };
    let r = rank(m);
    if r != k || n == 0 {
        return Err(Error::RankDeficient { rank: r, expected: k });
    }
    let mut throws = Vec::with_capacity(n);
    for i in 0..n {
        let mut d = 0;
        loop {
            let span: Vec<usize> = (1..=d).map(|t| (i + t) % n).collect();
            let mut with = span.clone();
            with.push(i);
            if rank_of_columns(m, &with) == rank_of_columns(m, &span) {
                break;
            }
            d += 1;
        }
        throws.push(d as i64);
    }
    JugglingFunction::new(throws)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{random_matrix, rat, zeros};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn jf(s: &str) -> JugglingFunction {
        s.parse().unwrap()
    }

    #[test]
    fn siteswap_validation() {
        assert_eq!(validate_siteswap(&[3]).unwrap(), 3);
        assert_eq!(validate_siteswap(&[0, 6, 1, 5, 1, 5]).unwrap(), 3);
        // throws at times 4 and 7 both land at time 8
        assert_eq!(validate_siteswap(&[4, 4, 4, 4, 6, 6, 1, 5, 1, 5]), Err(Error::Collision { time: 8 }));
        for n in 1..=8 {
            for k in 0..=n {
                assert_eq!(validate_siteswap(&vec![k as i64; n]).unwrap(), k);
            }
        }
    }

    #[test]
    fn states_and_ground() {
        let f = JugglingFunction::constant(4, 2);
        assert_eq!(state_at(&f, 0).unwrap(), JugglingState::ground(2));
        assert_eq!(JugglingState::ground(2).render(4), "××−−");
        assert!(is_ground_state(&jf("566151")));
        assert!(!is_ground_state(&jf("661515")));
        for k in 0..=5 {
            assert!(is_ground_state(&JugglingFunction::constant(5, k)));
        }
        let virt = JugglingFunction::new(vec![-1, 1]).unwrap();
        assert!(matches!(state_at(&virt, 0), Err(Error::NegativeThrow { .. })));
    }

    #[test]
    fn ground_state_matches_initial_state() {
        for n in 1..=5 {
            for k in 0..=n {
                for f in enumerate_bounded(n, k) {
                    let initial = state_at(&f, 0).unwrap() == JugglingState::ground(k);
                    assert_eq!(is_ground_state(&f), initial, "{f}");
                }
            }
        }
    }

    #[test]
    fn state_graph_examples() {
        let g = state_graph(4, 2, 4);
        assert_eq!(g.vertices.len(), 6);
        for t in [[4, 0, 4, 0], [1, 3, 0, 4]] {
            assert!(g.is_cycle(&t), "{t:?}");
        }
        // 3022 sums to 7, so it is no 2-ball pattern and no closed walk
        assert!(!g.is_cycle(&[3, 0, 2, 2]));
        assert!(validate_siteswap(&[3, 0, 2, 2]).is_err());
    }

    #[test]
    fn bounded_enumeration() {
        let got: Vec<String> = enumerate_bounded(2, 1).iter().map(|f| f.to_string()).collect();
        assert_eq!(got, vec!["02", "11", "20"]);
        assert_eq!(enumerate_bounded(4, 2).len(), 33);
        for n in 1..=6 {
            for k in 0..=n {
                let count = enumerate_bounded(n, k).len();
                assert_eq!(BigUint::from(count), state_graph(n, k, n).closed_walks(n), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn nested_pairs_equal_affine_length() {
        for n in 1..=6 {
            for k in 0..=n {
                for f in enumerate_bounded(n, k) {
                    assert_eq!(f.nested_pairs(), f.to_affine().length(), "{f}");
                }
            }
        }
        assert_eq!(JugglingFunction::constant(5, 3).nested_pairs(), 0);
    }

    #[test]
    fn poset_is_graded() {
        let p = juggling_poset(4, 2);
        assert_eq!(p.elements.len(), 33);
        for &(a, b) in &p.covers {
            assert_eq!(p.lengths[a] + 1, p.lengths[b]);
        }
        let bottom = p.elements.iter().position(|f| *f == JugglingFunction::constant(4, 2)).unwrap();
        assert_eq!(p.lengths[bottom], 0);
        // every non-bottom element covers something
        for (i, &l) in p.lengths.iter().enumerate() {
            if l > 0 {
                assert!(p.covers.iter().any(|&(_, b)| b == i));
            }
        }
    }

    #[test]
    fn positroid_example_3401() {
        let d = positroid_data(&jf("3401"));
        let shown: Vec<String> = d.essential.iter().map(|c| c.display(4)).collect();
        assert_eq!(shown, vec!["rank[3,3] ≤ 0", "rank[3,1] ≤ 1"]);
        let implied: Vec<String> =
            d.implied.iter().map(|(c, by)| format!("{} by {}", c.display(4), by.display(4))).collect();
        assert!(implied.contains(&"rank[4,1] ≤ 1 by rank[3,1] ≤ 1".to_string()), "{implied:?}");
        assert_eq!(d.diagram.len(), jf("3401").to_affine().length());
        assert!(positroid_data(&JugglingFunction::constant(5, 2)).essential.is_empty());
    }

    #[test]
    fn essential_conditions_imply_the_rest() {
        for n in 2..=5 {
            for k in 1..n {
                let all: Vec<(JugglingFunction, PositroidData)> =
                    enumerate_bounded(n, k).into_iter().map(|f| (f.clone(), positroid_data(&f))).collect();
                for (f, d) in &all {
                    for (c, by) in &d.implied {
                        assert!(by.implies(c, n), "{f}: {} not implied", c.display(n));
                    }
                    // the essential set pins down f
                    let same = all.iter().filter(|(_, e)| e.essential == d.essential).count();
                    assert_eq!(same, 1, "{f}");
                }
            }
        }
    }

    #[test]
    fn single_condition() {
        let c = RankCondition { i: 1, j: 3, bound: 2 };
        assert_eq!(single_condition_pattern(7, 3, &c).unwrap().to_string(), "2333334");
        let bad = RankCondition { i: 1, j: 3, bound: 5 };
        assert!(single_condition_pattern(7, 3, &bad).is_err());
    }

    #[test]
    fn pattern_of_matrix() {
        let s = rat(3);
        let m = vec![vec![rat(1), rat(0), rat(0), s], vec![rat(0), rat(1), rat(0), rat(0)]];
        assert_eq!(positroid_of_matrix(&m).unwrap().to_string(), "3401");
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut generic = 0;
        while generic < 5 {
            let m = random_matrix(&mut rng, 2, 4);
            let all_minors = (0..4).all(|a| (a + 1..4).all(|b| rank_of_columns(&m, &[a, b]) == 2));
            if !all_minors {
                continue;
            }
            generic += 1;
            assert_eq!(positroid_of_matrix(&m).unwrap().to_string(), "2222");
        }
        // identity columns on lambda, zeros elsewhere
        let mut m = zeros(3, 7);
        for (r, &c) in [1usize, 2, 4].iter().enumerate() {
            m[r][c - 1] = rat(1);
        }
        assert_eq!(positroid_of_matrix(&m).unwrap().window(), vec![8, 9, 3, 11, 5, 6, 7]);
        assert!(positroid_of_matrix(&zeros(2, 3)).is_err());
    }

    #[test]
    fn matrix_pattern_is_row_operation_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let mut m = random_matrix(&mut rng, 2, 5);
            // sprinkle zeros to reach special positroids
            for x in m[0].iter_mut() {
                if rand::Rng::gen_bool(&mut rng, 0.3) {
                    *x = rat(0);
                }
            }
            let Ok(f) = positroid_of_matrix(&m) else { continue };
            let g = vec![vec![rat(2), rat(1)], vec![rat(-1), rat(3)]];
            let m2 = crate::linalg::mul(&g, &m);
            assert_eq!(positroid_of_matrix(&m2).unwrap(), f);
            assert!(f.is_bounded());
        }
    }
}
