//! Lattices in `C[[t⁻¹]][t]` and periodic affine flags built from a Schubert
//! patch. A lattice stores only its `k` finite generators; the tail of all
//! non-positive powers of `t` is implicit.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::algebra::{patch_matrix, Poly, Ring};
use crate::error::{Error, Result};
use crate::juggling::{positroid_data, state_at, JugglingFunction, JugglingState, RankCondition};
use crate::linalg::{random_nonzero_rational, rank, rank_of_columns, Matrix, Rational};
use crate::strip::StripLayout;

/// Coefficients a lattice generator may carry.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `Some` for constants.
    fn as_rational(&self) -> Option<Rational>;
}

impl Coeff for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

impl Coeff for Poly {
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn is_one(&self) -> bool {
        self == &Poly::one(self.nvars)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().expect("one term");
                m.iter().all(|&e| e == 0).then(|| Rational::from_integer(c.clone()))
            }
            _ => None,
        }
    }
}

/// A polynomial in `t`; only nonzero coefficients are stored.
pub type TPoly<C> = BTreeMap<i64, C>;

fn top<C>(g: &TPoly<C>) -> i64 {
    *g.keys().next_back().expect("generators are nonzero")
}

/// `tail ⊕ C·p_1 ⊕ … ⊕ C·p_k`, generators in strictly increasing top degree,
/// each with leading coefficient 1 and only positive degrees.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentLattice<C> {
    pub gens: Vec<TPoly<C>>,
}

impl<C: Coeff> LaurentLattice<C> {
    /// Drops terms of degree ≤ 0 (they live in the tail) and sorts by top degree.
    pub fn new(gens: impl IntoIterator<Item = TPoly<C>>) -> Result<Self> {
        let mut out: Vec<TPoly<C>> = Vec::new();
        for g in gens {
            let g: TPoly<C> = g.into_iter().filter(|(d, c)| *d > 0 && !c.is_zero()).collect();
            if g.is_empty() {
                return Err(Error::InvalidLattice("generator lies in the tail".into()));
            }
            if !g[&top(&g)].is_one() {
                return Err(Error::InvalidLattice(format!("leading coefficient at t^{} is not 1", top(&g))));
            }
            out.push(g);
        }
        out.sort_by_key(|g| top(g));
        if out.windows(2).any(|w| top(&w[0]) == top(&w[1])) {
            return Err(Error::InvalidLattice("two generators share a top degree".into()));
        }
        Ok(LaurentLattice { gens: out })
    }

    /// `tail ⊕ C·t^j` over the given degrees.
    pub fn monomial(one: C, degrees: impl IntoIterator<Item = i64>) -> Result<Self> {
        Self::new(degrees.into_iter().map(|d| TPoly::from([(d, one.clone())])))
    }

    pub fn index(&self) -> usize {
        self.gens.len()
    }

    pub fn top_degrees(&self) -> Vec<i64> {
        self.gens.iter().map(top).collect()
    }

    /// Membership of `g` by reduction against the echelon generators.
    pub fn contains(&self, g: &TPoly<C>) -> bool {
        let mut g: TPoly<C> = g.iter().filter(|(d, c)| **d > 0 && !c.is_zero()).map(|(d, c)| (*d, c.clone())).collect();
        while let Some((&d, c)) = g.iter().next_back() {
            let Some(p) = self.gens.iter().find(|p| top(p) == d) else { return false };
            let c = c.clone();
            for (e, pc) in p {
                let v = match g.get(e) {
                    Some(old) => old.sub(&c.mul(pc)),
                    None => c.mul(pc).neg(),
                };
                if v.is_zero() {
                    g.remove(e);
                } else {
                    g.insert(*e, v);
                }
            }
        }
        true
    }

    /// `t^s · L`. Positive shifts add `t, …, t^s`; negative shifts push low
    /// generators into the tail.
    pub fn shift(&self, s: i64, one: C) -> Result<Self> {
        let moved = self.gens.iter().map(|g| g.iter().map(|(d, c)| (d + s, c.clone())).collect::<TPoly<C>>());
        let moved: Vec<TPoly<C>> = moved.filter(|g| top(g) > 0).collect();
        let extra = (1..=s).map(|d| TPoly::from([(d, one.clone())]));
        Self::new(extra.chain(moved))
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Result<LaurentLattice<D>> {
        LaurentLattice::new(self.gens.iter().map(|g| g.iter().map(|(d, c)| (*d, f(c))).collect::<TPoly<D>>()))
    }

    pub fn to_rational(&self) -> Result<LaurentLattice<Rational>> {
        let mut gens = Vec::new();
        for g in &self.gens {
            let mut h = TPoly::new();
            for (d, c) in g {
                h.insert(*d, c.as_rational().ok_or(Error::Symbolic)?);
            }
            gens.push(h);
        }
        LaurentLattice::new(gens)
    }

    /// `tail + <t, t^2, a33*t^3 + t^4>` given a coefficient printer.
    pub fn format_with(&self, coeff: impl Fn(&C) -> String) -> String {
        let gens: Vec<String> = self.gens.iter().map(|g| format_tpoly(g, &coeff)).collect();
        format!("tail + <{}>", gens.join(", "))
    }

    pub fn to_json_with(&self, coeff: impl Fn(&C) -> String) -> serde_json::Value {
        let gens: Vec<BTreeMap<String, String>> =
            self.gens.iter().map(|g| g.iter().map(|(d, c)| (d.to_string(), coeff(c))).collect()).collect();
        serde_json::json!({ "index": self.index(), "generators": gens })
    }
}

fn format_tpoly<C: Coeff>(g: &TPoly<C>, coeff: &impl Fn(&C) -> String) -> String {
    let mut s = String::new();
    for (idx, (d, c)) in g.iter().enumerate() {
        let power = if *d == 1 { "t".to_string() } else { format!("t^{d}") };
        let mut text = coeff(c);
        let neg = text.starts_with('-') && !text[1..].contains([' ']);
        if neg {
            text.remove(0);
        }
        let term = if text == "1" {
            power
        } else if text.contains(' ') {
            format!("({text})*{power}")
        } else {
            format!("{text}*{power}")
        };
        if idx > 0 {
            s.push_str(if neg { " - " } else { " + " });
        } else if neg {
            s.push('-');
        }
        s.push_str(&term);
    }
    s
}

impl fmt::Display for LaurentLattice<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(|c| c.to_string()))
    }
}

/// `(L_1, …, L_n)`, extended periodically.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineFlag<C> {
    pub k: usize,
    pub lattices: Vec<LaurentLattice<C>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagViolation {
    /// 1-based lattice index.
    pub i: usize,
    /// 1-based generator of `L_i`, when the failure is a containment.
    pub generator: Option<usize>,
    pub reason: String,
}

impl fmt::Display for FlagViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.generator {
            Some(g) => write!(f, "L_{} generator {}: {}", self.i, g, self.reason),
            None => write!(f, "L_{}: {}", self.i, self.reason),
        }
    }
}

impl<C: Coeff> AffineFlag<C> {
    pub fn n(&self) -> usize {
        self.lattices.len()
    }

    /// Index `k` everywhere and `t⁻¹L_i ⊆ L_{i+1}` with `L_{n+1} = L_1`.
    /// Generators have unit leading coefficients, so the reduction is exact
    /// over any coefficient ring.
    pub fn validate(&self) -> std::result::Result<(), FlagViolation> {
        let n = self.n();
        for (idx, l) in self.lattices.iter().enumerate() {
            if l.index() != self.k {
                return Err(FlagViolation {
                    i: idx + 1,
                    generator: None,
                    reason: format!("index {} instead of {}", l.index(), self.k),
                });
            }
        }
        for i in 0..n {
            let next = &self.lattices[(i + 1) % n];
            for (g_idx, g) in self.lattices[i].gens.iter().enumerate() {
                let down: TPoly<C> = g.iter().map(|(d, c)| (d - 1, c.clone())).collect();
                if !next.contains(&down) {
                    return Err(FlagViolation {
                        i: i + 1,
                        generator: Some(g_idx + 1),
                        reason: format!("t^-1 times it is not in L_{}", (i + 1) % n + 1),
                    });
                }
            }
        }
        Ok(())
    }
}

impl AffineFlag<Poly> {
    /// Substitutes `point[v]` for ring variable `v`.
    pub fn specialize(&self, point: &[Rational]) -> Result<AffineFlag<Rational>> {
        let lattices = self.lattices.iter().map(|l| l.map(|c| c.eval(point))).collect::<Result<_>>()?;
        Ok(AffineFlag { k: self.k, lattices })
    }

    pub fn format(&self, ring: &Ring) -> Vec<String> {
        self.lattices.iter().map(|l| l.format_with(|c| ring.format(c))).collect()
    }

    pub fn to_json(&self, ring: &Ring) -> serde_json::Value {
        serde_json::Value::Array(self.lattices.iter().map(|l| l.to_json_with(|c| ring.format(c))).collect())
    }
}

impl AffineFlag<Rational> {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.lattices.iter().map(|l| l.to_json_with(|c| c.to_string())).collect())
    }
}

/// Rotate the columns of `m` left `i − 1` times, clear each row to the right
/// of its identity 1, and read row `r` as `Σ_c M_i[r][c] t^c`.
pub fn lattice_from_rows<C: Coeff>(m: &[Vec<C>], lambda: &[usize], i: usize) -> Result<LaurentLattice<C>> {
    let n = m.first().map_or(0, |row| row.len());
    let gens = m.iter().zip(lambda).map(|(row, &l)| {
        let last = (l + n - i) % n + 1;
        (1..=last)
            .map(|c| (c as i64, row[(i - 1 + c - 1) % n].clone()))
            .filter(|(_, v)| !v.is_zero())
            .collect::<TPoly<C>>()
    });
    LaurentLattice::new(gens)
}

pub fn flag_from_rows<C: Coeff>(m: &[Vec<C>], lambda: &[usize]) -> Result<AffineFlag<C>> {
    let n = m.first().map_or(0, |row| row.len());
    let lattices = (1..=n).map(|i| lattice_from_rows(m, lambda, i)).collect::<Result<_>>()?;
    Ok(AffineFlag { k: lambda.len(), lattices })
}

/// `L_i` for the symbolic patch matrix of `layout`.
pub fn lattice_from_matrix(layout: &StripLayout, ring: &Ring, i: usize) -> Result<LaurentLattice<Poly>> {
    lattice_from_rows(&patch_matrix(layout, ring), &layout.lambda, i)
}

pub fn symbolic_flag(layout: &StripLayout, ring: &Ring) -> Result<AffineFlag<Poly>> {
    flag_from_rows(&patch_matrix(layout, ring), &layout.lambda)
}

pub fn state_lattice(state: &JugglingState) -> LaurentLattice<Rational> {
    LaurentLattice::monomial(Rational::one(), state.landing.iter().map(|&j| j as i64))
        .expect("distinct positive degrees")
}

/// The flag of `f`'s states: `L_i` holds the balls in the air after time `i − 1`.
pub fn pattern_flag(f: &JugglingFunction) -> Result<AffineFlag<Rational>> {
    let lattices = (1..=f.n() as i64).map(|i| state_at(f, i - 1).map(|s| state_lattice(&s))).collect::<Result<_>>()?;
    Ok(AffineFlag { k: f.ball_count(), lattices })
}

/// The flag `t_λ`: `L_i` has `t^j` for each cross of the `i`-th rotation of λ.
pub fn t_lambda(lambda: &[usize], n: usize) -> AffineFlag<Rational> {
    let lattices = (1..=n)
        .map(|i| LaurentLattice::monomial(Rational::one(), lambda.iter().map(|&l| ((l + n - i) % n + 1) as i64)))
        .collect::<Result<_>>()
        .expect("λ has distinct entries");
    AffineFlag { k: lambda.len(), lattices }
}

/// `(dim L/(L ∩ t^m C[[t⁻¹]]), dim(L ∩ t^m C[t]))`.
pub fn schubert_dims<C: Coeff>(l: &LaurentLattice<C>, m: i64) -> Result<(usize, usize)> {
    let l = l.to_rational()?;
    let k = l.index();
    let up = l.top_degrees().iter().filter(|&&d| d > m).count() + (-m).max(0) as usize;
    let down = if m <= 0 {
        k + (1 - m) as usize
    } else {
        let coeffs: Matrix = l
            .gens
            .iter()
            .map(|g| (1..m).map(|d| g.get(&d).cloned().unwrap_or_else(Rational::zero)).collect())
            .collect();
        k - if m > 1 { rank(&coeffs) } else { 0 }
    };
    Ok((up, down))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Membership {
    Outside,
    /// In the closure but not the open cell.
    Closed,
    Open,
}

fn membership<C: Coeff>(
    flag: &AffineFlag<C>,
    states: &AffineFlag<Rational>,
    pick: impl Fn((usize, usize)) -> usize,
) -> Result<Membership> {
    let tops = flag.lattices.iter().flat_map(|l| l.top_degrees());
    let span = tops.chain(states.lattices.iter().flat_map(|l| l.top_degrees())).max().unwrap_or(0) + 1;
    let mut equal = true;
    for (l, s) in flag.lattices.iter().zip(&states.lattices) {
        for m in -1..=span {
            let (a, b) = (pick(schubert_dims(l, m)?), pick(schubert_dims(s, m)?));
            if a < b {
                return Ok(Membership::Outside);
            }
            equal &= a == b;
        }
    }
    Ok(if equal { Membership::Open } else { Membership::Closed })
}

/// Against `Fl_λ`: `dim(L_i ∩ t^m C[t]) ≥ dim(Λ_i ∩ t^m C[t])` for all `i, m`.
pub fn schubert_membership<C: Coeff>(flag: &AffineFlag<C>, states: &AffineFlag<Rational>) -> Result<Membership> {
    membership(flag, states, |(_, down)| down)
}

/// Against `Fl^μ`: `dim L_i/(L_i ∩ t^m C[[t⁻¹]]) ≥ dim μ_i/(…)` for all `i, m`.
pub fn opposite_membership<C: Coeff>(flag: &AffineFlag<C>, states: &AffineFlag<Rational>) -> Result<Membership> {
    membership(flag, states, |(up, _)| up)
}

pub const RETRY_LIMIT: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorrespondenceReport {
    pub lambda: Vec<usize>,
    pub f: String,
    pub samples: usize,
    /// Samples satisfying the rank bounds of `f`.
    pub on_variety: usize,
    pub agreements: usize,
    pub retries: usize,
    pub first_disagreement: Option<String>,
}

impl CorrespondenceReport {
    pub fn holds(&self) -> bool {
        self.agreements == self.samples
    }
}

/// A random point of the patch, optionally pushed onto one rank condition.
/// `None` when the forcing is degenerate.
pub fn sample_patch<R: Rng>(layout: &StripLayout, force: Option<&RankCondition>, rng: &mut R) -> Option<Matrix> {
    let (k, n) = (layout.k, layout.n);
    let mut m: Matrix = (0..k)
        .map(|r| {
            (1..=n)
                .map(|c| match layout.row_of_column(c) {
                    Some(rr) => Rational::from_integer(((rr == r + 1) as i64).into()),
                    None => random_nonzero_rational(rng),
                })
                .collect()
        })
        .collect();
    let Some(cond) = force else { return Some(m) };
    let cols = cond.columns(n);
    let fixed: Vec<usize> = cols.iter().filter_map(|&c| layout.row_of_column(c)).collect();
    if fixed.len() > cond.bound {
        return None;
    }
    let mut basis: Vec<Vec<Rational>> =
        fixed.iter().map(|&r| (1..=k).map(|x| Rational::from_integer(((x == r) as i64).into())).collect()).collect();
    while basis.len() < cond.bound {
        basis.push((0..k).map(|_| random_nonzero_rational(rng)).collect());
    }
    let as_cols: Matrix = (0..k).map(|x| basis.iter().map(|b| b[x].clone()).collect()).collect();
    if !basis.is_empty() && rank(&as_cols) < basis.len() {
        return None;
    }
    for &c in cols.iter().filter(|&&c| layout.row_of_column(c).is_none()) {
        let weights: Vec<Rational> = basis.iter().map(|_| random_nonzero_rational(rng)).collect();
        for (x, row) in m.iter_mut().enumerate() {
            row[c - 1] = basis.iter().zip(&weights).fold(Rational::zero(), |acc, (b, w)| acc + &b[x] * w);
        }
    }
    Some(m)
}

/// Checks, on `samples` random points of the patch, that `M` satisfies the
/// cyclic rank bounds of `f` exactly when its flag lies in `Fl_Λ(f)`. Half the
/// samples are forced onto an essential condition so both outcomes occur.
pub fn rank_correspondence<R: Rng>(
    layout: &StripLayout,
    f: &JugglingFunction,
    samples: usize,
    rng: &mut R,
) -> Result<CorrespondenceReport> {
    let data = positroid_data(f);
    let states = pattern_flag(f)?;
    let n = layout.n;
    let mut report = CorrespondenceReport {
        lambda: layout.lambda.clone(),
        f: f.to_string(),
        samples,
        on_variety: 0,
        agreements: 0,
        retries: 0,
        first_disagreement: None,
    };
    for s in 0..samples {
        let force = (s % 2 == 0 && !data.essential.is_empty()).then(|| &data.essential[(s / 2) % data.essential.len()]);
        let m = loop {
            // an infeasible forcing stays infeasible; fall back to a generic point
            let feasible = force
                .is_none_or(|c| c.columns(n).iter().filter(|&&x| layout.row_of_column(x).is_some()).count() <= c.bound);
            match sample_patch(layout, force.filter(|_| feasible), rng) {
                Some(m) => break m,
                None => {
                    report.retries += 1;
                    if report.retries >= RETRY_LIMIT {
                        return Err(Error::RetriesExhausted(report.retries));
                    }
                }
            }
        };
        let matrix_side = data.conditions.iter().all(|c| {
            let cols: Vec<usize> = c.columns(n).iter().map(|x| x - 1).collect();
            rank_of_columns(&m, &cols) <= c.bound
        });
        let flag = flag_from_rows(&m, &layout.lambda)?;
        let flag_side = schubert_membership(&flag, &states)? != Membership::Outside;
        report.on_variety += usize::from(matrix_side);
        if matrix_side == flag_side {
            report.agreements += 1;
        } else if report.first_disagreement.is_none() {
            report.first_disagreement = Some(format!("sample {s}: matrix side {matrix_side}, flag side {flag_side}"));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::strip_ring;
    use crate::juggling::{enumerate_bounded, positroid_of_matrix};
    use crate::strip::strip_layout;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn all_lambdas(k: usize, n: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (1..=n).filter(|&c| m >> (c - 1) & 1 == 1).collect())
            .collect()
    }

    #[test]
    fn example_lattices() {
        let lay = strip_layout(&[1, 2, 4], 3, 7).unwrap();
        let ring = strip_ring(&lay).unwrap();
        let show = |i| lattice_from_matrix(&lay, &ring, i).unwrap().format_with(|c| ring.format(c));
        assert_eq!(show(1), "tail + <t, t^2, a33*t^3 + t^4>");
        assert_eq!(show(2), "tail + <t, a33*t^2 + t^3, a13*t^2 + a15*t^4 + a16*t^5 + a17*t^6 + t^7>");
        assert_eq!(show(3), "tail + <a33*t + t^2, a13*t + a15*t^3 + a16*t^4 + a17*t^5 + t^6, a23*t + a25*t^3 + a26*t^4 + a27*t^5 + t^7>");
    }

    #[test]
    fn constructed_flags_validate() {
        for n in 2..=7 {
            for k in 1..n {
                for lam in all_lambdas(k, n) {
                    let lay = strip_layout(&lam, k, n).unwrap();
                    let ring = strip_ring(&lay).unwrap();
                    let flag = symbolic_flag(&lay, &ring).unwrap();
                    assert_eq!(flag.validate(), Ok(()), "{lam:?} n={n}");
                    // one more rotation returns to L_1
                    let again = lattice_from_rows(&patch_matrix(&lay, &ring), &lam, n + 1).unwrap();
                    assert_eq!(again, flag.lattices[0]);
                }
            }
        }
    }

    #[test]
    fn t_lambda_of_13() {
        let t = t_lambda(&[1, 3], 4);
        assert_eq!(t.validate(), Ok(()));
        assert_eq!(t.lattices[0].to_string(), "tail + <t, t^3>");
        assert_eq!(t.lattices[1].to_string(), "tail + <t^2, t^4>");
        assert_eq!(schubert_dims(&t.lattices[0], 2).unwrap().1, 1);
        // zero specialization of the patch gives the same flag
        let lay = strip_layout(&[1, 3], 2, 4).unwrap();
        let ring = strip_ring(&lay).unwrap();
        let zero = symbolic_flag(&lay, &ring).unwrap().specialize(&vec![Rational::zero(); ring.nvars()]).unwrap();
        assert_eq!(zero, t);
    }

    #[test]
    fn shifted_lattice_breaks_the_flag() {
        let mut t = t_lambda(&[1, 2, 4], 7);
        t.lattices[1] = t.lattices[1].shift(1, Rational::one()).unwrap();
        let v = t.validate().unwrap_err();
        assert_eq!(v.i, 2);
        assert_eq!(v.generator, None);
        let mut t = t_lambda(&[1, 2, 4], 7);
        t.lattices[2] = t.lattices[3].clone();
        assert!(t.validate().is_err());
    }

    #[test]
    fn symbolic_dims_are_refused() {
        let lay = strip_layout(&[1, 2, 4], 3, 7).unwrap();
        let ring = strip_ring(&lay).unwrap();
        let l = lattice_from_matrix(&lay, &ring, 1).unwrap();
        assert_eq!(schubert_dims(&l, 2), Err(Error::Symbolic));
    }

    #[test]
    fn t_lambda_is_in_its_own_open_cells() {
        for lam in all_lambdas(2, 5) {
            let t = t_lambda(&lam, 5);
            assert_eq!(schubert_membership(&t, &t).unwrap(), Membership::Open);
            assert_eq!(opposite_membership(&t, &t).unwrap(), Membership::Open);
        }
    }

    #[test]
    fn single_condition_is_the_last_ball() {
        let f: JugglingFunction = "2333334".parse().unwrap();
        let states = pattern_flag(&f).unwrap();
        let generic = pattern_flag(&JugglingFunction::constant(7, 3)).unwrap();
        let mut extra = Vec::new();
        for i in 0..7 {
            for m in 1..=8 {
                let a = schubert_dims(&states.lattices[i], m).unwrap().1;
                let b = schubert_dims(&generic.lattices[i], m).unwrap().1;
                if a > b {
                    extra.push((i + 1, m, a));
                }
            }
        }
        assert_eq!(extra, vec![(1, 4, 1)]);
    }

    #[test]
    fn correspondence_for_the_example() {
        let lay = strip_layout(&[1, 2, 4], 3, 7).unwrap();
        let f: JugglingFunction = "2333334".parse().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let r = rank_correspondence(&lay, &f, 20, &mut rng).unwrap();
        assert!(r.holds(), "{r:?}");
        assert!(r.on_variety > 0 && r.on_variety < 20);
    }

    #[test]
    fn correspondence_for_gr24() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for f in enumerate_bounded(4, 2) {
            for lam in all_lambdas(2, 4) {
                let lay = strip_layout(&lam, 2, 4).unwrap();
                let r = rank_correspondence(&lay, &f, 20, &mut rng).unwrap();
                assert!(r.holds(), "{r:?}");
            }
        }
    }

    #[test]
    fn forced_points_recover_basic_patterns() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for f in enumerate_bounded(4, 2) {
            let data = positroid_data(&f);
            if data.essential.len() != 1 {
                continue;
            }
            for lam in all_lambdas(2, 4) {
                let lay = strip_layout(&lam, 2, 4).unwrap();
                let points: Vec<Matrix> =
                    (0..20).filter_map(|_| sample_patch(&lay, Some(&data.essential[0]), &mut rng)).collect();
                let hits = points.iter().filter(|m| positroid_of_matrix(m).unwrap() == f).count();
                assert!(hits * 4 >= points.len() * 3, "{f} {lam:?}: {hits}/{}", points.len());
            }
        }
    }
}
