//! Finite simplicial complexes on at most 64 vertices, subword complexes and
//! Stanley–Reisner ideals.
//!
//! Faces are `u64` bitmasks over vertex indices; labels are carried only for
//! display.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::coxeter::{bruhat_leq, demazure, Element, Flavor, Side, Word};
use crate::error::{Error, Result};

pub type Face = u64;

fn bits(f: Face) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| f >> i & 1 == 1)
}

fn size(f: Face) -> usize {
    f.count_ones() as usize
}

fn is_sub(a: Face, b: Face) -> bool {
    a & !b == 0
}

/// Inclusion-minimal members of a family, sorted by size then value.
fn minimalize(mut family: Vec<Face>) -> Vec<Face> {
    family.sort_by_key(|&f| (size(f), f));
    family.dedup();
    let mut out: Vec<Face> = Vec::new();
    for f in family {
        if !out.iter().any(|&g| is_sub(g, f)) {
            out.push(f);
        }
    }
    out
}

fn maximalize(family: Vec<Face>) -> Vec<Face> {
    let mut family = family;
    family.sort_by_key(|&f| (std::cmp::Reverse(size(f)), f));
    family.dedup();
    let mut out: Vec<Face> = Vec::new();
    for f in family {
        if !out.iter().any(|&g| is_sub(f, g)) {
            out.push(f);
        }
    }
    out.sort();
    out
}

/// Minimal transversals (the blocker) of a set family, by Berge's
/// incremental algorithm. The empty family has the single transversal `∅`.
pub fn minimal_transversals<T: Ord + Clone>(family: &[BTreeSet<T>]) -> Vec<BTreeSet<T>> {
    let mut current: Vec<BTreeSet<T>> = vec![BTreeSet::new()];
    for edge in family {
        let mut next: Vec<BTreeSet<T>> = Vec::new();
        for t in &current {
            if t.iter().any(|x| edge.contains(x)) {
                next.push(t.clone());
            } else {
                for x in edge {
                    let mut u = t.clone();
                    u.insert(x.clone());
                    next.push(u);
                }
            }
        }
        next.sort();
        next.dedup();
        let keep: Vec<BTreeSet<T>> =
            next.iter().filter(|a| !next.iter().any(|b| b != *a && b.is_subset(a))).cloned().collect();
        current = keep;
    }
    current
}

fn transversals_mask(family: &[Face]) -> Vec<Face> {
    let mut current = vec![0u64];
    for &edge in family {
        let mut next = Vec::new();
        for &t in &current {
            if t & edge != 0 {
                next.push(t);
            } else {
                next.extend(bits(edge).map(|x| t | 1 << x));
            }
        }
        current = minimalize(next);
    }
    current
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    pub labels: Vec<String>,
    /// Maximal faces, sorted.
    pub facets: Vec<Face>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Topology {
    Ball,
    Sphere,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopologyReport {
    pub pure: bool,
    pub thin: bool,
    pub vertex_decomposable: bool,
    /// Facet indices in shelling order, when one was found and verified.
    pub shelling_order: Option<Vec<usize>>,
    pub ball_or_sphere: Topology,
    pub cone_vertices: Vec<usize>,
}

#[derive(Serialize)]
struct ComplexJson<'a> {
    vertices: &'a [String],
    facets: Vec<Vec<&'a str>>,
}

impl SimplicialComplex {
    pub fn new(labels: Vec<String>, facets: impl IntoIterator<Item = Face>) -> Self {
        assert!(labels.len() <= 64, "at most 64 vertices");
        SimplicialComplex { labels, facets: maximalize(facets.into_iter().collect()) }
    }

    pub fn numbered(n: usize, facets: impl IntoIterator<Item = Face>) -> Self {
        Self::new((1..=n).map(|i| i.to_string()).collect(), facets)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.labels.len());
        self.labels = labels;
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_face(&self, f: Face) -> bool {
        self.facets.iter().any(|&g| is_sub(f, g))
    }

    /// Dimension, or `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|&f| size(f) as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| size(w[0]) == size(w[1]))
    }

    /// All faces; exponential, for small complexes.
    pub fn faces(&self) -> BTreeSet<Face> {
        let mut out = BTreeSet::new();
        for &f in &self.facets {
            let mut sub = f;
            loop {
                out.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        out
    }

    /// Codimension-one faces of facets, with the number of facets containing each.
    pub fn ridges(&self) -> HashMap<Face, usize> {
        let mut out = HashMap::new();
        for &f in &self.facets {
            for v in bits(f) {
                *out.entry(f & !(1 << v)).or_insert(0) += 1;
            }
        }
        out
    }

    pub fn is_thin(&self) -> bool {
        self.ridges().values().all(|&c| c <= 2)
    }

    pub fn cone_vertices(&self) -> Vec<usize> {
        if self.facets.is_empty() {
            return Vec::new();
        }
        let common = self.facets.iter().fold(!0u64, |acc, &f| acc & f);
        bits(common).collect()
    }

    pub fn deletion(&self, v: usize) -> SimplicialComplex {
        let facets: Vec<Face> = self.facets.iter().map(|&f| f & !(1 << v)).collect();
        SimplicialComplex::new(self.labels.clone(), facets)
    }

    pub fn link(&self, v: usize) -> SimplicialComplex {
        let facets: Vec<Face> = self.facets.iter().filter(|&&f| f >> v & 1 == 1).map(|&f| f & !(1 << v)).collect();
        SimplicialComplex::new(self.labels.clone(), facets)
    }

    /// A shelling order derived from a vertex decomposition, if one exists.
    fn decomposition_shelling(&self, memo: &mut HashMap<Vec<Face>, Option<Vec<Face>>>) -> Option<Vec<Face>> {
        if let Some(r) = memo.get(&self.facets) {
            return r.clone();
        }
        let result = if !self.is_pure() || self.facets.is_empty() {
            None
        } else if self.facets.len() == 1 {
            Some(self.facets.clone())
        } else {
            let d = size(self.facets[0]);
            let support = self.facets.iter().fold(0u64, |a, &f| a | f);
            let mut found = None;
            for v in bits(support) {
                let del = self.deletion(v);
                // shedding vertex: the deletion keeps the full dimension and purity
                if !del.is_pure() || size(del.facets[0]) != d {
                    continue;
                }
                let Some(sd) = del.decomposition_shelling(memo) else { continue };
                let Some(sl) = self.link(v).decomposition_shelling(memo) else { continue };
                let mut order = sd;
                order.extend(sl.into_iter().map(|f| f | 1 << v));
                found = Some(order);
                break;
            }
            found
        };
        memo.insert(self.facets.clone(), result.clone());
        result
    }

    pub fn is_vertex_decomposable(&self) -> Result<bool> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        Ok(self.decomposition_shelling(&mut HashMap::new()).is_some())
    }

    /// Checks that each facet meets the union of the earlier ones in a pure
    /// codimension-one subcomplex.
    pub fn verify_shelling(&self, order: &[Face]) -> bool {
        let given: BTreeSet<Face> = order.iter().copied().collect();
        if given.len() != order.len() || given != self.facets.iter().copied().collect() {
            return false;
        }
        for j in 1..order.len() {
            let fj = order[j];
            for &fi in &order[..j] {
                let meet = fi & fj;
                let ok = order[..j].iter().any(|&fk| {
                    let m = fk & fj;
                    is_sub(meet, m) && size(m) + 1 == size(fj)
                });
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    pub fn topology_checks(&self) -> Result<TopologyReport> {
        if self.facets.is_empty() {
            return Err(Error::EmptyComplex);
        }
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let thin = self.is_thin();
        let shelling = self.decomposition_shelling(&mut HashMap::new());
        let order = shelling
            .as_ref()
            .filter(|o| self.verify_shelling(o))
            .map(|o| o.iter().map(|f| self.facets.iter().position(|g| g == f).expect("facet")).collect::<Vec<_>>());
        let ball_or_sphere = if !thin || order.is_none() {
            Topology::Neither
        } else if self.ridges().values().all(|&c| c == 2) {
            Topology::Sphere
        } else {
            Topology::Ball
        };
        Ok(TopologyReport {
            pure: true,
            thin,
            vertex_decomposable: shelling.is_some(),
            shelling_order: order,
            ball_or_sphere,
            cone_vertices: self.cone_vertices(),
        })
    }

    pub fn face_labels(&self, f: Face) -> Vec<&str> {
        bits(f).map(|i| self.labels[i].as_str()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j =
            ComplexJson { vertices: &self.labels, facets: self.facets.iter().map(|&f| self.face_labels(f)).collect() };
        serde_json::to_value(j).expect("serializable")
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.facets.iter().map(|&g| format!("{{{}}}", self.face_labels(g).join(","))).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// An ideal generated by squarefree monomials, stored as vertex sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeMonomialIdeal {
    pub labels: Vec<String>,
    pub generators: Vec<Face>,
}

impl SquarefreeMonomialIdeal {
    pub fn new(labels: Vec<String>, generators: impl IntoIterator<Item = Face>) -> Self {
        SquarefreeMonomialIdeal { labels, generators: minimalize(generators.into_iter().collect()) }
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, monomial: Face) -> bool {
        self.generators.iter().any(|&g| is_sub(g, monomial))
    }

    pub fn generator_labels(&self) -> Vec<Vec<String>> {
        self.generators.iter().map(|&g| bits(g).map(|i| self.labels[i].clone()).collect()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.generator_labels()).expect("serializable")
    }
}

impl fmt::Display for SquarefreeMonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generator_labels().into_iter().map(|g| g.join("*")).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

/// Generated by the minimal nonfaces, which are the minimal transversals of
/// the facet complements.
pub fn stanley_reisner(c: &SimplicialComplex) -> SquarefreeMonomialIdeal {
    let all = if c.labels.len() == 64 { !0u64 } else { (1u64 << c.labels.len()) - 1 };
    let complements: Vec<Face> = c.facets.iter().map(|&f| all & !f).collect();
    let gens = if c.facets.is_empty() { vec![0] } else { transversals_mask(&complements) };
    SquarefreeMonomialIdeal::new(c.labels.clone(), gens)
}

/// Minimal primes of a squarefree monomial ideal, as variable sets.
pub fn decompose(i: &SquarefreeMonomialIdeal) -> Vec<Face> {
    transversals_mask(&i.generators)
}

/// Intersection of the monomial primes generated by the given variable sets.
pub fn intersect(labels: Vec<String>, components: &[Face]) -> SquarefreeMonomialIdeal {
    SquarefreeMonomialIdeal::new(labels, transversals_mask(components))
}

/// The complex whose facets are complements of reduced subwords of `q`
/// evaluating to `w` (left convention).
pub fn subword_complex(q: &Word, w: &Element) -> SimplicialComplex {
    assert!(q.len() <= 64, "words of length at most 64");
    let m = q.len();
    let target_len = w.length();
    let mut facets = Vec::new();
    let mut chosen = 0u64;
    let start = Element::identity(q.n, q.flavor);
    reduced_subwords(q, w, target_len, 0, &start, 0, &mut chosen, &mut facets);
    let all = if m == 64 { !0u64 } else { (1u64 << m) - 1 };
    SimplicialComplex::numbered(m, facets.into_iter().map(|p| all & !p))
}

#[allow(clippy::too_many_arguments)]
fn reduced_subwords(
    q: &Word,
    w: &Element,
    target_len: usize,
    pos: usize,
    cur: &Element,
    depth: usize,
    chosen: &mut u64,
    out: &mut Vec<Face>,
) {
    if depth == target_len {
        if cur == w {
            out.push(*chosen);
        }
        return;
    }
    if q.len() - pos < target_len - depth {
        return;
    }
    let next = cur.mul_simple(q.letters[pos], Side::Left);
    if next.length() == depth + 1 {
        *chosen |= 1 << pos;
        reduced_subwords(q, w, target_len, pos + 1, &next, depth + 1, chosen, out);
        *chosen &= !(1 << pos);
    }
    reduced_subwords(q, w, target_len, pos + 1, cur, depth, chosen, out);
}

/// Face test: the complement of `face` contains a reduced word for `w`
/// exactly when its Demazure product lies above `w`.
pub fn subword_face_test(q: &Word, w: &Element, face: Face) -> bool {
    let rest = q.subword((0..q.len()).filter(|&i| face >> i & 1 == 0));
    bruhat_leq(w, &demazure(&rest, Side::Left)).unwrap_or(false)
}

/// Relabels positions of `q` after commuting the adjacent letters at `i`, `i+1`.
pub fn commute_at(q: &Word, i: usize) -> Result<Word> {
    let (a, b) = (q.letters[i], q.letters[i + 1]);
    if a == b || q.adjacent(a, b) {
        return Err(Error::IllegalMove(format!("letters {a} and {b} do not commute")));
    }
    let mut letters = q.letters.clone();
    letters.swap(i, i + 1);
    Word::new(letters, q.n, q.flavor)
}

pub fn swap_vertices(f: Face, i: usize, j: usize) -> Face {
    let (a, b) = (f >> i & 1, f >> j & 1);
    let f = f & !(1 << i) & !(1 << j);
    f | b << i | a << j
}

pub fn flavor_of(e: &Element) -> Flavor {
    match e {
        Element::Finite(_) => Flavor::Finite,
        Element::Affine(_) => Flavor::Affine,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{word_eval, Permutation};

    fn mask(v: &[usize]) -> Face {
        v.iter().fold(0, |a, &i| a | 1 << i)
    }

    fn fin(s: &str) -> Element {
        Element::Finite(s.parse().unwrap())
    }

    /// Subsequence oracle: enumerate every subset and evaluate.
    fn brute_faces(q: &Word, w: &Element) -> BTreeSet<Face> {
        let m = q.len();
        let mut out = BTreeSet::new();
        for face in 0u64..(1 << m) {
            let rest: Vec<usize> = (0..m).filter(|&i| face >> i & 1 == 0).collect();
            let contains = (0u64..(1 << rest.len())).any(|sub| {
                let pos: Vec<usize> = (0..rest.len()).filter(|&j| sub >> j & 1 == 1).map(|j| rest[j]).collect();
                let (e, red) = word_eval(&q.subword(pos), Side::Left);
                red && &e == w
            });
            if contains {
                out.insert(face);
            }
        }
        out
    }

    #[test]
    fn s0_from_repeated_letter() {
        let q = Word::finite(&[1, 1], 2).unwrap();
        let c = subword_complex(&q, &fin("21"));
        assert_eq!(c.facets, vec![mask(&[0]), mask(&[1])]);
        assert_eq!(c.topology_checks().unwrap().ball_or_sphere, Topology::Sphere);
    }

    #[test]
    fn reduced_word_gives_empty_facet() {
        let q = Word::finite(&[3, 1, 4, 2, 3], 5).unwrap();
        let c = subword_complex(&q, &fin("41523"));
        assert_eq!(c.facets, vec![0]);
        let q = Word::finite(&[1, 2], 3).unwrap();
        assert!(subword_complex(&q, &fin("321")).is_empty());
    }

    #[test]
    fn faces_match_subsequence_oracle() {
        let q = Word::finite(&[1, 2, 1, 2, 1], 3).unwrap();
        for w in Permutation::all(3) {
            let w = Element::Finite(w);
            let c = subword_complex(&q, &w);
            let brute = brute_faces(&q, &w);
            assert_eq!(c.faces(), brute);
            for f in 0u64..32 {
                assert_eq!(subword_face_test(&q, &w, f), brute.contains(&f));
            }
        }
    }

    #[test]
    fn cone_is_ball() {
        let c = SimplicialComplex::numbered(3, [mask(&[0, 1]), mask(&[0, 2])]);
        assert_eq!(c.cone_vertices(), vec![0]);
        let r = c.topology_checks().unwrap();
        assert_eq!(r.ball_or_sphere, Topology::Ball);
        assert!(r.vertex_decomposable && r.thin);
    }

    #[test]
    fn impure_is_rejected() {
        let c = SimplicialComplex::numbered(3, [mask(&[0, 1]), mask(&[2])]);
        assert!(matches!(c.topology_checks(), Err(Error::NotPure)));
        assert!(c.is_vertex_decomposable().is_err());
        let void = SimplicialComplex::numbered(2, []);
        assert!(matches!(void.topology_checks(), Err(Error::EmptyComplex)));
    }

    #[test]
    fn not_decomposable() {
        // two disjoint edges: pure, thin, disconnected
        let c = SimplicialComplex::numbered(4, [mask(&[0, 1]), mask(&[2, 3])]);
        assert!(!c.is_vertex_decomposable().unwrap());
        assert_eq!(c.topology_checks().unwrap().ball_or_sphere, Topology::Neither);
        // boundary of a triangle is a sphere
        let t = SimplicialComplex::numbered(3, [mask(&[0, 1]), mask(&[1, 2]), mask(&[0, 2])]);
        assert_eq!(t.topology_checks().unwrap().ball_or_sphere, Topology::Sphere);
        assert!(!t.verify_shelling(&[mask(&[0, 1])]));
    }

    #[test]
    fn stanley_reisner_basics() {
        let full = SimplicialComplex::numbered(3, [mask(&[0, 1, 2])]);
        assert!(stanley_reisner(&full).is_zero());
        let two = SimplicialComplex::new(vec!["a".into(), "b".into()], [mask(&[0]), mask(&[1])]);
        let i = stanley_reisner(&two);
        assert_eq!(i.generators, vec![mask(&[0, 1])]);
        assert_eq!(i.to_string(), "<a*b>");
    }

    #[test]
    fn sr_generators_are_minimal_nonfaces() {
        let q = Word::finite(&[2, 1, 2, 1, 2], 3).unwrap();
        for w in Permutation::all(3) {
            let c = subword_complex(&q, &Element::Finite(w));
            if c.is_empty() {
                continue;
            }
            let faces = c.faces();
            let nonfaces: Vec<Face> = (0u64..32).filter(|f| !faces.contains(f)).collect();
            let minimal: Vec<Face> = minimalize(nonfaces);
            assert_eq!(stanley_reisner(&c).generators, minimal);
            let i = stanley_reisner(&c);
            let comps = decompose(&i);
            let all = 31u64;
            let expect: BTreeSet<Face> = c.facets.iter().map(|f| all & !f).collect();
            assert_eq!(comps.iter().copied().collect::<BTreeSet<_>>(), expect);
            assert_eq!(intersect(i.labels.clone(), &comps), i);
        }
    }

    #[test]
    fn transversal_examples() {
        let fam: Vec<BTreeSet<u8>> = vec![BTreeSet::from([1, 2]), BTreeSet::from([2, 3])];
        let t = minimal_transversals(&fam);
        assert_eq!(t, vec![BTreeSet::from([1, 3]), BTreeSet::from([2])]);
        let with_empty: Vec<BTreeSet<u8>> = vec![BTreeSet::new()];
        assert!(minimal_transversals(&with_empty).is_empty());
    }

    #[test]
    fn commutation_invariance() {
        let q = Word::finite(&[1, 3, 2, 1, 3, 2], 4).unwrap();
        let q2 = commute_at(&q, 0).unwrap();
        assert!(commute_at(&q, 1).is_err());
        for w in Permutation::all(4) {
            let w = Element::Finite(w);
            let a = subword_complex(&q, &w);
            let b = subword_complex(&q2, &w);
            let mapped: BTreeSet<Face> = a.facets.iter().map(|&f| swap_vertices(f, 0, 1)).collect();
            assert_eq!(mapped, b.facets.iter().copied().collect());
        }
        assert_eq!(flavor_of(&fin("21")), Flavor::Finite);
    }
}
