//! `positroid`: enumerations, constructions and verification suites on the
//! command line. Every run prints a report (ASCII or JSON) to stdout and the
//! wall time to stderr, so stdout is reproducible for a fixed `--seed`.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use positroid_core::afflag::{rank_correspondence, symbolic_flag};
use positroid_core::algebra::{
    bott_samelson, buchberger, northwest_minors, patch_ideal, strip_ring, OrderKind, DEFAULT_PAIR_LIMIT,
};
use positroid_core::complex::{stanley_reisner, subword_complex, SimplicialComplex};
use positroid_core::coxeter::{parse_int_list, AffinePermutation, Element, Permutation, Word};
use positroid_core::diagrams::{
    all_cauchon, cauchon_le, cauchon_permutation, cauchon_to_bottom_apd, le_cauchon, restricted_permutations, u_of_le,
    w_lambda, CauchonDiagram, LeDiagram,
};
use positroid_core::juggling::{
    enumerate_bounded, juggling_poset, positroid_data, state_graph, validate_siteswap, JugglingFunction,
};
use positroid_core::pipedream::{
    antidiagonal_set, chute_closure, d_bot, d_top, enumerate_brute, ladder_closure, transversal_dual,
};
use positroid_core::strip::{apd_bottom, apd_enumerate, apd_top, pi_lambda, strip_layout, StripLayout};
use positroid_core::verify::{verify_instance, InstanceReport};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

const WORKERS_ENV: &str = "POSITROID_WORKERS";

#[derive(Parser)]
#[command(
    name = "positroid",
    version,
    about = "Positroid combinatorics: juggling, pipe dreams, subword complexes, affine flags"
)]
struct Cli {
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Ascii)]
    format: Format,
    /// Seed for every randomized specialization.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Juggling patterns.
    #[command(subcommand)]
    Jp(JpCmd),
    /// Classical pipe dreams.
    #[command(subcommand)]
    Pd(PdCmd),
    /// The strip layout and affine pipe dreams.
    #[command(subcommand)]
    Strip(StripCmd),
    /// Subword complexes.
    #[command(subcommand)]
    Complex(ComplexCmd),
    /// Polynomial computations.
    #[command(subcommand)]
    Alg(AlgCmd),
    /// Affine flags from Schubert patches.
    #[command(subcommand)]
    Flag(FlagCmd),
    /// Verification suites.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Le and Cauchon diagrams.
    #[command(subcommand)]
    Diagrams(DiagramsCmd),
}

#[derive(Subcommand)]
enum JpCmd {
    /// Check a siteswap and report its ball count.
    Validate { pattern: String },
    /// All bounded patterns for `n` throws and `k` balls.
    Enumerate(Grass),
    /// The bounded patterns graded by length, with covering relations.
    Poset(Grass),
    /// Rank conditions of the positroid variety of a bounded pattern.
    Positroid { pattern: String },
}

#[derive(Args, Clone)]
struct Grass {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Args, Clone)]
struct Patch {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Identity columns, e.g. `1,2,4`.
    #[arg(long)]
    lambda: String,
}

impl Patch {
    fn layout(&self) -> Result<StripLayout> {
        Ok(strip_layout(&parse_lambda(&self.lambda)?, self.k, self.n)?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PdMethod {
    Ladder,
    Chute,
    Brute,
}

#[derive(Subcommand)]
enum PdCmd {
    /// Reduced pipe dreams of a permutation.
    Enum {
        perm: String,
        #[arg(long, value_enum, default_value_t = PdMethod::Ladder)]
        method: PdMethod,
    },
    /// Antidiagonals and the transversal dual of the pipe dreams.
    Dual { perm: String },
}

#[derive(Subcommand)]
enum StripCmd {
    /// The word `Q_λ` read off the strip, grouped by row.
    Qword(Patch),
    /// Affine pipe dreams tracing a pattern.
    Apd {
        #[command(flatten)]
        patch: Patch,
        #[arg(long)]
        f: String,
    },
}

#[derive(Args, Clone)]
struct SubwordArgs {
    /// Word letters, e.g. `4321432434` or `4,3,2,1`.
    #[arg(long)]
    word: String,
    /// Target element: a permutation, or an affine window with `--affine`.
    #[arg(long)]
    target: String,
    /// Read the word in the affine group with period equal to the target's length.
    #[arg(long)]
    affine: bool,
    /// Use `n` for the finite group instead of the target length.
    #[arg(long)]
    n: Option<usize>,
}

impl SubwordArgs {
    fn complex(&self) -> Result<SimplicialComplex> {
        let letters: Vec<usize> = parse_int_list(&self.word)?.into_iter().map(|l| l as usize).collect();
        let target = parse_int_list(&self.target)?;
        let (q, w) = if self.affine {
            let a = AffinePermutation::new(target)?;
            (Word::affine(&letters, a.n())?, Element::Affine(a))
        } else {
            let p = Permutation::new(target.into_iter().map(|v| v as usize).collect())?;
            let n = self.n.unwrap_or(p.n());
            if n != p.n() {
                bail!("target has {} entries but n = {n}", p.n());
            }
            (Word::finite(&letters, n)?, Element::Finite(p))
        };
        if q.len() > 64 {
            bail!("words longer than 64 letters are not supported");
        }
        Ok(subword_complex(&q, &w))
    }
}

#[derive(Subcommand)]
enum ComplexCmd {
    /// Facets of the subword complex.
    Subword(SubwordArgs),
    /// Purity, thinness, vertex decomposition and ball/sphere verdict.
    Check(SubwordArgs),
    /// The Stanley–Reisner ideal.
    Sr(SubwordArgs),
}

#[derive(Subcommand)]
enum AlgCmd {
    /// Initial ideal of a patch ideal under the strip order.
    Init {
        #[command(flatten)]
        patch: Patch,
        #[arg(long)]
        f: String,
    },
    /// Reduced Gröbner basis of a patch ideal under the strip order.
    Groebner {
        #[command(flatten)]
        patch: Patch,
        #[arg(long)]
        f: String,
    },
    /// Bott–Samelson matrix of a word and its northwest minors.
    Bottsamelson {
        #[arg(long)]
        word: String,
        /// Matrix size; defaults to one more than the largest letter.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "grlex")]
        order: String,
    },
}

#[derive(Subcommand)]
enum FlagCmd {
    /// The lattices `L_1..L_n` of the patch.
    Build {
        #[command(flatten)]
        patch: Patch,
        /// Print only `L_i`.
        #[arg(long)]
        i: Option<usize>,
    },
    /// Validate the flag and, given `--f`, check the rank correspondence.
    Check {
        #[command(flatten)]
        patch: Patch,
        #[arg(long)]
        f: Option<String>,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Initial ideal versus Stanley–Reisner ideal for every (λ, f) instance.
    MainTheorem {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        f: Option<String>,
    },
}

#[derive(Subcommand)]
enum DiagramsCmd {
    /// Convert a Cauchon grid (`#.#/##./...`) or a Le filling (`010/0`).
    Convert {
        #[arg(long, conflicts_with = "le")]
        cauchon: Option<String>,
        #[arg(long, requires_all = ["k", "n"])]
        le: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Count Cauchon diagrams, restricted permutations and bottom pipe dreams.
    Count {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        p: usize,
    },
}

#[derive(Serialize)]
struct Check {
    name: String,
    pass: bool,
}

/// What a subcommand produced.
struct Outcome {
    params: Value,
    results: Value,
    text: String,
    checks: Vec<Check>,
}

impl Outcome {
    fn new(params: Value, results: Value, text: String) -> Self {
        Outcome { params, results, text, checks: Vec::new() }
    }

    fn check(mut self, name: &str, pass: bool) -> Self {
        self.checks.push(Check { name: name.into(), pass });
        self
    }
}

#[derive(Serialize)]
struct RunReport<'a> {
    command: &'a [String],
    params: &'a Value,
    results: &'a Value,
    checks: &'a [Check],
    passed: bool,
}

fn parse_lambda(s: &str) -> Result<Vec<usize>> {
    let v = parse_int_list(s)?;
    if v.iter().any(|&x| x <= 0) {
        bail!("λ entries must be positive: {s}");
    }
    Ok(v.into_iter().map(|x| x as usize).collect())
}

fn parse_pattern(s: &str) -> Result<JugglingFunction> {
    s.parse::<JugglingFunction>().with_context(|| format!("pattern {s}"))
}

fn lambdas(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (1..=n).filter(|&c| m >> (c - 1) & 1 == 1).collect())
        .collect()
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|t| t.to_string()).collect::<Vec<_>>().join(sep)
}

fn run_jp(cmd: &JpCmd) -> Result<Outcome> {
    Ok(match cmd {
        JpCmd::Validate { pattern } => {
            let throws = parse_int_list(pattern)?;
            match validate_siteswap(&throws) {
                Ok(k) => {
                    let f = JugglingFunction::new(throws)?;
                    let bounded = f.is_bounded();
                    let text = format!("k={k}, valid\nbounded: {}", if bounded { "yes" } else { "no" });
                    Outcome::new(
                        json!({ "pattern": pattern }),
                        json!({ "k": k, "valid": true, "bounded": bounded }),
                        text,
                    )
                    .check("valid", true)
                }
                Err(e) => Outcome::new(
                    json!({ "pattern": pattern }),
                    json!({ "valid": false, "error": e.to_string() }),
                    format!("invalid: {e}"),
                )
                .check("valid", false),
            }
        }
        JpCmd::Enumerate(g) => {
            let all = enumerate_bounded(g.n, g.k);
            let walks = state_graph(g.n, g.k, g.n).closed_walks(g.n);
            let names: Vec<String> = all.iter().map(|f| f.to_string()).collect();
            let text = format!("{}\ncount: {}", names.join("\n"), names.len());
            Outcome::new(
                json!({ "n": g.n, "k": g.k }),
                json!({ "patterns": names, "count": all.len(), "state_graph_closed_walks": walks.to_string() }),
                text,
            )
        }
        JpCmd::Poset(g) => {
            let p = juggling_poset(g.n, g.k);
            let names: Vec<String> = p.elements.iter().map(|f| f.to_string()).collect();
            let covers: Vec<(String, String)> =
                p.covers.iter().map(|&(a, b)| (names[a].clone(), names[b].clone())).collect();
            let mut text: Vec<String> = names.iter().zip(&p.lengths).map(|(f, l)| format!("{f} length {l}")).collect();
            text.extend(covers.iter().map(|(a, b)| format!("{a} < {b}")));
            Outcome::new(
                json!({ "n": g.n, "k": g.k }),
                json!({ "elements": names, "lengths": p.lengths, "covers": covers }),
                text.join("\n"),
            )
        }
        JpCmd::Positroid { pattern } => {
            let f = parse_pattern(pattern)?;
            if !f.is_bounded() {
                bail!("{f} is not bounded");
            }
            let d = positroid_data(&f);
            let show = |cs: &[positroid_core::juggling::RankCondition]| join(cs.iter().map(|c| c.display(d.n)), "\n  ");
            let mut text =
                vec![format!("f = {f}, n = {}, k = {}", d.n, d.k), format!("essential:\n  {}", show(&d.essential))];
            for (c, by) in &d.implied {
                text.push(format!("implied: {} by {}", c.display(d.n), by.display(d.n)));
            }
            Outcome::new(json!({ "pattern": pattern }), serde_json::to_value(&d)?, text.join("\n"))
        }
    })
}

fn run_pd(cmd: &PdCmd) -> Result<Outcome> {
    Ok(match cmd {
        PdCmd::Enum { perm, method } => {
            let w: Permutation = perm.parse()?;
            let dreams = match method {
                PdMethod::Ladder => ladder_closure(&w),
                PdMethod::Chute => chute_closure(&w),
                PdMethod::Brute => enumerate_brute(&w),
            };
            let mut text = vec![format!("{} reduced pipe dreams of {w}", dreams.len())];
            text.push(format!("bottom {}", d_bot(&w)));
            text.push(format!("top {}", d_top(&w)));
            for d in &dreams {
                text.push(String::new());
                text.push(d.render().trim_end().to_string());
            }
            let cells: Vec<String> = dreams.iter().map(|d| d.to_string()).collect();
            Outcome::new(
                json!({ "perm": w.to_string() }),
                json!({ "count": dreams.len(), "bottom": d_bot(&w).to_string(), "top": d_top(&w).to_string(), "pipe_dreams": cells }),
                text.join("\n"),
            )
        }
        PdCmd::Dual { perm } => {
            let w: Permutation = perm.parse()?;
            let rp: Vec<BTreeSet<_>> = ladder_closure(&w).into_iter().map(|d| d.crosses).collect();
            let dual: BTreeSet<BTreeSet<_>> = transversal_dual(&rp).into_iter().collect();
            let anti = antidiagonal_set(&w);
            let anti_cells: BTreeSet<BTreeSet<_>> = anti.iter().map(|a| a.cells.clone()).collect();
            let back: BTreeSet<BTreeSet<_>> =
                transversal_dual(&anti_cells.iter().cloned().collect::<Vec<_>>()).into_iter().collect();
            let rp_set: BTreeSet<BTreeSet<_>> = rp.into_iter().collect();
            let names: Vec<String> = anti.iter().map(|a| a.to_string()).collect();
            let text = format!("antidiagonals of {w}: {}\ndual matches: {}", names.join(" "), dual == anti_cells);
            Outcome::new(json!({ "perm": w.to_string() }), json!({ "antidiagonals": names }), text)
                .check("dual(RP) = antidiagonals", dual == anti_cells)
                .check("dual(antidiagonals) = RP", back == rp_set)
        }
    })
}

fn run_strip(cmd: &StripCmd) -> Result<Outcome> {
    Ok(match cmd {
        StripCmd::Qword(p) => {
            let lay = p.layout()?;
            let q = lay.q_display();
            let pi = pi_lambda(&lay);
            let text = format!("{q}\npi_lambda = ({})\n\n{}", join(pi.window(), ","), lay.render_labels().trim_end());
            Outcome::new(
                json!({ "n": p.n, "k": p.k, "lambda": lay.lambda }),
                json!({ "qword": q, "letters": lay.q_word().letters, "pi_lambda": pi.window() }),
                text,
            )
        }
        StripCmd::Apd { patch, f } => {
            let lay = patch.layout()?;
            let f = parse_pattern(f)?;
            let all = apd_enumerate(&lay, &f);
            let bottom = apd_bottom(&lay, &f).map(|d| d.cells_display());
            let top = apd_top(&lay, &f).map(|d| d.cells_display());
            let mut text = vec![format!("{} affine pipe dreams for f = {f}", all.len())];
            if let (Some(b), Some(t)) = (&bottom, &top) {
                text.push(format!("bottom {b}\ntop {t}"));
            }
            for d in &all {
                text.push(String::new());
                text.push(d.cells_display());
                text.push(lay.render(&d.crosses).trim_end().to_string());
            }
            let list: Vec<Value> = all.iter().map(|d| d.to_json(&lay)).collect();
            Outcome::new(
                json!({ "n": patch.n, "k": patch.k, "lambda": lay.lambda, "f": f.to_string() }),
                json!({ "count": all.len(), "bottom": bottom, "top": top, "pipe_dreams": list }),
                text.join("\n"),
            )
        }
    })
}

fn run_complex(cmd: &ComplexCmd) -> Result<Outcome> {
    let (args, kind) = match cmd {
        ComplexCmd::Subword(a) => (a, "subword"),
        ComplexCmd::Check(a) => (a, "check"),
        ComplexCmd::Sr(a) => (a, "sr"),
    };
    let cx = args.complex()?;
    let params = json!({ "word": args.word, "target": args.target, "affine": args.affine });
    Ok(match kind {
        "subword" => {
            let text = format!("{} facets\n{}", cx.facets.len(), cx);
            Outcome::new(params, cx.to_json(), text)
        }
        "check" => {
            if cx.is_empty() {
                return Ok(
                    Outcome::new(params, json!({ "empty": true }), "empty complex".into()).check("nonempty", false)
                );
            }
            let t = cx.topology_checks()?;
            let text = format!(
                "pure: {}\nthin: {}\nvertex-decomposable: {}\nshelling verified: {}\ntopology: {:?}\ncone vertices: {}",
                t.pure,
                t.thin,
                t.vertex_decomposable,
                t.shelling_order.is_some(),
                t.ball_or_sphere,
                join(t.cone_vertices.iter().map(|&v| cx.labels[v].clone()), ",")
            );
            let res = json!({
                "pure": t.pure, "thin": t.thin, "vertex_decomposable": t.vertex_decomposable,
                "shelling_order": t.shelling_order, "topology": format!("{:?}", t.ball_or_sphere),
                "cone_vertices": t.cone_vertices,
            });
            let ok = t.pure && t.thin && t.vertex_decomposable;
            Outcome::new(params, res, text).check("pure, thin and vertex-decomposable", ok)
        }
        _ => {
            let sr = stanley_reisner(&cx);
            Outcome::new(params, sr.to_json(), sr.to_string())
        }
    })
}

fn patch_basis(
    patch: &Patch,
    f: &str,
) -> Result<(StripLayout, positroid_core::algebra::Ring, Vec<positroid_core::algebra::Poly>)> {
    let lay = patch.layout()?;
    let f = parse_pattern(f)?;
    let ring = strip_ring(&lay)?;
    let gens = patch_ideal(&lay, &f, &ring)?;
    let basis = buchberger(&ring, &gens, DEFAULT_PAIR_LIMIT)?;
    Ok((lay, ring, basis))
}

fn run_alg(cmd: &AlgCmd) -> Result<Outcome> {
    Ok(match cmd {
        AlgCmd::Init { patch, f } => {
            let (lay, ring, basis) = patch_basis(patch, f)?;
            let init: Vec<String> =
                basis.iter().map(|p| ring.init_term(p).map(|m| ring.format_mono(&m))).collect::<Result<_, _>>()?;
            let order: Vec<String> = ring.vars.iter().map(|v| v.to_string()).collect();
            let text = format!("order: {}\ninit: {}", order.join(" > "), init.join(", "));
            Outcome::new(
                json!({ "n": patch.n, "k": patch.k, "lambda": lay.lambda, "f": f }),
                json!({ "order": order, "init": init }),
                text,
            )
        }
        AlgCmd::Groebner { patch, f } => {
            let (lay, ring, basis) = patch_basis(patch, f)?;
            let polys: Vec<String> = basis.iter().map(|p| ring.format(p)).collect();
            Outcome::new(
                json!({ "n": patch.n, "k": patch.k, "lambda": lay.lambda, "f": f }),
                json!({ "basis": polys }),
                polys.join("\n"),
            )
        }
        AlgCmd::Bottsamelson { word, n, order } => {
            let letters: Vec<usize> = parse_int_list(word)?.into_iter().map(|l| l as usize).collect();
            let n = n.unwrap_or(letters.iter().max().copied().unwrap_or(0) + 1);
            let kind: OrderKind = order.parse()?;
            let q = Word::finite(&letters, n)?;
            let (ring, m) = bott_samelson(&q, kind);
            let minors = northwest_minors(&m, ring.nvars());
            let mut lines = Vec::new();
            let mut res = Vec::new();
            for (i, p) in minors.iter().enumerate() {
                let init = if p.is_zero() { "0".to_string() } else { ring.format_mono(&ring.init_term(p)?) };
                lines.push(format!("minor {}: {}    init {}", i + 1, ring.format(p), init));
                res.push(json!({ "size": i + 1, "minor": ring.format(p), "init": init }));
            }
            let matrix: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|p| ring.format(p)).collect()).collect();
            Outcome::new(
                json!({ "word": word, "n": n, "order": order }),
                json!({ "matrix": matrix, "minors": res }),
                lines.join("\n"),
            )
        }
    })
}

fn run_flag(cmd: &FlagCmd, seed: u64) -> Result<Outcome> {
    Ok(match cmd {
        FlagCmd::Build { patch, i } => {
            let lay = patch.layout()?;
            let ring = strip_ring(&lay)?;
            let flag = symbolic_flag(&lay, &ring)?;
            let texts = flag.format(&ring);
            let chosen: Vec<(usize, &String)> = match i {
                Some(i) if (1..=lay.n).contains(i) => vec![(*i, &texts[i - 1])],
                Some(i) => bail!("lattice index {i} is outside 1..={}", lay.n),
                None => texts.iter().enumerate().map(|(j, t)| (j + 1, t)).collect(),
            };
            let text = join(chosen.iter().map(|(j, t)| format!("L_{j} = {t}")), "\n");
            Outcome::new(json!({ "n": patch.n, "k": patch.k, "lambda": lay.lambda, "i": i }), flag.to_json(&ring), text)
        }
        FlagCmd::Check { patch, f, samples } => {
            let lay = patch.layout()?;
            let ring = strip_ring(&lay)?;
            let flag = symbolic_flag(&lay, &ring)?;
            let valid = flag.validate();
            let mut text = vec![match &valid {
                Ok(()) => "flag: valid".to_string(),
                Err(v) => format!("flag: invalid at {v}"),
            }];
            let mut res = json!({ "valid": valid.is_ok(), "violation": valid.as_ref().err() });
            let mut out_checks = vec![("flag valid", valid.is_ok())];
            if let Some(f) = f {
                let f = parse_pattern(f)?;
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let r = rank_correspondence(&lay, &f, *samples, &mut rng)?;
                text.push(format!(
                    "rank correspondence for f = {f}: {}/{} samples agree ({} on the variety, {} retries)",
                    r.agreements, r.samples, r.on_variety, r.retries
                ));
                out_checks.push(("rank correspondence", r.holds()));
                res["correspondence"] = serde_json::to_value(&r)?;
            }
            let mut o = Outcome::new(
                json!({ "n": patch.n, "k": patch.k, "lambda": lay.lambda, "f": f, "samples": samples, "seed": seed }),
                res,
                text.join("\n"),
            );
            for (name, pass) in out_checks {
                o = o.check(name, pass);
            }
            o
        }
    })
}

fn run_verify(cmd: &VerifyCmd) -> Result<Outcome> {
    let VerifyCmd::MainTheorem { n, k, lambda, f } = cmd;
    let (n, k) = (*n, *k);
    let lams = match lambda {
        Some(l) => vec![parse_lambda(l)?],
        None => lambdas(n, k),
    };
    let pats = match f {
        Some(f) => vec![parse_pattern(f)?],
        None => enumerate_bounded(n, k),
    };
    let jobs: Vec<(Vec<usize>, JugglingFunction)> =
        lams.iter().flat_map(|l| pats.iter().map(move |f| (l.clone(), f.clone()))).collect();
    let mut reports: Vec<InstanceReport> = jobs
        .par_iter()
        .map(|(l, f)| -> Result<InstanceReport> {
            let lay = strip_layout(l, k, n)?;
            Ok(verify_instance(&lay, f)?)
        })
        .collect::<Result<_>>()?;
    reports.sort_by(|a, b| (&a.lambda, &a.f).cmp(&(&b.lambda, &b.f)));
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let nonempty = reports.iter().filter(|r| !r.empty_patch).count();
    let mut lines: Vec<String> = reports
        .iter()
        .filter(|r| !r.empty_patch)
        .map(|r| {
            format!(
                "λ={} f={} {} facets={} generators={} raw-gb={} init=SR:{} topology={}",
                join(&r.lambda, ","),
                r.f,
                if r.passed() { "PASS" } else { "FAIL" },
                r.facets,
                r.generators,
                r.raw_is_groebner,
                r.init_equals_sr,
                r.ball_or_sphere.map_or("-".into(), |t| format!("{t:?}")),
            )
        })
        .collect();
    lines.push(format!("{} instances, {} with nonempty patch, {} failed", reports.len(), nonempty, failed));
    Ok(Outcome::new(
        json!({ "n": n, "k": k, "lambda": lambda, "f": f }),
        json!({ "instances": reports, "nonempty": nonempty, "failed": failed }),
        lines.join("\n"),
    )
    .check("all instances pass", failed == 0))
}

fn run_diagrams(cmd: &DiagramsCmd) -> Result<Outcome> {
    Ok(match cmd {
        DiagramsCmd::Convert { cauchon: Some(grid), .. } => {
            let c = CauchonDiagram::parse(grid)?;
            let mut text =
                vec![format!("cauchon {} ({}x{}): {}", c, c.m, c.p, if c.is_valid() { "valid" } else { "invalid" })];
            let mut res = json!({ "cauchon": c, "valid": c.is_valid() });
            if let Some(bad) = c.validate() {
                text.push(format!("first violation at {bad:?}"));
                res["violation"] = json!(bad);
            } else {
                let d = cauchon_le(&c);
                let (lay, apd) = cauchon_to_bottom_apd(&c)?;
                let w = cauchon_permutation(&c);
                text.push(format!("le {d}"));
                text.push("map (i,j) -> (m+1-i, m+j)".into());
                text.push(format!("bottom pipe dream {}", apd.cells_display()));
                text.push(format!("permutation {w}"));
                text.push(lay.render(&apd.crosses).trim_end().to_string());
                res["le"] = serde_json::to_value(&d)?;
                res["map"] = json!("(i,j) -> (m+1-i, m+j)");
                res["pipe_dream"] = apd.to_json(&lay);
                res["permutation"] = json!(w.window());
            }
            Outcome::new(json!({ "cauchon": grid }), res, text.join("\n")).check("valid", c.is_valid())
        }
        DiagramsCmd::Convert { le: Some(filling), k: Some(k), n: Some(n), .. } => {
            let d = LeDiagram::parse(*k, *n, filling)?;
            let w = w_lambda(&d.shape, *k, *n)?;
            let mut text = vec![format!("le {d}: {}", if d.is_valid() { "valid" } else { "invalid" })];
            let mut res = json!({ "le": d, "valid": d.is_valid(), "w_lambda": w.to_string() });
            if let Some(wit) = d.validate() {
                text.push(format!("0 at {:?} with 1s at {:?} and {:?}", wit.zero, wit.left, wit.above));
                res["violation"] = serde_json::to_value(wit)?;
            } else {
                let u = u_of_le(&d);
                text.push(format!("u_D = {u}, w_lambda = {w}"));
                res["u"] = json!(u.to_string());
                if let Ok(c) = le_cauchon(&d) {
                    text.push(format!("cauchon {c}"));
                    res["cauchon"] = serde_json::to_value(&c)?;
                }
            }
            Outcome::new(json!({ "le": filling, "k": k, "n": n }), res, text.join("\n")).check("valid", d.is_valid())
        }
        DiagramsCmd::Convert { .. } => bail!("give --cauchon GRID, or --le FILLING with --k and --n"),
        DiagramsCmd::Count { m, p } => {
            let grids = all_cauchon(*m, *p);
            let restricted = restricted_permutations(*m, *p).len();
            let images: BTreeSet<_> = grids.iter().map(cauchon_permutation).collect();
            let text = format!(
                "cauchon diagrams: {}\nrestricted permutations: {}\ndistinct bottom pipe dream permutations: {}",
                grids.len(),
                restricted,
                images.len()
            );
            Outcome::new(
                json!({ "m": m, "p": p }),
                json!({ "cauchon": grids.len(), "restricted": restricted, "images": images.len() }),
                text,
            )
            .check("counts agree", grids.len() == restricted && images.len() == restricted)
        }
    })
}

fn configure_workers() -> Result<()> {
    if let Ok(v) = std::env::var(WORKERS_ENV) {
        let n: usize = v.parse().map_err(|_| anyhow!("{WORKERS_ENV} must be a positive integer, got {v:?}"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let json_out = cli.json || cli.format == Format::Json;
    let start = Instant::now();
    let outcome = configure_workers().and_then(|()| match &cli.cmd {
        Cmd::Jp(c) => run_jp(c),
        Cmd::Pd(c) => run_pd(c),
        Cmd::Strip(c) => run_strip(c),
        Cmd::Complex(c) => run_complex(c),
        Cmd::Alg(c) => run_alg(c),
        Cmd::Flag(c) => run_flag(c, cli.seed),
        Cmd::Verify(c) => run_verify(c),
        Cmd::Diagrams(c) => run_diagrams(c),
    });
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let passed = outcome.checks.iter().all(|c| c.pass);
    // a closed pipe (`| head`) is not an error worth reporting
    let mut out = std::io::stdout().lock();
    if json_out {
        let report = RunReport {
            command: &argv[1..],
            params: &outcome.params,
            results: &outcome.results,
            checks: &outcome.checks,
            passed,
        };
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else {
        let _ = writeln!(out, "{}", outcome.text);
        for c in &outcome.checks {
            let _ = writeln!(out, "{}: {}", if c.pass { "PASS" } else { "FAIL" }, c.name);
        }
    }
    drop(out);
    eprintln!("wall time: {:.1} ms", start.elapsed().as_secs_f64() * 1e3);
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
