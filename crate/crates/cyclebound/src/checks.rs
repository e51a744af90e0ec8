//! Certified per-graph checks: the degree-sequence path bound for every
//! start vertex, and the cycle-count bound along each route the theorems
//! provide (the γ route, the average-degree route, the permanent route,
//! and the edge-deletion route for multigraphs).
//!
//! Every verdict is three-valued: `True`/`False` only when the interval or
//! exact arithmetic proves it, `Undecided` when precision ran out. Exact
//! ties (the extremal families meet the path bound with equality) are
//! resolved by the ℚ(ρ) and coefficient–radical fallbacks, never by
//! floating point.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bounds::{
    bound_q, bound_q_exact, bound_q_prime_exact, bregman_bound, bregman_bound_exact, constants,
    eval_b, eval_gamma_d,
};
use crate::cert::{binomial, escalate, CertReal, Tri, MAX_PREC};
use crate::enumerate::{count_cycles_detailed_with_mode, count_st_paths, CountError, CycleStats};
use crate::exact::QRho;
use crate::graph::Graph;
use crate::permanent::{adjacency_plus_identity, permanent_with_mode};
use crate::Mode;

/// Verdict for one start vertex of the path bound.
#[derive(Debug, Clone)]
pub struct PathBoundRow {
    pub s: usize,
    /// max_t p_{s,t}(G), the largest path count this start vertex attains.
    pub max_paths: BigUint,
    /// A target vertex attaining the maximum.
    pub argmax_t: usize,
    /// The certified enclosure of the bound (q_s for simple graphs, q′_s
    /// for multigraphs).
    pub bound: CertReal,
    /// p_{s,t} ≤ bound for every t.
    pub certified: Tri,
    /// The bound is met with equality (proved exactly).
    pub exact_tie: bool,
    /// Upper bound on max_paths / bound as an exact rational (uses the
    /// lower endpoint of the enclosure; exactly 1 on ties).
    pub attainment_upper: BigRational,
}

/// Path-bound verdicts for all start vertices of a graph.
#[derive(Debug, Clone)]
pub struct PathBoundReport {
    /// `true` when the bound function is q′ (multigraph route).
    pub multigraph: bool,
    pub rows: Vec<PathBoundRow>,
    pub all_certified: bool,
    pub ties: usize,
    /// Largest attainment ratio over all rows.
    pub max_attainment_upper: BigRational,
}

/// Check p_{s,t}(G) ≤ q_s(G) (simple) or q′_s(G) (multigraph) for all
/// ordered vertex pairs, counting paths exactly and certifying each
/// comparison. Ties are settled by exact arithmetic.
pub fn check_path_bounds(g: &Graph, prec: u32, mode: Mode) -> Result<PathBoundReport, CountError> {
    let n = g.vertex_count();
    let simple = g.is_simple();
    let mut rows = Vec::with_capacity(n);
    for s in 0..n {
        let mut max_paths = BigUint::zero();
        let mut argmax_t = s;
        for t in 0..n {
            let p = count_st_paths(g, s, t)?;
            if p > max_paths {
                max_paths = p.clone();
                argmax_t = t;
            }
        }
        let p_rat = BigRational::from_integer(BigInt::from(max_paths.clone()));
        let row = if simple {
            certify_simple_row(g, s, &max_paths, &p_rat, argmax_t, prec)
        } else {
            certify_multi_row(g, s, &max_paths, &p_rat, argmax_t, prec)
        };
        rows.push(row);
    }
    let _ = mode; // Path counting is per-vertex; callers parallelise over graphs.
    let all_certified = rows.iter().all(|r| r.certified.is_true());
    let ties = rows.iter().filter(|r| r.exact_tie).count();
    let max_attainment_upper = rows
        .iter()
        .map(|r| r.attainment_upper.clone())
        .max()
        .unwrap_or_else(BigRational::zero);
    Ok(PathBoundReport {
        multigraph: !simple,
        rows,
        all_certified,
        ties,
        max_attainment_upper,
    })
}

fn certify_simple_row(
    g: &Graph,
    s: usize,
    max_paths: &BigUint,
    p_rat: &BigRational,
    argmax_t: usize,
    prec: u32,
) -> PathBoundRow {
    let p_int = BigInt::from(max_paths.clone());
    let mut verdict = escalate(prec, MAX_PREC, |p| {
        let point = CertReal::from_bigint(&p_int, p);
        let bound = bound_q(g, s, p).expect("simple graph, s in range");
        point.cmp_le(&bound)
    });
    let mut exact_tie = false;
    if verdict == Tri::Undecided {
        // The undecidable cases are exact ties; they live in ℚ(ρ).
        if let Some(exact) = bound_q_exact(g, s) {
            let diff = exact.sub(&QRho::from_rational(p_rat.clone()));
            verdict = match diff.sign() {
                std::cmp::Ordering::Less => Tri::False,
                std::cmp::Ordering::Equal => {
                    exact_tie = true;
                    Tri::True
                }
                std::cmp::Ordering::Greater => Tri::True,
            };
        }
    }
    let bound = bound_q(g, s, prec).expect("simple graph, s in range");
    if verdict.is_true() && !exact_tie && bound.is_point() && bound.contains_rational(p_rat) {
        exact_tie = true;
    }
    let attainment_upper = if exact_tie {
        BigRational::one()
    } else {
        attainment_ratio(p_rat, &bound)
    };
    PathBoundRow {
        s,
        max_paths: max_paths.clone(),
        argmax_t,
        bound,
        certified: verdict,
        exact_tie,
        attainment_upper,
    }
}

fn certify_multi_row(
    g: &Graph,
    s: usize,
    max_paths: &BigUint,
    p_rat: &BigRational,
    argmax_t: usize,
    prec: u32,
) -> PathBoundRow {
    // q′ is a rational multiple of a square root, so comparisons with the
    // integer path count are always exact.
    let exact = bound_q_prime_exact(g, s).expect("s in range");
    let ord = exact.cmp_rational(p_rat);
    let verdict = match ord {
        std::cmp::Ordering::Less => Tri::False,
        _ => Tri::True,
    };
    let exact_tie = ord == std::cmp::Ordering::Equal;
    let bound = exact.to_interval(prec);
    let attainment_upper = if exact_tie {
        BigRational::one()
    } else {
        attainment_ratio(p_rat, &bound)
    };
    PathBoundRow {
        s,
        max_paths: max_paths.clone(),
        argmax_t,
        bound,
        certified: verdict,
        exact_tie,
        attainment_upper,
    }
}

fn attainment_ratio(p_rat: &BigRational, bound: &CertReal) -> BigRational {
    let lo = bound.lo_rational();
    if lo <= BigRational::zero() {
        // Bounds are products of weights ≥ 1; a nonpositive endpoint can
        // only mean the interval is catastrophically wide.
        return BigRational::from_integer(BigInt::from(u32::MAX));
    }
    p_rat / lo
}

/// The γ route of the cycle bound: cycles ≤ Σ_{j=3}^{⌊m/11⌋} C(m, j) + 22β
/// with β = ∏_v b(deg v), and β ≤ γ^m.
#[derive(Debug, Clone)]
pub struct GammaRoute {
    /// ⌊m/11⌋, the short/long cycle length split.
    pub ell: u64,
    /// Σ_{j=3}^{ℓ} C(m, j), the exact short-cycle term.
    pub short_cycle_term: BigUint,
    /// β = ∏_v b(deg v).
    pub beta: CertReal,
    /// short_cycle_term + 22β.
    pub total_bound: CertReal,
    /// cycles(G) ≤ total_bound.
    pub certified_count: Tri,
    /// β ≤ γ^m.
    pub certified_envelope: Tri,
}

/// The average-degree route: a simple graph with minimum degree 2 and
/// average degree d ≥ 2 has at most m·γ_d^m cycles.
#[derive(Debug, Clone)]
pub struct AvgDegRoute {
    /// Hypotheses hold: simple, min degree ≥ 2, average degree ≥ 2.
    pub applicable: bool,
    pub average_degree: BigRational,
    pub gamma_d: CertReal,
    /// m·γ_d^m (meaningful only when applicable).
    pub total_bound: CertReal,
    pub certified_count: Tri,
    /// γ_d > κ₁ — the window where the cycle count can exceed κ₁^m.
    pub gamma_d_above_kappa1: Tri,
}

/// The permanent route: cycles ≤ (perm(A + I) − 1 − m)/2, and perm(A + I)
/// is itself bounded by ∏_v ((deg v + 1)!)^{1/(deg v + 1)}.
#[derive(Debug, Clone)]
pub struct PermanentRoute {
    pub permanent: BigUint,
    /// ⌊(perm − 1 − m)/2⌋, an exact integer cycle bound.
    pub exact_cycle_bound: BigUint,
    /// cycles(G) ≤ exact_cycle_bound (integer comparison, always decided).
    pub certified_count: bool,
    pub bregman: CertReal,
    /// perm(A + I) ≤ Brègman product.
    pub certified_permanent: Tri,
}

/// The edge-deletion route, valid for multigraphs: every cycle has length
/// ≥ 2, so cycles ≤ ½ Σ_e p(G−e endpoints) ≤ ½ Σ_e min(q′_x, q′_y)(G−e),
/// summing over labelled edge instances.
#[derive(Debug, Clone)]
pub struct DeletionRoute {
    /// ½ Σ over edge instances of min(q′_x(G−e), q′_y(G−e)).
    pub total_bound: CertReal,
    pub certified_count: Tri,
}

/// All cycle-bound routes evaluated on one graph.
#[derive(Debug, Clone)]
pub struct CycleBoundReport {
    pub n: usize,
    pub m: u64,
    pub stats: CycleStats,
    /// Simple graphs only.
    pub gamma_route: Option<GammaRoute>,
    /// Simple graphs only; `applicable` records whether hypotheses hold.
    pub avgdeg_route: Option<AvgDegRoute>,
    /// Simple graphs with n ≤ 24 (Ryser budget).
    pub permanent_route: Option<PermanentRoute>,
    /// Any graph with at least one edge.
    pub deletion_route: Option<DeletionRoute>,
}

/// Count the cycles of `g` exactly and certify every applicable route.
pub fn cycle_report(g: &Graph, prec: u32, mode: Mode) -> CycleBoundReport {
    let n = g.vertex_count();
    let m = g.edge_count();
    let stats = count_cycles_detailed_with_mode(g, mode);
    let count_int = BigInt::from(stats.cycles.clone());
    let simple = g.is_simple();

    let gamma_route = simple.then(|| gamma_route(g, m, &count_int, prec));
    let avgdeg_route = simple.then(|| avgdeg_route(g, m, &count_int, prec));
    let permanent_route = (simple && n <= 24 && n >= 1)
        .then(|| permanent_route(g, m, &stats.cycles, mode, prec));
    let deletion_route = (m >= 1).then(|| deletion_route(g, &count_int, prec));

    CycleBoundReport {
        n,
        m,
        stats,
        gamma_route,
        avgdeg_route,
        permanent_route,
        deletion_route,
    }
}

/// Σ_{j=3}^{ℓ} C(m, j) with ℓ = ⌊m/11⌋ (zero when ℓ < 3).
pub fn short_cycle_term(m: u64) -> BigUint {
    let ell = m / 11;
    let mut sum = BigUint::zero();
    for j in 3..=ell {
        sum += binomial(m, j);
    }
    sum
}

fn beta_product(g: &Graph, prec: u32) -> CertReal {
    let mut beta = CertReal::one(prec);
    for v in 0..g.vertex_count() {
        beta = beta.mul(&eval_b(g.degree(v) as u32, prec));
    }
    beta
}

fn gamma_route(g: &Graph, m: u64, count_int: &BigInt, prec: u32) -> GammaRoute {
    let ell = m / 11;
    let short = short_cycle_term(m);
    let short_int = BigInt::from(short.clone());
    let certified_count = escalate(prec, MAX_PREC, |p| {
        let beta = beta_product(g, p);
        let total = CertReal::from_bigint(&short_int, p)
            .add(&CertReal::from_u64(22, p).mul(&beta));
        CertReal::from_bigint(count_int, p).cmp_le(&total)
    });
    let certified_envelope = escalate(prec, MAX_PREC, |p| {
        let beta = beta_product(g, p);
        let gamma_m = constants(p).gamma.pow_i64(m as i64);
        beta.cmp_le(&gamma_m)
    });
    let beta = beta_product(g, prec);
    let total_bound = CertReal::from_bigint(&short_int, prec)
        .add(&CertReal::from_u64(22, prec).mul(&beta));
    GammaRoute {
        ell,
        short_cycle_term: short,
        beta,
        total_bound,
        certified_count,
        certified_envelope,
    }
}

fn avgdeg_route(g: &Graph, m: u64, count_int: &BigInt, prec: u32) -> AvgDegRoute {
    let two = BigRational::from_integer(2.into());
    let average_degree = g.average_degree().unwrap_or_else(BigRational::zero);
    let applicable = g.vertex_count() >= 1 && g.min_degree() >= 2 && average_degree >= two;
    if !applicable {
        let one = CertReal::one(prec);
        return AvgDegRoute {
            applicable,
            average_degree,
            gamma_d: one.clone(),
            total_bound: one,
            certified_count: Tri::Undecided,
            gamma_d_above_kappa1: Tri::Undecided,
        };
    }
    let certified_count = escalate(prec, MAX_PREC, |p| {
        let gd = eval_gamma_d(&average_degree, p).expect("average degree ≥ 2");
        let total = CertReal::from_u64(m, p).mul(&gd.pow_i64(m as i64));
        CertReal::from_bigint(count_int, p).cmp_le(&total)
    });
    let gamma_d_above_kappa1 = escalate(prec, MAX_PREC, |p| {
        let gd = eval_gamma_d(&average_degree, p).expect("average degree ≥ 2");
        gd.cmp_gt(&constants(p).kappa1)
    });
    let gamma_d = eval_gamma_d(&average_degree, prec).expect("average degree ≥ 2");
    let total_bound = CertReal::from_u64(m, prec).mul(&gamma_d.pow_i64(m as i64));
    AvgDegRoute {
        applicable,
        average_degree,
        gamma_d,
        total_bound,
        certified_count,
        gamma_d_above_kappa1,
    }
}

fn permanent_route(
    g: &Graph,
    m: u64,
    count: &BigUint,
    mode: Mode,
    prec: u32,
) -> PermanentRoute {
    let matrix = adjacency_plus_identity(g).expect("simple graph within size budget");
    let perm = permanent_with_mode(&matrix, mode).expect("n ≤ 24");
    // perm(A+I) counts the identity once, each edge once (as a
    // transposition), and each cycle twice (two orientations), plus
    // non-negative terms for packings of two or more of these.
    let base = BigUint::from(m) + BigUint::one();
    let exact_cycle_bound = (perm.clone() - &base) / BigUint::from(2u32);
    let certified_count = count <= &exact_cycle_bound;
    let row_sums: Vec<u32> = (0..g.vertex_count())
        .map(|v| g.degree(v) as u32 + 1)
        .collect();
    let perm_rat = BigRational::from_integer(BigInt::from(perm.clone()));
    // Equality cases (all-ones blocks) are irrational-free: decide exactly
    // when possible, otherwise by intervals.
    let certified_permanent = match bregman_bound_exact(&row_sums) {
        Some(exact) => Tri::from_bool(perm_rat <= exact),
        None => escalate(prec, MAX_PREC, |p| {
            let bb = bregman_bound(&row_sums, p).expect("row sums ≥ 1");
            CertReal::from_bigint(&BigInt::from(perm.clone()), p).cmp_le(&bb)
        }),
    };
    let bregman = bregman_bound(&row_sums, prec).expect("row sums ≥ 1");
    PermanentRoute {
        permanent: perm,
        exact_cycle_bound,
        certified_count,
        bregman,
        certified_permanent,
    }
}

fn deletion_route(g: &Graph, count_int: &BigInt, prec: u32) -> DeletionRoute {
    let bound_at = |p: u32| -> CertReal {
        let mut total = CertReal::zero(p);
        for e in g.edge_records() {
            let reduced = g
                .remove_edge_instance(e.u, e.v)
                .expect("record edges exist");
            let qx = bound_q_prime_exact(&reduced, e.u as usize).expect("endpoint in range");
            let qy = bound_q_prime_exact(&reduced, e.v as usize).expect("endpoint in range");
            // Exact comparison of coef·√rad values picks the sharper side.
            let min = match qx.squared().cmp(&qy.squared()) {
                std::cmp::Ordering::Greater => qy,
                _ => qx,
            };
            let term = min.to_interval(p).mul(&CertReal::from_u64(u64::from(e.mult), p));
            total = total.add(&term);
        }
        total.div(&CertReal::from_u64(2, p))
    };
    let certified_count = escalate(prec, MAX_PREC, |p| {
        CertReal::from_bigint(count_int, p).cmp_le(&bound_at(p))
    });
    DeletionRoute {
        total_bound: bound_at(prec),
        certified_count,
    }
}

/// One link of the short-cycle counting chain from the γ-route proof:
/// Σ_{j=3}^{ℓ} C(m,j) ≤ ℓ·C(m,ℓ) ≤ m·(em/ℓ)^ℓ < m·1.37^m, with ℓ = ⌊m/11⌋.
#[derive(Debug, Clone)]
pub struct ShortCycleChain {
    pub m: u64,
    pub ell: u64,
    pub sum: BigUint,
    /// Σ ≤ ℓ·C(m, ℓ), exact integer comparison.
    pub sum_le_binom: bool,
    /// ℓ·C(m, ℓ) ≤ m·(em/ℓ)^ℓ.
    pub binom_le_analytic: Tri,
    /// m·(em/ℓ)^ℓ < m·(137/100)^m.
    pub analytic_lt_ratepow: Tri,
}

/// Certify the counting chain for one edge count (requires ℓ = ⌊m/11⌋ ≥ 1).
pub fn short_cycle_chain(m: u64, prec: u32) -> ShortCycleChain {
    let ell = m / 11;
    assert!(ell >= 1, "chain needs m ≥ 11, got m = {m}");
    let sum = short_cycle_term(m);
    let ell_binom = BigUint::from(ell) * binomial(m, ell);
    let sum_le_binom = sum <= ell_binom;
    let ell_binom_int = BigInt::from(ell_binom);
    let analytic_at = |p: u32| -> CertReal {
        // m·(e·m/ℓ)^ℓ
        let em_over_ell = CertReal::euler(p)
            .mul(&CertReal::from_u64(m, p))
            .div(&CertReal::from_u64(ell, p));
        CertReal::from_u64(m, p).mul(&em_over_ell.pow_i64(ell as i64))
    };
    let binom_le_analytic = escalate(prec, MAX_PREC, |p| {
        CertReal::from_bigint(&ell_binom_int, p).cmp_le(&analytic_at(p))
    });
    let rate = BigRational::new(137.into(), 100.into());
    let analytic_lt_ratepow = escalate(prec, MAX_PREC, |p| {
        let rhs = CertReal::from_u64(m, p)
            .mul(&CertReal::from_rational(&rate, p).pow_i64(m as i64));
        analytic_at(p).cmp_lt(&rhs)
    });
    ShortCycleChain {
        m,
        ell,
        sum,
        sum_le_binom,
        binom_le_analytic,
        analytic_lt_ratepow,
    }
}
