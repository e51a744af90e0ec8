//! Certified evaluation of the weight sequences b, b′, a, a′, α, λ, the
//! funnel weight φ, the comparison function f, and the closed-form cycle
//! and permanent bounds built from them.
//!
//! The sequences (for k ≥ 0, with ρ = (4/3)^(1/4)):
//!
//! * b(0) = b(1) = 1 and b(k) = ((k−1)!·ρ)^(1/(k−1)) for k ≥ 2 — the
//!   vertex weights of the path bound for simple graphs;
//! * b′(0) = b′(1) = 1 and b′(k) = k/2 for k ≥ 2, with a′(0) = 1 and
//!   a′(k) = 2√k — the multigraph analogues;
//! * λ(k) = log(k^k / (ρ·k!)) / (k(k−1)) for k ≥ 2, the logarithmic growth
//!   increment of b: λ(k) = log b(k+1) − log b(k);
//! * α(0) = 1, α(1) = √(2/ρ⁵), α(2) = 2/ρ³, α(3) = 6/(ρ⁴·b(3)·b(5)), and
//!   α(k) = α(k−1) / (1 + k(λ(k−1) − λ(k))) for k ≥ 4;
//! * a(k) = α(k)·b(k);
//! * φ(l, d) = ρ^(l−2)·b(l−d+2) for l ≥ d ≥ 1, the minimum funnel weight;
//! * f(k, n, l) = kα(k)(log(ρ^(l−1) b(n+l)/b(n)) − lλ(k)), whose comparison
//!   against l(α(n) − α(k)) defines the well-behaved triples.
//!
//! All evaluations return certified enclosures ([`CertReal`]); the handful
//! of values that are exact by algebra (α(2) = (3/2)ρ, a′ and b′, Brègman
//! products with aligned exponents) also have exact accessors used to
//! resolve ties that intervals cannot separate.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::cert::{factorial, CertReal, Tri};
use crate::exact::{QRho, RootRat};
use crate::graph::Graph;

/// Domain violation in a bound evaluation.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DomainError {
    #[error("lambda(k) requires k >= 2 (got k = {k})")]
    LambdaDomain { k: u32 },
    #[error("phi(l, d) requires l >= d >= 1 (got l = {l}, d = {d})")]
    PhiDomain { l: u32, d: u32 },
    #[error("f(k, n, l) requires k >= 2, n >= 2, l >= 1 (got k = {k}, n = {n}, l = {l})")]
    FDomain { k: u32, n: u32, l: u32 },
    #[error("gamma_d requires d >= 2 (got d = {d})")]
    GammaDomain { d: String },
    #[error("row sum at index {index} is zero; the permanent bound requires r_i >= 1")]
    ZeroRowSum { index: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("the b-weight path bound applies to simple graphs; use the primed bound")]
    RequiresSimpleGraph,
}

/// b(k): certified enclosure of the simple-graph vertex weight.
pub fn eval_b(k: u32, prec: u32) -> CertReal {
    if k <= 1 {
        return CertReal::one(prec);
    }
    let fact = CertReal::factorial(u64::from(k) - 1, prec);
    fact.mul(&CertReal::rho(prec)).root_u64(u64::from(k) - 1)
}

/// b′(k): the multigraph vertex weight, exactly rational.
pub fn eval_b_prime(k: u32) -> BigRational {
    if k <= 1 {
        BigRational::one()
    } else {
        BigRational::new(BigInt::from(k), BigInt::from(2))
    }
}

/// a′(k) = 2√k (a′(0) = 1) as an exact coefficient–radical pair.
pub fn a_prime_exact(k: u32) -> RootRat {
    if k == 0 {
        RootRat::from_rational(BigRational::one())
    } else {
        RootRat::new(BigRational::from_integer(2.into()), u64::from(k))
    }
}

/// a′(k): certified enclosure of the multigraph source weight.
pub fn eval_a_prime(k: u32, prec: u32) -> CertReal {
    a_prime_exact(k).to_interval(prec)
}

/// λ(k) for k ≥ 2, evaluated in the closed form
/// log(k^k / (ρ·k!)) / (k(k−1)), which avoids the cancellation in
/// log b(k+1) − log b(k).
pub fn eval_lambda(k: u32, prec: u32) -> Result<CertReal, DomainError> {
    if k < 2 {
        return Err(DomainError::LambdaDomain { k });
    }
    let kk = BigInt::from(k).pow(k);
    let ratio = BigRational::new(kk, BigInt::from(factorial(u64::from(k))));
    let inner = CertReal::from_rational(&ratio, prec).div(&CertReal::rho(prec));
    let scale = BigRational::new(BigInt::one(), BigInt::from(k) * BigInt::from(k - 1));
    Ok(inner.ln().mul(&CertReal::from_rational(&scale, prec)))
}

static ALPHA_MEMO: OnceLock<Mutex<HashMap<(u32, u32), CertReal>>> = OnceLock::new();

fn alpha_memo() -> &'static Mutex<HashMap<(u32, u32), CertReal>> {
    ALPHA_MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// α(k): certified enclosure, memoized per (k, precision). The explicit
/// closed forms cover k ≤ 3 (α(2) = (3/2)ρ exactly); larger k walk the
/// recursion α(k) = α(k−1) / (1 + k(λ(k−1) − λ(k))) forward once and cache
/// every step.
pub fn eval_alpha(k: u32, prec: u32) -> CertReal {
    if let Some(hit) = alpha_memo().lock().unwrap().get(&(k, prec)) {
        return hit.clone();
    }
    let value = match k {
        0 => CertReal::one(prec),
        // α(1) = √(2/ρ⁵) and 2/ρ⁵ = (9/8)ρ³ in ℚ(ρ).
        1 => QRho::monomial(BigRational::new(9.into(), 8.into()), 3)
            .to_interval(prec)
            .sqrt(),
        // α(2) = 2/ρ³ = (3/2)ρ.
        2 => QRho::monomial(BigRational::new(3.into(), 2.into()), 1).to_interval(prec),
        // α(3) = 6/(ρ⁴ b(3) b(5)) = (9/2)/(b(3) b(5)).
        3 => {
            let nine_halves = BigRational::new(9.into(), 2.into());
            CertReal::from_rational(&nine_halves, prec)
                .div(&eval_b(3, prec).mul(&eval_b(5, prec)))
        }
        _ => {
            let mut cur = eval_alpha(3, prec);
            for j in 4..=k {
                let lam_prev = eval_lambda(j - 1, prec).expect("j-1 >= 3");
                let lam_j = eval_lambda(j, prec).expect("j >= 4");
                let denom = CertReal::one(prec)
                    .add(&CertReal::from_u64(u64::from(j), prec).mul(&lam_prev.sub(&lam_j)));
                cur = cur.div(&denom);
                alpha_memo()
                    .lock()
                    .unwrap()
                    .entry((j, prec))
                    .or_insert_with(|| cur.clone());
            }
            cur
        }
    };
    alpha_memo()
        .lock()
        .unwrap()
        .entry((k, prec))
        .or_insert_with(|| value.clone());
    value
}

/// a(k) = α(k)·b(k): certified enclosure of the source weight.
pub fn eval_a(k: u32, prec: u32) -> CertReal {
    eval_alpha(k, prec).mul(&eval_b(k, prec))
}

/// φ(l, d) = ρ^(l−2)·b(l−d+2) for l ≥ d ≥ 1: the minimum product of
/// interior weights over funnels with l leaves and root degree d.
/// φ(1, 1) = ρ⁻¹·b(2) = 1 exactly.
pub fn eval_phi(l: u32, d: u32, prec: u32) -> Result<CertReal, DomainError> {
    if d < 1 || l < d {
        return Err(DomainError::PhiDomain { l, d });
    }
    let rho_pow = CertReal::rho(prec).pow_i64(i64::from(l) - 2);
    Ok(rho_pow.mul(&eval_b(l - d + 2, prec)))
}

/// f(k, n, l) = kα(k)(log(ρ^(l−1) b(n+l)/b(n)) − lλ(k)) for k, n ≥ 2 and
/// l ≥ 1. For l = 1 this reduces to kα(k)(λ(n) − λ(k)).
pub fn eval_f(k: u32, n: u32, l: u32, prec: u32) -> Result<CertReal, DomainError> {
    if k < 2 || n < 2 || l < 1 {
        return Err(DomainError::FDomain { k, n, l });
    }
    let rho_pow = CertReal::rho(prec).pow_i64(i64::from(l) - 1);
    let inner = rho_pow
        .mul(&eval_b(n + l, prec))
        .div(&eval_b(n, prec))
        .ln();
    let l_lambda = CertReal::from_u64(u64::from(l), prec)
        .mul(&eval_lambda(k, prec).expect("k >= 2"));
    let scale = CertReal::from_u64(u64::from(k), prec).mul(&eval_alpha(k, prec));
    Ok(scale.mul(&inner.sub(&l_lambda)))
}

/// The well-behaved defect f(k, n, l) − l(α(n) − α(k)). A triple is
/// well-behaved exactly when this is ≥ 0.
pub fn wb_defect(k: u32, n: u32, l: u32, prec: u32) -> Result<CertReal, DomainError> {
    let f = eval_f(k, n, l, prec)?;
    let rhs = CertReal::from_u64(u64::from(l), prec)
        .mul(&eval_alpha(n, prec).sub(&eval_alpha(k, prec)));
    Ok(f.sub(&rhs))
}

/// Whether (k, n, l) is well-behaved: f(k, n, l) ≥ l(α(n) − α(k)).
///
/// Two families are exact ties, certified structurally rather than by
/// intervals: (k, k, 1) (both sides vanish) and (k, k−1, 1) for k ≥ 4
/// (equality is the defining recursion of α(k)). Everything else is a
/// certified strict comparison; `Undecided` asks the caller to raise the
/// precision.
pub fn is_well_behaved(k: u32, n: u32, l: u32, prec: u32) -> Result<Tri, DomainError> {
    if k < 2 || n < 2 || l < 1 {
        return Err(DomainError::FDomain { k, n, l });
    }
    if l == 1 && n == k {
        return Ok(Tri::True);
    }
    if l == 1 && k >= 4 && n == k - 1 {
        return Ok(Tri::True);
    }
    Ok(wb_defect(k, n, l, prec)?.cmp_ge(&CertReal::zero(prec)))
}

/// γ_d for rational d ≥ 2: (b(⌊d⌋)^(⌈d⌉−d) · b(⌈d⌉)^(d−⌊d⌋))^(2/d), the
/// log-linear interpolation of b between consecutive integers raised to
/// 2/d. For integer d this is b(d)^(2/d); γ₅ is the global cycle-growth
/// constant γ = b(5)^(2/5) = 442368^(1/40).
pub fn eval_gamma_d(d: &BigRational, prec: u32) -> Result<CertReal, DomainError> {
    if d < &BigRational::from_integer(2.into()) {
        return Err(DomainError::GammaDomain { d: d.to_string() });
    }
    let two_over_d = BigRational::new(BigInt::from(2), BigInt::one()) / d;
    if d.is_integer() {
        let k = d.to_integer().to_u32().ok_or(DomainError::GammaDomain {
            d: d.to_string(),
        })?;
        return Ok(eval_b(k, prec).pow_rational(&two_over_d));
    }
    let floor = d.floor().to_integer().to_u32().ok_or(DomainError::GammaDomain {
        d: d.to_string(),
    })?;
    let ceil = floor + 1;
    let w_hi = d - BigRational::from_integer(floor.into());
    let w_lo = BigRational::one() - &w_hi;
    let log_interp = eval_b(floor, prec)
        .ln()
        .mul(&CertReal::from_rational(&w_lo, prec))
        .add(
            &eval_b(ceil, prec)
                .ln()
                .mul(&CertReal::from_rational(&w_hi, prec)),
        );
    Ok(log_interp
        .mul(&CertReal::from_rational(&two_over_d, prec))
        .exp())
}

/// q_s(G) = a(d(s)) · ∏_{v ≠ s} b(d(v)): the certified upper bound on the
/// number of paths starting at s in a simple graph G.
pub fn bound_q(g: &Graph, s: usize, prec: u32) -> Result<CertReal, DomainError> {
    if s >= g.vertex_count() {
        return Err(DomainError::VertexOutOfRange {
            v: s,
            n: g.vertex_count(),
        });
    }
    if !g.is_simple() {
        return Err(DomainError::RequiresSimpleGraph);
    }
    let mut acc = eval_a(g.degree(s) as u32, prec);
    for v in 0..g.vertex_count() {
        if v != s {
            acc = acc.mul(&eval_b(g.degree(v) as u32, prec));
        }
    }
    Ok(acc)
}

/// Exact value of q_s(G) in ℚ(ρ) when every weight factor lies in the
/// field: d(s) ∈ {0, 2} and all other degrees in {0, 1, 2, 4}.
/// This covers every tight case of the simple-graph path bound.
pub fn bound_q_exact(g: &Graph, s: usize) -> Option<QRho> {
    if s >= g.vertex_count() || !g.is_simple() {
        return None;
    }
    let mut acc = match g.degree(s) {
        0 => QRho::from_ratio(1, 1),
        // a(2) = √3 = (3/2)ρ².
        2 => QRho::monomial(BigRational::new(3.into(), 2.into()), 2),
        _ => return None,
    };
    for v in 0..g.vertex_count() {
        if v == s {
            continue;
        }
        let factor = match g.degree(v) {
            0 | 1 => continue,
            2 => QRho::rho(),
            // b(4) = (3/2)ρ³.
            4 => QRho::monomial(BigRational::new(3.into(), 2.into()), 3),
            _ => return None,
        };
        acc = acc.mul(&factor);
    }
    Some(acc)
}

/// q′_s(G) = a′(d(s)) · ∏_{v ≠ s} b′(d(v)) as an exact coefficient–radical
/// pair (the product is rational; the source weight contributes 2√d(s)).
/// Comparisons against integer path counts are therefore always exact.
pub fn bound_q_prime_exact(g: &Graph, s: usize) -> Result<RootRat, DomainError> {
    if s >= g.vertex_count() {
        return Err(DomainError::VertexOutOfRange {
            v: s,
            n: g.vertex_count(),
        });
    }
    let k = g.degree(s) as u32;
    let mut coef = if k == 0 {
        BigRational::one()
    } else {
        BigRational::from_integer(2.into())
    };
    for v in 0..g.vertex_count() {
        if v != s {
            coef *= eval_b_prime(g.degree(v) as u32);
        }
    }
    Ok(RootRat::new(coef, u64::from(k.max(1))))
}

/// q′_s(G) as a certified enclosure.
pub fn bound_q_prime(g: &Graph, s: usize, prec: u32) -> Result<CertReal, DomainError> {
    Ok(bound_q_prime_exact(g, s)?.to_interval(prec))
}

/// The permanent bound ∏ (r_i!)^(1/r_i) for a 0/1 matrix with row sums
/// r_i ≥ 1, as a certified enclosure.
pub fn bregman_bound(row_sums: &[u32], prec: u32) -> Result<CertReal, DomainError> {
    if let Some(index) = row_sums.iter().position(|&r| r == 0) {
        return Err(DomainError::ZeroRowSum { index });
    }
    let mut counts: HashMap<u32, u32> = HashMap::new();
    for &r in row_sums {
        *counts.entry(r).or_insert(0) += 1;
    }
    let mut keys: Vec<u32> = counts.keys().copied().collect();
    keys.sort_unstable();
    let mut acc = CertReal::one(prec);
    for r in keys {
        let c = counts[&r];
        let expo = BigRational::new(BigInt::from(c), BigInt::from(r));
        let fact = CertReal::factorial(u64::from(r), prec);
        acc = acc.mul(&fact.pow_rational(&expo));
    }
    Ok(acc)
}

/// Exact rational value of the permanent bound when every row-sum class
/// has cardinality divisible by its value (then all exponents are
/// integers). Covers the all-ones equality case (= n!) and permutation
/// matrices (= 1). Returns `None` when the bound is irrational — in which
/// case it can never tie with an integer permanent.
pub fn bregman_bound_exact(row_sums: &[u32]) -> Option<BigRational> {
    if row_sums.iter().any(|&r| r == 0) {
        return None;
    }
    let mut counts: HashMap<u32, u32> = HashMap::new();
    for &r in row_sums {
        *counts.entry(r).or_insert(0) += 1;
    }
    let mut acc = BigRational::one();
    for (&r, &c) in &counts {
        if c % r != 0 {
            return None;
        }
        let fact = BigRational::from_integer(BigInt::from(factorial(u64::from(r))));
        for _ in 0..(c / r) {
            acc *= &fact;
        }
    }
    Some(acc)
}

/// The named constants of the cycle bounds.
pub struct BoundConstants {
    /// ρ = (4/3)^(1/4) ≈ 1.0745699.
    pub rho: CertReal,
    /// γ = b(5)^(2/5) = (24ρ)^(1/10) = 442368^(1/40) ≈ 1.3840271, the base
    /// of the global cycle-count bound γ^m.
    pub gamma: CertReal,
    /// κ₁ = (2 + 2√2)^(1/5) ≈ 1.3701280, the growth rate of the extremal
    /// ring family.
    pub kappa1: CertReal,
    /// log κ₁ ≈ 0.3149042, the per-edge growth exponent.
    pub log_kappa1: CertReal,
}

/// Certified enclosures of ρ, γ, κ₁ and log κ₁.
pub fn constants(prec: u32) -> BoundConstants {
    let two = CertReal::from_u64(2, prec);
    let kappa1 = two
        .sqrt()
        .mul(&two)
        .add(&two)
        .pow_rational(&BigRational::new(1.into(), 5.into()));
    BoundConstants {
        rho: CertReal::rho(prec),
        gamma: eval_b(5, prec).pow_rational(&BigRational::new(2.into(), 5.into())),
        kappa1: kappa1.clone(),
        log_kappa1: kappa1.ln(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational_from_decimal;

    fn assert_contains(iv: &CertReal, decimal: &str) {
        let truth = rational_from_decimal(decimal).unwrap();
        assert!(
            iv.contains_rational(&truth),
            "enclosure [{}, {}] misses {decimal}",
            iv.decimal_bounds(45).0,
            iv.decimal_bounds(45).1,
        );
    }

    #[test]
    fn b_values_match_frozen_oracle() {
        assert!(eval_b(0, 128).is_point());
        assert_eq!(eval_b(1, 128).lo_rational(), BigRational::one());
        assert_contains(&eval_b(2, 128), "1.07456993182354191955333815670593057713708");
        assert_contains(&eval_b(3, 128), "1.46599449645866127961789637714681263974852");
        assert_contains(&eval_b(4, 128), "1.86120971820419919788243749396646817550241");
        assert_contains(&eval_b(5, 128), "2.25352033560061485102729091682239254372657");
        assert_contains(&eval_b(6, 128), "2.64291494052850491038217716952695648295672");
        let ratio = eval_b(13, 192).div(&eval_b(12, 192));
        assert_contains(&ratio, "1.07673946462384621214221501646281604872442");
    }

    #[test]
    fn b_recursion_overlap_up_to_64() {
        // b(k+1)^k, k·b(k)^(k−1) and k!·ρ all enclose the same real.
        for k in 2..=64u32 {
            let lhs = eval_b(k + 1, 128).pow_i64(i64::from(k));
            let mid = CertReal::from_u64(u64::from(k), 128)
                .mul(&eval_b(k, 128).pow_i64(i64::from(k) - 1));
            let rhs = CertReal::factorial(u64::from(k), 128).mul(&CertReal::rho(128));
            for pair in [(&lhs, &mid), (&lhs, &rhs), (&mid, &rhs)] {
                assert!(
                    pair.0.cmp_lt(pair.1).is_undecided() && pair.0.cmp_gt(pair.1).is_undecided(),
                    "recursion enclosures disjoint at k = {k}"
                );
            }
        }
    }

    #[test]
    fn lambda_closed_form_matches_log_difference() {
        for k in 2..=32u32 {
            let lam = eval_lambda(k, 128).unwrap();
            let diff = eval_b(k + 1, 128).ln().sub(&eval_b(k, 128).ln());
            assert!(
                lam.cmp_lt(&diff).is_undecided() && lam.cmp_gt(&diff).is_undecided(),
                "lambda({k}) disagrees with log b({}) − log b({k})",
                k + 1
            );
        }
        assert_contains(
            &eval_lambda(2, 128).unwrap(),
            "0.310613331223500038778713684979859855099811",
        );
        assert_contains(
            &eval_lambda(3, 128).unwrap(),
            "0.238692813110554806918908933481402997223934",
        );
        assert_eq!(eval_lambda(1, 128), Err(DomainError::LambdaDomain { k: 1 }));
    }

    #[test]
    fn alpha_values_match_frozen_oracle() {
        assert!(eval_alpha(0, 128).is_point());
        assert_contains(&eval_alpha(1, 128), "1.18148520458495348794467744236609468100026");
        assert_contains(&eval_alpha(2, 128), "1.61185489773531287933000723505889586570562");
        assert_contains(&eval_alpha(3, 128), "1.36213042128149137891442874761376768555715");
        assert_contains(&eval_alpha(4, 128), "1.14493263213837091147741208859755228504918");
        assert_contains(&eval_alpha(12, 128), "0.50978347262637399758855748552596831160406");
        // Memoized lookups return identical enclosures.
        let first = eval_alpha(12, 128);
        let second = eval_alpha(12, 128);
        assert_eq!(first.lo_rational(), second.lo_rational());
        assert_eq!(first.hi_rational(), second.hi_rational());
    }

    #[test]
    fn a_values_match_frozen_oracle() {
        assert_contains(&eval_a(1, 128), "1.18148520458495348794467744236609468100026");
        assert_contains(&eval_a(3, 128), "1.9968757010575841101914361063776172648024");
        assert_contains(&eval_a(4, 128), "2.13095974162504938624236033246490314436055");
        // a(3)·b(5) = 9/2 exactly.
        let prod = eval_a(3, 192).mul(&eval_b(5, 192));
        assert!(prod.contains_rational(&BigRational::new(9.into(), 2.into())));
        // a(2) = √3.
        let a2 = eval_a(2, 128);
        assert_contains(&a2, "1.73205080756887729352744634150587236694281");
    }

    #[test]
    fn phi_domain_and_values() {
        // φ(1,1) = 1 exactly (enclosure is a hair wide but pinned to 1).
        let phi11 = eval_phi(1, 1, 128).unwrap();
        assert!(phi11.contains_rational(&BigRational::one()));
        // φ(2,2) = ρ, φ(2,1) = b(3).
        assert_contains(&eval_phi(2, 2, 128).unwrap(), "1.07456993182354191955333815670593057713708");
        assert_contains(&eval_phi(2, 1, 128).unwrap(), "1.46599449645866127961789637714681263974852");
        assert_eq!(
            eval_phi(1, 2, 128),
            Err(DomainError::PhiDomain { l: 1, d: 2 })
        );
        assert_eq!(
            eval_phi(3, 0, 128),
            Err(DomainError::PhiDomain { l: 3, d: 0 })
        );
    }

    #[test]
    fn f_and_well_behaved_defects() {
        assert_contains(
            &eval_f(3, 2, 3, 128).unwrap(),
            "0.687885394512914178780676865475362273920175",
        );
        let gap_323 = wb_defect(3, 2, 3, 128).unwrap();
        assert_contains(&gap_323, "-0.0612880348485503224660585968600222665252474");
        let gap_534 = wb_defect(5, 3, 4, 128).unwrap();
        assert_contains(&gap_534, "0.00363539507772259939445457926349454894157959");
        assert_eq!(
            eval_f(1, 2, 1, 128),
            Err(DomainError::FDomain { k: 1, n: 2, l: 1 })
        );
    }

    #[test]
    fn well_behaved_verdicts() {
        // Structural ties: diagonal and first subdiagonal (k ≥ 4).
        assert_eq!(is_well_behaved(7, 7, 1, 8).unwrap(), Tri::True);
        assert_eq!(is_well_behaved(4, 3, 1, 8).unwrap(), Tri::True);
        assert_eq!(is_well_behaved(30, 29, 1, 8).unwrap(), Tri::True);
        // Strict cases decided by intervals at default precision.
        assert_eq!(is_well_behaved(3, 2, 1, 128).unwrap(), Tri::True);
        assert_eq!(is_well_behaved(2, 3, 1, 128).unwrap(), Tri::True);
        assert_eq!(is_well_behaved(4, 2, 3, 128).unwrap(), Tri::True);
        assert_eq!(is_well_behaved(3, 2, 3, 128).unwrap(), Tri::False);
        // The (4, 3, 4) triple fails well-behavedness despite satisfying
        // the three screening conditions of the case analysis.
        assert_eq!(is_well_behaved(4, 3, 4, 128).unwrap(), Tri::False);
        assert_eq!(is_well_behaved(5, 3, 4, 128).unwrap(), Tri::True);
    }

    #[test]
    fn gamma_d_values_and_domain() {
        let five = BigRational::from_integer(5.into());
        assert_contains(
            &eval_gamma_d(&five, 128).unwrap(),
            "1.38402709573368052471380402701620617576818",
        );
        let four = BigRational::from_integer(4.into());
        assert_contains(
            &eval_gamma_d(&four, 128).unwrap(),
            "1.36426160182136592958603527523961158443947",
        );
        let six = BigRational::from_integer(6.into());
        assert_contains(
            &eval_gamma_d(&six, 128).unwrap(),
            "1.38259313245478349181687817468890802807375",
        );
        // Non-integer d uses log-linear interpolation of b.
        let d = rational_from_decimal("4.24").unwrap();
        let g = eval_gamma_d(&d, 192).unwrap();
        let kappa1 = constants(192).kappa1;
        assert!(g.certified_lt(&kappa1));
        assert!(eval_gamma_d(&rational_from_decimal("1.99").unwrap(), 128).is_err());
    }

    #[test]
    fn constants_match_frozen_oracle() {
        let c = constants(192);
        assert_contains(&c.rho, "1.07456993182354191955333815670593057713708");
        assert_contains(&c.gamma, "1.38402709573368052471380402701620617576818");
        assert_contains(&c.kappa1, "1.37012798271350863588670522629347164647126");
        assert_contains(&c.log_kappa1, "0.314904153515897666929968289287593775420732");
        // γ⁴⁰ = 442368 exactly.
        let g40 = c.gamma.pow_i64(40);
        assert!(g40.contains_rational(&BigRational::from_integer(442368.into())));
        // γ > κ₁ with real room.
        assert!(c.gamma.certified_gt(&c.kappa1));
    }

    #[test]
    fn bregman_bounds_exact_and_interval() {
        // All rows equal n: the bound is exactly n! (ties with the all-ones
        // permanent).
        assert_eq!(
            bregman_bound_exact(&[4, 4, 4, 4]),
            Some(BigRational::from_integer(24.into()))
        );
        // Permutation matrix: bound 1.
        assert_eq!(
            bregman_bound_exact(&[1, 1, 1]),
            Some(BigRational::one())
        );
        // Misaligned class sizes are irrational.
        assert_eq!(bregman_bound_exact(&[2, 3]), None);
        let iv = bregman_bound(&[2, 3], 128).unwrap();
        // √2·6^(1/3) ∈ [2.569, 2.570].
        assert!(iv.certified_gt(&CertReal::from_rational(
            &rational_from_decimal("2.569").unwrap(),
            128
        )));
        assert!(iv.certified_lt(&CertReal::from_rational(
            &rational_from_decimal("2.570").unwrap(),
            128
        )));
        assert_eq!(
            bregman_bound(&[2, 0, 3], 128),
            Err(DomainError::ZeroRowSum { index: 1 })
        );
    }

    #[test]
    fn b_prime_and_a_prime() {
        assert_eq!(eval_b_prime(0), BigRational::one());
        assert_eq!(eval_b_prime(1), BigRational::one());
        assert_eq!(eval_b_prime(2), BigRational::one());
        assert_eq!(eval_b_prime(3), BigRational::new(3.into(), 2.into()));
        assert_eq!(eval_b_prime(7), BigRational::new(7.into(), 2.into()));
        assert_eq!(
            a_prime_exact(0).as_rational(),
            Some(BigRational::one())
        );
        assert_eq!(
            a_prime_exact(4).as_rational(),
            Some(BigRational::from_integer(4.into()))
        );
        assert_contains(&eval_a_prime(2, 128), "2.82842712474619009760337744841939615713934");
    }
}
