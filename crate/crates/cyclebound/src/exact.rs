//! Exact arithmetic in ℚ(ρ), the number field generated by ρ = (4/3)^(1/4).
//!
//! Several of the certified inequalities in this crate are tight: both sides
//! are equal real numbers, so no interval refinement can ever separate them.
//! Every such tie in the verified corpus lives in the quartic field
//! ℚ(ρ) = { c₀ + c₁ρ + c₂ρ² + c₃ρ³ : cᵢ ∈ ℚ }, where ρ⁴ = 4/3 — note that
//! √3 = (3/2)ρ² is in the field. [`QRho`] implements exact field arithmetic
//! so ties are decided by algebra, and near-ties by exact sign computation.
//!
//! [`RootRat`] handles the one family of ties outside ℚ(ρ): multigraph path
//! bounds of the shape q = c·√k with rational c, which are compared against
//! integers exactly by squaring.

use std::cmp::Ordering;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cert::{escalate, CertReal, Tri};

/// An element of ℚ(ρ) with ρ = (4/3)^(1/4), stored as coefficients of
/// 1, ρ, ρ², ρ³.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QRho {
    c: [BigRational; 4],
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl QRho {
    /// The zero element.
    pub fn zero() -> QRho {
        QRho {
            c: [
                BigRational::zero(),
                BigRational::zero(),
                BigRational::zero(),
                BigRational::zero(),
            ],
        }
    }

    /// Embed a rational number.
    pub fn from_rational(r: BigRational) -> QRho {
        let mut z = QRho::zero();
        z.c[0] = r;
        z
    }

    /// Embed a small rational n/d.
    pub fn from_ratio(n: i64, d: i64) -> QRho {
        QRho::from_rational(ratio(n, d))
    }

    /// The generator ρ itself.
    pub fn rho() -> QRho {
        let mut z = QRho::zero();
        z.c[1] = BigRational::one();
        z
    }

    /// Coefficient view (1, ρ, ρ², ρ³).
    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.c
    }

    /// Monomial c·ρ^k for any integer k (negative powers use
    /// ρ⁻¹ = (3/4)ρ³).
    pub fn monomial(coef: BigRational, k: i64) -> QRho {
        let mut acc = QRho::from_rational(coef);
        if k >= 0 {
            for _ in 0..k {
                acc = acc.mul(&QRho::rho());
            }
        } else {
            let rho_inv = QRho::monomial(ratio(3, 4), 3);
            for _ in 0..(-k) {
                acc = acc.mul(&rho_inv);
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, rhs: &QRho) -> QRho {
        let mut out = QRho::zero();
        for i in 0..4 {
            out.c[i] = &self.c[i] + &rhs.c[i];
        }
        out
    }

    pub fn sub(&self, rhs: &QRho) -> QRho {
        let mut out = QRho::zero();
        for i in 0..4 {
            out.c[i] = &self.c[i] - &rhs.c[i];
        }
        out
    }

    pub fn neg(&self) -> QRho {
        let mut out = QRho::zero();
        for i in 0..4 {
            out.c[i] = -self.c[i].clone();
        }
        out
    }

    /// Field product with reduction by ρ⁴ = 4/3.
    pub fn mul(&self, rhs: &QRho) -> QRho {
        let four_thirds = ratio(4, 3);
        let mut out = QRho::zero();
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if rhs.c[j].is_zero() {
                    continue;
                }
                let term = &self.c[i] * &rhs.c[j];
                let k = i + j;
                if k < 4 {
                    out.c[k] += term;
                } else {
                    out.c[k - 4] += term * &four_thirds;
                }
            }
        }
        out
    }

    pub fn scale(&self, r: &BigRational) -> QRho {
        let mut out = QRho::zero();
        for i in 0..4 {
            out.c[i] = &self.c[i] * r;
        }
        out
    }

    /// Multiplicative inverse; `None` for zero. Solves the 4×4 rational
    /// linear system given by the multiplication-by-`self` matrix.
    pub fn invert(&self) -> Option<QRho> {
        if self.is_zero() {
            return None;
        }
        // Column j of the matrix is self·ρ^j expressed in the basis.
        let mut cols = Vec::with_capacity(4);
        let mut power = self.clone();
        for _ in 0..4 {
            cols.push(power.clone());
            power = power.mul(&QRho::rho());
        }
        // Augmented system M·x = e₀ over ℚ, Gauss-Jordan.
        let mut a: Vec<Vec<BigRational>> = (0..4)
            .map(|r| {
                let mut row: Vec<BigRational> =
                    (0..4).map(|cidx| cols[cidx].c[r].clone()).collect();
                row.push(if r == 0 {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
                row
            })
            .collect();
        for col in 0..4 {
            let pivot = (col..4).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            let inv = a[col][col].recip();
            for x in a[col].iter_mut() {
                *x *= &inv;
            }
            for r in 0..4 {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    for c in 0..5 {
                        let delta = &factor * &a[col][c];
                        a[r][c] -= delta;
                    }
                }
            }
        }
        let mut out = QRho::zero();
        for r in 0..4 {
            out.c[r] = a[r][4].clone();
        }
        Some(out)
    }

    /// Exact field division.
    pub fn div(&self, rhs: &QRho) -> QRho {
        self.mul(&rhs.invert().expect("division by zero in \u{211a}(\u{3c1})"))
    }

    /// Certified enclosure of the real value.
    pub fn to_interval(&self, prec: u32) -> CertReal {
        let rho = CertReal::rho(prec);
        let mut acc = CertReal::from_rational(&self.c[0], prec);
        let mut rho_pow = CertReal::one(prec);
        for i in 1..4 {
            rho_pow = rho_pow.mul(&rho);
            if !self.c[i].is_zero() {
                let term = CertReal::from_rational(&self.c[i], prec).mul(&rho_pow);
                acc = acc.add(&term);
            }
        }
        acc
    }

    /// Exact sign of the real value. Zero is decided by the coefficients;
    /// a nonzero element is separated from zero by interval evaluation at
    /// escalating precision. Termination is guaranteed: x⁴ − 4/3 is
    /// irreducible over ℚ (equivalently 3x⁴ − 4 has no rational root and no
    /// rational quadratic factor), so a nonzero polynomial in ρ of degree
    /// at most three cannot vanish.
    pub fn sign(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let mut prec = 128u32;
        loop {
            let iv = self.to_interval(prec);
            match iv.sign_positive() {
                Tri::True => return Ordering::Greater,
                Tri::False => return Ordering::Less,
                Tri::Undecided => {
                    assert!(
                        prec < 1 << 20,
                        "sign of a provably nonzero field element did not separate"
                    );
                    prec *= 2;
                }
            }
        }
    }

    /// Exact comparison of two field elements.
    pub fn cmp(&self, rhs: &QRho) -> Ordering {
        self.sub(rhs).sign()
    }
}

/// A number of the form coef·√rad with rational coef ≥ 0 and integer
/// rad ≥ 0. Closed under comparison with nonnegative rationals by squaring;
/// this is exactly the shape of the multigraph path bounds 2√k·(rational).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootRat {
    coef: BigRational,
    rad: u64,
}

impl RootRat {
    /// Construct coef·√rad. The coefficient must be nonnegative.
    pub fn new(coef: BigRational, rad: u64) -> RootRat {
        assert!(!coef.is_negative(), "RootRat coefficient must be ≥ 0");
        RootRat { coef, rad }
    }

    /// Purely rational value (√1).
    pub fn from_rational(coef: BigRational) -> RootRat {
        RootRat::new(coef, 1)
    }

    /// The exact real value as a rational if the radicand is a perfect
    /// square (or the coefficient vanishes).
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coef.is_zero() {
            return Some(BigRational::zero());
        }
        let root = (self.rad as f64).sqrt().round() as u64;
        for cand in root.saturating_sub(1)..=root + 1 {
            if cand * cand == self.rad {
                return Some(&self.coef * BigRational::from_integer(cand.into()));
            }
        }
        None
    }

    /// Exact value squared: coef²·rad.
    pub fn squared(&self) -> BigRational {
        &self.coef * &self.coef * BigRational::from_integer(self.rad.into())
    }

    /// Exact comparison against a nonnegative rational (both sides squared).
    pub fn cmp_rational(&self, q: &BigRational) -> Ordering {
        assert!(!q.is_negative(), "comparison target must be ≥ 0");
        if self.coef.is_zero() || self.rad == 0 {
            return BigRational::zero().cmp(q);
        }
        self.squared().cmp(&(q * q))
    }

    /// Certified enclosure of the real value.
    pub fn to_interval(&self, prec: u32) -> CertReal {
        let root = CertReal::from_u64(self.rad, prec).sqrt();
        CertReal::from_rational(&self.coef, prec).mul(&root)
    }
}

/// Decide the sign of a difference `lhs − rhs` where both sides are real
/// expressions supplied as interval evaluators, with an exact fallback for
/// the case where the caller knows the difference is an element of ℚ(ρ).
/// Escalation runs `lo..=hi` precision doubling first; on exhaustion the
/// exact element decides.
pub fn sign_with_exact_fallback(
    mut interval_diff: impl FnMut(u32) -> CertReal,
    exact_diff: Option<&QRho>,
    start_prec: u32,
    max_prec: u32,
) -> Ordering {
    let mut decided = Ordering::Equal;
    let verdict = escalate(start_prec, max_prec, |p| {
        let iv = interval_diff(p);
        match iv.sign_positive() {
            Tri::True => {
                decided = Ordering::Greater;
                Tri::True
            }
            Tri::False => {
                decided = Ordering::Less;
                Tri::True
            }
            Tri::Undecided => Tri::Undecided,
        }
    });
    if verdict.is_true() {
        return decided;
    }
    match exact_diff {
        Some(q) => q.sign(),
        None => panic!("sign undecided at max precision and no exact form available"),
    }
}

/// Parse a rational number from either a decimal literal ("4.24") or a
/// fraction ("106/25").
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational literal".to_string());
    }
    if let Some((n, d)) = s.split_once('/') {
        let numer = BigInt::from_str(n.trim()).map_err(|e| format!("bad numerator: {e}"))?;
        let denom = BigInt::from_str(d.trim()).map_err(|e| format!("bad denominator: {e}"))?;
        if denom.is_zero() {
            return Err("zero denominator".to_string());
        }
        return Ok(BigRational::new(numer, denom));
    }
    rational_from_decimal(s)
}

/// Parse a plain decimal literal into an exact rational.
pub fn rational_from_decimal(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1i32, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(format!("not a decimal literal: {s:?}"));
    }
    let digits = format!(
        "{}{}",
        if int_part.is_empty() { "0" } else { int_part },
        frac_part
    );
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("not a decimal literal: {s:?}"));
    }
    let numer = BigInt::from_str(&digits).map_err(|e| e.to_string())?;
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    Ok(BigRational::new(numer * BigInt::from(sign), denom))
}
