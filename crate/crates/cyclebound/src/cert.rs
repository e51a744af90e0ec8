//! Certified interval arithmetic over arbitrary-precision dyadic endpoints.
//!
//! A [`CertReal`] is a closed interval `[lo, hi]` whose endpoints are
//! arbitrary-precision binary floats. Every operation rounds the lower
//! endpoint toward −∞ and the upper endpoint toward +∞, so the result
//! interval always encloses the exact real value. Transcendental kernels
//! (`ln`, `exp`, and the constants π and e) receive an extra one-ulp outward
//! nudge on top of directed rounding, so a rounding defect in the last place
//! of the kernel cannot puncture the enclosure.
//!
//! Comparisons are three-valued ([`Tri`]): an inequality is reported `True`
//! or `False` only when the intervals are disjoint in the relevant order;
//! overlapping intervals yield `Undecided`, which signals the caller to
//! re-evaluate at higher precision (see [`escalate`]) or fall back to an
//! exact method. `Undecided` is never silently coerced to a boolean.

use std::cell::RefCell;
use std::cmp::Ordering;

use astro_float::{BigFloat, Consts, Exponent, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Default working precision, in bits, for interval endpoints.
pub const DEFAULT_PREC: u32 = 128;

/// Default ceiling for automatic precision escalation.
pub const MAX_PREC: u32 = 1024;

/// Smallest usable working precision. Deliberately tiny so that very low
/// precision settings genuinely produce wide intervals (and therefore honest
/// `Undecided` verdicts) instead of being silently clamped to something
/// comfortable.
pub const MIN_PREC: u32 = 8;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(
        Consts::new().expect("transcendental constants cache"),
    );
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Three-valued verdict of a certified comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tri {
    /// The relation holds for every pair of representatives.
    True,
    /// The relation fails for every pair of representatives.
    False,
    /// The intervals overlap; the comparison cannot be certified at this
    /// precision.
    Undecided,
}

impl Tri {
    /// `true` exactly when the verdict is [`Tri::True`].
    pub fn is_true(self) -> bool {
        self == Tri::True
    }

    /// `true` exactly when the verdict is [`Tri::Undecided`].
    pub fn is_undecided(self) -> bool {
        self == Tri::Undecided
    }

    /// Logical negation (`Undecided` stays `Undecided`).
    pub fn not(self) -> Tri {
        match self {
            Tri::True => Tri::False,
            Tri::False => Tri::True,
            Tri::Undecided => Tri::Undecided,
        }
    }

    /// Three-valued conjunction: `False` dominates, then `Undecided`.
    pub fn and(self, other: Tri) -> Tri {
        match (self, other) {
            (Tri::False, _) | (_, Tri::False) => Tri::False,
            (Tri::Undecided, _) | (_, Tri::Undecided) => Tri::Undecided,
            _ => Tri::True,
        }
    }

    /// Lift an exact (already decided) comparison into the verdict type.
    pub fn from_bool(decided: bool) -> Tri {
        if decided {
            Tri::True
        } else {
            Tri::False
        }
    }
}

/// Re-evaluate a three-valued predicate at doubling precision until it
/// decides or the ceiling is reached. Returns the final verdict (possibly
/// still `Undecided` at `max_prec`).
pub fn escalate(start_prec: u32, max_prec: u32, mut pred: impl FnMut(u32) -> Tri) -> Tri {
    let mut prec = start_prec.max(8);
    loop {
        let verdict = pred(prec);
        if !verdict.is_undecided() || prec >= max_prec {
            return verdict;
        }
        prec = (prec * 2).min(max_prec);
    }
}

/// A certified enclosure of a real number: a closed interval with
/// arbitrary-precision dyadic endpoints and outward-rounded arithmetic.
#[derive(Debug, Clone)]
pub struct CertReal {
    lo: BigFloat,
    hi: BigFloat,
    prec: u32,
}

fn cmp_bf(a: &BigFloat, b: &BigFloat) -> Ordering {
    a.partial_cmp(b).expect("interval endpoints are finite")
}

/// Exact dyadic value 2^k as a one-word float.
fn pow2(k: i64) -> BigFloat {
    // Mantissa 0.1₂ scaled by 2^(k+1) gives exactly 2^k.
    let e = i32::try_from(k + 1).expect("dyadic exponent in range");
    BigFloat::from_words(&[1u64 << 63], Sign::Pos, e as Exponent)
}

fn exponent_of(x: &BigFloat) -> i64 {
    match x.as_raw_parts() {
        Some((_, _, _, e, _)) => e as i64,
        None => 0,
    }
}

/// Nudge one ulp outward in the given direction; used to pad transcendental
/// kernel results whose last place is not trusted.
fn nudge(x: &BigFloat, prec: usize, rm: RoundingMode) -> BigFloat {
    let e = if x.is_zero() {
        -(prec as i64)
    } else {
        exponent_of(x) - prec as i64
    };
    let ulp = pow2(e);
    match rm {
        RoundingMode::Up => x.add(&ulp, prec, RoundingMode::Up),
        RoundingMode::Down => x.sub(&ulp, prec, RoundingMode::Down),
        _ => unreachable!("directed rounding only"),
    }
}

fn pad_if_inexact(x: BigFloat, prec: usize, rm: RoundingMode) -> BigFloat {
    if x.inexact() {
        nudge(&x, prec, rm)
    } else {
        x
    }
}

fn biguint_to_bigfloat(n: &BigUint, sign: Sign) -> BigFloat {
    if n.is_zero() {
        return BigFloat::from_u64(0, 64);
    }
    let words = n.to_u64_digits();
    let e = i32::try_from(64 * words.len()).expect("integer exponent in range");
    BigFloat::from_words(&words, sign, e as Exponent)
}

fn bigint_to_bigfloat(n: &BigInt) -> BigFloat {
    let sign = if n.sign() == num_bigint::Sign::Minus {
        Sign::Neg
    } else {
        Sign::Pos
    };
    biguint_to_bigfloat(n.magnitude(), sign)
}

/// Exact rational value of a finite dyadic float.
fn bigfloat_to_rational(x: &BigFloat) -> BigRational {
    if x.is_zero() {
        return BigRational::zero();
    }
    let (words, _, sign, e, _) = x.as_raw_parts().expect("finite endpoint");
    let mut mantissa = BigUint::zero();
    for &w in words.iter().rev() {
        mantissa = (mantissa << 64) | BigUint::from(w);
    }
    let mut value = BigRational::from_integer(BigInt::from(mantissa));
    let shift = e as i64 - 64 * words.len() as i64;
    value *= pow2_rational(shift);
    if sign == Sign::Neg {
        -value
    } else {
        value
    }
}

fn pow2_rational(k: i64) -> BigRational {
    let mag = BigInt::one() << k.unsigned_abs() as usize;
    if k >= 0 {
        BigRational::from_integer(mag)
    } else {
        BigRational::new(BigInt::one(), mag)
    }
}

impl CertReal {
    /// Requested working precision in bits.
    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// Exact point interval holding an unsigned 64-bit integer.
    pub fn from_u64(x: u64, prec: u32) -> CertReal {
        let v = BigFloat::from_u64(x, prec.max(64) as usize);
        CertReal {
            lo: v.clone(),
            hi: v,
            prec,
        }
    }

    /// Exact point interval holding an arbitrary-precision integer. The
    /// endpoints carry the full integer, whatever its bit length; subsequent
    /// operations round back to working precision.
    pub fn from_bigint(x: &BigInt, prec: u32) -> CertReal {
        let v = bigint_to_bigfloat(x);
        CertReal {
            lo: v.clone(),
            hi: v,
            prec,
        }
    }

    /// Tightest representable enclosure of a rational number.
    pub fn from_rational(r: &BigRational, prec: u32) -> CertReal {
        let p = prec.max(MIN_PREC) as usize;
        let num = bigint_to_bigfloat(r.numer());
        let den = bigint_to_bigfloat(r.denom());
        CertReal {
            lo: num.div(&den, p, RoundingMode::Down),
            hi: num.div(&den, p, RoundingMode::Up),
            prec,
        }
    }

    /// Exact zero.
    pub fn zero(prec: u32) -> CertReal {
        CertReal::from_u64(0, prec)
    }

    /// Exact one.
    pub fn one(prec: u32) -> CertReal {
        CertReal::from_u64(1, prec)
    }

    /// Exact factorial k! as a point interval.
    pub fn factorial(k: u64, prec: u32) -> CertReal {
        CertReal::from_bigint(&BigInt::from(factorial(k)), prec)
    }

    /// Lower endpoint as an exact rational.
    pub fn lo_rational(&self) -> BigRational {
        bigfloat_to_rational(&self.lo)
    }

    /// Upper endpoint as an exact rational.
    pub fn hi_rational(&self) -> BigRational {
        bigfloat_to_rational(&self.hi)
    }

    /// Exact interval width `hi − lo`.
    pub fn width(&self) -> BigRational {
        self.hi_rational() - self.lo_rational()
    }

    /// Exact midpoint `(lo + hi) / 2`.
    pub fn mid_rational(&self) -> BigRational {
        (self.hi_rational() + self.lo_rational()) / BigRational::from_integer(2.into())
    }

    /// Whether the interval is a single dyadic point.
    pub fn is_point(&self) -> bool {
        cmp_bf(&self.lo, &self.hi) == Ordering::Equal
    }

    /// Whether the exact rational `r` lies inside the enclosure.
    pub fn contains_rational(&self, r: &BigRational) -> bool {
        &self.lo_rational() <= r && r <= &self.hi_rational()
    }

    fn working(&self, rhs: &CertReal) -> usize {
        self.prec.max(rhs.prec).max(MIN_PREC) as usize
    }

    /// Interval sum.
    pub fn add(&self, rhs: &CertReal) -> CertReal {
        let p = self.working(rhs);
        CertReal {
            lo: self.lo.add(&rhs.lo, p, RoundingMode::Down),
            hi: self.hi.add(&rhs.hi, p, RoundingMode::Up),
            prec: self.prec.max(rhs.prec),
        }
    }

    /// Interval difference.
    pub fn sub(&self, rhs: &CertReal) -> CertReal {
        let p = self.working(rhs);
        CertReal {
            lo: self.lo.sub(&rhs.hi, p, RoundingMode::Down),
            hi: self.hi.sub(&rhs.lo, p, RoundingMode::Up),
            prec: self.prec.max(rhs.prec),
        }
    }

    /// Interval negation (exact).
    pub fn neg(&self) -> CertReal {
        CertReal {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
            prec: self.prec,
        }
    }

    /// Interval product. Sound for any sign combination: each candidate
    /// endpoint product is rounded in the direction it contributes to.
    pub fn mul(&self, rhs: &CertReal) -> CertReal {
        let p = self.working(rhs);
        let pairs = [
            (&self.lo, &rhs.lo),
            (&self.lo, &rhs.hi),
            (&self.hi, &rhs.lo),
            (&self.hi, &rhs.hi),
        ];
        let mut lo: Option<BigFloat> = None;
        let mut hi: Option<BigFloat> = None;
        for (a, b) in pairs {
            let down = a.mul(b, p, RoundingMode::Down);
            let up = a.mul(b, p, RoundingMode::Up);
            lo = Some(match lo {
                Some(cur) if cmp_bf(&cur, &down) != Ordering::Greater => cur,
                _ => down,
            });
            hi = Some(match hi {
                Some(cur) if cmp_bf(&cur, &up) != Ordering::Less => cur,
                _ => up,
            });
        }
        CertReal {
            lo: lo.unwrap(),
            hi: hi.unwrap(),
            prec: self.prec.max(rhs.prec),
        }
    }

    /// Interval quotient. The divisor must be certified sign-definite
    /// (its enclosure must not contain zero).
    pub fn div(&self, rhs: &CertReal) -> CertReal {
        let zero = BigFloat::from_u64(0, 64);
        let rhs_pos = cmp_bf(&rhs.lo, &zero) == Ordering::Greater;
        let rhs_neg = cmp_bf(&rhs.hi, &zero) == Ordering::Less;
        assert!(
            rhs_pos || rhs_neg,
            "interval division requires a sign-definite divisor"
        );
        let p = self.working(rhs);
        let pairs = [
            (&self.lo, &rhs.lo),
            (&self.lo, &rhs.hi),
            (&self.hi, &rhs.lo),
            (&self.hi, &rhs.hi),
        ];
        let mut lo: Option<BigFloat> = None;
        let mut hi: Option<BigFloat> = None;
        for (a, b) in pairs {
            let down = a.div(b, p, RoundingMode::Down);
            let up = a.div(b, p, RoundingMode::Up);
            lo = Some(match lo {
                Some(cur) if cmp_bf(&cur, &down) != Ordering::Greater => cur,
                _ => down,
            });
            hi = Some(match hi {
                Some(cur) if cmp_bf(&cur, &up) != Ordering::Less => cur,
                _ => up,
            });
        }
        CertReal {
            lo: lo.unwrap(),
            hi: hi.unwrap(),
            prec: self.prec.max(rhs.prec),
        }
    }

    /// Multiplicative inverse of a sign-definite interval.
    pub fn recip(&self) -> CertReal {
        CertReal::one(self.prec).div(self)
    }

    /// Interval square root. Requires `lo ≥ 0`.
    pub fn sqrt(&self) -> CertReal {
        let zero = BigFloat::from_u64(0, 64);
        assert!(
            cmp_bf(&self.lo, &zero) != Ordering::Less,
            "square root requires a nonnegative interval"
        );
        let p = self.prec.max(MIN_PREC) as usize;
        CertReal {
            lo: pad_if_inexact(self.lo.sqrt(p, RoundingMode::Down), p, RoundingMode::Down),
            hi: pad_if_inexact(self.hi.sqrt(p, RoundingMode::Up), p, RoundingMode::Up),
            prec: self.prec,
        }
    }

    /// Interval natural logarithm. Requires `lo > 0`.
    pub fn ln(&self) -> CertReal {
        let zero = BigFloat::from_u64(0, 64);
        assert!(
            cmp_bf(&self.lo, &zero) == Ordering::Greater,
            "logarithm requires a strictly positive interval"
        );
        let p = self.prec.max(MIN_PREC) as usize;
        let lo = with_consts(|cc| self.lo.ln(p, RoundingMode::Down, cc));
        let hi = with_consts(|cc| self.hi.ln(p, RoundingMode::Up, cc));
        CertReal {
            lo: pad_if_inexact(lo, p, RoundingMode::Down),
            hi: pad_if_inexact(hi, p, RoundingMode::Up),
            prec: self.prec,
        }
    }

    /// Interval exponential.
    pub fn exp(&self) -> CertReal {
        let p = self.prec.max(MIN_PREC) as usize;
        let lo = with_consts(|cc| self.lo.exp(p, RoundingMode::Down, cc));
        let hi = with_consts(|cc| self.hi.exp(p, RoundingMode::Up, cc));
        CertReal {
            lo: pad_if_inexact(lo, p, RoundingMode::Down),
            hi: pad_if_inexact(hi, p, RoundingMode::Up),
            prec: self.prec,
        }
    }

    /// Enclosure of π.
    pub fn pi(prec: u32) -> CertReal {
        let p = prec.max(MIN_PREC) as usize;
        let lo = with_consts(|cc| cc.pi(p, RoundingMode::Down));
        let hi = with_consts(|cc| cc.pi(p, RoundingMode::Up));
        CertReal {
            lo: pad_if_inexact(lo, p, RoundingMode::Down),
            hi: pad_if_inexact(hi, p, RoundingMode::Up),
            prec,
        }
    }

    /// Enclosure of Euler's number e.
    pub fn euler(prec: u32) -> CertReal {
        let p = prec.max(MIN_PREC) as usize;
        let lo = with_consts(|cc| cc.e(p, RoundingMode::Down));
        let hi = with_consts(|cc| cc.e(p, RoundingMode::Up));
        CertReal {
            lo: pad_if_inexact(lo, p, RoundingMode::Down),
            hi: pad_if_inexact(hi, p, RoundingMode::Up),
            prec,
        }
    }

    /// Integer power by interval square-and-multiply.
    pub fn pow_i64(&self, n: i64) -> CertReal {
        if n < 0 {
            return self.pow_i64(-n).recip();
        }
        let mut result = CertReal::one(self.prec);
        let mut base = self.clone();
        let mut e = n as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// n-th root of a positive interval. Exact square-root chains are used
    /// for n ∈ {1, 2, 4}; otherwise exp(ln(x)/n).
    pub fn root_u64(&self, n: u64) -> CertReal {
        assert!(n >= 1, "root order must be positive");
        match n {
            1 => self.clone(),
            2 => self.sqrt(),
            4 => self.sqrt().sqrt(),
            _ => {
                let inv = BigRational::new(BigInt::one(), BigInt::from(n));
                self.pow_rational(&inv)
            }
        }
    }

    /// Rational power of a positive interval: integer exponents go through
    /// square-and-multiply, reciprocals of {2,4} through square-root chains,
    /// and the general case through exp(r·ln x).
    pub fn pow_rational(&self, r: &BigRational) -> CertReal {
        if r.is_zero() {
            return CertReal::one(self.prec);
        }
        if r.is_integer() {
            let n = r
                .to_integer()
                .to_i64()
                .expect("practical integer exponents fit in i64");
            return self.pow_i64(n);
        }
        if r.numer().is_one() {
            if let Some(d) = r.denom().to_u64() {
                if d == 2 || d == 4 {
                    return self.root_u64(d);
                }
            }
        }
        let scale = CertReal::from_rational(r, self.prec);
        self.ln().mul(&scale).exp()
    }

    /// Enclosure of ρ = (4/3)^(1/4), the growth constant of the weight
    /// sequence.
    pub fn rho(prec: u32) -> CertReal {
        let four_thirds = BigRational::new(BigInt::from(4), BigInt::from(3));
        CertReal::from_rational(&four_thirds, prec).root_u64(4)
    }

    /// Smallest of two intervals' lower endpoints and largest of their upper
    /// endpoints: the interval hull.
    pub fn hull(&self, rhs: &CertReal) -> CertReal {
        let lo = if cmp_bf(&self.lo, &rhs.lo) == Ordering::Greater {
            rhs.lo.clone()
        } else {
            self.lo.clone()
        };
        let hi = if cmp_bf(&self.hi, &rhs.hi) == Ordering::Less {
            rhs.hi.clone()
        } else {
            self.hi.clone()
        };
        CertReal {
            lo,
            hi,
            prec: self.prec.max(rhs.prec),
        }
    }

    /// Certified `self < rhs`.
    pub fn cmp_lt(&self, rhs: &CertReal) -> Tri {
        if cmp_bf(&self.hi, &rhs.lo) == Ordering::Less {
            Tri::True
        } else if cmp_bf(&self.lo, &rhs.hi) != Ordering::Less {
            Tri::False
        } else {
            Tri::Undecided
        }
    }

    /// Certified `self ≤ rhs`.
    pub fn cmp_le(&self, rhs: &CertReal) -> Tri {
        if cmp_bf(&self.hi, &rhs.lo) != Ordering::Greater {
            Tri::True
        } else if cmp_bf(&self.lo, &rhs.hi) == Ordering::Greater {
            Tri::False
        } else {
            Tri::Undecided
        }
    }

    /// Certified `self > rhs`.
    pub fn cmp_gt(&self, rhs: &CertReal) -> Tri {
        rhs.cmp_lt(self)
    }

    /// Certified `self ≥ rhs`.
    pub fn cmp_ge(&self, rhs: &CertReal) -> Tri {
        rhs.cmp_le(self)
    }

    /// Certified sign of the enclosed value: `True` = strictly positive,
    /// `False` = strictly negative (zero in the interior stays undecided).
    pub fn sign_positive(&self) -> Tri {
        self.cmp_gt(&CertReal::zero(self.prec))
    }

    /// `true` only when `self < rhs` is certified.
    pub fn certified_lt(&self, rhs: &CertReal) -> bool {
        self.cmp_lt(rhs).is_true()
    }

    /// `true` only when `self ≤ rhs` is certified.
    pub fn certified_le(&self, rhs: &CertReal) -> bool {
        self.cmp_le(rhs).is_true()
    }

    /// `true` only when `self > rhs` is certified.
    pub fn certified_gt(&self, rhs: &CertReal) -> bool {
        self.cmp_gt(rhs).is_true()
    }

    /// `true` only when `self ≥ rhs` is certified.
    pub fn certified_ge(&self, rhs: &CertReal) -> bool {
        self.cmp_ge(rhs).is_true()
    }

    /// Decimal rendering of both endpoints: the lower endpoint rounded
    /// toward −∞ and the upper toward +∞, so the printed strings still
    /// bracket the true value.
    pub fn decimal_bounds(&self, sig_digits: usize) -> (String, String) {
        (
            decimal_string(&self.lo_rational(), sig_digits, false),
            decimal_string(&self.hi_rational(), sig_digits, true),
        )
    }
}

/// k! as an arbitrary-precision integer.
pub fn factorial(k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=k {
        acc *= BigUint::from(i);
    }
    acc
}

/// Binomial coefficient C(n, k) as an arbitrary-precision integer.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Deterministic decimal rendering of an exact rational with directed
/// rounding: `round_up = false` rounds toward −∞, `true` toward +∞.
/// Values with moderate magnitude print in plain positional form; extreme
/// magnitudes switch to scientific notation. The output depends only on the
/// rational value, the digit count, and the direction.
pub fn decimal_string(r: &BigRational, sig_digits: usize, round_up: bool) -> String {
    let sig = sig_digits.max(1);
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let mag = r.abs();

    // Decimal exponent: the unique e10 with 10^(e10-1) ≤ mag < 10^e10.
    let ten = BigRational::from_integer(10.into());
    let mut e10: i64 = 0;
    let mut probe = BigRational::one();
    if mag >= BigRational::one() {
        while probe <= mag {
            probe *= &ten;
            e10 += 1;
        }
    } else {
        while probe > mag.clone() {
            probe /= &ten;
            e10 -= 1;
        }
        e10 += 1;
    }

    // Scale so that exactly `sig` integer digits remain, then round in the
    // requested real-line direction (flipped for negative values).
    let shift = sig as i64 - e10;
    let scaled = mag * pow10_rational(shift);
    let floor = scaled.floor().to_integer();
    let is_exact = scaled.is_integer();
    let toward_larger_magnitude = round_up != neg;
    let mut digits_int = if toward_larger_magnitude && !is_exact {
        floor + BigInt::one()
    } else {
        floor
    };

    // Rounding can carry into an extra digit (e.g. 9.99… → 10.0…).
    let limit = BigInt::from(10u32).pow(sig as u32);
    let mut e10 = e10;
    if digits_int >= limit {
        digits_int /= BigInt::from(10u32);
        e10 += 1;
    }
    let digits = digits_int.to_string();
    debug_assert_eq!(digits.len(), sig);

    let sign = if neg { "-" } else { "" };
    if e10 > 21 || e10 < -4 {
        // Scientific: d.ddd…e±k with k = e10 − 1.
        let (head, tail) = digits.split_at(1);
        let exp = e10 - 1;
        if tail.is_empty() {
            format!("{sign}{head}e{exp}")
        } else {
            format!("{sign}{head}.{tail}e{exp}")
        }
    } else if e10 <= 0 {
        // 0.000ddd…
        let zeros = "0".repeat((-e10) as usize);
        format!("{sign}0.{zeros}{digits}")
    } else if (e10 as usize) >= sig {
        // Integer part only, padded with zeros.
        let zeros = "0".repeat(e10 as usize - sig);
        format!("{sign}{digits}{zeros}")
    } else {
        let (int_part, frac_part) = digits.split_at(e10 as usize);
        format!("{sign}{int_part}.{frac_part}")
    }
}

fn pow10_rational(k: i64) -> BigRational {
    let mag = BigInt::from(10u32).pow(k.unsigned_abs() as u32);
    if k >= 0 {
        BigRational::from_integer(mag)
    } else {
        BigRational::new(BigInt::one(), mag)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rational_from_decimal(s: &str) -> BigRational {
        crate::exact::rational_from_decimal(s).unwrap()
    }

    const RHO_40: &str = "1.07456993182354191955333815670593057713708";

    #[test]
    fn rho_encloses_frozen_value_and_is_tight() {
        for prec in [128u32, 256, 512] {
            let rho = CertReal::rho(prec);
            let truth = rational_from_decimal(RHO_40);
            assert!(rho.contains_rational(&truth));
            // Width bound: far tighter than the 2^(−prec/2) contract.
            let width = rho.width();
            let bound = pow2_rational(-((prec / 2) as i64));
            assert!(width < bound, "width {width} too wide at prec {prec}");
        }
    }

    #[test]
    fn directed_rounding_brackets_strictly_for_irrationals() {
        let two = CertReal::from_u64(2, 128);
        let r = two.sqrt();
        assert!(cmp_bf(&r.lo, &r.hi) == Ordering::Less);
        // √2 squared must still contain 2.
        let sq = r.mul(&r);
        assert!(sq.contains_rational(&BigRational::from_integer(2.into())));
        // ln(exp(1)) contains 1.
        let e = CertReal::one(128).exp();
        assert!(e.ln().contains_rational(&BigRational::one()));
    }

    #[test]
    fn exact_integers_stay_points() {
        let f = CertReal::factorial(20, 128);
        assert!(f.is_point());
        let expect = BigRational::from_integer(BigInt::from(2432902008176640000u64));
        assert_eq!(f.lo_rational(), expect);
        // Sums and products of exact dyadics stay exact.
        let s = f.add(&CertReal::one(128));
        assert!(s.is_point());
    }

    #[test]
    fn rational_roundtrip_is_exact_for_dyadics() {
        let r = BigRational::new(BigInt::from(7), BigInt::from(32));
        let iv = CertReal::from_rational(&r, 128);
        assert!(iv.is_point());
        assert_eq!(iv.lo_rational(), r);
        // Non-dyadic rationals bracket strictly.
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        let iv = CertReal::from_rational(&third, 128);
        assert!(!iv.is_point());
        assert!(iv.contains_rational(&third));
    }

    #[test]
    fn tri_state_comparisons() {
        let a = CertReal::from_u64(2, 128);
        let b = CertReal::from_u64(3, 128);
        assert_eq!(a.cmp_lt(&b), Tri::True);
        assert_eq!(b.cmp_lt(&a), Tri::False);
        assert_eq!(a.cmp_le(&a), Tri::True);
        // Overlapping intervals: √2·√2 vs exact 2 cannot be decided.
        let sq = a.sqrt().mul(&a.sqrt());
        assert_eq!(sq.cmp_lt(&a), Tri::Undecided);
        assert_eq!(sq.cmp_gt(&a), Tri::Undecided);
    }

    #[test]
    fn escalation_decides_thin_separations() {
        // 3^(1/3) vs 1.44224957030740838232163831078 〈truncated〉:
        // the separation is ~1e-30, undecidable at 64 bits of the literal's
        // enclosure but certified once precision doubles far enough.
        let target = rational_from_decimal("1.442249570307408382321638310780");
        let verdict = escalate(64, 1024, |p| {
            let three = CertReal::from_u64(3, p);
            let root = three.pow_rational(&BigRational::new(1.into(), 3.into()));
            root.cmp_gt(&CertReal::from_rational(&target, p))
        });
        assert_eq!(verdict, Tri::True);
    }

    #[test]
    fn factorial_and_binomial_helpers() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(binomial(33, 3), BigUint::from(5456u32));
        assert_eq!(binomial(10, 0), BigUint::one());
        assert_eq!(binomial(5, 7), BigUint::zero());
    }

    #[test]
    fn decimal_rendering_is_directed_and_stable() {
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert_eq!(decimal_string(&third, 6, false), "0.333333");
        assert_eq!(decimal_string(&third, 6, true), "0.333334");
        let neg_third = -third;
        assert_eq!(decimal_string(&neg_third, 6, false), "-0.333334");
        assert_eq!(decimal_string(&neg_third, 6, true), "-0.333333");
        let two = BigRational::from_integer(2.into());
        assert_eq!(decimal_string(&two, 6, false), "2.00000");
        assert_eq!(decimal_string(&two, 6, true), "2.00000");
        let tiny = BigRational::new(BigInt::from(1), BigInt::from(100000000i64));
        assert_eq!(decimal_string(&tiny, 3, false), "1.00e-8");
        let big = BigRational::from_integer(BigInt::from(10u32).pow(25));
        assert_eq!(decimal_string(&big, 3, true), "1.00e25");
        // Carry across a digit boundary.
        let near_ten = rational_from_decimal("9.999999");
        assert_eq!(decimal_string(&near_ten, 3, true), "10.0");
    }

    #[test]
    fn pow_and_root_agree() {
        let x = CertReal::from_u64(5, 192);
        let via_root = x.root_u64(3).pow_i64(3);
        assert!(via_root.contains_rational(&BigRational::from_integer(5.into())));
        let via_pow = x.pow_rational(&BigRational::new(2.into(), 3.into()));
        let squared = via_pow.mul(&via_pow).mul(&via_pow);
        assert!(squared.contains_rational(&BigRational::from_integer(25.into())));
    }

    #[test]
    fn pi_and_e_enclosures() {
        let pi = CertReal::pi(128);
        assert!(pi.contains_rational(&rational_from_decimal(
            "3.14159265358979323846264338327950288419717"
        )));
        let e = CertReal::euler(128);
        assert!(e.contains_rational(&rational_from_decimal(
            "2.71828182845904523536028747135266249775725"
        )));
    }
}
