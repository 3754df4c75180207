//! Laurent polynomials `ZZ[t, t^-1]` and formal quotients of them.
//!
//! [`LaurentPoly`] is a sparse map exponent → coefficient with arbitrary
//! precision integer coefficients.
//!
//! Invariants:
//! - No exponent maps to a zero coefficient (zero is the empty map).
//! - All arithmetic is exact; there is no floating point anywhere.
//!
//! [`RationalFn`] is a formal fraction of two Laurent polynomials with a
//! nonzero denominator. Fractions are *not* reduced to lowest terms; equality
//! is decided by cross-multiplication, which keeps arithmetic cheap and exact.
//! The quantum integer `[2] = t + t^-1` and the bar involution `t ↦ t^-1` are
//! first-class citizens since everything downstream is phrased in them.

use crate::error::{Error, Result};
use num::{BigInt, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Sparse Laurent polynomial with `BigInt` coefficients.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial (empty term map).
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        LaurentPoly::monomial(0, BigInt::one())
    }

    /// `c * t^k`; dropped entirely if `c = 0`.
    pub fn monomial(exp: i64, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// `t^k`.
    pub fn t_pow(exp: i64) -> Self {
        LaurentPoly::monomial(exp, BigInt::one())
    }

    /// Constant polynomial from an integer.
    pub fn from_int(c: i64) -> Self {
        LaurentPoly::monomial(0, BigInt::from(c))
    }

    /// The quantum integer `[2] = t + t^-1`.
    pub fn quantum_two() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(1, BigInt::one());
        terms.insert(-1, BigInt::one());
        LaurentPoly { terms }
    }

    /// `[2]^m`.
    pub fn quantum_two_pow(m: usize) -> Self {
        let mut acc = LaurentPoly::one();
        let two = LaurentPoly::quantum_two();
        for _ in 0..m {
            acc = acc.mul(&two);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Coefficient of `t^exp` (zero when absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterate `(exponent, coefficient)` in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    /// Lowest exponent present, if any.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest exponent present, if any.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn insert_add(terms: &mut BTreeMap<i64, BigInt>, exp: i64, delta: BigInt) {
        if delta.is_zero() {
            return;
        }
        let entry = terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += delta;
        if entry.is_zero() {
            terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (&e, c) in &other.terms {
            Self::insert_add(&mut terms, e, c.clone());
        }
        LaurentPoly { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                Self::insert_add(&mut terms, e1 + e2, c1 * c2);
            }
        }
        LaurentPoly { terms }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&e, k)| (e, k * c)).collect() }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn pow(&self, m: usize) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..m {
            acc = acc.mul(self);
        }
        acc
    }

    /// The bar involution `t ↦ t^-1`.
    pub fn bar(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    /// Serialize as a JSON object `{ "exponent": "coefficient" }` with string
    /// keys and string values (coefficients may exceed f64 range).
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| (e.to_string(), serde_json::Value::String(c.to_string())))
            .collect();
        serde_json::Value::Object(map)
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Serde("expected a JSON object for a Laurent polynomial".into()))?;
        let mut terms = BTreeMap::new();
        for (k, v) in obj {
            let exp: i64 = k
                .parse()
                .map_err(|_| Error::Serde(format!("bad exponent key {k:?}")))?;
            let raw = v
                .as_str()
                .ok_or_else(|| Error::Serde(format!("coefficient for t^{exp} must be a string")))?;
            let coeff: BigInt = raw
                .parse()
                .map_err(|_| Error::Serde(format!("bad coefficient {raw:?}")))?;
            if !coeff.is_zero() {
                terms.insert(exp, coeff);
            }
        }
        Ok(LaurentPoly { terms })
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.terms {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one();
            match (e, unit_coeff) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Formal quotient `num/den` of Laurent polynomials, `den ≠ 0`.
///
/// Not reduced; equality is cross-multiplication. This is exactly the right
/// shape for trace values like `t^n [2]^m / (1 - t^2)`: the denominators stay
/// tiny and structured, so reduction would buy nothing.
#[derive(Debug, Clone)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidWord("zero denominator in rational function".into()));
        }
        Ok(RationalFn { num, den })
    }

    pub fn zero() -> Self {
        RationalFn { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RationalFn { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFn { num: p, den: LaurentPoly::one() }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        // Shared denominators stay shared: the sums that arise here are
        // overwhelmingly of trace values over a common (1 - t^2)[2]^k.
        if self.den == other.den {
            return RationalFn { num: self.num.add(&other.num), den: self.den.clone() };
        }
        RationalFn {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFn { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalFn { num: self.num.mul(&other.num), den: self.den.mul(&other.den) }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        RationalFn { num: self.num.mul(p), den: self.den.clone() }
    }

    /// Bar involution applied to numerator and denominator.
    pub fn bar(&self) -> Self {
        RationalFn { num: self.num.bar(), den: self.den.bar() }
    }

    /// Coefficients of the Laurent-series expansion on the window
    /// `t^-max_degree ..= t^max_degree`, indexed so that slot `i` holds the
    /// coefficient of `t^(i - max_degree)`.
    ///
    /// The denominator must factor as `±t^v · (1 ∓ ...)`, i.e. its lowest
    /// coefficient must be a unit of `ZZ`; anything else cannot be inverted as
    /// an integer power series and is rejected.
    pub fn series_prefix(&self, max_degree: usize) -> Result<Vec<BigInt>> {
        let d = max_degree as i64;
        if self.num.is_zero() {
            return Ok(vec![BigInt::zero(); 2 * max_degree + 1]);
        }
        let v = self.den.min_exp().expect("nonzero denominator has a lowest term");
        let lead = self.den.coeff(v);
        if !lead.abs().is_one() {
            return Err(Error::SeriesExpansion(format!(
                "denominator's lowest term {lead}t^{v} is not a unit times a power of t"
            )));
        }
        // q = den / (lead * t^v) has constant term 1; invert it as a power
        // series far enough to cover the requested window.
        let q = self.den.shift(-v).scale(&(BigInt::one() / &lead));
        let n_min = self.num.min_exp().expect("nonzero numerator");
        let needed = d + v - n_min;
        let mut inv: Vec<BigInt> = Vec::new();
        if needed >= 0 {
            let needed = needed as usize;
            inv.push(BigInt::one());
            for j in 1..=needed {
                // inv[j] = -sum_{s=1..j} q_s inv[j-s]
                let mut acc = BigInt::zero();
                for s in 1..=j {
                    let qs = q.coeff(s as i64);
                    if !qs.is_zero() {
                        acc += qs * &inv[j - s];
                    }
                }
                inv.push(-acc);
            }
        }
        let mut out = vec![BigInt::zero(); 2 * max_degree + 1];
        for (slot, item) in out.iter_mut().enumerate() {
            let e = slot as i64 - d;
            // coefficient of t^e in num * inv * lead^{-1} * t^{-v}
            let mut acc = BigInt::zero();
            for (&a, ca) in self.num.iter() {
                let idx = e + v - a;
                if idx >= 0 && (idx as usize) < inv.len() {
                    acc += ca * &inv[idx as usize];
                }
            }
            *item = acc * &lead; // lead is ±1, so this is division by lead
        }
        Ok(out)
    }

    /// Serialize as `{ "num": {...}, "den": {...} }`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "num": self.num.to_json(), "den": self.den.to_json() })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let num = LaurentPoly::from_json(
            value.get("num").ok_or_else(|| Error::Serde("missing field num".into()))?,
        )?;
        let den = LaurentPoly::from_json(
            value.get("den").ok_or_else(|| Error::Serde("missing field den".into()))?,
        )?;
        RationalFn::new(num, den)
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for RationalFn {}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pairs: &[(i64, i64)]) -> LaurentPoly {
        pairs
            .iter()
            .fold(LaurentPoly::zero(), |acc, &(e, c)| acc.add(&LaurentPoly::monomial(e, BigInt::from(c))))
    }

    /// Independent series oracle: plain long division, peeling the lowest term
    /// of the remainder one degree at a time. Shares no code with
    /// `series_prefix`'s power-series inversion.
    fn long_division_prefix(num: &LaurentPoly, den: &LaurentPoly, max_degree: i64) -> Vec<(i64, BigInt)> {
        let mut rem = num.clone();
        let dv = den.min_exp().unwrap();
        let dc = den.coeff(dv);
        let mut out = Vec::new();
        let mut guard = 0;
        while !rem.is_zero() && guard < 10_000 {
            let rv = rem.min_exp().unwrap();
            let e = rv - dv;
            if e > max_degree {
                break;
            }
            let c = rem.coeff(rv) / &dc;
            assert!(!c.is_zero(), "oracle requires exact unit division");
            out.push((e, c.clone()));
            rem = rem.sub(&den.mul(&LaurentPoly::monomial(e, c)));
            guard += 1;
        }
        out
    }

    #[test]
    fn bar_swaps_exponents() {
        // t^2 - 3t^-1  ↦  t^-2 - 3t
        let p = poly(&[(2, 1), (-1, -3)]);
        assert_eq!(p.bar(), poly(&[(-2, 1), (1, -3)]));
        assert_eq!(p.bar().bar(), p);
    }

    #[test]
    fn quantum_two_square() {
        // [2]^2 = t^2 + 2 + t^-2
        assert_eq!(LaurentPoly::quantum_two_pow(2), poly(&[(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(LaurentPoly::quantum_two_pow(0), LaurentPoly::one());
        assert!(LaurentPoly::quantum_two().bar() == LaurentPoly::quantum_two());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(poly(&[(2, 1), (0, 2), (-2, 1)]).to_string(), "t^-2 + 2 + t^2");
        assert_eq!(poly(&[(1, -1)]).to_string(), "-t");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn series_of_geometric() {
        // 1/(1 - t^2) = 1 + t^2 + t^4 + ...
        let r = RationalFn::new(LaurentPoly::one(), poly(&[(0, 1), (2, -1)])).unwrap();
        let s = r.series_prefix(6).unwrap();
        let expect = [0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1];
        for (i, want) in expect.iter().enumerate() {
            assert_eq!(s[i], BigInt::from(*want), "slot {i}");
        }
    }

    #[test]
    fn series_matches_long_division_oracle() {
        // (1 + t^2)/(1 - t^2) and t^3[2]/(1 - t^2): window checked term by term.
        let cases = vec![
            RationalFn::new(poly(&[(0, 1), (2, 1)]), poly(&[(0, 1), (2, -1)])).unwrap(),
            RationalFn::new(
                LaurentPoly::t_pow(3).mul(&LaurentPoly::quantum_two()),
                poly(&[(0, 1), (2, -1)]),
            )
            .unwrap(),
        ];
        for r in cases {
            let d = 9usize;
            let s = r.series_prefix(d).unwrap();
            let oracle = long_division_prefix(r.num(), r.den(), d as i64);
            let mut expected = vec![BigInt::zero(); 2 * d + 1];
            for (e, c) in oracle {
                if e >= -(d as i64) && e <= d as i64 {
                    expected[(e + d as i64) as usize] = c;
                }
            }
            assert_eq!(s, expected);
        }
    }

    #[test]
    fn series_with_negative_valuation() {
        // 1/[2] = t - t^3 + t^5 - ... ; lowest denominator term is t^-1.
        let r = RationalFn::new(LaurentPoly::one(), LaurentPoly::quantum_two()).unwrap();
        let s = r.series_prefix(5).unwrap();
        let get = |e: i64| s[(e + 5) as usize].clone();
        assert_eq!(get(1), BigInt::from(1));
        assert_eq!(get(3), BigInt::from(-1));
        assert_eq!(get(5), BigInt::from(1));
        assert_eq!(get(0), BigInt::zero());
        assert_eq!(get(-1), BigInt::zero());
    }

    #[test]
    fn series_rejects_non_unit_lowest_term() {
        let r = RationalFn::new(LaurentPoly::one(), poly(&[(0, 2), (1, 1)])).unwrap();
        assert!(matches!(r.series_prefix(3), Err(Error::SeriesExpansion(_))));
    }

    #[test]
    fn rational_equality_cross_multiplies() {
        // (1+t^2)/(1-t^2) == (t^-1+t)/(t^-1-t) after scaling by t^-1.
        let a = RationalFn::new(poly(&[(0, 1), (2, 1)]), poly(&[(0, 1), (2, -1)])).unwrap();
        let b = RationalFn::new(poly(&[(-1, 1), (1, 1)]), poly(&[(-1, 1), (1, -1)])).unwrap();
        assert_eq!(a, b);
        let c = RationalFn::new(poly(&[(0, 1)]), poly(&[(0, 1), (2, -1)])).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn json_round_trip() {
        let p = poly(&[(-2, 7), (0, -1), (5, 123456789)]);
        assert_eq!(LaurentPoly::from_json(&p.to_json()).unwrap(), p);
        let r = RationalFn::new(p, LaurentPoly::quantum_two()).unwrap();
        assert_eq!(RationalFn::from_json(&r.to_json()).unwrap(), r);
    }
}
