//! The graded polynomial ring `Q[f_1, ..., f_n]` with `deg f_i = 2`, its
//! symmetric-group action, and the quadratic-in-pairs generator family used
//! by the `ideal` module.
//!
//! The symmetric group on `n + 1` letters acts through its simple
//! transpositions `s_1 .. s_n`:
//!
//! - `s_i(f_i) = -f_i`
//! - `s_i(f_{i-1}) = f_{i-1} + f_i` and `s_i(f_{i+1}) = f_{i+1} + f_i`
//! - `s_i(f_j) = f_j` for `|i - j| >= 2`
//!
//! [`Poly::demazure`] is the divided difference `p -> (p - s_i p) / f_i`;
//! the difference is always divisible because `s_i p = p mod f_i`.
//!
//! The distinguished elements are, for `1 <= i < j <= n`,
//!
//! ```text
//! y(i, j) = f_i f_j (f_i + 2 f_{i+1} + ... + 2 f_{j-1} + f_j)
//! ```
//!
//! and their reduced forms `z(i, j) = y(i, j) / (g_i g_j)` where `g_m = f_m`
//! if `m` lies in a chosen index subset and `g_m = 1` otherwise. These
//! divisions are exact because every monomial of `y(i, j)` contains
//! `f_i f_j`.
//!
//! Invariants:
//! - Monomials are exponent vectors of fixed length `nvars`; coefficients
//!   are exact rationals and never zero inside `terms`.
//! - All public constructors and operations keep `nvars` consistent and
//!   return errors (never panic) on caller mistakes.

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Exact rational scalar.
pub type Rat = BigRational;

pub fn rat_int(v: i64) -> Rat {
    BigRational::from_integer(BigInt::from(v))
}

/// A sparse polynomial in `nvars` variables over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Poly::zero(nvars);
        p.insert_add(vec![0; nvars], c);
        p
    }

    /// The variable `f_i`, 1-based.
    pub fn gen(nvars: usize, i: usize) -> Result<Self> {
        if i == 0 || i > nvars {
            return Err(Error::IndexOutOfRange {
                index: i,
                context: format!("variable index must lie in 1..={nvars}"),
            });
        }
        let mut exps = vec![0; nvars];
        exps[i - 1] = 1;
        let mut p = Poly::zero(nvars);
        p.insert_add(exps, Rat::one());
        Ok(p)
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, coeff: Rat) -> Result<Self> {
        if exps.len() != nvars {
            return Err(Error::IndexOutOfRange {
                index: exps.len(),
                context: format!("exponent vector must have length {nvars}"),
            });
        }
        let mut p = Poly::zero(nvars);
        p.insert_add(exps, coeff);
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn insert_add(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(exps.len(), self.nvars);
        let sum = match self.terms.get(&exps) {
            Some(old) => old + &c,
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, sum);
        }
    }

    fn check_vars(&self, rhs: &Poly) -> Result<()> {
        if self.nvars != rhs.nvars {
            return Err(Error::IndexOutOfRange {
                index: rhs.nvars,
                context: format!("variable count mismatch: {} vs {}", self.nvars, rhs.nvars),
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        debug_assert!(self.check_vars(rhs).is_ok());
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Poly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        Poly { nvars: self.nvars, terms }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect();
        Poly { nvars: self.nvars, terms }
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        debug_assert!(self.check_vars(rhs).is_ok());
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let exps: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_add(exps, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Multiply by `coeff * x^exps` in one pass.
    pub fn mul_monomial(&self, exps: &[u32], coeff: &Rat) -> Poly {
        debug_assert_eq!(exps.len(), self.nvars);
        if coeff.is_zero() {
            return Poly::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let shifted: Vec<u32> = e.iter().zip(exps).map(|(a, b)| a + b).collect();
                (shifted, c * coeff)
            })
            .collect();
        Poly { nvars: self.nvars, terms }
    }

    /// Graded degree of a homogeneous polynomial (`deg f_i = 2`), or an
    /// error when the terms disagree. Zero reports `None`.
    pub fn homogeneous_degree(&self) -> Result<Option<usize>> {
        let mut deg = None;
        for e in self.terms.keys() {
            let d = 2 * e.iter().map(|&x| x as usize).sum::<usize>();
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => {
                    return Err(Error::NonHomogeneous(format!(
                        "terms of graded degree {d0} and {d} in {self}"
                    )))
                }
                _ => {}
            }
        }
        Ok(deg)
    }

    /// Apply the simple transposition `s_i` (1-based, `1 <= i <= nvars`).
    pub fn act_simple(&self, i: usize) -> Result<Poly> {
        if i == 0 || i > self.nvars {
            return Err(Error::IndexOutOfRange {
                index: i,
                context: format!("simple transposition index must lie in 1..={}", self.nvars),
            });
        }
        // Image of each variable under s_i.
        let image = |j: usize| -> Poly {
            // j is 1-based
            if j == i {
                Poly::gen(self.nvars, j).unwrap().neg()
            } else if j + 1 == i || j == i + 1 {
                Poly::gen(self.nvars, j).unwrap().add(&Poly::gen(self.nvars, i).unwrap())
            } else {
                Poly::gen(self.nvars, j).unwrap()
            }
        };
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(self.nvars, c.clone());
            for (j0, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    term = term.mul(&image(j0 + 1).pow(exp));
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Divide exactly by the variable `f_i`; errors if any term lacks it.
    pub fn div_exact_var(&self, i: usize) -> Result<Poly> {
        if i == 0 || i > self.nvars {
            return Err(Error::IndexOutOfRange {
                index: i,
                context: format!("variable index must lie in 1..={}", self.nvars),
            });
        }
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i - 1] == 0 {
                return Err(Error::Indivisible(format!(
                    "term without f{i} while dividing {self} by f{i}"
                )));
            }
            let mut e2 = e.clone();
            e2[i - 1] -= 1;
            out.insert_add(e2, c.clone());
        }
        Ok(out)
    }

    /// Divided difference `(p - s_i p) / f_i`.
    pub fn demazure(&self, i: usize) -> Result<Poly> {
        let diff = self.sub(&self.act_simple(i)?);
        if diff.is_zero() {
            return Ok(Poly::zero(self.nvars));
        }
        diff.div_exact_var(i)
    }

    /// Evaluate at a rational point (one coordinate per variable).
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.nvars {
            return Err(Error::IndexOutOfRange {
                index: point.len(),
                context: format!("evaluation point must have {} coordinates", self.nvars),
            });
        }
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &exp) in point.iter().zip(e) {
                for _ in 0..exp {
                    term *= x;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| serde_json::json!({ "exps": e, "coeff": c.to_string() }))
            .collect();
        serde_json::json!({ "nvars": self.nvars, "terms": terms })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let nvars = value
            .get("nvars")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| Error::Serde("polynomial needs an integer `nvars`".into()))?
            as usize;
        let mut out = Poly::zero(nvars);
        let terms = value
            .get("terms")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Serde("polynomial needs a `terms` array".into()))?;
        for t in terms {
            let exps: Option<Vec<u32>> = t
                .get("exps")
                .and_then(|v| v.as_array())
                .map(|a| a.iter().map(|x| x.as_u64().map(|u| u as u32)).collect())
                .unwrap_or(None);
            let exps = exps.ok_or_else(|| Error::Serde("term needs integer `exps`".into()))?;
            if exps.len() != nvars {
                return Err(Error::Serde("exponent vector length mismatch".into()));
            }
            let coeff_str = t
                .get("coeff")
                .and_then(|v| v.as_str())
                .ok_or_else(|| Error::Serde("term needs a string `coeff`".into()))?;
            let coeff = Rat::from_str(coeff_str)
                .map_err(|e| Error::Serde(format!("bad rational `{coeff_str}`: {e}")))?;
            out.insert_add(exps, coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let is_const = e.iter().all(|&x| x == 0);
            if !mag.is_one() || is_const {
                write!(f, "{mag}")?;
                if !is_const {
                    write!(f, " ")?;
                }
            }
            let mut first_var = true;
            for (j, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if !first_var {
                    write!(f, " ")?;
                }
                first_var = false;
                write!(f, "f{}", j + 1)?;
                if exp > 1 {
                    write!(f, "^{exp}")?;
                }
            }
        }
        Ok(())
    }
}

/// The weighted interval sum `f_i + 2 f_{i+1} + ... + 2 f_{j-1} + f_j`.
pub fn interval_sum(nvars: usize, i: usize, j: usize) -> Result<Poly> {
    check_pair(nvars, i, j)?;
    let mut out = Poly::gen(nvars, i)?.add(&Poly::gen(nvars, j)?);
    for m in i + 1..j {
        out = out.add(&Poly::gen(nvars, m)?.scale(&rat_int(2)));
    }
    Ok(out)
}

/// `y(i, j) = f_i f_j (f_i + 2 f_{i+1} + ... + 2 f_{j-1} + f_j)`, `i < j`.
pub fn y_gen(nvars: usize, i: usize, j: usize) -> Result<Poly> {
    check_pair(nvars, i, j)?;
    let fi = Poly::gen(nvars, i)?;
    let fj = Poly::gen(nvars, j)?;
    Ok(fi.mul(&fj).mul(&interval_sum(nvars, i, j)?))
}

/// `z(i, j) = y(i, j) / (g_i g_j)` where `g_m = f_m` for `m` in `subset`.
pub fn z_gen(nvars: usize, i: usize, j: usize, subset: &[usize]) -> Result<Poly> {
    check_pair(nvars, i, j)?;
    let mut out = y_gen(nvars, i, j)?;
    if subset.contains(&i) {
        out = out.div_exact_var(i)?;
    }
    if subset.contains(&j) {
        out = out.div_exact_var(j)?;
    }
    Ok(out)
}

fn check_pair(nvars: usize, i: usize, j: usize) -> Result<()> {
    if i == 0 || j > nvars || i >= j {
        return Err(Error::IndexOutOfRange {
            index: j,
            context: format!("generator pair needs 1 <= i < j <= {nvars}, got ({i}, {j})"),
        });
    }
    Ok(())
}

/// All exponent vectors of length `nvars` with the given exponent sum,
/// in the order `BTreeMap` would list them (lexicographic ascending).
pub fn monomials_of_exp_degree(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(nvars: usize, d: u32, out: &mut Vec<Vec<u32>>, prefix: &mut Vec<u32>) {
        if nvars == 0 {
            if d == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if nvars == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in 0..=d {
            prefix.push(e);
            rec(nvars - 1, d - e, out, prefix);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, d, &mut out, &mut Vec::new());
    out
}
