//! The line arrangement dual to the graded quotients: one line per
//! two-block set partition of `{1, ..., n+1}`, with membership tests
//! against index subsets and evaluation matrices for monomials.
//!
//! Coordinates: a point of the ambient `n`-space is written in the
//! variables `f_1 .. f_n`, where `f_i` reads off `x_i - x_{i+1}` of a
//! sum-zero vector `x` in `(n+1)`-space. The interval forms
//! `w(i, j) = f_i + ... + f_j = x_i - x_{j+1}` are the defining forms of
//! the arrangement; its one-dimensional flats are exactly the lines
//! spanned by
//!
//! ```text
//! x_a = q  (a in B),   x_a = -p  (a not in B)
//! ```
//!
//! for a proper nonempty block `B` containing `1`, with `p = |B|` and
//! `q = n + 1 - p` — one line per two-block partition, `2^n - 1` lines in
//! total. [`lines_from_kernels`] recomputes the same set the slow way
//! (kernels of all maximal-rank form subsets) as an independent oracle.
//!
//! A line is transverse to an index subset `S` when its direction has
//! nonzero `f_k`-coordinate for every `k` in `S`; exactly `2^(n-d)` lines
//! are transverse to a nonempty `S` of size `d` (separating `k` from
//! `k + 1` halves the count each time).
//!
//! Directions are stored primitively: integer coordinates with unit
//! content, first nonzero coordinate positive.

use crate::error::{Error, Result};
use crate::ideal::check_subset;
use crate::linalg::{kernel_basis, rank_dense};
use crate::poly::{monomials_of_exp_degree, rat_int, Rat};
use num::{BigInt, Integer, One, Signed, Zero};
use std::collections::BTreeSet;
use std::fmt;

/// A line through the origin with a primitive integer direction vector in
/// the `f`-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylLine {
    direction: Vec<BigInt>,
}

impl WeylLine {
    /// Normalize an integer vector to a primitive, sign-fixed direction.
    pub fn from_integer_vector(v: Vec<BigInt>) -> Result<Self> {
        if v.iter().all(|x| x.is_zero()) {
            return Err(Error::InvalidWord("a line needs a nonzero direction".into()));
        }
        let mut content = BigInt::zero();
        for x in &v {
            content = content.gcd(x);
        }
        let mut direction: Vec<BigInt> = v.into_iter().map(|x| x / &content).collect();
        let first = direction.iter().find(|x| !x.is_zero()).unwrap();
        if first.is_negative() {
            for x in &mut direction {
                *x = -x.clone();
            }
        }
        Ok(WeylLine { direction })
    }

    pub fn from_rational_vector(v: &[Rat]) -> Result<Self> {
        let mut lcm = BigInt::one();
        for x in v {
            lcm = lcm.lcm(x.denom());
        }
        let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
        Self::from_integer_vector(ints)
    }

    pub fn direction(&self) -> &[BigInt] {
        &self.direction
    }

    pub fn dim(&self) -> usize {
        self.direction.len()
    }

    /// Transverse to the subset: every indexed coordinate is nonzero.
    pub fn is_transverse(&self, subset: &[usize]) -> bool {
        subset.iter().all(|&k| !self.direction[k - 1].is_zero())
    }

    /// Direction as rationals, for evaluation matrices.
    pub fn rational_point(&self) -> Vec<Rat> {
        self.direction.iter().map(|x| Rat::from_integer(x.clone())).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.direction.iter().map(|x| x.to_string()).collect::<Vec<_>>())
    }
}

impl fmt::Display for WeylLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.direction.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Enumerate the arrangement's lines from two-block partitions, sorted.
pub fn enumerate_lines(n: usize) -> Result<Vec<WeylLine>> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, context: "need n >= 1".into() });
    }
    let mut out = BTreeSet::new();
    // Blocks B containing the element 1, proper and nonempty: iterate over
    // subsets of {2, ..., n+1}.
    for mask in 0..(1u64 << n) {
        let block: Vec<usize> =
            std::iter::once(1).chain((2..=n + 1).filter(|a| mask >> (a - 2) & 1 == 1)).collect();
        let p = block.len();
        if p == n + 1 {
            continue; // complement empty: the zero vector, not a line
        }
        let q = (n + 1 - p) as i64;
        let in_block = |a: usize| block.binary_search(&a).is_ok();
        let x = |a: usize| -> i64 {
            if in_block(a) {
                q
            } else {
                -(p as i64)
            }
        };
        let v: Vec<BigInt> = (1..=n).map(|i| BigInt::from(x(i) - x(i + 1))).collect();
        out.insert(WeylLine::from_integer_vector(v)?);
    }
    Ok(out.into_iter().collect())
}

/// Coefficient vector of the interval form `w(i, j) = f_i + ... + f_j`.
pub fn interval_form(n: usize, i: usize, j: usize) -> Result<Vec<Rat>> {
    if i == 0 || j > n || i > j {
        return Err(Error::IndexOutOfRange {
            index: j,
            context: format!("interval form needs 1 <= i <= j <= {n}"),
        });
    }
    let mut v = vec![Rat::zero(); n];
    for c in i..=j {
        v[c - 1] = rat_int(1);
    }
    Ok(v)
}

/// Independent oracle: lines as kernels of all rank-`(n-1)` subsets of
/// `n - 1` interval forms, deduplicated. Slow (binomial in the number of
/// forms) but assumption-free.
pub fn lines_from_kernels(n: usize) -> Result<Vec<WeylLine>> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, context: "need n >= 1".into() });
    }
    let mut forms = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            forms.push(interval_form(n, i, j)?);
        }
    }
    let mut out = BTreeSet::new();
    if n == 1 {
        // no subsets of size 0 cut anything: the whole space is the line
        out.insert(WeylLine::from_integer_vector(vec![BigInt::one()])?);
        return Ok(out.into_iter().collect());
    }
    let k = n - 1;
    let mut choice: Vec<usize> = (0..k).collect();
    loop {
        let rows: Vec<Vec<Rat>> = choice.iter().map(|&c| forms[c].clone()).collect();
        if rank_dense(&rows) == k {
            let kernel = kernel_basis(&rows, n);
            debug_assert_eq!(kernel.len(), 1);
            out.insert(WeylLine::from_rational_vector(&kernel[0])?);
        }
        // next combination
        let mut idx = k;
        loop {
            if idx == 0 {
                return Ok(out.into_iter().collect());
            }
            idx -= 1;
            if choice[idx] + (k - idx) < forms.len() {
                choice[idx] += 1;
                for later in idx + 1..k {
                    choice[later] = choice[later - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The lines transverse to an index subset.
pub fn transverse_lines(n: usize, subset: &[usize]) -> Result<Vec<WeylLine>> {
    check_subset(n, subset)?;
    Ok(enumerate_lines(n)?.into_iter().filter(|l| l.is_transverse(subset)).collect())
}

/// Evaluation matrix of all exponent-degree-`m` monomials on the lines:
/// one row per line, one column per monomial (in enumeration order).
pub fn evaluation_matrix(lines: &[WeylLine], n: usize, exp_degree: u32) -> Result<Vec<Vec<Rat>>> {
    let monos = monomials_of_exp_degree(n, exp_degree);
    let mut rows = Vec::with_capacity(lines.len());
    for line in lines {
        if line.dim() != n {
            return Err(Error::IndexOutOfRange {
                index: line.dim(),
                context: format!("line lives in dimension {}, expected {n}", line.dim()),
            });
        }
        let point = line.rational_point();
        let mut row = Vec::with_capacity(monos.len());
        for e in &monos {
            let mut v = Rat::one();
            for (x, &exp) in point.iter().zip(e) {
                for _ in 0..exp {
                    v *= x;
                }
            }
            row.push(v);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Dimension of the space of degree-`2m` polynomials restricted to the
/// lines (a homogeneous polynomial vanishes on a line iff it vanishes on
/// the direction vector, so this is the rank of the evaluation matrix).
pub fn restriction_dim(lines: &[WeylLine], n: usize, exp_degree: u32) -> Result<usize> {
    Ok(rank_dense(&evaluation_matrix(lines, n, exp_degree)?))
}

/// Dimension of the degree-`2m` piece of the full vanishing ideal of the
/// lines: number of monomials minus the evaluation rank.
pub fn vanishing_piece_dim(lines: &[WeylLine], n: usize, exp_degree: u32) -> Result<usize> {
    let total = monomials_of_exp_degree(n, exp_degree).len();
    Ok(total - restriction_dim(lines, n, exp_degree)?)
}
