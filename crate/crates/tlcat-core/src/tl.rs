//! The Temperley-Lieb algebra: free module on crossingless matchings, with
//! stacking as multiplication and a circle worth `[2] = t + t^-1`.
//!
//! Elements are sparse sums `sum coeff(d) * d` over [`Matching`] diagrams
//! with [`LaurentPoly`] coefficients. Multiplication stacks the left factor
//! on top of the right one and converts each erased circle into a factor of
//! `[2]`. The defining presentation (generators `u_1 .. u_{N-1}`):
//!
//! - `u_i u_i = [2] u_i`
//! - `u_i u_j = u_j u_i` when `|i - j| >= 2`
//! - `u_i u_{i±1} u_i = u_i`
//!
//! A word in the generators therefore evaluates to a power of `[2]` times a
//! single diagram; [`TLElement::from_word`] computes exactly that, reading
//! the word left to right with earlier letters stacked higher.
//!
//! [`Trace`] packages the circle-evaluation maps used throughout the crate.
//! Each one closes a diagram around a puncture ([`Matching::closure`]) and
//! evaluates circles by count and winding:
//!
//! - [`Trace::Standard`]: every circle is worth `[2]`.
//! - [`Trace::Trivial`]: picks out the coefficient of the identity diagram.
//! - [`Trace::Graded`]: the `t`-weighted trace whose pairing diagonal
//!   reproduces the graded dimensions computed by the `ideal` module.
//!
//! Pairings are sesquilinear: `pair(x, y) = trace(adjoint(x) * y)` where the
//! adjoint flips diagrams upside down and applies `t -> t^-1` to
//! coefficients.

use crate::diagram::{enumerate_matchings, Matching};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, RationalFn};
use crate::par;
use std::collections::BTreeMap;
use std::fmt;

/// A sparse element of the Temperley-Lieb algebra on a fixed strand count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TLElement {
    strands: usize,
    terms: BTreeMap<Matching, LaurentPoly>,
}

impl TLElement {
    pub fn zero(strands: usize) -> Self {
        TLElement { strands, terms: BTreeMap::new() }
    }

    /// The multiplicative identity (all strands vertical).
    pub fn one(strands: usize) -> Self {
        Self::from_matching(Matching::identity(strands))
    }

    pub fn from_matching(m: Matching) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m.clone(), LaurentPoly::one());
        TLElement { strands: m.strands(), terms }
    }

    /// The generator `u_i` as an element.
    pub fn generator(strands: usize, i: usize) -> Result<Self> {
        Ok(Self::from_matching(Matching::generator(strands, i)?))
    }

    /// Evaluate a word in the generators (1-based letters, read left to
    /// right, earlier letters on top). The result is always `[2]^c` times a
    /// single diagram.
    pub fn from_word(strands: usize, word: &[usize]) -> Result<Self> {
        let (m, circles) = word_diagram(strands, word)?;
        let mut out = Self::from_matching(m);
        out.scale_in_place(&LaurentPoly::quantum_two_pow(circles));
        Ok(out)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Matching, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Matching) -> LaurentPoly {
        self.terms.get(m).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn insert_add(&mut self, m: Matching, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&m) {
            Some(old) => old.add(&c),
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, sum);
        }
    }

    fn check_strands(&self, rhs: &TLElement) -> Result<()> {
        if self.strands != rhs.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: rhs.strands });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &TLElement) -> Result<TLElement> {
        self.check_strands(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_add(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &TLElement) -> Result<TLElement> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> TLElement {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect();
        TLElement { strands: self.strands, terms }
    }

    pub fn scale(&self, by: &LaurentPoly) -> TLElement {
        let mut out = self.clone();
        out.scale_in_place(by);
        out
    }

    fn scale_in_place(&mut self, by: &LaurentPoly) {
        if by.is_zero() {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            *c = c.mul(by);
        }
    }

    /// Algebra product: `self` stacked on top of `rhs`, circles worth `[2]`.
    pub fn mul(&self, rhs: &TLElement) -> Result<TLElement> {
        self.check_strands(rhs)?;
        let mut out = TLElement::zero(self.strands);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let (m, circles) = Matching::compose(a, b)?;
                let c = ca.mul(cb).mul(&LaurentPoly::quantum_two_pow(circles));
                out.insert_add(m, c);
            }
        }
        Ok(out)
    }

    /// Coefficient-wise `t -> t^-1`; diagrams are untouched.
    pub fn bar(&self) -> TLElement {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.bar())).collect();
        TLElement { strands: self.strands, terms }
    }

    /// Flip every diagram upside down and bar every coefficient.
    pub fn adjoint(&self) -> TLElement {
        let terms = self.terms.iter().map(|(m, c)| (m.flip(), c.bar())).collect();
        TLElement { strands: self.strands, terms }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(m, c)| serde_json::json!({ "diagram": m.to_json(), "coeff": c.to_json() }))
            .collect();
        serde_json::json!({ "strands": self.strands, "terms": terms })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let strands = value
            .get("strands")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| Error::Serde("element needs an integer `strands` field".into()))?
            as usize;
        let mut out = TLElement::zero(strands);
        let terms = value
            .get("terms")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Serde("element needs a `terms` array".into()))?;
        for t in terms {
            let m = Matching::from_json(
                strands,
                t.get("diagram").ok_or_else(|| Error::Serde("term needs a `diagram`".into()))?,
            )?;
            let c = LaurentPoly::from_json(
                t.get("coeff").ok_or_else(|| Error::Serde("term needs a `coeff`".into()))?,
            )?;
            out.insert_add(m, c);
        }
        Ok(out)
    }
}

impl fmt::Display for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({c}) {{{m}}}")?;
            first = false;
        }
        Ok(())
    }
}

/// Evaluate a generator word to a single diagram plus an erased-circle count.
pub fn word_diagram(strands: usize, word: &[usize]) -> Result<(Matching, usize)> {
    let mut acc = Matching::identity(strands);
    let mut circles = 0usize;
    for &i in word {
        if i == 0 || i >= strands {
            return Err(Error::InvalidWord(format!(
                "letter {i} is outside 1..={} for {strands} strands",
                strands.saturating_sub(1)
            )));
        }
        let u = Matching::generator(strands, i)?;
        let (m, c) = Matching::compose(&acc, &u)?;
        acc = m;
        circles += c;
    }
    Ok((acc, circles))
}

/// A circle-evaluation trace on the algebra.
///
/// Closing an element around a puncture leaves `circles` closed loops, of
/// which `nesting` wind the puncture; each trace assigns the closed picture
/// the value `base(nesting) * [2]^circles` for its own `base` function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trace {
    /// `base = 1`: every circle counts `[2]`, winding or not.
    Standard,
    /// `base = [2]^-N` when every circle winds, else `0`: reads off the
    /// coefficient of the identity diagram.
    Trivial,
    /// The `t`-weighted trace. Its pairing diagonal matches the graded
    /// dimensions of the quotient rings in the `ideal` module.
    Graded,
}

impl Trace {
    pub fn name(&self) -> &'static str {
        match self {
            Trace::Standard => "standard",
            Trace::Trivial => "trivial",
            Trace::Graded => "graded",
        }
    }

    pub fn from_name(name: &str) -> Result<Trace> {
        match name {
            "standard" | "std" => Ok(Trace::Standard),
            "trivial" | "triv" => Ok(Trace::Trivial),
            "graded" | "psi0" => Ok(Trace::Graded),
            other => Err(Error::InvalidWord(format!(
                "unknown trace `{other}` (expected standard, trivial, or graded)"
            ))),
        }
    }

    /// The common denominator of every trace value on `strands` strands.
    fn denominator(&self, strands: usize) -> LaurentPoly {
        match self {
            Trace::Standard => LaurentPoly::one(),
            Trace::Trivial => LaurentPoly::quantum_two_pow(strands),
            Trace::Graded => {
                // (1 - t^2) [2]^N
                let one_minus_t2 = LaurentPoly::one().sub(&LaurentPoly::t_pow(2));
                one_minus_t2.mul(&LaurentPoly::quantum_two_pow(strands))
            }
        }
    }

    /// Numerator contributed by a closed diagram with the given circle
    /// statistics, over [`Self::denominator`].
    fn diagram_numerator(&self, strands: usize, circles: usize, nesting: usize) -> LaurentPoly {
        let circle_factor = LaurentPoly::quantum_two_pow(circles);
        match self {
            Trace::Standard => circle_factor,
            Trace::Trivial => {
                if nesting == strands {
                    circle_factor
                } else {
                    LaurentPoly::zero()
                }
            }
            Trace::Graded => {
                // base(nesting < N) = t^{N-1} [2]^{N-1} / ((1 - t^2) [2]^N)
                // base(N) subtracts t^2 / ((1 - t^2) [2]^N) from that.
                let n = strands - 1;
                let mut base =
                    LaurentPoly::t_pow(n as i64).mul(&LaurentPoly::quantum_two_pow(n));
                if nesting == strands {
                    base = base.sub(&LaurentPoly::t_pow(2));
                }
                base.mul(&circle_factor)
            }
        }
    }

    /// Trace of an element.
    pub fn trace(&self, x: &TLElement) -> RationalFn {
        let strands = x.strands();
        let mut num = LaurentPoly::zero();
        for (m, c) in x.terms() {
            let st = m.closure();
            num = num.add(&c.mul(&self.diagram_numerator(strands, st.circles, st.nesting)));
        }
        RationalFn::new(num, self.denominator(strands)).expect("trace denominator is nonzero")
    }

    /// Sesquilinear pairing `trace(adjoint(x) * y)`: conjugate-linear in
    /// `x`, linear in `y`.
    pub fn pairing(&self, x: &TLElement, y: &TLElement) -> Result<RationalFn> {
        let prod = x.adjoint().mul(y)?;
        Ok(self.trace(&prod))
    }

    /// Gram matrix of the pairing over the full diagram basis (sorted as
    /// [`enumerate_matchings`] returns it).
    pub fn gram(&self, strands: usize) -> Result<Vec<Vec<RationalFn>>> {
        let basis = enumerate_matchings(strands)?;
        let elems: Vec<TLElement> =
            basis.iter().map(|m| TLElement::from_matching(m.clone())).collect();
        let kind = *self;
        let rows: Vec<Result<Vec<RationalFn>>> = par::map(
            elems.iter().collect::<Vec<_>>(),
            |x| -> Result<Vec<RationalFn>> {
                elems.iter().map(|y| kind.pairing(x, y)).collect()
            },
        );
        rows.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn q2() -> LaurentPoly {
        LaurentPoly::quantum_two()
    }

    fn one_minus_t2() -> LaurentPoly {
        LaurentPoly::one().sub(&LaurentPoly::t_pow(2))
    }

    fn rf(num: LaurentPoly) -> RationalFn {
        RationalFn::new(num, one_minus_t2()).unwrap()
    }

    #[test]
    fn defining_relations() {
        for strands in 2..=5 {
            for i in 1..strands {
                let u = TLElement::generator(strands, i).unwrap();
                assert_eq!(u.mul(&u).unwrap(), u.scale(&q2()), "square at {i}");
                for j in 1..strands {
                    let v = TLElement::generator(strands, j).unwrap();
                    if i.abs_diff(j) >= 2 {
                        assert_eq!(u.mul(&v).unwrap(), v.mul(&u).unwrap(), "distant {i},{j}");
                    }
                    if i.abs_diff(j) == 1 {
                        let uvu = u.mul(&v).unwrap().mul(&u).unwrap();
                        assert_eq!(uvu, u, "absorb {i},{j}");
                    }
                }
            }
        }
    }

    #[test]
    fn word_evaluation() {
        // u_1 u_1 = [2] u_1
        let x = TLElement::from_word(2, &[1, 1]).unwrap();
        let u1 = TLElement::generator(2, 1).unwrap();
        assert_eq!(x, u1.scale(&q2()));
        // relation u_1 u_2 u_1 = u_1
        let y = TLElement::from_word(3, &[1, 2, 1]).unwrap();
        assert_eq!(y, TLElement::generator(3, 1).unwrap());
        // empty word is the identity
        assert_eq!(TLElement::from_word(3, &[]).unwrap(), TLElement::one(3));
        assert!(TLElement::from_word(3, &[3]).is_err());
    }

    #[test]
    fn multiplication_is_associative() {
        let basis = enumerate_matchings(3).unwrap();
        let elems: Vec<TLElement> =
            basis.iter().map(|m| TLElement::from_matching(m.clone())).collect();
        for x in &elems {
            for y in &elems {
                for z in &elems {
                    let a = x.mul(y).unwrap().mul(z).unwrap();
                    let b = x.mul(&y.mul(z).unwrap()).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn adjoint_reverses_products() {
        let basis = enumerate_matchings(3).unwrap();
        for x in &basis {
            for y in &basis {
                let ex = TLElement::from_matching(x.clone());
                let ey = TLElement::from_matching(y.clone());
                let lhs = ex.mul(&ey).unwrap().adjoint();
                let rhs = ey.adjoint().mul(&ex.adjoint()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn standard_trace_counts_circles() {
        // identity on N strands: [2]^N
        for strands in 1..=4 {
            let got = Trace::Standard.trace(&TLElement::one(strands));
            let want = RationalFn::from_poly(LaurentPoly::quantum_two_pow(strands));
            assert_eq!(got, want);
        }
        // a word with d distinct letters: [2]^{N-d}
        let cases: &[(usize, &[usize], usize)] =
            &[(2, &[1], 1), (3, &[1, 2], 1), (4, &[1, 3], 2), (4, &[2], 3), (5, &[1, 2, 3, 4], 1)];
        for &(strands, word, pow) in cases {
            let x = TLElement::from_word(strands, word).unwrap();
            let got = Trace::Standard.trace(&x);
            assert_eq!(got, RationalFn::from_poly(LaurentPoly::quantum_two_pow(pow)), "{word:?}");
        }
    }

    #[test]
    fn trivial_trace_reads_identity_coefficient() {
        let one3 = TLElement::one(3);
        assert_eq!(Trace::Trivial.trace(&one3), RationalFn::one());
        let u1 = TLElement::generator(3, 1).unwrap();
        assert!(Trace::Trivial.trace(&u1).is_zero());
        // 3·1 + [2]·u_1: trace is 3
        let x = one3.scale(&LaurentPoly::from_int(3)).add(&u1.scale(&q2())).unwrap();
        assert_eq!(Trace::Trivial.trace(&x), RationalFn::from_poly(LaurentPoly::from_int(3)));
    }

    #[test]
    fn graded_pairing_matrix_two_strands() {
        // Basis {1, u_1}. Frozen values:
        //   (1, 1)     = 1 / (1 - t^2)
        //   (1, u_1)   = t / (1 - t^2)      (either order)
        //   (u_1, u_1) = (1 + t^2) / (1 - t^2)
        let g = Trace::Graded.gram(2).unwrap();
        let one = rf(LaurentPoly::one());
        let t = rf(LaurentPoly::t_pow(1));
        let one_plus_t2 = rf(LaurentPoly::one().add(&LaurentPoly::t_pow(2)));
        // enumerate_matchings(2) sorts [1,0,3,2] (u_1) before [2,3,0,1] (id)
        let basis = enumerate_matchings(2).unwrap();
        let idx_id = basis.iter().position(|m| m.is_identity()).unwrap();
        let idx_u = 1 - idx_id;
        assert_eq!(g[idx_id][idx_id], one);
        assert_eq!(g[idx_id][idx_u], t);
        assert_eq!(g[idx_u][idx_id], t);
        assert_eq!(g[idx_u][idx_u], one_plus_t2);
    }

    #[test]
    fn graded_pairing_three_strands_frozen() {
        // N = 3. (1, 1) = (1 + t^2 + t^4)/(1 - t^2); (u_1, u_1) = (1+t^2)^2/(1-t^2);
        // (1, u_1 u_2) = t^2/(1 - t^2).
        let one = TLElement::one(3);
        let u1 = TLElement::generator(3, 1).unwrap();
        let u12 = TLElement::from_word(3, &[1, 2]).unwrap();
        let t2 = LaurentPoly::t_pow(2);
        let t4 = LaurentPoly::t_pow(4);
        let g11 = Trace::Graded.pairing(&one, &one).unwrap();
        assert_eq!(g11, rf(LaurentPoly::one().add(&t2).add(&t4)));
        let gu = Trace::Graded.pairing(&u1, &u1).unwrap();
        let sq = LaurentPoly::one().add(&t2).mul(&LaurentPoly::one().add(&t2));
        assert_eq!(gu, rf(sq));
        let gw = Trace::Graded.pairing(&one, &u12).unwrap();
        assert_eq!(gw, rf(t2));
    }

    #[test]
    fn graded_diagonal_is_uniform_off_identity() {
        // (x, x) = t^n [2]^n / (1 - t^2) for every non-identity diagram x.
        for strands in 2..=5usize {
            let n = strands - 1;
            let want = rf(LaurentPoly::t_pow(n as i64).mul(&LaurentPoly::quantum_two_pow(n)));
            for m in enumerate_matchings(strands).unwrap() {
                if m.is_identity() {
                    continue;
                }
                let x = TLElement::from_matching(m);
                assert_eq!(Trace::Graded.pairing(&x, &x).unwrap(), want);
            }
        }
    }

    #[test]
    fn pairing_is_sesquilinear() {
        let u1 = TLElement::generator(3, 1).unwrap();
        let u2 = TLElement::generator(3, 2).unwrap();
        let lam = LaurentPoly::t_pow(3).scale(&BigInt::from(2));
        for tr in [Trace::Standard, Trace::Trivial, Trace::Graded] {
            let base = tr.pairing(&u1, &u2).unwrap();
            let left = tr.pairing(&u1.scale(&lam), &u2).unwrap();
            assert_eq!(left, base.mul(&RationalFn::from_poly(lam.bar())));
            let right = tr.pairing(&u1, &u2.scale(&lam)).unwrap();
            assert_eq!(right, base.mul(&RationalFn::from_poly(lam.clone())));
        }
    }

    #[test]
    fn traces_are_cyclic() {
        let basis = enumerate_matchings(3).unwrap();
        for tr in [Trace::Standard, Trace::Trivial, Trace::Graded] {
            for x in &basis {
                for y in &basis {
                    let ex = TLElement::from_matching(x.clone());
                    let ey = TLElement::from_matching(y.clone());
                    let xy = tr.trace(&ex.mul(&ey).unwrap());
                    let yx = tr.trace(&ey.mul(&ex).unwrap());
                    assert_eq!(xy, yx, "{tr:?} on {x} {y}");
                }
            }
        }
    }

    #[test]
    fn element_json_round_trip() {
        let x = TLElement::from_word(3, &[1, 2]).unwrap().scale(&q2()).add(&TLElement::one(3)).unwrap();
        let j = x.to_json();
        assert_eq!(TLElement::from_json(&j).unwrap(), x);
    }
}
