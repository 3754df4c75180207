//! Rewriting systems for the graded ideals generated by the `z(i, j)`
//! family, and three independent ways to measure the quotients they cut out.
//!
//! For an index subset `S` of `{1..n}` the ideal is generated by all
//! `z(i, j) = y(i, j) / (g_i g_j)` with `1 <= i < j <= n` (see the `poly`
//! module). [`RewriteSystem`] orients a subfamily of those generators into
//! monomial rewrite rules:
//!
//! - `S` empty: one rule per pair `i < j`,
//!   `f_i f_j^2 -> -(f_i^2 f_j + sum_{i<l<j} 2 f_i f_l f_j)`.
//! - `S` nonempty with pivot `k` in `S`: one rule per `j != k`, namely
//!   `f_j^2 -> -(f_k f_j + sum 2 f_l f_j)` for `j` outside `S` and
//!   `f_j -> -(f_k + sum 2 f_l)` for `j` in `S`, where `l` runs strictly
//!   between `k` and `j`.
//!
//! Every rule is homogeneous and its right-hand side is strictly smaller in
//! the system's monomial order (plain lexicographic-from-the-top for empty
//! `S`; for a pivot the variables are ranked by distance from `k`, ties to
//! the right). Multiplying by a monomial preserves the order, so rewriting
//! terminates degree by degree; [`RewriteSystem::confluence_check`] then
//! certifies that normal forms are unique by exhausting all branch points up
//! to a degree window that covers every overlap of two left-hand sides.
//!
//! The quotient's graded dimension is computed three independent ways —
//! counting irreducible monomials, expanding the closed-form series, and
//! exact sparse rank of the ideal's degree piece — and
//! [`hilbert_triple_check`] demands they agree.

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, RationalFn};
use crate::linalg::SparseMatrix;
use crate::par;
use crate::poly::{monomials_of_exp_degree, z_gen, Poly, Rat};
use num::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// A monomial rewrite rule `lhs -> rhs` with `rhs` strictly smaller.
#[derive(Debug, Clone)]
pub struct Rule {
    pub lhs: Vec<u32>,
    pub rhs: Poly,
}

/// An oriented, terminating rewriting system for one ideal.
#[derive(Debug, Clone)]
pub struct RewriteSystem {
    nvars: usize,
    subset: Vec<usize>,
    pivot: Option<usize>,
    rules: Vec<Rule>,
    /// Variables (0-based) from highest to lowest in the monomial order.
    priority: Vec<usize>,
}

/// Validate an index subset: strictly increasing, inside `1..=nvars`.
pub fn check_subset(nvars: usize, subset: &[usize]) -> Result<()> {
    for (pos, &s) in subset.iter().enumerate() {
        if s == 0 || s > nvars {
            return Err(Error::IndexOutOfRange {
                index: s,
                context: format!("subset entries must lie in 1..={nvars}"),
            });
        }
        if pos > 0 && subset[pos - 1] >= s {
            return Err(Error::InvalidWord(format!(
                "subset must be strictly increasing, got {subset:?}"
            )));
        }
    }
    Ok(())
}

impl RewriteSystem {
    /// Build with the default pivot (the smallest subset element).
    pub fn new(nvars: usize, subset: &[usize]) -> Result<Self> {
        match subset.first() {
            None => Self::build(nvars, subset, None),
            Some(&k) => Self::build(nvars, subset, Some(k)),
        }
    }

    /// Build with an explicit pivot (must belong to the subset).
    pub fn with_pivot(nvars: usize, subset: &[usize], pivot: usize) -> Result<Self> {
        Self::build(nvars, subset, Some(pivot))
    }

    fn build(nvars: usize, subset: &[usize], pivot: Option<usize>) -> Result<Self> {
        check_subset(nvars, subset)?;
        if nvars == 0 {
            return Err(Error::IndexOutOfRange {
                index: 0,
                context: "need at least one variable".into(),
            });
        }
        match pivot {
            None => {
                if !subset.is_empty() {
                    return Err(Error::InvalidWord(
                        "nonempty subset needs a pivot".into(),
                    ));
                }
            }
            Some(k) => {
                if !subset.contains(&k) {
                    return Err(Error::IndexOutOfRange {
                        index: k,
                        context: format!("pivot must belong to the subset {subset:?}"),
                    });
                }
            }
        }
        let priority = Self::priority_order(nvars, pivot);
        let rules = Self::build_rules(nvars, subset, pivot)?;
        let sys = RewriteSystem { nvars, subset: subset.to_vec(), pivot, rules, priority };
        sys.assert_oriented()?;
        Ok(sys)
    }

    /// Variables from highest to lowest. Without a pivot this is
    /// `f_n > ... > f_1`; with pivot `k` the rank of `f_k` is lowest and
    /// ranks grow with distance from `k`, the left neighbour at each
    /// distance outranking the right one:
    /// `k < k+1 < k-1 < k+2 < k-2 < ...` reading `<` as "lower".
    fn priority_order(nvars: usize, pivot: Option<usize>) -> Vec<usize> {
        match pivot {
            None => (0..nvars).rev().collect(),
            Some(k) => {
                let mut by_rank: Vec<(usize, usize)> = (1..=nvars)
                    .map(|v| {
                        let rank = match v.cmp(&k) {
                            Ordering::Equal => 0,
                            Ordering::Greater => 2 * (v - k) - 1,
                            Ordering::Less => 2 * (k - v),
                        };
                        (rank, v - 1)
                    })
                    .collect();
                by_rank.sort();
                by_rank.into_iter().rev().map(|(_, v)| v).collect()
            }
        }
    }

    fn build_rules(nvars: usize, subset: &[usize], pivot: Option<usize>) -> Result<Vec<Rule>> {
        let mut rules = Vec::new();
        match pivot {
            None => {
                for i in 1..=nvars {
                    for j in i + 1..=nvars {
                        let y = z_gen(nvars, i, j, &[])?;
                        let mut lhs = vec![0u32; nvars];
                        lhs[i - 1] = 1;
                        lhs[j - 1] = 2;
                        rules.push(Self::orient(nvars, lhs, &y)?);
                    }
                }
            }
            Some(k) => {
                for j in (1..=nvars).filter(|&j| j != k) {
                    let (a, b) = (j.min(k), j.max(k));
                    let z = z_gen(nvars, a, b, subset)?;
                    let mut lhs = vec![0u32; nvars];
                    lhs[j - 1] = if subset.contains(&j) { 1 } else { 2 };
                    rules.push(Self::orient(nvars, lhs, &z)?);
                }
            }
        }
        Ok(rules)
    }

    /// Turn a generator into `lhs -> lhs - gen`, demanding unit coefficient.
    fn orient(nvars: usize, lhs: Vec<u32>, gen: &Poly) -> Result<Rule> {
        if gen.coeff(&lhs) != Rat::one() {
            return Err(Error::Verification(format!(
                "expected unit leading coefficient at {lhs:?} in {gen}"
            )));
        }
        let lhs_poly = Poly::monomial(nvars, lhs.clone(), Rat::one())?;
        let rhs = lhs_poly.sub(gen);
        Ok(Rule { lhs, rhs })
    }

    /// Every right-hand-side monomial must rank strictly below the left.
    fn assert_oriented(&self) -> Result<()> {
        for rule in &self.rules {
            for (e, _) in rule.rhs.terms() {
                if self.cmp_monomials(e, &rule.lhs) != Ordering::Less {
                    return Err(Error::Verification(format!(
                        "rule at {:?} has a non-decreasing replacement {e:?}",
                        rule.lhs
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn pivot(&self) -> Option<usize> {
        self.pivot
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Compare monomials in this system's order: lexicographic over the
    /// priority list, higher exponent at the first differing variable wins.
    pub fn cmp_monomials(&self, a: &[u32], b: &[u32]) -> Ordering {
        for &v in &self.priority {
            match a[v].cmp(&b[v]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    fn divides(lhs: &[u32], e: &[u32]) -> bool {
        lhs.iter().zip(e).all(|(l, x)| l <= x)
    }

    fn first_applicable_rule(&self, e: &[u32]) -> Option<usize> {
        self.rules.iter().position(|r| Self::divides(&r.lhs, e))
    }

    pub fn is_irreducible_monomial(&self, e: &[u32]) -> bool {
        self.first_applicable_rule(e).is_none()
    }

    /// Rewrite to normal form: repeatedly replace the order-largest
    /// reducible monomial using the first applicable rule.
    pub fn normal_form(&self, p: &Poly) -> Poly {
        let mut work = p.clone();
        loop {
            let mut best: Option<(Vec<u32>, Rat, usize)> = None;
            for (e, c) in work.terms() {
                if let Some(ri) = self.first_applicable_rule(e) {
                    let replace = match &best {
                        None => true,
                        Some((be, _, _)) => self.cmp_monomials(e, be) == Ordering::Greater,
                    };
                    if replace {
                        best = Some((e.clone(), c.clone(), ri));
                    }
                }
            }
            let Some((e, c, ri)) = best else {
                return work;
            };
            let rule = &self.rules[ri];
            let q: Vec<u32> = e.iter().zip(&rule.lhs).map(|(a, b)| a - b).collect();
            let removed = Poly::monomial(self.nvars, e, c.clone()).expect("term shape");
            work = work.sub(&removed).add(&rule.rhs.mul_monomial(&q, &c));
        }
    }

    /// Irreducible monomials of the given exponent degree, sorted.
    pub fn irreducible_monomials(&self, exp_degree: u32) -> Vec<Vec<u32>> {
        monomials_of_exp_degree(self.nvars, exp_degree)
            .into_iter()
            .filter(|e| self.is_irreducible_monomial(e))
            .collect()
    }

    pub fn irreducible_count(&self, exp_degree: u32) -> u64 {
        self.irreducible_monomials(exp_degree).len() as u64
    }

    /// Exhaust every monomial of exponent degree at most `max_exp_degree`
    /// at which two or more rule applications branch, and demand that all
    /// one-step reducts share one normal form. Returns the number of branch
    /// points checked. A window of `6` covers every overlap of two rule
    /// left-hand sides for all the systems this module builds.
    pub fn confluence_check(&self, max_exp_degree: u32) -> Result<usize> {
        let mut checked = 0;
        for m in 0..=max_exp_degree {
            let monos = monomials_of_exp_degree(self.nvars, m);
            let outcomes: Vec<Option<Result<()>>> = par::map(monos, |e| {
                let applicable: Vec<usize> = self
                    .rules
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| Self::divides(&r.lhs, &e))
                    .map(|(i, _)| i)
                    .collect();
                if applicable.len() < 2 {
                    return None;
                }
                let mut first_nf: Option<Poly> = None;
                for ri in applicable {
                    let rule = &self.rules[ri];
                    let q: Vec<u32> = e.iter().zip(&rule.lhs).map(|(a, b)| a - b).collect();
                    let reduct = rule.rhs.mul_monomial(&q, &Rat::one());
                    let nf = self.normal_form(&reduct);
                    match &first_nf {
                        None => first_nf = Some(nf),
                        Some(prev) => {
                            if *prev != nf {
                                return Some(Err(Error::Verification(format!(
                                    "normal forms diverge at {e:?}: {prev} vs {nf}"
                                ))));
                            }
                        }
                    }
                }
                Some(Ok(()))
            });
            for o in outcomes.into_iter().flatten() {
                o?;
                checked += 1;
            }
        }
        Ok(checked)
    }

    /// Check that the oriented rules recombine to generators and that the
    /// full generator family rewrites to zero (so rules and generators cut
    /// out the same ideal).
    pub fn generators_reduce_to_zero(&self) -> Result<()> {
        for g in generator_family(self.nvars, &self.subset)? {
            let nf = self.normal_form(&g);
            if !nf.is_zero() {
                return Err(Error::Verification(format!(
                    "generator {g} has nonzero normal form {nf}"
                )));
            }
        }
        Ok(())
    }
}

/// The full generator family of the ideal: `z(i, j)` for all `i < j`.
pub fn generator_family(nvars: usize, subset: &[usize]) -> Result<Vec<Poly>> {
    check_subset(nvars, subset)?;
    let mut out = Vec::new();
    for i in 1..=nvars {
        for j in i + 1..=nvars {
            out.push(z_gen(nvars, i, j, subset)?);
        }
    }
    Ok(out)
}

/// The pivot-reduced generator family: for a nonempty subset and a pivot
/// `k` in it, the `n - 1` generators `z(min(k,j), max(k,j))` for `j != k`.
/// These span the same ideal as [`generator_family`]; the reduction only
/// exists for nonempty subsets.
pub fn reduced_generator_family(nvars: usize, subset: &[usize], pivot: usize) -> Result<Vec<Poly>> {
    check_subset(nvars, subset)?;
    if !subset.contains(&pivot) {
        return Err(Error::IndexOutOfRange { index: pivot, context: "pivot not in subset".into() });
    }
    let mut out = Vec::new();
    for j in 1..=nvars {
        if j != pivot {
            out.push(z_gen(nvars, pivot.min(j), pivot.max(j), subset)?);
        }
    }
    Ok(out)
}

/// One dropped generator in an [`irredundancy_check`] sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrredundancyOutcome {
    /// Pivot whose reduced family was probed; `None` for the empty subset.
    pub pivot: Option<usize>,
    /// Pair label `(i, j)` of the dropped generator.
    pub dropped: (usize, usize),
    /// First exponent degree at which the ideal piece strictly shrinks
    /// without the generator; `None` when no shrink was found within the
    /// bound (inconclusive, not a failure).
    pub shrink_degree: Option<u32>,
}

/// A pivot label, the pair labels of its generators, and the generators.
type LabeledFamily = (Option<usize>, Vec<(usize, usize)>, Vec<Poly>);

/// Drop each generator in turn and look for a graded piece that strictly
/// shrinks.  The empty subset probes the full pair family; a nonempty
/// subset probes the reduced family of every pivot.  Before probing, each
/// reduced family is checked to span the same ideal pieces as the full
/// family through the degree bound.
pub fn irredundancy_check(
    nvars: usize,
    subset: &[usize],
    max_exp_degree: u32,
) -> Result<Vec<IrredundancyOutcome>> {
    check_subset(nvars, subset)?;
    let full = generator_family(nvars, subset)?;
    let mut families: Vec<LabeledFamily> = Vec::new();
    if subset.is_empty() {
        let mut labels = Vec::new();
        for i in 1..=nvars {
            for j in i + 1..=nvars {
                labels.push((i, j));
            }
        }
        families.push((None, labels, full.clone()));
    } else {
        for &pivot in subset {
            let fam = reduced_generator_family(nvars, subset, pivot)?;
            let labels = (1..=nvars)
                .filter(|&j| j != pivot)
                .map(|j| (pivot.min(j), pivot.max(j)))
                .collect();
            for m in 0..=max_exp_degree {
                let a = ideal_piece_dim(nvars, &fam, m)?;
                let b = ideal_piece_dim(nvars, &full, m)?;
                if a != b {
                    return Err(Error::Verification(format!(
                        "reduced family at pivot {pivot} spans {a}, full family {b}, \
                         in exponent degree {m} (nvars {nvars}, subset {subset:?})"
                    )));
                }
            }
            families.push((Some(pivot), labels, fam));
        }
    }
    let mut out = Vec::new();
    for (pivot, labels, family) in families {
        for (g, label) in labels.iter().enumerate() {
            let without: Vec<Poly> = family
                .iter()
                .enumerate()
                .filter(|(h, _)| *h != g)
                .map(|(_, p)| p.clone())
                .collect();
            let mut shrink = None;
            for m in 1..=max_exp_degree {
                if ideal_piece_dim(nvars, &without, m)? < ideal_piece_dim(nvars, &family, m)? {
                    shrink = Some(m);
                    break;
                }
            }
            out.push(IrredundancyOutcome { pivot, dropped: *label, shrink_degree: shrink });
        }
    }
    Ok(out)
}

/// Closed-form graded dimension series of the quotient ring.
///
/// Empty subset: `((1 + t^2)^n - t^2) / (1 - t^2)`; subset of size `d > 0`:
/// `(1 + t^2)^(n - d) / (1 - t^2)`.
pub fn hilbert_closed_form(nvars: usize, subset: &[usize]) -> Result<RationalFn> {
    check_subset(nvars, subset)?;
    let one_plus_t2 = LaurentPoly::one().add(&LaurentPoly::t_pow(2));
    let num = if subset.is_empty() {
        one_plus_t2.pow(nvars).sub(&LaurentPoly::t_pow(2))
    } else {
        one_plus_t2.pow(nvars - subset.len())
    };
    let den = LaurentPoly::one().sub(&LaurentPoly::t_pow(2));
    RationalFn::new(num, den)
}

/// Coefficients of the closed-form series in graded degrees
/// `0, 2, 4, ..., 2 * max_exp_degree`.
pub fn hilbert_series_prefix(nvars: usize, subset: &[usize], max_exp_degree: u32) -> Result<Vec<u64>> {
    let series = hilbert_closed_form(nvars, subset)?;
    let window = 2 * max_exp_degree as usize;
    let coeffs = series.series_prefix(window)?;
    // slot d + window holds the coefficient of t^d
    let mut out = Vec::new();
    for m in 0..=max_exp_degree as usize {
        let c = &coeffs[2 * m + window];
        let as_u64 = u64::try_from(c).map_err(|_| {
            Error::SeriesExpansion(format!("negative or huge coefficient {c} at degree {}", 2 * m))
        })?;
        out.push(as_u64);
        // odd slots must vanish
        if 2 * m < window {
            let odd = &coeffs[2 * m + 1 + window];
            if !odd.is_zero() {
                return Err(Error::SeriesExpansion(format!(
                    "odd-degree coefficient {odd} at degree {}",
                    2 * m + 1
                )));
            }
        }
    }
    Ok(out)
}

/// Dimension of the degree-`2m` piece of the ideal spanned by the given
/// homogeneous generators: exact sparse rank of the multiplication matrix
/// (rows: monomial multiples of generators; columns: degree-`2m` monomials).
pub fn ideal_piece_dim(nvars: usize, gens: &[Poly], exp_degree: u32) -> Result<usize> {
    let target = monomials_of_exp_degree(nvars, exp_degree);
    let col_of: BTreeMap<Vec<u32>, usize> =
        target.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let mut matrix = SparseMatrix::new(target.len());
    for g in gens {
        let Some(gdeg) = g.homogeneous_degree()? else {
            continue; // zero generator spans nothing
        };
        debug_assert_eq!(gdeg % 2, 0);
        let gexp = (gdeg / 2) as u32;
        if gexp > exp_degree {
            continue;
        }
        for q in monomials_of_exp_degree(nvars, exp_degree - gexp) {
            let prod = g.mul_monomial(&q, &Rat::one());
            matrix.add_row(prod.terms().map(|(e, c)| (col_of[e], c.clone())));
        }
    }
    Ok(matrix.rank())
}

/// Dimension of the full polynomial ring in exponent degree `m`.
pub fn ring_piece_dim(nvars: usize, exp_degree: u32) -> usize {
    monomials_of_exp_degree(nvars, exp_degree).len()
}

/// Compute the quotient's graded dimensions three independent ways up to
/// exponent degree `max_exp_degree` and insist they agree:
/// irreducible-monomial counts, closed-form series coefficients, and
/// `dim R_m - rank` from exact linear algebra. Returns the common values.
pub fn hilbert_triple_check(
    nvars: usize,
    subset: &[usize],
    max_exp_degree: u32,
) -> Result<Vec<u64>> {
    let system = RewriteSystem::new(nvars, subset)?;
    let by_series = hilbert_series_prefix(nvars, subset, max_exp_degree)?;
    let gens = generator_family(nvars, subset)?;
    let mut out = Vec::new();
    for m in 0..=max_exp_degree {
        let by_counting = system.irreducible_count(m);
        let rank = ideal_piece_dim(nvars, &gens, m)?;
        let by_rank = (ring_piece_dim(nvars, m) - rank) as u64;
        let by_s = by_series[m as usize];
        if by_counting != by_s || by_rank != by_s {
            return Err(Error::Verification(format!(
                "graded dimension mismatch at exponent degree {m}: \
                 counting {by_counting}, series {by_s}, rank {by_rank} \
                 (nvars {nvars}, subset {subset:?})"
            )));
        }
        out.push(by_s);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_int;

    fn nf(sys: &RewriteSystem, p: &Poly) -> Poly {
        sys.normal_form(p)
    }

    #[test]
    fn empty_subset_rules_shape() {
        let sys = RewriteSystem::new(3, &[]).unwrap();
        assert_eq!(sys.rules().len(), 3); // pairs (1,2), (1,3), (2,3)
        assert!(sys.pivot().is_none());
        // f1 f2^2 -> -f1^2 f2
        let lhs = Poly::monomial(3, vec![1, 2, 0], rat_int(1)).unwrap();
        let got = nf(&sys, &lhs);
        let want = Poly::monomial(3, vec![2, 1, 0], rat_int(-1)).unwrap();
        assert_eq!(got, want);
        // f1 f3^2 -> -(f1^2 f3 + 2 f1 f2 f3)
        let lhs = Poly::monomial(3, vec![1, 0, 2], rat_int(1)).unwrap();
        let got = nf(&sys, &lhs);
        let want = Poly::monomial(3, vec![2, 0, 1], rat_int(-1))
            .unwrap()
            .add(&Poly::monomial(3, vec![1, 1, 1], rat_int(-2)).unwrap());
        assert_eq!(got, want);
    }

    #[test]
    fn pivot_rules_shape() {
        // subset {1, 3} in 3 variables, pivot 1
        let sys = RewriteSystem::new(3, &[1, 3]).unwrap();
        assert_eq!(sys.pivot(), Some(1));
        assert_eq!(sys.rules().len(), 2);
        // f2^2 -> -f1 f2 ; f3 -> -(f1 + 2 f2)
        let got = nf(&sys, &Poly::monomial(3, vec![0, 2, 0], rat_int(1)).unwrap());
        assert_eq!(got, Poly::monomial(3, vec![1, 1, 0], rat_int(-1)).unwrap());
        let got = nf(&sys, &Poly::gen(3, 3).unwrap());
        let want = Poly::gen(3, 1).unwrap().neg().sub(&Poly::gen(3, 2).unwrap().scale(&rat_int(2)));
        assert_eq!(got, want);
    }

    #[test]
    fn full_subset_collapses_to_one_variable() {
        let sys = RewriteSystem::new(2, &[1, 2]).unwrap();
        // f2 -> -f1, so f2^2 -> f1^2
        let got = nf(&sys, &Poly::monomial(2, vec![0, 2], rat_int(1)).unwrap());
        assert_eq!(got, Poly::monomial(2, vec![2, 0], rat_int(1)).unwrap());
        for m in 0..=5 {
            assert_eq!(sys.irreducible_count(m), 1, "only f1^m survives");
        }
    }

    #[test]
    fn generators_vanish_in_quotient() {
        for n in 2..=4usize {
            for mask in 0..(1u32 << n) {
                let subset: Vec<usize> = (1..=n).filter(|m| mask >> (m - 1) & 1 == 1).collect();
                let pivots: Vec<Option<usize>> = if subset.is_empty() {
                    vec![None]
                } else {
                    subset.iter().map(|&p| Some(p)).collect()
                };
                for pivot in pivots {
                    let sys = match pivot {
                        None => RewriteSystem::new(n, &subset).unwrap(),
                        Some(p) => RewriteSystem::with_pivot(n, &subset, p).unwrap(),
                    };
                    sys.generators_reduce_to_zero().unwrap();
                }
            }
        }
    }

    #[test]
    fn rules_recombine_to_generators() {
        // lhs - rhs must literally equal the generator it came from.
        let n = 4;
        let sys = RewriteSystem::new(n, &[2, 4]).unwrap();
        for rule in sys.rules() {
            let diff = Poly::monomial(n, rule.lhs.clone(), rat_int(1)).unwrap().sub(&rule.rhs);
            // the difference is one of the z generators
            let family = generator_family(n, &[2, 4]).unwrap();
            assert!(family.contains(&diff), "rule difference {diff} not a generator");
        }
    }

    #[test]
    fn confluence_small_systems() {
        for n in 2..=4usize {
            for mask in 0..(1u32 << n) {
                let subset: Vec<usize> = (1..=n).filter(|m| mask >> (m - 1) & 1 == 1).collect();
                let pivots: Vec<Option<usize>> = if subset.is_empty() {
                    vec![None]
                } else {
                    subset.iter().map(|&p| Some(p)).collect()
                };
                for pivot in pivots {
                    let sys = match pivot {
                        None => RewriteSystem::new(n, &subset).unwrap(),
                        Some(p) => RewriteSystem::with_pivot(n, &subset, p).unwrap(),
                    };
                    let checked = sys.confluence_check(6).unwrap();
                    if !sys.rules().is_empty() && n >= 2 {
                        assert!(checked > 0 || sys.rules().len() < 2, "n={n} {subset:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn hilbert_prefixes_frozen() {
        // n = 2, empty subset: 1, 2, 3, 3, 3
        assert_eq!(hilbert_series_prefix(2, &[], 4).unwrap(), vec![1, 2, 3, 3, 3]);
        // n = 2, subset {1}: 1, 2, 2, 2
        assert_eq!(hilbert_series_prefix(2, &[1], 3).unwrap(), vec![1, 2, 2, 2]);
        // n = 3, empty subset: 1, 3, 6, 7, 7
        assert_eq!(hilbert_series_prefix(3, &[], 4).unwrap(), vec![1, 3, 6, 7, 7]);
        // n = 3, subset {2}: (1 + t^2)^2 / (1 - t^2) -> 1, 3, 4, 4
        assert_eq!(hilbert_series_prefix(3, &[2], 3).unwrap(), vec![1, 3, 4, 4]);
    }

    #[test]
    fn triple_agreement() {
        for n in 2..=3usize {
            for mask in 0..(1u32 << n) {
                let subset: Vec<usize> = (1..=n).filter(|m| mask >> (m - 1) & 1 == 1).collect();
                let dims = hilbert_triple_check(n, &subset, 5).unwrap();
                // stabilization at 2^(n-d) (or 2^n - 1 for the empty subset)
                let stable = if subset.is_empty() {
                    (1u64 << n) - 1
                } else {
                    1u64 << (n - subset.len())
                };
                assert_eq!(dims[5], stable, "n={n} subset={subset:?}");
                assert_eq!(dims[4], stable, "n={n} subset={subset:?}");
            }
        }
    }

    #[test]
    fn pivot_choice_does_not_change_dimensions() {
        let n = 4;
        let subset = [1usize, 3, 4];
        let mut tables = Vec::new();
        for &p in &subset {
            let sys = RewriteSystem::with_pivot(n, &subset, p).unwrap();
            let counts: Vec<u64> = (0..=5).map(|m| sys.irreducible_count(m)).collect();
            tables.push(counts);
        }
        assert!(tables.windows(2).all(|w| w[0] == w[1]), "{tables:?}");
    }

    #[test]
    fn normal_form_is_idempotent_and_linear() {
        let n = 3;
        let sys = RewriteSystem::new(n, &[2]).unwrap();
        let p = Poly::monomial(n, vec![1, 2, 2], rat_int(5)).unwrap();
        let q = Poly::monomial(n, vec![0, 1, 3], rat_int(-2)).unwrap();
        let nf_p = nf(&sys, &p);
        let nf_q = nf(&sys, &q);
        assert_eq!(nf(&sys, &nf_p), nf_p, "idempotent");
        assert_eq!(nf(&sys, &p.add(&q)), nf_p.add(&nf_q), "additive");
        // reduction fixes irreducibles
        for e in sys.irreducible_monomials(3) {
            let m = Poly::monomial(n, e, rat_int(1)).unwrap();
            assert_eq!(nf(&sys, &m), m);
        }
    }

    #[test]
    fn subset_validation() {
        assert!(RewriteSystem::new(3, &[0]).is_err());
        assert!(RewriteSystem::new(3, &[4]).is_err());
        assert!(RewriteSystem::new(3, &[2, 2]).is_err());
        assert!(RewriteSystem::new(3, &[3, 1]).is_err());
        assert!(RewriteSystem::with_pivot(3, &[1, 2], 3).is_err());
    }

    #[test]
    fn no_generator_is_redundant() {
        // Dropping the (1,3) cubic at three variables shrinks exponent
        // degree 3: f_1 f_3^2 becomes irreducible without it.
        let outcomes = irredundancy_check(3, &[], 4).unwrap();
        assert_eq!(outcomes.len(), 3);
        for o in &outcomes {
            assert_eq!(o.shrink_degree, Some(3), "{o:?}");
        }
        // Single generator of a one-element subset at two variables.
        let outcomes = irredundancy_check(2, &[1], 4).unwrap();
        assert_eq!(outcomes.len(), 1);
        assert_eq!(outcomes[0].pivot, Some(1));
        assert!(outcomes[0].shrink_degree.is_some());
        // Pivot 2 of subset (2) at three variables needs both its members.
        let outcomes = irredundancy_check(3, &[2], 4).unwrap();
        assert_eq!(outcomes.len(), 2);
        assert_eq!(outcomes[0].dropped, (1, 2));
        assert_eq!(outcomes[1].dropped, (2, 3));
        for o in &outcomes {
            assert!(o.shrink_degree.is_some(), "{o:?}");
        }
        // Sweep everything small.
        for n in 1..=3usize {
            for mask in 0u32..(1 << n) {
                let subset: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                for o in irredundancy_check(n, &subset, 5).unwrap() {
                    assert!(o.shrink_degree.is_some(), "n={n} subset={subset:?} {o:?}");
                }
            }
        }
    }

    #[test]
    fn reduced_family_requires_valid_pivot() {
        assert!(reduced_generator_family(3, &[], 1).is_err());
        assert!(reduced_generator_family(3, &[2], 1).is_err());
        assert_eq!(reduced_generator_family(3, &[2], 2).unwrap().len(), 2);
    }
}
