//! Batch verification suites spanning every layer of the crate.
//!
//! [`run`] executes the suites selected by a [`SuiteConfig`] and collects
//! one [`crate::CheckRecord`] per executed check into a [`crate::Report`].
//! A false assertion becomes a `fail` record carrying a witness; a check
//! cut short by an enumeration or degree bound becomes `inconclusive`;
//! only a malformed config makes [`run`] itself return an error.
//!
//! Degree bounds are stated in the grading of the polynomial layer, where
//! the generators sit in degree 2, so a ceiling of `D` examines exponent
//! degrees up to `D / 2`. Suites iterate deterministically (suites in
//! declaration order, `n` ascending, index subsets in mask order), so two
//! runs over the same config produce identical reports.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use crate::cells::{self, CellModule, InducedModule};
use crate::diagram::{binomial, catalan, enumerate_caps, enumerate_matchings, Matching};
use crate::ideal;
use crate::laurent::{LaurentPoly, RationalFn};
use crate::report::{Report, Status};
use crate::tl::{word_diagram, TLElement, Trace};
use crate::weyl;
use crate::{Error, Result};

/// A named family of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Relations,
    Traces,
    Hilbert,
    Weyl,
    Cells,
    Confluence,
}

impl Suite {
    /// Every suite, in execution order.
    pub const ALL: [Suite; 6] = [
        Suite::Relations,
        Suite::Traces,
        Suite::Hilbert,
        Suite::Weyl,
        Suite::Cells,
        Suite::Confluence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Traces => "traces",
            Suite::Hilbert => "hilbert",
            Suite::Weyl => "weyl",
            Suite::Cells => "cells",
            Suite::Confluence => "confluence",
        }
    }

    pub fn from_name(name: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|s| s.name() == name)
            .ok_or_else(|| {
                Error::InvalidWord(format!(
                    "unknown suite `{name}` (expected relations, traces, hilbert, \
                     weyl, cells, or confluence)"
                ))
            })
    }
}

/// What to verify and how far to push the bounds.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Largest generator count; each suite runs once per `n` in `1..=n_max`.
    pub n_max: usize,
    /// Degree ceiling in the polynomial grading (even degrees are the ones
    /// populated; exponent degrees up to `max_degree / 2` are examined).
    pub max_degree: u32,
    /// Suites to execute; an empty list means all of them.
    pub suites: Vec<Suite>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_max: 4,
            max_degree: 12,
            suites: Suite::ALL.to_vec(),
        }
    }
}

/// Execute the configured suites and collect one record per check.
pub fn run(config: &SuiteConfig) -> Result<Report> {
    if config.n_max == 0 {
        return Err(Error::IndexOutOfRange {
            index: 0,
            context: "n_max must be at least 1".into(),
        });
    }
    if config.max_degree == 0 {
        return Err(Error::IndexOutOfRange {
            index: 0,
            context: "max_degree must be at least 1".into(),
        });
    }
    let mut suites = config.suites.clone();
    if suites.is_empty() {
        suites = Suite::ALL.to_vec();
    }
    suites.sort();
    suites.dedup();

    let mut report = Report::new();
    for suite in suites {
        for n in 1..=config.n_max {
            match suite {
                Suite::Relations => relations_suite(&mut report, n),
                Suite::Traces => traces_suite(&mut report, n),
                Suite::Hilbert => hilbert_suite(&mut report, n, config.max_degree),
                Suite::Weyl => weyl_suite(&mut report, n, config.max_degree),
                Suite::Cells => cells_suite(&mut report, n, config.max_degree),
                Suite::Confluence => confluence_suite(&mut report, n, config.max_degree),
            }
        }
    }
    Ok(report)
}

fn verdict(ok: bool, witness: String) -> Result<(Status, String)> {
    Ok((if ok { Status::Pass } else { Status::Fail }, witness))
}

/// Run one check closure and append its record, downgrading bound errors
/// to `inconclusive` and turning every other error into a `fail`.
fn run_check<F>(report: &mut Report, id: String, statement: &str, anchor: &str, f: F)
where
    F: FnOnce() -> Result<(Status, String)>,
{
    let (status, witness) = match f() {
        Ok(pair) => pair,
        Err(Error::BoundExceeded { requested, bound }) => (
            Status::Inconclusive,
            format!("bound exceeded: requested {requested}, bound {bound}"),
        ),
        Err(e) => (Status::Fail, e.to_string()),
    };
    report.add(id, statement, anchor, status, witness);
}

/// All subsets of `{1..n}` as increasing index lists, in mask order.
fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .map(|mask| (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect()
}

fn subset_tag(subset: &[usize]) -> String {
    if subset.is_empty() {
        "e".into()
    } else {
        let digits: String = subset.iter().map(|i| i.to_string()).collect();
        format!("i{digits}")
    }
}

fn one_minus_t2() -> LaurentPoly {
    LaurentPoly::one().sub(&LaurentPoly::t_pow(2))
}

/// Number of cap diagrams with `2 * caps` points matched among themselves.
fn ballot(strands: usize, caps: usize) -> u64 {
    let below = if caps == 0 { 0 } else { binomial(strands, caps - 1) };
    binomial(strands, caps) - below
}

fn relations_suite(report: &mut Report, n: usize) {
    let strands = n + 1;
    run_check(
        report,
        format!("relations.square.n{n}"),
        "each generator squares to [2] times itself",
        "tl.relations",
        || {
            let two = LaurentPoly::quantum_two();
            for i in 1..=n {
                let u = TLElement::generator(strands, i)?;
                if u.mul(&u)? != u.scale(&two) {
                    return verdict(false, format!("generator {i}"));
                }
            }
            verdict(true, format!("{n} generators"))
        },
    );
    run_check(
        report,
        format!("relations.commute.n{n}"),
        "generators at distance two or more commute",
        "tl.relations",
        || {
            let mut pairs = 0;
            for i in 1..=n {
                for j in i + 2..=n {
                    let ui = TLElement::generator(strands, i)?;
                    let uj = TLElement::generator(strands, j)?;
                    if ui.mul(&uj)? != uj.mul(&ui)? {
                        return verdict(false, format!("pair ({i}, {j})"));
                    }
                    pairs += 1;
                }
            }
            verdict(true, format!("{pairs} distant pairs"))
        },
    );
    run_check(
        report,
        format!("relations.sandwich.n{n}"),
        "a generator sandwiching an adjacent one reproduces itself",
        "tl.relations",
        || {
            let mut pairs = 0;
            for i in 1..=n {
                for j in [i.checked_sub(1).unwrap_or(usize::MAX), i + 1] {
                    if !(1..=n).contains(&j) {
                        continue;
                    }
                    let ui = TLElement::generator(strands, i)?;
                    let uj = TLElement::generator(strands, j)?;
                    if ui.mul(&uj)?.mul(&ui)? != ui {
                        return verdict(false, format!("pair ({i}, {j})"));
                    }
                    pairs += 1;
                }
            }
            verdict(true, format!("{pairs} adjacent pairs"))
        },
    );
    run_check(
        report,
        format!("relations.dimension.n{n}"),
        "crossingless matchings are counted by the Catalan number",
        "tl.dimension",
        || {
            let count = enumerate_matchings(strands)?.len() as u64;
            let expected = catalan(strands);
            verdict(count == expected, format!("{count} matchings, expected {expected}"))
        },
    );
}

fn traces_suite(report: &mut Report, n: usize) {
    let strands = n + 1;
    run_check(
        report,
        format!("traces.std.n{n}"),
        "circle-counting trace of an increasing word is [2]^(strands - letters)",
        "traces.values",
        || {
            for subset in subsets(n) {
                let x = TLElement::from_word(strands, &subset)?;
                let want =
                    RationalFn::from_poly(LaurentPoly::quantum_two_pow(strands - subset.len()));
                if Trace::Standard.trace(&x) != want {
                    return verdict(false, format!("word {subset:?}"));
                }
            }
            verdict(true, format!("{} increasing words", 1u32 << n))
        },
    );
    run_check(
        report,
        format!("traces.triv.n{n}"),
        "the maximal-nesting trace is 1 on the identity and 0 on every other word",
        "traces.values",
        || {
            if Trace::Trivial.trace(&TLElement::one(strands)) != RationalFn::one() {
                return verdict(false, "identity".into());
            }
            for subset in subsets(n).into_iter().filter(|s| !s.is_empty()) {
                let x = TLElement::from_word(strands, &subset)?;
                if !Trace::Trivial.trace(&x).is_zero() {
                    return verdict(false, format!("word {subset:?}"));
                }
            }
            verdict(true, format!("{} words", 1u32 << n))
        },
    );
    run_check(
        report,
        format!("traces.graded.n{n}"),
        "graded pairings of the identity against increasing words match their closed forms",
        "traces.values",
        || {
            let one = TLElement::one(strands);
            let den = one_minus_t2();
            for subset in subsets(n) {
                let x = TLElement::from_word(strands, &subset)?;
                let d = subset.len();
                let num = if d == 0 {
                    LaurentPoly::t_pow(n as i64)
                        .mul(&LaurentPoly::quantum_two_pow(n))
                        .sub(&LaurentPoly::t_pow(2))
                } else {
                    LaurentPoly::t_pow(n as i64).mul(&LaurentPoly::quantum_two_pow(n - d))
                };
                let want = RationalFn::new(num, den.clone())?;
                if Trace::Graded.pairing(&one, &x)? != want {
                    return verdict(false, format!("word {subset:?}"));
                }
            }
            verdict(true, format!("{} words", 1u32 << n))
        },
    );
    run_check(
        report,
        format!("traces.diagonal.n{n}"),
        "every non-identity diagram has the same graded self-pairing",
        "traces.values",
        || {
            let want = RationalFn::new(
                LaurentPoly::t_pow(n as i64).mul(&LaurentPoly::quantum_two_pow(n)),
                one_minus_t2(),
            )?;
            let mut count = 0;
            for m in enumerate_matchings(strands)? {
                if m.is_identity() {
                    continue;
                }
                let x = TLElement::from_matching(m);
                if Trace::Graded.pairing(&x, &x)? != want {
                    return verdict(false, format!("diagram {count}"));
                }
                count += 1;
            }
            verdict(true, format!("{count} diagrams"))
        },
    );
}

fn hilbert_suite(report: &mut Report, n: usize, max_degree: u32) {
    let exp = max_degree / 2;
    for subset in subsets(n) {
        let tag = subset_tag(&subset);
        let d = subset.len();
        run_check(
            report,
            format!("hilbert.triple.n{n}.{tag}"),
            "closed form, irreducible-monomial count, and quotient dimension agree degree by degree",
            "hilbert.triple",
            || {
                let prefix = ideal::hilbert_triple_check(n, &subset, exp)?;
                verdict(true, format!("prefix {prefix:?}"))
            },
        );
        run_check(
            report,
            format!("hilbert.stable.n{n}.{tag}"),
            "the quotient dimension stabilizes at its predicted tail value",
            "hilbert.stable",
            || {
                let threshold = if d == 0 { n } else { n - d };
                if (exp as usize) < threshold {
                    return Ok((
                        Status::Inconclusive,
                        format!("stabilization starts at exponent degree {threshold}, bound {exp}"),
                    ));
                }
                let prefix = ideal::hilbert_series_prefix(n, &subset, exp)?;
                let expected: u64 = if d == 0 {
                    (1u64 << n) - 1
                } else {
                    1u64 << (n - d)
                };
                let tail = prefix[exp as usize];
                verdict(tail == expected, format!("tail {tail}, expected {expected}"))
            },
        );
        run_check(
            report,
            format!("hilbert.shadow.n{n}.{tag}"),
            "t^d times the quotient series equals the graded pairing with the increasing word",
            "hilbert.shadow",
            || {
                let closed = ideal::hilbert_closed_form(n, &subset)?;
                let shadow = closed.mul_poly(&LaurentPoly::t_pow(d as i64));
                let one = TLElement::one(n + 1);
                let x = TLElement::from_word(n + 1, &subset)?;
                let pairing = Trace::Graded.pairing(&one, &x)?;
                verdict(shadow == pairing, format!("{shadow}"))
            },
        );
        run_check(
            report,
            format!("hilbert.irredundant.n{n}.{tag}"),
            "dropping any one generator strictly shrinks an ideal piece",
            "hilbert.irredundant",
            || {
                let outcomes = ideal::irredundancy_check(n, &subset, exp)?;
                if outcomes.is_empty() {
                    return verdict(true, "no generators to drop".into());
                }
                let unwitnessed = outcomes
                    .iter()
                    .filter(|o| o.shrink_degree.is_none())
                    .count();
                if unwitnessed == 0 {
                    verdict(true, format!("{} drops, each shrinks", outcomes.len()))
                } else {
                    Ok((
                        Status::Inconclusive,
                        format!(
                            "{unwitnessed} of {} drops show no shrink through exponent degree {exp}",
                            outcomes.len()
                        ),
                    ))
                }
            },
        );
    }
}

fn confluence_suite(report: &mut Report, n: usize, max_degree: u32) {
    let exp = max_degree / 2;
    for subset in subsets(n) {
        let tag = subset_tag(&subset);
        let pivots: Vec<Option<usize>> = if subset.is_empty() {
            vec![None]
        } else {
            subset.iter().map(|&k| Some(k)).collect()
        };
        for pivot in pivots {
            let id = match pivot {
                None => format!("confluence.system.n{n}.{tag}"),
                Some(k) => format!("confluence.system.n{n}.{tag}.p{k}"),
            };
            run_check(
                report,
                id,
                "overlap ambiguities resolve identically and generators rewrite to zero",
                "rewriting.confluence",
                || {
                    let sys = match pivot {
                        None => ideal::RewriteSystem::new(n, &subset)?,
                        Some(k) => ideal::RewriteSystem::with_pivot(n, &subset, k)?,
                    };
                    let pairs = sys.confluence_check(exp)?;
                    sys.generators_reduce_to_zero()?;
                    verdict(true, format!("{pairs} ambiguous monomials resolved"))
                },
            );
        }
    }
}

fn weyl_suite(report: &mut Report, n: usize, max_degree: u32) {
    let exp = max_degree / 2;
    run_check(
        report,
        format!("weyl.count.n{n}"),
        "two-block partition lines number 2^n - 1",
        "weyl.lines",
        || {
            let count = weyl::enumerate_lines(n)?.len();
            let expected = (1usize << n) - 1;
            verdict(count == expected, format!("{count} lines, expected {expected}"))
        },
    );
    run_check(
        report,
        format!("weyl.kernels.n{n}"),
        "partition enumeration matches the hyperplane-kernel computation",
        "weyl.lines",
        || {
            let mut a: Vec<_> = weyl::enumerate_lines(n)?
                .iter()
                .map(|l| l.direction().to_vec())
                .collect();
            let mut b: Vec<_> = weyl::lines_from_kernels(n)?
                .iter()
                .map(|l| l.direction().to_vec())
                .collect();
            a.sort();
            b.sort();
            verdict(a == b, format!("{} lines each way", a.len()))
        },
    );
    for subset in subsets(n) {
        let tag = subset_tag(&subset);
        let d = subset.len();
        run_check(
            report,
            format!("weyl.transverse.n{n}.{tag}"),
            "transverse-line count equals 2^(n-d) and the series numerator at t = 1",
            "weyl.transverse",
            || {
                let lines = weyl::transverse_lines(n, &subset)?;
                let expected: usize = if d == 0 { (1 << n) - 1 } else { 1 << (n - d) };
                let closed = ideal::hilbert_closed_form(n, &subset)?;
                let mut at_one = BigInt::zero();
                for (_, c) in closed.num().iter() {
                    at_one += c;
                }
                verdict(
                    lines.len() == expected && at_one == BigInt::from(expected as u64),
                    format!("{} lines, numerator at 1 is {at_one}, expected {expected}", lines.len()),
                )
            },
        );
        run_check(
            report,
            format!("weyl.vanishing.n{n}.{tag}"),
            "the ideal piece is exactly the polynomials vanishing on the transverse lines",
            "weyl.vanishing",
            || {
                let lines = weyl::transverse_lines(n, &subset)?;
                let gens = ideal::generator_family(n, &subset)?;
                for m in 0..=exp {
                    let from_ideal = ideal::ideal_piece_dim(n, &gens, m)?;
                    let from_lines = weyl::vanishing_piece_dim(&lines, n, m)?;
                    if from_ideal != from_lines {
                        return verdict(
                            false,
                            format!("degree {}: ideal {from_ideal}, vanishing {from_lines}", 2 * m),
                        );
                    }
                }
                verdict(true, format!("degrees 0..={} agree", 2 * exp))
            },
        );
        run_check(
            report,
            format!("weyl.restriction.n{n}.{tag}"),
            "evaluation on the transverse lines has the quotient dimension in every degree",
            "weyl.restriction",
            || {
                let lines = weyl::transverse_lines(n, &subset)?;
                let prefix = ideal::hilbert_series_prefix(n, &subset, exp)?;
                for m in 0..=exp {
                    let rank = weyl::restriction_dim(&lines, n, m)?;
                    if rank as u64 != prefix[m as usize] {
                        return verdict(
                            false,
                            format!("degree {}: rank {rank}, quotient {}", 2 * m, prefix[m as usize]),
                        );
                    }
                }
                verdict(true, format!("degrees 0..={} agree", 2 * exp))
            },
        );
    }
}

fn cells_suite(report: &mut Report, n: usize, max_degree: u32) {
    let strands = n + 1;
    run_check(
        report,
        format!("cells.counts.n{n}"),
        "cap counts are ballot numbers whose squares sum to the Catalan number",
        "cells.counts",
        || {
            let mut sum = 0u64;
            for caps in 0..=(strands / 2) {
                let found = enumerate_caps(strands, strands - 2 * caps)?.len() as u64;
                let expected = ballot(strands, caps);
                if found != expected {
                    return verdict(false, format!("{caps} caps: {found}, expected {expected}"));
                }
                sum += found * found;
            }
            let total = catalan(strands);
            verdict(sum == total, format!("sum of squares {sum}, total {total}"))
        },
    );
    run_check(
        report,
        format!("cells.table.n{n}"),
        "one-cap module action is [2] on a match, a shift on neighbours, zero at distance",
        "cells.action",
        || {
            let module = CellModule::new(strands, strands - 2)?;
            for i in 1..=n {
                let v = cells::single_cap(strands, i)?;
                for j in 1..=n {
                    let u = Matching::generator(strands, j)?;
                    let got = module.act_cap(&v, &u)?;
                    let want = if i == j {
                        Some((v.clone(), 1))
                    } else if i.abs_diff(j) == 1 {
                        Some((cells::single_cap(strands, j)?, 0))
                    } else {
                        None
                    };
                    if got != want {
                        return verdict(false, format!("cap {i}, generator {j}"));
                    }
                }
            }
            verdict(true, format!("{} action entries", n * n))
        },
    );
    for i in 1..=n {
        run_check(
            report,
            format!("cells.dims.n{n}.v{i}"),
            "module dimension splits by level and each subquotient matches the cell action",
            "cells.filtration",
            || {
                let v = InducedModule::new(strands, i)?;
                let dims = v.dimension_report()?;
                verdict(true, format!("dim {} = levels {:?}", dims.dim, dims.level_sizes))
            },
        );
        run_check(
            report,
            format!("cells.rank.n{n}.v{i}"),
            "the pairing space has rank one more than the maximal level",
            "cells.rank",
            || {
                let v = InducedModule::new(strands, i)?;
                let rank = v.pairing_space_rank()?;
                let expected = cells::max_level(strands, i) + 1;
                verdict(rank == expected, format!("rank {rank}, expected {expected}"))
            },
        );
        run_check(
            report,
            format!("cells.values.n{n}.v{i}"),
            "distinguished and tier-word pairings match their closed forms at every level",
            "cells.values",
            || {
                let v = InducedModule::new(strands, i)?;
                let den = one_minus_t2();
                let unit = Matching::identity(strands);
                let one_plus_t2 = LaurentPoly::one().add(&LaurentPoly::t_pow(2));
                for level in 0..=v.max_level() {
                    let dist = v.distinguished(level)?.clone();
                    let unit_want =
                        RationalFn::new(LaurentPoly::t_pow(level as i64), den.clone())?;
                    if v.pairing(&unit, &dist)? != unit_want {
                        return verdict(false, format!("level {level} unit pairing"));
                    }
                    let self_want = RationalFn::new(one_plus_t2.pow(level), den.clone())?;
                    if v.pairing(&dist, &dist)? != self_want {
                        return verdict(false, format!("level {level} distinguished self-pairing"));
                    }
                    let word = cells::tier_word(strands, i, level)?;
                    let (tier, circles) = word_diagram(strands, &word)?;
                    if circles != 0 {
                        return verdict(false, format!("level {level} tier word closes circles"));
                    }
                    if v.pairing(&tier, &tier)? != self_want {
                        return verdict(false, format!("level {level} tier self-pairing"));
                    }
                }
                verdict(true, format!("levels 0..={}", v.max_level()))
            },
        );
        run_check(
            report,
            format!("cells.positive.n{n}.v{i}"),
            "every basis pairing has non-negative coefficients and detects equality in degree zero",
            "cells.positivity",
            || {
                let v = InducedModule::new(strands, i)?;
                let bound = max_degree as usize;
                for (xi, x) in v.basis().iter().enumerate() {
                    for (yi, y) in v.basis().iter().enumerate() {
                        let coeffs = v.pairing(x, y)?.series_prefix(bound)?;
                        if coeffs.iter().any(|c| c.is_negative()) {
                            return verdict(false, format!("pair ({xi}, {yi}) goes negative"));
                        }
                        if coeffs[..bound].iter().any(|c| !c.is_zero()) {
                            return verdict(
                                false,
                                format!("pair ({xi}, {yi}) has negative-degree terms"),
                            );
                        }
                        let expected = if xi == yi { BigInt::one() } else { BigInt::zero() };
                        if coeffs[bound] != expected {
                            return verdict(false, format!("pair ({xi}, {yi}) at degree zero"));
                        }
                    }
                }
                verdict(
                    true,
                    format!("{} pairs through degree {bound}", v.dim() * v.dim()),
                )
            },
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()).unwrap(), s);
        }
        assert!(Suite::from_name("algebra").is_err());
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let config = SuiteConfig {
            n_max: 0,
            ..SuiteConfig::default()
        };
        assert!(run(&config).is_err());
        let config = SuiteConfig {
            max_degree: 0,
            ..SuiteConfig::default()
        };
        assert!(run(&config).is_err());
    }

    #[test]
    fn small_run_passes_every_suite() {
        let config = SuiteConfig {
            n_max: 2,
            max_degree: 8,
            suites: vec![],
        };
        let report = run(&config).unwrap();
        assert_eq!(report.overall(), Status::Pass);
        for record in report.records() {
            assert_eq!(record.status, Status::Pass, "{record:?}");
        }
        // Every suite contributed for both values of n.
        for suite in Suite::ALL {
            for n in 1..=2 {
                let prefix = format!("{}.", suite.name());
                let tail = format!("n{n}");
                assert!(
                    report
                        .records()
                        .iter()
                        .any(|r| r.id.starts_with(&prefix) && r.id.contains(&tail)),
                    "no record for {prefix}{tail}"
                );
            }
        }
    }

    #[test]
    fn selected_suites_only() {
        let config = SuiteConfig {
            n_max: 2,
            max_degree: 8,
            suites: vec![Suite::Relations, Suite::Relations],
        };
        let report = run(&config).unwrap();
        assert!(!report.is_empty());
        assert!(report
            .records()
            .iter()
            .all(|r| r.id.starts_with("relations.")));
    }

    #[test]
    fn runs_are_deterministic() {
        let config = SuiteConfig {
            n_max: 2,
            max_degree: 6,
            suites: vec![Suite::Hilbert, Suite::Weyl],
        };
        let a = run(&config).unwrap().render("json").unwrap();
        let b = run(&config).unwrap().render("json").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn tight_degree_bound_is_inconclusive_not_failing() {
        let config = SuiteConfig {
            n_max: 3,
            max_degree: 2,
            suites: vec![Suite::Hilbert],
        };
        let report = run(&config).unwrap();
        assert_eq!(report.overall(), Status::Inconclusive);
        assert!(report
            .records()
            .iter()
            .all(|r| r.status != Status::Fail), "nothing may hard-fail");
        assert_eq!(report.exit_code(), 2);
    }
}
