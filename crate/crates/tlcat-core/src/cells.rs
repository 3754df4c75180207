//! Cell modules over the diagram algebra, and the filtered right modules
//! induced at a single generator index.
//!
//! Two module families live here.
//!
//! * [`CellModule`] with parameters `(strands, through)`: free on the cap
//!   diagrams with that many through-strands.  A matching acts by stacking
//!   below a cap; composites that lose through-strands are sent to zero,
//!   every erased circle contributes a factor of `[2] = t + t^-1`.
//!
//! * [`InducedModule`] at an index `i`: free on the matchings whose top half
//!   is a block of concentric cups with the innermost cup at `(i, i+1)`.
//!   The span of all *other* matchings is a right ideal (top arcs of the
//!   upper factor survive composition, so a stray cup can never be repaired),
//!   hence "multiply, then drop non-members" is a genuine right action.
//!   Counting cups gives a filtration whose subquotients match the cell
//!   modules; [`InducedModule::dimension_report`] checks this by comparing
//!   action matrices under the half-diagram bijection.
//!
//! Invariants maintained and tested here:
//!
//! * membership of a matching is detected by its cup factor alone, and agrees
//!   with the exhaustive first-letter test [`first_letters`];
//! * the level-`l` basis slice is in bijection with `(strands, strands-2l)`
//!   cap diagrams, so dimensions are sums of ballot numbers;
//! * the delta pairings indexed by `l = 0..=max_level` are adjoint for the
//!   action of every generator and evaluate to the identity matrix on the
//!   distinguished matchings, certifying a pairing space of rank
//!   `max_level + 1`;
//! * on every pair where the delta pairing is non-zero it agrees with the
//!   closure count [`closure_pairing`], whose exponent `l + m - strands` is
//!   then non-negative.

use std::collections::{BTreeMap, BTreeSet};

use crate::diagram::{enumerate_caps, enumerate_matchings, CapDiagram, Diagram, Matching};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, RationalFn};
use crate::par;
use crate::tl::{word_diagram, TLElement};

fn check_index(strands: usize, index: usize) -> Result<()> {
    if index == 0 || index + 1 > strands {
        return Err(Error::IndexOutOfRange {
            index,
            context: format!("module index for {strands} strands"),
        });
    }
    Ok(())
}

/// Largest cup count whose concentric block around `index` stays in range.
pub fn max_level(strands: usize, index: usize) -> usize {
    index.min(strands - index)
}

/// The `(strands, strands-2)` cap diagram whose single cap joins bottom
/// points `j` and `j+1` (1-based).
pub fn single_cap(strands: usize, j: usize) -> Result<CapDiagram> {
    check_index(strands, j)?;
    let k = strands - 2;
    let mut pairing = vec![usize::MAX; strands + k];
    pairing[j - 1] = j;
    pairing[j] = j - 1;
    let mut next_top = strands;
    for p in 0..strands {
        if p == j - 1 || p == j {
            continue;
        }
        pairing[p] = next_top;
        pairing[next_top] = p;
        next_top += 1;
    }
    CapDiagram::from_diagram(Diagram::new(strands, k, pairing)?)
}

/// The cap diagram with `level` concentric caps whose innermost cap joins
/// bottom points `(index, index+1)`; remaining points pass through in order.
/// `level = 0` gives the identity-shaped cap diagram.
pub fn nested_cap(strands: usize, index: usize, level: usize) -> Result<CapDiagram> {
    check_index(strands, index)?;
    if level > max_level(strands, index) {
        return Err(Error::BoundExceeded { requested: level, bound: max_level(strands, index) });
    }
    let k = strands - 2 * level;
    let mut pairing = vec![usize::MAX; strands + k];
    for r in 0..level {
        let a = index - 1 - r;
        let b = index + r;
        pairing[a] = b;
        pairing[b] = a;
    }
    let mut next_top = strands;
    for p in 0..strands {
        if pairing[p] == usize::MAX {
            pairing[p] = next_top;
            pairing[next_top] = p;
            next_top += 1;
        }
    }
    CapDiagram::from_diagram(Diagram::new(strands, k, pairing)?)
}

/// Matching whose bottom half is `lower` and whose top half is the mirror of
/// `upper`.  The two halves meet along their through-strands, so no circles
/// are created.
pub fn matching_from_halves(upper: &CapDiagram, lower: &CapDiagram) -> Result<Matching> {
    if upper.strands() != lower.strands() || upper.through() != lower.through() {
        return Err(Error::StrandMismatch { left: upper.strands(), right: lower.strands() });
    }
    let (d, circles) = Diagram::compose(&upper.diagram().flip(), lower.diagram())?;
    debug_assert_eq!(circles, 0);
    Matching::from_diagram(d)
}

/// The level-`l` distinguished matching at `index`: the nested cap block
/// surmounted by its own mirror image.  Level 0 is the identity matching.
pub fn distinguished_matching(strands: usize, index: usize, level: usize) -> Result<Matching> {
    let a = nested_cap(strands, index, level)?;
    matching_from_halves(&a, &a)
}

/// `Some(l)` when the top half of `x` is exactly the concentric cup block of
/// [`nested_cap`]`(strands, index, l)`; `None` otherwise.  The level is
/// forced by the through-strand count, so only one comparison is needed.
pub fn membership_level(index: usize, x: &Matching) -> Result<Option<usize>> {
    let strands = x.strands();
    check_index(strands, index)?;
    let level = (strands - x.through_strands()) / 2;
    if level > max_level(strands, index) {
        return Ok(None);
    }
    let expected = nested_cap(strands, index, level)?;
    let (_, cup) = x.cap_cup_factor();
    Ok(if cup == expected.diagram().flip() { Some(level) } else { None })
}

/// Indices `j` such that `x` is the matching part of `u_j * y` for some
/// matching `y` — the possible first letters of a word evaluating to `x`
/// (up to `[2]` factors).  Exhaustive over all matchings, so bounded by the
/// enumeration guard.
pub fn first_letters(x: &Matching) -> Result<BTreeSet<usize>> {
    let strands = x.strands();
    let mut letters = BTreeSet::new();
    let all = enumerate_matchings(strands)?;
    for j in 1..strands {
        let gen = Matching::generator(strands, j)?;
        for y in &all {
            let (m, _) = Matching::compose(&gen, y)?;
            if &m == x {
                letters.insert(j);
                break;
            }
        }
    }
    Ok(letters)
}

/// Free module on the `(strands, through)` cap diagrams, with matchings
/// acting from below and through-strand loss sending a term to zero.
#[derive(Debug, Clone)]
pub struct CellModule {
    strands: usize,
    through: usize,
    basis: Vec<CapDiagram>,
}

/// Element of a [`CellModule`]: finitely many caps with Laurent coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellElement {
    strands: usize,
    through: usize,
    coeffs: BTreeMap<CapDiagram, LaurentPoly>,
}

impl CellElement {
    pub fn zero(strands: usize, through: usize) -> Self {
        CellElement { strands, through, coeffs: BTreeMap::new() }
    }

    pub fn from_cap(cap: &CapDiagram) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(cap.clone(), LaurentPoly::one());
        CellElement { strands: cap.strands(), through: cap.through(), coeffs }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn through(&self) -> usize {
        self.through
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&CapDiagram, &LaurentPoly)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, cap: &CapDiagram) -> LaurentPoly {
        self.coeffs.get(cap).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    fn insert_add(&mut self, cap: CapDiagram, c: LaurentPoly) {
        let sum = match self.coeffs.get(&cap) {
            Some(old) => old.add(&c),
            None => c,
        };
        if sum.is_zero() {
            self.coeffs.remove(&cap);
        } else {
            self.coeffs.insert(cap, sum);
        }
    }

    pub fn add(&self, rhs: &CellElement) -> Result<CellElement> {
        if self.strands != rhs.strands || self.through != rhs.through {
            return Err(Error::StrandMismatch { left: self.strands, right: rhs.strands });
        }
        let mut out = self.clone();
        for (cap, c) in &rhs.coeffs {
            out.insert_add(cap.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, by: &LaurentPoly) -> CellElement {
        if by.is_zero() {
            return CellElement::zero(self.strands, self.through);
        }
        let coeffs = self.coeffs.iter().map(|(cap, c)| (cap.clone(), c.mul(by))).collect();
        CellElement { strands: self.strands, through: self.through, coeffs }
    }
}

impl CellModule {
    pub fn new(strands: usize, through: usize) -> Result<Self> {
        let basis = enumerate_caps(strands, through)?;
        Ok(CellModule { strands, through, basis })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn through(&self) -> usize {
        self.through
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[CapDiagram] {
        &self.basis
    }

    pub fn basis_index(&self, cap: &CapDiagram) -> Option<usize> {
        self.basis.iter().position(|b| b == cap)
    }

    /// One basis cap acted on by one matching: `None` when through-strands
    /// drop, otherwise the image cap together with its erased-circle count.
    pub fn act_cap(&self, cap: &CapDiagram, u: &Matching) -> Result<Option<(CapDiagram, usize)>> {
        if cap.strands() != self.strands || u.strands() != self.strands {
            return Err(Error::StrandMismatch { left: cap.strands(), right: u.strands() });
        }
        let (d, circles) = Diagram::compose(cap.diagram(), u.diagram())?;
        if d.through_strands() < self.through {
            return Ok(None);
        }
        Ok(Some((CapDiagram::from_diagram(d)?, circles)))
    }

    pub fn act(&self, v: &CellElement, u: &TLElement) -> Result<CellElement> {
        if v.strands != self.strands || v.through != self.through {
            return Err(Error::StrandMismatch { left: v.strands, right: self.strands });
        }
        let mut out = CellElement::zero(self.strands, self.through);
        for (cap, c) in &v.coeffs {
            for (m, cm) in u.terms() {
                if let Some((image, circles)) = self.act_cap(cap, m)? {
                    let coeff = c.mul(cm).mul(&LaurentPoly::quantum_two_pow(circles));
                    out.insert_add(image, coeff);
                }
            }
        }
        Ok(out)
    }

    /// Row `r` lists the coefficients of `basis[r] * u` over the basis.
    pub fn action_matrix(&self, u: &Matching) -> Result<Vec<Vec<LaurentPoly>>> {
        let mut rows = Vec::with_capacity(self.basis.len());
        for cap in &self.basis {
            let mut row = vec![LaurentPoly::zero(); self.basis.len()];
            if let Some((image, circles)) = self.act_cap(cap, u)? {
                let col = self.basis_index(&image).ok_or_else(|| {
                    Error::InvalidDiagram("cell action image missing from basis".into())
                })?;
                row[col] = LaurentPoly::quantum_two_pow(circles);
            }
            rows.push(row);
        }
        Ok(rows)
    }
}

/// Element of an [`InducedModule`]: matchings from the member basis with
/// Laurent coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VElement {
    strands: usize,
    index: usize,
    coeffs: BTreeMap<Matching, LaurentPoly>,
}

impl VElement {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Matching, &LaurentPoly)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, m: &Matching) -> LaurentPoly {
        self.coeffs.get(m).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    fn insert_add(&mut self, m: Matching, c: LaurentPoly) {
        let sum = match self.coeffs.get(&m) {
            Some(old) => old.add(&c),
            None => c,
        };
        if sum.is_zero() {
            self.coeffs.remove(&m);
        } else {
            self.coeffs.insert(m, sum);
        }
    }

    pub fn add(&self, rhs: &VElement) -> Result<VElement> {
        if self.strands != rhs.strands || self.index != rhs.index {
            return Err(Error::StrandMismatch { left: self.strands, right: rhs.strands });
        }
        let mut out = self.clone();
        for (m, c) in &rhs.coeffs {
            out.insert_add(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, by: &LaurentPoly) -> VElement {
        if by.is_zero() {
            return VElement { strands: self.strands, index: self.index, coeffs: BTreeMap::new() };
        }
        let coeffs = self.coeffs.iter().map(|(m, c)| (m.clone(), c.mul(by))).collect();
        VElement { strands: self.strands, index: self.index, coeffs }
    }
}

/// Summary returned by [`InducedModule::dimension_report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    /// Total basis size.
    pub dim: usize,
    /// Basis count per level; entry `l` equals the `(strands, strands-2l)`
    /// cap-diagram count.
    pub level_sizes: Vec<usize>,
}

/// Right module on the matchings whose top cups nest concentrically around
/// one index, filtered by cup count.
#[derive(Debug, Clone)]
pub struct InducedModule {
    strands: usize,
    index: usize,
    basis: Vec<Matching>,
    levels: Vec<usize>,
    positions: BTreeMap<Matching, usize>,
    distinguished: Vec<Matching>,
}

impl InducedModule {
    pub fn new(strands: usize, index: usize) -> Result<Self> {
        check_index(strands, index)?;
        let mut graded: Vec<(usize, Matching)> = Vec::new();
        for x in enumerate_matchings(strands)? {
            if let Some(level) = membership_level(index, &x)? {
                graded.push((level, x));
            }
        }
        graded.sort();
        let levels: Vec<usize> = graded.iter().map(|(l, _)| *l).collect();
        let basis: Vec<Matching> = graded.into_iter().map(|(_, x)| x).collect();
        let positions = basis.iter().cloned().zip(0..).collect();
        let distinguished = (0..=max_level(strands, index))
            .map(|l| distinguished_matching(strands, index, l))
            .collect::<Result<Vec<_>>>()?;
        Ok(InducedModule { strands, index, basis, levels, positions, distinguished })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matching] {
        &self.basis
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    pub fn max_level(&self) -> usize {
        max_level(self.strands, self.index)
    }

    pub fn basis_position(&self, x: &Matching) -> Option<usize> {
        self.positions.get(x).copied()
    }

    /// The level-`l` distinguished matching (cached).
    pub fn distinguished(&self, level: usize) -> Result<&Matching> {
        self.distinguished.get(level).ok_or(Error::BoundExceeded {
            requested: level,
            bound: self.max_level(),
        })
    }

    pub fn zero(&self) -> VElement {
        VElement { strands: self.strands, index: self.index, coeffs: BTreeMap::new() }
    }

    pub fn basis_element(&self, idx: usize) -> Result<VElement> {
        let m = self.basis.get(idx).ok_or(Error::IndexOutOfRange {
            index: idx,
            context: "induced module basis".into(),
        })?;
        let mut out = self.zero();
        out.insert_add(m.clone(), LaurentPoly::one());
        Ok(out)
    }

    /// Wrap a coefficient map, rejecting matchings outside the basis.
    pub fn element(&self, coeffs: BTreeMap<Matching, LaurentPoly>) -> Result<VElement> {
        let mut out = self.zero();
        for (m, c) in coeffs {
            if self.basis_position(&m).is_none() {
                return Err(Error::InvalidDiagram(format!(
                    "matching {m} is not a basis member at index {}",
                    self.index
                )));
            }
            out.insert_add(m, c);
        }
        Ok(out)
    }

    /// One basis matching times one matching: multiply, erase circles into
    /// `[2]` powers, and drop the term if it leaves the member basis.
    pub fn act_matching(&self, x: &Matching, u: &Matching) -> Result<VElement> {
        if x.strands() != self.strands || u.strands() != self.strands {
            return Err(Error::StrandMismatch { left: x.strands(), right: u.strands() });
        }
        let (m, circles) = Matching::compose(x, u)?;
        let mut out = self.zero();
        if self.basis_position(&m).is_some() {
            out.insert_add(m, LaurentPoly::quantum_two_pow(circles));
        }
        Ok(out)
    }

    pub fn act(&self, v: &VElement, u: &TLElement) -> Result<VElement> {
        if v.strands != self.strands || v.index != self.index {
            return Err(Error::StrandMismatch { left: v.strands, right: self.strands });
        }
        if u.strands() != self.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: u.strands() });
        }
        let mut out = self.zero();
        for (x, cx) in &v.coeffs {
            for (m, cm) in u.terms() {
                let image = self.act_matching(x, m)?;
                for (y, cy) in &image.coeffs {
                    out.insert_add(y.clone(), cx.mul(cm).mul(cy));
                }
            }
        }
        Ok(out)
    }

    /// Action matrix of `u` on the whole module; row `r` expands
    /// `basis[r] * u`.
    pub fn action_matrix(&self, u: &TLElement) -> Result<Vec<Vec<LaurentPoly>>> {
        let mut rows = Vec::with_capacity(self.dim());
        for r in 0..self.dim() {
            let image = self.act(&self.basis_element(r)?, u)?;
            let mut row = vec![LaurentPoly::zero(); self.dim()];
            for (m, c) in image.coeffs() {
                row[self.basis_position(m).expect("image stays in basis")] = c.clone();
            }
            rows.push(row);
        }
        Ok(rows)
    }

    /// Action of a matching on the level-`l` subquotient: terms that sink to
    /// a deeper level (or leave the module) are zero.
    pub fn subquotient_action_matrix(&self, level: usize, u: &Matching) -> Result<Vec<Vec<LaurentPoly>>> {
        let slice: Vec<usize> =
            (0..self.dim()).filter(|&r| self.levels[r] == level).collect();
        let mut rows = Vec::with_capacity(slice.len());
        for &r in &slice {
            let mut row = vec![LaurentPoly::zero(); slice.len()];
            let (m, circles) = Matching::compose(&self.basis[r], u)?;
            if let Some(p) = self.basis_position(&m) {
                if self.levels[p] == level {
                    let col = slice.binary_search(&p).expect("same-level image");
                    row[col] = LaurentPoly::quantum_two_pow(circles);
                }
            }
            rows.push(row);
        }
        Ok(rows)
    }

    /// Check the two structural counts: each level slice is in bijection
    /// with the cap diagrams of the matching through-strand count, and the
    /// subquotient action of every generator agrees with the corresponding
    /// cell module under that bijection.
    pub fn dimension_report(&self) -> Result<DimensionReport> {
        let mut level_sizes = vec![0usize; self.max_level() + 1];
        for &l in &self.levels {
            level_sizes[l] += 1;
        }
        for (l, &size) in level_sizes.iter().enumerate() {
            let through = self.strands - 2 * l;
            let cell = CellModule::new(self.strands, through)?;
            if cell.dim() != size {
                return Err(Error::Verification(format!(
                    "level {l} has {size} basis members but {} caps",
                    cell.dim()
                )));
            }
            // Bijection b -> matching with the nested top half over b.
            let a = nested_cap(self.strands, self.index, l)?;
            let slice: Vec<usize> =
                (0..self.dim()).filter(|&r| self.levels[r] == l).collect();
            let mut to_slice = Vec::with_capacity(cell.dim());
            for b in cell.basis() {
                let m = matching_from_halves(&a, b)?;
                let p = self.basis_position(&m).ok_or_else(|| {
                    Error::Verification(format!("assembled matching {m} missing at level {l}"))
                })?;
                to_slice.push(slice.binary_search(&p).map_err(|_| {
                    Error::Verification(format!("assembled matching {m} off-level"))
                })?);
            }
            for j in 1..self.strands {
                let u = Matching::generator(self.strands, j)?;
                let cell_rows = cell.action_matrix(&u)?;
                let sub_rows = self.subquotient_action_matrix(l, &u)?;
                for (r, cell_row) in cell_rows.iter().enumerate() {
                    for (c, entry) in cell_row.iter().enumerate() {
                        if sub_rows[to_slice[r]][to_slice[c]] != *entry {
                            return Err(Error::Verification(format!(
                                "level {l} subquotient disagrees with the cell action \
                                 at generator {j}, entry ({r}, {c})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(DimensionReport { dim: self.dim(), level_sizes })
    }

    /// Level-`l` delta pairing: `[2]^circles` when the matching of
    /// `y * flip(x)` is the level-`l` distinguished matching, zero otherwise.
    /// The product keeps `y` on top; the construction is not symmetric in
    /// any other order.
    pub fn delta_pairing(&self, level: usize, x: &Matching, y: &Matching) -> Result<LaurentPoly> {
        let target = self.distinguished(level)?;
        let (w, circles) = Matching::compose(y, &x.flip())?;
        Ok(if &w == target { LaurentPoly::quantum_two_pow(circles) } else { LaurentPoly::zero() })
    }

    fn delta_pairing_element(&self, level: usize, x: &VElement, y: &VElement) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero();
        for (mx, cx) in &x.coeffs {
            for (my, cy) in &y.coeffs {
                let p = self.delta_pairing(level, mx, my)?;
                if !p.is_zero() {
                    acc = acc.add(&cx.bar().mul(cy).mul(&p));
                }
            }
        }
        Ok(acc)
    }

    /// Pairing of two basis matchings: the product `y * flip(x)` lands on
    /// the level-`l` distinguished matching for at most one `l`, and the
    /// value is then `[2]^circles t^l / (1 - t^2)`; otherwise zero.  The
    /// denominator is always `1 - t^2` so values add cheaply.
    pub fn pairing(&self, x: &Matching, y: &Matching) -> Result<RationalFn> {
        let (w, circles) = Matching::compose(y, &x.flip())?;
        let mut num = LaurentPoly::zero();
        for (l, target) in self.distinguished.iter().enumerate() {
            if &w == target {
                num = LaurentPoly::quantum_two_pow(circles).mul(&LaurentPoly::t_pow(l as i64));
                break;
            }
        }
        RationalFn::new(num, one_minus_t2())
    }

    /// Pairing extended to elements; conjugate-linear in the first slot.
    pub fn pairing_elements(&self, x: &VElement, y: &VElement) -> Result<RationalFn> {
        let mut num = LaurentPoly::zero();
        for (l, _) in self.distinguished.iter().enumerate() {
            let p = self.delta_pairing_element(l, x, y)?;
            num = num.add(&p.mul(&LaurentPoly::t_pow(l as i64)));
        }
        RationalFn::new(num, one_minus_t2())
    }

    /// Full Gram matrix of [`InducedModule::pairing`] over the basis.
    pub fn gram(&self) -> Result<Vec<Vec<RationalFn>>> {
        let rows: Vec<Result<Vec<RationalFn>>> = par::map(
            self.basis.clone(),
            |x| self.basis.iter().map(|y| self.pairing(&x, y)).collect(),
        );
        rows.into_iter().collect()
    }

    /// Certifies the rank of the pairing space.
    ///
    /// For each level `l` the delta pairing is checked to be adjoint for
    /// every generator over all basis pairs (terms dropped by the action are
    /// paired against the whole basis and must vanish), and the matrix of
    /// delta values at `(identity, distinguished(l'))` must be the identity.
    /// Returns `max_level + 1`, the number of independent pairings.
    pub fn pairing_space_rank(&self) -> Result<usize> {
        let identity = Matching::identity(self.strands);
        for l in 0..=self.max_level() {
            for (l2, target) in self.distinguished.iter().enumerate() {
                let got = self.delta_pairing(l, &identity, target)?;
                let want =
                    if l == l2 { LaurentPoly::one() } else { LaurentPoly::zero() };
                if got != want {
                    return Err(Error::Verification(format!(
                        "delta evaluation at levels ({l}, {l2}) is {got}, not {want}"
                    )));
                }
            }
        }
        let gens: Vec<Matching> = (1..self.strands)
            .map(|j| Matching::generator(self.strands, j))
            .collect::<Result<_>>()?;
        let checks: Vec<Result<()>> = par::map(self.basis.clone(), |x| {
            for y in &self.basis {
                for u in &gens {
                    // Raw product terms that fall outside the basis must be
                    // invisible to every delta pairing.
                    let (m, _) = Matching::compose(&x, u)?;
                    if self.basis_position(&m).is_none() {
                        for l in 0..=self.max_level() {
                            let p = self.delta_pairing(l, &m, y)?;
                            if !p.is_zero() {
                                return Err(Error::Verification(format!(
                                    "dropped term {m} pairs to {p} at level {l}"
                                )));
                            }
                        }
                    }
                    let xe = {
                        let mut e = self.zero();
                        e.insert_add(x.clone(), LaurentPoly::one());
                        e
                    };
                    let ye = {
                        let mut e = self.zero();
                        e.insert_add(y.clone(), LaurentPoly::one());
                        e
                    };
                    let u_elem = TLElement::from_matching(u.clone());
                    let xa = self.act(&xe, &u_elem)?;
                    let ya = self.act(&ye, &u_elem)?;
                    for l in 0..=self.max_level() {
                        let lhs = self.delta_pairing_element(l, &xa, &ye)?;
                        let rhs = self.delta_pairing_element(l, &xe, &ya)?;
                        if lhs != rhs {
                            return Err(Error::Verification(format!(
                                "level-{l} delta pairing is not adjoint at \
                                 ({x}, {y}) under generator {u}"
                            )));
                        }
                    }
                }
            }
            Ok(())
        });
        for c in checks {
            c?;
        }
        Ok(self.max_level() + 1)
    }

    /// Basis members fixed setwise by the vertical flip; these are exactly
    /// the distinguished matchings, one per level.
    pub fn flip_stable_basis(&self) -> Vec<Matching> {
        self.basis
            .iter()
            .filter(|x| self.basis_position(&x.flip()).is_some())
            .cloned()
            .collect()
    }
}

fn one_minus_t2() -> LaurentPoly {
    LaurentPoly::one().sub(&LaurentPoly::t_pow(2))
}

/// Pairing value read off the annular closure of `y * flip(x)`.
///
/// With `m` total circles (erased during the multiplication plus closure
/// circles) and `l` determined by the closure nesting count
/// `strands - 2l`, the value is `[2]^(l+m-strands) t^l / (1 - t^2)`.
/// On pairs where the delta pairing of [`InducedModule`] is non-zero the two
/// agree and the exponent is the erased-circle count; elsewhere this raw
/// count is still defined but need not match, and the exponent may be
/// negative.  Invariant under sliding a factor from one slot to the other,
/// because closure statistics only depend on the cyclic product.
pub fn closure_pairing(x: &Matching, y: &Matching) -> Result<RationalFn> {
    if x.strands() != y.strands() {
        return Err(Error::StrandMismatch { left: x.strands(), right: y.strands() });
    }
    let strands = x.strands();
    let (w, erased) = Matching::compose(y, &x.flip())?;
    let stats = w.closure();
    if !(strands - stats.nesting).is_multiple_of(2) {
        return Err(Error::Parity(format!(
            "closure nesting {} has the wrong parity for {strands} strands",
            stats.nesting
        )));
    }
    let level = (strands - stats.nesting) / 2;
    let total = erased + stats.circles;
    let exponent = (level + total) as i64 - strands as i64;
    let t_level = LaurentPoly::t_pow(level as i64);
    if exponent >= 0 {
        RationalFn::new(
            LaurentPoly::quantum_two_pow(exponent as usize).mul(&t_level),
            one_minus_t2(),
        )
    } else {
        RationalFn::new(
            t_level,
            LaurentPoly::quantum_two_pow((-exponent) as usize).mul(&one_minus_t2()),
        )
    }
}

/// The distinguished member-basis word at level `l`: tier `m` runs
/// `index+m-1, index+m-3, ..., index-m+1` and the word concatenates tiers
/// `1..=l`.
///
/// Construction-time checks: the word evaluates with no erased circles to a
/// level-`level` member at `index`; removing any subset of the final tier
/// keeps the evaluation in the member basis, while removing any single
/// letter before the final tier leaves it.  (For `level <= 1` the
/// evaluation is the distinguished matching itself; deeper words evaluate
/// to other members of the same level, whose self-pairing is still
/// `(1+t^2)^level / (1-t^2)` because `x * flip(x)` erases one circle per
/// cup of `x`.)
pub fn tier_word(strands: usize, index: usize, level: usize) -> Result<Vec<usize>> {
    check_index(strands, index)?;
    if level > max_level(strands, index) {
        return Err(Error::BoundExceeded { requested: level, bound: max_level(strands, index) });
    }
    let mut word = Vec::new();
    for m in 1..=level {
        for s in 0..m {
            word.push(index + m - 1 - 2 * s);
        }
    }
    let (eval, circles) = word_diagram(strands, &word)?;
    if circles != 0 || membership_level(index, &eval)? != Some(level) {
        return Err(Error::Verification(format!(
            "tier word {word:?} evaluates to {eval} with {circles} circles, \
             expected a level-{level} member at index {index}"
        )));
    }
    let before_final_tier = word.len() - level;
    for p in 0..before_final_tier {
        let mut shorter = word.clone();
        shorter.remove(p);
        let (m, _) = word_diagram(strands, &shorter)?;
        if membership_level(index, &m)?.is_some() {
            return Err(Error::Verification(format!(
                "removing position {p} from {word:?} should leave the member basis"
            )));
        }
    }
    // Dropping any subset of the final tier must stay in the member basis.
    for mask in 0u32..(1 << level) {
        let kept: Vec<usize> = word
            .iter()
            .enumerate()
            .filter(|(p, _)| *p < before_final_tier || mask & (1 << (p - before_final_tier)) == 0)
            .map(|(_, &j)| j)
            .collect();
        let (m, _) = word_diagram(strands, &kept)?;
        if membership_level(index, &m)?.is_none() {
            return Err(Error::Verification(format!(
                "removing final-tier subset {mask:#b} from {word:?} should stay in the basis"
            )));
        }
    }
    Ok(word)
}
