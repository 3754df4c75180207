//! Planar (crossingless) diagrams between two rows of boundary points.
//!
//! A [`Diagram`] with `b` bottom points and `t` top points is a perfect
//! matching of the `b + t` boundary points that can be drawn in a rectangle
//! without crossings. Points are numbered `0..b` along the bottom
//! (left-to-right) and `b..b+t` along the top (left-to-right). Walking the
//! rectangle's boundary — bottom left-to-right, then top right-to-left —
//! visits the points in a circle, and "crossingless" means no two chords of
//! that circle interleave.
//!
//! Invariants:
//! - `pairing` is a fixed-point-free involution of `0..b+t`.
//! - No two pairs interleave in the boundary circle order.
//! - `b + t` is even (forced by the previous two).
//!
//! [`Matching`] is the square case `b = t = N`: the diagram basis of the
//! Temperley-Lieb algebra on `N` strands. Stacking one diagram on top of
//! another (gluing the middle boundary) is [`Diagram::compose`], which also
//! reports how many closed circles were erased from the middle. Wrapping a
//! square diagram's top boundary around to its bottom through a punctured
//! plane is [`Matching::closure`]; its circle and nesting counts drive every
//! trace computation in the crate.

use crate::error::{Error, Result};
use std::fmt;

/// Hard ceiling for exhaustive matching enumeration (Catalan growth).
pub const ENUMERATION_BOUND: usize = 8;

/// A crossingless perfect matching of two rows of boundary points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    n_bottom: usize,
    n_top: usize,
    pairing: Vec<usize>,
}

impl Diagram {
    /// Validate and build. `pairing[p]` is the partner of point `p`.
    pub fn new(n_bottom: usize, n_top: usize, pairing: Vec<usize>) -> Result<Self> {
        let total = n_bottom + n_top;
        if pairing.len() != total {
            return Err(Error::InvalidDiagram(format!(
                "pairing has {} entries for {} boundary points",
                pairing.len(),
                total
            )));
        }
        for (p, &q) in pairing.iter().enumerate() {
            if q >= total {
                return Err(Error::InvalidDiagram(format!("partner {q} of point {p} out of range")));
            }
            if q == p {
                return Err(Error::InvalidDiagram(format!("point {p} is paired with itself")));
            }
            if pairing[q] != p {
                return Err(Error::InvalidDiagram(format!("pairing is not an involution at {p}")));
            }
        }
        let d = Diagram { n_bottom, n_top, pairing };
        if let Some((a, b)) = d.find_crossing() {
            return Err(Error::InvalidDiagram(format!("arcs at points {a} and {b} cross")));
        }
        Ok(d)
    }

    pub fn n_bottom(&self) -> usize {
        self.n_bottom
    }

    pub fn n_top(&self) -> usize {
        self.n_top
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    pub fn partner(&self, p: usize) -> usize {
        self.pairing[p]
    }

    pub fn is_bottom(&self, p: usize) -> bool {
        p < self.n_bottom
    }

    /// Position of point `p` in the boundary circle (bottom left-to-right,
    /// then top right-to-left).
    fn circle_pos(&self, p: usize) -> usize {
        if p < self.n_bottom {
            p
        } else {
            self.n_bottom + self.n_top - 1 - (p - self.n_bottom)
        }
    }

    fn find_crossing(&self) -> Option<(usize, usize)> {
        let total = self.n_bottom + self.n_top;
        let chords: Vec<(usize, usize)> = (0..total)
            .filter(|&p| p < self.pairing[p])
            .map(|p| {
                let (a, b) = (self.circle_pos(p), self.circle_pos(self.pairing[p]));
                (a.min(b), a.max(b))
            })
            .collect();
        for (i, &(a1, b1)) in chords.iter().enumerate() {
            for &(a2, b2) in &chords[i + 1..] {
                let inside1 = a1 < a2 && a2 < b1;
                let inside2 = a1 < b2 && b2 < b1;
                if inside1 != inside2 {
                    return Some((a1, a2));
                }
            }
        }
        None
    }

    /// Number of strands running from the bottom boundary to the top.
    pub fn through_strands(&self) -> usize {
        (0..self.n_bottom).filter(|&p| self.pairing[p] >= self.n_bottom).count()
    }

    /// Exchange bottom and top (vertical mirror).
    pub fn flip(&self) -> Diagram {
        let total = self.n_bottom + self.n_top;
        let remap = |p: usize| -> usize {
            if p < self.n_bottom {
                self.n_top + p
            } else {
                p - self.n_bottom
            }
        };
        let mut pairing = vec![0; total];
        for p in 0..total {
            pairing[remap(p)] = remap(self.pairing[p]);
        }
        Diagram { n_bottom: self.n_top, n_top: self.n_bottom, pairing }
    }

    /// Stack `top` above `bottom`, gluing `bottom`'s top boundary to `top`'s
    /// bottom boundary. Returns the composite and the number of closed
    /// circles erased from the glued middle.
    pub fn compose(top: &Diagram, bottom: &Diagram) -> Result<(Diagram, usize)> {
        if bottom.n_top != top.n_bottom {
            return Err(Error::StrandMismatch { left: bottom.n_top, right: top.n_bottom });
        }
        let glue = bottom.n_top;
        let nb = bottom.n_bottom;
        let nt = top.n_top;
        // Composite point p < nb lives on `bottom`; p >= nb lives on `top`.
        // Walk from each external point, hopping across the glue.
        let mut pairing = vec![usize::MAX; nb + nt];
        let mut visited_mid = vec![false; glue]; // middle strand j: bottom.top_j == top.bottom_j
        let ext_of_bottom = |p: usize| -> Option<usize> { (p < nb).then_some(p) };
        let ext_of_top = |p: usize| -> Option<usize> { (p >= top.n_bottom).then(|| nb + (p - top.n_bottom)) };
        for start in 0..nb + nt {
            if pairing[start] != usize::MAX {
                continue;
            }
            // (side, point): side 0 = bottom diagram, 1 = top diagram.
            let (mut side, mut p) = if start < nb { (0, start) } else { (1, start - nb + top.n_bottom) };
            let end = loop {
                let q = if side == 0 { bottom.partner(p) } else { top.partner(p) };
                if side == 0 {
                    if let Some(e) = ext_of_bottom(q) {
                        break e;
                    }
                    // q is a middle point on `bottom`'s top row.
                    let j = q - bottom.n_bottom;
                    visited_mid[j] = true;
                    side = 1;
                    p = j; // same strand, seen from `top`'s bottom row
                } else {
                    if let Some(e) = ext_of_top(q) {
                        break e;
                    }
                    let j = q;
                    visited_mid[j] = true;
                    side = 0;
                    p = bottom.n_bottom + j;
                }
            };
            pairing[start] = end;
            pairing[end] = start;
        }
        // Circles: middle cycles never touched by an external walk.
        let mut circles = 0;
        for j0 in 0..glue {
            if visited_mid[j0] {
                continue;
            }
            circles += 1;
            let mut j = j0;
            loop {
                visited_mid[j] = true;
                // Across `top`: from its bottom point j to its partner.
                let q = top.partner(j);
                debug_assert!(q < top.n_bottom, "closed circle escaped to the boundary");
                visited_mid[q] = true;
                // Across `bottom`: from its top point q back down.
                let r = bottom.partner(bottom.n_bottom + q);
                debug_assert!(r >= bottom.n_bottom);
                j = r - bottom.n_bottom;
                if j == j0 {
                    break;
                }
            }
        }
        let composite = Diagram { n_bottom: nb, n_top: nt, pairing };
        debug_assert!(composite.find_crossing().is_none());
        Ok((composite, circles))
    }

    /// Serialize as the plain partner array.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.pairing)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |p: usize| -> String {
            if p < self.n_bottom {
                format!("b{}", p + 1)
            } else {
                format!("t{}", p - self.n_bottom + 1)
            }
        };
        let mut first = true;
        for p in 0..self.pairing.len() {
            if p < self.pairing[p] {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}-{}", name(p), name(self.pairing[p]))?;
                first = false;
            }
        }
        Ok(())
    }
}

/// Circle statistics of a closed-up square diagram in the punctured plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureStats {
    /// Total number of circles in the closed diagram.
    pub circles: usize,
    /// How many of them wind around the puncture.
    pub nesting: usize,
}

/// A crossingless matching on `N` strands: the square case of [`Diagram`],
/// and the free-module basis of the Temperley-Lieb algebra.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching(Diagram);

impl Matching {
    pub fn new(strands: usize, pairing: Vec<usize>) -> Result<Self> {
        let d = Diagram::new(strands, strands, pairing)?;
        Ok(Matching(d))
    }

    pub fn from_diagram(d: Diagram) -> Result<Self> {
        if d.n_bottom != d.n_top {
            return Err(Error::StrandMismatch { left: d.n_bottom, right: d.n_top });
        }
        Ok(Matching(d))
    }

    /// The identity: every bottom point wired straight up.
    pub fn identity(strands: usize) -> Self {
        let pairing = (0..2 * strands).map(|p| (p + strands) % (2 * strands)).collect();
        Matching(Diagram { n_bottom: strands, n_top: strands, pairing })
    }

    /// The diagram of the generator `u_i` (1-based, `1 <= i <= strands - 1`):
    /// bottom points `i, i+1` joined, top points `i, i+1` joined, every other
    /// strand vertical.
    pub fn generator(strands: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= strands {
            return Err(Error::IndexOutOfRange {
                index: i,
                context: format!("generator on {strands} strands needs 1 <= i <= {}", strands - 1),
            });
        }
        let mut m = Matching::identity(strands);
        let (a, b) = (i - 1, i); // 0-based bottom points
        m.0.pairing[a] = b;
        m.0.pairing[b] = a;
        m.0.pairing[strands + a] = strands + b;
        m.0.pairing[strands + b] = strands + a;
        Ok(m)
    }

    pub fn strands(&self) -> usize {
        self.0.n_bottom
    }

    pub fn diagram(&self) -> &Diagram {
        &self.0
    }

    pub fn pairing(&self) -> &[usize] {
        self.0.pairing()
    }

    pub fn through_strands(&self) -> usize {
        self.0.through_strands()
    }

    pub fn flip(&self) -> Matching {
        Matching(self.0.flip())
    }

    pub fn is_identity(&self) -> bool {
        *self == Matching::identity(self.strands())
    }

    /// Stack `top` above `bottom` and erase middle circles.
    pub fn compose(top: &Matching, bottom: &Matching) -> Result<(Matching, usize)> {
        if top.strands() != bottom.strands() {
            return Err(Error::StrandMismatch { left: top.strands(), right: bottom.strands() });
        }
        let (d, c) = Diagram::compose(&top.0, &bottom.0)?;
        Ok((Matching(d), c))
    }

    /// Close the diagram around a puncture: join top point `i` to bottom
    /// point `i` for every `i` by arcs that all pass the puncture on the same
    /// side. Circles are the cycles of (pairing ∪ closure arcs); a circle
    /// winds the puncture iff its net signed count of closure-arc traversals
    /// (+1 per top→bottom, −1 per bottom→top) is nonzero.
    pub fn closure(&self) -> ClosureStats {
        let n = self.strands();
        let mut seen = vec![false; 2 * n];
        let mut circles = 0;
        let mut nesting = 0;
        for start in 0..2 * n {
            if seen[start] {
                continue;
            }
            circles += 1;
            let mut winding: i64 = 0;
            let mut p = start;
            loop {
                seen[p] = true;
                let q = self.0.partner(p); // strand arc
                seen[q] = true;
                // closure arc from q back around to the same index on the
                // other row
                let (r, delta) = if q < n { (q + n, -1) } else { (q - n, 1) };
                winding += delta;
                p = r;
                if p == start {
                    break;
                }
            }
            if winding != 0 {
                nesting += 1;
            }
        }
        ClosureStats { circles, nesting }
    }

    /// Split into the half below the through-strands and the half above:
    /// `x = cup ∘ cap` where `cap` keeps the bottom arcs and `cup` the top
    /// ones, meeting in `k = through_strands(x)` middle points.
    /// Recomposing returns `x` with zero circles.
    pub fn cap_cup_factor(&self) -> (CapDiagram, Diagram) {
        let n = self.strands();
        let k = self.through_strands();
        // Bottom half: an (n, k) diagram. Through-strand bottom endpoints
        // attach to the k middle points in left-to-right order (order is
        // forced by planarity).
        let mut cap_pairing = vec![usize::MAX; n + k];
        let mut cup_pairing = vec![usize::MAX; k + n];
        let mut next_mid = 0;
        for p in 0..n {
            let q = self.0.partner(p);
            if q < n {
                cap_pairing[p] = q; // bottom arc stays in the cap
            } else if cap_pairing[p] == usize::MAX {
                cap_pairing[p] = n + next_mid;
                cap_pairing[n + next_mid] = p;
                next_mid += 1;
            }
        }
        debug_assert_eq!(next_mid, k);
        // Top half: a (k, n) diagram, middle points ordered to meet the cap's.
        let mut next_mid = 0;
        for p in 0..n {
            let q = self.0.partner(p);
            if q >= n && cup_pairing[next_mid] == usize::MAX {
                // the strand from bottom p arrives at top q; in the cup it is
                // the strand from middle `next_mid` up to top (q - n).
                cup_pairing[next_mid] = k + (q - n);
                cup_pairing[k + (q - n)] = next_mid;
                next_mid += 1;
            }
        }
        for p in n..2 * n {
            let q = self.0.partner(p);
            if q >= n && p < q {
                cup_pairing[k + (p - n)] = k + (q - n);
                cup_pairing[k + (q - n)] = k + (p - n);
            }
        }
        let cap = Diagram { n_bottom: n, n_top: k, pairing: cap_pairing };
        let cup = Diagram { n_bottom: k, n_top: n, pairing: cup_pairing };
        debug_assert!(cap.find_crossing().is_none());
        debug_assert!(cup.find_crossing().is_none());
        (CapDiagram(cap), cup)
    }

    /// Serialize as the plain partner array `p[a] = partner of a`.
    pub fn to_json(&self) -> serde_json::Value {
        self.0.to_json()
    }

    pub fn from_json(strands: usize, value: &serde_json::Value) -> Result<Self> {
        let arr = value
            .as_array()
            .ok_or_else(|| Error::Serde("expected a JSON array for a matching".into()))?;
        let pairing: Option<Vec<usize>> = arr.iter().map(|v| v.as_u64().map(|x| x as usize)).collect();
        let pairing = pairing.ok_or_else(|| Error::Serde("matching entries must be integers".into()))?;
        Matching::new(strands, pairing)
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A `(N, k)` diagram with exactly `k` through-strands and caps below:
/// every top point continues down to the bottom boundary.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CapDiagram(Diagram);

impl CapDiagram {
    pub fn from_diagram(d: Diagram) -> Result<Self> {
        if d.through_strands() != d.n_top {
            return Err(Error::InvalidDiagram(format!(
                "cap diagram must carry all {} top points on through-strands",
                d.n_top
            )));
        }
        Ok(CapDiagram(d))
    }

    pub fn strands(&self) -> usize {
        self.0.n_bottom
    }

    /// Number of through-strands (the size of the top boundary).
    pub fn through(&self) -> usize {
        self.0.n_top
    }

    /// Number of bottom-to-bottom arcs.
    pub fn caps(&self) -> usize {
        (self.strands() - self.through()) / 2
    }

    pub fn diagram(&self) -> &Diagram {
        &self.0
    }
}

impl fmt::Display for CapDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// All crossingless matchings of positions `0..2n` on a circle, as partner
/// arrays in position space. Catalan(n) of them.
fn circle_matchings(points: usize) -> Vec<Vec<usize>> {
    if points == 0 {
        return vec![vec![]];
    }
    // Position 0 pairs with an odd position p; inside and outside recurse.
    let mut out = Vec::new();
    for p in (1..points).step_by(2) {
        let inner = circle_matchings(p - 1);
        let outer = circle_matchings(points - p - 1);
        for a in &inner {
            for b in &outer {
                let mut m = vec![0usize; points];
                m[0] = p;
                m[p] = 0;
                for (i, &q) in a.iter().enumerate() {
                    m[1 + i] = 1 + q;
                }
                for (i, &q) in b.iter().enumerate() {
                    m[p + 1 + i] = p + 1 + q;
                }
                out.push(m);
            }
        }
    }
    out
}

/// Enumerate every crossingless matching on `strands` strands, sorted.
///
/// Guarded by [`ENUMERATION_BOUND`]: the count is Catalan(strands).
pub fn enumerate_matchings(strands: usize) -> Result<Vec<Matching>> {
    enumerate_matchings_bounded(strands, ENUMERATION_BOUND)
}

pub fn enumerate_matchings_bounded(strands: usize, bound: usize) -> Result<Vec<Matching>> {
    if strands > bound {
        return Err(Error::BoundExceeded { requested: strands, bound });
    }
    let n = strands;
    let mut out: Vec<Matching> = circle_matchings(2 * n)
        .into_iter()
        .map(|pos_pairing| {
            // positions: bottom p ↔ p, top j ↔ 2n-1-j (boundary circle order)
            let pos_of_point =
                |p: usize| -> usize { if p < n { p } else { 2 * n - 1 - (p - n) } };
            let mut point_of_pos = vec![0usize; 2 * n];
            for p in 0..2 * n {
                point_of_pos[pos_of_point(p)] = p;
            }
            let mut pairing = vec![0usize; 2 * n];
            for p in 0..2 * n {
                pairing[p] = point_of_pos[pos_pairing[pos_of_point(p)]];
            }
            Matching(Diagram { n_bottom: n, n_top: n, pairing })
        })
        .collect();
    out.sort();
    debug_assert!(out.iter().all(|m| m.0.find_crossing().is_none()));
    Ok(out)
}

/// Enumerate every `(strands, k)` cap diagram, sorted.
pub fn enumerate_caps(strands: usize, k: usize) -> Result<Vec<CapDiagram>> {
    if k > strands {
        return Err(Error::IndexOutOfRange {
            index: k,
            context: format!("cap diagrams on {strands} strands need k <= {strands}"),
        });
    }
    if !(strands - k).is_multiple_of(2) {
        return Err(Error::Parity(format!(
            "no ({strands}, {k}) cap diagrams: {strands} - {k} is odd"
        )));
    }
    if strands + k > 2 * ENUMERATION_BOUND {
        return Err(Error::BoundExceeded { requested: strands + k, bound: 2 * ENUMERATION_BOUND });
    }
    let total = strands + k;
    let mut out = Vec::new();
    for pos_pairing in circle_matchings(total) {
        // Bottom p at position p; top j (0-based) at position total-1-j.
        let pos_of_point = |p: usize| -> usize { if p < strands { p } else { total - 1 - (p - strands) } };
        let mut point_of_pos = vec![0usize; total];
        for p in 0..total {
            point_of_pos[pos_of_point(p)] = p;
        }
        let mut pairing = vec![0usize; total];
        for p in 0..total {
            pairing[p] = point_of_pos[pos_pairing[pos_of_point(p)]];
        }
        let d = Diagram { n_bottom: strands, n_top: k, pairing };
        if d.through_strands() == k {
            debug_assert!(d.find_crossing().is_none());
            out.push(CapDiagram(d));
        }
    }
    out.sort();
    Ok(out)
}

/// Catalan number, for dimension cross-checks.
pub fn catalan(n: usize) -> u64 {
    binomial(2 * n, n) / (n as u64 + 1)
}

/// Binomial coefficient as u64 (small arguments only).
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (n - i) as u128;
        den *= (i + 1) as u128;
    }
    (num / den) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairing_of(m: &Matching) -> Vec<usize> {
        m.pairing().to_vec()
    }

    #[test]
    fn generator_shape() {
        // u_1 on 2 strands: bottom pair (1,2), top pair (1,2).
        let u1 = Matching::generator(2, 1).unwrap();
        assert_eq!(pairing_of(&u1), vec![1, 0, 3, 2]);
        assert!(Matching::generator(2, 2).is_err());
        assert!(Matching::generator(3, 0).is_err());
    }

    #[test]
    fn involution_and_crossing_rejected() {
        assert!(Matching::new(2, vec![1, 0, 3, 3]).is_err());
        assert!(Matching::new(2, vec![2, 3, 0, 1]).is_ok()); // identity
        // b1-t2 and b2-t1 cross.
        assert!(Matching::new(2, vec![3, 2, 1, 0]).is_err());
    }

    #[test]
    fn compose_generators() {
        // u_1 stacked over u_2 on 3 strands: {b2-b3, t1-t2, b1-t3}, no circles.
        let u1 = Matching::generator(3, 1).unwrap();
        let u2 = Matching::generator(3, 2).unwrap();
        let (m, circles) = Matching::compose(&u1, &u2).unwrap();
        assert_eq!(circles, 0);
        assert_eq!(pairing_of(&m), vec![5, 2, 1, 4, 3, 0]);
        // u_1 over u_1 erases one circle and returns u_1.
        let (m, circles) = Matching::compose(&u1, &u1).unwrap();
        assert_eq!(circles, 1);
        assert_eq!(m, u1);
    }

    #[test]
    fn through_strand_counts() {
        assert_eq!(Matching::identity(4).through_strands(), 4);
        assert_eq!(Matching::generator(4, 2).unwrap().through_strands(), 2);
        let u1 = Matching::generator(3, 1).unwrap();
        let u2 = Matching::generator(3, 2).unwrap();
        let (m, _) = Matching::compose(&u1, &u2).unwrap();
        assert_eq!(m.through_strands(), 1);
    }

    #[test]
    fn closure_counts() {
        // identity on 3 strands: 3 circles, all nested around the puncture.
        let id3 = Matching::identity(3);
        assert_eq!(id3.closure(), ClosureStats { circles: 3, nesting: 3 });
        // u_1 on 2 strands: a single contractible circle.
        let u1 = Matching::generator(2, 1).unwrap();
        assert_eq!(u1.closure(), ClosureStats { circles: 1, nesting: 0 });
        // u_1 u_2 on 3 strands: one circle that wraps once.
        let a = Matching::generator(3, 1).unwrap();
        let b = Matching::generator(3, 2).unwrap();
        let (m, _) = Matching::compose(&a, &b).unwrap();
        assert_eq!(m.closure(), ClosureStats { circles: 1, nesting: 1 });
    }

    #[test]
    fn closure_parity_and_range() {
        for n in 1..=6 {
            for m in enumerate_matchings(n).unwrap() {
                let st = m.closure();
                assert!(st.nesting <= st.circles);
                assert_eq!(st.nesting % 2, n % 2, "nesting must have the parity of {n}");
            }
        }
    }

    #[test]
    fn enumeration_is_catalan() {
        let expect = [1u64, 1, 2, 5, 14, 42, 132, 429];
        for (n, &want) in expect.iter().enumerate() {
            assert_eq!(enumerate_matchings(n).unwrap().len() as u64, want, "n = {n}");
        }
        assert!(enumerate_matchings(9).is_err());
    }

    #[test]
    fn factorization_round_trips() {
        // u_1 on 2 strands: cap joins the bottom pair, cup joins the top pair.
        let u1 = Matching::generator(2, 1).unwrap();
        let (cap, cup) = u1.cap_cup_factor();
        assert_eq!(cap.through(), 0);
        assert_eq!(cap.diagram().pairing(), &[1, 0]);
        assert_eq!(cup.pairing(), &[1, 0]);
        for n in 1..=5 {
            for m in enumerate_matchings(n).unwrap() {
                let (cap, cup) = m.cap_cup_factor();
                assert_eq!(cap.through(), m.through_strands());
                let (re, circles) = Diagram::compose(&cup, cap.diagram()).unwrap();
                assert_eq!(circles, 0, "refactoring {m} made a circle");
                assert_eq!(re, *m.diagram());
            }
        }
    }

    #[test]
    fn flip_is_involutive_and_reverses_composition() {
        for n in 1..=4 {
            let ms = enumerate_matchings(n).unwrap();
            for x in &ms {
                assert_eq!(x.flip().flip(), *x);
            }
            for x in &ms {
                for y in &ms {
                    let (xy, c1) = Matching::compose(x, y).unwrap();
                    let (fyx, c2) = Matching::compose(&y.flip(), &x.flip()).unwrap();
                    assert_eq!(xy.flip(), fyx);
                    assert_eq!(c1, c2);
                }
            }
        }
    }

    #[test]
    fn cap_enumeration_matches_ballot_numbers() {
        // #caps(N, N-2l) = C(N, l) - C(N, l-1)
        for strands in 1..=6 {
            let mut total_sq = 0u64;
            let mut k = strands;
            loop {
                let l = (strands - k) / 2;
                let caps = enumerate_caps(strands, k).unwrap();
                let want = binomial(strands, l) - if l == 0 { 0 } else { binomial(strands, l - 1) };
                assert_eq!(caps.len() as u64, want, "strands {strands}, k {k}");
                total_sq += (caps.len() as u64) * (caps.len() as u64);
                if k < 2 {
                    break;
                }
                k -= 2;
            }
            assert_eq!(total_sq, catalan(strands), "sum of squares at {strands}");
        }
        assert!(enumerate_caps(3, 2).is_err()); // parity
    }

    #[test]
    fn closure_of_self_pairing_has_full_circles() {
        // Stacking x over flip(x) and closing always yields exactly N
        // circles; distinct matchings give strictly fewer.
        for n in 1..=6 {
            let ms = enumerate_matchings(n).unwrap();
            for x in &ms {
                let (m, erased) = Matching::compose(x, &x.flip()).unwrap();
                let st = m.closure();
                assert_eq!(erased + st.circles, n, "total circles for {x}");
            }
            for x in &ms {
                for y in &ms {
                    if x == y {
                        continue;
                    }
                    let (m, erased) = Matching::compose(x, &y.flip()).unwrap();
                    let st = m.closure();
                    assert!(erased + st.circles < n, "{x} vs {y}");
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        for m in enumerate_matchings(4).unwrap() {
            let j = m.to_json();
            assert_eq!(Matching::from_json(4, &j).unwrap(), m);
        }
    }
}
