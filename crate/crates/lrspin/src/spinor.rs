//! The type-D spinor model: two-column tableaux with a body/tail split,
//! jeu de taquin operators moving the split, admissibility of adjacent
//! pairs, highest weight detection, and direct enumeration of the
//! `l`-highest weight elements of a fixed content.

use crate::partition::Partition;
use crate::tableau::{is_lattice_word, signature};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Which crystal a component lives in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ColumnKind {
    /// `T(a)`: two columns, tail of height `a`, both shape parameters even.
    Two,
    /// `T̄(0)`: two odd columns, bottoms aligned, each with a one-cell tail.
    BarZero,
    /// A single column of even height.
    SpPlus,
    /// A single column of odd height.
    SpMinus,
}

/// One component of a spinor element: at most two strictly increasing
/// columns, stored top to bottom, with the left one split into a body and
/// a tail of height `a`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoColumn {
    pub kind: ColumnKind,
    left: Vec<usize>,
    right: Vec<usize>,
    /// Tail height `a`; derived for the single-column kinds.
    a: usize,
}

impl TwoColumn {
    /// A `T(a)` component from its columns; `c = left.len() - a` and
    /// `b = right.len() - c` must be even and nonnegative, the glued shape
    /// semistandard with residue at most one.
    pub fn two(left: Vec<usize>, right: Vec<usize>, a: usize) -> Result<Self, String> {
        let t = TwoColumn {
            kind: ColumnKind::Two,
            left,
            right,
            a,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn bar_zero(left: Vec<usize>, right: Vec<usize>) -> Result<Self, String> {
        let t = TwoColumn {
            kind: ColumnKind::BarZero,
            left,
            right,
            a: 0,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn spin(column: Vec<usize>) -> Result<Self, String> {
        let kind = if column.len().is_multiple_of(2) {
            ColumnKind::SpPlus
        } else {
            ColumnKind::SpMinus
        };
        let t = TwoColumn {
            kind,
            left: column,
            right: Vec::new(),
            a: 0,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    /// Tail height: `a` for `T(a)`, one per column for the odd kinds.
    pub fn tail_len(&self) -> usize {
        match self.kind {
            ColumnKind::Two => self.a,
            ColumnKind::BarZero | ColumnKind::SpMinus => 1,
            ColumnKind::SpPlus => 0,
        }
    }

    /// Shape parameters `(a, b, c)` of the glued two-column shape.
    pub fn shape_abc(&self) -> (usize, usize, usize) {
        match self.kind {
            ColumnKind::Two => {
                let c = self.left.len() - self.a;
                (self.a, self.right.len() - c, c)
            }
            ColumnKind::BarZero => {
                // λ(0, b, c+1) with left height c+1
                (0, self.right.len() - self.left.len(), self.left.len())
            }
            ColumnKind::SpPlus | ColumnKind::SpMinus => (0, 0, 0),
        }
    }

    fn validate(&self) -> Result<(), String> {
        let strict = |col: &[usize]| col.windows(2).all(|w| w[0] < w[1]) && !col.contains(&0);
        if !strict(&self.left) || !strict(&self.right) {
            return Err("columns must strictly increase".into());
        }
        match self.kind {
            ColumnKind::Two => {
                if self.left.len() < self.a {
                    return Err("tail longer than the left column".into());
                }
                let c = self.left.len() - self.a;
                if self.right.len() < c {
                    return Err("right column shorter than the overlap".into());
                }
                let b = self.right.len() - c;
                if !b.is_multiple_of(2) || !c.is_multiple_of(2) {
                    return Err(format!("b = {b}, c = {c} must be even"));
                }
                let s = self.state();
                if !s.is_semistandard() {
                    return Err("glued shape is not semistandard".into());
                }
                if s.residue() > 1 {
                    return Err("residue exceeds one".into());
                }
            }
            ColumnKind::BarZero => {
                if self.left.len().is_multiple_of(2) || self.right.len().is_multiple_of(2) {
                    return Err("both columns must have odd height".into());
                }
                if self.left.len() > self.right.len() {
                    return Err("left column of T̄(0) cannot exceed the right".into());
                }
                // bottoms aligned: λ(0, b, c+1) with b even automatically
                if !self.state().is_semistandard() {
                    return Err("glued shape is not semistandard".into());
                }
            }
            ColumnKind::SpPlus => {
                if !self.right.is_empty() || !self.left.len().is_multiple_of(2) {
                    return Err("spin-plus is a single even column".into());
                }
            }
            ColumnKind::SpMinus => {
                if !self.right.is_empty() || self.left.len().is_multiple_of(2) {
                    return Err("spin-minus is a single odd column".into());
                }
            }
        }
        Ok(())
    }

    pub(crate) fn state(&self) -> Glued {
        let (_a, _b, c) = self.shape_abc();
        Glued {
            left: self.left.clone(),
            right: self.right.clone(),
            c,
        }
    }

    /// The residue: how far the right column can slide down while staying
    /// semistandard; parity of the height for single columns.
    pub fn residue(&self) -> usize {
        match self.kind {
            ColumnKind::Two => self.state().residue(),
            ColumnKind::BarZero => 0,
            ColumnKind::SpPlus => 0,
            ColumnKind::SpMinus => 1,
        }
    }

    /// `E`: tail shrinks by one via a jeu de taquin slide below the right
    /// column; `None` when the (normalised) tail is empty.
    pub fn cal_e(&self) -> Option<TwoColumn> {
        assert_eq!(self.kind, ColumnKind::Two);
        let s = self.state().cal_e()?;
        Some(TwoColumn {
            kind: ColumnKind::Two,
            a: self.a - 1,
            left: s.left,
            right: s.right,
        })
    }

    /// `F`: tail grows by one via a slide above the left column; `None`
    /// when the (normalised) `b` is zero.
    pub fn cal_f(&self) -> Option<TwoColumn> {
        assert_eq!(self.kind, ColumnKind::Two);
        let s = self.state().cal_f()?;
        Some(TwoColumn {
            kind: ColumnKind::Two,
            a: self.a + 1,
            left: s.left,
            right: s.right,
        })
    }

    /// The starred pair `(T^{L*}, T^{R*}) = ((FT)^L, (FT)^R)`; defined
    /// only when the residue is one.
    pub fn star_pair(&self) -> (Vec<usize>, Vec<usize>) {
        assert_eq!(self.residue(), 1, "star pair needs residue one");
        let f = self.state().cal_f().expect("residue one implies b >= 2");
        (f.left, f.right)
    }

    /// `(^L T, ^R T)`: the columns of `E^a T` (residue 0) or `E^{a-1} T`
    /// (residue 1).
    pub fn lr_pair(&self) -> (Vec<usize>, Vec<usize>) {
        let steps = match self.residue() {
            0 => self.a,
            _ => self.a - 1,
        };
        let mut s = self.state();
        for _ in 0..steps {
            s = s.cal_e().expect("tail is long enough");
        }
        (s.left, s.right)
    }

    /// Reading word: right column then left column, each top to bottom.
    pub fn word(&self) -> Vec<usize> {
        let mut w = self.right.clone();
        w.extend_from_slice(&self.left);
        w
    }
}

/// A raw two-column configuration: `left`/`right` columns overlapping in
/// `c` rows, i.e. the shape `λ(a, b, c)` with `a = left.len() - c`,
/// `b = right.len() - c`. This is the arena for jeu de taquin.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Glued {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub c: usize,
}

impl Glued {
    /// Glue two free columns at maximal overlap, the residue-zero
    /// normal position.
    pub fn max_overlap(left: Vec<usize>, right: Vec<usize>) -> Glued {
        let mut c = left.len().min(right.len());
        loop {
            let g = Glued {
                left: left.clone(),
                right: right.clone(),
                c,
            };
            if g.is_semistandard() {
                return g;
            }
            c -= 1;
        }
    }

    pub fn a(&self) -> usize {
        self.left.len() - self.c
    }

    pub fn b(&self) -> usize {
        self.right.len() - self.c
    }

    /// Row-weakness on the overlap: `left[i] <= right[b + i]`.
    pub fn is_semistandard(&self) -> bool {
        if self.c > self.left.len() || self.c > self.right.len() {
            return false;
        }
        let b = self.right.len() - self.c;
        (0..self.c).all(|i| self.left[i] <= self.right[b + i])
    }

    pub fn residue(&self) -> usize {
        let hi = self.a().min(self.b());
        (1..=hi)
            .take_while(|&k| {
                Glued {
                    left: self.left.clone(),
                    right: self.right.clone(),
                    c: self.c + k,
                }
                .is_semistandard()
            })
            .count()
    }

    fn normalized(&self) -> Glued {
        let r = self.residue();
        Glued {
            left: self.left.clone(),
            right: self.right.clone(),
            c: self.c + r,
        }
    }

    fn cells(&self) -> BTreeMap<(i64, u8), usize> {
        let b = self.b() as i64;
        let mut map = BTreeMap::new();
        for (i, &x) in self.right.iter().enumerate() {
            map.insert((1 + i as i64, 2u8), x);
        }
        for (i, &x) in self.left.iter().enumerate() {
            map.insert((b + 1 + i as i64, 1u8), x);
        }
        map
    }

    fn from_cells(map: &BTreeMap<(i64, u8), usize>) -> Glued {
        let col = |c: u8| -> (i64, Vec<usize>) {
            let rows: Vec<(i64, usize)> = map
                .iter()
                .filter(|((_, cc), _)| *cc == c)
                .map(|((r, _), &v)| (*r, v))
                .collect();
            debug_assert!(rows.windows(2).all(|w| w[1].0 == w[0].0 + 1));
            (
                rows.first().map(|x| x.0).unwrap_or(0),
                rows.into_iter().map(|(_, v)| v).collect(),
            )
        };
        let (ltop, left) = col(1);
        let (rtop, right) = col(2);
        // overlap of the occupied row ranges
        let lbot = ltop + left.len() as i64 - 1;
        let rbot = rtop + right.len() as i64 - 1;
        let c = (lbot.min(rbot) - ltop.max(rtop) + 1).max(0) as usize;
        Glued { left, right, c }
    }

    /// Slide into the hole below the bottom of the right column; shrinks
    /// the tail: `λ(a,b,c) → λ(a-1, b+1, c)` on the normalised shape.
    pub fn cal_e(&self) -> Option<Glued> {
        let s = self.normalized();
        if s.a() == 0 {
            return None;
        }
        let mut cells = s.cells();
        let mut hole = (s.right.len() as i64 + 1, 2u8);
        loop {
            let above = cells.get(&(hole.0 - 1, hole.1)).copied();
            let left = (hole.1 == 2)
                .then(|| cells.get(&(hole.0, 1)).copied())
                .flatten();
            let from = match (above, left) {
                (None, None) => break,
                (Some(_), None) => (hole.0 - 1, hole.1),
                (None, Some(_)) => (hole.0, 1),
                (Some(a), Some(l)) => {
                    if a >= l {
                        (hole.0 - 1, hole.1)
                    } else {
                        (hole.0, 1)
                    }
                }
            };
            let v = cells.remove(&from).unwrap();
            cells.insert(hole, v);
            hole = from;
        }
        let out = Glued::from_cells(&cells);
        debug_assert_eq!(out.a(), s.a() - 1);
        debug_assert_eq!(out.b(), s.b() + 1);
        debug_assert_eq!(out.c, s.c);
        debug_assert!(out.is_semistandard());
        Some(out)
    }

    /// Slide into the hole above the top of the left column; grows the
    /// tail: `λ(a,b,c) → λ(a+1, b-1, c)` on the normalised shape.
    pub fn cal_f(&self) -> Option<Glued> {
        let s = self.normalized();
        if s.b() == 0 {
            return None;
        }
        let mut cells = s.cells();
        let mut hole = (s.b() as i64, 1u8);
        loop {
            let below = cells.get(&(hole.0 + 1, hole.1)).copied();
            let right = (hole.1 == 1)
                .then(|| cells.get(&(hole.0, 2)).copied())
                .flatten();
            let from = match (below, right) {
                (None, None) => break,
                (Some(_), None) => (hole.0 + 1, hole.1),
                (None, Some(_)) => (hole.0, 2),
                (Some(b), Some(r)) => {
                    if b <= r {
                        (hole.0 + 1, hole.1)
                    } else {
                        (hole.0, 2)
                    }
                }
            };
            let v = cells.remove(&from).unwrap();
            cells.insert(hole, v);
            hole = from;
        }
        let out = Glued::from_cells(&cells);
        debug_assert_eq!(out.a(), s.a() + 1);
        debug_assert_eq!(out.b(), s.b() - 1);
        debug_assert_eq!(out.c, s.c);
        debug_assert!(out.is_semistandard());
        Some(out)
    }
}

fn from_bottom(col: &[usize], i: usize) -> Option<usize> {
    (i >= 1 && i <= col.len()).then(|| col[col.len() - i])
}

/// The admissibility relation `T ≺ S` between horizontally adjacent
/// components (`T` to the left of `S`).
pub fn is_admissible(t: &TwoColumn, s: &TwoColumn) -> bool {
    use ColumnKind::*;
    match (t.kind, s.kind) {
        (Two, Two) | (Two, SpPlus) | (Two, SpMinus) => admissible_two(t, s),
        (Two, BarZero) => {
            // compare against the left column of S read as a spin column
            let sl = TwoColumn::spin(s.left.to_vec()).expect("T̄(0) left column is odd");
            admissible_two(t, &sl)
        }
        (BarZero, BarZero) | (BarZero, SpMinus) => {
            // (T^R, S^L) must itself glue into a T̄(0) shape
            let tr = t.right().to_vec();
            let sl = s.left().to_vec();
            sl.len() >= tr.len()
                && (0..tr.len()).all(|i| {
                    from_bottom(&tr, i + 1).unwrap() <= from_bottom(&sl, i + 1).unwrap()
                })
        }
        other => unreachable!("no admissibility clause for the pair {other:?}"),
    }
}

fn admissible_two(t: &TwoColumn, s: &TwoColumn) -> bool {
    let (a, _b, _c) = t.shape_abc();
    let rt = t.residue();
    let rs = s.residue();
    let (a_prime, s_left, s_lpair, s_lstar, eps): (usize, &[usize], Vec<usize>, Vec<usize>, usize) =
        match s.kind {
            ColumnKind::Two => {
                let (ap, _, _) = s.shape_abc();
                let (l, _) = s.lr_pair();
                let lstar = if rt * rs == 1 { s.star_pair().0 } else { Vec::new() };
                (ap, s.left(), l, lstar, 0)
            }
            ColumnKind::SpPlus | ColumnKind::SpMinus => {
                // a' = residue, S = S^L = ^L S = S^{L*}
                let eps = (s.kind == ColumnKind::SpMinus) as usize;
                (rs, s.left(), s.left().to_vec(), s.left().to_vec(), eps)
            }
            ColumnKind::BarZero => unreachable!("handled by the caller"),
        };
    assert!(a >= a_prime, "template guarantees weakly decreasing tails");

    // (i) height bound
    if t.right().len() + a_prime > s_left.len() + 2 * rt * rs {
        return false;
    }

    // (ii)
    let ok2 = if rt * rs == 1 {
        let (_, tr_star) = t.star_pair();
        le_pointwise_rev(&tr_star, &s_lpair)
    } else {
        le_pointwise_rev(t.right(), &s_lpair)
    };
    if !ok2 {
        return false;
    }

    // (iii)
    let (_, rt_pair) = t.lr_pair();
    if rt * rs == 1 {
        // ^R T(i + a - a' + ε) <= S^{L*}(i)
        indexed_le(&rt_pair, &s_lstar, a - a_prime + eps)
    } else {
        indexed_le(&rt_pair, s_left, a - a_prime)
    }
}

/// `lhs(i) <= rhs(i)` for all `i >= 1` where `lhs(i)` exists.
fn le_pointwise_rev(lhs: &[usize], rhs: &[usize]) -> bool {
    (1..=lhs.len()).all(|i| match from_bottom(rhs, i) {
        Some(r) => from_bottom(lhs, i).unwrap() <= r,
        None => false,
    })
}

/// `lhs(i + shift) <= rhs(i)` for all `i >= 1` where the left side exists.
fn indexed_le(lhs: &[usize], rhs: &[usize], shift: usize) -> bool {
    (1..=lhs.len().saturating_sub(shift)).all(|i| match from_bottom(rhs, i) {
        Some(r) => from_bottom(lhs, i + shift).unwrap() <= r,
        None => false,
    })
}

/// The decomposition of `(μ, n)` into the component template.
#[derive(Clone, Debug)]
pub struct OrthogonalWeight {
    pub n: usize,
    pub mu: Partition,
    pub mu_bar: Partition,
    /// `n - 2μ'_1 >= 0`.
    pub positive: bool,
    /// `q_±` and `r_±` with `|n - 2μ'_1| = 2q + r`.
    pub q: usize,
    pub r: usize,
    /// Number of two-column components with tails: `μ'_1` or `μ̄'_1`.
    pub m_count: usize,
}

impl OrthogonalWeight {
    pub fn new(mu: Partition, n: usize) -> Result<Self, String> {
        let muc = mu.conjugate();
        if muc.part(0) + muc.part(1) > n {
            return Err(format!("{mu} is not an O_{n} weight: mu'_1 + mu'_2 > n"));
        }
        let p = muc.part(0);
        let mut bar = muc.parts().to_vec();
        if bar.is_empty() {
            bar.push(0);
        }
        bar[0] = n - p;
        let mu_bar = Partition::from_unsorted(bar).conjugate();
        let positive = n >= 2 * p;
        let (q, r, m_count) = if positive {
            ((n - 2 * p) / 2, (n - 2 * p) % 2, p)
        } else {
            ((2 * p - n) / 2, (2 * p - n) % 2, n - p)
        };
        Ok(OrthogonalWeight {
            n,
            mu,
            mu_bar,
            positive,
            q,
            r,
            m_count,
        })
    }

    /// Component kinds and tail heights, listed left to right.
    pub fn template(&self) -> Vec<(ColumnKind, usize)> {
        let mut spec = Vec::new();
        let tails = if self.positive { &self.mu } else { &self.mu_bar };
        for i in 0..self.m_count {
            spec.push((ColumnKind::Two, tails.part(i)));
        }
        for _ in 0..self.q {
            spec.push(if self.positive {
                (ColumnKind::Two, 0)
            } else {
                (ColumnKind::BarZero, 0)
            });
        }
        if self.r == 1 {
            spec.push(if self.positive {
                (ColumnKind::SpPlus, 0)
            } else {
                (ColumnKind::SpMinus, 0)
            });
        }
        debug_assert_eq!(
            spec.iter()
                .map(|(k, _)| match k {
                    ColumnKind::SpPlus | ColumnKind::SpMinus => 1,
                    _ => 2,
                })
                .sum::<usize>(),
            self.n
        );
        spec
    }
}

/// An element of `T(μ, n)`: admissible components listed left to right.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpinorElement {
    pub n: usize,
    pub mu: Partition,
    comps: Vec<TwoColumn>,
}

impl SpinorElement {
    /// Builds an element, checking the component template (kinds and tail
    /// heights) but not admissibility; see [`SpinorElement::is_valid`].
    pub fn from_parts(n: usize, mu: Partition, comps: Vec<TwoColumn>) -> Result<Self, String> {
        let weight = OrthogonalWeight::new(mu.clone(), n)?;
        let spec = weight.template();
        if spec.len() != comps.len() {
            return Err(format!(
                "expected {} components, got {}",
                spec.len(),
                comps.len()
            ));
        }
        for (k, ((kind, tail), comp)) in spec.iter().zip(&comps).enumerate() {
            if comp.kind != *kind {
                return Err(format!("component {k} has kind {:?}, want {kind:?}", comp.kind));
            }
            if comp.kind == ColumnKind::Two && comp.a != *tail {
                return Err(format!("component {k} has tail {}, want {tail}", comp.a));
            }
        }
        Ok(SpinorElement { n, mu, comps })
    }

    /// Components left to right.
    pub fn comps(&self) -> &[TwoColumn] {
        &self.comps
    }

    /// Adjacent admissibility `T_{i+1} ≺ T_i` along the whole element.
    pub fn is_valid(&self) -> bool {
        self.comps
            .windows(2)
            .all(|w| is_admissible(&w[0], &w[1]))
    }

    /// Columns right to left, the order in which the element reads; the
    /// two-column kinds always contribute both columns, even empty ones.
    pub fn columns_rl(&self) -> Vec<Vec<usize>> {
        let mut cols = Vec::new();
        for comp in self.comps.iter().rev() {
            match comp.kind {
                ColumnKind::SpPlus | ColumnKind::SpMinus => cols.push(comp.left.clone()),
                _ => {
                    cols.push(comp.right.clone());
                    cols.push(comp.left.clone());
                }
            }
        }
        cols
    }

    /// The reading word: components right to left, right column before
    /// left in each.
    pub fn word(&self) -> Vec<usize> {
        let mut w = Vec::new();
        for comp in self.comps.iter().rev() {
            w.extend(comp.word());
        }
        w
    }

    /// Entry multiplicities of the whole element.
    pub fn content(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for x in self.word() {
            if counts.len() < x {
                counts.resize(x, 0);
            }
            counts[x - 1] += 1;
        }
        counts
    }

    /// True iff `ẽ_i` kills the element for every `i >= 1`.
    pub fn is_l_highest(&self) -> bool {
        is_lattice_word(&self.word())
    }

    /// `ẽ_i` for `i >= 1` through the signature rule on the reading word.
    pub fn crystal_e(&self, i: usize) -> Option<SpinorElement> {
        self.apply_letter(signature(&self.word(), i).e_position?, i)
    }

    /// `f̃_i` for `i >= 1`.
    pub fn crystal_f(&self, i: usize) -> Option<SpinorElement> {
        self.apply_letter(signature(&self.word(), i).f_position?, i + 1)
    }

    fn apply_letter(&self, word_pos: usize, new_value: usize) -> Option<SpinorElement> {
        // locate (component, column side, index) of the word position
        let mut offset = 0;
        let mut place = None;
        'outer: for (k, comp) in self.comps.iter().enumerate().rev() {
            for (side, col) in [(1u8, &comp.right), (0u8, &comp.left)] {
                if word_pos < offset + col.len() {
                    place = Some((k, side, word_pos - offset));
                    break 'outer;
                }
                offset += col.len();
            }
        }
        let (k, side, idx) = place.expect("word position within bounds");
        let mut out = self.clone();
        {
            let comp = &mut out.comps[k];
            let col = if side == 1 { &mut comp.right } else { &mut comp.left };
            col[idx] = new_value;
            if comp.validate().is_err() {
                return None;
            }
        }
        out.is_valid().then_some(out)
    }

    /// `ẽ_0` (`lower = false`) or `f̃_0` (`lower = true`): removes or adds
    /// a `(1,2)` domino on the factor singled out by the tensor rule over
    /// the column factorisation.
    pub fn crystal_zero(&self, lower: bool) -> Option<SpinorElement> {
        // per-component ε_0/φ_0 via the internal tensor R ⊗ L
        let comp_eps_phi = |comp: &TwoColumn| -> (i64, i64) {
            let col_stats = |col: &[usize]| -> (i64, i64) {
                let eps = (col.first() == Some(&1) && col.get(1) == Some(&2)) as i64;
                let m12 = col.iter().filter(|&&x| x <= 2).count() as i64;
                let phi = eps + 1 - m12;
                (eps, phi)
            };
            if comp.right.is_empty() {
                col_stats(&comp.left)
            } else {
                let (e1, p1) = col_stats(&comp.right);
                let (e2, p2) = col_stats(&comp.left);
                let h = |col: &[usize]| 1 - col.iter().filter(|&&x| x <= 2).count() as i64;
                (e1.max(e2 - h(&comp.right)), (p1 + h(&comp.left)).max(p2))
            }
        };
        // signature across components, rightmost first
        let mut sig: Vec<(usize, i64, i64)> = self
            .comps
            .iter()
            .enumerate()
            .rev()
            .map(|(k, c)| {
                let (e, p) = comp_eps_phi(c);
                (k, e, p)
            })
            .collect();
        // cancel in the generalized signature: each factor contributes
        // "-"^eps "+"^phi
        let mut stack: Vec<usize> = Vec::new(); // indices into sig with surviving "+"
        let mut minus: Vec<usize> = Vec::new();
        for (idx, &(_, e, p)) in sig.iter().enumerate() {
            for _ in 0..e {
                if stack.pop().is_none() {
                    minus.push(idx);
                }
            }
            for _ in 0..p {
                stack.push(idx);
            }
        }
        let target = if lower {
            stack.first().copied()?
        } else {
            minus.last().copied()?
        };
        let (comp_idx, _, _) = sig.remove(target);
        let mut out = self.clone();
        let comp = &mut out.comps[comp_idx];
        let toggled = toggle_domino(comp, lower)?;
        out.comps[comp_idx] = toggled;
        out.comps[comp_idx].validate().ok()?;
        out.is_valid().then_some(out)
    }

    pub fn serializable(&self) -> SpinorElementJson {
        SpinorElementJson {
            n: self.n,
            mu: self.mu.clone(),
            components: self
                .comps
                .iter()
                .map(|c| ComponentJson {
                    kind: match c.kind {
                        ColumnKind::Two => "T".into(),
                        ColumnKind::BarZero => "TBAR0".into(),
                        ColumnKind::SpPlus => "SP+".into(),
                        ColumnKind::SpMinus => "SP-".into(),
                    },
                    a: (c.kind == ColumnKind::Two).then_some(c.a),
                    left: c.left.clone(),
                    right: (!c.right.is_empty()).then(|| c.right.clone()),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &SpinorElementJson) -> Result<SpinorElement, String> {
        let comps = j
            .components
            .iter()
            .map(|c| {
                let right = c.right.clone().unwrap_or_default();
                match c.kind.as_str() {
                    "T" => TwoColumn::two(c.left.clone(), right, c.a.unwrap_or(0)),
                    "TBAR0" => TwoColumn::bar_zero(c.left.clone(), right),
                    "SP+" | "SP-" => TwoColumn::spin(c.left.clone()),
                    other => Err(format!("unknown component kind {other:?}")),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        SpinorElement::from_parts(j.n, j.mu.clone(), comps)
    }
}

/// Removes (`lower = false`) or adds (`lower = true`) the `(1,2)` domino
/// on the proper column of the component.
fn toggle_domino(comp: &TwoColumn, lower: bool) -> Option<TwoColumn> {
    let mut out = comp.clone();
    // the acting column inside a two-column component follows the same
    // R ⊗ L tensor rule
    let act_on_right = if comp.right.is_empty() {
        false
    } else {
        let col_eps = |col: &[usize]| (col.first() == Some(&1) && col.get(1) == Some(&2)) as i64;
        let col_phi =
            |col: &[usize]| col_eps(col) + 1 - col.iter().filter(|&&x| x <= 2).count() as i64;
        if lower {
            col_phi(&comp.right) > col_eps(&comp.left)
        } else {
            col_phi(&comp.right) >= col_eps(&comp.left)
        }
    };
    let col = if act_on_right { &mut out.right } else { &mut out.left };
    if lower {
        if col.iter().any(|&x| x <= 2) {
            return None;
        }
        col.insert(0, 2);
        col.insert(0, 1);
    } else {
        if !(col.first() == Some(&1) && col.get(1) == Some(&2)) {
            return None;
        }
        col.drain(0..2);
    }
    Some(out)
}

#[derive(Serialize, Deserialize)]
pub struct SpinorElementJson {
    pub n: usize,
    pub mu: Partition,
    pub components: Vec<ComponentJson>,
}

#[derive(Serialize, Deserialize)]
pub struct ComponentJson {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<usize>,
    pub left: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right: Option<Vec<usize>>,
}

/// The structural conditions necessarily satisfied by `l`-highest weight
/// elements: H-shaped bodies with constrained corner entries (and fully
/// forced odd columns in the negative case).
pub fn check_h_circ(e: &SpinorElement) -> bool {
    let weight = match OrthogonalWeight::new(e.mu.clone(), e.n) {
        Ok(w) => w,
        Err(_) => return false,
    };
    let is_initial = |col: &[usize]| col.iter().enumerate().all(|(i, &x)| x == i + 1);
    if weight.positive {
        // (H0): the optional spin column is (1, 2, …)
        if weight.r == 1 {
            let sp = e.comps.last().unwrap();
            if !is_initial(sp.left()) {
                return false;
            }
        }
        // (H1)+(H2) for the two-column components, rightmost first with a
        // virtual neighbour (c_0, r_0) = (∞, 0)
        let twos: Vec<&TwoColumn> = e
            .comps
            .iter()
            .filter(|c| c.kind == ColumnKind::Two)
            .collect();
        let mut prev_c = usize::MAX;
        let mut prev_r = 0usize;
        for t in twos.iter().rev() {
            if !h1_h2(t, prev_c, prev_r) {
                return false;
            }
            let (_, _, c) = t.shape_abc();
            prev_c = c;
            prev_r = t.residue();
        }
        true
    } else {
        // all odd columns are forced to (1, 2, …, h)
        let mut prev_c = usize::MAX;
        let mut prev_r = 0usize;
        for comp in e.comps.iter().rev() {
            match comp.kind {
                ColumnKind::SpMinus | ColumnKind::BarZero => {
                    if !is_initial(comp.left()) || !is_initial(comp.right()) {
                        return false;
                    }
                    // the left column of the nearest odd component plays
                    // the neighbour role, read as a spin column
                    prev_c = comp.left().len() - 1;
                    prev_r = 1;
                }
                ColumnKind::Two => {
                    if !h1_h2(comp, prev_c, prev_r) {
                        return false;
                    }
                    let (_, _, c) = comp.shape_abc();
                    prev_c = c;
                    prev_r = comp.residue();
                }
                ColumnKind::SpPlus => return false,
            }
        }
        true
    }
}

fn h1_h2(t: &TwoColumn, neighbor_c: usize, neighbor_r: usize) -> bool {
    let (a, b, c) = t.shape_abc();
    // (H1): right column is (1, …, b+c-1, x); left body is (1, …, c)
    let right_ok = t
        .right()
        .iter()
        .take(b + c - if b + c > 0 { 1 } else { 0 })
        .enumerate()
        .all(|(i, &x)| x == i + 1);
    let left_ok = t.left().iter().take(c).enumerate().all(|(i, &x)| x == i + 1);
    if !right_ok || !left_ok {
        return false;
    }
    // (H2)
    match t.residue() {
        0 => b + c == 0 || *t.right().last().unwrap() == b + c,
        _ => {
            let x = *t.right().last().unwrap();
            let first_ok =
                x == b + c || (neighbor_c < usize::MAX && x >= neighbor_c + 1 + neighbor_r);
            let tail_top_ok = a == 0 || t.left()[c] == c + 1;
            first_ok && tail_top_ok
        }
    }
}

/// All `l`-highest weight elements of `T(μ, n)` with content `λ'`,
/// i.e. the witnesses counted by the direct branching multiplicity.
///
/// The search runs right to left over components restricted to the
/// H-shaped forms, pruning on content, admissibility and the incremental
/// lattice property of the reading word.
pub fn enumerate_lrd(mu: &Partition, lambda: &Partition, n: usize) -> Vec<SpinorElement> {
    let Ok(weight) = OrthogonalWeight::new(mu.clone(), n) else {
        return Vec::new();
    };
    if lambda.len() > n {
        return Vec::new();
    }
    let target: Vec<usize> = lambda.conjugate().parts().to_vec();
    let max_entry = target.len();
    let spec = weight.template();
    if spec.is_empty() {
        return if target.is_empty() {
            vec![SpinorElement {
                n,
                mu: weight.mu.clone(),
                comps: Vec::new(),
            }]
        } else {
            Vec::new()
        };
    }

    // shard over the rightmost component, then search each branch
    let zero_counts = vec![0usize; max_entry];
    let (kind, tail) = spec[spec.len() - 1];
    let first = candidates(kind, tail, &target, max_entry, &zero_counts);
    let shards = crate::par::map_collect(first, |cand| {
        let mut counts = vec![0usize; max_entry];
        let mut lattice_counts = vec![0usize; max_entry + 1];
        let mut ok = true;
        for &x in &cand.word() {
            lattice_counts[x] += 1;
            counts[x - 1] += 1;
            if x > 1 && lattice_counts[x] > lattice_counts[x - 1] {
                ok = false;
            }
        }
        if !ok || (0..max_entry).any(|e| counts[e] > target[e]) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut chosen = vec![cand];
        search(
            &spec,
            spec.len() - 1,
            &target,
            max_entry,
            &mut counts,
            &mut lattice_counts,
            &mut chosen,
            &mut out,
            &weight,
        );
        out
    });
    let mut out: Vec<SpinorElement> = shards.into_iter().flatten().collect();
    out.sort_by_key(|e| e.serial_key());
    out
}

impl SpinorElement {
    fn serial_key(&self) -> Vec<Vec<usize>> {
        self.comps.iter().map(|c| c.word()).collect()
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    spec: &[(ColumnKind, usize)],
    idx: usize,
    target: &[usize],
    max_entry: usize,
    counts: &mut Vec<usize>,
    lattice_counts: &mut Vec<usize>,
    chosen: &mut Vec<TwoColumn>,
    out: &mut Vec<SpinorElement>,
    weight: &OrthogonalWeight,
) {
    if idx == 0 {
        if counts == target {
            let comps: Vec<TwoColumn> = chosen.iter().rev().cloned().collect();
            let e = SpinorElement {
                n: weight.n,
                mu: weight.mu.clone(),
                comps,
            };
            debug_assert!(e.is_valid() && e.is_l_highest());
            out.push(e);
        }
        return;
    }
    let (kind, tail) = spec[idx - 1];
    let right_neighbor = chosen.last().cloned();
    for cand in candidates(kind, tail, target, max_entry, counts) {
        if let Some(rn) = &right_neighbor {
            if !is_admissible(&cand, rn) {
                continue;
            }
        }
        // incremental lattice check over the new word piece
        let piece = cand.word();
        let mut consumed = 0;
        let mut ok = true;
        for &x in &piece {
            lattice_counts[x] += 1;
            consumed += 1;
            if x > 1 && lattice_counts[x] > lattice_counts[x - 1] {
                ok = false;
                break;
            }
        }
        if ok {
            for &x in &piece {
                counts[x - 1] += 1;
            }
            if (0..max_entry).all(|e| counts[e] <= target[e]) {
                chosen.push(cand.clone());
                search(
                    spec,
                    idx - 1,
                    target,
                    max_entry,
                    counts,
                    lattice_counts,
                    chosen,
                    out,
                    weight,
                );
                chosen.pop();
            }
            for &x in &piece {
                counts[x - 1] -= 1;
            }
        }
        for &x in piece.iter().take(consumed) {
            lattice_counts[x] -= 1;
        }
    }
}

/// H-shaped candidate components of one kind, smallest first.
fn candidates(
    kind: ColumnKind,
    tail: usize,
    target: &[usize],
    max_entry: usize,
    counts: &[usize],
) -> Vec<TwoColumn> {
    let initial_fits = |h: usize| (1..=h).all(|e| counts[e - 1] < target[e - 1]);
    match kind {
        ColumnKind::SpPlus | ColumnKind::SpMinus => {
            let parity = (kind == ColumnKind::SpMinus) as usize;
            (0..=max_entry)
                .filter(|h| h % 2 == parity)
                .filter(|&h| initial_fits(h))
                .map(|h| TwoColumn::spin((1..=h).collect()).unwrap())
                .collect()
        }
        ColumnKind::BarZero => {
            let mut v = Vec::new();
            for hl in (1..=max_entry).step_by(2) {
                for hr in (hl..=max_entry).step_by(2) {
                    if initial_fits(hl) && initial_fits(hr) {
                        if let Ok(t) =
                            TwoColumn::bar_zero((1..=hl).collect(), (1..=hr).collect())
                        {
                            v.push(t);
                        }
                    }
                }
            }
            v
        }
        ColumnKind::Two => {
            let mut v = Vec::new();
            // right column (1, …, h-1, x) with h = b+c even; left body
            // (1, …, c); tail strictly increasing above c
            for h in (0..=max_entry + 1).step_by(2) {
                if h > 0 && !(1..h).all(|e| counts[e - 1] < target[e - 1]) {
                    continue;
                }
                let xs: Vec<Option<usize>> = if h == 0 {
                    vec![None]
                } else {
                    (h..=max_entry).map(Some).collect()
                };
                for x in xs {
                    let mut right: Vec<usize> = (1..h).collect();
                    if let Some(x) = x {
                        right.push(x);
                    }
                    for c in (0..=h.min(max_entry)).step_by(2) {
                        if !(1..=c).all(|e| counts[e - 1] < target[e - 1]) {
                            continue;
                        }
                        let body: Vec<usize> = (1..=c).collect();
                        let mut tails = Vec::new();
                        gen_tails(tail, c + 1, max_entry, &mut Vec::new(), &mut tails);
                        for t in tails {
                            let mut left = body.clone();
                            left.extend_from_slice(&t);
                            if let Ok(tc) = TwoColumn::two(left, right.clone(), tail) {
                                v.push(tc);
                            }
                        }
                    }
                }
            }
            v.sort_by_key(|c| c.word());
            v.dedup();
            v
        }
    }
}

fn gen_tails(len: usize, lo: usize, hi: usize, buf: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if buf.len() == len {
        out.push(buf.clone());
        return;
    }
    for x in lo..=hi {
        buf.push(x);
        gen_tails(len, x + 1, hi, buf, out);
        buf.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn two(left: &[usize], right: &[usize], a: usize) -> TwoColumn {
        TwoColumn::two(left.to_vec(), right.to_vec(), a).unwrap()
    }

    #[test]
    fn shape_and_residue() {
        // T_1 of the μ=(4,3,3,2), n=8 example: left (1,2,3,5) with tail
        // (3,5), right (1,2,3,4); residue 1
        let t1 = two(&[1, 2, 3, 5], &[1, 2, 3, 4], 2);
        assert_eq!(t1.shape_abc(), (2, 2, 2));
        assert_eq!(t1.residue(), 1);
        // aligned straight two-column with a = b = 0 has residue 0
        let t = two(&[1, 2], &[1, 2], 0);
        assert_eq!(t.residue(), 0);
        // spin column of height 5 has residue 1
        assert_eq!(TwoColumn::spin(vec![1, 2, 3, 4, 5]).unwrap().residue(), 1);
    }

    #[test]
    fn cal_e_f_inverse_exhaustive() {
        // all valid T(a) components with entries <= 5 and column heights
        // <= 4: F(E(T)) = T and E(F(T)) = T whenever defined
        let all = all_two_columns(5, 4);
        assert!(!all.is_empty());
        for t in &all {
            if let Some(e) = t.cal_e() {
                assert_eq!(e.cal_f().as_ref(), Some(t), "F∘E at {t:?}");
            }
            if let Some(f) = t.cal_f() {
                assert_eq!(f.cal_e().as_ref(), Some(t), "E∘F at {f:?}");
            }
            if t.shape_abc().0 == 0 && t.residue() == 0 {
                assert!(t.cal_e().is_none());
            }
        }
    }

    #[test]
    fn admissibility_chain_golden() {
        // the μ=(4,3,3,2), n=8 element: T_4 ≺ T_3 ≺ T_2 ≺ T_1
        let t4 = two(&[1, 3, 4, 5], &[1, 2], 4);
        let t3 = two(&[1, 3, 4], &[1, 2], 3);
        let t2 = two(&[1, 5, 6], &[1, 4], 3);
        let t1 = two(&[1, 2, 3, 5], &[1, 2, 3, 4], 2);
        assert!(is_admissible(&t4, &t3));
        assert!(is_admissible(&t3, &t2));
        assert!(is_admissible(&t2, &t1));
        let e = SpinorElement::from_parts(8, p(&[4, 3, 3, 2]), vec![t4, t3, t2, t1]).unwrap();
        assert!(e.is_valid());
        // swapping an adjacent pair typically breaks admissibility
        let t3b = two(&[1, 3, 4], &[1, 2], 3);
        let t2b = two(&[1, 5, 6], &[1, 4], 3);
        assert!(!is_admissible(&t2b, &t3b) || is_admissible(&t3b, &t2b));
    }

    #[test]
    fn l_highest_golden() {
        // the T((2,2),4) example with w(T_1)w(T_2) = (12341235)(1415)
        let t2 = two(&[1, 5], &[1, 4], 2);
        let t1 = two(&[1, 2, 3, 5], &[1, 2, 3, 4], 2);
        let e = SpinorElement::from_parts(4, p(&[2, 2]), vec![t2, t1]).unwrap();
        assert!(e.is_valid());
        assert_eq!(e.word(), vec![1, 2, 3, 4, 1, 2, 3, 5, 1, 4, 1, 5]);
        assert!(e.is_l_highest());
        assert!(check_h_circ(&e));
    }

    #[test]
    fn crystal_zero_round_trip() {
        let t = TwoColumn::spin(vec![1, 2, 3, 4]).unwrap();
        let e = SpinorElement::from_parts(1, Partition::empty(), vec![t]).unwrap();
        let raised = e.crystal_zero(false).unwrap();
        assert_eq!(raised.comps()[0].left(), &[3, 4]);
        assert_eq!(raised.crystal_zero(true), Some(e));
    }

    #[test]
    fn crystal_e_f_round_trip_small() {
        let delta = |a: &[usize], b: &[usize], i: usize| -> (i64, i64) {
            let get = |v: &[usize], k: usize| v.get(k).copied().unwrap_or(0) as i64;
            (get(b, i - 1) - get(a, i - 1), get(b, i) - get(a, i))
        };
        for lambda in crate::partition::enumerate_partitions(5, 3) {
            for mu in crate::partition::enumerate_partitions(3, 3) {
                for e in enumerate_lrd(&mu, &lambda, 3) {
                    for i in 1..4 {
                        if let Some(f) = e.crystal_f(i) {
                            assert_eq!(f.crystal_e(i), Some(e.clone()));
                            // content moves by one unit from i to i+1
                            assert_eq!(delta(&e.content(), &f.content(), i), (-1, 1));
                        }
                    }
                    if let Some(f0) = e.crystal_zero(true) {
                        assert_eq!(f0.crystal_zero(false), Some(e.clone()));
                        let (d1, d2) = delta(&e.content(), &f0.content(), 1);
                        assert_eq!((d1, d2), (1, 1), "f̃_0 adds one 1 and one 2");
                    }
                }
            }
        }
    }

    #[test]
    fn enumerate_vacuum() {
        for n in 1..=5 {
            let got = enumerate_lrd(&Partition::empty(), &Partition::empty(), n);
            assert_eq!(got.len(), 1, "vacuum at n = {n}");
        }
    }

    #[test]
    fn enumerate_golden_417() {
        // n=8, λ=(5,4,4,3,2,2), μ=(2,2,2,1,1): multiplicity one
        let got = enumerate_lrd(&p(&[2, 2, 2, 1, 1]), &p(&[5, 4, 4, 3, 2, 2]), 8);
        assert_eq!(got.len(), 1);
    }

    #[test]
    fn highest_elements_satisfy_h_circ() {
        for n in 2..=5 {
            for mu in crate::partition::enumerate_partitions(4, n) {
                let muc = mu.conjugate();
                if muc.part(0) + muc.part(1) > n {
                    continue;
                }
                for lambda in crate::partition::enumerate_partitions(6, n) {
                    for e in enumerate_lrd(&mu, &lambda, n) {
                        assert!(e.is_valid());
                        assert!(e.is_l_highest());
                        assert!(check_h_circ(&e), "H° fails on {e:?}");
                        // the strict alternative of the corner comparison
                        let twos: Vec<&TwoColumn> = e
                            .comps()
                            .iter()
                            .filter(|c| c.kind == ColumnKind::Two)
                            .collect();
                        for w in twos.windows(2) {
                            let (left, right) = (w[0], w[1]);
                            let (ar, _, _) = right.shape_abc();
                            if ar == 0 {
                                continue;
                            }
                            let corner = from_bottom(right.left(), ar).unwrap();
                            let below = from_bottom(left.right(), 1);
                            if let Some(bel) = below {
                                assert_ne!(bel, corner, "equality excluded on {e:?}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lr_pair_trivial_when_no_tail() {
        let t = two(&[1, 2], &[1, 3], 0);
        assert_eq!(t.residue(), 0);
        let (l, r) = t.lr_pair();
        assert_eq!(l, vec![1, 2]);
        assert_eq!(r, vec![1, 3]);
    }

    #[test]
    fn spin_admissibility_matches_embedding() {
        // a spin column S acts like a T(ε) component whose right column
        // is enormous; both readings of T ≺ S must agree
        let big = 100;
        for t in all_two_columns(4, 3) {
            let (a, _, _) = t.shape_abc();
            for h in 0..=4usize {
                if a < h % 2 {
                    continue;
                }
                let col: Vec<usize> = (1..=h).collect();
                let s = TwoColumn::spin(col.clone()).unwrap();
                let eps = h % 2;
                let c = h - eps;
                let right: Vec<usize> = (0..c + 2).map(|i| big + i).collect();
                let embedded = TwoColumn::two(col.clone(), right, eps).unwrap();
                assert_eq!(embedded.residue(), eps);
                assert_eq!(
                    is_admissible(&t, &s),
                    is_admissible(&t, &embedded),
                    "embedding disagrees at T = {t:?}, S = {col:?}"
                );
            }
        }
    }

    #[test]
    fn source_vertex_is_killed_by_all_operators() {
        // the element of content μ' is unique and killed by every
        // raising operator, including the index-zero one
        for n in 2..=5 {
            for mu in crate::partition::enumerate_partitions(4, n) {
                let muc = mu.conjugate();
                if muc.part(0) + muc.part(1) > n {
                    continue;
                }
                let sources = enumerate_lrd(&mu, &mu, n);
                assert_eq!(sources.len(), 1, "source at n={n} μ={mu}");
                let top = &sources[0];
                for i in 1..=4 {
                    assert_eq!(top.crystal_e(i), None);
                }
                assert_eq!(top.crystal_zero(false), None, "ẽ_0 on {top:?}");
            }
        }
    }

    #[test]
    fn h_circ_rejects_perturbed_bodies() {
        // a left body reading (1,3) instead of (1,2) breaks (H1)
        let t2 = two(&[1, 5], &[1, 4], 2);
        let t1 = two(&[1, 3, 4, 5], &[1, 2, 3, 4], 2);
        let e = SpinorElement::from_parts(4, p(&[2, 2]), vec![t2, t1]).unwrap();
        assert!(!check_h_circ(&e));
    }

    #[test]
    fn golden_word_normal_form_is_highest() {
        use crate::oracle::knuth_normal_form;
        use crate::tableau::highest_tableau;
        let t4 = two(&[1, 3, 4, 5], &[1, 2], 4);
        let t3 = two(&[1, 3, 4], &[1, 2], 3);
        let t2 = two(&[1, 5, 6], &[1, 4], 3);
        let t1 = two(&[1, 2, 3, 5], &[1, 2, 3, 4], 2);
        let e = SpinorElement::from_parts(8, p(&[4, 3, 3, 2]), vec![t4, t3, t2, t1]).unwrap();
        let lambda_conj = p(&[8, 4, 4, 4, 3, 1]);
        assert_eq!(
            knuth_normal_form(&e.word()),
            highest_tableau(&lambda_conj, false)
        );
    }

    #[test]
    fn crystal_ball_is_closed() {
        // breadth-first ball around the source vertex: every lowering
        // that the string lengths allow must land back inside the model,
        // and raising must invert it
        use std::collections::HashSet;
        for (mu, n) in [(p(&[1]), 2), (p(&[2]), 3), (p(&[1, 1]), 2), (p(&[2, 1]), 3)] {
            let sources = enumerate_lrd(&mu, &mu, n);
            assert_eq!(sources.len(), 1);
            let mut seen: HashSet<Vec<Vec<usize>>> = HashSet::new();
            let mut frontier = vec![sources[0].clone()];
            seen.insert(sources[0].serial_key());
            for _depth in 0..4 {
                let mut next = Vec::new();
                for e in &frontier {
                    for i in 0..=3usize {
                        let lowered = if i == 0 {
                            e.crystal_zero(true)
                        } else {
                            e.crystal_f(i)
                        };
                        let phi_positive = if i == 0 {
                            lowered.is_some()
                        } else {
                            signature(&e.word(), i).phi > 0
                        };
                        match (phi_positive, lowered) {
                            (true, Some(f)) => {
                                assert!(f.is_valid(), "lowering left the model: {f:?}");
                                let raised = if i == 0 {
                                    f.crystal_zero(false)
                                } else {
                                    f.crystal_e(i)
                                };
                                assert_eq!(raised.as_ref(), Some(e));
                                if seen.insert(f.serial_key()) {
                                    next.push(f);
                                }
                            }
                            (true, None) => panic!("closure fails at {e:?}, i = {i}"),
                            (false, _) => {}
                        }
                    }
                }
                frontier = next;
            }
            assert!(seen.len() > 1, "ball did not grow for μ = {mu}, n = {n}");
        }
    }

    #[test]
    fn json_round_trip() {
        let t1 = two(&[1, 2, 3, 5], &[1, 2, 3, 4], 2);
        let t2 = two(&[1, 5], &[1, 4], 2);
        let e = SpinorElement::from_parts(4, p(&[2, 2]), vec![t2, t1]).unwrap();
        let s = serde_json::to_string(&e.serializable()).unwrap();
        let back: SpinorElementJson = serde_json::from_str(&s).unwrap();
        assert_eq!(SpinorElement::from_json(&back).unwrap(), e);
    }

    pub(crate) fn all_two_columns(max_entry: usize, max_height: usize) -> Vec<TwoColumn> {
        let mut cols = vec![Vec::new()];
        for h in 1..=max_height {
            let mut buf = Vec::new();
            gen_tails(h, 1, max_entry, &mut buf, &mut cols);
        }
        let mut out = Vec::new();
        for l in &cols {
            for r in &cols {
                for a in 0..=l.len() {
                    if let Ok(t) = TwoColumn::two(l.clone(), r.clone(), a) {
                        out.push(t);
                    }
                }
            }
        }
        out
    }
}
