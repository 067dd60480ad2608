//! The separation algorithm: sliding operators on tuples of columns which
//! move tails leftward while preserving the Knuth class, the one-step
//! peel, the full factorisation into an even rectangular body plus an LR
//! tail, and the inverse constructions.

use crate::flags::{is_barred_d_row, FlagContext};
use crate::partition::{ParityFamily, Partition};
use crate::spinor::{ColumnKind, Glued, OrthogonalWeight, SpinorElement, TwoColumn};
use crate::tableau::{highest_tableau, word_insert, SkewShape, Tableau};
use serde::Serialize;

/// A tuple of strictly increasing columns, listed right to left:
/// `cols[0]` is the rightmost column `U_1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColumnTuple {
    pub cols: Vec<Vec<usize>>,
}

impl ColumnTuple {
    /// The raising operator on the adjacent pair
    /// `(cols[pos + 1], cols[pos])`, glued at maximal overlap.
    pub fn bicrystal_e(&self, pos: usize) -> Option<ColumnTuple> {
        self.apply_pair(pos, |g| g.cal_e())
    }

    /// The lowering operator on the adjacent pair.
    pub fn bicrystal_f(&self, pos: usize) -> Option<ColumnTuple> {
        self.apply_pair(pos, |g| g.cal_f())
    }

    fn apply_pair(
        &self,
        pos: usize,
        op: impl Fn(&Glued) -> Option<Glued>,
    ) -> Option<ColumnTuple> {
        assert!(pos + 1 < self.cols.len());
        let glued = Glued::max_overlap(self.cols[pos + 1].clone(), self.cols[pos].clone());
        let moved = op(&glued)?;
        let mut out = self.clone();
        out.cols[pos + 1] = moved.left;
        out.cols[pos] = moved.right;
        Some(out)
    }

    pub fn word(&self) -> Vec<usize> {
        self.cols.iter().flatten().copied().collect()
    }
}

/// Which implementation of the sliding operator to run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SlideImpl {
    /// The defining composite of raising/lowering operators.
    Operators,
    /// The closed-form rearrangement of the two columns.
    ClosedForm,
    /// Run both and require agreement.
    Both,
}

/// The sliding operator on the pair `(cols[pos + 1], cols[pos])`, moving
/// the tail of height `a` from the lower column one pair leftward.
/// Errors on the excluded equality of the corner entries.
pub fn sliding_s(
    tuple: &ColumnTuple,
    pos: usize,
    a: usize,
    which: SlideImpl,
) -> Result<ColumnTuple, String> {
    if a == 0 {
        return Ok(tuple.clone());
    }
    let upper = &tuple.cols[pos + 1];
    let lower = &tuple.cols[pos];
    assert!(a <= lower.len());
    let corner = lower[lower.len() - a]; // U_j(a)
    // an empty upper column behaves like the tail-move case
    let bottom = upper.last().copied().unwrap_or(0);
    if bottom == corner {
        return Err(format!(
            "sliding is undefined at pair {pos}: both corner entries are {corner}"
        ));
    }
    let closed = || -> ColumnTuple {
        let mut out = tuple.clone();
        if bottom < corner {
            // move the tail across
            let (body, tail) = lower.split_at(lower.len() - a);
            let mut new_upper = upper.clone();
            new_upper.extend_from_slice(tail);
            out.cols[pos + 1] = new_upper;
            out.cols[pos] = body.to_vec();
        } else {
            // the upper column loses its bottom and gains the tail minus
            // its top entry; the lower column absorbs the displaced bottom
            let h = upper.len();
            let mut new_upper: Vec<usize> = upper[..h - 1].to_vec();
            new_upper.extend_from_slice(&lower[lower.len() - a + 1..]);
            let mut new_lower: Vec<usize> = lower[..lower.len() - a + 1].to_vec();
            new_lower.push(bottom);
            out.cols[pos + 1] = new_upper;
            out.cols[pos] = new_lower;
        }
        out
    };
    let operators = || -> Result<ColumnTuple, String> {
        let fail = |what: &str| format!("sliding composite failed at {what}");
        if bottom < corner {
            let mut cur = tuple.clone();
            for _ in 0..a {
                cur = cur.bicrystal_f(pos).ok_or_else(|| fail("F at the pair"))?;
            }
            Ok(cur)
        } else {
            let mut cur = tuple
                .bicrystal_f(pos - 1)
                .ok_or_else(|| fail("F below the pair"))?;
            for _ in 0..a - 1 {
                cur = cur.bicrystal_f(pos).ok_or_else(|| fail("F at the pair"))?;
            }
            cur = cur
                .bicrystal_e(pos - 1)
                .ok_or_else(|| fail("E below the pair"))?;
            cur.bicrystal_e(pos).ok_or_else(|| fail("E at the pair"))
        }
    };
    match which {
        SlideImpl::ClosedForm => Ok(closed()),
        SlideImpl::Operators => operators(),
        SlideImpl::Both => {
            let ops = operators()?;
            let cf = closed();
            if ops != cf {
                return Err(format!(
                    "sliding implementations disagree at pair {pos}: {ops:?} vs {cf:?}"
                ));
            }
            // Knuth equivalence is a congruence, so checking the columns
            // the slide can touch (the pair and its right neighbour, which
            // the composite passes through) checks the whole tuple
            let lo = pos.saturating_sub(1);
            let local = |cols: &[Vec<usize>]| -> Vec<usize> {
                cols[lo..=pos + 1].iter().flatten().copied().collect()
            };
            if crate::oracle::knuth_normal_form(&local(&tuple.cols))
                != crate::oracle::knuth_normal_form(&local(&cf.cols))
            {
                return Err(format!("sliding changed the Knuth class at pair {pos}"));
            }
            Ok(ops)
        }
    }
}

/// One column of the separated tableau, split at the horizontal line.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SplitColumn {
    pub body: Vec<usize>,
    pub tail: Vec<usize>,
}

/// A record of one peeling step, for traces.
#[derive(Clone, Debug, Serialize)]
pub struct TraceStep {
    pub n: usize,
    pub slid_columns: Vec<Vec<usize>>,
    pub peeled: SplitColumn,
}

/// The result of separating an `l`-highest weight element.
#[derive(Clone, Debug)]
pub struct SeparationResult {
    pub delta: Partition,
    pub lambda: Partition,
    /// The tail as a straight tableau of shape `μ'`.
    pub tail: Tableau,
    /// All columns of the separated tableau, left to right.
    pub columns: Vec<SplitColumn>,
    pub steps: Vec<TraceStep>,
}

/// The identification of an element with its tuple of columns, listed
/// right to left.
pub fn column_tuple(e: &SpinorElement) -> ColumnTuple {
    ColumnTuple {
        cols: e.columns_rl(),
    }
}

/// Per-column tail heights matching [`SpinorElement::columns_rl`].
fn tails_rl(e: &SpinorElement) -> Vec<usize> {
    let mut tails = Vec::new();
    for comp in e.comps().iter().rev() {
        match comp.kind {
            ColumnKind::Two => {
                tails.push(0);
                tails.push(comp.tail_len());
            }
            ColumnKind::BarZero => {
                tails.push(1);
                tails.push(1);
            }
            ColumnKind::SpPlus => tails.push(0),
            ColumnKind::SpMinus => tails.push(1),
        }
    }
    tails
}

/// Sliding sites of an element: for every adjacent pair of two-column
/// components, the index of the lower left column and the tail height to
/// move. Returned right to left.
pub fn slide_sites(e: &SpinorElement) -> Vec<(usize, usize)> {
    let mut sites = Vec::new();
    let mut idx = 0;
    let comps: Vec<&TwoColumn> = e.comps().iter().rev().collect();
    for (k, comp) in comps.iter().enumerate() {
        match comp.kind {
            ColumnKind::SpPlus | ColumnKind::SpMinus => idx += 1,
            _ => {
                let left_idx = idx + 1;
                if k + 1 < comps.len() {
                    debug_assert!(matches!(
                        comps[k + 1].kind,
                        ColumnKind::Two | ColumnKind::BarZero
                    ));
                    sites.push((left_idx, comp.tail_len()));
                }
                idx += 2;
            }
        }
    }
    sites
}

/// Rebuilds a spinor element over `(mu, n)` from columns listed right to
/// left, pairing per the component template.
fn element_from_columns_rl(
    cols: &[Vec<usize>],
    mu: &Partition,
    n: usize,
) -> Result<SpinorElement, String> {
    let weight = OrthogonalWeight::new(mu.clone(), n)?;
    let spec = weight.template();
    let mut comps_rl: Vec<TwoColumn> = Vec::new();
    let mut idx = 0;
    for (kind, tail) in spec.iter().rev() {
        match kind {
            ColumnKind::SpPlus | ColumnKind::SpMinus => {
                comps_rl.push(TwoColumn::spin(cols[idx].clone())?);
                idx += 1;
            }
            ColumnKind::Two => {
                let right = cols[idx].clone();
                let left = cols[idx + 1].clone();
                idx += 2;
                comps_rl.push(TwoColumn::two(left, right, *tail)?);
            }
            ColumnKind::BarZero => {
                let right = cols[idx].clone();
                let left = cols[idx + 1].clone();
                idx += 2;
                comps_rl.push(TwoColumn::bar_zero(left, right)?);
            }
        }
    }
    if idx != cols.len() {
        return Err("column count does not match the template".into());
    }
    comps_rl.reverse();
    SpinorElement::from_parts(n, mu.clone(), comps_rl)
}

fn shrink_mu(mu: &Partition) -> Partition {
    Partition::new(mu.parts().iter().skip(1).copied().collect::<Vec<_>>())
}

/// Default padding height for the negative case: even and dominating
/// every entry comparison that can arise.
pub fn default_pad_height(e: &SpinorElement) -> usize {
    let max_entry = e.word().into_iter().max().unwrap_or(0);
    2 * (max_entry + e.n + e.mu.size())
}

/// The padded element: columns `(U_{2l}, …, U_{2m}, H_{(1^a)})` over
/// `(μ̄ ∪ {1}, 2ℓ(μ̄) + 2)`, reducing the negative case to the positive
/// one. Errors when `a` is too small for the new pair to be admissible.
pub fn pad_negative(e: &SpinorElement, a: usize) -> Result<SpinorElement, String> {
    let weight = OrthogonalWeight::new(e.mu.clone(), e.n)?;
    if weight.positive {
        return Err("padding applies to the negative case only".into());
    }
    if !a.is_multiple_of(2) {
        return Err("padding height must be even".into());
    }
    let m = weight.q;
    // columns U_{2l}, …, U_{2m} right to left, then the padding column
    let tuple = column_tuple(e);
    let keep = tuple.cols.len() - (2 * m + weight.r) + 1; // count of kept columns
    let mut cols_rl: Vec<Vec<usize>> = vec![(1..=a).collect()];
    let from = 2 * m + weight.r - 1; // index of U_{2m} in rl order
    for k in from..from + keep {
        cols_rl.push(tuple.cols[k].clone());
    }
    let eta = weight.mu_bar.union_sorted(&[1]);
    let big_n = cols_rl.len();
    let padded = element_from_columns_rl(&cols_rl, &eta, big_n)?;
    if !padded.is_valid() {
        return Err(format!("padding height {a} too small: pair not admissible"));
    }
    Ok(padded)
}

/// One peeling step on an `l`-highest weight element: slides every tail
/// one pair leftward, removes the leftmost column, and reassembles the
/// remainder over `(μ̃, n-1)` with `μ̃ = (μ_2, μ_3, …)`.
pub fn slide_step(
    e: &SpinorElement,
    which: SlideImpl,
    pad: Option<usize>,
) -> Result<(SpinorElement, SplitColumn, Vec<Vec<usize>>), String> {
    let weight = OrthogonalWeight::new(e.mu.clone(), e.n)?;
    let mu_next = shrink_mu(&e.mu);
    let (padded, pad_used);
    if weight.positive {
        padded = e.clone();
        pad_used = 0;
    } else {
        let pad_h = pad.unwrap_or_else(|| default_pad_height(e));
        padded = pad_negative(e, pad_h)?;
        pad_used = 1;
    }
    let tuple = column_tuple(&padded);
    let tails = tails_rl(&padded);
    let mut cur = tuple.clone();
    for &(pos, a) in slide_sites(&padded).iter().rev() {
        cur = sliding_s(&cur, pos, a, which)?;
    }
    let peeled_raw = cur.cols.last().unwrap().clone();
    let a_last = *tails.last().unwrap();
    let peeled = SplitColumn {
        body: peeled_raw[..peeled_raw.len() - a_last].to_vec(),
        tail: peeled_raw[peeled_raw.len() - a_last..].to_vec(),
    };
    // drop the peeled column (leftmost) and any padding column
    // (rightmost); in the negative case splice the untouched odd columns
    // back in on the right
    let slid_part: Vec<Vec<usize>> = cur.cols[pad_used..cur.cols.len() - 1].to_vec();
    let mut remaining = if weight.positive {
        Vec::new()
    } else {
        column_tuple(e).cols[..2 * weight.q + weight.r - 1].to_vec()
    };
    remaining.extend(slid_part);
    let slid = remaining.clone();
    let next = element_from_columns_rl(&remaining, &mu_next, e.n - 1)?;
    if !next.is_valid() {
        return Err("slid element is not admissible".into());
    }
    Ok((next, peeled, slid))
}

/// Full separation of an `l`-highest weight element into its even body
/// `H_{(δ')^π}` and tail in `SST(μ')` with `(tail → H_{δ'}) = H_{λ'}`.
pub fn separate(e: &SpinorElement, pad: Option<usize>) -> Result<SeparationResult, String> {
    separate_impl(e, pad, SlideImpl::Both)
}

fn separate_impl(
    e: &SpinorElement,
    pad: Option<usize>,
    which: SlideImpl,
) -> Result<SeparationResult, String> {
    if !e.is_valid() {
        return Err("element is not admissible".into());
    }
    if !e.is_l_highest() {
        return Err("element is not l-highest weight".into());
    }
    if !crate::spinor::check_h_circ(e) {
        return Err("element violates the structural highest weight conditions".into());
    }
    let expected_content = e.content();

    let mut columns: Vec<SplitColumn> = Vec::new();
    let mut steps: Vec<TraceStep> = Vec::new();
    let mut cur = e.clone();
    loop {
        let weight = OrthogonalWeight::new(cur.mu.clone(), cur.n)?;
        let at_base = if weight.positive {
            cur.n <= 3
        } else {
            cur.n <= 2
        };
        if at_base {
            let tuple = column_tuple(&cur);
            let tails = tails_rl(&cur);
            for (col, &a) in tuple.cols.iter().zip(&tails).rev() {
                columns.push(SplitColumn {
                    body: col[..col.len() - a].to_vec(),
                    tail: col[col.len() - a..].to_vec(),
                });
            }
            break;
        }
        let (next, peeled, slid) = slide_step(&cur, which, pad)?;
        steps.push(TraceStep {
            n: cur.n,
            slid_columns: slid,
            peeled: peeled.clone(),
        });
        columns.push(peeled);
        cur = next;
        if !cur.is_l_highest() {
            return Err("sliding destroyed the highest weight property".into());
        }
    }
    assemble_result(columns, steps, &e.mu, e.n, &expected_content)
}

fn assemble_result(
    columns: Vec<SplitColumn>,
    steps: Vec<TraceStep>,
    mu: &Partition,
    n: usize,
    expected_content: &[usize],
) -> Result<SeparationResult, String> {
    // the body must be H-shaped: initial columns of weakly increasing
    // heights, left to right
    let heights: Vec<usize> = columns.iter().map(|c| c.body.len()).collect();
    if heights.windows(2).any(|w| w[0] > w[1]) {
        return Err(format!("body heights {heights:?} are not increasing"));
    }
    for c in &columns {
        if c.body.iter().enumerate().any(|(i, &x)| x != i + 1) {
            return Err(format!("body column {:?} is not initial", c.body));
        }
    }
    let delta = Partition::new(heights.iter().rev().copied().collect::<Vec<_>>());
    if !delta.is_in_family(ParityFamily::EvenRows) {
        return Err(format!("body profile {delta} has odd parts"));
    }

    let tails: Vec<Vec<usize>> = columns
        .iter()
        .map(|c| c.tail.clone())
        .filter(|t| !t.is_empty())
        .collect();
    let profile: Vec<usize> = tails.iter().map(|t| t.len()).collect();
    if profile.windows(2).any(|w| w[0] < w[1]) {
        return Err(format!("tail heights {profile:?} are not decreasing"));
    }
    let tail_heights = Partition::new(profile);
    if tail_heights != *mu {
        return Err(format!(
            "tail heights {tail_heights} do not reproduce {mu}"
        ));
    }
    let tail = Tableau::from_columns(&tails)?;

    // validate the whole configuration as one skew tableau
    validate_skew(&columns, n)?;

    // λ from the insertion identity, cross-checked against the content
    let inserted = word_insert(
        &tail.reading_word(),
        &highest_tableau(&delta.conjugate(), false),
    );
    let lambda_conj = inserted.outer().clone();
    if inserted != highest_tableau(&lambda_conj, false) {
        return Err("tail does not insert to a highest weight tableau".into());
    }
    let mut content = lambda_conj.parts().to_vec();
    content.resize(expected_content.len().max(content.len()), 0);
    let mut expect = expected_content.to_vec();
    expect.resize(content.len(), 0);
    if content != expect {
        return Err("separation changed the content".into());
    }
    let lambda = lambda_conj.conjugate();

    // the tail lands in the barred flagged set
    let ctx = FlagContext::new(n, mu.clone(), delta.clone())?;
    if !is_barred_d_row(&tail, &ctx) {
        return Err(format!("tail {tail:?} is not barred for delta {delta}"));
    }

    Ok(SeparationResult {
        delta,
        lambda,
        tail,
        columns,
        steps,
    })
}

/// Semistandardness of the assembled configuration: bodies bottom-aligned
/// above the line, tails top-aligned below it.
fn validate_skew(columns: &[SplitColumn], n: usize) -> Result<(), String> {
    if columns.len() != n {
        return Err(format!("expected {n} columns, got {}", columns.len()));
    }
    let depth = columns.iter().map(|c| c.body.len()).max().unwrap_or(0);
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut inner: Vec<usize> = Vec::new();
    for t in 0..depth {
        let row: Vec<usize> = columns
            .iter()
            .filter(|c| c.body.len() >= depth - t)
            .map(|c| c.body[c.body.len() - (depth - t)])
            .collect();
        if row.is_empty() {
            continue;
        }
        inner.push(columns.len() - row.len());
        rows.push(row);
    }
    let tail_depth = columns.iter().map(|c| c.tail.len()).max().unwrap_or(0);
    for s in 0..tail_depth {
        let row: Vec<usize> = columns
            .iter()
            .take_while(|c| c.tail.len() > s)
            .map(|c| c.tail[s])
            .collect();
        inner.push(0);
        rows.push(row);
    }
    let outer: Vec<usize> = inner
        .iter()
        .zip(&rows)
        .map(|(i, r)| i + r.len())
        .collect();
    let shape = SkewShape::new(
        Partition::new(outer),
        Partition::new(inner),
    );
    Tableau::new(shape, rows).map(|_| ()).map_err(|e| format!("assembled tableau invalid: {e}"))
}

/// The inverse of separation for `n = 4`, `μ'_1 = 2`.
///
/// `w` is the barred tail (shape `μ'`); both branches of the corner case
/// are realised.
pub fn reconstruct_n4(
    delta: &Partition,
    w: &Tableau,
    mu: &Partition,
) -> Result<SpinorElement, String> {
    general_inverse(delta, w, mu, 4)
}

/// Constructive inverse of the separation map (the verification aid for
/// surjectivity): from a body profile `δ` and a barred tail `w` over
/// `(μ, n)` back to the unique `l`-highest weight element separating to
/// them.
pub fn general_inverse(
    delta: &Partition,
    w: &Tableau,
    mu: &Partition,
    n: usize,
) -> Result<SpinorElement, String> {
    let weight = OrthogonalWeight::new(mu.clone(), n)?;
    if weight.positive {
        let cols = inverse_positive(delta, w, mu, n)?;
        element_from_columns_rl(&cols, mu, n)
    } else {
        inverse_negative(delta, w, mu, n)
    }
}

/// Body column `(1, …, δ_k)`, `k`-th from the right.
fn body_col(delta: &Partition, k: usize) -> Vec<usize> {
    (1..=delta.part(k - 1)).collect()
}

/// Tail column `W_i`, `i`-th from the right among the `p` tail columns.
fn tail_col(w: &Tableau, p: usize, i: usize) -> Vec<usize> {
    w.column(p - i)
}

/// Builds the raw columns (right to left) of the positive-case preimage.
fn inverse_positive(
    delta: &Partition,
    w: &Tableau,
    mu: &Partition,
    n: usize,
) -> Result<Vec<Vec<usize>>, String> {
    let p = mu.conjugate().part(0);
    assert!(n >= 2 * p, "positive case requires n >= 2 mu'_1");
    let glue = |k: usize, t: Vec<usize>| -> Vec<usize> {
        let mut col = body_col(delta, k);
        col.extend(t);
        col
    };
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![body_col(delta, 1)]);
    }
    if n == 2 {
        let t = if p == 1 { tail_col(w, 1, 1) } else { Vec::new() };
        return Ok(vec![body_col(delta, 1), glue(2, t)]);
    }
    if n == 3 {
        let t = if p == 1 { tail_col(w, 1, 1) } else { Vec::new() };
        return Ok(vec![
            body_col(delta, 1),
            body_col(delta, 2),
            glue(3, t),
        ]);
    }
    if n == 4 && p <= 1 {
        let t = if p == 1 { tail_col(w, 1, 1) } else { Vec::new() };
        return Ok(vec![
            body_col(delta, 1),
            body_col(delta, 2),
            body_col(delta, 3),
            glue(4, t),
        ]);
    }
    if n == 4 {
        // the fundamental two-tail case, split on m_2
        let ctx = FlagContext::new(4, mu.clone(), delta.clone())?;
        let seqs = crate::flags::flag_sequences_row(w, &ctx)
            .ok_or("tail is not in the barred set: no flag sequences")?;
        let w1 = tail_col(w, 2, 1);
        let w2 = tail_col(w, 2, 2);
        let (d1, d2, d3) = (delta.part(0), delta.part(1), delta.part(2));
        return Ok(match seqs.m[1] {
            3 => vec![
                body_col(delta, 1),
                glue(2, w1),
                body_col(delta, 3),
                glue(4, w2),
            ],
            2 => {
                let w1_top = w1[0];
                // U_3 = V_3 with W_1's top and V_2's bottom appended
                let mut u3 = body_col(delta, 3);
                u3.push(w1_top);
                u3.push(d2);
                // U_2 = V_2 minus two, then V_2(2) and the rest of W_1
                let mut u2: Vec<usize> = (1..=d2 - 2).collect();
                u2.push(d2 - 1);
                u2.extend_from_slice(&w1[1..]);
                debug_assert!(d1 >= d2 && d2 >= d3 + 2);
                vec![body_col(delta, 1), u2, u3, glue(4, w2)]
            }
            other => return Err(format!("impossible m_2 = {other} at n = 4")),
        });
    }

    // n >= 5: peel the leftmost column, recurse, then un-slide
    let zeta = Partition::new(
        delta
            .parts()
            .iter()
            .take(n - 1)
            .copied()
            .collect::<Vec<_>>(),
    );
    let mu_next = shrink_mu(mu);
    let w_next_cols: Vec<Vec<usize>> = (1..p.max(1))
        .rev()
        .map(|i| tail_col(w, p, i))
        .collect();
    let w_next = Tableau::from_columns(&w_next_cols)?;
    let inner_cols = inverse_positive(&zeta, &w_next, &mu_next, n - 1)?;
    let inner = element_from_columns_rl(&inner_cols, &mu_next, n - 1)?;

    let mut out: Vec<Vec<usize>> = Vec::new();
    for comp in inner.comps().iter().rev() {
        match comp.kind {
            ColumnKind::SpPlus => out.push(comp.left().to_vec()),
            ColumnKind::Two => {
                let a = comp.tail_len();
                let left = comp.left().to_vec();
                let right = comp.right().to_vec();
                if a == 0 {
                    out.push(right);
                    out.push(left);
                } else {
                    let corner = left[left.len() - a];
                    // an empty right column behaves like the plain shift
                    let bottom = right.last().copied().unwrap_or(0);
                    if corner > bottom {
                        // undo the plain shift: tail returns to the right
                        let mut new_right = right.clone();
                        new_right.extend_from_slice(&left[left.len() - a..]);
                        out.push(new_right);
                        out.push(left[..left.len() - a].to_vec());
                    } else {
                        // undo the rearranged shift
                        let mut upper = left[..left.len() - a].to_vec();
                        upper.push(left[left.len() - a]);
                        upper.push(bottom);
                        let mut lower = right[..right.len() - 1].to_vec();
                        let pivot = lower.pop().expect("right column has two entries");
                        let mut lower_tail = vec![pivot];
                        lower_tail.extend_from_slice(&left[left.len() - a + 1..]);
                        lower.extend(lower_tail);
                        out.push(lower);
                        out.push(upper);
                    }
                }
            }
            other => unreachable!("positive inverse never sees {other:?}"),
        }
    }
    let mut leftmost = body_col(delta, n);
    if p >= 1 {
        leftmost.extend(tail_col(w, p, p));
    }
    out.push(leftmost);
    Ok(out)
}

/// Negative-case inverse: pad with huge single columns on the right so
/// that the positive construction applies, then carve the true element
/// back out by separating the padded block.
fn inverse_negative(
    delta: &Partition,
    w: &Tableau,
    mu: &Partition,
    n: usize,
) -> Result<SpinorElement, String> {
    let p = mu.conjugate().part(0);
    let l_pad = 2 * p - n;
    let kappa_base = 2 * (n + w.cell_count() + delta.size() + mu.size() + 4);
    // strictly decreasing even heights keep ξ a partition
    let kappa: Vec<usize> = (0..l_pad).map(|i| kappa_base + 2 * (l_pad - i)).collect();
    let xi = delta.union_sorted(&kappa);
    let big_m = n + l_pad;
    let r_cols = inverse_positive(&xi, w, mu, big_m)?;
    let r = element_from_columns_rl(&r_cols, mu, big_m)?;
    if !r.is_valid() || !r.is_l_highest() {
        return Err("padded inverse is not a highest weight element".into());
    }

    // the rightmost 2·l_pad columns form an element over ((1^l_pad), 2·l_pad)
    let s_cols: Vec<Vec<usize>> = r_cols[..2 * l_pad].to_vec();
    let ones = Partition::new(vec![1; l_pad]);
    let s = element_from_columns_rl(&s_cols, &ones, 2 * l_pad)?;
    let sep = separate_impl(&s, None, SlideImpl::ClosedForm)?;
    // keep the left half of the separated block
    let mut cols_rl: Vec<Vec<usize>> = sep
        .columns
        .iter()
        .rev()
        .skip(l_pad)
        .map(|c| {
            let mut col = c.body.clone();
            col.extend_from_slice(&c.tail);
            col
        })
        .collect();
    cols_rl.extend(r_cols[2 * l_pad..].iter().cloned());
    element_from_columns_rl(&cols_rl, mu, n)
}
