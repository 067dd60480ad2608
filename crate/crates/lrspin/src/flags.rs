//! Flag sequences `(m_i)`, `(n_j)` attached to LR tableaux, and the
//! flagged/barred membership predicates for types B, C and D.
//!
//! The D-type data depends on `n`, `μ` and (on the row side) `δ`; the
//! bound index `r` switches branch according to the sign of `n - 2μ'_1`.

use crate::partition::{ParityFamily, Partition};
use crate::tableau::Tableau;
use serde::Serialize;

/// Ambient data for the flag conditions.
#[derive(Clone, Debug)]
pub struct FlagContext {
    pub n: usize,
    pub mu: Partition,
    pub delta: Partition,
    /// `p = μ'_1`.
    pub p: usize,
    /// `q = μ'_2`.
    pub q: usize,
    /// `r = p` when `n - 2μ'_1 >= 0`, else `r = n - μ'_1`.
    pub r: usize,
}

impl FlagContext {
    pub fn new(n: usize, mu: Partition, delta: Partition) -> Result<Self, String> {
        let muc = mu.conjugate();
        let p = muc.part(0);
        let q = muc.part(1);
        if p + q > n {
            return Err(format!("mu'_1 + mu'_2 = {} exceeds n = {n}", p + q));
        }
        let r = if n >= 2 * p { p } else { n - p };
        debug_assert!(r <= p);
        // at the boundary n = 2μ'_1 both branches give the same r
        debug_assert!(n != 2 * p || r == n - p);
        Ok(FlagContext { n, mu, delta, p, q, r })
    }

    fn delta_rev(&self) -> Option<Vec<usize>> {
        self.delta.reverse_padded(self.n)
    }

    /// Upper end of the index window for `m_i`.
    fn window_hi(&self, i: usize) -> usize {
        if i <= self.r {
            2 * i - 1
        } else {
            self.n - self.p + i
        }
    }
}

/// The two flag sequences, 1-based and strictly increasing.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FlagSequences {
    pub m: Vec<usize>,
    pub nseq: Vec<usize>,
}

/// `n_j` = the `j`-th smallest element of `{j+1, …, n} \ {m_{j+1}, …, m_p}`.
fn n_sequence(m: &[usize], q: usize, n: usize) -> Vec<usize> {
    (1..=q)
        .map(|j| {
            (j + 1..=n)
                .filter(|k| !m[j..].contains(k))
                .nth(j - 1)
                .expect("n_j exists: the window has at least j elements")
        })
        .collect()
}

/// Flag sequences read from a companion tableau `U ∈ SST(μ^π)`:
/// `σ_i` is the `i`-th entry of the rightmost column from the bottom and
/// `m_i = min(n - σ_i + 1, window)`.
pub fn flag_sequences_companion(u: &Tableau, ctx: &FlagContext) -> FlagSequences {
    let (sigma, _tau) = sigma_tau_companion(u, ctx);
    let m: Vec<usize> = (1..=ctx.p)
        .map(|i| {
            assert!(sigma[i - 1] <= ctx.n, "entries must be bounded by n");
            (ctx.n - sigma[i - 1] + 1).min(ctx.window_hi(i))
        })
        .collect();
    let nseq = n_sequence(&m, ctx.q, ctx.n);
    FlagSequences { m, nseq }
}

fn sigma_tau_companion(u: &Tableau, ctx: &FlagContext) -> (Vec<usize>, Vec<usize>) {
    let width = u.outer().part(0);
    assert_eq!(
        u.outer().part(0),
        ctx.mu.part(0),
        "companion must have shape mu^pi"
    );
    let mut rightmost = u.column(width.saturating_sub(1));
    rightmost.reverse();
    let mut second = if width >= 2 {
        u.column(width - 2)
    } else {
        Vec::new()
    };
    second.reverse();
    assert_eq!(rightmost.len(), ctx.p);
    assert_eq!(second.len(), ctx.q);
    (rightmost, second)
}

/// Flag sequences read from a row-side companion `S ∈ SST(μ')` with first
/// row `s_1 <= … <= s_p`, against `δ^rev`:
/// `m_i = max{ k in the index window, k unused, δ^rev_k < s_i }`,
/// computed downward from `i = p`. Returns `None` when some `m_i` has no
/// admissible index (the tableau is in no flagged set).
pub fn flag_sequences_row(s: &Tableau, ctx: &FlagContext) -> Option<FlagSequences> {
    let drev = ctx.delta_rev()?;
    let first_row: &[usize] = if ctx.p > 0 { &s.rows()[0] } else { &[] };
    assert_eq!(first_row.len(), ctx.p, "first row must have mu'_1 entries");
    let mut m = vec![0usize; ctx.p];
    for i in (1..=ctx.p).rev() {
        let si = first_row[i - 1];
        let cand = (i..=ctx.window_hi(i).min(ctx.n))
            .filter(|k| !m[i..].contains(k))
            .filter(|&k| drev[k - 1] < si)
            .max()?;
        m[i - 1] = cand;
    }
    if m.windows(2).any(|w| w[0] >= w[1]) {
        return None;
    }
    let nseq = n_sequence(&m, ctx.q, ctx.n);
    Some(FlagSequences { m, nseq })
}

/// D-type flag condition on a companion `U ∈ SST(μ^π)`:
/// `τ_j + n_j <= n + 1` for all `j`.
pub fn is_flagged_d_companion(u: &Tableau, ctx: &FlagContext) -> bool {
    if ctx.q == 0 {
        return true;
    }
    let (_sigma, tau) = sigma_tau_companion(u, ctx);
    let seqs = flag_sequences_companion(u, ctx);
    (0..ctx.q).all(|j| tau[j] + seqs.nseq[j] <= ctx.n + 1)
}

/// D-type barred condition on a row-side companion `S ∈ SST(μ')`:
/// `t_j > δ^rev_{n_j}` for all `j`.
pub fn is_barred_d_row(s: &Tableau, ctx: &FlagContext) -> bool {
    if ctx.p == 0 {
        return true;
    }
    let Some(seqs) = flag_sequences_row(s, ctx) else {
        return false;
    };
    if ctx.q == 0 {
        return true;
    }
    let drev = ctx.delta_rev().expect("delta fits in n");
    let second_row: &[usize] = &s.rows()[1];
    assert_eq!(second_row.len(), ctx.q, "second row must have mu'_2 entries");
    (0..ctx.q).all(|j| second_row[j] > drev[seqs.nseq[j] - 1])
}

/// C-type (and B-type) companion condition: `σ_i + 2i <= n + 1`.
pub fn is_flagged_c(u: &Tableau, n: usize, mu: &Partition) -> bool {
    let ctx = FlagContext::new(n, mu.clone(), Partition::empty())
        .expect("context for companion side needs no delta");
    let (sigma, _) = sigma_tau_companion(u, &ctx);
    (1..=ctx.p).all(|i| sigma[i - 1] + 2 * i <= n + 1)
}

/// C-type (and B-type) row condition: `s_i > δ^rev_{2i}`.
pub fn is_barred_c(s: &Tableau, n: usize, mu: &Partition, delta: &Partition) -> bool {
    let muc = mu.conjugate();
    let p = muc.part(0);
    if p == 0 {
        return true;
    }
    let Some(drev) = delta.reverse_padded(n) else {
        return false;
    };
    let first_row = &s.rows()[0];
    assert_eq!(first_row.len(), p);
    (1..=p).all(|i| 2 * i <= n && first_row[i - 1] > drev[2 * i - 1])
}

/// B-type conditions coincide with the C-type ones; only the family of
/// admissible `δ` differs (all partitions for B, even-column ones for C).
pub fn is_barred_b(s: &Tableau, n: usize, mu: &Partition, delta: &Partition) -> bool {
    is_barred_c(s, n, mu, delta)
}

pub fn delta_family_for(group: BcFamily) -> ParityFamily {
    match group {
        BcFamily::B => ParityFamily::All,
        BcFamily::C => ParityFamily::EvenColumns,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BcFamily {
    B,
    C,
}

/// σ/τ read off a skew anti-lattice filling of `λ/δ` with companion shape
/// `μ^π`: `σ_i` is the row index of the leftmost entry `μ'_1 - i + 1`,
/// `τ_j` that of the second leftmost `μ'_1 - j + 1`.
pub fn sigma_tau_skew(filling: &Tableau, ctx: &FlagContext) -> (Vec<usize>, Vec<usize>) {
    // leftmost occurrence of e = greatest row containing e; second
    // leftmost = second greatest (entries of one value form a horizontal
    // strip, moving left as the row index grows)
    let mut rows_of: Vec<Vec<usize>> = vec![Vec::new(); ctx.p];
    for (i, row) in filling.rows().iter().enumerate() {
        for &x in row {
            rows_of[x - 1].push(i + 1);
        }
    }
    let sigma: Vec<usize> = (1..=ctx.p)
        .map(|i| *rows_of[ctx.p - i].last().expect("entry occurs"))
        .collect();
    let tau: Vec<usize> = (1..=ctx.q)
        .map(|j| {
            let occ = &rows_of[ctx.p - j];
            occ[occ.len() - 2]
        })
        .collect();
    (sigma, tau)
}

/// The flagged verdict evaluated on the skew form directly; agrees with
/// [`is_flagged_d_companion`] on the companion of the same witness.
pub fn is_flagged_d_skew(filling: &Tableau, ctx: &FlagContext) -> bool {
    if ctx.p == 0 {
        return true;
    }
    let (sigma, tau) = sigma_tau_skew(filling, ctx);
    let m: Vec<usize> = (1..=ctx.p)
        .map(|i| (ctx.n - sigma[i - 1] + 1).min(ctx.window_hi(i)))
        .collect();
    let nseq = n_sequence(&m, ctx.q, ctx.n);
    (0..ctx.q).all(|j| tau[j] + nseq[j] <= ctx.n + 1)
}
