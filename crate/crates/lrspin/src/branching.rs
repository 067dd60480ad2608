//! Branching multiplicities from `GL_n` to the orthogonal and symplectic
//! groups, by direct crystal enumeration and by the barred/flagged LR
//! sums, plus the stable-range formula and a cross-check against the
//! alternating-sum formula for a two-parameter family of weights.

use crate::flags::{is_barred_c, is_barred_d_row, is_flagged_c, is_flagged_d_companion, FlagContext};
use crate::lr::{enumerate_lr, LrKind};
use crate::par;
use crate::partition::{enumerate_family, ParityFamily, Partition};
use crate::spinor::{enumerate_lrd, OrthogonalWeight};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Group {
    O,
    Sp,
    B,
    C,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Direct,
    Barred,
    Flagged,
}

#[derive(Clone, Debug)]
pub struct BranchingQuery {
    pub n: usize,
    pub lambda: Partition,
    pub mu: Partition,
    pub group: Group,
}

impl BranchingQuery {
    pub fn new(n: usize, lambda: Partition, mu: Partition, group: Group) -> Result<Self, String> {
        if lambda.len() > n {
            return Err(format!("lambda {lambda} has more than {n} rows"));
        }
        match group {
            Group::O => {
                OrthogonalWeight::new(mu.clone(), n)?;
            }
            Group::Sp | Group::C => {
                if !n.is_multiple_of(2) && group == Group::Sp {
                    return Err("symplectic rank n must be even".into());
                }
                if 2 * mu.len() > n {
                    return Err(format!("mu {mu} needs length at most n/2"));
                }
            }
            Group::B => {
                if 2 * mu.len() > n {
                    return Err(format!("mu {mu} needs length at most n/2"));
                }
            }
        }
        Ok(BranchingQuery {
            n,
            lambda,
            mu,
            group,
        })
    }
}

/// Admissible middle partitions: the right parity family, the right
/// weight, contained in `λ`, at most `n` rows.
fn delta_range(lambda: &Partition, mu: &Partition, n: usize, family: ParityFamily) -> Vec<Partition> {
    if lambda.size() < mu.size() {
        return Vec::new();
    }
    let weight = lambda.size() - mu.size();
    enumerate_family(family, weight, n)
        .into_iter()
        .filter(|d| d.size() == weight && lambda.contains(d))
        .collect()
}

/// `[V^λ_{GL_n} : V^μ_{O_n}]` with the per-`δ` contributions of the
/// chosen method (the direct method reports a single total).
pub fn multiplicity_with_contributions(
    q: &BranchingQuery,
    method: Method,
) -> Result<(usize, Vec<(Partition, usize)>), String> {
    assert_eq!(q.group, Group::O, "O-group query expected");
    if (q.lambda.size() as i64 - q.mu.size() as i64) < 0
        || !(q.lambda.size() - q.mu.size()).is_multiple_of(2)
    {
        return Ok((0, Vec::new()));
    }
    match method {
        Method::Direct => {
            let count = enumerate_lrd(&q.mu, &q.lambda, q.n).len();
            Ok((count, Vec::new()))
        }
        Method::Barred => {
            let deltas = delta_range(&q.lambda, &q.mu, q.n, ParityFamily::EvenRows);
            let (lambda, mu, n) = (q.lambda.clone(), q.mu.clone(), q.n);
            let contributions = par::map_collect(deltas, move |delta| {
                let ctx = FlagContext::new(n, mu.clone(), delta.clone())
                    .expect("query validated the weight");
                let count = enumerate_lr(
                    &lambda.conjugate(),
                    &delta.conjugate(),
                    &mu.conjugate(),
                    LrKind::Lattice,
                )
                .iter()
                .filter(|w| is_barred_d_row(&w.companion, &ctx))
                .count();
                (delta, count)
            });
            let total = contributions.iter().map(|(_, c)| c).sum();
            Ok((total, contributions))
        }
        Method::Flagged => {
            let deltas = delta_range(&q.lambda, &q.mu, q.n, ParityFamily::EvenRows);
            let (lambda, mu, n) = (q.lambda.clone(), q.mu.clone(), q.n);
            let contributions = par::map_collect(deltas, move |delta| {
                let ctx = FlagContext::new(n, mu.clone(), delta.clone())
                    .expect("query validated the weight");
                let count = enumerate_lr(&lambda, &delta, &mu, LrKind::AntiLattice)
                    .iter()
                    .filter(|w| is_flagged_d_companion(&w.companion, &ctx))
                    .count();
                (delta, count)
            });
            let total = contributions.iter().map(|(_, c)| c).sum();
            Ok((total, contributions))
        }
    }
}

pub fn multiplicity(q: &BranchingQuery, method: Method) -> Result<usize, String> {
    multiplicity_with_contributions(q, method).map(|(t, _)| t)
}

/// The stable-range restriction formula: a plain LR sum over even
/// partitions, valid for `ℓ(λ) <= n/2`.
pub fn littlewood_stable(q: &BranchingQuery) -> Result<usize, String> {
    if 2 * q.lambda.len() > q.n {
        return Err(format!(
            "out of the stable range: ℓ(λ) = {} exceeds n/2",
            q.lambda.len()
        ));
    }
    let family = match q.group {
        Group::O => ParityFamily::EvenRows,
        // Littlewood's symplectic sum runs over conjugates of even
        // partitions
        Group::Sp | Group::C => ParityFamily::EvenColumns,
        Group::B => ParityFamily::All,
    };
    let deltas = delta_range(&q.lambda, &q.mu, q.n, family);
    let (lambda, mu) = (q.lambda.clone(), q.mu.clone());
    Ok(par::map_sum(deltas, move |delta| {
        enumerate_lr(&lambda, &delta, &mu, LrKind::Lattice).len()
    }))
}

/// `[V^λ_{GL_n} : V^μ_{Sp_n}]` via the flagged sum over even-column
/// partitions; the row and companion sides are computed independently
/// and must agree.
pub fn sp_multiplicity(q: &BranchingQuery) -> Result<usize, String> {
    bc_multiplicity(q, Group::C)
}

/// The flagged branching sums of types B and C.
pub fn bc_multiplicity(q: &BranchingQuery, family_of: Group) -> Result<usize, String> {
    let family = match family_of {
        Group::B => ParityFamily::All,
        Group::C | Group::Sp => ParityFamily::EvenColumns,
        Group::O => return Err("use multiplicity() for the orthogonal group".into()),
    };
    if q.lambda.size() < q.mu.size() {
        return Ok(0);
    }
    let deltas = delta_range(&q.lambda, &q.mu, q.n, family);
    let (lambda, mu, n) = (q.lambda.clone(), q.mu.clone(), q.n);
    let both = par::map_collect(deltas, move |delta| {
        let barred = enumerate_lr(
            &lambda.conjugate(),
            &delta.conjugate(),
            &mu.conjugate(),
            LrKind::Lattice,
        )
        .iter()
        .filter(|w| is_barred_c(&w.companion, n, &mu, &delta))
        .count();
        let flagged = enumerate_lr(&lambda, &delta, &mu, LrKind::AntiLattice)
            .iter()
            .filter(|w| is_flagged_c(&w.companion, n, &mu))
            .count();
        (delta, barred, flagged)
    });
    for (delta, barred, flagged) in &both {
        if barred != flagged {
            return Err(format!(
                "row and companion sides disagree at δ = {delta}: {barred} vs {flagged}"
            ));
        }
    }
    Ok(both.iter().map(|(_, b, _)| b).sum())
}

/// `⟦V^λ : V^μ⟧`: the multiplicity summed with its partner weight `μ̄`
/// unless the two coincide.
pub fn double_bracket(lambda: &Partition, mu: &Partition, n: usize) -> Result<usize, String> {
    let weight = OrthogonalWeight::new(mu.clone(), n)?;
    let q = BranchingQuery::new(n, lambda.clone(), mu.clone(), Group::O)?;
    let first = multiplicity(&q, Method::Flagged)?;
    if weight.mu_bar == *mu {
        return Ok(first);
    }
    let qb = BranchingQuery::new(n, lambda.clone(), weight.mu_bar.clone(), Group::O)?;
    Ok(first + multiplicity(&qb, Method::Flagged)?)
}

/// Cross-check of the flagged formula against the alternating LR-sum
/// formula for `μ = (d, 2^a, 1^b, 0^c)`, `ν = (d, 2^c, 1^b, 0^a)`.
///
/// Returns `(difference, flagged, equal)`.
pub fn enright_willenbring_check(
    n: usize,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    lambda: &Partition,
) -> Result<(i64, usize, bool), String> {
    if d < 2 || a == 0 || b == 0 || c == 0 {
        return Err("need d >= 2 and positive a, b, c".into());
    }
    if 1 + a + b + c != n {
        return Err(format!("1 + a + b + c = {} must equal n = {n}", 1 + a + b + c));
    }
    let mut mu_parts = vec![d];
    mu_parts.extend(std::iter::repeat_n(2, a));
    mu_parts.extend(std::iter::repeat_n(1, b));
    let mu = Partition::new(mu_parts);
    let mut nu_parts = vec![d];
    nu_parts.extend(std::iter::repeat_n(2, c));
    nu_parts.extend(std::iter::repeat_n(1, b));
    // ν only enters the plain LR sums; it need not be an orthogonal weight
    let nu = Partition::new(nu_parts);
    OrthogonalWeight::new(mu.clone(), n)?;

    let plain_sum = |kappa: &Partition| -> usize {
        delta_range(lambda, kappa, n, ParityFamily::EvenRows)
            .into_iter()
            .map(|delta| {
                enumerate_lr(
                    &lambda.conjugate(),
                    &delta.conjugate(),
                    &kappa.conjugate(),
                    LrKind::Lattice,
                )
                .len()
            })
            .sum()
    };
    let difference = plain_sum(&mu) as i64 - plain_sum(&nu) as i64;
    let q = BranchingQuery::new(n, lambda.clone(), mu, Group::O)?;
    let flagged = multiplicity(&q, Method::Flagged)?;
    Ok((difference, flagged, difference == flagged as i64))
}
