//! Distinguished tableaux and the graded zero-weight multiplicities
//! (generalized exponents) of the odd and even orthogonal algebras.

use crate::flags::{is_flagged_d_companion, FlagContext};
use crate::partition::{enumerate_family, ParityFamily, Partition};
use crate::poly::GradedPolynomial;
use crate::spinor::OrthogonalWeight;
use crate::tableau::{SkewShape, Tableau};

/// The string data of a bounded tableau: `ε_i` and `φ_i` for
/// `1 <= i <= n-1`.
pub fn eps_phi(t: &Tableau, n: usize) -> (Vec<usize>, Vec<usize>) {
    assert!(
        t.content().len() <= n,
        "entries must be bounded by n = {n}"
    );
    let word = t.reading_word();
    let mut eps = Vec::with_capacity(n.saturating_sub(1));
    let mut phi = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let s = crate::tableau::signature(&word, i);
        eps.push(s.eps);
        phi.push(s.phi);
    }
    (eps, phi)
}

/// A tableau accepted by the distinguished test, with the certificate.
#[derive(Clone, Debug)]
pub struct DistinguishedWitness {
    pub tableau: Tableau,
    pub eps: Vec<usize>,
    pub phi: Vec<usize>,
    /// The minimal shifting partition.
    pub rho: Partition,
    /// `φ(T) + ρ`, an even-column partition.
    pub lambda: Partition,
    /// `ε(T) + ρ`, an even-row partition.
    pub delta: Partition,
}

/// Converts fundamental-weight coordinates `(c_i)` to the partition with
/// `c_i` columns of height `i`.
fn partition_from_columns(coords: &[usize]) -> Partition {
    let parts: Vec<usize> = (0..coords.len())
        .map(|j| coords[j..].iter().sum())
        .collect();
    Partition::new(parts)
}

/// Tests whether `T` is `ρ`-distinguished for its canonical minimal `ρ`,
/// returning the certificate on success.
///
/// The weight `φ(T)` carries the extra component `m_n ϖ_n`, where `m_n`
/// counts the letters `n` in `T`: this is what makes `λ - δ` equal the
/// weight of `T` and `T` a genuine insertion witness for `(λ, δ)`.
pub fn is_distinguished(t: &Tableau, n: usize) -> Option<DistinguishedWitness> {
    let (eps, phi) = eps_phi(t, n);
    let m_n = t.content().get(n - 1).copied().unwrap_or(0);
    // ρ_T has a column of height i exactly when i is even and ε_i is odd
    let rho_coords: Vec<usize> = (1..=n)
        .map(|i| {
            if i < n && i % 2 == 0 {
                eps[i - 1] % 2
            } else {
                0
            }
        })
        .collect();
    let mut lambda_coords: Vec<usize> = (0..n - 1).map(|i| phi[i] + rho_coords[i]).collect();
    lambda_coords.push(m_n);
    let mut delta_coords: Vec<usize> = (0..n - 1).map(|i| eps[i] + rho_coords[i]).collect();
    delta_coords.push(0);
    // λ ∈ 𝒫^(1,1): no columns of odd height
    if lambda_coords
        .iter()
        .enumerate()
        .any(|(i, &c)| (i + 1) % 2 == 1 && c > 0)
    {
        return None;
    }
    // δ ∈ 𝒫^(2): all suffix sums (the parts) even
    let delta = partition_from_columns(&delta_coords);
    if !delta.is_in_family(ParityFamily::EvenRows) {
        return None;
    }
    let lambda = partition_from_columns(&lambda_coords);
    debug_assert!(lambda.is_in_family(ParityFamily::EvenColumns));
    Some(DistinguishedWitness {
        tableau: t.clone(),
        eps,
        phi,
        rho: partition_from_columns(&rho_coords),
        lambda,
        delta,
    })
}

/// All semistandard fillings of a skew shape with entries at most
/// `max_entry`.
fn all_skew_ssyt(shape: &SkewShape, max_entry: usize) -> Vec<Tableau> {
    let mut rows: Vec<Vec<usize>> = (0..shape.rows())
        .map(|i| vec![0; shape.row_span(i).len()])
        .collect();
    let mut out = Vec::new();
    fn rec(
        shape: &SkewShape,
        rows: &mut Vec<Vec<usize>>,
        i: usize,
        j: usize,
        max_entry: usize,
        out: &mut Vec<Tableau>,
    ) {
        if i == shape.rows() {
            out.push(Tableau::new(shape.clone(), rows.clone()).unwrap());
            return;
        }
        let span = shape.row_span(i);
        if j == span.len() {
            rec(shape, rows, i + 1, 0, max_entry, out);
            return;
        }
        let col = span.start + j;
        let lo_row = if j > 0 { rows[i][j - 1] } else { 1 };
        let lo_col = if i > 0 && shape.row_span(i - 1).contains(&col) {
            rows[i - 1][col - shape.row_span(i - 1).start] + 1
        } else {
            1
        };
        for x in lo_row.max(lo_col)..=max_entry {
            rows[i][j] = x;
            rec(shape, rows, i, j + 1, max_entry, out);
            rows[i][j] = 0;
        }
    }
    rec(shape, &mut rows, 0, 0, max_entry, &mut out);
    out
}

/// The distinguished subset of `SST_n(μ^π)`.
pub fn enumerate_distinguished(mu: &Partition, n: usize) -> Vec<DistinguishedWitness> {
    all_skew_ssyt(&SkewShape::rotated(mu), n)
        .iter()
        .filter_map(|t| is_distinguished(t, n))
        .collect()
}

/// Distinguished tableaux passing the D-type flag condition against the
/// context of `(μ, n)`.
pub fn enumerate_flagged_distinguished(mu: &Partition, n: usize) -> Vec<DistinguishedWitness> {
    let ctx = FlagContext::new(n, mu.clone(), Partition::empty())
        .expect("flag context needs only the companion side");
    enumerate_distinguished(mu, n)
        .into_iter()
        .filter(|w| is_flagged_d_companion(&w.tableau, &ctx))
        .collect()
}

/// The full indexing set for the zero-weight gradings: the flagged
/// distinguished tableaux of `μ`, joined with those of the partner `μ̄`
/// when the two differ.
pub fn enumerate_dd(mu: &Partition, n: usize) -> Result<Vec<DistinguishedWitness>, String> {
    let weight = OrthogonalWeight::new(mu.clone(), n)?;
    let mut out = enumerate_flagged_distinguished(mu, n);
    if weight.mu_bar != *mu {
        out.extend(enumerate_flagged_distinguished(&weight.mu_bar, n));
    }
    Ok(out)
}

fn exponent_sum(witnesses: &[DistinguishedWitness]) -> GradedPolynomial {
    let mut out = GradedPolynomial::zero();
    for w in witnesses {
        let size = w.lambda.size();
        debug_assert_eq!(size % 2, 0);
        out.add_term(size / 2, 1);
    }
    out
}

/// The raw multiset of half-sizes `|φ(T) + ρ_T| / 2` over the full
/// indexing set, as a polynomial. For even rank this is the sum *before*
/// the division by `1 + t^m`, useful when looking for degree-shifting
/// pairings inside the indexing set.
pub fn exponent_multiset(mu: &Partition, n: usize) -> Result<GradedPolynomial, String> {
    Ok(exponent_sum(&enumerate_dd(mu, n)?))
}

/// `K_{μ0}(t)` for the odd orthogonal algebra of rank `m`.
pub fn k_so_odd(mu: &Partition, m: usize) -> Result<GradedPolynomial, String> {
    if mu.len() > m {
        return Err(format!("mu {mu} needs at most {m} rows"));
    }
    let n = 2 * m + 1;
    Ok(exponent_sum(&enumerate_dd(mu, n)?))
}

/// `K_{μ0}(t)` for the even orthogonal algebra of rank `m`; the indexing
/// sum is divisible by `1 + t^m` and the division must be exact.
pub fn k_so_even(mu: &Partition, m: usize) -> Result<GradedPolynomial, String> {
    if mu.len() > m {
        return Err(format!("mu {mu} needs at most {m} rows"));
    }
    let n = 2 * m;
    let sum = exponent_sum(&enumerate_dd(mu, n)?);
    if sum.is_zero() {
        return Ok(sum);
    }
    let divisor = GradedPolynomial::monomial(0, 1) + GradedPolynomial::monomial(m, 1);
    sum.div_exact(&divisor)
        .ok_or_else(|| format!("sum {sum:?} not divisible by 1 + t^{m}"))
}

/// Truncated graded identity: the branching generating function
/// `Σ_λ ⟦V^λ : V^μ⟧ t^{|λ|/2}` over even-column `λ` equals the
/// distinguished sum divided by `∏ (1 - t^{2i})`, compared through
/// degree `degree`.
pub fn graded_identity_check(mu: &Partition, n: usize, degree: usize) -> Result<bool, String> {
    let m = n / 2;
    let mut lhs = GradedPolynomial::zero();
    for lambda in enumerate_family(ParityFamily::EvenColumns, 2 * degree, n) {
        let coeff = crate::branching::double_bracket(&lambda, mu, n)?;
        if coeff > 0 {
            lhs.add_term(lambda.size() / 2, coeff as i64);
        }
    }
    let mut rhs = exponent_sum(&enumerate_dd(mu, n)?).truncate(degree);
    for i in 1..=m {
        rhs = rhs.mul_truncated(&GradedPolynomial::geometric(2 * i, degree), degree);
    }
    Ok(lhs.truncate(degree) == rhs)
}
