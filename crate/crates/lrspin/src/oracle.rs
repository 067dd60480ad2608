//! Independent brute-force verifiers.
//!
//! Nothing here depends on the pruned searches in [`crate::lr`],
//! [`crate::flags`] or [`crate::separation`], so agreement between the two
//! sides is evidence rather than tautology.

use crate::partition::Partition;
use crate::tableau::{is_lattice_word, word_insert, Tableau};
use std::collections::HashMap;

/// Littlewood-Richardson coefficient `c^λ_{μν}` by exhaustive filtering:
/// every semistandard filling of `λ/μ` is generated and kept iff its
/// content is `ν` and its reading word is a lattice word.
pub fn lr_brute(lambda: &Partition, mu: &Partition, nu: &Partition) -> usize {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) {
        return 0;
    }
    let max_entry = nu.len();
    let mut count = 0;
    let mut rows: Vec<Vec<usize>> = (0..lambda.len())
        .map(|i| vec![0; lambda.part(i) - mu.part(i)])
        .collect();
    let mut content = vec![0usize; max_entry];
    fill(
        lambda,
        mu,
        nu,
        max_entry,
        0,
        0,
        &mut rows,
        &mut content,
        &mut |rows| {
            let shape = crate::tableau::SkewShape::new(lambda.clone(), mu.clone());
            let t = Tableau::new(shape, rows.to_vec()).expect("filling is semistandard");
            if is_lattice_word(&t.reading_word()) {
                count += 1;
            }
        },
    );
    count
}

#[allow(clippy::too_many_arguments)]
fn fill(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    max_entry: usize,
    i: usize,
    j: usize,
    rows: &mut Vec<Vec<usize>>,
    content: &mut Vec<usize>,
    emit: &mut impl FnMut(&[Vec<usize>]),
) {
    if i == lambda.len() {
        if (0..max_entry).all(|e| content[e] == nu.part(e)) {
            emit(rows);
        }
        return;
    }
    if j == rows[i].len() {
        fill(lambda, mu, nu, max_entry, i + 1, 0, rows, content, emit);
        return;
    }
    let col = mu.part(i) + j;
    let lo_row = if j > 0 { rows[i][j - 1] } else { 1 };
    let lo_col = if i > 0 && col >= mu.part(i - 1) && col < lambda.part(i - 1) {
        rows[i - 1][col - mu.part(i - 1)] + 1
    } else {
        1
    };
    for x in lo_row.max(lo_col)..=max_entry {
        if content[x - 1] == nu.part(x - 1) {
            continue;
        }
        rows[i][j] = x;
        content[x - 1] += 1;
        fill(lambda, mu, nu, max_entry, i, j + 1, rows, content, emit);
        content[x - 1] -= 1;
        rows[i][j] = 0;
    }
}

/// Insertion normal form of a word: all Knuth-equivalent words share it.
pub fn knuth_normal_form(word: &[usize]) -> Tableau {
    word_insert(word, &Tableau::empty())
}

/// Root system data for the Freudenthal and Weyl oracles.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootSystem {
    B,
    D,
}

impl RootSystem {
    /// Positive roots in ε-coordinates: `m^2` for B, `m(m-1)` for D.
    pub fn positive_roots(self, m: usize) -> Vec<Vec<i64>> {
        let mut roots = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let mut minus = vec![0i64; m];
                minus[i] = 1;
                minus[j] = -1;
                roots.push(minus);
                let mut plus = vec![0i64; m];
                plus[i] = 1;
                plus[j] = 1;
                roots.push(plus);
            }
        }
        if self == RootSystem::B {
            for k in 0..m {
                let mut short = vec![0i64; m];
                short[k] = 1;
                roots.push(short);
            }
        }
        roots
    }

    /// Doubled half-sum of positive roots `2ρ`, kept doubled so that type
    /// B stays integral.
    fn two_rho(self, m: usize) -> Vec<i64> {
        match self {
            RootSystem::B => (0..m).map(|i| 2 * (m - i) as i64 - 1).collect(),
            RootSystem::D => (0..m).map(|i| 2 * (m - 1 - i) as i64).collect(),
        }
    }

    /// Dominant representative of a weight under the Weyl group.
    fn dominant_rep(self, w: &[i64]) -> Vec<i64> {
        let mut abs: Vec<i64> = w.iter().map(|x| x.abs()).collect();
        abs.sort_unstable_by(|a, b| b.cmp(a));
        if self == RootSystem::D {
            let negatives = w.iter().filter(|&&x| x < 0).count();
            let has_zero = abs.last() == Some(&0);
            if negatives % 2 == 1 && !has_zero {
                let last = abs.len() - 1;
                abs[last] = -abs[last];
            }
        }
        abs
    }

    /// Writes `v` in the simple-root basis; `None` if not a nonnegative
    /// integer combination.
    fn positive_root_coords(self, v: &[i64]) -> Option<Vec<i64>> {
        let m = v.len();
        let sums: Vec<i64> = v
            .iter()
            .scan(0i64, |acc, x| {
                *acc += x;
                Some(*acc)
            })
            .collect();
        let coords = match self {
            RootSystem::B => sums,
            RootSystem::D => {
                if sums[m - 1] % 2 != 0 {
                    return None;
                }
                let cm = sums[m - 1] / 2;
                let mut coords = sums;
                coords[m - 1] = cm;
                if m >= 2 {
                    coords[m - 2] = cm - v[m - 1];
                }
                coords
            }
        };
        if coords.iter().all(|&c| c >= 0) {
            Some(coords)
        } else {
            None
        }
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// All weight multiplicities of the irreducible module with highest
/// weight `mu`, computed by Freudenthal's recursion; keys are dominant
/// weights in ε-coordinates.
pub fn freudenthal_multiplicities(
    system: RootSystem,
    m: usize,
    mu: &Partition,
) -> HashMap<Vec<i64>, u64> {
    assert!(mu.len() <= m, "highest weight needs at most {m} rows");
    let top: Vec<i64> = (0..m).map(|i| mu.part(i) as i64).collect();
    let roots = system.positive_roots(m);
    let two_rho = system.two_rho(m);

    // dominant weights below mu, grouped by the height of mu - lambda
    let mut by_height: Vec<Vec<Vec<i64>>> = Vec::new();
    let bound = mu.part(0) as i64;
    let mut candidates = Vec::new();
    dominant_box(m, bound, system, &mut vec![0; m], 0, &mut candidates);
    for lambda in candidates {
        let diff: Vec<i64> = top.iter().zip(&lambda).map(|(a, b)| a - b).collect();
        if let Some(coords) = system.positive_root_coords(&diff) {
            let height = coords.iter().sum::<i64>() as usize;
            if by_height.len() <= height {
                by_height.resize(height + 1, Vec::new());
            }
            by_height[height].push(lambda);
        }
    }

    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    mult.insert(top.clone(), 1);
    let doubled = |v: &[i64]| -> Vec<i64> { v.iter().map(|x| 2 * x).collect() };
    let top2_rho: Vec<i64> = doubled(&top)
        .iter()
        .zip(&two_rho)
        .map(|(a, b)| a + b)
        .collect();
    let norm_top = dot(&top2_rho, &top2_rho);

    for level in by_height.iter().skip(1) {
        for lambda in level {
            let lam2_rho: Vec<i64> = doubled(lambda)
                .iter()
                .zip(&two_rho)
                .map(|(a, b)| a + b)
                .collect();
            let denom = norm_top - dot(&lam2_rho, &lam2_rho);
            let mut rhs: i64 = 0;
            for alpha in &roots {
                let mut k = 1i64;
                loop {
                    let shifted: Vec<i64> = lambda
                        .iter()
                        .zip(alpha)
                        .map(|(x, a)| x + k * a)
                        .collect();
                    let rep = system.dominant_rep(&shifted);
                    let Some(&m_up) = mult.get(&rep) else { break };
                    // doubled norms above pick up a factor 4, matched by
                    // 4<lambda + k alpha, alpha> here
                    rhs += m_up as i64 * 4 * dot(&shifted, alpha);
                    k += 1;
                }
            }
            if rhs > 0 {
                assert!(denom > 0, "norm must drop strictly below the top weight");
                assert_eq!((2 * rhs) % denom, 0, "Freudenthal division must be exact");
                mult.insert(lambda.clone(), (2 * rhs / denom) as u64);
            }
        }
    }
    mult
}

fn dominant_box(
    m: usize,
    bound: i64,
    system: RootSystem,
    cur: &mut Vec<i64>,
    idx: usize,
    out: &mut Vec<Vec<i64>>,
) {
    if idx == m {
        out.push(cur.clone());
        return;
    }
    let hi = if idx == 0 { bound } else { cur[idx - 1] };
    let lo = if system == RootSystem::D && idx == m - 1 {
        -hi
    } else {
        0
    };
    for v in lo..=hi {
        cur[idx] = v;
        dominant_box(m, bound, system, cur, idx + 1, out);
    }
    cur[idx] = 0;
}

/// Multiplicity of the zero weight in the irreducible `so_{2m+1}` (B) or
/// `so_{2m}` (D) module with highest weight `mu`.
pub fn zero_weight_dim(system: RootSystem, m: usize, mu: &Partition) -> u64 {
    if mu.is_empty() {
        return 1;
    }
    freudenthal_multiplicities(system, m, mu)
        .get(&vec![0i64; m])
        .copied()
        .unwrap_or(0)
}

/// Size of the Weyl orbit of a weight: distinct coordinate arrangements
/// times the admissible sign patterns (all of them for B; an even number
/// of minus signs for D, which halves the count only when no coordinate
/// vanishes).
fn orbit_size(system: RootSystem, w: &[i64]) -> u64 {
    let m = w.len();
    let mut abs: Vec<i64> = w.iter().map(|x| x.abs()).collect();
    abs.sort_unstable();
    let mut arrangements = 1u64;
    let mut remaining = m;
    let mut i = 0;
    while i < abs.len() {
        let mut j = i;
        while j < abs.len() && abs[j] == abs[i] {
            j += 1;
        }
        arrangements *= binomial(remaining, j - i);
        remaining -= j - i;
        i = j;
    }
    let nonzero = abs.iter().filter(|&&x| x != 0).count();
    let signs = match system {
        RootSystem::B => 1u64 << nonzero,
        RootSystem::D => {
            if nonzero == m {
                1u64 << (m - 1)
            } else {
                1u64 << nonzero
            }
        }
    };
    arrangements * signs
}

fn binomial(n: usize, k: usize) -> u64 {
    let mut r = 1u64;
    for i in 0..k {
        r = r * (n - i) as u64 / (i + 1) as u64;
    }
    r
}

/// Dimension of the irreducible `so_n` module with highest weight `mu`,
/// summed from the Freudenthal weight multiplicities and orbit sizes.
pub fn so_dimension(system: RootSystem, m: usize, mu: &Partition) -> u64 {
    freudenthal_multiplicities(system, m, mu)
        .iter()
        .map(|(w, mult)| mult * orbit_size(system, w))
        .sum()
}

/// Dimension of the irreducible `GL_n` module with highest weight `λ`:
/// the number of semistandard tableaux with entries at most `n`, by the
/// hook-content product.
pub fn gl_dimension(lambda: &Partition, n: usize) -> u64 {
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    let conj = lambda.conjugate();
    for i in 0..lambda.len() {
        for j in 0..lambda.part(i) {
            let content = n as i64 + j as i64 - i as i64;
            assert!(content > 0, "lambda must have at most n rows");
            let hook = (lambda.part(i) - j) + (conj.part(j) - i) - 1;
            num *= content as u128;
            den *= hook as u128;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    assert_eq!(den, 1, "hook-content product is an integer");
    num as u64
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Dimension of the irreducible `O_n` module labelled by `mu`, with
/// `mu'_1 + mu'_2 <= n`: the associated `so_n` module, doubled when the
/// label is its own partner (even `n` with `mu'_1 = n/2`).
pub fn orthogonal_dimension(mu: &Partition, n: usize) -> u64 {
    let m = n / 2;
    let muc = mu.conjugate();
    assert!(muc.part(0) + muc.part(1) <= n);
    // reduce the label to the partner with a short first column
    let reduced = if muc.part(0) > n - muc.part(0) {
        let mut bar = muc.parts().to_vec();
        bar[0] = n - muc.part(0);
        Partition::from_unsorted(bar).conjugate()
    } else {
        mu.clone()
    };
    if n % 2 == 1 {
        so_dimension(RootSystem::B, m, &reduced)
    } else if reduced.conjugate().part(0) == m {
        2 * so_dimension(RootSystem::D, m, &reduced)
    } else {
        so_dimension(RootSystem::D, m, &reduced)
    }
}

/// Weight multiplicity by the Weyl character formula with an explicit
/// Kostant partition function; exponential in the rank, used only as a
/// meta-check for the Freudenthal oracle at rank <= 2.
pub fn weyl_multiplicity(system: RootSystem, m: usize, mu: &Partition, weight: &[i64]) -> i64 {
    assert!(m <= 2, "Weyl alternating sum only wired for rank <= 2");
    let roots = system.positive_roots(m);
    let two_rho = system.two_rho(m);
    let top: Vec<i64> = (0..m).map(|i| 2 * mu.part(i) as i64).collect();
    let mut total = 0i64;
    for (w, sign) in weyl_elements(system, m) {
        // w(mu + rho) - (lambda + rho), in doubled coordinates
        let mut arg = vec![0i64; m];
        for i in 0..m {
            let (src, s) = w[i];
            arg[i] = s * (top[src] + two_rho[src]) - (2 * weight[i] + two_rho[i]);
        }
        if arg.iter().any(|x| x % 2 != 0) {
            continue;
        }
        let v: Vec<i64> = arg.iter().map(|x| x / 2).collect();
        total += sign * kostant(&v, &roots, 0) as i64;
    }
    total
}

type SignedPermutation = Vec<(usize, i64)>;

fn weyl_elements(system: RootSystem, m: usize) -> Vec<(SignedPermutation, i64)> {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    permute(&mut (0..m).collect::<Vec<_>>(), 0, &mut perms);
    let mut out = Vec::new();
    for p in perms {
        let inv = inversions(&p);
        for mask in 0..(1u32 << m) {
            let negs = mask.count_ones() as usize;
            if system == RootSystem::D && negs % 2 == 1 {
                continue;
            }
            let w: SignedPermutation = (0..m)
                .map(|i| (p[i], if mask & (1 << i) != 0 { -1 } else { 1 }))
                .collect();
            let sign = if (inv + negs).is_multiple_of(2) { 1 } else { -1 };
            out.push((w, sign));
        }
    }
    out
}

fn permute(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, out);
        v.swap(k, i);
    }
}

fn inversions(p: &[usize]) -> usize {
    let mut n = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                n += 1;
            }
        }
    }
    n
}

/// Number of ways to write `v` as a nonnegative integer combination of
/// the listed positive roots.
///
/// Every positive root of B/D has all prefix sums of its ε-coordinates
/// nonnegative, so a decomposable vector must too; that prunes and also
/// bounds the multiplicity loop (each subtraction strictly lowers some
/// prefix sum).
fn kostant(v: &[i64], roots: &[Vec<i64>], from: usize) -> u64 {
    let feasible = |w: &[i64]| {
        let mut acc = 0i64;
        w.iter().all(|x| {
            acc += x;
            acc >= 0
        })
    };
    if !feasible(v) {
        return 0;
    }
    if from == roots.len() {
        return v.iter().all(|&x| x == 0) as u64;
    }
    let mut total = kostant(v, roots, from + 1);
    let alpha = &roots[from];
    let mut shifted: Vec<i64> = v.to_vec();
    loop {
        for (s, a) in shifted.iter_mut().zip(alpha) {
            *s -= a;
        }
        if !feasible(&shifted) {
            break;
        }
        total += kostant(&shifted, roots, from + 1);
    }
    total
}
