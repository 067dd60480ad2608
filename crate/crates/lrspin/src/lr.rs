//! Littlewood-Richardson tableaux in lattice and anti-lattice form,
//! companion tableaux, recording tableaux, and the conjugation bijection
//! `psi` matching recording tableaux.

use crate::partition::Partition;
use crate::tableau::{
    highest_tableau, is_anti_lattice_word, is_lattice_word, word_insert, SkewShape, Tableau,
};

/// Which word condition the skew filling satisfies.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LrKind {
    /// Every prefix of the reading word has `#i >= #(i+1)`; content `ν`,
    /// companion of shape `ν`.
    Lattice,
    /// Every suffix has `#i >= #(i-1)`; content reversed, companion of
    /// shape `ν^π`.
    AntiLattice,
}

/// A witness for one unit of an LR coefficient: the skew filling together
/// with its companion tableau. The two determine each other.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LrWitness {
    pub kind: LrKind,
    pub filling: Tableau,
    pub companion: Tableau,
}

/// Reading direction used when rebuilding a recording tableau.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orientation {
    /// Insert the companion's columns from the right; strips are recorded
    /// in the conjugate shapes.
    Columns,
    /// Insert the companion's rows from the top; strips are recorded
    /// directly.
    Rows,
}

/// The expected content vector of a skew filling: `ν` itself for lattice
/// witnesses, the reversed parts for anti-lattice ones.
fn target_content(nu: &Partition, kind: LrKind) -> Vec<usize> {
    match kind {
        LrKind::Lattice => nu.parts().to_vec(),
        LrKind::AntiLattice => nu.parts().iter().rev().copied().collect(),
    }
}

/// All LR witnesses for `(λ, μ, ν)` of the given kind, sorted by the
/// row-major entries of the companion. The count is `c^λ_{μν}`.
pub fn enumerate_lr(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    kind: LrKind,
) -> Vec<LrWitness> {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) {
        return Vec::new();
    }
    let content = target_content(nu, kind);
    let fillings = enumerate_fillings(lambda, mu, &content, kind);
    let mut witnesses: Vec<LrWitness> = fillings
        .into_iter()
        .map(|filling| {
            let companion = companion_of(&filling, nu, kind);
            debug_assert_eq!(
                word_insert(&companion.reading_word(), &highest_tableau(mu, false)),
                highest_tableau(lambda, false),
                "companion insertion identity"
            );
            LrWitness {
                kind,
                filling,
                companion,
            }
        })
        .collect();
    witnesses.sort_by(|a, b| a.companion.rows().cmp(b.companion.rows()));
    witnesses
}

pub fn lr_count(lambda: &Partition, mu: &Partition, nu: &Partition, kind: LrKind) -> usize {
    enumerate_lr(lambda, mu, nu, kind).len()
}

/// Backtracking over skew fillings. Lattice fillings are built in reading
/// order and pruned on the prefix condition; anti-lattice ones in reverse
/// reading order and pruned on the suffix condition.
fn enumerate_fillings(
    lambda: &Partition,
    mu: &Partition,
    content: &[usize],
    kind: LrKind,
) -> Vec<Tableau> {
    let shape = SkewShape::new(lambda.clone(), mu.clone());
    let max_entry = content.len();
    // cells in the order they are assigned
    let mut order: Vec<(usize, usize)> = Vec::new();
    let width = lambda.part(0);
    match kind {
        LrKind::Lattice => {
            for j in (0..width).rev() {
                for i in 0..shape.rows() {
                    if shape.row_span(i).contains(&j) {
                        order.push((i, j));
                    }
                }
            }
        }
        LrKind::AntiLattice => {
            for j in 0..width {
                for i in (0..shape.rows()).rev() {
                    if shape.row_span(i).contains(&j) {
                        order.push((i, j));
                    }
                }
            }
        }
    }

    let mut grid: Vec<Vec<usize>> = (0..shape.rows())
        .map(|i| vec![0; shape.row_span(i).len()])
        .collect();
    let mut counts = vec![0usize; max_entry];
    let mut out = Vec::new();

    fn entry_at(grid: &[Vec<usize>], shape: &SkewShape, i: usize, j: usize) -> Option<usize> {
        let span = shape.row_span(i);
        if i < grid.len() && span.contains(&j) {
            let v = grid[i][j - span.start];
            (v != 0).then_some(v)
        } else {
            None
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        shape: &SkewShape,
        order: &[(usize, usize)],
        pos: usize,
        kind: LrKind,
        content: &[usize],
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
        out: &mut Vec<Tableau>,
    ) {
        if pos == order.len() {
            let t = Tableau::new(shape.clone(), grid.clone()).expect("filling is semistandard");
            out.push(t);
            return;
        }
        let (i, j) = order[pos];
        // row and column neighbours already assigned under either order
        let left = if j > 0 { entry_at(grid, shape, i, j - 1) } else { None };
        let right = entry_at(grid, shape, i, j + 1);
        let above = if i > 0 { entry_at(grid, shape, i - 1, j) } else { None };
        let below = entry_at(grid, shape, i + 1, j);
        let lo = left.unwrap_or(1).max(above.map_or(1, |a| a + 1));
        let hi = right
            .unwrap_or(content.len())
            .min(below.map_or(content.len(), |b| b - 1));
        for x in lo..=hi {
            if counts[x - 1] == content[x - 1] {
                continue;
            }
            let ok = match kind {
                // prefix condition: one more x must not outnumber x-1
                LrKind::Lattice => x == 1 || counts[x - 1] < counts[x - 2],
                // suffix condition: one more x must not outnumber x+1
                LrKind::AntiLattice => x == content.len() || counts[x - 1] < counts[x],
            };
            if !ok {
                continue;
            }
            counts[x - 1] += 1;
            grid[i][j - shape.row_span(i).start] = x;
            rec(shape, order, pos + 1, kind, content, grid, counts, out);
            grid[i][j - shape.row_span(i).start] = 0;
            counts[x - 1] -= 1;
        }
    }
    rec(
        &shape, &order, 0, kind, content, &mut grid, &mut counts, &mut out,
    );
    debug_assert!(out.iter().all(|t| match kind {
        LrKind::Lattice => is_lattice_word(&t.reading_word()),
        LrKind::AntiLattice => is_anti_lattice_word(&t.reading_word(), max_entry),
    }));
    out
}

/// The companion of a skew filling: an entry `i` in row `j` of the filling
/// becomes an entry `j` in row `i` of the companion (shape `ν` or `ν^π`).
pub fn companion_of(filling: &Tableau, nu: &Partition, kind: LrKind) -> Tableau {
    let content = filling.content();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); content.len()];
    for (i, row) in filling.rows().iter().enumerate() {
        for &x in row {
            rows[x - 1].push(i + 1);
        }
    }
    for row in &mut rows {
        row.sort_unstable();
    }
    let shape = match kind {
        LrKind::Lattice => SkewShape::straight(nu.clone()),
        LrKind::AntiLattice => SkewShape::rotated(nu),
    };
    Tableau::new(shape, rows).expect("companion of an LR filling is semistandard")
}

/// Rebuilds the skew filling of `λ/μ` from a companion tableau.
pub fn filling_of(
    companion: &Tableau,
    lambda: &Partition,
    mu: &Partition,
) -> Result<Tableau, String> {
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); lambda.len()];
    for (i, row) in companion.rows().iter().enumerate() {
        for &j in row {
            if j == 0 || j > lambda.len() {
                return Err(format!("companion entry {j} outside the shape"));
            }
            rows[j - 1].push(i + 1);
        }
    }
    for row in &mut rows {
        row.sort_unstable();
    }
    Tableau::new(SkewShape::new(lambda.clone(), mu.clone()), rows)
}

/// The recording tableau of the insertion of a companion into `H_base`.
///
/// `Columns` inserts the companion's columns from the right and records
/// each new conjugate strip; `Rows` inserts the rows from the top and
/// records the strips directly. Errors if some strip is not horizontal.
pub fn recording(
    companion: &Tableau,
    base: &Partition,
    orientation: Orientation,
) -> Result<Tableau, String> {
    let mut current = highest_tableau(base, false);
    let mut strips: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
    let pieces: Vec<Vec<usize>> = match orientation {
        Orientation::Columns => {
            let width = companion.outer().part(0);
            (0..width).rev().map(|j| companion.column(j)).collect()
        }
        Orientation::Rows => companion
            .rows()
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect(),
    };
    let shape_of = |t: &Tableau, orientation: Orientation| -> Partition {
        match orientation {
            Orientation::Columns => t.outer().conjugate(),
            Orientation::Rows => t.outer().clone(),
        }
    };
    for (label, word) in pieces.iter().enumerate() {
        let before = shape_of(&current, orientation);
        current = word_insert(word, &current);
        let after = shape_of(&current, orientation);
        let mut cells = Vec::new();
        for i in 0..after.len() {
            for j in before.part(i)..after.part(i) {
                cells.push((i, j));
            }
        }
        let mut cols: Vec<usize> = cells.iter().map(|&(_, j)| j).collect();
        cols.sort_unstable();
        cols.dedup();
        if cols.len() != cells.len() {
            return Err(format!("strip {} is not horizontal", label + 1));
        }
        strips.push((label + 1, cells));
    }
    let outer = shape_of(&current, orientation);
    let inner = match orientation {
        Orientation::Columns => base.conjugate(),
        Orientation::Rows => base.clone(),
    };
    let shape = SkewShape::new(outer, inner.clone());
    let mut rows: Vec<Vec<usize>> = (0..shape.rows())
        .map(|i| vec![0; shape.row_span(i).len()])
        .collect();
    for (label, cells) in strips {
        for (i, j) in cells {
            rows[i][j - inner.part(i)] = label;
        }
    }
    Tableau::new(shape, rows)
}

/// The conjugation bijection: given the companion `S` of a lattice witness
/// over `(λ', μ', ν')`, returns the unique companion `U` over
/// `(λ, μ, ν^π)` whose row recording equals the column recording of `S`.
///
/// Errors if no or several candidates match (either indicates the input
/// was not a genuine witness).
pub fn psi(
    s: &Tableau,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<Tableau, String> {
    let target = recording(s, &mu.conjugate(), Orientation::Columns)?;
    let solutions = match_recording(&target, lambda, mu, nu, Orientation::Rows)?;
    single(solutions, "psi")
}

/// Inverse of [`psi`]: from the anti-lattice companion `U` over
/// `(λ, μ, ν^π)` back to the lattice companion over `(λ', μ', ν')`.
pub fn psi_inverse(
    u: &Tableau,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<Tableau, String> {
    let target = recording(u, mu, Orientation::Rows)?;
    let solutions = match_recording(&target, lambda, mu, nu, Orientation::Columns)?;
    single(solutions, "psi_inverse")
}

fn single(mut v: Vec<Tableau>, what: &str) -> Result<Tableau, String> {
    match v.len() {
        1 => Ok(v.pop().unwrap()),
        0 => Err(format!("{what}: no companion matches the recording tableau")),
        n => Err(format!("{what}: {n} companions match; uniqueness violated")),
    }
}

/// All companions on the `orientation` side whose recording tableau equals
/// `target`. `Rows` searches `U ∈ SST(ν^π)` against `H_μ`; `Columns`
/// searches `S ∈ SST(ν')` against `H_{μ'}`.
fn match_recording(
    target: &Tableau,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    orientation: Orientation,
) -> Result<Vec<Tableau>, String> {
    // the recording always lives in λ/μ; the insertion states live in the
    // conjugate world on the Columns side
    let (base, final_shape) = match orientation {
        Orientation::Rows => (mu.clone(), lambda.clone()),
        Orientation::Columns => (mu.conjugate(), lambda.conjugate()),
    };
    // both the rows of U ∈ SST(ν^π) and the columns of S ∈ SST(ν') are
    // ℓ(ν) many
    let piece_count = nu.len();
    let mut shapes = vec![mu.clone()];
    for label in 1..=piece_count {
        let prev = shapes.last().unwrap();
        let mut next: Vec<usize> = prev.parts().to_vec();
        for i in 0..target.outer().len() {
            for j in target.shape().row_span(i) {
                if target.entry(i, j) == Some(label) {
                    if next.len() <= i {
                        next.resize(i + 1, 0);
                    }
                    next[i] += 1;
                    if next[i] != j + 1 {
                        return Err(format!("strip {label} does not extend the shape"));
                    }
                }
            }
        }
        shapes.push(Partition::new(next));
    }
    if shapes.last() != Some(lambda) {
        return Err("recording tableau does not fill the target shape".into());
    }
    if orientation == Orientation::Columns {
        for s in &mut shapes {
            *s = s.conjugate();
        }
    }

    // DFS over the pieces (rows of U or columns of S), matching shapes
    let max_entry = final_shape.len();
    let mut out = Vec::new();
    let mut pieces: Vec<Vec<usize>> = Vec::new();
    dfs_pieces(
        &shapes,
        &mut highest_tableau(&base, false).clone(),
        1,
        max_entry,
        nu,
        orientation,
        &mut pieces,
        &mut out,
    );
    let final_h = highest_tableau(&final_shape, false);
    let mut results = Vec::new();
    for cand in out {
        // assemble the companion and re-check the defining identity
        let companion = assemble(&cand, nu, orientation)?;
        let inserted = word_insert(&companion.reading_word(), &highest_tableau(&base, false));
        if inserted == final_h {
            results.push(companion);
        }
    }
    results.dedup();
    Ok(results)
}

#[allow(clippy::too_many_arguments)]
fn dfs_pieces(
    shapes: &[Partition],
    current: &mut Tableau,
    step: usize,
    max_entry: usize,
    nu: &Partition,
    orientation: Orientation,
    pieces: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if step == shapes.len() {
        out.push(pieces.clone());
        return;
    }
    let want = shapes[step].size() - shapes[step - 1].size();
    // candidate pieces: weakly increasing rows or strictly increasing
    // columns whose insertion realises the target shape
    let mut cand = Vec::new();
    let mut buf = Vec::new();
    gen_pieces(want, 1, max_entry, orientation, &mut buf, &mut cand);
    for piece in cand {
        if !piece_fits(pieces, &piece, nu, orientation) {
            continue;
        }
        let word: Vec<usize> = match orientation {
            Orientation::Rows => piece.iter().rev().copied().collect(),
            Orientation::Columns => piece.clone(),
        };
        // `shapes` already holds the insertion-state shapes for either
        // orientation
        let next = word_insert(&word, current);
        if next.outer() != &shapes[step] {
            continue;
        }
        pieces.push(piece);
        let mut saved = std::mem::replace(current, next);
        dfs_pieces(shapes, current, step + 1, max_entry, nu, orientation, pieces, out);
        std::mem::swap(current, &mut saved);
        pieces.pop();
    }
}

fn gen_pieces(
    len: usize,
    lo: usize,
    hi: usize,
    orientation: Orientation,
    buf: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if buf.len() == len {
        out.push(buf.clone());
        return;
    }
    for x in lo..=hi {
        buf.push(x);
        let next_lo = match orientation {
            Orientation::Rows => x,
            Orientation::Columns => x + 1,
        };
        gen_pieces(len, next_lo, hi, orientation, buf, out);
        buf.pop();
    }
}

/// Semistandardness of the partially assembled companion.
fn piece_fits(
    earlier: &[Vec<usize>],
    piece: &[usize],
    nu: &Partition,
    orientation: Orientation,
) -> bool {
    match orientation {
        Orientation::Rows => {
            // rows of SST(ν^π) are right-justified
            let Some(prev) = earlier.last() else { return true };
            let w = nu.part(0);
            let off_prev = w - prev.len();
            let off_this = w - piece.len();
            for (k, &x) in piece.iter().enumerate() {
                let col = off_this + k;
                if col >= off_prev {
                    let above = prev[col - off_prev];
                    if above >= x {
                        return false;
                    }
                }
            }
            true
        }
        Orientation::Columns => {
            // columns of SST(ν') are enumerated right to left and are
            // bottom... top-aligned; a later column sits to the LEFT, so
            // its entries must be <= its right neighbour's
            let Some(prev) = earlier.last() else { return true };
            piece.len() >= prev.len()
                && prev.iter().enumerate().all(|(k, &r)| piece[k] <= r)
        }
    }
}

fn assemble(
    pieces: &[Vec<usize>],
    nu: &Partition,
    orientation: Orientation,
) -> Result<Tableau, String> {
    match orientation {
        Orientation::Rows => {
            Tableau::new(SkewShape::rotated(nu), pieces.to_vec())
        }
        Orientation::Columns => {
            // pieces are columns right to left
            let cols: Vec<Vec<usize>> = pieces.iter().rev().cloned().collect();
            Tableau::from_columns(&cols)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::lr_brute;
    use crate::partition::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn enumerate_small() {
        let w = enumerate_lr(&p(&[2, 1]), &p(&[1]), &p(&[1, 1]), LrKind::Lattice);
        assert_eq!(w.len(), 1);
        let w = enumerate_lr(&p(&[3, 2]), &p(&[3, 2]), &p(&[]), LrKind::Lattice);
        assert_eq!(w.len(), 1);
        assert!(w[0].filling.cell_count() == 0);
        // weight mismatch is empty, not an error
        assert!(enumerate_lr(&p(&[3]), &p(&[1]), &p(&[1]), LrKind::Lattice).is_empty());
    }

    #[test]
    fn golden_companion_example() {
        // λ=(7,6,4,3,2), μ=(6,4,2,2), ν=(2,2,2,1,1): both kinds contain
        // the published pair (S, U)
        let lambda = p(&[7, 6, 4, 3, 2]);
        let mu = p(&[6, 4, 2, 2]);
        let nu = p(&[2, 2, 2, 1, 1]);
        let lattice = enumerate_lr(
            &lambda.conjugate(),
            &mu.conjugate(),
            &nu.conjugate(),
            LrKind::Lattice,
        );
        let s = Tableau::from_rows(vec![vec![1, 3, 3, 5, 7], vec![2, 4, 6]]).unwrap();
        assert!(lattice.iter().any(|w| w.companion == s));
        let anti = enumerate_lr(&lambda, &mu, &nu, LrKind::AntiLattice);
        let u = Tableau::new(
            SkewShape::rotated(&nu),
            vec![vec![1], vec![2], vec![2, 3], vec![3, 4], vec![5, 5]],
        )
        .unwrap();
        assert!(anti.iter().any(|w| w.companion == u));
    }

    #[test]
    fn counts_match_brute_force() {
        for lambda in enumerate_partitions(8, 4) {
            for mu in enumerate_partitions(lambda.size(), 4) {
                if !lambda.contains(&mu) {
                    continue;
                }
                for nu in enumerate_partitions(lambda.size() - mu.size(), 4) {
                    if nu.size() + mu.size() != lambda.size() {
                        continue;
                    }
                    let here = lr_count(&lambda, &mu, &nu, LrKind::Lattice);
                    let brute = lr_brute(&lambda, &mu, &nu);
                    assert_eq!(here, brute, "lattice count at {lambda} {mu} {nu}");
                }
            }
        }
    }

    #[test]
    fn psi_is_a_bijection_numerically() {
        // |LR^{λ'}_{μ'ν'}| = |LR^λ_{μν^π}| and classical symmetries
        for lambda in enumerate_partitions(8, 4) {
            for mu in enumerate_partitions(lambda.size(), 4) {
                if !lambda.contains(&mu) {
                    continue;
                }
                for nu in enumerate_partitions(lambda.size() - mu.size(), 4) {
                    if nu.size() + mu.size() != lambda.size() {
                        continue;
                    }
                    let lat = lr_count(
                        &lambda.conjugate(),
                        &mu.conjugate(),
                        &nu.conjugate(),
                        LrKind::Lattice,
                    );
                    let anti = lr_count(&lambda, &mu, &nu, LrKind::AntiLattice);
                    assert_eq!(lat, anti, "at {lambda} {mu} {nu}");
                    let plain = lr_count(&lambda, &mu, &nu, LrKind::Lattice);
                    assert_eq!(plain, lr_count(&lambda, &nu, &mu, LrKind::Lattice));
                    assert_eq!(plain, lat, "conjugation symmetry at {lambda} {mu} {nu}");
                }
            }
        }
    }

    #[test]
    fn recording_golden() {
        // Q(S → H_{μ'}) for the companion example equals the skew filling
        // of ψ(S), strips labelled 1..5
        let mu = p(&[6, 4, 2, 2]);
        let s = Tableau::from_rows(vec![vec![1, 3, 3, 5, 7], vec![2, 4, 6]]).unwrap();
        let q = recording(&s, &mu.conjugate(), Orientation::Columns).unwrap();
        let expected = Tableau::new(
            SkewShape::new(p(&[7, 6, 4, 3, 2]), mu.clone()),
            vec![vec![1], vec![2, 3], vec![3, 4], vec![4], vec![5, 5]],
        )
        .unwrap();
        assert_eq!(q, expected);
        // the row recording of the matched companion agrees
        let u = Tableau::new(
            SkewShape::rotated(&p(&[2, 2, 2, 1, 1])),
            vec![vec![1], vec![2], vec![2, 3], vec![3, 4], vec![5, 5]],
        )
        .unwrap();
        assert_eq!(recording(&u, &mu, Orientation::Rows).unwrap(), expected);
        // the row recording of an anti-lattice companion is its own skew
        // filling
        assert_eq!(filling_of(&u, &p(&[7, 6, 4, 3, 2]), &mu).unwrap(), expected);
        // empty recording
        assert_eq!(
            recording(&Tableau::empty(), &p(&[2, 1]), Orientation::Rows).unwrap(),
            Tableau::new(
                SkewShape::new(p(&[2, 1]), p(&[2, 1])),
                vec![vec![], vec![]]
            )
            .unwrap()
        );
    }

    #[test]
    fn psi_golden_examples() {
        // Example with λ=(7,6,4,3,2): ψ(S) has columns (2,3,5),(1,2,3,4,5)
        let lambda = p(&[7, 6, 4, 3, 2]);
        let mu = p(&[6, 4, 2, 2]);
        let nu = p(&[2, 2, 2, 1, 1]);
        let s = Tableau::from_rows(vec![vec![1, 3, 3, 5, 7], vec![2, 4, 6]]).unwrap();
        let u = psi(&s, &lambda, &mu, &nu).unwrap();
        let expected = Tableau::new(
            SkewShape::rotated(&nu),
            vec![vec![1], vec![2], vec![2, 3], vec![3, 4], vec![5, 5]],
        )
        .unwrap();
        assert_eq!(u, expected);
        assert_eq!(psi_inverse(&u, &lambda, &mu, &nu).unwrap(), s);

        // Example with λ=(5,4,4,3,2,2), δ=(4,2,2,2,2): ψ(S) has columns
        // (2,3,6),(1,2,3,4,6)
        let lambda = p(&[5, 4, 4, 3, 2, 2]);
        let delta = p(&[4, 2, 2, 2, 2]);
        let m = p(&[2, 2, 2, 1, 1]);
        let s = Tableau::from_rows(vec![vec![1, 3, 3, 3, 5], vec![2, 4, 4]]).unwrap();
        let u = psi(&s, &lambda, &delta, &m).unwrap();
        let expected = Tableau::new(
            SkewShape::rotated(&m),
            vec![vec![1], vec![2], vec![2, 3], vec![3, 4], vec![6, 6]],
        )
        .unwrap();
        assert_eq!(u, expected);
    }

    #[test]
    fn psi_round_trip_exhaustive() {
        for lambda in enumerate_partitions(7, 4) {
            for mu in enumerate_partitions(lambda.size(), 4) {
                if !lambda.contains(&mu) {
                    continue;
                }
                for nu in enumerate_partitions(lambda.size() - mu.size(), 4) {
                    if nu.size() + mu.size() != lambda.size() {
                        continue;
                    }
                    let lat = enumerate_lr(
                        &lambda.conjugate(),
                        &mu.conjugate(),
                        &nu.conjugate(),
                        LrKind::Lattice,
                    );
                    for w in &lat {
                        let u = psi(&w.companion, &lambda, &mu, &nu).unwrap();
                        let back = psi_inverse(&u, &lambda, &mu, &nu).unwrap();
                        assert_eq!(back, w.companion);
                    }
                }
            }
        }
    }

    #[test]
    fn filling_round_trip() {
        let lambda = p(&[7, 6, 4, 3, 2]);
        let mu = p(&[6, 4, 2, 2]);
        let nu = p(&[2, 2, 2, 1, 1]);
        for w in enumerate_lr(&lambda, &mu, &nu, LrKind::AntiLattice) {
            let f = filling_of(&w.companion, &lambda, &mu).unwrap();
            assert_eq!(f, w.filling);
            assert_eq!(companion_of(&f, &nu, LrKind::AntiLattice), w.companion);
        }
        // single cell
        let w = enumerate_lr(&p(&[1]), &p(&[]), &p(&[1]), LrKind::Lattice);
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].companion, Tableau::from_rows(vec![vec![1]]).unwrap());
    }
}
