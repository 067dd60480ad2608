//! Skew shapes, semistandard tableaux, column insertion, type-A crystal
//! operators via the signature rule, and Knuth equivalence.

use crate::partition::Partition;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A skew shape `outer/inner`. Straight shapes have an empty inner part.
///
/// The 180°-rotated shape `λ^π` is represented as the skew shape
/// `(λ₁^ℓ)/(λ₁-λ_ℓ, …, λ₁-λ₁)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Self {
        assert!(
            outer.contains(&inner),
            "inner {inner} must fit inside outer {outer}"
        );
        SkewShape { outer, inner }
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    /// The rotated shape `λ^π`.
    pub fn rotated(lambda: &Partition) -> Self {
        let ell = lambda.len();
        if ell == 0 {
            return SkewShape::straight(Partition::empty());
        }
        let w = lambda.part(0);
        let outer = Partition::new(vec![w; ell]);
        let inner = Partition::new(
            (0..ell)
                .map(|i| w - lambda.part(ell - 1 - i))
                .collect::<Vec<_>>(),
        );
        SkewShape::new(outer, inner)
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn cells(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Column range `inner_i..outer_i` of row `i`.
    pub fn row_span(&self, i: usize) -> std::ops::Range<usize> {
        self.inner.part(i)..self.outer.part(i)
    }
}

/// A semistandard filling of a skew shape: rows weakly increase, columns
/// strictly increase. `rows[i]` lists the entries of row `i` left to
/// right, skipping the inner indent.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Tableau {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<usize>>,
}

impl<'de> serde::Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            outer: Partition,
            inner: Partition,
            rows: Vec<Vec<usize>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if !raw.outer.contains(&raw.inner) {
            return Err(serde::de::Error::custom("inner shape exceeds outer"));
        }
        Tableau::new(SkewShape::new(raw.outer, raw.inner), raw.rows)
            .map_err(serde::de::Error::custom)
    }
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self, String> {
        let t = Tableau {
            outer: shape.outer,
            inner: shape.inner,
            rows,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        Tableau {
            outer: Partition::empty(),
            inner: Partition::empty(),
            rows: Vec::new(),
        }
    }

    /// Straight tableau from explicit rows.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, String> {
        let outer = Partition::new(rows.iter().map(|r| r.len()).collect::<Vec<_>>());
        Tableau::new(SkewShape::straight(outer), rows)
    }

    /// Straight tableau whose columns (top to bottom) are given left to
    /// right; column heights must be weakly decreasing.
    pub fn from_columns(cols: &[Vec<usize>]) -> Result<Self, String> {
        let depth = cols.first().map(|c| c.len()).unwrap_or(0);
        let mut rows = Vec::new();
        for i in 0..depth {
            let row: Vec<usize> = cols
                .iter()
                .filter(|c| c.len() > i)
                .map(|c| c[i])
                .collect();
            if row.len() < cols.iter().filter(|c| c.len() > i).count() {
                unreachable!()
            }
            if !row.is_empty() {
                rows.push(row);
            }
        }
        if cols.iter().any(|c| c.len() > depth) {
            return Err("column heights must be weakly decreasing".into());
        }
        Tableau::from_rows(rows)
    }

    fn validate(&self) -> Result<(), String> {
        let shape = self.shape();
        if self.rows.len() != shape.rows() {
            return Err(format!(
                "expected {} rows, got {}",
                shape.rows(),
                self.rows.len()
            ));
        }
        for (i, row) in self.rows.iter().enumerate() {
            let span = shape.row_span(i);
            if row.len() != span.len() {
                return Err(format!("row {i} has wrong length"));
            }
            if row.contains(&0) {
                return Err("entries must be positive".into());
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(format!("row {i} not weakly increasing"));
            }
        }
        for i in 1..self.rows.len() {
            for j in shape.row_span(i) {
                if shape.row_span(i - 1).contains(&j) {
                    let above = self.entry(i - 1, j).unwrap();
                    let here = self.entry(i, j).unwrap();
                    if above >= here {
                        return Err(format!("column {j} not strictly increasing at row {i}"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.clone(),
            inner: self.inner.clone(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Entry at absolute position (row, col), if the cell exists.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        let span = self.shape().row_span(row);
        if row < self.rows.len() && span.contains(&col) {
            Some(self.rows[row][col - span.start])
        } else {
            None
        }
    }

    /// Column `j` read top to bottom.
    pub fn column(&self, j: usize) -> Vec<usize> {
        (0..self.rows.len())
            .filter_map(|i| self.entry(i, j))
            .collect()
    }

    /// Multiplicity vector of the entries: `content()[i]` counts `i + 1`.
    pub fn content(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for row in &self.rows {
            for &x in row {
                if counts.len() < x {
                    counts.resize(x, 0);
                }
                counts[x - 1] += 1;
            }
        }
        counts
    }

    /// Cells in reading order: column by column from right to left, each
    /// column top to bottom.
    pub fn reading_cells(&self) -> Vec<(usize, usize)> {
        let width = self.outer.part(0);
        let mut cells = Vec::with_capacity(self.cell_count());
        for j in (0..width).rev() {
            for i in 0..self.rows.len() {
                if self.shape().row_span(i).contains(&j) {
                    cells.push((i, j));
                }
            }
        }
        cells
    }

    /// The reading word: columns right to left, top to bottom in each.
    pub fn reading_word(&self) -> Vec<usize> {
        self.reading_cells()
            .into_iter()
            .map(|(i, j)| self.entry(i, j).unwrap())
            .collect()
    }

    /// True iff `crystal_e(i, T)` is undefined for every `i >= 1`,
    /// equivalently the reading word is a lattice word.
    pub fn is_l_highest(&self) -> bool {
        is_lattice_word(&self.reading_word())
    }

    /// Anti-lattice test against an intended number of distinct letters:
    /// in every suffix of the reading word, `#i >= #(i-1)` for
    /// `1 < i <= content_len`.
    pub fn is_anti_lattice(&self, content_len: usize) -> bool {
        is_anti_lattice_word(&self.reading_word(), content_len)
    }

    /// The raising operator `ẽ_i`; `None` encodes the crystal zero.
    pub fn crystal_e(&self, i: usize) -> Option<Tableau> {
        assert!(i >= 1);
        let word = self.reading_word();
        let pos = signature(&word, i).e_position?;
        let (r, c) = self.reading_cells()[pos];
        let mut t = self.clone();
        let off = t.shape().row_span(r).start;
        t.rows[r][c - off] = i;
        debug_assert!(t.validate().is_ok());
        Some(t)
    }

    /// The lowering operator `f̃_i`; `None` encodes the crystal zero.
    pub fn crystal_f(&self, i: usize) -> Option<Tableau> {
        assert!(i >= 1);
        let word = self.reading_word();
        let pos = signature(&word, i).f_position?;
        let (r, c) = self.reading_cells()[pos];
        let mut t = self.clone();
        let off = t.shape().row_span(r).start;
        t.rows[r][c - off] = i + 1;
        debug_assert!(t.validate().is_ok());
        Some(t)
    }

    pub fn eps(&self, i: usize) -> usize {
        signature(&self.reading_word(), i).eps
    }

    pub fn phi(&self, i: usize) -> usize {
        signature(&self.reading_word(), i).phi
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Tableau {}/{}", self.outer, self.inner)?;
        for (i, row) in self.rows.iter().enumerate() {
            let indent = self.inner.part(i);
            write!(f, "  {}", "  . ".repeat(indent))?;
            for x in row {
                write!(f, "{x:>3} ")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Outcome of the signature rule for one crystal index.
pub(crate) struct Signature {
    pub eps: usize,
    pub phi: usize,
    /// Word position of the rightmost uncancelled `i + 1`.
    pub e_position: Option<usize>,
    /// Word position of the leftmost uncancelled `i`.
    pub f_position: Option<usize>,
}

/// Cancels `(i, i+1)` pairs in the word (an `i` to the left of an `i+1`)
/// and reports the survivors.
pub(crate) fn signature(word: &[usize], i: usize) -> Signature {
    let mut plus_stack: Vec<usize> = Vec::new();
    let mut unmatched_minus: Vec<usize> = Vec::new();
    for (pos, &x) in word.iter().enumerate() {
        if x == i {
            plus_stack.push(pos);
        } else if x == i + 1
            && plus_stack.pop().is_none() {
                unmatched_minus.push(pos);
            }
    }
    Signature {
        eps: unmatched_minus.len(),
        phi: plus_stack.len(),
        e_position: unmatched_minus.last().copied(),
        f_position: plus_stack.first().copied(),
    }
}

/// True iff every prefix contains at least as many `i` as `i + 1`.
pub fn is_lattice_word(word: &[usize]) -> bool {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; max + 1];
    for &x in word {
        counts[x - 1] += 1;
        if x > 1 && counts[x - 1] > counts[x - 2] {
            return false;
        }
    }
    true
}

/// True iff every suffix contains at least as many `i` as `i - 1`, for
/// `1 < i <= content_len`.
pub fn is_anti_lattice_word(word: &[usize], content_len: usize) -> bool {
    let mut counts = vec![0usize; content_len + 1];
    for &x in word.iter().rev() {
        if x > content_len {
            return false;
        }
        counts[x] += 1;
        if x < content_len && counts[x + 1] < counts[x] {
            return false;
        }
    }
    true
}

/// The highest weight tableau `H_λ` (or `H_{λ^π}` when `rotated`): in each
/// column the `i`-th entry from the top is `i`.
pub fn highest_tableau(lambda: &Partition, rotated: bool) -> Tableau {
    let shape = if rotated {
        SkewShape::rotated(lambda)
    } else {
        SkewShape::straight(lambda.clone())
    };
    let mut col_fill = vec![0usize; shape.outer.part(0)];
    let mut rows = Vec::new();
    for i in 0..shape.rows() {
        let mut row = Vec::new();
        for j in shape.row_span(i) {
            col_fill[j] += 1;
            row.push(col_fill[j]);
        }
        rows.push(row);
    }
    Tableau::new(shape, rows).expect("highest tableau is semistandard")
}

/// Column insertion of `a` into a straight tableau: `a` bumps the topmost
/// entry `>= a` of the first column, the bumped entry enters the next
/// column, and so on; an entry with nothing to bump lands at the bottom.
pub fn column_insert(a: usize, t: &Tableau) -> Tableau {
    assert!(t.is_straight(), "column insertion needs a straight shape");
    let width = t.outer.part(0);
    let mut cols: Vec<Vec<usize>> = (0..width).map(|j| t.column(j)).collect();
    column_insert_mut(a, &mut cols);
    Tableau::from_columns(&cols).expect("insertion keeps semistandardness")
}

pub(crate) fn column_insert_mut(mut a: usize, cols: &mut Vec<Vec<usize>>) {
    let mut j = 0;
    loop {
        if j == cols.len() {
            cols.push(vec![a]);
            return;
        }
        match cols[j].iter().position(|&x| x >= a) {
            None => {
                cols[j].push(a);
                return;
            }
            Some(idx) => {
                let bumped = std::mem::replace(&mut cols[j][idx], a);
                a = bumped;
                j += 1;
            }
        }
    }
}

/// Inserts the letters of `word` left to right.
pub fn word_insert(word: &[usize], t: &Tableau) -> Tableau {
    assert!(t.is_straight());
    let width = t.outer.part(0);
    let mut cols: Vec<Vec<usize>> = (0..width).map(|j| t.column(j)).collect();
    for &a in word {
        column_insert_mut(a, &mut cols);
    }
    Tableau::from_columns(&cols).expect("insertion keeps semistandardness")
}

/// `(S → T)`: inserts the reading word of `S` into `T`.
pub fn tableau_insert(s: &Tableau, t: &Tableau) -> Tableau {
    word_insert(&s.reading_word(), t)
}

/// Two tableaux are Knuth equivalent iff their reading words insert to the
/// same straight tableau.
pub fn knuth_equivalent(t: &Tableau, s: &Tableau) -> bool {
    word_insert(&t.reading_word(), &Tableau::empty())
        == word_insert(&s.reading_word(), &Tableau::empty())
}
