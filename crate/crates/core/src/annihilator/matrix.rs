use std::fmt;

/// Dense matrix over GF(2) with bit-packed rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

/// Rank and a basis of the right kernel `{v : M v = 0}`.
///
/// Basis vectors are packed like matrix rows (`cols` bits, bit `j` in word
/// `j / 64`). There is one vector per non-pivot column, in increasing column
/// order; the vector for free column `c` has bit `c` set and no other free
/// column bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
    pub basis: Vec<Vec<u64>>,
}

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

#[inline]
pub(crate) fn bit(words: &[u64], i: usize) -> bool {
    words[i >> 6] >> (i & 63) & 1 == 1
}

#[inline]
fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut entry: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if entry(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    fn row_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        bit(self.row(r), c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        let stride = self.stride;
        let w = &mut self.data[r * stride + (c >> 6)];
        if value {
            *w |= 1 << (c & 63);
        } else {
            *w &= !(1 << (c & 63));
        }
    }

    /// `M v` as a vector of row bits.
    pub fn mul_vec(&self, v: &[u64]) -> Vec<bool> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
                    & 1
                    == 1
            })
            .collect()
    }

    /// Forward elimination to row-echelon form. Pivot rows are chosen as the
    /// lowest-index remaining row with a one in the current column. Returns
    /// the pivot columns; the first `len()` rows hold the echelon rows.
    fn echelonize(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| self.get(r, c)) else {
                continue;
            };
            if p != rank {
                let (a, b) = (rank * self.stride, p * self.stride);
                for k in 0..self.stride {
                    self.data.swap(a + k, b + k);
                }
            }
            let w0 = c >> 6;
            let stride = self.stride;
            let (head, tail) = self.data.split_at_mut((rank + 1) * stride);
            let pivot_row = &head[rank * stride + w0..(rank + 1) * stride];
            for row in tail.chunks_mut(stride) {
                if row[w0] >> (c & 63) & 1 == 1 {
                    xor_into(&mut row[w0..], pivot_row);
                }
            }
            pivots.push(c);
            rank += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().echelonize().len()
    }

    pub fn kernel_basis(&self) -> Kernel {
        let mut m = self.clone();
        let pivots = m.echelonize();
        let rank = pivots.len();
        // back-substitution to reduced form
        for i in (0..rank).rev() {
            let c = pivots[i];
            let pivot_row: Vec<u64> = m.row(i).to_vec();
            for j in 0..i {
                if m.get(j, c) {
                    xor_into(m.row_mut(j), &pivot_row);
                }
            }
        }
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let basis = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u64; self.stride];
                v[free >> 6] |= 1 << (free & 63);
                for (i, &pc) in pivots.iter().enumerate() {
                    if m.get(i, free) {
                        v[pc >> 6] |= 1 << (pc & 63);
                    }
                }
                v
            })
            .collect();
        Kernel {
            rank,
            pivot_columns: pivots,
            basis,
        }
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows.min(32) {
            let line: String = (0..self.cols.min(96))
                .map(|c| if self.get(r, c) { '1' } else { '.' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Incremental column-space basis used to find the first linearly dependent
/// column of a matrix whose columns arrive one at a time.
///
/// Each stored vector keeps the combination of original columns it was
/// built from, so a dependency directly yields a kernel vector. Because the
/// columns before the first dependency are independent, that kernel vector
/// is the unique one supported on columns `0..=c` with bit `c` set.
pub(crate) struct ColumnBasis {
    row_words: usize,
    comb_words: usize,
    pivot_slot: Vec<u32>,
    columns: Vec<u64>,
    combos: Vec<u64>,
    len: usize,
}

const NO_SLOT: u32 = u32::MAX;

impl ColumnBasis {
    pub(crate) fn new(rows: usize, max_columns: usize) -> Self {
        Self {
            row_words: words_for(rows),
            comb_words: words_for(max_columns).max(1),
            pivot_slot: vec![NO_SLOT; rows],
            columns: Vec::new(),
            combos: Vec::new(),
            len: 0,
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.len
    }

    /// Adds column number `index`. Returns the kernel combination if the
    /// column is dependent on those already present.
    pub(crate) fn push(&mut self, mut column: Vec<u64>, index: usize) -> Option<Vec<u64>> {
        debug_assert_eq!(column.len(), self.row_words);
        let mut combo = vec![0u64; self.comb_words];
        combo[index >> 6] |= 1 << (index & 63);
        let rw = self.row_words;
        let cw = self.comb_words;
        for w in 0..rw {
            while column[w] != 0 {
                let p = w * 64 + column[w].trailing_zeros() as usize;
                let slot = self.pivot_slot[p];
                if slot == NO_SLOT {
                    self.pivot_slot[p] = self.len as u32;
                    self.columns.extend_from_slice(&column);
                    self.combos.extend_from_slice(&combo);
                    self.len += 1;
                    return None;
                }
                let s = slot as usize;
                xor_into(&mut column[w..], &self.columns[s * rw + w..(s + 1) * rw]);
                xor_into(&mut combo, &self.combos[s * cw..(s + 1) * cw]);
            }
        }
        Some(combo)
    }
}
