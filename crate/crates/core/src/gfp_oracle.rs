//! Ground truth over the prime field.
//!
//! The generator of the cyclic group acts on `V_i` as a unipotent Jordan
//! block `J_i`, so it acts on `V_m ⊗ V_n` as the Kronecker product
//! `J_m ⊗ J_n`. The block sizes of that matrix are `λ(m, n, p)`. They are
//! read off from the ranks `r_j` of the powers of `N = J_m ⊗ J_n - I`:
//! the number of blocks of size `j` is `r_{j-1} - 2 r_j + r_{j+1}`.
//!
//! `N` has at most three nonzeros per column and is kept sparse. The ranks
//! come from Krylov sequences `w, N w, N^2 w, ...` of a generating set of
//! `V_m ⊗ V_n` as a `K[N]`-module; `N^j V` is the span of the terms of
//! index at least `j`. A second route, the image chain
//! `B_{j+1} = reduce(N B_j)`, is kept for the tests. Nothing here consults
//! the recursion.

use std::fmt;

use crate::error::{Error, Result};
use crate::prime::Prime;
use crate::seqcore::JordanPartition;

/// Default cap on the matrix side `m * n` for [`tensor_jordan_type`].
pub const DEFAULT_SIZE_BUDGET: u64 = 4096;

const MAX_MODULUS: u64 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Field {
    p: u32,
}

impl Field {
    fn new(p: Prime) -> Result<Self> {
        if p.get() >= MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p.get()));
        }
        Ok(Field { p: p.get() as u32 })
    }

    fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(self, a: u32) -> u32 {
        debug_assert!(a != 0);
        // a^(p-2)
        let mut base = a;
        let mut exp = self.p - 2;
        let mut acc = 1u32;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// `dst[i] += factor * src[i]` for `i < len`.
    fn axpy(self, dst: &mut [u32], factor: u32, src: &[u32], len: usize) {
        if factor == 0 {
            return;
        }
        if self.p == 2 {
            for (d, s) in dst[..len].iter_mut().zip(&src[..len]) {
                *d ^= *s;
            }
            return;
        }
        let p = self.p as u64;
        let f = factor as u64;
        for (d, s) in dst[..len].iter_mut().zip(&src[..len]) {
            *d = ((*d as u64 + f * *s as u64) % p) as u32;
        }
    }
}

/// Dense matrix over GF(p), row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct GfpMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<u32>,
}

impl GfpMatrix {
    /// Builds a matrix from integer rows, reducing every entry mod `p`.
    pub fn from_rows(p: Prime, rows: &[Vec<i64>]) -> Result<Self> {
        let field = Field::new(p)?;
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("rows have different lengths".into()));
        }
        let entries = rows.iter().flatten().map(|&v| field.reduce(v)).collect();
        Ok(GfpMatrix {
            rows: rows.len(),
            cols,
            field,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize, p: Prime) -> Result<Self> {
        Ok(GfpMatrix {
            rows,
            cols,
            field: Field::new(p)?,
            entries: vec![0; rows * cols],
        })
    }

    pub fn identity(size: usize, p: Prime) -> Result<Self> {
        let mut m = Self::zeros(size, size, p)?;
        for i in 0..size {
            m.entries[i * size + i] = 1;
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u32 {
        self.field.p
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[u32] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    fn check_modulus(&self, other: &GfpMatrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ModulusMismatch(self.field.p, other.field.p));
        }
        Ok(())
    }

    /// `A ⊗ B`: block `(i, j)` is `A[i, j] · B`.
    pub fn kronecker(&self, other: &GfpMatrix) -> Result<GfpMatrix> {
        self.check_modulus(other)?;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut entries = vec![0; rows * cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    let base = (i * other.rows + k) * cols + j * other.cols;
                    for (l, &b) in other.row(k).iter().enumerate() {
                        entries[base + l] = self.field.mul(a, b);
                    }
                }
            }
        }
        Ok(GfpMatrix {
            rows,
            cols,
            field: self.field,
            entries,
        })
    }

    pub fn mul(&self, other: &GfpMatrix) -> Result<GfpMatrix> {
        self.check_modulus(other)?;
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = GfpMatrix::zeros_like(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            let dst = &mut out.entries[i * other.cols..(i + 1) * other.cols];
            for (k, &a) in self.row(i).iter().enumerate() {
                self.field.axpy(dst, a, other.row(k), other.cols);
            }
        }
        Ok(out)
    }

    /// `self - I`.
    pub fn minus_identity(&self) -> Result<GfpMatrix> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "{}x{} is not square",
                self.rows, self.cols
            )));
        }
        let mut out = self.clone();
        for i in 0..self.rows {
            let e = &mut out.entries[i * self.cols + i];
            *e = self.field.add(*e, self.field.neg(1));
        }
        Ok(out)
    }

    fn zeros_like(rows: usize, cols: usize, field: Field) -> Self {
        GfpMatrix {
            rows,
            cols,
            field,
            entries: vec![0; rows * cols],
        }
    }

    /// Rank over GF(p) by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let f = self.field;
        let mut a = self.entries.clone();
        let cols = self.cols;
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) = (rank..self.rows).find(|&r| a[r * cols + col] != 0) else {
                continue;
            };
            if pivot != rank {
                for c in 0..cols {
                    a.swap(pivot * cols + c, rank * cols + c);
                }
            }
            let inv = f.inv(a[rank * cols + col]);
            for c in col..cols {
                a[rank * cols + c] = f.mul(a[rank * cols + c], inv);
            }
            let (head, tail) = a.split_at_mut((rank + 1) * cols);
            let pivot_row = &head[rank * cols..];
            for row in tail.chunks_mut(cols) {
                let factor = row[col];
                if factor != 0 {
                    let neg = f.neg(factor);
                    for c in col..cols {
                        row[c] = f.add(row[c], f.mul(neg, pivot_row[c]));
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

impl fmt::Debug for GfpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "GfpMatrix {}x{} over GF({})",
            self.rows, self.cols, self.field.p
        )?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

pub fn rank(m: &GfpMatrix) -> usize {
    m.rank()
}

/// `J_size`: ones on the diagonal and the superdiagonal.
pub fn unipotent_jordan_block(size: usize, p: Prime) -> Result<GfpMatrix> {
    if size == 0 {
        return Err(Error::ZeroArgument("size"));
    }
    let mut m = GfpMatrix::identity(size, p)?;
    for i in 0..size - 1 {
        m.entries[i * size + i + 1] = 1;
    }
    Ok(m)
}

/// Square matrix stored by columns, nonzero entries only.
#[derive(Debug, Clone, PartialEq, Eq)]
struct SparseColumns {
    size: usize,
    field: Field,
    cols: Vec<Vec<(u32, u32)>>,
}

impl SparseColumns {
    fn from_dense(m: &GfpMatrix) -> Self {
        let mut cols = vec![Vec::new(); m.cols];
        for r in 0..m.rows {
            for (c, &v) in m.row(r).iter().enumerate() {
                if v != 0 {
                    cols[c].push((r as u32, v));
                }
            }
        }
        SparseColumns {
            size: m.rows,
            field: m.field,
            cols,
        }
    }

    fn identity(size: usize, field: Field) -> Self {
        let cols = (0..size as u32).map(|c| vec![(c, 1)]).collect();
        SparseColumns { size, field, cols }
    }

    /// `J_size` with its unit diagonal and superdiagonal.
    fn jordan_block(size: usize, field: Field) -> Self {
        let cols = (0..size)
            .map(|c| match c {
                0 => vec![(0, 1)],
                _ => vec![(c as u32 - 1, 1), (c as u32, 1)],
            })
            .collect();
        SparseColumns { size, field, cols }
    }

    /// `(A ⊗ B) - I` without a dense intermediate.
    fn kronecker_minus_identity(a: &SparseColumns, b: &SparseColumns) -> Self {
        let f = a.field;
        let size = a.size * b.size;
        let mut cols = Vec::with_capacity(size);
        for ac in &a.cols {
            for bc in &b.cols {
                let j = cols.len() as u32;
                let mut col: Vec<(u32, u32)> = Vec::with_capacity(ac.len() * bc.len());
                for &(ar, av) in ac {
                    for &(br, bv) in bc {
                        col.push((ar * b.size as u32 + br, f.mul(av, bv)));
                    }
                }
                match col.iter_mut().find(|(r, _)| *r == j) {
                    Some(e) => e.1 = f.add(e.1, f.neg(1)),
                    None => col.push((j, f.neg(1))),
                }
                col.retain(|&(_, v)| v != 0);
                col.sort_unstable();
                cols.push(col);
            }
        }
        SparseColumns {
            size,
            field: f,
            cols,
        }
    }

    /// Every nonzero entry lies strictly on one side of the diagonal, so
    /// the matrix is nilpotent.
    #[cfg(test)]
    fn is_strictly_triangular(&self) -> bool {
        let entries = || {
            self.cols
                .iter()
                .enumerate()
                .flat_map(|(c, col)| col.iter().map(move |&(r, _)| (r as usize, c)))
        };
        entries().all(|(r, c)| r < c) || entries().all(|(r, c)| r > c)
    }
}

/// Vector arithmetic used by the rank chains.
trait Lane {
    type Vector;

    fn column(&self, n: &SparseColumns, c: usize) -> Self::Vector;
    /// `N v`, where `v` is zero above `lead`.
    fn apply(&self, n: &SparseColumns, v: &Self::Vector, lead: usize) -> Self::Vector;
    /// Highest nonzero index strictly below `top`.
    fn lead(&self, v: &Self::Vector, top: usize) -> Option<usize>;
    fn coeff(&self, v: &Self::Vector, i: usize) -> u32;
    /// `v -= v[lead] * pivot` on indices `0..=lead`; `pivot[lead]` is 1.
    fn eliminate(&self, v: &mut Self::Vector, pivot: &Self::Vector, lead: usize);
    /// Scales `v` so that `v[lead]` becomes 1.
    fn normalize(&self, v: &mut Self::Vector, lead: usize);
}

/// Residues mod an odd prime, Barrett-reduced.
struct ModP {
    p: u64,
    barrett: u128,
    field: Field,
}

impl ModP {
    fn new(field: Field) -> Self {
        let p = field.p as u64;
        ModP {
            p,
            barrett: (1u128 << 64) / p as u128,
            field,
        }
    }

    #[inline]
    fn reduce(&self, x: u64) -> u32 {
        let q = ((x as u128 * self.barrett) >> 64) as u64;
        let r = x - q * self.p;
        (if r >= self.p { r - self.p } else { r }) as u32
    }
}

/// GF(2), 64 coordinates per word.
struct Bits;

impl Lane for Bits {
    type Vector = Vec<u64>;

    fn column(&self, n: &SparseColumns, c: usize) -> Vec<u64> {
        let mut v = vec![0u64; n.size.div_ceil(64)];
        for &(r, _) in &n.cols[c] {
            v[r as usize / 64] |= 1 << (r % 64);
        }
        v
    }

    fn apply(&self, n: &SparseColumns, v: &Vec<u64>, lead: usize) -> Vec<u64> {
        let mut out = vec![0u64; n.size.div_ceil(64)];
        for (w, &word) in v[..=lead / 64].iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let c = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                for &(r, _) in &n.cols[c] {
                    out[r as usize / 64] ^= 1 << (r % 64);
                }
            }
        }
        out
    }

    fn lead(&self, v: &Vec<u64>, top: usize) -> Option<usize> {
        if top == 0 {
            return None;
        }
        let last = (top - 1) / 64;
        let mask = if top.is_multiple_of(64) {
            u64::MAX
        } else {
            (1u64 << (top % 64)) - 1
        };
        let head = v[last] & mask;
        if head != 0 {
            return Some(last * 64 + 63 - head.leading_zeros() as usize);
        }
        v[..last]
            .iter()
            .rposition(|&w| w != 0)
            .map(|w| w * 64 + 63 - v[w].leading_zeros() as usize)
    }

    fn coeff(&self, v: &Vec<u64>, i: usize) -> u32 {
        ((v[i / 64] >> (i % 64)) & 1) as u32
    }

    fn eliminate(&self, v: &mut Vec<u64>, pivot: &Vec<u64>, lead: usize) {
        for (d, s) in v[..=lead / 64].iter_mut().zip(&pivot[..=lead / 64]) {
            *d ^= *s;
        }
    }

    fn normalize(&self, _v: &mut Vec<u64>, _lead: usize) {}
}

/// Sorted `(index, residue)` lists with no zero residues.
struct SparseLane {
    modp: ModP,
}

impl Lane for SparseLane {
    type Vector = Vec<(u32, u32)>;

    fn column(&self, n: &SparseColumns, c: usize) -> Self::Vector {
        n.cols[c].clone()
    }

    fn apply(&self, n: &SparseColumns, v: &Self::Vector, _lead: usize) -> Self::Vector {
        let mut terms: Vec<(u32, u32)> = Vec::with_capacity(v.len() * 3);
        for &(c, x) in v {
            for &(r, a) in &n.cols[c as usize] {
                terms.push((r, self.modp.reduce(a as u64 * x as u64)));
            }
        }
        terms.sort_unstable_by_key(|&(r, _)| r);
        let mut out: Vec<(u32, u32)> = Vec::with_capacity(terms.len());
        for (r, a) in terms {
            match out.last_mut() {
                Some(last) if last.0 == r => last.1 = self.modp.reduce(last.1 as u64 + a as u64),
                _ => out.push((r, a)),
            }
        }
        out.retain(|&(_, a)| a != 0);
        out
    }

    fn lead(&self, v: &Self::Vector, top: usize) -> Option<usize> {
        let end = v.partition_point(|&(r, _)| (r as usize) < top);
        v[..end]
            .iter()
            .rev()
            .find(|&&(_, a)| a != 0)
            .map(|&(r, _)| r as usize)
    }

    fn coeff(&self, v: &Self::Vector, i: usize) -> u32 {
        v.binary_search_by_key(&(i as u32), |&(r, _)| r)
            .map_or(0, |k| v[k].1)
    }

    fn eliminate(&self, v: &mut Self::Vector, pivot: &Self::Vector, lead: usize) {
        let p = self.modp.p;
        let factor = p - self.coeff(v, lead) as u64;
        let mut out = Vec::with_capacity(v.len() + pivot.len());
        let (mut i, mut j) = (0, 0);
        while i < v.len() || j < pivot.len() {
            let take_v = j == pivot.len() || (i < v.len() && v[i].0 < pivot[j].0);
            let take_p = i == v.len() || (j < pivot.len() && pivot[j].0 < v[i].0);
            let (r, a) = if take_v {
                i += 1;
                v[i - 1]
            } else if take_p {
                j += 1;
                (
                    pivot[j - 1].0,
                    self.modp.reduce(factor * pivot[j - 1].1 as u64),
                )
            } else {
                i += 1;
                j += 1;
                let sum = v[i - 1].1 as u64 + factor * pivot[j - 1].1 as u64;
                (v[i - 1].0, self.modp.reduce(sum))
            };
            if a != 0 {
                out.push((r, a));
            }
        }
        *v = out;
    }

    fn normalize(&self, v: &mut Self::Vector, lead: usize) {
        let inv = self.modp.field.inv(self.coeff(v, lead)) as u64;
        if inv != 1 {
            for e in v.iter_mut() {
                e.1 = self.modp.reduce(e.1 as u64 * inv);
            }
        }
    }
}

/// Row-echelon basis keyed by the highest nonzero index of each vector.
/// Every stored vector has leading coefficient 1.
struct Echelon<'a, L: Lane> {
    lane: &'a L,
    pivot_of: Vec<Option<usize>>,
    vectors: Vec<(usize, L::Vector)>,
}

impl<'a, L: Lane> Echelon<'a, L> {
    fn new(size: usize, lane: &'a L) -> Self {
        Echelon {
            lane,
            pivot_of: vec![None; size],
            vectors: Vec::new(),
        }
    }

    fn len(&self) -> usize {
        self.vectors.len()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    fn insert(&mut self, mut v: L::Vector, size: usize) -> bool {
        let mut top = size;
        loop {
            let Some(lead) = self.lane.lead(&v, top) else {
                return false;
            };
            match self.pivot_of[lead] {
                Some(idx) => {
                    self.lane.eliminate(&mut v, &self.vectors[idx].1, lead);
                    debug_assert_eq!(self.lane.coeff(&v, lead), 0);
                    top = lead;
                }
                None => {
                    self.lane.normalize(&mut v, lead);
                    self.pivot_of[lead] = Some(self.vectors.len());
                    self.vectors.push((lead, v));
                    return true;
                }
            }
        }
    }
}

/// `r_0, r_1, ..., r_t` with `r_j = rank(N^j)` and `r_t = 0`.
fn rank_chain(n: &SparseColumns) -> Result<Vec<usize>> {
    if n.field.p == 2 {
        rank_chain_krylov(n, &Bits)
    } else {
        rank_chain_krylov(
            n,
            &SparseLane {
                modp: ModP::new(n.field),
            },
        )
    }
}

/// The image chain `B_{j+1} = reduce(N B_j)`; a second route to the
/// same ranks.
#[cfg(test)]
fn rank_chain_by_images<L: Lane>(n: &SparseColumns, lane: &L) -> Result<Vec<usize>> {
    let size = n.size;
    let triangular = n.is_strictly_triangular();
    let mut ranks = vec![size];
    if size == 0 {
        return Ok(ranks);
    }
    let mut basis = Echelon::new(size, lane);
    for c in 0..size {
        basis.insert(lane.column(n, c), size);
    }
    ranks.push(basis.len());

    while *ranks.last().unwrap() > 0 {
        let j = ranks.len() - 1;
        if j > size {
            return Err(Error::NotUnipotent);
        }
        let (prev, cur) = (ranks[j - 1], ranks[j]);
        if cur == prev {
            return Err(Error::NotUnipotent);
        }
        if triangular && prev - cur == 1 {
            // a single block of size > j - 1 remains; its rank drops by one per step
            ranks.extend((0..cur).rev());
            break;
        }
        let mut next = Echelon::new(size, lane);
        for (lead, v) in basis.vectors.drain(..) {
            next.insert(lane.apply(n, &v, lead), size);
        }
        ranks.push(next.len());
        basis = next;
    }
    Ok(ranks)
}

/// `r_j` from Krylov sequences of module generators.
///
/// Lifting a basis of `V / N V` gives vectors `w_k` that generate `V` as a
/// `K[N]`-module when `N` is nilpotent, so `N^j V` is spanned by the
/// `N^i w_k` with `i >= j`. Inserting those level by level, from the top
/// power down, yields every `r_j` with one echelon pass.
fn rank_chain_krylov<L: Lane>(n: &SparseColumns, lane: &L) -> Result<Vec<usize>> {
    let size = n.size;
    if size == 0 {
        return Ok(vec![0]);
    }
    let mut image = Echelon::new(size, lane);
    for c in 0..size {
        image.insert(lane.column(n, c), size);
    }
    let unit = SparseColumns::identity(size, n.field);
    let generators = (0..size).filter(|&c| image.pivot_of[c].is_none());

    let mut sequences: Vec<Vec<(usize, L::Vector)>> = Vec::new();
    let mut longest = 0;
    for c in generators {
        let mut seq = vec![(c, lane.column(&unit, c))];
        loop {
            let (lead, v) = seq.last().unwrap();
            let next = lane.apply(n, v, *lead);
            let Some(lead) = lane.lead(&next, size) else {
                break;
            };
            if seq.len() >= size {
                return Err(Error::NotUnipotent);
            }
            seq.push((lead, next));
        }
        longest = longest.max(seq.len());
        sequences.push(seq);
    }

    let mut span = Echelon::new(size, lane);
    let mut ranks = vec![0; longest + 1];
    for j in (0..longest).rev() {
        for seq in &mut sequences {
            if seq.len() > j {
                let (_, v) = seq.pop().unwrap();
                span.insert(v, size);
            }
        }
        ranks[j] = span.len();
    }
    if ranks[0] != size {
        return Err(Error::NotUnipotent);
    }
    Ok(ranks)
}

/// Ranks of the powers of `M - I`, from `r_0 = size` down to the first zero.
pub fn unipotent_rank_sequence(m: &GfpMatrix) -> Result<Vec<usize>> {
    let n = m.minus_identity()?;
    rank_chain(&SparseColumns::from_dense(&n))
}

/// Jordan block sizes of a unipotent matrix, nonincreasing.
pub fn jordan_type_unipotent(m: &GfpMatrix) -> Result<Vec<u64>> {
    let ranks = unipotent_rank_sequence(m)?;
    Ok(block_sizes(&ranks))
}

fn block_sizes(ranks: &[usize]) -> Vec<u64> {
    let r = |j: usize| ranks.get(j).copied().unwrap_or(0) as i64;
    let mut sizes = Vec::new();
    for j in (1..ranks.len()).rev() {
        let count = r(j - 1) - 2 * r(j) + r(j + 1);
        debug_assert!(count >= 0, "rank sequence {ranks:?} is not convex");
        sizes.extend(std::iter::repeat_n(j as u64, count.max(0) as usize));
    }
    sizes
}

/// `λ(m, n, p)` as the Jordan type of `J_m ⊗ J_n` over GF(p), with the
/// default size budget.
pub fn tensor_jordan_type(m: u64, n: u64, p: Prime) -> Result<JordanPartition> {
    tensor_jordan_type_with_budget(m, n, p, DEFAULT_SIZE_BUDGET)
}

pub fn tensor_jordan_type_with_budget(
    m: u64,
    n: u64,
    p: Prime,
    budget: u64,
) -> Result<JordanPartition> {
    let sizes = tensor_block_sizes(m, n, p, budget)?;
    JordanPartition::new(sizes, m, n, p)
}

/// Raw block sizes of `J_m ⊗ J_n`, without partition validation.
pub fn tensor_block_sizes(m: u64, n: u64, p: Prime, budget: u64) -> Result<Vec<u64>> {
    if m == 0 {
        return Err(Error::ZeroArgument("m"));
    }
    if n == 0 {
        return Err(Error::ZeroArgument("n"));
    }
    let side = m.saturating_mul(n);
    if side > budget {
        return Err(Error::BudgetExceeded { side, budget });
    }
    let field = Field::new(p)?;
    let jm = SparseColumns::jordan_block(m as usize, field);
    let jn = SparseColumns::jordan_block(n as usize, field);
    let nil = SparseColumns::kronecker_minus_identity(&jm, &jn);
    Ok(block_sizes(&rank_chain(&nil)?))
}
