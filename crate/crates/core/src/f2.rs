//! Linear algebra over F2 on packed 64-bit words.
//!
//! [`Echelon`] is the single elimination kernel used by the cohomology code:
//! vectors are inserted one at a time, each carrying a tag vector that records
//! which generators it was built from, so reductions also yield coordinates.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

/// Row echelon basis with a pivot per row and a tag per row.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    tag_width: usize,
    rows: Vec<BitVec>,
    tags: Vec<BitVec>,
    pivots: Vec<usize>,
    // pivot column -> row index
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(width: usize, tag_width: usize) -> Self {
        Echelon {
            width,
            tag_width,
            rows: Vec::new(),
            tags: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![None; width],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis; returns the residue and the accumulated
    /// tag of the rows used.
    pub fn reduce(&self, v: &BitVec, tag: &BitVec) -> (BitVec, BitVec) {
        let mut v = v.clone();
        let mut tag = tag.clone();
        // Rows are inserted already reduced against earlier pivots, and later
        // rows never have a one at an earlier pivot, so one sweep in
        // insertion order suffices.
        for (r, &p) in self.pivots.iter().enumerate() {
            if v.get(p) {
                v.xor_assign(&self.rows[r]);
                tag.xor_assign(&self.tags[r]);
            }
        }
        (v, tag)
    }

    /// Inserts `v` (with its tag). Returns `None` if `v` was independent, or
    /// the tag of the dependency `Σ used tags + tag` if it reduced to zero.
    pub fn insert(&mut self, v: &BitVec, tag: &BitVec) -> Option<BitVec> {
        let (v, tag) = self.reduce(v, tag);
        match v.first_one() {
            None => Some(tag),
            Some(p) => {
                // Keep earlier rows free of the new pivot so that `reduce`
                // stays a single sweep.
                for r in 0..self.rows.len() {
                    if self.rows[r].get(p) {
                        let (row, t) = (&mut self.rows[r], &mut self.tags[r]);
                        row.xor_assign(&v);
                        t.xor_assign(&tag);
                    }
                }
                self.pivot_row[p] = Some(self.rows.len());
                self.pivots.push(p);
                self.rows.push(v);
                self.tags.push(tag);
                None
            }
        }
    }

    pub fn insert_untagged(&mut self, v: &BitVec) -> bool {
        let empty = BitVec::zeros(self.tag_width);
        self.insert(v, &empty).is_none()
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        let empty = BitVec::zeros(self.tag_width);
        self.reduce(v, &empty).0.is_zero()
    }

    /// Basis of the null space of the linear system whose equations are the
    /// inserted rows. Rows are fully reduced, so each free column gives one
    /// kernel vector.
    pub fn kernel(&self) -> Vec<BitVec> {
        let mut out = Vec::new();
        for free in 0..self.width {
            if self.pivot_row[free].is_some() {
                continue;
            }
            let mut x = BitVec::unit(self.width, free);
            for (r, &p) in self.pivots.iter().enumerate() {
                if self.rows[r].get(free) {
                    x.set(p, true);
                }
            }
            out.push(x);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn bitvec_basics() {
        let mut v = BitVec::zeros(130);
        v.set(0, true);
        v.set(129, true);
        assert_eq!(v.count_ones(), 2);
        assert_eq!(v.first_one(), Some(0));
        v.flip(0);
        assert_eq!(v.first_one(), Some(129));
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![129]);
    }

    #[test]
    fn kernel_vectors_solve_system() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let width = rng.gen_range(1..90);
            let rows: Vec<BitVec> = (0..rng.gen_range(0..60))
                .map(|_| BitVec::from_bools(&(0..width).map(|_| rng.gen_bool(0.3)).collect::<Vec<_>>()))
                .collect();
            let mut e = Echelon::new(width, 0);
            for r in &rows {
                e.insert_untagged(r);
            }
            let kernel = e.kernel();
            assert_eq!(kernel.len() + e.rank(), width);
            for x in &kernel {
                for r in &rows {
                    let mut dot = false;
                    for i in 0..width {
                        dot ^= r.get(i) && x.get(i);
                    }
                    assert!(!dot);
                }
            }
        }
    }

    #[test]
    fn tags_record_dependencies() {
        let mut e = Echelon::new(3, 3);
        let a = BitVec::from_bools(&[true, true, false]);
        let b = BitVec::from_bools(&[false, true, true]);
        let c = BitVec::from_bools(&[true, false, true]);
        assert!(e.insert(&a, &BitVec::unit(3, 0)).is_none());
        assert!(e.insert(&b, &BitVec::unit(3, 1)).is_none());
        let dep = e.insert(&c, &BitVec::unit(3, 2)).unwrap();
        assert_eq!(dep.to_bools(), vec![true, true, true]);
    }
}
