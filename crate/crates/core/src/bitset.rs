//! Vertex bitsets.
//!
//! [`VertexSet`] is the owned, order-aware set type used across the public
//! API. Hot kernels work on [`Bits`], a fixed-width copyable block whose word
//! count is a const parameter, and are instantiated for 1, 2, 4 and 8 words
//! (up to 512 vertices) through [`with_words!`](crate::with_words).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub, SubAssign};

/// Largest word count any kernel is instantiated for.
pub const MAX_WORDS: usize = 8;

/// Number of words a kernel needs for a graph of order `n`, rounded up to one
/// of the instantiated widths.
pub fn words_for(n: usize) -> usize {
    match n.div_ceil(64) {
        0 | 1 => 1,
        2 => 2,
        3 | 4 => 4,
        _ => 8,
    }
}

/// Runs a const-generic kernel with the word count appropriate for `n`.
///
/// `with_words!(n, |W| expr)` expands `expr` once per supported width with `W`
/// bound as a const.
#[macro_export]
macro_rules! with_words {
    ($n:expr, |$w:ident| $body:expr) => {{
        match $crate::bitset::words_for($n) {
            1 => {
                const $w: usize = 1;
                $body
            }
            2 => {
                const $w: usize = 2;
                $body
            }
            4 => {
                const $w: usize = 4;
                $body
            }
            _ => {
                const $w: usize = 8;
                $body
            }
        }
    }};
}

/// Fixed-width bitset over vertex ids `0..64*W`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bits<const W: usize>(pub [u64; W]);

impl<const W: usize> Default for Bits<W> {
    fn default() -> Self {
        Self::EMPTY
    }
}

impl<const W: usize> Bits<W> {
    pub const EMPTY: Self = Bits([0; W]);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64 * W);
        let mut b = Self::EMPTY;
        for (i, w) in b.0.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *w = u64::MAX;
            } else if n > lo {
                *w = (1u64 << (n - lo)) - 1;
            }
        }
        b
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        let mut b = Self::EMPTY;
        b.insert(v);
        b
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.0[v >> 6] >> (v & 63) & 1 == 1
    }

    #[inline]
    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    #[inline]
    pub fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).any(|(a, b)| a & b != 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    /// Smallest member.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.0.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Largest member.
    #[inline]
    pub fn last(&self) -> Option<usize> {
        for (i, &w) in self.0.iter().enumerate().rev() {
            if w != 0 {
                return Some(i * 64 + 63 - w.leading_zeros() as usize);
            }
        }
        None
    }

    #[inline]
    pub fn iter(&self) -> BitsIter<'_> {
        BitsIter {
            words: &self.0,
            idx: 0,
            cur: self.0.first().copied().unwrap_or(0),
        }
    }

    /// Compares the sets as unsigned integers (bit `v` has weight `2^v`).
    pub fn cmp_as_int(&self, other: &Self) -> Ordering {
        for i in (0..W).rev() {
            match self.0[i].cmp(&other.0[i]) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl<const W: usize> fmt::Debug for Bits<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl<const W: usize> FromIterator<usize> for Bits<W> {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut b = Self::EMPTY;
        for v in iter {
            b.insert(v);
        }
        b
    }
}

pub struct BitsIter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for BitsIter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + t);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

macro_rules! bits_binop {
    ($tr:ident, $f:ident, $tra:ident, $fa:ident, $op:tt) => {
        impl<const W: usize> $tr for Bits<W> {
            type Output = Self;
            #[inline]
            #[allow(clippy::assign_op_pattern)]
            fn $f(mut self, rhs: Self) -> Self {
                for i in 0..W {
                    self.0[i] = self.0[i] $op rhs.0[i];
                }
                self
            }
        }
        impl<const W: usize> $tra for Bits<W> {
            #[inline]
            #[allow(clippy::assign_op_pattern)]
            fn $fa(&mut self, rhs: Self) {
                for i in 0..W {
                    self.0[i] = self.0[i] $op rhs.0[i];
                }
            }
        }
    };
}

bits_binop!(BitAnd, bitand, BitAndAssign, bitand_assign, &);
bits_binop!(BitOr, bitor, BitOrAssign, bitor_assign, |);

impl<const W: usize> Sub for Bits<W> {
    type Output = Self;
    #[inline]
    fn sub(mut self, rhs: Self) -> Self {
        for i in 0..W {
            self.0[i] &= !rhs.0[i];
        }
        self
    }
}

impl<const W: usize> SubAssign for Bits<W> {
    #[inline]
    fn sub_assign(&mut self, rhs: Self) {
        for i in 0..W {
            self.0[i] &= !rhs.0[i];
        }
    }
}

impl<const W: usize> Not for Bits<W> {
    type Output = Self;
    #[inline]
    fn not(mut self) -> Self {
        for w in self.0.iter_mut() {
            *w = !*w;
        }
        self
    }
}

/// A subset of the vertices `0..n` of a graph of order `n`.
///
/// Ordering compares the sets as integers (bit `v` weighs `2^v`), which is the
/// tie-break used for reproducible witnesses.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(64).max(1)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    /// Builds a set from vertex ids; panics if an id is `>= n`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vs: I) -> Self {
        let mut s = Self::new(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    /// Order of the owning graph.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.n, "vertex {v} out of range for order {}", self.n);
        let had = self.contains(v);
        self.words[v >> 6] |= 1u64 << (v & 63);
        !had
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.n {
            return false;
        }
        let had = self.contains(v);
        self.words[v >> 6] &= !(1u64 << (v & 63));
        had
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v >> 6] >> (v & 63) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> BitsIter<'_> {
        BitsIter {
            words: &self.words,
            idx: 0,
            cur: self.words[0],
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter().chain(std::iter::repeat(&0)))
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
        out
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        assert_eq!(self.n, other.n, "vertex sets over different orders");
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    /// Complement within `0..n`.
    pub fn complement(&self) -> VertexSet {
        let mut out = VertexSet::full(self.n);
        for (a, b) in out.words.iter_mut().zip(self.words.iter()) {
            *a &= !b;
        }
        out
    }

    /// Copies into a fixed-width block; `W` must cover the universe.
    pub fn to_bits<const W: usize>(&self) -> Bits<W> {
        assert!(self.n <= 64 * W, "order {} exceeds {W} words", self.n);
        let mut b = Bits::<W>::EMPTY;
        for (i, &w) in self.words.iter().enumerate() {
            b.0[i] = w;
        }
        b
    }

    pub fn from_bits<const W: usize>(n: usize, bits: &Bits<W>) -> Self {
        let mut s = Self::new(n);
        for v in bits.iter() {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.words.len().max(other.words.len());
        for i in (0..len).rev() {
            let a = self.words.get(i).copied().unwrap_or(0);
            let b = other.words.get(i).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.n.cmp(&other.n)
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
