//! Finite binary relations and the dagger-monoidal structure of `Rel`.
//!
//! A [`Rel`] between finite sets `dom = {0..m}` and `cod = {0..k}` is stored
//! as a boolean matrix with one word-packed row per domain element, so that
//! relational composition is a bitwise OR of rows.
//!
//! Products of carriers are flattened with the fixed mixed-radix convention
//! `(x, y) ↦ x * |Y| + y`. Under this convention `(X ⊗ Y) ⊗ Z` and
//! `X ⊗ (Y ⊗ Z)` have literally the same indices, so the tensor is strictly
//! associative, and the monoidal unit is the one-element set `{0}`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// Largest domain for which [`Rel::is_mono`] enumerates the powerset.
pub const MONO_DOMAIN_LIMIT: usize = 20;

/// Flattened index of the pair `(x, y)` in `X ⊗ Y` where `|Y| = width`.
#[inline]
pub fn pair_index(x: usize, y: usize, width: usize) -> usize {
    x * width + y
}

/// Inverse of [`pair_index`].
#[inline]
pub fn unpair(index: usize, width: usize) -> (usize, usize) {
    (index / width, index % width)
}

/// A binary relation `dom ⇸ cod` between finite index sets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rel {
    dom: usize,
    cod: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Rel {
    /// The empty relation `dom ⇸ cod`.
    pub fn empty(dom: usize, cod: usize) -> Self {
        let stride = cod.div_ceil(WORD_BITS);
        Rel {
            dom,
            cod,
            stride,
            bits: vec![0; dom * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = Rel::empty(n, n);
        for i in 0..n {
            r.insert(i, i);
        }
        r
    }

    /// Relates every element of `dom` to every element of `cod`.
    pub fn full(dom: usize, cod: usize) -> Self {
        let mut r = Rel::empty(dom, cod);
        for a in 0..dom {
            for b in 0..cod {
                r.insert(a, b);
            }
        }
        r
    }

    pub fn from_pairs<I>(dom: usize, cod: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut r = Rel::empty(dom, cod);
        for (a, b) in pairs {
            if a >= dom || b >= cod {
                return Err(Error::PairOutOfRange { a, b, dom, cod });
            }
            r.insert(a, b);
        }
        Ok(r)
    }

    /// The symmetry `A ⊗ B ⇸ B ⊗ A`, `(a, b) ↦ (b, a)`.
    pub fn swap(a: usize, b: usize) -> Self {
        let mut r = Rel::empty(a * b, b * a);
        for x in 0..a {
            for y in 0..b {
                r.insert(pair_index(x, y, b), pair_index(y, x, a));
            }
        }
        r
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.dom, self.cod)
    }

    /// Adds the pair `(a, b)`.
    ///
    /// Panics if the pair lies outside `dom × cod`; use [`Rel::from_pairs`]
    /// for checked construction.
    pub fn insert(&mut self, a: usize, b: usize) {
        assert!(
            a < self.dom && b < self.cod,
            "pair ({a}, {b}) outside {}x{}",
            self.dom,
            self.cod
        );
        self.bits[a * self.stride + b / WORD_BITS] |= 1u64 << (b % WORD_BITS);
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        a < self.dom
            && b < self.cod
            && self.bits[a * self.stride + b / WORD_BITS] & (1u64 << (b % WORD_BITS)) != 0
    }

    fn row_words(&self, a: usize) -> &[u64] {
        &self.bits[a * self.stride..(a + 1) * self.stride]
    }

    /// The image of a single domain element, in increasing order.
    pub fn row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.row_words(a)
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| BitIter(word).map(move |bit| w * WORD_BITS + bit))
    }

    pub fn row_len(&self, a: usize) -> usize {
        self.row_words(a)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// All pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.dom).flat_map(move |a| self.row(a).map(move |b| (a, b)))
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Diagrammatic composition `self ; other`: first `self`, then `other`.
    ///
    /// In the usual notation this is `other ∘ self`.
    pub fn compose(&self, other: &Rel) -> Result<Rel> {
        if self.cod != other.dom {
            return Err(Error::ShapeMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Rel::empty(self.dom, other.cod);
        for a in 0..self.dom {
            let start = a * out.stride;
            for b in self.row(a) {
                for (dst, src) in out.bits[start..start + out.stride]
                    .iter_mut()
                    .zip(other.row_words(b))
                {
                    *dst |= *src;
                }
            }
        }
        Ok(out)
    }

    /// The dagger of `Rel`: relational converse.
    pub fn converse(&self) -> Rel {
        let mut out = Rel::empty(self.cod, self.dom);
        for (a, b) in self.pairs() {
            out.insert(b, a);
        }
        out
    }

    /// Cartesian tensor `self ⊗ other : A×C ⇸ B×D`.
    pub fn tensor(&self, other: &Rel) -> Rel {
        let mut out = Rel::empty(self.dom * other.dom, self.cod * other.cod);
        for (a, b) in self.pairs() {
            for (c, d) in other.pairs() {
                out.insert(pair_index(a, c, other.dom), pair_index(b, d, other.cod));
            }
        }
        out
    }

    /// Every domain element is related to at most one codomain element.
    pub fn is_single_valued(&self) -> bool {
        (0..self.dom).all(|a| self.row_len(a) <= 1)
    }

    pub fn is_total(&self) -> bool {
        (0..self.dom).all(|a| self.row_words(a).iter().any(|&w| w != 0))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![0u64; self.stride];
        for a in 0..self.dom {
            for (h, w) in hit.iter_mut().zip(self.row_words(a)) {
                *h |= *w;
            }
        }
        (0..self.cod).all(|b| hit[b / WORD_BITS] & (1u64 << (b % WORD_BITS)) != 0)
    }

    /// Direct image `{b | ∃a ∈ set. a R b}`.
    pub fn image<'a, I>(&self, set: I) -> BTreeSet<usize>
    where
        I: IntoIterator<Item = &'a usize>,
    {
        set.into_iter()
            .filter(|&&a| a < self.dom)
            .flat_map(|&a| self.row(a))
            .collect()
    }

    /// Monomorphism test: `U ↦ image(U)` must be injective on all subsets
    /// of the domain.
    pub fn is_mono(&self) -> Result<bool> {
        if self.dom > MONO_DOMAIN_LIMIT {
            return Err(Error::TooLarge {
                what: "domain size for the monomorphism test",
                limit: MONO_DOMAIN_LIMIT,
                got: self.dom,
            });
        }
        let subsets = 1usize << self.dom;
        let mut images = vec![0u64; subsets * self.stride];
        for mask in 1..subsets {
            let low = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            for w in 0..self.stride {
                images[mask * self.stride + w] =
                    images[rest * self.stride + w] | self.bits[low * self.stride + w];
            }
        }
        if self.stride == 0 {
            // cod is empty: every image is ∅, so only the empty domain is mono
            return Ok(subsets == 1);
        }
        let mut seen = HashSet::with_capacity(subsets);
        Ok(images.chunks(self.stride).all(|img| seen.insert(img)))
    }

    /// Index of the first domain element whose rows differ, if any.
    pub fn first_row_difference(&self, other: &Rel) -> Option<usize> {
        debug_assert_eq!(self.shape(), other.shape());
        (0..self.dom).find(|&a| self.row_words(a) != other.row_words(a))
    }

    /// All domain elements whose rows differ.
    pub fn row_differences<'a>(&'a self, other: &'a Rel) -> impl Iterator<Item = usize> + 'a {
        debug_assert_eq!(self.shape(), other.shape());
        (0..self.dom).filter(move |&a| self.row_words(a) != other.row_words(a))
    }
}

impl fmt::Debug for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rel({} -> {}) ", self.dom, self.cod)?;
        f.debug_set().entries(self.pairs()).finish()
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let bit = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(bit)
    }
}

/// A vector `I ⇸ X`, i.e. a subset of the carrier.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Vector(BTreeSet<usize>);

impl Vector {
    pub fn new() -> Self {
        Vector::default()
    }

    pub fn singleton(x: usize) -> Self {
        Vector(BTreeSet::from([x]))
    }

    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    /// The vector `1 ⇸ n` as a relation.
    pub fn to_rel(&self, n: usize) -> Result<Rel> {
        Rel::from_pairs(1, n, self.0.iter().map(|&x| (0, x)))
    }

    /// Reads a relation `1 ⇸ n` back as a subset.
    pub fn from_rel(r: &Rel) -> Result<Self> {
        if r.dom() != 1 {
            return Err(Error::ShapeMismatch {
                left: r.shape(),
                right: (1, r.cod()),
            });
        }
        Ok(r.row(0).collect())
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(&x)
    }

    pub fn insert(&mut self, x: usize) -> bool {
        self.0.insert(x)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_set(&self) -> &BTreeSet<usize> {
        &self.0
    }
}

impl FromIterator<usize> for Vector {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Vector(iter.into_iter().collect())
    }
}

impl From<BTreeSet<usize>> for Vector {
    fn from(s: BTreeSet<usize>) -> Self {
        Vector(s)
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}
