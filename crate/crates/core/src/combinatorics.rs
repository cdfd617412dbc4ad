//! Permutations, ordered partitions, preposets and the weak order.

use std::collections::BTreeSet;
use std::fmt;

use crate::subset::{self, Subset};
use crate::{Error, Result};

/// A permutation of `0..n` written as a word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &x in &word {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{word:?} is not a bijection of 0..{n}")));
            }
            seen[x] = true;
        }
        Ok(Permutation(word))
    }

    /// From 1-based images.
    pub fn from_one_based(word: &[usize]) -> Result<Self> {
        if word.contains(&0) {
            return Err(Error::InvalidPermutation("labels are 1-based".into()));
        }
        Self::new(word.iter().map(|x| x - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut word: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation(word.clone()));
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| word[i - 1] < word[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| word[j] > word[i - 1]).unwrap();
            word.swap(i - 1, j);
            word[i..].reverse();
        }
        out
    }

    /// Pairs of values `(a, b)` with `a > b` and `a` written before `b`.
    pub fn inversions(&self) -> BTreeSet<(usize, usize)> {
        let w = &self.0;
        let mut out = BTreeSet::new();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    out.insert((w[i], w[j]));
                }
            }
        }
        out
    }

    /// Inversion set as a bitmask over value pairs `b < a`, indexed by `a * (a - 1) / 2 + b`.
    pub fn inversion_mask(&self) -> u128 {
        assert!(self.len() <= 16);
        let pos = self.inverse();
        let mut mask = 0u128;
        for a in 0..self.len() {
            for b in 0..a {
                if pos.0[a] < pos.0[b] {
                    mask |= 1 << (a * (a - 1) / 2 + b);
                }
            }
        }
        mask
    }

    pub fn weak_order_leq(&self, other: &Permutation) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::InvalidPermutation(format!(
                "sizes differ ({} vs {})",
                self.len(),
                other.len()
            )));
        }
        let (a, b) = (self.inversion_mask(), other.inversion_mask());
        Ok(a & !b == 0)
    }

    /// Permutations covering this one in the weak order: swap an ascent at adjacent positions.
    pub fn weak_order_upper_covers(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        for i in 0..self.len().saturating_sub(1) {
            if self.0[i] < self.0[i + 1] {
                let mut w = self.0.clone();
                w.swap(i, i + 1);
                out.push(Permutation(w));
            }
        }
        out
    }

    /// The ordered partition into singletons `{w_1} | {w_2} | ... | {w_n}`.
    pub fn to_ordered_partition(&self) -> OrderedPartition {
        OrderedPartition {
            n: self.len(),
            parts: self.0.iter().map(|&x| subset::singleton(x)).collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "{}", items.join(" "))
    }
}

/// Ordered partition of `0..n` into nonempty parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedPartition {
    n: usize,
    parts: Vec<Subset>,
}

impl OrderedPartition {
    pub fn from_masks(n: usize, parts: Vec<Subset>) -> Result<Self> {
        let mut seen: Subset = 0;
        for &p in &parts {
            if p == 0 {
                return Err(Error::InvalidPartition("empty part".into()));
            }
            if p & seen != 0 {
                return Err(Error::InvalidPartition("parts overlap".into()));
            }
            seen |= p;
        }
        if seen != subset::full(n) {
            return Err(Error::InvalidPartition(format!("parts do not cover 0..{n}")));
        }
        Ok(OrderedPartition { n, parts })
    }

    pub fn new(n: usize, parts: &[Vec<usize>]) -> Result<Self> {
        let mut masks = Vec::with_capacity(parts.len());
        for p in parts {
            let mut mask = 0;
            for &i in p {
                if i >= n || subset::contains(mask, i) {
                    return Err(Error::InvalidPartition(format!("bad element {i}")));
                }
                mask |= subset::singleton(i);
            }
            masks.push(mask);
        }
        Self::from_masks(n, masks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[Subset] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Index of the part containing `i`.
    pub fn part_of(&self, i: usize) -> usize {
        self.parts.iter().position(|&p| subset::contains(p, i)).expect("element outside ground set")
    }

    /// `i ≼ j` iff the part of `i` comes before or equals the part of `j`.
    pub fn preposet(&self) -> Preposet {
        let mut rows = vec![0; self.n];
        let mut later: Subset = 0;
        for &p in self.parts.iter().rev() {
            later |= p;
            for i in subset::elements(p) {
                rows[i] = later;
            }
        }
        Preposet { n: self.n, rows }
    }

    pub fn refines(&self, other: &OrderedPartition) -> bool {
        self.preposet().refines(&other.preposet())
    }

    /// Restrict to `keep` and relabel each kept `i` to `i + shift`. The image must be `0..|keep|`.
    pub fn restrict_shift(&self, keep: Subset, shift: isize) -> Result<Self> {
        let image: Vec<isize> = subset::elements(keep).map(|i| i as isize + shift).collect();
        let k = image.len() as isize;
        if image.iter().any(|&x| x < 0 || x >= k) {
            return Err(Error::InvalidPartition("shifted labels do not form a ground set 0..k".into()));
        }
        let parts = self
            .parts
            .iter()
            .map(|&p| {
                subset::elements(p & keep).fold(0, |acc, i| acc | subset::singleton((i as isize + shift) as usize))
            })
            .filter(|&p| p != 0)
            .collect();
        Self::from_masks(k as usize, parts)
    }

    /// Restrict to `keep`, relabelling its elements `0..|keep|` in increasing order.
    pub fn restrict(&self, keep: Subset) -> OrderedPartition {
        let index = compaction(self.n, keep);
        let parts = self
            .parts
            .iter()
            .map(|&p| subset::elements(p & keep).fold(0, |acc, i| acc | subset::singleton(index[i])))
            .filter(|&p| p != 0)
            .collect();
        OrderedPartition { n: subset::size(keep), parts }
    }

    /// All ordered partitions of `0..n`, sorted by number of parts, then lexicographically on
    /// the sequence of parts (each part read as its increasing list of elements).
    pub fn enumerate(n: usize) -> Vec<OrderedPartition> {
        if n == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_partitions(n, subset::full(n), &mut current, &mut out);
        out.sort_by_cached_key(|p| (p.parts.len(), p.parts.iter().map(|&q| subset::to_vec(q)).collect::<Vec<_>>()));
        out
    }

    /// Ordered partitions of `0..n` with exactly `k` parts, in the order of [`Self::enumerate`].
    pub fn enumerate_with_parts(n: usize, k: usize) -> Vec<OrderedPartition> {
        Self::enumerate(n).into_iter().filter(|p| p.num_parts() == k).collect()
    }

    /// 1-based text such as `13|2`; parts with labels above 9 are comma separated.
    pub fn show(&self) -> String {
        let wide = self.n > 9;
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|&p| {
                let items: Vec<String> = subset::elements(p).map(|i| (i + 1).to_string()).collect();
                items.join(if wide { "," } else { "" })
            })
            .collect();
        parts.join("|")
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.show())
    }
}

fn fill_partitions(n: usize, rest: Subset, current: &mut Vec<Subset>, out: &mut Vec<OrderedPartition>) {
    if rest == 0 {
        out.push(OrderedPartition { n, parts: current.clone() });
        return;
    }
    // nonempty submasks of rest
    let mut sub = rest;
    while sub != 0 {
        current.push(sub);
        fill_partitions(n, rest & !sub, current, out);
        current.pop();
        sub = (sub - 1) & rest;
    }
}

fn compaction(n: usize, keep: Subset) -> Vec<usize> {
    let mut index = vec![usize::MAX; n];
    for (k, i) in subset::elements(keep).enumerate() {
        index[i] = k;
    }
    index
}

/// Number of ordered partitions of an `n`-set (Fubini numbers), by the recurrence
/// `a(n) = Σ_{k≥1} C(n,k) a(n−k)`.
pub fn fubini(n: usize) -> u128 {
    let mut a = vec![1u128; n + 1];
    for m in 1..=n {
        let mut binom = 1u128;
        let mut total = 0u128;
        for k in 1..=m {
            binom = binom * (m - k + 1) as u128 / k as u128;
            total += binom * a[m - k];
        }
        a[m] = total;
    }
    a[n]
}

/// Reflexive transitive relation on `0..n`; `rows[i]` holds every `j` with `i ≼ j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Preposet {
    n: usize,
    rows: Vec<Subset>,
}

impl Preposet {
    /// Reflexive transitive closure of the given pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut rows: Vec<Subset> = (0..n).map(subset::singleton).collect();
        for &(i, j) in pairs {
            rows[i] |= subset::singleton(j);
        }
        Self::from_rows(n, rows)
    }

    /// Closes arbitrary rows (reflexivity and transitivity are added).
    pub fn from_rows(n: usize, mut rows: Vec<Subset>) -> Self {
        assert!(n <= 32 && rows.len() == n);
        for (i, row) in rows.iter_mut().enumerate() {
            *row |= subset::singleton(i);
        }
        for k in 0..n {
            let rk = rows[k];
            for row in rows.iter_mut() {
                if subset::contains(*row, k) {
                    *row |= rk;
                }
            }
        }
        Preposet { n, rows }
    }

    /// Every element related to every other.
    pub fn complete(n: usize) -> Self {
        Preposet { n, rows: vec![subset::full(n); n] }
    }

    /// Only the diagonal.
    pub fn antichain(n: usize) -> Self {
        Preposet { n, rows: (0..n).map(subset::singleton).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Subset] {
        &self.rows
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        subset::contains(self.rows[i], j)
    }

    /// Strict relation `i ≺ j`, i.e. `i ≼ j` and not `j ≼ i`.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) && !self.leq(j, i)
    }

    pub fn is_poset(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || !(self.leq(i, j) && self.leq(j, i))))
    }

    /// Equivalence classes of `≼ ∩ ≽`, ordered by least element.
    pub fn classes(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        let mut done: Subset = 0;
        for i in 0..self.n {
            if subset::contains(done, i) {
                continue;
            }
            let class = subset::elements(self.rows[i]).filter(|&j| self.leq(j, i)).fold(0, |a, j| a | subset::singleton(j));
            done |= class;
            out.push(class);
        }
        out
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Preposet) -> bool {
        self.n == other.n && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Preposet) -> Preposet {
        assert_eq!(self.n, other.n);
        Preposet { n: self.n, rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a & b).collect() }
    }

    /// Transitive closure of the union.
    pub fn union_closure(&self, other: &Preposet) -> Preposet {
        assert_eq!(self.n, other.n);
        Self::from_rows(self.n, self.rows.iter().zip(&other.rows).map(|(a, b)| a | b).collect())
    }

    /// `self` on `0..m` next to `other` shifted to `m..m+n`, with no relation across.
    pub fn disjoint_union(&self, other: &Preposet) -> Preposet {
        let m = self.n;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|&r| r << m));
        Preposet { n: m + other.n, rows }
    }

    /// Restrict to `keep`, relabelling its elements `0..|keep|` in increasing order.
    pub fn restrict(&self, keep: Subset) -> Preposet {
        let index = compaction(self.n, keep);
        let rows = subset::elements(keep)
            .map(|i| subset::elements(self.rows[i] & keep).fold(0, |a, j| a | subset::singleton(index[j])))
            .collect();
        Preposet { n: subset::size(keep), rows }
    }

    /// Restrict to `keep` and relabel `i ↦ i + shift`. The result lives on `0..N` where `N - 1` is
    /// the largest new label; labels outside the image are left unrelated.
    pub fn restrict_shift(&self, keep: Subset, shift: isize) -> Result<Preposet> {
        let mut pairs = Vec::new();
        let mut top = 0usize;
        for i in subset::elements(keep) {
            let ni = i as isize + shift;
            if ni < 0 {
                return Err(Error::InvalidPartition("negative label after shift".into()));
            }
            top = top.max(ni as usize + 1);
            for j in subset::elements(self.rows[i] & keep) {
                pairs.push((ni as usize, (j as isize + shift) as usize));
            }
        }
        Ok(Preposet::from_pairs(top, &pairs))
    }

    /// Whether `i ≼ j` implies `i ≼_μ j`.
    pub fn extended_by(&self, mu: &OrderedPartition) -> bool {
        self.refines(&mu.preposet())
    }

    /// Strict cover pairs of the quotient poset, as pairs of representatives (least elements).
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let classes = self.classes();
        let rep: Vec<usize> = classes.iter().map(|&c| c.trailing_zeros() as usize).collect();
        let mut out = Vec::new();
        for &a in &rep {
            for &b in &rep {
                if a != b && self.lt(a, b) && !rep.iter().any(|&c| c != a && c != b && self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// 1-based listing of strict cover pairs and equivalences, e.g. `1<2, 3<2, 1=3`.
    pub fn show(&self) -> String {
        let mut items = Vec::new();
        for class in self.classes() {
            let e = subset::to_vec(class);
            for w in e.windows(2) {
                items.push(format!("{}={}", w[0] + 1, w[1] + 1));
            }
        }
        for (a, b) in self.cover_pairs() {
            items.push(format!("{}<{}", a + 1, b + 1));
        }
        items.join(", ")
    }
}

/// Image of a relation under a map to classes: `(class(i), class(j))` for every related pair.
pub fn quotient_relation(pairs: &[(usize, usize)], class_of: &[usize]) -> Vec<(usize, usize)> {
    let set: BTreeSet<(usize, usize)> = pairs.iter().map(|&(i, j)| (class_of[i], class_of[j])).collect();
    set.into_iter().collect()
}
