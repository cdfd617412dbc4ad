//! Painted trees: Schröder trees with nested labeled cuts, modelling the faces of
//! `Perm(m) ⧢ Asso(n)`.
//!
//! Cuts are numbered from the leaves towards the root: `C_1` is the cut farthest from the
//! root and each `C_{i+1}` lies strictly inside the stump of `C_i`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::combinatorics::{OrderedPartition, Preposet};
use crate::genfun;
use crate::subset::{self, Subset};
use crate::trees::{self, PlaneTree, Shape, Slot};
use crate::{Error, Result};

/// A tree whose internal nodes carry an optional cut level (0-based, `0` is `C_1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum LTree {
    Leaf,
    Node(Option<usize>, Vec<LTree>),
}

impl LTree {
    fn plane(&self) -> PlaneTree {
        match self {
            LTree::Leaf => PlaneTree::Leaf,
            LTree::Node(_, ch) => PlaneTree::Node(ch.iter().map(|c| c.plane()).collect()),
        }
    }

    fn levels(&self, out: &mut Vec<Option<usize>>) {
        if let LTree::Node(l, ch) = self {
            out.push(*l);
            for c in ch {
                c.levels(out);
            }
        }
    }

    fn size(&self) -> usize {
        match self {
            LTree::Leaf => 0,
            LTree::Node(_, ch) => 1 + ch.iter().map(|c| c.size()).sum::<usize>(),
        }
    }

    fn cut_nodes(&self) -> usize {
        match self {
            LTree::Leaf => 0,
            LTree::Node(l, ch) => usize::from(l.is_some()) + ch.iter().map(|c| c.cut_nodes()).sum::<usize>(),
        }
    }

    fn from_plane(t: &PlaneTree, levels: &[Option<usize>], next: &mut usize) -> LTree {
        match t {
            PlaneTree::Leaf => LTree::Leaf,
            PlaneTree::Node(ch) => {
                let l = levels[*next];
                *next += 1;
                LTree::Node(l, ch.iter().map(|c| LTree::from_plane(c, levels, next)).collect())
            }
        }
    }

    /// Rebuild with `f(preorder, node)` applied top-down; `f` returns `None` to keep the node.
    fn rewrite_at(&self, target: usize, f: &mut dyn FnMut(&LTree) -> LTree) -> LTree {
        fn go(t: &LTree, target: usize, next: &mut usize, f: &mut dyn FnMut(&LTree) -> LTree) -> LTree {
            match t {
                LTree::Leaf => LTree::Leaf,
                LTree::Node(l, ch) => {
                    let id = *next;
                    *next += 1;
                    if id == target {
                        let skip = t.size() - 1;
                        *next += skip;
                        return f(t);
                    }
                    LTree::Node(*l, ch.iter().map(|c| go(c, target, next, f)).collect())
                }
            }
        }
        go(self, target, &mut 0, f)
    }

    /// Splice every node for which `drop(level)` holds into its parent; relabel the rest.
    fn splice_levels(&self, drop: &dyn Fn(Option<usize>) -> bool, relabel: &dyn Fn(Option<usize>) -> Option<usize>) -> LTree {
        match self {
            LTree::Leaf => LTree::Leaf,
            LTree::Node(l, ch) => {
                let mut out = Vec::new();
                for c in ch {
                    match c {
                        LTree::Node(cl, _) if drop(*cl) => {
                            if let LTree::Node(_, inner) = c.splice_levels(drop, relabel) {
                                out.extend(inner);
                            }
                        }
                        _ => out.push(c.splice_levels(drop, relabel)),
                    }
                }
                LTree::Node(relabel(*l), out)
            }
        }
    }

    fn labeled(&self, mu: &OrderedPartition, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        if let LTree::Node(l, ch) = self {
            if let Some(l) = l {
                f.write_str(&part_label(mu.parts()[*l]))?;
            }
            for c in ch {
                c.labeled(mu, f)?;
            }
        }
        f.write_str("]")
    }
}

/// Digits when every element is at most 9, otherwise a braced list.
pub(crate) fn part_label(part: Subset) -> String {
    let items: Vec<usize> = subset::elements(part).map(|i| i + 1).collect();
    if items.iter().all(|&i| i <= 9) {
        items.iter().map(|i| i.to_string()).collect()
    } else {
        format!("{{{}}}", items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// A labeled bracket tree: `[` then an optional label (digits or `{a,b}`) then children then `]`.
#[derive(Clone, Debug)]
pub(crate) enum Labeled {
    Leaf,
    Node(Option<Subset>, Vec<Labeled>),
}

pub(crate) fn parse_labeled(text: &str) -> Result<Labeled> {
    fn label(chars: &[char], pos: &mut usize) -> Result<Option<Subset>> {
        let mut part: Subset = 0;
        let mut any = false;
        if chars.get(*pos) == Some(&'{') {
            *pos += 1;
            let mut num = String::new();
            loop {
                match chars.get(*pos) {
                    Some(c) if c.is_ascii_digit() => num.push(*c),
                    Some(';') | Some('}') => {
                        let v: usize = num.parse().map_err(|_| Error::Parse("bad braced label".into()))?;
                        if v == 0 || v > 32 {
                            return Err(Error::Parse(format!("label {v} out of range")));
                        }
                        part |= subset::singleton(v - 1);
                        any = true;
                        num.clear();
                        if chars[*pos] == '}' {
                            *pos += 1;
                            break;
                        }
                    }
                    _ => return Err(Error::Parse("unterminated braced label".into())),
                }
                *pos += 1;
            }
        }
        while let Some(c) = chars.get(*pos).filter(|c| c.is_ascii_digit()) {
            let v = c.to_digit(10).unwrap() as usize;
            if v == 0 {
                return Err(Error::Parse("labels are 1-based".into()));
            }
            part |= subset::singleton(v - 1);
            any = true;
            *pos += 1;
        }
        Ok(any.then_some(part))
    }
    fn node(chars: &[char], pos: &mut usize) -> Result<Labeled> {
        if chars.get(*pos) != Some(&'[') {
            return Err(Error::Parse(format!("expected '[' at {}", *pos)));
        }
        *pos += 1;
        let l = label(chars, pos)?;
        let mut children = Vec::new();
        while chars.get(*pos) == Some(&'[') {
            children.push(node(chars, pos)?);
        }
        if chars.get(*pos) != Some(&']') {
            return Err(Error::Parse(format!("expected ']' at {}", *pos)));
        }
        *pos += 1;
        match (l, children.is_empty()) {
            (None, true) => Ok(Labeled::Leaf),
            (Some(_), true) => Err(Error::Parse("a labeled node needs children".into())),
            (l, false) => Ok(Labeled::Node(l, children)),
        }
    }
    // braced labels use ';' internally since commas are stripped
    let chars: Vec<char> = {
        let mut out = Vec::new();
        let mut depth = 0;
        for c in text.chars().filter(|c| !c.is_whitespace()) {
            match c {
                '{' => {
                    depth += 1;
                    out.push(c)
                }
                '}' => {
                    depth -= 1;
                    out.push(c)
                }
                ',' if depth > 0 => out.push(';'),
                ',' => {}
                _ => out.push(c),
            }
        }
        out
    };
    let mut pos = 0;
    let t = node(&chars, &mut pos)?;
    if pos != chars.len() {
        return Err(Error::Parse(format!("trailing input in {text:?}")));
    }
    Ok(t)
}

impl Labeled {
    pub(crate) fn plane(&self) -> PlaneTree {
        match self {
            Labeled::Leaf => PlaneTree::Leaf,
            Labeled::Node(_, ch) => PlaneTree::Node(ch.iter().map(|c| c.plane()).collect()),
        }
    }

    pub(crate) fn labels(&self, out: &mut Vec<Option<Subset>>) {
        if let Labeled::Node(l, ch) = self {
            out.push(*l);
            for c in ch {
                c.labels(out);
            }
        }
    }
}

/// An `m`-painted `n`-tree `(T, C, μ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PaintedTree {
    m: usize,
    n: usize,
    tree: LTree,
    mu: OrderedPartition,
}

struct Flat {
    shape: Shape,
    level: Vec<Option<usize>>,
}

impl PaintedTree {
    /// Validates a tree, its cuts `C_1, …, C_k` (preorder node indices) and an ordered partition of `[m]`.
    pub fn new(m: usize, tree: PlaneTree, cuts: Vec<Vec<usize>>, mu: OrderedPartition) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidPaintedTree(msg));
        if mu.n() != m {
            return bad(format!("μ partitions [{}], expected [{m}]", mu.n()));
        }
        if cuts.len() != mu.num_parts() {
            return bad(format!("{} cuts but μ has {} parts", cuts.len(), mu.num_parts()));
        }
        let shape = tree.shape();
        let mut level = vec![None; shape.len()];
        for (i, cut) in cuts.iter().enumerate() {
            for &v in cut {
                if v >= shape.len() {
                    return bad(format!("no node {v}"));
                }
                if level[v].is_some() {
                    return bad(format!("node {v} lies on two cuts"));
                }
                level[v] = Some(i);
            }
        }
        // one node of each cut on every root-to-leaf path
        let leaf_parent = leaf_parents(&shape);
        for (i, _) in cuts.iter().enumerate() {
            for &p in &leaf_parent {
                let hits = shape.ancestors(p).iter().filter(|&&a| level[a] == Some(i)).count();
                if hits != 1 {
                    return bad(format!("C_{} is not a cut", i + 1));
                }
            }
        }
        // C_{i+1} strictly inside the stump of C_i
        for i in 0..cuts.len().saturating_sub(1) {
            for &v in &cuts[i + 1] {
                if !cuts[i].iter().any(|&w| w != v && shape.is_ancestor(v, w)) {
                    return bad(format!("C_{} is not below C_{}", i + 2, i + 1));
                }
            }
        }
        for v in 0..shape.len() {
            if shape.degree(v) == 1 && level[v].is_none() {
                return bad(format!("unary node {v} is on no cut"));
            }
        }
        if shape.is_empty() && m > 0 {
            return bad("a painted tree with m > 0 needs nodes".into());
        }
        let n = tree.n();
        let t = LTree::from_plane(&tree, &level, &mut 0);
        Ok(PaintedTree { m, n, tree: t, mu })
    }

    fn from_parts(m: usize, tree: LTree, mu: OrderedPartition) -> Self {
        let n = tree.plane().n();
        PaintedTree { m, n, tree, mu }
    }

    /// The bracket notation of the figures, e.g. `[3[[1[2[]]][1[2[]]]]]`: a node's label is the
    /// part of `μ` naming its cut.
    pub fn parse(m: usize, text: &str) -> Result<Self> {
        let lab = parse_labeled(text)?;
        let tree = lab.plane();
        let shape = tree.shape();
        let mut labels = Vec::new();
        lab.labels(&mut labels);
        let mut groups: Vec<(Subset, Vec<usize>)> = Vec::new();
        for (v, l) in labels.iter().enumerate() {
            if let Some(l) = l {
                match groups.iter_mut().find(|(g, _)| g == l) {
                    Some((_, nodes)) => nodes.push(v),
                    None => groups.push((*l, vec![v])),
                }
            }
        }
        // leaf-most cut first: a later cut has a node strictly above some node of an earlier one
        let below = |a: &[usize], b: &[usize]| b.iter().any(|&x| a.iter().any(|&y| x != y && shape.is_ancestor(x, y)));
        let mut order: Vec<usize> = (0..groups.len()).collect();
        order.sort_by(|&a, &b| {
            if below(&groups[a].1, &groups[b].1) {
                std::cmp::Ordering::Less
            } else if below(&groups[b].1, &groups[a].1) {
                std::cmp::Ordering::Greater
            } else {
                std::cmp::Ordering::Equal
            }
        });
        let parts: Vec<Subset> = order.iter().map(|&g| groups[g].0).collect();
        let cuts: Vec<Vec<usize>> = order.iter().map(|&g| groups[g].1.clone()).collect();
        let mu = OrderedPartition::from_masks(m, parts).map_err(|e| Error::InvalidPaintedTree(e.to_string()))?;
        PaintedTree::new(m, tree, cuts, mu)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mu(&self) -> &OrderedPartition {
        &self.mu
    }

    pub fn tree(&self) -> PlaneTree {
        self.tree.plane()
    }

    /// Cuts as sorted preorder node indices, `C_1` first.
    pub fn cuts(&self) -> Vec<Vec<usize>> {
        let flat = self.flat();
        let mut cuts = vec![Vec::new(); self.mu.num_parts()];
        for (v, l) in flat.level.iter().enumerate() {
            if let Some(l) = l {
                cuts[*l].push(v);
            }
        }
        cuts
    }

    fn flat(&self) -> Flat {
        let mut level = Vec::new();
        self.tree.levels(&mut level);
        Flat { shape: self.tree.plane().shape(), level }
    }

    /// `m + n − |T| − |C| + |⋃C|`.
    pub fn rank(&self) -> usize {
        self.m + self.n + self.tree.cut_nodes() - self.tree.size() - self.mu.num_parts()
    }

    pub fn is_binary(&self) -> bool {
        self.rank() == 0
    }

    /// `i ≼ j` when a node carrying `j` lies weakly rootwards of a node carrying `i`; a node
    /// carries its cut's part of `μ` and its inorder labels shifted by `m`.
    pub fn preposet(&self) -> Preposet {
        let flat = self.flat();
        let inorder = flat.shape.inorder_labels();
        let node_labels: Vec<Subset> = (0..flat.shape.len())
            .map(|v| {
                let cut = flat.level[v].map_or(0, |l| self.mu.parts()[l]);
                cut | (inorder[v] << self.m)
            })
            .collect();
        let total = self.m + self.n;
        let mut rows = vec![0 as Subset; total];
        for v in 0..flat.shape.len() {
            let above = flat.shape.ancestors(v).iter().fold(0, |acc, &a| acc | node_labels[a]);
            for e in subset::elements(node_labels[v]) {
                rows[e] |= above;
            }
        }
        for (e, row) in rows.iter_mut().enumerate() {
            *row |= subset::singleton(e);
        }
        Preposet::from_rows(total, rows)
    }

    /// All covers in the deletion poset: free children, free parents and twin cuts.
    pub fn deletions(&self) -> Vec<PaintedTree> {
        let flat = self.flat();
        let mut out = Vec::new();
        let nodes = flat.shape.len();
        // free child
        for v in 1..nodes {
            if flat.level[v].is_none() {
                let mut marks = vec![false; nodes];
                marks[v] = true;
                out.push(Self::from_parts(self.m, splice_marked(&self.tree, &marks), self.mu.clone()));
            }
        }
        // free parent
        for p in 0..nodes {
            if flat.level[p].is_some() {
                continue;
            }
            let kids = &flat.shape.children[p];
            let levels: Vec<Option<usize>> = kids
                .iter()
                .map(|s| match s {
                    Slot::Node(c) => flat.level[*c],
                    Slot::Leaf(_) => None,
                })
                .collect();
            if let Some(&Some(i)) = levels.first() {
                if levels.iter().all(|&l| l == Some(i)) {
                    let t = self.tree.rewrite_at(p, &mut |node| match node {
                        LTree::Node(_, ch) => {
                            let merged = ch
                                .iter()
                                .flat_map(|c| match c {
                                    LTree::Node(_, inner) => inner.clone(),
                                    LTree::Leaf => unreachable!(),
                                })
                                .collect();
                            LTree::Node(Some(i), merged)
                        }
                        LTree::Leaf => unreachable!(),
                    });
                    out.push(Self::from_parts(self.m, t, self.mu.clone()));
                }
            }
        }
        // twin cuts
        for i in 0..self.mu.num_parts().saturating_sub(1) {
            if twin_levels(&flat, i) {
                let t = self.tree.splice_levels(&|l| l == Some(i), &|l| l.map(|l| if l > i { l - 1 } else { l }));
                let mut parts = self.mu.parts().to_vec();
                let merged = parts[i] | parts[i + 1];
                parts.splice(i..=i + 1, [merged]);
                let mu = OrderedPartition::from_masks(self.m, parts).expect("merged parts");
                out.push(Self::from_parts(self.m, t, mu));
            }
        }
        out
    }

    /// Right rotations of a binary painted tree: edge rotations, node–cut sweeps and twin cut swaps.
    pub fn rotations(&self) -> Result<Vec<PaintedTree>> {
        if !self.is_binary() {
            return Err(Error::InvalidPaintedTree("rotations need a binary painted tree".into()));
        }
        let flat = self.flat();
        let mut out = Vec::new();
        for v in 0..flat.shape.len() {
            if flat.level[v].is_some() {
                continue;
            }
            // edge rotation ((A B) C) -> (A (B C)) between binary nodes
            if let Slot::Node(w) = flat.shape.children[v][0] {
                if flat.level[w].is_none() {
                    let t = self.tree.rewrite_at(v, &mut |node| match node {
                        LTree::Node(None, ch) => match &ch[..] {
                            [LTree::Node(None, inner), c] => {
                                LTree::Node(None, vec![inner[0].clone(), LTree::Node(None, vec![inner[1].clone(), c.clone()])])
                            }
                            _ => unreachable!(),
                        },
                        _ => unreachable!(),
                    });
                    out.push(Self::from_parts(self.m, t, self.mu.clone()));
                }
            }
            // sweep a cut through a binary node towards the root
            let kids: Vec<Option<usize>> = flat.shape.children[v]
                .iter()
                .map(|s| match s {
                    Slot::Node(c) => flat.level[*c],
                    Slot::Leaf(_) => None,
                })
                .collect();
            if let [Some(a), Some(b)] = kids[..] {
                if a == b {
                    let t = self.tree.rewrite_at(v, &mut |node| match node {
                        LTree::Node(None, ch) => match &ch[..] {
                            [LTree::Node(_, x), LTree::Node(_, y)] => {
                                LTree::Node(Some(a), vec![LTree::Node(None, vec![x[0].clone(), y[0].clone()])])
                            }
                            _ => unreachable!(),
                        },
                        _ => unreachable!(),
                    });
                    out.push(Self::from_parts(self.m, t, self.mu.clone()));
                }
            }
        }
        for i in 0..self.mu.num_parts().saturating_sub(1) {
            let parts = self.mu.parts();
            if parts[i] < parts[i + 1] && twin_levels(&flat, i) {
                let mut swapped = parts.to_vec();
                swapped.swap(i, i + 1);
                let mu = OrderedPartition::from_masks(self.m, swapped).expect("swapped parts");
                out.push(Self::from_parts(self.m, self.tree.clone(), mu));
            }
        }
        Ok(out)
    }

    /// Vertex of `Perm(m) ⧢ Asso(n)`: a cut label counts binary nodes and cuts weakly on the leaf
    /// side of its cut; a node counts the cuts on its leaf side plus the product of its left and
    /// right leaf counts.
    pub fn vertex_coordinates(&self) -> Result<Vec<i64>> {
        if !self.is_binary() {
            return Err(Error::InvalidPaintedTree("vertex coordinates need a binary painted tree".into()));
        }
        let flat = self.flat();
        let shape = &flat.shape;
        let inorder = shape.inorder_labels();
        let mut x = vec![0i64; self.m + self.n];
        // levels present strictly inside each subtree, and binary nodes in each subtree
        let nodes = shape.len();
        let mut levels_below = vec![0u64; nodes];
        let mut binaries = vec![0i64; nodes];
        for v in (0..nodes).rev() {
            for s in &shape.children[v] {
                if let Slot::Node(c) = s {
                    levels_below[v] |= levels_below[*c] | flat.level[*c].map_or(0, |l| 1 << l);
                    binaries[v] += binaries[*c];
                }
            }
            if flat.level[v].is_none() {
                binaries[v] += 1;
            }
        }
        for (i, &part) in self.mu.parts().iter().enumerate() {
            let label = part.trailing_zeros() as usize;
            let below: i64 = (0..nodes).filter(|&v| flat.level[v] == Some(i)).map(|v| binaries[v]).sum();
            x[label] = below + i as i64 + 1;
        }
        for v in 0..nodes {
            if flat.level[v].is_none() {
                let j = inorder[v].trailing_zeros() as usize;
                let (l, r) = (shape.slot_leaves(shape.children[v][0]), shape.slot_leaves(shape.children[v][1]));
                x[self.m + j] = levels_below[v].count_ones() as i64 + (l * r) as i64;
            }
        }
        Ok(x)
    }

    /// The facet `Σ_{A ∪ B} x ≥ C(|A|+1,2) + |A||B| + Σ C(|B_i|+1,2)` of a rank `m+n−2` tree.
    pub fn facet_inequality(&self) -> Result<PaintedFacet> {
        if self.m + self.n < 2 || self.rank() != self.m + self.n - 2 {
            return Err(Error::InvalidPaintedTree("facet inequalities need rank m+n−2".into()));
        }
        let flat = self.flat();
        let shape = &flat.shape;
        let inorder = shape.inorder_labels();
        let root_level = flat.level[0];
        let a: Subset = self
            .mu
            .parts()
            .iter()
            .enumerate()
            .filter(|&(i, _)| root_level != Some(i))
            .fold(0, |acc, (_, &p)| acc | p);
        let blocks: Vec<Subset> = (1..shape.len()).filter(|&v| shape.degree(v) > 1).map(|v| inorder[v] << self.m).collect();
        let b: Subset = blocks.iter().fold(0, |acc, &x| acc | x);
        let (na, nb) = (subset::size(a) as i64, subset::size(b) as i64);
        let tri = |k: i64| k * (k + 1) / 2;
        let bound = tri(na) + na * nb + blocks.iter().map(|&x| tri(subset::size(x) as i64)).sum::<i64>();
        Ok(PaintedFacet { support: a | b, bound, permutahedron_facet: blocks.len() <= 1 })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "n": self.n,
            "tree": self.tree().to_json(),
            "cuts": self.cuts(),
            "mu": self.mu.parts().iter().map(|&p| subset::elements(p).map(|i| i + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("missing field {k}")));
        let m = field("m")?.as_u64().ok_or_else(|| Error::Parse("m must be an integer".into()))? as usize;
        let tree = PlaneTree::from_json(field("tree")?)?;
        let cuts: Vec<Vec<usize>> = serde_json::from_value(field("cuts")?.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mu: Vec<Vec<usize>> = serde_json::from_value(field("mu")?.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mu = OrderedPartition::new(m, &mu.iter().map(|p| p.iter().map(|i| i.wrapping_sub(1)).collect()).collect::<Vec<Vec<usize>>>())?;
        let t = PaintedTree::new(m, tree, cuts, mu)?;
        if let Some(n) = v.get("n").and_then(|n| n.as_u64()) {
            if n as usize != t.n {
                return Err(Error::InvalidPaintedTree(format!("n = {n} does not match the tree")));
            }
        }
        Ok(t)
    }
}

impl fmt::Display for PaintedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tree.labeled(&self.mu, f)
    }
}

/// Facet inequality `Σ_{i ∈ support} x_i ≥ bound` (0-based support).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PaintedFacet {
    pub support: Subset,
    pub bound: i64,
    /// Whether the inequality is also a facet of `Perm(m+n)`.
    pub permutahedron_facet: bool,
}

fn leaf_parents(shape: &Shape) -> Vec<usize> {
    let mut out = vec![0; shape.leaves];
    for (v, ch) in shape.children.iter().enumerate() {
        for s in ch {
            if let Slot::Leaf(l) = s {
                out[*l] = v;
            }
        }
    }
    out
}

/// Nodes of `C_{i+1}` are exactly the parents of the nodes of `C_i`.
fn twin_levels(flat: &Flat, i: usize) -> bool {
    let shape = &flat.shape;
    (0..shape.len()).all(|v| {
        let kids_in_i = shape.children[v].iter().all(|s| matches!(s, Slot::Node(c) if flat.level[*c] == Some(i)));
        let is_next = flat.level[v] == Some(i + 1);
        let parent_ok = flat.level[v] != Some(i) || shape.parent[v].is_some_and(|p| flat.level[p] == Some(i + 1));
        kids_in_i == is_next && parent_ok
    })
}

fn splice_marked(t: &LTree, marks: &[bool]) -> LTree {
    fn go(t: &LTree, next: &mut usize, marks: &[bool]) -> (LTree, bool) {
        match t {
            LTree::Leaf => (LTree::Leaf, false),
            LTree::Node(l, ch) => {
                let id = *next;
                *next += 1;
                let mut out = Vec::new();
                for c in ch {
                    match go(c, next, marks) {
                        (LTree::Node(_, inner), true) => out.extend(inner),
                        (sub, _) => out.push(sub),
                    }
                }
                (LTree::Node(*l, out), marks[id])
            }
        }
    }
    go(t, &mut 0, marks).0
}

/// Trees with `k` cuts (levels `0..k`) and `leaves` leaves, memoized.
struct Generator {
    memo: HashMap<(usize, usize), Vec<LTree>>,
}

impl Generator {
    fn new() -> Self {
        Generator { memo: HashMap::new() }
    }

    fn products(&mut self, k: usize, comp: &[usize]) -> Vec<Vec<LTree>> {
        let mut partial: Vec<Vec<LTree>> = vec![Vec::new()];
        for &part in comp {
            let options = self.gen(k, part);
            let mut next = Vec::with_capacity(partial.len() * options.len());
            for prefix in &partial {
                for t in &options {
                    let mut p = prefix.clone();
                    p.push(t.clone());
                    next.push(p);
                }
            }
            partial = next;
        }
        partial
    }

    fn gen(&mut self, k: usize, leaves: usize) -> Vec<LTree> {
        if let Some(v) = self.memo.get(&(k, leaves)) {
            return v.clone();
        }
        let mut out = Vec::new();
        if k == 0 {
            out = trees::enumerate_schroder(leaves - 1).iter().map(|t| LTree::from_plane(t, &vec![None; t.size()], &mut 0)).collect();
        } else {
            // the root lies on the lowest cut
            for degree in 1..=leaves {
                for comp in trees::compositions(leaves, degree) {
                    for kids in self.products(k - 1, &comp) {
                        out.push(LTree::Node(Some(k - 1), kids));
                    }
                }
            }
            // or the root is a free node of degree at least two below it
            for degree in 2..=leaves {
                for comp in trees::compositions(leaves, degree) {
                    for kids in self.products(k, &comp) {
                        out.push(LTree::Node(None, kids));
                    }
                }
            }
        }
        self.memo.insert((k, leaves), out.clone());
        out
    }
}

/// All `m`-painted `n`-trees (of a given rank when asked), by number of cuts, then tree, then `μ`.
pub fn enumerate(m: usize, n: usize, rank: Option<usize>) -> Vec<PaintedTree> {
    let mut gen = Generator::new();
    let mut out = Vec::new();
    let ks: Vec<usize> = if m == 0 { vec![0] } else { (1..=m).collect() };
    for k in ks {
        let shapes = gen.gen(k, n + 1);
        let partitions = if m == 0 {
            vec![OrderedPartition::from_masks(0, Vec::new()).expect("empty partition")]
        } else {
            OrderedPartition::enumerate_with_parts(m, k)
        };
        let chunk: Vec<PaintedTree> = shapes
            .par_iter()
            .flat_map_iter(|t| {
                let r = m + n + t.cut_nodes() - t.size() - k;
                let keep = rank.is_none_or(|want| want == r);
                let partitions = &partitions;
                partitions
                    .iter()
                    .filter(move |_| keep)
                    .map(move |mu| PaintedTree { m, n, tree: t.clone(), mu: mu.clone() })
            })
            .collect();
        out.extend(chunk);
    }
    out
}

/// `m! [y^{n+1}] C^{(m+1)}(y)`.
pub fn count_vertices(m: usize, n: usize) -> BigInt {
    genfun::multiplihedron_vertices(m, n)
}

/// `C(n+1, 2) − 1 + 2^{m+n} − 2^n`; zero when `m + n ≤ 1`.
pub fn count_facets(m: usize, n: usize) -> BigInt {
    if m + n <= 1 {
        return BigInt::from(0);
    }
    BigInt::from(n * (n + 1) / 2) - 1 + (BigInt::from(1) << (m + n)) - (BigInt::from(1) << n)
}

/// Face counts by rank `0..=m+n−1`.
pub fn face_poly(m: usize, n: usize) -> Vec<BigInt> {
    genfun::pt_face_series(m, n)
}

pub fn count_faces(m: usize, n: usize) -> BigInt {
    face_poly(m, n).iter().sum()
}

/// Supports `I` with `Perm(m) ⧢ Asso(n) = Σ_I Δ_I`: every `I` with `|I| ≤ 2` meeting `[m]`,
/// and every interval of `[n]` shifted by `m`.
pub fn minkowski_summands(m: usize, n: usize) -> Vec<Subset> {
    let mut out = Vec::new();
    for i in 0..m {
        out.push(subset::singleton(i));
        for j in i + 1..m + n {
            out.push(subset::singleton(i) | subset::singleton(j));
        }
    }
    for i in 0..n {
        for j in i..n {
            out.push((subset::full(j + 1) & !subset::full(i)) << m);
        }
    }
    out
}

/// Stump of a cut: every node weakly rootwards of a node of the cut.
pub fn stump_of_cut(t: &PlaneTree, cut: &[usize]) -> Result<Vec<usize>> {
    let shape = t.shape();
    check_cut(&shape, cut)?;
    let mut stump: Vec<usize> = cut.iter().flat_map(|&v| shape.ancestors(v)).collect();
    stump.sort_unstable();
    stump.dedup();
    Ok(stump)
}

/// Cut of a stump: its nodes with no child in it.
pub fn cut_of_stump(t: &PlaneTree, stump: &[usize]) -> Result<Vec<usize>> {
    let shape = t.shape();
    let inside = |v: usize| stump.contains(&v);
    if shape.is_empty() || !inside(0) {
        return Err(Error::InvalidTree("a stump contains the root".into()));
    }
    for &v in stump {
        if v >= shape.len() {
            return Err(Error::InvalidTree(format!("no node {v}")));
        }
        if let Some(p) = shape.parent[v] {
            if !inside(p) {
                return Err(Error::InvalidTree("a stump is closed under parents".into()));
            }
        }
        let kids: Vec<bool> = shape.children[v].iter().map(|s| matches!(s, Slot::Node(c) if inside(*c))).collect();
        if kids.iter().any(|&b| b) && !kids.iter().all(|&b| b) {
            return Err(Error::InvalidTree("a stump holds all or none of a node's children".into()));
        }
    }
    let mut cut: Vec<usize> = stump
        .iter()
        .copied()
        .filter(|&v| !shape.children[v].iter().any(|s| matches!(s, Slot::Node(c) if inside(*c))))
        .collect();
    cut.sort_unstable();
    cut.dedup();
    Ok(cut)
}

fn check_cut(shape: &Shape, cut: &[usize]) -> Result<()> {
    if cut.iter().any(|&v| v >= shape.len()) {
        return Err(Error::InvalidTree("cut node out of range".into()));
    }
    for p in leaf_parents(shape) {
        if shape.ancestors(p).iter().filter(|a| cut.contains(a)).count() != 1 {
            return Err(Error::InvalidTree("not a cut".into()));
        }
    }
    Ok(())
}
