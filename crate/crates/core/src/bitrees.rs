//! Bitrees: an up Schröder tree and a down Schröder tree with an ordered partition of their
//! nodes, modelling the faces of `Ossa(m) ⧢ Asso(n)`.
//!
//! Parts are indexed from the bottom of the drawing. The root of the up tree sits in the
//! earliest part it meets and the root of the down tree in the latest.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::combinatorics::Preposet;
use crate::genfun::{self, Letter};
use crate::lattice::{FinitePoset, LatticeVerdict};
use crate::painted::{parse_labeled, part_label, Labeled};
use crate::subset::{self, Subset};
use crate::trees::{self, PlaneTree, Shape, Slot};
use crate::{Error, Result};

/// A tree whose internal nodes carry their part index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum PTree {
    Leaf,
    Node(usize, Vec<PTree>),
}

impl PTree {
    fn build(t: &PlaneTree, parts: &[usize], next: &mut usize) -> PTree {
        match t {
            PlaneTree::Leaf => PTree::Leaf,
            PlaneTree::Node(ch) => {
                let p = parts[*next];
                *next += 1;
                PTree::Node(p, ch.iter().map(|c| PTree::build(c, parts, next)).collect())
            }
        }
    }

    fn uniform(t: &PlaneTree, part: usize) -> PTree {
        match t {
            PlaneTree::Leaf => PTree::Leaf,
            PlaneTree::Node(ch) => PTree::Node(part, ch.iter().map(|c| PTree::uniform(c, part)).collect()),
        }
    }

    fn plane(&self) -> PlaneTree {
        match self {
            PTree::Leaf => PlaneTree::Leaf,
            PTree::Node(_, ch) => PlaneTree::Node(ch.iter().map(|c| c.plane()).collect()),
        }
    }

    fn parts(&self, out: &mut Vec<usize>) {
        if let PTree::Node(p, ch) = self {
            out.push(*p);
            for c in ch {
                c.parts(out);
            }
        }
    }

    fn leaves(&self) -> usize {
        match self {
            PTree::Leaf => 1,
            PTree::Node(_, ch) => ch.iter().map(|c| c.leaves()).sum(),
        }
    }

    fn map_parts(&self, f: &dyn Fn(usize, usize) -> usize) -> PTree {
        fn go(t: &PTree, next: &mut usize, f: &dyn Fn(usize, usize) -> usize) -> PTree {
            match t {
                PTree::Leaf => PTree::Leaf,
                PTree::Node(p, ch) => {
                    let id = *next;
                    *next += 1;
                    let p = f(id, *p);
                    PTree::Node(p, ch.iter().map(|c| go(c, next, f)).collect())
                }
            }
        }
        go(self, &mut 0, f)
    }

    /// Contract every flagged non-root node into its parent.
    fn contract(&self, drop: &[bool]) -> PTree {
        fn go(t: &PTree, next: &mut usize, drop: &[bool]) -> (PTree, bool) {
            match t {
                PTree::Leaf => (PTree::Leaf, false),
                PTree::Node(p, ch) => {
                    let id = *next;
                    *next += 1;
                    let mut out = Vec::new();
                    for c in ch {
                        match go(c, next, drop) {
                            (PTree::Node(_, inner), true) => out.extend(inner),
                            (sub, _) => out.push(sub),
                        }
                    }
                    (PTree::Node(*p, out), drop[id])
                }
            }
        }
        go(self, &mut 0, drop).0
    }

    /// Replace the leaves, in order, by the given subtrees.
    fn graft(&self, with: &[PTree], next: &mut usize) -> PTree {
        match self {
            PTree::Leaf => {
                *next += 1;
                with[*next - 1].clone()
            }
            PTree::Node(p, ch) => PTree::Node(*p, ch.iter().map(|c| c.graft(with, next)).collect()),
        }
    }

    /// Rotate the edge between node `v` and its child `c` (both preorder indices).
    fn rotate(&self, v: usize, c: usize) -> PTree {
        fn go(t: &PTree, v: usize, c: usize, next: &mut usize) -> PTree {
            match t {
                PTree::Leaf => PTree::Leaf,
                PTree::Node(p, ch) => {
                    let id = *next;
                    *next += 1;
                    if id != v {
                        return PTree::Node(*p, ch.iter().map(|x| go(x, v, c, next)).collect());
                    }
                    let (a, b) = (&ch[0], &ch[1]);
                    if let PTree::Node(q, inner) = a {
                        if id + 1 == c {
                            // (X Y) Z -> X (Y Z)
                            return PTree::Node(*q, vec![inner[0].clone(), PTree::Node(*p, vec![inner[1].clone(), b.clone()])]);
                        }
                    }
                    let PTree::Node(q, inner) = b else { unreachable!("rotation along a leaf") };
                    // X (Y Z) -> (X Y) Z
                    PTree::Node(*q, vec![PTree::Node(*p, vec![a.clone(), inner[0].clone()]), inner[1].clone()])
                }
            }
        }
        go(self, v, c, &mut 0)
    }
}

struct Flat {
    shape: Shape,
    part: Vec<usize>,
}

impl Flat {
    fn of(t: &PTree) -> Flat {
        let mut part = Vec::new();
        t.parts(&mut part);
        Flat { shape: t.plane().shape(), part }
    }

    fn node_children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.shape.children[v].iter().filter_map(|s| match s {
            Slot::Node(c) => Some(*c),
            Slot::Leaf(_) => None,
        })
    }
}

/// A violated condition of the bitree definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A node sits in a part on the wrong side of its parent's part.
    ParentOrder { tree: char, node: usize },
    /// Two consecutive parts lie within the same tree.
    SameTypeNeighbours { part: usize },
    /// A mixed part holds a node and one of its ancestors.
    MixedPath { part: usize },
}

impl Violation {
    /// 1, 2 or 3, following the order in which the conditions are usually listed.
    pub fn clause(&self) -> usize {
        match self {
            Violation::ParentOrder { .. } => 1,
            Violation::SameTypeNeighbours { .. } => 2,
            Violation::MixedPath { .. } => 3,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ParentOrder { tree, node } => {
                write!(f, "clause 1: node {tree}{node} is placed on the wrong side of its parent")
            }
            Violation::SameTypeNeighbours { part } => {
                write!(f, "clause 2: parts {} and {} lie in the same tree", part + 1, part + 2)
            }
            Violation::MixedPath { part } => write!(f, "clause 3: mixed part {} contains a path", part + 1),
        }
    }
}

/// The word of part types `u`, `d`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeWord(pub Vec<char>);

impl TypeWord {
    fn of(letters: &[Letter]) -> TypeWord {
        TypeWord(letters.iter().map(|l| l.as_char()).collect())
    }

    pub fn letters(&self) -> Vec<Letter> {
        self.0
            .iter()
            .map(|c| match c {
                'u' => Letter::U,
                'd' => Letter::D,
                _ => Letter::B,
            })
            .collect()
    }

    pub fn mixed(&self) -> usize {
        self.0.iter().filter(|&&c| c == 'b').count()
    }
}

impl fmt::Display for TypeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.iter().collect::<String>())
    }
}

/// An `(m,n)`-bitree `(U, D, μ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bitree {
    m: usize,
    n: usize,
    up: PTree,
    down: PTree,
    parts: usize,
}

/// `Σ_{i∈S} x_i ≥ bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitreeFacet {
    pub support: Subset,
    pub bound: i64,
    /// Whether the same inequality defines a facet of the permutahedron.
    pub permutahedron_facet: bool,
}

/// Which deletion produced a cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DeletionMove {
    /// Contract a node into its parent in the same part.
    NodeSamePart,
    /// Contract a node of a pure part into its parent in the neighbouring mixed part.
    NodeBelowMixed,
    /// A node of a pure part moves into the neighbouring mixed part holding some of its
    /// children, and those children are contracted into it.
    NodeAbsorbsParent,
    /// Open a mixed part between a `u` part and a `d` part with one node from each.
    NewMixedPart,
    /// Move a node from a pure part into a neighbouring mixed part.
    NodeIntoMixed,
    /// Merge two consecutive mixed parts.
    TwinMerge,
}

fn kinds(up: &Flat, down: &Flat, parts: usize) -> Vec<Letter> {
    let mut has = vec![(false, false); parts];
    for &p in &up.part {
        has[p].0 = true;
    }
    for &p in &down.part {
        has[p].1 = true;
    }
    has.iter()
        .map(|h| match h {
            (true, true) => Letter::B,
            (true, false) => Letter::U,
            _ => Letter::D,
        })
        .collect()
}

fn violations(up: &Flat, down: &Flat, parts: usize) -> Vec<Violation> {
    let mut out = Vec::new();
    for v in 0..up.shape.len() {
        if let Some(p) = up.shape.parent[v] {
            if up.part[v] < up.part[p] {
                out.push(Violation::ParentOrder { tree: 'u', node: v });
            }
        }
    }
    for v in 0..down.shape.len() {
        if let Some(p) = down.shape.parent[v] {
            if down.part[v] > down.part[p] {
                out.push(Violation::ParentOrder { tree: 'd', node: v });
            }
        }
    }
    let kind = kinds(up, down, parts);
    for i in 1..parts {
        if kind[i] == kind[i - 1] && kind[i] != Letter::B {
            out.push(Violation::SameTypeNeighbours { part: i - 1 });
        }
    }
    for (i, k) in kind.iter().enumerate() {
        if *k != Letter::B {
            continue;
        }
        let path = |f: &Flat| {
            (0..f.shape.len()).any(|v| f.part[v] == i && f.shape.ancestors(v)[1..].iter().any(|&a| f.part[a] == i))
        };
        if path(up) || path(down) {
            out.push(Violation::MixedPath { part: i });
        }
    }
    out
}

fn check_structure(up: &PlaneTree, down: &PlaneTree, up_part: &[usize], down_part: &[usize]) -> Result<usize> {
    if !up.is_schroder() || !down.is_schroder() {
        return Err(Error::InvalidBitree("both trees must be Schröder trees".into()));
    }
    if up.size() != up_part.len() || down.size() != down_part.len() {
        return Err(Error::InvalidBitree("one part index per internal node is required".into()));
    }
    let used: BTreeSet<usize> = up_part.iter().chain(down_part).copied().collect();
    let parts = used.len();
    if used.iter().copied().ne(0..parts) {
        return Err(Error::InvalidBitree("part indices must be 0..k with no gaps".into()));
    }
    Ok(parts)
}

/// The violated clauses of the definition for the given trees and part indices (preorder).
/// An empty list means the data form a bitree.
pub fn validate(up: &PlaneTree, down: &PlaneTree, up_part: &[usize], down_part: &[usize]) -> Result<Vec<Violation>> {
    let parts = check_structure(up, down, up_part, down_part)?;
    let u = PTree::build(up, up_part, &mut 0);
    let d = PTree::build(down, down_part, &mut 0);
    Ok(violations(&Flat::of(&u), &Flat::of(&d), parts))
}

/// Compress part indices and keep the result if it is a bitree. With `merge`, consecutive
/// parts within the same tree are fused first.
fn assemble(m: usize, n: usize, up: PTree, down: PTree, merge: bool) -> Option<Bitree> {
    let mut used = Vec::new();
    up.parts(&mut used);
    down.parts(&mut used);
    used.sort_unstable();
    used.dedup();
    let index: HashMap<usize, usize> = used.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut up = up.map_parts(&|_, p| index[&p]);
    let mut down = down.map_parts(&|_, p| index[&p]);
    let mut parts = used.len();
    if merge {
        let kind = kinds(&Flat::of(&up), &Flat::of(&down), parts);
        let mut fused = Vec::with_capacity(parts);
        let mut next = 0;
        for i in 0..parts {
            if i > 0 && !(kind[i] == kind[i - 1] && kind[i] != Letter::B) {
                next += 1;
            }
            fused.push(next);
        }
        up = up.map_parts(&|_, p| fused[p]);
        down = down.map_parts(&|_, p| fused[p]);
        parts = next + 1;
    }
    violations(&Flat::of(&up), &Flat::of(&down), parts).is_empty().then_some(Bitree { m, n, up, down, parts })
}

impl Bitree {
    /// Build from the two trees and the part index of every node (preorder, 0-based parts).
    pub fn new(up: &PlaneTree, down: &PlaneTree, up_part: &[usize], down_part: &[usize]) -> Result<Bitree> {
        let parts = check_structure(up, down, up_part, down_part)?;
        let u = PTree::build(up, up_part, &mut 0);
        let d = PTree::build(down, down_part, &mut 0);
        let bad = violations(&Flat::of(&u), &Flat::of(&d), parts);
        if let Some(v) = bad.first() {
            return Err(Error::InvalidBitree(v.to_string()));
        }
        Ok(Bitree { m: up.n(), n: down.n(), up: u, down: d, parts })
    }

    /// Parse the drawn notation of both trees. Unary nodes are not tree nodes: a labeled one
    /// marks the crossing of the separating line with that number, an unlabeled one is
    /// padding. Lines are numbered from the bottom.
    pub fn parse_figure(up: &str, down: &str) -> Result<Bitree> {
        fn marker(l: &Option<Subset>) -> Result<Option<usize>> {
            match l {
                None => Ok(None),
                Some(s) if subset::size(*s) == 1 => Ok(Some(s.trailing_zeros() as usize + 1)),
                Some(_) => Err(Error::Parse("a line marker carries a single number".into())),
            }
        }
        fn highest(t: &Labeled) -> Result<usize> {
            match t {
                Labeled::Leaf => Ok(0),
                Labeled::Node(l, ch) => {
                    let mut best = marker(l)?.unwrap_or(0);
                    for c in ch {
                        best = best.max(highest(c)?);
                    }
                    Ok(best)
                }
            }
        }
        // `combine` folds the markers met on the way down from the root into a part index
        fn walk(t: &Labeled, acc: usize, combine: &dyn Fn(usize, usize) -> usize, part: &dyn Fn(usize) -> usize) -> Result<PTree> {
            match t {
                Labeled::Leaf => Ok(PTree::Leaf),
                Labeled::Node(l, ch) if ch.len() == 1 => {
                    let acc = match marker(l)? {
                        Some(k) => combine(acc, k),
                        None => acc,
                    };
                    walk(&ch[0], acc, combine, part)
                }
                Labeled::Node(Some(_), _) => Err(Error::Parse("only unary nodes carry line markers".into())),
                Labeled::Node(None, ch) => {
                    let kids = ch.iter().map(|c| walk(c, acc, combine, part)).collect::<Result<Vec<_>>>()?;
                    Ok(PTree::Node(part(acc), kids))
                }
            }
        }
        let (u, d) = (parse_labeled(up)?, parse_labeled(down)?);
        let lines = highest(&u)?.max(highest(&d)?);
        let up = walk(&u, 0, &|a, k| a.max(k), &|a| a)?;
        let down = walk(&d, lines + 1, &|a, k| a.min(k), &|a| a - 1)?;
        let (m, n) = (up.leaves() - 1, down.leaves() - 1);
        let (fu, fd) = (Flat::of(&up), Flat::of(&down));
        let mut used: Vec<usize> = fu.part.iter().chain(&fd.part).copied().collect();
        used.sort_unstable();
        used.dedup();
        let up_part: Vec<usize> = fu.part.iter().map(|p| used.binary_search(p).unwrap()).collect();
        let down_part: Vec<usize> = fd.part.iter().map(|p| used.binary_search(p).unwrap()).collect();
        let b = Bitree::new(&up.plane(), &down.plane(), &up_part, &down_part)?;
        debug_assert_eq!((b.m, b.n), (m, n));
        Ok(b)
    }

    /// Parse `up / down` in the drawn notation (the `Display` format).
    pub fn parse(text: &str) -> Result<Bitree> {
        let (up, down) = text.split_once('/').ok_or_else(|| Error::Parse("expected 'up / down'".into()))?;
        Bitree::parse_figure(up, down)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn up(&self) -> PlaneTree {
        self.up.plane()
    }

    pub fn down(&self) -> PlaneTree {
        self.down.plane()
    }

    pub fn num_parts(&self) -> usize {
        self.parts
    }

    /// Part index of every up node, in preorder.
    pub fn up_parts(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.up.parts(&mut out);
        out
    }

    pub fn down_parts(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.down.parts(&mut out);
        out
    }

    fn flats(&self) -> (Flat, Flat) {
        (Flat::of(&self.up), Flat::of(&self.down))
    }

    fn kinds(&self) -> Vec<Letter> {
        let (u, d) = self.flats();
        kinds(&u, &d, self.parts)
    }

    pub fn type_word(&self) -> TypeWord {
        TypeWord::of(&self.kinds())
    }

    /// `β(μ)`: the sizes of the mixed parts, each minus one.
    pub fn beta(&self) -> usize {
        let (u, d) = self.flats();
        let kind = kinds(&u, &d, self.parts);
        let mut size = vec![0usize; self.parts];
        for &p in u.part.iter().chain(&d.part) {
            size[p] += 1;
        }
        (0..self.parts).filter(|&i| kind[i] == Letter::B).map(|i| size[i] - 1).sum()
    }

    pub fn rank(&self) -> usize {
        let nodes = self.up.plane().size() + self.down.plane().size();
        self.m + self.n + self.beta() - nodes
    }

    pub fn is_binary(&self) -> bool {
        self.rank() == 0
    }

    /// The preposet on `[m+n]`: up labels first, then down labels shifted by `m`. Elements
    /// in an earlier part precede those in a later one, a mixed part is one class, and the
    /// trees add their paths (up towards the leaves, down towards the root).
    pub fn preposet(&self) -> Preposet {
        let (u, d) = self.flats();
        let kind = kinds(&u, &d, self.parts);
        let total = self.m + self.n;
        let ul = u.shape.inorder_labels();
        let dl: Vec<Subset> = d.shape.inorder_labels().iter().map(|&l| l << self.m).collect();
        let mut in_part = vec![0 as Subset; self.parts];
        for v in 0..u.shape.len() {
            in_part[u.part[v]] |= ul[v];
        }
        for v in 0..d.shape.len() {
            in_part[d.part[v]] |= dl[v];
        }
        let later = |p: usize| -> Subset {
            let mut s: Subset = in_part[p + 1..].iter().fold(0, |a, &x| a | x);
            if kind[p] == Letter::B {
                s |= in_part[p];
            }
            s
        };
        let mut rows = vec![0 as Subset; total];
        for v in 0..u.shape.len() {
            let below: Subset = (0..u.shape.len()).filter(|&w| u.shape.is_ancestor(v, w)).fold(0, |a, w| a | ul[w]);
            for i in subset::elements(ul[v]) {
                rows[i] = below | later(u.part[v]);
            }
        }
        for v in 0..d.shape.len() {
            let above: Subset = d.shape.ancestors(v).iter().fold(0, |a, &w| a | dl[w]);
            for i in subset::elements(dl[v]) {
                rows[i] = above | later(d.part[v]);
            }
        }
        Preposet::from_rows(total, rows)
    }

    /// Every cover in the deletion order, with the move producing it.
    pub fn deletion_moves(&self) -> Vec<(DeletionMove, Bitree)> {
        let (u, d) = self.flats();
        let kind = kinds(&u, &d, self.parts);
        let (m, n) = (self.m, self.n);
        let mut out: Vec<(DeletionMove, Bitree)> = Vec::new();
        let mut push = |mv: DeletionMove, up: PTree, down: PTree| {
            if let Some(b) = assemble(m, n, up, down, false) {
                out.push((mv, b));
            }
        };
        let sides = [(Letter::U, &u, &self.up), (Letter::D, &d, &self.down)];
        for &(side, f, t) in &sides {
            let size = f.shape.len();
            let with = |tree: PTree| if side == Letter::U { (tree, self.down.clone()) } else { (self.up.clone(), tree) };
            for v in 1..size {
                let p = f.shape.parent[v].unwrap();
                let (pv, pp) = (f.part[v], f.part[p]);
                let mut drop = vec![false; size];
                drop[v] = true;
                let adjacent = pv.abs_diff(pp) == 1;
                if pv == pp {
                    let (a, b) = with(t.contract(&drop));
                    push(DeletionMove::NodeSamePart, a, b);
                } else if adjacent && kind[pv] == side && kind[pp] == Letter::B {
                    let (a, b) = with(t.contract(&drop));
                    push(DeletionMove::NodeBelowMixed, a, b);
                } else if adjacent && kind[pv] == Letter::B && kind[pp] == side {
                    // once per parent and part: the first child found there stands for all
                    let first = f.node_children(p).find(|&c| f.part[c] == pv) == Some(v);
                    if first {
                        for c in f.node_children(p).filter(|&c| f.part[c] == pv) {
                            drop[c] = true;
                        }
                        let moved = t.map_parts(&|id, q| if id == p { pv } else { q });
                        let (a, b) = with(moved.contract(&drop));
                        push(DeletionMove::NodeAbsorbsParent, a, b);
                    }
                }
            }
            // a node of a pure part joins a neighbouring mixed part
            for v in 0..size {
                let i = f.part[v];
                if kind[i] != side {
                    continue;
                }
                for j in [i.wrapping_sub(1), i + 1] {
                    if j < self.parts && kind[j] == Letter::B {
                        let (a, b) = with(t.map_parts(&|id, q| if id == v { j } else { q }));
                        push(DeletionMove::NodeIntoMixed, a, b);
                    }
                }
            }
        }
        for i in 0..self.parts.saturating_sub(1) {
            let (ki, kj) = (kind[i], kind[i + 1]);
            if (ki == Letter::U && kj == Letter::D) || (ki == Letter::D && kj == Letter::U) {
                let (first, second) = if ki == Letter::U { (&u, &d) } else { (&d, &u) };
                for x in (0..first.shape.len()).filter(|&x| first.part[x] == i) {
                    for y in (0..second.shape.len()).filter(|&y| second.part[y] == i + 1) {
                        let spread = |t: &PTree, pick: usize| t.map_parts(&|id, q| if id == pick { 2 * i + 1 } else { 2 * q });
                        let (tx, ty) = if ki == Letter::U { (&self.up, &self.down) } else { (&self.down, &self.up) };
                        let (a, b) = (spread(tx, x), spread(ty, y));
                        let (up, down) = if ki == Letter::U { (a, b) } else { (b, a) };
                        push(DeletionMove::NewMixedPart, up, down);
                    }
                }
            }
            if ki == Letter::B && kj == Letter::B {
                let merge = |f: &Flat, t: &PTree| {
                    let inside = |q: usize| q == i || q == i + 1;
                    let drop: Vec<bool> =
                        (0..f.shape.len()).map(|v| f.shape.parent[v].is_some_and(|p| inside(f.part[v]) && inside(f.part[p]))).collect();
                    t.map_parts(&|_, q| if q == i + 1 { i } else { q }).contract(&drop)
                };
                push(DeletionMove::TwinMerge, merge(&u, &self.up), merge(&d, &self.down));
            }
        }
        out.sort();
        out.dedup_by(|a, b| a.1 == b.1);
        out
    }

    /// The bitrees covering this one in the deletion order.
    pub fn deletions(&self) -> Vec<Bitree> {
        let mut out: Vec<Bitree> = self.deletion_moves().into_iter().map(|(_, b)| b).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Right rotations of a binary bitree: edge rotations inside a part, and the twin move
    /// sending one node of a `u` part and one of the following `d` part past each other.
    pub fn rotations(&self) -> Result<Vec<Bitree>> {
        if !self.is_binary() {
            return Err(Error::InvalidBitree("rotations need a binary bitree".into()));
        }
        let (u, d) = self.flats();
        let kind = kinds(&u, &d, self.parts);
        let mut out = Vec::new();
        // the up tree rotates leftwards, the down tree rightwards
        for (f, t, left_child) in [(&u, &self.up, false), (&d, &self.down, true)] {
            for v in 0..f.shape.len() {
                let slot = f.shape.children[v][if left_child { 0 } else { 1 }];
                if let Slot::Node(c) = slot {
                    if f.part[c] == f.part[v] {
                        let r = t.rotate(v, c);
                        let (up, down) = if left_child { (self.up.clone(), r) } else { (r, self.down.clone()) };
                        out.extend(assemble(self.m, self.n, up, down, false));
                    }
                }
            }
        }
        for i in 0..self.parts.saturating_sub(1) {
            if kind[i] != Letter::U || kind[i + 1] != Letter::D {
                continue;
            }
            let free = |f: &Flat, x: usize, part: usize| f.part[x] == part && f.node_children(x).all(|c| f.part[c] != part);
            for x in (0..u.shape.len()).filter(|&x| free(&u, x, i)) {
                for y in (0..d.shape.len()).filter(|&y| free(&d, y, i + 1)) {
                    let up = self.up.map_parts(&|id, q| if id == x { 3 * i + 2 } else { 3 * q });
                    let down = self.down.map_parts(&|id, q| if id == y { 3 * i + 1 } else { 3 * q });
                    out.extend(assemble(self.m, self.n, up, down, true));
                }
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Vertex of `Ossa(m) ⧢ Asso(n)`. An up node labeled `i` gets `m+1 − ℓr` plus the number
    /// of down nodes in earlier parts; a down node gets `ℓr` plus the number of up nodes in
    /// earlier parts. `ℓ` and `r` count the leaves left and right of the node.
    pub fn vertex_coordinates(&self) -> Result<Vec<i64>> {
        if !self.is_binary() {
            return Err(Error::InvalidBitree("vertex coordinates need a binary bitree".into()));
        }
        let (u, d) = self.flats();
        let mut x = vec![0i64; self.m + self.n];
        let lr = |s: &Shape, v: usize| (s.slot_leaves(s.children[v][0]) * s.slot_leaves(s.children[v][1])) as i64;
        let earlier = |f: &Flat, part: usize| f.part.iter().filter(|&&q| q < part).count() as i64;
        let ul = u.shape.inorder_labels();
        for v in 0..u.shape.len() {
            let i = ul[v].trailing_zeros() as usize;
            x[i] = self.m as i64 + 1 - lr(&u.shape, v) + earlier(&d, u.part[v]);
        }
        let dl = d.shape.inorder_labels();
        for v in 0..d.shape.len() {
            let j = dl[v].trailing_zeros() as usize;
            x[self.m + j] = lr(&d.shape, v) + earlier(&u, d.part[v]);
        }
        Ok(x)
    }

    /// The facet of a rank `m+n−2` bitree. Its preposet has two classes and `S` is the lower
    /// one. With `A_1, …, A_k` the labels of the up nodes outside `S` and `B_1, …, B_ℓ` those
    /// of the down nodes inside `S`, `S = ([m] ∖ A) ∪ B` and the bound is
    /// `C(m+1,2) − |A|(m+1) + Σ C(|A_i|+1,2) + (m−|A|)|B| + Σ C(|B_j|+1,2)`.
    pub fn facet_inequality(&self) -> Result<BitreeFacet> {
        if self.m + self.n < 2 || self.rank() != self.m + self.n - 2 {
            return Err(Error::InvalidBitree("facet inequalities need a bitree of rank m+n−2".into()));
        }
        let pre = self.preposet();
        let lower = pre.classes().into_iter().find(|&c| pre.rows()[c.trailing_zeros() as usize] != c);
        let lower = lower.expect("a facet preposet has a lower class");
        let (u, d) = self.flats();
        let tri = |k: usize| (k * (k + 1) / 2) as i64;
        let ul = u.shape.inorder_labels();
        let dl: Vec<Subset> = d.shape.inorder_labels().iter().map(|&l| l << self.m).collect();
        let a: Vec<Subset> = ul.into_iter().filter(|&l| l & lower == 0).collect();
        let b: Vec<Subset> = dl.into_iter().filter(|&l| l & !lower == 0).collect();
        let a_all = a.iter().fold(0, |s, &x| s | x);
        let b_all = b.iter().fold(0, |s, &x| s | x);
        let (na, nb) = (subset::size(a_all) as i64, subset::size(b_all) as i64);
        let m = self.m as i64;
        let bound = tri(self.m) - na * (m + 1)
            + a.iter().map(|&s| tri(subset::size(s))).sum::<i64>()
            + (m - na) * nb
            + b.iter().map(|&s| tri(subset::size(s))).sum::<i64>();
        let support = (subset::full(self.m) & !a_all) | b_all;
        debug_assert_eq!(support, lower);
        Ok(BitreeFacet { support, bound, permutahedron_facet: a.len() <= 1 && b.len() <= 1 })
    }

    /// Node ids are `u<preorder>` and `d<preorder>`.
    pub fn to_json(&self) -> Value {
        let (u, d) = self.flats();
        let mut mu: Vec<Vec<String>> = vec![Vec::new(); self.parts];
        for (v, &p) in u.part.iter().enumerate() {
            mu[p].push(format!("u{v}"));
        }
        for (v, &p) in d.part.iter().enumerate() {
            mu[p].push(format!("d{v}"));
        }
        json!({
            "m": self.m,
            "n": self.n,
            "up": self.up.plane().to_json(),
            "down": self.down.plane().to_json(),
            "mu": mu,
        })
    }

    pub fn from_json(v: &Value) -> Result<Bitree> {
        let field = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("missing field {k:?}")));
        let up = PlaneTree::from_json(field("up")?)?;
        let down = PlaneTree::from_json(field("down")?)?;
        let mut up_part = vec![usize::MAX; up.size()];
        let mut down_part = vec![usize::MAX; down.size()];
        let mu = field("mu")?.as_array().ok_or_else(|| Error::Parse("mu must be a list".into()))?;
        for (p, part) in mu.iter().enumerate() {
            let part = part.as_array().ok_or_else(|| Error::Parse("each part must be a list".into()))?;
            for id in part {
                let id = id.as_str().ok_or_else(|| Error::Parse("node ids are strings".into()))?;
                let (slots, rest) = match id.split_at_checked(1) {
                    Some(("u", rest)) => (&mut up_part, rest),
                    Some(("d", rest)) => (&mut down_part, rest),
                    _ => return Err(Error::Parse(format!("bad node id {id:?}"))),
                };
                let k: usize = rest.parse().map_err(|_| Error::Parse(format!("bad node id {id:?}")))?;
                match slots.get_mut(k) {
                    Some(s) if *s == usize::MAX => *s = p,
                    _ => return Err(Error::Parse(format!("node id {id:?} missing or repeated"))),
                }
            }
        }
        if up_part.iter().chain(&down_part).any(|&p| p == usize::MAX) {
            return Err(Error::Parse("every node needs a part".into()));
        }
        let b = Bitree::new(&up, &down, &up_part, &down_part)?;
        for (k, want) in [("m", b.m), ("n", b.n)] {
            if let Some(given) = v.get(k) {
                if given.as_u64() != Some(want as u64) {
                    return Err(Error::Parse(format!("{k} disagrees with the trees")));
                }
            }
        }
        Ok(b)
    }

    fn drawn(&self, t: &PTree, up: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines = self.parts - 1;
        // lines crossed between a node in part `a` and its child (or leaf) in part `b`
        let markers = |f: &mut fmt::Formatter<'_>, crossed: Vec<usize>| -> std::result::Result<usize, fmt::Error> {
            for &l in &crossed {
                write!(f, "[{}", part_label(subset::singleton(l - 1)))?;
            }
            Ok(crossed.len())
        };
        fn go(
            t: &PTree,
            here: usize,
            up: bool,
            lines: usize,
            f: &mut fmt::Formatter<'_>,
            markers: &dyn Fn(&mut fmt::Formatter<'_>, Vec<usize>) -> std::result::Result<usize, fmt::Error>,
        ) -> fmt::Result {
            let target = match t {
                PTree::Leaf => {
                    if up {
                        lines
                    } else {
                        0
                    }
                }
                PTree::Node(p, _) => *p,
            };
            let crossed: Vec<usize> = if up { (here + 1..=target).collect() } else { (target + 1..=here).rev().collect() };
            let open = markers(f, crossed)?;
            match t {
                PTree::Leaf => f.write_str("[]")?,
                PTree::Node(p, ch) => {
                    f.write_str("[")?;
                    for c in ch {
                        go(c, *p, up, lines, f, markers)?;
                    }
                    f.write_str("]")?;
                }
            }
            for _ in 0..open {
                f.write_str("]")?;
            }
            Ok(())
        }
        // the up root starts below every line, the down root above every line
        go(t, if up { 0 } else { lines }, up, lines, f, &markers)
    }
}

impl fmt::Display for Bitree {
    /// The drawn notation of the up tree, ` / `, then the down tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.drawn(&self.up, true, f)?;
        f.write_str(" / ")?;
        self.drawn(&self.down, false, f)
    }
}

/// Admissible type words for `(m, n)`, including the degenerate ones with an empty tree.
pub fn type_words(m: usize, n: usize) -> Vec<TypeWord> {
    match (m, n) {
        (0, 0) => vec![TypeWord(Vec::new())],
        (0, _) => vec![TypeWord(vec!['d'])],
        (_, 0) => vec![TypeWord(vec!['u'])],
        _ => genfun::type_words(m, n).iter().map(|w| TypeWord::of(w)).collect(),
    }
}

/// Trees with `leaves` leaves grown layer by layer: `steps` lists `(part, letter)` in growth
/// order; a pure letter grafts Schröder trees on the current leaves, a `b` grafts single nodes,
/// and each step grafts at least one node.
fn grow(steps: &[(usize, Letter)], leaves: usize, schroder: &[Vec<PlaneTree>]) -> Vec<PTree> {
    fn go(t: PTree, current: usize, steps: &[(usize, Letter)], target: usize, schroder: &[Vec<PlaneTree>], out: &mut Vec<PTree>) {
        let Some((&(part, letter), rest)) = steps.split_first() else {
            if current == target {
                out.push(t);
            }
            return;
        };
        if current + 1 + rest.len() > target {
            return;
        }
        let budget = target - current - rest.len();
        // choose a graft for each leaf, adding `k − 1` leaves with a `k`-leaf tree
        let mut choice: Vec<PTree> = Vec::with_capacity(current);
        #[allow(clippy::too_many_arguments)]
        fn pick(
            slot: usize,
            slots: usize,
            budget: usize,
            added: usize,
            part: usize,
            letter: Letter,
            choice: &mut Vec<PTree>,
            schroder: &[Vec<PlaneTree>],
            emit: &mut dyn FnMut(&[PTree], usize),
        ) {
            if slot == slots {
                if added > 0 {
                    emit(choice, added);
                }
                return;
            }
            choice.push(PTree::Leaf);
            pick(slot + 1, slots, budget, added, part, letter, choice, schroder, emit);
            choice.pop();
            for k in 2..=budget - added + 1 {
                if letter == Letter::B {
                    choice.push(PTree::uniform(&PlaneTree::corolla(k), part));
                    pick(slot + 1, slots, budget, added + k - 1, part, letter, choice, schroder, emit);
                    choice.pop();
                } else {
                    for s in &schroder[k - 1] {
                        choice.push(PTree::uniform(s, part));
                        pick(slot + 1, slots, budget, added + k - 1, part, letter, choice, schroder, emit);
                        choice.pop();
                    }
                }
            }
        }
        let mut emit = |with: &[PTree], added: usize| {
            let grown = t.graft(with, &mut 0);
            go(grown, current + added, rest, target, schroder, out);
        };
        pick(0, current, budget, 0, part, letter, &mut choice, schroder, &mut emit);
    }
    let mut out = Vec::new();
    go(PTree::Leaf, 1, steps, leaves, schroder, &mut out);
    out
}

/// Bitrees of one type word, up fillings outermost.
fn of_word(m: usize, n: usize, word: &TypeWord, schroder: &[Vec<PlaneTree>]) -> Vec<Bitree> {
    let letters = word.letters();
    let side = |s: Letter| -> Vec<(usize, Letter)> { letters.iter().copied().enumerate().filter(|&(_, l)| l == s || l == Letter::B).collect() };
    let up_steps = side(Letter::U);
    let mut down_steps = side(Letter::D);
    down_steps.reverse();
    let ups = grow(&up_steps, m + 1, schroder);
    let downs = grow(&down_steps, n + 1, schroder);
    let parts = letters.len();
    let mut out = Vec::with_capacity(ups.len() * downs.len());
    for u in &ups {
        for d in &downs {
            out.push(Bitree { m, n, up: u.clone(), down: d.clone(), parts });
        }
    }
    out
}

fn schroder_table(max: usize) -> Vec<Vec<PlaneTree>> {
    (0..=max).map(trees::enumerate_schroder).collect()
}

/// All `(m,n)`-bitrees grouped by type word, words in a fixed order.
pub fn enumerate_by_word(m: usize, n: usize) -> Vec<(TypeWord, Vec<Bitree>)> {
    let schroder = schroder_table(m.max(n));
    type_words(m, n)
        .into_par_iter()
        .map(|w| {
            let trees = of_word(m, n, &w, &schroder);
            (w, trees)
        })
        .collect()
}

/// All `(m,n)`-bitrees, optionally only those of the given rank.
pub fn enumerate(m: usize, n: usize, rank: Option<usize>) -> Vec<Bitree> {
    let schroder = schroder_table(m.max(n));
    let words: Vec<TypeWord> = match rank {
        // binary bitrees have no mixed part
        Some(0) => type_words(m, n).into_iter().filter(|w| w.mixed() == 0).collect(),
        _ => type_words(m, n),
    };
    let per_word: Vec<Vec<Bitree>> = words
        .par_iter()
        .map(|w| {
            let mut v = of_word(m, n, w, &schroder);
            if let Some(r) = rank {
                v.retain(|b| b.rank() == r);
            }
            v
        })
        .collect();
    per_word.into_iter().flatten().collect()
}

pub fn count_vertices(m: usize, n: usize) -> BigInt {
    if m + n == 0 {
        return BigInt::from(1);
    }
    genfun::biassociahedron_vertices(m, n)
}

/// `(2^m − 1)(2^n − 1) + C(m+1,2) + C(n+1,2) − 1`, or zero for a point.
pub fn count_facets(m: usize, n: usize) -> BigInt {
    if m + n < 2 {
        return BigInt::from(0);
    }
    let pow = |k: usize| (BigInt::from(1) << k) - 1;
    pow(m) * pow(n) + genfun::binomial(m + 1, 2) + genfun::binomial(n + 1, 2) - 1
}

/// Faces by rank, vertices first.
pub fn face_poly(m: usize, n: usize) -> Vec<BigInt> {
    genfun::bt_face_series(m, n)
}

pub fn count_faces(m: usize, n: usize) -> BigInt {
    face_poly(m, n).iter().sum()
}

/// Binary bitrees and their rotation arcs (indices into the list).
pub fn rotation_graph(m: usize, n: usize) -> (Vec<Bitree>, Vec<(usize, usize)>) {
    let nodes = enumerate(m, n, Some(0));
    let index: HashMap<&Bitree, usize> = nodes.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let arcs: Vec<(usize, usize)> = nodes
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, b)| b.rotations().expect("binary").into_iter().map(move |c| (i, c)).collect::<Vec<_>>())
        .map(|(i, c)| (i, index[&c]))
        .collect();
    (nodes, arcs)
}

/// The reachability order of the rotation graph.
pub fn rotation_poset(m: usize, n: usize) -> Result<(Vec<Bitree>, FinitePoset)> {
    let (nodes, arcs) = rotation_graph(m, n);
    let poset = FinitePoset::from_relation(nodes.len(), &arcs)?;
    Ok((nodes, poset))
}

pub fn rotation_lattice_verdict(m: usize, n: usize) -> Result<LatticeVerdict> {
    let (_, poset) = rotation_poset(m, n)?;
    let witness = poset.lattice_witness();
    Ok(LatticeVerdict { is_lattice: witness.is_none(), witness })
}

/// Two binary `(3,3)`-bitrees with two minimal common upper bounds, namely the pair in
/// [`NO_MEET_PAIR`], which in turn has the first pair as its two maximal common lower bounds.
pub const NO_JOIN_PAIR: [(&str, &str); 2] = [
    ("[[1[[2[[3[[[]]]][3[]]]]]][[1[2[3[]]]][1[2[3[]]]]]]", "[[[3[[2[1[[[]]]]]]][3[2[1[]]]]][3[2[[1[]][1[]]]]]]"),
    ("[[[1[2[3[]]]][1[2[3[]]]]][1[[2[[3[[[]]]][3[]]]]]]]", "[[3[2[[1[]][1[]]]]][[3[[2[1[[[]]]]]]][3[2[1[]]]]]]"),
];
pub const NO_MEET_PAIR: [(&str, &str); 2] = [
    ("[[1[[2[3[[4[[5[[]]][5[]]]]]]]]][1[2[[3[4[5[]]]][3[4[5[]]]]]]]]", "[[5[[4[3[[2[[1[]][1[]]]]]]]]][5[4[[3[2[1[[]]]]][3[2[1[]]]]]]]]"),
    ("[[1[2[[3[4[5[]]]][3[4[5[]]]]]]][1[[2[3[[4[[5[[]]][5[]]]]]]]]]]", "[[5[4[[3[2[1[[]]]]][3[2[1[]]]]]]][5[[4[3[[2[[1[]][1[]]]]]]]]]]"),
];

/// Outcome of the `(3,3)` lattice failure check.
#[derive(Clone, Debug)]
pub struct NonLatticeReport {
    pub is_lattice: bool,
    /// Minimal common upper bounds of [`NO_JOIN_PAIR`].
    pub upper_bounds: Vec<Bitree>,
    /// Maximal common lower bounds of [`NO_MEET_PAIR`].
    pub lower_bounds: Vec<Bitree>,
    /// Whether each pair's extremal bounds are exactly the other pair.
    pub confirmed: bool,
}

/// Check that rotations on binary `(3,3)`-bitrees do not form a lattice, on the stored pairs.
pub fn lattice_counterexample_check() -> Result<NonLatticeReport> {
    let (nodes, poset) = rotation_poset(3, 3)?;
    let index: HashMap<&Bitree, usize> = nodes.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let load = |pairs: &[(&str, &str); 2]| -> Result<Vec<usize>> {
        pairs
            .iter()
            .map(|(u, d)| {
                let b = Bitree::parse_figure(u, d)?;
                index.get(&b).copied().ok_or_else(|| Error::InvalidBitree(format!("{b} is not a binary (3,3)-bitree")))
            })
            .collect()
    };
    let (no_join, no_meet) = (load(&NO_JOIN_PAIR)?, load(&NO_MEET_PAIR)?);
    let sorted = |mut v: Vec<usize>| {
        v.sort_unstable();
        v
    };
    let upper = sorted(poset.minimal_upper_bounds(no_join[0], no_join[1]));
    let lower = sorted(poset.maximal_lower_bounds(no_meet[0], no_meet[1]));
    let confirmed = upper == sorted(no_meet) && lower == sorted(no_join);
    Ok(NonLatticeReport {
        is_lattice: poset.is_lattice(),
        upper_bounds: upper.iter().map(|&i| nodes[i].clone()).collect(),
        lower_bounds: lower.iter().map(|&i| nodes[i].clone()).collect(),
        confirmed,
    })
}
