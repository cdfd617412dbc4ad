//! Rooted plane trees, inorder labels, deletions, Tamari rotations, binary search tree
//! insertion and Loday coordinates.

use std::fmt;

use serde_json::Value;

use crate::combinatorics::{Permutation, Preposet};
use crate::subset::{self, Subset};
use crate::{Error, Result};

/// A leaf, or an internal node with an ordered nonempty list of children.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlaneTree {
    Leaf,
    Node(Vec<PlaneTree>),
}

/// A child slot in a flattened tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Node(usize),
    Leaf(usize),
}

/// Flattened view of a tree; internal nodes are numbered in preorder.
#[derive(Clone, Debug)]
pub struct Shape {
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<Slot>>,
    /// Leaves under each node as the half-open range `[start, end)`.
    pub leaf_range: Vec<(usize, usize)>,
    pub leaves: usize,
}

impl Shape {
    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.children[v].len()
    }

    /// Leaves under a slot.
    pub fn slot_leaves(&self, s: Slot) -> usize {
        match s {
            Slot::Leaf(_) => 1,
            Slot::Node(v) => self.leaf_range[v].1 - self.leaf_range[v].0,
        }
    }

    /// `v` itself followed by all its ancestors.
    pub fn ancestors(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            out.push(p);
            cur = p;
        }
        out
    }

    /// Whether `a` is `b` or an ancestor of `b`.
    pub fn is_ancestor(&self, a: usize, b: usize) -> bool {
        let mut cur = Some(b);
        while let Some(c) = cur {
            if c == a {
                return true;
            }
            cur = self.parent[c];
        }
        false
    }

    /// Inorder labels: between consecutive children `c_i, c_{i+1}` the label is the number of
    /// leaves strictly before `c_{i+1}`, minus one. Labels are `0..leaves-1`.
    pub fn inorder_labels(&self) -> Vec<Subset> {
        (0..self.len())
            .map(|v| {
                let mut label = 0;
                let mut seen = self.leaf_range[v].0;
                let ch = &self.children[v];
                for (k, &c) in ch.iter().enumerate() {
                    seen += self.slot_leaves(c);
                    if k + 1 < ch.len() {
                        label |= subset::singleton(seen - 1);
                    }
                }
                label
            })
            .collect()
    }

    pub fn depth(&self, v: usize) -> usize {
        self.ancestors(v).len() - 1
    }
}

impl PlaneTree {
    pub fn node(children: Vec<PlaneTree>) -> Self {
        PlaneTree::Node(children)
    }

    /// The single node with `leaves` leaf children; a bare leaf when `leaves == 1`.
    pub fn corolla(leaves: usize) -> Self {
        if leaves == 1 {
            PlaneTree::Leaf
        } else {
            PlaneTree::Node(vec![PlaneTree::Leaf; leaves])
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, PlaneTree::Leaf)
    }

    pub fn leaves(&self) -> usize {
        match self {
            PlaneTree::Leaf => 1,
            PlaneTree::Node(ch) => ch.iter().map(|c| c.leaves()).sum(),
        }
    }

    /// Number of internal nodes.
    pub fn size(&self) -> usize {
        match self {
            PlaneTree::Leaf => 0,
            PlaneTree::Node(ch) => 1 + ch.iter().map(|c| c.size()).sum::<usize>(),
        }
    }

    pub fn is_schroder(&self) -> bool {
        match self {
            PlaneTree::Leaf => true,
            PlaneTree::Node(ch) => ch.len() >= 2 && ch.iter().all(|c| c.is_schroder()),
        }
    }

    pub fn is_binary(&self) -> bool {
        match self {
            PlaneTree::Leaf => true,
            PlaneTree::Node(ch) => ch.len() == 2 && ch.iter().all(|c| c.is_binary()),
        }
    }

    /// `n` for an `n`-tree, i.e. leaves minus one.
    pub fn n(&self) -> usize {
        self.leaves() - 1
    }

    pub fn shape(&self) -> Shape {
        let mut shape = Shape { parent: Vec::new(), children: Vec::new(), leaf_range: Vec::new(), leaves: 0 };
        fn walk(t: &PlaneTree, parent: Option<usize>, shape: &mut Shape) -> Slot {
            match t {
                PlaneTree::Leaf => {
                    shape.leaves += 1;
                    Slot::Leaf(shape.leaves - 1)
                }
                PlaneTree::Node(ch) => {
                    let id = shape.parent.len();
                    shape.parent.push(parent);
                    shape.children.push(Vec::new());
                    shape.leaf_range.push((shape.leaves, 0));
                    let slots: Vec<Slot> = ch.iter().map(|c| walk(c, Some(id), shape)).collect();
                    shape.children[id] = slots;
                    shape.leaf_range[id].1 = shape.leaves;
                    Slot::Node(id)
                }
            }
        }
        walk(self, None, &mut shape);
        shape
    }

    /// Inorder label of every internal node, indexed by preorder.
    pub fn inorder_labels(&self) -> Vec<Subset> {
        self.shape().inorder_labels()
    }

    /// Subtree rooted at the internal node with preorder index `v`.
    pub fn subtree(&self, v: usize) -> Option<&PlaneTree> {
        fn go<'a>(t: &'a PlaneTree, v: usize, next: &mut usize) -> Option<&'a PlaneTree> {
            if let PlaneTree::Node(ch) = t {
                if *next == v {
                    return Some(t);
                }
                *next += 1;
                for c in ch {
                    if let Some(found) = go(c, v, next) {
                        return Some(found);
                    }
                }
            }
            None
        }
        go(self, v, &mut 0)
    }

    /// Rebuild the tree, replacing each internal node's children list through `f(preorder, children)`.
    /// Children are rebuilt bottom-up before `f` sees them.
    pub fn map_nodes<F>(&self, f: &mut F) -> PlaneTree
    where
        F: FnMut(usize, Vec<PlaneTree>) -> PlaneTree,
    {
        fn go<F: FnMut(usize, Vec<PlaneTree>) -> PlaneTree>(t: &PlaneTree, next: &mut usize, f: &mut F) -> PlaneTree {
            match t {
                PlaneTree::Leaf => PlaneTree::Leaf,
                PlaneTree::Node(ch) => {
                    let id = *next;
                    *next += 1;
                    let kids = ch.iter().map(|c| go(c, next, f)).collect();
                    f(id, kids)
                }
            }
        }
        go(self, &mut 0, f)
    }

    /// Contract the edge between internal node `v` and its parent.
    pub fn delete_node(&self, v: usize) -> Result<PlaneTree> {
        let shape = self.shape();
        if v >= shape.len() {
            return Err(Error::InvalidTree(format!("no internal node {v}")));
        }
        if shape.parent[v].is_none() {
            return Err(Error::InvalidTree("the root cannot be deleted".into()));
        }
        Ok(self.delete_nodes(subset_of_nodes(&[v])))
    }

    /// Contract every node flagged in `set` (none of them the root) into its parent.
    pub(crate) fn delete_nodes(&self, set: Vec<bool>) -> PlaneTree {
        // returns the rebuilt subtree and whether the parent should splice its children in
        fn go(t: &PlaneTree, next: &mut usize, set: &[bool]) -> (PlaneTree, bool) {
            match t {
                PlaneTree::Leaf => (PlaneTree::Leaf, false),
                PlaneTree::Node(ch) => {
                    let id = *next;
                    *next += 1;
                    let mut out = Vec::new();
                    for c in ch {
                        match go(c, next, set) {
                            (PlaneTree::Node(inner), true) => out.extend(inner),
                            (sub, _) => out.push(sub),
                        }
                    }
                    (PlaneTree::Node(out), set.get(id).copied().unwrap_or(false))
                }
            }
        }
        go(self, &mut 0, &set).0
    }

    /// Preposet of a tree all of whose nodes carry inorder labels: `i ≼ j` iff the node of `j`
    /// lies on the path from the node of `i` to the root.
    pub fn preposet(&self) -> Preposet {
        let shape = self.shape();
        let labels = shape.inorder_labels();
        let n = shape.leaves - 1;
        let mut rows = vec![0; n];
        for v in 0..shape.len() {
            let above = shape.ancestors(v).iter().fold(0, |acc, &a| acc | labels[a]);
            for i in subset::elements(labels[v]) {
                rows[i] = above;
            }
        }
        Preposet::from_rows(n, rows)
    }

    /// Every tree obtained by deleting one non-root internal node.
    pub fn deletions(&self) -> Vec<PlaneTree> {
        let shape = self.shape();
        (1..shape.len()).map(|v| self.delete_node(v).unwrap()).collect()
    }

    /// Nested bracket lists, leaves as empty lists.
    pub fn to_json(&self) -> Value {
        match self {
            PlaneTree::Leaf => Value::Array(Vec::new()),
            PlaneTree::Node(ch) => Value::Array(ch.iter().map(|c| c.to_json()).collect()),
        }
    }

    pub fn from_json(v: &Value) -> Result<PlaneTree> {
        match v {
            Value::Array(items) if items.is_empty() => Ok(PlaneTree::Leaf),
            Value::Array(items) => Ok(PlaneTree::Node(items.iter().map(PlaneTree::from_json).collect::<Result<_>>()?)),
            other => Err(Error::Parse(format!("expected a nested list, found {other}"))),
        }
    }

    /// Parse bracket text; commas and whitespace are optional, so `[[][]]` and `[[],[]]` agree.
    pub fn parse(text: &str) -> Result<PlaneTree> {
        let tokens: Vec<char> = text.chars().filter(|c| !c.is_whitespace() && *c != ',').collect();
        let mut pos = 0;
        let tree = parse_at(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(Error::Parse(format!("trailing input in {text:?}")));
        }
        Ok(tree)
    }
}

fn subset_of_nodes(nodes: &[usize]) -> Vec<bool> {
    let top = nodes.iter().copied().max().map_or(0, |m| m + 1);
    let mut set = vec![false; top];
    for &v in nodes {
        set[v] = true;
    }
    set
}

fn parse_at(tokens: &[char], pos: &mut usize) -> Result<PlaneTree> {
    if tokens.get(*pos) != Some(&'[') {
        return Err(Error::Parse(format!("expected '[' at {}", *pos)));
    }
    *pos += 1;
    let mut children = Vec::new();
    while tokens.get(*pos) == Some(&'[') {
        children.push(parse_at(tokens, pos)?);
    }
    if tokens.get(*pos) != Some(&']') {
        return Err(Error::Parse(format!("expected ']' at {}", *pos)));
    }
    *pos += 1;
    Ok(if children.is_empty() { PlaneTree::Leaf } else { PlaneTree::Node(children) })
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaneTree::Leaf => f.write_str("[]"),
            PlaneTree::Node(ch) => {
                f.write_str("[")?;
                for (k, c) in ch.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("]")
            }
        }
    }
}

/// Deletion-poset rank `n − |T|` of a Schröder tree.
pub fn schroder_rank(t: &PlaneTree) -> usize {
    t.n() - t.size()
}

/// All binary trees with `n` internal nodes: left subtree size `0..n`, then left trees, then right trees.
pub fn enumerate_binary(n: usize) -> Vec<PlaneTree> {
    let mut memo: Vec<Vec<PlaneTree>> = vec![vec![PlaneTree::Leaf]];
    for k in 1..=n {
        let mut level = Vec::new();
        for a in 0..k {
            for l in &memo[a] {
                for r in &memo[k - 1 - a] {
                    level.push(PlaneTree::Node(vec![l.clone(), r.clone()]));
                }
            }
        }
        memo.push(level);
    }
    memo.swap_remove(n)
}

/// All Schröder trees with `n + 1` leaves: root degree ascending, then compositions of the
/// leaves in lexicographic order, then children left to right.
pub fn enumerate_schroder(n: usize) -> Vec<PlaneTree> {
    let mut memo: Vec<Vec<PlaneTree>> = vec![Vec::new(), vec![PlaneTree::Leaf]];
    for leaves in 2..=n + 1 {
        let mut level = Vec::new();
        for degree in 2..=leaves {
            for comp in compositions(leaves, degree) {
                let mut partial: Vec<Vec<PlaneTree>> = vec![Vec::new()];
                for &part in &comp {
                    let mut next = Vec::new();
                    for prefix in &partial {
                        for t in &memo[part] {
                            let mut p = prefix.clone();
                            p.push(t.clone());
                            next.push(p);
                        }
                    }
                    partial = next;
                }
                level.extend(partial.into_iter().map(PlaneTree::Node));
            }
        }
        memo.push(level);
    }
    memo.swap_remove(n + 1)
}

/// Compositions of `total` into `parts` positive parts, lexicographic.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(rest: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for first in 1..=rest.saturating_sub(parts - 1) {
            cur.push(first);
            go(rest - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    if parts > 0 && total >= parts {
        go(total, parts, &mut Vec::new(), &mut out);
    }
    out
}

/// Right rotation at internal node `v` (preorder) whose left child is internal:
/// `((A B) C) ↦ (A (B C))`.
pub fn tamari_right_rotation(t: &PlaneTree, v: usize) -> Result<PlaneTree> {
    if !t.is_binary() {
        return Err(Error::InvalidTree("rotations need a binary tree".into()));
    }
    let target = t.subtree(v).ok_or_else(|| Error::InvalidTree(format!("no internal node {v}")))?;
    let PlaneTree::Node(ch) = target else { unreachable!() };
    let PlaneTree::Node(left) = &ch[0] else {
        return Err(Error::InvalidTree(format!("node {v} has a leaf as left child")));
    };
    let rotated = PlaneTree::Node(vec![left[0].clone(), PlaneTree::Node(vec![left[1].clone(), ch[1].clone()])]);
    Ok(replace_subtree(t, v, rotated))
}

/// Replace the subtree at internal node `v` (preorder).
pub fn replace_subtree(t: &PlaneTree, v: usize, with: PlaneTree) -> PlaneTree {
    fn go(t: &PlaneTree, v: usize, next: &mut usize, with: &PlaneTree) -> PlaneTree {
        match t {
            PlaneTree::Leaf => PlaneTree::Leaf,
            PlaneTree::Node(ch) => {
                if *next == v {
                    *next += t.size();
                    return with.clone();
                }
                *next += 1;
                PlaneTree::Node(ch.iter().map(|c| go(c, v, next, with)).collect())
            }
        }
    }
    go(t, v, &mut 0, &with)
}

/// All right rotations of a binary tree, one per internal left child.
pub fn tamari_rotations(t: &PlaneTree) -> Vec<PlaneTree> {
    let shape = t.shape();
    (0..shape.len())
        .filter(|&v| matches!(shape.children[v][0], Slot::Node(_)))
        .map(|v| tamari_right_rotation(t, v).unwrap())
        .collect()
}

/// Insert `p_n, p_{n-1}, …, p_1` into a binary search tree.
pub fn bst_insert(p: &Permutation) -> PlaneTree {
    #[derive(Default)]
    struct Bst {
        key: Vec<usize>,
        left: Vec<Option<usize>>,
        right: Vec<Option<usize>>,
    }
    let mut bst = Bst::default();
    for &x in p.word().iter().rev() {
        let id = bst.key.len();
        bst.key.push(x);
        bst.left.push(None);
        bst.right.push(None);
        if id == 0 {
            continue;
        }
        let mut cur = 0;
        loop {
            let slot = if x < bst.key[cur] { &mut bst.left[cur] } else { &mut bst.right[cur] };
            match *slot {
                Some(next) => cur = next,
                None => {
                    *slot = Some(id);
                    break;
                }
            }
        }
    }
    fn build(bst: &Bst, v: Option<usize>) -> PlaneTree {
        match v {
            None => PlaneTree::Leaf,
            Some(v) => PlaneTree::Node(vec![build(bst, bst.left[v]), build(bst, bst.right[v])]),
        }
    }
    build(&bst, if p.is_empty() { None } else { Some(0) })
}

/// `x_i = ℓ(T,i)·r(T,i)`, leaves in the left and right subtrees of the node labelled `i`.
pub fn loday_coordinates(t: &PlaneTree) -> Vec<i64> {
    let shape = t.shape();
    let labels = shape.inorder_labels();
    let mut x = vec![0; shape.leaves - 1];
    for v in 0..shape.len() {
        let i = labels[v].trailing_zeros() as usize;
        let l = shape.slot_leaves(shape.children[v][0]) as i64;
        let r = shape.slot_leaves(shape.children[v][1]) as i64;
        x[i] = l * r;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeMap, BTreeSet, VecDeque};

    fn t(s: &str) -> PlaneTree {
        PlaneTree::parse(s).unwrap()
    }

    fn labels_one_based(tree: &PlaneTree) -> Vec<Vec<usize>> {
        tree.inorder_labels().iter().map(|&l| subset::elements(l).map(|i| i + 1).collect()).collect()
    }

    // The four trees of the introductory figure, transcribed structurally.
    fn fig_t1() -> PlaneTree {
        t("[[[[][]][[]]][[][][]][[[][]][]]]")
    }
    fn fig_t2() -> PlaneTree {
        t("[[[][]][[]][[][][]][[[][]][]]]")
    }
    fn fig_t3() -> PlaneTree {
        t("[[[[][]][]][[][]]]")
    }
    fn fig_t4() -> PlaneTree {
        t("[[[[][]][][[][]]][[][[][][]][]]]")
    }

    #[test]
    fn figure_labels() {
        assert_eq!(labels_one_based(&fig_t1()), vec![vec![3, 6], vec![2], vec![1], vec![], vec![4, 5], vec![8], vec![7]]);
        assert_eq!(labels_one_based(&fig_t3()), vec![vec![3], vec![2], vec![1], vec![4]]);
        assert_eq!(labels_one_based(&fig_t4()), vec![vec![5], vec![2, 3], vec![1], vec![4], vec![6, 9], vec![7, 8]]);
    }

    #[test]
    fn figure_deletion() {
        // the circled node of T_1 is the second node in preorder
        assert_eq!(fig_t1().delete_node(1).unwrap(), fig_t2());
        assert!(fig_t1().delete_node(0).is_err());
    }

    #[test]
    fn figure_preposet() {
        let p = fig_t4().preposet();
        let one = |i: usize| i - 1;
        for (a, b) in [(1, 2), (4, 2), (2, 5), (7, 6), (8, 6), (6, 5), (1, 5), (9, 5)] {
            assert!(p.lt(one(a), one(b)), "{a} < {b}");
        }
        assert!(p.leq(one(2), one(3)) && p.leq(one(3), one(2)));
        assert!(p.leq(one(6), one(9)) && p.leq(one(9), one(6)));
        assert!(p.leq(one(7), one(8)) && p.leq(one(8), one(7)));
        assert!(!p.leq(one(1), one(4)) && !p.leq(one(1), one(6)));
    }

    #[test]
    fn small_label_examples() {
        assert_eq!(labels_one_based(&t("[[][]]")), vec![vec![1]]);
        assert_eq!(labels_one_based(&PlaneTree::corolla(5)), vec![vec![1, 2, 3, 4]]);
        let comb = t("[[[[][]][]][]]");
        assert_eq!(labels_one_based(&comb), vec![vec![3], vec![2], vec![1]]);
        let p = comb.preposet();
        assert!(p.lt(0, 1) && p.lt(1, 2));
        assert_eq!(PlaneTree::corolla(4).preposet(), Preposet::complete(3));
    }

    #[test]
    fn labels_partition_ground_set() {
        for n in 0..=5 {
            for tree in enumerate_schroder(n) {
                let labels = tree.inorder_labels();
                let union = labels.iter().fold(0, |a, &l| a | l);
                assert_eq!(union, subset::full(n));
                assert_eq!(labels.iter().map(|&l| subset::size(l)).sum::<usize>(), n);
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        let catalan = [1, 1, 2, 5, 14, 42, 132];
        let schroder = [1, 1, 3, 11, 45, 197, 903];
        for n in 0..=6 {
            let b = enumerate_binary(n);
            let s = enumerate_schroder(n);
            assert_eq!(b.len(), catalan[n]);
            assert_eq!(s.len(), schroder[n]);
            assert_eq!(b.iter().collect::<BTreeSet<_>>().len(), b.len());
            assert_eq!(s.iter().collect::<BTreeSet<_>>().len(), s.len());
            assert!(b.iter().all(|x| x.is_binary() && x.n() == n));
            assert!(s.iter().all(|x| x.is_schroder() && x.n() == n));
        }
    }

    #[test]
    fn deletion_small_cases() {
        let two = t("[[[][]][]]");
        assert_eq!(two.delete_node(1).unwrap(), PlaneTree::corolla(3));
        for n in 1..=5 {
            for b in enumerate_binary(n) {
                let mut cur = b;
                while cur.size() > 1 {
                    cur = cur.delete_node(1).unwrap();
                }
                assert_eq!(cur, PlaneTree::corolla(n + 1));
            }
        }
    }

    /// BFS from binary trees: the number of deletions reaching a tree is its rank, and the
    /// deletion order matches preposet refinement.
    #[test]
    fn deletion_poset_matches_ranks_and_refinement() {
        for n in 1..=5 {
            let mut dist: BTreeMap<PlaneTree, usize> = BTreeMap::new();
            let mut queue: VecDeque<PlaneTree> = VecDeque::new();
            for b in enumerate_binary(n) {
                dist.insert(b.clone(), 0);
                queue.push_back(b);
            }
            while let Some(cur) = queue.pop_front() {
                let d = dist[&cur];
                for next in cur.deletions() {
                    assert!(next.is_schroder());
                    match dist.get(&next) {
                        Some(&e) => assert_eq!(e, d + 1),
                        None => {
                            dist.insert(next.clone(), d + 1);
                            queue.push_back(next);
                        }
                    }
                }
            }
            assert_eq!(dist.len(), enumerate_schroder(n).len());
            for (tree, d) in &dist {
                assert_eq!(*d, schroder_rank(tree));
            }
        }
        for n in 1..=4 {
            let all = enumerate_schroder(n);
            // reachability in the deletion digraph
            for s in &all {
                let mut reach = BTreeSet::new();
                let mut stack = vec![s.clone()];
                while let Some(c) = stack.pop() {
                    if reach.insert(c.clone()) {
                        stack.extend(c.deletions());
                    }
                }
                for u in &all {
                    assert_eq!(reach.contains(u), s.preposet().refines(&u.preposet()));
                }
            }
        }
    }

    #[test]
    fn rotation_examples() {
        let left = t("[[[][]][]]");
        let right = t("[[],[[],[]]]");
        assert_eq!(tamari_right_rotation(&left, 0).unwrap(), right);
        assert!(tamari_right_rotation(&right, 0).is_err());
        let trees = enumerate_binary(3);
        let edges: usize = trees.iter().map(|x| tamari_rotations(x).len()).sum();
        assert_eq!(edges, 5);
        for n in 1..=5 {
            for b in enumerate_binary(n) {
                let shape = b.shape();
                let left_edges = (0..shape.len()).filter(|&v| matches!(shape.children[v][0], Slot::Node(_))).count();
                assert_eq!(tamari_rotations(&b).len(), left_edges);
            }
        }
    }

    #[test]
    fn loday_examples() {
        assert_eq!(loday_coordinates(&t("[[][]]")), vec![1]);
        let got: BTreeSet<Vec<i64>> = enumerate_binary(3).iter().map(loday_coordinates).collect();
        let want: BTreeSet<Vec<i64>> =
            [vec![1, 2, 3], vec![1, 4, 1], vec![3, 2, 1], vec![3, 1, 2], vec![2, 1, 3]].into_iter().collect();
        assert_eq!(got, want);
        for b in enumerate_binary(4) {
            assert_eq!(loday_coordinates(&b).iter().sum::<i64>(), 10);
        }
    }

    #[test]
    fn bst_insertion() {
        for n in 0..=5 {
            let mut fibers: BTreeMap<PlaneTree, usize> = BTreeMap::new();
            for p in Permutation::all(n) {
                let tree = bst_insert(&p);
                assert!(tree.is_binary() && tree.n() == n);
                // p is a linear extension of the tree preposet
                assert!(tree.preposet().extended_by(&p.to_ordered_partition()));
                *fibers.entry(tree).or_default() += 1;
            }
            assert_eq!(fibers.len(), enumerate_binary(n).len());
        }
        let mut sizes: Vec<usize> = {
            let mut f: BTreeMap<PlaneTree, usize> = BTreeMap::new();
            for p in Permutation::all(3) {
                *f.entry(bst_insert(&p)).or_default() += 1;
            }
            f.into_values().collect()
        };
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 1, 1, 2]);
        // U a c V b W ≡ U c a V b W with a < b < c
        let a = Permutation::from_one_based(&[1, 3, 2]).unwrap();
        let b = Permutation::from_one_based(&[3, 1, 2]).unwrap();
        assert_eq!(bst_insert(&a), bst_insert(&b));
    }

    /// Linear extensions of a binary tree's preposet are exactly its insertion fiber.
    #[test]
    fn sylvester_classes_are_extension_sets() {
        for n in 1..=4 {
            for b in enumerate_binary(n) {
                let pre = b.preposet();
                let ext: BTreeSet<Permutation> = Permutation::all(n)
                    .into_iter()
                    .filter(|p| pre.extended_by(&p.to_ordered_partition()))
                    .collect();
                let class: BTreeSet<Permutation> = Permutation::all(n).into_iter().filter(|p| bst_insert(p) == b).collect();
                assert_eq!(ext, class);
            }
        }
    }

    #[test]
    fn json_round_trip() {
        for tree in enumerate_schroder(4) {
            assert_eq!(PlaneTree::from_json(&tree.to_json()).unwrap(), tree);
            assert_eq!(PlaneTree::parse(&tree.to_string()).unwrap(), tree);
        }
    }
}
