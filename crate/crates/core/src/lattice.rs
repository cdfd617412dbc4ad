//! Finite posets, the interval / lattice / congruence properties of vertex equivalences
//! on the weak order, painted posets, and the graphical zonotope sweep.

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::combinatorics::{quotient_relation, Permutation, Preposet};
use crate::geometry::{permutation_rank, Oracle, SubmodularPolytope};
use crate::graphs::Graph;
use crate::subset::{self, Subset};
use crate::{Error, Result};

/// Largest `n` for which weak-order checks are run.
pub const MAX_WEAK_ORDER_N: usize = 7;

/// A finite poset stored as up-sets: `up[i] = {j : i ≤ j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Join,
    Meet,
}

/// A pair with no join (or no meet), with its minimal upper (maximal lower) bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub a: usize,
    pub b: usize,
    pub missing: Bound,
    pub extremal_bounds: Vec<usize>,
}

impl FinitePoset {
    /// Reflexive transitive closure of `pairs`; fails on a cycle.
    pub fn from_relation(n: usize, pairs: &[(usize, usize)]) -> Result<FinitePoset> {
        let mut succ = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(a, b) in pairs {
            if a == b {
                continue;
            }
            succ[a].push(b);
            indegree[b] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        while let Some(i) = stack.pop() {
            order.push(i);
            for &j in &succ[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    stack.push(j);
                }
            }
        }
        if order.len() < n {
            return Err(Error::NotAPoset("the relation has a cycle".into()));
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &i in order.iter().rev() {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(i);
            for &j in &succ[i] {
                row.union_with(&up[j]);
            }
            up[i] = row;
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter().enumerate() {
            for j in row.ones() {
                down[j].insert(i);
            }
        }
        Ok(FinitePoset { up, down })
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn up_set(&self, a: usize) -> &FixedBitSet {
        &self.up[a]
    }

    /// Cover pairs `a ⋖ b`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in self.up[a].ones() {
                if b == a {
                    continue;
                }
                let mut between = self.up[a].clone();
                between.intersect_with(&self.down[b]);
                if between.count_ones(..) == 2 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn minimal(&self, set: &FixedBitSet) -> Vec<usize> {
        set.ones()
            .filter(|&x| {
                let mut below = self.down[x].clone();
                below.intersect_with(set);
                below.count_ones(..) == 1
            })
            .collect()
    }

    fn maximal(&self, set: &FixedBitSet) -> Vec<usize> {
        set.ones()
            .filter(|&x| {
                let mut above = self.up[x].clone();
                above.intersect_with(set);
                above.count_ones(..) == 1
            })
            .collect()
    }

    /// Minimal common upper bounds of `a` and `b`.
    pub fn minimal_upper_bounds(&self, a: usize, b: usize) -> Vec<usize> {
        let mut ub = self.up[a].clone();
        ub.intersect_with(&self.up[b]);
        self.minimal(&ub)
    }

    pub fn maximal_lower_bounds(&self, a: usize, b: usize) -> Vec<usize> {
        let mut lb = self.down[a].clone();
        lb.intersect_with(&self.down[b]);
        self.maximal(&lb)
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        match self.minimal_upper_bounds(a, b)[..] {
            [j] => Some(j),
            _ => None,
        }
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        match self.maximal_lower_bounds(a, b)[..] {
            [j] => Some(j),
            _ => None,
        }
    }

    /// The first pair (in index order) lacking a join, else the first lacking a meet.
    pub fn lattice_witness(&self) -> Option<Witness> {
        let n = self.len();
        let find = |missing: Bound| {
            (0..n).into_par_iter().find_map_first(|a| {
                (a + 1..n).find_map(|b| {
                    let bounds = match missing {
                        Bound::Join => self.minimal_upper_bounds(a, b),
                        Bound::Meet => self.maximal_lower_bounds(a, b),
                    };
                    (bounds.len() != 1).then_some(Witness { a, b, missing, extremal_bounds: bounds })
                })
            })
        };
        find(Bound::Join).or_else(|| find(Bound::Meet))
    }

    pub fn is_lattice(&self) -> bool {
        self.lattice_witness().is_none()
    }
}

/// Verdict of the lattice test on a quotient of the weak order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeVerdict {
    pub is_lattice: bool,
    pub witness: Option<Witness>,
}

/// Partition of the permutations of `[n]` into vertex fibers.
pub struct VertexEquivalence {
    n: usize,
    perms: Vec<Permutation>,
    inversions: Vec<u128>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl VertexEquivalence {
    /// `class_of[k]` is the class of the `k`-th permutation in lexicographic order.
    pub fn from_classes(n: usize, class_of: Vec<usize>) -> Result<Self> {
        if n > MAX_WEAK_ORDER_N {
            return Err(Error::TooLarge { n, max: MAX_WEAK_ORDER_N });
        }
        let perms = Permutation::all(n);
        if class_of.len() != perms.len() {
            return Err(Error::InvalidPartition("one class per permutation expected".into()));
        }
        let count = class_of.iter().max().map_or(0, |m| m + 1);
        let mut classes = vec![Vec::new(); count];
        for (k, &c) in class_of.iter().enumerate() {
            classes[c].push(k);
        }
        if classes.iter().any(|c| c.is_empty()) {
            return Err(Error::InvalidPartition("class indices must be contiguous".into()));
        }
        let inversions = perms.iter().map(|p| p.inversion_mask()).collect();
        Ok(VertexEquivalence { n, perms, inversions, class_of, classes })
    }

    pub fn from_oracle(oracle: &Oracle) -> Result<Self> {
        Self::from_classes(oracle.n(), oracle.permutation_vertices().to_vec())
    }

    pub fn of(p: &SubmodularPolytope) -> Result<Self> {
        if p.n() > MAX_WEAK_ORDER_N {
            return Err(Error::TooLarge { n: p.n(), max: MAX_WEAK_ORDER_N });
        }
        Self::from_oracle(&Oracle::of(p)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self) -> &[usize] {
        &self.class_of
    }

    fn weak_leq(&self, a: usize, b: usize) -> bool {
        self.inversions[a] & !self.inversions[b] == 0
    }

    /// Cover relations `σ ⋖ τ` of the weak order, as permutation indices.
    pub fn weak_covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (k, p) in self.perms.iter().enumerate() {
            for q in p.weak_order_upper_covers() {
                out.push((k, permutation_rank(&q)));
            }
        }
        out
    }

    /// Least and greatest elements of a class under the weak order, when they exist.
    fn extremes(&self, class: &[usize]) -> (Option<usize>, Option<usize>) {
        let low = class.iter().copied().find(|&a| class.iter().all(|&b| self.weak_leq(a, b)));
        let high = class.iter().copied().find(|&a| class.iter().all(|&b| self.weak_leq(b, a)));
        (low, high)
    }

    /// Whether a set of permutation indices is exactly a weak-order interval.
    pub fn is_weak_interval(&self, set: &[usize]) -> bool {
        let (Some(low), Some(high)) = self.extremes(set) else { return false };
        let size = (0..self.perms.len()).filter(|&k| self.weak_leq(low, k) && self.weak_leq(k, high)).count();
        size == set.len()
    }

    /// Every class is an interval of the weak order.
    pub fn interval_property(&self) -> bool {
        self.classes.par_iter().all(|c| self.is_weak_interval(c))
    }

    /// The weak order quotient: classes related by weak covers, transitively closed.
    pub fn quotient_poset(&self) -> Result<FinitePoset> {
        let rel = quotient_relation(&self.weak_covers(), &self.class_of);
        FinitePoset::from_relation(self.classes.len(), &rel)
    }

    pub fn lattice_verdict(&self) -> LatticeVerdict {
        match self.quotient_poset() {
            Ok(p) => {
                let witness = p.lattice_witness();
                LatticeVerdict { is_lattice: witness.is_none(), witness }
            }
            Err(_) => LatticeVerdict { is_lattice: false, witness: None },
        }
    }

    pub fn lattice_property(&self) -> bool {
        self.lattice_verdict().is_lattice
    }

    /// Classes are intervals and both projections to class bottoms and tops preserve the weak order.
    pub fn congruence_property(&self) -> bool {
        if !self.interval_property() {
            return false;
        }
        let ext: Vec<(usize, usize)> = self
            .classes
            .iter()
            .map(|c| {
                let (lo, hi) = self.extremes(c);
                (lo.expect("interval"), hi.expect("interval"))
            })
            .collect();
        self.weak_covers().into_iter().all(|(a, b)| {
            let (ea, eb) = (ext[self.class_of[a]], ext[self.class_of[b]]);
            self.weak_leq(ea.0, eb.0) && self.weak_leq(ea.1, eb.1)
        })
    }
}

/// Whether `i ≺ k` forces `i ≺ j` or `j ≺ k`, and `i ≻ k` forces `i ≻ j` or `j ≻ k`, for all `i < j < k`.
pub fn woip_test(p: &Preposet) -> bool {
    let n = p.n();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if p.lt(i, k) && !(p.lt(i, j) || p.lt(j, k)) {
                    return false;
                }
                if p.lt(k, i) && !(p.lt(j, i) || p.lt(k, j)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether the linear extensions of a poset form a weak-order interval, by enumeration.
pub fn linear_extensions_form_interval(p: &Preposet) -> Result<bool> {
    let n = p.n();
    let eq = VertexEquivalence::from_classes(n, vec![0; Permutation::all(n).len()])?;
    let ext: Vec<usize> = eq
        .perms
        .iter()
        .enumerate()
        .filter(|(_, s)| p.extended_by(&s.to_ordered_partition()))
        .map(|(k, _)| k)
        .collect();
    Ok(eq.is_weak_interval(&ext))
}

/// A vertex poset of a base polytope with an upper set `U` (its complement is the lower set `L`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PaintedPoset {
    pub vertex: usize,
    pub upper: Subset,
}

fn upper_sets(p: &Preposet) -> Vec<Subset> {
    let full = subset::full(p.n());
    (0..=full)
        .filter(|&u| subset::elements(u).all(|i| p.rows()[i] & !u == 0))
        .collect()
}

fn upper_closure(p: &Preposet, s: Subset) -> Subset {
    subset::elements(s).fold(s, |acc, i| acc | p.rows()[i])
}

/// Painted posets over the vertices of a base polytope, ordered by the base rotation order
/// together with inclusion of upper sets.
pub struct PaintedPosets<'a> {
    base: &'a Oracle,
    posets: Vec<Preposet>,
    items: Vec<PaintedPoset>,
}

impl<'a> PaintedPosets<'a> {
    pub fn new(base: &'a Oracle) -> Self {
        let posets: Vec<Preposet> = (0..base.vertices().len()).map(|v| base.vertex_poset(v)).collect();
        let items = posets
            .iter()
            .enumerate()
            .flat_map(|(v, p)| upper_sets(p).into_iter().map(move |upper| PaintedPoset { vertex: v, upper }))
            .collect();
        PaintedPosets { base, posets, items }
    }

    pub fn items(&self) -> &[PaintedPoset] {
        &self.items
    }

    pub fn poset(&self, vertex: usize) -> &Preposet {
        &self.posets[vertex]
    }

    pub fn leq(&self, a: &PaintedPoset, b: &PaintedPoset) -> bool {
        self.base.rotation_leq(a.vertex, b.vertex) && a.upper & !b.upper == 0
    }

    /// Join of the base posets, painted with the upper set generated by both upper sets.
    pub fn join(&self, a: &PaintedPoset, b: &PaintedPoset) -> Result<PaintedPoset> {
        let vertex = self
            .base
            .rotation_poset()
            .join(a.vertex, b.vertex)
            .ok_or_else(|| Error::NotAPoset("the base rotation order has no join for this pair".into()))?;
        Ok(PaintedPoset { vertex, upper: upper_closure(&self.posets[vertex], a.upper | b.upper) })
    }

    /// The order as a [`FinitePoset`] on [`Self::items`].
    pub fn to_poset(&self) -> FinitePoset {
        let mut pairs = Vec::new();
        for (i, a) in self.items.iter().enumerate() {
            for (j, b) in self.items.iter().enumerate() {
                if i != j && self.leq(a, b) {
                    pairs.push((i, j));
                }
            }
        }
        FinitePoset::from_relation(self.items.len(), &pairs).expect("painted order is antisymmetric")
    }
}

/// One graph's verdicts: zonotope properties against graph predicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphRow {
    pub graph: Graph,
    pub interval: bool,
    pub lattice: bool,
    pub congruence: bool,
    pub half_filled: bool,
    pub vertebrate: bool,
    pub filled: bool,
}

impl GraphRow {
    pub fn of(graph: &Graph) -> Result<GraphRow> {
        let eq = VertexEquivalence::of(&SubmodularPolytope::zono(graph))?;
        Ok(GraphRow {
            graph: graph.clone(),
            interval: eq.interval_property(),
            lattice: eq.lattice_property(),
            congruence: eq.congruence_property(),
            half_filled: graph.is_half_filled(),
            vertebrate: graph.is_vertebrate(),
            filled: graph.is_filled(),
        })
    }

    pub fn consistent(&self) -> bool {
        self.interval == self.half_filled && self.lattice == self.vertebrate && self.congruence == self.filled
    }
}

#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub graphs: usize,
    pub counterexamples: Vec<GraphRow>,
}

/// Every labeled graph on exactly `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
            Graph::from_edges(n, &edges).expect("valid edges")
        })
        .collect()
}

/// Checks the three equivalences on every labeled graph with `1..=max_n` vertices.
pub fn graph_correspondence_sweep(max_n: usize) -> Result<SweepReport> {
    if max_n > 5 {
        return Err(Error::TooLarge { n: max_n, max: 5 });
    }
    let graphs: Vec<Graph> = (1..=max_n).flat_map(all_graphs).collect();
    let rows: Vec<GraphRow> = graphs.par_iter().map(GraphRow::of).collect::<Result<_>>()?;
    Ok(SweepReport { graphs: rows.len(), counterexamples: rows.into_iter().filter(|r| !r.consistent()).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::OrderedPartition;

    fn eq(p: &SubmodularPolytope) -> VertexEquivalence {
        VertexEquivalence::of(p).unwrap()
    }

    #[test]
    fn finite_poset_basics() {
        // diamond 0 < 1, 2 < 3
        let p = FinitePoset::from_relation(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert!(p.leq(0, 3) && !p.leq(1, 2));
        assert_eq!(p.join(1, 2), Some(3));
        assert_eq!(p.meet(1, 2), Some(0));
        assert!(p.is_lattice());
        assert_eq!(p.covers().len(), 4);
        // bowtie: 0, 1 < 2, 3
        let b = FinitePoset::from_relation(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let w = b.lattice_witness().unwrap();
        assert_eq!((w.a, w.b, w.missing), (0, 1, Bound::Join));
        assert_eq!(w.extremal_bounds, vec![2, 3]);
        assert!(FinitePoset::from_relation(2, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn permutahedra_and_associahedra() {
        for n in 1..=5 {
            let e = eq(&SubmodularPolytope::perm(n));
            assert!(e.classes().iter().all(|c| c.len() == 1));
            assert!(e.interval_property() && e.lattice_property() && e.congruence_property());
            let a = eq(&SubmodularPolytope::asso(n));
            assert!(a.interval_property() && a.lattice_property() && a.congruence_property());
        }
    }

    #[test]
    fn tamari_cover_graph_on_three() {
        let a = eq(&SubmodularPolytope::asso(3));
        let q = a.quotient_poset().unwrap();
        assert_eq!(q.len(), 5);
        assert_eq!(q.covers().len(), 5);
    }

    #[test]
    fn quotient_matches_rotation_order() {
        let mut cases = Vec::new();
        for n in 1..=4 {
            cases.push(SubmodularPolytope::asso(n));
            cases.push(SubmodularPolytope::anti_asso(n));
        }
        cases.push(SubmodularPolytope::perm(2).shuffle(&SubmodularPolytope::asso(3)));
        cases.push(SubmodularPolytope::anti_asso(2).shuffle(&SubmodularPolytope::asso(2)));
        cases.push(SubmodularPolytope::zono(&Graph::parse("K(2,2)").unwrap()));
        for p in cases {
            let o = Oracle::of(&p).unwrap();
            let q = VertexEquivalence::from_oracle(&o).unwrap().quotient_poset().unwrap();
            let r = o.rotation_poset();
            for a in 0..q.len() {
                for b in 0..q.len() {
                    assert_eq!(q.leq(a, b), r.leq(a, b));
                }
            }
        }
    }

    #[test]
    fn bipartite_zonotopes() {
        let k11 = eq(&SubmodularPolytope::zono(&Graph::parse("K(1,1)").unwrap()));
        assert!(k11.interval_property() && k11.lattice_property() && k11.congruence_property());
        let k22 = eq(&SubmodularPolytope::zono(&Graph::parse("K(2,2)").unwrap()));
        assert!(k22.interval_property());
        assert!(!k22.lattice_property());
        assert!(!k22.congruence_property());
    }

    #[test]
    fn multiplihedra_verdicts() {
        let mul23 = eq(&SubmodularPolytope::perm(2).shuffle(&SubmodularPolytope::asso(3)));
        assert!(mul23.lattice_property());
        let mul13 = eq(&SubmodularPolytope::perm(1).shuffle(&SubmodularPolytope::asso(3)));
        assert!(mul13.interval_property());
        assert!(!mul13.congruence_property());
    }

    #[test]
    fn shuffle_preserves_intervals() {
        let catalog = |k: usize| {
            vec![
                SubmodularPolytope::perm(k),
                SubmodularPolytope::asso(k),
                SubmodularPolytope::anti_asso(k),
                SubmodularPolytope::point(k),
                SubmodularPolytope::para(k),
            ]
        };
        for m in 1..=3 {
            for n in 1..=(5 - m).min(3) {
                for p in catalog(m) {
                    for q in catalog(n) {
                        assert!(eq(&p.shuffle(&q)).interval_property());
                    }
                }
            }
        }
    }

    #[test]
    fn shuffle_with_permutahedron_keeps_lattices() {
        let bases = [SubmodularPolytope::asso(2), SubmodularPolytope::asso(3), SubmodularPolytope::perm(2)];
        for p in &bases {
            assert!(eq(p).lattice_property());
            for n in 1..=2 {
                assert!(eq(&p.shuffle(&SubmodularPolytope::perm(n))).lattice_property());
            }
        }
    }

    #[test]
    fn smallest_shuffle_losing_congruence() {
        // search shuffles of congruence-uniform factors by total dimension
        let mut found = None;
        'outer: for total in 2..=5 {
            for m in 1..total {
                let n = total - m;
                let left = [SubmodularPolytope::perm(m), SubmodularPolytope::asso(m)];
                let right = [SubmodularPolytope::perm(n), SubmodularPolytope::asso(n)];
                for (i, p) in left.iter().enumerate() {
                    for (j, q) in right.iter().enumerate() {
                        if !eq(&p.shuffle(q)).congruence_property() {
                            found = Some((m, n, i, j));
                            break 'outer;
                        }
                    }
                }
            }
        }
        let (m, n, _, _) = found.expect("a counterexample exists below dimension 6");
        assert!(m + n <= 4);
    }

    #[test]
    fn woip_agrees_with_enumeration() {
        for n in 1..=4 {
            let mut seen = std::collections::BTreeSet::new();
            for mu in OrderedPartition::enumerate(n) {
                for sigma in Permutation::all(n) {
                    let p = mu.preposet().intersection(&sigma.to_ordered_partition().preposet());
                    if p.is_poset() && seen.insert(p.clone()) {
                        assert_eq!(woip_test(&p), linear_extensions_form_interval(&p).unwrap(), "{}", p.show());
                    }
                }
            }
        }
        assert!(woip_test(&Preposet::antichain(3)));
        assert!(woip_test(&Permutation::from_one_based(&[2, 3, 1]).unwrap().to_ordered_partition().preposet()));
        let p = Preposet::from_pairs(3, &[(0, 2)]);
        assert!(!woip_test(&p));
        assert!(!linear_extensions_form_interval(&p).unwrap());
    }

    /// Maps vertices of `P ⧢ point(1)` to painted posets: the base vertex is read off a permutation
    /// of the fiber with the point deleted, the upper set off the vertex poset.
    fn painted_map(base: &Oracle, shuffled: &Oracle) -> Vec<PaintedPoset> {
        let n = base.n();
        (0..shuffled.vertices().len())
            .map(|v| {
                let sigma = &shuffled.permutations()[shuffled.fibers()[v][0]];
                let word: Vec<usize> = sigma.word().iter().copied().filter(|&x| x < n).collect();
                let vertex = base.vertex_of(&Permutation::new(word).unwrap());
                let p = shuffled.vertex_poset(v);
                let upper = subset::elements(subset::full(n)).filter(|&i| p.lt(n, i)).fold(0, |a, i| a | subset::singleton(i));
                PaintedPoset { vertex, upper }
            })
            .collect()
    }

    #[test]
    fn painted_posets_model_shuffle_with_point() {
        for base in [SubmodularPolytope::asso(2), SubmodularPolytope::asso(3), SubmodularPolytope::zono(&Graph::parse("K(2,2)").unwrap())] {
            let bo = Oracle::of(&base).unwrap();
            let so = Oracle::of(&base.shuffle(&SubmodularPolytope::point(1))).unwrap();
            let painted = PaintedPosets::new(&bo);
            let map = painted_map(&bo, &so);
            let mut sorted = map.clone();
            sorted.sort();
            let mut items = painted.items().to_vec();
            items.sort();
            assert_eq!(sorted, items);
            for a in 0..map.len() {
                for b in 0..map.len() {
                    assert_eq!(so.rotation_leq(a, b), painted.leq(&map[a], &map[b]));
                }
            }
            let base_lattice = bo.rotation_poset().is_lattice();
            assert_eq!(base_lattice, so.rotation_poset().is_lattice());
            assert_eq!(base_lattice, eq(&base.shuffle(&SubmodularPolytope::point(1))).lattice_property());
            if base_lattice {
                let r = so.rotation_poset();
                for a in 0..map.len() {
                    assert_eq!(painted.join(&map[a], &map[a]).unwrap(), map[a]);
                    for b in 0..map.len() {
                        let j = painted.join(&map[a], &map[b]).unwrap();
                        assert_eq!(map[r.join(a, b).unwrap()], j);
                    }
                }
            }
        }
        let a2 = Oracle::of(&SubmodularPolytope::asso(2)).unwrap();
        assert_eq!(PaintedPosets::new(&a2).items().len(), 6);
        assert_eq!(PaintedPosets::new(&a2).to_poset().len(), 6);
    }

    #[test]
    fn small_graph_sweep() {
        let report = graph_correspondence_sweep(3).unwrap();
        assert_eq!(report.graphs, 1 + 2 + 8);
        assert!(report.counterexamples.is_empty());
        let row = GraphRow::of(&Graph::parse("K(2,2)").unwrap()).unwrap();
        assert_eq!((row.interval, row.lattice, row.congruence), (true, false, false));
        assert_eq!((row.half_filled, row.vertebrate, row.filled), (true, false, false));
        for n in 1..=5 {
            let row = GraphRow::of(&Graph::complete(n)).unwrap();
            assert!(row.interval && row.lattice && row.congruence && row.consistent());
        }
        assert!(graph_correspondence_sweep(6).is_err());
    }
}
