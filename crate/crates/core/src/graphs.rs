//! Simple graphs on `0..n`, acyclic orientations, biconnected subsets, the structural
//! predicates governing the weak order quotients of graphical zonotopes, and counting formulas
//! for shuffles of graphical zonotopes.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::OrderedPartition;
use crate::genfun;
use crate::subset::{self, Subset};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Subset>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        assert!(n <= 32);
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > 32 {
            return Err(Error::InvalidGraph(format!("{n} vertices is too many")));
        }
        let mut g = Graph::new(n);
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::InvalidGraph(format!("edge ({}, {}) leaves 1..{n}", i + 1, j + 1)));
            }
            if i == j {
                return Err(Error::InvalidGraph(format!("loop at {}", i + 1)));
            }
            if g.has_edge(i, j) {
                return Err(Error::InvalidGraph(format!("repeated edge ({}, {})", i + 1, j + 1)));
            }
            g.add_edge(i, j);
        }
        Ok(g)
    }

    fn add_edge(&mut self, i: usize, j: usize) {
        self.adj[i] |= subset::singleton(j);
        self.adj[j] |= subset::singleton(i);
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            g.adj[i] = subset::full(n) & !subset::singleton(i);
        }
        g
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n)
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Complete multipartite graph with consecutive blocks of the given sizes.
    pub fn complete_multipartite(sizes: &[usize]) -> Self {
        sizes.iter().fold(Graph::new(0), |acc, &k| acc.join(&Graph::empty(k)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        subset::contains(self.adj[i], j)
    }

    pub fn neighbors(&self, i: usize) -> Subset {
        self.adj[i]
    }

    /// Edges `(i, j)` with `i < j`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in subset::elements(self.adj[i]) {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// `self` on `0..m`, `other` shifted to `m..m+n`, plus every edge between the two blocks.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.shifted_union(other);
        let (m, n) = (self.n, other.n);
        for i in 0..m {
            g.adj[i] |= subset::full(m + n) & !subset::full(m);
        }
        for j in m..m + n {
            g.adj[j] |= subset::full(m);
        }
        g
    }

    /// `self` next to `other` shifted by `self.n`, with no edge between the blocks.
    pub fn shifted_union(&self, other: &Graph) -> Graph {
        let m = self.n;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&a| a << m));
        Graph { n: m + other.n, adj }
    }

    /// Union of the edge sets of two graphs on the same vertices.
    pub fn superposition(&self, other: &Graph) -> Result<Graph> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(Graph { n: self.n, adj: self.adj.iter().zip(&other.adj).map(|(a, b)| a | b).collect() })
    }

    /// Whether the subgraph induced on `s` is connected; empty and singleton sets are connected.
    pub fn induces_connected(&self, s: Subset) -> bool {
        if s == 0 {
            return true;
        }
        let start = subset::singleton(s.trailing_zeros() as usize);
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in subset::elements(frontier) {
                next |= self.adj[v] & s;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == s
    }

    pub fn is_connected(&self) -> bool {
        self.induces_connected(subset::full(self.n))
    }

    /// Vertex sets of the connected components, ordered by least element.
    pub fn components(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        let mut left = subset::full(self.n);
        while left != 0 {
            let mut comp = subset::singleton(left.trailing_zeros() as usize);
            loop {
                let grown = subset::elements(comp).fold(comp, |a, v| a | self.adj[v]);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// Acyclic orientations by direct enumeration. Each is a mask over `edges()`: bit `k` set
    /// means edge `(i, j)`, `i < j`, is oriented `j → i`.
    pub fn acyclic_orientations(&self) -> Vec<u64> {
        let edges = self.edges();
        assert!(edges.len() <= 64);
        let mut out = Vec::new();
        // reach[v] = vertices reachable from v along oriented edges chosen so far
        let reach: Vec<Subset> = (0..self.n).map(subset::singleton).collect();
        fn go(k: usize, edges: &[(usize, usize)], reach: Vec<Subset>, mask: u64, out: &mut Vec<u64>) {
            if k == edges.len() {
                out.push(mask);
                return;
            }
            let (i, j) = edges[k];
            for (from, to, bit) in [(i, j, 0u64), (j, i, 1u64)] {
                if subset::contains(reach[to], from) {
                    continue;
                }
                let mut next = reach.clone();
                let gained = reach[to];
                for r in next.iter_mut() {
                    if subset::contains(*r, from) {
                        *r |= gained;
                    }
                }
                go(k + 1, edges, next, mask | bit << k, out);
            }
        }
        go(0, &edges, reach, 0, &mut out);
        out
    }

    /// Acyclic orientation count by deletion–contraction with memoization.
    pub fn count_acyclic_orientations_dc(&self) -> BigInt {
        let mut memo = HashMap::new();
        dc_count(self.adj.clone(), &mut memo)
    }

    /// Number of acyclic orientations: direct enumeration up to 7 vertices, deletion–contraction above.
    pub fn count_acyclic_orientations(&self) -> BigInt {
        if self.n <= 7 {
            BigInt::from(self.acyclic_orientations().len())
        } else {
            self.count_acyclic_orientations_dc()
        }
    }

    /// Nonempty connected `U` whose complement inside the component of `U` is nonempty and connected.
    pub fn biconnected_subsets(&self) -> Vec<Subset> {
        let comps = self.components();
        let mut out = Vec::new();
        for u in 1..=subset::full(self.n) {
            let Some(&comp) = comps.iter().find(|&&c| c & u == u) else {
                continue;
            };
            let rest = comp & !u;
            if rest != 0 && self.induces_connected(u) && self.induces_connected(rest) {
                out.push(u);
            }
        }
        out
    }

    /// `nc(G)`: subsets inducing a disconnected subgraph.
    pub fn disconnected_subset_count(&self) -> u64 {
        (0..=subset::full(self.n)).filter(|&s| !self.induces_connected(s)).count() as u64
    }

    /// Every subset of at least 3 vertices whose induced subgraph has a Hamiltonian cycle is a clique.
    pub fn is_chordful(&self) -> bool {
        let n = self.n;
        if n < 3 {
            return true;
        }
        // path[mask][v]: a path starting at the least element of mask, visiting exactly mask, ending at v
        let size = 1usize << n;
        let mut path = vec![0 as Subset; size];
        for v in 0..n {
            path[1 << v] = subset::singleton(v);
        }
        for mask in 1..size {
            let ends = path[mask];
            if ends == 0 {
                continue;
            }
            let low = mask.trailing_zeros() as usize;
            for v in subset::elements(ends) {
                for w in subset::elements(self.adj[v] & !(mask as Subset)) {
                    if w > low {
                        path[mask | 1 << w] |= subset::singleton(w);
                    }
                }
            }
        }
        for mask in 1..size {
            let m = mask as Subset;
            if subset::size(m) < 3 {
                continue;
            }
            let low = m.trailing_zeros() as usize;
            let closes = path[mask] & self.adj[low] != 0;
            if closes && !self.is_clique(m) {
                return false;
            }
        }
        true
    }

    pub fn is_clique(&self, s: Subset) -> bool {
        subset::elements(s).all(|v| self.adj[v] & s == s & !subset::singleton(v))
    }

    /// For all `i < j < k`: `(i,k) ∈ E ⇒ (i,j) ∈ E and (j,k) ∈ E`.
    pub fn is_filled(&self) -> bool {
        self.triples().all(|(i, j, k)| !self.has_edge(i, k) || (self.has_edge(i, j) && self.has_edge(j, k)))
    }

    /// For all `i < j < k`: `(i,k) ∈ E ⇒ (i,j) ∈ E or (j,k) ∈ E`.
    pub fn is_half_filled(&self) -> bool {
        self.triples().all(|(i, j, k)| !self.has_edge(i, k) || self.has_edge(i, j) || self.has_edge(j, k))
    }

    /// The transitive reduction of every induced subgraph (edges oriented upward) is a forest.
    pub fn is_vertebrate(&self) -> bool {
        let n = self.n;
        for s in 1..=subset::full(n) {
            // reduction: keep (i,j) unless some path i → ... → j through s exists of length ≥ 2
            let mut up = vec![0 as Subset; n];
            for i in subset::elements(s) {
                up[i] = self.adj[i] & s & !subset::full(i + 1);
            }
            // reach[i] = vertices reachable from i by a nonempty upward path inside s
            let mut reach = vec![0 as Subset; n];
            for i in subset::elements(s).collect::<Vec<_>>().into_iter().rev() {
                reach[i] = subset::elements(up[i]).fold(up[i], |a, j| a | reach[j]);
            }
            let mut uf: Vec<usize> = (0..n).collect();
            fn find(uf: &mut [usize], x: usize) -> usize {
                let mut r = x;
                while uf[r] != r {
                    r = uf[r];
                }
                uf[x] = r;
                r
            }
            for i in subset::elements(s) {
                for j in subset::elements(up[i]) {
                    let indirect = subset::elements(up[i]).any(|k| k != j && subset::contains(reach[k], j));
                    if indirect {
                        continue;
                    }
                    let (a, b) = (find(&mut uf, i), find(&mut uf, j));
                    if a == b {
                        return false;
                    }
                    uf[a] = b;
                }
            }
        }
        true
    }

    fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
    }

    /// Named families: `Kn`, `En`, `Pn`, `K(a,b,...)`, or `n:i-j,i-j,...` with 1-based vertices.
    pub fn parse(text: &str) -> Result<Graph> {
        let text = text.trim();
        let bad = || Error::Parse(format!("cannot read graph {text:?}"));
        if let Some(rest) = text.strip_prefix("K(") {
            let inner = rest.strip_suffix(')').ok_or_else(bad)?;
            let sizes: Vec<usize> = inner.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?;
            if sizes.contains(&0) || sizes.iter().sum::<usize>() > 32 {
                return Err(bad());
            }
            return Ok(Graph::complete_multipartite(&sizes));
        }
        for (prefix, build) in [("K", Graph::complete as fn(usize) -> Graph), ("E", Graph::empty), ("P", Graph::path)] {
            if let Some(rest) = text.strip_prefix(prefix) {
                let n: usize = rest.parse().map_err(|_| bad())?;
                if n > 32 {
                    return Err(bad());
                }
                return Ok(build(n));
            }
        }
        let (n, edges) = text.split_once(':').unwrap_or((text, ""));
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let mut list = Vec::new();
        for e in edges.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let (a, b) = e.split_once('-').ok_or_else(bad)?;
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().parse().map_err(|_| bad())?;
            if a == 0 || b == 0 {
                return Err(Error::InvalidGraph("vertices are 1-based".into()));
            }
            list.push((a - 1, b - 1));
        }
        Graph::from_edges(n, &list)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().iter().map(|(i, j)| format!("{}-{}", i + 1, j + 1)).collect();
        write!(f, "{}:{}", self.n, edges.join(","))
    }
}

fn dc_count(adj: Vec<Subset>, memo: &mut HashMap<Vec<Subset>, BigInt>) -> BigInt {
    let Some(i) = adj.iter().position(|&a| a != 0) else {
        return BigInt::one();
    };
    if let Some(v) = memo.get(&adj) {
        return v.clone();
    }
    let j = adj[i].trailing_zeros() as usize;
    let mut deleted = adj.clone();
    deleted[i] &= !subset::singleton(j);
    deleted[j] &= !subset::singleton(i);
    // contract j into i: j's neighbours move to i, j becomes isolated
    let mut contracted = deleted.clone();
    let moved = contracted[j];
    contracted[j] = 0;
    for w in subset::elements(moved) {
        contracted[w] &= !subset::singleton(j);
        contracted[w] |= subset::singleton(i);
    }
    contracted[i] |= moved;
    let total = dc_count(deleted, memo) + dc_count(contracted, memo);
    memo.insert(adj, total.clone());
    total
}

/// Shuffles of graphical zonotopes with closed-form vertex counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShuffleKind {
    /// `Perm(m) ⧢ Para(n)`, the join `K_m ∨ P_n`.
    PermPara,
    /// `Perm(m) ⧢ Point(n)`, the join `K_m ∨ E_n`.
    PermPoint,
    /// `Point(m) ⧢ Point(n)`, the complete bipartite graph.
    PointPoint,
}

/// Closed-form vertex count of the given shuffle.
pub fn shuffle_zonotope_vertex_count(kind: ShuffleKind, m: usize, n: usize) -> BigInt {
    match kind {
        ShuffleKind::PermPara => {
            if n == 0 {
                genfun::factorial(m)
            } else {
                genfun::factorial(m + 1) * BigInt::from(m + 2).pow(n as u32 - 1)
            }
        }
        ShuffleKind::PermPoint => genfun::factorial(m) * BigInt::from(m + 1).pow(n as u32),
        ShuffleKind::PointPoint => genfun::poly_bernoulli(m, n),
    }
}

/// Vertex count of `Point(n_1) ⧢ ... ⧢ Point(n_k)`: a sum over words with no two consecutive
/// equal letters of products of surjection numbers.
pub fn multipartite_vertex_count(sizes: &[usize]) -> BigInt {
    let k = sizes.len();
    let mut total = BigInt::zero();
    let mut counts = vec![0usize; k];
    fn go(sizes: &[usize], counts: &mut [usize], last: Option<usize>, total: &mut BigInt) {
        if counts.iter().zip(sizes).all(|(c, s)| c <= s) && counts.iter().zip(sizes).all(|(&c, &s)| (c == 0) == (s == 0)) {
            let term = counts.iter().zip(sizes).fold(BigInt::one(), |acc, (&c, &s)| acc * genfun::surjections(s, c));
            *total += term;
        }
        for letter in 0..sizes.len() {
            if Some(letter) == last || counts[letter] >= sizes[letter] {
                continue;
            }
            counts[letter] += 1;
            go(sizes, counts, Some(letter), total);
            counts[letter] -= 1;
        }
    }
    if sizes.iter().all(|&s| s == 0) {
        return BigInt::one();
    }
    go(sizes, &mut counts, None, &mut total);
    total
}

/// Facet count of `Z[G_1] ⧢ ... ⧢ Z[G_k]` for `k ≥ 2`: `2^{Σ n_i} − 2 Σ nc(G_i) − 2`, except
/// that two disconnected graphs give `2^{n_1+n_2} − 2 nc(G_1) − 2 nc(G_2)`.
pub fn shuffle_zonotope_facet_count(graphs: &[Graph]) -> Result<BigInt> {
    if graphs.len() < 2 {
        return Err(Error::InvalidGraph("need at least two graphs".into()));
    }
    let total: usize = graphs.iter().map(|g| g.n()).sum();
    let nc: u64 = graphs.iter().map(|g| g.disconnected_subset_count()).sum();
    let base = (BigInt::one() << total) - BigInt::from(2 * nc);
    let both_disconnected = graphs.len() == 2 && graphs.iter().all(|g| !g.is_connected());
    Ok(if both_disconnected { base } else { base - 2 })
}

/// Faces of the complete multipartite zonotope `Z_(n_1,...,n_k)`: ordered partitions of `0..n`
/// with no two consecutive parts inside the same block.
pub fn multipartite_faces(sizes: &[usize]) -> Result<Vec<OrderedPartition>> {
    if sizes.contains(&0) {
        return Err(Error::InvalidGraph("block sizes must be positive".into()));
    }
    let blocks = blocks_of(sizes);
    let n: usize = sizes.iter().sum();
    let inside = |p: Subset| blocks.iter().position(|&b| p & b == p);
    Ok(OrderedPartition::enumerate(n)
        .into_iter()
        .filter(|mu| {
            mu.parts().windows(2).all(|w| match (inside(w[0]), inside(w[1])) {
                (Some(a), Some(b)) => a != b,
                _ => true,
            })
        })
        .collect())
}

/// The faces among [`multipartite_faces`] that are vertices: every part inside a block.
pub fn multipartite_vertices(sizes: &[usize]) -> Result<Vec<OrderedPartition>> {
    let blocks = blocks_of(sizes);
    Ok(multipartite_faces(sizes)?
        .into_iter()
        .filter(|mu| mu.parts().iter().all(|&p| blocks.iter().any(|&b| p & b == p)))
        .collect())
}

fn blocks_of(sizes: &[usize]) -> Vec<Subset> {
    let mut start = 0;
    sizes
        .iter()
        .map(|&s| {
            let b = subset::full(start + s) & !subset::full(start);
            start += s;
            b
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_examples() {
        let c4 = Graph::empty(2).join(&Graph::empty(2));
        assert_eq!(c4.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(Graph::complete(2).join(&Graph::complete(3)), Graph::complete(5));
        let g = Graph::path(3);
        assert_eq!(g.join(&Graph::new(0)), g);
        assert_eq!(Graph::complete_multipartite(&[2, 2]), c4);
    }

    #[test]
    fn join_edge_count_and_associativity() {
        let gs = [Graph::path(3), Graph::empty(2), Graph::complete(2), Graph::parse("4:1-3,2-4").unwrap()];
        for a in &gs {
            for b in &gs {
                assert_eq!(a.join(b).edge_count(), a.edge_count() + b.edge_count() + a.n() * b.n());
                for c in &gs {
                    assert_eq!(a.join(b).join(c), a.join(&b.join(c)));
                }
            }
        }
    }

    #[test]
    fn acyclic_orientation_examples() {
        assert_eq!(Graph::complete(3).count_acyclic_orientations(), BigInt::from(6));
        assert_eq!(Graph::complete(1).join(&Graph::path(2)).count_acyclic_orientations(), BigInt::from(6));
        assert_eq!(Graph::empty(2).join(&Graph::empty(2)).count_acyclic_orientations(), BigInt::from(14));
    }

    #[test]
    fn enumeration_and_deletion_contraction_agree() {
        // every graph on 5 vertices, and assorted larger ones
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(5, &edges).unwrap();
            assert_eq!(BigInt::from(g.acyclic_orientations().len()), g.count_acyclic_orientations_dc());
        }
        for g in [Graph::complete(7), Graph::complete_multipartite(&[3, 4]), Graph::path(7).join(&Graph::empty(0))] {
            assert_eq!(BigInt::from(g.acyclic_orientations().len()), g.count_acyclic_orientations_dc());
        }
        assert_eq!(Graph::complete(9).count_acyclic_orientations(), BigInt::from(362880));
    }

    #[test]
    fn biconnected_examples() {
        assert_eq!(Graph::complete(3).biconnected_subsets().len(), 6);
        assert_eq!(Graph::complete(2).join(&Graph::empty(2)).biconnected_subsets().len(), 12);
        assert_eq!(Graph::empty(2).join(&Graph::empty(2)).biconnected_subsets().len(), 12);
    }

    #[test]
    fn disconnected_examples() {
        for n in 1..=5 {
            assert_eq!(Graph::complete(n).disconnected_subset_count(), 0);
            assert_eq!(Graph::empty(n).disconnected_subset_count(), (1 << n) - n as u64 - 1);
            assert_eq!(Graph::path(n).disconnected_subset_count(), (1 << n) - (n * (n + 1) / 2) as u64 - 1);
        }
    }

    #[test]
    fn predicate_examples() {
        for n in 1..=5 {
            let k = Graph::complete(n);
            assert!(k.is_chordful() && k.is_filled() && k.is_half_filled() && k.is_vertebrate());
        }
        let k22 = Graph::complete_multipartite(&[2, 2]);
        assert!(k22.is_half_filled() && !k22.is_vertebrate() && !k22.is_filled());
        assert!(!k22.is_chordful());
        for n in 1..=5 {
            assert!(Graph::complete_multipartite(&[1, n]).is_vertebrate());
        }
        // a triangle with a pendant edge is chordful, a 4-cycle with one chord is not
        assert!(Graph::parse("4:1-2,2-3,1-3,3-4").unwrap().is_chordful());
        assert!(!Graph::parse("4:1-2,2-3,3-4,1-4,1-3").unwrap().is_chordful());
    }

    #[test]
    fn chordful_matches_block_graphs() {
        // chordful graphs are exactly those whose biconnected blocks are cliques; cross-check with
        // the brute force that every induced cycle subgraph of length ≥ 4 is absent and every
        // diamond (K4 minus an edge) is absent
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(5, &edges).unwrap();
            let mut bad = false;
            for s in 0..32u32 {
                let k = subset::size(s);
                if k < 4 {
                    continue;
                }
                let degs: Vec<usize> = subset::elements(s).map(|v| subset::size(g.neighbors(v) & s)).collect();
                let induced_edges: usize = degs.iter().sum::<usize>() / 2;
                let is_cycle = degs.iter().all(|&d| d == 2) && g.induces_connected(s);
                let is_diamond = k == 4 && induced_edges == 5;
                bad |= is_cycle || is_diamond;
            }
            assert_eq!(g.is_chordful(), !bad, "{g}");
        }
    }

    #[test]
    fn shuffle_vertex_counts() {
        assert_eq!(shuffle_zonotope_vertex_count(ShuffleKind::PermPoint, 2, 2), BigInt::from(18));
        assert_eq!(shuffle_zonotope_vertex_count(ShuffleKind::PermPara, 2, 2), BigInt::from(24));
        assert_eq!(shuffle_zonotope_vertex_count(ShuffleKind::PointPoint, 3, 3), BigInt::from(230));
        for m in 0..=4 {
            for n in 0..=4 {
                let perm_para = Graph::complete(m).join(&Graph::path(n)).count_acyclic_orientations();
                assert_eq!(shuffle_zonotope_vertex_count(ShuffleKind::PermPara, m, n), perm_para);
                let perm_point = Graph::complete(m).join(&Graph::empty(n)).count_acyclic_orientations();
                assert_eq!(shuffle_zonotope_vertex_count(ShuffleKind::PermPoint, m, n), perm_point);
                let point_point = Graph::empty(m).join(&Graph::empty(n)).count_acyclic_orientations();
                assert_eq!(shuffle_zonotope_vertex_count(ShuffleKind::PointPoint, m, n), point_point);
            }
        }
        for sizes in [vec![1, 2, 2], vec![2, 1, 1, 1], vec![3, 2], vec![1, 1, 1, 1]] {
            let g = Graph::complete_multipartite(&sizes);
            assert_eq!(multipartite_vertex_count(&sizes), g.count_acyclic_orientations(), "{sizes:?}");
        }
    }

    #[test]
    fn shuffle_facet_counts() {
        assert_eq!(shuffle_zonotope_facet_count(&[Graph::complete(2), Graph::empty(2)]).unwrap(), BigInt::from(12));
        assert_eq!(shuffle_zonotope_facet_count(&[Graph::empty(2), Graph::empty(2)]).unwrap(), BigInt::from(12));
        assert_eq!(shuffle_zonotope_facet_count(&[Graph::empty(3), Graph::empty(3)]).unwrap(), BigInt::from(48));
        // facets of a connected graphical zonotope are its biconnected subsets
        let families: Vec<Graph> =
            vec![Graph::complete(2), Graph::empty(1), Graph::empty(2), Graph::empty(3), Graph::path(3), Graph::complete(3), Graph::parse("3:1-2").unwrap()];
        for a in &families {
            for b in &families {
                let j = a.join(b);
                let want = shuffle_zonotope_facet_count(&[a.clone(), b.clone()]).unwrap();
                assert_eq!(BigInt::from(j.biconnected_subsets().len()), want, "{a} {b}");
                for c in &families[..4] {
                    let want3 = shuffle_zonotope_facet_count(&[a.clone(), b.clone(), c.clone()]).unwrap();
                    assert_eq!(BigInt::from(j.join(c).biconnected_subsets().len()), want3);
                }
            }
        }
    }

    #[test]
    fn multipartite_face_examples() {
        assert_eq!(multipartite_faces(&[2, 1]).unwrap().len(), 9);
        let seg: Vec<String> = multipartite_vertices(&[1, 1]).unwrap().iter().map(|m| m.show()).collect();
        assert_eq!(seg, vec!["1|2", "2|1"]);
        assert_eq!(multipartite_vertices(&[2, 2]).unwrap().len(), 14);
        for sizes in [vec![1, 2], vec![2, 2], vec![1, 1, 2], vec![3, 1]] {
            let g = Graph::complete_multipartite(&sizes);
            assert_eq!(BigInt::from(multipartite_vertices(&sizes).unwrap().len()), g.count_acyclic_orientations());
        }
    }

    #[test]
    fn parse_graphs() {
        assert_eq!(Graph::parse("K4").unwrap(), Graph::complete(4));
        assert_eq!(Graph::parse("E3").unwrap(), Graph::empty(3));
        assert_eq!(Graph::parse("P3").unwrap(), Graph::path(3));
        assert_eq!(Graph::parse("K(2,1)").unwrap(), Graph::complete_multipartite(&[2, 1]));
        assert_eq!(Graph::parse("3:1-2,2-3").unwrap(), Graph::path(3));
        assert_eq!(Graph::parse("3").unwrap(), Graph::empty(3));
        assert!(Graph::parse("3:1-1").is_err());
        assert!(Graph::parse("3:1-4").is_err());
        assert!(Graph::parse("3:1-2,2-1").is_err());
        assert!(Graph::parse("Q3").is_err());
    }
}
