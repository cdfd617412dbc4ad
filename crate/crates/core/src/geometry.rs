//! Deformed permutahedra as integer submodular functions `z(S) = max_{x ∈ P} Σ_{i∈S} x_i`,
//! with builders, the product/sum/reflection/shuffle calculus, and an exact face oracle.

use std::collections::HashMap;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::combinatorics::{OrderedPartition, Permutation, Preposet};
use crate::graphs::Graph;
use crate::lattice::FinitePoset;
use crate::subset::{self, Subset};
use crate::{Error, Result};

/// Environment variable overriding the enumeration bound.
pub const MAX_N_VAR: &str = "DPX_MAX_N";

/// Largest ambient dimension the oracle will enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_n: 8 }
    }
}

impl Limits {
    /// Default bound, overridden by `DPX_MAX_N` when it parses.
    pub fn from_env() -> Self {
        std::env::var(MAX_N_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(|max_n: usize| Limits { max_n: max_n.min(16) })
            .unwrap_or_default()
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            Err(Error::TooLarge { n, max: self.max_n })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubmodularPolytope {
    n: usize,
    z: Vec<BigInt>,
}

impl SubmodularPolytope {
    /// Validates `z(∅) = 0`, the array length and submodularity.
    pub fn new(n: usize, z: Vec<BigInt>) -> Result<Self> {
        if n > 20 || z.len() != 1 << n {
            return Err(Error::InvalidPolytope(format!("expected 2^{n} support values")));
        }
        if !z[0].is_zero() {
            return Err(Error::InvalidPolytope("z(∅) must be 0".into()));
        }
        let p = SubmodularPolytope { n, z };
        if let Some((s, i, j)) = p.submodularity_violation() {
            return Err(Error::InvalidPolytope(format!(
                "not submodular at S = {}, i = {}, j = {}",
                subset::show(s),
                i + 1,
                j + 1
            )));
        }
        Ok(p)
    }

    fn from_fn(n: usize, f: impl Fn(Subset) -> BigInt) -> Self {
        SubmodularPolytope { n, z: (0..1u32 << n).map(f).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn z(&self) -> &[BigInt] {
        &self.z
    }

    pub fn z_at(&self, s: Subset) -> &BigInt {
        &self.z[s as usize]
    }

    /// `z([n])`, the common coordinate sum of all points.
    pub fn total(&self) -> &BigInt {
        &self.z[subset::full(self.n) as usize]
    }

    /// The permutahedron with vertices `Σ_i i·e_{σ(i)}`.
    pub fn perm(n: usize) -> Self {
        Self::from_fn(n, |s| {
            let k = subset::size(s);
            BigInt::from((n - k + 1..=n).sum::<usize>())
        })
    }

    /// Loday's associahedron, the sum of the simplices of all intervals.
    pub fn asso(n: usize) -> Self {
        Self::from_fn(n, |s| {
            let mut count = 0usize;
            for i in 0..n {
                for j in i..n {
                    let interval = subset::full(j + 1) & !subset::full(i);
                    if interval & s != 0 {
                        count += 1;
                    }
                }
            }
            BigInt::from(count)
        })
    }

    /// `(n+1)·1 − Asso(n)`.
    pub fn anti_asso(n: usize) -> Self {
        Self::asso(n).reflect(&BigInt::from(n + 1))
    }

    /// Graphical zonotope, the sum of the segments `[e_i, e_j]` over edges.
    pub fn zono(g: &Graph) -> Self {
        let edges = g.edges();
        Self::from_fn(g.n(), |s| {
            BigInt::from(edges.iter().filter(|&&(i, j)| subset::contains(s, i) || subset::contains(s, j)).count())
        })
    }

    /// The origin of `R^n`.
    pub fn point(n: usize) -> Self {
        Self::from_fn(n, |_| BigInt::zero())
    }

    /// The zonotope of the path, a parallelotope.
    pub fn para(n: usize) -> Self {
        Self::zono(&Graph::path(n))
    }

    /// The face `Δ_I` of the standard simplex.
    pub fn simplex_face(n: usize, i: Subset) -> Result<Self> {
        if i == 0 || i & !subset::full(n) != 0 {
            return Err(Error::InvalidPolytope(format!("bad simplex support {}", subset::show(i))));
        }
        Ok(Self::from_fn(n, |s| BigInt::from(u8::from(s & i != 0))))
    }

    pub fn product(&self, other: &Self) -> Self {
        let m = self.n;
        let low = subset::full(m);
        Self::from_fn(m + other.n, |s| &self.z[(s & low) as usize] + &other.z[(s >> m) as usize])
    }

    pub fn minkowski(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(SubmodularPolytope { n: self.n, z: self.z.iter().zip(&other.z).map(|(a, b)| a + b).collect() })
    }

    /// `c·1 − P`.
    pub fn reflect(&self, c: &BigInt) -> Self {
        let full = subset::full(self.n);
        let total = self.total().clone();
        Self::from_fn(self.n, |s| c * subset::size(s) - &total + &self.z[(full & !s) as usize])
    }

    /// `(P × Q) + Z[K_{m,n}]`.
    pub fn shuffle(&self, other: &Self) -> Self {
        let (m, n) = (self.n, other.n);
        let bipartite = Graph::empty(m).join(&Graph::empty(n));
        self.product(other).minkowski(&Self::zono(&bipartite)).expect("same ambient dimension")
    }

    fn submodularity_violation(&self) -> Option<(Subset, usize, usize)> {
        let full = subset::full(self.n);
        for s in 0..=full {
            let outside = full & !s;
            for i in subset::elements(outside) {
                for j in subset::elements(outside) {
                    if j <= i {
                        continue;
                    }
                    let (si, sj) = (s | subset::singleton(i), s | subset::singleton(j));
                    if &self.z[si as usize] + &self.z[sj as usize] < &self.z[(si | sj) as usize] + &self.z[s as usize] {
                        return Some((s, i, j));
                    }
                }
            }
        }
        None
    }

    pub fn is_submodular(&self) -> bool {
        self.z[0].is_zero() && self.submodularity_violation().is_none()
    }

    /// The vertex maximizing every functional `w` with `w_{σ(1)} < ... < w_{σ(n)}`:
    /// `v_{σ(k)} = z({σ(k),…,σ(n)}) − z({σ(k+1),…,σ(n)})`.
    pub fn greedy_vertex(&self, sigma: &Permutation) -> Vec<BigInt> {
        assert_eq!(sigma.len(), self.n);
        let mut v = vec![BigInt::zero(); self.n];
        let mut upper: Subset = 0;
        for &x in sigma.word().iter().rev() {
            let next = upper | subset::singleton(x);
            v[x] = &self.z[next as usize] - &self.z[upper as usize];
            upper = next;
        }
        v
    }

    /// `{n, z, vertices, facets}` with 1-based facet supports.
    pub fn to_json(&self, oracle: &Oracle) -> Value {
        json!({
            "n": self.n,
            "z": self.z.iter().map(big_json).collect::<Vec<_>>(),
            "vertices": oracle.vertices().iter().map(|v| v.iter().map(big_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "facets": oracle.facets().iter().map(|f| json!({
                "S": subset::elements(f.support).map(|i| i + 1).collect::<Vec<_>>(),
                "b": big_json(&f.bound),
            })).collect::<Vec<_>>(),
        })
    }
}

/// JSON number when it fits in an `i64`, otherwise a decimal string.
pub fn big_json(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

/// A face: its vertex set, its preposet (the normal cone) and its dimension.
#[derive(Clone, Debug)]
pub struct Face {
    pub vertices: FixedBitSet,
    pub preposet: Preposet,
    pub dim: usize,
}

/// `Σ_{i∈S} x_i ≥ b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub support: Subset,
    pub bound: BigInt,
    pub face: usize,
}

/// Index of a permutation in lexicographic order (its Lehmer code).
pub fn permutation_rank(sigma: &Permutation) -> usize {
    let w = sigma.word();
    let n = w.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = w[i + 1..].iter().filter(|&&x| x < w[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

struct FaceData {
    partitions: Vec<OrderedPartition>,
    partition_face: Vec<usize>,
    faces: Vec<Face>,
    by_vertices: HashMap<FixedBitSet, usize>,
    tight: Vec<FixedBitSet>,
    dim: usize,
}

/// Vertices, permutation fibers and (lazily) faces of a polytope, by exhaustive enumeration.
pub struct Oracle {
    polytope: SubmodularPolytope,
    perms: Vec<Permutation>,
    perm_vertex: Vec<usize>,
    vertices: Vec<Vec<BigInt>>,
    vertex_index: HashMap<Vec<BigInt>, usize>,
    fibers: Vec<Vec<usize>>,
    faces: OnceLock<FaceData>,
    rotation: OnceLock<FinitePoset>,
}

impl Oracle {
    pub fn new(polytope: &SubmodularPolytope, limits: &Limits) -> Result<Oracle> {
        limits.check(polytope.n())?;
        let perms = Permutation::all(polytope.n());
        let greedy: Vec<Vec<BigInt>> = perms.par_iter().map(|s| polytope.greedy_vertex(s)).collect();
        let mut vertices = Vec::new();
        let mut vertex_index = HashMap::new();
        let mut fibers: Vec<Vec<usize>> = Vec::new();
        let mut perm_vertex = Vec::with_capacity(perms.len());
        for (k, v) in greedy.into_iter().enumerate() {
            let idx = *vertex_index.entry(v.clone()).or_insert_with(|| {
                vertices.push(v);
                fibers.push(Vec::new());
                vertices.len() - 1
            });
            fibers[idx].push(k);
            perm_vertex.push(idx);
        }
        Ok(Oracle {
            polytope: polytope.clone(),
            perms,
            perm_vertex,
            vertices,
            vertex_index,
            fibers,
            faces: OnceLock::new(),
            rotation: OnceLock::new(),
        })
    }

    /// Oracle under the default bound.
    pub fn of(polytope: &SubmodularPolytope) -> Result<Oracle> {
        Self::new(polytope, &Limits::default())
    }

    pub fn polytope(&self) -> &SubmodularPolytope {
        &self.polytope
    }

    pub fn n(&self) -> usize {
        self.polytope.n
    }

    /// Distinct greedy vertices, in order of first appearance over permutations in lexicographic order.
    pub fn vertices(&self) -> &[Vec<BigInt>] {
        &self.vertices
    }

    pub fn vertex_index(&self, v: &[BigInt]) -> Option<usize> {
        self.vertex_index.get(v).copied()
    }

    /// All permutations in lexicographic order.
    pub fn permutations(&self) -> &[Permutation] {
        &self.perms
    }

    /// Vertex selected by each permutation (indexed like [`Self::permutations`]).
    pub fn permutation_vertices(&self) -> &[usize] {
        &self.perm_vertex
    }

    pub fn vertex_of(&self, sigma: &Permutation) -> usize {
        self.perm_vertex[permutation_rank(sigma)]
    }

    /// Permutation indices selecting each vertex: the classes of the vertex equivalence.
    pub fn fibers(&self) -> &[Vec<usize>] {
        &self.fibers
    }

    /// Poset of a vertex: intersection of the linear orders in its fiber.
    pub fn vertex_poset(&self, v: usize) -> Preposet {
        let n = self.n();
        self.fibers[v]
            .iter()
            .map(|&k| self.perms[k].to_ordered_partition().preposet())
            .reduce(|a, b| a.intersection(&b))
            .unwrap_or_else(|| Preposet::complete(n))
    }

    fn face_data(&self) -> &FaceData {
        self.faces.get_or_init(|| self.compute_faces())
    }

    fn compute_faces(&self) -> FaceData {
        let n = self.n();
        let nv = self.vertices.len();
        let full = subset::full(n);
        // tight[S] = vertices v with v(S) = z(S)
        let sums: Vec<Vec<BigInt>> = self
            .vertices
            .par_iter()
            .map(|v| {
                let mut s = vec![BigInt::zero(); 1 << n];
                for mask in 1..1usize << n {
                    let low = mask.trailing_zeros() as usize;
                    s[mask] = &s[mask & (mask - 1)] + &v[low];
                }
                s
            })
            .collect();
        let tight: Vec<FixedBitSet> = (0..1usize << n)
            .into_par_iter()
            .map(|mask| {
                let mut bits = FixedBitSet::with_capacity(nv);
                for (k, s) in sums.iter().enumerate() {
                    if s[mask] == self.polytope.z[mask] {
                        bits.insert(k);
                    }
                }
                bits
            })
            .collect();
        let partitions = if n == 0 {
            vec![OrderedPartition::from_masks(0, Vec::new()).expect("empty partition")]
        } else {
            OrderedPartition::enumerate(n)
        };
        let selected: Vec<FixedBitSet> = partitions
            .par_iter()
            .map(|mu| {
                let mut bits = tight[full as usize].clone();
                let mut upper: Subset = 0;
                for &p in mu.parts().iter().rev() {
                    upper |= p;
                    bits.intersect_with(&tight[upper as usize]);
                }
                bits
            })
            .collect();
        let mut by_vertices: HashMap<FixedBitSet, usize> = HashMap::new();
        let mut faces: Vec<Face> = Vec::new();
        let mut partition_face = Vec::with_capacity(partitions.len());
        for (mu, bits) in partitions.iter().zip(selected) {
            let pre = mu.preposet();
            let idx = match by_vertices.get(&bits) {
                Some(&idx) => {
                    faces[idx].preposet = faces[idx].preposet.intersection(&pre);
                    idx
                }
                None => {
                    faces.push(Face { vertices: bits.clone(), preposet: pre, dim: 0 });
                    by_vertices.insert(bits, faces.len() - 1);
                    faces.len() - 1
                }
            };
            partition_face.push(idx);
        }
        let dims: Vec<usize> = faces.par_iter().map(|f| affine_rank(&self.vertices, &f.vertices)).collect();
        for (f, d) in faces.iter_mut().zip(dims) {
            f.dim = d;
        }
        let dim = faces[partition_face[0]].dim;
        FaceData { partitions, partition_face, faces, by_vertices, tight, dim }
    }

    pub fn dim(&self) -> usize {
        self.face_data().dim
    }

    /// All nonempty faces, the polytope included.
    pub fn faces(&self) -> &[Face] {
        &self.face_data().faces
    }

    /// Ordered partitions in enumeration order, with the face each one selects.
    pub fn partition_faces(&self) -> impl Iterator<Item = (&OrderedPartition, usize)> {
        let data = self.face_data();
        data.partitions.iter().zip(data.partition_face.iter().copied())
    }

    /// Face maximizing `w_i` = index of the part of `i`.
    pub fn face_of_partition(&self, mu: &OrderedPartition) -> &Face {
        let data = self.face_data();
        let full = subset::full(self.n());
        let mut bits = data.tight[full as usize].clone();
        let mut upper: Subset = 0;
        for &p in mu.parts().iter().rev() {
            upper |= p;
            bits.intersect_with(&data.tight[upper as usize]);
        }
        &data.faces[data.by_vertices[&bits]]
    }

    /// Face counts by dimension `0..=dim`.
    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0u64; self.dim() + 1];
        for f in self.faces() {
            counts[f.dim] += 1;
        }
        FVector { counts }
    }

    /// One inequality per facet: the support `S` of least size (then least mask) whose tight face
    /// `Σ_S x = z([n]) − z([n]∖S)` has codimension one.
    pub fn facets(&self) -> Vec<Facet> {
        let data = self.face_data();
        let n = self.n();
        let full = subset::full(n);
        let d = data.dim;
        if d == 0 {
            return Vec::new();
        }
        let mut supports: Vec<Subset> = (1..full).collect();
        supports.sort_by_key(|&s| (subset::size(s), s));
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for s in supports {
            let complement = full & !s;
            let mut bits = data.tight[full as usize].clone();
            bits.intersect_with(&data.tight[complement as usize]);
            let Some(&face) = data.by_vertices.get(&bits) else { continue };
            if data.faces[face].dim + 1 == d && seen.insert(face) {
                let bound = self.polytope.total() - &self.polytope.z[complement as usize];
                out.push(Facet { support: s, bound, face });
            }
        }
        out
    }

    /// Edges of the skeleton as vertex pairs `(a, b)` oriented so that `⟨ω, b⟩ > ⟨ω, a⟩`,
    /// `ω = Σ (n+1−2i) e_i`.
    pub fn oriented_edges(&self) -> Vec<(usize, usize)> {
        let omega = self.omega_values();
        self.faces()
            .iter()
            .filter(|f| f.dim == 1)
            .map(|f| {
                let ends: Vec<usize> = f.vertices.ones().collect();
                assert_eq!(ends.len(), 2, "an edge has two vertices");
                let (a, b) = (ends[0], ends[1]);
                assert_ne!(omega[a], omega[b], "edge orthogonal to ω");
                if omega[a] < omega[b] {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }

    /// Whether every vertex lies on exactly `dim` edges.
    pub fn is_simple(&self) -> bool {
        let mut degree = vec![0usize; self.vertices.len()];
        for f in self.faces().iter().filter(|f| f.dim == 1) {
            for v in f.vertices.ones() {
                degree[v] += 1;
            }
        }
        let d = self.dim();
        degree.iter().all(|&k| k == d)
    }

    /// `⟨ω, v⟩` for each vertex.
    pub fn omega_values(&self) -> Vec<BigInt> {
        let n = self.n() as i64;
        self.vertices
            .iter()
            .map(|v| v.iter().enumerate().map(|(i, x)| x * (n - 1 - 2 * i as i64)).sum())
            .collect()
    }

    /// The rotation order: reachability along oriented edges.
    pub fn rotation_poset(&self) -> &FinitePoset {
        self.rotation.get_or_init(|| {
            FinitePoset::from_relation(self.vertices.len(), &self.oriented_edges()).expect("ω orientation is acyclic")
        })
    }

    pub fn rotation_leq(&self, a: usize, b: usize) -> bool {
        self.rotation_poset().leq(a, b)
    }

    /// `pp_ℓ`: pairs of a vertex poset and an `ℓ`-part ordered partition extending it.
    pub fn partitioned_poset_profile(&self) -> Vec<u64> {
        let n = self.n();
        let partitions = if n == 0 { Vec::new() } else { OrderedPartition::enumerate(n) };
        let posets: Vec<Preposet> = (0..self.vertices.len()).map(|v| self.vertex_poset(v)).collect();
        let mut profile = vec![0u64; n + 1];
        if n == 0 {
            profile[0] = posets.len() as u64;
            return profile;
        }
        for mu in &partitions {
            let pre = mu.preposet();
            let count = posets.iter().filter(|p| p.refines(&pre)).count() as u64;
            profile[mu.num_parts()] += count;
        }
        profile
    }
}

/// Vertex count of `P ⧢ Q` from the partitioned poset profiles of two factors of positive dimension:
/// `Σ_ℓ pp_ℓ(P) (pp_{ℓ−1}(Q) + 2 pp_ℓ(Q) + pp_{ℓ+1}(Q))`.
pub fn shuffle_vertex_count(p: &[u64], q: &[u64]) -> u64 {
    let at = |v: &[u64], l: usize| v.get(l).copied().unwrap_or(0);
    (0..p.len())
        .map(|l| {
            let below = if l == 0 { 0 } else { at(q, l - 1) };
            p[l] * (below + 2 * at(q, l) + at(q, l + 1))
        })
        .sum()
}

/// Affine dimension of a set of points, by fraction-free elimination of differences.
fn affine_rank(points: &[Vec<BigInt>], members: &FixedBitSet) -> usize {
    let mut iter = members.ones();
    let Some(first) = iter.next() else { return 0 };
    let base = &points[first];
    let mut basis: Vec<(usize, Vec<BigInt>)> = Vec::new();
    for k in iter {
        let mut v: Vec<BigInt> = points[k].iter().zip(base).map(|(a, b)| a - b).collect();
        for (pivot, row) in &basis {
            if v[*pivot].is_zero() {
                continue;
            }
            let (a, b) = (row[*pivot].clone(), v[*pivot].clone());
            for (x, r) in v.iter_mut().zip(row) {
                *x = &a * &*x - &b * r;
            }
            reduce_content(&mut v);
        }
        if let Some(pivot) = v.iter().position(|x| !x.is_zero()) {
            basis.push((pivot, v));
            if basis.len() == base.len() {
                break;
            }
        }
    }
    basis.len()
}

fn reduce_content(v: &mut [BigInt]) {
    use num_integer::Integer;
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Face counts `f_0, …, f_d` (the polytope counted, the empty face not).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    pub counts: Vec<u64>,
}

impl FVector {
    /// With the empty face prepended, as `(1, f_0, …, f_d)`.
    pub fn with_empty_face(&self) -> Vec<u64> {
        let mut v = vec![1];
        v.extend(&self.counts);
        v
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

impl std::fmt::Display for FVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let items: Vec<String> = self.with_empty_face().iter().map(|c| c.to_string()).collect();
        write!(f, "({})", items.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees;
    use std::collections::BTreeSet;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    fn fv(p: &SubmodularPolytope) -> Vec<u64> {
        Oracle::of(p).unwrap().f_vector().with_empty_face()
    }

    #[test]
    fn builder_values() {
        let p = SubmodularPolytope::perm(3);
        assert_eq!(p.z_at(0b001), &BigInt::from(3));
        assert_eq!(p.z_at(0b011), &BigInt::from(5));
        assert_eq!(p.total(), &BigInt::from(6));
        for n in 1..=6 {
            assert_eq!(SubmodularPolytope::asso(n).total(), &BigInt::from(n * (n + 1) / 2));
        }
        let k = SubmodularPolytope::zono(&Graph::complete_multipartite(&[2, 3]));
        assert_eq!(k.total(), &BigInt::from(6));
        assert!(SubmodularPolytope::simplex_face(3, 0).is_err());
        assert!(SubmodularPolytope::simplex_face(3, 0b1000).is_err());
    }

    #[test]
    fn perm_vertices_are_explicit_points() {
        let p = SubmodularPolytope::perm(3);
        let o = Oracle::of(&p).unwrap();
        let got: BTreeSet<Vec<i64>> = o.vertices().iter().map(|v| ints(v)).collect();
        let want: BTreeSet<Vec<i64>> = Permutation::all(3)
            .iter()
            .map(|s| {
                let mut x = vec![0; 3];
                for (i, &si) in s.word().iter().enumerate() {
                    x[si] = i as i64 + 1;
                }
                x
            })
            .collect();
        assert_eq!(got, want);
        // z is the maximum coordinate sum over these points
        for s in 1..8u32 {
            let best = want.iter().map(|x| subset::elements(s).map(|i| x[i]).sum::<i64>()).max().unwrap();
            assert_eq!(p.z_at(s), &BigInt::from(best));
        }
        assert_eq!(ints(&p.greedy_vertex(&Permutation::identity(3))), vec![1, 2, 3]);
        assert_eq!(Oracle::of(&SubmodularPolytope::perm(4)).unwrap().vertices().len(), 24);
    }

    #[test]
    fn operations() {
        assert_eq!(SubmodularPolytope::point(1).product(&SubmodularPolytope::point(1)), SubmodularPolytope::point(2));
        let square = SubmodularPolytope::para(2).product(&SubmodularPolytope::para(2));
        assert_eq!(Oracle::of(&square).unwrap().vertices().len(), 4);
        assert_eq!(fv(&SubmodularPolytope::perm(2).product(&SubmodularPolytope::perm(2))), vec![1, 4, 4, 1]);
        let a = SubmodularPolytope::asso(3);
        assert_eq!(a.minkowski(&SubmodularPolytope::point(3)).unwrap(), a);
        assert!(a.minkowski(&SubmodularPolytope::point(2)).is_err());
        for n in 1..=6 {
            let mut sum = SubmodularPolytope::point(n);
            for i in 0..n {
                for j in i..n {
                    let interval = subset::full(j + 1) & !subset::full(i);
                    sum = sum.minkowski(&SubmodularPolytope::simplex_face(n, interval).unwrap()).unwrap();
                }
            }
            assert_eq!(sum, SubmodularPolytope::asso(n));
        }
        let g = Graph::parse("4:1-2,3-4").unwrap();
        let h = Graph::parse("4:2-3").unwrap();
        let gh = SubmodularPolytope::zono(&g).minkowski(&SubmodularPolytope::zono(&h)).unwrap();
        assert_eq!(gh, SubmodularPolytope::zono(&g.superposition(&h).unwrap()));
    }

    #[test]
    fn reflection() {
        let c = BigInt::from(5);
        let pt = SubmodularPolytope::point(3).reflect(&c);
        let o = Oracle::of(&pt).unwrap();
        assert_eq!(o.vertices().len(), 1);
        assert_eq!(ints(&o.vertices()[0]), vec![5, 5, 5]);
        let a = SubmodularPolytope::asso(4);
        assert_eq!(a.reflect(&c).reflect(&c), a);
        let anti: BTreeSet<Vec<i64>> = Oracle::of(&SubmodularPolytope::anti_asso(3)).unwrap().vertices().iter().map(|v| ints(v)).collect();
        let want: BTreeSet<Vec<i64>> = trees::enumerate_binary(3)
            .iter()
            .map(|t| trees::loday_coordinates(t).iter().map(|x| 4 - x).collect())
            .collect();
        assert_eq!(anti, want);
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(SubmodularPolytope::perm(1).shuffle(&SubmodularPolytope::perm(1)), SubmodularPolytope::perm(2));
        for (m, n) in [(1, 2), (2, 2), (3, 1), (2, 3)] {
            assert_eq!(SubmodularPolytope::perm(m).shuffle(&SubmodularPolytope::perm(n)), SubmodularPolytope::perm(m + n));
        }
        let mul22 = SubmodularPolytope::perm(2).shuffle(&SubmodularPolytope::asso(2));
        assert_eq!(fv(&mul22), vec![1, 24, 36, 14, 1]);
        let mul23 = SubmodularPolytope::perm(2).shuffle(&SubmodularPolytope::asso(3));
        assert_eq!(Oracle::of(&mul23).unwrap().vertices().len(), 108);
        let b23 = SubmodularPolytope::anti_asso(2).shuffle(&SubmodularPolytope::asso(3));
        let o = Oracle::of(&b23).unwrap();
        assert_eq!(o.vertices().len(), 108);
        assert_eq!(o.facets().len(), 29);
    }

    #[test]
    fn greedy_on_asso() {
        let a = SubmodularPolytope::asso(3);
        let o = Oracle::of(&a).unwrap();
        assert_eq!(o.vertices().len(), 5);
        let mut sizes: Vec<usize> = o.fibers().iter().map(|f| f.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 1, 1, 2]);
        // each greedy vertex is the Loday vertex of the insertion tree
        for (k, sigma) in o.permutations().iter().enumerate() {
            let v = &o.vertices()[o.permutation_vertices()[k]];
            assert_eq!(ints(v), trees::loday_coordinates(&trees::bst_insert(sigma)));
        }
        let p0 = Oracle::of(&SubmodularPolytope::point(4)).unwrap();
        assert_eq!(p0.vertices().len(), 1);
        assert!(p0.vertices()[0].iter().all(|x| x.is_zero()));
    }

    #[test]
    fn faces_and_f_vectors() {
        assert_eq!(fv(&SubmodularPolytope::perm(3)), vec![1, 6, 6, 1]);
        assert_eq!(fv(&SubmodularPolytope::asso(3)), vec![1, 5, 5, 1]);
        assert_eq!(fv(&SubmodularPolytope::point(3)), vec![1, 1]);
        assert_eq!(fv(&SubmodularPolytope::point(0)), vec![1, 1]);
        let o = Oracle::of(&SubmodularPolytope::asso(3)).unwrap();
        assert_eq!(o.faces().len(), 11);
        assert_eq!(o.partition_faces().count(), 13);
        let whole = OrderedPartition::enumerate(3)[0].clone();
        assert_eq!(o.face_of_partition(&whole).vertices.count_ones(..), 5);
        for n in 1..=4 {
            let op = Oracle::of(&SubmodularPolytope::perm(n)).unwrap();
            assert_eq!(op.faces().len(), OrderedPartition::enumerate(n).len());
        }
    }

    #[test]
    fn associahedron_face_preposets_are_schroder_trees() {
        for n in 1..=5 {
            let o = Oracle::of(&SubmodularPolytope::asso(n)).unwrap();
            let got: BTreeSet<Preposet> = o.faces().iter().map(|f| f.preposet.clone()).collect();
            let want: BTreeSet<Preposet> = trees::enumerate_schroder(n).iter().map(|t| t.preposet()).collect();
            assert_eq!(got, want);
            for f in o.faces() {
                assert_eq!(f.dim, n - f.preposet.classes().len());
            }
        }
    }

    #[test]
    fn facet_examples() {
        for n in 2..=5 {
            assert_eq!(Oracle::of(&SubmodularPolytope::perm(n)).unwrap().facets().len(), (1 << n) - 2);
        }
        let o = Oracle::of(&SubmodularPolytope::asso(3)).unwrap();
        let facets: BTreeSet<(Subset, i64)> = o.facets().iter().map(|f| (f.support, i64::try_from(&f.bound).unwrap())).collect();
        // intervals I with bound C(|I|+1, 2)
        let want: BTreeSet<(Subset, i64)> = [(0b001, 1), (0b010, 1), (0b100, 1), (0b011, 3), (0b110, 3)].into_iter().collect();
        assert_eq!(facets, want);
        // each facet inequality holds on all vertices and is tight on its face
        for f in o.facets() {
            for (k, v) in o.vertices().iter().enumerate() {
                let s: BigInt = subset::elements(f.support).map(|i| v[i].clone()).sum();
                assert!(s >= f.bound);
                assert_eq!(s == f.bound, o.faces()[f.face].vertices.contains(k));
            }
        }
    }

    #[test]
    fn rotation_orders() {
        for n in 1..=5 {
            let o = Oracle::of(&SubmodularPolytope::perm(n)).unwrap();
            let bottom = o.vertex_of(&Permutation::identity(n));
            for (a, sa) in o.permutations().iter().enumerate() {
                assert!(o.rotation_leq(bottom, o.permutation_vertices()[a]));
                for (b, sb) in o.permutations().iter().enumerate() {
                    let (va, vb) = (o.permutation_vertices()[a], o.permutation_vertices()[b]);
                    assert_eq!(o.rotation_leq(va, vb), sa.weak_order_leq(sb).unwrap());
                }
            }
        }
        for n in 1..=5 {
            let o = Oracle::of(&SubmodularPolytope::asso(n)).unwrap();
            let trees = trees::enumerate_binary(n);
            let index = |t: &trees::PlaneTree| {
                let v: Vec<BigInt> = trees::loday_coordinates(t).into_iter().map(BigInt::from).collect();
                o.vertex_index(&v).unwrap()
            };
            let mut edges = BTreeSet::new();
            for t in &trees {
                for r in trees::tamari_rotations(t) {
                    edges.insert((index(t), index(&r)));
                }
            }
            let oriented: BTreeSet<(usize, usize)> = o.oriented_edges().into_iter().collect();
            assert_eq!(edges, oriented);
        }
    }

    #[test]
    fn partitioned_poset_profiles() {
        assert_eq!(Oracle::of(&SubmodularPolytope::point(1)).unwrap().partitioned_poset_profile(), vec![0, 1]);
        let pp = |p: &SubmodularPolytope| Oracle::of(p).unwrap().partitioned_poset_profile();
        let a = pp(&SubmodularPolytope::asso(3));
        assert_eq!(a, pp(&SubmodularPolytope::anti_asso(3)));
        let (p, q) = (pp(&SubmodularPolytope::perm(2)), pp(&SubmodularPolytope::asso(2)));
        assert_eq!(shuffle_vertex_count(&p, &q), 24);
    }

    #[test]
    fn enumeration_bound() {
        let p = SubmodularPolytope::point(9);
        assert!(matches!(Oracle::of(&p), Err(Error::TooLarge { n: 9, max: 8 })));
        assert!(Oracle::new(&SubmodularPolytope::point(3), &Limits { max_n: 2 }).is_err());
    }

    #[test]
    fn validation() {
        assert!(SubmodularPolytope::new(1, vec![BigInt::from(1), BigInt::from(0)]).is_err());
        let z: Vec<BigInt> = [0, 1, 1, 3].iter().map(|&x| BigInt::from(x)).collect();
        assert!(SubmodularPolytope::new(2, z).is_err());
        let z: Vec<BigInt> = [0, 2, 2, 3].iter().map(|&x| BigInt::from(x)).collect();
        assert!(SubmodularPolytope::new(2, z).is_ok());
    }

    #[test]
    fn permutation_ranks() {
        for (k, s) in Permutation::all(5).iter().enumerate() {
            assert_eq!(permutation_rank(s), k);
        }
    }
}
