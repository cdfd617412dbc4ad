//! The twelve counting tables indexed by `(m, n)`: rows `m`, columns `n`, cell `(0, 0)` undefined.
//!
//! Cells come from closed forms and generating functions. [`verify`] recomputes them from the
//! combinatorial models and from the geometric face oracle.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::geometry::{Limits, Oracle, SubmodularPolytope};
use crate::graphs::{self, Graph, ShuffleKind};
use crate::{bitrees, genfun, painted, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    VerticesPermCube,
    FacetsPermCube,
    VerticesPermPoint,
    FacetsPermPoint,
    VerticesPointPoint,
    FacetsPointPoint,
    VerticesMultiplihedra,
    FacetsMultiplihedra,
    FacesMultiplihedra,
    VerticesBiassociahedra,
    FacetsBiassociahedra,
    FacesBiassociahedra,
}

/// What a table counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    Vertices,
    Facets,
    /// Nonempty faces, the polytope itself included.
    Faces,
}

/// The two shuffle factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    Perm,
    Para,
    Point,
    Asso,
    AntiAsso,
}

impl Factor {
    fn polytope(self, n: usize) -> SubmodularPolytope {
        match self {
            Factor::Perm => SubmodularPolytope::perm(n),
            Factor::Para => SubmodularPolytope::para(n),
            Factor::Point => SubmodularPolytope::point(n),
            Factor::Asso => SubmodularPolytope::asso(n),
            Factor::AntiAsso => SubmodularPolytope::anti_asso(n),
        }
    }

    fn dim(self, n: usize) -> usize {
        match self {
            Factor::Point => 0,
            _ => n.saturating_sub(1),
        }
    }

    fn facets(self, n: usize) -> BigInt {
        if self.dim(n) == 0 {
            return BigInt::zero();
        }
        match self {
            Factor::Perm => (BigInt::one() << n) - 2,
            Factor::Para => BigInt::from(2 * (n - 1)),
            Factor::Asso | Factor::AntiAsso => genfun::binomial(n + 1, 2) - 1,
            Factor::Point => unreachable!(),
        }
    }

    fn graph(self, n: usize) -> Option<Graph> {
        match self {
            Factor::Perm => Some(Graph::complete(n)),
            Factor::Para => Some(Graph::path(n)),
            Factor::Point => Some(Graph::empty(n)),
            Factor::Asso | Factor::AntiAsso => None,
        }
    }
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::VerticesPermCube,
        Family::FacetsPermCube,
        Family::VerticesPermPoint,
        Family::FacetsPermPoint,
        Family::VerticesPointPoint,
        Family::FacetsPointPoint,
        Family::VerticesMultiplihedra,
        Family::FacetsMultiplihedra,
        Family::FacesMultiplihedra,
        Family::VerticesBiassociahedra,
        Family::FacetsBiassociahedra,
        Family::FacesBiassociahedra,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::VerticesPermCube => "verticesPermCube",
            Family::FacetsPermCube => "facetsPermCube",
            Family::VerticesPermPoint => "verticesPermPoint",
            Family::FacetsPermPoint => "facetsPermPoint",
            Family::VerticesPointPoint => "verticesPointPoint",
            Family::FacetsPointPoint => "facetsPointPoint",
            Family::VerticesMultiplihedra => "verticesMultiplihedra",
            Family::FacetsMultiplihedra => "facetsMultiplihedra",
            Family::FacesMultiplihedra => "facesMultiplihedra",
            Family::VerticesBiassociahedra => "verticesBiassociahedra",
            Family::FacetsBiassociahedra => "facetsBiassociahedra",
            Family::FacesBiassociahedra => "facesBiassociahedra",
        }
    }

    pub fn quantity(self) -> Quantity {
        use Family::*;
        match self {
            VerticesPermCube | VerticesPermPoint | VerticesPointPoint | VerticesMultiplihedra
            | VerticesBiassociahedra => Quantity::Vertices,
            FacetsPermCube | FacetsPermPoint | FacetsPointPoint | FacetsMultiplihedra | FacetsBiassociahedra => {
                Quantity::Facets
            }
            FacesMultiplihedra | FacesBiassociahedra => Quantity::Faces,
        }
    }

    pub fn factors(self) -> (Factor, Factor) {
        use Family::*;
        match self {
            VerticesPermCube | FacetsPermCube => (Factor::Perm, Factor::Para),
            VerticesPermPoint | FacetsPermPoint => (Factor::Perm, Factor::Point),
            VerticesPointPoint | FacetsPointPoint => (Factor::Point, Factor::Point),
            VerticesMultiplihedra | FacetsMultiplihedra | FacesMultiplihedra => (Factor::Perm, Factor::Asso),
            VerticesBiassociahedra | FacetsBiassociahedra | FacesBiassociahedra => (Factor::AntiAsso, Factor::Asso),
        }
    }

    /// Facet count written for a 0-dimensional polytope.
    pub fn point_facets(self) -> u64 {
        match self {
            Family::FacetsBiassociahedra => 0,
            _ => 1,
        }
    }

    pub fn caption(self) -> String {
        let what = match self.quantity() {
            Quantity::Vertices => "vertices",
            Quantity::Facets => "facets",
            Quantity::Faces => "nonempty faces",
        };
        let (p, q) = self.factors();
        format!("number of {what} of {p:?}(m) sh {q:?}(n)")
    }

    /// The shuffle `P(m) ⧢ Q(n)` behind cell `(m, n)`.
    pub fn polytope(self, m: usize, n: usize) -> SubmodularPolytope {
        let (p, q) = self.factors();
        p.polytope(m).shuffle(&q.polytope(n))
    }

    pub fn dim(self, m: usize, n: usize) -> usize {
        let (p, q) = self.factors();
        match (m, n) {
            (_, 0) => p.dim(m),
            (0, _) => q.dim(n),
            _ => m + n - 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown table family `{s}`")))
    }
}

/// Cell `(m, n)` from closed forms; `None` at `(0, 0)`.
pub fn formula(family: Family, m: usize, n: usize) -> Option<BigInt> {
    if m + n == 0 {
        return None;
    }
    if family.quantity() == Quantity::Facets && family.dim(m, n) == 0 {
        return Some(BigInt::from(family.point_facets()));
    }
    let (p, q) = family.factors();
    use Family::*;
    Some(match family {
        VerticesPermCube => graphs::shuffle_zonotope_vertex_count(ShuffleKind::PermPara, m, n),
        VerticesPermPoint => graphs::shuffle_zonotope_vertex_count(ShuffleKind::PermPoint, m, n),
        VerticesPointPoint => graphs::shuffle_zonotope_vertex_count(ShuffleKind::PointPoint, m, n),
        FacetsPermCube | FacetsPermPoint | FacetsPointPoint => match (m, n) {
            (_, 0) => p.facets(m),
            (0, _) => q.facets(n),
            _ => {
                let gs = [p.graph(m).expect("graphical"), q.graph(n).expect("graphical")];
                graphs::shuffle_zonotope_facet_count(&gs).expect("two graphs")
            }
        },
        VerticesMultiplihedra => painted::count_vertices(m, n),
        FacetsMultiplihedra => painted::count_facets(m, n),
        FacesMultiplihedra => painted::count_faces(m, n),
        VerticesBiassociahedra => bitrees::count_vertices(m, n),
        FacetsBiassociahedra => bitrees::count_facets(m, n),
        FacesBiassociahedra => bitrees::count_faces(m, n),
    })
}

/// Independent ways to recompute a cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Painted trees or bitrees, counted by rank.
    Enumeration,
    /// Faces of the polytope from its submodular function.
    Oracle,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Enumeration => "enumeration",
            Route::Oracle => "oracle",
        }
    }
}

/// Routes available for a family. The zonotope tables have no separate tree model.
pub fn routes(family: Family) -> Vec<Route> {
    match family.factors() {
        (_, Factor::Asso) => vec![Route::Enumeration, Route::Oracle],
        _ => vec![Route::Oracle],
    }
}

/// Cell `(m, n)` recomputed along `route`; `None` at `(0, 0)`.
pub fn recompute(family: Family, m: usize, n: usize, route: Route, limits: &Limits) -> Result<Option<BigInt>> {
    if m + n == 0 {
        return Ok(None);
    }
    let dim = family.dim(m, n);
    if family.quantity() == Quantity::Facets && dim == 0 {
        return Ok(Some(BigInt::from(family.point_facets())));
    }
    let count = match route {
        Route::Oracle => {
            let oracle = Oracle::new(&family.polytope(m, n), limits)?;
            debug_assert_eq!(oracle.dim(), dim);
            match family.quantity() {
                Quantity::Vertices => oracle.vertices().len(),
                Quantity::Facets => oracle.facets().len(),
                Quantity::Faces => oracle.faces().len(),
            }
        }
        Route::Enumeration => {
            limits.check(m + n)?;
            let rank = match family.quantity() {
                Quantity::Vertices => Some(0),
                Quantity::Facets => Some(dim - 1),
                Quantity::Faces => None,
            };
            match family.factors() {
                (Factor::Perm, Factor::Asso) => painted::enumerate(m, n, rank).len(),
                (Factor::AntiAsso, Factor::Asso) => bitrees::enumerate(m, n, rank).len(),
                _ => return Err(Error::Parse(format!("{family} has no enumeration route"))),
            }
        }
    };
    Ok(Some(BigInt::from(count)))
}

/// A triangle of cells with `m + n ≤ max_sum`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    family: Family,
    max_sum: usize,
    rows: Vec<Vec<Option<BigInt>>>,
}

impl Table {
    pub fn compute(family: Family, max_sum: usize) -> Table {
        let rows = (0..=max_sum)
            .map(|m| (0..=max_sum - m).map(|n| formula(family, m, n)).collect())
            .collect();
        Table { family, max_sum, rows }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn max_sum(&self) -> usize {
        self.max_sum
    }

    pub fn get(&self, m: usize, n: usize) -> Option<&BigInt> {
        self.rows.get(m)?.get(n)?.as_ref()
    }

    /// Cells `(m, n, value)` in row order, `(0, 0)` skipped.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(m, row)| row.iter().enumerate().filter_map(move |(n, v)| v.as_ref().map(|v| (m, n, v))))
    }

    /// Header `m\n,0,1,...`, then one line per row; short rows end early, `(0,0)` is `.`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m\\n");
        for n in 0..=self.max_sum {
            out.push_str(&format!(",{n}"));
        }
        out.push('\n');
        for (m, row) in self.rows.iter().enumerate() {
            out.push_str(&m.to_string());
            for v in row {
                match v {
                    Some(v) => out.push_str(&format!(",{v}")),
                    None => out.push_str(",."),
                }
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub family: Family,
    pub m: usize,
    pub n: usize,
    pub route: Route,
    pub formula: Option<BigInt>,
    pub recomputed: Option<BigInt>,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &Option<BigInt>| v.as_ref().map_or(".".to_string(), |v| v.to_string());
        write!(
            f,
            "{} ({},{}): formula {} but {} gives {}",
            self.family,
            self.m,
            self.n,
            show(&self.formula),
            self.route.name(),
            show(&self.recomputed)
        )
    }
}

/// Recompute every cell with `m + n ≤ max_sum` along every route and list disagreements.
pub fn verify(family: Family, max_sum: usize, limits: &Limits) -> Result<Vec<Mismatch>> {
    let mut out = Vec::new();
    for m in 0..=max_sum {
        for n in 0..=max_sum - m {
            let expected = formula(family, m, n);
            for route in routes(family) {
                let got = recompute(family, m, n, route, limits)?;
                if got != expected {
                    out.push(Mismatch { family, m, n, route, formula: expected.clone(), recomputed: got });
                }
            }
        }
    }
    Ok(out)
}
