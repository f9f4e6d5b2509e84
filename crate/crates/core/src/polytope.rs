//! Point configurations, exact convex hulls, face lattices of polytopes and
//! pointed cones, supporting faces and normal fans.
//!
//! A face is identified by the sorted list of indices of ALL incident input
//! points (or cone generators), not just its vertices; that id convention is
//! what drives the per-face lattices downstream.

use crate::arith::{dot, is_zero_vec, sub, Int};
use crate::error::Error;
use crate::hull::{cone_is_pointed, merged_facets, placing, Facet};
use crate::lattice::{AffineLattice, QuotientLattice};
use crate::matrix::IntMat;
use crate::Result;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

/// Sorted indices of the input points incident to a face.
/// Serialized as comma-joined decimals, e.g. "0,2,3"; the empty id (apex of
/// a pointed cone) serializes as the empty string.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FaceId(Vec<usize>);

impl FaceId {
    pub fn new(mut indices: Vec<usize>) -> FaceId {
        indices.sort_unstable();
        indices.dedup();
        FaceId(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Subset test: self contains other as a set of indices.
    pub fn contains(&self, other: &FaceId) -> bool {
        let mut it = self.0.iter().peekable();
        'outer: for x in &other.0 {
            while let Some(&&y) = it.peek() {
                if y == *x {
                    continue 'outer;
                }
                if y > *x {
                    return false;
                }
                it.next();
            }
            return false;
        }
        true
    }
}

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for FaceId {
    type Err = Error;
    fn from_str(s: &str) -> Result<FaceId> {
        if s.is_empty() {
            return Ok(FaceId(vec![]));
        }
        let indices = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::OutOfRange(format!("bad face id component '{t}'")))
            })
            .collect::<Result<Vec<usize>>>()?;
        Ok(FaceId::new(indices))
    }
}

/// A finite configuration of pairwise-distinct integer points. When the
/// affine lattice generated by the points has lower rank than the ambient
/// dimension, all computation happens in "working" coordinates on that
/// lattice; outputs keyed by point indices are unaffected.
#[derive(Clone, Debug)]
pub struct PointConfiguration {
    original: Vec<Vec<Int>>,
    working: Vec<Vec<Int>>,
    ambient_dim: usize,
    dim: usize,
    lattice: AffineLattice,
}

impl PointConfiguration {
    pub fn new(points: Vec<Vec<Int>>) -> Result<PointConfiguration> {
        if points.is_empty() {
            return Err(Error::EmptyConfiguration);
        }
        let ambient_dim = points[0].len();
        for (i, p) in points.iter().enumerate() {
            if p.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: p.len(),
                    index: i,
                });
            }
        }
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                if points[i] == points[j] {
                    return Err(Error::DuplicatePoint(i, j));
                }
            }
        }
        let lattice = AffineLattice::generated_by(&points)?;
        let dim = lattice.rank();
        let working = if dim == ambient_dim {
            points.clone()
        } else {
            points
                .iter()
                .map(|p| lattice.point_coords(p))
                .collect::<Result<Vec<_>>>()?
        };
        Ok(PointConfiguration {
            original: points,
            working,
            ambient_dim,
            dim,
            lattice,
        })
    }

    pub fn from_i64(points: &[&[i64]]) -> Result<PointConfiguration> {
        Self::new(
            points
                .iter()
                .map(|p| p.iter().map(|&x| Int::from(x)).collect())
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.original.len()
    }

    pub fn is_empty(&self) -> bool {
        self.original.is_empty()
    }

    /// Rank of the affine lattice M(A); the dimension of conv(A).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn original_points(&self) -> &[Vec<Int>] {
        &self.original
    }

    /// Points in working coordinates (full-rank lattice coordinates).
    pub fn points(&self) -> &[Vec<Int>] {
        &self.working
    }

    /// The affine lattice M(A) in the original coordinates.
    pub fn generated_lattice(&self) -> &AffineLattice {
        &self.lattice
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LatticeKind {
    Polytope,
    Cone,
}

#[derive(Clone, Debug)]
pub struct Face {
    pub id: FaceId,
    pub dim: usize,
    /// M(A /\ face): affine lattice generated by the incident points
    /// (for cones: the lattice generated by the incident generators).
    pub lattice: AffineLattice,
    /// M /\ L(face): all working-lattice vectors of the linear span.
    pub span_lattice: AffineLattice,
}

/// All faces of a polytope or pointed cone, ordered by (dim, id).
#[derive(Clone, Debug)]
pub struct FaceLattice {
    pub faces: Vec<Face>,
    pub top: usize,
    pub kind: LatticeKind,
    above: Vec<Vec<usize>>,
    below: Vec<Vec<usize>>,
}

impl FaceLattice {
    fn build(mut faces: Vec<Face>, kind: LatticeKind) -> FaceLattice {
        faces.sort_by(|a, b| (a.dim, &a.id).cmp(&(b.dim, &b.id)));
        let n = faces.len();
        let mut above = vec![Vec::new(); n];
        let mut below = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                if i != j && faces[j].id.contains(&faces[i].id) {
                    above[i].push(j);
                    below[j].push(i);
                }
            }
        }
        let top = n - 1;
        debug_assert!(faces[top].dim == faces.iter().map(|f| f.dim).max().unwrap());
        FaceLattice {
            faces,
            top,
            kind,
            above,
            below,
        }
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn face_index(&self, id: &FaceId) -> Option<usize> {
        self.faces.iter().position(|f| &f.id == id)
    }

    /// Strict supersets (faces strictly containing face i).
    pub fn above(&self, i: usize) -> &[usize] {
        &self.above[i]
    }

    /// Strict subsets.
    pub fn below(&self, i: usize) -> &[usize] {
        &self.below[i]
    }

    pub fn le(&self, sub: usize, sup: usize) -> bool {
        sub == sup || self.faces[sup].id.contains(&self.faces[sub].id)
    }

    /// The containment relation as (sub, sup) index pairs (strict).
    pub fn order_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, ups) in self.above.iter().enumerate() {
            for &j in ups {
                out.push((i, j));
            }
        }
        out
    }

    /// Number of faces of each dimension, indexed by dim.
    pub fn f_vector(&self) -> Vec<usize> {
        let top_dim = self.faces[self.top].dim;
        let mut f = vec![0usize; top_dim + 1];
        for face in &self.faces {
            f[face.dim] += 1;
        }
        f
    }

    /// Vertices (dim-0 faces) contained in face i, as face indices.
    pub fn vertices_of(&self, i: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .below(i)
            .iter()
            .copied()
            .filter(|&j| self.faces[j].dim == 0 && !self.faces[j].id.is_empty())
            .collect();
        if self.faces[i].dim == 0 && !self.faces[i].id.is_empty() {
            v.push(i);
        }
        v.sort_unstable();
        v
    }
}

/// Every rank-2 interval of the face poset (with the empty face adjoined at
/// the bottom for polytopes) has exactly four elements.
pub fn diamond_property(lat: &FaceLattice) -> bool {
    for i in 0..lat.len() {
        for &j in lat.above(i) {
            if lat.faces[j].dim == lat.faces[i].dim + 2 {
                let between = lat
                    .above(i)
                    .iter()
                    .filter(|&&k| {
                        lat.faces[k].dim == lat.faces[i].dim + 1 && lat.le(k, j)
                    })
                    .count();
                if between != 2 {
                    return false;
                }
            }
        }
    }
    if lat.kind == LatticeKind::Polytope {
        // interval between the empty face and an edge
        for i in 0..lat.len() {
            if lat.faces[i].dim == 1 && lat.vertices_of(i).len() != 2 {
                return false;
            }
        }
    }
    true
}

fn face_from_point_set(points: &[Vec<Int>], ids: Vec<usize>) -> Result<Face> {
    let id = FaceId::new(ids);
    let members: Vec<Vec<Int>> = id.indices().iter().map(|&j| points[j].clone()).collect();
    let lattice = AffineLattice::generated_by(&members)?;
    let span_lattice = lattice.saturation();
    let dim = lattice.rank();
    debug_assert_eq!(span_lattice.rank(), dim);
    Ok(Face {
        id,
        dim,
        lattice,
        span_lattice,
    })
}

fn closure_of_facet_sets(facet_sets: Vec<Vec<usize>>, keep_empty: bool) -> BTreeSet<Vec<usize>> {
    let mut known: BTreeSet<Vec<usize>> = BTreeSet::new();
    for s in &facet_sets {
        if keep_empty || !s.is_empty() {
            known.insert(s.clone());
        }
    }
    loop {
        let mut fresh: Vec<Vec<usize>> = Vec::new();
        for s in &known {
            for f in &facet_sets {
                let meet: Vec<usize> = s.iter().copied().filter(|v| f.contains(v)).collect();
                if (keep_empty || !meet.is_empty()) && !known.contains(&meet) {
                    fresh.push(meet);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        known.extend(fresh);
    }
    known
}

/// Exact convex hull of a configuration: vertex indices and the facet
/// H-representation in working coordinates.
pub fn convex_hull(config: &PointConfiguration) -> Result<(Vec<usize>, Vec<Facet>)> {
    let model = PolytopeModel::new(config.clone())?;
    let verts = model
        .faces
        .faces
        .iter()
        .filter(|f| f.dim == 0)
        .map(|f| f.id.indices()[0])
        .collect();
    Ok((verts, model.hull_facets))
}

/// A polytope model: configuration, hull facets, and the full face lattice.
#[derive(Clone, Debug)]
pub struct PolytopeModel {
    pub config: PointConfiguration,
    pub faces: FaceLattice,
    /// H-representation of conv(A) in working coordinates.
    pub hull_facets: Vec<Facet>,
}

impl PolytopeModel {
    pub fn new(config: PointConfiguration) -> Result<PolytopeModel> {
        let points = config.points();
        let n = config.dim();
        let all: Vec<usize> = (0..points.len()).collect();
        if n == 0 {
            let face = face_from_point_set(points, all)?;
            return Ok(PolytopeModel {
                config,
                faces: FaceLattice::build(vec![face], LatticeKind::Polytope),
                hull_facets: vec![],
            });
        }
        let run = placing(points, false)?;
        let hull_facets = merged_facets(points, &run);
        let facet_sets: Vec<Vec<usize>> = hull_facets.iter().map(|f| f.incident.clone()).collect();
        let mut sets = closure_of_facet_sets(facet_sets, false);
        sets.insert(all);
        let faces = sets
            .into_iter()
            .map(|ids| face_from_point_set(points, ids))
            .collect::<Result<Vec<Face>>>()?;
        Ok(PolytopeModel {
            config,
            faces: FaceLattice::build(faces, LatticeKind::Polytope),
            hull_facets,
        })
    }

    pub fn from_points(points: Vec<Vec<Int>>) -> Result<PolytopeModel> {
        PolytopeModel::new(PointConfiguration::new(points)?)
    }

    pub fn from_i64(points: &[&[i64]]) -> Result<PolytopeModel> {
        PolytopeModel::new(PointConfiguration::from_i64(points)?)
    }

    /// Lexicographically smallest (in working coordinates) vertex of a face.
    pub fn canonical_vertex(&self, face: usize) -> usize {
        let mut best: Option<usize> = None;
        for v in self.faces.vertices_of(face) {
            let idx = self.faces.faces[v].id.indices()[0];
            best = Some(match best {
                None => idx,
                Some(b) => {
                    if self.config.points()[idx] < self.config.points()[b] {
                        idx
                    } else {
                        b
                    }
                }
            });
        }
        best.expect("face without vertices")
    }

    /// All point-index choices of vertex for a face (for independence tests).
    pub fn vertex_choices(&self, face: usize) -> Vec<usize> {
        self.faces
            .vertices_of(face)
            .iter()
            .map(|&v| self.faces.faces[v].id.indices()[0])
            .collect()
    }
}

/// The face of P minimizing the covector u (argmin over the configuration).
/// `u` is given in the original ambient coordinates.
pub fn supporting_face(model: &PolytopeModel, u: &[Int]) -> Result<usize> {
    let pts = model.config.original_points();
    if u.len() != model.config.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: model.config.ambient_dim(),
            found: u.len(),
            index: 0,
        });
    }
    let values: Vec<Int> = pts.iter().map(|p| dot(u, p)).collect();
    let min = values.iter().min().cloned().expect("nonempty");
    let ids: Vec<usize> = (0..pts.len()).filter(|&j| values[j] == min).collect();
    let id = FaceId::new(ids);
    model
        .faces
        .face_index(&id)
        .ok_or_else(|| Error::Inconsistency(format!("argmin set {id} is not a face")))
}

/// A polyhedral cone given by generators; `pointed` is verified on creation
/// where this type is produced by the library.
#[derive(Clone, Debug)]
pub struct RationalCone {
    pub generators: Vec<Vec<Int>>,
    pub ambient_dim: usize,
    pub dim: usize,
    pub pointed: bool,
}

/// Closures of the normal-fan cones of P, one per face: the cone of a face is
/// generated by the inner normals of the facets containing it (in working
/// coordinates).
pub fn normal_fan(model: &PolytopeModel) -> Vec<(usize, RationalCone)> {
    let n = model.config.dim();
    let mut out = Vec::new();
    for (i, face) in model.faces.faces.iter().enumerate() {
        let gens: Vec<Vec<Int>> = model
            .hull_facets
            .iter()
            .filter(|f| face.id.indices().iter().all(|j| f.incident.contains(j)))
            .map(|f| f.normal.clone())
            .collect();
        let dim = if gens.is_empty() {
            0
        } else {
            crate::matrix::rank(&IntMat::from_rows(gens.clone(), n))
        };
        out.push((
            i,
            RationalCone {
                generators: gens,
                ambient_dim: n,
                dim,
                pointed: true,
            },
        ));
    }
    out
}

/// Membership of a covector in the closed normal cone of a face:
/// u lies in the cone of F iff the supporting face of u contains F.
pub fn normal_cone_contains(model: &PolytopeModel, face: usize, u: &[Int]) -> Result<bool> {
    let supp = supporting_face(model, u)?;
    Ok(model.faces.le(face, supp))
}

/// A pointed full-dimensional cone model (faces indexed by incident
/// generator subsets; the apex has the empty id).
#[derive(Clone, Debug)]
pub struct ConeModel {
    pub generators: Vec<Vec<Int>>,
    pub dim: usize,
    pub faces: FaceLattice,
}

impl ConeModel {
    pub fn new(generators: Vec<Vec<Int>>) -> Result<ConeModel> {
        if generators.is_empty() {
            return Err(Error::EmptyConfiguration);
        }
        let dim = generators[0].len();
        for (i, g) in generators.iter().enumerate() {
            if g.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.len(),
                    index: i,
                });
            }
            if is_zero_vec(g) {
                return Err(Error::OutOfRange(format!("generator {i} is zero")));
            }
        }
        let span_rank = crate::matrix::rank(&IntMat::from_rows(generators.clone(), dim));
        if span_rank != dim {
            return Err(Error::RankMismatch(format!(
                "cone spans only dimension {span_rank} of {dim}; the dual cone is not strongly convex"
            )));
        }
        if !cone_is_pointed(&generators)? {
            return Err(Error::NotPointed(
                "cone contains a line; orbit-face correspondence needs a pointed cone".into(),
            ));
        }
        let run = placing(&generators, true)?;
        let hull_facets = merged_facets(&generators, &run);
        let facet_sets: Vec<Vec<usize>> = hull_facets.iter().map(|f| f.incident.clone()).collect();
        let mut sets = closure_of_facet_sets(facet_sets, true);
        sets.insert((0..generators.len()).collect());
        if dim >= 1 {
            sets.insert(vec![]);
        }
        let faces = sets
            .into_iter()
            .map(|ids| cone_face(&generators, ids, dim))
            .collect::<Result<Vec<Face>>>()?;
        Ok(ConeModel {
            generators,
            dim,
            faces: FaceLattice::build(faces, LatticeKind::Cone),
        })
    }

    pub fn from_i64(gens: &[&[i64]]) -> Result<ConeModel> {
        Self::new(
            gens.iter()
                .map(|p| p.iter().map(|&x| Int::from(x)).collect())
                .collect(),
        )
    }
}

fn cone_face(gens: &[Vec<Int>], ids: Vec<usize>, dim: usize) -> Result<Face> {
    let id = FaceId::new(ids);
    let members: Vec<Vec<Int>> = id.indices().iter().map(|&j| gens[j].clone()).collect();
    let span_lattice = AffineLattice::from_directions(members, dim).saturation();
    let dim_face = span_lattice.rank();
    Ok(Face {
        id,
        dim: dim_face,
        lattice: span_lattice.clone(),
        span_lattice,
    })
}

/// Either model; the face-pair machinery is shared between them.
#[derive(Clone, Debug)]
pub enum Model {
    Polytope(PolytopeModel),
    Cone(ConeModel),
}

impl Model {
    pub fn faces(&self) -> &FaceLattice {
        match self {
            Model::Polytope(m) => &m.faces,
            Model::Cone(m) => &m.faces,
        }
    }

    pub fn working_dim(&self) -> usize {
        match self {
            Model::Polytope(m) => m.config.dim(),
            Model::Cone(m) => m.dim,
        }
    }
}

/// The projection of the cone of a face pair: quotient lattice data plus the
/// projected generators (nonzero, deduplicated, in quotient coordinates).
#[derive(Clone, Debug)]
pub struct ProjectedCone {
    pub quotient: QuotientLattice,
    pub generators: Vec<Vec<Int>>,
    pub cone: RationalCone,
}

/// K_{alpha,beta}: project the cone of face alpha along the span of face
/// beta. In polytope context the polytope is first translated so that a
/// vertex of beta (the canonical one unless overridden) sits at the origin.
pub fn project_cone_along_face(
    model: &Model,
    alpha: usize,
    beta: usize,
    vertex_override: Option<usize>,
) -> Result<ProjectedCone> {
    let faces = model.faces();
    if !faces.le(beta, alpha) {
        return Err(Error::NotNested(
            faces.faces[alpha].id.to_string(),
            faces.faces[beta].id.to_string(),
        ));
    }
    let n = model.working_dim();
    let ambient = AffineLattice::standard(n);
    let (alpha_gens, beta_dirs): (Vec<Vec<Int>>, Vec<Vec<Int>>) = match model {
        Model::Polytope(m) => {
            let v = match vertex_override {
                Some(v) => v,
                None => m.canonical_vertex(beta),
            };
            let vp = &m.config.points()[v];
            let a = faces.faces[alpha]
                .id
                .indices()
                .iter()
                .map(|&j| sub(&m.config.points()[j], vp))
                .collect();
            let b = faces.faces[beta]
                .id
                .indices()
                .iter()
                .map(|&j| sub(&m.config.points()[j], vp))
                .collect();
            (a, b)
        }
        Model::Cone(m) => {
            let a = faces.faces[alpha]
                .id
                .indices()
                .iter()
                .map(|&j| m.generators[j].clone())
                .collect();
            let b = faces.faces[beta]
                .id
                .indices()
                .iter()
                .map(|&j| m.generators[j].clone())
                .collect();
            (a, b)
        }
    };
    let killed = AffineLattice::from_directions(beta_dirs, n);
    let quotient = QuotientLattice::new(ambient, killed)?;
    let mut generators: Vec<Vec<Int>> = Vec::new();
    for g in &alpha_gens {
        let img = quotient.project(g)?;
        if !is_zero_vec(&img) && !generators.contains(&img) {
            generators.push(img);
        }
    }
    let expect_dim = faces.faces[alpha].dim - faces.faces[beta].dim;
    let q = quotient.rank();
    let got_dim = if generators.is_empty() {
        0
    } else {
        crate::matrix::rank(&IntMat::from_rows(generators.clone(), q))
    };
    if got_dim != expect_dim {
        return Err(Error::Inconsistency(format!(
            "projected cone of ({}, {}) has dimension {got_dim}, expected {expect_dim}",
            faces.faces[alpha].id, faces.faces[beta].id
        )));
    }
    if !cone_is_pointed(&generators)? {
        return Err(Error::Inconsistency(format!(
            "projected cone of ({}, {}) is not pointed",
            faces.faces[alpha].id, faces.faces[beta].id
        )));
    }
    let cone = RationalCone {
        generators: generators.clone(),
        ambient_dim: q,
        dim: expect_dim,
        pointed: true,
    };
    Ok(ProjectedCone {
        quotient,
        generators,
        cone,
    })
}

/// Lattice points of conv(points), enumerated in the lattice generated by the
/// given points (requires that lattice to be full-rank in the ambient space).
/// Points are returned sorted lexicographically.
pub fn lattice_points_of_hull(points: &[Vec<Int>]) -> Result<Vec<Vec<Int>>> {
    let config = PointConfiguration::new(points.to_vec())?;
    if config.dim() != config.ambient_dim() {
        return Err(Error::RankMismatch(
            "hull point enumeration expects a full-dimensional configuration".into(),
        ));
    }
    let model = PolytopeModel::new(config)?;
    let pts = model.config.points();
    let n = model.config.dim();
    if n == 0 {
        return Ok(vec![pts[0].clone()]);
    }
    let mut lo = pts[0].clone();
    let mut hi = pts[0].clone();
    for p in pts {
        for j in 0..n {
            if p[j] < lo[j] {
                lo[j] = p[j].clone();
            }
            if p[j] > hi[j] {
                hi[j] = p[j].clone();
            }
        }
    }
    let mut out = Vec::new();
    let mut cursor = lo.clone();
    'walk: loop {
        if model
            .hull_facets
            .iter()
            .all(|f| dot(&f.normal, &cursor) >= f.offset)
        {
            out.push(cursor.clone());
        }
        for j in (0..n).rev() {
            if cursor[j] < hi[j] {
                cursor[j] += 1;
                for (k, c) in cursor.iter_mut().enumerate().skip(j + 1) {
                    *c = lo[k].clone();
                }
                continue 'walk;
            }
        }
        break;
    }
    out.sort();
    Ok(out)
}

/// Face-id keyed map helper used by the serialization layers.
pub fn face_table_to_map<T: Clone>(lat: &FaceLattice, values: &[T]) -> BTreeMap<String, T> {
    lat.faces
        .iter()
        .zip(values)
        .map(|(f, v)| (f.id.to_string(), v.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex_with_doubled_edge() -> PolytopeModel {
        // conv{0, e1, e2, 2*e3} with the midpoint e3 in the configuration
        PolytopeModel::from_i64(&[
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[0, 0, 2],
        ])
        .unwrap()
    }

    #[test]
    fn doubled_edge_simplex_hull() {
        let model = simplex_with_doubled_edge();
        let verts: Vec<usize> = model
            .faces
            .faces
            .iter()
            .filter(|f| f.dim == 0)
            .map(|f| f.id.indices()[0])
            .collect();
        assert_eq!(verts, vec![0, 1, 2, 4]);
        assert_eq!(model.faces.len(), 15);
        let long_edge = FaceId::new(vec![0, 3, 4]);
        let idx = model.faces.face_index(&long_edge).expect("edge 0-2e3");
        assert_eq!(model.faces.faces[idx].dim, 1);
        assert_eq!(model.faces.f_vector(), vec![4, 6, 4, 1]);
    }

    #[test]
    fn single_point_lattice() {
        let model = PolytopeModel::from_i64(&[&[3, 1]]).unwrap();
        assert_eq!(model.faces.len(), 1);
        assert_eq!(model.faces.faces[0].dim, 0);
    }

    #[test]
    fn segment_face_lattice() {
        let model = PolytopeModel::from_i64(&[&[0], &[1], &[2], &[3]]).unwrap();
        assert_eq!(model.faces.len(), 3);
        let top = &model.faces.faces[model.faces.top];
        assert_eq!(top.id, FaceId::new(vec![0, 1, 2, 3]));
    }

    #[test]
    fn unit_square_face_lattice() {
        let model = PolytopeModel::from_i64(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert_eq!(model.faces.len(), 9);
        assert!(diamond_property(&model.faces));
    }

    #[test]
    fn lower_dimensional_input_is_restricted() {
        // segment embedded diagonally in Z^3 with step (1,1,2)
        let model =
            PolytopeModel::from_i64(&[&[0, 0, 0], &[1, 1, 2], &[2, 2, 4], &[3, 3, 6]]).unwrap();
        assert_eq!(model.config.dim(), 1);
        assert_eq!(model.faces.len(), 3);
    }

    #[test]
    fn supporting_face_examples() {
        let model = simplex_with_doubled_edge();
        let zero = supporting_face(&model, &crate::arith::vec_i64(&[0, 0, 0])).unwrap();
        assert_eq!(zero, model.faces.top);
        let v = supporting_face(&model, &crate::arith::vec_i64(&[1, 1, 1])).unwrap();
        assert_eq!(model.faces.faces[v].id, FaceId::new(vec![0]));

        let square = PolytopeModel::from_i64(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let bottom = supporting_face(&square, &crate::arith::vec_i64(&[0, 1])).unwrap();
        assert_eq!(square.faces.faces[bottom].id, FaceId::new(vec![0, 1]));
    }

    #[test]
    fn normal_fan_counts_are_dual() {
        let square = PolytopeModel::from_i64(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let fan = normal_fan(&square);
        assert_eq!(fan.len(), 9);
        for (i, cone) in &fan {
            assert_eq!(cone.dim, 2 - square.faces.faces[*i].dim);
        }

        let model = simplex_with_doubled_edge();
        let fan3 = normal_fan(&model);
        assert_eq!(fan3.len(), 15);
        for (i, cone) in &fan3 {
            assert_eq!(cone.dim, 3 - model.faces.faces[*i].dim);
        }
    }

    #[test]
    fn cone_face_lattices() {
        let quadrant = ConeModel::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(quadrant.faces.len(), 4);

        let singular = ConeModel::from_i64(&[&[1, 0], &[1, 2]]).unwrap();
        assert_eq!(singular.faces.len(), 4);

        let three = ConeModel::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 2]]).unwrap();
        assert_eq!(three.faces.len(), 8);
    }

    #[test]
    fn cone_rejects_bad_input() {
        assert!(matches!(
            ConeModel::from_i64(&[&[1, 0], &[-1, 0], &[0, 1]]),
            Err(Error::NotPointed(_))
        ));
        assert!(ConeModel::from_i64(&[&[1, 0]]).is_err()); // not full-dim
        assert!(ConeModel::from_i64(&[&[0, 0], &[1, 0]]).is_err()); // zero gen
    }

    #[test]
    fn projected_cone_examples() {
        // quadrant: project the whole cone along one ray -> a ray
        let quadrant = ConeModel::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        let model = Model::Cone(quadrant);
        let faces = model.faces();
        let top = faces.top;
        let ray = faces.face_index(&FaceId::new(vec![0])).unwrap();
        let apex = faces.face_index(&FaceId::new(vec![])).unwrap();
        let pc = project_cone_along_face(&model, top, ray, None).unwrap();
        assert_eq!(pc.cone.dim, 1);
        assert_eq!(pc.generators.len(), 1);
        // projection along the apex (rank-0 span) is the cone itself
        let pc0 = project_cone_along_face(&model, top, apex, None).unwrap();
        assert_eq!(pc0.cone.dim, 2);
    }

    #[test]
    fn hull_lattice_point_enumeration() {
        let pts = lattice_points_of_hull(&[
            crate::arith::vec_i64(&[0, 0]),
            crate::arith::vec_i64(&[2, 0]),
            crate::arith::vec_i64(&[0, 2]),
        ])
        .unwrap();
        assert_eq!(pts.len(), 6);
    }

    #[test]
    fn face_id_roundtrip() {
        let id = FaceId::new(vec![3, 0, 2]);
        assert_eq!(id.to_string(), "0,2,3");
        assert_eq!("0,2,3".parse::<FaceId>().unwrap(), id);
        assert_eq!("".parse::<FaceId>().unwrap(), FaceId::new(vec![]));
        assert!(FaceId::new(vec![0, 1, 2]).contains(&FaceId::new(vec![0, 2])));
        assert!(!FaceId::new(vec![0, 2]).contains(&FaceId::new(vec![1])));
    }
}
