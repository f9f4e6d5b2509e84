//! Subdiagram combinatorics: Hilbert bases of pointed cones, the bounded
//! region between a cone's apex and the hull of its nonzero semigroup points,
//! and the three face-pair weights built from it:
//!
//! * `rsv`   — volume of the region generated by ALL lattice points of the
//!             projected cone (computed through a Hilbert basis),
//! * `subdiagram_volume_u` — same region but generated only by the images of
//!             the configuration points,
//! * `face_index_i` — the index of the configuration lattice of the smaller
//!             face inside the slice of the bigger face's lattice.
//!
//! For saturated, very ample configurations the identity
//! `i(a,b) * u(a,b) = rsv(a,b)` holds on every nested pair; this bridge is
//! exercised heavily by the test suite.

use crate::arith::{dot, is_zero_vec, primitive, sub, Int};
use crate::error::Error;
use crate::hull::{cone_is_pointed, merged_facets, placing};
use crate::lattice::{AffineLattice, QuotientLattice};
use crate::matrix::{smith_normal_form, solve_row_system, IntMat};
use crate::polytope::{project_cone_along_face, Model, PolytopeModel};
use crate::volume::normalized_volume;
use crate::{Options, Result};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};

/// Minimal generating set of cone(gens) /\ Z^t for a pointed full-dimensional
/// cone in Z^t. Simplicial subdivision, fundamental-parallelepiped point
/// enumeration per cell, then a global irreducibility pass.
pub fn hilbert_basis(gens: &[Vec<Int>], max_dim: usize) -> Result<Vec<Vec<Int>>> {
    if gens.is_empty() {
        return Ok(vec![]);
    }
    let t = gens[0].len();
    if t == 0 {
        return Ok(vec![]);
    }
    if t > max_dim {
        return Err(Error::GuardExceeded(format!(
            "Hilbert basis limited to cones of dimension <= {max_dim} (raise --max-dim to override)"
        )));
    }
    let mut prim: Vec<Vec<Int>> = Vec::new();
    for g in gens {
        if is_zero_vec(g) {
            continue;
        }
        let p = primitive(g);
        if !prim.contains(&p) {
            prim.push(p);
        }
    }
    if prim.is_empty() {
        return Ok(vec![]);
    }
    if crate::matrix::rank(&IntMat::from_rows(prim.clone(), t)) != t {
        return Err(Error::Inconsistency(
            "Hilbert basis expects a full-dimensional cone (restrict to the span first)".into(),
        ));
    }
    if !cone_is_pointed(&prim)? {
        return Err(Error::NotPointed("Hilbert basis needs a pointed cone".into()));
    }
    let run = placing(&prim, true)?;
    let normals: BTreeSet<Vec<Int>> = run.facets.iter().map(|f| f.normal.clone()).collect();
    let in_cone = |x: &[Int]| normals.iter().all(|n| !dot(n, x).is_negative());

    let mut candidates: BTreeSet<Vec<Int>> = prim.iter().cloned().collect();
    for cell in &run.cells {
        let rows: Vec<Vec<Int>> = cell.iter().map(|&i| prim[i].clone()).collect();
        let w = IntMat::from_rows(rows.clone(), t);
        let snf = smith_normal_form(&w);
        let diag: Vec<Int> = (0..t).map(|i| snf.d[(i, i)].clone()).collect();
        let total: Int = diag.iter().product();
        if total.to_u64().is_none_or(|v| v > 2_000_000) {
            return Err(Error::GuardExceeded(
                "cell determinant too large for Hilbert basis enumeration".into(),
            ));
        }
        // coset representatives y with 0 <= y_i < d_i; x0 = y * v_inv is a
        // representative in Z^t, then reduced into the half-open cell
        // parallelepiped by flooring its coordinates in the cell basis
        let bounds: Vec<i64> = diag.iter().map(|d| d.to_i64().unwrap()).collect();
        let mut y = vec![0i64; t];
        'odo: loop {
            if y.iter().any(|&v| v != 0) {
                let yv: Vec<Int> = y.iter().map(|&v| Int::from(v)).collect();
                let x0 = snf.v_inv.apply_left(&yv);
                let lam = solve_row_system(&w, &x0)
                    .ok_or_else(|| Error::Inconsistency("cell basis is singular".into()))?;
                let mut x = x0;
                for (i, l) in lam.iter().enumerate() {
                    let f = l.floor().to_integer();
                    if !f.is_zero() {
                        for j in 0..t {
                            x[j] -= &f * &w[(i, j)];
                        }
                    }
                }
                debug_assert!(in_cone(&x));
                if !is_zero_vec(&x) {
                    candidates.insert(x);
                }
            }
            for i in (0..t).rev() {
                if y[i] + 1 < bounds[i] {
                    y[i] += 1;
                    for v in y.iter_mut().skip(i + 1) {
                        *v = 0;
                    }
                    continue 'odo;
                }
            }
            break;
        }
    }

    // irreducibility: process by a strictly positive grading; c is reducible
    // iff c - h lands back in the cone for some already-kept h
    let mut ell = vec![Int::zero(); t];
    for n in &normals {
        for j in 0..t {
            ell[j] += &n[j];
        }
    }
    let mut ordered: Vec<(Int, Vec<Int>)> =
        candidates.into_iter().map(|c| (dot(&ell, &c), c)).collect();
    ordered.sort();
    let mut basis: Vec<Vec<Int>> = Vec::new();
    for (_, c) in ordered {
        let reducible = basis.iter().any(|h| {
            let d = sub(&c, h);
            !is_zero_vec(&d) && in_cone(&d)
        });
        if !reducible {
            basis.push(c);
        }
    }
    Ok(basis)
}

/// The bounded part of a cone below the hull of its nonzero semigroup points:
/// the hull of (g + cone) over all generators g is clipped at its compact
/// facets, and the region is the union of pyramids over those facets with
/// apex 0. Volumes are taken in the coordinate lattice Z^t.
#[derive(Clone, Debug)]
pub struct SubdiagramRegion {
    pub cone_generators: Vec<Vec<Int>>,
    pub bounded_facets: Vec<Vec<Vec<Int>>>,
    pub volume: Int,
}

pub fn subdiagram_region(gens: &[Vec<Int>]) -> Result<SubdiagramRegion> {
    if gens.is_empty() {
        return Err(Error::EmptyConfiguration);
    }
    let t = gens[0].len();
    for g in gens {
        if is_zero_vec(g) {
            return Err(Error::OutOfRange("semigroup generators must be nonzero".into()));
        }
    }
    if crate::matrix::rank(&IntMat::from_rows(gens.to_vec(), t)) != t {
        return Err(Error::Inconsistency(
            "subdiagram region expects generators spanning the quotient".into(),
        ));
    }
    if !cone_is_pointed(gens)? {
        return Err(Error::NotPointed("subdiagram region needs a pointed cone".into()));
    }
    // V-polyhedron conv(gens) + cone(gens), homogenized at heights 1 and 0
    let mut hpts: Vec<Vec<Int>> = Vec::with_capacity(2 * gens.len());
    for g in gens {
        let mut p = g.clone();
        p.push(Int::one());
        hpts.push(p);
    }
    for g in gens {
        let mut p = g.clone();
        p.push(Int::zero());
        hpts.push(p);
    }
    let run = placing(&hpts, true)?;
    let facets = merged_facets(&hpts, &run);
    let zero = vec![Int::zero(); t];
    let lattice = AffineLattice::standard(t);
    let mut bounded: Vec<Vec<Vec<Int>>> = Vec::new();
    let mut volume = Int::zero();
    for f in &facets {
        let u = &f.normal[..t];
        if u.iter().all(Zero::is_zero) {
            continue; // the facet at infinity
        }
        // a facet is compact iff no recession direction of the hull lies on
        // it, i.e. the normal is strictly positive on every cone generator
        if !gens.iter().all(|g| dot(u, g).is_positive()) {
            continue;
        }
        let c = -f.normal[t].clone();
        debug_assert!(c.is_positive());
        let on_facet: Vec<Vec<Int>> = gens.iter().filter(|g| dot(u, g) == c).cloned().collect();
        let mut pyramid = vec![zero.clone()];
        pyramid.extend(on_facet.iter().cloned());
        let v = normalized_volume(&pyramid, &lattice)?;
        debug_assert!(!v.dim_deficient);
        volume += v.value;
        bounded.push(on_facet);
    }
    bounded.sort();
    Ok(SubdiagramRegion {
        cone_generators: gens.to_vec(),
        bounded_facets: bounded,
        volume,
    })
}

/// Lattice-point-counting oracle for region volumes in dimension <= 2:
/// segment lengths by direct counting, triangle/pyramid areas by Pick's
/// formula applied to each bounded-facet pyramid.
pub fn region_volume_oracle(region: &SubdiagramRegion) -> Result<Int> {
    let t = region
        .cone_generators
        .first()
        .map(|g| g.len())
        .unwrap_or(0);
    if t == 0 || t > 2 {
        return Err(Error::GuardExceeded(
            "region volume oracle supports dimensions 1 and 2 only".into(),
        ));
    }
    let zero = vec![Int::zero(); t];
    let mut total = Int::zero();
    for f in &region.bounded_facets {
        let mut pyramid = vec![zero.clone()];
        pyramid.extend(f.iter().cloned());
        let (interior, boundary) = pyramid_point_counts(&pyramid, t)?;
        let cell = match t {
            // segment length is the point count minus one
            1 => &interior + &boundary - Int::one(),
            // Pick: area = I + B/2 - 1, so 2*area = 2I + B - 2
            2 => &interior * Int::from(2) + &boundary - Int::from(2),
            _ => unreachable!(),
        };
        total += cell;
    }
    Ok(total)
}

fn pyramid_point_counts(points: &[Vec<Int>], t: usize) -> Result<(Int, Int)> {
    let run = placing(points, false)?;
    let facets = merged_facets(points, &run);
    let mut lo = points[0].clone();
    let mut hi = points[0].clone();
    for p in points {
        for j in 0..t {
            if p[j] < lo[j] {
                lo[j] = p[j].clone();
            }
            if p[j] > hi[j] {
                hi[j] = p[j].clone();
            }
        }
    }
    let mut interior = Int::zero();
    let mut boundary = Int::zero();
    let mut cursor = lo.clone();
    'walk: loop {
        let mut inside = true;
        let mut on_edge = false;
        for f in &facets {
            let v = dot(&f.normal, &cursor);
            if v < f.offset {
                inside = false;
                break;
            }
            if v == f.offset {
                on_edge = true;
            }
        }
        if inside {
            if on_edge {
                boundary += 1;
            } else {
                interior += 1;
            }
        }
        for j in (0..t).rev() {
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
    Ok((interior, boundary))
}

/// Normalized relative subdiagram volume of a nested face pair: the region
/// volume of the projected cone, generated by the full Hilbert basis of its
/// lattice points. By convention the value on an equal pair is 1.
pub fn rsv(
    model: &Model,
    alpha: usize,
    beta: usize,
    vertex: Option<usize>,
    opts: &Options,
) -> Result<Int> {
    if alpha == beta {
        return Ok(Int::one());
    }
    let pc = project_cone_along_face(model, alpha, beta, vertex)?;
    let q = pc.quotient.rank();
    // volume lattice: projected lattice restricted to the span of the cone
    let span = AffineLattice::from_directions(pc.generators.clone(), q).saturation();
    let coords: Vec<Vec<Int>> = pc
        .generators
        .iter()
        .map(|g| span.direction_coords(g))
        .collect::<Result<_>>()?;
    let hb = hilbert_basis(&coords, opts.max_dim)?;
    let region = subdiagram_region(&hb)?;
    Ok(region.volume)
}

fn face_pair_in_alpha_lattice(
    pm: &PolytopeModel,
    alpha: usize,
    beta: usize,
    vertex: Option<usize>,
) -> Result<(AffineLattice, Vec<Vec<Int>>, Vec<Vec<Int>>)> {
    let faces = &pm.faces;
    if !faces.le(beta, alpha) {
        return Err(Error::NotNested(
            faces.faces[alpha].id.to_string(),
            faces.faces[beta].id.to_string(),
        ));
    }
    let v = match vertex {
        Some(v) => {
            let vid = crate::polytope::FaceId::new(vec![v]);
            let vidx = faces
                .face_index(&vid)
                .ok_or_else(|| Error::OutOfRange(format!("point {v} is not a vertex")))?;
            if !faces.le(vidx, beta) {
                return Err(Error::OutOfRange(format!(
                    "point {v} is not a vertex of face {}",
                    faces.faces[beta].id
                )));
            }
            v
        }
        None => pm.canonical_vertex(beta),
    };
    let n = pm.config.dim();
    let vp = pm.config.points()[v].clone();
    let alpha_dirs: Vec<Vec<Int>> = faces.faces[alpha]
        .id
        .indices()
        .iter()
        .map(|&j| sub(&pm.config.points()[j], &vp))
        .collect();
    let m_alpha = AffineLattice::from_directions(alpha_dirs.clone(), n);
    let alpha_coords: Vec<Vec<Int>> = alpha_dirs
        .iter()
        .map(|d| m_alpha.direction_coords(d))
        .collect::<Result<_>>()?;
    let beta_coords: Vec<Vec<Int>> = faces.faces[beta]
        .id
        .indices()
        .iter()
        .map(|&j| m_alpha.direction_coords(&sub(&pm.config.points()[j], &vp)))
        .collect::<Result<_>>()?;
    Ok((m_alpha, alpha_coords, beta_coords))
}

/// u: the subdiagram volume of the semigroup generated by the configuration
/// points of the bigger face, in the quotient of its own lattice by the span
/// of the smaller face. Conventionally 1 on equal pairs.
pub fn subdiagram_volume_u(
    pm: &PolytopeModel,
    alpha: usize,
    beta: usize,
    vertex: Option<usize>,
) -> Result<Int> {
    if alpha == beta {
        return Ok(Int::one());
    }
    let (m_alpha, alpha_coords, beta_coords) = face_pair_in_alpha_lattice(pm, alpha, beta, vertex)?;
    let r = m_alpha.rank();
    let killed = AffineLattice::from_directions(beta_coords, r);
    let quotient = QuotientLattice::new(AffineLattice::standard(r), killed)?;
    let mut images: Vec<Vec<Int>> = Vec::new();
    for a in &alpha_coords {
        let img = quotient.project(a)?;
        if !is_zero_vec(&img) && !images.contains(&img) {
            images.push(img);
        }
    }
    let region = subdiagram_region(&images)?;
    Ok(region.volume)
}

/// i: the index of M(A /\ beta) inside M(A /\ alpha) /\ L(beta).
pub fn face_index_i(
    pm: &PolytopeModel,
    alpha: usize,
    beta: usize,
    vertex: Option<usize>,
) -> Result<Int> {
    if alpha == beta {
        return Ok(Int::one());
    }
    let (m_alpha, _, beta_coords) = face_pair_in_alpha_lattice(pm, alpha, beta, vertex)?;
    let r = m_alpha.rank();
    if beta_coords.len() <= 1 {
        return Ok(Int::one()); // beta is a vertex: both lattices have rank 0
    }
    let m_beta = AffineLattice::from_directions(beta_coords, r);
    let slice = m_beta.saturation(); // M_alpha /\ L(beta) in alpha-coordinates
    slice.index_of(&m_beta)
}

/// Face-pair table keyed by (alpha, beta) with beta <= alpha (equal included).
#[derive(Clone, Debug)]
pub struct PairTable {
    values: BTreeMap<(usize, usize), Int>,
}

impl PairTable {
    pub fn get(&self, alpha: usize, beta: usize) -> &Int {
        &self.values[&(alpha, beta)]
    }

    pub fn try_get(&self, alpha: usize, beta: usize) -> Option<&Int> {
        self.values.get(&(alpha, beta))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &Int)> {
        self.values.iter()
    }

    pub fn from_map(values: BTreeMap<(usize, usize), Int>) -> PairTable {
        PairTable { values }
    }
}

fn nested_pairs(model: &Model) -> Vec<(usize, usize)> {
    let faces = model.faces();
    let mut pairs = Vec::new();
    for alpha in 0..faces.len() {
        pairs.push((alpha, alpha));
        for &beta in faces.below(alpha) {
            pairs.push((alpha, beta));
        }
    }
    pairs.sort_unstable();
    pairs
}

/// RSV over every nested face pair (polytope or cone context), computed in
/// parallel over the immutable model.
pub fn rsv_table(model: &Model, opts: &Options) -> Result<PairTable> {
    let pairs = nested_pairs(model);
    let values: Vec<((usize, usize), Int)> = pairs
        .par_iter()
        .map(|&(a, b)| rsv(model, a, b, None, opts).map(|v| ((a, b), v)))
        .collect::<Result<_>>()?;
    Ok(PairTable {
        values: values.into_iter().collect(),
    })
}

/// The u and i tables of a polytope model; their product is the weight of
/// the general-configuration recursion.
#[derive(Clone, Debug)]
pub struct UiTable {
    pub u: PairTable,
    pub i: PairTable,
}

impl UiTable {
    pub fn weight(&self, alpha: usize, beta: usize) -> Int {
        self.u.get(alpha, beta) * self.i.get(alpha, beta)
    }
}

pub fn ui_table(pm: &PolytopeModel, _opts: &Options) -> Result<UiTable> {
    let model = Model::Polytope(pm.clone());
    let pairs = nested_pairs(&model);
    let values: Vec<((usize, usize), (Int, Int))> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let u = subdiagram_volume_u(pm, a, b, None)?;
            let i = face_index_i(pm, a, b, None)?;
            Ok(((a, b), (u, i)))
        })
        .collect::<Result<_>>()?;
    let mut u_map = BTreeMap::new();
    let mut i_map = BTreeMap::new();
    for ((a, b), (u, i)) in values {
        u_map.insert((a, b), u);
        i_map.insert((a, b), i);
    }
    Ok(UiTable {
        u: PairTable { values: u_map },
        i: PairTable { values: i_map },
    })
}
