//! Incremental (placing) convex hulls with exact rational pivots, in both
//! inhomogeneous (polytope) and homogeneous (cone) form. The boundary is
//! maintained as a simplicial complex; coplanar pieces are merged by their
//! supporting hyperplane when true facets are requested.
//!
//! Points are inserted in input order; a point inside (or on the boundary of)
//! the current hull is skipped, a point beyond it is coned over the visible
//! facets. This makes the triangulation deterministic in the input order.

use crate::arith::{dot, sub, Int};
use crate::error::Error;
use crate::matrix::{orthogonal_covector, rank, IntMat};
use crate::Result;
use num_traits::Zero;
use std::collections::BTreeMap;

/// One simplicial boundary piece. The inequality `<normal, x> >= offset`
/// holds on the whole hull, with equality exactly on the supporting
/// hyperplane of this piece. For cones the offset is always zero.
#[derive(Clone, Debug)]
pub struct FacetPiece {
    pub verts: Vec<usize>,
    pub normal: Vec<Int>,
    pub offset: Int,
}

/// Result of a placing run: full-dimensional cells (a triangulation of the
/// hull) and the simplicial boundary.
pub struct Placing {
    pub cells: Vec<Vec<usize>>,
    pub facets: Vec<FacetPiece>,
}

/// A merged facet: points of the input lying on the supporting hyperplane.
#[derive(Clone, Debug)]
pub struct Facet {
    pub normal: Vec<Int>,
    pub offset: Int,
    pub incident: Vec<usize>,
}

fn affine_dirs(points: &[Vec<Int>], verts: &[usize]) -> Vec<Vec<Int>> {
    verts[1..]
        .iter()
        .map(|&v| sub(&points[v], &points[verts[0]]))
        .collect()
}

fn hyperplane_through(
    points: &[Vec<Int>],
    verts: &[usize],
    homogeneous: bool,
) -> Option<(Vec<Int>, Int)> {
    let d = points[0].len();
    let dirs: Vec<Vec<Int>> = if homogeneous {
        verts.iter().map(|&v| points[v].clone()).collect()
    } else {
        affine_dirs(points, verts)
    };
    debug_assert_eq!(dirs.len() + 1, d);
    let normal = orthogonal_covector(&IntMat::from_rows(dirs, d))?;
    let offset = if homogeneous {
        Int::zero()
    } else {
        dot(&normal, &points[verts[0]])
    };
    Some((normal, offset))
}

/// Greedy seed: the earliest input points of full rank (affine rank d+1 for
/// polytopes, linear rank d for cones).
fn greedy_seed(points: &[Vec<Int>], homogeneous: bool) -> Result<Vec<usize>> {
    let d = points[0].len();
    let want = if homogeneous { d } else { d + 1 };
    let mut seed: Vec<usize> = Vec::new();
    let mut dirs: Vec<Vec<Int>> = Vec::new();
    for i in 0..points.len() {
        if seed.is_empty() {
            if homogeneous {
                if !points[i].iter().all(Zero::is_zero) {
                    seed.push(i);
                    dirs.push(points[i].clone());
                }
            } else {
                seed.push(i);
            }
        } else {
            let cand = if homogeneous {
                points[i].clone()
            } else {
                sub(&points[i], &points[seed[0]])
            };
            let mut trial = dirs.clone();
            trial.push(cand.clone());
            if rank(&IntMat::from_rows(trial, d)) > dirs.len() {
                dirs.push(cand);
                seed.push(i);
            }
        }
        if seed.len() == want {
            return Ok(seed);
        }
    }
    Err(Error::Inconsistency(format!(
        "input does not span dimension {d} (placing seed found only {} points)",
        seed.len()
    )))
}

/// Run the placing algorithm. `points` must span the full ambient dimension
/// (affinely for polytopes, linearly for cones); cones must be pointed.
pub fn placing(points: &[Vec<Int>], homogeneous: bool) -> Result<Placing> {
    assert!(!points.is_empty());
    let d = points[0].len();
    assert!(d >= 1, "placing needs ambient dimension >= 1");
    let seed = greedy_seed(points, homogeneous)?;

    let mut cells: Vec<Vec<usize>> = vec![seed.clone()];
    let mut facets: Vec<FacetPiece> = Vec::new();
    for k in 0..seed.len() {
        let verts: Vec<usize> = seed
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, &v)| v)
            .collect();
        let (mut normal, mut offset) = hyperplane_through(points, &verts, homogeneous)
            .ok_or_else(|| Error::Inconsistency("degenerate seed facet".into()))?;
        let side = dot(&normal, &points[seed[k]]) - &offset;
        if side.is_zero() {
            return Err(Error::Inconsistency("seed simplex is flat".into()));
        }
        if side < Int::zero() {
            normal = normal.iter().map(|x| -x).collect();
            offset = -offset;
        }
        facets.push(FacetPiece {
            verts,
            normal,
            offset,
        });
    }

    for p in 0..points.len() {
        if seed.contains(&p) {
            continue;
        }
        let mut visible: Vec<usize> = Vec::new();
        let mut hidden: Vec<usize> = Vec::new();
        for (fi, f) in facets.iter().enumerate() {
            if dot(&f.normal, &points[p]) < f.offset {
                visible.push(fi);
            } else {
                hidden.push(fi);
            }
        }
        if visible.is_empty() {
            continue;
        }
        // a ridge of the visible region seen exactly once borders a hidden
        // facet: that is the horizon
        let mut ridge_count: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for &fi in &visible {
            let verts = &facets[fi].verts;
            for k in 0..verts.len() {
                let mut ridge: Vec<usize> = verts
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .map(|(_, &v)| v)
                    .collect();
                ridge.sort_unstable();
                *ridge_count.entry(ridge).or_insert(0) += 1;
            }
        }
        for &fi in &visible {
            let mut cell = facets[fi].verts.clone();
            cell.push(p);
            cell.sort_unstable();
            cells.push(cell);
        }
        let mut new_facets: Vec<FacetPiece> = Vec::new();
        for (ridge, count) in ridge_count {
            if count != 1 {
                continue;
            }
            let mut verts = ridge;
            verts.push(p);
            verts.sort_unstable();
            let (mut normal, mut offset) = hyperplane_through(points, &verts, homogeneous)
                .ok_or_else(|| Error::Inconsistency("degenerate horizon facet".into()))?;
            // orient by any seed vertex off the hyperplane; the seed simplex
            // is full-dimensional, so one exists
            let mut oriented = false;
            for &s in &seed {
                let side = dot(&normal, &points[s]) - &offset;
                if !side.is_zero() {
                    if side < Int::zero() {
                        normal = normal.iter().map(|x| -x).collect();
                        offset = -offset;
                    }
                    oriented = true;
                    break;
                }
            }
            if !oriented {
                return Err(Error::Inconsistency(
                    "horizon facet contains the seed simplex".into(),
                ));
            }
            new_facets.push(FacetPiece {
                verts,
                normal,
                offset,
            });
        }
        let mut kept: Vec<FacetPiece> = hidden.into_iter().map(|fi| facets[fi].clone()).collect();
        kept.append(&mut new_facets);
        facets = kept;
        if facets.is_empty() {
            return Err(Error::NotPointed(
                "hull update removed every boundary facet".into(),
            ));
        }
    }

    Ok(Placing { cells, facets })
}

/// Merge simplicial boundary pieces into true facets and attach every input
/// point (not just simplex vertices) lying on the supporting hyperplane.
pub fn merged_facets(points: &[Vec<Int>], placing: &Placing) -> Vec<Facet> {
    let mut seen: BTreeMap<(Vec<Int>, Int), ()> = BTreeMap::new();
    let mut out: Vec<Facet> = Vec::new();
    for f in &placing.facets {
        let key = (f.normal.clone(), f.offset.clone());
        if seen.contains_key(&key) {
            continue;
        }
        seen.insert(key, ());
        let incident: Vec<usize> = (0..points.len())
            .filter(|&j| dot(&f.normal, &points[j]) == f.offset)
            .collect();
        out.push(Facet {
            normal: f.normal.clone(),
            offset: f.offset.clone(),
            incident,
        });
    }
    out.sort_by(|a, b| (&a.normal, &a.offset).cmp(&(&b.normal, &b.offset)));
    out
}

/// True iff 0 is a vertex of conv({0} u gens), i.e. iff cone(gens) is pointed.
pub fn cone_is_pointed(gens: &[Vec<Int>]) -> Result<bool> {
    let nonzero: Vec<Vec<Int>> = gens
        .iter()
        .filter(|g| !g.iter().all(Zero::is_zero))
        .cloned()
        .collect();
    if nonzero.is_empty() {
        return Ok(true);
    }
    let d = nonzero[0].len();
    let lin_rank = rank(&IntMat::from_rows(nonzero.clone(), d));
    // work inside the linear span so the hull is full-dimensional
    let span = crate::lattice::AffineLattice::from_directions(nonzero.clone(), d).saturation();
    let mut pts: Vec<Vec<Int>> = vec![vec![Int::zero(); lin_rank]];
    for g in &nonzero {
        pts.push(span.direction_coords(g)?);
    }
    if lin_rank == 0 {
        return Ok(true);
    }
    let placing = placing(&pts, false)?;
    let facets = merged_facets(&pts, &placing);
    // minimal face containing the origin = intersection of facets through it
    let mut minimal: Option<Vec<usize>> = None;
    for f in &facets {
        if f.incident.contains(&0) {
            minimal = Some(match minimal {
                None => f.incident.clone(),
                Some(m) => m.into_iter().filter(|v| f.incident.contains(v)).collect(),
            });
        }
    }
    Ok(matches!(minimal, Some(m) if m == vec![0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::vec_i64;

    fn pts(ps: &[&[i64]]) -> Vec<Vec<Int>> {
        ps.iter().map(|p| vec_i64(p)).collect()
    }

    #[test]
    fn square_hull_has_four_facets() {
        let points = pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let placing = placing(&points, false).unwrap();
        let facets = merged_facets(&points, &placing);
        assert_eq!(facets.len(), 4);
        assert_eq!(placing.cells.len(), 2);
    }

    #[test]
    fn segment_hull_in_dim_one() {
        let points = pts(&[&[0], &[3], &[1]]);
        let placing = placing(&points, false).unwrap();
        let facets = merged_facets(&points, &placing);
        assert_eq!(facets.len(), 2);
        // interior point 1 is on no facet
        assert!(facets.iter().all(|f| !f.incident.contains(&2)));
    }

    #[test]
    fn collinear_extension_merges_facets() {
        // (2,0) extends the triangle along the x-axis; the bottom edge facet
        // must carry all three collinear points after merging
        let points = pts(&[&[0, 0], &[1, 0], &[0, 1], &[2, 0]]);
        let placing = placing(&points, false).unwrap();
        let facets = merged_facets(&points, &placing);
        let bottom = facets
            .iter()
            .find(|f| f.normal == vec_i64(&[0, 1]))
            .expect("bottom edge facet");
        assert_eq!(bottom.incident, vec![0, 1, 3]);
        assert_eq!(facets.len(), 3);
    }

    #[test]
    fn cone_facets_quadrant() {
        let gens = pts(&[&[1, 0], &[0, 1]]);
        let placing = placing(&gens, true).unwrap();
        let facets = merged_facets(&gens, &placing);
        assert_eq!(facets.len(), 2);
        for f in &facets {
            assert!(f.offset.is_zero());
        }
    }

    #[test]
    fn cone_with_interior_generator() {
        let gens = pts(&[&[1, 0], &[1, 1], &[1, 2]]);
        let placing = placing(&gens, true).unwrap();
        let facets = merged_facets(&gens, &placing);
        assert_eq!(facets.len(), 2);
        // (1,1) is interior, so it lies on no facet
        assert!(facets.iter().all(|f| !f.incident.contains(&1)));
    }

    #[test]
    fn pointedness_detection() {
        assert!(cone_is_pointed(&pts(&[&[1, 0], &[0, 1]])).unwrap());
        assert!(!cone_is_pointed(&pts(&[&[1, 0], &[-1, 0], &[0, 1]])).unwrap());
        // dependency without an opposite pair
        assert!(!cone_is_pointed(&pts(&[&[1, 1], &[-1, 0], &[0, -1]])).unwrap());
        assert!(cone_is_pointed(&pts(&[&[2, 1]])).unwrap());
        assert!(cone_is_pointed(&[]).unwrap());
    }

    #[test]
    fn cube_placing_volume_pieces() {
        let points = pts(&[
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 0],
            &[1, 1, 0],
            &[0, 0, 1],
            &[1, 0, 1],
            &[0, 1, 1],
            &[1, 1, 1],
        ]);
        let placing = placing(&points, false).unwrap();
        let facets = merged_facets(&points, &placing);
        assert_eq!(facets.len(), 6);
        for f in &facets {
            assert_eq!(f.incident.len(), 4);
        }
    }
}
