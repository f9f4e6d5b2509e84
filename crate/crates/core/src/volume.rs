//! Normalized lattice volumes: (dim)! times the Lebesgue volume, measured so
//! that a fundamental cell of the reference lattice has volume 1. Volumes are
//! computed in lattice coordinates (a coordinate change, not a measure
//! choice), and an independent Ehrhart point-counting oracle cross-checks
//! them in low dimension.

use crate::arith::{binomial_usize, dot, sign_pow, sub, Int};
use crate::error::Error;
use crate::hull::{merged_facets, placing};
use crate::lattice::AffineLattice;
use crate::matrix::{determinant, IntMat};
use crate::Result;
use num_traits::{Signed, ToPrimitive, Zero};

/// A full-dimensional simplex given by its vertices.
#[derive(Clone, Debug)]
pub struct Simplex {
    pub vertices: Vec<Vec<Int>>,
}

impl Simplex {
    /// dim! times the Euclidean volume in the coordinate lattice.
    pub fn normalized_volume(&self) -> Int {
        let d = self.vertices.len() - 1;
        if d == 0 {
            return Int::from(1);
        }
        let rows: Vec<Vec<Int>> = self.vertices[1..]
            .iter()
            .map(|v| sub(v, &self.vertices[0]))
            .collect();
        determinant(&IntMat::from_rows(rows, d)).abs()
    }
}

/// Deterministic placing triangulation of conv(points) in input order.
/// Cells use only input points; interior points that arrive after the hull
/// already covers them are skipped.
pub fn triangulate(points: &[Vec<Int>]) -> Result<Vec<Simplex>> {
    if points.is_empty() {
        return Err(Error::EmptyConfiguration);
    }
    let lattice = AffineLattice::generated_by(points)?;
    let d = lattice.rank();
    if d == 0 {
        return Ok(vec![Simplex {
            vertices: vec![points[0].clone()],
        }]);
    }
    let coords: Vec<Vec<Int>> = points
        .iter()
        .map(|p| lattice.point_coords(p))
        .collect::<Result<_>>()?;
    let run = placing(&coords, false)?;
    Ok(run
        .cells
        .into_iter()
        .map(|cell| Simplex {
            vertices: cell.into_iter().map(|i| points[i].clone()).collect(),
        })
        .collect())
}

/// Outcome of a normalized-volume computation. `dim_deficient` flags inputs
/// whose hull has smaller dimension than the reference lattice (volume 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedVolume {
    pub value: Int,
    pub dim_deficient: bool,
}

/// Normalized volume of conv(vertices) with respect to `lattice`.
/// All vertices must lie in the lattice (points of the affine lattice).
pub fn normalized_volume(vertices: &[Vec<Int>], lattice: &AffineLattice) -> Result<NormalizedVolume> {
    if vertices.is_empty() {
        return Err(Error::EmptyConfiguration);
    }
    let coords: Vec<Vec<Int>> = vertices
        .iter()
        .map(|v| lattice.point_coords(v).map_err(|_| Error::OutsideSpan))
        .collect::<Result<_>>()?;
    let d = lattice.rank();
    if d == 0 {
        // the volume of a point with respect to a rank-0 lattice is 1
        return Ok(NormalizedVolume {
            value: Int::from(1),
            dim_deficient: false,
        });
    }
    let span = AffineLattice::generated_by(&coords)?;
    if span.rank() < d {
        return Ok(NormalizedVolume {
            value: Int::zero(),
            dim_deficient: true,
        });
    }
    let mut total = Int::zero();
    for cell in triangulate(&coords)? {
        total += cell.normalized_volume();
    }
    Ok(NormalizedVolume {
        value: total,
        dim_deficient: false,
    })
}

fn count_dilate(coords: &[Vec<Int>], facets: &[crate::hull::Facet], k: usize) -> Result<Int> {
    let d = coords[0].len();
    let kk = Int::from(k as i64);
    if k == 0 {
        return Ok(Int::from(1));
    }
    let mut lo = vec![Int::zero(); d];
    let mut hi = vec![Int::zero(); d];
    for j in 0..d {
        lo[j] = coords.iter().map(|p| &p[j]).min().unwrap() * &kk;
        hi[j] = coords.iter().map(|p| &p[j]).max().unwrap() * &kk;
        let width = (&hi[j] - &lo[j]).to_i64().ok_or_else(|| {
            Error::GuardExceeded("dilation box too large for point enumeration".into())
        })?;
        if width.abs() > 4096 {
            return Err(Error::GuardExceeded(
                "dilation box too large for point enumeration".into(),
            ));
        }
    }
    let mut count = Int::zero();
    let mut cursor = lo.clone();
    'walk: loop {
        if facets
            .iter()
            .all(|f| dot(&f.normal, &cursor) >= &f.offset * &kk)
        {
            count += 1;
        }
        for j in (0..d).rev() {
            if cursor[j] < hi[j] {
                cursor[j] += 1;
                for (m, c) in cursor.iter_mut().enumerate().skip(j + 1) {
                    *c = lo[m].clone();
                }
                continue 'walk;
            }
        }
        break;
    }
    Ok(count)
}

/// Independent volume oracle: count lattice points of k*K for k = 0..d and
/// take the d-th finite difference, which equals d! times the leading
/// Ehrhart coefficient, i.e. the normalized volume. Guarded to d <= max_dim.
pub fn ehrhart_volume_oracle(
    vertices: &[Vec<Int>],
    lattice: &AffineLattice,
    max_dim: usize,
) -> Result<Int> {
    let d = lattice.rank();
    if d > max_dim || d > 4 {
        return Err(Error::GuardExceeded(format!(
            "Ehrhart oracle limited to dimension <= {} (see --max-dim)",
            max_dim.min(4)
        )));
    }
    let coords: Vec<Vec<Int>> = vertices
        .iter()
        .map(|v| lattice.point_coords(v).map_err(|_| Error::OutsideSpan))
        .collect::<Result<_>>()?;
    if d == 0 {
        return Ok(Int::from(1));
    }
    let span = AffineLattice::generated_by(&coords)?;
    if span.rank() < d {
        // counts grow with a lower power, so the d-th difference vanishes;
        // report 0 directly
        return Ok(Int::zero());
    }
    let run = placing(&coords, false)?;
    let facets = merged_facets(&coords, &run);
    let mut acc = Int::zero();
    for k in 0..=d {
        let c = count_dilate(&coords, &facets, k)?;
        acc += sign_pow(d - k) * binomial_usize(d, k) * c;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::vec_i64;

    fn pts(ps: &[&[i64]]) -> Vec<Vec<Int>> {
        ps.iter().map(|p| vec_i64(p)).collect()
    }

    #[test]
    fn unit_segment_and_square() {
        let z1 = AffineLattice::standard(1);
        let seg = normalized_volume(&pts(&[&[0], &[1]]), &z1).unwrap();
        assert_eq!(seg.value, Int::from(1));

        let z2 = AffineLattice::standard(2);
        let sq = normalized_volume(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]), &z2).unwrap();
        assert_eq!(sq.value, Int::from(2));
    }

    #[test]
    fn doubled_edge_simplex_volume() {
        let z3 = AffineLattice::standard(3);
        let p = pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        let v = normalized_volume(&p, &z3).unwrap();
        assert_eq!(v.value, Int::from(2));
        assert_eq!(ehrhart_volume_oracle(&p, &z3, 4).unwrap(), Int::from(2));
    }

    #[test]
    fn volume_respects_the_reference_lattice() {
        // [0,2] has length 1 with respect to 2Z
        let coarse = AffineLattice::from_directions(pts(&[&[2]]), 1);
        let v = normalized_volume(&pts(&[&[0], &[2]]), &coarse).unwrap();
        assert_eq!(v.value, Int::from(1));
    }

    #[test]
    fn degenerate_input_gives_zero_with_flag() {
        let z2 = AffineLattice::standard(2);
        let v = normalized_volume(&pts(&[&[0, 0], &[1, 0], &[2, 0]]), &z2).unwrap();
        assert!(v.dim_deficient);
        assert!(v.value.is_zero());
    }

    #[test]
    fn outside_span_is_an_error() {
        let axis = AffineLattice::from_directions(pts(&[&[1, 0]]), 2);
        assert!(matches!(
            normalized_volume(&pts(&[&[0, 0], &[0, 1]]), &axis),
            Err(Error::OutsideSpan)
        ));
    }

    #[test]
    fn triangulations_are_deterministic_and_additive() {
        let square = pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let t1 = triangulate(&square).unwrap();
        let t2 = triangulate(&square).unwrap();
        assert_eq!(t1.len(), 2);
        assert_eq!(t1.len(), t2.len());
        let total: Int = t1.iter().map(|s| s.normalized_volume()).sum();
        assert_eq!(total, Int::from(2));

        let simplex = pts(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(triangulate(&simplex).unwrap().len(), 1);

        let cube = pts(&[
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 0],
            &[1, 1, 0],
            &[0, 0, 1],
            &[1, 0, 1],
            &[0, 1, 1],
            &[1, 1, 1],
        ]);
        let cells = triangulate(&cube).unwrap();
        let total: Int = cells.iter().map(|s| s.normalized_volume()).sum();
        assert_eq!(total, Int::from(6));
    }

    #[test]
    fn ehrhart_counts_unit_square() {
        let z2 = AffineLattice::standard(2);
        let square = pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        // counts 1, 4, 9 -> second difference 2
        assert_eq!(ehrhart_volume_oracle(&square, &z2, 4).unwrap(), Int::from(2));
    }

    #[test]
    fn ehrhart_guard() {
        let z2 = AffineLattice::standard(2);
        let square = pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert!(matches!(
            ehrhart_volume_oracle(&square, &z2, 1),
            Err(Error::GuardExceeded(_))
        ));
    }
}
