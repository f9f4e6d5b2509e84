//! Affine Z-lattices generated by point sets, sublattice indices, and
//! quotient-lattice coordinates. All lattices are stored by a canonical
//! (row Hermite) basis of their direction part, which makes equality and
//! hashing-by-key deterministic.

use crate::arith::{is_zero_vec, sub, Int};
use crate::error::Error;
use crate::matrix::{
    determinant, hermite_normal_form, smith_normal_form, solve_row_system_int, IntMat,
};
use crate::Result;
use num_traits::{One, Signed, Zero};

/// An affine lattice `origin + L` where `L` is the direction lattice spanned
/// by the basis rows (kept in canonical Hermite form).
#[derive(Clone, Debug)]
pub struct AffineLattice {
    origin: Vec<Int>,
    basis: IntMat,
}

impl AffineLattice {
    /// The affine lattice of all integer combinations of `points` with
    /// coefficient sum 1. The direction part is generated by the differences
    /// from the first point; the stored origin is the first point.
    pub fn generated_by(points: &[Vec<Int>]) -> Result<AffineLattice> {
        let first = points.first().ok_or(Error::EmptyConfiguration)?;
        let dim = first.len();
        let dirs: Vec<Vec<Int>> = points.iter().skip(1).map(|p| sub(p, first)).collect();
        Ok(AffineLattice {
            origin: first.clone(),
            basis: canonical_basis(IntMat::from_rows(dirs, dim)),
        })
    }

    /// Direction lattice through the origin with the given generators.
    pub fn from_directions(gens: Vec<Vec<Int>>, dim: usize) -> AffineLattice {
        AffineLattice {
            origin: vec![Int::zero(); dim],
            basis: canonical_basis(IntMat::from_rows(gens, dim)),
        }
    }

    /// The full lattice Z^dim.
    pub fn standard(dim: usize) -> AffineLattice {
        AffineLattice {
            origin: vec![Int::zero(); dim],
            basis: IntMat::identity(dim),
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.origin.len()
    }

    pub fn origin(&self) -> &[Int] {
        &self.origin
    }

    pub fn basis(&self) -> &IntMat {
        &self.basis
    }

    /// Coordinates of a direction vector in the lattice basis, when the
    /// vector lies in the direction lattice.
    pub fn direction_coords(&self, v: &[Int]) -> Result<Vec<Int>> {
        if self.rank() == 0 {
            return if is_zero_vec(v) {
                Ok(vec![])
            } else {
                Err(Error::NotInLattice)
            };
        }
        solve_row_system_int(&self.basis, v)
    }

    /// Coordinates of a point relative to the origin.
    pub fn point_coords(&self, p: &[Int]) -> Result<Vec<Int>> {
        self.direction_coords(&sub(p, &self.origin))
    }

    pub fn contains_direction(&self, v: &[Int]) -> bool {
        self.direction_coords(v).is_ok()
    }

    pub fn contains_point(&self, p: &[Int]) -> bool {
        self.point_coords(p).is_ok()
    }

    /// Map lattice coordinates back to an ambient point.
    pub fn embed_coords(&self, coords: &[Int]) -> Vec<Int> {
        let mut p = self.origin.clone();
        for (i, c) in coords.iter().enumerate() {
            for j in 0..p.len() {
                p[j] += c * &self.basis[(i, j)];
            }
        }
        p
    }

    /// Saturation of the direction lattice inside Z^ambient: all integer
    /// vectors of the rational span.
    pub fn saturation(&self) -> AffineLattice {
        let n = self.ambient_dim();
        let r = self.rank();
        if r == 0 {
            return AffineLattice {
                origin: self.origin.clone(),
                basis: IntMat::zero(0, n),
            };
        }
        let snf = smith_normal_form(&self.basis);
        // span(basis) * v = span(e_1..e_r), so Z^n /\ span = rows 0..r of v_inv
        let rows = (0..r).map(|i| snf.v_inv.row(i)).collect();
        AffineLattice {
            origin: self.origin.clone(),
            basis: canonical_basis(IntMat::from_rows(rows, n)),
        }
    }

    /// Index `[self : sub]` of a finite-index direction sublattice.
    pub fn index_of(&self, sub: &AffineLattice) -> Result<Int> {
        if self.rank() != sub.rank() {
            return Err(Error::RankMismatch(format!(
                "index of rank-{} lattice in rank-{} lattice",
                sub.rank(),
                self.rank()
            )));
        }
        if self.rank() == 0 {
            return Ok(Int::one());
        }
        let coords: Vec<Vec<Int>> = sub
            .basis
            .row_vecs()
            .iter()
            .map(|row| {
                self.direction_coords(row).map_err(|_| {
                    Error::NotSublattice("second lattice".into(), "first lattice".into())
                })
            })
            .collect::<Result<_>>()?;
        let c = IntMat::from_rows(coords, self.rank());
        let det = determinant(&c);
        if det.is_zero() {
            return Err(Error::RankMismatch("sublattice basis is degenerate".into()));
        }
        Ok(det.abs())
    }
}

impl PartialEq for AffineLattice {
    /// Equal as subsets of the ambient space: same direction lattice and
    /// origins differing by a lattice direction.
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
            && self.origin.len() == other.origin.len()
            && {
                let d = sub(&self.origin, &other.origin);
                is_zero_vec(&d) || self.contains_direction(&d)
            }
    }
}

impl Eq for AffineLattice {}

fn canonical_basis(gens: IntMat) -> IntMat {
    let (h, _) = hermite_normal_form(&gens);
    let nonzero: Vec<Vec<Int>> = h
        .row_vecs()
        .into_iter()
        .filter(|r| !is_zero_vec(r))
        .collect();
    IntMat::from_rows(nonzero, gens.cols())
}

/// A free quotient `ambient / span(killed)`, with an integer coordinate map
/// onto Z^rank. The projection kills the whole real span of `killed`, i.e.
/// its saturation inside `ambient`.
#[derive(Clone, Debug)]
pub struct QuotientLattice {
    ambient: AffineLattice,
    killed: AffineLattice,
    /// ambient.rank x rank matrix; quotient coords = ambient coords * map.
    coordinate_map: IntMat,
    rank: usize,
}

impl QuotientLattice {
    /// Project `ambient` along the direction sublattice `killed`.
    pub fn new(ambient: AffineLattice, killed: AffineLattice) -> Result<QuotientLattice> {
        let r = ambient.rank();
        let killed_coords: Vec<Vec<Int>> = killed
            .basis()
            .row_vecs()
            .iter()
            .map(|row| {
                ambient.direction_coords(row).map_err(|_| {
                    Error::NotSublattice("killed lattice".into(), "ambient lattice".into())
                })
            })
            .collect::<Result<_>>()?;
        let t = IntMat::from_rows(killed_coords, r);
        let s = killed.rank();
        debug_assert_eq!(crate::matrix::rank(&t), s, "killed basis must be independent");
        let snf = smith_normal_form(&t);
        // in the v-coordinates the killed span becomes <e_1..e_s>, so the
        // quotient coordinates are the last r - s columns of v
        let rank = r - s;
        let mut map = IntMat::zero(r, rank);
        for i in 0..r {
            for j in 0..rank {
                map[(i, j)] = snf.v[(i, s + j)].clone();
            }
        }
        Ok(QuotientLattice {
            ambient,
            killed,
            coordinate_map: map,
            rank,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient(&self) -> &AffineLattice {
        &self.ambient
    }

    pub fn killed(&self) -> &AffineLattice {
        &self.killed
    }

    pub fn coordinate_map(&self) -> &IntMat {
        &self.coordinate_map
    }

    /// Image of an ambient direction vector in quotient coordinates.
    /// The vector must lie in the ambient lattice.
    pub fn project(&self, v: &[Int]) -> Result<Vec<Int>> {
        let coords = self.ambient.direction_coords(v)?;
        Ok(self.coordinate_map.apply_left(&coords))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::vec_i64;
    use proptest::prelude::*;

    fn pts(ps: &[&[i64]]) -> Vec<Vec<Int>> {
        ps.iter().map(|p| vec_i64(p)).collect()
    }

    #[test]
    fn lattice_of_two_points_on_a_line() {
        // {0, 2} generates origin 0 with direction 2Z
        let l = AffineLattice::generated_by(&pts(&[&[0], &[2]])).unwrap();
        assert_eq!(l.rank(), 1);
        assert!(l.contains_point(&vec_i64(&[4])));
        assert!(l.contains_point(&vec_i64(&[-2])));
        assert!(!l.contains_point(&vec_i64(&[1])));
        // enumeration oracle: integer combinations c0*0 + c1*2 with c0+c1=1
        for c1 in -5i64..=5 {
            assert!(l.contains_point(&vec_i64(&[2 * c1])));
        }
    }

    #[test]
    fn lattice_of_0_2_3_is_all_of_z() {
        let l = AffineLattice::generated_by(&pts(&[&[0], &[2], &[3]])).unwrap();
        assert_eq!(l.rank(), 1);
        // 2*2 - 3 = 1
        assert!(l.contains_point(&vec_i64(&[1])));
        // enumeration oracle over small coefficient vectors with sum 1
        let points = [0i64, 2, 3];
        let mut reachable = std::collections::BTreeSet::new();
        for c0 in -3i64..=3 {
            for c1 in -3i64..=3 {
                for c2 in -3i64..=3 {
                    if c0 + c1 + c2 == 1 {
                        reachable.insert(c0 * points[0] + c1 * points[1] + c2 * points[2]);
                    }
                }
            }
        }
        for v in reachable {
            assert!(l.contains_point(&vec_i64(&[v])), "missing {v}");
        }
    }

    #[test]
    fn single_point_has_rank_zero() {
        let l = AffineLattice::generated_by(&pts(&[&[5, -1]])).unwrap();
        assert_eq!(l.rank(), 0);
        assert!(l.contains_point(&vec_i64(&[5, -1])));
        assert!(!l.contains_point(&vec_i64(&[5, 0])));
    }

    #[test]
    fn index_examples() {
        let z = AffineLattice::from_directions(pts(&[&[1]]), 1);
        let two_z = AffineLattice::from_directions(pts(&[&[2]]), 1);
        assert_eq!(z.index_of(&two_z).unwrap(), Int::from(2));

        let rank0 = AffineLattice::generated_by(&pts(&[&[7]])).unwrap();
        assert_eq!(rank0.index_of(&rank0).unwrap(), Int::from(1));

        let z2 = AffineLattice::standard(2);
        let checker = AffineLattice::from_directions(pts(&[&[1, 1], &[1, -1]]), 2);
        assert_eq!(z2.index_of(&checker).unwrap(), Int::from(2));

        // not contained
        let z_half = AffineLattice::from_directions(pts(&[&[2]]), 1);
        assert!(two_z.index_of(&z).is_err() || z.index_of(&z_half).unwrap() == Int::from(2));
    }

    #[test]
    fn quotient_kills_the_real_span() {
        let z2 = AffineLattice::standard(2);
        let axis = AffineLattice::from_directions(pts(&[&[1, 0]]), 2);
        let q = QuotientLattice::new(z2.clone(), axis).unwrap();
        assert_eq!(q.rank(), 1);
        let img = q.project(&vec_i64(&[3, 7])).unwrap();
        assert_eq!(img.len(), 1);
        assert_eq!(img[0].clone().abs(), Int::from(7));

        // a non-saturated kill still projects along the span
        let two_axis = AffineLattice::from_directions(pts(&[&[2, 0]]), 2);
        let q2 = QuotientLattice::new(z2, two_axis).unwrap();
        assert_eq!(q2.rank(), 1);
        let a = q2.project(&vec_i64(&[1, 0])).unwrap();
        assert!(a[0].is_zero(), "span of (2,0) must kill (1,0)");
        let b = q2.project(&vec_i64(&[0, 1])).unwrap();
        assert_eq!(b[0].clone().abs(), Int::from(1));
    }

    #[test]
    fn quotient_of_rank_zero() {
        let l = AffineLattice::generated_by(&pts(&[&[1, 2]])).unwrap();
        let s = AffineLattice {
            origin: l.origin().to_vec(),
            basis: IntMat::zero(0, 2),
        };
        let q = QuotientLattice::new(l, s).unwrap();
        assert_eq!(q.rank(), 0);
    }

    #[test]
    fn coordinate_map_kills_killed_lattice() {
        let z3 = AffineLattice::standard(3);
        let s = AffineLattice::from_directions(pts(&[&[1, 2, 0], &[0, 0, 3]]), 3);
        let q = QuotientLattice::new(z3, s.clone()).unwrap();
        for row in s.basis().row_vecs() {
            assert!(is_zero_vec(&q.project(&row).unwrap()));
        }
        assert_eq!(q.rank(), 1);
    }

    #[test]
    fn saturation_of_sublattice() {
        let l = AffineLattice::from_directions(pts(&[&[2, 0], &[0, 3]]), 2);
        let sat = l.saturation();
        assert_eq!(sat.basis(), AffineLattice::standard(2).basis());

        let skew = AffineLattice::from_directions(pts(&[&[2, 4]]), 2);
        let sat2 = skew.saturation();
        assert!(sat2.contains_direction(&vec_i64(&[1, 2])));
        assert_eq!(sat2.rank(), 1);
    }

    fn point_set_strategy() -> impl Strategy<Value = Vec<Vec<Int>>> {
        (1usize..=5, 1usize..=3).prop_flat_map(|(n, d)| {
            proptest::collection::vec(proptest::collection::vec(-5i64..=5, d), n)
                .prop_map(|ps| ps.into_iter().map(|p| p.into_iter().map(Int::from).collect()).collect())
        })
    }

    proptest! {
        #[test]
        fn generated_lattice_is_order_independent(ps in point_set_strategy(), seed in 0u64..1000) {
            let l1 = AffineLattice::generated_by(&ps).unwrap();
            let mut shuffled = ps.clone();
            // cheap deterministic shuffle
            let n = shuffled.len();
            for i in 0..n {
                let j = (seed as usize + i * 7) % n;
                shuffled.swap(i, j);
            }
            let l2 = AffineLattice::generated_by(&shuffled).unwrap();
            prop_assert_eq!(l1, l2);
        }

        #[test]
        fn index_is_multiplicative_on_nested_triples(
            diag in proptest::collection::vec(1i64..=4, 1..=4),
            mult in proptest::collection::vec(1i64..=3, 1..=4),
        ) {
            let r = diag.len().min(mult.len());
            let dim = r;
            let rows1: Vec<Vec<Int>> = (0..r).map(|i| {
                (0..dim).map(|j| if i == j { Int::from(diag[i]) } else { Int::from(0) }).collect()
            }).collect();
            let rows2: Vec<Vec<Int>> = (0..r).map(|i| {
                (0..dim).map(|j| if i == j { Int::from(diag[i] * mult[i]) } else { Int::from(0) }).collect()
            }).collect();
            let l1 = AffineLattice::standard(dim);
            let l2 = AffineLattice::from_directions(rows1, dim);
            let l3 = AffineLattice::from_directions(rows2, dim);
            let i12 = l1.index_of(&l2).unwrap();
            let i23 = l2.index_of(&l3).unwrap();
            let i13 = l1.index_of(&l3).unwrap();
            prop_assert_eq!(i12 * i23, i13);
            prop_assert_eq!(l1.index_of(&l1).unwrap(), Int::from(1));
        }
    }
}
