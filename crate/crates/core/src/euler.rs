//! Local Euler obstructions of toric varieties, by downward induction on the
//! face lattice. Two routes compute the same table on saturated very ample
//! configurations:
//!
//! * the normal-cone route, weighted by relative subdiagram volumes, and
//! * the general-configuration route, weighted by the product of the face
//!   index and the configuration subdiagram volume.

use crate::arith::{sign_pow, Int};
use crate::polytope::{FaceLattice, PolytopeModel};
use crate::subdiagram::{PairTable, UiTable};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Route {
    Normal,
    General,
}

/// Euler obstruction values indexed by face, together with the recursion
/// that produced them. The top face always carries the value 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerTable {
    pub source: Route,
    values: Vec<Int>,
}

impl EulerTable {
    pub fn get(&self, face: usize) -> &Int {
        &self.values[face]
    }

    pub fn values(&self) -> &[Int] {
        &self.values
    }

    pub fn all_one(&self) -> bool {
        self.values.iter().all(|v| v.is_one())
    }

    pub fn to_map(&self, faces: &FaceLattice) -> BTreeMap<String, Int> {
        faces
            .faces
            .iter()
            .zip(&self.values)
            .map(|(f, v)| (f.id.to_string(), v.clone()))
            .collect()
    }
}

/// Sign and weight of one recursion term: (-1)^(dim a - dim b - 1) * w.
pub fn linking_number(dim_alpha: usize, dim_beta: usize, weight: &Int) -> Int {
    debug_assert!(dim_alpha > dim_beta);
    sign_pow(dim_alpha - dim_beta - 1) * weight
}

fn obstructions(
    faces: &FaceLattice,
    weight: &dyn Fn(usize, usize) -> Int,
    source: Route,
) -> EulerTable {
    let n = faces.len();
    let mut values = vec![Int::zero(); n];
    // faces are stored sorted by (dim, id); walking backwards processes
    // strictly larger dimensions first, which is all the recursion reads
    for beta in (0..n).rev() {
        if beta == faces.top {
            values[beta] = Int::one();
            continue;
        }
        let mut acc = Int::zero();
        for &alpha in faces.above(beta) {
            let w = weight(alpha, beta);
            acc +=
                linking_number(faces.faces[alpha].dim, faces.faces[beta].dim, &w) * &values[alpha];
        }
        values[beta] = acc;
    }
    EulerTable { source, values }
}

/// Euler obstructions for the normal route (faces of a pointed cone, or of a
/// very ample saturated polytope configuration).
pub fn obstructions_normal(faces: &FaceLattice, rsv: &PairTable) -> EulerTable {
    obstructions(faces, &|a, b| rsv.get(a, b).clone(), Route::Normal)
}

/// Euler obstructions of X_A for an arbitrary finite configuration.
pub fn obstructions_general(pm: &PolytopeModel, ui: &UiTable) -> EulerTable {
    obstructions(&pm.faces, &|a, b| ui.weight(a, b), Route::General)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{ConeModel, Model, PolytopeModel};
    use crate::subdiagram::{rsv_table, ui_table};
    use crate::Options;

    fn eu_of(map: &BTreeMap<String, Int>, key: &str) -> i64 {
        use num_traits::ToPrimitive;
        map[key].to_i64().unwrap()
    }

    #[test]
    fn smooth_segment_is_all_one() {
        let pm = PolytopeModel::from_i64(&[&[0], &[1]]).unwrap();
        let ui = ui_table(&pm, &Options::default()).unwrap();
        let eu = obstructions_general(&pm, &ui);
        assert!(eu.all_one());
    }

    #[test]
    fn cusp_vertex_has_multiplicity_two() {
        let pm = PolytopeModel::from_i64(&[&[0], &[2], &[3]]).unwrap();
        let ui = ui_table(&pm, &Options::default()).unwrap();
        let eu = obstructions_general(&pm, &ui);
        let map = eu.to_map(&pm.faces);
        assert_eq!(eu_of(&map, "0"), 2);
        assert_eq!(eu_of(&map, "2"), 1);
        assert_eq!(eu_of(&map, "0,1,2"), 1);
    }

    #[test]
    fn smooth_quadrant_cone_all_one() {
        let cone = ConeModel::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        let model = Model::Cone(cone.clone());
        let rsv = rsv_table(&model, &Options::default()).unwrap();
        let eu = obstructions_normal(&cone.faces, &rsv);
        assert!(eu.all_one());
    }

    #[test]
    fn quadric_cone_apex_value() {
        // cone((1,0),(1,2)): two smooth rays, apex value 1 + 1 - 2 = 0
        let cone = ConeModel::from_i64(&[&[1, 0], &[1, 2]]).unwrap();
        let model = Model::Cone(cone.clone());
        let rsv = rsv_table(&model, &Options::default()).unwrap();
        let eu = obstructions_normal(&cone.faces, &rsv);
        let map = eu.to_map(&cone.faces);
        assert_eq!(eu_of(&map, ""), 0);
        assert_eq!(eu_of(&map, "0"), 1);
        assert_eq!(eu_of(&map, "1"), 1);
    }

    #[test]
    fn doubled_edge_simplex_full_table() {
        let pm = PolytopeModel::from_i64(&[
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[0, 0, 2],
        ])
        .unwrap();
        let ui = ui_table(&pm, &Options::default()).unwrap();
        let eu = obstructions_general(&pm, &ui);
        let map = eu.to_map(&pm.faces);
        // vertices: the two unit vertices degenerate, 0 and the doubled one fine
        assert_eq!(eu_of(&map, "1"), 0);
        assert_eq!(eu_of(&map, "2"), 0);
        assert_eq!(eu_of(&map, "0"), 1);
        assert_eq!(eu_of(&map, "4"), 1);
        // edges: only the edge between the unit vertices degenerates
        assert_eq!(eu_of(&map, "1,2"), 0);
        for edge in ["0,1", "0,2", "1,4", "2,4", "0,3,4"] {
            assert_eq!(eu_of(&map, edge), 1, "edge {edge}");
        }
        // all 2-faces and the solid are 1
        for facet in ["0,1,2", "1,2,4", "0,1,3,4", "0,2,3,4", "0,1,2,3,4"] {
            assert_eq!(eu_of(&map, facet), 1, "face {facet}");
        }
    }

    #[test]
    fn route_agreement_on_saturated_models() {
        for pts in [
            vec![vec![0i64, 0], vec![1, 0], vec![0, 1], vec![1, 1]],
            vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![1, 2]],
            vec![
                vec![0, 0],
                vec![1, 0],
                vec![2, 0],
                vec![0, 1],
                vec![1, 1],
                vec![0, 2],
            ],
        ] {
            let rows: Vec<Vec<Int>> = pts
                .iter()
                .map(|p| p.iter().map(|&x| Int::from(x)).collect())
                .collect();
            let pm = PolytopeModel::from_points(rows).unwrap();
            let opts = Options::default();
            let ui = ui_table(&pm, &opts).unwrap();
            let general = obstructions_general(&pm, &ui);
            let model = Model::Polytope(pm.clone());
            let rsv = rsv_table(&model, &opts).unwrap();
            let normal = obstructions_normal(&pm.faces, &rsv);
            assert_eq!(general.values(), normal.values());
        }
    }
}
