//! Irreducibility of lattice vectors in cones, minimal generator systems,
//! and minimality verdicts for the recorded resolutions.
//!
//! A lattice point of a cone is irreducible when it admits no splitting into
//! two nonzero lattice points of the cone. The minimal generator system of a
//! cone consists of exactly its irreducible points; a resolution is minimal
//! when every inserted ray is irreducible in some maximal dual-fan cone
//! containing it.

use std::collections::BTreeMap;

use crate::error::GeneratorError;
use crate::lattice::{cone_contains, in_nonneg_span, Cone, Fan, LatticeVector};
use crate::subdivision::{refines, ResolutionFanResult};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityVerdict {
    pub vector: LatticeVector,
    pub cone: Cone,
    pub irreducible: bool,
    /// A two-part splitting inside the cone when reducible.
    pub witness: Option<(LatticeVector, LatticeVector)>,
}

/// Fast membership context: a cone's rays plus, for full-dimensional cones,
/// its facet normals.
struct MemberCtx {
    rays: Vec<LatticeVector>,
    facets: Option<Vec<LatticeVector>>,
}

impl MemberCtx {
    fn new(c: &Cone) -> Self {
        MemberCtx {
            rays: c.rays().to_vec(),
            facets: (c.dim() == 3).then(|| c.facet_normals()),
        }
    }

    fn contains(&self, v: &LatticeVector) -> bool {
        match &self.facets {
            Some(fs) => fs.iter().all(|n| n.dot(v) >= 0),
            None => in_nonneg_span(&self.rays, v),
        }
    }
}

fn box_iter(bounds: LatticeVector) -> impl Iterator<Item = LatticeVector> {
    let [bx, by, bz] = bounds.0;
    (0..=bx).flat_map(move |x| {
        (0..=by).flat_map(move |y| (0..=bz).map(move |z| LatticeVector::new(x, y, z)))
    })
}

/// Graded-lex enumeration of candidate splittings within the coordinate box
/// below `v`. Sound for cones inside the nonnegative octant, where any
/// summand of `v` is coordinatewise below it.
fn find_split(v: &LatticeVector, ctx: &MemberCtx) -> Option<(LatticeVector, LatticeVector)> {
    let mut candidates: Vec<LatticeVector> = box_iter(*v)
        .filter(|u| !u.is_zero() && u != v)
        .collect();
    candidates.sort_by(|a, b| a.grlex_cmp(b));
    for u in candidates {
        let w = v.sub(&u);
        if ctx.contains(&u) && ctx.contains(&w) {
            return Some((u, w));
        }
    }
    None
}

/// Exhaustive box search for a splitting of `v` inside `c`.
pub fn is_irreducible(v: &LatticeVector, c: &Cone) -> Result<IrreducibilityVerdict, GeneratorError> {
    if v.is_zero() || !cone_contains(c, v) {
        return Err(GeneratorError::NotInCone(v.to_string()));
    }
    let ctx = MemberCtx::new(c);
    let witness = find_split(v, &ctx);
    Ok(IrreducibilityVerdict {
        vector: *v,
        cone: c.clone(),
        irreducible: witness.is_none(),
        witness,
    })
}

/// Sum of coordinate maxima over any triangulation simplex: every
/// irreducible point lies inside the Minkowski parallelepiped of some
/// simplex (a point past a whole generator splits off that generator), so
/// this box always captures the full generator system. The smaller
/// coordinate-max box can miss generators while its closure check still
/// passes, e.g. (1,1,3) in the cone over (1,0,2), (0,1,2), (1,1,1).
fn parallelepiped_box(c: &Cone) -> LatticeVector {
    let mut best = [0i64; 3];
    for t in c.triangulate() {
        for (i, b) in best.iter_mut().enumerate() {
            let s: i64 = t.rays().iter().map(|r| r.0[i]).sum();
            *b = (*b).max(s);
        }
    }
    LatticeVector::new(best[0], best[1], best[2])
}

/// All irreducible lattice points of a full-dimensional cone contained in
/// the nonnegative octant: boxed enumeration over the parallelepiped bound,
/// certified by a generation-closure check over every enumerated point.
pub fn minimal_generators(c: &Cone) -> Result<Vec<LatticeVector>, GeneratorError> {
    if c.dim() != 3 {
        return Err(GeneratorError::NotFullDimensional);
    }
    assert!(
        c.rays().iter().all(|r| r.is_nonnegative()),
        "boxed enumeration needs a cone inside the nonnegative octant"
    );
    let ctx = MemberCtx::new(c);
    let bounds = parallelepiped_box(c);
    let mut points: Vec<LatticeVector> = box_iter(bounds)
        .filter(|p| !p.is_zero() && ctx.contains(p))
        .collect();
    points.sort_by(|a, b| a.grlex_cmp(b));
    let gens: Vec<LatticeVector> = points
        .iter()
        .copied()
        .filter(|p| find_split(p, &ctx).is_none())
        .collect();
    assert!(closure_holds(&points, &gens), "generation closure must hold");
    Ok(gens)
}

/// Every enumerated cone point must be a nonnegative integer combination of
/// the generators.
fn closure_holds(points: &[LatticeVector], gens: &[LatticeVector]) -> bool {
    let mut reachable: BTreeMap<LatticeVector, bool> = BTreeMap::new();
    // points are graded-lex sorted, so summands precede sums
    for p in points {
        let ok = gens.contains(p)
            || gens.iter().any(|g| {
                let d = p.sub(g);
                d.is_zero() || (d.is_nonnegative() && *reachable.get(&d).unwrap_or(&false))
            });
        reachable.insert(*p, ok);
    }
    points.iter().all(|p| reachable[p])
}

/// Essentiality bookkeeping for one weight vector of a resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RayStatus {
    /// Already a ray of the dual fan.
    DualFanRay,
    /// Irreducible in at least one containing maximal dual-fan cone.
    Essential,
    Reducible {
        witness: (LatticeVector, LatticeVector),
    },
}

#[derive(Clone, Debug)]
pub struct MinimalityVerdict {
    pub per_ray: Vec<(LatticeVector, RayStatus)>,
    pub is_minimal: bool,
}

impl MinimalityVerdict {
    pub fn reducible_vectors(&self) -> Vec<LatticeVector> {
        self.per_ray
            .iter()
            .filter(|(_, s)| matches!(s, RayStatus::Reducible { .. }))
            .map(|(v, _)| *v)
            .collect()
    }
}

/// Tests every weight vector of the resolution for irreducibility in the
/// maximal cones of the dual fan containing it.
pub fn minimality_verdict(
    res: &ResolutionFanResult,
    gamma: &Fan,
) -> Result<MinimalityVerdict, GeneratorError> {
    if !refines(&res.fan, gamma) {
        return Err(GeneratorError::NotARefinement);
    }
    let mut per_ray = Vec::new();
    let mut is_minimal = true;
    for v in &res.weight_vectors {
        let status = if gamma.has_ray(v) {
            RayStatus::DualFanRay
        } else {
            let homes: Vec<&Cone> = gamma
                .maximal_cones()
                .iter()
                .filter(|c| cone_contains(c, v))
                .collect();
            debug_assert!(!homes.is_empty(), "weight vector outside the dual fan");
            let mut witness = None;
            let mut essential = false;
            for c in &homes {
                let verdict = is_irreducible(v, c)?;
                if verdict.irreducible {
                    essential = true;
                    break;
                }
                witness = verdict.witness;
            }
            if essential {
                RayStatus::Essential
            } else {
                is_minimal = false;
                RayStatus::Reducible { witness: witness.expect("reducible has witness") }
            }
        };
        per_ray.push((*v, status));
    }
    Ok(MinimalityVerdict { per_ray, is_minimal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::sing;
    use crate::lattice::{E1, E2, E3};
    use crate::newton::{dual_fan, parse_polynomial};
    use crate::subdivision::build_resolution_fan;

    fn lv(x: i64, y: i64, z: i64) -> LatticeVector {
        LatticeVector::new(x, y, z)
    }

    #[test]
    fn e8_double_vector_is_reducible() {
        let gamma = dual_fan(&parse_polynomial("z^2+y^3+x^5").unwrap()).unwrap();
        let v = lv(4, 6, 8);
        let home = gamma
            .maximal_cones()
            .iter()
            .find(|c| cone_contains(c, &v))
            .unwrap();
        let verdict = is_irreducible(&v, home).unwrap();
        assert!(!verdict.irreducible);
        let (a, b) = verdict.witness.unwrap();
        assert_eq!(a.add(&b), v);
        assert!(cone_contains(home, &a) && cone_contains(home, &b));
        // the printed identity is one valid splitting
        let half = lv(2, 3, 4);
        assert!(cone_contains(home, &half));
        assert_eq!(half.add(&half), v);
    }

    #[test]
    fn unit_vectors_are_irreducible_in_the_octant() {
        let octant = Cone::octant();
        for v in [E1, E2, E3] {
            assert!(is_irreducible(&v, &octant).unwrap().irreducible);
        }
    }

    #[test]
    fn interior_point_of_a2_cone_is_irreducible() {
        let c = Cone::from_rays(&[E3, lv(3, 0, 1), lv(0, 3, 1)]).unwrap();
        assert!(is_irreducible(&lv(1, 1, 1), &c).unwrap().irreducible);
    }

    #[test]
    fn irreducibility_requires_membership() {
        let c = Cone::octant();
        assert!(is_irreducible(&lv(-1, 0, 0), &c).is_err());
        assert!(is_irreducible(&lv(0, 0, 0), &c).is_err());
    }

    #[test]
    fn generators_of_regular_cone_are_its_rays() {
        let octant = Cone::octant();
        assert_eq!(minimal_generators(&octant).unwrap(), vec![E3, E2, E1]);
        let tri = Cone::from_rays(&[lv(1, 1, 1), lv(1, 0, 1), lv(0, 0, 1)]).unwrap();
        let mut g = minimal_generators(&tri).unwrap();
        g.sort();
        assert_eq!(g, vec![lv(0, 0, 1), lv(1, 0, 1), lv(1, 1, 1)]);
    }

    #[test]
    fn generator_examples() {
        let c = Cone::from_rays(&[E1, E2, lv(1, 1, 2)]).unwrap();
        let mut g = minimal_generators(&c).unwrap();
        g.sort();
        assert_eq!(g, vec![lv(0, 1, 0), lv(1, 0, 0), lv(1, 1, 1), lv(1, 1, 2)]);

        let a1 = Cone::from_rays(&[E3, lv(2, 0, 1), lv(0, 2, 1)]).unwrap();
        let mut g = minimal_generators(&a1).unwrap();
        g.sort();
        assert_eq!(
            g,
            vec![
                lv(0, 0, 1),
                lv(0, 1, 1),
                lv(0, 2, 1),
                lv(1, 0, 1),
                lv(1, 1, 1),
                lv(2, 0, 1)
            ]
        );
    }

    #[test]
    fn a2_cone_generators_match_weight_vectors() {
        let c = Cone::from_rays(&[E3, lv(3, 0, 1), lv(0, 3, 1)]).unwrap();
        let mut g = minimal_generators(&c).unwrap();
        g.sort();
        assert_eq!(
            g,
            vec![
                lv(0, 0, 1),
                lv(0, 1, 1),
                lv(0, 2, 1),
                lv(0, 3, 1),
                lv(1, 0, 1),
                lv(1, 1, 1),
                lv(1, 2, 1),
                lv(2, 0, 1),
                lv(2, 1, 1),
                lv(3, 0, 1)
            ]
        );
    }

    #[test]
    fn generators_beyond_the_coordinate_box_are_found() {
        // (1,1,3) is irreducible here but exceeds every ray coordinate
        let c = Cone::from_rays(&[lv(1, 0, 2), lv(0, 1, 2), lv(1, 1, 1)]).unwrap();
        let g = minimal_generators(&c).unwrap();
        assert!(g.contains(&lv(1, 1, 3)), "{g:?}");
        assert!(is_irreducible(&lv(1, 1, 3), &c).unwrap().irreducible);
    }

    #[test]
    fn extremal_rays_always_generate() {
        for rays in [
            vec![E1, E2, lv(1, 1, 2)],
            vec![E3, lv(2, 0, 1), lv(0, 2, 1)],
            vec![E1, E2, lv(3, 4, 6)],
        ] {
            let c = Cone::from_rays(&rays).unwrap();
            let g = minimal_generators(&c).unwrap();
            for r in c.rays() {
                assert!(g.contains(r));
            }
        }
    }

    fn is_nat_combination(target: &LatticeVector, gens: &[LatticeVector]) -> bool {
        let mut reachable: BTreeMap<LatticeVector, bool> = BTreeMap::new();
        let mut points: Vec<LatticeVector> = box_iter(*target).collect();
        points.sort_by(|a, b| a.grlex_cmp(b));
        for p in points {
            let ok = p.is_zero()
                || gens.iter().any(|g| {
                    let d = p.sub(g);
                    d.is_nonnegative() && *reachable.get(&d).unwrap_or(&false)
                });
            reachable.insert(p, ok);
        }
        reachable[target]
    }

    #[test]
    fn no_generator_is_a_combination_of_the_others() {
        for rays in [
            vec![E1, E2, lv(3, 4, 6)],
            vec![E3, lv(3, 0, 1), lv(0, 3, 1)],
            vec![E2, E3, lv(1, 2, 0), lv(9, 6, 4)],
        ] {
            let c = Cone::from_rays(&rays).unwrap();
            let gens = minimal_generators(&c).unwrap();
            for g in &gens {
                let others: Vec<LatticeVector> =
                    gens.iter().copied().filter(|o| o != g).collect();
                assert!(
                    !is_nat_combination(g, &others),
                    "{g} generated by the rest in {c:?}"
                );
            }
        }
    }

    #[test]
    fn generators_generate_every_box_point() {
        for rays in [
            vec![E1, E2, lv(3, 4, 6)],
            vec![E3, lv(2, 0, 1), lv(0, 2, 1)],
            vec![E1, E3, lv(9, 6, 4)],
        ] {
            let c = Cone::from_rays(&rays).unwrap();
            let gens = minimal_generators(&c).unwrap();
            let ctx = MemberCtx::new(&c);
            for p in box_iter(parallelepiped_box(&c)) {
                if !p.is_zero() && ctx.contains(&p) {
                    assert!(is_nat_combination(&p, &gens), "{p} not generated");
                }
            }
        }
    }

    #[test]
    fn irreducibility_respects_the_xy_symmetry() {
        let c = Cone::from_rays(&[E3, lv(4, 0, 1), lv(0, 4, 1)]).unwrap();
        let swap = |v: &LatticeVector| lv(v.0[1], v.0[0], v.0[2]);
        for x in 0..=4i64 {
            for y in 0..=4 - x {
                let v = lv(x, y, 1);
                if v.is_zero() {
                    continue;
                }
                let a = is_irreducible(&v, &c).unwrap().irreducible;
                let b = is_irreducible(&swap(&v), &c).unwrap().irreducible;
                assert_eq!(a, b, "{v}");
            }
        }
    }

    #[test]
    fn minimality_verdicts() {
        for id in ["A3", "E7"] {
            let results = build_resolution_fan(&sing(id)).unwrap();
            let entry = crate::catalog::entry(&sing(id)).unwrap();
            let gamma = dual_fan(&entry.equation).unwrap();
            let verdict = minimality_verdict(&results[0], &gamma).unwrap();
            assert!(verdict.is_minimal, "{id}");
        }
    }

    #[test]
    fn mirrored_a_variant_is_also_minimal() {
        use crate::catalog::{entry_with_variant, AVariant};
        use crate::subdivision::{apply_steps_traced, ResolutionFanResult};
        let e = entry_with_variant(&sing("A4"), AVariant::JoinFirstAxis).unwrap();
        let gamma = dual_fan(&e.equation).unwrap();
        let trace = apply_steps_traced(&gamma, &e.steps).unwrap();
        let fan = trace.last().unwrap().clone();
        let inserted: Vec<LatticeVector> = fan
            .rays()
            .iter()
            .copied()
            .filter(|r| !gamma.has_ray(r))
            .collect();
        let res = ResolutionFanResult {
            variant: crate::catalog::FanVariant::Minimal,
            refines_dual_fan: crate::subdivision::refines(&fan, &gamma),
            regular: true,
            boundary_weight_rays: Vec::new(),
            weight_vectors: e.ee_vectors.clone(),
            inserted_rays: inserted,
            fan,
        };
        let verdict = minimality_verdict(&res, &gamma).unwrap();
        assert!(verdict.is_minimal);
    }

    #[test]
    fn e8_full_fan_is_not_minimal() {
        let results = build_resolution_fan(&sing("E8")).unwrap();
        let entry = crate::catalog::entry(&sing("E8")).unwrap();
        let gamma = dual_fan(&entry.equation).unwrap();
        let min = minimality_verdict(&results[0], &gamma).unwrap();
        assert!(min.is_minimal);
        let full = minimality_verdict(&results[1], &gamma).unwrap();
        assert!(!full.is_minimal);
        let mut red = full.reducible_vectors();
        red.sort();
        assert_eq!(
            red,
            vec![
                lv(4, 6, 8),
                lv(5, 7, 11),
                lv(5, 8, 11),
                lv(5, 9, 13),
                lv(5, 9, 14),
                lv(6, 10, 14)
            ]
        );
        for (v, s) in &full.per_ray {
            if let RayStatus::Reducible { witness: (a, b) } = s {
                assert_eq!(a.add(b), *v);
            }
        }
    }

    #[test]
    fn verdict_requires_refinement() {
        let a1 = build_resolution_fan(&sing("A1")).unwrap();
        let e6_gamma = dual_fan(&parse_polynomial("z^2+y^3+x^4").unwrap()).unwrap();
        assert!(matches!(
            minimality_verdict(&a1[0], &e6_gamma),
            Err(GeneratorError::NotARefinement)
        ));
    }
}
