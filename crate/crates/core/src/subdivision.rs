//! Fan refinement machinery: validity, refinement checks, star subdivision,
//! wall insertion, and the recorded resolution constructions.

use std::collections::BTreeMap;

use crate::catalog::{self, FanVariant, SingularityId};
use crate::error::SubdivisionError;
use crate::lattice::{
    cone_contains, det3, intersection_is_common_face, primitive, Cone, Fan, LatticeVector,
};
use crate::newton::dual_fan;

/// One recorded refinement move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubdivisionStep {
    InsertRay(LatticeVector),
    InsertWall(LatticeVector, LatticeVector),
}

/// Violations found by [`validate_fan`]; an empty list means the fan is valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FanValidity {
    pub violations: Vec<String>,
}

impl FanValidity {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks pairwise face intersections, primitivity, strong convexity and
/// exact coverage of the declared support. Violations are data, not errors.
pub fn validate_fan(fan: &Fan) -> FanValidity {
    let mut v = Vec::new();
    let cones = fan.maximal_cones();
    if cones.is_empty() {
        v.push("fan has no maximal cones".to_string());
        return FanValidity { violations: v };
    }
    let support = fan.support().as_cone();
    for (i, c) in cones.iter().enumerate() {
        if c.dim() != 3 {
            v.push(format!("maximal cone {c:?} is not full-dimensional"));
        }
        for r in c.rays() {
            match primitive(r) {
                Ok((p, k)) if k != 1 || &p != r => {
                    v.push(format!("ray {r:?} of cone {c:?} is not primitive"))
                }
                Err(_) => v.push(format!("zero ray in cone {c:?}")),
                _ => {}
            }
            if !cone_contains(&support, r) {
                v.push(format!("cone {c:?} leaves the declared support"));
                break;
            }
        }
        for d in cones.iter().skip(i + 1) {
            if !intersection_is_common_face(c, d) {
                v.push(format!("cones {c:?} and {d:?} do not meet in a common face"));
            }
        }
    }
    // coverage: every wall is either shared by exactly two maximal cones or
    // lies on the boundary of the support
    let support_walls = support.walls();
    let mut wall_count: BTreeMap<Cone, usize> = BTreeMap::new();
    for c in cones {
        if c.dim() != 3 {
            continue;
        }
        for w in c.walls() {
            *wall_count.entry(w).or_insert(0) += 1;
        }
    }
    for (w, count) in &wall_count {
        match count {
            1 => {
                let on_boundary = support_walls.iter().any(|sw| {
                    w.rays().iter().all(|r| cone_contains(sw, r))
                });
                if !on_boundary {
                    v.push(format!("wall {w:?} is exposed inside the support"));
                }
            }
            2 => {}
            n => v.push(format!("wall {w:?} is shared by {n} maximal cones")),
        }
    }
    FanValidity { violations: v }
}

/// True iff every maximal cone of `fine` lies inside some maximal cone of
/// `coarse` and the supports coincide.
pub fn refines(fine: &Fan, coarse: &Fan) -> bool {
    if fine.support().as_cone() != coarse.support().as_cone() {
        return false;
    }
    fine.maximal_cones().iter().all(|fc| {
        coarse
            .maximal_cones()
            .iter()
            .any(|cc| fc.rays().iter().all(|r| cone_contains(cc, r)))
    })
}

/// Replaces every cone containing `v` by the joins of `v` with its faces not
/// containing `v`. Inserting an existing ray is a no-op.
pub fn star_subdivide(fan: &Fan, v: &LatticeVector) -> Result<Fan, SubdivisionError> {
    let (p, k) = primitive(v)?;
    if k != 1 {
        return Err(SubdivisionError::NotPrimitive(v.to_string()));
    }
    if !cone_contains(&fan.support().as_cone(), &p) {
        return Err(SubdivisionError::OutsideSupport(p.to_string()));
    }
    if fan.has_ray(&p) {
        return Ok(fan.clone());
    }
    let mut out: Vec<Cone> = Vec::new();
    for c in fan.maximal_cones() {
        if !cone_contains(c, &p) {
            out.push(c.clone());
            continue;
        }
        if !c.is_simplicial() {
            return Err(SubdivisionError::NonSimplicialCone(p.to_string()));
        }
        for w in c.walls() {
            if !cone_contains(&w, &p) {
                let mut rays = w.rays().to_vec();
                rays.push(p);
                out.push(Cone::from_rays(&rays)?);
            }
        }
    }
    Ok(Fan::new(out, fan.support().clone()))
}

/// Splits the non-simplicial maximal cone having `a` and `b` among its rays
/// along the plane they span.
pub fn insert_wall(
    fan: &Fan,
    a: &LatticeVector,
    b: &LatticeVector,
) -> Result<Fan, SubdivisionError> {
    let n = a.cross(b);
    if n.is_zero() {
        return Err(SubdivisionError::NoCommonCone(a.to_string(), b.to_string()));
    }
    let mut out: Vec<Cone> = Vec::new();
    let mut split_any = false;
    for c in fan.maximal_cones() {
        if c.has_ray(a) && c.has_ray(b) && !c.is_simplicial() {
            let pos: Vec<LatticeVector> =
                c.rays().iter().copied().filter(|r| n.dot(r) > 0).collect();
            let neg: Vec<LatticeVector> =
                c.rays().iter().copied().filter(|r| n.dot(r) < 0).collect();
            if pos.is_empty() || neg.is_empty() {
                return Err(SubdivisionError::WallDoesNotSplit(a.to_string(), b.to_string()));
            }
            for side in [pos, neg] {
                let mut rays = side;
                rays.push(*a);
                rays.push(*b);
                out.push(Cone::from_rays(&rays)?);
            }
            split_any = true;
        } else {
            out.push(c.clone());
        }
    }
    if !split_any {
        return Err(SubdivisionError::NoCommonCone(a.to_string(), b.to_string()));
    }
    Ok(Fan::new(out, fan.support().clone()))
}

fn apply_step(fan: &Fan, step: &SubdivisionStep) -> Result<Fan, SubdivisionError> {
    match step {
        SubdivisionStep::InsertRay(v) => star_subdivide(fan, v),
        SubdivisionStep::InsertWall(a, b) => insert_wall(fan, a, b),
    }
}

/// Applies the steps in order, returning the fan after each one.
pub fn apply_steps_traced(
    start: &Fan,
    steps: &[SubdivisionStep],
) -> Result<Vec<Fan>, SubdivisionError> {
    let mut out = Vec::with_capacity(steps.len());
    let mut fan = start.clone();
    for (index, step) in steps.iter().enumerate() {
        fan = apply_step(&fan, step).map_err(|source| SubdivisionError::Step {
            index,
            source: Box::new(source),
        })?;
        out.push(fan.clone());
    }
    Ok(out)
}

/// Per-cone determinants of a simplicial fan; the fan is regular iff all are
/// plus or minus one.
pub fn regularity_report(fan: &Fan) -> Result<Vec<(Cone, i128)>, SubdivisionError> {
    let mut out = Vec::new();
    for c in fan.maximal_cones() {
        if !c.is_simplicial() || c.dim() != 3 {
            return Err(SubdivisionError::NonSimplicialFan);
        }
        let d = det3(&c.rays()[0], &c.rays()[1], &c.rays()[2]);
        out.push((c.clone(), d));
    }
    Ok(out)
}

/// Outcome of one recorded resolution construction.
#[derive(Clone, Debug)]
pub struct ResolutionFanResult {
    pub variant: FanVariant,
    pub fan: Fan,
    /// Rays genuinely added beyond the dual fan, in insertion order.
    pub inserted_rays: Vec<LatticeVector>,
    /// The weight-vector list the construction realizes (as printed in the
    /// catalog; may contain non-primitive entries and dual-fan rays).
    pub weight_vectors: Vec<LatticeVector>,
    pub regular: bool,
    pub refines_dual_fan: bool,
    /// Inserted rays lying on two-dimensional cones of the dual fan; their
    /// divisors meet the strict transform.
    pub boundary_weight_rays: Vec<LatticeVector>,
}

/// Runs the catalog step list(s) for the singularity. One result for most
/// entries; two for E8 (the minimal-subset fan and the full weight-vector
/// fan).
pub fn build_resolution_fan(
    id: &SingularityId,
) -> Result<Vec<ResolutionFanResult>, crate::error::CatalogError> {
    let entry = catalog::entry(id)?;
    let gamma = dual_fan(&entry.equation).expect("catalog equations have dual fans");
    let mut out = Vec::new();
    let mut variants: Vec<(FanVariant, Vec<SubdivisionStep>, Vec<LatticeVector>)> = vec![(
        FanVariant::Minimal,
        entry.steps.clone(),
        entry
            .e8_minimal_subset
            .clone()
            .unwrap_or_else(|| entry.ee_vectors.clone()),
    )];
    if !entry.full_extra_steps.is_empty() {
        let mut steps = entry.steps.clone();
        steps.extend(entry.full_extra_steps.clone());
        variants.push((FanVariant::FullWeights, steps, entry.ee_vectors.clone()));
    }
    for (variant, steps, weight_vectors) in variants {
        let trace = apply_steps_traced(&gamma, &steps)
            .unwrap_or_else(|e| panic!("catalog steps for {} failed: {e}", entry.id));
        let fan = trace.last().cloned().unwrap_or_else(|| gamma.clone());
        let mut inserted_rays = Vec::new();
        for (prev, step) in std::iter::once(&gamma).chain(trace.iter()).zip(&steps) {
            if let SubdivisionStep::InsertRay(v) = step {
                let p = primitive(v).expect("catalog rays nonzero").0;
                if !prev.has_ray(&p) {
                    inserted_rays.push(p);
                }
            }
        }
        let regular = regularity_report(&fan)
            .map(|r| r.iter().all(|(_, d)| d.abs() == 1))
            .unwrap_or(false);
        let refines_dual_fan = refines(&fan, &gamma);
        let gamma_walls = gamma.walls();
        let boundary_weight_rays = inserted_rays
            .iter()
            .copied()
            .filter(|r| gamma_walls.iter().any(|w| cone_contains(w, r)))
            .collect();
        out.push(ResolutionFanResult {
            variant,
            fan,
            inserted_rays,
            weight_vectors,
            regular,
            refines_dual_fan,
            boundary_weight_rays,
        });
    }
    Ok(out)
}

/// Sum of absolute ray determinants of the fine cones inside each maximal
/// cone of `gamma`, keyed by the cone's position. Conserved along a step
/// exactly when the inserted ray lies on the lattice-height-one base of
/// every incident region.
pub fn region_volumes(fine: &Fan, gamma: &Fan) -> Vec<i128> {
    let mut vols = vec![0i128; gamma.maximal_cones().len()];
    for c in fine.maximal_cones() {
        let ip = c.interior_point();
        for (i, g) in gamma.maximal_cones().iter().enumerate() {
            if cone_contains(g, &ip) && c.rays().iter().all(|r| cone_contains(g, r)) {
                if c.is_simplicial() && c.dim() == 3 {
                    vols[i] += det3(&c.rays()[0], &c.rays()[1], &c.rays()[2]).abs();
                } else {
                    for t in c.triangulate() {
                        vols[i] += det3(&t.rays()[0], &t.rays()[1], &t.rays()[2]).abs();
                    }
                }
                break;
            }
        }
    }
    vols
}
