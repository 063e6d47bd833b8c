//! Data tables for the rational double point singularities: defining
//! equations, weight-vector lists, jet-component specifications, recorded
//! subdivision step sequences, and the printed E8 reducibility identities.
//!
//! Printed typos in the source tables are preserved in each entry's `notes`
//! channel; the operative fields carry the recomputed values.

use std::fmt;
use std::str::FromStr;

use crate::error::CatalogError;
use crate::jets::ComponentSpec;
use crate::lattice::{primitive, LatticeVector, E1, E2};
use crate::newton::{parse_polynomial, Polynomial};
use crate::subdivision::SubdivisionStep;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    D,
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SingularityId {
    pub family: Family,
    pub index: u32,
}

impl fmt::Display for SingularityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
        };
        write!(f, "{fam}{}", self.index)
    }
}

impl FromStr for SingularityId {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: &str| CatalogError::Unsupported(s.to_string(), msg.to_string());
        let mut chars = s.chars();
        let fam = match chars.next() {
            Some('A') | Some('a') => Family::A,
            Some('D') | Some('d') => Family::D,
            Some('E') | Some('e') => Family::E,
            _ => return Err(bad("expected A<n>, D<2n>, E6, E7 or E8")),
        };
        let index: u32 = chars
            .as_str()
            .parse()
            .map_err(|_| bad("expected a numeric index"))?;
        let id = SingularityId { family: fam, index };
        validate(&id).map(|_| id)
    }
}

fn validate(id: &SingularityId) -> Result<(), CatalogError> {
    let bad = |msg: &str| CatalogError::Unsupported(id.to_string(), msg.to_string());
    match id.family {
        Family::A if id.index >= 1 => Ok(()),
        Family::A => Err(bad("A-type indexes start at 1")),
        Family::D if id.index >= 4 && id.index.is_multiple_of(2) => Ok(()),
        Family::D if id.index % 2 == 1 => Err(bad(
            "odd D indexes are outside the catalog; the component tables cover D_2n only",
        )),
        Family::D => Err(bad("D-type indexes start at 4")),
        Family::E if (6..=8).contains(&id.index) => Ok(()),
        Family::E => Err(bad("E-type indexes are 6, 7 and 8")),
    }
}

/// Convenience constructor for tests and the CLI; panics on invalid ids.
pub fn sing(s: &str) -> SingularityId {
    s.parse().expect("valid singularity id")
}

/// Which recorded construction a resolution result came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FanVariant {
    Minimal,
    FullWeights,
}

/// The trapezium choice for the A-family subdivision. The default joins the
/// boundary chain to the second axis; the mirror joins it to the first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AVariant {
    #[default]
    JoinSecondAxis,
    JoinFirstAxis,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: SingularityId,
    pub equation: Polynomial,
    pub ee_vectors: Vec<LatticeVector>,
    pub ec_specs: Vec<ComponentSpec>,
    pub steps: Vec<SubdivisionStep>,
    /// Extra star subdivisions extending the minimal fan to the full
    /// weight-vector fan (E8 only).
    pub full_extra_steps: Vec<SubdivisionStep>,
    pub e8_minimal_subset: Option<Vec<LatticeVector>>,
    pub notes: Vec<String>,
}

fn lv(x: i64, y: i64, z: i64) -> LatticeVector {
    LatticeVector::new(x, y, z)
}

fn ray(v: LatticeVector) -> SubdivisionStep {
    SubdivisionStep::InsertRay(v)
}

const E6_VECTORS: [[i64; 3]; 6] = [
    [1, 1, 1], [1, 1, 2], [1, 2, 2], [2, 2, 3], [2, 3, 4], [3, 4, 6],
];

const E7_VECTORS: [[i64; 3]; 14] = [
    [1, 1, 0], [1, 2, 0], [1, 1, 1], [2, 1, 1], [2, 2, 1], [3, 2, 1], [3, 3, 1],
    [3, 2, 2], [4, 3, 2], [5, 3, 2], [5, 4, 2], [6, 4, 3], [7, 5, 3], [9, 6, 4],
];

const E8_VECTORS: [[i64; 3]; 21] = [
    [1, 1, 1], [1, 1, 2], [1, 2, 2], [1, 2, 3], [2, 2, 3], [2, 3, 4], [2, 3, 5],
    [2, 4, 5], [3, 4, 6], [3, 5, 7], [3, 5, 8], [4, 6, 8], [4, 6, 9], [4, 7, 10],
    [5, 7, 11], [5, 8, 11], [5, 8, 12], [5, 9, 13], [5, 9, 14], [6, 10, 14], [6, 10, 15],
];

const E8_MINIMAL: [[i64; 3]; 15] = [
    [1, 1, 1], [1, 1, 2], [1, 2, 2], [1, 2, 3], [2, 2, 3], [2, 3, 4], [2, 3, 5],
    [2, 4, 5], [3, 4, 6], [3, 5, 7], [3, 5, 8], [4, 6, 9], [4, 7, 10], [5, 8, 12],
    [6, 10, 15],
];

fn vecs(raw: &[[i64; 3]]) -> Vec<LatticeVector> {
    raw.iter().map(|&[x, y, z]| lv(x, y, z)).collect()
}

/// Prefix component: the first `a1` x-levels, `a2` y-levels, `a3` z-levels.
fn prefix_spec(a: LatticeVector) -> ComponentSpec {
    ComponentSpec::from_prefixes(a.0[0] as u32, a.0[1] as u32, a.0[2] as u32)
        .expect("catalog prefixes are valid components")
}

pub fn entry(id: &SingularityId) -> Result<CatalogEntry, CatalogError> {
    entry_with_variant(id, AVariant::default())
}

pub fn entry_with_variant(
    id: &SingularityId,
    variant: AVariant,
) -> Result<CatalogEntry, CatalogError> {
    validate(id)?;
    Ok(match id.family {
        Family::A => a_entry(id.index, variant),
        Family::D => d_entry(id.index / 2),
        Family::E => match id.index {
            6 => e6_entry(),
            7 => e7_entry(),
            _ => e8_entry(),
        },
    })
}

fn a_entry(n: u32, variant: AVariant) -> CatalogEntry {
    let n = n as i64;
    let equation = parse_polynomial(&format!("x*y - z^{}", n + 1)).unwrap();
    let mut ee = Vec::new();
    for m in 1..=n {
        for l in 1..=m {
            ee.push(lv(l, m - l + 1, 1));
        }
    }
    for l in 1..=n + 1 {
        ee.push(lv(l, 0, 1));
    }
    for l in 1..=n + 1 {
        ee.push(lv(0, l, 1));
    }

    let mut ec = Vec::new();
    for m in 1..=n {
        for l in 1..=m {
            ec.push(prefix_spec(lv(l, m - l + 1, 1)));
        }
    }
    for l in 0..=n {
        // jets through a generic point of the first axis
        ec.push(
            ComponentSpec::from_prefixes(0, (l + 1) as u32, 1).expect("axis component"),
        );
    }
    for l in 0..=n {
        ec.push(
            ComponentSpec::from_prefixes((l + 1) as u32, 0, 1).expect("axis component"),
        );
    }

    let v1 = lv(n + 1, 0, 1);
    let v2 = lv(0, n + 1, 1);
    let mut steps = vec![match variant {
        AVariant::JoinSecondAxis => SubdivisionStep::InsertWall(E2, v1),
        AVariant::JoinFirstAxis => SubdivisionStep::InsertWall(E1, v2),
    }];
    steps.push(ray(lv(1, 1, 1)));
    for k in (1..=n).rev() {
        steps.push(ray(lv(k, 0, 1)));
    }
    for k in (1..=n).rev() {
        steps.push(ray(lv(0, k, 1)));
    }
    for m in 2..=n {
        for l in 1..=m {
            steps.push(ray(lv(l, m - l + 1, 1)));
        }
    }

    CatalogEntry {
        id: SingularityId { family: Family::A, index: n as u32 },
        equation,
        ee_vectors: ee,
        ec_specs: ec,
        steps,
        full_extra_steps: Vec::new(),
        e8_minimal_subset: None,
        notes: vec![
            "trapezium subdivision fixed to the asymmetric choice joining the boundary \
             chain to the second axis; the mirrored choice is the variant flag"
                .to_string(),
        ],
    }
}

fn d_entry(n: u32) -> CatalogEntry {
    let n = n as i64;
    let equation = parse_polynomial(&format!("z^2 - x*y^2 - x^{}", 2 * n - 1)).unwrap();
    let omega = lv(2, 2 * n - 2, 2 * n - 1);
    let mut ee = Vec::new();
    for i in 1..n {
        ee.push(lv(1, i, i)); // U chain
    }
    for i in 1..n {
        ee.push(lv(1, i, i + 1)); // W chain
    }
    for i in 1..=2 * n - 2 {
        ee.push(lv(2, i, i + 1)); // V chain, ending at the compact-facet normal
    }
    ee.push(lv(1, 0, 1));
    ee.push(lv(2, 0, 1));

    let ec: Vec<ComponentSpec> = ee.iter().map(|v| prefix_spec(*v)).collect();
    debug_assert!(ec.len() == ee.len());

    let mut steps = vec![SubdivisionStep::InsertWall(E1, omega), ray(lv(1, 0, 1))];
    for i in 1..n {
        steps.push(ray(lv(1, i, i)));
    }
    for i in 1..n {
        steps.push(ray(lv(1, i, i + 1)));
    }
    for i in 1..=2 * n - 2 {
        steps.push(ray(lv(2, i, i + 1)));
    }

    CatalogEntry {
        id: SingularityId { family: Family::D, index: (2 * n) as u32 },
        equation,
        ee_vectors: ee,
        ec_specs: ec,
        steps,
        full_extra_steps: Vec::new(),
        e8_minimal_subset: None,
        notes: vec![
            "printed origin component V(x0,y0,z1) read as V(x0,y0,z0): origin fibers \
             force level-zero vanishing and the weight list needs (1,1,1)"
                .to_string(),
            "printed chain range for the codimension-(2k+3) components runs one index \
             past the weight-vector list; the catalog stops at (2,2n-2,2n-1)"
                .to_string(),
            "printed chain determinant n-1-2i recomputes to |2n-1-2i|, unit exactly at \
             i = n-1 as the conclusion requires"
                .to_string(),
            "printed cone labels attach the U chain to the wrong half of the subdivided \
             four-ray cone; the construction follows the membership computation"
                .to_string(),
            "the cone printed for the final W step is degenerate: 2*(1,n-1,n) = e3 + \
             (2,2n-2,2n-1), so the last W ray subdivides the wall between two cones"
                .to_string(),
        ],
    }
}

fn e6_entry() -> CatalogEntry {
    let ee = vecs(&E6_VECTORS);
    let mut steps = Vec::new();
    for v in &ee {
        steps.push(ray(*v)); // (3,4,6) is already a dual-fan ray; recorded no-op
    }
    CatalogEntry {
        id: sing("E6"),
        equation: parse_polynomial("z^2+y^3+x^4").unwrap(),
        ec_specs: ee.iter().map(|v| prefix_spec(*v)).collect(),
        ee_vectors: ee,
        steps,
        full_extra_steps: Vec::new(),
        e8_minimal_subset: None,
        notes: Vec::new(),
    }
}

fn e7_entry() -> CatalogEntry {
    let ee = vecs(&E7_VECTORS);
    let mut steps = vec![SubdivisionStep::InsertWall(E2, lv(9, 6, 4))];
    let mut sorted = ee.clone();
    sorted.sort();
    for v in sorted {
        steps.push(ray(v));
    }
    CatalogEntry {
        id: sing("E7"),
        equation: parse_polynomial("x^2+y^3+y*z^3").unwrap(),
        ec_specs: ee.iter().map(|v| prefix_spec(*v)).collect(),
        ee_vectors: ee,
        steps,
        full_extra_steps: Vec::new(),
        e8_minimal_subset: None,
        notes: vec![
            "printed component list has missing commas and a repeated x6; the \
             component table is reconstructed from the weight vectors"
                .to_string(),
        ],
    }
}

fn e8_entry() -> CatalogEntry {
    let ee = vecs(&E8_VECTORS);
    let minimal = vecs(&E8_MINIMAL);
    // descending graded-lex keeps the full-weight extension regular; the
    // ascending order pins (5,9,14) at non-unit coefficients
    let mut base = minimal.clone();
    base.sort_by(|a, b| b.grlex_cmp(a));
    let steps = base.into_iter().map(ray).collect();
    let mut extra: Vec<LatticeVector> = ee
        .iter()
        .filter(|v| !minimal.contains(v))
        .map(|v| primitive(v).expect("nonzero").0)
        .collect();
    extra.sort_by(|a, b| a.grlex_cmp(b));
    let full_extra_steps = extra.into_iter().map(ray).collect();
    CatalogEntry {
        id: sing("E8"),
        equation: parse_polynomial("z^2+y^3+x^5").unwrap(),
        ec_specs: ee.iter().map(|v| prefix_spec(*v)).collect(),
        ee_vectors: ee,
        steps,
        full_extra_steps,
        e8_minimal_subset: Some(minimal),
        notes: vec![
            "printed weight list drops a parenthesis at (4,6,8); restored".to_string(),
            "printed weight vectors (4,6,8) and (6,10,14) are not primitive: they are \
             2*(2,3,4) and 2*(3,5,7)"
                .to_string(),
            "(6,9,13) appears in the printed sum identities but not in the weight list"
                .to_string(),
            "printed identity (5,9,14)=(3,4,6)+(3,5,8) does not add up; the true sums \
             are recomputed"
                .to_string(),
        ],
    }
}

/// One printed sum identity from the reducibility discussion, with exact
/// checks of the sum and of membership in the printed weight list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducibilityIdentity {
    pub lhs: LatticeVector,
    pub parts: (LatticeVector, LatticeVector),
    pub sum_valid: bool,
    pub lhs_in_weight_list: bool,
}

/// The seven printed identities, verbatim, each tagged after exact checking.
pub fn e8_reducibility_table() -> Vec<ReducibilityIdentity> {
    let printed = [
        ([4, 6, 8], [2, 3, 4], [2, 3, 4]),
        ([5, 7, 11], [4, 6, 9], [1, 1, 2]),
        ([5, 8, 11], [4, 7, 10], [1, 1, 1]),
        ([5, 9, 13], [3, 5, 8], [2, 4, 5]),
        ([6, 9, 13], [3, 4, 6], [3, 5, 7]),
        ([5, 9, 14], [3, 4, 6], [3, 5, 8]),
        ([6, 10, 14], [3, 5, 7], [3, 5, 7]),
    ];
    let weights = vecs(&E8_VECTORS);
    printed
        .iter()
        .map(|&(l, p1, p2)| {
            let lhs = lv(l[0], l[1], l[2]);
            let a = lv(p1[0], p1[1], p1[2]);
            let b = lv(p2[0], p2[1], p2[2]);
            ReducibilityIdentity {
                lhs,
                parts: (a, b),
                sum_valid: a.add(&b) == lhs,
                lhs_in_weight_list: weights.contains(&lhs),
            }
        })
        .collect()
}

/// Dual-fan ray set each entry must produce.
pub fn expected_dual_rays(id: &SingularityId) -> Vec<LatticeVector> {
    let mut rays = vec![lv(1, 0, 0), lv(0, 1, 0), lv(0, 0, 1)];
    match id.family {
        Family::A => {
            let n = id.index as i64;
            rays.push(lv(n + 1, 0, 1));
            rays.push(lv(0, n + 1, 1));
        }
        Family::D => {
            let n = id.index as i64 / 2;
            rays.push(lv(2, 0, 1));
            rays.push(lv(2, 2 * n - 2, 2 * n - 1));
        }
        Family::E => match id.index {
            6 => rays.push(lv(3, 4, 6)),
            7 => {
                rays.push(lv(1, 2, 0));
                rays.push(lv(9, 6, 4));
            }
            _ => rays.push(lv(6, 10, 15)),
        },
    }
    rays.sort();
    rays
}

/// The compact-facet normal, when the entry has a two-dimensional compact
/// face (all entries except the A family).
pub fn compact_facet_normal(id: &SingularityId) -> Option<LatticeVector> {
    match id.family {
        Family::A => None,
        Family::D => {
            let n = id.index as i64 / 2;
            Some(lv(2, 2 * n - 2, 2 * n - 1))
        }
        Family::E => Some(match id.index {
            6 => lv(3, 4, 6),
            7 => lv(9, 6, 4),
            _ => lv(6, 10, 15),
        }),
    }
}

/// The fixed id set the verifier and acceptance suite run over.
pub fn standard_ids() -> Vec<SingularityId> {
    let mut ids: Vec<SingularityId> = (1..=10).map(|n| sing(&format!("A{n}"))).collect();
    ids.extend((2..=6).map(|n| sing(&format!("D{}", 2 * n))));
    ids.extend(["E6", "E7", "E8"].map(sing));
    ids
}

/// Weight-vector count formulas per family.
pub fn expected_ee_count(id: &SingularityId) -> usize {
    match id.family {
        Family::A => {
            let n = id.index as usize;
            n * (n + 1) / 2 + 2 * (n + 1)
        }
        Family::D => {
            let n = id.index as usize / 2;
            (n - 1) + (n - 1) + (2 * n - 2) + 2
        }
        Family::E => match id.index {
            6 => 6,
            7 => 14,
            _ => 21,
        },
    }
}
