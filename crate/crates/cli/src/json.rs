//! JSON shapes for fans, verification reports, jet systems and generator
//! listings. Field order and array ordering are fixed so emitted files are
//! byte-deterministic.

use serde::{Deserialize, Serialize};

use adetoric::catalog::FanVariant;
use adetoric::lattice::{Cone, Fan, FanSupport, LatticeVector};
use adetoric::subdivision::ResolutionFanResult;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FanJson {
    pub rays: Vec<[i64; 3]>,
    pub maximal_cones: Vec<Vec<usize>>,
    pub inserted: Vec<usize>,
    pub regular: bool,
    pub minimal: Option<bool>,
    pub discrepancies: Vec<String>,
}

impl FanJson {
    pub fn from_fan(
        fan: &Fan,
        inserted_rays: &[LatticeVector],
        regular: bool,
        minimal: Option<bool>,
        discrepancies: Vec<String>,
    ) -> Self {
        let rays: Vec<[i64; 3]> = fan.rays().iter().map(|r| r.0).collect();
        let index_of = |v: &LatticeVector| {
            fan.rays()
                .iter()
                .position(|r| r == v)
                .expect("ray index")
        };
        let mut maximal_cones: Vec<Vec<usize>> = fan
            .maximal_cones()
            .iter()
            .map(|c| {
                let mut idx: Vec<usize> = c.rays().iter().map(index_of).collect();
                idx.sort_unstable();
                idx
            })
            .collect();
        maximal_cones.sort();
        let mut inserted: Vec<usize> = inserted_rays.iter().map(index_of).collect();
        inserted.sort_unstable();
        FanJson { rays, maximal_cones, inserted, regular, minimal, discrepancies }
    }

    /// Reconstructs the fan; emitted fans always live in the octant.
    pub fn to_fan(&self) -> anyhow::Result<Fan> {
        let rays: Vec<LatticeVector> = self
            .rays
            .iter()
            .map(|&[x, y, z]| LatticeVector::checked(x, y, z))
            .collect::<Result<_, _>>()?;
        let cones: Vec<Cone> = self
            .maximal_cones
            .iter()
            .map(|idx| {
                let sel: Vec<LatticeVector> = idx.iter().map(|&i| rays[i]).collect();
                Cone::from_rays(&sel)
            })
            .collect::<Result<_, _>>()?;
        Ok(Fan::new(cones, FanSupport::Octant))
    }
}

pub fn variant_name(v: FanVariant) -> &'static str {
    match v {
        FanVariant::Minimal => "minimal",
        FanVariant::FullWeights => "full",
    }
}

pub fn resolution_json(res: &ResolutionFanResult, minimal: Option<bool>, notes: Vec<String>) -> FanJson {
    FanJson::from_fan(&res.fan, &res.inserted_rays, res.regular, minimal, notes)
}

#[derive(Clone, Debug, Serialize)]
pub struct SectionJson {
    pub pass: bool,
    pub detail: serde_json::Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct SectionsJson {
    pub dual_fan: SectionJson,
    pub resolution: SectionJson,
    pub regularity: SectionJson,
    pub minimality: SectionJson,
    pub jets: SectionJson,
    pub charts: SectionJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationJson {
    pub singularity: String,
    pub pass: bool,
    pub sections: SectionsJson,
    pub discrepancies: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct JetsJson {
    pub singularity: String,
    pub order: u32,
    pub equations: Vec<String>,
    pub components: Vec<ComponentJson>,
    pub table_pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentJson {
    pub vanishing: Vec<String>,
    pub center: String,
    pub weight: [i64; 3],
    pub weight_in_table: bool,
    pub persistence: i64,
    pub contained_at_persistence: bool,
    pub valuation_agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorsJson {
    pub rays: Vec<[i64; 3]>,
    pub generators: Vec<[i64; 3]>,
    /// Generators beyond the extremal rays.
    pub extra: Vec<[i64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessJson>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessJson {
    pub vector: [i64; 3],
    pub parts: [[i64; 3]; 2],
}
