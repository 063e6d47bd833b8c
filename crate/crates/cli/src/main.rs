//! Command-line verifier for the toric resolution engine.
//!
//! Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use adetoric::catalog::{
    e8_reducibility_table, entry, expected_dual_rays, standard_ids, FanVariant,
    SingularityId,
};
use adetoric::charts::{chart_map, factored_pullback, smoothness_sample};
use adetoric::hilbert::{is_irreducible, minimal_generators, minimality_verdict, RayStatus};
use adetoric::jets::{jet_system, verify_ec_table};
use adetoric::lattice::{Cone, LatticeVector};
use adetoric::newton::{dual_fan, parse_polynomial, Polynomial};
use adetoric::subdivision::{build_resolution_fan, regularity_report, validate_fan};

use adetoric_cli::json::{self, FanJson, JetsJson, SectionJson, SectionsJson, VerificationJson};
use adetoric_cli::svg;

#[derive(Parser)]
#[command(
    name = "adetoric",
    about = "Construct and verify minimal embedded toric resolutions of the rational double points",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Stage {
    Dual,
    Resolved,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Variant {
    Minimal,
    Full,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the JSON output to this path as well as stdout
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full verification pipeline for one singularity or all
    Verify {
        /// Singularity id (A<n>, D<2n>, E6, E7, E8) or "all"
        #[arg(long)]
        sing: String,
        /// Jet-order cap; defaults to twice the largest weight coordinate
        #[arg(long)]
        cap: Option<u32>,
        /// Primes for the finite-field smoothness scans
        #[arg(long, value_delimiter = ',', default_values_t = [5u64, 7, 11])]
        primes: Vec<u64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Newton dual fan of a catalog entry or an explicit polynomial
    Fan {
        #[arg(long)]
        sing: Option<String>,
        /// Polynomial in x, y, z (terms like "x*y - z^3")
        #[arg(long)]
        eq: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Build the recorded resolution fan
    Resolve {
        #[arg(long)]
        sing: String,
        #[arg(long, value_enum, default_value_t = Variant::Minimal)]
        variant: Variant,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Jet equations and component checks
    Jets {
        #[arg(long)]
        sing: String,
        /// Truncation order
        #[arg(short = 'm', long = "order")]
        order: u32,
        #[arg(long)]
        cap: Option<u32>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Minimal generator system of a cone
    Gsigma {
        /// Cone as semicolon-separated integer triples, e.g. "0,0,1;3,0,1;0,3,1"
        #[arg(long)]
        cone: String,
        /// Include a splitting witness for every reducible cone point
        #[arg(long)]
        witnesses: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Fan diagram on the trace plane
    Svg {
        #[arg(long)]
        sing: String,
        #[arg(long, value_enum)]
        stage: Stage,
        /// Output path
        #[arg(long)]
        svg: PathBuf,
        #[arg(long, value_enum, default_value_t = Variant::Minimal)]
        variant: Variant,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(pass) => {
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

// canonical form: alphabetical keys via Value, so byte output is stable
fn emit<T: serde::Serialize>(value: &T, out: &OutputArgs) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(&serde_json::to_value(value)?)?;
    println!("{text}");
    if let Some(path) = &out.json {
        fs::write(path, text.as_bytes())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn parse_sing(s: &str) -> anyhow::Result<SingularityId> {
    s.parse::<SingularityId>().map_err(|e| anyhow!("{e}"))
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Verify { sing: sel, cap, primes, out } => {
            let ids = if sel == "all" {
                standard_ids()
            } else {
                vec![parse_sing(&sel)?]
            };
            let mut reports = Vec::new();
            let mut all_pass = true;
            for id in &ids {
                let report = verify_one(id, cap, &primes)?;
                all_pass &= report.pass;
                reports.push(report);
            }
            let value = if reports.len() == 1 {
                serde_json::to_value(&reports[0])?
            } else {
                json!({ "pass": all_pass, "reports": reports })
            };
            emit(&value, &out)?;
            Ok(all_pass)
        }
        Command::Fan { sing: sel, eq, out } => {
            let f = polynomial_from_args(sel.as_deref(), eq.as_deref())?;
            let fan = dual_fan(&f).map_err(|e| anyhow!("{e}"))?;
            let regular = regularity_report(&fan)
                .map(|r| r.iter().all(|(_, d)| d.abs() == 1))
                .unwrap_or(false);
            let fj = FanJson::from_fan(&fan, &[], regular, None, Vec::new());
            emit(&serde_json::to_value(&fj)?, &out)?;
            Ok(true)
        }
        Command::Resolve { sing: sel, variant, out } => {
            let id = parse_sing(&sel)?;
            let e = entry(&id)?;
            let res = pick_variant(&id, variant)?;
            let gamma = dual_fan(&e.equation).map_err(|e| anyhow!("{e}"))?;
            let verdict = minimality_verdict(&res, &gamma).map_err(|e| anyhow!("{e}"))?;
            let fj = json::resolution_json(&res, Some(verdict.is_minimal), e.notes.clone());
            emit(&serde_json::to_value(&fj)?, &out)?;
            Ok(true)
        }
        Command::Jets { sing: sel, order, cap, out } => {
            let id = parse_sing(&sel)?;
            let e = entry(&id)?;
            let js = jet_system(&e.equation, order);
            let cap = cap.unwrap_or_else(|| default_cap(&id));
            let table = verify_ec_table(&id, cap)?;
            let jj = JetsJson {
                singularity: id.to_string(),
                order,
                equations: js.equations.iter().map(|p| p.to_string()).collect(),
                components: table
                    .rows
                    .iter()
                    .map(|r| json::ComponentJson {
                        vanishing: r.vanishing.clone(),
                        center: r.center.to_string(),
                        weight: r.weight.0,
                        weight_in_table: r.weight_in_table,
                        persistence: r.persistence,
                        contained_at_persistence: r.contained_at_persistence,
                        valuation_agrees: r.valuation_agrees,
                    })
                    .collect(),
                table_pass: table.pass(),
            };
            emit(&serde_json::to_value(&jj)?, &out)?;
            Ok(jj.table_pass)
        }
        Command::Gsigma { cone, witnesses, out } => {
            let c = parse_cone(&cone)?;
            let gens = minimal_generators(&c).map_err(|e| anyhow!("{e}"))?;
            let extra: Vec<[i64; 3]> = gens
                .iter()
                .filter(|g| !c.has_ray(g))
                .map(|g| g.0)
                .collect();
            let wit = if witnesses {
                Some(reducible_witnesses(&c, &gens))
            } else {
                None
            };
            let gj = json::GeneratorsJson {
                rays: c.rays().iter().map(|r| r.0).collect(),
                generators: gens.iter().map(|g| g.0).collect(),
                extra,
                witnesses: wit,
            };
            emit(&serde_json::to_value(&gj)?, &out)?;
            Ok(true)
        }
        Command::Svg { sing: sel, stage, svg: path, variant } => {
            let id = parse_sing(&sel)?;
            let e = entry(&id)?;
            let content = match stage {
                Stage::Dual => {
                    let fan = dual_fan(&e.equation).map_err(|e| anyhow!("{e}"))?;
                    svg::render(&fan, &[], &format!("{id} dual fan"))
                }
                Stage::Resolved => {
                    let res = pick_variant(&id, variant)?;
                    svg::render(
                        &res.fan,
                        &res.inserted_rays,
                        &format!("{id} resolution ({})", json::variant_name(res.variant)),
                    )
                }
            };
            fs::write(&path, content.as_bytes())
                .with_context(|| format!("writing {}", path.display()))?;
            Ok(true)
        }
    }
}

fn polynomial_from_args(sel: Option<&str>, eq: Option<&str>) -> anyhow::Result<Polynomial> {
    match (sel, eq) {
        (Some(s), None) => Ok(entry(&parse_sing(s)?)?.equation),
        (None, Some(text)) => parse_polynomial(text).map_err(|e| anyhow!("{e}")),
        _ => Err(anyhow!("exactly one of --sing and --eq is required")),
    }
}

fn pick_variant(
    id: &SingularityId,
    variant: Variant,
) -> anyhow::Result<adetoric::subdivision::ResolutionFanResult> {
    let results = build_resolution_fan(id)?;
    let want = match variant {
        Variant::Minimal => FanVariant::Minimal,
        Variant::Full => FanVariant::FullWeights,
    };
    results
        .into_iter()
        .find(|r| r.variant == want)
        .ok_or_else(|| anyhow!("{id} has no {variant:?} construction"))
}

fn parse_cone(text: &str) -> anyhow::Result<Cone> {
    let mut rays = Vec::new();
    for part in text.split(';') {
        let nums: Vec<i64> = part
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .with_context(|| format!("parsing ray '{part}'"))?;
        if nums.len() != 3 {
            return Err(anyhow!("ray '{part}' does not have three coordinates"));
        }
        rays.push(
            LatticeVector::checked(nums[0], nums[1], nums[2]).map_err(|e| anyhow!("{e}"))?,
        );
    }
    Cone::from_rays(&rays).map_err(|e| anyhow!("{e}"))
}

fn reducible_witnesses(c: &Cone, gens: &[LatticeVector]) -> Vec<json::WitnessJson> {
    let bound = |i: usize| c.rays().iter().map(|r| r.0[i]).max().unwrap_or(0);
    let mut out = Vec::new();
    for x in 0..=bound(0) {
        for y in 0..=bound(1) {
            for z in 0..=bound(2) {
                let v = LatticeVector::new(x, y, z);
                if v.is_zero() || gens.contains(&v) {
                    continue;
                }
                if let Ok(verdict) = is_irreducible(&v, c) {
                    if let Some((a, b)) = verdict.witness {
                        out.push(json::WitnessJson { vector: v.0, parts: [a.0, b.0] });
                    }
                }
            }
        }
    }
    out
}

fn default_cap(id: &SingularityId) -> u32 {
    let e = entry(id).expect("validated id");
    2 * e
        .ee_vectors
        .iter()
        .flat_map(|v| v.0.iter())
        .copied()
        .max()
        .unwrap_or(1) as u32
}

fn verify_one(
    id: &SingularityId,
    cap: Option<u32>,
    primes: &[u64],
) -> anyhow::Result<VerificationJson> {
    let e = entry(id)?;
    let gamma = dual_fan(&e.equation).map_err(|e| anyhow!("{e}"))?;

    // dual fan: validity plus the expected ray table
    let validity = validate_fan(&gamma);
    let mut rays = gamma.rays().to_vec();
    rays.sort();
    let dual_pass = validity.is_valid() && rays == expected_dual_rays(id);
    let dual_section = SectionJson {
        pass: dual_pass,
        detail: json!({
            "rays": rays.iter().map(|r| r.0).collect::<Vec<_>>(),
            "violations": validity.violations,
        }),
    };

    // resolution construction: a refinement realizing every weight vector
    let results = build_resolution_fan(id)?;
    let resolution_pass = results.iter().all(|r| r.refines_dual_fan)
        && results.iter().all(|r| {
            r.weight_vectors.iter().all(|v| {
                let p = adetoric::lattice::primitive(v).expect("nonzero weight").0;
                r.fan.has_ray(&p)
            })
        });
    let resolution_section = SectionJson {
        pass: resolution_pass,
        detail: json!(results
            .iter()
            .map(|r| {
                json!({
                    "variant": json::variant_name(r.variant),
                    "rays": r.fan.rays().len(),
                    "cones": r.fan.maximal_cones().len(),
                    "inserted": r.inserted_rays.iter().map(|v| v.0).collect::<Vec<_>>(),
                    "boundary_weight_rays":
                        r.boundary_weight_rays.iter().map(|v| v.0).collect::<Vec<_>>(),
                    "refines": r.refines_dual_fan,
                })
            })
            .collect::<Vec<_>>()),
    };

    // regularity
    let regularity_pass = results.iter().all(|r| r.regular);
    let regularity_section = SectionJson {
        pass: regularity_pass,
        detail: json!(results
            .iter()
            .map(|r| json!({
                "variant": json::variant_name(r.variant),
                "regular": r.regular,
            }))
            .collect::<Vec<_>>()),
    };

    // minimality: minimal fan must be a minimal resolution; the E8 full fan
    // must fail with the recorded six-vector reducible set
    let minimal_verdict = minimality_verdict(&results[0], &gamma).map_err(|e| anyhow!("{e}"))?;
    let mut minimality_pass = minimal_verdict.is_minimal;
    let mut minimality_detail = vec![json!({
        "variant": "minimal",
        "is_minimal": minimal_verdict.is_minimal,
    })];
    if let Some(full) = results.iter().find(|r| r.variant == FanVariant::FullWeights) {
        let full_verdict = minimality_verdict(full, &gamma).map_err(|e| anyhow!("{e}"))?;
        let reducible = full_verdict.reducible_vectors();
        minimality_pass &= !full_verdict.is_minimal && reducible.len() == 6;
        let witnesses: Vec<serde_json::Value> = full_verdict
            .per_ray
            .iter()
            .filter_map(|(v, s)| match s {
                RayStatus::Reducible { witness: (a, b) } => {
                    Some(json!({ "vector": v.0, "parts": [a.0, b.0] }))
                }
                _ => None,
            })
            .collect();
        let identities: Vec<serde_json::Value> = e8_reducibility_table()
            .iter()
            .map(|r| {
                json!({
                    "vector": r.lhs.0,
                    "parts": [r.parts.0.0, r.parts.1.0],
                    "sum_valid": r.sum_valid,
                    "in_weight_list": r.lhs_in_weight_list,
                })
            })
            .collect();
        minimality_detail.push(json!({
            "variant": "full",
            "is_minimal": full_verdict.is_minimal,
            "reducible": reducible.iter().map(|v| v.0).collect::<Vec<_>>(),
            "witnesses": witnesses,
            "printed_identities": identities,
        }));
    }
    let minimality_section = SectionJson {
        pass: minimality_pass,
        detail: json!(minimality_detail),
    };

    // jets
    let cap = cap.unwrap_or_else(|| default_cap(id));
    let table = verify_ec_table(id, cap)?;
    let jets_section = SectionJson {
        pass: table.pass(),
        detail: json!({
            "cap": cap,
            "components": table.rows.len(),
            "mismatches": table.mismatches,
        }),
    };

    // charts: exact factorization plus sampled smoothness on every chart
    let mut charts_pass = true;
    let mut chart_count = 0usize;
    let mut witness_count = 0usize;
    for res in &results {
        for cone in res.fan.maximal_cones() {
            chart_count += 1;
            let cm = chart_map(cone).map_err(|e| anyhow!("{e}"))?;
            match factored_pullback(&e.equation, &cm) {
                Ok(fp) => {
                    let rep = smoothness_sample(&fp, primes).map_err(|e| anyhow!("{e}"))?;
                    witness_count += rep.witnesses.len();
                    charts_pass &= rep.clean();
                }
                Err(_) => charts_pass = false,
            }
        }
    }
    let charts_section = SectionJson {
        pass: charts_pass,
        detail: json!({
            "charts": chart_count,
            "primes": primes,
            "witnesses": witness_count,
        }),
    };

    let pass = dual_pass
        && resolution_pass
        && regularity_pass
        && minimality_pass
        && table.pass()
        && charts_pass;
    Ok(VerificationJson {
        singularity: id.to_string(),
        pass,
        sections: SectionsJson {
            dual_fan: dual_section,
            resolution: resolution_section,
            regularity: regularity_section,
            minimality: minimality_section,
            jets: jets_section,
            charts: charts_section,
        },
        discrepancies: e.notes.clone(),
    })
}
