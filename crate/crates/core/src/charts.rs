//! Toric chart monomial maps, exceptional factorization of pullbacks, and
//! sampled smoothness verification on the exceptional locus.

use crate::error::ChartError;
use crate::lattice::{det3, is_regular_cone, Cone, LatticeVector};
use crate::newton::{nu_monomial, Polynomial};

pub const CHART_VARS: [&str; 3] = ["q", "r", "s"];

/// The monomial substitution of a regular full-dimensional cone: each
/// original coordinate pulls back to a monomial whose exponents are read off
/// the ray matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartMap {
    pub cone: Cone,
    /// Row i is the i-th ray (in the cone's normalized order).
    pub matrix: [[i64; 3]; 3],
}

pub fn chart_map(c: &Cone) -> Result<ChartMap, ChartError> {
    if c.dim() != 3 || !is_regular_cone(c) {
        return Err(ChartError::NotRegular);
    }
    let rays = c.rays();
    let matrix = [rays[0].0, rays[1].0, rays[2].0];
    Ok(ChartMap { cone: c.clone(), matrix })
}

impl ChartMap {
    /// Pullback exponent of the monomial with the given exponent vector.
    fn transform(&self, e: &[u16]) -> [i128; 3] {
        let mut out = [0i128; 3];
        for (i, row) in self.matrix.iter().enumerate() {
            out[i] = (0..3).map(|j| row[j] as i128 * e[j] as i128).sum();
        }
        out
    }

    /// The chart monomials for x, y, z as display strings.
    pub fn coordinate_images(&self) -> [String; 3] {
        let mut out = [String::new(), String::new(), String::new()];
        for (j, slot) in out.iter_mut().enumerate() {
            let mut factors = Vec::new();
            for (i, var) in CHART_VARS.iter().enumerate() {
                match self.matrix[i][j] {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    e => factors.push(format!("{var}^{e}")),
                }
            }
            *slot = if factors.is_empty() { "1".to_string() } else { factors.join("*") };
        }
        out
    }
}

/// A pullback split into its maximal exceptional monomial factor and the
/// strict transform.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredPullback {
    /// Order of vanishing along each chart divisor; equals the monomial
    /// valuation of the input at the corresponding ray.
    pub exceptional: [u64; 3],
    pub strict: Polynomial,
}

/// Pulls `f` back along the chart and divides out the largest monomial. The
/// exceptional exponents are cross-checked against the ray valuations.
pub fn factored_pullback(f: &Polynomial, cm: &ChartMap) -> Result<FactoredPullback, ChartError> {
    if f.is_zero() {
        return Err(ChartError::ZeroPolynomial);
    }
    let images: Vec<([i128; 3], i128)> = f
        .terms()
        .iter()
        .map(|(m, c)| (cm.transform(&m.0), *c))
        .collect();
    let mut mins = [i128::MAX; 3];
    for (e, _) in &images {
        for (m, v) in mins.iter_mut().zip(e) {
            *m = (*m).min(*v);
        }
    }
    let vars: Vec<String> = CHART_VARS.iter().map(|s| s.to_string()).collect();
    let mut strict = Polynomial::zero(vars);
    for (e, c) in &images {
        let shifted: Vec<u16> = (0..3)
            .map(|i| u16::try_from(e[i] - mins[i]).expect("pullback exponent fits"))
            .collect();
        strict.add_term(shifted, *c);
    }
    for (row, min) in cm.matrix.iter().zip(&mins) {
        let ray = LatticeVector(*row);
        let nu = nu_monomial(&ray, f).map_err(|_| ChartError::ZeroPolynomial)?;
        if nu != *min {
            return Err(ChartError::ValuationMismatch(ray.to_string()));
        }
    }
    Ok(FactoredPullback {
        exceptional: [mins[0] as u64, mins[1] as u64, mins[2] as u64],
        strict,
    })
}

/// A smoothness-failure witness: a point on the exceptional locus where the
/// strict transform and all three partials vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothnessReport {
    pub witnesses: Vec<(u64, [u64; 3])>,
    pub points_scanned: usize,
    pub evidence_only: bool,
}

impl SmoothnessReport {
    pub fn clean(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Scans every point of each prime field with at least one zero coordinate.
pub fn smoothness_sample(
    fp: &FactoredPullback,
    primes: &[u64],
) -> Result<SmoothnessReport, ChartError> {
    if let Some(&p) = primes.iter().find(|&&p| p < 3) {
        return Err(ChartError::PrimeTooSmall(p));
    }
    if let Some(&p) = primes.iter().find(|&&p| p >= 1 << 16) {
        return Err(ChartError::PrimeTooLarge(p));
    }
    let partials: Vec<Polynomial> = (0..3).map(|i| fp.strict.derivative(i)).collect();
    let mut witnesses = Vec::new();
    let mut points_scanned = 0usize;
    for &p in primes {
        for q in 0..p {
            for r in 0..p {
                for s in 0..p {
                    if q != 0 && r != 0 && s != 0 {
                        continue;
                    }
                    points_scanned += 1;
                    let pt = [q, r, s];
                    if fp.strict.eval_mod(&pt, p) == 0
                        && partials.iter().all(|d| d.eval_mod(&pt, p) == 0)
                    {
                        witnesses.push((p, pt));
                    }
                }
            }
        }
    }
    Ok(SmoothnessReport { witnesses, points_scanned, evidence_only: true })
}

/// Determinant of the chart's ray matrix, for tests.
pub fn chart_det(cm: &ChartMap) -> i128 {
    det3(
        &LatticeVector(cm.matrix[0]),
        &LatticeVector(cm.matrix[1]),
        &LatticeVector(cm.matrix[2]),
    )
}
