//! Jet-scheme equation generation, coordinate-subspace component checks,
//! weight vectors, and verification of the component tables.
//!
//! The defining equation is expanded through truncated power series
//! substitution; the coefficient of each power of the deformation parameter
//! is one generator of the jet ideal.

use std::collections::BTreeSet;
use std::fmt;

use crate::catalog::{self, SingularityId};
use crate::error::{CatalogError, JetError};
use crate::lattice::LatticeVector;
use crate::newton::{nu_monomial, Monomial, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarBase {
    X,
    Y,
    Z,
}

impl VarBase {
    pub fn letter(&self) -> char {
        match self {
            VarBase::X => 'x',
            VarBase::Y => 'y',
            VarBase::Z => 'z',
        }
    }

    fn index(&self) -> usize {
        match self {
            VarBase::X => 0,
            VarBase::Y => 1,
            VarBase::Z => 2,
        }
    }
}

/// One truncated-series coefficient variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JetVariable {
    pub base: VarBase,
    pub level: u32,
}

impl fmt::Display for JetVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.base.letter(), self.level)
    }
}

/// Generators of the jet ideal up to the truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetSystem {
    pub order: u32,
    pub equations: Vec<Polynomial>,
}

/// Ring variables x_0..x_m, y_0..y_m, z_0..z_m, in that block order.
pub fn jet_vars(m: u32) -> Vec<String> {
    let mut vars = Vec::with_capacity(3 * (m as usize + 1));
    for base in ['x', 'y', 'z'] {
        for i in 0..=m {
            vars.push(format!("{base}_{i}"));
        }
    }
    vars
}

fn jet_var_index(base: VarBase, level: u32, m: u32) -> usize {
    base.index() * (m as usize + 1) + level as usize
}

/// Truncated power series with polynomial coefficients, indexed by degree in
/// the deformation parameter.
struct Series {
    coeffs: Vec<Polynomial>,
}

impl Series {
    fn zero(vars: &[String], m: u32) -> Self {
        Series {
            coeffs: (0..=m).map(|_| Polynomial::zero(vars.to_vec())).collect(),
        }
    }

    fn one(vars: &[String], m: u32) -> Self {
        let mut s = Series::zero(vars, m);
        s.coeffs[0].add_term(vec![0; vars.len()], 1);
        s
    }

    fn variable(vars: &[String], m: u32, base: VarBase, skip_below: u32) -> Self {
        let mut s = Series::zero(vars, m);
        for level in skip_below..=m {
            let mut e = vec![0u16; vars.len()];
            e[jet_var_index(base, level, m)] = 1;
            s.coeffs[level as usize].add_term(e, 1);
        }
        s
    }

    fn mul(&self, other: &Series, m: u32) -> Series {
        let vars = self.coeffs[0].vars().to_vec();
        let mut out = Series::zero(&vars, m);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > m as usize {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].add(&a.mul(b));
            }
        }
        out
    }

    fn pow(&self, e: u16, vars: &[String], m: u32) -> Series {
        let mut out = Series::one(vars, m);
        for _ in 0..e {
            out = out.mul(self, m);
        }
        out
    }

    fn add_scaled(&mut self, other: &Series, c: i128, vars: &[String]) {
        for (dst, src) in self.coeffs.iter_mut().zip(&other.coeffs) {
            let mut scaled = Polynomial::zero(vars.to_vec());
            for (mon, coef) in src.terms() {
                scaled.add_term(mon.0.clone(), coef * c);
            }
            *dst = dst.add(&scaled);
        }
    }
}

fn expand(f: &Polynomial, m: u32, skip: [u32; 3]) -> Vec<Polynomial> {
    assert_eq!(f.vars().len(), 3, "jet expansion needs a three-variable input");
    let vars = jet_vars(m);
    let x = Series::variable(&vars, m, VarBase::X, skip[0]);
    let y = Series::variable(&vars, m, VarBase::Y, skip[1]);
    let z = Series::variable(&vars, m, VarBase::Z, skip[2]);
    let mut total = Series::zero(&vars, m);
    for (mon, c) in f.terms() {
        let term = x
            .pow(mon.0[0], &vars, m)
            .mul(&y.pow(mon.0[1], &vars, m), m)
            .mul(&z.pow(mon.0[2], &vars, m), m);
        total.add_scaled(&term, *c, &vars);
    }
    total.coeffs
}

/// Expands `f` along truncated series and splits by degree in the parameter.
pub fn jet_system(f: &Polynomial, m: u32) -> JetSystem {
    JetSystem { order: m, equations: expand(f, m, [0, 0, 0]) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Center {
    Origin,
    XAxis,
    YAxis,
    ZAxis,
}

impl fmt::Display for Center {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Center::Origin => "origin",
            Center::XAxis => "x-axis",
            Center::YAxis => "y-axis",
            Center::ZAxis => "z-axis",
        };
        write!(f, "{s}")
    }
}

/// A coordinate-subspace jet component: the vanishing set of a collection of
/// jet variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSpec {
    vanishing: BTreeSet<JetVariable>,
    pub centered_at: Center,
}

impl ComponentSpec {
    /// Builds the component vanishing on the first `a1` x-levels, `a2`
    /// y-levels and `a3` z-levels.
    pub fn from_prefixes(a1: u32, a2: u32, a3: u32) -> Result<Self, JetError> {
        let mut vanishing = BTreeSet::new();
        for (base, count) in [(VarBase::X, a1), (VarBase::Y, a2), (VarBase::Z, a3)] {
            for level in 0..count {
                vanishing.insert(JetVariable { base, level });
            }
        }
        Self::from_set(vanishing)
    }

    pub fn from_set(vanishing: BTreeSet<JetVariable>) -> Result<Self, JetError> {
        let has0 = |b: VarBase| vanishing.contains(&JetVariable { base: b, level: 0 });
        let centered_at = match (has0(VarBase::X), has0(VarBase::Y), has0(VarBase::Z)) {
            (true, true, true) => Center::Origin,
            (false, true, true) => Center::XAxis,
            (true, false, true) => Center::YAxis,
            (true, true, false) => Center::ZAxis,
            _ => return Err(JetError::BadCenter),
        };
        Ok(ComponentSpec { vanishing, centered_at })
    }

    pub fn vanishing(&self) -> &BTreeSet<JetVariable> {
        &self.vanishing
    }

    pub fn vanishing_names(&self) -> Vec<String> {
        self.vanishing.iter().map(|v| v.to_string()).collect()
    }

    pub fn codim(&self) -> usize {
        self.vanishing.len()
    }

    pub fn max_level(&self) -> u32 {
        self.vanishing.iter().map(|v| v.level).max().unwrap_or(0)
    }

    /// Number of vanishing levels per base, when the set is a prefix in each.
    fn prefix_counts(&self) -> Result<[u32; 3], JetError> {
        let mut counts = [0u32; 3];
        for base in [VarBase::X, VarBase::Y, VarBase::Z] {
            let levels: Vec<u32> = self
                .vanishing
                .iter()
                .filter(|v| v.base == base)
                .map(|v| v.level)
                .collect();
            for (want, &got) in levels.iter().enumerate() {
                if got != want as u32 {
                    return Err(JetError::NonPrefixComponent(
                        JetVariable { base, level: got }.to_string(),
                    ));
                }
            }
            counts[base.index()] = levels.len() as u32;
        }
        Ok(counts)
    }

    /// True iff this component's vanishing set is a proper subset of the
    /// other's.
    pub fn proper_subset_of(&self, other: &ComponentSpec) -> bool {
        self.vanishing.len() < other.vanishing.len()
            && self.vanishing.is_subset(&other.vanishing)
    }
}

/// The vector of minimal surviving levels per coordinate. Errors on
/// non-prefix components, which are outside the monomial-valuation regime.
pub fn weight_vector(spec: &ComponentSpec) -> Result<LatticeVector, JetError> {
    let c = spec.prefix_counts()?;
    Ok(LatticeVector::new(c[0] as i64, c[1] as i64, c[2] as i64))
}

/// First parameter degree at which the expansion survives the substitution,
/// or `None` if everything vanishes up to `cap`.
fn first_surviving_order(spec: &ComponentSpec, f: &Polynomial, cap: u32) -> Option<u32> {
    let c = spec
        .prefix_counts()
        .expect("containment checks need prefix components");
    let coeffs = expand(f, cap, c);
    coeffs
        .iter()
        .position(|p| !p.is_zero())
        .map(|i| i as u32)
}

/// True iff every jet equation up to order `m` vanishes after substituting
/// zero for the component's variables.
pub fn component_contained(spec: &ComponentSpec, f: &Polynomial, m: u32) -> bool {
    first_surviving_order(spec, f, m).is_none()
}

/// Largest order up to `cap` at which the component stays inside the jet
/// scheme, or -1 if it already fails at order zero.
pub fn persistence_level(spec: &ComponentSpec, f: &Polynomial, cap: u32) -> i64 {
    match first_surviving_order(spec, f, cap) {
        None => cap as i64,
        Some(0) => -1,
        Some(k) => k as i64 - 1,
    }
}

/// Verification row for one catalog component.
#[derive(Clone, Debug)]
pub struct EcRow {
    pub vanishing: Vec<String>,
    pub center: Center,
    pub weight: LatticeVector,
    pub weight_in_table: bool,
    pub persistence: i64,
    pub contained_at_persistence: bool,
    /// The independent valuation route: the expansion must first survive at
    /// exactly the weighted order of the equation.
    pub valuation_agrees: bool,
    /// Either the component is minimal or it properly contains an earlier
    /// component of the same table (codimension then increases strictly).
    pub chained: bool,
}

#[derive(Clone, Debug)]
pub struct EcTableReport {
    pub singularity: SingularityId,
    pub cap: u32,
    pub rows: Vec<EcRow>,
    pub mismatches: Vec<String>,
}

impl EcTableReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks every catalog component: weight vectors against the table,
/// containment at the persistence level, agreement with the monomial
/// valuation, and codimension growth along containment chains.
pub fn verify_ec_table(id: &SingularityId, cap: u32) -> Result<EcTableReport, CatalogError> {
    let entry = catalog::entry(id)?;
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    let min_codim = entry
        .ec_specs
        .iter()
        .map(|s| s.codim())
        .min()
        .unwrap_or(0);
    for spec in &entry.ec_specs {
        let weight = match weight_vector(spec) {
            Ok(w) => w,
            Err(e) => {
                mismatches.push(format!("{e}"));
                continue;
            }
        };
        let weight_in_table = entry.ee_vectors.contains(&weight);
        let persistence = persistence_level(spec, &entry.equation, cap);
        let contained_at_persistence =
            persistence >= 0 && component_contained(spec, &entry.equation, persistence as u32);
        let nu = nu_monomial(&weight, &entry.equation).expect("weights are nonnegative");
        let valuation_agrees = persistence + 1 == nu as i64;
        let chained = spec.codim() == min_codim
            || entry
                .ec_specs
                .iter()
                .any(|other| other.proper_subset_of(spec));
        let row = EcRow {
            vanishing: spec.vanishing_names(),
            center: spec.centered_at,
            weight,
            weight_in_table,
            persistence,
            contained_at_persistence,
            valuation_agrees,
            chained,
        };
        if !weight_in_table {
            mismatches.push(format!("{weight} missing from the weight table"));
        }
        if !contained_at_persistence {
            mismatches.push(format!("component {:?} not contained", row.vanishing));
        }
        if !valuation_agrees {
            mismatches.push(format!(
                "component {:?}: persistence {} disagrees with valuation {}",
                row.vanishing, persistence, nu
            ));
        }
        if !chained {
            mismatches.push(format!("component {:?} has no predecessor", row.vanishing));
        }
        rows.push(row);
    }
    Ok(EcTableReport { singularity: *id, cap, rows, mismatches })
}

/// Weighted degree of a jet monomial when each level-j variable weighs j.
pub fn monomial_weight(m: &Monomial, order: u32) -> u64 {
    let stride = order as usize + 1;
    m.0.iter()
        .enumerate()
        .map(|(i, &e)| (i % stride) as u64 * e as u64)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::sing;
    use crate::newton::parse_polynomial;

    fn lv(x: i64, y: i64, z: i64) -> LatticeVector {
        LatticeVector::new(x, y, z)
    }

    fn a1() -> Polynomial {
        parse_polynomial("x*y-z^2").unwrap()
    }

    fn e6() -> Polynomial {
        parse_polynomial("z^2+y^3+x^4").unwrap()
    }

    #[test]
    fn jet_system_a1() {
        let js = jet_system(&a1(), 1);
        assert_eq!(js.equations.len(), 2);
        assert_eq!(js.equations[0].to_string(), "x_0*y_0 - z_0^2");
        assert_eq!(js.equations[1].to_string(), "x_0*y_1 + x_1*y_0 - 2*z_0*z_1");
    }

    #[test]
    fn jet_system_e6_order_two() {
        let js = jet_system(&e6(), 2);
        let expect = parse_terms_e6_f2();
        assert_eq!(js.equations[2], expect);
    }

    fn parse_terms_e6_f2() -> Polynomial {
        // 2 z0 z2 + z1^2 + 3 y0^2 y2 + 3 y0 y1^2 + 4 x0^3 x2 + 6 x0^2 x1^2
        let vars = jet_vars(2);
        let idx = |b: VarBase, l: u32| jet_var_index(b, l, 2);
        let mut p = Polynomial::zero(vars.clone());
        let mut term = |entries: &[(VarBase, u32, u16)], c: i128| {
            let mut e = vec![0u16; vars.len()];
            for &(b, l, k) in entries {
                e[idx(b, l)] += k;
            }
            p.add_term(e, c);
        };
        term(&[(VarBase::Z, 0, 1), (VarBase::Z, 2, 1)], 2);
        term(&[(VarBase::Z, 1, 2)], 1);
        term(&[(VarBase::Y, 0, 2), (VarBase::Y, 2, 1)], 3);
        term(&[(VarBase::Y, 0, 1), (VarBase::Y, 1, 2)], 3);
        term(&[(VarBase::X, 0, 3), (VarBase::X, 2, 1)], 4);
        term(&[(VarBase::X, 0, 2), (VarBase::X, 1, 2)], 6);
        p
    }

    #[test]
    fn jet_system_order_zero_is_the_equation() {
        let js = jet_system(&e6(), 0);
        assert_eq!(js.equations.len(), 1);
        assert_eq!(js.equations[0].to_string(), "x_0^4 + y_0^3 + z_0^2");
    }

    #[test]
    fn containment_examples() {
        let spec = ComponentSpec::from_prefixes(1, 1, 2).unwrap();
        assert!(component_contained(&spec, &e6(), 2));
        assert!(!component_contained(&spec, &e6(), 3));
        let origin = ComponentSpec::from_prefixes(1, 1, 1).unwrap();
        assert!(component_contained(&origin, &a1(), 0));
    }

    #[test]
    fn persistence_examples() {
        let spec = ComponentSpec::from_prefixes(1, 1, 2).unwrap();
        assert_eq!(persistence_level(&spec, &e6(), 20), 2);
        let origin = ComponentSpec::from_prefixes(1, 1, 1).unwrap();
        assert_eq!(persistence_level(&origin, &a1(), 20), 1);
        // vanishing everything up to the cap keeps all equations at zero
        let all = ComponentSpec::from_prefixes(5, 5, 5).unwrap();
        assert_eq!(persistence_level(&all, &a1(), 4), 4);
    }

    #[test]
    fn weight_vector_examples() {
        let w1 = ComponentSpec::from_prefixes(1, 1, 2).unwrap();
        assert_eq!(weight_vector(&w1).unwrap(), lv(1, 1, 2));
        let w0 = ComponentSpec::from_prefixes(1, 0, 1).unwrap();
        assert_eq!(weight_vector(&w0).unwrap(), lv(1, 0, 1));
        assert_eq!(w0.centered_at, Center::YAxis);
        // the A-family origin components
        let spec = ComponentSpec::from_prefixes(2, 3, 1).unwrap();
        assert_eq!(weight_vector(&spec).unwrap(), lv(2, 3, 1));
    }

    #[test]
    fn non_prefix_components_are_rejected() {
        let mut s = BTreeSet::new();
        s.insert(JetVariable { base: VarBase::X, level: 0 });
        s.insert(JetVariable { base: VarBase::Y, level: 0 });
        s.insert(JetVariable { base: VarBase::Z, level: 0 });
        s.insert(JetVariable { base: VarBase::Z, level: 2 });
        let spec = ComponentSpec::from_set(s).unwrap();
        assert!(matches!(
            weight_vector(&spec),
            Err(JetError::NonPrefixComponent(_))
        ));
    }

    #[test]
    fn bad_center_is_rejected() {
        let mut s = BTreeSet::new();
        s.insert(JetVariable { base: VarBase::X, level: 0 });
        assert!(matches!(ComponentSpec::from_set(s), Err(JetError::BadCenter)));
    }

    #[test]
    fn verify_ec_small_tables() {
        for (id, n_specs) in [("E6", 6), ("D4", 6), ("A2", 9)] {
            let rep = verify_ec_table(&sing(id), 24).unwrap();
            assert!(rep.pass(), "{id}: {:?}", rep.mismatches);
            assert_eq!(rep.rows.len(), n_specs);
        }
    }

    #[test]
    fn truncation_consistency() {
        for m in 1..=6u32 {
            let long = jet_system(&e6(), m);
            let short = jet_system(&e6(), m - 1);
            for i in 0..m as usize {
                assert_eq!(long.equations[i].to_string(), short.equations[i].to_string());
            }
        }
    }

    #[test]
    fn weighted_homogeneity_to_order_ten() {
        for s in ["x*y-z^2", "x*y-z^4", "z^2-x*y^2-x^3", "z^2+y^3+x^4", "x^2+y^3+y*z^3", "z^2+y^3+x^5"] {
            let f = parse_polynomial(s).unwrap();
            let js = jet_system(&f, 10);
            for (i, eq) in js.equations.iter().enumerate() {
                for m in eq.terms().keys() {
                    assert_eq!(monomial_weight(m, 10), i as u64, "{s} F_{i}");
                }
            }
        }
    }
}
