//! Exact multivariate polynomials, Newton polyhedra at the origin, dual
//! fans, face restrictions and monomial valuations.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{NewtonError, ParseError};
use crate::lattice::{
    primitive, Cone, Fan, FanSupport, LatticeVector, E1, E2, E3,
};

/// Exponent vector with graded-lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with exact integer coefficients over named variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, i128>,
}

fn ck_mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("polynomial coefficient overflow")
}

fn ck_add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("polynomial coefficient overflow")
}

impl Polynomial {
    pub fn zero(vars: Vec<String>) -> Self {
        Polynomial { vars, terms: BTreeMap::new() }
    }

    /// Standard three-variable ring used by the catalog equations.
    pub fn xyz() -> Vec<String> {
        vec!["x".into(), "y".into(), "z".into()]
    }

    pub fn from_terms(vars: Vec<String>, terms: &[(Vec<u16>, i128)]) -> Self {
        let mut p = Polynomial::zero(vars);
        for (e, c) in terms {
            p.add_term(e.clone(), *c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, i128> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, exps: Vec<u16>, coeff: i128) {
        assert_eq!(exps.len(), self.vars.len(), "exponent arity mismatch");
        if coeff == 0 {
            return;
        }
        let m = Monomial(exps);
        let c = ck_add(*self.terms.get(&m).unwrap_or(&0), coeff);
        if c == 0 {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, c);
        }
    }

    pub fn add(&self, o: &Polynomial) -> Polynomial {
        assert_eq!(self.vars, o.vars);
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.0.clone(), *c);
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -*c;
        }
        out
    }

    pub fn sub(&self, o: &Polynomial) -> Polynomial {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Polynomial) -> Polynomial {
        assert_eq!(self.vars, o.vars);
        let mut out = Polynomial::zero(self.vars.clone());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let e: Vec<u16> = m1
                    .0
                    .iter()
                    .zip(&m2.0)
                    .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                    .collect();
                out.add_term(e, ck_mul(*c1, *c2));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::from_terms(
            self.vars.clone(),
            &[(vec![0; self.vars.len()], 1)],
        );
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e > 0 {
                let mut exps = m.0.clone();
                exps[var] = e - 1;
                out.add_term(exps, ck_mul(*c, e as i128));
            }
        }
        out
    }

    /// Drops every term divisible by one of the given variables.
    pub fn set_vars_to_zero(&self, vars: &BTreeSet<usize>) -> Polynomial {
        let mut out = Polynomial::zero(self.vars.clone());
        for (m, c) in &self.terms {
            if vars.iter().all(|&v| m.0[v] == 0) {
                out.add_term(m.0.clone(), *c);
            }
        }
        out
    }

    pub fn constant_term(&self) -> i128 {
        let z = Monomial(vec![0; self.vars.len()]);
        *self.terms.get(&z).unwrap_or(&0)
    }

    pub fn eval_mod(&self, point: &[u64], p: u64) -> u64 {
        let mut acc: u64 = 0;
        for (m, c) in &self.terms {
            let mut t = c.rem_euclid(p as i128) as u64;
            for (i, &e) in m.0.iter().enumerate() {
                t = t * pow_mod(point[i] % p, e as u64, p) % p;
            }
            acc = (acc + t) % p;
        }
        acc
    }

    /// Exponent vectors of the support, for three-variable polynomials.
    pub fn support3(&self) -> Vec<LatticeVector> {
        assert_eq!(self.vars.len(), 3);
        self.terms
            .keys()
            .map(|m| LatticeVector::new(m.0[0] as i64, m.0[1] as i64, m.0[2] as i64))
            .collect()
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // graded-lexicographic, leading term first
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = *c < 0;
            let abs = c.unsigned_abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (v, &e) in self.vars.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Parses the CLI polynomial grammar over the variables x, y, z.
pub fn parse_polynomial(text: &str) -> Result<Polynomial, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0usize;
    let mut poly = Polynomial::zero(Polynomial::xyz());

    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };

    fn read_int(chars: &[char], pos: &mut usize) -> Option<i128> {
        let start = *pos;
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if *pos == start {
            return None;
        }
        chars[start..*pos].iter().collect::<String>().parse().ok()
    }

    skip_ws(&mut pos);
    let mut first = true;
    while pos < chars.len() {
        let mut sign: i128 = 1;
        skip_ws(&mut pos);
        if pos >= chars.len() {
            break;
        }
        match chars[pos] {
            '+' => {
                pos += 1;
            }
            '-' => {
                sign = -1;
                pos += 1;
            }
            _ if first => {}
            c => {
                return Err(ParseError::Syntax(pos, format!("expected '+' or '-', found '{c}'")));
            }
        }
        first = false;
        skip_ws(&mut pos);
        if pos >= chars.len() {
            return Err(ParseError::Syntax(pos, "dangling sign".into()));
        }
        let mut coeff: i128 = sign;
        let mut exps = [0u16; 3];
        let mut saw_unit = false;
        if let Some(n) = read_int(&chars, &mut pos) {
            coeff *= n;
            saw_unit = true;
        }
        loop {
            skip_ws(&mut pos);
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
                skip_ws(&mut pos);
            }
            if pos >= chars.len() {
                break;
            }
            let c = chars[pos];
            let var = match c {
                'x' => 0,
                'y' => 1,
                'z' => 2,
                '+' | '-' => break,
                c if c.is_alphabetic() => return Err(ParseError::UnknownVariable(c, pos)),
                _ => {
                    return Err(ParseError::Syntax(pos, format!("unexpected character '{c}'")));
                }
            };
            pos += 1;
            saw_unit = true;
            let mut e: u16 = 1;
            skip_ws(&mut pos);
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                skip_ws(&mut pos);
                if pos < chars.len() && chars[pos] == '-' {
                    return Err(ParseError::NegativeExponent(pos));
                }
                let at = pos;
                match read_int(&chars, &mut pos) {
                    Some(n) if n > 0 && n <= u16::MAX as i128 => e = n as u16,
                    Some(_) => {
                        return Err(ParseError::Syntax(at, "exponent out of range".into()));
                    }
                    None => return Err(ParseError::Syntax(at, "expected exponent".into())),
                }
            }
            exps[var] = exps[var]
                .checked_add(e)
                .ok_or(ParseError::Syntax(pos, "exponent out of range".into()))?;
        }
        if !saw_unit {
            return Err(ParseError::Syntax(pos, "empty term".into()));
        }
        poly.add_term(exps.to_vec(), coeff);
        skip_ws(&mut pos);
    }
    Ok(poly)
}

/// Support, vertices and compact faces of the Newton polyhedron at the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonData {
    pub support: Vec<LatticeVector>,
    pub vertices: Vec<LatticeVector>,
    /// Each compact face as (support subset, dimension).
    pub compact_faces: Vec<(Vec<LatticeVector>, u8)>,
}

/// Distance and dual face of a covector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CovectorReport {
    pub covector: LatticeVector,
    pub distance: i128,
    pub face_support: Vec<LatticeVector>,
}

pub fn covector_report(l: &LatticeVector, f: &Polynomial) -> Result<CovectorReport, NewtonError> {
    if !l.is_nonnegative() {
        return Err(NewtonError::NegativeCovector);
    }
    if f.is_zero() {
        return Err(NewtonError::ZeroPolynomial);
    }
    let support = f.support3();
    let distance = support.iter().map(|p| l.dot(p)).min().expect("nonempty support");
    let face_support = support.into_iter().filter(|p| l.dot(p) == distance).collect();
    Ok(CovectorReport { covector: *l, distance, face_support })
}

/// The sum of the terms of `f` supported on the dual face of `l`.
pub fn face_restriction(l: &LatticeVector, f: &Polynomial) -> Result<Polynomial, NewtonError> {
    let report = covector_report(l, f)?;
    let face: BTreeSet<Vec<u16>> = report
        .face_support
        .iter()
        .map(|v| vec![v.0[0] as u16, v.0[1] as u16, v.0[2] as u16])
        .collect();
    let mut out = Polynomial::zero(f.vars().to_vec());
    for (m, c) in f.terms() {
        if face.contains(&m.0) {
            out.add_term(m.0.clone(), *c);
        }
    }
    Ok(out)
}

/// Minimum `a`-weighted degree over the support of `h`.
pub fn nu_monomial(a: &LatticeVector, h: &Polynomial) -> Result<i128, NewtonError> {
    if !a.is_nonnegative() {
        return Err(NewtonError::NegativeCovector);
    }
    if h.is_zero() {
        return Err(NewtonError::ZeroPolynomial);
    }
    Ok(h.support3().iter().map(|p| a.dot(p)).min().expect("nonempty"))
}

/// Primitive inward normals of the facets of the Newton polyhedron.
fn facet_normals_of_polyhedron(support: &[LatticeVector]) -> Vec<LatticeVector> {
    let mut cands: BTreeSet<LatticeVector> = [E1, E2, E3].into_iter().collect();
    let axes = [E1, E2, E3];
    for i in 0..support.len() {
        for j in i + 1..support.len() {
            let d = support[i].sub(&support[j]);
            for e in &axes {
                let c = d.cross(e);
                for s in [c, c.neg()] {
                    if !s.is_zero() && s.is_nonnegative() {
                        cands.insert(primitive(&s).expect("nonzero").0);
                    }
                }
            }
            for k in j + 1..support.len() {
                let c = support[j].sub(&support[i]).cross(&support[k].sub(&support[i]));
                for s in [c, c.neg()] {
                    if !s.is_zero() && s.is_nonnegative() {
                        cands.insert(primitive(&s).expect("nonzero").0);
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for l in cands {
        if face_dim(support, &l) == 2 {
            out.push(l);
        }
    }
    out
}

/// Dimension of the face of the Newton polyhedron minimized by `l`.
fn face_dim(support: &[LatticeVector], l: &LatticeVector) -> u8 {
    let m = support.iter().map(|p| l.dot(p)).min().expect("nonempty");
    let face: Vec<&LatticeVector> = support.iter().filter(|p| l.dot(p) == m).collect();
    let mut dirs: Vec<LatticeVector> = face[1..].iter().map(|p| p.sub(face[0])).collect();
    for (e, &lk) in [E1, E2, E3].iter().zip(&l.0) {
        if lk == 0 {
            dirs.push(*e);
        }
    }
    affine_rank(&dirs)
}

fn affine_rank(dirs: &[LatticeVector]) -> u8 {
    let nz: Vec<LatticeVector> = dirs.iter().copied().filter(|v| !v.is_zero()).collect();
    if nz.is_empty() {
        return 0;
    }
    for a in &nz {
        for b in &nz {
            let c = a.cross(b);
            if !c.is_zero() {
                for d in &nz {
                    if c.dot(d) != 0 {
                        return 3;
                    }
                }
                return 2;
            }
        }
    }
    1
}

pub fn newton_data(f: &Polynomial) -> Result<NewtonData, NewtonError> {
    if f.is_zero() {
        return Err(NewtonError::ZeroPolynomial);
    }
    let support = f.support3();
    let normals = facet_normals_of_polyhedron(&support);
    let mut vertices = Vec::new();
    for p in &support {
        let at: Vec<LatticeVector> = normals
            .iter()
            .copied()
            .filter(|l| {
                let m = support.iter().map(|q| l.dot(q)).min().unwrap();
                l.dot(p) == m
            })
            .collect();
        if affine_rank(&at) == 3 {
            vertices.push(*p);
        }
    }
    // compact faces: dual to fan faces with a strictly positive representative
    let fan = dual_fan_from_support(&support)?;
    let mut compact_faces: Vec<(Vec<LatticeVector>, u8)> = Vec::new();
    for c in fan.maximal_cones() {
        for face in c.faces() {
            if face.dim() == 0 {
                continue;
            }
            let rep = face.interior_point();
            if rep.is_strictly_positive() {
                let m = support.iter().map(|p| rep.dot(p)).min().unwrap();
                let fs: Vec<LatticeVector> =
                    support.iter().copied().filter(|p| rep.dot(p) == m).collect();
                let dirs: Vec<LatticeVector> =
                    fs[1..].iter().map(|p| p.sub(&fs[0])).collect();
                let entry = (fs, affine_rank(&dirs));
                if !compact_faces.contains(&entry) {
                    compact_faces.push(entry);
                }
            }
        }
    }
    compact_faces.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(NewtonData { support, vertices, compact_faces })
}

fn dual_fan_from_support(support: &[LatticeVector]) -> Result<Fan, NewtonError> {
    let normals = facet_normals_of_polyhedron(support);
    let mut cones = Vec::new();
    for p in support {
        let at: Vec<LatticeVector> = normals
            .iter()
            .copied()
            .filter(|l| {
                let m = support.iter().map(|q| l.dot(q)).min().unwrap();
                l.dot(p) == m
            })
            .collect();
        if affine_rank(&at) == 3 {
            cones.push(Cone::from_rays(&at)?);
        }
    }
    Ok(Fan::new(cones, FanSupport::Octant))
}

/// Normal fan of the Newton polyhedron restricted to the nonnegative octant.
/// Maximal cones are the normal cones of the vertices and may be
/// non-simplicial.
pub fn dual_fan(f: &Polynomial) -> Result<Fan, NewtonError> {
    if f.is_zero() {
        return Err(NewtonError::ZeroPolynomial);
    }
    if f.constant_term() != 0 {
        return Err(NewtonError::NonzeroConstantTerm);
    }
    dual_fan_from_support(&f.support3())
}

/// One compact face with any vanishing witnesses found over the sampled
/// finite fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSample {
    pub face_support: Vec<LatticeVector>,
    pub restriction: String,
    pub witnesses: Vec<(u64, [u64; 3])>,
}

/// Finite-field sampling report. Absence of witnesses is evidence for
/// non-degeneracy, not a proof; `evidence_only` stays true to say so.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NondegeneracyReport {
    pub faces: Vec<FaceSample>,
    pub evidence_only: bool,
}

impl NondegeneracyReport {
    pub fn has_witness(&self) -> bool {
        self.faces.iter().any(|f| !f.witnesses.is_empty())
    }
}

/// Exhaustively scans the torus over each prime field for common zeros of a
/// face restriction and its three partials.
pub fn check_nondegenerate_sampled(
    f: &Polynomial,
    primes: &[u64],
) -> Result<NondegeneracyReport, NewtonError> {
    if let Some(&p) = primes.iter().find(|&&p| p < 2) {
        return Err(NewtonError::PrimeTooSmall(p.max(2)));
    }
    if let Some(&p) = primes.iter().find(|&&p| p >= 1 << 16) {
        return Err(NewtonError::PrimeTooLarge(p));
    }
    let data = newton_data(f)?;
    let mut faces = Vec::new();
    for (fs, _) in &data.compact_faces {
        let keep: BTreeSet<Vec<u16>> = fs
            .iter()
            .map(|v| vec![v.0[0] as u16, v.0[1] as u16, v.0[2] as u16])
            .collect();
        let mut restriction = Polynomial::zero(f.vars().to_vec());
        for (m, c) in f.terms() {
            if keep.contains(&m.0) {
                restriction.add_term(m.0.clone(), *c);
            }
        }
        let partials: Vec<Polynomial> = (0..3).map(|i| restriction.derivative(i)).collect();
        let mut witnesses = Vec::new();
        for &p in primes {
            for x in 1..p {
                for y in 1..p {
                    for z in 1..p {
                        let pt = [x, y, z];
                        if restriction.eval_mod(&pt, p) == 0
                            && partials.iter().all(|d| d.eval_mod(&pt, p) == 0)
                        {
                            witnesses.push((p, pt));
                        }
                    }
                }
            }
        }
        faces.push(FaceSample {
            face_support: fs.clone(),
            restriction: restriction.to_string(),
            witnesses,
        });
    }
    Ok(NondegeneracyReport { faces, evidence_only: true })
}
