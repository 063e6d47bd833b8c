//! Exact integer linear algebra on a rank-3 lattice: primitive vectors,
//! determinants, strongly convex rational cones and fans.
//!
//! All coordinates are `i64` bounded by [`COORD_LIMIT`]; every product is
//! taken in `i128`, so no computation here can overflow silently.

use std::cmp::Ordering;
use std::fmt;

use num::integer::gcd;
use num::rational::Ratio;

use crate::error::LatticeError;

/// Magnitude bound on lattice coordinates. Three-fold products plus sums of
/// values below this bound fit comfortably in `i128`.
pub const COORD_LIMIT: i64 = 1 << 40;

/// An exact point of the rank-3 lattice.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector(pub [i64; 3]);

pub const E1: LatticeVector = LatticeVector([1, 0, 0]);
pub const E2: LatticeVector = LatticeVector([0, 1, 0]);
pub const E3: LatticeVector = LatticeVector([0, 0, 1]);

impl LatticeVector {
    /// Panics if a coordinate exceeds [`COORD_LIMIT`]; use [`LatticeVector::checked`]
    /// for untrusted input.
    pub fn new(x: i64, y: i64, z: i64) -> Self {
        Self::checked(x, y, z).expect("lattice coordinate exceeds supported magnitude")
    }

    pub fn checked(x: i64, y: i64, z: i64) -> Result<Self, LatticeError> {
        if [x, y, z].iter().any(|c| c.abs() > COORD_LIMIT) {
            return Err(LatticeError::CoordinateTooLarge);
        }
        Ok(Self([x, y, z]))
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0, 0, 0]
    }

    pub fn neg(&self) -> Self {
        Self([-self.0[0], -self.0[1], -self.0[2]])
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2])
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2])
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.0[0] * k, self.0[1] * k, self.0[2] * k)
    }

    pub fn dot(&self, o: &Self) -> i128 {
        (0..3).map(|i| self.0[i] as i128 * o.0[i] as i128).sum()
    }

    pub fn cross(&self, o: &Self) -> Self {
        let a = self.0;
        let b = o.0;
        let c = [
            a[1] as i128 * b[2] as i128 - a[2] as i128 * b[1] as i128,
            a[2] as i128 * b[0] as i128 - a[0] as i128 * b[2] as i128,
            a[0] as i128 * b[1] as i128 - a[1] as i128 * b[0] as i128,
        ];
        Self::new(c[0] as i64, c[1] as i64, c[2] as i64)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }

    /// Graded-lexicographic comparison: first by coordinate sum, then lex.
    pub fn grlex_cmp(&self, o: &Self) -> Ordering {
        let sa: i128 = self.0.iter().map(|&c| c as i128).sum();
        let sb: i128 = o.0.iter().map(|&c| c as i128).sum();
        sa.cmp(&sb).then_with(|| self.0.cmp(&o.0))
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

pub type Rat = Ratio<i128>;

/// A point with exact rational coordinates (reduced, positive denominators —
/// `Ratio` maintains both).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalVector(pub [Rat; 3]);

impl RationalVector {
    pub fn zero() -> Self {
        Self([Rat::from_integer(0); 3])
    }

    pub fn add(&self, o: &Self) -> Self {
        Self([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }

    pub fn scale(&self, k: Rat) -> Self {
        Self([self.0[0] * k, self.0[1] * k, self.0[2] * k])
    }
}

impl From<LatticeVector> for RationalVector {
    fn from(v: LatticeVector) -> Self {
        Self([
            Rat::from_integer(v.0[0] as i128),
            Rat::from_integer(v.0[1] as i128),
            Rat::from_integer(v.0[2] as i128),
        ])
    }
}

/// Divides out the coordinate gcd. Errors on the zero vector.
pub fn primitive(v: &LatticeVector) -> Result<(LatticeVector, i64), LatticeError> {
    if v.is_zero() {
        return Err(LatticeError::ZeroVector);
    }
    let g = v.0.iter().fold(0i64, |acc, &c| gcd(acc, c.abs()));
    Ok((LatticeVector([v.0[0] / g, v.0[1] / g, v.0[2] / g]), g))
}

/// Exact determinant of the three vectors as columns.
pub fn det3(a: &LatticeVector, b: &LatticeVector, c: &LatticeVector) -> i128 {
    let (a, b, c) = (a.0, b.0, c.0);
    a[0] as i128 * (b[1] as i128 * c[2] as i128 - b[2] as i128 * c[1] as i128)
        - b[0] as i128 * (a[1] as i128 * c[2] as i128 - a[2] as i128 * c[1] as i128)
        + c[0] as i128 * (a[1] as i128 * b[2] as i128 - a[2] as i128 * b[1] as i128)
}

fn rank(vs: &[LatticeVector]) -> u8 {
    let vs: Vec<&LatticeVector> = vs.iter().filter(|v| !v.is_zero()).collect();
    if vs.is_empty() {
        return 0;
    }
    for a in &vs {
        for b in &vs {
            let c = a.cross(b);
            if !c.is_zero() {
                for d in &vs {
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

/// Membership of `v` in the cone spanned by `gens`, via conic Caratheodory:
/// a point of a finitely generated cone in rank 3 is a nonnegative
/// combination of at most three linearly independent generators.
pub fn in_nonneg_span(gens: &[LatticeVector], v: &LatticeVector) -> bool {
    if v.is_zero() {
        return true;
    }
    for g in gens {
        if in_span1(g, v) {
            return true;
        }
    }
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if in_span2(&gens[i], &gens[j], v) {
                return true;
            }
        }
    }
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            for k in j + 1..gens.len() {
                if in_span3(&gens[i], &gens[j], &gens[k], v) {
                    return true;
                }
            }
        }
    }
    false
}

fn in_span1(g: &LatticeVector, v: &LatticeVector) -> bool {
    if !g.cross(v).is_zero() {
        return false;
    }
    // v = t*g with t >= 0: signs must agree on every nonzero coordinate
    (0..3).all(|i| g.0[i] as i128 * v.0[i] as i128 >= 0)
}

fn in_span2(g1: &LatticeVector, g2: &LatticeVector, v: &LatticeVector) -> bool {
    let n = g1.cross(g2);
    if n.is_zero() {
        return false; // proportional pair; covered by single-generator case
    }
    if n.dot(v) != 0 {
        return false;
    }
    // Solve v = a*g1 + b*g2 through a nonzero 2x2 minor; signs via Cramer.
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let d = g1.0[i] as i128 * g2.0[j] as i128 - g1.0[j] as i128 * g2.0[i] as i128;
        if d != 0 {
            let a = v.0[i] as i128 * g2.0[j] as i128 - v.0[j] as i128 * g2.0[i] as i128;
            let b = g1.0[i] as i128 * v.0[j] as i128 - g1.0[j] as i128 * v.0[i] as i128;
            return a.signum() * d.signum() >= 0 && b.signum() * d.signum() >= 0;
        }
    }
    false
}

fn in_span3(g1: &LatticeVector, g2: &LatticeVector, g3: &LatticeVector, v: &LatticeVector) -> bool {
    let d = det3(g1, g2, g3);
    if d == 0 {
        return false; // degenerate triple; covered by smaller subsets
    }
    let a = det3(v, g2, g3);
    let b = det3(g1, v, g3);
    let c = det3(g1, g2, v);
    let s = d.signum();
    a.signum() * s >= 0 && b.signum() * s >= 0 && c.signum() * s >= 0
}

/// A strongly convex rational polyhedral cone, stored by its primitive
/// extremal ray generators in lexicographic order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cone {
    rays: Vec<LatticeVector>,
    dim: u8,
}

impl Cone {
    pub fn from_rays(rays: &[LatticeVector]) -> Result<Self, LatticeError> {
        let mut prim: Vec<LatticeVector> = Vec::new();
        for r in rays {
            let (p, _) = primitive(r)?;
            if !prim.contains(&p) {
                prim.push(p);
            }
        }
        for r in &prim {
            if in_nonneg_span(&prim, &r.neg()) {
                return Err(LatticeError::NotStronglyConvex);
            }
        }
        // extremality: drop rays generated by the others
        let mut extremal: Vec<LatticeVector> = Vec::new();
        for (i, r) in prim.iter().enumerate() {
            let others: Vec<LatticeVector> = prim
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, v)| *v)
                .collect();
            if !in_nonneg_span(&others, r) {
                extremal.push(*r);
            }
        }
        // descending, so coordinate cones keep their natural orientation
        extremal.sort_by(|a, b| b.cmp(a));
        let dim = rank(&extremal);
        Ok(Cone { rays: extremal, dim })
    }

    pub fn zero() -> Self {
        Cone { rays: Vec::new(), dim: 0 }
    }

    /// The nonnegative octant.
    pub fn octant() -> Self {
        Cone::from_rays(&[E1, E2, E3]).expect("octant is strongly convex")
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn is_simplicial(&self) -> bool {
        self.rays.len() == self.dim as usize
    }

    pub fn has_ray(&self, v: &LatticeVector) -> bool {
        self.rays.contains(v)
    }

    /// A point in the relative interior (the sum of the ray generators).
    pub fn interior_point(&self) -> LatticeVector {
        let mut p = LatticeVector([0, 0, 0]);
        for r in &self.rays {
            p = p.add(r);
        }
        p
    }

    /// Inward normals of the two-dimensional faces of a full-dimensional cone.
    pub fn facet_normals(&self) -> Vec<LatticeVector> {
        assert_eq!(self.dim, 3, "facet normals need a full-dimensional cone");
        let mut out: Vec<LatticeVector> = Vec::new();
        for i in 0..self.rays.len() {
            for j in i + 1..self.rays.len() {
                let c = self.rays[i].cross(&self.rays[j]);
                if c.is_zero() {
                    continue;
                }
                let (c, _) = primitive(&c).expect("nonzero");
                for n in [c, c.neg()] {
                    if self.rays.iter().all(|r| n.dot(r) >= 0) {
                        let on: Vec<LatticeVector> = self
                            .rays
                            .iter()
                            .copied()
                            .filter(|r| n.dot(r) == 0)
                            .collect();
                        if rank(&on) == 2 && !out.contains(&n) {
                            out.push(n);
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Equality and inequality functionals cutting out the cone.
    fn constraints(&self) -> (Vec<LatticeVector>, Vec<LatticeVector>) {
        match self.dim {
            3 => (Vec::new(), self.facet_normals()),
            2 => {
                let u = self.rays[0];
                let v = self.rays[1];
                let n = primitive(&u.cross(&v)).expect("2d cone spans a plane").0;
                let mut ineqs = Vec::new();
                for (a, b) in [(u, v), (v, u)] {
                    let mut t = n.cross(&a);
                    if t.dot(&b) < 0 {
                        t = t.neg();
                    }
                    ineqs.push(primitive(&t).expect("nonzero").0);
                }
                (vec![n], ineqs)
            }
            1 => {
                let u = self.rays[0];
                let mut eqs = Vec::new();
                for e in [E1, E2, E3] {
                    let c = u.cross(&e);
                    if !c.is_zero() {
                        let c = primitive(&c).expect("nonzero").0;
                        if eqs.iter().all(|q: &LatticeVector| !q.cross(&c).is_zero())
                            || eqs.is_empty()
                        {
                            eqs.push(c);
                        }
                    }
                    if eqs.len() == 2 {
                        break;
                    }
                }
                (eqs, vec![u])
            }
            _ => (vec![E1, E2, E3], Vec::new()),
        }
    }

    /// All faces (including the cone itself and the zero cone).
    pub fn faces(&self) -> Vec<Cone> {
        let mut out = vec![self.clone(), Cone::zero()];
        match self.dim {
            3 => {
                let normals = self.facet_normals();
                let k = normals.len();
                for mask in 1..(1u32 << k) {
                    let sel: Vec<&LatticeVector> = (0..k)
                        .filter(|&i| mask & (1 << i) != 0)
                        .map(|i| &normals[i])
                        .collect();
                    let rays: Vec<LatticeVector> = self
                        .rays
                        .iter()
                        .copied()
                        .filter(|r| sel.iter().all(|n| n.dot(r) == 0))
                        .collect();
                    let f = if rays.is_empty() {
                        Cone::zero()
                    } else {
                        Cone::from_rays(&rays).expect("face of a strongly convex cone")
                    };
                    if !out.contains(&f) {
                        out.push(f);
                    }
                }
            }
            2 => {
                for r in &self.rays {
                    out.push(Cone::from_rays(&[*r]).expect("ray"));
                }
            }
            _ => {}
        }
        out
    }

    /// Two-dimensional faces of a full-dimensional cone.
    pub fn walls(&self) -> Vec<Cone> {
        self.faces().into_iter().filter(|f| f.dim == 2).collect()
    }

    /// Simplicial subdivision using the ray at `apex` as the common apex.
    /// Any apex yields a valid triangulation; membership does not depend on
    /// the choice.
    pub fn triangulate_from(&self, apex: usize) -> Vec<Cone> {
        assert_eq!(self.dim, 3);
        if self.is_simplicial() {
            return vec![self.clone()];
        }
        let a = self.rays[apex];
        let mut out = Vec::new();
        for w in self.walls() {
            if !cone_contains(&w, &a) {
                let mut rays = w.rays().to_vec();
                rays.push(a);
                out.push(Cone::from_rays(&rays).expect("join of wall and apex"));
            }
        }
        out
    }

    pub fn triangulate(&self) -> Vec<Cone> {
        if self.is_simplicial() {
            return vec![self.clone()];
        }
        self.triangulate_from(0)
    }
}

impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, r) in self.rays.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r:?}")?;
        }
        write!(f, ">")
    }
}

/// True iff `v` is a nonnegative rational combination of the rays of `c`.
pub fn cone_contains(c: &Cone, v: &LatticeVector) -> bool {
    in_nonneg_span(&c.rays, v)
}

/// True iff the cone is regular (its generators extend to a lattice basis).
pub fn is_regular_cone(c: &Cone) -> bool {
    match c.dim {
        3 => c.rays.len() == 3 && det3(&c.rays[0], &c.rays[1], &c.rays[2]).abs() == 1,
        2 => {
            let m = c.rays[0].cross(&c.rays[1]);
            m.0.iter().fold(0i64, |acc, &x| gcd(acc, x.abs())) == 1
        }
        1 => true, // generators are primitive by construction
        _ => true,
    }
}

/// Exact intersection of two cones.
pub fn intersect(c1: &Cone, c2: &Cone) -> Cone {
    let (e1, i1) = c1.constraints();
    let (e2, i2) = c2.constraints();
    let eqs: Vec<LatticeVector> = e1.into_iter().chain(e2).collect();
    let ineqs: Vec<LatticeVector> = i1.into_iter().chain(i2).collect();
    let satisfies = |v: &LatticeVector| {
        eqs.iter().all(|n| n.dot(v) == 0) && ineqs.iter().all(|n| n.dot(v) >= 0)
    };
    let mut cands: Vec<LatticeVector> = Vec::new();
    let push = |v: LatticeVector, cands: &mut Vec<LatticeVector>| {
        if !v.is_zero() {
            let p = primitive(&v).expect("nonzero").0;
            if satisfies(&p) && !cands.contains(&p) {
                cands.push(p);
            }
        }
    };
    for r in c1.rays().iter().chain(c2.rays()) {
        push(*r, &mut cands);
    }
    let all: Vec<LatticeVector> = eqs.iter().chain(ineqs.iter()).copied().collect();
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            let d = all[i].cross(&all[j]);
            push(d, &mut cands);
            push(d.neg(), &mut cands);
        }
    }
    Cone::from_rays(&cands).expect("intersection of strongly convex cones")
}

/// True iff `f` appears in the face lattice of `c`.
pub fn is_face_of(f: &Cone, c: &Cone) -> bool {
    c.faces().contains(f)
}

/// True iff the two cones intersect in a common face of each.
pub fn intersection_is_common_face(c1: &Cone, c2: &Cone) -> bool {
    if c1 == c2 {
        return true;
    }
    // quick exit: a facet of one cone strictly separating the other
    if c1.dim == 3 && c2.dim == 3 {
        for n in c1.facet_normals() {
            if c2.rays().iter().all(|r| n.dot(r) < 0) {
                return true; // intersection is {0}
            }
        }
    }
    let i = intersect(c1, c2);
    is_face_of(&i, c1) && is_face_of(&i, c2)
}

/// Where a fan lives: the full octant for Newton dual fans, or a single cone
/// when the fan subdivides one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FanSupport {
    Octant,
    Subcone(Cone),
}

impl FanSupport {
    pub fn as_cone(&self) -> Cone {
        match self {
            FanSupport::Octant => Cone::octant(),
            FanSupport::Subcone(c) => c.clone(),
        }
    }
}

/// A collection of maximal cones with a declared support. Faces are derived
/// on demand rather than stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fan {
    maximal_cones: Vec<Cone>,
    rays: Vec<LatticeVector>,
    support: FanSupport,
}

impl Fan {
    pub fn new(mut maximal_cones: Vec<Cone>, support: FanSupport) -> Self {
        maximal_cones.sort();
        maximal_cones.dedup();
        let mut rays: Vec<LatticeVector> = Vec::new();
        for c in &maximal_cones {
            for r in c.rays() {
                if !rays.contains(r) {
                    rays.push(*r);
                }
            }
        }
        rays.sort_by(|a, b| a.grlex_cmp(b));
        Fan { maximal_cones, rays, support }
    }

    pub fn maximal_cones(&self) -> &[Cone] {
        &self.maximal_cones
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn support(&self) -> &FanSupport {
        &self.support
    }

    pub fn has_ray(&self, v: &LatticeVector) -> bool {
        self.rays.contains(v)
    }

    /// Deduplicated two-dimensional cones of the fan.
    pub fn walls(&self) -> Vec<Cone> {
        let mut out: Vec<Cone> = Vec::new();
        for c in &self.maximal_cones {
            for w in c.walls() {
                if !out.contains(&w) {
                    out.push(w);
                }
            }
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lv(x: i64, y: i64, z: i64) -> LatticeVector {
        LatticeVector::new(x, y, z)
    }

    #[test]
    fn primitive_divides_out_gcd() {
        assert_eq!(primitive(&lv(2, 4, 6)).unwrap(), (lv(1, 2, 3), 2));
        assert_eq!(primitive(&lv(1, 0, 0)).unwrap(), (lv(1, 0, 0), 1));
        assert_eq!(primitive(&lv(6, 10, 15)).unwrap(), (lv(6, 10, 15), 1));
        assert!(matches!(
            primitive(&lv(0, 0, 0)),
            Err(LatticeError::ZeroVector)
        ));
    }

    #[test]
    fn det3_examples() {
        assert_eq!(det3(&lv(1, 1, 1), &lv(0, 3, 1), &lv(0, 4, 1)), -1);
        assert_eq!(det3(&E1, &E2, &E3), 1);
        assert_eq!(det3(&E3, &lv(3, 0, 1), &lv(0, 3, 1)), 9);
    }

    #[test]
    fn regularity_examples() {
        let octant = Cone::octant();
        assert!(is_regular_cone(&octant));
        let a2 = Cone::from_rays(&[E3, lv(3, 0, 1), lv(0, 3, 1)]).unwrap();
        assert!(!is_regular_cone(&a2));
        let tri = Cone::from_rays(&[lv(1, 1, 1), lv(1, 0, 1), lv(0, 0, 1)]).unwrap();
        assert!(is_regular_cone(&tri));
    }

    #[test]
    fn membership_examples() {
        let a2 = Cone::from_rays(&[E3, lv(3, 0, 1), lv(0, 3, 1)]).unwrap();
        assert!(cone_contains(&a2, &lv(1, 1, 1)));
        assert!(!cone_contains(&a2, &lv(1, 1, 0)));
        for r in a2.rays() {
            assert!(cone_contains(&a2, r));
        }
    }

    #[test]
    fn membership_of_ray_sums() {
        let c = Cone::from_rays(&[E3, lv(3, 0, 1), lv(0, 3, 1)]).unwrap();
        for a in c.rays() {
            for b in c.rays() {
                assert!(cone_contains(&c, &a.add(b)));
            }
        }
    }

    #[test]
    fn common_face_examples() {
        let c1 = Cone::from_rays(&[E1, E2, E3]).unwrap();
        let c2 = Cone::from_rays(&[E1, E2, lv(1, 1, -1)]).unwrap();
        assert!(intersection_is_common_face(&c1, &c2));
        assert!(intersection_is_common_face(&c1, &c1));
        let c3 = Cone::from_rays(&[E1, E2, lv(3, 0, 1)]).unwrap();
        assert!(!intersection_is_common_face(&c3, &c1));
    }

    #[test]
    fn strongly_convex_rejects_lines() {
        assert!(matches!(
            Cone::from_rays(&[E1, E1.neg()]),
            Err(LatticeError::NotStronglyConvex)
        ));
    }

    #[test]
    fn extremality_filter_drops_interior_rays() {
        let c = Cone::from_rays(&[E1, E2, lv(1, 1, 0)]).unwrap();
        assert_eq!(c.rays(), &[E1, E2][..]);
        assert_eq!(c.dim(), 2);
    }

    #[test]
    fn regular_cone_has_integral_inverse() {
        // adjugate/determinant is integral exactly when |det| = 1
        let cones = [
            Cone::from_rays(&[lv(1, 1, 1), lv(1, 0, 1), lv(0, 0, 1)]).unwrap(),
            Cone::octant(),
            Cone::from_rays(&[lv(2, 0, 1), lv(1, 0, 1), lv(1, 1, 1)]).unwrap(),
        ];
        for c in &cones {
            let [a, b, d] = [c.rays()[0], c.rays()[1], c.rays()[2]];
            let det = det3(&a, &b, &d);
            assert_eq!(det.abs(), 1);
            // adjugate columns are cross products of pairs; every entry must be
            // divisible by det (trivially true at |det| = 1, checked exactly)
            for adj in [b.cross(&d), d.cross(&a), a.cross(&b)] {
                for e in adj.0 {
                    assert_eq!((e as i128) % det, 0);
                }
            }
        }
    }

    #[test]
    fn membership_is_triangulation_independent() {
        // 4-ray cones of the A_2, D_4 and E7 dual fans
        let quads = [
            Cone::from_rays(&[E1, E2, lv(3, 0, 1), lv(0, 3, 1)]).unwrap(),
            Cone::from_rays(&[E1, E2, lv(2, 0, 1), lv(2, 2, 3)]).unwrap(),
            Cone::from_rays(&[E2, E3, lv(1, 2, 0), lv(9, 6, 4)]).unwrap(),
        ];
        for q in &quads {
            assert!(!q.is_simplicial());
            let t0 = q.triangulate_from(0);
            let t1 = q.triangulate_from(1);
            assert_ne!(t0, t1);
            for x in -2..6i64 {
                for y in -2..6i64 {
                    for z in -2..6i64 {
                        let v = lv(x, y, z);
                        let m0 = t0.iter().any(|c| cone_contains(c, &v));
                        let m1 = t1.iter().any(|c| cone_contains(c, &v));
                        let direct = cone_contains(q, &v);
                        assert_eq!(m0, direct, "{v:?} in {q:?}");
                        assert_eq!(m1, direct, "{v:?} in {q:?}");
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn det3_is_alternating(a in prop::array::uniform3(-50i64..50),
                               b in prop::array::uniform3(-50i64..50),
                               c in prop::array::uniform3(-50i64..50)) {
            let (a, b, c) = (LatticeVector(a), LatticeVector(b), LatticeVector(c));
            prop_assert_eq!(det3(&a, &b, &c), -det3(&b, &a, &c));
            prop_assert_eq!(det3(&a, &b, &c), -det3(&a, &c, &b));
            prop_assert_eq!(det3(&a, &b, &c), -det3(&c, &b, &a));
        }
    }
}
