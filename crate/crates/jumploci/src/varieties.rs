//! The geometry engine: rational subspace arrangements, torsion-translated
//! subtori and Laurent hypersurfaces inside the character torus,
//! exponential tangent cones, Schubert incidence, the Dwyer-Fried
//! finiteness test, Sigma upper bounds, product filtrations, and
//! strictness witnesses.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::exactlin::{
    integer_solve, rat_i, rat_kernel, rat_rank, Int, Mat, QMat, Rat, ZMat,
};

/// A rationally defined linear subspace of Q^n, stored by a basis matrix
/// (n rows, dim columns, full column rank).
#[derive(Clone, Debug)]
pub struct RationalSubspace {
    ambient: usize,
    basis: QMat,
}

impl RationalSubspace {
    /// Span of the given vectors; dependent vectors are dropped.
    pub fn span(ambient: usize, vectors: &[Vec<Rat>]) -> Self {
        assert!(vectors.iter().all(|v| v.len() == ambient));
        let mut basis_cols: Vec<Vec<Rat>> = Vec::new();
        for v in vectors {
            if v.iter().all(|x| x.is_zero()) {
                continue;
            }
            let mut cols = basis_cols.clone();
            cols.push(v.clone());
            let m = Mat::from_fn(ambient, cols.len(), |i, j| cols[j][i].clone());
            if rat_rank(&m) == cols.len() {
                basis_cols = cols;
            }
        }
        let basis = Mat::from_fn(ambient, basis_cols.len(), |i, j| basis_cols[j][i].clone());
        RationalSubspace { ambient, basis }
    }

    pub fn span_i64(ambient: usize, vectors: &[Vec<i64>]) -> Self {
        let vs: Vec<Vec<Rat>> = vectors
            .iter()
            .map(|v| v.iter().map(|&x| rat_i(x)).collect())
            .collect();
        Self::span(ambient, &vs)
    }

    pub fn zero(ambient: usize) -> Self {
        Self::span(ambient, &[])
    }

    pub fn full(ambient: usize) -> Self {
        let vs: Vec<Vec<Rat>> = (0..ambient)
            .map(|i| unit_vector(ambient, i))
            .collect();
        Self::span(ambient, &vs)
    }

    pub fn coordinate_subspace(ambient: usize, support: &[usize]) -> Self {
        let vs: Vec<Vec<Rat>> = support.iter().map(|&i| unit_vector(ambient, i)).collect();
        Self::span(ambient, &vs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &QMat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rat>> {
        (0..self.basis.cols()).map(|j| self.basis.col(j)).collect()
    }

    pub fn contains_vector(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient);
        if v.iter().all(|x| x.is_zero()) {
            return true;
        }
        let ext = self
            .basis
            .hstack(&Mat::from_fn(self.ambient, 1, |i, _| v[i].clone()));
        rat_rank(&ext) == self.dim()
    }

    pub fn contains_subspace(&self, other: &RationalSubspace) -> bool {
        other
            .basis_vectors()
            .iter()
            .all(|v| self.contains_vector(v))
    }

    pub fn equals(&self, other: &RationalSubspace) -> bool {
        self.ambient == other.ambient
            && self.dim() == other.dim()
            && self.contains_subspace(other)
    }

    /// Basis of the intersection with another subspace.
    pub fn intersect(&self, other: &RationalSubspace) -> Result<RationalSubspace, Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        // solve A x = B y; intersection vectors are A x
        let neg = other.basis.map(|e| -e.clone());
        let stacked = self.basis.hstack(&neg);
        let ker = rat_kernel(&stacked);
        let mut vecs = Vec::new();
        for j in 0..ker.cols() {
            let x: Vec<Rat> = (0..self.dim()).map(|i| ker.at(i, j).clone()).collect();
            vecs.push(self.basis.mul_vec(&x));
        }
        Ok(RationalSubspace::span(self.ambient, &vecs))
    }

    pub fn sum(&self, other: &RationalSubspace) -> Result<RationalSubspace, Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Ok(RationalSubspace::span(self.ambient, &vs))
    }

    pub fn intersection_dim(&self, other: &RationalSubspace) -> usize {
        let joined = self.basis.hstack(&other.basis);
        self.dim() + other.dim() - rat_rank(&joined)
    }

    /// Primitive basis of the saturated lattice  self  intersected with Z^n,
    /// as columns of an integer matrix.
    pub fn primitive_integer_basis(&self) -> ZMat {
        let ann = self.annihilator_rows();
        crate::exactlin::integer_kernel(&ann)
    }

    /// Integer matrix whose rows span the annihilator { u | <u, v> = 0
    /// for all v in self }.
    pub fn annihilator_rows(&self) -> ZMat {
        let ker = rat_kernel(&self.basis.transpose()); // ambient x (ambient-dim)
        ker.transpose().clear_denominators()
    }
}

/// Irredundant finite union of rational subspaces sharing an ambient
/// dimension.  The zero subspace may appear, but only as the sole member.
#[derive(Clone, Debug)]
pub struct SubspaceArrangement {
    ambient: usize,
    members: Vec<RationalSubspace>,
}

impl SubspaceArrangement {
    pub fn new(ambient: usize, candidates: Vec<RationalSubspace>) -> Self {
        assert!(candidates.iter().all(|s| s.ambient_dim() == ambient));
        let mut members: Vec<RationalSubspace> = Vec::new();
        for c in candidates {
            if members.iter().any(|m| m.contains_subspace(&c)) {
                continue;
            }
            members.retain(|m| !c.contains_subspace(m));
            members.push(c);
        }
        SubspaceArrangement { ambient, members }
    }

    pub fn empty(ambient: usize) -> Self {
        SubspaceArrangement {
            ambient,
            members: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn members(&self) -> &[RationalSubspace] {
        &self.members
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn union(&self, other: &SubspaceArrangement) -> SubspaceArrangement {
        let mut all = self.members.clone();
        all.extend(other.members.clone());
        SubspaceArrangement::new(self.ambient, all)
    }

    pub fn equals(&self, other: &SubspaceArrangement) -> bool {
        self.members.len() == other.members.len()
            && self
                .members
                .iter()
                .all(|m| other.members.iter().any(|o| o.equals(m)))
    }
}

/// Coset rho * exp(L (x) C) of a subtorus by a torsion character,
/// with rho = exp(2 pi i q) for a rational translate q taken mod Z^n.
#[derive(Clone, Debug)]
pub struct TranslatedTorus {
    ambient: usize,
    translate: Vec<Rat>,
    direction: RationalSubspace,
}

impl TranslatedTorus {
    pub fn new(translate: Vec<Rat>, direction: RationalSubspace) -> Self {
        assert_eq!(translate.len(), direction.ambient_dim());
        TranslatedTorus {
            ambient: direction.ambient_dim(),
            translate: translate.iter().map(reduce_mod_one).collect(),
            direction,
        }
    }

    pub fn subtorus(direction: RationalSubspace) -> Self {
        let n = direction.ambient_dim();
        Self::new(vec![Rat::zero(); n], direction)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn translate(&self) -> &[Rat] {
        &self.translate
    }

    pub fn direction(&self) -> &RationalSubspace {
        &self.direction
    }

    /// True iff the identity lies on this component, i.e. rho lies on the
    /// subtorus exp(L (x) C).
    pub fn contains_identity(&self) -> bool {
        lattice_coset_contains(&self.translate, &self.direction)
    }
}

fn reduce_mod_one(q: &Rat) -> Rat {
    q - q.floor()
}

/// Zero locus in the torus of a Laurent polynomial with rational
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentHypersurface {
    ambient: usize,
    terms: BTreeMap<Vec<i64>, Rat>,
}

impl LaurentHypersurface {
    pub fn new(ambient: usize, terms: impl IntoIterator<Item = (Vec<i64>, Rat)>) -> Self {
        let mut map: BTreeMap<Vec<i64>, Rat> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), ambient);
            let entry = map.entry(e).or_insert_with(Rat::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        LaurentHypersurface {
            ambient,
            terms: map,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, Rat> {
        &self.terms
    }

    pub fn is_identically_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coefficient_sum(&self) -> Rat {
        self.terms.values().fold(Rat::zero(), |a, c| a + c)
    }

    /// Value at a point with nonzero rational coordinates.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (x, &k) in point.iter().zip(e.iter()) {
                m *= rat_pow(x, k);
            }
            acc += m;
        }
        acc
    }
}

pub fn rat_pow(x: &Rat, k: i64) -> Rat {
    if k == 0 {
        return Rat::one();
    }
    let base = if k > 0 { x.clone() } else { x.recip() };
    let mut acc = Rat::one();
    for _ in 0..k.unsigned_abs() {
        acc *= &base;
    }
    acc
}

/// A finite union of torsion-translated subtori, Laurent hypersurfaces,
/// and isolated torsion points inside the character torus.
#[derive(Clone, Debug, Default)]
pub struct VarietyDescription {
    pub ambient: usize,
    pub tori: Vec<TranslatedTorus>,
    pub hypersurfaces: Vec<LaurentHypersurface>,
    pub points: Vec<Vec<Rat>>,
}

impl VarietyDescription {
    pub fn new(ambient: usize) -> Self {
        VarietyDescription {
            ambient,
            tori: Vec::new(),
            hypersurfaces: Vec::new(),
            points: Vec::new(),
        }
    }

    pub fn identity_only(ambient: usize) -> Self {
        let mut w = Self::new(ambient);
        w.points.push(vec![Rat::zero(); ambient]);
        w
    }

    pub fn with_torus(mut self, t: TranslatedTorus) -> Self {
        assert_eq!(t.ambient_dim(), self.ambient);
        self.tori.push(t);
        self
    }

    pub fn with_hypersurface(mut self, h: LaurentHypersurface) -> Self {
        assert_eq!(h.ambient_dim(), self.ambient);
        self.hypersurfaces.push(h);
        self
    }

    pub fn with_point(mut self, q: Vec<Rat>) -> Self {
        assert_eq!(q.len(), self.ambient);
        self.points.push(q.iter().map(reduce_mod_one).collect());
        self
    }
}

/// Ascending filtration {1} = W^0 subset W^1 subset ... of variety
/// descriptions.
#[derive(Clone, Debug)]
pub struct VarietyFiltration {
    pub ambient: usize,
    pub layers: Vec<VarietyDescription>,
}

impl VarietyFiltration {
    pub fn new(ambient: usize, mut layers: Vec<VarietyDescription>) -> Self {
        if layers.is_empty() {
            layers.push(VarietyDescription::identity_only(ambient));
        }
        VarietyFiltration { ambient, layers }
    }

    pub fn layer(&self, i: usize) -> Result<&VarietyDescription, Error> {
        self.layers
            .get(i)
            .ok_or(Error::DegreeShortfall(self.layers.len().saturating_sub(1), i))
    }
}

/// Decide whether (q + V) meets Z^n, i.e. whether the torsion character
/// exp(2 pi i q) lies on the subtorus exp(V (x) C).
pub fn lattice_coset_contains(q: &[Rat], v: &RationalSubspace) -> bool {
    assert_eq!(q.len(), v.ambient_dim());
    if q.iter().all(|x| reduce_mod_one(x).is_zero()) {
        return true;
    }
    // q in V + Z^n  iff  M a lies in the lattice (d M) Z^n, where M has
    // integer rows spanning the annihilator of V and q = a / d
    let m = v.annihilator_rows();
    if m.rows() == 0 {
        return true; // V is the whole space
    }
    let mut d = Int::one();
    for x in q {
        d = num_integer::lcm(d, x.denom().clone());
    }
    let a: Vec<Int> = q.iter().map(|x| x.numer() * (&d / x.denom())).collect();
    let ma = m.mul_vec(&a);
    let dm = m.map(|e| e * &d);
    integer_solve(&dm, &ma).is_some()
}

/// Exponential tangent cone at the identity, as a rational subspace
/// arrangement.
pub fn tau1(w: &VarietyDescription) -> SubspaceArrangement {
    let n = w.ambient;
    let mut members: Vec<RationalSubspace> = Vec::new();
    for t in &w.tori {
        if t.contains_identity() {
            members.push(t.direction().clone());
        }
    }
    for p in &w.points {
        if p.iter().all(|x| reduce_mod_one(x).is_zero()) {
            members.push(RationalSubspace::zero(n));
        }
    }
    for h in &w.hypersurfaces {
        members.extend(hypersurface_tau1(h));
    }
    SubspaceArrangement::new(n, members)
}

/// Subspaces V with exp(lambda z) on the hypersurface for all z in V and
/// all scalars lambda.  A subspace qualifies iff grouping the exponent
/// vectors by their restriction to V leaves every group with coefficient
/// sum zero; groups are induced by partitions of the support, and each
/// candidate is certified against the grouping its annihilator actually
/// induces.
fn hypersurface_tau1(h: &LaurentHypersurface) -> Vec<RationalSubspace> {
    let n = h.ambient_dim();
    if !h.coefficient_sum().is_zero() {
        return Vec::new(); // identity not on the hypersurface
    }
    let exps: Vec<&Vec<i64>> = h.terms.keys().collect();
    let coefs: Vec<&Rat> = h.terms.values().collect();
    let mut out = vec![RationalSubspace::zero(n)];
    if exps.len() > 8 {
        // certification stays conservative for huge supports
        return out;
    }
    for partition in set_partitions(exps.len()) {
        if !partition.iter().all(|part| {
            part.iter()
                .fold(Rat::zero(), |a, &i| a + coefs[i])
                .is_zero()
        }) {
            continue;
        }
        // span of within-group exponent differences
        let mut diffs: Vec<Vec<Rat>> = Vec::new();
        for part in &partition {
            for w in part.windows(2) {
                let d: Vec<Rat> = (0..n)
                    .map(|k| rat_i(exps[w[1]][k] - exps[w[0]][k]))
                    .collect();
                diffs.push(d);
            }
        }
        let u = RationalSubspace::span(n, &diffs);
        let ann = u.annihilator_rows(); // rows span the candidate V... as covectors
        let vdim = ann.rows();
        let vbasis: Vec<Vec<Rat>> = (0..vdim)
            .map(|i| (0..n).map(|j| Rat::from_integer(ann.at(i, j).clone())).collect())
            .collect();
        let v = RationalSubspace::span(n, &vbasis);
        if v.dim() == 0 {
            continue;
        }
        // certify against the grouping V actually induces
        if certify_subspace(h, &v) {
            out.push(v);
        }
    }
    SubspaceArrangement::new(n, out).members.clone()
}

fn certify_subspace(h: &LaurentHypersurface, v: &RationalSubspace) -> bool {
    let mut groups: Vec<(Vec<Rat>, Rat)> = Vec::new(); // (restriction key, sum)
    for (e, c) in &h.terms {
        let ev: Vec<Rat> = e.iter().map(|&x| rat_i(x)).collect();
        let key: Vec<Rat> = (0..v.dim())
            .map(|j| {
                let col = v.basis().col(j);
                ev.iter()
                    .zip(col.iter())
                    .fold(Rat::zero(), |a, (x, y)| a + x * y)
            })
            .collect();
        match groups.iter_mut().find(|(k, _)| *k == key) {
            Some((_, s)) => *s += c,
            None => groups.push((key, c.clone())),
        }
    }
    groups.iter().all(|(_, s)| s.is_zero())
}

/// All set partitions of {0, .., n-1}, each part sorted.
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for mut p in set_partitions(n - 1) {
        for i in 0..p.len() {
            let mut q = p.clone();
            q[i].push(n - 1);
            out.push(q);
        }
        p.push(vec![n - 1]);
        out.push(p);
    }
    out
}

/// Schubert incidence: does the r-plane P meet L nontrivially?
pub fn sigma_r_contains(l: &RationalSubspace, p: &RationalSubspace) -> Result<bool, Error> {
    if l.ambient_dim() != p.ambient_dim() {
        return Err(Error::AmbientMismatch(l.ambient_dim(), p.ambient_dim()));
    }
    Ok(p.intersection_dim(l) >= 1)
}

/// Is the direction chi inside some member of the arrangement?
pub fn sphere_locus_contains(v: &SubspaceArrangement, chi: &[Rat]) -> Result<bool, Error> {
    if chi.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroCharacter);
    }
    Ok(v.members().iter().any(|m| m.contains_vector(chi)))
}

/// Dimension class of exp(P (x) C) meeting a translated torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntersectionDim {
    Empty,
    Finite,
    PositiveDim(usize),
}

pub fn torus_intersection_dim(
    p: &RationalSubspace,
    c: &TranslatedTorus,
) -> Result<IntersectionDim, Error> {
    if p.ambient_dim() != c.ambient_dim() {
        return Err(Error::AmbientMismatch(p.ambient_dim(), c.ambient_dim()));
    }
    let reach = p.sum(c.direction())?;
    if !lattice_coset_contains(c.translate(), &reach) {
        return Ok(IntersectionDim::Empty);
    }
    let d = p.intersection_dim(c.direction());
    if d == 0 {
        Ok(IntersectionDim::Finite)
    } else {
        Ok(IntersectionDim::PositiveDim(d))
    }
}

/// Restrict a Laurent polynomial to the subtorus exp(P (x) C) via the
/// primitive monomial parametrization of P.
pub fn hypersurface_restriction(
    f: &LaurentHypersurface,
    p: &RationalSubspace,
) -> LaurentHypersurface {
    let b = p.primitive_integer_basis(); // n x r
    let r = b.cols();
    let terms = f.terms.iter().map(|(e, c)| {
        let new_exp: Vec<i64> = (0..r)
            .map(|s| {
                let mut acc = Int::zero();
                for (i, &ei) in e.iter().enumerate() {
                    acc += b.at(i, s) * Int::from(ei);
                }
                i64::try_from(acc).expect("exponent fits in i64")
            })
            .collect();
        (new_exp, c.clone())
    });
    LaurentHypersurface::new(r, terms)
}

/// Finiteness class of the intersection of exp(P (x) C) with a
/// hypersurface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Finiteness {
    Empty,
    Finite,
    PositiveDim,
    Whole,
}

pub fn torus_hypersurface_finiteness(
    f: &LaurentHypersurface,
    p: &RationalSubspace,
) -> Finiteness {
    torus_hypersurface_finiteness_restricted(&hypersurface_restriction(f, p))
}

/// Classify an already-restricted polynomial on a torus of its own
/// ambient dimension.
pub fn torus_hypersurface_finiteness_restricted(g: &LaurentHypersurface) -> Finiteness {
    if g.is_identically_zero() {
        return Finiteness::Whole;
    }
    if g.is_monomial() {
        return Finiteness::Empty; // monomials have no zeros in the torus
    }
    if g.ambient_dim() == 1 {
        Finiteness::Finite // one-variable Laurent polynomial, finitely many roots
    } else {
        Finiteness::PositiveDim
    }
}

/// Dwyer-Fried membership: does exp(P (x) C) meet W in dimension zero?
pub fn omega_contains(w: &VarietyDescription, p: &RationalSubspace) -> Result<bool, Error> {
    if p.ambient_dim() != w.ambient {
        return Err(Error::AmbientMismatch(p.ambient_dim(), w.ambient));
    }
    for t in &w.tori {
        if matches!(torus_intersection_dim(p, t)?, IntersectionDim::PositiveDim(_)) {
            return Ok(false);
        }
    }
    for h in &w.hypersurfaces {
        match torus_hypersurface_finiteness(h, p) {
            Finiteness::Empty | Finiteness::Finite => {}
            Finiteness::PositiveDim | Finiteness::Whole => return Ok(false),
        }
    }
    // isolated points always contribute finitely
    Ok(true)
}

/// Sigma upper bound: is chi excluded from Sigma by the tangent-cone
/// bound S(tau1(W))?
pub fn sigma_bound_excludes(w: &VarietyDescription, chi: &[Rat]) -> Result<bool, Error> {
    sphere_locus_contains(&tau1(w), chi)
}

/// Product of two ascending filtrations, layer by layer.
pub fn product_filtration(
    wx: &VarietyFiltration,
    wy: &VarietyFiltration,
    through_degree: usize,
) -> Result<VarietyFiltration, Error> {
    if wx.layers.len() <= through_degree || wy.layers.len() <= through_degree {
        return Err(Error::DegreeShortfall(
            wx.layers.len().min(wy.layers.len()).saturating_sub(1),
            through_degree,
        ));
    }
    let n = wx.ambient;
    let m = wy.ambient;
    let mut layers = Vec::new();
    for i in 0..=through_degree {
        let mut layer = VarietyDescription::new(n + m);
        for p in 0..=i {
            let q = i - p;
            merge_product(&mut layer, &wx.layers[p], &wy.layers[q])?;
        }
        layers.push(layer);
    }
    Ok(VarietyFiltration::new(n + m, layers))
}

fn merge_product(
    out: &mut VarietyDescription,
    a: &VarietyDescription,
    b: &VarietyDescription,
) -> Result<(), Error> {
    let n = a.ambient;
    let m = b.ambient;
    let embed_dir = |s: &RationalSubspace, left: bool| -> RationalSubspace {
        let vs: Vec<Vec<Rat>> = s
            .basis_vectors()
            .iter()
            .map(|v| {
                let mut w = vec![Rat::zero(); n + m];
                for (i, x) in v.iter().enumerate() {
                    w[if left { i } else { n + i }] = x.clone();
                }
                w
            })
            .collect();
        RationalSubspace::span(n + m, &vs)
    };
    let concat = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
        x.iter().chain(y.iter()).cloned().collect()
    };
    // torus x torus
    for ta in &a.tori {
        for tb in &b.tori {
            let dir = embed_dir(ta.direction(), true)
                .sum(&embed_dir(tb.direction(), false))?;
            out.tori.push(TranslatedTorus::new(
                concat(ta.translate(), tb.translate()),
                dir,
            ));
        }
        for qb in &b.points {
            out.tori.push(TranslatedTorus::new(
                concat(ta.translate(), qb),
                embed_dir(ta.direction(), true),
            ));
        }
    }
    for tb in &b.tori {
        for qa in &a.points {
            out.tori.push(TranslatedTorus::new(
                concat(qa, tb.translate()),
                embed_dir(tb.direction(), false),
            ));
        }
    }
    for qa in &a.points {
        for qb in &b.points {
            out.points.push(concat(qa, qb));
        }
    }
    // hypersurface products: only cylinders over a full-torus factor are
    // representable in this normal form
    let is_full_torus = |w: &VarietyDescription| {
        w.hypersurfaces.is_empty()
            && w.points.is_empty()
            && w.tori.len() == 1
            && w.tori[0].direction().dim() == w.ambient
            && w.tori[0].contains_identity()
    };
    if !a.hypersurfaces.is_empty() {
        if !is_full_torus(b) {
            return Err(Error::UnsupportedHypersurfaceProduct);
        }
        for h in &a.hypersurfaces {
            let terms = h.terms().iter().map(|(e, c)| {
                let mut e2 = e.clone();
                e2.extend(std::iter::repeat(0).take(m));
                (e2, c.clone())
            });
            out.hypersurfaces.push(LaurentHypersurface::new(n + m, terms));
        }
    }
    if !b.hypersurfaces.is_empty() {
        if !is_full_torus(a) {
            return Err(Error::UnsupportedHypersurfaceProduct);
        }
        for h in &b.hypersurfaces {
            let terms = h.terms().iter().map(|(e, c)| {
                let mut e2 = vec![0i64; n];
                e2.extend(e.iter().copied());
                (e2, c.clone())
            });
            out.hypersurfaces.push(LaurentHypersurface::new(n + m, terms));
        }
    }
    Ok(())
}

/// Search budget for `strictness_witness`.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub max_candidates: usize,
    pub height: i64,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_candidates: 2000,
            height: 3,
            seed: 0,
        }
    }
}

/// Search for an r-plane P with P meeting tau1(W) only at 0 while
/// exp(P (x) C) meets W in positive dimension -- the witness from which
/// strictness of the Sigma upper bound follows.
///
/// The search anchors P on a genuinely translated positive-dimensional
/// component (q, L): one basis vector from L keeps the intersection
/// positive-dimensional, a representative of q keeps the coset reachable,
/// and remaining directions are integer perturbations drawn from a seeded
/// enumeration.  Absence within budget is a legitimate "not found".
pub fn strictness_witness(
    w: &VarietyDescription,
    r: usize,
    budget: SearchBudget,
) -> Option<RationalSubspace> {
    if r < 2 {
        return None; // a line cannot both avoid tau1 and meet a coset infinitely
    }
    let n = w.ambient;
    let cone = tau1(w);
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut tried = 0usize;
    let translated: Vec<&TranslatedTorus> = w
        .tori
        .iter()
        .filter(|t| t.direction().dim() >= 1 && !t.contains_identity())
        .collect();
    for t in translated {
        let v1 = t.direction().basis().col(0);
        let q_rep: Vec<Rat> = t.translate().to_vec();
        while tried < budget.max_candidates {
            tried += 1;
            // integer perturbations keep q reachable inside P + Z^n
            let mut cols: Vec<Vec<Rat>> = vec![v1.clone()];
            let mut v2 = q_rep.clone();
            for x in v2.iter_mut() {
                *x += rat_i(rng.gen_range(-budget.height..=budget.height));
            }
            cols.push(v2);
            for _ in 2..r {
                let extra: Vec<Rat> = (0..n)
                    .map(|_| rat_i(rng.gen_range(-budget.height..=budget.height)))
                    .collect();
                cols.push(extra);
            }
            let p = RationalSubspace::span(n, &cols);
            if p.dim() != r {
                continue;
            }
            let clears_cone = cone
                .members()
                .iter()
                .all(|l| l.dim() == 0 || p.intersection_dim(l) == 0);
            if !clears_cone {
                continue;
            }
            if let Ok(false) = omega_contains(w, &p) {
                return Some(p);
            }
        }
    }
    None
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

pub fn rat_vec(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat_i(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    #[test]
    fn intersect_coordinate_axes() {
        let e1 = RationalSubspace::span_i64(2, &[vec![1, 0]]);
        let e2 = RationalSubspace::span_i64(2, &[vec![0, 1]]);
        assert_eq!(e1.intersect(&e2).unwrap().dim(), 0);
        assert!(e1.intersect(&e1).unwrap().equals(&e1));
    }

    #[test]
    fn intersect_planes_in_q3() {
        // {x1 = x2} and {x2 = 0} meet in span{e3}
        let a = RationalSubspace::span_i64(3, &[vec![1, 1, 0], vec![0, 0, 1]]);
        let b = RationalSubspace::span_i64(3, &[vec![1, 0, 0], vec![0, 0, 1]]);
        let c = a.intersect(&b).unwrap();
        assert!(c.equals(&RationalSubspace::span_i64(3, &[vec![0, 0, 1]])));
    }

    #[test]
    fn lattice_coset_examples() {
        let e1 = RationalSubspace::span_i64(2, &[vec![1, 0]]);
        assert!(lattice_coset_contains(&rat_vec(&[0, 0]), &e1));
        assert!(!lattice_coset_contains(
            &[Rat::zero(), rat(1, 2)],
            &e1
        ));
        let diag = RationalSubspace::span_i64(2, &[vec![1, 1]]);
        assert!(lattice_coset_contains(&[rat(1, 2), rat(1, 2)], &diag));
    }

    #[test]
    fn tau1_subtorus_and_translate() {
        // subtorus through 1: tau1 = {L}
        let l = RationalSubspace::span_i64(2, &[vec![1, 2]]);
        let w = VarietyDescription::new(2).with_torus(TranslatedTorus::subtorus(l.clone()));
        let cone = tau1(&w);
        assert_eq!(cone.members().len(), 1);
        assert!(cone.members()[0].equals(&l));

        // translated torus missing 1: tau1 empty
        let e1 = RationalSubspace::span_i64(2, &[vec![1, 0]]);
        let w = VarietyDescription::new(2)
            .with_torus(TranslatedTorus::new(vec![Rat::zero(), rat(1, 2)], e1));
        assert!(tau1(&w).is_empty());
    }

    #[test]
    fn tau1_identity_plus_translated_is_origin() {
        // W^1 of the locally-straight-but-not-straight two-generator group:
        // {1} union {t1 = -1}
        let e2 = RationalSubspace::span_i64(2, &[vec![0, 1]]);
        let w = VarietyDescription::identity_only(2)
            .with_torus(TranslatedTorus::new(vec![rat(1, 2), Rat::zero()], e2));
        let cone = tau1(&w);
        assert_eq!(cone.members().len(), 1);
        assert_eq!(cone.members()[0].dim(), 0);
    }

    #[test]
    fn sigma_r_examples() {
        let p = RationalSubspace::span_i64(4, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
        let l = RationalSubspace::span_i64(4, &[vec![0, 0, 1, 0], vec![0, 0, 0, 1]]);
        assert!(sigma_r_contains(&p, &p).unwrap());
        assert!(!sigma_r_contains(&l, &p).unwrap());
    }

    #[test]
    fn sphere_locus_examples() {
        let zero_only = SubspaceArrangement::new(2, vec![RationalSubspace::zero(2)]);
        assert!(!sphere_locus_contains(&zero_only, &rat_vec(&[1, 0])).unwrap());
        assert!(sphere_locus_contains(&zero_only, &rat_vec(&[0, 0])).is_err());

        let e1 = SubspaceArrangement::new(2, vec![RationalSubspace::span_i64(2, &[vec![1, 0]])]);
        assert!(sphere_locus_contains(&e1, &rat_vec(&[1, 0])).unwrap());
        assert!(!sphere_locus_contains(&e1, &rat_vec(&[0, 1])).unwrap());
    }

    #[test]
    fn torus_intersection_trichotomy() {
        let c = TranslatedTorus::new(
            vec![Rat::zero(), rat(1, 2)],
            RationalSubspace::span_i64(2, &[vec![1, 0]]),
        );
        let full = RationalSubspace::full(2);
        assert_eq!(
            torus_intersection_dim(&full, &c).unwrap(),
            IntersectionDim::PositiveDim(1)
        );
        let e2 = RationalSubspace::span_i64(2, &[vec![0, 1]]);
        assert_eq!(
            torus_intersection_dim(&e2, &c).unwrap(),
            IntersectionDim::Finite
        );
        let e1 = RationalSubspace::span_i64(2, &[vec![1, 0]]);
        assert_eq!(
            torus_intersection_dim(&e1, &c).unwrap(),
            IntersectionDim::Empty
        );
    }

    fn ex56_hypersurface() -> LaurentHypersurface {
        // t1 - t2 + 1 in three variables
        LaurentHypersurface::new(
            3,
            [
                (vec![1, 0, 0], rat_i(1)),
                (vec![0, 1, 0], rat_i(-1)),
                (vec![0, 0, 0], rat_i(1)),
            ],
        )
    }

    #[test]
    fn restriction_examples() {
        let f = ex56_hypersurface();
        // P = {x1 = x2}: the two monomials cancel, leaving the constant 1
        let p = RationalSubspace::span_i64(3, &[vec![1, 1, 0], vec![0, 0, 1]]);
        let g = hypersurface_restriction(&f, &p);
        assert!(g.is_monomial());
        assert_eq!(g.terms().keys().next().unwrap(), &vec![0i64, 0]);

        // P = {x2 = 0}: t2 -> 1, leaving the monomial u
        let p = RationalSubspace::span_i64(3, &[vec![1, 0, 0], vec![0, 0, 1]]);
        let g = hypersurface_restriction(&f, &p);
        assert!(g.is_monomial());

        // P = span{e1}: one-variable u
        let p = RationalSubspace::span_i64(3, &[vec![1, 0, 0]]);
        let g = hypersurface_restriction(&f, &p);
        assert!(g.is_monomial());
    }

    #[test]
    fn finiteness_trichotomy_examples() {
        let f = ex56_hypersurface();
        let p = RationalSubspace::span_i64(3, &[vec![1, 1, 0], vec![0, 0, 1]]);
        assert_eq!(torus_hypersurface_finiteness(&f, &p), Finiteness::Empty);
        let p = RationalSubspace::span_i64(3, &[vec![1, 0, 0], vec![0, 0, 1]]);
        assert_eq!(torus_hypersurface_finiteness(&f, &p), Finiteness::Empty);
        let p = RationalSubspace::span_i64(3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        assert_eq!(
            torus_hypersurface_finiteness(&f, &p),
            Finiteness::PositiveDim
        );
    }

    #[test]
    fn omega_identity_only() {
        let w = VarietyDescription::identity_only(2);
        let p = RationalSubspace::span_i64(2, &[vec![1, 0]]);
        assert!(omega_contains(&w, &p).unwrap());
    }

    #[test]
    fn strictness_witness_found_and_absent() {
        // {1} union a genuinely translated torus: full plane is a witness
        let e1 = RationalSubspace::span_i64(2, &[vec![1, 0]]);
        let w = VarietyDescription::identity_only(2)
            .with_torus(TranslatedTorus::new(vec![Rat::zero(), rat(1, 2)], e1));
        let p = strictness_witness(&w, 2, SearchBudget::default()).expect("witness");
        assert_eq!(p.dim(), 2);
        assert!(!omega_contains(&w, &p).unwrap());

        // a single subtorus through 1: no witness for any r
        let l = RationalSubspace::span_i64(2, &[vec![1, 1]]);
        let w = VarietyDescription::new(2).with_torus(TranslatedTorus::subtorus(l));
        assert!(strictness_witness(&w, 2, SearchBudget::default()).is_none());
    }

    #[test]
    fn product_embeds_factor() {
        // {1} x W = W embedded
        let e1 = RationalSubspace::span_i64(1, &[vec![1]]);
        let wx = VarietyFiltration::new(
            1,
            vec![
                VarietyDescription::identity_only(1),
                VarietyDescription::identity_only(1)
                    .with_torus(TranslatedTorus::subtorus(e1)),
            ],
        );
        let wy = VarietyFiltration::new(
            1,
            vec![
                VarietyDescription::identity_only(1),
                VarietyDescription::identity_only(1),
            ],
        );
        let prod = product_filtration(&wx, &wy, 1).unwrap();
        let layer1 = prod.layer(1).unwrap();
        assert!(layer1
            .tori
            .iter()
            .any(|t| t.contains_identity() && t.direction().dim() == 1));
    }
}
