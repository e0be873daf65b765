//! Jump loci and finiteness invariants of toric complexes and
//! right-angled Artin groups, computed from link homology over the
//! coordinate-subspace combinatorics of the defining complex.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::Error;
use crate::exactlin::{rat_i, Rat};
use crate::fox::GroupPresentation;
use crate::simplicial::{Coeffs, Face, SimplicialComplex, Vertex};
use crate::varieties::{
    sigma_r_contains, RationalSubspace, SubspaceArrangement, TranslatedTorus, VarietyDescription,
};

/// A simplicial complex with a fixed vertex ordering, defining the toric
/// complex T_L and the group G_L.
#[derive(Clone, Debug)]
pub struct ToricInput {
    complex: SimplicialComplex,
    vertex_order: Vec<Vertex>,
    cap: usize,
}

pub const DEFAULT_VERTEX_CAP: usize = 16;

impl ToricInput {
    pub fn new(complex: SimplicialComplex) -> Result<Self, Error> {
        Self::with_cap(complex, DEFAULT_VERTEX_CAP)
    }

    pub fn with_cap(complex: SimplicialComplex, cap: usize) -> Result<Self, Error> {
        let vertex_order = complex.vertices();
        if vertex_order.len() > cap {
            return Err(Error::TooManyVertices(vertex_order.len(), cap));
        }
        Ok(ToricInput {
            complex,
            vertex_order,
            cap,
        })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn vertex_order(&self) -> &[Vertex] {
        &self.vertex_order
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_order.len()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn subset_from_mask(&self, mask: u32) -> BTreeSet<Vertex> {
        self.vertex_order
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &v)| v)
            .collect()
    }
}

/// Maximal vertex supports of the degree-i jump loci, an antichain under
/// inclusion.
#[derive(Clone, Debug)]
pub struct CoordinateSupportFamily {
    pub degree: usize,
    pub coeffs: Coeffs,
    pub supports: Vec<BTreeSet<Vertex>>,
}

/// Restriction of the link of sigma to the vertices of W.
fn link_on_support(
    complex: &SimplicialComplex,
    sigma: &Face,
    w: &BTreeSet<Vertex>,
) -> Result<SimplicialComplex, Error> {
    Ok(complex.link(sigma)?.induced_unchecked(w))
}

/// Is some reduced homology group of the restricted link nonzero in a
/// degree within [-1, hi]?
fn link_nonzero_upto(
    complex: &SimplicialComplex,
    sigma: &Face,
    w: &BTreeSet<Vertex>,
    hi: i64,
    coeffs: Coeffs,
) -> Result<bool, Error> {
    if hi < -1 {
        return Ok(false);
    }
    let lk = link_on_support(complex, sigma, w)?;
    let h = lk.reduced_homology(coeffs)?;
    Ok((-1..=hi).any(|d| h.is_nonzero(d)))
}

fn support_qualifies(
    t: &ToricInput,
    w: &BTreeSet<Vertex>,
    i: usize,
    coeffs: Coeffs,
) -> Result<bool, Error> {
    let complement: BTreeSet<Vertex> = t
        .vertex_order
        .iter()
        .filter(|v| !w.contains(v))
        .copied()
        .collect();
    for sigma in t.complex.faces() {
        if !sigma.is_subset(&complement) {
            continue;
        }
        // need nonzero reduced homology in degree j - 1 - |sigma| for
        // some 1 <= j <= i
        let card = sigma.len() as i64;
        let hi = i as i64 - 1 - card;
        let lo = 1 - 1 - card; // j = 1
        if hi < -1 {
            continue;
        }
        let lk = link_on_support(&t.complex, &sigma, w)?;
        let h = lk.reduced_homology(coeffs)?;
        if (lo.max(-1)..=hi).any(|d| h.is_nonzero(d)) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Maximal vertex supports W whose coordinate subtorus (resp. subspace)
/// lies in the degree-i characteristic (resp. resonance) variety of T_L.
pub fn toric_supports(
    t: &ToricInput,
    i: usize,
    coeffs: Coeffs,
) -> Result<CoordinateSupportFamily, Error> {
    assert!(i >= 1, "degree must be at least 1");
    let n = t.num_vertices();
    let mut qualifying: Vec<BTreeSet<Vertex>> = Vec::new();
    // sweep larger supports first so the antichain prunes early
    let mut masks: Vec<u32> = (0..(1u32 << n)).collect();
    masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    for mask in masks {
        let w = t.subset_from_mask(mask);
        if qualifying.iter().any(|q| w.is_subset(q)) {
            continue;
        }
        if support_qualifies(t, &w, i, coeffs)? {
            qualifying.push(w);
        }
    }
    Ok(CoordinateSupportFamily {
        degree: i,
        coeffs,
        supports: qualifying,
    })
}

fn support_indices(t: &ToricInput, w: &BTreeSet<Vertex>) -> Vec<usize> {
    t.vertex_order
        .iter()
        .enumerate()
        .filter(|(_, v)| w.contains(v))
        .map(|(i, _)| i)
        .collect()
}

/// R^i(T_L, k) as a union of coordinate subspaces; the origin is always
/// present.
pub fn toric_resonance(
    t: &ToricInput,
    i: usize,
    coeffs: Coeffs,
) -> Result<SubspaceArrangement, Error> {
    let n = t.num_vertices();
    let fam = toric_supports(t, i, coeffs)?;
    let mut members = vec![RationalSubspace::zero(n)];
    for w in &fam.supports {
        members.push(RationalSubspace::coordinate_subspace(
            n,
            &support_indices(t, w),
        ));
    }
    Ok(SubspaceArrangement::new(n, members))
}

/// V^i(T_L, k) as a union of coordinate subtori through the identity.
pub fn toric_cv(t: &ToricInput, i: usize, coeffs: Coeffs) -> Result<VarietyDescription, Error> {
    let n = t.num_vertices();
    let fam = toric_supports(t, i, coeffs)?;
    let mut w = VarietyDescription::identity_only(n);
    for s in &fam.supports {
        let idx = support_indices(t, s);
        if idx.is_empty() {
            continue; // identity already present
        }
        w = w.with_torus(TranslatedTorus::subtorus(
            RationalSubspace::coordinate_subspace(n, &idx),
        ));
    }
    Ok(w)
}

/// Dwyer-Fried membership for toric complexes: the r-plane P survives
/// iff it misses every resonance subspace.
pub fn toric_omega_contains(
    t: &ToricInput,
    i: usize,
    r: usize,
    p: &RationalSubspace,
) -> Result<bool, Error> {
    if p.ambient_dim() != t.num_vertices() {
        return Err(Error::AmbientMismatch(t.num_vertices(), p.ambient_dim()));
    }
    if p.dim() != r {
        return Err(Error::LengthMismatch(r, p.dim()));
    }
    let res = toric_resonance(t, i, Coeffs::Q)?;
    for l in res.members() {
        if l.dim() == 0 {
            continue;
        }
        if sigma_r_contains(l, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// BNSR membership test for a right-angled Artin group: chi lies in
/// Sigma^i(G_L, k) iff every restricted link over the support of chi has
/// vanishing reduced homology through the prescribed window.  Over Z,
/// vanishing means rank zero and no torsion.
pub fn raag_sigma_contains(
    t: &ToricInput,
    chi: &[Rat],
    i: usize,
    coeffs: Coeffs,
) -> Result<bool, Error> {
    if !t.complex.is_flag() {
        return Err(Error::NotFlag);
    }
    if chi.len() != t.num_vertices() {
        return Err(Error::LengthMismatch(t.num_vertices(), chi.len()));
    }
    if chi.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroCharacter);
    }
    let w: BTreeSet<Vertex> = t
        .vertex_order
        .iter()
        .zip(chi.iter())
        .filter(|(_, x)| !x.is_zero())
        .map(|(&v, _)| v)
        .collect();
    let complement: BTreeSet<Vertex> = t
        .vertex_order
        .iter()
        .filter(|v| !w.contains(v))
        .copied()
        .collect();
    for sigma in t.complex.faces() {
        if !sigma.is_subset(&complement) {
            continue;
        }
        let dim_sigma = sigma.len() as i64 - 1; // dim of the empty simplex is -1
        let hi = i as i64 - dim_sigma - 2;
        if link_nonzero_upto(&t.complex, &sigma, &w, hi, coeffs)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership of a rational character in V^i(T_L, k): the set of
/// coordinates different from 1 must fit inside one qualifying support.
pub fn toric_cv_contains_point(
    t: &ToricInput,
    i: usize,
    coeffs: Coeffs,
    rho: &[Rat],
) -> Result<bool, Error> {
    if rho.len() != t.num_vertices() {
        return Err(Error::LengthMismatch(t.num_vertices(), rho.len()));
    }
    if rho.iter().any(|x| x.is_zero()) {
        return Err(Error::ZeroCoordinate);
    }
    let supp: BTreeSet<Vertex> = t
        .vertex_order
        .iter()
        .zip(rho.iter())
        .filter(|(_, x)| !(*x - rat_i(1)).is_zero())
        .map(|(&v, _)| v)
        .collect();
    if supp.is_empty() {
        return Ok(true); // the identity sits in every layer of the filtration
    }
    let fam = toric_supports(t, i, coeffs)?;
    Ok(fam.supports.iter().any(|w| supp.is_subset(w)))
}

/// The standard presentation of G_L: one generator per vertex, one
/// commutator relator per edge.
pub fn raag_presentation(t: &ToricInput) -> GroupPresentation {
    let names: Vec<String> = t.vertex_order.iter().map(|v| format!("x{v}")).collect();
    let mut relators = Vec::new();
    for (u, v) in t.complex.edges() {
        let a = t.vertex_order.iter().position(|&x| x == u).unwrap() as i32 + 1;
        let b = t.vertex_order.iter().position(|&x| x == v).unwrap() as i32 + 1;
        relators.push(vec![a, b, -a, -b]);
    }
    GroupPresentation::new(names, relators).expect("valid commutator relators")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat_i;
    use crate::fox::cv1_contains;
    use crate::simplicial::{face, rp2_complex};
    use crate::varieties::{tau1, rat_vec};

    fn two_points() -> ToricInput {
        ToricInput::new(SimplicialComplex::build([face(&[1]), face(&[2])])).unwrap()
    }

    fn edge() -> ToricInput {
        ToricInput::new(SimplicialComplex::build([face(&[1, 2])])).unwrap()
    }

    fn four_cycle() -> ToricInput {
        ToricInput::new(SimplicialComplex::build([
            face(&[1, 2]),
            face(&[2, 3]),
            face(&[3, 4]),
            face(&[1, 4]),
        ]))
        .unwrap()
    }

    fn star(leaves: u32) -> ToricInput {
        ToricInput::new(SimplicialComplex::build(
            (1..=leaves).map(|l| face(&[0, l])),
        ))
        .unwrap()
    }

    #[test]
    fn supports_examples() {
        let fam = toric_supports(&two_points(), 1, Coeffs::Q).unwrap();
        assert_eq!(fam.supports, vec![face(&[1, 2])]);

        let fam = toric_supports(&edge(), 1, Coeffs::Q).unwrap();
        assert_eq!(fam.supports, vec![face(&[])]);

        let fam = toric_supports(&four_cycle(), 1, Coeffs::Q).unwrap();
        let mut got = fam.supports.clone();
        got.sort();
        assert_eq!(got, vec![face(&[1, 3]), face(&[2, 4])]);
    }

    #[test]
    fn resonance_examples() {
        let res = toric_resonance(&star(3), 1, Coeffs::Q).unwrap();
        assert_eq!(res.members().len(), 1);
        assert_eq!(res.members()[0].dim(), 3);
        // leaves are coordinates 1..3 in vertex order 0,1,2,3
        assert!(res.members()[0]
            .equals(&RationalSubspace::coordinate_subspace(4, &[1, 2, 3])));

        let res = toric_resonance(&edge(), 1, Coeffs::Q).unwrap();
        assert_eq!(res.members().len(), 1);
        assert_eq!(res.members()[0].dim(), 0);

        let res = toric_resonance(&two_points(), 1, Coeffs::Q).unwrap();
        assert_eq!(res.members().len(), 1);
        assert_eq!(res.members()[0].dim(), 2);
    }

    #[test]
    fn straightness_on_small_complexes() {
        for t in [two_points(), edge(), four_cycle(), star(3)] {
            for i in 1..=2 {
                let cv = toric_cv(&t, i, Coeffs::Q).unwrap();
                let res = toric_resonance(&t, i, Coeffs::Q).unwrap();
                assert!(tau1(&cv).equals(&res), "straightness at degree {i}");
            }
        }
    }

    #[test]
    fn omega_examples() {
        let t = star(3);
        let diag = RationalSubspace::span_i64(4, &[vec![1, 1, 1, 1]]);
        assert!(toric_omega_contains(&t, 1, 1, &diag).unwrap());
        let leaf = RationalSubspace::span_i64(4, &[vec![0, 1, 0, 0]]);
        assert!(!toric_omega_contains(&t, 1, 1, &leaf).unwrap());

        let t = edge();
        let any = RationalSubspace::span_i64(2, &[vec![3, 5]]);
        assert!(toric_omega_contains(&t, 1, 1, &any).unwrap());
    }

    #[test]
    fn sigma_f2_and_z2() {
        let t = two_points();
        for chi in [
            rat_vec(&[1, 1]),
            rat_vec(&[1, 0]),
            rat_vec(&[0, -2]),
            rat_vec(&[3, -5]),
        ] {
            assert!(!raag_sigma_contains(&t, &chi, 1, Coeffs::Z).unwrap());
        }

        let t = edge();
        for chi in [rat_vec(&[1, 1]), rat_vec(&[1, 0]), rat_vec(&[2, -7])] {
            for i in 1..=2 {
                assert!(raag_sigma_contains(&t, &chi, i, Coeffs::Z).unwrap());
            }
        }

        assert!(matches!(
            raag_sigma_contains(&t, &rat_vec(&[0, 0]), 1, Coeffs::Z),
            Err(Error::ZeroCharacter)
        ));
        let hollow_triangle = ToricInput::new(SimplicialComplex::build([
            face(&[1, 2]),
            face(&[2, 3]),
            face(&[1, 3]),
        ]))
        .unwrap();
        assert!(matches!(
            raag_sigma_contains(&hollow_triangle, &rat_vec(&[1, 1, 1]), 1, Coeffs::Z),
            Err(Error::NotFlag)
        ));
    }

    #[test]
    fn sigma_rp2_torsion_gap() {
        let (sd, _) = rp2_complex().barycentric_subdivision();
        assert!(sd.is_flag());
        let t = ToricInput::with_cap(sd, 40).unwrap();
        let chi = vec![rat_i(1); t.num_vertices()];
        assert!(raag_sigma_contains(&t, &chi, 2, Coeffs::Q).unwrap());
        assert!(!raag_sigma_contains(&t, &chi, 2, Coeffs::Z).unwrap());
    }

    #[test]
    fn presentation_examples() {
        let p = raag_presentation(&edge());
        assert_eq!(p.num_generators(), 2);
        assert_eq!(p.relators(), &[vec![1, 2, -1, -2]]);

        let p = raag_presentation(&two_points());
        assert!(p.relators().is_empty());

        let path3 = ToricInput::new(SimplicialComplex::build([face(&[1, 2]), face(&[2, 3])]))
            .unwrap();
        assert_eq!(raag_presentation(&path3).relators().len(), 2);
    }

    #[test]
    fn fox_oracle_spot_check() {
        // V^1 membership through Fox calculus agrees with the coordinate
        // subtorus description on the four-cycle
        let t = four_cycle();
        let p = raag_presentation(&t);
        let cv = toric_cv(&t, 1, Coeffs::Q).unwrap();
        let points: [[i64; 4]; 4] = [
            [1, 1, 1, 1],
            [2, 1, 3, 1],
            [1, 5, 1, -2],
            [2, 3, 4, 5],
        ];
        for pt in points {
            let rho: Vec<_> = pt.iter().map(|&x| rat_i(x)).collect();
            let via_fox = cv1_contains(&p, &rho, 1).unwrap();
            // multiplicative membership in a union of coordinate subtori:
            // all coordinates off the support must be 1
            let via_toric = point_in_cv(&cv, &rho);
            assert_eq!(via_fox, via_toric, "at {pt:?}");
        }
    }

    /// Membership of a rational point in a union of coordinate subtori
    /// and the identity.
    fn point_in_cv(cv: &VarietyDescription, rho: &[Rat]) -> bool {
        let off_support_one = |dir: &RationalSubspace| {
            (0..rho.len()).all(|c| {
                let mut unit = vec![Rat::zero(); rho.len()];
                unit[c] = rat_i(1);
                dir.contains_vector(&unit) || rho[c] == rat_i(1)
            })
        };
        cv.points
            .iter()
            .any(|_| rho.iter().all(|x| *x == rat_i(1)))
            || cv.tori.iter().any(|t| off_support_one(t.direction()))
    }
}
