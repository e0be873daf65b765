//! Randomized property suites over the public API.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use proptest::prelude::*;

use jumploci::arrangements::{generic_section, incidence_points, os_algebra_deg2, res1_membership};
use jumploci::exactlin::{rat, rat_i, rat_rank, smith_form, Int, Mat, Rat, ZMat};
use jumploci::golden;
use jumploci::resonance::{aomoto, exterior_algebra, resonance_contains, Field};
use jumploci::simplicial::{face, Coeffs, Face, SimplicialComplex};
use jumploci::varieties::{
    omega_contains, sigma_r_contains, tau1, RationalSubspace, TranslatedTorus, VarietyDescription,
};

fn int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = ZMat> {
    proptest::collection::vec(-6i64..=6, rows * cols)
        .prop_map(move |v| Mat::from_fn(rows, cols, |i, j| Int::from(v[i * cols + j])))
}

fn rat_vec_strategy(n: usize) -> impl Strategy<Value = Vec<Rat>> {
    proptest::collection::vec(-4i64..=4, n).prop_map(|v| v.iter().map(|&x| rat_i(x)).collect())
}

fn subspace_strategy(n: usize, vecs: usize) -> impl Strategy<Value = RationalSubspace> {
    proptest::collection::vec(-3i64..=3, n * vecs).prop_map(move |v| {
        let basis: Vec<Vec<Rat>> = (0..vecs)
            .map(|r| (0..n).map(|c| rat_i(v[r * n + c])).collect())
            .collect();
        RationalSubspace::span(n, &basis)
    })
}

fn complex_strategy() -> impl Strategy<Value = SimplicialComplex> {
    (2u32..=6).prop_flat_map(|n| {
        proptest::collection::vec(
            proptest::collection::btree_set(0..n, 2..=3.min(n as usize)),
            1..=6,
        )
        .prop_map(move |extra| {
            let mut faces: Vec<Face> = (0..n).map(|v| face(&[v])).collect();
            faces.extend(extra);
            SimplicialComplex::build(faces)
        })
    })
}

proptest! {
    #[test]
    fn snf_diagonal_divisibility_chain(m in (1usize..=4, 1usize..=5).prop_flat_map(|(r, c)| int_matrix(r, c))) {
        let sf = smith_form(&m);
        for w in sf.diag.windows(2) {
            if !w[1].is_zero() {
                prop_assert!(!w[0].is_zero());
                prop_assert_eq!(&w[1] % &w[0], Int::zero());
            }
        }
    }

    #[test]
    fn rank_is_transpose_invariant(m in (1usize..=4, 1usize..=5).prop_flat_map(|(r, c)| int_matrix(r, c))) {
        let q = m.map(|x| Rat::from(x.clone()));
        prop_assert_eq!(rat_rank(&q), rat_rank(&q.transpose()));
    }

    #[test]
    fn euler_characteristic_matches_homology(c in complex_strategy()) {
        let top = c.dim().unwrap_or(-1);
        let mut from_faces = 0i64;
        let h = c.reduced_homology(Coeffs::Q).unwrap();
        let mut from_homology = 1i64;
        for d in 0..=top {
            let sign = if d % 2 == 0 { 1 } else { -1 };
            from_faces += sign * c.faces_of_dim(d).len() as i64;
            from_homology += sign * h.rank(d) as i64;
        }
        prop_assert_eq!(from_faces, from_homology);
    }

    #[test]
    fn barycentric_subdivisions_are_flag(c in complex_strategy()) {
        let (sd, _) = c.barycentric_subdivision();
        prop_assert!(sd.is_flag());
    }

    #[test]
    fn homology_rank_agrees_over_q_and_large_prime(c in complex_strategy()) {
        let hq = c.reduced_homology(Coeffs::Q).unwrap();
        let hp = c.reduced_homology(Coeffs::Fp(1000003)).unwrap();
        for d in -1..=c.dim().unwrap_or(-1) {
            prop_assert_eq!(hq.rank(d), hp.rank(d));
        }
    }

    #[test]
    fn cone_of_subtorus_is_its_direction(l in subspace_strategy(4, 2)) {
        let w = VarietyDescription::new(4).with_torus(TranslatedTorus::subtorus(l.clone()));
        let cone = tau1(&w);
        prop_assert_eq!(cone.members().len(), 1);
        prop_assert!(cone.members()[0].equals(&l));
    }

    #[test]
    fn cones_combine_as_unions(
        l1 in subspace_strategy(4, 2),
        l2 in subspace_strategy(4, 1),
    ) {
        let w1 = VarietyDescription::new(4).with_torus(TranslatedTorus::subtorus(l1.clone()));
        let w2 = VarietyDescription::new(4).with_torus(TranslatedTorus::subtorus(l2.clone()));
        let combined = VarietyDescription::new(4)
            .with_torus(TranslatedTorus::subtorus(l1))
            .with_torus(TranslatedTorus::subtorus(l2));
        let cu = tau1(&combined);
        for part in [tau1(&w1), tau1(&w2)] {
            for l in part.members() {
                prop_assert!(cu.members().iter().any(|m| m.contains_subspace(l)));
            }
        }
    }

    #[test]
    fn incidence_matches_intersection_dimension(
        l in subspace_strategy(4, 2),
        p in subspace_strategy(4, 2),
    ) {
        prop_assume!(l.dim() >= 1 && p.dim() >= 1);
        let hit = sigma_r_contains(&l, &p).unwrap();
        prop_assert_eq!(hit, l.intersection_dim(&p) >= 1);
    }

    #[test]
    fn meeting_a_cone_component_excludes_the_plane(
        l in subspace_strategy(4, 2),
        p in subspace_strategy(4, 2),
    ) {
        prop_assume!(l.dim() >= 1 && p.dim() >= 1);
        let w = VarietyDescription::new(4).with_torus(TranslatedTorus::subtorus(l.clone()));
        if sigma_r_contains(&l, &p).unwrap() {
            prop_assert!(!omega_contains(&w, &p).unwrap());
        }
    }

    #[test]
    fn aomoto_differentials_compose_to_zero(a in rat_vec_strategy(3)) {
        prop_assume!(!a.iter().all(|x| x.is_zero()));
        let alg = exterior_algebra(Field::Q, 3, 3).unwrap();
        let cx = aomoto(&alg, &a).unwrap();
        for w in cx.maps.windows(2) {
            prop_assert!(w[1].mul(&w[0]).is_zero());
        }
    }

    #[test]
    fn resonance_depth_filtration_descends(a in rat_vec_strategy(3), i in 1usize..=2) {
        prop_assume!(!a.iter().all(|x| x.is_zero()));
        let alg = exterior_algebra(Field::Q, 3, 3).unwrap();
        if resonance_contains(&alg, &a, i, 2).unwrap() {
            prop_assert!(resonance_contains(&alg, &a, i, 1).unwrap());
        }
    }

    #[test]
    fn resonance_is_scale_invariant(a in rat_vec_strategy(3), i in 1usize..=2) {
        prop_assume!(!a.iter().all(|x| x.is_zero()));
        let alg = exterior_algebra(Field::Q, 3, 3).unwrap();
        let scaled: Vec<Rat> = a.iter().map(|x| x * rat(-5, 3)).collect();
        prop_assert_eq!(
            resonance_contains(&alg, &a, i, 1).unwrap(),
            resonance_contains(&alg, &scaled, i, 1).unwrap()
        );
    }

    #[test]
    fn braid_betti_two_counts_weighted_points(seed in 0u64..=30) {
        let a = golden::braid_arrangement();
        let (planar, _) = generic_section(&a, seed.wrapping_add(1), 400).unwrap();
        let c = incidence_points(&planar).unwrap();
        let alg = os_algebra_deg2(&c, Field::Q).unwrap();
        let weighted: usize = c.points.iter().map(|(m, _)| m - 1).sum();
        prop_assert_eq!(alg.dims()[2], weighted);
        prop_assert_eq!(alg.dims()[2], 11);
    }

    #[test]
    fn resonance_lives_on_the_great_hyperplane(v in rat_vec_strategy(6)) {
        let total = v.iter().fold(Rat::zero(), |s, x| s + x);
        prop_assume!(!total.is_zero());
        let a = golden::braid_arrangement();
        let (planar, _) = generic_section(&a, 1, 400).unwrap();
        let c = incidence_points(&planar).unwrap();
        prop_assert!(!res1_membership(&c, &v).unwrap());
    }
}

#[test]
fn graph_census_sizes() {
    // independent cross-check of the counts the acceptance sweeps rely on
    let mut counts = Vec::new();
    for n in 1..=5usize {
        counts.push(census(n));
    }
    assert_eq!(counts, vec![1, 2, 4, 11, 34]);
}

fn census(n: usize) -> usize {
    use itertools::Itertools;
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((i, j));
        }
    }
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let canon = perms
            .iter()
            .map(|p| {
                let mut m = 0u64;
                for (b, (i, j)) in pairs.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        let (a, c) = (p[*i].min(p[*j]), p[*i].max(p[*j]));
                        let idx = pairs.iter().position(|&q| q == (a, c)).unwrap();
                        m |= 1 << idx;
                    }
                }
                m
            })
            .min()
            .unwrap();
        seen.insert(canon);
    }
    seen.len()
}

#[test]
fn ones_vector_spans_no_resonance() {
    // the all-ones direction is off the great hyperplane, hence never
    // resonant, for every seeded section
    let a = golden::braid_arrangement();
    for seed in 0..10u64 {
        let (planar, _) = generic_section(&a, seed.wrapping_add(1), 400).unwrap();
        let c = incidence_points(&planar).unwrap();
        let ones = vec![Rat::one(); 6];
        assert!(!res1_membership(&c, &ones).unwrap());
    }
}
