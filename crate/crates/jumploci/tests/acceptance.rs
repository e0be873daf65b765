//! End-to-end acceptance checks, one test per criterion.  Each prints a
//! single pass/fail line so the whole gate can be read off the test log.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use jumploci::arrangements::res1_membership;
use jumploci::exactlin::{rat, rat_i, rat_rank, smith_form, Int, Mat, Rat, ZMat};
use jumploci::fox::{
    cv1_contains, fox_derivative, gr_add, gr_mul, gr_single, gr_word_mul, gr_zero,
};
use jumploci::golden;
use jumploci::raag::{
    raag_presentation, raag_sigma_contains, toric_cv_contains_point, toric_resonance, ToricInput,
};
use jumploci::resonance::{aomoto, exterior_algebra, resonance_contains, Field};
use jumploci::simplicial::{face, Coeffs, Face, SimplicialComplex};
use jumploci::varieties::{
    omega_contains, sigma_r_contains, sphere_locus_contains, tau1, RationalSubspace,
    TranslatedTorus, VarietyDescription,
};

fn verdict(n: usize, desc: &str, ok: bool) {
    println!("criterion {n}: {} - {desc}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n} failed: {desc}");
}

fn scenario_passes(name: &str) -> bool {
    match golden::run_scenario(name, 0) {
        Ok(rep) => rep.all_passed,
        Err(e) => {
            eprintln!("{name}: {e}");
            false
        }
    }
}

#[test]
fn criterion_01_two_generator_group() {
    verdict(
        1,
        "one-relator probe set and rank-1 Omega membership",
        scenario_passes("ex51"),
    );
}

#[test]
fn criterion_02_translated_torus_gap() {
    verdict(
        2,
        "trivial tangent cone yet empty rank-2 Omega set",
        scenario_passes("ex53"),
    );
}

#[test]
fn criterion_03_two_qualifying_planes() {
    verdict(
        3,
        "exactly two qualifying 2-planes in the height-3 enumeration",
        scenario_passes("ex56"),
    );
}

#[test]
fn criterion_04_subdivided_projective_plane() {
    verdict(
        4,
        "Sigma^2 over Q but not over Z on the subdivided projective plane",
        scenario_passes("ex66"),
    );
}

/// All isomorphism classes of simple graphs on exactly n labeled
/// vertices, one representative edge list each.  Canonical form is the
/// minimum adjacency bitmask over all vertex permutations.
fn graphs_up_to_iso(n: usize) -> Vec<Vec<(u32, u32)>> {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((i, j));
        }
    }
    let perms = permutations(n);
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    let mut out = Vec::new();
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
        if seen.insert(canon) {
            out.push(
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| canon >> b & 1 == 1)
                    .map(|(_, &(i, j))| (i as u32, j as u32))
                    .collect(),
            );
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).permutations(n).collect()
}

fn graph_flag_complex(n: usize, edges: &[(u32, u32)]) -> SimplicialComplex {
    let mut faces: Vec<Face> = (0..n as u32).map(|v| face(&[v])).collect();
    for &(u, v) in edges {
        faces.push(face(&[u, v]));
    }
    SimplicialComplex::build(faces).flag_complex()
}

fn seeded_character(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rat> {
    let pool = [
        rat_i(1),
        rat_i(1),
        rat_i(-1),
        rat_i(2),
        rat(1, 2),
        rat_i(3),
        rat(-2, 3),
    ];
    (0..n).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect()
}

#[test]
fn criterion_05_toric_cv_vs_fox_oracle() {
    let graphs = graphs_up_to_iso(5);
    let mut ok = graphs.len() == 34;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    'outer: for edges in &graphs {
        let t = ToricInput::new(graph_flag_complex(5, edges)).unwrap();
        let pres = raag_presentation(&t);
        for _ in 0..50 {
            let rho = seeded_character(&mut rng, 5);
            let via_links = toric_cv_contains_point(&t, 1, Coeffs::Q, &rho).unwrap();
            let via_fox = cv1_contains(&pres, &rho, 1).unwrap();
            if via_links != via_fox {
                eprintln!("disagreement on {edges:?} at {rho:?}");
                ok = false;
                break 'outer;
            }
        }
    }
    verdict(
        5,
        "link-homology membership matches the free-calculus oracle on all 34 five-vertex graphs",
        ok,
    );
}

#[test]
fn criterion_06_sigma_vs_resonance_sphere() {
    let mut total = 0usize;
    let mut ok = true;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    'outer: for n in 1..=5usize {
        for edges in graphs_up_to_iso(n) {
            total += 1;
            let t = ToricInput::new(graph_flag_complex(n, &edges)).unwrap();
            let res = toric_resonance(&t, 1, Coeffs::Z).unwrap();
            for _ in 0..50 {
                let mut chi: Vec<Rat> =
                    (0..n).map(|_| rat_i(rng.gen_range(-2..=2))).collect();
                if chi.iter().all(|x| x.is_zero()) {
                    chi[0] = Rat::one();
                }
                let in_sigma = raag_sigma_contains(&t, &chi, 1, Coeffs::Z).unwrap();
                let on_locus = sphere_locus_contains(&res, &chi).unwrap();
                if in_sigma != on_locus {
                    continue;
                }
                eprintln!("disagreement on {edges:?} at {chi:?}");
                ok = false;
                break 'outer;
            }
        }
    }
    verdict(
        6,
        "degree-one Sigma equals the resonance-sphere complement on all 52 graphs with at most 5 vertices",
        ok && total == 52,
    );
}

#[test]
fn criterion_07_configuration_space() {
    verdict(
        7,
        "quadric oracle agreement and plane exclusions for the configuration algebra",
        scenario_passes("ex71"),
    );
}

#[test]
fn criterion_08_sectioned_braid() {
    verdict(
        8,
        "braid section: 4 triple points, 4 local planes, recovered non-local plane",
        scenario_passes("braid"),
    );
}

#[test]
fn criterion_09_pencils() {
    let mut ok = true;
    for n in 3..=5usize {
        match golden::pencil_scenario(n, 0) {
            Ok(rep) => ok &= rep.all_passed,
            Err(e) => {
                eprintln!("pencil n={n}: {e}");
                ok = false;
            }
        }
    }
    verdict(
        9,
        "pencil arrangements: single component, empty rank-2 bound, Sigma verdicts",
        ok,
    );
}

#[test]
fn criterion_10_strictness_witness() {
    verdict(
        10,
        "translated component yields a strictness witness plane and the Sigma-bound gap",
        scenario_passes("deletedb3"),
    );
}

#[test]
fn criterion_11_property_suites() {
    let mut ok = true;
    for (name, suite) in [
        ("exactlin", exactlin_properties as fn() -> bool),
        ("simplicial", simplicial_properties),
        ("varieties", varieties_properties),
        ("fox", fox_properties),
        ("resonance", resonance_properties),
        ("arrangements", arrangement_properties),
    ] {
        let start = std::time::Instant::now();
        let passed = suite();
        eprintln!("  {name}: {} ({:.1?})", if passed { "ok" } else { "failed" }, start.elapsed());
        ok &= passed;
    }
    verdict(11, "seeded property suites across all six core modules", ok);
}

fn exactlin_properties() -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(110);
    for _ in 0..100 {
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=5);
        let m: ZMat = Mat::from_fn(rows, cols, |_, _| Int::from(rng.gen_range(-6i64..=6)));
        let sf = smith_form(&m);
        for w in sf.diag.windows(2) {
            if !w[1].is_zero() && (&w[1] % &w[0]) != Int::zero() {
                eprintln!("divisibility chain broken: {:?}", sf.diag);
                return false;
            }
        }
        let q: Mat<Rat> = m.map(|x| Rat::from(x.clone()));
        if rat_rank(&q) != rat_rank(&q.transpose()) {
            eprintln!("rank duality broken");
            return false;
        }
    }
    true
}

fn random_complex(rng: &mut ChaCha8Rng) -> SimplicialComplex {
    let n = rng.gen_range(2u32..=6);
    let mut faces: Vec<Face> = (0..n).map(|v| face(&[v])).collect();
    for _ in 0..rng.gen_range(1..=6) {
        let k = rng.gen_range(2usize..=3).min(n as usize);
        let mut f = BTreeSet::new();
        while f.len() < k {
            f.insert(rng.gen_range(0..n));
        }
        faces.push(f);
    }
    SimplicialComplex::build(faces)
}

fn simplicial_properties() -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(111);
    for _ in 0..100 {
        let c = random_complex(&mut rng);
        let top = c.dim().unwrap_or(-1);
        let mut euler_faces = 0i64;
        for d in 0..=top {
            let sign = if d % 2 == 0 { 1 } else { -1 };
            euler_faces += sign * c.faces_of_dim(d).len() as i64;
        }
        let h = c.reduced_homology(Coeffs::Q).unwrap();
        let mut euler_homology = 1i64;
        for d in 0..=top {
            let sign = if d % 2 == 0 { 1 } else { -1 };
            euler_homology += sign * h.rank(d) as i64;
        }
        if euler_faces != euler_homology {
            eprintln!("Euler characteristic mismatch: {euler_faces} vs {euler_homology}");
            return false;
        }
        let (sd, _) = c.barycentric_subdivision();
        if !sd.is_flag() {
            eprintln!("subdivision is not flag");
            return false;
        }
    }
    true
}

fn random_subspace(rng: &mut ChaCha8Rng, n: usize, vecs: usize) -> RationalSubspace {
    let basis: Vec<Vec<Rat>> = (0..vecs)
        .map(|_| (0..n).map(|_| rat_i(rng.gen_range(-3..=3))).collect())
        .collect();
    RationalSubspace::span(n, &basis)
}

fn varieties_properties() -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(112);
    let n = 4;
    for _ in 0..100 {
        let l1 = random_subspace(&mut rng, n, 2);
        let l2 = random_subspace(&mut rng, n, 1);

        // the cone of a plain subtorus is the direction itself
        let w1 = VarietyDescription::new(n).with_torus(TranslatedTorus::subtorus(l1.clone()));
        let c1 = tau1(&w1);
        if c1.members().len() != 1 || !c1.members()[0].equals(&l1) {
            eprintln!("subtorus cone mismatch");
            return false;
        }

        // cones combine as unions: every component of each part embeds
        let w2 = VarietyDescription::new(n).with_torus(TranslatedTorus::subtorus(l2.clone()));
        let combined = VarietyDescription::new(n)
            .with_torus(TranslatedTorus::subtorus(l1.clone()))
            .with_torus(TranslatedTorus::subtorus(l2.clone()));
        let cu = tau1(&combined);
        for part in [&tau1(&w1), &tau1(&w2)] {
            for l in part.members() {
                if !cu.members().iter().any(|m| m.contains_subspace(l)) {
                    eprintln!("union law broken");
                    return false;
                }
            }
        }

        // incidence test agrees with the exact intersection dimension
        let p = random_subspace(&mut rng, n, 2);
        if l1.dim() >= 1 && p.dim() >= 1 {
            let hit = sigma_r_contains(&l1, &p).unwrap();
            if hit != (l1.intersection_dim(&p) >= 1) {
                eprintln!("incidence test mismatch");
                return false;
            }
            // a positive-dimensional meeting excludes the plane
            if hit && omega_contains(&combined, &p).unwrap() {
                eprintln!("containment violated: met component yet inside Omega");
                return false;
            }
        }
    }
    true
}

fn random_word(rng: &mut ChaCha8Rng, g: i32) -> Vec<i32> {
    let len = rng.gen_range(0..=6);
    (0..len)
        .map(|_| {
            let x = rng.gen_range(1..=g);
            if rng.gen_bool(0.5) {
                x
            } else {
                -x
            }
        })
        .collect()
}

fn fox_properties() -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(113);
    let g = 3;
    for _ in 0..100 {
        let u = random_word(&mut rng, g);
        let v = random_word(&mut rng, g);
        for j in 1..=g as usize {
            // product rule
            let lhs = fox_derivative(&jumploci::fox::word_mul(&u, &v), j);
            let rhs = gr_add(&fox_derivative(&u, j), &gr_word_mul(&u, &fox_derivative(&v, j)));
            if lhs != rhs {
                eprintln!("product rule broken on {u:?} {v:?}");
                return false;
            }
        }
        // fundamental identity: sum_j d_j(w) (x_j - 1) = w - 1
        let mut total = gr_zero();
        for j in 1..=g as usize {
            let xj_minus_1 = gr_add(
                &gr_single(vec![j as i32], Rat::one()),
                &gr_single(vec![], -Rat::one()),
            );
            total = gr_add(&total, &gr_mul(&fox_derivative(&u, j), &xj_minus_1));
        }
        let expected = gr_add(
            &gr_single(jumploci::fox::free_reduce(&u), Rat::one()),
            &gr_single(vec![], -Rat::one()),
        );
        if total != expected {
            eprintln!("fundamental identity broken on {u:?}");
            return false;
        }
    }
    true
}

fn resonance_properties() -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(114);
    let alg = exterior_algebra(Field::Q, 3, 3).unwrap();
    for _ in 0..100 {
        let a: Vec<Rat> = (0..3).map(|_| rat_i(rng.gen_range(-4..=4))).collect();
        if a.iter().all(|x| x.is_zero()) {
            continue;
        }
        // two consecutive multiplications by a vanish
        let cx = aomoto(&alg, &a).unwrap();
        for w in cx.maps.windows(2) {
            if !w[1].mul(&w[0]).is_zero() {
                eprintln!("d^2 != 0 at {a:?}");
                return false;
            }
        }
        // depth descent and invariance under scaling
        for i in 1..=2usize {
            if resonance_contains(&alg, &a, i, 2).unwrap()
                && !resonance_contains(&alg, &a, i, 1).unwrap()
            {
                eprintln!("depth filtration broken at {a:?}");
                return false;
            }
            let scaled: Vec<Rat> = a.iter().map(|x| x * rat(3, 2)).collect();
            if resonance_contains(&alg, &a, i, 1).unwrap()
                != resonance_contains(&alg, &scaled, i, 1).unwrap()
            {
                eprintln!("scaling invariance broken at {a:?}");
                return false;
            }
        }
    }
    true
}

fn arrangement_properties() -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(115);
    let rep = golden::run_scenario("braid", 0).unwrap();
    if !rep.all_passed {
        return false;
    }
    let a = golden::braid_arrangement();
    let (planar, _) = jumploci::arrangements::generic_section(&a, 1, 400).unwrap();
    let c = jumploci::arrangements::incidence_points(&planar).unwrap();
    // second Betti number counts multiple points weighted by multiplicity
    let alg = jumploci::arrangements::os_algebra_deg2(&c, Field::Q).unwrap();
    let weighted: usize = c.points.iter().map(|(m, _)| m - 1).sum();
    if alg.dims()[2] != weighted {
        eprintln!("deletion-restriction count broken");
        return false;
    }
    // resonance confined to the great hyperplane
    for _ in 0..100 {
        let v: Vec<Rat> = (0..6).map(|_| rat_i(rng.gen_range(-4..=4))).collect();
        let total = v.iter().fold(Rat::zero(), |s, x| s + x);
        if total.is_zero() {
            continue;
        }
        if res1_membership(&c, &v).unwrap() {
            eprintln!("resonant point off the great hyperplane: {v:?}");
            return false;
        }
    }
    true
}
