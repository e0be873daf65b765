//! Degree-one jump loci of complex hyperplane arrangements: generic
//! planar sections with certified incidence data, Orlik-Solomon algebras
//! through degree 2, local resonance components, Omega/Sigma bounds, the
//! negative-octant lower bound, and the cone/decone relation.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::exactlin::{rat_i, rat_rank, Mat, Rat};
use crate::resonance::{exterior_mod_ideal, resonance_contains, Field, GradedAlgebra};
use crate::varieties::{
    sigma_r_contains, sphere_locus_contains, RationalSubspace, SubspaceArrangement,
};

/// Central arrangement given by the linear forms of its hyperplanes.
#[derive(Clone, Debug)]
pub struct Arrangement {
    ambient: usize,
    forms: Vec<Vec<Rat>>,
}

impl Arrangement {
    pub fn new(forms: Vec<Vec<Rat>>) -> Result<Self, Error> {
        let Some(first) = forms.first() else {
            return Err(Error::Parse("arrangement needs at least one form".into()));
        };
        let ambient = first.len();
        for (i, f) in forms.iter().enumerate() {
            if f.len() != ambient {
                return Err(Error::LengthMismatch(ambient, f.len()));
            }
            if f.iter().all(|x| x.is_zero()) {
                return Err(Error::Parse(format!("form {i} is zero")));
            }
        }
        for i in 0..forms.len() {
            for j in (i + 1)..forms.len() {
                if proportional(&forms[i], &forms[j]) {
                    return Err(Error::Parse(format!("forms {i} and {j} are proportional")));
                }
            }
        }
        Ok(Arrangement { ambient, forms })
    }

    pub fn from_i64(forms: &[Vec<i64>]) -> Result<Self, Error> {
        Self::new(
            forms
                .iter()
                .map(|f| f.iter().map(|&x| rat_i(x)).collect())
                .collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn num_hyperplanes(&self) -> usize {
        self.forms.len()
    }

    pub fn forms(&self) -> &[Vec<Rat>] {
        &self.forms
    }

    pub fn rank(&self) -> usize {
        rat_rank(&Mat::from_fn(self.forms.len(), self.ambient, |i, j| {
            self.forms[i][j].clone()
        }))
    }

    /// Rank-2 flats of the intersection lattice: for each codimension-2
    /// subspace met by at least two hyperplanes, the set of hyperplanes
    /// containing it.
    pub fn rank2_flats(&self) -> Vec<BTreeSet<usize>> {
        let n = self.forms.len();
        let mut flats: Vec<BTreeSet<usize>> = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if flats.iter().any(|f| f.contains(&i) && f.contains(&j)) {
                    continue;
                }
                // hyperplanes through ker(a_i) cap ker(a_j) are those
                // whose form lies in span{a_i, a_j}
                let mut members = BTreeSet::new();
                for (k, f) in self.forms.iter().enumerate() {
                    let m = Mat::from_rows(vec![
                        self.forms[i].clone(),
                        self.forms[j].clone(),
                        f.clone(),
                    ]);
                    if rat_rank(&m) == 2 {
                        members.insert(k);
                    }
                }
                flats.push(members);
            }
        }
        flats
    }
}

fn proportional(a: &[Rat], b: &[Rat]) -> bool {
    let m = Mat::from_rows(vec![a.to_vec(), b.to_vec()]);
    rat_rank(&m) <= 1
}

/// Affine line arrangement in the plane; each line is a x + b y + c = 0.
#[derive(Clone, Debug)]
pub struct PlanarArrangement {
    lines: Vec<[Rat; 3]>,
}

impl PlanarArrangement {
    pub fn new(lines: Vec<[Rat; 3]>) -> Result<Self, Error> {
        for (i, l) in lines.iter().enumerate() {
            if l[0].is_zero() && l[1].is_zero() {
                return Err(Error::Parse(format!("line {i} has zero direction part")));
            }
        }
        for i in 0..lines.len() {
            for j in (i + 1)..lines.len() {
                if proportional(&lines[i], &lines[j]) {
                    return Err(Error::Parse(format!("lines {i} and {j} coincide")));
                }
            }
        }
        Ok(PlanarArrangement { lines })
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[[Rat; 3]] {
        &self.lines
    }
}

/// Witness data for a certified generic section.
#[derive(Clone, Debug)]
pub struct SectionCertificate {
    pub attempts: usize,
    pub base_point: Vec<Rat>,
    pub directions: [Vec<Rat>; 2],
    pub flats_checked: usize,
}

/// Restrict a central arrangement of rank >= 2 to a random affine plane,
/// certified generic: restricted lines pairwise non-parallel and the
/// multiple-point data reproduces the original rank-2 flats exactly.
pub fn generic_section(
    a: &Arrangement,
    seed: u64,
    max_attempts: usize,
) -> Result<(PlanarArrangement, SectionCertificate), Error> {
    let rk = a.rank();
    if rk < 2 {
        return Err(Error::RankTooSmall(rk));
    }
    if a.ambient == 2 {
        let lines: Vec<[Rat; 3]> = a
            .forms
            .iter()
            .map(|f| [f[0].clone(), f[1].clone(), Rat::zero()])
            .collect();
        let planar = PlanarArrangement::new(lines)?;
        return Ok((
            planar,
            SectionCertificate {
                attempts: 0,
                base_point: vec![Rat::zero(); 2],
                directions: [
                    vec![Rat::one(), Rat::zero()],
                    vec![Rat::zero(), Rat::one()],
                ],
                flats_checked: a.rank2_flats().len(),
            },
        ));
    }
    let flats = a.rank2_flats();
    let expected: BTreeSet<BTreeSet<usize>> = flats.iter().cloned().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = a.ambient;
    for attempt in 1..=max_attempts {
        let height = 3 + (attempt as i64 / 8);
        let rand_vec = |rng: &mut ChaCha8Rng| -> Vec<Rat> {
            (0..l).map(|_| rat_i(rng.gen_range(-height..=height))).collect()
        };
        let p = rand_vec(&mut rng);
        let u = rand_vec(&mut rng);
        let v = rand_vec(&mut rng);
        let dot = |f: &[Rat], x: &[Rat]| {
            f.iter()
                .zip(x.iter())
                .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
        };
        let lines: Vec<[Rat; 3]> = a
            .forms
            .iter()
            .map(|f| [dot(f, &u), dot(f, &v), dot(f, &p)])
            .collect();
        let Ok(planar) = PlanarArrangement::new(lines) else {
            continue;
        };
        let Ok(points) = incidence_points(&planar) else {
            continue;
        };
        let got: BTreeSet<BTreeSet<usize>> = points
            .points
            .iter()
            .map(|(_, s)| s.clone())
            .collect();
        if got == expected {
            return Ok((
                planar,
                SectionCertificate {
                    attempts: attempt,
                    base_point: p,
                    directions: [u, v],
                    flats_checked: flats.len(),
                },
            ));
        }
    }
    Err(Error::SectionRetriesExhausted(max_attempts))
}

/// Intersection points of a planar arrangement with the lines through
/// each; every pair of lines must meet.
#[derive(Clone, Debug)]
pub struct LineArrangementCombinatorics {
    pub n: usize,
    /// (multiplicity, incident line indices), each point listed once
    pub points: Vec<(usize, BTreeSet<usize>)>,
}

pub fn incidence_points(a: &PlanarArrangement) -> Result<LineArrangementCombinatorics, Error> {
    let n = a.num_lines();
    let mut by_point: BTreeMap<(Rat, Rat), BTreeSet<usize>> = BTreeMap::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let [a1, b1, c1] = &a.lines[i];
            let [a2, b2, c2] = &a.lines[j];
            let det = a1 * b2 - a2 * b1;
            if det.is_zero() {
                return Err(Error::ParallelLines(i, j));
            }
            let x = (b1 * c2 - b2 * c1) / &det;
            let y = (c1 * a2 - c2 * a1) / &det;
            let entry = by_point.entry((x, y)).or_default();
            entry.insert(i);
            entry.insert(j);
        }
    }
    let points: Vec<(usize, BTreeSet<usize>)> = by_point
        .into_values()
        .map(|s| (s.len(), s))
        .collect();
    Ok(LineArrangementCombinatorics { n, points })
}

/// Degree-2 truncation of the Orlik-Solomon algebra: exterior algebra on
/// one generator per line modulo the boundary relations of collinear
/// triples.
pub fn os_algebra_deg2(
    c: &LineArrangementCombinatorics,
    field: Field,
) -> Result<GradedAlgebra, Error> {
    let n = c.n;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let pair_index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).unwrap();
    let mut gens: Vec<Vec<Rat>> = Vec::new();
    for (m, ls) in &c.points {
        if *m < 3 {
            continue;
        }
        let ls: Vec<usize> = ls.iter().copied().collect();
        for a in 0..ls.len() {
            for b in (a + 1)..ls.len() {
                for d in (b + 1)..ls.len() {
                    let (i, j, k) = (ls[a], ls[b], ls[d]);
                    let mut rel = vec![Rat::zero(); pairs.len()];
                    rel[pair_index(j, k)] += Rat::one();
                    rel[pair_index(i, k)] -= Rat::one();
                    rel[pair_index(i, j)] += Rat::one();
                    gens.push(rel);
                }
            }
        }
    }
    exterior_mod_ideal(field, n, 2, &gens, false)
}

/// One subspace per point of multiplicity at least 3: vectors supported
/// on the incident lines with coordinate sum zero.
pub fn local_components(c: &LineArrangementCombinatorics) -> SubspaceArrangement {
    let n = c.n;
    let mut members = Vec::new();
    for (m, ls) in &c.points {
        if *m < 3 {
            continue;
        }
        let ls: Vec<usize> = ls.iter().copied().collect();
        let vecs: Vec<Vec<Rat>> = ls[1..]
            .iter()
            .map(|&l| {
                let mut v = vec![Rat::zero(); n];
                v[ls[0]] = Rat::one();
                v[l] = -Rat::one();
                v
            })
            .collect();
        members.push(RationalSubspace::span(n, &vecs));
    }
    SubspaceArrangement::new(n, members)
}

/// Degree-one resonance membership through the Orlik-Solomon algebra.
pub fn res1_membership(c: &LineArrangementCombinatorics, a: &[Rat]) -> Result<bool, Error> {
    let alg = os_algebra_deg2(c, Field::Q)?;
    resonance_contains(&alg, a, 1, 1)
}

#[derive(Clone, Debug)]
pub enum ArrQuery {
    /// Is the r-plane within the Omega upper bound?
    Omega { p: RationalSubspace, r: usize },
    /// Is the direction within the Sigma upper bound?
    Sigma { chi: Vec<Rat> },
}

/// Upper-bound verdicts from the known degree-one resonance components:
/// the local ones plus any supplied non-local subspaces.
pub fn arr_bounds(
    c: &LineArrangementCombinatorics,
    nonlocal: &[RationalSubspace],
    query: &ArrQuery,
) -> Result<bool, Error> {
    let mut members: Vec<RationalSubspace> = local_components(c).members().to_vec();
    members.extend(nonlocal.iter().cloned());
    let components = SubspaceArrangement::new(c.n, members);
    match query {
        ArrQuery::Omega { p, r } => {
            if p.dim() != *r {
                return Err(Error::LengthMismatch(*r, p.dim()));
            }
            for l in components.members() {
                if l.dim() >= 1 && sigma_r_contains(l, p)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        ArrQuery::Sigma { chi } => {
            if components.members().is_empty() {
                return Ok(true);
            }
            Ok(!sphere_locus_contains(&components, chi)?)
        }
    }
}

/// Certified membership in the negative octant: every coordinate
/// strictly negative and the homological degree below the rank.
pub fn sigma_lower_negative(a: &Arrangement, chi: &[Rat], i: usize) -> Result<bool, Error> {
    if chi.len() != a.num_hyperplanes() {
        return Err(Error::LengthMismatch(a.num_hyperplanes(), chi.len()));
    }
    Ok(chi.iter().all(|x| x.is_negative()) && i < a.rank())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeDeconeVerdict {
    In,
    Out,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct ConeDeconeResult {
    pub verdict: ConeDeconeVerdict,
    pub provenance: String,
}

/// Degree-one Sigma membership through the cone/decone relation: off the
/// great sphere (coordinate sum nonzero) membership is certified; on it,
/// the resonance upper bound may certify exclusion, otherwise the answer
/// is open.
pub fn cone_decone_sigma(
    c: &LineArrangementCombinatorics,
    nonlocal: &[RationalSubspace],
    chi: &[Rat],
) -> Result<ConeDeconeResult, Error> {
    if chi.len() != c.n {
        return Err(Error::LengthMismatch(c.n, chi.len()));
    }
    if chi.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroCharacter);
    }
    let total = chi.iter().fold(Rat::zero(), |a, x| a + x);
    if !total.is_zero() {
        return Ok(ConeDeconeResult {
            verdict: ConeDeconeVerdict::In,
            provenance: "coordinate sum nonzero: off the great subsphere".into(),
        });
    }
    if !arr_bounds(c, nonlocal, &ArrQuery::Sigma { chi: chi.to_vec() })? {
        return Ok(ConeDeconeResult {
            verdict: ConeDeconeVerdict::Out,
            provenance: "inside a known degree-one resonance component".into(),
        });
    }
    Ok(ConeDeconeResult {
        verdict: ConeDeconeVerdict::Unknown,
        provenance: "on the great subsphere, outside the known components".into(),
    })
}

/// Brute-force sweep for resonant directions outside the local
/// components, over integer vectors of bounded height with coordinate
/// sum zero.  Returns the qualifying vectors; small arrangements only.
pub fn nonlocal_candidates(
    c: &LineArrangementCombinatorics,
    height: i64,
) -> Result<Vec<Vec<Rat>>, Error> {
    let n = c.n;
    assert!(n <= 8, "brute-force sweep is for desk-scale arrangements");
    let locals = local_components(c);
    let alg = os_algebra_deg2(c, Field::Q)?;
    let base = (2 * height + 1) as u64;
    let mut out = Vec::new();
    for code in 0..base.pow(n as u32) {
        let mut x = code;
        let mut v: Vec<Rat> = Vec::with_capacity(n);
        let mut sum = 0i64;
        for _ in 0..n {
            let digit = (x % base) as i64 - height;
            sum += digit;
            v.push(rat_i(digit));
            x /= base;
        }
        if sum != 0 || v.iter().all(|y| y.is_zero()) {
            continue;
        }
        if locals.members().iter().any(|l| l.contains_vector(&v)) {
            continue;
        }
        if resonance_contains(&alg, &v, 1, 1)? {
            out.push(v);
        }
    }
    Ok(out)
}

/// Parse a defining polynomial given as a product of rational linear
/// forms, e.g. `z0 z1 z2 (z0 - z1) (z0 - z2) (z1 - z2)`.  Variables are
/// z0..z3 or x, y, z, w.
pub fn parse_arrangement(text: &str) -> Result<Arrangement, Error> {
    let vars = ["z0", "z1", "z2", "z3"];
    let alt = ["x", "y", "z", "w"];
    let mut factors: Vec<String> = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        rest = rest.trim_start();
        if rest.is_empty() {
            break;
        }
        if let Some(stripped) = rest.strip_prefix('(') {
            let close = stripped
                .find(')')
                .ok_or_else(|| Error::Parse("unbalanced parenthesis".into()))?;
            factors.push(stripped[..close].to_string());
            rest = &stripped[close + 1..];
        } else {
            let end = rest
                .find(|ch: char| ch == '(' || ch.is_whitespace())
                .unwrap_or(rest.len());
            let tok = &rest[..end];
            if !tok.is_empty() {
                factors.push(tok.to_string());
            }
            rest = &rest[end..];
        }
    }
    let mut max_var = 0usize;
    let mut parsed: Vec<Vec<(i64, usize)>> = Vec::new();
    for f in &factors {
        let mut terms: Vec<(i64, usize)> = Vec::new();
        let mut sign = 1i64;
        for piece in f.replace('-', " - ").replace('+', " + ").split_whitespace() {
            match piece {
                "-" => sign = -sign * 1,
                "+" => {}
                _ => {
                    let (coef, name) = piece
                        .find(|ch: char| ch.is_alphabetic())
                        .map(|p| piece.split_at(p))
                        .ok_or_else(|| Error::Parse(format!("bad term `{piece}` in `{f}`")))?;
                    let cnum: i64 = if coef.is_empty() {
                        1
                    } else {
                        coef.parse()
                            .map_err(|_| Error::Parse(format!("bad coefficient `{coef}`")))?
                    };
                    let idx = vars
                        .iter()
                        .position(|v| *v == name)
                        .or_else(|| alt.iter().position(|v| *v == name))
                        .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                    max_var = max_var.max(idx + 1);
                    terms.push((sign * cnum, idx));
                    sign = 1;
                }
            }
        }
        if terms.is_empty() {
            return Err(Error::Parse(format!("empty factor `{f}`")));
        }
        parsed.push(terms);
    }
    let forms: Vec<Vec<i64>> = parsed
        .iter()
        .map(|terms| {
            let mut v = vec![0i64; max_var];
            for &(c, idx) in terms {
                v[idx] += c;
            }
            v
        })
        .collect();
    Arrangement::from_i64(&forms)
}
