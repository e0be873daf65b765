//! Fox calculus on finitely presented groups: free derivatives,
//! abelianization, Alexander matrices, and degree-one characteristic
//! variety membership.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::exactlin::{rat_rank, smith_form, Int, Mat, QMat, Rat, ZMat};
use crate::varieties::{LaurentHypersurface, RationalSubspace};

/// Freely reduced word in the generators, letters are nonzero signed
/// indices (1-based).
pub type Word = Vec<i32>;

pub fn free_reduce(letters: &[i32]) -> Word {
    let mut w: Word = Vec::new();
    for &l in letters {
        assert!(l != 0);
        if w.last().is_some_and(|&p| p == -l) {
            w.pop();
        } else {
            w.push(l);
        }
    }
    w
}

pub fn word_mul(u: &[i32], v: &[i32]) -> Word {
    let mut l = u.to_vec();
    l.extend_from_slice(v);
    free_reduce(&l)
}

pub fn word_inv(u: &[i32]) -> Word {
    u.iter().rev().map(|&l| -l).collect()
}

/// Element of the rational group ring of the free group.
pub type GroupRingElt = BTreeMap<Word, Rat>;

pub fn gr_zero() -> GroupRingElt {
    BTreeMap::new()
}

pub fn gr_single(w: Word, c: Rat) -> GroupRingElt {
    let mut m = BTreeMap::new();
    if !c.is_zero() {
        m.insert(w, c);
    }
    m
}

pub fn gr_add(a: &GroupRingElt, b: &GroupRingElt) -> GroupRingElt {
    let mut out = a.clone();
    for (w, c) in b {
        let e = out.entry(w.clone()).or_insert_with(Rat::zero);
        *e += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn gr_neg(a: &GroupRingElt) -> GroupRingElt {
    a.iter().map(|(w, c)| (w.clone(), -c.clone())).collect()
}

pub fn gr_mul(a: &GroupRingElt, b: &GroupRingElt) -> GroupRingElt {
    let mut out: GroupRingElt = BTreeMap::new();
    for (u, cu) in a {
        for (v, cv) in b {
            let w = word_mul(u, v);
            let e = out.entry(w).or_insert_with(Rat::zero);
            *e += cu * cv;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Left-multiply by a single group element.
pub fn gr_word_mul(u: &[i32], b: &GroupRingElt) -> GroupRingElt {
    gr_mul(&gr_single(u.to_vec(), Rat::one()), b)
}

/// Fox derivative with respect to generator j (1-based):
/// d(x_j) = 1, d(x_j^{-1}) = -x_j^{-1}, d(uv) = du + u dv.
pub fn fox_derivative(w: &[i32], j: usize) -> GroupRingElt {
    let j = j as i32;
    let mut out = gr_zero();
    let mut prefix: Word = Vec::new();
    for &l in w {
        if l == j {
            out = gr_add(&out, &gr_single(prefix.clone(), Rat::one()));
        } else if l == -j {
            let w = word_mul(&prefix, &[-j]);
            out = gr_add(&out, &gr_single(w, -Rat::one()));
        }
        prefix = word_mul(&prefix, &[l]);
    }
    out
}

#[derive(Clone, Debug)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Vec<i32>>) -> Result<Self, Error> {
        let g = generators.len() as i32;
        for r in &relators {
            for &l in r {
                if l == 0 || l.abs() > g {
                    return Err(Error::Parse(format!(
                        "relator letter {l} out of range for {g} generators"
                    )));
                }
            }
        }
        Ok(GroupPresentation {
            generators,
            relators: relators.iter().map(|r| free_reduce(r)).collect(),
        })
    }

    pub fn free(g: usize) -> Self {
        GroupPresentation {
            generators: (1..=g).map(|i| format!("x{i}")).collect(),
            relators: Vec::new(),
        }
    }

    /// Parse the text format `gens: x1 x2 ; rels: x1 x2 x1^-1 x2^-2`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let text = text.trim();
        let (gpart, rpart) = text
            .split_once(';')
            .ok_or_else(|| Error::Parse("expected `gens: ... ; rels: ...`".into()))?;
        let gpart = gpart
            .trim()
            .strip_prefix("gens:")
            .ok_or_else(|| Error::Parse("missing `gens:`".into()))?;
        let rpart = rpart
            .trim()
            .strip_prefix("rels:")
            .ok_or_else(|| Error::Parse("missing `rels:`".into()))?;
        let generators: Vec<String> = gpart.split_whitespace().map(|s| s.to_string()).collect();
        let index = |name: &str| -> Result<i32, Error> {
            generators
                .iter()
                .position(|g| g == name)
                .map(|i| i as i32 + 1)
                .ok_or_else(|| Error::Parse(format!("unknown generator `{name}`")))
        };
        let mut relators: Vec<Vec<i32>> = Vec::new();
        for rel in rpart.split(',') {
            let rel = rel.trim();
            if rel.is_empty() {
                continue;
            }
            let mut word = Vec::new();
            for tok in rel.split_whitespace() {
                let (name, exp) = match tok.split_once('^') {
                    Some((n, e)) => (
                        n,
                        e.parse::<i64>()
                            .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?,
                    ),
                    None => (tok, 1),
                };
                let i = index(name)?;
                let letter = if exp >= 0 { i } else { -i };
                for _ in 0..exp.unsigned_abs() {
                    word.push(letter);
                }
            }
            relators.push(word);
        }
        GroupPresentation::new(generators, relators)
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Exponent-sum matrix, one row per relator.
    pub fn exponent_matrix(&self) -> ZMat {
        let g = self.num_generators();
        Mat::from_fn(self.relators.len(), g, |i, j| {
            let mut s = Int::zero();
            for &l in &self.relators[i] {
                if l.unsigned_abs() as usize == j + 1 {
                    s += Int::from(l.signum());
                }
            }
            s
        })
    }
}

#[derive(Clone, Debug)]
pub struct AbelianizationData {
    pub rank: usize,
    pub torsion: Vec<Int>,
    /// rank x g integer matrix sending generator exponent vectors to the
    /// torsion-free quotient Z^rank.
    pub proj: ZMat,
}

pub fn abelianize(p: &GroupPresentation) -> AbelianizationData {
    let g = p.num_generators();
    let et = p.exponent_matrix().transpose(); // g x r
    let sf = smith_form(&et);
    let nz = sf.diag.iter().filter(|d| !d.is_zero()).count();
    let torsion: Vec<Int> = sf
        .diag
        .iter()
        .filter(|d| d.abs() > Int::one())
        .map(|d| d.abs())
        .collect();
    let rank = g - nz;
    // rows of `left` past the nonzero diagonal give coordinates on the
    // torsion-free quotient
    let proj = Mat::from_fn(rank, g, |i, j| sf.left.at(nz + i, j).clone());
    AbelianizationData {
        rank,
        torsion,
        proj,
    }
}

fn word_exponents(w: &[i32], g: usize) -> Vec<Int> {
    let mut e = vec![Int::zero(); g];
    for &l in w {
        e[l.unsigned_abs() as usize - 1] += Int::from(l.signum());
    }
    e
}

/// Image of a word in Z^rank under the torsion-free abelianization.
pub fn abelianized_exponent(ab: &AbelianizationData, w: &[i32], g: usize) -> Vec<i64> {
    let e = word_exponents(w, g);
    ab.proj
        .mul_vec(&e)
        .into_iter()
        .map(|x| i64::try_from(x).expect("exponent fits in i64"))
        .collect()
}

/// Matrix of abelianized Fox derivatives, one row per relator, entries
/// Laurent polynomials in rank-many torus variables.
pub fn alexander_matrix(p: &GroupPresentation) -> Result<Vec<Vec<LaurentHypersurface>>, Error> {
    let ab = abelianize(p);
    if ab.rank == 0 {
        return Err(Error::RankZeroAbelianization);
    }
    let g = p.num_generators();
    let mut rows = Vec::new();
    for r in p.relators() {
        let mut row = Vec::new();
        for j in 1..=g {
            let d = fox_derivative(r, j);
            let terms = d
                .iter()
                .map(|(w, c)| (abelianized_exponent(&ab, w, g), c.clone()));
            row.push(LaurentHypersurface::new(ab.rank, terms));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Does rho lie in the degree-one characteristic variety at depth d, for
/// the presentation 2-complex?
pub fn cv1_contains(p: &GroupPresentation, rho: &[Rat], d: usize) -> Result<bool, Error> {
    let ab = abelianize(p);
    if ab.rank == 0 {
        return Err(Error::RankZeroAbelianization);
    }
    if rho.len() != ab.rank {
        return Err(Error::LengthMismatch(ab.rank, rho.len()));
    }
    if rho.iter().any(|x| x.is_zero()) {
        return Err(Error::ZeroCoordinate);
    }
    if d == 0 {
        return Ok(true);
    }
    if rho.iter().all(|x| x.is_one()) {
        return Ok(d <= ab.rank);
    }
    let a = alexander_matrix(p)?;
    let g = p.num_generators();
    let eval: QMat = Mat::from_fn(a.len(), g, |i, j| a[i][j].eval(rho));
    let h1 = g - 1 - rat_rank(&eval);
    Ok(h1 >= d)
}

/// Restrictions to exp(Q (x) C) of the depth-one codimension-test minors
/// of the Alexander matrix.  The joint zero locus of the returned
/// polynomials, together with the identity, cuts out the part of W^1
/// visible on the subtorus.  When the matrix cannot reach rank g-1 at
/// all, the single identically-zero polynomial is returned.
pub fn cv1_torus_restriction(
    p: &GroupPresentation,
    q: &RationalSubspace,
) -> Result<Vec<LaurentHypersurface>, Error> {
    let ab = abelianize(p);
    if ab.rank == 0 {
        return Err(Error::RankZeroAbelianization);
    }
    if q.ambient_dim() != ab.rank {
        return Err(Error::AmbientMismatch(ab.rank, q.ambient_dim()));
    }
    let a = alexander_matrix(p)?;
    let g = p.num_generators();
    let r = a.len();
    let k = g - 1; // minor size for depth one
    if r < k {
        return Ok(vec![LaurentHypersurface::new(q.dim(), [])]);
    }
    if k == 0 {
        return Ok(vec![LaurentHypersurface::new(
            q.dim(),
            [(vec![0i64; q.dim()], Rat::one())],
        )]);
    }
    let restricted: Vec<Vec<LaurentHypersurface>> = a
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| crate::varieties::hypersurface_restriction(e, q))
                .collect()
        })
        .collect();
    let mut minors = Vec::new();
    for rows in subsets_of_size(r, k) {
        for cols in subsets_of_size(g, k) {
            minors.push(poly_det(&restricted, &rows, &cols, q.dim()));
        }
    }
    Ok(minors)
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn poly_add(a: &LaurentHypersurface, b: &LaurentHypersurface) -> LaurentHypersurface {
    let n = a.ambient_dim();
    LaurentHypersurface::new(
        n,
        a.terms()
            .iter()
            .chain(b.terms().iter())
            .map(|(e, c)| (e.clone(), c.clone())),
    )
}

fn poly_mul(a: &LaurentHypersurface, b: &LaurentHypersurface) -> LaurentHypersurface {
    let n = a.ambient_dim();
    let mut terms: Vec<(Vec<i64>, Rat)> = Vec::new();
    for (ea, ca) in a.terms() {
        for (eb, cb) in b.terms() {
            let e: Vec<i64> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
            terms.push((e, ca * cb));
        }
    }
    LaurentHypersurface::new(n, terms)
}

fn poly_scale(a: &LaurentHypersurface, s: i64) -> LaurentHypersurface {
    let n = a.ambient_dim();
    LaurentHypersurface::new(
        n,
        a.terms()
            .iter()
            .map(|(e, c)| (e.clone(), c * crate::exactlin::rat_i(s))),
    )
}

fn poly_det(
    m: &[Vec<LaurentHypersurface>],
    rows: &[usize],
    cols: &[usize],
    nvars: usize,
) -> LaurentHypersurface {
    if rows.is_empty() {
        return LaurentHypersurface::new(nvars, [(vec![0i64; nvars], Rat::one())]);
    }
    let mut acc = LaurentHypersurface::new(nvars, []);
    let i = rows[0];
    let rest: Vec<usize> = rows[1..].to_vec();
    for (pos, &j) in cols.iter().enumerate() {
        let mut sub_cols = cols.to_vec();
        sub_cols.remove(pos);
        let cofactor = poly_det(m, &rest, &sub_cols, nvars);
        let sign = if pos % 2 == 0 { 1 } else { -1 };
        acc = poly_add(&acc, &poly_scale(&poly_mul(&m[i][j], &cofactor), sign));
    }
    acc
}

/// Dwyer-Fried style membership for the presentation 2-complex: does
/// exp(Q (x) C) meet the degree-one characteristic variety in dimension
/// zero?  Decided through the restricted minors; certifies membership
/// when some single minor already has a finite restricted zero locus.
pub fn omega1_contains(p: &GroupPresentation, q: &RationalSubspace) -> Result<bool, Error> {
    use crate::varieties::{torus_hypersurface_finiteness_restricted, Finiteness};
    let minors = cv1_torus_restriction(p, q)?;
    Ok(minors.iter().any(|g| {
        matches!(
            torus_hypersurface_finiteness_restricted(g),
            Finiteness::Empty | Finiteness::Finite
        )
    }))
}
