//! Resonance variety membership for finite graded-commutative algebras
//! given by multiplication tables, via ranks of Aomoto complexes.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::exactlin::{field_rank, is_prime, rat_rank, Int, Mat, QMat, Rat, ZMat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Q,
    Fp(u64),
}

/// Graded-commutative algebra presented by its degree-1 multiplication
/// tables: `mult[j-1][i]` is the b_j x b_{j+1} matrix of right
/// multiplication of degree-j basis elements by the degree-1 generator
/// e_i.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    field: Field,
    dims: Vec<usize>,
    mult: Vec<Vec<QMat>>,
    integral_torsion: bool,
}

impl GradedAlgebra {
    pub fn build(
        field: Field,
        dims: Vec<usize>,
        mult: Vec<Vec<QMat>>,
        integral_torsion: bool,
    ) -> Result<Self, Error> {
        if let Field::Fp(p) = field {
            if !is_prime(p) {
                return Err(Error::CompositeModulus(p));
            }
            if p == 2 && integral_torsion {
                return Err(Error::CharTwoTorsion);
            }
        }
        if dims.is_empty() || dims[0] != 1 {
            return Err(Error::ShapeMismatch("dims must start with b_0 = 1".into()));
        }
        let b1 = dims.get(1).copied().unwrap_or(0);
        let expected_levels = dims.len().saturating_sub(2);
        if mult.len() != expected_levels {
            return Err(Error::ShapeMismatch(format!(
                "need {expected_levels} multiplication levels, got {}",
                mult.len()
            )));
        }
        for (j, level) in mult.iter().enumerate() {
            let bj = dims[j + 1];
            let bj1 = dims[j + 2];
            if level.len() != b1 {
                return Err(Error::ShapeMismatch(format!(
                    "level {} needs {} generator tables, got {}",
                    j + 1,
                    b1,
                    level.len()
                )));
            }
            for t in level {
                if t.rows() != bj || t.cols() != bj1 {
                    return Err(Error::ShapeMismatch(format!(
                        "table at level {} must be {}x{}",
                        j + 1,
                        bj,
                        bj1
                    )));
                }
            }
        }
        let alg = GradedAlgebra {
            field,
            dims,
            mult,
            integral_torsion,
        };
        alg.check_degree_one_relations()?;
        alg.check_associativity()?;
        Ok(alg)
    }

    /// e_i e_k = -e_k e_i and e_i e_i = 0, checked on the degree-1 table.
    fn check_degree_one_relations(&self) -> Result<(), Error> {
        let Some(level) = self.mult.first() else {
            return Ok(());
        };
        let b1 = self.dims[1];
        for i in 0..b1 {
            for k in 0..b1 {
                // row k of table i is e_k * e_i; row i of table k is e_i * e_k
                for t in 0..self.dims[2] {
                    let anti = level[i].at(k, t).clone() + level[k].at(i, t).clone();
                    if !self.is_zero_scalar(&anti) {
                        return Err(Error::NotGradedCommutative(format!(
                            "e{} e{} + e{} e{} has nonzero component {}",
                            k + 1,
                            i + 1,
                            i + 1,
                            k + 1,
                            t + 1
                        )));
                    }
                }
                if i == k {
                    for t in 0..self.dims[2] {
                        if !self.is_zero_scalar(level[i].at(i, t)) {
                            return Err(Error::NotGradedCommutative(format!(
                                "e{} e{} is nonzero",
                                i + 1,
                                i + 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// (e_i e_j) e_k = e_i (e_j e_k) on basis triples, when degree 3 is
    /// present.  Both sides route through the same A^1 x A^2 table, so
    /// the check is that left association is alternating in all three
    /// slots; equivalently (e_i e_j) e_k is fixed under swapping j,k up
    /// to sign.
    fn check_associativity(&self) -> Result<(), Error> {
        if self.mult.len() < 2 {
            return Ok(());
        }
        let b1 = self.dims[1];
        let b3 = self.dims[3];
        let prod3 = |i: usize, j: usize, k: usize| -> Vec<Rat> {
            // (e_i e_j) e_k
            let ij: Vec<Rat> = (0..self.dims[2])
                .map(|t| self.mult[0][j].at(i, t).clone())
                .collect();
            (0..b3)
                .map(|t| {
                    (0..self.dims[2])
                        .map(|s| ij[s].clone() * self.mult[1][k].at(s, t))
                        .fold(Rat::zero(), |a, x| a + x)
                })
                .collect()
        };
        for i in 0..b1 {
            for j in 0..b1 {
                for k in 0..b1 {
                    let lhs = prod3(i, j, k);
                    let rhs = prod3(i, k, j); // should be the negative
                    for t in 0..b3 {
                        let s = lhs[t].clone() + rhs[t].clone();
                        if !self.is_zero_scalar(&s) {
                            return Err(Error::NotGradedCommutative(format!(
                                "associativity fails on e{} e{} e{}",
                                i + 1,
                                j + 1,
                                k + 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn is_zero_scalar(&self, x: &Rat) -> bool {
        match self.field {
            Field::Q => x.is_zero(),
            Field::Fp(p) => {
                // denominators prime to p by construction of inputs
                let p = Int::from(p);
                num_integer::Integer::mod_floor(x.numer(), &p).is_zero()
            }
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn betti(&self, j: usize) -> usize {
        self.dims.get(j).copied().unwrap_or(0)
    }

    pub fn has_integral_torsion(&self) -> bool {
        self.integral_torsion
    }

    /// Same tables over a different coefficient field.
    pub fn with_field(&self, field: Field) -> Result<Self, Error> {
        Self::build(field, self.dims.clone(), self.mult.clone(), self.integral_torsion)
    }
}

fn rank_over(field: Field, m: &QMat) -> Result<usize, Error> {
    match field {
        Field::Q => Ok(rat_rank(m)),
        Field::Fp(p) => {
            let pi = Int::from(p);
            let reduced: ZMat = Mat::from_fn(m.rows(), m.cols(), |i, j| {
                let x = m.at(i, j);
                let den = num_integer::Integer::mod_floor(x.denom(), &pi);
                if den.is_zero() {
                    // unreachable for inputs with p-integral entries;
                    // treated as a parse-level problem
                    Int::zero()
                } else {
                    let inv = mod_inverse(&den, &pi);
                    num_integer::Integer::mod_floor(&(x.numer() * inv), &pi)
                }
            });
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    if num_integer::Integer::mod_floor(m.at(i, j).denom(), &pi).is_zero() {
                        return Err(Error::Parse(format!(
                            "denominator divisible by {p} at ({i},{j})"
                        )));
                    }
                }
            }
            field_rank(&reduced, p)
        }
    }
}

fn mod_inverse(a: &Int, p: &Int) -> Int {
    // p prime, a nonzero mod p
    let mut result = Int::one();
    let mut base = num_integer::Integer::mod_floor(a, p);
    let mut e = p - Int::from(2);
    while !e.is_zero() {
        if num_integer::Integer::is_odd(&e) {
            result = num_integer::Integer::mod_floor(&(&result * &base), p);
        }
        base = num_integer::Integer::mod_floor(&(&base * &base), p);
        e >>= 1;
    }
    result
}

/// The cochain complex of right-multiplication by a fixed degree-one
/// element; `maps[j]` sends A^j to A^{j+1} (columns index the source).
#[derive(Clone, Debug)]
pub struct AomotoComplex {
    pub field: Field,
    pub maps: Vec<QMat>,
}

pub fn aomoto(alg: &GradedAlgebra, a: &[Rat]) -> Result<AomotoComplex, Error> {
    let b1 = alg.betti(1);
    if a.len() != b1 {
        return Err(Error::LengthMismatch(b1, a.len()));
    }
    let mut maps = Vec::new();
    // A^0 -> A^1 is 1 |-> a
    maps.push(Mat::from_fn(b1, 1, |i, _| a[i].clone()));
    for (j, level) in alg.mult.iter().enumerate() {
        let bj = alg.dims[j + 1];
        let bj1 = alg.dims[j + 2];
        let d = Mat::from_fn(bj1, bj, |t, s| {
            (0..b1)
                .map(|i| a[i].clone() * level[i].at(s, t))
                .fold(Rat::zero(), |acc, x| acc + x)
        });
        maps.push(d);
    }
    // d^2 = 0, over the coefficient field
    for w in maps.windows(2) {
        let prod = w[1].mul(&w[0]);
        for i in 0..prod.rows() {
            for j in 0..prod.cols() {
                if !alg.is_zero_scalar(prod.at(i, j)) {
                    return Err(Error::NotGradedCommutative(
                        "Aomoto differential does not square to zero".into(),
                    ));
                }
            }
        }
    }
    Ok(AomotoComplex {
        field: alg.field,
        maps,
    })
}

/// dim H^i(A, a) for the Aomoto complex.
pub fn aomoto_h_dim(alg: &GradedAlgebra, a: &[Rat], i: usize) -> Result<usize, Error> {
    if i + 1 >= alg.dims.len() {
        return Err(Error::DegreeOutOfRange(i, alg.dims.len().saturating_sub(2)));
    }
    let cx = aomoto(alg, a)?;
    let rank_out = rank_over(alg.field, &cx.maps[i])?;
    let rank_in = if i == 0 {
        0
    } else {
        rank_over(alg.field, &cx.maps[i - 1])?
    };
    Ok(alg.betti(i) - rank_out - rank_in)
}

/// Is a in the degree-i depth-d resonance variety of the algebra?
pub fn resonance_contains(
    alg: &GradedAlgebra,
    a: &[Rat],
    i: usize,
    d: usize,
) -> Result<bool, Error> {
    Ok(aomoto_h_dim(alg, a, i)? >= d)
}

/// Is some H^j(A, a) nonzero for j <= i?
pub fn resonance_upto_contains(alg: &GradedAlgebra, a: &[Rat], i: usize) -> Result<bool, Error> {
    for j in 0..=i {
        if resonance_contains(alg, a, j, 1)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Quotient of the exterior algebra on n generators by an ideal
/// generated in degree 2, truncated at `top`.  Ideal generators are
/// coefficient vectors over the lexicographic basis e_i e_j, i < j.
pub fn exterior_mod_ideal(
    field: Field,
    n: usize,
    top: usize,
    ideal_deg2: &[Vec<Rat>],
    integral_torsion: bool,
) -> Result<GradedAlgebra, Error> {
    let monos: Vec<Vec<Vec<usize>>> = (0..=top).map(|k| k_subsets(n, k)).collect();
    let e2 = monos.get(2).map(|m| m.len()).unwrap_or(0);
    for g in ideal_deg2 {
        if g.len() != e2 {
            return Err(Error::ShapeMismatch(format!(
                "ideal generator length {} != {}",
                g.len(),
                e2
            )));
        }
    }
    // ideal in each degree: I_k = E^{k-2} ^ I_2, reduced rows in E^k coords
    let mut reducers: Vec<QMat> = Vec::new(); // RREF rows spanning I_k
    let mut quotient_basis: Vec<Vec<usize>> = Vec::new(); // non-pivot monomial indices per degree
    for k in 0..=top {
        let ek = monos[k].len();
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        if k >= 2 {
            for m in &monos[k - 2] {
                for g in ideal_deg2 {
                    let mut row = vec![Rat::zero(); ek];
                    let mut nonzero = false;
                    for (gi, c) in g.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let pair = &monos[2][gi];
                        if let Some((idx, sign)) = wedge(&monos[k], m, pair) {
                            row[idx] += c * crate::exactlin::rat_i(sign);
                            nonzero = true;
                        }
                    }
                    if nonzero {
                        rows.push(row);
                    }
                }
            }
        }
        let mut m = if rows.is_empty() {
            Mat::zero(0, ek)
        } else {
            Mat::from_rows(rows)
        };
        let pivots = crate::exactlin::rref(&mut m);
        let qb: Vec<usize> = (0..ek).filter(|c| !pivots.contains(c)).collect();
        quotient_basis.push(qb);
        reducers.push(keep_rows(&m, pivots.len()));
    }
    let dims: Vec<usize> = quotient_basis.iter().map(|b| b.len()).collect();
    if dims[0] != 1 {
        return Err(Error::ShapeMismatch("degree 0 collapsed".into()));
    }
    let b1 = dims.get(1).copied().unwrap_or(0);
    // multiplication tables on quotient bases
    let mut mult: Vec<Vec<QMat>> = Vec::new();
    for j in 1..top {
        let mut level = Vec::new();
        for gen in 0..b1 {
            let gi = quotient_basis[1][gen]; // generator monomials survive
            let table = Mat::from_fn(dims[j], dims[j + 1], |s, t| {
                let mono = &monos[j][quotient_basis[j][s]];
                let mut vec_in_e = vec![Rat::zero(); monos[j + 1].len()];
                if let Some((idx, sign)) = wedge(&monos[j + 1], mono, &[gi]) {
                    vec_in_e[idx] = crate::exactlin::rat_i(sign);
                }
                let reduced = reduce_mod(&reducers[j + 1], &vec_in_e);
                reduced[quotient_basis[j + 1][t]].clone()
            });
            level.push(table);
        }
        mult.push(level);
    }
    GradedAlgebra::build(field, dims, mult, integral_torsion)
}

/// Exterior algebra itself (empty ideal).
pub fn exterior_algebra(field: Field, n: usize, top: usize) -> Result<GradedAlgebra, Error> {
    exterior_mod_ideal(field, n, top, &[], false)
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
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

/// Wedge of two increasing index sequences as a signed basis monomial,
/// or None if they share an index.
fn wedge(basis: &[Vec<usize>], a: &[usize], b: &[usize]) -> Option<(usize, i64)> {
    let mut all: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
    // count inversions of the concatenation to sort it
    let mut sign = 1i64;
    for i in 0..all.len() {
        for j in (i + 1)..all.len() {
            if all[i] == all[j] {
                return None;
            }
            if all[i] > all[j] {
                sign = -sign;
            }
        }
    }
    all.sort_unstable();
    let idx = basis.iter().position(|m| m == &all)?;
    Some((idx, sign))
}

fn keep_rows(m: &QMat, r: usize) -> QMat {
    Mat::from_fn(r, m.cols(), |i, j| m.at(i, j).clone())
}

/// Subtract off pivot-row multiples so the result is supported on
/// non-pivot coordinates, representing v modulo the row space.
fn reduce_mod(rref_rows: &QMat, v: &[Rat]) -> Vec<Rat> {
    let mut out = v.to_vec();
    for i in 0..rref_rows.rows() {
        // leading coordinate of a RREF row is 1
        let Some(p) = (0..rref_rows.cols()).find(|&c| !rref_rows.at(i, c).is_zero()) else {
            continue;
        };
        let coef = out[p].clone();
        if coef.is_zero() {
            continue;
        }
        for c in 0..rref_rows.cols() {
            let delta = coef.clone() * rref_rows.at(i, c);
            out[c] -= delta;
        }
    }
    out
}
