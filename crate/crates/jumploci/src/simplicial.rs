//! Finite abstract simplicial complexes: induced subcomplexes, links,
//! flag complexes, barycentric subdivision, and reduced homology over
//! the rationals, prime fields, and the integers.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::One;

use crate::error::Error;
use crate::exactlin::{field_rank, int_rank, smith_form, Int, ZMat};

pub type Vertex = u32;
pub type Face = BTreeSet<Vertex>;

pub fn face(vs: &[Vertex]) -> Face {
    vs.iter().copied().collect()
}

/// Coefficient choice for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coeffs {
    Q,
    Fp(u64),
    Z,
}

/// A finite abstract simplicial complex, stored by its facets.
///
/// Two degenerate cases are distinguished: the *void* complex has no
/// faces at all, while the *empty* complex consists of the empty face
/// alone (and has reduced homology of rank 1 in degree -1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    facets: BTreeSet<Face>,
}

impl SimplicialComplex {
    /// Build from a set of candidate facets; dominated faces are dropped
    /// and the vertex set is inferred.
    pub fn build(candidates: impl IntoIterator<Item = Face>) -> Self {
        let cands: Vec<Face> = candidates.into_iter().collect();
        let mut facets: BTreeSet<Face> = BTreeSet::new();
        for f in &cands {
            if !cands.iter().any(|g| f.is_subset(g) && f != g) {
                facets.insert(f.clone());
            }
        }
        if facets.len() > 1 {
            facets.remove(&Face::new());
        }
        SimplicialComplex { facets }
    }

    pub fn void() -> Self {
        SimplicialComplex {
            facets: BTreeSet::new(),
        }
    }

    /// The complex consisting of the empty face alone.
    pub fn empty() -> Self {
        let mut facets = BTreeSet::new();
        facets.insert(Face::new());
        SimplicialComplex { facets }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets.contains(&Face::new())
    }

    pub fn facets(&self) -> &BTreeSet<Face> {
        &self.facets
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let mut vs: BTreeSet<Vertex> = BTreeSet::new();
        for f in &self.facets {
            vs.extend(f.iter().copied());
        }
        vs.into_iter().collect()
    }

    /// Dimension of the complex; None for the void complex, -1 for the
    /// empty complex.
    pub fn dim(&self) -> Option<i64> {
        self.facets
            .iter()
            .map(|f| f.len() as i64 - 1)
            .max()
    }

    /// All faces, including the empty face (for any non-void complex).
    pub fn faces(&self) -> BTreeSet<Face> {
        let mut out: BTreeSet<Face> = BTreeSet::new();
        for f in &self.facets {
            let vs: Vec<Vertex> = f.iter().copied().collect();
            for mask in 0..(1u64 << vs.len()) {
                let sub: Face = vs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                out.insert(sub);
            }
        }
        out
    }

    pub fn faces_of_dim(&self, d: i64) -> Vec<Face> {
        self.faces()
            .into_iter()
            .filter(|f| f.len() as i64 == d + 1)
            .collect()
    }

    pub fn contains_face(&self, f: &Face) -> bool {
        if self.is_void() {
            return false;
        }
        self.facets.iter().any(|g| f.is_subset(g))
    }

    /// Number of faces in each dimension 0, 1, ..., dim.
    pub fn f_vector(&self) -> Vec<usize> {
        let d = self.dim().unwrap_or(-1);
        (0..=d).map(|k| self.faces_of_dim(k).len()).collect()
    }

    /// Subcomplex induced on a vertex subset W: faces of self contained in W.
    pub fn induced(&self, w: &BTreeSet<Vertex>) -> Result<Self, Error> {
        let verts: BTreeSet<Vertex> = self.vertices().into_iter().collect();
        if !w.is_subset(&verts) {
            return Err(Error::NotAVertexSubset(format!("{w:?}")));
        }
        Ok(self.induced_unchecked(w))
    }

    pub fn induced_unchecked(&self, w: &BTreeSet<Vertex>) -> Self {
        if self.is_void() {
            return Self::void();
        }
        SimplicialComplex::build(
            self.facets
                .iter()
                .map(|f| f.intersection(w).copied().collect::<Face>()),
        )
    }

    /// Link of a face: { tau | tau disjoint from sigma, tau union sigma a face }.
    /// The link of the empty face is the complex itself.
    pub fn link(&self, sigma: &Face) -> Result<Self, Error> {
        if !self.contains_face(sigma) {
            return Err(Error::NotAFace(format!("{sigma:?}")));
        }
        Ok(SimplicialComplex::build(
            self.facets
                .iter()
                .filter(|f| sigma.is_subset(f))
                .map(|f| f.difference(sigma).copied().collect::<Face>()),
        ))
    }

    pub fn edges(&self) -> BTreeSet<(Vertex, Vertex)> {
        let mut out = BTreeSet::new();
        for f in self.faces_of_dim(1) {
            let vs: Vec<Vertex> = f.iter().copied().collect();
            out.insert((vs[0], vs[1]));
        }
        out
    }

    /// Flag (clique) complex of the 1-skeleton.
    pub fn flag_complex(&self) -> Self {
        if self.is_void() || self.is_empty_complex() {
            return self.clone();
        }
        let verts = self.vertices();
        let edges = self.edges();
        let adjacent = |a: Vertex, b: Vertex| {
            edges.contains(&(a.min(b), a.max(b)))
        };
        // maximal cliques by Bron-Kerbosch with pivoting
        let mut cliques: Vec<Face> = Vec::new();
        let mut r: Vec<Vertex> = Vec::new();
        let mut p: Vec<Vertex> = verts.clone();
        let mut x: Vec<Vertex> = Vec::new();
        bron_kerbosch(&mut r, &mut p, &mut x, &adjacent, &mut cliques);
        SimplicialComplex::build(cliques)
    }

    pub fn is_flag(&self) -> bool {
        self.flag_complex() == *self
    }

    /// Barycentric subdivision.  Vertices of the result are the nonempty
    /// faces of self (labeled 0.. in sorted face order); its facets are
    /// the maximal chains of faces ordered by inclusion.  Returns the
    /// subdivision together with the face labeling.
    pub fn barycentric_subdivision(&self) -> (Self, Vec<Face>) {
        if self.is_void() || self.is_empty_complex() {
            return (self.clone(), Vec::new());
        }
        let mut labels: Vec<Face> = self
            .faces()
            .into_iter()
            .filter(|f| !f.is_empty())
            .collect();
        labels.sort_by_key(|f| (f.len(), f.iter().copied().collect::<Vec<_>>()));
        let index: BTreeMap<&Face, u32> = labels
            .iter()
            .enumerate()
            .map(|(i, f)| (f, i as u32))
            .collect();
        let mut chains: Vec<Face> = Vec::new();
        for facet in &self.facets {
            let vs: Vec<Vertex> = facet.iter().copied().collect();
            collect_chains(&vs, &index, &mut chains);
        }
        (SimplicialComplex::build(chains), labels)
    }

    /// Boundary matrix from d-chains to (d-1)-chains of the augmented
    /// (reduced) chain complex; d = 0 maps vertices onto the empty face.
    fn boundary_matrix(&self, d: i64, lower: &[Face], upper: &[Face]) -> ZMat {
        let index: BTreeMap<&Face, usize> =
            lower.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut m = ZMat::zero(lower.len(), upper.len());
        for (j, f) in upper.iter().enumerate() {
            let vs: Vec<Vertex> = f.iter().copied().collect();
            for (pos, _) in vs.iter().enumerate() {
                let mut sub = f.clone();
                sub.remove(&vs[pos]);
                let i = index[&sub];
                let sign = if pos % 2 == 0 { Int::one() } else { -Int::one() };
                m.set(i, j, sign);
            }
        }
        debug_assert!(d >= 0);
        m
    }

    /// Reduced simplicial homology.
    pub fn reduced_homology(&self, coeffs: Coeffs) -> Result<HomologyProfile, Error> {
        if self.is_void() {
            return Ok(HomologyProfile {
                ranks: vec![0],
                torsion: vec![vec![]],
            });
        }
        let top = self.dim().unwrap(); // >= -1
        let mut by_dim: Vec<Vec<Face>> = Vec::new(); // index k holds dim k-1 faces
        for d in -1..=top {
            let mut fs = self.faces_of_dim(d);
            fs.sort_by_key(|f| f.iter().copied().collect::<Vec<_>>());
            by_dim.push(fs);
        }
        // boundaries[k]: C_{k-1} -> C_{k-2} in reduced indexing, k = 1..=top+1
        let mut boundaries: Vec<ZMat> = Vec::new();
        for d in 0..=top {
            let k = (d + 1) as usize;
            boundaries.push(self.boundary_matrix(d, &by_dim[k - 1], &by_dim[k]));
        }
        let rank_of = |m: &ZMat| -> Result<usize, Error> {
            match coeffs {
                Coeffs::Q | Coeffs::Z => Ok(int_rank(m)),
                Coeffs::Fp(p) => field_rank(m, p),
            }
        };
        let n_deg = (top + 2) as usize; // degrees -1 ..= top
        let mut ranks = vec![0usize; n_deg];
        let mut torsion: Vec<Vec<Int>> = vec![Vec::new(); n_deg];
        for k in 0..n_deg {
            let dim_c = by_dim[k].len();
            let r_out = if k >= 1 {
                rank_of(&boundaries[k - 1])?
            } else {
                0
            };
            let r_in = if k < boundaries.len() {
                rank_of(&boundaries[k])?
            } else {
                0
            };
            ranks[k] = dim_c - r_out - r_in;
            if coeffs == Coeffs::Z && k < boundaries.len() {
                torsion[k] = smith_form(&boundaries[k])
                    .diag
                    .into_iter()
                    .filter(|d| *d > Int::one())
                    .collect();
            }
        }
        Ok(HomologyProfile { ranks, torsion })
    }
}

fn bron_kerbosch(
    r: &mut Vec<Vertex>,
    p: &mut Vec<Vertex>,
    x: &mut Vec<Vertex>,
    adjacent: &impl Fn(Vertex, Vertex) -> bool,
    out: &mut Vec<Face>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r.iter().copied().collect());
        return;
    }
    let pivot = p.iter().chain(x.iter()).copied().next().unwrap();
    let candidates: Vec<Vertex> = p
        .iter()
        .copied()
        .filter(|&v| !adjacent(v, pivot) || v == pivot)
        .collect();
    for v in candidates {
        let np: Vec<Vertex> = p.iter().copied().filter(|&u| adjacent(u, v)).collect();
        let nx: Vec<Vertex> = x.iter().copied().filter(|&u| adjacent(u, v)).collect();
        r.push(v);
        bron_kerbosch(r, &mut np.clone(), &mut nx.clone(), adjacent, out);
        r.pop();
        p.retain(|&u| u != v);
        x.push(v);
    }
}

fn collect_chains(facet_verts: &[Vertex], index: &BTreeMap<&Face, u32>, out: &mut Vec<Face>) {
    // maximal chains of nonempty faces inside one facet = orderings of
    // its vertices, as cumulative prefixes
    fn rec(
        remaining: &[Vertex],
        current: Face,
        chain: &mut Vec<u32>,
        index: &BTreeMap<&Face, u32>,
        out: &mut Vec<Face>,
    ) {
        if remaining.is_empty() {
            out.push(chain.iter().copied().collect());
            return;
        }
        for (i, &v) in remaining.iter().enumerate() {
            let mut next = current.clone();
            next.insert(v);
            let label = index[&next];
            let rest: Vec<Vertex> = remaining
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, &u)| u)
                .collect();
            chain.push(label);
            rec(&rest, next, chain, index, out);
            chain.pop();
        }
    }
    rec(facet_verts, Face::new(), &mut Vec::new(), index, out);
}

/// Reduced homology ranks indexed from degree -1 upward, with per-degree
/// invariant factors > 1 when computed over the integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    ranks: Vec<usize>,
    torsion: Vec<Vec<Int>>,
}

impl HomologyProfile {
    /// Rank in reduced degree d (d >= -1).
    pub fn rank(&self, d: i64) -> usize {
        let idx = d + 1;
        if idx < 0 || idx as usize >= self.ranks.len() {
            0
        } else {
            self.ranks[idx as usize]
        }
    }

    pub fn torsion(&self, d: i64) -> &[Int] {
        static EMPTY: &[Int] = &[];
        let idx = d + 1;
        if idx < 0 || idx as usize >= self.torsion.len() {
            EMPTY
        } else {
            &self.torsion[idx as usize]
        }
    }

    /// Nonzero as a reduced homology group in degree d: positive rank or,
    /// over Z, torsion present.
    pub fn is_nonzero(&self, d: i64) -> bool {
        self.rank(d) > 0 || !self.torsion(d).is_empty()
    }

    pub fn max_degree(&self) -> i64 {
        self.ranks.len() as i64 - 2
    }
}

/// The 10 triangles of the standard 6-vertex (minimal) triangulation of
/// the real projective plane, on vertices 1..=6.
pub fn rp2_complex() -> SimplicialComplex {
    let tris: [[Vertex; 3]; 10] = [
        [1, 2, 3],
        [1, 2, 4],
        [1, 3, 5],
        [1, 4, 6],
        [1, 5, 6],
        [2, 3, 6],
        [2, 4, 5],
        [2, 5, 6],
        [3, 4, 5],
        [3, 4, 6],
    ];
    SimplicialComplex::build(tris.iter().map(|t| face(t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::build([face(&[1, 2]), face(&[2, 3]), face(&[1, 3])])
    }

    #[test]
    fn build_drops_dominated() {
        let k = SimplicialComplex::build([face(&[1, 2]), face(&[1])]);
        assert_eq!(k.facets().len(), 1);
        assert!(k.facets().contains(&face(&[1, 2])));
    }

    #[test]
    fn hollow_triangle_shape() {
        let k = hollow_triangle();
        assert_eq!(k.vertices(), vec![1, 2, 3]);
        assert_eq!(k.facets().len(), 3);
    }

    #[test]
    fn rp2_f_vector() {
        assert_eq!(rp2_complex().f_vector(), vec![6, 15, 10]);
    }

    #[test]
    fn induced_examples() {
        let k = hollow_triangle();
        let e = k.induced(&face(&[1, 2])).unwrap();
        assert_eq!(e.facets().len(), 1);
        assert!(e.facets().contains(&face(&[1, 2])));

        let empty = k.induced(&Face::new()).unwrap();
        assert!(empty.is_empty_complex());

        let cycle = SimplicialComplex::build([
            face(&[1, 2]),
            face(&[2, 3]),
            face(&[3, 4]),
            face(&[1, 4]),
        ]);
        let opp = cycle.induced(&face(&[1, 3])).unwrap();
        assert_eq!(
            opp.facets().iter().cloned().collect::<Vec<_>>(),
            vec![face(&[1]), face(&[3])]
        );

        assert!(k.induced(&face(&[9])).is_err());
    }

    #[test]
    fn link_examples() {
        let k = hollow_triangle();
        assert_eq!(k.link(&Face::new()).unwrap(), k);

        let solid = SimplicialComplex::build([face(&[1, 2, 3])]);
        assert_eq!(
            solid.link(&face(&[1])).unwrap(),
            SimplicialComplex::build([face(&[2, 3])])
        );

        let lk = k.link(&face(&[1])).unwrap();
        assert_eq!(
            lk.facets().iter().cloned().collect::<Vec<_>>(),
            vec![face(&[2]), face(&[3])]
        );

        assert!(k.link(&face(&[1, 2, 3])).is_err());
    }

    #[test]
    fn flag_examples() {
        assert_eq!(
            hollow_triangle().flag_complex(),
            SimplicialComplex::build([face(&[1, 2, 3])])
        );

        let cycle = SimplicialComplex::build([
            face(&[1, 2]),
            face(&[2, 3]),
            face(&[3, 4]),
            face(&[1, 4]),
        ]);
        assert_eq!(cycle.flag_complex(), cycle);

        // the 1-skeleton of the 6-vertex RP^2 is complete, so its flag
        // complex is the full 5-simplex
        let flag = rp2_complex().flag_complex();
        assert_eq!(flag.facets().len(), 1);
        assert_eq!(flag.facets().iter().next().unwrap().len(), 6);
    }

    #[test]
    fn subdivision_edge_and_triangle() {
        let edge = SimplicialComplex::build([face(&[1, 2])]);
        let (sd, _) = edge.barycentric_subdivision();
        assert_eq!(sd.f_vector(), vec![3, 2]);

        let solid = SimplicialComplex::build([face(&[1, 2, 3])]);
        let (sd, _) = solid.barycentric_subdivision();
        assert_eq!(sd.f_vector(), vec![7, 12, 6]);
        assert!(sd.is_flag());
    }

    #[test]
    fn homology_circle_and_points() {
        let h = hollow_triangle().reduced_homology(Coeffs::Q).unwrap();
        assert_eq!(h.rank(0), 0);
        assert_eq!(h.rank(1), 1);

        let pts = SimplicialComplex::build([face(&[1]), face(&[2])]);
        let h = pts.reduced_homology(Coeffs::Q).unwrap();
        assert_eq!(h.rank(0), 1);

        let h = SimplicialComplex::empty().reduced_homology(Coeffs::Q).unwrap();
        assert_eq!(h.rank(-1), 1);
    }

    #[test]
    fn homology_rp2() {
        let k = rp2_complex();
        let hz = k.reduced_homology(Coeffs::Z).unwrap();
        assert_eq!(hz.rank(0), 0);
        assert_eq!(hz.rank(1), 0);
        assert_eq!(hz.rank(2), 0);
        assert_eq!(hz.torsion(1), &[Int::from(2)]);

        let h2 = k.reduced_homology(Coeffs::Fp(2)).unwrap();
        assert_eq!(h2.rank(1), 1);
        assert_eq!(h2.rank(2), 1);
    }

    #[test]
    fn subdivision_preserves_rp2_homology() {
        let (sd, _) = rp2_complex().barycentric_subdivision();
        assert_eq!(sd.vertices().len(), 31);
        assert!(sd.is_flag());
        let hz = sd.reduced_homology(Coeffs::Z).unwrap();
        assert_eq!(hz.torsion(1), &[Int::from(2)]);
        assert_eq!(hz.rank(1), 0);
        assert_eq!(hz.rank(2), 0);
    }
}
