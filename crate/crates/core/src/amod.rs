//! Left `A`-modules as quiver representations.
//!
//! A [`Rep`] stores one vector space per vertex and one matrix per arrow.
//! Module maps are block-diagonal matrices `dim N × dim M` whose diagonal
//! blocks are the vertex components. Vertex arguments in this module's public
//! functions are 1-based, as in algebra files.

use std::sync::Arc;

use crate::error::{ensure, Error, Result};
use crate::exact::{Field, Matrix, Scalar, Subspace};
use crate::graded::{self, Gen, Graded, HomSpace};
use crate::quiver::{BoundAlgebra, Path};

#[derive(Clone, Debug)]
pub struct Rep {
    algebra: Arc<BoundAlgebra>,
    module: Graded,
}

impl PartialEq for Rep {
    fn eq(&self, other: &Rep) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) && self.module == other.module
    }
}

fn shape(a: &BoundAlgebra) -> Vec<(usize, usize)> {
    a.quiver().arrows.iter().map(|x| (x.source, x.target)).collect()
}

fn check_vertex(a: &BoundAlgebra, i: usize) -> Result<usize> {
    if i == 0 || i > a.vertex_count() {
        return Err(Error::Input(format!("vertex {i} out of range 1..{}", a.vertex_count())));
    }
    Ok(i - 1)
}

impl Rep {
    /// A representation from per-vertex dimensions and per-arrow matrices
    /// (`dims[target] × dims[source]`); relations are checked.
    pub fn new(algebra: Arc<BoundAlgebra>, dims: Vec<usize>, arrow_maps: Vec<Matrix>) -> Result<Rep> {
        if dims.len() != algebra.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: algebra.vertex_count(),
                found: dims.len(),
            });
        }
        if arrow_maps.len() != algebra.quiver().arrows.len() {
            return Err(Error::DimensionMismatch {
                expected: algebra.quiver().arrows.len(),
                found: arrow_maps.len(),
            });
        }
        let gens = shape(&algebra)
            .into_iter()
            .zip(arrow_maps)
            .map(|((source, target), matrix)| Gen {
                source,
                target,
                matrix,
            })
            .collect();
        let module = Graded::new(algebra.field(), dims, gens)?;
        let rep = Rep { algebra, module };
        if !rep.relations_vanish() {
            return Err(Error::Input("representation does not satisfy the relations".into()));
        }
        Ok(rep)
    }

    pub(crate) fn from_graded(algebra: Arc<BoundAlgebra>, module: Graded) -> Result<Rep> {
        let rep = Rep { algebra, module };
        ensure!(rep.relations_vanish(), "derived representation violates a relation");
        Ok(rep)
    }

    pub fn zero(algebra: Arc<BoundAlgebra>) -> Rep {
        let module = Graded::zero(algebra.field(), algebra.vertex_count(), &shape(&algebra));
        Rep { algebra, module }
    }

    /// The simple module `L_i`.
    pub fn simple(algebra: Arc<BoundAlgebra>, i: usize) -> Result<Rep> {
        let v = check_vertex(&algebra, i)?;
        let field = algebra.field();
        let mut dims = vec![0; algebra.vertex_count()];
        dims[v] = 1;
        let maps = shape(&algebra)
            .iter()
            .map(|&(s, t)| Matrix::zeros(field, dims[t], dims[s]))
            .collect();
        Rep::new(algebra, dims, maps)
    }

    /// The indecomposable projective `P_i = A e_i`.
    pub fn projective(algebra: Arc<BoundAlgebra>, i: usize) -> Result<Rep> {
        Ok(projective_with_paths(algebra, i)?.0)
    }

    pub fn algebra(&self) -> &Arc<BoundAlgebra> {
        &self.algebra
    }

    pub fn graded(&self) -> &Graded {
        &self.module
    }

    pub fn field(&self) -> Field {
        self.module.field()
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn dims(&self) -> &[usize] {
        self.module.dims()
    }

    pub fn is_zero(&self) -> bool {
        self.module.is_zero()
    }

    pub fn arrow_map(&self, k: usize) -> &Matrix {
        &self.module.gens()[k].matrix
    }

    /// Action of a path, `dims[target] × dims[source]`.
    pub fn path_action(&self, p: &Path) -> Matrix {
        let field = self.field();
        let mut m = Matrix::identity(field, self.dims()[p.source]);
        for &a in p.arrows.iter().rev() {
            m = self.arrow_map(a).mul(&m);
        }
        m
    }

    fn relations_vanish(&self) -> bool {
        let field = self.field();
        self.algebra.relations().iter().all(|r| {
            let (s, t) = (r.source(), r.target());
            let mut acc = Matrix::zeros(field, self.dims()[t], self.dims()[s]);
            for (c, p) in &r.terms {
                acc = acc.add(&self.path_action(p).scale(c));
            }
            acc.is_zero()
        })
    }

    fn same_algebra(&self, other: &Rep) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra.presentation() == other.algebra.presentation() {
            Ok(())
        } else {
            Err(Error::Input("modules over different algebras".into()))
        }
    }

    pub fn rad_power(&self, k: usize) -> Subspace {
        self.module.rad_power(k)
    }

    pub fn radical(&self) -> Subspace {
        self.module.radical()
    }

    pub fn radical_series(&self) -> Vec<Subspace> {
        self.module.radical_series()
    }

    pub fn socle(&self) -> Subspace {
        self.module.socle()
    }

    pub fn socle_series(&self) -> Vec<Subspace> {
        self.module.socle_series()
    }

    pub fn loewy_length(&self) -> usize {
        self.module.loewy_length()
    }

    pub fn is_rigid(&self) -> bool {
        self.module.is_rigid()
    }

    /// Multiplicity of each simple in the top, indexed by 0-based vertex.
    pub fn top_dims(&self) -> Vec<usize> {
        self.module.top_dims()
    }

    /// Per-vertex dimensions of a submodule.
    pub fn vertex_dims(&self, u: &Subspace) -> Vec<usize> {
        self.module.label_dims(u)
    }

    /// Layers `rad^k M / rad^{k+1} M` as per-vertex dimensions.
    pub fn radical_layers(&self) -> Vec<Vec<usize>> {
        let series = self.radical_series();
        series
            .windows(2)
            .map(|w| {
                let a = self.vertex_dims(&w[0]);
                let b = self.vertex_dims(&w[1]);
                a.iter().zip(&b).map(|(x, y)| x - y).collect()
            })
            .collect()
    }

    /// Layers `soc_k M / soc_{k-1} M`, bottom first.
    pub fn socle_layers(&self) -> Vec<Vec<usize>> {
        let series = self.socle_series();
        series
            .windows(2)
            .map(|w| {
                let a = self.vertex_dims(&w[1]);
                let b = self.vertex_dims(&w[0]);
                a.iter().zip(&b).map(|(x, y)| x - y).collect()
            })
            .collect()
    }

    pub fn is_submodule(&self, u: &Subspace) -> bool {
        self.module.is_submodule(u)
    }

    /// The submodule generated by `vectors`.
    pub fn sub_generated(&self, vectors: Vec<Vec<Scalar>>) -> Result<Subspace> {
        if let Some(v) = vectors.iter().find(|v| v.len() != self.dim()) {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(self.module.closure(vectors))
    }

    /// The submodule generated by the spaces at the given 0-based vertices.
    pub fn sub_generated_by_vertices(&self, vertices: &[usize]) -> Subspace {
        let seeds = vertices
            .iter()
            .flat_map(|&v| {
                let off = self.module.offset(v);
                (0..self.dims()[v]).map(move |c| off + c)
            })
            .map(|c| crate::exact::unit_vec(self.field(), self.dim(), c))
            .collect();
        self.module.closure(seeds)
    }

    pub fn submodule(&self, u: &Subspace) -> Result<(Rep, Matrix)> {
        let (g, inc) = self.module.submodule(u)?;
        Ok((Rep::from_graded(self.algebra.clone(), g)?, inc))
    }

    pub fn quotient(&self, u: &Subspace) -> Result<(Rep, Matrix)> {
        let (g, proj) = self.module.quotient(u)?;
        Ok((Rep::from_graded(self.algebra.clone(), g)?, proj))
    }

    /// Quotient by the whole `L_i`-isotypic part of the socle.
    pub fn quotient_by_socle_component(&self, i: usize) -> Result<(Rep, Matrix)> {
        let v = check_vertex(&self.algebra, i)?;
        let soc = self.socle();
        let part: Vec<Vec<Scalar>> = soc
            .vectors()
            .into_iter()
            .filter(|x| self.module.label_of(first_nonzero(x)) == v)
            .collect();
        if part.is_empty() {
            return Err(Error::Input(format!("L_{i} does not occur in the socle")));
        }
        let u = Subspace::from_vectors(self.field(), self.dim(), part);
        self.quotient(&u)
    }

    /// The multiplicity of `L_i` in the socle.
    pub fn socle_multiplicity(&self, i: usize) -> Result<usize> {
        let v = check_vertex(&self.algebra, i)?;
        Ok(self.vertex_dims(&self.socle())[v])
    }

    pub fn is_hom_to(&self, other: &Rep, f: &Matrix) -> bool {
        self.module.is_hom_to(&other.module, f)
    }

    /// Block of a map at a 0-based vertex.
    pub fn vertex_block(&self, other: &Rep, f: &Matrix, v: usize) -> Matrix {
        f.block(other.module.offset(v), self.module.offset(v), other.dims()[v], self.dims()[v])
    }

    /// The map `P_v → M` sending `e_v` to `x` (a vector supported at `v`).
    pub fn hom_from_projective(&self, v: usize, x: &[Scalar]) -> Result<Matrix> {
        let (p, paths) = projective_with_paths(self.algebra.clone(), v + 1)?;
        let off = self.module.offset(v);
        let xv = &x[off..off + self.dims()[v]];
        let mut f = Matrix::zeros(self.field(), self.dim(), p.dim());
        for (c, path) in paths.iter().enumerate() {
            let img = self.path_action(path).apply(xv);
            let t = self.module.offset(path.target);
            for (r, val) in img.into_iter().enumerate() {
                f.set(t + r, c, val);
            }
        }
        Ok(f)
    }
}

fn first_nonzero(x: &[Scalar]) -> usize {
    x.iter().position(|c| !c.is_zero()).expect("nonzero vector")
}

/// `P_i` together with the path attached to each coordinate.
pub fn projective_with_paths(algebra: Arc<BoundAlgebra>, i: usize) -> Result<(Rep, Vec<Path>)> {
    let v0 = check_vertex(&algebra, i)?;
    let field = algebra.field();
    let n = algebra.vertex_count();
    let basis_idx = algebra.paths_from(v0);
    // coordinates ordered by target vertex, then by basis order
    let mut order: Vec<usize> = basis_idx.clone();
    order.sort_by_key(|&b| (algebra.basis()[b].target, b));
    let mut dims = vec![0; n];
    let mut local = std::collections::HashMap::new();
    for &b in &order {
        let t = algebra.basis()[b].target;
        local.insert(b, dims[t]);
        dims[t] += 1;
    }
    let mut maps = Vec::new();
    for (k, arrow) in algebra.quiver().arrows.iter().enumerate() {
        let (s, t) = (arrow.source, arrow.target);
        let mut m = Matrix::zeros(field, dims[t], dims[s]);
        let ap = Path {
            source: s,
            target: t,
            arrows: vec![k],
        };
        for &b in order.iter().filter(|&&b| algebra.basis()[b].target == s) {
            let prod = ap.compose(&algebra.basis()[b]).expect("composable");
            for (c, val) in algebra.reduce_path(&prod) {
                let row = *local
                    .get(&c)
                    .ok_or_else(|| Error::Invariant("product left the projective".into()))?;
                m.set(row, local[&b], val);
            }
        }
        maps.push(m);
    }
    let paths = order.iter().map(|&b| algebra.basis()[b].clone()).collect();
    Ok((Rep::new(algebra, dims, maps)?, paths))
}

/// Direct sum with inclusions and projections.
pub fn direct_sum(algebra: &Arc<BoundAlgebra>, parts: &[&Rep]) -> Result<(Rep, Vec<Matrix>, Vec<Matrix>)> {
    for p in parts {
        if !Arc::ptr_eq(p.algebra(), algebra) && p.algebra().presentation() != algebra.presentation() {
            return Err(Error::Input("direct sum of modules over different algebras".into()));
        }
    }
    let graded: Vec<&Graded> = parts.iter().map(|p| &p.module).collect();
    let (g, incs, projs) = graded::direct_sum(algebra.field(), algebra.vertex_count(), &shape(algebra), &graded)?;
    Ok((Rep::from_graded(algebra.clone(), g)?, incs, projs))
}

/// `Hom_A(M, N)` with a canonical basis.
pub fn hom_space(m: &Rep, n: &Rep) -> Result<HomSpace> {
    m.same_algebra(n)?;
    graded::hom_space(&m.module, &n.module)
}

/// An isomorphism found by bounded search and certified invertible.
pub fn find_iso(m: &Rep, n: &Rep) -> Result<Option<Matrix>> {
    m.same_algebra(n)?;
    graded::find_iso(&m.module, &n.module)
}

pub fn find_injective(m: &Rep, n: &Rep) -> Result<Option<Matrix>> {
    m.same_algebra(n)?;
    graded::find_injective(&m.module, &n.module)
}

/// A projective cover over `A/rad^k A`: `source = ⊕ P_v/rad^k P_v`, one
/// summand per top basis vector.
#[derive(Clone, Debug)]
pub struct CoverModRad {
    /// 0-based vertex of each summand, in order.
    pub summands: Vec<usize>,
    pub source: Rep,
    pub epi: Matrix,
}

pub fn projective_cover_mod_radpower(m: &Rep, k: usize) -> Result<CoverModRad> {
    if !m.rad_power(k).is_zero() {
        return Err(Error::Input(format!("rad^{k} M is not zero")));
    }
    let algebra = m.algebra.clone();
    let mut summands = Vec::new();
    let mut parts = Vec::new();
    let mut maps = Vec::new();
    for (v, x) in m.module.top_lifts() {
        let p = Rep::projective(algebra.clone(), v + 1)?;
        let f = m.hom_from_projective(v, &x)?;
        let radk = p.rad_power(k);
        let (q, _) = p.quotient(&radk)?;
        // f factors through the quotient since rad^k M = 0
        let section = p.graded().quotient_section(&radk);
        maps.push(f.mul(&section));
        summands.push(v);
        parts.push(q);
    }
    let refs: Vec<&Rep> = parts.iter().collect();
    let (source, _, projs) = direct_sum(&algebra, &refs)?;
    let mut epi = Matrix::zeros(m.field(), m.dim(), source.dim());
    for (f, p) in maps.iter().zip(&projs) {
        epi = epi.add(&f.mul(p));
    }
    ensure!(source.is_hom_to(m, &epi), "cover is not a module map");
    ensure!(epi.rank() == m.dim(), "cover is not surjective");
    let ker = graded::kernel(&epi);
    ensure!(source.radical().contains_subspace(&ker), "cover kernel is not superfluous");
    Ok(CoverModRad { summands, source, epi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    fn alg(name: &str, n: Option<i64>) -> Arc<BoundAlgebra> {
        Arc::new(builtins::algebra(name, n).unwrap())
    }

    #[test]
    fn dual_numbers_projective() {
        let a = alg("kx2", None);
        let p = Rep::projective(a.clone(), 1).unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(p.loewy_length(), 2);
        let l = Rep::simple(a.clone(), 1).unwrap();
        assert_eq!(hom_space(&p, &p).unwrap().dim(), 2);
        assert_eq!(hom_space(&p, &l).unwrap().dim(), 1);
        assert_eq!(hom_space(&l, &p).unwrap().dim(), 1);
        assert_eq!(hom_space(&l, &l).unwrap().dim(), 1);
    }

    #[test]
    fn tree_projective() {
        let a = alg("ex54", None);
        let p1 = Rep::projective(a.clone(), 1).unwrap();
        assert_eq!(p1.dims(), &[1, 1, 1, 1, 1, 1]);
        assert_eq!(p1.vertex_dims(&p1.socle()), vec![0, 1, 0, 0, 1, 1]);
        let (m, _) = p1.quotient_by_socle_component(6).unwrap();
        assert_eq!(m.dim(), 5);
        assert!(!m.is_rigid());
        assert_eq!(m.radical_layers(), vec![vec![1, 0, 0, 0, 0, 0], vec![0, 1, 1, 1, 0, 0], vec![0, 0, 0, 0, 1, 0]]);
        let cover = projective_cover_mod_radpower(&m, 3).unwrap();
        assert_eq!(cover.summands, vec![0]);
        assert_eq!(cover.source.dim(), 6);
    }

    #[test]
    fn counterexample_projectives() {
        let a = alg("an", Some(5));
        let p3 = Rep::projective(a.clone(), 3).unwrap();
        assert_eq!(p3.loewy_length(), 3);
        assert_eq!(p3.radical_layers(), vec![vec![0, 0, 1], vec![0, 1, 0], vec![0, 0, 1]]);
        let (r, _) = p3.submodule(&p3.radical()).unwrap();
        assert_eq!(r.loewy_length(), 2);
        assert!(r.is_rigid());
        let cover = projective_cover_mod_radpower(&r, 2).unwrap();
        assert_eq!(cover.summands, vec![1]);
        assert_eq!(cover.source.dim(), 3);
        let p1 = Rep::projective(a.clone(), 1).unwrap();
        assert_eq!(p1.dim(), 7);
        assert_eq!(p1.loewy_length(), 5);
    }

    #[test]
    fn simple_and_errors() {
        let a = alg("an", Some(3));
        let l = Rep::simple(a.clone(), 2).unwrap();
        assert_eq!(l.loewy_length(), 1);
        assert!(l.is_rigid());
        let (z, _) = l.quotient_by_socle_component(2).unwrap();
        assert!(z.is_zero());
        assert!(l.quotient_by_socle_component(1).is_err());
        assert!(Rep::simple(a.clone(), 4).is_err());
        assert!(projective_cover_mod_radpower(&Rep::projective(a, 1).unwrap(), 1).is_err());
    }

    #[test]
    fn relations_are_enforced() {
        let a = alg("kx2", None);
        let field = a.field();
        let bad = Rep::new(a.clone(), vec![1], vec![Matrix::identity(field, 1)]);
        assert!(bad.is_err());
        let ok = Rep::new(a, vec![1], vec![Matrix::zeros(field, 1, 1)]);
        assert!(ok.is_ok());
    }
}
