//! Modules presented by a grading and homogeneous generator actions.
//!
//! Both `A`-modules (graded by vertices, generated by arrows) and modules
//! over the ADR algebra (graded by labels, generated by a radical basis) fit
//! this shape: the underlying space is `⊕_v M_v`, stored in contiguous blocks,
//! and each generator maps block `source` into block `target`. The generators
//! together with the block projections generate the acting algebra, and the
//! generators alone span its radical. Maps between two such modules are
//! block-diagonal matrices of size `dim N × dim M`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{nullspace, unit_vec, zero_vec, Field, Matrix, Scalar, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gen {
    pub source: usize,
    pub target: usize,
    /// `dims[target] × dims[source]`.
    pub matrix: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graded {
    field: Field,
    dims: Vec<usize>,
    offsets: Vec<usize>,
    gens: Vec<Gen>,
}

/// Number of random combinations tried by [`find_iso`] and [`find_injective`]
/// after the basis elements.
pub const RANDOM_RETRIES: usize = 20;

fn offsets_of(dims: &[usize]) -> Vec<usize> {
    let mut off = Vec::with_capacity(dims.len() + 1);
    let mut acc = 0;
    off.push(0);
    for d in dims {
        acc += d;
        off.push(acc);
    }
    off
}

impl Graded {
    pub fn new(field: Field, dims: Vec<usize>, gens: Vec<Gen>) -> Result<Graded> {
        for (k, g) in gens.iter().enumerate() {
            let (r, c) = (dims[g.target], dims[g.source]);
            if g.matrix.rows() != r || g.matrix.cols() != c {
                return Err(Error::Input(format!(
                    "generator {k} has shape {}x{}, expected {r}x{c}",
                    g.matrix.rows(),
                    g.matrix.cols()
                )));
            }
        }
        let offsets = offsets_of(&dims);
        Ok(Graded {
            field,
            dims,
            offsets,
            gens,
        })
    }

    /// The zero module with the given generator shape.
    pub fn zero(field: Field, labels: usize, shape: &[(usize, usize)]) -> Graded {
        let gens = shape
            .iter()
            .map(|&(source, target)| Gen {
                source,
                target,
                matrix: Matrix::zeros(field, 0, 0),
            })
            .collect();
        Graded {
            field,
            dims: vec![0; labels],
            offsets: vec![0; labels + 1],
            gens,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn labels(&self) -> usize {
        self.dims.len()
    }

    pub fn offset(&self, v: usize) -> usize {
        self.offsets[v]
    }

    pub fn gens(&self) -> &[Gen] {
        &self.gens
    }

    pub fn shape(&self) -> Vec<(usize, usize)> {
        self.gens.iter().map(|g| (g.source, g.target)).collect()
    }

    /// Label of a coordinate of the underlying space.
    pub fn label_of(&self, coord: usize) -> usize {
        self.offsets.partition_point(|&o| o <= coord) - 1
    }

    /// Generator `k` applied to a vector of the whole space.
    pub fn apply_gen(&self, k: usize, v: &[Scalar]) -> Vec<Scalar> {
        let g = &self.gens[k];
        let s = self.offsets[g.source];
        let t = self.offsets[g.target];
        let mut out = zero_vec(self.field, self.dim());
        let img = g.matrix.apply(&v[s..s + self.dims[g.source]]);
        out[t..t + img.len()].clone_from_slice(&img);
        out
    }

    /// Generator `k` as an endomorphism of the whole space.
    pub fn gen_total(&self, k: usize) -> Matrix {
        let g = &self.gens[k];
        let mut m = Matrix::zeros(self.field, self.dim(), self.dim());
        m.set_block(self.offsets[g.target], self.offsets[g.source], &g.matrix);
        m
    }

    /// Projection of a vector onto block `v`, kept in the whole space.
    pub fn project(&self, v: usize, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vec(self.field, self.dim());
        let r = self.offsets[v]..self.offsets[v + 1];
        out[r.clone()].clone_from_slice(&x[r]);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.field, self.dim())
    }

    pub fn zero_sub(&self) -> Subspace {
        Subspace::zero(self.field, self.dim())
    }

    /// `Σ_k g_k(U)`; for a submodule `U` this is `rad U`.
    pub fn image_sum(&self, u: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for x in u.vectors() {
            for k in 0..self.gens.len() {
                let y = self.apply_gen(k, &x);
                if !y.iter().all(Scalar::is_zero) {
                    vs.push(y);
                }
            }
        }
        Subspace::from_vectors(self.field, self.dim(), vs)
    }

    pub fn radical(&self) -> Subspace {
        self.image_sum(&self.full())
    }

    /// `rad^k M`.
    pub fn rad_power(&self, k: usize) -> Subspace {
        let mut u = self.full();
        for _ in 0..k {
            if u.is_zero() {
                break;
            }
            u = self.image_sum(&u);
        }
        u
    }

    /// `[M, rad M, rad^2 M, ..., 0]`.
    pub fn radical_series(&self) -> Vec<Subspace> {
        let mut out = vec![self.full()];
        while !out.last().unwrap().is_zero() {
            let next = self.image_sum(out.last().unwrap());
            out.push(next);
        }
        out
    }

    /// `{x : g x ∈ U for every generator g}`; with `U = soc_{j-1}` this is `soc_j`.
    pub fn socle_over(&self, u: &Subspace) -> Subspace {
        let field = self.field;
        let mut vs = Vec::new();
        for v in 0..self.labels() {
            let dv = self.dims[v];
            if dv == 0 {
                continue;
            }
            // conditions on x ∈ M_v, one block row per generator leaving v
            let mut rows: Vec<Vec<Scalar>> = Vec::new();
            for g in self.gens.iter().filter(|g| g.source == v) {
                let t = g.target;
                let ut = self.block_part(u, t);
                let q = ut.quotient();
                let cond = q.matrix.mul(&g.matrix);
                rows.extend(cond.row_vecs());
            }
            let local = if rows.is_empty() {
                Subspace::full(field, dv)
            } else {
                nullspace(&Matrix::from_rows(field, dv, rows))
            };
            for x in local.vectors() {
                let mut full = zero_vec(field, self.dim());
                full[self.offsets[v]..self.offsets[v] + dv].clone_from_slice(&x);
                vs.push(full);
            }
        }
        Subspace::from_vectors(field, self.dim(), vs)
    }

    pub fn socle(&self) -> Subspace {
        self.socle_over(&self.zero_sub())
    }

    /// `[0, soc M, soc_2 M, ..., M]`.
    pub fn socle_series(&self) -> Vec<Subspace> {
        let mut out = vec![self.zero_sub()];
        while out.last().unwrap().dim() < self.dim() {
            let next = self.socle_over(out.last().unwrap());
            if next == *out.last().unwrap() {
                // cannot happen for modules over a finite-dimensional algebra
                break;
            }
            out.push(next);
        }
        out
    }

    pub fn loewy_length(&self) -> usize {
        self.radical_series().len() - 1
    }

    /// True iff `rad^k M = soc_{LL-k} M` for every `k`.
    pub fn is_rigid(&self) -> bool {
        let rad = self.radical_series();
        let soc = self.socle_series();
        if rad.len() != soc.len() {
            return false;
        }
        let ll = rad.len() - 1;
        (0..=ll).all(|k| rad[k] == soc[ll - k])
    }

    /// The part of a homogeneous subspace in block `v`, in block coordinates.
    pub fn block_part(&self, u: &Subspace, v: usize) -> Subspace {
        let (a, b) = (self.offsets[v], self.offsets[v + 1]);
        let vs = u
            .vectors()
            .into_iter()
            .filter(|x| x[a..b].iter().any(|c| !c.is_zero()))
            .map(|x| x[a..b].to_vec())
            .collect();
        Subspace::from_vectors(self.field, b - a, vs)
    }

    /// Per-label dimensions of a homogeneous subspace.
    pub fn label_dims(&self, u: &Subspace) -> Vec<usize> {
        let mut out = vec![0; self.labels()];
        for &p in u.pivots() {
            out[self.label_of(p)] += 1;
        }
        out
    }

    /// True when `u` is spanned by homogeneous vectors.
    pub fn is_homogeneous(&self, u: &Subspace) -> bool {
        let total: usize = (0..self.labels()).map(|v| self.block_part(u, v).dim()).sum();
        total == u.dim()
    }

    pub fn is_submodule(&self, u: &Subspace) -> bool {
        self.is_homogeneous(u)
            && u.vectors()
                .iter()
                .all(|x| (0..self.gens.len()).all(|k| u.contains(&self.apply_gen(k, x))))
    }

    /// Smallest submodule containing `seeds`.
    pub fn closure(&self, seeds: Vec<Vec<Scalar>>) -> Subspace {
        let mut pending: Vec<Vec<Scalar>> = Vec::new();
        for s in seeds {
            for v in 0..self.labels() {
                let p = self.project(v, &s);
                if p.iter().any(|c| !c.is_zero()) {
                    pending.push(p);
                }
            }
        }
        let mut span = self.zero_sub();
        while let Some(x) = pending.pop() {
            if span.contains(&x) {
                continue;
            }
            span = span.sum(&Subspace::from_vectors(self.field, self.dim(), vec![x.clone()]));
            for k in 0..self.gens.len() {
                let y = self.apply_gen(k, &x);
                if y.iter().any(|c| !c.is_zero()) && !span.contains(&y) {
                    pending.push(y);
                }
            }
        }
        span
    }

    /// The submodule `U` as a module, with its inclusion map.
    pub fn submodule(&self, u: &Subspace) -> Result<(Graded, Matrix)> {
        if !self.is_submodule(u) {
            return Err(Error::Input("subspace is not a submodule".into()));
        }
        let parts: Vec<Subspace> = (0..self.labels()).map(|v| self.block_part(u, v)).collect();
        let dims: Vec<usize> = parts.iter().map(Subspace::dim).collect();
        let field = self.field;
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let (s, t) = (g.source, g.target);
            let mut m = Matrix::zeros(field, dims[t], dims[s]);
            for (c, x) in parts[s].vectors().iter().enumerate() {
                let y = g.matrix.apply(x);
                let coords = parts[t]
                    .coordinates(&y)
                    .ok_or_else(|| Error::Invariant("submodule not closed under a generator".into()))?;
                for (r, val) in coords.into_iter().enumerate() {
                    m.set(r, c, val);
                }
            }
            gens.push(Gen {
                source: s,
                target: t,
                matrix: m,
            });
        }
        let sub = Graded::new(field, dims, gens)?;
        let mut inc = Matrix::zeros(field, self.dim(), sub.dim());
        for (v, part) in parts.iter().enumerate() {
            inc.set_block(self.offsets[v], sub.offsets[v], &part.basis().transpose());
        }
        Ok((sub, inc))
    }

    /// `M/U` with the canonical surjection; the complement is spanned by the
    /// non-pivot coordinates of each block of `U`.
    pub fn quotient(&self, u: &Subspace) -> Result<(Graded, Matrix)> {
        if !self.is_submodule(u) {
            return Err(Error::Input("cannot take a quotient by a non-submodule".into()));
        }
        let field = self.field;
        let quots: Vec<_> = (0..self.labels()).map(|v| self.block_part(u, v).quotient()).collect();
        let dims: Vec<usize> = quots.iter().map(|q| q.dim()).collect();
        let gens = self
            .gens
            .iter()
            .map(|g| Gen {
                source: g.source,
                target: g.target,
                matrix: quots[g.target]
                    .matrix
                    .mul(&g.matrix)
                    .mul(&quots[g.source].section()),
            })
            .collect();
        let q = Graded::new(field, dims, gens)?;
        let mut proj = Matrix::zeros(field, q.dim(), self.dim());
        for (v, qv) in quots.iter().enumerate() {
            proj.set_block(q.offsets[v], self.offsets[v], &qv.matrix);
        }
        Ok((q, proj))
    }

    /// The section of [`Graded::quotient`]: quotient basis vectors go to unit
    /// vectors at the complement coordinates.
    pub fn quotient_section(&self, u: &Subspace) -> Matrix {
        let quots: Vec<_> = (0..self.labels()).map(|v| self.block_part(u, v).quotient()).collect();
        let qdims: Vec<usize> = quots.iter().map(|q| q.dim()).collect();
        let qoff = offsets_of(&qdims);
        let mut s = Matrix::zeros(self.field, self.dim(), qoff[self.labels()]);
        for (v, q) in quots.iter().enumerate() {
            s.set_block(self.offsets[v], qoff[v], &q.section());
        }
        s
    }

    /// Per-label dimensions of the top `M / rad M`.
    pub fn top_dims(&self) -> Vec<usize> {
        let rad = self.radical();
        let rd = self.label_dims(&rad);
        self.dims.iter().zip(rd).map(|(d, r)| d - r).collect()
    }

    /// Lifts of a basis of the top: for each label, unit vectors at the
    /// non-pivot coordinates of `rad M` in that block.
    pub fn top_lifts(&self) -> Vec<(usize, Vec<Scalar>)> {
        let rad = self.radical();
        let mut out = Vec::new();
        for v in 0..self.labels() {
            let q = self.block_part(&rad, v).quotient();
            for &c in &q.complement {
                out.push((v, unit_vec(self.field, self.dim(), self.offsets[v] + c)));
            }
        }
        out
    }

    /// Checks that a block-diagonal matrix is a module map `self → other`.
    pub fn is_hom_to(&self, other: &Graded, f: &Matrix) -> bool {
        if f.rows() != other.dim() || f.cols() != self.dim() {
            return false;
        }
        for v in 0..self.labels() {
            for w in 0..self.labels() {
                if v != w
                    && !f
                        .block(other.offsets[w], self.offsets[v], other.dims[w], self.dims[v])
                        .is_zero()
                {
                    return false;
                }
            }
        }
        self.gens.iter().zip(&other.gens).all(|(g, h)| {
            let fs = f.block(other.offsets[g.source], self.offsets[g.source], other.dims[g.source], self.dims[g.source]);
            let ft = f.block(other.offsets[g.target], self.offsets[g.target], other.dims[g.target], self.dims[g.target]);
            h.matrix.mul(&fs) == ft.mul(&g.matrix)
        })
    }

    /// Checks an action-shape match with `other`.
    pub fn same_shape(&self, other: &Graded) -> bool {
        self.labels() == other.labels() && self.shape() == other.shape() && self.field == other.field
    }
}

/// Block-diagonal direct sum, with inclusions and projections.
pub fn direct_sum(field: Field, labels: usize, shape: &[(usize, usize)], parts: &[&Graded]) -> Result<(Graded, Vec<Matrix>, Vec<Matrix>)> {
    let mut dims = vec![0; labels];
    for p in parts {
        if p.labels() != labels || p.shape() != shape {
            return Err(Error::Input("direct sum of modules over different algebras".into()));
        }
        for v in 0..labels {
            dims[v] += p.dims[v];
        }
    }
    let offsets = offsets_of(&dims);
    // local offset of part `k` inside block `v`
    let mut local = vec![vec![0; labels]; parts.len()];
    for v in 0..labels {
        let mut acc = 0;
        for (k, p) in parts.iter().enumerate() {
            local[k][v] = acc;
            acc += p.dims[v];
        }
    }
    let gens = shape
        .iter()
        .enumerate()
        .map(|(gi, &(s, t))| {
            let mut m = Matrix::zeros(field, dims[t], dims[s]);
            for (k, p) in parts.iter().enumerate() {
                m.set_block(local[k][t], local[k][s], &p.gens[gi].matrix);
            }
            Gen {
                source: s,
                target: t,
                matrix: m,
            }
        })
        .collect();
    let sum = Graded::new(field, dims, gens)?;
    let mut incs = Vec::new();
    let mut projs = Vec::new();
    for (k, p) in parts.iter().enumerate() {
        let mut inc = Matrix::zeros(field, sum.dim(), p.dim());
        for v in 0..labels {
            inc.set_block(offsets[v] + local[k][v], p.offsets[v], &Matrix::identity(field, p.dims[v]));
        }
        projs.push(inc.transpose());
        incs.push(inc);
    }
    Ok((sum, incs, projs))
}

/// A basis of `Hom(M, N)` in canonical order, as block-diagonal matrices.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub basis: Vec<Matrix>,
    /// The same space inside the flattened unknowns (see [`flatten`]).
    pub flat: Subspace,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a homomorphism in `basis`.
    pub fn coordinates(&self, m: &Graded, n: &Graded, f: &Matrix) -> Option<Vec<Scalar>> {
        self.flat.coordinates(&flatten(m, n, f))
    }
}

fn unknown_offsets(m: &Graded, n: &Graded) -> Vec<usize> {
    let sizes: Vec<usize> = (0..m.labels()).map(|v| m.dims[v] * n.dims[v]).collect();
    offsets_of(&sizes)
}

/// Flattens the diagonal blocks of `f: M → N`, each row-major, block by block.
pub fn flatten(m: &Graded, n: &Graded, f: &Matrix) -> Vec<Scalar> {
    let mut out = Vec::new();
    for v in 0..m.labels() {
        for r in 0..n.dims[v] {
            for c in 0..m.dims[v] {
                out.push(f.get(n.offsets[v] + r, m.offsets[v] + c).clone());
            }
        }
    }
    out
}

pub fn unflatten(m: &Graded, n: &Graded, x: &[Scalar]) -> Matrix {
    let mut f = Matrix::zeros(m.field, n.dim(), m.dim());
    let off = unknown_offsets(m, n);
    for v in 0..m.labels() {
        for r in 0..n.dims[v] {
            for c in 0..m.dims[v] {
                f.set(n.offsets[v] + r, m.offsets[v] + c, x[off[v] + r * m.dims[v] + c].clone());
            }
        }
    }
    f
}

/// Linear conditions `N_g f_s - f_t M_g = 0` for generator `gi`, as rows
/// over the flattened unknowns.
pub(crate) fn commuting_rows(m: &Graded, n: &Graded, gi: usize) -> Vec<Vec<Scalar>> {
    let field = m.field;
    let off = unknown_offsets(m, n);
    let total = *off.last().unwrap();
    let (g, h) = (&m.gens[gi], &n.gens[gi]);
    let (s, t) = (g.source, g.target);
    let (ms, mt, ns, nt) = (m.dims[s], m.dims[t], n.dims[s], n.dims[t]);
    let mut rows = Vec::with_capacity(nt * ms);
    for r in 0..nt {
        for c in 0..ms {
            // entry (r, c) of  h f_s - f_t g
            let mut row = vec![field.zero(); total];
            for k in 0..ns {
                let a = h.matrix.get(r, k);
                if !a.is_zero() {
                    let idx = off[s] + k * ms + c;
                    row[idx] = &row[idx] + a;
                }
            }
            for k in 0..mt {
                let b = g.matrix.get(k, c);
                if !b.is_zero() {
                    let idx = off[t] + r * mt + k;
                    row[idx] = &row[idx] - b;
                }
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    rows
}

/// `Hom(M, N)`, eliminating one generator's conditions at a time.
pub fn hom_space(m: &Graded, n: &Graded) -> Result<HomSpace> {
    if !m.same_shape(n) {
        return Err(Error::Input("Hom between modules over different algebras".into()));
    }
    let field = m.field;
    let total = *unknown_offsets(m, n).last().unwrap();
    // current solution space, rows are flattened maps
    let mut sol = Subspace::full(field, total);
    for gi in 0..m.gens.len() {
        if sol.is_zero() {
            break;
        }
        let rows = commuting_rows(m, n, gi);
        if rows.is_empty() {
            continue;
        }
        let c = Matrix::from_rows(field, total, rows);
        // restrict to the current solutions: y ↦ c · (yᵀ sol)
        let restricted = c.mul(&sol.basis().transpose());
        let kernel = nullspace(&restricted);
        let vectors = kernel.vectors().iter().map(|y| sol.combine(y)).collect();
        sol = Subspace::from_vectors(field, total, vectors);
    }
    let basis = sol.vectors().iter().map(|x| unflatten(m, n, x)).collect();
    Ok(HomSpace { basis, flat: sol })
}

/// `ker f` as a subspace of the source.
pub fn kernel(f: &Matrix) -> Subspace {
    nullspace(f)
}

/// `im f` as a subspace of the target.
pub fn image(f: &Matrix) -> Subspace {
    f.column_space()
}

/// Sum of the images of all maps `U → M` for `U` in `thetas`.
pub fn trace(thetas: &[&Graded], m: &Graded) -> Result<Subspace> {
    let mut out = m.zero_sub();
    for u in thetas {
        for f in hom_space(u, m)?.basis {
            out = out.sum(&image(&f));
        }
    }
    Ok(out)
}

/// Intersection of the kernels of all maps `M → U` for `U` in `thetas`.
pub fn reject(m: &Graded, thetas: &[&Graded]) -> Result<Subspace> {
    let mut out = m.full();
    for u in thetas {
        for f in hom_space(m, u)?.basis {
            out = out.intersect(&kernel(&f))?;
        }
    }
    Ok(out)
}

fn random_combination(rng: &mut ChaCha8Rng, field: Field, basis: &[Matrix]) -> Matrix {
    let mut acc = Matrix::zeros(field, basis[0].rows(), basis[0].cols());
    for b in basis {
        let c = field.from_i64(rng.gen_range(-5..=5));
        if !c.is_zero() {
            acc = acc.add(&b.scale(&c));
        }
    }
    acc
}

/// Searches `Hom(M, N)` for an element satisfying `accept`: first each basis
/// element, then [`RANDOM_RETRIES`] seeded random combinations.
fn search_hom(hom: &HomSpace, field: Field, seed: u64, accept: impl Fn(&Matrix) -> bool) -> Option<Matrix> {
    if let Some(b) = hom.basis.iter().find(|b| accept(b)) {
        return Some(b.clone());
    }
    if hom.basis.is_empty() {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..RANDOM_RETRIES)
        .map(|_| random_combination(&mut rng, field, &hom.basis))
        .find(|f| accept(f))
}

/// An isomorphism `M → N`, certified invertible, or `None` if the bounded
/// search finds none.
pub fn find_iso(m: &Graded, n: &Graded) -> Result<Option<Matrix>> {
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m.dim() == 0 {
        return Ok(Some(Matrix::zeros(m.field, 0, 0)));
    }
    if m.top_dims() != n.top_dims() || m.label_dims(&m.socle()) != n.label_dims(&n.socle()) {
        return Ok(None);
    }
    let hom = hom_space(m, n)?;
    Ok(search_hom(&hom, m.field, 0x0150_1504, Matrix::is_invertible))
}

/// An injective map `M → N`, certified by rank, or `None`.
pub fn find_injective(m: &Graded, n: &Graded) -> Result<Option<Matrix>> {
    if m.dims().iter().zip(n.dims()).any(|(a, b)| a > b) {
        return Ok(None);
    }
    if m.dim() == 0 {
        return Ok(Some(Matrix::zeros(m.field, n.dim(), 0)));
    }
    let hom = hom_space(m, n)?;
    let d = m.dim();
    Ok(search_hom(&hom, m.field, 0x0001_03c7, |f| f.rank() == d))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    /// Dual numbers: one label, one generator `x` with `x^2 = 0`.
    fn uniserial(len: usize) -> Graded {
        let mut x = Matrix::zeros(Q, len, len);
        for i in 1..len {
            x.set(i, i - 1, Q.one());
        }
        Graded::new(
            Q,
            vec![len],
            vec![Gen {
                source: 0,
                target: 0,
                matrix: x,
            }],
        )
        .unwrap()
    }

    #[test]
    fn series_of_a_uniserial_module() {
        let m = uniserial(3);
        assert_eq!(m.loewy_length(), 3);
        assert_eq!(m.radical_series().len(), 4);
        assert_eq!(m.socle_series().len(), 4);
        assert!(m.is_rigid());
        assert_eq!(m.socle().dim(), 1);
        assert_eq!(m.top_dims(), vec![1]);
    }

    #[test]
    fn hom_dims_between_uniserials() {
        // Hom(U_a, U_b) over K[x]/(x^n) has dimension min(a, b).
        for a in 1..4 {
            for b in 1..4 {
                let h = hom_space(&uniserial(a), &uniserial(b)).unwrap();
                assert_eq!(h.dim(), a.min(b), "({a},{b})");
                for f in &h.basis {
                    assert!(uniserial(a).is_hom_to(&uniserial(b), f));
                }
            }
        }
    }

    #[test]
    fn quotient_and_submodule() {
        let m = uniserial(3);
        let rad = m.radical();
        let (q, p) = m.quotient(&rad).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(m.is_hom_to(&q, &p));
        let (s, i) = m.submodule(&rad).unwrap();
        assert_eq!(s.loewy_length(), 2);
        assert!(s.is_hom_to(&m, &i));
        let (z, id) = m.quotient(&m.zero_sub()).unwrap();
        assert_eq!(z, m);
        assert_eq!(id, Matrix::identity(Q, 3));
    }

    #[test]
    fn direct_sums_and_isomorphisms() {
        let a = uniserial(2);
        let b = uniserial(1);
        let shape = a.shape();
        let (ab, incs, projs) = direct_sum(Q, 1, &shape, &[&a, &b]).unwrap();
        let (ba, _, _) = direct_sum(Q, 1, &shape, &[&b, &a]).unwrap();
        assert_eq!(ab.dim(), 3);
        assert!(a.is_hom_to(&ab, &incs[0]));
        assert!(ab.is_hom_to(&b, &projs[1]));
        let iso = find_iso(&ab, &ba).unwrap().unwrap();
        assert!(iso.is_invertible());
        assert!(find_iso(&ab, &uniserial(3)).unwrap().is_none());
        assert!(find_injective(&b, &ab).unwrap().is_some());
        assert!(find_injective(&uniserial(3), &ab).unwrap().is_none());
    }

    #[test]
    fn closure_generates_submodules() {
        let m = uniserial(3);
        let top = unit_vec(Q, 3, 0);
        assert_eq!(m.closure(vec![top]).dim(), 3);
        let mid = unit_vec(Q, 3, 1);
        assert_eq!(m.closure(vec![mid]), m.radical());
        assert!(m.closure(vec![]).is_zero());
    }
}
