//! The ADR algebra `R = End_A(G)^op` of `G = ⊕_{i,j} P_i/rad^j P_i` and the
//! functor `Hom_A(G, -)`.
//!
//! Summands `G_{i,j}` are indexed by labels `(i, j)` with `1 <= j <= l_i`,
//! `l_i = LL(P_i)`, ordered by `i` and then `j`; internally a label is its
//! position `s` in that order. The basis of `R` is a union of bases of the
//! blocks `Hom(G_s, G_t)`: first the identities `e_s`, then bases of the
//! radical of each block. The product is opposite composition,
//! `a ·_R b = b ∘ a`, so `Hom_A(G, M)` is a left `R`-module via
//! `r · f = f ∘ r`. An element `r: G_s → G_t` therefore maps the label-`t`
//! part of a module to its label-`s` part.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::amod::{self, Rep};
use crate::error::{ensure, Error, Result};
use crate::exact::{nullspace, unit_vec, Field, Matrix, Scalar, Subspace};
use crate::graded::{self, Gen, Graded, HomSpace};
use crate::quiver::BoundAlgebra;

/// A label `(i, j)` of a summand `G_{i,j}`; both entries are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct Label(pub usize, pub usize);

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One basis element of `R`: a map `G_source → G_target`.
#[derive(Clone, Debug)]
pub struct RElement {
    pub source: usize,
    pub target: usize,
    pub map: Matrix,
}

#[derive(Clone, Debug)]
struct Block {
    /// Indices into the element list.
    elements: Vec<usize>,
    /// Canonical basis of `Hom(G_s, G_t)`.
    hom: HomSpace,
    /// Row `k` holds the element coordinates of canonical basis vector `k`.
    canonical_to_elements: Matrix,
}

#[derive(Debug)]
pub struct AdrContext {
    algebra: Arc<BoundAlgebra>,
    projectives: Vec<Rep>,
    loewy: Vec<usize>,
    labels: Vec<Label>,
    label_index: HashMap<Label, usize>,
    summands: Vec<Rep>,
    elements: Vec<RElement>,
    blocks: Vec<Vec<Block>>,
    mult: Vec<Vec<Vec<(usize, Scalar)>>>,
    radical: Subspace,
    shape: Vec<(usize, usize)>,
    projectives_r: Vec<Graded>,
    pub(crate) standards: OnceLock<Vec<Graded>>,
}

impl AdrContext {
    /// Builds `G`, the basis and structure constants of `R`, its radical, and
    /// checks the context invariants.
    pub fn build(algebra: Arc<BoundAlgebra>) -> Result<Arc<AdrContext>> {
        let field = algebra.field();
        let n = algebra.vertex_count();
        let mut projectives = Vec::with_capacity(n);
        let mut loewy = Vec::with_capacity(n);
        let mut labels = Vec::new();
        let mut summands = Vec::new();
        for i in 1..=n {
            let p = Rep::projective(algebra.clone(), i)?;
            let l = p.loewy_length();
            for j in 1..=l {
                let (g, _) = p.quotient(&p.rad_power(j))?;
                labels.push(Label(i, j));
                summands.push(g);
            }
            loewy.push(l);
            projectives.push(p);
        }
        let count = labels.len();
        let label_index = labels.iter().enumerate().map(|(k, l)| (*l, k)).collect();

        // Block bases. Identities come first in the element list.
        let mut elements: Vec<RElement> = (0..count)
            .map(|s| RElement {
                source: s,
                target: s,
                map: Matrix::identity(field, summands[s].dim()),
            })
            .collect();
        let mut block_elements: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); count]; count];
        let mut homs: Vec<Vec<Option<HomSpace>>> = vec![vec![None; count]; count];
        for s in 0..count {
            for t in 0..count {
                let hom = amod::hom_space(&summands[s], &summands[t])?;
                let radical_maps: Vec<Matrix> = if s == t {
                    let g = &summands[s];
                    let (rad, inc) = g.submodule(&g.radical())?;
                    let into_rad = amod::hom_space(g, &rad)?;
                    let flat: Vec<Vec<Scalar>> = into_rad
                        .basis
                        .iter()
                        .map(|f| graded::flatten(g.graded(), g.graded(), &inc.mul(f)))
                        .collect();
                    let total = hom.flat.ambient();
                    let canon = Subspace::from_vectors(field, total, flat);
                    ensure!(
                        canon.dim() + 1 == hom.dim(),
                        "End(G_{}) is not local: dim {} but radical dim {}",
                        labels[s],
                        hom.dim(),
                        canon.dim()
                    );
                    block_elements[s][t].push(s);
                    canon.vectors().iter().map(|x| graded::unflatten(g.graded(), g.graded(), x)).collect()
                } else {
                    hom.basis.clone()
                };
                for map in radical_maps {
                    block_elements[s][t].push(elements.len());
                    elements.push(RElement { source: s, target: t, map });
                }
                homs[s][t] = Some(hom);
            }
        }

        let mut blocks: Vec<Vec<Block>> = Vec::with_capacity(count);
        for s in 0..count {
            let mut row = Vec::with_capacity(count);
            for t in 0..count {
                let hom = homs[s][t].take().unwrap();
                let els = std::mem::take(&mut block_elements[s][t]);
                let (gs, gt) = (summands[s].graded(), summands[t].graded());
                let k = els.len();
                ensure!(k == hom.dim(), "block ({s},{t}) basis has wrong size");
                let mut d = Matrix::zeros(field, k, k);
                for (r, &e) in els.iter().enumerate() {
                    let coords = hom
                        .coordinates(gs, gt, &elements[e].map)
                        .ok_or_else(|| Error::Invariant("element outside its Hom block".into()))?;
                    for (c, v) in coords.into_iter().enumerate() {
                        d.set(r, c, v);
                    }
                }
                let canonical_to_elements = d
                    .inverse()
                    .ok_or_else(|| Error::Invariant("block basis is not a basis".into()))?;
                row.push(Block {
                    elements: els,
                    hom,
                    canonical_to_elements,
                });
            }
            blocks.push(row);
        }

        let dim = elements.len();
        if let Field::Prime(p) = field {
            if p as usize <= dim {
                return Err(Error::Input(format!(
                    "the trace-form radical needs characteristic 0 or p > dim R = {dim}; got Fp:{p}"
                )));
            }
        }

        let shape = elements[count..].iter().map(|e| (e.target, e.source)).collect();
        let mut ctx = AdrContext {
            algebra,
            projectives,
            loewy,
            labels,
            label_index,
            summands,
            elements,
            blocks,
            mult: Vec::new(),
            radical: Subspace::zero(field, dim),
            shape,
            projectives_r: Vec::new(),
            standards: OnceLock::new(),
        };
        ctx.mult = ctx.structure_constants()?;
        let structural = Subspace::from_vectors(field, dim, (count..dim).map(|e| unit_vec(field, dim, e)).collect());
        let traced = ctx.trace_form_radical();
        ensure!(traced == structural, "trace-form radical differs from the block radical");
        ctx.radical = structural;
        ctx.projectives_r = (0..count).map(|s| ctx.build_projective(s)).collect::<Result<_>>()?;
        ctx.check_invariants()?;
        Ok(Arc::new(ctx))
    }

    /// Coordinates in the element basis of a map `G_s → G_t`.
    pub fn element_coordinates(&self, s: usize, t: usize, f: &Matrix) -> Result<Vec<(usize, Scalar)>> {
        let b = &self.blocks[s][t];
        let (gs, gt) = (self.summands[s].graded(), self.summands[t].graded());
        let y = b
            .hom
            .coordinates(gs, gt, f)
            .ok_or_else(|| Error::Invariant("map is not a module homomorphism".into()))?;
        let mut out = Vec::new();
        for (c, &e) in b.elements.iter().enumerate() {
            let mut acc = self.field().zero();
            for (k, yk) in y.iter().enumerate() {
                if !yk.is_zero() {
                    acc = &acc + &(yk * b.canonical_to_elements.get(k, c));
                }
            }
            if !acc.is_zero() {
                out.push((e, acc));
            }
        }
        Ok(out)
    }

    fn structure_constants(&self) -> Result<Vec<Vec<Vec<(usize, Scalar)>>>> {
        let dim = self.elements.len();
        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for a in 0..dim {
            let ea = &self.elements[a];
            for b in 0..dim {
                let eb = &self.elements[b];
                if ea.target != eb.source {
                    continue;
                }
                // a ·_R b = b ∘ a : G_{ea.source} → G_{eb.target}
                let comp = eb.map.mul(&ea.map);
                mult[a][b] = self.element_coordinates(ea.source, eb.target, &comp)?;
            }
        }
        Ok(mult)
    }

    fn trace_form_radical(&self) -> Subspace {
        let field = self.field();
        let dim = self.dim();
        // trace of left multiplication by each basis element
        let tau: Vec<Scalar> = (0..dim)
            .map(|c| {
                let mut acc = field.zero();
                for d in 0..dim {
                    for (e, v) in &self.mult[c][d] {
                        if *e == d {
                            acc = &acc + v;
                        }
                    }
                }
                acc
            })
            .collect();
        let mut t = Matrix::zeros(field, dim, dim);
        for a in 0..dim {
            for b in 0..dim {
                let mut acc = field.zero();
                for (c, v) in &self.mult[a][b] {
                    if !tau[*c].is_zero() {
                        acc = &acc + &(v * &tau[*c]);
                    }
                }
                t.set(a, b, acc);
            }
        }
        nullspace(&t)
    }

    fn check_invariants(&self) -> Result<()> {
        let count = self.label_count();
        let dim = self.dim();
        for s in 0..count {
            for t in 0..count {
                let want: Vec<(usize, Scalar)> = if s == t { vec![(s, self.field().one())] } else { Vec::new() };
                ensure!(self.mult[s][t] == want, "idempotents e_{s}, e_{t} are not orthogonal idempotents");
            }
        }
        // the radical is a two-sided ideal: no product with a radical factor has
        // an idempotent component
        for a in 0..dim {
            for b in 0..dim {
                if a >= count || b >= count {
                    ensure!(
                        self.mult[a][b].iter().all(|(c, _)| *c >= count),
                        "radical is not an ideal"
                    );
                }
            }
        }
        // nilpotency: rad^k R = ⊕ rad^k P_s
        let nil = self.projectives_r.iter().map(Graded::loewy_length).max().unwrap_or(0);
        ensure!(nil <= dim, "radical is not nilpotent within dim R steps");
        // splitness: every simple has a one-dimensional endomorphism ring
        for s in 0..count {
            let l = self.simple_index(s);
            let e = graded::hom_space(&l.module, &l.module)?;
            ensure!(e.dim() == 1, "End(L_{}) is not the ground field", self.labels[s]);
        }
        Ok(())
    }

    /// `P_s = Hom_A(G, G_s)` built from the stored block bases.
    fn build_projective(&self, s: usize) -> Result<Graded> {
        let field = self.field();
        let count = self.label_count();
        let dims: Vec<usize> = (0..count).map(|t| self.blocks[t][s].hom.dim()).collect();
        let mut gens = Vec::with_capacity(self.shape.len());
        for e in &self.elements[count..] {
            // r: G_a → G_b acts Hom(G_b, G_s) → Hom(G_a, G_s) by φ ↦ φ ∘ r
            let (a, b) = (e.source, e.target);
            let src = &self.blocks[b][s];
            let tgt = &self.blocks[a][s];
            let mut m = Matrix::zeros(field, dims[a], dims[b]);
            for (c, phi) in src.hom.basis.iter().enumerate() {
                let comp = phi.mul(&e.map);
                let coords = tgt
                    .hom
                    .coordinates(self.summands[a].graded(), self.summands[s].graded(), &comp)
                    .ok_or_else(|| Error::Invariant("composite is not a homomorphism".into()))?;
                for (r, v) in coords.into_iter().enumerate() {
                    m.set(r, c, v);
                }
            }
            gens.push(Gen {
                source: b,
                target: a,
                matrix: m,
            });
        }
        Graded::new(field, dims, gens)
    }

    pub fn algebra(&self) -> &Arc<BoundAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    /// `dim R`.
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn label_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, s: usize) -> Label {
        self.labels[s]
    }

    pub fn index_of(&self, l: Label) -> Result<usize> {
        self.label_index
            .get(&l)
            .copied()
            .ok_or_else(|| Error::Input(format!("label {l} is not in the label set")))
    }

    /// `l_i = LL(P_i)` for a 1-based vertex.
    pub fn loewy_of_vertex(&self, i: usize) -> usize {
        self.loewy[i - 1]
    }

    pub fn loewy_lengths(&self) -> &[usize] {
        &self.loewy
    }

    /// True when `j = l_i` for the label at position `s`.
    pub fn is_maximal(&self, s: usize) -> bool {
        let Label(i, j) = self.labels[s];
        j == self.loewy[i - 1]
    }

    /// `P_i` over `A`, 1-based.
    pub fn projective_a(&self, i: usize) -> &Rep {
        &self.projectives[i - 1]
    }

    /// `G_s`.
    pub fn summand(&self, s: usize) -> &Rep {
        &self.summands[s]
    }

    pub fn elements(&self) -> &[RElement] {
        &self.elements
    }

    /// `a ·_R b` in the element basis.
    pub fn mult(&self, a: usize, b: usize) -> &[(usize, Scalar)] {
        &self.mult[a][b]
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let field = self.field();
        let mut out = vec![field.zero(); self.dim()];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() || self.mult[a][b].is_empty() {
                    continue;
                }
                let xy = xa * yb;
                for (c, v) in &self.mult[a][b] {
                    out[*c] = &out[*c] + &(&xy * v);
                }
            }
        }
        out
    }

    /// `1_R = Σ_s e_s`.
    pub fn unit(&self) -> Vec<Scalar> {
        let field = self.field();
        (0..self.dim())
            .map(|e| if e < self.label_count() { field.one() } else { field.zero() })
            .collect()
    }

    /// The radical of `R` inside its underlying space.
    pub fn radical(&self) -> &Subspace {
        &self.radical
    }

    /// Generator shape shared by every `R`-module of this context.
    pub fn shape(&self) -> &[(usize, usize)] {
        &self.shape
    }

    /// Exact associativity check on every composable basis triple.
    pub fn check_associativity(&self) -> bool {
        let dim = self.dim();
        for a in 0..dim {
            for b in 0..dim {
                if self.mult[a][b].is_empty() {
                    continue;
                }
                let ab = sparse_to_dense(self.field(), dim, &self.mult[a][b]);
                for c in 0..dim {
                    if self.elements[b].target != self.elements[c].source {
                        continue;
                    }
                    let left = self.product(&ab, &unit_vec(self.field(), dim, c));
                    let bc = sparse_to_dense(self.field(), dim, &self.mult[b][c]);
                    let right = self.product(&unit_vec(self.field(), dim, a), &bc);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub(crate) fn wrap(self: &Arc<Self>, module: Graded) -> SCModule {
        SCModule {
            ctx: self.clone(),
            module,
        }
    }

    /// The projective `P_s = Hom_A(G, G_s)`.
    pub fn projective(self: &Arc<Self>, s: usize) -> SCModule {
        self.wrap(self.projectives_r[s].clone())
    }

    pub fn projective_label(self: &Arc<Self>, l: Label) -> Result<SCModule> {
        Ok(self.projective(self.index_of(l)?))
    }

    fn simple_index(self: &AdrContext, s: usize) -> SCModule0 {
        let field = self.field();
        let mut dims = vec![0; self.label_count()];
        dims[s] = 1;
        let gens = self
            .shape
            .iter()
            .map(|&(a, b)| Gen {
                source: a,
                target: b,
                matrix: Matrix::zeros(field, dims[b], dims[a]),
            })
            .collect();
        SCModule0 {
            module: Graded::new(field, dims, gens).expect("well-shaped"),
        }
    }

    /// The simple `L_s`.
    pub fn simple(self: &Arc<Self>, s: usize) -> SCModule {
        self.wrap(self.simple_index(s).module)
    }

    pub fn zero_module(self: &Arc<Self>) -> SCModule {
        self.wrap(Graded::zero(self.field(), self.label_count(), &self.shape))
    }

    /// `Hom_A(G, M)` with the basis of each `Hom_A(G_s, M)` used for it.
    pub fn hom_g_with_bases(self: &Arc<Self>, m: &Rep) -> Result<(SCModule, Vec<HomSpace>)> {
        if m.algebra().presentation() != self.algebra.presentation() {
            return Err(Error::Input("module is not over the context's algebra".into()));
        }
        let field = self.field();
        let count = self.label_count();
        let bases: Vec<HomSpace> = self
            .summands
            .iter()
            .map(|g| amod::hom_space(g, m))
            .collect::<Result<_>>()?;
        let dims: Vec<usize> = bases.iter().map(HomSpace::dim).collect();
        let mut gens = Vec::with_capacity(self.shape.len());
        for e in &self.elements[count..] {
            let (a, b) = (e.source, e.target);
            let mut mat = Matrix::zeros(field, dims[a], dims[b]);
            for (c, phi) in bases[b].basis.iter().enumerate() {
                let comp = phi.mul(&e.map);
                let coords = bases[a]
                    .coordinates(self.summands[a].graded(), m.graded(), &comp)
                    .ok_or_else(|| Error::Invariant("composite is not a homomorphism".into()))?;
                for (r, v) in coords.into_iter().enumerate() {
                    mat.set(r, c, v);
                }
            }
            gens.push(Gen {
                source: b,
                target: a,
                matrix: mat,
            });
        }
        Ok((self.wrap(Graded::new(field, dims, gens)?), bases))
    }

    /// `Hom_A(G, M)`.
    pub fn hom_g(self: &Arc<Self>, m: &Rep) -> Result<SCModule> {
        Ok(self.hom_g_with_bases(m)?.0)
    }

    /// `Hom_A(G, f)` for `f: M → N`.
    pub fn hom_g_map(self: &Arc<Self>, m: &Rep, n: &Rep, f: &Matrix) -> Result<Matrix> {
        if !m.is_hom_to(n, f) {
            return Err(Error::Input("not a module homomorphism".into()));
        }
        let (hm, bm) = self.hom_g_with_bases(m)?;
        let (hn, bn) = self.hom_g_with_bases(n)?;
        let mut out = Matrix::zeros(self.field(), hn.dim(), hm.dim());
        for s in 0..self.label_count() {
            let (om, on) = (hm.module.offset(s), hn.module.offset(s));
            for (c, phi) in bm[s].basis.iter().enumerate() {
                let comp = f.mul(phi);
                let coords = bn[s]
                    .coordinates(self.summands[s].graded(), n.graded(), &comp)
                    .ok_or_else(|| Error::Invariant("composite is not a homomorphism".into()))?;
                for (r, v) in coords.into_iter().enumerate() {
                    out.set(on + r, om + c, v);
                }
            }
        }
        Ok(out)
    }

    /// The `A`-map `G_s → M` corresponding to `f: P_s → Hom_A(G, M)`:
    /// the value of `f` on the identity of `G_s`.
    pub fn yoneda_transport(self: &Arc<Self>, s: usize, f: &Matrix, m: &Rep) -> Result<Matrix> {
        let p = &self.projectives_r[s];
        let (hm, bases) = self.hom_g_with_bases(m)?;
        if f.cols() != p.dim() || f.rows() != hm.dim() {
            return Err(Error::DimensionMismatch {
                expected: p.dim(),
                found: f.cols(),
            });
        }
        let id = self.identity_in_projective(s);
        let v = f.apply(&id);
        let off = hm.module.offset(s);
        let g = &self.summands[s];
        let mut out = Matrix::zeros(self.field(), m.dim(), g.dim());
        for (k, phi) in bases[s].basis.iter().enumerate() {
            let c = &v[off + k];
            if !c.is_zero() {
                out = out.add(&phi.scale(c));
            }
        }
        Ok(out)
    }

    /// Coordinates of `id_{G_s}` in `P_s`.
    pub fn identity_in_projective(&self, s: usize) -> Vec<Scalar> {
        let p = &self.projectives_r[s];
        let g = self.summands[s].graded();
        let id = Matrix::identity(self.field(), g.dim());
        let coords = self.blocks[s][s].hom.coordinates(g, g, &id).expect("identity is a homomorphism");
        let mut v = crate::exact::zero_vec(self.field(), p.dim());
        let off = p.offset(s);
        for (k, c) in coords.into_iter().enumerate() {
            v[off + k] = c;
        }
        v
    }

    /// Composition multiplicities by label position.
    pub fn comp_multiplicities(&self, m: &SCModule) -> Vec<(Label, usize)> {
        self.labels.iter().copied().zip(m.dims().iter().copied()).collect()
    }
}

fn sparse_to_dense(field: Field, dim: usize, v: &[(usize, Scalar)]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); dim];
    for (k, c) in v {
        out[*k] = c.clone();
    }
    out
}

struct SCModule0 {
    module: Graded,
}

/// Builds the context for an algebra.
pub fn build_context(a: &Arc<BoundAlgebra>) -> Result<Arc<AdrContext>> {
    AdrContext::build(a.clone())
}

/// A left `R`-module: one block per label, one generator per radical basis
/// element of `R`.
#[derive(Clone, Debug)]
pub struct SCModule {
    ctx: Arc<AdrContext>,
    module: Graded,
}

impl PartialEq for SCModule {
    fn eq(&self, other: &SCModule) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) && self.module == other.module
    }
}

impl SCModule {
    pub fn context(&self) -> &Arc<AdrContext> {
        &self.ctx
    }

    pub fn graded(&self) -> &Graded {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// `dim e_s M` for every label; with one-dimensional simples these are
    /// the composition multiplicities.
    pub fn dims(&self) -> &[usize] {
        self.module.dims()
    }

    pub fn is_zero(&self) -> bool {
        self.module.is_zero()
    }

    /// Action of the basis element `e` of `R` as an endomorphism.
    pub fn action(&self, e: usize) -> Matrix {
        let count = self.ctx.label_count();
        if e < count {
            let field = self.ctx.field();
            let mut m = Matrix::zeros(field, self.dim(), self.dim());
            let off = self.module.offset(e);
            for k in 0..self.dims()[e] {
                m.set(off + k, off + k, field.one());
            }
            m
        } else {
            self.module.gen_total(e - count)
        }
    }

    /// Action of an arbitrary element of `R` given in the element basis.
    pub fn act(&self, r: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        let field = self.ctx.field();
        let mut out = crate::exact::zero_vec(field, self.dim());
        let count = self.ctx.label_count();
        for (e, c) in r.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let y = if e < count {
                self.module.project(e, x)
            } else {
                self.module.apply_gen(e - count, x)
            };
            for (o, yi) in out.iter_mut().zip(&y) {
                if !yi.is_zero() {
                    *o = &*o + &(c * yi);
                }
            }
        }
        out
    }

    /// Checks `(ab)·x = a·(b·x)` on basis elements and `1_R · x = x`.
    pub fn check_module_axioms(&self) -> bool {
        let ctx = &self.ctx;
        let dim = ctx.dim();
        let field = ctx.field();
        let basis: Vec<Vec<Scalar>> = (0..self.dim()).map(|k| unit_vec(field, self.dim(), k)).collect();
        let unit = ctx.unit();
        if basis.iter().any(|x| self.act(&unit, x) != *x) {
            return false;
        }
        for a in 0..dim {
            for b in 0..dim {
                let ab = sparse_to_dense(field, dim, ctx.mult(a, b));
                let ea = unit_vec(field, dim, a);
                let eb = unit_vec(field, dim, b);
                for x in &basis {
                    if self.act(&ab, x) != self.act(&ea, &self.act(&eb, x)) {
                        return false;
                    }
                }
            }
        }
        true
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

    /// Multiplicities of the simples in the top.
    pub fn top(&self) -> Vec<usize> {
        self.module.top_dims()
    }

    /// Labels of a per-label count vector, with multiplicities, skipping zeros.
    pub fn label_counts(&self, counts: &[usize]) -> Vec<(Label, usize)> {
        counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(s, &c)| (self.ctx.label(s), c))
            .collect()
    }

    pub fn label_dims(&self, u: &Subspace) -> Vec<usize> {
        self.module.label_dims(u)
    }

    pub fn is_submodule(&self, u: &Subspace) -> bool {
        self.module.is_submodule(u)
    }

    pub fn closure(&self, seeds: Vec<Vec<Scalar>>) -> Subspace {
        self.module.closure(seeds)
    }

    pub fn submodule(&self, u: &Subspace) -> Result<(SCModule, Matrix)> {
        let (g, inc) = self.module.submodule(u)?;
        Ok((self.ctx.wrap(g), inc))
    }

    pub fn quotient(&self, u: &Subspace) -> Result<(SCModule, Matrix)> {
        let (g, p) = self.module.quotient(u)?;
        Ok((self.ctx.wrap(g), p))
    }

    pub fn is_hom_to(&self, other: &SCModule, f: &Matrix) -> bool {
        self.module.is_hom_to(&other.module, f)
    }
}

fn same_context(m: &SCModule, n: &SCModule) -> Result<()> {
    if Arc::ptr_eq(&m.ctx, &n.ctx) {
        Ok(())
    } else {
        Err(Error::Input("modules over different ADR contexts".into()))
    }
}

/// `Hom_R(M, N)`.
pub fn sc_hom(m: &SCModule, n: &SCModule) -> Result<HomSpace> {
    same_context(m, n)?;
    graded::hom_space(&m.module, &n.module)
}

pub fn sc_find_iso(m: &SCModule, n: &SCModule) -> Result<Option<Matrix>> {
    same_context(m, n)?;
    graded::find_iso(&m.module, &n.module)
}

pub fn sc_find_injective(m: &SCModule, n: &SCModule) -> Result<Option<Matrix>> {
    same_context(m, n)?;
    graded::find_injective(&m.module, &n.module)
}

pub fn sc_direct_sum(ctx: &Arc<AdrContext>, parts: &[&SCModule]) -> Result<(SCModule, Vec<Matrix>, Vec<Matrix>)> {
    for p in parts {
        if !Arc::ptr_eq(&p.ctx, ctx) {
            return Err(Error::Input("modules over different ADR contexts".into()));
        }
    }
    let graded: Vec<&Graded> = parts.iter().map(|p| &p.module).collect();
    let (g, i, p) = graded::direct_sum(ctx.field(), ctx.label_count(), &ctx.shape, &graded)?;
    Ok((ctx.wrap(g), i, p))
}

/// A projective cover `⊕ P_s → M`.
#[derive(Clone, Debug)]
pub struct SCCover {
    /// Label position of each summand, in order.
    pub summands: Vec<usize>,
    pub source: SCModule,
    pub epi: Matrix,
    /// Inclusion of each summand into the source.
    pub inclusions: Vec<Matrix>,
}

impl SCCover {
    /// Summand multiset as `(label, multiplicity)` pairs in label order.
    pub fn multiset(&self) -> Vec<(Label, usize)> {
        let ctx = &self.source.ctx;
        let mut counts = vec![0; ctx.label_count()];
        for &s in &self.summands {
            counts[s] += 1;
        }
        self.source.label_counts(&counts)
    }
}

/// The map `P_s → M` sending `id_{G_s}` to `x ∈ e_s M`.
pub fn map_from_projective(m: &SCModule, s: usize, x: &[Scalar]) -> Result<Matrix> {
    let ctx = &m.ctx;
    let p = &ctx.projectives_r[s];
    let field = ctx.field();
    let mut f = Matrix::zeros(field, m.dim(), p.dim());
    for t in 0..ctx.label_count() {
        let block = &ctx.blocks[t][s];
        for k in 0..block.hom.dim() {
            // canonical basis map h_k: G_t → G_s as an element of R
            let mut r = vec![field.zero(); ctx.dim()];
            for (c, &e) in block.elements.iter().enumerate() {
                r[e] = block.canonical_to_elements.get(k, c).clone();
            }
            let img = m.act(&r, x);
            let col = p.offset(t) + k;
            for (row, v) in img.into_iter().enumerate() {
                f.set(row, col, v);
            }
        }
    }
    let pm = ctx.wrap(p.clone());
    ensure!(pm.is_hom_to(m, &f), "map from a projective is not R-linear");
    Ok(f)
}

pub fn sc_projective_cover(m: &SCModule) -> Result<SCCover> {
    let ctx = m.ctx.clone();
    let mut summands = Vec::new();
    let mut maps = Vec::new();
    for (s, x) in m.module.top_lifts() {
        maps.push(map_from_projective(m, s, &x)?);
        summands.push(s);
    }
    let parts: Vec<SCModule> = summands.iter().map(|&s| ctx.projective(s)).collect();
    let refs: Vec<&SCModule> = parts.iter().collect();
    let (source, inclusions, projs) = sc_direct_sum(&ctx, &refs)?;
    let mut epi = Matrix::zeros(ctx.field(), m.dim(), source.dim());
    for (f, p) in maps.iter().zip(&projs) {
        epi = epi.add(&f.mul(p));
    }
    ensure!(epi.rank() == m.dim(), "projective cover is not surjective");
    ensure!(
        source.radical().contains_subspace(&graded::kernel(&epi)),
        "projective cover kernel is not superfluous"
    );
    Ok(SCCover {
        summands,
        source,
        epi,
        inclusions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    fn ctx(name: &str, n: Option<i64>) -> Arc<AdrContext> {
        build_context(&Arc::new(builtins::algebra(name, n).unwrap())).unwrap()
    }

    #[test]
    fn dual_numbers_context() {
        let c = ctx("kx2", None);
        assert_eq!(c.label_count(), 2);
        assert_eq!(c.dim(), 5);
        assert_eq!(c.radical().dim(), 3);
        assert_eq!(c.projective(0).dim(), 2);
        assert_eq!(c.projective(1).dim(), 3);
        assert!(c.check_associativity());
        for s in 0..2 {
            assert!(c.projective(s).check_module_axioms());
        }
    }

    #[test]
    fn counterexample_labels() {
        for n in [3, 5] {
            let c = ctx("an", Some(n));
            let mut want: Vec<Label> = (1..=n as usize).map(|j| Label(1, j)).collect();
            want.extend([Label(2, 1), Label(2, 2), Label(2, 3), Label(3, 1), Label(3, 2), Label(3, 3)]);
            assert_eq!(c.labels(), &want[..]);
        }
    }

    #[test]
    fn simple_hom_g_is_uniserial_of_length_l() {
        let c = ctx("an", Some(4));
        let a = c.algebra().clone();
        for i in 1..=3 {
            let l = Rep::simple(a.clone(), i).unwrap();
            let h = c.hom_g(&l).unwrap();
            assert_eq!(h.dim(), c.loewy_of_vertex(i));
            assert!(h.check_module_axioms());
        }
        let p3 = Rep::projective(a, 3).unwrap();
        assert_eq!(c.hom_g(&p3).unwrap().dim(), 6);
    }

    #[test]
    fn yoneda_round_trip() {
        let c = ctx("kx2", None);
        let a = c.algebra().clone();
        let p = Rep::projective(a, 1).unwrap();
        let hp = c.hom_g(&p).unwrap();
        for s in 0..c.label_count() {
            let ps = c.projective(s);
            for f in sc_hom(&ps, &hp).unwrap().basis {
                let g = c.yoneda_transport(s, &f, &p).unwrap();
                assert!(c.summand(s).is_hom_to(&p, &g));
                assert_eq!(c.hom_g_map(c.summand(s), &p, &g).unwrap(), f);
            }
        }
    }

    #[test]
    fn covers_of_projectives_are_identities() {
        let c = ctx("an", Some(3));
        for s in 0..c.label_count() {
            let p = c.projective(s);
            let cover = sc_projective_cover(&p).unwrap();
            assert_eq!(cover.summands, vec![s]);
            assert!(cover.epi.is_invertible());
        }
    }

    #[test]
    fn prime_field_validity() {
        let text = builtins::KX2.replace("field Q", "field Fp:3");
        let p = crate::quiver::parse_algebra(&text).unwrap();
        let a = Arc::new(crate::quiver::build_bound_algebra(&p).unwrap());
        assert!(matches!(build_context(&a), Err(Error::Input(_))));
        let text = builtins::KX2.replace("field Q", "field Fp:7");
        let p = crate::quiver::parse_algebra(&text).unwrap();
        let a = Arc::new(crate::quiver::build_bound_algebra(&p).unwrap());
        assert_eq!(build_context(&a).unwrap().dim(), 5);
    }
}

