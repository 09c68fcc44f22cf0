//! A seeded corpus of algebras and modules, and brute-force oracles that
//! recompute composition factors and Hom dimensions independently of the
//! main code paths.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::amod::Rep;
use crate::builtins;
use crate::error::Result;
use crate::exact::{Matrix, Scalar, Subspace};
use crate::expr::{Evaluator, Expr};
use crate::graded::Graded;
use crate::quiver::BoundAlgebra;

/// The submodule generated by one or two random combinations, with
/// coefficients in `-2..=2`, of a basis of `rad M` (of `M` when the radical
/// is zero). Staying inside the radical keeps both the submodule and the
/// quotient nonzero in most cases. Deterministic in `seed`.
pub fn random_subspace(m: &Graded, seed: u64) -> Subspace {
    if m.dim() == 0 {
        return m.zero_sub();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rad = m.radical();
    let pool = if rad.is_zero() { m.full() } else { rad };
    let basis = pool.vectors();
    let count = rng.gen_range(1..=2);
    let field = m.field();
    let seeds: Vec<Vec<Scalar>> = (0..count)
        .map(|_| {
            let coeffs: Vec<Scalar> = basis.iter().map(|_| field.from_i64(rng.gen_range(-2..=2))).collect();
            pool.combine(&coeffs)
        })
        .collect();
    m.closure(seeds)
}

/// A seeded random submodule with its inclusion.
pub fn random_submodule(m: &Rep, seed: u64) -> Result<(Rep, Matrix)> {
    m.submodule(&random_subspace(m.graded(), seed))
}

/// A seeded random quotient with its projection.
pub fn random_quotient(m: &Rep, seed: u64) -> Result<(Rep, Matrix)> {
    m.quotient(&random_subspace(m.graded(), seed))
}

/// Composition factors by repeatedly removing the socle: the multiplicity
/// of label `v` is the sum over all socle layers.
pub fn oracle_composition_series(m: &Graded) -> Result<Vec<usize>> {
    let mut counts = vec![0; m.labels()];
    let mut current = m.clone();
    while current.dim() > 0 {
        let soc = current.socle();
        for (c, d) in counts.iter_mut().zip(current.label_dims(&soc)) {
            *c += d;
        }
        current = current.quotient(&soc)?.0;
    }
    Ok(counts)
}

/// `dim Hom(M, N)` as the nullity of a single linear system in the entries
/// of the label blocks of `f`, ordered column-major, with one equation per
/// entry of `g_N f - f g_M` for every generator.
pub fn oracle_hom_dim(m: &Graded, n: &Graded) -> usize {
    let labels = m.labels();
    let field = m.field();
    // unknown index of entry (r, c) in block v
    let mut base = vec![0; labels + 1];
    for v in 0..labels {
        base[v + 1] = base[v] + m.dims()[v] * n.dims()[v];
    }
    let unknown = |v: usize, r: usize, c: usize| base[v] + c * n.dims()[v] + r;
    let total = base[labels];
    if total == 0 {
        return 0;
    }
    let mut rows = Vec::new();
    for (gm, gn) in m.gens().iter().zip(n.gens()) {
        let (a, b) = (gm.source, gm.target);
        // (g_N f_a - f_b g_M)[r][c] for r < dim N_b, c < dim M_a
        for r in 0..n.dims()[b] {
            for c in 0..m.dims()[a] {
                let mut row = vec![field.zero(); total];
                for k in 0..n.dims()[a] {
                    let x = gn.matrix.get(r, k);
                    if !x.is_zero() {
                        let u = unknown(a, k, c);
                        row[u] = &row[u] + x;
                    }
                }
                for k in 0..m.dims()[b] {
                    let x = gm.matrix.get(k, c);
                    if !x.is_zero() {
                        let u = unknown(b, r, k);
                        row[u] = &row[u] - x;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return total;
    }
    total - Matrix::from_rows(field, total, rows).rank()
}

/// A corpus item: an algebra name and the expression defining the module.
#[derive(Clone, Debug)]
pub struct Item {
    pub algebra: usize,
    pub expr: Expr,
    pub module: Rep,
}

/// Built-in algebras with seeded random modules over each.
pub struct Corpus {
    pub seed: u64,
    pub algebras: Vec<(String, Arc<BoundAlgebra>)>,
    pub items: Vec<Item>,
}

/// The algebras of the corpus: dual numbers, the two small examples and
/// `A(n)` for `n = 2..5`.
pub fn corpus_algebras() -> Result<Vec<(String, Arc<BoundAlgebra>)>> {
    let mut out = vec![
        ("kx2".to_string(), Arc::new(builtins::algebra("kx2", None)?)),
        ("ex36".to_string(), Arc::new(builtins::algebra("ex36", None)?)),
        ("ex54".to_string(), Arc::new(builtins::algebra("ex54", None)?)),
    ];
    for n in 2..=5 {
        out.push((format!("an n={n}"), Arc::new(builtins::a_n(n)?)));
    }
    Ok(out)
}

/// A random expression: a projective, a simple or a sum of two projectives,
/// optionally passed through a random quotient or submodule.
pub fn random_expr(rng: &mut ChaCha8Rng, vertices: usize) -> Expr {
    let p = |rng: &mut ChaCha8Rng| Expr::Projective(rng.gen_range(1..=vertices));
    let base = match rng.gen_range(0..4) {
        1 => Expr::DSum(vec![p(rng), p(rng)]),
        _ => p(rng),
    };
    let seed = rng.gen_range(0..1_000_000u64);
    match rng.gen_range(0..5) {
        0 | 1 => Expr::RQuot(Box::new(base), seed),
        2 => Expr::Sub(Box::new(base), seed),
        3 => Expr::RQuot(Box::new(Expr::Sub(Box::new(base), seed)), seed + 1),
        _ => Expr::Quot(Box::new(base.clone()), Box::new(Expr::RadPower(rng.gen_range(1..=2), Box::new(base)))),
    }
}

impl Corpus {
    /// Simples and projectives of every algebra, plus `per_algebra` random
    /// modules each. Zero modules are skipped.
    pub fn new(seed: u64, per_algebra: usize) -> Result<Corpus> {
        let algebras = corpus_algebras()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut items = Vec::new();
        for (k, (_, a)) in algebras.iter().enumerate() {
            let mut ev = Evaluator::new(a.clone());
            let n = a.vertex_count();
            let mut exprs: Vec<Expr> = (1..=n).flat_map(|i| [Expr::Simple(i), Expr::Projective(i)]).collect();
            exprs.extend((0..per_algebra).map(|_| random_expr(&mut rng, n)));
            for expr in exprs {
                let module = ev.eval_a(&expr)?;
                if module.dim() > 0 {
                    items.push(Item {
                        algebra: k,
                        expr,
                        module,
                    });
                }
            }
        }
        Ok(Corpus { seed, algebras, items })
    }

    pub fn items_of(&self, algebra: usize) -> impl Iterator<Item = &Item> {
        self.items.iter().filter(move |it| it.algebra == algebra)
    }

    /// Random items only (those that are not a plain simple or projective).
    pub fn random_items(&self) -> impl Iterator<Item = &Item> {
        self.items
            .iter()
            .filter(|it| !matches!(it.expr, Expr::Simple(_) | Expr::Projective(_)))
    }

    /// One line per item: algebra name and expression.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for it in &self.items {
            out.push_str(&format!("{}\t{}\t{}\n", self.algebras[it.algebra].0, it.expr, it.module.dim()));
        }
        out
    }
}
