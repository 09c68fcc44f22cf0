//! Properties of modules over `A` and over the ADR algebra, checked on
//! seeded random modules over the built-in algebras.

use std::sync::{Arc, OnceLock};

use adr_core::adr::{build_context, sc_find_iso, sc_hom, AdrContext};
use adr_core::amod::{self, Rep};
use adr_core::corpus;
use adr_core::exact::{Field, Matrix};
use adr_core::expr::Evaluator;
use adr_core::graded::Gen;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn contexts() -> &'static [Arc<AdrContext>] {
    static CTXS: OnceLock<Vec<Arc<AdrContext>>> = OnceLock::new();
    CTXS.get_or_init(|| {
        corpus::corpus_algebras()
            .unwrap()
            .into_iter()
            .map(|(_, a)| build_context(&a).unwrap())
            .collect()
    })
}

fn random_module(ctx: &Arc<AdrContext>, seed: u64) -> Rep {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let expr = corpus::random_expr(&mut rng, ctx.algebra().vertex_count());
    Evaluator::with_context(ctx.clone()).eval_a(&expr).unwrap()
}

fn combination(field: Field, rows: usize, cols: usize, basis: &[Matrix], seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = Matrix::zeros(field, rows, cols);
    for b in basis {
        f = f.add(&b.scale(&field.from_i64(rng.gen_range(-2..=2))));
    }
    f
}

/// `M` transported along random unitriangular base changes at each vertex.
fn base_change(m: &Rep, seed: u64) -> Rep {
    let field = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let changes: Vec<Matrix> = m
        .dims()
        .iter()
        .map(|&d| {
            let mut p = Matrix::identity(field, d);
            for r in 0..d {
                for c in r + 1..d {
                    p.set(r, c, field.from_i64(rng.gen_range(-2..=2)));
                }
            }
            p
        })
        .collect();
    let maps = m
        .graded()
        .gens()
        .iter()
        .map(|Gen { source, target, matrix }| {
            changes[*target].mul(matrix).mul(&changes[*source].inverse().unwrap())
        })
        .collect();
    Rep::new(m.algebra().clone(), m.dims().to_vec(), maps).unwrap()
}

fn ctx_and_seed() -> impl Strategy<Value = (usize, u64)> {
    (0..contexts().len(), any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn socle_and_radical_are_functorial((k, seed) in ctx_and_seed()) {
        let ctx = &contexts()[k];
        let m = random_module(ctx, seed);
        let n = random_module(ctx, seed ^ 0x5eed);
        let hom = amod::hom_space(&m, &n).unwrap();
        let f = combination(m.field(), n.dim(), m.dim(), &hom.basis, seed);
        prop_assert!(m.is_hom_to(&n, &f));
        prop_assert!(n.socle().contains_subspace(&m.socle().image_under(&f)));
        prop_assert!(n.radical().contains_subspace(&m.radical().image_under(&f)));
    }

    #[test]
    fn socle_is_hereditary_and_radical_cohereditary((k, seed) in ctx_and_seed()) {
        let ctx = &contexts()[k];
        let m = random_module(ctx, seed);
        let (n, inc) = corpus::random_submodule(&m, seed).unwrap();
        prop_assert_eq!(n.socle().image_under(&inc), inc.column_space().intersect(&m.socle()).unwrap());
        let (q, proj) = corpus::random_quotient(&m, seed).unwrap();
        prop_assert_eq!(m.radical().image_under(&proj), q.radical());
    }

    #[test]
    fn hom_dimension_is_invariant_under_base_change((k, seed) in ctx_and_seed()) {
        let ctx = &contexts()[k];
        let m = random_module(ctx, seed);
        let n = random_module(ctx, seed.wrapping_add(1));
        let m2 = base_change(&m, seed);
        let n2 = base_change(&n, seed.wrapping_add(7));
        let d = amod::hom_space(&m, &n).unwrap().dim();
        prop_assert_eq!(d, amod::hom_space(&m2, &n2).unwrap().dim());
        prop_assert_eq!(d, corpus::oracle_hom_dim(m2.graded(), n2.graded()));
        prop_assert!(amod::find_iso(&m, &m2).unwrap().is_some());
    }

    #[test]
    fn covers_modulo_radical_powers_are_minimal((k, seed) in ctx_and_seed()) {
        let ctx = &contexts()[k];
        let m = random_module(ctx, seed);
        prop_assume!(!m.is_zero());
        let ll = m.loewy_length();
        let cover = amod::projective_cover_mod_radpower(&m, ll).unwrap();
        prop_assert_eq!(cover.source.top_dims(), m.top_dims());
        prop_assert!(cover.source.rad_power(ll).is_zero());
    }

    #[test]
    fn unit_acts_as_identity((k, seed) in ctx_and_seed()) {
        let ctx = &contexts()[k];
        let h = ctx.hom_g(&random_module(ctx, seed)).unwrap();
        let unit = ctx.unit();
        prop_assert!(h.check_module_axioms());
        for c in 0..h.dim() {
            let x = adr_core::exact::unit_vec(ctx.field(), h.dim(), c);
            prop_assert_eq!(h.act(&unit, &x), x);
        }
    }

    #[test]
    fn hom_g_is_fully_faithful((k, seed) in ctx_and_seed()) {
        let ctx = &contexts()[k];
        let m = random_module(ctx, seed);
        let n = random_module(ctx, seed ^ 0xfeed);
        let hm = ctx.hom_g(&m).unwrap();
        let hn = ctx.hom_g(&n).unwrap();
        prop_assert_eq!(amod::hom_space(&m, &n).unwrap().dim(), sc_hom(&hm, &hn).unwrap().dim());
    }

    #[test]
    fn hom_g_is_left_exact_with_matching_maximal_layers((k, seed) in ctx_and_seed()) {
        let ctx = &contexts()[k];
        let m = random_module(ctx, seed);
        let (n, inc) = corpus::random_submodule(&m, seed).unwrap();
        let (q, proj) = m.quotient(&inc.column_space()).unwrap();
        let hm = ctx.hom_g(&m).unwrap();
        let hq = ctx.hom_g(&q).unwrap();
        let fi = ctx.hom_g_map(&n, &m, &inc).unwrap();
        let fp = ctx.hom_g_map(&m, &q, &proj).unwrap();
        // Hom(G,M)/Hom(G,N) → Hom(G,M/N) is injective
        prop_assert_eq!(adr_core::graded::kernel(&fp), fi.column_space());
        let (quot, to_quot) = hm.quotient(&fi.column_space()).unwrap();
        // the induced embedding of the quotient
        let section = hm.graded().quotient_section(&fi.column_space());
        let emb = fp.mul(&section);
        prop_assert!(quot.is_hom_to(&hq, &emb));
        prop_assert_eq!(emb.rank(), quot.dim());
        prop_assert_eq!(to_quot.rank(), quot.dim());
        for s in 0..ctx.label_count() {
            if ctx.is_maximal(s) {
                prop_assert_eq!(quot.dims()[s], hq.dims()[s]);
            }
        }
        prop_assert_eq!(quot.socle().image_under(&emb), hq.socle());
    }

    #[test]
    fn hom_g_preserves_socles((k, seed) in ctx_and_seed()) {
        let ctx = &contexts()[k];
        let m = random_module(ctx, seed);
        let (soc, inc) = m.submodule(&m.socle()).unwrap();
        let h = ctx.hom_g(&m).unwrap();
        let hs = ctx.hom_g(&soc).unwrap();
        let f = ctx.hom_g_map(&soc, &m, &inc).unwrap();
        prop_assert_eq!(hs.socle().image_under(&f), h.socle());
    }
}

#[test]
fn adr_algebras_are_associative_with_nilpotent_radical() {
    for ctx in contexts() {
        assert!(ctx.check_associativity(), "{}", ctx.algebra().name());
        assert_eq!(ctx.dim() - ctx.radical().dim(), ctx.label_count());
        let regular: Vec<_> = (0..ctx.label_count()).map(|s| ctx.projective(s)).collect();
        let ll = regular.iter().map(|p| p.loewy_length()).max().unwrap();
        assert!(ll <= ctx.dim());
        let rad_dims: usize = regular.iter().map(|p| p.radical().dim()).sum();
        assert_eq!(rad_dims, ctx.radical().dim());
    }
}

#[test]
fn end_of_g_for_dual_numbers() {
    let ctx = &contexts()[0];
    assert_eq!(ctx.algebra().name(), "kx2");
    assert_eq!(ctx.dim(), 5);
    let g: usize = (0..ctx.label_count())
        .flat_map(|s| (0..ctx.label_count()).map(move |t| (s, t)))
        .map(|(s, t)| corpus::oracle_hom_dim(ctx.summand(s).graded(), ctx.summand(t).graded()))
        .sum();
    assert_eq!(g, 5);
}

#[test]
fn hom_g_of_projective_is_projective() {
    for ctx in contexts() {
        for i in 1..=ctx.algebra().vertex_count() {
            let p = ctx.projective_a(i);
            let h = ctx.hom_g(p).unwrap();
            let s = ctx.index_of(adr_core::adr::Label(i, ctx.loewy_of_vertex(i))).unwrap();
            assert!(sc_find_iso(&h, &ctx.projective(s)).unwrap().is_some());
        }
    }
}
