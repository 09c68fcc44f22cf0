//! Laws of `δ`, its iterates and standard modules, and properties of
//! approximations and resolutions, on seeded random modules.

use std::sync::{Arc, OnceLock};

use adr_core::adr::{build_context, sc_direct_sum, sc_find_iso, sc_hom, AdrContext, SCModule};
use adr_core::approx::{self, DEFAULT_MAX_STEPS};
use adr_core::corpus;
use adr_core::exact::Matrix;
use adr_core::expr::Evaluator;
use adr_core::strat;
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

/// `Hom_A(G, M)` for a random `A`-module `M`: always `Δ`-good.
fn random_good(ctx: &Arc<AdrContext>, seed: u64) -> SCModule {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let expr = corpus::random_expr(&mut rng, ctx.algebra().vertex_count());
    let m = Evaluator::with_context(ctx.clone()).eval_a(&expr).unwrap();
    ctx.hom_g(&m).unwrap()
}

fn ctx_and_seed() -> impl Strategy<Value = (usize, u64)> {
    (0..contexts().len(), any::<u64>())
}

/// The pushout of `0 → K → P_s → Δ_s → 0` along a random `g: K → Δ_t`,
/// an extension `0 → Δ_t → X → Δ_s → 0`, or `None` when `Hom(K, Δ_t) = 0`.
fn random_extension(ctx: &Arc<AdrContext>, s: usize, t: usize, seed: u64) -> Option<SCModule> {
    let st = strat::standard_family(ctx).unwrap();
    let p = ctx.projective(s);
    let (k, inc) = p.submodule(&kernel_of_standard(ctx, s)).unwrap();
    if k.is_zero() {
        return None;
    }
    let hom = sc_hom(&k, &st[t]).unwrap();
    if hom.dim() == 0 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = ctx.field();
    let mut g = Matrix::zeros(field, st[t].dim(), k.dim());
    for b in &hom.basis {
        g = g.add(&b.scale(&field.from_i64(rng.gen_range(-2..=2))));
    }
    let (sum, incs, _) = sc_direct_sum(ctx, &[&p, &st[t]]).unwrap();
    let rel = incs[0].mul(&inc).sub(&incs[1].mul(&g));
    Some(sum.quotient(&rel.column_space()).unwrap().0)
}

/// `Hom_A(G, rad G_s)` inside `P_s`.
fn kernel_of_standard(ctx: &Arc<AdrContext>, s: usize) -> adr_core::exact::Subspace {
    let g = ctx.summand(s);
    let (rg, inc) = g.submodule(&g.radical()).unwrap();
    ctx.hom_g_map(&rg, g, &inc).unwrap().column_space()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn delta_is_a_hereditary_idempotent_preradical((k, seed) in ctx_and_seed()) {
        let ctx = &contexts()[k];
        let m = random_good(ctx, seed);
        prop_assert!(strat::is_delta_good(&m));
        let d = strat::delta_preradical(&m).unwrap();
        let (dm, dinc) = m.submodule(&d).unwrap();
        prop_assert_eq!(strat::delta_preradical(&dm).unwrap().image_under(&dinc), d.clone());
        let u = corpus::random_subspace(m.graded(), seed);
        let (n, inc) = m.submodule(&u).unwrap();
        prop_assert!(strat::is_delta_good(&n));
        prop_assert_eq!(strat::delta_preradical(&n).unwrap().image_under(&inc), u.intersect(&d).unwrap());
    }

    #[test]
    fn delta_tower_laws((k, seed) in ctx_and_seed(), a in 1usize..5, b in 1usize..5) {
        let ctx = &contexts()[k];
        let m = random_good(ctx, seed);
        let db = strat::delta_k(&m, b).unwrap();
        let (sub, inc) = m.submodule(&db).unwrap();
        let composed = strat::delta_k(&sub, a).unwrap().image_under(&inc);
        prop_assert_eq!(composed, strat::delta_k(&m, a.min(b)).unwrap());
        prop_assert!(db.contains_subspace(&strat::delta_k(&m, b - 1).unwrap()));
    }

    #[test]
    fn quotient_by_delta_is_delta_good((k, seed) in ctx_and_seed()) {
        let ctx = &contexts()[k];
        let m = random_good(ctx, seed);
        let (q, _) = m.quotient(&strat::delta_preradical(&m).unwrap()).unwrap();
        prop_assert!(strat::is_delta_good(&q));
        prop_assert_eq!(
            strat::delta_factor_count(&q) + strat::delta_factor_count(&m.submodule(&strat::delta_preradical(&m).unwrap()).unwrap().0),
            strat::delta_factor_count(&m)
        );
    }

    #[test]
    fn extensions_with_larger_socle_split((k, seed) in ctx_and_seed(), s in any::<prop::sample::Index>(), t in any::<prop::sample::Index>()) {
        let ctx = &contexts()[k];
        let s = s.index(ctx.label_count());
        let t = t.index(ctx.label_count());
        let x = random_extension(ctx, s, t, seed);
        prop_assume!(x.is_some());
        let x = x.unwrap();
        let st = strat::standard_family(ctx).unwrap();
        prop_assert_eq!(x.dim(), st[s].dim() + st[t].dim());
        if x.socle().dim() > st[t].socle().dim() {
            let (split, _, _) = sc_direct_sum(ctx, &[&st[t], &st[s]]).unwrap();
            let iso = sc_find_iso(&x, &split).unwrap();
            prop_assert!(iso.is_some());
            prop_assert!(x.is_hom_to(&split, iso.as_ref().unwrap()));
        }
    }

    #[test]
    fn approximations_are_verified((k, seed) in ctx_and_seed()) {
        let ctx = &contexts()[k];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let expr = corpus::random_expr(&mut rng, ctx.algebra().vertex_count());
        let m = Evaluator::with_context(ctx.clone()).eval_a(&expr).unwrap();
        prop_assume!(!m.is_zero());
        let r = approx::approx_general(ctx, &m).unwrap();
        prop_assert!(r.is_approximation && r.is_right_minimal);
        prop_assert_eq!(r.multiset().iter().map(|(_, c)| c).sum::<usize>(), ctx.hom_g(&m).unwrap().top().iter().sum::<usize>());
    }

    #[test]
    fn resolutions_are_exact((k, seed) in ctx_and_seed()) {
        let ctx = &contexts()[k];
        let m = random_good(ctx, seed);
        prop_assume!(!m.is_zero());
        let r = approx::minimal_resolution_r(&m, DEFAULT_MAX_STEPS).unwrap();
        prop_assert!(r.exact && !r.truncated);
        prop_assert_eq!(r.steps[0].summands.clone(), adr_core::adr::sc_projective_cover(&m).unwrap().multiset());
    }
}

#[test]
fn standard_realizations_agree_everywhere() {
    for ctx in contexts() {
        for s in 0..ctx.label_count() {
            let r = strat::standard_realizations(ctx, s).unwrap();
            assert!(r.radical_of_projective.is_hom_to(&r.cokernel, &r.iso));
            assert!(r.iso.is_invertible());
        }
    }
}

#[test]
fn general_standards_of_dual_numbers() {
    let a = Arc::new(adr_core::builtins::algebra("kx2", None).unwrap());
    let st = strat::general_standard_modules(&a, &strat::Poset::total(1)).unwrap();
    assert_eq!(st[0].dim(), 2);
    let p = adr_core::amod::Rep::projective(a, 1).unwrap();
    assert!(strat::general_is_delta_semisimple(&st, &p).unwrap().is_some());
}

#[test]
fn some_pushouts_split_and_some_do_not() {
    let (mut split, mut nonsplit) = (0, 0);
    for ctx in contexts() {
        let st = strat::standard_family(ctx).unwrap();
        for s in 0..ctx.label_count() {
            for t in 0..ctx.label_count() {
                if let Some(x) = random_extension(ctx, s, t, (s * 31 + t) as u64) {
                    if x.socle().dim() > st[t].socle().dim() {
                        split += 1;
                    } else {
                        nonsplit += 1;
                    }
                }
            }
        }
    }
    assert!(split > 0 && nonsplit > 0, "split {split}, nonsplit {nonsplit}");
}
