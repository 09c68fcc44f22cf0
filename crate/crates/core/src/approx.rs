//! `Add(G)`-approximations, minimal projective resolutions over `R`, the
//! descending Loewy length audit, `Ext^1` supports between simples, and the
//! driver for the `A(n)` family.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::adr::{build_context, sc_projective_cover, AdrContext, Label, SCModule};
use crate::amod::{self, Rep};
use crate::builtins;
use crate::error::{ensure, Error, Result};
use crate::exact::{Matrix, Subspace};
use crate::graded;
use crate::strat;

/// A map `X → M` with `X` a sum of summands of `G`.
#[derive(Clone, Debug)]
pub struct ApproxResult {
    /// Summand labels in order, with repetitions.
    pub labels: Vec<Label>,
    pub source: Rep,
    pub epi: Matrix,
    pub is_approximation: bool,
    pub is_right_minimal: bool,
}

impl ApproxResult {
    /// Summand multiset in label order.
    pub fn multiset(&self) -> Vec<(Label, usize)> {
        multiset(&self.labels)
    }
}

fn multiset(labels: &[Label]) -> Vec<(Label, usize)> {
    let mut sorted = labels.to_vec();
    sorted.sort();
    let mut out: Vec<(Label, usize)> = Vec::new();
    for l in sorted {
        match out.last_mut() {
            Some((last, c)) if *last == l => *c += 1,
            _ => out.push((l, 1)),
        }
    }
    out
}

/// Checks surjectivity, the factorization property (by rank of
/// `Hom(G, X) → Hom(G, M)`) and right minimality (on the `R` side).
fn verify(ctx: &Arc<AdrContext>, labels: Vec<Label>, source: Rep, epi: Matrix, m: &Rep) -> Result<ApproxResult> {
    ensure!(source.is_hom_to(m, &epi), "approximation is not a module map");
    ensure!(epi.rank() == m.dim(), "approximation is not surjective");
    let h = ctx.hom_g_map(&source, m, &epi)?;
    let is_approximation = h.rank() == ctx.hom_g(m)?.dim();
    let (k, inc) = source.submodule(&graded::kernel(&epi))?;
    let hk = graded::image(&ctx.hom_g_map(&k, &source, &inc)?);
    let is_right_minimal = ctx.hom_g(&source)?.radical().contains_subspace(&hk);
    Ok(ApproxResult {
        labels,
        source,
        epi,
        is_approximation,
        is_right_minimal,
    })
}

/// The minimal approximation of a rigid module: its projective cover
/// modulo `rad^{LL(M)}`.
pub fn approx_rigid(ctx: &Arc<AdrContext>, m: &Rep) -> Result<ApproxResult> {
    if m.is_zero() {
        return Err(Error::Input("approximation of the zero module".into()));
    }
    if !m.is_rigid() {
        return Err(Error::Input("module is not rigid; use the general approximation".into()));
    }
    let ll = m.loewy_length();
    let cover = amod::projective_cover_mod_radpower(m, ll)?;
    let labels = cover
        .summands
        .iter()
        .map(|&v| Label(v + 1, ll.min(ctx.loewy_of_vertex(v + 1))))
        .collect();
    verify(ctx, labels, cover.source, cover.epi, m)
}

/// The minimal approximation obtained from the projective cover of
/// `Hom_A(G, M)`.
pub fn approx_general(ctx: &Arc<AdrContext>, m: &Rep) -> Result<ApproxResult> {
    if m.is_zero() {
        return Err(Error::Input("approximation of the zero module".into()));
    }
    let h = ctx.hom_g(m)?;
    let cover = sc_projective_cover(&h)?;
    let mut maps = Vec::with_capacity(cover.summands.len());
    for (&s, inc) in cover.summands.iter().zip(&cover.inclusions) {
        let f = cover.epi.mul(inc);
        maps.push(ctx.yoneda_transport(s, &f, m)?);
    }
    let parts: Vec<&Rep> = cover.summands.iter().map(|&s| ctx.summand(s)).collect();
    let (source, _, projs) = amod::direct_sum(ctx.algebra(), &parts)?;
    let mut epi = Matrix::zeros(ctx.field(), m.dim(), source.dim());
    for (g, p) in maps.iter().zip(&projs) {
        epi = epi.add(&g.mul(p));
    }
    let labels = cover.summands.iter().map(|&s| ctx.label(s)).collect();
    verify(ctx, labels, source, epi, m)
}

/// One term `P_k` of a minimal projective resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolutionStep {
    pub summands: Vec<(Label, usize)>,
    /// `LL_R(P_k)`.
    pub loewy_length: usize,
    /// Loewy length of the corresponding `Add(G)` object, the largest `j`.
    pub addg_loewy_length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolutionReport {
    pub steps: Vec<ResolutionStep>,
    /// `LL(P_{k+1}) < LL(P_k)` for all `k >= 1` with `P_{k+1} != 0`.
    pub dll_ok: bool,
    /// First `k >= 1` with `LL(P_{k+1}) >= LL(P_k)`.
    pub first_violation: Option<usize>,
    /// Same condition for the `Add(G)` Loewy lengths.
    pub addg_ok: bool,
    pub addg_first_violation: Option<usize>,
    /// The step limit was reached before the resolution ended.
    pub truncated: bool,
    /// Consecutive differentials compose to zero and the complex is exact.
    pub exact: bool,
}

pub const DEFAULT_MAX_STEPS: usize = 32;

fn first_non_decrease(values: &[usize]) -> Option<usize> {
    (1..values.len().saturating_sub(1)).find(|&k| values[k + 1] >= values[k])
}

pub fn minimal_resolution_r(m: &SCModule, max_steps: usize) -> Result<ResolutionReport> {
    if max_steps == 0 {
        return Err(Error::Input("max-steps must be at least 1".into()));
    }
    let ctx = m.context().clone();
    let mut steps = Vec::new();
    let mut current = m.clone();
    // previous differential d_{k-1}: P_{k-1} → P_{k-2} (or → M) and the
    // inclusion of the current kernel into P_{k-1}
    let mut prev: Option<(Matrix, Matrix)> = None;
    let mut exact = true;
    let mut truncated = false;
    while !current.is_zero() {
        if steps.len() == max_steps {
            truncated = true;
            break;
        }
        let cover = sc_projective_cover(&current)?;
        let top = cover.source.label_counts(&{
            let mut c = vec![0; ctx.label_count()];
            for &s in &cover.summands {
                c[s] += 1;
            }
            c
        });
        steps.push(ResolutionStep {
            loewy_length: cover.source.loewy_length(),
            addg_loewy_length: top.iter().map(|(l, _)| l.1).max().unwrap_or(0),
            summands: top,
        });
        let kernel = graded::kernel(&cover.epi);
        let d = match &prev {
            Some((_, inc)) => inc.mul(&cover.epi),
            None => cover.epi.clone(),
        };
        if let Some((dprev, _)) = &prev {
            exact &= dprev.mul(&d).is_zero() && graded::image(&d) == graded::kernel(dprev);
        }
        let (k, inc) = cover.source.submodule(&kernel)?;
        prev = Some((d, inc));
        current = k;
    }
    let ll: Vec<usize> = steps.iter().map(|s| s.loewy_length).collect();
    let addg: Vec<usize> = steps.iter().map(|s| s.addg_loewy_length).collect();
    let first_violation = first_non_decrease(&ll);
    let addg_first_violation = first_non_decrease(&addg);
    Ok(ResolutionReport {
        steps,
        dll_ok: first_violation.is_none(),
        first_violation,
        addg_ok: addg_first_violation.is_none(),
        addg_first_violation,
        truncated,
        exact,
    })
}

/// The `Add(G)` Loewy lengths along a minimal resolution and whether they
/// strictly decrease from step 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AddGAudit {
    pub loewy_lengths: Vec<usize>,
    pub strictly_decreasing: bool,
    pub first_violation: Option<usize>,
    pub truncated: bool,
}

pub fn addg_loewy_audit(m: &SCModule, max_steps: usize) -> Result<AddGAudit> {
    let r = minimal_resolution_r(m, max_steps)?;
    Ok(AddGAudit {
        loewy_lengths: r.steps.iter().map(|s| s.addg_loewy_length).collect(),
        strictly_decreasing: r.addg_ok,
        first_violation: r.addg_first_violation,
        truncated: r.truncated,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtRow {
    pub label: Label,
    pub rigid: bool,
    /// Simples `L_t` with `Ext^1(L_s, L_t) != 0`, with the dimension.
    pub targets: Vec<(Label, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtTable {
    pub rows: Vec<ExtRow>,
    pub violations: Vec<String>,
}

/// Reads `Ext^1(L_s, -)` off `rad P_s / rad^2 P_s` and checks the
/// admissible targets.
pub fn ext1_support(ctx: &Arc<AdrContext>) -> Result<ExtTable> {
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    for s in 0..ctx.label_count() {
        let label = ctx.label(s);
        let Label(i, j) = label;
        let p = ctx.projective(s);
        let r1 = p.label_dims(&p.graded().rad_power(1));
        let r2 = p.label_dims(&p.graded().rad_power(2));
        let counts: Vec<usize> = r1.iter().zip(&r2).map(|(a, b)| a - b).collect();
        let targets = p.label_counts(&counts);
        let rigid = ctx.summand(s).is_rigid();
        for &(Label(k, l), _) in &targets {
            let next = k == i && l == j + 1;
            let ok = if rigid { next || l + 1 == j } else { next || l < j };
            if !ok {
                violations.push(format!(
                    "Ext^1(L{label}, L({k},{l})) != 0 violates the {} constraint",
                    if rigid { "rigid" } else { "general" }
                ));
            }
        }
        rows.push(ExtRow { label, rigid, targets });
    }
    Ok(ExtTable { rows, violations })
}

/// One asserted quantity of the counterexample driver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub ok: bool,
}

fn check(name: &str, expected: impl std::fmt::Debug, computed: impl std::fmt::Debug) -> Check {
    let (e, c) = (format!("{expected:?}"), format!("{computed:?}"));
    Check {
        name: name.into(),
        ok: e == c,
        expected: e,
        computed: c,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CounterexampleReport {
    pub n: i64,
    pub dim_r: usize,
    pub checks: Vec<Check>,
    pub resolution: ResolutionReport,
    /// `(LL P_1(M), LL P_2(M))`.
    pub ll_pair: (usize, usize),
    pub dll_ok: bool,
}

impl CounterexampleReport {
    pub fn all_checks_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

/// Builds `A(n)` and its ADR algebra, checks the structure around
/// `M = P_{3,3}/soc P_{3,3}` and resolves `M`.
///
/// `l_1 = LL(P_1) = max(n, 3)`, so the lengths that depend on `n` are
/// expected in terms of `l_1`; for `n >= 3` this is `n`.
pub fn counterexample_driver(n: i64, max_steps: usize) -> Result<CounterexampleReport> {
    let a = Arc::new(builtins::a_n(n)?);
    let ctx = build_context(&a)?;
    let l1 = n.max(3) as usize;
    let mut checks = Vec::new();

    let i33 = ctx.index_of(Label(3, 3))?;
    let i22 = ctx.index_of(Label(2, 2))?;
    let p33 = ctx.projective(i33);
    let p22 = ctx.projective(i22);
    checks.push(check("l_1 = LL(P_1)", l1, ctx.loewy_of_vertex(1)));
    checks.push(check("dim P_(3,3)", 6, p33.dim()));
    checks.push(check("LL(P_(3,3))", 5, p33.loewy_length()));
    checks.push(check("LL(P_(2,2))", 1 + l1, p22.loewy_length()));
    let d11 = strat::standard_module(&ctx, ctx.index_of(Label(1, 1))?)?;
    checks.push(check("LL(Δ(1,1))", l1, d11.loewy_length()));

    let p3 = ctx.projective_a(3);
    let (radp3, _) = p3.submodule(&p3.radical())?;
    let n1 = ctx.hom_g(&radp3)?;
    checks.push(check("LL(N_1)", 4, n1.loewy_length()));
    checks.push(check("composition length of N_1", 5, n1.dim()));
    checks.push(check("top(N_1)", vec![(Label(2, 2), 1)], n1.label_counts(&n1.top())));
    let filt = strat::delta_ss_filtration(&n1)?;
    checks.push(check(
        "Δ-filtration layers of N_1",
        vec![vec![(Label(3, 1), 1)], vec![(Label(2, 2), 1)]],
        filt.layers.clone(),
    ));
    let s23 = ctx.index_of(Label(2, 3))?;
    let off = n1.graded().offset(s23);
    let seeds = (0..n1.dims()[s23])
        .map(|c| crate::exact::unit_vec(ctx.field(), n1.dim(), off + c))
        .collect();
    let (n2, _) = n1.submodule(&n1.closure(seeds))?;
    let layers: Vec<Vec<(Label, usize)>> = radical_layers(&n2);
    checks.push(check(
        "radical layers of N_2",
        vec![vec![(Label(2, 3), 1)], vec![(Label(3, 2), 1)], vec![(Label(3, 3), 1)]],
        layers,
    ));

    let soc = p33.socle();
    checks.push(check("soc P_(3,3)", vec![(Label(3, 3), 1)], p33.label_counts(&p33.label_dims(&soc))));
    let (m, _) = p33.quotient(&soc)?;
    let resolution = minimal_resolution_r(&m, max_steps)?;
    checks.push(check("resolution is exact", true, resolution.exact));
    let ll = |k: usize| resolution.steps.get(k).map_or(0, |s| s.loewy_length);
    let ll_pair = (ll(1), ll(2));
    if n >= 4 {
        let want = if n == 4 { (5, 5) } else { (5, 1 + l1) };
        checks.push(check("(LL P_1(M), LL P_2(M))", want, ll_pair));
        checks.push(check("dll_ok", false, resolution.dll_ok));
    }
    Ok(CounterexampleReport {
        n,
        dim_r: ctx.dim(),
        checks,
        ll_pair,
        dll_ok: resolution.dll_ok,
        resolution,
    })
}

/// `rad^k M / rad^{k+1} M` as label multisets.
pub fn radical_layers(m: &SCModule) -> Vec<Vec<(Label, usize)>> {
    let series = m.radical_series();
    series
        .windows(2)
        .map(|w| {
            let a = m.label_dims(&w[0]);
            let b = m.label_dims(&w[1]);
            let d: Vec<usize> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
            m.label_counts(&d)
        })
        .collect()
}

/// `soc_k M / soc_{k-1} M` as label multisets, bottom first.
pub fn socle_layers(m: &SCModule) -> Vec<Vec<(Label, usize)>> {
    let series: Vec<Subspace> = m.socle_series();
    series
        .windows(2)
        .map(|w| {
            let a = m.label_dims(&w[1]);
            let b = m.label_dims(&w[0]);
            let d: Vec<usize> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
            m.label_counts(&d)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_and_projective_approximations() {
        let a = Arc::new(builtins::algebra("ex54", None).unwrap());
        let ctx = build_context(&a).unwrap();
        for i in 1..=a.vertex_count() {
            let l = Rep::simple(a.clone(), i).unwrap();
            let r = approx_rigid(&ctx, &l).unwrap();
            assert_eq!(r.labels, vec![Label(i, 1)]);
            assert!(r.is_approximation && r.is_right_minimal);
            let g = approx_general(&ctx, &l).unwrap();
            assert_eq!(g.multiset(), r.multiset());
            let p = ctx.projective_a(i);
            let r = approx_general(&ctx, p).unwrap();
            assert_eq!(r.labels, vec![Label(i, ctx.loewy_of_vertex(i))]);
            assert!(r.epi.is_invertible());
        }
    }

    #[test]
    fn resolution_of_projective_is_one_step() {
        let ctx = build_context(&Arc::new(builtins::algebra("kx2", None).unwrap())).unwrap();
        let r = minimal_resolution_r(&ctx.projective(1), 4).unwrap();
        assert_eq!(r.steps.len(), 1);
        assert!(r.dll_ok && r.exact && !r.truncated);
        let r = minimal_resolution_r(&ctx.simple(1), 8).unwrap();
        assert!(r.exact);
    }

    #[test]
    fn dual_numbers_ext_table() {
        let ctx = build_context(&Arc::new(builtins::algebra("kx2", None).unwrap())).unwrap();
        let t = ext1_support(&ctx).unwrap();
        assert!(t.violations.is_empty());
        assert_eq!(t.rows[0].targets, vec![(Label(1, 2), 1)]);
        assert_eq!(t.rows[1].targets, vec![(Label(1, 1), 1)]);
    }

    #[test]
    fn driver_small_n() {
        let r = counterexample_driver(3, DEFAULT_MAX_STEPS).unwrap();
        assert!(r.all_checks_ok(), "{:#?}", r.checks);
    }
}
