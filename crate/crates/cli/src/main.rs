use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;
use std::sync::Arc;

use adr_core::adr::{build_context, Label, SCModule};
use adr_core::amod::Rep;
use adr_core::approx::{self, DEFAULT_MAX_STEPS};
use adr_core::builtins;
use adr_core::corpus::Corpus;
use adr_core::expr::{parse_expr, Evaluator, Expr, Value};
use adr_core::quiver::{build_bound_algebra, parse_algebra_with, BoundAlgebra};
use adr_core::report::*;
use adr_core::strat;
use adr_core::{Error, Field, Result};
use clap::{Parser, ValueEnum};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Verb {
    Build,
    Module,
    Adr,
    Standard,
    Filtration,
    Approx,
    Resolve,
    ExtTable,
    DllCheck,
    Counterexample,
    CorpusDump,
}

/// Computations with ADR algebras of bound quiver algebras.
#[derive(Debug, Parser)]
#[command(name = "adr", version)]
struct Cli {
    verb: Verb,

    /// Algebra file, or one of the built-in names kx2, ex54, ex36, an.
    #[arg(long)]
    algebra: Option<String>,

    /// Module expression, e.g. "quot_soc(P(1),6)" or "homG(rad^1(P(3)))".
    #[arg(long)]
    module: Option<String>,

    /// Emit JSON instead of text tables.
    #[arg(long)]
    json: bool,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Value for the parameter `n` of the algebra (and of the counterexample family).
    #[arg(long)]
    n: Option<i64>,

    #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
    max_steps: usize,

    /// Override the ground field: Q or Fp:<prime>.
    #[arg(long)]
    field: Option<String>,
}

/// Random modules per algebra in `corpus-dump`.
const CORPUS_SIZE: usize = 8;

enum Output {
    Json(String),
    Text(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok((out, code)) => {
            match out {
                Output::Json(s) | Output::Text(s) => print!("{s}"),
            }
            ExitCode::from(code)
        }
        Err(e) => {
            let kind = if e.is_input_error() { "input" } else { "invariant" };
            if cli.json {
                let r = ErrorReport {
                    error: e.to_string(),
                    kind: kind.into(),
                };
                println!("{}", serde_json::to_string_pretty(&r).unwrap());
            }
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 1 } else { 2 })
        }
    }
}

fn load_algebra(cli: &Cli) -> Result<Arc<BoundAlgebra>> {
    let spec = cli
        .algebra
        .as_deref()
        .ok_or_else(|| Error::Input("this verb needs --algebra <file or built-in name>".into()))?;
    let text = if Path::new(spec).is_file() {
        std::fs::read_to_string(spec).map_err(|e| Error::Input(format!("cannot read {spec}: {e}")))?
    } else if let Some(t) = builtins::text(spec) {
        t.to_string()
    } else {
        return Err(Error::Input(format!(
            "{spec} is neither a readable file nor a built-in algebra ({})",
            builtins::NAMES.join(", ")
        )));
    };
    let overrides: Vec<(String, i64)> = cli.n.map(|n| vec![("n".to_string(), n)]).unwrap_or_default();
    let field = cli.field.as_deref().map(str::parse::<Field>).transpose()?;
    let p = parse_algebra_with(&text, &overrides, field)?;
    Ok(Arc::new(build_bound_algebra(&p)?))
}

fn module_expr(cli: &Cli) -> Result<(String, Expr)> {
    let text = cli
        .module
        .as_deref()
        .ok_or_else(|| Error::Input("this verb needs --module <expression>".into()))?;
    Ok((text.to_string(), parse_expr(text)?))
}

fn emit<T: serde::Serialize>(cli: &Cli, report: &T, text: impl FnOnce(&T) -> String) -> Output {
    if cli.json {
        Output::Json(serde_json::to_string_pretty(report).unwrap() + "\n")
    } else {
        Output::Text(text(report))
    }
}

fn run(cli: &Cli) -> Result<(Output, u8)> {
    // validate required arguments before any computation
    let needs_algebra = !matches!(cli.verb, Verb::Counterexample | Verb::CorpusDump);
    let needs_module = matches!(
        cli.verb,
        Verb::Module | Verb::Filtration | Verb::Approx | Verb::Resolve | Verb::DllCheck
    );
    if needs_algebra && cli.algebra.is_none() {
        return Err(Error::Input("this verb needs --algebra <file or built-in name>".into()));
    }
    let parsed = if needs_module { Some(module_expr(cli)?) } else { None };
    if cli.max_steps == 0 {
        return Err(Error::Input("--max-steps must be at least 1".into()));
    }

    match cli.verb {
        Verb::Build => {
            let a = load_algebra(cli)?;
            Ok((emit(cli, &build_report(&a)?, text_build), 0))
        }
        Verb::Module => {
            let a = load_algebra(cli)?;
            let (src, e) = parsed.unwrap();
            let mut ev = Evaluator::new(a);
            let r = module_report(&src, ev.eval(&e)?);
            Ok((emit(cli, &r, text_module), 0))
        }
        Verb::Adr => {
            let a = load_algebra(cli)?;
            let ctx = build_context(&a)?;
            let r = AdrReport {
                algebra: a.name().to_string(),
                loewy_lengths: ctx.loewy_lengths().to_vec(),
                labels: ctx.labels().to_vec(),
                dim_r: ctx.dim(),
                dim_radical: ctx.radical().dim(),
                projectives: (0..ctx.label_count())
                    .map(|s| {
                        let p = ctx.projective(s);
                        (ctx.label(s), p.dim(), p.loewy_length())
                    })
                    .collect(),
            };
            Ok((emit(cli, &r, text_adr), 0))
        }
        Verb::Standard => {
            let a = load_algebra(cli)?;
            let ctx = build_context(&a)?;
            let mut standards = Vec::new();
            for s in 0..ctx.label_count() {
                let r = strat::standard_realizations(&ctx, s)?;
                let d = &r.radical_of_projective;
                let factors: Vec<Label> = approx::radical_layers(d)
                    .iter()
                    .flat_map(|layer| layer.iter().map(|(l, _)| *l))
                    .collect();
                let uniserial = approx::radical_layers(d).iter().all(|l| l.len() == 1 && l[0].1 == 1);
                standards.push(StandardEntry {
                    label: r.label,
                    dim: d.dim(),
                    loewy_length: d.loewy_length(),
                    factors,
                    uniserial,
                    realizations_isomorphic: r.iso.is_invertible(),
                    sequence_dims: (r.kernel_dim, r.projective_dim, r.cokernel.dim()),
                });
            }
            let r = StandardReport {
                algebra: a.name().to_string(),
                standards,
            };
            Ok((emit(cli, &r, text_standard), 0))
        }
        Verb::Filtration => {
            let a = load_algebra(cli)?;
            let (src, e) = parsed.unwrap();
            let r = filtration_report(a, &src, &e)?;
            Ok((emit(cli, &r, text_filtration), 0))
        }
        Verb::Approx => {
            let a = load_algebra(cli)?;
            let (src, e) = parsed.unwrap();
            let mut ev = Evaluator::new(a);
            let m = ev.eval_a(&e)?;
            let ctx = ev.context()?;
            let g = approx::approx_general(&ctx, &m)?;
            let rigid = m.is_rigid();
            let agrees = if rigid {
                Some(approx::approx_rigid(&ctx, &m)?.multiset() == g.multiset())
            } else {
                None
            };
            let r = ApproxReport {
                expr: src,
                rigid,
                summands: g.multiset(),
                source_dim: g.source.dim(),
                is_approximation: g.is_approximation,
                is_right_minimal: g.is_right_minimal,
                agrees_with_rigid_cover: agrees,
            };
            Ok((emit(cli, &r, text_approx), 0))
        }
        Verb::Resolve => {
            let a = load_algebra(cli)?;
            let (src, e) = parsed.unwrap();
            let m = r_module(a, &e)?;
            let r = ResolveReport {
                expr: src,
                resolution: approx::minimal_resolution_r(&m, cli.max_steps)?,
            };
            Ok((emit(cli, &r, text_resolve), 0))
        }
        Verb::DllCheck => {
            let a = load_algebra(cli)?;
            let (src, e) = parsed.unwrap();
            let m = r_module(a, &e)?;
            let res = approx::minimal_resolution_r(&m, cli.max_steps)?;
            let r = DllReport {
                expr: src,
                loewy_lengths: res.steps.iter().map(|s| s.loewy_length).collect(),
                dll_ok: res.dll_ok,
                first_violation: res.first_violation,
                addg: approx::AddGAudit {
                    loewy_lengths: res.steps.iter().map(|s| s.addg_loewy_length).collect(),
                    strictly_decreasing: res.addg_ok,
                    first_violation: res.addg_first_violation,
                    truncated: res.truncated,
                },
            };
            Ok((emit(cli, &r, text_dll), 0))
        }
        Verb::ExtTable => {
            let a = load_algebra(cli)?;
            let ctx = build_context(&a)?;
            let r = approx::ext1_support(&ctx)?;
            let code = if r.violations.is_empty() { 0 } else { 2 };
            Ok((emit(cli, &r, text_ext), code))
        }
        Verb::Counterexample => {
            let n = cli.n.unwrap_or(5);
            if n < 2 {
                return Err(Error::Input("--n must be at least 2".into()));
            }
            let r = approx::counterexample_driver(n, cli.max_steps)?;
            let code = if r.all_checks_ok() { 0 } else { 2 };
            Ok((emit(cli, &r, text_counterexample), code))
        }
        Verb::CorpusDump => {
            let c = Corpus::new(cli.seed, CORPUS_SIZE)?;
            let r = CorpusReport {
                seed: c.seed,
                items: c
                    .items
                    .iter()
                    .map(|it| CorpusEntry {
                        algebra: c.algebras[it.algebra].0.clone(),
                        expr: it.expr.to_string(),
                        dim: it.module.dim(),
                    })
                    .collect(),
            };
            Ok((emit(cli, &r, text_corpus), 0))
        }
    }
}

/// Evaluates to an `R`-module, applying `homG` to modules over `A`.
fn r_module(a: Arc<BoundAlgebra>, e: &Expr) -> Result<SCModule> {
    let mut ev = Evaluator::new(a);
    match ev.eval(e)? {
        Value::R(m) => Ok(m),
        Value::A(m) => ev.context()?.hom_g(&m),
    }
}

fn build_report(a: &BoundAlgebra) -> Result<BuildReport> {
    let p = a.presentation();
    let text = p.to_text();
    let relations = text
        .lines()
        .skip_while(|l| *l != "relations:")
        .skip(1)
        .map(str::to_string)
        .collect();
    let mut projective_dims = Vec::new();
    let mut projective_loewy_lengths = Vec::new();
    let arc = Arc::new(a.clone());
    for i in 1..=a.vertex_count() {
        let pi = Rep::projective(arc.clone(), i)?;
        projective_dims.push(pi.dim());
        projective_loewy_lengths.push(pi.loewy_length());
    }
    Ok(BuildReport {
        name: a.name().to_string(),
        field: a.field().to_string(),
        vertices: a.vertex_count(),
        arrows: p
            .quiver
            .arrows
            .iter()
            .map(|x| format!("{}: {} -> {}", x.name, x.source + 1, x.target + 1))
            .collect(),
        relations,
        dim: a.dim(),
        loewy_length: a.loewy_length(),
        basis: a.basis().iter().map(|b| b.label(&p.quiver)).collect(),
        projective_dims,
        projective_loewy_lengths,
    })
}

fn counts_a(d: &[usize]) -> Vec<Count> {
    d.iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(v, &c)| ((v + 1).to_string(), c))
        .collect()
}

fn counts_r(m: &SCModule, d: &[usize]) -> Vec<Count> {
    m.label_counts(d).into_iter().map(|(l, c)| (l.to_string(), c)).collect()
}

fn module_report(src: &str, v: Value) -> ModuleReport {
    match v {
        Value::A(m) => ModuleReport {
            expr: src.to_string(),
            over: "A".into(),
            dim: m.dim(),
            composition_factors: counts_a(m.dims()),
            top: counts_a(&m.top_dims()),
            socle: counts_a(&m.vertex_dims(&m.socle())),
            loewy_length: m.loewy_length(),
            rigid: m.is_rigid(),
            radical_layers: m.radical_layers().iter().map(|l| counts_a(l)).collect(),
            socle_layers: m.socle_layers().iter().map(|l| counts_a(l)).collect(),
        },
        Value::R(m) => {
            let layers = |ls: Vec<Vec<(Label, usize)>>| -> Vec<Vec<Count>> {
                ls.into_iter()
                    .map(|l| l.into_iter().map(|(x, c)| (x.to_string(), c)).collect())
                    .collect()
            };
            ModuleReport {
                expr: src.to_string(),
                over: "R".into(),
                dim: m.dim(),
                composition_factors: counts_r(&m, m.dims()),
                top: counts_r(&m, &m.top()),
                socle: counts_r(&m, &m.label_dims(&m.socle())),
                loewy_length: m.loewy_length(),
                rigid: m.graded().is_rigid(),
                radical_layers: layers(approx::radical_layers(&m)),
                socle_layers: layers(approx::socle_layers(&m)),
            }
        }
    }
}

fn filtration_report(a: Arc<BoundAlgebra>, src: &str, e: &Expr) -> Result<FiltrationReport> {
    let mut ev = Evaluator::new(a);
    // for homG(E), or a plain module over A, also compare with the socle series of E
    let (m, base) = match ev.eval(e)? {
        Value::R(m) => {
            let base = match e {
                Expr::HomG(inner) => Some(ev.eval_a(inner)?),
                _ => None,
            };
            (m, base)
        }
        Value::A(x) => (ev.context()?.hom_g(&x)?, Some(x)),
    };
    let good = strat::is_delta_good(&m);
    let filt = if good { Some(strat::delta_ss_filtration(&m)?) } else { None };
    let socle_correspondence = match base {
        Some(x) => Some(strat::verify_socle_correspondence(&ev.context()?, &x)?.checks),
        None => None,
    };
    Ok(FiltrationReport {
        expr: src.to_string(),
        dim: m.dim(),
        delta_good: good,
        factor_count: strat::delta_factor_count(&m),
        delta_semisimple: strat::is_delta_semisimple(&m)?.semisimple,
        length: filt.as_ref().map_or(0, |f| f.length()),
        chain_dims: filt.as_ref().map(|f| f.dims()).unwrap_or_default(),
        layers: filt.map(|f| f.layers).unwrap_or_default(),
        socle_correspondence,
    })
}

fn show_counts(c: &[Count], prefix: &str) -> String {
    if c.is_empty() {
        return "0".into();
    }
    c.iter()
        .map(|(l, k)| if *k == 1 { format!("{prefix}{l}") } else { format!("{prefix}{l}^{k}") })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn show_labels(c: &[(Label, usize)], prefix: &str) -> String {
    let c: Vec<Count> = c.iter().map(|(l, k)| (l.to_string(), *k)).collect();
    show_counts(&c, prefix)
}

fn row(out: &mut String, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{key:<24} {value}");
}

fn text_build(r: &BuildReport) -> String {
    let mut s = String::new();
    row(&mut s, "algebra", &r.name);
    row(&mut s, "field", &r.field);
    row(&mut s, "vertices", r.vertices);
    row(&mut s, "arrows", r.arrows.join(", "));
    row(&mut s, "relations", if r.relations.is_empty() { "none".into() } else { r.relations.join(", ") });
    row(&mut s, "dim", r.dim);
    row(&mut s, "Loewy length", r.loewy_length);
    row(&mut s, "basis", r.basis.join(" "));
    let _ = writeln!(s, "\n{:>8} {:>6} {:>4}", "vertex", "dim P", "LL");
    for (i, (d, l)) in r.projective_dims.iter().zip(&r.projective_loewy_lengths).enumerate() {
        let _ = writeln!(s, "{:>8} {:>6} {:>4}", i + 1, d, l);
    }
    s
}

fn grid(s: &mut String, title: &str, layers: &[Vec<Count>], prefix: &str) {
    let _ = writeln!(s, "{title}");
    for (k, l) in layers.iter().enumerate() {
        let _ = writeln!(s, "  {:>3} | {}", k + 1, show_counts(l, prefix));
    }
}

fn text_module(r: &ModuleReport) -> String {
    let p = "L";
    let mut s = String::new();
    row(&mut s, "module", &r.expr);
    row(&mut s, "over", &r.over);
    row(&mut s, "dim", r.dim);
    row(&mut s, "composition factors", show_counts(&r.composition_factors, p));
    row(&mut s, "top", show_counts(&r.top, p));
    row(&mut s, "socle", show_counts(&r.socle, p));
    row(&mut s, "Loewy length", r.loewy_length);
    row(&mut s, "rigid", r.rigid);
    grid(&mut s, "radical layers (top first):", &r.radical_layers, p);
    grid(&mut s, "socle layers (bottom first):", &r.socle_layers, p);
    s
}

fn text_adr(r: &AdrReport) -> String {
    let mut s = String::new();
    row(&mut s, "algebra", &r.algebra);
    row(&mut s, "l_i", format!("{:?}", r.loewy_lengths));
    row(&mut s, "labels", r.labels.len());
    row(&mut s, "dim R", r.dim_r);
    row(&mut s, "dim rad R", r.dim_radical);
    let _ = writeln!(s, "\n{:>8} {:>6} {:>4}", "label", "dim P", "LL");
    for (l, d, ll) in &r.projectives {
        let _ = writeln!(s, "{:>8} {:>6} {:>4}", l.to_string(), d, ll);
    }
    s
}

fn text_standard(r: &StandardReport) -> String {
    let mut s = String::new();
    row(&mut s, "algebra", &r.algebra);
    let _ = writeln!(s, "\n{:>8} {:>4} {:>4} {:>9} {:>4} {:>12}  factors", "label", "dim", "LL", "uniserial", "iso", "sequence");
    for e in &r.standards {
        let (a, b, c) = e.sequence_dims;
        let f: Vec<String> = e.factors.iter().map(|l| format!("L{l}")).collect();
        let _ = writeln!(
            s,
            "{:>8} {:>4} {:>4} {:>9} {:>4} {:>12}  {}",
            e.label.to_string(),
            e.dim,
            e.loewy_length,
            e.uniserial,
            e.realizations_isomorphic,
            format!("{a}→{b}→{c}"),
            f.join(" / ")
        );
    }
    s
}

fn text_filtration(r: &FiltrationReport) -> String {
    let mut s = String::new();
    row(&mut s, "module", &r.expr);
    row(&mut s, "dim", r.dim);
    row(&mut s, "Δ-good", r.delta_good);
    row(&mut s, "Δ-factors", r.factor_count);
    row(&mut s, "Δ-semisimple", r.delta_semisimple);
    row(&mut s, "Δ-semisimple length", r.length);
    row(&mut s, "chain dims", format!("{:?}", r.chain_dims));
    let _ = writeln!(s, "layers (δ_k/δ_(k-1)):");
    for (k, l) in r.layers.iter().enumerate() {
        let _ = writeln!(s, "  {:>3} | {}", k + 1, show_labels(l, "Δ"));
    }
    if let Some(checks) = &r.socle_correspondence {
        let _ = writeln!(s, "socle correspondence:");
        for c in checks {
            let _ = writeln!(s, "  [{}] {}", if c.ok { "ok" } else { "FAIL" }, c.name);
        }
    }
    s
}

fn text_approx(r: &ApproxReport) -> String {
    let mut s = String::new();
    row(&mut s, "module", &r.expr);
    row(&mut s, "rigid", r.rigid);
    row(&mut s, "summands", show_labels(&r.summands, "G"));
    row(&mut s, "source dim", r.source_dim);
    row(&mut s, "approximation", r.is_approximation);
    row(&mut s, "right minimal", r.is_right_minimal);
    if let Some(a) = r.agrees_with_rigid_cover {
        row(&mut s, "matches rigid cover", a);
    }
    s
}

fn text_resolution(s: &mut String, r: &approx::ResolutionReport) {
    let _ = writeln!(s, "{:>4} {:>4} {:>6}  summands", "k", "LL", "LL_G");
    for (k, st) in r.steps.iter().enumerate() {
        let _ = writeln!(s, "{:>4} {:>4} {:>6}  {}", k, st.loewy_length, st.addg_loewy_length, show_labels(&st.summands, "P"));
    }
    row(s, "dll_ok", r.dll_ok);
    if let Some(k) = r.first_violation {
        row(s, "first violation", format!("LL(P_{}) >= LL(P_{k})", k + 1));
    }
    row(s, "Add(G) lengths decrease", r.addg_ok);
    row(s, "truncated", r.truncated);
    row(s, "exact", r.exact);
}

fn text_resolve(r: &ResolveReport) -> String {
    let mut s = String::new();
    row(&mut s, "module", &r.expr);
    text_resolution(&mut s, &r.resolution);
    s
}

fn text_dll(r: &DllReport) -> String {
    let mut s = String::new();
    row(&mut s, "module", &r.expr);
    row(&mut s, "LL(P_k)", format!("{:?}", r.loewy_lengths));
    row(&mut s, "dll_ok", r.dll_ok);
    row(&mut s, "LL(X_k) in Add(G)", format!("{:?}", r.addg.loewy_lengths));
    row(&mut s, "Add(G) decreasing", r.addg.strictly_decreasing);
    row(&mut s, "truncated", r.addg.truncated);
    s
}

fn text_ext(r: &approx::ExtTable) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{:>8} {:>6}  Ext^1(L_s, -) != 0", "label", "rigid");
    for row_ in &r.rows {
        let _ = writeln!(s, "{:>8} {:>6}  {}", row_.label.to_string(), row_.rigid, show_labels(&row_.targets, "L"));
    }
    row(&mut s, "violations", r.violations.len());
    for v in &r.violations {
        let _ = writeln!(s, "  {v}");
    }
    s
}

fn text_counterexample(r: &approx::CounterexampleReport) -> String {
    let mut s = String::new();
    row(&mut s, "n", r.n);
    row(&mut s, "dim R", r.dim_r);
    for c in &r.checks {
        let _ = writeln!(
            s,
            "  [{}] {:<32} expected {:<16} computed {}",
            if c.ok { "ok" } else { "FAIL" },
            c.name,
            c.expected,
            c.computed
        );
    }
    text_resolution(&mut s, &r.resolution);
    row(&mut s, "LL pair", format!("({}, {})", r.ll_pair.0, r.ll_pair.1));
    s
}

fn text_corpus(r: &CorpusReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# seed {}", r.seed);
    for it in &r.items {
        let _ = writeln!(s, "{:<10} {:>4}  {}", it.algebra, it.dim, it.expr);
    }
    s
}
