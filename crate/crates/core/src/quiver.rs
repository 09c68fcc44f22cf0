//! Quiver presentations and the bound quiver algebra `KQ/I`.
//!
//! Paths compose like functions: `p*q` means "first `q`, then `p`", so a path
//! is stored in written order with the last-applied arrow first.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{ensure, Error, Result};
use crate::exact::{Field, Matrix, Scalar, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    /// 0-based source vertex.
    pub source: usize,
    /// 0-based target vertex.
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertex_count: usize,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }
}

/// A path in written order: `arrows[0]` is applied last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self * other` (first `other`, then `self`), if composable.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if other.target != self.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: other.source,
            target: self.target,
            arrows,
        })
    }

    pub fn label(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", self.source + 1)
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrows[a].name.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    /// Sort key for basis selection: shorter first, then lexicographic.
    fn order_key(&self) -> (usize, &[usize], usize) {
        (self.arrows.len(), &self.arrows, self.source)
    }
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

impl Relation {
    pub fn source(&self) -> usize {
        self.terms[0].1.source
    }

    pub fn target(&self) -> usize {
        self.terms[0].1.target
    }

    pub fn min_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0)
    }
}

/// Parsed algebra file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub field: Field,
    pub params: Vec<(String, i64)>,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Parses an algebra file using the parameter values declared in it.
pub fn parse_algebra(text: &str) -> Result<Presentation> {
    parse_algebra_with(text, &[], None)
}

/// Parses an algebra file, overriding declared parameters and the field.
pub fn parse_algebra_with(
    text: &str,
    overrides: &[(String, i64)],
    field_override: Option<Field>,
) -> Result<Presentation> {
    let mut name = None;
    let mut field = Field::Rationals;
    let mut params: Vec<(String, i64)> = Vec::new();
    let mut vertex_count = None;
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut relation_lines: Vec<(usize, usize, String)> = Vec::new();
    let mut in_relations = false;

    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        let line = content.trim();
        if in_relations {
            relation_lines.push((line_no, indent + 1, line.to_string()));
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        match words[0] {
            "algebra" => {
                if words.len() < 4 || words[2] != "field" {
                    return Err(syntax(
                        line_no,
                        indent + 1,
                        "expected 'algebra <name> field <Q|Fp:p> [param <name>=<int>]'",
                    ));
                }
                name = Some(words[1].to_string());
                field = words[3]
                    .parse()
                    .map_err(|e: Error| syntax(line_no, column_of(raw, words[3]), e.to_string()))?;
                let mut k = 4;
                while k < words.len() {
                    if words[k] != "param" || k + 1 >= words.len() {
                        return Err(syntax(line_no, column_of(raw, words[k]), "expected 'param <name>=<int>'"));
                    }
                    let spec = words[k + 1];
                    let (pname, pval) = spec
                        .split_once('=')
                        .ok_or_else(|| syntax(line_no, column_of(raw, spec), "expected <name>=<int>"))?;
                    let pval: i64 = pval
                        .parse()
                        .map_err(|_| syntax(line_no, column_of(raw, spec), "parameter value must be an integer"))?;
                    if !is_ident(pname) {
                        return Err(syntax(line_no, column_of(raw, spec), "bad parameter name"));
                    }
                    params.push((pname.to_string(), pval));
                    k += 2;
                }
            }
            "vertices" => {
                if words.len() != 2 {
                    return Err(syntax(line_no, indent + 1, "expected 'vertices <n>'"));
                }
                let n: usize = words[1]
                    .parse()
                    .map_err(|_| syntax(line_no, column_of(raw, words[1]), "vertex count must be a positive integer"))?;
                if n == 0 {
                    return Err(syntax(line_no, column_of(raw, words[1]), "need at least one vertex"));
                }
                vertex_count = Some(n);
            }
            "arrow" => {
                let n = vertex_count
                    .ok_or_else(|| syntax(line_no, indent + 1, "'vertices' must precede arrows"))?;
                let rest = line["arrow".len()..].trim();
                let (aname, ends) = rest
                    .split_once(':')
                    .ok_or_else(|| syntax(line_no, indent + 1, "expected 'arrow <name>: <src> -> <tgt>'"))?;
                let aname = aname.trim();
                if !is_ident(aname) {
                    return Err(syntax(line_no, column_of(raw, aname), format!("bad arrow name '{aname}'")));
                }
                if arrows.iter().any(|a| a.name == aname) {
                    return Err(syntax(line_no, column_of(raw, aname), format!("duplicate arrow '{aname}'")));
                }
                let (s, t) = ends
                    .split_once("->")
                    .ok_or_else(|| syntax(line_no, column_of(raw, ends.trim()), "expected '<src> -> <tgt>'"))?;
                let parse_vertex = |tok: &str| -> Result<usize> {
                    let tok = tok.trim();
                    let v: usize = tok
                        .parse()
                        .map_err(|_| syntax(line_no, column_of(raw, tok), format!("bad vertex '{tok}'")))?;
                    if v == 0 || v > n {
                        return Err(syntax(line_no, column_of(raw, tok), format!("vertex {v} out of range 1..{n}")));
                    }
                    Ok(v - 1)
                };
                arrows.push(Arrow {
                    name: aname.to_string(),
                    source: parse_vertex(s)?,
                    target: parse_vertex(t)?,
                });
            }
            "relations:" => in_relations = true,
            other => {
                return Err(syntax(line_no, indent + 1, format!("unexpected keyword '{other}'")));
            }
        }
    }

    let name = name.ok_or_else(|| syntax(1, 1, "missing 'algebra' header"))?;
    let vertex_count = vertex_count.ok_or_else(|| syntax(1, 1, "missing 'vertices' line"))?;
    for (k, v) in overrides {
        match params.iter_mut().find(|(n, _)| n == k) {
            Some(slot) => slot.1 = *v,
            None => return Err(Error::Input(format!("algebra '{name}' has no parameter '{k}'"))),
        }
    }
    if let Some(f) = field_override {
        field = f;
    }
    let quiver = Quiver {
        vertex_count,
        arrows,
    };
    let mut relations = Vec::new();
    for (line_no, col, text) in relation_lines {
        if let Some(r) = parse_relation(&text, line_no, col, &quiver, &params, field)? {
            relations.push(r);
        }
    }
    Ok(Presentation {
        name,
        field,
        params,
        quiver,
        relations,
    })
}

fn column_of(line: &str, token: &str) -> usize {
    line.find(token).map_or(1, |c| c + 1)
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Star,
    Caret,
    Plus,
    Minus,
}

fn tokenize(text: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let col = col0 + i;
        match c {
            ' ' | '\t' => i += 1,
            '*' => {
                out.push((Tok::Star, col));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, col));
                i += 1;
            }
            '+' => {
                out.push((Tok::Plus, col));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, col));
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v = text[start..i]
                    .parse()
                    .map_err(|_| syntax(line, col, "integer too large"))?;
                out.push((Tok::Int(v), col));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), col));
            }
            other => return Err(syntax(line, col, format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
}

fn parse_relation(
    text: &str,
    line: usize,
    col0: usize,
    q: &Quiver,
    params: &[(String, i64)],
    field: Field,
) -> Result<Option<Relation>> {
    let toks = tokenize(text, line, col0)?;
    let end_col = col0 + text.len();
    let mut pos = 0;
    let mut terms: Vec<(Scalar, Path, usize)> = Vec::new();
    let mut first = true;
    while pos < toks.len() || first {
        let mut sign = 1i64;
        match toks.get(pos) {
            Some((Tok::Plus, _)) => pos += 1,
            Some((Tok::Minus, _)) => {
                sign = -1;
                pos += 1;
            }
            Some((_, c)) if !first => return Err(syntax(line, *c, "expected '+' or '-' between terms")),
            None if first => return Err(syntax(line, col0, "empty relation")),
            _ => {}
        }
        first = false;
        let term_col = toks.get(pos).map_or(end_col, |t| t.1);
        let mut coeff = sign;
        if let Some((Tok::Int(v), _)) = toks.get(pos) {
            coeff *= *v;
            pos += 1;
            match toks.get(pos) {
                Some((Tok::Star, _)) => pos += 1,
                _ => return Err(syntax(line, term_col, "a relation term needs a path of length at least 2")),
            }
        }
        // factors
        let mut factors: Vec<(usize, usize)> = Vec::new(); // (arrow, column)
        loop {
            let (name, col) = match toks.get(pos) {
                Some((Tok::Ident(n), c)) => (n.clone(), *c),
                Some((_, c)) => return Err(syntax(line, *c, "expected an arrow name")),
                None => return Err(syntax(line, end_col, "expected an arrow name")),
            };
            pos += 1;
            let a = q
                .arrow_index(&name)
                .ok_or_else(|| syntax(line, col, format!("unknown arrow '{name}'")))?;
            let mut power = 1i64;
            if let Some((Tok::Caret, _)) = toks.get(pos) {
                pos += 1;
                power = match toks.get(pos) {
                    Some((Tok::Int(v), _)) => *v,
                    Some((Tok::Ident(p), c)) => params
                        .iter()
                        .find(|(n, _)| n == p)
                        .map(|(_, v)| *v)
                        .ok_or_else(|| syntax(line, *c, format!("unknown parameter '{p}'")))?,
                    Some((_, c)) => return Err(syntax(line, *c, "expected an exponent")),
                    None => return Err(syntax(line, end_col, "expected an exponent")),
                };
                pos += 1;
                if power < 1 {
                    return Err(syntax(line, col, "exponent must be positive"));
                }
                if power > 1 && q.arrows[a].source != q.arrows[a].target {
                    return Err(syntax(line, col, format!("'^' is only allowed on loops, '{name}' is not a loop")));
                }
            }
            for _ in 0..power {
                factors.push((a, col));
            }
            match toks.get(pos) {
                Some((Tok::Star, _)) => pos += 1,
                _ => break,
            }
        }
        for w in factors.windows(2) {
            let (left, right) = (w[0], w[1]);
            if q.arrows[right.0].target != q.arrows[left.0].source {
                return Err(syntax(
                    line,
                    right.1,
                    format!(
                        "path not composable: '{}' ends at {} but '{}' starts at {}",
                        q.arrows[right.0].name,
                        q.arrows[right.0].target + 1,
                        q.arrows[left.0].name,
                        q.arrows[left.0].source + 1
                    ),
                ));
            }
        }
        if factors.len() < 2 {
            return Err(syntax(line, term_col, "relation paths must have length at least 2"));
        }
        let arrows: Vec<usize> = factors.iter().map(|f| f.0).collect();
        let path = Path {
            source: q.arrows[*arrows.last().unwrap()].source,
            target: q.arrows[arrows[0]].target,
            arrows,
        };
        terms.push((field.from_i64(coeff), path, term_col));
    }
    let (s, t) = (terms[0].1.source, terms[0].1.target);
    for (_, p, c) in &terms {
        if p.source != s || p.target != t {
            return Err(syntax(
                line,
                *c,
                "all paths in a relation must share source and target (split mixed relations)",
            ));
        }
    }
    let mut combined: Vec<(Scalar, Path)> = Vec::new();
    for (c, p, _) in terms {
        match combined.iter_mut().find(|(_, q)| *q == p) {
            Some(slot) => slot.0 = &slot.0 + &c,
            None => combined.push((c, p)),
        }
    }
    combined.retain(|(c, _)| !c.is_zero());
    if combined.is_empty() {
        return Ok(None);
    }
    Ok(Some(Relation { terms: combined }))
}

impl Presentation {
    /// Canonical text form; parsing it gives back an identical presentation.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "algebra {} field {}", self.name, self.field);
        for (n, v) in &self.params {
            let _ = write!(s, " param {n}={v}");
        }
        s.push('\n');
        let _ = writeln!(s, "vertices {}", self.quiver.vertex_count);
        for a in &self.quiver.arrows {
            let _ = writeln!(s, "arrow {}: {} -> {}", a.name, a.source + 1, a.target + 1);
        }
        s.push_str("relations:\n");
        for r in &self.relations {
            let mut line = String::new();
            for (k, (c, p)) in r.terms.iter().enumerate() {
                let neg = is_negative(c);
                let mag = if neg { -c } else { c.clone() };
                if k == 0 {
                    if neg {
                        line.push('-');
                    }
                } else {
                    line.push_str(if neg { " - " } else { " + " });
                }
                if !mag.is_one() {
                    let _ = write!(line, "{mag}*");
                }
                line.push_str(&p.label(&self.quiver));
            }
            let _ = writeln!(s, "{line}");
        }
        s
    }
}

fn is_negative(c: &Scalar) -> bool {
    match c {
        Scalar::Rational(r) => r < &num_rational::BigRational::from_integer(0.into()),
        Scalar::Mod { .. } => false,
    }
}

/// Default bound on path length while searching for the Loewy length.
pub const DEFAULT_MAX_LENGTH: usize = 64;

/// The finite-dimensional algebra `KQ/I` with a path-residue basis.
#[derive(Clone, Debug)]
pub struct BoundAlgebra {
    presentation: Presentation,
    basis: Vec<Path>,
    /// Every path shorter than the Loewy length, reduced to basis coordinates.
    reductions: HashMap<Path, Vec<(usize, Scalar)>>,
    mult: Vec<Vec<Vec<(usize, Scalar)>>>,
    loewy_length: usize,
}

fn enumerate_paths(q: &Quiver, max_len: usize) -> Vec<Vec<Path>> {
    let mut by_len: Vec<Vec<Path>> = vec![(0..q.vertex_count).map(Path::trivial).collect()];
    for len in 1..=max_len {
        let mut next = Vec::new();
        for p in &by_len[len - 1] {
            for (a, arrow) in q.arrows.iter().enumerate() {
                if arrow.source == p.target {
                    let mut arrows = vec![a];
                    arrows.extend_from_slice(&p.arrows);
                    next.push(Path {
                        source: p.source,
                        target: arrow.target,
                        arrows,
                    });
                }
            }
        }
        next.sort_by(|x, y| x.order_key().cmp(&y.order_key()));
        by_len.push(next);
    }
    by_len
}

/// Spanning vectors of `I` modulo paths longer than `max_len`, as rows over
/// the columns indexed by `col_of`.
fn ideal_rows(
    field: Field,
    rels: &[Relation],
    by_len: &[Vec<Path>],
    col_of: &HashMap<Path, usize>,
    max_len: usize,
) -> Vec<Vec<Scalar>> {
    let ncols = col_of.len();
    let mut rows = Vec::new();
    for r in rels {
        let rmin = r.min_len();
        if rmin > max_len {
            continue;
        }
        for ulen in 0..=(max_len - rmin) {
            for u in by_len[ulen].iter().filter(|u| u.source == r.target()) {
                for vlen in 0..=(max_len - rmin - ulen) {
                    for v in by_len[vlen].iter().filter(|v| v.target == r.source()) {
                        let mut row = vec![field.zero(); ncols];
                        let mut nonzero = false;
                        for (c, p) in &r.terms {
                            let full = u.compose(p).and_then(|up| up.compose(v)).expect("composable");
                            if full.len() <= max_len {
                                let col = col_of[&full];
                                row[col] = &row[col] + c;
                                nonzero = true;
                            }
                        }
                        if nonzero {
                            rows.push(row);
                        }
                    }
                }
            }
        }
    }
    rows
}

fn column_index(by_len: &[Vec<Path>], max_len: usize) -> (Vec<Path>, HashMap<Path, usize>) {
    let cols: Vec<Path> = by_len[..=max_len].iter().flatten().cloned().collect();
    let idx = cols.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    (cols, idx)
}

/// Builds `KQ/I`, searching for the Loewy length up to `max_length`.
pub fn build_bound_algebra(p: &Presentation) -> Result<BoundAlgebra> {
    BoundAlgebra::build(p.clone(), DEFAULT_MAX_LENGTH)
}

impl BoundAlgebra {
    pub fn build(presentation: Presentation, max_length: usize) -> Result<BoundAlgebra> {
        let field = presentation.field;
        let q = &presentation.quiver;
        let rels = &presentation.relations;

        // Find the first L with J^L ⊆ I + J^(L+1); admissibility then gives J^L ⊆ I.
        let mut loewy = None;
        let mut by_len = enumerate_paths(q, 1);
        for len in 1..=max_length {
            if by_len.len() <= len {
                by_len = enumerate_paths(q, len);
            }
            if by_len[len].is_empty() {
                loewy = Some(len);
                break;
            }
            let (_, col_of) = column_index(&by_len, len);
            let rows = ideal_rows(field, rels, &by_len, &col_of, len);
            let span = Subspace::from_vectors(field, col_of.len(), rows);
            let all_in = by_len[len].iter().all(|p| {
                let mut v = vec![field.zero(); col_of.len()];
                v[col_of[p]] = field.one();
                span.contains(&v)
            });
            if all_in {
                loewy = Some(len);
                break;
            }
        }
        let loewy = loewy.ok_or(Error::LengthBound(max_length))?;

        // A = (paths of length < L) / (I mod J^L).
        let top = loewy - 1;
        let (cols, col_of) = column_index(&by_len, top);
        let rows = ideal_rows(field, rels, &by_len, &col_of, top);
        let ideal = Subspace::from_vectors(field, cols.len(), rows);
        let mut pivot_row = vec![None; cols.len()];
        for (k, &p) in ideal.pivots().iter().enumerate() {
            pivot_row[p] = Some(k);
        }
        let basis_cols: Vec<usize> = (0..cols.len()).filter(|&c| pivot_row[c].is_none()).collect();
        let basis: Vec<Path> = basis_cols.iter().map(|&c| cols[c].clone()).collect();
        let mut basis_of_col = vec![None; cols.len()];
        for (i, &c) in basis_cols.iter().enumerate() {
            basis_of_col[c] = Some(i);
        }
        let mut reductions = HashMap::new();
        for (c, path) in cols.iter().enumerate() {
            let red = match (basis_of_col[c], pivot_row[c]) {
                (Some(i), _) => vec![(i, field.one())],
                (None, Some(k)) => ideal
                    .basis()
                    .row(k)
                    .iter()
                    .enumerate()
                    .filter(|(j, x)| *j != c && !x.is_zero())
                    .map(|(j, x)| (basis_of_col[j].expect("non-pivot column"), -x))
                    .collect(),
                (None, None) => unreachable!(),
            };
            reductions.insert(path.clone(), red);
        }

        let n = basis.len();
        let mut mult = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                if let Some(p) = basis[i].compose(&basis[j]) {
                    if let Some(red) = reductions.get(&p) {
                        mult[i][j] = red.clone();
                    }
                }
            }
        }
        let alg = BoundAlgebra {
            presentation,
            basis,
            reductions,
            mult,
            loewy_length: loewy,
        };
        alg.check_invariants()?;
        Ok(alg)
    }

    fn check_invariants(&self) -> Result<()> {
        let n = self.dim();
        let field = self.field();
        // associativity on every basis triple
        for i in 0..n {
            for j in 0..n {
                let ij = self.product_vec(&self.unit(i), &self.unit(j));
                for k in 0..n {
                    let left = self.product_vec(&ij, &self.unit(k));
                    let jk = self.product_vec(&self.unit(j), &self.unit(k));
                    let right = self.product_vec(&self.unit(i), &jk);
                    ensure!(left == right, "multiplication not associative on ({i},{j},{k})");
                }
            }
        }
        for r in &self.presentation.relations {
            let mut acc = vec![field.zero(); n];
            for (c, p) in &r.terms {
                for (b, x) in self.reduce_path(p) {
                    acc[b] = &acc[b] + &(c * &x);
                }
            }
            ensure!(acc.iter().all(Scalar::is_zero), "a relation does not vanish in the algebra");
        }
        let trivial = self.basis.iter().filter(|p| p.is_trivial()).count();
        ensure!(trivial == self.vertex_count(), "vertex idempotents missing from the basis");
        Ok(())
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn quiver(&self) -> &Quiver {
        &self.presentation.quiver
    }

    pub fn field(&self) -> Field {
        self.presentation.field
    }

    pub fn name(&self) -> &str {
        &self.presentation.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.presentation.quiver.vertex_count
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn loewy_length(&self) -> usize {
        self.loewy_length
    }

    pub fn relations(&self) -> &[Relation] {
        &self.presentation.relations
    }

    /// Basis index of the idempotent at 0-based vertex `v`.
    pub fn idempotent(&self, v: usize) -> usize {
        self.basis
            .iter()
            .position(|p| p.is_trivial() && p.source == v)
            .expect("trivial path is a basis element")
    }

    /// Coordinates of a path's residue; paths at least as long as the Loewy
    /// length vanish.
    pub fn reduce_path(&self, p: &Path) -> Vec<(usize, Scalar)> {
        if p.len() >= self.loewy_length {
            return Vec::new();
        }
        self.reductions.get(p).cloned().unwrap_or_default()
    }

    /// `b_i * b_j` as a sparse combination.
    pub fn mult(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult[i][j]
    }

    pub fn unit(&self, i: usize) -> Vec<Scalar> {
        crate::exact::unit_vec(self.field(), self.dim(), i)
    }

    pub fn product_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let field = self.field();
        let mut out = vec![field.zero(); self.dim()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.mult[i][j] {
                    out[*k] = &out[*k] + &(&xy * c);
                }
            }
        }
        out
    }

    /// Span of the basis residues of length at least `k`, i.e. `rad^k A`.
    pub fn radical_power_basis(&self, k: usize) -> Subspace {
        let field = self.field();
        let vectors = self
            .basis
            .iter()
            .enumerate()
            .filter(|(_, p)| p.len() >= k)
            .map(|(i, _)| self.unit(i))
            .collect();
        Subspace::from_vectors(field, self.dim(), vectors)
    }

    /// Basis indices of paths starting at 0-based vertex `v` (a basis of `A e_v`).
    pub fn paths_from(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].source == v).collect()
    }

    /// Matrix of left multiplication by the basis element `i`.
    pub fn left_mult_matrix(&self, i: usize) -> Matrix {
        let field = self.field();
        let mut m = Matrix::zeros(field, self.dim(), self.dim());
        for j in 0..self.dim() {
            for (k, c) in &self.mult[i][j] {
                m.set(*k, j, c.clone());
            }
        }
        m
    }
}

/// Convenience: the radical power `rad^k A` of a built algebra.
pub fn radical_power_basis(a: &BoundAlgebra, k: usize) -> Subspace {
    a.radical_power_basis(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    #[test]
    fn dual_numbers() {
        let p = parse_algebra("algebra kx2 field Q\nvertices 1\narrow x: 1 -> 1\nrelations:\nx*x\n").unwrap();
        assert_eq!(p.quiver.arrows.len(), 1);
        assert_eq!(p.relations.len(), 1);
        let a = build_bound_algebra(&p).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.loewy_length(), 2);
        assert_eq!(a.radical_power_basis(0).dim(), 2);
        assert_eq!(a.radical_power_basis(1).dim(), 1);
        assert!(a.radical_power_basis(2).is_zero());
    }

    #[test]
    fn counterexample_family_presentation() {
        let p = parse_algebra_with(builtins::A_N, &[("n".into(), 5)], None).unwrap();
        assert_eq!(p.quiver.vertex_count, 3);
        assert_eq!(p.quiver.arrows.len(), 5);
        assert_eq!(p.relations.len(), 6);
        let eps_power = p.relations.iter().find(|r| r.terms[0].1.len() == 5).unwrap();
        assert_eq!(eps_power.terms.len(), 1);
    }

    #[test]
    fn composability_error() {
        let text = builtins::A_N.replace("eps^n", "a1*a1");
        match parse_algebra(&text) {
            Err(Error::Syntax { message, .. }) => assert!(message.contains("not composable"), "{message}"),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn error_paths() {
        let base = "algebra t field Q\nvertices 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrelations:\n";
        let err = |rel: &str| parse_algebra(&format!("{base}{rel}\n")).unwrap_err();
        assert!(matches!(err("a*c"), Error::Syntax { line: 6, column: 3, .. }));
        assert!(matches!(err("a"), Error::Syntax { .. }));
        assert!(matches!(err("a*b - b*a"), Error::Syntax { .. }));
        assert!(matches!(err("a^2"), Error::Syntax { .. }));
        assert!(parse_algebra("vertices 2\n").is_err());
    }

    #[test]
    fn length_guard() {
        let p = parse_algebra("algebra free field Q\nvertices 1\narrow x: 1 -> 1\nrelations:\n").unwrap();
        assert!(matches!(BoundAlgebra::build(p, 6), Err(Error::LengthBound(6))));
    }

    #[test]
    fn path_algebra_dimension_by_enumeration() {
        let a = builtins::algebra("ex54", None).unwrap();
        // Oracle: 6 trivial paths, 5 arrows, eps*beta and eta*gamma.
        let by_len = enumerate_paths(a.quiver(), 4);
        let count: usize = by_len.iter().map(Vec::len).sum();
        assert_eq!(count, 13);
        assert_eq!(a.dim(), 13);
        assert_eq!(a.loewy_length(), 3);
    }

    #[test]
    fn counterexample_loewy_lengths() {
        // Oracle: smallest k with rad^k A = 0, computed from the multiplication
        // table by repeated products of radical elements.
        for n in 2..=5 {
            let a = builtins::algebra("an", Some(n)).unwrap();
            let mut power = a.radical_power_basis(1);
            let rad = power.clone();
            let mut k = 1;
            while !power.is_zero() {
                let mut vs = Vec::new();
                for x in power.vectors() {
                    for y in rad.vectors() {
                        vs.push(a.product_vec(&x, &y));
                    }
                }
                power = Subspace::from_vectors(a.field(), a.dim(), vs);
                k += 1;
            }
            assert_eq!(a.loewy_length(), k, "n = {n}");
            assert_eq!(k as i64, n.max(3), "n = {n}");
        }
    }

    #[test]
    fn round_trip_text() {
        for name in builtins::NAMES {
            let text = builtins::text(name).unwrap();
            let p = parse_algebra(text).unwrap();
            let again = parse_algebra(&p.to_text()).unwrap();
            assert_eq!(p, again, "{name}");
        }
    }

    #[test]
    fn relations_vanish_and_degrees_add_up() {
        for name in builtins::NAMES {
            let a = builtins::algebra(name, None).unwrap();
            let degree0 = a.basis().iter().filter(|p| p.len() == 0).count();
            assert_eq!(degree0, a.vertex_count());
            for j in 0..a.loewy_length() {
                for k in 0..a.loewy_length() {
                    let rj = a.radical_power_basis(j);
                    let rk = a.radical_power_basis(k);
                    let rjk = a.radical_power_basis(j + k);
                    for x in rj.vectors() {
                        for y in rk.vectors() {
                            assert!(rjk.contains(&a.product_vec(&x, &y)));
                        }
                    }
                }
            }
        }
    }
}
