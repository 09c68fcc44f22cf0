//! Exact linear algebra over the rationals and prime fields.
//!
//! Every structure in the crate reduces to the handful of operations here:
//! reduced row-echelon forms, kernels, canonical subspaces, intersections and
//! quotient maps with a deterministic complement.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// `F_p`, rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Field> {
        if !(2..=(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::Input(format!("Fp:{p} is not a supported prime field")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Mod { value: 0, prime: p },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Mod {
                value: v.rem_euclid(p as i64) as u64,
                prime: p,
            },
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rationals);
        }
        if let Some(p) = s.strip_prefix("Fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Input(format!("bad prime in field tag '{s}'")))?;
            return Field::prime(p);
        }
        Err(Error::Input(format!("unknown field '{s}' (expected Q or Fp:<prime>)")))
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element tagged with its field.
///
/// Mixing elements of different fields in one operation is a logic error and
/// panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u64, prime: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Mod { prime, .. } => Field::Prime(*prime),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Mod { value, prime } => Scalar::Mod {
                value: pow_mod(*value, prime - 2, *prime),
                prime: *prime,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % m as u128) as u64;
        }
        base = ((base as u128 * base as u128) % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

fn field_mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { value: a, prime: p }, Scalar::Mod { value: b, prime: q }) if p == q => {
                Scalar::Mod {
                    value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    prime: *p,
                }
            }
            _ => field_mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Mod { value: a, prime: p }, Scalar::Mod { value: b, prime: q }) if p == q => {
                Scalar::Mod {
                    value: ((*a as u128 + *p as u128 - *b as u128) % *p as u128) as u64,
                    prime: *p,
                }
            }
            _ => field_mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { value: a, prime: p }, Scalar::Mod { value: b, prime: q }) if p == q => {
                Scalar::Mod {
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    prime: *p,
                }
            }
            _ => field_mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { value, prime } => Scalar::Mod {
                value: (prime - value) % prime,
                prime: *prime,
            },
        }
    }
}

/// `a += b * c`, skipping the work when either factor vanishes.
#[inline]
fn add_mul_assign(a: &mut Scalar, b: &Scalar, c: &Scalar) {
    if b.is_zero() || c.is_zero() {
        return;
    }
    *a = &*a + &(b * c);
}

/// Dense row-major matrix of scalars from one field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from integer rows. All rows must have equal length.
    pub fn from_ints(field: Field, rows: &[Vec<i64>]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            field,
            cols,
            rows.iter()
                .map(|r| {
                    assert_eq!(r.len(), cols, "ragged integer rows");
                    r.iter().map(|&v| field.from_i64(v)).collect()
                })
                .collect(),
        )
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Matrix {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r);
        }
        Matrix {
            field,
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        add_mul_assign(&mut out.data[idx], a, b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    add_mul_assign(&mut acc, a, b);
                }
                acc
            })
            .collect()
    }

    /// Stacks matrices vertically; all must share the column count.
    pub fn vstack(field: Field, cols: usize, parts: &[&Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            assert_eq!(p.cols, cols);
            data.extend_from_slice(&p.data);
            rows += p.rows;
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Places `block` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, self.get(r0 + r, c0 + c).clone());
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        rref_pivots(self).1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Two-sided inverse, or `None` for singular or non-square matrices.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let mut rows: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend(unit_vec(self.field, n, r));
                row
            })
            .collect();
        let pivots = eliminate(self.field, &mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let right = rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Matrix::from_rows(self.field, n, right))
    }

    /// Column space as a subspace of `K^rows`.
    pub fn column_space(&self) -> Subspace {
        Subspace::row_space(&self.transpose())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// In-place Gauss-Jordan elimination; returns pivot columns and truncates to
/// the nonzero rows.
fn eliminate(field: Field, rows: &mut Vec<Vec<Scalar>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let support: Vec<usize> = (c..cols).filter(|&j| !rows[r][j].is_zero()).collect();
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for &j in &support {
                row[j] = &row[j] - &(&factor * &pivot_row[j]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    let _ = field;
    pivots
}

fn rref_pivots(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut rows = m.row_vecs();
    let pivots = eliminate(m.field, &mut rows, m.cols);
    (Matrix::from_rows(m.field, m.cols, rows), pivots)
}

/// Reduced row-echelon form with zero rows removed.
pub fn rref(m: &Matrix) -> Matrix {
    rref_pivots(m).0
}

/// Right kernel `{x : m x = 0}` in canonical form.
pub fn nullspace(m: &Matrix) -> Subspace {
    let (r, pivots) = rref_pivots(m);
    let field = m.field;
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); m.cols];
        v[free] = field.one();
        for (k, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(k, free);
        }
        basis.push(v);
    }
    Subspace::from_vectors(field, m.cols, basis)
}

/// `u ∩ v` in canonical form.
pub fn intersect(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    u.intersect(v)
}

/// Quotient `K^ambient → K^ambient / w`, together with the quotient dimension.
pub fn quotient_map(ambient_dim: usize, w: &Subspace) -> Result<(Matrix, usize)> {
    if w.ambient() != ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: ambient_dim,
            found: w.ambient(),
        });
    }
    let q = w.quotient();
    let d = q.dim();
    Ok((q.matrix, d))
}

/// A subspace stored by its reduced row-echelon basis, so equality is
/// structural equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

/// Canonical surjection onto a quotient, with the section spanned by the
/// non-pivot coordinates.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub matrix: Matrix,
    /// Ambient coordinates whose unit vectors map to the quotient basis.
    pub complement: Vec<usize>,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    /// The section `K^dim → K^ambient` sending basis vector k to the unit
    /// vector at `complement[k]`.
    pub fn section(&self) -> Matrix {
        let field = self.matrix.field();
        let mut s = Matrix::zeros(field, self.matrix.cols(), self.complement.len());
        for (k, &c) in self.complement.iter().enumerate() {
            s.set(c, k, field.one());
        }
        s
    }
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Subspace {
        let (basis, pivots) = rref_pivots(m);
        Subspace {
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn from_vectors(field: Field, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Subspace {
        let mut rows = vectors;
        let pivots = eliminate(field, &mut rows, ambient);
        Subspace {
            ambient,
            basis: Matrix::from_rows(field, ambient, rows),
            pivots,
        }
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (k, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(k).iter().enumerate() {
                if !b.is_zero() {
                    residual[j] = &residual[j] - &(c * b);
                }
            }
        }
        residual.iter().all(Scalar::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.row_vecs().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut vs = self.vectors();
        vs.extend(other.vectors());
        Subspace::from_vectors(self.field(), self.ambient, vs)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        let field = self.field();
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(field, self.ambient));
        }
        // x^T [U; V] = 0  ⇔  a U = -b V; the intersection is spanned by a U.
        let stacked = Matrix::vstack(field, self.ambient, &[&self.basis, &other.basis]);
        let left_kernel = nullspace(&stacked.transpose());
        let du = self.dim();
        let vectors = left_kernel
            .vectors()
            .into_iter()
            .map(|x| self.combine(&x[..du]))
            .collect();
        Ok(Subspace::from_vectors(field, self.ambient, vectors))
    }

    /// `Σ coeffs[k] * basis[k]`.
    pub fn combine(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        let field = self.field();
        let mut out = vec![field.zero(); self.ambient];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(k).iter().enumerate() {
                add_mul_assign(&mut out[j], c, b);
            }
        }
        out
    }

    /// The quotient by `self`, complement spanned by the non-pivot coordinates.
    pub fn quotient(&self) -> Quotient {
        let field = self.field();
        let mut is_pivot = vec![None; self.ambient];
        for (k, &p) in self.pivots.iter().enumerate() {
            is_pivot[p] = Some(k);
        }
        let complement: Vec<usize> = (0..self.ambient).filter(|&c| is_pivot[c].is_none()).collect();
        let mut m = Matrix::zeros(field, complement.len(), self.ambient);
        for (qi, &c) in complement.iter().enumerate() {
            m.set(qi, c, field.one());
            for (k, &p) in self.pivots.iter().enumerate() {
                let entry = self.basis.get(k, c);
                if !entry.is_zero() {
                    m.set(qi, p, -entry);
                }
            }
        }
        Quotient {
            matrix: m,
            complement,
        }
    }

    /// Image of the subspace under the linear map `m` (acting on columns).
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        let vectors = self.basis.row_vecs().iter().map(|v| m.apply(v)).collect();
        Subspace::from_vectors(self.field(), m.rows(), vectors)
    }

    /// Preimage `{x : m x ∈ self}`.
    pub fn preimage_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.rows(), self.ambient);
        // x ↦ (quotient by self)(m x) has kernel exactly the preimage.
        let q = self.quotient();
        nullspace(&q.matrix.mul(m))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span(dim {} in {}):\n{}", self.dim(), self.ambient, self.basis)
    }
}

/// Small helpers used throughout for vectors.
pub fn zero_vec(field: Field, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn unit_vec(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Rational scalar from a numerator/denominator pair, used by tests.
pub fn rational(num: i64, den: i64) -> Scalar {
    Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

/// True when every rational entry is an integer of absolute value at most `bound`.
pub fn is_small_integer(s: &Scalar, bound: i64) -> bool {
    match s {
        Scalar::Rational(r) => r.is_integer() && r.numer().abs() <= BigInt::from(bound),
        Scalar::Mod { .. } => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(Q, 2);
        assert_eq!(rref(&id), id);
        let z = Matrix::zeros(Q, 3, 4);
        let r = rref(&z);
        assert_eq!(r.rows(), 0);
        assert_eq!(z.rank(), 0);
    }

    #[test]
    fn rref_rank_one() {
        // Hand elimination: [[2,4],[1,2]] → row1/2 = [1,2], row2 - row1 = 0.
        let m = Matrix::from_ints(Q, &[vec![2, 4], vec![1, 2]]);
        assert_eq!(rref(&m), Matrix::from_ints(Q, &[vec![1, 2]]));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn nullspace_examples() {
        assert!(nullspace(&Matrix::identity(Q, 3)).is_zero());
        assert_eq!(nullspace(&Matrix::zeros(Q, 2, 3)), Subspace::full(Q, 3));
        let k = nullspace(&Matrix::from_ints(Q, &[vec![1, 1, 0]]));
        assert_eq!(k.dim(), 2);
        let v = vec![Q.from_i64(1), Q.from_i64(-1), Q.from_i64(0)];
        assert!(k.contains(&v));
        // substitution check on every basis vector
        for b in k.vectors() {
            assert!((&b[0] + &b[1]).is_zero());
        }
    }

    #[test]
    fn intersection_examples() {
        let plane = Subspace::full(Q, 2);
        let diag = Subspace::from_vectors(Q, 2, vec![vec![Q.from_i64(1), Q.from_i64(1)]]);
        assert_eq!(plane.intersect(&diag).unwrap(), diag);
        assert_eq!(diag.intersect(&diag).unwrap(), diag);
        assert!(diag.intersect(&Subspace::zero(Q, 2)).unwrap().is_zero());
        // dimension formula: 2 + 1 - 2 = 1
        assert_eq!(plane.intersect(&diag).unwrap().dim(), 2 + 1 - plane.sum(&diag).dim());
        assert!(matches!(
            plane.intersect(&Subspace::zero(Q, 3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn quotient_map_examples() {
        let (m, d) = quotient_map(3, &Subspace::zero(Q, 3)).unwrap();
        assert_eq!((m.clone(), d), (Matrix::identity(Q, 3), 3));
        let (m, d) = quotient_map(3, &Subspace::full(Q, 3)).unwrap();
        assert_eq!((m.rows(), d), (0, 0));
        let w = Subspace::from_vectors(Q, 3, vec![unit_vec(Q, 3, 0)]);
        let (m, d) = quotient_map(3, &w).unwrap();
        assert_eq!(d, 2);
        assert_eq!(nullspace(&m), w);
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(3);
        assert_eq!(&a * &a.inv().unwrap(), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert!(Field::prime(9).is_err());
        assert!(f.zero().inv().is_err());
        assert_eq!("Fp:7".parse::<Field>().unwrap(), f);
        assert_eq!("Q".parse::<Field>().unwrap(), Q);
    }

    #[test]
    fn matrix_inverse() {
        let m = Matrix::from_ints(Q, &[vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(Q, 2));
        assert!(Matrix::from_ints(Q, &[vec![1, 2], vec![2, 4]]).inverse().is_none());
        assert_eq!(Matrix::zeros(Q, 0, 0).inverse().unwrap().rows(), 0);
    }

    #[test]
    fn rational_inverse_of_zero_errors() {
        assert!(matches!(Q.zero().inv(), Err(Error::DivisionByZero)));
        assert_eq!(rational(2, 4), rational(1, 2));
    }
}
