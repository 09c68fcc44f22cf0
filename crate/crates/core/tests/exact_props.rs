use adr_core::exact::{nullspace, quotient_map, rref, Field, Matrix, Subspace};
use proptest::prelude::*;

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rationals), Just(Field::prime(7).unwrap())]
}

fn matrix(max: usize) -> impl Strategy<Value = (Field, Vec<Vec<i64>>)> {
    (fields(), 1..=max, 1..=max).prop_flat_map(|(f, r, c)| {
        (Just(f), prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
    })
}

fn build(field: Field, rows: &[Vec<i64>]) -> Matrix {
    Matrix::from_ints(field, rows)
}

/// Row-space membership by Gaussian elimination on a copy, written out
/// directly rather than through `Subspace`.
fn in_row_space(field: Field, basis: &Matrix, v: &[adr_core::exact::Scalar]) -> bool {
    let mut rows = basis.row_vecs();
    rows.push(v.to_vec());
    let before = basis.rank();
    Matrix::from_rows(field, basis.cols(), rows).rank() == before
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent((f, rows) in matrix(6)) {
        let m = build(f, &rows);
        let r = rref(&m);
        prop_assert_eq!(rref(&r), r.clone());
        prop_assert_eq!(r.rows(), m.rank());
    }

    #[test]
    fn rank_nullity((f, rows) in matrix(6)) {
        let m = build(f, &rows);
        let k = nullspace(&m);
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
        for v in k.vectors() {
            prop_assert!(m.apply(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn quotient_map_kills_the_subspace((f, rows) in matrix(6)) {
        let m = build(f, &rows);
        let w = Subspace::row_space(&m);
        let (q, d) = quotient_map(m.cols(), &w).unwrap();
        prop_assert_eq!(d, m.cols() - w.dim());
        prop_assert_eq!(q.rank(), d);
        for v in w.vectors() {
            prop_assert!(q.apply(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn spanning_sets_give_equal_subspaces((f, rows) in matrix(5), mix in prop::collection::vec(-2i64..=2, 25)) {
        let m = build(f, &rows);
        let u = Subspace::row_space(&m);
        // add random combinations of the rows and reverse their order
        let mut spanning = m.row_vecs();
        for r in 0..m.rows() {
            let coeffs: Vec<_> = (0..m.rows()).map(|k| f.from_i64(mix[(r * 5 + k) % mix.len()])).collect();
            let mut v = vec![f.zero(); m.cols()];
            for (c, row) in coeffs.iter().zip(m.row_vecs()) {
                for (x, y) in v.iter_mut().zip(&row) {
                    *x = &*x + &(c * y);
                }
            }
            spanning.push(v);
        }
        spanning.reverse();
        let v = Subspace::from_vectors(f, m.cols(), spanning);
        prop_assert_eq!(&u, &v);
        for x in u.vectors() {
            prop_assert!(in_row_space(f, &m, &x));
        }
    }

    #[test]
    fn inverse_is_two_sided((f, rows) in matrix(5)) {
        let n = rows.len().min(rows[0].len());
        let square: Vec<Vec<i64>> = rows.iter().take(n).map(|r| r[..n].to_vec()).collect();
        let m = build(f, &square);
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv), Matrix::identity(f, n));
                prop_assert_eq!(inv.mul(&m), Matrix::identity(f, n));
            }
            None => prop_assert!(m.rank() < n),
        }
    }

    #[test]
    fn intersection_and_sum_dimensions((f, a) in matrix(5), b in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..4)) {
        let cols = a[0].len();
        let b: Vec<Vec<i64>> = b.into_iter().map(|r| r[..cols].to_vec()).collect();
        let u = Subspace::row_space(&build(f, &a));
        let v = Subspace::row_space(&build(f, &b));
        let meet = u.intersect(&v).unwrap();
        prop_assert_eq!(u.dim() + v.dim(), u.sum(&v).dim() + meet.dim());
        prop_assert!(u.contains_subspace(&meet) && v.contains_subspace(&meet));
    }

    #[test]
    fn prime_field_inverses(x in 1i64..1000) {
        let f = Field::prime(101).unwrap();
        let s = f.from_i64(x);
        if !s.is_zero() {
            prop_assert!((&s * &s.inv().unwrap()).is_one());
        }
    }
}
