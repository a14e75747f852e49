use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rootgeo::group::sample_element;
use rootgeo::report::sample_rng;
use rootgeo::{Derivation, FieldElem, FieldSpec, Matrix};

const FIELDS: [&str; 4] = ["fp(t):5", "q(t)", "fp:7", "q"];

fn field(i: usize) -> FieldSpec {
    FIELDS[i % FIELDS.len()].parse().unwrap()
}

fn elems(f: FieldSpec, seed: u64, k: usize) -> Vec<FieldElem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..k).map(|_| f.sample(&mut rng, 2)).collect()
}

fn matrix(f: FieldSpec, rows: usize, cols: usize, seed: u64, sparse: bool) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries: Vec<Vec<FieldElem>> = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    if sparse && rand::Rng::random_bool(&mut rng, 0.5) {
                        f.zero()
                    } else {
                        f.sample(&mut rng, 1)
                    }
                })
                .collect()
        })
        .collect();
    Matrix::from_rows(f, entries).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(fi in 0usize..4, seed in any::<u64>()) {
        let f = field(fi);
        let v = elems(f, seed, 3);
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        let ab = a.checked_add(b).unwrap();
        prop_assert_eq!(&ab, &b.checked_add(a).unwrap());
        prop_assert_eq!(
            ab.checked_add(c).unwrap(),
            a.checked_add(&b.checked_add(c).unwrap()).unwrap()
        );
        let bc = b.checked_mul(c).unwrap();
        prop_assert_eq!(a.checked_mul(&bc).unwrap(), a.checked_mul(b).unwrap().checked_mul(c).unwrap());
        prop_assert_eq!(
            a.checked_mul(&b.checked_add(c).unwrap()).unwrap(),
            a.checked_mul(b).unwrap().checked_add(&a.checked_mul(c).unwrap()).unwrap()
        );
        prop_assert!(a.checked_sub(a).unwrap().is_zero());
        prop_assert!(a.checked_add(&a.neg_ref()).unwrap().is_zero());
        if !a.is_zero() {
            prop_assert!(a.checked_mul(&a.inv().unwrap()).unwrap().is_one());
            prop_assert_eq!(bc.checked_div(a).unwrap().checked_mul(a).unwrap(), bc);
        }
    }

    #[test]
    fn leibniz_rule(fi in 0usize..2, seed in any::<u64>()) {
        let f = field(fi);
        let v = elems(f, seed, 2);
        let (a, b) = (&v[0], &v[1]);
        let d = |x: &FieldElem| x.derive(0).unwrap();
        let lhs = d(&a.checked_mul(b).unwrap());
        let rhs = d(a).checked_mul(b).unwrap().checked_add(&a.checked_mul(&d(b)).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(d(&a.checked_add(b).unwrap()), d(a).checked_add(&d(b)).unwrap());
        prop_assert!(d(&f.from_i64(seed as i64 % 97)).is_zero());
    }

    #[test]
    fn derivation_combinations_obey_leibniz(fi in 0usize..2, seed in any::<u64>()) {
        let f = field(fi);
        let v = elems(f, seed, 3);
        let d = Derivation::basis(f, 0).unwrap().scale(&v[2]);
        let lhs = d.apply(&v[0].checked_mul(&v[1]).unwrap());
        let rhs = d.apply(&v[0]).checked_mul(&v[1]).unwrap()
            .checked_add(&v[0].checked_mul(&d.apply(&v[1])).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_parse_round_trip(fi in 0usize..4, seed in any::<u64>()) {
        let f = field(fi);
        for x in elems(f, seed, 2) {
            prop_assert_eq!(f.parse_elem(&x.to_string()).unwrap(), x);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_plus_nullity(fi in 0usize..4, rows in 1usize..6, cols in 1usize..6, seed in any::<u64>()) {
        let f = field(fi);
        let m = matrix(f, rows, cols, seed, true);
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.dim(), cols);
        for v in kernel.basis() {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(FieldElem::is_zero));
        }
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn trace_is_symmetric(fi in 0usize..4, k in 1usize..5, seed in any::<u64>()) {
        let f = field(fi);
        let x = matrix(f, k, k, seed, false);
        let y = matrix(f, k, k, seed.wrapping_add(1), false);
        prop_assert_eq!(x.mul(&y).unwrap().trace().unwrap(), y.mul(&x).unwrap().trace().unwrap());
        prop_assert_eq!(x.trace_of_product(&y).unwrap(), x.mul(&y).unwrap().trace().unwrap());
    }

    #[test]
    fn matrix_text_round_trip(fi in 0usize..4, seed in any::<u64>()) {
        let f = field(fi);
        let m = matrix(f, 3, 2, seed, true);
        prop_assert_eq!(Matrix::from_text(f, &m.to_text()).unwrap(), m);
    }

    #[test]
    fn sampled_elements_have_determinant_one(fi in 0usize..4, n in 1usize..4, seed in any::<u64>()) {
        let f = field(fi);
        let mut rng = sample_rng(seed, 0);
        let g = sample_element(f, n, &mut rng, 3, 2).unwrap();
        prop_assert!(g.matrix().determinant().unwrap().is_one());
        prop_assert!(g.matrix().mul(g.inverse_matrix()).unwrap() == Matrix::identity(f, n + 1));
    }
}

#[test]
fn sampler_is_deterministic() {
    let f: FieldSpec = "fp(t):5".parse().unwrap();
    let a = sample_element(f, 2, &mut sample_rng(9, 4), 3, 2).unwrap();
    let b = sample_element(f, 2, &mut sample_rng(9, 4), 3, 2).unwrap();
    assert_eq!(a, b);
}

#[test]
fn sampler_regression_pin() {
    let f: FieldSpec = "fp:5".parse().unwrap();
    let g = sample_element(f, 2, &mut sample_rng(42, 0), 3, 2).unwrap();
    assert_eq!(g.matrix().to_text(), "3 0 4\n0 1 0\n3 0 1\n");
}
