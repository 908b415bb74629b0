use num_complex::Complex64;
use proptest::prelude::*;
use scaled_hypercomplex::action::{act, singular_directions, RealMatrix2, SingularLine};
use scaled_hypercomplex::hyperbolic::{exp_jt, polar_decompose, Hyperbolic};
use scaled_hypercomplex::operators::MulOperator;
use scaled_hypercomplex::realization::{realize, unrealize};
use scaled_hypercomplex::spectral::spectrum;
use scaled_hypercomplex::{Hypercomplex, Scale};

fn scale() -> impl Strategy<Value = Scale> {
    prop_oneof![
        Just(0.0),
        -3.0..3.0f64,
        prop::sample::select(vec![-2.0, -1.0, -0.5, 0.5, 1.0, 3.0]),
    ]
    .prop_map(|t| Scale::new(t).unwrap())
}

fn coord() -> impl Strategy<Value = f64> {
    -4.0..4.0f64
}

fn element(t: Scale) -> impl Strategy<Value = Hypercomplex> {
    [coord(), coord(), coord(), coord()].prop_map(move |c| Hypercomplex::from_coords(c, t))
}

fn with_elements(n: usize) -> impl Strategy<Value = (Scale, Vec<Hypercomplex>)> {
    scale().prop_flat_map(move |t| (Just(t), prop::collection::vec(element(t), n)))
}

fn close(p: &Hypercomplex, q: &Hypercomplex, tol: f64) -> bool {
    let mag = 1.0 + p.frobenius_sq().sqrt().max(q.frobenius_sq().sqrt());
    p.coords()
        .iter()
        .zip(q.coords())
        .all(|(x, y)| (x - y).abs() <= tol * mag)
}

fn same_pair(p: (Complex64, Complex64), q: (Complex64, Complex64), tol: f64) -> bool {
    let direct = (p.0 - q.0).norm().max((p.1 - q.1).norm());
    let swapped = (p.0 - q.1).norm().max((p.1 - q.0).norm());
    direct.min(swapped) <= tol
}

proptest! {
    #[test]
    fn ring_axioms((_, hs) in with_elements(3)) {
        let (h1, h2, h3) = (&hs[0], &hs[1], &hs[2]);
        let left = h1.mul(h2).unwrap().mul(h3).unwrap();
        let right = h1.mul(&h2.mul(h3).unwrap()).unwrap();
        prop_assert!(close(&left, &right, 1e-12));

        let dist_l = h1.mul(&h2.add(h3).unwrap()).unwrap();
        let dist_r = h1.mul(h2).unwrap().add(&h1.mul(h3).unwrap()).unwrap();
        prop_assert!(close(&dist_l, &dist_r, 1e-12));

        let one = Hypercomplex::one(h1.scale());
        prop_assert_eq!(one.mul(h1).unwrap(), *h1);
        prop_assert_eq!(h1.mul(&one).unwrap(), *h1);
        prop_assert_eq!(h1.add(h2).unwrap(), h2.add(h1).unwrap());
    }

    #[test]
    fn realization_is_homomorphism((t, hs) in with_elements(2)) {
        let (h1, h2) = (&hs[0], &hs[1]);
        let lhs = realize(&h1.mul(h2).unwrap());
        let rhs = realize(h1) * realize(h2);
        let mag = realize(h1).max_abs_entry() * realize(h2).max_abs_entry();
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12 * mag.max(1.0));
        prop_assert_eq!(unrealize(&realize(h1), t).unwrap(), *h1);
        prop_assert!((realize(h1).det().re - h1.det()).abs() <= 1e-12 * (1.0 + h1.frobenius_sq()));
    }

    #[test]
    fn conjugation_laws((_, hs) in with_elements(2)) {
        let (h1, h2) = (&hs[0], &hs[1]);
        prop_assert_eq!(h1.conjugate().conjugate(), *h1);
        let lhs = h1.mul(h2).unwrap().conjugate();
        let rhs = h2.conjugate().mul(&h1.conjugate()).unwrap();
        prop_assert!(close(&lhs, &rhs, 1e-12));
        let sum = h1.add(h2).unwrap().conjugate();
        prop_assert!(close(&sum, &h1.conjugate().add(&h2.conjugate()).unwrap(), 1e-15));
        prop_assert_eq!(realize(&h1.conjugate()), realize(h1).adjugate());
    }

    #[test]
    fn form_identities((_, hs) in with_elements(3), r in -3.0..3.0f64) {
        let (h1, h2, h3) = (&hs[0], &hs[1], &hs[2]);
        prop_assert!((h1.form(h1).unwrap() - h1.det()).abs() <= 1e-12 * (1.0 + h1.frobenius_sq()));
        prop_assert_eq!(h1.form(h2).unwrap(), h2.form(h1).unwrap());
        let lhs = h1.add(h2).unwrap().form(h3).unwrap();
        let rhs = h1.form(h3).unwrap() + h2.form(h3).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * 100.0);
        let scaled = h1.scale_by(r).form(h2).unwrap();
        prop_assert!((scaled - r * h1.form(h2).unwrap()).abs() <= 1e-12 * 300.0);
    }

    #[test]
    fn seminorm_is_multiplicative((_, hs) in with_elements(2)) {
        let (h1, h2) = (&hs[0], &hs[1]);
        let prod = h1.mul(h2).unwrap().seminorm();
        let expect = h1.seminorm() * h2.seminorm();
        let mag = (h1.frobenius_sq() * h2.frobenius_sq()).sqrt();
        // Compare squares: the square root magnifies absolute error near the null cone.
        prop_assert!((prod * prod - expect * expect).abs() <= 1e-12 * (1.0 + mag * mag));
    }

    #[test]
    fn inverse_off_null_cone((t, hs) in with_elements(1)) {
        let h = &hs[0];
        prop_assume!(h.det().abs() >= 1e-3 * h.frobenius_sq());
        let inv = h.inverse().unwrap();
        prop_assert!(close(&h.mul(&inv).unwrap(), &Hypercomplex::one(t), 1e-10));
        prop_assert!(close(&inv.mul(h).unwrap(), &Hypercomplex::one(t), 1e-10));
    }

    #[test]
    fn spectrum_matches_eigenvalues((_, hs) in with_elements(1)) {
        let h = &hs[0];
        let mag = 1.0 + h.frobenius_sq().sqrt();
        prop_assert!(same_pair(spectrum(h), realize(h).eigenvalues(), 1e-10 * mag));
    }

    #[test]
    fn operators_are_normal_with_adjoint_laws((_, hs) in with_elements(2)) {
        let m = MulOperator::new(hs[0]);
        let n = MulOperator::new(hs[1]);
        prop_assert!(m.commutator_norm() <= 1e-12 * m.matrix4().norm_squared().max(1.0));
        prop_assert_eq!(m.adjoint().adjoint(), m.clone());
        let lhs = m.compose(&n).unwrap().adjoint();
        let rhs = n.adjoint().matrix4() * m.adjoint().matrix4();
        prop_assert!((lhs.matrix4() - rhs).norm() <= 1e-12 * 100.0);
    }

    #[test]
    fn exponential_group_law(t in scale(), a in -1.5..1.5f64, b in -1.5..1.5f64) {
        let theta = |x: f64| x / t.sqrt_abs().max(1.0);
        let lhs = exp_jt(theta(a), t).mul(&exp_jt(theta(b), t)).unwrap();
        let rhs = exp_jt(theta(a) + theta(b), t);
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12 * (1.0 + rhs.x.abs().max(rhs.y.abs())));
    }

    #[test]
    fn polar_round_trip(t in scale(), x in coord(), y in coord()) {
        let w = Hyperbolic::new(x, y, t);
        prop_assume!(w.det().abs() >= 1e-3 * (x * x + y * y));
        let p = polar_decompose(&w).unwrap();
        prop_assert!(p.recompose().max_abs_diff(&w) <= 1e-10 * (1.0 + x.abs().max(y.abs())));
    }

    #[test]
    fn action_is_linear(
        t in scale(),
        m in [coord(), coord(), coord(), coord()],
        w1 in (coord(), coord()),
        w2 in (coord(), coord()),
    ) {
        let a = RealMatrix2::from_rows(m[0], m[1], m[2], m[3]).unwrap();
        let p = Hyperbolic::new(w1.0, w1.1, t);
        let q = Hyperbolic::new(w2.0, w2.1, t);
        let lhs = act(&a, &p.add(&q).unwrap());
        let rhs = act(&a, &p).add(&act(&a, &q)).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-13 * 100.0);
    }

    #[test]
    fn singular_lines_hit_null_cone(
        t in 0.0..5.0f64,
        m in [coord(), coord(), coord(), coord()],
        x in -2.0..2.0f64,
    ) {
        let t = Scale::new(t).unwrap();
        let a = RealMatrix2::from_rows(m[0], m[1], m[2], m[3]).unwrap();
        for line in singular_directions(&a, t).lines {
            let w = match line {
                SingularLine::SlopeThroughOrigin(s) => {
                    prop_assume!(s.abs() <= 1e4);
                    Hyperbolic::new(x, s * x, t)
                }
                SingularLine::VerticalAxis => Hyperbolic::new(0.0, x, t),
            };
            let img = act(&a, &w);
            let mag = 1.0 + img.x * img.x + t.value() * img.y * img.y;
            prop_assert!(img.det().abs() <= 1e-9 * mag);
        }
    }
}
