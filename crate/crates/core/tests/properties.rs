use num_complex::Complex64 as C64;
use proptest::prelude::*;
use tlt_core::majorana::{majorana_charging, sector_splitting};
use tlt_core::numerics::{eigh, eigvalsh, kron, pauli_decompose, pauli_reconstruct};
use tlt_core::{
    CircuitParams, ComplexMatrix, ConfigLabel, CouplingEngine, GapInput, HermitianOperator, MajoranaAlgebra,
    MajoranaConfig, ParitySector,
};

fn hermitian(dim: usize) -> impl Strategy<Value = HermitianOperator> {
    prop::collection::vec(-1.0..1.0f64, dim * dim).prop_map(move |v| {
        let m = ComplexMatrix::from_fn(dim, dim, |i, j| {
            let (a, b) = (i.min(j), i.max(j));
            let re = v[a * dim + b];
            let im = if i == j { 0.0 } else { v[b * dim + a] };
            if i <= j {
                C64::new(re, im)
            } else {
                C64::new(re, -im)
            }
        });
        HermitianOperator::new(m).unwrap()
    })
}

fn sized_hermitian() -> impl Strategy<Value = HermitianOperator> {
    (1usize..=8).prop_flat_map(hermitian)
}

fn det(m: &ComplexMatrix) -> C64 {
    let n = m.rows();
    if n == 1 {
        return m[(0, 0)];
    }
    (0..n)
        .map(|j| {
            let minor = ComplexMatrix::from_fn(n - 1, n - 1, |r, c| m[(r + 1, if c < j { c } else { c + 1 })]);
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            m[(0, j)] * det(&minor) * sign
        })
        .sum()
}

proptest! {
    #[test]
    fn eigh_residual_and_orthonormality(h in sized_hermitian()) {
        let e = eigh(&h).unwrap();
        let scale = h.max_norm().max(1.0);
        prop_assert!(e.residual(h.matrix()) <= 1e-10 * scale);
        prop_assert!(e.orthonormality_error() <= 1e-10);
        prop_assert!(e.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn trace_is_eigenvalue_sum(h in sized_hermitian()) {
        let ev = eigvalsh(&h).unwrap();
        prop_assert!((h.trace().re - ev.iter().sum::<f64>()).abs() <= 1e-10);
    }

    #[test]
    fn determinant_is_eigenvalue_product(h in (1usize..=4).prop_flat_map(hermitian)) {
        let ev = eigvalsh(&h).unwrap();
        let d = det(h.matrix());
        prop_assert!(d.im.abs() <= 1e-10);
        prop_assert!((d.re - ev.iter().product::<f64>()).abs() <= 1e-10);
    }

    #[test]
    fn hermitian_operations_stay_hermitian(a in hermitian(3), b in hermitian(3), s in -5.0..5.0f64) {
        for m in [a.plus(&b).unwrap(), a.scale(s), a.square(), a.kron(&b), a.jordan_product(&b).unwrap()] {
            prop_assert!(tlt_core::numerics::hermitian_deviation(m.matrix()) <= 1e-12);
        }
    }

    #[test]
    fn operator_function_matches_spectrum(h in hermitian(5)) {
        let e = eigh(&h).unwrap();
        let f = h.apply_fn(|x| x.exp()).unwrap();
        let fv = eigvalsh(&f).unwrap();
        for (x, y) in e.eigenvalues.iter().zip(&fv) {
            prop_assert!((x.exp() - y).abs() <= 1e-10 * y.abs().max(1.0));
        }
    }

    #[test]
    fn pauli_expansion_round_trips(h in hermitian(4)) {
        let terms = pauli_decompose(h.matrix(), 2).unwrap();
        prop_assert_eq!(terms.len(), 16);
        let back = pauli_reconstruct(&terms);
        prop_assert!(back.max_abs_diff(h.matrix()) <= 1e-10);
    }

    #[test]
    fn kron_mixed_product(a in hermitian(2), b in hermitian(3), c in hermitian(2), d in hermitian(3)) {
        let lhs = &kron(a.matrix(), b.matrix()) * &kron(c.matrix(), d.matrix());
        let rhs = kron(&(a.matrix() * c.matrix()), &(b.matrix() * d.matrix()));
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
    }

    #[test]
    fn bilinears_square_to_identity(i in 1usize..=4, j in 1usize..=4) {
        prop_assume!(i != j);
        let alg = MajoranaAlgebra::default();
        let b = alg.bilinear(i, j).unwrap();
        prop_assert!(b.square().matrix().max_abs_diff(&ComplexMatrix::identity(4)) == 0.0);
        prop_assert!(b.matrix().commutator(alg.parity().matrix()).unwrap().max_norm() == 0.0);
    }

    #[test]
    fn island_swap_symmetry(ng_a in -1.0..1.0f64, ng_b in -1.0..1.0f64) {
        let s = CircuitParams::default().derive_scales().unwrap();
        let cfg = MajoranaConfig::new(ConfigLabel::B);
        let alg = MajoranaAlgebra::default();
        let fwd = eigvalsh(&majorana_charging(&cfg, &alg, &s, ng_a, ng_b).unwrap()).unwrap();
        let rev = eigvalsh(&majorana_charging(&cfg, &alg, &s, ng_b, ng_a).unwrap()).unwrap();
        for (x, y) in fwd.iter().zip(&rev) {
            prop_assert!((x - y).abs() <= 1e-12);
        }
    }

    #[test]
    fn even_sector_splitting_is_symmetric_about_half(ng in -0.5..0.5f64) {
        let s = CircuitParams::default().derive_scales().unwrap();
        let cfg = MajoranaConfig::new(ConfigLabel::A);
        let alg = MajoranaAlgebra::default();
        // Reflection about 1/2 maps the even sector onto itself (m_a ∈ {0, 2}).
        let h1 = majorana_charging(&cfg, &alg, &s, 0.5 + ng, 0.0).unwrap();
        let h2 = majorana_charging(&cfg, &alg, &s, 0.5 - ng, 0.0).unwrap();
        let d = sector_splitting(&h1, ParitySector::Even).unwrap() - sector_splitting(&h2, ParitySector::Even).unwrap();
        prop_assert!(d.abs() <= 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

    #[test]
    fn harmonic_oracle_for_random_circuits(
        l in 3.0..6.0f64, c in 80.0..150.0f64, cq in 40.0..100.0f64, ejq in 5.0..15.0f64, gap in 10.0..30.0f64,
        cutoff in 2usize..=5,
    ) {
        let p = CircuitParams {
            inductance_nh: l,
            capacitance_ff: c,
            qubit_capacitance_ff: cq,
            ejq_ghz: ejq,
            gap: GapInput::Ghz(gap),
            ..CircuitParams::default()
        };
        let engine = CouplingEngine::harmonic(p.derive_scales().unwrap(), cutoff);
        for table in 1..=3 {
            for r in engine.table(table).unwrap().unwrap() {
                prop_assert!((r.ratio.unwrap() - 1.0).abs() <= 1e-9, "{:?}", r);
                prop_assert!(!r.flagged);
            }
        }
    }
}
