use num_complex::Complex64 as C64;
use pha_core::coherent::{
    a_norm_squared, build_cs, eigen_residual, evolve, evolve_coefficients, ladder_norm_sqr, statistics,
    triangle_decompose, CoherentSpec,
};
use pha_core::fock::{build_annihilation, build_creation, build_deformed_ladders, build_hamiltonian, commutator, LadderIndex};
use pha_core::painleve::{piv_parameters_exact, ExtremalSeed, ParameterSign};
use pha_core::wavepacket::{FockPacket, GaussianPacket, DEFORMED_PERIOD};
use proptest::prelude::*;

fn ladder() -> impl Strategy<Value = LadderIndex> {
    (0u8..3).prop_map(|j| LadderIndex::coherent(j).unwrap())
}

fn disk(max: f64) -> impl Strategy<Value = C64> {
    (0.0..max, 0.0..std::f64::consts::TAU).prop_map(|(r, th)| C64::from_polar(r, th))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn deformed_ladders_are_cubes_and_adjoints(n in 4usize..40) {
        let a = build_annihilation(n).unwrap();
        let (ag, agp) = build_deformed_ladders(n).unwrap();
        let cube = a.matmul(&a).unwrap().matmul(&a).unwrap();
        prop_assert!(ag.sub(&cube).unwrap().max_abs() < 1e-12 * ag.max_abs());
        let (adj, ad) = (ag.adjoint(), build_creation(n).unwrap());
        prop_assert!(agp.sub(&adj).unwrap().max_abs() == 0.0);
        prop_assert!(ad.sub(&a.adjoint()).unwrap().max_abs() == 0.0);
    }

    #[test]
    fn hamiltonian_lowers_energy_by_three(n in 8usize..48) {
        let h = build_hamiltonian(n).unwrap();
        let (ag, _) = build_deformed_ladders(n).unwrap();
        let c = commutator(&h, &ag).unwrap().add(&ag.scaled(C64::new(3.0, 0.0))).unwrap();
        prop_assert!(c.interior_max_abs(c.interior_limit()) < 1e-12 * ag.max_abs());
    }

    #[test]
    fn coherent_states_are_normalized_eigenvectors(l in ladder(), alpha in disk(5.0)) {
        let spec = CoherentSpec::new(l, alpha).unwrap();
        let v = build_cs(&spec).unwrap();
        prop_assert!((v.norm() - 1.0).abs() < 1e-13);
        prop_assert!(v.is_on_ladder(l));
        prop_assert!(eigen_residual(&spec).unwrap() < 1e-10);
    }

    #[test]
    fn statistics_chain(l in ladder(), alpha in disk(5.0)) {
        let s = statistics(&CoherentSpec::new(l, alpha).unwrap()).unwrap();
        prop_assert!(s.mean_x.abs() < 1e-12 && s.mean_p.abs() < 1e-12);
        let closed = a_norm_squared(l, alpha.norm());
        prop_assert!((s.mean_number - closed).abs() <= 1e-10 * closed.max(1.0));
        prop_assert!((s.uncertainty_product - closed - 0.5).abs() <= 1e-10 * closed.max(1.0));
        prop_assert!(s.uncertainty_product >= l.coherent_label() as f64 + 0.5 - 1e-12);
    }

    #[test]
    fn uncertainty_grows_with_amplitude(l in ladder(), r in 0.0..4.0f64, dr in 0.01..1.0f64) {
        prop_assert!(a_norm_squared(l, r + dr) >= a_norm_squared(l, r));
    }

    #[test]
    fn evolution_stays_on_the_orbit(l in ladder(), alpha in disk(3.0), t in -10.0..10.0f64) {
        let spec = CoherentSpec::new(l, alpha).unwrap();
        let direct = evolve_coefficients(&build_cs(&spec).unwrap(), t);
        let (phase, moved) = evolve(&spec, t);
        prop_assert!((moved.alpha.norm() - alpha.norm()).abs() < 1e-14 * (1.0 + alpha.norm()));
        let rebuilt = build_cs(&moved).unwrap().scaled(phase);
        prop_assert!(direct.max_abs_diff(&rebuilt).unwrap() < 1e-12);
    }

    #[test]
    fn triangle_reconstructs_and_partitions(l in ladder(), z in disk(3.0)) {
        let rows = triangle_decompose(z, l).report(48);
        prop_assert!(rows.iter().all(|r| r.abs_error < 1e-12));
        let total: f64 = LadderIndex::ALL.iter().map(|k| ladder_norm_sqr(z, *k)).sum();
        prop_assert!((total / z.norm_sqr().exp() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn density_paths_agree(l in ladder(), z in disk(2.5).prop_filter("nonzero", |z| z.norm() > 0.05), x in -6.0..6.0f64, t in 0.0..7.0f64) {
        let f = FockPacket::new(l, z).unwrap().density(x, t).unwrap();
        let g = GaussianPacket::new(l, z).unwrap().density(x, t);
        prop_assert!(f >= 0.0 && g >= 0.0);
        prop_assert!((f - g).abs() < 1e-8);
    }

    #[test]
    fn density_has_deformed_period(l in ladder(), z in disk(2.5).prop_filter("nonzero", |z| z.norm() > 0.05), x in -6.0..6.0f64, t in 0.0..7.0f64) {
        let p = GaussianPacket::new(l, z).unwrap();
        prop_assert!((p.density(x, t + DEFORMED_PERIOD) - p.density(x, t)).abs() < 1e-10);
        // half a period reflects space
        prop_assert!((p.density(x, t + DEFORMED_PERIOD / 2.0) - p.density(-x, t)).abs() < 1e-10);
    }

    #[test]
    fn time_translation_matches_label_rotation(l in ladder(), z in disk(2.0).prop_filter("nonzero", |z| z.norm() > 0.05), x in -5.0..5.0f64, t in 0.0..3.0f64, s in 0.0..3.0f64) {
        let moved = GaussianPacket::new(l, z * C64::from_polar(1.0, -s)).unwrap();
        let here = GaussianPacket::new(l, z).unwrap();
        prop_assert!((here.density(x, t + s) - moved.density(x, t)).abs() < 1e-10);
    }
}

#[test]
fn exchanging_the_tail_keeps_b() {
    for seed in ExtremalSeed::standard() {
        let (_, b) = piv_parameters_exact(&seed, ParameterSign::Consistent);
        let (_, b2) = piv_parameters_exact(&seed.swapped_tail(), ParameterSign::Consistent);
        assert_eq!(b, b2);
    }
}
