use proptest::prelude::*;
use uca_defocus::arraymodel::{generate_channel, steering_uca, steering_ula};
use uca_defocus::cxlinalg::vec_norm;
use uca_defocus::{ChannelCfg, Grid, Uca, Ula};

const TAU: f64 = std::f64::consts::TAU;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn uca_entries_have_constant_modulus(
        n in 1usize..300,
        radius in 0.01f64..1.0,
        f in 1e9f64..1e11,
        phi in -10.0f64..10.0,
    ) {
        let g = Uca::new(n, radius).unwrap();
        let a = steering_uca(&g, f, phi).unwrap();
        let expect = 1.0 / (n as f64).sqrt();
        for z in &a {
            prop_assert!((z.norm() - expect).abs() <= 1e-12);
        }
    }

    #[test]
    fn uca_rotation_is_cyclic_shift(n in 2usize..300, f in 1e9f64..1e11, phi in 0.0f64..TAU) {
        let g = Uca::half_wavelength(n, 30e9).unwrap();
        let a = g.steering(f, phi);
        let b = g.steering(f, phi + TAU / n as f64);
        for i in 0..n {
            let prev = (i + n - 1) % n;
            prop_assert!((b[i] - a[prev]).norm() <= 1e-9, "i = {}", i);
        }
    }

    #[test]
    fn ula_entries_have_constant_modulus(n in 1usize..64, f in 1e9f64..1e11, phi in -1.6f64..1.6) {
        let g = Ula::half_wavelength(n, 30e9).unwrap();
        let a = steering_ula(&g, f, phi).unwrap();
        for z in &a {
            prop_assert!((z.norm() - 1.0 / (n as f64).sqrt()).abs() <= 1e-12);
        }
    }
}

#[test]
fn unit_norm_for_many_angles() {
    let g = Uca::half_wavelength(256, 30e9).unwrap();
    for i in 0..100 {
        let phi = (i as f64 * 0.618_033_988_75 * TAU) % TAU;
        assert!((vec_norm(&g.steering(30e9, phi)) - 1.0).abs() < 1e-12);
    }
}

#[test]
fn channel_is_reproducible_across_configs() {
    let tx = Uca::half_wavelength(256, 30e9).unwrap();
    let rx = Ula::half_wavelength(4, 30e9).unwrap();
    let grid = Grid::new(30e9, 3e9, 16).unwrap();
    let cfg = ChannelCfg::default();
    let a = generate_channel(&cfg, &tx, &rx, &grid, 77).unwrap();
    let b = generate_channel(&cfg, &tx, &rx, &grid, 77).unwrap();
    for m in [0, 7, 15] {
        assert_eq!(a.channel_matrix(m).unwrap(), b.channel_matrix(m).unwrap());
    }
    // The path draws are independent of the grid the matrices live on.
    let other = Grid::new(28e9, 1e9, 4).unwrap();
    let c = generate_channel(&cfg, &tx, &rx, &other, 77).unwrap();
    assert_eq!(a.paths(), c.paths());
}
